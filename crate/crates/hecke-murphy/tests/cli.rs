use std::path::PathBuf;
use std::process::{Command, Output};

fn hecke() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hecke"));
    c.env_remove("HECKE_SEED");
    c
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hecke-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn config(text: &str, name: &str) -> PathBuf {
    let p = scratch(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn report_seed(path: &PathBuf) -> u64 {
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    v["config"]["seed"].as_u64().unwrap()
}

#[test]
fn suite_writes_a_report_and_honours_seed_precedence() {
    let cfg = config("sites = 2\nspecializations = 1\nseed = 4\nsuites = [\"crossing\"]", "seed.toml");
    let out = scratch("seed.json");

    let o = hecke().args(["suite", "--config"]).arg(&cfg).arg("--out").arg(&out).output().unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("PASS crossing"));
    assert_eq!(report_seed(&out), 4);

    let o = hecke().env("HECKE_SEED", "9").args(["suite", "--config"]).arg(&cfg).arg("--out").arg(&out).output().unwrap();
    assert!(o.status.success());
    assert_eq!(report_seed(&out), 9);

    let o = hecke()
        .env("HECKE_SEED", "9")
        .args(["suite", "--seed", "12", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(report_seed(&out), 12);
}

#[test]
fn json_configs_are_accepted() {
    let cfg = config(r#"{"sites": 2, "specializations": 1, "suites": ["unitarity"]}"#, "run.json");
    let out = scratch("run-json.json");
    let o = hecke().args(["suite", "--config"]).arg(&cfg).arg("--out").arg(&out).output().unwrap();
    assert!(o.status.success());
}

#[test]
fn bad_configs_exit_with_two() {
    let cfg = config("[overrides]\nq = \"1/0\"", "bad.toml");
    let o = hecke().args(["suite", "--config"]).arg(&cfg).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("config"));
}

#[test]
fn murphy_command_for_each_family() {
    for (family, n) in [("A", "3"), ("B", "3"), ("C", "2")] {
        let o = hecke().args(["murphy", "--family", family, "--n", n]).output().unwrap();
        assert!(o.status.success(), "{family}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = hecke().args(["murphy", "--family", "C", "--n", "2"]).output().unwrap();
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS prop2/")).count(), 4);
    let o = hecke().args(["murphy", "--family", "D", "--n", "2"]).output().unwrap();
    assert!(!o.status.success());
}

#[test]
fn dump_writes_sorted_entries() {
    for object in ["t_minus", "t_plus", "t_open"] {
        let out = scratch(&format!("{object}.json"));
        let o = hecke().args(["dump", "--object", object, "--out"]).arg(&out).output().unwrap();
        assert!(o.status.success(), "{object}");
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(v["dim"], 4);
        let positions: Vec<(u64, u64)> = v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| (e[0].as_u64().unwrap(), e[1].as_u64().unwrap()))
            .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        let m = hecke_murphy::tensor::PolyMatrix::from_dump(&v).unwrap();
        assert_eq!(m.layout(), &[2, 2]);
    }
}

#[test]
fn calibrate_reports_both_local_dims() {
    let o = hecke().arg("calibrate").output().unwrap();
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["units"][0]["chi_exponent"], 4);
    assert_eq!(v["units"][1]["chi_exponent"], 6);
}
