//! Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Run with `cargo test --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hecke_murphy::baxter::{check_re, check_unitarity, check_ybe, crossing_exponent, crossing_report, BaxterKit, End};
use hecke_murphy::hecke::{
    build_gln_rep, check_inverses, check_murphy_commutation, check_relations, check_symmetric_commutant, tl_report,
    AlgebraFamily, HeckeRep,
};
use hecke_murphy::report::CheckReport;
use hecke_murphy::transfer::{
    check_aux_trace, check_commuting_family, check_condition2, check_degeneration, check_hamiltonian, corollary,
    verify_murphy_b, verify_murphy_c,
};
use hecke_murphy::verifier::{samples, ParsedOverrides, RunConfig, Sample};

const SEED: u64 = 1;
const SPECIALIZATIONS: usize = 3;

/// `(N, n)` pairs for the relation and one-boundary criteria.
const SIZES: [(usize, usize); 8] = [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (3, 4)];
/// `(N, chain length)` pairs for the two-boundary criteria.
const TWO_BOUNDARY: [(usize, usize); 3] = [(2, 2), (2, 3), (3, 2)];

const GOLDEN: &str = include_str!("golden/default_report.json");
const DEFAULT_CONFIG: &str = include_str!("../configs/default.toml");

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn specs() -> Vec<Sample> {
    samples(SEED, SPECIALIZATIONS, &ParsedOverrides::default())
}

fn rep(s: &Sample, local_dim: usize, sites: usize) -> Result<HeckeRep, String> {
    build_gln_rep(local_dim, sites, &s.params).map_err(|e| format!("sample {}: {e}", s.index))
}

fn kit(s: &Sample, local_dim: usize, sites: usize) -> Result<BaxterKit, String> {
    BaxterKit::new(&rep(s, local_dim, sites)?).map_err(|e| format!("sample {} N={local_dim} n={sites}: {e}", s.index))
}

fn require(reports: impl IntoIterator<Item = CheckReport>, s: &Sample, counter: &mut usize) -> Result<(), String> {
    for r in reports {
        *counter += 1;
        if !r.is_pass() {
            return Err(format!("sample {}: {}", s.index, r.summary()));
        }
    }
    Ok(())
}

fn within(start: Instant, budget: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t > budget {
        return Err(format!("{what} took {:.1}s, budget {}s", t.as_secs_f64(), budget.as_secs()));
    }
    Ok(())
}

fn c1_relations() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for s in &specs() {
        for (d, n) in SIZES {
            let rep = rep(s, d, n)?;
            let mut rs: Vec<CheckReport> =
                [AlgebraFamily::A, AlgebraFamily::B, AlgebraFamily::C].iter().map(|&f| check_relations(&rep, f)).collect();
            rs.push(check_inverses(&rep));
            require(rs, s, &mut count)?;
        }
    }
    within(start, Duration::from_secs(60), "relation suite")?;
    Ok(format!("{count} checks in {:.1}s", start.elapsed().as_secs_f64()))
}

fn c2_baxter() -> Outcome {
    let mut count = 0;
    let mut exponents = Vec::new();
    for d in [2, 3] {
        let mut per_n = Vec::new();
        for s in &specs() {
            let rep = rep(s, d, 2)?;
            let crossing = crossing_report(&rep);
            let chi = hecke_murphy::baxter::calibrate_crossing(&rep).map_err(|e| e.to_string())?;
            per_n.push(crossing_exponent(&rep, &chi));
            let rs = vec![
                check_ybe(&rep, &s.points),
                check_re(&rep, End::Left, &s.points),
                check_re(&rep, End::Right, &s.points),
                check_unitarity(&rep),
                crossing,
            ];
            require(rs, s, &mut count)?;
        }
        if per_n.iter().any(|e| e.is_none() || *e != per_n[0]) {
            return Err(format!("crossing exponent not stable across seeds at N={d}: {per_n:?}"));
        }
        exponents.push(format!("N={d}: chi=q^{}", per_n[0].unwrap()));
    }
    Ok(format!("{count} checks; {}", exponents.join(", ")))
}

fn c3_one_boundary() -> Outcome {
    let mut count = 0;
    let mut slowest = Duration::ZERO;
    for s in &specs() {
        for (d, n) in SIZES {
            let start = Instant::now();
            let kit = kit(s, d, n)?;
            require([check_aux_trace(&kit, n), verify_murphy_b(&kit, n)], s, &mut count)?;
            slowest = slowest.max(start.elapsed());
        }
    }
    if slowest > Duration::from_secs(120) {
        return Err(format!("largest case took {:.1}s, budget 120s", slowest.as_secs_f64()));
    }
    Ok(format!("{count} checks; slowest size {:.1}s", slowest.as_secs_f64()))
}

fn c4_corollary() -> Outcome {
    let mut count = 0;
    for s in &specs() {
        for (d, n) in SIZES {
            require([corollary(&kit(s, d, n)?, n)], s, &mut count)?;
        }
    }
    Ok(format!("{count} checks"))
}

fn c5_two_boundary() -> Outcome {
    let mut count = 0;
    for s in &specs() {
        for (d, n) in TWO_BOUNDARY {
            let kit = kit(s, d, n)?;
            let mut rs = check_condition2(&kit);
            let murphy = verify_murphy_c(&kit);
            if murphy.len() != 4 {
                return Err(format!("expected four edge checks, got {}", murphy.len()));
            }
            rs.extend(murphy);
            require(rs, s, &mut count)?;
        }
    }
    Ok(format!("{count} checks"))
}

fn c6_degeneration() -> Outcome {
    let mut count = 0;
    for s in &specs() {
        for (d, n) in TWO_BOUNDARY {
            require([check_degeneration(&kit(s, d, n)?)], s, &mut count)?;
        }
    }
    Ok(format!("{count} checks"))
}

fn c7_murphy_structure() -> Outcome {
    let mut count = 0;
    for s in &specs() {
        for (d, n) in SIZES {
            let rep = rep(s, d, n)?;
            let rs = vec![
                check_murphy_commutation(&rep, AlgebraFamily::A),
                check_murphy_commutation(&rep, AlgebraFamily::B),
                check_murphy_commutation(&rep, AlgebraFamily::C),
                check_symmetric_commutant(&rep, AlgebraFamily::B, 2),
                check_symmetric_commutant(&rep, AlgebraFamily::C, 1),
            ];
            require(rs, s, &mut count)?;
        }
    }
    Ok(format!("{count} checks"))
}

fn c8_tl() -> Outcome {
    let mut count = 0;
    for s in &specs() {
        for (d, n) in SIZES.into_iter().filter(|&(d, _)| d == 2) {
            let r = tl_report(&rep(s, d, n)?);
            if !r.details.contains_key("kappa_minus") || !r.details.contains_key("kappa_plus") {
                return Err("tl report lacks kappa values".into());
            }
            require([r], s, &mut count)?;
        }
    }
    let golden: serde_json::Value = serde_json::from_str(GOLDEN).map_err(|e| e.to_string())?;
    let recorded = golden["reports"]
        .as_array()
        .into_iter()
        .flatten()
        .filter(|r| r["check"] == "tl-quotient" && r["details"]["kappa_minus"].is_string() && r["details"]["kappa_plus"].is_string())
        .count();
    if recorded == 0 {
        return Err("golden report records no kappa values".into());
    }
    Ok(format!("{count} checks; kappas recorded for {recorded} specialisations"))
}

fn c9_integrability() -> Outcome {
    let mut count = 0;
    for s in &specs() {
        for n in 2..=4 {
            let kit = kit(s, 2, n)?;
            if s.pairs.len() != 3 {
                return Err("expected three rational pairs".into());
            }
            require([check_commuting_family(&kit, n, &s.u0, &s.pairs), check_hamiltonian(&kit, n, &s.points)], s, &mut count)?;
        }
    }
    Ok(format!("{count} checks"))
}

fn c10_golden() -> Outcome {
    let config = RunConfig::from_toml(DEFAULT_CONFIG).map_err(|e| e.to_string())?;
    let seed = config.seed;
    let doc = hecke_murphy::verifier::run_document(config, seed).map_err(|e| e.to_string())?;
    let text = doc.to_canonical_json();
    if text != GOLDEN {
        let line = text.lines().zip(GOLDEN.lines()).position(|(a, b)| a != b).map_or(0, |i| i + 1);
        return Err(format!("report differs from golden (first differing line {line})"));
    }
    Ok(format!("{} reports, {} bytes", doc.reports.len(), text.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("relations", c1_relations),
        ("baxterization", c2_baxter),
        ("one-boundary murphy elements", c3_one_boundary),
        ("trivial-boundary corollary", c4_corollary),
        ("two-boundary murphy elements", c5_two_boundary),
        ("degeneration to one boundary", c6_degeneration),
        ("murphy structure", c7_murphy_structure),
        ("temperley-lieb quotient", c8_tl),
        ("integrability", c9_integrability),
        ("golden report", c10_golden),
    ];
    let mut failed = 0;
    for (i, (label, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match f() {
            Ok(msg) => println!("PASS {:>2} {label}: {msg} ({:.1}s)", i + 1, start.elapsed().as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {label}: {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
