use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::config::{config_samples, RunConfig, Sample, Suite};
use crate::baxter::{check_re, check_unitarity, check_ybe, crossing_report, BaxterKit, End};
use crate::error::{Error, Result};
use crate::hecke::{
    aux_string_report, build_gln_rep, check_inverses, check_murphy_commutation, check_relations,
    check_symmetric_commutant, tl_report, AlgebraFamily, HeckeRep,
};
use crate::report::{CheckReport, Failure};
use crate::transfer::{
    check_aux_trace, check_commuting_family, check_hamiltonian, corollary, explore_generic, two_boundary_reports,
    verify_murphy_b,
};

/// Format version of the JSON report.
pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub version: u32,
    pub config: RunConfig,
    pub reports: Vec<CheckReport>,
}

impl ReportDocument {
    /// Canonical bytes: sorted keys, two-space indentation, trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serialises");
        let mut s = serde_json::to_string_pretty(&value).expect("value serialises");
        s.push('\n');
        s
    }

    pub fn failures(&self) -> usize {
        self.reports.iter().filter(|r| r.status == crate::report::Status::Fail).count()
    }
}

pub fn emit_report(doc: &ReportDocument, path: &Path) -> Result<()> {
    std::fs::write(path, doc.to_canonical_json()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn failed(name: &str, e: &Error) -> CheckReport {
    CheckReport::fail(name, Failure::new(e.to_string()))
}

struct SampleRun<'a> {
    config: &'a RunConfig,
    sample: &'a Sample,
    rep: std::result::Result<HeckeRep, Error>,
    kit: std::sync::OnceLock<std::result::Result<BaxterKit, Error>>,
}

impl SampleRun<'_> {
    fn kit(&self) -> std::result::Result<&BaxterKit, &Error> {
        let rep = self.rep.as_ref()?;
        self.kit.get_or_init(|| BaxterKit::new(rep)).as_ref()
    }

    fn run(&self, suite: Suite) -> Vec<CheckReport> {
        let start = Instant::now();
        let mut out = self.run_inner(suite);
        let ms = start.elapsed().as_millis() as u64;
        for r in &mut out {
            r.params.insert("sample".into(), self.sample.index.to_string());
            r.details.insert("suite".into(), suite.name().into());
            if self.config.timing {
                r.elapsed_ms = Some(ms);
            }
        }
        out
    }

    fn run_inner(&self, suite: Suite) -> Vec<CheckReport> {
        let rep = match &self.rep {
            Ok(rep) => rep,
            Err(e) => return vec![failed(&format!("{suite}/build"), e)],
        };
        let n = rep.sites;
        let s = self.sample;
        let families = self.config.families();
        if suite.needs_kit() {
            if let Err(e) = self.kit() {
                return vec![failed(&format!("{suite}/calibration"), e)];
            }
        }
        match suite {
            Suite::Relations => {
                let mut v: Vec<CheckReport> = families.iter().map(|&f| check_relations(rep, f)).collect();
                v.push(check_inverses(rep));
                v.extend((0..n).map(|l| aux_string_report(rep, l)));
                v
            }
            Suite::Tl => {
                if rep.local_dim == 2 {
                    vec![tl_report(rep)]
                } else {
                    vec![CheckReport::info("tl-quotient")
                        .with_params(rep.params.to_map())
                        .with_param("N", rep.local_dim)
                        .with_detail("skipped", "the quotient applies at local dimension 2")]
                }
            }
            Suite::MurphyCommute => families.iter().map(|&f| check_murphy_commutation(rep, f)).collect(),
            Suite::Central => families
                .iter()
                .map(|&f| {
                    let k = if f == AlgebraFamily::C { 1 } else { 2 };
                    check_symmetric_commutant(rep, f, k)
                })
                .collect(),
            Suite::Ybe => vec![check_ybe(rep, &s.points)],
            Suite::Re => vec![check_re(rep, End::Left, &s.points), check_re(rep, End::Right, &s.points)],
            Suite::Unitarity => vec![check_unitarity(rep)],
            Suite::Crossing => vec![crossing_report(rep)],
            Suite::Prop1 => {
                let kit = self.kit().unwrap();
                let mut v = vec![check_aux_trace(kit, n)];
                v.extend((1..=n).map(|m| verify_murphy_b(kit, m)));
                v
            }
            Suite::Corollary => {
                let kit = self.kit().unwrap();
                (2..=n).map(|m| corollary(kit, m)).collect()
            }
            Suite::Prop2 => two_boundary_reports(self.kit().unwrap()),
            Suite::Hamiltonian => {
                let kit = self.kit().unwrap();
                (2..=n).map(|m| check_hamiltonian(kit, m, &s.points)).collect()
            }
            Suite::CommutingFamily => {
                let kit = self.kit().unwrap();
                (2..=n).map(|m| check_commuting_family(kit, m, &s.u0, &s.pairs)).collect()
            }
            Suite::ExploreGeneric => {
                let kit = self.kit().unwrap();
                (1..n).flat_map(|level| explore_generic(kit, level)).collect()
            }
        }
    }
}

/// Runs the configured suites on every specialisation. Reports come out
/// grouped by suite (in execution order), then by specialisation.
pub fn run_suite(config: &RunConfig, seed: u64) -> Result<Vec<CheckReport>> {
    config.validate()?;
    let samples = config_samples(config, seed)?;
    let suites = config.ordered_suites();
    let per_sample: Vec<Vec<Vec<CheckReport>>> = samples
        .par_iter()
        .map(|sample| {
            let run = SampleRun {
                config,
                sample,
                rep: build_gln_rep(config.local_dim, config.sites, &sample.params),
                kit: std::sync::OnceLock::new(),
            };
            suites.iter().map(|&s| run.run(s)).collect()
        })
        .collect();
    let mut out = Vec::new();
    for i in 0..suites.len() {
        for sample in &per_sample {
            out.extend(sample[i].iter().cloned());
        }
    }
    Ok(out)
}

/// Resolves the seed, runs, and wraps the result in a report document.
pub fn run_document(mut config: RunConfig, explicit_seed: Option<u64>) -> Result<ReportDocument> {
    let seed = config.resolve_seed(explicit_seed)?;
    let reports = run_suite(&config, seed)?;
    Ok(ReportDocument { version: REPORT_VERSION, config, reports })
}
