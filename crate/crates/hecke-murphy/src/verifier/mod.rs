//! Configuration, suite orchestration, canonical JSON reports and the
//! helpers behind the `hecke` command line.

mod commands;
mod config;
mod suite;

pub use commands::{calibrate, dump_object, murphy_reports, seeded_params, DumpObject};
pub use config::{
    config_samples, samples, Overrides, ParsedOverrides, RunConfig, Sample, Suite, DEFAULT_SEED, SAMPLE_BOUND, SEED_ENV,
};
pub use suite::{emit_report, run_document, run_suite, ReportDocument, REPORT_VERSION};

/// Seed for the single-shot commands: explicit flag, then `HECKE_SEED`, then
/// the default.
pub fn cli_seed(explicit: Option<u64>) -> crate::Result<u64> {
    RunConfig::default().resolve_seed(explicit)
}
