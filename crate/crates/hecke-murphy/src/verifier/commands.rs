use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use super::config::{samples, ParsedOverrides, RunConfig};
use crate::baxter::{crossing_exponent, BaxterKit};
use crate::error::{Error, Result};
use crate::exact_ring::fmt_rational;
use crate::hecke::{build_gln_rep, AlgebraFamily, HeckeRep, Params};
use crate::report::CheckReport;
use crate::tensor::PolyMatrix;
use crate::transfer::{build_t_minus, build_t_one_boundary, build_t_plus, corollary, verify_murphy_b, verify_murphy_c, EvalPoint};

/// Matrices the `dump` command can write.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DumpObject {
    TMinus,
    TPlus,
    TOpen,
}

impl FromStr for DumpObject {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t_minus" => Ok(Self::TMinus),
            "t_plus" => Ok(Self::TPlus),
            "t_open" => Ok(Self::TOpen),
            other => Err(Error::Config(format!("unknown object {other:?}; expected t_minus, t_plus or t_open"))),
        }
    }
}

impl fmt::Display for DumpObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::TMinus => "t_minus",
            Self::TPlus => "t_plus",
            Self::TOpen => "t_open",
        })
    }
}

/// The first seeded specialisation, without overrides.
pub fn seeded_params(seed: u64) -> Params {
    samples(seed, 1, &ParsedOverrides::default()).remove(0).params
}

fn rep_for(local_dim: usize, sites: usize, seed: u64) -> Result<HeckeRep> {
    let probe = RunConfig { local_dim, sites, ..RunConfig::default() };
    probe.validate()?;
    build_gln_rep(local_dim, sites, &seeded_params(seed))
}

/// Murphy elements of one family on `n` sites, read off the matching
/// transfer matrix: the corollary for A, the one-boundary matrix for B and
/// the two dynamical-boundary matrices for C.
pub fn murphy_reports(family: AlgebraFamily, local_dim: usize, n: usize, seed: u64) -> Result<Vec<CheckReport>> {
    let kit = BaxterKit::new(&rep_for(local_dim, n, seed)?)?;
    Ok(match family {
        AlgebraFamily::A => vec![corollary(&kit, n)],
        AlgebraFamily::B => vec![verify_murphy_b(&kit, n)],
        AlgebraFamily::C => verify_murphy_c(&kit),
        AlgebraFamily::Tl2b => return Err(Error::Config("family must be A, B or C".into())),
    })
}

/// Builds one transfer matrix and returns its canonical dump.
pub fn dump_object(object: DumpObject, point: EvalPoint, local_dim: usize, sites: usize, seed: u64) -> Result<Value> {
    let kit = BaxterKit::new(&rep_for(local_dim, sites, seed)?)?;
    let m: PolyMatrix = match object {
        DumpObject::TMinus => build_t_minus(&kit, point)?,
        DumpObject::TPlus => build_t_plus(&kit, point)?,
        DumpObject::TOpen => build_t_one_boundary(&kit, sites)?.direct,
    };
    Ok(m.to_dump())
}

/// Crossing and half-shift units for `N = 2, 3` at a seeded `q`.
pub fn calibrate(seed: u64) -> Result<Value> {
    let mut out = Vec::new();
    for local_dim in [2, 3] {
        let rep = rep_for(local_dim, 2, seed)?;
        let kit = BaxterKit::new(&rep)?;
        let exp = |x| crossing_exponent(&rep, x);
        out.push(json!({
            "local_dim": local_dim,
            "q": fmt_rational(&rep.params.q),
            "chi": fmt_rational(&kit.chi),
            "chi_exponent": exp(&kit.chi),
            "chi_h": fmt_rational(&kit.chi_h),
            "chi_h_branch": if kit.chi_h == crate::exact_ring::rpow(&rep.params.q, local_dim as i32) { "+q^N" } else { "-q^N" },
        }));
    }
    Ok(json!({ "seed": seed, "units": out }))
}
