use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_ring::{parse_rational, Rational};
use crate::hecke::{AlgebraFamily, Params};

pub const SEED_ENV: &str = "HECKE_SEED";
pub const DEFAULT_SEED: u64 = 1;

/// Largest numerator/denominator magnitude drawn by the sampler.
pub const SAMPLE_BOUND: i64 = 97;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Relations,
    Tl,
    MurphyCommute,
    Central,
    Ybe,
    Re,
    Unitarity,
    Crossing,
    Prop1,
    Corollary,
    Prop2,
    Hamiltonian,
    CommutingFamily,
    ExploreGeneric,
}

impl Suite {
    /// Every suite, in execution order.
    pub const ALL: [Suite; 14] = [
        Suite::Relations,
        Suite::Tl,
        Suite::MurphyCommute,
        Suite::Central,
        Suite::Ybe,
        Suite::Re,
        Suite::Unitarity,
        Suite::Crossing,
        Suite::Prop1,
        Suite::Corollary,
        Suite::Prop2,
        Suite::Hamiltonian,
        Suite::CommutingFamily,
        Suite::ExploreGeneric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Tl => "tl",
            Suite::MurphyCommute => "murphy-commute",
            Suite::Central => "central",
            Suite::Ybe => "ybe",
            Suite::Re => "re",
            Suite::Unitarity => "unitarity",
            Suite::Crossing => "crossing",
            Suite::Prop1 => "prop1",
            Suite::Corollary => "corollary",
            Suite::Prop2 => "prop2",
            Suite::Hamiltonian => "hamiltonian",
            Suite::CommutingFamily => "commuting-family",
            Suite::ExploreGeneric => "explore-generic",
        }
    }

    /// Whether the suite needs a calibrated kit.
    pub fn needs_kit(self) -> bool {
        matches!(
            self,
            Suite::Prop1 | Suite::Corollary | Suite::Prop2 | Suite::Hamiltonian | Suite::CommutingFamily | Suite::ExploreGeneric
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Config(format!("unknown suite {s:?}")))
    }
}

/// Explicit parameter values as `"p/q"` strings.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Overrides {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(default, rename = "Q0", alias = "q0", skip_serializing_if = "Option::is_none")]
    pub q0: Option<String>,
    #[serde(default, rename = "QN", alias = "qn", skip_serializing_if = "Option::is_none")]
    pub qn: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x0p: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x0m: Option<String>,
    #[serde(default, rename = "xNp", alias = "xnp", skip_serializing_if = "Option::is_none")]
    pub xnp: Option<String>,
    #[serde(default, rename = "xNm", alias = "xnm", skip_serializing_if = "Option::is_none")]
    pub xnm: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_minus: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_plus: Option<String>,
}

/// Parsed overrides.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParsedOverrides {
    pub q: Option<Rational>,
    pub q0: Option<Rational>,
    pub qn: Option<Rational>,
    pub x0p: Option<Rational>,
    pub xnp: Option<Rational>,
    pub c_minus: Option<Rational>,
    pub c_plus: Option<Rational>,
}

fn parse_field(name: &str, v: &Option<String>) -> Result<Option<Rational>> {
    v.as_deref()
        .map(|s| parse_rational(s).map_err(|e| Error::Config(format!("{name}: {e}"))))
        .transpose()
}

fn is_unit_pm1(x: &Rational) -> bool {
    x.abs().is_one()
}

impl Overrides {
    /// Parses and checks the overrides against the generic locus and the
    /// `x⁺x⁻ = 1` constraints.
    pub fn parse(&self) -> Result<ParsedOverrides> {
        let p = ParsedOverrides {
            q: parse_field("q", &self.q)?,
            q0: parse_field("Q0", &self.q0)?,
            qn: parse_field("QN", &self.qn)?,
            x0p: parse_field("x0p", &self.x0p)?,
            xnp: parse_field("xNp", &self.xnp)?,
            c_minus: parse_field("c_minus", &self.c_minus)?,
            c_plus: parse_field("c_plus", &self.c_plus)?,
        };
        let x0m = parse_field("x0m", &self.x0m)?;
        let xnm = parse_field("xNm", &self.xnm)?;
        for (name, v) in [("q", &p.q), ("Q0", &p.q0), ("QN", &p.qn)] {
            if let Some(x) = v {
                if x.is_zero() || is_unit_pm1(x) {
                    return Err(Error::Config(format!("{name} must avoid 0 and ±1")));
                }
            }
        }
        for (name, v) in [("x0p", &p.x0p), ("xNp", &p.xnp), ("x0m", &x0m), ("xNm", &xnm)] {
            if v.as_ref().is_some_and(Zero::is_zero) {
                return Err(Error::Config(format!("{name} must be nonzero")));
            }
        }
        for (name, plus, minus) in [("x0", &p.x0p, &x0m), ("xN", &p.xnp, &xnm)] {
            match (plus, minus) {
                (Some(a), Some(b)) if !(a * b).is_one() => {
                    return Err(Error::Config(format!("{name}p·{name}m must be 1")))
                }
                (None, Some(_)) => {
                    return Err(Error::Config(format!("{name}m given without {name}p")))
                }
                _ => {}
            }
        }
        let given: Vec<&Rational> = [&p.q, &p.q0, &p.qn].into_iter().flatten().collect();
        for (i, a) in given.iter().enumerate() {
            if given[i + 1..].contains(a) {
                return Err(Error::Config("q, Q0, QN must be pairwise distinct".into()));
            }
        }
        Ok(p)
    }
}

fn default_local_dim() -> usize {
    2
}

fn default_sites() -> usize {
    3
}

fn default_specializations() -> usize {
    3
}

fn default_suites() -> Vec<Suite> {
    Suite::ALL.to_vec()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "default_local_dim", alias = "N")]
    pub local_dim: usize,
    #[serde(default = "default_sites", alias = "n")]
    pub sites: usize,
    /// Restricts the family-dependent suites to one family.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<AlgebraFamily>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default = "default_specializations")]
    pub specializations: usize,
    #[serde(default)]
    pub overrides: Overrides,
    #[serde(default = "default_suites")]
    pub suites: Vec<Suite>,
    #[serde(default, skip_serializing)]
    pub output: Option<PathBuf>,
    /// Records `elapsed_ms` per report; off by default so that reports are
    /// byte-stable.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            local_dim: default_local_dim(),
            sites: default_sites(),
            family: None,
            seed: None,
            specializations: default_specializations(),
            overrides: Overrides::default(),
            suites: default_suites(),
            output: None,
            timing: false,
        }
    }
}

impl RunConfig {
    pub fn from_toml(s: &str) -> Result<Self> {
        let c: Self = toml::from_str(s).map_err(|e| Error::Config(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let c: Self = serde_json::from_str(s).map_err(|e| Error::Config(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    /// Reads a `.json` file as JSON and anything else as TOML.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
        if is_json {
            Self::from_json(&text)
        } else {
            Self::from_toml(&text)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let max_sites = match self.local_dim {
            2 => 6,
            3 => 4,
            d => return Err(Error::Config(format!("local_dim must be 2 or 3, got {d}"))),
        };
        if !(2..=max_sites).contains(&self.sites) {
            return Err(Error::Config(format!(
                "sites must be in 2..={max_sites} for local_dim {}, got {}",
                self.local_dim, self.sites
            )));
        }
        if self.specializations == 0 {
            return Err(Error::Config("specializations must be at least 1".into()));
        }
        if self.family == Some(AlgebraFamily::Tl2b) {
            return Err(Error::Config("family must be A, B or C".into()));
        }
        self.overrides.parse()?;
        Ok(())
    }

    /// Seed precedence: explicit argument, then `HECKE_SEED`, then the file.
    pub fn resolve_seed(&mut self, explicit: Option<u64>) -> Result<u64> {
        let env = match std::env::var(SEED_ENV) {
            Ok(s) if !s.trim().is_empty() => Some(
                s.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Config(format!("{SEED_ENV}={s:?} is not a 64-bit integer")))?,
            ),
            _ => None,
        };
        let seed = explicit.or(env).or(self.seed).unwrap_or(DEFAULT_SEED);
        self.seed = Some(seed);
        Ok(seed)
    }

    /// Suites in execution order, deduplicated.
    pub fn ordered_suites(&self) -> Vec<Suite> {
        Suite::ALL.into_iter().filter(|s| self.suites.contains(s)).collect()
    }

    pub fn families(&self) -> Vec<AlgebraFamily> {
        match self.family {
            Some(f) => vec![f],
            None => vec![AlgebraFamily::A, AlgebraFamily::B, AlgebraFamily::C],
        }
    }
}

/// One seeded specialisation: structural parameters plus the auxiliary
/// rational points the checks evaluate at.
#[derive(Debug, Clone)]
pub struct Sample {
    pub index: usize,
    pub params: Params,
    /// Second spectral variable for two-variable identities.
    pub points: Vec<Rational>,
    /// Inhomogeneity for the commuting family.
    pub u0: Rational,
    pub pairs: Vec<(Rational, Rational)>,
}

fn draw(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let num = rng.random_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
        let den = rng.random_range(1..=SAMPLE_BOUND);
        if num != 0 {
            return Rational::new(num.into(), den.into());
        }
    }
}

/// A rational avoiding `0`, `±1` and everything in `avoid`.
fn draw_generic(rng: &mut ChaCha8Rng, avoid: &[Rational]) -> Rational {
    loop {
        let x = draw(rng);
        if !is_unit_pm1(&x) && !avoid.contains(&x) {
            return x;
        }
    }
}

/// Draws `count` specialisations; overrides replace the sampled values.
pub fn samples(seed: u64, count: usize, overrides: &ParsedOverrides) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|index| {
            let fixed: Vec<Rational> = [&overrides.q, &overrides.q0, &overrides.qn].into_iter().flatten().cloned().collect();
            let q = draw_generic(&mut rng, &fixed);
            let q = overrides.q.clone().unwrap_or(q);
            let q0 = draw_generic(&mut rng, &[fixed.as_slice(), std::slice::from_ref(&q)].concat());
            let q0 = overrides.q0.clone().unwrap_or(q0);
            let qn = draw_generic(&mut rng, &[fixed.as_slice(), &[q.clone(), q0.clone()]].concat());
            let qn = overrides.qn.clone().unwrap_or(qn);
            let x0p = overrides.x0p.clone().unwrap_or_else(|| draw(&mut rng));
            let xnp = overrides.xnp.clone().unwrap_or_else(|| draw(&mut rng));
            let c_minus = overrides.c_minus.clone().unwrap_or_else(|| draw(&mut rng));
            let c_plus = overrides.c_plus.clone().unwrap_or_else(|| draw(&mut rng));
            let mut pts: Vec<Rational> = Vec::new();
            for _ in 0..3 {
                let x = draw_generic(&mut rng, &pts);
                pts.push(x);
            }
            let u0 = draw_generic(&mut rng, &[]);
            let pairs = (0..3)
                .map(|_| {
                    let a = draw_generic(&mut rng, &[]);
                    let b = draw_generic(&mut rng, std::slice::from_ref(&a));
                    (a, b)
                })
                .collect();
            Sample {
                index,
                params: Params::new(q, q0, qn, x0p, xnp, c_minus, c_plus),
                points: pts,
                u0,
                pairs,
            }
        })
        .collect()
}

/// Samples with a config's overrides.
pub fn config_samples(config: &RunConfig, seed: u64) -> Result<Vec<Sample>> {
    let o = config.overrides.parse()?;
    Ok(samples(seed, config.specializations, &o))
}
