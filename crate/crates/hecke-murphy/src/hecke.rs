//! Tensor representations of the A/B/C-type Hecke algebras built from the
//! `U_q(gl_N)` R-matrix, their defining relations, the two-boundary
//! Temperley–Lieb quotient, and Murphy elements.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_ring::{fmt_rational, rpow, LaurentPoly, Rational};
use crate::report::{expect_equal, CheckReport, Failure};
use crate::tensor::{diagonal, unit, PolyMatrix};

/// Structural parameters, already specialised to exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub q: Rational,
    pub q0: Rational,
    pub qn: Rational,
    pub x0p: Rational,
    pub x0m: Rational,
    pub xnp: Rational,
    pub xnm: Rational,
    pub c_minus: Rational,
    pub c_plus: Rational,
}

impl Params {
    /// Fills in `x⁻ = 1/x⁺` at both ends.
    pub fn new(
        q: Rational,
        q0: Rational,
        qn: Rational,
        x0p: Rational,
        xnp: Rational,
        c_minus: Rational,
        c_plus: Rational,
    ) -> Self {
        let x0m = x0p.recip();
        let xnm = xnp.recip();
        Self { q, q0, qn, x0p, x0m, xnp, xnm, c_minus, c_plus }
    }

    pub fn to_map(&self) -> BTreeMap<String, String> {
        [
            ("q", &self.q),
            ("Q0", &self.q0),
            ("QN", &self.qn),
            ("x0p", &self.x0p),
            ("x0m", &self.x0m),
            ("xNp", &self.xnp),
            ("xNm", &self.xnm),
            ("c_minus", &self.c_minus),
            ("c_plus", &self.c_plus),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), fmt_rational(v)))
        .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraFamily {
    A,
    B,
    C,
    #[serde(rename = "TL2B")]
    Tl2b,
}

impl FromStr for AlgebraFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Self::A),
            "B" => Ok(Self::B),
            "C" => Ok(Self::C),
            "TL2B" | "TL" => Ok(Self::Tl2b),
            other => Err(Error::Config(format!("unknown algebra family {other:?}"))),
        }
    }
}

impl fmt::Display for AlgebraFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::A => "A",
            Self::B => "B",
            Self::C => "C",
            Self::Tl2b => "TL2B",
        };
        write!(f, "{s}")
    }
}

/// Candidate forms of the bulk generator, tried in this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BulkVariant {
    /// `qI + Σ_{a≠b} (e_ab⊗e_ab − q^{sgn(a−b)} e_aa⊗e_bb)`
    SameIndex,
    /// `qI + Σ_{a≠b} (e_ab⊗e_ba − q^{sgn(a−b)} e_aa⊗e_bb)`
    SwapLower,
    /// `qI + Σ_{a≠b} (e_ab⊗e_ba − q^{sgn(b−a)} e_aa⊗e_bb)`
    SwapUpper,
}

impl BulkVariant {
    pub const ALL: [BulkVariant; 3] = [Self::SameIndex, Self::SwapLower, Self::SwapUpper];
}

impl fmt::Display for BulkVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::SameIndex => "same-index",
            Self::SwapLower => "swap-lower",
            Self::SwapUpper => "swap-upper",
        };
        write!(f, "{s}")
    }
}

pub fn bulk_generator(n: usize, q: &Rational, variant: BulkVariant) -> PolyMatrix {
    let mut g = PolyMatrix::scalar(&[n, n], &LaurentPoly::constant(q.clone()));
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let swap = match variant {
                BulkVariant::SameIndex => unit(n, a, b).kron(&unit(n, a, b)),
                _ => unit(n, a, b).kron(&unit(n, b, a)),
            };
            let upward = match variant {
                BulkVariant::SwapUpper => b > a,
                _ => a > b,
            };
            let s = rpow(q, if upward { 1 } else { -1 });
            let diag = unit(n, a, a).kron(&unit(n, b, b)).scale_rational(&s);
            g = g.add(&swap).unwrap().sub(&diag).unwrap();
        }
    }
    g
}

/// Left boundary `g₀ = Q I − Q⁻¹ e_11 − Q e_NN + x⁺ e_1N + x⁻ e_N1`.
pub fn left_boundary(n: usize, big_q: &Rational, xp: &Rational, xm: &Rational) -> PolyMatrix {
    boundary(n, big_q, &big_q.recip(), big_q, xp, xm)
}

/// Right boundary `g_N = Q I − Q e_11 − Q⁻¹ e_NN + x⁺ e_1N + x⁻ e_N1`.
pub fn right_boundary(n: usize, big_q: &Rational, xp: &Rational, xm: &Rational) -> PolyMatrix {
    boundary(n, big_q, big_q, &big_q.recip(), xp, xm)
}

fn boundary(n: usize, big_q: &Rational, first: &Rational, last: &Rational, xp: &Rational, xm: &Rational) -> PolyMatrix {
    let c = |x: &Rational| LaurentPoly::constant(x.clone());
    let mut entries: Vec<(usize, usize, LaurentPoly)> =
        (0..n).map(|i| (i, i, c(big_q))).collect();
    entries.push((0, 0, c(&-first)));
    entries.push((n - 1, n - 1, c(&-last)));
    entries.push((0, n - 1, c(xp)));
    entries.push((n - 1, 0, c(xm)));
    PolyMatrix::from_entries(&[n], entries).unwrap()
}

/// `M = diag(q^{N−2j+1})`, `j = 1…N`.
pub fn twist_matrix(n: usize, q: &Rational) -> PolyMatrix {
    let vals: Vec<Rational> = (1..=n as i32).map(|j| rpow(q, n as i32 - 2 * j + 1)).collect();
    diagonal(&vals)
}

/// Inverse from `(g − α)(g + β⁻¹) = 0`: `g⁻¹ = (g − (α − β⁻¹)I)·β/α`.
pub fn generator_inverse(g: &PolyMatrix, alpha: &Rational, beta: &Rational) -> Result<PolyMatrix> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::NotInvertible);
    }
    let shift = LaurentPoly::constant(alpha - beta.recip());
    let x = g
        .sub(&PolyMatrix::scalar(g.layout(), &shift))?
        .scale_rational(&(beta / alpha));
    if g.matmul(&x)?.is_identity() {
        Ok(x)
    } else {
        Err(Error::NotInvertible)
    }
}

fn quadratic_residue(g: &PolyMatrix, alpha: &Rational, beta: &Rational) -> PolyMatrix {
    let l = g.layout().to_vec();
    let a = g.sub(&PolyMatrix::scalar(&l, &LaurentPoly::constant(alpha.clone()))).unwrap();
    let b = g.add(&PolyMatrix::scalar(&l, &LaurentPoly::constant(beta.recip()))).unwrap();
    a.matmul(&b).unwrap()
}

/// Local matrices of a representation, before embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalMatrices {
    pub g: PolyMatrix,
    pub g0: PolyMatrix,
    pub gn: PolyMatrix,
}

/// A full tensor representation on `sites` copies of `ℂ^N`.
#[derive(Clone, Debug)]
pub struct HeckeRep {
    pub local_dim: usize,
    pub sites: usize,
    pub params: Params,
    pub variant: Option<BulkVariant>,
    pub g_local: PolyMatrix,
    pub g_inv_local: PolyMatrix,
    pub g0_local: PolyMatrix,
    pub g0_inv_local: PolyMatrix,
    pub gn_local: PolyMatrix,
    pub gn_inv_local: PolyMatrix,
    pub m_local: PolyMatrix,
    pub m_inv_local: PolyMatrix,
    bulk: Vec<PolyMatrix>,
    bulk_inv: Vec<PolyMatrix>,
    g0: PolyMatrix,
    g0_inv: PolyMatrix,
    gn: PolyMatrix,
    gn_inv: PolyMatrix,
}

fn first_failure(checks: impl IntoIterator<Item = (String, PolyMatrix, PolyMatrix)>) -> Option<Failure> {
    checks
        .into_iter()
        .find(|(_, a, b)| a != b)
        .map(|(name, a, b)| Failure::from_matrices(name, &a, &b))
}

/// Local consistency of a bulk candidate with the boundary matrices.
fn variant_accepts(n: usize, q: &Rational, g: &PolyMatrix, g0: &PolyMatrix, gn: &PolyMatrix) -> bool {
    let zero2 = PolyMatrix::zeros(&[n, n]);
    if quadratic_residue(g, q, q) != zero2 {
        return false;
    }
    let l3 = [n, n, n];
    let g12 = PolyMatrix::embed(g, &[0, 1], &l3).unwrap();
    let g23 = PolyMatrix::embed(g, &[1, 2], &l3).unwrap();
    let braid = PolyMatrix::product(&[&g12, &g23, &g12]).unwrap()
        == PolyMatrix::product(&[&g23, &g12, &g23]).unwrap();
    let l2 = [n, n];
    let b0 = PolyMatrix::embed(g0, &[0], &l2).unwrap();
    let bn = PolyMatrix::embed(gn, &[1], &l2).unwrap();
    let left = PolyMatrix::product(&[g, &b0, g, &b0]).unwrap()
        == PolyMatrix::product(&[&b0, g, &b0, g]).unwrap();
    let right = PolyMatrix::product(&[&bn, g, &bn, g]).unwrap()
        == PolyMatrix::product(&[g, &bn, g, &bn]).unwrap();
    braid && left && right
}

/// Builds the `gl_N` representation on `n` sites, choosing the first bulk
/// variant that satisfies the quadratic and braid relations together with
/// the boundary matrices.
pub fn build_gln_rep(local_dim: usize, sites: usize, params: &Params) -> Result<HeckeRep> {
    if local_dim < 2 || sites < 1 {
        return Err(Error::ConstraintViolation(format!(
            "need N ≥ 2 and n ≥ 1, got N={local_dim}, n={sites}"
        )));
    }
    let p = params;
    if p.q.is_zero() || p.q0.is_zero() || p.qn.is_zero() {
        return Err(Error::ConstraintViolation("q, Q0, QN must be nonzero".into()));
    }
    let g0 = left_boundary(local_dim, &p.q0, &p.x0p, &p.x0m);
    let gn = right_boundary(local_dim, &p.qn, &p.xnp, &p.xnm);
    let zero = PolyMatrix::zeros(&[local_dim]);
    for (name, g, big_q, xp, xm) in [("g0", &g0, &p.q0, &p.x0p, &p.x0m), ("gN", &gn, &p.qn, &p.xnp, &p.xnm)] {
        if quadratic_residue(g, big_q, big_q) != zero {
            return Err(Error::ConstraintViolation(format!(
                "quadratic relation for {name} fails: x⁺x⁻ = {} (must be 1)",
                fmt_rational(&(xp * xm))
            )));
        }
    }
    let (variant, g) = BulkVariant::ALL
        .iter()
        .map(|&v| (v, bulk_generator(local_dim, &p.q, v)))
        .find(|(_, g)| variant_accepts(local_dim, &p.q, g, &g0, &gn))
        .ok_or_else(|| {
            Error::ConstraintViolation("no bulk generator variant satisfies the relations".into())
        })?;
    let mut rep = HeckeRep::from_local(local_dim, sites, p, LocalMatrices { g, g0, gn })?;
    rep.variant = Some(variant);
    Ok(rep)
}

impl HeckeRep {
    /// Assembles a representation from local matrices without checking any
    /// relation; inverses come from the quadratic relations with the
    /// parameters in `params`.
    pub fn from_local(local_dim: usize, sites: usize, params: &Params, local: LocalMatrices) -> Result<Self> {
        let p = params;
        let g_inv_local = generator_inverse(&local.g, &p.q, &p.q)?;
        let g0_inv_local = generator_inverse(&local.g0, &p.q0, &p.q0)?;
        let gn_inv_local = generator_inverse(&local.gn, &p.qn, &p.qn)?;
        let m_local = twist_matrix(local_dim, &p.q);
        let m_inv_local = twist_matrix(local_dim, &p.q.recip());
        let mut rep = Self {
            local_dim,
            sites,
            params: p.clone(),
            variant: None,
            g_local: local.g,
            g_inv_local,
            g0_local: local.g0,
            g0_inv_local,
            gn_local: local.gn,
            gn_inv_local,
            m_local,
            m_inv_local,
            bulk: Vec::new(),
            bulk_inv: Vec::new(),
            g0: PolyMatrix::default(),
            g0_inv: PolyMatrix::default(),
            gn: PolyMatrix::default(),
            gn_inv: PolyMatrix::default(),
        };
        rep.embed_all();
        Ok(rep)
    }

    /// Same local data on a different number of sites.
    pub fn with_sites(&self, sites: usize) -> Self {
        let mut rep = self.clone();
        rep.sites = sites;
        rep.embed_all();
        rep
    }

    /// Replaces the right boundary matrix (inverse from the `Q_N` relation).
    pub fn with_right_boundary(&self, gn: PolyMatrix) -> Result<Self> {
        let mut rep = self.clone();
        rep.gn_inv_local = generator_inverse(&gn, &rep.params.qn, &rep.params.qn)?;
        rep.gn_local = gn;
        rep.embed_all();
        Ok(rep)
    }

    /// Replaces the left boundary matrix (inverse from the `Q_0` relation).
    pub fn with_left_boundary(&self, g0: PolyMatrix) -> Result<Self> {
        let mut rep = self.clone();
        rep.g0_inv_local = generator_inverse(&g0, &rep.params.q0, &rep.params.q0)?;
        rep.g0_local = g0;
        rep.embed_all();
        Ok(rep)
    }

    /// `g_N = Q_N·I`, the degenerate right boundary.
    pub fn with_scalar_right_boundary(&self) -> Result<Self> {
        let gn = PolyMatrix::scalar(&[self.local_dim], &LaurentPoly::constant(self.params.qn.clone()));
        self.with_right_boundary(gn)
    }

    fn embed_all(&mut self) {
        let l = self.layout();
        let n = self.sites;
        self.bulk = (1..n)
            .map(|i| PolyMatrix::embed(&self.g_local, &[i - 1, i], &l).unwrap())
            .collect();
        self.bulk_inv = (1..n)
            .map(|i| PolyMatrix::embed(&self.g_inv_local, &[i - 1, i], &l).unwrap())
            .collect();
        self.g0 = PolyMatrix::embed(&self.g0_local, &[0], &l).unwrap();
        self.g0_inv = PolyMatrix::embed(&self.g0_inv_local, &[0], &l).unwrap();
        self.gn = PolyMatrix::embed(&self.gn_local, &[n - 1], &l).unwrap();
        self.gn_inv = PolyMatrix::embed(&self.gn_inv_local, &[n - 1], &l).unwrap();
    }

    pub fn layout(&self) -> Vec<usize> {
        vec![self.local_dim; self.sites]
    }

    pub fn identity(&self) -> PolyMatrix {
        PolyMatrix::identity(&self.layout())
    }

    /// `π(g_i)`: `i = 0` is the left boundary, `1 ≤ i < n` the bulk, and
    /// `i = n` the right boundary.
    pub fn generator(&self, i: usize) -> Result<&PolyMatrix> {
        match i {
            0 => Ok(&self.g0),
            i if i == self.sites => Ok(&self.gn),
            i if i < self.sites => Ok(&self.bulk[i - 1]),
            _ => Err(Error::IndexOutOfRange { index: i, range: format!("0..={}", self.sites) }),
        }
    }

    pub fn generator_inv(&self, i: usize) -> Result<&PolyMatrix> {
        match i {
            0 => Ok(&self.g0_inv),
            i if i == self.sites => Ok(&self.gn_inv),
            i if i < self.sites => Ok(&self.bulk_inv[i - 1]),
            _ => Err(Error::IndexOutOfRange { index: i, range: format!("0..={}", self.sites) }),
        }
    }

    /// Bulk generator `π(g_i)`, `1 ≤ i < n`.
    pub fn g(&self, i: usize) -> &PolyMatrix {
        &self.bulk[i - 1]
    }

    pub fn g_inv(&self, i: usize) -> &PolyMatrix {
        &self.bulk_inv[i - 1]
    }

    pub fn g0(&self) -> &PolyMatrix {
        &self.g0
    }

    pub fn g0_inv(&self) -> &PolyMatrix {
        &self.g0_inv
    }

    pub fn gn(&self) -> &PolyMatrix {
        &self.gn
    }

    pub fn gn_inv(&self) -> &PolyMatrix {
        &self.gn_inv
    }

    /// Generators of the family's algebra, labelled.
    pub fn family_generators(&self, family: AlgebraFamily) -> Vec<(String, &PolyMatrix)> {
        let mut out: Vec<(String, &PolyMatrix)> =
            (1..self.sites).map(|i| (format!("g{i}"), self.g(i))).collect();
        if matches!(family, AlgebraFamily::B | AlgebraFamily::C | AlgebraFamily::Tl2b) {
            out.insert(0, ("g0".into(), &self.g0));
        }
        if matches!(family, AlgebraFamily::C | AlgebraFamily::Tl2b) {
            out.push(("gN".into(), &self.gn));
        }
        out
    }
}

fn prod(ms: &[&PolyMatrix]) -> PolyMatrix {
    PolyMatrix::product(ms).expect("same-shape product")
}

fn quad_check(name: String, g: &PolyMatrix, alpha: &Rational) -> (String, PolyMatrix, PolyMatrix) {
    let l = g.layout().to_vec();
    let a = g.sub(&PolyMatrix::scalar(&l, &LaurentPoly::constant(alpha.clone()))).unwrap();
    let b = g.add(&PolyMatrix::scalar(&l, &LaurentPoly::constant(alpha.recip()))).unwrap();
    (name, a.matmul(&b).unwrap(), PolyMatrix::zeros(&l))
}

fn commute_check(name: String, a: &PolyMatrix, b: &PolyMatrix) -> (String, PolyMatrix, PolyMatrix) {
    (name, a.matmul(b).unwrap(), b.matmul(a).unwrap())
}

/// All defining relations of the family, as exact matrix identities.
pub fn check_relations(rep: &HeckeRep, family: AlgebraFamily) -> CheckReport {
    let name = format!("relations/{family}");
    let n = rep.sites;
    let p = &rep.params;
    let mut checks: Vec<(String, PolyMatrix, PolyMatrix)> = Vec::new();
    // A-type: quadratic, braid, far commutation
    for l in 1..n {
        checks.push(quad_check(format!("quadratic g{l}"), rep.g(l), &p.q));
    }
    for l in 1..n.saturating_sub(1) {
        let (a, b) = (rep.g(l), rep.g(l + 1));
        checks.push((format!("braid g{l}g{}", l + 1), prod(&[a, b, a]), prod(&[b, a, b])));
    }
    for l in 1..n {
        for m in (l + 2)..n {
            checks.push(commute_check(format!("commute [g{l},g{m}]"), rep.g(l), rep.g(m)));
        }
    }
    if matches!(family, AlgebraFamily::B | AlgebraFamily::C | AlgebraFamily::Tl2b) {
        let g0 = rep.g0();
        if n >= 2 {
            let g1 = rep.g(1);
            checks.push(("boundary braid g0g1".into(), prod(&[g1, g0, g1, g0]), prod(&[g0, g1, g0, g1])));
        }
        for l in 2..n {
            checks.push(commute_check(format!("commute [g0,g{l}]"), g0, rep.g(l)));
        }
        checks.push(quad_check("quadratic g0".into(), g0, &p.q0));
    }
    if matches!(family, AlgebraFamily::C | AlgebraFamily::Tl2b) {
        let gn = rep.gn();
        if n >= 2 {
            let gl = rep.g(n - 1);
            checks.push(("boundary braid gNg(n-1)".into(), prod(&[gn, gl, gn, gl]), prod(&[gl, gn, gl, gn])));
        }
        for i in 0..n.saturating_sub(1) {
            let gi = rep.generator(i).unwrap();
            checks.push(commute_check(format!("commute [gN,g{i}]"), gn, gi));
        }
        checks.push(quad_check("quadratic gN".into(), gn, &p.qn));
    }
    let count = checks.len();
    let report = match first_failure(checks) {
        None => CheckReport::pass(&name),
        Some(f) => CheckReport::fail(&name, f),
    };
    report
        .with_params(p.to_map())
        .with_param("N", rep.local_dim)
        .with_param("n", n)
        .with_detail("relations_checked", count)
}

/// The Temperley–Lieb quotient relations; returns `(κ₋, κ₊)`.
pub fn check_tl_quotient(rep: &HeckeRep) -> Result<(Rational, Rational)> {
    let n = rep.sites;
    if n < 2 {
        return Err(Error::IndexOutOfRange { index: n, range: "sites ≥ 2".into() });
    }
    let p = &rep.params;
    let l = rep.layout();
    let shift = |g: &PolyMatrix, c: &Rational| {
        g.sub(&PolyMatrix::scalar(&l, &LaurentPoly::constant(c.clone()))).unwrap()
    };
    let e: Vec<PolyMatrix> = (1..n).map(|i| shift(rep.g(i), &p.q)).collect();
    for i in 0..e.len().saturating_sub(1) {
        for (a, b, label) in [(&e[i], &e[i + 1], "+"), (&e[i + 1], &e[i], "-")] {
            if prod(&[a, b, a]) != *a {
                let idx = if label == "+" { i + 1 } else { i + 2 };
                return Err(Error::RelationFailure {
                    relation: format!("e_i e_(i{label}1) e_i = e_i"),
                    site: format!("i={idx}"),
                });
            }
        }
    }
    let kappa = |boundary: &PolyMatrix, e_b: &PolyMatrix, label: &str| -> Result<Rational> {
        let triple = prod(&[e_b, boundary, e_b]);
        PolyMatrix::proportional(&triple, e_b)
            .and_then(|r| r.as_rational())
            .ok_or_else(|| Error::RelationFailure { relation: label.into(), site: "boundary".into() })
    };
    let e0 = shift(rep.g0(), &p.q0);
    let en = shift(rep.gn(), &p.qn);
    let km = kappa(&e0, &e[0], "e1 e0 e1 = κ₋ e1")?;
    let kp = kappa(&en, &e[n - 2], "e_(N-1) e_N e_(N-1) = κ₊ e_(N-1)")?;
    Ok((km, kp))
}

pub fn tl_report(rep: &HeckeRep) -> CheckReport {
    let base = |r: CheckReport| {
        r.with_params(rep.params.to_map())
            .with_param("N", rep.local_dim)
            .with_param("n", rep.sites)
    };
    match check_tl_quotient(rep) {
        Ok((km, kp)) => base(CheckReport::pass("tl-quotient"))
            .with_detail("kappa_minus", fmt_rational(&km))
            .with_detail("kappa_plus", fmt_rational(&kp)),
        Err(Error::RelationFailure { relation, site }) => {
            base(CheckReport::fail("tl-quotient", Failure::new(format!("{relation} ({site})"))))
        }
        Err(e) => base(CheckReport::fail("tl-quotient", Failure::new(e.to_string()))),
    }
}

/// Which element the B-type recursion conjugates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BRecursion {
    /// `J_i = g_i J_{i−1}^{(B)} g_i`, consistent with the transfer-matrix edges.
    #[default]
    Nested,
    /// `J_i = g_i J_{i−1}^{(A)} g_i` (with `J_0^{(A)} := g_0`); these do not
    /// commute pairwise in general.
    ViaTypeA,
}

fn murphy_range(rep: &HeckeRep, family: AlgebraFamily, i: usize) -> Result<()> {
    let n = rep.sites;
    let ok = match family {
        AlgebraFamily::A => (1..n).contains(&i),
        _ => i < n,
    };
    if ok {
        Ok(())
    } else {
        let range = match family {
            AlgebraFamily::A => format!("1..={}", n.saturating_sub(1)),
            _ => format!("0..={}", n - 1),
        };
        Err(Error::IndexOutOfRange { index: i, range })
    }
}

/// `J_0^{(C)} = g_1⁻¹…g_{n−1}⁻¹ g_N g_{n−1}…g_1 g_0`.
fn c_seed(rep: &HeckeRep) -> PolyMatrix {
    let n = rep.sites;
    let mut fs: Vec<&PolyMatrix> = (1..n).map(|i| rep.g_inv(i)).collect();
    fs.push(rep.gn());
    fs.extend((1..n).rev().map(|i| rep.g(i)));
    fs.push(rep.g0());
    prod(&fs)
}

fn c_seed_inv(rep: &HeckeRep) -> PolyMatrix {
    let n = rep.sites;
    let mut fs: Vec<&PolyMatrix> = vec![rep.g0_inv()];
    fs.extend((1..n).map(|i| rep.g_inv(i)));
    fs.push(rep.gn_inv());
    fs.extend((1..n).rev().map(|i| rep.g(i)));
    prod(&fs)
}

pub fn murphy(rep: &HeckeRep, family: AlgebraFamily, i: usize) -> Result<PolyMatrix> {
    murphy_with(rep, family, i, BRecursion::Nested)
}

pub fn murphy_with(rep: &HeckeRep, family: AlgebraFamily, i: usize, rec: BRecursion) -> Result<PolyMatrix> {
    murphy_range(rep, family, i)?;
    let conj = |j: usize, x: &PolyMatrix| prod(&[rep.g(j), x, rep.g(j)]);
    Ok(match family {
        AlgebraFamily::A => (2..=i).fold(rep.g(1).matmul(rep.g(1))?, |acc, j| conj(j, &acc)),
        AlgebraFamily::B => match rec {
            BRecursion::Nested => (1..=i).fold(rep.g0().clone(), |acc, j| conj(j, &acc)),
            BRecursion::ViaTypeA => match i {
                0 => rep.g0().clone(),
                1 => conj(1, rep.g0()),
                _ => conj(i, &murphy(rep, AlgebraFamily::A, i - 1)?),
            },
        },
        AlgebraFamily::C | AlgebraFamily::Tl2b => (1..=i).fold(c_seed(rep), |acc, j| conj(j, &acc)),
    })
}

/// The inverse element, built from generator inverses.
pub fn murphy_inverse(rep: &HeckeRep, family: AlgebraFamily, i: usize) -> Result<PolyMatrix> {
    murphy_range(rep, family, i)?;
    let conj = |j: usize, x: &PolyMatrix| prod(&[rep.g_inv(j), x, rep.g_inv(j)]);
    Ok(match family {
        AlgebraFamily::A => (2..=i).fold(rep.g_inv(1).matmul(rep.g_inv(1))?, |acc, j| conj(j, &acc)),
        AlgebraFamily::B => (1..=i).fold(rep.g0_inv().clone(), |acc, j| conj(j, &acc)),
        AlgebraFamily::C | AlgebraFamily::Tl2b => (1..=i).fold(c_seed_inv(rep), |acc, j| conj(j, &acc)),
    })
}

/// All Murphy elements of the family, in index order.
pub fn murphy_family(rep: &HeckeRep, family: AlgebraFamily) -> Result<Vec<(usize, PolyMatrix)>> {
    let start = if family == AlgebraFamily::A { 1 } else { 0 };
    let n = rep.sites;
    let mut out = Vec::new();
    for i in start..n {
        let prev = out.last().map(|(_, j): &(usize, PolyMatrix)| j.clone());
        let j = match (prev, i) {
            (Some(p), i) if i > start => prod(&[rep.g(i), &p, rep.g(i)]),
            _ => murphy(rep, family, i)?,
        };
        out.push((i, j));
    }
    Ok(out)
}

pub fn check_murphy_commutation(rep: &HeckeRep, family: AlgebraFamily) -> CheckReport {
    let name = format!("murphy-commute/{family}");
    let js = match murphy_family(rep, family) {
        Ok(js) => js,
        Err(e) => return CheckReport::fail(&name, Failure::new(e.to_string())),
    };
    commutation_report(&name, &js).with_params(rep.params.to_map()).with_param("N", rep.local_dim).with_param("n", rep.sites)
}

/// Pairwise commutation of a labelled list.
pub fn commutation_report(name: &str, js: &[(usize, PolyMatrix)]) -> CheckReport {
    for (a, (i, ji)) in js.iter().enumerate() {
        for (j, jj) in js.iter().skip(a + 1) {
            let (x, y) = (ji.matmul(jj).unwrap(), jj.matmul(ji).unwrap());
            if x != y {
                return CheckReport::fail(name, Failure::from_matrices(format!("[J{i},J{j}]"), &x, &y));
            }
        }
    }
    CheckReport::pass(name).with_detail("pairs", js.len() * js.len().saturating_sub(1) / 2)
}

/// Power sums of Murphy elements commute with every generator of the
/// family's algebra (for C the Laurent sums `Σ J^m + J^{−m}`).
pub fn check_symmetric_commutant(rep: &HeckeRep, family: AlgebraFamily, max_power: usize) -> CheckReport {
    let name = format!("central/{family}");
    let wrap = |r: CheckReport| r.with_params(rep.params.to_map()).with_param("N", rep.local_dim).with_param("n", rep.sites);
    let js = match murphy_family(rep, family) {
        Ok(js) => js,
        Err(e) => return wrap(CheckReport::fail(&name, Failure::new(e.to_string()))),
    };
    let laurent = matches!(family, AlgebraFamily::C | AlgebraFamily::Tl2b);
    let invs: Vec<PolyMatrix> = if laurent {
        js.iter().map(|(i, _)| murphy_inverse(rep, family, *i).unwrap()).collect()
    } else {
        Vec::new()
    };
    let l = rep.layout();
    let mut powers: Vec<PolyMatrix> = js.iter().map(|(_, j)| j.clone()).collect();
    let mut inv_powers: Vec<PolyMatrix> = invs.clone();
    let gens = rep.family_generators(family);
    for m in 1..=max_power {
        if m > 1 {
            powers = powers.iter().zip(&js).map(|(p, (_, j))| p.matmul(j).unwrap()).collect();
            inv_powers = inv_powers.iter().zip(&invs).map(|(p, j)| p.matmul(j).unwrap()).collect();
        }
        let mut sum = PolyMatrix::zeros(&l);
        for p in powers.iter().chain(inv_powers.iter()) {
            sum = sum.add(p).unwrap();
        }
        for (label, g) in &gens {
            let (x, y) = (sum.matmul(g).unwrap(), g.matmul(&sum).unwrap());
            if x != y {
                return wrap(CheckReport::fail(&name, Failure::from_matrices(format!("[p{m},{label}]"), &x, &y)));
            }
        }
    }
    wrap(CheckReport::pass(&name)).with_detail("max_power", max_power)
}

/// Images of the auxiliary-string map `σ_l`.
#[derive(Debug, Clone)]
pub struct AuxStringImage {
    pub l: usize,
    /// `σ_l(g_0) = g_l…g_1 g_0 g_1…g_l`
    pub g0: PolyMatrix,
    /// `σ_l(g_i) = g_{i+l}` for `i = 1…n−1−l`
    pub bulk: Vec<PolyMatrix>,
    /// Whether `(σ_l(g_0) − Q_0)(σ_l(g_0) + Q_0⁻¹) = 0`; informational.
    pub quadratic_holds: bool,
}

pub fn aux_string_image(rep: &HeckeRep, l: usize) -> Result<AuxStringImage> {
    let n = rep.sites;
    if l >= n {
        return Err(Error::IndexOutOfRange { index: l, range: format!("0..{n}") });
    }
    let mut fs: Vec<&PolyMatrix> = (1..=l).rev().map(|i| rep.g(i)).collect();
    fs.push(rep.g0());
    fs.extend((1..=l).map(|i| rep.g(i)));
    let s0 = prod(&fs);
    let bulk: Vec<PolyMatrix> = (1..n - l).map(|i| rep.g(i + l).clone()).collect();
    let mut checks = Vec::new();
    for k in 0..bulk.len().saturating_sub(1) {
        let (a, b) = (&bulk[k], &bulk[k + 1]);
        checks.push((format!("braid σ(g{})", k + 1), prod(&[a, b, a]), prod(&[b, a, b])));
    }
    for a in 0..bulk.len() {
        for b in (a + 2)..bulk.len() {
            checks.push(commute_check(format!("commute σ(g{}),σ(g{})", a + 1, b + 1), &bulk[a], &bulk[b]));
        }
    }
    if let Some(s1) = bulk.first() {
        checks.push(("boundary braid σ".into(), prod(&[s1, &s0, s1, &s0]), prod(&[&s0, s1, &s0, s1])));
    }
    for (k, b) in bulk.iter().enumerate().skip(1) {
        checks.push(commute_check(format!("commute σ(g0),σ(g{})", k + 1), &s0, b));
    }
    if let Some(f) = first_failure(checks) {
        return Err(Error::RelationFailure { relation: f.relation, site: format!("l={l}") });
    }
    let (name, lhs, rhs) = quad_check(String::new(), &s0, &rep.params.q0);
    let _ = name;
    Ok(AuxStringImage { l, g0: s0, bulk, quadratic_holds: lhs == rhs })
}

pub fn aux_string_report(rep: &HeckeRep, l: usize) -> CheckReport {
    let name = format!("aux-string/l={l}");
    match aux_string_image(rep, l) {
        Ok(img) => CheckReport::pass(&name).with_detail("quadratic_holds", img.quadratic_holds),
        Err(e) => CheckReport::fail(&name, Failure::new(e.to_string())),
    }
}

/// Whether the representation's generators are all invertible with the
/// inverses returned by [`generator_inverse`].
pub fn check_inverses(rep: &HeckeRep) -> CheckReport {
    let n = rep.sites;
    let id = rep.identity();
    for i in 0..=n {
        if (1..n).contains(&i) || i == 0 || i == n {
            let (g, gi) = (rep.generator(i).unwrap(), rep.generator_inv(i).unwrap());
            let r = expect_equal("inverses", &format!("g{i}·g{i}⁻¹ = I"), &g.matmul(gi).unwrap(), &id);
            if !r.is_pass() {
                return r;
            }
        }
    }
    CheckReport::pass("inverses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_ring::{int, rat};

    fn params() -> Params {
        Params::new(rat(3, 2), rat(5, 7), rat(2, 5), rat(4, 3), rat(7, 2), rat(1, 3), rat(-2, 9))
    }

    #[test]
    fn selects_swap_upper_variant() {
        for n in [2, 3] {
            let rep = build_gln_rep(n, 2, &params()).unwrap();
            assert_eq!(rep.variant, Some(BulkVariant::SwapUpper));
        }
    }

    #[test]
    fn gl2_bulk_matrix() {
        let rep = build_gln_rep(2, 2, &params()).unwrap();
        let q = rat(3, 2);
        let qi = rat(2, 3);
        let z = int(0);
        let o = int(1);
        let expect = PolyMatrix::from_rationals(
            &[2, 2],
            &[
                vec![q.clone(), z.clone(), z.clone(), z.clone()],
                vec![z.clone(), z.clone(), o.clone(), z.clone()],
                vec![z.clone(), o.clone(), &q - &qi, z.clone()],
                vec![z.clone(), z.clone(), z.clone(), q.clone()],
            ],
        )
        .unwrap();
        assert_eq!(rep.g_local, expect);
    }

    #[test]
    fn bad_boundary_constraint() {
        let mut p = params();
        p.x0m = &p.x0m * int(2);
        assert!(matches!(build_gln_rep(2, 2, &p), Err(Error::ConstraintViolation(_))));
    }

    #[test]
    fn inverse_examples() {
        let i = PolyMatrix::identity(&[2]);
        assert_eq!(generator_inverse(&i, &int(1), &int(1)).unwrap(), i);
        assert!(matches!(generator_inverse(&unit(2, 0, 1), &int(1), &int(1)), Err(Error::NotInvertible)));
    }
}
