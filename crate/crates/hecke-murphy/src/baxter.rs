//! Spectral-parameter dependent solutions built from Hecke generators, and
//! the Yang–Baxter, reflection, unitarity and crossing identities they obey.
//!
//! Every object is normalised to have polynomial entries in the multiplicative
//! variable `u = e^{−2λ}`:
//!
//! * `Ř̂(u) = g − u g⁻¹`
//! * `K̂(u) = g₀ + c₋u − u² g₀⁻¹`
//! * `K̄̂(u) = g_N + c₊u − u² g_N⁻¹`

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_ring::{fmt_rational, rpow, LaurentPoly, Rational};
use crate::hecke::{left_boundary, right_boundary, twist_matrix, generator_inverse, HeckeRep};
use crate::report::{CheckReport, Failure};
use crate::tensor::{diagonal, PolyMatrix};

/// Default specialisations of the second spectral variable.
pub fn default_points() -> Vec<Rational> {
    use crate::exact_ring::rat;
    vec![rat(2, 3), rat(-5, 7), rat(11, 3)]
}

/// `m(c·u^k)` for a matrix `m(u)`.
pub fn at(m: &PolyMatrix, c: &Rational, k: i32) -> PolyMatrix {
    m.subst_monomial(c, k)
}

/// `m(u^k)`.
pub fn at_power(m: &PolyMatrix, k: i32) -> PolyMatrix {
    m.subst_monomial(&Rational::one(), k)
}

/// `g − u·g⁻¹`.
pub fn baxterize_bulk(g: &PolyMatrix, g_inv: &PolyMatrix) -> PolyMatrix {
    g.sub(&g_inv.scale(&LaurentPoly::var())).expect("same layout")
}

/// `g + c·u − u²·g⁻¹`.
pub fn baxterize_boundary(g: &PolyMatrix, g_inv: &PolyMatrix, c: &Rational) -> PolyMatrix {
    let l = g.layout().to_vec();
    let lin = PolyMatrix::scalar(&l, &LaurentPoly::monomial(c.clone(), 1));
    g.add(&lin)
        .and_then(|m| m.sub(&g_inv.scale(&LaurentPoly::monomial(Rational::one(), 2))))
        .expect("same layout")
}

pub fn r_hat_local(rep: &HeckeRep) -> PolyMatrix {
    baxterize_bulk(&rep.g_local, &rep.g_inv_local)
}

pub fn k_minus_hat_local(rep: &HeckeRep) -> PolyMatrix {
    baxterize_boundary(&rep.g0_local, &rep.g0_inv_local, &rep.params.c_minus)
}

pub fn k_bar_plus_hat_local(rep: &HeckeRep) -> PolyMatrix {
    baxterize_boundary(&rep.gn_local, &rep.gn_inv_local, &rep.params.c_plus)
}

/// `Ř̂_{i,i+1}(u)` on the chain, `1 ≤ i < n`.
pub fn r_hat(rep: &HeckeRep, i: usize) -> Result<PolyMatrix> {
    if i == 0 || i >= rep.sites {
        return Err(Error::IndexOutOfRange { index: i, range: format!("1..{}", rep.sites) });
    }
    PolyMatrix::embed(&r_hat_local(rep), &[i - 1, i], &rep.layout())
}

/// `K̂₁(u)` on the chain.
pub fn k_minus_hat(rep: &HeckeRep) -> PolyMatrix {
    PolyMatrix::embed(&k_minus_hat_local(rep), &[0], &rep.layout()).expect("site 1 exists")
}

/// `K̄̂_N(u)` on the chain.
pub fn k_bar_plus_hat(rep: &HeckeRep) -> PolyMatrix {
    PolyMatrix::embed(&k_bar_plus_hat_local(rep), &[rep.sites - 1], &rep.layout()).expect("site N exists")
}

fn mul(ms: &[&PolyMatrix]) -> PolyMatrix {
    PolyMatrix::product(ms).expect("same-shape product")
}

fn annotate(r: CheckReport, rep: &HeckeRep) -> CheckReport {
    r.with_params(rep.params.to_map()).with_param("N", rep.local_dim)
}

/// Yang–Baxter equation for a local `Ř(u)` on three factors, with `u₁`
/// formal and `u₂` running over `points`.
pub fn check_ybe_local(r: &PolyMatrix, points: &[Rational]) -> CheckReport {
    let n = r.layout()[0];
    let l = [n, n, n];
    let e12 = |m: &PolyMatrix| PolyMatrix::embed(m, &[0, 1], &l).unwrap();
    let e23 = |m: &PolyMatrix| PolyMatrix::embed(m, &[1, 2], &l).unwrap();
    let (r12, r23) = (e12(r), e23(r));
    for u2 in points {
        let diff = at(r, &u2.recip(), 1);
        let fixed = at(r, u2, 0);
        let lhs = mul(&[&e12(&diff), &r23, &e12(&fixed)]);
        let rhs = mul(&[&e23(&fixed), &r12, &e23(&diff)]);
        if lhs != rhs {
            return CheckReport::fail("ybe", Failure::from_matrices(format!("ybe at u2={}", fmt_rational(u2)), &lhs, &rhs));
        }
    }
    CheckReport::pass("ybe").with_detail("points", points.len())
}

pub fn check_ybe(rep: &HeckeRep, points: &[Rational]) -> CheckReport {
    annotate(check_ybe_local(&r_hat_local(rep), points), rep)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    Left,
    Right,
}

/// Reflection equation on two factors; the boundary matrix sits on the
/// first factor for [`End::Left`] and on the second for [`End::Right`].
pub fn check_re_local(r: &PolyMatrix, k: &PolyMatrix, end: End, points: &[Rational]) -> CheckReport {
    let n = r.layout()[0];
    let l = [n, n];
    let site = if end == End::Left { 0 } else { 1 };
    let name = if end == End::Left { "re/left" } else { "re/right" };
    let kk = |m: &PolyMatrix| PolyMatrix::embed(m, &[site], &l).unwrap();
    let k1 = kk(k);
    for u2 in points {
        let r_diff = at(r, &u2.recip(), 1);
        let r_sum = at(r, u2, 1);
        let k2 = kk(&at(k, u2, 0));
        let lhs = mul(&[&r_diff, &k1, &r_sum, &k2]);
        let rhs = mul(&[&k2, &r_sum, &k1, &r_diff]);
        if lhs != rhs {
            return CheckReport::fail(name, Failure::from_matrices(format!("{name} at u2={}", fmt_rational(u2)), &lhs, &rhs));
        }
    }
    CheckReport::pass(name).with_detail("points", points.len())
}

pub fn check_re(rep: &HeckeRep, end: End, points: &[Rational]) -> CheckReport {
    let k = match end {
        End::Left => k_minus_hat_local(rep),
        End::Right => k_bar_plus_hat_local(rep),
    };
    annotate(check_re_local(&r_hat_local(rep), &k, end, points), rep)
}

/// `X(u)·X(u⁻¹) ∝ I`; returns the ratio.
pub fn unitarity_ratio(x: &PolyMatrix) -> Option<crate::exact_ring::Ratio> {
    let prod = x.matmul(&at_power(x, -1)).ok()?;
    PolyMatrix::proportional(&prod, &PolyMatrix::identity(x.layout())).filter(|r| !r.is_zero())
}

pub fn check_unitarity_local(objects: &[(&str, &PolyMatrix)]) -> CheckReport {
    let mut report = CheckReport::pass("unitarity");
    for (name, x) in objects {
        match unitarity_ratio(x) {
            Some(r) => report = report.with_detail(format!("ratio_{name}"), r),
            None => {
                let prod = x.matmul(&at_power(x, -1)).unwrap();
                let id = PolyMatrix::identity(x.layout());
                let pivot = prod.entry(0, 0);
                let bad = id.scale(&pivot);
                return CheckReport::fail("unitarity", Failure::from_matrices(format!("{name}(u)·{name}(1/u) ∝ I"), &prod, &bad));
            }
        }
    }
    report
}

pub fn check_unitarity(rep: &HeckeRep) -> CheckReport {
    let (r, k, kb) = (r_hat_local(rep), k_minus_hat_local(rep), k_bar_plus_hat_local(rep));
    annotate(check_unitarity_local(&[("R", &r), ("K", &k), ("Kbar", &kb)]), rep)
}

/// `R^{t₁}(u)·M₁·R(χ/u)^{t₂}·M₁⁻¹` for `R = P·Ř`, which is `∝ I` exactly
/// when `χ` is the crossing unit.
pub fn crossing_product(rep: &HeckeRep, chi: &Rational) -> PolyMatrix {
    let n = rep.local_dim;
    let l = [n, n];
    let r = PolyMatrix::swap(n).matmul(&r_hat_local(rep)).unwrap();
    let m1 = PolyMatrix::embed(&rep.m_local, &[0], &l).unwrap();
    let m1_inv = PolyMatrix::embed(&rep.m_inv_local, &[0], &l).unwrap();
    let a = r.partial_transpose(0).unwrap();
    let b = at(&r, chi, -1).partial_transpose(1).unwrap();
    mul(&[&a, &m1, &b, &m1_inv])
}

/// Candidates `±q^k`, `|k| ≤ 2N`, in a fixed order.
pub fn crossing_candidates(rep: &HeckeRep) -> Vec<Rational> {
    let q = &rep.params.q;
    let bound = 2 * rep.local_dim as i32;
    let mut out = Vec::new();
    for k in -bound..=bound {
        let x = rpow(q, k);
        out.push(-x.clone());
        out.push(x);
    }
    out
}

/// Finds the unique crossing unit `χ` among [`crossing_candidates`].
pub fn calibrate_crossing(rep: &HeckeRep) -> Result<Rational> {
    let id = PolyMatrix::identity(&[rep.local_dim, rep.local_dim]);
    let hits: Vec<Rational> = crossing_candidates(rep)
        .into_iter()
        .filter(|chi| {
            PolyMatrix::proportional(&crossing_product(rep, chi), &id).is_some_and(|r| !r.is_zero())
        })
        .collect();
    match hits.as_slice() {
        [chi] => Ok(chi.clone()),
        [] => Err(Error::CalibrationFailure("no candidate ±q^k satisfies the crossing identity".into())),
        many => Err(Error::CalibrationFailure(format!(
            "{} candidates satisfy the crossing identity: {}",
            many.len(),
            many.iter().map(fmt_rational).collect::<Vec<_>>().join(", ")
        ))),
    }
}

/// The exponent `k` with `χ = q^k`, if there is one among the candidates.
pub fn crossing_exponent(rep: &HeckeRep, chi: &Rational) -> Option<i32> {
    let bound = 2 * rep.local_dim as i32;
    (-bound..=bound).find(|&k| rpow(&rep.params.q, k) == *chi)
}

pub fn crossing_report(rep: &HeckeRep) -> CheckReport {
    match calibrate_crossing(rep) {
        Ok(chi) => {
            let ratio = PolyMatrix::proportional(&crossing_product(rep, &chi), &PolyMatrix::identity(&[rep.local_dim, rep.local_dim])).unwrap();
            let mut r = annotate(CheckReport::pass("crossing"), rep).with_ratio(&ratio).with_detail("chi", fmt_rational(&chi));
            if let Some(k) = crossing_exponent(rep, &chi) {
                r = r.with_detail("chi_exponent", k);
            }
            r
        }
        Err(e) => annotate(CheckReport::fail("crossing", Failure::new(e.to_string())), rep),
    }
}

/// `diag(q^{N−j})`, `j = 1…N`.
fn gauge(n: usize, q: &Rational) -> PolyMatrix {
    diagonal(&(1..=n as i32).map(|j| rpow(q, n as i32 - j)).collect::<Vec<_>>())
}

/// Everything the transfer matrices need beyond the representation.
#[derive(Clone, Debug)]
pub struct BaxterKit {
    pub rep: HeckeRep,
    /// Crossing unit `χ`: `λ → −λ−2ρ` acts as `u → χ/u`.
    pub chi: Rational,
    /// Image of the half shift: `λ → λ − iρ` acts as `u → χ_h·u`.
    pub chi_h: Rational,
    /// `Ř̂(u)`, local.
    pub r_check: PolyMatrix,
    /// `R̂(u) = P·Ř̂(u)`, local.
    pub r: PolyMatrix,
    pub k_minus: PolyMatrix,
    pub k_bar_plus: PolyMatrix,
    /// Boundary matrix entering `tr₀{M₀ K⁺₀ …}` on the right.
    pub dual_plus: PolyMatrix,
    /// Boundary matrix entering `𝕂⁺ K⁻` on the left, as a function of its
    /// already shifted argument.
    pub dual_minus: PolyMatrix,
}

impl BaxterKit {
    /// Calibrates `χ`, then fixes the sign of `χ_h = ±q^N` by the two
    /// auxiliary-trace conditions.
    pub fn new(rep: &HeckeRep) -> Result<Self> {
        let chi = calibrate_crossing(rep)?;
        let qn = rpow(&rep.params.q, rep.local_dim as i32);
        let mut tried = Vec::new();
        for chi_h in [qn.clone(), -qn] {
            let kit = Self::with_units(rep, chi.clone(), chi_h.clone());
            let reports = crate::transfer::check_condition2(&kit);
            if reports.iter().all(CheckReport::is_pass) {
                return Ok(kit);
            }
            tried.push(fmt_rational(&chi_h));
        }
        Err(Error::ConditionFailure(format!(
            "no half-shift unit among [{}] satisfies both trace conditions",
            tried.join(", ")
        )))
    }

    /// A kit with the given units and no selection.
    pub fn with_units(rep: &HeckeRep, chi: Rational, chi_h: Rational) -> Self {
        let r_check = r_hat_local(rep);
        let r = PolyMatrix::swap(rep.local_dim).matmul(&r_check).unwrap();
        let (dual_plus, dual_minus) = duals(rep, &chi_h);
        Self {
            rep: rep.clone(),
            chi,
            chi_h,
            r_check,
            r,
            k_minus: k_minus_hat_local(rep),
            k_bar_plus: k_bar_plus_hat_local(rep),
            dual_plus,
            dual_minus,
        }
    }

    /// `R̂(c·v^k)` placed on factors `(a, b)` (in that order) of `layout`.
    pub fn r_at(&self, a: usize, b: usize, c: &Rational, k: i32, layout: &[usize]) -> PolyMatrix {
        PolyMatrix::embed(&at(&self.r, c, k), &[a, b], layout).unwrap()
    }

    /// `Ř̂(c·v^k)` on sites `(i, i+1)` (1-based `i`) of the chain.
    pub fn r_check_at(&self, i: usize, c: &Rational, k: i32) -> PolyMatrix {
        PolyMatrix::embed(&at(&self.r_check, c, k), &[i - 1, i], &self.rep.layout()).unwrap()
    }

    pub fn right_degenerate(&self) -> bool {
        self.rep.gn_local.scalar_value().is_some()
    }

    pub fn left_degenerate(&self) -> bool {
        self.rep.g0_local.scalar_value().is_some()
    }
}

/// Gauge-transformed boundary matrices with shifted boundary parameters:
///
/// * `K⁺(u) = H⁻¹ K̄̂[Q_N q^{2−N}](u/χ_h) H`
/// * `K⁻(w) = H K̂[Q_0 q^{N−2}](w) H⁻¹`
///
/// with `H = diag(q^{N−j})`. A scalar boundary generator has the identity as
/// its dual.
fn duals(rep: &HeckeRep, chi_h: &Rational) -> (PolyMatrix, PolyMatrix) {
    let n = rep.local_dim;
    let p = &rep.params;
    let q = &p.q;
    let h = gauge(n, q);
    let h_inv = gauge(n, &q.recip());
    let id = PolyMatrix::identity(&[n]);
    let plus = if rep.gn_local.scalar_value().is_some() {
        id.clone()
    } else {
        let qt = &p.qn * rpow(q, 2 - n as i32);
        let g = right_boundary(n, &qt, &p.xnp, &p.xnm);
        let gi = generator_inverse(&g, &qt, &qt).expect("shifted boundary is invertible");
        let k = at(&baxterize_boundary(&g, &gi, &p.c_plus), &chi_h.recip(), 1);
        mul(&[&h_inv, &k, &h])
    };
    let minus = if rep.g0_local.scalar_value().is_some() {
        id
    } else {
        let qt = &p.q0 * rpow(q, n as i32 - 2);
        let g = left_boundary(n, &qt, &p.x0p, &p.x0m);
        let gi = generator_inverse(&g, &qt, &qt).expect("shifted boundary is invertible");
        mul(&[&h, &baxterize_boundary(&g, &gi, &p.c_minus), &h_inv])
    };
    (plus, minus)
}

/// `tr₀{M₀ Ř̂_{10}(u²)}` on one auxiliary and one physical factor, which
/// must be a scalar `f(u)·I`.
pub fn aux_trace(rep: &HeckeRep, m: &PolyMatrix) -> PolyMatrix {
    let n = rep.local_dim;
    let l = [n, n];
    let r = PolyMatrix::embed(&at_power(&r_hat_local(rep), 2), &[1, 0], &l).unwrap();
    let m0 = PolyMatrix::embed(m, &[0], &l).unwrap();
    m0.matmul(&r).unwrap().partial_trace_first().unwrap()
}

pub fn twist(rep: &HeckeRep) -> PolyMatrix {
    twist_matrix(rep.local_dim, &rep.params.q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_ring::rat;
    use crate::hecke::{build_gln_rep, Params};

    fn rep(n: usize) -> HeckeRep {
        let p = Params::new(rat(3, 2), rat(5, 7), rat(2, 5), rat(4, 3), rat(7, 2), rat(1, 3), rat(-2, 9));
        build_gln_rep(n, 2, &p).unwrap()
    }

    #[test]
    fn regularity() {
        let r = rep(2);
        let at_one = at(&r_hat_local(&r), &Rational::one(), 0);
        assert_eq!(at_one.scalar_value().unwrap(), LaurentPoly::constant(rat(3, 2) - rat(2, 3)));
    }

    #[test]
    fn crossing_unit_is_q_to_2n() {
        for n in [2, 3] {
            let r = rep(n);
            assert_eq!(calibrate_crossing(&r).unwrap(), rpow(&rat(3, 2), 2 * n as i32));
        }
    }
}
