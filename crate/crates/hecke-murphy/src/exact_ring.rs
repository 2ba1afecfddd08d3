//! Exact rationals and the Laurent-polynomial ring in one formal variable.
//!
//! The variable is written `u` everywhere; in two-boundary constructions it
//! plays the role of `v = e^{-2δ}`, in all others `u = e^{-2λ}`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `x^k` for any integer `k`; `x` must be nonzero when `k < 0`.
pub fn rpow(x: &Rational, k: i32) -> Rational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    let mut out = Rational::one();
    for _ in 0..k.unsigned_abs() {
        out *= &base;
    }
    out
}

/// Canonical `"num/den"` rendering (the denominator is always written).
pub fn fmt_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"p/q"` or `"p"`; rejects a zero denominator.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let d: BigInt = d.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(n, d))
}

/// A finite sum `Σ c_k u^k` with `k ∈ ℤ`. Terms are kept sorted by degree and
/// no zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i32, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, deg: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(deg, c)] }
        }
    }

    /// The formal variable `u`.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// Builds from arbitrary `(degree, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let mut v: Vec<(i32, Rational)> = terms.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, Rational)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc += c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// True for the zero polynomial and for pure degree-0 terms.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(k, _)| *k == 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn min_deg(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_deg(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    pub fn coeff(&self, deg: i32) -> Rational {
        match self.terms.binary_search_by_key(&deg, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn terms(&self) -> &[(i32, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    /// Multiplies by `u^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(d, c)| (d + k, c.clone())).collect(),
        }
    }

    /// Inverse of a single term `c·u^k`.
    pub fn invert_unit(&self) -> Result<Self> {
        match self.terms.as_slice() {
            [(k, c)] => Ok(Self::monomial(c.recip(), -k)),
            _ => Err(Error::NotAUnit(self.to_string())),
        }
    }

    /// `d/dλ` at `λ = 0` under `u = e^{-2λ}`, i.e. `Σ (−2k)·c_k`.
    pub fn derivative_at_one(&self) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (k, c)| acc + c * int(-2 * *k as i64))
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (k, c)| acc + c * rpow(x, *k))
    }

    /// Substitutes `u ↦ c·u^m`.
    pub fn subst_monomial(&self, c: &Rational, m: i32) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, x)| (k * m, x * rpow(c, *k))))
    }

    /// Exact ratio `a / b` over the rational-function field, if `a` is a
    /// rational-function multiple of `b`. Any two Laurent polynomials with
    /// `b ≠ 0` are proportional in that field, so this only fails for `b = 0`
    /// with `a ≠ 0`; `(0, 0)` gives ratio 1.
    pub fn proportional(a: &Self, b: &Self) -> Option<Ratio> {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => Some(Ratio::one()),
            (false, true) => None,
            _ => Some(Ratio::new(a.clone(), b.clone())),
        }
    }

    /// Ratio restricted to Laurent-polynomial multiples (`a = r·b` with `r`
    /// itself a Laurent polynomial).
    pub fn divides_exactly(a: &Self, b: &Self) -> Option<Self> {
        let r = Self::proportional(a, b)?;
        r.as_laurent()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| match k {
                0 => fmt_rational(c),
                _ => format!("{}*u^{}", fmt_rational(c), k),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn merge(a: &[(i32, Rational)], b: &[(i32, Rational)], negate_b: bool) -> LaurentPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    LaurentPoly { terms: out }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (k, c) = &rhs.terms[0];
            return LaurentPoly {
                terms: self.terms.iter().map(|(d, x)| (d + k, x * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return rhs * self;
        }
        let lo = self.terms[0].0 + rhs.terms[0].0;
        let hi = self.terms.last().unwrap().0 + rhs.terms.last().unwrap().0;
        let mut acc = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                acc[(a + b - lo) as usize] += x * y;
            }
        }
        LaurentPoly {
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i32, c))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

// ---- univariate polynomial helpers (dense, ascending, over ℚ) ----

fn to_dense(p: &LaurentPoly) -> (i32, Vec<Rational>) {
    let lo = p.min_deg().unwrap_or(0);
    let hi = p.max_deg().unwrap_or(0);
    let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
    for (k, c) in p.terms() {
        v[(k - lo) as usize] = c.clone();
    }
    (lo, v)
}

fn from_dense(lo: i32, v: &[Rational]) -> LaurentPoly {
    LaurentPoly::from_terms(v.iter().enumerate().map(|(i, c)| (lo + i as i32, c.clone())))
}

fn trim(v: &mut Vec<Rational>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        v.push(Rational::zero());
    }
}

fn is_zero_poly(v: &[Rational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    while !is_zero_poly(&r) && r.len() > db {
        let dr = r.len() - 1;
        let f = &r[dr] / &b[db];
        for (i, bi) in b.iter().enumerate() {
            let t = &f * bi;
            r[dr - db + i] -= t;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn poly_div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return vec![Rational::zero()];
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let f = &r[k + db] / &b[db];
        for i in 0..=db {
            let t = &f * &b[i];
            r[k + i] -= t;
        }
        q[k] = f;
    }
    q
}

fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !is_zero_poly(&y) {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// A reduced quotient of Laurent polynomials `num / den`.
///
/// Normal form: `den` has no factor of `u`, a nonzero constant term, and a
/// leading coefficient of 1; common polynomial factors are cancelled.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ratio {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl Ratio {
    pub fn one() -> Self {
        Self { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "ratio with zero denominator");
        if num.is_zero() {
            return Self { num, den: LaurentPoly::one() };
        }
        let (a, p) = to_dense(&num);
        let (b, r) = to_dense(&den);
        let g = poly_gcd(&p, &r);
        let p = poly_div_exact(&p, &g);
        let r = poly_div_exact(&r, &g);
        let lead = r.last().unwrap().clone();
        let p: Vec<Rational> = p.iter().map(|c| c / &lead).collect();
        let r: Vec<Rational> = r.iter().map(|c| c / &lead).collect();
        Self { num: from_dense(a - b, &p), den: from_dense(0, &r) }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The ratio as a Laurent polynomial, when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    /// The ratio as a plain rational number, when it has no `u` dependence.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// True when the ratio is `c·u^k`.
    pub fn is_monomial(&self) -> bool {
        self.den.is_one() && self.num.is_monomial()
    }

    pub fn mul(&self, other: &Ratio) -> Ratio {
        Ratio::new(&self.num * &other.num, &self.den * &other.den)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ratio({self})")
    }
}

/// Sign-insensitive helper used when sampling: `|x| ≠ 1` and `x ≠ 0`.
pub fn is_generic_unit_free(x: &Rational) -> bool {
    !x.is_zero() && !x.abs().is_one()
}
