//! Sparse square matrices over the Laurent ring, tagged with a tensor layout.
//!
//! Composite indices are row-major with factor 0 the most significant digit,
//! so the auxiliary space (factor 0) is the leftmost tensor factor and
//! `partial_trace_first` is a sum over leading blocks.

use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact_ring::{LaurentPoly, Ratio, Rational};

type Row = Vec<(usize, LaurentPoly)>;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    layout: Vec<usize>,
    rows: Vec<Row>,
}

/// Below this dimension products run on the calling thread.
const PAR_THRESHOLD: usize = 48;

fn strides(layout: &[usize]) -> Vec<usize> {
    let mut s = vec![1; layout.len()];
    for f in (0..layout.len().saturating_sub(1)).rev() {
        s[f] = s[f + 1] * layout[f + 1];
    }
    s
}

impl PolyMatrix {
    pub fn zeros(layout: &[usize]) -> Self {
        let dim = layout.iter().product();
        Self { dim, layout: layout.to_vec(), rows: vec![Vec::new(); dim] }
    }

    pub fn identity(layout: &[usize]) -> Self {
        Self::scalar(layout, &LaurentPoly::one())
    }

    pub fn scalar(layout: &[usize], p: &LaurentPoly) -> Self {
        let mut m = Self::zeros(layout);
        if !p.is_zero() {
            for (i, row) in m.rows.iter_mut().enumerate() {
                row.push((i, p.clone()));
            }
        }
        m
    }

    /// Dense constant matrix from rational rows.
    pub fn from_rationals(layout: &[usize], rows: &[Vec<Rational>]) -> Result<Self> {
        let dim: usize = layout.iter().product();
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "expected {dim}x{dim} rows for layout {layout:?}"
            )));
        }
        Self::from_entries(
            layout,
            rows.iter().enumerate().flat_map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .map(move |(j, c)| (i, j, LaurentPoly::constant(c.clone())))
            }),
        )
    }

    /// Sums repeated coordinates and drops zeros.
    pub fn from_entries<I>(layout: &[usize], entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, LaurentPoly)>,
    {
        let mut m = Self::zeros(layout);
        let mut raw: Vec<Vec<(usize, LaurentPoly)>> = vec![Vec::new(); m.dim];
        for (r, c, p) in entries {
            if r >= m.dim || c >= m.dim {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({r},{c}) outside dim {}",
                    m.dim
                )));
            }
            raw[r].push((c, p));
        }
        for (i, mut row) in raw.into_iter().enumerate() {
            row.sort_by_key(|e| e.0);
            let mut out: Row = Vec::with_capacity(row.len());
            for (c, p) in row {
                match out.last_mut() {
                    Some((lc, lp)) if *lc == c => *lp = &*lp + &p,
                    _ => out.push((c, p)),
                }
            }
            out.retain(|(_, p)| !p.is_zero());
            m.rows[i] = out;
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn layout(&self) -> &[usize] {
        &self.layout
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&LaurentPoly> {
        let row = &self.rows[r];
        row.binary_search_by_key(&c, |e| e.0).ok().map(|i| &row[i].1)
    }

    pub fn entry(&self, r: usize, c: usize) -> LaurentPoly {
        self.get(r, c).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Nonzero entries in (row, col) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, p)| (i, *j, p)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Same entries under a different factorisation of the same dimension.
    pub fn with_layout(mut self, layout: &[usize]) -> Result<Self> {
        if layout.iter().product::<usize>() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "layout {layout:?} does not factor dim {}",
                self.dim
            )));
        }
        self.layout = layout.to_vec();
        Ok(self)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.layout != other.layout {
            return Err(Error::DimensionMismatch(format!(
                "layouts {:?} and {:?}",
                self.layout, other.layout
            )));
        }
        Ok(())
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
                    let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
                    if ca < cb {
                        out.push(a[i].clone());
                        i += 1;
                    } else if cb < ca {
                        let p = if negate { -&b[j].1 } else { b[j].1.clone() };
                        out.push((cb, p));
                        j += 1;
                    } else {
                        let p = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                        if !p.is_zero() {
                            out.push((ca, p));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                out
            })
            .collect();
        Self { dim: self.dim, layout: self.layout.clone(), rows }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.combine(other, false))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.combine(other, true))
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        self.map_entries(|e| e * p)
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.map_entries(|e| e.scale(c))
    }

    /// Applies `f` entrywise, dropping entries that become zero.
    pub fn map_entries<F: Fn(&LaurentPoly) -> LaurentPoly>(&self, f: F) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .filter_map(|(j, p)| {
                        let q = f(p);
                        (!q.is_zero()).then_some((*j, q))
                    })
                    .collect()
            })
            .collect();
        Self { dim: self.dim, layout: self.layout.clone(), rows }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let work = |row: &Row| -> Row {
            let mut acc: Vec<Option<LaurentPoly>> = vec![None; self.dim];
            let mut touched = Vec::new();
            for (k, a) in row {
                for (j, b) in &other.rows[*k] {
                    let prod = a * b;
                    match &mut acc[*j] {
                        Some(x) => *x = &*x + &prod,
                        slot @ None => {
                            *slot = Some(prod);
                            touched.push(*j);
                        }
                    }
                }
            }
            touched.sort_unstable();
            touched
                .into_iter()
                .filter_map(|j| acc[j].take().filter(|p| !p.is_zero()).map(|p| (j, p)))
                .collect()
        };
        let rows: Vec<Row> = if self.dim >= PAR_THRESHOLD {
            self.rows.par_iter().map(work).collect()
        } else {
            self.rows.iter().map(work).collect()
        };
        Ok(Self { dim: self.dim, layout: self.layout.clone(), rows })
    }

    /// Left-to-right product of a non-empty list.
    pub fn product(factors: &[&PolyMatrix]) -> Result<Self> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::DimensionMismatch("empty product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, m| acc.matmul(m))
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.matmul(other)?.sub(&other.matmul(self)?)
    }

    pub fn kron(&self, other: &Self) -> Self {
        let mut layout = self.layout.clone();
        layout.extend_from_slice(&other.layout);
        let dim = self.dim * other.dim;
        let mut rows = vec![Vec::new(); dim];
        for (ia, ra) in self.rows.iter().enumerate() {
            for (ib, rb) in other.rows.iter().enumerate() {
                let row = &mut rows[ia * other.dim + ib];
                for (ja, pa) in ra {
                    for (jb, pb) in rb {
                        row.push((ja * other.dim + jb, pa * pb));
                    }
                }
            }
        }
        Self { dim, layout, rows }
    }

    /// Places `op` on the listed tensor factors (in that order) of `layout`,
    /// acting as the identity elsewhere.
    pub fn embed(op: &PolyMatrix, at: &[usize], layout: &[usize]) -> Result<Self> {
        let sub: Vec<usize> = at
            .iter()
            .map(|&f| {
                layout.get(f).copied().ok_or_else(|| {
                    Error::DimensionMismatch(format!("factor {f} outside layout {layout:?}"))
                })
            })
            .collect::<Result<_>>()?;
        let mut seen = at.to_vec();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != at.len() || sub.iter().product::<usize>() != op.dim {
            return Err(Error::DimensionMismatch(format!(
                "operator of dim {} cannot act on factors {at:?} of {layout:?}",
                op.dim
            )));
        }
        let full = strides(layout);
        let local = strides(&sub);
        let dim: usize = layout.iter().product();
        let rows = (0..dim)
            .map(|r| {
                let mut rs = 0;
                let mut base = r;
                for (k, &f) in at.iter().enumerate() {
                    let d = (r / full[f]) % layout[f];
                    rs += d * local[k];
                    base -= d * full[f];
                }
                let mut row: Row = op.rows[rs]
                    .iter()
                    .map(|(cs, p)| {
                        let c = at
                            .iter()
                            .enumerate()
                            .fold(base, |acc, (k, &f)| acc + ((cs / local[k]) % sub[k]) * full[f]);
                        (c, p.clone())
                    })
                    .collect();
                row.sort_by_key(|e| e.0);
                row
            })
            .collect();
        Ok(Self { dim, layout: layout.to_vec(), rows })
    }

    /// Traces out factor 0.
    pub fn partial_trace_first(&self) -> Result<Self> {
        if self.layout.len() < 2 {
            return Err(Error::DimensionMismatch(
                "partial trace needs at least two factors".into(),
            ));
        }
        let d0 = self.layout[0];
        let rest = self.dim / d0;
        let mut entries = Vec::new();
        for a in 0..d0 {
            for r in 0..rest {
                for (c, p) in &self.rows[a * rest + r] {
                    if c / rest == a {
                        entries.push((r, c % rest, p.clone()));
                    }
                }
            }
        }
        Self::from_entries(&self.layout[1..], entries)
    }

    pub fn partial_transpose(&self, factor: usize) -> Result<Self> {
        if factor >= self.layout.len() {
            return Err(Error::DimensionMismatch(format!(
                "factor {factor} outside layout {:?}",
                self.layout
            )));
        }
        let s = strides(&self.layout)[factor];
        let d = self.layout[factor];
        let entries = self.entries().map(|(r, c, p)| {
            let (dr, dc) = ((r / s) % d, (c / s) % d);
            (r - dr * s + dc * s, c - dc * s + dr * s, p.clone())
        });
        Self::from_entries(&self.layout, entries.collect::<Vec<_>>())
    }

    pub fn transpose(&self) -> Self {
        Self::from_entries(&self.layout, self.entries().map(|(r, c, p)| (c, r, p.clone())))
            .expect("transpose keeps bounds")
    }

    pub fn trace(&self) -> LaurentPoly {
        (0..self.dim).fold(LaurentPoly::zero(), |acc, i| match self.get(i, i) {
            Some(p) => &acc + p,
            None => acc,
        })
    }

    /// `a = r·b` for a rational function `r`, checked by cross-multiplying
    /// every entry against the first nonzero entry of `b`.
    pub fn proportional(a: &Self, b: &Self) -> Option<Ratio> {
        if a.dim != b.dim {
            return None;
        }
        let Some((r0, c0, b0)) = b.entries().next() else {
            return a.is_zero().then(Ratio::one);
        };
        let a0 = a.entry(r0, c0);
        let ok = (0..a.dim).into_par_iter().all(|i| {
            let (ra, rb) = (&a.rows[i], &b.rows[i]);
            let (mut x, mut y) = (0, 0);
            while x < ra.len() || y < rb.len() {
                let ca = ra.get(x).map(|e| e.0).unwrap_or(usize::MAX);
                let cb = rb.get(y).map(|e| e.0).unwrap_or(usize::MAX);
                let (pa, pb) = if ca < cb {
                    x += 1;
                    (Some(&ra[x - 1].1), None)
                } else if cb < ca {
                    y += 1;
                    (None, Some(&rb[y - 1].1))
                } else {
                    x += 1;
                    y += 1;
                    (Some(&ra[x - 1].1), Some(&rb[y - 1].1))
                };
                let lhs = pa.map(|p| p * b0).unwrap_or_default();
                let rhs = pb.map(|p| p * &a0).unwrap_or_default();
                if lhs != rhs {
                    return false;
                }
            }
            true
        });
        ok.then(|| Ratio::new(a0, b0.clone()))
    }

    /// First coordinate where the two matrices differ, with both values.
    pub fn first_difference(a: &Self, b: &Self) -> Option<(usize, usize, LaurentPoly, LaurentPoly)> {
        let d = a.sub(b).ok()?;
        let first = d.entries().next().map(|(r, c, _)| (r, c));
        first.map(|(r, c)| (r, c, a.entry(r, c), b.entry(r, c)))
    }

    pub fn evaluate(&self, x: &Rational) -> Self {
        self.map_entries(|p| LaurentPoly::constant(p.evaluate(x)))
    }

    pub fn subst_monomial(&self, c: &Rational, m: i32) -> Self {
        self.map_entries(|p| p.subst_monomial(c, m))
    }

    pub fn derivative_at_one(&self) -> Self {
        self.map_entries(|p| LaurentPoly::constant(p.derivative_at_one()))
    }

    /// Coefficient matrix of `u^deg`.
    pub fn coefficient(&self, deg: i32) -> Self {
        self.map_entries(|p| LaurentPoly::constant(p.coeff(deg)))
    }

    pub fn degree_span(&self) -> Option<(i32, i32)> {
        self.entries().fold(None, |acc, (_, _, p)| {
            let (lo, hi) = (p.min_deg()?, p.max_deg()?);
            Some(match acc {
                None => (lo, hi),
                Some((a, b)) => (a.min(lo), b.max(hi)),
            })
        })
    }

    pub fn is_constant(&self) -> bool {
        self.entries().all(|(_, _, p)| p.is_constant())
    }

    /// The swap `x ⊗ y ↦ y ⊗ x` on `ℂ^n ⊗ ℂ^n`.
    pub fn swap(n: usize) -> Self {
        let entries = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a * n + b, b * n + a, LaurentPoly::one())));
        Self::from_entries(&[n, n], entries).expect("swap is in bounds")
    }

    /// Exact solve of `target = Σ x_j basis_j` for constant matrices. On
    /// failure returns a coordinate whose equation is inconsistent.
    pub fn solve_span(
        target: &Self,
        basis: &[&Self],
    ) -> std::result::Result<Vec<Rational>, (usize, usize)> {
        let mut coords: Vec<(usize, usize)> = target.entries().map(|(r, c, _)| (r, c)).collect();
        for b in basis {
            coords.extend(b.entries().map(|(r, c, _)| (r, c)));
        }
        coords.sort_unstable();
        coords.dedup();
        let m = basis.len();
        let mut rows: Vec<Vec<Rational>> = coords
            .iter()
            .map(|&(r, c)| {
                let mut row: Vec<Rational> = basis.iter().map(|b| b.entry(r, c).coeff(0)).collect();
                row.push(target.entry(r, c).coeff(0));
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m {
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].recip();
            for x in rows[rank].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        if let Some(bad) = (rank..rows.len()).find(|&i| !rows[i][m].is_zero()) {
            return Err(coords[bad]);
        }
        let mut x = vec![Rational::zero(); m];
        for (i, &col) in pivots.iter().enumerate() {
            x[col] = rows[i][m].clone();
        }
        Ok(x)
    }

    /// Canonical dump: `{dim, layout, entries: [[row, col, [[deg, num, den], …]], …]}`.
    pub fn to_dump(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .map(|(r, c, p)| {
                let terms: Vec<Value> = p
                    .terms()
                    .iter()
                    .map(|(k, x)| json!([k, big_number(x.numer()), big_number(x.denom())]))
                    .collect();
                json!([r, c, terms])
            })
            .collect();
        json!({ "dim": self.dim, "layout": self.layout, "entries": entries })
    }

    pub fn from_dump(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Io(format!("malformed matrix dump: {what}"));
        let layout: Vec<usize> = v["layout"]
            .as_array()
            .ok_or_else(|| bad("layout"))?
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("layout entry")))
            .collect::<Result<_>>()?;
        let mut entries = Vec::new();
        for e in v["entries"].as_array().ok_or_else(|| bad("entries"))? {
            let r = e[0].as_u64().ok_or_else(|| bad("row"))? as usize;
            let c = e[1].as_u64().ok_or_else(|| bad("col"))? as usize;
            let mut terms = Vec::new();
            for t in e[2].as_array().ok_or_else(|| bad("terms"))? {
                let k = t[0].as_i64().ok_or_else(|| bad("degree"))? as i32;
                let n: num_bigint::BigInt =
                    t[1].to_string().parse().map_err(|_| bad("numerator"))?;
                let d: num_bigint::BigInt =
                    t[2].to_string().parse().map_err(|_| bad("denominator"))?;
                terms.push((k, Rational::new(n, d)));
            }
            entries.push((r, c, LaurentPoly::from_terms(terms)));
        }
        let m = Self::from_entries(&layout, entries)?;
        if v["dim"].as_u64() != Some(m.dim as u64) {
            return Err(bad("dim"));
        }
        Ok(m)
    }
}

fn big_number(x: &num_bigint::BigInt) -> Value {
    // arbitrary_precision keeps big integers exact
    Value::Number(x.to_string().parse().expect("integer literal"))
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix(dim={}, layout={:?})", self.dim, self.layout)?;
        for (r, c, p) in self.entries() {
            writeln!(f, "  ({r},{c}): {p}")?;
        }
        Ok(())
    }
}

/// Unit matrix `e_{ab}` on `ℂ^n` (0-based labels).
pub fn unit(n: usize, a: usize, b: usize) -> PolyMatrix {
    PolyMatrix::from_entries(&[n], [(a, b, LaurentPoly::one())]).expect("unit in bounds")
}

/// Diagonal constant matrix.
pub fn diagonal(values: &[Rational]) -> PolyMatrix {
    PolyMatrix::from_entries(
        &[values.len()],
        values
            .iter()
            .enumerate()
            .map(|(i, c)| (i, i, LaurentPoly::constant(c.clone()))),
    )
    .expect("diagonal in bounds")
}

impl PolyMatrix {
    /// `self == c·I` for a Laurent polynomial `c`; returns `c`.
    pub fn scalar_value(&self) -> Option<LaurentPoly> {
        let c = self.entry(0, 0);
        let ok = self.entries().all(|(r, k, p)| r == k && *p == c) && self.nnz() == if c.is_zero() { 0 } else { self.dim };
        ok.then_some(c)
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value().is_some_and(|c| c.is_one())
    }
}

impl Default for PolyMatrix {
    fn default() -> Self {
        Self::zeros(&[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_ring::int;

    fn m2(a: [[i64; 2]; 2]) -> PolyMatrix {
        PolyMatrix::from_rationals(
            &[2],
            &a.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn kron_examples() {
        let i2 = PolyMatrix::identity(&[2]);
        assert_eq!(i2.kron(&i2), PolyMatrix::identity(&[2, 2]));
        let e = unit(2, 0, 1).kron(&unit(2, 1, 0));
        assert_eq!(e.nnz(), 1);
        assert!(e.get(1, 2).unwrap().is_one());
        assert_eq!(e.dim(), 4);
    }

    #[test]
    fn embed_examples() {
        let g = m2([[1, 2], [3, 4]]).kron(&m2([[0, 1], [1, 0]]));
        let layout = [2, 2, 2];
        let i2 = PolyMatrix::identity(&[2]);
        assert_eq!(PolyMatrix::embed(&g, &[0, 1], &layout).unwrap(), g.kron(&i2));
        assert_eq!(PolyMatrix::embed(&g, &[1, 2], &layout).unwrap(), i2.kron(&g));
        let g0 = m2([[5, 6], [7, 8]]);
        assert_eq!(PolyMatrix::embed(&g0, &[0], &[2, 2]).unwrap(), g0.kron(&i2));
        assert!(PolyMatrix::embed(&g0, &[0, 1], &layout).is_err());
    }

    #[test]
    fn reversed_embedding_is_swap_conjugate() {
        let g = m2([[1, 2], [3, 4]]).kron(&m2([[0, 5], [1, 0]]));
        let p = PolyMatrix::swap(2);
        let direct = PolyMatrix::embed(&g, &[1, 0], &[2, 2]).unwrap();
        let conj = PolyMatrix::product(&[&p, &g, &p]).unwrap();
        assert_eq!(direct, conj);
    }

    #[test]
    fn trace_examples() {
        let a = m2([[1, 2], [3, 4]]);
        let b = m2([[0, 1], [7, 0]]);
        assert_eq!(a.kron(&b).partial_trace_first().unwrap(), b.scale_rational(&int(5)));
        assert!(a.partial_trace_first().is_err());
    }

    #[test]
    fn proportional_examples() {
        let i = PolyMatrix::identity(&[2]);
        let two = i.scale_rational(&int(2));
        assert_eq!(PolyMatrix::proportional(&two, &i).unwrap().as_rational(), Some(int(2)));
        let a = m2([[1, 2], [0, 3]]);
        let ua = a.scale(&LaurentPoly::var());
        assert_eq!(PolyMatrix::proportional(&ua, &a).unwrap().as_laurent(), Some(LaurentPoly::var()));
        let b = i.add(&unit(2, 0, 1)).unwrap();
        assert!(PolyMatrix::proportional(&b, &i).is_none());
    }

    #[test]
    fn span_solve() {
        let i = PolyMatrix::identity(&[2]);
        let x = m2([[0, 1], [1, 0]]);
        let t = i.scale_rational(&int(3)).add(&x.scale_rational(&int(-2))).unwrap();
        assert_eq!(PolyMatrix::solve_span(&t, &[&i, &x]).unwrap(), vec![int(3), int(-2)]);
        assert!(PolyMatrix::solve_span(&unit(2, 0, 0), &[&i, &x]).is_err());
    }

    #[test]
    fn dump_round_trip() {
        let m = m2([[1, 0], [-3, 4]]).scale(&LaurentPoly::from_terms([(0, int(1)), (2, int(5))]));
        let v = m.to_dump();
        assert_eq!(PolyMatrix::from_dump(&v).unwrap(), m);
    }
}
