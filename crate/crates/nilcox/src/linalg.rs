//! Exact rational linear algebra: rank, kernels, solving and quotient
//! projections over arbitrary-precision rationals.
//!
//! Matrices are stored row-sparse; all pivoting is deterministic
//! (leftmost pivot columns), so complement bases and kernel bases are
//! reproducible across runs.

use num::{BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Q = BigRational;

pub fn q_int(v: i64) -> Q {
    Q::from_integer(v.into())
}

/// A rows x cols matrix over the rationals, row-sparse.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, Q>>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = RatMatrix::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    m.data[i].insert(j, v);
                }
            }
        }
        m
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| q_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.data[r].get(&c).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        if v.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
    }

    pub fn row(&self, r: usize) -> &BTreeMap<usize, Q> {
        &self.data[r]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn set_column(&mut self, c: usize, v: &[Q]) {
        assert_eq!(v.len(), self.rows);
        for (r, x) in v.iter().enumerate() {
            self.set(r, c, x.clone());
        }
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for (&c, v) in row {
                t.data[c].insert(r, v.clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            let dst = &mut out.data[i];
            for (&k, a) in row {
                for (&j, b) in &other.data[k] {
                    let e = dst.entry(j).or_insert_with(Q::zero);
                    *e += a * b;
                }
            }
            dst.retain(|_, v| !v.is_zero());
        }
        out
    }

    pub fn matvec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matvec");
        let mut out = vec![Q::zero(); self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for (&k, a) in row {
                if !v[k].is_zero() {
                    out[i] += a * &v[k];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (i, row) in other.data.iter().enumerate() {
            for (&c, v) in row {
                let e = out.data[i].entry(c).or_insert_with(Q::zero);
                *e += v;
            }
            out.data[i].retain(|_, v| !v.is_zero());
        }
        out
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> RatMatrix {
        if s.is_zero() {
            return RatMatrix::zero(self.rows, self.cols);
        }
        let mut out = self.clone();
        for row in &mut out.data {
            for v in row.values_mut() {
                *v *= s;
            }
        }
        out
    }

    pub fn hstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = RatMatrix::zero(self.rows, self.cols + other.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (&c, v) in row {
                out.data[i].insert(c, v.clone());
            }
        }
        for (i, row) in other.data.iter().enumerate() {
            for (&c, v) in row {
                out.data[i].insert(c + self.cols, v.clone());
            }
        }
        out
    }

    pub fn block_diag(blocks: &[&RatMatrix]) -> RatMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = RatMatrix::zero(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for (i, row) in b.data.iter().enumerate() {
                for (&c, v) in row {
                    out.data[ro + i].insert(co + c, v.clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    /// Kronecker product: (A ⊗ B)[(i1,i2),(j1,j2)] = A[i1,j1] B[i2,j2],
    /// row/column index = i1 * B.rows + i2.
    pub fn kronecker(&self, other: &RatMatrix) -> RatMatrix {
        let mut out = RatMatrix::zero(self.rows * other.rows, self.cols * other.cols);
        for (i1, row1) in self.data.iter().enumerate() {
            for (&j1, a) in row1 {
                for (i2, row2) in other.data.iter().enumerate() {
                    let dst = &mut out.data[i1 * other.rows + i2];
                    for (&j2, b) in row2 {
                        dst.insert(j1 * other.cols + j2, a * b);
                    }
                }
            }
        }
        out
    }

    fn rref(&self) -> Rref {
        let mut pivots: Vec<(usize, BTreeMap<usize, Q>)> = Vec::new();
        for raw in &self.data {
            let mut row = raw.clone();
            reduce_row(&mut row, &pivots);
            if let Some((&lead, _)) = row.iter().next() {
                let inv = row[&lead].recip();
                for v in row.values_mut() {
                    *v *= &inv;
                }
                // back-substitute into existing pivot rows
                for (_, prow) in pivots.iter_mut() {
                    if let Some(c) = prow.get(&lead).cloned() {
                        axpy(prow, &row, &-c);
                    }
                }
                pivots.push((lead, row));
            }
        }
        pivots.sort_by_key(|(c, _)| *c);
        Rref {
            cols: self.cols,
            pivots,
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Columns form a basis of `{x : self * x = 0}`; count = cols - rank.
    pub fn kernel_basis(&self) -> RatMatrix {
        let rref = self.rref();
        let pivot_cols: Vec<usize> = rref.pivots.iter().map(|(c, _)| *c).collect();
        let free_cols: Vec<usize> = (0..self.cols)
            .filter(|c| !pivot_cols.contains(c))
            .collect();
        let mut out = RatMatrix::zero(self.cols, free_cols.len());
        for (k, &f) in free_cols.iter().enumerate() {
            out.data[f].insert(k, Q::one());
            for (p, prow) in &rref.pivots {
                if let Some(v) = prow.get(&f) {
                    out.data[*p].insert(k, -v.clone());
                }
            }
        }
        out
    }

    /// Some `x` with `self * x = b`, if consistent.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows, "dimension mismatch in solve");
        let mut aug = self.clone();
        aug.cols += 1;
        for (i, v) in b.iter().enumerate() {
            if !v.is_zero() {
                aug.data[i].insert(self.cols, v.clone());
            }
        }
        let rref = aug.rref();
        let mut x = vec![Q::zero(); self.cols];
        for (p, prow) in &rref.pivots {
            if *p == self.cols {
                return None; // pivot in the augmented column: inconsistent
            }
            if let Some(v) = prow.get(&self.cols) {
                x[*p] = v.clone();
            }
        }
        Some(x)
    }

    /// Inverse of a square matrix, if invertible.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let aug = self.hstack(&RatMatrix::identity(n));
        let rref = aug.rref();
        if rref.pivots.len() != n || rref.pivots.iter().any(|(c, _)| *c >= n) {
            return None;
        }
        let mut inv = RatMatrix::zero(n, n);
        for (p, prow) in &rref.pivots {
            for (&c, v) in prow.range(n..) {
                inv.data[*p].insert(c - n, v.clone());
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Row space membership data for repeated containment queries.
    pub fn row_space(&self) -> RowSpace {
        RowSpace {
            rref: self.rref(),
        }
    }
}

struct Rref {
    #[allow(dead_code)]
    cols: usize,
    /// sorted by pivot column; each row has leading 1 at its pivot column
    /// and zeros at all other pivot columns
    pivots: Vec<(usize, BTreeMap<usize, Q>)>,
}

/// Echelonized span of a set of row vectors, supporting membership tests
/// and incremental extension.
pub struct RowSpace {
    rref: Rref,
}

impl RowSpace {
    pub fn empty(cols: usize) -> Self {
        RowSpace {
            rref: Rref {
                cols,
                pivots: Vec::new(),
            },
        }
    }

    pub fn dim(&self) -> usize {
        self.rref.pivots.len()
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.rref.pivots.iter().map(|(c, _)| *c).collect()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut row: BTreeMap<usize, Q> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        reduce_row(&mut row, &self.rref.pivots);
        row.is_empty()
    }

    /// Adds `v` to the span; returns true if the dimension grew.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut row: BTreeMap<usize, Q> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        reduce_row(&mut row, &self.rref.pivots);
        if let Some((&lead, _)) = row.iter().next() {
            let inv = row[&lead].recip();
            for x in row.values_mut() {
                *x *= &inv;
            }
            for (_, prow) in self.rref.pivots.iter_mut() {
                if let Some(c) = prow.get(&lead).cloned() {
                    axpy(prow, &row, &-c);
                }
            }
            self.rref.pivots.push((lead, row));
            self.rref.pivots.sort_by_key(|(c, _)| *c);
            true
        } else {
            false
        }
    }
}

fn reduce_row(row: &mut BTreeMap<usize, Q>, pivots: &[(usize, BTreeMap<usize, Q>)]) {
    for (p, prow) in pivots {
        if let Some(c) = row.get(p).cloned() {
            axpy(row, prow, &-c);
        }
    }
}

/// row += coeff * other
fn axpy(row: &mut BTreeMap<usize, Q>, other: &BTreeMap<usize, Q>, coeff: &Q) {
    if coeff.is_zero() {
        return;
    }
    for (&c, v) in other {
        let e = row.entry(c).or_insert_with(Q::zero);
        *e += coeff * v;
        if e.is_zero() {
            row.remove(&c);
        }
    }
}

/// A projection onto a complement of a subspace, together with a section.
///
/// `proj` has `ambient_dim - rank(subspace)` rows; `proj * incl(subspace) = 0`
/// exactly, and `proj * section = identity`. The complement basis is the set
/// of leftmost non-pivot coordinates of the subspace.
pub struct QuotientData {
    pub proj: RatMatrix,
    pub section: RatMatrix,
    pub pivot_cols: Vec<usize>,
    pub complement_cols: Vec<usize>,
}

/// Projection of an `ambient_dim`-dimensional space onto the quotient by
/// the column span of `subspace`.
pub fn quotient_projection(ambient_dim: usize, subspace: &RatMatrix) -> QuotientData {
    assert_eq!(
        subspace.rows(),
        ambient_dim,
        "subspace columns must live in the ambient dimension"
    );
    let rref = subspace.transpose().rref();
    let pivot_cols: Vec<usize> = rref.pivots.iter().map(|(c, _)| *c).collect();
    let complement_cols: Vec<usize> = (0..ambient_dim)
        .filter(|c| !pivot_cols.contains(c))
        .collect();
    let mut proj = RatMatrix::zero(complement_cols.len(), ambient_dim);
    let mut section = RatMatrix::zero(ambient_dim, complement_cols.len());
    for (qi, &c) in complement_cols.iter().enumerate() {
        proj.data[qi].insert(c, Q::one());
        section.data[c].insert(qi, Q::one());
    }
    // x = x - sum_p x_p * r_p lands in the complement coordinates
    for (p, prow) in &rref.pivots {
        for (&c, v) in prow {
            if c == *p {
                continue;
            }
            let qi = complement_cols
                .binary_search(&c)
                .expect("non-pivot entry in complement");
            let e = proj.data[qi].entry(*p).or_insert_with(Q::zero);
            *e -= v;
            if e.is_zero() {
                proj.data[qi].remove(p);
            }
        }
    }
    QuotientData {
        proj,
        section,
        pivot_cols,
        complement_cols,
    }
}

pub fn vec_is_zero(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Deterministic small rational from a seed-ish index, used for generic
/// linear combinations (never zero).
pub fn small_rational(i: usize) -> Q {
    let num = (i as i64 % 7) + 1;
    let den = (i as i64 % 3) + 1;
    Q::new(num.into(), den.into()).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::zero(3, 4).rank(), 0);
        assert_eq!(RatMatrix::identity(5).rank(), 5);
        let m = RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(RatMatrix::identity(3).kernel_basis().cols(), 0);
        assert_eq!(RatMatrix::zero(2, 2).kernel_basis().cols(), 2);
        let m = RatMatrix::from_int_rows(&[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero_matrix());
        assert_eq!(k.get(0, 0), -k.get(1, 0));
    }

    #[test]
    fn solve_examples() {
        let id = RatMatrix::identity(2);
        let b = vec![q_int(3), q_int(-1)];
        assert_eq!(id.solve(&b).unwrap(), b);

        let m = RatMatrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        assert!(m.solve(&[q_int(0), q_int(1)]).is_none());

        let m = RatMatrix::from_int_rows(&[&[2]]);
        assert_eq!(m.solve(&[q_int(1)]).unwrap(), vec![Q::new(1.into(), 2.into())]);
    }

    #[test]
    fn quotient_examples() {
        // zero subspace: identity projection
        let qd = quotient_projection(3, &RatMatrix::zero(3, 0));
        assert_eq!(qd.proj, RatMatrix::identity(3));

        // full subspace: empty projection
        let qd = quotient_projection(2, &RatMatrix::identity(2));
        assert_eq!(qd.proj.rows(), 0);

        // quotient of Q^2 by span{(1,1)}
        let sub = RatMatrix::from_int_rows(&[&[1], &[1]]);
        let qd = quotient_projection(2, &sub);
        assert_eq!(qd.proj.rows(), 1);
        assert!(qd.proj.mul(&sub).is_zero_matrix());
        assert_eq!(qd.proj.mul(&qd.section), RatMatrix::identity(1));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = RatMatrix::from_int_rows(&[&[2, 1, 0], &[1, 1, 3], &[0, -1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(3));
        assert_eq!(inv.mul(&m), RatMatrix::identity(3));
        let sing = RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn rank_nullity() {
        let m = RatMatrix::from_int_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(m.rank() + m.kernel_basis().cols(), m.cols());
        assert!(m.mul(&m.kernel_basis()).is_zero_matrix());
    }

    #[test]
    fn row_space_incremental() {
        let mut s = RowSpace::empty(3);
        assert!(s.insert(&[q_int(1), q_int(1), q_int(0)]));
        assert!(!s.insert(&[q_int(2), q_int(2), q_int(0)]));
        assert!(s.contains(&[q_int(-3), q_int(-3), q_int(0)]));
        assert!(s.insert(&[q_int(0), q_int(0), q_int(5)]));
        assert_eq!(s.dim(), 2);
    }
}
