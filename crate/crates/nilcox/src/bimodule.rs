//! Graded bimodules over (tensor products of) nilCoxeter algebras:
//! actions, restriction along algebra maps, duals, direct sums, tensor
//! products over a middle algebra, hom spaces, and isomorphism /
//! indecomposability tests with explicit certificates.
//!
//! ```
//! use nilcox::algebra::AlgebraId;
//! use nilcox::bimodule::{tensor_over, Bimodule};
//!
//! let a2 = AlgebraId::nil(2);
//! let reg = Bimodule::regular(&a2);
//! // A ⊗_A A ≅ A: tensoring with the regular bimodule is the identity
//! let t = tensor_over(&reg, &reg);
//! assert_eq!(t.bim.dim(), 2);
//! let iso = nilcox::bimodule::is_isomorphic(&t.bim, &reg, 0);
//! assert!(matches!(iso, nilcox::bimodule::IsoOutcome::Yes(_)));
//! ```

use crate::algebra::{AlgebraElement, AlgebraId, AlgebraMap};
use crate::linalg::{quotient_projection, Q, RatMatrix, RowSpace};
use num::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Sparse column vector.
pub type SVec = BTreeMap<usize, Q>;

pub fn svec_unit(i: usize) -> SVec {
    let mut v = SVec::new();
    v.insert(i, Q::one());
    v
}

pub fn svec_from_dense(v: &[Q]) -> SVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn svec_to_dense(v: &SVec, dim: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); dim];
    for (&i, x) in v {
        out[i] = x.clone();
    }
    out
}

pub fn svec_add_scaled(dst: &mut SVec, src: &SVec, c: &Q) {
    if c.is_zero() {
        return;
    }
    for (&i, x) in src {
        let e = dst.entry(i).or_insert_with(Q::zero);
        *e += c * x;
        if e.is_zero() {
            dst.remove(&i);
        }
    }
}

/// m · v for a row-sparse matrix and a sparse vector.
pub fn mat_apply(m: &RatMatrix, v: &SVec) -> SVec {
    let mut out = SVec::new();
    for r in 0..m.rows() {
        let mut acc = Q::zero();
        for (c, a) in m.row(r) {
            if let Some(x) = v.get(c) {
                acc += a * x;
            }
        }
        if !acc.is_zero() {
            out.insert(r, acc);
        }
    }
    out
}

/// A finite-dimensional graded (A,B)-bimodule, given by the action
/// matrices of the algebra generators on a fixed basis.
#[derive(Clone)]
pub struct Bimodule {
    pub left: AlgebraId,
    pub right: AlgebraId,
    pub degrees: Vec<i64>,
    left_act: Vec<RatMatrix>,
    right_act: Vec<RatMatrix>,
}

impl Bimodule {
    pub fn from_parts(
        left: AlgebraId,
        right: AlgebraId,
        degrees: Vec<i64>,
        left_act: Vec<RatMatrix>,
        right_act: Vec<RatMatrix>,
    ) -> Self {
        assert_eq!(left_act.len(), left.num_gens());
        assert_eq!(right_act.len(), right.num_gens());
        let dim = degrees.len();
        for m in left_act.iter().chain(&right_act) {
            assert_eq!((m.rows(), m.cols()), (dim, dim));
        }
        Bimodule {
            left,
            right,
            degrees,
            left_act,
            right_act,
        }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    /// The algebra as a bimodule over itself.
    pub fn regular(id: &AlgebraId) -> Self {
        let dim = id.dim();
        let mut left_act = Vec::new();
        for g in 0..id.num_gens() {
            let gi = id.gen_basis_index(g);
            let mut m = RatMatrix::zero(dim, dim);
            for j in 0..dim {
                if let Some(k) = id.mul_basis(gi, j) {
                    m.set(k, j, Q::one());
                }
            }
            left_act.push(m);
        }
        let mut right_act = Vec::new();
        for g in 0..id.num_gens() {
            let gi = id.gen_basis_index(g);
            let mut m = RatMatrix::zero(dim, dim);
            for j in 0..dim {
                if let Some(k) = id.mul_basis(j, gi) {
                    m.set(k, j, Q::one());
                }
            }
            right_act.push(m);
        }
        Bimodule {
            left: id.clone(),
            right: id.clone(),
            degrees: id.degrees(),
            left_act,
            right_act,
        }
    }

    /// The one-dimensional left module where every generator acts by zero.
    pub fn simple_module(id: &AlgebraId) -> Self {
        Bimodule {
            left: id.clone(),
            right: AlgebraId::trivial(),
            degrees: vec![0],
            left_act: vec![RatMatrix::zero(1, 1); id.num_gens()],
            right_act: vec![],
        }
    }

    /// The algebra as a left module over itself (the projective cover of
    /// the simple module, the algebra being local).
    pub fn free_module(id: &AlgebraId) -> Self {
        Bimodule::regular(id).forget_right()
    }

    /// Forget the right action, keeping a left module.
    pub fn forget_right(&self) -> Self {
        Bimodule {
            left: self.left.clone(),
            right: AlgebraId::trivial(),
            degrees: self.degrees.clone(),
            left_act: self.left_act.clone(),
            right_act: vec![],
        }
    }

    pub fn left_gen(&self, g: usize) -> &RatMatrix {
        &self.left_act[g]
    }

    pub fn right_gen(&self, g: usize) -> &RatMatrix {
        &self.right_act[g]
    }

    /// Matrix of the left action of an algebra element.
    pub fn left_elem_matrix(&self, e: &AlgebraElement) -> RatMatrix {
        assert_eq!(e.algebra, self.left);
        let dim = self.dim();
        let mut out = RatMatrix::zero(dim, dim);
        for (&i, c) in &e.coeffs {
            let mut m = RatMatrix::identity(dim);
            for g in self.left.basis_word(i) {
                m = m.mul(&self.left_act[g]);
            }
            out = out.add(&m.scale(c));
        }
        out
    }

    /// Matrix of the right action of an algebra element (word order is
    /// reversed: v·(gh) = (v·g)·h).
    pub fn right_elem_matrix(&self, e: &AlgebraElement) -> RatMatrix {
        assert_eq!(e.algebra, self.right);
        let dim = self.dim();
        let mut out = RatMatrix::zero(dim, dim);
        for (&i, c) in &e.coeffs {
            let mut m = RatMatrix::identity(dim);
            for g in self.right.basis_word(i) {
                m = self.right_act[g].mul(&m);
            }
            out = out.add(&m.scale(c));
        }
        out
    }

    /// a · v for a sparse vector.
    pub fn act_left_basis(&self, alg_basis: usize, v: &SVec) -> SVec {
        let word = self.left.basis_word(alg_basis);
        let mut out = v.clone();
        for g in word.iter().rev() {
            out = mat_apply(&self.left_act[*g], &out);
        }
        out
    }

    /// v · b for a sparse vector.
    pub fn act_right_basis(&self, alg_basis: usize, v: &SVec) -> SVec {
        let word = self.right.basis_word(alg_basis);
        let mut out = v.clone();
        for g in word {
            out = mat_apply(&self.right_act[g], &out);
        }
        out
    }

    /// Pull the left action back along an algebra map into `self.left`.
    pub fn restrict_left(&self, map: &AlgebraMap) -> Bimodule {
        assert_eq!(map.target, self.left, "map must land in the left algebra");
        let left_act = map.images.iter().map(|e| self.left_elem_matrix(e)).collect();
        Bimodule {
            left: map.source.clone(),
            right: self.right.clone(),
            degrees: self.degrees.clone(),
            left_act,
            right_act: self.right_act.clone(),
        }
    }

    /// Pull the right action back along an algebra map into `self.right`.
    pub fn restrict_right(&self, map: &AlgebraMap) -> Bimodule {
        assert_eq!(map.target, self.right, "map must land in the right algebra");
        let right_act = map
            .images
            .iter()
            .map(|e| self.right_elem_matrix(e))
            .collect();
        Bimodule {
            left: self.left.clone(),
            right: map.source.clone(),
            degrees: self.degrees.clone(),
            left_act: self.left_act.clone(),
            right_act,
        }
    }

    /// Grading shift: degrees increase by `s`.
    pub fn shifted(&self, s: i64) -> Bimodule {
        let mut out = self.clone();
        for d in &mut out.degrees {
            *d += s;
        }
        out
    }

    pub fn direct_sum(parts: &[&Bimodule]) -> Bimodule {
        assert!(!parts.is_empty());
        let left = parts[0].left.clone();
        let right = parts[0].right.clone();
        for p in parts {
            assert_eq!(p.left, left);
            assert_eq!(p.right, right);
        }
        let degrees = parts.iter().flat_map(|p| p.degrees.clone()).collect();
        let left_act = (0..left.num_gens())
            .map(|g| {
                RatMatrix::block_diag(&parts.iter().map(|p| &p.left_act[g]).collect::<Vec<_>>())
            })
            .collect();
        let right_act = (0..right.num_gens())
            .map(|g| {
                RatMatrix::block_diag(&parts.iter().map(|p| &p.right_act[g]).collect::<Vec<_>>())
            })
            .collect();
        Bimodule {
            left,
            right,
            degrees,
            left_act,
            right_act,
        }
    }

    /// Linear dual: an (A,B)-bimodule becomes a (B,A)-bimodule via
    /// (b·f·a)(m) = f(a·m·b); degrees are negated.
    pub fn dual(&self) -> Bimodule {
        Bimodule {
            left: self.right.clone(),
            right: self.left.clone(),
            degrees: self.degrees.iter().map(|d| -d).collect(),
            left_act: self.right_act.iter().map(|m| m.transpose()).collect(),
            right_act: self.left_act.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// Swap the two actions through the antiinvolution fixing the
    /// generators: a (B,A)-bimodule becomes an (A,B)-bimodule with
    /// a·m·b := u(b) m u(a). Generators are fixed by u, so the action
    /// matrices simply change sides.
    pub fn transport_u(&self) -> Bimodule {
        for id in [&self.left, &self.right] {
            assert!(
                id.single_nil().is_some() || id.factors().is_empty(),
                "transport requires plain nilCoxeter (or trivial) algebras"
            );
        }
        Bimodule {
            left: self.right.clone(),
            right: self.left.clone(),
            degrees: self.degrees.clone(),
            left_act: self.right_act.clone(),
            right_act: self.left_act.clone(),
        }
    }

    /// Outer tensor product over Q: an (A⊗A', B⊗B')-bimodule with basis
    /// indices i·dim(other) + j.
    pub fn outer_tensor(&self, other: &Bimodule) -> Bimodule {
        let left = AlgebraId::tensor(&[&self.left, &other.left]);
        let right = AlgebraId::tensor(&[&self.right, &other.right]);
        let ia = RatMatrix::identity(self.dim());
        let ib = RatMatrix::identity(other.dim());
        let mut left_act = Vec::new();
        for m in &self.left_act {
            left_act.push(m.kronecker(&ib));
        }
        for m in &other.left_act {
            left_act.push(ia.kronecker(m));
        }
        let mut right_act = Vec::new();
        for m in &self.right_act {
            right_act.push(m.kronecker(&ib));
        }
        for m in &other.right_act {
            right_act.push(ia.kronecker(m));
        }
        let mut degrees = Vec::with_capacity(self.dim() * other.dim());
        for da in &self.degrees {
            for db in &other.degrees {
                degrees.push(da + db);
            }
        }
        Bimodule {
            left,
            right,
            degrees,
            left_act,
            right_act,
        }
    }

    /// Check the defining relations of both algebras, commutation of the
    /// two actions, and homogeneity of all generator actions.
    pub fn validate(&self) -> Result<(), String> {
        let check_side = |id: &AlgebraId, act: &[RatMatrix], reversed: bool| -> Result<(), String> {
            let eval = |word: &[usize]| -> RatMatrix {
                let mut m = RatMatrix::identity(self.dim());
                if reversed {
                    for &g in word.iter().rev() {
                        m = m.mul(&act[g]);
                    }
                } else {
                    for &g in word {
                        m = m.mul(&act[g]);
                    }
                }
                m
            };
            for (lhs, rhs) in id.relations() {
                let l = eval(&lhs);
                let r = rhs
                    .as_ref()
                    .map(|w| eval(w))
                    .unwrap_or_else(|| RatMatrix::zero(self.dim(), self.dim()));
                if l != r {
                    return Err(format!(
                        "relation violated on {} side: {:?} vs {:?}",
                        if reversed { "right" } else { "left" },
                        lhs,
                        rhs
                    ));
                }
            }
            Ok(())
        };
        check_side(&self.left, &self.left_act, false)?;
        check_side(&self.right, &self.right_act, true)?;
        for (gl, l) in self.left_act.iter().enumerate() {
            for (gr, r) in self.right_act.iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    return Err(format!("left gen {gl} and right gen {gr} do not commute"));
                }
            }
        }
        for (side, act) in [("left", &self.left_act), ("right", &self.right_act)] {
            for (g, m) in act.iter().enumerate() {
                for r in 0..self.dim() {
                    for (c, v) in m.row(r) {
                        if !v.is_zero() && self.degrees[r] != self.degrees[*c] + 1 {
                            return Err(format!(
                                "{side} gen {g} not homogeneous of degree 1 at ({r},{c})"
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Sorted (degree, multiplicity) pairs.
    pub fn graded_dimension(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for &d in &self.degrees {
            *out.entry(d).or_insert(0) += 1;
        }
        out
    }
}

fn algebra_to_text(id: &AlgebraId) -> String {
    if id.factors().is_empty() {
        return "Q".to_string();
    }
    id.factors()
        .iter()
        .map(|f| match f {
            crate::algebra::Factor::Nil(n) => format!("Nil {n}"),
            crate::algebra::Factor::NilWreath { n, k } => format!("Wreath {n} {k}"),
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

fn algebra_from_text(s: &str) -> Result<AlgebraId, String> {
    let s = s.trim();
    if s == "Q" {
        return Ok(AlgebraId::trivial());
    }
    let mut factors = Vec::new();
    for part in s.split('*') {
        let toks: Vec<&str> = part.split_whitespace().collect();
        match toks.as_slice() {
            ["Nil", n] => factors.push(crate::algebra::Factor::Nil(
                n.parse().map_err(|e| format!("bad strand count: {e}"))?,
            )),
            ["Wreath", n, k] => factors.push(crate::algebra::Factor::NilWreath {
                n: n.parse().map_err(|e| format!("bad strand count: {e}"))?,
                k: k.parse().map_err(|e| format!("bad wreath order: {e}"))?,
            }),
            _ => return Err(format!("unrecognized factor: {part:?}")),
        }
    }
    Ok(AlgebraId::from_factors(factors))
}

fn matrix_to_text(m: &RatMatrix) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let line: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn matrix_from_lines(lines: &[&str], cols: usize) -> Result<RatMatrix, String> {
    let mut m = RatMatrix::zero(lines.len(), cols);
    for (r, line) in lines.iter().enumerate() {
        let vals: Vec<&str> = line.split_whitespace().collect();
        if vals.len() != cols {
            return Err(format!("row {r} has {} entries, expected {cols}", vals.len()));
        }
        for (c, v) in vals.iter().enumerate() {
            let q: Q = v.parse().map_err(|e| format!("bad rational {v:?}: {e}"))?;
            m.set(r, c, q);
        }
    }
    Ok(m)
}

impl Bimodule {
    /// Canonical text fixture: header then one matrix per generator,
    /// row-major with exact rational entries.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("bimodule v1\n");
        out.push_str(&format!("left: {}\n", algebra_to_text(&self.left)));
        out.push_str(&format!("right: {}\n", algebra_to_text(&self.right)));
        out.push_str(&format!("dim: {}\n", self.dim()));
        let degs: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        out.push_str(&format!("degrees: {}\n", degs.join(" ")));
        for (g, m) in self.left_act.iter().enumerate() {
            out.push_str(&format!("left_gen {g}\n"));
            out.push_str(&matrix_to_text(m));
        }
        for (g, m) in self.right_act.iter().enumerate() {
            out.push_str(&format!("right_gen {g}\n"));
            out.push_str(&matrix_to_text(m));
        }
        out
    }

    pub fn from_text(s: &str) -> Result<Bimodule, String> {
        let lines: Vec<&str> = s.lines().collect();
        let mut it = lines.iter();
        let header = it.next().ok_or("empty input")?;
        if header.trim() != "bimodule v1" {
            return Err("missing bimodule header".to_string());
        }
        let field = |prefix: &str, line: Option<&&str>| -> Result<String, String> {
            let line = line.ok_or_else(|| format!("missing {prefix}"))?;
            line.strip_prefix(prefix)
                .map(|v| v.trim().to_string())
                .ok_or_else(|| format!("expected {prefix}, got {line:?}"))
        };
        let left = algebra_from_text(&field("left:", it.next())?)?;
        let right = algebra_from_text(&field("right:", it.next())?)?;
        let dim: usize = field("dim:", it.next())?
            .parse()
            .map_err(|e| format!("bad dim: {e}"))?;
        let degrees: Vec<i64> = field("degrees:", it.next())?
            .split_whitespace()
            .map(|v| v.parse().map_err(|e| format!("bad degree: {e}")))
            .collect::<Result<_, _>>()?;
        if degrees.len() != dim {
            return Err("degree count mismatch".to_string());
        }
        let rest: Vec<&str> = it.cloned().collect();
        let mut pos = 0;
        let mut read_gens = |count: usize, tag: &str| -> Result<Vec<RatMatrix>, String> {
            let mut mats = Vec::new();
            for g in 0..count {
                let expect = format!("{tag} {g}");
                if pos >= rest.len() || rest[pos].trim() != expect {
                    return Err(format!("expected {expect:?}"));
                }
                pos += 1;
                if pos + dim > rest.len() {
                    return Err(format!("truncated matrix for {expect:?}"));
                }
                mats.push(matrix_from_lines(&rest[pos..pos + dim], dim)?);
                pos += dim;
            }
            Ok(mats)
        };
        let left_act = read_gens(left.num_gens(), "left_gen")?;
        let right_act = read_gens(right.num_gens(), "right_gen")?;
        Ok(Bimodule::from_parts(left, right, degrees, left_act, right_act))
    }
}

/// A degree-homogeneous bimodule map, as a matrix from the source basis
/// to the target basis, raising degree by `shift`.
#[derive(Clone)]
pub struct BimoduleMap {
    pub matrix: RatMatrix,
    pub shift: i64,
}

impl BimoduleMap {
    /// Intertwining only (no degree constraint).
    pub fn verify_action(&self, source: &Bimodule, target: &Bimodule) -> Result<(), String> {
        if self.matrix.rows() != target.dim() || self.matrix.cols() != source.dim() {
            return Err("matrix shape mismatch".to_string());
        }
        if source.left != target.left || source.right != target.right {
            return Err("bimodule algebras mismatch".to_string());
        }
        for g in 0..source.left.num_gens() {
            if self.matrix.mul(source.left_gen(g)) != target.left_gen(g).mul(&self.matrix) {
                return Err(format!("does not intertwine left generator {g}"));
            }
        }
        for g in 0..source.right.num_gens() {
            if self.matrix.mul(source.right_gen(g)) != target.right_gen(g).mul(&self.matrix) {
                return Err(format!("does not intertwine right generator {g}"));
            }
        }
        Ok(())
    }

    pub fn verify(&self, source: &Bimodule, target: &Bimodule) -> Result<(), String> {
        self.verify_action(source, target)?;
        for r in 0..target.dim() {
            for (c, v) in self.matrix.row(r) {
                if !v.is_zero() && target.degrees[r] != source.degrees[*c] + self.shift {
                    return Err(format!("not homogeneous of degree {} at ({r},{c})", self.shift));
                }
            }
        }
        Ok(())
    }

    pub fn verify_iso(&self, source: &Bimodule, target: &Bimodule) -> Result<(), String> {
        self.verify(source, target)?;
        if !self.matrix.is_invertible() {
            return Err("matrix is not invertible".to_string());
        }
        Ok(())
    }
}

/// Space of bimodule maps M -> N intertwining both actions; `filter`
/// restricts which matrix entries may be nonzero.
fn hom_space_filtered<F: Fn(usize, usize) -> bool>(
    m: &Bimodule,
    n: &Bimodule,
    filter: F,
) -> Vec<RatMatrix> {
    assert_eq!(m.left, n.left);
    assert_eq!(m.right, n.right);
    let (md, nd) = (m.dim(), n.dim());
    let mut unknown_of = HashMap::new();
    let mut unknowns = Vec::new();
    for i in 0..nd {
        for j in 0..md {
            if filter(i, j) {
                unknown_of.insert((i, j), unknowns.len());
                unknowns.push((i, j));
            }
        }
    }
    // rows of the constraint system, keyed per generator by the matrix
    // position of the equation
    let mut sys_rows: Vec<BTreeMap<usize, Q>> = Vec::new();
    let mut pairs: Vec<(&RatMatrix, &RatMatrix)> = Vec::new();
    for g in 0..m.left.num_gens() {
        pairs.push((m.left_gen(g), n.left_gen(g)));
    }
    for g in 0..m.right.num_gens() {
        pairs.push((m.right_gen(g), n.right_gen(g)));
    }
    for (am, an) in pairs {
        let ant = an.transpose();
        let mut eq_of: HashMap<(usize, usize), usize> = HashMap::new();
        let base = sys_rows.len();
        let mut eq_idx = |key: (usize, usize), rows: &mut Vec<BTreeMap<usize, Q>>| -> usize {
            *eq_of.entry(key).or_insert_with(|| {
                rows.push(BTreeMap::new());
                rows.len() - 1
            })
        };
        let _ = base;
        for (k, &(i, j)) in unknowns.iter().enumerate() {
            // (T·A_M)[i,c] picks up T[i,j]·A_M[j,c]
            for (c, v) in am.row(j) {
                let e = eq_idx((i, *c), &mut sys_rows);
                let cell = sys_rows[e].entry(k).or_insert_with(Q::zero);
                *cell += v;
                if cell.is_zero() {
                    sys_rows[e].remove(&k);
                }
            }
            // (A_N·T)[r,j] picks up A_N[r,i]·T[i,j]
            for (r, v) in ant.row(i) {
                let e = eq_idx((*r, j), &mut sys_rows);
                let cell = sys_rows[e].entry(k).or_insert_with(Q::zero);
                *cell -= v;
                if cell.is_zero() {
                    sys_rows[e].remove(&k);
                }
            }
        }
    }
    let mut sys = RatMatrix::zero(sys_rows.len(), unknowns.len());
    for (r, row) in sys_rows.into_iter().enumerate() {
        for (c, v) in row {
            sys.set(r, c, v);
        }
    }
    let ker = sys.kernel_basis();
    (0..ker.cols())
        .map(|b| {
            let mut t = RatMatrix::zero(nd, md);
            for (k, &(i, j)) in unknowns.iter().enumerate() {
                let v = ker.get(k, b);
                if !v.is_zero() {
                    t.set(i, j, v);
                }
            }
            t
        })
        .collect()
}

/// All bimodule maps M -> N (no degree constraint).
pub fn hom_space(m: &Bimodule, n: &Bimodule) -> Vec<RatMatrix> {
    hom_space_filtered(m, n, |_, _| true)
}

/// Bimodule maps raising degree by exactly `shift`.
pub fn hom_space_graded(m: &Bimodule, n: &Bimodule, shift: i64) -> Vec<RatMatrix> {
    hom_space_filtered(m, n, |i, j| n.degrees[i] == m.degrees[j] + shift)
}

/// A tensor product M ⊗_C N realized as a bimodule, together with the
/// data needed to evaluate pure tensors and induce maps.
pub struct TensorProduct {
    pub bim: Bimodule,
    pub route: &'static str,
    m_dim: usize,
    n_dim: usize,
    kind: Route,
}

enum Route {
    /// M is free as a right C-module on the coordinate vectors
    /// e_{free_cols[t]}; binv converts m into coordinates over the
    /// column basis (t,w) ↦ e_{free_cols[t]}·c_w.
    Free {
        free_cols: Vec<usize>,
        binv: RatMatrix,
        middle: AlgebraId,
        n_left: Vec<RatMatrix>,
    },
    /// Quotient of M ⊗_Q N by the middle-action relations.
    Generic { proj: RatMatrix },
}

impl TensorProduct {
    pub fn dim(&self) -> usize {
        self.bim.dim()
    }

    /// Rank of M as a free right module over the middle algebra
    /// (free route only).
    pub fn free_rank(&self) -> Option<usize> {
        match &self.kind {
            Route::Free { free_cols, .. } => Some(free_cols.len()),
            Route::Generic { .. } => None,
        }
    }

    /// The image of m ⊗ n in the tensor product.
    pub fn pure_tensor(&self, m: &SVec, n: &SVec) -> SVec {
        match &self.kind {
            Route::Free {
                binv,
                middle,
                n_left,
                ..
            } => {
                let coords = mat_apply(binv, m);
                let c_dim = middle.dim();
                let mut out = SVec::new();
                for (&tc, coef) in &coords {
                    let (t, w) = (tc / c_dim, tc % c_dim);
                    // left action of the middle basis element w on n
                    let mut v = n.clone();
                    for g in middle.basis_word(w).iter().rev() {
                        v = mat_apply(&n_left[*g], &v);
                    }
                    for (&j, x) in &v {
                        let e = out.entry(t * self.n_dim + j).or_insert_with(Q::zero);
                        *e += coef * x;
                        if e.is_zero() {
                            out.remove(&(t * self.n_dim + j));
                        }
                    }
                }
                out
            }
            Route::Generic { proj } => {
                let mut big = SVec::new();
                for (&i, a) in m {
                    for (&j, b) in n {
                        big.insert(i * self.n_dim + j, a * b);
                    }
                }
                mat_apply(proj, &big)
            }
        }
    }

    /// For each basis vector of the tensor product, a pure tensor
    /// e_i ⊗ e_j that equals it exactly.
    pub fn basis_pure_reps(&self) -> Vec<(usize, usize)> {
        match &self.kind {
            Route::Free { free_cols, .. } => {
                let mut out = Vec::new();
                for &fc in free_cols {
                    for j in 0..self.n_dim {
                        out.push((fc, j));
                    }
                }
                out
            }
            Route::Generic { proj } => {
                // columns of the section are original coordinates; recover
                // them as the unique coordinate mapping to each basis vector
                let mut out = vec![(0usize, 0usize); self.bim.dim()];
                let mut found = vec![false; self.bim.dim()];
                for idx in 0..self.m_dim * self.n_dim {
                    let img = mat_apply(proj, &svec_unit(idx));
                    if img.len() == 1 {
                        let (&r, v) = img.iter().next().unwrap();
                        if v.is_one() && !found[r] {
                            out[r] = (idx / self.n_dim, idx % self.n_dim);
                            found[r] = true;
                        }
                    }
                }
                assert!(found.iter().all(|&f| f), "missing pure representatives");
                out
            }
        }
    }
}

/// M ⊗_C N where C = M.right = N.left, as a (M.left, N.right)-bimodule.
///
/// Uses the free-module route when M is free as a right C-module (always
/// the case for the induction/restriction bimodules handled here), and
/// falls back to the generic quotient construction otherwise.
pub fn tensor_over(m: &Bimodule, n: &Bimodule) -> TensorProduct {
    assert_eq!(m.right, n.left, "middle algebras must agree");
    tensor_over_free(m, n).unwrap_or_else(|| tensor_over_generic(m, n))
}

/// The free-route construction; None if a free right-module basis could
/// not be exhibited.
pub fn tensor_over_free(m: &Bimodule, n: &Bimodule) -> Option<TensorProduct> {
    assert_eq!(m.right, n.left, "middle algebras must agree");
    let middle = m.right.clone();
    let (m_dim, n_dim, c_dim) = (m.dim(), n.dim(), middle.dim());
    if m_dim % c_dim != 0 {
        return None;
    }
    // M·rad(C): the right ideal generated by the generator images, i.e.
    // the right-closure of { e_i · g }.
    let mut span = RowSpace::empty(m_dim);
    let mut work: Vec<SVec> = Vec::new();
    for g in 0..middle.num_gens() {
        for i in 0..m_dim {
            let v = mat_apply(m.right_gen(g), &svec_unit(i));
            if span.insert(&svec_to_dense(&v, m_dim)) {
                work.push(v);
            }
        }
    }
    while let Some(v) = work.pop() {
        for g in 0..middle.num_gens() {
            let w = mat_apply(m.right_gen(g), &v);
            if span.insert(&svec_to_dense(&w, m_dim)) {
                work.push(w);
            }
        }
    }
    // complement coordinates generate M as a right C-module
    let pivots = span.pivot_cols();
    let free_cols: Vec<usize> = (0..m_dim).filter(|c| !pivots.contains(c)).collect();
    let rank = free_cols.len();
    if rank * c_dim != m_dim {
        return None;
    }
    // B[(t,w)] = e_{free_cols[t]} · c_w; invertibility certifies freeness
    let mut b = RatMatrix::zero(m_dim, m_dim);
    for (t, &fc) in free_cols.iter().enumerate() {
        for w in 0..c_dim {
            let col = m.act_right_basis(w, &svec_unit(fc));
            for (&r, v) in &col {
                b.set(r, t * c_dim + w, v.clone());
            }
        }
    }
    let binv = b.inverse()?;
    let n_left: Vec<RatMatrix> = (0..middle.num_gens()).map(|g| n.left_gen(g).clone()).collect();
    let dim = rank * n_dim;
    let mut degrees = Vec::with_capacity(dim);
    for &fc in &free_cols {
        for j in 0..n_dim {
            degrees.push(m.degrees[fc] + n.degrees[j]);
        }
    }
    let tp_kind = Route::Free {
        free_cols: free_cols.clone(),
        binv,
        middle,
        n_left,
    };
    let shell = TensorProduct {
        bim: Bimodule {
            left: m.left.clone(),
            right: n.right.clone(),
            degrees: degrees.clone(),
            left_act: vec![],
            right_act: vec![],
        },
        route: "free",
        m_dim,
        n_dim,
        kind: tp_kind,
    };
    // left action: a·(e_t ⊗ e_j) = (a·e_t) ⊗ e_j re-expressed as pure tensor
    let mut left_act = Vec::new();
    for g in 0..m.left.num_gens() {
        let mut mat = RatMatrix::zero(dim, dim);
        for (t, &fc) in free_cols.iter().enumerate() {
            let me = mat_apply(m.left_gen(g), &svec_unit(fc));
            for j in 0..n_dim {
                let col = shell.pure_tensor(&me, &svec_unit(j));
                for (&r, v) in &col {
                    mat.set(r, t * n_dim + j, v.clone());
                }
            }
        }
        left_act.push(mat);
    }
    // right action: blockwise action on the N side
    let mut right_act = Vec::new();
    for g in 0..n.right.num_gens() {
        let blocks: Vec<&RatMatrix> = (0..rank).map(|_| n.right_gen(g)).collect();
        right_act.push(RatMatrix::block_diag(&blocks));
    }
    let mut tp = shell;
    tp.bim.left_act = left_act;
    tp.bim.right_act = right_act;
    Some(tp)
}

/// The generic construction: quotient of M ⊗_Q N by the span of
/// (m·c) ⊗ n − m ⊗ (c·n) for the middle generators c.
pub fn tensor_over_generic(m: &Bimodule, n: &Bimodule) -> TensorProduct {
    assert_eq!(m.right, n.left, "middle algebras must agree");
    let middle = m.right.clone();
    let (m_dim, n_dim) = (m.dim(), n.dim());
    let big = m_dim * n_dim;
    let in_ = RatMatrix::identity(n_dim);
    let im = RatMatrix::identity(m_dim);
    let mut rel_cols: Vec<SVec> = Vec::new();
    for g in 0..middle.num_gens() {
        let lhs = m.right_gen(g).kronecker(&in_);
        let rhs = im.kronecker(n.left_gen(g));
        let diff = lhs.sub(&rhs);
        for c in 0..big {
            let col = mat_apply(&diff, &svec_unit(c));
            if !col.is_empty() {
                rel_cols.push(col);
            }
        }
    }
    let mut rels = RatMatrix::zero(big, rel_cols.len());
    for (c, col) in rel_cols.iter().enumerate() {
        for (&r, v) in col {
            rels.set(r, c, v.clone());
        }
    }
    let qd = quotient_projection(big, &rels);
    let degrees: Vec<i64> = qd
        .complement_cols
        .iter()
        .map(|&idx| m.degrees[idx / n_dim] + n.degrees[idx % n_dim])
        .collect();
    let mut left_act = Vec::new();
    for g in 0..m.left.num_gens() {
        let bigact = m.left_gen(g).kronecker(&in_);
        left_act.push(qd.proj.mul(&bigact).mul(&qd.section));
    }
    let mut right_act = Vec::new();
    for g in 0..n.right.num_gens() {
        let bigact = im.kronecker(n.right_gen(g));
        right_act.push(qd.proj.mul(&bigact).mul(&qd.section));
    }
    TensorProduct {
        bim: Bimodule {
            left: m.left.clone(),
            right: n.right.clone(),
            degrees,
            left_act,
            right_act,
        },
        route: "generic",
        m_dim,
        n_dim,
        kind: Route::Generic { proj: qd.proj },
    }
}

/// The map f ⊗ 1 : (M ⊗_C N) -> (M' ⊗_C N) induced by a map of right
/// C-modules given as a matrix on the M side.
pub fn induced_map_left(t: &TensorProduct, t2: &TensorProduct, f: &RatMatrix) -> RatMatrix {
    let reps = t.basis_pure_reps();
    let mut out = RatMatrix::zero(t2.dim(), t.dim());
    for (c, &(i, j)) in reps.iter().enumerate() {
        let fm = mat_apply(f, &svec_unit(i));
        let col = t2.pure_tensor(&fm, &svec_unit(j));
        for (&r, v) in &col {
            out.set(r, c, v.clone());
        }
    }
    out
}

/// The map 1 ⊗ g : (M ⊗_C N) -> (M ⊗_C N') induced on the N side.
pub fn induced_map_right(t: &TensorProduct, t2: &TensorProduct, g: &RatMatrix) -> RatMatrix {
    let reps = t.basis_pure_reps();
    let mut out = RatMatrix::zero(t2.dim(), t.dim());
    for (c, &(i, j)) in reps.iter().enumerate() {
        let gn = mat_apply(g, &svec_unit(j));
        let col = t2.pure_tensor(&svec_unit(i), &gn);
        for (&r, v) in &col {
            out.set(r, c, v.clone());
        }
    }
    out
}

/// Smallest sub-bimodule containing the seed vectors, with its inclusion.
pub fn sub_bimodule(m: &Bimodule, seeds: &[SVec]) -> (Bimodule, RatMatrix) {
    let dim = m.dim();
    let mut span = RowSpace::empty(dim);
    let mut basis: Vec<SVec> = Vec::new();
    let mut work: Vec<SVec> = Vec::new();
    for s in seeds {
        if span.insert(&svec_to_dense(s, dim)) {
            basis.push(s.clone());
            work.push(s.clone());
        }
    }
    while let Some(v) = work.pop() {
        for g in 0..m.left.num_gens() {
            let w = mat_apply(m.left_gen(g), &v);
            if span.insert(&svec_to_dense(&w, dim)) {
                basis.push(w.clone());
                work.push(w);
            }
        }
        for g in 0..m.right.num_gens() {
            let w = mat_apply(m.right_gen(g), &v);
            if span.insert(&svec_to_dense(&w, dim)) {
                basis.push(w.clone());
                work.push(w);
            }
        }
    }
    let r = basis.len();
    let mut incl = RatMatrix::zero(dim, r);
    for (c, v) in basis.iter().enumerate() {
        for (&i, x) in v {
            incl.set(i, c, x.clone());
        }
    }
    let induce = |act: &RatMatrix| -> RatMatrix {
        let mut out = RatMatrix::zero(r, r);
        for c in 0..r {
            let img = act.mul(&incl);
            let col = img.column(c);
            let x = incl.solve(&col).expect("subspace closed under action");
            out.set_column(c, &x);
        }
        out
    };
    let left_act = m.left_act.iter().map(&induce).collect();
    let right_act = m.right_act.iter().map(&induce).collect();
    let degrees = basis
        .iter()
        .map(|v| {
            let (&i, _) = v.iter().next().expect("nonzero basis vector");
            let d = m.degrees[i];
            assert!(
                v.keys().all(|&j| m.degrees[j] == d),
                "sub-bimodule seed not homogeneous"
            );
            d
        })
        .collect();
    let sub = Bimodule {
        left: m.left.clone(),
        right: m.right.clone(),
        degrees,
        left_act,
        right_act,
    };
    (sub, incl)
}

/// rad M = (positive-degree part of A)·M + M·(positive-degree part of B),
/// valid because both algebras are graded local.
pub fn radical_sub(m: &Bimodule) -> (Bimodule, RatMatrix) {
    let mut seeds = Vec::new();
    for i in 0..m.dim() {
        for g in 0..m.left.num_gens() {
            let v = mat_apply(m.left_gen(g), &svec_unit(i));
            if !v.is_empty() {
                seeds.push(v);
            }
        }
        for g in 0..m.right.num_gens() {
            let v = mat_apply(m.right_gen(g), &svec_unit(i));
            if !v.is_empty() {
                seeds.push(v);
            }
        }
    }
    sub_bimodule(m, &seeds)
}

/// Quotient of M by the column span of `sub` (which must be action-stable
/// and homogeneous).
pub fn quotient_bimodule(m: &Bimodule, sub: &RatMatrix) -> (Bimodule, RatMatrix) {
    let qd = quotient_projection(m.dim(), sub);
    let degrees: Vec<i64> = qd.complement_cols.iter().map(|&c| m.degrees[c]).collect();
    let act = |a: &RatMatrix| qd.proj.mul(a).mul(&qd.section);
    let q = Bimodule {
        left: m.left.clone(),
        right: m.right.clone(),
        degrees,
        left_act: m.left_act.iter().map(&act).collect(),
        right_act: m.right_act.iter().map(&act).collect(),
    };
    (q, qd.proj)
}

/// Outcome of an isomorphism search.
pub enum IsoOutcome {
    /// an explicit verified isomorphism
    Yes(BimoduleMap),
    /// a human-readable witness of failure
    No(String),
}

/// How degrees are treated during an isomorphism search.
#[derive(Clone, Copy, Debug)]
pub enum IsoMode {
    /// maps raising degree by the given shift
    Graded(i64),
    /// ignore the grading entirely
    Ungraded,
}

/// Decide whether two bimodules are isomorphic as graded bimodules,
/// searching the degree-0 hom space for an invertible element.
pub fn is_isomorphic(m: &Bimodule, n: &Bimodule, seed: u64) -> IsoOutcome {
    is_isomorphic_with(m, n, seed, IsoMode::Graded(0))
}

/// Isomorphism search with an explicit degree convention.
pub fn is_isomorphic_with(m: &Bimodule, n: &Bimodule, seed: u64, mode: IsoMode) -> IsoOutcome {
    use rand::{Rng, SeedableRng};
    if m.left != n.left || m.right != n.right {
        return IsoOutcome::No("different acting algebras".to_string());
    }
    if m.dim() != n.dim() {
        return IsoOutcome::No(format!("dimensions differ: {} vs {}", m.dim(), n.dim()));
    }
    if let IsoMode::Graded(shift) = mode {
        let shifted: BTreeMap<i64, usize> = m
            .graded_dimension()
            .into_iter()
            .map(|(d, c)| (d + shift, c))
            .collect();
        if shifted != n.graded_dimension() {
            return IsoOutcome::No(format!(
                "graded dimensions differ (shift {shift}): {:?} vs {:?}",
                m.graded_dimension(),
                n.graded_dimension()
            ));
        }
    }
    let homs = match mode {
        IsoMode::Graded(shift) => hom_space_graded(m, n, shift),
        IsoMode::Ungraded => hom_space(m, n),
    };
    if homs.is_empty() {
        return IsoOutcome::No("the hom space is zero".to_string());
    }
    let try_mat = |mat: RatMatrix| -> Option<BimoduleMap> {
        if mat.is_invertible() {
            let map = BimoduleMap {
                matrix: mat,
                shift: match mode {
                    IsoMode::Graded(shift) => shift,
                    IsoMode::Ungraded => 0,
                },
            };
            match mode {
                IsoMode::Graded(_) => map.verify_iso(m, n).ok()?,
                IsoMode::Ungraded => {
                    map.verify_action(m, n).ok()?;
                }
            }
            Some(map)
        } else {
            None
        }
    };
    for h in &homs {
        if let Some(map) = try_mat(h.clone()) {
            return IsoOutcome::Yes(map);
        }
    }
    // sum of all basis maps, then seeded random rational combinations
    let mut sum = RatMatrix::zero(n.dim(), m.dim());
    for h in &homs {
        sum = sum.add(h);
    }
    if let Some(map) = try_mat(sum) {
        return IsoOutcome::Yes(map);
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let attempts = 25;
    for _ in 0..attempts {
        let mut combo = RatMatrix::zero(n.dim(), m.dim());
        for h in &homs {
            let c = crate::linalg::q_int(rng.gen_range(-9..=9i64));
            combo = combo.add(&h.scale(&c));
        }
        if let Some(map) = try_mat(combo) {
            return IsoOutcome::Yes(map);
        }
    }
    let reverse = match mode {
        IsoMode::Graded(shift) => hom_space_graded(n, m, -shift).len(),
        IsoMode::Ungraded => hom_space(n, m).len(),
    };
    IsoOutcome::No(format!(
        "no invertible map in the {}-dimensional hom space after {} seeded random combinations (hom in the other direction has dimension {})",
        homs.len(),
        attempts,
        reverse
    ))
}

/// Isomorphism search where the degree shift is inferred from the degree
/// multisets; falls back to an ungraded search when no uniform shift
/// aligns them.
pub fn find_iso_auto(m: &Bimodule, n: &Bimodule, seed: u64) -> IsoOutcome {
    if m.dim() == n.dim() && m.dim() > 0 {
        let dm = m.graded_dimension();
        let dn = n.graded_dimension();
        let shift = dn.keys().next().unwrap() - dm.keys().next().unwrap();
        let shifted: BTreeMap<i64, usize> = dm.into_iter().map(|(d, c)| (d + shift, c)).collect();
        if shifted == dn {
            return is_isomorphic_with(m, n, seed, IsoMode::Graded(shift));
        }
    }
    is_isomorphic_with(m, n, seed, IsoMode::Ungraded)
}

/// Outcome of an indecomposability test via the endomorphism algebra.
#[derive(Debug)]
pub enum Indecomposability {
    /// End(M)/rad is one-dimensional
    Indecomposable { end_dim: usize },
    /// a nontrivial idempotent endomorphism, exhibited
    Decomposable { idempotent: RatMatrix },
    /// End/rad has dimension > 1 but no idempotent was found in the search
    Unknown { end_dim: usize, semisimple_dim: usize },
}

/// Test indecomposability as a graded bimodule: M is indecomposable iff
/// its degree-0 endomorphism algebra is local, i.e. E/rad(E) is
/// one-dimensional; rad(E) is the radical of the trace form of the left
/// regular representation (exact in characteristic zero).
pub fn is_indecomposable(m: &Bimodule) -> Indecomposability {
    let ends = hom_space_graded(m, m, 0);
    let e = ends.len();
    if e == 0 {
        // zero module; conventionally not indecomposable
        return Indecomposability::Unknown {
            end_dim: 0,
            semisimple_dim: 0,
        };
    }
    if e == 1 {
        return Indecomposability::Indecomposable { end_dim: 1 };
    }
    let d = m.dim();
    // coordinates of an endomorphism in the chosen basis of E
    let mut flat = RatMatrix::zero(d * d, e);
    for (c, h) in ends.iter().enumerate() {
        for r in 0..d {
            for (cc, v) in h.row(r) {
                flat.set(r * d + cc, c, v.clone());
            }
        }
    }
    let coords_of = |mat: &RatMatrix| -> Vec<Q> {
        let mut vec = vec![Q::zero(); d * d];
        for r in 0..d {
            for (cc, v) in mat.row(r) {
                vec[r * d + cc] = v.clone();
            }
        }
        flat.solve(&vec).expect("product stays in End")
    };
    // left-multiplication matrices of the basis elements
    let mut lmats: Vec<RatMatrix> = Vec::new();
    for hi in &ends {
        let mut l = RatMatrix::zero(e, e);
        for (j, hj) in ends.iter().enumerate() {
            let prod = hi.mul(hj);
            l.set_column(j, &coords_of(&prod));
        }
        lmats.push(l);
    }
    let tr = |mat: &RatMatrix| -> Q {
        let mut s = Q::zero();
        for i in 0..mat.rows() {
            s += mat.get(i, i);
        }
        s
    };
    let ltr: Vec<Q> = lmats.iter().map(&tr).collect();
    let mut gram = RatMatrix::zero(e, e);
    for i in 0..e {
        for j in 0..e {
            // tr(L_{e_i e_j}) expanded via the coordinates of e_i e_j
            let coords = coords_of(&ends[i].mul(&ends[j]));
            let mut s = Q::zero();
            for (k, c) in coords.iter().enumerate() {
                s += c * &ltr[k];
            }
            gram.set(i, j, s);
        }
    }
    let ss_dim = gram.rank();
    if ss_dim == 1 {
        return Indecomposability::Indecomposable { end_dim: e };
    }
    // hunt for an idempotent among basis elements and pairwise combinations
    let ident = RatMatrix::identity(d);
    let is_nontrivial_idem = |b: &RatMatrix| -> bool {
        !b.is_zero_matrix() && *b != ident && b.mul(b) == *b
    };
    for h in &ends {
        if is_nontrivial_idem(h) {
            return Indecomposability::Decomposable {
                idempotent: h.clone(),
            };
        }
    }
    for i in 0..e {
        for j in 0..e {
            if i == j {
                continue;
            }
            for (a, b) in [(1i64, 1i64), (1, -1), (2, 1), (1, 2)] {
                let cand = ends[i]
                    .scale(&crate::linalg::q_int(a))
                    .add(&ends[j].scale(&crate::linalg::q_int(b)));
                if is_nontrivial_idem(&cand) {
                    return Indecomposability::Decomposable { idempotent: cand };
                }
            }
        }
    }
    Indecomposability::Unknown {
        end_dim: e,
        semisimple_dim: ss_dim,
    }
}
