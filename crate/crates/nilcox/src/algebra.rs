//! The nilCoxeter algebra A_n, nil wreath products A_n(k), and tensor
//! products of both. Elements are sparse rational combinations of a
//! canonical basis indexed by permutations (with z-exponent vectors for
//! wreath factors), ordered lexicographically.
//!
//! ```
//! use nilcox::algebra::{AlgebraElement, AlgebraId};
//! use nilcox::perm::Permutation;
//!
//! let a3 = AlgebraId::nil(3);
//! assert_eq!(a3.dim(), 6); // dim A_n = n!
//!
//! let y1 = AlgebraElement::y(&a3, &Permutation::transposition(3, 1));
//! assert!(y1.multiply(&y1).unwrap().coeffs.is_empty()); // Y_1² = 0
//!
//! // the trace form tr(ab) is nondegenerate
//! assert_eq!(nilcox::algebra::gram_matrix(3).rank(), 6);
//! ```

use crate::linalg::Q;
use crate::perm::Permutation;
use crate::poly::{MVPoly, PolyQ};
use num::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

/// One tensor factor of an algebra descriptor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Factor {
    /// nilCoxeter algebra on n strands, dimension n!
    Nil(usize),
    /// nil wreath product A_n(k) = A_n ⋉ (Q[z]/z^k)^{⊗n}, dimension n!·k^n
    NilWreath { n: usize, k: usize },
}

impl Factor {
    fn strands(&self) -> usize {
        match *self {
            Factor::Nil(n) => n,
            Factor::NilWreath { n, .. } => n,
        }
    }

    fn z_order(&self) -> usize {
        match *self {
            Factor::Nil(_) => 1,
            Factor::NilWreath { k, .. } => k,
        }
    }
}

/// Which generator of a single factor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenKind {
    /// Y_i, 1-based, 1 <= i <= n-1
    Y(usize),
    /// z on strand j, 1-based (wreath factors with k >= 2 only)
    Z(usize),
}

/// A generator of a tensor-product algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Gen {
    pub factor: usize,
    pub kind: GenKind,
}

struct FactorData {
    factor: Factor,
    perms: Vec<Permutation>,
    perm_index: HashMap<Vec<usize>, usize>,
    /// k^n, the number of z-exponent vectors
    zdim: usize,
    dim: usize,
}

impl FactorData {
    fn new(factor: Factor) -> Self {
        let n = factor.strands();
        let k = factor.z_order();
        let perms = Permutation::all(n);
        let perm_index = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.word().to_vec(), i))
            .collect();
        let zdim = k.pow(n as u32);
        let dim = perms.len() * zdim;
        FactorData {
            factor,
            perms,
            perm_index,
            zdim,
            dim,
        }
    }

    fn n(&self) -> usize {
        self.factor.strands()
    }

    fn k(&self) -> usize {
        self.factor.z_order()
    }

    fn split(&self, idx: usize) -> (usize, Vec<usize>) {
        let (pi, mut zi) = (idx / self.zdim, idx % self.zdim);
        let n = self.n();
        let k = self.k();
        let mut exps = vec![0; n];
        for j in (0..n).rev() {
            exps[j] = zi % k;
            zi /= k;
        }
        (pi, exps)
    }

    fn join(&self, pi: usize, exps: &[usize]) -> usize {
        let k = self.k();
        let mut zi = 0;
        for &e in exps {
            debug_assert!(e < k);
            zi = zi * k + e;
        }
        pi * self.zdim + zi
    }

    /// Y_u z^a · Y_v z^b = Y_{uv} z^{a∘v + b} (zero if lengths do not add
    /// or a z-power reaches k). Basis normal form is z^a Y_w, so the
    /// product (z^a Y_u)(z^b Y_v) commutes z^b past Y_u first.
    fn mul(&self, i: usize, j: usize) -> Option<usize> {
        let (pi, a) = self.split(i);
        let (pj, b) = self.split(j);
        let u = &self.perms[pi];
        let v = &self.perms[pj];
        if !u.lengths_add(v) {
            return None;
        }
        let uv = u.compose(v);
        let k = self.k();
        let n = self.n();
        let uinv = u.inverse();
        let mut c = vec![0usize; n];
        for t in 0..n {
            // Y_u z_j = z_{u(j)} Y_u, so z^b conjugates to b'_t = b_{u^{-1}(t)}
            let e = a[t] + b[uinv.apply(t + 1) - 1];
            if e >= k {
                return None;
            }
            c[t] = e;
        }
        let pidx = self.perm_index[&uv.word().to_vec()];
        Some(self.join(pidx, &c))
    }

    fn degree(&self, idx: usize) -> i64 {
        let (pi, exps) = self.split(idx);
        self.perms[pi].length() as i64 + exps.iter().sum::<usize>() as i64
    }

    fn gens(&self) -> Vec<GenKind> {
        let mut out = Vec::new();
        for i in 1..self.n() {
            out.push(GenKind::Y(i));
        }
        if self.k() >= 2 {
            for j in 1..=self.n() {
                out.push(GenKind::Z(j));
            }
        }
        out
    }

    fn gen_index(&self, kind: GenKind) -> usize {
        let n = self.n();
        match kind {
            GenKind::Y(i) => {
                let s = Permutation::transposition(n, i);
                let pi = self.perm_index[&s.word().to_vec()];
                self.join(pi, &vec![0; n])
            }
            GenKind::Z(j) => {
                let mut exps = vec![0; n];
                exps[j - 1] = 1;
                self.join(0, &exps)
            }
        }
    }

    /// Generator word evaluating to the basis element z^a Y_w.
    fn word(&self, idx: usize) -> Vec<GenKind> {
        let (pi, exps) = self.split(idx);
        let mut out = Vec::new();
        for (j, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                out.push(GenKind::Z(j + 1));
            }
        }
        for i in self.perms[pi].reduced_word() {
            out.push(GenKind::Y(i));
        }
        out
    }

    fn label(&self, idx: usize) -> String {
        let (pi, exps) = self.split(idx);
        let w = &self.perms[pi];
        let mut s = String::new();
        if exps.iter().any(|&e| e > 0) {
            s.push('z');
            s.push_str(&format!("{exps:?}"));
        }
        if w.is_identity() && s.is_empty() {
            return "1".to_string();
        }
        if !w.is_identity() {
            s.push_str(&format!("Y{:?}", w));
        }
        s
    }
}

struct AlgebraData {
    factors: Vec<Factor>,
    factor_data: Vec<FactorData>,
    strides: Vec<usize>,
    dim: usize,
    gens: Vec<Gen>,
}

/// A descriptor of a tensor product of nilCoxeter / nil-wreath factors;
/// cheap to clone, compared by factor list.
#[derive(Clone)]
pub struct AlgebraId(Arc<AlgebraData>);

impl PartialEq for AlgebraId {
    fn eq(&self, other: &Self) -> bool {
        self.0.factors == other.0.factors
    }
}
impl Eq for AlgebraId {}

impl fmt::Debug for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl AlgebraId {
    pub fn from_factors(factors: Vec<Factor>) -> Self {
        for f in &factors {
            if let Factor::NilWreath { k, .. } = f {
                assert!(*k >= 1, "wreath order k must be >= 1");
            }
        }
        let factor_data: Vec<FactorData> = factors.iter().cloned().map(FactorData::new).collect();
        let mut strides = vec![1; factor_data.len()];
        for f in (0..factor_data.len().saturating_sub(1)).rev() {
            strides[f] = strides[f + 1] * factor_data[f + 1].dim;
        }
        let dim = factor_data.iter().map(|fd| fd.dim).product();
        let mut gens = Vec::new();
        for (fi, fd) in factor_data.iter().enumerate() {
            for kind in fd.gens() {
                gens.push(Gen { factor: fi, kind });
            }
        }
        AlgebraId(Arc::new(AlgebraData {
            factors,
            factor_data,
            strides,
            dim,
            gens,
        }))
    }

    /// The nilCoxeter algebra A_n.
    pub fn nil(n: usize) -> Self {
        AlgebraId::from_factors(vec![Factor::Nil(n)])
    }

    /// The nil wreath product A_n(k).
    pub fn nil_wreath(n: usize, k: usize) -> Self {
        AlgebraId::from_factors(vec![Factor::NilWreath { n, k }])
    }

    /// The one-dimensional algebra Q (empty tensor product); the right
    /// algebra of plain left modules.
    pub fn trivial() -> Self {
        AlgebraId::from_factors(vec![])
    }

    /// Tensor product (concatenation of factor lists).
    pub fn tensor(parts: &[&AlgebraId]) -> Self {
        let mut factors = Vec::new();
        for p in parts {
            factors.extend(p.0.factors.iter().cloned());
        }
        AlgebraId::from_factors(factors)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0.factors
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn gens(&self) -> &[Gen] {
        &self.0.gens
    }

    pub fn num_gens(&self) -> usize {
        self.0.gens.len()
    }

    pub fn unit_index(&self) -> usize {
        0
    }

    pub fn describe(&self) -> String {
        if self.0.factors.is_empty() {
            return "Q".to_string();
        }
        self.0
            .factors
            .iter()
            .map(|f| match f {
                Factor::Nil(n) => format!("A{n}"),
                Factor::NilWreath { n, k } => format!("A{n}({k})"),
            })
            .collect::<Vec<_>>()
            .join("⊗")
    }

    /// True when this is a single plain nilCoxeter factor.
    pub fn single_nil(&self) -> Option<usize> {
        match self.0.factors.as_slice() {
            [Factor::Nil(n)] => Some(*n),
            _ => None,
        }
    }

    pub fn single_wreath(&self) -> Option<(usize, usize)> {
        match self.0.factors.as_slice() {
            [Factor::NilWreath { n, k }] => Some((*n, *k)),
            _ => None,
        }
    }

    pub fn split_index(&self, idx: usize) -> Vec<usize> {
        debug_assert!(idx < self.0.dim);
        let mut rest = idx;
        let mut out = Vec::with_capacity(self.0.factors.len());
        for (fd, &stride) in self.0.factor_data.iter().zip(&self.0.strides) {
            out.push(rest / stride);
            rest %= stride;
            debug_assert!(out.last().unwrap() < &fd.dim);
        }
        out
    }

    pub fn join_index(&self, parts: &[usize]) -> usize {
        parts
            .iter()
            .zip(&self.0.strides)
            .map(|(p, s)| p * s)
            .sum()
    }

    /// Product of two canonical basis elements: another basis element or
    /// zero (all structure constants are 0 or 1).
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<usize> {
        let pi = self.split_index(i);
        let pj = self.split_index(j);
        let mut parts = Vec::with_capacity(pi.len());
        for ((a, b), fd) in pi.iter().zip(&pj).zip(&self.0.factor_data) {
            parts.push(fd.mul(*a, *b)?);
        }
        Some(self.join_index(&parts))
    }

    pub fn basis_degree(&self, idx: usize) -> i64 {
        self.split_index(idx)
            .iter()
            .zip(&self.0.factor_data)
            .map(|(&i, fd)| fd.degree(i))
            .sum()
    }

    pub fn degrees(&self) -> Vec<i64> {
        (0..self.dim()).map(|i| self.basis_degree(i)).collect()
    }

    /// Basis index of a generator viewed as an algebra element.
    pub fn gen_basis_index(&self, g: usize) -> usize {
        let gen = self.0.gens[g];
        let mut parts = vec![0; self.0.factors.len()];
        parts[gen.factor] = self.0.factor_data[gen.factor].gen_index(gen.kind);
        self.join_index(&parts)
    }

    /// A word in generator indices evaluating to the basis element.
    pub fn basis_word(&self, idx: usize) -> Vec<usize> {
        let parts = self.split_index(idx);
        let mut out = Vec::new();
        for (fi, (&p, fd)) in parts.iter().zip(&self.0.factor_data).enumerate() {
            for kind in fd.word(p) {
                let g = self
                    .0
                    .gens
                    .iter()
                    .position(|gg| gg.factor == fi && gg.kind == kind)
                    .expect("generator present");
                out.push(g);
            }
        }
        out
    }

    pub fn basis_label(&self, idx: usize) -> String {
        let parts = self.split_index(idx);
        let labels: Vec<String> = parts
            .iter()
            .zip(&self.0.factor_data)
            .map(|(&p, fd)| fd.label(p))
            .collect();
        if labels.is_empty() {
            "1".to_string()
        } else {
            labels.join("⊗")
        }
    }

    /// The permutation list of a single nilCoxeter (or wreath) factor.
    pub fn factor_perms(&self, f: usize) -> &[Permutation] {
        &self.0.factor_data[f].perms
    }

    /// Basis index of Y_w in a single-factor algebra (z-exponents zero).
    pub fn perm_basis_index(&self, f: usize, w: &Permutation) -> usize {
        let fd = &self.0.factor_data[f];
        let pi = fd.perm_index[&w.word().to_vec()];
        let local = fd.join(pi, &vec![0; fd.n()]);
        let mut parts = vec![0; self.0.factors.len()];
        parts[f] = local;
        self.join_index(&parts)
    }

    /// Decode a basis index of a single-factor algebra into (w, exps).
    pub fn factor_split(&self, f: usize, idx: usize) -> (Permutation, Vec<usize>) {
        let parts = self.split_index(idx);
        let fd = &self.0.factor_data[f];
        let (pi, exps) = fd.split(parts[f]);
        (fd.perms[pi].clone(), exps)
    }

    /// Sum of q^{deg} over the canonical basis. For A_n this is the
    /// q-factorial [n]!.
    pub fn poincare_polynomial(&self) -> PolyQ {
        let mut p = PolyQ::zero();
        for i in 0..self.dim() {
            p = p.add(&PolyQ::monomial(self.basis_degree(i) as usize));
        }
        p
    }

    /// Defining relations as generator-index words: each entry says
    /// `lhs = rhs` (or `lhs = 0` when rhs is None). Together with
    /// bilinearity these determine the multiplication.
    pub fn relations(&self) -> Vec<(Vec<usize>, Option<Vec<usize>>)> {
        let find = |fi: usize, kind: GenKind| {
            self.0
                .gens
                .iter()
                .position(|g| g.factor == fi && g.kind == kind)
                .unwrap()
        };
        let mut rels = Vec::new();
        for (fi, fd) in self.0.factor_data.iter().enumerate() {
            let n = fd.n();
            let k = fd.k();
            for i in 1..n {
                let yi = find(fi, GenKind::Y(i));
                rels.push((vec![yi, yi], None));
                for j in i + 2..n {
                    let yj = find(fi, GenKind::Y(j));
                    rels.push((vec![yi, yj], Some(vec![yj, yi])));
                }
                if i + 1 < n {
                    let yi1 = find(fi, GenKind::Y(i + 1));
                    rels.push((vec![yi, yi1, yi], Some(vec![yi1, yi, yi1])));
                }
            }
            if k >= 2 {
                for j in 1..=n {
                    let zj = find(fi, GenKind::Z(j));
                    rels.push((vec![zj; k], None));
                    for j2 in j + 1..=n {
                        let z2 = find(fi, GenKind::Z(j2));
                        rels.push((vec![zj, z2], Some(vec![z2, zj])));
                    }
                    for i in 1..n {
                        let yi = find(fi, GenKind::Y(i));
                        // Y_i z_j = z_{s_i(j)} Y_i
                        let sj = if j == i {
                            i + 1
                        } else if j == i + 1 {
                            i
                        } else {
                            j
                        };
                        let zs = find(fi, GenKind::Z(sj));
                        rels.push((vec![yi, zj], Some(vec![zs, yi])));
                    }
                }
            }
        }
        // generators in distinct factors commute
        for a in 0..self.0.gens.len() {
            for b in a + 1..self.0.gens.len() {
                if self.0.gens[a].factor != self.0.gens[b].factor {
                    rels.push((vec![a, b], Some(vec![b, a])));
                }
            }
        }
        rels
    }
}

/// A sparse element of an algebra: canonical basis index -> coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    pub algebra: AlgebraId,
    pub coeffs: BTreeMap<usize, Q>,
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{}", self.algebra.basis_label(*i))?;
            } else {
                write!(f, "{}·{}", c, self.algebra.basis_label(*i))?;
            }
        }
        Ok(())
    }
}

impl AlgebraElement {
    pub fn zero(algebra: &AlgebraId) -> Self {
        AlgebraElement {
            algebra: algebra.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn unit(algebra: &AlgebraId) -> Self {
        AlgebraElement::basis(algebra, algebra.unit_index())
    }

    pub fn basis(algebra: &AlgebraId, idx: usize) -> Self {
        assert!(idx < algebra.dim(), "basis index out of range");
        let mut coeffs = BTreeMap::new();
        coeffs.insert(idx, Q::one());
        AlgebraElement {
            algebra: algebra.clone(),
            coeffs,
        }
    }

    pub fn generator(algebra: &AlgebraId, g: usize) -> Self {
        AlgebraElement::basis(algebra, algebra.gen_basis_index(g))
    }

    /// Y_w in a single-factor algebra.
    pub fn y(algebra: &AlgebraId, w: &Permutation) -> Self {
        AlgebraElement::basis(algebra, algebra.perm_basis_index(0, w))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            let e = out.coeffs.entry(i).or_insert_with(Q::zero);
            *e += c;
            if e.is_zero() {
                out.coeffs.remove(&i);
            }
        }
        out
    }

    pub fn scale(&self, s: &Q) -> AlgebraElement {
        if s.is_zero() {
            return AlgebraElement::zero(&self.algebra);
        }
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c *= s;
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.scale(&-Q::one()))
    }

    /// Bilinear extension of the basis multiplication rule.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement, String> {
        if self.algebra != other.algebra {
            return Err(format!(
                "algebra mismatch: {} vs {}",
                self.algebra.describe(),
                other.algebra.describe()
            ));
        }
        let mut out = AlgebraElement::zero(&self.algebra);
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                if let Some(k) = self.algebra.mul_basis(i, j) {
                    let e = out.coeffs.entry(k).or_insert_with(Q::zero);
                    *e += a * b;
                    if e.is_zero() {
                        out.coeffs.remove(&k);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Coefficient of Y_{w_0}, for a single nilCoxeter factor.
    pub fn trace(&self) -> Result<Q, String> {
        let n = self
            .algebra
            .single_nil()
            .ok_or_else(|| "trace requires a single nilCoxeter factor".to_string())?;
        let w0 = Permutation::longest_element(n);
        let idx = self.algebra.perm_basis_index(0, &w0);
        Ok(self.coeffs.get(&idx).cloned().unwrap_or_else(Q::zero))
    }

    /// The involution determined by Y_i -> Y_{n-i}; on the basis it is
    /// conjugation by the longest element: Y_w -> Y_{w_0 w w_0}.
    pub fn psi(&self) -> Result<AlgebraElement, String> {
        let n = self
            .algebra
            .single_nil()
            .ok_or_else(|| "psi requires a single nilCoxeter factor".to_string())?;
        let w0 = Permutation::longest_element(n);
        let mut out = AlgebraElement::zero(&self.algebra);
        for (&i, c) in &self.coeffs {
            let (w, _) = self.algebra.factor_split(0, i);
            let img = w0.compose(&w).compose(&w0);
            out.coeffs
                .insert(self.algebra.perm_basis_index(0, &img), c.clone());
        }
        Ok(out)
    }

    /// The antiinvolution fixing each Y_i: Y_w -> Y_{w^{-1}}.
    pub fn antiinvolution_u(&self) -> Result<AlgebraElement, String> {
        self.algebra
            .single_nil()
            .ok_or_else(|| "u requires a single nilCoxeter factor".to_string())?;
        let mut out = AlgebraElement::zero(&self.algebra);
        for (&i, c) in &self.coeffs {
            let (w, _) = self.algebra.factor_split(0, i);
            out.coeffs
                .insert(self.algebra.perm_basis_index(0, &w.inverse()), c.clone());
        }
        Ok(out)
    }

    /// Reinterpret an element of a sub-tensor as an element of `big`,
    /// occupying factor slots starting at `slot`, identity elsewhere.
    pub fn embed_into_slots(&self, big: &AlgebraId, slot: usize) -> AlgebraElement {
        let nsub = self.algebra.factors().len();
        assert_eq!(
            &big.factors()[slot..slot + nsub],
            self.algebra.factors(),
            "factor mismatch in embedding"
        );
        let mut out = AlgebraElement::zero(big);
        for (&i, c) in &self.coeffs {
            let sub_parts = self.algebra.split_index(i);
            let mut parts = vec![0; big.factors().len()];
            parts[slot..slot + nsub].clone_from_slice(&sub_parts);
            out.coeffs.insert(big.join_index(&parts), c.clone());
        }
        out
    }
}

/// An algebra homomorphism given by generator images.
#[derive(Clone)]
pub struct AlgebraMap {
    pub source: AlgebraId,
    pub target: AlgebraId,
    pub images: Vec<AlgebraElement>,
}

impl AlgebraMap {
    pub fn new(source: AlgebraId, target: AlgebraId, images: Vec<AlgebraElement>) -> Self {
        assert_eq!(images.len(), source.num_gens());
        for img in &images {
            assert_eq!(img.algebra, target, "image in wrong algebra");
        }
        AlgebraMap {
            source,
            target,
            images,
        }
    }

    pub fn identity(id: &AlgebraId) -> Self {
        let images = (0..id.num_gens())
            .map(|g| AlgebraElement::generator(id, g))
            .collect();
        AlgebraMap::new(id.clone(), id.clone(), images)
    }

    /// χ_n: A_n -> A_{n+1}, Y_i -> Y_i (also the wreath version, which
    /// additionally sends z_j -> z_j).
    pub fn inclusion_next(source: &AlgebraId) -> Self {
        let target = match (source.single_nil(), source.single_wreath()) {
            (Some(n), _) => AlgebraId::nil(n + 1),
            (_, Some((n, k))) => AlgebraId::nil_wreath(n + 1, k),
            _ => panic!("inclusion_next requires a single factor"),
        };
        let images = source
            .gens()
            .iter()
            .map(|g| {
                let tg = target
                    .gens()
                    .iter()
                    .position(|h| h.kind == g.kind)
                    .unwrap();
                AlgebraElement::generator(&target, tg)
            })
            .collect();
        AlgebraMap::new(source.clone(), target, images)
    }

    /// The chain A_a -> A_{a+1} -> ... -> A_b of standard inclusions.
    pub fn inclusion_chain(a: usize, b: usize) -> Self {
        assert!(a <= b);
        let mut map = AlgebraMap::identity(&AlgebraId::nil(a));
        for _ in a..b {
            map = AlgebraMap::inclusion_next(&map.target).compose(&map);
        }
        map
    }

    /// γ: A_{p_1} ⊗ ... ⊗ A_{p_r} -> A_{p_1 + ... + p_r}, sending the
    /// i-th generator of the f-th factor to Y_{offset_f + i}.
    pub fn gamma(parts: &[usize]) -> Self {
        let total: usize = parts.iter().sum();
        let ids: Vec<AlgebraId> = parts.iter().map(|&p| AlgebraId::nil(p)).collect();
        let refs: Vec<&AlgebraId> = ids.iter().collect();
        let source = AlgebraId::tensor(&refs);
        let target = AlgebraId::nil(total);
        let mut offsets = vec![0usize; parts.len()];
        for f in 1..parts.len() {
            offsets[f] = offsets[f - 1] + parts[f - 1];
        }
        let images = source
            .gens()
            .iter()
            .map(|g| {
                let GenKind::Y(i) = g.kind else {
                    panic!("gamma applies to plain nilCoxeter factors")
                };
                let tg = target
                    .gens()
                    .iter()
                    .position(|h| h.kind == GenKind::Y(offsets[g.factor] + i))
                    .unwrap();
                AlgebraElement::generator(&target, tg)
            })
            .collect();
        AlgebraMap::new(source, target, images)
    }

    /// t_{n+1}: A_{n+1} -> A_n with Y_i -> Y_i for i < n and Y_n -> 0.
    pub fn truncation(n: usize) -> Self {
        let source = AlgebraId::nil(n + 1);
        let target = AlgebraId::nil(n);
        let images = source
            .gens()
            .iter()
            .map(|g| {
                let GenKind::Y(i) = g.kind else { unreachable!() };
                if i < n {
                    let tg = target
                        .gens()
                        .iter()
                        .position(|h| h.kind == GenKind::Y(i))
                        .unwrap();
                    AlgebraElement::generator(&target, tg)
                } else {
                    AlgebraElement::zero(&target)
                }
            })
            .collect();
        AlgebraMap::new(source, target, images)
    }

    /// ψ_n: A_n -> A_n, Y_i -> Y_{n-i}.
    pub fn psi(n: usize) -> Self {
        let id = AlgebraId::nil(n);
        let images = id
            .gens()
            .iter()
            .map(|g| {
                let GenKind::Y(i) = g.kind else { unreachable!() };
                let tg = id
                    .gens()
                    .iter()
                    .position(|h| h.kind == GenKind::Y(n - i))
                    .unwrap();
                AlgebraElement::generator(&id, tg)
            })
            .collect();
        AlgebraMap::new(id.clone(), id, images)
    }

    /// Reorder tensor factors: `order[f]` is the slot in the target that
    /// source factor `f` occupies.
    pub fn factor_reorder(source: &AlgebraId, order: &[usize]) -> Self {
        assert_eq!(order.len(), source.factors().len());
        let mut target_factors = vec![None; order.len()];
        for (f, &t) in order.iter().enumerate() {
            target_factors[t] = Some(source.factors()[f].clone());
        }
        let target = AlgebraId::from_factors(target_factors.into_iter().map(Option::unwrap).collect());
        let images = source
            .gens()
            .iter()
            .map(|g| {
                let tg = target
                    .gens()
                    .iter()
                    .position(|h| h.factor == order[g.factor] && h.kind == g.kind)
                    .unwrap();
                AlgebraElement::generator(&target, tg)
            })
            .collect();
        AlgebraMap::new(source.clone(), target, images)
    }

    /// Tensor product of maps.
    pub fn tensor(m1: &AlgebraMap, m2: &AlgebraMap) -> Self {
        let source = AlgebraId::tensor(&[&m1.source, &m2.source]);
        let target = AlgebraId::tensor(&[&m1.target, &m2.target]);
        let n1 = m1.source.factors().len();
        let t1 = m1.target.factors().len();
        let images = source
            .gens()
            .iter()
            .map(|g| {
                if g.factor < n1 {
                    let sg = m1
                        .source
                        .gens()
                        .iter()
                        .position(|h| h.factor == g.factor && h.kind == g.kind)
                        .unwrap();
                    m1.images[sg].embed_into_slots(&target, 0)
                } else {
                    let sg = m2
                        .source
                        .gens()
                        .iter()
                        .position(|h| h.factor == g.factor - n1 && h.kind == g.kind)
                        .unwrap();
                    m2.images[sg].embed_into_slots(&target, t1)
                }
            })
            .collect();
        AlgebraMap::new(source, target, images)
    }

    /// self ∘ other.
    pub fn compose(&self, other: &AlgebraMap) -> Self {
        assert_eq!(other.target, self.source, "composition mismatch");
        let images = other.images.iter().map(|img| self.apply(img)).collect();
        AlgebraMap::new(other.source.clone(), self.target.clone(), images)
    }

    pub fn apply_basis(&self, idx: usize) -> AlgebraElement {
        let mut acc = AlgebraElement::unit(&self.target);
        for g in self.source.basis_word(idx) {
            acc = acc.multiply(&self.images[g]).expect("same algebra");
        }
        acc
    }

    pub fn apply(&self, e: &AlgebraElement) -> AlgebraElement {
        assert_eq!(e.algebra, self.source, "element not in source algebra");
        let mut out = AlgebraElement::zero(&self.target);
        for (&i, c) in &e.coeffs {
            out = out.add(&self.apply_basis(i).scale(c));
        }
        out
    }
}

/// The n!×n! matrix G[u][v] = tr(Y_u Y_v) of the trace form of A_n.
pub fn gram_matrix(n: usize) -> crate::linalg::RatMatrix {
    let a = AlgebraId::nil(n);
    let dim = a.dim();
    let w0 = Permutation::longest_element(n);
    let w0_idx = a.perm_basis_index(0, &w0);
    let mut g = crate::linalg::RatMatrix::zero(dim, dim);
    for u in 0..dim {
        for v in 0..dim {
            if a.mul_basis(u, v) == Some(w0_idx) {
                g.set(u, v, Q::one());
            }
        }
    }
    g
}

/// The divided difference operator Y_i f = (f - s_i f) / (x_{i+1} - x_i).
pub fn divided_difference_apply(i: usize, f: &MVPoly) -> MVPoly {
    let numerator = f.sub(&f.swap_vars(i));
    numerator.div_exact_diff(i)
}

/// dim A_n = n! and Poincaré polynomial [n]! up to the given sizes.
pub fn dimension_check(n_max: usize, poincare_max: usize) -> crate::report::CheckData {
    let mut data = crate::report::CheckData::pass();
    for n in 0..=n_max {
        let fact: usize = (1..=n).product::<usize>().max(1);
        let id = AlgebraId::nil(n);
        if id.dim() != fact {
            return crate::report::CheckData::fail(format!(
                "dim A_{n} = {} ≠ {n}! = {fact}",
                id.dim()
            ));
        }
        data = data.dim(format!("A_{n}"), fact);
    }
    data = data.line(format!("dim A_n = n! for n ≤ {n_max}"));
    for n in 0..=poincare_max {
        if AlgebraId::nil(n).poincare_polynomial() != PolyQ::q_factorial(n) {
            return crate::report::CheckData::fail(format!(
                "Poincaré polynomial of A_{n} is not the q-factorial"
            ));
        }
    }
    data.line(format!("Poincaré polynomial of A_n is [n]! for n ≤ {poincare_max}"))
}

/// Nondegeneracy of the trace form: the Gram matrix has full rank n!.
pub fn frobenius_check(n_max: usize) -> crate::report::CheckData {
    let mut data = crate::report::CheckData::pass();
    for n in 0..=n_max {
        let fact: usize = (1..=n).product::<usize>().max(1);
        let rank = gram_matrix(n).rank();
        if rank != fact {
            return crate::report::CheckData::fail(format!(
                "Gram matrix of A_{n} has rank {rank} < {fact}"
            ));
        }
        data = data
            .line(format!("A_{n}: trace form nondegenerate, rank {fact}"))
            .dim(format!("A_{n}"), fact);
    }
    data
}

/// tr(ab) = tr(ψ(b)·a) over all basis pairs: the longest-word twist is
/// the Nakayama automorphism of the trace form.
pub fn nakayama_check(n_max: usize) -> crate::report::CheckData {
    let mut data = crate::report::CheckData::pass();
    for n in 0..=n_max {
        let id = AlgebraId::nil(n);
        for u in 0..id.dim() {
            let a = AlgebraElement::basis(&id, u);
            for v in 0..id.dim() {
                let b = AlgebraElement::basis(&id, v);
                let lhs = a.multiply(&b).unwrap().trace().unwrap();
                let rhs = b.psi().unwrap().multiply(&a).unwrap().trace().unwrap();
                if lhs != rhs {
                    return crate::report::CheckData::fail(format!(
                        "tr(ab) ≠ tr(ψ(b)a) at n={n}, pair ({u},{v})"
                    ));
                }
            }
        }
        data = data.line(format!(
            "A_{n}: tr(ab) = tr(ψ(b)a) on all {} basis pairs",
            id.dim() * id.dim()
        ));
    }
    data
}

fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<MVPoly> {
    fn rec(nvars: usize, deg: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == nvars - 1 {
            cur.push(deg);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for d in 0..=deg {
            cur.push(d);
            rec(nvars, deg - d, pos + 1, cur, out);
            cur.pop();
        }
    }
    let mut exps = Vec::new();
    rec(nvars, deg, 0, &mut Vec::new(), &mut exps);
    exps.into_iter()
        .map(|e| MVPoly::monomial(e, Q::one()))
        .collect()
}

/// The defining relations of the divided-difference operators, checked
/// on every monomial of bounded degree: squares vanish, distant
/// operators commute, and adjacent ones braid.
pub fn divided_difference_check(max_vars: usize, max_deg: u32) -> crate::report::CheckData {
    let mut data = crate::report::CheckData::pass();
    let mut count = 0usize;
    for nvars in 2..=max_vars {
        for deg in 0..=max_deg {
            for f in monomials_of_degree(nvars, deg) {
                for i in 1..nvars {
                    let once = divided_difference_apply(i, &f);
                    if !divided_difference_apply(i, &once).is_zero() {
                        return crate::report::CheckData::fail(format!(
                            "square of operator {i} nonzero on {f}"
                        ));
                    }
                    for j in i + 2..nvars {
                        let ij = divided_difference_apply(i, &divided_difference_apply(j, &f));
                        let ji = divided_difference_apply(j, &divided_difference_apply(i, &f));
                        if ij != ji {
                            return crate::report::CheckData::fail(format!(
                                "operators {i},{j} do not commute on {f}"
                            ));
                        }
                    }
                    if i + 1 < nvars {
                        let d = |k: usize, g: &MVPoly| divided_difference_apply(k, g);
                        let lhs = d(i, &d(i + 1, &d(i, &f)));
                        let rhs = d(i + 1, &d(i, &d(i + 1, &f)));
                        if lhs != rhs {
                            return crate::report::CheckData::fail(format!(
                                "braid relation fails at {i} on {f}"
                            ));
                        }
                    }
                }
                count += 1;
            }
        }
    }
    data = data.line(format!(
        "square, commutation, braid relations hold on {count} monomials (≤ {max_vars} variables, degree ≤ {max_deg})"
    ));
    data.dim("monomials", count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q_int;

    #[test]
    fn check_functions_pass() {
        assert!(dimension_check(6, 5).pass);
        assert!(frobenius_check(4).pass);
        assert!(nakayama_check(4).pass);
        assert!(divided_difference_check(4, 4).pass);
    }

    fn s(n: usize, i: usize) -> Permutation {
        Permutation::transposition(n, i)
    }

    #[test]
    fn dimensions() {
        for n in 0..=7usize {
            let fact: usize = (1..=n).product();
            assert_eq!(AlgebraId::nil(n).dim(), fact);
        }
        assert_eq!(AlgebraId::nil_wreath(2, 3).dim(), 2 * 9);
        let t = AlgebraId::tensor(&[&AlgebraId::nil(3), &AlgebraId::nil(2)]);
        assert_eq!(t.dim(), 12);
        assert_eq!(AlgebraId::trivial().dim(), 1);
    }

    #[test]
    fn multiply_examples() {
        let a2 = AlgebraId::nil(2);
        let y1 = AlgebraElement::y(&a2, &s(2, 1));
        assert!(y1.multiply(&y1).unwrap().is_zero());

        let a3 = AlgebraId::nil(3);
        let y1 = AlgebraElement::y(&a3, &s(3, 1));
        let y2 = AlgebraElement::y(&a3, &s(3, 2));
        let prod = y1.multiply(&y2).unwrap();
        let expect = AlgebraElement::y(&a3, &Permutation::from_word(vec![2, 3, 1]));
        assert_eq!(prod, expect);

        let w0 = AlgebraElement::y(&a3, &Permutation::longest_element(3));
        assert!(w0.multiply(&y2).unwrap().is_zero());
    }

    #[test]
    fn multiply_matches_letterwise_oracle() {
        // oracle: multiply Y_u by the letters of a reduced word of v one
        // at a time, tracking only single-step length increases
        let a4 = AlgebraId::nil(4);
        let perms = Permutation::all(4);
        for u in &perms {
            for v in &perms {
                let mut cur = Some(u.clone());
                for i in v.reduced_word() {
                    cur = cur.and_then(|w| {
                        let si = s(4, i);
                        let ws = w.compose(&si);
                        if ws.length() == w.length() + 1 {
                            Some(ws)
                        } else {
                            None
                        }
                    });
                }
                let expect = match cur {
                    Some(w) => AlgebraElement::y(&a4, &w),
                    None => AlgebraElement::zero(&a4),
                };
                let got = AlgebraElement::y(&a4, u)
                    .multiply(&AlgebraElement::y(&a4, v))
                    .unwrap();
                assert_eq!(got, expect, "u={u:?} v={v:?}");
            }
        }
    }

    #[test]
    fn multiply_associative_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let a = AlgebraId::nil(4);
        for _ in 0..30 {
            let mut elems = Vec::new();
            for _ in 0..3 {
                let mut e = AlgebraElement::zero(&a);
                for _ in 0..4 {
                    let idx = rng.gen_range(0..a.dim());
                    let c = q_int(rng.gen_range(-3..=3));
                    e = e.add(&AlgebraElement::basis(&a, idx).scale(&c));
                }
                elems.push(e);
            }
            let ab_c = elems[0]
                .multiply(&elems[1])
                .unwrap()
                .multiply(&elems[2])
                .unwrap();
            let a_bc = elems[0]
                .multiply(&elems[1].multiply(&elems[2]).unwrap())
                .unwrap();
            assert_eq!(ab_c, a_bc);
        }
    }

    #[test]
    fn trace_examples() {
        let a3 = AlgebraId::nil(3);
        let w0 = AlgebraElement::y(&a3, &Permutation::longest_element(3));
        assert_eq!(w0.trace().unwrap(), q_int(1));
        let a2 = AlgebraId::nil(2);
        assert_eq!(AlgebraElement::unit(&a2).trace().unwrap(), q_int(0));
        let a1 = AlgebraId::nil(1);
        assert_eq!(AlgebraElement::unit(&a1).trace().unwrap(), q_int(1));
    }

    #[test]
    fn psi_examples() {
        let a3 = AlgebraId::nil(3);
        let y1 = AlgebraElement::y(&a3, &s(3, 1));
        let y2 = AlgebraElement::y(&a3, &s(3, 2));
        assert_eq!(y1.psi().unwrap(), y2);
        let a2 = AlgebraId::nil(2);
        let y = AlgebraElement::y(&a2, &s(2, 1));
        assert_eq!(y.psi().unwrap(), y);
        // multiplicativity: psi(Y_1 Y_2) = Y_2 Y_1
        let prod = y1.multiply(&y2).unwrap();
        let expect = y2.multiply(&y1).unwrap();
        assert_eq!(prod.psi().unwrap(), expect);
    }

    #[test]
    fn psi_u_properties() {
        for n in 1..=5usize {
            let a = AlgebraId::nil(n);
            for i in 0..a.dim() {
                let e = AlgebraElement::basis(&a, i);
                assert_eq!(e.psi().unwrap().psi().unwrap(), e);
                assert_eq!(e.antiinvolution_u().unwrap().antiinvolution_u().unwrap(), e);
                assert_eq!(
                    e.psi().unwrap().antiinvolution_u().unwrap(),
                    e.antiinvolution_u().unwrap().psi().unwrap()
                );
            }
        }
    }

    #[test]
    fn u_reverses_products() {
        let a3 = AlgebraId::nil(3);
        let y1 = AlgebraElement::y(&a3, &s(3, 1));
        let y2 = AlgebraElement::y(&a3, &s(3, 2));
        assert_eq!(y1.antiinvolution_u().unwrap(), y1);
        let lhs = y1.multiply(&y2).unwrap().antiinvolution_u().unwrap();
        let rhs = y2.multiply(&y1).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn nakayama_quasi_symmetry() {
        for n in 1..=4usize {
            let a = AlgebraId::nil(n);
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let x = AlgebraElement::basis(&a, i);
                    let y = AlgebraElement::basis(&a, j);
                    let lhs = x.multiply(&y).unwrap().trace().unwrap();
                    let rhs = y.psi().unwrap().multiply(&x).unwrap().trace().unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn gram_matrices() {
        assert_eq!(gram_matrix(1), crate::linalg::RatMatrix::identity(1));
        let g2 = gram_matrix(2);
        assert_eq!(g2, crate::linalg::RatMatrix::from_int_rows(&[&[0, 1], &[1, 0]]));
        for n in 1..=5usize {
            let g = gram_matrix(n);
            assert_eq!(g.rank(), AlgebraId::nil(n).dim(), "n = {n}");
        }
    }

    #[test]
    fn poincare_polynomials() {
        assert_eq!(AlgebraId::nil(1).poincare_polynomial(), PolyQ::one());
        assert_eq!(AlgebraId::nil(2).poincare_polynomial(), PolyQ::q_integer(2));
        assert_eq!(
            AlgebraId::nil(3).poincare_polynomial(),
            PolyQ::q_factorial(3)
        );
    }

    #[test]
    fn degree_additive_when_nonzero() {
        let a = AlgebraId::nil(4);
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                if let Some(k) = a.mul_basis(i, j) {
                    assert_eq!(
                        a.basis_degree(k),
                        a.basis_degree(i) + a.basis_degree(j)
                    );
                }
            }
        }
    }

    #[test]
    fn basis_words_evaluate_back() {
        for id in [
            AlgebraId::nil(4),
            AlgebraId::nil_wreath(2, 3),
            AlgebraId::tensor(&[&AlgebraId::nil(2), &AlgebraId::nil_wreath(2, 2)]),
        ] {
            for i in 0..id.dim() {
                let mut acc = AlgebraElement::unit(&id);
                for g in id.basis_word(i) {
                    acc = acc.multiply(&AlgebraElement::generator(&id, g)).unwrap();
                }
                assert_eq!(acc, AlgebraElement::basis(&id, i), "index {i}");
            }
        }
    }

    #[test]
    fn wreath_commutation_rule() {
        // Y_{s_1} (z⊗1) = (1⊗z) Y_{s_1} in A_2(2)
        let a = AlgebraId::nil_wreath(2, 2);
        let y = |g: GenKind| {
            let idx = a.gens().iter().position(|h| h.kind == g).unwrap();
            AlgebraElement::generator(&a, idx)
        };
        let lhs = y(GenKind::Y(1)).multiply(&y(GenKind::Z(1))).unwrap();
        let rhs = y(GenKind::Z(2)).multiply(&y(GenKind::Y(1))).unwrap();
        assert_eq!(lhs, rhs);
        // z^2 = 0 at k = 2
        assert!(y(GenKind::Z(1)).multiply(&y(GenKind::Z(1))).unwrap().is_zero());
    }

    #[test]
    fn algebra_maps_respect_relations() {
        let maps = vec![
            AlgebraMap::inclusion_next(&AlgebraId::nil(3)),
            AlgebraMap::gamma(&[2, 2]),
            AlgebraMap::truncation(3),
            AlgebraMap::psi(4),
        ];
        for m in maps {
            for (lhs, rhs) in m.source.relations() {
                let eval = |word: &[usize]| {
                    let mut acc = AlgebraElement::unit(&m.target);
                    for &g in word {
                        acc = acc.multiply(&m.images[g]).unwrap();
                    }
                    acc
                };
                let l = eval(&lhs);
                let r = rhs
                    .as_ref()
                    .map(|w| eval(w))
                    .unwrap_or_else(|| AlgebraElement::zero(&m.target));
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn divided_difference_examples() {
        let c = MVPoly::constant(2, q_int(5));
        assert!(divided_difference_apply(1, &c).is_zero());

        let x2 = MVPoly::var(2, 2);
        assert_eq!(
            divided_difference_apply(1, &x2),
            MVPoly::constant(2, q_int(1))
        );

        // Y_1 x_1^2 = (x_1^2 - x_2^2)/(x_2 - x_1) = -(x_1 + x_2)
        let x1 = MVPoly::var(2, 1);
        let f = x1.mul(&x1);
        let expect = x1.add(&x2).scale(&q_int(-1));
        assert_eq!(divided_difference_apply(1, &f), expect);
    }

    #[test]
    fn reduced_word_independence() {
        // evaluating Y_w through any reduced word gives the same basis
        // element: check all words obtained by braid/commutation shuffles
        // indirectly by evaluating products of generators along each
        // reduced expression found by brute force, n = 4
        let a = AlgebraId::nil(4);
        let perms = Permutation::all(4);
        for w in &perms {
            let words = all_reduced_words(w);
            assert!(!words.is_empty());
            for word in words {
                let mut acc = AlgebraElement::unit(&a);
                for i in word {
                    acc = acc
                        .multiply(&AlgebraElement::y(&a, &s(4, i)))
                        .unwrap();
                }
                assert_eq!(acc, AlgebraElement::y(&a, w));
            }
        }
    }

    fn all_reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
        if w.is_identity() {
            return vec![vec![]];
        }
        let n = w.n();
        let mut out = Vec::new();
        for i in 1..n {
            let si = s(n, i);
            let shorter = w.compose(&si);
            if shorter.length() + 1 == w.length() {
                for mut word in all_reduced_words(&shorter) {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        out
    }
}
