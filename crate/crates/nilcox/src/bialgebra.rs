//! The multiplication and comultiplication functors between blocks,
//! realized as bimodules: the Mackey-style double-coset decomposition,
//! the Leibniz rule, associativity and the pentagon coherence,
//! quasi-(co)commutativity, unit/counit, the adjunction between the two
//! functors, and the class-level comultiplication.
//!
//! ```
//! use nilcox::bialgebra::{mackey_check, pentagon_check};
//!
//! // restriction of an induced bimodule decomposes by double cosets
//! assert!(mackey_check(1, 1, 1, 1).pass);
//! // the associators satisfy the pentagon identity on the nose
//! assert!(pentagon_check(1, 1, 1, 1).pass);
//! ```

use crate::algebra::{AlgebraElement, AlgebraId, AlgebraMap};
use crate::bimodule::{
    hom_space, is_isomorphic, is_isomorphic_with, tensor_over, Bimodule, BimoduleMap, IsoMode,
    IsoOutcome, SVec, TensorProduct,
};
use crate::decat::{class_of, class_of_tensor, delta_class, weyl_apply, PolyClass, WeylElement};
use crate::functor::{apply_functor, probe_modules, Functor};
use crate::linalg::RatMatrix;
use num::Zero;
use crate::perm::{double_cosets, w_of_r};
use crate::report::{map_json, CheckData};

fn fact(k: usize) -> usize {
    (1..=k).product::<usize>().max(1)
}

/// A_{n+m} as an (A_{n+m}, A_n⊗A_m)-bimodule through the block
/// concatenation map; tensoring with it is the multiplication functor.
pub fn m_bimodule(n: usize, m: usize) -> Bimodule {
    Bimodule::regular(&AlgebraId::nil(n + m)).restrict_right(&AlgebraMap::gamma(&[n, m]))
}

/// A_n as an (A_k⊗A_l, A_n)-bimodule, k+l = n; tensoring with it is the
/// comultiplication component. In graded mode the degree is shifted up
/// by n−k.
pub fn delta_block(n: usize, k: usize, l: usize, graded: bool) -> Bimodule {
    assert_eq!(k + l, n, "comultiplication components must split the block");
    let b = Bimodule::regular(&AlgebraId::nil(n)).restrict_left(&AlgebraMap::gamma(&[k, l]));
    if graded {
        b.shifted((n - k) as i64)
    } else {
        b
    }
}

/// The bifunctor on modules: J(N1, N2) = induction of the outer tensor
/// along the block concatenation.
pub fn j_apply(n1: &Bimodule, n2: &Bimodule) -> Bimodule {
    let n = n1.left.single_nil().expect("first factor over one block");
    let m = n2.left.single_nil().expect("second factor over one block");
    tensor_over(&m_bimodule(n, m), &n1.outer_tensor(n2)).bim
}

/// Apply the (k,l) comultiplication component to a module over A_{k+l}.
pub fn delta_apply(k: usize, l: usize, p: &Bimodule, graded: bool) -> Bimodule {
    let n = p.left.single_nil().expect("module over one block");
    tensor_over(&delta_block(n, k, l, graded), p).bim
}

/// The double-coset summand B_r: restrict A_n⊗A_m to the four-block
/// subalgebra A_r⊗A_{n−r}⊗A_{k−r}⊗A_{l+r−n}, then induce to A_k⊗A_l.
/// Returned with its tensor data so pure tensors can be evaluated.
pub fn mackey_summand(n: usize, m: usize, k: usize, l: usize, r: usize) -> TensorProduct {
    assert_eq!(n + m, k + l);
    let (a, b, c, d) = (r, n - r, k - r, l + r - n);
    let mid_parts: Vec<AlgebraId> = [a, b, c, d].iter().map(|&p| AlgebraId::nil(p)).collect();
    let mid = AlgebraId::tensor(&mid_parts.iter().collect::<Vec<_>>());
    let left_alg = AlgebraId::tensor(&[&AlgebraId::nil(k), &AlgebraId::nil(l)]);
    let right_alg = AlgebraId::tensor(&[&AlgebraId::nil(n), &AlgebraId::nil(m)]);
    // mid ↪ A_k⊗A_l: interleave (a,b,c,d) → (a,c | b,d) then concatenate
    let reorder = AlgebraMap::factor_reorder(&mid, &[0, 2, 1, 3]);
    let emb_left = AlgebraMap::tensor(
        &AlgebraMap::gamma(&[a, c]),
        &AlgebraMap::gamma(&[b, d]),
    )
    .compose(&reorder);
    // mid ↪ A_n⊗A_m: concatenate pairwise in place
    let emb_right = AlgebraMap::tensor(&AlgebraMap::gamma(&[a, b]), &AlgebraMap::gamma(&[c, d]));
    let left = Bimodule::regular(&left_alg).restrict_right(&emb_left);
    let right = Bimodule::regular(&right_alg).restrict_left(&emb_right);
    tensor_over(&left, &right)
}

/// The consistency decomposition ⊕_r B_r ≅ A_{n+m} as bimodules over
/// (A_k⊗A_l, A_n⊗A_m), certified by the explicit assignment sending the
/// generator of B_r to Y_{w(r)}.
pub fn mackey_check(n: usize, m: usize, k: usize, l: usize) -> CheckData {
    if n + m != k + l {
        return CheckData::fail(format!("conservation violated: {n}+{m} ≠ {k}+{l}"));
    }
    let total = n + m;
    let target = Bimodule::regular(&AlgebraId::nil(total))
        .restrict_left(&AlgebraMap::gamma(&[k, l]))
        .restrict_right(&AlgebraMap::gamma(&[n, m]));
    let cosets = match double_cosets(k, l, n, m) {
        Ok(c) => c,
        Err(e) => return CheckData::fail(e),
    };
    let r_lo = n.saturating_sub(l);
    let r_hi = n.min(k);
    let r_values: Vec<usize> = (r_lo..=r_hi).collect();
    let mut data = CheckData::pass();
    // coset count against brute force and the closed formula
    if r_values.len() != cosets.reps.len() {
        return CheckData::fail(format!(
            "admissible r count {} ≠ brute-force double-coset count {}",
            r_values.len(),
            cosets.reps.len()
        ));
    }
    let closed = n.min(m).min(k).min(l) + 1;
    if r_values.len() != closed {
        return CheckData::fail(format!(
            "coset count {} ≠ closed formula min+1 = {closed}",
            r_values.len()
        ));
    }
    data = data.line(format!(
        "({n},{m},{k},{l}): {} double cosets, matching brute force and min(n,m,k,l)+1",
        r_values.len()
    ));
    // the block-shift permutations are exactly the minimal coset reps
    let mut ws: Vec<_> = r_values
        .iter()
        .map(|&r| w_of_r(n, m, k, l, r).unwrap())
        .collect();
    ws.sort_by_key(|w| (w.length(), w.word().to_vec()));
    if ws != cosets.reps {
        return CheckData::fail("block-shift permutations differ from minimal coset reps");
    }
    // assemble the certified isomorphism
    let gamma_left = AlgebraMap::gamma(&[k, l]);
    let gamma_right = AlgebraMap::gamma(&[n, m]);
    let mut summands: Vec<Bimodule> = Vec::new();
    let mut cols: Vec<SVec> = Vec::new();
    let mut dim_sum = 0usize;
    for &r in &r_values {
        let w = w_of_r(n, m, k, l, r).unwrap();
        let y_w = AlgebraElement::y(&AlgebraId::nil(total), &w);
        let t = mackey_summand(n, m, k, l, r);
        let (a, b2, c, d) = (r, n - r, k - r, l + r - n);
        let expect = fact(k) * fact(l) * fact(n) * fact(m)
            / (fact(a) * fact(b2) * fact(c) * fact(d));
        if t.dim() != expect {
            return CheckData::fail(format!(
                "dim B_{r} = {} ≠ predicted {expect}",
                t.dim()
            ));
        }
        dim_sum += t.dim();
        data = data.dim(format!("B_{r}"), t.dim());
        for &(i, j) in &t.basis_pure_reps() {
            // e_i ⊗ e_j ↦ γ(e_i) · Y_w · γ(e_j)
            let lhs = gamma_left.apply_basis(i);
            let rhs = gamma_right.apply_basis(j);
            let img = lhs.multiply(&y_w).unwrap().multiply(&rhs).unwrap();
            cols.push(img.coeffs.clone());
        }
        summands.push(t.bim.shifted(w.length() as i64));
    }
    if dim_sum != fact(total) {
        return CheckData::fail(format!("Σ dim B_r = {dim_sum} ≠ {}!", total));
    }
    let source = Bimodule::direct_sum(&summands.iter().collect::<Vec<_>>());
    let mut matrix = RatMatrix::zero(target.dim(), source.dim());
    for (cidx, col) in cols.iter().enumerate() {
        for (&ridx, v) in col {
            matrix.set(ridx, cidx, v.clone());
        }
    }
    let map = BimoduleMap { matrix, shift: 0 };
    if let Err(e) = map.verify_iso(&source, &target) {
        return CheckData::fail(format!("generator assignment rejected: {e}"));
    }
    data.line(format!(
        "⊕_r B_r ≅ A_{total} certified, Σ dims = {dim_sum} = {total}!"
    ))
    .dim("total", fact(total))
    .with_certificate(map_json(&map))
}

/// All quadruples with n+m = k+l up to the given total.
pub fn mackey_sweep(total_max: usize) -> CheckData {
    let mut data = CheckData::pass();
    for total in 0..=total_max {
        for n in 0..=total {
            let m = total - n;
            for k in 0..=total {
                let l = total - k;
                let one = mackey_check(n, m, k, l);
                if !one.pass {
                    return one;
                }
            }
        }
        data = data.line(format!("all quadruples with n+m = k+l = {total} certified"));
    }
    data
}

/// The Leibniz rule on probe pairs: restricting an induced product
/// splits as the sum of restricting either factor; class level,
/// ∂(ab) = (∂a)b + a(∂b).
pub fn leibniz_check(n: usize, m: usize, seed: u64) -> CheckData {
    if n + m == 0 {
        return CheckData::fail("need n+m ≥ 1");
    }
    let mut data = CheckData::pass();
    for (name1, p1) in probe_modules(n, seed) {
        for (name2, p2) in probe_modules(m, seed) {
            let j = j_apply(&p1, &p2);
            let lhs = apply_functor(Functor::FD, &j);
            let mut parts: Vec<Bimodule> = Vec::new();
            if m >= 1 {
                parts.push(j_apply(&p1, &apply_functor(Functor::FD, &p2)));
            }
            if n >= 1 {
                parts.push(j_apply(&apply_functor(Functor::FD, &p1), &p2));
            }
            let rhs = Bimodule::direct_sum(&parts.iter().collect::<Vec<_>>());
            match is_isomorphic_with(&lhs, &rhs, seed, IsoMode::Ungraded) {
                IsoOutcome::Yes(_) => {
                    data = data.line(format!(
                        "({name1}, {name2}): dims {} = {}",
                        lhs.dim(),
                        rhs.dim()
                    ));
                }
                IsoOutcome::No(w) => {
                    return CheckData::fail(format!("({name1}, {name2}): {w}"))
                }
            }
            // class level
            let c1 = class_of(&p1, false).unwrap();
            let c2 = class_of(&p2, false).unwrap();
            let prod = PolyClass::monomial(
                false,
                (n + m) as u32,
                c1.coeff(n as u32).mul(&c2.coeff(m as u32)),
            );
            let d = WeylElement::d(false);
            let mut class_rhs = PolyClass::zero(false);
            if n >= 1 {
                class_rhs = class_rhs.add(&PolyClass::monomial(
                    false,
                    (n + m - 1) as u32,
                    weyl_apply(&d, &c1).coeff((n - 1) as u32).mul(&c2.coeff(m as u32)),
                ));
            }
            if m >= 1 {
                class_rhs = class_rhs.add(&PolyClass::monomial(
                    false,
                    (n + m - 1) as u32,
                    c1.coeff(n as u32).mul(&weyl_apply(&d, &c2).coeff((m - 1) as u32)),
                ));
            }
            if weyl_apply(&d, &prod) != class_rhs {
                return CheckData::fail(format!("class Leibniz fails on ({name1}, {name2})"));
            }
        }
    }
    data.line("∂(ab) = (∂a)b + a(∂b) on all probe classes".to_string())
}

/// A bracketing of blocks, for the associativity and pentagon checks.
#[derive(Clone, Debug)]
pub enum Tree {
    Leaf(usize),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaves(&self) -> Vec<usize> {
        match self {
            Tree::Leaf(n) => vec![*n],
            Tree::Node(l, r) => {
                let mut v = l.leaves();
                v.extend(r.leaves());
                v
            }
        }
    }

    pub fn total(&self) -> usize {
        self.leaves().iter().sum()
    }
}

/// A bracketed iterated product: its bimodule over
/// (A_total, A_{leaf 1}⊗…⊗A_{leaf r}), the canonical multiply-out map
/// to the flat bimodule, and (for non-leaves) the outermost tensor data.
pub struct BuiltTree {
    pub bim: Bimodule,
    /// columns: tree basis; rows: flat basis (A_total)
    pub can: RatMatrix,
    pub tensor: Option<TensorProduct>,
}

/// Build a bracketing bottom-up, carrying the canonical flattening.
pub fn build_tree(tree: &Tree) -> BuiltTree {
    match tree {
        Tree::Leaf(n) => {
            let bim = Bimodule::regular(&AlgebraId::nil(*n));
            let can = RatMatrix::identity(bim.dim());
            BuiltTree {
                bim,
                can,
                tensor: None,
            }
        }
        Tree::Node(lt, rt) => {
            let bl = build_tree(lt);
            let br = build_tree(rt);
            let (tl, tr) = (lt.total(), rt.total());
            let total_id = AlgebraId::nil(tl + tr);
            let outer = bl.bim.outer_tensor(&br.bim);
            let t = tensor_over(&m_bimodule(tl, tr), &outer);
            let gamma = AlgebraMap::gamma(&[tl, tr]);
            let pair_alg = gamma.source.clone();
            let mut can = RatMatrix::zero(total_id.dim(), t.dim());
            for (cidx, &(i, j)) in t.basis_pure_reps().iter().enumerate() {
                let (p, q) = (j / br.bim.dim(), j % br.bim.dim());
                // flatten the two halves, pair them, concatenate, multiply
                let mut pair = AlgebraElement::zero(&pair_alg);
                for (x, vx) in bl.can.column(p).iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    for (y, vy) in br.can.column(q).iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        let idx = pair_alg.join_index(&[x, y]);
                        pair = pair.add(&AlgebraElement::basis(&pair_alg, idx).scale(&(vx * vy)));
                    }
                }
                let img = AlgebraElement::basis(&total_id, i)
                    .multiply(&gamma.apply(&pair))
                    .unwrap();
                for (&ridx, v) in &img.coeffs {
                    can.set(ridx, cidx, v.clone());
                }
            }
            BuiltTree {
                bim: t.bim.clone(),
                can,
                tensor: Some(t),
            }
        }
    }
}

fn flat_bimodule(leaves: &[usize]) -> Bimodule {
    let total: usize = leaves.iter().sum();
    Bimodule::regular(&AlgebraId::nil(total)).restrict_right(&AlgebraMap::gamma(leaves))
}

/// Both three-fold composites are canonically the flat block bimodule;
/// the comparison of the two canonical certificates is itself a
/// certified isomorphism. The mirrored statement for the
/// comultiplication composites is checked alongside.
pub fn coassoc_and_assoc_check(a: usize, b: usize, c: usize) -> CheckData {
    let t1 = Tree::Node(
        Box::new(Tree::Node(Box::new(Tree::Leaf(a)), Box::new(Tree::Leaf(b)))),
        Box::new(Tree::Leaf(c)),
    );
    let t2 = Tree::Node(
        Box::new(Tree::Leaf(a)),
        Box::new(Tree::Node(Box::new(Tree::Leaf(b)), Box::new(Tree::Leaf(c)))),
    );
    let b1 = build_tree(&t1);
    let b2 = build_tree(&t2);
    let flat = flat_bimodule(&[a, b, c]);
    let mut data = CheckData::pass();
    for (label, bt) in [("(ab)c", &b1), ("a(bc)", &b2)] {
        let map = BimoduleMap {
            matrix: bt.can.clone(),
            shift: 0,
        };
        if let Err(e) = map.verify_iso(&bt.bim, &flat) {
            return CheckData::fail(format!("flattening of {label} rejected: {e}"));
        }
        data = data.line(format!("{label} ≅ flat block, dim {}", bt.bim.dim()));
    }
    let alpha = BimoduleMap {
        matrix: b2.can.inverse().unwrap().mul(&b1.can),
        shift: 0,
    };
    if let Err(e) = alpha.verify_iso(&b1.bim, &b2.bim) {
        return CheckData::fail(format!("associator rejected: {e}"));
    }
    data = data
        .line("associator (ab)c → a(bc) certified".to_string())
        .dim("block", flat.dim())
        .with_certificate(map_json(&alpha));

    // mirrored: both comultiplication composites flatten to the left-
    // restricted regular bimodule
    let d1 = delta_composite(&t1);
    let d2 = delta_composite(&t2);
    let dflat = Bimodule::regular(&AlgebraId::nil(a + b + c))
        .restrict_left(&AlgebraMap::gamma(&[a, b, c]));
    for (label, (bim, can)) in [("(ΔΔ) left-first", &d1), ("(ΔΔ) right-first", &d2)] {
        let map = BimoduleMap {
            matrix: can.clone(),
            shift: 0,
        };
        if let Err(e) = map.verify_iso(bim, &dflat) {
            return CheckData::fail(format!("comultiplication flattening {label} rejected: {e}"));
        }
    }
    let coalpha = BimoduleMap {
        matrix: d2.1.inverse().unwrap().mul(&d1.1),
        shift: 0,
    };
    if let Err(e) = coalpha.verify_iso(&d1.0, &d2.0) {
        return CheckData::fail(format!("coassociator rejected: {e}"));
    }
    data.line("coassociator certified on the mirrored composites".to_string())
}

/// An iterated comultiplication composite following a bracketing, with
/// its canonical flattening to the left-restricted regular bimodule.
fn delta_composite(tree: &Tree) -> (Bimodule, RatMatrix) {
    match tree {
        Tree::Leaf(n) => {
            let bim = Bimodule::regular(&AlgebraId::nil(*n));
            let can = RatMatrix::identity(bim.dim());
            (bim, can)
        }
        Tree::Node(lt, rt) => {
            let (bl, canl) = delta_composite(lt);
            let (br, canr) = delta_composite(rt);
            let (tl, tr) = (lt.total(), rt.total());
            let total_id = AlgebraId::nil(tl + tr);
            let outer = bl.outer_tensor(&br);
            let t = tensor_over(&outer, &delta_block(tl + tr, tl, tr, false));
            let gamma = AlgebraMap::gamma(&[tl, tr]);
            let pair_alg = gamma.source.clone();
            let mut can = RatMatrix::zero(total_id.dim(), t.dim());
            for (cidx, &(i, j)) in t.basis_pure_reps().iter().enumerate() {
                let (p, q) = (i / br.dim(), i % br.dim());
                let mut pair = AlgebraElement::zero(&pair_alg);
                for (x, vx) in canl.column(p).iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    for (y, vy) in canr.column(q).iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        let idx = pair_alg.join_index(&[x, y]);
                        pair = pair.add(&AlgebraElement::basis(&pair_alg, idx).scale(&(vx * vy)));
                    }
                }
                let img = gamma
                    .apply(&pair)
                    .multiply(&AlgebraElement::basis(&total_id, j))
                    .unwrap();
                for (&ridx, v) in &img.coeffs {
                    can.set(ridx, cidx, v.clone());
                }
            }
            (t.bim.clone(), can)
        }
    }
}

/// The pentagon: the two edge paths between ((ab)c)d and a(b(cd)),
/// with the two inner-rotation edges built functorially (the three-fold
/// associator induced through the outer tensor product) and the three
/// root rotations built from the canonical flattenings. The loop
/// composite must be the exact identity.
pub fn pentagon_check(a: usize, b: usize, c: usize, d: usize) -> CheckData {
    let leaf = |n: usize| Box::new(Tree::Leaf(n));
    let node = |l: Box<Tree>, r: Box<Tree>| Box::new(Tree::Node(l, r));
    let v1 = node(node(node(leaf(a), leaf(b)), leaf(c)), leaf(d));
    let v2 = node(node(leaf(a), node(leaf(b), leaf(c))), leaf(d));
    let v3 = node(leaf(a), node(node(leaf(b), leaf(c)), leaf(d)));
    let v4 = node(leaf(a), node(leaf(b), node(leaf(c), leaf(d))));
    let v5 = node(node(leaf(a), leaf(b)), node(leaf(c), leaf(d)));
    let bt: Vec<BuiltTree> = [&v1, &v2, &v3, &v4, &v5]
        .iter()
        .map(|t| build_tree(t))
        .collect();

    // inner rotation on the left child of v1 → v2
    let inner_abc_1 = build_tree(&Tree::Node(
        Box::new(Tree::Node(Box::new(Tree::Leaf(a)), Box::new(Tree::Leaf(b)))),
        Box::new(Tree::Leaf(c)),
    ));
    let inner_abc_2 = build_tree(&Tree::Node(
        Box::new(Tree::Leaf(a)),
        Box::new(Tree::Node(Box::new(Tree::Leaf(b)), Box::new(Tree::Leaf(c)))),
    ));
    let alpha_abc = inner_abc_2.can.inverse().unwrap().mul(&inner_abc_1.can);
    let e12 = crate::bimodule::induced_map_right(
        bt[0].tensor.as_ref().unwrap(),
        bt[1].tensor.as_ref().unwrap(),
        &alpha_abc.kronecker(&RatMatrix::identity(fact(d))),
    );

    // inner rotation on the right child of v3 → v4
    let inner_bcd_1 = build_tree(&Tree::Node(
        Box::new(Tree::Node(Box::new(Tree::Leaf(b)), Box::new(Tree::Leaf(c)))),
        Box::new(Tree::Leaf(d)),
    ));
    let inner_bcd_2 = build_tree(&Tree::Node(
        Box::new(Tree::Leaf(b)),
        Box::new(Tree::Node(Box::new(Tree::Leaf(c)), Box::new(Tree::Leaf(d)))),
    ));
    let alpha_bcd = inner_bcd_2.can.inverse().unwrap().mul(&inner_bcd_1.can);
    let e34 = crate::bimodule::induced_map_right(
        bt[2].tensor.as_ref().unwrap(),
        bt[3].tensor.as_ref().unwrap(),
        &RatMatrix::identity(fact(a)).kronecker(&alpha_bcd),
    );

    // root rotations via the canonical flattenings
    let e23 = bt[2].can.inverse().unwrap().mul(&bt[1].can);
    let e15 = bt[4].can.inverse().unwrap().mul(&bt[0].can);
    let e54 = bt[3].can.inverse().unwrap().mul(&bt[4].can);

    // every edge is a genuine bimodule isomorphism
    for (label, e, s, t) in [
        ("((ab)c)d → (a(bc))d", &e12, 0usize, 1usize),
        ("(a(bc))d → a((bc)d)", &e23, 1, 2),
        ("a((bc)d) → a(b(cd))", &e34, 2, 3),
        ("((ab)c)d → (ab)(cd)", &e15, 0, 4),
        ("(ab)(cd) → a(b(cd))", &e54, 4, 3),
    ] {
        let map = BimoduleMap {
            matrix: e.clone(),
            shift: 0,
        };
        if let Err(err) = map.verify_iso(&bt[s].bim, &bt[t].bim) {
            return CheckData::fail(format!("edge {label} rejected: {err}"));
        }
    }

    let long = e34.mul(&e23).mul(&e12);
    let short = e54.mul(&e15);
    let composite = short.inverse().unwrap().mul(&long);
    if composite != RatMatrix::identity(bt[0].bim.dim()) {
        return CheckData::fail(format!(
            "pentagon loop on ({a},{b},{c},{d}) is not the identity"
        ));
    }
    CheckData::pass()
        .line(format!(
            "pentagon loop on ({a},{b},{c},{d}) composes to the exact identity, dim {}",
            bt[0].bim.dim()
        ))
        .dim("block", bt[0].bim.dim())
}

/// All pentagon instances with a+b+c+d up to the bound.
pub fn pentagon_sweep(total_max: usize) -> CheckData {
    let mut data = CheckData::pass();
    let mut count = 0usize;
    for a in 0..=total_max {
        for b in 0..=total_max - a {
            for c in 0..=total_max - a - b {
                for d in 0..=total_max - a - b - c {
                    let one = pentagon_check(a, b, c, d);
                    if !one.pass {
                        return one;
                    }
                    count += 1;
                }
            }
        }
    }
    data = data.line(format!(
        "{count} pentagon instances with a+b+c+d ≤ {total_max}: exact identity"
    ));
    data.dim("instances", count)
}

/// Quasi-commutativity: composing the multiplication with the factor
/// swap equals conjugating by the longest-word twist, and dually for
/// the comultiplication.
pub fn quasi_commutativity_check(n: usize, m: usize, seed: u64) -> CheckData {
    let nm = AlgebraId::tensor(&[&AlgebraId::nil(n), &AlgebraId::nil(m)]);
    let mn = AlgebraId::tensor(&[&AlgebraId::nil(m), &AlgebraId::nil(n)]);
    let swap_nm_to_mn = AlgebraMap::factor_reorder(&nm, &[1, 0]);
    let swap_mn_to_nm = AlgebraMap::factor_reorder(&mn, &[1, 0]);
    let psi_pair = AlgebraMap::tensor(&AlgebraMap::psi(n), &AlgebraMap::psi(m));

    // multiplication side: (A_{n+m}, A_n⊗A_m)-bimodules
    let lhs = m_bimodule(m, n).restrict_right(&swap_nm_to_mn);
    let rhs = m_bimodule(n, m)
        .restrict_left(&AlgebraMap::psi(n + m))
        .restrict_right(&psi_pair);
    let mut data = CheckData::pass();
    match is_isomorphic(&lhs, &rhs, seed) {
        IsoOutcome::Yes(map) => {
            data = data
                .line(format!(
                    "swap∘multiplication ≅ twisted multiplication on ({n},{m}), dim {}",
                    lhs.dim()
                ))
                .with_certificate(map_json(&map));
        }
        IsoOutcome::No(w) => return CheckData::fail(format!("multiplication side: {w}")),
    }

    // comultiplication side: (A_m⊗A_n, A_{n+m})-bimodules
    let lhs = delta_block(n + m, n, m, false).restrict_left(&swap_mn_to_nm);
    let rhs = delta_block(n + m, m, n, false)
        .restrict_left(&AlgebraMap::tensor(&AlgebraMap::psi(m), &AlgebraMap::psi(n)))
        .restrict_right(&AlgebraMap::psi(n + m));
    match is_isomorphic(&lhs, &rhs, seed) {
        IsoOutcome::Yes(_) => {
            data.line(format!(
                "swap∘comultiplication ≅ twisted comultiplication on ({n},{m})"
            ))
        }
        IsoOutcome::No(w) => CheckData::fail(format!("comultiplication side: {w}")),
    }
}

/// Unit and counit: adjoining the trivial block changes nothing, and
/// the counit kills every positive block.
pub fn unit_counit_check(m_max: usize, seed: u64) -> CheckData {
    let mut data = CheckData::pass();
    for m in 0..=m_max {
        // the block bimodules with a trivial factor are the regular one
        let reg = Bimodule::regular(&AlgebraId::nil(m));
        for (label, b) in [("left unit", m_bimodule(0, m)), ("right unit", m_bimodule(m, 0))] {
            if b.dim() != reg.dim() {
                return CheckData::fail(format!("{label} at block {m}: wrong dimension"));
            }
            for g in 0..b.right.num_gens() {
                if b.right_gen(g) != reg.right_gen(g) {
                    return CheckData::fail(format!("{label} at block {m}: action differs"));
                }
            }
        }
        // on modules
        let triv = Bimodule::free_module(&AlgebraId::nil(0));
        for (name, probe) in probe_modules(m, seed) {
            for (label, j) in [
                ("1·N", j_apply(&triv, &probe)),
                ("N·1", j_apply(&probe, &triv)),
            ] {
                match is_isomorphic(&j, &probe, seed) {
                    IsoOutcome::Yes(_) => {}
                    IsoOutcome::No(w) => {
                        return CheckData::fail(format!("{label} on {name}: {w}"))
                    }
                }
            }
        }
        data = data.line(format!("unit laws hold at block {m}"));
    }
    // counit: the block-0 component of a positive block is zero; on
    // classes, the counit takes the constant coefficient
    for n in 1..=m_max {
        let c = class_of(&Bimodule::free_module(&AlgebraId::nil(n)), false).unwrap();
        if !c.coeff(0).is_zero() {
            return CheckData::fail(format!("counit does not kill block {n}"));
        }
    }
    data.line("counit kills every positive block; counit∘unit is the identity".to_string())
}

/// The adjunction between multiplication and comultiplication, as
/// dimension equalities of hom spaces on probe pairs; `twisted` checks
/// the right adjunction through the factor swap.
pub fn m_delta_adjunction_check(total_max: usize, seed: u64, twisted: bool) -> CheckData {
    let mut data = CheckData::pass();
    for n in 0..=total_max {
        for m in 0..=total_max - n {
            if n + m == 0 {
                continue;
            }
            for (n1name, n1) in probe_modules(n, seed) {
                for (n2name, n2) in probe_modules(m, seed) {
                    let outer = n1.outer_tensor(&n2);
                    let j = j_apply(&n1, &n2);
                    for (pname, p) in probe_modules(n + m, seed) {
                        let (x, y) = if !twisted {
                            let dp = delta_apply(n, m, &p, false);
                            (hom_space(&j, &p).len(), hom_space(&outer, &dp).len())
                        } else {
                            let nm = AlgebraId::tensor(&[&AlgebraId::nil(n), &AlgebraId::nil(m)]);
                            let swap = AlgebraMap::factor_reorder(&nm, &[1, 0]);
                            let sdp = tensor_over(
                                &delta_block(n + m, m, n, false).restrict_left(&swap),
                                &p,
                            )
                            .bim;
                            (hom_space(&p, &j).len(), hom_space(&sdp, &outer).len())
                        };
                        if x != y {
                            return CheckData::fail(format!(
                                "({n},{m}) probes ({n1name},{n2name},{pname}): {x} ≠ {y}"
                            ));
                        }
                    }
                }
            }
            data = data.line(format!("hom dimensions agree on all probe triples at ({n},{m})"));
        }
    }
    data
}

/// Classes of the comultiplication components match the class-level
/// comultiplication, graded and ungraded, and classes are multiplicative
/// under the bifunctor.
pub fn delta_class_check(n_max: usize, seed: u64) -> CheckData {
    let mut data = CheckData::pass();
    for n in 0..=n_max {
        for (name, probe) in probe_modules(n, seed) {
            for graded in [false, true] {
                let expect = delta_class(&class_of(&probe, graded).unwrap());
                for k in 0..=n {
                    let l = n - k;
                    let m = delta_apply(k, l, &probe, graded);
                    let got = class_of_tensor(&m, graded).unwrap();
                    if got.component(k as u32, l as u32) != expect.component(k as u32, l as u32) {
                        return CheckData::fail(format!(
                            "Δ class mismatch on {name} at ({k},{l}), graded={graded}"
                        ));
                    }
                }
            }
        }
        data = data.line(format!("block {n}: Δ classes match x ↦ x⊗1 + q⊗x on all probes"));
    }
    // multiplicativity of classes under the bifunctor
    for n in 0..=n_max.min(2) {
        for m in 0..=n_max.min(2) - n.min(n_max.min(2)) {
            for (_, n1) in probe_modules(n, seed) {
                for (_, n2) in probe_modules(m, seed) {
                    let j = j_apply(&n1, &n2);
                    let cj = class_of(&j, false).unwrap();
                    let c1 = class_of(&n1, false).unwrap();
                    let c2 = class_of(&n2, false).unwrap();
                    let prod = PolyClass::monomial(
                        false,
                        (n + m) as u32,
                        c1.coeff(n as u32).mul(&c2.coeff(m as u32)),
                    );
                    if cj != prod {
                        return CheckData::fail(format!(
                            "[J(N1,N2)] ≠ [N1]·[N2] at blocks ({n},{m})"
                        ));
                    }
                }
            }
        }
    }
    data.line("[J(N1,N2)] = [N1]·[N2] on probe pairs".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_bimodule_examples() {
        // trivial factor: the regular bimodule
        let b = m_bimodule(0, 3);
        assert_eq!(b.dim(), 6);
        // (1,1): A_2 over (A_2, A_1⊗A_1), dim 2
        let b = m_bimodule(1, 1);
        assert_eq!(b.dim(), 2);
        assert!(b.validate().is_ok());
    }

    #[test]
    fn j_of_simples_is_free() {
        let l1 = Bimodule::simple_module(&AlgebraId::nil(1));
        let j = j_apply(&l1, &l1);
        assert_eq!(j.dim(), 2);
        match is_isomorphic(&j, &Bimodule::free_module(&AlgebraId::nil(2)), 0) {
            IsoOutcome::Yes(_) => {}
            IsoOutcome::No(w) => panic!("{w}"),
        }
    }

    #[test]
    fn delta_block_examples() {
        let b = delta_block(2, 2, 0, false);
        assert_eq!(b.dim(), 2);
        let b = delta_block(2, 1, 1, false);
        assert_eq!(b.dim(), 2);
        assert!(b.validate().is_ok());
        // graded shift convention: the (0,1) component of the block-1
        // free module sits in degree 1
        let p1 = Bimodule::free_module(&AlgebraId::nil(1));
        let m = delta_apply(0, 1, &p1, true);
        assert_eq!(m.degrees, vec![1]);
        let m = delta_apply(1, 0, &p1, true);
        assert_eq!(m.degrees, vec![0]);
    }

    #[test]
    fn mackey_small() {
        let d = mackey_check(1, 1, 1, 1);
        assert!(d.pass, "{:?}", d.witness);
        assert_eq!(d.dims.get("B_0"), Some(&1));
        assert_eq!(d.dims.get("B_1"), Some(&1));
        let d = mackey_check(2, 0, 1, 1);
        assert!(d.pass, "{:?}", d.witness);
        let d = mackey_check(2, 1, 2, 1);
        assert!(d.pass, "{:?}", d.witness);
        assert_eq!(d.dims.get("total"), Some(&6));
    }

    #[test]
    fn mackey_sweep_small() {
        let d = mackey_sweep(3);
        assert!(d.pass, "{:?}", d.witness);
    }

    #[test]
    fn leibniz_small() {
        for (n, m) in [(1, 0), (0, 1), (1, 1)] {
            let d = leibniz_check(n, m, 0);
            assert!(d.pass, "({n},{m}): {:?}", d.witness);
        }
    }

    #[test]
    fn assoc_small() {
        let d = coassoc_and_assoc_check(1, 1, 1);
        assert!(d.pass, "{:?}", d.witness);
        let d = coassoc_and_assoc_check(2, 0, 1);
        assert!(d.pass, "{:?}", d.witness);
    }

    #[test]
    fn pentagon_small() {
        let d = pentagon_check(1, 1, 1, 1);
        assert!(d.pass, "{:?}", d.witness);
        let d = pentagon_check(2, 1, 1, 0);
        assert!(d.pass, "{:?}", d.witness);
    }

    #[test]
    fn quasi_comm_small() {
        for (n, m) in [(1, 0), (1, 1), (2, 1)] {
            let d = quasi_commutativity_check(n, m, 0);
            assert!(d.pass, "({n},{m}): {:?}", d.witness);
        }
    }

    #[test]
    fn unit_counit_small() {
        let d = unit_counit_check(2, 0);
        assert!(d.pass, "{:?}", d.witness);
    }

    #[test]
    fn adjunction_small() {
        let d = m_delta_adjunction_check(2, 0, false);
        assert!(d.pass, "{:?}", d.witness);
        let d = m_delta_adjunction_check(2, 0, true);
        assert!(d.pass, "{:?}", d.witness);
    }

    #[test]
    fn delta_classes_small() {
        let d = delta_class_check(2, 0);
        assert!(d.pass, "{:?}", d.witness);
    }
}
