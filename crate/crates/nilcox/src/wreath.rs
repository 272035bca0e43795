//! Wreath-type extensions: the semidirect product of a nilCoxeter
//! algebra with a truncated polynomial algebra on each strand, its
//! Frobenius trace, and the k-fold Weyl relation for the corresponding
//! induction/restriction bimodules.
//!
//! ```
//! use nilcox::algebra::AlgebraId;
//! use nilcox::wreath::wreath_weyl_check;
//!
//! assert_eq!(AlgebraId::nil_wreath(2, 3).dim(), 18); // n!·k^n
//! // k identity summands instead of one
//! assert!(wreath_weyl_check(1, 2).pass);
//! ```

use crate::algebra::{AlgebraElement, AlgebraId, AlgebraMap, GenKind};
use crate::bimodule::{svec_unit, tensor_over, Bimodule, BimoduleMap, SVec};
use crate::linalg::{Q, RatMatrix};
use crate::perm::Permutation;
use crate::report::{map_json, CheckData};

fn fact(k: usize) -> usize {
    (1..=k).product::<usize>().max(1)
}

/// The standard inclusion A_n(k) ↪ A_{n+1}(k): strands 1..n and their
/// letters embed in place; the (n+1)-st strand is adjoined.
pub fn wreath_inclusion(n: usize, k: usize) -> AlgebraMap {
    let source = AlgebraId::nil_wreath(n, k);
    let target = AlgebraId::nil_wreath(n + 1, k);
    let images = source
        .gens()
        .iter()
        .map(|g| {
            let tg = target
                .gens()
                .iter()
                .position(|h| h.kind == g.kind)
                .expect("generator embeds in place");
            AlgebraElement::generator(&target, tg)
        })
        .collect();
    AlgebraMap::new(source, target, images)
}

/// Multiplication in A_n(k); delegates to the general basis product.
pub fn wreath_multiply(
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<AlgebraElement, String> {
    a.multiply(b)
}

/// The letter z on a given strand (1-based).
pub fn z_gen(id: &AlgebraId, strand: usize) -> AlgebraElement {
    let g = id
        .gens()
        .iter()
        .position(|h| h.kind == GenKind::Z(strand))
        .expect("strand letter exists");
    AlgebraElement::generator(id, g)
}

/// The basis index of the top element Y_{w_0}·(z^{k−1} on every strand).
fn top_index(id: &AlgebraId) -> usize {
    let (n, k) = id.single_wreath().expect("single wreath block");
    let mut top = AlgebraElement::y(id, &Permutation::longest_element(n));
    for strand in 1..=n {
        for _ in 0..k - 1 {
            top = top.multiply(&z_gen(id, strand)).unwrap();
        }
    }
    assert_eq!(top.coeffs.len(), 1);
    let (&idx, v) = top.coeffs.iter().next().unwrap();
    assert!(num::One::is_one(v));
    idx
}

/// The Frobenius trace: the coefficient of the top basis element.
pub fn wreath_trace(a: &AlgebraElement) -> Q {
    let idx = top_index(&a.algebra);
    a.coeffs.get(&idx).cloned().unwrap_or_else(num::Zero::zero)
}

/// Gram matrix of the trace form on A_n(k).
pub fn wreath_gram(n: usize, k: usize) -> RatMatrix {
    let id = AlgebraId::nil_wreath(n, k);
    let dim = id.dim();
    let top = top_index(&id);
    let mut g = RatMatrix::zero(dim, dim);
    for u in 0..dim {
        for v in 0..dim {
            if let Some(w) = id.mul_basis(u, v) {
                if w == top {
                    g.set(u, v, num::One::one());
                }
            }
        }
    }
    g
}

/// Dimension and Frobenius nondegeneracy for every (n,k) within the
/// dimension bound.
pub fn wreath_frobenius_check(max_dim: usize) -> CheckData {
    let mut data = CheckData::pass();
    for n in 0..=4usize {
        for k in 1..=4usize {
            let dim = fact(n) * k.pow(n as u32);
            if dim > max_dim {
                continue;
            }
            let id = AlgebraId::nil_wreath(n, k);
            if id.dim() != dim {
                return CheckData::fail(format!("dim A_{n}({k}) = {} ≠ n!k^n = {dim}", id.dim()));
            }
            let rank = wreath_gram(n, k).rank();
            if rank != dim {
                return CheckData::fail(format!(
                    "trace form on A_{n}({k}) has rank {rank} < dim {dim}"
                ));
            }
            data = data
                .line(format!("A_{n}({k}): dim {dim} = n!k^n, trace form nondegenerate"))
                .dim(format!("A_{n}({k})"), dim);
        }
    }
    data
}

fn svec_of(e: &AlgebraElement) -> SVec {
    e.coeffs.clone()
}

/// The k-fold Weyl relation for the wreath extension:
/// D_{n+1}(k) ⊗ X_n(k) ≅ X_{n−1}(k) ⊗ D_n(k){1} ⊕ ⊕_{j<k} A_n(k){j},
/// certified by a ↦ a·z_{n+1}^j ⊗ 1 on the identity summands and
/// a ⊗ b ↦ a·Y_n·b on the remaining one. At k = 1 this reproduces the
/// plain relation column for column.
pub fn wreath_weyl_check(n: usize, k: usize) -> CheckData {
    assert!(k >= 1);
    let a_n = AlgebraId::nil_wreath(n, k);
    let a_n1 = AlgebraId::nil_wreath(n + 1, k);
    let chi = wreath_inclusion(n, k);
    let d = Bimodule::regular(&a_n1).restrict_left(&chi);
    let x = Bimodule::regular(&a_n1).restrict_right(&chi);
    let lhs_t = tensor_over(&d, &x);
    let lhs = &lhs_t.bim;
    if let Err(e) = lhs.validate() {
        return CheckData::fail(format!("left side failed validation: {e}"));
    }
    let reg = Bimodule::regular(&a_n);
    let z_top = (k >= 2).then(|| z_gen(&a_n1, n + 1));
    let mut summands: Vec<Bimodule> = Vec::new();
    let mut cols: Vec<SVec> = Vec::new();
    for j in 0..k as i64 {
        summands.push(reg.shifted(j));
        // z_{n+1}^j, as an element of the larger algebra
        let mut zj = AlgebraElement::unit(&a_n1);
        for _ in 0..j {
            zj = zj.multiply(z_top.as_ref().unwrap()).unwrap();
        }
        for b in 0..reg.dim() {
            let img = chi.apply_basis(b).multiply(&zj).unwrap();
            cols.push(lhs_t.pure_tensor(&svec_of(&img), &svec_unit(0)));
        }
    }
    if n >= 1 {
        let chi_prev = wreath_inclusion(n - 1, k);
        let x_prev = Bimodule::regular(&a_n).restrict_right(&chi_prev);
        let d_prev = Bimodule::regular(&a_n).restrict_left(&chi_prev);
        let xd_t = tensor_over(&x_prev, &d_prev);
        summands.push(xd_t.bim.shifted(1));
        let y_n = AlgebraElement::y(&a_n1, &Permutation::transposition(n + 1, n));
        for &(i, j) in &xd_t.basis_pure_reps() {
            let a = chi.apply_basis(i).multiply(&y_n).unwrap();
            let b = chi.apply_basis(j);
            cols.push(lhs_t.pure_tensor(&svec_of(&a), &svec_of(&b)));
        }
    }
    let rhs = Bimodule::direct_sum(&summands.iter().collect::<Vec<_>>());
    if rhs.dim() != lhs.dim() {
        return CheckData::fail(format!(
            "dimension mismatch: {} ≠ {}",
            lhs.dim(),
            rhs.dim()
        ));
    }
    let mut matrix = RatMatrix::zero(lhs.dim(), rhs.dim());
    for (c, col) in cols.iter().enumerate() {
        for (&r, v) in col {
            matrix.set(r, c, v.clone());
        }
    }
    let map = BimoduleMap { matrix, shift: 0 };
    if let Err(e) = map.verify_iso(&rhs, lhs) {
        return CheckData::fail(format!("intertwiner rejected: {e}"));
    }
    let xd_dim = if n >= 1 { n * k * fact(n) * k.pow(n as u32) } else { 0 };
    CheckData::pass()
        .line(format!(
            "({n},{k}): {} = {} + {}·{} with exactly {k} identity summands",
            lhs.dim(),
            xd_dim,
            k,
            reg.dim()
        ))
        .dim("lhs", lhs.dim())
        .dim("identity_summands", k)
        .with_certificate(map_json(&map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::weyl_relation_check;
    use crate::report::map_from_json;
    use num::Zero;

    #[test]
    fn multiplication_examples() {
        let id = AlgebraId::nil_wreath(2, 2);
        // z² = 0 on one strand
        let z1 = z_gen(&id, 1);
        assert!(wreath_multiply(&z1, &z1).unwrap().is_zero());
        // Y moves the strand letter
        let y1 = AlgebraElement::y(&id, &Permutation::transposition(2, 1));
        let z2 = z_gen(&id, 2);
        assert_eq!(
            wreath_multiply(&y1, &z1).unwrap(),
            wreath_multiply(&z2, &y1).unwrap()
        );
        // nilCoxeter relation persists
        assert!(wreath_multiply(&y1, &y1).unwrap().is_zero());
    }

    #[test]
    fn trace_examples() {
        // one strand, square-zero letter: trace picks z
        let id = AlgebraId::nil_wreath(1, 2);
        assert_eq!(wreath_trace(&z_gen(&id, 1)), Q::from_integer(1.into()));
        assert!(wreath_trace(&AlgebraElement::unit(&id)).is_zero());
    }

    #[test]
    fn gram_full_rank_small() {
        for (n, k) in [(1usize, 2usize), (2, 2), (1, 3), (2, 3)] {
            let dim = fact(n) * k.pow(n as u32);
            assert_eq!(wreath_gram(n, k).rank(), dim, "({n},{k})");
        }
    }

    #[test]
    fn frobenius_sweep() {
        let d = wreath_frobenius_check(100);
        assert!(d.pass, "{:?}", d.witness);
    }

    #[test]
    fn associativity_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        // three strands matter: the strand permutation acting on the
        // letters is not an involution there
        let id = AlgebraId::nil_wreath(3, 2);
        for _ in 0..6 {
            let r = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut e = AlgebraElement::zero(&id);
                for i in 0..id.dim() {
                    let c = rng.gen_range(-2..=2i64);
                    if c != 0 {
                        e = e.add(&AlgebraElement::basis(&id, i).scale(&crate::linalg::q_int(c)));
                    }
                }
                e
            };
            let (a, b, c) = (r(&mut rng), r(&mut rng), r(&mut rng));
            let lhs = a.multiply(&b).unwrap().multiply(&c).unwrap();
            let rhs = a.multiply(&b.multiply(&c).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn weyl_examples() {
        for (n, k) in [(0, 2), (1, 2), (1, 3), (2, 2)] {
            let d = wreath_weyl_check(n, k);
            assert!(d.pass, "({n},{k}): {:?}", d.witness);
        }
        let d = wreath_weyl_check(1, 2);
        assert_eq!(d.dims.get("lhs"), Some(&8));
    }

    #[test]
    fn k_one_matches_plain_relation() {
        // the k = 1 wreath certificate is numerically identical to the
        // plain nilCoxeter one
        for n in 0..=3usize {
            let w = wreath_weyl_check(n, 1);
            assert!(w.pass, "n={n}: {:?}", w.witness);
            let plain = weyl_relation_check(n, true);
            assert!(plain.pass);
            let mw = map_from_json(w.certificate.as_ref().unwrap()).unwrap();
            let mp = map_from_json(plain.certificate.as_ref().unwrap()).unwrap();
            assert_eq!(mw.matrix, mp.matrix, "n={n}");
        }
    }

    #[test]
    fn k_one_trace_matches_plain() {
        let idw = AlgebraId::nil_wreath(3, 1);
        let idn = AlgebraId::nil(3);
        for i in 0..6 {
            for j in 0..6 {
                let a = AlgebraElement::basis(&idw, i)
                    .multiply(&AlgebraElement::basis(&idw, j))
                    .unwrap();
                let b = AlgebraElement::basis(&idn, i)
                    .multiply(&AlgebraElement::basis(&idn, j))
                    .unwrap();
                assert_eq!(wreath_trace(&a), b.trace().unwrap());
            }
        }
    }
}
