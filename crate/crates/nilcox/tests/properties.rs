//! Randomized structural properties, exercised with proptest. Sizes are
//! kept small so each property runs its full case budget in seconds.

use nilcox::algebra::{AlgebraElement, AlgebraId};
use nilcox::linalg::{q_int, RatMatrix, Q};
use nilcox::perm::Permutation;
use proptest::prelude::*;

fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..n.max(2), 0..=max_len)
}

fn perm_from_gens(n: usize, word: &[usize]) -> Permutation {
    word.iter().fold(Permutation::identity(n), |p, &i| {
        p.compose(&Permutation::transposition(n, i))
    })
}

fn small_matrix() -> impl Strategy<Value = RatMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |vals| {
            let mut m = RatMatrix::zero(r, c);
            for (k, v) in vals.iter().enumerate() {
                if *v != 0 {
                    m.set(k / c, k % c, q_int(*v));
                }
            }
            m
        })
    })
}

proptest! {
    #[test]
    fn permutation_word_roundtrip(word in word_strategy(4, 8)) {
        let w = perm_from_gens(4, &word);
        let back = perm_from_gens(4, &w.reduced_word());
        prop_assert_eq!(&back, &w);
        prop_assert!(w.length() <= word.len());
    }

    #[test]
    fn inverse_preserves_length(word in word_strategy(4, 8)) {
        let w = perm_from_gens(4, &word);
        let inv = w.inverse();
        prop_assert_eq!(inv.length(), w.length());
        prop_assert_eq!(w.compose(&inv), Permutation::identity(4));
    }

    #[test]
    fn composition_length_subadditive(
        wa in word_strategy(4, 6),
        wb in word_strategy(4, 6),
    ) {
        let a = perm_from_gens(4, &wa);
        let b = perm_from_gens(4, &wb);
        let c = a.compose(&b);
        prop_assert!(c.length() <= a.length() + b.length());
        prop_assert_eq!(
            (c.length() + a.length() + b.length()) % 2, 0,
            "length parity is multiplicative"
        );
    }

    #[test]
    fn algebra_multiplication_associative(
        wa in word_strategy(3, 4),
        wb in word_strategy(3, 4),
        wc in word_strategy(3, 4),
    ) {
        let id = AlgebraId::nil(3);
        let elem = |w: &[usize]| {
            AlgebraElement::basis(&id, id.perm_basis_index(0, &perm_from_gens(3, w)))
        };
        let (a, b, c) = (elem(&wa), elem(&wb), elem(&wc));
        let lhs = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let rhs = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs.coeffs, rhs.coeffs);
    }

    #[test]
    fn trace_nakayama_random(wa in word_strategy(3, 4), wb in word_strategy(3, 4)) {
        let id = AlgebraId::nil(3);
        let elem = |w: &[usize]| {
            AlgebraElement::basis(&id, id.perm_basis_index(0, &perm_from_gens(3, w)))
        };
        let (a, b) = (elem(&wa), elem(&wb));
        let lhs = a.multiply(&b).unwrap().trace().unwrap();
        let rhs = b.psi().unwrap().multiply(&a).unwrap().trace().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn psi_is_an_involution(word in word_strategy(4, 6)) {
        let id = AlgebraId::nil(4);
        let a = AlgebraElement::basis(
            &id,
            id.perm_basis_index(0, &perm_from_gens(4, &word)),
        );
        let twice = a.psi().unwrap().psi().unwrap();
        prop_assert_eq!(twice.coeffs, a.coeffs);
    }

    #[test]
    fn rank_kernel_dimension_formula(m in small_matrix()) {
        let rank = m.rank();
        let kernel = m.kernel_basis();
        prop_assert_eq!(rank + kernel.cols(), m.cols());
        prop_assert!(m.mul(&kernel).is_zero_matrix());
    }

    #[test]
    fn solve_agrees_with_matvec(m in small_matrix(), coeffs in prop::collection::vec(-3i64..=3, 4)) {
        let x: Vec<Q> = coeffs.iter().take(m.cols()).map(|&v| q_int(v)).collect();
        let b = m.matvec(&x);
        // a consistent system must report some solution reproducing b
        let sol = m.solve(&b).expect("consistent system has a solution");
        prop_assert_eq!(m.matvec(&sol), b);
    }

    #[test]
    fn wreath_multiplication_associative(
        ia in 0usize..12, ib in 0usize..12, ic in 0usize..12,
    ) {
        let id = AlgebraId::nil_wreath(2, 3); // dim 2!·3² = 18; draw from first 12
        let (a, b, c) = (
            AlgebraElement::basis(&id, ia),
            AlgebraElement::basis(&id, ib),
            AlgebraElement::basis(&id, ic),
        );
        let lhs = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let rhs = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs.coeffs, rhs.coeffs);
    }
}
