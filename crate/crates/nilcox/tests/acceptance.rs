//! End-to-end acceptance suite: each test covers one headline claim at
//! its full certified size and prints a single pass/fail line. All
//! arithmetic is exact; the tolerance everywhere is identically zero.

use nilcox::report::CheckData;
use nilcox::{algebra, bialgebra, decat, functor, wreath};

fn report(criterion: &str, data: CheckData) {
    let verdict = if data.pass { "pass" } else { "fail" };
    println!("[{verdict}] {criterion}");
    if let Some(w) = &data.witness {
        if !data.pass {
            println!("    witness: {w}");
        }
    }
    assert!(data.pass, "{criterion}: {:?}", data.witness);
}

#[test]
fn criterion_01_dimensions_and_poincare() {
    report(
        "dim A_n = n! (n ≤ 7) and Poincaré polynomial [n]! (n ≤ 6)",
        algebra::dimension_check(7, 6),
    );
}

#[test]
fn criterion_02_frobenius_and_nakayama() {
    report(
        "trace form nondegenerate and tr(ab) = tr(ψ(b)a), n ≤ 5",
        algebra::frobenius_check(5).merge(algebra::nakayama_check(5)),
    );
}

#[test]
fn criterion_03_divided_difference_relations() {
    report(
        "divided-difference relations on monomials of degree ≤ 6 in ≤ 4 variables",
        algebra::divided_difference_check(4, 6),
    );
}

#[test]
fn criterion_04_weyl_certificates() {
    let mut data = CheckData::pass();
    for n in 1..=5usize {
        data = data.merge(functor::weyl_relation_check(n, false));
        let fact = |k: usize| (1..=k).product::<usize>().max(1);
        assert_eq!(fact(n + 1), fact(n) + n * fact(n));
    }
    report(
        "certified intertwiner D_{n+1}⊗X_n ≅ A_n ⊕ X_{n-1}⊗D_n, n = 1..5",
        data,
    );
}

#[test]
fn criterion_05_functor_weyl_and_graded_classes() {
    let mut data = functor::functor_weyl_check(3, 0, false)
        .merge(functor::functor_weyl_check(3, 0, true));
    // graded Grothendieck shadow of the relation: ∂x = qx∂ + 1
    let x = decat::WeylElement::x(true);
    let d = decat::WeylElement::d(true);
    let q = nilcox::poly::RatFunc::q_pow(1);
    let lhs = d.mul(&x);
    let rhs = x.mul(&d).scale(&q).add(&decat::WeylElement::one(true));
    if lhs != rhs {
        data = data.merge(CheckData::fail("∂x ≠ qx∂ + 1 in the quantum Weyl algebra"));
    }
    report(
        "F_D F_X ≅ F_X F_D ⊕ Id on all probes (n ≤ 3), graded variant, and ∂x = qx∂ + 1",
        data,
    );
}

#[test]
fn criterion_06_adjunctions() {
    let data = functor::adjunction_check(3, 0, false)
        .merge(functor::adjunction_check(3, 0, true))
        .merge(bialgebra::m_delta_adjunction_check(4, 0, false))
        .merge(bialgebra::m_delta_adjunction_check(4, 0, true));
    report(
        "adjunction dimension equalities (plain and twisted), n ≤ 3",
        data,
    );
}

#[test]
fn criterion_07_duality() {
    report(
        "X_n* ≅ D_{n+1}⊗A^ψ (n ≤ 3), Ω² = Id, Ω commutes with Ψ, dual-vs-restriction",
        functor::duality_checks(3, 0),
    );
}

#[test]
fn criterion_08_integral() {
    report(
        "D_{n+1}⊗I_n ≅ A_n (n ≤ 4); I⊗D not the identity (rank witness); [I⊗N] = ∫[N]",
        functor::integral_checks(4, 0),
    );
}

#[test]
fn criterion_09_mackey() {
    report(
        "double-coset decomposition ⊕_r B_r ≅ A_{n+m} for all blocks with n+m = k+l ≤ 5",
        bialgebra::mackey_sweep(5),
    );
}

#[test]
fn criterion_10_pentagon() {
    report(
        "pentagon coherence composite is the exact identity, a+b+c+d ≤ 5",
        bialgebra::pentagon_sweep(5),
    );
}

#[test]
fn criterion_11_decategorification() {
    report(
        "classes: [P_n] = x^n, [L_n] = x^n/n!, [F_X] = x, [F_D] = ∂, Δ(x) = x⊗1 + q·1⊗x (n ≤ 4)",
        decat::verify_decategorification(4, 0).merge(bialgebra::delta_class_check(3, 0)),
    );
}

#[test]
fn criterion_12_wreath() {
    let mut data = wreath::wreath_frobenius_check(100);
    for (n, k) in [(0usize, 2usize), (1, 2), (1, 3), (2, 2)] {
        data = data.merge(wreath::wreath_weyl_check(n, k));
    }
    // k = 1 must reproduce the plain relation bit for bit
    for n in 0..=3usize {
        let w = wreath::wreath_weyl_check(n, 1);
        let p = functor::weyl_relation_check(n, true);
        assert!(w.pass && p.pass);
        let wc = nilcox::report::map_from_json(w.certificate.as_ref().unwrap()).unwrap();
        let pc = nilcox::report::map_from_json(p.certificate.as_ref().unwrap()).unwrap();
        if wc.matrix != pc.matrix {
            data = data.merge(CheckData::fail(format!(
                "k=1 certificate differs from the plain one at n={n}"
            )));
        }
    }
    report(
        "wreath dims n!k^n, trace nondegenerate (n!k^n ≤ 100), Weyl relation with k identity summands, k=1 agrees bit-for-bit",
        data,
    );
}

#[test]
fn criterion_13_indecomposability() {
    report(
        "canonical-basis bimodules indecomposable up to total dimension 48",
        functor::canonical_basis_check(48),
    );
}
