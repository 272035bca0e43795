//! The induction/restriction bimodules X_n, D_{n+1}, I_n and the twist
//! A_n^ψ, the functors of tensoring with them, probe modules, and the
//! verification routines for the Weyl relation, adjointness, duality,
//! the integral, and the canonical-basis bimodules.
//!
//! ```
//! use nilcox::functor::weyl_relation_check;
//!
//! // D_3 ⊗ X_2 ≅ A_2 ⊕ (X_1 ⊗ D_2){1}, with an explicit intertwiner
//! let report = weyl_relation_check(2, true);
//! assert!(report.pass);
//! assert_eq!(report.dims["lhs"], 6); // (n+1)! = n! + n·n!
//! ```

use crate::algebra::{AlgebraElement, AlgebraId, AlgebraMap};
use crate::bimodule::{
    find_iso_auto, hom_space, is_indecomposable, is_isomorphic, is_isomorphic_with,
    quotient_bimodule, radical_sub, sub_bimodule, svec_unit, tensor_over, Bimodule, BimoduleMap,
    Indecomposability, IsoMode, IsoOutcome, SVec,
};
use crate::linalg::{q_int, RatMatrix};
use crate::perm::Permutation;
use crate::report::{map_json, CheckData};

/// X_n: A_{n+1} as an (A_{n+1}, A_n)-bimodule, right action through the
/// standard inclusion. Tensoring with it is induction.
pub fn x_bimodule(n: usize) -> Bimodule {
    Bimodule::regular(&AlgebraId::nil(n + 1))
        .restrict_right(&AlgebraMap::inclusion_next(&AlgebraId::nil(n)))
}

/// D_{n+1}: A_{n+1} as an (A_n, A_{n+1})-bimodule, left action through
/// the standard inclusion. Tensoring with it is restriction.
pub fn d_bimodule(n: usize) -> Bimodule {
    Bimodule::regular(&AlgebraId::nil(n + 1))
        .restrict_left(&AlgebraMap::inclusion_next(&AlgebraId::nil(n)))
}

/// I_n: A_n as an (A_{n+1}, A_n)-bimodule, left action through the
/// truncation map killing the top generator.
pub fn i_bimodule(n: usize) -> Bimodule {
    Bimodule::regular(&AlgebraId::nil(n)).restrict_left(&AlgebraMap::truncation(n))
}

/// A_n^ψ: the regular bimodule with the right action twisted by the
/// involution Y_i -> Y_{n-i}.
pub fn psi_bimodule(n: usize) -> Bimodule {
    Bimodule::regular(&AlgebraId::nil(n)).restrict_right(&AlgebraMap::psi(n))
}

/// The named functors between blocks of left modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Functor {
    FX,
    FD,
    Psi,
    Omega,
    FI,
    Id,
}

/// Apply a functor to a left module over a single nilCoxeter block.
pub fn apply_functor(f: Functor, m: &Bimodule) -> Bimodule {
    let n = m
        .left
        .single_nil()
        .expect("functors act on single-block modules");
    match f {
        Functor::Id => m.clone(),
        Functor::FX => tensor_over(&x_bimodule(n), m).bim,
        Functor::FD => {
            assert!(n >= 1, "restriction needs a strand to remove");
            tensor_over(&d_bimodule(n - 1), m).bim
        }
        Functor::FI => tensor_over(&i_bimodule(n), m).bim,
        Functor::Psi => tensor_over(&psi_bimodule(n), m).bim,
        Functor::Omega => m.dual().transport_u(),
    }
}

/// The probe set at block n: the simple module, the free module, the
/// radical series of the free module and its quotients, plus seeded
/// random quotients of a sum of two free modules.
pub fn probe_modules(n: usize, seed: u64) -> Vec<(String, Bimodule)> {
    use rand::{Rng, SeedableRng};
    let id = AlgebraId::nil(n);
    let mut out = vec![
        (format!("L{n}"), Bimodule::simple_module(&id)),
        (format!("P{n}"), Bimodule::free_module(&id)),
    ];
    let free = Bimodule::free_module(&id);
    let mut current = free.clone();
    let mut incl_to_free: Option<RatMatrix> = None;
    let mut i = 1;
    loop {
        let (rad, incl) = radical_sub(&current);
        if rad.dim() == 0 {
            break;
        }
        let abs_incl = match &incl_to_free {
            None => incl.clone(),
            Some(prev) => prev.mul(&incl),
        };
        if rad.dim() < free.dim() {
            out.push((format!("rad^{i} P{n}"), rad.clone()));
            let (quot, _) = quotient_bimodule(&free, &abs_incl);
            out.push((format!("P{n}/rad^{i}"), quot));
        }
        incl_to_free = Some(abs_incl);
        current = rad;
        i += 1;
    }
    // seeded random quotients of P ⊕ P
    if n >= 1 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.wrapping_add(n as u64));
        let double = Bimodule::direct_sum(&[&free, &free]);
        for t in 0..2 {
            // one random homogeneous seed vector in a fixed degree
            let deg = 1i64.min(*double.degrees.iter().max().unwrap());
            let mut v = SVec::new();
            for (i, &d) in double.degrees.iter().enumerate() {
                if d == deg {
                    let c = rng.gen_range(-3..=3i64);
                    if c != 0 {
                        v.insert(i, q_int(c));
                    }
                }
            }
            if v.is_empty() {
                continue;
            }
            let (_, incl) = sub_bimodule(&double, &[v]);
            let (quot, _) = quotient_bimodule(&double, &incl);
            if quot.dim() > 0 && quot.dim() < double.dim() {
                out.push((format!("rand{t} quotient of P{n}^2"), quot));
            }
        }
    }
    out
}

fn svec_of(e: &AlgebraElement) -> SVec {
    e.coeffs.clone()
}

/// The explicit intertwiner of the bimodule-level Weyl relation
/// D_{n+1} ⊗ X_n ≅ A_n ⊕ (X_{n-1} ⊗ D_n){graded: 1}: the first summand
/// maps by a ↦ a·(1⊗1) and the second by a⊗b ↦ a·Y_n·b.
pub fn weyl_relation_check(n: usize, graded: bool) -> CheckData {
    let a_n = AlgebraId::nil(n);
    let a_n1 = AlgebraId::nil(n + 1);
    let chi = AlgebraMap::inclusion_next(&a_n);
    let d = d_bimodule(n);
    let x = x_bimodule(n);
    let lhs_t = tensor_over(&d, &x);
    let lhs = &lhs_t.bim;
    if let Err(e) = lhs.validate() {
        return CheckData::fail(format!("left side failed validation: {e}"));
    }
    let reg = Bimodule::regular(&a_n);
    let (rhs, cols): (Bimodule, Vec<SVec>) = if n == 0 {
        let cols = vec![lhs_t.pure_tensor(&svec_unit(0), &svec_unit(0))];
        (reg.clone(), cols)
    } else {
        let x_prev = x_bimodule(n - 1);
        let d_prev = Bimodule::regular(&a_n)
            .restrict_left(&AlgebraMap::inclusion_next(&AlgebraId::nil(n - 1)));
        let xd_t = tensor_over(&x_prev, &d_prev);
        let summand = if graded {
            xd_t.bim.shifted(1)
        } else {
            xd_t.bim.clone()
        };
        let rhs = Bimodule::direct_sum(&[&reg, &summand]);
        let y_n = AlgebraElement::y(&a_n1, &Permutation::transposition(n + 1, n));
        let mut cols = Vec::with_capacity(rhs.dim());
        for j in 0..reg.dim() {
            // m_1: a ↦ a ⊗ 1
            let img = chi.apply_basis(j);
            cols.push(lhs_t.pure_tensor(&svec_of(&img), &svec_unit(0)));
        }
        for &(i, j) in &xd_t.basis_pure_reps() {
            // m_2: a ⊗ b ↦ (a·Y_n) ⊗ b
            let a = chi.apply_basis(i).multiply(&y_n).unwrap();
            let b = chi.apply_basis(j);
            cols.push(lhs_t.pure_tensor(&svec_of(&a), &svec_of(&b)));
        }
        (rhs, cols)
    };
    let mut matrix = RatMatrix::zero(lhs.dim(), rhs.dim());
    for (c, col) in cols.iter().enumerate() {
        for (&r, v) in col {
            matrix.set(r, c, v.clone());
        }
    }
    let map = BimoduleMap { matrix, shift: 0 };
    let check = if graded {
        map.verify_iso(lhs_clone_helper(&rhs), lhs).err()
    } else {
        map.verify_action(&rhs, lhs)
            .err()
            .or_else(|| (!map.matrix.is_invertible()).then(|| "not invertible".to_string()))
    };
    if let Some(e) = check {
        return CheckData::fail(format!("intertwiner rejected: {e}"));
    }
    let fact = |k: usize| -> usize { (1..=k).product::<usize>().max(1) };
    let dim_ok = lhs.dim() == fact(n + 1) && rhs.dim() == fact(n) + n * fact(n);
    let mut data = CheckData::pass()
        .line(format!(
            "restriction∘induction at block {n}: {} = {} + {}",
            lhs.dim(),
            fact(n),
            n * fact(n)
        ))
        .dim("lhs", lhs.dim())
        .dim("regular_summand", fact(n))
        .dim("second_summand", n * fact(n))
        .with_certificate(map_json(&map));
    if !dim_ok {
        data = CheckData::fail("dimension identity (n+1)! = n! + n·n! violated").merge(data);
    }
    data
}

// verify_iso takes &Bimodule; small helper so the graded call reads the same
fn lhs_clone_helper(b: &Bimodule) -> &Bimodule {
    b
}

/// Naturality of the Weyl intertwiner: the bimodule certificate induces
/// a module-level isomorphism commuting with maps induced by the radical
/// inclusion rad P_n ↪ P_n.
pub fn weyl_naturality_check(n: usize) -> CheckData {
    assert!(n >= 1);
    let d = d_bimodule(n);
    let x = x_bimodule(n);
    let t_lhs = tensor_over(&d, &x);
    let x_prev = x_bimodule(n - 1);
    let d_prev = Bimodule::regular(&AlgebraId::nil(n))
        .restrict_left(&AlgebraMap::inclusion_next(&AlgebraId::nil(n - 1)));
    let t_xd = tensor_over(&x_prev, &d_prev);
    let rhs = Bimodule::direct_sum(&[&Bimodule::regular(&AlgebraId::nil(n)), &t_xd.bim.shifted(1)]);
    let weyl = weyl_relation_check(n, true);
    if !weyl.pass {
        return weyl;
    }
    let cert = crate::report::map_from_json(weyl.certificate.as_ref().unwrap()).unwrap();
    // the two endofunctors, realized as tensoring with bimodules
    let free = Bimodule::free_module(&AlgebraId::nil(n));
    let (rad, incl) = radical_sub(&free);
    let g_sub = tensor_over(&t_lhs.bim, &rad);
    let g_full = tensor_over(&t_lhs.bim, &free);
    let h_sub = tensor_over(&rhs, &rad);
    let h_full = tensor_over(&rhs, &free);
    let eta_sub = crate::bimodule::induced_map_left(&h_sub, &g_sub, &cert.matrix);
    let eta_full = crate::bimodule::induced_map_left(&h_full, &g_full, &cert.matrix);
    let g_f = crate::bimodule::induced_map_right(&g_sub, &g_full, &incl);
    let h_f = crate::bimodule::induced_map_right(&h_sub, &h_full, &incl);
    if g_f.mul(&eta_sub) != eta_full.mul(&h_f) {
        return CheckData::fail("naturality square does not commute");
    }
    if !eta_sub.is_invertible() || !eta_full.is_invertible() {
        return CheckData::fail("induced component maps are not invertible");
    }
    CheckData::pass()
        .line(format!(
            "naturality square commutes on rad P{n} ↪ P{n} (dims {} → {})",
            g_sub.dim(),
            g_full.dim()
        ))
        .dim("sub", g_sub.dim())
        .dim("full", g_full.dim())
}

/// Functor-level Weyl relation on every probe module:
/// restriction∘induction ≅ induction∘restriction{1} ⊕ Id.
pub fn functor_weyl_check(n_max: usize, seed: u64, graded: bool) -> CheckData {
    let mut data = CheckData::pass();
    for n in 0..=n_max {
        for (name, probe) in probe_modules(n, seed) {
            let lhs = apply_functor(Functor::FD, &apply_functor(Functor::FX, &probe));
            let rhs = if n == 0 {
                probe.clone()
            } else {
                let mut xd = apply_functor(Functor::FX, &apply_functor(Functor::FD, &probe));
                if graded {
                    xd = xd.shifted(1);
                }
                Bimodule::direct_sum(&[&xd, &probe])
            };
            let mode = if graded {
                IsoMode::Graded(0)
            } else {
                IsoMode::Ungraded
            };
            match is_isomorphic_with(&lhs, &rhs, seed, mode) {
                IsoOutcome::Yes(_) => {
                    data = data.line(format!(
                        "block {n}, probe {name}: dims {} ≅ {}",
                        lhs.dim(),
                        rhs.dim()
                    ));
                }
                IsoOutcome::No(w) => {
                    return CheckData::fail(format!("block {n}, probe {name}: {w}"));
                }
            }
        }
    }
    data
}

fn module_hom_dim(m: &Bimodule, n: &Bimodule) -> usize {
    hom_space(m, n).len()
}

/// Left adjunction dimension equalities on probe pairs:
/// dim Hom(induce m, n) = dim Hom(m, restrict n).
pub fn adjunction_check(n_max: usize, seed: u64, twisted: bool) -> CheckData {
    let mut data = CheckData::pass();
    for n in 0..=n_max {
        let lows = probe_modules(n, seed);
        let highs = probe_modules(n + 1, seed);
        for (lname, low) in &lows {
            for (hname, high) in &highs {
                let (a, b) = if !twisted {
                    let fx = apply_functor(Functor::FX, low);
                    let fd = apply_functor(Functor::FD, high);
                    (module_hom_dim(&fx, high), module_hom_dim(low, &fd))
                } else {
                    // induction is right adjoint to the twisted restriction
                    let fx = apply_functor(Functor::FX, low);
                    let twisted_fd = apply_functor(
                        Functor::Psi,
                        &apply_functor(Functor::FD, &apply_functor(Functor::Psi, high)),
                    );
                    (module_hom_dim(high, &fx), module_hom_dim(&twisted_fd, low))
                };
                if a != b {
                    return CheckData::fail(format!(
                        "block {n}, probes ({lname}, {hname}): hom dims {a} ≠ {b}"
                    ));
                }
                data = data.line(format!(
                    "block {n}, ({lname}, {hname}): {a} = {b}"
                ));
            }
        }
    }
    data
}

/// Duality package: X_n* ≅ D_{n+1} ⊗ A_{n+1}^ψ with certificate, plus
/// the four functor identities (double dual, dual/twist commutation,
/// commutation with induction and restriction) on probes.
pub fn duality_checks(n_max: usize, seed: u64) -> CheckData {
    let mut data = CheckData::pass();
    for n in 0..=n_max {
        let lhs = x_bimodule(n).dual();
        let rhs = tensor_over(&d_bimodule(n), &psi_bimodule(n + 1)).bim;
        match find_iso_auto(&lhs, &rhs, seed) {
            IsoOutcome::Yes(map) => {
                data = data
                    .line(format!("X{n}* ≅ D{} ⊗ twisted regular, dim {}", n + 1, lhs.dim()))
                    .dim(format!("xdual{n}"), lhs.dim());
                if data.certificate.is_none() {
                    data = data.with_certificate(map_json(&map));
                }
            }
            IsoOutcome::No(w) => {
                return CheckData::fail(format!("dual of X{n}: {w}"));
            }
        }
    }
    let expect_iso = |data: CheckData, a: &Bimodule, b: &Bimodule, label: String| -> CheckData {
        match find_iso_auto(a, b, seed) {
            IsoOutcome::Yes(_) => data.line(format!("{label}: dims {} ≅ {}", a.dim(), b.dim())),
            IsoOutcome::No(w) => CheckData::fail(format!("{label}: {w}")).merge(data),
        }
    };
    for n in 0..=n_max.min(3) {
        for (name, probe) in probe_modules(n, seed) {
            let om = |m: &Bimodule| apply_functor(Functor::Omega, m);
            let ps = |m: &Bimodule| apply_functor(Functor::Psi, m);
            data = expect_iso(data, &om(&om(&probe)), &probe, format!("double dual on {name}"));
            data = expect_iso(
                data,
                &om(&ps(&probe)),
                &ps(&om(&probe)),
                format!("dual/twist commute on {name}"),
            );
            let fx = |m: &Bimodule| apply_functor(Functor::FX, m);
            data = expect_iso(
                data,
                &om(&ps(&fx(&probe))),
                &fx(&om(&ps(&probe))),
                format!("twisted dual vs induction on {name}"),
            );
            if n >= 1 {
                let fd = |m: &Bimodule| apply_functor(Functor::FD, m);
                data = expect_iso(
                    data,
                    &om(&fd(&probe)),
                    &fd(&om(&probe)),
                    format!("dual vs restriction on {name}"),
                );
            }
            if !data.pass {
                return data;
            }
        }
    }
    data
}

/// Integral bimodule checks: D_{n+1} ⊗ I_n ≅ A_n with certificate, and
/// the negative claim I_1 ⊗ D_2 ≇ A_2 with an action-rank witness.
pub fn integral_checks(n_max: usize, seed: u64) -> CheckData {
    let mut data = CheckData::pass();
    for n in 0..=n_max {
        let lhs = tensor_over(&d_bimodule(n), &i_bimodule(n)).bim;
        let reg = Bimodule::regular(&AlgebraId::nil(n));
        match is_isomorphic(&lhs, &reg, seed) {
            IsoOutcome::Yes(map) => {
                data = data
                    .line(format!("restriction of the integral at block {n}: dim {}", lhs.dim()))
                    .dim(format!("block{n}"), lhs.dim());
                if data.certificate.is_none() {
                    data = data.with_certificate(map_json(&map));
                }
            }
            IsoOutcome::No(w) => return CheckData::fail(format!("block {n}: {w}")),
        }
    }
    // I_1 ⊗ D_2 vs the regular A_2-bimodule: not isomorphic
    let id2 = tensor_over(&i_bimodule(1), &d_bimodule(1)).bim;
    let reg2 = Bimodule::regular(&AlgebraId::nil(2));
    let rank_lhs = id2.left_gen(0).rank();
    let rank_reg = reg2.left_gen(0).rank();
    match is_isomorphic(&id2, &reg2, seed) {
        IsoOutcome::Yes(_) => {
            return CheckData::fail("integral∘restriction unexpectedly isomorphic to the identity")
        }
        IsoOutcome::No(w) => {
            if rank_lhs != 0 || rank_reg != 1 {
                return CheckData::fail(format!(
                    "unexpected action ranks: {rank_lhs} vs {rank_reg}"
                ));
            }
            data = data
                .line(format!(
                    "I⊗D ≇ regular: left generator acts with rank {rank_lhs} vs {rank_reg} ({w})"
                ))
                .dim("i_tensor_d", id2.dim());
        }
    }
    data
}

/// Builds A_{m+k−n} ⊗_{A_{k−n}} A_k as an (A_{m+k−n}, A_k)-bimodule and
/// reports its indecomposability verdict.
pub fn canonical_basis_bimodule(m: usize, n: usize, k: usize) -> Result<(Bimodule, Indecomposability), String> {
    if k < n {
        return Err(format!("need k ≥ n, got k={k} < n={n}"));
    }
    let top = m + k - n;
    let mid = k - n;
    let left = Bimodule::regular(&AlgebraId::nil(top))
        .restrict_right(&AlgebraMap::inclusion_chain(mid, top));
    let right = Bimodule::regular(&AlgebraId::nil(k))
        .restrict_left(&AlgebraMap::inclusion_chain(mid, k));
    let t = tensor_over(&left, &right).bim;
    let verdict = is_indecomposable(&t);
    Ok((t, verdict))
}

/// Indecomposability of every canonical-basis bimodule within the
/// dimension bound.
pub fn canonical_basis_check(max_dim: usize) -> CheckData {
    let fact = |k: usize| -> usize { (1..=k).product::<usize>().max(1) };
    let mut data = CheckData::pass();
    let mut count = 0;
    for k in 0..=6usize {
        for n in 0..=k {
            for m in 0..=6usize {
                if m == 0 && n == 0 {
                    continue; // the empty word: dimension 0 bookkeeping aside
                }
                let top = m + k - n;
                let mid = k - n;
                if top > 6 {
                    continue;
                }
                let dim = fact(top) / fact(mid) * fact(k);
                if dim == 0 || dim > max_dim {
                    continue;
                }
                let (bim, verdict) = canonical_basis_bimodule(m, n, k).unwrap();
                assert_eq!(bim.dim(), dim);
                match verdict {
                    Indecomposability::Indecomposable { end_dim } => {
                        data = data.line(format!(
                            "x^{m}∂^{n} at block {k}: dim {dim}, End dim {end_dim}, indecomposable"
                        ));
                        count += 1;
                    }
                    other => {
                        return CheckData::fail(format!(
                            "x^{m}∂^{n} at block {k} (dim {dim}): verdict {other:?}"
                        ))
                    }
                }
            }
        }
    }
    data.dim("bimodules_checked", count)
}

/// Structural checks on the named bimodules themselves: validation,
/// freeness ranks, and the defining twist relation of A^ψ.
pub fn named_bimodule_checks(n_max: usize) -> CheckData {
    let mut data = CheckData::pass();
    for n in 0..=n_max {
        for (name, b) in [
            (format!("X{n}"), x_bimodule(n)),
            (format!("D{}", n + 1), d_bimodule(n)),
            (format!("I{n}"), i_bimodule(n)),
            (format!("twisted regular {n}"), psi_bimodule(n)),
        ] {
            if let Err(e) = b.validate() {
                return CheckData::fail(format!("{name}: {e}"));
            }
            data = data.line(format!("{name}: valid, dim {}", b.dim()));
        }
    }
    data
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::{hom_space_graded, induced_map_right};

    #[test]
    fn named_bimodules_validate() {
        assert!(named_bimodule_checks(3).pass);
    }

    #[test]
    fn twist_relation_of_psi_bimodule() {
        // 1·Y_i on the twisted side = Y_{n-i}·1
        for n in 2..=4usize {
            let p = psi_bimodule(n);
            for i in 1..n {
                let lhs = p.act_right_basis(
                    p.right.perm_basis_index(0, &Permutation::transposition(n, i)),
                    &svec_unit(0),
                );
                let rhs = p.act_left_basis(
                    p.left.perm_basis_index(0, &Permutation::transposition(n, n - i)),
                    &svec_unit(0),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn dual_of_regular_is_twisted_regular() {
        for n in 1..=3usize {
            let dual = Bimodule::regular(&AlgebraId::nil(n)).dual();
            let tw = psi_bimodule(n);
            match find_iso_auto(&dual, &tw, 0) {
                IsoOutcome::Yes(_) => {}
                IsoOutcome::No(w) => panic!("n={n}: {w}"),
            }
        }
    }

    #[test]
    fn functor_dimension_laws() {
        for n in 1..=3usize {
            for (_, probe) in probe_modules(n, 0) {
                assert_eq!(apply_functor(Functor::FX, &probe).dim(), (n + 1) * probe.dim());
                assert_eq!(apply_functor(Functor::FD, &probe).dim(), probe.dim());
                assert_eq!(apply_functor(Functor::Psi, &probe).dim(), probe.dim());
                assert_eq!(apply_functor(Functor::FI, &probe).dim(), probe.dim());
            }
        }
    }

    #[test]
    fn functor_examples() {
        // induction of the simple at block 1 is the free module at block 2
        let l1 = Bimodule::simple_module(&AlgebraId::nil(1));
        let fx = apply_functor(Functor::FX, &l1);
        assert_eq!(fx.dim(), 2);
        match is_isomorphic(&fx, &Bimodule::free_module(&AlgebraId::nil(2)), 0) {
            IsoOutcome::Yes(_) => {}
            IsoOutcome::No(w) => panic!("{w}"),
        }
        // restriction of the simple at block 2 is one-dimensional
        let l2 = Bimodule::simple_module(&AlgebraId::nil(2));
        assert_eq!(apply_functor(Functor::FD, &l2).dim(), 1);
    }

    #[test]
    fn psi_squared_is_identity() {
        for n in 1..=3usize {
            for (name, probe) in probe_modules(n, 0) {
                let twice = apply_functor(Functor::Psi, &apply_functor(Functor::Psi, &probe));
                match is_isomorphic(&twice, &probe, 0) {
                    IsoOutcome::Yes(_) => {}
                    IsoOutcome::No(w) => panic!("{name}: {w}"),
                }
            }
        }
    }

    #[test]
    fn weyl_small_blocks() {
        for n in 0..=3usize {
            let d = weyl_relation_check(n, false);
            assert!(d.pass, "ungraded n={n}: {:?}", d.witness);
            let d = weyl_relation_check(n, true);
            assert!(d.pass, "graded n={n}: {:?}", d.witness);
        }
    }

    #[test]
    fn weyl_naturality_small() {
        for n in 1..=2usize {
            let d = weyl_naturality_check(n);
            assert!(d.pass, "n={n}: {:?}", d.witness);
        }
    }

    #[test]
    fn functor_weyl_on_probes_small() {
        let d = functor_weyl_check(2, 0, false);
        assert!(d.pass, "{:?}", d.witness);
        let d = functor_weyl_check(2, 0, true);
        assert!(d.pass, "{:?}", d.witness);
    }

    #[test]
    fn adjunction_small() {
        let d = adjunction_check(1, 0, false);
        assert!(d.pass, "{:?}", d.witness);
        let d = adjunction_check(1, 0, true);
        assert!(d.pass, "{:?}", d.witness);
    }

    #[test]
    fn duality_small() {
        let d = duality_checks(1, 0);
        assert!(d.pass, "{:?}", d.witness);
    }

    #[test]
    fn integral_small() {
        let d = integral_checks(2, 0);
        assert!(d.pass, "{:?}", d.witness);
    }

    #[test]
    fn canonical_basis_examples() {
        let (b, v) = canonical_basis_bimodule(1, 1, 2).unwrap();
        assert_eq!(b.dim(), 4);
        assert!(matches!(v, Indecomposability::Indecomposable { .. }));
        let (b, v) = canonical_basis_bimodule(1, 1, 1).unwrap();
        assert_eq!(b.dim(), 1);
        assert!(matches!(v, Indecomposability::Indecomposable { .. }));
    }

    #[test]
    fn hom_dim_of_free_module() {
        // maps out of the free module are determined by the image of 1
        for n in 1..=3usize {
            for (_, probe) in probe_modules(n, 0) {
                let p = Bimodule::free_module(&AlgebraId::nil(n));
                assert_eq!(hom_space(&p, &probe).len(), probe.dim());
            }
        }
    }

    #[test]
    fn tensoring_preserves_exactness() {
        // short exact sequence rad P ↪ P ↠ P/rad, induced by X⊗− and D⊗−
        for n in 1..=3usize {
            let p = Bimodule::free_module(&AlgebraId::nil(n));
            let (rad, incl) = radical_sub(&p);
            let (quot, proj) = quotient_bimodule(&p, &incl);
            for b in [x_bimodule(n), d_bimodule(n - 1).clone()] {
                let t_sub = tensor_over(&b, &rad);
                let t_mid = tensor_over(&b, &p);
                let t_quot = tensor_over(&b, &quot);
                let i2 = induced_map_right(&t_sub, &t_mid, &incl);
                let p2 = induced_map_right(&t_mid, &t_quot, &proj);
                assert_eq!(i2.rank(), t_sub.dim(), "induced inclusion injective");
                assert_eq!(p2.rank(), t_quot.dim(), "induced projection surjective");
                assert!(p2.mul(&i2).is_zero_matrix(), "composite vanishes");
                assert_eq!(i2.rank() + p2.rank(), t_mid.dim(), "exact in the middle");
            }
        }
    }

    #[test]
    fn graded_end_of_x() {
        // the induction bimodule is indecomposable with scalar graded
        // endomorphisms at small blocks
        for n in 1..=2usize {
            let x = x_bimodule(n);
            assert_eq!(hom_space_graded(&x, &x, 0).len(), 1);
        }
    }
}
