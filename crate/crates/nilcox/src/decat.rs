//! Decategorified shadow: the (q-)Weyl algebra acting on polynomials in
//! one variable, classes of modules, the bilinear form, the
//! antiinvolution swapping the two generators, and the verification
//! that the functors induce exactly this picture on classes.
//!
//! ```
//! use nilcox::decat::WeylElement;
//! use nilcox::poly::RatFunc;
//!
//! // ∂x = qx∂ + 1 in the quantum Weyl algebra
//! let (x, d) = (WeylElement::x(true), WeylElement::d(true));
//! let rhs = x.mul(&d).scale(&RatFunc::q_pow(1)).add(&WeylElement::one(true));
//! assert_eq!(d.mul(&x), rhs);
//! ```

use crate::bimodule::{hom_space, Bimodule};
use crate::functor::{apply_functor, probe_modules, Functor};
use crate::linalg::{q_int, Q};
use crate::poly::{PolyQ, RatFunc};
use crate::report::CheckData;
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

fn q_int_rf(q_mode: bool, j: usize) -> RatFunc {
    if q_mode {
        RatFunc::from_poly(PolyQ::q_integer(j))
    } else {
        RatFunc::from_int(j as i64)
    }
}

fn rf_constant(c: &RatFunc) -> Option<Q> {
    // a rational function that is literally a rational number
    if c.num().degree().unwrap_or(0) == 0 && c.den().degree().unwrap_or(0) == 0 {
        Some(c.num().coeff(0) / c.den().coeff(0))
    } else {
        None
    }
}

/// An element of the Weyl algebra (or its q-deformation) in normal
/// form: a combination of monomials x^m ∂^n with all ∂'s on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub q_mode: bool,
    terms: BTreeMap<(u32, u32), RatFunc>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeylGen {
    X,
    D,
}

impl WeylElement {
    pub fn zero(q_mode: bool) -> Self {
        WeylElement {
            q_mode,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(q_mode: bool, m: u32, n: u32, coeff: RatFunc) -> Self {
        let mut e = WeylElement::zero(q_mode);
        if !coeff.is_zero() {
            e.terms.insert((m, n), coeff);
        }
        e
    }

    pub fn one(q_mode: bool) -> Self {
        Self::monomial(q_mode, 0, 0, RatFunc::one())
    }

    pub fn x(q_mode: bool) -> Self {
        Self::monomial(q_mode, 1, 0, RatFunc::one())
    }

    pub fn d(q_mode: bool) -> Self {
        Self::monomial(q_mode, 0, 1, RatFunc::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &RatFunc)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.q_mode, other.q_mode);
        let mut out = self.clone();
        for (&k, v) in &other.terms {
            let entry = out.terms.entry(k).or_insert_with(RatFunc::zero);
            *entry = entry.add(v);
            if entry.is_zero() {
                out.terms.remove(&k);
            }
        }
        out
    }

    pub fn sub(&self, other: &WeylElement) -> WeylElement {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, s: &RatFunc) -> WeylElement {
        let mut out = WeylElement::zero(self.q_mode);
        if s.is_zero() {
            return out;
        }
        for (&k, v) in &self.terms {
            out.terms.insert(k, v.mul(s));
        }
        out
    }

    fn left_mul_x(&self) -> WeylElement {
        let mut out = WeylElement::zero(self.q_mode);
        for (&(m, n), c) in &self.terms {
            out.terms.insert((m + 1, n), c.clone());
        }
        out
    }

    fn left_mul_d(&self) -> WeylElement {
        // ∂ · x^m ∂^n = q^m x^m ∂^{n+1} + [m] x^{m-1} ∂^n
        let mut out = WeylElement::zero(self.q_mode);
        for (&(m, n), c) in &self.terms {
            let twist = if self.q_mode {
                RatFunc::q_pow(m as i64)
            } else {
                RatFunc::one()
            };
            out = out.add(&WeylElement::monomial(
                self.q_mode,
                m,
                n + 1,
                c.mul(&twist),
            ));
            if m > 0 {
                out = out.add(&WeylElement::monomial(
                    self.q_mode,
                    m - 1,
                    n,
                    c.mul(&q_int_rf(self.q_mode, m as usize)),
                ));
            }
        }
        out
    }

    /// Product, renormalized to the x^m ∂^n basis.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.q_mode, other.q_mode);
        let mut out = WeylElement::zero(self.q_mode);
        for (&(m, n), c) in &self.terms {
            let mut acc = other.clone();
            for _ in 0..n {
                acc = acc.left_mul_d();
            }
            for _ in 0..m {
                acc = acc.left_mul_x();
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// The antiinvolution swapping x and ∂ (defined in the classical
    /// algebra; the q-relation is not preserved by it).
    pub fn tau(&self) -> WeylElement {
        assert!(!self.q_mode, "the swap antiinvolution lives at q = 1");
        let mut out = WeylElement::zero(false);
        for (&(m, n), c) in &self.terms {
            out = out.add(&WeylElement::monomial(false, n, m, c.clone()));
        }
        out
    }
}

/// Evaluate a word in the generators to a normal-form element.
pub fn weyl_from_word(q_mode: bool, word: &[WeylGen]) -> WeylElement {
    let mut acc = WeylElement::one(q_mode);
    for g in word.iter().rev() {
        acc = match g {
            WeylGen::X => acc.left_mul_x(),
            WeylGen::D => acc.left_mul_d(),
        };
    }
    acc
}

/// Identity on the canonical representation: elements are kept in
/// normal form at all times, so this is idempotent by construction.
pub fn weyl_normal_form(e: &WeylElement) -> WeylElement {
    e.clone()
}

/// A class: a polynomial in x, with rational coefficients (classical)
/// or rational functions of q (graded).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyClass {
    pub q_mode: bool,
    coeffs: BTreeMap<u32, RatFunc>,
}

impl PolyClass {
    pub fn zero(q_mode: bool) -> Self {
        PolyClass {
            q_mode,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(q_mode: bool, i: u32, coeff: RatFunc) -> Self {
        let mut p = PolyClass::zero(q_mode);
        if !coeff.is_zero() {
            p.coeffs.insert(i, coeff);
        }
        p
    }

    pub fn x_power(q_mode: bool, i: u32) -> Self {
        Self::monomial(q_mode, i, RatFunc::one())
    }

    pub fn coeff(&self, i: u32) -> RatFunc {
        self.coeffs.get(&i).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&u32, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &PolyClass) -> PolyClass {
        assert_eq!(self.q_mode, other.q_mode);
        let mut out = self.clone();
        for (&k, v) in &other.coeffs {
            let entry = out.coeffs.entry(k).or_insert_with(RatFunc::zero);
            *entry = entry.add(v);
            if entry.is_zero() {
                out.coeffs.remove(&k);
            }
        }
        out
    }

    pub fn sub(&self, other: &PolyClass) -> PolyClass {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, s: &RatFunc) -> PolyClass {
        let mut out = PolyClass::zero(self.q_mode);
        if s.is_zero() {
            return out;
        }
        for (&k, v) in &self.coeffs {
            out.coeffs.insert(k, v.mul(s));
        }
        out
    }

    /// Specialize a graded class at q = 1 to a classical class.
    pub fn at_q_one(&self) -> PolyClass {
        let mut out = PolyClass::zero(false);
        for (&k, v) in &self.coeffs {
            let c = v.eval(&Q::one()).expect("pole at q = 1");
            if !c.is_zero() {
                out.coeffs.insert(k, RatFunc::from_rational(c));
            }
        }
        out
    }
}

impl fmt::Display for PolyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&i, c)| {
                let cs = c.to_string();
                let cs = if cs.contains(['+', '-', ' ']) && !cs.starts_with('-') {
                    format!("({cs})")
                } else {
                    cs
                };
                match i {
                    0 => cs,
                    1 => format!("{cs}*x"),
                    _ => format!("{cs}*x^{i}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The action on classes: x raises the power, ∂ x^i = [i] x^{i-1}.
pub fn weyl_apply(e: &WeylElement, p: &PolyClass) -> PolyClass {
    assert_eq!(e.q_mode, p.q_mode);
    let mut out = PolyClass::zero(p.q_mode);
    for (&(m, n), c) in &e.terms {
        for (&i, a) in &p.coeffs {
            if n > i {
                continue;
            }
            let mut coeff = c.mul(a);
            for j in (i - n + 1)..=i {
                coeff = coeff.mul(&q_int_rf(p.q_mode, j as usize));
            }
            out = out.add(&PolyClass::monomial(p.q_mode, i - n + m, coeff));
        }
    }
    out
}

/// The classical bilinear form with (x^i, x^j) = δ_{ij} i!.
pub fn bilinear_form(a: &PolyClass, b: &PolyClass) -> Q {
    assert!(!a.q_mode && !b.q_mode, "the form is defined at q = 1");
    let mut total = Q::zero();
    for (&i, ca) in &a.coeffs {
        let cb = b.coeff(i);
        let ca = rf_constant(ca).expect("classical class");
        let cb = rf_constant(&cb).expect("classical class");
        let fact: Q = q_int((1..=i as i64).product::<i64>().max(1));
        total += ca * cb * fact;
    }
    total
}

/// The formal integral on classes: x^i ↦ x^{i+1}/(i+1).
pub fn integral_class(p: &PolyClass) -> PolyClass {
    assert!(!p.q_mode, "the integral is taken at q = 1");
    let mut out = PolyClass::zero(false);
    for (&i, c) in &p.coeffs {
        let c = c.mul(&RatFunc::from_rational(Q::new(
            1.into(),
            (i as i64 + 1).into(),
        )));
        out = out.add(&PolyClass::monomial(false, i + 1, c));
    }
    out
}

/// The class-level antipode x^i ↦ (−1)^i x^i.
pub fn antipode(p: &PolyClass) -> PolyClass {
    let mut out = PolyClass::zero(p.q_mode);
    for (&i, c) in &p.coeffs {
        let sign = RatFunc::from_int(if i % 2 == 0 { 1 } else { -1 });
        out = out.add(&PolyClass::monomial(p.q_mode, i, c.mul(&sign)));
    }
    out
}

/// The class of a left module over a single nilCoxeter block:
/// (dim/n!)·x^n classically, (Σ_v q^{deg v} / [n]!)·x^n graded.
pub fn class_of(m: &Bimodule, graded: bool) -> Result<PolyClass, String> {
    let n = m
        .left
        .single_nil()
        .ok_or_else(|| "class taken over a single block".to_string())?;
    let fact: i64 = (1..=n as i64).product::<i64>().max(1);
    let coeff = if graded {
        let mut num = RatFunc::zero();
        for &d in &m.degrees {
            num = num.add(&RatFunc::q_pow(d));
        }
        num.mul(&RatFunc::new(PolyQ::one(), PolyQ::q_factorial(n)))
    } else {
        RatFunc::from_rational(Q::new((m.dim() as i64).into(), fact.into()))
    };
    Ok(PolyClass::monomial(graded, n as u32, coeff))
}

/// A class in the tensor square: a combination of x^a ⊗ x^b. In the
/// graded ring the two sides q-commute: (1⊗x)(x⊗1) = q·(x⊗1)(1⊗x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorClass {
    pub q_mode: bool,
    coeffs: BTreeMap<(u32, u32), RatFunc>,
}

impl TensorClass {
    pub fn zero(q_mode: bool) -> Self {
        TensorClass {
            q_mode,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(q_mode: bool, a: u32, b: u32, coeff: RatFunc) -> Self {
        let mut t = TensorClass::zero(q_mode);
        if !coeff.is_zero() {
            t.coeffs.insert((a, b), coeff);
        }
        t
    }

    pub fn one(q_mode: bool) -> Self {
        Self::monomial(q_mode, 0, 0, RatFunc::one())
    }

    pub fn component(&self, a: u32, b: u32) -> RatFunc {
        self.coeffs
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    pub fn add(&self, other: &TensorClass) -> TensorClass {
        assert_eq!(self.q_mode, other.q_mode);
        let mut out = self.clone();
        for (&k, v) in &other.coeffs {
            let entry = out.coeffs.entry(k).or_insert_with(RatFunc::zero);
            *entry = entry.add(v);
            if entry.is_zero() {
                out.coeffs.remove(&k);
            }
        }
        out
    }

    pub fn mul(&self, other: &TensorClass) -> TensorClass {
        assert_eq!(self.q_mode, other.q_mode);
        let mut out = TensorClass::zero(self.q_mode);
        for (&(a, b), ca) in &self.coeffs {
            for (&(c, d), cb) in &other.coeffs {
                let mut coeff = ca.mul(cb);
                if self.q_mode {
                    coeff = coeff.mul(&RatFunc::q_pow((b * c) as i64));
                }
                out = out.add(&TensorClass::monomial(self.q_mode, a + c, b + d, coeff));
            }
        }
        out
    }
}

/// The comultiplication on the class of x: x ⊗ 1 + 1 ⊗ x, with a q in
/// front of the second term in the graded ring.
pub fn delta_x(q_mode: bool) -> TensorClass {
    let second = if q_mode {
        RatFunc::q_pow(1)
    } else {
        RatFunc::one()
    };
    TensorClass::monomial(q_mode, 1, 0, RatFunc::one())
        .add(&TensorClass::monomial(q_mode, 0, 1, second))
}

/// Extend the comultiplication multiplicatively to a class.
pub fn delta_class(p: &PolyClass) -> TensorClass {
    let dx = delta_x(p.q_mode);
    let mut out = TensorClass::zero(p.q_mode);
    for (&i, c) in &p.coeffs {
        let mut pw = TensorClass::one(p.q_mode);
        for _ in 0..i {
            pw = pw.mul(&dx);
        }
        for (&(a, b), v) in &pw.coeffs {
            out = out.add(&TensorClass::monomial(p.q_mode, a, b, v.mul(c)));
        }
    }
    out
}

/// The class of a left module over a two-block algebra Nil(k)⊗Nil(l).
pub fn class_of_tensor(m: &Bimodule, graded: bool) -> Result<TensorClass, String> {
    let (k, l) = match m.left.factors() {
        [crate::algebra::Factor::Nil(k), crate::algebra::Factor::Nil(l)] => (*k, *l),
        _ => return Err("class taken over a two-block algebra".to_string()),
    };
    let fact = |j: usize| -> i64 { (1..=j as i64).product::<i64>().max(1) };
    let coeff = if graded {
        let mut num = RatFunc::zero();
        for &d in &m.degrees {
            num = num.add(&RatFunc::q_pow(d));
        }
        num.mul(&RatFunc::new(
            PolyQ::one(),
            PolyQ::q_factorial(k).mul(&PolyQ::q_factorial(l)),
        ))
    } else {
        RatFunc::from_rational(Q::new((m.dim() as i64).into(), (fact(k) * fact(l)).into()))
    };
    Ok(TensorClass::monomial(graded, k as u32, l as u32, coeff))
}

fn random_weyl(rng: &mut impl rand::Rng, q_mode: bool) -> WeylElement {
    let mut e = WeylElement::zero(q_mode);
    for _ in 0..3 {
        let m = rng.gen_range(0..3u32);
        let n = rng.gen_range(0..3u32);
        let c = rng.gen_range(-4..=4i64);
        e = e.add(&WeylElement::monomial(q_mode, m, n, RatFunc::from_int(c)));
    }
    e
}

fn random_class(rng: &mut impl rand::Rng, q_mode: bool) -> PolyClass {
    let mut p = PolyClass::zero(q_mode);
    for i in 0..5u32 {
        let c = rng.gen_range(-3..=3i64);
        p = p.add(&PolyClass::monomial(q_mode, i, RatFunc::from_int(c)));
    }
    p
}

/// The full class-level verification: relations and action oracles for
/// both the classical and the q-deformed algebra, classes of the
/// probes, compatibility with the functors, the bilinear form, the
/// antiinvolution, the integral, the antipode, and collapse at q = 1.
pub fn verify_decategorification(n_max: usize, seed: u64) -> CheckData {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut data = CheckData::pass();

    // defining relation in both modes
    for q_mode in [false, true] {
        let dx = WeylElement::d(q_mode).mul(&WeylElement::x(q_mode));
        let twist = if q_mode {
            RatFunc::q_pow(1)
        } else {
            RatFunc::one()
        };
        let expect = WeylElement::x(q_mode)
            .mul(&WeylElement::d(q_mode))
            .scale(&twist)
            .add(&WeylElement::one(q_mode));
        if dx != expect {
            return CheckData::fail(format!("∂x relation fails, q_mode={q_mode}"));
        }
    }
    data = data.line("∂x = x∂ + 1 and ∂x = qx∂ + 1 in normal form");

    // classical ∂²x² against the action oracle, and the closed form
    let e = weyl_from_word(false, &[WeylGen::D, WeylGen::D, WeylGen::X, WeylGen::X]);
    let closed = WeylElement::monomial(false, 2, 2, RatFunc::one())
        .add(&WeylElement::monomial(false, 1, 1, RatFunc::from_int(4)))
        .add(&WeylElement::monomial(false, 0, 0, RatFunc::from_int(2)));
    if e != closed {
        return CheckData::fail("∂²x² normal form mismatch");
    }
    for i in 0..6u32 {
        let p = PolyClass::x_power(false, i);
        let via_word = weyl_apply(
            &WeylElement::d(false),
            &weyl_apply(
                &WeylElement::d(false),
                &weyl_apply(
                    &WeylElement::x(false),
                    &weyl_apply(&WeylElement::x(false), &p),
                ),
            ),
        );
        if weyl_apply(&e, &p) != via_word {
            return CheckData::fail(format!("action oracle fails on x^{i}"));
        }
    }
    data = data.line("∂²x² = x²∂² + 4x∂ + 2, confirmed by the action oracle");

    // associativity, action compatibility, antiinvolution, on random data
    for q_mode in [false, true] {
        for _ in 0..8 {
            let a = random_weyl(&mut rng, q_mode);
            let b = random_weyl(&mut rng, q_mode);
            let c = random_weyl(&mut rng, q_mode);
            if a.mul(&b).mul(&c) != a.mul(&b.mul(&c)) {
                return CheckData::fail(format!("associativity fails, q_mode={q_mode}"));
            }
            let p = random_class(&mut rng, q_mode);
            if weyl_apply(&a.mul(&b), &p) != weyl_apply(&a, &weyl_apply(&b, &p)) {
                return CheckData::fail(format!("action not multiplicative, q_mode={q_mode}"));
            }
            if !q_mode {
                if a.tau().tau() != a {
                    return CheckData::fail("antiinvolution not involutive");
                }
                if a.mul(&b).tau() != b.tau().mul(&a.tau()) {
                    return CheckData::fail("antiinvolution does not reverse products");
                }
            }
        }
    }
    data = data.line("associativity, action compatibility, product-reversing swap: random checks pass");

    // τ-adjointness of the form: (y a, b) = (a, τ(y) b)
    for _ in 0..8 {
        let y = random_weyl(&mut rng, false);
        let a = random_class(&mut rng, false);
        let b = random_class(&mut rng, false);
        if bilinear_form(&weyl_apply(&y, &a), &b) != bilinear_form(&a, &weyl_apply(&y.tau(), &b)) {
            return CheckData::fail("form is not swap-adjoint");
        }
    }
    data = data.line("(y·a, b) = (a, τ(y)·b) on random elements and classes");

    // integrality of the action in both distinguished bases
    for i in 0..8u32 {
        // powers basis: ∂ x^i = i x^{i-1}
        let di = weyl_apply(&WeylElement::d(false), &PolyClass::x_power(false, i));
        for (_, c) in di.coeffs() {
            let v = rf_constant(c).unwrap();
            if !v.is_integer() {
                return CheckData::fail("action not integral on the powers basis");
            }
        }
        // divided powers basis e_i = x^i/i!: x e_i = (i+1) e_{i+1}, ∂ e_i = e_{i-1}
        let fact: Q = q_int((1..=i as i64).product::<i64>().max(1));
        let ei = PolyClass::monomial(false, i, RatFunc::from_rational(Q::one() / fact));
        for y in [WeylElement::x(false), WeylElement::d(false)] {
            let img = weyl_apply(&y, &ei);
            for (&j, c) in img.coeffs() {
                let factj: Q = q_int((1..=j as i64).product::<i64>().max(1));
                let coord = rf_constant(c).unwrap() * factj;
                if !coord.is_integer() {
                    return CheckData::fail("action not integral on the divided powers basis");
                }
            }
        }
    }
    data = data.line("x and ∂ act integrally on both the x^i and x^i/i! bases");

    // antipode: product-reversal and the convolution identity
    for a in 0..4u32 {
        for b in 0..4u32 {
            let pa = PolyClass::x_power(false, a);
            let pb = PolyClass::x_power(false, b);
            // classes commute, so reversal reduces to multiplicativity
            let prod = PolyClass::x_power(false, a + b);
            let lhs = antipode(&prod);
            let rhs_c = rf_constant(&antipode(&pb).coeff(b)).unwrap()
                * rf_constant(&antipode(&pa).coeff(a)).unwrap();
            if rf_constant(&lhs.coeff(a + b)).unwrap() != rhs_c {
                return CheckData::fail("antipode not antimultiplicative");
            }
        }
    }
    for n in 1..=5u32 {
        // Σ_k C(n,k)(−1)^k x^k·x^{n−k} = 0 for n ≥ 1
        let mut total = Q::zero();
        let mut binom = Q::one();
        for k in 0..=n {
            let sign = if k % 2 == 0 { Q::one() } else { -Q::one() };
            total += sign * binom.clone();
            binom = binom * q_int((n - k) as i64) / q_int(k as i64 + 1);
        }
        if !total.is_zero() {
            return CheckData::fail(format!("antipode convolution identity fails at degree {n}"));
        }
    }
    data = data.line("class antipode x ↦ −x: antimultiplicative, convolution identity holds");

    // classes of the distinguished modules and of all probes
    for n in 0..=n_max {
        let id = crate::algebra::AlgebraId::nil(n);
        let p = Bimodule::free_module(&id);
        let l = Bimodule::simple_module(&id);
        let fact: i64 = (1..=n as i64).product::<i64>().max(1);
        for graded in [false, true] {
            let cp = class_of(&p, graded).unwrap();
            if cp != PolyClass::x_power(graded, n as u32) {
                return CheckData::fail(format!("free module class at block {n} is not x^{n}"));
            }
            let cl = class_of(&l, graded).unwrap();
            let expect = if graded {
                PolyClass::monomial(
                    true,
                    n as u32,
                    RatFunc::new(PolyQ::one(), PolyQ::q_factorial(n)),
                )
            } else {
                PolyClass::monomial(
                    false,
                    n as u32,
                    RatFunc::from_rational(Q::new(1.into(), fact.into())),
                )
            };
            if cl != expect {
                return CheckData::fail(format!("simple module class at block {n} mismatch"));
            }
        }
        data = data.line(format!("block {n}: [free] = x^{n}, [simple] = x^{n}/{n}-factorial"));

        for (name, probe) in probe_modules(n, seed) {
            for graded in [false, true] {
                let c = class_of(&probe, graded).unwrap();
                // induction multiplies the class by x
                let fx = class_of(&apply_functor(Functor::FX, &probe), graded).unwrap();
                if fx != weyl_apply(&WeylElement::x(graded), &c) {
                    return CheckData::fail(format!(
                        "[induce {name}] ≠ x·[{name}], graded={graded}"
                    ));
                }
                // restriction applies ∂
                if n >= 1 {
                    let fd = class_of(&apply_functor(Functor::FD, &probe), graded).unwrap();
                    if fd != weyl_apply(&WeylElement::d(graded), &c) {
                        return CheckData::fail(format!(
                            "[restrict {name}] ≠ ∂·[{name}], graded={graded}"
                        ));
                    }
                }
                // graded collapse at q = 1
                if graded {
                    if c.at_q_one() != class_of(&probe, false).unwrap() {
                        return CheckData::fail(format!("q = 1 collapse fails on {name}"));
                    }
                }
            }
            // hom dimension from the form
            let cu = class_of(&probe, false).unwrap();
            let xp = PolyClass::x_power(false, n as u32);
            let free = Bimodule::free_module(&crate::algebra::AlgebraId::nil(n));
            let hom_dim = hom_space(&free, &probe).len();
            if q_int(hom_dim as i64) != bilinear_form(&xp, &cu) {
                return CheckData::fail(format!("hom dimension vs form mismatch on {name}"));
            }
            // the integral functor integrates the class
            let fi = class_of(&apply_functor(Functor::FI, &probe), false).unwrap();
            if fi != integral_class(&cu) {
                return CheckData::fail(format!("[integral of {name}] ≠ ∫[{name}]"));
            }
        }
        data = data.line(format!(
            "block {n}: functor classes, hom-form pairing, and integral match on all probes"
        ));

        // graded Weyl relation at class level: [F_D F_X N] = q[F_X F_D N] + [N]
        if n >= 1 {
            for (name, probe) in probe_modules(n, seed) {
                let c = class_of(&probe, true).unwrap();
                let lhs = class_of(
                    &apply_functor(Functor::FD, &apply_functor(Functor::FX, &probe)),
                    true,
                )
                .unwrap();
                let xd = class_of(
                    &apply_functor(Functor::FX, &apply_functor(Functor::FD, &probe)),
                    true,
                )
                .unwrap();
                if lhs != weyl_apply(&WeylElement::x(true), &weyl_apply(&WeylElement::d(true), &c))
                    .scale(&RatFunc::q_pow(1))
                    .add(&c)
                    || lhs != xd.scale(&RatFunc::q_pow(1)).add(&c)
                {
                    return CheckData::fail(format!("graded class relation fails on {name}"));
                }
            }
            data = data.line(format!("block {n}: graded classes satisfy ∂x = qx∂ + 1"));
        }
    }
    data
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraId;
    use crate::bimodule::{quotient_bimodule, radical_sub};

    #[test]
    fn normal_form_examples() {
        let dx = WeylElement::d(false).mul(&WeylElement::x(false));
        assert_eq!(
            dx,
            WeylElement::monomial(false, 1, 1, RatFunc::one())
                .add(&WeylElement::one(false))
        );
        let dxq = WeylElement::d(true).mul(&WeylElement::x(true));
        assert_eq!(
            dxq,
            WeylElement::monomial(true, 1, 1, RatFunc::q_pow(1)).add(&WeylElement::one(true))
        );
    }

    #[test]
    fn action_examples() {
        let x3 = weyl_apply(&WeylElement::x(false), &PolyClass::x_power(false, 2));
        assert_eq!(x3, PolyClass::x_power(false, 3));
        let d3 = weyl_apply(&WeylElement::d(false), &PolyClass::x_power(false, 3));
        assert_eq!(d3, PolyClass::monomial(false, 2, RatFunc::from_int(3)));
        let d3q = weyl_apply(&WeylElement::d(true), &PolyClass::x_power(true, 3));
        assert_eq!(
            d3q,
            PolyClass::monomial(true, 2, RatFunc::from_poly(PolyQ::q_integer(3)))
        );
    }

    #[test]
    fn tau_examples() {
        assert_eq!(WeylElement::x(false).tau(), WeylElement::d(false));
        let xd = WeylElement::x(false).mul(&WeylElement::d(false));
        assert_eq!(xd.tau(), xd);
    }

    #[test]
    fn form_examples() {
        let x2 = PolyClass::x_power(false, 2);
        let x3 = PolyClass::x_power(false, 3);
        assert_eq!(bilinear_form(&x2, &x2), q_int(2));
        let x1 = PolyClass::x_power(false, 1);
        assert_eq!(bilinear_form(&x1, &x2), q_int(0));
        assert_eq!(bilinear_form(&x3, &x3), q_int(6));
    }

    #[test]
    fn class_examples() {
        let p3 = Bimodule::free_module(&AlgebraId::nil(3));
        assert_eq!(class_of(&p3, false).unwrap(), PolyClass::x_power(false, 3));
        let l3 = Bimodule::simple_module(&AlgebraId::nil(3));
        assert_eq!(
            class_of(&l3, false).unwrap(),
            PolyClass::monomial(false, 3, RatFunc::from_rational(Q::new(1.into(), 6.into())))
        );
        let p2 = Bimodule::free_module(&AlgebraId::nil(2));
        assert_eq!(class_of(&p2, true).unwrap(), PolyClass::x_power(true, 2));
    }

    #[test]
    fn class_additive_on_radical_filtration() {
        let p = Bimodule::free_module(&AlgebraId::nil(3));
        let (rad, incl) = radical_sub(&p);
        let (quot, _) = quotient_bimodule(&p, &incl);
        for graded in [false, true] {
            let total = class_of(&p, graded).unwrap();
            let sum = class_of(&rad, graded)
                .unwrap()
                .add(&class_of(&quot, graded).unwrap());
            assert_eq!(total, sum);
        }
    }

    #[test]
    fn rendering() {
        let l3 = class_of(&Bimodule::simple_module(&AlgebraId::nil(3)), false).unwrap();
        assert_eq!(l3.to_string(), "1/6*x^3");
        let c = PolyClass::monomial(
            true,
            2,
            RatFunc::from_poly(PolyQ::from_coeffs(vec![Q::one(), Q::one()])),
        );
        assert_eq!(c.to_string(), "(1 + q)*x^2");
    }

    #[test]
    fn delta_power_has_q_binomials() {
        // the (k, n−k) component of Δ(x^n) is q^? · qbinom(n,k)
        let d = delta_class(&PolyClass::x_power(true, 3));
        // component (2,1): q^1 · [3]!/([2]![1]!) = q(1+q+q^2)
        let got = d.component(2, 1);
        let expect = RatFunc::q_pow(1).mul(&RatFunc::from_poly(PolyQ::q_integer(3)));
        assert_eq!(got, expect);
        // classical: plain binomials
        let d = delta_class(&PolyClass::x_power(false, 4));
        assert_eq!(d.component(2, 2), RatFunc::from_int(6));
    }

    #[test]
    fn full_verification_small() {
        let d = verify_decategorification(3, 0);
        assert!(d.pass, "{:?}", d.witness);
    }
}
