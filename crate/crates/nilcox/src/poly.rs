//! Polynomial utilities: dense univariate polynomials over Q, reduced
//! rational functions in `q` (Laurent polynomials embed via `q` in the
//! denominator), and sparse multivariate polynomials for the divided
//! difference representation.

use crate::linalg::{q_int, Q};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Dense univariate polynomial over Q; coefficient of degree i at index i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyQ {
    coeffs: Vec<Q>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: vec![] }
    }

    pub fn one() -> Self {
        PolyQ::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        if c.is_zero() {
            PolyQ::zero()
        } else {
            PolyQ { coeffs: vec![c] }
        }
    }

    pub fn from_coeffs(coeffs: Vec<Q>) -> Self {
        let mut p = PolyQ { coeffs };
        p.trim();
        p
    }

    /// q^k
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Q::zero(); k + 1];
        coeffs[k] = Q::one();
        PolyQ { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        PolyQ::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        PolyQ::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &PolyQ) -> PolyQ {
        if self.is_zero() || other.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyQ::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &Q) -> PolyQ {
        PolyQ::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division; panics on zero divisor.
    pub fn div_rem(&self, divisor: &PolyQ) -> (PolyQ, PolyQ) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.clone();
        let mut quo = PolyQ::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = &rem.coeffs[rd] / &lead;
            let shift = rd - dd;
            let mut term = vec![Q::zero(); shift + 1];
            term[shift] = c;
            let term = PolyQ::from_coeffs(term);
            quo = quo.add(&term);
            rem = rem.sub(&term.mul(divisor));
        }
        (quo, rem)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.coeffs[a.degree().unwrap()].clone();
            a.scale(&lead.recip())
        }
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// The q-integer [n] = 1 + q + ... + q^{n-1}.
    pub fn q_integer(n: usize) -> PolyQ {
        PolyQ::from_coeffs(vec![Q::one(); n])
    }

    /// The q-factorial [n]! = [1][2]...[n].
    pub fn q_factorial(n: usize) -> PolyQ {
        let mut p = PolyQ::one();
        for i in 1..=n {
            p = p.mul(&PolyQ::q_integer(i));
        }
        p
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "q")?,
                1 => write!(f, "{c}*q")?,
                _ if c.is_one() => write!(f, "q^{i}")?,
                _ => write!(f, "{c}*q^{i}")?,
            }
        }
        Ok(())
    }
}

/// Reduced rational function in `q` over Q, with monic denominator.
/// Laurent polynomials embed as `num / q^k`.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: PolyQ,
    den: PolyQ,
}

impl RatFunc {
    pub fn new(num: PolyQ, den: PolyQ) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut rf = RatFunc { num, den };
        rf.reduce();
        rf
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = PolyQ::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() != Some(0) {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        let lead = self.den.coeffs[self.den.degree().unwrap()].clone();
        if !lead.is_one() {
            let inv = lead.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: PolyQ::zero(),
            den: PolyQ::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: PolyQ::one(),
            den: PolyQ::one(),
        }
    }

    pub fn from_poly(p: PolyQ) -> Self {
        RatFunc {
            num: p,
            den: PolyQ::one(),
        }
    }

    pub fn from_rational(c: Q) -> Self {
        RatFunc::from_poly(PolyQ::constant(c))
    }

    pub fn from_int(v: i64) -> Self {
        RatFunc::from_rational(q_int(v))
    }

    /// q^i for any integer i (negative powers go into the denominator).
    pub fn q_pow(i: i64) -> Self {
        if i >= 0 {
            RatFunc::from_poly(PolyQ::monomial(i as usize))
        } else {
            RatFunc {
                num: PolyQ::one(),
                den: PolyQ::monomial((-i) as usize),
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.scale(&-Q::one()),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn recip(&self) -> RatFunc {
        assert!(!self.is_zero(), "reciprocal of zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Evaluation at q = value (None if the denominator vanishes there).
    pub fn eval(&self, value: &Q) -> Option<Q> {
        let d = self.den.eval(value);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(value) / d)
        }
    }

    pub fn num(&self) -> &PolyQ {
        &self.num
    }

    pub fn den(&self) -> &PolyQ {
        &self.den
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        // both are reduced with monic denominators
        self.num == other.num && self.den == other.den
    }
}
impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == PolyQ::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Sparse multivariate polynomial in `x_1..x_n` over Q.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MVPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl MVPoly {
    pub fn zero(nvars: usize) -> Self {
        MVPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = MVPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// x_i, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars);
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        MVPoly::monomial(exps, Q::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Q) -> Self {
        let nvars = exps.len();
        let mut p = MVPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, other: &MVPoly) -> MVPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(Q::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(e);
            }
        }
        out
    }

    pub fn sub(&self, other: &MVPoly) -> MVPoly {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> MVPoly {
        if s.is_zero() {
            return MVPoly::zero(self.nvars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= s;
        }
        out
    }

    pub fn mul(&self, other: &MVPoly) -> MVPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MVPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(e).or_insert_with(Q::zero);
                *entry += c1 * c2;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    /// Swap of variables x_i and x_{i+1}, 1-based i.
    pub fn swap_vars(&self, i: usize) -> MVPoly {
        assert!(i >= 1 && i < self.nvars);
        let mut out = MVPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.swap(i - 1, i);
            out.terms.insert(e2, c.clone());
        }
        out
    }

    /// Exact division by (x_{i+1} - x_i); panics if the division is not
    /// exact. Synthetic division in the variable x_{i+1}.
    pub fn div_exact_diff(&self, i: usize) -> MVPoly {
        assert!(i >= 1 && i < self.nvars);
        // group terms by the exponent of v = x_{i+1}; coefficients are
        // polynomials in the remaining variables (including u = x_i)
        let mut by_v: BTreeMap<u32, MVPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let vexp = e[i];
            let mut e0 = e.clone();
            e0[i] = 0;
            let entry = by_v.entry(vexp).or_insert_with(|| MVPoly::zero(self.nvars));
            *entry = entry.add(&MVPoly::monomial(e0, c.clone()));
        }
        let max_v = by_v.keys().max().copied().unwrap_or(0);
        if self.is_zero() {
            return MVPoly::zero(self.nvars);
        }
        let u = MVPoly::var(self.nvars, i);
        let coeff = |j: u32| by_v.get(&j).cloned().unwrap_or_else(|| MVPoly::zero(self.nvars));
        // dividing sum_j g_j v^j by (v - u): h_{j-1} = g_j + u * h_j
        let mut quotient = MVPoly::zero(self.nvars);
        let mut carry = MVPoly::zero(self.nvars); // h_j for current j
        for j in (1..=max_v).rev() {
            carry = coeff(j).add(&u.mul(&carry));
            // carry is h_{j-1}, attach v^{j-1}
            let mut vterm = vec![0; self.nvars];
            vterm[i] = j - 1;
            quotient = quotient.add(&carry.mul(&MVPoly::monomial(vterm, Q::one())));
        }
        let remainder = coeff(0).add(&u.mul(&carry));
        assert!(remainder.is_zero(), "division by (x_{{i+1}} - x_i) not exact");
        quotient
    }
}

impl fmt::Display for MVPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (v, &p) in e.iter().enumerate() {
                if p == 1 {
                    write!(f, "*x{}", v + 1)?;
                } else if p > 1 {
                    write!(f, "*x{}^{}", v + 1, p)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_factorials() {
        assert_eq!(PolyQ::q_factorial(0), PolyQ::one());
        assert_eq!(PolyQ::q_factorial(2), PolyQ::q_integer(2));
        // [3]! = (1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3
        let expect = PolyQ::from_coeffs(vec![q_int(1), q_int(2), q_int(2), q_int(1)]);
        assert_eq!(PolyQ::q_factorial(3), expect);
    }

    #[test]
    fn ratfunc_reduction_and_equality() {
        // (q^2 - 1)/(q - 1) = q + 1
        let num = PolyQ::from_coeffs(vec![q_int(-1), q_int(0), q_int(1)]);
        let den = PolyQ::from_coeffs(vec![q_int(-1), q_int(1)]);
        let rf = RatFunc::new(num, den);
        assert_eq!(rf, RatFunc::from_poly(PolyQ::q_integer(2)));
        assert_eq!(rf.eval(&q_int(1)).unwrap(), q_int(2));
    }

    #[test]
    fn ratfunc_laurent() {
        let qinv = RatFunc::q_pow(-1);
        assert_eq!(qinv.mul(&RatFunc::q_pow(1)), RatFunc::one());
        let sum = qinv.add(&RatFunc::one());
        assert_eq!(sum.eval(&q_int(2)).unwrap(), Q::new(3.into(), 2.into()));
    }

    #[test]
    fn mvpoly_divided_difference_division() {
        // (x2 - x1) / (x2 - x1) = 1
        let x1 = MVPoly::var(2, 1);
        let x2 = MVPoly::var(2, 2);
        let diff = x2.sub(&x1);
        assert_eq!(diff.div_exact_diff(1), MVPoly::constant(2, Q::one()));

        // (x2^2 - x1^2) / (x2 - x1) = x1 + x2
        let sq = x2.mul(&x2).sub(&x1.mul(&x1));
        assert_eq!(sq.div_exact_diff(1), x1.add(&x2));
    }
}
