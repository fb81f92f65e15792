//! Rational functions as reduced pairs of polynomials. No multivariate gcd
//! is ever computed: the pair is normalized by making the denominator monic
//! under the fixed monomial order, and equality is tested by
//! cross-multiplication.

use crate::error::{EngineError, Result};
use crate::poly::MultiPoly;
use crate::registry::{Registry, Symbol};
use crate::scalar::ExactScalar;
use num::complex::Complex64;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Debug, Eq)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Build `num/den`, normalizing the denominator to be monic. Panics on a
    /// zero denominator (a denominator is always an explicit nonzero input
    /// in this engine).
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        num.check_registry(&den).expect("registry mismatch");
        let mut rf = RatFunc { num, den };
        rf.normalize();
        rf
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        let den = MultiPoly::one(num.registry());
        RatFunc { num, den }
    }

    pub fn zero(reg: &Registry) -> Self {
        RatFunc::from_poly(MultiPoly::zero(reg))
    }

    pub fn one(reg: &Registry) -> Self {
        RatFunc::from_poly(MultiPoly::one(reg))
    }

    pub fn int(reg: &Registry, n: i64) -> Self {
        RatFunc::from_poly(MultiPoly::int(reg, n))
    }

    pub fn ratio(reg: &Registry, num: i64, den: i64) -> Self {
        RatFunc::from_poly(MultiPoly::ratio(reg, num, den))
    }

    pub fn var(reg: &Registry, name: &str) -> Self {
        RatFunc::from_poly(MultiPoly::var(reg, name))
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one(self.num.registry());
            return;
        }
        // If numerator and denominator share a pure monomial factor, cancel it.
        if let Some(q) = cancel_monomial(&self.num, &self.den) {
            self.num = q.0;
            self.den = q.1;
        }
        let lc = self.den.leading().map(|(_, c)| c.clone()).unwrap();
        if !lc.is_one() {
            let inv = lc.inv();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn registry(&self) -> &Registry {
        self.num.registry()
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_constant()
    }

    /// The numerator if the denominator is 1.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        if self.den.constant_value().map(|c| c.is_one()) == Some(true) {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn check_registry(&self, other: &RatFunc) -> Result<()> {
        self.num.check_registry(&other.num)
    }

    /// Cross-multiplication equality: `a == b` iff `a.num*b.den - b.num*a.den = 0`.
    pub fn eq_value(&self, other: &RatFunc) -> bool {
        if !self.registry().same(other.registry()) {
            return false;
        }
        (&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero()
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(EngineError::DivisionByZero("1/0 rational function".into()));
        }
        Ok(RatFunc::new(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &ExactScalar) -> RatFunc {
        RatFunc::new(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        let mut acc = RatFunc::one(self.registry());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn substitute(&self, s: Symbol, value: &MultiPoly) -> RatFunc {
        RatFunc::new(
            self.num.substitute(s, value),
            self.den.substitute(s, value),
        )
    }

    pub fn substitute_scalar(&self, s: Symbol, value: &ExactScalar) -> RatFunc {
        RatFunc::new(
            self.num.substitute_scalar(s, value),
            self.den.substitute_scalar(s, value),
        )
    }

    pub fn shift_symbol(&self, s: Symbol, c: &num::BigRational) -> RatFunc {
        RatFunc::new(self.num.shift_symbol(s, c), self.den.shift_symbol(s, c))
    }

    pub fn contains_symbol(&self, s: Symbol) -> bool {
        self.num.contains_symbol(s) || self.den.contains_symbol(s)
    }

    /// Order of vanishing in the symbol `s` at `s = 0`: the `s`-adic order
    /// of the numerator minus that of the denominator. `None` for zero.
    pub fn s_order(&self, s: Symbol) -> Option<i64> {
        let n = self.num.min_exponent(s)? as i64;
        let d = self.den.min_exponent(s).unwrap_or(0) as i64;
        Some(n - d)
    }

    /// Split off the `s`-power: returns `(order, unit)` with
    /// `self = s^order * unit` and `unit` finite nonzero at `s = 0`
    /// provided its denominator does not vanish there.
    pub fn extract_s_power(&self, s: Symbol) -> Option<(i64, RatFunc)> {
        let n_ord = self.num.min_exponent(s)?;
        let d_ord = self.den.min_exponent(s).unwrap_or(0);
        let num = self.num.div_sym_pow(s, n_ord);
        let den = self.den.div_sym_pow(s, d_ord);
        Some((n_ord as i64 - d_ord as i64, RatFunc::new(num, den)))
    }

    pub fn eval_f64(&self, vals: &[Complex64]) -> Complex64 {
        self.num.eval_f64(vals) / self.den.eval_f64(vals)
    }

    pub fn eval_exact(&self, vals: &[ExactScalar]) -> Result<ExactScalar> {
        let d = self.den.eval_exact(vals);
        if d.is_zero() {
            return Err(EngineError::DivisionByZero(
                "denominator vanishes at evaluation point".into(),
            ));
        }
        Ok(&self.num.eval_exact(vals) / &d)
    }
}

/// Cancel the largest common pure-monomial factor (with rational content
/// untouched); cheap and keeps the Gamma-limit bookkeeping tidy.
fn cancel_monomial(num: &MultiPoly, den: &MultiPoly) -> Option<(MultiPoly, MultiPoly)> {
    let reg = num.registry().clone();
    let mut common = vec![u32::MAX; reg.len()];
    for p in [num, den] {
        for (m, _) in p.terms() {
            for (i, &e) in m.0.iter().enumerate() {
                common[i] = common[i].min(e);
            }
        }
    }
    if common.iter().all(|&e| e == 0) {
        return None;
    }
    let mut n2 = num.clone();
    let mut d2 = den.clone();
    for (i, &e) in common.iter().enumerate() {
        if e > 0 && e != u32::MAX {
            n2 = n2.div_sym_pow(Symbol(i), e);
            d2 = d2.div_sym_pow(Symbol(i), e);
        }
    }
    Some((n2, d2))
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.eq_value(other)
    }
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num, &self.den).cmp(&(&other.num, &other.den))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() && self.den.constant_value().map(|c| c.is_one()) == Some(true) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn reg() -> Registry {
        Registry::standard()
    }

    fn random_poly(reg: &Registry, rng: &mut StdRng, syms: &[&str], deg: u32) -> MultiPoly {
        let mut p = MultiPoly::zero(reg);
        for _ in 0..5 {
            let mut term = MultiPoly::constant(
                reg,
                ExactScalar::from_ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3)),
            );
            for name in syms {
                let e = rng.gen_range(0..=deg);
                for _ in 0..e {
                    term = &term * &MultiPoly::var(reg, name);
                }
            }
            p = &p + &term;
        }
        p
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let reg = reg();
        let u = MultiPoly::var(&reg, "u");
        let v = MultiPoly::var(&reg, "v");
        // (u^2-v^2)/(u+v) == (u-v)/1
        let a = RatFunc::new(&(&u * &u) - &(&v * &v), &u + &v);
        let b = RatFunc::from_poly(&u - &v);
        assert!(a.eq_value(&b));
        assert_eq!(a, b);
    }

    #[test]
    fn arithmetic_matches_pointwise_evaluation() {
        let reg = reg();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..5 {
            let p1 = random_poly(&reg, &mut rng, &["u", "v"], 2);
            let mut d1 = random_poly(&reg, &mut rng, &["u"], 1);
            if d1.is_zero() {
                d1 = MultiPoly::one(&reg);
            }
            let a = RatFunc::new(p1, d1);
            let b = RatFunc::new(
                random_poly(&reg, &mut rng, &["v"], 2),
                MultiPoly::int(&reg, 3),
            );
            let sum = &a + &b;
            let prod = &a * &b;
            let mut checked = 0;
            let mut attempt = 0;
            while checked < 5 && attempt < 100 {
                attempt += 1;
                let mut vals = vec![ExactScalar::zero(); reg.len()];
                for v in vals.iter_mut() {
                    *v = ExactScalar::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
                }
                let (Ok(av), Ok(bv)) = (a.eval_exact(&vals), b.eval_exact(&vals)) else {
                    continue;
                };
                assert_eq!(sum.eval_exact(&vals).unwrap(), &av + &bv);
                assert_eq!(prod.eval_exact(&vals).unwrap(), &av * &bv);
                checked += 1;
            }
            assert!(checked >= 5, "could not find enough evaluation points");
        }
    }

    #[test]
    fn denominator_is_monic() {
        let reg = reg();
        let u = MultiPoly::var(&reg, "u");
        let two_u = u.scale(&ExactScalar::from_int(2));
        let r = RatFunc::new(MultiPoly::int(&reg, 4), two_u);
        assert_eq!(r.den().leading().unwrap().1, &ExactScalar::one());
        assert_eq!(r.to_string(), "(2)/(u)");
    }

    #[test]
    fn equivalence_relation_sample() {
        let reg = reg();
        let u = MultiPoly::var(&reg, "u");
        let one = MultiPoly::one(&reg);
        // a = u/(u+1), b = u(u+1)/(u+1)^2, c = equal by construction
        let a = RatFunc::new(u.clone(), &u + &one);
        let b = RatFunc::new(&u * &(&u + &one), (&u + &one).pow(2));
        let c = RatFunc::new(u.scale(&ExactScalar::from_int(3)), (&u + &one).scale(&ExactScalar::from_int(3)));
        assert!(a.eq_value(&b) && b.eq_value(&c) && a.eq_value(&c));
    }
}
