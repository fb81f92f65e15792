//! Exact multivariate polynomials over a shared symbol registry, with
//! Gaussian-rational coefficients and the graded-lexicographic monomial
//! order (total degree first, then registry order). The term map never
//! stores zero coefficients, so equality is map equality.

use crate::error::{EngineError, Result};
use crate::registry::{Registry, Symbol};
use crate::scalar::ExactScalar;
use num::complex::Complex64;
use num::{BigInt, BigRational, One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector of the registry's length, ordered graded-lex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise division; `None` if any exponent would go negative.
    fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {
                // Same total degree: larger exponent on an earlier symbol wins.
                for (a, b) in self.0.iter().zip(&other.0) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A multivariate polynomial: monomial -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    registry: Registry,
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl MultiPoly {
    pub fn zero(reg: &Registry) -> Self {
        MultiPoly {
            registry: reg.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(reg: &Registry, c: ExactScalar) -> Self {
        let mut p = MultiPoly::zero(reg);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(reg.len()), c);
        }
        p
    }

    pub fn one(reg: &Registry) -> Self {
        MultiPoly::constant(reg, ExactScalar::one())
    }

    pub fn int(reg: &Registry, n: i64) -> Self {
        MultiPoly::constant(reg, ExactScalar::from_int(n))
    }

    pub fn ratio(reg: &Registry, num: i64, den: i64) -> Self {
        MultiPoly::constant(reg, ExactScalar::from_ratio(num, den))
    }

    pub fn symbol(reg: &Registry, s: Symbol) -> Self {
        let mut mono = Monomial::one(reg.len());
        mono.0[s.0] = 1;
        let mut p = MultiPoly::zero(reg);
        p.terms.insert(mono, ExactScalar::one());
        p
    }

    pub fn var(reg: &Registry, name: &str) -> Self {
        MultiPoly::symbol(reg, reg.sym(name))
    }

    pub fn registry(&self) -> &Registry {
        &self.registry
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_value(&self) -> Option<&ExactScalar> {
        if self.is_zero() {
            None
        } else if self.is_constant() {
            self.terms.values().next()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, mono: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn check_registry(&self, other: &MultiPoly) -> Result<()> {
        if self.registry.same(&other.registry) {
            Ok(())
        } else {
            Err(EngineError::RegistryMismatch(format!(
                "{} vs {}",
                self.registry, other.registry
            )))
        }
    }

    /// Leading term under grlex (largest monomial).
    pub fn leading(&self) -> Option<(&Monomial, &ExactScalar)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u64 {
        self.leading().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, s: Symbol) -> u32 {
        self.terms.keys().map(|m| m.0[s.0]).max().unwrap_or(0)
    }

    pub fn contains_symbol(&self, s: Symbol) -> bool {
        self.terms.keys().any(|m| m.0[s.0] > 0)
    }

    pub fn scale(&self, c: &ExactScalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.registry);
        }
        let mut out = MultiPoly::zero(&self.registry);
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.registry);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute a polynomial for a symbol.
    pub fn substitute(&self, s: Symbol, value: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.registry);
        for (m, c) in &self.terms {
            let e = m.0[s.0];
            let mut rest = m.clone();
            rest.0[s.0] = 0;
            let mut term = MultiPoly::zero(&self.registry);
            term.terms.insert(rest, c.clone());
            if e > 0 {
                term = &term * &value.pow(e);
            }
            out = &out + &term;
        }
        out
    }

    pub fn substitute_scalar(&self, s: Symbol, value: &ExactScalar) -> MultiPoly {
        self.substitute(s, &MultiPoly::constant(&self.registry, value.clone()))
    }

    /// Substitute `sym -> sym + c` for a rational shift `c`.
    pub fn shift_symbol(&self, s: Symbol, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return self.clone();
        }
        let shifted = &MultiPoly::symbol(&self.registry, s)
            + &MultiPoly::constant(
                &self.registry,
                ExactScalar::new(c.clone(), BigRational::zero()),
            );
        self.substitute(s, &shifted)
    }

    /// Weighted partial derivative d/d sym.
    pub fn derivative(&self, s: Symbol) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.registry);
        for (m, c) in &self.terms {
            let e = m.0[s.0];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[s.0] = e - 1;
            out.add_term(m2, c * &ExactScalar::from_int(e as i64));
        }
        out
    }

    /// Lowest exponent of `s` over all terms (the `s`-adic order); `None`
    /// for the zero polynomial.
    pub fn min_exponent(&self, s: Symbol) -> Option<u32> {
        self.terms.keys().map(|m| m.0[s.0]).min()
    }

    /// Divide by `s^n` assuming every term has exponent >= n in `s`.
    pub fn div_sym_pow(&self, s: Symbol, n: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.registry);
        for (m, c) in &self.terms {
            assert!(m.0[s.0] >= n, "div_sym_pow underflow");
            let mut m2 = m.clone();
            m2.0[s.0] -= n;
            out.terms.insert(m2, c.clone());
        }
        out
    }

    /// Exact multivariate division: `Some(q)` with `self == q * d`, else `None`.
    pub fn try_div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(&self.registry);
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.try_div(&dm)?;
            let qc = &rc / &dc;
            let mut qterm = MultiPoly::zero(&self.registry);
            qterm.terms.insert(qm, qc);
            rem = &rem - &(&qterm * d);
            quot = &quot + &qterm;
        }
        Some(quot)
    }

    /// Replace `from^2` by `to` in every monomial until `from` has exponent
    /// at most one (the sqrt(pi)^2 -> pi rewrite).
    pub fn rewrite_square(&self, from: Symbol, to: Symbol) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.registry);
        for (m, c) in &self.terms {
            let e = m.0[from.0];
            let mut m2 = m.clone();
            m2.0[from.0] = e % 2;
            m2.0[to.0] += e / 2;
            out.add_term(m2, c.clone());
        }
        out
    }

    /// Numeric evaluation; `vals[i]` is the value assigned to symbol `i`.
    pub fn eval_f64(&self, vals: &[Complex64]) -> Complex64 {
        assert_eq!(vals.len(), self.registry.len());
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let (re, im) = c.to_f64_pair();
            let mut t = Complex64::new(re, im);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= vals[i].powi(e as i32);
                }
            }
            acc += t;
        }
        acc
    }

    /// Evaluate at rational points (exact).
    pub fn eval_exact(&self, vals: &[ExactScalar]) -> ExactScalar {
        assert_eq!(vals.len(), self.registry.len());
        let mut acc = ExactScalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= &vals[i].pow(e);
                }
            }
            acc += &t;
        }
        acc
    }

    fn format_term(&self, f: &mut fmt::Formatter<'_>, m: &Monomial, c: &ExactScalar) -> fmt::Result {
        let mono = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let name = self.registry.name(Symbol(i));
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*");
        if mono.is_empty() {
            return write_coeff(f, c, true);
        }
        if c.is_one() {
            return write!(f, "{mono}");
        }
        if (-c).is_one() {
            return write!(f, "-{mono}");
        }
        write_coeff(f, c, false)?;
        write!(f, "*{mono}")
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &ExactScalar, standalone: bool) -> fmt::Result {
    let needs_parens = !standalone && !c.re.is_zero() && !c.im.is_zero();
    if needs_parens {
        write!(f, "({c})")
    } else {
        write!(f, "{c}")
    }
}

/// Deterministic display: terms in descending grlex order, joined by ` + `.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            self.format_term(f, m, c)?;
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_registry(rhs).expect("registry mismatch in add");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_registry(rhs).expect("registry mismatch in sub");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_registry(rhs).expect("registry mismatch in mul");
        let mut out = MultiPoly::zero(&self.registry);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.registry);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c);
        }
        out
    }
}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        // Structural order for use as map keys; unrelated to ring structure.
        let a: Vec<_> = self.terms.iter().collect();
        let b: Vec<_> = other.terms.iter().collect();
        a.cmp(&b)
    }
}

/// Convenience: `c * big_rational` as a scalar polynomial.
pub fn rat_const(reg: &Registry, r: BigRational) -> MultiPoly {
    MultiPoly::constant(reg, ExactScalar::new(r, BigRational::zero()))
}

pub fn big_ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
