//! Products of Gamma factors with affine arguments `a*s + b*k + c`,
//! a rational-function prefactor, and affine exponent slots for powers of
//! 2, pi and tau (= det T). This is the closed-form value domain of the
//! cone integrals: everything the Sturm pipeline produces lives here.
//!
//! Normalization shifts every Gamma argument so that its constant part
//! lies in [0, 1), absorbing the shift polynomials into the prefactor via
//! Gamma(x+1) = x*Gamma(x). Limits at s -> 0 are computed by comparing the
//! s-adic zero order of the prefactor with the number of Gamma factors
//! whose argument vanishes at s = 0.

use crate::affine::AffineSK;
use crate::error::{EngineError, Result};
use crate::poly::MultiPoly;
use crate::ratfunc::RatFunc;
use crate::registry::{std_syms, Registry};
use crate::scalar::ExactScalar;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaProduct {
    /// Rational prefactor in (s, k, pi, sqrtpi, tau, aT).
    pub coeff: RatFunc,
    /// Exponent of 2.
    pub pow2: AffineSK,
    /// Exponent of pi.
    pub pow_pi: AffineSK,
    /// Exponent of tau = det T.
    pub pow_tau: AffineSK,
    /// Multiset of Gamma-factor arguments, kept sorted.
    pub gammas: Vec<AffineSK>,
}

/// Result of the s -> 0 limit of a [`GammaProduct`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GammaLimit {
    /// Finite value, exact, in the remaining symbols (pi, sqrtpi, tau, aT).
    Value(RatFunc),
    /// Finite but still carrying Gamma factors of a symbolic k.
    Symbolic(GammaProduct),
    /// Divergent: pole of the stated order (i64::MAX marks a constant
    /// Gamma(-n) factor that no regularization removes).
    Pole { order: i64 },
    /// A split over integer values of k: concrete small cases plus a tail.
    CaseSplit(Vec<(KRange, GammaLimit)>),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KRange {
    At(i64),
    AtLeast(i64),
}

impl GammaProduct {
    pub fn one(reg: &Registry) -> Self {
        GammaProduct {
            coeff: RatFunc::one(reg),
            pow2: AffineSK::zero(),
            pow_pi: AffineSK::zero(),
            pow_tau: AffineSK::zero(),
            gammas: Vec::new(),
        }
    }

    pub fn from_coeff(coeff: RatFunc) -> Self {
        let mut g = GammaProduct::one(coeff.registry());
        g.coeff = coeff;
        g
    }

    pub fn gamma(reg: &Registry, arg: AffineSK) -> Self {
        let mut g = GammaProduct::one(reg);
        g.gammas.push(arg);
        g
    }

    pub fn registry(&self) -> &Registry {
        self.coeff.registry()
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, other: &GammaProduct) -> GammaProduct {
        let mut out = GammaProduct {
            coeff: &self.coeff * &other.coeff,
            pow2: &self.pow2 + &other.pow2,
            pow_pi: &self.pow_pi + &other.pow_pi,
            pow_tau: &self.pow_tau + &other.pow_tau,
            gammas: self.gammas.clone(),
        };
        out.gammas.extend(other.gammas.iter().cloned());
        out.gammas.sort();
        out
    }

    pub fn scale(&self, c: &RatFunc) -> GammaProduct {
        let mut out = self.clone();
        out.coeff = &out.coeff * c;
        out
    }

    pub fn add_gamma(&mut self, arg: AffineSK) {
        self.gammas.push(arg);
        self.gammas.sort();
    }

    /// Shift every Gamma argument into the canonical window: constant part
    /// in [0, 1), with the shift polynomials absorbed by the prefactor.
    /// Also rewrites sqrtpi^2 -> pi in the prefactor. Value-preserving as a
    /// meromorphic function of (s, k). Constant non-positive-integer
    /// arguments (identically infinite factors) are left untouched.
    pub fn normalize(&self) -> GammaProduct {
        let reg = self.registry().clone();
        let mut coeff = self.coeff.clone();
        let mut gammas = Vec::with_capacity(self.gammas.len());
        for g in &self.gammas {
            let mut arg = g.clone();
            if arg.is_constant() && is_nonpositive_int(&arg.c) {
                gammas.push(arg);
                continue;
            }
            let one = BigRational::one();
            while arg.c >= one {
                // Gamma(x) = (x-1) Gamma(x-1)
                arg.c -= &one;
                coeff = &coeff * &RatFunc::from_poly(affine_to_poly(&reg, &arg));
            }
            while arg.c.is_negative() {
                // Gamma(x) = Gamma(x+1)/x
                coeff = &coeff / &RatFunc::from_poly(affine_to_poly(&reg, &arg));
                arg.c += &one;
            }
            gammas.push(arg);
        }
        gammas.sort();
        coeff = reduce_sqrtpi(&coeff);
        GammaProduct {
            coeff,
            pow2: self.pow2.clone(),
            pow_pi: self.pow_pi.clone(),
            pow_tau: self.pow_tau.clone(),
            gammas,
        }
    }

    /// Substitute a rational value for the weight symbol k everywhere.
    pub fn subst_k(&self, val: &BigRational) -> GammaProduct {
        let reg = self.registry().clone();
        let k = std_syms::k(&reg);
        let kv = ExactScalar::new(val.clone(), BigRational::zero());
        GammaProduct {
            coeff: self.coeff.substitute_scalar(k, &kv),
            pow2: self.pow2.subst_k(val),
            pow_pi: self.pow_pi.subst_k(val),
            pow_tau: self.pow_tau.subst_k(val),
            gammas: self.gammas.iter().map(|g| g.subst_k(val)).collect(),
        }
    }

    /// Value equality as meromorphic functions, decided structurally after
    /// normalization. Exponent slots may differ by integer constants, which
    /// are folded into the prefactor comparison.
    pub fn eq_value(&self, other: &GammaProduct) -> bool {
        let a = self.normalize();
        let b = other.normalize();
        if a.coeff.is_zero() && b.coeff.is_zero() {
            return true;
        }
        if a.gammas != b.gammas {
            return false;
        }
        let Some(f) = slot_difference_factor(self.registry(), &a, &b) else {
            return false;
        };
        a.coeff.eq_value(&(&b.coeff * &f))
    }

    /// Divide by another product whose Gamma content matches after
    /// normalization; the quotient is gamma-free in the common factors.
    /// Returns None if the Gamma multisets do not cancel.
    pub fn try_div(&self, other: &GammaProduct) -> Option<GammaProduct> {
        let a = self.normalize();
        let b = other.normalize();
        if b.coeff.is_zero() {
            return None;
        }
        let mut rem = a.gammas.clone();
        for g in &b.gammas {
            let pos = rem.iter().position(|h| h == g)?;
            rem.remove(pos);
        }
        Some(GammaProduct {
            coeff: &a.coeff / &b.coeff,
            pow2: &a.pow2 - &b.pow2,
            pow_pi: &a.pow_pi - &b.pow_pi,
            pow_tau: &a.pow_tau - &b.pow_tau,
            gammas: rem,
        })
    }

    /// True when the product, as a function of s, has neither zero nor pole
    /// at s = 0 (a "unit"): the prefactor has s-order zero and no Gamma
    /// argument vanishes at s = 0. k must already be concrete or the Gamma
    /// arguments k-regular for every admissible k.
    pub fn is_unit_at_s0(&self) -> bool {
        let n = self.normalize();
        let s = std_syms::s(self.registry());
        if n.coeff.is_zero() {
            return false;
        }
        if n.coeff.s_order(s) != Some(0) {
            return false;
        }
        n.gammas.iter().all(|g| !(g.c.is_zero() && g.k.is_zero()))
    }

    /// The s -> 0 limit for a product with no symbolic k left.
    pub fn limit_s0(&self) -> Result<GammaLimit> {
        let reg = self.registry().clone();
        let k = std_syms::k(&reg);
        if self.coeff.contains_symbol(k)
            || self.gammas.iter().any(|g| !g.k.is_zero())
            || !self.pow2.k.is_zero()
            || !self.pow_pi.k.is_zero()
            || !self.pow_tau.k.is_zero()
        {
            return self.limit_s0_symbolic_k(1);
        }
        let n = self.normalize();
        let s = std_syms::s(&reg);
        if n.coeff.is_zero() {
            return Ok(GammaLimit::Value(RatFunc::zero(&reg)));
        }
        if n
            .gammas
            .iter()
            .any(|g| g.is_constant() && is_nonpositive_int(&g.c))
        {
            return Ok(GammaLimit::Pole { order: i64::MAX });
        }
        let (zero_order, unit) = n.coeff.extract_s_power(s).unwrap();
        let pole_order = n
            .gammas
            .iter()
            .filter(|g| g.c.is_zero() && !g.s.is_zero())
            .count() as i64;
        if zero_order > pole_order {
            return Ok(GammaLimit::Value(RatFunc::zero(&reg)));
        }
        if zero_order < pole_order {
            return Ok(GammaLimit::Pole {
                order: pole_order - zero_order,
            });
        }
        // Finite nonzero candidate: assemble the value.
        let zero = ExactScalar::zero();
        let mut value = RatFunc::new(
            unit.num().substitute_scalar(s, &zero),
            unit.den().substitute_scalar(s, &zero),
        );
        for g in &n.gammas {
            if g.c.is_zero() {
                // Gamma(a s) ~ 1/(a s): the 1/s cancelled against the
                // prefactor zero; the residue contributes 1/a.
                let a = ExactScalar::new(g.s.clone(), BigRational::zero());
                value = value.scale(&a.inv());
            } else {
                value = &value * &gamma_of_constant(&reg, &g.c)?;
            }
        }
        value = &value * &slots_value_at_s0(&reg, &n)?;
        Ok(GammaLimit::Value(reduce_sqrtpi(&value)))
    }

    /// The s -> 0 limit with k symbolic, split over integer k >= k_min.
    pub fn limit_s0_symbolic_k(&self, k_min: i64) -> Result<GammaLimit> {
        let n = self.normalize();
        // Critical k: any k-dependent Gamma argument hits a non-positive
        // value at s = 0, or the prefactor denominator vanishes.
        let mut k_crit = k_min - 1;
        for g in &n.gammas {
            if g.k.is_zero() {
                continue;
            }
            if g.k.is_negative() {
                return Err(EngineError::Internal(
                    "gamma argument decreasing in k; no finite case split".into(),
                ));
            }
            // Largest integer k with k-part * k + const <= 0.
            let bound = -&g.c / &g.k;
            let f = bound.floor().to_integer();
            let candidate = num_traits::ToPrimitive::to_i64(&f).unwrap_or(i64::MAX);
            k_crit = k_crit.max(candidate);
        }
        if k_crit < k_min {
            return self.tail_limit();
        }
        let mut cases = Vec::new();
        for kv in k_min..=k_crit {
            let at_k = self.subst_k(&BigRational::from_integer(BigInt::from(kv)));
            cases.push((KRange::At(kv), at_k.limit_s0()?));
        }
        let tail = self.tail_generic(k_crit + 1)?;
        cases.push((KRange::AtLeast(k_crit + 1), tail));
        Ok(GammaLimit::CaseSplit(cases))
    }

    /// Limit when every k-dependent Gamma argument stays positive at s = 0.
    fn tail_limit(&self) -> Result<GammaLimit> {
        self.tail_generic(i64::MIN)
    }

    fn tail_generic(&self, _k_from: i64) -> Result<GammaLimit> {
        let reg = self.registry().clone();
        let s = std_syms::s(&reg);
        let n = self.normalize();
        if n.coeff.is_zero() {
            return Ok(GammaLimit::Value(RatFunc::zero(&reg)));
        }
        let (zero_order, unit) = n.coeff.extract_s_power(s).unwrap();
        let pole_order = n
            .gammas
            .iter()
            .filter(|g| g.c.is_zero() && g.k.is_zero() && !g.s.is_zero())
            .count() as i64;
        if zero_order > pole_order {
            return Ok(GammaLimit::Value(RatFunc::zero(&reg)));
        }
        if zero_order < pole_order {
            return Ok(GammaLimit::Pole {
                order: pole_order - zero_order,
            });
        }
        let zero = ExactScalar::zero();
        let mut out = GammaProduct {
            coeff: RatFunc::new(
                unit.num().substitute_scalar(s, &zero),
                unit.den().substitute_scalar(s, &zero),
            ),
            pow2: n.pow2.at_s_zero(),
            pow_pi: n.pow_pi.at_s_zero(),
            pow_tau: n.pow_tau.at_s_zero(),
            gammas: Vec::new(),
        };
        let mut k_free_value = RatFunc::one(&reg);
        for g in &n.gammas {
            if !g.k.is_zero() {
                out.gammas.push(g.at_s_zero());
            } else if g.c.is_zero() {
                let a = ExactScalar::new(g.s.clone(), BigRational::zero());
                k_free_value = k_free_value.scale(&a.inv());
            } else {
                k_free_value = &k_free_value * &gamma_of_constant(&reg, &g.c)?;
            }
        }
        out.coeff = &out.coeff * &k_free_value;
        if out.gammas.is_empty()
            && out.pow2.k.is_zero()
            && out.pow_pi.k.is_zero()
            && out.pow_tau.k.is_zero()
        {
            let v = &out.coeff * &slots_value_at_s0(&reg, &out)?;
            return Ok(GammaLimit::Value(reduce_sqrtpi(&v)));
        }
        Ok(GammaLimit::Symbolic(out))
    }
}

fn is_nonpositive_int(r: &BigRational) -> bool {
    r.is_integer() && !r.is_positive()
}

pub fn affine_to_poly(reg: &Registry, a: &AffineSK) -> MultiPoly {
    let s = MultiPoly::var(reg, "s");
    let k = MultiPoly::var(reg, "k");
    let mut p = MultiPoly::constant(reg, ExactScalar::new(a.c.clone(), BigRational::zero()));
    p = &p + &s.scale(&ExactScalar::new(a.s.clone(), BigRational::zero()));
    p = &p + &k.scale(&ExactScalar::new(a.k.clone(), BigRational::zero()));
    p
}

/// Gamma at a positive constant in (1/2)Z as an exact multiple of sqrtpi:
/// Gamma(n) = (n-1)!, Gamma(n + 1/2) = (2n)! sqrtpi / (4^n n!).
fn gamma_of_constant(reg: &Registry, c: &BigRational) -> Result<RatFunc> {
    if !c.is_positive() {
        return Err(EngineError::Pole { order: 1 });
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let doubled = c * &two;
    if !doubled.is_integer() {
        return Err(EngineError::Internal(format!(
            "gamma argument {c} outside the half-integer family"
        )));
    }
    if c.is_integer() {
        let n = num_traits::ToPrimitive::to_u64(&c.to_integer()).unwrap();
        let mut acc = BigRational::one();
        for j in 1..n {
            acc *= BigRational::from_integer(BigInt::from(j));
        }
        Ok(RatFunc::from_poly(MultiPoly::constant(
            reg,
            ExactScalar::new(acc, BigRational::zero()),
        )))
    } else {
        // c = m + 1/2 with m >= 0: Gamma(c) = sqrtpi * prod_{j=1..m} (c-j).
        let mut acc = BigRational::one();
        let mut x = c - BigRational::one();
        while x.is_positive() {
            acc *= &x;
            x -= BigRational::one();
        }
        let sqrtpi = MultiPoly::var(reg, "sqrtpi");
        Ok(RatFunc::from_poly(
            sqrtpi.scale(&ExactScalar::new(acc, BigRational::zero())),
        ))
    }
}

/// 2^pow2 * pi^pow_pi * tau^pow_tau at s = 0 as an exact RatFunc; exponents
/// must be constant by then (no symbolic k) and integral (half-integral
/// allowed for pi via sqrtpi).
fn slots_value_at_s0(reg: &Registry, g: &GammaProduct) -> Result<RatFunc> {
    let mut out = RatFunc::one(reg);
    for (affine, base) in [(&g.pow2, Base::Two), (&g.pow_pi, Base::Pi), (&g.pow_tau, Base::Tau)] {
        if !affine.k.is_zero() {
            return Err(EngineError::Internal(
                "exponent slot still symbolic in k at s=0".into(),
            ));
        }
        let e = affine.c.clone();
        if e.is_zero() {
            continue;
        }
        let f = match base {
            Base::Two => rational_power_of_two(reg, &e)?,
            Base::Pi => rational_power_of_pi(reg, &e)?,
            Base::Tau => rational_power_of_symbol(reg, "tau", &e)?,
        };
        out = &out * &f;
    }
    Ok(out)
}

enum Base {
    Two,
    Pi,
    Tau,
}

fn rational_power_of_two(reg: &Registry, e: &BigRational) -> Result<RatFunc> {
    if !e.is_integer() {
        return Err(EngineError::Internal(format!("2^{e} is not exact")));
    }
    let n = num_traits::ToPrimitive::to_i64(&e.to_integer())
        .ok_or_else(|| EngineError::Internal("power of two overflow".into()))?;
    let two = BigRational::from_integer(BigInt::from(2));
    let mut acc = BigRational::one();
    for _ in 0..n.unsigned_abs() {
        acc *= &two;
    }
    let c = if n >= 0 { acc } else { acc.recip() };
    Ok(RatFunc::from_poly(MultiPoly::constant(
        reg,
        ExactScalar::new(c, BigRational::zero()),
    )))
}

fn rational_power_of_pi(reg: &Registry, e: &BigRational) -> Result<RatFunc> {
    let two = BigRational::from_integer(BigInt::from(2));
    let doubled = e * &two;
    if !doubled.is_integer() {
        return Err(EngineError::Internal(format!("pi^{e} is not exact")));
    }
    // pi^e = pi^floor(e) * sqrtpi^(2 frac(e))
    let fl = e.floor();
    let frac = e - &fl;
    let int_part = num_traits::ToPrimitive::to_i64(&fl.to_integer())
        .ok_or_else(|| EngineError::Internal("pi power overflow".into()))?;
    let mut num = MultiPoly::one(reg);
    let mut den = MultiPoly::one(reg);
    let pi = MultiPoly::var(reg, "pi");
    for _ in 0..int_part.unsigned_abs() {
        if int_part >= 0 {
            num = &num * &pi;
        } else {
            den = &den * &pi;
        }
    }
    if !frac.is_zero() {
        num = &num * &MultiPoly::var(reg, "sqrtpi");
    }
    Ok(RatFunc::new(num, den))
}

fn rational_power_of_symbol(reg: &Registry, name: &str, e: &BigRational) -> Result<RatFunc> {
    if !e.is_integer() {
        return Err(EngineError::Internal(format!("{name}^{e} is not exact")));
    }
    let n = num_traits::ToPrimitive::to_i64(&e.to_integer())
        .ok_or_else(|| EngineError::Internal("symbol power overflow".into()))?;
    let sym = MultiPoly::var(reg, name);
    let mut num = MultiPoly::one(reg);
    let mut den = MultiPoly::one(reg);
    for _ in 0..n.unsigned_abs() {
        if n >= 0 {
            num = &num * &sym;
        } else {
            den = &den * &sym;
        }
    }
    Ok(RatFunc::new(num, den))
}

/// Fold the integer-constant slot differences (a - b) into a RatFunc factor
/// for the prefactor comparison; None when slots differ non-trivially.
fn slot_difference_factor(reg: &Registry, a: &GammaProduct, b: &GammaProduct) -> Option<RatFunc> {
    let mut f = RatFunc::one(reg);
    for (pa, pb, base) in [
        (&a.pow2, &b.pow2, Base::Two),
        (&a.pow_pi, &b.pow_pi, Base::Pi),
        (&a.pow_tau, &b.pow_tau, Base::Tau),
    ] {
        let d = pb - pa;
        if d.is_zero() {
            continue;
        }
        if !d.is_constant() {
            return None;
        }
        let factor = match base {
            Base::Two => rational_power_of_two(reg, &d.c).ok()?,
            Base::Pi => rational_power_of_pi(reg, &d.c).ok()?,
            Base::Tau => rational_power_of_symbol(reg, "tau", &d.c).ok()?,
        };
        f = &f * &factor;
    }
    Some(f)
}

pub fn reduce_sqrtpi(r: &RatFunc) -> RatFunc {
    let reg = r.registry().clone();
    let from = std_syms::sqrtpi(&reg);
    let to = std_syms::pi(&reg);
    RatFunc::new(
        r.num().rewrite_square(from, to),
        r.den().rewrite_square(from, to),
    )
}

impl fmt::Display for GammaProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GP{{coeff={}; pow2={}; powpi={}; powtau={}; gammas=[",
            self.coeff, self.pow2, self.pow_pi, self.pow_tau
        )?;
        for (i, g) in self.gammas.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::big_ratio;

    fn reg() -> Registry {
        Registry::standard()
    }

    fn s_rf(reg: &Registry) -> RatFunc {
        RatFunc::var(reg, "s")
    }

    #[test]
    fn normalize_shifts_down() {
        // Gamma(s+3/2) = (s+1/2) Gamma(s+1/2)
        let reg = reg();
        let g = GammaProduct::gamma(&reg, AffineSK::from_parts(1, 0, 3, 2));
        let n = g.normalize();
        assert_eq!(n.gammas, vec![AffineSK::from_parts(1, 0, 1, 2)]);
        let expected = RatFunc::from_poly(
            &MultiPoly::var(&reg, "s") + &MultiPoly::ratio(&reg, 1, 2),
        );
        assert!(n.coeff.eq_value(&expected));
    }

    #[test]
    fn s_gamma_s_equals_gamma_s_plus_one() {
        let reg = reg();
        let lhs = GammaProduct::gamma(&reg, AffineSK::s()).scale(&s_rf(&reg));
        let rhs = GammaProduct::gamma(&reg, AffineSK::from_parts(1, 0, 1, 1));
        assert!(lhs.eq_value(&rhs));
    }

    #[test]
    fn normalize_idempotent() {
        let reg = reg();
        let g = GammaProduct::gamma(&reg, AffineSK::from_parts(1, 1, -3, 2))
            .mul(&GammaProduct::gamma(&reg, AffineSK::from_parts(2, 0, 5, 2)));
        let n1 = g.normalize();
        let n2 = n1.normalize();
        assert_eq!(n1, n2);
    }

    #[test]
    fn shift_example_at_k3() {
        // Gamma(s+k-1/2) Gamma(s+k-1) at k=3 ->
        //   (s+3/2)(s+1/2)(s+1)s Gamma(s+1/2) Gamma(s)
        let reg = reg();
        let g = GammaProduct::gamma(&reg, AffineSK::from_parts(1, 1, -1, 2))
            .mul(&GammaProduct::gamma(&reg, AffineSK::from_parts(1, 1, -1, 1)));
        let at3 = g.subst_k(&big_ratio(3, 1)).normalize();
        assert_eq!(
            at3.gammas,
            vec![AffineSK::s(), AffineSK::from_parts(1, 0, 1, 2)]
        );
        let s = MultiPoly::var(&reg, "s");
        let expected = &(&(&(&s + &MultiPoly::ratio(&reg, 3, 2))
            * &(&s + &MultiPoly::ratio(&reg, 1, 2)))
            * &(&s + &MultiPoly::one(&reg)))
            * &s;
        assert!(at3.coeff.eq_value(&RatFunc::from_poly(expected)));
    }

    #[test]
    fn limit_minus_half_gamma_half() {
        // s(s-1/2) Gamma(s+1/2) Gamma(s) -> -1/2 Gamma(1/2) = -1/2 sqrtpi
        let reg = reg();
        let s = MultiPoly::var(&reg, "s");
        let pre = RatFunc::from_poly(&s * &(&s - &MultiPoly::ratio(&reg, 1, 2)));
        let g = GammaProduct::gamma(&reg, AffineSK::from_parts(1, 0, 1, 2))
            .mul(&GammaProduct::gamma(&reg, AffineSK::s()))
            .scale(&pre);
        let lim = g.limit_s0().unwrap();
        let expected =
            RatFunc::from_poly(MultiPoly::var(&reg, "sqrtpi").scale(&ExactScalar::from_ratio(-1, 2)));
        assert_eq!(lim, GammaLimit::Value(expected));
    }

    #[test]
    fn limit_k2_case_is_zero() {
        // s(s-1/2) Gamma(s+3/2) Gamma(s+1) -> 0
        let reg = reg();
        let s = MultiPoly::var(&reg, "s");
        let pre = RatFunc::from_poly(&s * &(&s - &MultiPoly::ratio(&reg, 1, 2)));
        let g = GammaProduct::gamma(&reg, AffineSK::from_parts(1, 0, 3, 2))
            .mul(&GammaProduct::gamma(&reg, AffineSK::from_parts(1, 0, 1, 1)))
            .scale(&pre);
        assert_eq!(
            g.limit_s0().unwrap(),
            GammaLimit::Value(RatFunc::zero(&reg))
        );
    }

    #[test]
    fn limit_zero_order_exceeds_pole() {
        // Gamma(s) * s^2 -> 0
        let reg = reg();
        let s = MultiPoly::var(&reg, "s");
        let g = GammaProduct::gamma(&reg, AffineSK::s())
            .scale(&RatFunc::from_poly(&s * &s));
        assert_eq!(
            g.limit_s0().unwrap(),
            GammaLimit::Value(RatFunc::zero(&reg))
        );
    }

    #[test]
    fn limit_pole_reported() {
        let reg = reg();
        let g = GammaProduct::gamma(&reg, AffineSK::s());
        assert_eq!(g.limit_s0().unwrap(), GammaLimit::Pole { order: 1 });
        let g0 = GammaProduct::gamma(&reg, AffineSK::int(0));
        assert_eq!(g0.limit_s0().unwrap(), GammaLimit::Pole { order: i64::MAX });
    }

    #[test]
    fn functional_equation_invariance_of_limits() {
        // limit(s Gamma(s) g) == limit(Gamma(s+1) g) for pole-free g.
        let reg = reg();
        let s = MultiPoly::var(&reg, "s");
        let g_extra = GammaProduct::gamma(&reg, AffineSK::from_parts(3, 0, 1, 2))
            .scale(&RatFunc::from_poly(&s + &MultiPoly::int(&reg, 2)));
        let a = GammaProduct::gamma(&reg, AffineSK::s())
            .scale(&RatFunc::from_poly(s.clone()))
            .mul(&g_extra);
        let b = GammaProduct::gamma(&reg, AffineSK::from_parts(1, 0, 1, 1)).mul(&g_extra);
        assert_eq!(a.limit_s0().unwrap(), b.limit_s0().unwrap());
    }

    #[test]
    fn symbolic_k_case_split() {
        // s(s-1/2) Gamma(s+k-1/2) Gamma(s+k-1): k=1 nonzero, k>=2 zero.
        let reg = reg();
        let s = MultiPoly::var(&reg, "s");
        let pre = RatFunc::from_poly(&s * &(&s - &MultiPoly::ratio(&reg, 1, 2)));
        let g = GammaProduct::gamma(&reg, AffineSK::from_parts(1, 1, -1, 2))
            .mul(&GammaProduct::gamma(&reg, AffineSK::from_parts(1, 1, -1, 1)))
            .scale(&pre);
        let GammaLimit::CaseSplit(cases) = g.limit_s0_symbolic_k(1).unwrap() else {
            panic!("expected case split");
        };
        assert_eq!(cases.len(), 2);
        assert_eq!(cases[0].0, KRange::At(1));
        let GammaLimit::Value(v1) = &cases[0].1 else {
            panic!("k=1 should be a finite value")
        };
        assert!(!v1.is_zero());
        assert_eq!(cases[1].0, KRange::AtLeast(2));
        assert_eq!(cases[1].1, GammaLimit::Value(RatFunc::zero(&reg)));
    }
}
