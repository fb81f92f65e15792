//! Affine forms `a*s + b*k + c` in the two deformation parameters `s`
//! (regularizer) and `k` (weight). Gamma-factor arguments, det(Y)
//! exponents and the power bookkeeping slots all live in this family.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineSK {
    pub s: BigRational,
    pub k: BigRational,
    pub c: BigRational,
}

impl AffineSK {
    pub fn new(s: BigRational, k: BigRational, c: BigRational) -> Self {
        AffineSK { s, k, c }
    }

    pub fn zero() -> Self {
        AffineSK::new(BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn constant(c: BigRational) -> Self {
        AffineSK::new(BigRational::zero(), BigRational::zero(), c)
    }

    pub fn from_parts(s_num: i64, k_num: i64, c_num: i64, c_den: i64) -> Self {
        AffineSK::new(
            BigRational::from_integer(BigInt::from(s_num)),
            BigRational::from_integer(BigInt::from(k_num)),
            BigRational::new(BigInt::from(c_num), BigInt::from(c_den)),
        )
    }

    pub fn s() -> Self {
        AffineSK::from_parts(1, 0, 0, 1)
    }

    pub fn k() -> Self {
        AffineSK::from_parts(0, 1, 0, 1)
    }

    pub fn int(n: i64) -> Self {
        AffineSK::from_parts(0, 0, n, 1)
    }

    pub fn half_int(n: i64) -> Self {
        AffineSK::from_parts(0, 0, n, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.k.is_zero() && self.c.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.s.is_zero() && self.k.is_zero()
    }

    pub fn scale(&self, r: &BigRational) -> AffineSK {
        AffineSK::new(&self.s * r, &self.k * r, &self.c * r)
    }

    /// Substitute a rational value for `k`, folding it into the constant.
    pub fn subst_k(&self, val: &BigRational) -> AffineSK {
        AffineSK::new(self.s.clone(), BigRational::zero(), &self.c + &self.k * val)
    }

    /// Value at `s = 0`; meaningful once `k` has been substituted.
    pub fn at_s_zero(&self) -> AffineSK {
        AffineSK::new(BigRational::zero(), self.k.clone(), self.c.clone())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_constant() {
            Some(&self.c)
        } else {
            None
        }
    }

    pub fn eval_f64(&self, s: f64, k: f64) -> f64 {
        crate::scalar::ratio_to_f64(&self.s) * s
            + crate::scalar::ratio_to_f64(&self.k) * k
            + crate::scalar::ratio_to_f64(&self.c)
    }
}

impl Add for &AffineSK {
    type Output = AffineSK;
    fn add(self, rhs: &AffineSK) -> AffineSK {
        AffineSK::new(&self.s + &rhs.s, &self.k + &rhs.k, &self.c + &rhs.c)
    }
}

impl Sub for &AffineSK {
    type Output = AffineSK;
    fn sub(self, rhs: &AffineSK) -> AffineSK {
        AffineSK::new(&self.s - &rhs.s, &self.k - &rhs.k, &self.c - &rhs.c)
    }
}

impl Neg for &AffineSK {
    type Output = AffineSK;
    fn neg(self) -> AffineSK {
        AffineSK::new(-self.s.clone(), -self.k.clone(), -self.c.clone())
    }
}

impl Mul<&BigRational> for &AffineSK {
    type Output = AffineSK;
    fn mul(self, rhs: &BigRational) -> AffineSK {
        self.scale(rhs)
    }
}

impl PartialOrd for AffineSK {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AffineSK {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.s, &self.k, &self.c).cmp(&(&other.s, &other.k, &other.c))
    }
}

fn write_rat_coeff(
    f: &mut fmt::Formatter<'_>,
    r: &BigRational,
    sym: &str,
    first: &mut bool,
) -> fmt::Result {
    if r.is_zero() {
        return Ok(());
    }
    if *first {
        if r.is_one() {
            write!(f, "{sym}")?;
        } else if (-r.clone()).is_one() {
            write!(f, "-{sym}")?;
        } else {
            write!(f, "{r}*{sym}")?;
        }
    } else if r.is_positive() {
        if r.is_one() {
            write!(f, "+{sym}")?;
        } else {
            write!(f, "+{r}*{sym}")?;
        }
    } else if (-r.clone()).is_one() {
        write!(f, "-{sym}")?;
    } else {
        write!(f, "{r}*{sym}")?;
    }
    *first = false;
    Ok(())
}

/// Canonical text form: `s+k-1/2`, `2*s`, `-3/2`, `0`.
impl fmt::Display for AffineSK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        write_rat_coeff(f, &self.s, "s", &mut first)?;
        write_rat_coeff(f, &self.k, "k", &mut first)?;
        if !self.c.is_zero() {
            if first {
                write!(f, "{}", self.c)?;
            } else if self.c.is_positive() {
                write!(f, "+{}", self.c)?;
            } else {
                write!(f, "{}", self.c)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        let a = AffineSK::from_parts(1, 1, -1, 2);
        assert_eq!(a.to_string(), "s+k-1/2");
        assert_eq!(AffineSK::zero().to_string(), "0");
        assert_eq!(AffineSK::from_parts(-2, 0, 1, 1).to_string(), "-2*s+1");
        assert_eq!(AffineSK::from_parts(0, -1, 0, 1).to_string(), "-k");
    }

    #[test]
    fn subst_k_folds_constant() {
        let a = AffineSK::from_parts(1, 1, -1, 1); // s + k - 1
        let b = a.subst_k(&BigRational::from_integer(BigInt::from(3)));
        assert_eq!(b, AffineSK::from_parts(1, 0, 2, 1));
    }
}
