//! Symbolic calculus on the genus-2 upper half-space. Expressions are
//! canonical sums of terms
//!
//!   coeff(k,s,pi,aT) * det(Y)^(e0 + e1*k + e2*s) * p(Y,T)/det(T)^b
//!     * (jet of the holomorphic symbol h) * exp(2 pi i tr TZ)?
//!
//! closed under the weighted matrix derivatives dZ and dZbar. The
//! holomorphic form h is a formal jet: derivative indices are free
//! commuting symbols killed by dZbar. On Y-dependence dZ acts as
//! -(i/2) * weighted dY and dZbar as +(i/2) * weighted dY; on the
//! exponential factor dZ multiplies by 2 pi i t_ij entrywise.

use crate::affine::AffineSK;
use crate::poly::{big_ratio, MultiPoly};
use crate::ratfunc::RatFunc;
use crate::registry::{std_syms, Registry};
use crate::scalar::ExactScalar;
use num::{BigRational, One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Multiset of weighted-derivative indices (i, j), i <= j, applied to h.
/// `None` means the term carries no h factor at all; `Some(empty)` is h
/// itself.
pub type Jet = Option<BTreeMap<(u8, u8), u32>>;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TermKey {
    pub dety_exp: AffineSK,
    pub dett_inv: u32,
    /// Monic polynomial in the y/t entries, never divisible by det(Y).
    pub scalar: MultiPoly,
    pub jet: Jet,
    pub exp_flag: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfExpr {
    registry: Registry,
    terms: BTreeMap<TermKey, RatFunc>,
}

pub fn det_y(reg: &Registry) -> MultiPoly {
    let y11 = MultiPoly::var(reg, "y11");
    let y12 = MultiPoly::var(reg, "y12");
    let y22 = MultiPoly::var(reg, "y22");
    &(&y11 * &y22) - &(&y12 * &y12)
}

pub fn det_t(reg: &Registry) -> MultiPoly {
    let t11 = MultiPoly::var(reg, "t11");
    let t12 = MultiPoly::var(reg, "t12");
    let t22 = MultiPoly::var(reg, "t22");
    &(&t11 * &t22) - &(&t12 * &t12)
}

pub fn trace_yt(reg: &Registry) -> MultiPoly {
    let p = |a: &str, b: &str| &MultiPoly::var(reg, a) * &MultiPoly::var(reg, b);
    &(&p("y11", "t11") + &p("y12", "t12").scale(&ExactScalar::from_int(2))) + &p("y22", "t22")
}

/// Adjugate entry of Y at (i, j): det(Y) * (Y^-1)_ij.
fn adj_y(reg: &Registry, i: u8, j: u8) -> MultiPoly {
    match (i, j) {
        (1, 1) => MultiPoly::var(reg, "y22"),
        (2, 2) => MultiPoly::var(reg, "y11"),
        (1, 2) | (2, 1) => -&MultiPoly::var(reg, "y12"),
        _ => panic!("bad index"),
    }
}

fn t_entry(reg: &Registry, i: u8, j: u8) -> MultiPoly {
    match (i, j) {
        (1, 1) => MultiPoly::var(reg, "t11"),
        (2, 2) => MultiPoly::var(reg, "t22"),
        (1, 2) | (2, 1) => MultiPoly::var(reg, "t12"),
        _ => panic!("bad index"),
    }
}

impl HalfExpr {
    pub fn zero(reg: &Registry) -> Self {
        HalfExpr {
            registry: reg.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn registry(&self) -> &Registry {
        &self.registry
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &RatFunc)> {
        self.terms.iter()
    }

    /// The constant 1.
    pub fn one(reg: &Registry) -> Self {
        let mut e = HalfExpr::zero(reg);
        e.add_raw(
            AffineSK::zero(),
            0,
            MultiPoly::one(reg),
            None,
            false,
            RatFunc::one(reg),
        );
        e
    }

    /// The formal holomorphic symbol h.
    pub fn h_seed(reg: &Registry) -> Self {
        let mut e = HalfExpr::zero(reg);
        e.add_raw(
            AffineSK::zero(),
            0,
            MultiPoly::one(reg),
            Some(BTreeMap::new()),
            false,
            RatFunc::one(reg),
        );
        e
    }

    /// aT * exp(2 pi i tr TZ), the exponential Fourier seed.
    pub fn exp_seed(reg: &Registry) -> Self {
        let mut e = HalfExpr::zero(reg);
        e.add_raw(
            AffineSK::zero(),
            0,
            MultiPoly::one(reg),
            None,
            true,
            RatFunc::var(reg, "aT"),
        );
        e
    }

    /// A pure polynomial in the y/t entries.
    pub fn from_scalar(reg: &Registry, p: MultiPoly) -> Self {
        let mut e = HalfExpr::zero(reg);
        e.add_raw(AffineSK::zero(), 0, p, None, false, RatFunc::one(reg));
        e
    }

    /// Insert a term, canonicalizing: det(Y)-divisible numerators fold into
    /// the exponent, det(T) cancels against the localization power, and the
    /// scalar polynomial is made monic with its leading coefficient moved
    /// into the rational coefficient.
    pub fn add_raw(
        &mut self,
        mut dety_exp: AffineSK,
        mut dett_inv: u32,
        mut scalar: MultiPoly,
        jet: Jet,
        exp_flag: bool,
        mut coeff: RatFunc,
    ) {
        if coeff.is_zero() || scalar.is_zero() {
            return;
        }
        let reg = &self.registry;
        let dy = det_y(reg);
        while let Some(q) = scalar.try_div_exact(&dy) {
            scalar = q;
            dety_exp.c += BigRational::one();
        }
        let dt = det_t(reg);
        while dett_inv > 0 {
            match scalar.try_div_exact(&dt) {
                Some(q) => {
                    scalar = q;
                    dett_inv -= 1;
                }
                None => break,
            }
        }
        let lc = scalar.leading().map(|(_, c)| c.clone()).unwrap();
        if !lc.is_one() {
            scalar = scalar.scale(&lc.inv());
            coeff = coeff.scale(&lc);
        }
        let key = TermKey {
            dety_exp,
            dett_inv,
            scalar,
            jet,
            exp_flag,
        };
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &HalfExpr) -> HalfExpr {
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.add_raw(
                key.dety_exp.clone(),
                key.dett_inv,
                key.scalar.clone(),
                key.jet.clone(),
                key.exp_flag,
                c.clone(),
            );
        }
        out
    }

    pub fn sub(&self, other: &HalfExpr) -> HalfExpr {
        self.add(&other.scale(&RatFunc::int(&other.registry, -1)))
    }

    pub fn scale(&self, c: &RatFunc) -> HalfExpr {
        let mut out = HalfExpr::zero(&self.registry);
        for (key, a) in &self.terms {
            out.add_raw(
                key.dety_exp.clone(),
                key.dett_inv,
                key.scalar.clone(),
                key.jet.clone(),
                key.exp_flag,
                a * c,
            );
        }
        out
    }

    /// Multiply by det(Y)^alpha.
    pub fn mul_dety(&self, alpha: &AffineSK) -> HalfExpr {
        let mut out = HalfExpr::zero(&self.registry);
        for (key, c) in &self.terms {
            out.add_raw(
                &key.dety_exp + alpha,
                key.dett_inv,
                key.scalar.clone(),
                key.jet.clone(),
                key.exp_flag,
                c.clone(),
            );
        }
        out
    }

    /// Product of expressions. At most one factor may carry the
    /// exponential, and at most one may carry h jets.
    pub fn mul(&self, other: &HalfExpr) -> HalfExpr {
        let mut out = HalfExpr::zero(&self.registry);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                assert!(
                    !(k1.exp_flag && k2.exp_flag),
                    "product of two exponential factors is outside the term algebra"
                );
                let jet = match (&k1.jet, &k2.jet) {
                    (None, j) => j.clone(),
                    (j, None) => j.clone(),
                    _ => panic!("product would be nonlinear in the jet of h"),
                };
                out.add_raw(
                    &k1.dety_exp + &k2.dety_exp,
                    k1.dett_inv + k2.dett_inv,
                    &k1.scalar * &k2.scalar,
                    jet,
                    k1.exp_flag || k2.exp_flag,
                    c1 * c2,
                );
            }
        }
        out
    }

    /// Substitute a rational value for the weight symbol k everywhere.
    pub fn subst_k(&self, val: &BigRational) -> HalfExpr {
        let reg = self.registry.clone();
        let k = std_syms::k(&reg);
        let kv = ExactScalar::new(val.clone(), BigRational::zero());
        let mut out = HalfExpr::zero(&reg);
        for (key, c) in &self.terms {
            out.add_raw(
                key.dety_exp.subst_k(val),
                key.dett_inv,
                key.scalar.clone(),
                key.jet.clone(),
                key.exp_flag,
                c.substitute_scalar(k, &kv),
            );
        }
        out
    }

    fn derive(&self, i: u8, j: u8, bar: bool) -> HalfExpr {
        let reg = self.registry.clone();
        let mut out = HalfExpr::zero(&reg);
        // dZ = -(i/2) dY on Y-dependence; dZbar = +(i/2) dY.
        let y_factor = if bar {
            ExactScalar::imag_ratio(1, 2)
        } else {
            ExactScalar::imag_ratio(-1, 2)
        };
        let two_pi_i = RatFunc::from_poly(
            MultiPoly::var(&reg, "pi").scale(&ExactScalar::imag_ratio(2, 1)),
        );
        for (key, c) in &self.terms {
            // exponential factor: dZ -> 2 pi i t_ij, dZbar -> 0
            if key.exp_flag && !bar {
                out.add_raw(
                    key.dety_exp.clone(),
                    key.dett_inv,
                    &key.scalar * &t_entry(&reg, i, j),
                    key.jet.clone(),
                    true,
                    &(c * &two_pi_i),
                );
            }
            // det(Y)^alpha factor: alpha det(Y)^(alpha-1) adj(Y)_ij
            if !key.dety_exp.is_zero() {
                let alpha_poly = crate::gamma::affine_to_poly(&reg, &key.dety_exp);
                let mut dec = key.dety_exp.clone();
                dec.c -= BigRational::one();
                out.add_raw(
                    dec,
                    key.dett_inv,
                    &(&key.scalar * &adj_y(&reg, i, j)) * &alpha_poly,
                    key.jet.clone(),
                    key.exp_flag,
                    c.scale(&y_factor),
                );
            }
            // polynomial factor: weighted partial
            let dp = weighted_dy(&reg, &key.scalar, i, j);
            if !dp.is_zero() {
                out.add_raw(
                    key.dety_exp.clone(),
                    key.dett_inv,
                    dp,
                    key.jet.clone(),
                    key.exp_flag,
                    c.scale(&y_factor),
                );
            }
            // jet factor: dZ appends a derivative index, dZbar kills nothing
            // else (holomorphic), and contributes nothing itself.
            if !bar {
                if let Some(jet) = &key.jet {
                    let mut jet2 = jet.clone();
                    *jet2.entry((i.min(j), i.max(j))).or_insert(0) += 1;
                    out.add_raw(
                        key.dety_exp.clone(),
                        key.dett_inv,
                        key.scalar.clone(),
                        Some(jet2),
                        key.exp_flag,
                        c.clone(),
                    );
                }
            }
        }
        out
    }

    pub fn dz(&self, i: u8, j: u8) -> HalfExpr {
        self.derive(i, j, false)
    }

    pub fn dz_bar(&self, i: u8, j: u8) -> HalfExpr {
        self.derive(i, j, true)
    }

    /// The weighted matrix derivative dY itself (no -(i/2) factor); used to
    /// state the det-power derivative rule directly.
    pub fn dy(&self, i: u8, j: u8) -> HalfExpr {
        // dY = (dZbar - dZ) / i ... but directly: 2i * dZbar would double.
        // Cleanest: dY = i*(dZ) ... dZ = -(i/2) dY so dY = 2i dZ on pure
        // Y-expressions (no exp, no jet).
        assert!(
            self.terms.keys().all(|k| !k.exp_flag && k.jet.is_none()),
            "dY is defined on pure Y/T expressions"
        );
        self.dz(i, j)
            .scale(&RatFunc::from_poly(MultiPoly::constant(
                &self.registry,
                ExactScalar::imag_ratio(2, 1),
            )))
    }
}

fn weighted_dy(reg: &Registry, p: &MultiPoly, i: u8, j: u8) -> MultiPoly {
    match (i.min(j), i.max(j)) {
        (1, 1) => p.derivative(std_syms::y11(reg)),
        (2, 2) => p.derivative(std_syms::y22(reg)),
        (1, 2) => p
            .derivative(std_syms::y12(reg))
            .scale(&ExactScalar::from_ratio(1, 2)),
        _ => panic!("bad index"),
    }
}

/// Operator selector for the second-order minor operator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixOp {
    Dz,
    DzBar,
    Dy,
}

fn apply_op(op: MatrixOp, e: &HalfExpr, i: u8, j: u8) -> HalfExpr {
    match op {
        MatrixOp::Dz => e.dz(i, j),
        MatrixOp::DzBar => e.dz_bar(i, j),
        MatrixOp::Dy => e.dy(i, j),
    }
}

/// det2(op) = op_11 op_22 - op_12 op_12, the size-2 minor of the weighted
/// matrix operator.
pub fn det2(op: MatrixOp, e: &HalfExpr) -> HalfExpr {
    let a = apply_op(op, &apply_op(op, e, 2, 2), 1, 1);
    let b = apply_op(op, &apply_op(op, e, 1, 2), 1, 2);
    a.sub(&b)
}

/// cap2(A, B) = A11 B22 + A22 B11 - A12 B21 - A21 B12 for symmetric 2x2
/// matrices of expressions.
pub fn cap2(a: &[[HalfExpr; 2]; 2], b: &[[HalfExpr; 2]; 2]) -> HalfExpr {
    a[0][0]
        .mul(&b[1][1])
        .add(&a[1][1].mul(&b[0][0]))
        .sub(&a[0][1].mul(&b[1][0]))
        .sub(&a[1][0].mul(&b[0][1]))
}

/// The matrix of weighted dZ derivatives of an expression.
pub fn dz_matrix(e: &HalfExpr) -> [[HalfExpr; 2]; 2] {
    [
        [e.dz(1, 1), e.dz(1, 2)],
        [e.dz(2, 1), e.dz(2, 2)],
    ]
}

/// Weight bookkeeping for the raising operator.
#[derive(Clone, Debug)]
pub enum Weight {
    /// The symbol k.
    Symbolic,
    /// A concrete rational weight.
    Value(BigRational),
}

impl Weight {
    fn alpha(&self) -> AffineSK {
        // alpha = weight - 1/2
        match self {
            Weight::Symbolic => {
                let mut a = AffineSK::k();
                a.c = big_ratio(-1, 2);
                a
            }
            Weight::Value(r) => AffineSK::constant(r - big_ratio(1, 2)),
        }
    }

    pub fn one() -> Self {
        Weight::Value(BigRational::one())
    }
}

/// The scalar-weight raising operator
/// delta_plus2(e) = -4 det(Y)^-(w-1/2) det(dZ) ( det(Y)^(w-1/2) e ),
/// mapping weight w to weight w + 2.
pub fn delta_plus2(e: &HalfExpr, weight: &Weight) -> HalfExpr {
    let alpha = weight.alpha();
    let lifted = e.mul_dety(&alpha);
    let inner = det2(MatrixOp::Dz, &lifted);
    inner
        .mul_dety(&(-&alpha))
        .scale(&RatFunc::int(e.registry(), -4))
}

/// The lowering operator
/// delta_minus2(e) = -4 det(Y)^(5/2) det(dZbar) ( det(Y)^(-1/2) e ).
pub fn delta_minus2(e: &HalfExpr) -> HalfExpr {
    let lifted = e.mul_dety(&AffineSK::half_int(-1));
    let inner = det2(MatrixOp::DzBar, &lifted);
    inner
        .mul_dety(&AffineSK::half_int(5))
        .scale(&RatFunc::int(e.registry(), -4))
}

/// det(Y)^-1 trace(Y dZ(h)): the shape of the middle term of the raising
/// operator on a weight-one form.
pub fn dety_inv_trace_y_dzh(reg: &Registry) -> HalfExpr {
    let mut e = HalfExpr::zero(reg);
    let minus_one = AffineSK::int(-1);
    let jet = |i: u8, j: u8| {
        let mut m = BTreeMap::new();
        m.insert((i, j), 1);
        Some(m)
    };
    e.add_raw(
        minus_one.clone(),
        0,
        MultiPoly::var(reg, "y11"),
        jet(1, 1),
        false,
        RatFunc::one(reg),
    );
    e.add_raw(
        minus_one.clone(),
        0,
        MultiPoly::var(reg, "y12"),
        jet(1, 2),
        false,
        RatFunc::int(reg, 2),
    );
    e.add_raw(
        minus_one,
        0,
        MultiPoly::var(reg, "y22"),
        jet(2, 2),
        false,
        RatFunc::one(reg),
    );
    e
}

/// The expected Fourier coefficient of delta_plus2 on the exponential seed:
/// aT ( k(k-1/2) det(Y)^-1 - 4 pi (k-1/2) det(Y)^-1 tr(YT) + 16 pi^2 det(T) ) exp.
pub fn expected_derivative_fourier_coeff(reg: &Registry) -> HalfExpr {
    let k = MultiPoly::var(reg, "k");
    let pi = MultiPoly::var(reg, "pi");
    let at = RatFunc::var(reg, "aT");
    let km_half = &k - &MultiPoly::ratio(reg, 1, 2);
    let mut e = HalfExpr::zero(reg);
    e.add_raw(
        AffineSK::int(-1),
        0,
        MultiPoly::one(reg),
        None,
        true,
        &at * &RatFunc::from_poly(&k * &km_half),
    );
    e.add_raw(
        AffineSK::int(-1),
        0,
        trace_yt(reg),
        None,
        true,
        &at * &RatFunc::from_poly((&pi * &km_half).scale(&ExactScalar::from_int(-4))),
    );
    e.add_raw(
        AffineSK::zero(),
        0,
        det_t(reg),
        None,
        true,
        &at * &RatFunc::from_poly((&pi * &pi).scale(&ExactScalar::from_int(16))),
    );
    e
}

impl fmt::Display for HalfExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if !key.dety_exp.is_zero() {
                write!(f, "*detY^[{}]", key.dety_exp)?;
            }
            if key.dett_inv > 0 {
                write!(f, "*detT^[-{}]", key.dett_inv)?;
            }
            if key.scalar.constant_value().map(|c| c.is_one()) != Some(true) {
                write!(f, "*({})", key.scalar)?;
            }
            match &key.jet {
                None => {}
                Some(j) if j.is_empty() => write!(f, "*h")?,
                Some(j) => {
                    for ((a, b), m) in j {
                        for _ in 0..*m {
                            write!(f, "*d{a}{b}")?;
                        }
                    }
                    write!(f, "[h]")?;
                }
            }
            if key.exp_flag {
                write!(f, "*exp")?;
            }
        }
        Ok(())
    }
}
