//! Skew shift operators acting on the two-parameter Poincare family
//! P(g, u, v): finite sums of even nonnegative parameter shifts with
//! polynomial coefficients in (u, v, pi, tau). Composition is skew: the
//! left factor's coefficient is evaluated at the parameters already
//! shifted by the right factor, because the outer operator acts on each
//! shifted family member by its own rule at that member's parameters.

use crate::poly::{big_ratio, MultiPoly};
use crate::registry::{std_syms, Registry};
use crate::scalar::ExactScalar;
use std::collections::BTreeMap;
use std::fmt;

/// A shift (du, dv); both components are even and nonnegative.
pub type Shift = (u32, u32);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftOperator {
    registry: Registry,
    terms: BTreeMap<Shift, MultiPoly>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CasimirKind {
    C1,
    C2,
}

impl ShiftOperator {
    pub fn zero(reg: &Registry) -> Self {
        ShiftOperator {
            registry: reg.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(reg: &Registry) -> Self {
        let mut op = ShiftOperator::zero(reg);
        op.add_term((0, 0), MultiPoly::one(reg));
        op
    }

    pub fn registry(&self) -> &Registry {
        &self.registry
    }

    pub fn add_term(&mut self, shift: Shift, coeff: MultiPoly) {
        assert!(shift.0 % 2 == 0 && shift.1 % 2 == 0, "shifts must be even");
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(shift) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Shift, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, shift: Shift) -> Option<&MultiPoly> {
        self.terms.get(&shift)
    }

    pub fn add(&self, other: &ShiftOperator) -> ShiftOperator {
        let mut out = self.clone();
        for (&sh, c) in &other.terms {
            out.add_term(sh, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ShiftOperator) -> ShiftOperator {
        let mut out = self.clone();
        for (&sh, c) in &other.terms {
            out.add_term(sh, -c);
        }
        out
    }

    /// Multiply every coefficient by a scalar polynomial (no shift).
    pub fn scale(&self, p: &MultiPoly) -> ShiftOperator {
        let mut out = ShiftOperator::zero(&self.registry);
        for (&sh, c) in &self.terms {
            out.add_term(sh, c * p);
        }
        out
    }

    /// Skew composition (self after other): the coefficient of `self` is
    /// evaluated at parameters shifted by the right factor's shift.
    pub fn compose(&self, other: &ShiftOperator) -> ShiftOperator {
        let reg = &self.registry;
        let u = std_syms::u(reg);
        let v = std_syms::v(reg);
        let mut out = ShiftOperator::zero(reg);
        for (&(gu, gv), gc) in &other.terms {
            for (&(fu, fv), fc) in &self.terms {
                let shifted = fc
                    .shift_symbol(u, &big_ratio(gu as i64, 1))
                    .shift_symbol(v, &big_ratio(gv as i64, 1));
                out.add_term((fu + gu, fv + gv), &shifted * gc);
            }
        }
        out
    }

    pub fn commutator(&self, other: &ShiftOperator) -> ShiftOperator {
        self.compose(other).sub(&other.compose(self))
    }

    /// Substitute v = 2u + 1 in every coefficient. Shifts are reported
    /// unchanged: a term at shift (a, b) acts at parameters (u+a, 2u+1+b).
    pub fn restrict_line(&self) -> Vec<(Shift, MultiPoly)> {
        let reg = &self.registry;
        let v = std_syms::v(reg);
        let line = &MultiPoly::var(reg, "u").scale(&ExactScalar::from_int(2))
            + &MultiPoly::one(reg);
        self.terms
            .iter()
            .map(|(&sh, c)| (sh, c.substitute(v, &line)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Deterministic canonical text: one `(du,dv): coeff` line per term.
    pub fn to_table_text(&self) -> String {
        let mut out = String::new();
        for (&(du, dv), c) in &self.terms {
            out.push_str(&format!("({du},{dv}): {c}\n"));
        }
        out
    }
}

impl fmt::Display for ShiftOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_table_text())
    }
}

/// s1 = (v - 2u - 1)/2 as a polynomial.
pub fn s1_poly(reg: &Registry) -> MultiPoly {
    let u = MultiPoly::var(reg, "u");
    let v = MultiPoly::var(reg, "v");
    (&(&v - &u.scale(&ExactScalar::from_int(2))) - &MultiPoly::one(reg))
        .scale(&ExactScalar::from_ratio(1, 2))
}

/// s2 = (u - 1)/2 as a polynomial.
pub fn s2_poly(reg: &Registry) -> MultiPoly {
    let u = MultiPoly::var(reg, "u");
    (&u - &MultiPoly::one(reg)).scale(&ExactScalar::from_ratio(1, 2))
}

fn falling(p: &MultiPoly, steps: i64) -> MultiPoly {
    // p (p-1) ... (p-steps+1)
    let reg = p.registry().clone();
    let mut acc = MultiPoly::one(&reg);
    for j in 0..steps {
        acc = &acc * &(p - &MultiPoly::int(&reg, j));
    }
    acc
}

/// The transcribed action of the Casimir operators on the Poincare family
/// at weight 3, genus 2 (coefficients as displayed, with s1, s2 expanded).
pub fn casimir_rule(reg: &Registry, which: CasimirKind) -> ShiftOperator {
    let s1 = s1_poly(reg);
    let s2 = s2_poly(reg);
    let s12 = &s1 + &s2;
    let pi = MultiPoly::var(reg, "pi");
    let tau = MultiPoly::var(reg, "tau");
    let u = MultiPoly::var(reg, "u");
    let v = MultiPoly::var(reg, "v");
    let int = |n: i64| MultiPoly::int(reg, n);
    let mut op = ShiftOperator::zero(reg);
    match which {
        CasimirKind::C1 => {
            // 4 (s1^2 + 2 s1 s2 + 2 s2^2 + 2 s1 + 3 s2)
            let c00 = &(&(&(&(&s1 * &s1)
                + &(&s1 * &s2).scale(&ExactScalar::from_int(2)))
                + &(&s2 * &s2).scale(&ExactScalar::from_int(2)))
                + &s1.scale(&ExactScalar::from_int(2)))
                + &s2.scale(&ExactScalar::from_int(3));
            op.add_term((0, 0), c00.scale(&ExactScalar::from_int(4)));
            op.add_term((0, 2), (&pi * &s12).scale(&ExactScalar::from_int(-16)));
            op.add_term((2, 0), (&tau * &falling(&s1, 2)).scale(&ExactScalar::from_int(-8)));
            op.add_term((2, 2), (&(&pi * &tau) * &s1).scale(&ExactScalar::from_int(32)));
        }
        CasimirKind::C2 => {
            // constant term displayed directly in (u, v)
            let c00 = &(&(&(&(&(&(&(&u.pow(4).scale(&ExactScalar::from_int(17))
                + &v.pow(4).scale(&ExactScalar::from_int(2)))
                - &(&u * &v.pow(3)).scale(&ExactScalar::from_int(12)))
                + &(&u.pow(2) * &v.pow(2)).scale(&ExactScalar::from_int(30)))
                - &(&u.pow(3) * &v).scale(&ExactScalar::from_int(36)))
                + &u.pow(2).scale(&ExactScalar::from_int(15)))
                + &v.pow(2).scale(&ExactScalar::from_int(6)))
                - &(&u * &v).scale(&ExactScalar::from_int(18)))
                - &int(32);
            op.add_term((0, 0), c00);
            op.add_term(
                (0, 4),
                (&(&pi * &pi) * &(&s12 * &(&s12 + &MultiPoly::one(reg))))
                    .scale(&ExactScalar::from_int(256)),
            );
            // -128 pi (s1+s2)((s1+s2)^2 + 3(s1+s2) + 23/8)
            let poly = &(&(&s12 * &s12) + &s12.scale(&ExactScalar::from_int(3)))
                + &MultiPoly::ratio(reg, 23, 8);
            op.add_term(
                (0, 2),
                (&(&pi * &s12) * &poly).scale(&ExactScalar::from_int(-128)),
            );
            op.add_term(
                (4, 0),
                (&tau.pow(2) * &falling(&s1, 4)).scale(&ExactScalar::from_int(32)),
            );
            op.add_term(
                (4, 2),
                (&(&pi * &tau.pow(2)) * &falling(&s1, 3)).scale(&ExactScalar::from_int(-256)),
            );
            // -16 tau s1(s1-1)(7u^2 + 3v^2 - 9uv - u + 7/2)
            let q = &(&(&(&u.pow(2).scale(&ExactScalar::from_int(7))
                + &v.pow(2).scale(&ExactScalar::from_int(3)))
                - &(&u * &v).scale(&ExactScalar::from_int(9)))
                - &u)
                + &MultiPoly::ratio(reg, 7, 2);
            op.add_term(
                (2, 0),
                (&(&tau * &falling(&s1, 2)) * &q).scale(&ExactScalar::from_int(-16)),
            );
            op.add_term(
                (4, 4),
                (&(&pi.pow(2) * &tau.pow(2)) * &falling(&s1, 2))
                    .scale(&ExactScalar::from_int(512)),
            );
            // -64 pi tau s1 (4u^2 - 3uv - 10u + 9v - 8)
            let r = &(&(&(&u.pow(2).scale(&ExactScalar::from_int(4))
                - &(&u * &v).scale(&ExactScalar::from_int(3)))
                - &u.scale(&ExactScalar::from_int(10)))
                + &v.scale(&ExactScalar::from_int(9)))
                - &int(8);
            op.add_term(
                (2, 2),
                (&(&(&pi * &tau) * &s1) * &r).scale(&ExactScalar::from_int(-64)),
            );
            // -256 pi^2 tau (s1+s2)(4 s1 + 2 s2 + 1)
            let t = &(&s1.scale(&ExactScalar::from_int(4)) + &s2.scale(&ExactScalar::from_int(2)))
                + &MultiPoly::one(reg);
            op.add_term(
                (2, 4),
                (&(&pi.pow(2) * &tau) * &(&s12 * &t)).scale(&ExactScalar::from_int(-256)),
            );
        }
    }
    op
}

/// D+(u) with the scalar parameter given as an arbitrary polynomial `w`
/// (the symbol u itself, or a constant):
/// D+ = (C1^2 - C2 + 11 C1 - 2(w^2-1) C1 + 2(w^2-1)(w^2-4)) / 2.
pub fn dplus_op_at(reg: &Registry, w: &MultiPoly) -> ShiftOperator {
    let c1 = casimir_rule(reg, CasimirKind::C1);
    let c2 = casimir_rule(reg, CasimirKind::C2);
    let id = ShiftOperator::identity(reg);
    let w2m1 = &(w * w) - &MultiPoly::one(reg);
    let w2m4 = &(w * w) - &MultiPoly::int(reg, 4);
    c1.compose(&c1)
        .sub(&c2)
        .add(&c1.scale(&MultiPoly::int(reg, 11)))
        .sub(&c1.scale(&w2m1.scale(&ExactScalar::from_int(2))))
        .add(&id.scale(&(&w2m1 * &w2m4).scale(&ExactScalar::from_int(2))))
        .scale(&MultiPoly::ratio(reg, 1, 2))
}

pub fn dplus_op(reg: &Registry) -> ShiftOperator {
    dplus_op_at(reg, &MultiPoly::var(reg, "u"))
}

/// D-(v) with the scalar parameter given as a polynomial `w`:
/// D- = 2 C2 - C1^2 - 34 C1 - 2(w^2-9) C1 + (w^2-9)(w^2-1).
pub fn dminus_op_at(reg: &Registry, w: &MultiPoly) -> ShiftOperator {
    let c1 = casimir_rule(reg, CasimirKind::C1);
    let c2 = casimir_rule(reg, CasimirKind::C2);
    let id = ShiftOperator::identity(reg);
    let w2m9 = &(w * w) - &MultiPoly::int(reg, 9);
    let w2m1 = &(w * w) - &MultiPoly::one(reg);
    c2.scale(&MultiPoly::int(reg, 2))
        .sub(&c1.compose(&c1))
        .sub(&c1.scale(&MultiPoly::int(reg, 34)))
        .sub(&c1.scale(&w2m9.scale(&ExactScalar::from_int(2))))
        .add(&id.scale(&(&w2m9 * &w2m1)))
}

pub fn dminus_op(reg: &Registry) -> ShiftOperator {
    dminus_op_at(reg, &MultiPoly::var(reg, "v"))
}

/// The 6-term display for D+(u) acting on the family.
pub fn dplus_expected(reg: &Registry) -> ShiftOperator {
    let s1 = s1_poly(reg);
    let s2 = s2_poly(reg);
    let pi = MultiPoly::var(reg, "pi");
    let tau = MultiPoly::var(reg, "tau");
    let u = MultiPoly::var(reg, "u");
    let v = MultiPoly::var(reg, "v");
    let mut op = ShiftOperator::zero(reg);
    op.add_term(
        (4, 0),
        (&tau.pow(2) * &falling(&s1, 4)).scale(&ExactScalar::from_int(16)),
    );
    op.add_term(
        (4, 2),
        (&(&pi * &tau.pow(2)) * &falling(&s1, 3)).scale(&ExactScalar::from_int(-128)),
    );
    op.add_term(
        (4, 4),
        (&(&pi.pow(2) * &tau.pow(2)) * &falling(&s1, 2)).scale(&ExactScalar::from_int(256)),
    );
    // 8 tau s1(s1-1)(u+1)(v-2)
    op.add_term(
        (2, 0),
        (&(&tau * &falling(&s1, 2))
            * &(&(&u + &MultiPoly::one(reg)) * &(&v - &MultiPoly::int(reg, 2))))
            .scale(&ExactScalar::from_int(8)),
    );
    // -32 pi tau s1 (6 s1 s2 + 3 s1 + 8 s2^2 - 8)
    let q = &(&(&(&s1 * &s2).scale(&ExactScalar::from_int(6))
        + &s1.scale(&ExactScalar::from_int(3)))
        + &(&s2 * &s2).scale(&ExactScalar::from_int(8)))
        - &MultiPoly::int(reg, 8);
    op.add_term(
        (2, 2),
        (&(&(&pi * &tau) * &s1) * &q).scale(&ExactScalar::from_int(-32)),
    );
    // 64 pi^2 tau (v-u-2)(u-2)
    op.add_term(
        (2, 4),
        (&(&pi.pow(2) * &tau)
            * &(&(&(&v - &u) - &MultiPoly::int(reg, 2)) * &(&u - &MultiPoly::int(reg, 2))))
            .scale(&ExactScalar::from_int(64)),
    );
    op
}

/// The 4-term display for D-(v) acting on the family.
pub fn dminus_expected(reg: &Registry) -> ShiftOperator {
    let s1 = s1_poly(reg);
    let pi = MultiPoly::var(reg, "pi");
    let tau = MultiPoly::var(reg, "tau");
    let u = MultiPoly::var(reg, "u");
    let v = MultiPoly::var(reg, "v");
    let one = MultiPoly::one(reg);
    let vmu2 = &(&v - &u) - &MultiPoly::int(reg, 2);
    let mut op = ShiftOperator::zero(reg);
    // 64 pi^2 (v-u)(v-u-2)
    op.add_term(
        (0, 4),
        (&pi.pow(2) * &(&(&v - &u) * &vmu2)).scale(&ExactScalar::from_int(64)),
    );
    // 32 pi (u-1)(v+1)(v-u-2)
    op.add_term(
        (0, 2),
        (&pi * &(&(&(&u - &one) * &(&v + &one)) * &vmu2)).scale(&ExactScalar::from_int(32)),
    );
    // 128 pi tau s1(s1-2)(v+1)
    op.add_term(
        (2, 2),
        (&(&pi * &tau) * &(&(&s1 * &(&s1 - &MultiPoly::int(reg, 2))) * &(&v + &one)))
            .scale(&ExactScalar::from_int(128)),
    );
    // -256 pi^2 tau (v-u-2)^2
    op.add_term(
        (2, 4),
        (&(&pi.pow(2) * &tau) * &(&vmu2 * &vmu2)).scale(&ExactScalar::from_int(-256)),
    );
    op
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn reg() -> Registry {
        Registry::standard()
    }

    #[test]
    fn c1_spot_coefficients() {
        let reg = reg();
        let c1 = casimir_rule(&reg, CasimirKind::C1);
        assert_eq!(c1.num_terms(), 4);
        // (2,2): 32 pi tau s1
        let expected = (&(&MultiPoly::var(&reg, "pi") * &MultiPoly::var(&reg, "tau"))
            * &s1_poly(&reg))
            .scale(&ExactScalar::from_int(32));
        assert_eq!(c1.coeff((2, 2)), Some(&expected));
        assert_eq!(c1.coeff((4, 4)), None);
    }

    #[test]
    fn c2_has_nine_terms_with_sparse_support() {
        let reg = reg();
        let c2 = casimir_rule(&reg, CasimirKind::C2);
        assert_eq!(c2.num_terms(), 9);
        assert_eq!(c2.coeff((2, 6)), None);
    }

    #[test]
    fn identity_is_a_unit() {
        let reg = reg();
        let id = ShiftOperator::identity(&reg);
        let c2 = casimir_rule(&reg, CasimirKind::C2);
        assert_eq!(id.compose(&c2), c2);
        assert_eq!(c2.compose(&id), c2);
    }

    #[test]
    fn c1_compose_c1_cross_check() {
        // coefficient of C1 o C1 at (0,4) must be 256 pi^2 (s1+s2)(s1+s2+1):
        // this pins the skew convention (left coefficient shifted by the
        // right shift); the opposite convention fails this cross-check.
        let reg = reg();
        let c1 = casimir_rule(&reg, CasimirKind::C1);
        let sq = c1.compose(&c1);
        let s12 = &s1_poly(&reg) + &s2_poly(&reg);
        let pi = MultiPoly::var(&reg, "pi");
        let expected = (&pi.pow(2) * &(&s12 * &(&s12 + &MultiPoly::one(&reg))))
            .scale(&ExactScalar::from_int(256));
        assert_eq!(sq.coeff((0, 4)), Some(&expected));
    }

    fn random_sparse_op(reg: &Registry, rng: &mut StdRng) -> ShiftOperator {
        let mut op = ShiftOperator::zero(reg);
        for _ in 0..rng.gen_range(1..=3) {
            let sh = (2 * rng.gen_range(0..=2), 2 * rng.gen_range(0..=2));
            let mut c = MultiPoly::int(reg, rng.gen_range(-3..=3));
            for _ in 0..rng.gen_range(0..=2) {
                let sym = if rng.gen_bool(0.5) { "u" } else { "v" };
                c = &c * &MultiPoly::var(reg, sym);
            }
            op.add_term(sh, c);
        }
        op
    }

    #[test]
    fn composition_is_associative_and_distributive() {
        let reg = reg();
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..20 {
            let f = random_sparse_op(&reg, &mut rng);
            let g = random_sparse_op(&reg, &mut rng);
            let h = random_sparse_op(&reg, &mut rng);
            assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
            assert_eq!(
                f.compose(&g.add(&h)),
                f.compose(&g).add(&f.compose(&h))
            );
            assert_eq!(
                f.add(&g).compose(&h),
                f.compose(&h).add(&g.compose(&h))
            );
        }
    }

    #[test]
    fn dplus_matches_its_display() {
        let reg = reg();
        let residual = dplus_op(&reg).sub(&dplus_expected(&reg));
        assert!(residual.is_zero(), "residual: {residual}");
    }

    #[test]
    fn dminus_matches_its_display() {
        let reg = reg();
        let residual = dminus_op(&reg).sub(&dminus_expected(&reg));
        assert!(residual.is_zero(), "residual: {residual}");
    }

    #[test]
    fn casimirs_commute() {
        let reg = reg();
        let c1 = casimir_rule(&reg, CasimirKind::C1);
        let c2 = casimir_rule(&reg, CasimirKind::C2);
        assert!(c1.commutator(&c2).is_zero());
        assert!(c1.commutator(&c1).is_zero());
        assert!(c1.commutator(&ShiftOperator::identity(&reg)).is_zero());
    }

    #[test]
    fn dplus_restricted_to_the_line() {
        // On v = 2u+1 only the (2,4) term survives: 64 pi^2 tau (u-1)(u-2).
        let reg = reg();
        let restricted = dplus_op(&reg).restrict_line();
        assert_eq!(restricted.len(), 1);
        let (shift, coeff) = &restricted[0];
        assert_eq!(*shift, (2, 4));
        let u = MultiPoly::var(&reg, "u");
        let expected = (&(&MultiPoly::var(&reg, "pi").pow(2) * &MultiPoly::var(&reg, "tau"))
            * &(&(&u - &MultiPoly::one(&reg)) * &(&u - &MultiPoly::int(&reg, 2))))
            .scale(&ExactScalar::from_int(64));
        assert_eq!(coeff, &expected);
    }

    #[test]
    fn c1_restricted_drops_s1_terms() {
        let reg = reg();
        let restricted = casimir_rule(&reg, CasimirKind::C1).restrict_line();
        let shifts: Vec<Shift> = restricted.iter().map(|(s, _)| *s).collect();
        assert_eq!(shifts, vec![(0, 0), (0, 2)]);
        assert!(ShiftOperator::zero(&reg).restrict_line().is_empty());
    }

    #[test]
    fn dplus_one_relation() {
        // D+(1) = D+(u) - (u^2-1)(C1 - (u^2-4))
        let reg = reg();
        let u = MultiPoly::var(&reg, "u");
        let u2m1 = &(&u * &u) - &MultiPoly::one(&reg);
        let u2m4 = &(&u * &u) - &MultiPoly::int(&reg, 4);
        let c1 = casimir_rule(&reg, CasimirKind::C1);
        let correction = c1
            .sub(&ShiftOperator::identity(&reg).scale(&u2m4))
            .scale(&u2m1);
        let residual = dplus_op_at(&reg, &MultiPoly::one(&reg))
            .add(&correction)
            .sub(&dplus_op(&reg));
        assert!(residual.is_zero(), "residual: {residual}");
    }

    #[test]
    fn dminus_difference_divisible_by_v2_minus_9() {
        let reg = reg();
        let v = MultiPoly::var(&reg, "v");
        let v2m9 = &(&v * &v) - &MultiPoly::int(&reg, 9);
        let diff = dminus_op(&reg).sub(&dminus_op_at(&reg, &MultiPoly::int(&reg, 3)));
        for (_, c) in diff.terms() {
            assert!(c.try_div_exact(&v2m9).is_some(), "coefficient {c} not divisible");
        }
    }
}
