//! Finite combinatorics around the rank-2 root system: Weyl orbits,
//! Harish-Chandra factorization identities, Blattner parameters with
//! K-type cone membership, the Langlands-quotient constraint enumeration,
//! and the m0 determinant computation.

use crate::matrix::Mat;
use crate::poly::MultiPoly;
use crate::registry::Registry;
use crate::scalar::ExactScalar;
use num::{BigInt, BigRational, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

/// A weight (L1, L2) with exact rational entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Weight(pub BigRational, pub BigRational);

impl Weight {
    pub fn int(a: i64, b: i64) -> Self {
        Weight(
            BigRational::from_integer(BigInt::from(a)),
            BigRational::from_integer(BigInt::from(b)),
        )
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(&self.0 + &other.0, &self.1 + &other.1)
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.0 * &self.0 + &self.1 * &self.1
    }

    /// Euclidean pairing.
    pub fn dot(&self, other: &Weight) -> BigRational {
        &self.0 * &other.0 + &self.1 * &other.1
    }

    pub fn scale_int(&self, n: i64) -> Weight {
        let f = BigRational::from_integer(BigInt::from(n));
        Weight(&self.0 * &f, &self.1 * &f)
    }

    pub fn half(&self) -> Weight {
        let h = BigRational::new(BigInt::from(1), BigInt::from(2));
        Weight(&self.0 * &h, &self.1 * &h)
    }

    /// Dominant representative under the Weyl group (signed permutations):
    /// both coordinates nonnegative, in decreasing order.
    pub fn dominant(&self) -> Weight {
        let a = self.0.abs();
        let b = self.1.abs();
        if a >= b {
            Weight(a, b)
        } else {
            Weight(b, a)
        }
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// The C2 root system in Euclidean coordinates, with the two positive
/// systems used for the discrete-series parametrization and the single
/// positive compact root.
pub struct RootDatum;

impl RootDatum {
    pub fn all_roots() -> Vec<Weight> {
        let mut v = Vec::new();
        for (a, b) in [(0, 2), (0, -2), (2, 0), (-2, 0)] {
            v.push(Weight::int(a, b));
        }
        for a in [-1i64, 1] {
            for b in [-1i64, 1] {
                v.push(Weight::int(a, b));
            }
        }
        v
    }

    pub fn positive_system(sys: PositiveSystem) -> Vec<Weight> {
        match sys {
            PositiveSystem::Delta1 => vec![
                Weight::int(0, 2),
                Weight::int(1, -1),
                Weight::int(1, 1),
                Weight::int(2, 0),
            ],
            PositiveSystem::Delta2 => vec![
                Weight::int(0, -2),
                Weight::int(1, -1),
                Weight::int(1, 1),
                Weight::int(2, 0),
            ],
        }
    }

    pub fn compact_positive() -> Vec<Weight> {
        vec![Weight::int(1, -1)]
    }

    /// Cone generators for the K-type support, per positive system.
    pub fn ktype_cone(sys: PositiveSystem) -> [Weight; 2] {
        match sys {
            PositiveSystem::Delta1 => [Weight::int(0, 2), Weight::int(1, -1)],
            PositiveSystem::Delta2 => [Weight::int(1, 1), Weight::int(0, -2)],
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PositiveSystem {
    Delta1,
    Delta2,
}

/// Orbit under the order-8 group of signed coordinate permutations.
pub fn weyl_orbit(w: &Weight) -> BTreeSet<Weight> {
    let mut orbit = BTreeSet::new();
    for swap in [false, true] {
        for s1 in [1i64, -1] {
            for s2 in [1i64, -1] {
                let (a, b) = if swap {
                    (w.1.clone(), w.0.clone())
                } else {
                    (w.0.clone(), w.1.clone())
                };
                orbit.insert(Weight(
                    a * BigRational::from_integer(BigInt::from(s1)),
                    b * BigRational::from_integer(BigInt::from(s2)),
                ));
            }
        }
    }
    orbit
}

/// The two simple reflections in these coordinates.
pub fn simple_reflections(w: &Weight) -> [Weight; 2] {
    // s_{alpha_1} with alpha_1 = (0,2): negate the second coordinate.
    // s_{alpha_2} with alpha_2 = (1,-1): swap coordinates.
    [
        Weight(w.0.clone(), -w.1.clone()),
        Weight(w.1.clone(), w.0.clone()),
    ]
}

/// Is `w` in the Weyl orbit of (1, s) for some parameter s, i.e. has a
/// coordinate of absolute value 1?
pub fn in_one_s_orbit(w: &Weight) -> bool {
    let one = BigRational::from_integer(BigInt::from(1));
    w.0.abs() == one || w.1.abs() == one
}

/// beta = (1/2) sum of positive roots - sum of positive compact roots,
/// recomputed from the root sums.
pub fn blattner_beta(sys: PositiveSystem) -> Weight {
    let mut half_sum = Weight::int(0, 0);
    for r in RootDatum::positive_system(sys) {
        half_sum = half_sum.add(&r);
    }
    let mut beta = half_sum.half();
    for r in RootDatum::compact_positive() {
        beta = beta.add(&r.scale_int(-1));
    }
    beta
}

pub fn is_dominant_regular(w: &Weight, sys: PositiveSystem) -> bool {
    RootDatum::positive_system(sys)
        .iter()
        .all(|r| w.dot(r).is_positive())
}

/// Blattner parameter k = Lambda + beta for Lambda dominant regular.
pub fn blattner(lambda: &Weight, sys: PositiveSystem) -> Option<Weight> {
    if !is_dominant_regular(lambda, sys) {
        return None;
    }
    Some(lambda.add(&blattner_beta(sys)))
}

/// Does the K-type `target` occur in the module with Blattner parameter
/// `k`: is target or -target of the form k + n1 g1 + n2 g2 with n >= 0
/// integral, over the system's cone generators?
pub fn ktype_occurs(k: &Weight, target: &Weight, sys: PositiveSystem) -> bool {
    let [g1, g2] = RootDatum::ktype_cone(sys);
    [target.clone(), target.scale_int(-1)]
        .iter()
        .any(|t| in_cone(&Weight(&t.0 - &k.0, &t.1 - &k.1), &g1, &g2))
}

fn in_cone(d: &Weight, g1: &Weight, g2: &Weight) -> bool {
    // Solve d = n1 g1 + n2 g2 exactly (the generator pairs used here are
    // linearly independent).
    let det = &g1.0 * &g2.1 - &g2.0 * &g1.1;
    assert!(!det.is_zero());
    let n1 = (&d.0 * &g2.1 - &g2.0 * &d.1) / det.clone();
    let n2 = (&g1.0 * &d.1 - &d.0 * &g1.1) / det;
    for n in [&n1, &n2] {
        if !n.is_integer() || n.is_negative() {
            return false;
        }
    }
    true
}

/// One Langlands-quotient candidate surviving the constraint enumeration.
#[derive(Clone, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct LanglandsCandidate {
    pub parabolic: String,
    pub sigma: String,
    pub nu: String,
    pub inf_char: (String, String),
    /// The constraint trail that admitted this candidate.
    pub constraints: Vec<String>,
}

/// Enumerate the finitely many non-discrete-series candidates with
/// infinitesimal character in the orbit of (1, s): the Siegel, Klingen and
/// Borel parabolic cases with their unitarity/parity/norm constraints.
pub fn langlands_enumerate() -> Vec<LanglandsCandidate> {
    let mut out = Vec::new();

    // Siegel parabolic: Lambda = (n+z, -n+z), n odd, z integral with
    // 0 <= z <= 1, Lambda in the (1,s) orbit. Scan a window wide enough
    // that the orbit membership bound |n +- z| = 1 is exhausted.
    for n in (1i64..50).step_by(2) {
        for z in 0..=1i64 {
            let lam = Weight::int(n + z, -n + z);
            if in_one_s_orbit(&lam) {
                out.push(LanglandsCandidate {
                    parabolic: "Siegel".into(),
                    sigma: "sigma_2^+ (minimal type 2, even K-cap-M types)".into(),
                    nu: "0".into(),
                    inf_char: (lam.0.to_string(), lam.1.to_string()),
                    constraints: vec![
                        "n odd".into(),
                        "z integral with 0 <= z <= 1".into(),
                        "orbit: a coordinate of Lambda = (n+z, -n+z) equals +-1".into(),
                        "parity: even K-cap-M types exclude the odd scalar K-type (3,3)".into(),
                    ],
                });
            }
        }
    }

    // Klingen parabolic: Lambda = (2z, 2n) with 2z = +-1 forced by the
    // orbit, and ||Lambda||^2 <= ||delta||^2 = 5 for the residual spectrum.
    let delta_norm = Weight::int(2, 1).norm_sqr();
    for n in 0i64..50 {
        let lam = Weight(
            BigRational::new(BigInt::from(1), BigInt::from(1)),
            BigRational::from_integer(BigInt::from(2 * n)),
        );
        if lam.norm_sqr() <= delta_norm {
            out.push(LanglandsCandidate {
                parabolic: "Klingen".into(),
                sigma: if n == 0 {
                    "(sigma_1^-, +) (minimal type 1)".into()
                } else {
                    "(sigma_2^+-, -) (minimal type 2)".into()
                },
                nu: "e1".into(),
                inf_char: (lam.0.to_string(), lam.1.to_string()),
                constraints: vec![
                    "orbit: 2z = +-1, normalized to 2z = 1".into(),
                    "residual-spectrum norm bound ||Lambda||^2 <= 5".into(),
                ],
            });
        }
    }

    // Borel: nu = (z1, z2) real with z1 >= z2 >= 0 and z1 + z2 <= 1, in the
    // orbit of (1, s); plus the isolated point (2, 1). The orbit condition
    // pins a coordinate to 1; z2 = 1 forces z1 + z2 >= 2, so z1 = 1, z2 = 0.
    out.push(LanglandsCandidate {
        parabolic: "Borel".into(),
        sigma: "trivial".into(),
        nu: "(1,0)".into(),
        inf_char: ("1".into(), "0".into()),
        constraints: vec![
            "z1 >= z2 >= 0 real with z1 + z2 <= 1".into(),
            "orbit: a coordinate equals 1; z2 = 1 is excluded by the sum bound".into(),
        ],
    });
    out.push(LanglandsCandidate {
        parabolic: "Borel".into(),
        sigma: "trivial".into(),
        nu: "(2,1)".into(),
        inf_char: ("2".into(), "1".into()),
        constraints: vec!["isolated unitary point (z1, z2) = (2, 1)".into()],
    });

    out.sort();
    out
}

/// The distinct infinitesimal characters of the enumeration.
pub fn langlands_inf_chars() -> BTreeSet<(String, String)> {
    langlands_enumerate()
        .into_iter()
        .map(|c| c.inf_char)
        .collect()
}

/// Substituting the Harish-Chandra images of C1 and C2 into the polynomial
/// definitions of D+(u) and D-(v) must give the stated factorizations:
/// D+ = (L1^2-u^2)(L2^2-u^2), D- = ((L1+L2)^2-v^2)((L1-L2)^2-v^2).
pub fn hc_factorization_residuals(reg: &Registry) -> (MultiPoly, MultiPoly) {
    let l1 = MultiPoly::var(reg, "L1");
    let l2 = MultiPoly::var(reg, "L2");
    let u = MultiPoly::var(reg, "u");
    let v = MultiPoly::var(reg, "v");
    let lc1 = &(&(&l1 * &l1) + &(&l2 * &l2)) - &MultiPoly::int(reg, 5);
    let lc2 = &(&(&l1.pow(4) + &l2.pow(4)) - &MultiPoly::int(reg, 17))
        + &lc1.scale(&ExactScalar::from_int(3));
    let one = MultiPoly::one(reg);
    let u2 = &u * &u;
    let v2 = &v * &v;

    let dplus = (&(&(&(&(&lc1 * &lc1) - &lc2) + &lc1.scale(&ExactScalar::from_int(11)))
        - &(&(&u2 - &one).scale(&ExactScalar::from_int(2)) * &lc1))
        + &(&(&u2 - &one) * &(&u2 - &MultiPoly::int(reg, 4))).scale(&ExactScalar::from_int(2)))
        .scale(&ExactScalar::from_ratio(1, 2));
    let dplus_factored = &(&(&l1 * &l1) - &u2) * &(&(&l2 * &l2) - &u2);

    let dminus = &(&(&(&lc2.scale(&ExactScalar::from_int(2)) - &(&lc1 * &lc1))
        - &lc1.scale(&ExactScalar::from_int(34)))
        - &(&(&v2 - &MultiPoly::int(reg, 9)).scale(&ExactScalar::from_int(2)) * &lc1))
        + &(&(&v2 - &MultiPoly::int(reg, 9)) * &(&v2 - &one));
    let sum = &l1 + &l2;
    let diff = &l1 - &l2;
    let dminus_factored = &(&(&sum * &sum) - &v2) * &(&(&diff * &diff) - &v2);

    (&dplus - &dplus_factored, &dminus - &dminus_factored)
}

/// The m0 block computation: m0 = m(1, [[0,1],[-1,0]]) as a 4x4 matrix,
/// psi(m0) = C*i + D from the lower blocks, then det and det^3.
pub struct M0Report {
    pub det: ExactScalar,
    pub det_cubed: ExactScalar,
    pub det_conj_cubed: ExactScalar,
}

pub fn m0_check() -> M0Report {
    // m(lambda, g) for lambda = 1, g = [[a,b],[c,d]] = [[0,1],[-1,0]],
    // nu = det g = 1: diag-embedded as rows/cols (lambda, a..b, nu/lambda, c..d).
    let e = |n: i64| ExactScalar::from_int(n);
    let m0 = Mat::from_rows(vec![
        vec![e(1), e(0), e(0), e(0)],
        vec![e(0), e(0), e(0), e(1)],
        vec![e(0), e(0), e(1), e(0)],
        vec![e(0), e(-1), e(0), e(0)],
    ]);
    let c = m0.block2(1, 0);
    let d = m0.block2(1, 1);
    let ci_plus_d = &c.scale(&ExactScalar::i()) + &d;
    let det = ci_plus_d.det2();
    M0Report {
        det_cubed: det.pow(3),
        det_conj_cubed: det.conj().pow(3),
        det,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_orbit_sizes() {
        assert_eq!(weyl_orbit(&Weight::int(2, 1)).len(), 8);
        assert_eq!(weyl_orbit(&Weight::int(0, 0)).len(), 1);
        assert_eq!(weyl_orbit(&Weight::int(1, 1)).len(), 4);
        for w in [Weight::int(2, 1), Weight::int(1, 1), Weight::int(3, 0)] {
            let orbit = weyl_orbit(&w);
            assert_eq!(8 % orbit.len(), 0, "orbit size must divide 8");
            // closed under the simple reflections
            for x in &orbit {
                for r in simple_reflections(x) {
                    assert!(orbit.contains(&r));
                }
            }
        }
    }

    #[test]
    fn blattner_betas_from_root_sums() {
        assert_eq!(blattner_beta(PositiveSystem::Delta1), Weight::int(1, 2));
        assert_eq!(blattner_beta(PositiveSystem::Delta2), Weight::int(1, 0));
    }

    #[test]
    fn blattner_parameters() {
        assert_eq!(
            blattner(&Weight::int(2, 1), PositiveSystem::Delta1),
            Some(Weight::int(3, 3))
        );
        for l1 in 2..=8i64 {
            assert_eq!(
                blattner(&Weight::int(l1, 1), PositiveSystem::Delta1),
                Some(Weight::int(l1 + 1, 3))
            );
            assert_eq!(
                blattner(&Weight::int(l1, -1), PositiveSystem::Delta2),
                Some(Weight::int(l1 + 1, -1))
            );
        }
        // non-dominant input is rejected
        assert_eq!(blattner(&Weight::int(1, 1), PositiveSystem::Delta1), None);
    }

    #[test]
    fn ktype_scan_flags_only_lambda1_equals_2() {
        let target = Weight::int(3, 3);
        let mut hits = Vec::new();
        for l1 in 2..=50i64 {
            let k = blattner(&Weight::int(l1, 1), PositiveSystem::Delta1).unwrap();
            if ktype_occurs(&k, &target, PositiveSystem::Delta1) {
                hits.push(l1);
            }
        }
        assert_eq!(hits, vec![2]);
    }

    #[test]
    fn ktype_trivial_and_excluded_cases() {
        let t = Weight::int(3, 3);
        assert!(ktype_occurs(&Weight::int(3, 3), &t, PositiveSystem::Delta1));
        // the Delta2 case k = (3,-1) admits (3,3) at the cone level; the
        // exclusion in the source is representation-theoretic, recorded as
        // an assumption rather than recomputed.
        assert!(ktype_occurs(&Weight::int(3, -1), &t, PositiveSystem::Delta2));
    }

    #[test]
    fn langlands_candidates() {
        let chars = langlands_inf_chars();
        let expected: BTreeSet<(String, String)> = [
            ("1", "-1"),
            ("1", "0"),
            ("1", "2"),
            ("2", "1"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        assert_eq!(chars, expected);
        // Siegel contributes exactly one candidate, (1,-1) at nu = 0.
        let siegel: Vec<_> = langlands_enumerate()
            .into_iter()
            .filter(|c| c.parabolic == "Siegel")
            .collect();
        assert_eq!(siegel.len(), 1);
        assert_eq!(siegel[0].inf_char, ("1".to_string(), "-1".to_string()));
    }

    #[test]
    fn hc_factorizations_are_identities() {
        let reg = Registry::standard();
        let (rp, rm) = hc_factorization_residuals(&reg);
        assert!(rp.is_zero(), "D+ residual: {rp}");
        assert!(rm.is_zero(), "D- residual: {rm}");
    }

    #[test]
    fn hc_factorization_spot_value() {
        // Lambda = (2,1), u = 1: (4-1)(1-1) = 0.
        let reg = Registry::standard();
        let l1 = MultiPoly::var(&reg, "L1");
        let l2 = MultiPoly::var(&reg, "L2");
        let u = MultiPoly::var(&reg, "u");
        let dplus = &(&(&l1 * &l1) - &(&u * &u)) * &(&(&l2 * &l2) - &(&u * &u));
        let mut vals = vec![ExactScalar::zero(); reg.len()];
        vals[reg.sym("L1").0] = ExactScalar::from_int(2);
        vals[reg.sym("L2").0] = ExactScalar::one();
        vals[reg.sym("u").0] = ExactScalar::one();
        assert!(dplus.eval_exact(&vals).is_zero());
    }

    #[test]
    fn m0_determinant() {
        let r = m0_check();
        assert_eq!(r.det, -ExactScalar::i());
        assert_eq!(r.det_cubed, ExactScalar::i());
        assert_eq!(r.det_conj_cubed, -ExactScalar::i());
        assert!(r.det.norm_sqr() == num::BigRational::from_integer(BigInt::from(1)));
    }
}
