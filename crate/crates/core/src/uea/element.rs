//! Elements of the universal enveloping algebra: exact linear combinations
//! of letter words with rational-function coefficients in (kappa, L1, L2),
//! plus the PBW rewriting engine.

use super::basis::{basis_matrix, bracket, LieTag, Ordering};
use crate::matrix::Mat;
use crate::ratfunc::RatFunc;
use crate::registry::Registry;
use crate::scalar::ExactScalar;
use std::collections::BTreeMap;
use std::fmt;

pub type Word = Vec<LieTag>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UEAElement {
    registry: Registry,
    terms: BTreeMap<Word, RatFunc>,
}

impl UEAElement {
    pub fn zero(reg: &Registry) -> Self {
        UEAElement {
            registry: reg.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(reg: &Registry, c: RatFunc) -> Self {
        let mut e = UEAElement::zero(reg);
        e.add_word(Vec::new(), c);
        e
    }

    pub fn one(reg: &Registry) -> Self {
        UEAElement::scalar(reg, RatFunc::one(reg))
    }

    pub fn word(reg: &Registry, w: Word) -> Self {
        let mut e = UEAElement::zero(reg);
        e.add_word(w, RatFunc::one(reg));
        e
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn add_word(&mut self, w: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &UEAElement) -> UEAElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_word(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &UEAElement) -> UEAElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_word(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> UEAElement {
        let mut out = UEAElement::zero(&self.registry);
        for (w, a) in &self.terms {
            out.add_word(w.clone(), a * c);
        }
        out
    }

    /// Product by word concatenation.
    pub fn mul(&self, other: &UEAElement) -> UEAElement {
        let mut out = UEAElement::zero(&self.registry);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_word(w, c1 * c2);
            }
        }
        out
    }

    /// PBW normal ordering: rewrite until every word is nondecreasing in
    /// the chosen letter order, using x y = y x + [x, y]. Each step either
    /// removes an inversion at fixed length or shortens the word, so the
    /// rewriting terminates.
    pub fn pbw_normalize(&self, ord: Ordering) -> UEAElement {
        let mut out = UEAElement::zero(&self.registry);
        let mut work: Vec<(Word, RatFunc)> = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        while let Some((word, coeff)) = work.pop() {
            if coeff.is_zero() {
                continue;
            }
            let inv = word
                .windows(2)
                .position(|p| ord.rank(p[0]) > ord.rank(p[1]));
            match inv {
                None => out.add_word(word, coeff),
                Some(i) => {
                    let mut swapped = word.clone();
                    swapped.swap(i, i + 1);
                    for (tag, c) in bracket(word[i], word[i + 1]) {
                        let mut shorter = Word::with_capacity(word.len() - 1);
                        shorter.extend_from_slice(&word[..i]);
                        shorter.push(*tag);
                        shorter.extend_from_slice(&word[i + 2..]);
                        let lifted =
                            RatFunc::from_poly(crate::poly::MultiPoly::constant(&self.registry, c.clone()));
                        work.push((shorter, &coeff * &lifted));
                    }
                    work.push((swapped, coeff));
                }
            }
        }
        out
    }

    pub fn is_ordered(&self, ord: Ordering) -> bool {
        self.terms
            .keys()
            .all(|w| w.windows(2).all(|p| ord.rank(p[0]) <= ord.rank(p[1])))
    }

    /// Evaluate in the defining 4x4 representation, with the coefficient
    /// symbols bound to exact values. Words become matrix products.
    pub fn eval_in_rep(&self, vals: &[ExactScalar]) -> Mat {
        let mut acc = Mat::zero(4, 4);
        for (w, c) in &self.terms {
            let cv = c.eval_exact(vals).expect("coefficient pole at eval point");
            let mut m = Mat::identity(4);
            for &t in w {
                m = &m * &basis_matrix(t);
            }
            acc = &acc + &m.scale(&cv);
        }
        acc
    }

    /// Replace each maximal trailing block of compact letters by its value
    /// under the scalar K-type character chi(B_kl) = sigma * kappa * delta_kl,
    /// extended multiplicatively. Input must be in scalarK normal form, so
    /// compact letters only occur as a suffix.
    pub fn scalar_ktype_eval(&self, sigma: &ExactScalar) -> UEAElement {
        let reg = &self.registry;
        let kappa = RatFunc::var(reg, "kappa");
        let mut out = UEAElement::zero(reg);
        'term: for (w, c) in &self.terms {
            let split = w.iter().position(|t| t.is_compact()).unwrap_or(w.len());
            assert!(
                w[split..].iter().all(|t| t.is_compact()),
                "scalar_ktype_eval expects scalarK normal form"
            );
            let mut factor = RatFunc::one(reg);
            for &t in &w[split..] {
                match t {
                    LieTag::B11 | LieTag::B22 => {
                        factor = &factor * &kappa.scale(sigma);
                    }
                    _ => continue 'term, // chi(B12) = chi(B21) = 0
                }
            }
            out.add_word(w[..split].to_vec(), &c * &factor);
        }
        out
    }
}

impl fmt::Display for UEAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join(".")
            };
            write!(f, "({c})*{word}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::basis::ALL_TAGS;
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn reg() -> Registry {
        Registry::standard()
    }

    #[test]
    fn single_rewrite_step() {
        // B21.B12 -> B12.B21 - B11 + B22
        let reg = reg();
        let e = UEAElement::word(&reg, vec![LieTag::B21, LieTag::B12]);
        let n = e.pbw_normalize(Ordering::ScalarK);
        let mut expected = UEAElement::word(&reg, vec![LieTag::B12, LieTag::B21]);
        expected.add_word(vec![LieTag::B11], RatFunc::int(&reg, -1));
        expected.add_word(vec![LieTag::B22], RatFunc::one(&reg));
        assert_eq!(n, expected);
    }

    #[test]
    fn ordered_word_is_fixed_point() {
        let reg = reg();
        let e = UEAElement::word(&reg, vec![LieTag::Ep11, LieTag::Em12, LieTag::B11]);
        assert_eq!(e.pbw_normalize(Ordering::ScalarK), e);
    }

    #[test]
    fn normalize_is_projection_and_preserves_rep() {
        let reg = reg();
        let mut rng = StdRng::seed_from_u64(20240915);
        let vals: Vec<ExactScalar> = (0..reg.len())
            .map(|_| ExactScalar::from_ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
            .collect();
        for _ in 0..50 {
            let mut e = UEAElement::zero(&reg);
            for _ in 0..3 {
                let len = rng.gen_range(0..=3);
                let w: Word = (0..len)
                    .map(|_| ALL_TAGS[rng.gen_range(0..10)])
                    .collect();
                e.add_word(
                    w,
                    RatFunc::ratio(&reg, rng.gen_range(-4..=4), rng.gen_range(1..=3)),
                );
            }
            for ord in [Ordering::ScalarK, Ordering::BorelHC] {
                let n = e.pbw_normalize(ord);
                assert!(n.is_ordered(ord));
                assert_eq!(n.pbw_normalize(ord), n, "normalize must be a projection");
                assert_eq!(
                    n.eval_in_rep(&vals),
                    e.eval_in_rep(&vals),
                    "defining representation image changed"
                );
            }
        }
    }

    #[test]
    fn ktype_eval_drops_offdiagonal_b() {
        let reg = reg();
        let sigma = ExactScalar::one();
        let e = UEAElement::word(&reg, vec![LieTag::Ep11, LieTag::B12]);
        assert!(e.scalar_ktype_eval(&sigma).is_zero());
        let d = UEAElement::word(&reg, vec![LieTag::Ep11, LieTag::B22]);
        let out = d.scalar_ktype_eval(&sigma);
        let mut expected = UEAElement::zero(&reg);
        expected.add_word(vec![LieTag::Ep11], RatFunc::var(&reg, "kappa"));
        assert_eq!(out, expected);
    }

    #[test]
    fn pure_p_word_is_unchanged() {
        let reg = reg();
        let e = UEAElement::word(&reg, vec![LieTag::Ep12, LieTag::Em11]);
        assert_eq!(e.scalar_ktype_eval(&ExactScalar::i()), e);
    }
}
