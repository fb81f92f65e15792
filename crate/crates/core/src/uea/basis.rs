//! The ten basis elements of sp(2) as concrete 4x4 matrices, their exact
//! structure constants, and the two letter orderings used for PBW forms.

use crate::matrix::Mat;
use crate::scalar::ExactScalar;
use std::fmt;
use std::sync::OnceLock;

/// Basis letters. The declaration order is the `scalarK` PBW order:
/// all raising letters, then all lowering letters, then the compact ones.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LieTag {
    Ep11,
    Ep12,
    Ep22,
    Em11,
    Em12,
    Em22,
    B11,
    B12,
    B21,
    B22,
}

pub const ALL_TAGS: [LieTag; 10] = [
    LieTag::Ep11,
    LieTag::Ep12,
    LieTag::Ep22,
    LieTag::Em11,
    LieTag::Em12,
    LieTag::Em22,
    LieTag::B11,
    LieTag::B12,
    LieTag::B21,
    LieTag::B22,
];

impl LieTag {
    pub fn is_compact(self) -> bool {
        matches!(self, LieTag::B11 | LieTag::B12 | LieTag::B21 | LieTag::B22)
    }

    pub fn is_cartan(self) -> bool {
        matches!(self, LieTag::B11 | LieTag::B22)
    }

    pub fn index(self) -> usize {
        ALL_TAGS.iter().position(|&t| t == self).unwrap()
    }

    /// The raising letter E+(k,l), stored with k <= l.
    pub fn eplus(k: usize, l: usize) -> LieTag {
        match (k.min(l), k.max(l)) {
            (1, 1) => LieTag::Ep11,
            (1, 2) => LieTag::Ep12,
            (2, 2) => LieTag::Ep22,
            _ => panic!("bad index"),
        }
    }

    pub fn eminus(k: usize, l: usize) -> LieTag {
        match (k.min(l), k.max(l)) {
            (1, 1) => LieTag::Em11,
            (1, 2) => LieTag::Em12,
            (2, 2) => LieTag::Em22,
            _ => panic!("bad index"),
        }
    }

    pub fn b(k: usize, l: usize) -> LieTag {
        match (k, l) {
            (1, 1) => LieTag::B11,
            (1, 2) => LieTag::B12,
            (2, 1) => LieTag::B21,
            (2, 2) => LieTag::B22,
            _ => panic!("bad index"),
        }
    }
}

impl fmt::Display for LieTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LieTag::Ep11 => "Ep11",
            LieTag::Ep12 => "Ep12",
            LieTag::Ep22 => "Ep22",
            LieTag::Em11 => "Em11",
            LieTag::Em12 => "Em12",
            LieTag::Em22 => "Em22",
            LieTag::B11 => "B11",
            LieTag::B12 => "B12",
            LieTag::B21 => "B21",
            LieTag::B22 => "B22",
        };
        write!(f, "{name}")
    }
}

/// PBW letter orderings.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ordering {
    /// raising < lowering < compact; used for the scalar K-type evaluation.
    ScalarK,
    /// negative-root letters < Cartan letters < positive-root letters,
    /// where the positive root vectors are B12 and the lowering letters.
    BorelHC,
}

impl Ordering {
    pub fn rank(self, tag: LieTag) -> u8 {
        match self {
            Ordering::ScalarK => tag.index() as u8,
            Ordering::BorelHC => match tag {
                LieTag::B21 => 0,
                LieTag::Ep11 => 1,
                LieTag::Ep12 => 2,
                LieTag::Ep22 => 3,
                LieTag::B11 => 4,
                LieTag::B22 => 5,
                LieTag::B12 => 6,
                LieTag::Em11 => 7,
                LieTag::Em12 => 8,
                LieTag::Em22 => 9,
            },
        }
    }

    /// Root-vector letters for the Harish-Chandra kernel under this order.
    pub fn is_root_letter(self, tag: LieTag) -> bool {
        !tag.is_cartan()
    }
}

fn elementary2(k: usize, l: usize) -> Mat {
    let mut m = Mat::zero(2, 2);
    m[(k - 1, l - 1)] = ExactScalar::one();
    m
}

fn assemble4(a: &Mat, b: &Mat, c: &Mat, d: &Mat) -> Mat {
    let mut m = Mat::zero(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = a[(i, j)].clone();
            m[(i, j + 2)] = b[(i, j)].clone();
            m[(i + 2, j)] = c[(i, j)].clone();
            m[(i + 2, j + 2)] = d[(i, j)].clone();
        }
    }
    m
}

/// The symplectic form [[0, -E], [E, 0]].
pub fn symplectic_form() -> Mat {
    let e2 = Mat::identity(2);
    let z = Mat::zero(2, 2);
    assemble4(&z, &(-&e2), &e2, &z)
}

/// The defining 4x4 matrix of a basis letter:
/// E±(k,l) = [[X, ±iX], [±iX, -X]] with X = (e_kl + e_lk)/2;
/// B(k,l)  = [[A, S], [-S, A]] with A = (e_kl - e_lk)/2, S = i(e_kl + e_lk)/2.
pub fn basis_matrix(tag: LieTag) -> Mat {
    let half = ExactScalar::from_ratio(1, 2);
    let half_i = ExactScalar::imag_ratio(1, 2);
    let build_e = |k: usize, l: usize, sign: i64| {
        let x = (&elementary2(k, l) + &elementary2(l, k)).scale(&half);
        let ix = x.scale(&ExactScalar::imag_ratio(sign, 1));
        assemble4(&x, &ix, &ix, &(-&x))
    };
    let build_b = |k: usize, l: usize| {
        let a = (&elementary2(k, l) - &elementary2(l, k)).scale(&half);
        let s = (&elementary2(k, l) + &elementary2(l, k)).scale(&half_i);
        assemble4(&a, &s, &(-&s), &a)
    };
    match tag {
        LieTag::Ep11 => build_e(1, 1, 1),
        LieTag::Ep12 => build_e(1, 2, 1),
        LieTag::Ep22 => build_e(2, 2, 1),
        LieTag::Em11 => build_e(1, 1, -1),
        LieTag::Em12 => build_e(1, 2, -1),
        LieTag::Em22 => build_e(2, 2, -1),
        LieTag::B11 => build_b(1, 1),
        LieTag::B12 => build_b(1, 2),
        LieTag::B21 => build_b(2, 1),
        LieTag::B22 => build_b(2, 2),
    }
}

type BracketTable = Vec<Vec<Vec<(LieTag, ExactScalar)>>>;

fn structure_table() -> &'static BracketTable {
    static TABLE: OnceLock<BracketTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mats: Vec<Mat> = ALL_TAGS.iter().map(|&t| basis_matrix(t)).collect();
        let mut table = vec![vec![Vec::new(); 10]; 10];
        for (i, x) in mats.iter().enumerate() {
            for (j, y) in mats.iter().enumerate() {
                let c = x.commutator(y);
                if c.is_zero() {
                    continue;
                }
                let coeffs = Mat::solve_in_span(&mats, &c).unwrap_or_else(|| {
                    panic!(
                        "commutator [{}, {}] escapes the basis span",
                        ALL_TAGS[i], ALL_TAGS[j]
                    )
                });
                table[i][j] = ALL_TAGS
                    .iter()
                    .zip(coeffs)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(&t, c)| (t, c))
                    .collect();
            }
        }
        table
    })
}

/// Exact commutator [x, y] expanded in the ten-letter basis.
pub fn bracket(x: LieTag, y: LieTag) -> &'static [(LieTag, ExactScalar)] {
    &structure_table()[x.index()][y.index()]
}

/// Jacobi identity on every unordered triple of basis letters.
pub fn jacobi_holds_for_all_triples() -> bool {
    let add_nested = |acc: &mut std::collections::BTreeMap<LieTag, ExactScalar>,
                      a: LieTag,
                      b: LieTag,
                      c: LieTag| {
        // [a, [b, c]]
        for (t, coef) in bracket(b, c) {
            for (t2, coef2) in bracket(a, *t) {
                let entry = acc.entry(*t2).or_insert_with(ExactScalar::zero);
                *entry += &(coef * coef2);
            }
        }
    };
    for i in 0..10 {
        for j in (i + 1)..10 {
            for l in (j + 1)..10 {
                let (a, b, c) = (ALL_TAGS[i], ALL_TAGS[j], ALL_TAGS[l]);
                let mut acc = std::collections::BTreeMap::new();
                add_nested(&mut acc, a, b, c);
                add_nested(&mut acc, b, c, a);
                add_nested(&mut acc, c, a, b);
                if acc.values().any(|v| !v.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Deterministic text dump of the full structure-constant table.
pub fn structure_table_text() -> String {
    let mut out = String::new();
    for &x in &ALL_TAGS {
        for &y in &ALL_TAGS {
            let terms = bracket(x, y);
            if terms.is_empty() {
                continue;
            }
            let rhs = terms
                .iter()
                .map(|(t, c)| {
                    if c.is_one() {
                        format!("{t}")
                    } else if (-c).is_one() {
                        format!("-{t}")
                    } else {
                        format!("{c}*{t}")
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ");
            out.push_str(&format!("[{x},{y}] = {rhs}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrices_lie_in_the_symplectic_algebra() {
        let w = symplectic_form();
        for &t in &ALL_TAGS {
            let m = basis_matrix(t);
            let lhs = &(&m.transpose() * &w) + &(&w * &m);
            assert!(lhs.is_zero(), "{t} fails g'W + Wg = 0");
        }
    }

    #[test]
    fn bracket_b12_b21() {
        let terms = bracket(LieTag::B12, LieTag::B21);
        assert_eq!(
            terms,
            &[
                (LieTag::B11, ExactScalar::one()),
                (LieTag::B22, ExactScalar::from_int(-1))
            ]
        );
    }

    #[test]
    fn self_bracket_vanishes() {
        assert!(bracket(LieTag::B11, LieTag::B11).is_empty());
    }

    #[test]
    fn lowering_raising_bracket_is_compact() {
        let terms = bracket(LieTag::Em11, LieTag::Ep11);
        assert!(!terms.is_empty());
        assert!(terms.iter().all(|(t, _)| t.is_compact()));
    }

    #[test]
    fn jacobi_identity() {
        assert!(jacobi_holds_for_all_triples());
    }

    #[test]
    fn borel_ranks_are_a_permutation() {
        let mut ranks: Vec<u8> = ALL_TAGS
            .iter()
            .map(|&t| Ordering::BorelHC.rank(t))
            .collect();
        ranks.sort();
        assert_eq!(ranks, (0..10).collect::<Vec<u8>>());
    }
}
