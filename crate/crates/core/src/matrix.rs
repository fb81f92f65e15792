//! Dense exact matrices over Gaussian rationals. Only the small sizes the
//! engine needs: 4x4 for the symplectic Lie algebra in its defining
//! representation, 2x2 for block extraction and determinants.

use crate::scalar::ExactScalar;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<ExactScalar>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![ExactScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = ExactScalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c));
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn conj(&self) -> Mat {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = v.conj();
        }
        out
    }

    pub fn scale(&self, c: &ExactScalar) -> Mat {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ExactScalar::is_zero)
    }

    pub fn commutator(&self, other: &Mat) -> Mat {
        &(self * other) - &(other * self)
    }

    /// 2x2 block at block-position (bi, bj) of a 4x4 matrix.
    pub fn block2(&self, bi: usize, bj: usize) -> Mat {
        assert_eq!((self.rows, self.cols), (4, 4));
        let mut out = Mat::zero(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                out[(i, j)] = self[(2 * bi + i, 2 * bj + j)].clone();
            }
        }
        out
    }

    pub fn det2(&self) -> ExactScalar {
        assert_eq!((self.rows, self.cols), (2, 2));
        &(&self[(0, 0)] * &self[(1, 1)]) - &(&self[(0, 1)] * &self[(1, 0)])
    }

    /// Solve the linear system `sum_j x_j basis_j = target` exactly by
    /// Gaussian elimination over the flattened entries. Returns None if the
    /// target lies outside the span, or if the solution is not unique.
    pub fn solve_in_span(basis: &[Mat], target: &Mat) -> Option<Vec<ExactScalar>> {
        let n_eq = target.rows * target.cols;
        let n_var = basis.len();
        // Augmented matrix [A | b], A[:, j] = flattened basis_j.
        let mut aug: Vec<Vec<ExactScalar>> = (0..n_eq)
            .map(|e| {
                let mut row: Vec<ExactScalar> =
                    basis.iter().map(|m| m.data[e].clone()).collect();
                row.push(target.data[e].clone());
                row
            })
            .collect();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..n_var {
            let Some(p) = (r..n_eq).find(|&i| !aug[i][c].is_zero()) else {
                continue;
            };
            aug.swap(r, p);
            let inv = aug[r][c].inv();
            for x in aug[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..n_eq {
                if i != r && !aug[i][c].is_zero() {
                    let f = aug[i][c].clone();
                    for j in 0..=n_var {
                        let sub = &aug[r][j] * &f;
                        aug[i][j] = &aug[i][j] - &sub;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == n_eq {
                break;
            }
        }
        // Inconsistent system: a zero row with nonzero rhs.
        for row in aug.iter().skip(r) {
            if row[..n_var].iter().all(ExactScalar::is_zero) && !row[n_var].is_zero() {
                return None;
            }
        }
        if pivot_cols.len() != n_var {
            return None; // basis not independent; solution not unique
        }
        let mut x = vec![ExactScalar::zero(); n_var];
        for (row, &c) in pivot_cols.iter().enumerate() {
            x[c] = aug[row][n_var].clone();
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = ExactScalar;
    fn index(&self, (i, j): (usize, usize)) -> &ExactScalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ExactScalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        out
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
        out
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = ExactScalar::zero();
                for l in 0..self.cols {
                    acc += &(&self[(i, l)] * &rhs[(l, j)]);
                }
                out[(i, j)] = acc;
            }
        }
        out
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        self.scale(&ExactScalar::from_int(-1))
    }
}
