//! Dense exact 4×4 matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::scalar::ExactScalar;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MatrixC4 {
    e: [[ExactScalar; 4]; 4],
}

impl Default for MatrixC4 {
    fn default() -> Self {
        Self::zero()
    }
}

impl MatrixC4 {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> ExactScalar) -> Self {
        MatrixC4 { e: std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))) }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| ExactScalar::zero())
    }

    pub fn identity() -> Self {
        Self::scalar(ExactScalar::one())
    }

    pub fn scalar(s: ExactScalar) -> Self {
        Self::from_fn(|r, c| if r == c { s.clone() } else { ExactScalar::zero() })
    }

    pub fn diag(d: [ExactScalar; 4]) -> Self {
        Self::from_fn(|r, c| if r == c { d[r].clone() } else { ExactScalar::zero() })
    }

    /// Builds `[[a, b], [c, d]]` from 2×2 blocks.
    pub fn from_blocks(blocks: [[&Matrix2; 2]; 2]) -> Self {
        Self::from_fn(|r, c| blocks[r / 2][c / 2][r % 2][c % 2].clone())
    }

    pub fn get(&self, r: usize, c: usize) -> &ExactScalar {
        &self.e[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ExactScalar) {
        self.e[r][c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(ExactScalar::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = &ExactScalar> {
        self.e.iter().flatten()
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|r, c| self.e[r][c].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.e[c][r].clone())
    }

    pub fn dagger(&self) -> Self {
        Self::from_fn(|r, c| self.e[c][r].conj())
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Self::from_fn(|r, c| s * &self.e[r][c])
    }

    pub fn to_complex(&self) -> [[Complex64; 4]; 4] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.e[r][c].to_complex()))
    }
}

impl<'a> Mul<&'a MatrixC4> for &'a MatrixC4 {
    type Output = MatrixC4;
    fn mul(self, o: &MatrixC4) -> MatrixC4 {
        let mut out = MatrixC4::zero();
        for r in 0..4 {
            for k in 0..4 {
                let a = &self.e[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..4 {
                    if !o.e[k][c].is_zero() {
                        out.e[r][c] += &(a * &o.e[k][c]);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a MatrixC4> for &'a MatrixC4 {
    type Output = MatrixC4;
    fn add(self, o: &MatrixC4) -> MatrixC4 {
        MatrixC4::from_fn(|r, c| &self.e[r][c] + &o.e[r][c])
    }
}

impl<'a> Sub<&'a MatrixC4> for &'a MatrixC4 {
    type Output = MatrixC4;
    fn sub(self, o: &MatrixC4) -> MatrixC4 {
        MatrixC4::from_fn(|r, c| &self.e[r][c] - &o.e[r][c])
    }
}

impl Neg for &MatrixC4 {
    type Output = MatrixC4;
    fn neg(self) -> MatrixC4 {
        MatrixC4::from_fn(|r, c| -&self.e[r][c])
    }
}

impl fmt::Display for MatrixC4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.e.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
            if i < 3 {
                write!(f, "; ")?;
            }
        }
        Ok(())
    }
}

/// 2×2 exact block.
pub type Matrix2 = [[ExactScalar; 2]; 2];

/// Pauli matrices σ¹, σ², σ³.
pub fn pauli() -> [Matrix2; 3] {
    let z = ExactScalar::zero;
    let one = ExactScalar::one;
    let i = ExactScalar::i;
    [
        [[z(), one()], [one(), z()]],
        [[z(), -i()], [i(), z()]],
        [[one(), z()], [z(), -one()]],
    ]
}

pub fn zero2() -> Matrix2 {
    std::array::from_fn(|_| std::array::from_fn(|_| ExactScalar::zero()))
}

pub fn identity2() -> Matrix2 {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| if r == c { ExactScalar::one() } else { ExactScalar::zero() })
    })
}

pub fn neg2(m: &Matrix2) -> Matrix2 {
    std::array::from_fn(|r| std::array::from_fn(|c| -&m[r][c]))
}

pub fn mul2(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    std::array::from_fn(|r| std::array::from_fn(|c| &(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c])))
}
