//! Real-linear operators `Q = L + A·Ĉ` on 4-spinors, `Ĉψ = ψ*`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::matrix::MatrixC4;
use crate::scalar::{ExactScalar, RealQ2};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RealLinearOp {
    l: MatrixC4,
    a: MatrixC4,
}

/// Hermiticity class of an operator under [`RealLinearOp::adjoint`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Hermiticity {
    Hermitian,
    AntiHermitian,
    Neither,
    Zero,
}

impl Hermiticity {
    pub fn as_str(self) -> &'static str {
        match self {
            Hermiticity::Hermitian => "hermitian",
            Hermiticity::AntiHermitian => "anti-hermitian",
            Hermiticity::Neither => "neither",
            Hermiticity::Zero => "zero",
        }
    }
}

impl RealLinearOp {
    pub fn new(linear: MatrixC4, antilinear: MatrixC4) -> Self {
        RealLinearOp { l: linear, a: antilinear }
    }

    pub fn linear(m: MatrixC4) -> Self {
        RealLinearOp { l: m, a: MatrixC4::zero() }
    }

    /// `A·Ĉ`.
    pub fn antilinear(m: MatrixC4) -> Self {
        RealLinearOp { l: MatrixC4::zero(), a: m }
    }

    pub fn zero() -> Self {
        Self::linear(MatrixC4::zero())
    }

    pub fn identity() -> Self {
        Self::linear(MatrixC4::identity())
    }

    /// Complex conjugation Ĉ.
    pub fn conjugation() -> Self {
        Self::antilinear(MatrixC4::identity())
    }

    /// Left multiplication by a scalar, `c·I`.
    pub fn scalar(c: ExactScalar) -> Self {
        Self::linear(MatrixC4::scalar(c))
    }

    pub fn linear_part(&self) -> &MatrixC4 {
        &self.l
    }

    pub fn antilinear_part(&self) -> &MatrixC4 {
        &self.a
    }

    pub fn is_zero(&self) -> bool {
        self.l.is_zero() && self.a.is_zero()
    }

    pub fn is_linear(&self) -> bool {
        self.a.is_zero()
    }

    pub fn is_antilinear(&self) -> bool {
        self.l.is_zero()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &RealLinearOp) -> RealLinearOp {
        let l = &(&self.l * &other.l) + &(&self.a * &other.a.conj());
        let a = &(&self.l * &other.a) + &(&self.a * &other.l.conj());
        RealLinearOp { l, a }
    }

    /// `c·Q` (scalar applied after Q).
    pub fn scale(&self, c: &ExactScalar) -> RealLinearOp {
        RealLinearOp { l: self.l.scale(c), a: self.a.scale(c) }
    }

    /// `Q·c` (scalar applied before Q).
    pub fn scale_right(&self, c: &ExactScalar) -> RealLinearOp {
        RealLinearOp { l: self.l.scale(c), a: self.a.scale(&c.conj()) }
    }

    /// `(L + AĈ)† = L† + Aᵀ·Ĉ`.
    pub fn adjoint(&self) -> RealLinearOp {
        RealLinearOp { l: self.l.dagger(), a: self.a.transpose() }
    }

    pub fn is_anti_hermitian(&self) -> bool {
        self.adjoint() == -self
    }

    pub fn is_hermitian(&self) -> bool {
        self.adjoint() == *self
    }

    pub fn hermiticity(&self) -> Hermiticity {
        if self.is_zero() {
            Hermiticity::Zero
        } else if self.is_hermitian() {
            Hermiticity::Hermitian
        } else if self.is_anti_hermitian() {
            Hermiticity::AntiHermitian
        } else {
            Hermiticity::Neither
        }
    }

    /// 64 real coordinates over ℚ(√2): for each part, each entry, (re, im).
    pub fn real_coordinates(&self) -> Vec<RealQ2> {
        let mut v = Vec::with_capacity(64);
        for m in [&self.l, &self.a] {
            for e in m.entries() {
                v.push(e.re().clone());
                v.push(e.im().clone());
            }
        }
        v
    }

    /// Inverse of [`Self::real_coordinates`].
    pub fn from_real_coordinates(c: &[RealQ2]) -> RealLinearOp {
        assert_eq!(c.len(), 64, "expected 64 real coordinates");
        let part = |off: usize| {
            MatrixC4::from_fn(|r, col| {
                let k = off + 2 * (4 * r + col);
                ExactScalar::new(c[k].clone(), c[k + 1].clone())
            })
        };
        RealLinearOp { l: part(0), a: part(32) }
    }

    /// Multiplication by a real field element (commutes with Ĉ).
    pub fn scale_real(&self, r: &RealQ2) -> RealLinearOp {
        self.scale(&ExactScalar::real(r.clone()))
    }
}

pub fn commutator(q1: &RealLinearOp, q2: &RealLinearOp) -> RealLinearOp {
    &q1.compose(q2) - &q2.compose(q1)
}

pub fn anticommutator(q1: &RealLinearOp, q2: &RealLinearOp) -> RealLinearOp {
    &q1.compose(q2) + &q2.compose(q1)
}

/// Ordered product `q[0] q[1] ... q[n-1]`; identity for an empty slice.
pub fn product<'a>(ops: impl IntoIterator<Item = &'a RealLinearOp>) -> RealLinearOp {
    ops.into_iter().fold(RealLinearOp::identity(), |acc, q| acc.compose(q))
}

impl<'a> Mul<&'a RealLinearOp> for &'a RealLinearOp {
    type Output = RealLinearOp;
    fn mul(self, o: &RealLinearOp) -> RealLinearOp {
        self.compose(o)
    }
}

impl<'a> Add<&'a RealLinearOp> for &'a RealLinearOp {
    type Output = RealLinearOp;
    fn add(self, o: &RealLinearOp) -> RealLinearOp {
        RealLinearOp { l: &self.l + &o.l, a: &self.a + &o.a }
    }
}

impl<'a> Sub<&'a RealLinearOp> for &'a RealLinearOp {
    type Output = RealLinearOp;
    fn sub(self, o: &RealLinearOp) -> RealLinearOp {
        RealLinearOp { l: &self.l - &o.l, a: &self.a - &o.a }
    }
}

impl Neg for &RealLinearOp {
    type Output = RealLinearOp;
    fn neg(self) -> RealLinearOp {
        RealLinearOp { l: -&self.l, a: -&self.a }
    }
}

impl Mul for RealLinearOp {
    type Output = RealLinearOp;
    fn mul(self, o: RealLinearOp) -> RealLinearOp {
        self.compose(&o)
    }
}

impl Add for RealLinearOp {
    type Output = RealLinearOp;
    fn add(self, o: RealLinearOp) -> RealLinearOp {
        &self + &o
    }
}

impl Sub for RealLinearOp {
    type Output = RealLinearOp;
    fn sub(self, o: RealLinearOp) -> RealLinearOp {
        &self - &o
    }
}

impl Neg for RealLinearOp {
    type Output = RealLinearOp;
    fn neg(self) -> RealLinearOp {
        -&self
    }
}

impl fmt::Display for RealLinearOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L = {{{}}}, A = {{{}}}", self.l, self.a)
    }
}
