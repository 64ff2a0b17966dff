//! Exact scalars in ℚ(√2) and ℚ(i, √2).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `a + b·√2` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RealQ2 {
    pub a: BigRational,
    pub b: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl RealQ2 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        RealQ2 { a, b }
    }

    pub fn zero() -> Self {
        RealQ2 { a: BigRational::zero(), b: BigRational::zero() }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(n: i64) -> Self {
        RealQ2 { a: rat(n, 1), b: BigRational::zero() }
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        RealQ2 { a: rat(n, d), b: BigRational::zero() }
    }

    pub fn sqrt2() -> Self {
        RealQ2 { a: BigRational::zero(), b: rat(1, 1) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Field norm `a² − 2b²`; zero only for the zero element.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - rat(2, 1) * &self.b * &self.b
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(RealQ2 { a: &self.a / &n, b: -&self.b / &n })
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN)
            + self.b.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }

    pub fn is_negative(&self) -> bool {
        // sign of a + b√2 decided exactly by comparing squares
        let (sa, sb) = (self.a.signum(), self.b.signum());
        if sb.is_zero() {
            return sa.is_negative();
        }
        if sa.is_zero() || sa == sb {
            return sb.is_negative();
        }
        let a2 = &self.a * &self.a;
        let b2 = rat(2, 1) * &self.b * &self.b;
        if a2 > b2 {
            sa.is_negative()
        } else {
            sb.is_negative()
        }
    }
}

impl fmt::Display for RealQ2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√2", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}√2", self.a, -&self.b)
                } else {
                    write!(f, "{}+{}√2", self.a, self.b)
                }
            }
        }
    }
}

impl<'a> Add<&'a RealQ2> for &'a RealQ2 {
    type Output = RealQ2;
    fn add(self, o: &RealQ2) -> RealQ2 {
        RealQ2 { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl<'a> Sub<&'a RealQ2> for &'a RealQ2 {
    type Output = RealQ2;
    fn sub(self, o: &RealQ2) -> RealQ2 {
        RealQ2 { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl<'a> Mul<&'a RealQ2> for &'a RealQ2 {
    type Output = RealQ2;
    fn mul(self, o: &RealQ2) -> RealQ2 {
        if self.is_zero() || o.is_zero() {
            return RealQ2::zero();
        }
        RealQ2 {
            a: &self.a * &o.a + rat(2, 1) * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl Neg for &RealQ2 {
    type Output = RealQ2;
    fn neg(self) -> RealQ2 {
        RealQ2 { a: -&self.a, b: -&self.b }
    }
}

/// Element `(ra + rb·√2) + i·(ia + ib·√2)` of ℚ(i, √2).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactScalar {
    re: RealQ2,
    im: RealQ2,
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl ExactScalar {
    pub fn new(re: RealQ2, im: RealQ2) -> Self {
        ExactScalar { re, im }
    }

    pub fn from_parts(ra: BigRational, rb: BigRational, ia: BigRational, ib: BigRational) -> Self {
        ExactScalar { re: RealQ2::new(ra, rb), im: RealQ2::new(ia, ib) }
    }

    pub fn zero() -> Self {
        ExactScalar { re: RealQ2::zero(), im: RealQ2::zero() }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn i() -> Self {
        ExactScalar { re: RealQ2::zero(), im: RealQ2::one() }
    }

    pub fn int(n: i64) -> Self {
        ExactScalar { re: RealQ2::int(n), im: RealQ2::zero() }
    }

    /// Rational `n/d`.
    pub fn ratio(n: i64, d: i64) -> Self {
        ExactScalar { re: RealQ2::ratio(n, d), im: RealQ2::zero() }
    }

    /// Gaussian rational `(n_re + i·n_im)/d`.
    pub fn gaussian(n_re: i64, n_im: i64, d: i64) -> Self {
        ExactScalar { re: RealQ2::ratio(n_re, d), im: RealQ2::ratio(n_im, d) }
    }

    pub fn real(re: RealQ2) -> Self {
        ExactScalar { re, im: RealQ2::zero() }
    }

    pub fn sqrt2() -> Self {
        Self::real(RealQ2::sqrt2())
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        Self::real(RealQ2::new(BigRational::zero(), rat(1, 2)))
    }

    pub fn ra(&self) -> &BigRational {
        &self.re.a
    }
    pub fn rb(&self) -> &BigRational {
        &self.re.b
    }
    pub fn ia(&self) -> &BigRational {
        &self.im.a
    }
    pub fn ib(&self) -> &BigRational {
        &self.im.b
    }
    pub fn re(&self) -> &RealQ2 {
        &self.re
    }
    pub fn im(&self) -> &RealQ2 {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re == RealQ2::one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ExactScalar { re: self.re.clone(), im: -&self.im }
    }

    pub fn mul_i(&self) -> Self {
        ExactScalar { re: -&self.im, im: self.re.clone() }
    }

    /// Squared modulus `re² + im²`, an element of ℚ(√2).
    pub fn abs2(&self) -> RealQ2 {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.abs2().inv()?;
        let c = self.conj();
        Some(ExactScalar { re: &c.re * &n, im: &c.im * &n })
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "({})i", self.im),
            (false, false) => write!(f, "{} + ({})i", self.re, self.im),
        }
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        if self.is_zero() || o.is_zero() {
            return ExactScalar::zero();
        }
        ExactScalar {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { re: -&self.re, im: -&self.im }
    }
}

macro_rules! forward_owned {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        impl AddAssign<&$t> for $t {
            fn add_assign(&mut self, o: &$t) {
                *self = &*self + o;
            }
        }
        impl SubAssign<&$t> for $t {
            fn sub_assign(&mut self, o: &$t) {
                *self = &*self - o;
            }
        }
    };
}

forward_owned!(RealQ2);
forward_owned!(ExactScalar);

impl From<RealQ2> for ExactScalar {
    fn from(r: RealQ2) -> Self {
        ExactScalar::real(r)
    }
}

impl Zero for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
}

impl One for ExactScalar {
    fn one() -> Self {
        ExactScalar::one()
    }
}
