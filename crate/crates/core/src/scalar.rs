//! Exact scalar fields: rationals and Gaussian rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as an integer or `p/q`.
pub fn q_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Minimal field interface used by the Lie-algebra code.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_q(x: &Q) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Panics on zero.
    fn inv(&self) -> Self;

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let t = a.mul(b);
        *self = Field::add(self, &t);
    }

    fn mul_int(&self, n: i64) -> Self {
        self.mul(&Self::from_int(n))
    }
}

impl Field for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(n: i64) -> Self {
        q(n)
    }
    fn from_q(x: &Q) -> Self {
        x.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn mul_int(&self, n: i64) -> Self {
        if n == 1 {
            return self.clone();
        }
        if n == -1 {
            return -self;
        }
        Q::new(self.numer() * BigInt::from(n), self.denom().clone())
    }
}

/// Gaussian rational `re + im*i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussQ {
    pub re: Q,
    pub im: Q,
}

impl GaussQ {
    pub fn new(re: Q, im: Q) -> Self {
        GaussQ { re, im }
    }

    pub fn real(re: Q) -> Self {
        GaussQ { re, im: <Q as Zero>::zero() }
    }

    pub fn i() -> Self {
        GaussQ { re: <Q as Zero>::zero(), im: <Q as One>::one() }
    }

    pub fn conj(&self) -> Self {
        GaussQ { re: self.re.clone(), im: -&self.im }
    }

    pub fn scale(&self, s: &Q) -> Self {
        GaussQ { re: &self.re * s, im: &self.im * s }
    }
}

impl fmt::Debug for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = q_to_string(&self.re);
        if Zero::is_zero(&self.im) {
            return write!(f, "{}", re);
        }
        let im = q_to_string(&self.im.abs());
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if Zero::is_zero(&self.re) {
            let sign = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{}{}i", sign, im)
        } else {
            write!(f, "{}{}{}i", re, sign, im)
        }
    }
}

impl Field for GaussQ {
    fn zero() -> Self {
        GaussQ { re: <Q as Zero>::zero(), im: <Q as Zero>::zero() }
    }
    fn one() -> Self {
        GaussQ { re: <Q as One>::one(), im: <Q as Zero>::zero() }
    }
    fn from_int(n: i64) -> Self {
        GaussQ::real(q(n))
    }
    fn from_q(x: &Q) -> Self {
        GaussQ::real(x.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, o: &Self) -> Self {
        GaussQ { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussQ { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Self) -> Self {
        GaussQ { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
    fn neg(&self) -> Self {
        GaussQ { re: -&self.re, im: -&self.im }
    }
    fn inv(&self) -> Self {
        let n = &self.re * &self.re + &self.im * &self.im;
        assert!(!Zero::is_zero(&n), "inverse of zero");
        GaussQ { re: &self.re / &n, im: -&self.im / &n }
    }
    fn mul_int(&self, n: i64) -> Self {
        GaussQ { re: self.re.mul_int(n), im: self.im.mul_int(n) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_arithmetic() {
        let i = GaussQ::i();
        assert_eq!(i.mul(&i), GaussQ::from_int(-1));
        let z = GaussQ::new(q(3), q(4));
        assert_eq!(z.mul(&z.inv()), <GaussQ as Field>::one());
        assert_eq!(z.mul(&z.conj()), GaussQ::from_int(25));
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(q_to_string(&qr(6, 4)), "3/2");
        assert_eq!(q_to_string(&qr(-8, 4)), "-2");
        assert_eq!(GaussQ::new(qr(1, 2), q(-1)).to_string(), "1/2-1i");
    }
}
