//! Coefficient fields: prime fields GF(p) and the rationals.
//!
//! Field elements carry no context; every operation goes through a small
//! `Copy` field handle. Polynomials and matrices store the handle once.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Characteristic of the coefficient field: 0 for the rationals, otherwise a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub fn new(characteristic: u32) -> Result<Self> {
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::Config(format!(
                "field characteristic must be 0 or a prime, got {characteristic}"
            )));
        }
        Ok(Self { characteristic })
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self { characteristic: 3 }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let n = n as u64;
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Exact field arithmetic.
pub trait Field: Copy + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;

    /// Uniform random element (zero allowed).
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Uniform random nonzero element.
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Sign and magnitude text used by the polynomial printers. Prime
    /// fields print the balanced representative.
    fn signed_text(&self, a: &Self::Elem) -> (bool, String);
    /// Parse an unsigned coefficient literal (`7` or `3/4`).
    fn parse_literal(&self, s: &str) -> Option<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc -= c * b`, the inner step of every elimination loop.
    #[inline]
    fn sub_mul_assign(&self, acc: &mut Self::Elem, c: &Self::Elem, b: &Self::Elem) {
        *acc = self.sub(acc, &self.mul(c, b));
    }
}

/// GF(p) with residues kept in `[0, p-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Config(format!("{p} is not prime")));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec { characteristic: self.p }
    }
    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (if s >= self.p as u64 { s - self.p as u64 } else { s }) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p as u64 - *b as u64) as u32
        }
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        // Fermat: a^(p-2)
        let p = self.p as u64;
        let mut base = *a as u64;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.reduce_i64(v)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(1..self.p)
    }
    fn signed_text(&self, a: &u32) -> (bool, String) {
        if *a <= self.p / 2 {
            (false, a.to_string())
        } else {
            (true, (self.p - a).to_string())
        }
    }
    fn parse_literal(&self, s: &str) -> Option<u32> {
        match s.split_once('/') {
            None => {
                let v: BigInt = s.parse().ok()?;
                Some((v % BigInt::from(self.p)).to_u32()?)
            }
            Some((num, den)) => {
                let n = self.parse_literal(num)?;
                let d = self.parse_literal(den)?;
                if d == 0 {
                    None
                } else {
                    Some(self.mul(&n, &self.inv(&d)))
                }
            }
        }
    }
}

/// The rationals, with arbitrary precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

/// Random rationals are drawn as integers in `[-RATIONAL_RANGE, RATIONAL_RANGE]`.
pub const RATIONAL_RANGE: i64 = 1;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec { characteristic: 0 }
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero in QQ");
        a.recip()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-RATIONAL_RANGE..=RATIONAL_RANGE))
    }
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let v = rng.gen_range(1..=RATIONAL_RANGE);
        self.from_i64(if rng.gen::<bool>() { v } else { -v })
    }
    fn signed_text(&self, a: &BigRational) -> (bool, String) {
        let mag = a.abs();
        let text = if mag.is_integer() {
            mag.numer().to_string()
        } else {
            format!("{}/{}", mag.numer(), mag.denom())
        };
        (a.is_negative(), text)
    }
    fn parse_literal(&self, s: &str) -> Option<BigRational> {
        match s.split_once('/') {
            None => Some(BigRational::from_integer(s.parse().ok()?)),
            Some((num, den)) => {
                let n: BigInt = num.parse().ok()?;
                let d: BigInt = den.parse().ok()?;
                if d.is_zero() {
                    None
                } else {
                    Some(BigRational::new(n, d))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite_characteristic_rejected() {
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(0).is_ok());
        assert!(FieldSpec::new(3).is_ok());
        assert!(FieldSpec::new(32003).is_ok());
    }

    #[test]
    fn prime_field_inverses() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }

    #[test]
    fn balanced_text() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.signed_text(&2), (true, "1".to_string()));
        assert_eq!(f.signed_text(&1), (false, "1".to_string()));
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.signed_text(&1), (false, "1".to_string()));
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.signed_text(&3), (true, "2".to_string()));
    }

    #[test]
    fn literals() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.parse_literal("10"), Some(3));
        assert_eq!(f.parse_literal("1/2"), Some(4));
        assert_eq!(f.parse_literal("1/7"), None);
        let q = Rationals;
        assert_eq!(q.parse_literal("6/4"), Some(BigRational::new(3.into(), 2.into())));
        assert_eq!(q.signed_text(&q.from_i64(-3)), (true, "3".to_string()));
    }
}
