use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A field of scalars. The field value itself is small and copyable; its
/// elements are kept canonical (reduced fractions, least residues) by every
/// operation.
pub trait Field: Copy + PartialEq + Eq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// 0 for the rationals, p for a prime field.
    fn characteristic(&self) -> u64;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn render(&self, a: &Self::Elem) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn spec(&self) -> FieldSpec {
        match self.characteristic() {
            0 => FieldSpec::Rationals,
            p => FieldSpec::Prime(p),
        }
    }
}

/// The rational numbers with arbitrary-precision reduced fractions.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
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
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        BigRational::from_str(s.trim()).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// The prime field F_p, elements stored as least residues in `0..p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, n: i128) -> u64 {
        let p = self.p as i128;
        (((n % p) + p) % p) as u64
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.checked_mul(d).map(|s| s <= p).unwrap_or(false) {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + (self.p - *b % self.p) as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a % self.p == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.reduce_i128(s0))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a % self.p == 0
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let t = s.trim();
        let n = i128::from_str(t).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        Ok(self.reduce_i128(n))
    }
    fn render(&self, a: &u64) -> String {
        (a % self.p).to_string()
    }
}

/// Runtime description of a field, shared by every matrix in a computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Prime(p) => PrimeField::new(*p).map(|_| ()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roundtrip() {
        let q = Rationals;
        let x = q.parse("3/2").unwrap();
        assert_eq!(q.render(&x), "3/2");
        let y = q.parse("-4/6").unwrap();
        assert_eq!(q.render(&y), "-2/3");
        let z = q.parse("7").unwrap();
        assert_eq!(q.render(&z), "7");
        assert_eq!(q.add(&x, &y), q.parse("5/6").unwrap());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.add(&3, &4), 2);
        assert_eq!(f5.mul(&3, &4), 2);
        assert_eq!(f5.inv(&3), Some(2));
        assert_eq!(f5.inv(&0), None);
        assert_eq!(f5.neg(&2), 3);
        assert_eq!(f5.from_i64(-7), 3);
        assert!(PrimeField::new(6).is_err());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn inverses_over_f2() {
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.inv(&1), Some(1));
        assert_eq!(f2.add(&1, &1), 0);
    }
}
