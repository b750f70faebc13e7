//! Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

/// Coefficient field of a ring: the rationals or a prime field GF(p), p <= 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rational,
    Prime(u32),
}

impl FieldTag {
    pub fn prime(p: u32) -> Result<FieldTag> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(FieldTag::Prime(p))
    }

    /// Characteristic of the field: 0 for the rationals, p for GF(p).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldTag::Rational => 0,
            FieldTag::Prime(p) => *p as u64,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldTag::Rational => Coeff::Rat(Box::new(BigRational::zero())),
            FieldTag::Prime(p) => Coeff::Fp { p: *p, v: 0 },
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            FieldTag::Rational => Coeff::Rat(Box::new(BigRational::one())),
            FieldTag::Prime(p) => Coeff::Fp { p: *p, v: 1 },
        }
    }

    /// Image of the integer n in the field.
    pub fn from_int(&self, n: i64) -> Coeff {
        match self {
            FieldTag::Rational => Coeff::Rat(Box::new(BigRational::from(BigInt::from(n)))),
            FieldTag::Prime(p) => {
                let p64 = *p as i64;
                let v = n.rem_euclid(p64) as u64;
                Coeff::Fp { p: *p, v: v as u32 }
            }
        }
    }

    pub fn parse(&self, s: &str) -> Result<Coeff> {
        match self {
            FieldTag::Rational => {
                let r = BigRational::from_str(s)
                    .map_err(|e| Error::Parse(format!("bad rational `{s}`: {e}")))?;
                Ok(Coeff::Rat(Box::new(r)))
            }
            FieldTag::Prime(p) => {
                let n = i128::from_str(s)
                    .map_err(|e| Error::Parse(format!("bad integer `{s}`: {e}")))?;
                let v = n.rem_euclid(*p as i128) as u32;
                Ok(Coeff::Fp { p: *p, v })
            }
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "QQ"),
            FieldTag::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (the `num` crate maintains that form); prime-field values live
/// in `[0, p)`.
#[derive(Clone, Debug)]
pub enum Coeff {
    Rat(Box<BigRational>),
    Fp { p: u32, v: u32 },
}

impl Coeff {
    pub fn field(&self) -> FieldTag {
        match self {
            Coeff::Rat(_) => FieldTag::Rational,
            Coeff::Fp { p, .. } => FieldTag::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(Box::new(&**a + &**b)),
            (Coeff::Fp { p, v: a }, Coeff::Fp { p: q, v: b }) => {
                debug_assert_eq!(p, q);
                let s = (*a as u64 + *b as u64) % (*p as u64);
                Coeff::Fp { p: *p, v: s as u32 }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(Box::new(-&**a)),
            Coeff::Fp { p, v } => {
                let v = if *v == 0 { 0 } else { p - v };
                Coeff::Fp { p: *p, v }
            }
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(Box::new(&**a * &**b)),
            (Coeff::Fp { p, v: a }, Coeff::Fp { p: q, v: b }) => {
                debug_assert_eq!(p, q);
                let m = (*a as u64 * *b as u64) % (*p as u64);
                Coeff::Fp { p: *p, v: m as u32 }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    /// Multiplicative inverse; panics on zero (callers guard).
    pub fn inv(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Coeff::Rat(Box::new(a.recip()))
            }
            Coeff::Fp { p, v } => {
                assert!(*v != 0, "inverse of zero");
                Coeff::Fp { p: *p, v: mod_inv(*v as u64, *p as u64) as u32 }
            }
        }
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: u64) -> Coeff {
        let mut acc = self.field().one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// True for rationals with negative sign; prime-field elements have none.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rat(a) => a.is_negative(),
            Coeff::Fp { .. } => false,
        }
    }

    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(Box::new(a.abs())),
            Coeff::Fp { .. } => self.clone(),
        }
    }
}

impl PartialEq for Coeff {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => a == b,
            (Coeff::Fp { p, v }, Coeff::Fp { p: q, v: w }) => p == q && v == w,
            _ => false,
        }
    }
}

impl Eq for Coeff {}

impl Hash for Coeff {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Coeff::Rat(a) => {
                0u8.hash(state);
                a.numer().hash(state);
                a.denom().hash(state);
            }
            Coeff::Fp { p, v } => {
                1u8.hash(state);
                p.hash(state);
                v.hash(state);
            }
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(a) => write!(f, "{a}"),
            Coeff::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on signed words; p <= 2^31 so i64 is safe
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert_eq!(r0, 1, "not invertible");
    s0.rem_euclid(p as i64) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let t = FieldTag::Rational;
        let half = t.from_int(2).div(&t.from_int(4));
        assert_eq!(half, t.from_int(1).div(&t.from_int(2)));
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn prime_field_wraps() {
        let t = FieldTag::prime(5).unwrap();
        let a = t.from_int(-3);
        assert_eq!(a.to_string(), "2");
        assert_eq!(a.mul(&t.from_int(3)).to_string(), "1");
        assert_eq!(t.from_int(4).inv().to_string(), "4");
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FieldTag::prime(9).is_err());
        assert!(FieldTag::prime(2147483647).is_ok()); // 2^31 - 1 is prime
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let t = FieldTag::prime(7).unwrap();
        let a = t.from_int(3);
        let mut acc = t.one();
        for _ in 0..11 {
            acc = acc.mul(&a);
        }
        assert_eq!(a.pow(11), acc);
    }
}
