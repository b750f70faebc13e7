//! Exponent vectors with cached total degree.
//!
//! Stored inline as a fixed array (rings here stay small), so monomials are
//! `Copy`-cheap and arithmetic never allocates. A support bitmask makes
//! failed divisibility tests one AND away.

use crate::error::{Error, Result};
use std::hash::{Hash, Hasher};

/// Hard cap on ring arity; everything in this crate stays well below it.
pub const MAX_VARS: usize = 16;

/// A monomial exponent vector. Length always equals the arity of its ring;
/// the total degree and support mask are cached.
#[derive(Clone, Copy, Debug, Eq)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    len: u8,
    degree: u32,
    mask: u16,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "ring arity above {MAX_VARS}");
        let mut store = [0u16; MAX_VARS];
        store[..exps.len()].copy_from_slice(&exps);
        Monomial::from_array(store, exps.len())
    }

    fn from_array(exps: [u16; MAX_VARS], len: usize) -> Monomial {
        let mut degree = 0u32;
        let mut mask = 0u16;
        for (i, &e) in exps[..len].iter().enumerate() {
            degree += e as u32;
            if e > 0 {
                mask |= 1 << i;
            }
        }
        Monomial { exps, len: len as u8, degree, mask }
    }

    pub fn one(arity: usize) -> Monomial {
        assert!(arity <= MAX_VARS);
        Monomial { exps: [0; MAX_VARS], len: arity as u8, degree: 0, mask: 0 }
    }

    pub fn var(arity: usize, index: usize) -> Monomial {
        assert!(arity <= MAX_VARS && index < arity);
        let mut exps = [0u16; MAX_VARS];
        exps[index] = 1;
        Monomial { exps, len: arity as u8, degree: 1, mask: 1 << index }
    }

    pub fn arity(&self) -> usize {
        self.len as usize
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps[..self.len as usize]
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.len, other.len);
        let mut exps = [0u16; MAX_VARS];
        for i in 0..self.len as usize {
            exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial {
            exps,
            len: self.len,
            degree: self.degree + other.degree,
            mask: self.mask | other.mask,
        })
    }

    /// Componentwise power, for Frobenius twists and small powers.
    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..self.len as usize {
            let e = (self.exps[i] as u64) * (k as u64);
            if e > u16::MAX as u64 {
                return Err(Error::ExponentOverflow);
            }
            exps[i] = e as u16;
        }
        Ok(Monomial {
            exps,
            len: self.len,
            degree: self.degree * k,
            mask: if k == 0 { 0 } else { self.mask },
        })
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.len, other.len);
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps[..self.len as usize]
            .iter()
            .zip(&other.exps[..self.len as usize])
            .all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut exps = [0u16; MAX_VARS];
        for i in 0..self.len as usize {
            exps[i] = other.exps[i] - self.exps[i];
        }
        Monomial::from_array(exps, self.len as usize)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..self.len as usize {
            exps[i] = self.exps[i].max(other.exps[i]);
        }
        Monomial::from_array(exps, self.len as usize)
    }

    #[inline]
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
    }

    /// Variable indices with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps()
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps().iter().all(|&e| e <= 1)
    }

    /// Total degree ignoring the first `skip` variables; the grading used by
    /// truncated runs over auxiliary-variable extensions.
    pub fn degree_skipping(&self, skip: usize) -> u32 {
        self.degree - self.exps[..skip.min(self.len as usize)]
            .iter()
            .map(|&e| e as u32)
            .sum::<u32>()
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps() == other.exps()
    }
}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps().hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_is_cached_sum() {
        let m = Monomial::new(vec![2, 0, 3]);
        assert_eq!(m.degree(), 5);
        assert_eq!(m.arity(), 3);
        assert_eq!(m.degree_skipping(1), 3);
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = Monomial::new(vec![1, 2, 0]);
        let b = Monomial::new(vec![2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.div_into(&b), Monomial::new(vec![1, 0, 1]));
        assert_eq!(a.lcm(&b), b);
        assert!(!a.coprime(&b));
        assert!(Monomial::new(vec![1, 0, 0]).coprime(&Monomial::new(vec![0, 1, 1])));
    }

    #[test]
    fn overflow_is_reported() {
        let a = Monomial::new(vec![u16::MAX]);
        let b = Monomial::new(vec![1]);
        assert!(a.mul(&b).is_err());
        assert!(Monomial::new(vec![40000]).pow(2).is_err());
    }
}
