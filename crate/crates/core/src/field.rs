//! Prime fields `F_p` for `p <= 2^16`.
//!
//! Hot loops work on raw `u32` residues through the [`Fp`] methods; the
//! [`FieldElem`] value type carries its modulus and rejects mixed-modulus
//! arithmetic.

use crate::error::{Error, Result};
use core::fmt;

pub const MAX_MODULUS: u32 = 1 << 16;

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p })
    }

    /// `F_2`.
    pub const fn binary() -> Self {
        Fp { p: 2 }
    }

    #[inline]
    pub const fn p(self) -> u32 {
        self.p
    }

    pub fn elem(self, value: u32) -> FieldElem {
        FieldElem {
            value: value % self.p,
            p: self.p,
        }
    }

    pub fn zero(self) -> FieldElem {
        self.elem(0)
    }

    pub fn one(self) -> FieldElem {
        self.elem(1)
    }

    /// Reduces an arbitrary integer into `0..p`.
    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: u32) -> Result<u32> {
        let a = a % self.p;
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce(t0))
    }

    /// `n mod p` for a count `n` (e.g. the image of `|G|` in the field).
    #[inline]
    pub fn from_count(self, n: usize) -> u32 {
        (n as u64 % self.p as u64) as u32
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// A residue together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    value: u32,
    p: u32,
}

impl FieldElem {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> Fp {
        Fp { p: self.p }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: FieldElem) -> Result<Fp> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p,
                right: other.p,
            });
        }
        Ok(self.field())
    }

    pub fn add(self, other: FieldElem) -> Result<FieldElem> {
        let f = self.same_field(other)?;
        Ok(FieldElem {
            value: f.add(self.value, other.value),
            p: self.p,
        })
    }

    pub fn sub(self, other: FieldElem) -> Result<FieldElem> {
        let f = self.same_field(other)?;
        Ok(FieldElem {
            value: f.sub(self.value, other.value),
            p: self.p,
        })
    }

    pub fn mul(self, other: FieldElem) -> Result<FieldElem> {
        let f = self.same_field(other)?;
        Ok(FieldElem {
            value: f.mul(self.value, other.value),
            p: self.p,
        })
    }

    pub fn neg(self) -> FieldElem {
        FieldElem {
            value: self.field().neg(self.value),
            p: self.p,
        }
    }

    pub fn inv(self) -> Result<FieldElem> {
        Ok(FieldElem {
            value: self.field().inv(self.value)?,
            p: self.p,
        })
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(p: u32, v: u32) -> FieldElem {
        Fp::new(p).unwrap().elem(v)
    }

    #[test]
    fn rejects_non_primes() {
        for n in [0, 1, 4, 9, 15, 65536, 70001] {
            assert_eq!(Fp::new(n), Err(Error::NotPrime(n)));
        }
        for p in [2, 3, 5, 7, 65521] {
            assert!(Fp::new(p).is_ok());
        }
    }

    #[test]
    fn add_examples() {
        assert_eq!(e(3, 1).add(e(3, 2)).unwrap(), e(3, 0));
        assert_eq!(e(2, 1).add(e(2, 1)).unwrap(), e(2, 0));
        assert_eq!(e(7, 5).add(e(7, 4)).unwrap(), e(7, 2));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(e(3, 2).mul(e(3, 2)).unwrap(), e(3, 1));
        assert_eq!(e(5, 0).mul(e(5, 4)).unwrap(), e(5, 0));
        assert_eq!(e(2, 1).mul(e(2, 1)).unwrap(), e(2, 1));
    }

    #[test]
    fn inv_examples() {
        assert_eq!(e(3, 2).inv().unwrap(), e(3, 2));
        assert_eq!(e(5, 3).inv().unwrap(), e(5, 2));
        assert_eq!(e(2, 1).inv().unwrap(), e(2, 1));
        assert_eq!(e(5, 0).inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn mixed_modulus_is_rejected() {
        let err = Error::ModulusMismatch { left: 3, right: 5 };
        assert_eq!(e(3, 1).add(e(5, 1)), Err(err.clone()));
        assert_eq!(e(3, 1).mul(e(5, 1)), Err(err));
    }

    #[test]
    fn field_axioms_exhaustive_small_primes() {
        for p in [2u32, 3, 5, 7] {
            let f = Fp::new(p).unwrap();
            for a in 0..p {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..p {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for c in 0..p {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_largest_prime() {
        let f = Fp::new(65521).unwrap();
        for a in [1, 2, 3, 65520, 12345] {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }
}
