//! Arithmetic in the prime field 𝔽_p for an odd prime p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::AlgebraError;

/// Returns true when `p` is an odd prime (p ≥ 3).
pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of 𝔽_p, stored as the residue in `[0, p)`.
///
/// Binary operations panic on mismatched moduli; series-level entry points
/// validate moduli up front and return `AlgebraError::ModulusMismatch`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    /// Builds an element from any signed representative.
    pub fn new(modulus: u64, value: i64) -> Result<Self, AlgebraError> {
        if !is_odd_prime(modulus) {
            return Err(AlgebraError::InvalidModulus(modulus));
        }
        Ok(Self::reduced(modulus, value))
    }

    /// As `new`, but assumes `modulus` was already validated.
    pub(crate) fn reduced(modulus: u64, value: i64) -> Self {
        let p = modulus as i64;
        let v = value.rem_euclid(p) as u64;
        PrimeFieldElement { value: v, modulus }
    }

    pub fn zero(modulus: u64) -> Self {
        PrimeFieldElement { value: 0, modulus }
    }

    pub fn one(modulus: u64) -> Self {
        PrimeFieldElement { value: 1 % modulus, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            // Fermat: a^(p-2) = a^{-1} for prime p.
            Some(self.pow(self.modulus - 2))
        }
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        PrimeFieldElement {
            value: (self.value + rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        PrimeFieldElement {
            value: (self.value + self.modulus - rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        let prod = (self.value as u128 * rhs.value as u128) % self.modulus as u128;
        PrimeFieldElement { value: prod as u64, modulus: self.modulus }
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        PrimeFieldElement {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

/// C(n, k) mod p by Lucas' theorem: the product of the digit-wise
/// binomials of n and k written in base p.
pub fn binomial_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    debug_assert!(is_odd_prime(p));
    if k > n {
        return 0;
    }
    let mut acc: u64 = 1;
    while n > 0 || k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = (acc as u128 * small_binomial_mod_p(nd, kd, p) as u128 % p as u128) as u64;
        n /= p;
        k /= p;
    }
    acc
}

// C(a, b) mod p for a, b < p, via the falling-factorial quotient.
fn small_binomial_mod_p(a: u64, b: u64, p: u64) -> u64 {
    let mut num = PrimeFieldElement::one(p);
    let mut den = PrimeFieldElement::one(p);
    for i in 1..=b {
        num = num * PrimeFieldElement::reduced(p, (a - b + i) as i64);
        den = den * PrimeFieldElement::reduced(p, i as i64);
    }
    (num * den.inverse().expect("nonzero factorial below p")).value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_prime_detection() {
        assert!(is_odd_prime(3));
        assert!(is_odd_prime(5));
        assert!(is_odd_prime(13));
        assert!(!is_odd_prime(2));
        assert!(!is_odd_prime(1));
        assert!(!is_odd_prime(9));
        assert!(!is_odd_prime(91)); // 7 * 13
    }

    #[test]
    fn rejects_non_prime_modulus() {
        assert_eq!(
            PrimeFieldElement::new(4, 1),
            Err(AlgebraError::InvalidModulus(4))
        );
    }

    #[test]
    fn arithmetic_mod_5() {
        let p = 5;
        let a = PrimeFieldElement::new(p, 3).unwrap();
        let b = PrimeFieldElement::new(p, 4).unwrap();
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 4);
        assert_eq!((a * b).value(), 2);
        assert_eq!((-a).value(), 2);
        assert_eq!(PrimeFieldElement::new(p, -1).unwrap().value(), 4);
    }

    #[test]
    fn inverse_round_trip() {
        for p in [5u64, 7, 11, 13] {
            for v in 1..p {
                let a = PrimeFieldElement::new(p, v as i64).unwrap();
                let inv = a.inverse().unwrap();
                assert_eq!((a * inv).value(), 1);
            }
            assert!(PrimeFieldElement::zero(p).inverse().is_none());
        }
    }

    // Oracle: exact integer binomials (u128 Pascal), reduced mod p.
    fn integer_binomial(n: u64, k: u64) -> u128 {
        let mut row = vec![1u128];
        for _ in 0..n {
            let mut next = vec![1u128; row.len() + 1];
            for j in 1..row.len() {
                next[j] = row[j - 1] + row[j];
            }
            row = next;
        }
        if (k as usize) < row.len() {
            row[k as usize]
        } else {
            0
        }
    }

    #[test]
    fn lucas_matches_integer_binomials() {
        // C(7,3) = 35 computed by integer arithmetic, reduced mod 7 -> 0.
        assert_eq!(integer_binomial(7, 3), 35);
        assert_eq!(binomial_mod_p(7, 3, 7), 0);
        for p in [5u64, 7, 11, 13] {
            for n in 0..=60u64 {
                for k in 0..=n {
                    let expect = (integer_binomial(n, k) % p as u128) as u64;
                    assert_eq!(binomial_mod_p(n, k, p), expect, "C({n},{k}) mod {p}");
                }
            }
        }
    }
}
