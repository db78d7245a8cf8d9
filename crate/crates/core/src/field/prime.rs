//! Prime-field arithmetic on single machine words.
//!
//! Elements carry their modulus. The neutral elements returned by
//! `Ring::zero`/`Ring::one` are modulus-agnostic (modulus 0) and adopt
//! the modulus of the first bound operand they meet; this lets generic
//! matrix code work without threading a context around.

use std::fmt;

use super::{Field, Ring};

/// Default modulus: 2³¹ − 1, a Mersenne prime. Products of two reduced
/// values fit in a u64 with room to spare.
pub const DEFAULT_MODULUS: u64 = 2_147_483_647;

/// An element of F_p for a prime p > 2³⁰.
#[derive(Clone, Copy)]
pub struct PrimeField {
    value: u64,
    modulus: u64,
}

impl PartialEq for PrimeField {
    fn eq(&self, other: &Self) -> bool {
        // Values compare; an unbound neutral matches any modulus.
        self.value == other.value
            && (self.modulus == other.modulus || self.modulus == 0 || other.modulus == 0)
    }
}

impl Eq for PrimeField {}

impl PrimeField {
    pub fn new(value: u64, modulus: u64) -> Self {
        debug_assert!(modulus == 0 || modulus > 2, "modulus must be a prime > 2");
        let value = if modulus == 0 { value } else { value % modulus };
        PrimeField { value, modulus }
    }

    pub fn from_i64(value: i64, modulus: u64) -> Self {
        let m = modulus as i64;
        PrimeField::new(value.rem_euclid(m) as u64, modulus)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn unify(&self, other: &Self) -> u64 {
        match (self.modulus, other.modulus) {
            (0, m) | (m, 0) => m,
            (a, b) => {
                assert_eq!(a, b, "mixed moduli in prime-field arithmetic");
                a
            }
        }
    }
}

impl Ring for PrimeField {
    fn zero() -> Self {
        PrimeField { value: 0, modulus: 0 }
    }

    fn one() -> Self {
        PrimeField { value: 1, modulus: 0 }
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn add(&self, other: &Self) -> Self {
        let m = self.unify(other);
        if m == 0 {
            return PrimeField { value: self.value + other.value, modulus: 0 };
        }
        PrimeField { value: (self.value + other.value) % m, modulus: m }
    }

    fn sub(&self, other: &Self) -> Self {
        let m = self.unify(other);
        if m == 0 {
            return PrimeField { value: self.value.wrapping_sub(other.value), modulus: 0 };
        }
        PrimeField { value: (self.value + m - other.value % m) % m, modulus: m }
    }

    fn mul(&self, other: &Self) -> Self {
        let m = self.unify(other);
        if m == 0 {
            return PrimeField { value: self.value * other.value, modulus: 0 };
        }
        let prod = (self.value as u128 * other.value as u128) % m as u128;
        PrimeField { value: prod as u64, modulus: m }
    }

    fn neg(&self) -> Self {
        if self.modulus == 0 {
            return PrimeField { value: self.value.wrapping_neg(), modulus: 0 };
        }
        PrimeField {
            value: if self.value == 0 { 0 } else { self.modulus - self.value },
            modulus: self.modulus,
        }
    }
}

impl Field for PrimeField {
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let m = if self.modulus == 0 { DEFAULT_MODULUS } else { self.modulus };
        // Extended Euclid on (value, m).
        let (mut t, mut new_t): (i128, i128) = (0, 1);
        let (mut r, mut new_r): (i128, i128) = (m as i128, self.value as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        if r != 1 {
            return None;
        }
        let v = t.rem_euclid(m as i128) as u64;
        Some(PrimeField { value: v, modulus: m })
    }
}

impl PartialEq<u64> for PrimeField {
    fn eq(&self, other: &u64) -> bool {
        self.value == *other
    }
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let p = DEFAULT_MODULUS;
        for v in [1u64, 2, 17, p - 1, 123_456_789] {
            let x = PrimeField::new(v, p);
            let inv = x.inv().unwrap();
            assert!(x.mul(&inv).is_one());
        }
        assert!(PrimeField::new(0, p).inv().is_none());
    }

    #[test]
    fn unbound_neutrals_adopt_modulus() {
        let p = DEFAULT_MODULUS;
        let x = PrimeField::new(5, p);
        let y = PrimeField::one().add(&x);
        assert_eq!(y.modulus(), p);
        assert_eq!(y.value(), 6);
        let z = PrimeField::zero().sub(&x);
        assert_eq!(z.value(), p - 5);
    }

    #[test]
    fn from_i64_wraps_negatives() {
        let p = DEFAULT_MODULUS;
        assert_eq!(PrimeField::from_i64(-1, p).value(), p - 1);
    }
}
