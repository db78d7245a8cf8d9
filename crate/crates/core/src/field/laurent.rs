//! Laurent polynomials in a formal parameter ε.
//!
//! These carry the entries of degeneration curves g(ε): finitely many
//! terms, integer exponents of either sign, exact coefficients. The only
//! analytic operation is the limit at ε → 0, defined exactly when no
//! negative exponent survives.

use std::collections::BTreeMap;
use std::fmt;

use super::{FieldError, Rational, Ring};

/// A finitely supported map exponent → coefficient; zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly<R: Ring = Rational> {
    terms: BTreeMap<i64, R>,
}

impl<R: Ring> LaurentPoly<R> {
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, R)>) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(e).or_insert_with(R::zero);
            *entry = entry.add(&c);
            if entry.is_zero() {
                map.remove(&e);
            }
        }
        LaurentPoly { terms: map }
    }

    pub fn constant(c: R) -> Self {
        Self::from_terms([(0, c)])
    }

    /// The monomial c·ε^e.
    pub fn monomial(c: R, e: i64) -> Self {
        Self::from_terms([(e, c)])
    }

    /// ε itself.
    pub fn epsilon() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &R)> {
        self.terms.iter()
    }

    /// Smallest exponent with nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, e: i64) -> R {
        self.terms.get(&e).cloned().unwrap_or_else(R::zero)
    }

    /// The limit at ε → 0: the constant coefficient when the minimal
    /// exponent is ≥ 0, otherwise a pole error carrying the order.
    pub fn limit_at_zero(&self) -> Result<R, FieldError> {
        match self.min_exponent() {
            Some(e) if e < 0 => Err(FieldError::PoleAtZero { order: (-e) as usize }),
            _ => Ok(self.coeff(0)),
        }
    }
}

impl<R: Ring> Ring for LaurentPoly<R> {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    fn one() -> Self {
        Self::constant(R::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(R::zero);
            *entry = entry.add(c);
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, R> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                let entry = terms.entry(e).or_insert_with(R::zero);
                *entry = entry.add(&c1.mul(c2));
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        LaurentPoly { terms }
    }

    fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }
}

impl<R: Ring> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match e {
                0 => format!("{c:?}"),
                1 => format!("{c:?}·ε"),
                _ => format!("{c:?}·ε^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
