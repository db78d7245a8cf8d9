//! The quotient ring ℚ[μ]/(μᵏ − c).
//!
//! Houses algebraic constants such as μ = (1+λ³)^{1/3} at a fixed
//! rational λ. Elements are represented by the unique polynomial in μ of
//! degree < k; multiplication reduces μᵏ → c. Inversion goes through the
//! extended Euclidean algorithm and fails exactly on zero divisors, so
//! the ring works uniformly whether or not μᵏ − c is irreducible.
//!
//! The neutral elements are context-free (k = 0 marker, plain rational)
//! and adopt the relation of the first bound operand, like
//! [`super::PrimeField`] does with its modulus.

use std::fmt;

use super::{Field, FieldError, Poly, Rational, Ring};

#[derive(Clone, PartialEq, Eq, Debug)]
struct Relation {
    k: usize,
    c: Rational,
}

/// An element of ℚ[μ]/(μᵏ − c).
#[derive(Clone, Debug)]
pub struct QuotientRingElement {
    /// Coefficients of 1, μ, …, μ^(k−1); trailing zeros trimmed.
    coeffs: Vec<Rational>,
    relation: Option<Relation>,
}

impl QuotientRingElement {
    /// The generator μ of ℚ[μ]/(μᵏ − c). Requires k ≥ 1.
    pub fn mu(k: usize, c: Rational) -> Self {
        assert!(k >= 1, "relation degree must be at least 1");
        let coeffs = if k == 1 {
            // μ = c already in the base field.
            vec![c.clone()]
        } else {
            vec![Rational::zero(), Rational::one()]
        };
        QuotientRingElement { coeffs, relation: Some(Relation { k, c }) }
    }

    pub fn from_rational(r: Rational) -> Self {
        QuotientRingElement { coeffs: vec![r], relation: None }
    }

    /// Element from coefficients of 1, μ, …, bound to the relation μᵏ = c.
    pub fn from_coeffs(coeffs: Vec<Rational>, k: usize, c: Rational) -> Self {
        let mut el = QuotientRingElement { coeffs, relation: Some(Relation { k, c }) };
        el.reduce();
        el
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The rational value of a degree-0 representative, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        if let Some(rel) = &self.relation {
            while self.coeffs.len() > rel.k {
                let top = self.coeffs.pop().unwrap();
                if top.is_zero() {
                    continue;
                }
                let idx = self.coeffs.len() - rel.k;
                self.coeffs[idx] = self.coeffs[idx].add(&top.mul(&rel.c));
            }
        }
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn unify(&self, other: &Self) -> Option<Relation> {
        match (&self.relation, &other.relation) {
            (None, r) | (r, None) => r.clone(),
            (Some(a), Some(b)) => {
                assert_eq!(a, b, "mixed quotient-ring relations");
                Some(a.clone())
            }
        }
    }

    /// Inverse, when the representative is a unit of the ring.
    pub fn try_inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::NotInvertible);
        }
        match &self.relation {
            None => Ok(QuotientRingElement {
                coeffs: vec![self.coeffs[0].inv().ok_or(FieldError::NotInvertible)?],
                relation: None,
            }),
            Some(rel) => {
                // modulus x^k − c
                let mut m = vec![Rational::zero(); rel.k + 1];
                m[0] = rel.c.neg();
                m[rel.k] = Rational::one();
                let modulus = Poly::from_coeffs(m);
                let p = Poly::from_coeffs(self.coeffs.clone());
                let (g, s, _) = p.xgcd(&modulus);
                if g.degree() != Some(0) {
                    return Err(FieldError::NotInvertible);
                }
                let mut el = QuotientRingElement {
                    coeffs: s.coeffs().to_vec(),
                    relation: self.relation.clone(),
                };
                el.reduce();
                Ok(el)
            }
        }
    }
}

impl PartialEq for QuotientRingElement {
    fn eq(&self, other: &Self) -> bool {
        // Representatives compare; relations must agree when both bound.
        if let (Some(a), Some(b)) = (&self.relation, &other.relation) {
            if a != b {
                return false;
            }
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| {
            self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
                == other.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
        })
    }
}

impl Ring for QuotientRingElement {
    fn zero() -> Self {
        QuotientRingElement { coeffs: vec![], relation: None }
    }

    fn one() -> Self {
        QuotientRingElement { coeffs: vec![Rational::one()], relation: None }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn add(&self, other: &Self) -> Self {
        let relation = self.unify(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero).add(
                    &other.coeffs.get(i).cloned().unwrap_or_else(Rational::zero),
                )
            })
            .collect();
        let mut el = QuotientRingElement { coeffs, relation };
        el.reduce();
        el
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        let relation = self.unify(other);
        if self.is_zero() || other.is_zero() {
            return QuotientRingElement { coeffs: vec![], relation };
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        let mut el = QuotientRingElement { coeffs, relation };
        el.reduce();
        el
    }

    fn neg(&self) -> Self {
        QuotientRingElement {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            relation: self.relation.clone(),
        }
    }
}

impl fmt::Display for QuotientRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}·μ"),
                _ => format!("{c}·μ^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_cubed_reduces() {
        // μ³ = 9 in ℚ[μ]/(μ³ − 9)
        let mu = QuotientRingElement::mu(3, Rational::from_integer(9));
        let mu3 = mu.mul(&mu).mul(&mu);
        assert_eq!(mu3.as_rational(), Some(Rational::from_integer(9)));
        let mu4 = mu3.mul(&mu);
        assert_eq!(mu4.coeffs(), &[Rational::zero(), Rational::from_integer(9)]);
    }

    #[test]
    fn mu_inverse() {
        let mu = QuotientRingElement::mu(3, Rational::from_integer(9));
        let inv = mu.try_inv().unwrap();
        assert!(mu.mul(&inv).is_one());
        // μ⁻¹ = μ²/9
        let mu2_over_9 = mu.mul(&mu).mul(&QuotientRingElement::from_rational(Rational::new(1, 9)));
        assert_eq!(inv, mu2_over_9);
    }

    #[test]
    fn zero_divisor_in_reducible_case() {
        // μ³ = 1: (μ − 1) is a zero divisor.
        let mu = QuotientRingElement::mu(3, Rational::one());
        let z = mu.sub(&QuotientRingElement::one());
        assert!(z.try_inv().is_err());
        // μ itself is a unit with inverse μ².
        assert!(mu.try_inv().is_ok());
        assert_eq!(mu.try_inv().unwrap(), mu.mul(&mu));
    }

    #[test]
    fn representative_degree_stays_below_k() {
        let mu = QuotientRingElement::mu(4, Rational::from_integer(5));
        let big = mu.pow(11); // μ^11 = μ^3·(μ^4)² = 25·μ³
        assert_eq!(big.coeffs().len(), 4);
        assert_eq!(big.coeffs()[3], Rational::from_integer(25));
    }
}
