//! Homogeneous forms in two variables and their root-multiplicity
//! structure.
//!
//! A form of degree d is stored as d+1 rational coefficients, entry i
//! holding the coefficient of v0^(d−i)·v1^i. All multiplicity machinery
//! works through dehomogenization at v1 = 1 with explicit tracking of
//! the v1-power, so no root isolation and no factorization into
//! irreducibles is ever needed: conjugate roots stay grouped inside a
//! squarefree certificate factor.

use std::fmt;

use super::partition::{normalize, Partition};
use super::{Field, FieldError, Poly, Rational, Ring};

/// A homogeneous polynomial of degree d in the variables v0, v1.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    /// Coefficient i multiplies v0^(d−i)·v1^i; length is d+1.
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs a declared degree");
        BinaryForm { coeffs }
    }

    /// The linear form z0·v0 + z1·v1.
    pub fn linear(z0: Rational, z1: Rational) -> Self {
        BinaryForm { coeffs: vec![z0, z1] }
    }

    pub fn constant(c: Rational) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    /// The zero form of the given degree.
    pub fn zero_of_degree(d: usize) -> Self {
        BinaryForm { coeffs: vec![Rational::zero(); d + 1] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, v0: &Rational, v1: &Rational) -> Rational {
        let d = self.degree();
        let mut acc = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&c.mul(&v0.pow((d - i) as u32)).mul(&v1.pow(i as u32)));
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs = vec![Rational::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        BinaryForm { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BinaryForm { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = BinaryForm::constant(Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes linear forms for the variables:
    /// f(v0, v1) ↦ f(a·v0 + c·v1, b·v0 + d·v1).
    pub fn substitute(&self, l0: &BinaryForm, l1: &BinaryForm) -> Self {
        assert_eq!(l0.degree(), 1);
        assert_eq!(l1.degree(), 1);
        let d = self.degree();
        let mut acc = BinaryForm::zero_of_degree(d);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = l0.pow(d - i).mul(&l1.pow(i)).scale(c);
            acc = BinaryForm::new(
                acc.coeffs.iter().zip(term.coeffs.iter()).map(|(a, b)| a.add(b)).collect(),
            );
        }
        acc
    }

    /// Rescales so that the first nonzero coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => self.scale(&lead.inv().unwrap()),
        }
    }

    /// Equality up to a nonzero scalar (and up to padding by a zero form).
    pub fn proportional_to(&self, other: &Self) -> bool {
        self.normalized() == other.normalized() && self.degree() == other.degree()
    }

    /// Dehomogenization at v1 = 1 with the v1-power tracked separately:
    /// `self = v1^pow · homogenize(poly)`, where the polynomial variable
    /// is x = v0. Returns `None` for the zero form.
    pub fn dehomogenize(&self) -> Option<(Poly<Rational>, usize)> {
        let d = self.degree();
        let v1_pow = self.coeffs.iter().position(|c| !c.is_zero())?;
        // poly coefficient of x^j is the form coefficient of v0^j, i.e. index d−j.
        let deg_p = d - v1_pow;
        let coeffs = (0..=deg_p).map(|j| self.coeffs[d - j].clone()).collect();
        Some((Poly::from_coeffs(coeffs), v1_pow))
    }

    /// Inverse of [`BinaryForm::dehomogenize`].
    pub fn homogenize(p: &Poly<Rational>, v1_pow: usize) -> Self {
        let deg_p = p.degree().expect("cannot homogenize the zero polynomial");
        let d = deg_p + v1_pow;
        let mut coeffs = vec![Rational::zero(); d + 1];
        for j in 0..=deg_p {
            coeffs[d - j] = p.coeff(j);
        }
        BinaryForm { coeffs }
    }

    /// Monic-style gcd of two forms (zero forms behave as gcd neutral).
    pub fn gcd(&self, other: &Self) -> Self {
        match (self.dehomogenize(), other.dehomogenize()) {
            (None, None) => BinaryForm::constant(Rational::one()),
            (None, Some(_)) => other.normalized(),
            (Some(_), None) => self.normalized(),
            (Some((p, a)), Some((q, b))) => {
                let g = p.gcd(&q);
                BinaryForm::homogenize(&g, a.min(b)).normalized()
            }
        }
    }

    /// Exact division; panics if `div` does not divide `self`.
    pub fn div_exact(&self, div: &Self) -> Self {
        let (p, a) = self.dehomogenize().expect("cannot divide the zero form");
        let (q, b) = div.dehomogenize().expect("division by zero form");
        assert!(b <= a, "inexact division: v1-power");
        BinaryForm::homogenize(&p.div_exact(&q), a - b)
    }

    /// Multiplicity of the (non-constant) factor `div` in `self`.
    pub fn multiplicity_of(&self, div: &Self) -> usize {
        assert!(div.degree() >= 1 && !div.is_zero(), "divisor must be non-constant");
        let mut f = self.clone();
        let mut m = 0;
        loop {
            let (p, a) = match f.dehomogenize() {
                None => return 0,
                Some(x) => x,
            };
            let (q, b) = div.dehomogenize().expect("zero divisor");
            if b > a {
                return m;
            }
            let (quot, rem) = p.div_rem(&q);
            if !rem.is_zero() {
                return m;
            }
            if quot.is_zero() {
                // div had higher x-degree than p.
                return m;
            }
            f = BinaryForm::homogenize(&quot, a - b);
            m += 1;
        }
    }

    /// Squarefree decomposition with the factor v1 handled through its
    /// tracked power. Errors on the zero form.
    pub fn squarefree_decompose(&self) -> Result<MultiplicityProfile, FieldError> {
        let (p, v1_pow) = self.dehomogenize().ok_or(FieldError::ZeroForm)?;
        let mut factors: Vec<(BinaryForm, usize)> = Vec::new();
        if v1_pow > 0 {
            factors.push((
                BinaryForm::linear(Rational::zero(), Rational::one()),
                v1_pow,
            ));
        }
        for (g, e) in p.squarefree_decomposition() {
            factors.push((BinaryForm::homogenize(&g, 0).normalized(), e));
        }
        // Sort by multiplicity, then degree, for a deterministic certificate.
        factors.sort_by_key(|(g, e)| (*e, g.degree()));
        let mut partition: Vec<usize> = Vec::new();
        for (g, e) in &factors {
            partition.extend(std::iter::repeat(*e).take(g.degree()));
        }
        Ok(MultiplicityProfile { partition: normalize(&partition), factors })
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut terms: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match (d - i, i) {
                (0, 0) => String::new(),
                (a, 0) => format!("v0^{a}"),
                (0, b) => format!("v1^{b}"),
                (a, b) => format!("v0^{a}·v1^{b}"),
            };
            terms.push(if mono.is_empty() { c.to_string() } else { format!("{c}·{mono}") });
        }
        if terms.is_empty() {
            write!(f, "0 (degree {d})")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// The root-multiplicity structure of a nonzero binary form: pairwise
/// coprime squarefree certificate factors with multiplicities, and the
/// induced partition (deg gᵢ copies of eᵢ, sorted decreasingly).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    pub partition: Partition,
    pub factors: Vec<(BinaryForm, usize)>,
}

impl MultiplicityProfile {
    /// Number of distinct projective roots.
    pub fn distinct_roots(&self) -> usize {
        self.factors.iter().map(|(g, _)| g.degree()).sum()
    }

    /// Count of distinct roots per multiplicity, ascending in multiplicity.
    pub fn root_counts_by_multiplicity(&self) -> Vec<(usize, usize)> {
        let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
        for (g, e) in &self.factors {
            *counts.entry(*e).or_insert(0) += g.degree();
        }
        counts.into_iter().collect()
    }

    /// Product of factor^multiplicity, normalized.
    pub fn reassemble(&self) -> BinaryForm {
        let mut acc = BinaryForm::constant(Rational::one());
        for (g, e) in &self.factors {
            acc = acc.mul(&g.pow(*e));
        }
        acc.normalized()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(cs: &[i64]) -> BinaryForm {
        BinaryForm::new(cs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    #[test]
    fn monomial_factorization() {
        // v0²·v1 has coefficients (0,1,0,0): degree 3, coefficient of v0²v1 is index 1.
        let f = form(&[0, 1, 0, 0]);
        let profile = f.squarefree_decompose().unwrap();
        assert_eq!(profile.partition, vec![2, 1]);
        assert_eq!(profile.distinct_roots(), 2);
    }

    #[test]
    fn perfect_cube() {
        // (v0+v1)³ = v0³+3v0²v1+3v0v1²+v1³
        let f = form(&[1, 3, 3, 1]);
        let profile = f.squarefree_decompose().unwrap();
        assert_eq!(profile.partition, vec![3]);
        assert!(profile.factors[0].0.proportional_to(&form(&[1, 1])));
    }

    #[test]
    fn zero_form_is_an_error() {
        assert_eq!(
            BinaryForm::zero_of_degree(4).squarefree_decompose(),
            Err(FieldError::ZeroForm)
        );
    }

    #[test]
    fn reassembly_matches_input_up_to_scalar() {
        // 6·(v0−v1)²·(v0²+v1²)·v1
        let f = form(&[1, -1]).pow(2).mul(&form(&[1, 0, 1])).mul(&form(&[0, 1])).scale(&Rational::from_integer(6));
        let profile = f.squarefree_decompose().unwrap();
        assert!(profile.reassemble().proportional_to(&f));
        assert_eq!(profile.partition, vec![2, 1, 1, 1]);
    }

    #[test]
    fn dehomogenize_round_trip() {
        let f = form(&[0, 0, 3, -1, 0]); // v1²·(3v0² − v0v1)= v1²·v0·(3v0 − v1)
        let (p, pow) = f.dehomogenize().unwrap();
        assert_eq!(pow, 2);
        let g = BinaryForm::homogenize(&p, pow);
        assert_eq!(g, f);
    }

    #[test]
    fn gcd_divides_both_and_catches_common_factors() {
        let a = form(&[1, 1]); // v0+v1
        let b = form(&[0, 1]); // v1
        let f = a.pow(2).mul(&b);
        let g = a.mul(&b).mul(&form(&[1, -1]));
        let d = f.gcd(&g);
        assert_eq!(d.degree(), 2);
        assert_eq!(f.multiplicity_of(&d), 1);
        assert_eq!(g.multiplicity_of(&d), 1);
        assert!(d.proportional_to(&a.mul(&b)));
    }

    #[test]
    fn multiplicity_counting() {
        let a = form(&[1, 2]);
        let f = a.pow(3).mul(&form(&[1, 0, 7]));
        assert_eq!(f.multiplicity_of(&a), 3);
        assert_eq!(f.multiplicity_of(&form(&[1, 0, 7])), 1);
        assert_eq!(f.multiplicity_of(&form(&[1, 1])), 0);
    }
}
