//! Dense univariate polynomials over a field.
//!
//! Coefficient vectors are trimmed: the zero polynomial is the empty
//! vector and the leading coefficient of a nonzero polynomial is
//! nonzero. This is the workhorse behind binary-form gcds, squarefree
//! decomposition and the Smith form of polynomial matrices.

use super::{Field, Ring};

/// A univariate polynomial `c[0] + c[1] x + … + c[d] x^d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Poly { coeffs: vec![] };
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// Degree of a nonzero polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Order of vanishing at x = 0; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly { coeffs: vec![] };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                // i·c by repeated addition is wasteful; build i as a field element.
                let mut n = F::zero();
                let mut k = i;
                let mut base = c.clone();
                while k > 0 {
                    if k & 1 == 1 {
                        n = n.add(&base);
                    }
                    base = base.add(&base);
                    k >>= 1;
                }
                n
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// Monic rescaling; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division: `self = q·div + r` with deg r < deg div.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        let d_div = div.degree().expect("division by zero polynomial");
        let lc_inv = div.leading_coeff().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(d_div)];
        while rem.len() > d_div {
            let d_rem = rem.len() - 1;
            let q = rem.last().unwrap().mul(&lc_inv);
            if !q.is_zero() {
                quot[d_rem - d_div] = q.clone();
                for (j, c) in div.coeffs.iter().enumerate() {
                    let idx = d_rem - d_div + j;
                    rem[idx] = rem[idx].sub(&q.mul(c));
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly { coeffs: rem })
    }

    /// Exact division; panics when the remainder is nonzero.
    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, s, t) with g = s·self + t·other, g monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::constant(F::one());
        let mut s1 = Poly { coeffs: vec![] };
        let mut t0 = Poly { coeffs: vec![] };
        let mut t1 = Poly::constant(F::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.leading_coeff() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.inv().unwrap();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Yun's squarefree decomposition (characteristic zero).
    ///
    /// Returns pairs `(gᵢ, eᵢ)` with the gᵢ squarefree, pairwise coprime,
    /// non-constant, and `self = lc · Π gᵢ^eᵢ` after monic rescaling.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let f = self.monic();
        if f.degree().map_or(true, |d| d == 0) {
            return vec![];
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0);
        let mut c = df.div_exact(&a0);
        let mut factors = Vec::new();
        let mut mult = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.degree().map_or(false, |deg| deg > 0) {
                    factors.push((b.monic(), mult));
                }
                break;
            }
            let g = b.gcd(&d);
            if g.degree().map_or(false, |deg| deg > 0) {
                factors.push((g.clone(), mult));
            }
            b = b.div_exact(&g);
            c = d.div_exact(&g);
            mult += 1;
            if b.degree().map_or(true, |deg| deg == 0) {
                break;
            }
        }
        factors
    }
}

impl<F: Field> Ring for Poly<F> {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    fn one() -> Self {
        Poly::constant(F::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Poly::from_coeffs(coeffs)
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        Poly::from_coeffs(coeffs)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly { coeffs: vec![] };
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(coeffs)
    }

    fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn poly(cs: &[i64]) -> Poly<Rational> {
        Poly::from_coeffs(cs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    #[test]
    fn div_rem_recomposes() {
        let a = poly(&[2, 0, -3, 1, 5]);
        let b = poly(&[1, 2, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_products() {
        let f = poly(&[-1, 1]); // x - 1
        let g = poly(&[2, 1]); // x + 2
        let h = poly(&[0, 1]); // x
        let a = f.mul(&g);
        let b = f.mul(&h);
        assert_eq!(a.gcd(&b), f.monic());
    }

    #[test]
    fn xgcd_bezout() {
        let a = poly(&[1, 3, 3, 1]);
        let b = poly(&[1, 2, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert_eq!(g, poly(&[1, 2, 1]).monic());
    }

    #[test]
    fn yun_on_mixed_multiplicities() {
        // (x)·(x-1)²·(x+2)³
        let f = poly(&[0, 1])
            .mul(&poly(&[-1, 1]).pow(2))
            .mul(&poly(&[2, 1]).pow(3));
        let sf = f.squarefree_decomposition();
        assert_eq!(sf.len(), 3);
        let mut rebuilt = Poly::one();
        for (g, e) in &sf {
            rebuilt = rebuilt.mul(&g.pow(*e as u32));
        }
        assert_eq!(rebuilt, f.monic());
        let mults: Vec<usize> = sf.iter().map(|(_, e)| *e).collect();
        assert_eq!(mults, vec![1, 2, 3]);
    }

    #[test]
    fn valuation_counts_zero_roots() {
        assert_eq!(poly(&[0, 0, 7, 1]).valuation(), Some(2));
        assert_eq!(poly(&[]).valuation(), None);
    }
}
