//! Dense univariate polynomials over a [`Ring`], lowest degree first.

use alloc::vec;
use alloc::vec::Vec;

use crate::exactnum::{binomial, Rational, Ring};

/// A polynomial `Σ c_k x^k`.
///
/// The coefficient vector is never empty and carries no trailing zeros,
/// except that the zero polynomial is the single coefficient `0`. This keeps
/// the coefficient ring's context (e.g. the cyclotomic order) available even
/// for the zero polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Polynomial<T> {
    /// Panics if `coeffs` is empty.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "polynomial needs at least one coefficient");
        while coeffs.len() > 1 && coeffs.last().is_some_and(Ring::is_zero_elem) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Polynomial { coeffs: vec![c] }
    }

    /// The monomial `c x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.coeffs[0].zero_like())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero_elem()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> T {
        let mut acc = self.coeffs[0].zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(x).add_ref(c);
        }
        acc
    }

    /// Coefficients of `p(x + y)`.
    pub fn shift(&self, y: &Rational) -> Self {
        let n = self.coeffs.len();
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; n];
        // x^k -> Σ_j binom(k, j) y^{k-j} x^j
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero_elem() {
                continue;
            }
            let mut ypow = Rational::from_integer(1.into());
            for j in (0..=k).rev() {
                let w = Rational::from_integer(binomial(k as u32, j as u32)) * &ypow;
                out[j] = out[j].add_ref(&c.scale(&w));
                ypow *= y;
            }
        }
        Self::new(out)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::constant(self.coeffs[0].zero_like());
        }
        let out = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&Rational::from_integer(((i + 1) as i64).into())))
            .collect();
        Self::new(out)
    }

    /// Applies `f` to every coefficient.
    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Ring> Ring for Polynomial<T> {
    fn zero_like(&self) -> Self {
        Self::constant(self.coeffs[0].zero_like())
    }

    fn one_like(&self) -> Self {
        Self::constant(self.coeffs[0].one_like())
    }

    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add_ref(&rhs.coeff(k))).collect())
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).sub_ref(&rhs.coeff(k))).collect())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::new(out)
    }

    fn neg_ref(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }

    fn scale(&self, q: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(q)).collect())
    }

    fn same_context(&self, other: &Self) -> bool {
        self.coeffs[0].same_context(&other.coeffs[0])
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].as_rational()
        } else {
            None
        }
    }
}
