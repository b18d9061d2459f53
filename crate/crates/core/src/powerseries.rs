//! Truncated formal power series and the generating-function oracle.
//!
//! The oracle extracts `B_{N,n,χ}` and `B_{N,n,χ}(x₀)` straight from the
//! defining generating function
//!
//! ```text
//! Σ_{a=1}^{f} χ(a) t^N e^{(x+a)t} / N!
//! ------------------------------------  =  Σ_n B_{N,n,χ}(x) t^n / n!
//!     e^{ft} - Σ_{n<N} (ft)^n / n!
//! ```
//!
//! after cancelling `t^N` from numerator and denominator, so the denominator
//! becomes a unit series with constant term `f^N / N!`. No other module is
//! consulted, which keeps it usable as an independent check.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dirichlet::DirichletCharacter;
use crate::error::Error;
use crate::exactnum::{factorial, CyclotomicNumber, Rational, Ring};

/// `c_0 + c_1 t + … + c_K t^K + O(t^{K+1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> TruncatedSeries<T> {
    /// Panics if `coeffs` is empty; the bound `K` is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        TruncatedSeries { coeffs }
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    fn check(&self, rhs: &Self) -> Result<(), Error> {
        if self.bound() != rhs.bound() {
            return Err(Error::BoundMismatch {
                left: self.bound(),
                right: rhs.bound(),
            });
        }
        if !self.coeffs[0].same_context(&rhs.coeffs[0]) {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, Error> {
        self.check(rhs)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add_ref(b)).collect(),
        })
    }

    /// Cauchy product truncated at `K`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.check(rhs)?;
        let coeffs = (0..self.coeffs.len())
            .map(|n| {
                (0..=n).fold(self.coeffs[0].zero_like(), |acc, j| {
                    acc.add_ref(&self.coeffs[j].mul_ref(&rhs.coeffs[n - j]))
                })
            })
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// `q` with `q · den = self + O(t^{K+1})`, by forward substitution.
    ///
    /// `den` must have a nonzero rational constant term.
    pub fn div_unit(&self, den: &Self) -> Result<Self, Error> {
        self.check(den)?;
        let d0 = den.coeffs[0]
            .as_rational()
            .filter(|q| !q.is_zero())
            .ok_or(Error::NotAUnit)?;
        let inv = d0.recip();
        let mut q: Vec<T> = Vec::with_capacity(self.coeffs.len());
        for n in 0..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for j in 1..=n {
                acc = acc.sub_ref(&den.coeffs[j].mul_ref(&q[n - j]));
            }
            q.push(acc.scale(&inv));
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// `c · self` for a ring element `c`.
    pub fn mul_scalar(&self, c: &T) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| c.mul_ref(x)).collect(),
        }
    }
}

/// `e^{a t} = Σ a^n t^n / n!` up to `t^K`, with coefficients shaped like `proto`.
pub fn series_exp_linear<T: Ring>(proto: &T, a: &Rational, bound: usize) -> TruncatedSeries<T> {
    let one = proto.one_like();
    let mut coeffs = Vec::with_capacity(bound + 1);
    let mut term = Rational::one();
    for n in 0..=bound {
        coeffs.push(one.scale(&term));
        term = term * a / Rational::from_integer(BigInt::from(n + 1));
    }
    TruncatedSeries { coeffs }
}

/// `(e^{ft} - Σ_{n<N} (ft)^n/n!) / t^N`: coefficient `m` is `f^{N+m} / (N+m)!`.
fn cancelled_denominator<T: Ring>(proto: &T, big_n: u32, f: u64, bound: usize) -> TruncatedSeries<T> {
    let one = proto.one_like();
    TruncatedSeries {
        coeffs: (0..=bound as u32)
            .map(|m| {
                let q = Rational::new(BigInt::from(f).pow(big_n + m), factorial(big_n + m));
                one.scale(&q)
            })
            .collect(),
    }
}

/// Multiplies coefficient `n` by `n!`, turning an ordinary series into the
/// exponential-generating-function values.
fn to_egf_values<T: Ring>(series: TruncatedSeries<T>) -> Vec<T> {
    series
        .coeffs
        .into_iter()
        .enumerate()
        .map(|(n, c)| c.scale(&Rational::from_integer(factorial(n as u32))))
        .collect()
}

/// `B_{N,0}, …, B_{N,K}` by dividing `1/N!` by the cancelled denominator at `f = 1`.
pub fn hb_oracle(big_n: u32, bound: u32) -> Vec<Rational> {
    let proto = Rational::one();
    let k = bound as usize;
    let mut coeffs = alloc::vec![Rational::zero(); k + 1];
    coeffs[0] = Rational::new(BigInt::one(), factorial(big_n));
    let num = TruncatedSeries::new(coeffs);
    let den = cancelled_denominator(&proto, big_n, 1, k);
    to_egf_values(num.div_unit(&den).expect("constant term 1/N! is a unit"))
}

/// `Σ_{a=1}^{f} χ(a) e^{(x₀+a)t} / N!` up to `t^K`.
fn twisted_numerator(
    big_n: u32,
    chi: &DirichletCharacter,
    x0: &Rational,
    bound: usize,
) -> TruncatedSeries<CyclotomicNumber> {
    let zero = CyclotomicNumber::zero(chi.field());
    let mut acc = TruncatedSeries::new(alloc::vec![zero.clone(); bound + 1]);
    for a in 1..=chi.modulus() {
        let value = chi.eval(a as i64);
        if value.is_zero() {
            continue;
        }
        let shift = x0 + Rational::from_integer(BigInt::from(a));
        let term = series_exp_linear(&zero, &shift, bound).mul_scalar(&value);
        acc = acc.add(&term).expect("same bound and field");
    }
    acc.scale(&Rational::new(BigInt::one(), factorial(big_n)))
}

/// `B_{N,0,χ}(x₀), …, B_{N,K,χ}(x₀)` from the generating function.
pub fn oracle_poly_eval(big_n: u32, chi: &DirichletCharacter, x0: &Rational, bound: u32) -> Vec<CyclotomicNumber> {
    let k = bound as usize;
    let num = twisted_numerator(big_n, chi, x0, k);
    let den = cancelled_denominator(&CyclotomicNumber::zero(chi.field()), big_n, chi.modulus(), k);
    to_egf_values(num.div_unit(&den).expect("constant term f^N/N! is a unit"))
}

/// `B_{N,0,χ}, …, B_{N,K,χ}` from the generating function.
pub fn oracle_numbers(big_n: u32, chi: &DirichletCharacter, bound: u32) -> Vec<CyclotomicNumber> {
    oracle_poly_eval(big_n, chi, &Rational::zero(), bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::character;
    use crate::exactnum::{int, rational, CyclotomicField};
    use alloc::vec;
    use proptest::prelude::*;

    fn series(cs: &[Rational]) -> TruncatedSeries<Rational> {
        TruncatedSeries::new(cs.to_vec())
    }

    #[test]
    fn product_examples() {
        let a = series(&[int(1), int(1), int(0)]);
        let b = series(&[int(1), int(-1), int(0)]);
        assert_eq!(a.mul(&b).unwrap(), series(&[int(1), int(0), int(-1)]));

        let k = 10;
        let e = series_exp_linear(&int(0), &int(1), k);
        let einv = series_exp_linear(&int(0), &int(-1), k);
        let prod = e.mul(&einv).unwrap();
        assert_eq!(prod.coeffs()[0], int(1));
        assert!(prod.coeffs()[1..].iter().all(|c| c.is_zero()));

        let one = series(&[int(1), int(0), int(0)]);
        assert_eq!(a.mul(&one).unwrap(), a);
    }

    #[test]
    fn division_examples() {
        let one = series(&[int(1), int(0), int(0), int(0)]);
        let den = series(&[int(1), int(-1), int(0), int(0)]);
        assert_eq!(one.div_unit(&den).unwrap(), series(&[int(1), int(1), int(1), int(1)]));

        // (e^t - 1)/t, giving B_n / n!
        let den = series(&[
            int(1),
            rational(1, 2),
            rational(1, 6),
            rational(1, 24),
            rational(1, 120),
        ]);
        let one = series(&[int(1), int(0), int(0), int(0), int(0)]);
        let q = one.div_unit(&den).unwrap();
        assert_eq!(
            q.coeffs(),
            &[int(1), rational(-1, 2), rational(1, 12), int(0), rational(-1, 720)]
        );

        assert_eq!(den.div_unit(&one).unwrap(), den);
    }

    #[test]
    fn division_errors() {
        let a = series(&[int(1), int(2)]);
        let zero_lead = series(&[int(0), int(1)]);
        assert_eq!(a.div_unit(&zero_lead), Err(Error::NotAUnit));
        let short = series(&[int(1)]);
        assert!(matches!(a.mul(&short), Err(Error::BoundMismatch { .. })));

        let f4 = CyclotomicField::new(4);
        let z = CyclotomicNumber::zeta_pow(&f4, 1);
        let num = TruncatedSeries::new(vec![z.clone(), z.clone()]);
        let den = TruncatedSeries::new(vec![z.clone(), z.zero_like()]);
        assert_eq!(num.div_unit(&den), Err(Error::NotAUnit));

        let other = TruncatedSeries::new(vec![CyclotomicNumber::one(&CyclotomicField::new(3)); 2]);
        assert_eq!(num.mul(&other), Err(Error::ContextMismatch));
    }

    #[test]
    fn exp_linear_examples() {
        assert_eq!(
            series_exp_linear(&int(0), &int(0), 3).coeffs(),
            &[int(1), int(0), int(0), int(0)]
        );
        assert_eq!(
            series_exp_linear(&int(0), &int(1), 3).coeffs(),
            &[int(1), int(1), rational(1, 2), rational(1, 6)]
        );
        assert_eq!(
            series_exp_linear(&int(0), &int(2), 2).coeffs(),
            &[int(1), int(2), int(2)]
        );
    }

    fn consts(chi: &DirichletCharacter, qs: &[Rational]) -> Vec<CyclotomicNumber> {
        qs.iter().map(|q| chi.constant(q.clone())).collect()
    }

    #[test]
    fn oracle_number_examples() {
        let triv = character(1, 0).unwrap();
        assert_eq!(
            oracle_numbers(1, &triv, 2),
            consts(&triv, &[int(1), rational(1, 2), rational(1, 6)])
        );
        let odd4 = character(4, 1).unwrap();
        assert_eq!(oracle_numbers(1, &odd4, 1), consts(&odd4, &[int(0), rational(-1, 2)]));
        assert_eq!(oracle_numbers(2, &odd4, 1), consts(&odd4, &[int(0), rational(-1, 8)]));
    }

    #[test]
    fn oracle_poly_examples() {
        let triv = character(1, 0).unwrap();
        assert_eq!(oracle_poly_eval(1, &triv, &int(1), 1)[1], triv.constant(rational(3, 2)));
        let odd4 = character(4, 1).unwrap();
        assert_eq!(
            oracle_poly_eval(1, &odd4, &int(1), 1)[1],
            odd4.constant(rational(-1, 2))
        );
        for f in [1u64, 4, 5] {
            for chi in crate::dirichlet::enumerate_characters(f) {
                assert_eq!(oracle_poly_eval(2, &chi, &int(0), 6), oracle_numbers(2, &chi, 6));
            }
        }
    }

    #[test]
    fn principal_mod_one_gives_classical_numbers() {
        let triv = character(1, 0).unwrap();
        let got = oracle_numbers(1, &triv, 20);
        let classical = crate::hyperbernoulli::hb_numbers(1, 20);
        for n in 0..=20 {
            let want = if n == 1 { rational(1, 2) } else { classical[n].clone() };
            assert_eq!(got[n], triv.constant(want), "n={n}");
        }
    }

    #[test]
    fn prefix_is_independent_of_bound() {
        for chi in crate::dirichlet::enumerate_characters(5) {
            let short = oracle_numbers(2, &chi, 6);
            let long = oracle_numbers(2, &chi, 11);
            assert_eq!(short[..], long[..7]);
        }
    }

    proptest! {
        #[test]
        fn division_inverts_multiplication(
            a in prop::collection::vec((-9i64..10, 1i64..5), 1..=21),
            tail in prop::collection::vec((-9i64..10, 1i64..5), 20),
            lead in prop_oneof![-5i64..=-1, 1i64..=5],
        ) {
            let k = a.len();
            let a = series(&a.iter().map(|&(n, d)| rational(n, d)).collect::<Vec<_>>());
            let mut b: Vec<Rational> = vec![int(lead)];
            b.extend(tail.iter().take(k - 1).map(|&(n, d)| rational(n, d)));
            let b = series(&b);
            prop_assert_eq!(a.mul(&b).unwrap().div_unit(&b).unwrap(), a);
        }
    }
}
