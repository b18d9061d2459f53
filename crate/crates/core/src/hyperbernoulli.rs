//! Character-free hypergeometric Bernoulli numbers `B_{N,n}` and polynomials
//! `B_{N,n}(x)`, defined by
//!
//! ```text
//! (t^N / N!) / (e^t - Σ_{n<N} t^n/n!) = Σ_n B_{N,n} t^n / n!
//! ```
//!
//! plus the Stirling numbers and falling factorials used by the Stirling
//! expansion of the character-twisted polynomials.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{binomial, factorial, Rational};
use crate::polynomial::Polynomial;

/// Prefix table `B_{N,0}, B_{N,1}, …` for one `N`, grown on demand.
///
/// Entries depend only on `N` and their index, so extending the table in any
/// order yields the same values.
#[derive(Clone, Debug, PartialEq)]
pub struct HBTable {
    order: u32,
    values: Vec<Rational>,
}

impl HBTable {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "N must be positive");
        HBTable {
            order,
            values: vec![Rational::one()],
        }
    }

    /// The parameter `N`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Ensures entries `0..=n` exist and returns them.
    ///
    /// Uses `Σ_{i=0}^{n} B_{N,i} N! / (i! (N+n-i)!) = [n = 0]`, the coefficient
    /// identity obtained by multiplying the defining series by its denominator.
    pub fn prefix(&mut self, n: u32) -> &[Rational] {
        let big_n = self.order;
        let nf = Rational::from_integer(factorial(big_n));
        while self.values.len() <= n as usize {
            let m = self.values.len() as u32;
            let mut acc = Rational::zero();
            for (i, b) in self.values.iter().enumerate() {
                let i = i as u32;
                let w = Rational::new(factorial(m), factorial(big_n + m - i) * factorial(i));
                acc += w * b;
            }
            self.values.push(-(acc * &nf));
        }
        &self.values[..=n as usize]
    }

    pub fn get(&mut self, n: u32) -> Rational {
        self.prefix(n)[n as usize].clone()
    }
}

/// `B_{N,n}`.
pub fn hb_number(big_n: u32, n: u32) -> Rational {
    HBTable::new(big_n).get(n)
}

/// `B_{N,0}, …, B_{N,n_max}`.
pub fn hb_numbers(big_n: u32, n_max: u32) -> Vec<Rational> {
    HBTable::new(big_n).prefix(n_max).to_vec()
}

/// `B_{N,n}(x) = Σ_k binom(n, k) B_{N,k} x^{n-k}`, a monic degree-`n` polynomial.
pub fn hb_polynomial(big_n: u32, n: u32) -> Polynomial<Rational> {
    hb_polynomial_from(&hb_numbers(big_n, n), n)
}

/// Same as [`hb_polynomial`], reusing a prefix of `B_{N,k}` of length `> n`.
pub fn hb_polynomial_from(numbers: &[Rational], n: u32) -> Polynomial<Rational> {
    Polynomial::new(
        (0..=n)
            .map(|j| Rational::from_integer(binomial(n, j)) * &numbers[(n - j) as usize])
            .collect(),
    )
}

/// Stirling numbers of the second kind, rows `0..=n_max` of the triangle.
pub fn stirling2_table(n_max: u32) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max as usize {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let same = if k < n {
                    prev[k].clone() * BigInt::from(k)
                } else {
                    BigInt::zero()
                };
                let down = if k >= 1 { prev[k - 1].clone() } else { BigInt::zero() };
                same + down
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `S(n, k)`, zero when `k > n`.
pub fn stirling2(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling2_table(n)[n as usize][k as usize].clone()
}

/// `(x)_l = x (x-1) ⋯ (x-l+1)`, with `(x)_0 = 1`.
pub fn falling_factorial(x: &Rational, l: u32) -> Rational {
    (0..l).fold(Rational::one(), |acc, i| acc * (x - Rational::from_integer(i.into())))
}
