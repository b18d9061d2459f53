//! Closed forms for `B_{N,n,χ}` and `B_{N,n}` with `n ≤ 4`, as polynomials in
//! the power sums `S_0..S_n` with coefficients rational in `N`.
//!
//! These are fixtures: nothing else in the crate computes through them.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exactnum::{rational_pow, Rational, Ring};

/// Largest `n` with a closed form here.
pub const MAX_INDEX: u32 = 4;

/// Coefficient of `S_j / f^{N-(n-j)}` in `B_{N,n,χ}`, for `j = 0..=n`.
pub fn coefficients(big_n: u32, n: u32) -> Option<Vec<Rational>> {
    let q = |x: i64| Rational::from_integer(BigInt::from(x));
    let nn = big_n as i64;
    let (n1, n2, n3, n4) = (q(nn + 1), q(nn + 2), q(nn + 3), q(nn + 4));
    let c = match n {
        0 => alloc::vec![q(1)],
        1 => alloc::vec![-n1.recip(), q(1)],
        2 => alloc::vec![q(2) / (&n1 * &n1 * &n2), -q(2) / &n1, q(1)],
        3 => alloc::vec![
            q(6) * q(nn - 1) / (&n1 * &n1 * &n1 * &n2 * &n3),
            q(6) / (&n1 * &n1 * &n2),
            -q(3) / &n1,
            q(1),
        ],
        4 => alloc::vec![
            q(24) * q(nn * nn * nn - nn * nn - 6 * nn + 2) / (&n1 * &n1 * &n1 * &n1 * &n2 * &n2 * &n3 * &n4),
            q(24) * q(nn - 1) / (&n1 * &n1 * &n1 * &n2 * &n3),
            q(12) / (&n1 * &n1 * &n2),
            -q(4) / &n1,
            q(1),
        ],
        _ => return None,
    };
    Some(c)
}

/// `B_{N,n}` from its closed form.
pub fn hb_closed_form(big_n: u32, n: u32) -> Option<Rational> {
    coefficients(big_n, n).map(|c| c[0].clone())
}

/// `B_{N,n,χ}` from its closed form, given `sums[j] = S_j` for `j ≤ n`.
pub fn number_closed_form<T: Ring>(big_n: u32, n: u32, f: u64, sums: &[T]) -> Option<T> {
    let coeffs = coefficients(big_n, n)?;
    let f = Rational::from_integer(BigInt::from(f));
    let mut acc = sums[0].zero_like();
    for (j, c) in coeffs.iter().enumerate() {
        let e = (n as i64 - j as i64) - big_n as i64;
        acc = acc.add_ref(&sums[j].scale(&(c * rational_pow(&f, e))));
    }
    Some(acc)
}
