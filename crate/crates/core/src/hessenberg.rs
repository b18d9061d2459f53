//! Determinants of lower Hessenberg matrices over any [`Ring`].
//!
//! For `H` with `h[i][j] = 0` whenever `j > i + 1`, the leading principal
//! minors satisfy
//!
//! ```text
//! D_0 = 1
//! D_k = Σ_{j=1}^{k} (-1)^{k-j} h[k][j] · (h[j][j+1] ⋯ h[k-1][k]) · D_{j-1}
//! ```
//!
//! which needs `O(n²)` ring operations and no division.

use alloc::vec::Vec;

use crate::exactnum::Ring;

/// Determinant of the square lower Hessenberg matrix `rows`.
///
/// Entries above the superdiagonal are ignored. Panics if `rows` is empty or
/// not square.
pub fn lower_hessenberg_det<T: Ring>(rows: &[Vec<T>]) -> T {
    let n = rows.len();
    assert!(n > 0, "empty matrix");
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");

    let one = rows[0][0].one_like();
    let mut minors: Vec<T> = Vec::with_capacity(n + 1);
    minors.push(one.clone());
    for k in 0..n {
        // 0-based row k; walk j downwards so the superdiagonal product grows.
        let mut acc = rows[k][k].mul_ref(&minors[k]);
        let mut superdiag = one.clone();
        for j in (0..k).rev() {
            superdiag = superdiag.mul_ref(&rows[j][j + 1]);
            let term = rows[k][j].mul_ref(&superdiag).mul_ref(&minors[j]);
            acc = if (k - j) % 2 == 1 {
                acc.sub_ref(&term)
            } else {
                acc.add_ref(&term)
            };
        }
        minors.push(acc);
    }
    minors.pop().expect("n > 0")
}
