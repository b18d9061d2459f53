//! Generalized hypergeometric Bernoulli numbers `B_{N,n,χ}` and polynomials
//! `B_{N,n,χ}(x)`.
//!
//! Every quantity is available through several independent formulas, so the
//! routes can be checked against each other with exact equality:
//!
//! | route                 | numbers               | polynomials             |
//! |-----------------------|-----------------------|-------------------------|
//! | generating function   | [`oracle_numbers`]    | [`oracle_poly_eval`]    |
//! | via `B_{N,k}`         | [`gbn_cor10`]         | [`gbp_from_numbers`]    |
//! | recurrence            | [`gbn_recurrence`]    | [`gbp_recurrence_poly`] |
//! | composition sums `T`  | [`gbn_tsum`]          | [`gbp_tsum_poly`]       |
//! | composition sums `T̃`  | [`gbn_ttilde`]        | [`gbp_tsum_poly`]       |
//! | Hessenberg determinant| [`gbn_determinant`]   | [`gbp_determinant`]     |
//! | via `B_{N,n}(a/f)`    | [`gbn_via_hbp`]       |                         |
//!
//! All arithmetic for a character happens in that character's own field
//! `Q(ζ_m)`. Functions named `*_prefix` / `*_numbers` return the whole table
//! `0..=n_max`, which is how the single-value functions are computed too.
//!
//! [`oracle_numbers`]: crate::powerseries::oracle_numbers
//! [`oracle_poly_eval`]: crate::powerseries::oracle_poly_eval

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dirichlet::DirichletCharacter;
use crate::exactnum::{binomial, factorial, rational_pow, CyclotomicNumber, Rational, Ring};
use crate::hessenberg::lower_hessenberg_det;
use crate::hyperbernoulli::{falling_factorial, hb_numbers, hb_polynomial_from, stirling2_table};
use crate::polynomial::Polynomial;
use crate::powerseries::oracle_numbers;

/// `B_{N,n,χ}(x)` or `S_n(x)`: a polynomial over the character's field.
pub type GHBPolynomial = Polynomial<CyclotomicNumber>;

fn ratio(num: BigInt, den: BigInt) -> Rational {
    Rational::new(num, den)
}

fn from_int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

fn f_rat(chi: &DirichletCharacter) -> Rational {
    from_int(BigInt::from(chi.modulus()))
}

/// `N! n! f^{n-i} / ((N+n-i)! i!)`, the recurrence weight.
fn recurrence_weight(big_n: u32, n: u32, i: u32, f: &Rational) -> Rational {
    ratio(factorial(big_n) * factorial(n), factorial(big_n + n - i) * factorial(i)) * rational_pow(f, (n - i) as i64)
}

/// `α_i = N! f^i / (N+i)!`.
fn alpha(big_n: u32, i: u32, f: &Rational) -> Rational {
    ratio(factorial(big_n), factorial(big_n + i)) * rational_pow(f, i as i64)
}

/// `B_{N,0,χ} = S_0 / f^N`, the shared base case.
fn base_value(big_n: u32, chi: &DirichletCharacter) -> CyclotomicNumber {
    chi.power_sum(0).scale(&rational_pow(&f_rat(chi), -(big_n as i64)))
}

// ---------------------------------------------------------------------------
// Via the character-free numbers
// ---------------------------------------------------------------------------

/// `B_{N,n,χ} = Σ_a χ(a) Σ_k binom(n,k) B_{N,k} a^{n-k} f^{k-N}` for `n = 0..=n_max`.
pub fn gbn_cor10_prefix(big_n: u32, chi: &DirichletCharacter, n_max: u32) -> Vec<CyclotomicNumber> {
    let hb = hb_numbers(big_n, n_max);
    let f = f_rat(chi);
    (0..=n_max)
        .map(|n| {
            let mut acc = chi.constant(Rational::zero());
            for a in 1..=chi.modulus() {
                let v = chi.eval(a as i64);
                if v.is_zero() {
                    continue;
                }
                let a = from_int(BigInt::from(a));
                let inner = (0..=n).fold(Rational::zero(), |s, k| {
                    s + from_int(binomial(n, k))
                        * &hb[k as usize]
                        * rational_pow(&a, (n - k) as i64)
                        * rational_pow(&f, k as i64 - big_n as i64)
                });
                acc = acc.add_ref(&v.scale(&inner));
            }
            acc
        })
        .collect()
}

pub fn gbn_cor10(big_n: u32, n: u32, chi: &DirichletCharacter) -> CyclotomicNumber {
    gbn_cor10_prefix(big_n, chi, n).pop().expect("nonempty")
}

/// `B_{N,n,χ} = f^{n-N} Σ_a χ(a) B_{N,n}(a/f)` for `n = 0..=n_max`.
pub fn gbn_via_hbp_prefix(big_n: u32, chi: &DirichletCharacter, n_max: u32) -> Vec<CyclotomicNumber> {
    let hb = hb_numbers(big_n, n_max);
    let f = f_rat(chi);
    (0..=n_max)
        .map(|n| {
            let poly = hb_polynomial_from(&hb, n);
            let mut acc = chi.constant(Rational::zero());
            for a in 1..=chi.modulus() {
                let v = chi.eval(a as i64);
                if !v.is_zero() {
                    let x = from_int(BigInt::from(a)) / &f;
                    acc = acc.add_ref(&v.scale(&poly.eval(&x)));
                }
            }
            acc.scale(&rational_pow(&f, n as i64 - big_n as i64))
        })
        .collect()
}

pub fn gbn_via_hbp(big_n: u32, n: u32, chi: &DirichletCharacter) -> CyclotomicNumber {
    gbn_via_hbp_prefix(big_n, chi, n).pop().expect("nonempty")
}

// ---------------------------------------------------------------------------
// Recurrence
// ---------------------------------------------------------------------------

/// Runs `B_n = S_n / f^N - Σ_{i<n} w(n,i) B_i` over any coefficient ring,
/// given the right-hand sides `S_0..S_{n_max}`.
fn run_recurrence<T: Ring>(big_n: u32, f: &Rational, sums: &[T]) -> Vec<T> {
    let inv_fn = rational_pow(f, -(big_n as i64));
    let mut out: Vec<T> = Vec::with_capacity(sums.len());
    for (n, s) in sums.iter().enumerate() {
        let n = n as u32;
        let mut acc = s.scale(&inv_fn);
        for (i, b) in out.iter().enumerate() {
            acc = acc.sub_ref(&b.scale(&recurrence_weight(big_n, n, i as u32, f)));
        }
        out.push(acc);
    }
    out
}

pub fn gbn_recurrence_prefix(big_n: u32, chi: &DirichletCharacter, n_max: u32) -> Vec<CyclotomicNumber> {
    run_recurrence(big_n, &f_rat(chi), &chi.power_sums(n_max))
}

pub fn gbn_recurrence(big_n: u32, n: u32, chi: &DirichletCharacter) -> CyclotomicNumber {
    gbn_recurrence_prefix(big_n, chi, n).pop().expect("nonempty")
}

pub fn gbp_recurrence_prefix(big_n: u32, chi: &DirichletCharacter, n_max: u32) -> Vec<GHBPolynomial> {
    let sums: Vec<GHBPolynomial> = (0..=n_max).map(|n| chi.power_sum_poly(n)).collect();
    run_recurrence(big_n, &f_rat(chi), &sums)
}

pub fn gbp_recurrence_poly(big_n: u32, n: u32, chi: &DirichletCharacter) -> GHBPolynomial {
    gbp_recurrence_prefix(big_n, chi, n).pop().expect("nonempty")
}

/// `binom(N+n, n)^{-1} Σ_{i=0}^{n} binom(N+n, i) B_{N,i,χ} f^{N+n-i}`, which
/// equals `S_n` for `n ≥ 1`. The numbers come from the generating function.
pub fn brec_check(big_n: u32, n: u32, chi: &DirichletCharacter) -> CyclotomicNumber {
    brec_check_with(big_n, n, chi, &oracle_numbers(big_n, chi, n))
}

/// [`brec_check`] over a caller-supplied prefix `B_{N,0..=n,χ}` (or the
/// polynomial prefix, to check the `S_n(x)` form).
pub fn brec_check_with<T: Ring>(big_n: u32, n: u32, chi: &DirichletCharacter, prefix: &[T]) -> T {
    let f = f_rat(chi);
    let mut acc = prefix[0].zero_like();
    for i in 0..=n {
        let w = from_int(binomial(big_n + n, i)) * rational_pow(&f, (big_n + n - i) as i64);
        acc = acc.add_ref(&prefix[i as usize].scale(&w));
    }
    acc.scale(&ratio(BigInt::one(), binomial(big_n + n, n)))
}

// ---------------------------------------------------------------------------
// Composition sums
// ---------------------------------------------------------------------------

/// Whether composition parts must be positive or may be zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositionKind {
    /// Parts `≥ 1`: `T_r(k)`.
    Strict,
    /// Parts `≥ 0`: `T̃_r(k)`.
    Weak,
}

/// Table of `(-N!)^r Σ_{i_1+…+i_r = k} Π 1/(N+i_j)!` for `0 ≤ r, k ≤ bound`.
///
/// Built by the convolution `T_r(k) = -N! Σ_i T_{r-1}(k-i) / (N+i)!`, with `i`
/// starting at 1 (strict) or 0 (weak).
#[derive(Clone, Debug, PartialEq)]
pub struct CompositionSums {
    big_n: u32,
    kind: CompositionKind,
    /// `table[r][k]`
    table: Vec<Vec<Rational>>,
}

impl CompositionSums {
    pub fn new(big_n: u32, kind: CompositionKind, bound: u32) -> Self {
        let b = bound as usize;
        let neg_nf = -from_int(factorial(big_n));
        let inv: Vec<Rational> = (0..=bound)
            .map(|i| ratio(BigInt::one(), factorial(big_n + i)))
            .collect();
        let first = match kind {
            CompositionKind::Strict => 1,
            CompositionKind::Weak => 0,
        };
        let mut table = vec![vec![Rational::zero(); b + 1]; b + 1];
        table[0][0] = Rational::one();
        for r in 1..=b {
            for k in 0..=b {
                let mut acc = Rational::zero();
                for i in first..=k {
                    let prev = &table[r - 1][k - i];
                    if !prev.is_zero() {
                        acc += prev * &inv[i];
                    }
                }
                table[r][k] = acc * &neg_nf;
            }
        }
        CompositionSums { big_n, kind, table }
    }

    pub fn kind(&self) -> CompositionKind {
        self.kind
    }

    pub fn big_n(&self) -> u32 {
        self.big_n
    }

    pub fn bound(&self) -> u32 {
        (self.table.len() - 1) as u32
    }

    /// `T_r(k)` (or `T̃_r(k)`); panics past the bound.
    pub fn get(&self, r: u32, k: u32) -> &Rational {
        &self.table[r as usize][k as usize]
    }

    /// The inner sum multiplying `S_{n-k}` in the expansion: `Σ_r T_r(k)`
    /// (strict) or `Σ_r binom(k+1, r+1) T̃_r(k)` (weak).
    pub fn inner(&self, k: u32) -> Rational {
        (0..=k).fold(Rational::zero(), |acc, r| {
            let t = self.get(r, k);
            match self.kind {
                CompositionKind::Strict => acc + t,
                CompositionKind::Weak => acc + from_int(binomial(k + 1, r + 1)) * t,
            }
        })
    }
}

/// `T_r(k)` with positive parts.
pub fn t_strict(big_n: u32, r: u32, k: u32) -> Rational {
    CompositionSums::new(big_n, CompositionKind::Strict, r.max(k))
        .get(r, k)
        .clone()
}

/// `T̃_r(k)` with nonnegative parts.
pub fn t_weak(big_n: u32, r: u32, k: u32) -> Rational {
    CompositionSums::new(big_n, CompositionKind::Weak, r.max(k))
        .get(r, k)
        .clone()
}

/// `Σ_k (k! / f^{N-k}) binom(n,k) · inner(k) · S_{n-k}` over any coefficient
/// ring; `sums[j]` is `S_j` or `S_j(x)`.
fn composition_expansion<T: Ring>(comp: &CompositionSums, f: &Rational, n: u32, sums: &[T]) -> T {
    let big_n = comp.big_n as i64;
    let mut acc = sums[0].zero_like();
    for k in 0..=n {
        let w = from_int(factorial(k) * binomial(n, k)) * rational_pow(f, k as i64 - big_n) * comp.inner(k);
        if !w.is_zero() {
            acc = acc.add_ref(&sums[(n - k) as usize].scale(&w));
        }
    }
    acc
}

fn tsum_prefix(big_n: u32, chi: &DirichletCharacter, n_max: u32, kind: CompositionKind) -> Vec<CyclotomicNumber> {
    let comp = CompositionSums::new(big_n, kind, n_max);
    let sums = chi.power_sums(n_max);
    let f = f_rat(chi);
    (0..=n_max)
        .map(|n| {
            if n == 0 {
                base_value(big_n, chi)
            } else {
                composition_expansion(&comp, &f, n, &sums)
            }
        })
        .collect()
}

pub fn gbn_tsum_prefix(big_n: u32, chi: &DirichletCharacter, n_max: u32) -> Vec<CyclotomicNumber> {
    tsum_prefix(big_n, chi, n_max, CompositionKind::Strict)
}

pub fn gbn_ttilde_prefix(big_n: u32, chi: &DirichletCharacter, n_max: u32) -> Vec<CyclotomicNumber> {
    tsum_prefix(big_n, chi, n_max, CompositionKind::Weak)
}

pub fn gbn_tsum(big_n: u32, n: u32, chi: &DirichletCharacter) -> CyclotomicNumber {
    gbn_tsum_prefix(big_n, chi, n).pop().expect("nonempty")
}

pub fn gbn_ttilde(big_n: u32, n: u32, chi: &DirichletCharacter) -> CyclotomicNumber {
    gbn_ttilde_prefix(big_n, chi, n).pop().expect("nonempty")
}

/// Polynomial form of the composition-sum expansion; `weak` selects `T̃`.
pub fn gbp_tsum_prefix(big_n: u32, chi: &DirichletCharacter, n_max: u32, weak: bool) -> Vec<GHBPolynomial> {
    let kind = if weak {
        CompositionKind::Weak
    } else {
        CompositionKind::Strict
    };
    let comp = CompositionSums::new(big_n, kind, n_max);
    let sums: Vec<GHBPolynomial> = (0..=n_max).map(|n| chi.power_sum_poly(n)).collect();
    let f = f_rat(chi);
    (0..=n_max)
        .map(|n| {
            if n == 0 {
                Polynomial::constant(base_value(big_n, chi))
            } else {
                composition_expansion(&comp, &f, n, &sums)
            }
        })
        .collect()
}

pub fn gbp_tsum_poly(big_n: u32, n: u32, chi: &DirichletCharacter, weak: bool) -> GHBPolynomial {
    gbp_tsum_prefix(big_n, chi, n, weak).pop().expect("nonempty")
}

// ---------------------------------------------------------------------------
// Hessenberg determinants
// ---------------------------------------------------------------------------

/// `Ŝ_n = (α_n S_0 - S_n / n!) / f^N`.
pub fn hat_s(big_n: u32, n: u32, chi: &DirichletCharacter) -> CyclotomicNumber {
    let f = f_rat(chi);
    hat_from(big_n, n, &f, &chi.power_sum(0), &chi.power_sum(n))
}

/// `Ŝ_n(x) = (α_n S_0 - S_n(x) / n!) / f^N`.
pub fn hat_s_poly(big_n: u32, n: u32, chi: &DirichletCharacter) -> GHBPolynomial {
    let f = f_rat(chi);
    let s0 = Polynomial::constant(chi.power_sum(0));
    hat_from(big_n, n, &f, &s0, &chi.power_sum_poly(n))
}

fn hat_from<T: Ring>(big_n: u32, n: u32, f: &Rational, s0: &T, sn: &T) -> T {
    let a = s0.scale(&alpha(big_n, n, f));
    let b = sn.scale(&ratio(BigInt::one(), factorial(n)));
    a.sub_ref(&b).scale(&rational_pow(f, -(big_n as i64)))
}

/// `(-1)^n n!` times the determinant of the `n × n` lower Hessenberg matrix
/// with `α_{i-j+1}` on and below the diagonal, `1` on the superdiagonal, and
/// last row `hats[n], …, hats[1]`.
fn determinant_value<T: Ring>(big_n: u32, n: u32, f: &Rational, hats: &[T]) -> T {
    let n_us = n as usize;
    let proto = &hats[1];
    let zero = proto.zero_like();
    let one = proto.one_like();
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(n_us);
    for i in 0..n_us - 1 {
        let row = (0..n_us)
            .map(|j| {
                if j <= i {
                    proto.constant_like(&alpha(big_n, (i - j + 1) as u32, f))
                } else if j == i + 1 {
                    one.clone()
                } else {
                    zero.clone()
                }
            })
            .collect();
        rows.push(row);
    }
    rows.push((0..n_us).map(|j| hats[n_us - j].clone()).collect());
    let sign_fact = from_int(factorial(n))
        * if n.is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        };
    lower_hessenberg_det(&rows).scale(&sign_fact)
}

pub fn gbn_determinant_prefix(big_n: u32, chi: &DirichletCharacter, n_max: u32) -> Vec<CyclotomicNumber> {
    let f = f_rat(chi);
    let s0 = chi.power_sum(0);
    let sums = chi.power_sums(n_max);
    let hats: Vec<CyclotomicNumber> = (0..=n_max)
        .map(|k| hat_from(big_n, k, &f, &s0, &sums[k as usize]))
        .collect();
    (0..=n_max)
        .map(|n| {
            if n == 0 {
                base_value(big_n, chi)
            } else {
                determinant_value(big_n, n, &f, &hats)
            }
        })
        .collect()
}

pub fn gbn_determinant(big_n: u32, n: u32, chi: &DirichletCharacter) -> CyclotomicNumber {
    if n == 0 {
        return base_value(big_n, chi);
    }
    let f = f_rat(chi);
    let hats: Vec<CyclotomicNumber> = (0..=n).map(|k| hat_s(big_n, k, chi)).collect();
    determinant_value(big_n, n, &f, &hats)
}

pub fn gbp_determinant_prefix(big_n: u32, chi: &DirichletCharacter, n_max: u32) -> Vec<GHBPolynomial> {
    let f = f_rat(chi);
    let s0 = Polynomial::constant(chi.power_sum(0));
    let hats: Vec<GHBPolynomial> = (0..=n_max)
        .map(|k| hat_from(big_n, k, &f, &s0, &chi.power_sum_poly(k)))
        .collect();
    (0..=n_max)
        .map(|n| {
            if n == 0 {
                Polynomial::constant(base_value(big_n, chi))
            } else {
                determinant_value(big_n, n, &f, &hats)
            }
        })
        .collect()
}

pub fn gbp_determinant(big_n: u32, n: u32, chi: &DirichletCharacter) -> GHBPolynomial {
    gbp_determinant_prefix(big_n, chi, n).pop().expect("nonempty")
}

// ---------------------------------------------------------------------------
// Polynomials from numbers
// ---------------------------------------------------------------------------

/// `Σ_k binom(n,k) B_{N,k,χ} x^{n-k}` from a number prefix of length `> n`.
pub fn gbp_from_prefix(numbers: &[CyclotomicNumber], n: u32) -> GHBPolynomial {
    Polynomial::new(
        (0..=n)
            .map(|j| numbers[(n - j) as usize].scale(&from_int(binomial(n, j))))
            .collect(),
    )
}

/// `B_{N,n,χ}(x) = Σ_k binom(n,k) B_{N,k,χ} x^{n-k}`, numbers from the recurrence.
pub fn gbp_from_numbers(big_n: u32, n: u32, chi: &DirichletCharacter) -> GHBPolynomial {
    gbp_from_prefix(&gbn_recurrence_prefix(big_n, chi, n), n)
}

pub fn gbp_from_numbers_prefix(big_n: u32, chi: &DirichletCharacter, n_max: u32) -> Vec<GHBPolynomial> {
    let numbers = gbn_recurrence_prefix(big_n, chi, n_max);
    (0..=n_max).map(|n| gbp_from_prefix(&numbers, n)).collect()
}

/// Coefficients of `p(x + y)`.
pub fn gbp_shift(p: &GHBPolynomial, y: &Rational) -> GHBPolynomial {
    p.shift(y)
}

pub fn gbp_derivative(p: &GHBPolynomial) -> GHBPolynomial {
    p.derivative()
}

/// `Σ_k Σ_l binom(n,k) S(k,l) (x₀)_l B_{N,n-k,χ}`, given `B_{N,0..=n,χ}`.
pub fn gbp_stirling_with(numbers: &[CyclotomicNumber], n: u32, x0: &Rational) -> CyclotomicNumber {
    let st = stirling2_table(n);
    let mut acc = numbers[0].zero_like();
    for k in 0..=n {
        let inner = (0..=k).fold(Rational::zero(), |s, l| {
            s + from_int(st[k as usize][l as usize].clone()) * falling_factorial(x0, l)
        });
        let w = from_int(binomial(n, k)) * inner;
        acc = acc.add_ref(&numbers[(n - k) as usize].scale(&w));
    }
    acc
}

pub fn gbp_stirling(big_n: u32, n: u32, chi: &DirichletCharacter, x0: &Rational) -> CyclotomicNumber {
    gbp_stirling_with(&gbn_recurrence_prefix(big_n, chi, n), n, x0)
}

// ---------------------------------------------------------------------------
// Principal character of modulus 1
// ---------------------------------------------------------------------------

/// `Σ_{m=0}^{min(N-1,n)} binom(n,m) B_{N,n-m}`, plus 1 when `n = N`.
pub fn trivial_number_formula(big_n: u32, n: u32) -> Rational {
    let hb = hb_numbers(big_n, n);
    let top = (big_n - 1).min(n);
    let sum = (0..=top).fold(Rational::zero(), |acc, m| {
        acc + from_int(binomial(n, m)) * &hb[(n - m) as usize]
    });
    if n == big_n {
        sum + Rational::one()
    } else {
        sum
    }
}

/// `Σ_{i=0}^{n} binom(n,i) B_{N,n-i}(x)` for `n < N`, and
/// `binom(n,N) x^{n-N} + Σ_{i=0}^{N-1} binom(n,i) B_{N,n-i}(x)` for `n ≥ N`.
pub fn trivial_poly_formula(big_n: u32, n: u32) -> Polynomial<Rational> {
    let hb = hb_numbers(big_n, n);
    let top = (big_n - 1).min(n);
    let mut acc = Polynomial::constant(Rational::zero());
    for i in 0..=top {
        let term = hb_polynomial_from(&hb, n - i).scale(&from_int(binomial(n, i)));
        acc = acc.add_ref(&term);
    }
    if n >= big_n {
        acc = acc.add_ref(&Polynomial::monomial(
            from_int(binomial(n, big_n)),
            (n - big_n) as usize,
        ));
    }
    acc
}

// ---------------------------------------------------------------------------
// Method selection
// ---------------------------------------------------------------------------

/// Routes to `B_{N,n,χ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NumberMethod {
    Oracle,
    Cor10,
    Recurrence,
    Tsum,
    Ttilde,
    Determinant,
    Hbp,
}

impl NumberMethod {
    pub const ALL: [NumberMethod; 7] = [
        NumberMethod::Oracle,
        NumberMethod::Cor10,
        NumberMethod::Recurrence,
        NumberMethod::Tsum,
        NumberMethod::Ttilde,
        NumberMethod::Determinant,
        NumberMethod::Hbp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NumberMethod::Oracle => "oracle",
            NumberMethod::Cor10 => "cor10",
            NumberMethod::Recurrence => "recurrence",
            NumberMethod::Tsum => "tsum",
            NumberMethod::Ttilde => "ttilde",
            NumberMethod::Determinant => "determinant",
            NumberMethod::Hbp => "hbp",
        }
    }

    /// `B_{N,0,χ}, …, B_{N,n_max,χ}` by this route.
    pub fn compute(self, big_n: u32, chi: &DirichletCharacter, n_max: u32) -> Vec<CyclotomicNumber> {
        match self {
            NumberMethod::Oracle => oracle_numbers(big_n, chi, n_max),
            NumberMethod::Cor10 => gbn_cor10_prefix(big_n, chi, n_max),
            NumberMethod::Recurrence => gbn_recurrence_prefix(big_n, chi, n_max),
            NumberMethod::Tsum => gbn_tsum_prefix(big_n, chi, n_max),
            NumberMethod::Ttilde => gbn_ttilde_prefix(big_n, chi, n_max),
            NumberMethod::Determinant => gbn_determinant_prefix(big_n, chi, n_max),
            NumberMethod::Hbp => gbn_via_hbp_prefix(big_n, chi, n_max),
        }
    }
}

/// Routes to `B_{N,n,χ}(x)` as a full polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolyMethod {
    FromNumbers,
    Recurrence,
    Tsum,
    Ttilde,
    Determinant,
}

impl PolyMethod {
    pub const ALL: [PolyMethod; 5] = [
        PolyMethod::FromNumbers,
        PolyMethod::Recurrence,
        PolyMethod::Tsum,
        PolyMethod::Ttilde,
        PolyMethod::Determinant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolyMethod::FromNumbers => "cor10",
            PolyMethod::Recurrence => "recurrence",
            PolyMethod::Tsum => "tsum",
            PolyMethod::Ttilde => "ttilde",
            PolyMethod::Determinant => "determinant",
        }
    }

    pub fn compute(self, big_n: u32, chi: &DirichletCharacter, n_max: u32) -> Vec<GHBPolynomial> {
        match self {
            PolyMethod::FromNumbers => gbp_from_numbers_prefix(big_n, chi, n_max),
            PolyMethod::Recurrence => gbp_recurrence_prefix(big_n, chi, n_max),
            PolyMethod::Tsum => gbp_tsum_prefix(big_n, chi, n_max, false),
            PolyMethod::Ttilde => gbp_tsum_prefix(big_n, chi, n_max, true),
            PolyMethod::Determinant => gbp_determinant_prefix(big_n, chi, n_max),
        }
    }
}

/// Unrecognized method name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownMethod;

impl fmt::Display for UnknownMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown method")
    }
}

impl FromStr for NumberMethod {
    type Err = UnknownMethod;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NumberMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or(UnknownMethod)
    }
}

impl FromStr for PolyMethod {
    type Err = UnknownMethod;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PolyMethod::ALL.into_iter().find(|m| m.name() == s).ok_or(UnknownMethod)
    }
}
