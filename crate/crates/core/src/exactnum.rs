//! Exact scalars: arbitrary-precision rationals and elements of the
//! cyclotomic field `Q(ζ_m)` in the reduced power basis.
//!
//! A [`CyclotomicNumber`] is always stored as exactly `φ(m)` rational
//! coefficients of `1, ζ, …, ζ^{φ(m)-1}`, reduced modulo the `m`-th
//! cyclotomic polynomial. Two elements of the same order are equal iff their
//! coefficient vectors are equal.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Exact fraction, always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `q^e` for a possibly negative exponent. Panics on `0^e` with `e < 0`.
pub fn rational_pow(q: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= q;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Parses `"p"`, `"-p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::ParseRational(String::from(s));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer coefficients of `Φ_m`, lowest degree first.
///
/// Computed as `(x^m - 1) / Π_{d | m, d < m} Φ_d` by exact division.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic order must be positive");
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = divide_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Quotient of `num` by the monic `den`; the division must be exact.
fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Common arithmetic surface for coefficient rings (rationals, cyclotomic
/// numbers, polynomials over either).
///
/// Elements carry their own context (for example the cyclotomic order), so
/// constants are produced relative to an existing element.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, q: &Rational) -> Self;
    /// `Some(q)` when the element is the rational constant `q`.
    fn as_rational(&self) -> Option<Rational>;

    fn constant_like(&self, q: &Rational) -> Self {
        self.one_like().scale(q)
    }

    /// Whether `self` and `other` can be combined (same cyclotomic order).
    fn same_context(&self, _other: &Self) -> bool {
        true
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// The field `Q(ζ_m)` as `Q[x] / Φ_m(x)`.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
    /// Monic `Φ_m`, lowest degree first; length `φ(m) + 1`.
    modulus: Vec<BigInt>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Arc<Self> {
        Arc::new(CyclotomicField {
            order,
            modulus: cyclotomic_polynomial(order),
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(m)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Reduces an arbitrary-length power-basis vector modulo `Φ_m`.
    fn reduce(&self, mut raw: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        for i in (d..raw.len()).rev() {
            let c = core::mem::replace(&mut raw[i], Rational::zero());
            if Zero::is_zero(&c) {
                continue;
            }
            for (j, mj) in self.modulus[..d].iter().enumerate() {
                if !mj.is_zero() {
                    raw[i - d + j] -= &c * mj;
                }
            }
        }
        raw.resize(d, Rational::zero());
        raw
    }
}

/// An element of `Q(ζ_m)` in canonical reduced form.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        CyclotomicNumber {
            field: Arc::clone(field),
            coeffs: vec![Rational::zero(); field.degree()],
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: Rational) -> Self {
        let mut x = Self::zero(field);
        x.coeffs[0] = q;
        x
    }

    /// `ζ_m^k`, for any integer `k`.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let m = field.order as i64;
        let k = k.mod_floor(&m) as usize;
        let mut raw = vec![Rational::zero(); (k + 1).max(field.degree())];
        raw[k] = Rational::one();
        CyclotomicNumber {
            field: Arc::clone(field),
            coeffs: field.reduce(raw),
        }
    }

    /// Builds an element from an arbitrary power-basis vector, reducing it.
    pub fn from_power_basis(field: &Arc<CyclotomicField>, raw: Vec<Rational>) -> Self {
        CyclotomicNumber {
            field: Arc::clone(field),
            coeffs: field.reduce(raw),
        }
    }

    /// Builds an element from exactly `φ(m)` canonical coefficients.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Result<Self, Error> {
        if coeffs.len() != field.degree() {
            return Err(Error::CoefficientCount {
                order: field.order,
                expected: field.degree(),
                found: coeffs.len(),
            });
        }
        Ok(CyclotomicNumber {
            field: Arc::clone(field),
            coeffs,
        })
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, rhs: &Self) -> Result<(), Error> {
        if self.field.order != rhs.field.order {
            return Err(Error::OrderMismatch {
                left: self.field.order,
                right: rhs.field.order,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_order(rhs)?;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Ok(CyclotomicNumber {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_order(rhs)?;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        Ok(CyclotomicNumber {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_order(rhs)?;
        let d = self.field.degree();
        if d == 1 {
            return Ok(CyclotomicNumber {
                field: Arc::clone(&self.field),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            });
        }
        let mut raw = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !Zero::is_zero(b) {
                    raw[i + j] += a * b;
                }
            }
        }
        Ok(CyclotomicNumber {
            field: Arc::clone(&self.field),
            coeffs: self.field.reduce(raw),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The same element viewed in `Q(ζ_{m'})`, using `ζ_m = ζ_{m'}^{m'/m}`.
    pub fn embed(&self, target: &Arc<CyclotomicField>) -> Result<Self, Error> {
        let (m, mt) = (self.field.order, target.order);
        if mt % m != 0 {
            return Err(Error::NotDivisible { from: m, to: mt });
        }
        let step = (mt / m) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len().saturating_sub(1)) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[j * step] = c.clone();
        }
        Ok(Self::from_power_basis(target, raw))
    }

    /// Convenience form of [`embed`](Self::embed) that builds the target field.
    pub fn embed_order(&self, order: u32) -> Result<Self, Error> {
        self.embed(&CyclotomicField::new(order))
    }
}

/// The constant `q` in `Q(ζ_m)`.
pub fn cyc_from_rational(q: Rational, m: u32) -> CyclotomicNumber {
    CyclotomicNumber::from_rational(&CyclotomicField::new(m), q)
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({})", self)
    }
}

/// Canonical text form: nonzero terms `c*z^j` joined by `" + "`, followed by
/// `"; order=m"`. The zero element renders its constant term `0`.
impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*z", c)?,
                _ => write!(f, "{}*z^{}", c, j)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, "; order={}", self.field.order)
    }
}

impl Ring for CyclotomicNumber {
    fn zero_like(&self) -> Self {
        Self::zero(&self.field)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.field)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{}", e))
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{}", e))
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{}", e))
    }
    fn neg_ref(&self) -> Self {
        CyclotomicNumber {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn scale(&self, q: &Rational) -> Self {
        CyclotomicNumber {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }
    fn same_context(&self, other: &Self) -> bool {
        self.field.order == other.field.order
    }
    fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $ring:ident) => {
        impl<'a> $tr<&'a CyclotomicNumber> for &'a CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &'a CyclotomicNumber) -> CyclotomicNumber {
                self.$ring(rhs)
            }
        }
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                self.$ring(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        self.neg_ref()
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        self.neg_ref()
    }
}

/// Least common multiple, used by callers to pick a shared cyclotomic order.
pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn zeta(m: u32) -> CyclotomicNumber {
        CyclotomicNumber::zeta_pow(&CyclotomicField::new(m), 1)
    }

    fn konst(q: Rational, m: u32) -> CyclotomicNumber {
        cyc_from_rational(q, m)
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        for m in 1..=60u32 {
            assert_eq!(cyclotomic_polynomial(m).len() - 1, euler_phi(m as u64) as usize);
        }
    }

    #[test]
    fn phi_m_vanishes_at_zeta() {
        for m in 1..=24u32 {
            let field = CyclotomicField::new(m);
            let z = CyclotomicNumber::zeta_pow(&field, 1);
            let mut acc = CyclotomicNumber::zero(&field);
            let mut power = CyclotomicNumber::one(&field);
            for c in cyclotomic_polynomial(m) {
                acc = &acc + &power.scale(&Rational::from_integer(c));
                power = &power * &z;
            }
            assert!(acc.is_zero(), "Phi_{m}(zeta) != 0");
            assert_eq!(z.pow(m), CyclotomicNumber::one(&field));
        }
    }

    #[test]
    fn addition_examples() {
        let z4 = zeta(4);
        assert_eq!(&z4 + &z4, z4.scale(&int(2)));
        let f3 = CyclotomicField::new(3);
        let sum = CyclotomicNumber::zeta_pow(&f3, 1) + CyclotomicNumber::zeta_pow(&f3, 2);
        assert_eq!(sum, konst(int(-1), 3));
        assert_eq!(&z4 + &z4.zero_like(), z4);
    }

    #[test]
    fn multiplication_examples() {
        let z4 = zeta(4);
        assert_eq!(&z4 * &z4, konst(int(-1), 4));
        let f3 = CyclotomicField::new(3);
        let prod = CyclotomicNumber::zeta_pow(&f3, 1) * CyclotomicNumber::zeta_pow(&f3, 2);
        assert_eq!(prod, konst(int(1), 3));
        let one = z4.one_like();
        assert_eq!((&one + &z4) * (&one - &z4), konst(int(2), 4));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = zeta(3);
        let b = zeta(4);
        assert!(matches!(a.checked_add(&b), Err(Error::OrderMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::OrderMismatch { .. })));
        assert!(matches!(a.embed_order(4), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(konst(int(1), 1).embed_order(4).unwrap(), konst(int(1), 4));
        assert_eq!(konst(int(-1), 2).embed_order(4).unwrap(), konst(int(-1), 4));
        let f6 = CyclotomicField::new(6);
        assert_eq!(zeta(3).embed(&f6).unwrap(), CyclotomicNumber::zeta_pow(&f6, 2));
        // ζ_2 itself is -1 in the reduced basis.
        assert_eq!(zeta(2), konst(int(-1), 2));
    }

    #[test]
    fn constants() {
        assert_eq!(konst(rational(1, 2), 4).coeffs(), &[rational(1, 2), int(0)]);
        assert!(konst(int(0), 3).is_zero());
        assert_eq!(konst(rational(-1, 30), 1).coeffs(), &[rational(-1, 30)]);
        assert_eq!(konst(rational(3, 7), 5).as_rational(), Some(rational(3, 7)));
        assert_eq!(zeta(5).as_rational(), None);
    }

    #[test]
    fn display_form() {
        let f4 = CyclotomicField::new(4);
        let x = CyclotomicNumber::from_coeffs(&f4, vec![rational(1, 2), int(-3)]).unwrap();
        assert_eq!(alloc::format!("{}", x), "1/2 + -3*z; order=4");
        assert_eq!(alloc::format!("{}", CyclotomicNumber::zero(&f4)), "0; order=4");
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-6/4").unwrap(), rational(-3, 2));
        assert_eq!(parse_rational(" 1/ 3 ").unwrap(), rational(1, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(rational_pow(&int(2), -3), rational(1, 8));
    }

    fn arb_elem(m: u32) -> impl Strategy<Value = CyclotomicNumber> {
        let d = euler_phi(m as u64) as usize;
        prop::collection::vec((-20i64..20, 1i64..6), d).prop_map(move |cs| {
            let field = CyclotomicField::new(m);
            CyclotomicNumber::from_coeffs(&field, cs.into_iter().map(|(n, q)| rational(n, q)).collect()).unwrap()
        })
    }

    fn arb_triple() -> impl Strategy<Value = (CyclotomicNumber, CyclotomicNumber, CyclotomicNumber)> {
        (1u32..=24).prop_flat_map(|m| (arb_elem(m), arb_elem(m), arb_elem(m)))
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn embedding_is_a_homomorphism((a, b, _c) in arb_triple(), k in 1u32..4) {
            let target = CyclotomicField::new(a.order() * k);
            let e = |x: &CyclotomicNumber| x.embed(&target).unwrap();
            prop_assert_eq!(e(&(&a * &b)), &e(&a) * &e(&b));
            prop_assert_eq!(e(&(&a + &b)), &e(&a) + &e(&b));
        }

    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn rational_arithmetic_matches_cross_multiplication(
            a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000,
        ) {
            let x = rational(a, b);
            let y = rational(c, d);
            let sum = &x + &y;
            let prod = &x * &y;
            // p/q == r/s  <=>  p*s == r*q
            let num = |q: &Rational| q.numer().clone();
            let den = |q: &Rational| q.denom().clone();
            prop_assert_eq!(num(&sum) * BigInt::from(b * d), BigInt::from(a * d + c * b) * den(&sum));
            prop_assert_eq!(num(&prod) * BigInt::from(b * d), BigInt::from(a * c) * den(&prod));
            prop_assert!(den(&sum) > BigInt::zero());
            prop_assert!(num(&sum).gcd(&den(&sum)) == BigInt::one() || num(&sum).is_zero());
        }
    }
}
