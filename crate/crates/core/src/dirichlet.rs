//! Dirichlet characters modulo `f` and the twisted power sums
//! `S_n = Σ_{a=1}^{f} χ(a) a^n`, `S_n(x) = Σ_{a=1}^{f} χ(a) (x + a)^n`.
//!
//! Characters are enumerated deterministically: `(Z/fZ)^*` is decomposed into
//! cyclic factors with fixed generators (least primitive root for odd prime
//! powers, `-1` and `5` for `2^k`, `k ≥ 3`), and characters are listed in
//! lexicographic order of their exponent tuples on those generators. Index 0
//! is always the principal character.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::Error;
use crate::exactnum::{binomial, euler_phi, CyclotomicField, CyclotomicNumber, Rational, Ring};
use crate::polynomial::Polynomial;

/// `(Z/fZ)^*` as a product of cyclic groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroup {
    pub modulus: u64,
    /// `(residue mod f, multiplicative order)` for each cyclic factor.
    pub generators: Vec<(u64, u64)>,
    /// Least common multiple of the generator orders (1 for the trivial group).
    pub exponent: u64,
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Multiplicative order of a unit `a` modulo `m`, by exhaustive search.
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = mul_mod(x, a, m);
        k += 1;
    }
    k
}

/// The residue mod `f` congruent to `g` mod `q` and to 1 mod `f / q`.
fn crt_lift(g: u64, q: u64, f: u64) -> u64 {
    let rest = f / q;
    if rest == 1 {
        return g % f;
    }
    // x = 1 + rest * t with 1 + rest*t ≡ g (mod q)
    let inv = (BigInt::from(rest).extended_gcd(&BigInt::from(q)).x).mod_floor(&BigInt::from(q));
    let inv: u64 = inv.try_into().expect("fits");
    let t = mul_mod((g + q - 1) % q, inv, q);
    (1 + rest * t) % f
}

/// Decomposes `(Z/fZ)^*`; panics if `f == 0`.
pub fn unit_group(f: u64) -> UnitGroup {
    assert!(f >= 1, "modulus must be positive");
    let mut generators = Vec::new();
    for (p, k) in factorize(f) {
        let q = p.pow(k);
        if p == 2 {
            match k {
                1 => {}
                2 => generators.push((crt_lift(3, q, f), 2)),
                _ => {
                    generators.push((crt_lift(q - 1, q, f), 2));
                    generators.push((crt_lift(5, q, f), q / 4));
                }
            }
        } else {
            let phi = q / p * (p - 1);
            let g = (2..q)
                .find(|&g| g % p != 0 && multiplicative_order(g, q) == phi)
                .expect("odd prime powers are cyclic");
            generators.push((crt_lift(g, q, f), phi));
        }
    }
    let exponent = generators.iter().fold(1u64, |acc, &(_, o)| acc.lcm(&o));
    UnitGroup {
        modulus: f,
        generators,
        exponent,
    }
}

impl UnitGroup {
    pub fn order(&self) -> u64 {
        self.generators.iter().map(|&(_, o)| o).product()
    }

    /// For every residue `a` in `0..f`, the exponent vector of `a` on the
    /// generators, or `None` when `a` is not a unit.
    pub fn discrete_logs(&self) -> Vec<Option<Vec<u64>>> {
        let f = self.modulus;
        let mut table: Vec<Option<Vec<u64>>> = vec![None; f as usize];
        let mut exps = vec![0u64; self.generators.len()];
        loop {
            let residue = self
                .generators
                .iter()
                .zip(&exps)
                .fold(1 % f, |acc, (&(g, _), &e)| mul_mod(acc, pow_mod(g, e, f), f));
            table[residue as usize] = Some(exps.clone());
            if !advance(&mut exps, self.generators.iter().map(|&(_, o)| o)) {
                break;
            }
        }
        if f == 1 {
            table[0] = Some(Vec::new());
        }
        table
    }
}

/// Lexicographic odometer step; returns false after the last tuple.
fn advance(digits: &mut [u64], radices: impl DoubleEndedIterator<Item = u64> + ExactSizeIterator) -> bool {
    for (d, r) in digits.iter_mut().zip(radices).rev() {
        *d += 1;
        if *d < r {
            return true;
        }
        *d = 0;
    }
    false
}

/// A Dirichlet character modulo `f` with values in `Q(ζ_m)`, `m` its order.
#[derive(Clone, Debug)]
pub struct DirichletCharacter {
    modulus: u64,
    index: usize,
    order: u32,
    field: Arc<CyclotomicField>,
    /// `values[a]` is `χ(a)` for `a` in `0..f`; exact zero off the units.
    values: Vec<CyclotomicNumber>,
    parity: i8,
    conductor: u64,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.values == other.values
    }
}

/// All `φ(f)` characters mod `f`, in the documented deterministic order.
pub fn enumerate_characters(f: u64) -> Vec<DirichletCharacter> {
    assert!(f >= 1, "modulus must be positive");
    let group = unit_group(f);
    let logs = group.discrete_logs();
    let orders: Vec<u64> = group.generators.iter().map(|&(_, o)| o).collect();
    let mut out = Vec::with_capacity(euler_phi(f) as usize);
    let mut exps = vec![0u64; orders.len()];
    loop {
        out.push(build_character(f, out.len(), &orders, &exps, &logs));
        if !advance(&mut exps, orders.iter().copied()) {
            break;
        }
    }
    out
}

/// The character with enumeration index `index` mod `f`.
pub fn character(f: u64, index: usize) -> Result<DirichletCharacter, Error> {
    if f == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut all = enumerate_characters(f);
    let count = all.len();
    if index >= count {
        return Err(Error::CharacterIndex {
            modulus: f,
            index,
            count,
        });
    }
    Ok(all.swap_remove(index))
}

fn build_character(
    f: u64,
    index: usize,
    orders: &[u64],
    exps: &[u64],
    logs: &[Option<Vec<u64>>],
) -> DirichletCharacter {
    // χ(g_i) = ζ_{n_i}^{c_i}; the order of χ is lcm of n_i / gcd(n_i, c_i).
    let order = orders
        .iter()
        .zip(exps)
        .fold(1u64, |acc, (&n, &c)| acc.lcm(&(n / n.gcd(&c))));
    let field = CyclotomicField::new(order as u32);
    let values: Vec<CyclotomicNumber> = logs
        .iter()
        .map(|log| match log {
            None => CyclotomicNumber::zero(&field),
            Some(e) => {
                let k: u64 = orders
                    .iter()
                    .zip(exps)
                    .zip(e)
                    .map(|((&n, &c), &ei)| {
                        let g = n.gcd(&c);
                        (c / g) * (order / (n / g)) % order * ei % order
                    })
                    .sum::<u64>()
                    % order;
                CyclotomicNumber::zeta_pow(&field, k as i64)
            }
        })
        .collect();
    let parity = if f <= 2 {
        1
    } else {
        match values[(f - 1) as usize].as_rational() {
            Some(q) if q.is_one() => 1,
            _ => -1,
        }
    };
    let mut chi = DirichletCharacter {
        modulus: f,
        index,
        order: order as u32,
        field,
        values,
        parity,
        conductor: f,
    };
    chi.conductor = chi.compute_conductor();
    chi
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Position in [`enumerate_characters`] for this modulus.
    pub fn index(&self) -> usize {
        self.index
    }

    /// Least `m` with `χ^m` principal; values live in `Q(ζ_m)`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// `χ(-1)` as `±1`; `+1` by convention for `f ≤ 2`.
    pub fn parity(&self) -> i8 {
        self.parity
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    /// Value table indexed by residue `0..f`.
    pub fn values(&self) -> &[CyclotomicNumber] {
        &self.values
    }

    /// `χ(a mod f)`.
    pub fn eval(&self, a: i64) -> CyclotomicNumber {
        let r = a.rem_euclid(self.modulus as i64) as usize;
        self.values[r].clone()
    }

    /// The rational `q` in this character's field.
    pub fn constant(&self, q: Rational) -> CyclotomicNumber {
        CyclotomicNumber::from_rational(&self.field, q)
    }

    /// Identification string `f=<modulus>,idx=<index>`.
    pub fn label(&self) -> alloc::string::String {
        alloc::format!("f={},idx={}", self.modulus, self.index)
    }

    fn compute_conductor(&self) -> u64 {
        let f = self.modulus;
        let one = CyclotomicNumber::one(&self.field);
        (1..=f)
            .filter(|d| f.is_multiple_of(*d))
            .find(|&d| {
                (1..f.max(2))
                    .filter(|&a| a.gcd(&f) == 1 && a % d == 1 % d)
                    .all(|a| self.values[(a % f) as usize] == one)
            })
            .unwrap_or(f)
    }

    /// `χ(a)` for `a = 1..=f` (the summation range of the power sums).
    fn summands(&self) -> impl Iterator<Item = (u64, &CyclotomicNumber)> {
        (1..=self.modulus).map(move |a| (a, &self.values[(a % self.modulus) as usize]))
    }

    /// `S_n = Σ_{a=1}^{f} χ(a) a^n`.
    pub fn power_sum(&self, n: u32) -> CyclotomicNumber {
        let mut acc = CyclotomicNumber::zero(&self.field);
        for (a, v) in self.summands() {
            if v.is_zero() {
                continue;
            }
            let w = Rational::from_integer(BigInt::from(a).pow(n));
            acc = acc.add_ref(&v.scale(&w));
        }
        acc
    }

    /// `S_0, …, S_{n_max}`.
    pub fn power_sums(&self, n_max: u32) -> Vec<CyclotomicNumber> {
        (0..=n_max).map(|n| self.power_sum(n)).collect()
    }

    /// `S_n(x) = Σ_k binom(n, k) S_k x^{n-k}`.
    pub fn power_sum_poly(&self, n: u32) -> Polynomial<CyclotomicNumber> {
        let sums = self.power_sums(n);
        Polynomial::new(
            (0..=n)
                .map(|j| {
                    // coefficient of x^j pairs with S_{n-j}
                    let b = Rational::from_integer(binomial(n, j));
                    sums[(n - j) as usize].scale(&b)
                })
                .collect(),
        )
    }
}
