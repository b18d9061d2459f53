//! Identity suites over a bounded grid of characters, orders `N` and indices `n`.
//!
//! Each grid cell (one character and one `N`) is checked independently on the
//! rayon pool; tallies are summed and failure messages sorted, so the report
//! does not depend on scheduling.

use std::io::Write;

use hgbern_core::closed_forms::{self, number_closed_form};
use hgbern_core::exactnum::{binomial, euler_phi, int, rational, rational_pow};
use hgbern_core::genbernoulli::{brec_check_with, gbp_stirling_with, trivial_number_formula, trivial_poly_formula};
use hgbern_core::powerseries::{oracle_numbers, oracle_poly_eval};
use hgbern_core::{
    enumerate_characters, CyclotomicNumber, DirichletCharacter, GHBPolynomial, NumberMethod, PolyMethod, Rational, Ring,
};
use rayon::prelude::*;

use crate::{CliError, Suite};

/// Failure messages kept per suite in the printed report.
const SHOWN_FAILURES: usize = 20;

#[derive(Debug, Default)]
struct Tally {
    passed: usize,
    total: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.passed += other.passed;
        self.total += other.total;
        self.failures.extend(other.failures);
        self
    }
}

#[derive(Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

#[derive(Debug)]
pub struct Report {
    pub suites: Vec<SuiteResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed == s.total)
    }

    pub fn write(&self, out: &mut dyn Write) -> Result<(), CliError> {
        for s in &self.suites {
            let status = if s.passed == s.total { "ok" } else { "FAILED" };
            writeln!(out, "{:<12} {}/{} passed  {}", s.name, s.passed, s.total, status)?;
            for msg in s.failures.iter().take(SHOWN_FAILURES) {
                writeln!(out, "    {msg}")?;
            }
            if s.failures.len() > SHOWN_FAILURES {
                writeln!(out, "    ... {} more", s.failures.len() - SHOWN_FAILURES)?;
            }
        }
        writeln!(
            out,
            "{}",
            if self.all_passed() {
                "all identities hold"
            } else {
                "identity failures found"
            }
        )?;
        Ok(())
    }
}

pub fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::All => "all",
        Suite::FiveWay => "five-way",
        Suite::Polynomials => "polynomials",
        Suite::Appell => "appell",
        Suite::Addition => "addition",
        Suite::Brec => "brec",
        Suite::Trivial => "trivial",
        Suite::Appendix => "appendix",
        Suite::Characters => "characters",
    }
}

const EVERY_SUITE: [Suite; 8] = [
    Suite::Characters,
    Suite::Appendix,
    Suite::Trivial,
    Suite::FiveWay,
    Suite::Brec,
    Suite::Polynomials,
    Suite::Appell,
    Suite::Addition,
];

pub fn run_suite(suite: Suite, max_big_n: u32, max_n: u32, max_f: u64) -> Report {
    let suites = match suite {
        Suite::All => EVERY_SUITE.to_vec(),
        s => vec![s],
    };
    let suites = suites
        .into_iter()
        .map(|s| {
            let tally = run_one(s, max_big_n, max_n, max_f);
            let mut failures = tally.failures;
            failures.sort();
            SuiteResult {
                name: suite_name(s),
                passed: tally.passed,
                total: tally.total,
                failures,
            }
        })
        .collect();
    Report { suites }
}

fn run_one(suite: Suite, max_big_n: u32, max_n: u32, max_f: u64) -> Tally {
    if suite == Suite::Characters {
        return (1..=max_f)
            .into_par_iter()
            .map(character_layer)
            .reduce(Tally::default, Tally::merge);
    }
    let cells: Vec<(DirichletCharacter, u32)> = (1..=max_f)
        .flat_map(enumerate_characters)
        .flat_map(|chi| (1..=max_big_n).map(move |big_n| (chi.clone(), big_n)))
        .collect();
    cells
        .par_iter()
        .map(|(chi, big_n)| {
            let mut t = Tally::default();
            match suite {
                Suite::FiveWay => five_way(&mut t, chi, *big_n, max_n),
                Suite::Polynomials => polynomials(&mut t, chi, *big_n, max_n),
                Suite::Appell => appell(&mut t, chi, *big_n, max_n),
                Suite::Addition => addition(&mut t, chi, *big_n, max_n),
                Suite::Brec => brec(&mut t, chi, *big_n, max_n),
                Suite::Trivial => trivial(&mut t, chi, *big_n, max_n),
                Suite::Appendix => closed_form_suite(&mut t, chi, *big_n, max_n),
                Suite::All | Suite::Characters => unreachable!("handled above"),
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
}

fn cell(chi: &DirichletCharacter, big_n: u32, n: usize) -> String {
    format!("{} N={big_n} n={n}", chi.label())
}

fn five_way(t: &mut Tally, chi: &DirichletCharacter, big_n: u32, max_n: u32) {
    let tables: Vec<(NumberMethod, Vec<CyclotomicNumber>)> = NumberMethod::ALL
        .iter()
        .map(|&m| (m, m.compute(big_n, chi, max_n)))
        .collect();
    let (_, reference) = &tables[0];
    for (m, table) in &tables[1..] {
        for (n, (a, b)) in reference.iter().zip(table).enumerate() {
            t.check(a == b, || format!("{}: {} != oracle", cell(chi, big_n, n), m.name()));
        }
    }
}

fn stirling_points() -> [Rational; 3] {
    [int(1), rational(1, 2), int(-2)]
}

fn polynomials(t: &mut Tally, chi: &DirichletCharacter, big_n: u32, max_n: u32) {
    let tables: Vec<(PolyMethod, Vec<GHBPolynomial>)> = PolyMethod::ALL
        .iter()
        .map(|&m| (m, m.compute(big_n, chi, max_n)))
        .collect();
    let (first, reference) = &tables[0];
    for (m, table) in &tables[1..] {
        for (n, (a, b)) in reference.iter().zip(table).enumerate() {
            t.check(a == b, || {
                format!("{}: polynomial {} != {}", cell(chi, big_n, n), m.name(), first.name())
            });
        }
    }
    for x0 in [int(0), int(1), int(-1), rational(1, 2)] {
        let oracle = oracle_poly_eval(big_n, chi, &x0, max_n);
        for (n, (p, v)) in reference.iter().zip(&oracle).enumerate() {
            t.check(&p.eval(&x0) == v, || {
                format!("{}: value at {x0} != oracle", cell(chi, big_n, n))
            });
        }
    }
    let numbers = oracle_numbers(big_n, chi, max_n);
    for x0 in stirling_points() {
        for (n, p) in reference.iter().enumerate() {
            let st = gbp_stirling_with(&numbers, n as u32, &x0);
            t.check(st == p.eval(&x0), || {
                format!("{}: Stirling form at {x0}", cell(chi, big_n, n))
            });
        }
    }
}

fn appell(t: &mut Tally, chi: &DirichletCharacter, big_n: u32, max_n: u32) {
    let polys = PolyMethod::Recurrence.compute(big_n, chi, max_n);
    t.check(polys[0].derivative().is_zero(), || {
        format!("{}: derivative of constant", cell(chi, big_n, 0))
    });
    for n in 1..polys.len() {
        let expected = polys[n - 1].scale(&int(n as i64));
        t.check(polys[n].derivative() == expected, || {
            format!("{}: derivative", cell(chi, big_n, n))
        });
    }
}

fn addition(t: &mut Tally, chi: &DirichletCharacter, big_n: u32, max_n: u32) {
    let polys = PolyMethod::Recurrence.compute(big_n, chi, max_n);
    for y in [int(1), int(-2), rational(1, 3)] {
        for (n, p) in polys.iter().enumerate() {
            let mut expanded = p.zero_like();
            for (k, q) in polys.iter().enumerate().take(n + 1) {
                let w = Rational::from_integer(binomial(n as u32, k as u32)) * rational_pow(&y, (n - k) as i64);
                expanded = expanded.add_ref(&q.scale(&w));
            }
            t.check(p.shift(&y) == expanded, || {
                format!("{}: addition at y={y}", cell(chi, big_n, n))
            });
        }
    }
}

fn brec(t: &mut Tally, chi: &DirichletCharacter, big_n: u32, max_n: u32) {
    let numbers = oracle_numbers(big_n, chi, max_n);
    let polys = PolyMethod::FromNumbers.compute(big_n, chi, max_n);
    for n in 0..=max_n {
        let lhs = brec_check_with(big_n, n, chi, &numbers);
        t.check(lhs == chi.power_sum(n), || {
            format!("{}: recurrence sum != S_n", cell(chi, big_n, n as usize))
        });
        let lhs = brec_check_with(big_n, n, chi, &polys);
        t.check(lhs == chi.power_sum_poly(n), || {
            format!("{}: recurrence sum != S_n(x)", cell(chi, big_n, n as usize))
        });
    }
}

/// Closed forms for the principal character mod 1; other characters are skipped.
fn trivial(t: &mut Tally, chi: &DirichletCharacter, big_n: u32, max_n: u32) {
    if chi.modulus() != 1 {
        return;
    }
    let numbers = NumberMethod::Recurrence.compute(big_n, chi, max_n);
    let polys = PolyMethod::Recurrence.compute(big_n, chi, max_n);
    for n in 0..=max_n {
        let i = n as usize;
        t.check(numbers[i] == chi.constant(trivial_number_formula(big_n, n)), || {
            format!("{}: number formula", cell(chi, big_n, i))
        });
        let formula = trivial_poly_formula(big_n, n).map(|c| chi.constant(c.clone()));
        t.check(polys[i] == formula, || {
            format!("{}: polynomial formula", cell(chi, big_n, i))
        });
    }
}

fn closed_form_suite(t: &mut Tally, chi: &DirichletCharacter, big_n: u32, max_n: u32) {
    let top = max_n.min(closed_forms::MAX_INDEX);
    let sums = chi.power_sums(top);
    for m in NumberMethod::ALL {
        let values = m.compute(big_n, chi, top);
        for n in 0..=top {
            let expected = number_closed_form(big_n, n, chi.modulus(), &sums).expect("n within closed forms");
            t.check(values[n as usize] == expected, || {
                format!("{}: {} != closed form", cell(chi, big_n, n as usize), m.name())
            });
        }
    }
}

fn character_layer(f: u64) -> Tally {
    let mut t = Tally::default();
    let chars = enumerate_characters(f);
    t.check(chars.len() as u64 == euler_phi(f), || format!("f={f}: character count"));
    t.check(chars.first().is_some_and(DirichletCharacter::is_principal), || {
        format!("f={f}: index 0 is not principal")
    });
    let units: Vec<i64> = (1..=f as i64).filter(|&a| num_integer::gcd(a, f as i64) == 1).collect();
    for chi in &chars {
        let label = chi.label();
        let mut multiplicative = true;
        for &a in &units {
            for &b in &units {
                if chi.eval(a * b) != &chi.eval(a) * &chi.eval(b) {
                    multiplicative = false;
                }
            }
        }
        t.check(multiplicative, || format!("{label}: not multiplicative"));
        if !chi.is_principal() {
            t.check(chi.power_sum(0).is_zero(), || {
                format!("{label}: values do not sum to zero")
            });
        }
        t.check(f.is_multiple_of(chi.conductor()), || {
            format!("{label}: conductor does not divide modulus")
        });
    }
    t
}
