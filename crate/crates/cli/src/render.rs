//! Text forms of exact values.
//!
//! * A rational renders as `"p/q"`, or `"p"` when `q = 1`.
//! * A cyclotomic number renders in JSON as `{"order": m, "coeffs": [...]}`
//!   with exactly `φ(m)` rational strings, and in CSV as the canonical string
//!   `"c0 + c1*z + …; order=m"`.

use std::f64::consts::PI;

use hgbern_core::exactnum::parse_rational;
use hgbern_core::{CyclotomicField, CyclotomicNumber, DirichletCharacter, Polynomial, Rational};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::CliError;

pub fn rational_str(q: &Rational) -> String {
    q.to_string()
}

pub fn cyc_json(x: &CyclotomicNumber) -> Value {
    json!({
        "order": x.order(),
        "coeffs": x.coeffs().iter().map(rational_str).collect::<Vec<_>>(),
    })
}

/// Inverse of [`cyc_json`].
pub fn cyc_from_json(v: &Value) -> Result<CyclotomicNumber, CliError> {
    let bad = |what: &str| CliError::Parse(format!("cyclotomic value: {what}"));
    let order = v
        .get("order")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing order"))?;
    let order = u32::try_from(order)
        .ok()
        .filter(|&m| m > 0)
        .ok_or_else(|| bad("bad order"))?;
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing coeffs"))?
        .iter()
        .map(|c| {
            let s = c.as_str().ok_or_else(|| bad("coefficient is not a string"))?;
            parse_rational(s).map_err(|e| CliError::Parse(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    CyclotomicNumber::from_coeffs(&CyclotomicField::new(order), coeffs).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn cyc_csv(x: &CyclotomicNumber) -> String {
    x.to_string()
}

pub fn poly_json(p: &Polynomial<CyclotomicNumber>) -> Value {
    Value::Array(p.coeffs().iter().map(cyc_json).collect())
}

/// Floating-point value of `Σ c_j e^{2πij/m}`; for display only.
pub fn cyc_approx(x: &CyclotomicNumber) -> (f64, f64) {
    let m = f64::from(x.order());
    x.coeffs().iter().enumerate().fold((0.0, 0.0), |(re, im), (j, c)| {
        let c = c.to_f64().unwrap_or(f64::NAN);
        let theta = 2.0 * PI * j as f64 / m;
        (re + c * theta.cos(), im + c * theta.sin())
    })
}

pub fn approx_str(x: &CyclotomicNumber) -> String {
    let (re, im) = cyc_approx(x);
    // clean up -0.0 and rounding dust in the display
    let tidy = |v: f64| if v.abs() < 1e-12 { 0.0 } else { v };
    format!("{:.12e}{:+.12e}i", tidy(re), tidy(im))
}

pub fn character_json(chi: &DirichletCharacter) -> Value {
    json!({
        "label": chi.label(),
        "modulus": chi.modulus(),
        "index": chi.index(),
        "order": chi.order(),
        "parity": chi.parity(),
        "conductor": chi.conductor(),
        "primitive": chi.is_primitive(),
        "values": chi.values().iter().map(cyc_json).collect::<Vec<_>>(),
    })
}
