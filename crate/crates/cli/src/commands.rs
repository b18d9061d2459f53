use std::io::Write;
use std::str::FromStr;

use hgbern_core::dirichlet::character;
use hgbern_core::exactnum::parse_rational;
use hgbern_core::hyperbernoulli::hb_numbers;
use hgbern_core::powerseries::oracle_poly_eval;
use hgbern_core::{
    enumerate_characters, CyclotomicNumber, DirichletCharacter, GHBPolynomial, NumberMethod, PolyMethod, Rational,
};
use serde_json::{json, Map, Value};

use crate::render::{approx_str, character_json, cyc_csv, cyc_json, poly_json, rational_str};
use crate::{CliError, ComputeArgs, Format, Target};

pub fn list_characters(f: u64, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let chars = enumerate_characters(f);
    match format {
        Format::Json => write_json(out, &Value::Array(chars.iter().map(character_json).collect())),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record([
                "label",
                "modulus",
                "index",
                "order",
                "parity",
                "conductor",
                "primitive",
                "values",
            ])?;
            for chi in &chars {
                let values: Vec<String> = chi.values().iter().map(cyc_csv).collect();
                w.write_record([
                    chi.label(),
                    chi.modulus().to_string(),
                    chi.index().to_string(),
                    chi.order().to_string(),
                    chi.parity().to_string(),
                    chi.conductor().to_string(),
                    chi.is_primitive().to_string(),
                    values.join(" | "),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

/// `B_{N,n}` for `N = 1..=max_big_n`, `n = 0..=max_n`.
pub fn table(max_big_n: u32, max_n: u32, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    if max_big_n == 0 {
        return Err(CliError::Usage("--max-N must be at least 1".into()));
    }
    let rows: Vec<(u32, u32, Rational)> = (1..=max_big_n)
        .flat_map(|big_n| {
            hb_numbers(big_n, max_n)
                .into_iter()
                .enumerate()
                .map(move |(n, v)| (big_n, n as u32, v))
        })
        .collect();
    match format {
        Format::Json => {
            let rows = rows
                .iter()
                .map(|(big_n, n, v)| json!({"N": big_n, "n": n, "value": rational_str(v)}))
                .collect();
            write_json(out, &Value::Array(rows))
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["N", "n", "value"])?;
            for (big_n, n, v) in &rows {
                w.write_record([big_n.to_string(), n.to_string(), rational_str(v)])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum MethodChoice<M> {
    One(M),
    All,
}

fn parse_method<M: FromStr>(s: &str) -> Result<MethodChoice<M>, CliError> {
    if s == "all" {
        return Ok(MethodChoice::All);
    }
    M::from_str(s)
        .map(MethodChoice::One)
        .map_err(|_| CliError::Usage(format!("unknown method '{s}'")))
}

fn select_characters(f: u64, index: &str) -> Result<Vec<DirichletCharacter>, CliError> {
    if index == "all" {
        return Ok(enumerate_characters(f));
    }
    let idx: usize = index
        .parse()
        .map_err(|_| CliError::Usage(format!("--index must be a number or 'all', got '{index}'")))?;
    character(f, idx)
        .map(|c| vec![c])
        .map_err(|e| CliError::Usage(e.to_string()))
}

enum Entry {
    Number(CyclotomicNumber),
    Poly(GHBPolynomial),
}

struct Row {
    label: String,
    n: u32,
    value: Entry,
}

struct Computed {
    method: String,
    agreed: bool,
    rows: Vec<Row>,
}

fn first_disagreement<T: PartialEq>(tables: &[(&str, Vec<T>)]) -> Option<(String, usize)> {
    let (_, reference) = &tables[0];
    for (name, t) in &tables[1..] {
        if let Some(n) = reference.iter().zip(t).position(|(a, b)| a != b) {
            return Some((name.to_string(), n));
        }
    }
    None
}

fn compute_numbers(
    big_n: u32,
    chi: &DirichletCharacter,
    n_to: u32,
    method: MethodChoice<NumberMethod>,
) -> Result<Vec<CyclotomicNumber>, CliError> {
    match method {
        MethodChoice::One(m) => Ok(m.compute(big_n, chi, n_to)),
        MethodChoice::All => {
            let tables: Vec<(&str, Vec<CyclotomicNumber>)> = NumberMethod::ALL
                .iter()
                .map(|m| (m.name(), m.compute(big_n, chi, n_to)))
                .collect();
            if let Some((name, n)) = first_disagreement(&tables) {
                return Err(CliError::Mismatch(format!(
                    "{} N={big_n} n={n}: {} differs from {}",
                    chi.label(),
                    name,
                    tables[0].0
                )));
            }
            Ok(tables.into_iter().next().expect("nonempty").1)
        }
    }
}

enum PolyChoice {
    Oracle,
    Route(MethodChoice<PolyMethod>),
}

fn compute_polys(
    big_n: u32,
    chi: &DirichletCharacter,
    n_to: u32,
    method: &PolyChoice,
    x0: Option<&Rational>,
) -> Result<Vec<Entry>, CliError> {
    let polys = match method {
        PolyChoice::Oracle => {
            let x0 = x0.ok_or_else(|| CliError::Usage("the oracle gives polynomial values only; pass --x0".into()))?;
            return Ok(oracle_poly_eval(big_n, chi, x0, n_to)
                .into_iter()
                .map(Entry::Number)
                .collect());
        }
        PolyChoice::Route(MethodChoice::One(m)) => m.compute(big_n, chi, n_to),
        PolyChoice::Route(MethodChoice::All) => {
            let tables: Vec<(&str, Vec<GHBPolynomial>)> = PolyMethod::ALL
                .iter()
                .map(|m| (m.name(), m.compute(big_n, chi, n_to)))
                .collect();
            if let Some((name, n)) = first_disagreement(&tables) {
                return Err(CliError::Mismatch(format!(
                    "{} N={big_n} n={n}: polynomial {} differs from {}",
                    chi.label(),
                    name,
                    tables[0].0
                )));
            }
            let polys = tables.into_iter().next().expect("nonempty").1;
            if let Some(x0) = x0 {
                let oracle = oracle_poly_eval(big_n, chi, x0, n_to);
                if let Some(n) = polys.iter().zip(&oracle).position(|(p, v)| &p.eval(x0) != v) {
                    return Err(CliError::Mismatch(format!(
                        "{} N={big_n} n={n}: polynomial value at x0 differs from oracle",
                        chi.label()
                    )));
                }
            }
            polys
        }
    };
    Ok(match x0 {
        Some(x0) => polys.iter().map(|p| Entry::Number(p.eval(x0))).collect(),
        None => polys.into_iter().map(Entry::Poly).collect(),
    })
}

fn run_compute(args: &ComputeArgs) -> Result<(Option<Rational>, Computed), CliError> {
    if args.n_from > args.n_to {
        return Err(CliError::Usage("--n-from must not exceed --n-to".into()));
    }
    let x0 = args
        .x0
        .as_deref()
        .map(|s| parse_rational(s).map_err(|e| CliError::Usage(format!("--x0: {e}"))))
        .transpose()?;
    let chars = select_characters(args.modulus, &args.index)?;
    let mut rows = Vec::new();
    let agreed = args.method == "all";
    match args.target {
        Target::Numbers => {
            if x0.is_some() {
                return Err(CliError::Usage("--x0 applies to --target polynomials".into()));
            }
            let method = parse_method::<NumberMethod>(&args.method)?;
            for chi in &chars {
                let values = compute_numbers(args.big_n, chi, args.n_to, method)?;
                rows.extend(
                    values
                        .into_iter()
                        .enumerate()
                        .skip(args.n_from as usize)
                        .map(|(n, v)| Row {
                            label: chi.label(),
                            n: n as u32,
                            value: Entry::Number(v),
                        }),
                );
            }
        }
        Target::Polynomials => {
            let method = match args.method.as_str() {
                "oracle" => PolyChoice::Oracle,
                "hbp" => return Err(CliError::Usage("method 'hbp' computes numbers only".into())),
                s => PolyChoice::Route(parse_method::<PolyMethod>(s)?),
            };
            for chi in &chars {
                let values = compute_polys(args.big_n, chi, args.n_to, &method, x0.as_ref())?;
                rows.extend(
                    values
                        .into_iter()
                        .enumerate()
                        .skip(args.n_from as usize)
                        .map(|(n, v)| Row {
                            label: chi.label(),
                            n: n as u32,
                            value: v,
                        }),
                );
            }
        }
    }
    Ok((
        x0,
        Computed {
            method: args.method.clone(),
            agreed,
            rows,
        },
    ))
}

pub fn compute(args: &ComputeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (x0, computed) = run_compute(args)?;
    match args.format {
        Format::Json => write_json(out, &compute_json(args, x0.as_ref(), &computed)),
        Format::Csv => write_compute_csv(args, x0.as_ref(), &computed, out),
    }
}

fn compute_json(args: &ComputeArgs, x0: Option<&Rational>, c: &Computed) -> Value {
    let rows = c
        .rows
        .iter()
        .map(|row| {
            let mut obj = Map::new();
            obj.insert("character".into(), json!(row.label));
            obj.insert("N".into(), json!(args.big_n));
            obj.insert("n".into(), json!(row.n));
            obj.insert("method".into(), json!(c.method));
            if let Some(x0) = x0 {
                obj.insert("x0".into(), json!(rational_str(x0)));
            }
            if c.agreed {
                obj.insert("methods_agree".into(), json!(true));
            }
            match &row.value {
                Entry::Number(v) => {
                    obj.insert("value".into(), cyc_json(v));
                    if args.approx {
                        obj.insert("approx".into(), json!(approx_str(v)));
                    }
                }
                Entry::Poly(p) => {
                    obj.insert("coefficients".into(), poly_json(p));
                    if args.approx {
                        let approx: Vec<String> = p.coeffs().iter().map(approx_str).collect();
                        obj.insert("approx".into(), json!(approx));
                    }
                }
            }
            Value::Object(obj)
        })
        .collect();
    Value::Array(rows)
}

/// Polynomials without `--x0` take one CSV row per coefficient, with the
/// power of `x` in its own column.
fn write_compute_csv(
    args: &ComputeArgs,
    x0: Option<&Rational>,
    c: &Computed,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let per_coefficient = args.target == Target::Polynomials && x0.is_none();
    let mut header = vec!["character", "N", "n", "method"];
    if x0.is_some() {
        header.push("x0");
    }
    if per_coefficient {
        header.push("power");
    }
    header.push("value");
    if c.agreed {
        header.push("methods_agree");
    }
    if args.approx {
        header.push("approx");
    }
    let mut w = csv_writer(out);
    w.write_record(&header)?;
    let record = |row: &Row, power: Option<usize>, v: &CyclotomicNumber| {
        let mut rec = vec![
            row.label.clone(),
            args.big_n.to_string(),
            row.n.to_string(),
            c.method.clone(),
        ];
        if let Some(x0) = x0 {
            rec.push(rational_str(x0));
        }
        if let Some(k) = power {
            rec.push(k.to_string());
        }
        rec.push(cyc_csv(v));
        if c.agreed {
            rec.push("true".into());
        }
        if args.approx {
            rec.push(approx_str(v));
        }
        rec
    };
    for row in &c.rows {
        match &row.value {
            Entry::Number(v) => w.write_record(record(row, None, v))?,
            Entry::Poly(p) => {
                for (k, v) in p.coeffs().iter().enumerate() {
                    w.write_record(record(row, Some(k), v))?;
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}

/// Text fields are always quoted, so cyclotomic strings read back verbatim.
fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::NonNumeric)
        .from_writer(out)
}

fn write_json(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}
