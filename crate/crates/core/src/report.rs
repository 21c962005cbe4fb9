//! Dispatch from a shape, `n` and representation to one of the four methods,
//! plus the row format shared by the CLI tables and the browser demo.

use std::fmt;
use std::io;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{as_count, Rational};
use crate::charpoly::Shape;
use crate::counts;
use crate::error::{invalid, Error, Result};
use crate::oracle::Oracle;
use crate::partitions::Partition;
use crate::series::{gen_hook_moment, gen_hook_signed, gen_two_column, Caps, TruncSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rep {
    Trivial,
    Sign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Moment,
    Series,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Formula,
        Method::Moment,
        Method::Series,
        Method::Oracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Moment => "moment",
            Method::Series => "series",
            Method::Oracle => "oracle",
        }
    }
}

impl Rep {
    pub fn as_str(self) -> &'static str {
        match self {
            Rep::Trivial => "trivial",
            Rep::Sign => "sign",
        }
    }
}

impl fmt::Display for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for Rep {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(Rep::Trivial),
            "sign" => Ok(Rep::Sign),
            _ => Err(invalid(format!("unknown representation {s:?}"))),
        }
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| invalid(format!("unknown method {s:?}")))
    }
}

/// What to restrict: a shape with closed formulas, or any partition (oracle only).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Shape(Shape),
    Lambda(Partition),
}

impl Target {
    pub fn partition(&self) -> Partition {
        match self {
            Target::Shape(s) => s.partition(),
            Target::Lambda(p) => p.clone(),
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            Target::Shape(Shape::TwoColumn { .. }) => "two-column",
            Target::Shape(Shape::Hook { .. }) => "hook",
            Target::Lambda(_) => "lambda",
        }
    }

    /// Semicolon-joined `key=value` pairs.
    pub fn params(&self) -> String {
        match self {
            Target::Shape(Shape::TwoColumn { k, l }) => format!("k={k};l={l}"),
            Target::Shape(Shape::Hook { a, b }) => format!("a={a};b={b}"),
            Target::Lambda(p) => format!("lambda={p}"),
        }
    }

    /// Methods able to compute this multiplicity, in canonical order.
    pub fn methods(&self, rep: Rep) -> Vec<Method> {
        match (self, rep) {
            (Target::Lambda(_), _) => vec![Method::Oracle],
            (Target::Shape(Shape::TwoColumn { .. }), Rep::Trivial) => {
                vec![Method::Moment, Method::Oracle]
            }
            (Target::Shape(_), _) => Method::ALL.to_vec(),
        }
    }

    /// First entry of [`Target::methods`].
    pub fn default_method(&self, rep: Rep) -> Method {
        self.methods(rep)[0]
    }
}

/// One computed multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub family: String,
    pub params: String,
    pub n: u32,
    pub rep: Rep,
    pub method: Method,
    pub multiplicity: u64,
}

impl ReportRow {
    pub fn new(target: &Target, n: u32, rep: Rep, method: Method, multiplicity: u64) -> Self {
        ReportRow {
            family: target.family().to_string(),
            params: target.params(),
            n,
            rep,
            method,
            multiplicity,
        }
    }
}

fn check_domain(target: &Target, n: u32) -> Result<()> {
    let lambda = target.partition();
    if lambda.len() > n as usize {
        return Err(invalid(format!(
            "W_{lambda}(C^{n}) is undefined: {lambda} has more than {n} parts"
        )));
    }
    if let Target::Shape(Shape::TwoColumn { k, l }) = *target {
        if l > k {
            return Err(invalid(format!(
                "two-column shape needs k >= l, got k={k} l={l}"
            )));
        }
    }
    Ok(())
}

/// Multiplicity of `rep` in `W_λ(ℂⁿ)` restricted to `S_n`, by `method`.
pub fn compute(target: &Target, n: u32, rep: Rep, method: Method) -> Result<u64> {
    compute_with(target, n, rep, method, &mut Oracle::new())
}

/// [`compute`] reusing an oracle's character cache.
pub fn compute_with(
    target: &Target,
    n: u32,
    rep: Rep,
    method: Method,
    oracle: &mut Oracle,
) -> Result<u64> {
    check_domain(target, n)?;
    if !target.methods(rep).contains(&method) {
        return Err(invalid(format!(
            "method {method} is not available for {} with rep {rep}",
            target.family()
        )));
    }
    match (method, target) {
        (Method::Oracle, _) => {
            let lambda = target.partition();
            match rep {
                Rep::Trivial => oracle.trivial_multiplicity(&lambda, n),
                Rep::Sign => oracle.sign_multiplicity(&lambda, n),
            }
        }
        (Method::Formula, Target::Shape(shape)) => match (*shape, rep) {
            (Shape::TwoColumn { k, l }, Rep::Sign) => counts::sign_mult_two_column(n, k, l),
            (Shape::Hook { a, b }, Rep::Sign) => counts::hook_sign_mult(n, a, b),
            (Shape::Hook { a, b }, Rep::Trivial) => counts::hook_triv_mult(n, a, b),
            (Shape::TwoColumn { .. }, Rep::Trivial) => unreachable!("filtered above"),
        },
        (Method::Moment, Target::Shape(shape)) => {
            let poly = shape.char_poly()?;
            let m = match rep {
                Rep::Trivial => poly.moment(n),
                Rep::Sign => poly.signed_moment(n),
            };
            to_count(&m, "moment")
        }
        (Method::Series, Target::Shape(shape)) => to_count(&series_value(*shape, n, rep), "series"),
        _ => unreachable!("filtered above"),
    }
}

fn to_count(value: &Rational, what: &str) -> Result<u64> {
    as_count(value)
        .ok_or_else(|| Error::Inconsistent(format!("{what} gave non-count value {value}")))
}

/// Alternating sum of generating-function coefficients matching the
/// determinantal expansion of the shape.
fn series_value(shape: Shape, n: u32, rep: Rep) -> Rational {
    match shape {
        Shape::TwoColumn { k, l } => {
            let s = gen_two_column(Caps::new(k + 1, l, n));
            let mut v = s.coeff(k, l, n);
            if l > 0 {
                v -= s.coeff(k + 1, l - 1, n);
            }
            v
        }
        Shape::Hook { a, b } => {
            let caps = Caps::new(a + 1 + b, b, n);
            let s: TruncSeries = match rep {
                Rep::Sign => gen_hook_signed(caps),
                Rep::Trivial => gen_hook_moment(caps),
            };
            let mut v = Rational::zero();
            let mut sign = Rational::one();
            for j in 0..=b {
                v += &sign * s.coeff(a + 1 + j, b - j, n);
                sign = -sign;
            }
            v
        }
    }
}

/// Every available method, as rows in canonical method order.
pub fn compute_all(target: &Target, n: u32, rep: Rep) -> Result<Vec<ReportRow>> {
    let mut oracle = Oracle::new();
    target
        .methods(rep)
        .into_iter()
        .map(|m| {
            compute_with(target, n, rep, m, &mut oracle)
                .map(|v| ReportRow::new(target, n, rep, m, v))
        })
        .collect()
}

/// Rows from [`compute_all`], or an inconsistency error naming the
/// disagreeing methods.
pub fn compute_checked(target: &Target, n: u32, rep: Rep) -> Result<Vec<ReportRow>> {
    let rows = compute_all(target, n, rep)?;
    if let Some(bad) = rows.iter().find(|r| r.multiplicity != rows[0].multiplicity) {
        return Err(Error::Inconsistent(format!(
            "{} {} n={n} rep={rep}: {} gives {} but {} gives {}",
            target.family(),
            target.params(),
            rows[0].method,
            rows[0].multiplicity,
            bad.method,
            bad.multiplicity
        )));
    }
    Ok(rows)
}

/// Shapes and `n` covered by a table, in deterministic order.
///
/// Hooks run over `a ≤ a_max`, `b ≤ b_max`, `b+1 ≤ n ≤ n_max`. Two-column
/// shapes run over `2 ≤ n ≤ n_max` and every `l ≤ k ≤ n`.
pub fn table_targets(
    family: &str,
    a_max: u32,
    b_max: u32,
    n_max: u32,
) -> Result<Vec<(Target, u32)>> {
    let mut out = Vec::new();
    match family {
        "hook" => {
            for a in 0..=a_max {
                for b in 0..=b_max {
                    for n in b + 1..=n_max {
                        out.push((Target::Shape(Shape::Hook { a, b }), n));
                    }
                }
            }
        }
        "two-column" => {
            for n in 2..=n_max {
                for k in 0..=n {
                    for l in 0..=k {
                        out.push((Target::Shape(Shape::TwoColumn { k, l }), n));
                    }
                }
            }
        }
        other => return Err(invalid(format!("no table for family {other:?}"))),
    }
    Ok(out)
}

pub const CSV_HEADER: [&str; 6] = ["family", "params", "n", "rep", "method", "multiplicity"];

pub fn write_csv<W: io::Write>(rows: &[ReportRow], out: W) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()
}

pub fn read_csv<R: io::Read>(input: R) -> std::result::Result<Vec<ReportRow>, csv::Error> {
    csv::Reader::from_reader(input).deserialize().collect()
}

pub fn to_json(rows: &[ReportRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize")
}
