//! Output formats for combinations of multiple zeta values.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::combination::MzvCombination;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Latex,
    Plain,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "latex" => Ok(OutputFormat::Latex),
            "plain" => Ok(OutputFormat::Plain),
            other => Err(format!(
                "unknown format {other:?} (expected json, latex or plain)"
            )),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Latex => "latex",
            OutputFormat::Plain => "plain",
        })
    }
}

#[derive(Serialize)]
struct JsonTerm {
    zeta: Vec<u32>,
    coeff: String,
}

#[derive(Serialize)]
struct JsonCombination {
    input: String,
    weight: Option<u32>,
    depth: Option<usize>,
    terms: Vec<JsonTerm>,
}

/// `{"input", "weight", "depth", "terms": [{"zeta", "coeff"}]}` with terms in
/// ascending lexicographic order of the zeta arguments and coefficients as
/// `"p/q"` strings.
pub fn to_json(input: &str, c: &MzvCombination) -> String {
    let shape = c.homogeneous();
    let doc = JsonCombination {
        input: input.to_string(),
        weight: shape.map(|(w, _)| w),
        depth: shape.map(|(_, r)| r),
        terms: c
            .iter()
            .map(|(key, coeff)| JsonTerm {
                zeta: key.args().to_vec(),
                coeff: coeff.to_fraction_string(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializing plain data cannot fail")
}

fn latex_coeff(q: &Rational) -> String {
    if q.is_integer() {
        if q.numer() == &1.into() {
            String::new()
        } else {
            q.to_string()
        }
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

/// `2\zeta(2,1) + \frac{1}{2}\zeta(3)`; a unit coefficient is left implicit.
pub fn to_latex(c: &MzvCombination) -> String {
    if c.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (key, coeff)) in c.iter().enumerate() {
        let args: Vec<String> = key.args().iter().map(u32::to_string).collect();
        let body = format!("{}\\zeta({})", latex_coeff(&coeff.abs()), args.join(","));
        match (i, coeff.is_positive()) {
            (0, true) => out.push_str(&body),
            (0, false) => out.push_str(&format!("-{body}")),
            (_, true) => out.push_str(&format!(" + {body}")),
            (_, false) => out.push_str(&format!(" - {body}")),
        }
    }
    out
}

/// `2 * Z(2,1) + 4 * Z(3,1)`.
pub fn to_plain(c: &MzvCombination) -> String {
    c.to_string()
}

pub fn render(input: &str, c: &MzvCombination, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(input, c),
        OutputFormat::Latex => to_latex(c),
        OutputFormat::Plain => to_plain(c),
    }
}
