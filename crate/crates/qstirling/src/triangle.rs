//! The triangle `{(n,k) -> S[n,k]}` with provenance of the method that
//! produced it, and its three text encodings (CSV, JSON, LaTeX).

use serde::{Deserialize, Serialize};

use crate::enumerate;
use crate::exactmath::QPoly;
use crate::formulas::{self, FormulaError, Source};
use crate::paths;
use crate::qcomb::Kind;

/// Computation method selector, as spelled on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Brute-force enumeration (bounded).
    Enumeration,
    /// Closed double sums (the default; milliseconds up to n ~ 20).
    Closed,
    /// The alternative closed sums.
    ClosedAlt,
    /// Path dynamic programming.
    Path,
    /// The cross-kind identity, fed from closed sums.
    Identity,
}

impl Method {
    pub fn cli_name(self) -> &'static str {
        match self {
            Method::Enumeration => "enum",
            Method::Closed => "closed",
            Method::ClosedAlt => "closed-alt",
            Method::Path => "path",
            Method::Identity => "identity",
        }
    }
}

/// One q-Stirling triangle, `rows[n][k] = S[n,k]` for `0 <= k <= n <= nmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub kind: Kind,
    pub nmax: usize,
    pub method: Method,
    pub rows: Vec<Vec<QPoly>>,
}

/// The JSON wire format of a triangle: coefficients as decimal strings.
#[derive(Serialize, Deserialize)]
struct TriangleWire {
    kind: u8,
    nmax: usize,
    rows: Vec<Vec<QPoly>>,
}

/// A single entry by the named method.
pub fn entry(kind: Kind, n: i64, k: i64, method: Method) -> Result<QPoly, FormulaError> {
    if n < 0 || k < 0 || k > n {
        return Err(FormulaError::InvalidArgs { n, k });
    }
    match (kind, method) {
        (Kind::First, Method::Enumeration) => Ok(enumerate::s1_enum(n as usize, k as usize)?),
        (Kind::Second, Method::Enumeration) => Ok(enumerate::s2_enum(n as usize, k as usize)?),
        (Kind::First, Method::Closed) => formulas::s1_closed(n, k),
        (Kind::Second, Method::Closed) => formulas::s2_closed(n, k),
        (Kind::First, Method::ClosedAlt) => formulas::s1_closed_alt(n, k),
        (Kind::Second, Method::ClosedAlt) => formulas::s2_closed_alt(n, k),
        (Kind::First, Method::Path) => Ok(paths::s1_via_tfraction(n as usize).coeff(k as usize)),
        (Kind::Second, Method::Path) => Ok(paths::s2_via_jfraction(n as usize).coeff(k as usize)),
        (Kind::First, Method::Identity) => formulas::s1_from_s2(n, k, Source::Closed),
        (Kind::Second, Method::Identity) => formulas::s2_from_s1(n, k, Source::Closed),
    }
}

impl Triangle {
    /// Compute the triangle up to `nmax` by the given method.
    pub fn compute(kind: Kind, nmax: usize, method: Method) -> Result<Triangle, FormulaError> {
        let mut rows = Vec::with_capacity(nmax + 1);
        for n in 0..=nmax {
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                // the alternative second-kind sum starts at n = 1; the top
                // cell comes from the primary sum instead
                let cell = if kind == Kind::Second && method == Method::ClosedAlt && n == 0 {
                    formulas::s2_closed(0, 0)?
                } else {
                    entry(kind, n as i64, k as i64, method)?
                };
                row.push(cell);
            }
            rows.push(row);
        }
        Ok(Triangle {
            kind,
            nmax,
            method,
            rows,
        })
    }

    /// CSV encoding: header `n,k,poly`, one record per cell in row order,
    /// polynomials in the canonical text format.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,poly\n");
        for (n, row) in self.rows.iter().enumerate() {
            for (k, cell) in row.iter().enumerate() {
                out.push_str(&format!("{n},{k},{cell}\n"));
            }
        }
        out
    }

    /// JSON encoding: `{"kind":1,"nmax":N,"rows":[[...]]}` where each cell
    /// is an array of decimal-string coefficients, ascending.
    pub fn to_json(&self) -> String {
        let wire = TriangleWire {
            kind: self.kind.as_number(),
            nmax: self.nmax,
            rows: self.rows.clone(),
        };
        serde_json::to_string(&wire).expect("triangle serialization cannot fail")
    }

    /// Parse the JSON encoding back into a triangle (method recorded as
    /// `Closed`, the wire format carries no provenance).
    pub fn from_json(json: &str) -> Result<Triangle, serde_json::Error> {
        let wire: TriangleWire = serde_json::from_str(json)?;
        let kind = if wire.kind == 1 { Kind::First } else { Kind::Second };
        Ok(Triangle {
            kind,
            nmax: wire.nmax,
            method: Method::Closed,
            rows: wire.rows,
        })
    }

    /// LaTeX encoding mirroring the row-per-n table layout: one tabular row
    /// per `n`, cells in math mode, `.` above the diagonal.
    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "% S{}[n,k] for 0 <= k <= n <= {}\n",
            self.kind.as_number(),
            self.nmax
        ));
        out.push_str(&format!(
            "\\begin{{tabular}}{{c|{}}}\n",
            "c|".repeat(self.nmax + 1)
        ));
        out.push_str("$n \\backslash k$");
        for k in 0..=self.nmax {
            out.push_str(&format!(" & {k}"));
        }
        out.push_str(" \\\\ \\hline\n");
        for (n, row) in self.rows.iter().enumerate() {
            out.push_str(&format!("{n}"));
            for k in 0..=self.nmax {
                match row.get(k) {
                    Some(cell) => out.push_str(&format!(" & ${}$", cell.to_latex())),
                    None => out.push_str(" & ."),
                }
            }
            out.push_str(" \\\\ \\hline\n");
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}
