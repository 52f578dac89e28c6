//! Serializable report for one `(w, m)` computation, with text, JSON and
//! LaTeX renderings. All numbers are exact decimal-digit fraction strings
//! ("num/den", the "/den" dropped when the denominator is 1) because matrix
//! entries routinely exceed 64-bit range.

use serde::Serialize;

use heckex::exact::Rational;
use heckex::hecke::{action_matrix, char_poly, trace};
use heckex::matrix::RationalMatrix;
use heckex::poly::basis_exponents;
use num_traits::Zero;

/// Field order is the serialization order; JSON output is byte-stable.
#[derive(Debug, Clone, Serialize)]
pub struct HeckeReport {
    pub w: u32,
    pub m: u32,
    pub dim: usize,
    pub basis_exponents: Vec<u32>,
    pub matrix: Vec<Vec<String>>,
    pub charpoly: Vec<String>,
    pub trace: String,
}

/// Canonical fraction string: "num/den", "/den" omitted when den = 1.
pub fn fraction(x: &Rational) -> String {
    x.to_string()
}

impl HeckeReport {
    pub fn compute(w: u32, m: u32) -> heckex::Result<Self> {
        let basis = basis_exponents(w)?;
        let t = action_matrix(w, m)?;
        let p = char_poly(&t)?;
        let tr = trace(&t)?;
        Ok(Self {
            w,
            m,
            dim: basis.dim(),
            basis_exponents: basis.exponents().to_vec(),
            matrix: matrix_strings(&t),
            charpoly: p.coeffs().iter().map(fraction).collect(),
            trace: fraction(&tr),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("w: {}\n", self.w));
        out.push_str(&format!("m: {}\n", self.m));
        out.push_str(&format!("dim: {}\n", self.dim));
        let exps: Vec<String> = self.basis_exponents.iter().map(u32::to_string).collect();
        out.push_str(&format!("basis exponents: [{}]\n", exps.join(", ")));
        if self.dim == 0 {
            out.push_str("matrix: (empty; the cusp-form space is trivial)\n");
        } else {
            out.push_str("matrix:\n");
            for row in &self.matrix {
                out.push_str(&format!("  [{}]\n", row.join(", ")));
            }
        }
        out.push_str(&format!("charpoly: {}\n", charpoly_display(&self.charpoly)));
        out.push_str(&format!("trace: {}\n", self.trace));
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        out.push_str("\\begin{pmatrix}\n");
        for (i, row) in self.matrix.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|s| latex_fraction(s)).collect();
            out.push_str(&cells.join(" & "));
            if i + 1 < self.matrix.len() {
                out.push_str(" \\\\");
            }
            out.push('\n');
        }
        out.push_str("\\end{pmatrix}\n");
        out.push_str(&format!(
            "% characteristic polynomial: {}\n",
            charpoly_display(&self.charpoly)
        ));
        out
    }
}

fn matrix_strings(t: &RationalMatrix) -> Vec<Vec<String>> {
    (0..t.rows())
        .map(|i| (0..t.cols()).map(|j| fraction(t.get(i, j))).collect())
        .collect()
}

fn latex_fraction(s: &str) -> String {
    match s.split_once('/') {
        Some((num, den)) => format!("\\frac{{{num}}}{{{den}}}"),
        None => s.to_string(),
    }
}

/// Renders ascending monic coefficients as a polynomial in `x`, highest
/// degree first, e.g. `x^2 + 3020312682800*x + 101633401431659687926336`.
pub fn charpoly_display(coeffs: &[String]) -> String {
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return coeffs[0].clone();
    }
    let mut out = String::new();
    for deg in (0..=degree).rev() {
        let c = &coeffs[deg];
        if c == "0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.as_str()),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let power = match deg {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{deg}"),
        };
        if power.is_empty() {
            out.push_str(mag);
        } else if mag == "1" {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{mag}*{power}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Listing of the nonzero polynomial coefficients, one `nu coefficient`
/// pair per line, ascending in the exponent of `h`.
pub fn spoly_listing(f: &heckex::poly::HomogPoly) -> String {
    let mut out = String::new();
    for (nu, c) in f.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out.push_str(&format!("{nu} {}\n", fraction(c)));
        }
    }
    out
}
