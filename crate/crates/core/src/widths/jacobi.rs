//! Exact check of the derivative matrix of the low-degree harmonic
//! polynomials at the origin.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Polynomial in `x₁, x₂` with integer coefficients, keyed by exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Polynomial2 {
    terms: BTreeMap<(u32, u32), i64>,
}

impl Polynomial2 {
    pub fn from_terms(terms: &[((u32, u32), i64)]) -> Self {
        let mut p = Self::default();
        for &(e, c) in terms {
            *p.terms.entry(e).or_insert(0) += c;
        }
        p.terms.retain(|_, c| *c != 0);
        p
    }

    /// `∂/∂x₁` for `var = 0`, `∂/∂x₂` for `var = 1`.
    pub fn derivative(&self, var: usize) -> Self {
        let terms: Vec<((u32, u32), i64)> = self
            .terms
            .iter()
            .filter_map(|(&(a, b), &c)| match var {
                0 if a > 0 => Some(((a - 1, b), c * a as i64)),
                1 if b > 0 => Some(((a, b - 1), c * b as i64)),
                _ => None,
            })
            .collect();
        Self::from_terms(&terms)
    }

    pub fn laplacian(&self) -> Self {
        let xx = self.derivative(0).derivative(0);
        let yy = self.derivative(1).derivative(1);
        let terms: Vec<_> = xx.terms.into_iter().chain(yy.terms).collect();
        Self::from_terms(&terms)
    }

    pub fn at_origin(&self) -> i64 {
        self.terms.get(&(0, 0)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for Polynomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(a, b), &c) in self.terms.iter().rev() {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let mut mono = String::new();
            for (var, e) in [("x1", a), ("x2", b)] {
                match e {
                    0 => {}
                    1 => mono.push_str(var),
                    _ => mono.push_str(&format!("{var}^{e}")),
                }
            }
            let body = match (mag, mono.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => mono,
                (_, false) => format!("{mag}*{mono}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// Expected matrix, rows `1, x₁, x₂, x₁² - x₂², x₁x₂`, columns
/// `u_{x₁x₁}, u_{x₁x₂}, u_{x₁}, u_{x₂}, u` at the origin.
pub const DISPLAYED_MATRIX: [[i64; 5]; 5] = [
    [0, 0, 0, 0, 1],
    [0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0],
    [2, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JacobiCheck {
    pub functions: Vec<String>,
    pub matrix: [[i64; 5]; 5],
    pub matches_display: bool,
    pub determinant: i64,
    pub harmonic: Vec<bool>,
    pub nondegenerate: bool,
}

fn harmonic_functions() -> Vec<Polynomial2> {
    vec![
        Polynomial2::from_terms(&[((0, 0), 1)]),
        Polynomial2::from_terms(&[((1, 0), 1)]),
        Polynomial2::from_terms(&[((0, 1), 1)]),
        Polynomial2::from_terms(&[((2, 0), 1), ((0, 2), -1)]),
        Polynomial2::from_terms(&[((1, 1), 1)]),
    ]
}

/// Integer determinant by cofactor expansion along the first row.
pub fn determinant(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * determinant(&minor)
            })
            .sum(),
    }
}

/// Differentiates `1, x₁, x₂, x₁² - x₂², x₁x₂` symbolically, evaluates the
/// derivative rows at the origin, and compares with [`DISPLAYED_MATRIX`].
pub fn jacobi_matrix_check() -> JacobiCheck {
    let funcs = harmonic_functions();
    let mut matrix = [[0i64; 5]; 5];
    for (row, u) in matrix.iter_mut().zip(&funcs) {
        *row = [
            u.derivative(0).derivative(0).at_origin(),
            u.derivative(0).derivative(1).at_origin(),
            u.derivative(0).at_origin(),
            u.derivative(1).at_origin(),
            u.at_origin(),
        ];
    }
    let rows: Vec<Vec<i64>> = matrix.iter().map(|r| r.to_vec()).collect();
    let determinant = determinant(&rows);
    let harmonic: Vec<bool> = funcs.iter().map(|u| u.laplacian().is_zero()).collect();
    JacobiCheck {
        functions: funcs.iter().map(|u| u.to_string()).collect(),
        matrix,
        matches_display: matrix == DISPLAYED_MATRIX,
        determinant,
        nondegenerate: determinant != 0,
        harmonic,
    }
}
