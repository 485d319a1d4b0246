//! Coordinates of a function in an eigenbasis split into unconstrained
//! (zero-eigenvalue) axes and ellipsoid (positive-eigenvalue) axes.
//!
//! The set `{Σ λ_j f_j² ≤ 1}` is a cylinder over the zero-eigenvalue axes:
//! the free coordinates never enter the membership value.

use serde::Serialize;

use crate::{Error, Result};

/// Slack added to the membership and Jackson comparisons.
pub const SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EllipsoidCoords {
    /// Coordinates on the zero-eigenvalue axes.
    pub free_coeffs: Vec<f64>,
    /// Coordinates on the positive-eigenvalue axes, ordered with `eigenvalues`.
    pub bound_coeffs: Vec<f64>,
    pub eigenvalues: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Membership {
    pub value: f64,
    pub inside: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JacksonRecord {
    pub tail_error: f64,
    pub bound: f64,
    pub satisfied: bool,
}

impl EllipsoidCoords {
    pub fn new(free_coeffs: Vec<f64>, bound_coeffs: Vec<f64>, eigenvalues: Vec<f64>) -> Result<Self> {
        if bound_coeffs.len() != eigenvalues.len() {
            return Err(Error::Shape(format!(
                "{} bound coefficients for {} eigenvalues",
                bound_coeffs.len(),
                eigenvalues.len()
            )));
        }
        if free_coeffs.iter().chain(&bound_coeffs).any(|c| !c.is_finite()) {
            return Err(Error::Domain("non-finite coordinate".into()));
        }
        Ok(Self {
            free_coeffs,
            bound_coeffs,
            eigenvalues,
        })
    }

    /// `Σ f'_j² + Σ f_j²`, the squared `L²` norm by Parseval.
    pub fn norm_squared(&self) -> f64 {
        self.free_coeffs.iter().chain(&self.bound_coeffs).map(|c| c * c).sum()
    }

    /// Scales the bound coordinates so that the membership value becomes 1.
    /// Returns `None` when all bound coordinates vanish.
    pub fn scaled_to_boundary(&self) -> Option<Self> {
        let v = membership(self).value;
        if v == 0.0 {
            return None;
        }
        let s = 1.0 / v.sqrt();
        Some(Self {
            free_coeffs: self.free_coeffs.clone(),
            bound_coeffs: self.bound_coeffs.iter().map(|c| c * s).collect(),
            eigenvalues: self.eigenvalues.clone(),
        })
    }
}

/// `Σ λ_j f_j²` over the bound axes; inside iff the value is at most
/// `1 + 1e-12`.
pub fn membership(coords: &EllipsoidCoords) -> Membership {
    let value = coords
        .bound_coeffs
        .iter()
        .zip(&coords.eigenvalues)
        .map(|(f, l)| l * f * f)
        .sum::<f64>();
    Membership {
        value,
        inside: value <= 1.0 + SLACK,
    }
}

/// Truncation error after keeping the first `kept` bound axes, compared with
/// `1/√λ_{kept+1}` (positive eigenvalues indexed from one).
pub(crate) fn jackson_tail(coords: &EllipsoidCoords, kept: usize) -> Result<JacksonRecord> {
    let m = membership(coords);
    if !m.inside {
        return Err(Error::NotInEllipsoid { value: m.value });
    }
    let Some(&lambda_next) = coords.eigenvalues.get(kept) else {
        return Err(Error::Range(format!(
            "need eigenvalue {} but only {} are available",
            kept + 1,
            coords.eigenvalues.len()
        )));
    };
    let tail_error = coords.bound_coeffs[kept..]
        .iter()
        .map(|f| f * f)
        .sum::<f64>()
        .sqrt();
    let bound = 1.0 / lambda_next.sqrt();
    Ok(JacksonRecord {
        tail_error,
        bound,
        satisfied: tail_error <= bound + SLACK,
    })
}
