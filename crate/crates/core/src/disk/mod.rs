//! Free and clamped eigenproblems for `Δ^{2p}` on the unit disk, solved by
//! separation of variables.
//!
//! A function in angular mode `l` is `r^l g(r²) cos(lθ)` (or `sin`) with `g`
//! a polynomial expanded in shifted Legendre polynomials `P̃_m(s)`. All
//! matrices of a mode act on these radial coefficients; inner products are
//! `L²(B)` inner products including the angular factor.

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Serialize;

use crate::numkernel::factored_generalized_eig_with_images;
use crate::{Error, Result};

mod assembly;
mod functions;

pub use assembly::{
    assemble_disk, boundary_trace, clamped_basis, constraint_matrix, evaluate_radial, mode_mass,
    radial_laplacian_matrix,
};
pub use functions::{
    clamped_to_free_map, ellipsoid_membership, expand_in_eigenbasis, green_identity,
    jackson_check_disk, polyharmonic_null_basis, ClampedFreeMap, DiskFunction, GreenRecord,
    MapCheck, ModeComponent, NullMode,
};

pub const MAX_ORDER: usize = 2;
pub const MAX_MODE: usize = 12;
pub const MAX_RADIAL: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Free,
    Clamped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiskProblem {
    p: usize,
    l_max: usize,
    radial_size: usize,
    variant: Variant,
}

impl DiskProblem {
    pub fn new(p: usize, l_max: usize, radial_size: usize, variant: Variant) -> Result<Self> {
        if !(1..=MAX_ORDER).contains(&p) {
            return Err(Error::Size(format!("order p = {p} outside 1..={MAX_ORDER}")));
        }
        if l_max > MAX_MODE {
            return Err(Error::Size(format!("l_max = {l_max} above {MAX_MODE}")));
        }
        if radial_size < 2 * p + 2 || radial_size > MAX_RADIAL {
            return Err(Error::Size(format!(
                "radial size {radial_size} outside {}..={MAX_RADIAL} for p = {p}",
                2 * p + 2
            )));
        }
        Ok(Self {
            p,
            l_max,
            radial_size,
            variant,
        })
    }

    pub fn free(p: usize, l_max: usize, radial_size: usize) -> Result<Self> {
        Self::new(p, l_max, radial_size, Variant::Free)
    }

    pub fn clamped(p: usize, l_max: usize, radial_size: usize) -> Result<Self> {
        Self::new(p, l_max, radial_size, Variant::Clamped)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn l_max(&self) -> usize {
        self.l_max
    }

    pub fn radial_size(&self) -> usize {
        self.radial_size
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn with_variant(&self, variant: Variant) -> Self {
        Self { variant, ..*self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Cos,
    Sin,
}

impl Parity {
    /// Angular factors present in mode `l`.
    pub fn of_mode(l: usize) -> &'static [Parity] {
        if l == 0 {
            &[Parity::Cos]
        } else {
            &[Parity::Cos, Parity::Sin]
        }
    }
}

#[derive(Debug, Clone)]
pub struct ModeSpectrum {
    pub l: usize,
    pub null_dim: usize,
    /// Ascending; the first `null_dim` are exactly zero.
    pub eigenvalues: Vec<f64>,
    /// Radial coefficients of the mass-normalized eigenfunctions, by column.
    pub eigenvectors: DMatrix<f64>,
    /// Radial coefficients of `Δ^p` applied to each eigenfunction.
    pub images: DMatrix<f64>,
    pub(crate) mass: DMatrix<f64>,
}

impl ModeSpectrum {
    pub fn positive_eigenvalues(&self) -> &[f64] {
        &self.eigenvalues[self.null_dim..]
    }

    /// Radial coefficients of the `index`-th positive eigenfunction.
    pub fn positive_eigenvector(&self, index: usize) -> Vec<f64> {
        self.eigenvectors.column(self.null_dim + index).iter().copied().collect()
    }

    pub fn mass(&self) -> &DMatrix<f64> {
        &self.mass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MergedEigenvalue {
    pub eigenvalue: f64,
    pub l: usize,
    /// Position among the positive eigenvalues of mode `l`, from zero.
    pub index: usize,
    pub parity: Parity,
    /// Within the lowest third of the mode's radial spectrum.
    pub trusted: bool,
}

#[derive(Debug, Clone)]
pub struct DiskSpectrum {
    pub problem: DiskProblem,
    pub modes: Vec<ModeSpectrum>,
    /// All positive eigenvalues, each mode `l ≥ 1` contributing a cosine and
    /// a sine copy, in ascending order.
    pub merged: Vec<MergedEigenvalue>,
    pub null_basis: Vec<NullMode>,
}

impl DiskSpectrum {
    pub fn mode(&self, l: usize) -> Option<&ModeSpectrum> {
        self.modes.get(l)
    }

    pub fn trusted_per_mode(&self) -> usize {
        self.problem.radial_size / 3
    }
}

fn solve_mode(problem: &DiskProblem, l: usize) -> Result<ModeSpectrum> {
    let sys = assembly::mode_system(problem, l)?;
    let expected = match problem.variant {
        Variant::Free => problem.p,
        Variant::Clamped => 0,
    };
    let cols = sys.op.ncols();
    let (eig, range_images) = factored_generalized_eig_with_images(&sys.op, &sys.range_mass, &sys.mass)
        .map_err(|e| match e {
        Error::RankDeficient { pivot, .. } => Error::Discretization {
            found: cols - pivot.min(cols),
            expected,
        },
        other => other,
    })?;
    let null_dim = eig.values.iter().take_while(|&&v| v == 0.0).count();
    if null_dim != expected {
        return Err(Error::Discretization {
            found: null_dim,
            expected,
        });
    }
    let n = problem.radial_size;
    let mut images = DMatrix::zeros(n, range_images.ncols());
    images.rows_mut(0, range_images.nrows()).copy_from(&range_images);
    let eigenvectors = match &sys.reduction {
        Some(z) => z * eig.vectors,
        None => eig.vectors,
    };
    Ok(ModeSpectrum {
        l,
        null_dim,
        eigenvalues: eig.values,
        eigenvectors,
        images,
        mass: sys.full_mass,
    })
}

pub(crate) fn merge(modes: &[ModeSpectrum], trusted_per_mode: usize) -> Vec<MergedEigenvalue> {
    let mut merged: Vec<MergedEigenvalue> = modes
        .iter()
        .flat_map(|mode| {
            mode.positive_eigenvalues()
                .iter()
                .enumerate()
                .flat_map(move |(index, &eigenvalue)| {
                    Parity::of_mode(mode.l).iter().map(move |&parity| MergedEigenvalue {
                        eigenvalue,
                        l: mode.l,
                        index,
                        parity,
                        trusted: index < trusted_per_mode,
                    })
                })
        })
        .collect();
    merged.sort_by(|a, b| {
        a.eigenvalue
            .total_cmp(&b.eigenvalue)
            .then(a.l.cmp(&b.l))
            .then(a.index.cmp(&b.index))
            .then(a.parity.cmp(&b.parity))
    });
    merged
}

/// Solves every mode `0..=l_max` (concurrently) and merges the positive
/// eigenvalues. The result does not depend on the scheduling.
pub fn solve_disk_spectrum(problem: &DiskProblem) -> Result<DiskSpectrum> {
    let modes = (0..=problem.l_max)
        .into_par_iter()
        .map(|l| solve_mode(problem, l))
        .collect::<Result<Vec<_>>>()?;
    let merged = merge(&modes, problem.radial_size / 3);
    let null_basis = polyharmonic_null_basis(problem.p, problem.l_max, problem.radial_size);
    Ok(DiskSpectrum {
        problem: *problem,
        modes,
        merged,
        null_basis,
    })
}
