use nalgebra::{DMatrix, DVector};

use super::linalg::{
    asymmetry, check_pivots, cholesky, householder_qr, solve_lower, solve_upper, symmetrize,
};
use crate::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-12;
const JACOBI_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 50;
const SIGN_TOL: f64 = 1e-12;
/// Pivots of the weighted operator below this fraction of the largest one
/// mean the operator has a larger kernel than its shape implies.
const RANK_TOL: f64 = 1e-10;

/// Symmetric stiffness / positive-definite mass pair of a Galerkin
/// discretization.
#[derive(Debug, Clone)]
pub struct GalerkinPair {
    pub stiffness: DMatrix<f64>,
    pub mass: DMatrix<f64>,
}

impl GalerkinPair {
    /// Validates shapes and symmetry. Positive definiteness of the mass is
    /// checked when the pair is factored.
    pub fn new(stiffness: DMatrix<f64>, mass: DMatrix<f64>) -> Result<Self> {
        let n = stiffness.nrows();
        if stiffness.ncols() != n || mass.shape() != (n, n) {
            return Err(Error::Shape(format!(
                "stiffness {:?} and mass {:?} must be equal square matrices",
                stiffness.shape(),
                mass.shape()
            )));
        }
        for m in [&stiffness, &mass] {
            let (d, row, col) = asymmetry(m);
            if d > SYMMETRY_TOL {
                return Err(Error::NotSymmetric { row, col, diff: d });
            }
        }
        Ok(Self { stiffness, mass })
    }

    pub fn dim(&self) -> usize {
        self.stiffness.nrows()
    }
}

/// Ascending eigenvalues with mass-orthonormal eigenvectors stored as
/// columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: DMatrix<f64>,
}

impl EigenDecomposition {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
pub fn sym_eig(a: &DMatrix<f64>) -> Result<EigenDecomposition> {
    let (d, row, col) = asymmetry(a);
    if d > SYMMETRY_TOL {
        return Err(Error::NotSymmetric { row, col, diff: d });
    }
    let mut a = a.clone();
    symmetrize(&mut a);
    let (values, vectors) = jacobi(a)?;
    Ok(finish(values, vectors))
}

/// Solves `K v = λ M v` by Cholesky reduction `M = L Lᵀ` followed by cyclic
/// Jacobi on `L⁻¹ K L⁻ᵀ`.
///
/// Output is deterministic: eigenvalues ascending, each eigenvector scaled so
/// its first coefficient of magnitude above `1e-12` is positive, and exactly
/// tied eigenvalues ordered by the index of their largest coefficient.
pub fn sym_generalized_eig(pair: &GalerkinPair) -> Result<EigenDecomposition> {
    let l = cholesky(&pair.mass)?;
    let x = solve_lower(&l, &pair.stiffness);
    let mut a = solve_lower(&l, &x.transpose());
    symmetrize(&mut a);
    let (values, q) = jacobi(a)?;
    let vectors = solve_upper(&l.transpose(), &q);
    Ok(finish(values, vectors))
}

/// Factored stiffness `Gᵀ W G` split into the kernel of `G` and a
/// complement on which the stiffness is the identity.
#[derive(Debug, Clone)]
pub struct CompliancePencil {
    /// Columns spanning `ker G`.
    pub kernel: DMatrix<f64>,
    /// `P` with `(G P)ᵀ W (G P) = I`.
    pub preimage: DMatrix<f64>,
    /// `G P`.
    pub image_basis: DMatrix<f64>,
    /// Cholesky factor of `Nᵀ M N` for the kernel basis `N`.
    pub kernel_factor: DMatrix<f64>,
    pub mass: DMatrix<f64>,
}

impl CompliancePencil {
    pub fn new(op: &DMatrix<f64>, range_mass: &DMatrix<f64>, mass: &DMatrix<f64>) -> Result<Self> {
        let (m, n) = op.shape();
        if range_mass.shape() != (m, m) || mass.shape() != (n, n) {
            return Err(Error::Shape(format!(
                "operator {:?}, range mass {:?}, mass {:?}",
                op.shape(),
                range_mass.shape(),
                mass.shape()
            )));
        }
        let lw = cholesky(range_mass)?;
        // equilibrated columns: the kernel and preimages are computed for
        // G D and mapped back, which keeps the kernel accurate when column
        // norms of G grow rapidly with polynomial degree
        let mut weighted = lw.transpose() * op;
        let scale: Vec<f64> = weighted
            .column_iter()
            .map(|c| {
                let norm = c.norm();
                if norm > 0.0 {
                    1.0 / norm
                } else {
                    1.0
                }
            })
            .collect();
        for (j, s) in scale.iter().enumerate() {
            weighted.column_mut(j).scale_mut(*s);
        }

        // G·P = L_W⁻ᵀ (L_Wᵀ G P), where L_Wᵀ G P is I or Q₁
        let (kernel, preimage, weighted_image) = if m <= n {
            let (q, r) = householder_qr(&weighted.transpose());
            check_pivots(&r, m, RANK_TOL)?;
            let r_top = r.rows(0, m).into_owned();
            let q1 = q.columns(0, m).into_owned();
            // P = Q₁ R⁻ᵀ
            let p = solve_upper(&r_top, &q1.transpose()).transpose();
            (q.columns(m, n - m).into_owned(), p, DMatrix::identity(m, m))
        } else {
            let (q, r) = householder_qr(&weighted);
            check_pivots(&r, n, RANK_TOL)?;
            let r_top = r.rows(0, n).into_owned();
            let p = solve_upper(&r_top, &DMatrix::identity(n, n));
            (DMatrix::zeros(n, 0), p, q.columns(0, n).into_owned())
        };
        let image_basis = solve_upper(&lw.transpose(), &weighted_image);
        let mut kernel = kernel;
        let mut preimage = preimage;
        for (i, s) in scale.iter().enumerate() {
            kernel.row_mut(i).scale_mut(*s);
            preimage.row_mut(i).scale_mut(*s);
        }
        let kernel_factor = if kernel.ncols() > 0 {
            cholesky(&(kernel.transpose() * mass * &kernel))?
        } else {
            DMatrix::zeros(0, 0)
        };
        Ok(Self {
            kernel,
            preimage,
            image_basis,
            kernel_factor,
            mass: mass.clone(),
        })
    }

    /// `M`-orthogonal projection of `x` onto `ker G`.
    pub fn kernel_part(&self, x: &DVector<f64>) -> DVector<f64> {
        if self.kernel.ncols() == 0 {
            return DVector::zeros(x.len());
        }
        let rhs = self.kernel.transpose() * (&self.mass * x);
        let c = solve_lower(&self.kernel_factor, &DMatrix::from_column_slice(rhs.len(), 1, rhs.as_slice()));
        let c = solve_upper(&self.kernel_factor.transpose(), &c);
        &self.kernel * c.column(0)
    }

    /// Compliance operator: the `y ⟂_M ker G` with `Gᵀ W G y = M x̃`, where
    /// `x̃` is `x` with its kernel part removed. On an eigenvector with
    /// eigenvalue `λ > 0` it returns the vector divided by `λ`.
    pub fn compliance(&self, x: &DVector<f64>) -> DVector<f64> {
        let complement = x - self.kernel_part(x);
        let y = &self.preimage * (self.preimage.transpose() * (&self.mass * complement));
        &y - self.kernel_part(&y)
    }

    /// `‖x - λ T x‖_M / ‖x‖_M` for the compliance operator `T`.
    pub fn relative_residual(&self, x: &DVector<f64>, lambda: f64) -> f64 {
        let r = x - self.compliance(x) * lambda;
        let norm = |v: &DVector<f64>| v.dot(&(&self.mass * v)).sqrt();
        norm(&r) / norm(x)
    }
}

/// Solves `Gᵀ W G v = λ M v` for a stiffness given in factored form, where
/// `G` (`m x n`) is the discrete operator and `W` the mass matrix of its
/// range space.
///
/// The kernel of `G` is split off exactly and the positive spectrum is
/// obtained from the compliance pencil: in a basis whose images under `G`
/// are `W`-orthonormal the stiffness becomes the identity, and `1/λ` are the
/// eigenvalues of the mass Schur complement on the kernel's complement. The
/// smallest positive eigenvalues are then resolved to relative accuracy even
/// when the largest ones exceed them by many orders of magnitude.
///
/// `G` must have full rank (`min(m, n)`); the kernel dimension reported is
/// `n - m` when `m < n` and zero otherwise.
pub fn factored_generalized_eig(
    op: &DMatrix<f64>,
    range_mass: &DMatrix<f64>,
    mass: &DMatrix<f64>,
) -> Result<EigenDecomposition> {
    factored_generalized_eig_with_images(op, range_mass, mass).map(|(e, _)| e)
}

/// As [`factored_generalized_eig`], also returning `G v` for every
/// eigenvector `v` (columns, zero for the kernel).
///
/// The images are formed from the orthogonal factor rather than by
/// multiplying `G` into the computed vectors, so they carry no amplification
/// of rounding errors in high-degree coefficients.
pub fn factored_generalized_eig_with_images(
    op: &DMatrix<f64>,
    range_mass: &DMatrix<f64>,
    mass: &DMatrix<f64>,
) -> Result<(EigenDecomposition, DMatrix<f64>)> {
    let pencil = CompliancePencil::new(op, range_mass, mass)?;
    let CompliancePencil {
        kernel,
        preimage,
        image_basis,
        kernel_factor: l1,
        ..
    } = &pencil;
    let (m, n) = op.shape();
    let k = kernel.ncols();
    let rdim = preimage.ncols();

    let mp = mass * preimage;
    let mut schur = preimage.transpose() * &mp;
    let mut kernel_vectors = DMatrix::zeros(n, k);
    let mut coupling = DMatrix::zeros(k, rdim);
    if k > 0 {
        coupling = solve_lower(l1, &(kernel.transpose() * &mp));
        schur -= coupling.transpose() * &coupling;
        kernel_vectors = solve_lower(l1, &kernel.transpose()).transpose();
    }
    symmetrize(&mut schur);
    let (mu, b) = jacobi(schur)?;

    let mut values = vec![0.0; k];
    let mut vectors = DMatrix::zeros(n, k + rdim);
    let mut images = DMatrix::zeros(m, k + rdim);
    let range_images = image_basis * &b;
    vectors.columns_mut(0, k).copy_from(&kernel_vectors);
    let y = preimage * &b;
    // M-orthogonal projection away from the kernel: y - N M₁₁⁻¹ Nᵀ M y
    let correction = if k > 0 {
        let c = solve_upper(&l1.transpose(), &(&coupling * &b));
        kernel * c
    } else {
        DMatrix::zeros(n, rdim)
    };
    // 1/μ below rounding of the largest μ cannot be resolved; such
    // eigenvalues are reported at the resolution ceiling 1/floor
    let mu_max = mu.iter().copied().fold(0.0, f64::max);
    let floor = rdim.max(1) as f64 * f64::EPSILON * mu_max;
    for (i, &mu_i) in mu.iter().enumerate() {
        if !mu_i.is_finite() || mu_i < -floor || !(mu_max > 0.0) {
            return Err(Error::NotPositiveDefinite {
                pivot: i,
                value: mu_i,
            });
        }
        let mu_i = mu_i.max(floor);
        let col = (y.column(i) - correction.column(i)) / mu_i.sqrt();
        vectors.column_mut(k + i).copy_from(&col);
        images
            .column_mut(k + i)
            .copy_from(&(range_images.column(i) / mu_i.sqrt()));
        values.push(1.0 / mu_i);
    }
    Ok(finish_with_images(values, vectors, images))
}

fn jacobi(mut a: DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let n = a.nrows();
    let mut v = DMatrix::<f64>::identity(n, n);
    let fro = a.norm();
    let off_norm = |a: &DMatrix<f64>| -> f64 {
        let mut s = 0.0;
        for j in 0..n {
            for i in 0..n {
                if i != j {
                    s += a[(i, j)] * a[(i, j)];
                }
            }
        }
        s.sqrt()
    };
    let mut sweep = 0;
    loop {
        let off = off_norm(&a);
        if off <= JACOBI_TOL * fro {
            break;
        }
        if sweep == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps: MAX_SWEEPS,
                off,
            });
        }
        sweep += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                // negligible against both diagonal entries after a few sweeps
                if sweep > 4
                    && app.abs() + 1e2 * apq.abs() == app.abs()
                    && aqq.abs() + 1e2 * apq.abs() == aqq.abs()
                {
                    a[(p, q)] = 0.0;
                    a[(q, p)] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[(p, p)] = app - t * apq;
                a[(q, q)] = aqq + t * apq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let g = a[(r, p)];
                    let h = a[(r, q)];
                    let np = g - s * (h + g * tau);
                    let nq = h + s * (g - h * tau);
                    a[(r, p)] = np;
                    a[(p, r)] = np;
                    a[(r, q)] = nq;
                    a[(q, r)] = nq;
                }
                for r in 0..n {
                    let g = v[(r, p)];
                    let h = v[(r, q)];
                    v[(r, p)] = g - s * (h + g * tau);
                    v[(r, q)] = h + s * (g - h * tau);
                }
            }
        }
    }
    Ok(((0..n).map(|i| a[(i, i)]).collect(), v))
}

fn finish(values: Vec<f64>, vectors: DMatrix<f64>) -> EigenDecomposition {
    let r = vectors.nrows();
    finish_with_images(values, vectors, DMatrix::zeros(r, 0)).0
}

/// Sign normalization and ordering; `images` columns follow their vectors.
fn finish_with_images(
    values: Vec<f64>,
    mut vectors: DMatrix<f64>,
    mut images: DMatrix<f64>,
) -> (EigenDecomposition, DMatrix<f64>) {
    let n = vectors.nrows();
    let m = values.len();
    let with_images = images.ncols() == m;
    for j in 0..m {
        let mut col = vectors.column_mut(j);
        if let Some(first) = col.iter().copied().find(|c| c.abs() > SIGN_TOL) {
            if first < 0.0 {
                col.neg_mut();
                if with_images {
                    images.column_mut(j).neg_mut();
                }
            }
        }
    }
    let argmax = |j: usize| -> usize {
        let col = vectors.column(j);
        let mut best = 0;
        for i in 1..n {
            if col[i].abs() > col[best].abs() {
                best = i;
            }
        }
        best
    };
    let keys: Vec<usize> = (0..m).map(argmax).collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| {
        values[i]
            .total_cmp(&values[j])
            .then(keys[i].cmp(&keys[j]))
            .then(i.cmp(&j))
    });
    let sorted_values = order.iter().map(|&i| values[i]).collect();
    let sorted_vectors = DMatrix::from_fn(n, m, |r, c| vectors[(r, order[c])]);
    let sorted_images = if with_images {
        DMatrix::from_fn(images.nrows(), m, |r, c| images[(r, order[c])])
    } else {
        images
    };
    (
        EigenDecomposition {
            values: sorted_values,
            vectors: sorted_vectors,
        },
        sorted_images,
    )
}
