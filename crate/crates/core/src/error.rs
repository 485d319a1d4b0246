use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size error: {0}")]
    Size(String),

    #[error("mass matrix is not positive definite (pivot {pivot} = {value:e})")]
    NotPositiveDefinite { pivot: usize, value: f64 },

    #[error("Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal norm {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("matrix is not symmetric: |a[{row},{col}] - a[{col},{row}]| = {diff:e}")]
    NotSymmetric { row: usize, col: usize, diff: f64 },

    #[error("operator is rank deficient: pivot {pivot} is {value:e} against scale {scale:e}")]
    RankDeficient { pivot: usize, value: f64, scale: f64 },

    #[error("no sign change on [{a}, {b}]: f(a) = {fa:e}, f(b) = {fb:e}")]
    Bracket { a: f64, b: f64, fa: f64, fb: f64 },

    #[error("argument outside validated domain: {0}")]
    Domain(String),

    #[error("index out of range: {0}")]
    Range(String),

    #[error("discretization failure: null space has dimension {found}, expected {expected}")]
    Discretization { found: usize, expected: usize },

    #[error("coordinates are not in the ellipsoid: sum of lambda_j f_j^2 = {value}")]
    NotInEllipsoid { value: f64 },

    #[error("assembly error: {0}")]
    Assembly(String),

    #[error("clamped-to-free construction failed for mode l = {l}, k = {k}: {reason}")]
    Construction { l: usize, k: usize, reason: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("counterexample in trial {trial}: distance {distance} below bound {bound}")]
    CounterExample {
        trial: usize,
        distance: f64,
        bound: f64,
        basis: Vec<Vec<f64>>,
    },

    #[error("witness error: {0}")]
    Witness(String),
}
