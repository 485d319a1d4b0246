//! Dependency-light numerical primitives shared by the discretizations and
//! by the reference oracles: Gauss–Legendre quadrature, Legendre recurrences,
//! dense factorizations, a Cholesky–Jacobi generalized symmetric eigensolver,
//! Brent root bracketing and integer-order Bessel functions.

mod bessel;
mod eigen;
pub mod legendre;
pub mod linalg;
mod quadrature;
mod roots;

pub use bessel::{bessel_i, bessel_i_prime, bessel_j, bessel_j_prime};
pub use eigen::{
    factored_generalized_eig, factored_generalized_eig_with_images, CompliancePencil, sym_eig, sym_generalized_eig, EigenDecomposition, GalerkinPair,
};
pub use quadrature::{gauss_legendre, QuadratureRule};
pub use roots::{bracket_roots, brent_root};
