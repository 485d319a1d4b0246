//! Galerkin spectra of polyharmonic eigenproblems and the Kolmogorov widths
//! they determine.
//!
//! The crate discretizes two problems:
//!
//! * the free problem `(-1)^p u^(2p) = λu` on `[0, 1]` with natural boundary
//!   conditions, whose spectrum gives the widths of the Sobolev ball
//!   `{f : ∫|f^(p)|² ≤ 1}` ([`spectrum1d`]);
//! * the free and clamped problems for `Δ^{2p}` on the unit disk, solved mode
//!   by mode in polar coordinates ([`disk`]).
//!
//! On top of the spectra it provides ellipsoid coordinates and Jackson-type
//! tail estimates ([`ellipsoid`]), distance and width computations on
//! truncated cylinder-ellipsoids ([`widths`]), and the `polywidth` command
//! line harness ([`cli`]).

pub mod cli;
pub mod disk;
pub mod ellipsoid;
mod error;
mod ext;
pub mod numkernel;
pub mod reference;
pub mod spectrum1d;
pub mod widths;

pub use error::{Error, Result};
pub use ext::ExtReal;
