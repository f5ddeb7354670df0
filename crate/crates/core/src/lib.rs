//! Distortion bounds and Koebe-domain boundaries for starlike functions of
//! complex order under a Montel normalization.
//!
//! A function `f(z) = z + a₂z² + …` analytic in the unit disk belongs to the
//! class of starlike functions of complex order `1 − b` (`b ≠ 0`) when
//! `f(z)/z ≠ 0` and
//!
//! ```text
//! Re[ 1 + (1/b)(z f'(z)/f(z) − 1) ] > 0      for |z| < 1.
//! ```
//!
//! Imposing the extra interior normalization `f(r₀) = r₀` breaks rotation
//! invariance and makes the Koebe domain depend on the direction `θ`:
//!
//! ```text
//! R(θ) = (1 − r₀²)^{2b} / ( 2(1+|b|) (1 − 2r₀ cos θ + r₀²)^{b} )
//! ```
//!
//! The crate is organized bottom-up:
//!
//! - [`complex_core`]: principal-branch powers and the disk automorphism.
//! - [`extremal`]: the candidate functions and the starlikeness functional.
//! - [`bounds`]: the one-point growth bound, the conjugated auxiliary
//!   function and the two-point bound on `|f(u)/f(v)|`.
//! - [`koebe`]: Montel-normalized modulus bounds, the boundary radius
//!   `R(θ)` and its special cases.
//! - [`verify`]: seeded, deterministic verification suites.
//! - [`cli`]: the `koebe` command-line front end.
//!
//! ```
//! use koebe::{koebe::{koebe_radius, MontelConfig}, BoundaryPoint, OrderParameter};
//!
//! let cfg = MontelConfig::new(0.5, OrderParameter::real(1.0)?)?;
//! let r = koebe_radius(BoundaryPoint::new(std::f64::consts::PI), &cfg);
//! assert!((r - 0.0625).abs() < 1e-12);
//! # Ok::<(), koebe::KoebeError>(())
//! ```

pub mod bounds;
pub mod cli;
pub mod complex_core;
mod error;
pub mod extremal;
pub mod format;
pub mod koebe;
pub mod verify;

pub use complex_core::{BoundaryPoint, DiskPoint, OrderParameter};
pub use error::KoebeError;

pub use num_complex::Complex64;

pub type Result<T> = std::result::Result<T, KoebeError>;
