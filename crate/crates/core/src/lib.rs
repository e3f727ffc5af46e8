//! Explicit machinery for the Master Theorem identities on Riemannian
//! symmetric spaces in duality: restricted root systems with
//! multiplicities, the Harish-Chandra c-function and Plancherel density,
//! the Weyl dimension polynomial, the normalizing function b, spherical
//! functions in the closed-form regimes, Hardy-class certificates, and a
//! verification harness that checks the three-part identity
//! (alternating spherical series = contour integral = interpolation) at
//! desk scale.
//!
//! The library is generic over the real scalar through [`scalar::Real`];
//! `f64` is the working type of the CLI and the test suites, and the
//! stated tolerances are `f64` tolerances. Concrete aliases live at the
//! crate root.

pub mod error;
pub mod scalar;

pub mod numerics;
pub mod rootsys;

pub mod plancherel;
pub mod bfunction;
pub mod spherical;

pub use error::{Error, Result};
pub use scalar::Real;

/// Working complex type of the CLI and test suites.
pub type C64 = num_complex::Complex<f64>;

/// Root datum over `f64`.
pub type RootDatum64 = rootsys::RootDatum<f64>;
/// Spectral point over `f64`.
pub type SpectralPoint64 = rootsys::SpectralPoint<f64>;
