//! Self-contained complex special functions and quadrature primitives.
//!
//! Pure functions of their inputs; quadrature sums run in a fixed order so
//! repeated runs are bit-identical.

mod gamma;
mod hyp;
mod quad;

pub use gamma::{cgamma, lcgamma_right};
pub use hyp::hyp2f1;
pub use quad::{
    gauss_legendre, line_integral, residue_at, tanh_sinh_01, DecayCertificate, LineRule,
    QuadratureConfig,
};
