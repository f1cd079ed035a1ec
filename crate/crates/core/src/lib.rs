//! Riemann-Siegel Z extended into the critical strip.
//!
//! `Z(t, eps)` is evaluated at `s = 1/2 + eps + i t` from hyperbolic main sums plus
//! generalised remainder coefficients `C_k(p, eps)`. An independent Euler-Maclaurin
//! path ([`oracle`]) provides reference values; [`bounds`] gives closed-form upper
//! bounds on the neglected path integrals; [`zeros`] traces level sets and
//! critical-line zeros.
//!
//! ```
//! let ev = zext::z_ext(7000.0, 0.1, 0).unwrap();
//! assert!((ev.z.re - 3.241730475804).abs() < 1e-9);
//! ```

pub mod bounds;
pub mod dd;
mod error;
pub mod extended;
pub mod jet;
pub mod oracle;
pub mod psi;
pub mod remainder;
pub mod scalar;
pub mod zeros;

pub use error::{Error, Result};
pub use extended::{
    cauchy_riemann_residual, xi_log, xi_scaled, z_classic, z_ext, z_ext_with, Phase, ZEvaluation,
    ZOptions,
};
pub use num_complex::Complex64;
pub use scalar::{grid_quantities, GridQuantities, LogValue, StripPoint};
