//! Solvers for large-scale Lyapunov (AX + XA = D) and Sylvester (AX + XB = D)
//! equations with symmetric banded data.
//!
//! Two solution paths:
//! - a matrix-oriented conjugate gradient in band arithmetic, for
//!   well-conditioned coefficients;
//! - a splitting X ~ X_B + S diag(sig) S^T into a banded part (finite-horizon
//!   integral of the exponential form, built from rational resolvent
//!   approximations) and a low-rank part (inverse-Krylov Galerkin projection),
//!   for ill-conditioned coefficients.
//!
//! Supporting modules provide banded kernels, entrywise decay bounds that
//! drive the automatic bandwidth/horizon choices, dense reference oracles,
//! and the problem generators used by the experiment runner.

pub mod banded;
pub mod cg;
pub mod decay;
pub mod dense;
pub mod driver;
pub mod eig;
pub mod error;
pub mod expb;
pub mod factor;
pub mod io;
pub mod lanczos;
pub mod lowrank;
pub mod oracle;
pub mod quad;
pub mod scalar;
#[doc(hidden)]
pub mod test_util;

pub use banded::BandedMatrix;
pub use error::{Error, Result};
