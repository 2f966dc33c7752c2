//! Optimal estimation of qubit mixed states from `N` identical copies.
//!
//! Given `N` copies of an unknown qubit state drawn from an isotropic prior,
//! the best collective measurement and guess maximize the mean Uhlmann
//! fidelity between the true and the estimated state. This crate computes
//! that optimum exactly for finite `N` and asymptotically, for states
//! anywhere in the Bloch ball (3D) and for states restricted to the
//! equatorial plane (2D):
//!
//! - [`repr`]: the SU(2) kernel — irrep multiplicities of `ρ^⊗N`, reduced
//!   Wigner matrices at `π/2`, and the per-block weight coefficients.
//! - [`priors`]: isotropic purity densities `w(r)` on `[0, 1]` and the
//!   Gauss–Legendre quadrature engine behind every fidelity integral.
//! - [`bayes3d`] / [`bayes2d`]: exact per-block fidelity coefficients, the
//!   optimal (3D) and fixed all-ones (2D) covariant POVMs, the 2D seed
//!   optimizer, and the closed Bures form.
//! - [`pointwise`]: SLDs, quantum Fisher information, the Holevo bound and
//!   the van Trees floor used as asymptotic cross-checks.
//! - [`simulate`]: a reproducible Monte Carlo harness that runs the full
//!   measure-then-guess protocol and compares against the closed forms.
//! - [`report`]: the shared JSON/CSV report schema used by the CLI.
//!
//! With the default `parallel` feature, per-block evaluations and Monte
//! Carlo chunks run on rayon; disabling it yields a sequential build with
//! bit-identical results.

pub mod bayes2d;
pub mod bayes3d;
pub mod error;
pub mod extrapolate;
pub mod half;
pub mod numeric;
pub(crate) mod par;
pub mod pointwise;
pub mod priors;
pub mod report;
pub mod repr;
pub mod simulate;

pub use error::{Error, Result};
pub use half::HalfInteger;
