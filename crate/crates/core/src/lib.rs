//! Thinned Tracy–Widom distributions F_β(s, γ) for β = 1, 2, 4.
//!
//! Three independent routes evaluate the same functions:
//!
//! * [`fredholm`]: Nyström discretization of det(1 - γ K_Ai) on L²(s, ∞);
//! * [`painleve`]: the Ablowitz–Segur solution of Painlevé II, integrated
//!   leftward from its Airy boundary behaviour;
//! * [`tails`]: closed-form left/right tail, Weibull and transition expansions.
//!
//! [`sampler`] draws thinned Gaussian-ensemble spectra for Monte Carlo
//! comparison, [`verify`] bundles the cross-route acceptance checks and
//! [`cli`] is the command-line front end behind the `thinned-tw` binary.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod fredholm;
pub mod painleve;
pub mod quadrature;
pub mod sampler;
pub mod specfun;
pub mod tails;
pub mod verify;

pub use error::{Error, Result};
