//! Exact computation of chromatic quasisymmetric functions of indifference
//! graphs, the local functions `g_k` that refine them, and the surrounding
//! positivity, general-graph and toric identities.
//!
//! Symmetric functions have coefficients in `Z[q]` and are stored in the
//! power-sum basis; see [`symring`]. Enumerations are bounded by the
//! process-wide guards in [`limits`].

pub mod algebra;
pub mod error;
pub mod gfuncs;
pub mod graphx;
pub mod hessenberg;
pub mod limits;
pub mod positivity;
pub mod symring;
pub mod toric;

pub use error::{Error, Result};
