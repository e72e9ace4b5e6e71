//! Fusion categories `A_k(G)` of simple Lie groups at level `k`.
//!
//! * [`lie_core`]: Cartan data, root systems, Weyl groups.
//! * [`qnum`]: q-numbers and quantum Lie superfactorials at `q = exp(iπ/κ)`.
//! * [`fusion`]: integrable weights, modular data, Verlinde rings, global dimensions.
//! * [`module_cat`]: SU(2) module categories and conformal subgroups.
//! * [`acceptance`]: the numbered validation criteria, runnable from tests and the CLI.

pub mod acceptance;
pub mod error;
pub mod fusion;
pub mod lie_core;
pub mod module_cat;
pub mod numeric;
pub mod qnum;
pub mod tolerance;

pub use error::{Error, Result};
pub use lie_core::{DominantWeight, Family, LieData, LieType};
pub use numeric::{Complex, Precision, Real};
