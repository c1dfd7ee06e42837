//! The free boson on the Riemann sphere: correlators of holomorphic field
//! derivatives, the reflection-positive Hilbert and Fock structure, and
//! transition amplitudes between disjoint discs.

pub mod algebra;
pub mod amplitude;
pub mod cli;
pub mod correlator;
pub mod error;
pub mod fock;
pub mod hilbert;
pub mod random;
pub mod scalar;
pub mod verify;

pub use error::{Error, Module, Result};
pub use scalar::{Backend, ComplexScalar, ExactComplex, QSqrt2};
