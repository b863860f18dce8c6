//! Entanglement of two qubits through a linear or nonlinear resonator.
//!
//! See [`model`] for the basis and operator conventions used everywhere.

pub mod dynamics;
pub mod entanglement;
pub mod linalg;
pub mod model;
pub mod oracle;
pub mod report;
pub mod scenarios;

mod error;

pub use error::Error;
