//! Dense complex linear algebra: matrices, vectors, tensor products and a
//! Hermitian eigensolver with spectral functions.
//!
//! Everything here works on small dense matrices (a few hundred rows at
//! most). Storage is row-major `Vec<Complex64>`.

mod eigen;
mod matrix;
mod vector;

pub use eigen::{func_hermitian, hermitian_eig, EigenDecomposition, HERMITIAN_TOLERANCE};
pub use matrix::{kron, ComplexMatrix};
pub(crate) use matrix::matmul_into;
pub use vector::StateVector;

pub use num_complex::Complex64 as C64;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not Hermitian: max |A - A^H| = {deviation:e} exceeds {tolerance:e}")]
    NotHermitian { deviation: f64, tolerance: f64 },
    #[error("eigensolver did not converge for eigenvalue {index} after {iterations} iterations")]
    NoConvergence { index: usize, iterations: usize },
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);
