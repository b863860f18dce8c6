use thiserror::Error;

use crate::dynamics::DynamicsError;
use crate::entanglement::EntanglementError;
use crate::linalg::LinalgError;
use crate::model::ModelError;
use crate::scenarios::ScenarioError;

/// Any failure raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
    #[error(transparent)]
    Entanglement(#[from] EntanglementError),
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Stable machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Linalg(e) | Error::Model(ModelError::Linalg(e)) => linalg_code(e),
            Error::Model(ModelError::PhotonOverflow { .. }) => "photon-overflow",
            Error::Model(ModelError::InvalidSpec(_)) => "invalid-system",
            Error::Model(ModelError::NotNormalized { .. }) => "not-normalized",
            Error::Dynamics(e) => dynamics_code(e),
            Error::Entanglement(EntanglementError::Linalg(e)) => linalg_code(e),
            Error::Entanglement(_) => "dimension-mismatch",
            Error::Scenario(e) => e.code(),
            Error::Io { .. } => "io",
        }
    }

    /// True for numerical failures (as opposed to bad input or IO).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self.code(),
            "no-convergence" | "not-hermitian" | "trace-drift" | "negative-eigenvalue" | "dimension-mismatch"
        )
    }
}

pub(crate) fn linalg_code(e: &LinalgError) -> &'static str {
    match e {
        LinalgError::NoConvergence { .. } => "no-convergence",
        LinalgError::NotHermitian { .. } => "not-hermitian",
        LinalgError::DimensionMismatch { .. } | LinalgError::NotSquare { .. } => "dimension-mismatch",
    }
}

pub(crate) fn dynamics_code(e: &DynamicsError) -> &'static str {
    match e {
        DynamicsError::TraceDrift { .. } => "trace-drift",
        DynamicsError::NegativeEigenvalueBeyondTolerance { .. } => "negative-eigenvalue",
        DynamicsError::InvalidTimes | DynamicsError::InvalidStep(_) | DynamicsError::InvalidLindblad(_) => {
            "invalid-config"
        }
        DynamicsError::DimensionMismatch { .. } | DynamicsError::Entanglement(_) => "dimension-mismatch",
        DynamicsError::Linalg(e) => linalg_code(e),
    }
}
