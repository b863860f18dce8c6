//! Closed-form one-excitation dynamics for the linear resonator.
//!
//! On resonance (`Ω₁ = Ω₂ = ω_R`, `V_R = 0`) the states `|eg0⟩`, `|ge0⟩` and
//! `|gg1⟩` are degenerate and closed under the Hamiltonian. The symmetric
//! combination `(|eg0⟩ + |ge0⟩)/√2` couples to `|gg1⟩` at `γ̃ = √2 γ`, the
//! antisymmetric one is dark. The amplitudes below drop the common phase
//! `e^{-iωt/2}`, so comparisons against numerics go through density matrices.

use crate::linalg::{StateVector, C64};
use crate::model::{basis_index, Level};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearOracleParams {
    pub gamma: f64,
    pub gamma_tilde: f64,
}

impl LinearOracleParams {
    pub fn new(gamma: f64) -> Self {
        Self {
            gamma,
            gamma_tilde: std::f64::consts::SQRT_2 * gamma,
        }
    }
}

/// Amplitudes on `(|eg0⟩, |ge0⟩, |gg1⟩)` starting from `|eg0⟩`.
pub fn state_eg0(t: f64, p: &LinearOracleParams) -> [C64; 3] {
    let (s, c) = (p.gamma_tilde * t).sin_cos();
    [
        C64::new(0.5 * (1.0 + c), 0.0),
        C64::new(-0.5 * (1.0 - c), 0.0),
        C64::new(0.0, s / std::f64::consts::SQRT_2),
    ]
}

/// Amplitudes on `(|eg0⟩, |ge0⟩, |gg1⟩)` starting from `|gg1⟩`.
pub fn state_gg1(t: f64, p: &LinearOracleParams) -> [C64; 3] {
    let (s, c) = (p.gamma_tilde * t).sin_cos();
    let b = C64::new(0.0, s / std::f64::consts::SQRT_2);
    [b, b, C64::new(c, 0.0)]
}

/// Embeds one-excitation amplitudes into the full `Q1 ⊗ Q2 ⊗ R` space.
pub fn embed(amps: &[C64; 3], cutoff: usize) -> StateVector {
    let mut psi = StateVector::zeros(4 * (cutoff + 1));
    psi[basis_index(Level::Excited, Level::Ground, 0, cutoff)] = amps[0];
    psi[basis_index(Level::Ground, Level::Excited, 0, cutoff)] = amps[1];
    psi[basis_index(Level::Ground, Level::Ground, 1, cutoff)] = amps[2];
    psi
}

/// Two-qubit negativity of the `|eg0⟩` trajectory: `sin²(γ̃t)(√2 − 1)/4`.
///
/// Tracing out R leaves weight `|c|²` on `|gg⟩` and the coherent part
/// `a|eg⟩ + b|ge⟩`; the partial transpose has one negative eigenvalue from
/// the `{ee, gg}` block `[[0, ab*], [a*b, |c|²]]`.
pub fn negativity_eg0(t: f64, p: &LinearOracleParams) -> f64 {
    let s = (p.gamma_tilde * t).sin();
    s * s * (std::f64::consts::SQRT_2 - 1.0) / 4.0
}

/// Two-qubit negativity of the `|gg1⟩` trajectory:
/// `(√((1−p)² + p²) − (1−p)) / 2` with `p = sin²(γ̃t)`.
pub fn negativity_gg1(t: f64, p: &LinearOracleParams) -> f64 {
    let s = (p.gamma_tilde * t).sin();
    let w = s * s;
    let q = 1.0 - w;
    ((q * q + w * w).sqrt() - q) / 2.0
}

/// Generic form used by both closed forms: negativity of
/// `a|eg0⟩ + b|ge0⟩ + c|gg1⟩` after tracing out the resonator.
pub fn negativity_one_excitation(amps: &[C64; 3]) -> f64 {
    let cc = amps[2].norm_sqr();
    let ab = (amps[0] * amps[1].conj()).norm();
    ((cc * cc + 4.0 * ab * ab).sqrt() - cc) / 2.0
}
