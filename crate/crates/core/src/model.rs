//! Operators and Hamiltonian for two qubits coupled to one resonator mode.
//!
//! Conventions, fixed across the crate:
//!
//! * Tensor order is `Q1 ⊗ Q2 ⊗ R`. The basis index of `|q1 q2 n⟩` is
//!   `2(M+1)·q1 + (M+1)·q2 + n` with `|e⟩ = 0` and `|g⟩ = 1`.
//! * `σ_z = diag(+1, -1)`, so `σ_z|e⟩ = +|e⟩`.
//! * `σ⁺ = σ_x + iσ_y = [[0, 2], [0, 0]]` and `σ⁻ = (σ⁺)†`. These are **not**
//!   the half-normalized ladder operators: `σ⁻|e⟩ = 2|g⟩`. With the
//!   interaction `-γ/2 (aσ⁺ + a†σ⁻)` this puts a matrix element `-γ` between
//!   `|eg0⟩` and `|gg1⟩`, and the symmetric one-excitation state oscillates at
//!   `√2·γ`.
//! * Energies are in units of the resonator frequency; time is `ω t`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{func_hermitian, kron, ComplexMatrix, LinalgError, StateVector, C64};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("photon number {photons} exceeds Fock cutoff {cutoff}")]
    PhotonOverflow { photons: usize, cutoff: usize },
    #[error("invalid system parameters: {0}")]
    InvalidSpec(String),
    #[error("state factor `{factor}` has norm {norm}, expected 1")]
    NotNormalized { factor: &'static str, norm: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Qubit basis level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Level {
    #[serde(rename = "e")]
    Excited,
    #[serde(rename = "g")]
    Ground,
}

impl Level {
    pub fn index(self) -> usize {
        match self {
            Level::Excited => 0,
            Level::Ground => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Level::Excited => 'e',
            Level::Ground => 'g',
        }
    }
}

pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&[1.0, -1.0])
}

/// `σ_x + iσ_y`
pub fn sigma_plus() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[&[0.0, 2.0], &[0.0, 0.0]])
}

pub fn sigma_minus() -> ComplexMatrix {
    sigma_plus().adjoint()
}

/// Truncated annihilation operator on Fock levels `0..=cutoff`.
pub fn annihilation(cutoff: usize) -> ComplexMatrix {
    let n = cutoff + 1;
    let mut a = ComplexMatrix::zeros(n, n);
    for k in 1..n {
        a[(k - 1, k)] = C64::new((k as f64).sqrt(), 0.0);
    }
    a
}

pub fn number_operator(cutoff: usize) -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&(0..=cutoff).map(|k| k as f64).collect::<Vec<_>>())
}

/// `α cos(a + a†)` with the cosine taken of the truncated `a + a†`.
pub fn cosine_potential(cutoff: usize, alpha: f64) -> Result<ComplexMatrix, LinalgError> {
    let a = annihilation(cutoff);
    let x = &a + &a.adjoint();
    Ok(func_hermitian(&x, f64::cos)?.scale_real(alpha))
}

/// `α (a² + a†²)`
pub fn quadratic_potential(cutoff: usize, alpha: f64) -> ComplexMatrix {
    let a = annihilation(cutoff);
    let a2 = &a * &a;
    (&a2 + &a2.adjoint()).scale_real(alpha)
}

/// Resonator nonlinearity `V_R`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "NonlinearityRepr", into = "NonlinearityRepr")]
pub enum Nonlinearity {
    None,
    /// `α (a² + a†²)`
    Quadratic { alpha: f64 },
    /// `α cos(a + a†)`
    Cosine { alpha: f64 },
}

// Flat wire form. Serde's internally tagged enums accept stray keys next
// to a unit variant, so strictness is enforced here instead.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NonlinearityRepr {
    kind: NonlinearityKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum NonlinearityKind {
    None,
    Quadratic,
    Cosine,
}

impl TryFrom<NonlinearityRepr> for Nonlinearity {
    type Error = String;

    fn try_from(r: NonlinearityRepr) -> Result<Self, String> {
        match (r.kind, r.alpha) {
            (NonlinearityKind::None, None) => Ok(Nonlinearity::None),
            (NonlinearityKind::None, Some(_)) => Err("kind `none` takes no `alpha`".into()),
            (NonlinearityKind::Quadratic, Some(alpha)) => Ok(Nonlinearity::Quadratic { alpha }),
            (NonlinearityKind::Cosine, Some(alpha)) => Ok(Nonlinearity::Cosine { alpha }),
            (_, None) => Err("missing field `alpha`".into()),
        }
    }
}

impl From<Nonlinearity> for NonlinearityRepr {
    fn from(n: Nonlinearity) -> Self {
        let (kind, alpha) = match n {
            Nonlinearity::None => (NonlinearityKind::None, None),
            Nonlinearity::Quadratic { alpha } => (NonlinearityKind::Quadratic, Some(alpha)),
            Nonlinearity::Cosine { alpha } => (NonlinearityKind::Cosine, Some(alpha)),
        };
        NonlinearityRepr { kind, alpha }
    }
}

impl Nonlinearity {
    pub fn alpha(&self) -> f64 {
        match *self {
            Nonlinearity::None => 0.0,
            Nonlinearity::Quadratic { alpha } | Nonlinearity::Cosine { alpha } => alpha,
        }
    }

    /// Same kind with a new amplitude; `None` becomes `Cosine`.
    pub fn with_alpha(&self, alpha: f64) -> Self {
        match self {
            Nonlinearity::Quadratic { .. } => Nonlinearity::Quadratic { alpha },
            Nonlinearity::None | Nonlinearity::Cosine { .. } => Nonlinearity::Cosine { alpha },
        }
    }

    pub fn potential(&self, cutoff: usize) -> Result<ComplexMatrix, LinalgError> {
        match *self {
            Nonlinearity::None => Ok(ComplexMatrix::zeros(cutoff + 1, cutoff + 1)),
            Nonlinearity::Quadratic { alpha } => Ok(quadratic_potential(cutoff, alpha)),
            Nonlinearity::Cosine { alpha } => cosine_potential(cutoff, alpha),
        }
    }
}

/// Physical parameters of the qubit–resonator–qubit system.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSpec {
    pub omega1: f64,
    pub omega2: f64,
    #[serde(default = "unit")]
    pub omega_r: f64,
    pub gamma: f64,
    #[serde(default = "no_nonlinearity")]
    pub nonlinearity: Nonlinearity,
    pub fock_cutoff: usize,
}

fn unit() -> f64 {
    1.0
}

fn no_nonlinearity() -> Nonlinearity {
    Nonlinearity::None
}

impl Default for SystemSpec {
    /// Resonant qubits, `γ = 0.01`, linear resonator, `M = 40`.
    fn default() -> Self {
        Self {
            omega1: 1.0,
            omega2: 1.0,
            omega_r: 1.0,
            gamma: 0.01,
            nonlinearity: Nonlinearity::None,
            fock_cutoff: 40,
        }
    }
}

impl SystemSpec {
    pub fn with_nonlinearity(mut self, nonlinearity: Nonlinearity) -> Self {
        self.nonlinearity = nonlinearity;
        self
    }

    pub fn with_cutoff(mut self, cutoff: usize) -> Self {
        self.fock_cutoff = cutoff;
        self
    }

    pub fn with_gamma(mut self, gamma: f64) -> Self {
        self.gamma = gamma;
        self
    }

    /// Hilbert space dimension `4(M+1)`.
    pub fn dim(&self) -> usize {
        4 * (self.fock_cutoff + 1)
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        let finite = [self.omega1, self.omega2, self.omega_r, self.gamma, self.nonlinearity.alpha()];
        if finite.iter().any(|x| !x.is_finite()) {
            return Err(ModelError::InvalidSpec("parameters must be finite".into()));
        }
        if self.gamma < 0.0 {
            return Err(ModelError::InvalidSpec(format!("gamma = {} < 0", self.gamma)));
        }
        if self.fock_cutoff < 1 {
            return Err(ModelError::InvalidSpec("fock_cutoff must be at least 1".into()));
        }
        Ok(())
    }
}

/// Basis index of `|q1 q2 n⟩`.
pub fn basis_index(q1: Level, q2: Level, photons: usize, cutoff: usize) -> usize {
    let m1 = cutoff + 1;
    2 * m1 * q1.index() + m1 * q2.index() + photons
}

/// Full Hamiltonian `H_Q1 + H_Q2 + H_R + H_Q1R + H_Q2R` on `Q1 ⊗ Q2 ⊗ R`.
pub fn build_hamiltonian(spec: &SystemSpec) -> Result<ComplexMatrix, ModelError> {
    spec.validate()?;
    let m = spec.fock_cutoff;
    let i2 = ComplexMatrix::identity(2);
    let ir = ComplexMatrix::identity(m + 1);
    let a = annihilation(m);
    let ad = a.adjoint();
    let sz = sigma_z();
    let sp = sigma_plus();
    let sm = sigma_minus();

    let on_q1 = |op: &ComplexMatrix, r: &ComplexMatrix| kron(&kron(op, &i2), r);
    let on_q2 = |op: &ComplexMatrix, r: &ComplexMatrix| kron(&kron(&i2, op), r);
    let on_r = |r: &ComplexMatrix| kron(&ComplexMatrix::identity(4), r);

    let mut resonator = &number_operator(m) + &ir.scale_real(0.5);
    resonator = resonator.scale_real(spec.omega_r);
    resonator = &resonator + &spec.nonlinearity.potential(m)?;

    let mut h = on_r(&resonator);
    h.axpy(C64::new(spec.omega1 / 2.0, 0.0), &on_q1(&sz, &ir))?;
    h.axpy(C64::new(spec.omega2 / 2.0, 0.0), &on_q2(&sz, &ir))?;
    let g = C64::new(-spec.gamma / 2.0, 0.0);
    for coupling in [
        on_q1(&sp, &a),
        on_q1(&sm, &ad),
        on_q2(&sp, &a),
        on_q2(&sm, &ad),
    ] {
        h.axpy(g, &coupling)?;
    }
    Ok(h.hermitian_part())
}

/// `σ⁺σ⁻/4 ⊗ I ⊗ I + I ⊗ σ⁺σ⁻/4 ⊗ I + I ⊗ I ⊗ a†a`; conserved when `V_R = 0`.
pub fn excitation_operator(cutoff: usize) -> ComplexMatrix {
    let i2 = ComplexMatrix::identity(2);
    let ir = ComplexMatrix::identity(cutoff + 1);
    let up = (&sigma_plus() * &sigma_minus()).scale_real(0.25);
    let mut n = kron(&kron(&up, &i2), &ir);
    n = &n + &kron(&kron(&i2, &up), &ir);
    &n + &kron(&ComplexMatrix::identity(4), &number_operator(cutoff))
}

/// One qubit factor of a product state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QubitState {
    Level(Level),
    /// `[[re, im] of |e⟩, [re, im] of |g⟩]`
    Amplitudes([[f64; 2]; 2]),
}

impl QubitState {
    fn ket(&self) -> StateVector {
        match self {
            QubitState::Level(l) => StateVector::basis(2, l.index()),
            QubitState::Amplitudes(amps) => {
                StateVector::new(amps.iter().map(|[re, im]| C64::new(*re, *im)).collect())
            }
        }
    }
}

impl From<Level> for QubitState {
    fn from(l: Level) -> Self {
        QubitState::Level(l)
    }
}

/// Resonator factor of a product state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PhotonState {
    Fock(usize),
    /// `[re, im]` per Fock level, starting at `|0⟩`.
    Amplitudes(Vec<[f64; 2]>),
}

/// `|ψ_Q1⟩ ⊗ |ψ_Q2⟩ ⊗ |ψ_R⟩`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductStateSpec {
    pub q1: QubitState,
    pub q2: QubitState,
    pub photons: PhotonState,
}

impl ProductStateSpec {
    pub fn basis(q1: Level, q2: Level, photons: usize) -> Self {
        Self {
            q1: q1.into(),
            q2: q2.into(),
            photons: PhotonState::Fock(photons),
        }
    }

    /// Parses a ket label such as `eg0` or `gg12`.
    pub fn from_label(label: &str) -> Option<Self> {
        let mut chars = label.chars();
        let level = |c: Option<char>| match c {
            Some('e') => Some(Level::Excited),
            Some('g') => Some(Level::Ground),
            _ => None,
        };
        let q1 = level(chars.next())?;
        let q2 = level(chars.next())?;
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        Some(Self::basis(q1, q2, rest.parse().ok()?))
    }

    /// Ket label for basis product states, `None` for superpositions.
    pub fn label(&self) -> Option<String> {
        match (&self.q1, &self.q2, &self.photons) {
            (QubitState::Level(a), QubitState::Level(b), PhotonState::Fock(n)) => {
                Some(format!("{}{}{}", a.symbol(), b.symbol(), n))
            }
            _ => None,
        }
    }
}

const NORM_TOLERANCE: f64 = 1e-12;

pub fn product_state(spec: &ProductStateSpec, cutoff: usize) -> Result<StateVector, ModelError> {
    let q1 = spec.q1.ket();
    let q2 = spec.q2.ket();
    for (factor, ket) in [("q1", &q1), ("q2", &q2)] {
        let norm = ket.norm();
        if norm.is_nan() || (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(ModelError::NotNormalized { factor, norm });
        }
    }
    let r = match &spec.photons {
        PhotonState::Fock(n) => {
            if *n > cutoff {
                return Err(ModelError::PhotonOverflow {
                    photons: *n,
                    cutoff,
                });
            }
            StateVector::basis(cutoff + 1, *n)
        }
        PhotonState::Amplitudes(amps) => {
            if amps.len() > cutoff + 1 {
                return Err(ModelError::PhotonOverflow {
                    photons: amps.len() - 1,
                    cutoff,
                });
            }
            let mut v: Vec<C64> = amps.iter().map(|[re, im]| C64::new(*re, *im)).collect();
            v.resize(cutoff + 1, C64::new(0.0, 0.0));
            let ket = StateVector::new(v);
            let norm = ket.norm();
            if norm.is_nan() || (norm - 1.0).abs() > NORM_TOLERANCE {
                return Err(ModelError::NotNormalized {
                    factor: "photons",
                    norm,
                });
            }
            ket
        }
    };
    Ok(q1.kron(&q2).kron(&r))
}

/// Josephson amplitude of a flux-tuned weak link: `2 E_J⁰ cos(π φ_c/φ_0)`.
pub fn alpha_from_flux(ej0: f64, flux_ratio: f64) -> f64 {
    2.0 * ej0 * (PI * flux_ratio).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Level::{Excited as E, Ground as G};

    fn re(z: C64) -> f64 {
        assert!(z.im.abs() < 1e-15, "unexpected imaginary part {z}");
        z.re
    }

    #[test]
    fn ladder_operators() {
        assert_eq!(
            annihilation(1),
            ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]])
        );
        let a = annihilation(5);
        assert_eq!(re(a[(1, 2)]), 2f64.sqrt());
        let n = &a.adjoint() * &a;
        assert!(n.max_abs_diff(&number_operator(5)) < 1e-14);
    }

    #[test]
    fn pauli_convention() {
        let sm = sigma_minus();
        let down = sm.matvec(&StateVector::basis(2, E.index())).unwrap();
        assert_eq!(down, StateVector::new(vec![C64::new(0.0, 0.0), C64::new(2.0, 0.0)]));
        let up = sigma_z().matvec(&StateVector::basis(2, 0)).unwrap();
        assert_eq!(up, StateVector::basis(2, 0));
        // σ⁺σ⁻ = diag(4, 0) by direct multiplication
        let pm = &sigma_plus() * &sigma_minus();
        assert_eq!(pm, ComplexMatrix::from_real_diagonal(&[4.0, 0.0]));
    }

    #[test]
    fn uncoupled_hamiltonian_is_diagonal() {
        let spec = SystemSpec {
            omega1: 1.3,
            omega2: 0.7,
            gamma: 0.0,
            fock_cutoff: 3,
            ..SystemSpec::default()
        };
        let h = build_hamiltonian(&spec).unwrap();
        assert_eq!(h.rows(), 16);
        for q1 in [E, G] {
            for q2 in [E, G] {
                for n in 0..=3 {
                    let i = basis_index(q1, q2, n, 3);
                    let s1 = if q1 == E { 1.0 } else { -1.0 };
                    let s2 = if q2 == E { 1.0 } else { -1.0 };
                    let expected = s1 * 1.3 / 2.0 + s2 * 0.7 / 2.0 + n as f64 + 0.5;
                    assert!((re(h[(i, i)]) - expected).abs() < 1e-14);
                }
            }
        }
        let off: f64 = (0..16)
            .flat_map(|i| (0..16).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .map(|(i, j)| h[(i, j)].norm())
            .fold(0.0, f64::max);
        assert_eq!(off, 0.0);
    }

    #[test]
    fn hamiltonian_matrix_elements() {
        let spec = SystemSpec {
            gamma: 0.0,
            fock_cutoff: 1,
            ..SystemSpec::default()
        };
        let h = build_hamiltonian(&spec).unwrap();
        let eg0 = basis_index(E, G, 0, 1);
        assert!((re(h[(eg0, eg0)]) - 0.5).abs() < 1e-15);

        let spec = SystemSpec {
            fock_cutoff: 4,
            ..SystemSpec::default()
        };
        let h = build_hamiltonian(&spec).unwrap();
        let eg0 = basis_index(E, G, 0, 4);
        let ge0 = basis_index(G, E, 0, 4);
        let gg1 = basis_index(G, G, 1, 4);
        assert!((re(h[(gg1, eg0)]) + 0.01).abs() < 1e-15);
        assert!((re(h[(gg1, ge0)]) + 0.01).abs() < 1e-15);
        for i in [eg0, ge0, gg1] {
            assert!((re(h[(i, i)]) - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn hamiltonian_hermitian_for_all_kinds() {
        for nl in [
            Nonlinearity::None,
            Nonlinearity::Quadratic { alpha: 0.3 },
            Nonlinearity::Cosine { alpha: 0.7 },
        ] {
            let spec = SystemSpec::default().with_cutoff(12).with_nonlinearity(nl);
            let h = build_hamiltonian(&spec).unwrap();
            assert!(h.hermitian_deviation() <= 1e-12);
        }
    }

    #[test]
    fn linear_hamiltonian_conserves_excitations() {
        let spec = SystemSpec::default().with_cutoff(10);
        let h = build_hamiltonian(&spec).unwrap();
        let n = excitation_operator(10);
        assert!(h.commutator(&n).unwrap().max_abs() <= 1e-10);
        let spec = spec.with_nonlinearity(Nonlinearity::Cosine { alpha: 0.1 });
        let h = build_hamiltonian(&spec).unwrap();
        assert!(h.commutator(&n).unwrap().max_abs() > 1e-3);
    }

    #[test]
    fn quadratic_potential_structure() {
        let v = quadratic_potential(6, 0.25);
        assert!((re(v[(2, 0)]) - 0.25 * 2f64.sqrt()).abs() < 1e-15);
        for i in 0..7usize {
            for j in 0..7 {
                if i.abs_diff(j) != 2 {
                    assert_eq!(v[(i, j)], C64::new(0.0, 0.0));
                }
            }
        }
        assert_eq!(quadratic_potential(6, 0.0).max_abs(), 0.0);
    }

    #[test]
    fn cosine_potential_basics() {
        assert_eq!(cosine_potential(8, 0.0).unwrap().max_abs(), 0.0);
        let c = cosine_potential(40, 1.0).unwrap();
        assert!(c.hermitian_deviation() <= 1e-12);
        assert!((re(c[(0, 0)]) - (-0.5f64).exp()).abs() < 1e-10);
    }

    #[test]
    fn product_states() {
        let psi = product_state(&ProductStateSpec::basis(E, G, 0), 3).unwrap();
        assert_eq!(psi, StateVector::basis(16, basis_index(E, G, 0, 3)));
        let psi = product_state(&ProductStateSpec::basis(G, G, 1), 3).unwrap();
        assert_eq!(psi[basis_index(G, G, 1, 3)], C64::new(1.0, 0.0));
        assert!(matches!(
            product_state(&ProductStateSpec::basis(G, G, 4), 3),
            Err(ModelError::PhotonOverflow { photons: 4, cutoff: 3 })
        ));
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let spec = ProductStateSpec {
            q1: QubitState::Amplitudes([[h, 0.0], [0.0, h]]),
            q2: G.into(),
            photons: PhotonState::Amplitudes(vec![[0.6, 0.0], [0.0, 0.8]]),
        };
        let psi = product_state(&spec, 5).unwrap();
        assert!((psi.norm() - 1.0).abs() < 1e-14);
        let bad = ProductStateSpec {
            q1: QubitState::Amplitudes([[1.0, 0.0], [1.0, 0.0]]),
            ..spec
        };
        assert!(matches!(
            product_state(&bad, 5),
            Err(ModelError::NotNormalized { factor: "q1", .. })
        ));
    }

    #[test]
    fn labels() {
        let s = ProductStateSpec::from_label("eg12").unwrap();
        assert_eq!(s, ProductStateSpec::basis(E, G, 12));
        assert_eq!(s.label().as_deref(), Some("eg12"));
        for bad in ["", "e", "eg", "xg0", "eg-1", "ege"] {
            assert!(ProductStateSpec::from_label(bad).is_none(), "{bad}");
        }
    }

    #[test]
    fn flux_tuning() {
        assert_eq!(alpha_from_flux(1.5, 0.0), 3.0);
        assert!(alpha_from_flux(1.5, 0.5).abs() < 1e-15);
        assert!((alpha_from_flux(1.5, 1.0 / 3.0) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn spec_validation() {
        assert!(SystemSpec::default().validate().is_ok());
        assert!(SystemSpec::default().with_cutoff(0).validate().is_err());
        assert!(SystemSpec::default().with_gamma(-0.1).validate().is_err());
        assert!(SystemSpec::default().with_gamma(f64::NAN).validate().is_err());
    }

    #[test]
    fn nonlinearity_json_shape() {
        let json = serde_json::to_string(&Nonlinearity::Cosine { alpha: 0.5 }).unwrap();
        assert_eq!(json, r#"{"kind":"cosine","alpha":0.5}"#);
        let none: Nonlinearity = serde_json::from_str(r#"{"kind":"none"}"#).unwrap();
        assert_eq!(none, Nonlinearity::None);
        assert!(serde_json::from_str::<Nonlinearity>(r#"{"kind":"cosine","aplha":1}"#).is_err());
        assert!(serde_json::from_str::<Nonlinearity>(r#"{"kind":"none","extra":1}"#).is_err());
        assert!(serde_json::from_str::<Nonlinearity>(r#"{"kind":"cosine"}"#).is_err());
        assert!(serde_json::from_str::<Nonlinearity>(r#"{"kind":"sine","alpha":1}"#).is_err());
    }
}
