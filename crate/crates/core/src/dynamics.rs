//! Time evolution.
//!
//! Pure states are propagated exactly through the eigendecomposition of the
//! (time-independent) Hamiltonian. Density matrices under local damping are
//! integrated with classical fourth-order Runge–Kutta on the Lindblad
//! equation
//!
//! ```text
//! dρ/dt = -i[H, ρ] - ½ Σ_k (C_k†C_k ρ + ρ C_k†C_k - 2 C_k ρ C_k†)
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::entanglement::{DensityMatrix, EntanglementError};
use crate::linalg::{hermitian_eig, kron, ComplexMatrix, EigenDecomposition, LinalgError, StateVector, C64};
use crate::model::{annihilation, sigma_minus};

pub const DEFAULT_LINDBLAD_STEP: f64 = 0.05;
/// Allowed `|tr ρ − 1|` over a whole run.
pub const TRACE_DRIFT_TOLERANCE: f64 = 1e-6;
/// Allowed most-negative eigenvalue of ρ at any sample.
pub const NEGATIVITY_TOLERANCE: f64 = 1e-6;
const MAX_STEP_HALVINGS: u32 = 4;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DynamicsError {
    #[error("dimension mismatch: operator {operator} vs state {state}")]
    DimensionMismatch { operator: usize, state: usize },
    #[error("sample times must be finite, non-negative and ascending")]
    InvalidTimes,
    #[error("integration step must be positive and finite, got {0}")]
    InvalidStep(f64),
    #[error("invalid damping parameters: {0}")]
    InvalidLindblad(String),
    #[error("trace drift {drift:e} exceeds {TRACE_DRIFT_TOLERANCE:e} at step {step}")]
    TraceDrift { drift: f64, step: f64 },
    #[error("density matrix eigenvalue {min:e} below -{NEGATIVITY_TOLERANCE:e} at t = {time}")]
    NegativeEigenvalueBeyondTolerance { min: f64, time: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Entanglement(#[from] EntanglementError),
}

/// Sampled states at ascending times.
#[derive(Debug, Clone)]
pub struct Trajectory<S> {
    pub times: Vec<f64>,
    pub states: Vec<S>,
}

impl<S> Trajectory<S> {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, &S)> {
        self.times.iter().copied().zip(&self.states)
    }
}

fn check_times(times: &[f64]) -> Result<(), DynamicsError> {
    let ok = times.iter().all(|t| t.is_finite() && *t >= 0.0)
        && times.windows(2).all(|w| w[0] <= w[1]);
    if ok {
        Ok(())
    } else {
        Err(DynamicsError::InvalidTimes)
    }
}

/// Exact propagator `U(t) = V e^{-iΛt} V†` for a fixed Hamiltonian.
#[derive(Debug, Clone)]
pub struct Propagator {
    eig: EigenDecomposition,
}

impl Propagator {
    pub fn new(h: &ComplexMatrix) -> Result<Self, DynamicsError> {
        Ok(Self {
            eig: hermitian_eig(h)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.eig.dim()
    }

    pub fn eigen(&self) -> &EigenDecomposition {
        &self.eig
    }

    /// Prepares repeated evaluation of `U(t)ψ₀`.
    pub fn start(&self, psi0: &StateVector) -> Result<UnitaryEvolution<'_>, DynamicsError> {
        let n = self.dim();
        if psi0.len() != n {
            return Err(DynamicsError::DimensionMismatch {
                operator: n,
                state: psi0.len(),
            });
        }
        let v = &self.eig.eigenvectors;
        let x = psi0.as_slice();
        let coeffs = (0..n)
            .map(|k| (0..n).fold(C64::new(0.0, 0.0), |acc, i| acc + v[(i, k)].conj() * x[i]))
            .collect();
        Ok(UnitaryEvolution {
            prop: self,
            psi0: psi0.clone(),
            coeffs,
        })
    }
}

/// `ψ(t)` for one initial state, evaluated at arbitrary times.
#[derive(Debug, Clone)]
pub struct UnitaryEvolution<'a> {
    prop: &'a Propagator,
    psi0: StateVector,
    coeffs: Vec<C64>,
}

impl UnitaryEvolution<'_> {
    /// Evaluated as `ψ₀ + V (e^{-iEt} - 1) V†ψ₀`, so that short times do not
    /// pick up the roundoff of reconstructing `ψ₀` from the eigenbasis.
    pub fn state_at(&self, t: f64) -> StateVector {
        if t == 0.0 {
            return self.psi0.clone();
        }
        let eig = &self.prop.eig;
        let phased: Vec<C64> = eig
            .eigenvalues
            .iter()
            .zip(&self.coeffs)
            .map(|(&l, c)| {
                let theta = l * t;
                let half = (0.5 * theta).sin();
                c * C64::new(-2.0 * half * half, -theta.sin())
            })
            .collect();
        let v = &eig.eigenvectors;
        StateVector::new(
            self.psi0
                .as_slice()
                .iter()
                .enumerate()
                .map(|(i, x0)| x0 + v.row(i).iter().zip(&phased).fold(C64::new(0.0, 0.0), |acc, (a, b)| acc + a * b))
                .collect(),
        )
    }
}

pub fn evolve_unitary(
    h: &ComplexMatrix,
    psi0: &StateVector,
    times: &[f64],
) -> Result<Trajectory<StateVector>, DynamicsError> {
    check_times(times)?;
    let prop = Propagator::new(h)?;
    let evo = prop.start(psi0)?;
    Ok(Trajectory {
        times: times.to_vec(),
        states: times.iter().map(|&t| evo.state_at(t)).collect(),
    })
}

/// Lifetimes of the local damping channels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LindbladSpec {
    /// Resonator lifetime, seconds.
    pub t_r: f64,
    /// Qubit lifetimes, seconds.
    pub t_q1: f64,
    pub t_q2: f64,
    /// Resonator angular frequency, rad/s; converts seconds to `ωt`.
    #[serde(default = "default_omega_phys")]
    pub omega_phys: f64,
    /// Use `|g⟩⟨e|` for the qubit jump operator instead of the factor-2
    /// `σ⁻`. The default (`false`) gives qubit decay rate `4/T_Q`.
    #[serde(default)]
    pub standard_lowering: bool,
}

/// `2π · 5 GHz`
pub const DEFAULT_OMEGA_PHYS: f64 = 2.0 * std::f64::consts::PI * 5e9;

fn default_omega_phys() -> f64 {
    DEFAULT_OMEGA_PHYS
}

impl Default for LindbladSpec {
    /// `T_R = 50 µs`, `T_Q1 = T_Q2 = 10 µs`.
    fn default() -> Self {
        Self {
            t_r: 5e-5,
            t_q1: 1e-5,
            t_q2: 1e-5,
            omega_phys: DEFAULT_OMEGA_PHYS,
            standard_lowering: false,
        }
    }
}

impl LindbladSpec {
    /// Infinite lifetimes: no damping.
    pub fn closed() -> Self {
        Self {
            t_r: f64::INFINITY,
            t_q1: f64::INFINITY,
            t_q2: f64::INFINITY,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), DynamicsError> {
        for (name, t) in [("t_r", self.t_r), ("t_q1", self.t_q1), ("t_q2", self.t_q2)] {
            if t.is_nan() || t <= 0.0 {
                return Err(DynamicsError::InvalidLindblad(format!("{name} = {t} must be > 0")));
            }
        }
        if !(self.omega_phys.is_finite() && self.omega_phys > 0.0) {
            return Err(DynamicsError::InvalidLindblad(format!(
                "omega_phys = {} must be positive and finite",
                self.omega_phys
            )));
        }
        Ok(())
    }

    /// Dimensionless `1 / (T ω_phys)`.
    pub fn dimensionless_rate(&self, lifetime: f64) -> f64 {
        1.0 / (lifetime * self.omega_phys)
    }

    /// `[a/√T_R, σ⁻₁/√T_Q1, σ⁻₂/√T_Q2]` in dimensionless time, embedded in
    /// `Q1 ⊗ Q2 ⊗ R`. Channels with zero rate are dropped.
    pub fn collapse_operators(&self, cutoff: usize) -> Vec<ComplexMatrix> {
        let i2 = ComplexMatrix::identity(2);
        let ir = ComplexMatrix::identity(cutoff + 1);
        let lower = if self.standard_lowering {
            ComplexMatrix::from_real_rows(&[&[0.0, 0.0], &[1.0, 0.0]])
        } else {
            sigma_minus()
        };
        let channels = [
            (self.t_r, kron(&ComplexMatrix::identity(4), &annihilation(cutoff))),
            (self.t_q1, kron(&kron(&lower, &i2), &ir)),
            (self.t_q2, kron(&kron(&i2, &lower), &ir)),
        ];
        channels
            .into_iter()
            .filter_map(|(t, op)| {
                let rate = self.dimensionless_rate(t);
                (rate > 0.0).then(|| op.scale_real(rate.sqrt()))
            })
            .collect()
    }
}

/// Dense right-hand side of the Lindblad equation.
pub fn lindblad_rhs(
    rho: &ComplexMatrix,
    h: &ComplexMatrix,
    collapse_ops: &[ComplexMatrix],
) -> Result<ComplexMatrix, DynamicsError> {
    let n = rho.rows();
    if h.shape() != (n, n) || collapse_ops.iter().any(|c| c.shape() != (n, n)) {
        return Err(DynamicsError::DimensionMismatch {
            operator: h.rows(),
            state: n,
        });
    }
    let mut out = h.commutator(rho)?.scale(C64::new(0.0, -1.0));
    for c in collapse_ops {
        let cd = c.adjoint();
        let cdc = cd.matmul(c)?;
        let anti = &cdc.matmul(rho)? + &rho.matmul(&cdc)?;
        let jump = c.matmul(rho)?.matmul(&cd)?;
        out.axpy(C64::new(-0.5, 0.0), &anti)?;
        out.axpy(C64::new(1.0, 0.0), &jump)?;
    }
    Ok(out)
}

#[derive(Debug, Clone)]
struct SparseOp {
    entries: Vec<(usize, usize, C64)>,
}

impl SparseOp {
    fn from_dense(m: &ComplexMatrix) -> Self {
        let mut entries = Vec::new();
        for i in 0..m.rows() {
            for (j, z) in m.row(i).iter().enumerate() {
                if *z != C64::new(0.0, 0.0) {
                    entries.push((i, j, *z));
                }
            }
        }
        Self { entries }
    }
}

/// The Lindblad generator written as `-i(H_eff ρ − ρ H_eff†) + Σ C ρ C†`
/// with `H_eff = H − (i/2) Σ C†C`, jump operators kept sparse.
#[derive(Debug, Clone)]
pub struct LindbladGenerator {
    h_eff: ComplexMatrix,
    jumps: Vec<SparseOp>,
}

impl LindbladGenerator {
    pub fn new(h: &ComplexMatrix, collapse_ops: &[ComplexMatrix]) -> Result<Self, DynamicsError> {
        let n = h.rows();
        let mut h_eff = h.clone();
        for c in collapse_ops {
            if c.shape() != (n, n) {
                return Err(DynamicsError::DimensionMismatch {
                    operator: c.rows(),
                    state: n,
                });
            }
            h_eff.axpy(C64::new(0.0, -0.5), &c.adjoint().matmul(c)?)?;
        }
        Ok(Self {
            h_eff,
            jumps: collapse_ops.iter().map(SparseOp::from_dense).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.h_eff.rows()
    }

    /// Writes the right-hand side for Hermitian `rho` into `out`.
    fn rhs_into(&self, rho: &ComplexMatrix, out: &mut ComplexMatrix, scratch: &mut ComplexMatrix) {
        let n = self.dim();
        crate::linalg::matmul_into(&self.h_eff, rho, scratch);
        let x = scratch.as_slice();
        let o = out.as_mut_slice();
        // -i (X − X†) where X = H_eff ρ
        for i in 0..n {
            for j in 0..n {
                let d = x[i * n + j] - x[j * n + i].conj();
                o[i * n + j] = C64::new(d.im, -d.re);
            }
        }
        for jump in &self.jumps {
            for &(i, k, a) in &jump.entries {
                for &(j, l, b) in &jump.entries {
                    o[i * n + j] += a * rho[(k, l)] * b.conj();
                }
            }
        }
    }

    pub fn rhs(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        let n = self.dim();
        let mut out = ComplexMatrix::zeros(n, n);
        let mut scratch = ComplexMatrix::zeros(n, n);
        self.rhs_into(rho, &mut out, &mut scratch);
        out
    }
}

/// Fixed-step RK4 integrator with preallocated stage buffers.
struct Rk4<'a> {
    generator: &'a LindbladGenerator,
    k: [ComplexMatrix; 4],
    stage: ComplexMatrix,
    scratch: ComplexMatrix,
}

impl<'a> Rk4<'a> {
    fn new(generator: &'a LindbladGenerator) -> Self {
        let n = generator.dim();
        let z = || ComplexMatrix::zeros(n, n);
        Self {
            generator,
            k: [z(), z(), z(), z()],
            stage: z(),
            scratch: z(),
        }
    }

    fn step(&mut self, rho: &mut ComplexMatrix, h: f64) {
        let g = self.generator;
        g.rhs_into(rho, &mut self.k[0], &mut self.scratch);
        for (stage_idx, factor) in [(1, 0.5), (2, 0.5), (3, 1.0)] {
            let (done, rest) = self.k.split_at_mut(stage_idx);
            let prev = &done[stage_idx - 1];
            for ((s, r), p) in self.stage.as_mut_slice().iter_mut().zip(rho.as_slice()).zip(prev.as_slice()) {
                *s = r + p * (factor * h);
            }
            g.rhs_into(&self.stage, &mut rest[0], &mut self.scratch);
        }
        let [k1, k2, k3, k4] = &self.k;
        let w = h / 6.0;
        for (idx, r) in rho.as_mut_slice().iter_mut().enumerate() {
            *r += (k1.as_slice()[idx] + (k2.as_slice()[idx] + k3.as_slice()[idx]) * 2.0 + k4.as_slice()[idx]) * w;
        }
        hermitize(rho);
    }
}

fn hermitize(m: &mut ComplexMatrix) {
    let n = m.rows();
    for i in 0..n {
        m[(i, i)].im = 0.0;
        for j in i + 1..n {
            let avg = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
            m[(i, j)] = avg;
            m[(j, i)] = avg.conj();
        }
    }
}

/// Integrates the damped dynamics of a full `[2, 2, M+1]` density matrix
/// and samples it at `times` (with `rho0` taken at `t = 0`).
///
/// The step is halved (up to four times) when the run drifts in trace or
/// develops negative eigenvalues beyond tolerance.
pub fn evolve_lindblad(
    h: &ComplexMatrix,
    rho0: &DensityMatrix,
    spec: &LindbladSpec,
    times: &[f64],
    step: f64,
) -> Result<Trajectory<DensityMatrix>, DynamicsError> {
    spec.validate()?;
    check_times(times)?;
    if !(step.is_finite() && step > 0.0) {
        return Err(DynamicsError::InvalidStep(step));
    }
    let cutoff = match rho0.dims() {
        [2, 2, r] if *r >= 2 => r - 1,
        _ => {
            return Err(DynamicsError::DimensionMismatch {
                operator: h.rows(),
                state: rho0.dim(),
            })
        }
    };
    if h.shape() != (rho0.dim(), rho0.dim()) {
        return Err(DynamicsError::DimensionMismatch {
            operator: h.rows(),
            state: rho0.dim(),
        });
    }
    let generator = LindbladGenerator::new(h, &spec.collapse_operators(cutoff))?;
    let mut h_step = step;
    let mut attempt = 0;
    loop {
        match integrate(&generator, rho0, times, h_step) {
            Ok(traj) => return Ok(traj),
            Err(err @ (DynamicsError::TraceDrift { .. } | DynamicsError::NegativeEigenvalueBeyondTolerance { .. }))
                if attempt < MAX_STEP_HALVINGS =>
            {
                log::warn!("lindblad run failed at step {h_step}: {err}; halving");
                attempt += 1;
                h_step /= 2.0;
            }
            Err(err) => return Err(err),
        }
    }
}

fn integrate(
    generator: &LindbladGenerator,
    rho0: &DensityMatrix,
    times: &[f64],
    step: f64,
) -> Result<Trajectory<DensityMatrix>, DynamicsError> {
    let dims = rho0.dims().to_vec();
    let mut rho = rho0.matrix().clone();
    let mut rk = Rk4::new(generator);
    let mut now = 0.0;
    let mut states = Vec::with_capacity(times.len());
    for &t in times {
        let span = t - now;
        if span > 0.0 {
            let n_steps = (span / step).ceil().max(1.0) as usize;
            let h = span / n_steps as f64;
            for _ in 0..n_steps {
                rk.step(&mut rho, h);
            }
            now = t;
        }
        let drift = (rho.trace() - C64::new(1.0, 0.0)).norm();
        if drift.is_nan() || drift > TRACE_DRIFT_TOLERANCE {
            return Err(DynamicsError::TraceDrift { drift, step });
        }
        let sample = if t == 0.0 {
            rho0.clone()
        } else {
            DensityMatrix::new(rho.clone(), dims.clone())?
        };
        let min = sample.min_eigenvalue()?;
        if min < -NEGATIVITY_TOLERANCE {
            return Err(DynamicsError::NegativeEigenvalueBeyondTolerance { min, time: t });
        }
        states.push(sample);
    }
    Ok(Trajectory {
        times: times.to_vec(),
        states,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_hamiltonian, product_state, Level, ProductStateSpec, SystemSpec};
    use crate::oracle::{embed, state_gg1, LinearOracleParams};
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn unitary_t0_is_exact() {
        let spec = SystemSpec::default().with_cutoff(6);
        let h = build_hamiltonian(&spec).unwrap();
        let psi = product_state(&ProductStateSpec::basis(Level::Excited, Level::Ground, 0), 6).unwrap();
        let traj = evolve_unitary(&h, &psi, &[0.0, 10.0]).unwrap();
        assert_eq!(traj.states[0], psi);
        assert!((traj.states[1].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn uncoupled_populations_are_constant() {
        let spec = SystemSpec::default().with_gamma(0.0).with_cutoff(3);
        let h = build_hamiltonian(&spec).unwrap();
        let psi = product_state(&ProductStateSpec::basis(Level::Ground, Level::Excited, 2), 3).unwrap();
        let traj = evolve_unitary(&h, &psi, &[0.0, 1.3, 77.0, 1234.5]).unwrap();
        for s in &traj.states {
            for (a, b) in s.as_slice().iter().zip(psi.as_slice()) {
                assert!((a.norm_sqr() - b.norm_sqr()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn gg1_reaches_bell_state() {
        let cutoff = 8;
        let spec = SystemSpec::default().with_cutoff(cutoff);
        let h = build_hamiltonian(&spec).unwrap();
        let psi = product_state(&ProductStateSpec::basis(Level::Ground, Level::Ground, 1), cutoff).unwrap();
        let p = LinearOracleParams::new(spec.gamma);
        let t = FRAC_PI_2 / p.gamma_tilde;
        let traj = evolve_unitary(&h, &psi, &[t]).unwrap();
        let oracle = embed(&state_gg1(t, &p), cutoff);
        assert!(traj.states[0].fidelity(&oracle) >= 1.0 - 1e-10);
    }

    #[test]
    fn rejects_bad_inputs() {
        let h = ComplexMatrix::identity(4);
        assert!(matches!(
            evolve_unitary(&h, &StateVector::basis(3, 0), &[0.0]),
            Err(DynamicsError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            evolve_unitary(&h, &StateVector::basis(4, 0), &[1.0, 0.5]),
            Err(DynamicsError::InvalidTimes)
        ));
        assert!(LindbladSpec { t_r: 0.0, ..Default::default() }.validate().is_err());
        assert!(LindbladSpec { omega_phys: -1.0, ..Default::default() }.validate().is_err());
        assert!(LindbladSpec::closed().validate().is_ok());
    }

    #[test]
    fn rhs_trivial_cases() {
        let h = ComplexMatrix::from_real_diagonal(&[1.0, -0.5, 2.0]);
        let rho = ComplexMatrix::from_real_diagonal(&[0.2, 0.3, 0.5]);
        assert_eq!(lindblad_rhs(&rho, &h, &[]).unwrap().max_abs(), 0.0);
        assert!(lindblad_rhs(&ComplexMatrix::identity(2), &h, &[]).is_err());
    }

    #[test]
    fn single_qubit_decay_rate() {
        // ρ = |e⟩⟨e|, C = σ⁻/√T: dρ_ee/dt = -(4/T) ρ_ee
        let t_life: f64 = 7.0;
        let c = sigma_minus().scale_real(1.0 / t_life.sqrt());
        let rho = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
        let d = lindblad_rhs(&rho, &ComplexMatrix::zeros(2, 2), &[c]).unwrap();
        assert!((d[(0, 0)].re + 4.0 / t_life).abs() < 1e-14);
        assert!((d[(1, 1)].re - 4.0 / t_life).abs() < 1e-14);
    }

    #[test]
    fn collapse_operator_rates() {
        let spec = LindbladSpec::default();
        let ops = spec.collapse_operators(2);
        assert_eq!(ops.len(), 3);
        let r = spec.dimensionless_rate(spec.t_q1);
        // Σ†Σ on |e g n⟩ = 4 r
        let cdc = ops[1].adjoint().matmul(&ops[1]).unwrap();
        assert!((cdc[(0, 0)].re - 4.0 * r).abs() < 1e-20);
        let std = LindbladSpec { standard_lowering: true, ..spec.clone() }.collapse_operators(2);
        let cdc = std[1].adjoint().matmul(&std[1]).unwrap();
        assert!((cdc[(0, 0)].re - r).abs() < 1e-20);
        assert!(LindbladSpec::closed().collapse_operators(2).is_empty());
    }
}
