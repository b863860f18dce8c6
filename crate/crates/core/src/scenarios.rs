//! Named experiments: configuration, presets, execution and α sweeps.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dynamics::{evolve_lindblad, DynamicsError, LindbladSpec, Propagator, DEFAULT_LINDBLAD_STEP};
use crate::entanglement::{
    concurrence, leakage, leakage_pure, negativity, negativity_pure_qq_vs_r, partial_trace, partial_trace_pure,
    Bipartition, DensityMatrix, EntanglementError,
};
use crate::linalg::LinalgError;
use crate::model::{build_hamiltonian, product_state, ModelError, Nonlinearity, ProductStateSpec, SystemSpec};

/// Default spacing of time samples, in `ωt`.
pub const DEFAULT_SAMPLE_SPACING: f64 = 0.5;
/// Number of highest Fock levels counted as leakage.
pub const LEAKAGE_TOP_K: usize = 5;
/// Leakage above which a unitary run is repeated at a larger cutoff.
pub const LEAKAGE_LIMIT: f64 = 1e-6;
const LEAKAGE_CUTOFF_INCREMENT: usize = 20;
const LEAKAGE_CUTOFF_MAX: usize = 120;
/// Largest Fock cutoff accepted from a configuration.
pub const MAX_FOCK_CUTOFF: usize = 200;
/// Largest sample count accepted from a configuration.
pub const MAX_SAMPLE_COUNT: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScenarioError {
    #[error("config parse error: {0}")]
    Parse(String),
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
    #[error(transparent)]
    Entanglement(#[from] EntanglementError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl ScenarioError {
    pub fn code(&self) -> &'static str {
        match self {
            ScenarioError::Parse(_) => "config-parse",
            ScenarioError::InvalidConfig(_) => "invalid-config",
            ScenarioError::UnknownPreset(_) => "unknown-preset",
            ScenarioError::Model(ModelError::PhotonOverflow { .. }) => "photon-overflow",
            ScenarioError::Model(ModelError::NotNormalized { .. }) => "not-normalized",
            ScenarioError::Model(ModelError::InvalidSpec(_)) => "invalid-system",
            ScenarioError::Model(ModelError::Linalg(e)) | ScenarioError::Linalg(e) => crate::error::linalg_code(e),
            ScenarioError::Dynamics(e) => crate::error::dynamics_code(e),
            ScenarioError::Entanglement(EntanglementError::Linalg(e)) => crate::error::linalg_code(e),
            ScenarioError::Entanglement(_) => "dimension-mismatch",
        }
    }

    /// Configuration problems exit with 1, numerical failures with 2.
    pub fn is_config_error(&self) -> bool {
        matches!(
            self.code(),
            "config-parse" | "invalid-config" | "unknown-preset" | "photon-overflow" | "not-normalized" | "invalid-system"
        )
    }
}

/// One experiment: a system, an initial product state and a time window.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    pub system: SystemSpec,
    pub initial: ProductStateSpec,
    pub time_max: f64,
    pub sample_count: usize,
    /// Amplitudes to sweep; each replaces the amplitude of
    /// `system.nonlinearity` (a `none` kind becomes cosine).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_grid: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lindblad: Option<LindbladSpec>,
    /// Times at which the two-qubit density matrix is recorded.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub snapshots: Option<Vec<f64>>,
    /// RK4 step for damped runs; defaults to 0.05.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lindblad_step: Option<f64>,
}

fn invalid(msg: impl Into<String>) -> ScenarioError {
    ScenarioError::InvalidConfig(msg.into())
}

impl ScenarioConfig {
    pub fn from_json_str(s: &str) -> Result<Self, ScenarioError> {
        let cfg: Self = serde_json::from_str(s).map_err(|e| ScenarioError::Parse(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<(), ScenarioError> {
        let name_ok = !self.name.is_empty()
            && self.name.len() <= 128
            && !self.name.starts_with('.')
            && self.name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-' || b == b'.');
        if !name_ok {
            return Err(invalid(format!(
                "name {:?} must be 1-128 chars of [A-Za-z0-9_.-], not starting with '.'",
                self.name
            )));
        }
        self.system.validate()?;
        if self.system.fock_cutoff > MAX_FOCK_CUTOFF {
            return Err(invalid(format!("fock_cutoff {} exceeds {MAX_FOCK_CUTOFF}", self.system.fock_cutoff)));
        }
        if !(self.time_max.is_finite() && self.time_max > 0.0) {
            return Err(invalid(format!("time_max = {} must be positive", self.time_max)));
        }
        if self.sample_count < 2 || self.sample_count > MAX_SAMPLE_COUNT {
            return Err(invalid(format!(
                "sample_count = {} must lie in [2, {MAX_SAMPLE_COUNT}]",
                self.sample_count
            )));
        }
        if let Some(grid) = &self.alpha_grid {
            if grid.is_empty() || grid.iter().any(|a| !a.is_finite()) {
                return Err(invalid("alpha_grid must be a nonempty list of finite values"));
            }
        }
        if let Some(snaps) = &self.snapshots {
            if snaps.iter().any(|t| !(t.is_finite() && *t >= 0.0 && *t <= self.time_max)) {
                return Err(invalid("snapshot times must lie in [0, time_max]"));
            }
        }
        if let Some(l) = &self.lindblad {
            l.validate()?;
        }
        if let Some(step) = self.lindblad_step {
            if !(step.is_finite() && step > 0.0) {
                return Err(invalid(format!("lindblad_step = {step} must be positive")));
            }
        }
        Ok(())
    }

    /// `sample_count` evenly spaced times from 0 to `time_max`.
    pub fn sample_times(&self) -> Vec<f64> {
        let n = self.sample_count;
        (0..n)
            .map(|k| if k + 1 == n { self.time_max } else { self.time_max * k as f64 / (n - 1) as f64 })
            .collect()
    }

    /// The nonlinearities to run, in grid order.
    pub fn nonlinearities(&self) -> Vec<Nonlinearity> {
        match &self.alpha_grid {
            Some(grid) => grid.iter().map(|&a| self.system.nonlinearity.with_alpha(a)).collect(),
            None => vec![self.system.nonlinearity],
        }
    }
}

/// Observables at one time sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub omega_t: f64,
    pub n_qq: f64,
    pub n_qq_r: f64,
    pub concurrence: f64,
    pub purity_qq: f64,
    pub leakage: f64,
}

/// Two-qubit density matrix at a requested time, basis `(ee, eg, ge, gg)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub omega_t: f64,
    pub alpha: f64,
    pub rho_qq: DensityMatrix,
    pub negativity: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub max_n_qq: f64,
    pub argmax_omega_t: f64,
}

/// Output of one (system, α) evolution.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub alpha: f64,
    pub nonlinearity: Nonlinearity,
    /// Cutoff actually used (may exceed the configured one after a leakage retry).
    pub fock_cutoff: usize,
    pub records: Vec<Record>,
    pub snapshots: Vec<Snapshot>,
    pub summary: Summary,
    /// Present for damped runs only.
    pub damping: Option<DampingDiagnostics>,
}

/// Worst trace drift and smallest eigenvalue of ρ over the damped samples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DampingDiagnostics {
    pub max_trace_drift: f64,
    pub min_eigenvalue: f64,
}

impl RunResult {
    pub fn max_leakage(&self) -> f64 {
        self.records.iter().map(|r| r.leakage).fold(0.0, f64::max)
    }

    /// Largest `N_QQ` over samples with `omega_t` in `[from, to]`.
    pub fn max_n_qq_in(&self, from: f64, to: f64) -> Option<Record> {
        self.records
            .iter()
            .filter(|r| r.omega_t >= from && r.omega_t <= to)
            .copied()
            .fold(None, |best: Option<Record>, r| match best {
                Some(b) if b.n_qq >= r.n_qq => Some(b),
                _ => Some(r),
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioResult {
    pub name: String,
    pub runs: Vec<RunResult>,
}

fn summarize(records: &[Record]) -> Summary {
    let best = records
        .iter()
        .fold(None, |best: Option<&Record>, r| match best {
            Some(b) if b.n_qq >= r.n_qq => Some(b),
            _ => Some(r),
        })
        .expect("at least two samples");
    Summary {
        max_n_qq: best.n_qq,
        argmax_omega_t: best.omega_t,
    }
}

fn qq_observables(rho_qq: &DensityMatrix) -> Result<(f64, f64, f64), ScenarioError> {
    let n_qq = negativity(rho_qq, Bipartition::Qq)?.value;
    Ok((n_qq, concurrence(rho_qq)?, rho_qq.purity()))
}

fn run_unitary_once(
    cfg: &ScenarioConfig,
    system: &SystemSpec,
    times: &[f64],
) -> Result<RunResult, ScenarioError> {
    let cutoff = system.fock_cutoff;
    let dims = [2, 2, cutoff + 1];
    let h = build_hamiltonian(system)?;
    let psi0 = product_state(&cfg.initial, cutoff)?;
    let prop = Propagator::new(&h)?;
    let evo = prop.start(&psi0)?;
    let alpha = system.nonlinearity.alpha();

    let mut records = Vec::with_capacity(times.len());
    for &t in times {
        let psi = evo.state_at(t);
        let rho_qq = partial_trace_pure(&psi, &dims, &[0, 1])?;
        let (n_qq, conc, purity_qq) = qq_observables(&rho_qq)?;
        records.push(Record {
            omega_t: t,
            n_qq,
            n_qq_r: negativity_pure_qq_vs_r(&psi, cutoff)?.value,
            concurrence: conc,
            purity_qq,
            leakage: leakage_pure(&psi, cutoff, LEAKAGE_TOP_K),
        });
    }
    let snapshots = cfg
        .snapshots
        .iter()
        .flatten()
        .map(|&t| {
            let rho_qq = partial_trace_pure(&evo.state_at(t), &dims, &[0, 1])?;
            Ok(Snapshot {
                omega_t: t,
                alpha,
                negativity: negativity(&rho_qq, Bipartition::Qq)?.value,
                rho_qq,
            })
        })
        .collect::<Result<Vec<_>, ScenarioError>>()?;
    Ok(RunResult {
        alpha,
        nonlinearity: system.nonlinearity,
        fock_cutoff: cutoff,
        summary: summarize(&records),
        records,
        snapshots,
        damping: None,
    })
}

fn run_unitary(cfg: &ScenarioConfig, system: SystemSpec, times: &[f64]) -> Result<RunResult, ScenarioError> {
    let mut system = system;
    loop {
        let run = run_unitary_once(cfg, &system, times)?;
        let leak = run.max_leakage();
        if leak <= LEAKAGE_LIMIT || system.fock_cutoff + LEAKAGE_CUTOFF_INCREMENT > LEAKAGE_CUTOFF_MAX {
            if leak > LEAKAGE_LIMIT {
                log::warn!(
                    "{}: leakage {leak:e} still above {LEAKAGE_LIMIT:e} at cutoff {}",
                    cfg.name,
                    system.fock_cutoff
                );
            }
            return Ok(run);
        }
        log::warn!(
            "{}: truncation leakage {leak:e} at cutoff {}; re-running at {}",
            cfg.name,
            system.fock_cutoff,
            system.fock_cutoff + LEAKAGE_CUTOFF_INCREMENT
        );
        system.fock_cutoff += LEAKAGE_CUTOFF_INCREMENT;
    }
}

fn run_damped(
    cfg: &ScenarioConfig,
    system: &SystemSpec,
    lindblad: &LindbladSpec,
    times: &[f64],
) -> Result<RunResult, ScenarioError> {
    let cutoff = system.fock_cutoff;
    let dims = vec![2, 2, cutoff + 1];
    let h = build_hamiltonian(system)?;
    let psi0 = product_state(&cfg.initial, cutoff)?;
    let rho0 = DensityMatrix::from_pure(&psi0, dims)?;
    let alpha = system.nonlinearity.alpha();

    let snaps: Vec<f64> = cfg.snapshots.clone().unwrap_or_default();
    let mut all_times: Vec<f64> = times.iter().chain(&snaps).copied().collect();
    all_times.sort_by(f64::total_cmp);
    all_times.dedup();
    let step = cfg.lindblad_step.unwrap_or(DEFAULT_LINDBLAD_STEP);
    let traj = evolve_lindblad(&h, &rho0, lindblad, &all_times, step)?;
    let at = |t: f64| {
        let k = all_times.partition_point(|&x| x < t);
        &traj.states[k]
    };

    let mut diag = DampingDiagnostics {
        max_trace_drift: 0.0,
        min_eigenvalue: f64::INFINITY,
    };
    for rho in &traj.states {
        diag.max_trace_drift = diag.max_trace_drift.max((rho.trace() - 1.0).norm());
        diag.min_eigenvalue = diag.min_eigenvalue.min(rho.min_eigenvalue()?);
    }

    let mut records = Vec::with_capacity(times.len());
    for &t in times {
        let rho = at(t);
        let rho_qq = partial_trace(rho, &[0, 1])?;
        let (n_qq, conc, purity_qq) = qq_observables(&rho_qq)?;
        records.push(Record {
            omega_t: t,
            n_qq,
            n_qq_r: negativity(rho, Bipartition::QqVsR)?.value,
            concurrence: conc,
            purity_qq,
            leakage: leakage(rho, cutoff, LEAKAGE_TOP_K),
        });
    }
    let snapshots = snaps
        .iter()
        .map(|&t| {
            let rho_qq = partial_trace(at(t), &[0, 1])?;
            Ok(Snapshot {
                omega_t: t,
                alpha,
                negativity: negativity(&rho_qq, Bipartition::Qq)?.value,
                rho_qq,
            })
        })
        .collect::<Result<Vec<_>, ScenarioError>>()?;
    let run = RunResult {
        alpha,
        nonlinearity: system.nonlinearity,
        fock_cutoff: cutoff,
        summary: summarize(&records),
        records,
        snapshots,
        damping: Some(diag),
    };
    if run.max_leakage() > LEAKAGE_LIMIT {
        log::warn!("{}: damped run leakage {:e} at cutoff {cutoff}", cfg.name, run.max_leakage());
    }
    Ok(run)
}

fn run_one(cfg: &ScenarioConfig, nonlinearity: Nonlinearity) -> Result<RunResult, ScenarioError> {
    let system = cfg.system.clone().with_nonlinearity(nonlinearity);
    let times = cfg.sample_times();
    match &cfg.lindblad {
        Some(l) => run_damped(cfg, &system, l, &times),
        None => run_unitary(cfg, system, &times),
    }
}

/// Locates the maximum of `N_QQ` for a unitary run to within `tol` in `ωt`.
///
/// The sampled maximum over `[from, to]` seeds a golden-section search on
/// the continuous trajectory, bracketed by the neighbouring samples.
pub fn refine_peak(
    cfg: &ScenarioConfig,
    run: &RunResult,
    from: f64,
    to: f64,
    tol: f64,
) -> Result<Record, ScenarioError> {
    if cfg.lindblad.is_some() {
        return Err(invalid("peak refinement needs a unitary run"));
    }
    let best = run.max_n_qq_in(from, to).ok_or_else(|| invalid("no samples in window"))?;
    let system = cfg.system.clone().with_nonlinearity(run.nonlinearity).with_cutoff(run.fock_cutoff);
    let cutoff = system.fock_cutoff;
    let dims = [2, 2, cutoff + 1];
    let prop = Propagator::new(&build_hamiltonian(&system)?)?;
    let evo = prop.start(&product_state(&cfg.initial, cutoff)?)?;
    let record = |t: f64| -> Result<Record, ScenarioError> {
        let psi = evo.state_at(t);
        let rho_qq = partial_trace_pure(&psi, &dims, &[0, 1])?;
        let (n_qq, conc, purity_qq) = qq_observables(&rho_qq)?;
        Ok(Record {
            omega_t: t,
            n_qq,
            n_qq_r: negativity_pure_qq_vs_r(&psi, cutoff)?.value,
            concurrence: conc,
            purity_qq,
            leakage: leakage_pure(&psi, cutoff, LEAKAGE_TOP_K),
        })
    };
    let spacing = cfg.time_max / (cfg.sample_count - 1) as f64;
    let (mut a, mut b) = ((best.omega_t - spacing).max(from), (best.omega_t + spacing).min(to));
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let mut fc = record(c)?.n_qq;
    let mut fd = record(d)?.n_qq;
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = record(c)?.n_qq;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = record(d)?.n_qq;
        }
    }
    let refined = record(0.5 * (a + b))?;
    Ok(if refined.n_qq >= best.n_qq { refined } else { best })
}

/// Runs every grid point of `cfg` (in parallel) and collects results in
/// grid order.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<ScenarioResult, ScenarioError> {
    cfg.validate()?;
    let runs = cfg
        .nonlinearities()
        .into_par_iter()
        .map(|nl| run_one(cfg, nl))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ScenarioResult {
        name: cfg.name.clone(),
        runs,
    })
}

/// One independent run of `base` per α, in grid order.
pub fn sweep(base: &ScenarioConfig, alpha_grid: &[f64]) -> Result<Vec<RunResult>, ScenarioError> {
    if alpha_grid.is_empty() {
        return Err(invalid("alpha grid is empty"));
    }
    let cfg = ScenarioConfig {
        alpha_grid: Some(alpha_grid.to_vec()),
        ..base.clone()
    };
    Ok(run_scenario(&cfg)?.runs)
}

/// Options affecting preset construction.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PresetOptions {
    /// Use the 25000 ωt horizon for fig3.
    pub long: bool,
}

/// Catalog entry for `list`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PresetInfo {
    pub name: &'static str,
    pub description: &'static str,
}

pub const PRESETS: &[PresetInfo] = &[
    PresetInfo { name: "fig1", description: "linear resonator, |eg0> and |gg1>, QQ and QQ-R negativity; Ω=ω, γ=0.01ω, ωt ≤ 300" },
    PresetInfo { name: "fig2", description: "|eg0>, α ∈ {0, 0.001, 0.002, 0.0035, 0.005}; Ω=ω, γ=0.01ω, ωt ≤ 1000" },
    PresetInfo { name: "fig3", description: "|eg0>, strong nonlinearity α ∈ {0.5, 1, 2}; Ω=ω, γ=0.01ω, ωt ≤ 3000 (25000 with --long)" },
    PresetInfo { name: "fig4", description: "|gg1>, α ∈ {0, 0.001, 0.002, 0.0035, 0.005}; Ω=ω, γ=0.01ω, ωt ≤ 1000" },
    PresetInfo { name: "fig5", description: "|eg1>, α ∈ {0, 0.0035, 0.01, 0.1, 0.7}; Ω=ω, γ=0.01ω, ωt ≤ 2000" },
    PresetInfo { name: "fig6", description: "|eg2>, α ∈ {0, 0.0035, 0.01, 0.1, 0.7}; Ω=ω, γ=0.01ω, ωt ≤ 2000" },
    PresetInfo { name: "fig7", description: "|eg0>, linear resonator, ρ_QQ snapshot at ωt=111; Ω=ω, γ=0.01ω" },
    PresetInfo { name: "fig8", description: "|eg0>, α=0.0035, ρ_QQ snapshot (real part) at ωt=435; Ω=ω, γ=0.01ω" },
    PresetInfo { name: "fig9", description: "|eg0>, α=0.0035, ρ_QQ snapshot (imaginary part) at ωt=435; Ω=ω, γ=0.01ω" },
    PresetInfo { name: "fig10", description: "|eg0>, α=0.0035, damping T_R=5e-5 s, T_Q=1e-5 s, ω=2π·5 GHz; M=10, ωt ≤ 2000" },
    PresetInfo { name: "ee0", description: "|ee0>, α ∈ {0, 0.0035, 0.7}; Ω=ω, γ=0.01ω, ωt ≤ 2000" },
    PresetInfo { name: "gg2", description: "|gg2>, linear resonator; Ω=ω, γ=0.01ω, ωt ≤ 2000" },
];

const WEAK_GRID: [f64; 5] = [0.0, 0.001, 0.002, 0.0035, 0.005];
const MULTI_GRID: [f64; 5] = [0.0, 0.0035, 0.01, 0.1, 0.7];

fn samples_for(time_max: f64) -> usize {
    (time_max / DEFAULT_SAMPLE_SPACING).round() as usize + 1
}

fn config(name: &str, label: &str, time_max: f64, nonlinearity: Nonlinearity) -> ScenarioConfig {
    ScenarioConfig {
        name: name.to_string(),
        system: SystemSpec::default().with_nonlinearity(nonlinearity),
        initial: ProductStateSpec::from_label(label).expect("preset label"),
        time_max,
        sample_count: samples_for(time_max),
        alpha_grid: None,
        lindblad: None,
        snapshots: None,
        lindblad_step: None,
    }
}

fn cosine(alpha: f64) -> Nonlinearity {
    Nonlinearity::Cosine { alpha }
}

/// Built-in experiment(s) for a preset name.
pub fn preset(name: &str) -> Result<Vec<ScenarioConfig>, ScenarioError> {
    preset_with(name, PresetOptions::default())
}

pub fn preset_with(name: &str, opts: PresetOptions) -> Result<Vec<ScenarioConfig>, ScenarioError> {
    let with_grid = |mut c: ScenarioConfig, grid: &[f64]| {
        c.alpha_grid = Some(grid.to_vec());
        c
    };
    let with_snapshot = |mut c: ScenarioConfig, t: f64| {
        c.snapshots = Some(vec![t]);
        c
    };
    let none = Nonlinearity::None;
    let cfgs = match name {
        "fig1" => vec![
            config("fig1_eg0", "eg0", 300.0, none),
            config("fig1_gg1", "gg1", 300.0, none),
        ],
        "fig2" => vec![with_grid(config("fig2", "eg0", 1000.0, cosine(0.0)), &WEAK_GRID)],
        "fig3" => {
            let horizon = if opts.long { 25000.0 } else { 3000.0 };
            vec![with_grid(config("fig3", "eg0", horizon, cosine(0.0)), &[0.5, 1.0, 2.0])]
        }
        "fig4" => vec![with_grid(config("fig4", "gg1", 1000.0, cosine(0.0)), &WEAK_GRID)],
        "fig5" => vec![with_grid(config("fig5", "eg1", 2000.0, cosine(0.0)), &MULTI_GRID)],
        "fig6" => vec![with_grid(config("fig6", "eg2", 2000.0, cosine(0.0)), &MULTI_GRID)],
        "fig7" => vec![with_snapshot(config("fig7", "eg0", 300.0, none), 111.0)],
        "fig8" => vec![with_snapshot(config("fig8", "eg0", 1000.0, cosine(0.0035)), 435.0)],
        "fig9" => vec![with_snapshot(config("fig9", "eg0", 1000.0, cosine(0.0035)), 435.0)],
        "fig10" => {
            let mut c = config("fig10", "eg0", 2000.0, cosine(0.0035));
            c.system.fock_cutoff = 10;
            c.lindblad = Some(LindbladSpec::default());
            vec![c]
        }
        "ee0" => vec![with_grid(config("ee0", "ee0", 2000.0, cosine(0.0)), &[0.0, 0.0035, 0.7])],
        "gg2" => vec![config("gg2", "gg2", 2000.0, none)],
        other => return Err(ScenarioError::UnknownPreset(other.to_string())),
    };
    Ok(cfgs)
}

/// Validates a preset name without building it.
pub fn parse_preset_name(name: &str) -> Result<&'static str, ScenarioError> {
    PRESETS
        .iter()
        .find(|p| p.name == name)
        .map(|p| p.name)
        .ok_or_else(|| ScenarioError::UnknownPreset(name.to_string()))
}

/// Ket label of a config's initial state, or `"custom"`.
pub fn initial_label(cfg: &ScenarioConfig) -> String {
    cfg.initial.label().unwrap_or_else(|| "custom".into())
}
