use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qbus_core::dynamics::Propagator;
use qbus_core::entanglement::{negativity, partial_trace_pure, Bipartition};
use qbus_core::model::{build_hamiltonian, product_state, ProductStateSpec, SystemSpec};
use qbus_core::oracle::{negativity_eg0, negativity_gg1, LinearOracleParams};
use qbus_core::scenarios::ScenarioError;

type ClosedForm = fn(f64, &LinearOracleParams) -> f64;

pub const ORACLE_TOLERANCE: f64 = 1e-8;
const ORACLE_HORIZON: f64 = 500.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport {
    pub samples: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.max_deviation <= self.tolerance
    }
}

/// Propagates `|eg0⟩` and `|gg1⟩` in the linear model (γ = 0.01, M = 40)
/// and compares `N_QQ` with the closed forms at `samples` random times in
/// `[0, 500]`.
pub fn oracle_check(samples: usize, seed: u64) -> Result<OracleReport, ScenarioError> {
    let spec = SystemSpec::default();
    let cutoff = spec.fock_cutoff;
    let params = LinearOracleParams::new(spec.gamma);
    let prop = Propagator::new(&build_hamiltonian(&spec)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let times: Vec<f64> = (0..samples).map(|_| rng.gen_range(0.0..ORACLE_HORIZON)).collect();
    let mut worst: f64 = 0.0;
    let closed_forms: [(&str, ClosedForm); 2] = [("eg0", negativity_eg0), ("gg1", negativity_gg1)];
    for (label, closed) in closed_forms {
        let psi0 = product_state(&ProductStateSpec::from_label(label).expect("label"), cutoff)?;
        let evo = prop.start(&psi0)?;
        for &t in &times {
            let rho = partial_trace_pure(&evo.state_at(t), &[2, 2, cutoff + 1], &[0, 1])?;
            let n = negativity(&rho, Bipartition::Qq)?.value;
            worst = worst.max((n - closed(t, &params)).abs());
        }
    }
    Ok(OracleReport {
        samples: 2 * samples,
        max_deviation: worst,
        tolerance: ORACLE_TOLERANCE,
    })
}
