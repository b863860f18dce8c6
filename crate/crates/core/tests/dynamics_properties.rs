use proptest::prelude::*;

use qbus_core::dynamics::{evolve_lindblad, lindblad_rhs, LindbladSpec, Propagator, DEFAULT_LINDBLAD_STEP};
use qbus_core::entanglement::{negativity, partial_trace, partial_trace_pure, Bipartition, DensityMatrix};
use qbus_core::linalg::{ComplexMatrix, StateVector, C64};
use qbus_core::model::{build_hamiltonian, product_state, Nonlinearity, ProductStateSpec, SystemSpec};

fn hermitian(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(-1.0f64..1.0, 2 * n * n).prop_map(move |v| {
        ComplexMatrix::from_fn(n, n, |i, j| C64::new(v[2 * (i * n + j)], v[2 * (i * n + j) + 1])).hermitian_part()
    })
}

fn unit_vector(n: usize) -> impl Strategy<Value = StateVector> {
    prop::collection::vec(-1.0f64..1.0, 2 * n)
        .prop_filter_map("nonzero", |v| {
            StateVector::new(v.chunks(2).map(|c| C64::new(c[0], c[1])).collect()).normalized()
        })
}

fn system_and_state() -> impl Strategy<Value = (ComplexMatrix, StateVector)> {
    (1usize..=32).prop_flat_map(|n| (hermitian(n), unit_vector(n)))
}

/// Lifetimes chosen so that dimensionless rates are of order 1e-2.
fn fast_damping() -> LindbladSpec {
    LindbladSpec {
        t_r: 1.0 / 0.02,
        t_q1: 1.0 / 0.01,
        t_q2: 1.0 / 0.015,
        omega_phys: 1.0,
        standard_lowering: false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn unitary_preserves_norm_and_composes((h, psi0) in system_and_state(), t1 in 0.0f64..50.0, t2 in 0.0f64..50.0) {
        let prop = Propagator::new(&h).unwrap();
        let evo = prop.start(&psi0).unwrap();
        let psi1 = evo.state_at(t1);
        let psi12 = evo.state_at(t1 + t2);
        prop_assert!((psi1.norm() - 1.0).abs() <= 1e-10);
        prop_assert!((psi12.norm() - 1.0).abs() <= 1e-10);
        let stepped = prop.start(&psi1).unwrap().state_at(t2);
        prop_assert!(stepped.max_abs_diff(&psi12) <= 1e-9);
    }

    #[test]
    fn lindblad_rhs_is_traceless_and_hermitian(h in hermitian(6), r in hermitian(6), c in hermitian(6)) {
        let out = lindblad_rhs(&r, &h, &[c.clone(), c.adjoint().scale_real(0.3)]).unwrap();
        let scale = r.max_abs().max(1.0) * (1.0 + c.max_abs()).powi(2) * (1.0 + h.max_abs());
        prop_assert!(out.trace().norm() <= 1e-12 * scale * 36.0);
        prop_assert!(out.hermitian_deviation() <= 1e-12 * scale * 36.0);
    }

    #[test]
    fn damping_only_purity_does_not_increase_from_pure_states(
        q1 in unit_vector(2),
        q2 in unit_vector(2),
        r in unit_vector(3),
    ) {
        // Purity decreases from a pure start only while every decaying
        // population stays above half its initial value; the horizon keeps
        // the largest rate times t below ln 2 with margin.
        let cutoff = 2;
        let psi = q1.kron(&q2).kron(&r);
        let rho0 = DensityMatrix::from_pure(&psi, vec![2, 2, cutoff + 1]).unwrap();
        let h = ComplexMatrix::zeros(psi.len(), psi.len());
        let times: Vec<f64> = (0..=40).map(|k| k as f64 * 0.25).collect();
        let traj = evolve_lindblad(&h, &rho0, &fast_damping(), &times, DEFAULT_LINDBLAD_STEP).unwrap();
        for pair in traj.states.windows(2) {
            prop_assert!(pair[1].purity() <= pair[0].purity() + 1e-9);
        }
    }
}

#[test]
fn damping_can_raise_purity_of_mixed_states() {
    // Counterexample to unrestricted monotonicity: decay drives I/d toward
    // the ground state.
    let rho0 = DensityMatrix::maximally_mixed(vec![2, 2, 2]);
    let h = ComplexMatrix::zeros(8, 8);
    let traj = evolve_lindblad(&h, &rho0, &fast_damping(), &[0.0, 10.0], DEFAULT_LINDBLAD_STEP).unwrap();
    assert!(traj.states[1].purity() > traj.states[0].purity() + 1e-3);
}

fn small_system(alpha: f64) -> (ComplexMatrix, StateVector, usize) {
    let cutoff = 6;
    let spec = SystemSpec::default()
        .with_cutoff(cutoff)
        .with_nonlinearity(Nonlinearity::Cosine { alpha });
    let h = build_hamiltonian(&spec).unwrap();
    let psi = product_state(&ProductStateSpec::from_label("eg0").unwrap(), cutoff).unwrap();
    (h, psi, cutoff)
}

#[test]
fn closed_lindblad_matches_unitary_negativity() {
    let (h, psi, cutoff) = small_system(0.05);
    let dims = vec![2, 2, cutoff + 1];
    let times: Vec<f64> = (0..=40).map(|k| k as f64 * 5.0).collect();
    let rho0 = DensityMatrix::from_pure(&psi, dims.clone()).unwrap();
    let traj = evolve_lindblad(&h, &rho0, &LindbladSpec::closed(), &times, DEFAULT_LINDBLAD_STEP).unwrap();
    let prop = Propagator::new(&h).unwrap();
    let evo = prop.start(&psi).unwrap();
    for (t, rho) in traj.iter() {
        let mixed = negativity(&partial_trace(rho, &[0, 1]).unwrap(), Bipartition::Qq).unwrap().value;
        let pure = negativity(&partial_trace_pure(&evo.state_at(t), &dims, &[0, 1]).unwrap(), Bipartition::Qq)
            .unwrap()
            .value;
        assert!((mixed - pure).abs() <= 1e-7, "t = {t}: {mixed} vs {pure}");
    }
}

#[test]
fn step_halving_converges_at_fourth_order() {
    let (h, psi, cutoff) = small_system(0.0035);
    let rho0 = DensityMatrix::from_pure(&psi, vec![2, 2, cutoff + 1]).unwrap();
    let spec = fast_damping();
    let times = [0.0, 40.0];
    let run = |step: f64| evolve_lindblad(&h, &rho0, &spec, &times, step).unwrap().states[1].clone();
    let coarse = run(DEFAULT_LINDBLAD_STEP);
    let half = run(DEFAULT_LINDBLAD_STEP / 2.0);
    let quarter = run(DEFAULT_LINDBLAD_STEP / 4.0);
    let e1 = coarse.matrix().max_abs_diff(half.matrix());
    let e2 = half.matrix().max_abs_diff(quarter.matrix());
    assert!(e1 <= 1e-7, "halving changed entries by {e1:e}");
    let ratio = e1 / e2;
    assert!((10.0..=24.0).contains(&ratio), "error ratio {ratio}");
}

#[test]
fn trajectory_reductions_keep_unit_trace() {
    let (h, psi, cutoff) = small_system(0.7);
    let dims = [2, 2, cutoff + 1];
    let prop = Propagator::new(&h).unwrap();
    let evo = prop.start(&psi).unwrap();
    for k in 0..200 {
        let rho = partial_trace_pure(&evo.state_at(k as f64 * 7.3), &dims, &[0, 1]).unwrap();
        assert!((rho.trace() - 1.0).norm() <= 1e-10);
    }
}
