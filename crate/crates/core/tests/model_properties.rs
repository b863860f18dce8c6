use proptest::prelude::*;

use qbus_core::model::{
    build_hamiltonian, cosine_potential, excitation_operator, product_state, Nonlinearity, PhotonState,
    ProductStateSpec, QubitState, SystemSpec,
};

fn nonlinearity() -> impl Strategy<Value = Nonlinearity> {
    prop_oneof![
        Just(Nonlinearity::None),
        (-2.0f64..2.0).prop_map(|alpha| Nonlinearity::Quadratic { alpha }),
        (-2.0f64..2.0).prop_map(|alpha| Nonlinearity::Cosine { alpha }),
    ]
}

fn system() -> impl Strategy<Value = SystemSpec> {
    (0.1f64..3.0, 0.1f64..3.0, 0.1f64..3.0, 0.0f64..0.5, nonlinearity(), 1usize..25).prop_map(
        |(omega1, omega2, omega_r, gamma, nonlinearity, fock_cutoff)| SystemSpec {
            omega1,
            omega2,
            omega_r,
            gamma,
            nonlinearity,
            fock_cutoff,
        },
    )
}

fn amplitudes<const N: usize>() -> impl Strategy<Value = Vec<[f64; 2]>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), N).prop_filter_map("nonzero", |v| {
        let norm = v.iter().map(|(a, b)| a * a + b * b).sum::<f64>().sqrt();
        (norm > 1e-3).then(|| v.iter().map(|(a, b)| [a / norm, b / norm]).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hamiltonian_is_hermitian(spec in system()) {
        let h = build_hamiltonian(&spec).unwrap();
        prop_assert_eq!(h.rows(), spec.dim());
        prop_assert!(h.hermitian_deviation() <= 1e-12);
    }

    #[test]
    fn linear_hamiltonian_conserves_excitations(spec in system()) {
        let spec = spec.with_nonlinearity(Nonlinearity::None);
        let h = build_hamiltonian(&spec).unwrap();
        let n = excitation_operator(spec.fock_cutoff);
        prop_assert!(h.commutator(&n).unwrap().max_abs() <= 1e-10);
    }

    #[test]
    fn cosine_couples_even_distances_only(cutoff in 1usize..45, alpha in -2.0f64..2.0) {
        let c = cosine_potential(cutoff, alpha).unwrap();
        for m in 0..=cutoff {
            for n in 0..=cutoff {
                if (m + n) % 2 == 1 {
                    prop_assert!(c[(m, n)].norm() <= 1e-10);
                }
            }
        }
    }

    #[test]
    fn product_states_are_normalized(
        q1 in amplitudes::<2>(),
        q2 in amplitudes::<2>(),
        r in amplitudes::<5>(),
        cutoff in 4usize..12,
    ) {
        let spec = ProductStateSpec {
            q1: QubitState::Amplitudes([q1[0], q1[1]]),
            q2: QubitState::Amplitudes([q2[0], q2[1]]),
            photons: PhotonState::Amplitudes(r),
        };
        let psi = product_state(&spec, cutoff).unwrap();
        prop_assert_eq!(psi.len(), 4 * (cutoff + 1));
        prop_assert!((psi.norm() - 1.0).abs() <= 1e-14);
    }
}

#[test]
fn cosine_elements_converge_in_cutoff() {
    for alpha in [0.0035, 0.7, 2.0] {
        let c40 = cosine_potential(40, alpha).unwrap();
        let c60 = cosine_potential(60, alpha).unwrap();
        for m in 0..=10 {
            for n in 0..=10 {
                assert!((c40[(m, n)] - c60[(m, n)]).norm() < 1e-8, "alpha {alpha}, ({m}, {n})");
            }
        }
    }
}
