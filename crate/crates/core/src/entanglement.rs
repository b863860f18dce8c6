//! Reduced states and entanglement measures.
//!
//! Composite states carry their subsystem dimensions; the full system is
//! `[2, 2, M+1]` and the two-qubit reduction is `[2, 2]`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{func_hermitian, hermitian_eig, kron, ComplexMatrix, LinalgError, StateVector, C64};

/// Eigenvalues of the partial transpose smaller than this in magnitude are
/// counted as zero.
pub const EIGENVALUE_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EntanglementError {
    #[error("state of dimension {dim} does not match subsystem dimensions {dims:?}")]
    DimensionMismatch { dim: usize, dims: Vec<usize> },
    #[error("subsystem {index} out of range for {count} subsystems")]
    InvalidSubsystem { index: usize, count: usize },
    #[error("bipartition {0} is not defined for subsystem dimensions {1:?}")]
    UnsupportedBipartition(Bipartition, Vec<usize>),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Density matrix over a composite space.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    dims: Vec<usize>,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix, dims: Vec<usize>) -> Result<Self, EntanglementError> {
        let total: usize = dims.iter().product();
        if !matrix.is_square() || matrix.rows() != total {
            return Err(EntanglementError::DimensionMismatch {
                dim: matrix.rows(),
                dims,
            });
        }
        Ok(Self { matrix, dims })
    }

    /// `|ψ⟩⟨ψ|`
    pub fn from_pure(psi: &StateVector, dims: Vec<usize>) -> Result<Self, EntanglementError> {
        Self::new(psi.projector(), dims)
    }

    /// `I / d`
    pub fn maximally_mixed(dims: Vec<usize>) -> Self {
        let d: usize = dims.iter().product();
        Self {
            matrix: ComplexMatrix::identity(d).scale_real(1.0 / d as f64),
            dims,
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn trace(&self) -> C64 {
        self.matrix.trace()
    }

    /// `tr ρ²`
    pub fn purity(&self) -> f64 {
        purity(&self.matrix)
    }

    pub fn min_eigenvalue(&self) -> Result<f64, LinalgError> {
        Ok(hermitian_eig(&self.matrix)?.eigenvalues.first().copied().unwrap_or(0.0))
    }

    /// Conjugates by `u`: `U ρ U†`.
    pub fn transformed(&self, u: &ComplexMatrix) -> Result<Self, EntanglementError> {
        let out = u.matmul(&self.matrix)?.matmul(&u.adjoint())?;
        Self::new(out, self.dims.clone())
    }
}

/// Which cut the negativity is evaluated across.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Bipartition {
    /// Qubit 1 | qubit 2, on the reduced two-qubit state.
    #[serde(rename = "QQ")]
    Qq,
    /// Both qubits | resonator, on the full state.
    #[serde(rename = "QQ_vs_R")]
    QqVsR,
}

impl std::fmt::Display for Bipartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Bipartition::Qq => "QQ",
            Bipartition::QqVsR => "QQ_vs_R",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NegativityResult {
    pub value: f64,
    pub bipartition: Bipartition,
    pub negative_eigenvalues: Vec<f64>,
}

/// Index bookkeeping for splitting a composite index into kept/traced parts.
struct Split {
    kept_dim: usize,
    traced_dim: usize,
    kept: Vec<usize>,
    traced: Vec<usize>,
}

fn split_indices(dims: &[usize], keep: &[usize]) -> Result<Split, EntanglementError> {
    for &k in keep {
        if k >= dims.len() {
            return Err(EntanglementError::InvalidSubsystem {
                index: k,
                count: dims.len(),
            });
        }
    }
    let total: usize = dims.iter().product();
    let mut kept = vec![0; total];
    let mut traced = vec![0; total];
    let mut digits = vec![0usize; dims.len()];
    for i in 0..total {
        let (mut ki, mut ti) = (0, 0);
        for (s, (&d, &x)) in dims.iter().zip(&digits).enumerate() {
            if keep.contains(&s) {
                ki = ki * d + x;
            } else {
                ti = ti * d + x;
            }
        }
        kept[i] = ki;
        traced[i] = ti;
        // increment mixed-radix counter, last subsystem fastest
        for s in (0..dims.len()).rev() {
            digits[s] += 1;
            if digits[s] < dims[s] {
                break;
            }
            digits[s] = 0;
        }
    }
    let kept_dim = keep.iter().map(|&k| dims[k]).product();
    Ok(Split {
        kept_dim,
        traced_dim: total / kept_dim.max(1),
        kept,
        traced,
    })
}

fn normalize_keep(keep: &[usize]) -> Vec<usize> {
    let mut k = keep.to_vec();
    k.sort_unstable();
    k.dedup();
    k
}

/// Reduced density matrix of `rho` on the subsystems in `keep`.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix, EntanglementError> {
    let keep = normalize_keep(keep);
    let split = split_indices(&rho.dims, &keep)?;
    let n = rho.dim();
    let mut out = ComplexMatrix::zeros(split.kept_dim, split.kept_dim);
    let m = rho.matrix();
    for i in 0..n {
        for j in 0..n {
            if split.traced[i] == split.traced[j] {
                out[(split.kept[i], split.kept[j])] += m[(i, j)];
            }
        }
    }
    DensityMatrix::new(out, keep.iter().map(|&k| rho.dims[k]).collect())
}

/// Reduced density matrix of the pure state `psi` on the subsystems in `keep`.
pub fn partial_trace_pure(
    psi: &StateVector,
    dims: &[usize],
    keep: &[usize],
) -> Result<DensityMatrix, EntanglementError> {
    let total: usize = dims.iter().product();
    if psi.len() != total {
        return Err(EntanglementError::DimensionMismatch {
            dim: psi.len(),
            dims: dims.to_vec(),
        });
    }
    let keep = normalize_keep(keep);
    let split = split_indices(dims, &keep)?;
    // Ψ[kept, traced]; ρ = Ψ Ψ†
    let mut coeffs = vec![C64::new(0.0, 0.0); split.kept_dim * split.traced_dim];
    for (i, amp) in psi.as_slice().iter().enumerate() {
        coeffs[split.kept[i] * split.traced_dim + split.traced[i]] = *amp;
    }
    let kd = split.kept_dim;
    let td = split.traced_dim;
    let mut out = ComplexMatrix::zeros(kd, kd);
    for a in 0..kd {
        let ra = &coeffs[a * td..(a + 1) * td];
        for b in a..kd {
            let rb = &coeffs[b * td..(b + 1) * td];
            let z = ra.iter().zip(rb).fold(C64::new(0.0, 0.0), |acc, (x, y)| acc + x * y.conj());
            out[(a, b)] = z;
            out[(b, a)] = z.conj();
        }
    }
    DensityMatrix::new(out, keep.iter().map(|&k| dims[k]).collect())
}

/// Transposes the indices of one subsystem.
pub fn partial_transpose(rho: &DensityMatrix, subsystem: usize) -> Result<ComplexMatrix, EntanglementError> {
    let dims = &rho.dims;
    if subsystem >= dims.len() {
        return Err(EntanglementError::InvalidSubsystem {
            index: subsystem,
            count: dims.len(),
        });
    }
    // index = (outer * d + digit) * inner + rest
    let d = dims[subsystem];
    let inner: usize = dims[subsystem + 1..].iter().product();
    let n = rho.dim();
    let digit = |i: usize| (i / inner) % d;
    let with_digit = |i: usize, x: usize| i - digit(i) * inner + x * inner;
    let m = rho.matrix();
    let mut out = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let (di, dj) = (digit(i), digit(j));
            out[(with_digit(i, dj), with_digit(j, di))] = m[(i, j)];
        }
    }
    Ok(out)
}

fn negativity_from_spectrum(eigenvalues: &[f64], bipartition: Bipartition) -> NegativityResult {
    let negative_eigenvalues: Vec<f64> = eigenvalues
        .iter()
        .copied()
        .filter(|&l| l < -EIGENVALUE_FLOOR)
        .collect();
    let value = (-negative_eigenvalues.iter().sum::<f64>()).max(0.0);
    NegativityResult {
        value,
        bipartition,
        negative_eigenvalues,
    }
}

/// `max(0, -Σ λ_i)` over the negative eigenvalues of the partial transpose
/// of subsystem `subsystem`.
pub fn negativity_across(
    rho: &DensityMatrix,
    subsystem: usize,
    bipartition: Bipartition,
) -> Result<NegativityResult, EntanglementError> {
    let pt = partial_transpose(rho, subsystem)?;
    let eig = hermitian_eig(&pt)?;
    Ok(negativity_from_spectrum(&eig.eigenvalues, bipartition))
}

/// Negativity for the two-qubit cut (transpose on qubit 2) or the
/// qubits-vs-resonator cut (transpose on the resonator).
///
/// `Qq` accepts either a `[2, 2]` state or a full `[2, 2, M+1]` state, which
/// is reduced first. `QqVsR` needs the full state.
pub fn negativity(rho: &DensityMatrix, bipartition: Bipartition) -> Result<NegativityResult, EntanglementError> {
    match (bipartition, rho.dims()) {
        (Bipartition::Qq, [2, 2]) => negativity_across(rho, 1, bipartition),
        (Bipartition::Qq, [2, 2, _]) => negativity_across(&partial_trace(rho, &[0, 1])?, 1, bipartition),
        (Bipartition::QqVsR, [2, 2, _]) => {
            // group the qubits into one factor so the transpose acts on R
            let grouped = DensityMatrix::new(rho.matrix.clone(), vec![4, rho.dims[2]])?;
            negativity_across(&grouped, 1, bipartition)
        }
        _ => Err(EntanglementError::UnsupportedBipartition(bipartition, rho.dims.clone())),
    }
}

/// Qubits-vs-resonator negativity of a pure full state from its Schmidt
/// coefficients: the partial transpose of `|ψ⟩⟨ψ|` has eigenvalues `s_i²`
/// and `±s_i s_j`, so `N = Σ_{i<j} s_i s_j`.
///
/// The `s_i` are taken as `‖Ψ† u_i‖` for the eigenvectors `u_i` of
/// `ρ_QQ = Ψ Ψ†` rather than as square roots of its eigenvalues, which
/// keeps small coefficients accurate to roundoff instead of its square root.
pub fn negativity_pure_qq_vs_r(psi: &StateVector, cutoff: usize) -> Result<NegativityResult, EntanglementError> {
    let dims = [2, 2, cutoff + 1];
    let rho_qq = partial_trace_pure(psi, &dims, &[0, 1])?;
    let u = hermitian_eig(rho_qq.matrix())?.eigenvectors;
    let r = cutoff + 1;
    let amps = psi.as_slice();
    let s: Vec<f64> = (0..4)
        .map(|k| {
            (0..r)
                .map(|n| (0..4).fold(C64::new(0.0, 0.0), |acc, q| acc + amps[q * r + n].conj() * u[(q, k)]).norm_sqr())
                .sum::<f64>()
                .sqrt()
        })
        .collect();
    let mut negative = Vec::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            negative.push(-s[i] * s[j]);
        }
    }
    negative.sort_by(f64::total_cmp);
    Ok(negativity_from_spectrum(&negative, Bipartition::QqVsR))
}

/// Wootters concurrence of a two-qubit density matrix.
///
/// Uses the Hermitian form `√ρ ρ̃ √ρ`, whose eigenvalues equal those of
/// `ρ ρ̃` with `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`.
pub fn concurrence(rho_qq: &DensityMatrix) -> Result<f64, EntanglementError> {
    if rho_qq.dims() != [2, 2] {
        return Err(EntanglementError::DimensionMismatch {
            dim: rho_qq.dim(),
            dims: rho_qq.dims.clone(),
        });
    }
    let sy = ComplexMatrix::from_vec(
        2,
        2,
        vec![C64::new(0.0, 0.0), C64::new(0.0, -1.0), C64::new(0.0, 1.0), C64::new(0.0, 0.0)],
    )?;
    let yy = kron(&sy, &sy);
    let rho = rho_qq.matrix().hermitian_part();
    let tilde = yy.matmul(&rho.conj())?.matmul(&yy)?;
    let sqrt_rho = func_hermitian(&rho, |x| x.max(0.0).sqrt())?;
    let r = sqrt_rho.matmul(&tilde)?.matmul(&sqrt_rho)?.hermitian_part();
    let mut lambdas: Vec<f64> = hermitian_eig(&r)?
        .eigenvalues
        .into_iter()
        .map(|x| x.max(0.0).sqrt())
        .collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

/// `tr ρ²` for Hermitian `ρ`.
pub fn purity(rho: &ComplexMatrix) -> f64 {
    rho.as_slice().iter().map(|z| z.norm_sqr()).sum()
}

/// Population in the `top_k` highest Fock levels of a full `[2, 2, M+1]`
/// pure state, summed over qubit indices.
pub fn leakage_pure(psi: &StateVector, cutoff: usize, top_k: usize) -> f64 {
    let m1 = cutoff + 1;
    let first = m1.saturating_sub(top_k);
    psi.as_slice()
        .iter()
        .enumerate()
        .filter(|(i, _)| i % m1 >= first)
        .map(|(_, z)| z.norm_sqr())
        .sum()
}

/// Mixed-state counterpart of [`leakage_pure`].
pub fn leakage(rho: &DensityMatrix, cutoff: usize, top_k: usize) -> f64 {
    let m1 = cutoff + 1;
    let first = m1.saturating_sub(top_k);
    (0..rho.dim())
        .filter(|i| i % m1 >= first)
        .map(|i| rho.matrix[(i, i)].re)
        .sum()
}
