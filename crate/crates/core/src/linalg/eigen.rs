//! Hermitian eigensolver.
//!
//! The input is reduced to Hermitian tridiagonal form with complex
//! Householder reflections, the off-diagonal phases are absorbed into a
//! diagonal unitary so the tridiagonal matrix becomes real symmetric, and
//! that is diagonalized with implicit-shift QL. Eigenvectors are the
//! product of all three transformations.

use super::{ComplexMatrix, LinalgError, C64, ONE, ZERO};

/// Relative Hermiticity tolerance accepted by [`hermitian_eig`].
pub const HERMITIAN_TOLERANCE: f64 = 1e-10;

const MAX_QL_ITERATIONS: usize = 60;

#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors stored as columns, in eigenvalue order.
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `V diag(f(λ)) V†`, returned exactly Hermitian when `f` is real.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let fl: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let v = &self.eigenvectors;
        let n = self.dim();
        let mut out = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            let vi = v.row(i);
            for j in i..n {
                let vj = v.row(j);
                let mut acc = ZERO;
                for k in 0..n {
                    acc += vi[k] * vj[k].conj() * fl[k];
                }
                out[(i, j)] = acc;
                out[(j, i)] = acc.conj();
            }
            out[(i, i)].im = 0.0;
        }
        out
    }

    /// `V diag(λ) V†`
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map(|l| l)
    }

    /// Column `k` as a state vector.
    pub fn eigenvector(&self, k: usize) -> super::StateVector {
        let n = self.dim();
        super::StateVector::new((0..n).map(|i| self.eigenvectors[(i, k)]).collect())
    }
}

pub fn hermitian_eig(a: &ComplexMatrix) -> Result<EigenDecomposition, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let deviation = a.hermitian_deviation();
    let tolerance = HERMITIAN_TOLERANCE * a.max_abs();
    if deviation > tolerance {
        return Err(LinalgError::NotHermitian {
            deviation,
            tolerance,
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(EigenDecomposition {
            eigenvalues: Vec::new(),
            eigenvectors: ComplexMatrix::zeros(0, 0),
        });
    }

    let mut work = a.hermitian_part();
    let q = tridiagonalize(&mut work);

    let diag: Vec<f64> = (0..n).map(|i| work[(i, i)].re).collect();
    let mut off = vec![0.0; n];
    let mut phases = vec![ONE; n];
    for i in 0..n - 1 {
        let e = work[(i + 1, i)];
        let r = e.norm();
        off[i] = r;
        phases[i + 1] = if r > 0.0 { phases[i] * (e / r) } else { phases[i] };
    }

    let mut values = diag;
    let mut z = vec![0.0; n * n];
    for i in 0..n {
        z[i * n + i] = 1.0;
    }
    tql2(&mut values, &mut off, &mut z)?;

    // eigenvectors = Q · diag(phases) · Z
    let mut vecs = ComplexMatrix::zeros(n, n);
    for r in 0..n {
        let qrow = q.row(r);
        let qd: Vec<C64> = qrow.iter().zip(&phases).map(|(x, p)| x * p).collect();
        for (c, qdc) in qd.iter().enumerate() {
            if qdc.re == 0.0 && qdc.im == 0.0 {
                continue;
            }
            let zrow = &z[c * n..(c + 1) * n];
            for j in 0..n {
                vecs[(r, j)] += qdc * zrow[j];
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let eigenvalues = order.iter().map(|&k| values[k]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| vecs[(i, order[j])]);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Spectral calculus: `f(A) = V diag(f(λ)) V†` for Hermitian `A`.
pub fn func_hermitian(
    a: &ComplexMatrix,
    f: impl Fn(f64) -> f64,
) -> Result<ComplexMatrix, LinalgError> {
    Ok(hermitian_eig(a)?.map(f))
}

/// Reduces Hermitian `a` in place to tridiagonal form `T` and returns the
/// unitary `Q` with `A = Q T Q†`.
fn tridiagonalize(a: &mut ComplexMatrix) -> ComplexMatrix {
    let n = a.rows();
    let mut q = ComplexMatrix::identity(n);
    if n < 3 {
        return q;
    }
    let mut v = vec![ZERO; n];
    let mut p = vec![ZERO; n];
    for k in 0..n - 2 {
        let m = n - k - 1;
        let alpha = (k + 1..n).map(|i| a[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if alpha == 0.0 {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { ONE };
        for j in 0..m {
            v[j] = a[(k + 1 + j, k)];
        }
        v[0] += phase * alpha;
        let vnorm2: f64 = v[..m].iter().map(|z| z.norm_sqr()).sum();
        let tau = 2.0 / vnorm2;

        // p = tau B v on the trailing block B
        for (i, pi) in p[..m].iter_mut().enumerate() {
            let row = &a.row(k + 1 + i)[k + 1..];
            *pi = row.iter().zip(&v[..m]).fold(ZERO, |acc, (b, x)| acc + b * x) * tau;
        }
        let vp: C64 = v[..m].iter().zip(&p[..m]).fold(ZERO, |acc, (x, y)| acc + x.conj() * y);
        let kappa = 0.5 * tau * vp.re;
        for i in 0..m {
            p[i] -= v[i] * kappa;
        }
        // B <- B - v w† - w v†
        for i in 0..m {
            for j in 0..m {
                let upd = v[i] * p[j].conj() + p[i] * v[j].conj();
                a[(k + 1 + i, k + 1 + j)] -= upd;
            }
        }
        let beta = -phase * alpha;
        a[(k + 1, k)] = beta;
        a[(k, k + 1)] = beta.conj();
        for i in k + 2..n {
            a[(i, k)] = ZERO;
            a[(k, i)] = ZERO;
        }
        // Q <- Q H, acting on columns k+1..n
        for r in 0..n {
            let qr = &q.row(r)[k + 1..];
            let s: C64 = qr.iter().zip(&v[..m]).fold(ZERO, |acc, (x, y)| acc + x * y) * tau;
            if s == ZERO {
                continue;
            }
            for j in 0..m {
                q[(r, k + 1 + j)] -= s * v[j].conj();
            }
        }
    }
    q
}

/// Implicit-shift QL on a real symmetric tridiagonal matrix with diagonal
/// `d` and sub-diagonal `e` (`e[i]` couples `i` and `i+1`, `e[n-1]` unused).
/// Rotations are accumulated into the row-major `z`.
fn tql2(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<(), LinalgError> {
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    e[n - 1] = 0.0;
    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > MAX_QL_ITERATIONS {
                    return Err(LinalgError::NoConvergence {
                        index: l,
                        iterations: MAX_QL_ITERATIONS,
                    });
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for k in 0..n {
                        let zi1 = z[k * n + i + 1];
                        let zi = z[k * n + i];
                        z[k * n + i + 1] = s * zi + c * zi1;
                        z[k * n + i] = c * zi - s * zi1;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    fn check_decomposition(a: &ComplexMatrix, tol: f64) -> EigenDecomposition {
        let eig = hermitian_eig(a).unwrap();
        let v = &eig.eigenvectors;
        let gram = v.adjoint().matmul(v).unwrap();
        let n = a.rows();
        assert!(gram.max_abs_diff(&ComplexMatrix::identity(n)) < tol, "gram");
        let scale = a.max_abs().max(1.0);
        assert!(eig.reconstruct().max_abs_diff(a) < tol * scale, "reconstruct");
        assert!(eig.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        eig
    }

    #[test]
    fn diagonal_input() {
        let a = ComplexMatrix::from_real_diagonal(&[3.0, 1.0, 2.0]);
        let eig = check_decomposition(&a, 1e-12);
        assert_close(&eig.eigenvalues, &[1.0, 2.0, 3.0], 1e-14);
    }

    #[test]
    fn pauli_spectra() {
        let sx = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert_close(&check_decomposition(&sx, 1e-12).eigenvalues, &[-1.0, 1.0], 1e-14);
        let sy = ComplexMatrix::from_vec(2, 2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)])
            .unwrap();
        assert_close(&check_decomposition(&sy, 1e-12).eigenvalues, &[-1.0, 1.0], 1e-14);
    }

    #[test]
    fn position_operator_three_levels() {
        // X = a + a† on {0,1,2}: characteristic polynomial -λ³ + 3λ.
        let s2 = 2f64.sqrt();
        let x = ComplexMatrix::from_real_rows(&[&[0.0, 1.0, 0.0], &[1.0, 0.0, s2], &[0.0, s2, 0.0]]);
        let charpoly = |l: f64| -l * (l * l - 2.0) - (-l);
        let r3 = 3f64.sqrt();
        for root in [-r3, 0.0, r3] {
            assert!(charpoly(root).abs() < 1e-12);
        }
        let eig = check_decomposition(&x, 1e-12);
        assert_close(&eig.eigenvalues, &[-r3, 0.0, r3], 1e-12);
    }

    #[test]
    fn degenerate_and_trivial_inputs() {
        check_decomposition(&ComplexMatrix::identity(5), 1e-13);
        let z = check_decomposition(&ComplexMatrix::zeros(4, 4), 1e-13);
        assert_close(&z.eigenvalues, &[0.0; 4], 0.0);
        let one = ComplexMatrix::from_real_diagonal(&[-2.5]);
        assert_close(&check_decomposition(&one, 1e-14).eigenvalues, &[-2.5], 0.0);
        assert!(hermitian_eig(&ComplexMatrix::zeros(0, 0)).unwrap().eigenvalues.is_empty());
    }

    #[test]
    fn block_diagonal_with_zero_subdiagonals() {
        // Householder columns vanish; QL must split.
        let mut a = ComplexMatrix::zeros(6, 6);
        a[(0, 0)] = c(1.0, 0.0);
        a[(1, 2)] = c(0.0, 2.0);
        a[(2, 1)] = c(0.0, -2.0);
        a[(4, 5)] = c(1.0, 1.0);
        a[(5, 4)] = c(1.0, -1.0);
        a[(3, 3)] = c(-1.0, 0.0);
        let eig = check_decomposition(&a, 1e-12);
        let r2 = 2f64.sqrt();
        assert_close(&eig.eigenvalues, &[-2.0, -r2, -1.0, 1.0, r2, 2.0], 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[0.0, 1.0]]);
        assert!(matches!(hermitian_eig(&a), Err(LinalgError::NotHermitian { .. })));
        let r = ComplexMatrix::zeros(2, 3);
        assert!(matches!(hermitian_eig(&r), Err(LinalgError::NotSquare { .. })));
    }

    #[test]
    fn tiny_asymmetry_is_symmetrized() {
        let mut a = ComplexMatrix::from_real_rows(&[&[2.0, 1.0], &[1.0, 2.0]]);
        a[(0, 1)] += c(1e-13, 0.0);
        let eig = hermitian_eig(&a).unwrap();
        assert_close(&eig.eigenvalues, &[1.0, 3.0], 1e-12);
    }

    #[test]
    fn cosine_via_spectral_calculus() {
        let zero = ComplexMatrix::zeros(3, 3);
        assert!(func_hermitian(&zero, f64::cos).unwrap().max_abs_diff(&ComplexMatrix::identity(3)) < 1e-15);
        let d = ComplexMatrix::from_real_diagonal(&[0.0, std::f64::consts::PI]);
        let cd = func_hermitian(&d, f64::cos).unwrap();
        assert!(cd.max_abs_diff(&ComplexMatrix::from_real_diagonal(&[1.0, -1.0])) < 1e-15);
    }
}
