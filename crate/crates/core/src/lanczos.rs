//! Extremal eigenvalue estimation for SPD banded matrices.
//!
//! lambda_max by Lanczos on A; lambda_min by Lanczos on A^{-1} applied
//! through a banded Cholesky factorization. Full reorthogonalization.

use crate::banded::BandedMatrix;
use crate::dense::DenseMat;
use crate::eig::sym_eig_dense;
use crate::error::Result;
use crate::factor::{banded_cholesky, chol_solve, CholFactor};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
pub struct EigPair {
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// False when either Lanczos sweep hit maxit before the Ritz value settled.
    pub converged: bool,
}

pub fn lanczos_extreme_eigs(
    a: &BandedMatrix<f64>,
    tol: f64,
    maxit: usize,
) -> Result<EigPair> {
    let (lmax, c1) = lanczos_largest(a, None, tol, maxit);
    let chol = banded_cholesky(a)?;
    let (inv_lmax, c2) = lanczos_largest(a, Some(&chol), tol, maxit);
    let lmin = 1.0 / inv_lmax;
    Ok(EigPair {
        lambda_min: lmin.min(lmax),
        lambda_max: lmax.max(lmin),
        converged: c1 && c2,
    })
}

/// Largest Ritz value of A (chol=None) or of A^{-1} (chol=Some).
fn lanczos_largest(
    a: &BandedMatrix<f64>,
    chol: Option<&CholFactor>,
    tol: f64,
    maxit: usize,
) -> (f64, bool) {
    let n = a.n();
    let maxit = maxit.min(n);
    let mut rng = ChaCha8Rng::seed_from_u64(0x9a3c_55e1);
    let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    normalize(&mut v);

    let apply = |x: &[f64]| -> Vec<f64> {
        match chol {
            None => a.matvec(x),
            Some(f) => chol_solve(f, x),
        }
    };

    let mut basis: Vec<Vec<f64>> = vec![v.clone()];
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut prev_theta = f64::NAN;

    for m in 0..maxit {
        let mut w = apply(&basis[m]);
        let alpha = dot(&w, &basis[m]);
        alphas.push(alpha);
        // full reorthogonalization, two passes
        for _ in 0..2 {
            for b in &basis {
                let c = dot(&w, b);
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= c * bi;
                }
            }
        }
        let beta = norm(&w);
        let theta = max_ritz(&alphas, &betas);
        let settled =
            prev_theta.is_finite() && (theta - prev_theta).abs() <= tol * theta.abs().max(1e-300);
        if beta <= 1e-14 * theta.abs().max(1.0) {
            // invariant subspace: the Ritz value is exact
            return (theta, true);
        }
        if settled {
            return (theta, true);
        }
        prev_theta = theta;
        if m + 1 == maxit {
            return (theta, false);
        }
        betas.push(beta);
        for wi in &mut w {
            *wi /= beta;
        }
        basis.push(w);
    }
    (prev_theta, false)
}

fn max_ritz(alphas: &[f64], betas: &[f64]) -> f64 {
    let m = alphas.len();
    if m == 1 {
        return alphas[0];
    }
    let mut t = DenseMat::zeros(m, m);
    for i in 0..m {
        t.set(i, i, alphas[i]);
        if i + 1 < m {
            t.set(i, i + 1, betas[i]);
            t.set(i + 1, i, betas[i]);
        }
    }
    let ed = sym_eig_dense(&t).expect("tridiagonal eig");
    *ed.lambda.last().unwrap()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn normalize(a: &mut [f64]) {
    let s = norm(a);
    for v in a.iter_mut() {
        *v /= s;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{toeplitz_tridiag, toeplitz_tridiag_extremes};

    #[test]
    fn identity_eigs() {
        let a = BandedMatrix::<f64>::identity(30);
        let e = lanczos_extreme_eigs(&a, 1e-10, 50).unwrap();
        assert!((e.lambda_min - 1.0).abs() < 1e-12);
        assert!((e.lambda_max - 1.0).abs() < 1e-12);
        assert!(e.converged);
    }

    #[test]
    fn toeplitz_closed_form_spectrum() {
        let n = 200;
        let a = toeplitz_tridiag(n);
        let (lmin, lmax) = toeplitz_tridiag_extremes(n);
        let e = lanczos_extreme_eigs(&a, 1e-9, 200).unwrap();
        assert!(
            (e.lambda_min - lmin).abs() <= 1e-6 * lmin,
            "lambda_min {:.6e} vs {:.6e}",
            e.lambda_min,
            lmin
        );
        assert!(
            (e.lambda_max - lmax).abs() <= 1e-6 * lmax,
            "lambda_max {:.6e} vs {:.6e}",
            e.lambda_max,
            lmax
        );
        assert!(e.converged);
    }

    #[test]
    fn singular_matrix_errors() {
        let a = BandedMatrix::<f64>::zeros(10, 1, true);
        assert!(lanczos_extreme_eigs(&a, 1e-6, 30).is_err());
    }
}
