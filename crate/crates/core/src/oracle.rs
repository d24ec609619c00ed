//! Dense spectral reference oracles, the benchmark problem generators, and
//! decay-profile emission used to produce table/figure data at desk scale.

use crate::banded::BandedMatrix;
use crate::decay::{geometric_solution_bound, KronBoundCtx, SpectralInterval};
use crate::dense::DenseMat;
use crate::eig::sym_eig_dense;
use crate::error::{Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const DENSE_GUARD: usize = 2000;

fn guard(n: usize) -> Result<()> {
    if n > DENSE_GUARD {
        return Err(Error::InvalidArgument(format!(
            "dense oracle guard: n = {n} > {DENSE_GUARD}"
        )));
    }
    Ok(())
}

/// Solve AX + XA = D densely through the eigendecomposition of A.
pub fn dense_lyap_oracle(a: &DenseMat<f64>, d: &DenseMat<f64>) -> Result<DenseMat<f64>> {
    guard(a.nrows())?;
    let ed = sym_eig_dense(a)?;
    let dt = ed.q.transpose().matmul(d).matmul(&ed.q);
    let n = a.nrows();
    let mut y = DenseMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let s = ed.lambda[i] + ed.lambda[j];
            if s <= 0.0 {
                return Err(Error::NotSpd(format!(
                    "lambda_i + lambda_j = {s:.3e} <= 0"
                )));
            }
            y.set(i, j, dt.get(i, j) / s);
        }
    }
    Ok(ed.q.matmul(&y).matmul(&ed.q.transpose()))
}

/// Finite-horizon integral X(tau) = int_0^tau e^{-tA} D e^{-tA} dt, densely.
pub fn dense_finite_horizon_oracle(
    a: &DenseMat<f64>,
    d: &DenseMat<f64>,
    tau: f64,
) -> Result<DenseMat<f64>> {
    guard(a.nrows())?;
    let ed = sym_eig_dense(a)?;
    let dt = ed.q.transpose().matmul(d).matmul(&ed.q);
    let n = a.nrows();
    let mut y = DenseMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let s = ed.lambda[i] + ed.lambda[j];
            if s <= 0.0 {
                return Err(Error::NotSpd(format!(
                    "lambda_i + lambda_j = {s:.3e} <= 0"
                )));
            }
            y.set(i, j, dt.get(i, j) * (1.0 - (-tau * s).exp()) / s);
        }
    }
    Ok(ed.q.matmul(&y).matmul(&ed.q.transpose()))
}

/// Solve AX + XB = D densely through two eigendecompositions.
pub fn dense_sylvester_oracle(
    a: &DenseMat<f64>,
    b: &DenseMat<f64>,
    d: &DenseMat<f64>,
) -> Result<DenseMat<f64>> {
    guard(a.nrows().max(b.nrows()))?;
    let ea = sym_eig_dense(a)?;
    let eb = sym_eig_dense(b)?;
    let dt = ea.q.transpose().matmul(d).matmul(&eb.q);
    let (na, nb) = (a.nrows(), b.nrows());
    let mut y = DenseMat::zeros(na, nb);
    for i in 0..na {
        for j in 0..nb {
            let s = ea.lambda[i] + eb.lambda[j];
            if s <= 0.0 {
                return Err(Error::NotSpd(format!(
                    "lambda^A_i + lambda^B_j = {s:.3e} <= 0"
                )));
            }
            y.set(i, j, dt.get(i, j) / s);
        }
    }
    Ok(ea.q.matmul(&y).matmul(&eb.q.transpose()))
}

/// e^{-t A} densely, via the eigendecomposition.
pub fn dense_expm_neg(a: &DenseMat<f64>, t: f64) -> Result<DenseMat<f64>> {
    guard(a.nrows())?;
    let ed = sym_eig_dense(a)?;
    let n = a.nrows();
    let mut e = DenseMat::zeros(n, n);
    for j in 0..n {
        let w = (-t * ed.lambda[j]).exp();
        for i in 0..n {
            e.set(i, j, ed.q.get(i, j) * w);
        }
    }
    Ok(e.matmul(&ed.q.transpose()))
}

/// Block-structured benchmark: A = M (x) I_6 + I_n (x) L of order 6n with
/// beta_A = 6, D = Q (x) 11^T + 0.8 I with beta_D = 11; kappa(A) <= 40 for
/// every n.
pub fn gen_kron_example(n_blocks: usize) -> (BandedMatrix<f64>, BandedMatrix<f64>) {
    let e = -0.34;
    let a_coef = 1.36;
    let n = 6 * n_blocks;
    let mut a = BandedMatrix::<f64>::zeros(n, 6, true);
    let mut d = BandedMatrix::<f64>::zeros(n, 11, true);
    let l_diag = a_coef - e;
    for bi in 0..n_blocks {
        for i2 in 0..6 {
            let r = 6 * bi + i2;
            // I_n (x) L
            a.set_entry(r, r, e + l_diag);
            if i2 + 1 < 6 {
                a.set_entry(r + 1, r, e);
            }
            // M (x) I_6, off-diagonal block
            if bi + 1 < n_blocks {
                a.set_entry(r + 6, r, e);
            }
            // D = Q (x) 11^T + 0.8 I: diagonal block
            for j2 in 0..=i2 {
                let c = 6 * bi + j2;
                let mut v = 0.2;
                if r == c {
                    v += 0.8;
                }
                d.set_entry(r, c, v);
            }
            // off-diagonal block of Q (x) 11^T
            if bi + 1 < n_blocks {
                for j2 in 0..6 {
                    d.set_entry(r + 6, 6 * bi + j2, 0.1);
                }
            }
        }
    }
    (a, d)
}

/// Closed-form extreme eigenvalues of the Kron-structured example.
pub fn kron_example_extremes(n_blocks: usize) -> (f64, f64) {
    let e: f64 = -0.34;
    let a_coef = 1.36;
    let nb = n_blocks as f64;
    let l_diag = a_coef - e;
    let cos7 = (std::f64::consts::PI / 7.0).cos();
    let cosn = (std::f64::consts::PI / (nb + 1.0)).cos();
    let lmax = (e + 2.0 * e.abs() * cosn) + (l_diag + 2.0 * e.abs() * cos7);
    let lmin = (e - 2.0 * e.abs() * cosn) + (l_diag - 2.0 * e.abs() * cos7);
    (lmin, lmax)
}

/// 1D operator -(1/gamma)(e^x u_x)_x + gamma u on (0,1), zero Dirichlet,
/// centered differences: symmetric tridiagonal A (beta_A = 1) and diagonal D
/// with uniform(0,1) entries (beta_D = 0).
pub fn gen_1d_operator(n: usize, gamma: f64, seed: u64) -> (BandedMatrix<f64>, BandedMatrix<f64>) {
    let h = 1.0 / (n as f64 + 1.0);
    let inv_h2 = 1.0 / (h * h);
    let mut a = BandedMatrix::<f64>::zeros(n, 1, true);
    for i in 0..n {
        let cl = ((i as f64 + 0.5) * h).exp();
        let cr = ((i as f64 + 1.5) * h).exp();
        a.set_entry(i, i, (cl + cr) * inv_h2 / gamma + gamma);
        if i + 1 < n {
            a.set_entry(i + 1, i, -cr * inv_h2 / gamma);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = BandedMatrix::<f64>::zeros(n, 0, true);
    for v in d.diag_mut(0) {
        *v = rng.gen_range(0.0..1.0);
    }
    (a, d)
}

/// 4th-order operator -u_xx + gamma log(10(x+1)) u:
/// A = -((n-1)^2/12) pentadiag(-1,16,-30,16,-1) + gamma diag(chi), beta_A = 2;
/// D symmetric tridiagonal with uniform random entries, unit Frobenius norm.
pub fn gen_pentadiag_operator(
    n: usize,
    gamma: f64,
    seed: u64,
) -> (BandedMatrix<f64>, BandedMatrix<f64>) {
    let scale = (n as f64 - 1.0) * (n as f64 - 1.0) / 12.0;
    let mut a = BandedMatrix::<f64>::zeros(n, 2, true);
    for i in 0..n {
        let x = i as f64 / (n as f64 - 1.0);
        let chi = (10.0 * (x + 1.0)).ln();
        a.set_entry(i, i, 30.0 * scale + gamma * chi);
        if i + 1 < n {
            a.set_entry(i + 1, i, -16.0 * scale);
        }
        if i + 2 < n {
            a.set_entry(i + 2, i, scale);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = BandedMatrix::<f64>::zeros(n, 1, true);
    for k in 0..=1isize {
        for v in d.diag_mut(k) {
            *v = rng.gen_range(0.0..1.0);
        }
    }
    let norm = d.frob_norm();
    let d = d.scale(1.0 / norm);
    (a, d)
}

/// One row of a decay-profile CSV: entry magnitude and both decay bounds.
pub struct DecayProfileRow {
    pub i: usize,
    pub j: usize,
    pub magnitude: f64,
    pub bound_geometric: f64,
    pub bound_kron: f64,
}

/// Column-j entry magnitudes of a solution with both decay bounds attached.
pub fn decay_profile(
    spec: &SpectralInterval,
    d: &BandedMatrix<f64>,
    column: usize,
    magnitudes: &[f64],
) -> Result<Vec<DecayProfileRow>> {
    let ctx = KronBoundCtx::new(*spec);
    let mut rows = Vec::with_capacity(magnitudes.len());
    for (i, &m) in magnitudes.iter().enumerate() {
        rows.push(DecayProfileRow {
            i,
            j: column,
            magnitude: m,
            bound_geometric: geometric_solution_bound(spec, d, i, column),
            bound_kron: ctx.bound(d, i, column)?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lanczos::lanczos_extreme_eigs;
    use crate::test_util::{random_banded_symmetric, random_spd_banded, rng};
    use rand::Rng;

    fn residual_lyap(a: &DenseMat<f64>, x: &DenseMat<f64>, d: &DenseMat<f64>) -> f64 {
        let ax = a.matmul(x);
        let xa = x.matmul(a);
        ax.add_scaled(&xa, 1.0).add_scaled(d, -1.0).frob_norm()
    }

    #[test]
    fn lyap_oracle_diagonal_case() {
        let mut a = DenseMat::zeros(2, 2);
        a.set(0, 0, 1.0);
        a.set(1, 1, 2.0);
        let d = DenseMat::from_fn(2, 2, |_, _| 1.0);
        let x = dense_lyap_oracle(&a, &d).unwrap();
        let expect = [[0.5, 1.0 / 3.0], [1.0 / 3.0, 0.25]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((x.get(i, j) - expect[i][j]).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn lyap_oracle_identity_gives_half_d() {
        let a = DenseMat::identity(5);
        let mut r = rng(1);
        let mut d = DenseMat::zeros(5, 5);
        for i in 0..5 {
            for j in 0..=i {
                let v = r.gen_range(-1.0..1.0);
                d.set(i, j, v);
                d.set(j, i, v);
            }
        }
        let x = dense_lyap_oracle(&a, &d).unwrap();
        assert!(x.add_scaled(&d.scale(0.5), -1.0).max_abs() < 1e-13);
    }

    #[test]
    fn lyap_oracle_residual_contract() {
        let ab = random_spd_banded(100, 3, 7);
        let db = random_banded_symmetric(100, 5, 8);
        let (a, d) = (ab.to_dense(), db.to_dense());
        let x = dense_lyap_oracle(&a, &d).unwrap();
        assert!(residual_lyap(&a, &x, &d) <= 1e-10 * d.frob_norm());
    }

    #[test]
    fn finite_horizon_limits() {
        let ab = random_spd_banded(30, 2, 17);
        let db = random_banded_symmetric(30, 2, 18);
        let (a, d) = (ab.to_dense(), db.to_dense());
        let x0 = dense_finite_horizon_oracle(&a, &d, 0.0).unwrap();
        assert_eq!(x0.max_abs(), 0.0);
        let xinf = dense_finite_horizon_oracle(&a, &d, 1e4).unwrap();
        let x = dense_lyap_oracle(&a, &d).unwrap();
        assert!(xinf.add_scaled(&x, -1.0).frob_norm() <= 1e-9 * x.frob_norm());
    }

    #[test]
    fn splitting_identity_holds() {
        // X = X(tau) + e^{-tau A} X e^{-tau A}
        let ab = random_spd_banded(60, 2, 27);
        let db = random_banded_symmetric(60, 3, 28);
        let (a, d) = (ab.to_dense(), db.to_dense());
        let x = dense_lyap_oracle(&a, &d).unwrap();
        for tau in [0.1, 1.0, 10.0] {
            let xt = dense_finite_horizon_oracle(&a, &d, tau).unwrap();
            let e = dense_expm_neg(&a, tau).unwrap();
            let rest = e.matmul(&x).matmul(&e);
            let rhs = xt.add_scaled(&rest, 1.0);
            let diff = x.add_scaled(&rhs, -1.0).frob_norm();
            assert!(
                diff <= 1e-10 * x.frob_norm(),
                "tau={tau}: rel diff {:.3e}",
                diff / x.frob_norm()
            );
        }
    }

    #[test]
    fn sylvester_oracle_reduces_to_lyapunov() {
        let ab = random_spd_banded(40, 2, 37);
        let db = random_banded_symmetric(40, 2, 38);
        let (a, d) = (ab.to_dense(), db.to_dense());
        let xs = dense_sylvester_oracle(&a, &a, &d).unwrap();
        let xl = dense_lyap_oracle(&a, &d).unwrap();
        assert!(xs.add_scaled(&xl, -1.0).max_abs() <= 1e-10 * xl.max_abs());
    }

    #[test]
    fn kron_example_structure() {
        let (a, d) = gen_kron_example(8);
        assert_eq!(a.n(), 48);
        assert_eq!(a.beta(), 6);
        assert_eq!(d.beta(), 11);
        let (lmin, lmax) = kron_example_extremes(8);
        assert!(lmax / lmin <= 40.0);
        let e = lanczos_extreme_eigs(&a, 1e-9, 48).unwrap();
        assert!((e.lambda_min - lmin).abs() <= 1e-6 * lmin);
        assert!((e.lambda_max - lmax).abs() <= 1e-6 * lmax);
    }

    #[test]
    fn operator_1d_structure() {
        let (a, d) = gen_1d_operator(300, 30.0, 5);
        assert_eq!(a.beta(), 1);
        assert_eq!(d.beta(), 0);
        let e = lanczos_extreme_eigs(&a, 1e-6, 200).unwrap();
        assert!(e.lambda_min > 0.0);
        // kappa grows with n at fixed gamma
        let (a2, _) = gen_1d_operator(600, 30.0, 5);
        let e2 = lanczos_extreme_eigs(&a2, 1e-6, 300).unwrap();
        assert!(e2.lambda_max / e2.lambda_min > e.lambda_max / e.lambda_min);
    }

    #[test]
    fn pentadiag_structure() {
        let (a, d) = gen_pentadiag_operator(400, 100.0, 9);
        assert_eq!(a.beta(), 2);
        assert_eq!(d.beta(), 1);
        assert!((d.frob_norm() - 1.0).abs() < 1e-12);
        let e = lanczos_extreme_eigs(&a, 1e-6, 250).unwrap();
        assert!(e.lambda_min > 0.0);
    }
}
