//! Banded factorizations: real Cholesky, complex symmetric LDL^T (unpivoted),
//! and the truncated partial inverse-column solve used for banded
//! approximate inverses.

use crate::banded::BandedMatrix;
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Lower-triangular Cholesky factor of an SPD banded matrix.
#[derive(Debug, Clone)]
pub struct CholFactor {
    l: BandedMatrix<f64>,
}

impl CholFactor {
    pub fn l(&self) -> &BandedMatrix<f64> {
        &self.l
    }

    pub fn n(&self) -> usize {
        self.l.n()
    }

    pub fn beta(&self) -> usize {
        self.l.beta()
    }
}

/// A = L L^T for symmetric positive definite banded A; beta_L = beta_A.
pub fn banded_cholesky(a: &BandedMatrix<f64>) -> Result<CholFactor> {
    if !a.is_symmetric() {
        return Err(Error::NotSpd("cholesky requires symmetric input".into()));
    }
    let n = a.n();
    let beta = a.beta();
    let mut l = BandedMatrix::<f64>::zeros(n, beta, false);
    for j in 0..n {
        let k_lo = j.saturating_sub(beta);
        let mut s = a.entry(j, j);
        for k in k_lo..j {
            let v = l.entry(j, k);
            s -= v * v;
        }
        if s <= 0.0 || !s.is_finite() {
            return Err(Error::NotSpd(format!(
                "non-positive pivot {s:.3e} at column {j}"
            )));
        }
        let d = s.sqrt();
        l.set_entry(j, j, d);
        for i in j + 1..=(j + beta).min(n - 1) {
            let mut t = a.entry(i, j);
            let k_lo_i = i.saturating_sub(beta).max(k_lo);
            for k in k_lo_i..j {
                t -= l.entry(i, k) * l.entry(j, k);
            }
            l.set_entry(i, j, t / d);
        }
    }
    Ok(CholFactor { l })
}

/// Solve A x = b given A = L L^T.
pub fn chol_solve(f: &CholFactor, b: &[f64]) -> Vec<f64> {
    let n = f.l.n();
    let beta = f.l.beta();
    assert_eq!(b.len(), n);
    let mut y = b.to_vec();
    for j in 0..n {
        y[j] /= f.l.entry(j, j);
        let yj = y[j];
        for i in j + 1..=(j + beta).min(n - 1) {
            y[i] -= f.l.entry(i, j) * yj;
        }
    }
    for j in (0..n).rev() {
        let mut s = y[j];
        for i in j + 1..=(j + beta).min(n - 1) {
            s -= f.l.entry(i, j) * y[i];
        }
        y[j] = s / f.l.entry(j, j);
    }
    y
}

/// Unit-lower-triangular L and diagonal D with M = L diag(D) L^T for a
/// complex symmetric (not Hermitian) banded M.
#[derive(Debug, Clone)]
pub struct LdltFactor {
    l: BandedMatrix<Complex64>,
    d: Vec<Complex64>,
}

impl LdltFactor {
    pub fn l(&self) -> &BandedMatrix<Complex64> {
        &self.l
    }

    pub fn ddiag(&self) -> &[Complex64] {
        &self.d
    }

    pub fn n(&self) -> usize {
        self.l.n()
    }

    pub fn beta(&self) -> usize {
        self.l.beta()
    }

    /// L diag(D) L^T, for reconstruction checks.
    pub fn reconstruct(&self) -> BandedMatrix<Complex64> {
        let n = self.l.n();
        let mut ld = self.l.clone();
        for k in 0..=ld.beta() as isize {
            // scale column j of L by d_j: entry (p+k, p) gets d_p
            let dcopy = self.d.clone();
            let diag = ld.diag_mut(k);
            for (p, v) in diag.iter_mut().enumerate() {
                *v *= dcopy[p];
            }
        }
        let lt = self.l.transpose();
        let prod = ld.band_matmul(&lt).unwrap();
        // product of banded lower * upper has bandwidth beta in each triangle
        BandedMatrix::from_dense(&prod.to_dense(), self.l.beta(), true)
    }
}

/// Unpivoted LDL^T of a complex symmetric banded matrix. A pivot of modulus
/// below 1e-14 * ||M||_max signals a shift too close to the spectrum line.
pub fn complex_ldlt(m: &BandedMatrix<Complex64>) -> Result<LdltFactor> {
    if !m.is_symmetric() {
        return Err(Error::InvalidArgument(
            "complex_ldlt requires symmetric storage".into(),
        ));
    }
    let n = m.n();
    let beta = m.beta();
    let pivot_floor = 1e-14 * m.max_abs();
    let mut l = BandedMatrix::<Complex64>::zeros(n, beta, false);
    let mut d = vec![Complex64::new(0.0, 0.0); n];
    for j in 0..n {
        let k_lo = j.saturating_sub(beta);
        let mut s = m.entry(j, j);
        for k in k_lo..j {
            let v = l.entry(j, k);
            s -= v * v * d[k];
        }
        if s.norm() < pivot_floor {
            return Err(Error::SingularPivot {
                index: j,
                modulus: s.norm(),
            });
        }
        d[j] = s;
        l.set_entry(j, j, Complex64::new(1.0, 0.0));
        for i in j + 1..=(j + beta).min(n - 1) {
            let mut t = m.entry(i, j);
            let k_lo_i = i.saturating_sub(beta).max(k_lo);
            for k in k_lo_i..j {
                t -= l.entry(i, k) * l.entry(j, k) * d[k];
            }
            l.set_entry(i, j, t / s);
        }
    }
    Ok(LdltFactor { l, d })
}

/// Entries r = q..=p_hat (0-based, inclusive) of the solution of
/// M s_q = e_q, via truncated forward substitution, diagonal scaling and
/// truncated backward substitution. With p_hat = n-1 the column is exact.
pub fn partial_inverse_column(f: &LdltFactor, q: usize, p_hat: usize) -> Vec<Complex64> {
    let n = f.l.n();
    let beta = f.l.beta();
    assert!(q <= p_hat && p_hat < n, "partial_inverse_column range");
    let len = p_hat - q + 1;
    // forward: L y = e_q, rows q..=p_hat (unit diagonal); rows < q are zero
    let mut y = vec![Complex64::new(0.0, 0.0); len];
    y[0] = Complex64::new(1.0, 0.0);
    for k in q + 1..=p_hat {
        let r_lo = k.saturating_sub(beta).max(q);
        let mut s = Complex64::new(0.0, 0.0);
        for r in r_lo..k {
            s += f.l.entry(k, r) * y[r - q];
        }
        y[k - q] = -s;
    }
    // diagonal
    for (off, v) in y.iter_mut().enumerate() {
        *v /= f.d[q + off];
    }
    // backward: L^T s = z, truncated at p_hat
    let mut s = y;
    for k in (q..p_hat).rev() {
        let r_hi = (k + beta).min(p_hat);
        let mut acc = Complex64::new(0.0, 0.0);
        for r in k + 1..=r_hi {
            acc += f.l.entry(r, k) * s[r - q];
        }
        s[k - q] -= acc;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{random_spd_banded, rng, toeplitz_tridiag};
    use rand::Rng;

    #[test]
    fn cholesky_scaled_identity() {
        let a = BandedMatrix::<f64>::scaled_identity(6, 4.0);
        let f = banded_cholesky(&a).unwrap();
        let mut e1 = vec![0.0; 6];
        e1[0] = 1.0;
        let x = chol_solve(&f, &e1);
        assert!((x[0] - 0.25).abs() < 1e-15);
        assert!(x[1..].iter().all(|&v| v == 0.0));
    }

    #[test]
    fn cholesky_toeplitz_residual() {
        let n = 50;
        let a = toeplitz_tridiag(n);
        let f = banded_cholesky(&a).unwrap();
        let mut r = rng(3);
        let b: Vec<f64> = (0..n).map(|_| r.gen_range(-1.0..1.0)).collect();
        let x = chol_solve(&f, &b);
        let ax = a.matvec(&x);
        let res: f64 = ax
            .iter()
            .zip(&b)
            .map(|(u, v)| (u - v) * (u - v))
            .sum::<f64>()
            .sqrt();
        let bn: f64 = b.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!(res / bn <= 1e-12, "relative residual {:.3e}", res / bn);
    }

    #[test]
    fn cholesky_reconstructs() {
        let a = random_spd_banded(40, 3, 11);
        let f = banded_cholesky(&a).unwrap();
        assert_eq!(f.beta(), 3);
        let lt = f.l().transpose();
        let llt = f.l().band_matmul(&lt).unwrap();
        let diff = llt.band_add(&a, -1.0).unwrap();
        assert!(diff.frob_norm() <= 1e-12 * a.frob_norm());
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let mut a = BandedMatrix::<f64>::zeros(3, 0, true);
        a.set_entry(0, 0, 1.0);
        a.set_entry(1, 1, -1.0);
        a.set_entry(2, 2, 1.0);
        assert!(matches!(banded_cholesky(&a), Err(Error::NotSpd(_))));
    }

    #[test]
    fn ldlt_scaled_identity() {
        let m = BandedMatrix::<Complex64>::scaled_identity(4, Complex64::new(2.0, 1.0));
        let f = complex_ldlt(&m).unwrap();
        for j in 0..4 {
            assert_eq!(f.l().entry(j, j), Complex64::new(1.0, 0.0));
            assert!((f.ddiag()[j] - Complex64::new(2.0, 1.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn ldlt_reconstructs_shifted_tridiag() {
        let n = 40;
        let a = toeplitz_tridiag(n).to_complex();
        let shift = Complex64::new(-1.0, 2.0);
        let m = a
            .band_add(
                &BandedMatrix::<Complex64>::scaled_identity(n, shift),
                -Complex64::new(1.0, 0.0),
            )
            .unwrap();
        let f = complex_ldlt(&m).unwrap();
        assert_eq!(f.beta(), 1);
        let rec = f.reconstruct();
        let diff = rec.band_add(&m, -Complex64::new(1.0, 0.0)).unwrap();
        assert!(diff.frob_norm() <= 1e-12 * m.frob_norm());
    }

    #[test]
    fn ldlt_matches_real_cholesky_on_spd() {
        let a = random_spd_banded(25, 2, 5);
        let f_chol = banded_cholesky(&a).unwrap();
        let f_ldlt = complex_ldlt(&a.to_complex()).unwrap();
        // D from LDL^T equals squared Cholesky diagonal, and is positive real
        for j in 0..25 {
            let d = f_ldlt.ddiag()[j];
            let c = f_chol.l().entry(j, j);
            assert!(d.im.abs() < 1e-13);
            assert!((d.re - c * c).abs() < 1e-10 * (c * c));
            assert!(d.re > 0.0);
        }
    }

    #[test]
    fn ldlt_flags_singular_pivot() {
        // M = t*A - xi*I with xi an eigenvalue of A (real shift on the spectrum)
        let n = 12;
        let a = toeplitz_tridiag(n).to_complex();
        let h = std::f64::consts::PI / (n as f64 + 1.0);
        let lam1 = 2.0 - 2.0 * h.cos();
        let m = a
            .band_add(
                &BandedMatrix::<Complex64>::scaled_identity(n, Complex64::new(lam1, 0.0)),
                -Complex64::new(1.0, 0.0),
            )
            .unwrap();
        assert!(matches!(
            complex_ldlt(&m),
            Err(Error::SingularPivot { .. })
        ));
    }

    #[test]
    fn partial_inverse_trivial_diagonal() {
        let m = BandedMatrix::<Complex64>::scaled_identity(8, Complex64::new(2.0, 0.0));
        let f = complex_ldlt(&m).unwrap();
        let s = partial_inverse_column(&f, 2, 4);
        assert_eq!(s.len(), 3);
        assert!((s[0] - Complex64::new(0.5, 0.0)).norm() < 1e-15);
        assert!(s[1].norm() == 0.0 && s[2].norm() == 0.0);
    }

    #[test]
    fn partial_inverse_full_column_matches_dense_inverse() {
        let n = 50;
        let a = random_spd_banded(n, 2, 21).to_complex();
        let shift = Complex64::new(-0.7, 1.3);
        let m = a
            .band_add(
                &BandedMatrix::<Complex64>::scaled_identity(n, shift),
                -Complex64::new(1.0, 0.0),
            )
            .unwrap();
        let f = complex_ldlt(&m).unwrap();
        let minv = m.to_dense().inverse().unwrap();
        for q in [0usize, 17, n - 1] {
            let s = partial_inverse_column(&f, q, n - 1);
            for (off, v) in s.iter().enumerate() {
                let expect = minv.get(q + off, q);
                assert!(
                    (v - expect).norm() <= 1e-12 * minv.max_abs(),
                    "q={q} off={off}"
                );
            }
        }
    }

    #[test]
    fn partial_inverse_truncated_is_close_where_tail_small() {
        // Strong complex shift => fast decay; truncated entries match the
        // dense inverse to within the neglected-tail size.
        let n = 60;
        let a = toeplitz_tridiag(n).to_complex();
        let shift = Complex64::new(-2.0, 3.0);
        let m = a
            .band_add(
                &BandedMatrix::<Complex64>::scaled_identity(n, shift),
                -Complex64::new(1.0, 0.0),
            )
            .unwrap();
        let f = complex_ldlt(&m).unwrap();
        let minv = m.to_dense().inverse().unwrap();
        let q = 10;
        let p_hat = 30;
        // tail bound: largest neglected entry magnitude in this column
        let tail: f64 = (p_hat + 1..n)
            .map(|r| minv.get(r, q).norm())
            .fold(0.0, f64::max);
        let s = partial_inverse_column(&f, q, p_hat);
        for (off, v) in s.iter().enumerate() {
            let expect = minv.get(q + off, q);
            assert!(
                (v - expect).norm() <= 10.0 * tail + 1e-14,
                "off={off}: {:.3e} vs tail {tail:.3e}",
                (v - expect).norm()
            );
        }
    }
}
