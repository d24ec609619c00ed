//! Shared helpers for unit and integration tests.

use crate::banded::BandedMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_banded_general(n: usize, beta: usize, seed: u64) -> BandedMatrix<f64> {
    let mut r = rng(seed);
    let mut m = BandedMatrix::zeros(n, beta, false);
    for k in -(beta.min(n - 1) as isize)..=beta.min(n - 1) as isize {
        for v in m.diag_mut(k) {
            *v = r.gen_range(-1.0..1.0);
        }
    }
    m
}

pub fn random_banded_symmetric(n: usize, beta: usize, seed: u64) -> BandedMatrix<f64> {
    let mut r = rng(seed);
    let mut m = BandedMatrix::zeros(n, beta, true);
    for k in 0..=beta.min(n - 1) as isize {
        for v in m.diag_mut(k) {
            *v = r.gen_range(-1.0..1.0);
        }
    }
    m
}

/// Diagonally dominant random symmetric banded matrix (SPD by Gershgorin).
pub fn random_spd_banded(n: usize, beta: usize, seed: u64) -> BandedMatrix<f64> {
    let mut m = random_banded_symmetric(n, beta, seed);
    let mut r = rng(seed ^ 0x5eed);
    let mut row_sums = vec![0.0f64; n];
    for k in 1..=m.beta() as isize {
        let d = m.diag(k).unwrap().to_vec();
        for (p, v) in d.iter().enumerate() {
            row_sums[p + k as usize] += v.abs();
            row_sums[p] += v.abs();
        }
    }
    let diag = m.diag_mut(0);
    for (p, v) in diag.iter_mut().enumerate() {
        *v = row_sums[p] + r.gen_range(0.5..2.0);
    }
    m
}

/// Symmetric tridiagonal Toeplitz tridiag(-1, 2, -1).
pub fn toeplitz_tridiag(n: usize) -> BandedMatrix<f64> {
    let mut m = BandedMatrix::zeros(n, 1, true);
    for v in m.diag_mut(0) {
        *v = 2.0;
    }
    for v in m.diag_mut(1) {
        *v = -1.0;
    }
    m
}

/// Exact extreme eigenvalues of tridiag(-1, 2, -1) of order n.
pub fn toeplitz_tridiag_extremes(n: usize) -> (f64, f64) {
    let h = std::f64::consts::PI / (n as f64 + 1.0);
    (2.0 - 2.0 * h.cos(), 2.0 - 2.0 * ((n as f64) * h).cos())
}
