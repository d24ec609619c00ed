//! Entrywise decay estimates for Lyapunov solutions, shifted resolvents and
//! matrix exponentials, plus the automatic horizon (tau) and bandwidth-cutoff
//! selections built on them.

use crate::banded::BandedMatrix;
use crate::error::{Error, Result};
use crate::quad::adaptive_lobatto;
use num_complex::Complex64;
use std::cell::RefCell;
use std::collections::HashMap;

/// Spectral data of an SPD banded coefficient matrix.
#[derive(Debug, Clone, Copy)]
pub struct SpectralInterval {
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub beta_a: usize,
}

impl SpectralInterval {
    pub fn new(lambda_min: f64, lambda_max: f64, beta_a: usize) -> Self {
        assert!(lambda_min > 0.0 && lambda_min <= lambda_max && beta_a > 0);
        SpectralInterval {
            lambda_min,
            lambda_max,
            beta_a,
        }
    }

    pub fn kappa(&self) -> f64 {
        self.lambda_max / self.lambda_min
    }
}

/// Single-rate geometric bound on |X_{i,j}| obtained by treating the
/// Kronecker system matrix as banded with bandwidth n*beta_A.
pub fn geometric_solution_bound(
    spec: &SpectralInterval,
    d: &BandedMatrix<f64>,
    i: usize,
    j: usize,
) -> f64 {
    let n = d.n();
    let kappa = spec.kappa();
    let sk = kappa.sqrt();
    let tau = 1.0 / (2.0 * spec.lambda_max) * (1.0f64).max((1.0 + sk).powi(2) / (2.0 * kappa));
    let rho = ((sk - 1.0) / (sk + 1.0)).powf(1.0 / (n as f64 * spec.beta_a as f64));
    let mut acc = 0.0;
    for_each_entry(d, |k, l, v| {
        let dist = ((l as i64 - j as i64) * n as i64 + k as i64 - i as i64).unsigned_abs();
        acc += v.abs() * rho.powf(dist as f64);
    });
    tau * acc
}

/// Kronecker-structure bound on |X_{i,j}| (three-case coefficients with
/// omega-integrals). Integrals are cached per (case, index-distance), so
/// reuse one context for many queries on the same problem.
pub struct KronBoundCtx {
    spec: SpectralInterval,
    cache: RefCell<HashMap<(u8, u64), f64>>,
}

impl KronBoundCtx {
    pub fn new(spec: SpectralInterval) -> Self {
        KronBoundCtx {
            spec,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn bound(&self, d: &BandedMatrix<f64>, i: usize, j: usize) -> Result<f64> {
        let mut acc = 0.0;
        let mut err = None;
        for_each_entry(d, |k, l, v| {
            if err.is_some() {
                return;
            }
            let di = k.abs_diff(i) as u64;
            let dj = l.abs_diff(j) as u64;
            let theta = match (di == 0, dj == 0) {
                (true, true) => Ok(1.0 / (2.0 * self.spec.lambda_min)),
                (false, true) | (true, false) => self.theta_one_equal(di + dj),
                (false, false) => self.theta_none_equal(di + dj),
            };
            match theta {
                Ok(t) => acc += t * v.abs(),
                Err(e) => err = Some(e),
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(acc),
        }
    }

    fn theta_one_equal(&self, s: u64) -> Result<f64> {
        if let Some(&v) = self.cache.borrow().get(&(1, s)) {
            return Ok(v);
        }
        let spec = self.spec;
        let delta = spec.lambda_max - spec.lambda_min;
        let g = s as f64 / spec.beta_a as f64;
        let integrand = move |w: f64| {
            let r = ellipse_r(&spec, w);
            let base = r * r / ((r * r - 1.0) * (r * r - 1.0));
            (spec.lambda_min * spec.lambda_min + w * w).sqrt().recip()
                * base
                * r.powf(-(g - 1.0))
        };
        let v = 8.0 / (2.0 * std::f64::consts::PI * delta) * even_integral(&integrand)?;
        self.cache.borrow_mut().insert((1, s), v);
        Ok(v)
    }

    fn theta_none_equal(&self, s: u64) -> Result<f64> {
        if let Some(&v) = self.cache.borrow().get(&(2, s)) {
            return Ok(v);
        }
        let spec = self.spec;
        let delta = spec.lambda_max - spec.lambda_min;
        let g = s as f64 / spec.beta_a as f64;
        let integrand = move |w: f64| {
            let r = ellipse_r(&spec, w);
            let base = r * r / ((r * r - 1.0) * (r * r - 1.0));
            base * base * r.powf(-(g - 2.0))
        };
        let v = 64.0 / (2.0 * std::f64::consts::PI * delta * delta) * even_integral(&integrand)?;
        self.cache.borrow_mut().insert((2, s), v);
        Ok(v)
    }
}

fn ellipse_r(spec: &SpectralInterval, w: f64) -> f64 {
    let l1 = (spec.lambda_min * spec.lambda_min + w * w).sqrt();
    let l2 = (spec.lambda_max * spec.lambda_max + w * w).sqrt();
    let alpha = (l1 + l2) / (spec.lambda_max - spec.lambda_min);
    alpha + (alpha * alpha - 1.0).max(0.0).sqrt()
}

/// Integral over (-inf, inf) of an even integrand: 2 * int_0^Omega with the
/// truncation Omega doubled until the tail contributes < 1e-3 relative.
fn even_integral(f: &(dyn Fn(f64) -> f64 + '_)) -> Result<f64> {
    let mut omega = 1.0f64.max(f(0.0).abs().recip().min(1e3));
    let mut total = adaptive_lobatto(&|w| f(w), 0.0, omega, 1e-4)?;
    for _ in 0..60 {
        let tail = adaptive_lobatto(&|w| f(w), omega, 2.0 * omega, 1e-4)?;
        total += tail;
        omega *= 2.0;
        if tail.abs() < 1e-3 * total.abs() {
            return Ok(2.0 * total);
        }
    }
    Err(Error::QuadratureFailure(
        "omega-integral tail did not settle".into(),
    ))
}

/// Convenience one-shot form of the Kronecker-structure bound.
pub fn kron_solution_bound(
    spec: &SpectralInterval,
    d: &BandedMatrix<f64>,
    i: usize,
    j: usize,
) -> Result<f64> {
    KronBoundCtx::new(*spec).bound(d, i, j)
}

fn for_each_entry(d: &BandedMatrix<f64>, mut f: impl FnMut(usize, usize, f64)) {
    let b = d.beta() as isize;
    for k in -b..=b {
        if let Some(diag) = d.diag(k) {
            let ro = k.max(0) as usize;
            let co = (-k).max(0) as usize;
            for (p, &v) in diag.iter().enumerate() {
                if v != 0.0 {
                    f(p + ro, p + co, v);
                }
            }
        }
    }
}

/// Decay data of the shifted matrix M = t A - xi I.
#[derive(Debug, Clone, Copy)]
pub struct ShiftedResolvent {
    pub t: f64,
    pub xi: Complex64,
    pub spec: SpectralInterval,
    pub n: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct ResolventDecay {
    pub r: f64,
    pub b_of_a: f64,
    pub delta: f64,
    beta_a: usize,
    n: usize,
}

impl ShiftedResolvent {
    /// Ellipse data for the entry-decay estimate of (tA - xi I)^{-1}.
    pub fn decay(&self) -> Result<ResolventDecay> {
        let l1 = Complex64::new(self.t * self.spec.lambda_min, 0.0) - self.xi;
        let l2 = Complex64::new(self.t * self.spec.lambda_max, 0.0) - self.xi;
        let dc = l2 - l1; // real: t * (lambda_max - lambda_min)
        let delta = dc.norm();
        if delta == 0.0 {
            return Err(Error::DegenerateInterval);
        }
        let alpha = (l1.norm() + l2.norm()) / delta;
        let r = alpha + (alpha * alpha - 1.0).max(0.0).sqrt();
        let a = (l1 + l2) / dc;
        let zeta = 0.5 * (r + 1.0 / r);
        let eta = 0.5 * (r - 1.0 / r);
        let cos_psi = a.re / zeta;
        let sin_psi = if eta > 0.0 { a.im / eta } else { 0.0 };
        let mismatch = (cos_psi * cos_psi + sin_psi * sin_psi - 1.0).abs();
        if mismatch > 1e-6 {
            return Err(Error::EllipseInconsistency(mismatch));
        }
        let root = (zeta * zeta - cos_psi * cos_psi).max(0.0).sqrt();
        if eta == 0.0 || root == 0.0 {
            return Err(Error::DegenerateInterval);
        }
        let b_of_a = r / (eta * root * (zeta + root));
        Ok(ResolventDecay {
            r,
            b_of_a,
            delta,
            beta_a: self.spec.beta_a,
            n: self.n,
        })
    }
}

impl ResolventDecay {
    /// Bound on |(M^{-1})_{p,q}| for p != q.
    pub fn entry_bound(&self, p: usize, q: usize) -> Result<f64> {
        if p == q {
            return Err(Error::InvalidArgument(
                "resolvent decay bound applies to off-diagonal entries only".into(),
            ));
        }
        Ok(self.offset_bound(p.abs_diff(q)))
    }

    pub fn offset_bound(&self, dist: usize) -> f64 {
        2.0 * self.r / self.delta
            * self.b_of_a
            * self.r.powf(-(dist as f64) / self.beta_a as f64)
    }

    /// Smallest offset (>= 2) beyond which the bound drops below eps_b.
    pub fn cutoff_offset(&self, eps_b: f64) -> usize {
        let num = 2.0 * self.r * self.b_of_a / (self.delta * eps_b);
        let p = (self.beta_a as f64 * num.ln() / self.r.ln()).ceil();
        if p.is_finite() && p > 2.0 {
            p as usize
        } else {
            2
        }
    }

    /// Last row index (0-based) of column q kept by the truncation.
    pub fn cutoff_hat(&self, q: usize, eps_b: f64) -> usize {
        (q + self.cutoff_offset(eps_b)).min(self.n - 1)
    }
}

/// Entry bound for the exponential of a banded Hermitian PSD matrix with
/// spectrum in [0, 4 rho]; +infinity outside the proven regimes.
pub fn exp_entry_bound(rho: f64, t: f64, beta_m: usize, k: usize, l: usize) -> f64 {
    if k == l {
        return f64::INFINITY;
    }
    let xi = (k.abs_diff(l) as f64 / beta_m as f64).ceil();
    let rt = rho * t;
    let mut best = f64::INFINITY;
    if rt >= 1.0 && (4.0 * rt).sqrt() <= xi && xi <= 2.0 * rt {
        best = best.min(10.0 * (-xi * xi / (5.0 * rt)).exp());
    }
    if xi >= 2.0 * rt {
        best = best.min(10.0 * (-rt).exp() / rt * (std::f64::consts::E * rt / xi).powf(xi));
    }
    best
}

/// Selected splitting horizon and the data that produced it.
#[derive(Debug, Clone, Copy)]
pub struct TauChoice {
    pub tau: f64,
    pub xi_bar: usize,
    pub rho: f64,
    pub eps_tau: f64,
    pub beta_max: usize,
}

/// Bound profile f_i(t) for the first column of e^{-tA}: row index i is
/// 1-based, xi_i = ceil((i-1)/beta_A).
pub fn exp_column_profile(spec: &SpectralInterval, rho: f64, i_row: usize, t: f64) -> f64 {
    let xi = ((i_row - 1) as f64 / spec.beta_a as f64).ceil();
    10.0 * (-xi * xi / (5.0 * rho * t)).exp() * (-t * spec.lambda_min).exp()
}

/// Closed-form horizon so that the exponential's first column is ~eps_tau at
/// row beta_max and below eps_tau past it.
pub fn select_tau(spec: &SpectralInterval, beta_max: usize, eps_tau: f64) -> Result<TauChoice> {
    assert!(beta_max >= 2 && eps_tau > 0.0);
    let rho = (spec.lambda_max - spec.lambda_min) / 4.0;
    let xi_bar = ((beta_max as f64 - 1.0) / spec.beta_a as f64).ceil();
    let log_e = (eps_tau / 10.0).ln();
    let disc = 25.0 * rho * rho * log_e * log_e
        - 20.0 * rho * spec.lambda_min * xi_bar * xi_bar;
    if disc < 0.0 || rho <= 0.0 {
        return Err(Error::NoAdmissibleTau {
            beta_max,
            discriminant: disc,
        });
    }
    let tau = (-5.0 * rho * log_e - disc.sqrt()) / (10.0 * rho * spec.lambda_min);
    Ok(TauChoice {
        tau,
        xi_bar: xi_bar as usize,
        rho,
        eps_tau,
        beta_max,
    })
}

/// Predicted CG iteration count at a relative tolerance, from the condition
/// number of the Kronecker system (equal to kappa(A)).
pub fn predicted_cg_iterations(kappa: f64, eps_res: f64) -> usize {
    assert!(kappa >= 1.0 && eps_res > 0.0 && eps_res < 1.0);
    if kappa == 1.0 {
        return 1;
    }
    let sigma = (1.0 - (1.0 / kappa).sqrt()) / (1.0 + (1.0 / kappa).sqrt());
    let num = (1.0 / eps_res + (1.0 / (eps_res * eps_res) - 1.0).sqrt()).ln();
    (num / (1.0 / sigma).ln()).round() as usize
}
