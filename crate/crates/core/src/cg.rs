//! Matrix-oriented conjugate gradient for Lyapunov and Sylvester equations
//! in band arithmetic. All iterates stay banded with bandwidth growing
//! linearly in the iteration count.

use crate::banded::BandedMatrix;
use crate::error::{Error, Result};
use std::time::Instant;

#[derive(Debug, Clone, Copy)]
pub struct IterateBandwidths {
    pub iter: usize,
    pub beta_w: usize,
    pub beta_x: usize,
    pub beta_r: usize,
    pub beta_p: usize,
}

#[derive(Debug, Clone)]
pub struct CgReport {
    pub iterations: usize,
    pub final_relres: f64,
    pub beta_x: usize,
    pub residual_history: Vec<(usize, f64)>,
    /// Actual (nonzero) bandwidths of W, X, R, P per iteration.
    pub bandwidth_history: Vec<IterateBandwidths>,
    pub converged: bool,
    pub seconds: f64,
}

/// CG on AX + XA = D with symmetric banded iterates. One banded product per
/// iteration: W = S + S^T with S = A P. Stops on ||R_k||_F / ||R_0||_F <
/// eps_res; eps_res = 0 runs exactly m_max iterations.
pub fn lyap_cg(
    a: &BandedMatrix<f64>,
    d: &BandedMatrix<f64>,
    x0: Option<&BandedMatrix<f64>>,
    eps_res: f64,
    m_max: usize,
) -> Result<(BandedMatrix<f64>, CgReport)> {
    if !a.is_symmetric() || !d.is_symmetric() {
        return Err(Error::InvalidArgument(
            "lyap_cg expects symmetric A and D".into(),
        ));
    }
    if a.n() != d.n() {
        return Err(Error::ShapeMismatch(format!(
            "lyap_cg: {} vs {}",
            a.n(),
            d.n()
        )));
    }
    let start = Instant::now();
    let mut x = match x0 {
        Some(m) => m.clone(),
        None => BandedMatrix::zeros(a.n(), 0, true),
    };
    let mut r = residual_lyap(a, &x, d)?;
    let r0_norm = r.frob_norm();
    let mut report = CgReport {
        iterations: 0,
        final_relres: 0.0,
        beta_x: x.beta(),
        residual_history: Vec::new(),
        bandwidth_history: Vec::new(),
        converged: true,
        seconds: 0.0,
    };
    if r0_norm == 0.0 {
        report.seconds = start.elapsed().as_secs_f64();
        return Ok((x, report));
    }
    let mut p = r.clone();
    let mut rho = r.frob_inner(&r)?;
    for k in 1..=m_max {
        let s = a.band_matmul(&p)?;
        let w = s.sym_plus_transpose();
        let pw = p.frob_inner(&w)?;
        if pw.abs() < 1e-300 {
            return Err(Error::Breakdown(format!(
                "<P, W> = {pw:.3e} at iteration {k}"
            )));
        }
        if pw <= 0.0 {
            return Err(Error::NotSpd(format!(
                "<P, AP + PA> = {pw:.3e} <= 0 at iteration {k}"
            )));
        }
        let alpha = rho / pw;
        x = x.band_add(&p, alpha)?;
        if k % 50 == 0 {
            // refresh from scratch to guard against recurrence drift
            r = residual_lyap(a, &x, d)?;
        } else {
            r = r.band_add(&w, -alpha)?;
        }
        let rho_new = r.frob_inner(&r)?;
        let relres = rho_new.sqrt() / r0_norm;
        report.iterations = k;
        report.residual_history.push((k, relres));
        report.bandwidth_history.push(IterateBandwidths {
            iter: k,
            beta_w: w.nonzero_bandwidth(),
            beta_x: x.nonzero_bandwidth(),
            beta_r: r.nonzero_bandwidth(),
            beta_p: p.nonzero_bandwidth(),
        });
        report.final_relres = relres;
        if eps_res > 0.0 && relres < eps_res {
            report.beta_x = x.beta();
            report.seconds = start.elapsed().as_secs_f64();
            return Ok((x, report));
        }
        let beta = rho_new / rho;
        rho = rho_new;
        p = r.band_add(&p, beta)?;
    }
    report.converged = eps_res == 0.0;
    report.beta_x = x.beta();
    report.seconds = start.elapsed().as_secs_f64();
    Ok((x, report))
}

/// CG on AX + XB = D. No iterate is symmetric, so both banded products are
/// formed each iteration.
pub fn sylv_cg(
    a: &BandedMatrix<f64>,
    b: &BandedMatrix<f64>,
    d: &BandedMatrix<f64>,
    x0: Option<&BandedMatrix<f64>>,
    eps_res: f64,
    m_max: usize,
) -> Result<(BandedMatrix<f64>, CgReport)> {
    if !a.is_symmetric() || !b.is_symmetric() {
        return Err(Error::InvalidArgument(
            "sylv_cg expects symmetric A and B".into(),
        ));
    }
    if a.n() != d.n() || b.n() != d.n() {
        return Err(Error::ShapeMismatch("sylv_cg: order mismatch".into()));
    }
    let start = Instant::now();
    let d = d.to_general(d.beta());
    let mut x = match x0 {
        Some(m) => m.to_general(m.beta()),
        None => BandedMatrix::zeros(a.n(), 0, false),
    };
    let mut r = residual_sylv(a, b, &x, &d)?;
    let r0_norm = r.frob_norm();
    let mut report = CgReport {
        iterations: 0,
        final_relres: 0.0,
        beta_x: x.beta(),
        residual_history: Vec::new(),
        bandwidth_history: Vec::new(),
        converged: true,
        seconds: 0.0,
    };
    if r0_norm == 0.0 {
        report.seconds = start.elapsed().as_secs_f64();
        return Ok((x, report));
    }
    let mut p = r.clone();
    let mut rho = r.frob_inner(&r)?;
    for k in 1..=m_max {
        let w = a.band_matmul(&p)?.band_add(&p.band_matmul(b)?, 1.0)?;
        let pw = p.frob_inner(&w)?;
        if pw.abs() < 1e-300 {
            return Err(Error::Breakdown(format!(
                "<P, W> = {pw:.3e} at iteration {k}"
            )));
        }
        if pw <= 0.0 {
            return Err(Error::NotSpd(format!(
                "<P, AP + PB> = {pw:.3e} <= 0 at iteration {k}"
            )));
        }
        let alpha = rho / pw;
        x = x.band_add(&p, alpha)?;
        if k % 50 == 0 {
            r = residual_sylv(a, b, &x, &d)?;
        } else {
            r = r.band_add(&w, -alpha)?;
        }
        let rho_new = r.frob_inner(&r)?;
        let relres = rho_new.sqrt() / r0_norm;
        report.iterations = k;
        report.residual_history.push((k, relres));
        report.bandwidth_history.push(IterateBandwidths {
            iter: k,
            beta_w: w.nonzero_bandwidth(),
            beta_x: x.nonzero_bandwidth(),
            beta_r: r.nonzero_bandwidth(),
            beta_p: p.nonzero_bandwidth(),
        });
        report.final_relres = relres;
        if eps_res > 0.0 && relres < eps_res {
            report.beta_x = x.beta();
            report.seconds = start.elapsed().as_secs_f64();
            return Ok((x, report));
        }
        let beta = rho_new / rho;
        rho = rho_new;
        p = r.band_add(&p, beta)?;
    }
    report.converged = eps_res == 0.0;
    report.beta_x = x.beta();
    report.seconds = start.elapsed().as_secs_f64();
    Ok((x, report))
}

/// D - AX - XA for symmetric A, X, D.
pub fn residual_lyap(
    a: &BandedMatrix<f64>,
    x: &BandedMatrix<f64>,
    d: &BandedMatrix<f64>,
) -> Result<BandedMatrix<f64>> {
    let s = a.band_matmul(x)?;
    let axxa = s.sym_plus_transpose();
    d.band_add(&axxa, -1.0)
}

/// D - AX - XB.
pub fn residual_sylv(
    a: &BandedMatrix<f64>,
    b: &BandedMatrix<f64>,
    x: &BandedMatrix<f64>,
    d: &BandedMatrix<f64>,
) -> Result<BandedMatrix<f64>> {
    let ax = a.band_matmul(x)?;
    let xb = x.band_matmul(b)?;
    d.band_add(&ax.band_add(&xb, 1.0)?, -1.0)
}
