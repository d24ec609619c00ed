//! Banded approximation of the finite-horizon integral
//! X(tau) = int_0^tau e^{-tA} D e^{-tA} dt: rational approximation of the
//! exponential in partial-fraction form, banded truncated resolvents for
//! each pole, and a matrix-valued adaptive Gauss-Lobatto quadrature.

mod tables;

use crate::banded::BandedMatrix;
use crate::decay::{ShiftedResolvent, SpectralInterval};
use crate::error::{Error, Result};
use crate::factor::{complex_ldlt, partial_inverse_column};
use num_complex::Complex64;
use rayon::prelude::*;
use std::sync::Arc;

/// Poles and weights of the degree-nu rational approximation to e^{-lambda}
/// on [0, inf): conjugate pairs adjacent (positive imaginary part first) and,
/// for odd nu, one real negative pole last.
#[derive(Debug, Clone)]
pub struct RationalChebTable {
    nu: usize,
    poles: Vec<Complex64>,
    weights: Vec<Complex64>,
    real_pole_index: Option<usize>,
}

/// Table lookup for 4 <= nu <= 14.
pub fn cheb_table(nu: usize) -> Result<RationalChebTable> {
    let raw: &[(f64, f64, f64, f64)] = match nu {
        4 => &tables::TABLE_4,
        5 => &tables::TABLE_5,
        6 => &tables::TABLE_6,
        7 => &tables::TABLE_7,
        8 => &tables::TABLE_8,
        9 => &tables::TABLE_9,
        10 => &tables::TABLE_10,
        11 => &tables::TABLE_11,
        12 => &tables::TABLE_12,
        13 => &tables::TABLE_13,
        14 => &tables::TABLE_14,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "rational approximation degree {nu} outside 4..=14"
            )))
        }
    };
    let poles: Vec<Complex64> = raw.iter().map(|r| Complex64::new(r.0, r.1)).collect();
    let weights: Vec<Complex64> = raw.iter().map(|r| Complex64::new(r.2, r.3)).collect();
    let real_pole_index = if nu % 2 == 1 { Some(nu - 1) } else { None };
    Ok(RationalChebTable {
        nu,
        poles,
        weights,
        real_pole_index,
    })
}

impl RationalChebTable {
    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn poles(&self) -> &[Complex64] {
        &self.poles
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    pub fn real_pole_index(&self) -> Option<usize> {
        self.real_pole_index
    }

    /// One representative per conjugate pair plus, last, the real pole.
    /// Yields (pole, weight, pair_factor) with pair_factor 2 for pairs and
    /// 1 for the real pole.
    pub fn representatives(&self) -> Vec<(Complex64, Complex64, f64)> {
        let mut out = Vec::with_capacity(self.nu / 2 + 1);
        for p in 0..self.nu / 2 {
            out.push((self.poles[2 * p], self.weights[2 * p], 2.0));
        }
        if let Some(idx) = self.real_pole_index {
            out.push((self.poles[idx], self.weights[idx], 1.0));
        }
        out
    }

    /// R_nu(lambda) as the full partial-fraction sum.
    pub fn eval(&self, lambda: f64) -> f64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (xi, th) in self.poles.iter().zip(&self.weights) {
            acc += th / (Complex64::new(lambda, 0.0) - xi);
        }
        acc.re
    }
}

/// Banded approximation of (tA - xi I)^{-1}: column cutoffs from the
/// resolvent decay bound, truncated substitution per column, symmetric
/// assembly from the computed lower triangle.
pub fn banded_resolvent(
    a: &BandedMatrix<f64>,
    spec: &SpectralInterval,
    t: f64,
    xi: Complex64,
    eps_b: f64,
) -> Result<BandedMatrix<Complex64>> {
    let n = a.n();
    let m = a
        .to_complex()
        .scale(Complex64::new(t, 0.0))
        .band_add(
            &BandedMatrix::<Complex64>::scaled_identity(n, xi),
            -Complex64::new(1.0, 0.0),
        )?;
    let p_bar = match (ShiftedResolvent {
        t,
        xi,
        spec: *spec,
        n,
    })
    .decay()
    {
        Ok(d) => d.cutoff_offset(eps_b),
        // t = 0 or lambda_min = lambda_max: the shifted matrix is (close to)
        // a multiple of the identity; a minimal band suffices
        Err(Error::DegenerateInterval) => 2,
        Err(e) => return Err(e),
    };
    let factor = complex_ldlt(&m)?;
    let beta = p_bar.min(n - 1);
    let mut out = BandedMatrix::<Complex64>::zeros(n, beta, true);
    for q in 0..n {
        let p_hat = (q + p_bar).min(n - 1);
        let col = partial_inverse_column(&factor, q, p_hat);
        for (off, v) in col.into_iter().enumerate() {
            out.set_entry(q + off, q, v);
        }
    }
    Ok(out.truncate_small(0.0))
}

/// Banded R_nu(tA) ~ e^{-tA}: weighted real combination of the pole
/// resolvents, then entrywise truncation at eps_quad.
pub fn rational_exp(
    a: &BandedMatrix<f64>,
    spec: &SpectralInterval,
    t: f64,
    table: &RationalChebTable,
    eps_b: f64,
    eps_quad: f64,
) -> Result<BandedMatrix<f64>> {
    let reps = table.representatives();
    let parts: Vec<Result<BandedMatrix<f64>>> = reps
        .par_iter()
        .map(|&(xi, th, factor)| {
            let res = banded_resolvent(a, spec, t, xi, eps_b)?;
            Ok(weighted_real_part(&res, th, factor))
        })
        .collect();
    let mut acc: Option<BandedMatrix<f64>> = None;
    for p in parts {
        let p = p?;
        acc = Some(match acc {
            None => p,
            Some(s) => s.band_add(&p, 1.0)?,
        });
    }
    Ok(acc.expect("at least one pole").truncate_small(eps_quad))
}

/// factor * Re(theta * M) for complex symmetric banded M.
fn weighted_real_part(
    m: &BandedMatrix<Complex64>,
    theta: Complex64,
    factor: f64,
) -> BandedMatrix<f64> {
    let mut out = BandedMatrix::<f64>::zeros(m.n(), m.beta(), true);
    for k in 0..=m.beta() as isize {
        let src = m.diag(k).unwrap().to_vec();
        let dst = out.diag_mut(k);
        for (o, v) in dst.iter_mut().zip(src) {
            *o = factor * (theta * v).re;
        }
    }
    out
}

/// Matrix-valued adaptive Gauss-Lobatto quadrature: 4-point rule with
/// 7-point refinement; an interval is accepted when the Frobenius norm of
/// the coarse/fine difference falls below eps_quad times the Frobenius
/// estimate of the whole integral from the first pass. Depth cap 30.
pub fn adaptive_lobatto_banded(
    f: &(dyn Fn(f64) -> Result<BandedMatrix<f64>> + Sync),
    a: f64,
    b: f64,
    eps_quad: f64,
) -> Result<BandedMatrix<f64>> {
    let xs = lobatto_nodes(a, b);
    let mut ys = Vec::with_capacity(7);
    for &x in &xs {
        ys.push(Arc::new(f(x)?));
    }
    let ys: [Arc<BandedMatrix<f64>>; 7] = ys.try_into().unwrap();
    let first = kronrod_combo(&ys, 0.5 * (b - a))?;
    let scale = first.frob_norm();
    if scale == 0.0 {
        return Ok(first);
    }
    segment(f, a, b, ys, eps_quad * scale, 0)
}

const ALPHA: f64 = 0.816496580927726; // sqrt(2/3)
const BETA: f64 = 0.447213595499958; // 1/sqrt(5)

fn lobatto_nodes(a: f64, b: f64) -> [f64; 7] {
    let m = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    [
        a,
        m - ALPHA * h,
        m - BETA * h,
        m,
        m + BETA * h,
        m + ALPHA * h,
        b,
    ]
}

fn kronrod_combo(y: &[Arc<BandedMatrix<f64>>; 7], h: f64) -> Result<BandedMatrix<f64>> {
    let w = [77.0, 432.0, 625.0, 672.0, 625.0, 432.0, 77.0].map(|v| v * h / 1470.0);
    weighted_sum(y, &w)
}

fn lobatto_combo(y: &[Arc<BandedMatrix<f64>>; 7], h: f64) -> Result<BandedMatrix<f64>> {
    let w = [1.0, 0.0, 5.0, 0.0, 5.0, 0.0, 1.0].map(|v| v * h / 6.0);
    weighted_sum(y, &w)
}

fn weighted_sum(y: &[Arc<BandedMatrix<f64>>; 7], w: &[f64; 7]) -> Result<BandedMatrix<f64>> {
    let mut acc: Option<BandedMatrix<f64>> = None;
    for (m, &c) in y.iter().zip(w) {
        if c == 0.0 {
            continue;
        }
        acc = Some(match acc {
            None => m.scale(c),
            Some(s) => s.band_add(m, c)?,
        });
    }
    Ok(acc.unwrap())
}

fn segment(
    f: &(dyn Fn(f64) -> Result<BandedMatrix<f64>> + Sync),
    a: f64,
    b: f64,
    ys: [Arc<BandedMatrix<f64>>; 7],
    tol_abs: f64,
    depth: usize,
) -> Result<BandedMatrix<f64>> {
    let h = 0.5 * (b - a);
    let m = 0.5 * (a + b);
    let i1 = kronrod_combo(&ys, h)?;
    let i2 = lobatto_combo(&ys, h)?;
    let diff = i1.band_add(&i2, -1.0)?.frob_norm();
    if diff <= tol_abs || m <= a || m >= b {
        return Ok(i1);
    }
    if depth >= 30 {
        return Err(Error::QuadratureFailure(format!(
            "matrix quadrature depth cap on [{a:.3e}, {b:.3e}]"
        )));
    }
    let eval = |x: f64| -> Result<Arc<BandedMatrix<f64>>> { Ok(Arc::new(f(x)?)) };
    let xl = lobatto_nodes(a, m);
    let left = [
        ys[0].clone(),
        eval(xl[1])?,
        eval(xl[2])?,
        eval(xl[3])?,
        eval(xl[4])?,
        eval(xl[5])?,
        ys[3].clone(),
    ];
    let xr = lobatto_nodes(m, b);
    let right = [
        ys[3].clone(),
        eval(xr[1])?,
        eval(xr[2])?,
        eval(xr[3])?,
        eval(xr[4])?,
        eval(xr[5])?,
        ys[6].clone(),
    ];
    let l = segment(f, a, m, left, tol_abs, depth + 1)?;
    let r = segment(f, m, b, right, tol_abs, depth + 1)?;
    l.band_add(&r, 1.0)
}

/// X_B ~ X(tau): adaptive quadrature of R_nu(tA) D R_nu(tA) over [0, tau].
pub fn compute_xb(
    a: &BandedMatrix<f64>,
    d: &BandedMatrix<f64>,
    spec: &SpectralInterval,
    tau: f64,
    nu: usize,
    eps_b: f64,
    eps_quad: f64,
) -> Result<BandedMatrix<f64>> {
    let table = cheb_table(nu)?;
    let f = |t: f64| -> Result<BandedMatrix<f64>> {
        let r = rational_exp(a, spec, t, &table, eps_b, eps_quad)?;
        let rd = r.band_matmul(d)?;
        let rdr = rd.band_matmul(&r)?;
        Ok(rdr.sym_plus_transpose().scale(0.5))
    };
    adaptive_lobatto_banded(&f, 0.0, tau, eps_quad)
}

/// Two-coefficient analog: quadrature of R_nu(tA) D R_nu(tB).
#[allow(clippy::too_many_arguments)]
pub fn compute_xb_sylvester(
    a: &BandedMatrix<f64>,
    b: &BandedMatrix<f64>,
    d: &BandedMatrix<f64>,
    spec_a: &SpectralInterval,
    spec_b: &SpectralInterval,
    tau: f64,
    nu: usize,
    eps_b: f64,
    eps_quad: f64,
) -> Result<BandedMatrix<f64>> {
    let table = cheb_table(nu)?;
    let f = |t: f64| -> Result<BandedMatrix<f64>> {
        let ra = rational_exp(a, spec_a, t, &table, eps_b, eps_quad)?;
        let rb = rational_exp(b, spec_b, t, &table, eps_b, eps_quad)?;
        let rd = ra.band_matmul(d)?;
        rd.band_matmul(&rb)
    };
    adaptive_lobatto_banded(&f, 0.0, tau, eps_quad)
}
