//! Adaptive Gauss-Lobatto quadrature (4-point rule with 7-point refinement).

use crate::error::{Error, Result};

const ALPHA: f64 = 0.816496580927726; // sqrt(2/3)
const BETA: f64 = 0.447213595499958; // 1/sqrt(5)

/// Integrate f over [a, b] to a relative tolerance.
pub fn adaptive_lobatto(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol_rel: f64) -> Result<f64> {
    let (i1, ys) = kronrod_pass(f, a, b);
    let scale = i1.abs().max(1e-300);
    let tol = tol_rel * scale;
    let mut acc = 0.0;
    segment(f, a, b, ys, tol, 0, &mut acc)?;
    Ok(acc)
}

fn nodes(a: f64, b: f64) -> [f64; 7] {
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

fn kronrod_pass(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, [f64; 7]) {
    let xs = nodes(a, b);
    let ys = xs.map(f);
    (kronrod_sum(&ys, 0.5 * (b - a)), ys)
}

fn kronrod_sum(y: &[f64; 7], h: f64) -> f64 {
    h / 1470.0
        * (77.0 * (y[0] + y[6]) + 432.0 * (y[1] + y[5]) + 625.0 * (y[2] + y[4]) + 672.0 * y[3])
}

fn lobatto_sum(y: &[f64; 7], h: f64) -> f64 {
    h / 6.0 * (y[0] + y[6] + 5.0 * (y[2] + y[4]))
}

fn segment(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    ys: [f64; 7],
    tol: f64,
    depth: usize,
    acc: &mut f64,
) -> Result<()> {
    let h = 0.5 * (b - a);
    let i1 = kronrod_sum(&ys, h);
    let i2 = lobatto_sum(&ys, h);
    let m = 0.5 * (a + b);
    if (i1 - i2).abs() <= tol || m <= a || m >= b {
        *acc += i1;
        return Ok(());
    }
    if depth >= 48 {
        return Err(Error::QuadratureFailure(format!(
            "recursion depth exceeded on [{a}, {b}]"
        )));
    }
    let (_, yl) = kronrod_pass(f, a, m);
    let (_, yr) = kronrod_pass(f, m, b);
    segment(f, a, m, yl, tol * 0.7071, depth + 1, acc)?;
    segment(f, m, b, yr, tol * 0.7071, depth + 1, acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_near_exact() {
        let v = adaptive_lobatto(&|x| x * x * x - 2.0 * x + 1.0, 0.0, 2.0, 1e-10).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn decaying_exponential() {
        let v = adaptive_lobatto(&|x| (-x).exp(), 0.0, 40.0, 1e-8).unwrap();
        assert!((v - 1.0).abs() < 1e-7, "{v}");
    }

    #[test]
    fn stiff_integrand_refines() {
        // int_0^1 1/sqrt(x+1e-6) dx
        let v = adaptive_lobatto(&|x| 1.0 / (x + 1e-6).sqrt(), 0.0, 1.0, 1e-8).unwrap();
        let exact = 2.0 * ((1.0f64 + 1e-6).sqrt() - 1e-3);
        assert!((v - exact).abs() < 1e-5 * exact, "{v} vs {exact}");
    }
}
