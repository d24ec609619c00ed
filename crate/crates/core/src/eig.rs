//! Dense symmetric eigendecomposition: Householder tridiagonalization
//! followed by implicit-shift QL iteration, eigenvalues ascending.

use crate::dense::DenseMat;
use crate::error::{Error, Result};

pub struct EigDecomp {
    /// Orthogonal matrix, columns are eigenvectors.
    pub q: DenseMat<f64>,
    /// Eigenvalues in ascending order.
    pub lambda: Vec<f64>,
}

/// Eigendecomposition M = Q diag(lambda) Q^T of a symmetric matrix.
///
/// Contract: ||M Q - Q diag(lambda)||_F <= 1e-12 * m * ||M||_F and
/// Q^T Q = I to 1e-12, checked in tests.
pub fn sym_eig_dense(m: &DenseMat<f64>) -> Result<EigDecomp> {
    if m.nrows() != m.ncols() {
        return Err(Error::ShapeMismatch("sym_eig_dense: square".into()));
    }
    let n = m.nrows();
    let mut v = m.clone();
    let mut d = vec![0.0f64; n];
    let mut e = vec![0.0f64; n];

    tred2(&mut v, &mut d, &mut e);
    tql2(&mut v, &mut d, &mut e)?;

    // sort ascending with eigenvector columns
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).unwrap());
    let lambda: Vec<f64> = idx.iter().map(|&i| d[i]).collect();
    let mut q = DenseMat::zeros(n, n);
    for (jnew, &jold) in idx.iter().enumerate() {
        for i in 0..n {
            q.set(i, jnew, v.get(i, jold));
        }
    }
    Ok(EigDecomp { q, lambda })
}

fn tred2(v: &mut DenseMat<f64>, d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    for j in 0..n {
        d[j] = v.get(n - 1, j);
    }

    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v.get(i - 1, j);
                v.set(i, j, 0.0);
                v.set(j, i, 0.0);
            }
        } else {
            for item in d.iter_mut().take(i) {
                *item /= scale;
                h += *item * *item;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for j in 0..i {
                e[j] = 0.0;
            }

            for j in 0..i {
                f = d[j];
                v.set(j, i, f);
                g = e[j] + v.get(j, j) * f;
                for k in j + 1..i {
                    g += v.get(k, j) * d[k];
                    e[k] += v.get(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    let val = v.get(k, j) - (f * e[k] + g * d[k]);
                    v.set(k, j, val);
                }
                d[j] = v.get(i - 1, j);
                v.set(i, j, 0.0);
            }
        }
        d[i] = h;
    }

    for i in 0..n - 1 {
        v.set(n - 1, i, v.get(i, i));
        v.set(i, i, 1.0);
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v.get(k, i + 1) / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v.get(k, i + 1) * v.get(k, j);
                }
                for k in 0..=i {
                    let val = v.get(k, j) - g * d[k];
                    v.set(k, j, val);
                }
            }
        }
        for k in 0..=i {
            v.set(k, i + 1, 0.0);
        }
    }
    for j in 0..n {
        d[j] = v.get(n - 1, j);
        v.set(n - 1, j, 0.0);
    }
    v.set(n - 1, n - 1, 1.0);
    e[0] = 0.0;
}

fn tql2(v: &mut DenseMat<f64>, d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0f64;
    let mut tst1 = 0.0f64;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m >= n {
            m = n - 1;
        }

        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > 50 {
                    return Err(Error::NoConvergence(
                        "tql2: more than 50 QL iterations".into(),
                    ));
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
                for i in l + 2..n {
                    d[i] -= h;
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
                        h = v.get(k, i + 1);
                        let val_i = v.get(k, i);
                        v.set(k, i + 1, s * val_i + c * h);
                        v.set(k, i, c * val_i - s * h);
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
    use crate::test_util::rng;
    use rand::Rng;

    #[test]
    fn diagonal_matrix() {
        let mut m = DenseMat::zeros(2, 2);
        m.set(0, 0, 3.0);
        m.set(1, 1, 1.0);
        let ed = sym_eig_dense(&m).unwrap();
        assert!((ed.lambda[0] - 1.0).abs() < 1e-14);
        assert!((ed.lambda[1] - 3.0).abs() < 1e-14);
        // eigenvectors are (+-e2, +-e1)
        assert!(ed.q.get(1, 0).abs() > 0.999);
        assert!(ed.q.get(0, 1).abs() > 0.999);
    }

    #[test]
    fn analytic_two_by_two() {
        let mut m = DenseMat::zeros(2, 2);
        m.set(0, 0, 2.0);
        m.set(0, 1, 1.0);
        m.set(1, 0, 1.0);
        m.set(1, 1, 2.0);
        let ed = sym_eig_dense(&m).unwrap();
        assert!((ed.lambda[0] - 1.0).abs() < 1e-14);
        assert!((ed.lambda[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn random_50_contracts() {
        let n = 50;
        let mut r = rng(4);
        let mut m = DenseMat::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let v = r.gen_range(-1.0..1.0);
                m.set(i, j, v);
                m.set(j, i, v);
            }
        }
        let ed = sym_eig_dense(&m).unwrap();
        let norm = m.frob_norm();

        // residual ||MQ - Q Lambda||
        let mq = m.matmul(&ed.q);
        let mut ql = ed.q.clone();
        for j in 0..n {
            for i in 0..n {
                ql.set(i, j, ql.get(i, j) * ed.lambda[j]);
            }
        }
        let resid = mq.add_scaled(&ql, -1.0).frob_norm();
        assert!(resid <= 1e-12 * n as f64 * norm, "resid {resid:.3e}");

        // orthogonality
        let qtq = ed.q.transpose().matmul(&ed.q);
        let eye = DenseMat::identity(n);
        assert!(qtq.add_scaled(&eye, -1.0).max_abs() <= 1e-12);

        // ascending
        for w in ed.lambda.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }
}
