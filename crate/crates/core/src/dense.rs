//! Small dense matrices: projected problems, oracles, and test comparisons.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMat<T> {
    nrows: usize,
    ncols: usize,
    data: Vec<T>, // row-major
}

impl<T: Scalar> DenseMat<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        DenseMat {
            nrows,
            ncols,
            data: vec![T::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.ncols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.nrows).map(|i| self.get(i, j)).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[T]) {
        assert_eq!(v.len(), self.nrows);
        for (i, &x) in v.iter().enumerate() {
            self.set(i, j, x);
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ncols, self.nrows, |i, j| self.get(j, i))
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows, "matmul shape");
        let mut out = Self::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.abs() == 0.0 {
                    continue;
                }
                let orow = k * other.ncols;
                let crow = i * other.ncols;
                for j in 0..other.ncols {
                    out.data[crow + j] += a * other.data[orow + j];
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.ncols);
        (0..self.nrows)
            .map(|i| {
                let mut s = T::zero();
                for (j, &v) in x.iter().enumerate() {
                    s += self.get(i, j) * v;
                }
                s
            })
            .collect()
    }

    pub fn add_scaled(&self, other: &Self, alpha: T) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut out = self.clone();
        for (o, &v) in out.data.iter_mut().zip(&other.data) {
            *o += alpha * v;
        }
        out
    }

    pub fn scale(&self, c: T) -> Self {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= c;
        }
        out
    }

    pub fn frob_norm(&self) -> f64 {
        self.data
            .iter()
            .map(|v| v.abs() * v.abs())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> T {
        let mut s = T::zero();
        for i in 0..self.nrows.min(self.ncols) {
            s += self.get(i, i);
        }
        s
    }

    /// Solve A X = B by LU with partial pivoting (A square, consumed as copy).
    pub fn lu_solve(&self, rhs: &Self) -> Result<Self> {
        assert_eq!(self.nrows, self.ncols, "lu_solve: square");
        assert_eq!(rhs.nrows, self.nrows, "lu_solve: rhs rows");
        let n = self.nrows;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for k in 0..n {
            let mut piv = k;
            let mut best = a.get(k, k).abs();
            for i in k + 1..n {
                let v = a.get(i, k).abs();
                if v > best {
                    best = v;
                    piv = i;
                }
            }
            if best == 0.0 || !best.is_finite() {
                return Err(Error::Singular(format!("LU pivot {best:.3e} at column {k}")));
            }
            if piv != k {
                for j in 0..n {
                    let t = a.get(k, j);
                    a.set(k, j, a.get(piv, j));
                    a.set(piv, j, t);
                }
                for j in 0..b.ncols {
                    let t = b.get(k, j);
                    b.set(k, j, b.get(piv, j));
                    b.set(piv, j, t);
                }
            }
            let d = a.get(k, k);
            for i in k + 1..n {
                let m = a.get(i, k) / d;
                if m.abs() == 0.0 {
                    continue;
                }
                a.set(i, k, m);
                for j in k + 1..n {
                    let v = a.get(i, j) - m * a.get(k, j);
                    a.set(i, j, v);
                }
                for j in 0..b.ncols {
                    let v = b.get(i, j) - m * b.get(k, j);
                    b.set(i, j, v);
                }
            }
        }
        // back substitution
        let mut x = DenseMat::zeros(n, b.ncols);
        for j in 0..b.ncols {
            for ii in (0..n).rev() {
                let mut s = b.get(ii, j);
                for k in ii + 1..n {
                    s -= a.get(ii, k) * x.get(k, j);
                }
                x.set(ii, j, s / a.get(ii, ii));
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Self> {
        self.lu_solve(&Self::identity(self.nrows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn lu_solves_small_real_system() {
        let a = DenseMat::from_fn(3, 3, |i, j| if i == j { 4.0 } else { 1.0 / (1.0 + i as f64 + j as f64) });
        let x_true = DenseMat::from_fn(3, 1, |i, _| i as f64 + 1.0);
        let b = a.matmul(&x_true);
        let x = a.lu_solve(&b).unwrap();
        for i in 0..3 {
            assert!((x.get(i, 0) - x_true.get(i, 0)).abs() < 1e-12);
        }
    }

    #[test]
    fn lu_complex_inverse() {
        let a = DenseMat::from_fn(4, 4, |i, j| {
            Complex64::new(
                if i == j { 3.0 } else { 0.2 * (i as f64 - j as f64) },
                if i == j { 1.0 } else { 0.1 },
            )
        });
        let inv = a.inverse().unwrap();
        let prod = a.matmul(&inv);
        let eye = DenseMat::<Complex64>::identity(4);
        let diff = prod.add_scaled(&eye, Complex64::new(-1.0, 0.0));
        assert!(diff.max_abs() < 1e-13);
    }

    #[test]
    fn lu_rejects_singular() {
        let a = DenseMat::<f64>::zeros(2, 2);
        assert!(a.lu_solve(&DenseMat::identity(2)).is_err());
    }
}
