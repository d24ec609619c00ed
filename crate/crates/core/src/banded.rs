//! Banded matrix storage and band-limited kernels.
//!
//! Storage is diagonal-major: each diagonal is a contiguous slice. Diagonal
//! `k` (row - col = k) holds entries (p + max(k,0), p + max(-k,0)) for
//! p = 0..n-|k|. Symmetric matrices store only k >= 0; the stored diagonal k
//! doubles as the logical diagonal -k because entry(i,j) = entry(j,i).

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq)]
pub struct BandedMatrix<T> {
    n: usize,
    beta: usize,
    symmetric: bool,
    /// Flat diagonal-major storage; `offsets[d]` is the start of stored diagonal d.
    data: Vec<T>,
    offsets: Vec<usize>,
    /// Stored diagonal indices, in storage order.
    diag_index: Vec<isize>,
}

impl<T: Scalar> BandedMatrix<T> {
    pub fn zeros(n: usize, beta: usize, symmetric: bool) -> Self {
        assert!(n > 0, "empty matrix");
        let beta = beta.min(n - 1);
        let diag_index: Vec<isize> = if symmetric {
            (0..=beta as isize).collect()
        } else {
            (-(beta as isize)..=beta as isize).collect()
        };
        let mut offsets = Vec::with_capacity(diag_index.len());
        let mut total = 0usize;
        for &k in &diag_index {
            offsets.push(total);
            total += n - k.unsigned_abs();
        }
        BandedMatrix {
            n,
            beta,
            symmetric,
            data: vec![T::zero(); total],
            offsets,
            diag_index,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, 0, true);
        for v in m.diag_mut(0) {
            *v = T::one();
        }
        m
    }

    pub fn scaled_identity(n: usize, c: T) -> Self {
        let mut m = Self::zeros(n, 0, true);
        for v in m.diag_mut(0) {
            *v = c;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Number of explicitly stored scalar entries.
    pub fn stored_entries(&self) -> usize {
        self.data.len()
    }

    fn storage_pos(&self, k: isize) -> Option<usize> {
        let k_stored = if self.symmetric { k.abs() } else { k };
        let lo = if self.symmetric { 0 } else { -(self.beta as isize) };
        if k_stored < lo || k_stored > self.beta as isize {
            return None;
        }
        Some((k_stored - lo) as usize)
    }

    /// Logical diagonal k as a slice (for symmetric matrices, -k aliases k).
    pub fn diag(&self, k: isize) -> Option<&[T]> {
        let d = self.storage_pos(k)?;
        let len = self.n - k.unsigned_abs();
        Some(&self.data[self.offsets[d]..self.offsets[d] + len])
    }

    pub fn diag_mut(&mut self, k: isize) -> &mut [T] {
        let d = self
            .storage_pos(k)
            .expect("diagonal outside stored bandwidth");
        let len = self.n - k.unsigned_abs();
        &mut self.data[self.offsets[d]..self.offsets[d] + len]
    }

    pub fn entry(&self, i: usize, j: usize) -> T {
        assert!(i < self.n && j < self.n, "index out of range");
        let k = i as isize - j as isize;
        match self.diag(k) {
            None => T::zero(),
            Some(d) => d[i.min(j)],
        }
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: T) {
        assert!(i < self.n && j < self.n, "index out of range");
        let k = i as isize - j as isize;
        if self.symmetric && k < 0 {
            self.set_entry(j, i, v);
            return;
        }
        let p = i.min(j);
        self.diag_mut(k)[p] = v;
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }

    /// Frobenius norm, counting both triangles of a symmetric matrix.
    pub fn frob_norm(&self) -> f64 {
        let mut acc = 0.0;
        for &k in &self.diag_index {
            let d = self.diag(k).unwrap();
            let s: f64 = d.iter().map(|v| v.abs() * v.abs()).sum();
            acc += if self.symmetric && k != 0 { 2.0 * s } else { s };
        }
        acc.sqrt()
    }

    pub fn scale(&self, c: T) -> Self {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= c;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        if self.symmetric {
            return self.clone();
        }
        let mut out = Self::zeros(self.n, self.beta, false);
        for &k in &self.diag_index {
            let src = self.diag(k).unwrap().to_vec();
            out.diag_mut(-k).copy_from_slice(&src);
        }
        out
    }

    /// Widen (or narrow-copy) to a general matrix with bandwidth >= beta.
    pub fn to_general(&self, beta: usize) -> Self {
        let beta = beta.max(self.beta);
        let mut out = Self::zeros(self.n, beta, false);
        for k in -(self.beta as isize)..=self.beta as isize {
            let src = self.diag(k).unwrap().to_vec();
            out.diag_mut(k).copy_from_slice(&src);
        }
        out
    }

    /// X + alpha * Y. The symmetric flag survives only if both are symmetric.
    pub fn band_add(&self, other: &Self, alpha: T) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ShapeMismatch(format!(
                "band_add: {} vs {}",
                self.n, other.n
            )));
        }
        let beta = self.beta.max(other.beta);
        let symmetric = self.symmetric && other.symmetric;
        let mut out = Self::zeros(self.n, beta, symmetric);
        let lo = if symmetric { 0 } else { -(beta as isize) };
        for k in lo..=beta as isize {
            let dst = out.diag_mut(k);
            if let Some(a) = self.diag(k) {
                for (o, &v) in dst.iter_mut().zip(a) {
                    *o = v;
                }
            }
            if let Some(b) = other.diag(k) {
                for (o, &v) in dst.iter_mut().zip(b) {
                    *o += alpha * v;
                }
            }
        }
        Ok(out)
    }

    /// Banded product X * Y; the result is general with bandwidth
    /// min(beta_X + beta_Y, n-1).
    pub fn band_matmul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ShapeMismatch(format!(
                "band_matmul: {} vs {}",
                self.n, other.n
            )));
        }
        let n = self.n;
        let bx = self.beta as isize;
        let by = other.beta as isize;
        let bc = ((bx + by) as usize).min(n - 1) as isize;
        let mut out = Self::zeros(n, bc as usize, false);

        let work = n as u64 * (2 * bx as u64 + 1) * (2 * by as u64 + 1);
        let compute_diag = |c: isize, dst: &mut [T]| {
            for a in (c - by).max(-bx)..=(c + by).min(bx) {
                let b = c - a;
                let (xd, yd) = match (self.diag(a), other.diag(b)) {
                    (Some(x), Some(y)) => (x, y),
                    _ => continue,
                };
                let i_lo = 0isize.max(a).max(c);
                let i_hi = (n as isize - 1) + 0isize.min(a).min(c);
                let (xo, yo, co) = (a.max(0), b.max(0) + a, c.max(0));
                for i in i_lo..=i_hi {
                    dst[(i - co) as usize] +=
                        xd[(i - xo) as usize] * yd[(i - yo) as usize];
                }
            }
        };

        if work > 4_000_000 {
            let cols: Vec<(isize, Vec<T>)> = (-bc..=bc)
                .into_par_iter()
                .map(|c| {
                    let mut dst = vec![T::zero(); n - c.unsigned_abs()];
                    compute_diag(c, &mut dst);
                    (c, dst)
                })
                .collect();
            for (c, dst) in cols {
                out.diag_mut(c).copy_from_slice(&dst);
            }
        } else {
            for c in -bc..=bc {
                let mut dst = vec![T::zero(); n - c.unsigned_abs()];
                compute_diag(c, &mut dst);
                out.diag_mut(c).copy_from_slice(&dst);
            }
        }
        Ok(out)
    }

    /// S + S^T as a symmetric matrix (S square, general storage).
    pub fn sym_plus_transpose(&self) -> Self {
        let mut out = Self::zeros(self.n, self.beta, true);
        for k in 0..=self.beta as isize {
            let lower = self.diag(k).map(<[T]>::to_vec);
            let upper = self.diag(-k).map(<[T]>::to_vec);
            let dst = out.diag_mut(k);
            if let Some(l) = lower {
                for (o, v) in dst.iter_mut().zip(l) {
                    *o += v;
                }
            }
            if let Some(u) = upper {
                for (o, v) in dst.iter_mut().zip(u) {
                    *o += v;
                }
            }
        }
        out
    }

    /// Zero all entries with |x| < eps and shrink the reported bandwidth to
    /// the outermost nonzero diagonal. Symmetry is preserved by storage.
    pub fn truncate_small(&self, eps: f64) -> Self {
        let mut tmp = self.clone();
        if eps > 0.0 {
            for v in &mut tmp.data {
                if v.abs() < eps {
                    *v = T::zero();
                }
            }
        }
        let mut new_beta = 0usize;
        for &k in &tmp.diag_index {
            if tmp.diag(k).unwrap().iter().any(|v| v.abs() != 0.0) {
                new_beta = new_beta.max(k.unsigned_abs());
            }
        }
        let mut out = Self::zeros(self.n, new_beta, self.symmetric);
        let lo = if self.symmetric {
            0
        } else {
            -(new_beta as isize)
        };
        for k in lo..=new_beta as isize {
            if let Some(src) = tmp.diag(k) {
                let src = src.to_vec();
                out.diag_mut(k).copy_from_slice(&src);
            }
        }
        out
    }

    /// Bandwidth of the outermost diagonal holding a nonzero entry.
    pub fn nonzero_bandwidth(&self) -> usize {
        let mut b = 0usize;
        for &k in &self.diag_index {
            if self.diag(k).unwrap().iter().any(|v| v.abs() != 0.0) {
                b = b.max(k.unsigned_abs());
            }
        }
        b
    }

    pub fn matvec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.n, "matvec length mismatch");
        let mut y = vec![T::zero(); self.n];
        let lo = if self.symmetric {
            -(self.beta as isize)
        } else {
            -(self.beta as isize)
        };
        for k in lo..=self.beta as isize {
            if let Some(d) = self.diag(k) {
                let ro = k.max(0) as usize;
                let co = (-k).max(0) as usize;
                for (p, &v) in d.iter().enumerate() {
                    y[p + ro] += v * x[p + co];
                }
            }
        }
        y
    }

    pub fn to_dense(&self) -> crate::dense::DenseMat<T> {
        let mut m = crate::dense::DenseMat::zeros(self.n, self.n);
        for i in 0..self.n {
            let lo = i.saturating_sub(self.beta);
            let hi = (i + self.beta).min(self.n - 1);
            for j in lo..=hi {
                m.set(i, j, self.entry(i, j));
            }
        }
        m
    }

    pub fn from_dense(
        m: &crate::dense::DenseMat<T>,
        beta: usize,
        symmetric: bool,
    ) -> Self {
        assert_eq!(m.nrows(), m.ncols());
        let n = m.nrows();
        let mut out = Self::zeros(n, beta, symmetric);
        let lo = if symmetric { 0 } else { -(out.beta as isize) };
        for k in lo..=out.beta as isize {
            let ro = k.max(0) as usize;
            let co = (-k).max(0) as usize;
            let dst = out.diag_mut(k);
            for (p, o) in dst.iter_mut().enumerate() {
                *o = m.get(p + ro, p + co);
            }
        }
        out
    }
}

impl BandedMatrix<f64> {
    /// trace(Y^T X); cost proportional to the overlapping stored diagonals.
    pub fn frob_inner(&self, other: &Self) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::ShapeMismatch(format!(
                "frob_inner: {} vs {}",
                self.n, other.n
            )));
        }
        let b = self.beta.min(other.beta) as isize;
        let mut acc = 0.0;
        for k in -b..=b {
            let (x, y) = (self.diag(k).unwrap(), other.diag(k).unwrap());
            acc += x.iter().zip(y).map(|(a, b)| a * b).sum::<f64>();
        }
        Ok(acc)
    }

    pub fn to_complex(&self) -> BandedMatrix<num_complex::Complex64> {
        let mut out =
            BandedMatrix::<num_complex::Complex64>::zeros(self.n, self.beta, self.symmetric);
        let lo = if self.symmetric {
            0
        } else {
            -(self.beta as isize)
        };
        for k in lo..=self.beta as isize {
            let src = self.diag(k).unwrap();
            let dst = out.diag_mut(k);
            for (o, &v) in dst.iter_mut().zip(src) {
                *o = num_complex::Complex64::new(v, 0.0);
            }
        }
        out
    }
}

impl BandedMatrix<num_complex::Complex64> {
    /// Real part, entrywise.
    pub fn re(&self) -> BandedMatrix<f64> {
        let mut out = BandedMatrix::<f64>::zeros(self.n, self.beta, self.symmetric);
        let lo = if self.symmetric {
            0
        } else {
            -(self.beta as isize)
        };
        for k in lo..=self.beta as isize {
            let src = self.diag(k).unwrap();
            let dst = out.diag_mut(k);
            for (o, v) in dst.iter_mut().zip(src) {
                *o = v.re;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::DenseMat;
    use crate::test_util::{random_banded_general, random_banded_symmetric};
    use proptest::prelude::*;

    #[test]
    fn identity_round_trip() {
        let i3 = BandedMatrix::<f64>::identity(3);
        let two = i3.band_add(&i3, 1.0).unwrap();
        for i in 0..3 {
            assert_eq!(two.entry(i, i), 2.0);
        }
        assert!(two.is_symmetric());
    }

    #[test]
    fn add_zero_is_identity_op() {
        let x = random_banded_symmetric(10, 2, 1);
        let z = BandedMatrix::<f64>::zeros(10, 1, true);
        let y = x.band_add(&z, 1.0).unwrap();
        for i in 0..10 {
            for j in 0..10 {
                assert_eq!(x.entry(i, j), y.entry(i, j));
            }
        }
    }

    #[test]
    fn add_matches_dense_oracle() {
        let x = random_banded_general(10, 1, 2);
        let y = random_banded_general(10, 2, 3);
        let s = x.band_add(&y, -1.5).unwrap();
        let xd = x.to_dense();
        let yd = y.to_dense();
        for i in 0..10 {
            for j in 0..10 {
                let expect = xd.get(i, j) - 1.5 * yd.get(i, j);
                assert!((s.entry(i, j) - expect).abs() <= 1e-15);
            }
        }
        assert_eq!(s.beta(), 2);
    }

    #[test]
    fn add_order_mismatch_errors() {
        let x = BandedMatrix::<f64>::identity(3);
        let y = BandedMatrix::<f64>::identity(4);
        assert!(x.band_add(&y, 1.0).is_err());
        assert!(x.band_matmul(&y).is_err());
    }

    #[test]
    fn tridiag_product_is_pentadiagonal() {
        let x = random_banded_symmetric(12, 1, 7);
        let y = random_banded_symmetric(12, 1, 8);
        let p = x.band_matmul(&y).unwrap();
        assert!(p.beta() <= 2);
    }

    #[test]
    fn matmul_identity_is_noop() {
        let x = random_banded_general(9, 2, 5);
        let p = x.band_matmul(&BandedMatrix::identity(9)).unwrap();
        for i in 0..9 {
            for j in 0..9 {
                assert!((p.entry(i, j) - x.entry(i, j)).abs() <= 1e-15);
            }
        }
    }

    #[test]
    fn matmul_matches_dense_oracle() {
        let x = random_banded_symmetric(20, 2, 11);
        let y = random_banded_general(20, 3, 12);
        let p = x.band_matmul(&y).unwrap();
        let pd = x.to_dense().matmul(&y.to_dense());
        let mut max_diff: f64 = 0.0;
        for i in 0..20 {
            for j in 0..20 {
                max_diff = max_diff.max((p.entry(i, j) - pd.get(i, j)).abs());
            }
        }
        assert!(max_diff <= 1e-13, "max diff {max_diff}");
    }

    #[test]
    fn frob_inner_trivial_cases() {
        let i4 = BandedMatrix::<f64>::identity(4);
        assert_eq!(i4.frob_inner(&i4).unwrap(), 4.0);

        // disjoint sparsity patterns -> 0
        let mut a = BandedMatrix::<f64>::zeros(5, 0, true);
        for v in a.diag_mut(0) {
            *v = 2.0;
        }
        let mut b = BandedMatrix::<f64>::zeros(5, 1, true);
        for v in b.diag_mut(1) {
            *v = 3.0;
        }
        assert_eq!(a.frob_inner(&b).unwrap(), 0.0);
    }

    #[test]
    fn frob_inner_matches_dense_trace() {
        let x = random_banded_symmetric(30, 3, 21);
        let y = random_banded_general(30, 2, 22);
        let got = x.frob_inner(&y).unwrap();
        // trace(Y^T X)
        let yt = y.to_dense().transpose();
        let prod = yt.matmul(&x.to_dense());
        let mut tr = 0.0;
        for i in 0..30 {
            tr += prod.get(i, i);
        }
        assert!((got - tr).abs() <= 1e-13 * tr.abs().max(1.0));
        let fr = x.frob_norm();
        assert!((fr * fr - x.frob_inner(&x).unwrap()).abs() <= 1e-12 * fr * fr);
    }

    #[test]
    fn truncate_small_cases() {
        let x = random_banded_symmetric(8, 2, 3);
        let same = x.truncate_small(0.0);
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(x.entry(i, j), same.entry(i, j));
            }
        }

        let all_small = x.scale(1e-30).truncate_small(1e-8);
        assert_eq!(all_small.beta(), 0);
        assert_eq!(all_small.max_abs(), 0.0);

        // diag-dominant with a tiny outer band: the outer band goes away
        let mut y = BandedMatrix::<f64>::zeros(8, 2, true);
        for v in y.diag_mut(0) {
            *v = 3.0;
        }
        for v in y.diag_mut(1) {
            *v = 0.5;
        }
        for v in y.diag_mut(2) {
            *v = 1e-8;
        }
        let t = y.truncate_small(1e-5);
        assert_eq!(t.beta(), 1);
        assert_eq!(t.entry(2, 0), 0.0);
        assert_eq!(t.entry(1, 0), 0.5);
    }

    #[test]
    fn sym_plus_transpose_matches_dense() {
        let s = random_banded_general(15, 3, 4);
        let w = s.sym_plus_transpose();
        assert!(w.is_symmetric());
        let sd = s.to_dense();
        for i in 0..15 {
            for j in 0..15 {
                let expect = sd.get(i, j) + sd.get(j, i);
                assert!((w.entry(i, j) - expect).abs() <= 1e-15);
            }
        }
    }

    #[test]
    fn matvec_matches_dense() {
        let a = random_banded_symmetric(17, 4, 5);
        let x: Vec<f64> = (0..17).map(|i| (i as f64 * 0.37).sin()).collect();
        let y = a.matvec(&x);
        let yd = a.to_dense().matvec(&x);
        for (u, v) in y.iter().zip(&yd) {
            assert!((u - v).abs() <= 1e-13);
        }
    }

    #[test]
    fn complex_symmetric_entry_is_transpose_not_conjugate() {
        use num_complex::Complex64;
        let mut m = BandedMatrix::<Complex64>::zeros(4, 1, true);
        m.set_entry(1, 0, Complex64::new(1.0, 2.0));
        assert_eq!(m.entry(0, 1), Complex64::new(1.0, 2.0));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn prop_matmul_bandwidth_bound(n in 4usize..24, bx in 0usize..4, by in 0usize..4, seed in 0u64..1000) {
            let x = random_banded_general(n, bx.min(n-1), seed);
            let y = random_banded_general(n, by.min(n-1), seed + 1);
            let p = x.band_matmul(&y).unwrap();
            prop_assert!(p.beta() <= (x.beta() + y.beta()).min(n - 1));
            // entries outside the declared bandwidth are exactly zero
            let d = p.to_dense();
            for i in 0..n {
                for j in 0..n {
                    if i.abs_diff(j) > p.beta() {
                        prop_assert_eq!(d.get(i, j), 0.0);
                    }
                }
            }
        }

        #[test]
        fn prop_frob_inner_symmetric_bilinear(n in 2usize..20, seed in 0u64..1000) {
            let x = random_banded_symmetric(n, 2.min(n-1), seed);
            let y = random_banded_symmetric(n, 1.min(n-1), seed + 7);
            let xy = x.frob_inner(&y).unwrap();
            let yx = y.frob_inner(&x).unwrap();
            prop_assert!((xy - yx).abs() <= 1e-12 * xy.abs().max(1.0));
            let x2 = x.scale(2.0);
            prop_assert!((x2.frob_inner(&y).unwrap() - 2.0 * xy).abs() <= 1e-11 * xy.abs().max(1.0));
        }
    }

    #[test]
    fn dense_round_trip() {
        let x = random_banded_general(11, 3, 9);
        let d = x.to_dense();
        let back = BandedMatrix::from_dense(&d, 3, false);
        assert_eq!(x, back);
        let _ = DenseMat::<f64>::zeros(2, 2);
    }
}
