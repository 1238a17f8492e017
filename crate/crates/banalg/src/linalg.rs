//! Thin complex linear-algebra layer over LAPACK (via `ndarray-linalg`).
//!
//! Everything numerical in the crate funnels through this module:
//! eigendecomposition (`zgeev`) and singular value decomposition (`zgesvd`),
//! plus the rank / nullspace / least-squares helpers derived from the SVD.
//! Rank decisions use the single relative cutoff [`crate::tol::RANK_REL_TOL`]
//! so that feasibility answers do not depend on which routine was asked.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eig, SVD};
use num_complex::Complex64;

use crate::error::Result;
use crate::tol::RANK_REL_TOL;

/// Complex column vector.
pub type CVec = Array1<Complex64>;
/// Complex dense matrix.
pub type CMat = Array2<Complex64>;

/// Conjugate transpose.
pub fn adjoint(m: &CMat) -> CMat {
    m.t().mapv(|z| z.conj())
}

/// Sup norm of a complex vector.
pub fn inf_norm(v: &CVec) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest absolute entry of a complex matrix.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Full singular value decomposition `M = U diag(s) V^H`.
pub struct SvdParts {
    pub u: CMat,
    pub s: Array1<f64>,
    pub vh: CMat,
}

impl SvdParts {
    /// Numerical rank at the crate-wide relative cutoff.
    pub fn rank(&self) -> usize {
        let smax = self.s.iter().cloned().fold(0.0, f64::max);
        if smax == 0.0 {
            return 0;
        }
        self.s.iter().filter(|&&s| s > RANK_REL_TOL * smax).count()
    }
}

/// Compute the full SVD, handling empty shapes without calling LAPACK.
pub fn svd(m: &CMat) -> Result<SvdParts> {
    let (rows, cols) = m.dim();
    if rows == 0 || cols == 0 {
        return Ok(SvdParts {
            u: CMat::eye(rows),
            s: Array1::zeros(rows.min(cols)),
            vh: CMat::eye(cols),
        });
    }
    let (u, s, vh) = m.svd(true, true)?;
    Ok(SvdParts {
        u: u.expect("requested U"),
        s,
        vh: vh.expect("requested V^H"),
    })
}

/// Numerical rank of a matrix.
pub fn rank(m: &CMat) -> Result<usize> {
    Ok(svd(m)?.rank())
}

/// Orthonormal basis of the (right) nullspace of `M`, returned as the
/// columns of an `n x (n - rank)` matrix.
pub fn nullspace(m: &CMat) -> Result<CMat> {
    let n = m.ncols();
    let parts = svd(m)?;
    let r = parts.rank();
    let mut out = CMat::zeros((n, n - r));
    for (col, row) in (r..n).enumerate() {
        for j in 0..n {
            out[(j, col)] = parts.vh[(row, j)].conj();
        }
    }
    Ok(out)
}

/// Orthonormal basis of the column span of `M`, as the columns of an
/// `m x rank` matrix (the leading left singular vectors).
pub fn orthonormal_columns(m: &CMat) -> Result<CMat> {
    let parts = svd(m)?;
    let r = parts.rank();
    Ok(parts.u.slice(ndarray::s![.., ..r]).to_owned())
}

/// Minimum-norm least-squares solution of `M x = b` via the truncated SVD
/// pseudoinverse (`x = V S^+ U^H b`).
pub fn lstsq_min_norm(m: &CMat, b: &CVec) -> Result<CVec> {
    let (rows, cols) = m.dim();
    debug_assert_eq!(rows, b.len());
    if cols == 0 {
        return Ok(CVec::zeros(0));
    }
    if rows == 0 {
        return Ok(CVec::zeros(cols));
    }
    let parts = svd(m)?;
    let r = parts.rank();
    let c = adjoint(&parts.u).dot(b);
    let mut x = CVec::zeros(cols);
    for i in 0..r {
        let w = c[i] / parts.s[i];
        for j in 0..cols {
            x[j] += parts.vh[(i, j)].conj() * w;
        }
    }
    Ok(x)
}

/// Sup norm of the residual `M x - b`.
pub fn residual_inf(m: &CMat, x: &CVec, b: &CVec) -> f64 {
    let r = m.dot(x) - b;
    inf_norm(&r)
}

/// Eigendecomposition of a square matrix; eigenvectors are columns.
pub fn eig(m: &CMat) -> Result<(CVec, CMat)> {
    if m.nrows() == 0 {
        return Ok((CVec::zeros(0), CMat::zeros((0, 0))));
    }
    let (vals, vecs) = m.eig()?;
    Ok((vals, vecs))
}

/// Left eigen-covectors of a square matrix: columns `w` of the returned
/// matrix satisfy `w^T M = lambda w^T` (plain transpose, no conjugation).
pub fn left_eig(m: &CMat) -> Result<(CVec, CMat)> {
    eig(&m.t().to_owned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    #[test]
    fn nullspace_of_rank_one_matrix() {
        let m = ndarray::array![[c(1.0, 0.0), c(2.0, 0.0)], [c(2.0, 0.0), c(4.0, 0.0)]];
        let ns = nullspace(&m).unwrap();
        assert_eq!(ns.dim(), (2, 1));
        let img = m.dot(&ns);
        assert!(max_abs(&img) < 1e-12);
    }

    #[test]
    fn lstsq_min_norm_picks_smallest_solution() {
        // x + y = 2 has minimum-norm solution (1, 1).
        let m = ndarray::array![[c(1.0, 0.0), c(1.0, 0.0)]];
        let b = ndarray::array![c(2.0, 0.0)];
        let x = lstsq_min_norm(&m, &b).unwrap();
        assert!((x[0] - c(1.0, 0.0)).norm() < 1e-12);
        assert!((x[1] - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn left_eig_matches_definition() {
        let m = ndarray::array![[c(1.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(3.0, 0.0)]];
        let (vals, vecs) = left_eig(&m).unwrap();
        for (k, &lam) in vals.iter().enumerate() {
            let w: CVec = vecs.column(k).to_owned();
            // w^T M = lambda w^T
            let lhs = m.t().dot(&w);
            let rhs = w.mapv(|z| z * lam);
            assert!(inf_norm(&(lhs - rhs)) < 1e-10, "eigenvalue {lam}");
        }
    }

    #[test]
    fn orthonormal_columns_are_orthonormal() {
        let m = ndarray::array![
            [c(1.0, 1.0), c(2.0, 2.0)],
            [c(0.0, 3.0), c(0.0, 6.0)],
            [c(2.0, 0.0), c(4.0, 0.0)]
        ];
        let q = orthonormal_columns(&m).unwrap();
        assert_eq!(q.ncols(), 1);
        let g = adjoint(&q).dot(&q);
        assert!((g[(0, 0)] - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn empty_shapes_are_handled() {
        let m = CMat::zeros((0, 3));
        assert_eq!(rank(&m).unwrap(), 0);
        let ns = nullspace(&m).unwrap();
        assert_eq!(ns.dim(), (3, 3));
        let x = lstsq_min_norm(&m, &CVec::zeros(0)).unwrap();
        assert_eq!(x.len(), 3);
        assert!(inf_norm(&x) == 0.0);
    }
}
