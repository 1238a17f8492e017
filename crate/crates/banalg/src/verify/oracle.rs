//! Independent character oracle: Gauss-Newton on the raw quadratic system
//! from many seeded random starts.
//!
//! The production solver goes through unitization and eigendecomposition;
//! this oracle attacks `sum_k c_ijk x_k = x_i x_j` on `A` directly, shares
//! nothing with that pipeline beyond the SVD kernels, and even reads the
//! structure constants through the public `multiply` API.  Agreement between
//! the two on small algebras is the strongest internal evidence that the
//! character space is right.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::algebra::{Algebra, Element};
use crate::characters::CharacterSet;
use crate::error::Result;
use crate::linalg::{self, CMat, CVec};
use crate::tol;

const MAX_STEPS: usize = 60;

/// All verified multiplicative functionals found from `starts` random
/// starts, deduplicated in l-infinity.  Junk stationary points are removed
/// by the same residual verification the solver itself must pass, so the
/// only shared assumption is the definition of a character.
pub fn newton_multistart(
    a: &Algebra,
    tol: f64,
    seed: u64,
    starts: usize,
) -> Result<Vec<Vec<Complex64>>> {
    let n = a.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    // Structure constants via the public API: c[i][j] = e_i e_j.
    let mut products = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            products.push(a.multiply(&a.basis_element(i), &a.basis_element(j))?);
        }
    }
    // Decorrelate from the solver's stream without hiding the seed.
    let mut rng = ChaCha12Rng::seed_from_u64(seed ^ 0x9E37_79B9_7F4A_7C15);
    let bound = tol::scaled(tol, a.scale());
    let mut found: Vec<Vec<Complex64>> = Vec::new();
    for _ in 0..starts {
        let x0 = Element::random(n, &mut rng).as_cvec();
        let Some(x) = newton(a, &products, x0) else {
            continue;
        };
        let inf = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if inf <= tol::DEDUPE_TOL {
            continue; // the zero functional is not a character
        }
        let covector = x.to_vec();
        match a.character_residual(&covector) {
            Ok(r) if r <= bound => {
                let dup = found
                    .iter()
                    .any(|f| linf_dist(f, &covector) <= tol::DEDUPE_TOL);
                if !dup {
                    found.push(covector);
                }
            }
            _ => {}
        }
    }
    Ok(found)
}

/// Set comparison between the solver's output and the oracle roots: same
/// cardinality and a perfect l-infinity matching within `tol`.  Distinct
/// characters sit far apart (dedupe radius), so greedy matching is exact.
pub fn sets_match(solver: &CharacterSet, oracle: &[Vec<Complex64>], tol: f64) -> bool {
    if solver.len() != oracle.len() {
        return false;
    }
    let mut used = vec![false; oracle.len()];
    'outer: for chi in solver.iter() {
        for (k, root) in oracle.iter().enumerate() {
            if !used[k] && linf_dist(chi.covector(), root) <= tol {
                used[k] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn linf_dist(p: &[Complex64], q: &[Complex64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Plain Gauss-Newton with a step clamp.  Always returns the final iterate:
/// the caller's residual verification is the acceptance gate, so an early
/// internal cutoff could only lose true roots, never admit junk.
fn newton(a: &Algebra, products: &[Element], mut x: CVec) -> Option<CVec> {
    let n = x.len();
    let target = 1e-13 * (1.0 + a.scale());
    for _ in 0..MAX_STEPS {
        let mut f = CVec::zeros(n * n);
        let mut jac = CMat::zeros((n * n, n));
        for i in 0..n {
            for j in 0..n {
                let row = i * n + j;
                let cij = &products[i * n + j];
                let mut val = -x[i] * x[j];
                for k in 0..n {
                    val += cij.get(k) * x[k];
                    jac[(row, k)] = cij.get(k);
                }
                jac[(row, i)] -= x[j];
                jac[(row, j)] -= x[i];
                f[row] = val;
            }
        }
        if linalg::inf_norm(&f) <= target {
            break;
        }
        let rhs = f.mapv(|z| -z);
        let mut step = linalg::lstsq_min_norm(&jac, &rhs).ok()?;
        let snorm = linalg::inf_norm(&step);
        if snorm > 10.0 {
            step.mapv_inplace(|z| z * (10.0 / snorm));
        }
        x = &x + &step;
        if snorm <= 1e-15 * (1.0 + linalg::inf_norm(&x)) {
            break;
        }
    }
    Some(x)
}
