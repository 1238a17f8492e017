//! The character space `Delta(A)` of an algebra: all nonzero multiplicative
//! linear functionals, as solutions of the quadratic system
//! `Σ_k c_ijk x_k = x_i x_j`.
//!
//! # Solver
//!
//! 1. Unitize: characters of `A` correspond to characters of `A¹` other than
//!    the augmentation character (the one killing `A`), and every character
//!    of `A¹` sends the unit to 1, which fixes the scaling gauge.
//! 2. Characters of `A¹` are common left eigenvectors of all left
//!    multiplication operators (`chi(r x) = chi(r) chi(x)`), so the left
//!    eigendecomposition of `L_r` for a seeded random `r` yields candidates;
//!    eigenvalue clusters (characters shadowed by radical directions, or two
//!    characters colliding at `r`) are refined by compressing a second random
//!    multiplication operator onto the cluster eigenspace.
//! 3. Candidates are polished by Gauss-Newton on the quadratic system and
//!    verified against the multiplicativity residual.
//! 4. Completeness is certified structurally: `|Delta(A¹)|` equals the rank
//!    of the trace form of `A¹` modulo the ideal generated by commutators
//!    (characters factor through that commutative quotient, whose semisimple
//!    part is `C^m`).  A shortfall triggers a retry with a fresh random
//!    element (up to 5); a persistent mismatch is an error — the solver never
//!    returns a silently partial set.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::algebra::{pair, Algebra, Element, SubspaceBasis};
use crate::error::{Error, Result};
use crate::linalg::{self, CMat, CVec};
use crate::tol::{self, CHARSET_RANK_TOL, DEDUPE_TOL};

/// Maximum fresh random elements tried before giving up.
const MAX_ATTEMPTS: usize = 5;
/// Gauss-Newton iteration cap per candidate.
const NEWTON_MAX_STEPS: usize = 40;
/// Relative gap below which two eigenvalues belong to one cluster.
const CLUSTER_TOL: f64 = 1e-6;

// ---------------------------------------------------------------------------
// Characters
// ---------------------------------------------------------------------------

/// A verified character: a nonzero covector with small multiplicativity
/// defect, acting by `phi(a) = Σ_i covector_i a_i`.
#[derive(Clone, Debug)]
pub struct Character {
    covector: Vec<Complex64>,
    residual: f64,
    label: Option<String>,
}

impl Character {
    /// Verify a covector as a character of `a` at tolerance `tol`.
    ///
    /// Errors with [`Error::ZeroFunctional`] for the zero covector (excluded
    /// from `Delta(A)` by definition) and [`Error::CharacterNotVerified`]
    /// when the multiplicativity residual exceeds `tol * (1 + max |c|)`.
    pub fn verify(a: &Algebra, covector: Vec<Complex64>, tol: f64) -> Result<Character> {
        let norm = covector.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if norm <= DEDUPE_TOL {
            return Err(Error::ZeroFunctional);
        }
        let residual = a.character_residual(&covector)?;
        let bound = tol::scaled(tol, a.scale());
        if residual > bound {
            return Err(Error::CharacterNotVerified {
                residual,
                tol: bound,
            });
        }
        Ok(Character {
            covector,
            residual,
            label: None,
        })
    }

    /// Attach a label (`phi_1`, ...).
    pub fn with_label(mut self, label: impl Into<String>) -> Character {
        self.label = Some(label.into());
        self
    }

    pub fn covector(&self) -> &[Complex64] {
        &self.covector
    }

    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.covector.len()
    }

    /// Apply the character to an element.
    pub fn evaluate(&self, a: &Element) -> Result<Complex64> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: a.dim(),
            });
        }
        Ok(pair(&self.covector, a))
    }

    /// Sup-norm distance between two covectors.
    pub fn distance_inf(&self, other: &Character) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.covector
            .iter()
            .zip(&other.covector)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Either a genuine character or the distinguished zero functional
/// (the `phi ∈ Delta(A) ∪ {0}` cases of the weak amenability definition).
#[derive(Clone, Copy, Debug)]
pub enum PhiSpec<'a> {
    Chi(&'a Character),
    Zero,
}

impl<'a> PhiSpec<'a> {
    /// Display name for reports: the label, or `"zero"`.
    pub fn name(&self) -> String {
        match self {
            PhiSpec::Chi(c) => c.label().unwrap_or("phi").to_string(),
            PhiSpec::Zero => "zero".to_string(),
        }
    }
}

/// The complete, verified, deduplicated character space of an algebra.
#[derive(Clone, Debug)]
pub struct CharacterSet {
    characters: Vec<Character>,
    seed: u64,
    retries: u32,
}

impl CharacterSet {
    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Character> {
        self.characters.iter()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn retries(&self) -> u32 {
        self.retries
    }

    /// Look a character up by its assigned label.
    pub fn by_label(&self, label: &str) -> Option<&Character> {
        self.characters.iter().find(|c| c.label() == Some(label))
    }

    /// Index of the character within `DEDUPE_TOL` of the given covector.
    pub fn position_of(&self, covector: &[Complex64]) -> Option<usize> {
        self.characters.iter().position(|c| {
            c.covector.len() == covector.len()
                && c.covector
                    .iter()
                    .zip(covector)
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0, f64::max)
                    <= DEDUPE_TOL
        })
    }

    /// Character covectors as the rows of an `m x n` matrix.
    pub fn covector_matrix(&self) -> CMat {
        let m = self.len();
        let n = self.characters.first().map_or(0, Character::dim);
        let mut mat = CMat::zeros((m, n));
        for (i, c) in self.characters.iter().enumerate() {
            for (j, z) in c.covector.iter().enumerate() {
                mat[(i, j)] = *z;
            }
        }
        mat
    }
}

// ---------------------------------------------------------------------------
// Free operations
// ---------------------------------------------------------------------------

/// Multiplicativity residual of an arbitrary covector
/// (`max_{i,j} |x(e_i e_j) - x(e_i) x(e_j)|`); the caller compares to `tol`.
pub fn verify_character(a: &Algebra, covector: &[Complex64]) -> Result<f64> {
    a.character_residual(covector)
}

/// An element `a` with `phi(a) = 0` and `psi(a) = 1`, which exists whenever
/// the two characters differ (they are linearly independent).
/// Minimum-norm solution of the two-equation linear system.
pub fn separating_element(a: &Algebra, phi: &Character, psi: &Character) -> Result<Element> {
    if phi.dim() != a.dim() || psi.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: phi.dim().max(psi.dim()),
        });
    }
    if phi.distance_inf(psi) <= DEDUPE_TOL {
        return Err(Error::CharactersEqual);
    }
    let mut m = CMat::zeros((2, a.dim()));
    for j in 0..a.dim() {
        m[(0, j)] = phi.covector[j];
        m[(1, j)] = psi.covector[j];
    }
    let b = ndarray::array![Complex64::ZERO, Complex64::ONE];
    let x = linalg::lstsq_min_norm(&m, &b)?;
    let residual = linalg::residual_inf(&m, &x, &b);
    if residual > tol::scaled(tol::DEFAULT_TOL, 1.0) {
        // Unreachable for genuinely distinct characters; be honest if not.
        return Err(Error::Postcondition(format!(
            "separation system inconsistent: residual {residual:.3e}"
        )));
    }
    Ok(Element::from_cvec(&x))
}

// ---------------------------------------------------------------------------
// Completeness certificate
// ---------------------------------------------------------------------------

/// Number of characters of a *unital* algebra `B`, computed structurally.
///
/// Characters kill commutators, hence the two-sided ideal `J` generated by
/// them, so `Delta(B)` is in bijection with `Delta(B/J)`.  The quotient is
/// commutative, and a commutative finite-dimensional unital algebra over `C`
/// has exactly `dim C - dim rad(C)` characters (its semisimple part is
/// `C^m`).  By Dickson's criterion (characteristic 0) the radical is the
/// kernel of the trace form `T_ij = tr(L_{e_i} L_{e_j})`, so the count is
/// `rank T`.
pub fn unital_character_count(b: &Algebra) -> Result<usize> {
    let n = b.dim();
    // Ideal generated by commutators: close the commutator span under
    // one-sided multiplications until the dimension stabilizes.
    let mut gens: Vec<Element> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let ei = b.basis_element(i);
            let ej = b.basis_element(j);
            let comm = &b.multiply(&ei, &ej)? - &b.multiply(&ej, &ei)?;
            if !comm.is_zero(0.0) {
                gens.push(comm);
            }
        }
    }
    let mut span = SubspaceBasis::from_spanning(n, &gens)?;
    loop {
        let mut extended = span.vectors().to_vec();
        for v in span.vectors() {
            for i in 0..n {
                let e = b.basis_element(i);
                extended.push(b.multiply(&e, v)?);
                extended.push(b.multiply(v, &e)?);
            }
        }
        let bigger = SubspaceBasis::from_spanning(n, &extended)?;
        if bigger.dim() == span.dim() {
            break;
        }
        span = bigger;
    }
    let commutative = if span.dim() == 0 {
        b.clone()
    } else {
        b.quotient(&span)?.0
    };
    // Trace form of the commutative quotient.
    let m = commutative.dim();
    let ls: Vec<CMat> = (0..m)
        .map(|i| commutative.left_mul_matrix(&commutative.basis_element(i)))
        .collect();
    let mut t = CMat::zeros((m, m));
    for i in 0..m {
        for j in 0..m {
            let prod = ls[i].dot(&ls[j]);
            t[(i, j)] = (0..m).map(|k| prod[(k, k)]).sum();
        }
    }
    linalg::rank(&t)
}

// ---------------------------------------------------------------------------
// The solver
// ---------------------------------------------------------------------------

/// Compute the complete character space `Delta(A)`.
///
/// Deterministic for fixed `(A, tol, seed)`.  Returns every character
/// verified to residual `<= tol * (1 + max |c|)`, deduplicated at
/// [`DEDUPE_TOL`], sorted canonically (descending lexicographic order of the
/// covector entries quantized at the dedupe threshold) and labelled
/// `phi_1, phi_2, ...`.  Errors with [`Error::SolverDidNotConverge`] if the
/// verified set does not reach the structural count after retries.
pub fn character_space(a: &Algebra, tol: f64, seed: u64) -> Result<CharacterSet> {
    let b = a.unitization();
    let unit = a.unit_index();
    let expected = unital_character_count(&b)?;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut retries = 0u32;
    let mut found = 0usize;
    for _attempt in 0..MAX_ATTEMPTS {
        let harvested = harvest(&b, unit, tol, &mut rng)?;
        found = harvested.len();
        if found == expected {
            return assemble(a, &b, harvested, seed, retries, tol);
        }
        retries += 1;
    }
    Err(Error::SolverDidNotConverge(format!(
        "verified {found} of {expected} characters of the unitization after {MAX_ATTEMPTS} attempts"
    )))
}

/// One attempt: eigen-candidates from a fresh random element, polish, verify,
/// dedupe.  Returns verified characters of the unitization `b`.
fn harvest<R: Rng + ?Sized>(
    b: &Algebra,
    unit: usize,
    tol: f64,
    rng: &mut R,
) -> Result<Vec<Vec<Complex64>>> {
    let n = b.dim();
    let r = Element::random(n, rng);
    let s = Element::random(n, rng);
    let lr_t = b.left_mul_matrix(&r).t().to_owned();
    let ls_t = b.left_mul_matrix(&s).t().to_owned();
    let (vals, vecs) = linalg::eig(&lr_t)?;

    // Cluster eigenvalues.
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_by(|&i, &j| {
        vals[i]
            .re
            .total_cmp(&vals[j].re)
            .then(vals[i].im.total_cmp(&vals[j].im))
    });
    let lam_scale = 1.0 + vals.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let gap = CLUSTER_TOL * lam_scale;
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for &idx in &order {
        match clusters.last_mut() {
            Some(cl) if (vals[idx] - vals[*cl.last().unwrap()]).norm() <= gap => cl.push(idx),
            _ => clusters.push(vec![idx]),
        }
    }

    let mut candidates: Vec<CVec> = Vec::new();
    for cl in &clusters {
        let lam = cl.iter().map(|&i| vals[i]).sum::<Complex64>() / cl.len() as f64;
        let mut shifted = lr_t.clone();
        for d in 0..n {
            shifted[(d, d)] -= lam;
        }
        let es = linalg::nullspace(&shifted)?;
        match es.ncols() {
            0 => {
                // Eigenvalue too inaccurate for the rank cutoff; fall back to
                // the raw eigenvector columns and let Newton do the work.
                for &i in cl {
                    candidates.push(vecs.column(i).to_owned());
                }
            }
            1 => candidates.push(es.column(0).to_owned()),
            c => {
                // Compress the second operator onto the cluster eigenspace;
                // genuine characters are exact eigenvectors of the compression.
                let comp = linalg::adjoint(&es).dot(&ls_t).dot(&es);
                let (_, ys) = linalg::eig(&comp)?;
                for k in 0..c {
                    candidates.push(es.dot(&ys.column(k).to_owned()));
                }
            }
        }
    }

    // Normalize to chi(unit) = 1, polish, verify.
    let bound = tol::scaled(tol, b.scale());
    let mut verified: Vec<Vec<Complex64>> = Vec::new();
    for cand in candidates {
        let pivot = cand[unit];
        if pivot.norm() < 1e-8 * linalg::inf_norm(&cand) {
            continue; // cannot send the unit to 1: not a character direction
        }
        let x0 = cand.mapv(|z| z / pivot);
        let x = polish(b, unit, x0);
        let covector = x.to_vec();
        if b.character_residual(&covector)? <= bound {
            verified.push(covector);
        }
    }

    // Canonical sort, then dedupe.
    verified.sort_by(|p, q| quantized_cmp(p, q));
    let mut unique: Vec<Vec<Complex64>> = Vec::new();
    'outer: for v in verified {
        for u in &unique {
            let d = u
                .iter()
                .zip(&v)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            if d <= DEDUPE_TOL {
                continue 'outer;
            }
        }
        unique.push(v);
    }
    Ok(unique)
}

/// Gauss-Newton polish of a candidate on the quadratic system of `b`, with
/// the gauge row `x_unit = 1`.  The system is holomorphic, so plain complex
/// Newton steps apply; each step solves the linearized system in the
/// minimum-norm sense.
fn polish(b: &Algebra, unit: usize, x0: CVec) -> CVec {
    let n = b.dim();
    let rows = n * n + 1;
    let mut x = x0;
    for _ in 0..NEWTON_MAX_STEPS {
        let mut f = CVec::zeros(rows);
        let mut jac = CMat::zeros((rows, n));
        for i in 0..n {
            for j in 0..n {
                let row = i * n + j;
                let mut on_product = Complex64::ZERO;
                for k in 0..n {
                    let c = b.table_entry(i, j, k);
                    on_product += c * x[k];
                    jac[(row, k)] = c;
                }
                f[row] = on_product - x[i] * x[j];
                jac[(row, i)] -= x[j];
                jac[(row, j)] -= x[i];
            }
        }
        f[rows - 1] = x[unit] - Complex64::ONE;
        jac[(rows - 1, unit)] = Complex64::ONE;
        let fnorm = linalg::inf_norm(&f);
        if fnorm <= 1e-14 * (1.0 + b.scale()) {
            break;
        }
        let Ok(dx) = linalg::lstsq_min_norm(&jac, &f.mapv(|z| -z)) else {
            break;
        };
        let step = linalg::inf_norm(&dx);
        x = &x + &dx;
        if step <= 1e-15 * (1.0 + linalg::inf_norm(&x)) {
            break;
        }
    }
    x
}

/// Restrict verified unitization characters to `A`, drop the augmentation
/// character, sort, label, and validate the set invariants.
fn assemble(
    a: &Algebra,
    b: &Algebra,
    on_b: Vec<Vec<Complex64>>,
    seed: u64,
    retries: u32,
    tol: f64,
) -> Result<CharacterSet> {
    let n = a.dim();
    let mut restrictions: Vec<Vec<Complex64>> = Vec::new();
    let mut augmentations = 0usize;
    for chi in &on_b {
        let rest: Vec<Complex64> = chi[..n].to_vec();
        let norm = rest.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if norm <= DEDUPE_TOL {
            augmentations += 1;
        } else {
            restrictions.push(rest);
        }
    }
    if augmentations != 1 {
        return Err(Error::SolverDidNotConverge(format!(
            "expected exactly one augmentation character of the unitization, found {augmentations}"
        )));
    }
    debug_assert_eq!(b.dim(), n + 1);
    restrictions.sort_by(|p, q| quantized_cmp(p, q));
    let bound = tol::scaled(tol, a.scale());
    let mut characters = Vec::with_capacity(restrictions.len());
    for (idx, covector) in restrictions.into_iter().enumerate() {
        let residual = a.character_residual(&covector)?;
        if residual > bound {
            return Err(Error::SolverDidNotConverge(format!(
                "restricted character failed verification: residual {residual:.3e}"
            )));
        }
        characters.push(Character {
            covector,
            residual,
            label: Some(format!("phi_{}", idx + 1)),
        });
    }
    let set = CharacterSet {
        characters,
        seed,
        retries,
    };
    // Linear independence invariant: full row rank of the covector matrix.
    if set.len() > 0 {
        let mat = set.covector_matrix();
        let parts = linalg::svd(&mat)?;
        let smax = parts.s.iter().cloned().fold(0.0, f64::max);
        let smin = parts.s.iter().cloned().fold(f64::INFINITY, f64::min);
        if parts.s.len() < set.len() || smin <= CHARSET_RANK_TOL * smax.max(1.0) {
            return Err(Error::SolverDidNotConverge(format!(
                "character covectors not numerically independent (sigma_min {smin:.3e})"
            )));
        }
    }
    Ok(set)
}

/// Total order on covectors: descending lexicographic over entries quantized
/// at the dedupe threshold (real part first, then imaginary part).
fn quantized_cmp(p: &[Complex64], q: &[Complex64]) -> std::cmp::Ordering {
    for (a, b) in p.iter().zip(q) {
        let ar = (a.re / DEDUPE_TOL).round() as i64;
        let br = (b.re / DEDUPE_TOL).round() as i64;
        if ar != br {
            return br.cmp(&ar);
        }
        let ai = (a.im / DEDUPE_TOL).round() as i64;
        let bi = (b.im / DEDUPE_TOL).round() as i64;
        if ai != bi {
            return bi.cmp(&ai);
        }
    }
    std::cmp::Ordering::Equal
}
