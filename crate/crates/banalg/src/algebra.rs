//! Finite-dimensional complex associative algebras given by structure constants.
//!
//! An [`Algebra`] is a basis `e_0, ..., e_{n-1}` together with the table
//! `c_{ijk}` defined by `e_i e_j = Σ_k c_{ijk} e_k`.  Construction always
//! validates associativity, so every `Algebra` value in the crate is a genuine
//! associative algebra (within [`crate::tol::ASSOC_REL_TOL`]).
//!
//! The module also provides the standard constructions used throughout:
//! upper triangular matrices `T_n`, the algebras `A_phi` with product
//! `ab = phi(a) b`, Lau products `A x_theta B`, finite group algebras,
//! direct sums, quotients by two-sided ideals, and unitizations.

use ndarray::s;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{self, CMat, CVec};
use crate::tol::{self, ASSOC_REL_TOL, GRAM_TOL, IDEAL_CLOSURE_TOL};

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// An element of an algebra, stored as coordinates in the defining basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Element {
    coeffs: Vec<Complex64>,
}

impl Element {
    /// Element with the given coordinates.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Element { coeffs }
    }

    /// Element with real coordinates.
    pub fn from_real(coeffs: &[f64]) -> Self {
        Element {
            coeffs: coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    /// The zero element of a `dim`-dimensional algebra.
    pub fn zero(dim: usize) -> Self {
        Element {
            coeffs: vec![Complex64::ZERO; dim],
        }
    }

    /// The basis element `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Element::zero(dim);
        e.coeffs[i] = Complex64::ONE;
        e
    }

    /// Element with independent standard complex Gaussian coordinates.
    pub fn random<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Self {
        let coeffs = (0..dim)
            .map(|_| {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex64::new(re, im)
            })
            .collect();
        Element { coeffs }
    }

    /// Dimension of the ambient algebra.
    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Coordinate slice.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Single coordinate.
    pub fn get(&self, i: usize) -> Complex64 {
        self.coeffs[i]
    }

    /// Mutable coordinate access (used by constructions).
    pub fn set(&mut self, i: usize, z: Complex64) {
        self.coeffs[i] = z;
    }

    /// Sum of coordinate magnitudes.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).sum()
    }

    /// Euclidean norm of the coordinate vector.
    pub fn l2_norm(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest coordinate magnitude.
    pub fn inf_norm(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `self + z * other`.
    pub fn axpy(&self, z: Complex64, other: &Element) -> Element {
        debug_assert_eq!(self.dim(), other.dim());
        Element {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + z * b)
                .collect(),
        }
    }

    /// Scalar multiple.
    pub fn scaled(&self, z: Complex64) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(|a| a * z).collect(),
        }
    }

    /// Whether every coordinate is below `tol` in magnitude.
    pub fn is_zero(&self, tol: f64) -> bool {
        self.inf_norm() <= tol
    }

    /// Sup-norm distance to another element.
    pub fn distance_inf(&self, other: &Element) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Coordinates as an ndarray vector.
    pub fn as_cvec(&self) -> CVec {
        CVec::from_vec(self.coeffs.clone())
    }

    /// Element from an ndarray vector.
    pub fn from_cvec(v: &CVec) -> Self {
        Element {
            coeffs: v.to_vec(),
        }
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.axpy(Complex64::ONE, rhs)
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.axpy(-Complex64::ONE, rhs)
    }
}

/// Apply a linear functional (covector) to an element: `Σ_i phi_i a_i`.
///
/// Covectors act linearly, without conjugation; conjugation appears only in
/// Hermitian projections onto subspaces.
pub fn pair(covector: &[Complex64], a: &Element) -> Complex64 {
    debug_assert_eq!(covector.len(), a.dim());
    covector
        .iter()
        .zip(a.coeffs())
        .map(|(p, x)| p * x)
        .sum()
}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

/// An orthonormal basis of a linear subspace of an algebra.
///
/// Vectors are orthonormal by construction (Gram matrix within
/// [`GRAM_TOL`] of the identity); `from_spanning` orthonormalizes and drops
/// linear dependencies.  A basis can additionally be *checked* as a two-sided
/// ideal via [`Algebra::checked_ideal`].
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Element>,
    ideal_checked: bool,
}

impl SubspaceBasis {
    /// Orthonormal basis of the span of the given vectors.
    pub fn from_spanning(ambient_dim: usize, vectors: &[Element]) -> Result<Self> {
        for v in vectors {
            if v.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: v.dim(),
                });
            }
        }
        let mut m = CMat::zeros((ambient_dim, vectors.len()));
        for (j, v) in vectors.iter().enumerate() {
            for i in 0..ambient_dim {
                m[(i, j)] = v.get(i);
            }
        }
        let q = linalg::orthonormal_columns(&m)?;
        let vecs = (0..q.ncols())
            .map(|j| Element::from_cvec(&q.column(j).to_owned()))
            .collect();
        Ok(SubspaceBasis {
            ambient_dim,
            vectors: vecs,
            ideal_checked: false,
        })
    }

    /// Wrap vectors that are already orthonormal; the Gram matrix is verified.
    pub fn from_orthonormal(ambient_dim: usize, vectors: Vec<Element>) -> Result<Self> {
        for v in &vectors {
            if v.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: v.dim(),
                });
            }
        }
        let k = vectors.len();
        let mut worst = 0.0f64;
        for i in 0..k {
            for j in 0..k {
                let g: Complex64 = vectors[i]
                    .coeffs()
                    .iter()
                    .zip(vectors[j].coeffs())
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                let target = if i == j { Complex64::ONE } else { Complex64::ZERO };
                worst = worst.max((g - target).norm());
            }
        }
        if worst > GRAM_TOL {
            return Err(Error::Precondition(format!(
                "basis is not orthonormal: Gram residual {worst:.3e}"
            )));
        }
        Ok(SubspaceBasis {
            ambient_dim,
            vectors,
            ideal_checked: false,
        })
    }

    /// The zero subspace.
    pub fn empty(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
            ideal_checked: false,
        }
    }

    /// Number of basis vectors.
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Dimension of the ambient algebra.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// The orthonormal vectors.
    pub fn vectors(&self) -> &[Element] {
        &self.vectors
    }

    /// Whether this basis has been verified as a two-sided ideal.
    pub fn is_checked_ideal(&self) -> bool {
        self.ideal_checked
    }

    /// Basis vectors as the columns of an `n x k` matrix.
    pub fn matrix(&self) -> CMat {
        let mut m = CMat::zeros((self.ambient_dim, self.dim()));
        for (j, v) in self.vectors.iter().enumerate() {
            for i in 0..self.ambient_dim {
                m[(i, j)] = v.get(i);
            }
        }
        m
    }

    /// Coordinates of the orthogonal projection of `v` onto the span
    /// (`B^H v` for the basis matrix `B`).
    pub fn coords(&self, v: &Element) -> Vec<Complex64> {
        self.vectors
            .iter()
            .map(|b| {
                b.coeffs()
                    .iter()
                    .zip(v.coeffs())
                    .map(|(a, x)| a.conj() * x)
                    .sum()
            })
            .collect()
    }

    /// Orthogonal projection of `v` onto the span.
    pub fn project(&self, v: &Element) -> Element {
        let coords = self.coords(v);
        let mut out = Element::zero(self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.vectors) {
            out = out.axpy(*c, b);
        }
        out
    }

    /// Sup-norm distance from `v` to the span.
    pub fn residual_from_span(&self, v: &Element) -> f64 {
        v.distance_inf(&self.project(v))
    }

    /// Membership test at tolerance `tol`.
    pub fn contains(&self, v: &Element, tol: f64) -> bool {
        self.residual_from_span(v) <= tol
    }

    /// Convert a linear functional given by its values on arbitrary spanning
    /// vectors of this subspace into a covector on the orthonormal basis.
    ///
    /// Solves `sum_k q_k coords(v_j)_k = values_j` in the minimum-norm sense
    /// and rejects inconsistent value assignments (possible when the given
    /// vectors are linearly dependent).
    pub fn functional_from_values(
        &self,
        vectors: &[Element],
        values: &[Complex64],
    ) -> Result<Vec<Complex64>> {
        if vectors.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: vectors.len(),
                got: values.len(),
            });
        }
        let m = vectors.len();
        let k = self.dim();
        let mut ct = CMat::zeros((m, k));
        for (j, v) in vectors.iter().enumerate() {
            if v.dim() != self.ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: self.ambient_dim,
                    got: v.dim(),
                });
            }
            if self.residual_from_span(v) > IDEAL_CLOSURE_TOL {
                return Err(Error::InvalidInput(format!(
                    "functional value given on a vector outside the subspace \
                     (distance {:.3e})",
                    self.residual_from_span(v)
                )));
            }
            for (col, c) in self.coords(v).into_iter().enumerate() {
                ct[(j, col)] = c;
            }
        }
        let b = CVec::from_vec(values.to_vec());
        let q = linalg::lstsq_min_norm(&ct, &b)?;
        let residual = linalg::residual_inf(&ct, &q, &b);
        let scale = values.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if residual > tol::scaled(tol::DEFAULT_TOL, scale) {
            return Err(Error::InvalidInput(format!(
                "inconsistent functional values on dependent vectors \
                 (residual {residual:.3e})"
            )));
        }
        Ok(q.to_vec())
    }
}

// ---------------------------------------------------------------------------
// Linear maps
// ---------------------------------------------------------------------------

/// A linear map between algebras (or their underlying spaces), as a matrix
/// acting on coordinate columns.
#[derive(Clone, Debug)]
pub struct LinearMap {
    matrix: CMat,
}

impl LinearMap {
    /// Map defined by a `target_dim x source_dim` matrix.
    pub fn from_matrix(matrix: CMat) -> Self {
        LinearMap { matrix }
    }

    /// Identity map on an `n`-dimensional space.
    pub fn identity(n: usize) -> Self {
        LinearMap {
            matrix: CMat::eye(n),
        }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMat {
        &self.matrix
    }

    /// Apply the map to an element.
    pub fn apply(&self, a: &Element) -> Result<Element> {
        if a.dim() != self.source_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.source_dim(),
                got: a.dim(),
            });
        }
        Ok(Element::from_cvec(&self.matrix.dot(&a.as_cvec())))
    }

    /// Worst basis-pair residual of the homomorphism law
    /// `h(e_i e_j) = h(e_i) h(e_j)` between `source` and `target`.
    pub fn homomorphism_residual(&self, source: &Algebra, target: &Algebra) -> Result<f64> {
        if self.source_dim() != source.dim() || self.target_dim() != target.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                got: self.source_dim(),
            });
        }
        let mut worst = 0.0f64;
        for i in 0..source.dim() {
            let hi = self.apply(&Element::basis(source.dim(), i))?;
            for j in 0..source.dim() {
                let hj = self.apply(&Element::basis(source.dim(), j))?;
                let lhs = self.apply(&source.multiply(
                    &Element::basis(source.dim(), i),
                    &Element::basis(source.dim(), j),
                )?)?;
                let rhs = target.multiply(&hi, &hj)?;
                worst = worst.max(lhs.distance_inf(&rhs));
            }
        }
        Ok(worst)
    }

    /// Whether the map is surjective (full row rank).
    pub fn is_surjective(&self) -> Result<bool> {
        Ok(linalg::rank(&self.matrix)? == self.target_dim())
    }

    /// Pull a covector on the target back along the map: `(phi . h)_j = Σ_k phi_k H_{kj}`.
    pub fn pull_back_covector(&self, phi: &[Complex64]) -> Result<Vec<Complex64>> {
        if phi.len() != self.target_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.target_dim(),
                got: phi.len(),
            });
        }
        Ok((0..self.source_dim())
            .map(|j| {
                phi.iter()
                    .enumerate()
                    .map(|(k, p)| p * self.matrix[(k, j)])
                    .sum()
            })
            .collect())
    }
}

// ---------------------------------------------------------------------------
// Algebras
// ---------------------------------------------------------------------------

/// Which identity law `find_identity` should solve for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// A finite-dimensional complex associative algebra in a fixed basis.
#[derive(Clone, Debug)]
pub struct Algebra {
    dim: usize,
    labels: Vec<String>,
    /// Flattened structure constants, index `(i * dim + j) * dim + k`.
    table: Vec<Complex64>,
    /// `max |c_ijk|`; scales verification tolerances.
    scale: f64,
    /// Human-readable description of how the algebra was built.
    provenance: String,
}

impl Algebra {
    /// Build and validate an algebra from a nested structure-constant table.
    ///
    /// `table[i][j][k]` is the `e_k` coordinate of `e_i e_j`.  Errors with
    /// [`Error::NonAssociativeTable`] if any basis triple violates
    /// associativity beyond `ASSOC_REL_TOL * (1 + max |c|)`.
    pub fn new(
        table: Vec<Vec<Vec<Complex64>>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let dim = table.len();
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for row in &table {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for cell in row {
                if cell.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: cell.len(),
                    });
                }
                flat.extend_from_slice(cell);
            }
        }
        Self::from_flat(dim, flat, labels, format!("table(dim={dim})"))
    }

    /// Internal constructor from flattened constants; validates everything.
    fn from_flat(
        dim: usize,
        table: Vec<Complex64>,
        labels: Option<Vec<String>>,
        provenance: String,
    ) -> Result<Self> {
        debug_assert_eq!(table.len(), dim * dim * dim);
        let labels = match labels {
            Some(l) => {
                if l.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: l.len(),
                    });
                }
                l
            }
            None => (0..dim).map(|i| format!("e{i}")).collect(),
        };
        if !table.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidInput(
                "structure constants must be finite".into(),
            ));
        }
        let scale = table.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let a = Algebra {
            dim,
            labels,
            table,
            scale,
            provenance,
        };
        a.validate_associativity()?;
        Ok(a)
    }

    /// Associativity holds iff every left multiplication commutes with every
    /// right multiplication: `L_{e_i} R_{e_l} = R_{e_l} L_{e_i}`, both sides
    /// applied to `e_j` giving the two parenthesizations of `e_i e_j e_l`.
    fn validate_associativity(&self) -> Result<()> {
        let bound = ASSOC_REL_TOL * (1.0 + self.scale);
        let ls: Vec<CMat> = (0..self.dim)
            .map(|i| self.left_mul_matrix(&Element::basis(self.dim, i)))
            .collect();
        let rs: Vec<CMat> = (0..self.dim)
            .map(|l| self.right_mul_matrix(&Element::basis(self.dim, l)))
            .collect();
        let mut worst = (0.0f64, 0usize, 0usize, 0usize);
        for i in 0..self.dim {
            for l in 0..self.dim {
                let d = ls[i].dot(&rs[l]) - rs[l].dot(&ls[i]);
                for ((_, j), z) in d.indexed_iter() {
                    let r = z.norm();
                    if r > worst.0 {
                        worst = (r, i, j, l);
                    }
                }
            }
        }
        if worst.0 > bound {
            return Err(Error::NonAssociativeTable {
                i: worst.1,
                j: worst.2,
                k: worst.3,
                residual: worst.0,
            });
        }
        Ok(())
    }

    #[inline]
    fn c(&self, i: usize, j: usize, k: usize) -> Complex64 {
        self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Largest structure-constant magnitude.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Structure constant `c_ijk`.
    pub fn table_entry(&self, i: usize, j: usize, k: usize) -> Complex64 {
        self.c(i, j, k)
    }

    /// Structure constants as a nested table (for serialization).
    pub fn table_nested(&self) -> Vec<Vec<Vec<Complex64>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| (0..self.dim).map(|k| self.c(i, j, k)).collect())
                    .collect()
            })
            .collect()
    }

    /// The basis element `e_i`.
    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    /// Product of two elements.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        if a.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: a.dim(),
            });
        }
        if b.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: b.dim(),
            });
        }
        let mut out = vec![Complex64::ZERO; self.dim];
        for i in 0..self.dim {
            let ai = a.get(i);
            if ai == Complex64::ZERO {
                continue;
            }
            for j in 0..self.dim {
                let w = ai * b.get(j);
                if w == Complex64::ZERO {
                    continue;
                }
                for k in 0..self.dim {
                    out[k] += w * self.c(i, j, k);
                }
            }
        }
        Ok(Element::new(out))
    }

    /// Matrix of `x -> a x` in the defining basis.
    pub fn left_mul_matrix(&self, a: &Element) -> CMat {
        debug_assert_eq!(a.dim(), self.dim);
        let mut m = CMat::zeros((self.dim, self.dim));
        for i in 0..self.dim {
            let ai = a.get(i);
            if ai == Complex64::ZERO {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    m[(k, j)] += ai * self.c(i, j, k);
                }
            }
        }
        m
    }

    /// Matrix of `x -> x a` in the defining basis.
    pub fn right_mul_matrix(&self, a: &Element) -> CMat {
        debug_assert_eq!(a.dim(), self.dim);
        let mut m = CMat::zeros((self.dim, self.dim));
        for j in 0..self.dim {
            let aj = a.get(j);
            if aj == Complex64::ZERO {
                continue;
            }
            for i in 0..self.dim {
                for k in 0..self.dim {
                    m[(k, i)] += aj * self.c(i, j, k);
                }
            }
        }
        m
    }

    /// Worst basis-pair multiplicativity residual of a covector:
    /// `max_{i,j} |chi(e_i e_j) - chi(e_i) chi(e_j)|`.
    ///
    /// A covector is a character iff this is small *and* the covector is
    /// nonzero; the zero functional has residual `0` but is excluded from
    /// the character space by definition.
    pub fn character_residual(&self, covector: &[Complex64]) -> Result<f64> {
        if covector.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: covector.len(),
            });
        }
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut on_product = Complex64::ZERO;
                for k in 0..self.dim {
                    on_product += self.c(i, j, k) * covector[k];
                }
                worst = worst.max((on_product - covector[i] * covector[j]).norm());
            }
        }
        Ok(worst)
    }

    /// Render an element against the basis labels (for text reports).
    pub fn format_element(&self, a: &Element) -> String {
        let cutoff = 1e-12 * (1.0 + a.inf_norm());
        let mut terms = Vec::new();
        for (i, z) in a.coeffs().iter().enumerate() {
            if z.norm() <= cutoff {
                continue;
            }
            terms.push(format!("({}) {}", fmt_complex(*z), self.labels[i]));
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    // -- identity search ----------------------------------------------------

    /// Least-squares search for a one-sided or two-sided identity element.
    ///
    /// Returns the minimum-norm solution of the defining linear system iff
    /// its residual is at most `tol * (1 + max |c|)`; otherwise `None`
    /// (the algebra has no identity of the requested kind at this tolerance).
    pub fn find_identity(&self, side: Side, tol: f64) -> Option<Element> {
        if self.dim == 0 {
            return Some(Element::zero(0));
        }
        let want_right = matches!(side, Side::Right | Side::TwoSided);
        let want_left = matches!(side, Side::Left | Side::TwoSided);
        let blocks = (want_right as usize + want_left as usize) * self.dim;
        let mut m = CMat::zeros((blocks * self.dim, self.dim));
        let mut b = CVec::zeros(blocks * self.dim);
        let mut row = 0;
        if want_right {
            // e_i u = e_i for all i.
            for i in 0..self.dim {
                let li = self.left_mul_matrix(&Element::basis(self.dim, i));
                m.slice_mut(s![row..row + self.dim, ..]).assign(&li);
                b[row + i] = Complex64::ONE;
                row += self.dim;
            }
        }
        if want_left {
            // u e_j = e_j for all j.
            for j in 0..self.dim {
                let rj = self.right_mul_matrix(&Element::basis(self.dim, j));
                m.slice_mut(s![row..row + self.dim, ..]).assign(&rj);
                b[row + j] = Complex64::ONE;
                row += self.dim;
            }
        }
        let x = linalg::lstsq_min_norm(&m, &b).ok()?;
        let residual = linalg::residual_inf(&m, &x, &b);
        if residual <= tol::scaled(tol, self.scale) {
            Some(Element::from_cvec(&x))
        } else {
            None
        }
    }

    /// Least-squares search for `u` in the span of `s` with `a u = a` for all
    /// `a` in `s` (a right identity *of* the subspace, inside the subspace).
    pub fn find_right_identity_on(&self, s: &SubspaceBasis, tol: f64) -> Result<Option<Element>> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: s.ambient_dim(),
            });
        }
        if s.dim() == 0 {
            return Ok(Some(Element::zero(self.dim)));
        }
        let k = s.dim();
        let basis = s.matrix();
        let mut m = CMat::zeros((k * self.dim, k));
        let mut b = CVec::zeros(k * self.dim);
        for (j, v) in s.vectors().iter().enumerate() {
            let lv = self.left_mul_matrix(v).dot(&basis);
            m.slice_mut(s![j * self.dim..(j + 1) * self.dim, ..])
                .assign(&lv);
            for i in 0..self.dim {
                b[j * self.dim + i] = v.get(i);
            }
        }
        let t = linalg::lstsq_min_norm(&m, &b)?;
        let residual = linalg::residual_inf(&m, &t, &b);
        if residual > tol::scaled(tol, self.scale) {
            return Ok(None);
        }
        let u = Element::from_cvec(&basis.dot(&t));
        Ok(Some(u))
    }

    // -- subspace checks ----------------------------------------------------

    /// Verify that a subspace is a two-sided ideal and return it flagged.
    ///
    /// Checks `e_i v` and `v e_i` stay in the span for every basis pair,
    /// within `IDEAL_CLOSURE_TOL * (1 + max |c|)`.
    pub fn checked_ideal(&self, s: SubspaceBasis) -> Result<SubspaceBasis> {
        let residual = self.ideal_residual(&s)?;
        if residual > tol::scaled(IDEAL_CLOSURE_TOL, self.scale) {
            return Err(Error::NotAnIdeal { residual });
        }
        let mut s = s;
        s.ideal_checked = true;
        Ok(s)
    }

    /// Worst distance of `e_i v_j` / `v_j e_i` from the span of `s`.
    pub fn ideal_residual(&self, s: &SubspaceBasis) -> Result<f64> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: s.ambient_dim(),
            });
        }
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            let e = Element::basis(self.dim, i);
            for v in s.vectors() {
                worst = worst.max(s.residual_from_span(&self.multiply(&e, v)?));
                worst = worst.max(s.residual_from_span(&self.multiply(v, &e)?));
            }
        }
        Ok(worst)
    }

    // -- constructions ------------------------------------------------------

    /// Upper triangular `n x n` complex matrices, basis `E_ij` (`i <= j`)
    /// ordered lexicographically; dimension `n(n+1)/2`.
    pub fn upper_triangular(n: usize) -> Algebra {
        let mut index = std::collections::BTreeMap::new();
        let mut labels = Vec::new();
        for i in 1..=n {
            for j in i..=n {
                index.insert((i, j), labels.len());
                labels.push(format!("E{i}{j}"));
            }
        }
        let dim = labels.len();
        let mut table = vec![Complex64::ZERO; dim * dim * dim];
        for (&(i, j), &p) in &index {
            for (&(k, l), &q) in &index {
                if j == k {
                    let r = index[&(i, l)];
                    table[(p * dim + q) * dim + r] = Complex64::ONE;
                }
            }
        }
        Algebra::from_flat(dim, table, Some(labels), format!("upper_triangular({n})"))
            .expect("E_ij E_kl = [j=k] E_il is associative")
    }

    /// The field of complex numbers as a one-dimensional algebra.
    pub fn complex_field() -> Algebra {
        Algebra::from_flat(
            1,
            vec![Complex64::ONE],
            Some(vec!["1".into()]),
            "complex_field".into(),
        )
        .expect("C is associative")
    }

    /// The `dim`-dimensional algebra with all products zero.
    pub fn zero_product(dim: usize) -> Algebra {
        Algebra::from_flat(
            dim,
            vec![Complex64::ZERO; dim * dim * dim],
            None,
            format!("zero_product({dim})"),
        )
        .expect("zero products are associative")
    }

    /// The algebra `A_phi` on `C^d` with product `a b = phi(a) b`, for a
    /// nonzero functional `phi`.
    pub fn a_phi(phi: &[Complex64]) -> Result<Algebra> {
        let d = phi.len();
        if phi.iter().all(|z| *z == Complex64::ZERO) {
            return Err(Error::ZeroFunctional);
        }
        let mut table = vec![Complex64::ZERO; d * d * d];
        for i in 0..d {
            for j in 0..d {
                table[(i * d + j) * d + j] = phi[i];
            }
        }
        let labels = (1..=d).map(|i| format!("e{i}")).collect();
        Algebra::from_flat(d, table, Some(labels), format!("a_phi(d={d})"))
    }

    /// The theta-Lau product `A x_theta B` with product
    /// `(a, b)(a', b') = (a a' + theta(b) a' + theta(b') a, b b')`,
    /// where `theta` is a character of `B` (given as a covector, verified).
    pub fn lau_product(a: &Algebra, b: &Algebra, theta: &[Complex64]) -> Result<Algebra> {
        if theta.len() != b.dim() {
            return Err(Error::DimensionMismatch {
                expected: b.dim(),
                got: theta.len(),
            });
        }
        if theta.iter().all(|z| *z == Complex64::ZERO) {
            return Err(Error::ZeroFunctional);
        }
        let residual = b.character_residual(theta)?;
        let bound = tol::scaled(tol::DEFAULT_TOL, b.scale());
        if residual > bound {
            return Err(Error::CharacterNotVerified {
                residual,
                tol: bound,
            });
        }
        let da = a.dim();
        let db = b.dim();
        let dim = da + db;
        let mut table = vec![Complex64::ZERO; dim * dim * dim];
        let mut set = |i: usize, j: usize, k: usize, z: Complex64| {
            table[(i * dim + j) * dim + k] += z;
        };
        for i in 0..da {
            for j in 0..da {
                for k in 0..da {
                    set(i, j, k, a.c(i, j, k));
                }
            }
        }
        for i in 0..db {
            for j in 0..db {
                for k in 0..db {
                    set(da + i, da + j, da + k, b.c(i, j, k));
                }
            }
        }
        // (e_i, 0)(0, f_j) = theta(f_j) (e_i, 0) and symmetrically.
        for i in 0..da {
            for j in 0..db {
                set(i, da + j, i, theta[j]);
                set(da + j, i, i, theta[j]);
            }
        }
        let labels = a
            .labels
            .iter()
            .map(|l| format!("a.{l}"))
            .chain(b.labels.iter().map(|l| format!("b.{l}")))
            .collect();
        Algebra::from_flat(
            dim,
            table,
            Some(labels),
            format!("lau({}, {})", a.provenance, b.provenance),
        )
    }

    /// The group algebra `C[G]` of a finite group given by its Cayley table
    /// (`cayley[i][j]` is the index of `g_i g_j`).
    pub fn finite_group_algebra(cayley: &[Vec<usize>]) -> Result<Algebra> {
        let n = cayley.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty Cayley table".into()));
        }
        for row in cayley {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row length {} differs from order {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::NotAGroup(format!("entry {x} out of range 0..{n}")));
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|j| cayley[e][j] == j && cayley[j][e] == j))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;
        for i in 0..n {
            if !(0..n).any(|j| cayley[i][j] == e && cayley[j][i] == e) {
                return Err(Error::NotAGroup(format!("element {i} has no inverse")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        let mut table = vec![Complex64::ZERO; n * n * n];
        for i in 0..n {
            for j in 0..n {
                table[(i * n + j) * n + cayley[i][j]] = Complex64::ONE;
            }
        }
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        Algebra::from_flat(n, table, Some(labels), format!("group_algebra(order={n})"))
    }

    /// Direct sum with componentwise product.
    pub fn direct_sum(a: &Algebra, b: &Algebra) -> Algebra {
        let da = a.dim();
        let dim = da + b.dim();
        let mut table = vec![Complex64::ZERO; dim * dim * dim];
        for i in 0..da {
            for j in 0..da {
                for k in 0..da {
                    table[(i * dim + j) * dim + k] = a.c(i, j, k);
                }
            }
        }
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                for k in 0..b.dim() {
                    table[((da + i) * dim + da + j) * dim + da + k] = b.c(i, j, k);
                }
            }
        }
        let labels = a
            .labels
            .iter()
            .map(|l| format!("l.{l}"))
            .chain(b.labels.iter().map(|l| format!("r.{l}")))
            .collect();
        Algebra::from_flat(
            dim,
            table,
            Some(labels),
            format!("direct_sum({}, {})", a.provenance, b.provenance),
        )
        .expect("direct sum of associative algebras is associative")
    }

    /// Unitization `A^1 = A + C 1`; the adjoined unit is the last basis
    /// element, see [`Algebra::unit_index`] (`= dim(A)`).
    pub fn unitization(&self) -> Algebra {
        let n = self.dim;
        let dim = n + 1;
        let mut table = vec![Complex64::ZERO; dim * dim * dim];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    table[(i * dim + j) * dim + k] = self.c(i, j, k);
                }
            }
        }
        for i in 0..n {
            table[(i * dim + n) * dim + i] = Complex64::ONE;
            table[(n * dim + i) * dim + i] = Complex64::ONE;
        }
        table[(n * dim + n) * dim + n] = Complex64::ONE;
        let mut labels = self.labels.clone();
        labels.push("u".into());
        Algebra::from_flat(
            dim,
            table,
            Some(labels),
            format!("unitization({})", self.provenance),
        )
        .expect("unitization preserves associativity")
    }

    /// Index of the adjoined unit in [`Algebra::unitization`].
    pub fn unit_index(&self) -> usize {
        self.dim
    }

    /// Quotient by a two-sided ideal, with the projection map.
    ///
    /// The complement is represented orthogonally: the returned projection is
    /// the orthogonal projection onto `ideal^perp` expressed in an orthonormal
    /// basis of the complement, which is an algebra homomorphism onto the
    /// quotient.  Errors with [`Error::NotAnIdeal`] if the subspace is not
    /// (numerically) a two-sided ideal.
    pub fn quotient(&self, ideal: &SubspaceBasis) -> Result<(Algebra, LinearMap)> {
        let residual = self.ideal_residual(ideal)?;
        if residual > tol::scaled(IDEAL_CLOSURE_TOL, self.scale) {
            return Err(Error::NotAnIdeal { residual });
        }
        let k = ideal.dim();
        let m = self.dim - k;
        // Orthonormal basis of the complement: trailing left singular vectors.
        let parts = linalg::svd(&ideal.matrix())?;
        let w = parts.u.slice(s![.., k..]).to_owned();
        let wh = linalg::adjoint(&w);
        let basis: Vec<Element> = (0..m)
            .map(|j| Element::from_cvec(&w.column(j).to_owned()))
            .collect();
        let mut table = vec![Complex64::ZERO; m * m * m];
        for i in 0..m {
            for j in 0..m {
                let p = self.multiply(&basis[i], &basis[j])?;
                let coords = wh.dot(&p.as_cvec());
                for l in 0..m {
                    table[(i * m + j) * m + l] = coords[l];
                }
            }
        }
        let labels = (0..m).map(|i| format!("q{i}")).collect();
        let q = Algebra::from_flat(
            m,
            table,
            Some(labels),
            format!("quotient({}, ideal_dim={k})", self.provenance),
        )?;
        let pi = LinearMap::from_matrix(wh);
        let hom = pi.homomorphism_residual(self, &q)?;
        if hom > tol::scaled(tol::HOMOMORPHISM_TOL, self.scale) {
            return Err(Error::Postcondition(format!(
                "quotient projection is not a homomorphism: residual {hom:.3e}"
            )));
        }
        Ok((q, pi))
    }

    /// The algebra structure induced on a multiplicatively closed subspace
    /// (e.g. an ideal viewed as an algebra in its own right).
    pub fn subalgebra_on(&self, s: &SubspaceBasis) -> Result<Algebra> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: s.ambient_dim(),
            });
        }
        let k = s.dim();
        let mut table = vec![Complex64::ZERO; k * k * k];
        let mut worst = 0.0f64;
        for i in 0..k {
            for j in 0..k {
                let p = self.multiply(&s.vectors()[i], &s.vectors()[j])?;
                worst = worst.max(s.residual_from_span(&p));
                let coords = s.coords(&p);
                for l in 0..k {
                    table[(i * k + j) * k + l] = coords[l];
                }
            }
        }
        if worst > tol::scaled(IDEAL_CLOSURE_TOL, self.scale) {
            return Err(Error::SubspaceNotClosed { residual: worst });
        }
        let labels = (0..k).map(|i| format!("s{i}")).collect();
        Algebra::from_flat(
            k,
            table,
            Some(labels),
            format!("subalgebra({}, dim={k})", self.provenance),
        )
    }
}

/// Compact complex scalar formatting for reports: `1`, `-0.5`, `1+2i`, `3i`.
pub fn fmt_complex(z: Complex64) -> String {
    fn fmt_f(x: f64) -> String {
        let s = format!("{x:.6}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s == "-0" {
            "0".into()
        } else {
            s.into()
        }
    }
    let re = fmt_f(z.re);
    let im = fmt_f(z.im);
    if im == "0" {
        re
    } else if re == "0" {
        format!("{im}i")
    } else if z.im < 0.0 {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn rejects_non_associative_table() {
        // e0 e0 = e1, e0 e1 = e0, everything else zero:
        // (e0 e0) e0 = e1 e0 = 0 but e0 (e0 e0) = e0 e1 = e0.
        let z = Complex64::ZERO;
        let o = Complex64::ONE;
        let table = vec![
            vec![vec![z, o], vec![o, z]],
            vec![vec![z, z], vec![z, z]],
        ];
        let err = Algebra::new(table, None).unwrap_err();
        match err {
            Error::NonAssociativeTable { residual, .. } => assert!(residual > 0.5),
            other => panic!("expected NonAssociativeTable, got {other:?}"),
        }
    }

    #[test]
    fn upper_triangular_products_match_matrix_units() {
        let t2 = Algebra::upper_triangular(2);
        assert_eq!(t2.dim(), 3);
        assert_eq!(t2.labels(), &["E11", "E12", "E22"]);
        // E11 E12 = E12, E12 E22 = E12, E12 E12 = 0, E22 E11 = 0.
        let e11 = t2.basis_element(0);
        let e12 = t2.basis_element(1);
        let e22 = t2.basis_element(2);
        assert_eq!(t2.multiply(&e11, &e12).unwrap(), e12);
        assert_eq!(t2.multiply(&e12, &e22).unwrap(), e12);
        assert!(t2.multiply(&e12, &e12).unwrap().is_zero(0.0));
        assert!(t2.multiply(&e22, &e11).unwrap().is_zero(0.0));
    }

    #[test]
    fn upper_triangular_identity_is_diagonal_sum() {
        let t3 = Algebra::upper_triangular(3);
        let id = t3.find_identity(Side::TwoSided, 1e-10).unwrap();
        // Identity of T_3 is E11 + E22 + E33, basis indices 0, 3, 5.
        let expected = Element::from_real(&[1.0, 0.0, 0.0, 1.0, 0.0, 1.0]);
        assert!(id.distance_inf(&expected) < 1e-9);
    }

    #[test]
    fn a_phi_has_left_identities_but_no_right_identity_for_d_at_least_2() {
        let phi = [re(1.0), re(0.0), re(0.0)];
        let a = Algebra::a_phi(&phi).unwrap();
        // u x = phi(u) x, so any u with phi(u) = 1 is a left identity, while
        // x u = phi(x) u can never equal x for all x once d >= 2.
        let left = a.find_identity(Side::Left, 1e-10);
        assert!(left.is_some(), "phi(u)=1 gives a left identity");
        let right = a.find_identity(Side::Right, 1e-10);
        assert!(right.is_none(), "x u = phi(x) u cannot equal x for d >= 2");
        let two = a.find_identity(Side::TwoSided, 1e-10);
        assert!(two.is_none());
    }

    #[test]
    fn a_phi_rejects_zero_functional() {
        let err = Algebra::a_phi(&[Complex64::ZERO; 3]).unwrap_err();
        assert!(matches!(err, Error::ZeroFunctional));
    }

    #[test]
    fn group_algebra_validates_group_axioms() {
        // Z/2.
        let z2 = Algebra::finite_group_algebra(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.dim(), 2);
        // A Latin square that is not associative (order 5 loop).
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = Algebra::finite_group_algebra(&loop5).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
        // Out-of-range entry.
        let err = Algebra::finite_group_algebra(&[vec![0, 1], vec![1, 7]]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn lau_product_restricts_to_factors() {
        let t2 = Algebra::upper_triangular(2);
        let b = Algebra::a_phi(&[re(1.0), re(0.0)]).unwrap();
        let theta = [re(1.0), re(0.0)];
        let lau = Algebra::lau_product(&t2, &b, &theta).unwrap();
        assert_eq!(lau.dim(), 5);
        // (a, 0)(a', 0) recovers the product of A.
        for i in 0..t2.dim() {
            for j in 0..t2.dim() {
                let p = lau
                    .multiply(&lau.basis_element(i), &lau.basis_element(j))
                    .unwrap();
                let q = t2
                    .multiply(&t2.basis_element(i), &t2.basis_element(j))
                    .unwrap();
                for k in 0..t2.dim() {
                    assert_eq!(p.get(k), q.get(k));
                }
                for k in t2.dim()..lau.dim() {
                    assert_eq!(p.get(k), Complex64::ZERO);
                }
            }
        }
        // Mixed product: (a, 0)(0, f_1) = theta(f_1) (a, 0) with theta(f_1)=1.
        let mixed = lau
            .multiply(&lau.basis_element(0), &lau.basis_element(3))
            .unwrap();
        assert_eq!(mixed.get(0), Complex64::ONE);
    }

    #[test]
    fn lau_product_rejects_non_character() {
        let t2 = Algebra::upper_triangular(2);
        // E12-coordinate functional is not multiplicative on T_2.
        let theta = [re(0.0), re(1.0), re(0.0)];
        let err = Algebra::lau_product(&t2, &t2, &theta).unwrap_err();
        assert!(matches!(err, Error::CharacterNotVerified { .. }));
    }

    #[test]
    fn unitization_identity_is_the_adjoined_unit() {
        for a in [
            Algebra::upper_triangular(2),
            Algebra::a_phi(&[re(1.0), re(0.0)]).unwrap(),
            Algebra::zero_product(2),
            Algebra::complex_field(),
        ] {
            let a1 = a.unitization();
            let id = a1.find_identity(Side::TwoSided, 1e-10).expect("unital");
            let unit = Element::basis(a1.dim(), a.unit_index());
            assert!(id.distance_inf(&unit) < 1e-9, "{}", a.provenance());
        }
    }

    #[test]
    fn quotient_of_t2_by_strict_upper_part() {
        let t2 = Algebra::upper_triangular(2);
        let ideal = SubspaceBasis::from_spanning(3, &[Element::basis(3, 1)]).unwrap();
        let (q, pi) = t2.quotient(&ideal).unwrap();
        assert_eq!(q.dim(), 2);
        // The quotient is commutative (isomorphic to C^2).
        for i in 0..2 {
            for j in 0..2 {
                let ab = q.multiply(&q.basis_element(i), &q.basis_element(j)).unwrap();
                let ba = q.multiply(&q.basis_element(j), &q.basis_element(i)).unwrap();
                assert!(ab.distance_inf(&ba) < 1e-12);
            }
        }
        assert!(pi.is_surjective().unwrap());
        // E12 maps to zero.
        let img = pi.apply(&Element::basis(3, 1)).unwrap();
        assert!(img.is_zero(1e-12));
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let t2 = Algebra::upper_triangular(2);
        // span{E11} is not an ideal: E11 E12 = E12 leaves the span.
        let s = SubspaceBasis::from_spanning(3, &[Element::basis(3, 0)]).unwrap();
        let err = t2.quotient(&s).unwrap_err();
        assert!(matches!(err, Error::NotAnIdeal { .. }));
    }

    #[test]
    fn direct_sum_multiplies_componentwise() {
        let a = Algebra::complex_field();
        let b = Algebra::upper_triangular(2);
        let s = Algebra::direct_sum(&a, &b);
        assert_eq!(s.dim(), 4);
        let p = s.multiply(&s.basis_element(0), &s.basis_element(1)).unwrap();
        assert!(p.is_zero(0.0), "cross terms vanish");
    }

    #[test]
    fn subspace_basis_orthonormalizes_and_projects() {
        let v1 = Element::from_real(&[1.0, 1.0, 0.0]);
        let v2 = Element::from_real(&[2.0, 2.0, 0.0]);
        let s = SubspaceBasis::from_spanning(3, &[v1, v2]).unwrap();
        assert_eq!(s.dim(), 1);
        let w = Element::from_real(&[1.0, -1.0, 5.0]);
        let p = s.project(&w);
        // Projection onto span{(1,1,0)/sqrt 2} of (1,-1,5) is 0.
        assert!(p.is_zero(1e-12));
        assert!((s.residual_from_span(&w) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn find_right_identity_on_kernel_spans() {
        let t2 = Algebra::upper_triangular(2);
        // ker(phi_1) = span{E12, E22} has right identity E22.
        let s = SubspaceBasis::from_spanning(3, &[Element::basis(3, 1), Element::basis(3, 2)])
            .unwrap();
        let u = t2.find_right_identity_on(&s, 1e-10).unwrap().expect("E22");
        assert!(u.distance_inf(&Element::from_real(&[0.0, 0.0, 1.0])) < 1e-9);
        // ker(phi_2) = span{E11, E12} has none: E12 u = 0 for u in the span.
        let s = SubspaceBasis::from_spanning(3, &[Element::basis(3, 0), Element::basis(3, 1)])
            .unwrap();
        assert!(t2.find_right_identity_on(&s, 1e-10).unwrap().is_none());
    }

    #[test]
    fn character_residual_detects_multiplicativity() {
        let t2 = Algebra::upper_triangular(2);
        let phi1 = [re(1.0), re(0.0), re(0.0)];
        assert!(t2.character_residual(&phi1).unwrap() < 1e-15);
        let sum = [re(1.0), re(0.0), re(1.0)];
        // phi_1 + phi_2 fails multiplicativity with residual exactly 1.
        assert!((t2.character_residual(&sum).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn format_element_is_compact() {
        let t2 = Algebra::upper_triangular(2);
        let e = Element::new(vec![re(1.0), Complex64::new(0.0, -2.5), re(0.0)]);
        assert_eq!(t2.format_element(&e), "(1) E11 + (-2.5i) E12");
        assert_eq!(t2.format_element(&Element::zero(3)), "0");
    }
}
