//! Decision procedures for the pointwise amenability notions, with witnesses.
//!
//! In finite dimensions `A** = A`, so the functional `m` in the definitions
//! is an element `u`, and the approximate-identity nets collapse to single
//! elements (closed bounded sets are compact).  Every notion then becomes a
//! finite feasibility problem:
//!
//! * Delta-weak identity: `psi(u) = 1` for every character `psi`;
//! * Delta-weak `phi`-amenability: `phi(u) = 0` and `psi(u) = 1` for every
//!   other character (for `phi = 0`, just a Delta-weak identity);
//! * `phi`-amenability: `a u = phi(a) u` (literal dual action, convention
//!   `right`) or `u a = phi(a) u` (mirrored action, convention `left`),
//!   together with `phi(u) = 1`;
//! * kernel right identity: `u ∈ ker(phi)` with `a u = a` on `ker(phi)`.
//!
//! All systems are solved by minimum-norm least squares; a `yes` is only
//! reported when the witness re-verifies against the defining equations, and
//! a `no` reports the best candidate's residuals.  The two `phi`-amenability
//! conventions genuinely differ (see [`Convention`]): each of the standard
//! examples (`A_phi` spaces vs upper triangular algebras) is reproduced by
//! exactly one of them, which is why the switch is user-visible.

use ndarray::s;
use num_complex::Complex64;

use crate::algebra::{pair, Algebra, Element, SubspaceBasis};
use crate::characters::{Character, CharacterSet, PhiSpec};
use crate::error::{Error, Result};
use crate::linalg::{self, CMat, CVec};
use crate::tol;

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Which dual-module action `phi_amenable` uses.
///
/// `Right` is the literal printed action `(f.a)(b) = f(ab)`, giving the
/// elementwise condition `a u = phi(a) u`; it reproduces the upper
/// triangular verdicts (amenable only at `phi_1`) and the kernel
/// right-identity equivalence.  `Left` is the mirrored action
/// `(a.f)(b) = f(ba)`, giving `u a = phi(a) u`; it reproduces the `A_phi`
/// verdict (amenable iff the dimension is 1).  No single convention
/// reproduces both families; the default is `Left`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Left,
    Right,
}

impl std::fmt::Display for Convention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Convention::Left => write!(f, "left"),
            Convention::Right => write!(f, "right"),
        }
    }
}

impl std::str::FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Convention::Left),
            "right" => Ok(Convention::Right),
            other => Err(Error::InvalidInput(format!(
                "unknown convention {other:?} (expected \"left\" or \"right\")"
            ))),
        }
    }
}

/// Outcome of a decision procedure: verdict, witness, and the evidence.
#[derive(Clone, Debug)]
pub struct DecisionReport {
    decision: bool,
    witness: Option<Element>,
    residuals: Vec<f64>,
    convention: Option<Convention>,
    phi: String,
    affine_dim: Option<usize>,
    notes: Vec<String>,
}

impl DecisionReport {
    pub fn is_yes(&self) -> bool {
        self.decision
    }

    /// The verified witness (present exactly for `yes` decisions).
    pub fn witness(&self) -> Option<&Element> {
        self.witness.as_ref()
    }

    /// Per-constraint defects of the witness (or of the best candidate,
    /// for `no` decisions).
    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().cloned().fold(0.0, f64::max)
    }

    pub fn convention(&self) -> Option<Convention> {
        self.convention
    }

    /// Name of the character the decision is about (`"zero"` for `phi = 0`).
    pub fn phi(&self) -> &str {
        &self.phi
    }

    /// Affine dimension of the full solution set (`yes` decisions only).
    pub fn affine_dim(&self) -> Option<usize> {
        self.affine_dim
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }
}

/// Outcome of [`extend_witness_check`]: per-character extension defects.
#[derive(Clone, Debug)]
pub struct ExtensionReport {
    /// For each `psi != phi`: (label, `max_i |psi(e_i u) - psi(e_i)|`).
    pub psi_rows: Vec<(String, f64)>,
    /// The `psi = phi` row: `max_i |phi(e_i u) - phi(e_i)|`.
    pub phi_row: f64,
    /// `phi(u)` — the would-be `m(phi)`, which the definition forces to `0`.
    pub phi_of_u: Complex64,
    /// `phi(a0 u)` for the given `a0` with `phi(a0) = 1`; extending the
    /// witness property to `psi = phi` would force this to be `1 = m(phi)`,
    /// contradicting `m(phi) = 0`.
    pub phi_of_a0_u: Complex64,
    pub notes: Vec<String>,
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

fn verify_phi(a: &Algebra, phi: &Character, tol: f64) -> Result<()> {
    if phi.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: phi.dim(),
        });
    }
    let residual = a.character_residual(phi.covector())?;
    let bound = tol::scaled(tol, a.scale());
    if residual > bound {
        return Err(Error::CharacterNotVerified {
            residual,
            tol: bound,
        });
    }
    Ok(())
}

/// Largest covector entry across a set of characters, for tolerance scaling.
fn covector_scale<'a>(chars: impl Iterator<Item = &'a Character>) -> f64 {
    chars
        .flat_map(|c| c.covector().iter())
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// Minimum-norm solve of `M u = b` returning (witness, per-row defects).
fn solve_with_residuals(m: &CMat, b: &CVec) -> Result<(Element, Vec<f64>)> {
    let x = linalg::lstsq_min_norm(m, b)?;
    let r = m.dot(&x) - b;
    let residuals = r.iter().map(|z| z.norm()).collect();
    Ok((Element::from_cvec(&x), residuals))
}

fn norm_notes(u: &Element) -> Vec<String> {
    vec![format!(
        "minimum l2-norm witness: l2 = {:.6}, l1 = {:.6}",
        u.l2_norm(),
        u.l1_norm()
    )]
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Orthonormal basis of `ker(phi)`, verified as a two-sided ideal.
/// Its dimension is always `dim(A) - 1`.
pub fn kernel_basis(a: &Algebra, phi: &Character, tol: f64) -> Result<SubspaceBasis> {
    verify_phi(a, phi, tol)?;
    // Null vectors v of the plain covector row satisfy sum_j phi_j v_j = 0,
    // i.e. phi(v) = 0 (the functional is linear, not sesquilinear).
    let mut row = CMat::zeros((1, a.dim()));
    for (j, z) in phi.covector().iter().enumerate() {
        row[(0, j)] = *z;
    }
    let ns = linalg::nullspace(&row)?;
    let vectors: Vec<Element> = (0..ns.ncols())
        .map(|j| Element::from_cvec(&ns.column(j).to_owned()))
        .collect();
    let basis = SubspaceBasis::from_orthonormal(a.dim(), vectors)?;
    a.checked_ideal(basis)
}

/// Decide whether `A` has a Delta-weak identity: one element `u` with
/// `psi(u) = 1` for every character.  Always feasible when `Delta(A)` is
/// nonempty (characters are linearly independent); the report carries the
/// affine dimension `dim(A) - |Delta(A)|` of the full solution set, which is
/// positive exactly when the witness is non-unique.
pub fn delta_weak_identity(
    a: &Algebra,
    chars: &CharacterSet,
    tol: f64,
) -> Result<DecisionReport> {
    if chars.is_empty() {
        return Err(Error::NoCharacters);
    }
    let m = chars.covector_matrix();
    let b = CVec::from_elem(chars.len(), Complex64::ONE);
    let (u, residuals) = solve_with_residuals(&m, &b)?;
    let bound = tol::scaled(tol, a.scale().max(covector_scale(chars.iter())));
    let yes = residuals.iter().all(|&r| r <= bound);
    let affine = a.dim() - linalg::rank(&m)?;
    let mut notes = norm_notes(&u);
    notes.push(format!("solution affine dimension = {affine}"));
    Ok(DecisionReport {
        decision: yes,
        witness: yes.then_some(u),
        residuals,
        convention: None,
        phi: "all".into(),
        affine_dim: yes.then_some(affine),
        notes,
    })
}

/// Decide Delta-weak `phi`-amenability for `phi` in `Delta(A) ∪ {0}`.
///
/// Feasibility of `{phi(u) = 0} ∪ {psi(u) = 1 : psi ∈ Delta(A) \ {phi}}`;
/// for `phi = 0` the first constraint is dropped (the condition is exactly a
/// Delta-weak identity).  The single-character case is decided `yes` with
/// witness `0`.  The report re-verifies the definitional form
/// `psi(a u) = psi(a)` over a kernel basis.
pub fn delta_weak_phi_amenable(
    a: &Algebra,
    chars: &CharacterSet,
    phi: PhiSpec<'_>,
    tol: f64,
) -> Result<DecisionReport> {
    if chars.is_empty() {
        return Err(Error::NoCharacters);
    }
    let n = a.dim();
    let mut notes = Vec::new();
    // Build the constraint rows: phi first (target 0), then the others.
    let mut rows: Vec<&[Complex64]> = Vec::new();
    let mut rhs: Vec<Complex64> = Vec::new();
    match phi {
        PhiSpec::Chi(c) => {
            verify_phi(a, c, tol)?;
            let pos = chars.position_of(c.covector()).ok_or_else(|| {
                Error::Precondition("phi does not belong to Delta(A)".into())
            })?;
            rows.push(c.covector());
            rhs.push(Complex64::ZERO);
            for (i, psi) in chars.iter().enumerate() {
                if i != pos {
                    rows.push(psi.covector());
                    rhs.push(Complex64::ONE);
                }
            }
            if chars.len() == 1 {
                notes.push(
                    "single-character case: witness 0 satisfies phi(u) = 0 vacuously".into(),
                );
            }
        }
        PhiSpec::Zero => {
            for psi in chars.iter() {
                rows.push(psi.covector());
                rhs.push(Complex64::ONE);
            }
            notes.push("phi = 0: the condition is a Delta-weak identity".into());
        }
    }
    let mut m = CMat::zeros((rows.len(), n));
    for (i, row) in rows.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            m[(i, j)] = *z;
        }
    }
    let b = CVec::from_vec(rhs);
    let (u, residuals) = solve_with_residuals(&m, &b)?;
    let bound = tol::scaled(tol, a.scale().max(covector_scale(chars.iter())));
    let yes = residuals.iter().all(|&r| r <= bound);
    let affine = a.dim() - linalg::rank(&m)?;

    // Definitional form: psi(a u) = psi(a) for a in ker(phi)
    // (all of A when phi = 0) and every psi in Delta(A) \ {phi}.
    let kernel: Vec<Element> = match phi {
        PhiSpec::Chi(c) => kernel_basis(a, c, tol)?.vectors().to_vec(),
        PhiSpec::Zero => (0..n).map(|i| a.basis_element(i)).collect(),
    };
    let mut def_defect = 0.0f64;
    for psi in chars.iter() {
        if let PhiSpec::Chi(c) = phi {
            if psi.distance_inf(c) <= tol::DEDUPE_TOL {
                continue;
            }
        }
        for v in &kernel {
            let vu = a.multiply(v, &u)?;
            let d = (psi.evaluate(&vu)? - psi.evaluate(v)?).norm();
            def_defect = def_defect.max(d);
        }
    }
    notes.extend(norm_notes(&u));
    notes.push(format!(
        "definitional form max defect |psi(a u) - psi(a)| over kernel basis = {def_defect:.3e}"
    ));
    Ok(DecisionReport {
        decision: yes,
        witness: yes.then_some(u),
        residuals,
        convention: None,
        phi: phi.name(),
        affine_dim: yes.then_some(affine),
        notes,
    })
}

/// Decide `phi`-amenability under the chosen dual-action convention.
///
/// `Right` (literal): `e_i u = phi(e_i) u` for every basis element, plus
/// `phi(u) = 1`.  `Left` (mirrored): `u e_i = phi(e_i) u`, plus
/// `phi(u) = 1`.  Witness is the minimum-norm solution; residuals list one
/// sup-norm defect per basis constraint followed by `|phi(u) - 1|`.
pub fn phi_amenable(
    a: &Algebra,
    phi: &Character,
    convention: Convention,
    tol: f64,
) -> Result<DecisionReport> {
    verify_phi(a, phi, tol)?;
    let n = a.dim();
    let mut m = CMat::zeros((n * n + 1, n));
    for i in 0..n {
        let e = a.basis_element(i);
        let mut block = match convention {
            Convention::Right => a.left_mul_matrix(&e),
            Convention::Left => a.right_mul_matrix(&e),
        };
        let pe = phi.covector()[i];
        for d in 0..n {
            block[(d, d)] -= pe;
        }
        m.slice_mut(s![i * n..(i + 1) * n, ..]).assign(&block);
    }
    for (j, z) in phi.covector().iter().enumerate() {
        m[(n * n, j)] = *z;
    }
    let mut b = CVec::zeros(n * n + 1);
    b[n * n] = Complex64::ONE;
    let x = linalg::lstsq_min_norm(&m, &b)?;
    let u = Element::from_cvec(&x);
    // Per-basis-element sup defects, then the normalization defect.
    let mut residuals = Vec::with_capacity(n + 1);
    for i in 0..n {
        let e = a.basis_element(i);
        let lhs = match convention {
            Convention::Right => a.multiply(&e, &u)?,
            Convention::Left => a.multiply(&u, &e)?,
        };
        let rhs = u.scaled(phi.covector()[i]);
        residuals.push(lhs.distance_inf(&rhs));
    }
    residuals.push((pair(phi.covector(), &u) - Complex64::ONE).norm());
    let bound = tol::scaled(
        tol,
        a.scale().max(covector_scale(std::iter::once(phi))),
    );
    let yes = residuals.iter().all(|&r| r <= bound);
    let affine = yes.then(|| n - linalg::rank(&m).unwrap_or(n));
    let mut notes = vec![match convention {
        Convention::Right => "convention right (literal action): a u = phi(a) u".to_string(),
        Convention::Left => "convention left (mirrored action): u a = phi(a) u".to_string(),
    }];
    notes.extend(norm_notes(&u));
    Ok(DecisionReport {
        decision: yes,
        witness: yes.then_some(u),
        residuals,
        convention: Some(convention),
        phi: phi.label().unwrap_or("phi").to_string(),
        affine_dim: affine,
        notes,
    })
}

/// Decide whether `ker(phi)` has a right identity: `u ∈ ker(phi)` with
/// `a u = a` for every `a ∈ ker(phi)` (the finite-dimensional collapse of a
/// bounded right approximate identity).
pub fn right_identity_in_kernel(
    a: &Algebra,
    phi: &Character,
    tol: f64,
) -> Result<DecisionReport> {
    let kernel = kernel_basis(a, phi, tol)?;
    let k = kernel.dim();
    let n = a.dim();
    // Solve a_j u = a_j over the kernel basis, with u constrained to the
    // kernel span: unknowns are coordinates in that span.
    let basis = kernel.matrix();
    let mut m = CMat::zeros((k * n, k));
    let mut b = CVec::zeros(k * n);
    for (j, v) in kernel.vectors().iter().enumerate() {
        let lv = a.left_mul_matrix(v).dot(&basis);
        m.slice_mut(s![j * n..(j + 1) * n, ..]).assign(&lv);
        for i in 0..n {
            b[j * n + i] = v.get(i);
        }
    }
    let t = linalg::lstsq_min_norm(&m, &b)?;
    let u = Element::from_cvec(&basis.dot(&t));
    let mut residuals = Vec::with_capacity(k + 1);
    for v in kernel.vectors() {
        let vu = a.multiply(v, &u)?;
        residuals.push(vu.distance_inf(v));
    }
    residuals.push(pair(phi.covector(), &u).norm());
    let bound = tol::scaled(
        tol,
        a.scale().max(covector_scale(std::iter::once(phi))),
    );
    let yes = residuals.iter().all(|&r| r <= bound);
    let affine = yes.then(|| k - linalg::rank(&m).unwrap_or(k));
    let mut notes = vec![format!(
        "right identity of ker(phi): defects per kernel basis vector, then |phi(u)|; kernel dimension {k}"
    )];
    notes.extend(norm_notes(&u));
    Ok(DecisionReport {
        decision: yes,
        witness: yes.then_some(u),
        residuals,
        convention: None,
        phi: phi.label().unwrap_or("phi").to_string(),
        affine_dim: affine,
        notes,
    })
}

/// Combine a Delta-weak identity `e` of an ideal `I` with a left identity
/// `f` of `A/I` into `g = e + f - e f`, a Delta-weak identity candidate for
/// all of `A` (the finite-dimensional form of the two-net combination).
///
/// Preconditions (residual-checked): `e ∈ I` with `psi(a e) = psi(a)` for
/// every `a` in the ideal basis and every character; `f a - a ∈ I` for every
/// basis `a` of `A`.  Postcondition (verified): `psi(g a) = psi(a)` for all
/// basis `a` and all characters — algebraically exact, so a failure signals
/// a tolerance bug rather than a math gap.
pub fn combine_identities(
    a: &Algebra,
    ideal: &SubspaceBasis,
    e: &Element,
    f: &Element,
    chars: &CharacterSet,
    tol: f64,
) -> Result<Element> {
    let bound = tol::scaled(tol, a.scale().max(covector_scale(chars.iter())));
    let e_membership = ideal.residual_from_span(e);
    if e_membership > bound {
        return Err(Error::Precondition(format!(
            "e is not in the ideal: distance {e_membership:.3e}"
        )));
    }
    let mut e_defect = 0.0f64;
    for v in ideal.vectors() {
        let ve = a.multiply(v, e)?;
        for psi in chars.iter() {
            e_defect = e_defect.max((psi.evaluate(&ve)? - psi.evaluate(v)?).norm());
        }
    }
    if e_defect > bound {
        return Err(Error::Precondition(format!(
            "e is not a Delta-weak identity for the ideal: defect {e_defect:.3e}"
        )));
    }
    let mut f_defect = 0.0f64;
    for i in 0..a.dim() {
        let ei = a.basis_element(i);
        let fa = a.multiply(f, &ei)?;
        f_defect = f_defect.max(ideal.residual_from_span(&(&fa - &ei)));
    }
    if f_defect > bound {
        return Err(Error::Precondition(format!(
            "f is not a left identity modulo the ideal: defect {f_defect:.3e}"
        )));
    }
    let ef = a.multiply(e, f)?;
    let g = &(e + f) - &ef;
    let mut post = 0.0f64;
    for i in 0..a.dim() {
        let ei = a.basis_element(i);
        let ga = a.multiply(&g, &ei)?;
        for psi in chars.iter() {
            post = post.max((psi.evaluate(&ga)? - psi.evaluate(&ei)?).norm());
        }
    }
    if post > bound {
        return Err(Error::Postcondition(format!(
            "combined element fails psi(g a) = psi(a): defect {post:.3e}"
        )));
    }
    Ok(g)
}

/// Extend a character `phi_I` of an ideal `I` (with two-sided identity `u`)
/// to the whole algebra via `phi~(a) = phi_I(proj_I(a u))`.
///
/// `phi_I` is a covector in the coordinates of the ideal's orthonormal
/// basis.  The extension is verified multiplicative on `A` and checked to
/// restrict back to `phi_I` on `I`.
pub fn extend_character_from_ideal(
    a: &Algebra,
    ideal: &SubspaceBasis,
    phi_i: &[Complex64],
    u: &Element,
    tol: f64,
) -> Result<Character> {
    if phi_i.len() != ideal.dim() {
        return Err(Error::DimensionMismatch {
            expected: ideal.dim(),
            got: phi_i.len(),
        });
    }
    let bound = tol::scaled(tol, a.scale());
    let membership = ideal.residual_from_span(u);
    if membership > bound {
        return Err(Error::Precondition(format!(
            "u is not in the ideal: distance {membership:.3e}"
        )));
    }
    let mut identity_defect = 0.0f64;
    for v in ideal.vectors() {
        identity_defect = identity_defect.max(a.multiply(v, u)?.distance_inf(v));
        identity_defect = identity_defect.max(a.multiply(u, v)?.distance_inf(v));
    }
    if identity_defect > bound {
        return Err(Error::Precondition(format!(
            "u is not a two-sided identity of the ideal: defect {identity_defect:.3e}"
        )));
    }
    let phi_of_u: Complex64 = phi_i
        .iter()
        .zip(ideal.coords(u))
        .map(|(p, c)| p * c)
        .sum();
    if (phi_of_u - Complex64::ONE).norm() > bound {
        return Err(Error::Precondition(format!(
            "phi_I(u) = {} differs from 1",
            crate::algebra::fmt_complex(phi_of_u)
        )));
    }
    // phi~(e_i) = phi_I(proj_I(e_i u)).
    let covector: Vec<Complex64> = (0..a.dim())
        .map(|i| {
            let eu = a.multiply(&a.basis_element(i), u)?;
            Ok(phi_i
                .iter()
                .zip(ideal.coords(&eu))
                .map(|(p, c)| p * c)
                .sum())
        })
        .collect::<Result<_>>()?;
    let extension = Character::verify(a, covector, tol).map_err(|e| match e {
        Error::CharacterNotVerified { residual, tol } => Error::Postcondition(format!(
            "extension is not multiplicative (residual {residual:.3e} > {tol:.3e}); \
             the identity hypothesis on u must have failed"
        )),
        other => other,
    })?;
    // Restriction check: the extension agrees with phi_I on the ideal basis.
    let mut restriction_defect = 0.0f64;
    for (j, v) in ideal.vectors().iter().enumerate() {
        restriction_defect =
            restriction_defect.max((pair(extension.covector(), v) - phi_i[j]).norm());
    }
    if restriction_defect > bound {
        return Err(Error::Postcondition(format!(
            "extension does not restrict to phi_I: defect {restriction_defect:.3e}"
        )));
    }
    Ok(extension)
}

/// Check how far a Delta-weak `phi`-amenability witness `u` extends beyond
/// the kernel: verifies `psi(a u) = psi(a)` over the *whole* basis for every
/// `psi != phi`, and reports the `psi = phi` row, which cannot vanish — it
/// would force `m(phi) = phi(a0 u) = 1` against `m(phi) = phi(u) = 0`.
pub fn extend_witness_check(
    a: &Algebra,
    chars: &CharacterSet,
    phi: &Character,
    u: &Element,
    a0: &Element,
) -> Result<ExtensionReport> {
    verify_phi(a, phi, tol::DEFAULT_TOL)?;
    let phi_a0 = pair(phi.covector(), a0);
    if (phi_a0 - Complex64::ONE).norm() > tol::scaled(tol::DEFAULT_TOL, a.scale()) {
        return Err(Error::Precondition(format!(
            "phi(a0) = {} differs from 1",
            crate::algebra::fmt_complex(phi_a0)
        )));
    }
    let mut psi_rows = Vec::new();
    let mut phi_row = 0.0f64;
    for psi in chars.iter() {
        let mut worst = 0.0f64;
        for i in 0..a.dim() {
            let e = a.basis_element(i);
            let eu = a.multiply(&e, u)?;
            worst = worst.max((psi.evaluate(&eu)? - psi.evaluate(&e)?).norm());
        }
        if psi.distance_inf(phi) <= tol::DEDUPE_TOL {
            phi_row = worst;
        } else {
            psi_rows.push((psi.label().unwrap_or("psi").to_string(), worst));
        }
    }
    let phi_of_u = pair(phi.covector(), u);
    let a0u = a.multiply(a0, u)?;
    let phi_of_a0_u = pair(phi.covector(), &a0u);
    let notes = vec![
        format!(
            "m(phi) = phi(u) = {}; extending the identity to psi = phi would force \
             phi(a0 u) = phi(a0) = 1, but phi(a0 u) = phi(a0) phi(u) = {}",
            crate::algebra::fmt_complex(phi_of_u),
            crate::algebra::fmt_complex(phi_of_a0_u)
        ),
    ];
    Ok(ExtensionReport {
        psi_rows,
        phi_row,
        phi_of_u,
        phi_of_a0_u,
        notes,
    })
}
