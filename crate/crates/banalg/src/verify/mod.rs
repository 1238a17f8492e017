//! Fixture corpus and cross-check harness.
//!
//! The corpus pins every worked example family (triangular algebras, the
//! `A_phi` spaces, Lau products, finite group algebras, direct sums,
//! quotients, and degenerate cases without characters), each with its known
//! character count.  `run_all` replays the finite-dimensionally valid claims
//! against the solvers:
//!
//! * character counts and linear independence of the character matrix;
//! * Delta-weak `phi`-amenability holds for every `phi ∈ Delta(A) ∪ {0}` —
//!   the corpus-wide emergent fact (characters of a finite-dimensional
//!   algebra are linearly independent, so the feasibility system always has
//!   a solution; only infinite dimensions admit counterexamples);
//! * the implication chains (a `phi`-amenable point forces a Delta-weak
//!   identity and 0-amenability);
//! * the kernel equivalence: on unital fixtures, `ker(phi)` has a right
//!   identity iff `A` is `phi`-amenable under the literal (`right`)
//!   convention;
//! * surjection transfer, ideal restriction, identity combination, and
//!   character extension on their worked configurations;
//! * agreement with the independent Newton-multistart [`oracle`] on every
//!   fixture of dimension at most 4.
//!
//! The summary is deterministic: fixtures are processed in name order and
//! every sub-check runs in a fixed sequence, so equal seeds give byte-equal
//! reports.

pub mod oracle;

use num_complex::Complex64;

use crate::algebra::{pair, Algebra, Element, LinearMap, Side, SubspaceBasis};
use crate::amenability::{
    combine_identities, delta_weak_identity, delta_weak_phi_amenable,
    extend_character_from_ideal, kernel_basis, phi_amenable, right_identity_in_kernel,
    Convention, DecisionReport,
};
use crate::characters::{character_space, Character, CharacterSet, PhiSpec};
use crate::error::{Error, Result};
use crate::linalg;
use crate::tol;

const ORACLE_STARTS: usize = 200;
const ORACLE_MAX_DIM: usize = 4;

/// A named algebra with its known character count (and, for Lau products,
/// the component algebras for the additivity cross-check).
pub struct Fixture {
    pub name: String,
    pub algebra: Algebra,
    pub expected_characters: usize,
    pub lau_parts: Option<(Algebra, Algebra)>,
}

impl Fixture {
    fn plain(name: &str, algebra: Algebra, expected_characters: usize) -> Fixture {
        Fixture {
            name: name.to_string(),
            algebra,
            expected_characters,
            lau_parts: None,
        }
    }
}

/// Aggregate result of a harness run.
#[derive(Clone, Debug, PartialEq)]
pub struct Summary {
    pub fixtures: usize,
    pub checks: usize,
    pub failures: Vec<String>,
    pub seed: u64,
    pub tol: f64,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Full matrix algebra `M_n(C)` on the unit basis, `E_ij E_kl = d_jk E_il`.
/// Simple and noncommutative, so it has no characters at all — the corpus's
/// hardest "empty Delta" case (its unitization still has one character).
fn full_matrix(n: usize) -> Result<Algebra> {
    let dim = n * n;
    let mut table = vec![vec![vec![Complex64::ZERO; dim]; dim]; dim];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                table[i * n + j][j * n + l][i * n + l] = Complex64::ONE;
            }
        }
    }
    let labels = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("E{}{}", i + 1, j + 1)))
        .collect();
    Algebra::new(table, Some(labels))
}

fn first_coordinate_phi(d: usize) -> Vec<Complex64> {
    let mut phi = vec![Complex64::ZERO; d];
    phi[0] = Complex64::ONE;
    phi
}

fn cyclic_cayley(m: usize) -> Vec<Vec<usize>> {
    (0..m).map(|i| (0..m).map(|j| (i + j) % m).collect()).collect()
}

fn s3_cayley() -> Vec<Vec<usize>> {
    // Permutations of {0,1,2} listed explicitly; entry (i,j) = index of
    // "apply p_i, then p_j".
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let compose = |p: &[usize; 3], q: &[usize; 3]| [q[p[0]], q[p[1]], q[p[2]]];
    (0..6)
        .map(|i| {
            (0..6)
                .map(|j| {
                    let r = compose(&perms[i], &perms[j]);
                    perms.iter().position(|p| *p == r).unwrap()
                })
                .collect()
        })
        .collect()
}

/// The versioned fixture corpus.  Fixed rather than randomized: random
/// structure-constant tensors are almost never associative, so coverage
/// comes from the constructor families instead.
pub fn default_corpus() -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push(Fixture::plain(
            &format!("t{n}"),
            Algebra::upper_triangular(n),
            n,
        ));
    }
    for d in 1..=5 {
        out.push(Fixture::plain(
            &format!("a_phi_c{d}"),
            Algebra::a_phi(&first_coordinate_phi(d))?,
            1,
        ));
    }
    out.push(Fixture::plain(
        "a_phi_complex",
        Algebra::a_phi(&[re(1.0), Complex64::new(0.0, 0.5), re(-0.25)])?,
        1,
    ));

    let aphi2 = || Algebra::a_phi(&first_coordinate_phi(2));
    out.push(Fixture {
        name: "lau_a_phi2_a_phi2".into(),
        algebra: Algebra::lau_product(&aphi2()?, &aphi2()?, &first_coordinate_phi(2))?,
        expected_characters: 2,
        lau_parts: Some((aphi2()?, aphi2()?)),
    });
    let t2 = Algebra::upper_triangular(2);
    let c = Algebra::complex_field();
    out.push(Fixture {
        name: "lau_t2_c".into(),
        algebra: Algebra::lau_product(&t2, &c, &[re(1.0)])?,
        expected_characters: 3,
        lau_parts: Some((t2.clone(), c.clone())),
    });
    let aphi3 = Algebra::a_phi(&first_coordinate_phi(3))?;
    out.push(Fixture {
        name: "lau_c_a_phi3".into(),
        algebra: Algebra::lau_product(&c, &aphi3, &first_coordinate_phi(3))?,
        expected_characters: 2,
        lau_parts: Some((c.clone(), aphi3.clone())),
    });

    for m in 1..=4 {
        out.push(Fixture::plain(
            &format!("group_z{m}"),
            Algebra::finite_group_algebra(&cyclic_cayley(m))?,
            m,
        ));
    }
    out.push(Fixture::plain(
        "group_s3",
        Algebra::finite_group_algebra(&s3_cayley())?,
        2, // one-dimensional representations: trivial and sign
    ));

    out.push(Fixture::plain(
        "sum_t2_c",
        Algebra::direct_sum(&t2, &c),
        3,
    ));
    out.push(Fixture::plain(
        "sum_c_c",
        Algebra::direct_sum(&c, &c),
        2,
    ));
    out.push(Fixture::plain(
        "sum_t2_zero1",
        Algebra::direct_sum(&t2, &Algebra::zero_product(1)),
        2,
    ));

    // Quotients by character kernels (exact spans, so the corpus does not
    // depend on the solver): T_2 / ker(phi_1) and T_3 / ker(phi_2), both C.
    let ker_phi1 = t2.checked_ideal(SubspaceBasis::from_spanning(
        3,
        &[Element::basis(3, 1), Element::basis(3, 2)],
    )?)?;
    out.push(Fixture::plain(
        "quot_t2_mod_ker_phi1",
        t2.quotient(&ker_phi1)?.0,
        1,
    ));
    let t3 = Algebra::upper_triangular(3);
    let ker_phi2 = t3.checked_ideal(SubspaceBasis::from_spanning(
        6,
        &[0usize, 1, 2, 4, 5].map(|i| Element::basis(6, i)).to_vec(),
    )?)?;
    out.push(Fixture::plain(
        "quot_t3_mod_ker_phi2",
        t3.quotient(&ker_phi2)?.0,
        1,
    ));

    out.push(Fixture::plain("zero2", Algebra::zero_product(2), 0));
    out.push(Fixture::plain(
        "unitization_zero2",
        Algebra::zero_product(2).unitization(),
        1,
    ));
    out.push(Fixture::plain("full_matrix_2", full_matrix(2)?, 0));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Individual checks (pass = Ok, fail = Err with the reason)
// ---------------------------------------------------------------------------

fn expect_yes(r: Result<DecisionReport>, what: &str) -> Result<()> {
    match r {
        Ok(rep) if rep.is_yes() => Ok(()),
        Ok(rep) => Err(Error::Postcondition(format!(
            "{what}: expected yes, got no (max residual {:.3e})",
            rep.max_residual()
        ))),
        Err(e) => Err(Error::Postcondition(format!("{what}: {e}"))),
    }
}

/// The Proposition's small-character-space case: when `|Delta(A)| ∈ {1,2}`,
/// `A` is Delta-weak `phi`-amenable at every character.
pub fn check_small_delta(a: &Algebra, chars: &CharacterSet, tol: f64) -> Result<()> {
    if !(1..=2).contains(&chars.len()) {
        return Err(Error::Precondition(format!(
            "check_small_delta needs 1 or 2 characters, found {}",
            chars.len()
        )));
    }
    for phi in chars.iter() {
        expect_yes(
            delta_weak_phi_amenable(a, chars, PhiSpec::Chi(phi), tol),
            &format!("small-delta at {}", phi.label().unwrap_or("phi")),
        )?;
    }
    Ok(())
}

/// Full row rank of the character matrix — the linear independence that
/// underwrites every feasibility reduction in the amenability module.
pub fn check_character_independence(_a: &Algebra, chars: &CharacterSet) -> Result<()> {
    if chars.is_empty() {
        return Ok(());
    }
    let m = chars.covector_matrix();
    let rank = linalg::rank(&m)?;
    if rank != chars.len() {
        return Err(Error::Postcondition(format!(
            "character matrix rank {rank} < {}",
            chars.len()
        )));
    }
    Ok(())
}

/// Transfer along a surjective homomorphism `h: A -> B`: if `A` is
/// Delta-weak `(phi ∘ h)`-amenable then `B` is Delta-weak `phi`-amenable.
/// (In finite dimensions dense range means surjective.)
pub fn check_surjection_transfer(
    a: &Algebra,
    b: &Algebra,
    h: &LinearMap,
    phi_b: &Character,
    seed: u64,
    tol: f64,
) -> Result<()> {
    let hres = h.homomorphism_residual(a, b)?;
    let bound = tol::scaled(tol::HOMOMORPHISM_TOL, a.scale().max(b.scale()));
    if hres > bound {
        return Err(Error::NotAHomomorphism { residual: hres });
    }
    if !h.is_surjective()? {
        return Err(Error::NotSurjective {
            rank: linalg::rank(h.matrix())?,
            needed: b.dim(),
        });
    }
    let pullback = h.pull_back_covector(phi_b.covector())?;
    let set_a = character_space(a, tol, seed)?;
    let pos_a = set_a.position_of(&pullback).ok_or_else(|| {
        Error::Postcondition("phi ∘ h not found among the characters of A".into())
    })?;
    let lhs = delta_weak_phi_amenable(
        a,
        &set_a,
        PhiSpec::Chi(&set_a.characters()[pos_a]),
        tol,
    )?;
    let set_b = character_space(b, tol, seed)?;
    let pos_b = set_b.position_of(phi_b.covector()).ok_or_else(|| {
        Error::Postcondition("phi not found among the characters of B".into())
    })?;
    let rhs = delta_weak_phi_amenable(
        b,
        &set_b,
        PhiSpec::Chi(&set_b.characters()[pos_b]),
        tol,
    )?;
    if lhs.is_yes() && !rhs.is_yes() {
        return Err(Error::Postcondition(
            "transfer failed: source amenable but target not".into(),
        ));
    }
    Ok(())
}

/// Restriction to a unital ideal not inside `ker(phi)`: if `A` is
/// Delta-weak `phi`-amenable then so is `I` at `phi|_I`, with `I`'s
/// character space computed independently.
pub fn check_ideal_restriction(
    a: &Algebra,
    ideal: &SubspaceBasis,
    phi: &Character,
    seed: u64,
    tol: f64,
) -> Result<()> {
    let i_alg = a.subalgebra_on(ideal)?;
    if i_alg
        .find_identity(Side::TwoSided, tol)
        .is_none()
    {
        return Err(Error::Precondition(
            "ideal has no two-sided identity".into(),
        ));
    }
    let phi_restr: Vec<Complex64> = ideal
        .vectors()
        .iter()
        .map(|v| pair(phi.covector(), v))
        .collect();
    if phi_restr.iter().all(|z| z.norm() <= tol::DEDUPE_TOL) {
        return Err(Error::Precondition(
            "ideal is contained in ker(phi)".into(),
        ));
    }
    let chi_i = Character::verify(&i_alg, phi_restr, tol)?;
    let set_a = character_space(a, tol, seed)?;
    let pos_a = set_a.position_of(phi.covector()).ok_or_else(|| {
        Error::Precondition("phi not found among the characters of A".into())
    })?;
    let lhs = delta_weak_phi_amenable(
        a,
        &set_a,
        PhiSpec::Chi(&set_a.characters()[pos_a]),
        tol,
    )?;
    let set_i = character_space(&i_alg, tol, seed)?;
    let pos_i = set_i.position_of(chi_i.covector()).ok_or_else(|| {
        Error::Postcondition("phi|_I not found among the characters of I".into())
    })?;
    let rhs = delta_weak_phi_amenable(
        &i_alg,
        &set_i,
        PhiSpec::Chi(&set_i.characters()[pos_i]),
        tol,
    )?;
    if lhs.is_yes() && !rhs.is_yes() {
        return Err(Error::Postcondition(
            "restriction failed: A amenable at phi but I not at phi|_I".into(),
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// The harness
// ---------------------------------------------------------------------------

struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, name: &str, r: Result<()>) {
        self.checks += 1;
        if let Err(e) = r {
            self.failures.push(format!("{name}: {e}"));
        }
    }
}

/// Run every fixture expectation and every corpus-wide invariant; collect
/// failures by name.  Deterministic for equal `(corpus, seed, tol)`.
pub fn run_all(corpus: &[Fixture], seed: u64, tol: f64) -> Result<Summary> {
    let mut tally = Tally {
        checks: 0,
        failures: Vec::new(),
    };
    let mut order: Vec<usize> = (0..corpus.len()).collect();
    order.sort_by(|&i, &j| corpus[i].name.cmp(&corpus[j].name));

    for &idx in &order {
        let fx = &corpus[idx];
        run_fixture(fx, seed, tol, &mut tally);
    }
    run_transfer_examples(seed, tol, &mut tally);
    run_restriction_examples(seed, tol, &mut tally);
    run_extension_examples(tol, &mut tally);

    Ok(Summary {
        fixtures: corpus.len(),
        checks: tally.checks,
        failures: tally.failures,
        seed,
        tol,
    })
}

fn run_fixture(fx: &Fixture, seed: u64, tol: f64, tally: &mut Tally) {
    let a = &fx.algebra;
    let name = &fx.name;

    let set = match character_space(a, tol, seed) {
        Ok(s) => s,
        Err(e) => {
            tally.checks += 1;
            tally.failures.push(format!("{name}: character solver: {e}"));
            return;
        }
    };
    tally.record(
        &format!("{name}/character_count"),
        if set.len() == fx.expected_characters {
            Ok(())
        } else {
            Err(Error::Postcondition(format!(
                "expected {} characters, found {}",
                fx.expected_characters,
                set.len()
            )))
        },
    );
    tally.record(
        &format!("{name}/character_independence"),
        check_character_independence(a, &set),
    );
    if (1..=2).contains(&set.len()) {
        tally.record(
            &format!("{name}/small_delta"),
            check_small_delta(a, &set, tol),
        );
    }

    if !set.is_empty() {
        // Corpus-wide emergent fact: Delta-weak phi-amenable everywhere,
        // including phi = 0.
        let mut any_yes = false;
        for phi in set.iter() {
            let rep = delta_weak_phi_amenable(a, &set, PhiSpec::Chi(phi), tol);
            if let Ok(r) = &rep {
                any_yes |= r.is_yes();
            }
            tally.record(
                &format!("{name}/dw_amen[{}]", phi.label().unwrap_or("phi")),
                expect_yes(rep, "delta-weak phi-amenability"),
            );
        }
        tally.record(
            &format!("{name}/dw_amen[zero]"),
            expect_yes(
                delta_weak_phi_amenable(a, &set, PhiSpec::Zero, tol),
                "delta-weak 0-amenability",
            ),
        );
        // Implication chain: some phi yes => Delta-weak identity exists.
        if any_yes {
            tally.record(
                &format!("{name}/dw_identity_chain"),
                expect_yes(
                    delta_weak_identity(a, &set, tol),
                    "Delta-weak identity implied by phi-amenability",
                ),
            );
        }
    }

    // Kernel equivalence on unital fixtures: right identity in ker(phi)
    // iff phi-amenable under the literal (right) convention.
    if a.find_identity(Side::TwoSided, tol).is_some() {
        for phi in set.iter() {
            let r = (|| -> Result<()> {
                let rid = right_identity_in_kernel(a, phi, tol)?;
                let am = phi_amenable(a, phi, Convention::Right, tol)?;
                if rid.is_yes() != am.is_yes() {
                    return Err(Error::Postcondition(format!(
                        "kernel right identity {} but right-convention amenability {}",
                        rid.is_yes(),
                        am.is_yes()
                    )));
                }
                // Combination: kernel right identity + unit of A/ker glue to
                // a Delta-weak identity (exact algebra, so must verify).
                if rid.is_yes() {
                    let ideal = kernel_basis(a, phi, tol)?;
                    let unit = a
                        .find_identity(Side::TwoSided, tol)
                        .expect("checked unital above");
                    combine_identities(a, &ideal, rid.witness().unwrap(), &unit, &set, tol)?;
                }
                Ok(())
            })();
            tally.record(&format!("{name}/kernel_equivalence[{}]", phi.label().unwrap_or("phi")), r);
        }
    }

    // Lau character additivity.
    if let Some((pa, pb)) = &fx.lau_parts {
        let r = (|| -> Result<()> {
            let ca = character_space(pa, tol, seed)?;
            let cb = character_space(pb, tol, seed)?;
            if set.len() != ca.len() + cb.len() {
                return Err(Error::Postcondition(format!(
                    "|Delta| = {} but components give {} + {}",
                    set.len(),
                    ca.len(),
                    cb.len()
                )));
            }
            Ok(())
        })();
        tally.record(&format!("{name}/lau_additivity"), r);
    }

    // Oracle agreement on small fixtures.
    if a.dim() <= ORACLE_MAX_DIM {
        let r = (|| -> Result<()> {
            let roots = oracle::newton_multistart(a, tol, seed, ORACLE_STARTS)?;
            if !oracle::sets_match(&set, &roots, tol::ORACLE_MATCH_TOL) {
                return Err(Error::Postcondition(format!(
                    "solver found {} characters, oracle found {}",
                    set.len(),
                    roots.len()
                )));
            }
            Ok(())
        })();
        tally.record(&format!("{name}/oracle"), r);
    }
}

/// The three worked surjection-transfer configurations.
fn run_transfer_examples(seed: u64, tol: f64, tally: &mut Tally) {
    let r = (|| -> Result<()> {
        let t2 = Algebra::upper_triangular(2);
        let ideal = t2.checked_ideal(SubspaceBasis::from_spanning(
            3,
            &[Element::basis(3, 1), Element::basis(3, 2)],
        )?)?;
        let (q, proj) = t2.quotient(&ideal)?;
        let set_q = character_space(&q, tol, seed)?;
        check_surjection_transfer(&t2, &q, &proj, &set_q.characters()[0], seed, tol)
    })();
    tally.record("transfer/quotient_projection_t2", r);

    let r = (|| -> Result<()> {
        let t3 = Algebra::upper_triangular(3);
        let set = character_space(&t3, tol, seed)?;
        let id = LinearMap::identity(t3.dim());
        for phi in set.iter() {
            check_surjection_transfer(&t3, &t3, &id, phi, seed, tol)?;
        }
        Ok(())
    })();
    tally.record("transfer/identity_t3", r);

    let r = (|| -> Result<()> {
        let c = Algebra::complex_field();
        let cc = Algebra::direct_sum(&c, &c);
        let mut m = crate::linalg::CMat::zeros((1, 2));
        m[(0, 0)] = Complex64::ONE;
        let h = LinearMap::from_matrix(m);
        let set_c = character_space(&c, tol, seed)?;
        check_surjection_transfer(&cc, &c, &h, &set_c.characters()[0], seed, tol)
    })();
    tally.record("transfer/first_coordinate_projection", r);
}

/// The three worked ideal-restriction configurations.
fn run_restriction_examples(seed: u64, tol: f64, tally: &mut Tally) {
    let r = (|| -> Result<()> {
        let a = Algebra::direct_sum(&Algebra::upper_triangular(2), &Algebra::complex_field());
        let ideal =
            a.checked_ideal(SubspaceBasis::from_spanning(4, &[Element::basis(4, 3)])?)?;
        let set = character_space(&a, tol, seed)?;
        let phi = set
            .position_of(&[
                Complex64::ZERO,
                Complex64::ZERO,
                Complex64::ZERO,
                Complex64::ONE,
            ])
            .map(|p| &set.characters()[p])
            .ok_or_else(|| Error::Postcondition("(a,t) -> t character missing".into()))?;
        check_ideal_restriction(&a, &ideal, phi, seed, tol)
    })();
    tally.record("restriction/t2_plus_c", r);

    let r = (|| -> Result<()> {
        let cc = Algebra::direct_sum(&Algebra::complex_field(), &Algebra::complex_field());
        let ideal =
            cc.checked_ideal(SubspaceBasis::from_spanning(2, &[Element::basis(2, 0)])?)?;
        let set = character_space(&cc, tol, seed)?;
        let phi = set
            .position_of(&[Complex64::ONE, Complex64::ZERO])
            .map(|p| &set.characters()[p])
            .ok_or_else(|| Error::Postcondition("first-coordinate character missing".into()))?;
        check_ideal_restriction(&cc, &ideal, phi, seed, tol)
    })();
    tally.record("restriction/c_plus_c_first_summand", r);

    let r = (|| -> Result<()> {
        let cc = Algebra::direct_sum(&Algebra::complex_field(), &Algebra::complex_field());
        let all = cc.checked_ideal(SubspaceBasis::from_spanning(
            2,
            &[Element::basis(2, 0), Element::basis(2, 1)],
        )?)?;
        let set = character_space(&cc, tol, seed)?;
        check_ideal_restriction(&cc, &all, &set.characters()[0], seed, tol)
    })();
    tally.record("restriction/ideal_is_everything", r);
}

/// The three worked character-extension configurations.
fn run_extension_examples(tol: f64, tally: &mut Tally) {
    let r = (|| -> Result<()> {
        let a = Algebra::direct_sum(&Algebra::upper_triangular(2), &Algebra::complex_field());
        let ideal =
            a.checked_ideal(SubspaceBasis::from_spanning(4, &[Element::basis(4, 3)])?)?;
        let u = Element::from_real(&[0.0, 0.0, 0.0, 1.0]);
        let ext = extend_character_from_ideal(&a, &ideal, &[Complex64::ONE], &u, tol)?;
        let expected = [0.0, 0.0, 0.0, 1.0];
        for (z, w) in ext.covector().iter().zip(expected) {
            if (z - re(w)).norm() > 1e-9 {
                return Err(Error::Postcondition(
                    "extension differs from (a,t) -> t".into(),
                ));
            }
        }
        Ok(())
    })();
    tally.record("extension/t2_plus_c", r);

    let r = (|| -> Result<()> {
        let cc = Algebra::direct_sum(&Algebra::complex_field(), &Algebra::complex_field());
        let all = cc.checked_ideal(SubspaceBasis::from_spanning(
            2,
            &[Element::basis(2, 0), Element::basis(2, 1)],
        )?)?;
        let unit = Element::from_real(&[1.0, 1.0]);
        let ext = extend_character_from_ideal(
            &cc,
            &all,
            &[Complex64::ONE, Complex64::ZERO],
            &unit,
            tol,
        )?;
        if (ext.covector()[0] - Complex64::ONE).norm() > 1e-9
            || ext.covector()[1].norm() > 1e-9
        {
            return Err(Error::Postcondition("extension should equal phi_I".into()));
        }
        Ok(())
    })();
    tally.record("extension/ideal_is_everything", r);

    let r = (|| -> Result<()> {
        let cc = Algebra::direct_sum(&Algebra::complex_field(), &Algebra::complex_field());
        let ideal =
            cc.checked_ideal(SubspaceBasis::from_spanning(2, &[Element::basis(2, 0)])?)?;
        let u = Element::from_real(&[1.0, 0.0]);
        let ext = extend_character_from_ideal(&cc, &ideal, &[Complex64::ONE], &u, tol)?;
        if (ext.covector()[0] - Complex64::ONE).norm() > 1e-9
            || ext.covector()[1].norm() > 1e-9
        {
            return Err(Error::Postcondition(
                "extension should be the first coordinate".into(),
            ));
        }
        Ok(())
    })();
    tally.record("extension/c_plus_c_first_summand", r);
}
