//! JSON schemas for algebras, characters, reports, and the file-driven
//! operation inputs.
//!
//! Conventions: every complex number is a `[re, im]` pair; an algebra is
//! either a raw structure-constant table
//! `{"dim": n, "labels": [...], "table": [[[ [re,im], ... ] ... ] ... ]}`
//! or a constructor spec `{"kind": "...", ...}` (specs may nest, e.g. the
//! Lau product of two specs).  Serialization uses shortest-round-trip float
//! formatting, so construct → serialize → parse reproduces structure
//! constants bit for bit.
//!
//! Parsing is hardened for untrusted input: dimensions are capped by
//! [`MAX_DIM`] before any table is materialized the nested shape is fully
//! validated, and every parsed algebra passes the associativity check.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Element};
use crate::amenability::{DecisionReport, ExtensionReport};
use crate::characters::{Character, CharacterSet};
use crate::error::{Error, Result};
use crate::verify::Summary;

/// Hard cap on algebra dimension accepted from JSON input.  A table is
/// `dim^3` complex entries, so 64 keeps hostile inputs at a few megabytes
/// while leaving ample room above the corpus (largest fixture: dim 15).
pub const MAX_DIM: usize = 64;

// ---------------------------------------------------------------------------
// Wire types
// ---------------------------------------------------------------------------

type Pair = [f64; 2];

fn from_pair(p: Pair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

fn to_pair(z: Complex64) -> Pair {
    [z.re, z.im]
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    table: Vec<Vec<Vec<Pair>>>,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum SpecJson {
    UpperTriangular { n: usize },
    APhi { phi: Vec<Pair> },
    Lau { a: Box<InputJson>, b: Box<InputJson>, theta: Vec<Pair> },
    Group { cayley: Vec<Vec<usize>> },
    ZeroProduct { dim: usize },
    ComplexField,
    DirectSum { a: Box<InputJson>, b: Box<InputJson> },
    Unitization { a: Box<InputJson> },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum InputJson {
    Spec(SpecJson),
    Raw(AlgebraJson),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CombineJson {
    algebra: InputJson,
    ideal: Vec<Vec<Pair>>,
    e: Vec<Pair>,
    f: Vec<Pair>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtendJson {
    algebra: InputJson,
    ideal: Vec<Vec<Pair>>,
    /// Values of `phi_I` on the `ideal` vectors, in the same order.
    phi_values: Vec<Pair>,
    u: Vec<Pair>,
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

fn guard_dim(dim: usize) -> Result<usize> {
    if dim > MAX_DIM {
        return Err(Error::InvalidInput(format!(
            "dimension {dim} exceeds the input cap {MAX_DIM}"
        )));
    }
    Ok(dim)
}

fn build_raw(raw: AlgebraJson) -> Result<Algebra> {
    guard_dim(raw.dim)?;
    if raw.table.len() != raw.dim {
        return Err(Error::InvalidInput(format!(
            "\"dim\" is {} but the table has {} rows",
            raw.dim,
            raw.table.len()
        )));
    }
    let mut table = Vec::with_capacity(raw.dim);
    for row in raw.table {
        if row.len() != raw.dim {
            return Err(Error::InvalidInput(format!(
                "table row has {} cells, expected {}",
                row.len(),
                raw.dim
            )));
        }
        let mut out_row = Vec::with_capacity(raw.dim);
        for cell in row {
            if cell.len() != raw.dim {
                return Err(Error::InvalidInput(format!(
                    "table cell has {} entries, expected {}",
                    cell.len(),
                    raw.dim
                )));
            }
            out_row.push(cell.into_iter().map(from_pair).collect());
        }
        table.push(out_row);
    }
    Algebra::new(table, raw.labels)
}

fn build(input: InputJson) -> Result<Algebra> {
    match input {
        InputJson::Raw(raw) => build_raw(raw),
        InputJson::Spec(spec) => match spec {
            SpecJson::UpperTriangular { n } => {
                guard_dim(n.saturating_mul(n.saturating_add(1)) / 2)?;
                Ok(Algebra::upper_triangular(n))
            }
            SpecJson::APhi { phi } => {
                guard_dim(phi.len())?;
                let phi: Vec<Complex64> = phi.into_iter().map(from_pair).collect();
                Algebra::a_phi(&phi)
            }
            SpecJson::Lau { a, b, theta } => {
                let a = build(*a)?;
                let b = build(*b)?;
                guard_dim(a.dim().saturating_add(b.dim()))?;
                let theta: Vec<Complex64> = theta.into_iter().map(from_pair).collect();
                Algebra::lau_product(&a, &b, &theta)
            }
            SpecJson::Group { cayley } => {
                guard_dim(cayley.len())?;
                Algebra::finite_group_algebra(&cayley)
            }
            SpecJson::ZeroProduct { dim } => {
                guard_dim(dim)?;
                Ok(Algebra::zero_product(dim))
            }
            SpecJson::ComplexField => Ok(Algebra::complex_field()),
            SpecJson::DirectSum { a, b } => {
                let a = build(*a)?;
                let b = build(*b)?;
                guard_dim(a.dim().saturating_add(b.dim()))?;
                Ok(Algebra::direct_sum(&a, &b))
            }
            SpecJson::Unitization { a } => {
                let a = build(*a)?;
                guard_dim(a.dim().saturating_add(1))?;
                Ok(a.unitization())
            }
        },
    }
}

/// Parse an algebra from either schema (raw table or constructor spec).
pub fn parse_algebra(s: &str) -> Result<Algebra> {
    let input: InputJson = serde_json::from_str(s)?;
    build(input)
}

/// Parse an element literal `[[re,im], ...]`.
pub fn parse_element(s: &str) -> Result<Element> {
    let pairs: Vec<Pair> = serde_json::from_str(s)?;
    Ok(Element::new(pairs.into_iter().map(from_pair).collect()))
}

/// Parse a covector literal `[[re,im], ...]` (same wire shape as elements).
pub fn parse_covector(s: &str) -> Result<Vec<Complex64>> {
    let pairs: Vec<Pair> = serde_json::from_str(s)?;
    Ok(pairs.into_iter().map(from_pair).collect())
}

/// Parsed input for the `combine` operation.
pub struct CombineRequest {
    pub algebra: Algebra,
    pub ideal_vectors: Vec<Element>,
    pub e: Element,
    pub f: Element,
}

/// Parsed input for the `extend-char` operation.  `phi_values[j]` is the
/// intended value of `phi_I` on `ideal_vectors[j]`.
pub struct ExtendRequest {
    pub algebra: Algebra,
    pub ideal_vectors: Vec<Element>,
    pub phi_values: Vec<Complex64>,
    pub u: Element,
}

fn parse_vectors(vs: Vec<Vec<Pair>>) -> Vec<Element> {
    vs.into_iter()
        .map(|v| Element::new(v.into_iter().map(from_pair).collect()))
        .collect()
}

pub fn parse_combine_request(s: &str) -> Result<CombineRequest> {
    let raw: CombineJson = serde_json::from_str(s)?;
    Ok(CombineRequest {
        algebra: build(raw.algebra)?,
        ideal_vectors: parse_vectors(raw.ideal),
        e: Element::new(raw.e.into_iter().map(from_pair).collect()),
        f: Element::new(raw.f.into_iter().map(from_pair).collect()),
    })
}

pub fn parse_extend_request(s: &str) -> Result<ExtendRequest> {
    let raw: ExtendJson = serde_json::from_str(s)?;
    Ok(ExtendRequest {
        algebra: build(raw.algebra)?,
        ideal_vectors: parse_vectors(raw.ideal),
        phi_values: raw.phi_values.into_iter().map(from_pair).collect(),
        u: Element::new(raw.u.into_iter().map(from_pair).collect()),
    })
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

pub fn algebra_to_json(a: &Algebra) -> Value {
    let table: Vec<Vec<Vec<Pair>>> = a
        .table_nested()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|cell| cell.into_iter().map(to_pair).collect())
                .collect()
        })
        .collect();
    json!({
        "dim": a.dim(),
        "labels": a.labels(),
        "table": table,
    })
}

pub fn element_to_json(e: &Element) -> Value {
    Value::from(
        e.coeffs()
            .iter()
            .map(|z| json!(to_pair(*z)))
            .collect::<Vec<Value>>(),
    )
}

pub fn character_to_json(c: &Character) -> Value {
    let covector: Vec<Pair> = c.covector().iter().map(|z| to_pair(*z)).collect();
    json!({
        "covector": covector,
        "residual": c.residual(),
        "label": c.label(),
    })
}

pub fn character_set_to_json(set: &CharacterSet) -> Value {
    json!({
        "count": set.len(),
        "characters": set.iter().map(character_to_json).collect::<Vec<Value>>(),
        "seed": set.seed(),
        "retries": set.retries(),
    })
}

pub fn report_to_json(r: &DecisionReport) -> Value {
    json!({
        "decision": if r.is_yes() { "yes" } else { "no" },
        "witness": r.witness().map(element_to_json),
        "residuals": r.residuals(),
        "convention": r.convention().map(|c| c.to_string()),
        "phi": r.phi(),
        "affine_dim": r.affine_dim(),
        "notes": r.notes(),
    })
}

pub fn extension_report_to_json(r: &ExtensionReport) -> Value {
    json!({
        "psi_rows": r
            .psi_rows
            .iter()
            .map(|(label, defect)| json!({"psi": label, "max_defect": defect}))
            .collect::<Vec<Value>>(),
        "phi_row_max_defect": r.phi_row,
        "phi_of_u": to_pair(r.phi_of_u),
        "phi_of_a0_u": to_pair(r.phi_of_a0_u),
        "notes": r.notes,
    })
}

pub fn summary_to_json(s: &Summary) -> Value {
    json!({
        "fixtures": s.fixtures,
        "checks": s.checks,
        "failures": s.failures,
        "seed": s.seed,
        "tol": s.tol,
    })
}
