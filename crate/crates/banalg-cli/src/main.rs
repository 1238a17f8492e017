//! `banalg` — character spaces and pointwise amenability decisions for
//! finite-dimensional complex associative algebras.
//!
//! Algebras come in as JSON (raw structure-constant tables or constructor
//! specs) on stdin or from a file; results go out as JSON (default) or a
//! human-readable text rendering.  Every run is deterministic for a fixed
//! `--seed`.
//!
//! Exit codes: 0 = computation completed (decisions, yes or no, go to
//! stdout); 2 = input error; 3 = solver failure (including a failing
//! `verify` harness).

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use banalg::algebra::fmt_complex;
use banalg::amenability::{
    combine_identities, delta_weak_identity, delta_weak_phi_amenable, phi_amenable,
    right_identity_in_kernel, Convention, DecisionReport,
};
use banalg::characters::{character_space, CharacterSet, PhiSpec};
use banalg::json;
use banalg::verify::{default_corpus, run_all, Summary};
use banalg::{extend_character_from_ideal, Algebra, Character, Error, Result, SubspaceBasis};

const DEFAULT_SEED: u64 = 0xC0FFEE;

#[derive(Parser)]
#[command(
    name = "banalg",
    version,
    about = "Character spaces and pointwise amenability certificates \
             for finite-dimensional complex algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    /// Algebra JSON: a file path, or '-' for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// RNG seed (decimal or 0x-hex). Overrides the BANALG_SEED env var;
    /// default 0xC0FFEE.
    #[arg(long)]
    seed: Option<String>,
    /// Verification tolerance (scaled by 1 + max |structure constant|).
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character space Delta(A).
    Characters(Common),
    /// Decide whether A has a Delta-weak identity.
    DwIdentity(Common),
    /// Decide Delta-weak phi-amenability for phi in Delta(A) or "zero".
    DwAmen {
        #[command(flatten)]
        common: Common,
        /// Character selector: label (phi_2), 1-based index (2), "zero",
        /// or a covector literal [[re,im],...].
        #[arg(long)]
        phi: String,
    },
    /// Decide phi-amenability under a dual-action convention.
    PhiAmen {
        #[command(flatten)]
        common: Common,
        /// Character selector: label, 1-based index, or covector literal.
        #[arg(long)]
        phi: String,
        /// "left": u a = phi(a) u (mirrored action); "right": a u = phi(a) u
        /// (the literal action). The two genuinely differ; see the library
        /// docs for which worked example each one reproduces.
        #[arg(long, value_enum, default_value_t = ConventionArg::Left)]
        convention: ConventionArg,
    },
    /// Decide whether ker(phi) has a right identity.
    KernelRid {
        #[command(flatten)]
        common: Common,
        /// Character selector: label, 1-based index, or covector literal.
        #[arg(long)]
        phi: String,
    },
    /// Emit algebra JSON from a named constructor.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Combine a Delta-weak identity of an ideal with a left identity of
    /// the quotient into one for the whole algebra (file-driven; see the
    /// library docs for the input schema).
    Combine(Common),
    /// Extend a character of a unital ideal to the whole algebra
    /// (file-driven).
    ExtendChar(Common),
    /// Run the bundled fixture corpus and invariant harness.
    Verify {
        #[arg(long)]
        seed: Option<String>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Left,
    Right,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Convention {
        match c {
            ConventionArg::Left => Convention::Left,
            ConventionArg::Right => Convention::Right,
        }
    }
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Upper triangular matrices T_n on the unit basis E_ij (i <= j).
    #[command(alias = "upper_triangular")]
    UpperTriangular {
        #[arg(long)]
        n: usize,
    },
    /// A_phi: the product a b = phi(a) b on C^d; phi is [[re,im],...].
    #[command(alias = "a_phi")]
    APhi {
        #[arg(long)]
        phi: String,
    },
    /// Lau product A x_theta B; a and b are algebra JSON (inline or @file),
    /// theta a character covector of B.
    Lau {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        theta: String,
    },
    /// Finite group algebra from a Cayley table [[usize,...],...].
    Group {
        #[arg(long)]
        cayley: String,
    },
    /// C^dim with all products zero.
    #[command(alias = "zero_product")]
    ZeroProduct {
        #[arg(long)]
        dim: usize,
    },
    /// The complex numbers.
    #[command(alias = "complex_field")]
    ComplexField,
    /// Direct sum of two algebras (inline JSON or @file).
    #[command(alias = "direct_sum")]
    DirectSum {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Adjoin a unit.
    Unitization {
        #[arg(long)]
        a: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// Input-shaped errors exit 2; solver-shaped errors exit 3.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::SolverDidNotConverge(_) | Error::Linalg(_) | Error::Postcondition(_) => 3,
        _ => 2,
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Characters(c) => {
            let (a, seed) = load(&c)?;
            let set = character_space(&a, c.tol, seed)?;
            match c.format {
                Format::Json => print_json(&json::character_set_to_json(&set)),
                Format::Text => print!("{}", render_characters(&a, &set)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::DwIdentity(c) => {
            let (a, seed) = load(&c)?;
            let set = character_space(&a, c.tol, seed)?;
            let rep = delta_weak_identity(&a, &set, c.tol)?;
            emit_report(&a, &rep, c.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::DwAmen { common: c, phi } => {
            let (a, seed) = load(&c)?;
            let set = character_space(&a, c.tol, seed)?;
            let spec = resolve_phi(&set, &phi)?;
            let rep = delta_weak_phi_amenable(&a, &set, spec, c.tol)?;
            emit_report(&a, &rep, c.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::PhiAmen {
            common: c,
            phi,
            convention,
        } => {
            let (a, seed) = load(&c)?;
            let set = character_space(&a, c.tol, seed)?;
            let chi = resolve_character(&set, &phi)?;
            let rep = phi_amenable(&a, chi, convention.into(), c.tol)?;
            emit_report(&a, &rep, c.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::KernelRid { common: c, phi } => {
            let (a, seed) = load(&c)?;
            let set = character_space(&a, c.tol, seed)?;
            let chi = resolve_character(&set, &phi)?;
            let rep = right_identity_in_kernel(&a, chi, c.tol)?;
            emit_report(&a, &rep, c.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { kind } => {
            let a = construct(kind)?;
            print_json(&json::algebra_to_json(&a));
            Ok(ExitCode::SUCCESS)
        }
        Command::Combine(c) => {
            let (text, seed) = (read_input(&c.input)?, resolve_seed(&c.seed)?);
            let req = json::parse_combine_request(&text)?;
            let a = req.algebra;
            let ideal = a.checked_ideal(SubspaceBasis::from_spanning(
                a.dim(),
                &req.ideal_vectors,
            )?)?;
            let set = character_space(&a, c.tol, seed)?;
            let g = combine_identities(&a, &ideal, &req.e, &req.f, &set, c.tol)?;
            match c.format {
                Format::Json => print_json(&serde_json::json!({
                    "g": json::element_to_json(&g),
                })),
                Format::Text => println!("g = {}", a.format_element(&g)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ExtendChar(c) => {
            let text = read_input(&c.input)?;
            let req = json::parse_extend_request(&text)?;
            let a = req.algebra;
            let ideal = a.checked_ideal(SubspaceBasis::from_spanning(
                a.dim(),
                &req.ideal_vectors,
            )?)?;
            let phi_i = ideal.functional_from_values(&req.ideal_vectors, &req.phi_values)?;
            let ext = extend_character_from_ideal(&a, &ideal, &phi_i, &req.u, c.tol)?;
            match c.format {
                Format::Json => print_json(&json::character_to_json(&ext)),
                Format::Text => println!(
                    "extension: [{}]  (residual {:.3e})",
                    ext.covector()
                        .iter()
                        .map(|z| fmt_complex(*z))
                        .collect::<Vec<_>>()
                        .join(", "),
                    ext.residual()
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { seed, tol, format } => {
            let seed = resolve_seed(&seed)?;
            let corpus = default_corpus()?;
            let summary = run_all(&corpus, seed, tol)?;
            match format {
                Format::Json => print_json(&json::summary_to_json(&summary)),
                Format::Text => print!("{}", render_summary(&summary)),
            }
            if summary.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Input plumbing
// ---------------------------------------------------------------------------

fn load(c: &Common) -> Result<(Algebra, u64)> {
    let text = read_input(&c.input)?;
    Ok((json::parse_algebra(&text)?, resolve_seed(&c.seed)?))
}

fn read_input(input: &str) -> Result<String> {
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidInput(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| Error::InvalidInput(format!("reading {input}: {e}")))
    }
}

/// Inline JSON, or the contents of a file when prefixed with '@'.
fn inline_or_file(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("reading {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn resolve_seed(explicit: &Option<String>) -> Result<u64> {
    let text = match explicit {
        Some(s) => s.clone(),
        None => match std::env::var("BANALG_SEED") {
            Ok(v) => v,
            Err(_) => return Ok(DEFAULT_SEED),
        },
    };
    parse_seed(&text)
}

fn parse_seed(s: &str) -> Result<u64> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse::<u64>(),
    };
    parsed.map_err(|_| Error::InvalidInput(format!("invalid seed {s:?}")))
}

fn resolve_phi<'a>(set: &'a CharacterSet, sel: &str) -> Result<PhiSpec<'a>> {
    if sel == "zero" {
        return Ok(PhiSpec::Zero);
    }
    Ok(PhiSpec::Chi(resolve_character(set, sel)?))
}

fn resolve_character<'a>(set: &'a CharacterSet, sel: &str) -> Result<&'a Character> {
    if let Some(c) = set.by_label(sel) {
        return Ok(c);
    }
    if let Ok(idx) = sel.parse::<usize>() {
        if (1..=set.len()).contains(&idx) {
            return Ok(&set.characters()[idx - 1]);
        }
        return Err(Error::InvalidInput(format!(
            "character index {idx} out of range 1..={}",
            set.len()
        )));
    }
    if sel.trim_start().starts_with('[') {
        let cov = json::parse_covector(sel)?;
        let pos = set.position_of(&cov).ok_or_else(|| {
            Error::InvalidInput("covector does not match any computed character".into())
        })?;
        return Ok(&set.characters()[pos]);
    }
    Err(Error::InvalidInput(format!(
        "cannot resolve phi selector {sel:?} (expected a label, a 1-based \
         index, \"zero\", or a covector literal)"
    )))
}

fn construct(kind: ConstructKind) -> Result<Algebra> {
    match kind {
        ConstructKind::UpperTriangular { n } => {
            json::parse_algebra(&format!("{{\"kind\":\"upper_triangular\",\"n\":{n}}}"))
        }
        ConstructKind::APhi { phi } => {
            let phi = json::parse_covector(&inline_or_file(&phi)?)?;
            Algebra::a_phi(&phi)
        }
        ConstructKind::Lau { a, b, theta } => {
            let a = json::parse_algebra(&inline_or_file(&a)?)?;
            let b = json::parse_algebra(&inline_or_file(&b)?)?;
            let theta = json::parse_covector(&inline_or_file(&theta)?)?;
            Algebra::lau_product(&a, &b, &theta)
        }
        ConstructKind::Group { cayley } => {
            let table: Vec<Vec<usize>> =
                serde_json::from_str(&inline_or_file(&cayley)?).map_err(Error::from)?;
            Algebra::finite_group_algebra(&table)
        }
        ConstructKind::ZeroProduct { dim } => {
            json::parse_algebra(&format!("{{\"kind\":\"zero_product\",\"dim\":{dim}}}"))
        }
        ConstructKind::ComplexField => Ok(Algebra::complex_field()),
        ConstructKind::DirectSum { a, b } => {
            let a = json::parse_algebra(&inline_or_file(&a)?)?;
            let b = json::parse_algebra(&inline_or_file(&b)?)?;
            Ok(Algebra::direct_sum(&a, &b))
        }
        ConstructKind::Unitization { a } => {
            let a = json::parse_algebra(&inline_or_file(&a)?)?;
            Ok(a.unitization())
        }
    }
}

// ---------------------------------------------------------------------------
// Output rendering
// ---------------------------------------------------------------------------

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("valid JSON value"));
}

fn emit_report(a: &Algebra, rep: &DecisionReport, format: Format) {
    match format {
        Format::Json => print_json(&json::report_to_json(rep)),
        Format::Text => print!("{}", render_report(a, rep)),
    }
}

fn render_characters(a: &Algebra, set: &CharacterSet) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} character(s) of {} (seed {}, retries {})",
        set.len(),
        a.provenance(),
        set.seed(),
        set.retries()
    );
    for chi in set.iter() {
        let covector = chi
            .covector()
            .iter()
            .map(|z| fmt_complex(*z))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(
            out,
            "  {}: [{}]  residual {:.3e}",
            chi.label().unwrap_or("?"),
            covector,
            chi.residual()
        );
    }
    out
}

fn render_report(a: &Algebra, rep: &DecisionReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "decision: {}", if rep.is_yes() { "yes" } else { "no" });
    let _ = writeln!(out, "phi: {}", rep.phi());
    if let Some(conv) = rep.convention() {
        let _ = writeln!(out, "convention: {conv}");
    }
    match rep.witness() {
        Some(u) => {
            let _ = writeln!(out, "witness: {}", a.format_element(u));
        }
        None => {
            let _ = writeln!(out, "witness: none");
        }
    }
    let _ = writeln!(
        out,
        "max residual: {:.3e} over {} constraint(s)",
        rep.max_residual(),
        rep.residuals().len()
    );
    if let Some(d) = rep.affine_dim() {
        let _ = writeln!(out, "solution affine dimension: {d}");
    }
    for note in rep.notes() {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

fn render_summary(s: &Summary) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} fixture(s), {} check(s), {} failure(s)  [seed {}, tol {:.1e}]",
        s.fixtures,
        s.checks,
        s.failures.len(),
        s.seed,
        s.tol
    );
    for f in &s.failures {
        let _ = writeln!(out, "  FAIL {f}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_parsing_accepts_decimal_and_hex() {
        assert_eq!(parse_seed("12648430").unwrap(), 0xC0FFEE);
        assert_eq!(parse_seed("0xC0FFEE").unwrap(), 0xC0FFEE);
        assert_eq!(parse_seed("0Xc0ffee").unwrap(), 0xC0FFEE);
        assert!(parse_seed("-1").is_err());
        assert!(parse_seed("0xZZ").is_err());
    }

    #[test]
    fn exit_codes_partition_the_error_space() {
        assert_eq!(exit_code_for(&Error::InvalidInput("x".into())), 2);
        assert_eq!(exit_code_for(&Error::SolverDidNotConverge("x".into())), 3);
        assert_eq!(exit_code_for(&Error::Postcondition("x".into())), 3);
        assert_eq!(exit_code_for(&Error::NoCharacters), 2);
    }

    #[test]
    fn phi_selectors_resolve() {
        let t2 = Algebra::upper_triangular(2);
        let set = character_space(&t2, 1e-8, DEFAULT_SEED).unwrap();
        assert!(matches!(resolve_phi(&set, "zero").unwrap(), PhiSpec::Zero));
        let by_label = resolve_character(&set, "phi_2").unwrap();
        let by_index = resolve_character(&set, "2").unwrap();
        assert_eq!(by_label.label(), by_index.label());
        let by_cov = resolve_character(&set, "[[1,0],[0,0],[0,0]]").unwrap();
        assert_eq!(by_cov.label(), Some("phi_1"));
        assert!(resolve_character(&set, "phi_9").is_err());
        assert!(resolve_character(&set, "0").is_err());
        assert!(resolve_character(&set, "[[5,0],[0,0],[0,0]]").is_err());
    }
}
