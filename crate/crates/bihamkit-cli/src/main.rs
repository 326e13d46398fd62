//! Command-line front end.
//!
//! Exit codes: 0 when the command succeeds and every requested check
//! passes, 1 when the input is well-formed but a verification fails
//! (incomplete pencil, failed pair check, failing example), 2 on input
//! errors (unreadable files, malformed JSON, invalid documents, bad
//! flag values). With `--format json` the report layout is fixed, so
//! identical inputs and seed produce byte-identical output.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use bihamkit::fixtures::{self, ExampleCheck, DEFAULT_SEED};
use bihamkit::forms::{pair_check, Alternating, FormsError, PolyBivector};
use bihamkit::json::{BivectorDoc, PairDoc, PencilDoc, ScDoc};
use bihamkit::lie::{LieAlgebra, LieError, SplitMix64, TheoremReport};
use bihamkit::pencil::PencilError;
use bihamkit::web::build_infinitesimal_web;
use bihamkit::web::phi_chain;
use bihamkit::{Mat, Scalar, SkewPencil, Subspace};

#[derive(Parser)]
#[command(
    name = "bihamkit",
    version,
    about = "Exact analysis of skew pencils, bivector pairs and their webs",
    after_help = "Seeded commands default to --seed 1; runs with equal inputs and seed are byte-identical."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Constant pencils of skew forms
    Pencil {
        #[command(subcommand)]
        cmd: PencilCmd,
    },
    /// Polynomial bivector pairs
    Poisson {
        #[command(subcommand)]
        cmd: PoissonCmd,
    },
    /// Filtration, graded curves and web certificates
    Web {
        #[command(subcommand)]
        cmd: WebCmd,
    },
    /// Shifted Casimir families on a Lie algebra
    Lie {
        #[command(subcommand)]
        cmd: LieCmd,
    },
    /// Built-in example catalog
    Examples {
        #[command(subcommand)]
        cmd: ExamplesCmd,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct FormatArg {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum PencilCmd {
    /// Rank, minimal indices, block dimensions and completeness
    Analyze {
        /// Pencil document, or a pair document together with --point
        #[arg(long)]
        input: PathBuf,
        /// Evaluation point for a pair document (comma-separated rationals)
        #[arg(long)]
        point: Option<String>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Normalizing basis of a complete pencil
    Basis {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        point: Option<String>,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Subcommand)]
enum PoissonCmd {
    /// Jacobi identities and compatibility of a pair
    Check {
        /// A pair document, or this flag twice with one bivector each
        #[arg(long, required = true)]
        input: Vec<PathBuf>,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Subcommand)]
enum WebCmd {
    /// Filtration, graded curves and the certificate checks
    Build {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        point: Option<String>,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Subcommand)]
enum LieCmd {
    /// Verify the shifted-family theorem at a witness
    Translate {
        /// Built-in algebra name, e.g. sl2, sl3, sl4
        #[arg(long)]
        algebra: Option<String>,
        /// Structure constants JSON, then a Casimir list JSON
        #[arg(long)]
        input: Vec<PathBuf>,
        /// Shift covector a (comma-separated rationals)
        #[arg(long)]
        shift: Option<String>,
        /// Evaluation point x (comma-separated rationals)
        #[arg(long)]
        point: Option<String>,
        /// Seed for witness sampling
        #[arg(long)]
        seed: Option<u64>,
        /// Expand Casimir invariance symbolically up to this degree
        #[arg(long)]
        max_degree: Option<u32>,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Subcommand)]
enum ExamplesCmd {
    /// Run the catalog checks
    Verify {
        /// Only run checks whose id contains this substring
        #[arg(long)]
        only: Option<String>,
        /// Seed for point sampling
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        format: FormatArg,
    },
}

enum Failure {
    Input(String),
    Verify(String),
}

type CliResult<T> = Result<T, Failure>;

fn input_err<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Input(msg.into()))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.cmd {
        Cmd::Pencil { cmd } => match cmd {
            PencilCmd::Analyze {
                input,
                point,
                format,
            } => cmd_pencil_analyze(&input, point.as_deref(), format.format),
            PencilCmd::Basis {
                input,
                point,
                format,
            } => cmd_pencil_basis(&input, point.as_deref(), format.format),
        },
        Cmd::Poisson { cmd } => match cmd {
            PoissonCmd::Check { input, format } => cmd_poisson_check(&input, format.format),
        },
        Cmd::Web { cmd } => match cmd {
            WebCmd::Build {
                input,
                point,
                format,
            } => cmd_web_build(&input, point.as_deref(), format.format),
        },
        Cmd::Lie { cmd } => match cmd {
            LieCmd::Translate {
                algebra,
                input,
                shift,
                point,
                seed,
                max_degree,
                format,
            } => cmd_lie_translate(
                algebra.as_deref(),
                &input,
                shift.as_deref(),
                point.as_deref(),
                seed,
                max_degree,
                format.format,
            ),
        },
        Cmd::Examples { cmd } => match cmd {
            ExamplesCmd::Verify { only, seed, format } => {
                cmd_examples_verify(only.as_deref(), seed, format.format)
            }
        },
    }
}

// ---- input plumbing ----

fn load_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn typed<T: DeserializeOwned>(path: &Path, text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn shape_of(path: &Path, text: &str) -> CliResult<serde_json::Value> {
    typed::<serde_json::Value>(path, text)
}

fn parse_csv(flag: &str, text: &str) -> CliResult<Vec<Scalar>> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<Scalar>()
                .map_err(|_| Failure::Input(format!("--{flag}: `{t}` is not an exact rational")))
        })
        .collect()
}

enum PencilSource {
    Constant(SkewPencil),
    Pair(Box<(PolyBivector, PolyBivector)>),
}

fn load_pencil_source(path: &Path) -> CliResult<PencilSource> {
    let text = load_text(path)?;
    let value = shape_of(path, &text)?;
    if value.get("A").is_some() || value.get("B").is_some() {
        let doc: PencilDoc = typed(path, &text)?;
        let p = doc
            .to_pencil()
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        Ok(PencilSource::Constant(p))
    } else if value.get("first").is_some() {
        let doc: PairDoc = typed(path, &text)?;
        let pair = doc
            .to_pair()
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        Ok(PencilSource::Pair(Box::new(pair)))
    } else {
        input_err(format!(
            "{}: unrecognized document, expected a pencil {{dim, A, B}} or a pair {{first, second}}",
            path.display()
        ))
    }
}

/// Resolves an input file and optional point to a concrete pencil.
fn resolve_pencil(
    path: &Path,
    point: Option<&str>,
) -> CliResult<(SkewPencil, Option<Vec<Scalar>>)> {
    let source = load_pencil_source(path)?;
    match (source, point) {
        (PencilSource::Constant(p), None) => Ok((p, None)),
        (PencilSource::Constant(_), Some(_)) => {
            input_err("the input is a constant pencil; --point does not apply")
        }
        (PencilSource::Pair(_), None) => {
            input_err("a bivector pair needs --point to evaluate at")
        }
        (PencilSource::Pair(pair), Some(pt)) => {
            let pt = parse_csv("point", pt)?;
            let (c1, c2) = *pair;
            let a = c1
                .eval(&pt)
                .map_err(|e| Failure::Input(format!("--point: {e}")))?;
            let b = c2.eval(&pt).expect("same vars as first field");
            match SkewPencil::poisson_pair(a, b) {
                Ok(p) => Ok((p, Some(pt))),
                Err(PencilError::DependentForms) => Err(Failure::Verify(
                    "the two evaluated forms are linearly dependent at this point".into(),
                )),
                Err(e) => input_err(format!("{e}")),
            }
        }
    }
}

// ---- rendering helpers ----

fn scalar_row(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn mat_rows(m: &Mat) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| scalar_row(r)).collect()
}

fn basis_rows(s: &Subspace) -> Vec<Vec<String>> {
    s.basis_rows().iter().map(|r| scalar_row(r)).collect()
}

fn one_based(ix: &[usize]) -> Vec<usize> {
    ix.iter().map(|i| i + 1).collect()
}

fn fmt_usizes(ix: &[usize]) -> String {
    let inner: Vec<String> = ix.iter().map(usize::to_string).collect();
    format!("({})", inner.join(","))
}

fn fmt_row(row: &[String]) -> String {
    format!("[{}]", row.join(", "))
}

fn emit<T: Serialize>(format: Format, report: &T, text: String) -> CliResult<()> {
    use std::io::Write;
    let body = match format {
        Format::Json => {
            serde_json::to_string_pretty(report).expect("reports serialize without failure")
        }
        Format::Text => text,
    };
    // a closed pipe (e.g. piping into head) must not panic
    let _ = writeln!(std::io::stdout(), "{body}");
    Ok(())
}

// ---- pencil analyze ----

#[derive(Serialize)]
struct AnalyzeReport {
    command: &'static str,
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<Vec<String>>,
    generic_rank: usize,
    minimal_indices: Vec<usize>,
    kronecker_dim: usize,
    jordan_dim: usize,
    complete: bool,
    simple: bool,
    bilagrangian_dim: usize,
    bilagrangian_basis: Vec<Vec<String>>,
}

fn cmd_pencil_analyze(path: &Path, point: Option<&str>, format: Format) -> CliResult<ExitCode> {
    let (p, pt) = resolve_pencil(path, point)?;
    let an = p.analyze();
    let report = AnalyzeReport {
        command: "pencil analyze",
        dim: an.dim,
        point: pt.as_deref().map(scalar_row),
        generic_rank: an.generic_rank,
        minimal_indices: an.minimal_indices.clone(),
        kronecker_dim: an.kronecker_dim,
        jordan_dim: an.jordan_dim,
        complete: an.complete,
        simple: an.simple,
        bilagrangian_dim: an.bilagrangian.dim(),
        bilagrangian_basis: basis_rows(&an.bilagrangian),
    };
    let mut text = String::new();
    text.push_str(&format!("dim            {}\n", report.dim));
    if let Some(pt) = &report.point {
        text.push_str(&format!("point          {}\n", fmt_row(pt)));
    }
    text.push_str(&format!("generic rank   {}\n", report.generic_rank));
    text.push_str(&format!(
        "type           {}\n",
        fmt_usizes(&report.minimal_indices)
    ));
    text.push_str(&format!(
        "block dims     kronecker {}, jordan {}\n",
        report.kronecker_dim, report.jordan_dim
    ));
    text.push_str(&format!(
        "complete       {}\nsimple         {}\n",
        report.complete, report.simple
    ));
    text.push_str(&format!(
        "bilagrangian   dim {}",
        report.bilagrangian_dim
    ));
    for row in &report.bilagrangian_basis {
        text.push_str(&format!("\n               {}", fmt_row(row)));
    }
    emit(format, &report, text)?;
    Ok(ExitCode::SUCCESS)
}

// ---- pencil basis ----

#[derive(Serialize)]
struct BasisReport {
    command: &'static str,
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<Vec<String>>,
    block_layout: Vec<usize>,
    transform: Vec<Vec<String>>,
}

fn cmd_pencil_basis(path: &Path, point: Option<&str>, format: Format) -> CliResult<ExitCode> {
    let (p, pt) = resolve_pencil(path, point)?;
    let basis = p.kronecker_basis().map_err(|e| match e {
        PencilError::NotComplete => Failure::Verify(
            "the pencil is not complete; no Kronecker basis exists".into(),
        ),
        other => Failure::Input(format!("{other}")),
    })?;
    let report = BasisReport {
        command: "pencil basis",
        dim: p.dim(),
        point: pt.as_deref().map(scalar_row),
        block_layout: basis.block_layout.clone(),
        transform: mat_rows(&basis.s),
    };
    let mut text = format!(
        "block dims     {}\ntransform      (columns are the new basis)",
        fmt_usizes(&report.block_layout)
    );
    for row in &report.transform {
        text.push_str(&format!("\n               {}", fmt_row(row)));
    }
    emit(format, &report, text)?;
    Ok(ExitCode::SUCCESS)
}

// ---- poisson check ----

#[derive(Serialize)]
struct OffendingComponent {
    source: &'static str,
    component: Vec<usize>,
    value: String,
}

#[derive(Serialize)]
struct PoissonReport {
    command: &'static str,
    jacobi_first: bool,
    jacobi_second: bool,
    compatible: bool,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    offending: Option<OffendingComponent>,
}

fn first_component(source: &'static str, tri: &Alternating) -> Option<OffendingComponent> {
    tri.components().next().map(|(idx, poly)| OffendingComponent {
        source,
        component: one_based(idx),
        value: poly.to_string(),
    })
}

fn load_poisson_pair(paths: &[PathBuf]) -> CliResult<(PolyBivector, PolyBivector)> {
    match paths {
        [single] => {
            let text = load_text(single)?;
            let value = shape_of(single, &text)?;
            if value.get("first").is_none() {
                return input_err(format!(
                    "{}: holds a single bivector; pass --input twice or a pair document",
                    single.display()
                ));
            }
            let doc: PairDoc = typed(single, &text)?;
            doc.to_pair()
                .map_err(|e| Failure::Input(format!("{}: {e}", single.display())))
        }
        [a, b] => {
            let mut fields = Vec::with_capacity(2);
            for path in [a, b] {
                let text = load_text(path)?;
                let value = shape_of(path, &text)?;
                if value.get("components").is_none() {
                    return input_err(format!(
                        "{}: expected a bivector document with `components`",
                        path.display()
                    ));
                }
                let doc: BivectorDoc = typed(path, &text)?;
                fields.push(
                    doc.to_bivector()
                        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
                );
            }
            let second = fields.pop().expect("two fields");
            let first = fields.pop().expect("two fields");
            Ok((first, second))
        }
        _ => input_err("pass --input once (a pair document) or twice (one bivector each)"),
    }
}

fn cmd_poisson_check(paths: &[PathBuf], format: Format) -> CliResult<ExitCode> {
    let (c1, c2) = load_poisson_pair(paths)?;
    let pc = pair_check(&c1, &c2).map_err(|e| match e {
        FormsError::VarsMismatch => {
            Failure::Input("the two bivectors use different coordinates".into())
        }
        other => Failure::Input(format!("{other}")),
    })?;
    let offending = if !pc.jacobi_first {
        first_component("first", &c1.schouten(&c1).expect("same vars"))
    } else if !pc.jacobi_second {
        first_component("second", &c2.schouten(&c2).expect("same vars"))
    } else if !pc.compatible {
        first_component("mixed", &c1.schouten(&c2).expect("same vars"))
    } else {
        None
    };
    let report = PoissonReport {
        command: "poisson check",
        jacobi_first: pc.jacobi_first,
        jacobi_second: pc.jacobi_second,
        compatible: pc.compatible,
        ok: pc.ok(),
        offending,
    };
    let verdict = |b: bool| if b { "ok" } else { "FAIL" };
    let mut text = format!(
        "jacobi(first)   {}\njacobi(second)  {}\ncompatibility   {}",
        verdict(report.jacobi_first),
        verdict(report.jacobi_second),
        verdict(report.compatible)
    );
    if let Some(off) = &report.offending {
        text.push_str(&format!(
            "\noffending       [{},{},{}] of the {} bracket: {}",
            off.component[0], off.component[1], off.component[2], off.source, off.value
        ));
    }
    emit(format, &report, text)?;
    Ok(if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---- web build ----

#[derive(Serialize)]
struct LevelView {
    level: usize,
    index: usize,
    dim: usize,
    basis: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct CurveView {
    level: usize,
    index: usize,
    coordinates: Vec<usize>,
    classes: Vec<Vec<String>>,
    veronese: bool,
}

#[derive(Serialize)]
struct WebReport {
    command: &'static str,
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<Vec<String>>,
    web_type: Vec<usize>,
    phi_dims: Vec<usize>,
    levels: Vec<LevelView>,
    curves: Vec<CurveView>,
    jumps_ok: bool,
    kernel_slices_ok: bool,
    veronese_ok: bool,
    certified: bool,
}

fn cmd_web_build(path: &Path, point: Option<&str>, format: Format) -> CliResult<ExitCode> {
    let (p, pt) = resolve_pencil(path, point)?;
    let web = build_infinitesimal_web(&p).map_err(|e| Failure::Verify(format!("{e}")))?;
    let phi_dims = phi_chain(&p).dims();
    let levels: Vec<LevelView> = web
        .filtration
        .levels
        .iter()
        .zip(&web.filtration.indices)
        .enumerate()
        .map(|(j, (fj, &nj))| LevelView {
            level: j + 1,
            index: nj,
            dim: fj.dim(),
            basis: basis_rows(fj),
        })
        .collect();
    let curves: Vec<CurveView> = web
        .curves
        .iter()
        .map(|c| CurveView {
            level: c.level,
            index: c.index,
            coordinates: one_based(&c.pivots),
            classes: mat_rows(&c.coeff_classes),
            veronese: bihamkit::web::veronese_check(c),
        })
        .collect();
    let report = WebReport {
        command: "web build",
        dim: p.dim(),
        point: pt.as_deref().map(scalar_row),
        web_type: web.web_type.clone(),
        phi_dims,
        levels,
        curves,
        jumps_ok: web.checks.jumps_ok,
        kernel_slices_ok: web.checks.kernel_slices_ok,
        veronese_ok: web.checks.veronese_ok,
        certified: web.certified(),
    };
    let mut text = format!(
        "web type       {}\nphi dims       {}",
        fmt_usizes(&report.web_type),
        fmt_usizes(&report.phi_dims)
    );
    for lv in &report.levels {
        text.push_str(&format!(
            "\nF{} (index {})  dim {}",
            lv.level, lv.index, lv.dim
        ));
        for row in &lv.basis {
            text.push_str(&format!("\n               {}", fmt_row(row)));
        }
    }
    for c in &report.curves {
        text.push_str(&format!(
            "\ncurve {}        degree {}, coordinates {}, veronese {}",
            c.level,
            c.index,
            fmt_usizes(&c.coordinates),
            c.veronese
        ));
        for row in &c.classes {
            text.push_str(&format!("\n               {}", fmt_row(row)));
        }
    }
    text.push_str(&format!(
        "\njumps ok       {}\nkernel slices  {}\nveronese       {}\ncertified      {}",
        report.jumps_ok, report.kernel_slices_ok, report.veronese_ok, report.certified
    ));
    emit(format, &report, text)?;
    Ok(if report.certified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---- lie translate ----

#[derive(Serialize)]
struct LieReport {
    command: &'static str,
    algebra: String,
    dim: usize,
    rank: usize,
    casimir_degrees: Vec<usize>,
    symbolic_certified: Vec<bool>,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    attempts_used: Option<usize>,
    shift: Vec<String>,
    point: Vec<String>,
    theorem: TheoremReport,
}

fn lie_input_error(e: LieError) -> Failure {
    Failure::Input(format!("{e}"))
}

fn load_algebra(
    name: Option<&str>,
    paths: &[PathBuf],
    max_degree: Option<u32>,
) -> CliResult<(String, LieAlgebra)> {
    match (name, paths) {
        (Some(n), []) => {
            let Some(digits) = n.strip_prefix("sl") else {
                return input_err(format!("unknown algebra `{n}`, expected slN"));
            };
            let Ok(size) = digits.parse::<usize>() else {
                return input_err(format!("unknown algebra `{n}`, expected slN"));
            };
            if size < 2 || size > 9 {
                return input_err("slN supported for 2 <= N <= 9");
            }
            let algebra = match max_degree {
                None => LieAlgebra::sl(size),
                Some(gate) => LieAlgebra::with_degree_gate(
                    bihamkit::lie::sl_structure(size),
                    bihamkit::lie::sl_casimirs(size),
                    gate,
                )
                .map_err(lie_input_error)?,
            };
            Ok((n.to_string(), algebra))
        }
        (Some(_), _) => input_err("pass either --algebra or --input files, not both"),
        (None, [sc_path, cas_path]) => {
            let sc_text = load_text(sc_path)?;
            let doc: ScDoc = typed(sc_path, &sc_text)?;
            let sc = doc
                .to_structure_constants()
                .map_err(|e| Failure::Input(format!("{}: {e}", sc_path.display())))?;
            let cas_text = load_text(cas_path)?;
            let texts: Vec<String> = typed(cas_path, &cas_text)?;
            let polys = bihamkit::json::parse_casimirs(&texts, sc.vars())
                .map_err(|e| Failure::Input(format!("{}: {e}", cas_path.display())))?;
            let algebra = match max_degree {
                None => LieAlgebra::new(sc, polys),
                Some(gate) => LieAlgebra::with_degree_gate(sc, polys, gate),
            }
            .map_err(lie_input_error)?;
            Ok(("custom".to_string(), algebra))
        }
        (None, _) => input_err(
            "pass --algebra slN, or --input twice: structure constants, then a Casimir list",
        ),
    }
}

fn cmd_lie_translate(
    algebra: Option<&str>,
    inputs: &[PathBuf],
    shift: Option<&str>,
    point: Option<&str>,
    seed: Option<u64>,
    max_degree: Option<u32>,
    format: Format,
) -> CliResult<ExitCode> {
    let (name, algebra) = load_algebra(algebra, inputs, max_degree)?;
    let seed = seed.unwrap_or(DEFAULT_SEED);
    const ATTEMPTS: usize = 64;

    let shift = shift.map(|s| parse_csv("shift", s)).transpose()?;
    let point = point.map(|s| parse_csv("point", s)).transpose()?;

    let (a, x, attempts_used, theorem) = match (shift, point) {
        (Some(a), Some(x)) => {
            let pair = algebra.translation_pair(&a).map_err(lie_input_error)?;
            let rep = pair.verify_theorem(&x).map_err(|e| match e {
                LieError::IncompletePoint => Failure::Verify(
                    "the pencil is incomplete at this point; try another --point or --seed"
                        .into(),
                ),
                other => lie_input_error(other),
            })?;
            (a, x, None, rep)
        }
        (Some(a), None) => {
            let pair = algebra.translation_pair(&a).map_err(lie_input_error)?;
            let mut rng = SplitMix64::new(seed);
            let mut found = None;
            let mut used = 0;
            for attempt in 1..=ATTEMPTS {
                let x = rng.vector(algebra.dim(), 9);
                match pair.verify_theorem(&x) {
                    Ok(rep) if rep.ok => {
                        used = attempt;
                        found = Some((x, rep));
                        break;
                    }
                    Ok(_) | Err(LieError::IncompletePoint) => continue,
                    Err(e) => return Err(lie_input_error(e)),
                }
            }
            let Some((x, rep)) = found else {
                return Err(Failure::Verify(format!(
                    "no certifying point found in {ATTEMPTS} attempts; try another --seed"
                )));
            };
            (a, x, Some(used), rep)
        }
        (None, Some(_)) => {
            return input_err("--point without --shift is not supported; pass --shift too")
        }
        (None, None) => {
            let w = algebra.witness_search(seed, ATTEMPTS).map_err(|e| match e {
                LieError::WitnessSearchExhausted(n) => Failure::Verify(format!(
                    "no witness found in {n} attempts; try another --seed"
                )),
                other => lie_input_error(other),
            })?;
            (w.shift, w.point, Some(w.attempts_used), w.report)
        }
    };

    let report = LieReport {
        command: "lie translate",
        algebra: name,
        dim: algebra.dim(),
        rank: algebra.casimirs.len(),
        casimir_degrees: algebra
            .casimirs
            .iter()
            .map(|c| c.exponent + 1)
            .collect(),
        symbolic_certified: algebra.casimirs.iter().map(|c| c.symbolic_certified).collect(),
        seed,
        attempts_used,
        shift: scalar_row(&a),
        point: scalar_row(&x),
        theorem,
    };
    let t = &report.theorem;
    let verdict = |b: bool| if b { "ok" } else { "FAIL" };
    let mut text = format!(
        "algebra        {} (dim {}, rank {})\nshift          {}\npoint          {}",
        report.algebra,
        report.dim,
        report.rank,
        fmt_row(&report.shift),
        fmt_row(&report.point)
    );
    if let Some(n) = report.attempts_used {
        text.push_str(&format!("\nattempts       {n} (seed {})", report.seed));
    }
    text.push_str(&format!(
        "\nexponents      {}\nindices        {}  match {}",
        fmt_usizes(&t.exponents),
        fmt_usizes(&t.minimal_indices),
        verdict(t.indices_match_exponents)
    ));
    text.push_str(&format!(
        "\ndimension      {}\nindependent    {}\ninvolutive     {}\ngenerators     {}",
        verdict(t.dimension_identity),
        verdict(t.independent),
        verdict(t.involutive),
        verdict(t.generators_certified)
    ));
    match &t.web_type {
        Some(wt) => text.push_str(&format!(
            "\nweb            type {}, certified {}",
            fmt_usizes(wt),
            t.web_certified
        )),
        None => text.push_str("\nweb            not simple, no certificate"),
    }
    text.push_str(&format!("\noverall        {}", verdict(t.ok)));
    emit(format, &report, text)?;
    Ok(if report.theorem.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---- examples verify ----

#[derive(Serialize)]
struct CriterionView {
    criterion: u8,
    checks: usize,
    passed: usize,
    ok: bool,
}

#[derive(Serialize)]
struct ExamplesReport {
    command: &'static str,
    seed: u64,
    total: usize,
    passed: usize,
    ok: bool,
    criteria: Vec<CriterionView>,
    checks: Vec<ExampleCheck>,
}

fn cmd_examples_verify(
    only: Option<&str>,
    seed: Option<u64>,
    format: Format,
) -> CliResult<ExitCode> {
    let seed = seed.unwrap_or(DEFAULT_SEED);
    let mut checks = fixtures::verify_all(seed);
    if let Some(sub) = only {
        checks.retain(|c| c.id.contains(sub));
        if checks.is_empty() {
            return input_err(format!("no example check id contains `{sub}`"));
        }
    }
    let mut criteria: Vec<CriterionView> = Vec::new();
    for c in &checks {
        match criteria.iter_mut().find(|v| v.criterion == c.criterion) {
            Some(v) => {
                v.checks += 1;
                v.passed += c.pass as usize;
                v.ok &= c.pass;
            }
            None => criteria.push(CriterionView {
                criterion: c.criterion,
                checks: 1,
                passed: c.pass as usize,
                ok: c.pass,
            }),
        }
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let report = ExamplesReport {
        command: "examples verify",
        seed,
        total: checks.len(),
        passed,
        ok: passed == checks.len(),
        criteria,
        checks,
    };
    let mut text = String::new();
    for c in &report.checks {
        text.push_str(&format!(
            "{} {:<18} {}\n",
            if c.pass { "PASS" } else { "FAIL" },
            c.id,
            c.detail
        ));
    }
    text.push_str(&format!(
        "{} of {} checks passed (seed {})",
        report.passed, report.total, report.seed
    ));
    emit(format, &report, text)?;
    Ok(if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
