//! `hw` — command-line front end for the hereditary-invariants library.
//!
//! Every data flag (`--gram`, `--quiver`, `--left`, ...) accepts either
//! inline JSON or a path to a JSON file; inline values are recognized by a
//! leading `{` or `[`. Results go to stdout, diagnostics to stderr. Exit
//! codes: 0 success, 1 mathematical-precondition failure (singular Cartan
//! matrix, non-exceptional class, ...), 2 malformed input, with the JSON
//! path of the offending value in the message.
//!
//! The environment variable `HW_MAX_DIM` (default 8) caps per-vertex
//! dimensions in the enumeration-backed subcommands.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use std::process::ExitCode;

use hw_core::classify::{classify, CategoryDescriptor, ClassificationReport};
use hw_core::json as wire;
use hw_core::klattice::{
    perp_split, torsion_test, twist_k, twist_k_checked, EulerLattice, TwistDirection, TwistMode,
};
use hw_core::quiver::{
    ar_translate, enumerate_indecomposables, hom_ext, indecomposable, is_exceptional,
    path_distance_check, reflect, tilting_from_sequence, Quiver,
};
use hw_core::search::{min_self_ext_search, MinExtWitness, SearchDomain};
use hw_core::tube::{minimal_spherical, tau as tube_tau, tube_hom};
use hw_core::verify::{run_suite, SuiteParams};

#[derive(Parser)]
#[command(
    name = "hw",
    version,
    about = "Exact K-theoretic invariants of hereditary categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (default: json; verify-paper defaults to text)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy)]
enum Direction {
    Left,
    Right,
}

#[derive(ValueEnum, Clone, Copy)]
enum Mode {
    Spherical,
    Exceptional,
}

#[derive(Args)]
struct LatticeArgs {
    /// Gram matrix [[..],..] or lattice document {"rank","gram","labels"?}
    #[arg(long)]
    gram: Option<String>,
    /// Quiver document {"vertices","arrows"}; its Ringel form is used
    #[arg(long)]
    quiver: Option<String>,
}

#[derive(Args)]
struct PairArgs {
    /// Quiver document
    #[arg(long)]
    quiver: String,
    /// Left representation {"dims","maps"}
    #[arg(long)]
    left: String,
    /// Right representation {"dims","maps"}
    #[arg(long)]
    right: String,
}

#[derive(Args)]
struct RepArgs {
    /// Quiver document
    #[arg(long)]
    quiver: String,
    /// Representation {"dims","maps"}
    #[arg(long)]
    left: String,
}

#[derive(Subcommand)]
enum Command {
    /// Gram (Cartan) matrix of a lattice, or the Ringel form of a quiver
    Cartan(LatticeArgs),
    /// Coxeter matrix -A^-1 A^T (fails on singular or non-integral input)
    Coxeter(LatticeArgs),
    /// Radical basis and the induced nondegenerate quotient form
    Radical(LatticeArgs),
    /// Hom and Ext dimensions between two representations
    Hom(PairArgs),
    /// Ext dimension between two representations (with Hom alongside)
    Ext(PairArgs),
    /// Auslander-Reiten translate: a representation (--quiver) or a tube
    /// object (--rank)
    Tau {
        /// Quiver document (translate a representation)
        #[arg(long)]
        quiver: Option<String>,
        /// Tube rank (translate a tube object)
        #[arg(long)]
        rank: Option<usize>,
        /// Representation or tube object {"base","length"}
        #[arg(long)]
        left: String,
    },
    /// Is the representation indecomposable?
    Indec(RepArgs),
    /// Is the representation exceptional (End = k, no self-extensions)?
    Exceptional(RepArgs),
    /// Bernstein-Gelfand-Ponomarev reflection at a sink or source
    Reflect {
        #[command(flatten)]
        rep: RepArgs,
        /// Vertex to reflect at (must be a sink or a source)
        #[arg(long)]
        vertex: usize,
    },
    /// All indecomposables of a Dynkin quiver, realized and listed by
    /// dimension vector
    Enumerate {
        /// Quiver document
        #[arg(long)]
        quiver: String,
        /// Per-vertex dimension bound (capped by HW_MAX_DIM)
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Complete an exceptional sequence to tilting-object summands
    TiltFromSeq {
        /// Quiver document
        #[arg(long)]
        quiver: String,
        /// JSON array of representations, earliest term first
        #[arg(long)]
        seq: String,
    },
    /// Twist a class along a set of classes at the lattice level
    TwistK {
        /// Lattice (Gram matrix or document)
        #[arg(long)]
        gram: String,
        /// Class to twist (integer vector)
        #[arg(long)]
        class: String,
        /// Classes to twist along (array of integer vectors)
        #[arg(long = "spherical-set")]
        spherical_set: String,
        /// Twist direction
        #[arg(long, value_enum, default_value_t = Direction::Left)]
        direction: Direction,
        /// Validate preconditions before twisting
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// Split off the perpendicular lattice of an exceptional class
    Perp {
        /// Lattice (Gram matrix or document)
        #[arg(long)]
        gram: String,
        /// Exceptional class (integer vector with self-pairing 1)
        #[arg(long)]
        class: String,
    },
    /// Is the class orthogonal to every member of the spherical set?
    Torsion {
        /// Lattice (Gram matrix or document)
        #[arg(long)]
        gram: String,
        /// Class to test (integer vector)
        #[arg(long)]
        class: String,
        /// Spherical classes (array of integer vectors)
        #[arg(long = "spherical-set")]
        spherical_set: String,
    },
    /// Hom and Ext dimensions between two tube objects
    TubeHom {
        /// Tube rank
        #[arg(long)]
        rank: usize,
        /// Left object {"base","length"}
        #[arg(long)]
        left: String,
        /// Right object {"base","length"}
        #[arg(long)]
        right: String,
    },
    /// The minimal spherical objects of a tube
    Spherical {
        /// Tube rank
        #[arg(long)]
        rank: usize,
    },
    /// Classify a category descriptor and report its numerical invariants
    Classify {
        /// Descriptor {"type":"quiver"|"tube"|"curve"|"sum",...}
        #[arg(long)]
        descriptor: Option<String>,
        /// Shortcut: classify the module category of this quiver
        #[arg(long)]
        quiver: Option<String>,
        /// Shortcut: classify a tube of this rank
        #[arg(long)]
        rank: Option<usize>,
        /// Shortcut: classify coherent sheaves on a curve of this genus
        #[arg(long)]
        genus: Option<i64>,
        /// Scan bound for the invariant suite
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
    /// Search for the minimal self-extension object (Dynkin or tube)
    SearchMinExt {
        /// Quiver document (Dynkin search domain)
        #[arg(long)]
        quiver: Option<String>,
        /// Tube rank (tube search domain)
        #[arg(long)]
        rank: Option<usize>,
        /// Dimension/length bound (capped by HW_MAX_DIM)
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Check that all indecomposables sit within hom-distance two
    PathCheck {
        /// Quiver document (connected Dynkin)
        #[arg(long)]
        quiver: String,
    },
    /// Run the built-in verification suite and print a pass table
    VerifyPaper {
        /// Half-width of the (a,b) grid for the block identities
        #[arg(long, default_value_t = 5)]
        grid: i64,
        /// Largest genus for the curve and block checks
        #[arg(long = "genus-max", default_value_t = 5)]
        genus_max: i64,
        /// Seed for the randomized families
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum CliError {
    /// Malformed input (exit 2).
    Parse(String),
    /// A mathematical precondition failed (exit 1).
    Math(String),
}

impl CliError {
    fn parse(msg: impl Into<String>) -> Self {
        CliError::Parse(msg.into())
    }
}

macro_rules! math_error_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Math(e.to_string())
            }
        }
    )*};
}
math_error_from!(
    hw_core::klattice::KLatticeError,
    hw_core::quiver::QuiverError,
    hw_core::tube::TubeError,
    hw_core::search::SearchError,
    hw_core::classify::ClassifyError
);

struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(CliError::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Load a flag value: inline JSON (leading `{` or `[`) or a file path.
fn load_value(flag: &str, raw: &str) -> Result<Value, CliError> {
    let trimmed = raw.trim_start();
    let text: String = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        raw.to_string()
    } else {
        std::fs::read_to_string(raw)
            .map_err(|e| CliError::parse(format!("{flag}: cannot read file {raw}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::parse(format!("{flag}: invalid JSON: {e}")))
}

fn in_flag(flag: &str, e: wire::ParseError) -> CliError {
    CliError::parse(format!("{flag}: {e}"))
}

fn load_lattice(args: &LatticeArgs) -> Result<EulerLattice, CliError> {
    match (&args.gram, &args.quiver) {
        (Some(g), None) => {
            let v = load_value("--gram", g)?;
            wire::parse_lattice(&v).map_err(|e| in_flag("--gram", e))
        }
        (None, Some(q)) => {
            let quiver = load_quiver(q)?;
            Ok(EulerLattice::new(quiver.ringel_form())?)
        }
        _ => Err(CliError::parse("exactly one of --gram or --quiver is required")),
    }
}

fn load_quiver(raw: &str) -> Result<Quiver, CliError> {
    let v = load_value("--quiver", raw)?;
    wire::parse_quiver(&v).map_err(|e| in_flag("--quiver", e))
}

fn load_rep(flag: &str, raw: &str, q: &Quiver) -> Result<hw_core::quiver::Rep, CliError> {
    let v = load_value(flag, raw)?;
    wire::parse_rep(&v, q).map_err(|e| in_flag(flag, e))
}

fn load_class(flag: &str, raw: &str) -> Result<Vec<hw_core::Int>, CliError> {
    let v = load_value(flag, raw)?;
    wire::parse_int_vec(&v, "").map_err(|e| in_flag(flag, e))
}

fn load_class_set(flag: &str, raw: &str) -> Result<Vec<Vec<hw_core::Int>>, CliError> {
    let v = load_value(flag, raw)?;
    wire::parse_int_vec_set(&v, "").map_err(|e| in_flag(flag, e))
}

fn load_tube_object(
    flag: &str,
    raw: &str,
    rank: usize,
) -> Result<hw_core::tube::TubeObject, CliError> {
    let v = load_value(flag, raw)?;
    wire::parse_tube_object(&v, rank).map_err(|e| in_flag(flag, e))
}

fn max_dim_cap() -> usize {
    std::env::var("HW_MAX_DIM")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(8)
}

fn emit(v: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{v}\n"),
        Format::Text => render_text(v),
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let format = cli.format.unwrap_or(match cli.command {
        Command::VerifyPaper { .. } => Format::Text,
        _ => Format::Json,
    });
    let out = match cli.command {
        Command::Cartan(args) => {
            let lat = load_lattice(&args)?;
            emit(&wire::lattice_value(&lat), format)
        }
        Command::Coxeter(args) => {
            let lat = load_lattice(&args)?;
            let c = lat.coxeter()?;
            emit(&json!({ "coxeter": wire::int_matrix_value(&c) }), format)
        }
        Command::Radical(args) => {
            let lat = load_lattice(&args)?;
            let num = lat.radical_quotient()?;
            let radical = Value::Array(
                num.radical_basis().iter().map(|r| wire::int_vec_value(r)).collect(),
            );
            emit(
                &json!({
                    "schema": 1,
                    "num_rank": num.num_rank(),
                    "radical": radical,
                    "gram": wire::int_matrix_value(num.induced_gram()),
                }),
                format,
            )
        }
        Command::Hom(args) | Command::Ext(args) => {
            let q = load_quiver(&args.quiver)?;
            let left = load_rep("--left", &args.left, &q)?;
            let right = load_rep("--right", &args.right, &q)?;
            let he = hom_ext(&left, &right)?;
            emit(&json!({ "hom": he.hom_dim, "ext": he.ext_dim }), format)
        }
        Command::Tau { quiver, rank, left } => match (quiver, rank) {
            (Some(qraw), None) => {
                let q = load_quiver(&qraw)?;
                let rep = load_rep("--left", &left, &q)?;
                let translated = ar_translate(&rep)?;
                emit(&wire::rep_value(&translated), format)
            }
            (None, Some(r)) => {
                let x = load_tube_object("--left", &left, r)?;
                emit(&wire::tube_object_value(&tube_tau(&x)), format)
            }
            _ => return Err(CliError::parse("exactly one of --quiver or --rank is required")),
        },
        Command::Indec(args) => {
            let q = load_quiver(&args.quiver)?;
            let rep = load_rep("--left", &args.left, &q)?;
            emit(&json!({ "indecomposable": indecomposable(&rep)? }), format)
        }
        Command::Exceptional(args) => {
            let q = load_quiver(&args.quiver)?;
            let rep = load_rep("--left", &args.left, &q)?;
            let he = hom_ext(&rep, &rep)?;
            emit(
                &json!({
                    "hom": he.hom_dim,
                    "ext": he.ext_dim,
                    "exceptional": is_exceptional(&rep)?,
                }),
                format,
            )
        }
        Command::Reflect { rep, vertex } => {
            let q = load_quiver(&rep.quiver)?;
            let m = load_rep("--left", &rep.left, &q)?;
            let (rq, rm) = reflect(&q, &m, vertex)?;
            emit(
                &json!({
                    "schema": 1,
                    "quiver": wire::quiver_value(&rq),
                    "rep": wire::rep_value(&rm),
                }),
                format,
            )
        }
        Command::Enumerate { quiver, bound } => {
            let q = load_quiver(&quiver)?;
            let cap = max_dim_cap();
            let bound = bound.unwrap_or(cap).min(cap);
            let indecs = enumerate_indecomposables(&q, bound)?;
            let dims = Value::Array(
                indecs
                    .iter()
                    .map(|m| {
                        Value::Array(
                            m.dims().iter().map(|&d| Value::Number((d as u64).into())).collect(),
                        )
                    })
                    .collect(),
            );
            emit(&json!({ "schema": 1, "count": indecs.len(), "dims": dims }), format)
        }
        Command::TiltFromSeq { quiver, seq } => {
            let q = load_quiver(&quiver)?;
            let v = load_value("--seq", &seq)?;
            let seq = wire::parse_rep_seq(&v, &q).map_err(|e| in_flag("--seq", e))?;
            let summands = tilting_from_sequence(&seq)?;
            let list = Value::Array(summands.iter().map(wire::rep_value).collect());
            emit(&json!({ "schema": 1, "summands": list }), format)
        }
        Command::TwistK { gram, class, spherical_set, direction, mode } => {
            let lat = load_lattice(&LatticeArgs { gram: Some(gram), quiver: None })?;
            let v = load_class("--class", &class)?;
            let s = load_class_set("--spherical-set", &spherical_set)?;
            let dir = match direction {
                Direction::Left => TwistDirection::Left,
                Direction::Right => TwistDirection::Right,
            };
            let twisted = match mode {
                None => twist_k(&lat, &s, &v, dir)?,
                Some(Mode::Spherical) => {
                    twist_k_checked(&lat, &s, &v, dir, TwistMode::Spherical)?
                }
                Some(Mode::Exceptional) => {
                    twist_k_checked(&lat, &s, &v, dir, TwistMode::Exceptional)?
                }
            };
            emit(&json!({ "class": wire::int_vec_value(&twisted) }), format)
        }
        Command::Perp { gram, class } => {
            let lat = load_lattice(&LatticeArgs { gram: Some(gram), quiver: None })?;
            let e = load_class("--class", &class)?;
            let split = perp_split(&lat, &e)?;
            emit(
                &json!({
                    "schema": 1,
                    "perp": wire::lattice_value(&split.perp),
                    "basis": wire::int_matrix_value(&split.basis),
                }),
                format,
            )
        }
        Command::Torsion { gram, class, spherical_set } => {
            let lat = load_lattice(&LatticeArgs { gram: Some(gram), quiver: None })?;
            let v = load_class("--class", &class)?;
            let s = load_class_set("--spherical-set", &spherical_set)?;
            emit(&json!({ "torsion": torsion_test(&lat, &v, &s)? }), format)
        }
        Command::TubeHom { rank, left, right } => {
            let x = load_tube_object("--left", &left, rank)?;
            let y = load_tube_object("--right", &right, rank)?;
            let (h, e) = tube_hom(&x, &y)?;
            emit(&json!({ "hom": h, "ext": e }), format)
        }
        Command::Spherical { rank } => {
            let objects = minimal_spherical(rank)?;
            let list = Value::Array(objects.iter().map(wire::tube_object_value).collect());
            emit(&json!({ "schema": 1, "rank": rank, "objects": list }), format)
        }
        Command::Classify { descriptor, quiver, rank, genus, bound } => {
            let d = match (descriptor, quiver, rank, genus) {
                (Some(raw), None, None, None) => {
                    let v = load_value("--descriptor", &raw)?;
                    wire::parse_descriptor(&v).map_err(|e| in_flag("--descriptor", e))?
                }
                (None, Some(qraw), None, None) => {
                    CategoryDescriptor::QuiverCat(load_quiver(&qraw)?)
                }
                (None, None, Some(r), None) => CategoryDescriptor::TubeCat(r),
                (None, None, None, Some(g)) => CategoryDescriptor::CurveCat(g),
                _ => {
                    return Err(CliError::parse(
                        "exactly one of --descriptor, --quiver, --rank, or --genus is required",
                    ))
                }
            };
            let report = classify(&d, bound)?;
            emit(&report_value(&report), format)
        }
        Command::SearchMinExt { quiver, rank, bound } => {
            let bound = bound.min(max_dim_cap());
            let domain = match (quiver, rank) {
                (Some(qraw), None) => SearchDomain::Dynkin(load_quiver(&qraw)?),
                (None, Some(r)) => SearchDomain::Tube { rank: r },
                _ => {
                    return Err(CliError::parse("exactly one of --quiver or --rank is required"))
                }
            };
            let res = min_self_ext_search(&domain, bound)?;
            let witness = match &res.witness {
                MinExtWitness::QuiverRep(rep) => {
                    json!({ "kind": "rep", "rep": wire::rep_value(rep) })
                }
                MinExtWitness::TubeObject(x) => {
                    json!({ "kind": "tube", "object": wire::tube_object_value(x) })
                }
            };
            emit(
                &json!({
                    "schema": 1,
                    "hom": res.hom_dim,
                    "ext": res.ext_dim,
                    "exceptional": res.exceptional,
                    "spherical": res.spherical,
                    "witness": witness,
                }),
                format,
            )
        }
        Command::PathCheck { quiver } => {
            let q = load_quiver(&quiver)?;
            emit(&json!({ "pass": path_distance_check(&q)? }), format)
        }
        Command::VerifyPaper { grid, genus_max, seed } => {
            if grid < 0 || genus_max < 0 {
                return Err(CliError::parse("--grid and --genus-max must be nonnegative"));
            }
            let report = run_suite(&SuiteParams { grid, genus_max, seed });
            let stdout = match format {
                Format::Text => suite_text(&report),
                Format::Json => {
                    let checks = Value::Array(
                        report
                            .checks
                            .iter()
                            .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
                            .collect(),
                    );
                    format!(
                        "{}\n",
                        json!({
                            "schema": 1,
                            "grid": grid,
                            "genus_max": genus_max,
                            "seed": seed,
                            "pass": report.all_pass(),
                            "checks": checks,
                        })
                    )
                }
            };
            return Ok(Outcome { stdout, code: if report.all_pass() { 0 } else { 1 } });
        }
    };
    Ok(Outcome::ok(out))
}

fn report_value(r: &ClassificationReport) -> Value {
    json!({
        "schema": 1,
        "branch": r.branch.as_str(),
        "num_rank": r.num_rank,
        "serre_ok": r.serre_ok,
        "has_exceptional_class": r.has_exceptional_class,
        "has_spherical_class": r.has_spherical_class,
        "fractional_cy": match r.fractional_cy {
            Some(f) => json!({ "q": f.q, "p": f.p }),
            None => Value::Null,
        },
        "coxeter": wire::int_matrix_value(&r.coxeter),
    })
}

fn suite_text(report: &hw_core::verify::SuiteReport) -> String {
    let name_width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in &report.checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status}  {:<name_width$}  {}\n", c.name, c.detail));
    }
    let total = report.checks.len();
    let failed = report.checks.iter().filter(|c| !c.pass).count();
    if failed == 0 {
        out.push_str(&format!("all {total} checks passed\n"));
    } else {
        out.push_str(&format!("{failed} of {total} checks failed\n"));
    }
    out
}

// --- plain-text rendering ---------------------------------------------------

fn token(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_matrix(v: &Value) -> bool {
    matches!(v, Value::Array(rows) if !rows.is_empty() && rows.iter().all(Value::is_array))
}

fn matrix_lines(v: &Value) -> Vec<String> {
    let rows: Vec<Vec<String>> = v
        .as_array()
        .expect("matrix is an array")
        .iter()
        .map(|r| r.as_array().expect("matrix row is an array").iter().map(token).collect())
        .collect();
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; ncols];
    for row in &rows {
        for (j, t) in row.iter().enumerate() {
            widths[j] = widths[j].max(t.len());
        }
    }
    rows.iter()
        .map(|row| {
            let cells: Vec<String> =
                row.iter().enumerate().map(|(j, t)| format!("{t:>w$}", w = widths[j])).collect();
            format!("[ {} ]", cells.join(" "))
        })
        .collect()
}

fn inline_object(map: &Map<String, Value>) -> String {
    map.iter()
        .filter(|(k, _)| k.as_str() != "schema")
        .map(|(k, v)| format!("{k}={}", token(v)))
        .collect::<Vec<_>>()
        .join("  ")
}

/// Aligned-column rendering of a result object.
fn render_text(v: &Value) -> String {
    let map = match v {
        Value::Object(map) => map,
        other if is_matrix(other) => return matrix_lines(other).join("\n") + "\n",
        other => return format!("{}\n", token(other)),
    };
    let keys: Vec<&String> = map.keys().filter(|k| k.as_str() != "schema").collect();
    let width = keys.iter().map(|k| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for k in keys {
        let val = &map[k.as_str()];
        match val {
            m if is_matrix(m) => {
                for (i, line) in matrix_lines(m).iter().enumerate() {
                    if i == 0 {
                        out.push_str(&format!("{k:<width$}  {line}\n"));
                    } else {
                        out.push_str(&format!("{:<width$}  {line}\n", ""));
                    }
                }
            }
            Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
                for (i, item) in items.iter().enumerate() {
                    let line = inline_object(item.as_object().expect("checked above"));
                    if i == 0 {
                        out.push_str(&format!("{k:<width$}  {line}\n"));
                    } else {
                        out.push_str(&format!("{:<width$}  {line}\n", ""));
                    }
                }
            }
            Value::Array(items) => {
                let list = items.iter().map(token).collect::<Vec<_>>().join(", ");
                out.push_str(&format!("{k:<width$}  [{list}]\n"));
            }
            Value::Object(obj) => {
                out.push_str(&format!("{k:<width$}  {}\n", inline_object(obj)));
            }
            scalar => {
                out.push_str(&format!("{k:<width$}  {}\n", token(scalar)));
            }
        }
    }
    out
}
