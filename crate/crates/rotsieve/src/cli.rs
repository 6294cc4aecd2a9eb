//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on invalid
//! input. Node indices on the command line are 1-based (Bourbaki).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use rotsieve_core::crystal::{TensorCrystal, TensorCrystalElement, DEFAULT_ELEMENT_CAP};
use rotsieve_core::csp::{csp_check, CspReport, Verdict};
use rotsieve_core::kostka::{kostka_foulkes, q_kostant_with_cap, Partition, DEFAULT_ORACLE_CAP};
use rotsieve_core::paths::{
    enumerate_paths_with, orbit_structure, rotate_times, LittelmannPath, WeightSequence,
    DEFAULT_ENUMERATION_CAP,
};
use rotsieve_core::tableaux::{
    path_to_tableau, promote, promotion_orbit, tableau_to_path, RowStrictTableau,
};
use rotsieve_core::{Error as CoreError, Family, IntPolynomial, RootSystem, Weight};

use crate::battery::{run_battery, BatteryOptions, Scope};
use crate::json::{polynomial_json, tableau_json, CspReportJson, ElementJson, PathJson};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON input: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::AlgorithmInvariantViolated(_)) => 1,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScopeArg {
    Quick,
    Full,
}

#[derive(Debug, Parser)]
#[command(name = "rotsieve", version, about = "Rotation of minuscule paths and cyclic sieving checks")]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Limit on orbit sizes and enumeration work.
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Root system queries.
    Root {
        #[command(subcommand)]
        action: RootAction,
    },
    /// Enumerate, rotate and analyse dominant minuscule paths.
    Paths {
        #[command(subcommand)]
        action: PathsAction,
    },
    /// Row-strict tableaux and promotion (type A).
    Tableau {
        #[command(subcommand)]
        action: TableauAction,
    },
    /// Invariant elements of tensor products of minuscule crystals.
    Crystal {
        #[command(subcommand)]
        action: CrystalAction,
    },
    /// Kostka-Foulkes polynomial K_{shape, content}(q).
    Kostka(KostkaArgs),
    /// Cyclic sieving verification.
    Csp {
        #[command(subcommand)]
        action: CspAction,
    },
    /// Run every property suite over the standard battery.
    Battery {
        #[arg(long, value_enum, default_value = "quick")]
        scope: ScopeArg,
        #[arg(long, default_value_t = BatteryOptions::new(Scope::Quick).seed)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct TypeArgs {
    /// Cartan type letter, A to G.
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Debug, Args)]
struct SeqArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Comma-separated fundamental weight indices, 1-based.
    #[arg(long, value_delimiter = ',', required = true)]
    weights: Vec<usize>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// JSON input file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// JSON input given inline.
    #[arg(long)]
    data: Option<String>,
}

#[derive(Debug, Subcommand)]
enum RootAction {
    /// List the minuscule fundamental weights.
    Minuscule(TypeArgs),
}

#[derive(Debug, Subcommand)]
enum PathsAction {
    Enumerate(SeqArgs),
    /// Apply the rotation R to a path given as JSON.
    Rotate {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Orbit structure of R^ell.
    Orbits {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value_t = 1)]
        ell: usize,
    },
}

#[derive(Debug, Subcommand)]
enum TableauAction {
    Promote {
        #[command(flatten)]
        input: InputArgs,
        /// Emit the whole promotion orbit.
        #[arg(long)]
        orbit: bool,
    },
    FromPath {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        input: InputArgs,
    },
    ToPath {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug, Subcommand)]
enum CrystalAction {
    Invariants(SeqArgs),
    /// Rotation through the commutor of an invariant element.
    Rotate {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug, Args)]
struct KostkaArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    shape: Vec<u32>,
    #[arg(long, value_delimiter = ',', required = true)]
    content: Vec<u32>,
    /// Use the q-analog of Kostant's formula instead of charge.
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Subcommand)]
enum CspAction {
    Check {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value_t = 1)]
        ell: usize,
        /// Polynomial coefficients in ascending degree; type A default.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        poly: Option<Vec<i64>>,
    },
}

/// Rendered result of a command.
struct Output {
    json: Value,
    text: String,
    csv: Option<String>,
    default: Format,
    /// A verification ran and failed.
    failed: bool,
}

impl Output {
    fn json(json: Value, text: String) -> Self {
        Output { json, text, csv: None, default: Format::Json, failed: false }
    }

    fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    fn render(&self, format: Option<Format>) -> CliResult<String> {
        match format.unwrap_or(self.default) {
            Format::Json => {
                let mut s = serde_json::to_string(&self.json)?;
                s.push('\n');
                Ok(s)
            }
            Format::Text => Ok(self.text.clone()),
            Format::Csv => self
                .csv
                .clone()
                .ok_or_else(|| usage("csv output is not available for this command")),
        }
    }
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    let result = execute(&cli).and_then(|o| Ok((o.render(cli.format)?, o.failed)));
    match result {
        Ok((text, failed)) => {
            let _ = out.write_all(text.as_bytes());
            if failed {
                1
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// [`run`] with both streams captured as strings.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}

fn execute(cli: &Cli) -> CliResult<Output> {
    let cap = cli.cap;
    match &cli.command {
        Command::Root { action: RootAction::Minuscule(ty) } => root_minuscule(&root_system(ty, cap)?),
        Command::Paths { action } => match action {
            PathsAction::Enumerate(args) => {
                let rs = root_system(&args.ty, cap)?;
                paths_enumerate(&sequence(&rs, &args.weights)?, cap)
            }
            PathsAction::Rotate { ty, input, times } => {
                let rs = root_system(ty, cap)?;
                let (seq, path) = load::<PathJson>(input)?.decode(&rs)?;
                let rotated = rotate_times(&seq, &path, *times)?;
                let seq = seq.rotated(*times);
                Ok(path_output(&seq, &rotated))
            }
            PathsAction::Orbits { seq, ell } => {
                let rs = root_system(&seq.ty, cap)?;
                paths_orbits(&sequence(&rs, &seq.weights)?, *ell)
            }
        },
        Command::Tableau { action } => match action {
            TableauAction::Promote { input, orbit } => {
                let t = load_tableau(input)?;
                if *orbit {
                    let limit = t.max_entry() as usize;
                    let tableaux = promotion_orbit(&t, limit).ok_or(CoreError::AlgorithmInvariantViolated(
                        "promotion orbit longer than the number of labels",
                    ))?;
                    let rows: Vec<_> = tableaux.iter().map(tableau_json).collect();
                    let text = tableaux.iter().map(tableau_text).collect::<Vec<_>>().join("\n");
                    Ok(Output::json(json!(rows), text))
                } else {
                    let p = promote(&t);
                    RowStrictTableau::new(p.rows().to_vec()).map_err(|_| {
                        CoreError::AlgorithmInvariantViolated("promotion produced an invalid tableau")
                    })?;
                    Ok(tableau_output(&p))
                }
            }
            TableauAction::FromPath { ty, input } => {
                let rs = root_system(ty, cap)?;
                let (seq, path) = load::<PathJson>(input)?.decode(&rs)?;
                Ok(tableau_output(&path_to_tableau(&seq, &path)?))
            }
            TableauAction::ToPath { input } => {
                let t = load_tableau(input)?;
                let rs = RootSystem::new(Family::A, t.n_rows().saturating_sub(1))?;
                let (seq, path) = tableau_to_path(&rs, &t)?;
                Ok(path_output(&seq, &path))
            }
        },
        Command::Crystal { action } => match action {
            CrystalAction::Invariants(args) => {
                let rs = root_system(&args.ty, cap)?;
                crystal_invariants(&sequence(&rs, &args.weights)?, cap)
            }
            CrystalAction::Rotate { ty, input } => {
                let rs = root_system(ty, cap)?;
                let element: ElementJson = load(input)?;
                let factors: Vec<Weight> =
                    element.factors.iter().map(|c| Weight::from_coords(c.clone())).collect();
                for f in &factors {
                    rs.check_weight(f)?;
                }
                let types = factors.iter().map(|f| rs.dominant_representative(f)).collect();
                let seq = WeightSequence::new(&rs, types)?;
                let b = TensorCrystalElement::new(&seq, factors)?;
                let rotated = TensorCrystal::new(&rs).commutor_rotate(&seq, &b)?;
                Ok(Output::json(json!(ElementJson::encode(&rotated)), weights_text(rotated.factors()) + "\n"))
            }
        },
        Command::Kostka(args) => kostka(args, cap),
        Command::Csp { action: CspAction::Check { seq, ell, poly } } => {
            let rs = root_system(&seq.ty, cap)?;
            let poly = poly.clone().map(IntPolynomial::from_coeffs);
            let report = csp_check(&sequence(&rs, &seq.weights)?, *ell, poly)?;
            Ok(csp_output(&report))
        }
        Command::Battery { scope, seed } => {
            let scope = match scope {
                ScopeArg::Quick => Scope::Quick,
                ScopeArg::Full => Scope::Full,
            };
            let opts = BatteryOptions { seed: *seed, ..BatteryOptions::new(scope) };
            Ok(battery_output(&opts))
        }
    }
}

fn battery_output(opts: &BatteryOptions) -> Output {
    let report = run_battery(opts);
    let mut csv = String::from("suite,status,checks\n");
    for s in &report.suites {
        let _ = writeln!(csv, "{},{},{}", s.name, s.status, s.checks);
    }
    Output {
        json: serde_json::to_value(&report).expect("report serializes"),
        text: report.text(),
        csv: Some(csv),
        default: Format::Text,
        failed: !report.passed(),
    }
}

/// Runs the battery with explicit options (for instance a replaced charge
/// statistic) and renders it as the `battery` subcommand would.
pub fn battery_command(opts: &BatteryOptions, format: Option<Format>, out: &mut dyn Write) -> i32 {
    let output = battery_output(opts);
    match output.render(format) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            if output.failed {
                1
            } else {
                0
            }
        }
        Err(_) => 2,
    }
}

fn root_system(ty: &TypeArgs, cap: Option<usize>) -> CliResult<RootSystem> {
    let mut chars = ty.family.chars();
    let family = match (chars.next(), chars.next()) {
        (Some(c), None) => Family::from_letter(c.to_ascii_uppercase()),
        _ => None,
    }
    .ok_or_else(|| usage(format!("unknown type `{}`; expected one of A-G", ty.family)))?;
    let rs = RootSystem::new(family, ty.rank)?;
    Ok(match cap {
        Some(c) => rs.with_orbit_cap(c),
        None => rs,
    })
}

fn sequence<'a>(rs: &'a RootSystem, weights: &[usize]) -> CliResult<WeightSequence<'a>> {
    let nodes = weights
        .iter()
        .map(|&i| {
            if (1..=rs.rank()).contains(&i) {
                Ok(i - 1)
            } else {
                Err(usage(format!("weight index {i} outside 1..={}", rs.rank())))
            }
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(WeightSequence::from_nodes(rs, &nodes)?)
}

fn load<T: DeserializeOwned>(input: &InputArgs) -> CliResult<T> {
    let text = match (&input.input, &input.data) {
        (Some(path), _) => std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.clone(), source })?,
        (None, Some(data)) => data.clone(),
        (None, None) => return Err(usage("one of --input or --data is required")),
    };
    Ok(serde_json::from_str(&text)?)
}

fn load_tableau(input: &InputArgs) -> CliResult<RowStrictTableau> {
    Ok(RowStrictTableau::new(load::<Vec<Vec<u32>>>(input)?)?)
}

fn coords_text(w: &Weight) -> String {
    let parts: Vec<String> = w.coords().iter().map(i64::to_string).collect();
    format!("({})", parts.join(", "))
}

fn weights_text(ws: &[Weight]) -> String {
    ws.iter().map(coords_text).collect::<Vec<_>>().join(" ")
}

fn coords_csv(ws: &[Weight]) -> String {
    ws.iter()
        .map(|w| w.coords().iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(",")
}

fn tableau_text(t: &RowStrictTableau) -> String {
    let mut s = String::new();
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        s += &cells.join(" ");
        s.push('\n');
    }
    s
}

fn tableau_output(t: &RowStrictTableau) -> Output {
    Output::json(json!(tableau_json(t)), tableau_text(t))
}

fn path_output(seq: &WeightSequence<'_>, path: &LittelmannPath) -> Output {
    Output::json(json!(PathJson::encode(seq, path)), weights_text(path.points()) + "\n")
}

fn root_minuscule(rs: &RootSystem) -> CliResult<Output> {
    let mut entries = Vec::new();
    let mut text = String::new();
    let mut csv = String::from("node,orbit_size\n");
    for &i in rs.minuscule_nodes() {
        let w = rs.fundamental(i)?;
        let size = rs.weyl_orbit(&w)?.len();
        entries.push(json!({ "node": i + 1, "weight": w.coords(), "orbit_size": size }));
        let _ = writeln!(text, "ω{} orbit size {}", i + 1, size);
        let _ = writeln!(csv, "{},{}", i + 1, size);
    }
    if entries.is_empty() {
        text.push_str("no minuscule weights\n");
    }
    let json = json!({
        "type": rs.family().letter().to_string(),
        "rank": rs.rank(),
        "minuscule": entries,
    });
    Ok(Output::json(json, text).with_csv(csv))
}

fn paths_enumerate(seq: &WeightSequence<'_>, cap: Option<usize>) -> CliResult<Output> {
    let paths = enumerate_paths_with(seq, cap.unwrap_or(DEFAULT_ENUMERATION_CAP), true)?;
    let json: Vec<PathJson> = paths.iter().map(|p| PathJson::encode(seq, p)).collect();
    let mut text = String::new();
    let mut csv = String::from("index,points\n");
    for (k, p) in paths.iter().enumerate() {
        let _ = writeln!(text, "{}", weights_text(p.points()));
        let _ = writeln!(csv, "{k},{}", coords_csv(p.points()));
    }
    Ok(Output::json(json!(json), text).with_csv(csv))
}

fn paths_orbits(seq: &WeightSequence<'_>, ell: usize) -> CliResult<Output> {
    let s = orbit_structure(seq, ell)?;
    let json = json!({
        "ell": s.ell,
        "r": s.r,
        "paths": s.paths.iter().map(|p| PathJson::encode(seq, p)).collect::<Vec<_>>(),
        "orbits": s.orbits,
        "fixed_counts": s.fixed_counts,
    });
    let mut text = format!("{} paths, {} orbits under R^{}\n", s.paths.len(), s.orbits.len(), s.ell);
    let mut csv = String::from("orbit,size,members\n");
    for (k, orbit) in s.orbits.iter().enumerate() {
        let members: Vec<String> = orbit.iter().map(usize::to_string).collect();
        let _ = writeln!(text, "orbit {k} (size {}): {}", orbit.len(), members.join(" "));
        let _ = writeln!(csv, "{k},{},{}", orbit.len(), members.join(" "));
    }
    let _ = writeln!(text, "fixed counts: {:?}", s.fixed_counts);
    Ok(Output::json(json, text).with_csv(csv))
}

fn crystal_invariants(seq: &WeightSequence<'_>, cap: Option<usize>) -> CliResult<Output> {
    let crystal = TensorCrystal::new(seq.root_system());
    let elements = crystal.invariant_elements_with_cap(seq, cap.unwrap_or(DEFAULT_ELEMENT_CAP))?;
    let json: Vec<ElementJson> = elements.iter().map(ElementJson::encode).collect();
    let mut text = String::new();
    let mut csv = String::from("index,factors\n");
    for (k, b) in elements.iter().enumerate() {
        let _ = writeln!(text, "{}", weights_text(b.factors()));
        let _ = writeln!(csv, "{k},{}", coords_csv(b.factors()));
    }
    Ok(Output::json(json!(json), text).with_csv(csv))
}

fn kostka(args: &KostkaArgs, cap: Option<usize>) -> CliResult<Output> {
    let shape = Partition::new(args.shape.clone())?;
    let k = if args.oracle {
        q_kostant_with_cap(&shape, &args.content, cap.unwrap_or(DEFAULT_ORACLE_CAP))?
    } else {
        kostka_foulkes(&shape, &args.content)?
    };
    let mut csv = String::from("degree,coefficient\n");
    for (d, c) in k.coeffs().iter().enumerate().filter(|(_, &c)| c != 0) {
        let _ = writeln!(csv, "{d},{c}");
    }
    Ok(Output {
        json: json!(polynomial_json(&k)),
        text: format!("{k}\n"),
        csv: Some(csv),
        default: Format::Text,
        failed: false,
    })
}

fn csp_output(report: &CspReport) -> Output {
    let mut text = format!(
        "r = {}, ell = {}\npolynomial: {}\n",
        report.r, report.ell, report.polynomial
    );
    let mut csv = String::from("d,fixed_count,evaluation_ok\n");
    for (d, (n, ok)) in report.fixed_counts.iter().zip(&report.evaluations_ok).enumerate() {
        let _ = writeln!(text, "d = {d}: fixed {n}, {}", if *ok { "ok" } else { "MISMATCH" });
        let _ = writeln!(csv, "{d},{n},{ok}");
    }
    let pass = report.verdict == Verdict::Pass;
    let _ = writeln!(text, "sign diagnostic: {}", report.sign_diagnostic);
    let _ = writeln!(text, "verdict: {}", if pass { "pass" } else { "fail" });
    Output {
        json: serde_json::to_value(CspReportJson::from(report)).expect("report serializes"),
        text,
        csv: Some(csv),
        default: Format::Json,
        failed: !pass,
    }
}
