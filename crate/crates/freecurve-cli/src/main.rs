//! Command-line front end: ingest arrangement/curve files, run the exact
//! analyses, and emit human- or machine-readable reports.
//!
//! Exit codes: 0 success, 2 parse error, 3 unsupported field tower,
//! 4 non-reduced input, 5 degenerate catalog parameters, 1 anything else.

mod input;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use freecurve::arrangements::{Arrangement, ArrangeError, PointMode, ZieglerVariant};
use freecurve::catalog::{self, CatalogError};
use freecurve::localsing::SingTypeLabel;
use freecurve::syzygy::{CurveAnalysis, CurveJacobian, SyzygyError};
use input::{parse_input, render_arrangement, InputSpec, ParsedFile};
use report::{AnalysisReport, ZieglerReport};
use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "freecurve",
    about = "Exact freeness and syzygy analysis of reduced plane curves",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Suppress the timing field for byte-for-byte deterministic output.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Record conjugate point pairs in aggregate instead of requiring every
    /// singular point to split over the field.
    #[arg(long, global = true)]
    aggregate_points: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a curve or arrangement file.
    Analyze { path: String },
    /// Compare two arrangement files as a (weak) Ziegler pair candidate.
    Ziegler {
        path_a: String,
        path_b: String,
        #[arg(long, value_enum)]
        variant: Variant,
    },
    /// List or generate catalog arrangements.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// Isomorphic intersection lattices, different mdr.
    LatticeMdr,
    /// Isomorphic intersection lattices, different AR degree data.
    LatticeAr,
    /// Equal weak-combinatorics, different mdr.
    WeakMdr,
    /// Equal weak-combinatorics, different AR degree data.
    WeakAr,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the built-in arrangements.
    List,
    /// Generate a catalog arrangement in the input format.
    Gen {
        name: String,
        /// Generic parameter assignment, repeatable: --param s=5
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        /// Shorthand for --param s=...
        #[arg(long)]
        s: Option<String>,
        /// Shorthand for --param t=...
        #[arg(long)]
        t: Option<String>,
        /// Shorthand for --param n=...
        #[arg(long)]
        n: Option<String>,
        /// Field declaration, e.g. "a: a^2 - 5".
        #[arg(long)]
        field: Option<String>,
        /// Output path (stdout when omitted).
        #[arg(short, long)]
        output: Option<String>,
    },
}

struct CliError {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> CliError {
    CliError {
        code,
        message: message.into(),
    }
}

fn arrange_error_code(e: &ArrangeError) -> u8 {
    match e {
        ArrangeError::FieldTowerUnsupported(_) | ArrangeError::UnsupportedPair(_) => 3,
        ArrangeError::DuplicateComponents(_, _) | ArrangeError::InvalidComponent(_) => 4,
        ArrangeError::Local(freecurve::localsing::LocalError::FieldTooSmall) => 3,
        ArrangeError::Syzygy(SyzygyError::NotReduced) => 4,
        _ => 1,
    }
}

fn catalog_error_code(e: &CatalogError) -> u8 {
    match e {
        CatalogError::DegeneratePoint(_)
        | CatalogError::ConstraintViolated(_)
        | CatalogError::DuplicateLines => 5,
        CatalogError::Arrange(a) => arrange_error_code(a),
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Analyze { path } => cmd_analyze(cli, path),
        Command::Ziegler {
            path_a,
            path_b,
            variant,
        } => cmd_ziegler(cli, path_a, path_b, *variant),
        Command::Catalog { command } => match command {
            CatalogCommand::List => cmd_catalog_list(cli),
            CatalogCommand::Gen {
                name,
                params,
                s,
                t,
                n,
                field,
                output,
            } => cmd_catalog_gen(cli, name, params, s, t, n, field, output),
        },
    }
}

fn point_mode(cli: &Cli) -> PointMode {
    if cli.aggregate_points {
        PointMode::Aggregate
    } else {
        PointMode::Exact
    }
}

fn load(path: &str) -> Result<InputSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(1, format!("cannot read {}: {}", path, e)))?;
    match parse_input(&text) {
        ParsedFile::Ok(spec) => Ok(spec),
        ParsedFile::ParseError(e) => Err(fail(2, format!("{}: {}", path, e))),
        ParsedFile::InvalidArrangement(e) => {
            Err(fail(arrange_error_code(&e), format!("{}: {}", path, e)))
        }
    }
}

fn classify_spec(spec: &InputSpec) -> Result<CurveAnalysis, CliError> {
    let f = match spec {
        InputSpec::Arrangement(a) => a.product(),
        InputSpec::RawCurve(p) => p.clone(),
    };
    if f.is_zero() || f.degree() == 0 {
        return Err(fail(2, "input does not define a plane curve (degree 0)"));
    }
    let jac = CurveJacobian::new(&f).map_err(|e| match e {
        SyzygyError::NotReduced => fail(4, "input curve is not reduced"),
        other => fail(1, other.to_string()),
    })?;
    jac.classify().map_err(|e| fail(1, e.to_string()))
}

fn analyze_to_report(
    cli: &Cli,
    spec: &InputSpec,
    label: String,
) -> Result<AnalysisReport, CliError> {
    let analysis = classify_spec(spec)?;
    let mut extra_warnings = Vec::new();
    let (field_desc, wc) = match spec {
        InputSpec::Arrangement(a) => {
            let wc = a
                .weak_combinatorics(point_mode(cli))
                .map_err(|e| fail(arrange_error_code(&e), e.to_string()))?;
            for sing in wc.sing_counts.keys() {
                if let SingTypeLabel::Other { .. } = sing {
                    extra_warnings.push(format!(
                        "singularity outside the normal-form table counted by its invariants: {}",
                        sing
                    ));
                }
            }
            let locus = a
                .singular_points(point_mode(cli))
                .map_err(|e| fail(arrange_error_code(&e), e.to_string()))?;
            if locus.field.degree() > a.field().degree() {
                extra_warnings.push(format!(
                    "singular points live in the extension {}",
                    locus.field.describe()
                ));
            }
            let pairs = locus.records.iter().filter(|r| r.point_count == 2).count();
            if pairs > 0 {
                extra_warnings.push(format!(
                    "{} conjugate point pair(s) recorded in aggregate",
                    pairs
                ));
            }
            (a.field().describe(), Some(wc))
        }
        InputSpec::RawCurve(p) => (p.field().describe(), None),
    };
    Ok(AnalysisReport::new(
        label,
        field_desc,
        &analysis,
        wc.as_ref(),
        extra_warnings,
        None,
    ))
}

fn cmd_analyze(cli: &Cli, path: &str) -> Result<(), CliError> {
    let start = Instant::now();
    let spec = load(path)?;
    let mut rep = analyze_to_report(cli, &spec, path.to_string())?;
    rep.timing_ms = (!cli.no_timing).then(|| start.elapsed().as_millis());
    emit(cli, &rep, AnalysisReport::to_text)
}

fn cmd_ziegler(cli: &Cli, path_a: &str, path_b: &str, variant: Variant) -> Result<(), CliError> {
    let start = Instant::now();
    let spec_a = load(path_a)?;
    let spec_b = load(path_b)?;
    let (InputSpec::Arrangement(a), InputSpec::Arrangement(b)) = (&spec_a, &spec_b) else {
        return Err(fail(1, "ziegler comparison requires arrangement files"));
    };
    let verdict = match variant {
        Variant::LatticeMdr => freecurve::arrangements::ziegler_pair(a, b, ZieglerVariant::Mdr),
        Variant::LatticeAr => freecurve::arrangements::ziegler_pair(a, b, ZieglerVariant::ArModule),
        Variant::WeakMdr => freecurve::arrangements::weak_ziegler_pair(a, b, ZieglerVariant::Mdr),
        Variant::WeakAr => {
            freecurve::arrangements::weak_ziegler_pair(a, b, ZieglerVariant::ArModule)
        }
    }
    .map_err(|e| fail(arrange_error_code(&e), e.to_string()))?;
    let left = analyze_to_report(cli, &spec_a, path_a.to_string())?;
    let right = analyze_to_report(cli, &spec_b, path_b.to_string())?;
    let variant_name = match variant {
        Variant::LatticeMdr => "lattice-mdr",
        Variant::LatticeAr => "lattice-ar",
        Variant::WeakMdr => "weak-mdr",
        Variant::WeakAr => "weak-ar",
    };
    let rep = ZieglerReport::new(
        variant_name.to_string(),
        &verdict,
        left,
        right,
        (!cli.no_timing).then(|| start.elapsed().as_millis()),
    );
    emit(cli, &rep, ZieglerReport::to_text)
}

fn cmd_catalog_list(cli: &Cli) -> Result<(), CliError> {
    #[derive(serde::Serialize)]
    struct Entry {
        name: &'static str,
        summary: &'static str,
        parameters: &'static str,
    }
    let entries: Vec<Entry> = catalog::entries()
        .into_iter()
        .map(|e| Entry {
            name: e.name,
            summary: e.summary,
            parameters: e.parameters,
        })
        .collect();
    match cli.format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&entries).unwrap());
        }
        Format::Text => {
            for e in &entries {
                if e.parameters.is_empty() {
                    println!("{:36} {}", e.name, e.summary);
                } else {
                    println!("{:36} {} [params: {}]", e.name, e.summary, e.parameters);
                }
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_catalog_gen(
    cli: &Cli,
    name: &str,
    params: &[String],
    s: &Option<String>,
    t: &Option<String>,
    n: &Option<String>,
    field: &Option<String>,
    output: &Option<String>,
) -> Result<(), CliError> {
    let mut map: BTreeMap<String, String> = BTreeMap::new();
    for p in params {
        let Some((k, v)) = p.split_once('=') else {
            return Err(fail(1, format!("malformed --param `{}`; expected k=v", p)));
        };
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    if let Some(v) = s {
        map.insert("s".into(), v.clone());
    }
    if let Some(v) = t {
        map.insert("t".into(), v.clone());
    }
    if let Some(v) = n {
        map.insert("n".into(), v.clone());
    }
    if let Some(v) = field {
        map.insert("field".into(), v.clone());
    }
    let arr: Arrangement = catalog::build(name, &map)
        .map_err(|e| fail(catalog_error_code(&e), e.to_string()))?;
    let text = render_arrangement(&arr);
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| fail(1, format!("cannot write {}: {}", path, e)))?,
        None => print!("{}", text),
    }
    let _ = cli;
    Ok(())
}

fn emit<R: serde::Serialize>(
    cli: &Cli,
    rep: &R,
    to_text: impl Fn(&R) -> String,
) -> Result<(), CliError> {
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(rep).unwrap()),
        Format::Text => print!("{}", to_text(rep)),
    }
    Ok(())
}
