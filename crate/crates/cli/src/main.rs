use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use wronski_core::conjectures::{
    check_coeff_symmetry, check_face_structure, check_homogenization_symmetry, check_shift_symmetry, check_support,
    conjecture4_scan, default_lambda_grid, real_root_census, singular_probe,
};
use wronski_core::exactalg::{poly_to_json, rat};
use wronski_core::inflection::{
    calibrate_recurrence, general_inflection, predicted_delta, predicted_genus, probe_lemma_hypothesis, torsion_check,
};
use wronski_core::render::{render_curve, Window, DEFAULT_RESOLUTION};
use wronski_core::{parse_rational, CheckReport, Error, Rational, Verdict};

/// Relative `--out` paths are resolved against this directory when set.
const OUT_DIR_ENV: &str = "WRONSKI_OUT_DIR";

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(name = "wronski", version, about = "Inflection polynomials of linear series on Legendre elliptic curves")]
struct Cli {
    /// Re-run the recurrence coefficient calibration against the derivative oracle.
    #[arg(long, hide = true, global = true)]
    coefficient_check: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Print P(mu, k) as canonical JSON or as text.
    Compute {
        #[arg(long)]
        mu: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a named check and print one report per line.
    Verify(VerifyArgs),
    /// Real roots of P(mu, k)(x, lambda) and the sign of f at each.
    Roots {
        #[arg(long)]
        mu: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        lambda: Rational,
    },
    /// Count real roots with f > 0 across a lambda grid.
    Scan {
        #[arg(long)]
        mu: u32,
        #[arg(long)]
        k: u32,
        /// Comma-separated rationals, e.g. "-2,-1/2,1/3,3".
        #[arg(long, value_parser = grid_arg, allow_hyphen_values = true)]
        lambda_grid: Option<LambdaGrid>,
    },
    /// Write an SVG of P(mu, k) = 0 with the region f > 0 shaded.
    Plot(PlotArgs),
    /// Print the predicted delta-invariant and genus.
    Genus {
        #[arg(long)]
        k: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Symmetry,
    Support,
    Faces,
    Lemma1,
    Torsion,
    Singular,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    /// Single parameter value.
    #[arg(long, conflicts_with = "k_max")]
    k: Option<u32>,
    /// Sweep k from the smallest meaningful value up to this bound.
    #[arg(long)]
    k_max: Option<u32>,
    /// Only for lemma1.
    #[arg(long)]
    mu: Option<u32>,
    /// Only for torsion; repeatable.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    lambda: Vec<Rational>,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long)]
    mu: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "-1")]
    x_min: Rational,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "3")]
    x_max: Rational,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "-1")]
    lambda_min: Rational,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "3")]
    lambda_max: Rational,
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    nx: u32,
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    nl: u32,
}

#[derive(Clone)]
struct LambdaGrid(Vec<Rational>);

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn grid_arg(s: &str) -> Result<LambdaGrid, String> {
    s.split(',').map(|t| rational_arg(t.trim())).collect::<Result<Vec<_>, _>>().map(LambdaGrid)
}

fn default_torsion_lambdas() -> Vec<Rational> {
    vec![rat(-1, 1), rat(-1, 2), rat(1, 3), rat(2, 1), rat(5, 1)]
}

enum Failure {
    Usage(String),
    Precondition(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(m) => Failure::Io(m),
            Error::Window(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
            other => Failure::Precondition(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn emit(out: &mut impl Write, line: &str) -> io::Result<()> {
    writeln!(out, "{line}")
}

/// Prints every report and maps the verdicts to an exit status.
fn emit_reports(out: &mut impl Write, reports: &[CheckReport]) -> Outcome {
    for r in reports {
        emit(out, &r.to_json())?;
    }
    let failed = reports.iter().filter(|r| r.verdict == Verdict::Fail).count();
    let unresolved = reports.iter().filter(|r| r.verdict == Verdict::Unresolved).count();
    if unresolved > 0 {
        eprintln!("warning: {unresolved} report(s) UNRESOLVED");
    }
    Ok(if failed > 0 { EXIT_FAIL } else { 0 })
}

fn k_range(args: &VerifyArgs, first: u32, default_max: u32) -> Vec<u32> {
    match (args.k, args.k_max) {
        (Some(k), _) => vec![k],
        (None, Some(m)) => (first..=m).collect(),
        (None, None) => (first..=default_max).collect(),
    }
}

fn verify(args: &VerifyArgs, out: &mut impl Write) -> Outcome {
    let mut reports = Vec::new();
    match args.check {
        Check::Symmetry => {
            for k in k_range(args, 1, 8) {
                reports.push(check_homogenization_symmetry(k)?);
                reports.push(check_shift_symmetry(k)?);
            }
        }
        Check::Support => {
            for k in k_range(args, 1, 8) {
                reports.push(check_support(k)?);
                reports.push(check_coeff_symmetry(k)?);
            }
        }
        Check::Faces => {
            for k in k_range(args, 2, 6) {
                reports.push(check_face_structure(k)?);
            }
        }
        Check::Lemma1 => {
            let pairs = match (args.mu, args.k) {
                (Some(mu), Some(k)) => vec![(mu, k)],
                (None, None) if args.k_max.is_none() => vec![(2, 3), (2, 4), (3, 4), (2, 5), (2, 2)],
                _ => return Err(Failure::Usage("lemma1 takes both --mu and --k, or neither".into())),
            };
            for (mu, k) in pairs {
                reports.push(probe_lemma_hypothesis(mu, k)?);
            }
        }
        Check::Torsion => {
            let lambdas = if args.lambda.is_empty() { default_torsion_lambdas() } else { args.lambda.clone() };
            for k in k_range(args, 2, 3) {
                for l in &lambdas {
                    reports.push(torsion_check(k, l)?);
                }
            }
        }
        Check::Singular => {
            for k in k_range(args, 2, 3) {
                reports.push(singular_probe(k)?);
            }
        }
    }
    emit_reports(out, &reports)
}

fn resolve_out(path: PathBuf) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path,
    }
}

fn plot(args: &PlotArgs) -> Outcome {
    let w = Window::new(
        args.x_min.clone(),
        args.x_max.clone(),
        args.lambda_min.clone(),
        args.lambda_max.clone(),
        args.nx,
        args.nl,
    )
    .map_err(|e| Failure::Usage(e.to_string()))?;
    let p = general_inflection(args.mu, args.k)?;
    let doc = render_curve(&p.poly, &w, &format!("C({},{})", args.mu, args.k))?;
    let path = resolve_out(args.out.clone());
    let mut f = BufWriter::new(File::create(&path)?);
    f.write_all(doc.as_bytes())?;
    f.flush()?;
    Ok(0)
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    if cli.coefficient_check {
        let c = calibrate_recurrence(4);
        emit(out, &serde_json::to_string(&c).expect("calibration serializes"))?;
        if cli.command.is_none() {
            return Ok(if c.matching.is_empty() { EXIT_FAIL } else { 0 });
        }
    }
    let Some(command) = cli.command else {
        return Err(Failure::Usage("a subcommand is required (see --help)".into()));
    };
    match command {
        Command::Compute { mu, k, format } => {
            let p = general_inflection(mu, k)?;
            match format {
                Format::Json => emit(out, &poly_to_json(&p.poly))?,
                Format::Text => emit(out, &p.poly.to_string())?,
            }
            Ok(0)
        }
        Command::Verify(args) => verify(&args, out),
        Command::Roots { mu, k, lambda } => {
            let c = real_root_census(mu, k, &lambda)?;
            emit(out, &serde_json::to_string(&c).expect("census serializes"))?;
            Ok(0)
        }
        Command::Scan { mu, k, lambda_grid } => {
            let grid = lambda_grid.map(|g| g.0).unwrap_or_else(default_lambda_grid);
            let r = conjecture4_scan(mu, k, &grid)?;
            if let Some(skipped) = r.data["skipped"].as_array().filter(|s| !s.is_empty()) {
                eprintln!("warning: skipped degenerate lambda values {}", json!(skipped));
            }
            emit_reports(out, &[r])
        }
        Command::Plot(args) => plot(&args),
        Command::Genus { k } => {
            if k == 0 {
                return Err(Failure::Precondition("genus needs k >= 1".into()));
            }
            let g = predicted_genus(k);
            emit(out, &format!("delta={} genus={}", predicted_delta(k), g))?;
            if g < 0 {
                eprintln!("note: the genus formula is negative at k={k}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|code| out.flush().map(|_| code).map_err(Failure::from));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Precondition(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_PRECONDITION)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_IO)
        }
    }
}
