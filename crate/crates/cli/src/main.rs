use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use restriction::charpoly::{e_poly, h_poly, CharPoly, Shape};
use restriction::report::{self, Method, Rep, ReportRow, Target};
use restriction::verify::{self, Fault, Level};
use restriction::{Error, Partition};

const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "restrict",
    version,
    about = "Multiplicities of the trivial and sign representations of S_n in Weyl modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of a representation in W_λ(C^n) restricted to S_n
    Restrict(RestrictArgs),
    /// Print a character polynomial in the binomial basis
    Charpoly(CharpolyArgs),
    /// Tabulate multiplicities over a parameter range
    Table(TableArgs),
    /// Run the cross-verification suites
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    TwoColumn,
    Hook,
    H,
    E,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFamily {
    TwoColumn,
    Hook,
}

#[derive(Clone, Copy, ValueEnum)]
enum RepArg {
    Trivial,
    Sign,
}

impl From<RepArg> for Rep {
    fn from(r: RepArg) -> Rep {
        match r {
            RepArg::Trivial => Rep::Trivial,
            RepArg::Sign => Rep::Sign,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Formula,
    Moment,
    Series,
    Oracle,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Height of the first column (two-column) or degree (h)
    #[arg(long)]
    k: Option<u32>,
    /// Height of the second column (two-column) or degree (e)
    #[arg(long)]
    l: Option<u32>,
    /// Arm length of the hook (a+1, 1^b)
    #[arg(long)]
    a: Option<u32>,
    /// Leg length of the hook (a+1, 1^b)
    #[arg(long)]
    b: Option<u32>,
}

#[derive(Args)]
struct RestrictArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Any partition, e.g. 4,1,1 (oracle only)
    #[arg(long, conflicts_with = "family")]
    lambda: Option<String>,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "sign")]
    rep: RepArg,
    /// Defaults to the first available of formula, moment, oracle
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Compute by every available method and fail with exit 3 on disagreement
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CharpolyArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: TableFamily,
    #[arg(long, default_value_t = 4)]
    a_max: u32,
    #[arg(long, default_value_t = 2)]
    b_max: u32,
    #[arg(long, default_value_t = 6)]
    n_max: u32,
    #[arg(long, value_enum, default_value = "sign")]
    rep: RepArg,
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "quick")]
    level: LevelArg,
    /// Perturb one counting formula to test the suites
    #[arg(long, hide = true)]
    inject_fault: Option<String>,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inconsistent(_) => EXIT_VERIFY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Restrict(args) => restrict(args),
        Command::Charpoly(args) => charpoly(args),
        Command::Table(args) => table(args),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn need(value: Option<u32>, flag: &str, family: &str) -> Result<u32, Failure> {
    value.ok_or_else(|| usage(format!("--family {family} needs --{flag}")))
}

fn shape_of(args: &ShapeArgs) -> Result<Shape, Failure> {
    match args.family {
        Some(Family::TwoColumn) => Ok(Shape::TwoColumn {
            k: need(args.k, "k", "two-column")?,
            l: need(args.l, "l", "two-column")?,
        }),
        Some(Family::Hook) => Ok(Shape::Hook {
            a: need(args.a, "a", "hook")?,
            b: need(args.b, "b", "hook")?,
        }),
        Some(Family::H | Family::E) => {
            Err(usage("families h and e are only available to charpoly"))
        }
        None => Err(usage("give --family or --lambda")),
    }
}

fn open_output(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    match out {
        Some(path) => File::create(path)
            .map(|f| Box::new(f) as Box<dyn Write>)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => Ok(Box::new(io::stdout().lock())),
    }
}

fn io_failure(e: io::Error) -> Failure {
    usage(format!("write failed: {e}"))
}

fn emit_rows(rows: &[ReportRow], format: Format, out: &Option<PathBuf>) -> Result<(), Failure> {
    let mut w = open_output(out)?;
    match format {
        Format::Csv => report::write_csv(rows, &mut w).map_err(io_failure)?,
        Format::Json => writeln!(w, "{}", report::to_json(rows)).map_err(io_failure)?,
        Format::Text => {
            for r in rows {
                writeln!(
                    w,
                    "{:<10} {:<12} n={:<3} {:<7} {:<8} {}",
                    r.family, r.params, r.n, r.rep, r.method, r.multiplicity
                )
                .map_err(io_failure)?;
            }
        }
    }
    w.flush().map_err(io_failure)
}

fn single_method(m: MethodArg) -> Option<Method> {
    match m {
        MethodArg::Formula => Some(Method::Formula),
        MethodArg::Moment => Some(Method::Moment),
        MethodArg::Series => Some(Method::Series),
        MethodArg::Oracle => Some(Method::Oracle),
        MethodArg::All => None,
    }
}

fn restrict(args: RestrictArgs) -> Result<(), Failure> {
    let target = match &args.lambda {
        Some(text) => Target::Lambda(text.parse::<Partition>()?),
        None => Target::Shape(shape_of(&args.shape)?),
    };
    let rep = Rep::from(args.rep);
    let rows = if args.check {
        let rows = report::compute_checked(&target, args.n, rep)?;
        match args.method.and_then(single_method) {
            Some(m) => rows.into_iter().filter(|r| r.method == m).collect(),
            None if args.method == Some(MethodArg::All) => rows,
            None => rows.into_iter().take(1).collect(),
        }
    } else {
        match args.method {
            Some(MethodArg::All) => report::compute_all(&target, args.n, rep)?,
            other => {
                let m = other
                    .and_then(single_method)
                    .unwrap_or_else(|| target.default_method(rep));
                let v = report::compute(&target, args.n, rep, m)?;
                vec![ReportRow::new(&target, args.n, rep, m, v)]
            }
        }
    };
    if args.format == Format::Text && rows.len() == 1 {
        let mut w = open_output(&args.out)?;
        writeln!(w, "{}", rows[0].multiplicity).map_err(io_failure)?;
        return w.flush().map_err(io_failure);
    }
    emit_rows(&rows, args.format, &args.out)
}

fn charpoly(args: CharpolyArgs) -> Result<(), Failure> {
    let s = &args.shape;
    let (family, params, poly): (&str, String, CharPoly) = match s.family {
        Some(Family::H) => {
            let k = need(s.k, "k", "h")?;
            ("h", format!("k={k}"), h_poly(k as i64))
        }
        Some(Family::E) => {
            let l = need(s.l, "l", "e")?;
            ("e", format!("l={l}"), e_poly(l as i64))
        }
        _ => {
            let shape = shape_of(s)?;
            let t = Target::Shape(shape);
            (t.family(), t.params(), shape.char_poly()?)
        }
    };
    let mut w = open_output(&args.out)?;
    match args.format {
        Format::Json => {
            let value = serde_json::json!({
                "family": family,
                "params": params,
                "polynomial": poly.to_string(),
            });
            writeln!(w, "{value}").map_err(io_failure)?;
        }
        Format::Csv => return Err(usage("charpoly prints text or json")),
        Format::Text => writeln!(w, "{poly}").map_err(io_failure)?,
    }
    w.flush().map_err(io_failure)
}

fn table(args: TableArgs) -> Result<(), Failure> {
    let family = match args.family {
        TableFamily::TwoColumn => "two-column",
        TableFamily::Hook => "hook",
    };
    let rep = Rep::from(args.rep);
    let mut rows = Vec::new();
    for (target, n) in report::table_targets(family, args.a_max, args.b_max, args.n_max)? {
        match args.method {
            Some(MethodArg::All) => rows.extend(report::compute_all(&target, n, rep)?),
            other => {
                let m = other
                    .and_then(single_method)
                    .unwrap_or_else(|| target.default_method(rep));
                let v = report::compute(&target, n, rep, m)?;
                rows.push(ReportRow::new(&target, n, rep, m, v));
            }
        }
    }
    emit_rows(&rows, args.format, &args.out)
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    let level = match args.level {
        LevelArg::Quick => Level::Quick,
        LevelArg::Full => Level::Full,
    };
    let fault = args
        .inject_fault
        .as_deref()
        .map(str::parse::<Fault>)
        .transpose()?;
    let start = Instant::now();
    let reports = verify::run_all(level, fault);
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let checks: u64 = reports.iter().map(|r| r.checks).sum();
    println!(
        "{} of {} suites passed, {checks} checks in {:.1}s",
        reports.len() - failed,
        reports.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        return Err(Failure {
            code: EXIT_VERIFY,
            message: format!("{failed} suite(s) failed"),
        });
    }
    Ok(())
}
