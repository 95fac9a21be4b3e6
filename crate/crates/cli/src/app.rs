use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use greylp::{
    bounds, build_positioned, check_monotonicity, find_satisfactory, grid_sweep, is_lambda_satisfactory, is_pleased,
    lambda_satisfaction, lambda_sweep, pleased_degree, render_table, solve_max, Axis, GreyLP, LpStatus,
    PositionCoefficients, RenderOptions, TableFormat, TableLayout, Trend, UniformTriple,
};
use thiserror::Error;

use crate::problem_file::{load_problem, ProblemFileError};
use crate::reference::verify_example;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_SOLVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Problem(#[from] ProblemFileError),
    #[error("{0}")]
    Solve(String),
    #[error("{0}")]
    Invalid(String),
    #[error("output error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Problem(_) | CliError::Invalid(_) | CliError::Io(_) => EXIT_INVALID,
            CliError::Solve(_) => EXIT_SOLVE,
        }
    }
}

impl From<greylp::Error> for CliError {
    fn from(e: greylp::Error) -> Self {
        use greylp::Error as E;
        match e {
            E::Domain { .. } => CliError::Usage(e.to_string()),
            E::InvalidProblem(_) | E::Structural(_) => CliError::Invalid(e.to_string()),
            E::IterationLimit { .. }
            | E::NonFinite
            | E::Unbounded
            | E::Infeasible
            | E::DivisionDomain(_)
            | E::Inconsistent { .. } => CliError::Solve(e.to_string()),
        }
    }
}

fn unit_interval(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("`{s}` is not a number"))?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is outside [0, 1]"))
    }
}

fn grid_step(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v > 0.0 && v <= 0.5 {
        Ok(v)
    } else {
        Err(format!("{v} is outside (0, 0.5]"))
    }
}

/// `a,b,g` or a single θ.
fn setting(s: &str) -> Result<UniformTriple, String> {
    let parts = s.split(',').map(unit_interval).collect::<Result<Vec<_>, _>>()?;
    match parts[..] {
        [t] => Ok(UniformTriple {
            alpha: t,
            beta: t,
            gamma: t,
        }),
        [alpha, beta, gamma] => Ok(UniformTriple { alpha, beta, gamma }),
        _ => Err(format!("`{s}` is neither `theta` nor `alpha,beta,gamma`")),
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "greylp",
    version,
    about = "Linear programming with grey (interval) parameters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a problem file and list every violation.
    Validate(FileArg),
    /// Solve one positioned program.
    Solve(SolveArgs),
    /// Critical and ideal optimal values.
    Bounds(BoundsArgs),
    /// Pleased degree and λ-satisfaction degrees of one positioned optimum.
    Degrees(DegreesArgs),
    /// Tabulate f, mu and mu~ over a grid or a list of settings.
    Sweep(SweepArgs),
    /// Check that f rises with alpha and beta and falls with gamma.
    Monotonicity(MonotonicityArgs),
    /// List grid settings whose λ-satisfaction degree reaches mu0.
    Satisfactory(SatisfactoryArgs),
    /// Recompute the bundled example's reference tables.
    VerifyExample(VerifyArgs),
}

#[derive(Args, Debug)]
struct FileArg {
    #[arg(long)]
    file: PathBuf,
}

#[derive(Args, Debug)]
struct Coefficients {
    #[arg(long, value_parser = unit_interval)]
    alpha: Option<f64>,
    #[arg(long, value_parser = unit_interval)]
    beta: Option<f64>,
    #[arg(long, value_parser = unit_interval)]
    gamma: Option<f64>,
    /// Shared value for alpha, beta and gamma.
    #[arg(long, value_parser = unit_interval, conflicts_with_all = ["alpha", "beta", "gamma"])]
    theta: Option<f64>,
}

impl Coefficients {
    fn triple(&self) -> Result<UniformTriple, CliError> {
        match (self.theta, self.alpha, self.beta, self.gamma) {
            (Some(t), ..) => Ok(UniformTriple {
                alpha: t,
                beta: t,
                gamma: t,
            }),
            (None, Some(alpha), Some(beta), Some(gamma)) => Ok(UniformTriple { alpha, beta, gamma }),
            _ => Err(CliError::Usage(
                "give --theta or all of --alpha, --beta, --gamma".into(),
            )),
        }
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    file: PathBuf,
    #[command(flatten)]
    coefficients: Coefficients,
    /// Print full precision instead of rounded values.
    #[arg(long)]
    precise: bool,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long)]
    precise: bool,
}

#[derive(Args, Debug)]
struct DegreesArgs {
    #[arg(long)]
    file: PathBuf,
    #[command(flatten)]
    coefficients: Coefficients,
    #[arg(long, value_parser = unit_interval, value_delimiter = ',', default_value = "0.5")]
    lambda: Vec<f64>,
    #[arg(long, value_parser = unit_interval, default_value_t = 0.5)]
    mu0: f64,
    #[arg(long)]
    precise: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Markdown,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LayoutArg {
    /// One row per setting.
    Records,
    /// One row per lambda.
    Lambda,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    file: PathBuf,
    /// Grid spacing for alpha, beta and gamma.
    #[arg(long, value_parser = grid_step, default_value_t = greylp::analysis::DEFAULT_STEP)]
    step: f64,
    /// Explicit settings instead of a grid, e.g. `0.6;0.7,0.9,0.5`.
    #[arg(long, value_parser = setting, value_delimiter = ';')]
    settings: Option<Vec<UniformTriple>>,
    #[arg(long, value_parser = unit_interval, value_delimiter = ',', default_value = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1")]
    lambdas: Vec<f64>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    #[arg(long, value_enum, default_value = "records")]
    layout: LayoutArg,
    /// Write the table here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    precise: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AxisArg {
    Alpha,
    Beta,
    Gamma,
    All,
}

#[derive(Args, Debug)]
struct MonotonicityArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long, value_enum, default_value = "all")]
    axis: AxisArg,
    #[arg(long, value_parser = grid_step, default_value_t = greylp::analysis::DEFAULT_STEP)]
    step: f64,
}

#[derive(Args, Debug)]
struct SatisfactoryArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long, value_parser = unit_interval)]
    mu0: f64,
    #[arg(long, value_parser = unit_interval)]
    lambda: f64,
    #[arg(long, value_parser = grid_step, default_value_t = greylp::analysis::DEFAULT_STEP)]
    step: f64,
    #[arg(long)]
    precise: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Print every cell, not just the failures.
    #[arg(long)]
    verbose: bool,
}

struct Fmt {
    precise: bool,
}

impl Fmt {
    fn value(&self, v: f64) -> String {
        if self.precise {
            format!("{v}")
        } else {
            format!("{v:.2}")
        }
    }

    fn degree(&self, v: f64) -> String {
        if self.precise {
            format!("{v}")
        } else {
            format!("{v:.4}")
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn load(path: &Path) -> Result<GreyLP, CliError> {
    Ok(load_problem(path)?.problem)
}

fn positioned(p: &GreyLP, t: UniformTriple) -> Result<(f64, Vec<f64>), CliError> {
    let k = PositionCoefficients::uniform(t.alpha, t.beta, t.gamma, p.m(), p.n())?;
    let solution = solve_max(&build_positioned(p, &k)?)?;
    match solution.status {
        LpStatus::Optimal => Ok((solution.value()?, solution.x)),
        LpStatus::Unbounded => Err(CliError::Solve(format!("positioned program {t} is unbounded"))),
        LpStatus::Infeasible => Err(CliError::Solve(format!("positioned program {t} is infeasible"))),
    }
}

fn validate(args: FileArg, out: &mut dyn Write) -> Result<(), CliError> {
    let file = load_problem(&args.file)?;
    let name = file.name.as_deref().unwrap_or("problem");
    writeln!(
        out,
        "{name}: valid ({} variables, {} constraints)",
        file.problem.n(),
        file.problem.m()
    )?;
    Ok(())
}

fn solve(args: SolveArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = load(&args.file)?;
    let t = args.coefficients.triple()?;
    let fmt = Fmt { precise: args.precise };
    let (f, x) = positioned(&p, t)?;
    let xs: Vec<String> = x.iter().map(|&v| fmt.value(v)).collect();
    writeln!(out, "setting = {t}")?;
    writeln!(out, "status = optimal")?;
    writeln!(out, "x = [{}]", xs.join(", "))?;
    writeln!(out, "f = {}", fmt.value(f))?;
    Ok(())
}

fn print_bounds(args: BoundsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = load(&args.file)?;
    let vb = bounds(&p)?;
    let fmt = Fmt { precise: args.precise };
    writeln!(out, "critical = {}", fmt.value(vb.critical))?;
    writeln!(out, "ideal = {}", fmt.value(vb.ideal))?;
    Ok(())
}

fn degrees(args: DegreesArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = load(&args.file)?;
    let t = args.coefficients.triple()?;
    let fmt = Fmt { precise: args.precise };
    let vb = bounds(&p)?;
    let (f, _) = positioned(&p, t)?;
    let mu = pleased_degree(f, vb)?;
    writeln!(out, "setting = {t}")?;
    writeln!(out, "f = {}", fmt.value(f))?;
    writeln!(out, "critical = {}", fmt.value(vb.critical))?;
    writeln!(out, "ideal = {}", fmt.value(vb.ideal))?;
    writeln!(
        out,
        "mu = {} (pleased at mu0={}: {})",
        fmt.degree(mu),
        args.mu0,
        yes_no(is_pleased(mu, args.mu0))
    )?;
    for lambda in args.lambda {
        let d = lambda_satisfaction(f, vb, lambda)?;
        let note = if d.effectively_white {
            ", effectively white problem"
        } else {
            ""
        };
        writeln!(
            out,
            "mu_tilde[lambda={lambda}] = {} (satisfactory at mu0={}: {}{note})",
            fmt.degree(d.value),
            args.mu0,
            yes_no(is_lambda_satisfactory(d.value, args.mu0))
        )?;
    }
    Ok(())
}

fn sweep(args: SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = load(&args.file)?;
    let table = match &args.settings {
        Some(settings) => lambda_sweep(&p, settings, &args.lambdas)?,
        None => grid_sweep(&p, args.step, &args.lambdas)?,
    };
    let opts = RenderOptions {
        format: match args.format {
            FormatArg::Csv => TableFormat::Csv,
            FormatArg::Markdown => TableFormat::Markdown,
        },
        layout: match args.layout {
            LayoutArg::Records => TableLayout::Records,
            LayoutArg::Lambda => TableLayout::LambdaMajor,
        },
        precise: args.precise,
    };
    let text = render_table(&table, &opts);
    match args.out {
        Some(path) => fs::write(&path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn trend(t: Trend) -> &'static str {
    match t {
        Trend::Nondecreasing => "nondecreasing",
        Trend::Nonincreasing => "nonincreasing",
    }
}

fn monotonicity(args: MonotonicityArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = load(&args.file)?;
    let axes = match args.axis {
        AxisArg::Alpha => vec![Axis::Alpha],
        AxisArg::Beta => vec![Axis::Beta],
        AxisArg::Gamma => vec![Axis::Gamma],
        AxisArg::All => Axis::ALL.to_vec(),
    };
    for axis in axes {
        let r = check_monotonicity(&p, axis, args.step)?;
        let observed = r.observed().map_or("mixed", trend);
        writeln!(
            out,
            "{axis}: expected {}, observed {observed}; {} probes, {} violations, {} skipped",
            trend(r.expected),
            r.grid.len(),
            r.violations.len(),
            r.skipped.len()
        )?;
        for v in &r.violations {
            writeln!(
                out,
                "  {} -> {}: f {} -> {}",
                v.probe.lower, v.probe.upper, v.f_lower, v.f_upper
            )?;
        }
        for probe in &r.skipped {
            writeln!(out, "  skipped {} -> {}: no finite optimum", probe.lower, probe.upper)?;
        }
    }
    Ok(())
}

fn satisfactory(args: SatisfactoryArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = load(&args.file)?;
    let hits = find_satisfactory(&p, args.mu0, args.lambda, args.step)?;
    let fmt = Fmt { precise: args.precise };
    writeln!(out, "alpha,beta,gamma,mu_tilde")?;
    for h in hits {
        let s = h.setting;
        writeln!(out, "{},{},{},{}", s.alpha, s.beta, s.gamma, fmt.degree(h.mu_tilde))?;
    }
    Ok(())
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let checks = verify_example();
    let mut failed = 0;
    for c in &checks {
        let ok = c.passed();
        if !ok {
            failed += 1;
        }
        if args.verbose || !ok {
            let actual = c.actual.map_or_else(|| "undefined".to_string(), |a| format!("{a:.6}"));
            writeln!(
                out,
                "{} {} = {actual} (expected {} +/- {})",
                if ok { "ok  " } else { "FAIL" },
                c.label,
                c.expected,
                c.tolerance
            )?;
        }
    }
    writeln!(out, "{} of {} cells match", checks.len() - failed, checks.len())?;
    if failed > 0 {
        return Err(CliError::Invalid(format!(
            "{failed} cells differ from the reference tables"
        )));
    }
    Ok(())
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };

    let result = match cli.command {
        Command::Validate(a) => validate(a, out),
        Command::Solve(a) => solve(a, out),
        Command::Bounds(a) => print_bounds(a, out),
        Command::Degrees(a) => degrees(a, out),
        Command::Sweep(a) => sweep(a, out),
        Command::Monotonicity(a) => monotonicity(a, out),
        Command::Satisfactory(a) => satisfactory(a, out),
        Command::VerifyExample(a) => verify(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
