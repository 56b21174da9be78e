//! `bispec`: pole tables, invariant suites and function tables for the
//! bisingular model operators.
//!
//! Exit codes: 0 success, 1 failed check, 2 usage or configuration error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bispec::meromorphic::{
    double_zeta, eta, laurent_at, poles_table_with, zeta, Chart, LaurentExpansion, SpectralFunction, Window,
};
use bispec::par::{requested_threads, THREADS_ENV};
use bispec::spectra::SpectralOperator;
use bispec::suites::{run_suite, SuiteConfig, SUITE_NAMES};
use bispec::{Error, C64};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "bispec", version, about = "Spectral zeta/eta functions and Wodzicki residues of bisingular model operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Function {
    Zeta,
    Eta,
    DoubleZeta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ChartArg {
    /// `Tr A^z`
    Az,
    /// `Tr A^-z`
    AMinusZ,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pole table of ζ or η inside a window.
    Poles {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, value_enum, default_value = "zeta")]
        function: Function,
        /// Chart of the ζ table; η is always tabulated in A^-z.
        #[arg(long, value_enum, default_value = "az")]
        chart: ChartArg,
        /// `re_min,re_max,im_min,im_max`
        #[arg(long, default_value = "-4,4,-0.5,0.5", allow_hyphen_values = true)]
        window: String,
        /// Threshold below which a Laurent coefficient counts as zero.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Trapezoidal nodes on each Laurent circle.
        #[arg(long, default_value_t = 128)]
        nodes: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one invariant suite; exits 1 if any check fails.
    Verify {
        #[arg(long)]
        suite: String,
        /// Overrides the per-check tolerances.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Base grid points per circle (power of two, at least 16).
        #[arg(long, default_value_t = 16)]
        grid: usize,
        /// Truncation depth of symbols and compositions, `N` or `N1,N2`.
        #[arg(long, default_value = "4,4")]
        depth: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV table of ζ, η or the double ζ at sample points.
    Table {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, value_enum)]
        function: Function,
        /// Comma-separated points such as `0,-2,0.5+1i`; may be empty.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        points: String,
        /// Second-variable points for the double ζ; defaults to the diagonal.
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
        #[arg(long)]
        q1: Option<PathBuf>,
        #[arg(long)]
        q2: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "az")]
        chart: ChartArg,
        #[arg(long, default_value_t = 128)]
        nodes: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Error tagged with the exit code it maps to.
enum Failure {
    Usage(String),
    Checks(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load_model(path: &Path) -> Result<SpectralOperator, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read model {}: {e}", path.display())))?;
    SpectralOperator::from_json(&text).map_err(|e| Failure::Usage(format!("invalid model {}: {e}", path.display())))
}

fn parse_window(s: &str) -> Result<Window, Failure> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Usage(format!("bad window {s:?}: {e}")))?;
    match v[..] {
        [a, b, c, d] => Ok(Window::new(a, b, c, d)?),
        _ => Err(Failure::Usage(format!("window needs four numbers, got {s:?}"))),
    }
}

fn parse_points(s: &str) -> Result<Vec<C64>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<C64>().map_err(|e| Failure::Usage(format!("bad point {x:?}: {e}"))))
        .collect()
}

fn parse_depth(s: &str) -> Result<(usize, usize), Failure> {
    let v: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Usage(format!("bad depth {s:?}: {e}")))?;
    match v[..] {
        [n] => Ok((n, n)),
        [n1, n2] => Ok((n1, n2)),
        _ => Err(Failure::Usage(format!("depth is N or N1,N2, got {s:?}"))),
    }
}

fn chart(c: ChartArg) -> Chart {
    match c {
        ChartArg::Az => Chart::Az,
        ChartArg::AMinusZ => Chart::AMinusZ,
    }
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, bytes).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_poles(
    model: &Path,
    function: Function,
    chart_arg: ChartArg,
    window: &str,
    tol: f64,
    nodes: usize,
    format: Format,
    out: Option<&Path>,
) -> Result<(), Failure> {
    if !(tol > 0.0) {
        return Err(Failure::Usage(format!("tolerance must be positive, got {tol}")));
    }
    let op = load_model(model)?;
    let function = match function {
        Function::Zeta => SpectralFunction::Zeta,
        Function::Eta => SpectralFunction::Eta,
        Function::DoubleZeta => return Err(Failure::Usage("poles supports zeta and eta".into())),
    };
    let report = poles_table_with(&op, function, chart(chart_arg), &parse_window(window)?, tol, nodes)?;
    let mut buf = Vec::new();
    match format {
        Format::Json => {
            buf.extend(report.to_json()?.as_bytes());
            buf.push(b'\n');
        }
        Format::Csv => report.write_csv(&mut buf)?,
    }
    emit(out, &buf)
}

fn cmd_verify(
    suite: &str,
    tol: Option<f64>,
    seed: u64,
    grid: usize,
    depth: &str,
    format: Format,
    out: Option<&Path>,
) -> Result<(), Failure> {
    if !SUITE_NAMES.contains(&suite) {
        return Err(Failure::Usage(format!("unknown suite {suite:?}; expected one of {}", SUITE_NAMES.join(", "))));
    }
    if let Some(t) = tol {
        if !(t > 0.0) {
            return Err(Failure::Usage(format!("tolerance must be positive, got {t}")));
        }
    }
    let cfg = SuiteConfig {
        seed,
        tol,
        grid,
        depth: parse_depth(depth)?,
        ..SuiteConfig::default()
    };
    let report = run_suite(suite, &cfg)?;
    let mut buf = Vec::new();
    match format {
        Format::Json => {
            buf.extend(serde_json::to_string_pretty(&report).map_err(Error::from)?.as_bytes());
            buf.push(b'\n');
        }
        Format::Csv => {
            writeln!(buf, "check,re_lhs,im_lhs,re_rhs,im_rhs,tolerance,pass")?;
            for c in &report.checks {
                writeln!(
                    buf,
                    "\"{}\",{},{},{},{},{},{}",
                    c.check.replace('"', "'"),
                    c.lhs.re,
                    c.lhs.im,
                    c.rhs.re,
                    c.rhs.im,
                    c.tolerance,
                    c.pass
                )?;
            }
        }
    }
    emit(out, &buf)?;
    if report.pass {
        Ok(())
    } else {
        let failed: Vec<&str> = report.failures().map(|c| c.check.as_str()).collect();
        Err(Failure::Checks(format!("suite {suite}: {} check(s) failed: {}", failed.len(), failed.join("; "))))
    }
}

enum Cell {
    Value(C64),
    Pole(Box<LaurentExpansion>),
}

fn classify(r: Result<C64, Error>, fallback: impl FnOnce() -> Result<LaurentExpansion, Error>) -> Result<Cell, Error> {
    match r {
        Ok(v) => Ok(Cell::Value(v)),
        Err(Error::Pole { laurent, .. }) => Ok(Cell::Pole(laurent)),
        Err(Error::HurwitzPole) => Ok(Cell::Pole(Box::new(fallback()?))),
        Err(e) => Err(e),
    }
}

fn write_row(buf: &mut Vec<u8>, z: C64, tau: Option<C64>, cell: &Cell) -> std::io::Result<()> {
    write!(buf, "{},{}", z.re, z.im)?;
    if let Some(t) = tau {
        write!(buf, ",{},{}", t.re, t.im)?;
    }
    match cell {
        Cell::Value(v) => writeln!(buf, ",{},{},ok,,,,", v.re, v.im),
        Cell::Pole(l) => {
            let (c2, c1) = (l.c_minus2(), l.c_minus1());
            writeln!(buf, ",,,pole,{},{},{},{}", c2.re, c2.im, c1.re, c1.im)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_table(
    model: &Path,
    function: Function,
    points: &str,
    tau: Option<&str>,
    q1: Option<&Path>,
    q2: Option<&Path>,
    chart_arg: ChartArg,
    nodes: usize,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let op = load_model(model)?;
    let zs = parse_points(points)?;
    let mut buf = Vec::new();
    match function {
        Function::Zeta | Function::Eta => {
            writeln!(buf, "re_z,im_z,re_value,im_value,status,re_c2,im_c2,re_c1,im_c1")?;
            let chart = chart(chart_arg);
            for z in zs {
                let cell = match function {
                    // ζ in the A^-z chart is ζ(A, -z)
                    Function::Zeta if chart == Chart::AMinusZ => classify(zeta(&op, -z), || unreachable_pole(z))?,
                    Function::Zeta => classify(zeta(&op, z), || unreachable_pole(z))?,
                    _ => classify(eta(&op, z), || unreachable_pole(z))?,
                };
                write_row(&mut buf, z, None, &cell)?;
            }
        }
        Function::DoubleZeta => {
            let (Some(q1), Some(q2)) = (q1, q2) else {
                return Err(Failure::Usage("double-zeta needs --q1 and --q2".into()));
            };
            let (q1, q2) = (load_model(q1)?, load_model(q2)?);
            let taus = tau.map(parse_points).transpose()?;
            writeln!(buf, "re_z,im_z,re_tau,im_tau,re_value,im_value,status,re_c2,im_c2,re_c1,im_c1")?;
            let pairs: Vec<(C64, C64)> = match &taus {
                None => zs.iter().map(|&z| (z, z)).collect(),
                Some(ts) => zs.iter().flat_map(|&z| ts.iter().map(move |&t| (z, t))).collect(),
            };
            for (z, t) in pairs {
                // at a pole, expand along the diagonal direction through (z, τ)
                let cell = classify(double_zeta(&op, &q1, &q2, z, t), || {
                    laurent_at(
                        |w| double_zeta(&op, &q1, &q2, z + w, t + w),
                        C64::new(0.0, 0.0),
                        0.4,
                        nodes,
                        2,
                    )
                })?;
                write_row(&mut buf, z, Some(t), &cell)?;
            }
        }
    }
    emit(out, &buf)
}

fn unreachable_pole(z: C64) -> Result<LaurentExpansion, Error> {
    Err(Error::Domain(format!("unexpected Hurwitz pole at {z}")))
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let Some(n) = requested_threads() else {
            return Err(Failure::Usage(format!("{THREADS_ENV} must be an integer >= 1, got {raw:?}")));
        };
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads()?;
    match cli.command {
        Command::Poles {
            model,
            function,
            chart,
            window,
            tol,
            nodes,
            format,
            out,
        } => cmd_poles(&model, function, chart, &window, tol, nodes, format, out.as_deref()),
        Command::Verify {
            suite,
            tol,
            seed,
            grid,
            depth,
            format,
            out,
        } => cmd_verify(&suite, tol, seed, grid, &depth, format, out.as_deref()),
        Command::Table {
            model,
            function,
            points,
            tau,
            q1,
            q2,
            chart,
            nodes,
            out,
        } => cmd_table(
            &model,
            function,
            &points,
            tau.as_deref(),
            q1.as_deref(),
            q2.as_deref(),
            chart,
            nodes,
            out.as_deref(),
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
