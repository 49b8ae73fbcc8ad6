//! The `ite` command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification suite fails, 2 for bad
//! configuration or unusable files, 3 for numerical failures such as a
//! missed root.

pub mod cache;
pub mod verify;

use crate::bounds::{self, delta_tilde_floor, BoundInputs};
use crate::density::{density_sweep, DensityReport};
use crate::eigensolve::{enumerate_spectrum_with, Dimension, Medium, SolveOptions, Spectrum};
use crate::error::Error;
use crate::specfun::{self, Order};
use cache::{CacheError, CacheHeader, SpectrumCache};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Environment variable consulted when `--threads` is absent.
pub const THREADS_ENV: &str = "ITE_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Engine(#[from] Error),
    #[error("{0} verification check(s) failed")]
    Verify(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verify(_) => EXIT_VERIFY,
            CliError::Config(_) | CliError::Cache(_) | CliError::Io(_) => EXIT_CONFIG,
            CliError::Engine(Error::Domain(_)) => EXIT_CONFIG,
            CliError::Engine(_) => EXIT_NUMERICAL,
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn config_err<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Config(msg.into()))
}

/// Radii at which counts are reported.
#[derive(Clone, Debug, PartialEq)]
pub enum GridSpec {
    /// `count` evenly spaced radii ending at `r_max`.
    Uniform(usize),
    Explicit(Vec<f64>),
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if !s.contains(',') {
            if let Ok(c) = s.trim().parse::<usize>() {
                return if c == 0 { Err("grid count must be positive".into()) } else { Ok(GridSpec::Uniform(c)) };
            }
        }
        s.split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|_| format!("bad grid radius `{t}`")))
            .collect::<Result<Vec<_>, _>>()
            .map(GridSpec::Explicit)
    }
}

impl GridSpec {
    pub fn radii(&self, r_max: f64) -> CliResult<Vec<f64>> {
        let radii = match self {
            GridSpec::Uniform(c) => (1..=*c).map(|i| r_max * i as f64 / *c as f64).collect(),
            GridSpec::Explicit(v) => v.clone(),
        };
        if radii.iter().any(|&r| !(r > 0.0 && r <= r_max)) {
            return config_err(format!("grid radii must lie in (0, {r_max}]"));
        }
        if radii.windows(2).any(|w| w[0] >= w[1]) {
            return config_err("grid radii must be strictly increasing");
        }
        Ok(radii)
    }
}

/// Localization threshold: a number, or `tilde` for `ε̃(n, δ, δ̃)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EpsSpec {
    Value(f64),
    Tilde,
}

impl FromStr for EpsSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("tilde") {
            return Ok(EpsSpec::Tilde);
        }
        s.parse().map(EpsSpec::Value).map_err(|_| format!("expected a number or `tilde`, got `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EngineConfig {
    pub dimension: Dimension,
    pub n: f64,
    pub r_max: f64,
    pub epsilon: EpsSpec,
    pub delta: f64,
    pub delta_tilde: Option<f64>,
    pub scan_step: Option<f64>,
    pub root_tol: f64,
    pub grid: GridSpec,
    pub threads: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl EngineConfig {
    pub fn medium(&self) -> CliResult<Medium> {
        Ok(Medium::new(self.dimension, self.n)?)
    }

    pub fn solve_options(&self) -> SolveOptions {
        SolveOptions { tol: self.root_tol, scan_step: self.scan_step, threads: self.threads }
    }

    /// The numeric threshold, resolving `tilde`.
    pub fn epsilon_value(&self) -> CliResult<f64> {
        match self.epsilon {
            EpsSpec::Value(e) if e > 0.0 && e < 1.0 => Ok(e),
            EpsSpec::Value(e) => config_err(format!("eps must lie in (0, 1), got {e}")),
            EpsSpec::Tilde => {
                let Some(dt) = self.delta_tilde else {
                    return config_err("--eps tilde needs --delta-tilde");
                };
                Ok(bounds::eps_tilde(&BoundInputs::shell(self.n, self.delta, dt)?)?)
            }
        }
    }

    /// Every range check, before any expensive work.
    pub fn validate(&self) -> CliResult<()> {
        self.medium()?;
        if !(self.r_max.is_finite() && self.r_max > 0.0) {
            return config_err(format!("rmax must be positive, got {}", self.r_max));
        }
        if !(self.root_tol > 0.0) {
            return config_err(format!("tol must be positive, got {}", self.root_tol));
        }
        if matches!(self.scan_step, Some(s) if !(s > 0.0)) {
            return config_err("scan step must be positive");
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return config_err(format!("delta must lie in (0, 1), got {}", self.delta));
        }
        if let Some(dt) = self.delta_tilde {
            BoundInputs::shell(self.n, self.delta, dt)?;
        }
        self.epsilon_value()?;
        self.grid.radii(self.r_max)?;
        Ok(())
    }
}

/// `--threads`, then `ITE_THREADS`, then the hardware default.
pub fn resolve_threads(flag: Option<usize>) -> CliResult<Option<usize>> {
    if flag.is_some() {
        return Ok(flag.filter(|&t| t > 0));
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) if !v.trim().is_empty() => match v.trim().parse::<usize>() {
            Ok(t) => Ok(Some(t).filter(|&t| t > 0)),
            Err(_) => config_err(format!("{THREADS_ENV} must be an integer, got `{v}`")),
        },
        _ => Ok(None),
    }
}

/// Loads the cache at `path` when its key matches, otherwise enumerates and
/// writes it. Returns the cache and whether it was reused.
pub fn load_or_build(config: &EngineConfig, path: Option<&Path>, force: bool) -> CliResult<(SpectrumCache, bool)> {
    let medium = config.medium()?;
    let want = CacheHeader::new(&medium, config.r_max, config.root_tol);
    if let Some(p) = path {
        if p.exists() && !force {
            let cached = SpectrumCache::read(p)?;
            if cached.header.matches(&want) {
                return Ok((cached, true));
            }
        }
    }
    let spectrum = enumerate_spectrum_with(&medium, config.r_max, &config.solve_options())?;
    let mut cache = SpectrumCache::new(spectrum, config.root_tol);
    cache.header.created_unix = want.created_unix;
    if let Some(p) = path {
        cache.write(p)?;
    }
    Ok((cache, false))
}

pub fn cmd_spectrum(config: &EngineConfig, force: bool) -> CliResult<SpectrumCache> {
    config.medium()?;
    let Some(path) = config.out.as_deref() else {
        return config_err("spectrum needs --out");
    };
    let (cache, reused) = load_or_build(config, Some(path), force)?;
    let s = &cache.spectrum;
    writeln!(
        std::io::stdout(),
        "{} {}: {} roots, {} with multiplicity, modes 0..={}, sha256 {}",
        if reused { "reused" } else { "wrote" },
        path.display(),
        s.records.len(),
        s.records.iter().map(|r| u64::from(r.mode.multiplicity)).sum::<u64>(),
        s.max_mode().unwrap_or(0),
        cache.checksum()
    )?;
    Ok(cache)
}

pub fn density_report(config: &EngineConfig, spectrum: &Spectrum) -> CliResult<DensityReport> {
    let radii = config.grid.radii(config.r_max)?;
    let eps = config.epsilon_value()?;
    Ok(density_sweep(spectrum, &radii, eps, config.delta, config.delta_tilde)?)
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.16e}")).unwrap_or_default()
}

pub fn write_density_csv(report: &DensityReport, out: impl Write) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "R", "N", "Nc", "Nuc", "ratio", "weyl_ratio", "B_L", "B_U", "eps", "delta", "delta_tilde",
        "eps_tilde", "n", "dim",
    ])?;
    for row in &report.rows {
        w.write_record([
            format!("{:.16e}", row.r),
            row.n_total.to_string(),
            row.n_localized.to_string(),
            row.n_unlocalized.to_string(),
            format!("{:.16e}", row.ratio),
            format!("{:.16e}", row.weyl_ratio),
            opt(report.theory_lower),
            opt(report.theory_upper),
            format!("{:.16e}", report.epsilon),
            format!("{:.16e}", report.delta),
            opt(report.delta_tilde),
            opt(report.eps_tilde),
            format!("{:.16e}", report.n),
            report.dimension.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn summary_line(report: &DensityReport) -> String {
    let f = |x: Option<f64>| x.map(|v| format!("{v:.6}")).unwrap_or_else(|| "-".into());
    match report.last() {
        Some(r) => format!(
            "R={} N={} Nc={} ratio={:.6} B_L={} B_U={} weyl_ratio={:.6}",
            r.r,
            r.n_total,
            r.n_localized,
            r.ratio,
            f(report.theory_lower),
            f(report.theory_upper),
            r.weyl_ratio
        ),
        None => "empty grid".into(),
    }
}

pub fn cmd_density(config: &EngineConfig, cache_path: Option<&Path>, force: bool) -> CliResult<DensityReport> {
    config.validate()?;
    let (cache, _) = load_or_build(config, cache_path, force)?;
    let report = density_report(config, &cache.spectrum)?;
    let mut buf = Vec::new();
    match config.format {
        Format::Csv => write_density_csv(&report, &mut buf)?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut buf, &report).map_err(std::io::Error::from)?;
            buf.push(b'\n');
        }
    }
    match &config.out {
        Some(p) => {
            std::fs::write(p, &buf)?;
            writeln!(std::io::stdout(), "{}", summary_line(&report))?;
        }
        None => {
            std::io::stdout().write_all(&buf)?;
            eprintln!("{}", summary_line(&report));
        }
    }
    Ok(report)
}

/// How `δ̃` is chosen per `n` in the bounds table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DeltaTildeRule {
    /// Twice the admissibility floor `δ/(n(1-δ))`.
    Double,
    Fixed(f64),
}

impl FromStr for DeltaTildeRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("double") {
            return Ok(DeltaTildeRule::Double);
        }
        s.parse().map(DeltaTildeRule::Fixed).map_err(|_| format!("expected `double` or a number, got `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundsRow {
    pub n: f64,
    pub lower: f64,
    pub upper: Option<f64>,
    pub eps_tilde: Option<f64>,
}

/// `(n, B_L, B_U, ε̃)` on `points` evenly spaced indices in `[0.01, 0.99]`.
/// `B_U` is blank where the fixed `δ̃` is not admissible.
pub fn bounds_table(dimension: Dimension, delta: f64, rule: DeltaTildeRule, points: usize) -> CliResult<Vec<BoundsRow>> {
    if points < 2 {
        return config_err("bounds table needs at least two points");
    }
    if !(delta > 0.0 && delta < 1.0) {
        return config_err(format!("delta must lie in (0, 1), got {delta}"));
    }
    let mut rows = Vec::with_capacity(points);
    for i in 0..points {
        let n = 0.01 + 0.98 * i as f64 / (points - 1) as f64;
        let dt = match rule {
            DeltaTildeRule::Double => 2.0 * delta_tilde_floor(n, delta),
            DeltaTildeRule::Fixed(v) => v,
        };
        let (upper, eps_tilde) = if dt > delta_tilde_floor(n, delta) {
            let inputs = BoundInputs::shell(n, delta, dt)?;
            (Some(bounds::upper_bound(dimension, &inputs)?), Some(bounds::eps_tilde(&inputs)?))
        } else {
            (None, None)
        };
        rows.push(BoundsRow { n, lower: bounds::lower_bound(dimension, n)?, upper, eps_tilde });
    }
    if rows.windows(2).any(|w| !(w[1].lower < w[0].lower)) {
        return Err(Error::Numerical("lower bound is not strictly decreasing in n".into()).into());
    }
    Ok(rows)
}

pub fn write_bounds_csv(rows: &[BoundsRow], out: impl Write) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "B_L", "B_U", "eps_tilde"])?;
    for r in rows {
        w.write_record([format!("{:.16e}", r.n), format!("{:.16e}", r.lower), opt(r.upper), opt(r.eps_tilde)])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Parser, Debug)]
#[command(name = "ite", version, about = "Interior transmission eigenvalues of the unit disk and ball")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate eigenvalues below --rmax and write a spectrum cache.
    Spectrum {
        #[command(flatten)]
        solve: SolveArgs,
        #[arg(long)]
        out: PathBuf,
        /// Recompute even when a matching cache exists.
        #[arg(long)]
        force: bool,
    },
    /// Count surface-localized eigenmodes over a radius grid.
    Density {
        #[command(flatten)]
        solve: SolveArgs,
        #[command(flatten)]
        shell: ShellArgs,
        /// Radius grid: a point count, or a comma-separated list.
        #[arg(long, default_value = "30")]
        grid: GridSpec,
        /// Spectrum cache to reuse or create.
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Tabulate the theoretical density bounds over n.
    Bounds {
        #[arg(long, default_value_t = 2)]
        dim: u32,
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        /// `double` for twice the admissibility floor, or a fixed value.
        #[arg(long, default_value = "double")]
        delta_tilde: DeltaTildeRule,
        #[arg(long, default_value_t = 99)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run self-check suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: verify::Suite,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Special-function utilities.
    Specfun {
        #[command(subcommand)]
        command: SpecfunCommand,
    },
}

use verify::VerifyOptions;

#[derive(Subcommand, Debug)]
pub enum SpecfunCommand {
    /// Print J, J', the energy integral and W at one point.
    Eval {
        /// Integer or half-integer order.
        #[arg(long)]
        order: f64,
        #[arg(long)]
        x: f64,
    },
}

#[derive(Args, Debug, Clone)]
pub struct SolveArgs {
    #[arg(long, default_value_t = 2)]
    pub dim: u32,
    #[arg(long)]
    pub n: f64,
    #[arg(long)]
    pub rmax: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Initial root-scan step; defaults to a fraction of the zero spacing.
    #[arg(long)]
    pub scan_step: Option<f64>,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct ShellArgs {
    #[arg(long, default_value = "0.25")]
    pub eps: EpsSpec,
    #[arg(long, default_value_t = 0.1)]
    pub delta: f64,
    #[arg(long)]
    pub delta_tilde: Option<f64>,
}

fn dimension(d: u32) -> CliResult<Dimension> {
    Ok(Dimension::try_from(d)?)
}

fn config_from(solve: &SolveArgs) -> CliResult<EngineConfig> {
    Ok(EngineConfig {
        dimension: dimension(solve.dim)?,
        n: solve.n,
        r_max: solve.rmax,
        epsilon: EpsSpec::Value(0.25),
        delta: 0.1,
        delta_tilde: None,
        scan_step: solve.scan_step,
        root_tol: solve.tol,
        grid: GridSpec::Uniform(1),
        threads: resolve_threads(solve.threads)?,
        out: None,
        format: Format::Csv,
    })
}

fn order_from(v: f64) -> CliResult<Order> {
    let twice = 2.0 * v;
    if !(twice >= 0.0 && twice.fract() == 0.0 && twice <= f64::from(u32::MAX)) {
        return config_err(format!("order must be a nonnegative integer or half-integer, got {v}"));
    }
    Ok(Order::from_twice(twice as u32))
}

fn write_out(path: Option<&Path>, f: impl FnOnce(&mut dyn Write) -> CliResult<()>) -> CliResult<()> {
    match path {
        Some(p) => {
            let mut file = std::io::BufWriter::new(std::fs::File::create(p)?);
            f(&mut file)?;
            file.flush()?;
        }
        None => f(&mut std::io::stdout().lock())?,
    }
    Ok(())
}

pub fn execute(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Spectrum { solve, out, force } => {
            let mut config = config_from(&solve)?;
            config.out = Some(out);
            config.validate()?;
            cmd_spectrum(&config, force)?;
        }
        Command::Density { solve, shell, grid, cache, force, out, format } => {
            let mut config = config_from(&solve)?;
            config.epsilon = shell.eps;
            config.delta = shell.delta;
            config.delta_tilde = shell.delta_tilde;
            config.grid = grid;
            config.out = out;
            config.format = format;
            cmd_density(&config, cache.as_deref(), force)?;
        }
        Command::Bounds { dim, delta, delta_tilde, points, out } => {
            let rows = bounds_table(dimension(dim)?, delta, delta_tilde, points)?;
            write_out(out.as_deref(), |w| write_bounds_csv(&rows, w))?;
        }
        Command::Verify { suite, seed, samples, threads } => {
            let opts = VerifyOptions { seed, samples, threads: resolve_threads(threads)? };
            let outcomes = verify::run(suite, &opts)?;
            let mut out = std::io::stdout().lock();
            for o in &outcomes {
                writeln!(out, "{o}")?;
            }
            let failed = outcomes.iter().filter(|o| !o.passed()).count();
            if failed > 0 {
                return Err(CliError::Verify(failed));
            }
        }
        Command::Specfun { command: SpecfunCommand::Eval { order, x } } => {
            let o = order_from(order)?;
            let t = specfun::bessel_triple(o, x)?;
            let f = specfun::bessel_energy(o, x)?;
            let w = specfun::wronskian_w(o, x)?;
            let zeros = specfun::count_zeros(o, x)?;
            let mut out = std::io::stdout().lock();
            writeln!(out, "order {o}")?;
            writeln!(out, "x {x:.16e}")?;
            writeln!(out, "J {:.16e}", t.at.to_f64())?;
            writeln!(out, "J' {:.16e}", t.derivative().to_f64())?;
            writeln!(out, "energy {:.16e}", f.to_f64())?;
            writeln!(out, "W {w:.16e}")?;
            writeln!(out, "zeros_below {zeros}")?;
        }
    }
    Ok(())
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    match execute(cli) {
        Ok(()) => EXIT_OK,
        // The reader went away, as with `ite bounds | head`.
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            if !matches!(e, CliError::Verify(_)) {
                eprintln!("error: {e}");
            } else {
                eprintln!("{e}");
            }
            e.exit_code()
        }
    }
}
