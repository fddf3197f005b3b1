//! Command-line front end: argument parsing, route dispatch and CSV/JSON output.
//!
//! Every command produces one table. CSV writes a header line and one line
//! per row; JSON wraps the same rows in an envelope
//! `{version, command, parameters, timings, rows}`. Rows always follow the
//! input order of the `--s` grids, so identical requests give byte-identical
//! output. Timings are only reported with `--timings`.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::fredholm::{counting_distribution, default_order, ln_f2_determinant, ThinningParams};
use crate::painleve::{AsDistributions, DEFAULT_TOL};
use crate::sampler::{
    empirical_vs_analytic, tracy_widom_argument_scale, SampleBatch, TabulatedCdf,
};
use crate::specfun::{log_barnes_g_product, zeta_prime_minus_one};
use crate::tails::{
    c_beta, f4_bracket_log, g_beta, gamma_of_v, ln_f1_left, ln_f2_left, ln_f4_left, right_tail,
    right_tail_deficit, tau_beta, transition_ln_f2, v_of_gamma,
};
use crate::verify;

/// Version of the output schema; bumped whenever columns change.
pub const SCHEMA_VERSION: u32 = 1;
/// Environment variable holding the default worker-thread count.
pub const THREADS_ENV: &str = "THINNED_TW_THREADS";
const MAX_GRID_POINTS: usize = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "thinned-tw",
    version,
    about = "Thinned Tracy-Widom distributions F_beta(s, gamma)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Write the table to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Report wall-clock timings (JSON envelope, or stderr for CSV).
    #[arg(long, global = true)]
    pub timings: bool,

    /// Worker threads; defaults to all cores.
    #[arg(long, global = true, env = THREADS_ENV)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Determinant,
    Painleve,
    Tail,
    Weibull,
    Transition,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::Determinant,
        Route::Painleve,
        Route::Tail,
        Route::Weibull,
        Route::Transition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Determinant => "determinant",
            Route::Painleve => "painleve",
            Route::Tail => "tail",
            Route::Weibull => "weibull",
            Route::Transition => "transition",
        }
    }

    /// The determinant for β = 2, Painlevé otherwise.
    pub fn default_for(beta: u8) -> Route {
        if beta == 2 {
            Route::Determinant
        } else {
            Route::Painleve
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// F_beta(s, gamma) over the grid by one route.
    Eval(EvalArgs),
    /// Every applicable route side by side with absolute pairwise differences.
    Table(DistArgs),
    /// Centred finite-difference density dF/ds with the Weibull-limit density.
    Density(DensityArgs),
    /// E_2(m) = P(exactly m points in (s, inf)).
    Counting(CountingArgs),
    /// Run the acceptance criteria; exit code 3 if any fails.
    Verify(VerifyArgs),
    /// Monte Carlo batch of thinned maxima with a KS comparison.
    Sample(SampleArgs),
    /// c_beta, g_beta, tau_beta, zeta'(-1) and the Barnes-G products at v.
    Constants(ConstantsArgs),
}

/// A list of s values: `x` or `start:stop:step`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid(pub Vec<f64>);

impl FromStr for Grid {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        let num = |p: &str| -> std::result::Result<f64, String> {
            match p.trim().parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(x),
                _ => Err(format!("'{p}' is not a finite number")),
            }
        };
        match text.split(':').collect::<Vec<_>>().as_slice() {
            [a] => Ok(Grid(vec![num(a)?])),
            [a, b, step] => {
                let (a, b, step) = (num(a)?, num(b)?, num(step)?);
                if step == 0.0 || (b - a) * step < 0.0 {
                    return Err(format!("step {step} does not lead from {a} to {b}"));
                }
                let count = ((b - a) / step * (1.0 + 1e-12) + 1e-9).floor() + 1.0;
                if count > MAX_GRID_POINTS as f64 {
                    return Err(format!("grid has {count} points, limit {MAX_GRID_POINTS}"));
                }
                Ok(Grid(
                    (0..count as usize).map(|i| a + i as f64 * step).collect(),
                ))
            }
            _ => Err(format!("expected 'x' or 'start:stop:step', got '{text}'")),
        }
    }
}

fn parse_beta(text: &str) -> std::result::Result<u8, String> {
    match text.trim() {
        "1" => Ok(1),
        "2" => Ok(2),
        "4" => Ok(4),
        _ => Err(format!("beta must be 1, 2 or 4, got '{text}'")),
    }
}

fn parse_gamma(text: &str) -> std::result::Result<f64, String> {
    match text.trim().parse::<f64>() {
        Ok(g) if (0.0..=1.0).contains(&g) => Ok(g),
        _ => Err(format!("gamma must be a number in [0, 1], got '{text}'")),
    }
}

fn parse_positive(text: &str) -> std::result::Result<f64, String> {
    match text.trim().parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive number, got '{text}'")),
    }
}

#[derive(Debug, Clone, Args)]
pub struct Numerics {
    /// Nystrom order for the determinant route (default grows with |s|).
    #[arg(long)]
    pub order: Option<usize>,

    /// Relative tolerance of the Painleve integrator.
    #[arg(long, default_value_t = DEFAULT_TOL, value_parser = parse_positive)]
    pub tol: f64,

    /// Transition parameter chi; derived from (s, v) when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub chi: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct DistArgs {
    /// Grid of s values (repeatable): `x` or `start:stop:step`.
    #[arg(
        long = "s",
        required = true,
        allow_hyphen_values = true,
        value_name = "START:STOP:STEP"
    )]
    pub s: Vec<Grid>,

    #[arg(long, default_value = "2", value_parser = parse_beta)]
    pub beta: u8,

    /// Retention probability gamma in [0, 1].
    #[arg(long, value_parser = parse_gamma, allow_hyphen_values = true)]
    pub gamma: f64,

    #[command(flatten)]
    pub numerics: Numerics,
}

impl DistArgs {
    fn points(&self) -> Vec<f64> {
        self.s.iter().flat_map(|g| g.0.iter().copied()).collect()
    }

    fn parameters(&self, route: Option<Route>) -> Value {
        let mut p = json!({
            "s": self.points(),
            "beta": self.beta,
            "gamma": self.gamma,
            "order": self.numerics.order,
            "tol": self.numerics.tol,
            "chi": self.numerics.chi,
        });
        if let Some(r) = route {
            p["route"] = json!(r.name());
        }
        p
    }
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub dist: DistArgs,

    /// Evaluation route; determinant for beta = 2, painleve otherwise.
    #[arg(long, value_enum)]
    pub route: Option<Route>,
}

#[derive(Debug, Clone, Args)]
pub struct DensityArgs {
    #[command(flatten)]
    pub dist: DistArgs,

    #[arg(long, value_enum)]
    pub route: Option<Route>,

    /// Finite-difference half step.
    #[arg(long, default_value_t = 1e-3, value_parser = parse_positive)]
    pub h: f64,
}

#[derive(Debug, Clone, Args)]
pub struct CountingArgs {
    #[arg(
        long = "s",
        required = true,
        allow_hyphen_values = true,
        value_name = "START:STOP:STEP"
    )]
    pub s: Vec<Grid>,

    /// Largest m reported.
    #[arg(long, default_value_t = 5)]
    pub m_max: usize,

    /// Nystrom order (default grows with |s|, at least 4 m_max).
    #[arg(long)]
    pub order: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Run only these criteria (repeatable); all by default.
    #[arg(long)]
    pub criterion: Vec<u8>,
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    /// Matrix dimension N.
    #[arg(long, default_value_t = 200)]
    pub n: usize,

    #[arg(long, default_value = "2", value_parser = parse_beta)]
    pub beta: u8,

    #[arg(long, value_parser = parse_gamma, allow_hyphen_values = true)]
    pub gamma: f64,

    #[arg(long, default_value_t = 10_000)]
    pub draws: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Analytic route for the KS comparison.
    #[arg(long, value_enum)]
    pub route: Option<Route>,

    #[command(flatten)]
    pub numerics: Numerics,

    /// Also write every draw as CSV (draw_index, value_or_empty, is_sentinel).
    #[arg(long)]
    pub draws_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ConstantsArgs {
    /// v = -ln(1 - gamma) for the gamma-dependent constants.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub v: f64,
}

/// One output cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => format_float(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(t) => t.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => json!(x),
            Cell::Int(i) => json!(i),
            Cell::Text(t) => json!(t),
            Cell::Bool(b) => json!(b),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Num)
    }
}

impl From<&str> for Cell {
    fn from(t: &str) -> Self {
        Cell::Text(t.to_string())
    }
}

/// Shortest round-trip representation; scientific outside [1e-4, 1e15).
fn format_float(x: f64) -> String {
    if x == 0.0 || (1e-4..1e15).contains(&x.abs()) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// A command's result table.
#[derive(Debug, Clone)]
pub struct Table {
    pub command: &'static str,
    pub parameters: Value,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(command: &'static str, parameters: Value, columns: &[&str]) -> Self {
        Table {
            command,
            parameters,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self, timings: Option<f64>) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .cloned()
                    .zip(row.iter().map(Cell::json))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        json!({
            "version": SCHEMA_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "timings": timings.map(|t| json!({ "total_secs": t })),
            "rows": rows,
        })
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed command and writes its table. Returns 0, or 3 when
/// `verify` finds a failing criterion.
pub fn run(cli: &Cli) -> Result<i32> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(Error::Request("thread count must be positive".into()));
        }
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| Error::Numeric(e.to_string()))?;

    let start = Instant::now();
    let (table, code) = pool.install(|| execute(&cli.command))?;
    let elapsed = start.elapsed().as_secs_f64();

    let sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    let timings = cli.timings.then_some(elapsed);
    match cli.format {
        Format::Csv => {
            table.write_csv(sink)?;
            if let Some(t) = timings {
                eprintln!("total_secs={t:.3}");
            }
        }
        Format::Json => {
            let mut sink = sink;
            serde_json::to_writer_pretty(&mut sink, &table.to_json(timings))
                .map_err(|e| Error::Io(e.to_string()))?;
            writeln!(sink)?;
            sink.flush()?;
        }
    }
    Ok(code)
}

/// Builds the table for a command without writing it.
pub fn execute(command: &Command) -> Result<(Table, i32)> {
    match command {
        Command::Eval(a) => eval(a).map(|t| (t, 0)),
        Command::Table(a) => table(a).map(|t| (t, 0)),
        Command::Density(a) => density(a).map(|t| (t, 0)),
        Command::Counting(a) => counting(a).map(|t| (t, 0)),
        Command::Verify(a) => verify_cmd(a),
        Command::Sample(a) => sample(a).map(|t| (t, 0)),
        Command::Constants(a) => constants(a).map(|t| (t, 0)),
    }
}

/// χ at which `v` sits exactly on the boundary of the transition regime,
/// `v = (2√2/3) t - χ ln t`.
pub fn boundary_chi(s: f64, v: f64) -> f64 {
    let t = (-s).powf(1.5);
    (2.0 / 3.0 * 2f64.sqrt() * t - v) / t.ln()
}

fn ln_f_tail(s: f64, gamma: f64, beta: u8) -> Result<f64> {
    if s <= -1.0 {
        let v = v_of_gamma(gamma);
        let e = match beta {
            1 => ln_f1_left(s, v)?,
            2 => ln_f2_left(s, v)?,
            _ => ln_f4_left(s, v)?,
        };
        Ok(e.value)
    } else if s >= 1.0 {
        right_tail(s, gamma, beta)?;
        Ok((-right_tail_deficit(s, gamma, beta)?).ln_1p())
    } else {
        Err(Error::Request(format!(
            "tail route covers s <= -1 and s >= 1, got s = {s}"
        )))
    }
}

fn require_beta2(route: Route, beta: u8) -> Result<()> {
    if beta != 2 {
        return Err(Error::Request(format!(
            "route {} supports beta = 2 only",
            route.name()
        )));
    }
    Ok(())
}

/// ln F_β(s, γ) at every point by one route. The outer error rejects the
/// whole request; inner errors belong to single points.
pub fn route_ln_f(
    route: Route,
    beta: u8,
    gamma: f64,
    points: &[f64],
    numerics: &Numerics,
) -> Result<Vec<Result<f64>>> {
    if points.is_empty() {
        return Ok(Vec::new());
    }
    Ok(match route {
        Route::Determinant => {
            require_beta2(route, beta)?;
            points
                .par_iter()
                .map(|&s| {
                    let order = numerics.order.unwrap_or_else(|| default_order(s));
                    ln_f2_determinant(ThinningParams::new(s, gamma)?, order)
                })
                .collect()
        }
        Route::Painleve => {
            let lo = points.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = points.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let dist = AsDistributions::new(gamma, lo, hi, numerics.tol)?;
            points.par_iter().map(|&s| dist.ln_f(beta, s)).collect()
        }
        Route::Tail => points
            .par_iter()
            .map(|&s| ln_f_tail(s, gamma, beta))
            .collect(),
        Route::Weibull => {
            if gamma == 0.0 {
                return Err(Error::Request("the weibull route needs gamma > 0".into()));
            }
            let g = g_beta(beta)?;
            let scale = gamma.powf(2.0 / 3.0);
            points
                .iter()
                .map(|&s| {
                    let x = scale * s;
                    Ok(if x > 0.0 { 0.0 } else { -g * (-x).powf(1.5) })
                })
                .collect()
        }
        Route::Transition => {
            require_beta2(route, beta)?;
            let v = v_of_gamma(gamma);
            points
                .par_iter()
                .map(|&s| {
                    let chi = numerics.chi.unwrap_or_else(|| boundary_chi(s, v));
                    Ok(transition_ln_f2(s, v, chi)?.value)
                })
                .collect()
        }
    })
}

fn eval(a: &EvalArgs) -> Result<Table> {
    let d = &a.dist;
    let route = a.route.unwrap_or(Route::default_for(d.beta));
    let points = d.points();
    let values = route_ln_f(route, d.beta, d.gamma, &points, &d.numerics)?;
    let mut t = Table::new(
        "eval",
        d.parameters(Some(route)),
        &["s", "gamma", "beta", "route", "value", "ln_value"],
    );
    for (s, v) in points.iter().zip(values) {
        let ln_f = v?;
        t.rows.push(vec![
            (*s).into(),
            d.gamma.into(),
            Cell::Int(d.beta as u64),
            route.name().into(),
            ln_f.exp().into(),
            ln_f.into(),
        ]);
    }
    Ok(t)
}

/// Domain-type failures mean "route not applicable here"; anything else is a
/// real numerical failure and aborts the table.
fn applicable(r: Result<f64>) -> Result<Option<f64>> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(
            Error::Domain { .. } | Error::Request(_) | Error::Range(_) | Error::Precondition(_),
        ) => Ok(None),
        Err(e) => Err(e),
    }
}

fn table(d: &DistArgs) -> Result<Table> {
    let points = d.points();
    let mut columns: Vec<String> = ["s", "gamma", "beta"]
        .iter()
        .map(|c| c.to_string())
        .collect();
    let mut per_route = Vec::new();
    for route in Route::ALL {
        columns.push(route.name().to_string());
        let values = match route_ln_f(route, d.beta, d.gamma, &points, &d.numerics) {
            Ok(vs) => vs
                .into_iter()
                .map(|v| applicable(v).map(|o| o.map(f64::exp)))
                .collect::<Result<Vec<_>>>()?,
            Err(e) => match applicable(Err(e)) {
                Ok(_) => vec![None; points.len()],
                Err(e) => return Err(e),
            },
        };
        per_route.push(values);
    }
    let n = Route::ALL.len();
    for i in 0..n {
        for j in i + 1..n {
            columns.push(format!(
                "delta_{}_{}",
                Route::ALL[i].name(),
                Route::ALL[j].name()
            ));
        }
    }
    let mut t = Table {
        command: "table",
        parameters: d.parameters(None),
        columns,
        rows: Vec::new(),
    };
    for (k, s) in points.iter().enumerate() {
        let mut row = vec![(*s).into(), d.gamma.into(), Cell::Int(d.beta as u64)];
        row.extend(per_route.iter().map(|v| Cell::from(v[k])));
        for i in 0..n {
            for j in i + 1..n {
                let delta = per_route[i][k]
                    .zip(per_route[j][k])
                    .map(|(a, b)| (a - b).abs());
                row.push(delta.into());
            }
        }
        t.rows.push(row);
    }
    Ok(t)
}

/// d/ds of the Weibull limit exp(-g_β (-γ^{2/3} s)^{3/2}).
fn weibull_density(s: f64, gamma: f64, beta: u8) -> Result<f64> {
    let g = g_beta(beta)?;
    let scale = gamma.powf(2.0 / 3.0);
    let x = scale * s;
    Ok(if x >= 0.0 {
        0.0
    } else {
        scale * 1.5 * g * (-x).sqrt() * (-g * (-x).powf(1.5)).exp()
    })
}

fn density(a: &DensityArgs) -> Result<Table> {
    let d = &a.dist;
    let route = a.route.unwrap_or(Route::default_for(d.beta));
    let points = d.points();
    let shifted: Vec<f64> = points.iter().flat_map(|&s| [s - a.h, s + a.h]).collect();
    let values = route_ln_f(route, d.beta, d.gamma, &shifted, &d.numerics)?;
    let mut params = d.parameters(Some(route));
    params["h"] = json!(a.h);
    let mut t = Table::new(
        "density",
        params,
        &["s", "gamma", "beta", "route", "value", "weibull"],
    );
    let mut values = values.into_iter();
    for &s in &points {
        let (lo, hi) = (
            values.next().expect("two values per point")?,
            values.next().expect("two values per point")?,
        );
        let value = (hi.exp() - lo.exp()) / (2.0 * a.h);
        t.rows.push(vec![
            s.into(),
            d.gamma.into(),
            Cell::Int(d.beta as u64),
            route.name().into(),
            value.into(),
            weibull_density(s, d.gamma, d.beta)?.into(),
        ]);
    }
    Ok(t)
}

fn counting(a: &CountingArgs) -> Result<Table> {
    let points: Vec<f64> = a.s.iter().flat_map(|g| g.0.iter().copied()).collect();
    let dists = points
        .par_iter()
        .map(|&s| {
            let order = a.order.unwrap_or_else(|| default_order(s).max(4 * a.m_max));
            counting_distribution(s, a.m_max, order)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut t = Table::new(
        "counting",
        json!({ "s": points, "m_max": a.m_max, "order": a.order }),
        &["s", "m", "probability"],
    );
    for d in dists {
        for (m, p) in d.probabilities.iter().enumerate() {
            t.rows
                .push(vec![d.s.into(), Cell::Int(m as u64), (*p).into()]);
        }
    }
    Ok(t)
}

fn verify_cmd(a: &VerifyArgs) -> Result<(Table, i32)> {
    let ids: Vec<u8> = if a.criterion.is_empty() {
        verify::CRITERIA.iter().map(|(i, _)| *i).collect()
    } else {
        a.criterion.clone()
    };
    let mut t = Table::new(
        "verify",
        json!({ "criteria": ids }),
        &["id", "title", "status", "detail", "elapsed_secs"],
    );
    let mut all_pass = true;
    for id in ids {
        let r = verify::run_criterion(id)?;
        eprintln!("{}", r.line());
        all_pass &= r.passed;
        t.rows.push(vec![
            Cell::Int(id as u64),
            r.title.into(),
            if r.passed { "PASS" } else { "FAIL" }.into(),
            Cell::Text(r.detail),
            r.elapsed_secs.into(),
        ]);
    }
    Ok((t, if all_pass { 0 } else { 3 }))
}

/// Tabulation spacing of the analytic CDF used by `sample`.
const CDF_STEP: f64 = 0.05;

fn sample(a: &SampleArgs) -> Result<Table> {
    let batch = SampleBatch::generate(a.n, a.beta, a.gamma, a.seed, a.draws)?;
    if let Some(path) = &a.draws_out {
        batch.write_csv(BufWriter::new(File::create(path)?))?;
    }
    let route = a.route.unwrap_or(Route::default_for(a.beta));
    let kept: Vec<f64> = batch.maxima.iter().filter_map(|m| m.value()).collect();
    let lo = kept.iter().copied().fold(-8.0_f64, f64::min).floor() - 0.5;
    let hi = kept.iter().copied().fold(5.0_f64, f64::max).ceil() + 0.5;
    let n = ((hi - lo) / CDF_STEP).ceil() as usize + 1;
    let grid: Vec<f64> = (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect();
    let scale = tracy_widom_argument_scale(a.beta);
    let scaled: Vec<f64> = grid.iter().map(|x| scale * x).collect();
    let values = route_ln_f(route, a.beta, a.gamma, &scaled, &a.numerics)?
        .into_iter()
        .map(|v| v.map(f64::exp))
        .collect::<Result<Vec<_>>>()?;
    let ks = empirical_vs_analytic(&batch, &TabulatedCdf::new(grid, values)?)?;
    let mut t = Table::new(
        "sample",
        json!({
            "n": a.n, "beta": a.beta, "gamma": a.gamma, "draws": a.draws,
            "seed": a.seed, "route": route.name(), "argument_scale": scale,
        }),
        &[
            "n",
            "beta",
            "gamma",
            "seed",
            "draws",
            "sentinels",
            "n_effective",
            "route",
            "ks_distance",
        ],
    );
    t.rows.push(vec![
        Cell::Int(a.n as u64),
        Cell::Int(a.beta as u64),
        a.gamma.into(),
        Cell::Int(a.seed),
        Cell::Int(a.draws as u64),
        Cell::Int(batch.sentinel_count() as u64),
        Cell::Int(ks.n_effective as u64),
        route.name().into(),
        ks.ks_distance.into(),
    ]);
    Ok(t)
}

fn constants(a: &ConstantsArgs) -> Result<Table> {
    let v = a.v;
    if !(v >= 0.0 && v.is_finite()) {
        return Err(Error::Request(format!(
            "v = {v} must be finite and nonnegative"
        )));
    }
    let mut t = Table::new("constants", json!({ "v": v }), &["name", "value"]);
    let mut push = |name: &str, value: f64| t.rows.push(vec![name.into(), value.into()]);
    for beta in [1u8, 2, 4] {
        push(&format!("c_{beta}"), c_beta(beta)?);
    }
    for beta in [1u8, 2, 4] {
        push(&format!("g_{beta}"), g_beta(beta)?);
    }
    for beta in [1u8, 2, 4] {
        push(&format!("tau_{beta}"), tau_beta(beta)?);
    }
    push("zeta_prime_minus_one", zeta_prime_minus_one());
    push("gamma", gamma_of_v(v));
    push("ln_barnes_g_product", log_barnes_g_product(v)?);
    push("ln_barnes_g_product_2v", log_barnes_g_product(2.0 * v)?);
    push("ln_f4_bracket", f4_bracket_log(v));
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_syntax() {
        assert_eq!("-5".parse::<Grid>().unwrap().0, vec![-5.0]);
        assert_eq!("-3:3:1".parse::<Grid>().unwrap().0.len(), 7);
        assert_eq!("0:1:0.1".parse::<Grid>().unwrap().0.len(), 11);
        assert_eq!(
            "2:-2:-1".parse::<Grid>().unwrap().0,
            vec![2.0, 1.0, 0.0, -1.0, -2.0]
        );
        assert!("0:1:-0.1".parse::<Grid>().is_err());
        assert!("0:1".parse::<Grid>().is_err());
        assert!("a".parse::<Grid>().is_err());
        assert!("0:1:0".parse::<Grid>().is_err());
    }

    #[test]
    fn chi_boundary_is_consistent() {
        let (s, v) = (-10.0_f64, 5.0);
        let chi = boundary_chi(s, v);
        let t = (-s).powf(1.5);
        assert!((2.0 / 3.0 * 2f64.sqrt() * t - chi * t.ln() - v).abs() < 1e-12);
    }

    #[test]
    fn float_formatting_round_trips() {
        for x in [0.0, 1.0, -5.0, 0.5, 1e-300, 3.3e-5, 123456.789, 1e20] {
            assert_eq!(format_float(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(format_float(-5.0), "-5");
    }

    #[test]
    fn weibull_density_integrates_to_one() {
        let rule = crate::quadrature::gauss_legendre(200).unwrap();
        let total = rule.integrate(-60.0, 0.0, |s| weibull_density(s, 0.5, 2).unwrap());
        assert!((total - 1.0).abs() < 1e-6, "{total}");
    }
}
