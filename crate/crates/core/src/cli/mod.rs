//! Command-line front end.
//!
//! Every subcommand produces one [`output::Table`] written as CSV or JSON to
//! `--out` or standard output. Exit status is 0 on success, 2 for invalid
//! arguments or parameters, and 1 for I/O failures.

pub mod output;
pub mod sweeps;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{gv_max_k, gv_simplified_max_k, singleton_max_k, sp_max_k, sp_simplified_max_k};
use crate::codes::{monte_carlo, Predicate};
use crate::genericity::{
    msrd_prob_bounds_BR, msrd_prob_lb_A, msrd_prob_lb_U, BoundKind, ProbabilityBound, UVariant, DEFAULT_M_CAP,
};
use crate::volumes::{CodeParams, VolumeTable};
use crate::Error;
use output::{Cell, Format, Table};
use sweeps::Regime;

pub const CURVE_COLUMNS: [&str; 11] = [
    "delta",
    "R_singleton",
    "R_sp_exact",
    "R_sp_simplified",
    "R_sp_asymptotic",
    "R_gv_exact",
    "R_gv_simplified",
    "R_gv_asymptotic",
    "d",
    "R_sp_asymptotic_raw",
    "R_gv_asymptotic_raw",
];

pub const MMIN_COLUMNS: [&str; 5] = ["ell", "mmin_A", "mmin_U_lemma", "mmin_U_printed", "mmin_BR"];

#[derive(Debug, Parser)]
#[command(name = "sumrank", version, about = "Bounds and genericity of sum-rank-metric codes")]
pub struct Config {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

/// Code parameters; give either the number of blocks or the length.
#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub eta: u64,
    #[arg(long, required_unless_present = "n", conflicts_with = "n")]
    pub ell: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
}

impl ParamArgs {
    fn params(&self) -> crate::Result<CodeParams> {
        match (self.ell, self.n) {
            (Some(ell), _) => CodeParams::new(self.q, self.m, self.eta, ell),
            (None, Some(n)) => CodeParams::with_length(self.q, self.m, self.eta, n),
            (None, None) => unreachable!("clap requires --ell or --n"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundArg {
    A,
    U,
    ULemma,
    UPrinted,
    Br,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PredicateArg {
    Msrd,
    MinDistance,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sphere and ball volumes for radii 0..=radius.
    Volume {
        #[command(flatten)]
        params: ParamArgs,
        /// Largest radius; defaults to the largest possible weight.
        #[arg(long)]
        radius: Option<u64>,
    },
    /// Largest dimensions allowed by the Singleton, SP and GV bounds.
    Bounds {
        #[command(flatten)]
        params: ParamArgs,
        /// Minimum distance; defaults to every d in 1..=ℓμ.
        #[arg(long)]
        d: Option<u64>,
    },
    /// SP and GV rate curves over δ = i/grid.
    CurveSpGv {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 64)]
        grid: u64,
        #[arg(long, value_enum, default_value = "bounded-block")]
        regime: Regime,
    },
    /// Bounds on the probability that a random systematic code is MSRD.
    Genericity {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        k: u64,
    },
    /// Smallest extension degree with a positive MSRD probability bound.
    Mmin {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "a,u,br")]
        bounds: Vec<BoundArg>,
        /// Block counts; defaults to every divisor of n.
        #[arg(long, value_delimiter = ',')]
        ells: Option<Vec<u64>>,
        #[arg(long, default_value_t = DEFAULT_M_CAP)]
        m_cap: u64,
    },
    /// Frequency of MSRD codes (or of minimum distance ≥ d) among random codes.
    Montecarlo {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, value_enum, default_value = "msrd")]
        predicate: PredicateArg,
        /// Distance threshold for `--predicate min-distance`.
        #[arg(long)]
        d: Option<u64>,
    },
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match Config::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let table = match execute(&config) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::InvalidArgument(_) | Error::ResourceLimit(_) => 2,
                Error::NoIrreducible { .. } => 1,
            };
        }
    };
    match write_table(&table, &config) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn write_table(table: &Table, config: &Config) -> io::Result<()> {
    match &config.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            table.write(config.format, &mut w)?;
            w.flush()
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            table.write(config.format, &mut w)?;
            w.flush()
        }
    }
}

/// Computes the output table for a parsed configuration.
pub fn execute(config: &Config) -> crate::Result<Table> {
    match &config.command {
        Command::Volume { params, radius } => volume_table(params.params()?, *radius),
        Command::Bounds { params, d } => bounds_table(params.params()?, *d),
        Command::CurveSpGv { params, grid, regime } => curve_table(params.params()?, *grid, *regime),
        Command::Genericity { params, k } => genericity_table(params.params()?, *k),
        Command::Mmin { q, n, k, bounds, ells, m_cap } => {
            let ells = ells.clone().unwrap_or_else(|| sweeps::divisors(*n));
            mmin_table(*q, *n, *k, bounds, &ells, *m_cap)
        }
        Command::Montecarlo { params, k, trials, predicate, d } => {
            let predicate = match (predicate, d) {
                (PredicateArg::Msrd, _) => Predicate::Msrd,
                (PredicateArg::MinDistance, Some(d)) => Predicate::MinDistanceAtLeast(*d),
                (PredicateArg::MinDistance, None) => {
                    return crate::error::invalid("--predicate min-distance needs --d");
                }
            };
            montecarlo_table(params.params()?, *k, *trials, config.seed, predicate)
        }
    }
}

fn volume_table(params: CodeParams, radius: Option<u64>) -> crate::Result<Table> {
    let radius = radius.unwrap_or(params.max_weight());
    let vt = VolumeTable::new(params, radius)?;
    let mut t = Table::new(vec!["t", "sphere", "ball"]);
    for r in 0..=radius {
        t.push(vec![r.into(), vt.sphere(r)?.into(), vt.ball(r)?.into()]);
    }
    Ok(t)
}

fn bounds_table(params: CodeParams, d: Option<u64>) -> crate::Result<Table> {
    let ds: Vec<u64> = match d {
        Some(d) => vec![d],
        None => (1..=params.max_weight()).collect(),
    };
    let radius = ds.iter().max().copied().unwrap_or(1) - 1;
    let vt = VolumeTable::new(params, radius)?;
    let mut t = Table::new(vec!["d", "singleton_max_k", "sp_max_k", "sp_simplified_max_k", "gv_max_k", "gv_simplified_max_k"]);
    for d in ds {
        t.push(vec![
            d.into(),
            singleton_max_k(&params, d)?.into(),
            sp_max_k(&vt, d)?.into(),
            sp_simplified_max_k(&params, d)?.into(),
            gv_max_k(&vt, d)?.into(),
            (d > 2).then(|| gv_simplified_max_k(&params, d)).transpose()?.into(),
        ]);
    }
    Ok(t)
}

fn curve_table(params: CodeParams, grid: u64, regime: Regime) -> crate::Result<Table> {
    let vt = VolumeTable::new(params, params.max_weight() - 1)?;
    let mut t = Table::new(CURVE_COLUMNS.to_vec());
    for r in sweeps::curve_rows(&vt, grid, regime)? {
        t.push(vec![
            r.delta.into(),
            r.singleton.into(),
            r.sp_exact.into(),
            r.sp_simplified.into(),
            r.sp_asymptotic.into(),
            r.gv_exact.into(),
            r.gv_simplified.into(),
            r.gv_asymptotic.into(),
            r.d.into(),
            r.sp_asymptotic_raw.into(),
            r.gv_asymptotic_raw.into(),
        ]);
    }
    Ok(t)
}

fn bound_row(name: &str, b: crate::Result<ProbabilityBound>) -> Vec<Cell> {
    match b {
        Ok(b) => vec![name.into(), b.lower.into(), b.upper.into(), b.raw_lower.into()],
        Err(_) => vec![name.into(), Cell::Empty, Cell::Empty, Cell::Empty],
    }
}

fn genericity_table(p: CodeParams, k: u64) -> crate::Result<Table> {
    // surfaces invalid k as an error; BR may still be undefined on its own
    msrd_prob_lb_A(p.q, p.m, p.eta, p.ell, k)?;
    let mut t = Table::new(vec!["bound", "lower", "upper", "raw_lower"]);
    t.push(bound_row("A", msrd_prob_lb_A(p.q, p.m, p.eta, p.ell, k)));
    t.push(bound_row("U_lemma", msrd_prob_lb_U(p.q, p.m, p.eta, p.ell, k, UVariant::Lemma)));
    t.push(bound_row("U_printed", msrd_prob_lb_U(p.q, p.m, p.eta, p.ell, k, UVariant::Printed)));
    t.push(bound_row("BR", msrd_prob_bounds_BR(&p, k)));
    Ok(t)
}

fn mmin_table(q: u64, n: u64, k: u64, bounds: &[BoundArg], ells: &[u64], cap: u64) -> crate::Result<Table> {
    let mut kinds = Vec::new();
    for b in bounds {
        match b {
            BoundArg::A => kinds.push(BoundKind::A),
            BoundArg::U => kinds.extend([BoundKind::ULemma, BoundKind::UPrinted]),
            BoundArg::ULemma => kinds.push(BoundKind::ULemma),
            BoundArg::UPrinted => kinds.push(BoundKind::UPrinted),
            BoundArg::Br => kinds.push(BoundKind::BrLower),
        }
    }
    if ells.is_empty() {
        return crate::error::invalid("the list of block counts is empty");
    }
    let mut t = Table::new(MMIN_COLUMNS.to_vec());
    for r in sweeps::mmin_rows(q, n, k, ells, &kinds, cap)? {
        t.push(vec![r.ell.into(), r.a.into(), r.u_lemma.into(), r.u_printed.into(), r.br.into()]);
    }
    Ok(t)
}

fn montecarlo_table(p: CodeParams, k: u64, trials: u64, seed: u64, predicate: Predicate) -> crate::Result<Table> {
    let r = monte_carlo(&p, k, trials, seed, predicate)?;
    let (name, d) = match predicate {
        Predicate::Msrd => ("msrd", p.n() - k + 1),
        Predicate::MinDistanceAtLeast(d) => ("min-distance", d),
        Predicate::Always => ("always", 0),
    };
    let lower = |b: crate::Result<ProbabilityBound>| b.ok().and_then(|b| b.lower);
    let msrd = predicate == Predicate::Msrd;
    let mut t = Table::new(vec![
        "predicate", "d", "trials", "successes", "estimate", "seed", "lower_A", "lower_U_lemma", "lower_BR",
    ]);
    t.push(vec![
        name.into(),
        d.into(),
        r.trials.into(),
        r.successes.into(),
        r.estimate.into(),
        r.seed.into(),
        msrd.then(|| lower(msrd_prob_lb_A(p.q, p.m, p.eta, p.ell, k))).flatten().into(),
        msrd.then(|| lower(msrd_prob_lb_U(p.q, p.m, p.eta, p.ell, k, UVariant::Lemma))).flatten().into(),
        msrd.then(|| lower(msrd_prob_bounds_BR(&p, k))).flatten().into(),
    ]);
    Ok(t)
}
