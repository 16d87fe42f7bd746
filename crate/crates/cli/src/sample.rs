use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::ArgGroup;
use vardesign::formats::parse_oa;
use vardesign::sampling::{exact_failure, simulate, SamplingError, SamplingReport, TwoPointInstance};

use crate::render;

#[derive(clap::Args)]
#[command(group(ArgGroup::new("source").required(true).args(["p", "oa"])))]
pub struct Args {
    /// Prime modulus for the built-in array
    #[arg(long, requires = "k")]
    p: Option<u64>,
    /// Columns of the built-in array
    #[arg(long, requires = "p")]
    k: Option<u64>,
    /// Array file to use instead of the built-in construction
    #[arg(long, conflicts_with_all = ["p", "k"])]
    oa: Option<PathBuf>,
    /// Comma-separated bad points; may be empty
    #[arg(long, default_value = "")]
    bad: String,
    /// Monte Carlo trials; omitted means exact enumeration only
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

fn bad_points(list: &str) -> anyhow::Result<Vec<usize>> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().with_context(|| format!("bad point {t:?} is not a nonnegative integer")))
        .collect()
}

fn text(r: &SamplingReport) -> String {
    let bad: Vec<String> = r.bad_points.iter().map(|b| b.to_string()).collect();
    let mut out = String::new();
    writeln!(out, "instance: n = {}, k = {}, bad = {{{}}}", r.n, r.k, bad.join(", ")).unwrap();
    writeln!(out, "epsilon: {}", render::rational(&r.epsilon)).unwrap();
    writeln!(out, "rows: {}", r.total_rows).unwrap();
    writeln!(out, "good rows: {} (lower bound {})", r.good_rows, render::rational(&r.good_row_lower_bound)).unwrap();
    let hist: Vec<String> = r.row_good_counts.iter().enumerate().map(|(b, c)| format!("{b}:{c}")).collect();
    writeln!(out, "good entries per row: {}", hist.join(" ")).unwrap();
    writeln!(out, "exact failure: {}", render::rational(&r.exact_failure)).unwrap();
    writeln!(out, "bound: {}", render::rational(&r.bound)).unwrap();
    if let Some(e) = &r.empirical {
        writeln!(
            out,
            "empirical failure: {} ({} failures in {} trials, seed {})",
            render::rational(&e.failure),
            e.failures,
            e.trials,
            e.seed
        )
        .unwrap();
    }
    writeln!(out, "exact <= bound: {}", render::yes_no(r.exact_failure <= r.bound)).unwrap();
    out
}

pub fn run(args: Args) -> anyhow::Result<u8> {
    let bad = bad_points(&args.bad)?;
    let inst = match (&args.oa, args.p, args.k) {
        (Some(path), _, _) => {
            let body = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
            let oa = parse_oa(&body).with_context(|| format!("malformed array file {}", path.display()))?;
            TwoPointInstance::from_array(oa, bad)?
        }
        (None, Some(p), Some(k)) => TwoPointInstance::linear(p, k, bad)?,
        _ => bail!("give either --p and --k, or --oa"),
    };
    let report = match args.trials {
        Some(t) => simulate(&inst, t, args.seed),
        None => exact_failure(&inst),
    };
    let report = match report {
        Ok(r) => r,
        Err(SamplingError::Invariant(msg)) => {
            eprintln!("invariant violated: {msg}");
            return Ok(4);
        }
        Err(e) => return Err(e.into()),
    };
    let out = if args.json { render::json(&report)? } else { text(&report) };
    print!("{out}");
    Ok(0)
}
