use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::Subcommand;
use serde::Serialize;
use vardesign::designs::IncidenceStructure;
use vardesign::formats::serialize_design;
use vardesign::oracle::{
    enumerate_bibds_with, enumerate_pbds_with_block_with, max_constant_weight_code, OracleError, SearchBudget,
    SearchStatus,
};

use crate::render;

#[derive(clap::Args)]
pub struct Args {
    #[command(subcommand)]
    family: Family,
    #[arg(long, default_value_t = 10_000_000, global = true)]
    max_nodes: u64,
    /// Stop after this many solutions (default: no limit)
    #[arg(long, global = true)]
    max_solutions: Option<u64>,
    /// Write each structure found as a design file into this directory
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Family {
    /// All (v,k,lambda)-BIBDs on labelled points
    Bibd {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: u64,
    },
    /// All PBDs on v points with a k-block and at most max-b blocks
    PbdWithBlock {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_b: usize,
    },
    /// Largest weight-r code of length n with minimum distance d
    CwCode {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Serialize)]
struct DesignSearch {
    family: &'static str,
    parameters: String,
    count: u64,
    nodes: u64,
    #[serde(flatten)]
    status: SearchStatus,
    files: Vec<String>,
}

#[derive(Serialize)]
struct CodeOutput {
    family: &'static str,
    parameters: String,
    status: &'static str,
    size: u64,
    nodes: u64,
    words: Vec<String>,
}

struct Writer<'a> {
    dir: Option<&'a Path>,
    prefix: &'static str,
    files: Vec<String>,
    error: Option<std::io::Error>,
}

impl Writer<'_> {
    fn write(&mut self, s: &IncidenceStructure) {
        let Some(dir) = self.dir else { return };
        if self.error.is_some() {
            return;
        }
        let name = format!("{}-{:06}.design", self.prefix, self.files.len() + 1);
        match std::fs::write(dir.join(&name), serialize_design(s)) {
            Ok(()) => self.files.push(name),
            Err(e) => self.error = Some(e),
        }
    }
}

fn status_text(s: &SearchStatus) -> String {
    match s {
        SearchStatus::Complete => "complete".into(),
        SearchStatus::Inadmissible(reason) => format!("inadmissible ({reason})"),
        SearchStatus::NodeLimit => "node budget exhausted".into(),
        SearchStatus::SolutionLimit => "solution limit reached".into(),
    }
}

fn word(mask: u64, n: usize) -> String {
    (0..n).map(|i| if mask >> i & 1 == 1 { '1' } else { '0' }).collect()
}

pub fn run(args: Args) -> anyhow::Result<u8> {
    let budget = SearchBudget::new(args.max_nodes, args.max_solutions.unwrap_or(u64::MAX))?;
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }
    let (family, parameters, prefix) = match &args.family {
        Family::Bibd { v, k, lambda } => ("bibd", format!("v={v} k={k} lambda={lambda}"), "bibd"),
        Family::PbdWithBlock { v, k, max_b } => ("pbd-with-block", format!("v={v} k={k} max_b={max_b}"), "pbd"),
        Family::CwCode { n, r, d } => ("cw-code", format!("n={n} r={r} d={d}"), "code"),
    };
    let mut writer = Writer { dir: args.out.as_deref(), prefix, files: Vec::new(), error: None };
    let stats = match args.family {
        Family::Bibd { v, k, lambda } => enumerate_bibds_with(v, k, lambda, budget, |s| writer.write(s))?,
        Family::PbdWithBlock { v, k, max_b } => {
            enumerate_pbds_with_block_with(v, k, max_b, budget, |s| writer.write(s))?
        }
        Family::CwCode { n, r, d } => return run_code(n, r, d, budget, &args, family, parameters),
    };
    if let Some(e) = writer.error {
        return Err(e).context("cannot write design file");
    }
    let out = if args.json {
        render::json(&DesignSearch {
            family,
            parameters,
            count: stats.solutions,
            nodes: stats.nodes,
            status: stats.status.clone(),
            files: writer.files,
        })?
    } else {
        let mut out = format!("search {family} {parameters}\n");
        writeln!(out, "found: {}", stats.solutions).unwrap();
        writeln!(out, "nodes: {}", stats.nodes).unwrap();
        writeln!(out, "status: {}", status_text(&stats.status)).unwrap();
        if let Some(dir) = &args.out {
            writeln!(out, "written: {} file(s) to {}", writer.files.len(), dir.display()).unwrap();
        }
        out
    };
    print!("{out}");
    Ok(match (stats.solutions, stats.status) {
        (n, _) if n > 0 => 0,
        (_, SearchStatus::NodeLimit) => 3,
        _ => 1,
    })
}

fn run_code(
    n: usize,
    r: usize,
    d: usize,
    budget: SearchBudget,
    args: &Args,
    family: &'static str,
    parameters: String,
) -> anyhow::Result<u8> {
    if r == 0 && args.out.is_some() {
        anyhow::bail!("--out needs r >= 1: a weight-0 word would be an empty block");
    }
    let found = match max_constant_weight_code(n, r, d, budget) {
        Ok(f) => f,
        Err(OracleError::BudgetExhausted { nodes, best_so_far }) => {
            let out = if args.json {
                render::json(&CodeOutput {
                    family,
                    parameters,
                    status: "node-limit",
                    size: best_so_far,
                    nodes,
                    words: Vec::new(),
                })?
            } else {
                format!(
                    "search {family} {parameters}\nstatus: node budget exhausted\nnodes: {nodes}\nbest size so far: {best_so_far}\n"
                )
            };
            print!("{out}");
            return Ok(3);
        }
        Err(e) => return Err(e.into()),
    };
    let words: Vec<String> = found.witness.iter().map(|&m| word(m, n)).collect();
    if let Some(dir) = &args.out {
        let blocks = found.witness.iter().map(|&m| (0..n).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>());
        let code = IncidenceStructure::new(n, blocks)?;
        std::fs::write(dir.join("code.design"), serialize_design(&code)).context("cannot write code file")?;
    }
    let out = if args.json {
        render::json(&CodeOutput { family, parameters, status: "complete", size: found.size, nodes: found.nodes, words })?
    } else {
        let mut out = format!("search {family} {parameters}\nmaximum size: {}\nnodes: {}\n", found.size, found.nodes);
        for w in &words {
            writeln!(out, "  {w}").unwrap();
        }
        out
    };
    print!("{out}");
    Ok(0)
}
