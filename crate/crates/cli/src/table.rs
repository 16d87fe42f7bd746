use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use anyhow::{anyhow, bail};
use clap::{Subcommand, ValueEnum};
use serde::Serialize;
use vardesign::bounds::{self, BoundsError, MaxRows};
use vardesign::Rational;

use crate::render;

/// Inclusive range written `a..b`, or a single value `a`.
#[derive(Clone, Debug)]
pub struct Span(RangeInclusive<u64>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad range bound {t:?}"));
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                Ok(Span(parse(a)?..=parse(b)?))
            }
            None => {
                let a = parse(s)?;
                Ok(Span(a..=a))
            }
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(clap::Args)]
pub struct Args {
    #[command(subcommand)]
    kind: Kind,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
}

#[derive(Subcommand)]
enum Kind {
    /// Johnson bound on constant weight codes
    JohnsonCode {
        #[arg(long)]
        n: Span,
        #[arg(long)]
        r: Span,
        #[arg(long)]
        delta: Span,
    },
    /// Largest m passing the shifted-moment condition
    JohnsonImprovedMaxM {
        #[arg(long)]
        n: Span,
        #[arg(long)]
        r: Span,
        #[arg(long)]
        lambda: Span,
    },
    /// Stanton-Kalbfleisch lower bound on PBD block counts
    StantonKalbfleisch {
        #[arg(long)]
        v: Span,
        #[arg(long)]
        k: Span,
    },
    /// Stinson bound at the best shift, next to Stanton-Kalbfleisch
    Stinson {
        #[arg(long)]
        v: Span,
        #[arg(long)]
        k: Span,
    },
}

#[derive(Clone, Serialize)]
#[serde(untagged)]
enum Cell {
    Int(u64),
    Signed(i64),
    Exact(Rational),
    Text(String),
}

impl Cell {
    fn show(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Signed(n) => n.to_string(),
            Cell::Exact(q) => q.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

struct Table {
    kind: &'static str,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

fn grid(spans: &[&Span]) -> anyhow::Result<Vec<Vec<u64>>> {
    for s in spans {
        if s.0.is_empty() {
            bail!("empty range {}..{}", s.0.start(), s.0.end());
        }
    }
    let mut out = vec![Vec::new()];
    for s in spans {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                s.0.clone().map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    Ok(out)
}

/// Domain errors skip the row; anything else is fatal.
fn skip_domain<T>(r: Result<T, BoundsError>) -> anyhow::Result<Option<T>> {
    match r {
        Ok(t) => Ok(Some(t)),
        Err(BoundsError::Domain(_)) => Ok(None),
        Err(e) => Err(anyhow!(e)),
    }
}

fn build(kind: Kind) -> anyhow::Result<Table> {
    let mut rows = Vec::new();
    let table = match kind {
        Kind::JohnsonCode { n, r, delta } => {
            for p in grid(&[&n, &r, &delta])? {
                let Some(checked) = skip_domain(bounds::johnson_code(p[0], p[1], p[2]))? else { continue };
                let (bound, floor) = match checked.applies() {
                    Some(b) => (Cell::Exact(b.rhs.clone()), Cell::Text(b.integer_threshold().to_string())),
                    None => (Cell::Text("inapplicable".into()), Cell::Text("-".into())),
                };
                rows.push(vec![Cell::Int(p[0]), Cell::Int(p[1]), Cell::Int(p[2]), bound, floor]);
            }
            Table { kind: "johnson-code", columns: vec!["n", "r", "delta", "bound", "floor"], rows }
        }
        Kind::JohnsonImprovedMaxM { n, r, lambda } => {
            for p in grid(&[&n, &r, &lambda])? {
                let Some(max) = skip_domain(bounds::johnson_improved_max_m(p[0], p[1], p[2]))? else { continue };
                let (m, gaps) = match max {
                    MaxRows::Finite { max_m, gaps, .. } => {
                        let g: Vec<String> = gaps.iter().map(|g| g.to_string()).collect();
                        (Cell::Int(max_m), Cell::Text(if g.is_empty() { "-".into() } else { g.join(" ") }))
                    }
                    MaxRows::Unbounded { distinct_rows } => {
                        (Cell::Text(format!("unbounded (C(n,r) = {distinct_rows})")), Cell::Text("-".into()))
                    }
                };
                rows.push(vec![Cell::Int(p[0]), Cell::Int(p[1]), Cell::Int(p[2]), m, gaps]);
            }
            Table { kind: "johnson-improved-max-m", columns: vec!["n", "r", "lambda", "max_m", "gaps"], rows }
        }
        Kind::StantonKalbfleisch { v, k } => {
            for p in grid(&[&v, &k])? {
                let Some(b) = skip_domain(bounds::stanton_kalbfleisch(p[0], p[1]))? else { continue };
                let ceil = Cell::Text(b.integer_threshold().to_string());
                rows.push(vec![Cell::Int(p[0]), Cell::Int(p[1]), Cell::Exact(b.rhs), ceil]);
            }
            Table { kind: "stanton-kalbfleisch", columns: vec!["v", "k", "bound", "ceil"], rows }
        }
        Kind::Stinson { v, k } => {
            for p in grid(&[&v, &k])? {
                let Some(ell) = skip_domain(bounds::stinson_best_ell(p[0], p[1]))? else { continue };
                let st = bounds::stinson_bound(p[0], p[1], ell)?;
                let sk = bounds::stanton_kalbfleisch(p[0], p[1])?;
                rows.push(vec![
                    Cell::Int(p[0]),
                    Cell::Int(p[1]),
                    Cell::Signed(ell),
                    Cell::Exact(st.rhs.clone()),
                    Cell::Text(st.integer_threshold().to_string()),
                    Cell::Exact(sk.rhs),
                ]);
            }
            Table { kind: "stinson", columns: vec!["v", "k", "ell", "bound", "ceil", "stanton_kalbfleisch"], rows }
        }
    };
    if table.rows.is_empty() {
        bail!("no parameter combination in range is in the domain of {}", table.kind);
    }
    Ok(table)
}

fn text(t: &Table) -> String {
    let cells: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(Cell::show).collect()).collect();
    let widths: Vec<usize> = (0..t.columns.len())
        .map(|i| cells.iter().map(|r| r[i].chars().count()).chain([t.columns[i].len()]).max().unwrap())
        .collect();
    let line = |vals: Vec<&str>| {
        let padded: Vec<String> = vals.iter().zip(&widths).map(|(v, w)| format!("{v:>w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(t.columns.clone());
    for r in &cells {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn csv(t: &Table) -> String {
    let mut out = t.columns.join(",") + "\n";
    for r in &t.rows {
        let vals: Vec<String> = r.iter().map(Cell::show).collect();
        writeln!(out, "{}", vals.join(",")).unwrap();
    }
    out
}

fn json(t: &Table) -> anyhow::Result<String> {
    #[derive(Serialize)]
    struct Out<'a> {
        kind: &'a str,
        rows: Vec<serde_json::Map<String, serde_json::Value>>,
    }
    let rows = t
        .rows
        .iter()
        .map(|r| {
            t.columns
                .iter()
                .zip(r)
                .map(|(c, v)| Ok((c.to_string(), serde_json::to_value(v)?)))
                .collect::<Result<_, serde_json::Error>>()
        })
        .collect::<Result<_, _>>()?;
    render::json(&Out { kind: t.kind, rows })
}

pub fn run(args: Args) -> anyhow::Result<u8> {
    let t = build(args.kind)?;
    let out = match args.format {
        Format::Text => text(&t),
        Format::Csv => csv(&t),
        Format::Json => json(&t)?,
    };
    print!("{out}");
    Ok(0)
}
