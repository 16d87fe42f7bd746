use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::ArgGroup;
use serde::Serialize;
use vardesign::designs::{validate_bibd, validate_oa, validate_pbd, validate_r_lambda, BibdParams, RLambdaParams};
use vardesign::designs::{ValidationReport, Violation};
use vardesign::formats::{parse_design, parse_oa};

use crate::render;

#[derive(clap::Args)]
#[command(group(ArgGroup::new("family").required(true).args(["bibd", "pbd", "oa", "rlambda"])))]
pub struct Args {
    path: PathBuf,
    /// Check a (v,b,r,k,lambda)-BIBD
    #[arg(long, value_name = "V,B,R,K,LAMBDA", value_delimiter = ',')]
    bibd: Option<Vec<u64>>,
    /// Check a pairwise balanced design
    #[arg(long)]
    pbd: bool,
    /// Check an orthogonal array file
    #[arg(long)]
    oa: bool,
    /// Check an (r,lambda)-design
    #[arg(long, value_name = "R,LAMBDA", value_delimiter = ',')]
    rlambda: Option<Vec<u64>>,
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    family: &'static str,
    parameters: String,
    valid: bool,
    violations: &'a [Violation],
}

fn exactly<const N: usize>(values: &[u64], flag: &str) -> anyhow::Result<[u64; N]> {
    values
        .try_into()
        .map_err(|_| anyhow::anyhow!("--{flag} needs {N} comma-separated integers, got {}", values.len()))
}

pub fn run(args: Args) -> anyhow::Result<u8> {
    let text = std::fs::read_to_string(&args.path).with_context(|| format!("cannot read {}", args.path.display()))?;
    let (family, parameters, report): (&str, String, ValidationReport) = if args.oa {
        let oa = parse_oa(&text).with_context(|| format!("malformed array file {}", args.path.display()))?;
        let params = format!("OA_{}({},{})", oa.lambda(), oa.k(), oa.n());
        ("oa", params, validate_oa(&oa))
    } else {
        let inc = parse_design(&text).with_context(|| format!("malformed design file {}", args.path.display()))?;
        if let Some(vals) = &args.bibd {
            let [v, b, r, k, lambda] = exactly::<5>(vals, "bibd")?;
            let p = BibdParams::new(v, b, r, k, lambda);
            ("bibd", p.to_string(), validate_bibd(&inc, &p))
        } else if let Some(vals) = &args.rlambda {
            let [r, lambda] = exactly::<2>(vals, "rlambda")?;
            let p = RLambdaParams { v: inc.num_points() as u64, b: inc.num_blocks() as u64, r, lambda };
            ("rlambda", format!("(r,lambda) = ({r},{lambda})"), validate_r_lambda(&inc, &p))
        } else if args.pbd {
            let params = format!("v = {}, b = {}", inc.num_points(), inc.num_blocks());
            ("pbd", params, validate_pbd(&inc))
        } else {
            bail!("no design family given");
        }
    };
    let valid = report.is_valid();
    let out = if args.json {
        render::json(&VerifyOutput { family, parameters, valid, violations: &report.violations })?
    } else {
        let mut out = format!("{} {family} {parameters}\n", if valid { "valid" } else { "invalid" });
        for v in &report.violations {
            writeln!(out, "  {v}").unwrap();
        }
        out
    };
    print!("{out}");
    Ok(if valid { 0 } else { 1 })
}
