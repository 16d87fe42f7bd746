use anyhow::bail;
use clap::Subcommand;
use serde::Serialize;
use vardesign::bounds::{self, Bound, BoundReport, Checked, PlaneNonincidence};
use vardesign::designs::BibdParams;
use vardesign::Rational;

use crate::render;

#[derive(clap::Args)]
pub struct Args {
    #[command(subcommand)]
    which: Which,
    #[arg(long, global = true)]
    json: bool,
}

#[derive(clap::Args)]
struct Bibd {
    #[arg(long)]
    v: u64,
    #[arg(long)]
    b: u64,
    #[arg(long)]
    r: u64,
    #[arg(long)]
    k: u64,
    #[arg(long)]
    lambda: u64,
}

impl Bibd {
    fn params(&self) -> BibdParams {
        BibdParams::new(self.v, self.b, self.r, self.k, self.lambda)
    }
}

#[derive(Subcommand)]
enum Which {
    /// b >= v for a BIBD
    Fisher(Bibd),
    /// b >= s*v when some block is repeated s times
    Mann {
        #[command(flatten)]
        p: Bibd,
        #[arg(long)]
        s: u64,
    },
    /// lambda >= (k(n-1)+1)/n^2 for an OA_lambda(k,n)
    PlackettBurman {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        lambda: u64,
    },
    /// lambda >= m(k(n-1)+1)/n^2 with a row repeated m times
    OaRepeated {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        m: u64,
    },
    /// m <= n(r-lambda)/(r^2-n*lambda) for a 0-1 matrix
    Johnson {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        lambda: u64,
    },
    /// size of a constant weight code with distance 2*delta
    JohnsonCode {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        delta: u64,
        /// Code size to compare against the bound
        #[arg(long)]
        size: Option<u64>,
    },
    /// shifted-moment condition on m rows
    JohnsonImproved {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        lambda: u64,
    },
    /// b >= 1 + k^2(v-k)/(v-1) for a PBD with a k-block
    StantonKalbfleisch {
        #[arg(long)]
        v: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        b: Option<u64>,
    },
    /// lower bound on b - v for a PBD with a k-block
    ErdosDeBruijn {
        #[arg(long)]
        v: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        b: Option<u64>,
    },
    /// b >= r^2 v/(r + lambda(v-1)) for an (r,lambda)-design
    MullinVanstone {
        #[arg(long)]
        v: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        b: Option<u64>,
    },
    /// lines missing s points of a projective plane of order q
    Nonincident {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        t: Option<u64>,
    },
    /// largest s = t allowed by the nonincidence bound
    West {
        #[arg(long)]
        q: u64,
    },
    /// b >= 1 + (2lk - v + k + 1)(v-k)/(l^2+l)
    Stinson {
        #[arg(long)]
        v: u64,
        #[arg(long)]
        k: u64,
        /// Shift; defaults to floor((v-1)/k)
        #[arg(long, allow_negative_numbers = true)]
        ell: Option<i64>,
        #[arg(long)]
        b: Option<u64>,
    },
    /// failure probability of two-point sampling
    TwoPoint {
        #[arg(long)]
        k: u64,
        /// Fraction of bad seeds, e.g. 2/5 or 0.4
        #[arg(long)]
        eps: Rational,
    },
}

enum Outcome {
    Report(BoundReport),
    Open(Bound),
    Value { text: String, json: String },
}

#[derive(Serialize)]
struct WestOutput {
    name: &'static str,
    q: u64,
    closed_form: Option<Rational>,
    integer_max: u64,
}

impl WestOutput {
    fn text(&self) -> String {
        let closed = match &self.closed_form {
            Some(c) => render::rational(c),
            None => "none (q is not a square)".to_string(),
        };
        format!("bound: west\nq: {}\nclosed form: {closed}\nlargest integer s: {}\n", self.q, self.integer_max)
    }
}

#[derive(Serialize)]
struct TwoPointOutput {
    name: &'static str,
    k: u64,
    epsilon: Rational,
    bound: Rational,
}

impl TwoPointOutput {
    fn text(&self) -> String {
        format!(
            "bound: two-point\nk: {}\nepsilon: {}\nfailure probability <= {}\n",
            self.k,
            render::rational(&self.epsilon),
            render::rational(&self.bound)
        )
    }
}

fn applies<T>(c: Checked<T>) -> anyhow::Result<T> {
    match c {
        Checked::Applies(t) => Ok(t),
        Checked::Inapplicable { reason, .. } => bail!("inapplicable: {reason}"),
    }
}

fn open_or_checked(b: Bound, lhs: Option<Rational>) -> Outcome {
    match lhs {
        Some(x) => Outcome::Report(b.check(x)),
        None => Outcome::Open(b),
    }
}

fn evaluate(which: Which) -> anyhow::Result<Outcome> {
    Ok(match which {
        Which::Fisher(p) => Outcome::Report(bounds::fisher(&p.params())?),
        Which::Mann { p, s } => Outcome::Report(bounds::mann(&p.params(), s)?),
        Which::PlackettBurman { k, n, lambda } => Outcome::Report(bounds::plackett_burman(k, n, lambda)?),
        Which::OaRepeated { k, n, lambda, m } => Outcome::Report(bounds::oa_repeated_row(k, n, lambda, m)?),
        Which::Johnson { m, n, r, lambda } => Outcome::Report(applies(bounds::johnson_matrix(m, n, r, lambda)?)?),
        Which::JohnsonCode { n, r, delta, size } => {
            open_or_checked(applies(bounds::johnson_code(n, r, delta)?)?, size.map(Rational::from))
        }
        Which::JohnsonImproved { m, n, r, lambda } => {
            Outcome::Report(bounds::johnson_improved_check(m, n, r, lambda)?)
        }
        Which::StantonKalbfleisch { v, k, b } => {
            open_or_checked(bounds::stanton_kalbfleisch(v, k)?, b.map(Rational::from))
        }
        Which::ErdosDeBruijn { v, k, b } => {
            let lhs = b.map(|b| Rational::from(b) - Rational::from(v));
            open_or_checked(bounds::erdos_de_bruijn(v, k)?, lhs)
        }
        Which::MullinVanstone { v, r, lambda, b } => {
            open_or_checked(bounds::mullin_vanstone(v, r, lambda)?, b.map(Rational::from))
        }
        Which::Nonincident { q, s, t } => match t {
            Some(t) => Outcome::Report(bounds::nonincident_lines_bound(&PlaneNonincidence { q, s, t })?),
            None => Outcome::Open(bounds::nonincident_lines(q, s)?),
        },
        Which::West { q } => {
            let w = bounds::west_diagonal_bound(q)?;
            let out = WestOutput { name: "west", q: w.q, closed_form: w.closed_form, integer_max: w.integer_max };
            Outcome::Value { text: out.text(), json: render::json(&out)? }
        }
        Which::Stinson { v, k, ell, b } => {
            let ell = match ell {
                Some(l) => l,
                None => bounds::stinson_best_ell(v, k)?,
            };
            open_or_checked(bounds::stinson_bound(v, k, ell)?, b.map(Rational::from))
        }
        Which::TwoPoint { k, eps } => {
            let bound = bounds::two_point_error_bound(k, &eps)?;
            let out = TwoPointOutput { name: "two-point", k, epsilon: eps, bound };
            Outcome::Value { text: out.text(), json: render::json(&out)? }
        }
    })
}

pub fn run(args: Args) -> anyhow::Result<u8> {
    let outcome = evaluate(args.which)?;
    let (out, code) = match &outcome {
        Outcome::Report(r) => {
            let text = if args.json { render::json(r)? } else { render::report(r) };
            (text, if r.satisfied { 0 } else { 1 })
        }
        Outcome::Open(b) => (if args.json { render::json(b)? } else { render::bound(b) }, 0),
        Outcome::Value { text, json } => (if args.json { json.clone() } else { text.clone() }, 0),
    };
    print!("{out}");
    Ok(code)
}
