//! Exact evaluations of the classical design and code inequalities.
//!
//! Every right-hand side is an unrounded [`Rational`]; integer forms (ceiling
//! of a lower bound, floor of an upper bound) appear only in the notes.
//!
//! Functions whose subject quantity is not among their inputs (for example
//! the block count in Stanton-Kalbfleisch) return a [`Bound`], which can be
//! checked against a concrete value with [`Bound::check`]. The rest return a
//! [`BoundReport`] directly.

use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::designs::{BibdParams, Violation};
use crate::moments::{self, MomentSummary, MomentsError, ShiftContext};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("parameters out of range: {0}")]
    Domain(String),
    #[error("BIBD parameters {params} fail: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Parameters { params: BibdParams, violations: Vec<Violation> },
    #[error(transparent)]
    Moments(#[from] MomentsError),
}

fn domain(msg: impl Into<String>) -> BoundsError {
    BoundsError::Domain(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundName {
    Fisher,
    Mann,
    PlackettBurman,
    OaRepeated,
    Johnson,
    JohnsonCode,
    JohnsonImproved,
    StantonKalbfleisch,
    ErdosDeBruijn,
    MullinVanstone,
    Nonincident,
    West,
    Stinson,
    TwoPoint,
}

impl BoundName {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::Fisher => "fisher",
            BoundName::Mann => "mann",
            BoundName::PlackettBurman => "plackett-burman",
            BoundName::OaRepeated => "oa-repeated",
            BoundName::Johnson => "johnson",
            BoundName::JohnsonCode => "johnson-code",
            BoundName::JohnsonImproved => "johnson-improved",
            BoundName::StantonKalbfleisch => "stanton-kalbfleisch",
            BoundName::ErdosDeBruijn => "erdos-de-bruijn",
            BoundName::MullinVanstone => "mullin-vanstone",
            BoundName::Nonincident => "nonincident",
            BoundName::West => "west",
            BoundName::Stinson => "stinson",
            BoundName::TwoPoint => "two-point",
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    AtLeast,
    AtMost,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtLeast => ">=",
            Relation::AtMost => "<=",
        }
    }
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

/// A threshold on a named quantity, not yet compared with a value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub name: BoundName,
    pub quantity: String,
    pub relation: Relation,
    pub rhs: Rational,
    pub notes: Vec<String>,
}

impl Bound {
    fn new(name: BoundName, quantity: &str, relation: Relation, rhs: Rational) -> Self {
        let mut b = Bound { name, quantity: quantity.to_string(), relation, rhs, notes: Vec::new() };
        b.notes.push(integer_form(quantity, relation, &b.rhs));
        b
    }

    /// Integer form of the bound: ceiling for lower bounds, floor for upper.
    pub fn integer_threshold(&self) -> BigInt {
        match self.relation {
            Relation::AtLeast => self.rhs.ceil(),
            Relation::AtMost => self.rhs.floor(),
        }
    }

    pub fn check(&self, lhs: impl Into<Rational>) -> BoundReport {
        let mut report = BoundReport::new(self.name, &self.quantity, self.relation, lhs.into(), self.rhs.clone());
        report.notes = self.notes.clone();
        report
    }
}

fn integer_form(quantity: &str, relation: Relation, rhs: &Rational) -> String {
    let v = match relation {
        Relation::AtLeast => rhs.ceil(),
        Relation::AtMost => rhs.floor(),
    };
    format!("integer form: {quantity} {} {v}", relation.symbol())
}

/// A bound compared with a concrete left-hand side. `slack` is oriented so
/// that `slack >= 0` exactly when the bound holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: BoundName,
    pub quantity: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub relation: Relation,
    pub satisfied: bool,
    pub slack: Rational,
    pub equality: bool,
    pub notes: Vec<String>,
}

impl BoundReport {
    fn new(name: BoundName, quantity: &str, relation: Relation, lhs: Rational, rhs: Rational) -> Self {
        let slack = match relation {
            Relation::AtLeast => &lhs - &rhs,
            Relation::AtMost => &rhs - &lhs,
        };
        BoundReport {
            name,
            quantity: quantity.to_string(),
            satisfied: !slack.is_negative(),
            equality: slack.is_zero(),
            lhs,
            rhs,
            relation,
            slack,
            notes: Vec::new(),
        }
    }

    fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }
}

/// Outcome of a bound that carries a "provided that" condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Checked<T> {
    Applies(T),
    Inapplicable { name: BoundName, reason: String },
}

impl<T> Checked<T> {
    pub fn applies(self) -> Option<T> {
        match self {
            Checked::Applies(t) => Some(t),
            Checked::Inapplicable { .. } => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Checked<U> {
        match self {
            Checked::Applies(t) => Checked::Applies(f(t)),
            Checked::Inapplicable { name, reason } => Checked::Inapplicable { name, reason },
        }
    }
}

fn q(n: u64) -> Rational {
    Rational::from(n)
}

fn qi(n: i64) -> Rational {
    Rational::from(n)
}

fn frac(num: Rational, den: Rational) -> Rational {
    num.checked_div(&den).expect("denominator checked positive by caller")
}

fn check_bibd(p: &BibdParams) -> Result<(), BoundsError> {
    let violations = p.identity_violations();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(BoundsError::Parameters { params: *p, violations })
    }
}

/// `S_0·S_2 − S_1²` for the intersection sizes of the other blocks with one
/// fixed block, using the counting values `S_0 = b−1`, `S_1 = k(r−1)` and
/// `S_2 = k(k−1)(λ−1) + k(r−1)`.
pub fn fisher_variance_slack(p: &BibdParams) -> Result<Rational, BoundsError> {
    check_bibd(p)?;
    let (k, r, lambda) = (qi(p.k as i64), qi(p.r as i64), qi(p.lambda as i64));
    let s1 = &k * (&r - q(1));
    let s2 = &k * (&k - q(1)) * (&lambda - q(1)) + &s1;
    Ok(moments::variance_slack(&MomentSummary::from_sums(p.b - 1, s1, s2))?)
}

/// `(r−k)(v−k)(r−λ)`.
pub fn fisher_certificate(p: &BibdParams) -> Rational {
    let (v, r, k, l) = (p.v as i64, p.r as i64, p.k as i64, p.lambda as i64);
    qi(r - k) * qi(v - k) * qi(r - l)
}

/// `b ≥ v` for a `(v,b,r,k,λ)`-BIBD.
pub fn fisher(p: &BibdParams) -> Result<BoundReport, BoundsError> {
    check_bibd(p)?;
    let cert = fisher_certificate(p);
    let mut report = BoundReport::new(BoundName::Fisher, "b", Relation::AtLeast, q(p.b), q(p.v))
        .note(format!("factorized certificate (r-k)(v-k)(r-lambda) = {cert}"));
    if p.b > 1 {
        let slack = fisher_variance_slack(p)?;
        report = report.note(format!("variance slack S0*S2 - S1^2 = {slack}"));
    }
    if p.k < p.v {
        report = report.note("k < v forces (v-k)(r-lambda) > 0, so the certificate reduces to r >= k");
    }
    if p.b == p.v {
        report = report.note(format!("symmetric design: any two blocks meet in exactly lambda = {} points", p.lambda));
    }
    Ok(report)
}

/// `b ≥ s·v` when some block occurs `s` times.
pub fn mann(p: &BibdParams, multiplicity: u64) -> Result<BoundReport, BoundsError> {
    if multiplicity < 1 {
        return Err(domain("block multiplicity must be at least 1"));
    }
    check_bibd(p)?;
    let report = BoundReport::new(BoundName::Mann, "b", Relation::AtLeast, q(p.b), q(multiplicity * p.v));
    Ok(if report.satisfied {
        report
    } else {
        report.note(format!("no block of this design can occur {multiplicity} times"))
    })
}

fn oa_domain(k: u64, n: u64, lambda: u64) -> Result<(), BoundsError> {
    if k < 2 || n < 2 || lambda < 1 {
        return Err(domain(format!("need k >= 2, n >= 2, lambda >= 1 (got k={k}, n={n}, lambda={lambda})")));
    }
    Ok(())
}

/// `λ ≥ (k(n−1)+1)/n²` for an `OA_λ(k,n)`.
pub fn plackett_burman(k: u64, n: u64, lambda: u64) -> Result<BoundReport, BoundsError> {
    oa_domain(k, n, lambda)?;
    let rhs = frac(q(k * (n - 1) + 1), q(n * n));
    let kmax = frac(q(lambda * n * n - 1), q(n - 1));
    Ok(BoundReport::new(BoundName::PlackettBurman, "lambda", Relation::AtLeast, q(lambda), rhs)
        .note(format!("equivalently k <= (lambda*n^2 - 1)/(n - 1) = {kmax}")))
}

/// `λ ≥ m(k(n−1)+1)/n²` for an `OA_λ(k,n)` with a row repeated `m` times.
pub fn oa_repeated_row(k: u64, n: u64, lambda: u64, m: u64) -> Result<BoundReport, BoundsError> {
    oa_domain(k, n, lambda)?;
    if m < 1 {
        return Err(domain("row multiplicity m must be at least 1"));
    }
    let rhs = frac(q(m * (k * (n - 1) + 1)), q(n * n));
    Ok(BoundReport::new(BoundName::OaRepeated, "lambda", Relation::AtLeast, q(lambda), rhs))
}

/// `m ≤ n(r−λ)/(r²−nλ)` for an `m × n` 0-1 matrix with row weight `r` and
/// pairwise row inner products at most `λ`, provided `r² − nλ > 0`.
pub fn johnson_matrix(m: u64, n: u64, r: u64, lambda: u64) -> Result<Checked<BoundReport>, BoundsError> {
    if r <= lambda {
        return Err(domain(format!("need r > lambda (got r={r}, lambda={lambda})")));
    }
    if m < 1 || n < 1 {
        return Err(domain("need m, n >= 1"));
    }
    let den = qi((r * r) as i64 - (n * lambda) as i64);
    if !den.is_positive() {
        return Ok(Checked::Inapplicable {
            name: BoundName::Johnson,
            reason: format!("r^2 - n*lambda = {den}"),
        });
    }
    let rhs = frac(q(n * (r - lambda)), den);
    let mut report = BoundReport::new(BoundName::Johnson, "m", Relation::AtMost, q(m), rhs);
    let int = integer_form("m", Relation::AtMost, &report.rhs);
    report.notes.push(int);
    Ok(Checked::Applies(report))
}

/// Upper bound on the size of an `[n, r, 2δ]` constant weight code, provided
/// `r² − n(r−δ) > 0`.
pub fn johnson_code(n: u64, r: u64, delta: u64) -> Result<Checked<Bound>, BoundsError> {
    if delta == 0 || r <= delta {
        return Err(domain(format!("need r > delta > 0 (got r={r}, delta={delta})")));
    }
    let den = qi((r * r) as i64 - (n * (r - delta)) as i64);
    if !den.is_positive() {
        return Ok(Checked::Inapplicable {
            name: BoundName::JohnsonCode,
            reason: format!("r^2 - n(r-delta) = {den}"),
        });
    }
    let rhs = frac(q(n * delta), den);
    Ok(Checked::Applies(Bound::new(BoundName::JohnsonCode, "|C|", Relation::AtMost, rhs)))
}

fn pbd_domain(v: u64, k: u64) -> Result<(), BoundsError> {
    if k < 2 || k >= v {
        return Err(domain(format!("need 2 <= k < v (got v={v}, k={k})")));
    }
    Ok(())
}

/// `b ≥ 1 + k²(v−k)/(v−1)` for a PBD on `v` points with a block of size `k`.
pub fn stanton_kalbfleisch(v: u64, k: u64) -> Result<Bound, BoundsError> {
    pbd_domain(v, k)?;
    let rhs = q(1) + frac(q(k * k * (v - k)), q(v - 1));
    let mut bound = Bound::new(BoundName::StantonKalbfleisch, "b", Relation::AtLeast, rhs);
    let size = q(1) + frac(q(v - 1), q(k));
    if size.is_integer() {
        bound.notes.push(format!("equality block size {size}"));
    } else {
        bound.notes.push(format!("equality block size {size} is not an integer, so equality is impossible"));
    }
    Ok(bound)
}

/// Certified lower bound on `b − v` from Stanton-Kalbfleisch:
/// `−(v−(k+1))(v−(k²−k+1))/(v−1)`.
pub fn erdos_de_bruijn_slack(v: u64, k: u64) -> Result<Rational, BoundsError> {
    pbd_domain(v, k)?;
    let (vi, ki) = (v as i64, k as i64);
    let num = -qi(vi - (ki + 1)) * qi(vi - (ki * ki - ki + 1));
    Ok(frac(num, qi(vi - 1)))
}

/// `b − v ≥ erdos_de_bruijn_slack(v, k)`.
pub fn erdos_de_bruijn(v: u64, k: u64) -> Result<Bound, BoundsError> {
    let rhs = erdos_de_bruijn_slack(v, k)?;
    let mut bound = Bound::new(BoundName::ErdosDeBruijn, "b - v", Relation::AtLeast, rhs);
    if v <= k * k - k + 1 {
        bound.notes.push("k+1 <= v <= k^2-k+1, so b >= v".to_string());
    }
    if v == k + 1 {
        bound.notes.push("b = v only for a near-pencil".to_string());
    }
    if v == k * k - k + 1 {
        bound.notes.push(format!("b = v only for a projective plane of order {}", k - 1));
    }
    Ok(bound)
}

/// `b ≥ r²v/(r + λ(v−1))` for an `(r,λ)`-design on `v` points.
pub fn mullin_vanstone(v: u64, r: u64, lambda: u64) -> Result<Bound, BoundsError> {
    if v < 1 || r < 1 || lambda < 1 {
        return Err(domain(format!("need v, r, lambda >= 1 (got v={v}, r={r}, lambda={lambda})")));
    }
    let rhs = frac(q(r * r * v), q(r + lambda * (v - 1)));
    Ok(Bound::new(BoundName::MullinVanstone, "b", Relation::AtLeast, rhs))
}

/// `s` points and `t` lines of a projective plane of order `q`, no chosen
/// point on a chosen line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlaneNonincidence {
    pub q: u64,
    pub s: u64,
    pub t: u64,
}

/// `t ≤ (q³+q²+q−qs)/(q+s)` as a [`Bound`] on the line count.
pub fn nonincident_lines(order: u64, s: u64) -> Result<Bound, BoundsError> {
    if order < 2 || s < 1 || s > order * order + order + 1 {
        return Err(domain(format!("need q >= 2 and 1 <= s <= q^2+q+1 (got q={order}, s={s})")));
    }
    let num = qi((order.pow(3) + order * order + order) as i64 - (order * s) as i64);
    Ok(Bound::new(BoundName::Nonincident, "t", Relation::AtMost, frac(num, q(order + s))))
}

pub fn nonincident_lines_bound(p: &PlaneNonincidence) -> Result<BoundReport, BoundsError> {
    Ok(nonincident_lines(p.q, p.s)?.check(p.t))
}

/// Largest `s` with `s = t` admissible in the nonincidence bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WestBound {
    pub q: u64,
    /// `1 + (q+1)(√q − 1)`, present when `q` is a perfect square.
    pub closed_form: Option<Rational>,
    /// Largest integer `s ∈ [1, q²+q+1]` with `s(q+s) ≤ q³+q²+q−qs`.
    pub integer_max: u64,
}

pub fn west_diagonal_bound(order: u64) -> Result<WestBound, BoundsError> {
    if order < 2 {
        return Err(domain(format!("need q >= 2 (got q={order})")));
    }
    let closed_form = q(order)
        .sqrt_exact()
        .map(|root| q(1) + q(order + 1) * (root - q(1)));
    let total = (order.pow(3) + order * order + order) as i128;
    let o = order as i128;
    let integer_max = (1..=order * order + order + 1)
        .filter(|&s| {
            let s = s as i128;
            s * (o + s) <= total - o * s
        })
        .max()
        .expect("s = 1 always satisfies the inequality for q >= 2");
    Ok(WestBound { q: order, closed_form, integer_max })
}

/// `b ≥ 1 + (2ℓk − v + k + 1)(v−k)/(ℓ²+ℓ)` for any integer `ℓ ∉ {−1, 0}`.
pub fn stinson_bound(v: u64, k: u64, ell: i64) -> Result<Bound, BoundsError> {
    pbd_domain(v, k)?;
    if ell == 0 || ell == -1 {
        return Err(domain(format!("ell = {ell} makes ell^2 + ell vanish")));
    }
    let (vi, ki) = (v as i64, k as i64);
    let ell_r = qi(ell);
    let num = (qi(2) * &ell_r * qi(ki) - qi(vi) + qi(ki) + qi(1)) * qi(vi - ki);
    let den = &ell_r * &ell_r + &ell_r;
    let rhs = q(1) + frac(num, den);
    let mut bound = Bound::new(BoundName::Stinson, "b", Relation::AtLeast, rhs);
    bound.notes.push(format!("ell = {ell}"));
    Ok(bound)
}

/// `⌊(v−1)/k⌋`, the shift giving the strongest Stinson bound.
pub fn stinson_best_ell(v: u64, k: u64) -> Result<i64, BoundsError> {
    pbd_domain(v, k)?;
    Ok(((v - 1) / k) as i64)
}

fn johnson_improved_sides(m: u64, n: u64, r: u64, lambda: u64) -> (i128, i128, ShiftContext) {
    let shift = ShiftContext::for_column_sum(m * r, n);
    let (l, t) = (shift.ell as i128, shift.remainder as i128);
    let (m, n, r, lambda) = (m as i128, n as i128, r as i128, lambda as i128);
    let lhs = m * (m - 1) * lambda;
    let rhs = (n - t) * l * l + t * (l + 1) * (l + 1) - m * r;
    (lhs, rhs, shift)
}

/// Necessary condition `m(m−1)λ ≥ (n−t)ℓ² + t(ℓ+1)² − mr` with
/// `ℓ = ⌊mr/n⌋`, `t = mr − nℓ`.
pub fn johnson_improved_check(m: u64, n: u64, r: u64, lambda: u64) -> Result<BoundReport, BoundsError> {
    if r <= lambda || m < 1 || n < 1 {
        return Err(domain(format!("need r > lambda >= 0 and m, n >= 1 (got m={m}, n={n}, r={r}, lambda={lambda})")));
    }
    let (lhs, rhs, shift) = johnson_improved_sides(m, n, r, lambda);
    Ok(BoundReport::new(
        BoundName::JohnsonImproved,
        "m(m-1)lambda",
        Relation::AtLeast,
        Rational::from(lhs),
        Rational::from(rhs),
    )
    .note(format!("ell = {}, t = {}", shift.ell, shift.remainder)))
}

/// Largest row count allowed by [`johnson_improved_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MaxRows {
    /// Every `m` above `scan_limit` fails, so the scan below it is exhaustive.
    Finite {
        max_m: u64,
        scan_limit: u64,
        /// Values `m < max_m` for which the condition fails.
        gaps: Vec<u64>,
    },
    /// With `r² ≤ nλ` the condition holds for all large `m`; only the count
    /// of distinct weight-`r` rows, `C(n, r)`, limits the matrix.
    Unbounded { distinct_rows: u128 },
}

impl MaxRows {
    pub fn finite(&self) -> Option<u64> {
        match self {
            MaxRows::Finite { max_m, .. } => Some(*max_m),
            MaxRows::Unbounded { .. } => None,
        }
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Scans `m = 1, 2, ...` up to the point past which the condition provably
/// fails: writing `g` for the balanced column-square sum, `g(mr) ≥ (mr)²/n`,
/// so every `m > n(r−λ)/(r²−nλ)` fails when `r² > nλ`.
pub fn johnson_improved_max_m(n: u64, r: u64, lambda: u64) -> Result<MaxRows, BoundsError> {
    if r <= lambda || n < 1 || r > n {
        return Err(domain(format!("need n >= r > lambda >= 0 (got n={n}, r={r}, lambda={lambda})")));
    }
    let den = (r * r) as i128 - (n * lambda) as i128;
    if den <= 0 {
        return Ok(MaxRows::Unbounded { distinct_rows: binomial(n, r) });
    }
    let scan_limit = ((n * (r - lambda)) as i128 / den) as u64;
    let ok: Vec<bool> = (1..=scan_limit)
        .map(|m| {
            let (lhs, rhs, _) = johnson_improved_sides(m, n, r, lambda);
            lhs >= rhs
        })
        .collect();
    let max_m = ok.iter().rposition(|&b| b).map(|i| i as u64 + 1).unwrap_or(0);
    let gaps = (1..max_m).filter(|&m| !ok[m as usize - 1]).collect();
    Ok(MaxRows::Finite { max_m, scan_limit, gaps })
}

/// `ε/((k−1)(1−ε)+1)`, the failure probability bound for two-point sampling
/// with `k` runs when a fraction `ε` of seeds is bad.
pub fn two_point_error_bound(k: u64, eps: &Rational) -> Result<Rational, BoundsError> {
    if k < 1 {
        return Err(domain("need k >= 1"));
    }
    if eps.is_negative() || eps > &q(1) {
        return Err(domain(format!("need 0 <= eps <= 1 (got {eps})")));
    }
    let den = q(k - 1) * (q(1) - eps) + q(1);
    Ok(frac(eps.clone(), den))
}
