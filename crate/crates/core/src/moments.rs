//! Power sums of a value list and the nonnegativity inequalities built on them.
//!
//! For values `a_1..a_n` write `S_j = Σ a_i^j` and `S* = Σ C(a_i, 2)`. The
//! central fact is `S_0·S_2 − S_1² = S_0·Σ(a_i − ā)² ≥ 0`; every bound in
//! [`crate::bounds`] is this inequality with design-specific sums plugged in.

use num_bigint::BigInt;
use thiserror::Error;

pub use crate::rational::{ratio, Rational, RationalError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MomentsError {
    #[error("value list is empty")]
    Empty,
    #[error("lower bound B must be positive, got {0}")]
    NonPositiveLowerBound(Rational),
    #[error("C = {c} is smaller than B = {b}")]
    CBelowB { b: Box<Rational>, c: Box<Rational> },
    #[error("slack epsilon must be nonnegative, got {0}")]
    NegativeEpsilon(Rational),
    #[error(transparent)]
    Arithmetic(#[from] RationalError),
}

/// `(S_0, S_1, S_2, S*)` and the mean of a value list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSummary {
    pub s0: u64,
    pub s1: Rational,
    pub s2: Rational,
    pub sstar: Rational,
    /// `S_1 / S_0`; `None` only for hand-built summaries with `s0 == 0`.
    pub mean: Option<Rational>,
}

impl MomentSummary {
    /// Builds a summary from sums obtained by counting rather than from an
    /// explicit list. `S*` is derived as `(S_2 − S_1)/2`.
    pub fn from_sums(s0: u64, s1: Rational, s2: Rational) -> Self {
        let sstar = (&s2 - &s1) / Rational::from(2);
        let mean = (s0 > 0).then(|| &s1 / Rational::from(s0));
        MomentSummary { s0, s1, s2, sstar, mean }
    }
}

pub fn summarize(values: &[Rational]) -> Result<MomentSummary, MomentsError> {
    if values.is_empty() {
        return Err(MomentsError::Empty);
    }
    let s1: Rational = values.iter().sum();
    let s2: Rational = values.iter().map(|a| a * a).sum();
    Ok(MomentSummary::from_sums(values.len() as u64, s1, s2))
}

pub fn summarize_integers(values: &[i64]) -> Result<MomentSummary, MomentsError> {
    let vals: Vec<Rational> = values.iter().map(|&a| Rational::from(a)).collect();
    summarize(&vals)
}

/// `S_0·S_2 − S_1²`. Nonnegative for any summary of a real list, zero exactly
/// when all values coincide.
pub fn variance_slack(ms: &MomentSummary) -> Result<Rational, MomentsError> {
    if ms.s0 == 0 {
        return Err(MomentsError::Empty);
    }
    Ok(Rational::from(ms.s0) * &ms.s2 - &ms.s1 * &ms.s1)
}

/// Data for the case where only a lower bound `S_1 ≥ B` is known:
/// `S_1 = B + ε` and `C = 2S* + B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundContext {
    b: Rational,
    c: Rational,
    epsilon: Rational,
}

impl LowerBoundContext {
    pub fn new(b: Rational, c: Rational, epsilon: Rational) -> Result<Self, MomentsError> {
        if !b.is_positive() {
            return Err(MomentsError::NonPositiveLowerBound(b));
        }
        if c < b {
            return Err(MomentsError::CBelowB { b: Box::new(b), c: Box::new(c) });
        }
        if epsilon.is_negative() {
            return Err(MomentsError::NegativeEpsilon(epsilon));
        }
        Ok(LowerBoundContext { b, c, epsilon })
    }

    /// Context for a summary whose `S_1` is known to be at least `b`.
    pub fn from_summary(ms: &MomentSummary, b: Rational) -> Result<Self, MomentsError> {
        let c = Rational::from(2) * &ms.sstar + &b;
        let epsilon = &ms.s1 - &b;
        LowerBoundContext::new(b, c, epsilon)
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }
}

/// `S_0·C − B²`, nonnegative whenever the context comes from values `a_i ≥ 1`.
pub fn lower_bound_slack(s0: &Rational, ctx: &LowerBoundContext) -> Rational {
    s0 * &ctx.c - &ctx.b * &ctx.b
}

/// `(B+ε)²/(C+ε)`, increasing in `ε ≥ 0` when `C ≥ B > 0`.
pub fn f_epsilon(b: &Rational, c: &Rational, eps: &Rational) -> Result<Rational, MomentsError> {
    if !b.is_positive() {
        return Err(MomentsError::NonPositiveLowerBound(b.clone()));
    }
    if c < b {
        return Err(MomentsError::CBelowB { b: Box::new(b.clone()), c: Box::new(c.clone()) });
    }
    if eps.is_negative() {
        return Err(MomentsError::NegativeEpsilon(eps.clone()));
    }
    let num = (b + eps).pow(2);
    Ok(num.checked_div(&(c + eps))?)
}

/// `Σ (a_i − ℓ)(a_i − ℓ − 1)`. For integers this is a sum of products of
/// consecutive integers, so it is nonnegative and vanishes exactly when every
/// `a_i ∈ {ℓ, ℓ+1}`.
pub fn integer_shift_slack(values: &[i64], ell: i64) -> Result<Rational, MomentsError> {
    if values.is_empty() {
        return Err(MomentsError::Empty);
    }
    let ell = BigInt::from(ell);
    let total: BigInt = values
        .iter()
        .map(|&a| {
            let d = BigInt::from(a) - &ell;
            &d * (&d - 1)
        })
        .sum();
    Ok(Rational::from(total))
}

/// The shift `ℓ = ⌊mr/n⌋` and remainder `t` with `mr = nℓ + t`, `0 ≤ t < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftContext {
    pub ell: u64,
    pub remainder: u64,
}

impl ShiftContext {
    pub fn for_column_sum(total: u64, n: u64) -> Self {
        assert!(n > 0, "column count must be positive");
        ShiftContext { ell: total / n, remainder: total % n }
    }
}
