//! Two-point sampling over an orthogonal array of index one.
//!
//! A yes-biased algorithm is reduced to its set `Y` of bad seeds in `Z_n`.
//! Instead of `k` independent seeds we use the `k` entries of one uniformly
//! chosen row of an `OA_1(k, n)`; the run fails only when every entry of the
//! row is bad.
//!
//! Random rows are drawn with SplitMix64 (see [`SplitMix64`]); trial `i` of
//! a simulation with seed `s` uses the `i`-th output of the generator seeded
//! with `s`, so results do not depend on how trials are split across threads.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{two_point_error_bound, BoundsError};
use crate::designs::{validate_oa, OrthogonalArray};
use crate::oracle::{oa_linear, OracleError};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SamplingError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error("bad point {point} is outside Z_{n}")]
    BadPoint { point: usize, n: usize },
    #[error("the sampler needs an array of index 1, got lambda = {0}")]
    Index(usize),
    #[error("not an orthogonal array: {0}")]
    InvalidArray(String),
    #[error("need 1 <= k and 0 <= z <= n (got n={n}, k={k}, z={z})")]
    Domain { n: u64, k: u64, z: u64 },
    #[error("trial count must be at least 1")]
    NoTrials,
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// The generator of Steele, Lea and Flood: a Weyl sequence with step
/// `0x9E3779B97F4A7C15` passed through a 64-bit finaliser.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn mix(mut z: u64) -> u64 {
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Output number `index` (0-based) of the stream seeded with `seed`,
    /// without stepping through the earlier ones.
    pub fn nth_output(seed: u64, index: u64) -> u64 {
        Self::mix(seed.wrapping_add(index.wrapping_add(1).wrapping_mul(Self::GAMMA)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(Self::GAMMA);
        Self::mix(self.state)
    }

    /// Maps a 64-bit output to `0..bound` by the high half of `x·bound`.
    pub fn below(x: u64, bound: u64) -> u64 {
        ((x as u128 * bound as u128) >> 64) as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPointInstance {
    array: OrthogonalArray,
    bad: Vec<usize>,
    is_bad: Vec<bool>,
}

impl TwoPointInstance {
    /// Instance over the affine array `oa_linear(p, k)`.
    pub fn linear(p: u64, k: u64, bad: impl IntoIterator<Item = usize>) -> Result<Self, SamplingError> {
        Self::from_array(oa_linear(p, k)?, bad)
    }

    pub fn from_array(array: OrthogonalArray, bad: impl IntoIterator<Item = usize>) -> Result<Self, SamplingError> {
        if array.lambda() != 1 {
            return Err(SamplingError::Index(array.lambda()));
        }
        if let Some(v) = validate_oa(&array).violations.first() {
            return Err(SamplingError::InvalidArray(v.to_string()));
        }
        let n = array.n();
        let mut is_bad = vec![false; n];
        for point in bad {
            if point >= n {
                return Err(SamplingError::BadPoint { point, n });
            }
            is_bad[point] = true;
        }
        let bad = (0..n).filter(|&i| is_bad[i]).collect();
        Ok(TwoPointInstance { array, bad, is_bad })
    }

    pub fn array(&self) -> &OrthogonalArray {
        &self.array
    }

    pub fn n(&self) -> u64 {
        self.array.n() as u64
    }

    pub fn k(&self) -> u64 {
        self.array.k() as u64
    }

    pub fn bad_points(&self) -> &[usize] {
        &self.bad
    }

    /// `z = n − |Y|`.
    pub fn good_count(&self) -> u64 {
        self.n() - self.bad.len() as u64
    }

    /// `ε = |Y|/n`.
    pub fn epsilon(&self) -> Rational {
        Rational::new(self.bad.len() as u64, self.n()).expect("n > 0")
    }

    fn good_in_row(&self, row: &[usize]) -> usize {
        row.iter().filter(|&&s| !self.is_bad[s]).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Empirical {
    pub trials: u64,
    pub seed: u64,
    pub failures: u64,
    pub failure: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SamplingReport {
    pub n: u64,
    pub k: u64,
    pub bad_points: Vec<usize>,
    pub epsilon: Rational,
    pub total_rows: u64,
    /// `N`, rows with at least one good entry.
    pub good_rows: u64,
    pub exact_failure: Rational,
    pub bound: Rational,
    pub good_row_lower_bound: Rational,
    /// Entry `b` counts rows with exactly `b` good entries.
    pub row_good_counts: Vec<u64>,
    pub s1: u64,
    pub sstar: u64,
    pub empirical: Option<Empirical>,
}

/// `n²kz/((k−1)z + n)`, the lower bound on the number of rows containing a
/// good point.
pub fn good_row_lower_bound(n: u64, k: u64, z: u64) -> Result<Rational, SamplingError> {
    if n == 0 || k == 0 || z > n {
        return Err(SamplingError::Domain { n, k, z });
    }
    let num = Rational::from(n) * Rational::from(n) * Rational::from(k) * Rational::from(z);
    let den = Rational::from(k - 1) * Rational::from(z) + Rational::from(n);
    Ok(num / den)
}

/// Counts failing rows exhaustively and checks the count against both the
/// error bound and the good-row bound.
pub fn exact_failure(inst: &TwoPointInstance) -> Result<SamplingReport, SamplingError> {
    let k = inst.k();
    let mut hist = vec![0u64; k as usize + 1];
    for row in inst.array.rows() {
        hist[inst.good_in_row(row)] += 1;
    }
    let total_rows = inst.array.rows().len() as u64;
    let good_rows = total_rows - hist[0];
    let exact = Rational::new(hist[0], total_rows).expect("rows exist");
    let eps = inst.epsilon();
    let bound = two_point_error_bound(k, &eps)?;
    let lower = good_row_lower_bound(inst.n(), k, inst.good_count())?;
    if exact > bound {
        return Err(SamplingError::Invariant(format!("exact failure {exact} exceeds bound {bound}")));
    }
    if Rational::from(good_rows) < lower {
        return Err(SamplingError::Invariant(format!("N = {good_rows} is below {lower}")));
    }
    let s1 = hist.iter().enumerate().map(|(b, &c)| b as u64 * c).sum();
    let sstar = hist.iter().enumerate().map(|(b, &c)| (b as u64 * b.saturating_sub(1) as u64 / 2) * c).sum();
    Ok(SamplingReport {
        n: inst.n(),
        k,
        bad_points: inst.bad.clone(),
        epsilon: eps,
        total_rows,
        good_rows,
        exact_failure: exact,
        bound,
        good_row_lower_bound: lower,
        row_good_counts: hist,
        s1,
        sstar,
        empirical: None,
    })
}

/// Exact report plus a Monte Carlo estimate from `trials` seeded row draws.
pub fn simulate(inst: &TwoPointInstance, trials: u64, seed: u64) -> Result<SamplingReport, SamplingError> {
    if trials < 1 {
        return Err(SamplingError::NoTrials);
    }
    let mut report = exact_failure(inst)?;
    let rows = inst.array.rows();
    let nrows = rows.len() as u64;
    let failures = (0..trials)
        .into_par_iter()
        .filter(|&i| {
            let row = SplitMix64::below(SplitMix64::nth_output(seed, i), nrows);
            inst.good_in_row(&rows[row as usize]) == 0
        })
        .count() as u64;
    report.empirical = Some(Empirical {
        trials,
        seed,
        failures,
        failure: Rational::new(failures, trials).expect("trials > 0"),
    });
    Ok(report)
}
