//! Incidence structures, orthogonal arrays and binary codes, with validators
//! for each design family the bounds apply to.
//!
//! Points are always `0..v`. Blocks are stored twice: as a sorted index list
//! and as a fixed-width bitset, so intersections are a popcount.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DesignError {
    #[error("block {block} contains point {point}, outside 0..{num_points}")]
    PointOutOfRange { block: usize, point: usize, num_points: usize },
    #[error("block {block} lists point {point} more than once")]
    RepeatedPoint { block: usize, point: usize },
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("block index {index} out of range (structure has {len} blocks)")]
    BlockIndex { index: usize, len: usize },
    #[error("orthogonal array needs k >= 2, n >= 2, lambda >= 1 (got k={k}, n={n}, lambda={lambda})")]
    OaParameters { k: usize, n: usize, lambda: usize },
    #[error("orthogonal array with n={n}, lambda={lambda} needs {expected} rows, got {actual}")]
    OaRowCount { n: usize, lambda: usize, expected: usize, actual: usize },
    #[error("row {row} has {actual} entries, expected {expected}")]
    RowLength { row: usize, expected: usize, actual: usize },
    #[error("row {row} column {column} holds symbol {symbol}, outside 0..{n}")]
    SymbolOutOfRange { row: usize, column: usize, symbol: usize, n: usize },
    #[error("code has no codewords")]
    EmptyCode,
    #[error("codeword {index} has weight {weight}, expected {expected}")]
    MixedWeights { index: usize, weight: usize, expected: usize },
    #[error("codeword {index} has length {actual}, expected {expected}")]
    CodewordLength { index: usize, expected: usize, actual: usize },
}

/// A subset of `0..v` kept both as a sorted list and as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    points: Vec<usize>,
    bits: Vec<u64>,
}

impl PointSet {
    fn from_sorted(points: Vec<usize>, universe: usize) -> Self {
        let mut bits = vec![0u64; universe.div_ceil(64)];
        for &p in &points {
            bits[p / 64] |= 1 << (p % 64);
        }
        PointSet { points, bits }
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.bits.get(p / 64).is_some_and(|w| w >> (p % 64) & 1 == 1)
    }

    pub fn intersection_len(&self, other: &PointSet) -> usize {
        self.bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.points).finish()
    }
}

/// A point set `0..v` with an ordered multiset of nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    num_points: usize,
    blocks: Vec<PointSet>,
}

impl IncidenceStructure {
    pub fn new<B, I>(num_points: usize, blocks: B) -> Result<Self, DesignError>
    where
        B: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut out = Vec::new();
        for (bi, block) in blocks.into_iter().enumerate() {
            let mut pts: Vec<usize> = block.into_iter().collect();
            if pts.is_empty() {
                return Err(DesignError::EmptyBlock(bi));
            }
            pts.sort_unstable();
            for w in pts.windows(2) {
                if w[0] == w[1] {
                    return Err(DesignError::RepeatedPoint { block: bi, point: w[0] });
                }
            }
            if let Some(&max) = pts.last() {
                if max >= num_points {
                    return Err(DesignError::PointOutOfRange { block: bi, point: max, num_points });
                }
            }
            out.push(PointSet::from_sorted(pts, num_points));
        }
        Ok(IncidenceStructure { num_points, blocks: out })
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }

    pub fn block(&self, index: usize) -> Result<&PointSet, DesignError> {
        self.blocks
            .get(index)
            .ok_or(DesignError::BlockIndex { index, len: self.blocks.len() })
    }

    /// Number of blocks through `x`.
    pub fn replication(&self, x: usize) -> usize {
        self.blocks.iter().filter(|b| b.contains(x)).count()
    }

    pub fn replications(&self) -> Vec<usize> {
        let mut r = vec![0; self.num_points];
        for b in &self.blocks {
            for &p in b.points() {
                r[p] += 1;
            }
        }
        r
    }

    /// Number of blocks containing both `x` and `y`.
    pub fn pair_count(&self, x: usize, y: usize) -> usize {
        self.blocks.iter().filter(|b| b.contains(x) && b.contains(y)).count()
    }

    /// All pair counts, as a dense symmetric table indexed `x * v + y`.
    pub fn pair_counts(&self) -> PairCounts {
        let v = self.num_points;
        let mut counts = vec![0usize; v * v];
        for b in &self.blocks {
            let pts = b.points();
            for (i, &x) in pts.iter().enumerate() {
                for &y in &pts[i + 1..] {
                    counts[x * v + y] += 1;
                    counts[y * v + x] += 1;
                }
            }
        }
        PairCounts { v, counts }
    }

    /// `|A_i ∩ A_j|`.
    pub fn intersection(&self, i: usize, j: usize) -> Result<usize, DesignError> {
        Ok(self.block(i)?.intersection_len(self.block(j)?))
    }

    /// Multiplicity of block `index` in the block multiset.
    pub fn multiplicity(&self, index: usize) -> Result<usize, DesignError> {
        let target = self.block(index)?;
        Ok(self.blocks.iter().filter(|b| *b == target).count())
    }

    pub fn max_multiplicity(&self) -> usize {
        (0..self.blocks.len())
            .map(|i| self.multiplicity(i).unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Blocks as plain index lists, in storage order.
    pub fn block_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.points.clone()).collect()
    }
}

pub struct PairCounts {
    v: usize,
    counts: Vec<usize>,
}

impl PairCounts {
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.counts[x * self.v + y]
    }

    /// Unordered pairs `x < y` with their counts, lexicographic.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.v).flat_map(move |x| (x + 1..self.v).map(move |y| (x, y, self.get(x, y))))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BibdParams {
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub lambda: u64,
}

impl BibdParams {
    pub fn new(v: u64, b: u64, r: u64, k: u64, lambda: u64) -> Self {
        BibdParams { v, b, r, k, lambda }
    }

    /// Parameter-level necessary conditions that fail for these values.
    pub fn identity_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let BibdParams { v, b, r, k, lambda } = *self;
        if k < 2 || k > v || b == 0 || r == 0 || lambda == 0 {
            out.push(Violation::ParameterRange { v, b, r, k, lambda });
        }
        if v * r != b * k {
            out.push(Violation::IdentityVrBk { vr: v * r, bk: b * k });
        }
        if lambda * v.saturating_sub(1) != r * k.saturating_sub(1) {
            out.push(Violation::IdentityPairs {
                lambda_v_minus_1: lambda * v.saturating_sub(1),
                r_k_minus_1: r * k.saturating_sub(1),
            });
        }
        out
    }
}

impl fmt::Display for BibdParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.v, self.b, self.r, self.k, self.lambda)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RLambdaParams {
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub lambda: u64,
}

/// One failed axiom. The serde tag is the machine-readable code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "code", rename_all = "kebab-case")]
pub enum Violation {
    PointCount { expected: u64, actual: u64 },
    BlockCount { expected: u64, actual: u64 },
    ParameterRange { v: u64, b: u64, r: u64, k: u64, lambda: u64 },
    IdentityVrBk { vr: u64, bk: u64 },
    IdentityPairs { lambda_v_minus_1: u64, r_k_minus_1: u64 },
    BlockSize { block: usize, expected: u64, actual: u64 },
    SmallBlock { block: usize, size: u64 },
    Replication { point: usize, expected: u64, actual: u64 },
    PairCount { x: usize, y: usize, expected: u64, actual: u64 },
    OaPairCount { columns: [usize; 2], symbols: [usize; 2], expected: u64, actual: u64 },
}

impl Violation {
    pub fn code(&self) -> &'static str {
        match self {
            Violation::PointCount { .. } => "point-count",
            Violation::BlockCount { .. } => "block-count",
            Violation::ParameterRange { .. } => "parameter-range",
            Violation::IdentityVrBk { .. } => "identity-vr-bk",
            Violation::IdentityPairs { .. } => "identity-pairs",
            Violation::BlockSize { .. } => "block-size",
            Violation::SmallBlock { .. } => "small-block",
            Violation::Replication { .. } => "replication",
            Violation::PairCount { .. } => "pair-count",
            Violation::OaPairCount { .. } => "oa-pair-count",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::PointCount { expected, actual } => {
                write!(f, "point-count: expected {expected}, found {actual}")
            }
            Violation::BlockCount { expected, actual } => {
                write!(f, "block-count: expected {expected}, found {actual}")
            }
            Violation::ParameterRange { v, b, r, k, lambda } => {
                write!(f, "parameter-range: ({v},{b},{r},{k},{lambda}) needs 2 <= k <= v and b, r, lambda >= 1")
            }
            Violation::IdentityVrBk { vr, bk } => write!(f, "identity-vr-bk: vr = {vr} but bk = {bk}"),
            Violation::IdentityPairs { lambda_v_minus_1, r_k_minus_1 } => write!(
                f,
                "identity-pairs: lambda(v-1) = {lambda_v_minus_1} but r(k-1) = {r_k_minus_1}"
            ),
            Violation::BlockSize { block, expected, actual } => {
                write!(f, "block-size: block {block} has {actual} points, expected {expected}")
            }
            Violation::SmallBlock { block, size } => {
                write!(f, "small-block: block {block} has {size} point(s), at least 2 required")
            }
            Violation::Replication { point, expected, actual } => {
                write!(f, "replication: point {point} lies in {actual} blocks, expected {expected}")
            }
            Violation::PairCount { x, y, expected, actual } => {
                write!(f, "pair-count: pair {{{x},{y}}} lies in {actual} blocks, expected {expected}")
            }
            Violation::OaPairCount { columns, symbols, expected, actual } => write!(
                f,
                "oa-pair-count: columns ({},{}) show ({},{}) in {actual} rows, expected {expected}",
                columns[0], columns[1], symbols[0], symbols[1]
            ),
        }
    }
}

/// Every violated axiom, in a deterministic order. Empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, code: &str) -> bool {
        self.violations.iter().any(|v| v.code() == code)
    }
}

fn check_replication(inc: &IncidenceStructure, r: u64, out: &mut Vec<Violation>) {
    for (point, &actual) in inc.replications().iter().enumerate() {
        if actual as u64 != r {
            out.push(Violation::Replication { point, expected: r, actual: actual as u64 });
        }
    }
}

fn check_pairs(inc: &IncidenceStructure, lambda: u64, out: &mut Vec<Violation>) {
    for (x, y, actual) in inc.pair_counts().iter() {
        if actual as u64 != lambda {
            out.push(Violation::PairCount { x, y, expected: lambda, actual: actual as u64 });
        }
    }
}

pub fn validate_bibd(inc: &IncidenceStructure, p: &BibdParams) -> ValidationReport {
    let mut violations = p.identity_violations();
    if inc.num_points() as u64 != p.v {
        violations.push(Violation::PointCount { expected: p.v, actual: inc.num_points() as u64 });
    }
    if inc.num_blocks() as u64 != p.b {
        violations.push(Violation::BlockCount { expected: p.b, actual: inc.num_blocks() as u64 });
    }
    for (block, b) in inc.blocks().iter().enumerate() {
        if b.len() as u64 != p.k {
            violations.push(Violation::BlockSize { block, expected: p.k, actual: b.len() as u64 });
        }
    }
    check_replication(inc, p.r, &mut violations);
    check_pairs(inc, p.lambda, &mut violations);
    ValidationReport { violations }
}

pub fn validate_pbd(inc: &IncidenceStructure) -> ValidationReport {
    let mut violations = Vec::new();
    for (block, b) in inc.blocks().iter().enumerate() {
        if b.len() < 2 {
            violations.push(Violation::SmallBlock { block, size: b.len() as u64 });
        }
    }
    check_pairs(inc, 1, &mut violations);
    ValidationReport { violations }
}

/// Blocks of size one are allowed here.
pub fn validate_r_lambda(inc: &IncidenceStructure, p: &RLambdaParams) -> ValidationReport {
    let mut violations = Vec::new();
    if inc.num_points() as u64 != p.v {
        violations.push(Violation::PointCount { expected: p.v, actual: inc.num_points() as u64 });
    }
    if inc.num_blocks() as u64 != p.b {
        violations.push(Violation::BlockCount { expected: p.b, actual: inc.num_blocks() as u64 });
    }
    check_replication(inc, p.r, &mut violations);
    check_pairs(inc, p.lambda, &mut violations);
    ValidationReport { violations }
}

/// `|A_i ∩ A_index|` for every `i ≠ index`, in block order.
pub fn intersection_profile(inc: &IncidenceStructure, index: usize) -> Result<Vec<usize>, DesignError> {
    let target = inc.block(index)?;
    Ok(inc
        .blocks()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != index)
        .map(|(_, b)| b.intersection_len(target))
        .collect())
}

/// Result of removing a block and all of its points from a structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletedBlock {
    /// Remaining points relabelled `0..v-k` in increasing original order.
    pub structure: IncidenceStructure,
    /// `old_label[new]` for each surviving point.
    pub old_label: Vec<usize>,
    /// Index in the original structure of each surviving block.
    pub source_block: Vec<usize>,
    /// Blocks that became empty and were dropped.
    pub dropped_empty: usize,
}

/// Removes block `index` and deletes its points from every other block.
/// Blocks left empty are dropped and counted; blocks of size one are kept.
pub fn delete_block(inc: &IncidenceStructure, index: usize) -> Result<DeletedBlock, DesignError> {
    let deleted = inc.block(index)?.clone();
    let mut new_label = vec![usize::MAX; inc.num_points()];
    let mut old_label = Vec::new();
    for (p, label) in new_label.iter_mut().enumerate() {
        if !deleted.contains(p) {
            *label = old_label.len();
            old_label.push(p);
        }
    }
    let mut blocks = Vec::new();
    let mut source_block = Vec::new();
    let mut dropped_empty = 0;
    for (i, b) in inc.blocks().iter().enumerate() {
        if i == index {
            continue;
        }
        let rest: Vec<usize> = b.points().iter().filter(|&&p| !deleted.contains(p)).map(|&p| new_label[p]).collect();
        if rest.is_empty() {
            dropped_empty += 1;
        } else {
            blocks.push(rest);
            source_block.push(i);
        }
    }
    let structure = IncidenceStructure::new(old_label.len(), blocks)?;
    Ok(DeletedBlock { structure, old_label, source_block, dropped_empty })
}

/// An `OA_λ(k, n)`: `λn²` rows, `k` columns, symbols `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalArray {
    k: usize,
    n: usize,
    lambda: usize,
    rows: Vec<Vec<usize>>,
}

impl OrthogonalArray {
    /// Checks dimensions and symbol ranges; the pair condition is checked by
    /// [`validate_oa`].
    pub fn new(k: usize, n: usize, lambda: usize, rows: Vec<Vec<usize>>) -> Result<Self, DesignError> {
        if k < 2 || n < 2 || lambda < 1 {
            return Err(DesignError::OaParameters { k, n, lambda });
        }
        let expected = lambda * n * n;
        if rows.len() != expected {
            return Err(DesignError::OaRowCount { n, lambda, expected, actual: rows.len() });
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != k {
                return Err(DesignError::RowLength { row, expected: k, actual: r.len() });
            }
            if let Some((column, &symbol)) = r.iter().enumerate().find(|(_, &s)| s >= n) {
                return Err(DesignError::SymbolOutOfRange { row, column, symbol, n });
            }
        }
        Ok(OrthogonalArray { k, n, lambda, rows })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Largest number of times any row occurs.
    pub fn max_row_repetition(&self) -> usize {
        let mut sorted = self.rows.clone();
        sorted.sort();
        sorted
            .chunk_by(|a, b| a == b)
            .map(|c| c.len())
            .max()
            .unwrap_or(0)
    }
}

pub fn validate_oa(oa: &OrthogonalArray) -> ValidationReport {
    let (k, n) = (oa.k, oa.n);
    let expected = oa.lambda as u64;
    let mut violations = Vec::new();
    let mut counts = vec![0u64; n * n];
    for c1 in 0..k {
        for c2 in c1 + 1..k {
            counts.iter_mut().for_each(|c| *c = 0);
            for row in &oa.rows {
                counts[row[c1] * n + row[c2]] += 1;
            }
            for (idx, &actual) in counts.iter().enumerate() {
                if actual != expected {
                    violations.push(Violation::OaPairCount {
                        columns: [c1, c2],
                        symbols: [idx / n, idx % n],
                        expected,
                        actual,
                    });
                }
            }
        }
    }
    ValidationReport { violations }
}

/// A multiset of length-`n` binary words, stored by support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    length: usize,
    words: Vec<PointSet>,
}

impl BinaryCode {
    pub fn from_bits(words: &[Vec<u8>]) -> Result<Self, DesignError> {
        let length = words.first().map_or(0, Vec::len);
        let mut supports = Vec::with_capacity(words.len());
        for (index, w) in words.iter().enumerate() {
            if w.len() != length {
                return Err(DesignError::CodewordLength { index, expected: length, actual: w.len() });
            }
            let pts = w.iter().enumerate().filter(|(_, &b)| b != 0).map(|(i, _)| i).collect();
            supports.push(PointSet::from_sorted(pts, length));
        }
        Ok(BinaryCode { length, words: supports })
    }

    /// Rows of the block-by-point incidence matrix.
    pub fn from_blocks(inc: &IncidenceStructure) -> Self {
        BinaryCode { length: inc.num_points(), words: inc.blocks().to_vec() }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstantWeightStats {
    pub weight: usize,
    /// `None` when the code has a single word.
    pub min_distance: Option<usize>,
    pub max_inner_product: Option<usize>,
}

pub fn constant_weight_stats(code: &BinaryCode) -> Result<ConstantWeightStats, DesignError> {
    let first = code.words.first().ok_or(DesignError::EmptyCode)?;
    let weight = first.len();
    if let Some((index, w)) = code.words.iter().enumerate().find(|(_, w)| w.len() != weight) {
        return Err(DesignError::MixedWeights { index, weight: w.len(), expected: weight });
    }
    let mut max_ip: Option<usize> = None;
    let mut min_d: Option<usize> = None;
    for (i, a) in code.words.iter().enumerate() {
        for b in &code.words[i + 1..] {
            let ip = a.intersection_len(b);
            let d = a.len() + b.len() - 2 * ip;
            max_ip = Some(max_ip.map_or(ip, |m| m.max(ip)));
            min_d = Some(min_d.map_or(d, |m| m.min(d)));
        }
    }
    if let (Some(d), Some(l)) = (min_d, max_ip) {
        debug_assert_eq!(d, 2 * (weight - l));
    }
    Ok(ConstantWeightStats { weight, min_distance: min_d, max_inner_product: max_ip })
}
