//! Canonical constructions and small exhaustive searches.
//!
//! These are the ground truth the bounds are tested against: every structure
//! produced here exists, so no necessary condition may reject it, and the
//! searches certify tightness by coming back empty below a bound.
//!
//! Searches work on labelled structures (no isomorph rejection) and report
//! solutions in a fixed depth-first order, with blocks sorted by bitmask
//! (colex order).

use serde::Serialize;
use thiserror::Error;

use crate::designs::{DesignError, IncidenceStructure, OrthogonalArray};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("parameters out of range: {0}")]
    Domain(String),
    #[error("search budget exhausted after {nodes} nodes (best found so far: {best_so_far})")]
    BudgetExhausted { nodes: u64, best_so_far: u64 },
    #[error(transparent)]
    Design(#[from] DesignError),
}

fn domain(msg: impl Into<String>) -> OracleError {
    OracleError::Domain(msg.into())
}

/// Largest point count the bitmask searches accept.
pub const MAX_SEARCH_POINTS: usize = 16;

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Addition and multiplication tables of a finite field with elements `0..q`.
struct FieldTables {
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl FieldTables {
    fn prime(p: usize) -> Self {
        let add = (0..p * p).map(|i| (i / p + i % p) % p).collect();
        let mul = (0..p * p).map(|i| (i / p) * (i % p) % p).collect();
        FieldTables { q: p, add, mul }
    }

    /// GF(4) = {0, 1, a, a+1} encoded as 0, 1, 2, 3 with a² = a + 1.
    fn gf4() -> Self {
        #[rustfmt::skip]
        let mul = vec![
            0, 0, 0, 0,
            0, 1, 2, 3,
            0, 2, 3, 1,
            0, 3, 1, 2,
        ];
        let add = (0..16).map(|i| (i / 4) ^ (i % 4)).collect();
        FieldTables { q: 4, add, mul }
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    fn dot(&self, u: [usize; 3], w: [usize; 3]) -> usize {
        let s = self.add(self.mul(u[0], w[0]), self.mul(u[1], w[1]));
        self.add(s, self.mul(u[2], w[2]))
    }

    /// Normalised representatives of the 1-dimensional subspaces of F³,
    /// leading nonzero coordinate equal to 1.
    fn projective_points(&self) -> Vec<[usize; 3]> {
        let q = self.q;
        let mut pts = Vec::with_capacity(q * q + q + 1);
        for y in 0..q {
            for z in 0..q {
                pts.push([1, y, z]);
            }
        }
        for z in 0..q {
            pts.push([0, 1, z]);
        }
        pts.push([0, 0, 1]);
        pts
    }
}

fn plane_tables(q: u64) -> Result<FieldTables, OracleError> {
    match q {
        4 => Ok(FieldTables::gf4()),
        p if is_prime(p) && p <= 31 => Ok(FieldTables::prime(p as usize)),
        _ => Err(domain(format!("projective planes are built for prime q <= 31 and q = 4, not q = {q}"))),
    }
}

fn plane_from_tables(f: &FieldTables) -> Result<IncidenceStructure, OracleError> {
    let pts = f.projective_points();
    let lines = pts
        .iter()
        .map(|&l| (0..pts.len()).filter(|&i| f.dot(l, pts[i]) == 0).collect::<Vec<_>>());
    Ok(IncidenceStructure::new(pts.len(), lines)?)
}

/// `PG(2, q)`: points and lines are the normalised vectors of F³ in the same
/// order, and point `x` lies on line `L` when `L·x = 0`.
pub fn projective_plane(q: u64) -> Result<IncidenceStructure, OracleError> {
    plane_from_tables(&plane_tables(q)?)
}

/// The plane of order 2 with lines `{i, i+1, i+3} mod 7`.
pub fn fano_plane() -> IncidenceStructure {
    IncidenceStructure::new(7, (0..7).map(|i| [i, (i + 1) % 7, (i + 3) % 7])).expect("valid construction")
}

/// Block `{0..v-2}` together with the pairs `{i, v-1}`.
pub fn near_pencil(v: usize) -> Result<IncidenceStructure, OracleError> {
    if v < 3 {
        return Err(domain(format!("near-pencil needs v >= 3, got {v}")));
    }
    let long = std::iter::once((0..v - 1).collect::<Vec<_>>());
    let pairs = (0..v - 1).map(|i| vec![i, v - 1]);
    Ok(IncidenceStructure::new(v, long.chain(pairs))?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperoval {
    /// `PG(2, 4)` as built by [`projective_plane`].
    pub plane: IncidenceStructure,
    pub points: Vec<usize>,
    /// Lines meeting none of `points`.
    pub external_lines: Vec<usize>,
}

/// The conic `y² = xz` of `PG(2, 4)` together with its nucleus `(0, 1, 0)`.
pub fn hyperoval_pg24() -> Hyperoval {
    let f = FieldTables::gf4();
    let plane = plane_from_tables(&f).expect("valid construction");
    let coords = f.projective_points();
    let mut points: Vec<usize> = coords
        .iter()
        .enumerate()
        .filter(|(_, &[x, y, z])| f.mul(y, y) == f.mul(x, z) || [x, y, z] == [0, 1, 0])
        .map(|(i, _)| i)
        .collect();
    points.sort_unstable();
    let external_lines = plane
        .blocks()
        .iter()
        .enumerate()
        .filter(|(_, l)| points.iter().all(|&p| !l.contains(p)))
        .map(|(i, _)| i)
        .collect();
    Hyperoval { plane, points, external_lines }
}

/// `OA_1(k, p)` with row `a·p + b` holding `(a·j + b) mod p` in column `j`.
pub fn oa_linear(p: u64, k: u64) -> Result<OrthogonalArray, OracleError> {
    if !is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    if k < 2 || k > p {
        return Err(domain(format!("need 2 <= k <= p (got k={k}, p={p})")));
    }
    let (p, k) = (p as usize, k as usize);
    let rows = (0..p)
        .flat_map(|a| (0..p).map(move |b| (0..k).map(|j| (a * j + b) % p).collect()))
        .collect();
    Ok(OrthogonalArray::new(k, p, 1, rows)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    max_nodes: u64,
    max_solutions: u64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_solutions: u64) -> Result<Self, OracleError> {
        if max_nodes == 0 || max_solutions == 0 {
            return Err(domain("search budget limits must be positive"));
        }
        Ok(SearchBudget { max_nodes, max_solutions })
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }

    pub fn max_solutions(&self) -> u64 {
        self.max_solutions
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 10_000_000, max_solutions: u64::MAX }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum SearchStatus {
    /// The whole tree was explored.
    Complete,
    /// Rejected before searching by a divisibility condition.
    Inadmissible(String),
    /// Stopped at the node cap; absence of further solutions is not proven.
    NodeLimit,
    /// Stopped after `max_solutions` solutions.
    SolutionLimit,
}

impl SearchStatus {
    pub fn is_exhaustive(&self) -> bool {
        matches!(self, SearchStatus::Complete | SearchStatus::Inadmissible(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub solutions: u64,
    pub status: SearchStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub found: Vec<IncidenceStructure>,
    pub nodes: u64,
    pub status: SearchStatus,
}

enum Stop {
    Nodes,
    Solutions,
}

struct Counter {
    budget: SearchBudget,
    nodes: u64,
    solutions: u64,
}

impl Counter {
    fn node(&mut self) -> Result<(), Stop> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Stop::Nodes);
        }
        Ok(())
    }

    fn solution(&mut self) -> Result<(), Stop> {
        self.solutions += 1;
        if self.solutions >= self.budget.max_solutions {
            return Err(Stop::Solutions);
        }
        Ok(())
    }

    fn finish(self, result: Result<(), Stop>) -> SearchStats {
        let status = match result {
            Ok(()) => SearchStatus::Complete,
            Err(Stop::Nodes) => SearchStatus::NodeLimit,
            Err(Stop::Solutions) => SearchStatus::SolutionLimit,
        };
        SearchStats { nodes: self.nodes.min(self.budget.max_nodes), solutions: self.solutions, status }
    }
}

fn mask_points(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn structure_from_masks(v: usize, masks: &mut [u64]) -> IncidenceStructure {
    masks.sort_unstable();
    IncidenceStructure::new(v, masks.iter().map(|&m| mask_points(m))).expect("search emits valid blocks")
}

fn pair_index(v: usize) -> Vec<usize> {
    let mut idx = vec![usize::MAX; v * v];
    let mut next = 0;
    for x in 0..v {
        for y in x + 1..v {
            idx[x * v + y] = next;
            idx[y * v + x] = next;
            next += 1;
        }
    }
    idx
}

/// All `k`-subsets of `0..v` as bitmasks, ascending.
fn k_subsets(v: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, v: usize, left: usize, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..=v - left {
            rec(i + 1, v, left - 1, acc | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    rec(0, v, k, 0, &mut out);
    out.sort_unstable();
    out
}

struct BibdSearch<'a, F> {
    v: usize,
    candidates: Vec<u64>,
    cand_pairs: Vec<Vec<usize>>,
    by_pair: Vec<Vec<usize>>,
    deficit: Vec<u64>,
    chosen: Vec<usize>,
    counter: Counter,
    visit: &'a mut F,
}

impl<F: FnMut(&IncidenceStructure)> BibdSearch<'_, F> {
    /// Covers the first pair still short of λ. Consecutive blocks covering
    /// the same pair are taken in nondecreasing candidate order, so each
    /// block multiset is produced once.
    fn descend(&mut self, from_pair: usize, parent: Option<(usize, usize)>) -> Result<(), Stop> {
        self.counter.node()?;
        let Some(pair) = (from_pair..self.deficit.len()).find(|&p| self.deficit[p] > 0) else {
            let mut masks: Vec<u64> = self.chosen.iter().map(|&c| self.candidates[c]).collect();
            (self.visit)(&structure_from_masks(self.v, &mut masks));
            return self.counter.solution();
        };
        let min_cand = match parent {
            Some((p, c)) if p == pair => c,
            _ => 0,
        };
        for i in 0..self.by_pair[pair].len() {
            let c = self.by_pair[pair][i];
            if c < min_cand || self.cand_pairs[c].iter().any(|&p| self.deficit[p] == 0) {
                continue;
            }
            for &p in &self.cand_pairs[c] {
                self.deficit[p] -= 1;
            }
            self.chosen.push(c);
            let r = self.descend(pair, Some((pair, c)));
            self.chosen.pop();
            for &p in &self.cand_pairs[c] {
                self.deficit[p] += 1;
            }
            r?;
        }
        Ok(())
    }
}

fn bibd_admissible(v: u64, k: u64, lambda: u64) -> Result<(), String> {
    if !(lambda * (v - 1)).is_multiple_of(k - 1) {
        return Err(format!("r = lambda(v-1)/(k-1) = {}/{} is not an integer", lambda * (v - 1), k - 1));
    }
    let r = lambda * (v - 1) / (k - 1);
    if !(v * r).is_multiple_of(k) {
        return Err(format!("b = vr/k = {}/{k} is not an integer", v * r));
    }
    Ok(())
}

/// Streams every `(v, k, λ)`-BIBD to `visit`, subject to `budget`.
pub fn enumerate_bibds_with<F>(
    v: usize,
    k: usize,
    lambda: u64,
    budget: SearchBudget,
    mut visit: F,
) -> Result<SearchStats, OracleError>
where
    F: FnMut(&IncidenceStructure),
{
    if k < 2 || k > v || v > MAX_SEARCH_POINTS || lambda < 1 {
        return Err(domain(format!(
            "need 2 <= k <= v <= {MAX_SEARCH_POINTS} and lambda >= 1 (got v={v}, k={k}, lambda={lambda})"
        )));
    }
    if let Err(reason) = bibd_admissible(v as u64, k as u64, lambda) {
        return Ok(SearchStats { nodes: 0, solutions: 0, status: SearchStatus::Inadmissible(reason) });
    }
    let pidx = pair_index(v);
    let candidates = k_subsets(v, k);
    let npairs = v * (v - 1) / 2;
    let mut by_pair = vec![Vec::new(); npairs];
    let cand_pairs: Vec<Vec<usize>> = candidates
        .iter()
        .enumerate()
        .map(|(ci, &m)| {
            let pts = mask_points(m);
            let mut ps = Vec::new();
            for (i, &x) in pts.iter().enumerate() {
                for &y in &pts[i + 1..] {
                    ps.push(pidx[x * v + y]);
                    by_pair[pidx[x * v + y]].push(ci);
                }
            }
            ps
        })
        .collect();
    let mut search = BibdSearch {
        v,
        candidates,
        cand_pairs,
        by_pair,
        deficit: vec![lambda; npairs],
        chosen: Vec::new(),
        counter: Counter { budget, nodes: 0, solutions: 0 },
        visit: &mut visit,
    };
    let result = search.descend(0, None);
    Ok(search.counter.finish(result))
}

/// Collects every `(v, k, λ)`-BIBD up to `budget`.
pub fn enumerate_bibds(v: usize, k: usize, lambda: u64, budget: SearchBudget) -> Result<SearchOutcome, OracleError> {
    let mut found = Vec::new();
    let stats = enumerate_bibds_with(v, k, lambda, budget, |s| found.push(s.clone()))?;
    Ok(SearchOutcome { found, nodes: stats.nodes, status: stats.status })
}

struct PbdSearch<'a, F> {
    v: usize,
    k: usize,
    max_b: usize,
    uncovered: Vec<u64>,
    chosen: Vec<u64>,
    counter: Counter,
    visit: &'a mut F,
}

impl<F: FnMut(&IncidenceStructure)> PbdSearch<'_, F> {
    fn cliques(&self, base: u64, cands: u64, out: &mut Vec<u64>) {
        out.push(base);
        let mut rest = cands;
        while rest != 0 {
            let z = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.cliques(base | 1 << z, rest & self.uncovered[z], out);
        }
    }

    fn descend(&mut self) -> Result<(), Stop> {
        self.counter.node()?;
        let Some(x) = (0..self.v).find(|&x| self.uncovered[x] != 0) else {
            if self.chosen.iter().any(|m| m.count_ones() as usize == self.k) {
                let mut masks = self.chosen.clone();
                (self.visit)(&structure_from_masks(self.v, &mut masks));
                return self.counter.solution();
            }
            return Ok(());
        };
        if self.chosen.len() >= self.max_b {
            return Ok(());
        }
        let y = self.uncovered[x].trailing_zeros() as usize;
        let mut blocks = Vec::new();
        self.cliques(1 << x | 1 << y, self.uncovered[x] & self.uncovered[y], &mut blocks);
        blocks.sort_unstable();
        for block in blocks {
            self.toggle(block);
            self.chosen.push(block);
            let r = self.descend();
            self.chosen.pop();
            self.toggle(block);
            r?;
        }
        Ok(())
    }

    fn toggle(&mut self, block: u64) {
        let mut rest = block;
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.uncovered[p] ^= block & !(1 << p);
        }
    }
}

/// Streams every PBD on `v` points with at most `max_b` blocks that has a
/// block of size exactly `k`.
pub fn enumerate_pbds_with_block_with<F>(
    v: usize,
    k: usize,
    max_b: usize,
    budget: SearchBudget,
    mut visit: F,
) -> Result<SearchStats, OracleError>
where
    F: FnMut(&IncidenceStructure),
{
    if k < 2 || k >= v || v > MAX_SEARCH_POINTS {
        return Err(domain(format!("need 2 <= k < v <= {MAX_SEARCH_POINTS} (got v={v}, k={k})")));
    }
    let all = (1u64 << v) - 1;
    let mut search = PbdSearch {
        v,
        k,
        max_b,
        uncovered: (0..v).map(|x| all & !(1 << x)).collect(),
        chosen: Vec::new(),
        counter: Counter { budget, nodes: 0, solutions: 0 },
        visit: &mut visit,
    };
    let result = search.descend();
    Ok(search.counter.finish(result))
}

pub fn enumerate_pbds_with_block(
    v: usize,
    k: usize,
    max_b: usize,
    budget: SearchBudget,
) -> Result<SearchOutcome, OracleError> {
    let mut found = Vec::new();
    let stats = enumerate_pbds_with_block_with(v, k, max_b, budget, |s| found.push(s.clone()))?;
    Ok(SearchOutcome { found, nodes: stats.nodes, status: stats.status })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeSearch {
    pub size: u64,
    /// Supports of an optimal code, as bitmasks over `0..n`.
    pub witness: Vec<u64>,
    pub nodes: u64,
}

struct CliqueSearch {
    words: usize,
    adj: Vec<Vec<u64>>,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

impl CliqueSearch {
    /// Greedy colouring of `cand`: returns vertices with their colour numbers,
    /// colours nondecreasing.
    fn colour(&self, cand: &[u64]) -> Vec<(usize, usize)> {
        let mut uncoloured = cand.to_vec();
        let mut out = Vec::new();
        let mut colour = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = first_bit(&q) {
                clear(&mut q, v);
                clear(&mut uncoloured, v);
                for (qw, aw) in q.iter_mut().zip(&self.adj[v]) {
                    *qw &= !aw;
                }
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, mut cand: Vec<u64>) -> Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(());
        }
        let order = self.colour(&cand);
        for &(v, colour) in order.iter().rev() {
            if self.current.len() + colour <= self.best.len() {
                return Ok(());
            }
            self.current.push(v);
            let next: Vec<u64> = cand.iter().zip(&self.adj[v]).map(|(c, a)| c & a).collect();
            if next.iter().all(|&w| w == 0) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            clear(&mut cand, v);
        }
        Ok(())
    }
}

fn first_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn clear(bits: &mut [u64], v: usize) {
    bits[v / 64] &= !(1 << (v % 64));
}

/// Exact maximum size of a set of weight-`r` words of length `n` with
/// pairwise distance at least `d`, by branch-and-bound clique search with a
/// colouring bound. The permutation group is transitive on weight-`r` words,
/// so the first word can be fixed.
pub fn max_constant_weight_code(n: usize, r: usize, d: usize, budget: SearchBudget) -> Result<CodeSearch, OracleError> {
    if n == 0 || n > MAX_SEARCH_POINTS || r > n {
        return Err(domain(format!("need 1 <= n <= {MAX_SEARCH_POINTS} and r <= n (got n={n}, r={r})")));
    }
    let verts = k_subsets(n, r);
    let nv = verts.len();
    let words = nv.div_ceil(64);
    let adj: Vec<Vec<u64>> = verts
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let mut row = vec![0u64; words];
            for (j, &b) in verts.iter().enumerate() {
                if i != j && (a ^ b).count_ones() as usize >= d {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();
    let mut search = CliqueSearch {
        words,
        adj,
        best: vec![0],
        current: vec![0],
        nodes: 0,
        max_nodes: budget.max_nodes(),
    };
    let start = search.adj[0].clone();
    debug_assert_eq!(start.len(), search.words);
    if search.expand(start).is_err() {
        return Err(OracleError::BudgetExhausted { nodes: budget.max_nodes(), best_so_far: search.best.len() as u64 });
    }
    let mut witness: Vec<u64> = search.best.iter().map(|&i| verts[i]).collect();
    witness.sort_unstable();
    Ok(CodeSearch { size: witness.len() as u64, witness, nodes: search.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{validate_bibd, validate_oa, validate_pbd, BibdParams};

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn gf4_is_a_field() {
        let f = FieldTables::gf4();
        for a in 1..4 {
            assert_eq!((1..4).filter(|&b| f.mul(a, b) == 1).count(), 1);
            for b in 0..4 {
                for c in 0..4 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                }
            }
        }
    }

    #[test]
    fn fano_plane_shape() {
        let f = fano_plane();
        assert_eq!(f.num_blocks(), 7);
        assert!(f.blocks().iter().all(|b| b.len() == 3));
        assert!(validate_bibd(&f, &BibdParams::new(7, 7, 3, 3, 1)).is_valid());
    }

    #[test]
    fn near_pencils() {
        assert_eq!(near_pencil(5).unwrap().num_blocks(), 5);
        assert_eq!(near_pencil(3).unwrap().num_blocks(), 3);
        assert!(validate_pbd(&near_pencil(8).unwrap()).is_valid());
        assert!(near_pencil(2).is_err());
    }

    #[test]
    fn projective_planes() {
        for (q, v) in [(2u64, 7u64), (3, 13), (4, 21), (5, 31)] {
            let pg = projective_plane(q).unwrap();
            let p = BibdParams::new(v, v, q + 1, q + 1, 1);
            assert!(validate_bibd(&pg, &p).is_valid(), "q={q}");
        }
        assert!(projective_plane(6).is_err());
        assert!(projective_plane(8).is_err());
    }

    #[test]
    fn hyperoval() {
        let h = hyperoval_pg24();
        assert_eq!(h.points.len(), 6);
        assert_eq!(h.external_lines.len(), 6);
        for line in h.plane.blocks() {
            let meet = h.points.iter().filter(|&&p| line.contains(p)).count();
            assert!(meet == 0 || meet == 2);
        }
    }

    #[test]
    fn oa_linear_examples() {
        let oa = oa_linear(2, 2).unwrap();
        let mut rows = oa.rows().to_vec();
        rows.sort();
        assert_eq!(rows, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let oa = oa_linear(5, 3).unwrap();
        assert_eq!(oa.rows().len(), 25);
        assert!(validate_oa(&oa).is_valid());
        assert!(oa_linear(3, 4).is_err());
        assert!(oa_linear(4, 2).is_err());
    }

    #[test]
    fn budget_must_be_positive() {
        assert!(SearchBudget::new(0, 1).is_err());
        assert!(SearchBudget::new(1, 0).is_err());
    }

    #[test]
    fn sts7_and_sts9() {
        let out = enumerate_bibds(7, 3, 1, budget()).unwrap();
        assert_eq!(out.status, SearchStatus::Complete);
        assert_eq!(out.found.len(), 30);
        for s in &out.found {
            assert_eq!(s.num_blocks(), 7);
            assert!(validate_bibd(s, &BibdParams::new(7, 7, 3, 3, 1)).is_valid());
        }
        let out = enumerate_bibds(9, 3, 1, budget()).unwrap();
        assert_eq!(out.status, SearchStatus::Complete);
        assert_eq!(out.found.len(), 840);
        assert!(out.found.iter().all(|s| s.num_blocks() == 12));
    }

    #[test]
    fn inadmissible_parameters_skip_the_search() {
        let out = enumerate_bibds(6, 3, 1, budget()).unwrap();
        assert!(out.found.is_empty());
        assert_eq!(out.nodes, 0);
        assert!(matches!(out.status, SearchStatus::Inadmissible(_)));
    }

    #[test]
    fn repeated_blocks_are_enumerated_once() {
        // (4,3,2): all four triples, each once; (3,2,2): each pair twice
        let out = enumerate_bibds(4, 3, 2, budget()).unwrap();
        assert_eq!(out.found.len(), 1);
        let out = enumerate_bibds(3, 2, 2, budget()).unwrap();
        assert_eq!(out.found.len(), 1);
        assert_eq!(out.found[0].num_blocks(), 6);
    }

    #[test]
    fn node_limit_is_reported() {
        let out = enumerate_bibds(9, 3, 1, SearchBudget::new(10, 1000).unwrap()).unwrap();
        assert_eq!(out.status, SearchStatus::NodeLimit);
        assert_eq!(out.nodes, 10);
        let out = enumerate_bibds(9, 3, 1, SearchBudget::new(1_000_000, 5).unwrap()).unwrap();
        assert_eq!(out.status, SearchStatus::SolutionLimit);
        assert_eq!(out.found.len(), 5);
    }

    #[test]
    fn pbd_search_examples() {
        let out = enumerate_pbds_with_block(7, 3, 6, budget()).unwrap();
        assert_eq!(out.status, SearchStatus::Complete);
        assert!(out.found.is_empty());
        let out = enumerate_pbds_with_block(7, 3, 7, budget()).unwrap();
        assert_eq!(out.found.len(), 30);
        assert!(out.found.iter().all(|s| validate_bibd(s, &BibdParams::new(7, 7, 3, 3, 1)).is_valid()));
        assert!(enumerate_pbds_with_block(5, 4, 4, budget()).unwrap().found.is_empty());
        let out = enumerate_pbds_with_block(5, 4, 5, budget()).unwrap();
        assert_eq!(out.found.len(), 5);
        assert!(out.found.iter().all(|s| validate_pbd(s).is_valid()));
    }

    #[test]
    fn code_search_examples() {
        assert_eq!(max_constant_weight_code(7, 3, 4, budget()).unwrap().size, 7);
        assert_eq!(max_constant_weight_code(6, 3, 4, budget()).unwrap().size, 4);
        assert_eq!(max_constant_weight_code(5, 5, 2, budget()).unwrap().size, 1);
        assert!(matches!(
            max_constant_weight_code(12, 4, 4, SearchBudget::new(3, 1).unwrap()),
            Err(OracleError::BudgetExhausted { .. })
        ));
    }
}
