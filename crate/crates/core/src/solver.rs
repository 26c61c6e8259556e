//! Exact (edge) metric dimension by exhaustive subset search.
//!
//! Sizes are tried one at a time starting from a lower bound. Each size is
//! searched by lexicographic depth-first enumeration of combinations, so the
//! first resolving set found at the smallest feasible size is also the
//! lexicographically smallest witness. Distance codes are never built
//! explicitly: each step refines the partition of the edges (or vertices)
//! by one landmark's distance column, and a set resolves when the partition
//! is discrete.
//!
//! Work is split into blocks by the first chosen landmark. Blocks run on a
//! dedicated rayon pool; the merged result takes the smallest block with a
//! hit, and statistics only count blocks up to that one, so certificates do
//! not depend on the worker count.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Distance, DistanceMatrix, Graph};
use crate::resolve::{edge_resolving_with, vertex_resolving_with, LandmarkSet};
use crate::silicate::{Family, SilicateSpec};
use crate::structure::{lemma_lower_bound, Decomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Edge,
    Vertex,
}

impl std::str::FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge" => Ok(Target::Edge),
            "vertex" => Ok(Target::Vertex),
            other => Err(Error::InvalidOptions(format!("unknown target {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    pub target: Target,
    /// First size tried. Defaults to the structural lower bound for
    /// recognized chain/cyclic networks (edge target), else 1.
    pub start_size: Option<usize>,
    pub max_size: Option<usize>,
    /// Search only degree-3 vertices. The result is only an upper bound
    /// unless an unrestricted pass rules out one size less.
    pub restrict_to_cubic: bool,
    pub workers: usize,
    /// Give up after examining this many complete candidate sets.
    pub budget_subsets: Option<u64>,
    /// Skip candidates that leave two cubic vertices of a twin tetrahedron
    /// uncovered. Only applies to the edge target.
    pub twin_pruning: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            target: Target::Edge,
            start_size: None,
            max_size: None,
            restrict_to_cubic: false,
            workers: 1,
            budget_subsets: None,
            twin_pruning: true,
        }
    }
}

impl SolveOptions {
    pub fn edge() -> Self {
        Self::default()
    }

    pub fn vertex() -> Self {
        SolveOptions {
            target: Target::Vertex,
            ..Self::default()
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Optimal,
    /// Found within the cubic-only pool; smaller sets using other vertices
    /// were not ruled out.
    UpperBoundConditional,
    /// Budget or size cap reached before optimality was established.
    Partial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pool {
    All,
    Cubic,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    /// Complete candidate sets whose partition was tested.
    pub subsets_examined: u64,
    /// Depth-first search nodes, leaves included.
    pub search_nodes: u64,
    /// Wall time; left out of serialized certificates so they stay
    /// byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SolveStats {
    fn absorb(&mut self, other: &BlockStats) {
        self.subsets_examined += other.examined;
        self.search_nodes += other.nodes;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub target: Target,
    pub status: Status,
    /// Exact value when optimal; best size found otherwise.
    pub dimension: Option<usize>,
    pub lower_bound: usize,
    pub upper_bound: Option<usize>,
    pub witness: Option<LandmarkSet>,
    /// Largest size proven infeasible over all vertices.
    pub infeasible_size_checked: Option<usize>,
    pub pool: Pool,
    pub stats: SolveStats,
}

impl Certificate {
    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// Minimum edge resolving set.
pub fn exact_edge_metric_dimension(g: &Graph, opts: &SolveOptions) -> Result<Certificate> {
    solve(
        g,
        &SolveOptions {
            target: Target::Edge,
            ..opts.clone()
        },
    )
}

/// Minimum (vertex) resolving set. Silicate-specific pruning is never used.
pub fn exact_metric_dimension(g: &Graph, opts: &SolveOptions) -> Result<Certificate> {
    solve(
        g,
        &SolveOptions {
            target: Target::Vertex,
            twin_pruning: false,
            ..opts.clone()
        },
    )
}

/// Whether no single-vertex deletion of a resolving set still resolves.
pub fn is_minimal(g: &Graph, s: &LandmarkSet, target: Target) -> Result<bool> {
    let d = g.all_pairs_distances()?;
    let resolves = |set: &LandmarkSet| match target {
        Target::Edge => edge_resolving_with(g, &d, set).resolving,
        Target::Vertex => vertex_resolving_with(&d, set).resolving,
    };
    if !resolves(s) {
        return Err(Error::NotResolving);
    }
    for skip in 0..s.len() {
        let ids: Vec<usize> = s
            .ids()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect();
        if resolves(&LandmarkSet::new(ids, g.vertex_count())?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Distance of every object (edge or vertex) to each vertex, one row per
/// vertex.
fn distance_rows(g: &Graph, d: &DistanceMatrix, target: Target) -> Vec<Vec<Distance>> {
    (0..g.vertex_count())
        .map(|w| match target {
            Target::Edge => g.edges().iter().map(|&e| d.edge_vertex_distance(e, w)).collect(),
            Target::Vertex => d.row(w).to_vec(),
        })
        .collect()
}

struct Problem {
    rows: Vec<Vec<Distance>>,
    objects: usize,
    /// Number of distinct distance values, for the refinement table.
    radix: usize,
    /// `(p, q)` with `p < q`: every resolving set contains `p` or `q`.
    pairs: Vec<(usize, usize)>,
}

struct Pooled<'a> {
    problem: &'a Problem,
    ids: Vec<usize>,
    /// For each pool position, earlier positions it is paired with.
    partners: Vec<Vec<usize>>,
}

impl<'a> Pooled<'a> {
    fn new(problem: &'a Problem, ids: Vec<usize>) -> Self {
        let mut position = vec![usize::MAX; problem.rows.len()];
        for (i, &v) in ids.iter().enumerate() {
            position[v] = i;
        }
        let mut partners = vec![Vec::new(); ids.len()];
        for &(p, q) in &problem.pairs {
            let (pp, pq) = (position[p], position[q]);
            // a pair with a member outside the pool is dropped; this only
            // weakens pruning
            if pp != usize::MAX && pq != usize::MAX {
                partners[pp.max(pq)].push(pp.min(pq));
            }
        }
        Pooled { problem, ids, partners }
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct BlockStats {
    examined: u64,
    nodes: u64,
}

enum BlockOutcome {
    Hit(Vec<usize>, BlockStats),
    Exhausted(BlockStats),
    Cancelled,
    OverBudget,
}

enum LevelOutcome {
    Feasible(Vec<usize>),
    Infeasible,
    OverBudget,
}

struct Shared {
    best_block: AtomicUsize,
    examined: AtomicU64,
    over_budget: AtomicBool,
    budget: Option<u64>,
}

struct Worker<'a> {
    pooled: &'a Pooled<'a>,
    shared: &'a Shared,
    block: usize,
    k: usize,
    chosen: Vec<usize>,
    in_set: Vec<bool>,
    /// Partition class of each object at each depth.
    classes: Vec<Vec<u32>>,
    counts: Vec<usize>,
    table: Vec<u32>,
    touched: Vec<usize>,
    stats: BlockStats,
    halted: Option<BlockOutcome>,
}

impl<'a> Worker<'a> {
    fn new(pooled: &'a Pooled<'a>, shared: &'a Shared, block: usize, k: usize) -> Self {
        let p = pooled.problem;
        Worker {
            pooled,
            shared,
            block,
            k,
            chosen: Vec::with_capacity(k),
            in_set: vec![false; pooled.ids.len()],
            classes: vec![vec![0; p.objects]; k + 1],
            counts: vec![p.objects.min(1); k + 1],
            table: vec![u32::MAX; p.objects.max(1) * p.radix],
            touched: Vec::new(),
            stats: BlockStats::default(),
            halted: None,
        }
    }

    /// Refines the classes at `depth` by the column of pool position `pos`
    /// into `depth + 1`.
    fn refine(&mut self, depth: usize, pos: usize) {
        let row = &self.pooled.problem.rows[self.pooled.ids[pos]];
        let radix = self.pooled.problem.radix;
        let (lower, upper) = self.classes.split_at_mut(depth + 1);
        let (src, dst) = (&lower[depth], &mut upper[0]);
        let mut next = 0u32;
        for (o, (&c, &dist)) in src.iter().zip(row).enumerate() {
            let key = c as usize * radix + dist as usize;
            if self.table[key] == u32::MAX {
                self.table[key] = next;
                self.touched.push(key);
                next += 1;
            }
            dst[o] = self.table[key];
        }
        for key in self.touched.drain(..) {
            self.table[key] = u32::MAX;
        }
        self.counts[depth + 1] = next as usize;
    }

    /// Some earlier partner of `pos` is outside the set.
    fn unpaired(&self, pos: usize) -> bool {
        self.pooled.partners[pos].iter().any(|&p| !self.in_set[p])
    }

    fn leaf_ok(&self) -> bool {
        if self.counts[self.k] != self.pooled.problem.objects {
            return false;
        }
        let after = self.chosen.last().map_or(0, |&l| l + 1);
        (after..self.pooled.ids.len()).all(|q| self.in_set[q] || !self.unpaired(q))
    }

    fn halt(&mut self) -> bool {
        if self.halted.is_some() {
            return true;
        }
        if self.shared.best_block.load(Ordering::Relaxed) < self.block {
            self.halted = Some(BlockOutcome::Cancelled);
        } else if self.shared.over_budget.load(Ordering::Relaxed) {
            self.halted = Some(BlockOutcome::OverBudget);
        }
        self.halted.is_some()
    }

    fn push(&mut self, pos: usize) {
        let depth = self.chosen.len();
        self.refine(depth, pos);
        self.chosen.push(pos);
        self.in_set[pos] = true;
    }

    fn pop(&mut self) {
        let pos = self.chosen.pop().expect("non-empty");
        self.in_set[pos] = false;
    }

    fn dfs(&mut self, start: usize) -> bool {
        self.stats.nodes += 1;
        if self.chosen.len() == self.k {
            self.stats.examined += 1;
            let total = self.shared.examined.fetch_add(1, Ordering::Relaxed) + 1;
            if self.shared.budget.is_some_and(|b| total > b) {
                self.shared.over_budget.store(true, Ordering::Relaxed);
            }
            return self.leaf_ok();
        }
        if self.stats.nodes.is_multiple_of(64) && self.halt() {
            return false;
        }
        let remaining = self.k - self.chosen.len();
        let last = self.pooled.ids.len() - remaining;
        for pos in start..=last {
            if pos > start && self.unpaired(pos - 1) {
                // pos - 1 would be skipped with a partner below it also out
                break;
            }
            self.push(pos);
            if self.dfs(pos + 1) {
                return true;
            }
            self.pop();
            if self.halted.is_some() {
                return false;
            }
        }
        false
    }

    fn run(mut self) -> BlockOutcome {
        if self.halt() {
            return self.halted.take().expect("set by halt");
        }
        if (0..self.block).any(|q| self.unpaired(q)) {
            self.stats.nodes += 1;
            return BlockOutcome::Exhausted(self.stats);
        }
        self.push(self.block);
        let found = self.dfs(self.block + 1);
        // a budget overrun is only known after the leaf that caused it
        if !found && self.halted.is_none() && self.shared.over_budget.load(Ordering::Relaxed) {
            return BlockOutcome::OverBudget;
        }
        if found {
            let ids = self.chosen.iter().map(|&p| self.pooled.ids[p]).collect();
            return BlockOutcome::Hit(ids, self.stats);
        }
        match self.halted.take() {
            Some(h) => h,
            None => BlockOutcome::Exhausted(self.stats),
        }
    }
}

fn search_level(
    pooled: &Pooled<'_>,
    k: usize,
    thread_pool: &rayon::ThreadPool,
    examined: &AtomicU64,
    budget: Option<u64>,
    stats: &mut SolveStats,
) -> LevelOutcome {
    let n = pooled.ids.len();
    if k > n {
        return LevelOutcome::Infeasible;
    }
    let shared = Shared {
        best_block: AtomicUsize::new(usize::MAX),
        examined: AtomicU64::new(examined.load(Ordering::Relaxed)),
        over_budget: AtomicBool::new(false),
        budget,
    };
    if k == 0 {
        stats.search_nodes += 1;
        stats.subsets_examined += 1;
        examined.fetch_add(1, Ordering::Relaxed);
        let w = Worker::new(pooled, &shared, 0, 0);
        return if w.leaf_ok() {
            LevelOutcome::Feasible(Vec::new())
        } else {
            LevelOutcome::Infeasible
        };
    }
    let outcomes: Vec<BlockOutcome> = thread_pool.install(|| {
        (0..=n - k)
            .into_par_iter()
            .map(|block| {
                let out = Worker::new(pooled, &shared, block, k).run();
                if let BlockOutcome::Hit(..) = out {
                    shared.best_block.fetch_min(block, Ordering::Relaxed);
                }
                out
            })
            .collect()
    });
    examined.store(shared.examined.load(Ordering::Relaxed), Ordering::Relaxed);
    for out in outcomes {
        match out {
            BlockOutcome::Hit(ids, s) => {
                stats.absorb(&s);
                return LevelOutcome::Feasible(ids);
            }
            BlockOutcome::Exhausted(s) => stats.absorb(&s),
            BlockOutcome::OverBudget => return LevelOutcome::OverBudget,
            BlockOutcome::Cancelled => unreachable!("blocks before the winner are never cancelled"),
        }
    }
    LevelOutcome::Infeasible
}

/// Smallest feasible size found in one pool and the largest size proven
/// infeasible there.
struct PoolResult {
    best: Option<(usize, Vec<usize>)>,
    infeasible: Option<usize>,
    complete: bool,
}

fn search_pool(
    pooled: &Pooled<'_>,
    start: usize,
    max: usize,
    thread_pool: &rayon::ThreadPool,
    examined: &AtomicU64,
    budget: Option<u64>,
    stats: &mut SolveStats,
) -> PoolResult {
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut infeasible: Option<usize> = None;
    let mut k = start;
    let complete = loop {
        if k > max {
            break false;
        }
        match search_level(pooled, k, thread_pool, examined, budget, stats) {
            LevelOutcome::OverBudget => break false,
            LevelOutcome::Feasible(ids) => {
                best = Some((k, ids));
                if k == 0 || infeasible == Some(k - 1) {
                    break true;
                }
                k -= 1;
            }
            LevelOutcome::Infeasible => {
                infeasible = Some(k);
                if best.is_some() {
                    break true;
                }
                k += 1;
            }
        }
    };
    PoolResult {
        best,
        infeasible,
        complete,
    }
}

fn solve(g: &Graph, opts: &SolveOptions) -> Result<Certificate> {
    let started = Instant::now();
    if opts.workers == 0 {
        return Err(Error::InvalidOptions("workers must be positive".into()));
    }
    if let (Some(s), Some(m)) = (opts.start_size, opts.max_size) {
        if s > m {
            return Err(Error::InvalidOptions(format!("start size {s} exceeds max size {m}")));
        }
    }
    let d = g.all_pairs_distances()?;
    let rows = distance_rows(g, &d, opts.target);
    let radix = rows.iter().flatten().copied().max().map_or(1, |m| m as usize + 1);
    let decomposition = Decomposition::of(g).ok();
    let spec: Option<SilicateSpec> = decomposition.as_ref().and_then(|dec| dec.recognize(g));

    let mut pairs = Vec::new();
    if opts.target == Target::Edge && opts.twin_pruning {
        if let Some(dec) = &decomposition {
            for tw in &dec.twins {
                for (i, &p) in tw.cubic_set.iter().enumerate() {
                    for &q in &tw.cubic_set[i + 1..] {
                        pairs.push((p, q));
                    }
                }
            }
            pairs.sort_unstable();
            pairs.dedup();
        }
    }
    let problem = Problem {
        objects: rows.first().map_or(0, Vec::len),
        rows,
        radix,
        pairs,
    };

    let all: Vec<usize> = (0..g.vertex_count()).collect();
    let pool_kind = if opts.restrict_to_cubic { Pool::Cubic } else { Pool::All };
    let pool_ids: Vec<usize> = match pool_kind {
        Pool::All => all.clone(),
        Pool::Cubic => all.iter().copied().filter(|&v| g.degree(v) == 3).collect(),
    };
    let pooled = Pooled::new(&problem, pool_ids);

    let default_start = match (opts.target, spec) {
        (Target::Edge, Some(s)) => lemma_lower_bound(&s).unwrap_or(1),
        _ => 1,
    };
    let max = opts.max_size.unwrap_or(usize::MAX).min(pooled.ids.len());
    let start = opts.start_size.unwrap_or(default_start).min(max);

    let thread_pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::InvalidOptions(e.to_string()))?;
    let examined = AtomicU64::new(0);
    let mut stats = SolveStats::default();
    let result = search_pool(
        &pooled,
        start,
        max,
        &thread_pool,
        &examined,
        opts.budget_subsets,
        &mut stats,
    );

    let mut cert = Certificate {
        source: "exact-solver".into(),
        family: spec.map(|s| s.family),
        n: spec.map(|s| s.n),
        target: opts.target,
        status: Status::Partial,
        dimension: result.best.as_ref().map(|(k, _)| *k),
        lower_bound: 0,
        upper_bound: None,
        witness: None,
        infeasible_size_checked: None,
        pool: pool_kind,
        stats: SolveStats::default(),
    };
    if let Some((_, ids)) = &result.best {
        cert.witness = Some(LandmarkSet::new(ids.clone(), g.vertex_count())?);
    }

    match pool_kind {
        Pool::All => {
            cert.infeasible_size_checked = result.infeasible;
            cert.lower_bound = result.infeasible.map_or(0, |k| k + 1);
            // the whole vertex set resolves both edges and vertices
            cert.upper_bound = Some(result.best.as_ref().map_or(g.vertex_count(), |(k, _)| *k));
            if result.complete {
                cert.status = Status::Optimal;
            }
        }
        Pool::Cubic => {
            cert.upper_bound = result.best.as_ref().map(|(k, _)| *k);
            if let (true, Some((k, _))) = (result.complete, &result.best) {
                let k = *k;
                cert.status = Status::UpperBoundConditional;
                if k == 0 {
                    cert.status = Status::Optimal;
                } else {
                    let everyone = Pooled::new(&problem, all);
                    let check = search_level(
                        &everyone,
                        k - 1,
                        &thread_pool,
                        &examined,
                        opts.budget_subsets,
                        &mut stats,
                    );
                    if let LevelOutcome::Infeasible = check {
                        cert.status = Status::Optimal;
                        cert.infeasible_size_checked = Some(k - 1);
                        cert.lower_bound = k;
                    }
                }
            }
        }
    }
    stats.elapsed = started.elapsed();
    cert.stats = stats;
    Ok(cert)
}
