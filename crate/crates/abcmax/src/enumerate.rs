//! Exhaustive scans over labeled connected graphs on up to 8 vertices.
//!
//! A graph on n vertices is a C(n,2)-bit edge mask in lexicographic pair
//! order. Scans walk contiguous mask ranges (shards), fold each shard into a
//! partial result, and merge partials in ascending shard order, so the
//! outcome is identical for any shard count and any scheduling. No isomorph
//! rejection in the hot loop: labeled masks scan at memory speed and
//! isomorphism is only applied to the tiny maximizer sets afterward.

use crate::graph::Graph;
use crate::index::{f_raw, ABC_EPS};
use crate::invariants::{ParamConstraint, ParamKind};
use crate::iso::is_isomorphic;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// Enumeration ceiling: C(8,2) = 28 mask bits.
pub const MAX_ENUM_VERTICES: usize = 8;
const MAX_PAIRS: usize = 28;

// ===== errors =====

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumError {
    /// Exhaustive scans cover 2 <= n <= 8 only.
    OrderOutOfRange(usize),
    /// At least one shard is required.
    ZeroShards,
    /// The operation needs a constraint and the task has none.
    MissingConstraint,
}

impl fmt::Display for EnumError {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EnumError::OrderOutOfRange(n) => {
                write!(fm, "enumeration order {} not in 2..={}", n, MAX_ENUM_VERTICES)
            }
            EnumError::ZeroShards => write!(fm, "shard count must be at least 1"),
            EnumError::MissingConstraint => write!(fm, "task carries no parameter constraint"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for EnumError {}

// ===== task =====

/// One exhaustive-scan request: order, optional class constraint, shard count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationTask {
    n: usize,
    constraint: Option<ParamConstraint>,
    shards: usize,
}

impl EnumerationTask {
    pub fn new(
        n: usize,
        constraint: Option<ParamConstraint>,
        shards: usize,
    ) -> Result<EnumerationTask, EnumError> {
        if n < 2 || n > MAX_ENUM_VERTICES {
            return Err(EnumError::OrderOutOfRange(n));
        }
        if shards == 0 {
            return Err(EnumError::ZeroShards);
        }
        Ok(EnumerationTask {
            n,
            constraint,
            shards,
        })
    }

    pub fn unconstrained(n: usize) -> Result<EnumerationTask, EnumError> {
        EnumerationTask::new(n, None, 1)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn constraint(&self) -> Option<ParamConstraint> {
        self.constraint
    }

    #[inline]
    pub fn shards(&self) -> usize {
        self.shards
    }
}

// ===== mask plumbing =====

/// Vertex pairs of an n-set in lexicographic order; bit i of a mask is edge
/// pairs[i].
#[derive(Clone, Copy)]
struct PairTable {
    n: usize,
    m: u32,
    pairs: [(u8, u8); MAX_PAIRS],
}

fn pair_table(n: usize) -> PairTable {
    let mut pairs = [(0u8, 0u8); MAX_PAIRS];
    let mut m = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            pairs[m] = (u as u8, v as u8);
            m += 1;
        }
    }
    PairTable {
        n,
        m: m as u32,
        pairs,
    }
}

#[inline(always)]
fn rows_from_mask(table: &PairTable, mask: u64) -> [u32; MAX_ENUM_VERTICES] {
    let mut rows = [0u32; MAX_ENUM_VERTICES];
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (u, v) = table.pairs[i];
        rows[u as usize] |= 1 << v;
        rows[v as usize] |= 1 << u;
    }
    rows
}

#[inline(always)]
fn rows_connected(rows: &[u32; MAX_ENUM_VERTICES], n: usize) -> bool {
    let full: u32 = (1 << n) - 1;
    let mut seen: u32 = 1;
    loop {
        let mut grow = seen;
        let mut it = seen;
        while it != 0 {
            let u = it.trailing_zeros() as usize;
            it &= it - 1;
            grow |= rows[u];
        }
        if grow == seen {
            return seen == full;
        }
        seen = grow;
        if seen == full {
            return true;
        }
    }
}

/// Per-edge weights indexed by endpoint degrees, so the hot loop does table
/// lookups instead of square roots.
#[inline(always)]
fn weight_table() -> [[f64; MAX_ENUM_VERTICES]; MAX_ENUM_VERTICES] {
    let mut t = [[0.0; MAX_ENUM_VERTICES]; MAX_ENUM_VERTICES];
    for x in 1..MAX_ENUM_VERTICES {
        for y in 1..MAX_ENUM_VERTICES {
            t[x][y] = f_raw(x as f64, y as f64);
        }
    }
    t
}

/// ABC value of a mask, accumulated in ascending pair order (the same
/// lexicographic edge order abc_index uses, so the two agree bit for bit).
#[inline(always)]
fn abc_from_mask(
    table: &PairTable,
    mask: u64,
    rows: &[u32; MAX_ENUM_VERTICES],
    weights: &[[f64; MAX_ENUM_VERTICES]; MAX_ENUM_VERTICES],
) -> f64 {
    let mut deg = [0usize; MAX_ENUM_VERTICES];
    for u in 0..table.n {
        deg[u] = rows[u].count_ones() as usize;
    }
    let mut total = 0.0;
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (u, v) = table.pairs[i];
        total += weights[deg[u as usize]][deg[v as usize]];
    }
    total
}

// ===== streaming enumeration =====

/// Every labeled connected graph on task.n vertices, each exactly once, in
/// ascending mask order; graphs failing the task's constraint are skipped.
pub fn enumerate_connected(task: &EnumerationTask) -> ConnectedIter {
    let table = pair_table(task.n);
    ConnectedIter {
        constraint: task.constraint,
        next: 0,
        end: 1u64 << table.m,
        table,
    }
}

pub struct ConnectedIter {
    table: PairTable,
    constraint: Option<ParamConstraint>,
    next: u64,
    end: u64,
}

impl Iterator for ConnectedIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let rows = rows_from_mask(&self.table, mask);
            if !rows_connected(&rows, self.table.n) {
                continue;
            }
            let g = Graph::from_rows(self.table.n, &rows);
            if let Some(c) = self.constraint {
                if !c.matches(&g) {
                    continue;
                }
            }
            return Some(g);
        }
        None
    }
}

// ===== sharded scanning =====

/// Running extremal state for one invariant value.
#[derive(Debug, Clone)]
struct Bucket {
    count: u64,
    best: f64,
    /// (mask, value) pairs within ABC_EPS of the running best, mask order.
    candidates: Vec<(u64, f64)>,
    /// Largest value seen strictly below best - ABC_EPS.
    runner_up: Option<f64>,
}

impl Bucket {
    fn new() -> Bucket {
        Bucket {
            count: 0,
            best: f64::NEG_INFINITY,
            candidates: Vec::new(),
            runner_up: None,
        }
    }

    fn push(&mut self, mask: u64, value: f64) {
        self.count += 1;
        if value > self.best {
            self.best = value;
            // candidates below the raised bar move to runner-up
            let old = core::mem::take(&mut self.candidates);
            let mut kept = Vec::with_capacity(old.len() + 1);
            for (m, v) in old {
                if v >= self.best - ABC_EPS {
                    kept.push((m, v));
                } else {
                    self.bump_runner(v);
                }
            }
            kept.push((mask, value));
            self.candidates = kept;
        } else if value >= self.best - ABC_EPS {
            self.candidates.push((mask, value));
        } else {
            self.bump_runner(value);
        }
    }

    fn bump_runner(&mut self, v: f64) {
        if self.runner_up.map_or(true, |r| v > r) {
            self.runner_up = Some(v);
        }
    }
}

/// One shard's folded contribution, opaque to executors.
#[derive(Debug, Clone)]
pub struct ShardPartial {
    buckets: BTreeMap<usize, Bucket>,
}

/// Runs shard jobs 0..shards and returns their results in shard order.
/// Implementations choose the scheduling; the merge is order-insensitive by
/// construction because partials are combined in index order afterward.
pub trait ShardExecutor {
    fn run(&self, shards: usize, job: &(dyn Fn(usize) -> ShardPartial + Sync)) -> Vec<ShardPartial>;
}

/// Runs every shard on the calling thread.
pub struct SequentialExecutor;

impl ShardExecutor for SequentialExecutor {
    fn run(&self, shards: usize, job: &(dyn Fn(usize) -> ShardPartial + Sync)) -> Vec<ShardPartial> {
        (0..shards).map(job).collect()
    }
}

enum ScanMode {
    /// Keep only graphs matching the constraint; single bucket at its value.
    Filtered(ParamConstraint),
    /// Keep everything; bucket by the measured invariant.
    Bucketed(ParamKind),
}

fn scan_shard(n: usize, mode: &ScanMode, lo: u64, hi: u64) -> ShardPartial {
    let table = pair_table(n);
    let weights = weight_table();
    let mut buckets: BTreeMap<usize, Bucket> = BTreeMap::new();
    for mask in lo..hi {
        let rows = rows_from_mask(&table, mask);
        if !rows_connected(&rows, n) {
            continue;
        }
        let g = Graph::from_rows(n, &rows);
        let key = match mode {
            ScanMode::Filtered(c) => {
                if c.kind.evaluate(&g) != c.value {
                    continue;
                }
                c.value
            }
            ScanMode::Bucketed(kind) => kind.evaluate(&g),
        };
        let value = abc_from_mask(&table, mask, &rows, &weights);
        buckets.entry(key).or_insert_with(Bucket::new).push(mask, value);
    }
    ShardPartial { buckets }
}

#[derive(Debug, Clone)]
struct MergedBucket {
    count: u64,
    best: f64,
    maximizers: Vec<(u64, f64)>,
    runner_up: Option<f64>,
}

/// Merge partials in ascending shard order. The survivor set is independent
/// of the shard count: every global maximizer sits within ABC_EPS of its own
/// shard's best and was therefore retained as a candidate there, and the
/// global runner-up is either some shard's runner-up or a dropped candidate.
fn merge(parts: &[ShardPartial]) -> BTreeMap<usize, MergedBucket> {
    let mut best: BTreeMap<usize, f64> = BTreeMap::new();
    for part in parts {
        for (&key, bucket) in &part.buckets {
            let entry = best.entry(key).or_insert(f64::NEG_INFINITY);
            if bucket.best > *entry {
                *entry = bucket.best;
            }
        }
    }
    let mut out: BTreeMap<usize, MergedBucket> = BTreeMap::new();
    for part in parts {
        for (&key, bucket) in &part.buckets {
            let top = best[&key];
            let m = out.entry(key).or_insert_with(|| MergedBucket {
                count: 0,
                best: top,
                maximizers: Vec::new(),
                runner_up: None,
            });
            m.count += bucket.count;
            for &(mask, v) in &bucket.candidates {
                if v >= top - ABC_EPS {
                    m.maximizers.push((mask, v));
                } else if m.runner_up.map_or(true, |r| v > r) {
                    m.runner_up = Some(v);
                }
            }
            if let Some(r) = bucket.runner_up {
                if m.runner_up.map_or(true, |x| r > x) {
                    m.runner_up = Some(r);
                }
            }
        }
    }
    out
}

fn shard_bounds(total: u64, shards: usize, s: usize) -> (u64, u64) {
    let len = total.div_ceil(shards as u64);
    let lo = (s as u64) * len;
    (lo.min(total), (lo + len).min(total))
}

fn run_scan<E: ShardExecutor>(
    n: usize,
    mode: ScanMode,
    shards: usize,
    exec: &E,
) -> BTreeMap<usize, MergedBucket> {
    let total = 1u64 << pair_table(n).m;
    let job = |s: usize| {
        let (lo, hi) = shard_bounds(total, shards, s);
        scan_shard(n, &mode, lo, hi)
    };
    let parts = exec.run(shards, &job);
    merge(&parts)
}

// ===== reports =====

/// Brute-force extremal data for one constrained class. The enumerator fills
/// the measured fields; the verifier layers formula_value, the
/// unique_and_matches verdict, and the asserted flag on top.
#[derive(Debug, Clone)]
pub struct ExtremalReport {
    pub n: usize,
    pub constraint: ParamConstraint,
    pub class_size: u64,
    /// None iff the class is empty.
    pub max_value: Option<f64>,
    /// Closed-form value for this class, when one exists.
    pub formula_value: Option<f64>,
    /// Labeled graphs within ABC_EPS of the maximum.
    pub labeled_maximizers: u64,
    /// The maximizers, one representative per isomorphism class.
    pub maximizer_iso_classes: Vec<Graph>,
    /// Distance from the maximum down to the best non-maximizer, if any.
    pub runner_up_gap: Option<f64>,
    /// Verifier verdict: exactly one iso class and it matches the formula.
    pub unique_and_matches: bool,
    /// False while the result is informational only.
    pub asserted: bool,
}

/// Extremal data for one value of an unconstrained invariant scan.
#[derive(Debug, Clone)]
pub struct ClassSummary {
    pub value: usize,
    pub class_size: u64,
    pub max_abc: f64,
    pub labeled_maximizers: u64,
    pub maximizer_iso_classes: Vec<Graph>,
    pub runner_up_gap: Option<f64>,
}

fn iso_representatives(n: usize, maximizers: &[(u64, f64)]) -> Vec<Graph> {
    let table = pair_table(n);
    let mut reps: Vec<Graph> = Vec::new();
    for &(mask, _) in maximizers {
        let g = Graph::from_rows(n, &rows_from_mask(&table, mask));
        if !reps.iter().any(|r| is_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

/// Exhaustive maximum of the ABC index over one constrained class.
pub fn max_abc_over_class<E: ShardExecutor>(
    task: &EnumerationTask,
    exec: &E,
) -> Result<ExtremalReport, EnumError> {
    let constraint = task.constraint.ok_or(EnumError::MissingConstraint)?;
    let merged = run_scan(task.n, ScanMode::Filtered(constraint), task.shards, exec);
    let report = match merged.get(&constraint.value) {
        None => ExtremalReport {
            n: task.n,
            constraint,
            class_size: 0,
            max_value: None,
            formula_value: None,
            labeled_maximizers: 0,
            maximizer_iso_classes: Vec::new(),
            runner_up_gap: None,
            unique_and_matches: false,
            asserted: false,
        },
        Some(b) => ExtremalReport {
            n: task.n,
            constraint,
            class_size: b.count,
            max_value: Some(b.best),
            formula_value: None,
            labeled_maximizers: b.maximizers.len() as u64,
            maximizer_iso_classes: iso_representatives(task.n, &b.maximizers),
            runner_up_gap: b.runner_up.map(|r| b.best - r),
            unique_and_matches: false,
            asserted: false,
        },
    };
    Ok(report)
}

/// Single-pass scan bucketing every connected graph by one invariant,
/// reporting each value's class size and extremal data, ascending by value.
pub fn scan_classes<E: ShardExecutor>(
    n: usize,
    kind: ParamKind,
    shards: usize,
    exec: &E,
) -> Result<Vec<ClassSummary>, EnumError> {
    if n < 2 || n > MAX_ENUM_VERTICES {
        return Err(EnumError::OrderOutOfRange(n));
    }
    if shards == 0 {
        return Err(EnumError::ZeroShards);
    }
    let merged = run_scan(n, ScanMode::Bucketed(kind), shards, exec);
    Ok(merged
        .into_iter()
        .map(|(value, b)| ClassSummary {
            value,
            class_size: b.count,
            max_abc: b.best,
            labeled_maximizers: b.maximizers.len() as u64,
            maximizer_iso_classes: iso_representatives(n, &b.maximizers),
            runner_up_gap: b.runner_up.map(|r| b.best - r),
        })
        .collect())
}

// ===== tests =====

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_edgeconn_extremal, build_turan, formula_edgeconn};
    use crate::index::abc_index;

    #[test]
    fn connected_counts_small() {
        let expect = [(2usize, 1u64), (3, 4), (4, 38), (5, 728), (6, 26704)];
        for &(n, want) in &expect {
            let task = EnumerationTask::unconstrained(n).unwrap();
            assert_eq!(enumerate_connected(&task).count() as u64, want, "n={}", n);
        }
    }

    #[test]
    fn task_validation() {
        assert_eq!(
            EnumerationTask::new(1, None, 1),
            Err(EnumError::OrderOutOfRange(1))
        );
        assert_eq!(
            EnumerationTask::new(9, None, 1),
            Err(EnumError::OrderOutOfRange(9))
        );
        assert_eq!(EnumerationTask::new(4, None, 0), Err(EnumError::ZeroShards));
        let t = EnumerationTask::new(4, None, 3).unwrap();
        assert_eq!((t.n(), t.shards(), t.constraint()), (4, 3, None));
    }

    #[test]
    fn constraint_filter_semantics() {
        let c = ParamConstraint::new(ParamKind::Independence, 3).unwrap();
        let task = EnumerationTask::new(4, Some(c), 1).unwrap();
        let found: Vec<Graph> = enumerate_connected(&task).collect();
        assert_eq!(found.len(), 4);
        for g in &found {
            assert_eq!(ParamKind::Independence.evaluate(g), 3);
            assert!(g.is_connected());
        }
        let star = Graph::star(4).unwrap();
        assert!(found.iter().any(|g| is_isomorphic(g, &star)));
    }

    #[test]
    fn yielded_graphs_are_valid_and_distinct() {
        let task = EnumerationTask::unconstrained(4).unwrap();
        let all: Vec<Graph> = enumerate_connected(&task).collect();
        for (i, g) in all.iter().enumerate() {
            assert!(g.is_connected());
            for other in &all[..i] {
                assert!(g != other, "duplicate labeled graph");
            }
        }
    }

    #[test]
    fn star_class_is_unique_maximizer() {
        let c = ParamConstraint::new(ParamKind::Independence, 4).unwrap();
        let task = EnumerationTask::new(5, Some(c), 1).unwrap();
        let rep = max_abc_over_class(&task, &SequentialExecutor).unwrap();
        assert_eq!(rep.class_size, 5);
        assert_eq!(rep.labeled_maximizers, 5);
        assert_eq!(rep.maximizer_iso_classes.len(), 1);
        assert!(is_isomorphic(
            &rep.maximizer_iso_classes[0],
            &Graph::star(5).unwrap()
        ));
        let max = rep.max_value.unwrap();
        assert!((max - 3.4641016151377544).abs() < 1e-9);
        assert!(rep.runner_up_gap.is_none(), "all five stars tie");
    }

    #[test]
    fn beta_two_class_at_five() {
        let c = ParamConstraint::new(ParamKind::Independence, 2).unwrap();
        let task = EnumerationTask::new(5, Some(c), 1).unwrap();
        let rep = max_abc_over_class(&task, &SequentialExecutor).unwrap();
        assert_eq!(rep.class_size, 372);
        assert_eq!(rep.labeled_maximizers, 10);
        assert_eq!(rep.maximizer_iso_classes.len(), 1);
        assert!((rep.max_value.unwrap() - 5.7101006532948).abs() < 1e-9);
        assert!((rep.runner_up_gap.unwrap() - 0.434859091087632).abs() < 1e-9);
    }

    #[test]
    fn bipartite_class_at_six() {
        let c = ParamConstraint::new(ParamKind::Chromatic, 2).unwrap();
        let task = EnumerationTask::new(6, Some(c), 1).unwrap();
        let rep = max_abc_over_class(&task, &SequentialExecutor).unwrap();
        assert_eq!(rep.class_size, 3031);
        assert_eq!(rep.labeled_maximizers, 10);
        assert_eq!(rep.maximizer_iso_classes.len(), 1);
        assert!(is_isomorphic(
            &rep.maximizer_iso_classes[0],
            &build_turan(6, 2).unwrap()
        ));
        assert!((rep.max_value.unwrap() - 6.0).abs() < 1e-9);
        assert!((rep.runner_up_gap.unwrap() - 0.34314575050761853).abs() < 1e-9);
    }

    #[test]
    fn edgeconn_class_at_six() {
        let c = ParamConstraint::new(ParamKind::EdgeConnectivity, 2).unwrap();
        let task = EnumerationTask::new(6, Some(c), 1).unwrap();
        let rep = max_abc_over_class(&task, &SequentialExecutor).unwrap();
        assert_eq!(rep.class_size, 10110);
        assert_eq!(rep.labeled_maximizers, 60);
        assert_eq!(rep.maximizer_iso_classes.len(), 1);
        assert!(is_isomorphic(
            &rep.maximizer_iso_classes[0],
            &build_edgeconn_extremal(6, 2).unwrap()
        ));
        let max = rep.max_value.unwrap();
        assert!((max - formula_edgeconn(6, 2).unwrap()).abs() < 1e-9);
        assert!((rep.runner_up_gap.unwrap() - 0.38273264345672153).abs() < 1e-9);
    }

    #[test]
    fn pendant_class_at_six() {
        let c = ParamConstraint::new(ParamKind::Pendant, 4).unwrap();
        let task = EnumerationTask::new(6, Some(c), 1).unwrap();
        let rep = max_abc_over_class(&task, &SequentialExecutor).unwrap();
        assert_eq!(rep.class_size, 210);
        assert_eq!(rep.labeled_maximizers, 120);
        assert_eq!(rep.maximizer_iso_classes.len(), 1);
        assert!((rep.max_value.unwrap() - 4.012289773726411).abs() < 1e-9);
        assert!((rep.runner_up_gap.unwrap() - 0.07963678334883983).abs() < 1e-9);
    }

    #[test]
    fn empty_class_reported_not_erred() {
        let c = ParamConstraint::new(ParamKind::Independence, 6).unwrap();
        let task = EnumerationTask::new(6, Some(c), 1).unwrap();
        let rep = max_abc_over_class(&task, &SequentialExecutor).unwrap();
        assert_eq!(rep.class_size, 0);
        assert_eq!(rep.max_value, None);
        assert!(rep.maximizer_iso_classes.is_empty());
        assert_eq!(rep.runner_up_gap, None);
    }

    #[test]
    fn missing_constraint_is_an_error() {
        let task = EnumerationTask::unconstrained(5).unwrap();
        assert!(matches!(
            max_abc_over_class(&task, &SequentialExecutor),
            Err(EnumError::MissingConstraint)
        ));
    }

    #[test]
    fn shard_count_does_not_change_reports() {
        let c = ParamConstraint::new(ParamKind::EdgeConnectivity, 2).unwrap();
        let base = max_abc_over_class(
            &EnumerationTask::new(6, Some(c), 1).unwrap(),
            &SequentialExecutor,
        )
        .unwrap();
        for shards in [2usize, 3, 8, 31] {
            let task = EnumerationTask::new(6, Some(c), shards).unwrap();
            let rep = max_abc_over_class(&task, &SequentialExecutor).unwrap();
            assert_eq!(rep.class_size, base.class_size);
            assert_eq!(rep.labeled_maximizers, base.labeled_maximizers);
            assert_eq!(rep.max_value, base.max_value, "bitwise identical");
            assert_eq!(rep.runner_up_gap, base.runner_up_gap);
            assert_eq!(
                rep.maximizer_iso_classes.len(),
                base.maximizer_iso_classes.len()
            );
        }
    }

    #[test]
    fn totality_per_invariant() {
        // class sizes per invariant value, frozen from an independent scan
        let cases: [(usize, ParamKind, &[(usize, u64)]); 8] = [
            (4, ParamKind::Independence, &[(1, 1), (2, 33), (3, 4)]),
            (4, ParamKind::Pendant, &[(0, 10), (1, 12), (2, 12), (3, 4)]),
            (4, ParamKind::EdgeConnectivity, &[(1, 28), (2, 9), (3, 1)]),
            (4, ParamKind::Chromatic, &[(2, 19), (3, 18), (4, 1)]),
            (
                5,
                ParamKind::Independence,
                &[(1, 1), (2, 372), (3, 350), (4, 5)],
            ),
            (
                5,
                ParamKind::Pendant,
                &[(0, 253), (1, 260), (2, 150), (3, 60), (4, 5)],
            ),
            (
                5,
                ParamKind::EdgeConnectivity,
                &[(1, 475), (2, 227), (3, 25), (4, 1)],
            ),
            (
                5,
                ParamKind::Chromatic,
                &[(2, 195), (3, 472), (4, 60), (5, 1)],
            ),
        ];
        let totals = [(4usize, 38u64), (5, 728)];
        for &(n, kind, map) in &cases {
            let classes = scan_classes(n, kind, 2, &SequentialExecutor).unwrap();
            let got: Vec<(usize, u64)> = classes.iter().map(|c| (c.value, c.class_size)).collect();
            assert_eq!(got.as_slice(), map, "n={} {}", n, kind.label());
            let total: u64 = classes.iter().map(|c| c.class_size).sum();
            let want = totals.iter().find(|&&(tn, _)| tn == n).unwrap().1;
            assert_eq!(total, want);
        }
    }

    #[test]
    fn scan_classes_matches_filtered_scan() {
        let classes =
            scan_classes(5, ParamKind::Chromatic, 1, &SequentialExecutor).unwrap();
        for c in &classes {
            let pc = ParamConstraint::new(ParamKind::Chromatic, c.value).unwrap();
            let task = EnumerationTask::new(5, Some(pc), 1).unwrap();
            let rep = max_abc_over_class(&task, &SequentialExecutor).unwrap();
            assert_eq!(rep.class_size, c.class_size);
            assert_eq!(rep.max_value, Some(c.max_abc));
            assert_eq!(rep.labeled_maximizers, c.labeled_maximizers);
        }
    }

    #[test]
    fn enumerated_abc_agrees_with_direct_evaluation() {
        // the mask kernel and the Graph-side accumulation must agree bitwise
        let task = EnumerationTask::unconstrained(5).unwrap();
        let table = pair_table(5);
        let weights = weight_table();
        let mut seen = 0;
        for g in enumerate_connected(&task) {
            let mut mask = 0u64;
            for i in 0..table.m as usize {
                let (u, v) = table.pairs[i];
                if g.has_edge(u as usize, v as usize) {
                    mask |= 1 << i;
                }
            }
            let rows = rows_from_mask(&table, mask);
            assert_eq!(abc_from_mask(&table, mask, &rows, &weights), abc_index(&g));
            seen += 1;
        }
        assert_eq!(seen, 728);
    }
}
