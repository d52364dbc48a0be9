//! Exact graph invariants: independence number, chromatic number, edge
//! connectivity, and pendant-vertex count. All four are computed exactly by
//! bitset backtracking; no approximation, since they gate verification.

use crate::graph::{full_mask, Graph};
use core::fmt;

// ===== parameter constraints =====

/// Which invariant a class of graphs is constrained on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamKind {
    Independence,
    Pendant,
    EdgeConnectivity,
    Chromatic,
}

impl ParamKind {
    /// Stable lowercase name, used in reports and CSV output.
    pub fn label(self) -> &'static str {
        match self {
            ParamKind::Independence => "independence",
            ParamKind::Pendant => "pendant",
            ParamKind::EdgeConnectivity => "edge_connectivity",
            ParamKind::Chromatic => "chromatic",
        }
    }

    /// Evaluate this invariant on a graph.
    pub fn evaluate(self, g: &Graph) -> usize {
        match self {
            ParamKind::Independence => independence_number(g),
            ParamKind::Pendant => pendant_count(g),
            ParamKind::EdgeConnectivity => edge_connectivity(g),
            ParamKind::Chromatic => chromatic_number(g),
        }
    }
}

/// One invariant pinned to one target value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamConstraint {
    pub kind: ParamKind,
    pub value: usize,
}

impl ParamConstraint {
    /// Target values start at 1. Edge connectivity 1 is accepted even though
    /// the closed forms for that family start at 2.
    pub fn new(kind: ParamKind, value: usize) -> Result<ParamConstraint, ParamError> {
        if value == 0 {
            return Err(ParamError::ZeroValue(kind));
        }
        Ok(ParamConstraint { kind, value })
    }

    pub fn matches(&self, g: &Graph) -> bool {
        self.kind.evaluate(g) == self.value
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamError {
    /// Constraint targets start at 1.
    ZeroValue(ParamKind),
}

impl fmt::Display for ParamError {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ParamError::ZeroValue(kind) => {
                write!(fm, "constraint value for {} must be at least 1", kind.label())
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParamError {}

// ===== independence number =====

/// Size of a largest independent set, by branch and bound.
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    branch_mis(g, full_mask(g.n()), 0, &mut best);
    best
}

fn branch_mis(g: &Graph, cand: u32, size: usize, best: &mut usize) {
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    if cand == 0 {
        *best = size;
        return;
    }
    // branch on a candidate of maximum remaining degree: including it removes
    // the most, excluding it prunes the densest part first
    let mut pick = cand.trailing_zeros() as usize;
    let mut pick_deg = (g.row(pick) & cand).count_ones();
    let mut it = cand & (cand - 1);
    while it != 0 {
        let u = it.trailing_zeros() as usize;
        it &= it - 1;
        let d = (g.row(u) & cand).count_ones();
        if d > pick_deg {
            pick = u;
            pick_deg = d;
        }
    }
    branch_mis(g, cand & !(g.row(pick) | 1 << pick), size + 1, best);
    branch_mis(g, cand & !(1 << pick), size, best);
}

// ===== chromatic number =====

/// Least k such that the graph is properly k-colorable.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    for k in 1..n {
        if colorable(g, k) {
            return k;
        }
    }
    n
}

/// Backtracking k-colorability. Vertices are colored in index order and a
/// vertex may open at most one fresh color, which kills color-permutation
/// duplicates.
fn colorable(g: &Graph, k: usize) -> bool {
    let mut class = [0u32; MAXK];
    color_from(g, 0, 0, k, &mut class)
}

const MAXK: usize = crate::graph::MAX_VERTICES;

fn color_from(g: &Graph, u: usize, used: usize, k: usize, class: &mut [u32; MAXK]) -> bool {
    if u == g.n() {
        return true;
    }
    let row = g.row(u);
    let limit = if used < k { used + 1 } else { k };
    for c in 0..limit {
        if class[c] & row == 0 {
            class[c] |= 1 << u;
            let used_now = if c == used { used + 1 } else { used };
            if color_from(g, u + 1, used_now, k, class) {
                return true;
            }
            class[c] &= !(1 << u);
        }
    }
    false
}

// ===== edge connectivity =====

/// Minimum number of edges whose removal disconnects the graph: the smallest
/// over t != 0 of the maximum count of edge-disjoint 0-t paths. Disconnected
/// graphs (and K_1) return 0.
pub fn edge_connectivity(g: &Graph) -> usize {
    if g.n() < 2 || !g.is_connected() {
        return 0;
    }
    let mut min = usize::MAX;
    for t in 1..g.n() {
        let flow = max_flow(g, t);
        if flow < min {
            min = flow;
        }
        if min == 1 {
            break; // connected, so no smaller value is possible
        }
    }
    min
}

/// Unit-capacity max-flow from vertex 0 to t. Residual state is one bitset
/// row per vertex: bit (u,v) set means one unit may still cross u to v.
fn max_flow(g: &Graph, t: usize) -> usize {
    let n = g.n();
    let mut res = [0u32; crate::graph::MAX_VERTICES];
    for u in 0..n {
        res[u] = g.row(u);
    }
    let mut flow = 0;
    loop {
        // breadth-first search for an augmenting 0-t path in the residual
        let mut parent = [usize::MAX; crate::graph::MAX_VERTICES];
        let mut seen: u32 = 1;
        let mut queue = [0usize; crate::graph::MAX_VERTICES];
        let (mut head, mut tail) = (0, 1);
        while head < tail && parent[t] == usize::MAX {
            let u = queue[head];
            head += 1;
            let mut fresh = res[u] & !seen;
            seen |= fresh;
            while fresh != 0 {
                let v = fresh.trailing_zeros() as usize;
                fresh &= fresh - 1;
                parent[v] = u;
                queue[tail] = v;
                tail += 1;
            }
        }
        if parent[t] == usize::MAX {
            return flow;
        }
        // push one unit back along the path: forward residual off, reverse on
        let mut v = t;
        while v != 0 {
            let u = parent[v];
            res[u] &= !(1 << v);
            res[v] |= 1 << u;
            v = u;
        }
        flow += 1;
    }
}

// ===== pendant vertices =====

/// Number of vertices of degree exactly 1.
pub fn pendant_count(g: &Graph) -> usize {
    (0..g.n()).filter(|&u| g.degree(u) == 1).count()
}

// ===== tests =====
