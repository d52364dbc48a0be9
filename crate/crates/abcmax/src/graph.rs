//! Simple undirected graphs on at most 32 labeled vertices.
//!
//! Adjacency is one `u32` bitset row per vertex, so degree is a popcount and
//! neighborhood operations are single word ops. 32 is enough: exhaustive
//! scans stop at 8 vertices and every closed-form evaluation beyond that is
//! scalar arithmetic that never materializes a graph.

use alloc::vec::Vec;
use core::fmt;

/// Hard vertex capacity; one adjacency row per machine word.
pub const MAX_VERTICES: usize = 32;

// ===== errors =====

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    /// Requested order is zero or exceeds `MAX_VERTICES`.
    BadOrder(usize),
    /// An edge endpoint is not a vertex of the graph.
    VertexOutOfRange { v: usize, n: usize },
    /// Self-loops are not representable.
    SelfLoop(usize),
    /// A combination (join, disjoint union) would exceed `MAX_VERTICES`.
    Capacity { total: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::BadOrder(n) => write!(fm, "graph order {} not in 1..={}", n, MAX_VERTICES),
            GraphError::VertexOutOfRange { v, n } => {
                write!(fm, "vertex {} out of range for order {}", v, n)
            }
            GraphError::SelfLoop(v) => write!(fm, "self-loop at vertex {}", v),
            GraphError::Capacity { total } => {
                write!(fm, "combined order {} exceeds {}", total, MAX_VERTICES)
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GraphError {}

// ===== graph =====

/// Undirected simple graph; rows are symmetric and the diagonal is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    fn blank(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    /// Adopt prebuilt rows; caller guarantees symmetry and an empty diagonal.
    pub(crate) fn from_rows(n: usize, rows: &[u32]) -> Graph {
        debug_assert!(n >= 1 && n <= MAX_VERTICES);
        let mut adj = [0u32; MAX_VERTICES];
        adj[..n].copy_from_slice(&rows[..n]);
        Graph { n, adj }
    }

    /// Graph with the listed edges; duplicates collapse, self-loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::blank(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::blank(n)?;
        let full = full_mask(n);
        for u in 0..n {
            g.adj[u] = full & !(1 << u);
        }
        Ok(g)
    }

    /// Edgeless graph on n vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::blank(n)
    }

    /// Star S_n: vertex 0 adjacent to all others.
    pub fn star(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::blank(n)?;
        if n > 1 {
            g.adj[0] = full_mask(n) & !1;
            for u in 1..n {
                g.adj[u] = 1;
            }
        }
        Ok(g)
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::blank(n)?;
        for u in 0..n.saturating_sub(1) {
            g.adj[u] |= 1 << (u + 1);
            g.adj[u + 1] |= 1 << u;
        }
        Ok(g)
    }

    /// Cycle on n >= 3 vertices.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::BadOrder(n));
        }
        let mut g = Graph::path(n)?;
        g.adj[0] |= 1 << (n - 1);
        g.adj[n - 1] |= 1;
        Ok(g)
    }

    /// Join: disjoint union plus every edge between the two sides.
    /// Vertices of `g` keep their labels; vertices of `h` are shifted by g.n.
    pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
        let mut out = Graph::disjoint_union(g, h)?;
        let left = full_mask(g.n);
        let right = full_mask(out.n) & !left;
        for u in 0..g.n {
            out.adj[u] |= right;
        }
        for u in g.n..out.n {
            out.adj[u] |= left;
        }
        Ok(out)
    }

    /// Vertex-disjoint union, `g` first.
    pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
        let total = g.n + h.n;
        if total > MAX_VERTICES {
            return Err(GraphError::Capacity { total });
        }
        let mut out = Graph::blank(total)?;
        out.adj[..g.n].copy_from_slice(&g.adj[..g.n]);
        for u in 0..h.n {
            out.adj[g.n + u] = h.adj[u] << g.n;
        }
        Ok(out)
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbor bitset of u.
    #[inline(always)]
    pub fn row(&self, u: usize) -> u32 {
        self.adj[u]
    }

    #[inline(always)]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        let mut total = 0;
        for u in 0..self.n {
            total += self.adj[u].count_ones() as usize;
        }
        total / 2
    }

    /// Edges in lexicographic (u,v) order with u < v.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !full_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        ds.sort_unstable();
        ds
    }

    /// Copy of self with one extra edge. Errors on existing edges too, so
    /// callers cannot silently no-op.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut out = self.clone();
        out.adj[u] |= 1 << v;
        out.adj[v] |= 1 << u;
        Ok(out)
    }

    /// Relabeled copy: vertex u of self becomes perm[u].
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut out = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for u in 0..self.n {
            let mut nb = self.adj[u];
            while nb != 0 {
                let v = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                out.adj[perm[u]] |= 1 << perm[v];
            }
        }
        out
    }

    /// Reachability from vertex 0 covers everything. K_1 is connected.
    pub fn is_connected(&self) -> bool {
        let full = full_mask(self.n);
        let mut seen: u32 = 1;
        let mut frontier: u32 = 1;
        while frontier != 0 {
            let mut grow = 0;
            let mut it = frontier;
            while it != 0 {
                let u = it.trailing_zeros() as usize;
                it &= it - 1;
                grow |= self.adj[u];
            }
            frontier = grow & !seen;
            seen |= grow;
            if seen == full {
                return true;
            }
        }
        seen == full
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Bitmask with the low n bits set; n may be 32.
#[inline(always)]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

// ===== tests =====

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_builds_p3() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degree_sequence(), &[1, 1, 2]);
        assert!(g.has_edge(1, 0) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::from_edges(0, &[]), Err(GraphError::BadOrder(0)));
        assert_eq!(Graph::from_edges(33, &[]), Err(GraphError::BadOrder(33)));
        // duplicate edges collapse
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn standard_graphs() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.degree_sequence(), &[3, 3, 3, 3]);

        let s5 = Graph::star(5).unwrap();
        assert_eq!(s5.degree_sequence(), &[1, 1, 1, 1, 4]);
        assert_eq!(s5.degree(0), 4);

        assert_eq!(Graph::path(2).unwrap(), Graph::star(2).unwrap());
        assert_eq!(Graph::complete(1).unwrap(), Graph::empty(1).unwrap());
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3).unwrap());
        assert_eq!(Graph::empty(32).unwrap().n(), 32);
    }

    #[test]
    fn join_and_union_shapes() {
        let k23 = Graph::join(&Graph::empty(2).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23.degree_sequence(), &[2, 2, 2, 3, 3]);

        let cone = Graph::join(&Graph::empty(1).unwrap(), &Graph::complete(3).unwrap()).unwrap();
        assert_eq!(cone, {
            // relabel K4 so the apex is vertex 0: K4 is vertex-transitive, identical either way
            Graph::complete(4).unwrap()
        });

        let m2 = Graph::disjoint_union(&Graph::path(2).unwrap(), &Graph::path(2).unwrap()).unwrap();
        assert_eq!(m2.edges(), &[(0, 1), (2, 3)]);
        assert!(!m2.is_connected());

        assert_eq!(
            Graph::disjoint_union(&Graph::empty(1).unwrap(), &Graph::empty(1).unwrap()).unwrap(),
            Graph::empty(2).unwrap()
        );

        let too_big = Graph::join(&Graph::empty(20).unwrap(), &Graph::empty(20).unwrap());
        assert_eq!(too_big, Err(GraphError::Capacity { total: 40 }));
    }

    #[test]
    fn join_over_union_degrees() {
        // K2 joined over (K1 + K3): degree sequence (5,5,2,4,4,4) in label order
        let inner =
            Graph::disjoint_union(&Graph::empty(1).unwrap(), &Graph::complete(3).unwrap()).unwrap();
        let g = Graph::join(&Graph::complete(2).unwrap(), &inner).unwrap();
        let degs: Vec<usize> = (0..6).map(|u| g.degree(u)).collect();
        assert_eq!(degs, &[5, 5, 2, 4, 4, 4]);
        assert!(g.is_connected());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(5).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(Graph::join(&Graph::empty(3).unwrap(), &Graph::empty(4).unwrap())
            .unwrap()
            .is_connected());
        let mut split = Graph::complete(3).unwrap();
        split = Graph::disjoint_union(&split, &Graph::complete(3).unwrap()).unwrap();
        assert!(!split.is_connected());
    }

    #[test]
    fn with_edge_and_permuted() {
        let p3 = Graph::path(3).unwrap();
        let c3 = p3.with_edge(0, 2).unwrap();
        assert_eq!(c3, Graph::complete(3).unwrap());
        assert_eq!(p3.with_edge(0, 0), Err(GraphError::SelfLoop(0)));

        // relabeling preserves the edge multiset
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let perm = [2usize, 0, 3, 1];
        let h = g.permuted(&perm);
        assert_eq!(h.edge_count(), g.edge_count());
        for (u, v) in g.edges() {
            assert!(h.has_edge(perm[u], perm[v]));
        }
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 3), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (2, 3)]);
    }
}
