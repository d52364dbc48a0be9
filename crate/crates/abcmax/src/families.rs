//! The four extremal families and their closed-form maximum values.
//!
//! Builders materialize the graphs (so they obey the 32-vertex cap); the
//! value formulas are plain scalar arithmetic and accept orders far beyond
//! that, since sweeps evaluate them up to n = 10^6 without ever building
//! anything.

use crate::graph::{Graph, GraphError};
use crate::math::sqrt;
use core::f64::consts::SQRT_2;
use core::fmt;

/// Caller-facing ceiling for formula arguments; far past every sweep range,
/// but low enough that the f64 expressions lose nothing to rounding.
pub const FORMULA_MAX_N: u64 = 1_000_000;

// ===== errors =====

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyError {
    /// (n, param) is outside the family's valid range.
    Range {
        family: &'static str,
        n: u64,
        param: u64,
    },
    /// Construction failed (capacity, zero order).
    Graph(GraphError),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyError::Range { family, n, param } => {
                write!(fm, "(n={}, param={}) outside the {} range", n, param, family)
            }
            FamilyError::Graph(e) => write!(fm, "construction failed: {}", e),
        }
    }
}

impl From<GraphError> for FamilyError {
    fn from(e: GraphError) -> FamilyError {
        FamilyError::Graph(e)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for FamilyError {}

// ===== family dispatch =====

/// The four named extremal constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    IndependenceExtremal,
    PendantExtremal,
    EdgeconnExtremal,
    Turan,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::IndependenceExtremal => "independence_extremal",
            Family::PendantExtremal => "pendant_extremal",
            Family::EdgeconnExtremal => "edgeconn_extremal",
            Family::Turan => "turan",
        }
    }
}

/// A family pinned to concrete (n, param); param is beta, p, k, or t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub n: u64,
    pub param: u64,
}

impl FamilySpec {
    /// Materialize the graph (n must fit the 32-vertex cap).
    pub fn build(&self) -> Result<Graph, FamilyError> {
        if self.n > 32 {
            return Err(FamilyError::Graph(GraphError::BadOrder(self.n as usize)));
        }
        let (n, p) = (self.n as usize, self.param as usize);
        match self.family {
            Family::IndependenceExtremal => build_independence_extremal(n, p),
            Family::PendantExtremal => build_pendant_extremal(n, p),
            Family::EdgeconnExtremal => build_edgeconn_extremal(n, p),
            Family::Turan => build_turan(n, p),
        }
    }
}

// ===== independence =====

/// Empty graph on beta vertices joined to a clique on the rest; the unique
/// maximizer among connected graphs with independence number beta.
pub fn build_independence_extremal(n: usize, beta: usize) -> Result<Graph, FamilyError> {
    if beta < 1 || beta + 1 > n {
        return Err(FamilyError::Range {
            family: "independence_extremal",
            n: n as u64,
            param: beta as u64,
        });
    }
    Ok(Graph::join(&Graph::empty(beta)?, &Graph::complete(n - beta)?)?)
}

/// Closed-form maximum ABC index at independence number beta.
pub fn formula_independence(n: u64, beta: u64) -> Result<f64, FamilyError> {
    if beta < 1 || beta + 1 > n || n > FORMULA_MAX_N {
        return Err(FamilyError::Range {
            family: "independence_extremal",
            n,
            param: beta,
        });
    }
    let (nf, b) = (n as f64, beta as f64);
    let cross = b * (nf - b) * sqrt((2.0 * nf - b - 3.0) / ((nf - b) * (nf - 1.0)));
    let clique =
        (nf - b) * (nf - b - 1.0) / 2.0 * sqrt((2.0 * nf - 4.0) / ((nf - 1.0) * (nf - 1.0)));
    Ok(cross + clique)
}

// ===== pendant =====

/// The maximizer among connected graphs with exactly p degree-1 vertices:
/// the star when n-p = 1, a path end loaded with leaves when n-p = 2, and a
/// clique with all p leaves on one vertex when n-p > 2.
pub fn build_pendant_extremal(n: usize, p: usize) -> Result<Graph, FamilyError> {
    check_pendant_domain(n as u64, p as u64)?;
    match n - p {
        1 => Ok(Graph::star(n)?),
        2 => {
            // path 0-1-2 with n-3 leaves on vertex 0; vertex 2 stays pendant
            let mut g = Graph::path(3)?;
            g = Graph::disjoint_union(&g, &Graph::empty(n - 3)?)?;
            for leaf in 3..n {
                g = g.with_edge(0, leaf)?;
            }
            Ok(g)
        }
        _ => {
            // clique on n-p vertices, all p leaves hang off vertex 0
            let mut g = Graph::disjoint_union(&Graph::complete(n - p)?, &Graph::empty(p)?)?;
            for leaf in (n - p)..n {
                g = g.with_edge(0, leaf)?;
            }
            Ok(g)
        }
    }
}

// The n-p = 1 case needs n >= 3 and the n-p = 2 case needs n >= 4; below
// that the construction picks up an extra pendant vertex and leaves the
// class it is supposed to represent.
fn check_pendant_domain(n: u64, p: u64) -> Result<(), FamilyError> {
    let bad = p < 1
        || p + 1 > n
        || (n - p == 1 && n < 3)
        || (n - p == 2 && n < 4)
        || n > FORMULA_MAX_N;
    if bad {
        return Err(FamilyError::Range {
            family: "pendant_extremal",
            n,
            param: p,
        });
    }
    Ok(())
}

/// Closed-form maximum ABC index at pendant count p, dispatched on n-p.
pub fn formula_pendant(n: u64, p: u64) -> Result<f64, FamilyError> {
    check_pendant_domain(n, p)?;
    let (nf, pf) = (n as f64, p as f64);
    Ok(match n - p {
        1 => sqrt((nf - 1.0) * (nf - 2.0)),
        2 => (nf - 3.0) * sqrt((nf - 3.0) / (nf - 2.0)) + SQRT_2,
        _ => {
            let leaves = pf * sqrt((nf - 2.0) / (nf - 1.0));
            let hub = (nf - pf - 1.0)
                * sqrt((2.0 * nf - pf - 4.0) / ((nf - 1.0) * (nf - pf - 1.0)));
            let clique = (nf - pf - 1.0) * (nf - pf - 2.0) / 2.0
                * sqrt((2.0 * nf - 2.0 * pf - 4.0) / ((nf - pf - 1.0) * (nf - pf - 1.0)));
            leaves + hub + clique
        }
    })
}

// ===== edge connectivity =====

/// Clique on k vertices joined to (an isolated vertex next to a clique on
/// n-k-1 vertices); edge connectivity exactly k. The k = n-1 case is
/// rejected: the construction degenerates there, and the complete graph is
/// covered by the independence family at beta = 1.
pub fn build_edgeconn_extremal(n: usize, k: usize) -> Result<Graph, FamilyError> {
    check_edgeconn_domain(n as u64, k as u64)?;
    let tail = Graph::disjoint_union(&Graph::empty(1)?, &Graph::complete(n - k - 1)?)?;
    Ok(Graph::join(&Graph::complete(k)?, &tail)?)
}

fn check_edgeconn_domain(n: u64, k: u64) -> Result<(), FamilyError> {
    if n < 6 || k < 2 || k + 2 > n || n > FORMULA_MAX_N {
        return Err(FamilyError::Range {
            family: "edgeconn_extremal",
            n,
            param: k,
        });
    }
    Ok(())
}

/// Closed-form maximum ABC index at edge connectivity k (n >= 6).
pub fn formula_edgeconn(n: u64, k: u64) -> Result<f64, FamilyError> {
    check_edgeconn_domain(n, k)?;
    let (nf, kf) = (n as f64, k as f64);
    let apex = kf * sqrt((nf + kf - 3.0) / (kf * (nf - 1.0)));
    let joint = kf * (kf - 1.0) / (2.0 * (nf - 1.0)) * sqrt(2.0 * nf - 4.0);
    let body = (nf - kf - 1.0) * (nf - kf - 2.0) / (2.0 * (nf - 2.0)) * sqrt(2.0 * nf - 6.0);
    let cross = kf * (nf - kf - 1.0) * sqrt((2.0 * nf - 5.0) / ((nf - 1.0) * (nf - 2.0)));
    Ok(apex + joint + body + cross)
}

// ===== balanced multipartite =====

/// Complete t-partite graph with parts as equal as possible, larger parts
/// first; chromatic number exactly t.
pub fn build_turan(n: usize, t: usize) -> Result<Graph, FamilyError> {
    if t < 2 || t > n {
        return Err(FamilyError::Range {
            family: "turan",
            n: n as u64,
            param: t as u64,
        });
    }
    let small = n / t;
    let extra = n % t; // this many parts get one more vertex
    let size_of = |i: usize| if i < extra { small + 1 } else { small };
    let mut g = Graph::empty(size_of(0))?;
    for i in 1..t {
        g = Graph::join(&g, &Graph::empty(size_of(i))?)?;
    }
    Ok(g)
}

/// Maximum ABC index over connected bipartite graphs of order n; parity
/// dispatch, attained by the balanced complete bipartite graph.
pub fn formula_bipartite(n: u64) -> Result<f64, FamilyError> {
    if n < 2 || n > FORMULA_MAX_N {
        return Err(FamilyError::Range {
            family: "turan",
            n,
            param: 2,
        });
    }
    let nf = n as f64;
    Ok(if n % 2 == 0 {
        nf / 2.0 * sqrt(nf - 2.0)
    } else {
        0.5 * sqrt((nf - 2.0) * (nf * nf - 1.0))
    })
}

// ===== tests =====

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::abc_index;
    use crate::invariants::{
        chromatic_number, edge_connectivity, independence_number, pendant_count,
    };
    use crate::iso::is_isomorphic;

    const TOL: f64 = 1e-12;
    const DUAL_TOL: f64 = 1e-9;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < TOL
    }

    #[test]
    fn independence_builders() {
        let g54 = build_independence_extremal(5, 4).unwrap();
        assert!(is_isomorphic(&g54, &Graph::star(5).unwrap()));
        let g51 = build_independence_extremal(5, 1).unwrap();
        assert_eq!(g51, Graph::complete(5).unwrap());
        let g62 = build_independence_extremal(6, 2).unwrap();
        assert_eq!(g62.degree_sequence(), &[4, 4, 5, 5, 5, 5]);
        assert_eq!(independence_number(&g62), 2);
        assert!(build_independence_extremal(5, 5).is_err());
        assert!(build_independence_extremal(5, 0).is_err());
    }

    #[test]
    fn independence_formula_values() {
        assert!(close(formula_independence(5, 2).unwrap(), 5.7101006532948));
        assert!(close(formula_independence(6, 2).unwrap(), 8.12697637617512));
        let b7 = [
            11.067971810589329,
            10.747688341998959,
            10.090480890443889,
            9.06445360363207,
            7.598114088560205,
            5.477225575051661,
        ];
        for (i, &want) in b7.iter().enumerate() {
            assert!(close(formula_independence(7, i as u64 + 1).unwrap(), want));
        }
        // beta = n-1 collapses to the star value
        for n in [5u64, 9, 40] {
            let nf = n as f64;
            assert!(close(
                formula_independence(n, n - 1).unwrap(),
                sqrt((nf - 1.0) * (nf - 2.0))
            ));
        }
        // beta = 1 is the complete graph
        assert!(
            (formula_independence(5, 1).unwrap() - abc_index(&Graph::complete(5).unwrap())).abs()
                < TOL
        );
        assert!(formula_independence(1, 1).is_err());
    }

    #[test]
    fn pendant_builders() {
        assert!(is_isomorphic(
            &build_pendant_extremal(6, 5).unwrap(),
            &Graph::star(6).unwrap()
        ));
        let g64 = build_pendant_extremal(6, 4).unwrap();
        assert_eq!(pendant_count(&g64), 4);
        assert_eq!(g64.degree_sequence(), &[1, 1, 1, 1, 2, 4]);
        let g73 = build_pendant_extremal(7, 3).unwrap();
        assert_eq!(pendant_count(&g73), 3);
        assert_eq!(g73.degree_sequence(), &[1, 1, 1, 3, 3, 3, 6]);
        // the small orders whose construction would gain an extra pendant
        assert!(build_pendant_extremal(2, 1).is_err());
        assert!(build_pendant_extremal(3, 1).is_err());
        assert!(build_pendant_extremal(3, 2).is_ok());
        assert!(build_pendant_extremal(6, 0).is_err());
        assert!(build_pendant_extremal(6, 6).is_err());
    }

    #[test]
    fn pendant_formula_values() {
        assert!(close(formula_pendant(6, 5).unwrap(), sqrt(20.0)));
        assert!(close(formula_pendant(5, 3).unwrap(), 3.0472067242285474));
        assert!(close(formula_pendant(7, 3).unwrap(), 6.6094414809128015));
        assert!(close(formula_pendant(7, 4).unwrap(), 5.772804060260751));
        assert!(close(formula_pendant(7, 5).unwrap(), 4.991922326372759));
        assert!(close(formula_pendant(7, 6).unwrap(), 5.477225575051661));
    }

    #[test]
    fn edgeconn_builders() {
        let g62 = build_edgeconn_extremal(6, 2).unwrap();
        let degs: alloc::vec::Vec<usize> = (0..6).map(|u| g62.degree(u)).collect();
        assert_eq!(degs, &[5, 5, 2, 4, 4, 4]);
        assert_eq!(edge_connectivity(&g62), 2);
        let g64 = build_edgeconn_extremal(6, 4).unwrap();
        assert_eq!(g64.degree_sequence(), &[4, 4, 5, 5, 5, 5]);
        assert_eq!(edge_connectivity(&g64), 4);
        let g72 = build_edgeconn_extremal(7, 2).unwrap();
        assert_eq!(edge_connectivity(&g72), 2);
        assert_eq!((0..7).map(|u| g72.degree(u)).min().unwrap(), 2);
        // out of range: too small, k too large, k = n-1 degenerate
        assert!(build_edgeconn_extremal(5, 2).is_err());
        assert!(build_edgeconn_extremal(6, 1).is_err());
        assert!(build_edgeconn_extremal(6, 5).is_err());
    }

    #[test]
    fn edgeconn_formula_values() {
        assert!(close(formula_edgeconn(6, 2).unwrap(), 7.366664164269486));
        assert!(close(formula_edgeconn(6, 3).unwrap(), 7.756443176504305));
        assert!(close(formula_edgeconn(6, 4).unwrap(), 8.12697637617512));
        assert!(close(formula_edgeconn(7, 2).unwrap(), 9.71715284880458));
        assert!(close(formula_edgeconn(7, 3).unwrap(), 10.07852681586537));
        assert!(close(formula_edgeconn(7, 4).unwrap(), 10.41914462191745));
        assert!(close(formula_edgeconn(7, 5).unwrap(), 10.747688341998959));
    }

    #[test]
    fn families_collide_where_expected() {
        // K2bar join K4 and K4 join (K1+K1) are the same graph
        let a = build_independence_extremal(6, 2).unwrap();
        let b = build_edgeconn_extremal(6, 4).unwrap();
        assert!(is_isomorphic(&a, &b));
        assert!(close(
            formula_independence(6, 2).unwrap(),
            formula_edgeconn(6, 4).unwrap()
        ));
        // both stars
        assert!(is_isomorphic(
            &build_independence_extremal(8, 7).unwrap(),
            &build_pendant_extremal(8, 7).unwrap()
        ));
    }

    #[test]
    fn turan_builders() {
        assert!(is_isomorphic(
            &build_turan(6, 2).unwrap(),
            &Graph::join(&Graph::empty(3).unwrap(), &Graph::empty(3).unwrap()).unwrap()
        ));
        assert!(is_isomorphic(
            &build_turan(5, 2).unwrap(),
            &Graph::join(&Graph::empty(2).unwrap(), &Graph::empty(3).unwrap()).unwrap()
        ));
        let t73 = build_turan(7, 3).unwrap();
        assert_eq!(t73.degree_sequence(), &[4, 4, 4, 5, 5, 5, 5]);
        assert_eq!(chromatic_number(&t73), 3);
        assert_eq!(build_turan(7, 7).unwrap(), Graph::complete(7).unwrap());
        assert!(build_turan(5, 1).is_err());
        assert!(build_turan(5, 6).is_err());
    }

    #[test]
    fn turan_abc_values() {
        let pins = [
            (6usize, 3usize, 7.348469228349535),
            (7, 3, 9.362037439516493),
            (7, 4, 10.07456044442185),
            (7, 5, 10.416551219943132),
            (7, 6, 10.747688341998957),
            (7, 7, 11.067971810589325),
        ];
        for &(n, t, want) in &pins {
            assert!(close(abc_index(&build_turan(n, t).unwrap()), want), "t={}", t);
        }
    }

    #[test]
    fn bipartite_formula_values() {
        let pins = [
            (4u64, 2.8284271247461903),
            (5, 4.242640687119285),
            (6, 6.0),
            (7, 7.745966692414834),
            (8, 9.797958971132712),
        ];
        for &(n, want) in &pins {
            assert!(close(formula_bipartite(n).unwrap(), want), "n={}", n);
        }
        assert!(formula_bipartite(1).is_err());
    }

    #[test]
    fn formulas_match_built_graphs() {
        // dual-path agreement plus parameter fidelity, everywhere in range
        for n in 2..=12usize {
            for beta in 1..n {
                let g = build_independence_extremal(n, beta).unwrap();
                let v = formula_independence(n as u64, beta as u64).unwrap();
                assert!((abc_index(&g) - v).abs() < DUAL_TOL, "indep n={} b={}", n, beta);
                assert_eq!(independence_number(&g), beta);
                assert!(g.is_connected());
            }
            for p in 1..n {
                let g = match build_pendant_extremal(n, p) {
                    Ok(g) => g,
                    Err(_) => continue, // the two tiny excluded orders
                };
                let v = formula_pendant(n as u64, p as u64).unwrap();
                assert!((abc_index(&g) - v).abs() < DUAL_TOL, "pend n={} p={}", n, p);
                assert_eq!(pendant_count(&g), p);
                assert!(g.is_connected());
            }
            if n >= 6 {
                for k in 2..=(n - 2) {
                    let g = build_edgeconn_extremal(n, k).unwrap();
                    let v = formula_edgeconn(n as u64, k as u64).unwrap();
                    assert!((abc_index(&g) - v).abs() < DUAL_TOL, "edge n={} k={}", n, k);
                    assert_eq!(edge_connectivity(&g), k);
                }
            }
            for t in 2..=n {
                let g = build_turan(n, t).unwrap();
                assert_eq!(chromatic_number(&g), t);
                if t == 2 {
                    let v = formula_bipartite(n as u64).unwrap();
                    assert!((abc_index(&g) - v).abs() < DUAL_TOL, "bip n={}", n);
                }
            }
        }
    }

    #[test]
    fn spec_dispatch() {
        let s = FamilySpec {
            family: Family::EdgeconnExtremal,
            n: 6,
            param: 2,
        };
        assert_eq!(s.build().unwrap(), build_edgeconn_extremal(6, 2).unwrap());
        let cap = FamilySpec {
            family: Family::Turan,
            n: 40,
            param: 2,
        };
        assert!(matches!(cap.build(), Err(FamilyError::Graph(_))));
        assert_eq!(Family::Turan.label(), "turan");
    }
}
