//! Maximum atom-bond connectivity (ABC) index over constrained graph classes.
//!
//! The ABC index of a graph is the sum of sqrt((d(u)+d(v)-2)/(d(u)d(v))) over
//! its edges. This crate computes it exactly for small graphs, builds the
//! extremal graphs that maximize it among connected graphs with a given
//! independence number, pendant-vertex count, edge connectivity, or chromatic
//! number, evaluates the matching closed-form maxima, and verifies the two
//! routes against each other by exhaustive enumeration of labeled connected
//! graphs.
//!
//! Layout:
//! - `graph`: bitset-backed graphs on up to 32 vertices, basic constructions
//! - `invariants`: exact independence/chromatic/edge-connectivity/pendant counts
//! - `iso`: isomorphism testing for small graphs
//! - `index`: the ABC index, its scalar helper functions, and grid checks
//! - `families`: extremal-family builders and their closed-form values
//! - `enumerate`: sharded exhaustive scans over labeled connected graphs
//! - `verify`: reconciliation of brute-force maxima against the closed forms
//!
//! The crate is `no_std`-compatible (requires `alloc`); enable the `libm`
//! feature to supply float math when `std` is off.

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("enable at least one of the `std` or `libm` features");

extern crate alloc;

mod math;

pub mod enumerate;
pub mod families;
pub mod graph;
pub mod index;
pub mod invariants;
pub mod iso;
pub mod verify;

pub use enumerate::{
    enumerate_connected, max_abc_over_class, scan_classes, ClassSummary, EnumError,
    EnumerationTask, ExtremalReport, SequentialExecutor, ShardExecutor, ShardPartial,
};
pub use families::{
    build_edgeconn_extremal, build_independence_extremal, build_pendant_extremal, build_turan,
    formula_bipartite, formula_edgeconn, formula_independence, formula_pendant, Family,
    FamilyError, FamilySpec,
};
pub use graph::{Graph, GraphError, MAX_VERTICES};
pub use index::{
    abc_index, big_f, big_h, bridge_value, claim_grid, claim_holds, claim_margin, f, g, gap, h, l,
    polynomial_positivity_grid, GridCheckResult, GridViolation, MathError, ABC_EPS,
};
pub use invariants::{
    chromatic_number, edge_connectivity, independence_number, pendant_count, ParamConstraint,
    ParamError, ParamKind,
};
pub use iso::is_isomorphic;
pub use verify::{
    check_bridge_monotonicity, check_chromatic_conjecture, check_edge_addition_monotonicity,
    split_bound_rows, verify_chromatic_bipartite, verify_edgeconn, verify_independence,
    verify_pendant, ConjectureReport, SplitBoundRow, VerifyError,
};
