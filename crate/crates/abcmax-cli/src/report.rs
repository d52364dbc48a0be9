//! Versioned JSON report envelope; additive schema evolution only.

use crate::graph6::write_graph6;
use crate::sweep::SweepRow;
use abcmax::{ConjectureReport, ExtremalReport, GridCheckResult};
use serde_json::{json, Value};
use std::time::{SystemTime, UNIX_EPOCH};

/// Bumped only for breaking changes; new fields may appear without a bump.
pub const SCHEMA_VERSION: u32 = 1;

fn unix_time() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Wrap homogeneous results in the versioned envelope.
pub fn envelope(command: &str, inputs: Value, results: Vec<Value>) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "timestamp": unix_time(),
        "tool_version": env!("CARGO_PKG_VERSION"),
        "results": results,
    })
}

/// One extremal-class verification record; maximizers travel as graph6.
pub fn extremal_json(rep: &ExtremalReport) -> Value {
    let maximizers: Vec<String> = rep.maximizer_iso_classes.iter().map(write_graph6).collect();
    json!({
        "n": rep.n,
        "param_kind": rep.constraint.kind.label(),
        "param_value": rep.constraint.value,
        "class_size": rep.class_size,
        "max_value": rep.max_value,
        "formula_value": rep.formula_value,
        "labeled_maximizers": rep.labeled_maximizers,
        "maximizers_graph6": maximizers,
        "runner_up_gap": rep.runner_up_gap,
        "unique_and_matches": rep.unique_and_matches,
        "asserted": rep.asserted,
    })
}

/// One conjecture-harness record; witnesses travel as graph6.
pub fn conjecture_json(rep: &ConjectureReport) -> Value {
    let witnesses: Vec<String> = rep.witnesses.iter().map(write_graph6).collect();
    json!({
        "n": rep.n,
        "chi": rep.chi,
        "turan_value": rep.turan_value,
        "brute_max": rep.brute_max,
        "witnesses_graph6": witnesses,
        "holds": rep.holds,
    })
}

/// One grid-scan record with its violation list.
pub fn grid_json(result: &GridCheckResult) -> Value {
    let violations: Vec<Value> = result
        .violations
        .iter()
        .map(|v| json!({ "point": v.point, "margin": v.margin }))
        .collect();
    json!({
        "description": result.description,
        "domain": result.domain,
        "checked": result.checked,
        "passed": result.passed(),
        "violations": violations,
    })
}

/// One sweep row.
pub fn sweep_row_json(row: &SweepRow) -> Value {
    serde_json::to_value(row).expect("sweep rows are plain data")
}

// ===== tests =====
