//! Closed-form parameter sweeps: the data behind the large-order figures.

use abcmax::{formula_edgeconn, formula_independence, formula_pendant};
use serde::Serialize;
use std::fmt;

// ===== families =====

/// Which constrained family a sweep row belongs to, named by its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepFamily {
    /// Independence number.
    Beta,
    /// Pendant-vertex count.
    P,
    /// Edge connectivity.
    K,
}

impl SweepFamily {
    pub fn label(self) -> &'static str {
        match self {
            SweepFamily::Beta => "beta",
            SweepFamily::P => "p",
            SweepFamily::K => "k",
        }
    }

    pub fn from_label(s: &str) -> Option<SweepFamily> {
        match s {
            "beta" => Some(SweepFamily::Beta),
            "p" => Some(SweepFamily::P),
            "k" => Some(SweepFamily::K),
            _ => None,
        }
    }

    /// Parameter values with a closed form at order n, inclusive.
    fn valid_range(self, n: u64) -> Option<(u64, u64)> {
        match self {
            SweepFamily::Beta | SweepFamily::P => {
                if n >= 3 {
                    Some((1, n - 1))
                } else {
                    None
                }
            }
            // the edge-connectivity closed form starts at order 6
            SweepFamily::K => {
                if n >= 6 {
                    Some((2, n - 2))
                } else {
                    None
                }
            }
        }
    }

    fn formula(self, n: u64, value: u64) -> Result<f64, SweepError> {
        let r = match self {
            SweepFamily::Beta => formula_independence(n, value),
            SweepFamily::P => formula_pendant(n, value),
            SweepFamily::K => formula_edgeconn(n, value),
        };
        r.map_err(|_| SweepError::Formula { n, family: self, value })
    }
}

// ===== errors =====

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepError {
    /// No order was requested.
    NoOrders,
    /// No family was requested.
    NoFamilies,
    /// The requested range has no valid parameter values at this order.
    EmptyRange { n: u64, family: SweepFamily, lo: u64, hi: u64 },
    /// The closed form rejected a row that passed range screening.
    Formula { n: u64, family: SweepFamily, value: u64 },
}

impl fmt::Display for SweepError {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SweepError::NoOrders => write!(fm, "sweep needs at least one order"),
            SweepError::NoFamilies => write!(fm, "sweep needs at least one family"),
            SweepError::EmptyRange { n, family, lo, hi } => write!(
                fm,
                "no valid {} values in [{}, {}] at n={}",
                family.label(),
                lo,
                hi,
                n
            ),
            SweepError::Formula { n, family, value } => write!(
                fm,
                "closed form undefined at row (n={}, {}={})",
                n,
                family.label(),
                value
            ),
        }
    }
}

impl std::error::Error for SweepError {}

// ===== rows =====

/// One formula-evaluated point of a sweep series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub n: u64,
    pub param_kind: SweepFamily,
    pub param_value: u64,
    pub abc_max: f64,
}

/// Sweep rows plus the metadata notes that the CSV writer emits as comments.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutput {
    pub rows: Vec<SweepRow>,
    pub notes: Vec<String>,
}

/// Evaluate the closed-form class maxima over whole parameter ranges.
///
/// Orders are visited in ascending order and families in the given order;
/// within a series, rows ascend by parameter value. A requested range is
/// intersected with the family's valid range and the clamp is recorded as a
/// note; an intersection that comes up empty is an error naming the series.
pub fn sweep(
    orders: &[u64],
    families: &[SweepFamily],
    range: Option<(u64, u64)>,
) -> Result<SweepOutput, SweepError> {
    if orders.is_empty() {
        return Err(SweepError::NoOrders);
    }
    if families.is_empty() {
        return Err(SweepError::NoFamilies);
    }
    let mut ns: Vec<u64> = orders.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for &n in &ns {
        for &family in families {
            let valid = match family.valid_range(n) {
                Some(v) => v,
                None => {
                    let (lo, hi) = range.unwrap_or((0, 0));
                    return Err(SweepError::EmptyRange { n, family, lo, hi });
                }
            };
            let requested = range.unwrap_or(valid);
            let lo = requested.0.max(valid.0);
            let hi = requested.1.min(valid.1);
            if lo > hi {
                return Err(SweepError::EmptyRange {
                    n,
                    family,
                    lo: requested.0,
                    hi: requested.1,
                });
            }
            if (lo, hi) != requested {
                notes.push(format!(
                    "n={} {}: range clamped to [{}, {}]",
                    n,
                    family.label(),
                    lo,
                    hi
                ));
            }
            for value in lo..=hi {
                rows.push(SweepRow {
                    n,
                    param_kind: family,
                    param_value: value,
                    abc_max: family.formula(n, value)?,
                });
            }
        }
    }
    Ok(SweepOutput { rows, notes })
}

/// Render a sweep as CSV: '#' note lines, the fixed header, then the rows
/// with dot-decimal 12-place values.
pub fn write_csv(out: &SweepOutput) -> String {
    let mut text = String::new();
    for note in &out.notes {
        text.push_str("# ");
        text.push_str(note);
        text.push('\n');
    }
    text.push_str("n,param_kind,param_value,abc_max\n");
    for row in &out.rows {
        text.push_str(&format!(
            "{},{},{},{:.12}\n",
            row.n,
            row.param_kind.label(),
            row.param_value,
            row.abc_max
        ));
    }
    text
}

// ===== tests =====
