//! The ABC index and its scalar companions.
//!
//! Everything here is pure 64-bit float arithmetic except `big_h`, which is
//! exact 128-bit integer arithmetic because positivity of that polynomial is
//! asserted exactly, not approximately. Grid checks return the violating
//! points instead of panicking so callers can report them.

use crate::graph::{full_mask, Graph, MAX_VERTICES};
use crate::math::{pow_3_2, sqrt};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::SQRT_2;
use core::fmt;

/// Absolute tolerance for comparing ABC values (maximizer inclusion,
/// formula-vs-enumeration agreement). Values stay O(10^3), so double
/// precision leaves headroom of several orders of magnitude.
pub const ABC_EPS: f64 = 1e-9;

// ===== errors =====

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MathError {
    /// An argument left the documented domain of the named function.
    Domain { func: &'static str },
    /// Exact integer evaluation exceeded 128 bits.
    Overflow { func: &'static str },
}

impl fmt::Display for MathError {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MathError::Domain { func } => write!(fm, "argument outside the domain of {}", func),
            MathError::Overflow { func } => write!(fm, "integer overflow evaluating {}", func),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for MathError {}

// ===== edge-weight function and friends =====

/// No-domain-check core of `f`; callers guarantee x, y >= 1.
#[inline(always)]
pub(crate) fn f_raw(x: f64, y: f64) -> f64 {
    sqrt((x + y - 2.0) / (x * y))
}

/// f(x,y) = sqrt((x+y-2)/(xy)), the per-edge weight at endpoint degrees x, y.
pub fn f(x: f64, y: f64) -> Result<f64, MathError> {
    if !(x >= 1.0 && y >= 1.0) {
        return Err(MathError::Domain { func: "f" });
    }
    Ok(f_raw(x, y))
}

/// Forward difference g(x,y) = f(x+1,y) - f(x,y).
pub fn g(x: f64, y: f64) -> Result<f64, MathError> {
    if !(x >= 1.0 && y >= 1.0) {
        return Err(MathError::Domain { func: "g" });
    }
    Ok(f_raw(x + 1.0, y) - f_raw(x, y))
}

/// big_f(x,m) = x * f(x+m, 1) = x * sqrt((x+m-1)/(x+m)).
pub fn big_f(x: f64, m: u32) -> Result<f64, MathError> {
    if !(x >= 1.0) || m < 1 {
        return Err(MathError::Domain { func: "big_f" });
    }
    Ok(x * f_raw(x + m as f64, 1.0))
}

/// gap(a,b) = f(a,b-1) - f(a-1,b); positive whenever a > b > 1.
pub fn gap(a: f64, b: f64) -> Result<f64, MathError> {
    if !(a > b && b > 1.0) {
        return Err(MathError::Domain { func: "gap" });
    }
    Ok(f_raw(a, b - 1.0) - f_raw(a - 1.0, b))
}

// ===== the index itself =====

/// Sum of f(d(u), d(v)) over all edges, accumulated in lexicographic
/// (u,v) edge order so the result is bit-reproducible regardless of how the
/// graph was produced or how many threads are scanning.
pub fn abc_index(g: &Graph) -> f64 {
    let n = g.n();
    let mut deg = [0.0f64; MAX_VERTICES];
    for u in 0..n {
        deg[u] = g.degree(u) as f64;
    }
    let mut total = 0.0;
    for u in 0..n {
        let mut higher = g.row(u) & !full_mask(u + 1);
        while higher != 0 {
            let v = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            total += f_raw(deg[u], deg[v]);
        }
    }
    total
}

// ===== split-bound scalar functions =====

/// h(n,n1) = (n-2)^(3/2) - n1^(3/2) - (n-n1)^(3/2).
pub fn h(n: f64, n1: f64) -> Result<f64, MathError> {
    if !(n >= 2.0 && n1 >= 1.0 && 2.0 * n1 <= n) {
        return Err(MathError::Domain { func: "h" });
    }
    Ok(pow_3_2(n - 2.0) - (pow_3_2(n1) + pow_3_2(n - n1)))
}

/// l(n,k,n1) = sqrt(2) k (sqrt((n-2)/(n1(n-n1))) - sqrt((n+k-3)/(k(n-1)))).
pub fn l(n: f64, k: f64, n1: f64) -> Result<f64, MathError> {
    if !(n >= 4.0 && k >= 2.0 && n1 >= 1.0 && n1 <= n - 1.0) {
        return Err(MathError::Domain { func: "l" });
    }
    Ok(SQRT_2 * k * (sqrt((n - 2.0) / (n1 * (n - n1))) - sqrt((n + k - 3.0) / (k * (n - 1.0)))))
}

// ===== exact polynomial =====

fn pow_i(b: i128, e: u32) -> Option<i128> {
    let mut r: i128 = 1;
    for _ in 0..e {
        r = r.checked_mul(b)?;
    }
    Some(r)
}

fn big_h_exact(n: i128, k: i128) -> Option<i128> {
    let k2 = pow_i(k, 2)?;
    let k3 = k2.checked_mul(k)?;
    let k4 = k3.checked_mul(k)?;
    let k5 = k4.checked_mul(k)?;
    let k6 = k5.checked_mul(k)?;
    let k7 = k6.checked_mul(k)?;
    let k8 = k7.checked_mul(k)?;
    // coefficients of n^5 .. n^0, written with the signs folded in
    let c5 = k2.checked_add(k)?.checked_sub(1)?;
    let c4 = 8i128
        .checked_mul(k2)?
        .checked_add(6 * k)?
        .checked_sub(9)?
        .checked_neg()?;
    let c3 = 5i128
        .checked_mul(k5)?
        .checked_add(8i128.checked_mul(k4)?)?
        .checked_add(19 * k2)?
        .checked_add(6 * k)?
        .checked_sub(30)?;
    let c2 = k6
        .checked_sub(24i128.checked_mul(k5)?)?
        .checked_sub(42i128.checked_mul(k4)?)?
        .checked_sub(2 * k3)?
        .checked_sub(3 * k2)?
        .checked_add(20 * k)?
        .checked_add(46)?;
    let c1 = 8i128
        .checked_mul(k7)?
        .checked_add(6i128.checked_mul(k6)?)?
        .checked_sub(57i128.checked_mul(k5)?)?
        .checked_sub(75i128.checked_mul(k4)?)?
        .checked_add(10 * k3)?
        .checked_add(36 * k2)?
        .checked_add(39 * k)?
        .checked_add(33)?
        .checked_neg()?;
    let c0 = 4i128
        .checked_mul(k8)?
        .checked_add(12i128.checked_mul(k7)?)?
        .checked_sub(3i128.checked_mul(k6)?)?
        .checked_sub(46i128.checked_mul(k5)?)?
        .checked_sub(37i128.checked_mul(k4)?)?
        .checked_add(16 * k3)?
        .checked_add(27 * k2)?
        .checked_add(18 * k)?
        .checked_add(9)?;
    // Horner in n
    let mut acc = c5;
    for c in [c4, c3, c2, c1, c0] {
        acc = acc.checked_mul(n)?.checked_add(c)?;
    }
    Some(acc)
}

/// Exact value of the degree-5-in-n certificate polynomial with coefficients
/// up to k^8; 128-bit checked arithmetic, no rounding anywhere.
pub fn big_h(n: i64, k: i64) -> Result<i128, MathError> {
    if n < 1 || k < 1 {
        return Err(MathError::Domain { func: "big_h" });
    }
    big_h_exact(n as i128, k as i128).ok_or(MathError::Overflow { func: "big_h" })
}

// ===== the split-bound inequality =====

#[inline]
pub(crate) fn claim_sides(n: f64, k: f64, n1: f64) -> (f64, f64) {
    let n2 = n - n1;
    let lhs = k * sqrt((n + k - 3.0) / (k * (n - 1.0))) + pow_3_2(n - 2.0) / SQRT_2;
    let rhs =
        pow_3_2(n1) / SQRT_2 + pow_3_2(n2) / SQRT_2 + k * sqrt((n1 + n2 - 2.0) / (n1 * n2));
    (lhs, rhs)
}

/// Left side minus right side of the strict split-bound inequality at an
/// integer point; positive means the inequality holds there.
pub fn claim_margin(n: i64, k: i64, n1: i64) -> Result<f64, MathError> {
    if n < 10 || k < 2 || n1 < k + 1 || 2 * n1 > n {
        return Err(MathError::Domain { func: "claim_margin" });
    }
    let (lhs, rhs) = claim_sides(n as f64, k as f64, n1 as f64);
    Ok(lhs - rhs)
}

/// Strict version of the margin test.
pub fn claim_holds(n: i64, k: i64, n1: i64) -> Result<bool, MathError> {
    Ok(claim_margin(n, k, n1)? > 0.0)
}

// ===== grid checks =====

/// One point at which a grid check failed, with how badly it failed.
#[derive(Debug, Clone, PartialEq)]
pub struct GridViolation {
    pub point: String,
    pub margin: f64,
}

/// Outcome of scanning an inequality over an integer grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridCheckResult {
    pub description: String,
    pub domain: String,
    pub checked: u64,
    pub violations: Vec<GridViolation>,
}

impl GridCheckResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Scan the split-bound inequality over 10 <= n <= n_max, k >= 2,
/// k+1 <= n1 <= n/2, recording every point where it fails to hold strictly.
pub fn claim_grid(n_max: i64) -> GridCheckResult {
    let mut checked = 0u64;
    let mut violations = Vec::new();
    for n in 10..=n_max.max(9) {
        let half = n / 2;
        for k in 2..half {
            for n1 in (k + 1)..=half {
                checked += 1;
                let (lhs, rhs) = claim_sides(n as f64, k as f64, n1 as f64);
                let margin = lhs - rhs;
                if margin <= 0.0 {
                    violations.push(GridViolation {
                        point: format!("(n={}, k={}, n1={})", n, k, n1),
                        margin,
                    });
                }
            }
        }
    }
    GridCheckResult {
        description: String::from("strict split-bound inequality at integer points"),
        domain: format!("10 <= n <= {}, 2 <= k, k+1 <= n1 <= n/2", n_max),
        checked,
        violations,
    }
}

/// Scan exact positivity of the certificate polynomial over
/// n_min <= n <= n_max, 2 <= k < n/2.
pub fn polynomial_positivity_grid(n_min: i64, n_max: i64) -> Result<GridCheckResult, MathError> {
    let mut checked = 0u64;
    let mut violations = Vec::new();
    for n in n_min.max(1)..=n_max {
        let mut k = 2;
        while 2 * k < n {
            checked += 1;
            let value = big_h(n, k)?;
            if value <= 0 {
                violations.push(GridViolation {
                    point: format!("(n={}, k={})", n, k),
                    margin: value as f64,
                });
            }
            k += 1;
        }
    }
    Ok(GridCheckResult {
        description: String::from("certificate polynomial strictly positive"),
        domain: format!("{} <= n <= {}, 2 <= k < n/2", n_min, n_max),
        checked,
        violations,
    })
}

// ===== one-bridge value =====

/// ABC index of two cliques on x and n-x vertices joined by a single edge,
/// evaluated in closed form.
pub fn bridge_value(n: i64, x: i64) -> Result<f64, MathError> {
    if x < 2 || x > n - 2 {
        return Err(MathError::Domain { func: "bridge_value" });
    }
    let a = x as f64;
    let b = (n - x) as f64;
    Ok((a - 1.0) * f_raw(a, a - 1.0)
        + 0.5 * (a - 1.0) * (a - 2.0) * f_raw(a - 1.0, a - 1.0)
        + f_raw(a, b)
        + (b - 1.0) * f_raw(b, b - 1.0)
        + 0.5 * (b - 1.0) * (b - 2.0) * f_raw(b - 1.0, b - 1.0))
}

// ===== tests =====
