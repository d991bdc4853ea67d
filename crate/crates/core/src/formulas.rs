//! Closed-form values of the eccentric connectivity index on the extremal
//! families, and the bounds derived from them.
//!
//! Every quantity is an exact integer. Parameter names follow the family
//! constructors: `n` is the order, `d` the diameter, `k` the number of clique
//! vertices joined to `u_2`.

use serde::Serialize;
use thiserror::Error;

use crate::families::FamilySpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{what}: {reason}")]
    OutOfRange { what: &'static str, reason: String },
}

fn range_err(what: &'static str, reason: String) -> FormulaError {
    FormulaError::OutOfRange { what, reason }
}

fn check_nd(what: &'static str, n: usize, d: usize) -> Result<(), FormulaError> {
    if n >= 4 && 3 <= d && d < n {
        Ok(())
    } else {
        Err(range_err(what, format!("need n >= 4 and 3 <= d <= n-1, got n={n}, d={d}")))
    }
}

fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// `2 * sum_{i<d} max(i, d-i)`, the weight the bare path contributes.
fn path_part(d: u64) -> u64 {
    2 * (0..d).map(|i| i.max(d - i)).sum::<u64>()
}

/// Index of `Extremal { n, d, k }` without building it.
pub fn eci_extremal_closed(n: usize, d: usize, k: usize) -> Result<u64, FormulaError> {
    check_nd("eci_extremal_closed", n, d)?;
    if k >= n - d {
        return Err(range_err("eci_extremal_closed", format!("need 0 <= k <= n-d-1, got k={k}")));
    }
    let (n, d, k) = (n as i64, d as i64, k as i64);
    let value = path_part(d as u64) as i64
        + (n - d - 1) * (2 * d - 1 + d * (n - d))
        + k * (2 * d - n - 1 + 2.max(d - 2));
    Ok(value as u64)
}

/// Largest index over the `Extremal { n, d, k }` family for fixed `n, d`,
/// which is also the largest index of any connected graph of order `n` and
/// diameter `d >= 3`.
pub fn extremal_bound(n: usize, d: usize) -> Result<u64, FormulaError> {
    check_nd("f", n, d)?;
    let (n, d) = (n as i64, d as i64);
    let value = if d == 3 {
        14 + (n - 4) * (3 * n - 4 + 0.max(2 * d - n + 1))
    } else {
        path_part(d as u64) as i64 + (n - d - 1) * (2 * d - 1 + d * (n - d) + 0.max(3 * d - n - 3))
    };
    Ok(value as u64)
}

/// The `k` at which `Extremal { n, d, k }` reaches [`extremal_bound`].
pub fn optimal_k_set(n: usize, d: usize) -> Result<Vec<usize>, FormulaError> {
    check_nd("optimal_k_set", n, d)?;
    let all = || (0..n - d).collect();
    // the threshold order where the k-coefficient changes sign
    let pivot = if d == 3 { 7 } else { 3 * (d - 1) };
    Ok(match n.cmp(&pivot) {
        std::cmp::Ordering::Less => vec![n - d - 1],
        std::cmp::Ordering::Greater => vec![0],
        std::cmp::Ordering::Equal => all(),
    })
}

/// The set of graphs of order `n` and diameter `d` reaching the bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalClass {
    pub n: usize,
    pub d: usize,
    pub members: Vec<FamilySpec>,
}

pub fn extremal_class(n: usize, d: usize) -> Result<ExtremalClass, FormulaError> {
    check_nd("extremal_class", n, d)?;
    let mut members: Vec<FamilySpec> =
        optimal_k_set(n, d)?.into_iter().map(|k| FamilySpec::Extremal { n, d, k }).collect();
    match (n, d) {
        (6, 3) => members.push(FamilySpec::H2),
        (7, 3) => members.push(FamilySpec::H3),
        _ => {}
    }
    Ok(ExtremalClass { n, d, members })
}

/// Largest index of a connected graph of order `n >= 4` and diameter 2.
pub fn diameter2_max(n: usize) -> Result<u64, FormulaError> {
    if n < 4 {
        return Err(range_err("diameter2_max", format!("need n >= 4, got {n}")));
    }
    let n = n as u64;
    Ok(2 * n * n - 4 * n - 2 * (n % 2))
}

/// Index of the path on `n` vertices.
pub fn path_eci(n: usize) -> Result<u64, FormulaError> {
    if n < 2 {
        return Err(range_err("path_eci", format!("need n >= 2, got {n}")));
    }
    let d = n as u64 - 1;
    Ok((3 * d * d + d % 2) / 2)
}

/// How much `Extremal { n, d+1, n-d-2 }` beats the lollipop of diameter `d`.
pub fn lollipop_gap(n: usize, d: usize) -> Result<i64, FormulaError> {
    if !(4 <= d && d + 2 <= n && n >= 3 * (d - 1)) {
        return Err(range_err(
            "lollipop_gap",
            format!("need 4 <= d <= n-2 and n >= 3(d-1), got n={n}, d={d}"),
        ));
    }
    let (n, d) = (n as i64, d as i64);
    Ok(n - 2 * d + (d - 1) % 2)
}

fn check_order7(what: &'static str, n: usize) -> Result<(), FormulaError> {
    if n >= 7 {
        Ok(())
    } else {
        Err(range_err(what, format!("need n >= 7, got {n}")))
    }
}

/// Best index over `Extremal { n, d, n-d-1 }`, from the closed cubic.
pub fn order_max(n: usize) -> Result<u64, FormulaError> {
    check_order7("g", n)?;
    let n = n as u64;
    let correction = match n % 6 {
        0 => 0,
        1 => 6 * n + 1,
        2 => 32,
        3 => 27,
        4 => 6 * n + 28,
        _ => 59,
    };
    let numerator = 8 * n * n * n + 21 * n * n - 36 * n + correction;
    debug_assert_eq!(numerator % 54, 0);
    Ok(numerator / 54)
}

/// The same maximum as [`order_max`], by sweeping every diameter.
pub fn order_max_sweep(n: usize) -> Result<u64, FormulaError> {
    check_order7("g_sweep", n)?;
    (3..n)
        .map(|d| eci_extremal_closed(n, d, n - d - 1))
        .try_fold(0, |best, v| v.map(|v| best.max(v)))
}

/// Diameter at which [`order_max`] is attained: `ceil((n+1)/3) + 1`.
pub fn d_star(n: usize) -> Result<usize, FormulaError> {
    check_order7("d_star", n)?;
    Ok((n + 1).div_ceil(3) + 1)
}

/// Largest index over all connected graphs of a fixed order, and the graphs
/// reaching it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderOptimum {
    pub n: usize,
    pub value: u64,
    pub members: Vec<FamilySpec>,
    /// The tabulated value, when it differs from the computed one.
    pub printed_value: Option<u64>,
}

pub fn best_for_order(n: usize) -> Result<OrderOptimum, FormulaError> {
    use FamilySpec::*;
    let (value, members, printed_value) = match n {
        0..=2 => return Err(range_err("best_for_order", format!("need n >= 3, got {n}"))),
        3 => (6, vec![Complete { n: 3 }, Path { n: 3 }], None),
        4 => (16, vec![MatchingDeleted { n: 4 }], None),
        // Both M_5 and the wheel give 28; 30 is the value usually tabulated.
        5 => (28, vec![MatchingDeleted { n: 5 }, H1], Some(30)),
        6 => (48, vec![MatchingDeleted { n: 6 }], None),
        7 => (68, vec![MatchingDeleted { n: 7 }], None),
        8 => (96, vec![MatchingDeleted { n: 8 }, Extremal { n: 8, d: 4, k: 3 }], None),
        _ => {
            let d = d_star(n)?;
            (order_max(n)?, vec![Extremal { n, d, k: n - d - 1 }], None)
        }
    };
    Ok(OrderOptimum { n, value, members, printed_value })
}

/// Diameter and `k` the size-constrained conjecture predicts for `(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureParams {
    pub d: i64,
    pub k: i64,
    /// Set when `(d, k)` does not name a valid `Extremal` graph.
    pub anomaly: Option<String>,
}

impl ConjectureParams {
    /// The predicted extremal graph, if the parameters are in range.
    pub fn spec(&self, n: usize) -> Option<FamilySpec> {
        if self.anomaly.is_some() {
            return None;
        }
        Some(FamilySpec::Extremal { n, d: self.d as usize, k: self.k as usize })
    }
}

/// `D = floor((2n + 1 - sqrt(17 + 8(m - n))) / 2)` and
/// `k = m - C(n-D+1, 2) - D + 1`, for `n - 1 <= m <= C(n-1, 2)`.
pub fn conjecture_params(n: usize, m: usize) -> Result<ConjectureParams, FormulaError> {
    if n < 4 {
        return Err(range_err("conjecture_params", format!("need n >= 4, got {n}")));
    }
    let max_m = binom2(n as u64 - 1) as usize;
    if m + 1 < n || m > max_m {
        return Err(range_err(
            "conjecture_params",
            format!("need {} <= m <= {max_m} for n={n}, got m={m}", n - 1),
        ));
    }
    // m >= n - 1 keeps this at least 9
    let radicand = (17 + 8 * m as i64 - 8 * n as i64) as u64;
    // floor((2n+1-x)/2) only depends on ceil(x) when x is irrational
    let root = radicand.isqrt();
    let root_ceil = if root * root == radicand { root } else { root + 1 };
    let d = (2 * n as i64 + 1 - root_ceil as i64).div_euclid(2);
    let k = m as i64 - binom2((n as i64 - d + 1).max(0) as u64) as i64 - d + 1;
    let anomaly = if d < 3 || d > n as i64 - 1 || k < 0 || k > n as i64 - d - 1 {
        Some(format!("predicted (D={d}, k={k}) is outside 3 <= D <= n-1, 0 <= k <= n-D-1"))
    } else {
        None
    };
    Ok(ConjectureParams { d, k, anomaly })
}
