//! Checks of the closed forms against each other over a range of orders.
//! These need no enumeration.

use serde::Serialize;

use super::{VerifyError, Verdict};
use crate::formulas::{
    diameter2_max, eci_extremal_closed, extremal_bound, lollipop_gap, optimal_k_set, path_eci,
};

pub const COROLLARIES_CLAIM: &str = "optimal-k corollaries";
pub const LOLLIPOP_CLAIM: &str = "lollipops are not optimal";

/// Largest order the sweeps accept.
pub const SWEEP_MAX_ORDER: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub claim: &'static str,
    pub n_max: usize,
    pub cases: usize,
    pub failures: Vec<String>,
    pub verdict: Verdict,
}

impl SweepReport {
    fn finish(claim: &'static str, n_max: usize, cases: usize, failures: Vec<String>) -> Self {
        let verdict = Verdict::from_bool(failures.is_empty());
        SweepReport { claim, n_max, cases, failures, verdict }
    }
}

/// For every `4 <= n <= n_max` and `3 <= d < n`, the predicted optimal `k`
/// set is exactly the argmax of the closed form, and the bound is its max.
pub fn check_corollaries(n_max: usize) -> Result<SweepReport, VerifyError> {
    if n_max > SWEEP_MAX_ORDER {
        return Err(VerifyError::Range(format!("check_corollaries needs n_max <= {SWEEP_MAX_ORDER}")));
    }
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 4..=n_max {
        for d in 3..n {
            cases += 1;
            let values: Vec<u64> =
                (0..n - d).map(|k| eci_extremal_closed(n, d, k)).collect::<Result<_, _>>()?;
            let best = *values.iter().max().expect("k range is nonempty");
            let argmax: Vec<usize> = (0..n - d).filter(|&k| values[k] == best).collect();
            let bound = extremal_bound(n, d)?;
            let predicted = optimal_k_set(n, d)?;
            if bound != best {
                failures.push(format!("n={n} d={d}: bound {bound} but family maximum {best}"));
            }
            if predicted != argmax {
                failures.push(format!("n={n} d={d}: predicted k {predicted:?} but argmax {argmax:?}"));
            }
        }
    }
    Ok(SweepReport::finish(COROLLARIES_CLAIM, n_max, cases, failures))
}

/// For `7 <= n <= n_max`: the path loses to the diameter-2 optimum, every
/// lollipop with `n >= 3(d-1)` is beaten by the stated gap, and every
/// lollipop with `n < 3(d-1)` loses to `k = n-d-1`.
pub fn check_lollipop_claims(n_max: usize) -> Result<SweepReport, VerifyError> {
    if !(7..=SWEEP_MAX_ORDER).contains(&n_max) {
        return Err(VerifyError::Range(format!(
            "check_lollipop_claims needs 7 <= n_max <= {SWEEP_MAX_ORDER}"
        )));
    }
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 7..=n_max {
        cases += 1;
        let (path, d2) = (path_eci(n)?, diameter2_max(n)?);
        if path >= d2 {
            failures.push(format!("n={n}: path index {path} is not below {d2}"));
        }
        for d in 4..=n - 2 {
            cases += 1;
            let lollipop = eci_extremal_closed(n, d, 0)?;
            if n >= 3 * (d - 1) {
                let gap = lollipop_gap(n, d)?;
                let actual = eci_extremal_closed(n, d + 1, n - d - 2)? as i64 - lollipop as i64;
                if gap <= 0 || gap != actual {
                    failures.push(format!("n={n} d={d}: gap formula {gap}, closed-form difference {actual}"));
                }
            } else {
                let full = eci_extremal_closed(n, d, n - d - 1)?;
                if full <= lollipop {
                    failures.push(format!("n={n} d={d}: k=n-d-1 gives {full}, lollipop {lollipop}"));
                }
            }
        }
    }
    Ok(SweepReport::finish(LOLLIPOP_CLAIM, n_max, cases, failures))
}
