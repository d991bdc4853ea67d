use serde::Serialize;

use super::{certs_of, scan, symmetric_difference, Census, VerifyError, Verdict};
use crate::enumeration::{CanonicalCert, GENERATOR_MAX_ORDER};
use crate::families::FamilySpec;
use crate::formulas;

pub const CONJECTURE_CLAIM: &str = "size-constrained conjecture";

/// Audit of the fixed-order, fixed-size prediction at one `(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub claim: &'static str,
    pub n: usize,
    pub m: usize,
    pub predicted_d: i64,
    pub predicted_k: i64,
    pub predicted_graph: Option<FamilySpec>,
    pub predicted_value: Option<u64>,
    pub observed_max: Option<u64>,
    pub achiever_certs: Vec<CanonicalCert>,
    /// Whether the prediction pins down the whole maximizer set.
    pub uniqueness_expected: bool,
    /// The predicted maximizer set, when the prediction pins it down.
    pub expected_certs: Vec<CanonicalCert>,
    pub graphs_scanned: usize,
    pub verdict: Verdict,
    pub offenders: Vec<String>,
    pub anomalies: Vec<String>,
}

impl Census {
    pub fn check_conjecture(&self, m: usize) -> Result<ConjectureReport, VerifyError> {
        let n = self.order();
        let params = formulas::conjecture_params(n, m)?;
        let mut anomalies: Vec<String> = params.anomaly.iter().cloned().collect();
        let predicted_graph = params.spec(n);
        let found = scan(self.entries().iter().filter(|e| e.size == m))?;

        let mut report = ConjectureReport {
            claim: CONJECTURE_CLAIM,
            n,
            m,
            predicted_d: params.d,
            predicted_k: params.k,
            predicted_graph,
            predicted_value: None,
            observed_max: found.max,
            achiever_certs: found.achievers,
            uniqueness_expected: params.d > 3,
            expected_certs: Vec::new(),
            graphs_scanned: found.scanned,
            verdict: Verdict::Fail,
            offenders: Vec::new(),
            anomalies: Vec::new(),
        };

        let Some(spec) = predicted_graph else {
            report.offenders = report.achiever_certs.iter().map(|c| c.to_string()).collect();
            report.anomalies = anomalies;
            return Ok(report);
        };
        let predicted = spec.make()?;
        if predicted.size() != m {
            anomalies.push(format!("predicted graph {spec} has {} edges, not {m}", predicted.size()));
        }
        report.predicted_value = Some(predicted.eci()?);
        let predicted_cert = certs_of(&[spec])?;

        let expected: Option<Vec<FamilySpec>> = if params.d > 3 {
            Some(vec![spec])
        } else if params.d == 3 && params.k == n as i64 - 4 {
            let mut family = vec![spec];
            family.extend((1..n.saturating_sub(4)).map(|i| FamilySpec::TwoSided { n, i }));
            Some(family)
        } else {
            None
        };

        let attained = report.observed_max.is_some()
            && report.observed_max == report.predicted_value
            && report.achiever_certs.contains(&predicted_cert[0]);
        let ok = match expected {
            Some(family) => {
                report.expected_certs = certs_of(&family)?;
                let matches = report.achiever_certs == report.expected_certs;
                if !matches {
                    report.offenders = symmetric_difference(&report.achiever_certs, &report.expected_certs);
                }
                attained && matches
            }
            None => {
                if !attained {
                    report.offenders = report.achiever_certs.iter().map(|c| c.to_string()).collect();
                    report.offenders.extend(predicted_cert.iter().map(|c| c.to_string()));
                }
                attained
            }
        };
        if !attained {
            anomalies.push(format!(
                "predicted graph {spec} (index {:?}) does not reach the observed maximum {:?}",
                report.predicted_value, report.observed_max
            ));
        }
        report.verdict = Verdict::from_bool(ok && anomalies.is_empty());
        report.anomalies = anomalies;
        Ok(report)
    }
}

/// Audits `(n, m)` against every connected graph of order `n` (4..=9) and
/// size `m`.
pub fn check_conjecture(n: usize, m: usize) -> Result<ConjectureReport, VerifyError> {
    if !(4..=GENERATOR_MAX_ORDER).contains(&n) {
        return Err(VerifyError::Range(format!(
            "check_conjecture needs 4 <= n <= {GENERATOR_MAX_ORDER}, got {n}"
        )));
    }
    // reject bad m before paying for the enumeration
    formulas::conjecture_params(n, m)?;
    Census::enumerate(n)?.check_conjecture(m)
}
