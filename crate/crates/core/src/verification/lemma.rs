//! The structure of shortest paths leaving a diametral path.
//!
//! Fix a shortest path `P` between two vertices at distance `D >= 3`, a
//! vertex `u` on `P` whose eccentricity exceeds the larger of its distances
//! `L` to the two ends of `P`, and a vertex `v` at distance `ecc(u)` from
//! `u`. On a shortest path `v = w_1, ..., w_{ecc(u)+1} = u`, with
//! `t = ecc(u) - L`:
//!
//! 1. `w_1..=w_t` avoid `P`;
//! 2. `w_t` has no neighbour on `P`, or its only neighbour on `P` is an end
//!    at distance `L` from `u`;
//! 3. `w_1..w_t` (exclusive) have no neighbour on `P`.
//!
//! A configuration passes when some realizing path satisfies all three.
//! Realizing paths that fail are recorded separately and do not fail the
//! check.

use serde::Serialize;

use super::{Census, VerifyError, Verdict};
use crate::enumeration::{encode_graph6, GENERATOR_MAX_ORDER};
use crate::graph::{Bits, Graph};

pub const LEMMA1_CLAIM: &str = "shortest-path neighbourhood lemma";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Witness {
    pub diametral_path: Vec<usize>,
    pub u: usize,
    pub v: usize,
    pub ecc_u: u32,
    pub longest_to_end: u32,
    /// The offending realizing path, `v` first. Empty when the witness
    /// records a configuration with no compliant path at all.
    pub realizing_path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Report {
    pub graph6: String,
    pub diameter: u32,
    pub configurations: usize,
    /// Configurations where no realizing path complies.
    pub violations: Vec<Lemma1Witness>,
    /// Realizing paths that do not comply, in configurations that may still
    /// pass through another path.
    pub universal_violations: Vec<Lemma1Witness>,
    pub holds: bool,
}

/// Checks every diametral path, eligible `u` and far vertex `v` of `g`.
pub fn check_lemma1(g: &Graph) -> Result<Lemma1Report, VerifyError> {
    let n = g.order();
    if n > GENERATOR_MAX_ORDER {
        return Err(VerifyError::Range(format!(
            "check_lemma1 supports n <= {GENERATOR_MAX_ORDER}, got {n}"
        )));
    }
    let dist: Vec<Vec<u32>> = (0..n).map(|v| g.distances_from(v)).collect::<Result<_, _>>()?;
    let ecc = g.eccentricities()?;
    let diameter = ecc.iter().copied().max().unwrap_or(0);
    if diameter < 3 {
        return Err(VerifyError::Range(format!("check_lemma1 needs diameter >= 3, got {diameter}")));
    }

    let mut report = Lemma1Report {
        graph6: encode_graph6(g),
        diameter,
        configurations: 0,
        violations: Vec::new(),
        universal_violations: Vec::new(),
        holds: true,
    };
    for a in 0..n {
        for b in a + 1..n {
            if dist[a][b] != diameter {
                continue;
            }
            for path in shortest_paths(g, &dist, a, b) {
                check_path(g, &dist, &ecc, &path, &mut report);
            }
        }
    }
    report.holds = report.violations.is_empty();
    Ok(report)
}

fn check_path(g: &Graph, dist: &[Vec<u32>], ecc: &[u32], path: &[usize], report: &mut Lemma1Report) {
    let d = path.len() - 1;
    let on_path = path.iter().fold(0u64, |acc, &x| acc | 1 << x);
    for (i, &u) in path.iter().enumerate() {
        let longest = i.max(d - i) as u32;
        if ecc[u] <= longest {
            continue;
        }
        for v in (0..g.order()).filter(|&v| dist[u][v] == ecc[u]) {
            report.configurations += 1;
            let mut compliant = false;
            for walk in shortest_paths(g, dist, v, u) {
                if complies(g, dist, path, on_path, u, ecc[u], longest, &walk) {
                    compliant = true;
                } else {
                    report.universal_violations.push(witness(path, u, v, ecc[u], longest, walk));
                }
            }
            if !compliant {
                report.violations.push(witness(path, u, v, ecc[u], longest, Vec::new()));
            }
        }
    }
}

fn witness(path: &[usize], u: usize, v: usize, ecc_u: u32, longest: u32, walk: Vec<usize>) -> Lemma1Witness {
    Lemma1Witness {
        diametral_path: path.to_vec(),
        u,
        v,
        ecc_u,
        longest_to_end: longest,
        realizing_path: walk,
    }
}

#[allow(clippy::too_many_arguments)]
fn complies(
    g: &Graph,
    dist: &[Vec<u32>],
    path: &[usize],
    on_path: u64,
    u: usize,
    ecc_u: u32,
    longest: u32,
    walk: &[usize],
) -> bool {
    let t = (ecc_u - longest) as usize;
    // walk[0] is w_1
    let off_path = walk[..t].iter().all(|&w| on_path >> w & 1 == 0);
    let quiet = walk[..t - 1].iter().all(|&w| g.row(w) & on_path == 0);
    let contacts = g.row(walk[t - 1]) & on_path;
    let ends = [path[0], path[path.len() - 1]];
    let last_ok = contacts == 0
        || (contacts.count_ones() == 1 && {
            let x = contacts.trailing_zeros() as usize;
            ends.contains(&x) && dist[u][x] == longest
        });
    off_path && quiet && last_ok
}

/// Every shortest path from `from` to `to`, `from` first.
fn shortest_paths(g: &Graph, dist: &[Vec<u32>], from: usize, to: usize) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, dist: &[Vec<u32>], to: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let cur = *prefix.last().expect("nonempty prefix");
        if cur == to {
            out.push(prefix.clone());
            return;
        }
        let remaining = dist[to][cur];
        for w in Bits(g.row(cur)) {
            if dist[to][w] + 1 == remaining {
                prefix.push(w);
                extend(g, dist, to, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(g, dist, to, &mut vec![from], &mut out);
    out
}

/// Result of running [`check_lemma1`] over a whole census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1SweepReport {
    pub claim: &'static str,
    pub n: usize,
    pub graphs_checked: usize,
    pub configurations: usize,
    /// graph6 of graphs with a configuration that no realizing path satisfies.
    pub failing_graphs: Vec<String>,
    pub universal_violations: usize,
    pub verdict: Verdict,
}

impl Census {
    /// Applies [`check_lemma1`] to every member of diameter at least 3.
    pub fn check_lemma1(&self) -> Result<Lemma1SweepReport, VerifyError> {
        use rayon::prelude::*;
        let reports: Vec<Lemma1Report> = self
            .entries()
            .par_iter()
            .filter(|e| e.diameter >= 3)
            .map(|e| check_lemma1(&e.graph))
            .collect::<Result<_, _>>()?;
        let failing_graphs: Vec<String> =
            reports.iter().filter(|r| !r.holds).map(|r| r.graph6.clone()).collect();
        Ok(Lemma1SweepReport {
            claim: LEMMA1_CLAIM,
            n: self.order(),
            graphs_checked: reports.len(),
            configurations: reports.iter().map(|r| r.configurations).sum(),
            universal_violations: reports.iter().map(|r| r.universal_violations.len()).sum(),
            verdict: Verdict::from_bool(failing_graphs.is_empty()),
            failing_graphs,
        })
    }
}
