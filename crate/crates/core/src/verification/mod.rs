//! Exhaustive checks of the extremal claims.
//!
//! A [`Census`] holds every connected graph of one order together with its
//! diameter, size and index; the individual checks filter it and compare the
//! observed maximum and maximizers against the closed forms. Maximizers are
//! compared as sorted canonical certificates, never as labeled graphs.

mod conjecture;
mod extremal;
mod lemma;
mod sweeps;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::enumeration::{self, CanonError, EnumError};
use crate::families::FamilyError;
use crate::formulas::FormulaError;
use crate::graph::{Graph, GraphError};

pub use conjecture::{check_conjecture, ConjectureReport};
pub use extremal::{check_diameter2, check_table1, check_theorem5, ExtremalReport};
pub use lemma::{check_lemma1, Lemma1Report, Lemma1SweepReport, Lemma1Witness};
pub use sweeps::{check_corollaries, check_lollipop_claims, SweepReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{0}")]
    Range(String),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One connected graph with the quantities every check needs.
#[derive(Debug, Clone)]
pub struct CensusEntry {
    pub graph: Graph,
    pub diameter: u32,
    pub size: usize,
    pub eci: u64,
}

/// All connected graphs of a fixed order, one per isomorphism class.
#[derive(Debug, Clone)]
pub struct Census {
    n: usize,
    entries: Vec<CensusEntry>,
}

impl Census {
    /// Runs the internal generator for order `n` (at most 9).
    pub fn enumerate(n: usize) -> Result<Self, VerifyError> {
        let graphs = enumeration::connected_graphs(n)?;
        Ok(Self::from_classes(n, graphs))
    }

    /// Builds a census from externally supplied graphs (e.g. graph6 input),
    /// keeping connected graphs of order `n` and one per class.
    pub fn from_graphs(n: usize, graphs: impl IntoIterator<Item = Graph>) -> Result<Self, VerifyError> {
        let classes = enumeration::dedup_connected(n, graphs)?;
        Ok(Self::from_classes(n, classes))
    }

    fn from_classes(n: usize, graphs: Vec<Graph>) -> Self {
        let entries = graphs
            .into_par_iter()
            .map(|graph| {
                let ecc = graph.eccentricities().expect("census graphs are connected");
                let eci = ecc.iter().enumerate().map(|(v, &e)| graph.degree(v) as u64 * e as u64).sum();
                CensusEntry {
                    diameter: ecc.iter().copied().max().unwrap_or(0),
                    size: graph.size(),
                    eci,
                    graph,
                }
            })
            .collect();
        Census { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[CensusEntry] {
        &self.entries
    }
}

/// Maximum index over the selected entries, the number scanned, and the
/// sorted certificates of the maximizers.
pub(crate) struct Scan {
    pub scanned: usize,
    pub max: Option<u64>,
    pub achievers: Vec<enumeration::CanonicalCert>,
}

pub(crate) fn scan<'a>(
    entries: impl Iterator<Item = &'a CensusEntry>,
) -> Result<Scan, VerifyError> {
    let mut scanned = 0;
    let mut max = None;
    let mut best: Vec<&Graph> = Vec::new();
    for e in entries {
        scanned += 1;
        match max {
            Some(m) if e.eci < m => {}
            Some(m) if e.eci == m => best.push(&e.graph),
            _ => {
                max = Some(e.eci);
                best.clear();
                best.push(&e.graph);
            }
        }
    }
    let mut achievers = best
        .into_iter()
        .map(enumeration::canonical_cert)
        .collect::<Result<Vec<_>, _>>()?;
    achievers.sort();
    achievers.dedup();
    Ok(Scan { scanned, max, achievers })
}

/// Certificates of constructible graphs, sorted and deduplicated.
pub(crate) fn certs_of(
    specs: &[crate::families::FamilySpec],
) -> Result<Vec<enumeration::CanonicalCert>, VerifyError> {
    let mut certs = specs
        .iter()
        .map(|s| Ok(enumeration::canonical_cert(&s.make()?)?))
        .collect::<Result<Vec<_>, VerifyError>>()?;
    certs.sort();
    certs.dedup();
    Ok(certs)
}

/// graph6 of every certificate in exactly one of the two sorted lists.
pub(crate) fn symmetric_difference(
    a: &[enumeration::CanonicalCert],
    b: &[enumeration::CanonicalCert],
) -> Vec<String> {
    let mut out: Vec<String> = a
        .iter()
        .filter(|c| !b.contains(c))
        .chain(b.iter().filter(|c| !a.contains(c)))
        .map(|c| c.to_string())
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_of_order_four() {
        let c = Census::enumerate(4).unwrap();
        assert_eq!(c.len(), 6);
        let mut by_eci: Vec<u64> = c.entries().iter().map(|e| e.eci).collect();
        by_eci.sort();
        // star, K4, paw, P4, diamond, C4
        assert_eq!(by_eci, vec![9, 12, 13, 14, 14, 16]);
    }

    #[test]
    fn census_from_ingested_graphs() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.permuted(&[3, 2, 1, 0]);
        let c = Census::from_graphs(4, [g, h, Graph::empty(4).unwrap()]).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.entries()[0].eci, 14);
    }
}
