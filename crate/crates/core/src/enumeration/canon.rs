//! Canonical labeling by colour refinement and individualization.
//!
//! The search keeps an ordered partition of the vertices, refines it until
//! every cell is equitable, and branches on the vertices of the first
//! smallest non-singleton cell. Each discrete leaf fixes a relabeling; the
//! certificate is the lexicographically smallest upper-triangle bit string
//! reached. Interchangeable vertices (twins, whose neighbourhoods agree
//! apart from each other) are tried once per cell because swapping two twins
//! is an automorphism that fixes everything already individualized.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use super::graph6::{decode_graph6, encode_graph6};
use crate::graph::{Bits, Graph};

/// Largest order accepted by [`canonical_cert`].
pub const CERT_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("order {0} exceeds the canonical labeling budget of {CERT_MAX_ORDER}")]
    OverBudget(usize),
}

/// Isomorphism-class identifier: the graph6 record of the canonical
/// relabeling. Equal certificates mean isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCert(String);

impl CanonicalCert {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        decode_graph6(&self.0).expect("certificates are valid graph6")
    }
}

impl fmt::Display for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cert({})", self.0)
    }
}

impl Serialize for CanonicalCert {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// A graph in canonical labeling, with the map from the input labels.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub graph: Graph,
    /// `labeling[v]` is the canonical label of input vertex `v`.
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn cert(&self) -> CanonicalCert {
        CanonicalCert(encode_graph6(&self.graph))
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    let n = g.order();
    if n > CERT_MAX_ORDER {
        return Err(CanonError::OverBudget(n));
    }
    let (_, order) = search(g.rows());
    let mut labeling = vec![0; n];
    for (label, &v) in order.iter().enumerate() {
        labeling[v] = label;
    }
    Ok(CanonicalForm { graph: g.permuted(&labeling), labeling })
}

pub fn canonical_cert(g: &Graph) -> Result<CanonicalCert, CanonError> {
    Ok(canonical_form(g)?.cert())
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, CanonError> {
    if g.order() != h.order() || g.size() != h.size() {
        // still enforce the budget so callers see consistent errors
        for x in [g, h] {
            if x.order() > CERT_MAX_ORDER {
                return Err(CanonError::OverBudget(x.order()));
            }
        }
        return Ok(false);
    }
    Ok(canonical_cert(g)? == canonical_cert(h)?)
}

/// Canonical upper-triangle key of a graph with at most 16 vertices. The
/// first pair in graph6 order is the most significant bit.
pub(crate) fn canonical_key(rows: &[u64]) -> u128 {
    search(rows).0
}

/// Inverse of [`canonical_key`]'s bit layout.
pub(crate) fn rows_from_key(n: usize, key: u128) -> Vec<u64> {
    let total = n * n.saturating_sub(1) / 2;
    let mut rows = vec![0u64; n];
    let mut p = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (total - 1 - p) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            p += 1;
        }
    }
    rows
}

fn key_of(rows: &[u64], order: &[usize]) -> u128 {
    let mut key = 0u128;
    for j in 1..order.len() {
        let row = rows[order[j]];
        for &vi in &order[..j] {
            key = key << 1 | (row >> vi & 1) as u128;
        }
    }
    key
}

struct Search<'a> {
    rows: &'a [u64],
    twins: Vec<u64>,
    best: Option<(u128, Vec<usize>)>,
}

fn search(rows: &[u64]) -> (u128, Vec<usize>) {
    let n = rows.len();
    debug_assert!(n <= CERT_MAX_ORDER);
    if n <= 1 {
        return (0, (0..n).collect());
    }
    let twins = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && rows[u] & !(1 << v) == rows[v] & !(1 << u))
                .fold(0u64, |acc, v| acc | 1 << v)
        })
        .collect();
    let mut s = Search { rows, twins, best: None };
    let mut cells = vec![(1u64 << n) - 1];
    refine(rows, &mut cells);
    s.descend(cells);
    s.best.expect("search visits at least one leaf")
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>) {
        let n = self.rows.len();
        if cells.len() == n {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let key = key_of(self.rows, &order);
            if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
                self.best = Some((key, order));
            }
            return;
        }
        let target = (0..cells.len())
            .filter(|&i| cells[i].count_ones() > 1)
            .min_by_key(|&i| (cells[i].count_ones(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut tried = 0u64;
        for v in Bits(cell) {
            if self.twins[v] & tried != 0 {
                continue;
            }
            tried |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.rows, &mut child);
            self.descend(child);
        }
    }
}

/// Splits cells by neighbour counts into every cell until stable. Fragments
/// keep their parent's position and are ordered by count vector.
fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut sig: Vec<([u8; CERT_MAX_ORDER], usize)> = Vec::with_capacity(rows.len());
    loop {
        let mut next = Vec::with_capacity(rows.len());
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                next.push(cell);
                continue;
            }
            sig.clear();
            for v in Bits(cell) {
                let mut counts = [0u8; CERT_MAX_ORDER];
                for (slot, &c) in counts.iter_mut().zip(cells.iter()) {
                    *slot = (rows[v] & c).count_ones() as u8;
                }
                sig.push((counts, v));
            }
            sig.sort_unstable();
            let mut current = 0u64;
            for (i, (counts, v)) in sig.iter().enumerate() {
                if i > 0 && *counts != sig[i - 1].0 {
                    next.push(current);
                    current = 0;
                }
                current |= 1 << v;
            }
            next.push(current);
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}
