//! Generation of connected graphs, one per isomorphism class.
//!
//! Every connected graph on `n` vertices has a vertex whose removal leaves a
//! connected graph, so all of them arise by attaching a new vertex, with some
//! nonempty neighbourhood, to a connected graph on `n - 1` vertices. Each
//! level keeps only the canonical keys of the graphs it has seen.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use super::canon::{canonical_key, rows_from_key, CanonError};
use crate::graph::{Graph, GraphError};

/// Largest order the internal generator produces.
pub const GENERATOR_MAX_ORDER: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("internal generation supports 1 <= n <= {GENERATOR_MAX_ORDER}, got {0}")]
    OrderOutOfRange(usize),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Restriction applied to the generated classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnumFilter {
    #[default]
    None,
    /// Keep graphs of this diameter (`K_1` has diameter 0).
    Diameter(u32),
    /// Keep graphs with this many edges.
    Size(usize),
}

impl EnumFilter {
    pub fn accepts(&self, g: &Graph) -> bool {
        match *self {
            EnumFilter::None => true,
            EnumFilter::Diameter(d) => g.diameter().is_ok_and(|x| x == d),
            EnumFilter::Size(m) => g.size() == m,
        }
    }
}

fn next_level(n: usize, parents: &[u128]) -> Vec<u128> {
    let new = n - 1;
    let mut keys: Vec<u128> = parents
        .par_iter()
        .fold(HashSet::new, |mut seen, &key| {
            let base = rows_from_key(new, key);
            let mut rows = base.clone();
            rows.push(0);
            for nbhd in 1u64..1 << new {
                for (u, row) in rows[..new].iter_mut().enumerate() {
                    *row = base[u] | (nbhd >> u & 1) << new;
                }
                rows[new] = nbhd;
                seen.insert(canonical_key(&rows));
            }
            seen
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        })
        .into_iter()
        .collect();
    keys.par_sort_unstable();
    keys
}

/// Canonical keys of every connected class of order `n`, ascending.
fn connected_keys(n: usize) -> Vec<u128> {
    let mut keys = vec![0u128];
    for order in 2..=n {
        keys = next_level(order, &keys);
    }
    keys
}

/// All connected graphs on `n` vertices up to isomorphism, each in canonical
/// labeling, sorted by canonical key.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, EnumError> {
    enumerate_connected(n, EnumFilter::None)
}

pub fn enumerate_connected(n: usize, filter: EnumFilter) -> Result<Vec<Graph>, EnumError> {
    if !(1..=GENERATOR_MAX_ORDER).contains(&n) {
        return Err(EnumError::OrderOutOfRange(n));
    }
    Ok(connected_keys(n)
        .into_par_iter()
        .map(|key| Graph::from_rows(rows_from_key(n, key)))
        .filter(|g| filter.accepts(g))
        .collect())
}

/// Reduces an arbitrary collection (e.g. ingested graph6) to one connected
/// representative per class, in canonical labeling and key order. Graphs of
/// other orders and disconnected graphs are dropped.
pub fn dedup_connected(n: usize, graphs: impl IntoIterator<Item = Graph>) -> Result<Vec<Graph>, EnumError> {
    if n > super::canon::CERT_MAX_ORDER {
        return Err(CanonError::OverBudget(n).into());
    }
    let mut keys: Vec<u128> = graphs
        .into_iter()
        .filter(|g| g.order() == n && g.is_connected())
        .map(|g| canonical_key(g.rows()))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    keys.sort_unstable();
    Ok(keys.into_iter().map(|k| Graph::from_rows(rows_from_key(n, k))).collect())
}
