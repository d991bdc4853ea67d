//! Simple undirected graphs stored as bitset adjacency rows, together with
//! the distance-based quantities built on top of them: eccentricity,
//! diameter, vertex weight and the eccentric connectivity index.
//!
//! Every row is a single `u64`, so a graph holds at most [`MAX_ORDER`]
//! vertices. Breadth-first search runs frontier-at-a-time on those words.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest supported order (the graph6 short form limit).
pub const MAX_ORDER: usize = 62;

/// Distance reported by [`Graph::distances_from`] for vertices in another
/// component.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("vertex {vertex} is out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected; eccentricity is undefined")]
    Disconnected,
}

/// A simple undirected graph on vertices `0..n`.
///
/// Bit `v` of `adj[u]` is set exactly when `uv` is an edge. Rows are kept
/// symmetric and irreflexive by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Degree, eccentricity and weight (`degree * ecc`) of one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexMetrics {
    pub degree: u32,
    pub ecc: u32,
    pub weight: u64,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from a list of unordered pairs. Repeated pairs collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let full = low_bits(n);
        for (u, row) in g.adj.iter_mut().enumerate() {
            *row = full & !(1 << u);
        }
        Ok(g)
    }

    /// Rebuilds a graph from raw rows. Callers guarantee symmetry.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(u, r)| r & (1 << u) == 0));
        Graph { n: adj.len(), adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    /// Neighbourhood of `v` as a bit row.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        Bits(self.adj[v])
    }

    /// Edges `(u, v)` with `u < v`, in increasing order of `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    /// Relabels vertex `v` as `perm[v]`.
    ///
    /// # Panics
    ///
    /// If `perm` is not a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let mut seen = 0u64;
        for &p in perm {
            assert!(p < self.n && seen >> p & 1 == 0, "not a permutation");
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.n];
        for (u, &pu) in perm.iter().enumerate() {
            adj[pu] = Bits(self.adj[u]).fold(0, |acc, v| acc | 1 << perm[v]);
        }
        Graph { n: self.n, adj }
    }

    /// Hop distances from `v`; vertices in other components get
    /// [`UNREACHABLE`].
    pub fn distances_from(&self, v: usize) -> Result<Vec<u32>, GraphError> {
        self.check_vertex(v)?;
        let mut dist = vec![UNREACHABLE; self.n];
        dist[v] = 0;
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        let mut level = 0;
        while frontier != 0 {
            level += 1;
            let mut next = 0;
            for u in Bits(frontier) {
                next |= self.adj[u];
            }
            next &= !seen;
            for u in Bits(next) {
                dist[u] = level;
            }
            seen |= next;
            frontier = next;
        }
        Ok(dist)
    }

    /// Largest BFS level from `v`, or `None` if some vertex is unreachable.
    fn bfs_depth(&self, v: usize) -> Option<u32> {
        let all = low_bits(self.n);
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        let mut depth = 0;
        loop {
            let mut next = 0;
            for u in Bits(frontier) {
                next |= self.adj[u];
            }
            next &= !seen;
            if next == 0 {
                break;
            }
            seen |= next;
            frontier = next;
            depth += 1;
        }
        (seen == all).then_some(depth)
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_depth(0).is_some()
    }

    pub fn eccentricity(&self, v: usize) -> Result<u32, GraphError> {
        self.check_vertex(v)?;
        self.bfs_depth(v).ok_or(GraphError::Disconnected)
    }

    /// Eccentricity of every vertex.
    pub fn eccentricities(&self) -> Result<Vec<u32>, GraphError> {
        (0..self.n)
            .map(|v| self.bfs_depth(v).ok_or(GraphError::Disconnected))
            .collect()
    }

    pub fn diameter(&self) -> Result<u32, GraphError> {
        Ok(self.eccentricities()?.into_iter().max().unwrap_or(0))
    }

    /// Eccentric connectivity index: sum over vertices of degree times
    /// eccentricity.
    pub fn eci(&self) -> Result<u64, GraphError> {
        let ecc = self.eccentricities()?;
        Ok(ecc
            .iter()
            .enumerate()
            .map(|(v, &e)| self.degree(v) as u64 * e as u64)
            .sum())
    }

    /// The same index, summed edge by edge over endpoint eccentricities.
    pub fn eci_edge_form(&self) -> Result<u64, GraphError> {
        let ecc = self.eccentricities()?;
        Ok(self.edges().map(|(u, v)| (ecc[u] + ecc[v]) as u64).sum())
    }

    pub fn vertex_metrics(&self) -> Result<Vec<VertexMetrics>, GraphError> {
        let ecc = self.eccentricities()?;
        Ok(ecc
            .into_iter()
            .enumerate()
            .map(|(v, ecc)| {
                let degree = self.degree(v);
                VertexMetrics { degree, ecc, weight: degree as u64 * ecc as u64 }
            })
            .collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}
