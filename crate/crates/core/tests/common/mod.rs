//! Reference implementations that share nothing with the library's
//! canonical labeling or generator.

#![allow(dead_code)]

use std::collections::HashMap;

use eccentric::Graph;

/// All permutations of `0..n`, by Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![perm.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out.push(perm.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn edge_bits(n: usize, has: impl Fn(usize, usize) -> bool) -> u64 {
    let mut key = 0u64;
    for j in 1..n {
        for i in 0..j {
            key = key << 1 | has(i, j) as u64;
        }
    }
    key
}

/// Smallest upper-triangle key over every relabeling.
pub fn brute_force_key(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.order();
    perms
        .iter()
        .map(|p| edge_bits(n, |i, j| g.has_edge(p[i], p[j])))
        .min()
        .unwrap()
}

/// Every labeled graph on `n` vertices, as bit masks over the pairs.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut p = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> p & 1 == 1 {
                edges.push((i, j));
            }
            p += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

/// One representative per isomorphism class of connected labeled graphs.
pub fn labeled_connected_classes(n: usize) -> HashMap<u64, Graph> {
    let perms = permutations(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let mut classes = HashMap::new();
    for mask in 0..1u64 << pairs {
        let g = labeled_graph(n, mask);
        if g.is_connected() {
            classes.entry(brute_force_key(&g, &perms)).or_insert(g);
        }
    }
    classes
}

/// All-pairs distances by Floyd-Warshall on the adjacency matrix.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// The index straight from the definition, via Floyd-Warshall.
pub fn eci_by_apsp(g: &Graph) -> u64 {
    let d = floyd_warshall(g);
    (0..g.order())
        .map(|v| g.degree(v) as u64 * *d[v].iter().max().unwrap() as u64)
        .sum()
}

pub fn random_permutation(n: usize, rng: &mut impl rand::Rng) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn random_graph(n: usize, density: f64, rng: &mut impl rand::Rng) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
