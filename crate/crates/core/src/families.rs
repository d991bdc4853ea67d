//! Constructors for the named graph families.
//!
//! Labelings are fixed so that every construction, and hence its graph6
//! encoding, is reproducible byte for byte. Families that contain a
//! distinguished path `u_0 - u_1 - ... - u_D` put that path on vertices
//! `0..=D` and the attached clique on the vertices after it.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    OutOfRange { family: &'static str, reason: String },
    #[error("cannot parse family {0:?}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A constructible graph, named by family and parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// `K_n`.
    Complete { n: usize },
    /// `P_n`, the path on `n` vertices.
    Path { n: usize },
    /// Labelled as `Extremal { n, d, k: 0 }`: a clique on `n - d + 1`
    /// vertices carrying a pendant path of `d - 1` edges. Diameter `d`.
    Lollipop { n: usize, d: usize },
    /// `G_{n,D,k}`: path `u_0..u_D` plus a clique `K_{n-D-1}` joined to `u_0`
    /// and `u_1`, with `k` of the clique vertices also joined to `u_2`.
    Extremal { n: usize, d: usize, k: usize },
    /// `M_n`: `K_n` minus a maximum matching and, for odd `n`, one more
    /// edge at the leftover vertex.
    MatchingDeleted { n: usize },
    /// The wheel on five vertices.
    H1,
    /// `K_4` with two pendant triangles hung on opposite edges.
    H2,
    /// Alias of `TwoSided { n: 7, i: 1 }`.
    H3,
    /// Path `u_0..u_3` with a clique `K_{n-4}`; `i` clique vertices are
    /// joined to `u_0, u_1, u_2` and the rest to `u_1, u_2, u_3`.
    TwoSided { n: usize, i: usize },
}

fn out_of_range(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::OutOfRange { family, reason: reason.into() }
}

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        use FamilySpec::*;
        match *self {
            Complete { n } | Path { n } if n == 0 => {
                Err(out_of_range(self.family_name(), "n must be at least 1"))
            }
            Lollipop { n, d } if !(n >= 2 && 1 <= d && d < n) => {
                Err(out_of_range("lollipop", format!("need n >= 2 and 1 <= d <= n-1, got n={n}, d={d}")))
            }
            Extremal { n, d, k } if !(n >= 4 && 3 <= d && d < n && k < n - d) => Err(out_of_range(
                "extremal",
                format!("need n >= 4, 3 <= d <= n-1, 0 <= k <= n-d-1, got n={n}, d={d}, k={k}"),
            )),
            MatchingDeleted { n } if n < 4 => {
                Err(out_of_range("matching-deleted", format!("need n >= 4, got {n}")))
            }
            TwoSided { n, i } if !(n >= 5 && i >= 1 && i + 5 <= n) => Err(out_of_range(
                "two-sided",
                format!("need n >= 5 and 1 <= i <= n-5, got n={n}, i={i}"),
            )),
            _ => Ok(()),
        }
        .and_then(|()| {
            if self.order() > crate::graph::MAX_ORDER {
                Err(FamilyError::Graph(GraphError::TooLarge(self.order())))
            } else {
                Ok(())
            }
        })
    }

    fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Lollipop { .. } => "lollipop",
            FamilySpec::Extremal { .. } => "extremal",
            FamilySpec::MatchingDeleted { .. } => "matching-deleted",
            FamilySpec::H1 => "h1",
            FamilySpec::H2 => "h2",
            FamilySpec::H3 => "h3",
            FamilySpec::TwoSided { .. } => "two-sided",
        }
    }

    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match *self {
            Complete { n }
            | Path { n }
            | Lollipop { n, .. }
            | Extremal { n, .. }
            | MatchingDeleted { n }
            | TwoSided { n, .. } => n,
            H1 => 5,
            H2 => 6,
            H3 => 7,
        }
    }

    /// Closed-form edge count; equals `make()?.size()`.
    pub fn edge_count(&self) -> Result<usize, FamilyError> {
        self.validate()?;
        use FamilySpec::*;
        Ok(match *self {
            Complete { n } => binom2(n),
            Path { n } => n - 1,
            Lollipop { n, d } => binom2(n - d + 1) + d - 1,
            Extremal { n, d, k } => binom2(n - d + 1) + d - 1 + k,
            MatchingDeleted { n } => binom2(n) - n / 2 - n % 2,
            H1 => 8,
            H2 => 10,
            H3 => 15,
            TwoSided { n, .. } => 3 + binom2(n - 4) + 3 * (n - 4),
        })
    }

    pub fn make(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        use FamilySpec::*;
        let g = match *self {
            Complete { n } => Graph::complete(n)?,
            Path { n } => Graph::new(n, (1..n).map(|i| (i - 1, i)))?,
            Lollipop { n, d } => extremal(n, d, 0)?,
            Extremal { n, d, k } => extremal(n, d, k)?,
            MatchingDeleted { n } => {
                let mut g = Graph::complete(n)?;
                for i in 0..n / 2 {
                    g.remove_edge(2 * i, 2 * i + 1)?;
                }
                if n % 2 == 1 {
                    g.remove_edge(n - 1, 0)?;
                }
                g
            }
            H1 => Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])?,
            H2 => {
                let mut g = Graph::complete(6)?;
                for (u, v) in [(4, 0), (4, 1), (5, 2), (5, 3), (4, 5)] {
                    g.remove_edge(u, v)?;
                }
                g
            }
            H3 => two_sided(7, 1)?,
            TwoSided { n, i } => two_sided(n, i)?,
        };
        Ok(g)
    }
}

/// Path on `0..=d`; clique on `d+1..n` joined to 0 and 1; the first `k`
/// clique vertices also joined to 2.
fn extremal(n: usize, d: usize, k: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::new(n, (1..=d).map(|i| (i - 1, i)))?;
    for a in d + 1..n {
        for b in a + 1..n {
            g.add_edge(a, b)?;
        }
        g.add_edge(a, 0)?;
        g.add_edge(a, 1)?;
        if a <= d + k {
            g.add_edge(a, 2)?;
        }
    }
    Ok(g)
}

fn two_sided(n: usize, i: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::new(n, [(0, 1), (1, 2), (2, 3)])?;
    for a in 4..n {
        for b in a + 1..n {
            g.add_edge(a, b)?;
        }
        let side = if a < 4 + i { [0, 1, 2] } else { [1, 2, 3] };
        for p in side {
            g.add_edge(a, p)?;
        }
    }
    Ok(g)
}

impl fmt::Display for FamilySpec {
    /// Same syntax accepted by [`FromStr`], e.g. `extremal:8,4,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        let name = self.family_name();
        match *self {
            Complete { n } | Path { n } | MatchingDeleted { n } => write!(f, "{name}:{n}"),
            Lollipop { n, d } => write!(f, "{name}:{n},{d}"),
            Extremal { n, d, k } => write!(f, "{name}:{n},{d},{k}"),
            TwoSided { n, i } => write!(f, "{name}:{n},{i}"),
            H1 | H2 | H3 => f.write_str(name),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::Parse(s.to_string());
        let (name, args) = match s.split_once(':') {
            Some((name, args)) => (name, args),
            None => (s, ""),
        };
        let params: Vec<usize> = if args.trim().is_empty() {
            Vec::new()
        } else {
            args.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?
        };
        use FamilySpec::*;
        let spec = match (name.trim().to_ascii_lowercase().as_str(), params.as_slice()) {
            ("complete" | "k", &[n]) => Complete { n },
            ("path" | "p", &[n]) => Path { n },
            ("lollipop" | "l", &[n, d]) => Lollipop { n, d },
            ("extremal" | "g", &[n, d, k]) => Extremal { n, d, k },
            ("matching-deleted" | "m", &[n]) => MatchingDeleted { n },
            ("h1", &[]) => H1,
            ("h2", &[]) => H2,
            ("h3", &[]) => H3,
            ("two-sided", &[n, i]) => TwoSided { n, i },
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use FamilySpec::*;

    #[test]
    fn extremal_edges_match_construction() {
        for k in 0..4 {
            let g = Extremal { n: 8, d: 4, k }.make().unwrap();
            // 3 clique edges, 6 joins to u_0/u_1, 4 path edges, k joins to u_2
            assert_eq!(g.size(), 13 + k);
            assert_eq!(g.diameter().unwrap(), 4);
        }
        assert_eq!(Extremal { n: 6, d: 3, k: 2 }.edge_count().unwrap(), 10);
        assert_eq!(Extremal { n: 6, d: 3, k: 2 }.make().unwrap().size(), 10);
    }

    #[test]
    fn closed_edge_counts() {
        assert_eq!(Complete { n: 7 }.edge_count().unwrap(), 21);
        assert_eq!(MatchingDeleted { n: 7 }.edge_count().unwrap(), 17);
        for spec in [H1, H2, H3, MatchingDeleted { n: 8 }, Lollipop { n: 9, d: 2 }, TwoSided { n: 9, i: 3 }] {
            assert_eq!(spec.edge_count().unwrap(), spec.make().unwrap().size(), "{spec}");
        }
    }

    #[test]
    fn matching_deleted_degrees() {
        assert_eq!(
            MatchingDeleted { n: 4 }.make().unwrap(),
            Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
        );
        for n in 4..20 {
            let g = MatchingDeleted { n }.make().unwrap();
            let low = (0..n).filter(|&v| g.degree(v) as usize == n - 3).count();
            let regular = (0..n).filter(|&v| g.degree(v) as usize == n - 2).count();
            assert_eq!(low, n % 2);
            assert_eq!(low + regular, n);
        }
    }

    #[test]
    fn long_extremal_is_path() {
        for n in 4..12 {
            assert_eq!(Extremal { n, d: n - 1, k: 0 }.make().unwrap(), Path { n }.make().unwrap());
        }
    }

    #[test]
    fn lollipop_shares_extremal_labeling() {
        assert_eq!(Lollipop { n: 9, d: 4 }.make().unwrap(), Extremal { n: 9, d: 4, k: 0 }.make().unwrap());
    }

    #[test]
    fn special_graph_indices() {
        assert_eq!(H1.make().unwrap().eci().unwrap(), 28);
        assert_eq!(H2.make().unwrap().eci().unwrap(), 44);
        assert_eq!(H3.make().unwrap().eci().unwrap(), 65);
        assert_eq!(TwoSided { n: 7, i: 1 }.make().unwrap().eci().unwrap(), 65);
        assert_eq!(H1.make().unwrap().eccentricity(4).unwrap(), 1);
        assert_eq!(H2.make().unwrap().diameter().unwrap(), 3);
        assert_eq!(H3.make().unwrap().diameter().unwrap(), 3);
    }

    #[test]
    fn rejects_bad_parameters() {
        for spec in [
            Extremal { n: 3, d: 3, k: 0 },
            Extremal { n: 8, d: 2, k: 0 },
            Extremal { n: 8, d: 8, k: 0 },
            Extremal { n: 8, d: 4, k: 4 },
            MatchingDeleted { n: 3 },
            TwoSided { n: 7, i: 0 },
            TwoSided { n: 7, i: 3 },
            Lollipop { n: 5, d: 5 },
            Complete { n: 0 },
            Complete { n: 70 },
        ] {
            assert!(spec.make().is_err(), "{spec:?}");
            assert!(spec.edge_count().is_err(), "{spec:?}");
        }
    }

    #[test]
    fn parse_and_display() {
        for spec in [
            Complete { n: 5 },
            Path { n: 3 },
            Lollipop { n: 7, d: 4 },
            Extremal { n: 8, d: 4, k: 3 },
            MatchingDeleted { n: 6 },
            H1,
            H2,
            H3,
            TwoSided { n: 9, i: 2 },
        ] {
            assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        }
        assert_eq!("G:9,5,3".parse::<FamilySpec>().unwrap(), Extremal { n: 9, d: 5, k: 3 });
        assert!("extremal:9,5".parse::<FamilySpec>().is_err());
        assert!("wheel:5".parse::<FamilySpec>().is_err());
    }
}
