//! Exact computation of the eccentric connectivity index, the graph
//! families that maximize it, and exhaustive checks of the extremal
//! characterizations over small connected graphs.

pub mod enumeration;
pub mod families;
pub mod formulas;
pub mod graph;

pub mod verification;

pub use families::{FamilyError, FamilySpec};
pub use graph::{Graph, GraphError, VertexMetrics};

// The guide's listings run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/index.md")]
    mod index {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
