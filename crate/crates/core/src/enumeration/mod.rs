//! Isomorphism classes: canonical certificates, exhaustive generation of
//! connected graphs, and graph6 interchange.

mod canon;
mod generate;
mod graph6;

pub use canon::{canonical_cert, canonical_form, is_isomorphic, CanonError, CanonicalCert, CanonicalForm, CERT_MAX_ORDER};
pub use generate::{connected_graphs, dedup_connected, enumerate_connected, EnumError, EnumFilter, GENERATOR_MAX_ORDER};
pub use graph6::{decode_graph6, encode_graph6, read_graph6, Graph6Error};
