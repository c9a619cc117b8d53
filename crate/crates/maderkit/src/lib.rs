//! maderkit: a desk-scale laboratory for dichromatic numbers and forced
//! subdivisions in digraphs.
//!
//! The crate provides exact dichromatic-number computation, subdivision
//! search with verifiable embedding certificates, construction and bounded
//! recognition of an ear-decomposable digraph family, executable
//! certificate extractors for small four-vertex patterns, and exhaustive
//! isomorph-free sweeps that check the structural claims instance by
//! instance on every small digraph.

pub mod bits;
pub mod bounds;
pub mod cache;
pub mod campaign;
pub mod canon;
pub mod coloring;
pub mod digraph;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod subdivision;
pub mod witness;

pub use digraph::{Digraph, Dipath, Dicycle, StrongComponentDecomposition};
pub use canon::{canonical_form, enumerate_digraphs, CanonicalKey};
pub use coloring::{dichromatic_number, AcyclicColoring};
pub use subdivision::{brute_force_oracle, contains_subdivision, verify_embedding, SubdivisionEmbedding};
