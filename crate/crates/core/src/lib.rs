//! Flags hypergraphs, automorphism generators and graph-of-groups
//! decompositions of right-angled Artin groups, with exact word arithmetic
//! to verify the factorization of automorphisms through per-hyperedge families.

pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod factor;
pub mod flags;
pub mod generators;
pub mod graph;
pub mod report;
pub mod word;

pub use error::{Error, Result};
pub use flags::{
    build_flags_hypergraph, leq, vertex_classes, FlagsHypergraph, Hyperedge, HyperedgeKind,
};
pub use generators::{
    enumerate_aut1_generators, enumerate_laurence_generators, realize_aut1, realize_laurence,
    Aut1Generator, Aut1Kind, Automorphism, LaurenceGenerator,
};
pub use graph::{parse_graph, ClassKind, SimpleGraph, VertexClass, VertexSet};
pub use word::{normal_form, parse_word, Letter, NormalForm, Word};
