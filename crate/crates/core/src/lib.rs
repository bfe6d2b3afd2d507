//! Matchings and vertex covers on bipartite graphs: Konig's procedure and its
//! reverse, star-studded graphs, path-structure classification of maximal
//! matchings, and brute-force oracles for checking all of it.

pub mod corpus;
pub mod error;
pub mod experiments;
pub mod format;
pub mod graph;
pub mod konig;
pub mod matching;
pub mod named;
pub mod oracle;
pub mod reverse;
pub mod star;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Edge, Side, Subgraph, VertexId, VertexSet};
pub use konig::{konig_cover, z_set, CoverVerdict, VertexCover, ZSet};
pub use matching::{maximum_matching, AlternatingPath, Matching};
pub use reverse::{reverse_konig, CoverSplit, ReverseResult};
pub use star::{star_stud, StarStuddedGraph};
pub use structure::{classify_matching, path_structure, ClassificationVerdict, PathStructure};
