//! Exact longest-path machinery for small graphs: enumeration of all longest
//! paths, intersection-structure checkers, mechanically validated
//! path-surgery certificates, and deterministic generators for seeded
//! counterexample-search campaigns.

pub mod corpus;
pub mod dot;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod intersect;
pub mod path;
pub mod rng;
pub mod surgery;

pub use dot::to_dot;
pub use generate::{generate, Family, GenerateError, GeneratorSpec};
pub use graph::{Graph, GraphError, MAX_ORDER};
pub use graph6::{parse_graph6, to_graph6, Graph6Error, MAX_GRAPH6_ORDER};
pub use intersect::{
    common_vertices, gallai_set, index_alignment_check, interleave_scan, lemma2_check,
    pairwise_check, triple_check, CheckError, CheckVerdict, PairIntersection, ParityConvention,
    Witness,
};
pub use path::{
    brute_force_longest, enumerate_longest_paths, enumerate_longest_paths_budgeted, is_path,
    longest_path_order, EngineError, LongestPathReport, PathError, VertexPath, ORACLE_MAX_ORDER,
};
pub use rng::DetRng;
pub use surgery::{
    case1_final_surgery, interleave_surgery_check, lemma1_surgery, lemma2_surgery, lemma3_surgery,
    validate_certificate, Collision, SurgeryCertificate, SurgeryError,
};
