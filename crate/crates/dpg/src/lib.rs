//! Double generalized Petersen graphs DP(n, t) and their Hamilton cycles.
//!
//! DP(n, t) is defined for n >= 3 and 1 <= t with 2t < n: four layers of n
//! vertices (two rims x, y and two inner layers u, v), rim and spoke edges,
//! and crossing edges u_i v_{i+t}, v_i u_{i+t}. Every such graph is
//! Hamiltonian, and this crate builds an explicit Hamilton cycle for any
//! valid pair: a ladder walk for even n, and for odd n a decomposition into
//! rim paths and inner alternating walks stitched together by an offset
//! sequence. A verifier that re-derives adjacency from the edge rules, an
//! exhaustive search oracle, and deterministic text encoders round out the
//! crate.

pub mod construct;
pub mod formats;
pub mod graph;
pub mod oracle;
pub mod verify;

pub use construct::{
    even_hamilton, hamilton_cycle, odd_hamilton, ASequence, ASequenceError, ConstructError,
    HamiltonCycle, VertexPath,
};
pub use formats::{
    decode_certificate, encode_certificate, encode_dot, encode_edge_list, Construction,
    CycleCertificate, FormatError,
};
pub use graph::{DpGraph, GraphParams, Layer, ParamError, Vertex};
pub use oracle::{agreement_check, brute_force_from_seed, brute_force_hamilton, OracleError, SearchBudget};
pub use verify::{
    check_proof_partitions, inner_cycle, verify_hamilton, Finding, InnerCycle, VerificationReport,
};
