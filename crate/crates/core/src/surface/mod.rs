//! Topological invariants: which closed surfaces a graph embeds in.
//!
//! An embedding of a connected graph in a closed surface is encoded
//! combinatorially as a rotation system (a cyclic neighbor order at each
//! vertex) plus an edge signature (−1 edges reverse local orientation).
//! Faces are recovered by tracing orbits of signed darts; Euler's formula
//! v − e + f then names the surface: χ = 2 − 2g orientable when the
//! signature is balanced, χ = 2 − k nonorientable otherwise.
//!
//! The genus of a graph is the sum of the genera of its biconnected blocks;
//! the crosscap number composes over blocks through ε = min(2·genus,
//! crosscap). Lower bounds come from Euler's inequality e ≤ 3(v − χ) and
//! from cliques; exact values come from formula (complete blocks) or from a
//! complete face-driven search that either finds an embedding scheme or
//! refutes the surface.

pub mod blocks;
pub mod bounds;
pub mod certificates;
pub mod exact;
pub mod scheme;
pub mod search;

pub use blocks::{biconnected_blocks, cut_vertices};
pub use bounds::{clique_crosscap, clique_genus, euler_lower_bounds, max_clique};
pub use certificates::{certificate_names, verify_certificate, CertificateReport};
pub use exact::{
    crosscap_exact, genus_exact, planar_embedding, surface_invariants, SurfaceInvariants,
    SurfaceOptions,
};
pub use scheme::{trace_faces, EmbeddingScheme, FaceTrace, SchemeError, Surface};
pub use search::{
    exhaustive_decide, search_embedding, stochastic_search, Decision, SearchBudget,
};
