//! Upper ideal relation graphs of finite commutative rings.
//!
//! For a finite commutative ring R with identity, the upper ideal relation
//! graph Γ_U(R) has the non-units of R as vertices, with x adjacent to y iff
//! some non-unit z generates a principal ideal containing both (x) and (y).
//! Equivalently, Γ_U(R) is the union of the cliques induced by the maximal
//! proper principal ideals of R; 0 is universal and the graph is connected.
//!
//! - [`catalog`]: the local rings of order < 10 and products thereof.
//! - [`ring`]: finite rings as explicit operation tables.
//! - [`graph`]: dense bitset graphs and the Γ_U construction.
//! - [`classify`]: graph-class recognizers with checkable witnesses.
//! - [`surface`]: embeddings, genus, crosscap, certificates.
//! - [`verify`]: theorem verification over bounded ring universes.

pub mod catalog;
pub mod classify;
pub mod graph;
pub mod ring;
pub mod surface;
pub mod verify;
