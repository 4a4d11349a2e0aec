//! Exact computation with simplicial complexes, squarefree monomial ideals
//! and simple graphs under the expansion functor: every vertex is replaced
//! by a block of copies and every facet by all mixed-copy selections.
//!
//! The crate keeps two independent routes to every algebraic invariant it
//! cares about: closed-form combinatorics (colon sets of linear quotients,
//! generator substitution, elimination orders) on one side, and an exact
//! homological engine (reduced homology over ℚ or GF(p), restriction-sum
//! Betti tables, the all-links criterion) on the other. The [`verify`]
//! module wires the two sides into seeded randomized suites.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so everything here is safe to share across threads.

pub mod betti;
pub mod complex;
pub mod expansion;
pub mod face;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod io;
mod linalg;
pub mod verify;

pub use betti::{BettiTable, ModuleKind};
pub use complex::{ComplexError, SimplicialComplex};
pub use expansion::{ExpansionError, ExpansionVector};
pub use face::Face;
pub use graph::{Graph, GraphError};
pub use homology::{
    hochster_betti, is_cohen_macaulay, is_sequentially_cohen_macaulay, is_shellable,
    is_vertex_decomposable, reduced_homology, Decision, FieldSpec, HomologyError, HomologyProfile,
    Shelling,
};
pub use ideal::{
    betti_from_linear_quotients, expansion_order, IdealError, LinearQuotients,
    LinearQuotientsCertificate, MonomialIdeal,
};
pub use verify::{run_suite, Caps, SuiteReport, SUITE_NAMES};
