//! Laplacian spectra of semigraphs.
//!
//! A semigraph is a vertex set with ordered edges of two or more vertices,
//! any two edges sharing at most one vertex, an edge being equal to its
//! reversal. This crate validates semigraphs, classifies their vertices and
//! edges, assembles the weighted adjacency matrix and the Laplacian
//! `L = D − A` exactly, and analyses the spectrum:
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`model`] | Semigraph type, validation, vertex/edge/pair taxonomy |
//! | [`connectivity`] | Graph skeleton, chain connectivity |
//! | [`matrix`] | `A`, `D`, `L`, `Q = D + A`, per-edge Laplacians, quadratic forms |
//! | [`spectra`] | Jacobi eigensolver, exact characteristic polynomial, PSD and `λ₂` tests |
//! | [`bounds`] | `Δ + 1` lower bound, common-neighbour upper bound |
//! | [`families`] | Star and 3-uniform tree generators with closed-form spectra |
//!
//! The crate is `no_std` and needs only `alloc`. Matrix entries are exact
//! quarter-integers ([`Quarter`]); floating point appears only in the
//! eigensolver and in numeric comparisons.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod connectivity;
pub mod families;
pub mod matrix;
pub mod model;
pub mod poly;
pub mod quarter;
pub mod spectra;
#[cfg(any(test, feature = "testkit"))]
pub mod testkit;

pub use bounds::{
    bounds_report, common_profile, degree_profile, lower_bound, upper_bound, BoundsError,
    BoundsReport, CommonNeighborProfile, DegreeProfile, UpperBound, UpperVariant,
};
pub use connectivity::{components, is_connected, skeleton, SimpleGraph};
pub use families::{
    gen_star, gen_tree3, solve_cubic_real, solve_quadratic_real, star_spectrum_closed,
    tree3_spectrum_closed, ClosedFormSpectrum, FamilyError, QuadraticSurd,
};
pub use matrix::{
    adjacency, degrees, edge_laplacian, laplacian, quadratic_form_decomposed,
    quadratic_form_direct, signless, signless_form_decomposed, DegreeVector, EdgeLaplacian,
    EdgeQuadraticForm, MatrixError, SymmetricQMatrix,
};
pub use model::{
    classify_edge, classify_vertex, edge_distance, pair_kinds, Edge, EdgeCensus, EdgeClass,
    KindedPair, ModelError, PairKind, Semigraph, SemigraphBuilder, VertexClass, VertexId,
};
pub use poly::RationalPoly;
pub use quarter::Quarter;
pub use spectra::{
    algebraic_connectivity, charpoly_exact, eigenvalues_sym, is_connected_spectral, is_psd,
    laplacian_spectrum, matching_distance, spectral_connectivity, CharPoly, SpectraError, Spectrum,
};

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::model::Semigraph;
    use crate::quarter::Quarter;
    use alloc::vec;

    /// The 7-vertex example: edges (w1,w2,w3,w4), (w2,w5,w6), (w3,w7,w6),
    /// (w5,w7).
    pub fn fig1() -> Semigraph {
        Semigraph::from_labeled_edges([
            vec!["w1", "w2", "w3", "w4"],
            vec!["w2", "w5", "w6"],
            vec!["w3", "w7", "w6"],
            vec!["w5", "w7"],
        ])
        .unwrap()
    }

    /// A single full 3-edge.
    pub fn tree3_one() -> Semigraph {
        Semigraph::from_labeled_edges([["v1", "v2", "v3"]]).unwrap()
    }

    pub fn q(quarters: i64) -> Quarter {
        Quarter::from_quarters(quarters)
    }
}
