//! Delta-matroids, the interlace polynomial, the topological transition
//! polynomial and signed intersection graphs of bouquets.

mod delta_matroid;
mod signed;
mod transition;

pub use delta_matroid::{interlace_poly, ribbon_delta_matroid, DeltaMatroid};
pub use signed::{si_graph, signed_graph_isomorphic, Sign, SignedGraph};
pub use transition::{transition_poly, transition_poly_with, WeightSystem, Weights};
