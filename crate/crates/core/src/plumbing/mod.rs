//! Weighted plumbing trees, their intersection forms, and Neumann moves.

mod graph;
mod matrix;
pub mod moves;

pub use graph::{eval_neg_cont_frac, neg_cont_frac, star_plumbing, GraphJson, PlumbingGraph, VertexId};
pub use matrix::{determinant, gf2_nullity, signature, IntersectionMatrix, SignatureTriple};


pub fn intersection_matrix(g: &PlumbingGraph) -> IntersectionMatrix {
    g.intersection_matrix()
}
