//! Exact computation of the Neumann–Siebenmann μ̄-invariant for Seifert
//! rational homology spheres over a genus-0 base, together with the
//! inequalities it (and Manolescu's κ) imposes on spin 4-manifolds they bound.
//!
//! The pipeline is
//!
//! ```text
//! SeifertInvariants --star_plumbing--> PlumbingGraph --intersection_matrix--> IntersectionMatrix
//!        |                                                                       |
//!   spin structures (congruences)                     signature / determinant / GF(2) solve
//!        \________________________ mubar_all __________________________________/
//!                                       |
//!                                    bounds (rule engine)
//! ```
//!
//! All arithmetic is exact. Batch drivers (characteristic-vector enumeration,
//! form scans, table sweeps, move verification) run on rayon when the
//! `parallel` feature is enabled; see [`Execution`].

pub mod bounds;
pub mod corpus;
pub mod dataset;
mod error;
mod exec;
pub mod parse;
pub mod plumbing;
pub mod rational;
pub mod seifert;
pub mod spin;
pub mod table;

pub use error::{Error, Result};
pub use exec::Execution;
pub use rational::Rational;

pub use bounds::{ConstraintVerdict, FormCandidate, KappaRecord, RuleId, RuleOutcome};
pub use plumbing::{IntersectionMatrix, PlumbingGraph, SignatureTriple, VertexId};
pub use seifert::{CaseFlags, DegreeSign, SeifertInvariants, SeifertSpinAssignment};
pub use spin::CharacteristicVector;
