//! Exact lattice-polytope toolkit for reflexive, terminal and smooth Fano
//! polytopes.
//!
//! All arithmetic is done in `i64` with checked operations; overflow is an
//! error, never a wrapped value. Points are row vectors and linear maps act
//! on the right (`x ↦ x·T`).

pub mod enumerate;
pub mod error;
pub mod families;
pub mod hull;
pub mod isomorphism;
pub mod lemmas;
pub mod linalg;
pub mod polytope;
pub mod predicates;

pub use error::{Error, Result};
pub use linalg::{IntMatrix, IntVector, RatCovector, Rational};
pub use polytope::{Facet, Polytope};
pub use predicates::{CaseTag, LevelDistribution, NeighborResult};
pub use enumerate::{enumerate_3dm1, verify_theorem, ClassificationReport, SearchConfig, TheoremCertificate};
pub use families::{construct, direct_sum, FamilyId};
pub use isomorphism::{are_isomorphic, dedupe, find_isomorphism, fingerprint, Fingerprint};
