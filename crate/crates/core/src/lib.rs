//! Exact alphabetic presentations of graded superdivision algebras.
//!
//! Generators are signed words over the letters `I, X, Y, A`, each standing
//! for a tensor product of invertible real 2×2 matrices. On top of the word
//! algebra the crate verifies the superdivision axioms, enumerates every
//! minimal presentation for `Z2` and `Z2×Z2` gradings, and sorts them into
//! equivalence classes under sign flips, in-sector permutations and
//! permutations of the nonzero sectors.

pub mod catalog;
pub mod classifier;
pub mod error;
pub mod grade;
pub mod matrix;
pub mod superdivision;
pub mod word;

pub use error::{AxiomViolation, Error, Result};
pub use grade::{GradeVector, Grading};
pub use superdivision::{Presentation, Series, StructureConstants};
pub use word::{Commutation, Letter, Sign, SignedWord};
