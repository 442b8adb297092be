//! Enumeration and classification of alphabetic presentations.

mod classify;
mod enumerate;
mod equivalence;
mod fingerprint;
mod fusion;
mod identify;
pub mod transform;

pub use classify::{classify, ClassRecord, Classification};
pub use enumerate::{
    candidate_sectors, canonical_zero_sector, enumerate, minimal_word_length, sector_closure, seeded_sectors,
};
pub use equivalence::{equivalent_constants, EquivalenceCertificate};
pub use fingerprint::{cross_commutation, fingerprint, fingerprint_of, square_signature, CrossCommutation, Fingerprint};
pub use fusion::{fusion_table, FusionCell, FusionTable};
pub use identify::{
    equivalent, identify, identify_constants, ordered_projections, subalgebra, subalgebra_projections,
};
