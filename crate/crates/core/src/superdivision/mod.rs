//! Graded word presentations and the superdivision axioms.

mod clifford;
mod presentation;
mod structure;
mod table;
mod verify;

pub use clifford::{schur_commutant_check, verify_clifford, CliffordSignature};
pub use presentation::{
    format_presentation, label_prefix, parse_presentation, HomogeneousElement, Presentation, Series,
};
pub use structure::{structure_constants, StructureConstants, TableEntry};
pub use table::{emit_table, TableDocument, TableFormat};
pub use verify::{
    determinant_oracle, division_criterion, oracle_coefficients, verify_division, verify_grading,
    verify_superdivision, verify_with_constants, SectorReport, SuperdivisionReport, ORACLE_RANGE, ORACLE_SAMPLES,
    ORACLE_SEED,
};
