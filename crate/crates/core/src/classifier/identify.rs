use crate::catalog::{catalog, ClassId};
use crate::error::{Error, Result};
use crate::grade::{GradeVector, Grading};
use crate::superdivision::{structure_constants, verify_with_constants, Presentation, StructureConstants};

use super::equivalence::{equivalent_constants, EquivalenceCertificate};

/// Certificate search between two presentations; both must verify.
pub fn equivalent(p: &Presentation, q: &Presentation) -> Result<Option<EquivalenceCertificate>> {
    let (_, sp) = verify_with_constants(p)?;
    let (_, sq) = verify_with_constants(q)?;
    Ok(equivalent_constants(&sp, &sq))
}

/// Match verified structure constants against the catalog. Returns the class
/// and a certificate mapping the catalog entry onto `sc`.
pub fn identify_constants(sc: &StructureConstants) -> Result<(ClassId, EquivalenceCertificate)> {
    let mut hits = Vec::new();
    for entry in catalog(sc.grading, sc.series) {
        let reference = structure_constants(&entry.presentation)?;
        if let Some(cert) = equivalent_constants(&reference, sc) {
            hits.push((entry.class_id, cert));
        }
    }
    match hits.len() {
        0 => Err(Error::UnknownClass(format!("no {} {} catalog entry matches", sc.grading, sc.series))),
        1 => Ok(hits.pop().expect("one hit")),
        _ => Err(Error::AmbiguousClass(hits.iter().map(|(id, _)| id.to_string()).collect::<Vec<_>>().join(", "))),
    }
}

pub fn identify(p: &Presentation) -> Result<ClassId> {
    let (_, sc) = verify_with_constants(p)?;
    identify_constants(&sc).map(|(id, _)| id)
}

/// The `Z2`-graded subalgebra on the zero sector and sector `grade` of a
/// `Z2×Z2` presentation. For `01` the two grading slots are exchanged so the
/// odd part is read from the first letter.
pub fn subalgebra(p: &Presentation, grade: GradeVector) -> Result<Presentation> {
    if p.grading() != Grading::Z2Z2 || grade.is_zero() {
        return Err(Error::Parse("subalgebras are taken from the nonzero sectors of a Z2xZ2 presentation".into()));
    }
    let zero = p.grading().zero();
    let swap = !grade.bit(0);
    let pick = |g: GradeVector| -> Result<Vec<_>> {
        let words = p.sector(g).ok_or_else(|| Error::Parse(format!("missing sector {g}")))?;
        Ok(words.iter().map(|w| if swap { w.swap_slots(0, 1) } else { w.clone() }).collect())
    };
    let z2 = Grading::Z2.grades();
    Ok(Presentation::new(Grading::Z2, p.series(), vec![(z2[0], pick(zero)?), (z2[1], pick(grade)?)]))
}

/// Classes of `S01`, `S10`, `S11`, in that order.
pub fn ordered_projections(p: &Presentation) -> Result<[ClassId; 3]> {
    let grades = Grading::Z2Z2.grades();
    Ok([identify(&subalgebra(p, grades[1])?)?, identify(&subalgebra(p, grades[2])?)?, identify(&subalgebra(p, grades[3])?)?])
}

/// The unordered projection triple, sorted.
pub fn subalgebra_projections(p: &Presentation) -> Result<Vec<ClassId>> {
    let mut v = ordered_projections(p)?.to_vec();
    v.sort();
    Ok(v)
}
