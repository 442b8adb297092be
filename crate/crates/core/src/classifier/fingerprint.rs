use serde::Serialize;

use crate::catalog::ClassId;
use crate::error::Result;
use crate::grade::Grading;
use crate::superdivision::{verify_with_constants, Presentation, Series, StructureConstants};
use crate::word::{Commutation, Sign};

use super::identify::subalgebra_projections;

/// How the generators of two distinct nonzero sectors relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossCommutation {
    Commute,
    Anticommute,
    Mixed,
}

/// Equivalence-invariant summary. Every component is a sorted multiset, so
/// sign flips and all three kinds of permutation leave it unchanged.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub grading: Grading,
    pub series: Series,
    /// Per nonzero sector, the sorted square signs (`+` before `-`).
    pub square_signs: Vec<String>,
    /// `Z2×Z2` only.
    pub projections: Vec<ClassId>,
    /// `Z2×Z2` only: one entry per unordered pair of nonzero sectors.
    pub cross_commutation: Vec<CrossCommutation>,
}

pub fn square_signature(sc: &StructureConstants, members: &[usize]) -> String {
    let mut signs: Vec<Sign> = members.iter().map(|&a| sc.square_sign(a).unwrap_or(Sign::Plus)).collect();
    signs.sort();
    signs.iter().map(|s| s.as_char()).collect()
}

pub fn cross_commutation(sc: &StructureConstants) -> Vec<CrossCommutation> {
    let sectors: Vec<_> = sc.sectors().into_iter().filter(|(g, _)| !g.is_zero()).collect();
    let mut out = Vec::new();
    for i in 0..sectors.len() {
        for j in i + 1..sectors.len() {
            let kinds: Vec<Option<Commutation>> = sectors[i]
                .1
                .iter()
                .flat_map(|&a| sectors[j].1.iter().map(move |&b| sc.commutation(a, b)))
                .collect();
            let kind = if kinds.iter().all(|k| *k == Some(Commutation::Commute)) {
                CrossCommutation::Commute
            } else if kinds.iter().all(|k| *k == Some(Commutation::Anticommute)) {
                CrossCommutation::Anticommute
            } else {
                CrossCommutation::Mixed
            };
            out.push(kind);
        }
    }
    out.sort();
    out
}

/// Fingerprint from a presentation already known to verify.
pub fn fingerprint_of(p: &Presentation, sc: &StructureConstants) -> Result<Fingerprint> {
    let mut square_signs: Vec<String> = sc
        .sectors()
        .iter()
        .filter(|(g, _)| !g.is_zero())
        .map(|(_, members)| square_signature(sc, members))
        .collect();
    square_signs.sort();
    let z2z2 = p.grading() == Grading::Z2Z2;
    Ok(Fingerprint {
        grading: p.grading(),
        series: p.series(),
        square_signs,
        projections: if z2z2 { subalgebra_projections(p)? } else { Vec::new() },
        cross_commutation: if z2z2 { cross_commutation(sc) } else { Vec::new() },
    })
}

pub fn fingerprint(p: &Presentation) -> Result<Fingerprint> {
    let (_, sc) = verify_with_constants(p)?;
    fingerprint_of(p, &sc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;

    fn entry(s: &str) -> &'static Presentation {
        &lookup(s.parse().unwrap()).unwrap().presentation
    }

    #[test]
    fn real_square_signs() {
        assert_eq!(fingerprint(entry("D2_R2")).unwrap().square_signs, ["+", "+", "-"]);
        assert_eq!(fingerprint(entry("D2_R1")).unwrap().square_signs, ["-", "-", "-"]);
    }

    #[test]
    fn c4_c5_cross_commutation() {
        assert_eq!(fingerprint(entry("D2_C4")).unwrap().cross_commutation, [CrossCommutation::Anticommute; 3]);
        assert_eq!(fingerprint(entry("D2_C5")).unwrap().cross_commutation, [CrossCommutation::Commute; 3]);
    }

    #[test]
    fn quaternionic_projections() {
        let fp = fingerprint(entry("D2_H1")).unwrap();
        let h1: ClassId = "D1_H1".parse().unwrap();
        assert_eq!(fp.projections, [h1, h1, h1]);
    }

    #[test]
    fn z2_odd_squares() {
        assert_eq!(fingerprint(entry("D1_H1")).unwrap().square_signs, ["+++-"]);
        assert_eq!(fingerprint(entry("D1_H2")).unwrap().square_signs, ["+---"]);
    }
}
