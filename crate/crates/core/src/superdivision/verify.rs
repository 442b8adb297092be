//! The superdivision axioms, checked exactly on word presentations.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{AxiomViolation, Error, Result};
use crate::grade::GradeVector;
use crate::matrix::linear_combination;
use crate::word::{Commutation, Sign, SignedWord};

use super::presentation::Presentation;
use super::structure::{structure_constants, StructureConstants};

/// Seed of the random coefficient batches fed to the determinant oracle.
pub const ORACLE_SEED: u64 = 0x5eed_2021_0004;
/// Random nonzero coefficient vectors drawn per sector.
pub const ORACLE_SAMPLES: usize = 32;
/// Coefficients are drawn uniformly from `-ORACLE_RANGE..=ORACLE_RANGE`.
pub const ORACLE_RANGE: i64 = 9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectorReport {
    pub sector: String,
    pub dimension: usize,
    pub criterion: &'static str,
    pub oracle_samples: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuperdivisionReport {
    pub generators: usize,
    pub word_length: usize,
    pub sectors: Vec<SectorReport>,
}

fn expected_grades(p: &Presentation) -> Vec<GradeVector> {
    p.grading().grades()
}

fn check_shape(p: &Presentation) -> Result<(), AxiomViolation> {
    let expected = expected_grades(p);
    let found: Vec<GradeVector> = p.sectors().iter().map(|(g, _)| *g).collect();
    let labels = |v: &[GradeVector]| v.iter().map(|g| g.label()).collect::<Vec<_>>().join(",");
    if found != expected || p.sectors().iter().any(|(_, w)| w.is_empty()) {
        let nonempty: Vec<GradeVector> =
            p.sectors().iter().filter(|(_, w)| !w.is_empty()).map(|(g, _)| *g).collect();
        return Err(AxiomViolation::SectorCount { expected: labels(&expected), found: labels(&nonempty) });
    }
    let words: Vec<&SignedWord> = p.sectors().iter().flat_map(|(_, w)| w).collect();
    let first = words[0];
    if let Some(other) = words.iter().find(|w| w.len() != first.len()) {
        return Err(AxiomViolation::UnequalLength { first: first.to_string(), other: other.to_string() });
    }
    Ok(())
}

fn check_unit(p: &Presentation) -> Result<(), AxiomViolation> {
    let first = &p.sectors()[0].1[0];
    if first.is_identity() {
        Ok(())
    } else {
        Err(AxiomViolation::MissingUnit { found: first.to_string() })
    }
}

fn check_dimensions(p: &Presentation) -> Result<(), AxiomViolation> {
    let d = p.series().sector_dimension();
    for (g, words) in p.sectors() {
        if words.len() != d {
            return Err(AxiomViolation::SectorDimension {
                sector: g.label(),
                series: p.series().to_string(),
                expected: d,
                found: words.len(),
            });
        }
    }
    Ok(())
}

/// Every word sits in the sector its letters say it does, and every pairwise
/// product lands in the sum sector.
pub fn verify_grading(p: &Presentation) -> Result<()> {
    check_shape(p)?;
    let grading = p.grading();
    for (declared, words) in p.sectors() {
        for w in words {
            let actual = w.grade(grading)?;
            if actual != *declared {
                return Err(AxiomViolation::MisplacedWord {
                    word: w.to_string(),
                    declared: declared.label(),
                    actual: actual.label(),
                }
                .into());
            }
        }
    }
    let gens = p.generators();
    for (ga, u) in &gens {
        for (gb, v) in &gens {
            let prod = u.mul(v)?;
            let actual = prod.grade(grading)?;
            let expected = *ga + *gb;
            if actual != expected {
                return Err(AxiomViolation::GradingViolation {
                    left: u.to_string(),
                    right: v.to_string(),
                    product: prod.to_string(),
                    expected: expected.label(),
                    actual: actual.label(),
                }
                .into());
            }
        }
    }
    Ok(())
}

/// Exact invertibility criterion for the span of one sector.
///
/// * one word: always invertible;
/// * `{u, v}`: `(u⁻¹v)² = -1`;
/// * `{u, v1, v2, v3}`: the ratios `r_i = u⁻¹v_i` square to `-1` and
///   anticommute pairwise. Then `q = λ0 + Σ λi ri` has
///   `q·(λ0 - Σ λi ri) = Σ λ²`; whether `r1·r2 = ±r3` is a closure question.
///
/// Returns the name of the criterion applied.
pub fn division_criterion(words: &[SignedWord]) -> Result<&'static str, String> {
    match words {
        [_] => Ok("single word"),
        [u, v] => {
            let r = u.inverse().mul(v).map_err(|e| e.to_string())?;
            if r.square_sign() == Sign::Minus {
                Ok("complex ratio")
            } else {
                Err(format!("ratio {r} squares to +1"))
            }
        }
        [u, rest @ ..] if rest.len() == 3 => {
            let inv = u.inverse();
            let r = rest.iter().map(|v| inv.mul(v)).collect::<Result<Vec<_>>>().map_err(|e| e.to_string())?;
            if let Some(bad) = r.iter().find(|x| x.square_sign() == Sign::Plus) {
                return Err(format!("ratio {bad} squares to +1"));
            }
            for i in 0..3 {
                for j in i + 1..3 {
                    if r[i].commutation(&r[j]).map_err(|e| e.to_string())? == Commutation::Commute {
                        return Err(format!("ratios {} and {} commute", r[i], r[j]));
                    }
                }
            }
            Ok("quaternion ratios")
        }
        _ => Err(format!("no criterion for a sector of dimension {}", words.len())),
    }
}

/// Division property on every sector. Assumes [`verify_grading`] passes.
pub fn verify_division(p: &Presentation) -> Result<Vec<(String, &'static str)>> {
    p.sectors()
        .iter()
        .map(|(g, words)| {
            division_criterion(words)
                .map(|c| (g.label(), c))
                .map_err(|reason| AxiomViolation::Division { sector: g.label(), reason }.into())
        })
        .collect()
}

/// Coefficient vectors fed to the determinant oracle for a sector of
/// dimension `d`: all nonzero vectors in `{-1,0,1}^d`, then
/// [`ORACLE_SAMPLES`] fixed-seed random nonzero vectors.
pub fn oracle_coefficients(d: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(d as u32) {
        let mut c = code;
        out.push(
            (0..d)
                .map(|_| {
                    let v = (c % 3) as i64 - 1;
                    c /= 3;
                    v
                })
                .collect::<Vec<_>>(),
        );
    }
    out.retain(|v| v.iter().any(|&x| x != 0));
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let mut drawn = 0;
    while drawn < ORACLE_SAMPLES {
        let v: Vec<i64> = (0..d).map(|_| rng.gen_range(-ORACLE_RANGE..=ORACLE_RANGE)).collect();
        if v.iter().any(|&x| x != 0) {
            out.push(v);
            drawn += 1;
        }
    }
    out
}

/// Independent check: `det(Σ λ_i M(w_i)) ≠ 0` on every oracle vector.
/// Returns the first singular coefficient vector, if any.
pub fn determinant_oracle(words: &[SignedWord]) -> Result<usize, Vec<i64>> {
    // The batch is fixed, so the verdict depends on the word list alone;
    // enumeration revisits the same sectors many times.
    type Verdicts = HashMap<Vec<SignedWord>, Result<usize, Vec<i64>>>;
    static CACHE: OnceLock<Mutex<Verdicts>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("oracle cache").get(words) {
        return hit.clone();
    }
    let coefficients = oracle_coefficients(words.len());
    let verdict = coefficients
        .iter()
        .find(|c| !linear_combination(words, c).is_nonsingular())
        .map_or(Ok(coefficients.len()), |c| Err(c.clone()));
    cache.lock().expect("oracle cache").insert(words.to_vec(), verdict.clone());
    verdict
}

/// The full axiom set: sectors present with the series dimension, unit,
/// grading, closure, exact division criterion, and the determinant oracle as
/// a cross-check.
pub fn verify_superdivision(p: &Presentation) -> Result<SuperdivisionReport> {
    verify_with_constants(p).map(|(r, _)| r)
}

/// [`verify_superdivision`] that also hands back the multiplication table.
pub fn verify_with_constants(p: &Presentation) -> Result<(SuperdivisionReport, StructureConstants)> {
    check_shape(p)?;
    check_unit(p)?;
    check_dimensions(p)?;
    verify_grading(p)?;
    let sc = structure_constants(p)?;
    let criteria = verify_division(p)?;
    let mut sectors = Vec::new();
    for ((g, words), (_, criterion)) in p.sectors().iter().zip(criteria) {
        let samples = determinant_oracle(words).map_err(|coefficients| {
            Error::from(AxiomViolation::SingularElement { sector: g.label(), coefficients })
        })?;
        sectors.push(SectorReport { sector: g.label(), dimension: words.len(), criterion, oracle_samples: samples });
    }
    Ok((
        SuperdivisionReport { generators: p.generator_count(), word_length: p.word_length().unwrap_or(0), sectors },
        sc,
    ))
}
