use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{AxiomViolation, Error, Result};
use crate::grade::{GradeVector, Grading};
use crate::word::{Commutation, Letter, Sign, SignedWord};

use super::presentation::{Presentation, Series};

/// `generator_a · generator_b = sign · generator_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableEntry {
    pub sign: Sign,
    pub index: usize,
}

/// The abstract multiplication table of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    pub grading: Grading,
    pub series: Series,
    pub grades: Vec<GradeVector>,
    pub table: Vec<Vec<TableEntry>>,
    pub unit: usize,
}

impl StructureConstants {
    pub fn generator_count(&self) -> usize {
        self.grades.len()
    }

    pub fn entry(&self, a: usize, b: usize) -> TableEntry {
        self.table[a][b]
    }

    /// `Some` when `a·b = ±b·a`.
    pub fn commutation(&self, a: usize, b: usize) -> Option<Commutation> {
        let (ab, ba) = (self.table[a][b], self.table[b][a]);
        if ab.index != ba.index {
            None
        } else if ab.sign == ba.sign {
            Some(Commutation::Commute)
        } else {
            Some(Commutation::Anticommute)
        }
    }

    /// Sign `s` with `a·a = s·unit`, if the square is a multiple of the unit.
    pub fn square_sign(&self, a: usize) -> Option<Sign> {
        let e = self.table[a][a];
        (e.index == self.unit).then_some(e.sign)
    }

    /// Generator indices grouped by grade, grades in ascending order.
    pub fn sectors(&self) -> Vec<(GradeVector, Vec<usize>)> {
        let mut out: Vec<(GradeVector, Vec<usize>)> = Vec::new();
        for (i, &g) in self.grades.iter().enumerate() {
            match out.iter_mut().find(|(h, _)| *h == g) {
                Some((_, v)) => v.push(i),
                None => out.push((g, vec![i])),
            }
        }
        out.sort_by_key(|(g, _)| *g);
        out
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.generator_count();
        (0..n).all(|a| (a..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Products land in the sum sector and the unit row/column are identities.
    pub fn respects_grading(&self) -> bool {
        let n = self.generator_count();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let e = self.table[a][b];
                self.grades[e.index] == self.grades[a] + self.grades[b]
            })
        }) && (0..n).all(|a| {
            self.table[self.unit][a] == TableEntry { sign: Sign::Plus, index: a }
                && self.table[a][self.unit] == TableEntry { sign: Sign::Plus, index: a }
        })
    }
}

/// Fill the multiplication table by multiplying every pair of words and
/// looking the product up among the generators, up to sign.
pub fn structure_constants(p: &Presentation) -> Result<StructureConstants> {
    let generators = p.generators();
    let Some((_, first)) = generators.first() else {
        return Err(AxiomViolation::SectorCount { expected: "a zero sector".into(), found: "nothing".into() }.into());
    };
    let n = first.len();
    for (_, w) in &generators {
        if w.len() != n {
            return Err(AxiomViolation::UnequalLength { first: first.to_string(), other: w.to_string() }.into());
        }
    }
    let mut lookup: HashMap<&[Letter], usize> = HashMap::with_capacity(generators.len());
    for (i, (_, w)) in generators.iter().enumerate() {
        if let Some(&j) = lookup.get(w.letters()) {
            return Err(AxiomViolation::DuplicateGenerator {
                first: generators[j].1.to_string(),
                second: w.to_string(),
            }
            .into());
        }
        lookup.insert(w.letters(), i);
    }
    let table = generators
        .iter()
        .map(|(_, u)| {
            generators
                .iter()
                .map(|(_, v)| {
                    let prod = u.mul(v)?;
                    let Some(&k) = lookup.get(prod.letters()) else {
                        return Err(Error::from(AxiomViolation::Closure {
                            left: u.to_string(),
                            right: v.to_string(),
                            product: prod.to_string(),
                        }));
                    };
                    // prod = s·|w_k| and w_k = t·|w_k|, so prod = (s·t)·w_k
                    Ok(TableEntry { sign: prod.sign() * generators[k].1.sign(), index: k })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let unit = lookup.get(SignedWord::identity(n).letters()).copied().unwrap_or(0);
    Ok(StructureConstants {
        grading: p.grading(),
        series: p.series(),
        grades: generators.iter().map(|(g, _)| *g).collect(),
        table,
        unit,
    })
}
