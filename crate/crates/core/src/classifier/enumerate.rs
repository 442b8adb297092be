use std::collections::BTreeSet;

use crate::grade::{GradeVector, Grading};
use crate::superdivision::{verify_superdivision, Presentation, Series};
use crate::word::{all_words, Letter, Sign, SignedWord};

/// Word length of a minimal presentation: grading slots plus 0/1/2 letters.
pub fn minimal_word_length(grading: Grading, series: Series) -> usize {
    (grading.depth() + series.extra_letters()).max(1)
}

/// The fixed zero sector: `I…I` followed by the division-algebra tails
/// (`I`; `II, IA`; `III, IIA, IAX, IAY` for `Z2`, one more `I` for `Z2×Z2`).
pub fn canonical_zero_sector(grading: Grading, series: Series) -> Vec<SignedWord> {
    let n = minimal_word_length(grading, series);
    series
        .division_tails()
        .into_iter()
        .map(|tail| {
            let mut letters = vec![Letter::I; n - tail.len()];
            letters.extend(tail);
            SignedWord::new(Sign::Plus, letters)
        })
        .collect()
}

/// Unsigned closure of `seed` under left and right multiplication by the
/// zero sector. When it has the expected size it is listed as
/// `e_J · m` for the lexicographically smallest member `m`.
pub fn sector_closure(seed: &SignedWord, zero: &[SignedWord]) -> Vec<SignedWord> {
    let mut set = BTreeSet::new();
    for l in zero {
        for r in zero {
            let w = l.mul(seed).and_then(|x| x.mul(r)).expect("equal lengths");
            set.insert(w.unsigned());
        }
    }
    if set.len() != zero.len() {
        return set.into_iter().collect();
    }
    let m = set.first().expect("nonempty").clone();
    zero.iter().map(|e| e.mul(&m).expect("equal lengths").unsigned()).collect()
}

/// Every distinct sector of grade `grade` generated by a single seed word.
pub fn seeded_sectors(grade: GradeVector, series: Series) -> Vec<Vec<SignedWord>> {
    let grading = grade.grading();
    let zero = canonical_zero_sector(grading, series);
    let n = zero[0].len();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for w in all_words(n) {
        if w.grade(grading).expect("length ≥ depth") != grade {
            continue;
        }
        let sector = sector_closure(&w, &zero);
        let key: BTreeSet<SignedWord> = sector.iter().cloned().collect();
        if seen.insert(key) {
            out.push(sector);
        }
    }
    out
}

/// Zero sector plus every seeded sector of every nonzero grade: the sectors
/// the enumerator builds presentations from.
pub fn candidate_sectors(grading: Grading, series: Series) -> Vec<Vec<SignedWord>> {
    let mut out = vec![canonical_zero_sector(grading, series)];
    for g in grading.grades().into_iter().filter(|g| !g.is_zero()) {
        out.extend(seeded_sectors(g, series));
    }
    out
}

/// All minimal alphabetic presentations with the canonical zero sector that
/// pass every superdivision axiom, deduplicated as unsigned word sets, in
/// deterministic order.
pub fn enumerate(grading: Grading, series: Series) -> Vec<Presentation> {
    let zero = canonical_zero_sector(grading, series);
    let grades = grading.grades();
    let candidates: Vec<Presentation> = match grading {
        Grading::None => vec![Presentation::new(grading, series, vec![(grades[0], zero)])],
        Grading::Z2 => seeded_sectors(grades[1], series)
            .into_iter()
            .map(|odd| Presentation::new(grading, series, vec![(grades[0], zero.clone()), (grades[1], odd)]))
            .collect(),
        Grading::Z2Z2 => {
            let s01 = seeded_sectors(grades[1], series);
            let s10 = seeded_sectors(grades[2], series);
            let mut out = Vec::with_capacity(s01.len() * s10.len());
            for f in &s01 {
                for g in &s10 {
                    let seed = f[0].mul(&g[0]).expect("equal lengths");
                    let h = sector_closure(&seed, &zero);
                    out.push(Presentation::new(
                        grading,
                        series,
                        vec![(grades[0], zero.clone()), (grades[1], f.clone()), (grades[2], g.clone()), (grades[3], h)],
                    ));
                }
            }
            out
        }
    };
    let mut seen = BTreeSet::new();
    candidates
        .into_iter()
        .filter(|p| verify_superdivision(p).is_ok())
        .filter(|p| seen.insert(p.unsigned_word_set()))
        .collect()
}
