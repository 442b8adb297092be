//! The allowed equivalence transformations, realized on word presentations.
//!
//! Sign flips and in-sector permutations act on the word lists directly. A
//! permutation of the three nonzero `Z2×Z2` sectors is realized by an exact
//! automorphism of the word algebra acting on the two grading slots, so the
//! result is again a presentation whose words carry the right masks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::grade::{GradeVector, Grading};
use crate::superdivision::Presentation;
use crate::word::{Letter, Sign, SignedWord};

/// A permutation of the grades fixing zero, stored as the image of each grade
/// value: `images[g.bits()]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SectorPermutation {
    grading: Grading,
    images: Vec<u8>,
}

impl SectorPermutation {
    pub fn identity(grading: Grading) -> Self {
        let n = 1u8 << grading.depth();
        SectorPermutation { grading, images: (0..n).collect() }
    }

    /// All permutations allowed for the grading: six for `Z2×Z2`, only the
    /// identity otherwise. Identity first.
    pub fn all(grading: Grading) -> Vec<SectorPermutation> {
        if grading != Grading::Z2Z2 {
            return vec![Self::identity(grading)];
        }
        [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]]
            .iter()
            .map(|p| SectorPermutation { grading, images: vec![0, p[0], p[1], p[2]] })
            .collect()
    }

    pub fn apply(&self, g: GradeVector) -> GradeVector {
        GradeVector::new(self.images[g.bits() as usize], self.grading)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        SectorPermutation { grading: self.grading, images }
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &SectorPermutation) -> Self {
        SectorPermutation {
            grading: self.grading,
            images: first.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u8 == j)
    }

    /// `(from, to)` label pairs, e.g. `[("01","10"), ...]`.
    pub fn pairs(&self) -> Vec<(String, String)> {
        self.grading.grades().into_iter().map(|g| (g.label(), self.apply(g).label())).collect()
    }
}

/// Word automorphisms touching only the first two slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotAutomorphism {
    /// Exchange slots 0 and 1: grades `01 ↔ 10`.
    Swap,
    /// `XI→XI, YI→YY, IX→XX, IY→IY`: grades `10 ↔ 11`.
    Entangle,
}

impl SlotAutomorphism {
    pub fn sector_permutation(self) -> SectorPermutation {
        let images = match self {
            SlotAutomorphism::Swap => vec![0, 2, 1, 3],
            SlotAutomorphism::Entangle => vec![0, 1, 3, 2],
        };
        SectorPermutation { grading: Grading::Z2Z2, images }
    }

    /// Image of a word of length ≥ 2.
    pub fn apply(self, w: &SignedWord) -> SignedWord {
        match self {
            SlotAutomorphism::Swap => w.swap_slots(0, 1),
            SlotAutomorphism::Entangle => entangle(w),
        }
    }
}

fn padded(n: usize, head: [Letter; 2]) -> SignedWord {
    let mut letters = vec![Letter::I; n];
    letters[..2].copy_from_slice(&head);
    SignedWord::new(Sign::Plus, letters)
}

// Each letter factors as X^a·Y^b (A = X·Y). Mapping the slot-0/1 X and Y
// factors onto commuting/anticommuting images with the same relations gives
// an automorphism.
fn entangle(w: &SignedWord) -> SignedWord {
    use Letter::*;
    let n = w.len();
    let images = [
        (padded(n, [X, I]), padded(n, [Y, Y])), // slot 0: X, Y
        (padded(n, [X, X]), padded(n, [I, Y])), // slot 1: X, Y
    ];
    let mut tail = w.letters().to_vec();
    tail[0] = I;
    tail[1] = I;
    let mut acc = SignedWord::new(w.sign(), tail);
    for (slot, (x_img, y_img)) in images.iter().enumerate() {
        let (has_x, has_y) = match w.letters()[slot] {
            I => (false, false),
            X => (true, false),
            Y => (false, true),
            A => (true, true),
        };
        let mut factor = SignedWord::identity(n);
        if has_x {
            factor = factor.mul(x_img).expect("equal lengths");
        }
        if has_y {
            factor = factor.mul(y_img).expect("equal lengths");
        }
        acc = factor.mul(&acc).expect("equal lengths");
    }
    acc
}

/// A short sequence of slot automorphisms whose grade action equals `target`.
pub fn realize(target: &SectorPermutation) -> Vec<SlotAutomorphism> {
    let gens = [SlotAutomorphism::Swap, SlotAutomorphism::Entangle];
    let mut frontier = vec![(SectorPermutation::identity(Grading::Z2Z2), Vec::new())];
    for _ in 0..=3 {
        let mut next = Vec::new();
        for (perm, seq) in frontier {
            if perm == *target {
                return seq;
            }
            for g in gens {
                let mut s = seq.clone();
                s.push(g);
                next.push((g.sector_permutation().compose(&perm), s));
            }
        }
        frontier = next;
    }
    unreachable!("swap and entangle generate S3")
}

/// Move sector `g` of `p` to `perm(g)`, transforming the words so their
/// masks follow.
pub fn permute_sectors(p: &Presentation, perm: &SectorPermutation) -> Presentation {
    if p.grading() != Grading::Z2Z2 {
        assert!(perm.is_identity(), "only Z2xZ2 sectors can be permuted");
        return p.clone();
    }
    let mut out = p.clone();
    for step in realize(perm) {
        let sp = step.sector_permutation();
        out = out.map_words(|w| step.apply(w), |g| sp.apply(g));
    }
    out
}

/// Flip the sign of generator `k` (never the unit).
pub fn flip_sign(p: &Presentation, grade: GradeVector, position: usize) -> Presentation {
    let sectors = p
        .sectors()
        .iter()
        .map(|(g, words)| {
            let mut words = words.clone();
            if *g == grade {
                words[position] = words[position].negate();
            }
            (*g, words)
        })
        .collect();
    p.with_sectors(sectors)
}

/// A random composition of sector permutation, in-sector shuffles (the unit
/// stays first) and sign flips of non-unit generators.
pub fn random_transformation<R: Rng + ?Sized>(p: &Presentation, rng: &mut R) -> Presentation {
    let perms = SectorPermutation::all(p.grading());
    let perm = perms.choose(rng).expect("at least the identity");
    let moved = permute_sectors(p, perm);
    let sectors = moved
        .sectors()
        .iter()
        .map(|(g, words)| {
            let mut words = words.clone();
            let start = usize::from(g.is_zero());
            words[start..].shuffle(rng);
            for w in words[start..].iter_mut() {
                if rng.gen_bool(0.5) {
                    *w = w.negate();
                }
            }
            (*g, words)
        })
        .collect();
    moved.with_sectors(sectors)
}
