//! Algebraic laws of signed words, checked against their matrices.

use proptest::prelude::*;
use superdiv::matrix::word_to_matrix;
use superdiv::word::{Commutation, Letter, Sign, SignedWord};
use superdiv::{GradeVector, Grading};

fn letter() -> impl Strategy<Value = Letter> {
    prop::sample::select(Letter::ALL.to_vec())
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

fn word(len: usize) -> impl Strategy<Value = SignedWord> {
    (sign(), prop::collection::vec(letter(), len)).prop_map(|(s, l)| SignedWord::new(s, l))
}

fn pair() -> impl Strategy<Value = (SignedWord, SignedWord)> {
    (1usize..=5).prop_flat_map(|n| (word(n), word(n)))
}

fn triple() -> impl Strategy<Value = (SignedWord, SignedWord, SignedWord)> {
    (1usize..=5).prop_flat_map(|n| (word(n), word(n), word(n)))
}

proptest! {
    #[test]
    fn product_matches_matrix_product((u, v) in pair()) {
        let w = u.mul(&v).unwrap();
        prop_assert_eq!(word_to_matrix(&w), &word_to_matrix(&u) * &word_to_matrix(&v));
    }

    #[test]
    fn product_is_associative((u, v, w) in triple()) {
        let left = u.mul(&v).unwrap().mul(&w).unwrap();
        let right = u.mul(&v.mul(&w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn square_is_signed_identity(w in (1usize..=6).prop_flat_map(word)) {
        let sq = w.mul(&w).unwrap();
        prop_assert!(sq.is_identity() || sq.negate().is_identity());
        let expected = if w.count_a() % 2 == 0 { Sign::Plus } else { Sign::Minus };
        prop_assert_eq!(sq.sign(), expected);
        prop_assert_eq!(w.square_sign(), expected);
    }

    #[test]
    fn inverse_is_two_sided(w in (1usize..=6).prop_flat_map(word)) {
        let inv = w.inverse();
        prop_assert!(w.mul(&inv).unwrap().is_identity());
        prop_assert!(inv.mul(&w).unwrap().is_identity());
    }

    #[test]
    fn words_commute_or_anticommute((u, v) in pair()) {
        let uv = u.mul(&v).unwrap();
        let vu = v.mul(&u).unwrap();
        prop_assert!(uv.same_letters(&vu));
        let kind = u.commutation(&v).unwrap();
        if uv == vu {
            prop_assert_eq!(kind, Commutation::Commute);
        } else {
            prop_assert_eq!(uv, vu.negate());
            prop_assert_eq!(kind, Commutation::Anticommute);
        }
        prop_assert_eq!(v.commutation(&u).unwrap(), kind);
    }

    #[test]
    fn grade_is_additive((u, v) in (2usize..=5).prop_flat_map(|n| (word(n), word(n)))) {
        for grading in [Grading::Z2, Grading::Z2Z2] {
            let gu = u.grade(grading).unwrap();
            let gv = v.grade(grading).unwrap();
            prop_assert_eq!(u.mul(&v).unwrap().grade(grading).unwrap(), gu + gv);
        }
    }

    #[test]
    fn predicates_agree_with_matrix(w in (1usize..=5).prop_flat_map(word)) {
        let m = word_to_matrix(&w);
        let preds = w.structural_predicates();
        prop_assert!(m.is_signed_permutation());
        prop_assert_eq!(preds.block_diagonal, m.is_block_diagonal());
        prop_assert_eq!(preds.symmetric, m.is_symmetric());
    }

    #[test]
    fn display_round_trips(w in (1usize..=6).prop_flat_map(word)) {
        let text = w.to_string();
        prop_assert_eq!(text.parse::<SignedWord>().unwrap(), w);
    }
}

#[test]
fn zero_grade_is_identity_of_addition() {
    for grading in [Grading::Z2, Grading::Z2Z2] {
        for g in grading.grades() {
            assert_eq!(g + grading.zero(), g);
            assert_eq!(g + g, grading.zero());
        }
    }
    assert_eq!(GradeVector::parse_label("11", Grading::Z2Z2).unwrap().bits(), 0b11);
}

#[test]
fn mismatched_lengths_are_rejected() {
    let u: SignedWord = "IA".parse().unwrap();
    let v: SignedWord = "A".parse().unwrap();
    assert!(u.mul(&v).is_err());
    assert!(u.commutation(&v).is_err());
}
