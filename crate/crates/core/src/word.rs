//! Signed words over the four-letter alphabet `I, X, Y, A`.
//!
//! A word `l1 l2 ... ln` stands for the Kronecker product
//! `M(l1) ⊗ M(l2) ⊗ ... ⊗ M(ln)` of the 2×2 real matrices
//!
//! ```text
//! I = [1 0; 0 1]   X = [1 0; 0 -1]   Y = [0 1; 1 0]   A = [0 1; -1 0]
//! ```
//!
//! with the leftmost letter as the outermost factor. Products are computed
//! letterwise, so every operation here is exact and allocation-light.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grade::{GradeVector, Grading};

/// One of the four invertible real 2×2 basis matrices.
///
/// The derived ordering `I < X < Y < A` is the lexicographic order used for
/// every deterministic listing in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    I,
    X,
    Y,
    A,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::I, Letter::X, Letter::Y, Letter::A];

    /// Row-major 2×2 matrix of the letter.
    pub fn matrix(self) -> [[i8; 2]; 2] {
        match self {
            Letter::I => [[1, 0], [0, 1]],
            Letter::X => [[1, 0], [0, -1]],
            Letter::Y => [[0, 1], [1, 0]],
            Letter::A => [[0, 1], [-1, 0]],
        }
    }

    /// `Y` and `A` are off-diagonal, `I` and `X` are diagonal.
    pub fn is_odd(self) -> bool {
        matches!(self, Letter::Y | Letter::A)
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::A => 'A',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'A' => Some(Letter::A),
            _ => None,
        }
    }
}

/// Product of two letters, `a` acting on the left of `b`.
pub fn letter_mul(a: Letter, b: Letter) -> (Sign, Letter) {
    use Letter::*;
    use Sign::*;
    match (a, b) {
        (I, l) | (l, I) => (Plus, l),
        (X, X) => (Plus, I),
        (X, Y) => (Plus, A),
        (X, A) => (Plus, Y),
        (Y, X) => (Minus, A),
        (Y, Y) => (Plus, I),
        (Y, A) => (Minus, X),
        (A, X) => (Minus, Y),
        (A, Y) => (Plus, X),
        (A, A) => (Minus, I),
    }
}

/// A sign in `{+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = i64::deserialize(d)?;
        Sign::from_i64(v).ok_or_else(|| serde::de::Error::custom(format!("sign must be ±1, got {v}")))
    }
}

/// Whether two words commute or anticommute. Words never do anything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Commutation {
    Commute,
    Anticommute,
}

/// Block and symmetry structure readable directly off the letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralPredicates {
    pub block_diagonal: bool,
    pub symmetric: bool,
}

/// A sign times a tensor product of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedWord {
    sign: Sign,
    letters: Vec<Letter>,
}

impl SignedWord {
    /// Panics on an empty letter sequence; use [`SignedWord::try_new`] for
    /// untrusted input.
    pub fn new(sign: Sign, letters: Vec<Letter>) -> SignedWord {
        Self::try_new(sign, letters).expect("a word has at least one letter")
    }

    pub fn try_new(sign: Sign, letters: Vec<Letter>) -> Result<SignedWord> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(SignedWord { sign, letters })
    }

    /// The positive all-`I` word `e0` of length `n`.
    pub fn identity(n: usize) -> SignedWord {
        SignedWord::new(Sign::Plus, vec![Letter::I; n])
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Matrix dimension `2^n`.
    pub fn dimension(&self) -> usize {
        1usize << self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.sign == Sign::Plus && self.letters.iter().all(|&l| l == Letter::I)
    }

    /// Same letters, sign +1.
    pub fn unsigned(&self) -> SignedWord {
        SignedWord { sign: Sign::Plus, letters: self.letters.clone() }
    }

    pub fn with_sign(&self, sign: Sign) -> SignedWord {
        SignedWord { sign, letters: self.letters.clone() }
    }

    pub fn negate(&self) -> SignedWord {
        self.with_sign(-self.sign)
    }

    /// Equal letters, ignoring the sign.
    pub fn same_letters(&self, other: &SignedWord) -> bool {
        self.letters == other.letters
    }

    pub fn count_a(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::A).count()
    }

    /// Letterwise product with sign accumulation.
    pub fn mul(&self, other: &SignedWord) -> Result<SignedWord> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        let mut sign = self.sign * other.sign;
        let letters = self
            .letters
            .iter()
            .zip(&other.letters)
            .map(|(&a, &b)| {
                let (s, l) = letter_mul(a, b);
                sign = sign * s;
                l
            })
            .collect();
        Ok(SignedWord { sign, letters })
    }

    /// The scalar `s` with `w·w = s·e0`: `(-1)^(number of A letters)`.
    pub fn square_sign(&self) -> Sign {
        if self.count_a().is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `w⁻¹ = square_sign(w)·w`.
    pub fn inverse(&self) -> SignedWord {
        self.with_sign(self.sign * self.square_sign())
    }

    /// Letters anticommute pairwise iff they are distinct and neither is `I`,
    /// so the whole words anticommute iff an odd number of slots do.
    pub fn commutation(&self, other: &SignedWord) -> Result<Commutation> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        let flips = self
            .letters
            .iter()
            .zip(&other.letters)
            .filter(|(&a, &b)| a != b && a != Letter::I && b != Letter::I)
            .count();
        Ok(if flips % 2 == 0 { Commutation::Commute } else { Commutation::Anticommute })
    }

    /// Grade read from the first one or two letters.
    pub fn grade(&self, grading: Grading) -> Result<GradeVector> {
        let depth = grading.depth();
        if self.len() < depth {
            return Err(Error::WordTooShort { word: self.to_string(), depth });
        }
        Ok(GradeVector::from_bits(self.letters[..depth].iter().map(|l| l.is_odd())))
    }

    pub fn structural_predicates(&self) -> StructuralPredicates {
        StructuralPredicates {
            block_diagonal: !self.letters[0].is_odd(),
            symmetric: self.count_a().is_multiple_of(2),
        }
    }

    /// Swap two tensor slots. This is conjugation by a permutation matrix, so
    /// it is an exact algebra automorphism on words.
    pub fn swap_slots(&self, i: usize, j: usize) -> SignedWord {
        let mut letters = self.letters.clone();
        letters.swap(i, j);
        SignedWord { sign: self.sign, letters }
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Minus {
            f.write_str("-")?;
        }
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignedWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<SignedWord> {
        let (sign, body) = match text.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest),
            None => (Sign::Plus, text),
        };
        let letters = body
            .chars()
            .map(|c| {
                Letter::from_char(c)
                    .ok_or_else(|| Error::InvalidLetter { text: text.to_string(), found: c })
            })
            .collect::<Result<Vec<_>>>()?;
        SignedWord::try_new(sign, letters)
    }
}

impl Serialize for SignedWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignedWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

pub fn parse_word(text: &str) -> Result<SignedWord> {
    text.parse()
}

pub fn format_word(w: &SignedWord) -> String {
    w.to_string()
}

/// Every unsigned word of length `n`, in lexicographic `I < X < Y < A` order.
pub fn all_words(n: usize) -> impl Iterator<Item = SignedWord> {
    (0..4usize.pow(n as u32)).map(move |mut code| {
        let mut letters = vec![Letter::I; n];
        for slot in (0..n).rev() {
            letters[slot] = Letter::ALL[code % 4];
            code /= 4;
        }
        SignedWord::new(Sign::Plus, letters)
    })
}
