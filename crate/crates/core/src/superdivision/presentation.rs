use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grade::{GradeVector, Grading};
use crate::matrix::{linear_combination, DenseSignMatrix};
use crate::word::{Letter, SignedWord};

/// Which division algebra every sector is isomorphic to as a vector space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    Real,
    Complex,
    Quaternionic,
}

impl Series {
    pub const ALL: [Series; 3] = [Series::Real, Series::Complex, Series::Quaternionic];

    /// Real dimension of each sector: 1, 2 or 4.
    pub fn sector_dimension(self) -> usize {
        match self {
            Series::Real => 1,
            Series::Complex => 2,
            Series::Quaternionic => 4,
        }
    }

    /// Letters needed past the grading slots in a minimal presentation.
    pub fn extra_letters(self) -> usize {
        match self {
            Series::Real => 0,
            Series::Complex => 1,
            Series::Quaternionic => 2,
        }
    }

    pub fn code(self) -> char {
        match self {
            Series::Real => 'R',
            Series::Complex => 'C',
            Series::Quaternionic => 'H',
        }
    }

    pub fn from_code(c: char) -> Option<Series> {
        match c.to_ascii_uppercase() {
            'R' => Some(Series::Real),
            'C' => Some(Series::Complex),
            'H' => Some(Series::Quaternionic),
            _ => None,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Series::Real => "real",
            Series::Complex => "complex",
            Series::Quaternionic => "quaternionic",
        }
    }

    /// Letter tails spanning the canonical zero sector: nothing for the
    /// reals, `{I, A}` for the complex and `{II, IA, AX, AY}` for the
    /// quaternionic series.
    pub fn division_tails(self) -> Vec<Vec<Letter>> {
        use Letter::*;
        match self {
            Series::Real => vec![vec![]],
            Series::Complex => vec![vec![I], vec![A]],
            Series::Quaternionic => vec![vec![I, I], vec![I, A], vec![A, X], vec![A, Y]],
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Series> {
        match s {
            "real" | "R" => Ok(Series::Real),
            "complex" | "C" => Ok(Series::Complex),
            "quaternionic" | "H" => Ok(Series::Quaternionic),
            other => Err(Error::Parse(format!("unknown series `{other}`"))),
        }
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.keyword())
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Basis-name prefix of a sector: `e` for the zero sector, then `f`, `g`, `h`.
pub fn label_prefix(grade: GradeVector) -> char {
    match (grade.grading(), grade.bits()) {
        (_, 0) => 'e',
        (Grading::Z2, 1) | (Grading::Z2Z2, 1) => 'f',
        (Grading::Z2Z2, 2) => 'g',
        _ => 'h',
    }
}

/// A graded algebra given by one list of words per sector.
///
/// Sectors are kept sorted by grade, so generator `k` of the flattened list
/// is stable: zero sector first, then `01`, `10`, `11`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    grading: Grading,
    series: Series,
    sectors: Vec<(GradeVector, Vec<SignedWord>)>,
}

impl Presentation {
    /// No axioms are checked here; see [`crate::superdivision::verify_superdivision`].
    pub fn new(grading: Grading, series: Series, mut sectors: Vec<(GradeVector, Vec<SignedWord>)>) -> Self {
        sectors.sort_by_key(|(g, _)| *g);
        Presentation { grading, series, sectors }
    }

    /// Build from `(label, words)` pairs, e.g. `("01", &["IA"])`.
    pub fn from_text(grading: Grading, series: Series, sectors: &[(&str, &[&str])]) -> Result<Self> {
        let sectors = sectors
            .iter()
            .map(|(label, words)| {
                let grade = GradeVector::parse_label(label, grading)?;
                let words = words.iter().map(|w| w.parse()).collect::<Result<Vec<_>>>()?;
                Ok((grade, words))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(grading, series, sectors))
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn sectors(&self) -> &[(GradeVector, Vec<SignedWord>)] {
        &self.sectors
    }

    pub fn sector(&self, grade: GradeVector) -> Option<&[SignedWord]> {
        self.sectors.iter().find(|(g, _)| *g == grade).map(|(_, w)| w.as_slice())
    }

    /// Flattened `(grade, word)` list in generator order.
    pub fn generators(&self) -> Vec<(GradeVector, SignedWord)> {
        self.sectors
            .iter()
            .flat_map(|(g, words)| words.iter().map(move |w| (*g, w.clone())))
            .collect()
    }

    pub fn generator_count(&self) -> usize {
        self.sectors.iter().map(|(_, w)| w.len()).sum()
    }

    /// Basis names `e0, e1, f0, ...` in generator order.
    pub fn labels(&self) -> Vec<String> {
        self.sectors
            .iter()
            .flat_map(|(g, words)| (0..words.len()).map(move |j| format!("{}{}", label_prefix(*g), j)))
            .collect()
    }

    pub fn word_length(&self) -> Option<usize> {
        self.sectors.iter().flat_map(|(_, w)| w.first()).map(|w| w.len()).next()
    }

    /// Same presentation with every word replaced by `f(word)`; grades are
    /// taken from `regrade`.
    pub fn map_words(
        &self,
        mut f: impl FnMut(&SignedWord) -> SignedWord,
        mut regrade: impl FnMut(GradeVector) -> GradeVector,
    ) -> Presentation {
        let sectors = self
            .sectors
            .iter()
            .map(|(g, words)| (regrade(*g), words.iter().map(&mut f).collect()))
            .collect();
        Presentation::new(self.grading, self.series, sectors)
    }

    pub fn with_sectors(&self, sectors: Vec<(GradeVector, Vec<SignedWord>)>) -> Presentation {
        Presentation::new(self.grading, self.series, sectors)
    }

    /// Unordered set of unsigned words, used for de-duplication.
    pub fn unsigned_word_set(&self) -> std::collections::BTreeSet<SignedWord> {
        self.sectors.iter().flat_map(|(_, w)| w.iter().map(|x| x.unsigned())).collect()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("presentation serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct PresentationRepr {
    grading: Grading,
    series: Series,
    sectors: BTreeMap<String, Vec<SignedWord>>,
}

impl Serialize for Presentation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PresentationRepr {
            grading: self.grading,
            series: self.series,
            sectors: self.sectors.iter().map(|(g, w)| (g.label(), w.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PresentationRepr::deserialize(d)?;
        let sectors = repr
            .sectors
            .into_iter()
            .map(|(label, words)| Ok((GradeVector::parse_label(&label, repr.grading)?, words)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Presentation::new(repr.grading, repr.series, sectors))
    }
}

/// Text file form:
///
/// ```text
/// grading: z2z2
/// series: real
/// sector 00: II
/// sector 01: IA
/// ```
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "grading: {}", self.grading)?;
        writeln!(f, "series: {}", self.series)?;
        for (g, words) in &self.sectors {
            let words: Vec<String> = words.iter().map(|w| w.to_string()).collect();
            writeln!(f, "sector {}: {}", g.label(), words.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Presentation {
    type Err = Error;

    /// `#` starts a comment; blank lines are ignored.
    fn from_str(text: &str) -> Result<Presentation> {
        let mut grading = None;
        let mut series = None;
        let mut raw_sectors: Vec<(usize, String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("line {}: {msg}: `{raw}`", lineno + 1));
            let (key, value) = line.split_once(':').ok_or_else(|| err("expected `key: value`"))?;
            let (key, value) = (key.trim(), value.trim());
            if key == "grading" {
                if grading.replace(value.parse::<Grading>().map_err(|_| err("bad grading"))?).is_some() {
                    return Err(err("duplicate grading header"));
                }
            } else if key == "series" {
                if series.replace(value.parse::<Series>().map_err(|_| err("bad series"))?).is_some() {
                    return Err(err("duplicate series header"));
                }
            } else if let Some(label) = key.strip_prefix("sector") {
                let label = label.trim();
                if label.is_empty() {
                    return Err(err("missing sector label"));
                }
                raw_sectors.push((lineno + 1, label.to_string(), value.to_string()));
            } else {
                return Err(err("unknown key"));
            }
        }
        let grading = grading.ok_or_else(|| Error::Parse("missing `grading:` header".into()))?;
        let series = series.ok_or_else(|| Error::Parse("missing `series:` header".into()))?;
        let mut sectors: Vec<(GradeVector, Vec<SignedWord>)> = Vec::new();
        for (lineno, label, words) in raw_sectors {
            let grade = GradeVector::parse_label(&label, grading)
                .map_err(|e| Error::Parse(format!("line {lineno}: {e}")))?;
            if sectors.iter().any(|(g, _)| *g == grade) {
                return Err(Error::Parse(format!("line {lineno}: sector {label} declared twice")));
            }
            let words = words
                .split_whitespace()
                .map(|w| w.parse::<SignedWord>().map_err(|e| Error::Parse(format!("line {lineno}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            sectors.push((grade, words));
        }
        Ok(Presentation::new(grading, series, sectors))
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    text.parse()
}

pub fn format_presentation(p: &Presentation) -> String {
    p.to_string()
}

/// `Σ_J λ^J · (J-th word of the sector)` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousElement {
    pub grade: GradeVector,
    pub coefficients: Vec<i64>,
}

impl HomogeneousElement {
    pub fn new(grade: GradeVector, coefficients: Vec<i64>) -> Self {
        HomogeneousElement { grade, coefficients }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }

    pub fn to_matrix(&self, p: &Presentation) -> Result<DenseSignMatrix> {
        let words = p
            .sector(self.grade)
            .ok_or_else(|| Error::Parse(format!("no sector {} in presentation", self.grade)))?;
        if words.len() != self.coefficients.len() {
            return Err(Error::Parse(format!(
                "sector {} has {} words but {} coefficients were given",
                self.grade,
                words.len(),
                self.coefficients.len()
            )));
        }
        Ok(linear_combination(words, &self.coefficients))
    }

    pub fn is_invertible(&self, p: &Presentation) -> Result<bool> {
        Ok(self.to_matrix(p)?.is_nonsingular())
    }
}
