use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The `p` of a `Z2^p` grading; only `p ≤ 2` is supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grading {
    None,
    Z2,
    Z2Z2,
}

impl Grading {
    pub fn depth(self) -> usize {
        match self {
            Grading::None => 0,
            Grading::Z2 => 1,
            Grading::Z2Z2 => 2,
        }
    }

    pub fn from_depth(depth: usize) -> Result<Grading> {
        match depth {
            0 => Ok(Grading::None),
            1 => Ok(Grading::Z2),
            2 => Ok(Grading::Z2Z2),
            d => Err(Error::UnsupportedGrading(d)),
        }
    }

    /// All grades of this grading, zero first.
    pub fn grades(self) -> Vec<GradeVector> {
        let depth = self.depth() as u8;
        (0..1u8 << depth).map(|bits| GradeVector { bits, depth }).collect()
    }

    pub fn zero(self) -> GradeVector {
        GradeVector { bits: 0, depth: self.depth() as u8 }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Grading::None => "none",
            Grading::Z2 => "z2",
            Grading::Z2Z2 => "z2z2",
        }
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for Grading {
    type Err = Error;
    fn from_str(s: &str) -> Result<Grading> {
        match s {
            "none" | "0" => Ok(Grading::None),
            "z2" | "1" => Ok(Grading::Z2),
            "z2z2" | "2" => Ok(Grading::Z2Z2),
            other => Err(Error::Parse(format!("unknown grading `{other}`"))),
        }
    }
}

impl Serialize for Grading {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.keyword())
    }
}

impl<'de> Deserialize<'de> for Grading {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A grade in `Z2^depth`. The first letter of a word is the most significant
/// bit, so `01` means "even in the first slot, odd in the second".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradeVector {
    bits: u8,
    depth: u8,
}

impl GradeVector {
    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> GradeVector {
        let mut value = 0u8;
        let mut depth = 0u8;
        for b in bits {
            value = (value << 1) | b as u8;
            depth += 1;
        }
        GradeVector { bits: value, depth }
    }

    pub fn new(bits: u8, grading: Grading) -> GradeVector {
        let depth = grading.depth() as u8;
        assert!(bits < 1 << depth, "grade bits out of range");
        GradeVector { bits, depth }
    }

    pub fn bits(self) -> u8 {
        self.bits
    }

    pub fn grading(self) -> Grading {
        Grading::from_depth(self.depth as usize).expect("depth ≤ 2")
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    /// Bit `k`, counted from the first letter.
    pub fn bit(self, k: usize) -> bool {
        (self.bits >> (self.depth as usize - 1 - k)) & 1 == 1
    }

    /// Sector label: `0`/`1` or `00`..`11`; the single trivial grade prints
    /// as `0`.
    pub fn label(self) -> String {
        if self.depth == 0 {
            return "0".to_string();
        }
        (0..self.depth as usize).map(|k| if self.bit(k) { '1' } else { '0' }).collect()
    }

    pub fn parse_label(text: &str, grading: Grading) -> Result<GradeVector> {
        let bad = || Error::Parse(format!("sector label `{text}` is not valid for grading {grading}"));
        if grading == Grading::None {
            return if text == "0" { Ok(grading.zero()) } else { Err(bad()) };
        }
        if text.len() != grading.depth() {
            return Err(bad());
        }
        let bits = text
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradeVector::from_bits(bits))
    }
}

impl Add for GradeVector {
    type Output = GradeVector;
    fn add(self, rhs: GradeVector) -> GradeVector {
        assert_eq!(self.depth, rhs.depth, "adding grades of different gradings");
        GradeVector { bits: self.bits ^ rhs.bits, depth: self.depth }
    }
}

impl fmt::Display for GradeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for GradeVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_group_table() {
        // rows/cols 00, α=01, β=10, γ=11
        let g = Grading::Z2Z2.grades();
        let expected = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
        for (i, row) in expected.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                assert_eq!(g[i] + g[j], g[k]);
            }
        }
    }

    #[test]
    fn table_invariant_under_nonzero_permutations() {
        let g = Grading::Z2Z2.grades();
        let perms = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
        for p in perms {
            let map = |x: GradeVector| if x.is_zero() { x } else { g[p[x.bits() as usize - 1]] };
            for &a in &g {
                for &b in &g {
                    assert_eq!(map(a + b), map(a) + map(b));
                }
            }
        }
    }

    #[test]
    fn labels_round_trip() {
        for grading in [Grading::None, Grading::Z2, Grading::Z2Z2] {
            for g in grading.grades() {
                assert_eq!(GradeVector::parse_label(&g.label(), grading).unwrap(), g);
            }
        }
        assert!(GradeVector::parse_label("2", Grading::Z2).is_err());
        assert!(GradeVector::parse_label("1", Grading::Z2Z2).is_err());
        assert_eq!(Grading::from_depth(3), Err(Error::UnsupportedGrading(3)));
    }

    #[test]
    fn z2_addition() {
        let g = Grading::Z2.grades();
        assert_eq!(g[1] + g[1], g[0]);
        assert_eq!(g[0] + g[1], g[1]);
    }
}
