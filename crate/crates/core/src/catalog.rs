//! Named representatives of the 3 + 7 + 13 classes.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grade::Grading;
use crate::superdivision::{Presentation, Series};

/// `D<grading>_<series><index>`, e.g. `D2_C4`.
///
/// The ungraded division algebras are numbered 1, 2, 3 for the real,
/// complex and quaternionic series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassId {
    pub grading: Grading,
    pub series: Series,
    pub index: u8,
}

impl ClassId {
    pub fn new(grading: Grading, series: Series, index: u8) -> Result<ClassId> {
        let valid = match grading {
            Grading::None => {
                index == match series {
                    Series::Real => 1,
                    Series::Complex => 2,
                    Series::Quaternionic => 3,
                }
            }
            Grading::Z2 => (1..=class_count(grading, series) as u8).contains(&index),
            Grading::Z2Z2 => (1..=class_count(grading, series) as u8).contains(&index),
        };
        if valid {
            Ok(ClassId { grading, series, index })
        } else {
            Err(Error::UnknownClass(format!("D{}_{}{}", grading.depth(), series.code(), index)))
        }
    }

    /// File name of the exported presentation.
    pub fn file_name(&self) -> String {
        format!("{self}.sdiv")
    }
}

/// Number of inequivalent classes per grading and series.
pub fn class_count(grading: Grading, series: Series) -> usize {
    match (grading, series) {
        (Grading::None, _) => 1,
        (Grading::Z2, Series::Complex) => 3,
        (Grading::Z2, _) => 2,
        (Grading::Z2Z2, Series::Complex) => 5,
        (Grading::Z2Z2, _) => 4,
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}_{}{}", self.grading.depth(), self.series.code(), self.index)
    }
}

impl FromStr for ClassId {
    type Err = Error;

    /// Accepts `D2_C4`, `d2_c4`, and `D0_H` for the ungraded entries.
    fn from_str(s: &str) -> Result<ClassId> {
        let bad = || Error::UnknownClass(s.to_string());
        let rest = s.strip_prefix(['D', 'd']).ok_or_else(bad)?;
        let (depth, rest) = rest.split_once('_').ok_or_else(bad)?;
        let grading = Grading::from_depth(depth.parse::<usize>().map_err(|_| bad())?).map_err(|_| bad())?;
        let mut chars = rest.chars();
        let series = chars.next().and_then(Series::from_code).ok_or_else(bad)?;
        let index_text = chars.as_str();
        let index = if index_text.is_empty() && grading == Grading::None {
            match series {
                Series::Real => 1,
                Series::Complex => 2,
                Series::Quaternionic => 3,
            }
        } else {
            index_text.parse::<u8>().map_err(|_| bad())?
        };
        ClassId::new(grading, series, index).map_err(|_| bad())
    }
}

impl Serialize for ClassId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ClassId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub class_id: ClassId,
    pub presentation: Presentation,
    pub notes: &'static str,
    /// Commutativity where it is part of the structural description; `None`
    /// when the entry makes no claim.
    pub commutative: Option<bool>,
}

type Row = (&'static str, Series, u8, &'static [(&'static str, &'static [&'static str])], &'static str, Option<bool>);

const UNGRADED: &[Row] = &[
    ("none", Series::Real, 1, &[("0", &["I"])], "real numbers", Some(true)),
    ("none", Series::Complex, 2, &[("0", &["I", "A"])], "complex numbers", Some(true)),
    ("none", Series::Quaternionic, 3, &[("0", &["II", "IA", "AY", "AX"])], "quaternions", Some(false)),
];

const Z2: &[Row] = &[
    ("z2", Series::Real, 1, &[("0", &["I"]), ("1", &["A"])], "Z2-graded complex numbers", Some(true)),
    ("z2", Series::Real, 2, &[("0", &["I"]), ("1", &["Y"])], "Z2-graded split-complex numbers", Some(true)),
    (
        "z2",
        Series::Complex,
        1,
        &[("0", &["II", "IA"]), ("1", &["AX", "AY"])],
        "Z2-graded quaternions, graded representation of Cl(0,3)",
        Some(false),
    ),
    (
        "z2",
        Series::Complex,
        2,
        &[("0", &["II", "IA"]), ("1", &["YX", "YY"])],
        "Z2-graded split-quaternions, 4x4 graded representation of Cl(2,1)",
        Some(false),
    ),
    ("z2", Series::Complex, 3, &[("0", &["II", "IA"]), ("1", &["AI", "AA"])], "Z2-graded algebra of commuting matrices", Some(true)),
    (
        "z2",
        Series::Quaternionic,
        1,
        &[("0", &["III", "IIA", "IAY", "IAX"]), ("1", &["AII", "AIA", "AAY", "AAX"])],
        "odd squares (-+++)",
        None,
    ),
    (
        "z2",
        Series::Quaternionic,
        2,
        &[("0", &["III", "IIA", "IAY", "IAX"]), ("1", &["YII", "YIA", "YAY", "YAX"])],
        "odd squares (+---)",
        None,
    ),
];

// Quaternionic Z2xZ2 indices follow the projection triples
// (1/1/1), (2/2/2), (1/1/2), (1/2/2). Every sector sits under the label its
// letter mask dictates.
const Z2Z2: &[Row] = &[
    ("z2z2", Series::Real, 1, &[("00", &["II"]), ("01", &["IA"]), ("10", &["AX"]), ("11", &["AY"])], "Z2xZ2 grading of the quaternions", Some(false)),
    ("z2z2", Series::Real, 2, &[("00", &["II"]), ("01", &["IA"]), ("10", &["YX"]), ("11", &["YY"])], "Z2xZ2 grading of the split-quaternions", Some(false)),
    ("z2z2", Series::Real, 3, &[("00", &["II"]), ("01", &["IA"]), ("10", &["AI"]), ("11", &["AA"])], "commutative", Some(true)),
    ("z2z2", Series::Real, 4, &[("00", &["II"]), ("01", &["IY"]), ("10", &["YI"]), ("11", &["YY"])], "commutative", Some(true)),
    (
        "z2z2",
        Series::Complex,
        1,
        &[("00", &["III", "IIA"]), ("01", &["IAX", "IAY"]), ("10", &["AIX", "AIY"]), ("11", &["AAI", "AAA"])],
        "projections (1/1/3)",
        None,
    ),
    (
        "z2z2",
        Series::Complex,
        2,
        &[("00", &["III", "IIA"]), ("01", &["IYX", "IYY"]), ("10", &["AIX", "AIY"]), ("11", &["AYI", "AYA"])],
        "projections (1/2/3)",
        None,
    ),
    (
        "z2z2",
        Series::Complex,
        3,
        &[("00", &["III", "IIA"]), ("01", &["IYX", "IYY"]), ("10", &["YIX", "YIY"]), ("11", &["YYI", "YYA"])],
        "projections (2/2/3)",
        None,
    ),
    (
        "z2z2",
        Series::Complex,
        4,
        &[("00", &["III", "IIA"]), ("01", &["XYI", "XYA"]), ("10", &["YII", "YIA"]), ("11", &["AYI", "AYA"])],
        "projections (3/3/3); distinct sectors anticommute",
        Some(false),
    ),
    (
        "z2z2",
        Series::Complex,
        5,
        &[("00", &["III", "IIA"]), ("01", &["IYI", "IYA"]), ("10", &["YII", "YIA"]), ("11", &["YYI", "YYA"])],
        "projections (3/3/3); distinct sectors commute",
        Some(true),
    ),
    (
        "z2z2",
        Series::Quaternionic,
        1,
        &[
            ("00", &["IIII", "IIIA", "IIAX", "IIAY"]),
            ("01", &["IAII", "IAIA", "IAAX", "IAAY"]),
            ("10", &["AXII", "AXIA", "AXAX", "AXAY"]),
            ("11", &["AYII", "AYIA", "AYAX", "AYAY"]),
        ],
        "projections (1/1/1)",
        None,
    ),
    (
        "z2z2",
        Series::Quaternionic,
        2,
        &[
            ("00", &["IIII", "IIIA", "IIAX", "IIAY"]),
            ("01", &["IYII", "IYIA", "IYAX", "IYAY"]),
            ("10", &["YIII", "YIIA", "YIAX", "YIAY"]),
            ("11", &["YYII", "YYIA", "YYAX", "YYAY"]),
        ],
        "projections (2/2/2)",
        None,
    ),
    (
        "z2z2",
        Series::Quaternionic,
        3,
        &[
            ("00", &["IIII", "IIIA", "IIAX", "IIAY"]),
            ("01", &["IAII", "IAIA", "IAAX", "IAAY"]),
            ("10", &["AIII", "AIIA", "AIAX", "AIAY"]),
            ("11", &["AAII", "AAIA", "AAAX", "AAAY"]),
        ],
        "projections (1/1/2)",
        None,
    ),
    (
        "z2z2",
        Series::Quaternionic,
        4,
        &[
            ("00", &["IIII", "IIIA", "IIAX", "IIAY"]),
            ("01", &["IYII", "IYIA", "IYAX", "IYAY"]),
            ("10", &["YXII", "YXIA", "YXAX", "YXAY"]),
            ("11", &["YAII", "YAIA", "YAAX", "YAAY"]),
        ],
        "projections (1/2/2)",
        None,
    ),
];

fn build() -> Vec<CatalogEntry> {
    UNGRADED
        .iter()
        .chain(Z2)
        .chain(Z2Z2)
        .map(|&(grading, series, index, sectors, notes, commutative)| {
            let grading: Grading = grading.parse().expect("static grading");
            CatalogEntry {
                class_id: ClassId::new(grading, series, index).expect("static class id"),
                presentation: Presentation::from_text(grading, series, sectors).expect("static presentation"),
                notes,
                commutative,
            }
        })
        .collect()
}

/// Every entry: 3 ungraded, 7 `Z2`, 13 `Z2×Z2`.
pub fn all_entries() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(build)
}

pub fn catalog(grading: Grading, series: Series) -> Vec<&'static CatalogEntry> {
    all_entries().iter().filter(|e| e.class_id.grading == grading && e.class_id.series == series).collect()
}

pub fn lookup(id: ClassId) -> Result<&'static CatalogEntry> {
    all_entries().iter().find(|e| e.class_id == id).ok_or_else(|| Error::UnknownClass(id.to_string()))
}

/// Write one `D<g>_<S><i>.sdiv` file per entry into `dir`.
pub fn export_catalog(dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    all_entries()
        .iter()
        .map(|e| {
            let path = dir.join(e.class_id.file_name());
            let body = format!("# {}: {}\n{}", e.class_id, e.notes, e.presentation);
            std::fs::write(&path, body)?;
            Ok(path)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let count = |g| all_entries().iter().filter(|e| e.class_id.grading == g).count();
        assert_eq!((count(Grading::None), count(Grading::Z2), count(Grading::Z2Z2)), (3, 7, 13));
        for g in [Grading::Z2, Grading::Z2Z2] {
            for s in Series::ALL {
                assert_eq!(catalog(g, s).len(), class_count(g, s));
            }
        }
    }

    #[test]
    fn lookups() {
        let c5 = lookup("D2_C5".parse().unwrap()).unwrap();
        let words: Vec<String> = c5.presentation.generators().iter().map(|(_, w)| w.to_string()).collect();
        assert_eq!(words, ["III", "IIA", "IYI", "IYA", "YII", "YIA", "YYI", "YYA"]);
        let r1 = lookup("D1_R1".parse().unwrap()).unwrap();
        assert_eq!(r1.presentation.to_string(), "grading: z2\nseries: real\nsector 0: I\nsector 1: A\n");
        let h = lookup("D0_H".parse().unwrap()).unwrap();
        assert_eq!(h.presentation.to_string(), "grading: none\nseries: quaternionic\nsector 0: II IA AY AX\n");
        let d2r1 = &catalog(Grading::Z2Z2, Series::Real)[0];
        assert_eq!(d2r1.presentation.to_string().lines().last(), Some("sector 11: AY"));
    }

    #[test]
    fn class_id_parsing() {
        assert_eq!("D2_C4".parse::<ClassId>().unwrap().to_string(), "D2_C4");
        assert_eq!("d1_h2".parse::<ClassId>().unwrap().to_string(), "D1_H2");
        assert_eq!("D0_C".parse::<ClassId>().unwrap().to_string(), "D0_C2");
        for bad in ["D2_C6", "D1_R3", "D0_R2", "D3_R1", "X2_C1", "D2_Q1", "D2C1", ""] {
            assert!(bad.parse::<ClassId>().is_err(), "{bad}");
        }
    }

    #[test]
    fn export_round_trip() {
        let dir = std::env::temp_dir().join(format!("superdiv-export-{}", std::process::id()));
        let files = export_catalog(&dir).unwrap();
        assert_eq!(files.len(), 23);
        for (path, entry) in files.iter().zip(all_entries()) {
            let text = std::fs::read_to_string(path).unwrap();
            assert_eq!(text.parse::<Presentation>().unwrap(), entry.presentation);
        }
        std::fs::remove_dir_all(dir).unwrap();
    }
}
