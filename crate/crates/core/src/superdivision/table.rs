use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grade::{GradeVector, Grading};
use crate::word::{Sign, SignedWord};

use super::presentation::{Presentation, Series};
use super::structure::{StructureConstants, TableEntry};
use super::verify::verify_with_constants;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Json,
    Csv,
}

impl FromStr for TableFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<TableFormat> {
        match s {
            "text" => Ok(TableFormat::Text),
            "json" => Ok(TableFormat::Json),
            "csv" => Ok(TableFormat::Csv),
            other => Err(Error::Parse(format!("unknown table format `{other}`"))),
        }
    }
}

/// JSON form of a multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub grading: Grading,
    pub series: Series,
    pub labels: Vec<String>,
    pub generators: Vec<SignedWord>,
    pub grades: Vec<String>,
    pub table: Vec<Vec<TableEntry>>,
}

impl TableDocument {
    /// Rebuild the structure constants; the unit is the first generator.
    pub fn to_structure_constants(&self) -> Result<StructureConstants> {
        let grades = self
            .grades
            .iter()
            .map(|l| GradeVector::parse_label(l, self.grading))
            .collect::<Result<Vec<_>>>()?;
        Ok(StructureConstants { grading: self.grading, series: self.series, grades, table: self.table.clone(), unit: 0 })
    }
}

fn signed_label(labels: &[String], e: TableEntry) -> String {
    let s = if e.sign == Sign::Minus { "-" } else { "" };
    format!("{s}{}", labels[e.index])
}

/// Serialize the verified multiplication table. Output is a pure function of
/// the presentation.
pub fn emit_table(p: &Presentation, format: TableFormat) -> Result<String> {
    let (_, sc) = verify_with_constants(p)?;
    let labels = p.labels();
    let generators: Vec<SignedWord> = p.generators().into_iter().map(|(_, w)| w).collect();
    let n = generators.len();
    let mut out = String::new();
    match format {
        TableFormat::Text => {
            writeln!(out, "grading: {}", p.grading()).unwrap();
            writeln!(out, "series: {}", p.series()).unwrap();
            for i in 0..n {
                writeln!(out, "{} = {} [{}]", labels[i], generators[i], sc.grades[i]).unwrap();
            }
            writeln!(out).unwrap();
            for a in 0..n {
                for b in 0..n {
                    writeln!(out, "{}*{} = {}", labels[a], labels[b], signed_label(&labels, sc.table[a][b])).unwrap();
                }
            }
        }
        TableFormat::Json => {
            let doc = TableDocument {
                grading: p.grading(),
                series: p.series(),
                labels: labels.clone(),
                generators,
                grades: sc.grades.iter().map(|g| g.label()).collect(),
                table: sc.table.clone(),
            };
            out = serde_json::to_string_pretty(&doc).expect("table serializes");
            out.push('\n');
        }
        TableFormat::Csv => {
            writeln!(out, "*,{}", labels.join(",")).unwrap();
            for a in 0..n {
                let cells: Vec<String> = (0..n).map(|b| signed_label(&labels, sc.table[a][b])).collect();
                writeln!(out, "{},{}", labels[a], cells.join(",")).unwrap();
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superdivision::structure::structure_constants;

    fn d2r1() -> Presentation {
        Presentation::from_text(
            Grading::Z2Z2,
            Series::Real,
            &[("00", &["II"]), ("01", &["IA"]), ("10", &["AX"]), ("11", &["AY"])],
        )
        .unwrap()
    }

    #[test]
    fn text_table() {
        let t = emit_table(&d2r1(), TableFormat::Text).unwrap();
        assert!(t.contains("f0 = IA [01]\n"));
        assert!(t.contains("f0*g0 = -h0\n"));
        assert!(t.contains("g0*h0 = -f0\n"));
        assert!(t.contains("h0*h0 = -e0\n"));
        assert_eq!(t, emit_table(&d2r1(), TableFormat::Text).unwrap());
    }

    #[test]
    fn trivial_table() {
        let p = Presentation::from_text(Grading::None, Series::Real, &[("0", &["I"])]).unwrap();
        assert_eq!(emit_table(&p, TableFormat::Csv).unwrap(), "*,e0\ne0,e0\n");
        let json = emit_table(&p, TableFormat::Json).unwrap();
        let doc: TableDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(doc.table, vec![vec![TableEntry { sign: Sign::Plus, index: 0 }]]);
    }

    #[test]
    fn json_round_trip() {
        let json = emit_table(&d2r1(), TableFormat::Json).unwrap();
        assert!(json.contains("\"sign\": -1"));
        let doc: TableDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(doc.to_structure_constants().unwrap(), structure_constants(&d2r1()).unwrap());
    }

    #[test]
    fn unverified_presentation_rejected() {
        let p = Presentation::from_text(Grading::Z2, Series::Real, &[("0", &["I"]), ("1", &["X"])]).unwrap();
        assert!(emit_table(&p, TableFormat::Text).is_err());
    }
}
