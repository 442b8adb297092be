use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::catalog::{class_count, ClassId};
use crate::error::{Error, Result};
use crate::grade::Grading;
use crate::superdivision::Series;

use super::classify::classify;
use super::enumerate::enumerate;
use super::identify::ordered_projections;

/// Which `S11` classes (and which `Z2×Z2` classes behind them) arise from a
/// given pair of `S01`, `S10` classes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FusionCell {
    /// `S11` class -> `Z2×Z2` classes realizing it.
    pub outputs: BTreeMap<ClassId, BTreeSet<ClassId>>,
}

impl FusionCell {
    pub fn output_ids(&self) -> Vec<ClassId> {
        self.outputs.keys().copied().collect()
    }

    /// Some output is realized by two or more inequivalent `Z2×Z2` classes
    /// with identical projections.
    pub fn multiclass(&self) -> bool {
        self.outputs.values().any(|realized| realized.len() > 1)
    }

    /// Several `S11` outputs for the same input pair.
    pub fn split(&self) -> bool {
        self.outputs.len() > 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTable {
    pub series: Series,
    /// Indexed by the `Z2` class indices of `S01` and `S10`, from 1.
    pub cells: BTreeMap<(u8, u8), FusionCell>,
}

impl FusionTable {
    pub fn size(&self) -> usize {
        class_count(Grading::Z2, self.series)
    }

    pub fn cell(&self, a: u8, b: u8) -> FusionCell {
        self.cells.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size() as u8;
        (1..=n).all(|a| (1..=n).all(|b| self.cell(a, b) == self.cell(b, a)))
    }

    /// `size × size` array of `{outputs, multiclass, realized_by}`.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Cell {
            outputs: Vec<ClassId>,
            multiclass: bool,
            realized_by: Vec<ClassId>,
        }
        let n = self.size() as u8;
        let rows: Vec<Vec<Cell>> = (1..=n)
            .map(|a| {
                (1..=n)
                    .map(|b| {
                        let c = self.cell(a, b);
                        Cell {
                            outputs: c.output_ids(),
                            multiclass: c.multiclass(),
                            realized_by: c.outputs.values().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect(),
                        }
                    })
                    .collect()
            })
            .collect();
        serde_json::to_value(rows).expect("fusion table serializes")
    }
}

/// Aggregate `(class S01, class S10) -> class S11` over every enumerated
/// `Z2×Z2` presentation of the series.
pub fn fusion_table(series: Series) -> Result<FusionTable> {
    let presentations = enumerate(Grading::Z2Z2, series);
    let classification = classify(&presentations)?;
    let mut class_of = vec![None; presentations.len()];
    for class in &classification.classes {
        for &m in &class.members {
            class_of[m] = class.class_id;
        }
    }
    let mut cells: BTreeMap<(u8, u8), FusionCell> = BTreeMap::new();
    for (i, p) in presentations.iter().enumerate() {
        let [s01, s10, s11] = ordered_projections(p)?;
        let id = class_of[i].ok_or_else(|| Error::UnknownClass(format!("enumerated presentation #{i}")))?;
        cells.entry((s01.index, s10.index)).or_default().outputs.entry(s11).or_default().insert(id);
    }
    Ok(FusionTable { series, cells })
}
