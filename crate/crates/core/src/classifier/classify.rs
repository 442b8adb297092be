use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::{lookup, ClassId};
use crate::error::Result;
use crate::superdivision::{verify_with_constants, Presentation, StructureConstants};

use super::equivalence::{equivalent_constants, EquivalenceCertificate};
use super::fingerprint::{fingerprint_of, Fingerprint};
use super::identify::identify_constants;

/// One equivalence class found among the input presentations.
#[derive(Debug, Clone)]
pub struct ClassRecord {
    /// `None` when no catalog entry matches.
    pub class_id: Option<ClassId>,
    /// The catalog presentation when identified, else the first member.
    pub representative: Presentation,
    /// Indices into the classified list, in input order.
    pub members: Vec<usize>,
    pub fingerprint: Fingerprint,
    /// Certificate from the catalog entry onto the first member.
    pub catalog_certificate: Option<EquivalenceCertificate>,
}

impl ClassRecord {
    pub fn member_count(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub classes: Vec<ClassRecord>,
    /// Certificates produced while grouping, all replayed successfully.
    pub certificates_checked: usize,
    /// Pairs of class leaders (input indices) sharing a fingerprint whose
    /// certificate search failed.
    pub split_witnesses: Vec<(usize, usize)>,
}

impl Classification {
    pub fn unknown(&self) -> impl Iterator<Item = &ClassRecord> {
        self.classes.iter().filter(|c| c.class_id.is_none())
    }

    pub fn class_ids(&self) -> Vec<ClassId> {
        self.classes.iter().filter_map(|c| c.class_id).collect()
    }

    /// Report rows: `class_id, representative, member_count, fingerprint,
    /// projections`.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Row<'a> {
            class_id: String,
            representative: &'a Presentation,
            member_count: usize,
            fingerprint: &'a Fingerprint,
            projections: &'a [ClassId],
        }
        let rows: Vec<Row> = self
            .classes
            .iter()
            .map(|c| Row {
                class_id: c.class_id.map_or_else(|| "unknown".to_string(), |id| id.to_string()),
                representative: &c.representative,
                member_count: c.member_count(),
                fingerprint: &c.fingerprint,
                projections: &c.fingerprint.projections,
            })
            .collect();
        serde_json::to_value(rows).expect("report serializes")
    }
}

struct Prepared {
    sc: StructureConstants,
    fingerprint: Fingerprint,
}

/// Bucket by fingerprint, split each bucket with certificate searches, then
/// name every class from the catalog. Classes come out sorted by id, unknown
/// classes last.
pub fn classify(presentations: &[Presentation]) -> Result<Classification> {
    let prepared = presentations
        .iter()
        .map(|p| {
            let (_, sc) = verify_with_constants(p)?;
            let fingerprint = fingerprint_of(p, &sc)?;
            Ok(Prepared { sc, fingerprint })
        })
        .collect::<Result<Vec<_>>>()?;

    // fingerprint -> list of (leader, members)
    let mut buckets: BTreeMap<&Fingerprint, Vec<(usize, Vec<usize>)>> = BTreeMap::new();
    let mut certificates_checked = 0;
    for (i, item) in prepared.iter().enumerate() {
        let classes = buckets.entry(&item.fingerprint).or_default();
        let mut placed = false;
        for (leader, members) in classes.iter_mut() {
            if let Some(cert) = equivalent_constants(&prepared[*leader].sc, &item.sc) {
                assert!(cert.replay(&prepared[*leader].sc, &item.sc), "certificate failed to replay");
                certificates_checked += 1;
                members.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((i, vec![i]));
        }
    }

    let mut split_witnesses = Vec::new();
    let mut classes = Vec::new();
    for (fp, bucket) in buckets {
        for (x, (a, _)) in bucket.iter().enumerate() {
            for (b, _) in &bucket[x + 1..] {
                split_witnesses.push((*a, *b));
            }
        }
        for (leader, members) in bucket {
            let (class_id, catalog_certificate, representative) = match identify_constants(&prepared[leader].sc) {
                Ok((id, cert)) => {
                    assert!(
                        cert.replay(&crate::superdivision::structure_constants(&lookup(id)?.presentation)?, &prepared[leader].sc),
                        "catalog certificate failed to replay"
                    );
                    certificates_checked += 1;
                    (Some(id), Some(cert), lookup(id)?.presentation.clone())
                }
                Err(crate::Error::UnknownClass(_)) => (None, None, presentations[leader].clone()),
                Err(e) => return Err(e),
            };
            classes.push(ClassRecord { class_id, representative, members, fingerprint: fp.clone(), catalog_certificate });
        }
    }
    classes.sort_by_key(|c| (c.class_id.is_none(), c.class_id, c.members[0]));
    Ok(Classification { classes, certificates_checked, split_witnesses })
}
