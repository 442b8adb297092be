//! Equivalence of multiplication tables under sign flips, in-sector
//! permutations and permutations of the nonzero sectors.
//!
//! The search fixes a sector permutation, then backtracks over generator
//! images. Every assignment is propagated through the tables: once `a` and
//! `b` have images, the image of `a·b` is forced. Candidates are filtered by
//! a profile (square sign plus per-sector commutation counts) that any
//! admissible image must share.

use serde::Serialize;

use crate::superdivision::{StructureConstants, TableEntry};
use crate::word::{Commutation, Sign};

use super::transform::SectorPermutation;

/// Witness that `P` maps onto `Q`: generator `a` of `P` goes to
/// `generator_map[a].0 · Q[generator_map[a].1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceCertificate {
    pub sector_permutation: SectorPermutation,
    pub generator_map: Vec<(Sign, usize)>,
}

#[derive(Serialize)]
struct CertificateRepr {
    sector_permutation: Vec<(String, String)>,
    generator_map: Vec<(i8, usize)>,
}

impl Serialize for EquivalenceCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CertificateRepr {
            sector_permutation: self.sector_permutation.pairs(),
            generator_map: self.generator_map.iter().map(|&(sg, i)| (sg.as_i8(), i)).collect(),
        }
        .serialize(s)
    }
}

impl EquivalenceCertificate {
    /// Transform `p`'s table by the certificate and compare it entry by entry
    /// with `q`'s.
    pub fn replay(&self, p: &StructureConstants, q: &StructureConstants) -> bool {
        let n = p.generator_count();
        if n != q.generator_count() || self.generator_map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &(_, b) in &self.generator_map {
            if b >= n || std::mem::replace(&mut hit[b], true) {
                return false;
            }
        }
        if self.generator_map[p.unit] != (Sign::Plus, q.unit) {
            return false;
        }
        for a in 0..n {
            let (_, fa) = self.generator_map[a];
            if q.grades[fa] != self.sector_permutation.apply(p.grades[a]) {
                return false;
            }
        }
        for a in 0..n {
            let (sa, fa) = self.generator_map[a];
            for b in 0..n {
                let (sb, fb) = self.generator_map[b];
                let TableEntry { sign: t, index: c } = p.table[a][b];
                let (sc, fc) = self.generator_map[c];
                // (sa·Qfa)(sb·Qfb) must equal t·sc·Qfc
                let expected = TableEntry { sign: t * sa * sb * sc, index: fc };
                if q.table[fa][fb] != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Certificate from `Q` back to `P`.
    pub fn inverse(&self) -> EquivalenceCertificate {
        let mut map = vec![(Sign::Plus, 0); self.generator_map.len()];
        for (a, &(s, b)) in self.generator_map.iter().enumerate() {
            map[b] = (s, a);
        }
        EquivalenceCertificate { sector_permutation: self.sector_permutation.inverse(), generator_map: map }
    }
}

/// Square sign and, per sector (in ascending grade order), how many
/// generators commute and anticommute with this one.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Profile {
    square: Option<Sign>,
    per_sector: Vec<(usize, usize)>,
}

fn profiles(sc: &StructureConstants) -> Vec<Profile> {
    let sectors = sc.sectors();
    (0..sc.generator_count())
        .map(|a| Profile {
            square: sc.square_sign(a),
            per_sector: sectors
                .iter()
                .map(|(_, members)| {
                    members.iter().fold((0, 0), |(c, ac), &b| match sc.commutation(a, b) {
                        Some(Commutation::Commute) => (c + 1, ac),
                        Some(Commutation::Anticommute) => (c, ac + 1),
                        None => (c, ac),
                    })
                })
                .collect(),
        })
        .collect()
}

#[derive(Clone)]
struct State {
    map: Vec<Option<(Sign, usize)>>,
    used: Vec<bool>,
    assigned: Vec<usize>,
}

struct Search<'a> {
    p: &'a StructureConstants,
    q: &'a StructureConstants,
    perm: &'a SectorPermutation,
    p_profiles: &'a [Profile],
    q_profiles: &'a [Profile],
    // sector position in p -> sector position in q
    sector_image: Vec<usize>,
    p_sector_pos: Vec<usize>,
}

impl Search<'_> {
    fn compatible(&self, a: usize, b: usize) -> bool {
        if self.q.grades[b] != self.perm.apply(self.p.grades[a]) {
            return false;
        }
        let (pa, qb) = (&self.p_profiles[a], &self.q_profiles[b]);
        pa.square == qb.square
            && pa.per_sector.iter().enumerate().all(|(k, &counts)| qb.per_sector[self.sector_image[k]] == counts)
    }

    /// Assign `a ↦ (s, b)` and everything it forces. `false` on conflict.
    fn assign(&self, state: &mut State, a: usize, s: Sign, b: usize) -> bool {
        let mut queue = vec![(a, s, b)];
        while let Some((a, s, b)) = queue.pop() {
            match state.map[a] {
                Some(existing) if existing == (s, b) => continue,
                Some(_) => return false,
                None => {}
            }
            if state.used[b] || !self.compatible(a, b) {
                return false;
            }
            if (a == self.p.unit) != (b == self.q.unit) || (a == self.p.unit && s != Sign::Plus) {
                return false;
            }
            state.map[a] = Some((s, b));
            state.used[b] = true;
            state.assigned.push(a);
            for idx in 0..state.assigned.len() {
                let x = state.assigned[idx];
                let (sx, fx) = state.map[x].expect("assigned");
                for (l, r, sl, sr, fl, fr) in [(a, x, s, sx, b, fx), (x, a, sx, s, fx, b)] {
                    let TableEntry { sign: t, index: c } = self.p.table[l][r];
                    let TableEntry { sign: u, index: k } = self.q.table[fl][fr];
                    let forced = (t * sl * sr * u, k);
                    match state.map[c] {
                        Some(existing) if existing != forced => return false,
                        Some(_) => {}
                        None => queue.push((c, forced.0, forced.1)),
                    }
                }
            }
        }
        true
    }

    fn solve(&self, state: State) -> Option<State> {
        let Some(a) = (0..self.p.generator_count()).find(|&a| state.map[a].is_none()) else {
            return Some(state);
        };
        let target_sector = self.sector_image[self.p_sector_pos[a]];
        let (_, candidates) = &self.q.sectors()[target_sector];
        for &b in candidates {
            if state.used[b] || !self.compatible(a, b) {
                continue;
            }
            for s in [Sign::Plus, Sign::Minus] {
                let mut next = state.clone();
                if self.assign(&mut next, a, s, b) {
                    if let Some(done) = self.solve(next) {
                        return Some(done);
                    }
                }
            }
        }
        None
    }
}

/// Search for a certificate mapping `p` onto `q`.
pub fn equivalent_constants(p: &StructureConstants, q: &StructureConstants) -> Option<EquivalenceCertificate> {
    if p.grading != q.grading || p.series != q.series || p.generator_count() != q.generator_count() {
        return None;
    }
    let p_sectors = p.sectors();
    let q_sectors = q.sectors();
    if p_sectors.len() != q_sectors.len() {
        return None;
    }
    let mut p_sector_pos = vec![0; p.generator_count()];
    for (k, (_, members)) in p_sectors.iter().enumerate() {
        for &a in members {
            p_sector_pos[a] = k;
        }
    }
    let p_profiles = profiles(p);
    let q_profiles = profiles(q);
    for perm in SectorPermutation::all(p.grading) {
        let Some(sector_image) = p_sectors
            .iter()
            .map(|(g, members)| {
                let target = perm.apply(*g);
                q_sectors.iter().position(|(h, m)| *h == target && m.len() == members.len())
            })
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        let search = Search {
            p,
            q,
            perm: &perm,
            p_profiles: &p_profiles,
            q_profiles: &q_profiles,
            sector_image,
            p_sector_pos: p_sector_pos.clone(),
        };
        let n = p.generator_count();
        let mut state = State { map: vec![None; n], used: vec![false; n], assigned: Vec::new() };
        if !search.assign(&mut state, p.unit, Sign::Plus, q.unit) {
            continue;
        }
        if let Some(done) = search.solve(state) {
            let cert = EquivalenceCertificate {
                sector_permutation: perm.clone(),
                generator_map: done.map.into_iter().map(|m| m.expect("complete")).collect(),
            };
            debug_assert!(cert.replay(p, q));
            return Some(cert);
        }
    }
    None
}
