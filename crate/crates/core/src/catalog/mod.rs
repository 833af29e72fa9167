//! The worked examples: Euler's torus, the B2/C2 and G2 pairs, the tritone
//! tonnetzes, the jazz bauble and the diminished tetrahedron.

mod figures;
mod net;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::{Dim, SimplexId};
use crate::pitch::{classify, ChordQuality, Interval, PitchMultiset, PitchSet};
use crate::tonnetz::{find_transposition_symmetry, transpose_tonnetz, verify, Tonnetz, VerificationFailure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogKey {
    Euler,
    B2,
    B2Up2,
    B2Down2,
    C2,
    C2Up2,
    C2Down2,
    G2,
    G2Dual,
    Tritone1,
    Tritone2,
    Bauble,
    TetraDim,
}

impl CatalogKey {
    pub const ALL: [CatalogKey; 13] = [
        CatalogKey::Euler,
        CatalogKey::B2,
        CatalogKey::B2Up2,
        CatalogKey::B2Down2,
        CatalogKey::C2,
        CatalogKey::C2Up2,
        CatalogKey::C2Down2,
        CatalogKey::G2,
        CatalogKey::G2Dual,
        CatalogKey::Tritone1,
        CatalogKey::Tritone2,
        CatalogKey::Bauble,
        CatalogKey::TetraDim,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogKey::Euler => "euler",
            CatalogKey::B2 => "b2",
            CatalogKey::B2Up2 => "b2_up2",
            CatalogKey::B2Down2 => "b2_down2",
            CatalogKey::C2 => "c2",
            CatalogKey::C2Up2 => "c2_up2",
            CatalogKey::C2Down2 => "c2_down2",
            CatalogKey::G2 => "g2",
            CatalogKey::G2Dual => "g2_dual",
            CatalogKey::Tritone1 => "tritone1",
            CatalogKey::Tritone2 => "tritone2",
            CatalogKey::Bauble => "bauble",
            CatalogKey::TetraDim => "tetra_dim",
        }
    }
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogKey {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CatalogKey::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| CatalogError::UnknownKey(s.to_string()))
    }
}

/// Drawing positions of each face's three net points; edge slot `k` runs
/// from point `k` to point `k + 1`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Layout {
    pub faces: Vec<[[f64; 2]; 3]>,
}

/// Two faces glued along a designated diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quad {
    pub faces: [usize; 2],
    pub diagonal: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedFacts {
    pub f_vector: (usize, usize, usize),
    /// Sorted; `None` when no claim is made about face chords.
    pub face_chords: Option<Vec<ChordQuality>>,
    pub vertex_chords: Vec<(String, PitchSet)>,
    pub symmetries: Vec<(Interval, bool)>,
}

impl ExpectedFacts {
    fn transpose(&self, k: Interval) -> Self {
        let mut face_chords = self.face_chords.clone();
        if let Some(c) = &mut face_chords {
            *c = c.iter().map(|q| q.transpose(k)).collect();
            c.sort();
        }
        ExpectedFacts {
            f_vector: self.f_vector,
            face_chords,
            vertex_chords: self.vertex_chords.iter().map(|(n, s)| (n.clone(), s.transpose(k))).collect(),
            symmetries: self.symmetries.clone(),
        }
    }

    /// Every fact that fails on `t`, described.
    pub fn violations(&self, t: &Tonnetz) -> Vec<String> {
        let mut out = Vec::new();
        let s = t.surface();
        if s.f_vector() != self.f_vector {
            out.push(format!("f-vector {:?}, expected {:?}", s.f_vector(), self.f_vector));
        }
        if let Some(want) = &self.face_chords {
            let mut got = t.face_chords();
            got.sort();
            if &got != want {
                out.push(format!("face chords {got:?}, expected {want:?}"));
            }
        }
        for (name, want) in &self.vertex_chords {
            match s.find(name) {
                Some(id) if id.dim == Dim::Vertex => {
                    let got = t.label(id).support();
                    if got != *want {
                        out.push(format!("vertex {name} has support {got}, expected {want}"));
                    }
                }
                _ => out.push(format!("no vertex named {name}")),
            }
        }
        for &(k, must) in &self.symmetries {
            if find_transposition_symmetry(t, k).is_some() != must {
                let verb = if must { "missing" } else { "unexpected" };
                out.push(format!("{verb} transposition symmetry {k}"));
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: CatalogKey,
    pub tonnetz: Tonnetz,
    pub provenance: &'static str,
    pub expected: ExpectedFacts,
    pub layout: Layout,
    pub quads: Vec<Quad>,
}

impl CatalogEntry {
    pub fn vertex(&self, name: &str) -> Option<SimplexId> {
        self.tonnetz.surface().find(name).filter(|id| id.dim == Dim::Vertex)
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
    #[error("{key} does not verify:\n{failure}")]
    Unverified { key: CatalogKey, failure: VerificationFailure },
    #[error("{key}: {}", .facts.join("; "))]
    FactViolated { key: CatalogKey, facts: Vec<String> },
    #[error("{0} has no quadrilateral pairing")]
    NotBauble(CatalogKey),
}

pub(crate) struct Figure {
    pub tonnetz: Tonnetz,
    pub provenance: &'static str,
    pub expected: ExpectedFacts,
    pub layout: Layout,
    pub quads: Vec<Quad>,
}

fn transposed(base: Figure, k: i64, provenance: &'static str) -> Figure {
    let k = Interval::new(k);
    Figure {
        tonnetz: transpose_tonnetz(&base.tonnetz, k),
        provenance,
        expected: base.expected.transpose(k),
        layout: base.layout,
        quads: base.quads,
    }
}

/// Builds an example, then checks that it verifies and meets its expected facts.
pub fn build(key: CatalogKey) -> Result<CatalogEntry, CatalogError> {
    let fig = match key {
        CatalogKey::Euler => figures::euler(),
        CatalogKey::B2 => figures::b2(),
        CatalogKey::B2Up2 => transposed(figures::b2(), 2, "B2 torus transposed up a whole tone"),
        CatalogKey::B2Down2 => transposed(figures::b2(), -2, "B2 torus transposed down a whole tone"),
        CatalogKey::C2 => figures::c2(),
        CatalogKey::C2Up2 => transposed(figures::c2(), 2, "C2 torus transposed up a whole tone"),
        CatalogKey::C2Down2 => transposed(figures::c2(), -2, "C2 torus transposed down a whole tone"),
        CatalogKey::G2 => figures::g2(),
        CatalogKey::G2Dual => figures::g2_dual(),
        CatalogKey::Tritone1 => figures::tritone1(),
        CatalogKey::Tritone2 => figures::tritone2(),
        CatalogKey::Bauble => figures::bauble(),
        CatalogKey::TetraDim => figures::tetra_dim(),
    };
    if let Err(failure) = verify(&fig.tonnetz) {
        return Err(CatalogError::Unverified { key, failure });
    }
    let facts = fig.expected.violations(&fig.tonnetz);
    if !facts.is_empty() {
        return Err(CatalogError::FactViolated { key, facts });
    }
    Ok(CatalogEntry {
        key,
        tonnetz: fig.tonnetz,
        provenance: fig.provenance,
        expected: fig.expected,
        layout: fig.layout,
        quads: fig.quads,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quadrilateral {
    pub faces: [usize; 2],
    pub diagonal: usize,
    /// Notes of the five distinct edges.
    pub notes: PitchMultiset,
}

impl Quadrilateral {
    pub fn chord(&self) -> ChordQuality {
        classify(&self.notes)
    }
}

pub fn bauble_quadrilaterals(entry: &CatalogEntry) -> Result<Vec<Quadrilateral>, CatalogError> {
    if entry.key != CatalogKey::Bauble {
        return Err(CatalogError::NotBauble(entry.key));
    }
    Ok(quadrilaterals(&entry.tonnetz, &entry.quads))
}

pub fn quadrilaterals(t: &Tonnetz, quads: &[Quad]) -> Vec<Quadrilateral> {
    let s = t.surface();
    quads
        .iter()
        .map(|q| {
            let mut edges: Vec<usize> = q.faces.iter().flat_map(|&f| s.faces()[f].edges).collect();
            edges.sort();
            edges.dedup();
            let notes = edges
                .iter()
                .flat_map(|&e| t.label(SimplexId::edge(e)).support().iter().collect::<Vec<_>>())
                .collect();
            Quadrilateral { faces: q.faces, diagonal: q.diagonal, notes }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_round_trip() {
        for k in CatalogKey::ALL {
            assert_eq!(k.as_str().parse::<CatalogKey>().unwrap(), k);
        }
        assert!("b3".parse::<CatalogKey>().is_err());
    }

    #[test]
    fn every_entry_builds() {
        for k in CatalogKey::ALL {
            let e = build(k).unwrap_or_else(|err| panic!("{err}"));
            assert_eq!(e.layout.faces.len(), e.tonnetz.surface().face_count());
        }
    }

    #[test]
    fn wrong_facts_are_reported() {
        let mut fig = figures::b2();
        fig.expected.f_vector = (4, 12, 9);
        fig.expected.symmetries.push((Interval::new(5), true));
        let v = fig.expected.violations(&fig.tonnetz);
        assert_eq!(v.len(), 2);
        assert!(v[0].contains("f-vector"));
    }

    #[test]
    fn quadrilaterals_need_the_bauble() {
        let e = build(CatalogKey::B2).unwrap();
        assert!(matches!(bauble_quadrilaterals(&e), Err(CatalogError::NotBauble(CatalogKey::B2))));
    }
}
