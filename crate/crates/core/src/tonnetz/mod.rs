//! Labellings of surfaces by pitch-class multisets, the coherence check and
//! the standard constructions.

mod matching;

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::{find_automorphisms_with, ComplexAutomorphism, Dim, SimplexId, SimplicialSurface, ValidationReport};
use crate::pitch::{ChordQuality, Interval, PitchClass, PitchMultiset};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TonnetzError {
    #[error("expected {expected} {dim:?} labels, got {found}")]
    LabelCount { dim: Dim, expected: usize, found: usize },
    #[error("face `{face}` label has {order} notes, expected 3")]
    FaceLabelOrder { face: String, order: usize },
    #[error("surface is not a closed surface:\n{0}")]
    InvalidSurface(ValidationReport),
}

/// A surface together with a multiset label on every simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tonnetz {
    surface: SimplicialSurface,
    labels: [Vec<PitchMultiset>; 3],
}

impl Tonnetz {
    pub fn new(
        surface: SimplicialSurface,
        vertex_labels: Vec<PitchMultiset>,
        edge_labels: Vec<PitchMultiset>,
        face_labels: Vec<PitchMultiset>,
    ) -> Result<Self, TonnetzError> {
        let labels = [vertex_labels, edge_labels, face_labels];
        for (dim, l) in [Dim::Vertex, Dim::Edge, Dim::Face].into_iter().zip(&labels) {
            if l.len() != surface.count(dim) {
                return Err(TonnetzError::LabelCount { dim, expected: surface.count(dim), found: l.len() });
            }
        }
        Ok(Tonnetz { surface, labels })
    }

    pub fn surface(&self) -> &SimplicialSurface {
        &self.surface
    }

    pub fn label(&self, id: SimplexId) -> &PitchMultiset {
        &self.labels[id.dim.as_usize()][id.index]
    }

    pub fn labels(&self, dim: Dim) -> &[PitchMultiset] {
        &self.labels[dim.as_usize()]
    }

    pub fn set_label(&mut self, id: SimplexId, label: PitchMultiset) {
        self.labels[id.dim.as_usize()][id.index] = label;
    }

    pub fn face_chords(&self) -> Vec<ChordQuality> {
        self.labels(Dim::Face).iter().map(crate::pitch::classify).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Facets of an edge or face against its label.
    Downward,
    /// Cofaces of a vertex or edge against its label.
    Upward,
}

/// One side of a witness: which neighbour supplies each label element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assignment {
    pub simplex: SimplexId,
    pub direction: Direction,
    pub pairs: Vec<(SimplexId, PitchClass)>,
}

/// The bijections `∂_σ` and `Δ_ρ` found by `verify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherenceWitness {
    pub assignments: Vec<Assignment>,
}

impl CoherenceWitness {
    /// Independently re-checks every assignment against `t`.
    pub fn check(&self, t: &Tonnetz) -> bool {
        let s = t.surface();
        let expected = s.edge_count() * 2 + s.face_count() + s.vertex_count();
        self.assignments.len() == expected
            && self.assignments.iter().all(|a| {
                let mut slots = neighbours(s, a.simplex, a.direction);
                let mut used: Vec<SimplexId> = a.pairs.iter().map(|p| p.0).collect();
                slots.sort();
                used.sort();
                let notes: PitchMultiset = a.pairs.iter().map(|p| p.1).collect();
                slots == used
                    && notes == *t.label(a.simplex)
                    && a.pairs.iter().all(|&(n, p)| t.label(n).count(p) > 0)
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Obstruction {
    Cardinality { slots: usize, notes: usize },
    /// These neighbour slots can only draw on these label elements, and there are fewer elements.
    Hall { slots: Vec<SimplexId>, notes: Vec<PitchClass> },
}

impl Obstruction {
    pub fn reason(&self) -> &'static str {
        match self {
            Obstruction::Cardinality { .. } => "cardinality",
            Obstruction::Hall { .. } => "hall",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Infeasible {
    pub simplex: SimplexId,
    pub name: String,
    pub direction: Direction,
    pub obstruction: Obstruction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, thiserror::Error)]
pub struct VerificationFailure {
    pub invalid_surface: Option<ValidationReport>,
    pub infeasible: Vec<Infeasible>,
}

impl VerificationFailure {
    pub fn names(&self) -> Vec<&str> {
        self.infeasible.iter().map(|i| i.name.as_str()).collect()
    }
}

impl fmt::Display for VerificationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = &self.invalid_surface {
            write!(f, "{r}")?;
        }
        for i in &self.infeasible {
            let dir = match i.direction {
                Direction::Downward => "downward",
                Direction::Upward => "upward",
            };
            write!(f, "{} `{}` {dir}: ", dim_word(i.simplex.dim), i.name)?;
            match &i.obstruction {
                Obstruction::Cardinality { slots, notes } => {
                    writeln!(f, "cardinality: {slots} slots for {notes} notes")?
                }
                Obstruction::Hall { slots, notes } => {
                    let notes: PitchMultiset = notes.iter().copied().collect();
                    writeln!(f, "hall: {} slots can only use {notes}", slots.len())?
                }
            }
        }
        Ok(())
    }
}

fn dim_word(d: Dim) -> &'static str {
    match d {
        Dim::Vertex => "vertex",
        Dim::Edge => "edge",
        Dim::Face => "face",
    }
}

fn neighbours(s: &SimplicialSurface, id: SimplexId, dir: Direction) -> Vec<SimplexId> {
    match dir {
        Direction::Downward => s.facets(id),
        Direction::Upward => s.cofaces(id),
    }
}

/// All (simplex, direction) pairs that carry a coherence condition.
pub fn coherence_conditions(s: &SimplicialSurface) -> Vec<(SimplexId, Direction)> {
    s.simplices()
        .flat_map(|id| {
            let down = (id.dim != Dim::Vertex).then_some((id, Direction::Downward));
            let up = (id.dim != Dim::Face).then_some((id, Direction::Upward));
            down.into_iter().chain(up)
        })
        .collect()
}

fn match_simplex(t: &Tonnetz, id: SimplexId, dir: Direction) -> Result<Vec<(SimplexId, PitchClass)>, Obstruction> {
    let slots = neighbours(t.surface(), id, dir);
    let notes = t.label(id).elements();
    if slots.len() != notes.len() {
        return Err(Obstruction::Cardinality { slots: slots.len(), notes: notes.len() });
    }
    let mut order: Vec<usize> = (0..slots.len()).collect();
    order.sort_by_key(|&i| (slots[i].index, i));
    let adj: Vec<Vec<usize>> = order
        .iter()
        .map(|&i| {
            let support = t.label(slots[i]).support();
            (0..notes.len()).filter(|&j| support.contains(notes[j])).collect()
        })
        .collect();
    match matching::perfect_matching(notes.len(), &adj) {
        Ok(m) => Ok(order.iter().zip(m).map(|(&i, j)| (slots[i], notes[j])).collect()),
        Err(h) => Err(Obstruction::Hall {
            slots: h.left.iter().map(|&k| slots[order[k]]).collect(),
            notes: h.right.iter().map(|&j| notes[j]).collect(),
        }),
    }
}

/// Checks downward and upward coherence everywhere.
pub fn verify(t: &Tonnetz) -> Result<CoherenceWitness, VerificationFailure> {
    let report = t.surface().validate();
    let mut assignments = Vec::new();
    let mut infeasible = Vec::new();
    for (id, direction) in coherence_conditions(t.surface()) {
        match match_simplex(t, id, direction) {
            Ok(pairs) => assignments.push(Assignment { simplex: id, direction, pairs }),
            Err(obstruction) => infeasible.push(Infeasible {
                simplex: id,
                name: t.surface().name(id).to_string(),
                direction,
                obstruction,
            }),
        }
    }
    if infeasible.is_empty() && report.is_valid() {
        Ok(CoherenceWitness { assignments })
    } else {
        let invalid_surface = (!report.is_valid()).then_some(report);
        Err(VerificationFailure { invalid_surface, infeasible })
    }
}

/// Extends face labels of order 3 to a full tonnetz, making each arbitrary
/// bijection choice from a seeded generator.
pub fn extend_from_faces(s: &SimplicialSurface, face_labels: &[PitchMultiset], seed: u64) -> Result<Tonnetz, TonnetzError> {
    if face_labels.len() != s.face_count() {
        return Err(TonnetzError::LabelCount { dim: Dim::Face, expected: s.face_count(), found: face_labels.len() });
    }
    if let Some((i, l)) = face_labels.iter().enumerate().find(|(_, l)| l.order() != 3) {
        return Err(TonnetzError::FaceLabelOrder { face: s.faces()[i].name.clone(), order: l.order() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edge_labels = vec![PitchMultiset::new(); s.edge_count()];
    for (face, label) in s.faces().iter().zip(face_labels) {
        let mut notes = label.elements();
        notes.shuffle(&mut rng);
        for (&e, p) in face.edges.iter().zip(notes) {
            edge_labels[e].insert(p);
        }
    }
    let mut vertex_labels = vec![PitchMultiset::new(); s.vertex_count()];
    for (edge, label) in s.edges().iter().zip(&edge_labels) {
        let mut notes = label.elements();
        notes.shuffle(&mut rng);
        for (&v, p) in edge.verts.iter().zip(notes) {
            vertex_labels[v].insert(p);
        }
    }
    Tonnetz::new(s.clone(), vertex_labels, edge_labels, face_labels.to_vec())
}

/// The vertex tonnetz determined by one note per vertex.
pub fn from_vertex_map(s: &SimplicialSurface, v: &[PitchClass]) -> Result<Tonnetz, TonnetzError> {
    if v.len() != s.vertex_count() {
        return Err(TonnetzError::LabelCount { dim: Dim::Vertex, expected: s.vertex_count(), found: v.len() });
    }
    let report = s.validate();
    if !report.is_valid() {
        return Err(TonnetzError::InvalidSurface(report));
    }
    let vertex_labels = (0..s.vertex_count())
        .map(|i| PitchMultiset::repeated(v[i], s.cofaces(SimplexId::vertex(i)).len()))
        .collect();
    let edge_labels = s.edges().iter().map(|e| e.verts.iter().map(|&i| v[i]).collect()).collect();
    let face_labels = (0..s.face_count())
        .map(|f| s.face_corners(f).expect("validated").iter().map(|&i| v[i]).collect())
        .collect();
    Tonnetz::new(s.clone(), vertex_labels, edge_labels, face_labels)
}

/// The edge tonnetz determined by one note per edge.
pub fn from_edge_map(s: &SimplicialSurface, e: &[PitchClass]) -> Result<Tonnetz, TonnetzError> {
    if e.len() != s.edge_count() {
        return Err(TonnetzError::LabelCount { dim: Dim::Edge, expected: s.edge_count(), found: e.len() });
    }
    let vertex_labels = (0..s.vertex_count())
        .map(|i| s.cofaces(SimplexId::vertex(i)).iter().map(|t| e[t.index]).collect())
        .collect();
    let edge_labels = e.iter().map(|&p| PitchMultiset::repeated(p, 2)).collect();
    let face_labels = s.faces().iter().map(|f| f.edges.iter().map(|&i| e[i]).collect()).collect();
    Tonnetz::new(s.clone(), vertex_labels, edge_labels, face_labels)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TonnetzKind {
    pub is_vertex_tonnetz: bool,
    pub is_edge_tonnetz: bool,
    pub is_major: bool,
    pub is_minor: bool,
    pub is_major_minor: bool,
    pub is_complete_major_minor: bool,
    pub is_diminished: bool,
    pub is_augmented: bool,
}

pub fn kind(t: &Tonnetz) -> TonnetzKind {
    let singleton = |d: Dim| t.labels(d).iter().all(|l| l.support().len() == 1);
    let chords = t.face_chords();
    let all = |f: fn(&ChordQuality) -> bool| !chords.is_empty() && chords.iter().all(f);
    let is_major_minor = all(|c| c.is_major() || c.is_minor());
    let distinct: std::collections::BTreeSet<_> = chords.iter().collect();
    TonnetzKind {
        is_vertex_tonnetz: singleton(Dim::Vertex),
        is_edge_tonnetz: singleton(Dim::Edge),
        is_major: all(|c| c.is_major()),
        is_minor: all(|c| c.is_minor()),
        is_major_minor,
        is_complete_major_minor: is_major_minor && distinct.len() == 24,
        is_diminished: all(|c| matches!(c, ChordQuality::Diminished(_))),
        is_augmented: all(|c| matches!(c, ChordQuality::Augmented(_))),
    }
}

pub fn transpose_tonnetz(t: &Tonnetz, k: Interval) -> Tonnetz {
    let mut out = t.clone();
    for dim in &mut out.labels {
        for l in dim.iter_mut() {
            *l = l.transpose(k);
        }
    }
    out
}

/// An automorphism `φ` with `Ω(φ(σ)) = Ω(σ) + k` for every simplex, if any.
pub fn find_transposition_symmetry(t: &Tonnetz, k: Interval) -> Option<ComplexAutomorphism> {
    find_automorphisms_with(t.surface(), Some(1), |a, b| *t.label(b) == t.label(a).transpose(k)).pop()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pitch::parse_note;

    fn n(s: &str) -> PitchClass {
        parse_note(s).unwrap()
    }

    #[test]
    fn constant_tonnetz_verifies() {
        let s = SimplicialSurface::tetrahedron();
        let t = from_edge_map(&s, &[n("C"); 6]).unwrap();
        let w = verify(&t).unwrap();
        assert!(w.check(&t));
        assert_eq!(t.label(SimplexId::face(0)), &PitchMultiset::repeated(n("C"), 3));
        assert_eq!(t.label(SimplexId::vertex(0)), &PitchMultiset::repeated(n("C"), 3));
        assert_eq!(from_vertex_map(&s, &[n("C"); 4]).unwrap(), t);
        let faces = vec![PitchMultiset::repeated(n("C"), 3); 4];
        assert_eq!(extend_from_faces(&s, &faces, 7).unwrap(), t);
    }

    #[test]
    fn diminished_tetrahedron() {
        let s = SimplicialSurface::tetrahedron();
        let t = from_vertex_map(&s, &[n("C"), n("E♭"), n("F♯"), n("A")]).unwrap();
        assert!(verify(&t).is_ok());
        let k = kind(&t);
        assert!(k.is_vertex_tonnetz && k.is_diminished && !k.is_edge_tonnetz);
    }

    #[test]
    fn cardinality_failure() {
        let s = SimplicialSurface::tetrahedron();
        let mut t = from_edge_map(&s, &[n("C"); 6]).unwrap();
        t.set_label(SimplexId::face(1), PitchMultiset::repeated(n("C"), 4));
        let f = verify(&t).unwrap_err();
        assert_eq!(f.infeasible.len(), 1);
        assert_eq!(f.infeasible[0].name, "f1");
        assert_eq!(f.infeasible[0].obstruction.reason(), "cardinality");
    }

    #[test]
    fn hall_certificate_is_a_real_obstruction() {
        let s = SimplicialSurface::tetrahedron();
        let mut t = from_vertex_map(&s, &[n("C"), n("E♭"), n("F♯"), n("A")]).unwrap();
        t.set_label(SimplexId::face(0), PitchMultiset::repeated(n("C"), 3));
        let f = verify(&t).unwrap_err();
        let face = f.infeasible.iter().find(|i| i.simplex == SimplexId::face(0)).unwrap();
        match &face.obstruction {
            Obstruction::Hall { slots, notes } => {
                assert!(notes.len() < slots.len());
                for slot in slots {
                    let sup = t.label(*slot).support();
                    for p in t.label(SimplexId::face(0)).elements() {
                        if sup.contains(p) {
                            assert!(notes.contains(&p));
                        }
                    }
                }
            }
            other => panic!("expected hall, got {other:?}"),
        }
    }

    #[test]
    fn extend_rejects_bad_orders() {
        let s = SimplicialSurface::tetrahedron();
        let mut faces = vec![PitchMultiset::repeated(n("C"), 3); 4];
        faces[2] = PitchMultiset::repeated(n("C"), 2);
        assert!(matches!(extend_from_faces(&s, &faces, 0), Err(TonnetzError::FaceLabelOrder { .. })));
        assert!(matches!(extend_from_faces(&s, &faces[..3], 0), Err(TonnetzError::LabelCount { .. })));
    }

    #[test]
    fn extend_is_reproducible() {
        let s = SimplicialSurface::tetrahedron();
        let faces: Vec<PitchMultiset> = (0..4)
            .map(|i| PitchMultiset::from_pitches([PitchClass::new(i), PitchClass::new(i + 4), PitchClass::new(i + 7)]))
            .collect();
        let a = extend_from_faces(&s, &faces, 11).unwrap();
        assert_eq!(a, extend_from_faces(&s, &faces, 11).unwrap());
        assert!(verify(&a).is_ok());
    }

    #[test]
    fn witnesses_are_deterministic() {
        let s = SimplicialSurface::tetrahedron();
        let t = from_vertex_map(&s, &[n("C"), n("E"), n("G"), n("B")]).unwrap();
        assert_eq!(verify(&t).unwrap(), verify(&t).unwrap());
    }

    #[test]
    fn zero_shift_symmetry_is_identity() {
        let s = SimplicialSurface::tetrahedron();
        let t = from_vertex_map(&s, &[n("C"), n("E"), n("G"), n("B")]).unwrap();
        assert!(find_transposition_symmetry(&t, Interval::UNISON).unwrap().is_identity());
        assert!(find_transposition_symmetry(&t, Interval::new(1)).is_none());
    }

    #[test]
    fn tetra_dim_has_minor_third_symmetry() {
        let s = SimplicialSurface::tetrahedron();
        let t = from_vertex_map(&s, &[n("C"), n("E♭"), n("F♯"), n("A")]).unwrap();
        let phi = find_transposition_symmetry(&t, Interval::new(3)).unwrap();
        assert_eq!(phi.order(), 4);
    }

    #[test]
    fn transpose_round_trip() {
        let s = SimplicialSurface::tetrahedron();
        let t = from_vertex_map(&s, &[n("C"), n("E"), n("G"), n("B")]).unwrap();
        assert_eq!(transpose_tonnetz(&t, Interval::UNISON), t);
        let up = transpose_tonnetz(&t, Interval::new(5));
        assert!(verify(&up).is_ok());
        assert_eq!(transpose_tonnetz(&up, Interval::new(7)), t);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn triads(n: usize) -> impl Strategy<Value = Vec<PitchMultiset>> {
            proptest::collection::vec(proptest::array::uniform3(0i64..12), n)
                .prop_map(|v| v.into_iter().map(|t| t.into_iter().map(PitchClass::new).collect()).collect())
        }

        proptest! {
            #[test]
            fn extension_always_verifies(faces in triads(4), seed in any::<u64>()) {
                let s = SimplicialSurface::tetrahedron();
                let t = extend_from_faces(&s, &faces, seed).unwrap();
                let w = verify(&t);
                prop_assert!(w.is_ok());
                prop_assert!(w.unwrap().check(&t));
            }

            #[test]
            fn vertex_and_edge_maps_verify(v in proptest::array::uniform4(0i64..12), e in proptest::array::uniform6(0i64..12)) {
                let s = SimplicialSurface::tetrahedron();
                let v: Vec<PitchClass> = v.into_iter().map(PitchClass::new).collect();
                let e: Vec<PitchClass> = e.into_iter().map(PitchClass::new).collect();
                prop_assert!(verify(&from_vertex_map(&s, &v).unwrap()).is_ok());
                let te = from_edge_map(&s, &e).unwrap();
                prop_assert!(verify(&te).is_ok());
                for i in 0..4 {
                    let incident: PitchMultiset = s.cofaces(SimplexId::vertex(i)).iter().map(|x| e[x.index]).collect();
                    prop_assert_eq!(te.label(SimplexId::vertex(i)), &incident);
                }
            }

            #[test]
            fn transposition_preserves_verification(faces in triads(4), seed in 0u64..100, k in 0i64..12) {
                let s = SimplicialSurface::tetrahedron();
                let t = extend_from_faces(&s, &faces, seed).unwrap();
                prop_assert!(verify(&transpose_tonnetz(&t, Interval::new(k))).is_ok());
            }
        }
    }
}
