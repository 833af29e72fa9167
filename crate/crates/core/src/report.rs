//! Chord inventories, coverage across several tonnetzes, and the overview
//! table comparing the B2, C2 and G2 examples.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::catalog::{build, CatalogError, CatalogKey};
use crate::complex::{Dim, SimplexId};
use crate::pitch::{classify, ChordQuality, NoteStyle, PitchClass, PitchMultiset, PitchSet};
use crate::tonnetz::{kind, Tonnetz, TonnetzKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplexSummary {
    pub name: String,
    pub label: PitchMultiset,
    pub support: PitchSet,
    pub chord: ChordQuality,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexGroup {
    pub valency: usize,
    pub vertices: Vec<SimplexSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inventory {
    pub f_vector: (usize, usize, usize),
    pub euler_characteristic: i64,
    pub kind: TonnetzKind,
    /// Ascending valency.
    pub vertices: Vec<VertexGroup>,
    pub edges: Vec<SimplexSummary>,
    pub faces: Vec<SimplexSummary>,
    /// Face chords with multiplicity, ordered by root then quality.
    pub face_chords: Vec<(ChordQuality, usize)>,
    pub edge_notes: PitchSet,
    pub omitted: PitchSet,
}

fn summary(t: &Tonnetz, id: SimplexId) -> SimplexSummary {
    let label = *t.label(id);
    SimplexSummary { name: t.surface().name(id).to_string(), label, support: label.support(), chord: classify(&label) }
}

fn chord_counts(chords: impl IntoIterator<Item = ChordQuality>) -> Vec<(ChordQuality, usize)> {
    let mut counts: BTreeMap<(u8, ChordQuality), usize> = BTreeMap::new();
    for c in chords {
        *counts.entry(c.sort_key()).or_default() += 1;
    }
    counts.into_iter().map(|((_, c), n)| (c, n)).collect()
}

pub fn inventory(t: &Tonnetz) -> Inventory {
    let s = t.surface();
    let mut groups: BTreeMap<usize, Vec<SimplexSummary>> = BTreeMap::new();
    for i in 0..s.vertex_count() {
        let id = SimplexId::vertex(i);
        groups.entry(s.cofaces(id).len()).or_default().push(summary(t, id));
    }
    let edges: Vec<SimplexSummary> = (0..s.edge_count()).map(|i| summary(t, SimplexId::edge(i))).collect();
    let faces: Vec<SimplexSummary> = (0..s.face_count()).map(|i| summary(t, SimplexId::face(i))).collect();
    let edge_notes = edges.iter().fold(PitchSet::EMPTY, |acc, e| acc.union(e.support));
    Inventory {
        f_vector: s.f_vector(),
        euler_characteristic: s.euler_characteristic(),
        kind: kind(t),
        vertices: groups.into_iter().map(|(valency, vertices)| VertexGroup { valency, vertices }).collect(),
        face_chords: chord_counts(faces.iter().map(|f| f.chord)),
        edges,
        faces,
        edge_notes,
        omitted: edge_notes.complement(),
    }
}

/// `N` for all twelve notes, `N \ {..}` when more than half are present.
pub fn render_notes(s: PitchSet, style: NoteStyle) -> String {
    let list = |s: PitchSet| s.iter().map(|p| p.spell(style)).collect::<Vec<_>>().join(", ");
    if s == PitchSet::ALL {
        "N".to_string()
    } else if s.len() > 6 {
        format!("N \\ {{{}}}", list(s.complement()))
    } else {
        format!("{{{}}}", list(s))
    }
}

fn render_chord(c: ChordQuality, style: NoteStyle) -> String {
    match c.root() {
        Some(r) => format!("{} {}", r.spell(style), c.kind_name()),
        None => "other".to_string(),
    }
}

fn render_multiset(m: &PitchMultiset, style: NoteStyle) -> String {
    format!("{{{}}}", m.names(style).join(", "))
}

pub fn render_inventory(inv: &Inventory, style: NoteStyle) -> String {
    let mut out = String::new();
    let (v, e, f) = inv.f_vector;
    let _ = writeln!(out, "f-vector: ({v}, {e}, {f})  euler characteristic: {}", inv.euler_characteristic);
    let k = inv.kind;
    let flags = [
        ("vertex tonnetz", k.is_vertex_tonnetz),
        ("edge tonnetz", k.is_edge_tonnetz),
        ("major", k.is_major),
        ("minor", k.is_minor),
        ("major/minor", k.is_major_minor),
        ("complete major/minor", k.is_complete_major_minor),
        ("diminished", k.is_diminished),
        ("augmented", k.is_augmented),
    ];
    let set: Vec<&str> = flags.iter().filter(|f| f.1).map(|f| f.0).collect();
    let _ = writeln!(out, "kind: {}", if set.is_empty() { "-".to_string() } else { set.join(", ") });
    let _ = writeln!(out, "edge notes: {}", render_notes(inv.edge_notes, style));
    let _ = writeln!(out, "omitted: {}", render_notes(inv.omitted, style));
    let _ = writeln!(out, "\nface chords:");
    for (c, n) in &inv.face_chords {
        let _ = writeln!(out, "  {:<24} x{n}", render_chord(*c, style));
    }
    for g in &inv.vertices {
        let _ = writeln!(out, "\nvalence {} vertices:", g.valency);
        for s in &g.vertices {
            let _ = writeln!(
                out,
                "  {:<10} {:<26} {}",
                s.name,
                render_chord(s.chord, style),
                render_multiset(&s.label, style)
            );
        }
    }
    let _ = writeln!(out, "\nfaces:");
    for s in &inv.faces {
        let _ = writeln!(out, "  {:<10} {:<26} {}", s.name, render_chord(s.chord, style), render_multiset(&s.label, style));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coverage {
    /// Face chords across all inputs with multiplicity, ordered by root then quality.
    pub chords: Vec<(ChordQuality, usize)>,
    pub all_majors: bool,
    pub all_minors: bool,
    pub complete: bool,
    /// Every major and minor triad occurs exactly once and nothing else does.
    pub each_triad_once: bool,
}

pub fn completeness(ts: &[&Tonnetz]) -> Coverage {
    let chords = chord_counts(ts.iter().flat_map(|t| t.face_chords()));
    let has = |f: fn(PitchClass) -> ChordQuality| PitchClass::all().all(|r| chords.iter().any(|(c, _)| *c == f(r)));
    let all_majors = has(ChordQuality::Major);
    let all_minors = has(ChordQuality::Minor);
    let each_triad_once = all_majors
        && all_minors
        && chords.len() == 24
        && chords.iter().all(|&(c, n)| n == 1 && (c.is_major() || c.is_minor()));
    Coverage { chords, all_majors, all_minors, complete: all_majors && all_minors, each_triad_once }
}

pub fn render_coverage(c: &Coverage, style: NoteStyle) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "all majors: {}  all minors: {}  complete: {}  each once: {}", c.all_majors, c.all_minors, c.complete, c.each_triad_once);
    for (q, n) in &c.chords {
        let _ = writeln!(out, "  {:<24} x{n}", render_chord(*q, style));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OverviewRow {
    MajorFaces,
    MinorFaces,
    AllEdges,
    AugmentedValence6,
    DiminishedSeventhValence4,
    OtherValence8,
    OtherValence12,
}

impl OverviewRow {
    pub const ALL: [OverviewRow; 7] = [
        OverviewRow::MajorFaces,
        OverviewRow::MinorFaces,
        OverviewRow::AllEdges,
        OverviewRow::AugmentedValence6,
        OverviewRow::DiminishedSeventhValence4,
        OverviewRow::OtherValence8,
        OverviewRow::OtherValence12,
    ];

    pub fn heading(self) -> &'static str {
        match self {
            OverviewRow::MajorFaces => "major triads (faces)",
            OverviewRow::MinorFaces => "minor triads (faces)",
            OverviewRow::AllEdges => "all edges",
            OverviewRow::AugmentedValence6 => "augmented triads (valence 6)",
            OverviewRow::DiminishedSeventhValence4 => "diminished sevenths (valence 4)",
            OverviewRow::OtherValence8 => "anything else (valence 8)",
            OverviewRow::OtherValence12 => "anything else (valence 12)",
        }
    }
}

/// Chord rows hold roots; vertex and edge rows hold note sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverviewColumn {
    pub key: CatalogKey,
    pub heading: &'static str,
    pub cells: Vec<Vec<PitchSet>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverviewTable {
    pub rows: Vec<OverviewRow>,
    pub columns: Vec<OverviewColumn>,
}

impl OverviewTable {
    pub fn cell(&self, key: CatalogKey, row: OverviewRow) -> Option<&[PitchSet]> {
        let c = self.columns.iter().find(|c| c.key == key)?;
        let r = self.rows.iter().position(|&x| x == row)?;
        Some(&c.cells[r])
    }
}

fn normalized(mut v: Vec<PitchSet>) -> Vec<PitchSet> {
    v.sort_by_key(|s| s.iter().map(|p| p.value()).collect::<Vec<_>>());
    v.dedup();
    v
}

/// One column of the overview table for any tonnetz.
pub fn overview_column(t: &Tonnetz) -> Vec<Vec<PitchSet>> {
    let s = t.surface();
    let roots = |f: fn(ChordQuality) -> bool| {
        normalized(
            t.face_chords()
                .into_iter()
                .filter(|&c| f(c))
                .filter_map(|c| c.root())
                .map(|r| std::iter::once(r).collect())
                .collect(),
        )
    };
    let vertices = |valency: usize, f: fn(ChordQuality) -> bool| {
        normalized(
            (0..s.vertex_count())
                .map(SimplexId::vertex)
                .filter(|&v| s.cofaces(v).len() == valency)
                .map(|v| t.label(v).support())
                .filter(|sup| f(sup.classify()))
                .collect(),
        )
    };
    let other = |c: ChordQuality| !matches!(c, ChordQuality::Augmented(_) | ChordQuality::DiminishedSeventh(_));
    let edges = t.labels(Dim::Edge).iter().fold(PitchSet::EMPTY, |acc, l| acc.union(l.support()));
    vec![
        roots(ChordQuality::is_major),
        roots(ChordQuality::is_minor),
        vec![edges],
        vertices(6, |c| matches!(c, ChordQuality::Augmented(_))),
        vertices(4, |c| matches!(c, ChordQuality::DiminishedSeventh(_))),
        vertices(8, other),
        vertices(12, other),
    ]
}

pub const OVERVIEW_COLUMNS: [(CatalogKey, &str); 4] = [
    (CatalogKey::B2, "B2 (A,F)"),
    (CatalogKey::C2, "C2 (A,F)"),
    (CatalogKey::G2, "G2 (A,D)"),
    (CatalogKey::G2Dual, "G2 (D,A)"),
];

pub fn overview_table() -> Result<OverviewTable, CatalogError> {
    let columns = OVERVIEW_COLUMNS
        .iter()
        .map(|&(key, heading)| Ok(OverviewColumn { key, heading, cells: overview_column(&build(key)?.tonnetz) }))
        .collect::<Result<_, CatalogError>>()?;
    Ok(OverviewTable { rows: OverviewRow::ALL.to_vec(), columns })
}

fn render_cell(row: OverviewRow, cell: &[PitchSet], style: NoteStyle) -> String {
    match row {
        OverviewRow::MajorFaces | OverviewRow::MinorFaces => cell
            .iter()
            .flat_map(|s| s.iter())
            .map(|p| p.spell(style).to_string())
            .collect::<Vec<_>>()
            .join(", "),
        _ => cell.iter().map(|s| render_notes(*s, style)).collect::<Vec<_>>().join("; "),
    }
}

pub fn render_overview(t: &OverviewTable, style: NoteStyle) -> String {
    let mut grid: Vec<Vec<String>> = vec![std::iter::once(String::new()).chain(t.columns.iter().map(|c| c.heading.to_string())).collect()];
    for (r, &row) in t.rows.iter().enumerate() {
        let mut line = vec![row.heading().to_string()];
        line.extend(t.columns.iter().map(|c| render_cell(row, &c.cells[r], style)));
        grid.push(line);
    }
    let widths: Vec<usize> = (0..grid[0].len())
        .map(|i| grid.iter().map(|l| l[i].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for line in grid {
        let cells: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", cells.join(" | ").trim_end());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pitch::parse_note;

    fn set(names: &[&str]) -> PitchSet {
        names.iter().map(|n| parse_note(n).unwrap()).collect()
    }

    #[test]
    fn notes_rendering() {
        assert_eq!(render_notes(PitchSet::ALL, NoteStyle::Ascii), "N");
        assert_eq!(render_notes(set(&["A#", "C#", "E", "G"]).complement(), NoteStyle::Ascii), "N \\ {Bb, Db, E, G}");
        assert_eq!(render_notes(set(&["C", "E", "G#"]), NoteStyle::Unicode), "{C, E, A♭}");
    }

    #[test]
    fn inventory_totals() {
        for key in CatalogKey::ALL {
            let t = build(key).unwrap().tonnetz;
            let inv = inventory(&t);
            let counted: usize = inv.vertices.iter().map(|g| g.vertices.len()).sum();
            assert_eq!(counted, t.surface().vertex_count());
            assert_eq!(inv.face_chords.iter().map(|c| c.1).sum::<usize>(), t.surface().face_count());
        }
    }

    #[test]
    fn b2_inventory() {
        let inv = inventory(&build(CatalogKey::B2).unwrap().tonnetz);
        assert_eq!(inv.omitted, set(&["A♯", "C♯", "E", "G"]));
        let four = inv.vertices.iter().find(|g| g.valency == 4).unwrap();
        assert!(four.vertices.iter().all(|v| v.chord == ChordQuality::DiminishedSeventh(PitchClass::A)));
    }

    #[test]
    fn g2_inventory() {
        let inv = inventory(&build(CatalogKey::G2).unwrap().tonnetz);
        let six = inv.vertices.iter().find(|g| g.valency == 6).unwrap();
        let mut sets: Vec<PitchSet> = six.vertices.iter().map(|v| v.support).collect();
        sets.sort();
        let mut want = vec![set(&["C", "E", "G♯"]), set(&["D", "F♯", "A♯"])];
        want.sort();
        assert_eq!(sets, want);
        let dual = inventory(&build(CatalogKey::G2Dual).unwrap().tonnetz);
        let four = dual.vertices.iter().find(|g| g.valency == 4).unwrap();
        let dims: std::collections::BTreeSet<ChordQuality> = four.vertices.iter().map(|v| v.chord).collect();
        assert_eq!(dims.len(), 3);
    }

    #[test]
    fn empty_coverage() {
        let c = completeness(&[]);
        assert!(c.chords.is_empty());
        assert!(!c.all_majors && !c.all_minors && !c.complete && !c.each_triad_once);
    }

    #[test]
    fn b2_transposes_cover_all_majors() {
        let ts: Vec<Tonnetz> = [CatalogKey::B2, CatalogKey::B2Up2, CatalogKey::B2Down2]
            .iter()
            .map(|&k| build(k).unwrap().tonnetz)
            .collect();
        let c = completeness(&ts.iter().collect::<Vec<_>>());
        assert!(c.all_majors && !c.all_minors);
        assert!(c.chords.iter().all(|&(_, n)| n == 2));
    }

    #[test]
    fn table_is_deterministic() {
        let a = render_overview(&overview_table().unwrap(), NoteStyle::Ascii);
        let b = render_overview(&overview_table().unwrap(), NoteStyle::Ascii);
        assert_eq!(a, b);
        assert_eq!(a.lines().count(), 8);
    }
}
