//! The JSON document format, DOT and SVG export.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogEntry, Layout, Quad};
use crate::complex::{ComplexError, Dim, Edge, Face, SimplexId, SimplicialSurface};
use crate::pitch::{classify, NoteStyle, PitchMultiset};
use crate::tonnetz::{verify, CoherenceWitness, Tonnetz, VerificationFailure};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{key}: {message}")]
    Schema { key: String, message: String },
    #[error("verification failed:\n{0}")]
    Unverified(VerificationFailure),
}

fn schema(key: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Schema { key: key.into(), message: message.into() }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub name: String,
    pub verts: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceDoc {
    pub name: String,
    pub edges: [String; 3],
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelsDoc {
    pub vertices: BTreeMap<String, Vec<String>>,
    pub edges: BTreeMap<String, Vec<String>>,
    pub faces: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadDoc {
    pub faces: [String; 2],
    pub diagonal: String,
}

/// On-disk form of a tonnetz. Simplices are referred to by name.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
    pub faces: Vec<FaceDoc>,
    pub labels: LabelsDoc,
    /// Face name to the drawing positions of its three corners.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub layout: Option<BTreeMap<String, [[f64; 2]; 3]>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quads: Vec<QuadDoc>,
}

/// A tonnetz with the drawing metadata that travels with it.
#[derive(Clone, Debug, PartialEq)]
pub struct Bundle {
    pub tonnetz: Tonnetz,
    pub layout: Option<Layout>,
    pub quads: Vec<Quad>,
}

fn label_names(m: &PitchMultiset) -> Vec<String> {
    m.names(NoteStyle::Ascii).into_iter().map(str::to_string).collect()
}

impl Document {
    pub fn from_tonnetz(t: &Tonnetz, layout: Option<&Layout>, quads: &[Quad]) -> Self {
        let s = t.surface();
        let vn = s.vertex_names();
        let labels_of = |dim: Dim| -> BTreeMap<String, Vec<String>> {
            (0..s.count(dim))
                .map(|i| {
                    let id = SimplexId { dim, index: i };
                    (s.name(id).to_string(), label_names(t.label(id)))
                })
                .collect()
        };
        Document {
            vertices: vn.to_vec(),
            edges: s
                .edges()
                .iter()
                .map(|e| EdgeDoc { name: e.name.clone(), verts: e.verts.map(|v| vn[v].clone()) })
                .collect(),
            faces: s
                .faces()
                .iter()
                .map(|f| FaceDoc { name: f.name.clone(), edges: f.edges.map(|e| s.edges()[e].name.clone()) })
                .collect(),
            labels: LabelsDoc { vertices: labels_of(Dim::Vertex), edges: labels_of(Dim::Edge), faces: labels_of(Dim::Face) },
            layout: layout.map(|l| s.faces().iter().map(|f| f.name.clone()).zip(l.faces.iter().copied()).collect()),
            quads: quads
                .iter()
                .map(|q| QuadDoc {
                    faces: q.faces.map(|f| s.faces()[f].name.clone()),
                    diagonal: s.edges()[q.diagonal].name.clone(),
                })
                .collect(),
        }
    }

    pub fn from_entry(e: &CatalogEntry) -> Self {
        Document::from_tonnetz(&e.tonnetz, Some(&e.layout), &e.quads)
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        serde_json::from_str(text).map_err(|e| IoError::Syntax { line: e.line(), column: e.column(), message: e.to_string() })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    /// Resolves names and builds the tonnetz. Does not check coherence.
    pub fn to_bundle(&self) -> Result<Bundle, IoError> {
        let index = |kind: &str, names: &mut dyn Iterator<Item = &String>| -> Result<HashMap<String, usize>, IoError> {
            let mut map = HashMap::new();
            for (i, n) in names.enumerate() {
                if map.insert(n.clone(), i).is_some() {
                    return Err(schema(format!("{kind}.{n}"), "duplicate name"));
                }
            }
            Ok(map)
        };
        let vi = index("vertices", &mut self.vertices.iter())?;
        let ei = index("edges", &mut self.edges.iter().map(|e| &e.name))?;
        let fi = index("faces", &mut self.faces.iter().map(|f| &f.name))?;
        let lookup = |map: &HashMap<String, usize>, owner: String, what: &str, name: &str| {
            map.get(name).copied().ok_or_else(|| schema(owner, format!("unknown {what} `{name}`")))
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let mut verts = [0; 2];
            for (slot, v) in verts.iter_mut().zip(&e.verts) {
                *slot = lookup(&vi, format!("edge `{}`", e.name), "vertex", v)?;
            }
            edges.push(Edge { name: e.name.clone(), verts });
        }
        let mut faces = Vec::with_capacity(self.faces.len());
        for f in &self.faces {
            let mut fe = [0; 3];
            for (slot, e) in fe.iter_mut().zip(&f.edges) {
                *slot = lookup(&ei, format!("face `{}`", f.name), "edge", e)?;
            }
            faces.push(Face { name: f.name.clone(), edges: fe });
        }
        let surface = SimplicialSurface::new(self.vertices.clone(), edges, faces).map_err(|e| match e {
            ComplexError::DuplicateName(n) => schema("names", format!("duplicate name `{n}`")),
            other => schema("surface", other.to_string()),
        })?;

        let read = |kind: &str, map: &BTreeMap<String, Vec<String>>, order: &mut dyn Iterator<Item = &String>, known: &HashMap<String, usize>| {
            if let Some(extra) = map.keys().find(|k| !known.contains_key(*k)) {
                return Err(schema(format!("labels.{kind}.{extra}"), "no such simplex"));
            }
            order
                .map(|n| {
                    let key = format!("labels.{kind}.{n}");
                    let notes = map.get(n).ok_or_else(|| schema(key.clone(), "missing label"))?;
                    PitchMultiset::parse(notes).map_err(|e| schema(key, e.to_string()))
                })
                .collect::<Result<Vec<_>, IoError>>()
        };
        let vl = read("vertices", &self.labels.vertices, &mut self.vertices.iter(), &vi)?;
        let el = read("edges", &self.labels.edges, &mut self.edges.iter().map(|e| &e.name), &ei)?;
        let fl = read("faces", &self.labels.faces, &mut self.faces.iter().map(|f| &f.name), &fi)?;
        let tonnetz = Tonnetz::new(surface, vl, el, fl).map_err(|e| schema("labels", e.to_string()))?;

        let layout = match &self.layout {
            None => None,
            Some(map) => {
                if let Some(extra) = map.keys().find(|k| !fi.contains_key(*k)) {
                    return Err(schema(format!("layout.{extra}"), "no such face"));
                }
                let faces = self
                    .faces
                    .iter()
                    .map(|f| map.get(&f.name).copied().ok_or_else(|| schema(format!("layout.{}", f.name), "missing face")))
                    .collect::<Result<_, _>>()?;
                Some(Layout { faces })
            }
        };
        let quads = self
            .quads
            .iter()
            .enumerate()
            .map(|(i, q)| {
                let owner = || format!("quads[{i}]");
                Ok(Quad {
                    faces: [lookup(&fi, owner(), "face", &q.faces[0])?, lookup(&fi, owner(), "face", &q.faces[1])?],
                    diagonal: lookup(&ei, owner(), "edge", &q.diagonal)?,
                })
            })
            .collect::<Result<_, IoError>>()?;
        Ok(Bundle { tonnetz, layout, quads })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoadMode {
    /// Fail unless the tonnetz verifies.
    Checked,
    /// Keep the tonnetz and hand back the verification outcome.
    Unchecked,
}

#[derive(Clone, Debug)]
pub struct Loaded {
    pub bundle: Bundle,
    pub verification: Result<CoherenceWitness, VerificationFailure>,
}

pub fn read_text(path: &str) -> Result<String, IoError> {
    let err = |source| IoError::Io { path: path.to_string(), source };
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(err)?;
    } else {
        text = std::fs::read_to_string(Path::new(path)).map_err(err)?;
    }
    Ok(text)
}

pub fn write_text(path: &str, text: &str) -> Result<(), IoError> {
    let err = |source| IoError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(err)
    } else {
        std::fs::write(Path::new(path), text).map_err(err)
    }
}

pub fn parse(text: &str, mode: LoadMode) -> Result<Loaded, IoError> {
    let bundle = Document::from_json(text)?.to_bundle()?;
    let verification = verify(&bundle.tonnetz);
    match (mode, verification) {
        (LoadMode::Checked, Err(f)) => Err(IoError::Unverified(f)),
        (_, verification) => Ok(Loaded { bundle, verification }),
    }
}

/// Reads a document; `-` is standard input.
pub fn load(path: &str, mode: LoadMode) -> Result<Loaded, IoError> {
    parse(&read_text(path)?, mode)
}

/// Writes a document; `-` is standard output.
pub fn save(doc: &Document, path: &str) -> Result<(), IoError> {
    write_text(path, &doc.to_json())
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn notes_text(m: &PitchMultiset, style: NoteStyle) -> String {
    m.support().iter().map(|p| p.spell(style)).collect::<Vec<_>>().join(",")
}

/// The dual graph: one node per face labelled with its chord, one link per
/// edge labelled with the edge's notes.
pub fn export_dot(t: &Tonnetz, style: NoteStyle) -> String {
    let s = t.surface();
    let mut out = String::from("graph tonnetz {\n  node [shape=box];\n");
    for (i, f) in s.faces().iter().enumerate() {
        let chord = classify(t.label(SimplexId::face(i)));
        let chord = if style == NoteStyle::Unicode { format!("{chord:#}") } else { chord.to_string() };
        let _ = writeln!(out, "  {} [label={}];", quote(&f.name), quote(&chord));
    }
    for (i, e) in s.edges().iter().enumerate() {
        let id = SimplexId::edge(i);
        if let [a, b] = s.cofaces(id)[..] {
            let _ = writeln!(
                out,
                "  {} -- {} [label={}, tooltip={}];",
                quote(s.name(a)),
                quote(s.name(b)),
                quote(&notes_text(t.label(id), style)),
                quote(&e.name)
            );
        }
    }
    out.push_str("}\n");
    out
}

fn escape_xml(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Draws the net: every face as a triangle with its chord, and every edge's
/// notes once, just inside the first face that uses it.
pub fn export_svg(t: &Tonnetz, layout: &Layout, style: NoteStyle) -> String {
    const SCALE: f64 = 80.0;
    const MARGIN: f64 = 30.0;
    let pts = layout.faces.iter().flatten();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in pts {
        x0 = x0.min(p[0]);
        x1 = x1.max(p[0]);
        y0 = y0.min(p[1]);
        y1 = y1.max(p[1]);
    }
    if layout.faces.is_empty() {
        (x0, x1, y0, y1) = (0.0, 0.0, 0.0, 0.0);
    }
    let map = |p: [f64; 2]| [(p[0] - x0) * SCALE + MARGIN, (y1 - p[1]) * SCALE + MARGIN];
    let num = |v: f64| format!("{:.2}", v + 0.0);
    let width = (x1 - x0) * SCALE + 2.0 * MARGIN;
    let height = (y1 - y0) * SCALE + 2.0 * MARGIN;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(width),
        num(height),
        num(width),
        num(height)
    );
    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="1">"#);
    let s = t.surface();
    for (i, tri) in layout.faces.iter().enumerate() {
        let points: Vec<String> = tri.iter().map(|&p| map(p)).map(|[x, y]| format!("{},{}", num(x), num(y))).collect();
        let _ = writeln!(out, r#"<polygon id="{}" points="{}"/>"#, escape_xml(&s.faces()[i].name), points.join(" "));
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g font-family="sans-serif" text-anchor="middle" dominant-baseline="middle">"#);
    let mut seen = vec![false; s.edge_count()];
    for (i, tri) in layout.faces.iter().enumerate() {
        let c = map([(tri[0][0] + tri[1][0] + tri[2][0]) / 3.0, (tri[0][1] + tri[1][1] + tri[2][1]) / 3.0]);
        let chord = classify(t.label(SimplexId::face(i)));
        let chord = if style == NoteStyle::Unicode { format!("{chord:#}") } else { chord.to_string() };
        let _ = writeln!(
            out,
            r#"<text class="face-label" x="{}" y="{}" font-size="9" fill="gray">{}</text>"#,
            num(c[0]),
            num(c[1]),
            escape_xml(&chord)
        );
        for (k, &e) in s.faces()[i].edges.iter().enumerate() {
            if std::mem::replace(&mut seen[e], true) {
                continue;
            }
            let [a, b] = [map(tri[k]), map(tri[(k + 1) % 3])];
            let mid = [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0];
            let at = [mid[0] + 0.2 * (c[0] - mid[0]), mid[1] + 0.2 * (c[1] - mid[1])];
            let _ = writeln!(
                out,
                r#"<text class="edge-label" x="{}" y="{}" font-size="11">{}</text>"#,
                num(at[0]),
                num(at[1]),
                escape_xml(&notes_text(t.label(SimplexId::edge(e)), style))
            );
        }
    }
    let _ = writeln!(out, "</g>\n</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, CatalogKey};
    use crate::pitch::PitchClass;

    #[test]
    fn b2_round_trip() {
        let e = build(CatalogKey::B2).unwrap();
        let doc = Document::from_entry(&e);
        let back = Document::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        let b = back.to_bundle().unwrap();
        assert_eq!(b.tonnetz, e.tonnetz);
        assert_eq!(b.layout.as_ref(), Some(&e.layout));
    }

    #[test]
    fn missing_edge_names_the_face() {
        let mut doc = Document::from_entry(&build(CatalogKey::B2).unwrap());
        doc.faces[3].edges[1] = "nope".into();
        let err = doc.to_bundle().unwrap_err().to_string();
        assert!(err.contains(&format!("face `{}`", doc.faces[3].name)), "{err}");
        assert!(err.contains("nope"));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match Document::from_json("{\n  \"vertices\": [1]\n}") {
            Err(IoError::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        let err = Document::from_json(r#"{"vertices": [], "edges": [], "faces": []}"#).unwrap_err();
        assert!(err.to_string().contains("labels"));
    }

    #[test]
    fn bad_note_names_its_key() {
        let mut doc = Document::from_entry(&build(CatalogKey::B2).unwrap());
        let name = doc.vertices[0].clone();
        doc.labels.vertices.get_mut(&name).unwrap()[0] = "H".into();
        let err = doc.to_bundle().unwrap_err().to_string();
        assert!(err.starts_with(&format!("labels.vertices.{name}")), "{err}");
    }

    #[test]
    fn unchecked_load_keeps_broken_tonnetz() {
        let mut doc = Document::from_entry(&build(CatalogKey::Bauble).unwrap());
        let name = doc.edges[0].name.clone();
        let label = doc.labels.edges.get_mut(&name).unwrap();
        let shifted = label.iter().map(|n| (n.parse::<PitchClass>().unwrap() + crate::pitch::Interval::new(1)).to_string()).collect();
        *label = shifted;
        let text = doc.to_json();
        assert!(matches!(parse(&text, LoadMode::Checked), Err(IoError::Unverified(_))));
        let loaded = parse(&text, LoadMode::Unchecked).unwrap();
        let failure = loaded.verification.unwrap_err();
        assert!(failure.names().contains(&name.as_str()));
    }

    #[test]
    fn dot_counts() {
        let dot = export_dot(&build(CatalogKey::B2).unwrap().tonnetz, NoteStyle::Ascii);
        assert_eq!(dot.matches("[label=").count(), 8 + 12);
        assert_eq!(dot.matches(" -- ").count(), 12);
    }

    #[test]
    fn dot_constant_tetrahedron() {
        let s = SimplicialSurface::tetrahedron();
        let c = PitchClass::new(3);
        let t = crate::tonnetz::from_vertex_map(&s, &[c; 4]).unwrap();
        let dot = export_dot(&t, NoteStyle::Ascii);
        assert_eq!(dot.matches("unison").count(), 4, "{dot}");
    }

    #[test]
    fn svg_counts_and_determinism() {
        let e = build(CatalogKey::Bauble).unwrap();
        let svg = export_svg(&e.tonnetz, &e.layout, NoteStyle::Ascii);
        assert_eq!(svg.matches("<polygon").count(), 24);
        assert_eq!(svg.matches(r#"class="edge-label""#).count(), 36);
        assert_eq!(svg, export_svg(&e.tonnetz, &e.layout, NoteStyle::Ascii));
    }
}
