//! Torus quotients of periodic integer nets.

use std::collections::HashMap;

use crate::complex::{Edge, Face, SimplicialSurface};
use crate::pitch::{parse_note, PitchClass};

use super::Layout;

pub(crate) type Pt = [i64; 2];

/// A rank-2 sublattice of Z², kept in the triangular basis `(g, h), (0, d)`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Lattice {
    g: i64,
    h: i64,
    d: i64,
}

impl Lattice {
    pub(crate) fn new(u: Pt, v: Pt) -> Self {
        let (g, s, t) = ext_gcd(u[0], v[0]);
        let first = [s * u[0] + t * v[0], s * u[1] + t * v[1]];
        let second = [(v[0] / g) * u[0] - (u[0] / g) * v[0], (v[0] / g) * u[1] - (u[0] / g) * v[1]];
        debug_assert_eq!(second[0], 0);
        let (g, h) = if first[0] < 0 { (-first[0], -first[1]) } else { (first[0], first[1]) };
        let d = second[1].abs();
        assert!(g > 0 && d > 0, "degenerate lattice");
        Lattice { g, h, d }
    }

    #[cfg(test)]
    pub(crate) fn index(&self) -> i64 {
        self.g * self.d
    }

    pub(crate) fn reduce(&self, p: Pt) -> Pt {
        let k = p[0].div_euclid(self.g);
        [p[0] - k * self.g, (p[1] - k * self.h).rem_euclid(self.d)]
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 { (-a, -1, 0) } else { (a, 1, 0) }
    } else {
        let (g, s, t) = ext_gcd(b, a.rem_euclid(b));
        (g, t, s - a.div_euclid(b) * t)
    }
}

fn add(p: Pt, q: Pt) -> Pt {
    [p[0] + q[0], p[1] + q[1]]
}

fn sub(p: Pt, q: Pt) -> Pt {
    [p[0] - q[0], p[1] - q[1]]
}

/// Accumulates triangles of a planar net and glues them modulo a lattice.
pub(crate) struct NetBuilder {
    lattice: Lattice,
    embed: [[f64; 2]; 2],
    vertex_ids: HashMap<Pt, usize>,
    vertex_names: Vec<String>,
    edge_ids: HashMap<(Pt, Pt), usize>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    face_keys: HashMap<[Pt; 3], usize>,
    layout: Vec<[[f64; 2]; 3]>,
}

impl NetBuilder {
    /// `embed` gives the drawing positions of the two unit vectors.
    pub(crate) fn new(lattice: Lattice, embed: [[f64; 2]; 2]) -> Self {
        NetBuilder {
            lattice,
            embed,
            vertex_ids: HashMap::new(),
            vertex_names: Vec::new(),
            edge_ids: HashMap::new(),
            edges: Vec::new(),
            faces: Vec::new(),
            face_keys: HashMap::new(),
            layout: Vec::new(),
        }
    }

    fn position(&self, p: Pt) -> [f64; 2] {
        let [a, b] = [p[0] as f64, p[1] as f64];
        [a * self.embed[0][0] + b * self.embed[1][0], a * self.embed[0][1] + b * self.embed[1][1]]
    }

    fn segment_key(&self, p: Pt, q: Pt) -> (Pt, Pt) {
        let rp = self.lattice.reduce(p);
        let rq = self.lattice.reduce(q);
        let a = (rp, add(rp, sub(q, p)));
        let b = (rq, add(rq, sub(p, q)));
        a.min(b)
    }

    pub(crate) fn vertex(&mut self, p: Pt) -> usize {
        let r = self.lattice.reduce(p);
        if let Some(&i) = self.vertex_ids.get(&r) {
            return i;
        }
        self.vertex_names.push(format!("v{}_{}", r[0], r[1]));
        self.vertex_ids.insert(r, self.vertex_names.len() - 1);
        self.vertex_names.len() - 1
    }

    pub(crate) fn vertex_id(&self, p: Pt) -> usize {
        self.vertex_ids[&self.lattice.reduce(p)]
    }

    pub(crate) fn vertex_name(&self, p: Pt) -> String {
        self.vertex_names[self.vertex_id(p)].clone()
    }

    fn edge(&mut self, p: Pt, q: Pt) -> usize {
        let key = self.segment_key(p, q);
        if let Some(&i) = self.edge_ids.get(&key) {
            return i;
        }
        let verts = [self.vertex(key.0), self.vertex(key.1)];
        self.edges.push(Edge { name: format!("e{}", self.edges.len()), verts });
        self.edge_ids.insert(key, self.edges.len() - 1);
        self.edges.len() - 1
    }

    pub(crate) fn edge_id(&self, p: Pt, q: Pt) -> Option<usize> {
        self.edge_ids.get(&self.segment_key(p, q)).copied()
    }

    /// Adds a triangle whose edge slots run `p0p1`, `p1p2`, `p2p0`.
    pub(crate) fn triangle(&mut self, t: [Pt; 3]) -> usize {
        let shift = sub(self.lattice.reduce(t[0]), t[0]);
        let mut key = t.map(|p| add(p, shift));
        key.sort();
        let key = {
            let s = sub(self.lattice.reduce(key[0]), key[0]);
            key.map(|p| add(p, s))
        };
        assert!(self.face_keys.insert(key, self.faces.len()).is_none(), "triangle {t:?} listed twice");
        for &p in &t {
            self.vertex(p);
        }
        let edges = [self.edge(t[0], t[1]), self.edge(t[1], t[2]), self.edge(t[2], t[0])];
        self.faces.push(Face { name: format!("f{}", self.faces.len()), edges });
        self.layout.push(t.map(|p| self.position(p)));
        self.faces.len() - 1
    }

    pub(crate) fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub(crate) fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Resolves one note name per net segment, insisting that copies glued
    /// together agree mod 12 and that every edge is named.
    pub(crate) fn edge_notes(&self, segments: &[(Pt, Pt, &str)]) -> Vec<PitchClass> {
        let mut notes: Vec<Option<PitchClass>> = vec![None; self.edges.len()];
        for &(p, q, name) in segments {
            let e = self.edge_id(p, q).unwrap_or_else(|| panic!("segment {p:?}-{q:?} is not a net edge"));
            let note = parse_note(name).expect("note table is well formed");
            match notes[e] {
                Some(old) => assert_eq!(old, note, "segment {p:?}-{q:?} glued to a copy labelled differently"),
                None => notes[e] = Some(note),
            }
        }
        notes
            .into_iter()
            .enumerate()
            .map(|(i, n)| n.unwrap_or_else(|| panic!("edge {i} has no note")))
            .collect()
    }

    pub(crate) fn finish(self) -> (SimplicialSurface, Layout) {
        let surface = SimplicialSurface::new(self.vertex_names, self.edges, self.faces).expect("net indices are consistent");
        (surface, Layout { faces: self.layout })
    }
}
