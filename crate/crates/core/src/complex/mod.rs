//! Abstract triangulated closed surfaces. Loops and parallel edges are allowed,
//! so faces list their edges explicitly rather than by vertex triples.

mod automorphism;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use automorphism::{find_automorphisms, find_automorphisms_with, ComplexAutomorphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dim {
    Vertex,
    Edge,
    Face,
}

impl Dim {
    pub fn as_usize(self) -> usize {
        match self {
            Dim::Vertex => 0,
            Dim::Edge => 1,
            Dim::Face => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimplexId {
    pub dim: Dim,
    pub index: usize,
}

impl SimplexId {
    pub fn vertex(index: usize) -> Self {
        SimplexId { dim: Dim::Vertex, index }
    }

    pub fn edge(index: usize) -> Self {
        SimplexId { dim: Dim::Edge, index }
    }

    pub fn face(index: usize) -> Self {
        SimplexId { dim: Dim::Face, index }
    }
}

impl fmt::Display for SimplexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = ['v', 'e', 'f'][self.dim.as_usize()];
        write!(f, "{c}#{}", self.index)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub verts: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub name: String,
    pub edges: [usize; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("{0} does not exist")]
    UnknownSimplex(SimplexId),
    #[error("edge `{edge}` references vertex index {vertex} out of range")]
    BadVertexRef { edge: String, vertex: usize },
    #[error("face `{face}` references edge index {edge} out of range")]
    BadEdgeRef { face: String, edge: usize },
    #[error("duplicate simplex name `{0}`")]
    DuplicateName(String),
}

/// A finite 2-complex: vertices, edges with two vertex slots, faces with three edge slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSurface {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    vertex_cofaces: Vec<Vec<usize>>,
    edge_cofaces: Vec<Vec<usize>>,
}

impl SimplicialSurface {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>, faces: Vec<Face>) -> Result<Self, ComplexError> {
        let mut seen = std::collections::HashSet::new();
        let names = vertices.iter().chain(edges.iter().map(|e| &e.name)).chain(faces.iter().map(|f| &f.name));
        for name in names {
            if !seen.insert(name.as_str()) {
                return Err(ComplexError::DuplicateName(name.clone()));
            }
        }
        let mut vertex_cofaces = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            for &v in &e.verts {
                let slot = vertex_cofaces
                    .get_mut(v)
                    .ok_or_else(|| ComplexError::BadVertexRef { edge: e.name.clone(), vertex: v })?;
                slot.push(i);
            }
        }
        let mut edge_cofaces = vec![Vec::new(); edges.len()];
        for (i, f) in faces.iter().enumerate() {
            for &e in &f.edges {
                let slot = edge_cofaces
                    .get_mut(e)
                    .ok_or_else(|| ComplexError::BadEdgeRef { face: f.name.clone(), edge: e })?;
                slot.push(i);
            }
        }
        Ok(SimplicialSurface { vertices, edges, faces, vertex_cofaces, edge_cofaces })
    }

    /// Builds a genuine simplicial complex from vertex triples; edges are
    /// created per unordered vertex pair and named `a-b`.
    pub fn from_triangles(vertices: Vec<String>, triangles: &[[usize; 3]]) -> Result<Self, ComplexError> {
        let mut edge_ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut faces = Vec::new();
        for (fi, t) in triangles.iter().enumerate() {
            let mut slots = [0; 3];
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                for v in [a, b] {
                    if v >= vertices.len() {
                        return Err(ComplexError::BadVertexRef { edge: format!("f{fi}"), vertex: v });
                    }
                }
                let key = (a.min(b), a.max(b));
                slots[k] = *edge_ids.entry(key).or_insert_with(|| {
                    edges.push(Edge {
                        name: format!("{}-{}", vertices[key.0], vertices[key.1]),
                        verts: [key.0, key.1],
                    });
                    edges.len() - 1
                });
            }
            faces.push(Face { name: format!("f{fi}"), edges: slots });
        }
        Self::new(vertices, edges, faces)
    }

    /// Boundary of the tetrahedron on vertices `t0..t3`.
    pub fn tetrahedron() -> Self {
        let names = (0..4).map(|i| format!("t{i}")).collect();
        Self::from_triangles(names, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).expect("tetrahedron is well formed")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn count(&self, dim: Dim) -> usize {
        match dim {
            Dim::Vertex => self.vertex_count(),
            Dim::Edge => self.edge_count(),
            Dim::Face => self.face_count(),
        }
    }

    pub fn f_vector(&self) -> (usize, usize, usize) {
        (self.vertex_count(), self.edge_count(), self.face_count())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn contains(&self, id: SimplexId) -> bool {
        id.index < self.count(id.dim)
    }

    pub fn name(&self, id: SimplexId) -> &str {
        match id.dim {
            Dim::Vertex => &self.vertices[id.index],
            Dim::Edge => &self.edges[id.index].name,
            Dim::Face => &self.faces[id.index].name,
        }
    }

    pub fn find(&self, name: &str) -> Option<SimplexId> {
        self.simplices().find(|&id| self.name(id) == name)
    }

    /// All simplices: vertices, then edges, then faces.
    pub fn simplices(&self) -> impl Iterator<Item = SimplexId> + '_ {
        let v = (0..self.vertex_count()).map(SimplexId::vertex);
        let e = (0..self.edge_count()).map(SimplexId::edge);
        let f = (0..self.face_count()).map(SimplexId::face);
        v.chain(e).chain(f)
    }

    /// Boundary slots of an edge or face; empty for a vertex.
    pub fn facets(&self, id: SimplexId) -> Vec<SimplexId> {
        match id.dim {
            Dim::Vertex => Vec::new(),
            Dim::Edge => self.edges[id.index].verts.iter().map(|&v| SimplexId::vertex(v)).collect(),
            Dim::Face => self.faces[id.index].edges.iter().map(|&e| SimplexId::edge(e)).collect(),
        }
    }

    /// Coboundary slots of a vertex or edge, with multiplicity; empty for a face.
    pub fn cofaces(&self, id: SimplexId) -> Vec<SimplexId> {
        match id.dim {
            Dim::Vertex => self.vertex_cofaces[id.index].iter().map(|&e| SimplexId::edge(e)).collect(),
            Dim::Edge => self.edge_cofaces[id.index].iter().map(|&f| SimplexId::face(f)).collect(),
            Dim::Face => Vec::new(),
        }
    }

    /// Number of incident edge slots; a loop counts twice.
    pub fn valency(&self, vertex: SimplexId) -> Result<usize, ComplexError> {
        if vertex.dim != Dim::Vertex || !self.contains(vertex) {
            return Err(ComplexError::UnknownSimplex(vertex));
        }
        Ok(self.vertex_cofaces[vertex.index].len())
    }

    /// Corners `[c0, c1, c2]` with edge slot `i` joining `c_i` and `c_{i+1}`,
    /// or `None` if the three edges do not close up into a triangle.
    pub fn face_corners(&self, face: usize) -> Option<[usize; 3]> {
        let f = &self.faces[face];
        let ends = |e: usize, flip: bool| {
            let [a, b] = self.edges[f.edges[e]].verts;
            if flip { (b, a) } else { (a, b) }
        };
        for mask in 0..8u8 {
            let (s0, t0) = ends(0, mask & 1 != 0);
            let (s1, t1) = ends(1, mask & 2 != 0);
            let (s2, t2) = ends(2, mask & 4 != 0);
            if t0 == s1 && t1 == s2 && t2 == s0 {
                return Some([s0, s1, s2]);
            }
        }
        None
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (i, cof) in self.vertex_cofaces.iter().enumerate() {
            if cof.is_empty() {
                violations.push(Violation { simplex: SimplexId::vertex(i), kind: ViolationKind::IsolatedVertex });
            }
        }
        for (i, cof) in self.edge_cofaces.iter().enumerate() {
            if cof.len() != 2 {
                violations.push(Violation {
                    simplex: SimplexId::edge(i),
                    kind: ViolationKind::EdgeFaceCount(cof.len()),
                });
            }
        }
        for i in 0..self.face_count() {
            if self.face_corners(i).is_none() {
                violations.push(Violation { simplex: SimplexId::face(i), kind: ViolationKind::InconsistentCorners });
            }
        }
        ValidationReport { violations }
    }

    /// A copy with one face removed (edge and face indices above it shift down).
    pub fn without_face(&self, face: usize) -> Self {
        let mut faces = self.faces.clone();
        faces.remove(face);
        Self::new(self.vertices.clone(), self.edges.clone(), faces).expect("indices unchanged")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// An edge lies in this many faces instead of two.
    EdgeFaceCount(usize),
    /// The face's edges do not share vertices as the sides of a triangle.
    InconsistentCorners,
    IsolatedVertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub simplex: SimplexId,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid closed surface");
        }
        for v in &self.violations {
            match v.kind {
                ViolationKind::EdgeFaceCount(n) => writeln!(f, "{}: lies in {n} faces, expected 2", v.simplex)?,
                ViolationKind::InconsistentCorners => writeln!(f, "{}: edges do not form a triangle", v.simplex)?,
                ViolationKind::IsolatedVertex => writeln!(f, "{}: isolated vertex", v.simplex)?,
            }
        }
        Ok(())
    }
}
