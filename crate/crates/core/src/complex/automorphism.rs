use serde::Serialize;

use super::{Dim, SimplexId, SimplicialSurface};

/// An incidence-preserving relabelling of a surface's simplices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ComplexAutomorphism {
    pub vertex_perm: Vec<usize>,
    pub edge_perm: Vec<usize>,
    pub face_perm: Vec<usize>,
}

impl ComplexAutomorphism {
    pub fn identity(s: &SimplicialSurface) -> Self {
        ComplexAutomorphism {
            vertex_perm: (0..s.vertex_count()).collect(),
            edge_perm: (0..s.edge_count()).collect(),
            face_perm: (0..s.face_count()).collect(),
        }
    }

    pub fn apply(&self, id: SimplexId) -> SimplexId {
        let perm = match id.dim {
            Dim::Vertex => &self.vertex_perm,
            Dim::Edge => &self.edge_perm,
            Dim::Face => &self.face_perm,
        };
        SimplexId { dim: id.dim, index: perm[id.index] }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let c = |a: &[usize], b: &[usize]| b.iter().map(|&i| a[i]).collect();
        ComplexAutomorphism {
            vertex_perm: c(&self.vertex_perm, &other.vertex_perm),
            edge_perm: c(&self.edge_perm, &other.edge_perm),
            face_perm: c(&self.face_perm, &other.face_perm),
        }
    }

    pub fn inverse(&self) -> Self {
        let inv = |p: &[usize]| {
            let mut out = vec![0; p.len()];
            for (i, &j) in p.iter().enumerate() {
                out[j] = i;
            }
            out
        };
        ComplexAutomorphism {
            vertex_perm: inv(&self.vertex_perm),
            edge_perm: inv(&self.edge_perm),
            face_perm: inv(&self.face_perm),
        }
    }

    pub fn is_identity(&self) -> bool {
        let id = |p: &[usize]| p.iter().enumerate().all(|(i, &j)| i == j);
        id(&self.vertex_perm) && id(&self.edge_perm) && id(&self.face_perm)
    }

    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut n = 1;
        while !power.is_identity() {
            power = power.compose(self);
            n += 1;
        }
        n
    }

    /// Checks bijectivity and that every facet slot maps onto a facet slot.
    pub fn is_automorphism_of(&self, s: &SimplicialSurface) -> bool {
        let is_perm = |p: &[usize], n: usize| {
            let mut seen = vec![false; n];
            p.len() == n && p.iter().all(|&j| j < n && !std::mem::replace(&mut seen[j], true))
        };
        if !is_perm(&self.vertex_perm, s.vertex_count())
            || !is_perm(&self.edge_perm, s.edge_count())
            || !is_perm(&self.face_perm, s.face_count())
        {
            return false;
        }
        s.simplices().all(|id| {
            let mut want: Vec<SimplexId> = s.facets(id).iter().map(|&t| self.apply(t)).collect();
            let mut got = s.facets(self.apply(id));
            want.sort();
            got.sort();
            want == got
        })
    }
}

/// All automorphisms (or the first `limit`), identity included.
pub fn find_automorphisms(s: &SimplicialSurface, limit: Option<usize>) -> Vec<ComplexAutomorphism> {
    find_automorphisms_with(s, limit, |_, _| true)
}

/// Automorphisms `φ` with `compatible(σ, φ(σ))` for every simplex.
///
/// The search treats the incidence poset as a graph with slot multiplicities,
/// fixes the image of face 0 and extends outward breadth-first.
pub fn find_automorphisms_with<F>(s: &SimplicialSurface, limit: Option<usize>, compatible: F) -> Vec<ComplexAutomorphism>
where
    F: Fn(SimplexId, SimplexId) -> bool,
{
    let g = IncidenceGraph::new(s);
    let n = g.ids.len();
    let mut search = Search {
        g: &g,
        compatible: &compatible,
        map: vec![usize::MAX; n],
        inv: vec![usize::MAX; n],
        found: Vec::new(),
        limit: limit.unwrap_or(usize::MAX),
    };
    if n == 0 {
        return vec![ComplexAutomorphism::identity(s)];
    }
    if search.limit > 0 {
        search.extend(0);
    }
    search.found.into_iter().map(|map| g.to_automorphism(s, &map)).collect()
}

struct IncidenceGraph {
    ids: Vec<SimplexId>,
    /// Neighbours with slot multiplicity.
    adj: Vec<Vec<(usize, u8)>>,
    mult: Vec<Vec<u8>>,
    degree: Vec<usize>,
    /// Visit order: breadth-first from face 0.
    order: Vec<usize>,
    /// For each node, an earlier neighbour in `order`, if any.
    anchor: Vec<Option<usize>>,
}

impl IncidenceGraph {
    fn new(s: &SimplicialSurface) -> Self {
        let ids: Vec<SimplexId> = s.simplices().collect();
        let node = |id: SimplexId| match id.dim {
            Dim::Vertex => id.index,
            Dim::Edge => s.vertex_count() + id.index,
            Dim::Face => s.vertex_count() + s.edge_count() + id.index,
        };
        let n = ids.len();
        let mut mult = vec![vec![0u8; n]; n];
        for &id in &ids {
            for t in s.facets(id) {
                let (a, b) = (node(id), node(t));
                mult[a][b] += 1;
                mult[b][a] += 1;
            }
        }
        let adj: Vec<Vec<(usize, u8)>> = (0..n)
            .map(|a| (0..n).filter(|&b| mult[a][b] > 0).map(|b| (b, mult[a][b])).collect())
            .collect();
        let degree = adj.iter().map(|l| l.iter().map(|&(_, m)| m as usize).sum()).collect();

        let mut order = Vec::with_capacity(n);
        let mut anchor = vec![None; n];
        let mut placed = vec![false; n];
        let starts = ids.iter().position(|id| id.dim == Dim::Face).into_iter().chain(0..n);
        for start in starts {
            if placed[start] {
                continue;
            }
            placed[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                order.push(x);
                for &(y, _) in &adj[x] {
                    if !placed[y] {
                        placed[y] = true;
                        anchor[y] = Some(x);
                        queue.push_back(y);
                    }
                }
            }
        }
        IncidenceGraph { ids, adj, mult, degree, order, anchor }
    }

    fn to_automorphism(&self, s: &SimplicialSurface, map: &[usize]) -> ComplexAutomorphism {
        let mut a = ComplexAutomorphism::identity(s);
        for (x, &y) in map.iter().enumerate() {
            let (from, to) = (self.ids[x], self.ids[y]);
            match from.dim {
                Dim::Vertex => a.vertex_perm[from.index] = to.index,
                Dim::Edge => a.edge_perm[from.index] = to.index,
                Dim::Face => a.face_perm[from.index] = to.index,
            }
        }
        a
    }
}

struct Search<'a, F> {
    g: &'a IncidenceGraph,
    compatible: &'a F,
    map: Vec<usize>,
    inv: Vec<usize>,
    found: Vec<Vec<usize>>,
    limit: usize,
}

impl<F: Fn(SimplexId, SimplexId) -> bool> Search<'_, F> {
    fn extend(&mut self, depth: usize) {
        let g = self.g;
        if depth == g.order.len() {
            self.found.push(self.map.clone());
            return;
        }
        let x = g.order[depth];
        let candidates: Vec<usize> = match g.anchor[x] {
            Some(a) => g.adj[self.map[a]].iter().map(|&(y, _)| y).collect(),
            None => (0..g.ids.len()).collect(),
        };
        for y in candidates {
            if self.inv[y] != usize::MAX
                || g.ids[y].dim != g.ids[x].dim
                || g.degree[y] != g.degree[x]
                || !self.consistent(x, y)
                || !(self.compatible)(g.ids[x], g.ids[y])
            {
                continue;
            }
            self.map[x] = y;
            self.inv[y] = x;
            self.extend(depth + 1);
            self.map[x] = usize::MAX;
            self.inv[y] = usize::MAX;
            if self.found.len() >= self.limit {
                return;
            }
        }
    }

    fn consistent(&self, x: usize, y: usize) -> bool {
        let g = self.g;
        let forward = g.adj[x].iter().all(|&(n, m)| self.map[n] == usize::MAX || g.mult[self.map[n]][y] == m);
        let backward = g.adj[y].iter().all(|&(w, m)| self.inv[w] == usize::MAX || g.mult[self.inv[w]][x] == m);
        forward && backward
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn tetrahedron_group_is_s4() {
        let t = SimplicialSurface::tetrahedron();
        let found = find_automorphisms(&t, None);
        assert_eq!(found.len(), 24);
        // Independent count: vertex permutations that carry edges to edges and faces to faces.
        let edge_sets: HashSet<Vec<usize>> = t.edges().iter().map(|e| { let mut v = e.verts.to_vec(); v.sort(); v }).collect();
        let brute = permutations(4)
            .into_iter()
            .filter(|p| edge_sets.iter().all(|e| { let mut v: Vec<usize> = e.iter().map(|&i| p[i]).collect(); v.sort(); edge_sets.contains(&v) }))
            .count();
        assert_eq!(brute, 24);
        assert!(found.iter().all(|a| a.is_automorphism_of(&t)));
    }

    #[test]
    fn identity_is_always_found() {
        let t = SimplicialSurface::tetrahedron();
        assert!(find_automorphisms(&t, None).iter().any(|a| a.is_identity()));
        assert_eq!(find_automorphisms(&t, Some(1)).len(), 1);
    }

    #[test]
    fn full_group_is_closed() {
        let t = SimplicialSurface::tetrahedron();
        let group: HashSet<ComplexAutomorphism> = find_automorphisms(&t, None).into_iter().collect();
        for a in &group {
            assert!(group.contains(&a.inverse()));
            for b in &group {
                assert!(group.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn orders_divide_group_order() {
        let t = SimplicialSurface::tetrahedron();
        let orders: HashSet<usize> = find_automorphisms(&t, None).iter().map(|a| a.order()).collect();
        assert_eq!(orders, HashSet::from([1, 2, 3, 4]));
    }

    #[test]
    fn constraint_prunes() {
        let t = SimplicialSurface::tetrahedron();
        let fix_t0 = find_automorphisms_with(&t, None, |a, b| a.dim != Dim::Vertex || a.index != 0 || b.index == 0);
        assert_eq!(fix_t0.len(), 6);
    }
}
