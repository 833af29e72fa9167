//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::Rng;
use tonnetz::tonnetz::Direction;
use tonnetz::{PitchClass, PitchMultiset, SimplexId, SimplicialSurface, Tonnetz};

/// Neighbour slots read straight off the raw incidence lists.
pub fn slots(s: &SimplicialSurface, id: SimplexId, dir: Direction) -> Vec<SimplexId> {
    use tonnetz::Dim::*;
    match (id.dim, dir) {
        (Edge, Direction::Downward) => s.edges()[id.index].verts.iter().map(|&v| SimplexId::vertex(v)).collect(),
        (Face, Direction::Downward) => s.faces()[id.index].edges.iter().map(|&e| SimplexId::edge(e)).collect(),
        (Vertex, Direction::Upward) => s
            .edges()
            .iter()
            .enumerate()
            .flat_map(|(i, e)| e.verts.iter().filter(|&&v| v == id.index).map(move |_| SimplexId::edge(i)))
            .collect(),
        (Edge, Direction::Upward) => s
            .faces()
            .iter()
            .enumerate()
            .flat_map(|(i, f)| f.edges.iter().filter(|&&e| e == id.index).map(move |_| SimplexId::face(i)))
            .collect(),
        _ => Vec::new(),
    }
}

pub fn conditions(s: &SimplicialSurface) -> Vec<(SimplexId, Direction)> {
    let mut out = Vec::new();
    for i in 0..s.vertex_count() {
        out.push((SimplexId::vertex(i), Direction::Upward));
    }
    for i in 0..s.edge_count() {
        out.push((SimplexId::edge(i), Direction::Downward));
        out.push((SimplexId::edge(i), Direction::Upward));
    }
    for i in 0..s.face_count() {
        out.push((SimplexId::face(i), Direction::Downward));
    }
    out
}

/// Exhaustive search for a bijection between slots and label elements.
pub fn feasible(t: &Tonnetz, id: SimplexId, dir: Direction) -> bool {
    let slots = slots(t.surface(), id, dir);
    let label = t.label(id);
    if slots.len() != label.order() {
        return false;
    }
    let mut counts = [0u32; 12];
    for (p, n) in label.counts() {
        counts[p.value() as usize] = n as u32;
    }
    let allowed: Vec<[bool; 12]> = slots
        .iter()
        .map(|&s| {
            let l = t.label(s);
            std::array::from_fn(|p| l.count(PitchClass::new(p as i64)) > 0)
        })
        .collect();
    let mut dead = HashSet::new();
    search(0, &mut counts, &allowed, &mut dead)
}

fn search(i: usize, counts: &mut [u32; 12], allowed: &[[bool; 12]], dead: &mut HashSet<(usize, [u32; 12])>) -> bool {
    if i == allowed.len() {
        return true;
    }
    if dead.contains(&(i, *counts)) {
        return false;
    }
    for p in 0..12 {
        if counts[p] > 0 && allowed[i][p] {
            counts[p] -= 1;
            let ok = search(i + 1, counts, allowed, dead);
            counts[p] += 1;
            if ok {
                return true;
            }
        }
    }
    dead.insert((i, *counts));
    false
}

pub fn failures(t: &Tonnetz) -> BTreeSet<(SimplexId, Direction)> {
    conditions(t.surface()).into_iter().filter(|&(id, d)| !feasible(t, id, d)).collect()
}

/// Compares `verify` with the oracle condition by condition.
pub fn agrees(t: &Tonnetz) -> Result<(), String> {
    let want = failures(t);
    let valid = t.surface().validate().is_valid();
    match tonnetz::verify(t) {
        Ok(w) => {
            if !want.is_empty() || !valid {
                return Err(format!("verify accepted, oracle rejects {want:?}"));
            }
            if !w.check(t) {
                return Err("witness does not check".into());
            }
        }
        Err(f) => {
            let got: BTreeSet<_> = f.infeasible.iter().map(|i| (i.simplex, i.direction)).collect();
            if got != want || f.invalid_surface.is_some() == valid {
                return Err(format!("verify rejects {got:?}, oracle rejects {want:?}"));
            }
        }
    }
    Ok(())
}

pub fn random_multiset(rng: &mut impl Rng, order: usize) -> PitchMultiset {
    (0..order).map(|_| PitchClass::new(rng.gen_range(0..12))).collect()
}

/// Replaces one label with a random multiset, usually of the same order.
pub fn perturb(t: &Tonnetz, rng: &mut impl Rng) -> Tonnetz {
    let s = t.surface();
    let ids: Vec<SimplexId> = s.simplices().collect();
    let id = ids[rng.gen_range(0..ids.len())];
    let order = t.label(id).order();
    let order = match rng.gen_range(0..10) {
        0 => order + 1,
        1 => order.saturating_sub(1),
        _ => order,
    };
    let mut out = t.clone();
    out.set_label(id, random_multiset(rng, order));
    out
}
