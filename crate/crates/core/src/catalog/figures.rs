//! Transcribed nets. Each builder glues its fundamental domain, attaches the
//! notes read off the drawing, and states the facts the drawing should satisfy.

use crate::complex::{SimplexId, SimplicialSurface};
use crate::pitch::{parse_note, ChordQuality, Interval, PitchClass, PitchMultiset, PitchSet};
use crate::tonnetz::{from_edge_map, from_vertex_map, Tonnetz};

use super::net::{Lattice, NetBuilder, Pt};
use super::{ExpectedFacts, Figure, Layout, Quad};

const SQRT3_2: f64 = 0.866_025_403_784_438_6;
const HALF_SQRT2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Unit vectors of the triangular lattice.
const TRIANGULAR: [[f64; 2]; 2] = [[1.0, 0.0], [0.5, SQRT3_2]];
const SQUARE: [[f64; 2]; 2] = [[1.0, 0.0], [0.0, 1.0]];
const DIAMOND: [[f64; 2]; 2] = [[HALF_SQRT2, HALF_SQRT2], [-HALF_SQRT2, HALF_SQRT2]];

fn note(name: &str) -> PitchClass {
    parse_note(name).expect("note table is well formed")
}

fn set(names: &[&str]) -> PitchSet {
    names.iter().map(|n| note(n)).collect()
}

fn except(names: &[&str]) -> PitchSet {
    set(names).complement()
}

fn majors(roots: &[&str], times: usize) -> Vec<ChordQuality> {
    roots.iter().flat_map(|r| std::iter::repeat_n(ChordQuality::Major(note(r)), times)).collect()
}

fn minors(roots: &[&str], times: usize) -> Vec<ChordQuality> {
    roots.iter().flat_map(|r| std::iter::repeat_n(ChordQuality::Minor(note(r)), times)).collect()
}

fn sorted(mut v: Vec<ChordQuality>) -> Option<Vec<ChordQuality>> {
    v.sort();
    Some(v)
}

pub(super) fn euler() -> Figure {
    // Axial coordinates: +1 along the first axis is a fifth up, +1 along the
    // second a major third up. The gluing lattice is the kernel of 7a + 4b mod 12.
    let mut b = NetBuilder::new(Lattice::new([4, 2], [0, 3]), TRIANGULAR);
    for x in 0..4 {
        for y in 0..3 {
            b.triangle([[x, y], [x + 1, y], [x, y + 1]]);
            b.triangle([[x + 1, y], [x + 1, y + 1], [x, y + 1]]);
        }
    }
    let corner = note("Gb");
    let at = |p: Pt| corner + Interval::new(7 * p[0] + 4 * p[1]);
    let mut v = vec![None; 12];
    for x in 0..=4 {
        for y in 0..=3 {
            let id = b.vertex_id([x, y]);
            let n = at([x, y]);
            assert_eq!(*v[id].get_or_insert(n), n, "seam mismatch at {x},{y}");
        }
    }
    let v: Vec<PitchClass> = v.into_iter().map(|n| n.expect("every vertex drawn")).collect();
    let (surface, layout) = b.finish();
    let all = ["A", "Bb", "B", "C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab"];
    Figure {
        tonnetz: from_vertex_map(&surface, &v).expect("torus is closed"),
        provenance: "Euler's tonnetz on the 24-triangle torus",
        expected: ExpectedFacts {
            f_vector: (12, 36, 24),
            face_chords: sorted([majors(&all, 1), minors(&all, 1)].concat()),
            vertex_chords: vec![],
            symmetries: vec![],
        },
        layout,
        quads: vec![],
    }
}

/// The 2x2 square torus; each unit square is cut along the diagonal through
/// its corner with even coordinate sum.
fn square_torus(embed: [[f64; 2]; 2]) -> NetBuilder {
    let mut b = NetBuilder::new(Lattice::new([2, 0], [0, 2]), embed);
    for x in 0..2 {
        for y in 0..2 {
            if (x + y) % 2 == 0 {
                b.triangle([[x, y], [x + 1, y], [x + 1, y + 1]]);
                b.triangle([[x, y], [x + 1, y + 1], [x, y + 1]]);
            } else {
                b.triangle([[x, y], [x + 1, y], [x, y + 1]]);
                b.triangle([[x + 1, y], [x + 1, y + 1], [x, y + 1]]);
            }
        }
    }
    b
}

fn edge_figure(b: NetBuilder, segments: &[(Pt, Pt, &str)]) -> (Tonnetz, Layout) {
    let notes = b.edge_notes(segments);
    let (surface, layout) = b.finish();
    (from_edge_map(&surface, &notes).expect("one note per edge"), layout)
}

pub(super) fn b2() -> Figure {
    let b = square_torus(SQUARE);
    let names = [b.vertex_name([1, 1]), b.vertex_name([0, 0]), b.vertex_name([1, 0]), b.vertex_name([0, 1])];
    let (tonnetz, layout) = edge_figure(
        b,
        &[
            ([1, 1], [2, 1], "A"),
            ([0, 1], [1, 1], "E♭"),
            ([1, 1], [1, 2], "C"),
            ([1, 0], [1, 1], "F♯"),
            ([1, 1], [2, 2], "F"),
            ([0, 2], [1, 1], "A♭"),
            ([1, 1], [2, 0], "D"),
            ([0, 0], [1, 1], "B"),
            ([2, 1], [2, 2], "C"),
            ([1, 2], [2, 2], "A"),
            ([0, 2], [1, 2], "E♭"),
            ([0, 1], [0, 2], "C"),
            ([0, 0], [0, 1], "F♯"),
            ([0, 0], [1, 0], "D♯"),
            ([1, 0], [2, 0], "A"),
            ([2, 0], [2, 1], "G♭"),
        ],
    );
    let big = except(&["A♯", "C♯", "E", "G"]);
    let dim7 = set(&["A", "C", "E♭", "G♭"]);
    let [center, corner, bottom, left] = names;
    Figure {
        tonnetz,
        provenance: "major edge tonnetz of type B2 on a torus",
        expected: ExpectedFacts {
            f_vector: (4, 12, 8),
            face_chords: sorted(majors(&["F", "A♭", "B", "D"], 2)),
            vertex_chords: vec![(center, big), (corner, big), (bottom, dim7), (left, dim7)],
            symmetries: vec![(Interval::new(1), false)],
        },
        layout,
        quads: vec![],
    }
}

pub(super) fn c2() -> Figure {
    let b = square_torus(DIAMOND);
    let names = [b.vertex_name([1, 1]), b.vertex_name([0, 0]), b.vertex_name([1, 0]), b.vertex_name([0, 1])];
    let (tonnetz, layout) = edge_figure(
        b,
        &[
            ([1, 1], [2, 2], "A"),
            ([0, 2], [1, 1], "F♯"),
            ([0, 0], [1, 1], "E♭"),
            ([1, 1], [2, 0], "C"),
            ([1, 0], [1, 1], "A♭"),
            ([1, 1], [2, 1], "F"),
            ([1, 1], [1, 2], "D"),
            ([0, 1], [1, 1], "B"),
            ([2, 1], [2, 2], "D"),
            ([2, 0], [2, 1], "A♭"),
            ([1, 0], [2, 0], "F"),
            ([0, 0], [1, 0], "B"),
            ([0, 0], [0, 1], "G♯"),
            ([0, 1], [0, 2], "D"),
            ([0, 2], [1, 2], "B"),
            ([1, 2], [2, 2], "F"),
        ],
    );
    let big = except(&["A♯", "C♯", "E", "G"]);
    let dim7 = set(&["B", "D", "F", "A♭"]);
    let [center, corner, bottom, left] = names;
    Figure {
        tonnetz,
        provenance: "minor edge tonnetz of type C2 on a torus",
        expected: ExpectedFacts {
            f_vector: (4, 12, 8),
            face_chords: sorted(minors(&["D", "F", "A♭", "B"], 2)),
            vertex_chords: vec![(center, big), (corner, big), (bottom, dim7), (left, dim7)],
            symmetries: vec![],
        },
        layout,
        quads: vec![],
    }
}

/// Hexagon about the origin with corners `P_i` and side midpoints `M_i`,
/// cut into twelve triangles `(O, P_i, M_i)`, `(O, M_i, P_{i+1})`.
/// `spokes[k]` labels `O-P_{k/2}` (even k) or `O-M_{k/2}` (odd k);
/// `rim[k]` labels the outer side of triangle k.
fn hexagon(spokes: [&str; 12], rim: [&str; 12]) -> (Tonnetz, Layout, [String; 6]) {
    const P: [Pt; 6] = [[2, 0], [0, 2], [-2, 2], [-2, 0], [0, -2], [2, -2]];
    const M: [Pt; 6] = [[1, 1], [-1, 2], [-2, 1], [-1, -1], [1, -2], [2, -1]];
    const O: Pt = [0, 0];
    let mut b = NetBuilder::new(Lattice::new([2, 2], [-2, 4]), TRIANGULAR);
    let mut segments = Vec::new();
    for i in 0..6 {
        let next = P[(i + 1) % 6];
        b.triangle([O, P[i], M[i]]);
        b.triangle([O, M[i], next]);
        segments.push((O, P[i], spokes[2 * i]));
        segments.push((O, M[i], spokes[2 * i + 1]));
        segments.push((P[i], M[i], rim[2 * i]));
        segments.push((M[i], next, rim[2 * i + 1]));
    }
    let names = [O, P[0], P[1], M[0], M[1], M[2]].map(|p| b.vertex_name(p));
    let (t, layout) = edge_figure(b, &segments);
    (t, layout, names)
}

fn dim7s() -> [PitchSet; 3] {
    [set(&["A", "C", "E♭", "G♭"]), set(&["B♭", "D♭", "E", "G"]), set(&["B", "D", "F", "A♭"])]
}

/// `midpoints[i]` picks which diminished seventh sits on `M_i`.
fn g2_facts(names: [String; 6], augmented: [PitchSet; 2], midpoints: [usize; 3], faces: Vec<ChordQuality>) -> ExpectedFacts {
    let [o, p0, p1, m0, m1, m2] = names;
    let d = dim7s();
    ExpectedFacts {
        f_vector: (6, 18, 12),
        face_chords: sorted(faces),
        vertex_chords: vec![
            (o, PitchSet::ALL),
            (p0, augmented[0]),
            (p1, augmented[1]),
            (m0, d[midpoints[0]]),
            (m1, d[midpoints[1]]),
            (m2, d[midpoints[2]]),
        ],
        symmetries: vec![(Interval::new(2), true), (Interval::new(4), true), (Interval::new(6), true)],
    }
}

pub(super) fn g2() -> Figure {
    let (tonnetz, layout, names) = hexagon(
        ["D", "A", "E", "B", "F♯", "C♯", "A♭", "E♭", "B♭", "F", "C", "G"],
        ["F♯", "C", "G♯", "D", "A♯", "E", "C", "G♭", "D", "A♭", "E", "B♭"],
    );
    Figure {
        tonnetz,
        provenance: "major/minor edge tonnetz of type G2 on a torus",
        expected: g2_facts(
            names,
            [set(&["D", "F♯", "A♯"]), set(&["C", "E", "G♯"])],
            [0, 2, 1],
            [majors(&["D", "E", "F♯", "A♭", "B♭", "C"], 1), minors(&["A", "B", "C♯", "E♭", "F", "G"], 1)].concat(),
        ),
        layout,
        quads: vec![],
    }
}

pub(super) fn g2_dual() -> Figure {
    let (tonnetz, layout, names) = hexagon(
        ["A", "E", "B", "F♯", "C♯", "G♯", "E♭", "B♭", "F", "C", "G", "D"],
        ["C♯", "G", "D♯", "A", "F", "B", "G", "D♭", "A", "E♭", "B", "F"],
    );
    Figure {
        tonnetz,
        provenance: "Langlands dual major/minor edge tonnetz of type G2 on a torus",
        expected: g2_facts(
            names,
            [set(&["F", "A", "C♯"]), set(&["G", "B", "D♯"])],
            [1, 0, 2],
            [majors(&["A", "B", "D♭", "E♭", "F", "G"], 1), minors(&["D", "E", "F♯", "G♯", "B♭", "C"], 1)].concat(),
        ),
        layout,
        quads: vec![],
    }
}

/// A net triangle with one note per side. Side `i` runs from corner `i` to
/// corner `i + 1`; its note is allocated to the named corner.
struct TritoneFace {
    corners: [Pt; 3],
    sides: [(&'static str, usize); 3],
}

macro_rules! tri {
    ($a:expr, $b:expr, $c:expr; $n0:literal $r0:literal, $n1:literal $r1:literal, $n2:literal $r2:literal) => {
        TritoneFace { corners: [$a, $b, $c], sides: [($n0, $r0), ($n1, $r1), ($n2, $r2)] }
    };
}

const TRITONE1: &[TritoneFace] = &[
    tri!([0, 2], [1, 2], [0, 3]; "A" 0, "F" 1, "C" 2),
    tri!([1, 1], [2, 1], [1, 2]; "Ab" 0, "F" 1, "Db" 2),
    tri!([1, 1], [1, 2], [0, 2]; "G" 0, "Eb" 1, "Bb" 2),
    tri!([1, 2], [2, 2], [1, 3]; "A" 0, "E" 1, "C#" 2),
    tri!([1, 2], [1, 3], [0, 3]; "G" 0, "D" 1, "B" 2),
    tri!([2, 1], [2, 2], [1, 2]; "F#" 0, "D#" 1, "B" 2),
];

const TRITONE2: &[TritoneFace] = &[
    tri!([-1, 2], [0, 2], [-1, 3]; "Ab" 0, "F" 2, "Db" 0),
    tri!([-1, 3], [0, 3], [-1, 4]; "A" 1, "E" 2, "C#" 2),
    tri!([0, 1], [1, 1], [0, 2]; "A" 0, "E" 1, "C#" 2),
    tri!([0, 1], [0, 2], [-1, 2]; "G" 0, "D" 1, "B" 0),
    tri!([0, 2], [1, 2], [0, 3]; "A" 1, "F" 1, "C" 0),
    tri!([0, 2], [0, 3], [-1, 3]; "F#" 1, "D#" 2, "B" 0),
    tri!([0, 3], [1, 3], [0, 4]; "Ab" 0, "F" 1, "Db" 2),
    tri!([0, 3], [0, 4], [-1, 4]; "G" 0, "Eb" 1, "Bb" 0),
    tri!([1, 0], [2, 0], [1, 1]; "A" 0, "F" 2, "C" 0),
    tri!([1, 0], [1, 1], [0, 1]; "F#" 1, "D#" 1, "B" 2),
    tri!([1, 1], [2, 1], [1, 2]; "Ab" 1, "F" 2, "Db" 2),
    tri!([1, 1], [1, 2], [0, 2]; "G" 0, "Eb" 2, "Bb" 2),
    tri!([1, 2], [2, 2], [1, 3]; "A" 0, "E" 2, "C#" 0),
    tri!([1, 2], [1, 3], [0, 3]; "G" 1, "D" 1, "B" 2),
    tri!([1, 3], [2, 3], [1, 4]; "A" 1, "F" 2, "C" 2),
    tri!([1, 3], [1, 4], [0, 4]; "F#" 0, "D#" 2, "B" 2),
    tri!([2, 0], [3, 0], [2, 1]; "A" 1, "E" 1, "C#" 0),
    tri!([2, 0], [2, 1], [1, 1]; "G" 1, "D" 2, "B" 0),
    tri!([2, 1], [3, 1], [2, 2]; "A" 0, "F" 1, "C" 2),
    tri!([2, 1], [2, 2], [1, 2]; "F#" 0, "D#" 1, "B" 0),
    tri!([2, 2], [3, 2], [2, 3]; "Ab" 1, "F" 1, "Db" 0),
    tri!([2, 2], [2, 3], [1, 3]; "G" 1, "Eb" 2, "Bb" 0),
    tri!([3, 0], [3, 1], [2, 1]; "G" 1, "Eb" 1, "Bb" 2),
    tri!([3, 1], [3, 2], [2, 2]; "G" 0, "D" 2, "B" 2),
];

/// Glues the faces, giving each edge the two notes of its sides and each
/// vertex the notes allocated to its corners. Returns the names of `named`.
fn tritone_tonnetz(lattice: Lattice, faces: &[TritoneFace], named: &[Pt]) -> (Tonnetz, Layout, Vec<String>) {
    let mut b = NetBuilder::new(lattice, TRIANGULAR);
    for f in faces {
        b.triangle(f.corners);
    }
    let mut edge_labels = vec![PitchMultiset::new(); b.edge_count()];
    let mut vertex_labels = vec![PitchMultiset::new(); b.vertex_count()];
    let mut receivers: Vec<Vec<usize>> = vec![Vec::new(); b.edge_count()];
    let mut face_labels = Vec::new();
    for f in faces {
        let mut label = PitchMultiset::new();
        for (i, &(name, receiver)) in f.sides.iter().enumerate() {
            assert!(receiver == i || receiver == (i + 1) % 3, "note {name} given to a corner off its side");
            let n = note(name);
            let e = b.edge_id(f.corners[i], f.corners[(i + 1) % 3]).expect("side is an edge");
            let v = b.vertex_id(f.corners[receiver]);
            label.insert(n);
            edge_labels[e].insert(n);
            vertex_labels[v].insert(n);
            receivers[e].push(v);
        }
        face_labels.push(label);
    }
    let names = named.iter().map(|&p| b.vertex_name(p)).collect();
    let (surface, layout) = b.finish();
    for (e, r) in receivers.iter_mut().enumerate() {
        let mut ends = surface.edges()[e].verts.to_vec();
        r.sort();
        ends.sort();
        assert_eq!(*r, ends, "edge {e}: its two notes must go to its two ends");
    }
    let t = Tonnetz::new(surface, vertex_labels, edge_labels, face_labels).expect("label counts match");
    (t, layout, names)
}

pub(super) fn tritone1() -> Figure {
    let (tonnetz, layout, names) = tritone_tonnetz(Lattice::new([-1, 2], [1, 1]), TRITONE1, &[[1, 2], [0, 2], [1, 1]]);
    let [center, left, below]: [String; 3] = names.try_into().expect("three names");
    Figure {
        tonnetz,
        provenance: "major tonnetz with tritone edges on a 6-triangle torus",
        expected: ExpectedFacts {
            f_vector: (3, 9, 6),
            face_chords: sorted(majors(&["A", "B", "D♭", "E♭", "F", "G"], 1)),
            vertex_chords: vec![
                (center, set(&["A", "B", "D♭", "E♭", "F", "G"])),
                (left, set(&["A", "B♭", "C♯", "D", "F", "F♯"])),
                (below, set(&["G", "A♭", "B", "C", "D♯", "E"])),
            ],
            symmetries: vec![(Interval::new(2), true), (Interval::new(4), true)],
        },
        layout,
        quads: vec![],
    }
}

pub(super) fn tritone2() -> Figure {
    let (tonnetz, layout, names) =
        tritone_tonnetz(Lattice::new([-2, 4], [4, -2]), TRITONE2, &[[1, 2], [0, 0], [2, 1], [0, 1]]);
    let [petal, low, right, stick]: [String; 4] = names.try_into().expect("four names");
    Figure {
        tonnetz,
        provenance: "major tonnetz with tritone edges on a 24-triangle torus",
        expected: ExpectedFacts {
            f_vector: (12, 36, 24),
            face_chords: sorted(majors(&["A", "B", "D♭", "E♭", "F", "G"], 4)),
            vertex_chords: vec![
                (petal, set(&["A", "C♯", "F"])),
                (low, set(&["B♭", "B", "C", "D♭", "D", "D♯"])),
                (right, set(&["F♯", "G", "A♭", "A", "B♭", "B"])),
                (stick, set(&["G", "A", "B"])),
            ],
            symmetries: vec![(Interval::new(4), true)],
        },
        layout,
        quads: vec![],
    }
}

const BAUBLE_VERTICES: [&str; 14] = [
    "W", "X", "Y", "Z", "mWX", "mWY", "mWZ", "mXY", "mXZ", "mYZ", "cWXY", "cWXZ", "cWYZ", "cXYZ",
];

/// The net: each triangle as (vertex, x, y) triples.
const BAUBLE_NET: [[(&str, f64, f64); 3]; 24] = [
    [("cWXZ", 0.5, 0.0), ("W", 1.0, -0.5), ("mWX", 1.0, 0.0)],
    [("cWXZ", 0.5, 0.0), ("mWX", 1.0, 0.0), ("X", 1.0, 0.5)],
    [("W", 1.0, -0.5), ("mWX", 1.0, 0.0), ("cWXY", 1.5, 0.0)],
    [("mWX", 1.0, 0.0), ("X", 1.0, 0.5), ("cWXY", 1.5, 0.0)],
    [("X", 1.0, 0.5), ("cWXY", 1.5, 0.0), ("mXY", 1.75, 0.25)],
    [("X", 1.0, 0.5), ("cWXZ", 1.5, 1.0), ("mXZ", 1.75, 0.75)],
    [("X", 1.0, 0.5), ("mXY", 1.75, 0.25), ("cXYZ", 2.0, 0.5)],
    [("X", 1.0, 0.5), ("mXZ", 1.75, 0.75), ("cXYZ", 2.0, 0.5)],
    [("W", 1.0, 1.5), ("cWXZ", 1.5, 1.0), ("mWZ", 1.75, 1.25)],
    [("W", 1.0, 1.5), ("mWZ", 1.75, 1.25), ("cWYZ", 2.0, 1.5)],
    [("cWXY", 1.5, 0.0), ("mXY", 1.75, 0.25), ("Y", 2.5, 0.0)],
    [("cWXZ", 1.5, 1.0), ("mXZ", 1.75, 0.75), ("Z", 2.5, 1.0)],
    [("cWXZ", 1.5, 1.0), ("mWZ", 1.75, 1.25), ("Z", 2.5, 1.0)],
    [("mXY", 1.75, 0.25), ("cXYZ", 2.0, 0.5), ("Y", 2.5, 0.0)],
    [("mXZ", 1.75, 0.75), ("cXYZ", 2.0, 0.5), ("Z", 2.5, 1.0)],
    [("mWZ", 1.75, 1.25), ("cWYZ", 2.0, 1.5), ("Z", 2.5, 1.0)],
    [("cXYZ", 2.0, 0.5), ("Y", 2.5, 0.0), ("mYZ", 2.5, 0.5)],
    [("cXYZ", 2.0, 0.5), ("mYZ", 2.5, 0.5), ("Z", 2.5, 1.0)],
    [("Y", 2.5, 0.0), ("mYZ", 2.5, 0.5), ("cWYZ", 3.0, 0.5)],
    [("Y", 2.5, 0.0), ("cWYZ", 3.0, 0.5), ("mWY", 3.25, 0.25)],
    [("Y", 2.5, 0.0), ("mWY", 3.25, 0.25), ("cWXY", 3.5, 0.0)],
    [("mYZ", 2.5, 0.5), ("Z", 2.5, 1.0), ("cWYZ", 3.0, 0.5)],
    [("cWYZ", 3.0, 0.5), ("mWY", 3.25, 0.25), ("W", 4.0, 0.5)],
    [("mWY", 3.25, 0.25), ("cWXY", 3.5, 0.0), ("W", 4.0, 0.5)],
];

const BAUBLE_EDGES: [(&str, &str, &str); 36] = [
    ("W", "cWXY", "E"),
    ("W", "cWXZ", "C"),
    ("W", "cWYZ", "A♭"),
    ("W", "mWX", "G"),
    ("W", "mWY", "B"),
    ("W", "mWZ", "E♭"),
    ("X", "cWXY", "G♭"),
    ("X", "cWXZ", "G"),
    ("X", "cXYZ", "F"),
    ("X", "mWX", "A"),
    ("X", "mXY", "B♭"),
    ("X", "mXZ", "C"),
    ("Y", "cWXY", "B"),
    ("Y", "cWYZ", "B♭"),
    ("Y", "cXYZ", "A"),
    ("Y", "mWY", "D♭"),
    ("Y", "mXY", "E"),
    ("Y", "mYZ", "D"),
    ("Z", "cWXZ", "D"),
    ("Z", "cWYZ", "E♭"),
    ("Z", "cXYZ", "D♭"),
    ("Z", "mWZ", "F"),
    ("Z", "mXZ", "G♭"),
    ("Z", "mYZ", "A♭"),
    ("cWXY", "mWX", "B"),
    ("cWXY", "mWY", "G♭"),
    ("cWXY", "mXY", "A♭"),
    ("cWXZ", "mWX", "D"),
    ("cWXZ", "mWZ", "G"),
    ("cWXZ", "mXZ", "E"),
    ("cWYZ", "mWY", "E♭"),
    ("cWYZ", "mWZ", "B♭"),
    ("cWYZ", "mYZ", "C"),
    ("cXYZ", "mXY", "D♭"),
    ("cXYZ", "mXZ", "A"),
    ("cXYZ", "mYZ", "F"),
];

fn bauble_index(name: &str) -> usize {
    BAUBLE_VERTICES.iter().position(|&v| v == name).expect("known bauble vertex")
}

/// Edge between two named vertices of a complex built by `from_triangles`.
fn edge_between(s: &SimplicialSurface, a: usize, b: usize) -> usize {
    s.edges()
        .iter()
        .position(|e| e.verts == [a.min(b), a.max(b)])
        .expect("vertices are adjacent")
}

pub(super) fn bauble() -> Figure {
    let names = BAUBLE_VERTICES.iter().map(|s| s.to_string()).collect();
    let triangles: Vec<[usize; 3]> = BAUBLE_NET.iter().map(|t| t.map(|(n, _, _)| bauble_index(n))).collect();
    let surface = SimplicialSurface::from_triangles(names, &triangles).expect("net is well formed");
    let mut notes = vec![None; surface.edge_count()];
    for (a, b, n) in BAUBLE_EDGES {
        let e = edge_between(&surface, bauble_index(a), bauble_index(b));
        assert!(notes[e].replace(note(n)).is_none(), "edge {a}-{b} listed twice");
    }
    let notes: Vec<PitchClass> = notes.into_iter().map(|n| n.expect("every edge named")).collect();
    let layout = Layout { faces: BAUBLE_NET.iter().map(|t| t.map(|(_, x, y)| [x, y])).collect() };
    let mut quads = Vec::new();
    for corner in ["W", "X", "Y", "Z"] {
        for other in ["W", "X", "Y", "Z"] {
            if corner == other {
                continue;
            }
            let pair: String = {
                let mut p = [corner, other];
                p.sort();
                p.concat()
            };
            let diagonal = edge_between(&surface, bauble_index(corner), bauble_index(&format!("m{pair}")));
            let faces = surface.cofaces(SimplexId::edge(diagonal));
            quads.push(Quad { faces: [faces[0].index, faces[1].index], diagonal });
        }
    }
    Figure {
        tonnetz: from_edge_map(&surface, &notes).expect("one note per edge"),
        provenance: "jazz bauble: edge tonnetz on a subdivided tetrahedron",
        expected: ExpectedFacts {
            f_vector: (14, 36, 24),
            face_chords: None,
            vertex_chords: vec![],
            symmetries: vec![(Interval::new(4), true)],
        },
        layout,
        quads,
    }
}

pub(super) fn tetra_dim() -> Figure {
    let surface = SimplicialSurface::tetrahedron();
    let v = ["C", "E♭", "F♯", "A"].map(note);
    let r = SQRT3_2;
    let layout = Layout {
        faces: vec![
            [[0.0, 0.0], [1.0, 0.0], [0.5, r]],
            [[0.0, 0.0], [1.0, 0.0], [0.5, -r]],
            [[0.0, 0.0], [0.5, r], [-0.5, r]],
            [[1.0, 0.0], [0.5, r], [1.5, r]],
        ],
    };
    Figure {
        tonnetz: from_vertex_map(&surface, &v).expect("tetrahedron is closed"),
        provenance: "diminished vertex tonnetz on the tetrahedron",
        expected: ExpectedFacts {
            f_vector: (4, 6, 4),
            face_chords: sorted(["C", "E♭", "F♯", "A"].iter().map(|r| ChordQuality::Diminished(note(r))).collect()),
            vertex_chords: (0..4).map(|i| (format!("t{i}"), std::iter::once(v[i]).collect())).collect(),
            symmetries: vec![(Interval::new(3), true)],
        },
        layout,
        quads: vec![],
    }
}
