mod common;

use tonnetz::catalog::{build, CatalogKey};
use tonnetz::report::completeness;
use tonnetz::tonnetz::{find_transposition_symmetry, transpose_tonnetz};
use tonnetz::{ChordQuality, Interval, PitchClass, Tonnetz};

fn t(key: CatalogKey) -> Tonnetz {
    build(key).unwrap().tonnetz
}

fn chords(t: &Tonnetz) -> Vec<ChordQuality> {
    let mut c = t.face_chords();
    c.sort();
    c
}

fn symmetric_intervals(t: &Tonnetz) -> Vec<u8> {
    Interval::all().filter(|&k| find_transposition_symmetry(t, k).is_some()).map(|k| k.semitones()).collect()
}

#[test]
fn every_entry_agrees_with_the_oracle() {
    for key in CatalogKey::ALL {
        common::agrees(&t(key)).unwrap_or_else(|e| panic!("{key}: {e}"));
    }
}

#[test]
fn euler_characteristics() {
    for key in CatalogKey::ALL {
        let chi = t(key).surface().euler_characteristic();
        let sphere = matches!(key, CatalogKey::Bauble | CatalogKey::TetraDim);
        assert_eq!(chi, if sphere { 2 } else { 0 }, "{key}");
    }
}

#[test]
fn relative_keys_are_transposes() {
    for (base, up, down) in [
        (CatalogKey::B2, CatalogKey::B2Up2, CatalogKey::B2Down2),
        (CatalogKey::C2, CatalogKey::C2Up2, CatalogKey::C2Down2),
    ] {
        assert_eq!(t(up), transpose_tonnetz(&t(base), Interval::new(2)));
        assert_eq!(t(down), transpose_tonnetz(&t(base), Interval::new(-2)));
    }
}

#[test]
fn b2_family_covers_every_major_twice() {
    let ts = [t(CatalogKey::B2), t(CatalogKey::B2Up2), t(CatalogKey::B2Down2)];
    let c = completeness(&ts.iter().collect::<Vec<_>>());
    assert!(c.all_majors && !c.all_minors);
    assert_eq!(c.chords.len(), 12);
    assert!(c.chords.iter().all(|&(_, n)| n == 2));
    let ts = [t(CatalogKey::C2), t(CatalogKey::C2Up2), t(CatalogKey::C2Down2)];
    let c = completeness(&ts.iter().collect::<Vec<_>>());
    assert!(c.all_minors && !c.all_majors);
}

#[test]
fn tritone1_and_its_semitone_shift_cover_the_majors() {
    let a = t(CatalogKey::Tritone1);
    let b = transpose_tonnetz(&a, Interval::new(1));
    let c = completeness(&[&a, &b]);
    assert!(c.all_majors);
    assert_eq!(c.chords.len(), 12);
}

#[test]
fn tritone2_repeats_tritone1_four_times() {
    let one = chords(&t(CatalogKey::Tritone1));
    let mut four: Vec<ChordQuality> = one.iter().flat_map(|&c| [c; 4]).collect();
    four.sort();
    assert_eq!(chords(&t(CatalogKey::Tritone2)), four);
}

#[test]
fn g2_dual_swaps_major_and_minor_roots() {
    let g2 = chords(&t(CatalogKey::G2));
    let dual = chords(&t(CatalogKey::G2Dual));
    let roots = |cs: &[ChordQuality], f: fn(ChordQuality) -> bool| -> Vec<PitchClass> {
        let mut r: Vec<_> = cs.iter().filter(|c| f(**c)).filter_map(|c| c.root()).collect();
        r.sort();
        r
    };
    assert_eq!(roots(&dual, ChordQuality::is_major), roots(&g2, ChordQuality::is_minor));
    assert_eq!(roots(&dual, ChordQuality::is_minor), roots(&g2, ChordQuality::is_major));
}

// Derived by exhaustive search over all twelve intervals.
#[test]
fn transposition_symmetry_spectra() {
    assert_eq!(symmetric_intervals(&t(CatalogKey::B2)), [0, 3, 6, 9]);
    assert_eq!(symmetric_intervals(&t(CatalogKey::C2)), [0, 3, 6, 9]);
    assert_eq!(symmetric_intervals(&t(CatalogKey::G2)), [0, 2, 4, 6, 8, 10]);
    assert_eq!(symmetric_intervals(&t(CatalogKey::Tritone1)), [0, 2, 4, 6, 8, 10]);
    assert_eq!(symmetric_intervals(&t(CatalogKey::Tritone2)), [0, 4, 8]);
    assert_eq!(symmetric_intervals(&t(CatalogKey::Bauble)), [0, 4, 8]);
    assert_eq!(symmetric_intervals(&t(CatalogKey::Euler)).len(), 12);
}

#[test]
fn b2_quarter_turn_is_a_minor_third() {
    let a = find_transposition_symmetry(&t(CatalogKey::B2), Interval::new(3)).unwrap();
    assert_eq!(a.order(), 4);
}

#[test]
fn provenance_and_layout_present() {
    for key in CatalogKey::ALL {
        let e = build(key).unwrap();
        assert!(!e.provenance.is_empty());
        assert_eq!(e.layout.faces.len(), e.tonnetz.surface().face_count());
        assert!(e.layout.faces.iter().flatten().flatten().all(|x| x.is_finite()));
    }
}
