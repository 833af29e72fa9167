//! Pitch classes mod 12 (A = 0), intervals, multisets and chord qualities.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

const FLAT_ASCII: [&str; 12] = ["A", "Bb", "B", "C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab"];
const FLAT_UNICODE: [&str; 12] = ["A", "B♭", "B", "C", "D♭", "D", "E♭", "E", "F", "G♭", "G", "A♭"];

/// How note names are printed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NoteStyle {
    #[default]
    Ascii,
    Unicode,
}

/// A pitch class: semitones above A, reduced mod 12.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PitchClass(u8);

impl PitchClass {
    pub const A: PitchClass = PitchClass(0);
    pub const C: PitchClass = PitchClass(3);

    pub fn new(value: i64) -> Self {
        PitchClass(value.rem_euclid(12) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = PitchClass> {
        (0..12).map(PitchClass)
    }

    /// Flats-preferred spelling.
    pub fn spell(self, style: NoteStyle) -> &'static str {
        match style {
            NoteStyle::Ascii => FLAT_ASCII[self.0 as usize],
            NoteStyle::Unicode => FLAT_UNICODE[self.0 as usize],
        }
    }

    pub fn transpose(self, k: Interval) -> Self {
        self + k
    }
}

impl fmt::Display for PitchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let style = if f.alternate() { NoteStyle::Unicode } else { NoteStyle::Ascii };
        f.write_str(self.spell(style))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed note name `{token}`: {reason}")]
pub struct ParseNoteError {
    pub token: String,
    pub reason: &'static str,
}

/// Parses a letter A-G followed by any number of accidentals
/// (`#`, `♯`, `s` raise; `b`, `♭`, `f` lower).
pub fn parse_note(name: &str) -> Result<PitchClass, ParseNoteError> {
    let err = |reason| ParseNoteError { token: name.to_string(), reason };
    let mut chars = name.trim().chars();
    let base: i64 = match chars.next() {
        Some('A') => 0,
        Some('B') => 2,
        Some('C') => 3,
        Some('D') => 5,
        Some('E') => 7,
        Some('F') => 8,
        Some('G') => 10,
        Some(_) => return Err(err("expected a letter A-G")),
        None => return Err(err("empty name")),
    };
    let mut shift = 0i64;
    for c in chars {
        match c {
            '#' | '♯' | 's' => shift += 1,
            'b' | '♭' | 'f' => shift -= 1,
            _ => return Err(err("unknown accidental")),
        }
    }
    Ok(PitchClass::new(base + shift))
}

impl FromStr for PitchClass {
    type Err = ParseNoteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_note(s)
    }
}

impl Serialize for PitchClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.spell(NoteStyle::Ascii))
    }
}

impl<'de> Deserialize<'de> for PitchClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_note(&s).map_err(serde::de::Error::custom)
    }
}

/// A transposition amount, mod 12.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval(u8);

impl Interval {
    pub const UNISON: Interval = Interval(0);

    pub fn new(semitones: i64) -> Self {
        Interval(semitones.rem_euclid(12) as u8)
    }

    pub fn semitones(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = Interval> {
        (0..12).map(Interval)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "+{}", self.0)
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        Interval((self.0 + rhs.0) % 12)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval((12 - self.0) % 12)
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        self + -rhs
    }
}

impl Add<Interval> for PitchClass {
    type Output = PitchClass;
    fn add(self, rhs: Interval) -> PitchClass {
        PitchClass((self.0 + rhs.0) % 12)
    }
}

impl AddAssign<Interval> for PitchClass {
    fn add_assign(&mut self, rhs: Interval) {
        *self = *self + rhs;
    }
}

impl Sub<Interval> for PitchClass {
    type Output = PitchClass;
    fn sub(self, rhs: Interval) -> PitchClass {
        self + -rhs
    }
}

impl Sub for PitchClass {
    type Output = Interval;
    fn sub(self, rhs: PitchClass) -> Interval {
        Interval::new(self.0 as i64 - rhs.0 as i64)
    }
}

/// A set of pitch classes, stored as a 12-bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PitchSet(u16);

impl PitchSet {
    pub const EMPTY: PitchSet = PitchSet(0);
    pub const ALL: PitchSet = PitchSet(0xfff);

    pub fn from_bits(bits: u16) -> Self {
        PitchSet(bits & 0xfff)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn contains(self, p: PitchClass) -> bool {
        self.0 & (1 << p.0) != 0
    }

    pub fn insert(&mut self, p: PitchClass) {
        self.0 |= 1 << p.0;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: PitchSet) -> PitchSet {
        PitchSet(self.0 | other.0)
    }

    pub fn complement(self) -> PitchSet {
        PitchSet(!self.0 & 0xfff)
    }

    /// Ascending by residue.
    pub fn iter(self) -> impl Iterator<Item = PitchClass> {
        PitchClass::all().filter(move |&p| self.contains(p))
    }

    pub fn transpose(self, k: Interval) -> PitchSet {
        let s = k.0 as u32;
        let m = self.0 as u32;
        PitchSet((((m << s) | (m >> (12 - s))) & 0xfff) as u16)
    }

    pub fn classify(self) -> ChordQuality {
        classify_support(self)
    }
}

impl FromIterator<PitchClass> for PitchSet {
    fn from_iter<I: IntoIterator<Item = PitchClass>>(iter: I) -> Self {
        let mut s = PitchSet::EMPTY;
        for p in iter {
            s.insert(p);
        }
        s
    }
}

impl fmt::Display for PitchSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, self.iter())
    }
}

impl Serialize for PitchSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for PitchSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let notes = Vec::<PitchClass>::deserialize(d)?;
        Ok(notes.into_iter().collect())
    }
}

fn write_braced(f: &mut fmt::Formatter<'_>, notes: impl Iterator<Item = PitchClass>) -> fmt::Result {
    let unicode = f.alternate();
    f.write_str("{")?;
    for (i, p) in notes.enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        if unicode {
            write!(f, "{p:#}")?;
        } else {
            write!(f, "{p}")?;
        }
    }
    f.write_str("}")
}

/// A finite multiset of pitch classes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PitchMultiset {
    counts: [u32; 12],
}

impl PitchMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pitches<I: IntoIterator<Item = PitchClass>>(pitches: I) -> Self {
        pitches.into_iter().collect()
    }

    pub fn repeated(p: PitchClass, n: usize) -> Self {
        let mut m = Self::new();
        m.counts[p.0 as usize] = n as u32;
        m
    }

    /// Parses a list of note names.
    pub fn parse<S: AsRef<str>>(names: &[S]) -> Result<Self, ParseNoteError> {
        names.iter().map(|n| parse_note(n.as_ref())).collect()
    }

    pub fn insert(&mut self, p: PitchClass) {
        self.counts[p.0 as usize] += 1;
    }

    /// Removes one copy of `p`; returns false if absent.
    pub fn remove(&mut self, p: PitchClass) -> bool {
        let c = &mut self.counts[p.0 as usize];
        if *c == 0 {
            return false;
        }
        *c -= 1;
        true
    }

    pub fn count(&self, p: PitchClass) -> usize {
        self.counts[p.0 as usize] as usize
    }

    /// Total multiplicity, `|C|`.
    pub fn order(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.order() == 0
    }

    /// The underlying set, `[C]`.
    pub fn support(&self) -> PitchSet {
        PitchClass::all().filter(|p| self.count(*p) > 0).collect()
    }

    /// Elements in ascending order, repeated by multiplicity.
    pub fn elements(&self) -> Vec<PitchClass> {
        PitchClass::all()
            .flat_map(|p| std::iter::repeat_n(p, self.count(p)))
            .collect()
    }

    /// Distinct elements with multiplicities, ascending.
    pub fn counts(&self) -> impl Iterator<Item = (PitchClass, usize)> + '_ {
        PitchClass::all().map(|p| (p, self.count(p))).filter(|&(_, c)| c > 0)
    }

    pub fn transpose(&self, k: Interval) -> Self {
        let mut out = Self::new();
        for (p, c) in self.counts() {
            out.counts[(p + k).0 as usize] = c as u32;
        }
        out
    }

    pub fn sum(&self, other: &PitchMultiset) -> Self {
        let mut out = *self;
        for i in 0..12 {
            out.counts[i] += other.counts[i];
        }
        out
    }

    pub fn names(&self, style: NoteStyle) -> Vec<&'static str> {
        self.elements().into_iter().map(|p| p.spell(style)).collect()
    }
}

impl FromIterator<PitchClass> for PitchMultiset {
    fn from_iter<I: IntoIterator<Item = PitchClass>>(iter: I) -> Self {
        let mut m = PitchMultiset::new();
        for p in iter {
            m.insert(p);
        }
        m
    }
}

impl fmt::Display for PitchMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, self.elements().into_iter())
    }
}

impl Serialize for PitchMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.elements())
    }
}

impl<'de> Deserialize<'de> for PitchMultiset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let notes = Vec::<PitchClass>::deserialize(d)?;
        Ok(notes.into_iter().collect())
    }
}

/// Shifts every element by `k`.
pub fn transpose(chord: &PitchMultiset, k: Interval) -> PitchMultiset {
    chord.transpose(k)
}

/// Chord quality of the support of `chord`.
pub fn classify(chord: &PitchMultiset) -> ChordQuality {
    chord.support().classify()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "quality", content = "root", rename_all = "snake_case")]
pub enum ChordQuality {
    Major(PitchClass),
    Minor(PitchClass),
    Diminished(PitchClass),
    Augmented(PitchClass),
    DiminishedSeventh(PitchClass),
    MajorNinth(PitchClass),
    WholeToneTriple(PitchClass),
    Unison(PitchClass),
    Other,
}

const MAJOR: u16 = 0b000010010001;
const MINOR: u16 = 0b000010001001;
const DIMINISHED: u16 = 0b000001001001;
const AUGMENTED: u16 = 0b000100010001;
const DIM_SEVENTH: u16 = 0b001001001001;
const MAJOR_NINTH: u16 = 0b100010010101;
const WHOLE_TONE_TRIPLE: u16 = 0b000000010101;

type Rooted = fn(PitchClass) -> ChordQuality;

fn classify_support(s: PitchSet) -> ChordQuality {
    use ChordQuality::*;
    let rooted: [(u16, Rooted); 7] = [
        (MAJOR, Major),
        (MINOR, Minor),
        (DIMINISHED, Diminished),
        (AUGMENTED, Augmented),
        (DIM_SEVENTH, DiminishedSeventh),
        (MAJOR_NINTH, MajorNinth),
        (WHOLE_TONE_TRIPLE, WholeToneTriple),
    ];
    for (pattern, tag) in rooted {
        // Members are tried in ascending order, so symmetric chords get the least root.
        if let Some(root) = s.iter().find(|&r| PitchSet(pattern).transpose(r - PitchClass::A) == s) {
            return tag(root);
        }
    }
    match s.len() {
        1 => Unison(s.iter().next().unwrap_or(PitchClass::A)),
        _ => Other,
    }
}

impl ChordQuality {
    pub fn root(self) -> Option<PitchClass> {
        use ChordQuality::*;
        match self {
            Major(r) | Minor(r) | Diminished(r) | Augmented(r) | DiminishedSeventh(r) | MajorNinth(r)
            | WholeToneTriple(r) | Unison(r) => Some(r),
            Other => None,
        }
    }

    pub fn is_major(self) -> bool {
        matches!(self, ChordQuality::Major(_))
    }

    pub fn is_minor(self) -> bool {
        matches!(self, ChordQuality::Minor(_))
    }

    pub fn kind_name(self) -> &'static str {
        use ChordQuality::*;
        match self {
            Major(_) => "major",
            Minor(_) => "minor",
            Diminished(_) => "diminished",
            Augmented(_) => "augmented",
            DiminishedSeventh(_) => "diminished seventh",
            MajorNinth(_) => "major ninth",
            WholeToneTriple(_) => "whole-tone",
            Unison(_) => "unison",
            Other => "other",
        }
    }

    /// Transposes the root, re-canonicalising symmetric chords.
    pub fn transpose(self, k: Interval) -> ChordQuality {
        use ChordQuality::*;
        match self {
            Major(r) => Major(r + k),
            Minor(r) => Minor(r + k),
            Diminished(r) => Diminished(r + k),
            Augmented(r) => Augmented(PitchClass::new(((r + k).0 % 4) as i64)),
            DiminishedSeventh(r) => DiminishedSeventh(PitchClass::new(((r + k).0 % 3) as i64)),
            MajorNinth(r) => MajorNinth(r + k),
            WholeToneTriple(r) => WholeToneTriple(r + k),
            Unison(r) => Unison(r + k),
            Other => Other,
        }
    }

    /// Root residue first, then quality.
    pub fn sort_key(self) -> (u8, ChordQuality) {
        (self.root().map_or(12, |r| r.0), self)
    }
}

impl fmt::Display for ChordQuality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root() {
            Some(r) if f.alternate() => write!(f, "{r:#} {}", self.kind_name()),
            Some(r) => write!(f, "{r} {}", self.kind_name()),
            None => f.write_str("other"),
        }
    }
}
