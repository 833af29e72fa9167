//! Generalized tonnetzes: closed triangulated surfaces whose simplices carry
//! multisets of pitch classes, subject to downward and upward coherence.

pub mod catalog;
pub mod complex;
pub mod io;
pub mod pitch;
pub mod report;
pub mod tonnetz;

pub use complex::{ComplexAutomorphism, Dim, SimplexId, SimplicialSurface};
pub use pitch::{classify, parse_note, ChordQuality, Interval, NoteStyle, PitchClass, PitchMultiset, PitchSet};
pub use tonnetz::{verify, Tonnetz};
