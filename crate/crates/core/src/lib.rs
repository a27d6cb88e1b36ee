//! Exact enumeration of n-chords under L-note equal temperament.
//!
//! An n-chord is an ordered composition of the octave span `L` into `n`
//! positive interval steps.  This crate counts chords, their transposition
//! classes (necklaces) and transposition-plus-inversion classes (bracelets)
//! by three mutually independent routes:
//!
//! * brute-force orbit partition ([`orbits`]),
//! * divisor-gated primitive-block algebra ([`blocks`]),
//! * Burnside fixed-point counting ([`burnside`]),
//!
//! and carries the companion lattice-simplex geometry ([`simplex`]): chords
//! are the positive lattice points of the simplex `x_1 + .. + x_n = L`,
//! whose layer recursion, face combinatorics and palindrome loci reproduce
//! the same counts geometrically.  [`tables`] assembles the reference
//! tables, and [`report`] cross-checks every route against every other,
//! flagging cells of the published reference tables that disagree with
//! their own defining formulas.
//!
//! All arithmetic is exact (128-bit integers and rationals); nothing is
//! floating point.
//!
//! ```
//! use nchord::orbits::census;
//! use nchord::{Chord, Symmetry, Temperament};
//!
//! let t = Temperament::twelve();
//! let c = Chord::new(vec![1, 2, 3, 6], t)?;
//! assert_eq!(c.transpose(1).parts(), &[2, 3, 6, 1]);
//! assert_eq!(c.prime_form(Symmetry::Dihedral).parts(), &[1, 2, 3, 6]);
//!
//! let six = census(t, 6, Symmetry::Dihedral)?;
//! assert_eq!(six.class_count, 80); // rotation classes
//! assert_eq!(six.reflective.unwrap().bracelet_classes, 50); // with inversion
//! # Ok::<(), nchord::Error>(())
//! ```

mod arith;
pub mod blocks;
pub mod burnside;
pub mod chord;
pub mod enumerate;
mod error;
pub mod orbits;
pub mod report;
pub mod simplex;
pub mod tables;

pub use chord::{Chord, ChordType, Symmetry, Temperament, MAX_TEMPERAMENT};
pub use error::{Error, Result};

pub use arith::binomial;
