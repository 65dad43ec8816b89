//! Exact counting and enumeration of balanced binary words.
//!
//! A balanced word of length `L` and height `h` (number of `1`s) encodes a
//! naive discrete segment joining `(0, 0)` to `(L, h)`. This crate provides:
//!
//! - [`words`]: word primitives, the Sturmian morphism `0 -> 0, 1 -> 01`, the
//!   0-erasing map, and a pruned brute-force enumerator used as a test oracle.
//! - [`counting`]: memoized recurrences for the number of balanced words and
//!   balanced palindromes, extended to all integer pairs.
//! - [`numtheory`]: Euler's totient, which drives every closed form.
//! - [`ratfunc`]: exact polynomials and rational functions, the generating
//!   function of each height, and exact asymptotic profiles.
//! - [`verify`]: a self-check harness that cross-validates all of the above.

pub mod counting;
mod error;
pub mod numtheory;
pub mod ratfunc;
pub mod verify;
pub mod words;

pub use counting::{Count, CountTable, Counter, Family};
pub use error::{Error, Result};
pub use ratfunc::{AsymptoticProfile, GeneratingFunction, Polynomial, Rational, RationalFunction};
pub use words::{RenderMode, Symbol, Word};
