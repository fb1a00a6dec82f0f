//! Exact combinatorics of alternation-acyclic tournaments.
//!
//! A tournament on `{1..n}` orients every pair of vertices; an arrow `i -> j`
//! is an *ascent* when `i < j` and a *descent* otherwise. The tournament is
//! *alternation acyclic* (alt-acyclic) when it contains no directed cycle in
//! which descents and ascents alternate. This crate implements, with exact
//! arithmetic only, the algorithmic theory of these objects:
//!
//! - [`tournament`]: the bitmask tournament representation, alternating-cycle
//!   detection, alternating-walk orders, and semiacyclicity.
//! - [`forest`]: biordered-forest codes `(pi, p)` that induce alt-acyclic
//!   tournaments, the canonical largest-maximal representation, reduction,
//!   and the type classification `(n, i, j)`.
//! - [`enumeration`]: exhaustive bitmask enumeration, the ground-truth oracle
//!   for every counting identity in the crate.
//! - [`numbers`]: big-integer recurrences — the `A(n,i,j)` triangle,
//!   Legendre-Stirling numbers, median and first-kind Genocchi numbers,
//!   Eulerian numbers, and the semiacyclic closed form.
//! - [`arrangement`]: the homogenized Linial arrangement, its characteristic
//!   polynomial, Zaslavsky region counts, a finite-field point-count oracle,
//!   and the region <-> tournament bijection.
//! - [`bijections`]: the descent-sensitive permutation code, Dumont-style
//!   excedant-function and pair-vector models, and the set-sequence model for
//!   the normalized median Genocchi numbers with its involution action.
//! - [`series`]: truncated power series over exact rationals realizing the
//!   ordinary generating functions for all of the above.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to call from parallel workers.

#![allow(clippy::needless_range_loop)]

pub mod arrangement;
pub mod bijections;
pub mod enumeration;
pub mod forest;
pub mod numbers;
pub mod perm;
pub mod polynomial;
pub mod series;
pub mod tournament;

pub use arrangement::{ChiTable, RationalPoint};
pub use bijections::{ExcedantFunction, PairVectors, SetSequence};
pub use enumeration::CountReport;
pub use forest::{BiorderedCode, ParentFunction, TypeTriple};
pub use numbers::TypeTable;
pub use perm::Permutation;
pub use polynomial::IntPolynomial;
pub use series::{PolyX, SeriesT};
pub use tournament::{PartialOrderRelation, StepDigraph, Tournament};
