//! branchlim: exact limits of one-parameter families of projective varieties
//! as branchvarieties, together with their locally constant invariants.
//!
//! The crate computes, over Q:
//!
//! - Grobner bases, ideal quotients, saturations and eliminations;
//! - Hilbert series, Hilbert polynomials, dimension, degree and Euler
//!   characteristics of graded quotients;
//! - minimal primes, connected components, degree sequences, component
//!   multiplicities and reducedness certificates;
//! - flat (Hilbert) limits and reduced branch limits of families over the
//!   discrete valuation ring Q[t] localized at (t), via integral closure
//!   along t and ramified base changes t = s^m;
//! - balanced normal cones through Samuel-homogenized Rees algebras;
//! - the labeled rooted forest of a branchvariety, Stanley-Reisner models of
//!   forests, and doubled projective spaces glued along a subscheme.
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability, and the `branchlim` binary for the file-driven CLI.

pub mod arith;
pub mod poly;
pub mod util;

pub use arith::{Int, Rat, UniPoly};
pub use poly::{Poly, PolyRing, RingMap, TermOrder};
