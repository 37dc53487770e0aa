//! Exact-arithmetic invariants of wildly ramified Aₙ-Galois covers of the
//! projective line in characteristic p.
//!
//! The crate computes, with no floating point anywhere:
//!
//! - ramification (Newton) polygons of the degree-n Abhyankar equations by
//!   direct series expansion, and the lower jumps they encode
//!   ([`newton`]);
//! - higher-ramification bookkeeping: lower/upper jumps, different
//!   exponents, Riemann–Hurwitz genera ([`ramification`]);
//! - brute-force verification of the normalizer and centralizer counts
//!   that bound inertia groups inside alternating groups ([`perm`]);
//! - a transformation calculus on covers (tame pullback, inertia
//!   sub-jumps, jump increments) that enumerates realizable inertia groups
//!   and upper jumps, emitting replayable certificates ([`cover`]).
//!
//! [`selftest`] runs the full small-prime verification sweep; the `wildram`
//! CLI exposes all of it as commands.

pub mod algebra;
pub mod cover;
pub mod newton;
pub mod perm;
pub mod ramification;
pub mod selftest;
