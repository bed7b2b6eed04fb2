//! Exact cup/cap machinery for pair functions and planar point sets.
//!
//! The crate revolves around one pipeline: a point set (or an arbitrary
//! pair function) feeds a dynamic program that tabulates optimal chain
//! extensions, the tables are encoded into fixed-content two-letter words,
//! and a family of verifiers checks the structural statements that tie
//! geometry, tables and words together. On top sit extremal constructions
//! with their own independent verifiers and the exact counting that yields
//! the convex-position bound with ratio tending to 7/8.
//!
//! All arithmetic is exact rational; nothing in the crate touches floating
//! point. Every operation is a pure function of its inputs, so values can be
//! shared freely across threads; random generation takes explicit seeds.

pub mod bound;
pub mod chains;
pub mod claims;
pub mod extremal;
pub mod pairfn;
pub mod points;
pub mod rational;
pub mod words;

pub use chains::{extreme_chain, is_free, Chain, ChainKind, CupCapTables, FreenessReport};
pub use pairfn::{parse_pair_function, slope_function, write_pair_function, PairFunction};
pub use points::{
    parse_point_set, random_point_set, shear, write_points, Point, PointSet, PointSetError,
};
pub use rational::{ExtendedValue, Rational};
pub use words::{Pattern, Side, Sym, Word};
