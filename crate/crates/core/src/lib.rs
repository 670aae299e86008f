//! Exact distinguishing numbers of faithful finite permutation-group actions.
//!
//! Everything here is pure computation over `alloc` collections: permutations and
//! fully enumerated groups, labelings and their preserving subgroups, the exact
//! solvers for the absolute and subgroup-relative distinguishing numbers, the
//! constructive upper bounds (orbit-representative, maximal-subgroup and
//! motion/good-partition constructions), a small-graph front end, and a catalog
//! of groups together with the claim audit that runs over it.
//!
//! File formats, timing, threads and the command line live in the `dng` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod audit;
pub mod bounds;
pub mod catalog;
mod error;
pub mod graph;
pub mod group;
pub mod labeling;
pub mod perm;
pub mod solver;

pub use error::Error;
pub use group::PermGroup;
pub use labeling::Labeling;
pub use perm::Permutation;
pub use solver::{SearchOptions, SolveResult};

pub type Result<T> = core::result::Result<T, Error>;
