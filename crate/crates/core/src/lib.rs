//! Catalan lattices on Dyck paths and Schnyder realizers of rooted planar
//! triangulations.
//!
//! The crate is `no_std` (it only needs `alloc`) and is organised bottom-up:
//!
//! - [`dyck`]: Dyck paths as descent vectors, exceedences and the `⊲`/`⊳`
//!   relations.
//! - [`catalan`]: plane trees, binary trees and non-crossing partitions with
//!   their bijections onto Dyck paths.
//! - [`lattice`]: the Stanley, Tamari and Kreweras orders, their covering
//!   relations and interval enumeration.
//! - [`map`], [`realizer`], [`stack`], [`canon`]: rooted triangulations as
//!   rotation systems, realizers (Schnyder woods), stack triangulations and
//!   canonical codes.
//! - [`phi`]: the bijection between pairs of non-crossing Dyck paths and
//!   realizers.
//! - [`counting`]: closed-form interval counts in exact arithmetic.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod catalan;
pub mod counting;
pub mod dyck;
pub mod error;
pub mod lattice;
pub mod map;
pub mod phi;
pub mod realizer;
pub mod stack;

pub use catalan::{BinaryTree, NoncrossingPartition, PlaneTree};
pub use dyck::DyckPath;
pub use error::{Error, Result};
pub use lattice::{Interval, LatticeKind};
pub use map::{CombinatorialMap, Triangulation};
pub use phi::{phi, psi, Prerealizer};
pub use realizer::{Color, Realizer};
pub use stack::TernaryTree;
