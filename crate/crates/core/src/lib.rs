//! Enumeration and spectral verification toolkit for maximal outer-planar
//! graphs.
//!
//! The signless Laplacian of a graph is `Q(G) = D(G) + A(G)` and its largest
//! eigenvalue `q(G)` is the Q-index. Among all outer-planar graphs of a given
//! order the fan (one apex joined to every vertex of a path) maximizes the
//! Q-index; this crate makes that statement checkable by machine. It
//! enumerates every maximal outer-planar graph of small order as a polygon
//! triangulation, deduplicates isomorphism classes through dihedral canonical
//! codes, computes spectra with two independent eigensolvers, checks the
//! degree-sum/Merris-type/Δ+1 bounds and the Perron-eigenvector inequalities
//! behind the extremality argument, and reproduces the published reference
//! Q-index tables, flagging any value the computation cannot confirm.
//!
//! The `qmax` binary exposes the same functionality as a CLI; see the README
//! for usage.

pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod manifest;
pub mod matrix;
pub mod spectral;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{CycleGraph, GeneralGraph, Graph};
pub use spectral::PerronResult;
