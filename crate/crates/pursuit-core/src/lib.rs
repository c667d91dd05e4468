//! Core algorithms for the cops-and-robbers game on straight-ahead oriented
//! toroidal grids and 4-regular torus quadrangulations.
//!
//! The crate is `no_std` (with `alloc`) so the game engine, the structural
//! decomposition and the solvers can be embedded anywhere; IO, file formats
//! and the command line live in the companion `pursuit-cli` crate.
//!
//! Module map:
//!
//! * [`grid`] — toroidal grids with per-line orientations, quadrangulations
//!   `Q(r,s,t)` and covering projections between them.
//! * [`decomp`] — streams, confluxes, corners, guard posts, the conflux
//!   digraph, diagonals, escape distances, shadows and mirrors.
//! * [`engine`] — the game loop, deterministic cop controllers, robber
//!   policies, the exhaustive product-state verifier and strategy lifting
//!   through covers.
//! * [`oracle`] — exact cop numbers of small digraphs by backward induction.
//! * [`strat`] — the trap, shadow, paddle and composite controllers.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod coord;
pub mod decomp;
pub mod engine;
pub mod grid;
pub mod oracle;
pub mod quad;
pub mod rng;
pub mod strat;

pub use coord::{Coord, Dir};
pub use grid::OrientedGrid;
pub use quad::{CoveringMap, Quadrangulation};
