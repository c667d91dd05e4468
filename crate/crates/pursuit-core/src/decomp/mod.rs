//! Structural decomposition of a straight-ahead oriented grid: streams,
//! confluxes, corners, guard posts, the conflux digraph, diagonals, escape
//! distances, shadows and mirrors.

mod conflux;
mod diagonal;
mod shadow;
mod stream;

pub use conflux::{Conflux, ConfluxError, CornerSet, Decomposition, GuardPosts};
pub use diagonal::{
    between_band, diagonal_distance, md_class, md_set, md_shift_arithmetic, md_shifted,
    mirror_distance, sd_class, sd_set, DiagClass, DiagonalError, Mirror,
};
pub use shadow::{
    escape_distances, is_diagonal_shadow, is_main_shadow, is_secondary_shadow, mirror_of,
    shadow_step, shadows_of, ShadowError, ShadowKind,
};
pub use stream::{maximal_streams, Stream};
