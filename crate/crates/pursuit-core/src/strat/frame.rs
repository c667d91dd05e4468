//! Axis-normalized view of a conflux.
//!
//! Every trap argument is symmetric under swapping the two axes; the frame
//! view renames progress coordinates to `(a, b)` so each case analysis is
//! written once. With `swap = false`, `a` is vertical progress (`px`) and
//! `b` horizontal (`py`); with `swap = true` the roles flip.

use crate::coord::Coord;
use crate::decomp::Conflux;

#[derive(Clone, Copy, Debug)]
pub struct FrameView {
    pub k: Conflux,
    pub swap: bool,
}

impl FrameView {
    pub fn new(k: Conflux, swap: bool) -> FrameView {
        FrameView { k, swap }
    }

    /// `(H, W)`: extent along `a` and `b`.
    pub fn dims(&self) -> (usize, usize) {
        if self.swap {
            (self.k.w, self.k.h)
        } else {
            (self.k.h, self.k.w)
        }
    }

    /// Moduli of the `a` and `b` coordinates.
    pub fn mods(&self) -> (usize, usize) {
        if self.swap {
            (self.k.ny, self.k.nx)
        } else {
            (self.k.nx, self.k.ny)
        }
    }

    pub fn pos(&self, v: Coord) -> (usize, usize) {
        let (px, py) = self.k.progress(v);
        if self.swap {
            (py, px)
        } else {
            (px, py)
        }
    }

    pub fn at(&self, a: usize, b: usize) -> Coord {
        if self.swap {
            self.k.at_progress(b, a)
        } else {
            self.k.at_progress(a, b)
        }
    }

    /// Whether `v` lies in the stream spanned by the frame's `a`-lines
    /// (the confinement region of the trap argument).
    pub fn in_a_band(&self, v: Coord) -> bool {
        let (h, _) = self.dims();
        self.pos(v).0 < h
    }
}
