//! The stream trap: two cops shadowing the robber's projections onto the
//! boundary lines of a stream keep him inside it.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use crate::coord::Coord;
use crate::engine::{refusal, ActivationError, Controller, CtrlStatus, Digraph, KeyWriter};
use crate::grid::{Axis, OrientedGrid};

use super::chaser::chase_step;
use super::traps::GOAL_CONFINED;

/// Two cops assigned to the two boundary lines of a stream band. Each cop
/// tracks the robber's projection onto his line (the undirected-closest
/// vertex of the line) along shortest directed paths; the invariant
/// `m_i <= d_i` from the trap's activation keeps every line-crossing
/// attempt a capture.
#[derive(Clone, Debug)]
pub struct StreamTrapCore {
    pub axis: Axis,
    pub first: usize,
    pub width: usize,
    /// Cop tracking the `first` boundary line.
    pub ca: Coord,
    /// Cop tracking the `first + width - 1` boundary line.
    pub cb: Coord,
}

impl StreamTrapCore {
    fn line_mod(&self, g: &OrientedGrid) -> usize {
        match self.axis {
            Axis::Horizontal => g.dims().0,
            Axis::Vertical => g.dims().1,
        }
    }

    /// Projection of `v` onto band line `line` (same along-coordinate).
    pub fn projection(&self, line: usize, v: Coord) -> Coord {
        match self.axis {
            Axis::Horizontal => Coord::new(line, v.y),
            Axis::Vertical => Coord::new(v.x, line),
        }
    }

    /// In-band offset of `v`'s cross-line from `first` (`< width` inside).
    pub fn band_offset(&self, g: &OrientedGrid, v: Coord) -> usize {
        let n = self.line_mod(g);
        let line = match self.axis {
            Axis::Horizontal => v.x,
            Axis::Vertical => v.y,
        };
        (line + n - self.first) % n
    }

    pub fn in_band(&self, g: &OrientedGrid, v: Coord) -> bool {
        self.band_offset(g, v) < self.width
    }

    /// Cross distances `(d_a, d_b)` from `v` to the two boundary lines,
    /// measured inside the band.
    pub fn cross_distances(&self, g: &OrientedGrid, v: Coord) -> (usize, usize) {
        let o = self.band_offset(g, v);
        debug_assert!(o < self.width);
        (o, self.width - 1 - o)
    }

    pub fn step(&mut self, g: &OrientedGrid, target: Coord) {
        let n = self.line_mod(g);
        let last = (self.first + self.width - 1) % n;
        let va = self.projection(self.first, target);
        let vb = self.projection(last, target);
        self.ca = g.coord(chase_step(g, g.id(self.ca), g.id(va)));
        self.cb = g.coord(chase_step(g, g.id(self.cb), g.id(vb)));
    }

    pub fn write_key(&self, out: &mut Vec<u8>) {
        KeyWriter::usize(out, self.ca.x);
        KeyWriter::usize(out, self.ca.y);
        KeyWriter::usize(out, self.cb.x);
        KeyWriter::usize(out, self.cb.y);
    }
}

/// Standalone stream trap with explicit cop start positions; activation
/// enforces the `m_i <= d_i` precondition for the observed robber.
#[derive(Clone, Debug)]
pub struct StreamTrapController {
    core: StreamTrapCore,
}

impl StreamTrapController {
    pub fn new(
        axis: Axis,
        first: usize,
        width: usize,
        ca: Coord,
        cb: Coord,
    ) -> StreamTrapController {
        StreamTrapController { core: StreamTrapCore { axis, first, width, ca, cb } }
    }
}

impl Controller<OrientedGrid> for StreamTrapController {
    fn name(&self) -> &'static str {
        "streamtrap"
    }

    fn cop_count(&self) -> usize {
        2
    }

    fn place(&mut self, g: &OrientedGrid) -> Vec<usize> {
        alloc::vec![g.id(self.core.ca), g.id(self.core.cb)]
    }

    fn observe(&mut self, g: &OrientedGrid, robber: usize) -> Result<(), ActivationError> {
        let r = g.coord(robber);
        if !self.core.in_band(g, r) {
            return Err(refusal(format!("robber {r} outside the stream")));
        }
        let (da, db) = self.core.cross_distances(g, r);
        let n = self.core.line_mod(g);
        let last = (self.core.first + self.core.width - 1) % n;
        let va = self.core.projection(self.core.first, r);
        let vb = self.core.projection(last, r);
        let ma = g.directed_distances_to(g.id(va))[g.id(self.core.ca)];
        let mb = g.directed_distances_to(g.id(vb))[g.id(self.core.cb)];
        if ma > da || mb > db {
            return Err(refusal(format!(
                "cop budgets violated: m=({ma},{mb}) d=({da},{db}) for robber {r}"
            )));
        }
        Ok(())
    }

    fn step(&mut self, g: &OrientedGrid, robber: usize) -> Vec<usize> {
        self.core.step(g, g.coord(robber));
        alloc::vec![g.id(self.core.ca), g.id(self.core.cb)]
    }

    /// The lemma's claim is "caught or confined" from activation onwards,
    /// so the goal is declared immediately.
    fn status(&self) -> CtrlStatus {
        CtrlStatus::Goal(GOAL_CONFINED)
    }

    fn goal_holds(&self, g: &OrientedGrid, robber: usize) -> bool {
        self.core.in_band(g, g.coord(robber))
    }

    fn write_state_key(&self, out: &mut Vec<u8>) {
        self.core.write_key(out);
    }

    fn clone_box(&self) -> Box<dyn Controller<OrientedGrid>> {
        Box::new(self.clone())
    }
}
