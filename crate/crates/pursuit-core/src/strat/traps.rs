//! The corner traps: cops on the main corners of a conflux trap a target
//! inside it.
//!
//! [`TrapCore`] is the reusable two-cop state machine; the standalone
//! controllers here drive it against the robber, the shadow strategies
//! drive it against a virtual shadow pebble.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use crate::coord::Coord;
use crate::decomp::Conflux;
use crate::engine::{refusal, ActivationError, Controller, CtrlStatus, KeyWriter};
use crate::grid::OrientedGrid;

use super::frame::FrameView;

/// Goal id: target confined to a stream.
pub const GOAL_CONFINED: u32 = 1;

/// Two cops holding the main corners of a conflux against a target inside.
///
/// Cop 1 starts on the corner of the target's entry line (frame coordinate
/// `(H-1, 0)`) and mirrors the target's `b` coordinate from the `a = H-1`
/// line, so crossing that line means walking into him. Cop 2 starts on
/// `(0, W-1)` and closes the `a`-gap while the target approaches his line;
/// once the target reaches `b = W-1` both cops switch to pure `b`-mirroring
/// and ride their lines, which confines the target to the stream. On square
/// confluxes the `a`-gap always closes in time and every play ends in
/// capture instead.
#[derive(Clone, Debug)]
pub struct TrapCore {
    frame: FrameView,
    pub c1: Coord,
    pub c2: Coord,
    mode_b: bool,
    confined: bool,
}

impl TrapCore {
    /// Corner posts `(c1, c2)` for a given frame orientation. These are the
    /// two main corners of the conflux in either orientation, in role
    /// order.
    pub fn posts(k: &Conflux, swap: bool) -> (Coord, Coord) {
        let f = FrameView::new(*k, swap);
        let (h, w) = f.dims();
        (f.at(h - 1, 0), f.at(0, w - 1))
    }

    /// Frame orientation for a target on an entry line of `k`: prefer the
    /// `b = 0` reading, fall back to the transposed one, `None` when the
    /// target has all in-neighbours inside the conflux.
    pub fn entry_swap(k: &Conflux, target: Coord) -> Option<bool> {
        let (px, py) = k.progress(target);
        if py == 0 && px < k.h {
            Some(false)
        } else if px == 0 && py < k.w {
            Some(true)
        } else {
            None
        }
    }

    pub fn new(k: Conflux, swap: bool) -> TrapCore {
        let (c1, c2) = TrapCore::posts(&k, swap);
        TrapCore { frame: FrameView::new(k, swap), c1, c2, mode_b: false, confined: false }
    }

    pub fn swap(&self) -> bool {
        self.frame.swap
    }

    /// One cops' half-move reacting to the target's current position.
    pub fn step(&mut self, target: Coord) {
        let f = self.frame;
        let (h, w) = f.dims();
        let (na, nb) = f.mods();
        let (ra, rb) = f.pos(target);

        if !self.mode_b && rb == w - 1 {
            self.mode_b = true;
        }

        // Cop 1 mirrors the target's b from the a = H-1 line.
        let (c1a, c1b) = f.pos(self.c1);
        if (rb + nb - c1b) % nb == 1 {
            self.c1 = f.at(c1a, c1b + 1);
        }

        // Cop 2: close the a-gap until the target reaches his line, then
        // mirror b like cop 1.
        let (c2a, c2b) = f.pos(self.c2);
        if self.mode_b {
            if (rb + nb - c2b) % nb == 1 {
                self.c2 = f.at(c2a, c2b + 1);
            }
        } else {
            let gap = (ra + na - c2a) % na;
            if gap >= 1 && gap < h {
                self.c2 = f.at(c2a + 1, c2b);
            }
        }

        // Confinement is sticky: once the target left the conflux with both
        // cops riding their lines at its b, it can never cross them again.
        if self.mode_b && !self.confined {
            let inside = {
                let (pa, pb) = f.pos(target);
                pa < h && pb < w
            };
            let c1b_now = f.pos(self.c1).1;
            let c2b_now = f.pos(self.c2).1;
            if !inside && c1b_now == rb && c2b_now == rb {
                self.confined = true;
            }
        }
    }

    pub fn on_target(&self, target: Coord) -> bool {
        self.c1 == target || self.c2 == target
    }

    pub fn confined(&self) -> bool {
        self.confined
    }

    /// Membership in the confinement region (the stream spanned by the
    /// frame's `a`-lines).
    pub fn in_region(&self, v: Coord) -> bool {
        self.frame.in_a_band(v)
    }

    pub fn write_key(&self, out: &mut Vec<u8>) {
        KeyWriter::usize(out, self.c1.x);
        KeyWriter::usize(out, self.c1.y);
        KeyWriter::usize(out, self.c2.x);
        KeyWriter::usize(out, self.c2.y);
        KeyWriter::byte(
            out,
            self.mode_b as u8 | (self.confined as u8) << 1 | (self.frame.swap as u8) << 2,
        );
    }
}

/// Standalone trap of the first kind: two cops on the main corners of `k`,
/// activated against a robber inside `k` that still has an in-neighbour
/// outside (it just entered).
#[derive(Clone, Debug)]
pub struct Trap1Controller {
    k: Conflux,
    core: Option<TrapCore>,
}

impl Trap1Controller {
    pub fn new(k: Conflux) -> Trap1Controller {
        Trap1Controller { k, core: None }
    }

    /// Cop index 0 is placed on the vertical-exit main corner, index 1 on
    /// the horizontal-exit one.
    fn rest_posts(&self) -> (Coord, Coord) {
        TrapCore::posts(&self.k, false)
    }

    fn ordered(&self, g: &OrientedGrid) -> Vec<usize> {
        match &self.core {
            None => {
                let (a, b) = self.rest_posts();
                alloc::vec![g.id(a), g.id(b)]
            }
            Some(c) => {
                // With the transposed frame, role c1 is held by the cop
                // placed on the horizontal-exit corner (index 1).
                if c.swap() {
                    alloc::vec![g.id(c.c2), g.id(c.c1)]
                } else {
                    alloc::vec![g.id(c.c1), g.id(c.c2)]
                }
            }
        }
    }
}

impl Controller<OrientedGrid> for Trap1Controller {
    fn name(&self) -> &'static str {
        "trap1"
    }

    fn cop_count(&self) -> usize {
        2
    }

    fn place(&mut self, g: &OrientedGrid) -> Vec<usize> {
        self.ordered(g)
    }

    fn observe(&mut self, g: &OrientedGrid, robber: usize) -> Result<(), ActivationError> {
        let r = g.coord(robber);
        if !self.k.contains(r) {
            return Err(refusal(format!("robber {r} outside the conflux")));
        }
        let swap = TrapCore::entry_swap(&self.k, r).ok_or_else(|| {
            refusal(format!("robber {r} has all in-neighbours inside the conflux"))
        })?;
        self.core = Some(TrapCore::new(self.k, swap));
        Ok(())
    }

    fn step(&mut self, g: &OrientedGrid, robber: usize) -> Vec<usize> {
        let r = g.coord(robber);
        self.core.as_mut().expect("observe ran").step(r);
        self.ordered(g)
    }

    fn status(&self) -> CtrlStatus {
        match &self.core {
            Some(c) if c.confined() => CtrlStatus::Goal(GOAL_CONFINED),
            _ => CtrlStatus::Pursuing,
        }
    }

    fn goal_holds(&self, g: &OrientedGrid, robber: usize) -> bool {
        self.core.as_ref().map_or(true, |c| c.in_region(g.coord(robber)))
    }

    fn write_state_key(&self, out: &mut Vec<u8>) {
        match &self.core {
            None => KeyWriter::byte(out, 0),
            Some(c) => {
                KeyWriter::byte(out, 1);
                c.write_key(out);
            }
        }
    }

    fn clone_box(&self) -> Box<dyn Controller<OrientedGrid>> {
        Box::new(self.clone())
    }
}

/// Trap of the second kind: corner cops plus one on the out-neighbourless
/// secondary corner. Works for a robber starting anywhere in the conflux:
/// the cops wait until it reaches a boundary strip through the terminal
/// corner and run the two-cop trap on that strip.
#[derive(Clone, Debug)]
pub struct Trap2Controller {
    k: Conflux,
    cops: Vec<Coord>,
    /// Strip trap plus the physical indices of the cops in roles (c1, c2).
    core: Option<(TrapCore, usize, usize)>,
}

impl Trap2Controller {
    pub fn new(k: Conflux) -> Trap2Controller {
        let cops = if k.h.min(k.w) == 1 {
            alloc::vec![k.at_progress(k.h - 1, 0), k.at_progress(0, k.w - 1)]
        } else {
            alloc::vec![
                k.at_progress(k.h - 1, 0),
                k.at_progress(0, k.w - 1),
                k.at_progress(k.h - 1, k.w - 1),
            ]
        };
        Trap2Controller { k, cops, core: None }
    }

    /// The boundary strip holding `v`, if any: the last `a`-line or the
    /// last `b`-line of `k` (both contain the terminal corner).
    fn strip_of(&self, v: Coord) -> Option<Conflux> {
        let k = &self.k;
        let (px, py) = k.progress(v);
        if px >= k.h || py >= k.w {
            return None;
        }
        if px == k.h - 1 {
            Some(Conflux {
                x0: k.row_at(k.h - 1),
                h: 1,
                y0: k.y0,
                w: k.w,
                cd: k.cd,
                rd: k.rd,
                nx: k.nx,
                ny: k.ny,
            })
        } else if py == k.w - 1 {
            Some(Conflux {
                x0: k.x0,
                h: k.h,
                y0: k.col_at(k.w - 1),
                w: 1,
                cd: k.cd,
                rd: k.rd,
                nx: k.nx,
                ny: k.ny,
            })
        } else {
            None
        }
    }

    fn try_delegate(&mut self, r: Coord) {
        if self.core.is_some() {
            return;
        }
        let strip = if self.k.h.min(self.k.w) == 1 {
            self.k
        } else {
            match self.strip_of(r) {
                Some(s) => s,
                None => return,
            }
        };
        let swap = match TrapCore::entry_swap(&strip, r) {
            Some(s) => s,
            None => return,
        };
        let core = TrapCore::new(strip, swap);
        // The strip's corner posts coincide with two of the waiting cops;
        // bind roles by position.
        let i1 = self.cops.iter().position(|&c| c == core.c1);
        let i2 = self.cops.iter().rposition(|&c| c == core.c2);
        if let (Some(i1), Some(i2)) = (i1, i2) {
            debug_assert_ne!(i1, i2);
            self.core = Some((core, i1, i2));
        }
    }
}

impl Controller<OrientedGrid> for Trap2Controller {
    fn name(&self) -> &'static str {
        "trap2"
    }

    fn cop_count(&self) -> usize {
        self.cops.len()
    }

    fn place(&mut self, g: &OrientedGrid) -> Vec<usize> {
        self.cops.iter().map(|c| g.id(*c)).collect()
    }

    fn observe(&mut self, g: &OrientedGrid, robber: usize) -> Result<(), ActivationError> {
        let r = g.coord(robber);
        if !self.k.contains(r) {
            return Err(refusal(format!("robber {r} outside the conflux")));
        }
        self.try_delegate(r);
        Ok(())
    }

    fn step(&mut self, g: &OrientedGrid, robber: usize) -> Vec<usize> {
        let r = g.coord(robber);
        self.try_delegate(r);
        if let Some((core, i1, i2)) = self.core.as_mut() {
            core.step(r);
            self.cops[*i1] = core.c1;
            self.cops[*i2] = core.c2;
        }
        self.cops.iter().map(|c| g.id(*c)).collect()
    }

    fn status(&self) -> CtrlStatus {
        match &self.core {
            Some((c, _, _)) if c.confined() => CtrlStatus::Goal(GOAL_CONFINED),
            _ => CtrlStatus::Pursuing,
        }
    }

    fn goal_holds(&self, g: &OrientedGrid, robber: usize) -> bool {
        self.core.as_ref().map_or(true, |(c, _, _)| c.in_region(g.coord(robber)))
    }

    fn write_state_key(&self, out: &mut Vec<u8>) {
        for p in &self.cops {
            KeyWriter::usize(out, p.x);
            KeyWriter::usize(out, p.y);
        }
        match &self.core {
            None => KeyWriter::byte(out, 255),
            Some((c, i1, _)) => {
                KeyWriter::byte(out, *i1 as u8);
                c.write_key(out);
            }
        }
    }

    fn clone_box(&self) -> Box<dyn Controller<OrientedGrid>> {
        Box::new(self.clone())
    }
}
