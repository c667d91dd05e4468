//! The guard-post trap: three cops (vertical, horizontal and terminal
//! guard posts) catch or confine a robber inside a maximal conflux to one
//! of its two streams.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use crate::coord::Coord;
use crate::decomp::Conflux;
use crate::engine::{refusal, ActivationError, Controller, CtrlStatus, Digraph, KeyWriter};
use crate::grid::{Axis, OrientedGrid};

use super::chaser::chase_step;
use super::stream_trap::StreamTrapCore;
use super::traps::GOAL_CONFINED;

/// Cop roles, in index order: vertical guard post, horizontal guard post,
/// terminal guard post.
const CV: usize = 0;
const CH: usize = 1;
const CT: usize = 2;

#[derive(Clone, Debug)]
pub struct Trap3Controller {
    k: Conflux,
    posts: [Coord; 3],
    cops: [Coord; 3],
    /// Stream trap after the robber left the conflux, with the two cop
    /// indices serving as (first-line, last-line) trackers.
    handoff: Option<(StreamTrapCore, usize, usize)>,
}

impl Trap3Controller {
    /// Cops start on the three guard posts of the (maximal) conflux.
    pub fn at_posts(g: &OrientedGrid, k: Conflux) -> Result<Trap3Controller, ActivationError> {
        let posts = k.guard_posts(g).map_err(|e| refusal(format!("guard posts: {e}")))?;
        let terminal =
            posts.terminal.ok_or_else(|| refusal("terminal guard post requires a maximal conflux"))?;
        Ok(Trap3Controller::with_positions(
            k,
            [posts.vertical, posts.horizontal, terminal],
            [posts.vertical, posts.horizontal, terminal],
        ))
    }

    /// Cops start away from the posts; activation checks the budget
    /// inequalities for the observed robber.
    pub fn with_positions(k: Conflux, posts: [Coord; 3], cops: [Coord; 3]) -> Trap3Controller {
        Trap3Controller { k, posts, cops, handoff: None }
    }

    fn march(&mut self, g: &OrientedGrid) {
        for i in 0..3 {
            if self.cops[i] != self.posts[i] {
                self.cops[i] =
                    g.coord(chase_step(g, g.id(self.cops[i]), g.id(self.posts[i])));
            }
        }
    }

    fn detect_exit(&self, r: Coord) -> Option<(StreamTrapCore, usize, usize)> {
        let k = &self.k;
        let (px, py) = k.progress(r);
        let inside_a = px < k.h;
        let inside_b = py < k.w;
        if inside_a && inside_b {
            return None;
        }
        if !inside_a && inside_b {
            // Crossed the vertical exit: stays in the columns band. The
            // vertical guard post cop holds the entry column, the terminal
            // cop the exit column.
            let (first, width, swap_lines) = band_of(k, Axis::Vertical);
            let (ia, ib) = if swap_lines { (CT, CV) } else { (CV, CT) };
            let core = StreamTrapCore {
                axis: Axis::Vertical,
                first,
                width,
                ca: self.cops[ia],
                cb: self.cops[ib],
            };
            Some((core, ia, ib))
        } else if inside_a && !inside_b {
            let (first, width, swap_lines) = band_of(k, Axis::Horizontal);
            let (ia, ib) = if swap_lines { (CT, CH) } else { (CH, CT) };
            let core = StreamTrapCore {
                axis: Axis::Horizontal,
                first,
                width,
                ca: self.cops[ia],
                cb: self.cops[ib],
            };
            Some((core, ia, ib))
        } else {
            None
        }
    }
}

/// Band of a conflux along one axis, plus whether the band's `first` line
/// is the exit-side line (so the terminal cop must track it rather than
/// the entry cop).
fn band_of(k: &Conflux, axis: Axis) -> (usize, usize, bool) {
    match axis {
        Axis::Vertical => {
            // Columns band: entry column is col_at(0).
            let entry = k.col_at(0);
            let exit = k.col_at(k.w - 1);
            if k.y0 == entry {
                (k.y0, k.w, false)
            } else {
                debug_assert_eq!(k.y0, exit);
                (k.y0, k.w, true)
            }
        }
        Axis::Horizontal => {
            let entry = k.row_at(0);
            let exit = k.row_at(k.h - 1);
            if k.x0 == entry {
                (k.x0, k.h, false)
            } else {
                debug_assert_eq!(k.x0, exit);
                (k.x0, k.h, true)
            }
        }
    }
}

impl Controller<OrientedGrid> for Trap3Controller {
    fn name(&self) -> &'static str {
        "trap3"
    }

    fn cop_count(&self) -> usize {
        3
    }

    fn place(&mut self, g: &OrientedGrid) -> Vec<usize> {
        self.cops.iter().map(|c| g.id(*c)).collect()
    }

    fn observe(&mut self, g: &OrientedGrid, robber: usize) -> Result<(), ActivationError> {
        let r = g.coord(robber);
        let (px, py) = self.k.progress(r);
        if px >= self.k.h || py >= self.k.w {
            return Err(refusal(format!("robber {r} outside the conflux")));
        }
        // Budget inequalities of the trap: m_V <= d1 + d2' + 1,
        // m_H <= d2 + d1' + 1, m_T <= d1 + d2.
        let d1 = self.k.h - 1 - px;
        let d1p = px;
        let d2 = self.k.w - 1 - py;
        let d2p = py;
        let m = |from: Coord, to: Coord| g.directed_distances_to(g.id(to))[g.id(from)];
        let mv = m(self.cops[CV], self.posts[CV]);
        let mh = m(self.cops[CH], self.posts[CH]);
        let mt = m(self.cops[CT], self.posts[CT]);
        if mv > d1 + d2p + 1 || mh > d2 + d1p + 1 || mt > d1 + d2 {
            return Err(refusal(format!(
                "guard post budgets violated: m=({mv},{mh},{mt}) d=({d1},{d2}) d'=({d1p},{d2p})"
            )));
        }
        Ok(())
    }

    fn step(&mut self, g: &OrientedGrid, robber: usize) -> Vec<usize> {
        let r = g.coord(robber);
        if self.handoff.is_none() {
            if let Some(h) = self.detect_exit(r) {
                self.handoff = Some(h);
            }
        }
        match self.handoff.as_mut() {
            None => self.march(g),
            Some((core, ia, ib)) => {
                core.step(g, r);
                self.cops[*ia] = core.ca;
                self.cops[*ib] = core.cb;
            }
        }
        self.cops.iter().map(|c| g.id(*c)).collect()
    }

    fn status(&self) -> CtrlStatus {
        if self.handoff.is_some() {
            CtrlStatus::Goal(GOAL_CONFINED)
        } else {
            CtrlStatus::Pursuing
        }
    }

    fn goal_holds(&self, g: &OrientedGrid, robber: usize) -> bool {
        match &self.handoff {
            Some((core, _, _)) => core.in_band(g, g.coord(robber)),
            None => true,
        }
    }

    fn write_state_key(&self, out: &mut Vec<u8>) {
        for c in &self.cops {
            KeyWriter::usize(out, c.x);
            KeyWriter::usize(out, c.y);
        }
        match &self.handoff {
            None => KeyWriter::byte(out, 255),
            Some((_, ia, _)) => KeyWriter::byte(out, *ia as u8),
        }
    }

    fn clone_box(&self) -> Box<dyn Controller<OrientedGrid>> {
        Box::new(self.clone())
    }
}
