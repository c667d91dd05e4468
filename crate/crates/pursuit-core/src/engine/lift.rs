//! Strategy lifting through a covering projection.
//!
//! A winning controller upstairs wins downstairs: maintain a lift of the
//! target robber's walk in the cover (unique once a fiber start is fixed),
//! feed it to the source controller, and project the cop moves back down.
//! When a source cop captures the lifted robber, its projection stands on
//! the real robber.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::grid::OrientedGrid;
use crate::quad::{CoveringMap, Quadrangulation};

use super::controller::{ActivationError, Controller, CtrlStatus, KeyWriter};

pub struct LiftedController {
    cover: CoveringMap,
    inner: Box<dyn Controller<OrientedGrid>>,
    /// Lifted robber position (source vertex id), tracked across steps.
    lifted_robber: Option<usize>,
}

impl LiftedController {
    pub fn new(cover: CoveringMap, inner: Box<dyn Controller<OrientedGrid>>) -> LiftedController {
        LiftedController { cover, inner, lifted_robber: None }
    }

    fn advance_lift(&mut self, q: &Quadrangulation, robber: usize) {
        let src = self.cover.source();
        let at_id = self.lifted_robber.expect("observe ran");
        let at = src.coord(at_id);
        let from = self.cover.project(at);
        let to = q.coord(robber);
        let lifted = self
            .cover
            .lift_move(at, from, to)
            .expect("local bijectivity: every target move lifts");
        self.lifted_robber = Some(src.id(lifted));
    }
}

impl Clone for LiftedController {
    fn clone(&self) -> LiftedController {
        LiftedController {
            cover: self.cover.clone(),
            inner: self.inner.clone_box(),
            lifted_robber: self.lifted_robber,
        }
    }
}

impl Controller<Quadrangulation> for LiftedController {
    fn name(&self) -> &'static str {
        "lifted"
    }

    fn cop_count(&self) -> usize {
        self.inner.cop_count()
    }

    fn place(&mut self, q: &Quadrangulation) -> Vec<usize> {
        let src = self.cover.source();
        let upstairs = self.inner.place(src);
        upstairs.iter().map(|&c| q.id(self.cover.project(src.coord(c)))).collect()
    }

    fn observe(&mut self, q: &Quadrangulation, robber: usize) -> Result<(), ActivationError> {
        let src = self.cover.source();
        let base = self.cover.fiber_base(q.coord(robber));
        self.lifted_robber = Some(src.id(base));
        self.inner.observe(src, src.id(base))
    }

    fn step(&mut self, q: &Quadrangulation, robber: usize) -> Vec<usize> {
        self.advance_lift(q, robber);
        let src = self.cover.source();
        let lifted = self.lifted_robber.expect("observe ran");
        let upstairs = self.inner.step(src, lifted);
        upstairs.iter().map(|&c| q.id(self.cover.project(src.coord(c)))).collect()
    }

    fn status(&self) -> CtrlStatus {
        self.inner.status()
    }

    fn goal_holds(&self, _q: &Quadrangulation, _robber: usize) -> bool {
        true
    }

    fn write_state_key(&self, out: &mut Vec<u8>) {
        KeyWriter::usize(out, self.lifted_robber.unwrap_or(u32::MAX as usize));
        self.inner.write_state_key(out);
    }

    fn clone_box(&self) -> Box<dyn Controller<Quadrangulation>> {
        Box::new(self.clone())
    }

    fn audit(&self, out: &mut Vec<(&'static str, i64)>) {
        self.inner.audit(out);
    }
}
