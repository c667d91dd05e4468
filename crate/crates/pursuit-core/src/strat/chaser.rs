//! The force-move fragment: a cop that always advances along a shortest
//! directed path to the robber's current vertex, recomputed every step.
//! Alone it never wins on a strongly connected digraph, but it denies the
//! robber the option of standing still indefinitely.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::engine::{ActivationError, Controller, Digraph, KeyWriter};

/// Advance one shortest-path step from `from` towards `target`; ties go to
/// the smallest vertex id. Stays put when already there.
pub fn chase_step<G: Digraph + ?Sized>(g: &G, from: usize, target: usize) -> usize {
    if from == target {
        return from;
    }
    let dist = g.directed_distances_to(target);
    let mut outs = g.out_neighbors_of(from);
    outs.sort_unstable();
    let mut best = from;
    let mut best_d = dist[from];
    for u in outs {
        if dist[u] != usize::MAX && dist[u] < best_d {
            best = u;
            best_d = dist[u];
        }
    }
    best
}

/// A single chasing cop.
#[derive(Clone, Debug)]
pub struct ChaserController {
    cop: usize,
    start: usize,
}

impl ChaserController {
    /// Chaser starting at vertex `start` (vertex 0 by default in the
    /// registry).
    pub fn new(start: usize) -> ChaserController {
        ChaserController { cop: start, start }
    }
}

impl<G: Digraph> Controller<G> for ChaserController {
    fn name(&self) -> &'static str {
        "chaser1"
    }

    fn cop_count(&self) -> usize {
        1
    }

    fn place(&mut self, _g: &G) -> Vec<usize> {
        self.cop = self.start;
        alloc::vec![self.cop]
    }

    fn observe(&mut self, _g: &G, _robber: usize) -> Result<(), ActivationError> {
        Ok(())
    }

    fn step(&mut self, g: &G, robber: usize) -> Vec<usize> {
        self.cop = chase_step(g, self.cop, robber);
        alloc::vec![self.cop]
    }

    fn write_state_key(&self, out: &mut Vec<u8>) {
        KeyWriter::usize(out, self.cop);
    }

    fn clone_box(&self) -> Box<dyn Controller<G>> {
        Box::new(self.clone())
    }
}
