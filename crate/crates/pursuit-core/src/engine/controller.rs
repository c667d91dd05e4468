//! The deterministic cop-controller contract.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::digraph::Digraph;

/// Raised by [`Controller::observe`] when the activation preconditions of a
/// strategy fragment do not hold for the observed robber position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivationError(pub String);

impl fmt::Display for ActivationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "activation refused: {}", self.0)
    }
}

/// A controller either still pursues or has reached its declared goal
/// (capture aside): confinement to a stream, an established shadow guard,
/// and so on. Goals are identified by small controller-chosen ids; once a
/// controller reports `Goal(id)` it must keep reporting the same goal, and
/// [`Controller::goal_holds`] must stay true — the verifier treats any
/// regression as a failed run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CtrlStatus {
    Pursuing,
    Goal(u32),
}

/// A deterministic finite-state cop strategy.
///
/// Protocol per game: `place` (cops pick start vertices before seeing the
/// robber), `observe` (robber's start becomes visible; fragments check
/// their activation preconditions here), then one `step` per round
/// returning the cops' new positions (each must be the old position or one
/// of its out-neighbours; the engine validates).
///
/// Determinism and finite state are part of the contract: identical
/// `(state, robber)` yield identical moves, and `write_state_key` must
/// serialize everything the controller's future behaviour depends on.
/// Unbounded counters are forbidden so the verifier's product space stays
/// finite.
pub trait Controller<G: Digraph + ?Sized> {
    fn name(&self) -> &'static str;

    fn cop_count(&self) -> usize;

    fn place(&mut self, g: &G) -> Vec<usize>;

    fn observe(&mut self, g: &G, robber: usize) -> Result<(), ActivationError>;

    fn step(&mut self, g: &G, robber: usize) -> Vec<usize>;

    fn status(&self) -> CtrlStatus {
        CtrlStatus::Pursuing
    }

    /// Whether the declared goal's invariant holds right now (robber inside
    /// the confinement region, guard on a shadow, …). Only consulted when
    /// `status()` is `Goal(_)`.
    fn goal_holds(&self, _g: &G, _robber: usize) -> bool {
        true
    }

    /// Canonical byte serialization of the internal state for product-state
    /// memoization.
    fn write_state_key(&self, out: &mut Vec<u8>);

    fn clone_box(&self) -> Box<dyn Controller<G>>;

    /// Trace metrics (active cop count, phase counters, …) for audits.
    fn audit(&self, _out: &mut Vec<(&'static str, i64)>) {}
}

pub type BoxedController<G> = Box<dyn Controller<G>>;

impl<G: Digraph + ?Sized> Clone for Box<dyn Controller<G>> {
    fn clone(&self) -> Self {
        self.clone_box()
    }
}

/// Serialization helpers for state keys.
pub struct KeyWriter;

impl KeyWriter {
    pub fn usize(out: &mut Vec<u8>, v: usize) {
        out.extend_from_slice(&(v as u32).to_le_bytes());
    }

    pub fn byte(out: &mut Vec<u8>, v: u8) {
        out.push(v);
    }

    pub fn slice(out: &mut Vec<u8>, vs: &[usize]) {
        KeyWriter::usize(out, vs.len());
        for &v in vs {
            KeyWriter::usize(out, v);
        }
    }
}

/// Cops that stand still forever. `posts` may be empty (no cops at all).
#[derive(Clone, Debug)]
pub struct StationaryController {
    posts: Vec<usize>,
}

impl StationaryController {
    pub fn new(posts: Vec<usize>) -> StationaryController {
        StationaryController { posts }
    }
}

impl<G: Digraph> Controller<G> for StationaryController {
    fn name(&self) -> &'static str {
        "stationary"
    }

    fn cop_count(&self) -> usize {
        self.posts.len()
    }

    fn place(&mut self, _g: &G) -> Vec<usize> {
        self.posts.clone()
    }

    fn observe(&mut self, _g: &G, _robber: usize) -> Result<(), ActivationError> {
        Ok(())
    }

    fn step(&mut self, _g: &G, _robber: usize) -> Vec<usize> {
        self.posts.clone()
    }

    fn write_state_key(&self, _out: &mut Vec<u8>) {}

    fn clone_box(&self) -> Box<dyn Controller<G>> {
        Box::new(self.clone())
    }
}

/// Human-readable activation failure helper.
pub fn refusal(msg: impl Into<String>) -> ActivationError {
    ActivationError(msg.into())
}
