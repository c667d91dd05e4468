//! Game engine: digraph abstraction, controllers, robber policies, the
//! game loop, the exhaustive verifier and strategy lifting.

mod controller;
mod digraph;
mod lift;
mod play;
mod policy;
mod verify;

pub use controller::{
    refusal, ActivationError, BoxedController, Controller, CtrlStatus, KeyWriter,
    StationaryController,
};
pub use digraph::{AdjDigraph, Digraph, GridBoard, QuadBoard};
pub use lift::LiftedController;
pub use play::{
    play, replay_matches, GameConfig, IllegalMove, Outcome, PlayError, StepRecord, Trace,
};
pub use policy::RobberPolicy;
pub use verify::{verify_controller, Verdict, VerifyOptions, VerifyReport};
