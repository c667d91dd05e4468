//! Cop strategies: each lemma and theorem of the source material as a
//! deterministic, machine-verifiable controller or controller fragment.

mod chaser;
mod frame;
mod stream_trap;
mod trap3;
mod traps;

pub use chaser::{chase_step, ChaserController};
pub use stream_trap::{StreamTrapController, StreamTrapCore};
pub use trap3::Trap3Controller;
pub use traps::{Trap1Controller, Trap2Controller, TrapCore, GOAL_CONFINED};
