//! The game loop: cops move, then the robber moves, with capture checked
//! after each half-move.

use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::controller::{Controller, CtrlStatus};
use super::digraph::Digraph;
use super::policy::RobberPolicy;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlayError {
    /// A controller returned a move that is neither a stay nor an out-arc.
    IllegalMove(IllegalMove),
    /// The controller refused activation for this robber start.
    Refused(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IllegalMove {
    pub cop_index: usize,
    pub step: usize,
    pub from: usize,
    pub to: usize,
}

impl core::fmt::Display for PlayError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PlayError::IllegalMove(m) => write!(
                f,
                "cop {} made an illegal move {} -> {} at step {}",
                m.cop_index, m.from, m.to, m.step
            ),
            PlayError::Refused(r) => write!(f, "activation refused: {r}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Captured { step: usize },
    Escaped { budget: usize },
    /// A product state repeated: the robber can evade forever. The witness
    /// says at which step the repeated state first occurred.
    NonCapture { cycle_start: usize },
}

/// One full round: positions after the cops' half-move and after the
/// robber's half-move, plus controller audit metrics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub cops: Vec<usize>,
    pub robber: usize,
    pub status: CtrlStatus,
    pub metrics: Vec<(&'static str, i64)>,
}

/// A replayable game record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub board: String,
    pub controller: String,
    pub initial_cops: Vec<usize>,
    pub initial_robber: usize,
    pub steps: Vec<StepRecord>,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct GameConfig {
    pub max_steps: usize,
    /// Robber must move every round (the paper's standing assumption for
    /// trap fragments); composite strategies play with stays allowed.
    pub forced_robber: bool,
    /// Track product states to report `NonCapture` as soon as play loops.
    pub detect_cycles: bool,
}

impl Default for GameConfig {
    fn default() -> GameConfig {
        GameConfig { max_steps: 10_000, forced_robber: false, detect_cycles: true }
    }
}

fn legal(g: &impl Digraph, from: usize, to: usize) -> bool {
    from == to || g.out_neighbors_of(from).contains(&to)
}

/// Run one game to completion.
pub fn play<G: Digraph>(
    g: &G,
    controller: &mut dyn Controller<G>,
    robber: &mut RobberPolicy,
    config: &GameConfig,
) -> Result<Trace, PlayError> {
    let mut cops = controller.place(g);
    let mut rob = robber.place(g, &cops);
    controller.observe(g, rob).map_err(|e| PlayError::Refused(e.0))?;

    let mut trace = Trace {
        board: g.descriptor(),
        controller: String::from(controller.name()),
        initial_cops: cops.clone(),
        initial_robber: rob,
        steps: Vec::new(),
        outcome: Outcome::Escaped { budget: config.max_steps },
    };

    if cops.contains(&rob) {
        trace.outcome = Outcome::Captured { step: 0 };
        return Ok(trace);
    }

    let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();

    for step in 1..=config.max_steps {
        if config.detect_cycles {
            let mut key = Vec::new();
            super::controller::KeyWriter::usize(&mut key, rob);
            controller.write_state_key(&mut key);
            match seen.entry(key) {
                hashbrown::hash_map::Entry::Vacant(e) => {
                    e.insert(step - 1);
                }
                hashbrown::hash_map::Entry::Occupied(e) => {
                    trace.outcome = Outcome::NonCapture { cycle_start: *e.get() };
                    return Ok(trace);
                }
            }
        }

        let new_cops = controller.step(g, rob);
        debug_assert_eq!(new_cops.len(), cops.len());
        for (i, (&from, &to)) in cops.iter().zip(new_cops.iter()).enumerate() {
            if !legal(g, from, to) {
                return Err(PlayError::IllegalMove(IllegalMove {
                    cop_index: i,
                    step,
                    from,
                    to,
                }));
            }
        }
        cops = new_cops;

        let mut metrics = Vec::new();
        controller.audit(&mut metrics);

        if cops.contains(&rob) {
            trace.steps.push(StepRecord {
                cops: cops.clone(),
                robber: rob,
                status: controller.status(),
                metrics,
            });
            trace.outcome = Outcome::Captured { step };
            return Ok(trace);
        }

        rob = robber.next(g, &cops, rob, config.forced_robber);
        trace.steps.push(StepRecord {
            cops: cops.clone(),
            robber: rob,
            status: controller.status(),
            metrics,
        });
        if cops.contains(&rob) {
            trace.outcome = Outcome::Captured { step };
            return Ok(trace);
        }
    }

    trace.outcome = Outcome::Escaped { budget: config.max_steps };
    Ok(trace)
}

/// Re-simulate a trace's robber against the same controller and check that
/// the outcome reproduces. Used by tests and the CLI replay path.
pub fn replay_matches<G: Digraph>(
    g: &G,
    make_controller: &dyn Fn() -> alloc::boxed::Box<dyn Controller<G>>,
    trace: &Trace,
) -> Result<bool, PlayError> {
    let moves: Vec<usize> = trace.steps.iter().map(|s| s.robber).collect();
    let mut policy = RobberPolicy::scripted(trace.initial_robber, moves, None);
    let mut controller = make_controller();
    let config = GameConfig {
        max_steps: trace.steps.len() + 1,
        forced_robber: false,
        detect_cycles: matches!(trace.outcome, Outcome::NonCapture { .. }),
    };
    let replayed = play(g, controller.as_mut(), &mut policy, &config)?;
    Ok(match (&trace.outcome, &replayed.outcome) {
        (Outcome::Captured { step: a }, Outcome::Captured { step: b }) => a == b,
        (Outcome::NonCapture { .. }, Outcome::NonCapture { .. }) => true,
        (Outcome::Escaped { .. }, Outcome::Escaped { .. }) => true,
        _ => false,
    })
}
