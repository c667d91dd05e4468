//! Exhaustive controller verification.
//!
//! A deterministic controller and a robber position span a finite product
//! graph: the cops' half-move is a function of the state, the robber then
//! branches over `{stay} ∪ out-neighbours`. The cops win from a state iff
//! every path out of it reaches capture, which over a finite graph means no
//! cycle of non-capture states is reachable. A depth-first search with
//! gray/black marking decides this and extracts a concrete escape cycle
//! when one exists.
//!
//! Controllers may also declare a goal (confinement to a stream, an
//! established shadow guard): states whose status is a goal may cycle,
//! provided the goal invariant keeps holding. A gray hit on a pursuing
//! state is a robber escape.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::controller::{Controller, CtrlStatus, KeyWriter};
use super::digraph::Digraph;
use super::play::{IllegalMove, PlayError};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Whether the robber may stay put. Trap fragments are verified with
    /// `false`, realizing the paper's standing "the robber is forced to
    /// move" assumption (forcing is a chaser's only role); composite
    /// controllers carry their own chaser and verify with `true`.
    pub allow_stay: bool,
    pub max_product_states: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions { allow_stay: true, max_product_states: 20_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every play from every start reaches capture.
    AllCaptured { max_capture_steps: usize },
    /// Every play reaches capture or enters (and keeps) a declared goal.
    AllSettled { goal_states: usize, max_capture_steps: usize },
    /// Concrete escape: the robber position sequence from `start` revisits
    /// the product state first seen at depth `cycle_start`.
    Escape { start: usize, moves: Vec<usize>, cycle_start: usize },
    /// A goal invariant broke or a goal status regressed.
    GoalViolated { start: usize, moves: Vec<usize>, reason: String },
    /// Product-state cap exceeded.
    Inconclusive { explored: usize },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::AllCaptured { .. } | Verdict::AllSettled { .. })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub verdict: Verdict,
    pub product_states: usize,
    /// Starts the controller refused, with reasons.
    pub refused: Vec<(usize, String)>,
}

struct Node<G: Digraph + ?Sized> {
    ctrl: Box<dyn Controller<G>>,
    cops: Vec<usize>,
    robber: usize,
}

enum Task<G: Digraph + ?Sized> {
    Enter(Node<G>),
    /// Finish a state: blacken `key` with height from `child_keys`.
    Exit { key: Vec<u8>, child_keys: Vec<Vec<u8>> },
}

fn state_key<G: Digraph + ?Sized>(node: &Node<G>) -> Vec<u8> {
    let mut key = Vec::new();
    KeyWriter::usize(&mut key, node.robber);
    node.ctrl.write_state_key(&mut key);
    key
}

/// Verify a controller against all robber replies from each start vertex.
///
/// `proto` is cloned afresh per start; its `place` must be deterministic.
/// Black memoization is shared across starts (a settled product state is
/// settled no matter where the play began).
pub fn verify_controller<G: Digraph + ?Sized>(
    g: &G,
    proto: &dyn Controller<G>,
    starts: &[usize],
    opts: &VerifyOptions,
) -> Result<VerifyReport, PlayError> {
    let mut black: HashMap<Vec<u8>, u32> = HashMap::new();
    let mut refused: Vec<(usize, String)> = Vec::new();
    let mut goal_states: usize = 0;
    let mut max_height: u32 = 0;

    for &start in starts {
        let mut ctrl = proto.clone_box();
        let cops = ctrl.place(g);
        if let Err(e) = ctrl.observe(g, start) {
            refused.push((start, e.0));
            continue;
        }
        if cops.contains(&start) {
            continue; // captured at placement
        }

        let mut gray: HashMap<Vec<u8>, usize> = HashMap::new();
        let mut path: Vec<usize> = Vec::new(); // robber positions on the DFS path
        let mut tasks: Vec<Task<G>> = Vec::new();
        tasks.push(Task::Enter(Node { ctrl, cops, robber: start }));

        while let Some(task) = tasks.pop() {
            match task {
                Task::Enter(mut node) => {
                    let key = state_key(&node);
                    if let Some(&h) = black.get(&key) {
                        max_height = max_height.max(h);
                        continue;
                    }
                    let status = node.ctrl.status();
                    if let Some(&depth) = gray.get(&key) {
                        if let CtrlStatus::Goal(_) = status {
                            continue; // cycling inside the goal is the point
                        }
                        let mut moves = path.clone();
                        moves.push(node.robber);
                        return Ok(VerifyReport {
                            verdict: Verdict::Escape { start, moves, cycle_start: depth },
                            product_states: black.len() + gray.len(),
                            refused,
                        });
                    }
                    if black.len() + gray.len() >= opts.max_product_states {
                        return Ok(VerifyReport {
                            verdict: Verdict::Inconclusive { explored: black.len() + gray.len() },
                            product_states: black.len() + gray.len(),
                            refused,
                        });
                    }

                    if let CtrlStatus::Goal(_) = status {
                        goal_states += 1;
                        if !node.ctrl.goal_holds(g, node.robber) {
                            let mut moves = path.clone();
                            moves.push(node.robber);
                            return Ok(VerifyReport {
                                verdict: Verdict::GoalViolated {
                                    start,
                                    moves,
                                    reason: String::from("goal invariant failed"),
                                },
                                product_states: black.len() + gray.len(),
                                refused,
                            });
                        }
                    }

                    gray.insert(key.clone(), path.len());
                    path.push(node.robber);

                    // Cops' half-move.
                    let old_cops = node.cops.clone();
                    let new_cops = node.ctrl.step(g, node.robber);
                    for (i, (&from, &to)) in old_cops.iter().zip(new_cops.iter()).enumerate() {
                        if !(from == to || g.out_neighbors_of(from).contains(&to)) {
                            return Err(PlayError::IllegalMove(IllegalMove {
                                cop_index: i,
                                step: path.len(),
                                from,
                                to,
                            }));
                        }
                    }
                    let new_status = node.ctrl.status();
                    let captured = new_cops.contains(&node.robber);
                    if let CtrlStatus::Goal(a) = status {
                        let ok = captured || matches!(new_status, CtrlStatus::Goal(b) if b == a);
                        if !ok {
                            return Ok(VerifyReport {
                                verdict: Verdict::GoalViolated {
                                    start,
                                    moves: path.clone(),
                                    reason: String::from("goal status regressed"),
                                },
                                product_states: black.len() + gray.len(),
                                refused,
                            });
                        }
                    }

                    if captured {
                        tasks.push(Task::Exit { key, child_keys: Vec::new() });
                        continue;
                    }

                    // Robber replies; walking into a cop is a captured leaf.
                    let mut replies = g.out_neighbors_of(node.robber);
                    replies.sort_unstable();
                    replies.dedup();
                    if opts.allow_stay {
                        replies.insert(0, node.robber);
                    }
                    let mut child_keys = Vec::new();
                    let mut child_nodes = Vec::new();
                    for r in replies {
                        if new_cops.contains(&r) {
                            continue;
                        }
                        let child = Node {
                            ctrl: node.ctrl.clone_box(),
                            cops: new_cops.clone(),
                            robber: r,
                        };
                        child_keys.push(state_key(&child));
                        child_nodes.push(child);
                    }
                    tasks.push(Task::Exit { key, child_keys });
                    // Reverse so children run in deterministic ascending order.
                    while let Some(c) = child_nodes.pop() {
                        tasks.push(Task::Enter(c));
                    }
                }
                Task::Exit { key, child_keys } => {
                    let mut h: u32 = 0;
                    for ck in &child_keys {
                        // A child not in black was settled via a goal cycle
                        // (gray hit); its height contribution is zero.
                        if let Some(&ch) = black.get(ck) {
                            h = h.max(ch.saturating_add(1));
                        } else {
                            h = h.max(1);
                        }
                    }
                    max_height = max_height.max(h);
                    gray.remove(&key);
                    black.insert(key, h);
                    path.pop();
                }
            }
        }
    }

    let verdict = if goal_states == 0 {
        Verdict::AllCaptured { max_capture_steps: max_height as usize }
    } else {
        Verdict::AllSettled { goal_states, max_capture_steps: max_height as usize }
    };
    Ok(VerifyReport { verdict, product_states: black.len(), refused })
}
