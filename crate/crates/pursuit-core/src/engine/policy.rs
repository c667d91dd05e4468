//! Robber policies for simulated play (the verifier explores all replies
//! itself and needs no policy).

use alloc::vec::Vec;

use crate::rng::SplitMix64;

use super::digraph::Digraph;

/// How the robber picks his start vertex and his moves.
#[derive(Clone, Debug)]
pub enum RobberPolicy {
    /// Maximize the minimum undirected distance to the cops; ties broken
    /// towards the smaller vertex id.
    Greedy,
    /// Uniform among the legal moves, deterministic per seed.
    Random(SplitMix64),
    /// Fixed list of absolute positions; after the list ends either stays
    /// put or cycles back to `cycle_from`.
    Scripted { start: usize, moves: Vec<usize>, cycle_from: Option<usize>, at: usize },
    /// Never moves (start chosen greedily).
    Stationary,
}

impl RobberPolicy {
    pub fn random(seed: u64) -> RobberPolicy {
        RobberPolicy::Random(SplitMix64::new(seed))
    }

    pub fn scripted(start: usize, moves: Vec<usize>, cycle_from: Option<usize>) -> RobberPolicy {
        RobberPolicy::Scripted { start, moves, cycle_from, at: 0 }
    }

    /// Start vertex after seeing the cops' placement.
    pub fn place<G: Digraph + ?Sized>(&mut self, g: &G, cops: &[usize]) -> usize {
        match self {
            RobberPolicy::Scripted { start, .. } => *start,
            RobberPolicy::Random(rng) => rng.below(g.order()),
            RobberPolicy::Greedy | RobberPolicy::Stationary => {
                let dist = g.undirected_distances(cops);
                let mut best = 0;
                for v in 0..g.order() {
                    if dist[v] > dist[best] {
                        best = v;
                    }
                }
                best
            }
        }
    }

    /// The robber's next position. Legal choices are the out-neighbours of
    /// `robber`, plus staying put unless `forced`.
    pub fn next<G: Digraph + ?Sized>(
        &mut self,
        g: &G,
        cops: &[usize],
        robber: usize,
        forced: bool,
    ) -> usize {
        let mut choices = g.out_neighbors_of(robber);
        choices.sort_unstable();
        choices.dedup();
        if !forced {
            choices.insert(0, robber);
        }
        match self {
            RobberPolicy::Stationary => {
                if forced {
                    choices[0]
                } else {
                    robber
                }
            }
            RobberPolicy::Random(rng) => choices[rng.below(choices.len())],
            RobberPolicy::Scripted { moves, cycle_from, at, .. } => {
                if *at >= moves.len() {
                    match cycle_from {
                        Some(c) if !moves.is_empty() => {
                            *at = (*c).min(moves.len() - 1);
                        }
                        _ => return if forced { choices[0] } else { robber },
                    }
                }
                let m = moves[*at];
                *at += 1;
                m
            }
            RobberPolicy::Greedy => {
                // One multi-source BFS from the cops, then pick the choice
                // farthest from the nearest cop.
                let dist = g.undirected_distances(cops);
                let mut best = choices[0];
                let mut best_d = dist[best];
                for &c in &choices[1..] {
                    if dist[c] > best_d {
                        best = c;
                        best_d = dist[c];
                    }
                }
                best
            }
        }
    }
}
