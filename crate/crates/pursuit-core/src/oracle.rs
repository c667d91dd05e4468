//! Exact cop-number oracle: backward-induction fixpoint over full game
//! states of a finite digraph.
//!
//! A state is `(sorted cop tuple, robber vertex, side to move)`. Cop tuples
//! are multisets (cops are interchangeable and may share a vertex), ranked
//! by the combinadic so the whole table lives in flat arrays. Labels are
//! computed by reverse BFS from capture states with per-state counters of
//! unresolved successors: a cop-to-move state wins when *some* successor
//! wins, a robber-to-move state when *all* of its moves (staying included)
//! lead to winning states.

use alloc::boxed::Box;
use alloc::collections::VecDeque;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::engine::{ActivationError, Controller, Digraph, KeyWriter};

#[derive(Clone, Debug)]
pub struct SolveConfig {
    /// Hard cap on `#cop-multisets * |V| * 2`.
    pub max_states: usize,
}

impl Default for SolveConfig {
    fn default() -> SolveConfig {
        SolveConfig { max_states: 120_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CopNumber {
    Exact(usize),
    /// No `k <= k_max` wins.
    AboveKMax(usize),
    /// State cap exceeded before an answer was reached.
    Inconclusive { states_needed: usize },
}

/// Binomial table for combinadic ranking.
#[derive(Clone, Debug)]
struct Binom {
    n: usize,
    k: usize,
    table: Vec<u64>,
}

impl Binom {
    fn new(n: usize, k: usize) -> Binom {
        let mut table = alloc::vec![0u64; (n + 1) * (k + 1)];
        for i in 0..=n {
            table[i * (k + 1)] = 1;
            for j in 1..=k.min(i) {
                // C(i,j) = C(i-1,j-1) + C(i-1,j); entries above the row's
                // diagonal stay zero, which is exactly C of j > i.
                table[i * (k + 1) + j] =
                    table[(i - 1) * (k + 1) + j - 1] + table[(i - 1) * (k + 1) + j];
            }
        }
        Binom { n, k, table }
    }

    fn c(&self, n: usize, k: usize) -> u64 {
        if k > self.k || n > self.n {
            return 0;
        }
        if k > n {
            return 0;
        }
        self.table[n * (self.k + 1) + k]
    }
}

fn multiset_count(v: usize, k: usize) -> u64 {
    Binom::new(v + k, k).c(v + k - 1, k)
}

/// Rank of a sorted cop tuple in the combinadic order.
fn rank_tuple(binom: &Binom, tuple: &[usize]) -> usize {
    let mut r = 0u64;
    for (i, &c) in tuple.iter().enumerate() {
        r += binom.c(c + i, i + 1);
    }
    r as usize
}

/// Advance a sorted multiset odometer; false when exhausted.
fn next_tuple(t: &mut [usize], v: usize) -> bool {
    let k = t.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if t[i] + 1 < v {
            t[i] += 1;
            for j in i + 1..k {
                t[j] = t[i];
            }
            return true;
        }
    }
    false
}

const UNKNOWN: u8 = 0;
const COP_WIN: u8 = 1;

/// Fully solved game for one `(digraph, k)` pair.
pub struct SolvedGame {
    pub k: usize,
    v: usize,
    binom: Binom,
    label: Vec<u8>,
    dist: Vec<u16>,
    out: Vec<Vec<usize>>,
    into: Vec<Vec<usize>>,
    /// A winning initial placement, if one exists.
    pub winning_placement: Option<Vec<usize>>,
    pub state_count: usize,
}

impl SolvedGame {
    #[inline]
    fn index(&self, rank: usize, robber: usize, side: usize) -> usize {
        (rank * self.v + robber) * 2 + side
    }

    fn rank(&self, sorted: &[usize]) -> usize {
        rank_tuple(&self.binom, sorted)
    }

    pub fn cops_win(&self) -> bool {
        self.winning_placement.is_some()
    }

    /// Whether the cops win from an explicit mid-game position.
    pub fn wins_from(&self, cops_sorted: &[usize], robber: usize, cops_to_move: bool) -> bool {
        let side = if cops_to_move { 0 } else { 1 };
        self.label[self.index(self.rank(cops_sorted), robber, side)] == COP_WIN
    }

    pub fn capture_distance(&self, cops_sorted: &[usize], robber: usize) -> u16 {
        self.dist[self.index(self.rank(cops_sorted), robber, 0)]
    }
}

/// Decide whether `k` cops win on `g` with optimal play on both sides
/// (cops place first, robber second, cops move first). Returns the solved
/// table or `Err(states_needed)` when over the cap.
pub fn solve_k(g: &impl Digraph, k: usize, config: &SolveConfig) -> Result<SolvedGame, usize> {
    let v = g.order();
    assert!(k >= 1 && v >= 1);
    let ranks = multiset_count(v, k);
    let states = ranks.saturating_mul(v as u64).saturating_mul(2);
    if states > config.max_states as u64 {
        return Err(states.min(usize::MAX as u64) as usize);
    }
    let ranks = ranks as usize;
    let states = states as usize;

    let out: Vec<Vec<usize>> = (0..v)
        .map(|x| {
            let mut o = g.out_neighbors_of(x);
            o.sort_unstable();
            o.dedup();
            o
        })
        .collect();
    let into: Vec<Vec<usize>> = (0..v)
        .map(|x| {
            let mut o = g.in_neighbors_of(x);
            o.sort_unstable();
            o.dedup();
            o
        })
        .collect();

    // Robber move counts: stay + distinct out-neighbours (stay may already
    // be an out-neighbour via a loop).
    let robber_moves: Vec<Vec<usize>> = (0..v)
        .map(|r| {
            let mut m = out[r].clone();
            if !m.contains(&r) {
                m.push(r);
                m.sort_unstable();
            }
            m
        })
        .collect();

    let binom = Binom::new(v + k, k);
    let mut game = SolvedGame {
        k,
        v,
        binom,
        label: alloc::vec![UNKNOWN; states],
        dist: alloc::vec![0u16; states],
        out,
        into,
        winning_placement: None,
        state_count: states,
    };
    let mut counter = alloc::vec![0u8; ranks * v];
    let mut queue: VecDeque<u32> = VecDeque::new();

    // Seed terminals and counters.
    {
        let mut tuple = alloc::vec![0usize; k];
        loop {
            let rank = game.rank(&tuple);
            for r in 0..v {
                let captured = tuple.contains(&r);
                if captured {
                    for side in 0..2 {
                        let idx = game.index(rank, r, side);
                        game.label[idx] = COP_WIN;
                        game.dist[idx] = 0;
                        queue.push_back(idx as u32);
                    }
                } else {
                    counter[rank * v + r] = robber_moves[r].len() as u8;
                }
            }
            if !next_tuple(&mut tuple, v) {
                break;
            }
        }
    }

    // Buffers for predecessor enumeration of combined cop moves.
    let mut tuple_buf = alloc::vec![0usize; k];
    let mut options: Vec<&[usize]> = Vec::with_capacity(k);
    let mut choice = alloc::vec![0usize; k];
    let mut pred = alloc::vec![0usize; k];

    while let Some(idx) = queue.pop_front() {
        let idx = idx as usize;
        let side = idx & 1;
        let robber = (idx >> 1) % v;
        let rank = (idx >> 1) / v;
        let d = game.dist[idx];

        if side == 1 {
            // Robber-to-move won: cop-to-move predecessors (C', robber)
            // where some combined cop move sends C' to C. Unrank C once.
            unrank(&game.binom, rank, k, &mut tuple_buf);
            options.clear();
            for i in 0..k {
                options.push(&game.into[tuple_buf[i]]);
            }
            // Odometer over per-cop predecessor choices; index v means
            // "stayed" (predecessor equals the current vertex).
            for c in choice.iter_mut() {
                *c = 0;
            }
            loop {
                for i in 0..k {
                    pred[i] =
                        if choice[i] == options[i].len() { tuple_buf[i] } else { options[i][choice[i]] };
                }
                pred.sort_unstable();
                let prank = rank_tuple(&game.binom, &pred);
                let pidx = game.index(prank, robber, 0);
                if game.label[pidx] == UNKNOWN {
                    game.label[pidx] = COP_WIN;
                    game.dist[pidx] = d.saturating_add(1);
                    queue.push_back(pidx as u32);
                }
                // advance odometer
                let mut i = 0;
                loop {
                    if i == k {
                        break;
                    }
                    choice[i] += 1;
                    if choice[i] <= options[i].len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        } else {
            // Cop-to-move won: robber-to-move predecessors (C, r') with
            // robber ∈ moves(r'), i.e. r' = robber or r' an in-neighbour.
            let mut preds = game.into[robber].clone();
            if !preds.contains(&robber) {
                preds.push(robber);
            }
            for r2 in preds {
                let pidx = game.index(rank, r2, 1);
                if game.label[pidx] == UNKNOWN {
                    let c = &mut counter[rank * v + r2];
                    debug_assert!(*c > 0);
                    *c -= 1;
                    if *c == 0 {
                        game.label[pidx] = COP_WIN;
                        game.dist[pidx] = d.saturating_add(1);
                        queue.push_back(pidx as u32);
                    }
                }
            }
        }
    }

    // Best initial placement: lexicographically least multiset that wins
    // against every robber placement.
    let mut tuple = alloc::vec![0usize; k];
    loop {
        let rank = game.rank(&tuple);
        let all_win = (0..v).all(|r| game.label[game.index(rank, r, 0)] == COP_WIN);
        if all_win {
            game.winning_placement = Some(tuple.clone());
            break;
        }
        if !next_tuple(&mut tuple, v) {
            break;
        }
    }

    Ok(game)
}

/// Inverse of [`rank_tuple`].
fn unrank(binom: &Binom, rank: usize, k: usize, out: &mut [usize]) {
    let mut r = rank as u64;
    for i in (0..k).rev() {
        // Largest d with C(d, i+1) <= r, by binary search.
        let mut lo = i;
        let mut hi = binom.n;
        while lo < hi {
            let mid = (lo + hi + 1) / 2;
            if binom.c(mid, i + 1) <= r {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        r -= binom.c(lo, i + 1);
        out[i] = lo - i;
    }
    debug_assert_eq!(r, 0);
}

/// `cop_win_with_k`: decision plus a reusable solved table.
pub fn cop_win_with_k(g: &impl Digraph, k: usize, config: &SolveConfig) -> Result<bool, usize> {
    solve_k(g, k, config).map(|s| s.cops_win())
}

/// Least `k <= k_max` that wins, `AboveKMax` otherwise, `Inconclusive` if
/// the cap interferes before an answer is known.
pub fn cop_number(g: &impl Digraph, k_max: usize, config: &SolveConfig) -> CopNumber {
    for k in 1..=k_max {
        match solve_k(g, k, config) {
            Ok(s) => {
                if s.cops_win() {
                    return CopNumber::Exact(k);
                }
            }
            Err(needed) => return CopNumber::Inconclusive { states_needed: needed },
        }
    }
    CopNumber::AboveKMax(k_max)
}

/// The positional strategy extracted from a solved game, playable through
/// the engine. Deterministic: among distance-minimizing combined moves the
/// lexicographically first is taken.
pub struct OracleController {
    solved: Arc<SolvedGame>,
    cops: Vec<usize>,
}

impl OracleController {
    pub fn new(solved: Arc<SolvedGame>) -> OracleController {
        OracleController { solved, cops: Vec::new() }
    }
}

impl Clone for OracleController {
    fn clone(&self) -> OracleController {
        OracleController { solved: Arc::clone(&self.solved), cops: self.cops.clone() }
    }
}

impl<G: Digraph> Controller<G> for OracleController {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn cop_count(&self) -> usize {
        self.solved.k
    }

    fn place(&mut self, _g: &G) -> Vec<usize> {
        self.cops = self
            .solved
            .winning_placement
            .clone()
            .expect("oracle strategy requires a winning solved game");
        self.cops.clone()
    }

    fn observe(&mut self, _g: &G, _robber: usize) -> Result<(), ActivationError> {
        Ok(())
    }

    fn step(&mut self, _g: &G, robber: usize) -> Vec<usize> {
        let s = &self.solved;
        if self.cops.contains(&robber) {
            return self.cops.clone();
        }
        let k = s.k;
        // Enumerate combined moves (stay or out-arc per cop), keep the one
        // minimizing the solved distance of the successor state.
        let mut best: Option<(u16, Vec<usize>)> = None;
        let mut choice = alloc::vec![0usize; k];
        let mut cand = alloc::vec![0usize; k];
        loop {
            for i in 0..k {
                let opts = &s.out[self.cops[i]];
                cand[i] = if choice[i] == 0 { self.cops[i] } else { opts[choice[i] - 1] };
            }
            let mut sorted = cand.clone();
            sorted.sort_unstable();
            if sorted.contains(&robber) {
                best = Some((0, cand.clone()));
                break;
            }
            let rank = s.rank(&sorted);
            let idx = s.index(rank, robber, 1);
            if s.label[idx] == COP_WIN {
                let d = s.dist[idx];
                if best.as_ref().map_or(true, |(bd, _)| d < *bd) {
                    best = Some((d, cand.clone()));
                }
            }
            let mut i = 0;
            loop {
                if i == k {
                    break;
                }
                choice[i] += 1;
                if choice[i] <= s.out[self.cops[i]].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
        let (_, mv) = best.expect("winning state has a winning move");
        self.cops = mv;
        self.cops.clone()
    }

    fn write_state_key(&self, out: &mut Vec<u8>) {
        let mut sorted = self.cops.clone();
        sorted.sort_unstable();
        KeyWriter::slice(out, &sorted);
    }

    fn clone_box(&self) -> Box<dyn Controller<G>> {
        Box::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::AdjDigraph;

    #[test]
    fn rank_is_a_bijection_with_inverse() {
        let v = 7;
        for k in 1..=3 {
            let binom = Binom::new(v + k, k);
            let count = multiset_count(v, k) as usize;
            let mut seen = alloc::vec![false; count];
            let mut tuple = alloc::vec![0usize; k];
            let mut total = 0usize;
            loop {
                let r = rank_tuple(&binom, &tuple);
                assert!(r < count);
                assert!(!seen[r], "rank collision at {tuple:?}");
                seen[r] = true;
                let mut un = alloc::vec![0usize; k];
                unrank(&binom, r, k, &mut un);
                assert_eq!(un, tuple);
                total += 1;
                if !next_tuple(&mut tuple, v) {
                    break;
                }
            }
            assert_eq!(total, count);
        }
    }

    #[test]
    fn single_vertex_loop_needs_one_cop() {
        let g = AdjDigraph::from_arcs(1, &[(0, 0)], "loop");
        assert_eq!(cop_number(&g, 2, &SolveConfig::default()), CopNumber::Exact(1));
    }

    #[test]
    fn directed_cycles_need_two_cops() {
        for n in 3..=8 {
            let g = AdjDigraph::directed_cycle(n);
            assert!(!cop_win_with_k(&g, 1, &SolveConfig::default()).unwrap(), "C_{n}: one cop");
            assert!(cop_win_with_k(&g, 2, &SolveConfig::default()).unwrap(), "C_{n}: two cops");
        }
        for n in 1..=2 {
            let g = AdjDigraph::directed_cycle(n);
            assert!(cop_win_with_k(&g, 1, &SolveConfig::default()).unwrap());
        }
    }

    #[test]
    fn cap_reports_inconclusive() {
        let g = AdjDigraph::directed_cycle(6);
        let tiny = SolveConfig { max_states: 10 };
        assert!(matches!(
            cop_number(&g, 2, &tiny),
            CopNumber::Inconclusive { states_needed: _ }
        ));
    }
}
