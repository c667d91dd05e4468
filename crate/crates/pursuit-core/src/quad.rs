//! 4-regular torus quadrangulations `Q(r,s,t)` and covering projections
//! from toroidal grids.
//!
//! `Q(r,s,t)` has vertex set `Z_r × Z_s`; each of the `s` horizontal
//! `r`-cycles is `(x,y) — (x+1, y)`, and the vertical edges wrap with a
//! twist: `(x, s-1) — (x+t mod r, 0)`. Straight-ahead walks follow the
//! twist, so a vertical walk passes through the columns `x, x+t, x+2t, …`
//! and there are `gcd(r,t)` of them. Each walk carries one caller-chosen
//! direction.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coord::{Coord, Dir};
use crate::grid::OrientedGrid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadError {
    /// `t` must satisfy `0 <= t < r`.
    TwistOutOfRange { r: usize, t: usize },
    ZeroDimension,
    /// Direction vector lengths must match the walk counts.
    WalkCountMismatch { expected_h: usize, expected_v: usize, got_h: usize, got_v: usize },
    /// No cover side length under the configured bound.
    CoverBoundExceeded { bound: usize },
}

impl fmt::Display for QuadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadError::TwistOutOfRange { r, t } => write!(f, "twist {t} out of range for r={r}"),
            QuadError::ZeroDimension => write!(f, "r and s must be positive"),
            QuadError::WalkCountMismatch { expected_h, expected_v, got_h, got_v } => write!(
                f,
                "expected {expected_h} horizontal and {expected_v} vertical walk directions, got {got_h}/{got_v}"
            ),
            QuadError::CoverBoundExceeded { bound } => {
                write!(f, "no covering grid side length found up to {bound}")
            }
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A quadrangulation `Q(r,s,t)` of the torus with straight-ahead oriented
/// walks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadrangulation {
    r: usize,
    s: usize,
    t: usize,
    /// One direction per horizontal `r`-cycle, indexed by `y`.
    hdir: Vec<Dir>,
    /// One direction per vertical walk, indexed by `x mod gcd(r,t)`.
    vdir: Vec<Dir>,
}

impl Quadrangulation {
    /// `Q(r,s,t)` with all walks directed `+`.
    pub fn new(r: usize, s: usize, t: usize) -> Result<Quadrangulation, QuadError> {
        let g = if t == 0 { r } else { gcd(r, t) };
        Quadrangulation::with_walk_dirs(r, s, t, vec![Dir::Plus; s], vec![Dir::Plus; g])
    }

    pub fn with_walk_dirs(
        r: usize,
        s: usize,
        t: usize,
        hdir: Vec<Dir>,
        vdir: Vec<Dir>,
    ) -> Result<Quadrangulation, QuadError> {
        if r == 0 || s == 0 {
            return Err(QuadError::ZeroDimension);
        }
        if t >= r {
            return Err(QuadError::TwistOutOfRange { r, t });
        }
        let g = if t == 0 { r } else { gcd(r, t) };
        if hdir.len() != s || vdir.len() != g {
            return Err(QuadError::WalkCountMismatch {
                expected_h: s,
                expected_v: g,
                got_h: hdir.len(),
                got_v: vdir.len(),
            });
        }
        Ok(Quadrangulation { r, s, t, hdir, vdir })
    }

    pub fn params(&self) -> (usize, usize, usize) {
        (self.r, self.s, self.t)
    }

    pub fn vertex_count(&self) -> usize {
        self.r * self.s
    }

    /// Number of vertical straight-ahead walks, `gcd(r,t)` (or `r` if `t=0`).
    pub fn vertical_walk_count(&self) -> usize {
        self.vdir.len()
    }

    pub fn id(&self, v: Coord) -> usize {
        v.x * self.s + v.y
    }

    pub fn coord(&self, id: usize) -> Coord {
        Coord::new(id / self.s, id % self.s)
    }

    fn walk_class(&self, x: usize) -> usize {
        x % self.vdir.len()
    }

    /// Successor along the vertical walk in the walk's own direction.
    pub fn step_vertical(&self, v: Coord) -> Coord {
        match self.vdir[self.walk_class(v.x)] {
            Dir::Plus => {
                if v.y + 1 < self.s {
                    Coord::new(v.x, v.y + 1)
                } else {
                    Coord::new((v.x + self.t) % self.r, 0)
                }
            }
            Dir::Minus => {
                if v.y > 0 {
                    Coord::new(v.x, v.y - 1)
                } else {
                    Coord::new((v.x + self.r - self.t) % self.r, self.s - 1)
                }
            }
        }
    }

    /// Successor along the horizontal `r`-cycle of `v`.
    pub fn step_horizontal(&self, v: Coord) -> Coord {
        let d = self.hdir[v.y].sign();
        Coord::new((v.x as i64 + d).rem_euclid(self.r as i64) as usize, v.y)
    }

    pub fn out_neighbors(&self, v: Coord) -> [Coord; 2] {
        [self.step_horizontal(v), self.step_vertical(v)]
    }

    pub fn in_neighbors(&self, v: Coord) -> [Coord; 2] {
        let h = {
            let d = self.hdir[v.y].sign();
            Coord::new((v.x as i64 - d).rem_euclid(self.r as i64) as usize, v.y)
        };
        let vv = match self.vdir[self.walk_class(v.x)] {
            Dir::Plus => {
                if v.y > 0 {
                    Coord::new(v.x, v.y - 1)
                } else {
                    Coord::new((v.x + self.r - self.t) % self.r, self.s - 1)
                }
            }
            Dir::Minus => {
                if v.y + 1 < self.s {
                    Coord::new(v.x, v.y + 1)
                } else {
                    Coord::new((v.x + self.t) % self.r, 0)
                }
            }
        };
        [h, vv]
    }

    /// Length of the straight-ahead vertical walk through `v` (follows the
    /// twist until it closes).
    pub fn vertical_walk_len(&self, v: Coord) -> usize {
        let mut cur = self.step_vertical(v);
        let mut len = 1;
        while cur != v {
            cur = self.step_vertical(cur);
            len += 1;
        }
        len
    }

    /// Smallest `n` such that `C_n □ C_n` covers this quadrangulation:
    /// the least `n` with `r | n`, `s | n` and `rs | nt`, searched up to
    /// `bound`.
    pub fn minimal_cover_n(&self, bound: usize) -> Result<usize, QuadError> {
        let (r, s, t) = (self.r, self.s, self.t);
        let mut n = 1;
        while n <= bound {
            if n % r == 0 && n % s == 0 && (n * t) % (r * s) == 0 {
                return Ok(n);
            }
            n += 1;
        }
        Err(QuadError::CoverBoundExceeded { bound })
    }

    pub fn descriptor(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let _ = write!(out, "quad:{}:{}:{}:", self.r, self.s, self.t);
        for d in &self.hdir {
            out.push(d.as_char());
        }
        out.push(':');
        for d in &self.vdir {
            out.push(d.as_char());
        }
        out
    }
}

/// A covering projection `π: C_n □ C_n → Q(r,s,t)`.
///
/// Rows of the cover (movement in `y`) project onto vertical walks, columns
/// (movement in `x`) onto horizontal cycles; the cover's orientation is the
/// pull-back of the quadrangulation's walk directions, so `π` maps arcs to
/// arcs and is locally bijective.
#[derive(Clone, Debug)]
pub struct CoveringMap {
    source: OrientedGrid,
    target: Quadrangulation,
    n: usize,
}

impl CoveringMap {
    /// The minimal cover of `q` (side length [`Quadrangulation::minimal_cover_n`]).
    pub fn minimal(q: &Quadrangulation, bound: usize) -> Result<CoveringMap, QuadError> {
        let n = q.minimal_cover_n(bound)?;
        CoveringMap::with_side(q, n)
    }

    /// Cover with an explicit side length (must satisfy the divisibility
    /// conditions; callers normally use [`CoveringMap::minimal`]).
    pub fn with_side(q: &Quadrangulation, n: usize) -> Result<CoveringMap, QuadError> {
        let (r, s, t) = q.params();
        if n % r != 0 || n % s != 0 || (n * t) % (r * s) != 0 {
            return Err(QuadError::CoverBoundExceeded { bound: n });
        }
        let row_dir: Vec<Dir> = (0..n).map(|x| q.vdir[q.walk_class(x % r)]).collect();
        let col_dir: Vec<Dir> = (0..n).map(|y| q.hdir[y % s]).collect();
        // rect() rather than make(): minimal covers of tiny quadrangulations
        // can have n < 3 and are still valid digraphs for the game.
        let source = OrientedGrid::rect(n, n, row_dir, col_dir).expect("cover grid");
        Ok(CoveringMap { source, target: q.clone(), n })
    }

    pub fn source(&self) -> &OrientedGrid {
        &self.source
    }

    pub fn target(&self) -> &Quadrangulation {
        &self.target
    }

    pub fn side(&self) -> usize {
        self.n
    }

    /// `π(x,y) = ((x + t·⌊y/s⌋) mod r, y mod s)`: reduction modulo the
    /// lattice generated by `(r,0)` and `(t,s)`.
    pub fn project(&self, v: Coord) -> Coord {
        let (r, s, t) = self.target.params();
        let block = v.y / s;
        Coord::new((v.x + t * block) % r, v.y % s)
    }

    /// A canonical point of the fiber over `q`-vertex `w` (the lexicographic
    /// least preimage, which is `w` itself read as cover coordinates).
    pub fn fiber_base(&self, w: Coord) -> Coord {
        Coord::new(w.x, w.y)
    }

    /// Lift a target move `from -> to` (an arc of the quadrangulation or a
    /// stay) at the source vertex `at` with `π(at) = from`. Local
    /// bijectivity makes the lift unique.
    pub fn lift_move(&self, at: Coord, from: Coord, to: Coord) -> Option<Coord> {
        debug_assert_eq!(self.project(at), from);
        if from == to {
            return Some(at);
        }
        for u in self.source.out_neighbors(at) {
            if self.project(u) == to {
                return Some(u);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    #[test]
    fn q_rst_zero_twist_is_product_of_cycles() {
        let q = Quadrangulation::new(4, 3, 0).unwrap();
        // Every vertical walk has length s, every horizontal cycle length r.
        for x in 0..4 {
            assert_eq!(q.vertical_walk_len(Coord::new(x, 0)), 3);
        }
        assert_eq!(q.vertical_walk_count(), 4);
    }

    #[test]
    fn q441_vertical_walk_passes_all_columns() {
        let q = Quadrangulation::new(4, 4, 1).unwrap();
        assert_eq!(q.vertical_walk_len(Coord::new(0, 0)), 16);
        assert_eq!(q.vertical_walk_count(), 1);
    }

    #[test]
    fn q110_single_vertex_two_loops() {
        let q = Quadrangulation::new(1, 1, 0).unwrap();
        let v = Coord::new(0, 0);
        assert_eq!(q.out_neighbors(v), [v, v]);
    }

    #[test]
    fn minimal_cover_examples() {
        assert_eq!(Quadrangulation::new(4, 4, 0).unwrap().minimal_cover_n(10_000).unwrap(), 4);
        assert_eq!(Quadrangulation::new(4, 4, 1).unwrap().minimal_cover_n(10_000).unwrap(), 16);
        assert_eq!(Quadrangulation::new(2, 3, 1).unwrap().minimal_cover_n(10_000).unwrap(), 6);
    }

    #[test]
    fn in_out_adjoint() {
        let q = Quadrangulation::with_walk_dirs(
            4,
            3,
            2,
            vec![Dir::Plus, Dir::Minus, Dir::Plus],
            vec![Dir::Plus, Dir::Minus],
        )
        .unwrap();
        for id in 0..q.vertex_count() {
            let v = q.coord(id);
            for u in q.out_neighbors(v) {
                assert!(q.in_neighbors(u).contains(&v), "v={v} u={u}");
            }
        }
    }

    #[test]
    fn projection_is_homomorphism_with_uniform_fibers() {
        for (r, s, t) in [(4, 4, 1), (2, 3, 1), (3, 3, 2), (4, 2, 2)] {
            let q = Quadrangulation::new(r, s, t).unwrap();
            let cov = CoveringMap::minimal(&q, 10_000).unwrap();
            let n = cov.side();
            let mut fibers: BTreeMap<Coord, usize> = BTreeMap::new();
            for x in 0..n {
                for y in 0..n {
                    let v = Coord::new(x, y);
                    let pv = cov.project(v);
                    *fibers.entry(pv).or_insert(0) += 1;
                    // arcs map to arcs
                    let outs = cov.source().out_neighbors(v);
                    let pouts = q.out_neighbors(pv);
                    for u in outs {
                        assert!(pouts.contains(&cov.project(u)), "edge image missing at {v}");
                    }
                    // local bijectivity on out-neighbours
                    assert_ne!(cov.project(outs[0]), cov.project(outs[1]), "out arcs collide at {v}");
                    let ins = cov.source().in_neighbors(v);
                    assert_ne!(cov.project(ins[0]), cov.project(ins[1]), "in arcs collide at {v}");
                }
            }
            assert_eq!(fibers.len(), q.vertex_count());
            for (_, size) in fibers {
                assert_eq!(size, n * n / (r * s));
            }
        }
    }

    #[test]
    fn t_zero_projection_is_componentwise_mod() {
        let q = Quadrangulation::new(3, 2, 0).unwrap();
        let cov = CoveringMap::minimal(&q, 10_000).unwrap();
        for x in 0..cov.side() {
            for y in 0..cov.side() {
                assert_eq!(cov.project(Coord::new(x, y)), Coord::new(x % 3, y % 2));
            }
        }
    }
}
