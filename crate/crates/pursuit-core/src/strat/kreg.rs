//! Shared structure for strategies on k-regularly oriented grids.
//!
//! The conflux digraph of a k-regular grid is a 1-regularly oriented
//! `C_{2m} □ C_{2m}`. Its diagonals of the class orthogonal to the base
//! conflux type partition the confluxes into *slabs*; slabs of even index
//! hold the two parallel types, odd slabs the orthogonal ones. A
//! parallel-typed conflux moves all its traffic one slab up or one slab
//! down (its two exits shift the slab index the same way), so the robber
//! effectively walks on odd slabs, transiting even slabs through
//! "up-mover" or "down-mover" confluxes. Entering an even slab from below
//! always lands on an up-mover and from above on a down-mover. Covering
//! one anchor conflux of an even slab with corner cops therefore taxes the
//! whole transit parity of that slab: any robber crossing in the anchored
//! direction walks a main-shadow pebble into the anchor, where the corner
//! trap captures it.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::coord::{Coord, VertexType};
use crate::decomp::{
    escape_distances, md_class, md_shift_arithmetic, Conflux, Decomposition, DiagClass,
};
use crate::grid::OrientedGrid;

/// Precomputed k-regular context, shared by the shadow strategies.
#[derive(Clone, Debug)]
pub struct KRegCtx {
    pub n: usize,
    pub k: usize,
    /// Number of streams per axis, `2m = n/k`.
    pub m2: usize,
    pub decomp: Decomposition,
    /// Base type `τ(K1)` (the quotient vertex (0,0)).
    pub base_type: VertexType,
    /// Slab index of each quotient vertex, `0..m2`.
    delta: Vec<usize>,
    /// The parallel type whose confluxes transit upward (+δ).
    pub up_type: VertexType,
    /// Diagonal class of vertex-level main diagonals of parallel-typed
    /// vertices (the slabs' class); mirrors of main shadows live in the
    /// orthogonal class.
    pub slab_class: DiagClass,
}

pub type SharedCtx = Arc<KRegCtx>;

impl KRegCtx {
    /// Build the context; `None` when the grid is not k-regular with
    /// `2 <= k < n`.
    pub fn new(g: &OrientedGrid) -> Option<SharedCtx> {
        if !g.is_square() {
            return None;
        }
        let n = g.dims().0;
        let decomp = Decomposition::new(g);
        let k = decomp.h_streams()[0].width;
        if k < 2 || k >= n {
            return None;
        }
        if decomp.h_streams().iter().chain(decomp.v_streams()).any(|s| s.width != k) {
            return None;
        }
        let m2 = n / k;
        let quot = decomp.quotient().clone();
        let q0 = Coord::new(0, 0);
        let base_type = quot.vertex_type(q0);
        let d = base_type.orthogonal_pair()[0];
        let (class, base, shift) =
            md_shift_arithmetic(m2, base_type, q0, d).expect("orthogonal branch");
        let mut delta = alloc::vec![0usize; m2 * m2];
        for id in 0..m2 * m2 {
            let q = quot.coord(id);
            let off = class.offset(m2, q);
            delta[id] = ((off as i64 - base as i64) * shift).rem_euclid(m2 as i64) as usize;
        }
        // Which parallel type transits upward: probe the base conflux.
        let out_delta = {
            let q1 = quot.out_neighbors(q0)[0];
            delta[quot.id(q1)]
        };
        let up_type = if out_delta == 1 { base_type } else { base_type.neg() };
        let slab_class = md_class(base_type);
        Some(Arc::new(KRegCtx { n, k, m2, decomp, base_type, delta, up_type, slab_class }))
    }

    pub fn quot(&self) -> &OrientedGrid {
        self.decomp.quotient()
    }

    pub fn slab(&self, q: Coord) -> usize {
        self.delta[self.quot().id(q)]
    }

    pub fn conflux_index(&self, v: Coord) -> Coord {
        self.decomp.conflux_index_of(v)
    }

    pub fn conflux(&self, g: &OrientedGrid, q: Coord) -> Conflux {
        self.decomp.conflux(g, q)
    }

    /// Slab of the vertex's conflux.
    pub fn slab_of_vertex(&self, v: Coord) -> usize {
        self.slab(self.conflux_index(v))
    }

    /// All quotient vertices of slab `s` with type `t`, ordered by id.
    pub fn slab_confluxes(&self, s: usize, t: VertexType) -> Vec<Coord> {
        let quot = self.quot();
        (0..self.m2 * self.m2)
            .filter(|&id| self.delta[id] == s && quot.vertex_type(quot.coord(id)) == t)
            .map(|id| quot.coord(id))
            .collect()
    }

    /// The anchor for blocking upward transits through even slab `s`
    /// (an up-mover), or downward transits (`up = false`).
    pub fn anchor(&self, s: usize, up: bool) -> Coord {
        let t = if up { self.up_type } else { self.up_type.neg() };
        self.slab_confluxes(s, t)[0]
    }

    /// The unique main shadow of `r` inside the block of quotient conflux
    /// `q`, when `r`'s type matches and their slabs' diagonals agree.
    pub fn main_pebble(&self, g: &OrientedGrid, r: Coord, q: Coord) -> Option<Coord> {
        let quot = self.quot();
        let t = quot.vertex_type(q);
        if g.vertex_type(r) != t {
            return None;
        }
        let jr = self.conflux_index(r);
        if self.slab(jr) != self.slab(q) {
            return None;
        }
        let block = self.conflux(g, q);
        let (_, ve, _) = escape_distances(g, r);
        // Walk r's main diagonal; exactly one cell of the block matches.
        let tt = g.vertex_type(r);
        let (mx, my) = (tt.dx.sign(), -tt.dy.sign());
        let mut w = r;
        for _ in 0..self.n {
            if block.contains(w) {
                let (he_w, _, _) = escape_distances(g, w);
                if he_w == ve {
                    return Some(w);
                }
            }
            w = g.offset(w, mx, my);
        }
        None
    }

    /// Offset of `v` in the wall class (orthogonal to the slabs).
    pub fn wall_offset(&self, v: Coord) -> usize {
        let wall_class = match self.slab_class {
            DiagClass::Sum => DiagClass::Diff,
            DiagClass::Diff => DiagClass::Sum,
        };
        wall_class.offset(self.n, v)
    }

    /// Offset of `v` in the slab (along-tube) class.
    pub fn along_offset(&self, v: Coord) -> usize {
        self.slab_class.offset(self.n, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slabs_alternate_types_and_valves() {
        for (n, k) in [(8usize, 2usize), (12, 2), (12, 3)] {
            let g = OrientedGrid::kregular(n, k).unwrap();
            let ctx = KRegCtx::new(&g).unwrap();
            let m2 = ctx.m2;
            let quot = ctx.quot().clone();
            for id in 0..m2 * m2 {
                let q = quot.coord(id);
                let s = ctx.slab(q);
                let t = quot.vertex_type(q);
                // even slabs parallel, odd orthogonal
                assert_eq!(s % 2 == 0, t.is_parallel(ctx.base_type));
                if t.is_parallel(ctx.base_type) {
                    // both exits shift the slab the same way
                    let outs = quot.out_neighbors(q);
                    let d0 = (ctx.slab(outs[0]) + m2 - s) % m2;
                    let d1 = (ctx.slab(outs[1]) + m2 - s) % m2;
                    assert_eq!(d0, d1);
                    let up = d0 == 1;
                    assert_eq!(up, t == ctx.up_type, "up-mover iff up_type at {q}");
                } else {
                    // one exit up, one down
                    let outs = quot.out_neighbors(q);
                    let mut ds: Vec<usize> =
                        outs.iter().map(|o| (ctx.slab(*o) + m2 - s) % m2).collect();
                    ds.sort_unstable();
                    assert_eq!(ds, alloc::vec![1, m2 - 1]);
                }
            }
            // Entries from below land on up-movers, from above on
            // down-movers.
            for id in 0..m2 * m2 {
                let q = quot.coord(id);
                if ctx.slab(q) % 2 == 1 {
                    for o in quot.out_neighbors(q) {
                        let ds = (ctx.slab(o) + m2 - ctx.slab(q)) % m2;
                        let t = quot.vertex_type(o);
                        if ds == 1 {
                            assert_eq!(t, ctx.up_type, "entry from below is an up-mover");
                        } else {
                            assert_eq!(t, ctx.up_type.neg(), "entry from above is a down-mover");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn main_pebble_agrees_with_shadow_predicate() {
        let g = OrientedGrid::kregular(8, 2).unwrap();
        let ctx = KRegCtx::new(&g).unwrap();
        for rid in 0..64 {
            let r = g.coord(rid);
            for qid in 0..ctx.m2 * ctx.m2 {
                let q = ctx.quot().coord(qid);
                if let Some(p) = ctx.main_pebble(&g, r, q) {
                    assert!(crate::decomp::is_main_shadow(&g, r, p), "r={r} p={p}");
                    assert!(ctx.conflux(&g, q).contains(p));
                }
            }
            // Every vertex has a pebble in every type-matching conflux of
            // its slab diagonal.
            let jr = ctx.conflux_index(r);
            for q in ctx.slab_confluxes(ctx.slab(jr), g.vertex_type(r)) {
                assert!(ctx.main_pebble(&g, r, q).is_some());
            }
        }
    }
}
