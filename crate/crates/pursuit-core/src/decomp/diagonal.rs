//! Diagonals, shifted diagonals, diagonal distance and bands, mirrors.
//!
//! Diagonals on a square torus are residue classes: the `Diff` class fixes
//! `x - y (mod n)` (traversed by `(±1,±1)` steps), the `Sum` class fixes
//! `x + y (mod n)` (steps `(±1,∓1)`). The secondary diagonal of `v` runs in
//! the direction of `τ(v)`, the main diagonal orthogonally to it, so:
//! `τ` with equal signs gives `SD` in the `Diff` class and `MD` in `Sum`,
//! and vice versa. Representing diagonals by (class, offset) makes
//! membership and mirror arithmetic O(1).

use alloc::vec::Vec;
use core::fmt;

use crate::coord::{Coord, VertexType};
use crate::grid::OrientedGrid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagonalError {
    /// These operations require a square grid.
    NotSquare,
    /// The type argument must be orthogonal to `τ(v)`.
    NotOrthogonal,
    /// Diagonal distance requires opposite vertex types.
    NotOppositeTypes,
    /// Mirror distance requires parallel mirrors with offsets congruent
    /// modulo the stream width.
    IncommensurableMirrors,
}

impl fmt::Display for DiagonalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagonalError::NotSquare => write!(f, "diagonal operations require a square grid"),
            DiagonalError::NotOrthogonal => write!(f, "type is not orthogonal to the vertex type"),
            DiagonalError::NotOppositeTypes => {
                write!(f, "diagonal distance requires opposite vertex types")
            }
            DiagonalError::IncommensurableMirrors => {
                write!(f, "mirror offsets are not congruent modulo k")
            }
        }
    }
}

/// The two diagonal classes of a square torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagClass {
    /// `x + y (mod n)` constant.
    Sum,
    /// `x - y (mod n)` constant.
    Diff,
}

impl DiagClass {
    pub fn offset(self, n: usize, v: Coord) -> usize {
        match self {
            DiagClass::Sum => (v.x + v.y) % n,
            DiagClass::Diff => (v.x as i64 - v.y as i64).rem_euclid(n as i64) as usize,
        }
    }

    /// Offset shift caused by translating a diagonal by `(dx, dy)`.
    pub fn shift(self, dx: i64, dy: i64) -> i64 {
        match self {
            DiagClass::Sum => dx + dy,
            DiagClass::Diff => dx - dy,
        }
    }

    /// All `n` vertices with the given offset, in lexicographic order.
    pub fn line(self, n: usize, offset: usize) -> Vec<Coord> {
        (0..n)
            .map(|x| match self {
                DiagClass::Sum => {
                    Coord::new(x, (offset as i64 - x as i64).rem_euclid(n as i64) as usize)
                }
                DiagClass::Diff => {
                    Coord::new(x, (x as i64 - offset as i64).rem_euclid(n as i64) as usize)
                }
            })
            .collect()
    }
}

/// Class of the secondary diagonal of a vertex of type `t` (the diagonal
/// running in the direction of `t`).
pub fn sd_class(t: VertexType) -> DiagClass {
    if t.dx == t.dy {
        DiagClass::Diff
    } else {
        DiagClass::Sum
    }
}

/// Class of the main diagonal (orthogonal to `τ`).
pub fn md_class(t: VertexType) -> DiagClass {
    match sd_class(t) {
        DiagClass::Diff => DiagClass::Sum,
        DiagClass::Sum => DiagClass::Diff,
    }
}

fn require_square(g: &OrientedGrid) -> Result<usize, DiagonalError> {
    if g.is_square() {
        Ok(g.dims().0)
    } else {
        Err(DiagonalError::NotSquare)
    }
}

/// `SD(v)`: the diagonal through `v` with step `τ(v)`, as a vertex set.
pub fn sd_set(g: &OrientedGrid, v: Coord) -> Vec<Coord> {
    let n = g.dims().0;
    let class = sd_class(g.vertex_type(v));
    class.line(n, class.offset(n, v))
}

/// `MD(v)`: the diagonal through `v` orthogonal to `τ(v)`.
pub fn md_set(g: &OrientedGrid, v: Coord) -> Vec<Coord> {
    let n = g.dims().0;
    let class = md_class(g.vertex_type(v));
    class.line(n, class.offset(n, v))
}

/// Unit translation vector `(τ(v)+d)/2` for a type `d` orthogonal to
/// `τ(v)`.
fn half_sum(t: VertexType, d: VertexType) -> (i64, i64) {
    let (tx, ty) = t.as_signs();
    let (dx, dy) = d.as_signs();
    ((tx + dx) / 2, (ty + dy) / 2)
}

/// `MD_s(v, d)`: the main diagonal of `v` translated `s` steps in the unit
/// direction `(τ(v)+d)/2`. Errors if `d` is not orthogonal to `τ(v)`.
pub fn md_shifted(
    g: &OrientedGrid,
    v: Coord,
    s: usize,
    d: VertexType,
) -> Result<Vec<Coord>, DiagonalError> {
    let n = require_square(g)?;
    let t = g.vertex_type(v);
    if !t.is_orthogonal(d) {
        return Err(DiagonalError::NotOrthogonal);
    }
    let class = md_class(t);
    let (ux, uy) = half_sum(t, d);
    let off = (class.offset(n, v) as i64 + class.shift(ux, uy) * s as i64).rem_euclid(n as i64)
        as usize;
    Ok(class.line(n, off))
}

/// Offset-level view of the shifted main diagonals of a vertex type:
/// returns `(class, base offset, per-step shift)` for the branch `d`.
pub fn md_shift_arithmetic(
    n: usize,
    t: VertexType,
    v: Coord,
    d: VertexType,
) -> Result<(DiagClass, usize, i64), DiagonalError> {
    if !t.is_orthogonal(d) {
        return Err(DiagonalError::NotOrthogonal);
    }
    let class = md_class(t);
    let (ux, uy) = half_sum(t, d);
    Ok((class, class.offset(n, v), class.shift(ux, uy)))
}

/// Diagonal distance `𝔡(u, v)` between vertices of opposite types: the
/// least `t ∈ N` with `v ∈ MD_t(u, d) ∪ MD_t(u, -d)`.
pub fn diagonal_distance(g: &OrientedGrid, u: Coord, v: Coord) -> Result<usize, DiagonalError> {
    let n = require_square(g)?;
    let tu = g.vertex_type(u);
    if g.vertex_type(v) != tu.neg() {
        return Err(DiagonalError::NotOppositeTypes);
    }
    let mut best: Option<usize> = None;
    for d in tu.orthogonal_pair() {
        let (class, base, shift) = md_shift_arithmetic(n, tu, u, d)?;
        let target = class.offset(n, v);
        // Solve base + t*shift ≡ target (mod n), shift = ±1.
        let t = ((target as i64 - base as i64) * shift).rem_euclid(n as i64) as usize;
        best = Some(best.map_or(t, |b| b.min(t)));
    }
    Ok(best.unwrap())
}

/// The band `B(u, v)`: union of `MD_i(u, d)` for `i = 0..=𝔡(u,v)`, with `d`
/// the branch that reaches `v`.
pub fn between_band(g: &OrientedGrid, u: Coord, v: Coord) -> Result<Vec<Coord>, DiagonalError> {
    let n = require_square(g)?;
    let t = diagonal_distance(g, u, v)?;
    let tu = g.vertex_type(u);
    for d in tu.orthogonal_pair() {
        let (class, base, shift) = md_shift_arithmetic(n, tu, u, d)?;
        let target = class.offset(n, v);
        if ((target as i64 - base as i64) * shift).rem_euclid(n as i64) as usize == t {
            let mut out = Vec::new();
            for i in 0..=t {
                let off = (base as i64 + shift * i as i64).rem_euclid(n as i64) as usize;
                out.extend(class.line(n, off));
            }
            out.sort();
            out.dedup();
            return Ok(out);
        }
    }
    unreachable!("diagonal_distance found a branch")
}

/// A mirror: the diagonal line a guarded robber cannot cross.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mirror {
    pub class: DiagClass,
    pub offset: usize,
}

impl Mirror {
    pub fn contains(&self, n: usize, v: Coord) -> bool {
        self.class.offset(n, v) == self.offset
    }

    pub fn vertices(&self, n: usize) -> Vec<Coord> {
        self.class.line(n, self.offset)
    }
}

/// Distance `𝒜(ℓ, ℓ')` between parallel mirrors on a `k`-regularly oriented
/// grid: the least positive `m` with the offsets `mk` apart (cyclically).
/// Errors if the mirrors are not parallel or not congruent modulo `k`.
pub fn mirror_distance(
    n: usize,
    k: usize,
    l1: Mirror,
    l2: Mirror,
) -> Result<usize, DiagonalError> {
    if l1.class != l2.class {
        return Err(DiagonalError::IncommensurableMirrors);
    }
    let gap = (l2.offset as i64 - l1.offset as i64).rem_euclid(n as i64) as usize;
    if gap % k != 0 {
        return Err(DiagonalError::IncommensurableMirrors);
    }
    if gap == 0 {
        return Ok(0);
    }
    Ok((gap / k).min((n - gap) / k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn diagonals_have_n_vertices_and_hit_every_line() {
        for seed in 0..10 {
            let n = 5 + (seed as usize % 4);
            let g = OrientedGrid::random(n, seed);
            for x in 0..n {
                for y in 0..n {
                    let v = Coord::new(x, y);
                    for set in [sd_set(&g, v), md_set(&g, v)] {
                        assert_eq!(set.len(), n);
                        assert!(set.contains(&v));
                        let rows: BTreeSet<usize> = set.iter().map(|c| c.x).collect();
                        let cols: BTreeSet<usize> = set.iter().map(|c| c.y).collect();
                        assert_eq!(rows.len(), n, "SD/MD must meet every row");
                        assert_eq!(cols.len(), n, "SD/MD must meet every column");
                    }
                }
            }
        }
    }

    #[test]
    fn md_shift_zero_is_md_and_period_n() {
        let g = OrientedGrid::random(6, 3);
        let v = Coord::new(2, 4);
        let t = g.vertex_type(v);
        let d = t.orthogonal_pair()[0];
        assert_eq!(md_shifted(&g, v, 0, d).unwrap(), md_set(&g, v));
        assert_eq!(md_shifted(&g, v, 6, d).unwrap(), md_set(&g, v));
        assert_ne!(md_shifted(&g, v, 1, d).unwrap(), md_set(&g, v));
    }

    #[test]
    fn md_shift_union_covers_grid() {
        let g = OrientedGrid::random(5, 9);
        let v = Coord::new(0, 0);
        let t = g.vertex_type(v);
        let mut all: BTreeSet<Coord> = BTreeSet::new();
        for d in t.orthogonal_pair() {
            for s in 0..5 {
                all.extend(md_shifted(&g, v, s, d).unwrap());
            }
        }
        assert_eq!(all.len(), 25);
    }

    #[test]
    fn md_shift_rejects_parallel_type() {
        let g = OrientedGrid::uniform(4);
        let v = Coord::new(0, 0);
        let t = g.vertex_type(v);
        assert_eq!(md_shifted(&g, v, 1, t), Err(DiagonalError::NotOrthogonal));
    }

    #[test]
    fn diagonal_distance_symmetric_and_band_size() {
        // Brute force over all opposite-type pairs on small k-regular grids.
        for (n, k) in [(4usize, 2usize), (8, 2), (6, 3)] {
            let g = OrientedGrid::kregular(n, k).unwrap();
            for a in 0..n * n {
                for b in 0..n * n {
                    let u = g.coord(a);
                    let v = g.coord(b);
                    if g.vertex_type(v) != g.vertex_type(u).neg() {
                        continue;
                    }
                    let duv = diagonal_distance(&g, u, v).unwrap();
                    let dvu = diagonal_distance(&g, v, u).unwrap();
                    assert_eq!(duv, dvu, "𝔡 symmetric at {u},{v}");
                    let band = between_band(&g, u, v).unwrap();
                    assert!(band.contains(&u) && band.contains(&v));
                    assert_eq!(band.len(), (duv + 1) * n, "band is (t+1) full diagonals");
                }
            }
        }
    }

    #[test]
    fn mirror_distance_basics() {
        let a = Mirror { class: DiagClass::Sum, offset: 0 };
        let b = Mirror { class: DiagClass::Sum, offset: 4 };
        assert_eq!(mirror_distance(8, 2, a, b).unwrap(), 2);
        let c = Mirror { class: DiagClass::Sum, offset: 3 };
        assert!(mirror_distance(8, 2, a, c).is_err());
        let d = Mirror { class: DiagClass::Diff, offset: 4 };
        assert!(mirror_distance(8, 2, a, d).is_err());
    }
}
