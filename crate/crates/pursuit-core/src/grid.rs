//! Straight-ahead oriented toroidal grids.
//!
//! An [`OrientedGrid`] is `C_nx □ C_ny` with every line (row or column)
//! oriented as a directed cycle. The spec'd artifact is the square grid
//! `C_n □ C_n` built by [`OrientedGrid::make`]; the rectangular form exists
//! because the conflux digraph of a square grid is itself a straight-ahead
//! grid `C_k □ C_l` that reuses all of the machinery here.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::coord::{Coord, Dir, VertexType};
use crate::rng::SplitMix64;

/// Construction errors name the offending index so file diagnostics can
/// point at the exact character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GridError {
    /// `n` below the minimum for a torus grid.
    TooSmall { n: usize },
    /// Direction array has the wrong length.
    LengthMismatch { axis: Axis, expected: usize, got: usize },
    /// `kregular` generator requires `2k | n`.
    NotKRegular { n: usize, k: usize, nearest: usize },
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::TooSmall { n } => write!(f, "grid size {n} too small, need n >= 3"),
            GridError::LengthMismatch { axis, expected, got } => {
                write!(f, "{axis:?} direction array has length {got}, expected {expected}")
            }
            GridError::NotKRegular { n, k, nearest } => {
                write!(f, "kregular:{n}:{k} invalid, 2k must divide n (nearest valid n is {nearest})")
            }
        }
    }
}

/// The two line families. `Horizontal` lines are the rows (indexed by `x`,
/// arcs move `y`); `Vertical` lines are the columns (indexed by `y`, arcs
/// move `x`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    Vertical,
    Horizontal,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::Vertical => Axis::Horizontal,
            Axis::Horizontal => Axis::Vertical,
        }
    }
}

/// `C_nx □ C_ny` with a straight-ahead orientation.
///
/// Immutable after construction; all operations are pure, so a grid can be
/// shared freely across concurrent tasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedGrid {
    nx: usize,
    ny: usize,
    /// `row_dir[x]` orients row `x`: arc `(x,y) -> (x, y + row_dir[x])`.
    row_dir: Vec<Dir>,
    /// `col_dir[y]` orients column `y`: arc `(x,y) -> (x + col_dir[y], y)`.
    col_dir: Vec<Dir>,
}

impl OrientedGrid {
    /// Build the square grid `C_n □ C_n` of the spec. `n >= 3`, direction
    /// arrays of length `n`.
    pub fn make(n: usize, row_dir: Vec<Dir>, col_dir: Vec<Dir>) -> Result<OrientedGrid, GridError> {
        if n < 3 {
            return Err(GridError::TooSmall { n });
        }
        Self::rect(n, n, row_dir, col_dir)
    }

    /// Rectangular variant used for conflux digraphs; permits `nx, ny >= 1`.
    pub fn rect(
        nx: usize,
        ny: usize,
        row_dir: Vec<Dir>,
        col_dir: Vec<Dir>,
    ) -> Result<OrientedGrid, GridError> {
        if row_dir.len() != nx {
            return Err(GridError::LengthMismatch {
                axis: Axis::Horizontal,
                expected: nx,
                got: row_dir.len(),
            });
        }
        if col_dir.len() != ny {
            return Err(GridError::LengthMismatch {
                axis: Axis::Vertical,
                expected: ny,
                got: col_dir.len(),
            });
        }
        Ok(OrientedGrid { nx, ny, row_dir, col_dir })
    }

    /// Uniform orientation: every line directed `+`.
    pub fn uniform(n: usize) -> OrientedGrid {
        OrientedGrid::make(n, alloc::vec![Dir::Plus; n], alloc::vec![Dir::Plus; n]).unwrap()
    }

    /// `k`-regularly oriented grid: all maximal streams have width exactly
    /// `k`, so direction blocks of length `k` alternate; requires `2k | n`.
    pub fn kregular(n: usize, k: usize) -> Result<OrientedGrid, GridError> {
        if k == 0 || n < 3 || k >= n || n % (2 * k) != 0 {
            let nearest = if k == 0 { 0 } else { core::cmp::max(2 * k, n / (2 * k).max(1) * 2 * k) };
            return Err(GridError::NotKRegular { n, k, nearest });
        }
        let dirs: Vec<Dir> =
            (0..n).map(|i| if (i / k) % 2 == 0 { Dir::Plus } else { Dir::Minus }).collect();
        OrientedGrid::make(n, dirs.clone(), dirs)
    }

    /// Random orientation from a seeded generator (deterministic per seed).
    pub fn random(n: usize, seed: u64) -> OrientedGrid {
        let mut rng = SplitMix64::new(seed);
        let rd: Vec<Dir> =
            (0..n).map(|_| if rng.next_u64() & 1 == 0 { Dir::Plus } else { Dir::Minus }).collect();
        let cd: Vec<Dir> =
            (0..n).map(|_| if rng.next_u64() & 1 == 0 { Dir::Plus } else { Dir::Minus }).collect();
        OrientedGrid::make(n, rd, cd).unwrap()
    }

    /// Side length of a square grid. Panics on rectangular grids; use
    /// [`OrientedGrid::dims`] there.
    pub fn n(&self) -> usize {
        assert_eq!(self.nx, self.ny, "n() requires a square grid");
        self.nx
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn is_square(&self) -> bool {
        self.nx == self.ny
    }

    pub fn vertex_count(&self) -> usize {
        self.nx * self.ny
    }

    pub fn row_dir(&self, x: usize) -> Dir {
        self.row_dir[x % self.nx]
    }

    pub fn col_dir(&self, y: usize) -> Dir {
        self.col_dir[y % self.ny]
    }

    pub fn row_dirs(&self) -> &[Dir] {
        &self.row_dir
    }

    pub fn col_dirs(&self) -> &[Dir] {
        &self.col_dir
    }

    /// Vertex ids enumerate the grid row-major: `id = x * ny + y`.
    pub fn id(&self, v: Coord) -> usize {
        v.x * self.ny + v.y
    }

    pub fn coord(&self, id: usize) -> Coord {
        Coord::new(id / self.ny, id % self.ny)
    }

    pub fn wrap(&self, x: i64, y: i64) -> Coord {
        Coord::new(x.rem_euclid(self.nx as i64) as usize, y.rem_euclid(self.ny as i64) as usize)
    }

    /// `v` shifted by `(dx, dy)` on the torus.
    pub fn offset(&self, v: Coord, dx: i64, dy: i64) -> Coord {
        self.wrap(v.x as i64 + dx, v.y as i64 + dy)
    }

    /// One vertical step (along the column of `v`, changing `x`) in the
    /// column's own direction.
    pub fn step_vertical(&self, v: Coord) -> Coord {
        self.offset(v, self.col_dir[v.y].sign(), 0)
    }

    /// One horizontal step (along the row of `v`, changing `y`).
    pub fn step_horizontal(&self, v: Coord) -> Coord {
        self.offset(v, 0, self.row_dir[v.x].sign())
    }

    /// The two out-neighbours of `v`: vertical then horizontal step.
    pub fn out_neighbors(&self, v: Coord) -> [Coord; 2] {
        [self.step_vertical(v), self.step_horizontal(v)]
    }

    /// The two in-neighbours of `v`, mirroring [`Self::out_neighbors`].
    pub fn in_neighbors(&self, v: Coord) -> [Coord; 2] {
        [
            self.offset(v, -self.col_dir[v.y].sign(), 0),
            self.offset(v, 0, -self.row_dir[v.x].sign()),
        ]
    }

    /// `τ(v) = (col_dir[y], row_dir[x])`, the sum of the outgoing arc
    /// vectors of `v`.
    pub fn vertex_type(&self, v: Coord) -> VertexType {
        VertexType::new(self.col_dir[v.y], self.row_dir[v.x])
    }

    /// Directed progress of line index `to` measured from `from` along
    /// direction `dir` (how many directed steps of a crossing walk separate
    /// the two lines), in `0..len`.
    pub fn progress(len: usize, from: usize, to: usize, dir: Dir) -> usize {
        let d = (to as i64 - from as i64) * dir.sign();
        d.rem_euclid(len as i64) as usize
    }

    /// Undirected toroidal (L1) distance, used by evading robbers.
    pub fn undirected_distance(&self, a: Coord, b: Coord) -> usize {
        let dx = (a.x as i64 - b.x as i64).rem_euclid(self.nx as i64) as usize;
        let dy = (a.y as i64 - b.y as i64).rem_euclid(self.ny as i64) as usize;
        dx.min(self.nx - dx) + dy.min(self.ny - dy)
    }

    /// Compact descriptor, e.g. `grid:8:++--++--:++--++--`.
    pub fn descriptor(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        if self.is_square() {
            let _ = write!(s, "grid:{}:", self.nx);
        } else {
            let _ = write!(s, "rect:{}x{}:", self.nx, self.ny);
        }
        for d in &self.row_dir {
            s.push(d.as_char());
        }
        s.push(':');
        for d in &self.col_dir {
            s.push(d.as_char());
        }
        s
    }
}
