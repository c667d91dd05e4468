//! Coordinates on a toroidal grid and line directions.
//!
//! Convention used throughout the crate (fixed once here to avoid a
//! transposition bug class):
//!
//! * the *row* of `v = (x, y)` is the line `{(x, z)}`; rows are indexed by
//!   `x` and their arcs move `y` by `row_dir[x]`. Rows are the horizontal
//!   lines, so *horizontal* moves add `(0, ±1)`.
//! * the *column* of `v` is the line `{(z, y)}`; columns are indexed by `y`
//!   and their arcs move `x` by `col_dir[y]`. Columns are the vertical
//!   lines, so *vertical* moves add `(±1, 0)`.
//!
//! The type of a vertex is the sum of its two outgoing arc vectors,
//! `τ(v) = (col_dir[y], row_dir[x])`.

use core::fmt;

/// Direction of a line: every line of a straight-ahead orientation is a
/// directed cycle running either forwards (`Plus`) or backwards (`Minus`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Plus,
    Minus,
}

impl Dir {
    /// The direction as `+1` or `-1`.
    pub fn sign(self) -> i64 {
        match self {
            Dir::Plus => 1,
            Dir::Minus => -1,
        }
    }

    pub fn flip(self) -> Dir {
        match self {
            Dir::Plus => Dir::Minus,
            Dir::Minus => Dir::Plus,
        }
    }

    pub fn from_sign(s: i64) -> Option<Dir> {
        match s {
            1 => Some(Dir::Plus),
            -1 => Some(Dir::Minus),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Dir::Plus => '+',
            Dir::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Dir> {
        match c {
            '+' => Some(Dir::Plus),
            '-' => Some(Dir::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A vertex of a toroidal grid: residues `0 <= x < nx`, `0 <= y < ny`.
///
/// All arithmetic on coordinates is performed modulo the grid dimensions by
/// the grid that owns them; a bare `Coord` is just a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coord {
    pub x: usize,
    pub y: usize,
}

impl Coord {
    pub const fn new(x: usize, y: usize) -> Coord {
        Coord { x, y }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(usize, usize)> for Coord {
    fn from((x, y): (usize, usize)) -> Coord {
        Coord { x, y }
    }
}

/// A vertex type `τ(v) ∈ {+1,−1}²`: the componentwise sum of the two
/// outgoing arc vectors, `(col_dir[y], row_dir[x])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexType {
    /// Sign of the vertical (x-moving) out-arc.
    pub dx: Dir,
    /// Sign of the horizontal (y-moving) out-arc.
    pub dy: Dir,
}

impl VertexType {
    pub fn new(dx: Dir, dy: Dir) -> VertexType {
        VertexType { dx, dy }
    }

    /// Additive inverse in `Z²`.
    pub fn neg(self) -> VertexType {
        VertexType { dx: self.dx.flip(), dy: self.dy.flip() }
    }

    /// Two types are orthogonal when their dot product as vectors vanishes,
    /// i.e. exactly one component differs.
    pub fn is_orthogonal(self, other: VertexType) -> bool {
        (self.dx == other.dx) != (self.dy == other.dy)
    }

    /// Parallel means equal or opposite.
    pub fn is_parallel(self, other: VertexType) -> bool {
        self == other || self == other.neg()
    }

    /// The two types orthogonal to `self`, in a fixed deterministic order.
    pub fn orthogonal_pair(self) -> [VertexType; 2] {
        [
            VertexType { dx: self.dx, dy: self.dy.flip() },
            VertexType { dx: self.dx.flip(), dy: self.dy },
        ]
    }

    pub fn as_signs(self) -> (i64, i64) {
        (self.dx.sign(), self.dy.sign())
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}1,{}1)", self.dx.as_char(), self.dy.as_char())
    }
}
