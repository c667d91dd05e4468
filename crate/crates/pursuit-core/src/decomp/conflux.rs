//! Confluxes (stream intersections), their corners and guard posts, and the
//! conflux digraph.
//!
//! A conflux is described in a *progress frame*: `px ∈ 0..h` counts directed
//! vertical steps (along columns, direction `cd`) from the entry row, and
//! `py ∈ 0..w` counts directed horizontal steps (direction `rd`) from the
//! entry column. In this frame the structure is orientation-free:
//!
//! * `(h-1, 0)` is the main corner whose vertical arc leaves the conflux
//!   (the vertical guard post is one vertical step beyond it);
//! * `(0, w-1)` is the main corner whose horizontal arc leaves;
//! * `(h-1, w-1)` has no out-neighbours inside (the terminal corner when
//!   both widths exceed one) and the terminal guard post sits diagonally
//!   beyond it;
//! * `(0, 0)` has both out-neighbours inside.

use alloc::vec::Vec;
use core::fmt;

use crate::coord::{Coord, Dir, VertexType};
use crate::grid::{Axis, OrientedGrid};

use super::stream::{maximal_streams, Stream};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfluxError {
    /// Corner classification requires a proper rectangle.
    CoversGrid,
    /// One of the defining streams spans the whole axis.
    WrapsAxis(Axis),
    /// Terminal guard post requested on a non-maximal conflux.
    NotMaximal,
    EmptyIntersection,
}

impl fmt::Display for ConfluxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfluxError::CoversGrid => write!(f, "conflux covers grid"),
            ConfluxError::WrapsAxis(a) => write!(f, "conflux stream wraps the whole {a:?} axis"),
            ConfluxError::NotMaximal => write!(f, "terminal guard post requires a maximal conflux"),
            ConfluxError::EmptyIntersection => write!(f, "streams have empty intersection"),
        }
    }
}

/// Rectangular block `rows × cols` cut out by a horizontal and a vertical
/// stream, with the directions that apply inside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conflux {
    /// First row index and row count (the horizontal stream's lines).
    pub x0: usize,
    pub h: usize,
    /// First column index and column count (the vertical stream's lines).
    pub y0: usize,
    pub w: usize,
    /// Direction of vertical movement inside (col_dir on the block).
    pub cd: Dir,
    /// Direction of horizontal movement inside (row_dir on the block).
    pub rd: Dir,
    /// Grid dimensions, for modular arithmetic.
    pub nx: usize,
    pub ny: usize,
}

impl Conflux {
    pub fn of_streams(g: &OrientedGrid, hs: &Stream, vs: &Stream) -> Conflux {
        debug_assert_eq!(hs.axis, Axis::Horizontal);
        debug_assert_eq!(vs.axis, Axis::Vertical);
        let (nx, ny) = g.dims();
        Conflux {
            x0: hs.first_line,
            h: hs.width,
            y0: vs.first_line,
            w: vs.width,
            cd: vs.dir,
            rd: hs.dir,
            nx,
            ny,
        }
    }

    /// Row index at vertical progress `px` (entry row is progress 0).
    pub fn row_at(&self, px: usize) -> usize {
        let entry = match self.cd {
            Dir::Plus => self.x0,
            Dir::Minus => (self.x0 + self.h - 1) % self.nx,
        };
        (entry as i64 + self.cd.sign() * px as i64).rem_euclid(self.nx as i64) as usize
    }

    /// Column index at horizontal progress `py`.
    pub fn col_at(&self, py: usize) -> usize {
        let entry = match self.rd {
            Dir::Plus => self.y0,
            Dir::Minus => (self.y0 + self.w - 1) % self.ny,
        };
        (entry as i64 + self.rd.sign() * py as i64).rem_euclid(self.ny as i64) as usize
    }

    pub fn at_progress(&self, px: usize, py: usize) -> Coord {
        Coord::new(self.row_at(px), self.col_at(py))
    }

    /// Progress of an arbitrary vertex relative to the frame (values in
    /// `0..nx` / `0..ny`; inside the conflux they are `< h` / `< w`).
    pub fn progress(&self, v: Coord) -> (usize, usize) {
        let px = OrientedGrid::progress(self.nx, self.row_at(0), v.x, self.cd);
        let py = OrientedGrid::progress(self.ny, self.col_at(0), v.y, self.rd);
        (px, py)
    }

    pub fn contains(&self, v: Coord) -> bool {
        let (px, py) = self.progress(v);
        px < self.h && py < self.w
    }

    pub fn vertices(&self) -> Vec<Coord> {
        let mut out = Vec::with_capacity(self.h * self.w);
        for px in 0..self.h {
            for py in 0..self.w {
                out.push(self.at_progress(px, py));
            }
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.h * self.w
    }

    /// The shared vertex type of the block.
    pub fn vertex_type(&self) -> VertexType {
        VertexType::new(self.cd, self.rd)
    }

    fn check_proper(&self) -> Result<(), ConfluxError> {
        if self.h == self.nx && self.w == self.ny {
            return Err(ConfluxError::CoversGrid);
        }
        if self.h == self.nx {
            return Err(ConfluxError::WrapsAxis(Axis::Horizontal));
        }
        if self.w == self.ny {
            return Err(ConfluxError::WrapsAxis(Axis::Vertical));
        }
        Ok(())
    }

    /// Classified corners. Errors when the block is not a proper rectangle
    /// (a stream wraps the whole axis), where the paper's corner counts do
    /// not apply.
    pub fn corners(&self) -> Result<CornerSet, ConfluxError> {
        self.check_proper()?;
        let (h, w) = (self.h, self.w);
        if h >= 2 && w >= 2 {
            Ok(CornerSet {
                main: alloc::vec![self.vertical_exit_corner(), self.horizontal_exit_corner()],
                secondary: alloc::vec![self.at_progress(0, 0), self.at_progress(h - 1, w - 1)],
                terminal: Some(self.at_progress(h - 1, w - 1)),
            })
        } else if h == 1 && w == 1 {
            Ok(CornerSet {
                main: alloc::vec![self.at_progress(0, 0)],
                secondary: Vec::new(),
                terminal: None,
            })
        } else if h == 1 {
            Ok(CornerSet {
                main: alloc::vec![self.at_progress(0, 0), self.at_progress(0, w - 1)],
                secondary: Vec::new(),
                terminal: None,
            })
        } else {
            Ok(CornerSet {
                main: alloc::vec![self.at_progress(0, 0), self.at_progress(h - 1, 0)],
                secondary: Vec::new(),
                terminal: None,
            })
        }
    }

    /// Main corner whose vertical arc leaves the conflux.
    pub fn vertical_exit_corner(&self) -> Coord {
        self.at_progress(self.h - 1, 0)
    }

    /// Main corner whose horizontal arc leaves the conflux.
    pub fn horizontal_exit_corner(&self) -> Coord {
        self.at_progress(0, self.w - 1)
    }

    /// The corner with no out-neighbours inside the block.
    pub fn exit_corner(&self) -> Coord {
        self.at_progress(self.h - 1, self.w - 1)
    }

    /// Whether both defining streams are maximal in `g`.
    pub fn is_maximal(&self, g: &OrientedGrid) -> bool {
        let h_max = self.h == self.nx || {
            let before = (self.x0 + self.nx - 1) % self.nx;
            let after = (self.x0 + self.h) % self.nx;
            g.row_dir(before) != self.rd && g.row_dir(after) != self.rd
        };
        let v_max = self.w == self.ny || {
            let before = (self.y0 + self.ny - 1) % self.ny;
            let after = (self.y0 + self.w) % self.ny;
            g.col_dir(before) != self.cd && g.col_dir(after) != self.cd
        };
        h_max && v_max
    }

    /// Guard posts of the conflux. The terminal post exists only for
    /// maximal confluxes (it requires the adjacent lines to run the other
    /// way, so that it shares the terminal corner's out-neighbours).
    pub fn guard_posts(&self, g: &OrientedGrid) -> Result<GuardPosts, ConfluxError> {
        self.check_proper()?;
        let vc = self.vertical_exit_corner();
        let hc = self.horizontal_exit_corner();
        let vertical = g.offset(vc, self.cd.sign(), 0);
        let horizontal = g.offset(hc, 0, self.rd.sign());
        let terminal = if self.is_maximal(g) {
            let t = g.offset(self.exit_corner(), self.cd.sign(), self.rd.sign());
            debug_assert_eq!(
                {
                    let mut a = g.out_neighbors(t);
                    a.sort();
                    a
                },
                {
                    let mut b = g.out_neighbors(self.exit_corner());
                    b.sort();
                    b
                },
                "terminal post must share the terminal corner's out-neighbours"
            );
            Some(t)
        } else {
            None
        };
        Ok(GuardPosts { vertical, horizontal, terminal })
    }
}

/// Corners of a conflux, classified by out-degree inside the block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerSet {
    pub main: Vec<Coord>,
    pub secondary: Vec<Coord>,
    /// The secondary corner with no out-neighbours in the conflux.
    pub terminal: Option<Coord>,
}

/// The three guard posts of a (maximal) conflux, all outside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GuardPosts {
    pub vertical: Coord,
    pub horizontal: Coord,
    pub terminal: Option<Coord>,
}

/// Full stream decomposition of a grid with the conflux digraph.
///
/// Maximal confluxes are indexed by `(i, j)`: `i` over horizontal streams,
/// `j` over vertical streams. The quotient digraph (one vertex per maximal
/// conflux, arcs where grid arcs cross) is itself a straight-ahead oriented
/// grid `C_k □ C_l`, exposed by [`Decomposition::quotient`].
#[derive(Clone, Debug)]
pub struct Decomposition {
    h_streams: Vec<Stream>,
    v_streams: Vec<Stream>,
    /// row x -> index into h_streams
    h_index: Vec<usize>,
    /// col y -> index into v_streams
    v_index: Vec<usize>,
    quotient: OrientedGrid,
}

impl Decomposition {
    pub fn new(g: &OrientedGrid) -> Decomposition {
        let (nx, ny) = g.dims();
        let h_streams = maximal_streams(g, Axis::Horizontal);
        let v_streams = maximal_streams(g, Axis::Vertical);
        let mut h_index = alloc::vec![0usize; nx];
        for (i, s) in h_streams.iter().enumerate() {
            for line in s.lines(nx) {
                h_index[line] = i;
            }
        }
        let mut v_index = alloc::vec![0usize; ny];
        for (j, s) in v_streams.iter().enumerate() {
            for line in s.lines(ny) {
                v_index[line] = j;
            }
        }
        let quotient = OrientedGrid::rect(
            h_streams.len(),
            v_streams.len(),
            h_streams.iter().map(|s| s.dir).collect(),
            v_streams.iter().map(|s| s.dir).collect(),
        )
        .expect("quotient grid");
        Decomposition { h_streams, v_streams, h_index, v_index, quotient }
    }

    pub fn h_streams(&self) -> &[Stream] {
        &self.h_streams
    }

    pub fn v_streams(&self) -> &[Stream] {
        &self.v_streams
    }

    pub fn h_stream_of(&self, v: Coord) -> &Stream {
        &self.h_streams[self.h_index[v.x]]
    }

    pub fn v_stream_of(&self, v: Coord) -> &Stream {
        &self.v_streams[self.v_index[v.y]]
    }

    /// Index of the maximal conflux containing `v`.
    pub fn conflux_index_of(&self, v: Coord) -> Coord {
        Coord::new(self.h_index[v.x], self.v_index[v.y])
    }

    /// Maximal conflux by index `(i, j)`.
    pub fn conflux(&self, g: &OrientedGrid, idx: Coord) -> Conflux {
        Conflux::of_streams(g, &self.h_streams[idx.x], &self.v_streams[idx.y])
    }

    pub fn maximal_conflux_of(&self, g: &OrientedGrid, v: Coord) -> Conflux {
        self.conflux(g, self.conflux_index_of(v))
    }

    /// The conflux digraph as a straight-ahead oriented grid: vertex `(i,j)`
    /// is the conflux of horizontal stream `i` and vertical stream `j`.
    pub fn quotient(&self) -> &OrientedGrid {
        &self.quotient
    }

    pub fn conflux_count(&self) -> usize {
        self.h_streams.len() * self.v_streams.len()
    }

    /// All maximal confluxes in index order.
    pub fn confluxes<'a>(&'a self, g: &'a OrientedGrid) -> impl Iterator<Item = Conflux> + 'a {
        let k = self.h_streams.len();
        let l = self.v_streams.len();
        (0..k).flat_map(move |i| (0..l).map(move |j| self.conflux(g, Coord::new(i, j))))
    }

    /// Arcs of the conflux digraph as index pairs, deduplicated.
    pub fn quotient_arcs(&self) -> Vec<(Coord, Coord)> {
        let mut arcs = Vec::new();
        let (k, l) = self.quotient.dims();
        for i in 0..k {
            for j in 0..l {
                let from = Coord::new(i, j);
                let mut outs = self.quotient.out_neighbors(from).to_vec();
                outs.sort();
                outs.dedup();
                for to in outs {
                    arcs.push((from, to));
                }
            }
        }
        arcs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn dirs(s: &str) -> Vec<Dir> {
        s.chars().map(|c| Dir::from_char(c).unwrap()).collect()
    }

    fn two_regular_4() -> OrientedGrid {
        OrientedGrid::make(4, dirs("++--"), dirs("++--")).unwrap()
    }

    #[test]
    fn conflux_block_and_type() {
        let g = two_regular_4();
        let d = Decomposition::new(&g);
        assert_eq!(d.conflux_count(), 4);
        let k = d.maximal_conflux_of(&g, Coord::new(0, 0));
        assert_eq!((k.h, k.w), (2, 2));
        let mut vs = k.vertices();
        vs.sort();
        assert_eq!(
            vs,
            alloc::vec![Coord::new(0, 0), Coord::new(0, 1), Coord::new(1, 0), Coord::new(1, 1)]
        );
        // Type is shared by all vertices of the block.
        for v in k.vertices() {
            assert_eq!(g.vertex_type(v), k.vertex_type());
        }
    }

    #[test]
    fn corners_of_square_conflux() {
        let g = two_regular_4();
        let d = Decomposition::new(&g);
        let k = d.maximal_conflux_of(&g, Coord::new(0, 0));
        let c = k.corners().unwrap();
        assert_eq!(c.main.len(), 2);
        assert_eq!(c.secondary.len(), 2);
        // cd = rd = + on this block: vertical exit corner is (1,0),
        // horizontal (0,1), terminal (1,1).
        assert!(c.main.contains(&Coord::new(1, 0)));
        assert!(c.main.contains(&Coord::new(0, 1)));
        assert_eq!(c.terminal, Some(Coord::new(1, 1)));
        // Main corners have exactly one out-neighbour inside.
        for m in &c.main {
            let inside = g.out_neighbors(*m).iter().filter(|u| k.contains(**u)).count();
            assert_eq!(inside, 1);
        }
        for s in &c.secondary {
            let inside = g.out_neighbors(*s).iter().filter(|u| k.contains(**u)).count();
            assert!(inside == 0 || inside == 2);
        }
    }

    #[test]
    fn guard_posts_outside_and_terminal_shares_outs() {
        let g = two_regular_4();
        let d = Decomposition::new(&g);
        for k in d.confluxes(&g).collect::<Vec<_>>() {
            let posts = k.guard_posts(&g).unwrap();
            assert!(!k.contains(posts.vertical));
            assert!(!k.contains(posts.horizontal));
            let t = posts.terminal.expect("maximal conflux");
            assert!(!k.contains(t));
            let mut a = g.out_neighbors(t);
            a.sort();
            let mut b = g.out_neighbors(k.exit_corner());
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn strip_conflux_corner_counts() {
        // Horizontal widths (1,3): confluxes of shape 1 x w.
        let g = OrientedGrid::make(4, dirs("+---"), dirs("++--")).unwrap();
        let d = Decomposition::new(&g);
        let k = d.maximal_conflux_of(&g, Coord::new(0, 0));
        assert_eq!(k.h, 1);
        let c = k.corners().unwrap();
        assert_eq!(c.main.len(), 2);
        assert!(c.secondary.is_empty());
        assert_eq!(c.terminal, None);
    }

    #[test]
    fn covering_conflux_is_an_error() {
        let g = OrientedGrid::uniform(4);
        let d = Decomposition::new(&g);
        let k = d.maximal_conflux_of(&g, Coord::new(0, 0));
        assert_eq!(k.corners().unwrap_err(), ConfluxError::CoversGrid);
    }

    #[test]
    fn quotient_of_two_regular_is_c2_c2() {
        let g = two_regular_4();
        let d = Decomposition::new(&g);
        let q = d.quotient();
        assert_eq!(q.dims(), (2, 2));
        // Straight-ahead: each quotient line alternates direction.
        assert_eq!(q.row_dir(0), Dir::Plus);
        assert_eq!(q.row_dir(1), Dir::Minus);
    }

    #[test]
    fn uniform_quotient_single_vertex_two_loops() {
        let g = OrientedGrid::uniform(4);
        let d = Decomposition::new(&g);
        assert_eq!(d.conflux_count(), 1);
        let arcs = d.quotient_arcs();
        // Both arcs loop at the single vertex (deduplicated to one entry).
        assert_eq!(arcs.len(), 1);
        assert_eq!(arcs[0], (Coord::new(0, 0), Coord::new(0, 0)));
    }

    #[test]
    fn progress_frame_respects_direction() {
        // cd = Minus block: entry row is the highest index.
        let g = OrientedGrid::make(4, dirs("--++"), dirs("--++")).unwrap();
        let d = Decomposition::new(&g);
        let k = d.maximal_conflux_of(&g, Coord::new(0, 0));
        assert_eq!(k.cd, Dir::Minus);
        assert_eq!(k.at_progress(0, 0), Coord::new(1, 1));
        assert_eq!(k.exit_corner(), Coord::new(0, 0));
    }
}
