//! Streams: maximal runs of consecutive, same-direction parallel lines.

use alloc::vec::Vec;

use crate::coord::{Coord, Dir};
use crate::grid::{Axis, OrientedGrid};

/// A set of consecutive lines oriented in the same direction.
///
/// `Horizontal` streams are runs of rows (line index is `x`); `Vertical`
/// streams are runs of columns (line index is `y`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stream {
    pub axis: Axis,
    pub first_line: usize,
    pub width: usize,
    pub dir: Dir,
}

impl Stream {
    /// Cyclic run of line indices covered by the stream.
    pub fn lines(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        let first = self.first_line;
        (0..self.width).map(move |i| (first + i) % n)
    }

    pub fn contains_line(&self, n: usize, line: usize) -> bool {
        OrientedGrid::progress(n, self.first_line, line, Dir::Plus) < self.width
    }

    /// Whether a grid vertex lies in `V(S)`.
    pub fn contains_vertex(&self, g: &OrientedGrid, v: Coord) -> bool {
        let (nx, ny) = g.dims();
        match self.axis {
            Axis::Horizontal => self.contains_line(nx, v.x),
            Axis::Vertical => self.contains_line(ny, v.y),
        }
    }

    /// All vertices of the stream, line-major, for confinement regions.
    pub fn vertices(&self, g: &OrientedGrid) -> Vec<Coord> {
        let (nx, ny) = g.dims();
        let mut out = Vec::new();
        match self.axis {
            Axis::Horizontal => {
                for x in self.lines(nx) {
                    for y in 0..ny {
                        out.push(Coord::new(x, y));
                    }
                }
            }
            Axis::Vertical => {
                for y in self.lines(ny) {
                    for x in 0..nx {
                        out.push(Coord::new(x, y));
                    }
                }
            }
        }
        out
    }

    /// The two boundary lines of the stream, ordered so that crossing walks
    /// inside the stream run from the first to the second.
    pub fn boundary_lines(&self, n: usize) -> (usize, usize) {
        let last = (self.first_line + self.width - 1) % n;
        // Crossing direction inside the stream is the *other* family's
        // business; boundary order here is in increasing line index from
        // first_line.
        (self.first_line, last)
    }
}

/// Partition the lines of one axis into maximal streams, ordered by
/// `first_line`.
pub fn maximal_streams(g: &OrientedGrid, axis: Axis) -> Vec<Stream> {
    let dirs: &[Dir] = match axis {
        Axis::Horizontal => g.row_dirs(),
        Axis::Vertical => g.col_dirs(),
    };
    let n = dirs.len();
    // Find a direction boundary to anchor the cyclic run-length encoding.
    let mut start = None;
    for i in 0..n {
        if dirs[i] != dirs[(i + n - 1) % n] {
            start = Some(i);
            break;
        }
    }
    let mut streams = Vec::new();
    match start {
        None => {
            // Single stream spanning the whole axis.
            streams.push(Stream { axis, first_line: 0, width: n, dir: dirs[0] });
        }
        Some(s) => {
            let mut i = s;
            loop {
                let dir = dirs[i];
                let mut width = 1;
                while dirs[(i + width) % n] == dir && width < n {
                    width += 1;
                }
                streams.push(Stream { axis, first_line: i, width, dir });
                i = (i + width) % n;
                if i == s {
                    break;
                }
            }
        }
    }
    streams.sort_by_key(|s| s.first_line);
    streams
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn dirs(s: &str) -> Vec<Dir> {
        s.chars().map(|c| Dir::from_char(c).unwrap()).collect()
    }

    #[test]
    fn two_streams_of_width_two() {
        let g = OrientedGrid::make(4, dirs("++--"), dirs("+-+-")).unwrap();
        let hs = maximal_streams(&g, Axis::Horizontal);
        assert_eq!(hs.len(), 2);
        assert!(hs.iter().all(|s| s.width == 2));
        let vs = maximal_streams(&g, Axis::Vertical);
        assert_eq!(vs.len(), 4);
    }

    #[test]
    fn uniform_single_stream() {
        let g = OrientedGrid::uniform(5);
        let hs = maximal_streams(&g, Axis::Horizontal);
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].width, 5);
    }

    #[test]
    fn widths_sum_to_n_random() {
        for seed in 0..50 {
            let n = 4 + (seed as usize % 13);
            let g = OrientedGrid::random(n, seed);
            for axis in [Axis::Horizontal, Axis::Vertical] {
                let ss = maximal_streams(&g, axis);
                assert_eq!(ss.iter().map(|s| s.width).sum::<usize>(), n);
                // Maximality: adjacent lines across each boundary flip.
                if ss.len() > 1 {
                    for s in &ss {
                        let before = (s.first_line + n - 1) % n;
                        let dir_before = match axis {
                            Axis::Horizontal => g.row_dir(before),
                            Axis::Vertical => g.col_dir(before),
                        };
                        assert_eq!(dir_before, s.dir.flip());
                    }
                }
            }
        }
    }

    #[test]
    fn wrapped_run_is_one_stream() {
        // Runs wrap cyclically: (+,-,-,+) is two streams, widths 2 and 2.
        let g = OrientedGrid::make(4, dirs("+--+"), dirs("++++")).unwrap();
        let hs = maximal_streams(&g, Axis::Horizontal);
        assert_eq!(hs.len(), 2);
        let wrapped = hs.iter().find(|s| s.first_line == 3).unwrap();
        assert_eq!(wrapped.width, 2);
        assert!(wrapped.contains_line(4, 0));
        assert!(!wrapped.contains_line(4, 1));
    }
}
