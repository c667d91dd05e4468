//! Digraph abstraction the game runs on.
//!
//! The engine addresses vertices by dense ids `0..order()`. Grids and
//! quadrangulations implement the trait directly; [`AdjDigraph`] holds an
//! explicit adjacency list for everything else (directed cycles, ad-hoc
//! test graphs).

use alloc::string::String;
use alloc::vec::Vec;

use crate::grid::OrientedGrid;
use crate::quad::Quadrangulation;

pub trait Digraph {
    fn order(&self) -> usize;
    fn out_neighbors_of(&self, v: usize) -> Vec<usize>;
    fn in_neighbors_of(&self, v: usize) -> Vec<usize>;
    /// Stable textual identity, also used to key result caches.
    fn descriptor(&self) -> String;

    /// Undirected distance from every vertex to the nearest of `sources`
    /// (multi-source BFS over `out ∪ in`). `usize::MAX` marks unreachable.
    fn undirected_distances(&self, sources: &[usize]) -> Vec<usize> {
        let mut dist = alloc::vec![usize::MAX; self.order()];
        let mut queue = alloc::collections::VecDeque::new();
        for &s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v] + 1;
            for u in self.out_neighbors_of(v).into_iter().chain(self.in_neighbors_of(v)) {
                if dist[u] == usize::MAX {
                    dist[u] = d;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Directed distance from `source` to every vertex.
    fn directed_distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = alloc::vec![usize::MAX; self.order()];
        let mut queue = alloc::collections::VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v] + 1;
            for u in self.out_neighbors_of(v) {
                if dist[u] == usize::MAX {
                    dist[u] = d;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Directed distance from every vertex to `target` (reverse BFS).
    fn directed_distances_to(&self, target: usize) -> Vec<usize> {
        let mut dist = alloc::vec![usize::MAX; self.order()];
        let mut queue = alloc::collections::VecDeque::new();
        dist[target] = 0;
        queue.push_back(target);
        while let Some(v) = queue.pop_front() {
            let d = dist[v] + 1;
            for u in self.in_neighbors_of(v) {
                if dist[u] == usize::MAX {
                    dist[u] = d;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// FNV-1a over order and sorted arc list; canonical content hash for
    /// result caches.
    fn canonical_hash(&self) -> u64 {
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        for v in 0..self.order() {
            let mut outs = self.out_neighbors_of(v);
            outs.sort_unstable();
            for u in outs {
                arcs.push((v, u));
            }
        }
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        eat(self.order() as u64);
        for (a, b) in arcs {
            eat(a as u64);
            eat(b as u64);
        }
        h
    }
}

impl Digraph for OrientedGrid {
    fn order(&self) -> usize {
        self.vertex_count()
    }

    fn out_neighbors_of(&self, v: usize) -> Vec<usize> {
        self.out_neighbors(self.coord(v)).iter().map(|c| self.id(*c)).collect()
    }

    fn in_neighbors_of(&self, v: usize) -> Vec<usize> {
        self.in_neighbors(self.coord(v)).iter().map(|c| self.id(*c)).collect()
    }

    fn descriptor(&self) -> String {
        OrientedGrid::descriptor(self)
    }
}

impl Digraph for Quadrangulation {
    fn order(&self) -> usize {
        self.vertex_count()
    }

    fn out_neighbors_of(&self, v: usize) -> Vec<usize> {
        self.out_neighbors(self.coord(v)).iter().map(|c| self.id(*c)).collect()
    }

    fn in_neighbors_of(&self, v: usize) -> Vec<usize> {
        self.in_neighbors(self.coord(v)).iter().map(|c| self.id(*c)).collect()
    }

    fn descriptor(&self) -> String {
        Quadrangulation::descriptor(self)
    }
}

/// Explicit adjacency-list digraph.
#[derive(Clone, Debug)]
pub struct AdjDigraph {
    out: Vec<Vec<usize>>,
    into: Vec<Vec<usize>>,
    name: String,
}

impl AdjDigraph {
    pub fn from_arcs(order: usize, arcs: &[(usize, usize)], name: &str) -> AdjDigraph {
        let mut out = alloc::vec![Vec::new(); order];
        let mut into = alloc::vec![Vec::new(); order];
        for &(a, b) in arcs {
            out[a].push(b);
            into[b].push(a);
        }
        for v in out.iter_mut().chain(into.iter_mut()) {
            v.sort_unstable();
        }
        AdjDigraph { out, into, name: String::from(name) }
    }

    /// Directed cycle `0 -> 1 -> … -> n-1 -> 0`.
    pub fn directed_cycle(n: usize) -> AdjDigraph {
        use core::fmt::Write;
        let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let mut name = String::new();
        let _ = write!(name, "dicycle:{n}");
        AdjDigraph::from_arcs(n, &arcs, &name)
    }
}

impl Digraph for AdjDigraph {
    fn order(&self) -> usize {
        self.out.len()
    }

    fn out_neighbors_of(&self, v: usize) -> Vec<usize> {
        self.out[v].clone()
    }

    fn in_neighbors_of(&self, v: usize) -> Vec<usize> {
        self.into[v].clone()
    }

    fn descriptor(&self) -> String {
        self.name.clone()
    }
}

/// Aliases kept for readability at engine call sites.
pub type GridBoard = OrientedGrid;
pub type QuadBoard = Quadrangulation;
