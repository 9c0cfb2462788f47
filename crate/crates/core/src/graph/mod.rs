//! Simple undirected graphs on at most 64 vertices, stored as one neighbor
//! bitset per vertex.

mod canon;
mod corpus;
mod generators;
mod io;

pub use canon::{canonical_form, canonical_graph, CanonicalForm, CANONICAL_LIMIT};
pub use corpus::{
    connected_class_count, default_corpus_dir, enumerate_connected, enumerate_connected_in,
    generate_connected, read_graph6_file, write_graph6_file, INTERNAL_ENUM_LIMIT,
};
pub use generators::{
    complete_multipartite, gen_named, is_complete_multipartite, GenSpec, PartSizes,
};
pub use io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};

use std::fmt;

use crate::{Error, Result};

/// Largest supported vertex count: one `u64` per neighborhood.
pub const MAX_VERTICES: usize = 64;

/// Iterator over the set bits of a `u64`, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Repeated edges are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_pair(u, v)?;
            g.set(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor bitsets, validating symmetry.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mask = full_mask(n);
        for (u, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - (row & !mask).leading_zeros() as usize,
                    n,
                });
            }
            if row >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            for v in Bits(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::Graph6(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood of `v` as a bitset.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Bitset of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in increasing `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    /// The complement graph: `{u, v}` is an edge iff it is not one here.
    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & mask & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let comp = self.reach(s);
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    /// Vertices reachable from `s`, including `s`.
    pub fn reach(&self, s: usize) -> u64 {
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !comp;
            comp |= next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0) == self.vertex_mask()
    }

    /// Copy of the graph without edge `{u, v}`. The result may be disconnected.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Copy of the graph with the new edge `{u, v}`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::EdgePresent(u, v));
        }
        let mut g = self.clone();
        g.set(u, v);
        Ok(g)
    }

    /// Relabels vertices so that old vertex `perm[i]` becomes vertex `i`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut inv = vec![0usize; self.n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let adj = perm
            .iter()
            .map(|&old| Bits(self.adj[old]).fold(0u64, |acc, w| acc | 1 << inv[w]))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Number of vertices adjacent to every other vertex.
    pub fn universal_vertex_count(&self) -> usize {
        (0..self.n)
            .filter(|&v| self.degree(v) == self.n - 1)
            .count()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}
