//! Exact vertex coloring.
//!
//! The chromatic number is bracketed by a greedy clique (lower bound) and a
//! DSATUR greedy coloring (upper bound), then pinned down by exact
//! `k`-colorability searches descending from the upper bound. The searches
//! branch on the vertex of highest saturation, lowest index first, and try
//! colors in increasing order with the usual symmetry cut (never open more
//! than one new color), so results are reproducible for a fixed labeling.

use serde::{Deserialize, Serialize};

use crate::graph::{Bits, Graph};
use crate::{Error, Result};

/// `n` limit for [`max_ell1_coloring`].
pub const MAX_ELL1_LIMIT: usize = 16;

/// An optimal proper coloring with its class sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringResult {
    pub chi: usize,
    /// Color classes as vertex bitsets, largest first, ties by smallest vertex.
    pub classes: Vec<u64>,
    /// Class sizes `l1 >= l2 >= ... >= l_chi`.
    pub sizes: Vec<usize>,
    /// Chromatic threshold `n + ceil(n / chi)`.
    pub b_chi: usize,
}

impl ColoringResult {
    fn from_colors(n: usize, chi: usize, colors: &[usize]) -> Self {
        let mut classes = vec![0u64; chi];
        for (v, &c) in colors.iter().enumerate() {
            classes[c] |= 1 << v;
        }
        classes.sort_by_key(|c| (std::cmp::Reverse(c.count_ones()), c.trailing_zeros()));
        let sizes = classes.iter().map(|c| c.count_ones() as usize).collect();
        ColoringResult {
            chi,
            classes,
            sizes,
            b_chi: n + n.div_ceil(chi),
        }
    }

    /// Largest class size.
    pub fn ell1(&self) -> usize {
        self.sizes[0]
    }
}

/// `true` iff no class contains an edge. Errors unless `classes` partition
/// the vertex set.
pub fn is_proper(g: &Graph, classes: &[u64]) -> Result<bool> {
    let mut seen = 0u64;
    for &c in classes {
        if c & !g.vertex_mask() != 0 {
            return Err(Error::NotPartition(
                "class contains a vertex outside the graph".into(),
            ));
        }
        if c & seen != 0 {
            return Err(Error::NotPartition("classes overlap".into()));
        }
        seen |= c;
    }
    if seen != g.vertex_mask() {
        return Err(Error::NotPartition(
            "classes do not cover every vertex".into(),
        ));
    }
    Ok(classes
        .iter()
        .all(|&c| Bits(c).all(|v| g.neighbors(v) & c == 0)))
}

const NONE: usize = usize::MAX;

/// Exact `k`-coloring search restricted to the vertex set `active`.
struct KColor<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    /// Bitset over colors already used by colored neighbors of each vertex.
    blocked: Vec<u64>,
    uncolored: u64,
}

impl<'a> KColor<'a> {
    fn new(g: &'a Graph, k: usize, active: u64) -> Self {
        KColor {
            g,
            k,
            colors: vec![NONE; g.n()],
            blocked: vec![0; g.n()],
            uncolored: active,
        }
    }

    fn pick(&self) -> usize {
        let mut best = NONE;
        let mut best_sat = 0;
        for v in Bits(self.uncolored) {
            let sat = self.blocked[v].count_ones();
            if best == NONE || sat > best_sat {
                best = v;
                best_sat = sat;
            }
        }
        best
    }

    fn solve(&mut self, used: usize) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        let v = self.pick();
        let limit = (used + 1).min(self.k);
        let nbrs = self.g.neighbors(v) & self.uncolored;
        for c in 0..limit {
            if self.blocked[v] >> c & 1 == 1 {
                continue;
            }
            self.colors[v] = c;
            self.uncolored &= !(1 << v);
            let saved: Vec<(usize, u64)> = Bits(nbrs).map(|w| (w, self.blocked[w])).collect();
            for w in Bits(nbrs) {
                self.blocked[w] |= 1 << c;
            }
            if self.solve(used.max(c + 1)) {
                return true;
            }
            for (w, b) in saved {
                self.blocked[w] = b;
            }
            self.uncolored |= 1 << v;
            self.colors[v] = NONE;
        }
        false
    }
}

/// A proper coloring of the vertices in `active` with colors `0..k`, if
/// one exists. Entries outside `active` are `usize::MAX`.
fn color_with(g: &Graph, k: usize, active: u64) -> Option<Vec<usize>> {
    if active == 0 {
        return Some(vec![NONE; g.n()]);
    }
    if k == 0 {
        return None;
    }
    let mut s = KColor::new(g, k, active);
    s.solve(0).then_some(s.colors)
}

/// DSATUR greedy coloring: colors used and the assignment.
fn dsatur_greedy(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut colors = vec![NONE; n];
    let mut blocked = vec![0u64; n];
    let mut uncolored = g.vertex_mask();
    let mut used = 0;
    while uncolored != 0 {
        let v = Bits(uncolored)
            .max_by_key(|&v| (blocked[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (!blocked[v]).trailing_zeros() as usize;
        colors[v] = c;
        used = used.max(c + 1);
        uncolored &= !(1 << v);
        for w in Bits(g.neighbors(v)) {
            blocked[w] |= 1 << c;
        }
    }
    (used, colors)
}

/// Size of a greedily grown clique, best over every seed vertex.
fn greedy_clique(g: &Graph) -> usize {
    (0..g.n())
        .map(|seed| {
            let mut clique = 1u64 << seed;
            let mut cand = g.neighbors(seed);
            while cand != 0 {
                let v = Bits(cand)
                    .max_by_key(|&v| ((g.neighbors(v) & cand).count_ones(), std::cmp::Reverse(v)))
                    .unwrap();
                clique |= 1 << v;
                cand &= g.neighbors(v);
            }
            clique.count_ones() as usize
        })
        .max()
        .unwrap_or(0)
}

/// Exact chromatic number. Works on disconnected graphs too.
pub fn chromatic_number(g: &Graph) -> usize {
    let lower = greedy_clique(g);
    let (mut chi, _) = dsatur_greedy(g);
    while chi > lower && color_with(g, chi - 1, g.vertex_mask()).is_some() {
        chi -= 1;
    }
    chi
}

/// A proper coloring with exactly `chi(g)` classes.
pub fn optimal_coloring(g: &Graph) -> ColoringResult {
    let chi = chromatic_number(g);
    let colors = color_with(g, chi, g.vertex_mask()).expect("chi colors suffice");
    ColoringResult::from_colors(g.n(), chi, &colors)
}

/// Maximal independent sets (maximal cliques of the complement) by
/// Bron-Kerbosch with pivoting.
fn maximal_independent_sets(g: &Graph) -> Vec<u64> {
    fn expand(g: &Graph, r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let non = |v: usize| !g.neighbors(v) & !(1u64 << v);
        let pivot = Bits(p | x)
            .max_by_key(|&u| (p & non(u)).count_ones())
            .unwrap();
        let (mut p, mut x) = (p, x);
        for v in Bits(p & !non(pivot)) {
            expand(g, r | 1 << v, p & non(v), x & non(v), out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    expand(g, 0, g.vertex_mask(), 0, &mut out);
    out
}

/// Among all optimal colorings, one whose largest class is as large as
/// possible. Limited to `n <= 16`.
pub fn max_ell1_coloring(g: &Graph) -> Result<ColoringResult> {
    let n = g.n();
    if n > MAX_ELL1_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: MAX_ELL1_LIMIT,
        });
    }
    let chi = chromatic_number(g);
    let floor = n.div_ceil(chi) as u32;
    let mut candidates: Vec<u64> = maximal_independent_sets(g)
        .into_iter()
        .filter(|s| s.count_ones() >= floor)
        .collect();
    candidates.sort_by_key(|&s| (std::cmp::Reverse(s.count_ones()), s));
    for s in candidates {
        let rest = g.vertex_mask() & !s;
        if let Some(mut colors) = color_with(g, chi - 1, rest) {
            for v in Bits(s) {
                colors[v] = chi - 1;
            }
            return Ok(ColoringResult::from_colors(n, chi, &colors));
        }
    }
    unreachable!("some optimal coloring has a class of size >= ceil(n / chi)")
}
