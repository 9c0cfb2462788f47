//! Canonical forms by exhaustive minimisation of the upper-triangle bit
//! string over vertex orderings.
//!
//! The bit string is read in graph6 column order, so the graph6 encoding of
//! the minimising relabeling is itself a canonical byte string. The search
//! assigns positions left to right; at each position only candidates that
//! produce the smallest new column are extended, and branches whose prefix
//! already exceeds the best complete string are cut. Both rules keep the
//! result equal to the minimum over all `n!` orderings.

use std::fmt;

use super::{to_graph6, Bits, Graph};
use crate::{Error, Result};

/// Largest `n` accepted by the canonicaliser.
pub const CANONICAL_LIMIT: usize = 8;

/// Canonical graph6 string: equal for two graphs iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    perm: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    /// Column `j` of the relabeled triangle for candidate `v`, as `j` bits
    /// with the `(0, j)` entry most significant.
    fn column(&self, j: usize, v: usize) -> u64 {
        let row = self.g.neighbors(v);
        self.perm[..j]
            .iter()
            .fold(0, |acc, &u| acc << 1 | (row >> u & 1))
    }

    fn run(&mut self, j: usize, used: u64, prefix: u64, len: u32) {
        if let Some((best, _)) = &self.best {
            let best_prefix = if len == 0 {
                0
            } else {
                best >> (self.total_bits - len)
            };
            if prefix > best_prefix {
                return;
            }
        }
        if j == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.perm.clone()));
            }
            return;
        }
        let free = Bits(!used & self.g.vertex_mask());
        let cols: Vec<(usize, u64)> = free.map(|v| (v, self.column(j, v))).collect();
        let min = cols
            .iter()
            .map(|&(_, c)| c)
            .min()
            .expect("a free vertex remains");
        for (v, c) in cols {
            if c != min {
                continue;
            }
            self.perm.push(v);
            self.run(j + 1, used | 1 << v, prefix << j | c, len + j as u32);
            self.perm.pop();
        }
    }
}

/// Vertex order (`perm[i]` = old vertex placed at position `i`) that
/// minimises the upper-triangle bit string.
fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n > CANONICAL_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: CANONICAL_LIMIT,
        });
    }
    let mut s = Search {
        g,
        n,
        total_bits: (n * (n - 1) / 2) as u32,
        perm: Vec::with_capacity(n),
        best: None,
    };
    s.run(0, 0, 0, 0);
    Ok(s.best.expect("at least one ordering exists").1)
}

/// The canonical relabeling of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(g.permute(&canonical_labeling(g)?))
}

/// Canonical byte string of `g`; errors for `n > 8`.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(CanonicalForm(to_graph6(&canonical_graph(g)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_named;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Reference: minimum upper-triangle bit string over every permutation.
    fn brute_force_min(g: &Graph) -> String {
        permutations(g.n())
            .iter()
            .map(|p| to_graph6(&g.permute(p)))
            .min()
            .unwrap()
    }

    #[test]
    fn path_relabelings_collapse() {
        let p3 = gen_named("path", &[3]).unwrap();
        let forms: std::collections::BTreeSet<_> = permutations(3)
            .iter()
            .map(|p| canonical_form(&p3.permute(p)).unwrap())
            .collect();
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let p4 = gen_named("path", &[4]).unwrap();
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&star).unwrap());
    }

    #[test]
    fn agrees_with_exhaustive_minimum() {
        let graphs = [
            gen_named("G_ind", &[]).unwrap(),
            gen_named("cycle", &[6]).unwrap(),
            gen_named("K", &[3, 2, 1]).unwrap(),
            gen_named("dstar", &[3, 3]).unwrap(),
            Graph::from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 2), (5, 0)]).unwrap(),
            Graph::empty(5).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(
                canonical_form(g).unwrap().as_str(),
                brute_force_min(g),
                "{g:?}"
            );
        }
    }

    #[test]
    fn size_guard() {
        let g = gen_named("path", &[9]).unwrap();
        assert_eq!(canonical_form(&g), Err(Error::TooLarge { n: 9, limit: 8 }));
        assert!(canonical_form(&gen_named("complete", &[8]).unwrap()).is_ok());
    }
}
