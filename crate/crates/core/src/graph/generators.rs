//! Graph families: complete multipartite graphs, paths, cycles, double
//! stars and the small twin-structure examples, plus a compact textual
//! generator spec (`K:4,4,2`, `path:8`, `G_clq`, ...).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, MAX_VERTICES};
use crate::{Error, Result};

/// Part sizes `l1 >= l2 >= ... >= lk >= 1` of a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartSizes(Vec<usize>);

impl PartSizes {
    /// Sorts the sizes nonincreasing; rejects empty lists, zero parts and
    /// totals above the vertex cap.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::PartSizes("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::PartSizes("parts must be positive".into()));
        }
        let n: usize = parts.iter().sum();
        if n > MAX_VERTICES {
            return Err(Error::PartSizes(format!(
                "total {n} exceeds {MAX_VERTICES} vertices"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartSizes(parts))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Total vertex count.
    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Largest part.
    pub fn largest(&self) -> usize {
        self.0[0]
    }

    /// Number of parts of size at least two.
    pub fn p(&self) -> usize {
        self.0.iter().filter(|&&l| l >= 2).count()
    }
}

impl fmt::Display for PartSizes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Complete multipartite graph with parts laid out consecutively.
pub fn complete_multipartite(parts: &PartSizes) -> Graph {
    let n = parts.n();
    let mut part_of = Vec::with_capacity(n);
    for (j, &l) in parts.as_slice().iter().enumerate() {
        part_of.extend(std::iter::repeat_n(j, l));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges.filter(|&(u, v)| part_of[u] != part_of[v]))
        .expect("part sizes were validated")
}

/// Part sizes of `g` if it is complete multipartite, i.e. if
/// non-adjacency is an equivalence relation on its vertices.
pub fn is_complete_multipartite(g: &Graph) -> Option<PartSizes> {
    let comp = g.complement();
    let mut parts = Vec::new();
    for block in comp.connected_components() {
        if super::Bits(block).any(|v| g.neighbors(v) & block != 0) {
            return None;
        }
        parts.push(block.count_ones() as usize);
    }
    Some(PartSizes::new(parts).expect("components are nonempty"))
}

fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Double star: centers 0 and 1 joined by an edge, center 0 carrying
/// `a - 1` leaves and center 1 carrying `b - 1`, so the centers have
/// degrees `a` and `b`.
fn double_star(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParams(
            "double star center degrees must be >= 1".into(),
        ));
    }
    let n = a + b;
    let left = (2..a + 1).map(|v| (0, v));
    let right = (a + 1..n).map(|v| (1, v));
    Graph::from_edges(n, std::iter::once((0, 1)).chain(left).chain(right))
}

/// Edge `x=0 -- y=1`, four vertices `2..=5` adjacent to both, and `z=6`
/// hanging off `x`.
fn g_ind() -> Graph {
    let mut edges = vec![(0, 1), (0, 6)];
    for u in 2..6 {
        edges.extend([(0, u), (1, u)]);
    }
    Graph::from_edges(7, edges).unwrap()
}

/// Triangle `a,b,c = 0,1,2`, vertices `p=3, q=4` adjacent to the triangle
/// and to each other, and the path `p - 5 - 6 - 7`.
fn g_clq() -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (5, 6), (6, 7)];
    for t in 0..3 {
        edges.extend([(t, 3), (t, 4)]);
    }
    Graph::from_edges(8, edges).unwrap()
}

fn expect_params(name: &str, params: &[usize], count: usize) -> Result<()> {
    if params.len() != count {
        return Err(Error::InvalidParams(format!(
            "`{name}` takes {count} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

/// Builds a named family member.
///
/// Families: `path(n)`, `cycle(n)`, `complete(n)`, `double_star(a, b)`
/// (alias `dstar`), `multipartite(l1, ..., lk)` (alias `K`), and the fixed
/// graphs `G_ind`, `G_clq`, `comp_S62`.
pub fn gen_named(name: &str, params: &[usize]) -> Result<Graph> {
    match name {
        "path" => {
            expect_params(name, params, 1)?;
            path(params[0])
        }
        "cycle" => {
            expect_params(name, params, 1)?;
            cycle(params[0])
        }
        "complete" => {
            expect_params(name, params, 1)?;
            complete(params[0])
        }
        "double_star" | "dstar" => {
            expect_params(name, params, 2)?;
            double_star(params[0], params[1])
        }
        "multipartite" | "K" => Ok(complete_multipartite(&PartSizes::new(params.to_vec())?)),
        "G_ind" => {
            expect_params(name, params, 0)?;
            Ok(g_ind())
        }
        "G_clq" => {
            expect_params(name, params, 0)?;
            Ok(g_clq())
        }
        "comp_S62" => {
            expect_params(name, params, 0)?;
            Ok(double_star(6, 2)?.complement())
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

/// A parsed generator spec such as `K:4,4,2`, `path:8`, `dstar:6,2` or `G_clq`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub family: String,
    pub params: Vec<usize>,
}

impl GenSpec {
    pub fn build(&self) -> Result<Graph> {
        gen_named(&self.family, &self.params)
    }
}

impl FromStr for GenSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, rest) = match s.split_once(':') {
            Some((f, r)) => (f, Some(r)),
            None => (s, None),
        };
        if family.is_empty() {
            return Err(Error::InvalidParams("empty generator spec".into()));
        }
        let params = match rest {
            None => Vec::new(),
            Some(r) => r
                .split(',')
                .map(|p| {
                    p.trim().parse::<usize>().map_err(|_| {
                        Error::InvalidParams(format!("`{p}` is not a nonnegative integer"))
                    })
                })
                .collect::<Result<_>>()?,
        };
        Ok(GenSpec {
            family: family.to_string(),
            params,
        })
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.params.is_empty() {
            return f.write_str(&self.family);
        }
        let params: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}:{}", self.family, params.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::apsp;

    #[test]
    fn part_sizes_validation() {
        assert_eq!(
            PartSizes::new(vec![1, 2, 2, 1, 1]).unwrap().as_slice(),
            &[2, 2, 1, 1, 1]
        );
        assert!(PartSizes::new(vec![]).is_err());
        assert!(PartSizes::new(vec![3, 0]).is_err());
        assert!(PartSizes::new(vec![40, 25]).is_err());
        let p = PartSizes::new(vec![4, 4, 2]).unwrap();
        assert_eq!((p.n(), p.k(), p.p(), p.largest()), (10, 3, 3, 4));
    }

    #[test]
    fn multipartite_examples() {
        let g = gen_named("K", &[2, 2, 1, 1, 1]).unwrap();
        assert_eq!(g.n(), 7);
        // 21 pairs minus the two non-edges inside the parts of size 2
        assert_eq!(g.m(), 19);
        assert!(!g.has_edge(0, 1) && !g.has_edge(2, 3) && g.has_edge(4, 5));
        assert_eq!(
            gen_named("K", &[1, 1, 1, 1]).unwrap(),
            gen_named("complete", &[4]).unwrap()
        );
        assert_eq!(gen_named("K", &[3, 5]).unwrap().m(), 15);
    }

    #[test]
    fn named_examples() {
        let g = gen_named("G_ind", &[]).unwrap();
        assert_eq!((g.n(), g.m()), (7, 10));
        let g = gen_named("G_clq", &[]).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(apsp(&g).unwrap().diameter, 4);
        let g = gen_named("comp_S62", &[]).unwrap();
        assert_eq!(g.n(), 8);
        assert!(g.is_connected());
        assert_eq!(apsp(&g).unwrap().diameter, 3);
        let s = gen_named("dstar", &[6, 2]).unwrap();
        assert_eq!((s.degree(0), s.degree(1), s.m()), (6, 2, 7));
    }

    #[test]
    fn multipartite_recognition() {
        let g = gen_named("K", &[4, 4, 2]).unwrap();
        assert_eq!(is_complete_multipartite(&g).unwrap().as_slice(), &[4, 4, 2]);
        let k5 = gen_named("complete", &[5]).unwrap();
        assert_eq!(is_complete_multipartite(&k5).unwrap().as_slice(), &[1; 5]);
        assert_eq!(
            is_complete_multipartite(&gen_named("path", &[4]).unwrap()),
            None
        );
        // relabeling does not matter
        let perm = [9, 0, 5, 1, 8, 2, 7, 3, 6, 4];
        assert_eq!(
            is_complete_multipartite(&g.permute(&perm))
                .unwrap()
                .as_slice(),
            &[4, 4, 2]
        );
    }

    #[test]
    fn named_errors() {
        assert_eq!(
            gen_named("wheel", &[5]),
            Err(Error::UnknownFamily("wheel".into()))
        );
        assert!(matches!(
            gen_named("path", &[]),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            gen_named("cycle", &[2]),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            gen_named("G_ind", &[3]),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            gen_named("path", &[0]),
            Err(Error::VertexCount(0))
        ));
    }

    #[test]
    fn gen_spec_parsing() {
        let s: GenSpec = "K:4,4,2".parse().unwrap();
        assert_eq!(
            s,
            GenSpec {
                family: "K".into(),
                params: vec![4, 4, 2]
            }
        );
        assert_eq!(s.to_string(), "K:4,4,2");
        assert_eq!(s.build().unwrap().n(), 10);
        let s: GenSpec = "G_clq".parse().unwrap();
        assert!(s.params.is_empty());
        assert!("path:x".parse::<GenSpec>().is_err());
        assert!("".parse::<GenSpec>().is_err());
        assert_eq!(
            "dstar:6,2".parse::<GenSpec>().unwrap().build().unwrap().n(),
            8
        );
    }
}
