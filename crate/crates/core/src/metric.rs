//! Exact hop distances, transmissions and the distance Laplacian.

use crate::graph::{Bits, Graph};
use crate::{Error, Result};

/// All-pairs hop distances of a connected graph with derived invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceData {
    /// Row-major `n x n` distance matrix.
    pub dist: Vec<Vec<u32>>,
    /// Transmission of each vertex: the sum of its row of `dist`.
    pub tr: Vec<u64>,
    pub diameter: u32,
    /// Sum of distances over unordered pairs.
    pub wiener: u64,
}

impl DistanceData {
    pub fn n(&self) -> usize {
        self.dist.len()
    }
}

/// BFS from `s`, one frontier bitset per level.
fn bfs_row(g: &Graph, s: usize) -> Result<Vec<u32>> {
    let n = g.n();
    let mut row = vec![0u32; n];
    let mut seen = 1u64 << s;
    let mut frontier = seen;
    let mut depth = 0;
    while frontier != 0 {
        depth += 1;
        let mut next = 0u64;
        for v in Bits(frontier) {
            next |= g.neighbors(v);
        }
        next &= !seen;
        for v in Bits(next) {
            row[v] = depth;
        }
        seen |= next;
        frontier = next;
    }
    if seen != g.vertex_mask() {
        let missing = (!seen & g.vertex_mask()).trailing_zeros() as usize;
        return Err(Error::Disconnected(s, missing));
    }
    Ok(row)
}

/// Exact all-pairs shortest paths by one BFS per source.
pub fn apsp(g: &Graph) -> Result<DistanceData> {
    let dist = (0..g.n())
        .map(|s| bfs_row(g, s))
        .collect::<Result<Vec<_>>>()?;
    let tr: Vec<u64> = dist
        .iter()
        .map(|r| r.iter().map(|&d| d as u64).sum())
        .collect();
    let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
    let wiener = tr.iter().sum::<u64>() / 2;
    Ok(DistanceData {
        dist,
        tr,
        diameter,
        wiener,
    })
}

/// Diameter of a connected graph.
pub fn diameter(g: &Graph) -> Result<u32> {
    Ok(apsp(g)?.diameter)
}

/// The distance Laplacian `Tr - D` as an exact integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DlMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl DlMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn trace(&self) -> i64 {
        (0..self.n()).map(|i| self.entries[i][i]).sum()
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&x| x as f64).collect())
            .collect()
    }
}

pub fn distance_laplacian(dd: &DistanceData) -> DlMatrix {
    let n = dd.n();
    let entries = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    if u == v {
                        dd.tr[u] as i64
                    } else {
                        -(dd.dist[u][v] as i64)
                    }
                })
                .collect()
        })
        .collect();
    DlMatrix { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_named;

    #[test]
    fn path_transmissions() {
        let dd = apsp(&gen_named("path", &[8]).unwrap()).unwrap();
        assert_eq!(dd.tr[0], 28);
        assert_eq!(dd.tr[7], 28);
        assert_eq!(dd.diameter, 7);
    }

    #[test]
    fn complete_and_cycle() {
        for n in 1..8 {
            let dd = apsp(&gen_named("complete", &[n]).unwrap()).unwrap();
            assert!(dd.tr.iter().all(|&t| t == n as u64 - 1));
            assert_eq!(dd.wiener, (n * (n - 1) / 2) as u64);
        }
        let dd = apsp(&gen_named("cycle", &[10]).unwrap()).unwrap();
        assert!(dd.tr.iter().all(|&t| t == 25));
        assert_eq!(dd.diameter, 5);
    }

    #[test]
    fn small_laplacians() {
        let dl = distance_laplacian(&apsp(&gen_named("path", &[3]).unwrap()).unwrap());
        assert_eq!(
            dl.entries,
            vec![vec![3, -1, -2], vec![-1, 2, -1], vec![-2, -1, 3]]
        );
        let dl = distance_laplacian(&apsp(&gen_named("complete", &[2]).unwrap()).unwrap());
        assert_eq!(dl.entries, vec![vec![1, -1], vec![-1, 1]]);
        let dl = distance_laplacian(&apsp(&gen_named("complete", &[3]).unwrap()).unwrap());
        for (i, row) in dl.entries.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, if i == j { 2 } else { -1 });
            }
        }
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&gen_named("path", &[8]).unwrap()).unwrap(), 7);
        assert_eq!(diameter(&gen_named("comp_S62", &[]).unwrap()).unwrap(), 3);
        assert_eq!(diameter(&gen_named("G_clq", &[]).unwrap()).unwrap(), 4);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(apsp(&g), Err(Error::Disconnected(0, 2)));
        assert!(diameter(&g).is_err());
    }
}
