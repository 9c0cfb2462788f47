//! Twin classes and complement structure.
//!
//! Clique twins share a closed neighborhood; independent twins share an
//! open neighborhood. Grouping vertices by these bitsets yields the maximal
//! classes directly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{Bits, Graph};
use crate::metric::{apsp, DistanceData};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwinKind {
    Clique,
    Independent,
}

/// A maximal class of at least two twin vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinClass {
    pub kind: TwinKind,
    pub members: u64,
    /// Common neighborhood outside the class.
    pub external: u64,
    /// Vertices neither in the class nor in `external`.
    pub rest_size: usize,
    /// Common transmission of the members.
    pub transmission: u64,
    /// `transmission + 1` for clique twins, `transmission + 2` for
    /// independent twins.
    pub forced_value: u64,
    /// `size - 1`.
    pub forced_mult: usize,
}

impl TwinClass {
    pub fn size(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn external_size(&self) -> usize {
        self.external.count_ones() as usize
    }

    pub fn member_list(&self) -> Vec<usize> {
        Bits(self.members).collect()
    }

    /// `true` iff every member has the same transmission.
    pub fn transmission_constant(&self, dd: &DistanceData) -> bool {
        Bits(self.members).all(|v| dd.tr[v] == self.transmission)
    }
}

fn group_by(g: &Graph, key: impl Fn(usize) -> u64) -> Vec<u64> {
    let mut groups: BTreeMap<u64, u64> = BTreeMap::new();
    for v in 0..g.n() {
        *groups.entry(key(v)).or_default() |= 1 << v;
    }
    let mut classes: Vec<u64> = groups
        .into_values()
        .filter(|c| c.count_ones() >= 2)
        .collect();
    classes.sort_by_key(|c| c.trailing_zeros());
    classes
}

/// Maximal twin classes given precomputed distances.
pub fn twin_classes_with(g: &Graph, dd: &DistanceData) -> Vec<TwinClass> {
    let n = g.n();
    let make = |kind: TwinKind, members: u64| {
        let first = members.trailing_zeros() as usize;
        let external = g.neighbors(first) & !members;
        let transmission = dd.tr[first];
        let bump = match kind {
            TwinKind::Clique => 1,
            TwinKind::Independent => 2,
        };
        TwinClass {
            kind,
            members,
            external,
            rest_size: n - (members | external).count_ones() as usize,
            transmission,
            forced_value: transmission + bump,
            forced_mult: members.count_ones() as usize - 1,
        }
    };
    let cliques = group_by(g, |v| g.closed_neighbors(v))
        .into_iter()
        .map(|m| make(TwinKind::Clique, m));
    let indeps = group_by(g, |v| g.neighbors(v))
        .into_iter()
        // an empty common neighborhood only happens for isolated vertices
        .filter(|&m| g.neighbors(m.trailing_zeros() as usize) != 0)
        .map(|m| make(TwinKind::Independent, m));
    cliques.chain(indeps).collect()
}

/// Maximal clique-twin and independent-twin classes of a connected graph.
pub fn twin_classes(g: &Graph) -> Result<Vec<TwinClass>> {
    Ok(twin_classes_with(g, &apsp(g)?))
}

/// Number of connected components of the complement.
pub fn complement_component_count(g: &Graph) -> usize {
    g.complement().connected_components().len()
}

/// Number of vertices of degree `n - 1`.
pub fn universal_vertex_count(g: &Graph) -> usize {
    g.universal_vertex_count()
}
