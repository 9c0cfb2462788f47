//! Exhaustive corpora of connected graphs, one representative per
//! isomorphism class.
//!
//! Every connected graph on `n >= 2` vertices has a non-cut vertex, so all
//! classes on `n` vertices arise by attaching a new vertex to a nonempty
//! subset of some connected graph on `n - 1` vertices. Candidates are
//! deduplicated by canonical form. Up to [`INTERNAL_ENUM_LIMIT`] vertices the
//! corpus is generated in memory; 7 and 8 vertices are read from committed
//! graph6 fixtures produced by the same generator.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::{canonical_form, canonical_graph, parse_graph6, to_graph6, Graph, CANONICAL_LIMIT};
use crate::{Error, Result};

/// Largest `n` enumerated in memory by [`enumerate_connected`].
pub const INTERNAL_ENUM_LIMIT: usize = 6;

/// Environment variable overriding the fixture directory.
pub const CORPUS_DIR_ENV: &str = "DISTLAP_CORPUS_DIR";

/// Number of connected graphs on `n` unlabeled vertices, for `n <= 8`.
pub fn connected_class_count(n: usize) -> Option<usize> {
    const COUNTS: [usize; 9] = [0, 1, 1, 2, 6, 21, 112, 853, 11117];
    COUNTS.get(n).copied().filter(|&c| c > 0)
}

/// Fixture directory: `$DISTLAP_CORPUS_DIR` if set, else the `corpus/`
/// directory shipped with this crate.
pub fn default_corpus_dir() -> PathBuf {
    std::env::var_os(CORPUS_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus"))
}

fn fixture_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("connected{n}.g6"))
}

/// Generates all connected graphs on `n <= 8` vertices in canonical
/// labeling, sorted by canonical form.
pub fn generate_connected(n: usize) -> Result<Vec<Graph>> {
    if n > CANONICAL_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: CANONICAL_LIMIT,
        });
    }
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for g in &level {
            for subset in 1u64..(1 << (k - 1)) {
                let mut adj = g.adjacency().to_vec();
                for (v, row) in adj.iter_mut().enumerate() {
                    *row |= (subset >> v & 1) << (k - 1);
                }
                adj.push(subset);
                let h = Graph::from_adjacency(adj)?;
                let key = canonical_form(&h)?;
                if !next.contains_key(key.as_str()) {
                    next.insert(key.as_str().to_owned(), canonical_graph(&h)?);
                }
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Reads one graph6 record per nonempty line.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).map_err(|_| Error::MissingFixture(path.to_path_buf()))?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_graph6)
        .collect()
}

/// Writes one graph6 record per line.
pub fn write_graph6_file(path: &Path, graphs: &[Graph]) -> std::io::Result<()> {
    let mut f = std::io::BufWriter::new(fs::File::create(path)?);
    for g in graphs {
        writeln!(f, "{}", to_graph6(g))?;
    }
    f.flush()
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, using the default fixture directory for `n` in {7, 8}.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    enumerate_connected_in(n, &default_corpus_dir())
}

/// As [`enumerate_connected`], reading fixtures from `dir`. Fixture counts
/// are checked against the known class counts.
pub fn enumerate_connected_in(n: usize, dir: &Path) -> Result<Vec<Graph>> {
    if n <= INTERNAL_ENUM_LIMIT {
        return generate_connected(n);
    }
    let expected = connected_class_count(n).ok_or(Error::TooLarge {
        n,
        limit: CANONICAL_LIMIT,
    })?;
    let graphs = read_graph6_file(&fixture_path(dir, n))?;
    if graphs.len() != expected || graphs.iter().any(|g| g.n() != n) {
        return Err(Error::CorpusCount {
            n,
            found: graphs.len(),
            expected,
        });
    }
    Ok(graphs)
}
