//! Connected graphs up to isomorphism, built by vertex augmentation with
//! canonical-code deduplication, and cached on disk.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{default_labels, SimpleGraph};

/// Largest vertex count the corpus generator accepts; the canonical form
/// tries every permutation.
pub const MAX_CORPUS_VERTICES: usize = 8;

pub const CACHE_ENV: &str = "RAAG_CACHE_DIR";

fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    // pairs (0,1),(0,2),…,(0,n-1),(1,2),…
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn code_under(g: &SimpleGraph, perm: &[usize]) -> u64 {
    let n = g.len();
    g.edges()
        .into_iter()
        .fold(0u64, |acc, (u, v)| acc | 1 << pair_bit(n, perm[u], perm[v]))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The least upper-triangle adjacency bitmask over all relabellings.
pub fn canonical_code(g: &SimpleGraph) -> u64 {
    let mut perm: Vec<usize> = (0..g.len()).collect();
    let mut best = u64::MAX;
    loop {
        best = best.min(code_under(g, &perm));
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

pub fn graph_from_code(n: usize, code: u64) -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if code >> pair_bit(n, i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(default_labels(n), edges).expect("codes describe simple graphs")
}

fn generate_codes(n: usize, previous: &[u64]) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    let mut seen = BTreeSet::new();
    for &code in previous {
        let base = graph_from_code(n - 1, code);
        let old_edges = base.edges();
        for mask in 1u64..1 << (n - 1) {
            let mut edges = old_edges.clone();
            edges.extend(
                (0..n - 1)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| (i, n - 1)),
            );
            let g = SimpleGraph::new(default_labels(n), edges).expect("valid augmentation");
            seen.insert(canonical_code(&g));
        }
    }
    seen.into_iter().collect()
}

/// Canonical codes of all connected graphs on `n` vertices, ascending.
pub fn connected_codes(n: usize) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_CORPUS_VERTICES {
        return Err(Error::CorpusTooLarge {
            requested: n,
            cap: MAX_CORPUS_VERTICES,
        });
    }
    let mut codes = vec![0];
    for k in 2..=n {
        codes = generate_codes(k, &codes);
    }
    Ok(codes)
}

#[derive(Clone, Debug)]
pub struct CorpusGraph {
    /// `n{vertices}-{index}`, stable across runs.
    pub name: String,
    pub code: u64,
    pub graph: SimpleGraph,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    vertices: usize,
    codes: Vec<u64>,
}

/// `$RAAG_CACHE_DIR`, or a directory under the system temp dir.
pub fn default_cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("raag-corpus"))
}

fn cached_codes(n: usize, dir: &Path) -> Result<Vec<u64>> {
    let path = dir.join(format!("connected_n{n}.json"));
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(file) = serde_json::from_str::<CacheFile>(&text) {
            if file.vertices == n {
                return Ok(file.codes);
            }
        }
    }
    let codes = connected_codes(n)?;
    fs::create_dir_all(dir)?;
    // write-then-rename so concurrent runs never see a partial file
    let tmp = dir.join(format!("connected_n{n}.json.{}", std::process::id()));
    fs::write(
        &tmp,
        serde_json::to_string(&CacheFile {
            vertices: n,
            codes: codes.clone(),
        })?,
    )?;
    fs::rename(&tmp, &path)?;
    Ok(codes)
}

/// All connected graphs with `min_n..=max_n` vertices, ordered by vertex
/// count then code. With `cache` set, codes are read from or written to that directory.
pub fn corpus(min_n: usize, max_n: usize, cache: Option<&Path>) -> Result<Vec<CorpusGraph>> {
    let mut out = Vec::new();
    for n in min_n.max(1)..=max_n {
        let codes = match cache {
            Some(dir) => cached_codes(n, dir)?,
            None => connected_codes(n)?,
        };
        out.extend(codes.into_iter().enumerate().map(|(i, code)| CorpusGraph {
            name: format!("n{n}-{i:03}"),
            code,
            graph: graph_from_code(n, code),
        }));
    }
    Ok(out)
}
