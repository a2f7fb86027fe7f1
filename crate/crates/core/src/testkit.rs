//! Seeded random semigraphs for property and acceptance tests.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{Semigraph, VertexId};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

struct Draft {
    edges: Vec<Vec<usize>>,
    pairs: BTreeSet<(usize, usize)>,
}

impl Draft {
    fn new() -> Self {
        Self {
            edges: Vec::new(),
            pairs: BTreeSet::new(),
        }
    }

    /// Adds `edge` if it keeps every pair of vertices on at most one edge.
    fn try_add(&mut self, edge: Vec<usize>) -> bool {
        let mut keys = Vec::new();
        for (i, &a) in edge.iter().enumerate() {
            for &b in &edge[i + 1..] {
                let key = (a.min(b), a.max(b));
                if a == b || self.pairs.contains(&key) {
                    return false;
                }
                keys.push(key);
            }
        }
        self.pairs.extend(keys);
        self.edges.push(edge);
        true
    }
}

/// Connected draft over vertices `offset..offset + n`: a random tree of
/// edges (each new edge meets the covered part in one vertex, at an end or
/// in the middle) plus up to `extra` further edges between covered vertices.
fn connected_draft<R: Rng>(rng: &mut R, draft: &mut Draft, offset: usize, n: usize, extra: usize) {
    let first_len = rng.random_range(2..=n.min(4));
    let mut covered: Vec<usize> = (offset..offset + first_len).collect();
    draft.try_add(covered.clone());
    let mut next = offset + first_len;
    while next < offset + n {
        let fresh = rng.random_range(1..=(offset + n - next).min(3));
        let anchor = covered[rng.random_range(0..covered.len())];
        let mut edge: Vec<usize> = (next..next + fresh).collect();
        let at = rng.random_range(0..=fresh);
        edge.insert(at, anchor);
        if rng.random_bool(0.5) {
            edge.reverse();
        }
        covered.extend(next..next + fresh);
        next += fresh;
        let added = draft.try_add(edge);
        debug_assert!(added);
    }
    for _ in 0..extra {
        let len = if rng.random_bool(0.6) { 2 } else { 3 };
        if covered.len() < len {
            continue;
        }
        let mut pick = covered.clone();
        pick.shuffle(rng);
        pick.truncate(len);
        draft.try_add(pick);
    }
}

fn finish<R: Rng>(rng: &mut R, n: usize, draft: Draft) -> Semigraph {
    // Shuffle the vertex table so structure does not track indices.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let edges = draft
        .edges
        .into_iter()
        .map(|e| e.into_iter().map(|v| VertexId(perm[v])).collect())
        .collect();
    Semigraph::new(labels, edges).expect("drafts are valid semigraphs")
}

/// A connected semigraph with `2 ≤ n ≤ max_n` vertices and mixed edge kinds.
pub fn random_connected<R: Rng>(rng: &mut R, max_n: usize) -> Semigraph {
    let n = rng.random_range(2..=max_n.max(2));
    let mut draft = Draft::new();
    let extra = rng.random_range(0..=n);
    connected_draft(rng, &mut draft, 0, n, extra);
    finish(rng, n, draft)
}

/// A disconnected semigraph with at most `max_n ≥ 3` vertices: two connected
/// parts, or one part plus isolated vertices.
pub fn random_disconnected<R: Rng>(rng: &mut R, max_n: usize) -> Semigraph {
    let n = rng.random_range(3..=max_n.max(3));
    let mut draft = Draft::new();
    if n >= 4 && rng.random_bool(0.75) {
        let left = rng.random_range(2..=n - 2);
        let extra = rng.random_range(0..=left);
        connected_draft(rng, &mut draft, 0, left, extra);
        let extra = rng.random_range(0..=n - left);
        connected_draft(rng, &mut draft, left, n - left, extra);
    } else {
        let part = rng.random_range(2..n);
        let extra = rng.random_range(0..=part);
        connected_draft(rng, &mut draft, 0, part, extra);
    }
    finish(rng, n, draft)
}

/// Connected or disconnected with equal odds.
pub fn random_semigraph<R: Rng>(rng: &mut R, max_n: usize) -> Semigraph {
    if rng.random_bool(0.5) {
        random_connected(rng, max_n)
    } else {
        random_disconnected(rng, max_n)
    }
}

/// A simple graph on `n` vertices encoded as 2-edges, each present with
/// probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Semigraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push(alloc::vec![VertexId(i), VertexId(j)]);
            }
        }
    }
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    Semigraph::new(labels, edges).expect("simple graphs are semigraphs")
}

/// Complete graph on `k` vertices as 2-edges.
pub fn complete_graph(k: usize) -> Semigraph {
    let edges = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| alloc::vec![VertexId(i), VertexId(j)]))
        .collect();
    let labels = (0..k).map(|i| format!("k{i}")).collect();
    Semigraph::new(labels, edges).expect("complete graphs are semigraphs")
}

/// A uniform random vector in `[-1, 1]ⁿ`.
pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-1.0..=1.0)).collect()
}
