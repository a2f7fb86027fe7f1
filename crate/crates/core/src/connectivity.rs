//! Graph skeleton and combinatorial connectivity.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::model::{Semigraph, VertexId};

/// Undirected simple graph on the vertex table of a semigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl SimpleGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|(a, b)| *a == v || *b == v)
            .count()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).is_ok()
    }
}

/// Skeleton of `g`: `u` and `v` are adjacent iff they are consecutive in
/// some edge.
pub fn skeleton(g: &Semigraph) -> SimpleGraph {
    let edges: BTreeSet<(VertexId, VertexId)> = g
        .edges()
        .iter()
        .flat_map(|e| e.vertices().windows(2))
        .map(|w| {
            if w[0] < w[1] {
                (w[0], w[1])
            } else {
                (w[1], w[0])
            }
        })
        .collect();
    SimpleGraph {
        n: g.n(),
        edges: edges.into_iter().collect(),
    }
}

struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: alloc::vec![1; n],
        }
    }

    fn find(&mut self, mut node: usize) -> usize {
        let mut root = node;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[node] != root {
            let next = self.parent[node];
            self.parent[node] = root;
            node = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Connected components of `g` as sorted vertex lists, ordered by smallest
/// member. Isolated vertices form singleton components.
pub fn components(g: &Semigraph) -> Vec<Vec<VertexId>> {
    let mut dsu = DisjointSet::new(g.n());
    for e in g.edges() {
        let head = e.first().0;
        for v in e.vertices() {
            dsu.union(head, v.0);
        }
    }
    let mut slot_of_root = alloc::vec![usize::MAX; g.n()];
    let mut out: Vec<Vec<VertexId>> = Vec::new();
    for v in 0..g.n() {
        let root = dsu.find(v);
        if slot_of_root[root] == usize::MAX {
            slot_of_root[root] = out.len();
            out.push(Vec::new());
        }
        out[slot_of_root[root]].push(VertexId(v));
    }
    out
}

/// True iff every pair of vertices is joined by a chain of edges in which
/// consecutive edges meet in one vertex.
pub fn is_connected(g: &Semigraph) -> bool {
    components(g).len() == 1
}
