//! The semigraph data model: vertices, ordered edges, validation and the
//! vertex/edge/pair taxonomy that drives every matrix in this crate.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::quarter::Quarter;

/// Position of a vertex in the semigraph's vertex table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub const fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("a semigraph needs n ≥ 2 vertices, found {0}")]
    TooFewVertices(usize),
    #[error("edge {edge} has {len} vertex; an edge needs at least 2")]
    EdgeTooShort { edge: usize, len: usize },
    #[error("edge {edge} lists vertex `{label}` more than once")]
    RepeatedVertex { edge: usize, label: String },
    #[error("edge {second} repeats edge {first} (an edge and its reversal are the same edge)")]
    DuplicateEdge { first: usize, second: usize },
    #[error(
        "edges {first} and {second} share vertices `{a}` and `{b}`; two distinct edges may share at most one vertex"
    )]
    Intersection {
        first: usize,
        second: usize,
        a: String,
        b: String,
    },
    #[error("vertex index {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("invalid vertex label `{0}`: labels are non-empty, contain no whitespace and do not start with `#`")]
    InvalidLabel(String),
    #[error("vertex label `{0}` is declared twice")]
    DuplicateLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("edge is not part of this semigraph")]
    UnknownEdge,
    #[error("vertex `{0}` does not lie on the edge")]
    NotOnEdge(String),
    #[error("expected two distinct vertices, got `{0}` twice")]
    SameVertex(String),
}

/// A vertex pair with its kind, as listed by [`pair_kinds`].
pub type KindedPair = ((VertexId, VertexId), PairKind);

/// An edge: an ordered tuple of at least two distinct vertices, stored in
/// canonical orientation (first index ≤ last index).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    vertices: Vec<VertexId>,
}

impl Edge {
    fn canonical(mut vertices: Vec<VertexId>) -> Self {
        if vertices.first() > vertices.last() {
            vertices.reverse();
        }
        Edge { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&u| u == v)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn is_end(&self, v: VertexId) -> bool {
        self.first() == v || self.last() == v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexClass {
    /// End vertex of every edge containing it.
    PureEnd,
    /// Middle vertex of every edge containing it.
    PureMiddle,
    /// Middle vertex of some edge and end vertex of another.
    MiddleEnd,
    /// Appears in no edge.
    Isolated,
}

impl VertexClass {
    pub fn name(self) -> &'static str {
        match self {
            VertexClass::PureEnd => "pure_end",
            VertexClass::PureMiddle => "pure_middle",
            VertexClass::MiddleEnd => "middle_end",
            VertexClass::Isolated => "isolated",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeClass {
    /// Both endpoints are pure end vertices.
    Full,
    /// Exactly one endpoint is a middle-end vertex.
    HalfOnePartial,
    /// Both endpoints are middle-end vertices and the edge has ≥ 3 vertices.
    HalfTwoPartial,
    /// A 2-edge whose endpoints are both middle-end vertices.
    Quarter,
}

impl EdgeClass {
    pub fn name(self) -> &'static str {
        match self {
            EdgeClass::Full => "full",
            EdgeClass::HalfOnePartial => "half_one_partial",
            EdgeClass::HalfTwoPartial => "half_two_partial",
            EdgeClass::Quarter => "quarter",
        }
    }
}

/// Edge counts by class. `m1` full, `m2` quarter, `m3` half edges with one
/// partial half edge, `m4` half edges with two.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EdgeCensus {
    pub m1: usize,
    pub m2: usize,
    pub m3: usize,
    pub m4: usize,
}

impl EdgeCensus {
    pub fn total(&self) -> usize {
        self.m1 + self.m2 + self.m3 + self.m4
    }
}

/// The relation between two vertices of the same edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairKind {
    /// Consecutive pair that is neither a partial half edge nor a quarter edge.
    Consecutive,
    /// Non-consecutive pair at positional distance `l ≥ 2`.
    Distance(usize),
    /// Consecutive end pair of a half edge at a middle-end endpoint.
    PartialHalfEdge,
    /// The single pair of a quarter edge.
    QuarterEdge,
}

impl PairKind {
    /// Adjacency weight of the pair.
    pub fn weight(self) -> Quarter {
        match self {
            PairKind::Consecutive => Quarter::ONE,
            PairKind::Distance(l) => Quarter::from_int(l as i64),
            PairKind::PartialHalfEdge => Quarter::HALF,
            PairKind::QuarterEdge => Quarter::QUARTER,
        }
    }
}

/// The edge holding an unordered vertex pair, and the kind of the pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct PairSlot {
    edge: usize,
    kind: PairKind,
}

/// A validated semigraph. Immutable once built.
#[derive(Clone, Debug)]
pub struct Semigraph {
    labels: Vec<String>,
    edges: Vec<Edge>,
    classes: Vec<VertexClass>,
    incidence: Vec<Vec<usize>>,
    pairs: BTreeMap<(usize, usize), PairSlot>,
}

impl PartialEq for Semigraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Semigraph {}

fn valid_label(label: &str) -> bool {
    !label.is_empty() && !label.starts_with('#') && !label.chars().any(char::is_whitespace)
}

impl Semigraph {
    /// Validates and builds a semigraph from a vertex table and edges given
    /// as vertex-index sequences. Edge order is preserved.
    pub fn new(labels: Vec<String>, edges: Vec<Vec<VertexId>>) -> Result<Self, ModelError> {
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !valid_label(label) {
                return Err(ModelError::InvalidLabel(label.clone()));
            }
            if !seen.insert(label.as_str()) {
                return Err(ModelError::DuplicateLabel(label.clone()));
            }
        }
        let n = labels.len();

        let mut canonical = Vec::with_capacity(edges.len());
        for (idx, raw) in edges.into_iter().enumerate() {
            if raw.len() < 2 {
                return Err(ModelError::EdgeTooShort {
                    edge: idx,
                    len: raw.len(),
                });
            }
            let mut members = BTreeSet::new();
            for &v in &raw {
                if v.0 >= n {
                    return Err(ModelError::VertexOutOfRange(v.0));
                }
                if !members.insert(v) {
                    return Err(ModelError::RepeatedVertex {
                        edge: idx,
                        label: labels[v.0].clone(),
                    });
                }
            }
            canonical.push(Edge::canonical(raw));
        }
        if n < 2 {
            return Err(ModelError::TooFewVertices(n));
        }

        let mut first_seen: BTreeMap<&Edge, usize> = BTreeMap::new();
        for (idx, e) in canonical.iter().enumerate() {
            if let Some(&first) = first_seen.get(e) {
                return Err(ModelError::DuplicateEdge { first, second: idx });
            }
            first_seen.insert(e, idx);
        }

        let mut incidence = alloc::vec![Vec::new(); n];
        let mut end_roles = alloc::vec![0usize; n];
        let mut middle_roles = alloc::vec![0usize; n];
        for (idx, e) in canonical.iter().enumerate() {
            for (pos, &v) in e.vertices.iter().enumerate() {
                incidence[v.0].push(idx);
                if pos == 0 || pos + 1 == e.len() {
                    end_roles[v.0] += 1;
                } else {
                    middle_roles[v.0] += 1;
                }
            }
        }
        let classes: Vec<VertexClass> = (0..n)
            .map(|v| match (end_roles[v] > 0, middle_roles[v] > 0) {
                (true, true) => VertexClass::MiddleEnd,
                (true, false) => VertexClass::PureEnd,
                (false, true) => VertexClass::PureMiddle,
                (false, false) => VertexClass::Isolated,
            })
            .collect();

        let mut pairs = BTreeMap::new();
        for (idx, e) in canonical.iter().enumerate() {
            for (p, q, kind) in edge_pairs(e, &classes) {
                let (a, b) = (e.vertices[p].0, e.vertices[q].0);
                let key = (a.min(b), a.max(b));
                if let Some(prev) = pairs.insert(key, PairSlot { edge: idx, kind }) {
                    return Err(ModelError::Intersection {
                        first: prev.edge,
                        second: idx,
                        a: labels[key.0].clone(),
                        b: labels[key.1].clone(),
                    });
                }
            }
        }

        Ok(Semigraph {
            labels,
            edges: canonical,
            classes,
            incidence,
            pairs,
        })
    }

    /// Builds a semigraph from labelled edges; the vertex table follows first
    /// appearance.
    pub fn from_labeled_edges<E, S>(edges: impl IntoIterator<Item = E>) -> Result<Self, ModelError>
    where
        E: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut builder = SemigraphBuilder::new();
        for e in edges {
            builder.edge(e)?;
        }
        builder.build()
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label).map(VertexId)
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n()).map(VertexId)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Index of the edges containing `v`, in edge order.
    pub fn incident_edges(&self, v: VertexId) -> &[usize] {
        &self.incidence[v.0]
    }

    pub fn edge_index(&self, e: &Edge) -> Option<usize> {
        // Any pair of an edge identifies it uniquely.
        let (a, b) = (e.vertices.first()?.0, e.vertices.get(1)?.0);
        let slot = self.pairs.get(&(a.min(b), a.max(b)))?;
        (self.edges[slot.edge] == *e).then_some(slot.edge)
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), ModelError> {
        if v.0 < self.n() {
            Ok(())
        } else {
            Err(ModelError::UnknownVertex(v.to_string()))
        }
    }

    pub fn vertex_class(&self, v: VertexId) -> VertexClass {
        self.classes[v.0]
    }

    pub fn vertex_classes(&self) -> &[VertexClass] {
        &self.classes
    }

    pub fn edge_class(&self, edge: usize) -> EdgeClass {
        let e = &self.edges[edge];
        let middle_end = |v: VertexId| self.classes[v.0] == VertexClass::MiddleEnd;
        match (middle_end(e.first()), middle_end(e.last())) {
            (false, false) => EdgeClass::Full,
            (true, true) if e.len() == 2 => EdgeClass::Quarter,
            (true, true) => EdgeClass::HalfTwoPartial,
            _ => EdgeClass::HalfOnePartial,
        }
    }

    pub fn edge_census(&self) -> EdgeCensus {
        let mut census = EdgeCensus::default();
        for idx in 0..self.m() {
            match self.edge_class(idx) {
                EdgeClass::Full => census.m1 += 1,
                EdgeClass::Quarter => census.m2 += 1,
                EdgeClass::HalfOnePartial => census.m3 += 1,
                EdgeClass::HalfTwoPartial => census.m4 += 1,
            }
        }
        census
    }

    /// The kind of the pair `{u, v}`, or `None` when no edge holds both.
    pub fn pair_kind(&self, u: VertexId, v: VertexId) -> Option<PairKind> {
        let key = (u.0.min(v.0), u.0.max(v.0));
        self.pairs.get(&key).map(|slot| slot.kind)
    }

    /// Adjacency weight of `{u, v}`; zero for non-adjacent pairs and `u = v`.
    pub fn weight(&self, u: VertexId, v: VertexId) -> Quarter {
        if u == v {
            return Quarter::ZERO;
        }
        self.pair_kind(u, v).map_or(Quarter::ZERO, PairKind::weight)
    }

    /// Every adjacent unordered pair `(u, v)` with `u < v`, with its kind.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (VertexId, VertexId, PairKind)> + '_ {
        self.pairs
            .iter()
            .map(|(&(a, b), slot)| (VertexId(a), VertexId(b), slot.kind))
    }

    /// Vertices sharing an edge with `v`, with the kind of each pair.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, PairKind)> + '_ {
        self.incidence[v.0].iter().flat_map(move |&idx| {
            self.edges[idx]
                .vertices
                .iter()
                .filter(move |&&u| u != v)
                .map(move |&u| (u, self.pair_kind(u, v).expect("pair lies on a shared edge")))
        })
    }
}

/// Pair kinds of every pair of positions `(p, q)`, `p < q`, ordered by `p`
/// then `q`.
fn edge_pairs<'a>(
    e: &'a Edge,
    classes: &'a [VertexClass],
) -> impl Iterator<Item = (usize, usize, PairKind)> + 'a {
    let l = e.len();
    let first_me = classes[e.first().0] == VertexClass::MiddleEnd;
    let last_me = classes[e.last().0] == VertexClass::MiddleEnd;
    (0..l).flat_map(move |p| {
        (p + 1..l).map(move |q| {
            let kind = if q - p >= 2 {
                PairKind::Distance(q - p)
            } else if l == 2 && first_me && last_me {
                PairKind::QuarterEdge
            } else if (p == 0 && first_me) || (q == l - 1 && last_me) {
                PairKind::PartialHalfEdge
            } else {
                PairKind::Consecutive
            };
            (p, q, kind)
        })
    })
}

/// Class of `v`.
pub fn classify_vertex(g: &Semigraph, v: VertexId) -> Result<VertexClass, ModelError> {
    g.check_vertex(v)?;
    Ok(g.vertex_class(v))
}

/// Class of an edge of `g`.
pub fn classify_edge(g: &Semigraph, e: &Edge) -> Result<EdgeClass, ModelError> {
    let idx = g.edge_index(e).ok_or(ModelError::UnknownEdge)?;
    Ok(g.edge_class(idx))
}

/// All `l(l-1)/2` pairs of an edge of `g` with their kinds, ordered by the
/// position of the first member and then of the second.
pub fn pair_kinds(g: &Semigraph, e: &Edge) -> Result<Vec<KindedPair>, ModelError> {
    g.edge_index(e).ok_or(ModelError::UnknownEdge)?;
    Ok(edge_pairs(e, &g.classes)
        .map(|(p, q, kind)| ((e.vertices[p], e.vertices[q]), kind))
        .collect())
}

/// Positional distance of two distinct vertices of `e`.
pub fn edge_distance(e: &Edge, u: VertexId, v: VertexId) -> Result<usize, ModelError> {
    if u == v {
        return Err(ModelError::SameVertex(u.to_string()));
    }
    let pu = e
        .position(u)
        .ok_or_else(|| ModelError::NotOnEdge(u.to_string()))?;
    let pv = e
        .position(v)
        .ok_or_else(|| ModelError::NotOnEdge(v.to_string()))?;
    Ok(pu.abs_diff(pv))
}

/// Incremental construction by label. Vertices enter the table on first
/// mention, whether declared on their own or as part of an edge.
#[derive(Clone, Debug, Default)]
pub struct SemigraphBuilder {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    edges: Vec<Vec<VertexId>>,
}

impl SemigraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id of `label`, adding it to the vertex table if new.
    pub fn vertex(&mut self, label: &str) -> Result<VertexId, ModelError> {
        if let Some(&idx) = self.index.get(label) {
            return Ok(VertexId(idx));
        }
        if !valid_label(label) {
            return Err(ModelError::InvalidLabel(label.to_string()));
        }
        let idx = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), idx);
        Ok(VertexId(idx))
    }

    /// Declares a new vertex; declaring an existing label is an error.
    pub fn declare(&mut self, label: &str) -> Result<VertexId, ModelError> {
        if self.index.contains_key(label) {
            return Err(ModelError::DuplicateLabel(label.to_string()));
        }
        self.vertex(label)
    }

    /// Appends an edge and returns its index.
    pub fn edge<S: AsRef<str>>(
        &mut self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<usize, ModelError> {
        let ids = labels
            .into_iter()
            .map(|l| self.vertex(l.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        self.edges.push(ids);
        Ok(self.edges.len() - 1)
    }

    pub fn build(self) -> Result<Semigraph, ModelError> {
        Semigraph::new(self.labels, self.edges)
    }
}
