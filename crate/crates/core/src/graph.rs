//! The semigraph data model: validated edges, vertex and edge classes,
//! the graph skeleton and connectivity.
//!
//! A semigraph on `n` vertices is a collection of edges, each an ordered
//! tuple of at least two distinct vertices. Any two edges share at most one
//! vertex and an edge is identified with its reversal. Vertices are numbered
//! from 1.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

/// A 1-based vertex index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    /// Zero-based position, for indexing matrices and vectors.
    pub fn index0(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a semigraph needs at least one vertex")]
    NoVertices,
    #[error("edge {edge} has {len} vertex; edges need at least two")]
    EdgeTooShort { edge: usize, len: usize },
    #[error("edge {edge} repeats vertex {vertex}")]
    DuplicateVertexInEdge { edge: usize, vertex: VertexId },
    #[error("edges {first} and {second} share vertices {} and {}", .shared.0, .shared.1)]
    EdgesShareTwoVertices {
        first: usize,
        second: usize,
        shared: (VertexId, VertexId),
    },
    #[error("edges {first} and {second} are the same edge")]
    DuplicateEdge { first: usize, second: usize },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge is not part of this semigraph")]
    EdgeNotInSemigraph,
    #[error("vertex {0} does not lie on the edge")]
    VertexNotOnEdge(VertexId),
}

/// An edge stored in canonical orientation: the first end vertex has the
/// smaller id. Two edges compare equal iff one is the other or its reversal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vec<VertexId>);

impl Edge {
    /// Builds an edge from a vertex sequence, flipping it into canonical
    /// orientation. Length and distinctness are checked by
    /// [`Semigraph::new`]; this only orients.
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        if let (Some(first), Some(last)) = (vertices.first(), vertices.last()) {
            if last < first {
                vertices.reverse();
            }
        }
        Edge(vertices)
    }

    pub fn from_ids(ids: &[usize]) -> Self {
        Edge::new(ids.iter().map(|&i| VertexId(i)).collect())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> VertexId {
        self.0[0]
    }

    pub fn last(&self) -> VertexId {
        self.0[self.0.len() - 1]
    }

    pub fn is_end(&self, v: VertexId) -> bool {
        self.first() == v || self.last() == v
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.0.iter().position(|&u| u == v)
    }

    /// Distance between `u` and `v` in the path skeleton of this edge.
    pub fn skeleton_distance(&self, u: VertexId, v: VertexId) -> Result<usize, GraphError> {
        let pu = self.position(u).ok_or(GraphError::VertexNotOnEdge(u))?;
        let pv = self.position(v).ok_or(GraphError::VertexNotOnEdge(v))?;
        Ok(pu.abs_diff(pv))
    }

    /// Consecutive vertex pairs in edge order.
    pub fn consecutive_pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexClass {
    /// End vertex of every edge containing it.
    PureEnd,
    /// Middle vertex of every edge containing it.
    PureMiddle,
    /// Middle vertex of some edge and end vertex of another.
    MiddleEnd,
    /// Lies on no edge.
    Isolated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    /// Both end vertices are pure end vertices.
    Full,
    /// Exactly one end vertex is a middle-end vertex.
    HalfOnePartial,
    /// Both end vertices are middle-end vertices and the edge has more than two vertices.
    HalfTwoPartial,
    /// A two-vertex edge whose endpoints are both middle-end vertices.
    Quarter,
}

/// Edge counts by class. `m1` full, `m2` quarter, `m3` half edges with one
/// partial half edge, `m4` half edges with two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EdgeCounts {
    pub m1: usize,
    pub m2: usize,
    pub m3: usize,
    pub m4: usize,
}

impl EdgeCounts {
    pub fn total(&self) -> usize {
        self.m1 + self.m2 + self.m3 + self.m4
    }
}

/// The simple graph joining consecutively adjacent vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    neighbours: Vec<BTreeSet<VertexId>>,
}

impl Skeleton {
    pub fn vertex_count(&self) -> usize {
        self.neighbours.len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbours
            .get(u.index0())
            .is_some_and(|set| set.contains(&v))
    }

    pub fn neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.neighbours[v.index0()].iter().copied()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.neighbours
            .iter()
            .enumerate()
            .flat_map(|(i, set)| {
                let u = VertexId(i + 1);
                set.iter().filter(move |&&v| u < v).map(move |&v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbours.iter().map(BTreeSet::len).sum::<usize>() / 2
    }
}

/// A validated, immutable semigraph.
#[derive(Debug, Clone)]
pub struct Semigraph {
    n: usize,
    edges: Vec<Edge>,
    index: HashMap<Edge, usize>,
    vertex_classes: Vec<VertexClass>,
    edge_classes: Vec<EdgeClass>,
}

impl PartialEq for Semigraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Semigraph {}

impl Semigraph {
    /// Validates and canonicalizes a semigraph from vertex-id sequences.
    pub fn new<E: AsRef<[usize]>>(n: usize, edges: &[E]) -> Result<Self, GraphError> {
        let edges = edges
            .iter()
            .map(|e| e.as_ref().iter().map(|&i| VertexId(i)).collect())
            .collect();
        Self::from_vertex_lists(n, edges)
    }

    pub fn from_vertex_lists(n: usize, edges: Vec<Vec<VertexId>>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut canonical = Vec::with_capacity(edges.len());
        for (k, vertices) in edges.into_iter().enumerate() {
            if vertices.len() < 2 {
                return Err(GraphError::EdgeTooShort {
                    edge: k,
                    len: vertices.len(),
                });
            }
            let mut seen = BTreeSet::new();
            for &v in &vertices {
                if v.0 == 0 || v.0 > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v.0, n });
                }
                if !seen.insert(v) {
                    return Err(GraphError::DuplicateVertexInEdge { edge: k, vertex: v });
                }
            }
            canonical.push(Edge::new(vertices));
        }

        // pairwise check via the owner of each vertex pair
        let mut pair_owner: HashMap<(VertexId, VertexId), usize> = HashMap::new();
        let mut index = HashMap::with_capacity(canonical.len());
        for (k, edge) in canonical.iter().enumerate() {
            if let Some(&first) = index.get(edge) {
                return Err(GraphError::DuplicateEdge { first, second: k });
            }
            let vs = edge.vertices();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    let key = (vs[i].min(vs[j]), vs[i].max(vs[j]));
                    if let Some(&first) = pair_owner.get(&key) {
                        return Err(GraphError::EdgesShareTwoVertices {
                            first,
                            second: k,
                            shared: key,
                        });
                    }
                    pair_owner.insert(key, k);
                }
            }
            index.insert(edge.clone(), k);
        }

        let mut is_end = vec![false; n];
        let mut is_middle = vec![false; n];
        for edge in &canonical {
            let vs = edge.vertices();
            is_end[vs[0].index0()] = true;
            is_end[vs[vs.len() - 1].index0()] = true;
            for v in &vs[1..vs.len() - 1] {
                is_middle[v.index0()] = true;
            }
        }
        let vertex_classes: Vec<VertexClass> = (0..n)
            .map(|i| match (is_end[i], is_middle[i]) {
                (false, false) => VertexClass::Isolated,
                (true, false) => VertexClass::PureEnd,
                (false, true) => VertexClass::PureMiddle,
                (true, true) => VertexClass::MiddleEnd,
            })
            .collect();

        let edge_classes = canonical
            .iter()
            .map(|e| {
                let a = vertex_classes[e.first().index0()] == VertexClass::MiddleEnd;
                let b = vertex_classes[e.last().index0()] == VertexClass::MiddleEnd;
                match (a, b) {
                    (false, false) => EdgeClass::Full,
                    (true, true) if e.len() == 2 => EdgeClass::Quarter,
                    (true, true) => EdgeClass::HalfTwoPartial,
                    _ => EdgeClass::HalfOnePartial,
                }
            })
            .collect();

        Ok(Semigraph {
            n,
            edges: canonical,
            index,
            vertex_classes,
            edge_classes,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.n).map(VertexId)
    }

    /// Position of an edge (in either orientation) in [`Semigraph::edges`].
    pub fn edge_index(&self, e: &Edge) -> Option<usize> {
        let canonical = Edge::new(e.vertices().to_vec());
        self.index.get(&canonical).copied()
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v.0 == 0 || v.0 > self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v.0,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn classify_vertex(&self, v: VertexId) -> Result<VertexClass, GraphError> {
        self.check_vertex(v)?;
        Ok(self.vertex_classes[v.index0()])
    }

    pub fn vertex_classes(&self) -> &[VertexClass] {
        &self.vertex_classes
    }

    pub fn classify_edge(&self, e: &Edge) -> Result<EdgeClass, GraphError> {
        let k = self.edge_index(e).ok_or(GraphError::EdgeNotInSemigraph)?;
        Ok(self.edge_classes[k])
    }

    /// Edge classes in the order of [`Semigraph::edges`].
    pub fn edge_classes(&self) -> &[EdgeClass] {
        &self.edge_classes
    }

    pub fn edge_counts(&self) -> EdgeCounts {
        let mut counts = EdgeCounts::default();
        for class in &self.edge_classes {
            match class {
                EdgeClass::Full => counts.m1 += 1,
                EdgeClass::Quarter => counts.m2 += 1,
                EdgeClass::HalfOnePartial => counts.m3 += 1,
                EdgeClass::HalfTwoPartial => counts.m4 += 1,
            }
        }
        counts
    }

    pub fn has_middle_end_vertex(&self) -> bool {
        self.vertex_classes.contains(&VertexClass::MiddleEnd)
    }

    /// The partial half edges of `e`, in edge order: the consecutive pair at
    /// each end that is a middle-end vertex. Empty for full and quarter edges.
    pub fn partial_half_edges(&self, e: &Edge) -> Result<Vec<(VertexId, VertexId)>, GraphError> {
        let k = self.edge_index(e).ok_or(GraphError::EdgeNotInSemigraph)?;
        Ok(self.partial_half_edges_at(k))
    }

    pub(crate) fn partial_half_edges_at(&self, k: usize) -> Vec<(VertexId, VertexId)> {
        let edge = &self.edges[k];
        let vs = edge.vertices();
        let r = vs.len();
        match self.edge_classes[k] {
            EdgeClass::Full | EdgeClass::Quarter => Vec::new(),
            _ => {
                let mut pairs = Vec::with_capacity(2);
                if self.vertex_classes[vs[0].index0()] == VertexClass::MiddleEnd {
                    pairs.push((vs[0], vs[1]));
                }
                if self.vertex_classes[vs[r - 1].index0()] == VertexClass::MiddleEnd {
                    pairs.push((vs[r - 2], vs[r - 1]));
                }
                pairs
            }
        }
    }

    pub fn skeleton(&self) -> Skeleton {
        let mut neighbours = vec![BTreeSet::new(); self.n];
        for edge in &self.edges {
            for (u, v) in edge.consecutive_pairs() {
                neighbours[u.index0()].insert(v);
                neighbours[v.index0()].insert(u);
            }
        }
        Skeleton { neighbours }
    }

    /// Vertices that lie on no edge.
    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        self.vertices()
            .filter(|v| self.vertex_classes[v.index0()] == VertexClass::Isolated)
            .collect()
    }

    /// True iff there are no isolated vertices and every pair of vertices is
    /// joined by a chain of edges, consecutive ones meeting in a vertex.
    pub fn is_connected(&self) -> bool {
        if !self.isolated_vertices().is_empty() {
            return false;
        }
        // every vertex is on an edge, so skeleton connectivity is edge-chain connectivity
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for edge in &self.edges {
            let root = edge.first().index0();
            for v in edge.vertices() {
                let (a, b) = (find(&mut parent, root), find(&mut parent, v.index0()));
                if a != b {
                    parent[b] = a;
                }
            }
        }
        let r0 = find(&mut parent, 0);
        (1..self.n).all(|i| find(&mut parent, i) == r0)
    }

    /// Copy of this semigraph with vertex `v` renamed to `perm[v - 1]`.
    /// `perm` must be a permutation of `1..=n`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Semigraph, GraphError> {
        let edges: Vec<Vec<VertexId>> = self
            .edges
            .iter()
            .map(|e| e.vertices().iter().map(|v| VertexId(perm[v.index0()])).collect())
            .collect();
        Semigraph::from_vertex_lists(self.n, edges)
    }

    /// True when every edge has exactly two vertices, i.e. an ordinary graph.
    pub fn is_ordinary_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }
}
