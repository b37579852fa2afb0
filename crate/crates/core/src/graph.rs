//! Immutable simple undirected graphs and the neighbourhood, cut and
//! component primitives the rest of the crate is built from.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type VertexSet = BTreeSet<Vertex>;
pub type EdgeSet = BTreeSet<Edge>;

/// An undirected edge stored with its smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[Vertex; 2]", from = "[Vertex; 2]")]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        debug_assert_ne!(a, b, "loops are not edges of a simple graph");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn ends(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }
}

impl From<Edge> for [Vertex; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl From<[Vertex; 2]> for Edge {
    fn from(p: [Vertex; 2]) -> Self {
        Edge::new(p[0], p[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Simple undirected graph on non-negative integer ids.
///
/// Adjacency lists are sorted, so every traversal below visits neighbours in
/// ascending id order and all outputs are deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGraph {
    vertices: Vec<Vertex>,
    present: Vec<bool>,
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl fmt::Debug for FiniteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl FiniteGraph {
    /// Builds a graph from a vertex list and an edge list. Duplicate edges
    /// collapse; loops and edges to undeclared vertices are rejected.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let vertex_set: VertexSet = vertices.into_iter().collect();
        let size = vertex_set.iter().next_back().map_or(0, |&m| m + 1);
        let mut present = vec![false; size];
        for &v in &vertex_set {
            present[v] = true;
        }
        let mut adj = vec![Vec::new(); size];
        for (a, b) in edges {
            if a == b {
                return Err(Error::domain(format!("loop at vertex {a}")));
            }
            for x in [a, b] {
                if x >= size || !present[x] {
                    return Err(Error::domain(format!("edge {a}-{b} uses unknown vertex {x}")));
                }
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(FiniteGraph {
            vertices: vertex_set.into_iter().collect(),
            present,
            adj,
            edge_count: edge_count / 2,
        })
    }

    /// Builds a graph whose vertex set is inferred from the edges.
    pub fn from_edges(edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let edges: Vec<_> = edges.into_iter().collect();
        let vertices: Vec<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        FiniteGraph::new(vertices, edges)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// One past the largest vertex id; the length of id-indexed scratch arrays.
    pub fn id_bound(&self) -> usize {
        self.adj.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.present.get(v).copied().unwrap_or(false)
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.adj.get(v).map_or(&[], Vec::as_slice)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.neighbors(a).binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices
            .iter()
            .flat_map(move |&a| self.adj[a].iter().filter(move |&&b| a < b).map(move |&b| Edge(a, b)))
    }

    pub fn require_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::domain(format!("unknown vertex {v}")))
        }
    }

    pub fn require_subset<'a>(&self, x: impl IntoIterator<Item = &'a Vertex>) -> Result<()> {
        x.into_iter().try_for_each(|&v| self.require_vertex(v))
    }

    /// Breadth-first distances from a vertex set, indexed by vertex id.
    pub fn distances_from(&self, sources: &VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.id_bound()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if self.contains(s) && dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0) + 1;
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// `N_k(x)`: the vertices at distance between 1 and `k` from `x`.
    pub fn neighborhood_k(&self, x: &VertexSet, k: usize) -> Result<VertexSet> {
        self.require_subset(x)?;
        if k == 0 {
            return Err(Error::domain("neighbourhood radius must be at least 1"));
        }
        Ok(self.ball_layers(x, 1, k))
    }

    /// `N(x)` without the domain check, for internal callers.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        self.ball_layers(x, 1, 1)
    }

    fn ball_layers(&self, x: &VertexSet, lo: usize, hi: usize) -> VertexSet {
        let dist = self.distances_from(x);
        self.vertices
            .iter()
            .copied()
            .filter(|&v| matches!(dist[v], Some(d) if d >= lo && d <= hi))
            .collect()
    }

    /// `δ(x)`: edges with exactly one end in `x`.
    pub fn cut(&self, x: &VertexSet) -> Result<EdgeSet> {
        self.require_subset(x)?;
        Ok(self.cut_unchecked(x))
    }

    pub(crate) fn cut_unchecked(&self, x: &VertexSet) -> EdgeSet {
        let mut out = EdgeSet::new();
        for &a in x {
            for &b in self.neighbors(a) {
                if !x.contains(&b) {
                    out.insert(Edge::new(a, b));
                }
            }
        }
        out
    }

    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<FiniteGraph> {
        self.require_subset(x)?;
        let edges = x.iter().flat_map(|&a| {
            self.neighbors(a)
                .iter()
                .filter(move |&&b| a < b && x.contains(&b))
                .map(move |&b| (a, b))
        });
        FiniteGraph::new(x.iter().copied(), edges.collect::<Vec<_>>())
    }

    /// Connected components, each sorted, listed by minimum id.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&VertexSet::new())
    }

    /// Components of `G - removed`.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut seen = vec![false; self.id_bound()];
        for &r in removed {
            if r < seen.len() {
                seen[r] = true;
            }
        }
        let mut out = Vec::new();
        for &start in &self.vertices {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Components of the subgraph induced by `within`.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let removed: VertexSet = self.vertices.iter().copied().filter(|v| !within.contains(v)).collect();
        self.components_avoiding(&removed)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `x` induces a connected subgraph (the empty set counts as connected).
    pub fn is_connected_within(&self, x: &VertexSet) -> bool {
        self.components_within(x).len() <= 1
    }

    /// Shortest `from`-`to` path whose vertices all satisfy `allowed`.
    /// Ties go to the smallest next vertex id.
    pub fn shortest_path_within(
        &self,
        from: Vertex,
        to: Vertex,
        allowed: impl Fn(Vertex) -> bool,
    ) -> Option<Vec<Vertex>> {
        if !self.contains(from) || !self.contains(to) || !allowed(from) || !allowed(to) {
            return None;
        }
        let mut parent: HashMap<Vertex, Vertex> = HashMap::new();
        let mut queue = VecDeque::from([from]);
        parent.insert(from, from);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adj[v] {
                if allowed(w) && !parent.contains_key(&w) {
                    parent.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

/// Why a vertex sequence is not a cycle of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CycleViolation {
    TooShort { length: usize },
    Repeated { vertex: Vertex },
    UnknownVertex { vertex: Vertex },
    MissingEdge { pair: [Vertex; 2] },
}

impl fmt::Display for CycleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleViolation::TooShort { length } => write!(f, "cycle of length {length} is shorter than 3"),
            CycleViolation::Repeated { vertex } => write!(f, "vertex {vertex} repeats"),
            CycleViolation::UnknownVertex { vertex } => write!(f, "vertex {vertex} is not in the graph"),
            CycleViolation::MissingEdge { pair } => write!(f, "{} and {} are not adjacent", pair[0], pair[1]),
        }
    }
}

/// Checks that `order`, read cyclically, is a cycle of `g`.
pub fn validate_cycle(g: &FiniteGraph, order: &[Vertex]) -> std::result::Result<(), CycleViolation> {
    check_sequence(order)?;
    if let Some(&v) = order.iter().find(|&&v| !g.contains(v)) {
        return Err(CycleViolation::UnknownVertex { vertex: v });
    }
    for i in 0..order.len() {
        let (a, b) = (order[i], order[(i + 1) % order.len()]);
        if !g.has_edge(a, b) {
            return Err(CycleViolation::MissingEdge { pair: [a, b] });
        }
    }
    Ok(())
}

fn check_sequence(order: &[Vertex]) -> std::result::Result<(), CycleViolation> {
    let mut seen = BTreeSet::new();
    for &v in order {
        if !seen.insert(v) {
            return Err(CycleViolation::Repeated { vertex: v });
        }
    }
    if order.len() < 3 {
        return Err(CycleViolation::TooShort { length: order.len() });
    }
    Ok(())
}

/// A cycle as a cyclic vertex sequence in canonical orientation: it starts at
/// its minimum id and continues towards the smaller of that vertex's two
/// cycle neighbours. `succ` is `u⁺`, `pred` is `u⁻`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycleEmbedding {
    order: Vec<Vertex>,
    position: HashMap<Vertex, usize>,
}

impl fmt::Debug for CycleEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.order)
    }
}

impl CycleEmbedding {
    /// Canonicalises a sequence of distinct vertices without consulting a graph.
    pub fn from_sequence(seq: &[Vertex]) -> std::result::Result<Self, CycleViolation> {
        check_sequence(seq)?;
        let n = seq.len();
        let start = (0..n).min_by_key(|&i| seq[i]).unwrap_or(0);
        let next = seq[(start + 1) % n];
        let prev = seq[(start + n - 1) % n];
        let order: Vec<Vertex> = if next < prev {
            (0..n).map(|i| seq[(start + i) % n]).collect()
        } else {
            (0..n).map(|i| seq[(start + n - i) % n]).collect()
        };
        let position = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Ok(CycleEmbedding { order, position })
    }

    /// Validates `seq` against `g` and canonicalises it.
    pub fn in_graph(g: &FiniteGraph, seq: &[Vertex]) -> std::result::Result<Self, CycleViolation> {
        validate_cycle(g, seq)?;
        CycleEmbedding::from_sequence(seq)
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.position.contains_key(&v)
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.position.get(&v).copied()
    }

    /// `v⁺`. Panics if `v` is not on the cycle.
    pub fn succ(&self, v: Vertex) -> Vertex {
        let i = self.position[&v];
        self.order[(i + 1) % self.order.len()]
    }

    /// `v⁻`. Panics if `v` is not on the cycle.
    pub fn pred(&self, v: Vertex) -> Vertex {
        let i = self.position[&v];
        self.order[(i + self.order.len() - 1) % self.order.len()]
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.order.iter().copied().collect()
    }

    pub fn edges(&self) -> EdgeSet {
        let n = self.order.len();
        (0..n)
            .map(|i| Edge::new(self.order[i], self.order[(i + 1) % n]))
            .collect()
    }

    pub fn validate(&self, g: &FiniteGraph) -> std::result::Result<(), CycleViolation> {
        validate_cycle(g, &self.order)
    }
}

impl Serialize for CycleEmbedding {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.order.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycleEmbedding {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let seq = Vec::<Vertex>::deserialize(d)?;
        CycleEmbedding::from_sequence(&seq).map_err(serde::de::Error::custom)
    }
}
