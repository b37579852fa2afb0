//! Locally finite graphs given by a neighbour oracle, and the finite balls
//! cut out of them.
//!
//! Vertices of a presentation are `i64` labels. A ball of radius `R` holds
//! every vertex within distance `R` of the root; its boundary is the layer at
//! distance exactly `R`, whose neighbourhoods may be cut off.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, Vertex, VertexSet};

pub type Label = i64;

type Oracle = Arc<dyn Fn(Label) -> Vec<Label> + Send + Sync>;

#[derive(Clone)]
pub struct GraphPresentation {
    pub name: String,
    pub root: Label,
    pub radius: usize,
    oracle: Oracle,
}

impl fmt::Debug for GraphPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphPresentation")
            .field("name", &self.name)
            .field("root", &self.root)
            .field("radius", &self.radius)
            .finish_non_exhaustive()
    }
}

impl GraphPresentation {
    pub fn new(
        name: impl Into<String>,
        root: Label,
        radius: usize,
        oracle: impl Fn(Label) -> Vec<Label> + Send + Sync + 'static,
    ) -> Self {
        GraphPresentation {
            name: name.into(),
            root,
            radius,
            oracle: Arc::new(oracle),
        }
    }

    pub fn with_radius(mut self, radius: usize) -> Self {
        self.radius = radius;
        self
    }

    /// Sorted, deduplicated neighbours of `x`.
    pub fn neighbors(&self, x: Label) -> Vec<Label> {
        let mut out = (self.oracle)(x);
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The ball of the presentation's own radius.
    pub fn ball(&self) -> Result<Ball> {
        self.ball_of_radius(self.radius)
    }

    /// Breadth-first ball around the root; fails on an asymmetric oracle or
    /// a loop.
    pub fn ball_of_radius(&self, radius: usize) -> Result<Ball> {
        let mut depth_of: BTreeMap<Label, usize> = BTreeMap::from([(self.root, 0)]);
        let mut adjacency: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
        let mut queue = VecDeque::from([self.root]);
        while let Some(x) = queue.pop_front() {
            let d = depth_of[&x];
            let nb = self.neighbors(x);
            if nb.contains(&x) {
                return Err(Error::domain(format!("oracle {} puts a loop at {x}", self.name)));
            }
            if d < radius {
                for &y in &nb {
                    if let std::collections::btree_map::Entry::Vacant(slot) = depth_of.entry(y) {
                        slot.insert(d + 1);
                        queue.push_back(y);
                    }
                }
            }
            adjacency.insert(x, nb);
        }
        let labels: Vec<Label> = depth_of.keys().copied().collect();
        let id = |x: Label| labels.binary_search(&x).ok();
        let mut edges = Vec::new();
        for (&x, nb) in &adjacency {
            for &y in nb {
                let Some(j) = id(y) else { continue };
                if !adjacency[&y].contains(&x) {
                    return Err(Error::domain(format!(
                        "oracle {} is not symmetric at {x}-{y}",
                        self.name
                    )));
                }
                let i = id(x).expect("every explored label is in the ball");
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        let depth = labels.iter().map(|x| depth_of[x]).collect();
        let graph = FiniteGraph::new(0..labels.len(), edges)?;
        let root = id(self.root).expect("the root is in its ball");
        Ok(Ball {
            graph,
            labels,
            depth,
            radius,
            root,
        })
    }
}

/// A ball of a presentation. Vertex ids are ranks of labels.
#[derive(Clone, Debug)]
pub struct Ball {
    pub graph: FiniteGraph,
    pub labels: Vec<Label>,
    pub depth: Vec<usize>,
    pub radius: usize,
    pub root: Vertex,
}

impl Ball {
    pub fn label(&self, v: Vertex) -> Label {
        self.labels[v]
    }

    pub fn id(&self, x: Label) -> Option<Vertex> {
        self.labels.binary_search(&x).ok()
    }

    pub fn labels_of<'a>(&self, xs: impl IntoIterator<Item = &'a Vertex>) -> Vec<Label> {
        xs.into_iter().map(|&v| self.labels[v]).collect()
    }

    /// Vertices at depth exactly `d`.
    pub fn shell(&self, d: usize) -> VertexSet {
        (0..self.labels.len()).filter(|&v| self.depth[v] == d).collect()
    }

    /// Vertices at depth at most `d`.
    pub fn within(&self, d: usize) -> VertexSet {
        (0..self.labels.len()).filter(|&v| self.depth[v] <= d).collect()
    }

    pub fn boundary(&self) -> VertexSet {
        self.shell(self.radius)
    }

    /// Vertices whose whole neighbourhood lies in the ball.
    pub fn interior(&self) -> VertexSet {
        (0..self.labels.len())
            .filter(|&v| self.depth[v] < self.radius)
            .collect()
    }
}

pub const PRESETS: [&str; 5] = [
    "double-ray-square",
    "ray-square",
    "ladder-line-graph",
    "ladder-square-line-graph",
    "custom-oracle",
];

fn zigzag(x: i64) -> i64 {
    if x >= 0 {
        2 * x
    } else {
        -2 * x - 1
    }
}

fn unzigzag(z: i64) -> i64 {
    if z % 2 == 0 {
        z / 2
    } else {
        -(z + 1) / 2
    }
}

/// Label of the edge `{a, b}` of an integer-labelled graph.
pub fn edge_label(a: Label, b: Label) -> Label {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let (p, q) = (zigzag(a), zigzag(b));
    (p + q) * (p + q + 1) / 2 + q
}

/// Inverse of [`edge_label`]; `None` for labels that encode no pair `a < b`.
pub fn edge_ends(label: Label) -> Option<(Label, Label)> {
    if label < 0 {
        return None;
    }
    let mut w = ((8.0 * label as f64 + 1.0).sqrt() as i64 - 1) / 2;
    while w * (w + 1) / 2 > label {
        w -= 1;
    }
    while (w + 1) * (w + 2) / 2 <= label {
        w += 1;
    }
    let q = label - w * (w + 1) / 2;
    let (a, b) = (unzigzag(w - q), unzigzag(q));
    (a < b).then_some((a, b))
}

/// Two-way ladder `ℤ × K_2`: `(x, s)` has code `2x + s`.
fn ladder_neighbors(v: Label) -> Vec<Label> {
    let (x, s) = (v.div_euclid(2), v.rem_euclid(2));
    vec![2 * x + (1 - s), 2 * (x - 1) + s, 2 * (x + 1) + s]
}

/// Neighbours within distance `k` under `base`.
fn power_neighbors(base: &dyn Fn(Label) -> Vec<Label>, v: Label, k: usize) -> Vec<Label> {
    let mut seen = vec![v];
    let mut frontier = vec![v];
    for _ in 0..k {
        let mut next = Vec::new();
        for x in frontier {
            for y in base(x) {
                if !seen.contains(&y) {
                    seen.push(y);
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    seen.retain(|&y| y != v);
    seen
}

/// Line graph of an integer-labelled graph, on edge labels.
fn line_neighbors(base: &dyn Fn(Label) -> Vec<Label>, e: Label) -> Vec<Label> {
    let Some((a, b)) = edge_ends(e) else { return Vec::new() };
    if !base(a).contains(&b) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (x, other) in [(a, b), (b, a)] {
        out.extend(base(x).into_iter().filter(|&y| y != other).map(|y| edge_label(x, y)));
    }
    out
}

fn circulant(offsets: Vec<i64>) -> impl Fn(Label) -> Vec<Label> + Send + Sync + 'static {
    move |x| offsets.iter().flat_map(|&o| [x - o, x + o]).collect()
}

/// A built-in presentation with its default radius.
pub fn preset(name: &str) -> Result<GraphPresentation> {
    match name {
        "double-ray-square" => Ok(GraphPresentation::new(name, 0, 40, circulant(vec![1, 2]))),
        "ray-square" => Ok(GraphPresentation::new(name, 0, 40, |x: Label| {
            [x - 2, x - 1, x + 1, x + 2].into_iter().filter(|&y| y >= 0).collect()
        })),
        "ladder-line-graph" => Ok(GraphPresentation::new(name, edge_label(0, 1), 30, |e| {
            line_neighbors(&ladder_neighbors, e)
        })),
        "ladder-square-line-graph" => {
            let square = |v: Label| power_neighbors(&ladder_neighbors, v, 2);
            Ok(GraphPresentation::new(name, edge_label(0, 1), 30, move |e| {
                line_neighbors(&square, e)
            }))
        }
        "custom-oracle" => preset_with_offsets(&[1, 2, 3]),
        other => Err(Error::domain(format!(
            "unknown preset {other}; expected one of {}",
            PRESETS.join(", ")
        ))),
    }
}

/// The circulant graph on `ℤ` with `x ~ x ± o` for every offset `o`.
pub fn preset_with_offsets(offsets: &[i64]) -> Result<GraphPresentation> {
    let mut offs: Vec<i64> = offsets.iter().map(|o| o.abs()).collect();
    offs.sort_unstable();
    offs.dedup();
    if offs.is_empty() || offs[0] == 0 {
        return Err(Error::domain("offsets must be non-empty and non-zero"));
    }
    Ok(GraphPresentation::new("custom-oracle", 0, 40, circulant(offs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates;

    #[test]
    fn edge_labels_round_trip() {
        for a in -20..20 {
            for b in a + 1..21 {
                assert_eq!(edge_ends(edge_label(a, b)), Some((a, b)));
                assert_eq!(edge_label(a, b), edge_label(b, a));
            }
        }
        assert_eq!(edge_ends(-1), None);
    }

    #[test]
    fn double_ray_ball() {
        let ball = preset("double-ray-square").unwrap().ball_of_radius(3).unwrap();
        assert_eq!(ball.labels, (-6..=6).collect::<Vec<_>>());
        assert_eq!(ball.labels_of(&ball.boundary()), vec![-6, -5, 5, 6]);
        let interior = ball.interior();
        assert!(predicates::claw_free_at(&ball.graph, interior.iter().copied()).holds);
        assert!(predicates::locally_connected_at(&ball.graph, interior.iter().copied()).holds);
    }

    #[test]
    fn ray_square_root_neighbourhood() {
        let ball = preset("ray-square").unwrap().ball_of_radius(3).unwrap();
        let root = ball.id(0).unwrap();
        assert_eq!(ball.labels_of(ball.graph.neighbors(root)), vec![1, 2]);
        assert!(ball.graph.has_edge(ball.id(1).unwrap(), ball.id(2).unwrap()));
    }

    #[test]
    fn ladder_line_graph_neighbourhoods_split() {
        let ball = preset("ladder-line-graph").unwrap().ball_of_radius(4).unwrap();
        assert!(predicates::is_claw_free(&ball.graph).holds);
        let interior = ball.interior();
        assert!(!predicates::locally_connected_at(&ball.graph, interior.iter().copied()).holds);
    }

    #[test]
    fn ladder_square_line_graph_is_in_class() {
        let ball = preset("ladder-square-line-graph").unwrap().ball_of_radius(4).unwrap();
        let interior = ball.interior();
        assert!(predicates::claw_free_at(&ball.graph, interior.iter().copied()).holds);
        assert!(predicates::locally_connected_at(&ball.graph, interior.iter().copied()).holds);
    }

    #[test]
    fn unknown_and_bad_presets() {
        assert!(preset("nope").is_err());
        assert!(preset_with_offsets(&[]).is_err());
        assert!(preset_with_offsets(&[0, 1]).is_err());
        let asym = GraphPresentation::new("asym", 0, 2, |x| if x == 0 { vec![1] } else { vec![] });
        assert!(asym.ball().is_err());
    }
}
