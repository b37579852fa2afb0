//! Named graph families, graph powers, line graphs and the corollary
//! instances that exercise the finite pipeline.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, FiniteGraph, Vertex, VertexSet};
use crate::predicates;
use crate::presentation::{self, GraphPresentation};

fn build(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> FiniteGraph {
    FiniteGraph::new(0..n, edges.into_iter().collect::<Vec<_>>()).expect("family edges use ids below n")
}

/// `P_n` on `0..n`.
pub fn path(n: usize) -> FiniteGraph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n` on `0..n`, `n >= 3`.
pub fn cycle(n: usize) -> FiniteGraph {
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> FiniteGraph {
    build(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> FiniteGraph {
    build(k + 1, (1..=k).map(|i| (0, i)))
}

/// Hub 0 joined to the rim cycle `1..=k`.
pub fn wheel(k: usize) -> FiniteGraph {
    let rim = (0..k).map(|i| (1 + i, 1 + (i + 1) % k));
    build(k + 1, rim.chain((1..=k).map(|i| (0, i))))
}

pub fn complete_multipartite(parts: &[usize]) -> FiniteGraph {
    let mut class = Vec::new();
    for (c, &size) in parts.iter().enumerate() {
        class.extend(std::iter::repeat_n(c, size));
    }
    let n = class.len();
    build(
        n,
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| class[i] != class[j]),
    )
}

/// `K_{2,2,2}`.
pub fn octahedron() -> FiniteGraph {
    complete_multipartite(&[2, 2, 2])
}

pub fn petersen() -> FiniteGraph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// The 3-cube `Q_3`.
pub fn cube() -> FiniteGraph {
    build(
        8,
        (0..8usize)
            .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
            .filter(|&(a, b)| a < b),
    )
}

/// `K_4` minus the edge 2-3.
pub fn diamond() -> FiniteGraph {
    build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> FiniteGraph {
    build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
}

/// `P_n × K_2`: vertex `2i + s` is position `i` on rail `s`.
pub fn ladder(n: usize) -> FiniteGraph {
    let rails = (1..n).flat_map(|i| [(2 * (i - 1), 2 * i), (2 * (i - 1) + 1, 2 * i + 1)]);
    let rungs = (0..n).map(|i| (2 * i, 2 * i + 1));
    build(2 * n, rails.chain(rungs))
}

/// `G^k`: same vertices, adjacency is distance between 1 and `k`.
pub fn graph_power(g: &FiniteGraph, k: usize) -> Result<FiniteGraph> {
    if k == 0 {
        return Err(Error::domain("graph power exponent must be at least 1"));
    }
    let mut edges = Vec::new();
    for &v in g.vertices() {
        let near = g.neighborhood_k(&VertexSet::from([v]), k)?;
        edges.extend(near.into_iter().filter(|&w| v < w).map(|w| (v, w)));
    }
    FiniteGraph::new(g.vertices().iter().copied(), edges)
}

/// `L(G)` together with the edge of `G` each vertex stands for. Vertex `i`
/// is the `i`-th edge of `G` in lexicographic order of its canonical pair.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: FiniteGraph,
    pub edges: Vec<Edge>,
}

impl LineGraph {
    pub fn edge_of(&self, v: Vertex) -> Edge {
        self.edges[v]
    }
}

pub fn line_graph(g: &FiniteGraph) -> Result<LineGraph> {
    let edges: Vec<Edge> = g.edges().collect();
    if edges.is_empty() {
        return Err(Error::domain("the line graph of an edgeless graph is empty"));
    }
    let mut incident: Vec<Vec<Vertex>> = vec![Vec::new(); g.id_bound()];
    for (i, e) in edges.iter().enumerate() {
        let (a, b) = e.ends();
        incident[a].push(i);
        incident[b].push(i);
    }
    let mut ledges = Vec::new();
    for list in &incident {
        for (x, &i) in list.iter().enumerate() {
            for &j in &list[x + 1..] {
                ledges.push((i, j));
            }
        }
    }
    Ok(LineGraph {
        graph: FiniteGraph::new(0..edges.len(), ledges)?,
        edges,
    })
}

/// Predicate values an instance must show before the pipeline runs.
/// `None` means the corollary makes no claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateProfile {
    pub connected: bool,
    pub claw_free: bool,
    pub locally_connected: bool,
    pub two_connected: Option<bool>,
    pub chordal: Option<bool>,
}

impl PredicateProfile {
    fn hamiltonian_class() -> Self {
        PredicateProfile {
            connected: true,
            claw_free: true,
            locally_connected: true,
            two_connected: Some(true),
            chordal: None,
        }
    }

    /// Names of the predicates whose value on `subject` differs from the
    /// profile. A presentation is judged on its default ball: claw-freeness
    /// and local connectivity at interior vertices, the rest on the ball.
    pub fn mismatches(&self, subject: &InstanceSubject) -> Result<Vec<&'static str>> {
        let (g, centres) = match subject {
            InstanceSubject::Finite(g) => (g.clone(), g.vertex_set()),
            InstanceSubject::Presentation(p) => {
                let ball = p.ball()?;
                let interior = ball.interior();
                (ball.graph, interior)
            }
        };
        let mut out = Vec::new();
        let mut expect = |name, want: bool, got: bool| {
            if want != got {
                out.push(name);
            }
        };
        expect("connected", self.connected, predicates::is_connected(&g).holds);
        expect(
            "claw_free",
            self.claw_free,
            predicates::claw_free_at(&g, centres.iter().copied()).holds,
        );
        expect(
            "locally_connected",
            self.locally_connected,
            predicates::locally_connected_at(&g, centres.iter().copied()).holds,
        );
        if let Some(want) = self.two_connected {
            expect("two_connected", want, predicates::is_two_connected(&g)?.holds);
        }
        if let Some(want) = self.chordal {
            expect("chordal", want, predicates::is_chordal(&g).holds);
        }
        Ok(out)
    }
}

#[derive(Clone)]
pub enum InstanceSubject {
    Finite(FiniteGraph),
    Presentation(GraphPresentation),
}

#[derive(Clone)]
pub struct CorollaryInstance {
    /// Which statement the instance exercises, e.g. `"square"`.
    pub corollary: &'static str,
    pub description: &'static str,
    pub subject: InstanceSubject,
    pub profile: PredicateProfile,
}

/// At least one finite instance per corollary, plus presentations where a
/// built-in one fits.
pub fn corollary_instances() -> Vec<CorollaryInstance> {
    let finite = |corollary, description, g: Result<FiniteGraph>, profile| CorollaryInstance {
        corollary,
        description,
        subject: InstanceSubject::Finite(g.expect("corollary instance builds")),
        profile,
    };
    let lc = PredicateProfile::hamiltonian_class;
    let line = |g: FiniteGraph| line_graph(&g).map(|l| l.graph);
    let chordal = PredicateProfile {
        chordal: Some(true),
        ..lc()
    };
    let mut out = vec![
        finite("square", "P_6 squared", graph_power(&path(6), 2), lc()),
        finite("square", "C_7 squared", graph_power(&cycle(7), 2), lc()),
        finite(
            "line_locally_connected",
            "L(K_4), the octahedron",
            line(complete(4)),
            lc(),
        ),
        finite(
            "line_of_locally_connected",
            "L(W_5) for the wheel W_5",
            line(wheel(5)),
            lc(),
        ),
        finite(
            "line_of_square",
            "L(P_5 squared)",
            graph_power(&path(5), 2).and_then(|g| line_graph(&g)).map(|l| l.graph),
            lc(),
        ),
        finite(
            "line_of_square",
            "L(K_{1,3} squared)",
            graph_power(&star(3), 2).and_then(|g| line_graph(&g)).map(|l| l.graph),
            lc(),
        ),
        finite(
            "iterated_line",
            "L(L(Q_3)), minimum degree 3",
            line_graph(&cube()).and_then(|l| line_graph(&l.graph)).map(|l| l.graph),
            lc(),
        ),
        finite(
            "iterated_line",
            "L(L(K_4)), minimum degree 3",
            line_graph(&complete(4))
                .and_then(|l| line_graph(&l.graph))
                .map(|l| l.graph),
            lc(),
        ),
        finite("chordal", "K_4 minus an edge", Ok(diamond()), chordal.clone()),
        finite("chordal", "P_7 squared", graph_power(&path(7), 2), chordal.clone()),
    ];
    let presentations = [
        ("square", "two-way infinite path squared", "double-ray-square", lc()),
        ("square", "one-way infinite path squared", "ray-square", lc()),
        (
            "line_of_square",
            "line graph of the squared two-way ladder",
            "ladder-square-line-graph",
            lc(),
        ),
        ("chordal", "two-way infinite path squared", "double-ray-square", chordal),
    ];
    for (corollary, description, name, profile) in presentations {
        out.push(CorollaryInstance {
            corollary,
            description,
            subject: InstanceSubject::Presentation(presentation::preset(name).expect("built-in preset")),
            profile,
        });
    }
    out
}
