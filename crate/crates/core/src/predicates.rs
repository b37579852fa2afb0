//! Hypothesis checks. Every negative answer comes with a witness that can be
//! re-checked against the graph on its own.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, Vertex, VertexSet};

/// Evidence that a predicate fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// An induced `K_{1,3}`.
    Claw { center: Vertex, leaves: [Vertex; 3] },
    /// `G[N(vertex)]` has at least the two given components.
    DisconnectedNeighborhood {
        vertex: Vertex,
        first: VertexSet,
        second: VertexSet,
    },
    /// `G - vertex` has at least the two given components.
    CutVertex {
        vertex: Vertex,
        first: VertexSet,
        second: VertexSet,
    },
    /// Two components of a disconnected graph.
    Disconnected { first: VertexSet, second: VertexSet },
    /// An induced cycle on four or more vertices.
    InducedCycle { cycle: Vec<Vertex> },
}

impl Witness {
    /// Re-checks the witness directly against `g`.
    pub fn verify(&self, g: &FiniteGraph) -> bool {
        match self {
            Witness::Claw { center, leaves } => {
                let [a, b, c] = *leaves;
                leaves.iter().all(|&l| g.has_edge(*center, l))
                    && !g.has_edge(a, b)
                    && !g.has_edge(a, c)
                    && !g.has_edge(b, c)
            }
            Witness::DisconnectedNeighborhood { vertex, first, second } => {
                let nb: VertexSet = g.neighbors(*vertex).iter().copied().collect();
                let comps = g.components_within(&nb);
                comps.contains(first) && comps.contains(second) && first != second
            }
            Witness::CutVertex { vertex, first, second } => {
                let comps = g.components_avoiding(&VertexSet::from([*vertex]));
                comps.contains(first) && comps.contains(second) && first != second
            }
            Witness::Disconnected { first, second } => {
                let comps = g.components();
                comps.contains(first) && comps.contains(second) && first != second
            }
            Witness::InducedCycle { cycle } => {
                let n = cycle.len();
                if n < 4 || crate::graph::validate_cycle(g, cycle).is_err() {
                    return false;
                }
                (0..n).all(|i| (i + 2..n).all(|j| (i == 0 && j == n - 1) || !g.has_edge(cycle[i], cycle[j])))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateReport {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PredicateReport {
    pub fn pass() -> Self {
        PredicateReport {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        PredicateReport {
            holds: false,
            witness: Some(witness),
        }
    }

    /// Turns a failed report into the matching error.
    pub fn into_result(self, predicate: &'static str) -> Result<()> {
        if self.holds {
            Ok(())
        } else {
            Err(Error::Predicate {
                predicate,
                report: self,
            })
        }
    }
}

/// First three pairwise non-adjacent vertices among the candidates,
/// scanning 3-subsets lexicographically.
pub fn claw_at(g: &FiniteGraph, candidates: &[Vertex]) -> Option<[Vertex; 3]> {
    let n = candidates.len();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (candidates[i], candidates[j]);
            if g.has_edge(a, b) {
                continue;
            }
            for &c in &candidates[j + 1..] {
                if !g.has_edge(a, c) && !g.has_edge(b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &FiniteGraph) -> PredicateReport {
    claw_free_at(g, g.vertices().iter().copied())
}

/// Claw-freeness restricted to claws whose centre lies in `centers`.
pub fn claw_free_at(g: &FiniteGraph, centers: impl IntoIterator<Item = Vertex>) -> PredicateReport {
    for v in centers {
        if let Some(leaves) = claw_at(g, g.neighbors(v)) {
            return PredicateReport::fail(Witness::Claw { center: v, leaves });
        }
    }
    PredicateReport::pass()
}

pub fn is_locally_connected(g: &FiniteGraph) -> PredicateReport {
    locally_connected_at(g, g.vertices().iter().copied())
}

/// Local connectivity checked only at the given vertices. Empty and
/// single-vertex neighbourhoods count as connected.
pub fn locally_connected_at(g: &FiniteGraph, at: impl IntoIterator<Item = Vertex>) -> PredicateReport {
    for v in at {
        let nb: VertexSet = g.neighbors(v).iter().copied().collect();
        let mut comps = g.components_within(&nb).into_iter();
        if let (Some(first), Some(second)) = (comps.next(), comps.next()) {
            return PredicateReport::fail(Witness::DisconnectedNeighborhood {
                vertex: v,
                first,
                second,
            });
        }
    }
    PredicateReport::pass()
}

pub fn is_connected(g: &FiniteGraph) -> PredicateReport {
    let mut comps = g.components().into_iter();
    match (comps.next(), comps.next()) {
        (Some(first), Some(second)) => PredicateReport::fail(Witness::Disconnected { first, second }),
        _ => PredicateReport::pass(),
    }
}

/// Connected and without a cutvertex. Needs at least three vertices.
pub fn is_two_connected(g: &FiniteGraph) -> Result<PredicateReport> {
    if g.order() < 3 {
        return Err(Error::domain(format!(
            "2-connectivity needs at least 3 vertices, got {}",
            g.order()
        )));
    }
    let connected = is_connected(g);
    if !connected.holds {
        return Ok(connected);
    }
    for &v in g.vertices() {
        let mut comps = g.components_avoiding(&VertexSet::from([v])).into_iter();
        if let (Some(first), Some(second)) = (comps.next(), comps.next()) {
            return Ok(PredicateReport::fail(Witness::CutVertex {
                vertex: v,
                first,
                second,
            }));
        }
    }
    Ok(PredicateReport::pass())
}

/// Maximum cardinality search visiting order; ties go to the smallest id.
fn mcs_order(g: &FiniteGraph) -> Vec<Vertex> {
    let mut weight = vec![0usize; g.id_bound()];
    let mut done = vec![false; g.id_bound()];
    let mut order = Vec::with_capacity(g.order());
    for _ in 0..g.order() {
        let v = g
            .vertices()
            .iter()
            .copied()
            .filter(|&v| !done[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unvisited vertex remains");
        done[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Whether the reverse of the MCS order is a perfect elimination ordering.
fn has_perfect_elimination_order(g: &FiniteGraph) -> bool {
    let visit = mcs_order(g);
    let mut pos = vec![usize::MAX; g.id_bound()];
    for (i, &v) in visit.iter().enumerate() {
        pos[v] = i;
    }
    // In elimination order the neighbours of v that come later are exactly
    // those visited earlier by MCS; the latest-visited of them must be
    // adjacent to all the others.
    for &v in &visit {
        let earlier: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| pos[w] < pos[v]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) {
            if earlier.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
                return false;
            }
        }
    }
    true
}

/// An induced cycle of length at least 4 through some vertex, if one exists.
///
/// For a vertex `v` with non-adjacent neighbours `a`, `b`, a shortest `a`-`b`
/// path avoiding the rest of `N[v]` closes an induced cycle through `v`.
pub fn find_induced_long_cycle(g: &FiniteGraph) -> Option<Vec<Vertex>> {
    for &v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let blocked = |x: Vertex| x == v || (x != a && x != b && g.has_edge(v, x));
                if let Some(path) = g.shortest_path_within(a, b, |x| !blocked(x)) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

pub fn is_chordal(g: &FiniteGraph) -> PredicateReport {
    if has_perfect_elimination_order(g) {
        return PredicateReport::pass();
    }
    let cycle =
        find_induced_long_cycle(g).expect("a graph without a perfect elimination ordering has an induced long cycle");
    PredicateReport::fail(Witness::InducedCycle { cycle })
}

/// The theorem's finite hypotheses in gate order: at least three vertices,
/// connected, claw-free, locally connected.
pub fn check_hypotheses(g: &FiniteGraph) -> Result<()> {
    if g.order() < 3 {
        return Err(Error::domain(format!("need at least 3 vertices, got {}", g.order())));
    }
    is_connected(g).into_result("connected")?;
    is_claw_free(g).into_result("claw_free")?;
    is_locally_connected(g).into_result("locally_connected")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn claw_examples() {
        let claw = generators::star(3);
        let r = is_claw_free(&claw);
        assert!(!r.holds);
        assert_eq!(
            r.witness,
            Some(Witness::Claw {
                center: 0,
                leaves: [1, 2, 3]
            })
        );
        assert!(is_claw_free(&generators::cycle(5)).holds);
        let pet = is_claw_free(&generators::petersen());
        assert!(!pet.holds);
        assert!(pet.witness.unwrap().verify(&generators::petersen()));
    }

    #[test]
    fn petersen_claw_brute_force() {
        // girth 5: every neighbourhood is independent, so every vertex centres a claw
        let g = generators::petersen();
        for &v in g.vertices() {
            let nb = g.neighbors(v);
            assert_eq!(nb.len(), 3);
            assert!(claw_at(&g, nb).is_some());
        }
    }

    #[test]
    fn local_connectivity_examples() {
        assert!(is_locally_connected(&generators::complete(4)).holds);
        let c6 = generators::cycle(6);
        let r = is_locally_connected(&c6);
        assert!(!r.holds);
        assert_eq!(
            r.witness,
            Some(Witness::DisconnectedNeighborhood {
                vertex: 0,
                first: VertexSet::from([1]),
                second: VertexSet::from([5]),
            })
        );
        let w5 = generators::wheel(5);
        for &v in w5.vertices() {
            let nb: VertexSet = w5.neighbors(v).iter().copied().collect();
            assert!(w5.is_connected_within(&nb));
        }
        assert!(is_locally_connected(&w5).holds);
        // isolated and pendant vertices do not falsify the predicate
        assert!(is_locally_connected(&generators::path(2)).holds);
    }

    #[test]
    fn two_connectivity_examples() {
        let r = is_two_connected(&generators::path(3)).unwrap();
        assert!(matches!(r.witness, Some(Witness::CutVertex { vertex: 1, .. })));
        assert!(is_two_connected(&generators::cycle(4)).unwrap().holds);
        let bowtie = generators::bowtie();
        let r = is_two_connected(&bowtie).unwrap();
        assert!(matches!(r.witness, Some(Witness::CutVertex { vertex: 0, .. })));
        assert!(r.witness.unwrap().verify(&bowtie));
        assert!(is_two_connected(&generators::path(2)).is_err());
    }

    #[test]
    fn chordal_examples() {
        let c4 = generators::cycle(4);
        let r = is_chordal(&c4);
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert!(w.verify(&c4));
        assert!(matches!(&w, Witness::InducedCycle { cycle } if cycle.len() == 4));
        assert!(is_chordal(&generators::path(6)).holds);
        assert!(is_chordal(&generators::star(4)).holds);
        let oct = generators::octahedron();
        let r = is_chordal(&oct);
        assert!(!r.holds);
        assert!(r.witness.unwrap().verify(&oct));
        assert!(is_chordal(&generators::diamond()).holds);
    }

    #[test]
    fn hypotheses_gate_order() {
        assert!(check_hypotheses(&generators::wheel(5)).is_ok());
        match check_hypotheses(&generators::star(3)) {
            Err(Error::Predicate { predicate, .. }) => assert_eq!(predicate, "claw_free"),
            other => panic!("unexpected {other:?}"),
        }
        match check_hypotheses(&generators::cycle(6)) {
            Err(Error::Predicate { predicate, .. }) => assert_eq!(predicate, "locally_connected"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
