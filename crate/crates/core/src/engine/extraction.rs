//! Conditions (i)-(v) of the extraction lemma, checked on a finite prefix
//! `C_0, ..., C_n` of the cycle sequence, plus evidence for the limit.
//!
//! Ends are represented by end proxies: the components of `G − V(C_n)` that
//! touch the boundary of the ball.

use serde::Serialize;

use super::run::RunState;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExtractionWitness {
    /// `vertex` lies on `C_i` but not on `C_{i+1}`.
    VanishingVertex { vertex: Vertex, cycle: usize },
    /// A cut edge of `M^round_part` touches the boundary.
    BoundaryCut { round: usize, part: usize, edge: Edge },
    /// `edge` lies on `C_i` and `C_j` but not on `C_{j+1}`.
    FlickeringEdge { edge: Edge, i: usize, j: usize },
    /// `C_cycle` meets `δ(M^round_part)` in `edges`, which differ from what
    /// `C_round` meets or do not number 2.
    Crossing {
        round: usize,
        part: usize,
        cycle: usize,
        edges: Vec<Edge>,
    },
    /// An end proxy whose chain breaks at `round`.
    Chain { proxy: usize, round: usize, reason: String },
    /// A stable-region vertex whose stable degree is not 2.
    StableDegree { vertex: Vertex, degree: usize },
    /// `round` violates the separator nesting.
    Nesting { round: usize, vertices: Vec<Vertex> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub name: &'static str,
    pub pass: bool,
    /// Number of individual facts checked.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ExtractionWitness>,
}

impl ConditionResult {
    fn new(name: &'static str) -> Self {
        ConditionResult {
            name,
            pass: true,
            checked: 0,
            witness: None,
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> ExtractionWitness) {
        self.checked += 1;
        if !ok && self.pass {
            self.pass = false;
            self.witness = Some(witness());
        }
    }
}

/// The chain `M^i_{f(i)}` followed by one end proxy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub proxy: VertexSet,
    /// `f(i)` for `i = 1..=n`; `None` where no set tracks the proxy.
    pub parts: Vec<Option<usize>>,
    pub ambiguous: bool,
    pub contains_proxy: bool,
    pub nested: bool,
    /// `M^i_{f(i)} ∩ V(C_{i−2}) = ∅` for `i >= 2`.
    pub recedes: bool,
}

/// Stable edges inside the round-one region `V(C_1) ∖ ∪_j M^1_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathSignature {
    pub region: VertexSet,
    /// Vertex sets of the components, each the vertex set of a path.
    pub paths: Vec<VertexSet>,
    pub all_paths: bool,
    pub expected: usize,
}

impl PathSignature {
    pub fn holds(&self) -> bool {
        self.all_paths && self.paths.len() == self.expected
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtractionReport {
    pub rounds: usize,
    pub vertex_persistence: ConditionResult,
    pub finite_cuts: ConditionResult,
    pub end_chains: ConditionResult,
    pub edge_persistence: ConditionResult,
    pub cut_crossings: ConditionResult,
    pub stable_degree: ConditionResult,
    pub separator_nesting: ConditionResult,
    pub chains: Vec<ChainReport>,
    pub stable_vertices: VertexSet,
    pub stable_edges: EdgeSet,
    pub signature: PathSignature,
}

impl ExtractionReport {
    /// Conditions (i)-(v) in order.
    pub fn conditions(&self) -> [&ConditionResult; 5] {
        [
            &self.vertex_persistence,
            &self.finite_cuts,
            &self.end_chains,
            &self.edge_persistence,
            &self.cut_crossings,
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.conditions().iter().all(|c| c.pass) && self.stable_degree.pass && self.separator_nesting.pass
    }
}

/// Checks the extraction conditions on a state with at least two rounds.
pub fn check_extraction_conditions(state: &RunState) -> Result<ExtractionReport> {
    let n = state.cycles.len().saturating_sub(1);
    if n < 2 || state.rounds.len() != n {
        return Err(Error::domain(format!(
            "extraction needs cycles C_0..C_n with n >= 2 and one round record per cycle after C_0; got {} cycles and {} rounds",
            state.cycles.len(),
            state.rounds.len()
        )));
    }
    let g = &state.graph;
    let cycles = &state.cycles;
    let vsets: Vec<VertexSet> = cycles.iter().map(|c| c.vertex_set()).collect();
    let esets: Vec<EdgeSet> = cycles.iter().map(|c| c.edges()).collect();
    // δ(M^p_j) for round p = 1..=n.
    let cuts: Vec<Vec<EdgeSet>> = state
        .rounds
        .iter()
        .map(|r| r.witness_sets.iter().map(|m| g.cut_unchecked(m)).collect())
        .collect();

    let mut persist = ConditionResult::new("vertex persistence");
    for i in 0..n {
        for &v in &vsets[i] {
            persist.check(vsets[i + 1].contains(&v), || ExtractionWitness::VanishingVertex {
                vertex: v,
                cycle: i,
            });
        }
    }

    let mut finite = ConditionResult::new("finite cuts");
    for (p, round) in cuts.iter().enumerate() {
        for (j, cut) in round.iter().enumerate() {
            for &e in cut {
                let (a, b) = e.ends();
                let clear = !state.boundary.contains(&a) && !state.boundary.contains(&b);
                finite.check(clear, || ExtractionWitness::BoundaryCut {
                    round: p + 1,
                    part: j,
                    edge: e,
                });
            }
        }
    }

    let (chains, end_chains) = check_chains(state, &vsets);

    let mut edges = ConditionResult::new("edge persistence");
    for j in 1..n {
        for i in 0..j {
            for &e in esets[i].intersection(&esets[j]) {
                edges.check(esets[j + 1].contains(&e), || ExtractionWitness::FlickeringEdge {
                    edge: e,
                    i,
                    j,
                });
            }
        }
    }

    let mut crossings = ConditionResult::new("cut crossings");
    for (pi, round) in cuts.iter().enumerate() {
        let p = pi + 1;
        for (j, cut) in round.iter().enumerate() {
            let at_p: EdgeSet = esets[p].intersection(cut).copied().collect();
            for (i, es) in esets.iter().enumerate().skip(p) {
                let at_i: EdgeSet = es.intersection(cut).copied().collect();
                crossings.check(at_i == at_p && at_i.len() == 2, || ExtractionWitness::Crossing {
                    round: p,
                    part: j,
                    cycle: i,
                    edges: at_i.iter().copied().collect(),
                });
            }
        }
    }

    let mut stable_edges = EdgeSet::new();
    for j in 1..=n {
        for i in 0..j {
            stable_edges.extend(esets[i].intersection(&esets[j]).copied());
        }
    }
    let stable_vertices = vsets[n - 2].clone();
    let mut degree = vec![0usize; g.id_bound()];
    for e in &stable_edges {
        let (a, b) = e.ends();
        degree[a] += 1;
        degree[b] += 1;
    }
    let mut stable_degree = ConditionResult::new("stable degree");
    for &v in &stable_vertices {
        stable_degree.check(degree[v] == 2, || ExtractionWitness::StableDegree {
            vertex: v,
            degree: degree[v],
        });
    }

    let mut nesting = ConditionResult::new("separator nesting");
    let decs: Vec<_> = state.rounds.iter().map(|r| r.decomposition.as_ref()).collect();
    for (i, dec) in decs.iter().enumerate() {
        let Some(dec) = dec else { continue };
        let mut need: VertexSet = dec.finite_component.union(&dec.separator).copied().collect();
        need.extend(g.neighborhood_k(&dec.separator, 3).unwrap_or_default());
        let missing: Vec<Vertex> = need.difference(&vsets[i + 1]).copied().collect();
        let round = i + 1;
        nesting.check(missing.is_empty(), || ExtractionWitness::Nesting {
            round,
            vertices: missing,
        });
        if let Some(Some(next)) = decs.get(i + 1) {
            let d = g.distances_from(&dec.separator);
            let close: Vec<Vertex> = next
                .separator
                .iter()
                .copied()
                .filter(|&v| d[v].is_some_and(|x| x < 4))
                .collect();
            nesting.check(close.is_empty(), || ExtractionWitness::Nesting {
                round: round + 1,
                vertices: close,
            });
        }
    }

    let signature = path_signature(state, &vsets[1], &stable_edges);

    Ok(ExtractionReport {
        rounds: n,
        vertex_persistence: persist,
        finite_cuts: finite,
        end_chains,
        edge_persistence: edges,
        cut_crossings: crossings,
        stable_degree,
        separator_nesting: nesting,
        chains,
        stable_vertices,
        stable_edges,
        signature,
    })
}

fn check_chains(state: &RunState, vsets: &[VertexSet]) -> (Vec<ChainReport>, ConditionResult) {
    let g = &state.graph;
    let n = vsets.len() - 1;
    let mut result = ConditionResult::new("end chains");
    let proxies: Vec<VertexSet> = g
        .components_avoiding(&vsets[n])
        .into_iter()
        .filter(|comp| comp.iter().any(|v| state.boundary.contains(v)))
        .collect();
    let mut reports = Vec::new();
    for (pi, proxy) in proxies.iter().enumerate() {
        let parts: Vec<Option<usize>> = state
            .rounds
            .iter()
            .map(|r| match &r.decomposition {
                Some(dec) => dec.infinite_components.iter().position(|k| proxy.is_subset(k)),
                None => r
                    .witness_sets
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| proxy.is_subset(m))
                    .min_by_key(|(_, m)| m.len())
                    .map(|(j, _)| j),
            })
            .collect();
        let ambiguous = parts.iter().any(Option::is_none);
        let chain: Vec<Option<&VertexSet>> = state
            .rounds
            .iter()
            .zip(&parts)
            .map(|(r, p)| p.map(|j| &r.witness_sets[j]))
            .collect();
        let mut report = ChainReport {
            proxy: proxy.clone(),
            parts: parts.clone(),
            ambiguous,
            contains_proxy: true,
            nested: true,
            recedes: true,
        };
        if let Some(round) = parts.iter().position(Option::is_none) {
            result.check(false, || ExtractionWitness::Chain {
                proxy: pi,
                round: round + 1,
                reason: "no witness set tracks the proxy".into(),
            });
        }
        for (i, m) in chain.iter().enumerate() {
            let Some(m) = m else { continue };
            let round = i + 1;
            let contains = proxy.is_subset(m);
            report.contains_proxy &= contains;
            result.check(contains, || ExtractionWitness::Chain {
                proxy: pi,
                round,
                reason: "witness set misses part of the proxy".into(),
            });
            if let Some(Some(next)) = chain.get(i + 1) {
                let nested = next.is_subset(m);
                report.nested &= nested;
                result.check(nested, || ExtractionWitness::Chain {
                    proxy: pi,
                    round: round + 1,
                    reason: "witness set is not inside its predecessor".into(),
                });
            }
            if round >= 2 {
                let recedes = m.is_disjoint(&vsets[round - 2]);
                report.recedes &= recedes;
                result.check(recedes, || ExtractionWitness::Chain {
                    proxy: pi,
                    round,
                    reason: format!("witness set meets C_{}", round - 2),
                });
            }
        }
        reports.push(report);
    }
    (reports, result)
}

fn path_signature(state: &RunState, c1: &VertexSet, stable: &EdgeSet) -> PathSignature {
    let g = &state.graph;
    let first = &state.rounds[0];
    let mut region = c1.clone();
    for m in &first.witness_sets {
        region.retain(|v| !m.contains(v));
    }
    let inside: Vec<Edge> = stable
        .iter()
        .copied()
        .filter(|e| {
            let (a, b) = e.ends();
            region.contains(&a) && region.contains(&b)
        })
        .collect();
    let mut degree = vec![0usize; g.id_bound()];
    for e in &inside {
        let (a, b) = e.ends();
        degree[a] += 1;
        degree[b] += 1;
    }
    // Union-find over the region.
    let mut parent: Vec<Vertex> = (0..g.id_bound()).collect();
    fn find(parent: &mut [Vertex], mut x: Vertex) -> Vertex {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in &inside {
        let (a, b) = e.ends();
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let mut groups: std::collections::BTreeMap<Vertex, VertexSet> = Default::default();
    for &v in &region {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().insert(v);
    }
    let paths: Vec<VertexSet> = groups.into_values().collect();
    let all_paths = paths.iter().all(|p| {
        let edges = inside.iter().filter(|e| p.contains(&e.ends().0)).count();
        edges + 1 == p.len() && p.iter().all(|&v| degree[v] <= 2)
    });
    PathSignature {
        region,
        paths,
        all_paths,
        expected: first.k(),
    }
}
