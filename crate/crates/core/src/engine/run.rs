//! The cycle sequence `C_0, C_1, ...` over a ball of a presentation.
//!
//! `C_0` covers a shortest cycle through the root together with its second
//! neighbourhood. Each round shrinks `N(C_m)` to a minimal ray separator,
//! decomposes it and applies the cut lemma.

use serde::Serialize;
use serde_json::{json, Value};

use super::cut_lemma::{cut_lemma_round, CutLemmaConclusions};
use super::Truncation;
use crate::error::{Error, Result};
use crate::extension::{extend_to_cover, shortest_cycle_through};
use crate::graph::{CycleEmbedding, FiniteGraph, Vertex, VertexSet};
use crate::predicates;
use crate::presentation::{Ball, GraphPresentation, Label};
use crate::separators::{decompose, shrink_to_minimal_ray_separator, SeparatorDecomposition};

/// Minimum distance from the current cycle to the boundary before a round.
pub const ROUND_MARGIN: usize = 7;

/// Depth below the boundary at which boundary-touching components are
/// compared with the infinite components of a decomposition.
pub const STABILITY_DEPTH: usize = 4;

#[derive(Clone, Debug, Serialize)]
pub struct RoundRecord {
    /// 1 for the round producing `C_1`.
    pub index: usize,
    pub separator: VertexSet,
    /// Absent on hand-built states.
    pub decomposition: Option<SeparatorDecomposition>,
    pub order: Vec<usize>,
    /// `M^i_j`, indexed like the parts.
    pub witness_sets: Vec<VertexSet>,
    pub extensions: usize,
    pub tuple_checks: usize,
    pub conclusions: CutLemmaConclusions,
}

impl RoundRecord {
    pub fn k(&self) -> usize {
        self.witness_sets.len()
    }
}

#[derive(Clone, Debug)]
pub struct RunState {
    pub name: String,
    pub graph: FiniteGraph,
    pub labels: Vec<Label>,
    pub radius: usize,
    pub root: Vertex,
    pub boundary: VertexSet,
    pub initial: Option<CycleEmbedding>,
    /// `C_0, ..., C_m`.
    pub cycles: Vec<CycleEmbedding>,
    pub rounds: Vec<RoundRecord>,
}

impl RunState {
    /// A state assembled by hand, e.g. to exercise the extraction checker.
    /// Labels are the vertex ids; `rounds[i]` holds `𝒮^{i+1}` and the sets
    /// `M^{i+1}_j`.
    pub fn from_parts(
        graph: FiniteGraph,
        boundary: VertexSet,
        cycles: Vec<CycleEmbedding>,
        rounds: Vec<(VertexSet, Vec<VertexSet>)>,
    ) -> Self {
        let labels = (0..graph.id_bound()).map(|v| v as Label).collect();
        let root = graph.vertices().first().copied().unwrap_or(0);
        let rounds = rounds
            .into_iter()
            .enumerate()
            .map(|(i, (separator, witness_sets))| RoundRecord {
                index: i + 1,
                separator,
                decomposition: None,
                order: (0..witness_sets.len()).collect(),
                witness_sets,
                extensions: 0,
                tuple_checks: 0,
                conclusions: CutLemmaConclusions::default(),
            })
            .collect();
        RunState {
            name: "hand-built".into(),
            graph,
            labels,
            radius: 0,
            root,
            boundary,
            initial: None,
            cycles,
            rounds,
        }
    }

    pub fn label_list<'a>(&self, xs: impl IntoIterator<Item = &'a Vertex>) -> Vec<Label> {
        xs.into_iter().map(|&v| self.labels[v]).collect()
    }

    /// `k_i` for every round.
    pub fn ks(&self) -> Vec<usize> {
        self.rounds.iter().map(RoundRecord::k).collect()
    }

    /// JSON-lines record of `C_i` and, for `i >= 1`, the round producing it.
    pub fn log_record(&self, i: usize) -> Value {
        let cycle = self.label_list(self.cycles[i].order());
        if i == 0 {
            return json!({
                "round": 0,
                "initial": self.initial.as_ref().map(|c| self.label_list(c.order())),
                "cycle": cycle,
            });
        }
        let r = &self.rounds[i - 1];
        let dec = r.decomposition.as_ref().map(|d| {
            json!({
                "k": d.k,
                "finite_component": self.label_list(&d.finite_component),
                "parts": d.parts.iter().map(|p| self.label_list(p)).collect::<Vec<_>>(),
                "infinite_component_sizes": d.infinite_components.iter().map(|k| k.len()).collect::<Vec<_>>(),
            })
        });
        json!({
            "round": i,
            "cycle": cycle,
            "separator": self.label_list(&r.separator),
            "decomposition": dec,
            "order": r.order,
            "witness_sets": r.witness_sets.iter().map(|m| self.label_list(m)).collect::<Vec<_>>(),
            "extensions": r.extensions,
            "tuple_checks": r.tuple_checks,
            "conclusions": {
                "holds": r.conclusions.holds(),
                "lost_edges": r.conclusions.lost_edges.iter().map(|e| { let (a, b) = e.ends(); [self.labels[a], self.labels[b]] }).collect::<Vec<_>>(),
                "far_new_edges": r.conclusions.far_new_edges.iter().map(|e| { let (a, b) = e.ends(); [self.labels[a], self.labels[b]] }).collect::<Vec<_>>(),
            },
        })
    }
}

/// Components of the ball near its boundary must correspond one to one to
/// the infinite components of the decomposition.
fn stability_gate(ball: &Ball, dec: &SeparatorDecomposition, trunc: &Truncation) -> Result<()> {
    let depth = ball.radius.saturating_sub(STABILITY_DEPTH);
    let region: VertexSet = ball.within(depth).difference(&dec.separator).copied().collect();
    let mut hits = vec![0usize; dec.k];
    for comp in ball.graph.components_within(&region) {
        if !comp.iter().any(|&v| ball.depth[v] == depth) {
            continue;
        }
        let first = *comp.iter().next().expect("components are non-empty");
        match dec.component_of(first) {
            Some(j) => hits[j] += 1,
            None => {
                return Err(trunc.too_small(format!(
                    "the finite component reaches depth {depth} at {}",
                    ball.label(first)
                )))
            }
        }
    }
    if let Some(j) = hits.iter().position(|&h| h != 1) {
        return Err(trunc.too_small(format!(
            "infinite component {j} meets depth {depth} in {} pieces",
            hits[j]
        )));
    }
    Ok(())
}

fn require_clear(c: &CycleEmbedding, trunc: &Truncation, what: &str) -> Result<()> {
    match c.order().iter().find(|v| trunc.boundary.contains(v)) {
        Some(b) => Err(trunc.too_small(format!("{what} reaches boundary vertex {b}"))),
        None => Ok(()),
    }
}

pub fn run(pres: &GraphPresentation, rounds: usize) -> Result<RunState> {
    run_observed(pres, rounds, |_, _| Ok(()))
}

/// As [`run`], calling `observe(state, i)` once `C_i` exists.
pub fn run_observed(
    pres: &GraphPresentation,
    rounds: usize,
    mut observe: impl FnMut(&RunState, usize) -> Result<()>,
) -> Result<RunState> {
    let ball = pres.ball()?;
    let g = &ball.graph;
    if g.order() < 3 {
        return Err(Error::domain("the ball has fewer than three vertices"));
    }
    let interior = ball.interior();
    predicates::claw_free_at(g, interior.iter().copied()).into_result("claw_free")?;
    predicates::locally_connected_at(g, interior.iter().copied()).into_result("locally_connected")?;
    let trunc = Truncation::new(ball.radius, ball.boundary());
    if rounds > 0 && trunc.boundary.is_empty() {
        return Err(Error::domain(
            "the ball exhausts the graph; use the finite construction",
        ));
    }

    let initial = shortest_cycle_through(g, ball.root).ok_or_else(|| Error::domain("no cycle through the root"))?;
    let iv = initial.vertex_set();
    let n2 = g.neighborhood_k(&iv, 2)?;
    let goal: VertexSet = iv.union(&n2).copied().collect();
    if let Some(b) = goal.iter().find(|v| trunc.boundary.contains(v)) {
        return Err(trunc.too_small(format!(
            "second neighbourhood of the initial cycle reaches boundary vertex {b}"
        )));
    }
    let (c0, _) = extend_to_cover(g, &initial, &goal, &n2, None)?;
    require_clear(&c0, &trunc, "C_0")?;

    let mut state = RunState {
        name: pres.name.clone(),
        graph: g.clone(),
        labels: ball.labels.clone(),
        radius: ball.radius,
        root: ball.root,
        boundary: trunc.boundary.clone(),
        initial: Some(initial),
        cycles: vec![c0],
        rounds: Vec::new(),
    };
    observe(&state, 0)?;

    for m in 1..=rounds {
        let c = state.cycles.last().expect("C_0 exists").clone();
        let dist = g.distances_from(&c.vertex_set());
        if let Some(&b) = trunc
            .boundary
            .iter()
            .find(|&&b| dist[b].is_some_and(|d| d < ROUND_MARGIN))
        {
            return Err(trunc.too_small(format!(
                "round {m} needs the cycle at distance {ROUND_MARGIN} from the boundary; boundary vertex {} is closer",
                ball.label(b)
            )));
        }
        let separator = shrink_to_minimal_ray_separator(g, &c, &trunc.boundary)?;
        let root = c.order()[0];
        for comp in g.components_avoiding(&separator) {
            if !comp.contains(&root) && !comp.iter().any(|v| trunc.boundary.contains(v)) {
                return Err(trunc.too_small(format!(
                    "round {m}: a component of {} vertices is cut off from both the cycle and the boundary",
                    comp.len()
                )));
            }
        }
        let dec = decompose(g, &c, &separator, &trunc.boundary)?;
        stability_gate(&ball, &dec, &trunc)?;
        let out = cut_lemma_round(g, &c, &dec, &trunc)?;
        require_clear(&out.cycle, &trunc, "round cycle")?;
        state.rounds.push(RoundRecord {
            index: m,
            separator,
            decomposition: Some(dec),
            order: out.order,
            witness_sets: out.witness_sets,
            extensions: out.extensions.len(),
            tuple_checks: out.tuple_checks,
            conclusions: out.conclusions,
        });
        state.cycles.push(out.cycle);
        observe(&state, m)?;
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::preset;

    #[test]
    fn zero_rounds_gives_c0() {
        let state = run(&preset("double-ray-square").unwrap().with_radius(12), 0).unwrap();
        assert_eq!(state.cycles.len(), 1);
        let c0 = &state.cycles[0];
        assert!(c0.validate(&state.graph).is_ok());
        // The initial triangle around 0 plus its second neighbourhood.
        let labels: VertexSet = c0.order().iter().map(|&v| (state.labels[v] + 100) as usize).collect();
        assert!((96..=104).all(|x| labels.contains(&x)));
    }

    #[test]
    fn rounds_grow_cycles() {
        let state = run(&preset("double-ray-square").unwrap().with_radius(30), 2).unwrap();
        assert_eq!(state.ks(), vec![2, 2]);
        for w in state.cycles.windows(2) {
            assert!(w[0].vertex_set().is_subset(&w[1].vertex_set()));
            assert!(w[0].len() < w[1].len());
        }
    }

    #[test]
    fn radius_budget_is_enforced() {
        let err = run(&preset("ray-square").unwrap().with_radius(10), 5).unwrap_err();
        assert!(matches!(
            err,
            Error::RadiusTooSmall {
                radius: 10,
                suggested: 20,
                ..
            }
        ));
    }

    #[test]
    fn finite_balls_are_rejected() {
        let k4 = GraphPresentation::new("k4", 0, 5, |x: Label| (0..4).filter(|&y| y != x).collect());
        assert!(matches!(run(&k4, 1), Err(Error::Domain(_))));
        assert_eq!(run(&k4, 0).unwrap().cycles[0].len(), 4);
    }
}
