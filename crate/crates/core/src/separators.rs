//! Minimal vertex separators and the decomposition of a minimal ray
//! separator into per-end parts.
//!
//! On a truncation ball a "ray starting in X" is read as a path from `X` to
//! the boundary layer, and an infinite component is a component that touches
//! the boundary.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CycleEmbedding, FiniteGraph, Vertex, VertexSet};

/// `𝒮` split by the components of `G - 𝒮`.
///
/// `infinite_components[i]` and `parts[i]` are `K_{i+1}` and `S_{i+1}`; they
/// are listed by the minimum id of the component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatorDecomposition {
    pub separator: VertexSet,
    pub k: usize,
    pub finite_component: VertexSet,
    pub infinite_components: Vec<VertexSet>,
    pub parts: Vec<VertexSet>,
}

impl SeparatorDecomposition {
    /// Index of the part containing `s`.
    pub fn part_of(&self, s: Vertex) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&s))
    }

    /// Index of the infinite component containing `v`.
    pub fn component_of(&self, v: Vertex) -> Option<usize> {
        self.infinite_components.iter().position(|k| k.contains(&v))
    }
}

/// Whether `s` separates `g` and no proper subset of `s` does, decided by the
/// characterisation: `g - s` has at least two components and every vertex of
/// `s` has a neighbour in each of them.
pub fn is_minimal_separator(g: &FiniteGraph, s: &VertexSet) -> bool {
    let comps = g.components_avoiding(s);
    comps.len() >= 2
        && s.iter()
            .all(|&v| comps.iter().all(|comp| g.neighbors(v).iter().any(|w| comp.contains(w))))
}

/// Three pairwise non-adjacent neighbours of `v`, one in each of three
/// different sets, when they exist.
fn claw_across(g: &FiniteGraph, v: Vertex, sets: &[&VertexSet]) -> Option<[Vertex; 3]> {
    let picks: Vec<Vertex> = sets
        .iter()
        .filter_map(|set| g.neighbors(v).iter().copied().find(|w| set.contains(w)))
        .collect();
    if picks.len() < 3 {
        return None;
    }
    let mut leaves = [picks[0], picks[1], picks[2]];
    leaves.sort_unstable();
    Some(leaves)
}

/// Components of `g - s` for a minimal separator `s`. In a claw-free graph
/// there are exactly two; a third component yields a claw.
pub fn minimal_separator_components(g: &FiniteGraph, s: &VertexSet) -> Result<Vec<VertexSet>> {
    g.require_subset(s)?;
    let comps = g.components_avoiding(s);
    if comps.len() < 2 {
        return Err(Error::domain("the set does not separate the graph"));
    }
    if !is_minimal_separator(g, s) {
        return Err(Error::domain("the separator is not inclusion-minimal"));
    }
    if comps.len() > 2 {
        let v = *s
            .iter()
            .next()
            .expect("a separator of a connected remainder is non-empty");
        let sets: Vec<&VertexSet> = comps.iter().take(3).collect();
        let leaves = claw_across(g, v, &sets).expect("every separator vertex sees every component");
        return Err(Error::internal(
            "minimal separator leaves three components",
            std::iter::once(v).chain(leaves),
        ));
    }
    Ok(comps)
}

/// Whether `N(s) ∩ component` induces a complete graph.
pub fn check_complete_neighborhood(g: &FiniteGraph, s: Vertex, component: &VertexSet) -> bool {
    let nb: Vec<Vertex> = g
        .neighbors(s)
        .iter()
        .copied()
        .filter(|w| component.contains(w))
        .collect();
    nb.iter()
        .enumerate()
        .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

fn reaches(g: &FiniteGraph, from: &VertexSet, removed: &VertexSet, targets: &VertexSet) -> bool {
    let mut seen = vec![false; g.id_bound()];
    let mut stack: Vec<Vertex> = from.iter().copied().filter(|v| !removed.contains(v)).collect();
    for &v in &stack {
        seen[v] = true;
    }
    while let Some(v) = stack.pop() {
        if targets.contains(&v) {
            return true;
        }
        for &w in g.neighbors(v) {
            if !seen[w] && !removed.contains(&w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// Shrinks `N(V(c))` to an inclusion-minimal set that still cuts `V(c)` off
/// from `boundary`. Vertices are tried in ascending id; one pass suffices
/// because separation is monotone under taking supersets.
pub fn shrink_to_minimal_ray_separator(g: &FiniteGraph, c: &CycleEmbedding, boundary: &VertexSet) -> Result<VertexSet> {
    let cv = c.vertex_set();
    g.require_subset(&cv)?;
    g.require_subset(boundary)?;
    if let Some(&v) = cv.intersection(boundary).next() {
        return Err(Error::domain(format!("cycle vertex {v} lies on the boundary")));
    }
    let mut s = g.neighborhood(&cv);
    if reaches(g, &cv, &s, boundary) {
        return Err(Error::domain(
            "the cycle's neighbourhood does not cut it off from the boundary",
        ));
    }
    for v in s.clone() {
        s.remove(&v);
        if reaches(g, &cv, &s, boundary) {
            s.insert(v);
        }
    }
    Ok(s)
}

/// Splits a minimal ray separator by the components of `g - 𝒮`.
pub fn decompose(
    g: &FiniteGraph,
    c: &CycleEmbedding,
    separator: &VertexSet,
    boundary: &VertexSet,
) -> Result<SeparatorDecomposition> {
    g.require_subset(separator)?;
    let root = c.order()[0];
    if separator.iter().any(|v| c.contains(*v)) {
        return Err(Error::domain("the separator meets the cycle"));
    }
    let comps = g.components_avoiding(separator);
    let mut finite = None;
    let mut infinite = Vec::new();
    for comp in comps {
        if comp.contains(&root) {
            finite = Some(comp);
        } else if comp.iter().any(|v| boundary.contains(v)) {
            infinite.push(comp);
        } else {
            return Err(Error::domain(format!(
                "component of {} vertices neither holds the cycle nor reaches the boundary",
                comp.len()
            )));
        }
    }
    let finite = finite.expect("the cycle's root is not in the separator");
    if let Some(&v) = c.order().iter().find(|v| !finite.contains(v)) {
        return Err(Error::internal("cycle split by the separator", [v]));
    }
    if infinite.is_empty() {
        return Err(Error::domain("no component of the remainder reaches the boundary"));
    }
    let mut parts = vec![VertexSet::new(); infinite.len()];
    for &s in separator {
        let touching: Vec<usize> = (0..infinite.len())
            .filter(|&i| g.neighbors(s).iter().any(|w| infinite[i].contains(w)))
            .collect();
        if touching.len() >= 2 {
            let sets = [&finite, &infinite[touching[0]], &infinite[touching[1]]];
            let leaves = claw_across(g, s, &sets);
            return Err(Error::internal(
                "separator vertex sees two infinite components",
                std::iter::once(s).chain(leaves.into_iter().flatten()),
            ));
        }
        if !g.neighbors(s).iter().any(|w| finite.contains(w)) {
            return Err(Error::internal(
                "separator vertex has no neighbour in the finite component",
                [s],
            ));
        }
        match touching.first() {
            Some(&i) => {
                parts[i].insert(s);
            }
            None => return Err(Error::internal("separator vertex sees no infinite component", [s])),
        }
    }
    Ok(SeparatorDecomposition {
        separator: separator.clone(),
        k: infinite.len(),
        finite_component: finite,
        infinite_components: infinite,
        parts,
    })
}
