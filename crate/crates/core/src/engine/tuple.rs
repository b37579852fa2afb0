//! Good tuples: a cycle `D` with witness sets `M_j`, checked against the six
//! properties (a)-(f) relative to a base cycle `C` and a decomposition of a
//! minimal ray separator of `C`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::{apply_path_extension, PathExtension};
use crate::graph::{CycleEmbedding, Edge, FiniteGraph, Vertex, VertexSet};
use crate::separators::SeparatorDecomposition;

/// Sets derived once from `(G, C, 𝒮)` and shared by every check of a round.
pub struct TupleContext<'a> {
    pub graph: &'a FiniteGraph,
    pub base: &'a CycleEmbedding,
    pub decomposition: &'a SeparatorDecomposition,
    base_vertices: VertexSet,
    /// `N_2(N(C))`.
    near_neighborhood: VertexSet,
    /// `K_0 ∪ N_4(K_0)`.
    near_finite: VertexSet,
    /// `S_i ∪ (N_3(S_i) ∩ K_i)` per part.
    covered: Vec<VertexSet>,
    /// `(K_0 ∖ V(C)) ∪ 𝒮 ∪ (N_2(N(C)) ∩ K_0)`.
    location: VertexSet,
}

impl<'a> TupleContext<'a> {
    pub fn new(g: &'a FiniteGraph, c: &'a CycleEmbedding, dec: &'a SeparatorDecomposition) -> Self {
        let base_vertices = c.vertex_set();
        let nc = g.neighborhood(&base_vertices);
        let dist_nc = g.distances_from(&nc);
        let near_neighborhood: VertexSet = g
            .vertices()
            .iter()
            .copied()
            .filter(|&v| matches!(dist_nc[v], Some(1..=2)))
            .collect();
        let k0 = &dec.finite_component;
        let dist_k0 = g.distances_from(k0);
        let near_finite = g
            .vertices()
            .iter()
            .copied()
            .filter(|&v| matches!(dist_k0[v], Some(0..=4)))
            .collect();
        let covered = dec
            .parts
            .iter()
            .zip(&dec.infinite_components)
            .map(|(s, k)| {
                let d = g.distances_from(s);
                let mut out = s.clone();
                out.extend(k.iter().copied().filter(|&v| matches!(d[v], Some(1..=3))));
                out
            })
            .collect();
        let mut location: VertexSet = k0.difference(&base_vertices).copied().collect();
        location.extend(dec.separator.iter().copied());
        location.extend(near_neighborhood.intersection(k0).copied());
        TupleContext {
            graph: g,
            base: c,
            decomposition: dec,
            base_vertices,
            near_neighborhood,
            near_finite,
            covered,
            location,
        }
    }

    /// Whether `v` may lie on an extension path (or be its base) handled by
    /// [`good_extend`].
    pub fn location_allows(&self, v: Vertex) -> bool {
        self.location.contains(&v)
    }

    /// `S_i ∪ (N_3(S_i) ∩ K_i)`.
    pub fn covered_by_part(&self, i: usize) -> &VertexSet {
        &self.covered[i]
    }
}

/// A cycle with the witness sets of the parts processed so far, in
/// processing order. Parts are numbered from 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodTuple {
    pub cycle: CycleEmbedding,
    pub sets: Vec<(usize, VertexSet)>,
}

impl GoodTuple {
    pub fn bare(cycle: CycleEmbedding) -> Self {
        GoodTuple {
            cycle,
            sets: Vec::new(),
        }
    }

    pub fn set_of(&self, part: usize) -> Option<&VertexSet> {
        self.sets.iter().find(|(j, _)| *j == part).map(|(_, m)| m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "property", rename_all = "snake_case")]
pub enum TupleViolation {
    /// `D` misses a vertex of `C` (`part` is `None`) or of a covered set.
    A {
        part: Option<usize>,
        vertex: Vertex,
    },
    /// `K_j ⊄ M_j`, or `M_j` leaves `(V ∖ V(C)) ∪ N_2(N(C))`.
    B {
        part: usize,
        vertex: Vertex,
    },
    C {
        part: usize,
        crossing: Vec<Edge>,
    },
    /// A vertex of `M_j` near `K_0` is off the cycle.
    D {
        part: usize,
        vertex: Vertex,
    },
    E {
        part: usize,
        components: usize,
    },
    /// `M_j` splits the infinite component `K_p`.
    F {
        part: usize,
        component: usize,
        inside: Vertex,
        outside: Vertex,
    },
}

impl TupleViolation {
    pub fn witness(&self) -> Vec<Vertex> {
        match self {
            TupleViolation::A { vertex, .. } | TupleViolation::B { vertex, .. } | TupleViolation::D { vertex, .. } => {
                vec![*vertex]
            }
            TupleViolation::C { crossing, .. } => crossing
                .iter()
                .flat_map(|e| {
                    let (a, b) = e.ends();
                    [a, b]
                })
                .collect(),
            TupleViolation::E { .. } => Vec::new(),
            TupleViolation::F { inside, outside, .. } => vec![*inside, *outside],
        }
    }
}

impl fmt::Display for TupleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TupleViolation::A { part: None, vertex } => write!(f, "(a) base cycle vertex {vertex} is off the cycle"),
            TupleViolation::A { part: Some(j), vertex } => {
                write!(f, "(a) vertex {vertex} near separator part {j} is off the cycle")
            }
            TupleViolation::B { part, vertex } => write!(f, "(b) witness set {part} is wrong at vertex {vertex}"),
            TupleViolation::C { part, crossing } => {
                write!(f, "(c) cycle crosses witness set {part} in {} edges", crossing.len())
            }
            TupleViolation::D { part, vertex } => {
                write!(
                    f,
                    "(d) vertex {vertex} of witness set {part} is near K_0 but off the cycle"
                )
            }
            TupleViolation::E { part, components } => {
                write!(f, "(e) witness set {part} induces {components} components")
            }
            TupleViolation::F { part, component, .. } => {
                write!(f, "(f) witness set {part} splits infinite component {component}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TupleReport {
    pub violations: Vec<TupleViolation>,
}

impl TupleReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        match self.violations.into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::internal(format!("good tuple property fails: {v}"), v.witness())),
        }
    }
}

/// Evaluates (a)-(f) for every witness set; reports every violation found.
pub fn check_tuple(ctx: &TupleContext<'_>, tuple: &GoodTuple) -> TupleReport {
    let g = ctx.graph;
    let dec = ctx.decomposition;
    let d = &tuple.cycle;
    let mut out = Vec::new();
    if let Some(&v) = ctx.base_vertices.iter().find(|&&v| !d.contains(v)) {
        out.push(TupleViolation::A { part: None, vertex: v });
    }
    let d_edges = d.edges();
    for (j, m) in &tuple.sets {
        let j = *j;
        if let Some(&v) = ctx.covered[j].iter().find(|&&v| !d.contains(v)) {
            out.push(TupleViolation::A {
                part: Some(j),
                vertex: v,
            });
        }
        let outside_allowed = |v: &Vertex| ctx.base_vertices.contains(v) && !ctx.near_neighborhood.contains(v);
        if let Some(&v) = dec.infinite_components[j]
            .iter()
            .find(|v| !m.contains(v))
            .or_else(|| m.iter().find(|v| outside_allowed(v)))
        {
            out.push(TupleViolation::B { part: j, vertex: v });
        }
        let crossing: Vec<Edge> = g.cut_unchecked(m).intersection(&d_edges).copied().collect();
        if crossing.len() != 2 {
            out.push(TupleViolation::C { part: j, crossing });
        }
        if let Some(&v) = m.iter().find(|&&v| !d.contains(v) && ctx.near_finite.contains(&v)) {
            out.push(TupleViolation::D { part: j, vertex: v });
        }
        let components = g.components_within(m).len();
        if components != 1 {
            out.push(TupleViolation::E { part: j, components });
        }
        for (p, kp) in dec.infinite_components.iter().enumerate() {
            let inside = kp.iter().find(|v| m.contains(v));
            let outside = kp.iter().find(|v| !m.contains(v));
            if let (Some(&a), Some(&b)) = (inside, outside) {
                out.push(TupleViolation::F {
                    part: j,
                    component: p,
                    inside: a,
                    outside: b,
                });
            }
        }
    }
    TupleReport { violations: out }
}

/// The witness-set update of a good extension: `M_j` absorbs the path and
/// the base when the path ends inside `M_j`, and loses them otherwise.
pub fn update_sets(sets: &[(usize, VertexSet)], ext: &PathExtension) -> Vec<(usize, VertexSet)> {
    let mut moved = ext.path_vertices();
    moved.insert(ext.base);
    let z = ext.end();
    sets.iter()
        .map(|(j, m)| {
            let next = if m.contains(&z) {
                m.union(&moved).copied().collect()
            } else {
                m.difference(&moved).copied().collect()
            };
            (*j, next)
        })
        .collect()
}

pub(crate) fn check_location(ctx: &TupleContext<'_>, ext: &PathExtension) -> Result<()> {
    let bad: Vec<Vertex> = ext
        .path
        .iter()
        .copied()
        .chain([ext.base])
        .filter(|&v| !ctx.location_allows(v))
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "extension leaves the admissible region at {bad:?}"
        )))
    }
}

/// Advances a tuple by an extension whose cycle `next` is already computed.
pub(crate) fn advance(
    ctx: &TupleContext<'_>,
    sets: &[(usize, VertexSet)],
    ext: &PathExtension,
    next: &CycleEmbedding,
) -> Result<GoodTuple> {
    check_location(ctx, ext)?;
    let tuple = GoodTuple {
        cycle: next.clone(),
        sets: update_sets(sets, ext),
    };
    check_tuple(ctx, &tuple).into_result()?;
    Ok(tuple)
}

/// Applies `ext` to a good tuple and re-verifies all six properties.
pub fn good_extend(ctx: &TupleContext<'_>, tuple: &GoodTuple, ext: &PathExtension) -> Result<GoodTuple> {
    check_location(ctx, ext)?;
    let next = apply_path_extension(ctx.graph, &tuple.cycle, ext)?;
    advance(ctx, &tuple.sets, ext, &next)
}
