//! One application of the cut lemma: from a cycle `C` and a decomposition
//! of a minimal ray separator `𝒮 ⊆ N(C)`, build `C′ ⊇ K_0 ∪ 𝒮 ∪ N_3(𝒮)`
//! together with witness sets `M_1..M_k` forming a good tuple.
//!
//! Parts are processed one at a time. For each part `S_ℓ` the cycle first
//! picks up one vertex `s ∈ S_ℓ`, then a second vertex `t ∈ S_ℓ` next to
//! `s`, then a tree `T_ℓ ⊆ K_ℓ` covering `N_3(S_ℓ) ∩ K_ℓ` is threaded in
//! between `s` and `t` and covered by extensions based in the tree. The
//! round ends by covering `K_0`.

use std::collections::VecDeque;

use serde::Serialize;

use super::tuple::{advance, check_tuple, good_extend, GoodTuple, TupleContext};
use super::Truncation;
use crate::error::{Error, Result};
use crate::extension::{
    extend_to_cover, extend_to_cover_with, find_path_extension, insert_between, reroute, PathExtension,
};
use crate::graph::{CycleEmbedding, Edge, FiniteGraph, Vertex, VertexSet};
use crate::separators::SeparatorDecomposition;

/// Checked conclusions of a round. (i) and (ii) are enforced as errors, so a
/// returned outcome always has them; (iii) is reported.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CutLemmaConclusions {
    /// Edges of `C − N_2(N(C))` missing from `C′`.
    pub lost_edges: Vec<Edge>,
    /// Edges of `E(C′) ∖ E(C)` with an end in `V(C) ∖ N_3(N(C))`.
    pub far_new_edges: Vec<Edge>,
}

impl CutLemmaConclusions {
    pub fn holds(&self) -> bool {
        self.lost_edges.is_empty() && self.far_new_edges.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CutLemmaOutcome {
    pub cycle: CycleEmbedding,
    /// `M_j`, indexed like the parts of the decomposition.
    pub witness_sets: Vec<VertexSet>,
    /// Part indices in processing order.
    pub order: Vec<usize>,
    /// Every extension of the round, in order.
    pub extensions: Vec<PathExtension>,
    /// Number of good-tuple verifications performed; all passed.
    pub tuple_checks: usize,
    pub conclusions: CutLemmaConclusions,
}

fn within(g: &FiniteGraph, from: &VertexSet, lo: usize, hi: usize) -> VertexSet {
    let d = g.distances_from(from);
    g.vertices()
        .iter()
        .copied()
        .filter(|&v| d[v].is_some_and(|x| lo <= x && x <= hi))
        .collect()
}

/// A tree in `G[K_ℓ]` containing `N_3(S_ℓ) ∩ K_ℓ`: the breadth-first tree
/// from the smallest vertex of `N(S_ℓ) ∩ K_ℓ`, pruned to the root paths of
/// the required vertices. Returns the vertices and the parent map.
fn separator_tree(
    g: &FiniteGraph,
    part: &VertexSet,
    component: &VertexSet,
    trunc: &Truncation,
) -> Result<(VertexSet, Vec<Option<Vertex>>)> {
    let need: VertexSet = within(g, part, 1, 3).intersection(component).copied().collect();
    if let Some(&b) = need.iter().find(|v| trunc.boundary.contains(v)) {
        return Err(trunc.too_small(format!(
            "vertex {b} within distance 3 of a separator part is on the boundary"
        )));
    }
    let root = *g
        .neighborhood(part)
        .intersection(component)
        .next()
        .ok_or_else(|| Error::internal("separator part has no neighbour in its component", part.iter().copied()))?;
    let mut parent: Vec<Option<Vertex>> = vec![None; g.id_bound()];
    let mut seen = vec![false; g.id_bound()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] && component.contains(&w) {
                seen[w] = true;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    let mut tree = VertexSet::from([root]);
    for &x in &need {
        if !seen[x] {
            return Err(Error::internal("component is not connected", [root, x]));
        }
        let mut y = x;
        while tree.insert(y) {
            y = parent[y].expect("every non-root tree vertex has a parent");
        }
    }
    if let Some(&b) = tree.iter().find(|v| trunc.boundary.contains(v)) {
        return Err(trunc.too_small(format!("separator tree reaches boundary vertex {b}")));
    }
    Ok((tree, parent))
}

/// The tree path from `a` to `b` through their lowest common ancestor.
fn tree_path(parent: &[Option<Vertex>], a: Vertex, b: Vertex) -> Vec<Vertex> {
    let climb = |mut x: Vertex| {
        let mut out = vec![x];
        while let Some(p) = parent[x] {
            out.push(p);
            x = p;
        }
        out
    };
    let up_a = climb(a);
    let mut up_b = climb(b);
    let on_a: VertexSet = up_a.iter().copied().collect();
    let meet = up_b
        .iter()
        .position(|x| on_a.contains(x))
        .expect("both climbs end at the root");
    let lca = up_b[meet];
    up_b.truncate(meet);
    let mut path: Vec<Vertex> = up_a.into_iter().take_while(|&x| x != lca).collect();
    path.push(lca);
    path.extend(up_b.into_iter().rev());
    path
}

fn require_path(g: &FiniteGraph, path: &[Vertex]) -> Result<()> {
    for pair in path.windows(2) {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(Error::internal(
                "separator neighbourhood is not complete on a component",
                [pair[0], pair[1]],
            ));
        }
    }
    Ok(())
}

/// Runs the cut lemma on `(g, c, dec)` inside the truncation `trunc`.
pub fn cut_lemma_round(
    g: &FiniteGraph,
    c: &CycleEmbedding,
    dec: &SeparatorDecomposition,
    trunc: &Truncation,
) -> Result<CutLemmaOutcome> {
    let cv = c.vertex_set();
    let nc = g.neighborhood(&cv);
    let d_nc = g.distances_from(&nc);
    if !c.order().iter().any(|&v| d_nc[v].is_none_or(|x| x >= 3)) {
        return Err(Error::domain(
            "the cycle has no vertex at distance 3 or more from its neighbourhood",
        ));
    }
    let ctx = TupleContext::new(g, c, dec);
    let mut tuple = GoodTuple::bare(c.clone());
    let mut extensions = Vec::new();
    let mut checks = 0;
    let mut order = Vec::new();
    let mut processed = vec![false; dec.k];

    while order.len() < dec.k {
        let open = |x: Vertex| dec.part_of(x).is_some_and(|p| !processed[p]);

        // First vertex s of a new part.
        let v = dec
            .separator
            .iter()
            .copied()
            .find(|&x| open(x))
            .expect("an unprocessed part is non-empty");
        let u = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&x| cv.contains(&x))
            .ok_or_else(|| Error::internal("separator vertex has no neighbour on the cycle", [v]))?;
        let found = find_path_extension(g, &tuple.cycle, v, u)?;
        let si = found
            .path
            .iter()
            .rposition(|&x| open(x))
            .expect("the target is unprocessed");
        let first = if si == 0 {
            found
        } else {
            reroute(g, &tuple.cycle, &found, found.path[si..].to_vec())?
        };
        let s = first.target;
        let l = dec.part_of(s).expect("s lies in the separator");
        tuple = good_extend(&ctx, &tuple, &first)?;
        checks += 1;
        extensions.push(first);
        if let Some(&x) = tuple.cycle.order().iter().find(|&&x| x != s && open(x)) {
            return Err(Error::internal(
                "cycle holds a second unprocessed separator vertex",
                [s, x],
            ));
        }

        // Second vertex t of S_ℓ, next to s on the cycle.
        let part = &dec.parts[l];
        let comp = &dec.infinite_components[l];
        let v2 = g
            .neighbors(s)
            .iter()
            .copied()
            .find(|x| comp.contains(x))
            .ok_or_else(|| Error::internal("separator vertex has no neighbour in its component", [s]))?;
        let found = find_path_extension(g, &tuple.cycle, v2, s)?;
        let ti = found.path.iter().rposition(|x| part.contains(x)).ok_or_else(|| {
            Error::internal(
                "extension path leaves its component without crossing the part",
                found.path.clone(),
            )
        })?;
        if ti + 1 >= found.path.len() {
            return Err(Error::internal(
                "extension path ends inside the part",
                found.path.clone(),
            ));
        }
        let (t, w, z) = (found.path[ti], found.path[ti + 1], found.end());
        let path = if w == z || open(w) { vec![t, z] } else { vec![t, w, z] };
        require_path(g, &path)?;
        let second = reroute(g, &tuple.cycle, &found, path)?;
        tuple = good_extend(&ctx, &tuple, &second)?;
        checks += 1;
        extensions.push(second);
        let on_cycle: VertexSet = part.iter().copied().filter(|&x| tuple.cycle.contains(x)).collect();
        if on_cycle != VertexSet::from([s, t]) || tuple.cycle.succ(s) != t && tuple.cycle.pred(s) != t {
            return Err(Error::internal(
                "part meets the cycle other than in an adjacent pair",
                on_cycle,
            ));
        }
        let region: VertexSet = part.union(comp).copied().collect();
        for (_, b) in &tuple.sets {
            let both = b.contains(&s) && b.contains(&t);
            if !both && b.intersection(&region).next().is_some() {
                return Err(Error::internal("witness set cuts into a new part", [s, t]));
            }
        }

        // Thread a tree of K_ℓ between s and t and cover it.
        let (tree, parent) = separator_tree(g, part, comp, trunc)?;
        let pick = |x: Vertex| {
            g.neighbors(x)
                .iter()
                .copied()
                .find(|y| tree.contains(y))
                .ok_or_else(|| Error::internal("separator vertex has no neighbour in the tree", [x]))
        };
        let (ns, nt) = (pick(s)?, pick(t)?);
        let mut seq = tuple.cycle.order().to_vec();
        insert_between(&mut seq, s, t, &tree_path(&parent, ns, nt))?;
        let threaded = CycleEmbedding::in_graph(g, &seq)
            .map_err(|why| Error::internal(format!("threaded tree is not a cycle: {why}"), [s, t]))?;
        let goal: VertexSet = part.union(&tree).copied().collect();
        let (next, exts) = extend_to_cover(g, &threaded, &goal, &goal, Some(&tree))?;
        extensions.extend(exts);
        let mut sets: Vec<(usize, VertexSet)> = tuple
            .sets
            .iter()
            .map(|(j, b)| {
                let m = if b.contains(&s) && b.contains(&t) {
                    b.union(&region).copied().collect()
                } else {
                    b.clone()
                };
                (*j, m)
            })
            .collect();
        sets.push((l, region));
        tuple = GoodTuple { cycle: next, sets };
        check_tuple(&ctx, &tuple).into_result()?;
        checks += 1;
        processed[l] = true;
        order.push(l);
    }

    // Cover K_0.
    let k0 = &dec.finite_component;
    let mut sets = tuple.sets.clone();
    let (cycle, exts) = extend_to_cover_with(g, &tuple.cycle, k0, k0, Some(k0), |ext, next| {
        sets = advance(&ctx, &sets, ext, next)?.sets;
        checks += 1;
        Ok(())
    })?;
    extensions.extend(exts);

    let mut need: VertexSet = k0.union(&dec.separator).copied().collect();
    need.extend(within(g, &dec.separator, 1, 3));
    let missing: Vec<Vertex> = need.iter().copied().filter(|&x| !cycle.contains(x)).collect();
    if !missing.is_empty() {
        return Err(Error::internal("round cycle misses K_0 ∪ 𝒮 ∪ N_3(𝒮)", missing));
    }
    if let Some(&b) = cycle.order().iter().find(|v| trunc.boundary.contains(v)) {
        return Err(trunc.too_small(format!("round cycle reaches boundary vertex {b}")));
    }

    let near2 = |x: Vertex| d_nc[x].is_some_and(|d| (1..=2).contains(&d));
    let near3 = |x: Vertex| d_nc[x].is_some_and(|d| (1..=3).contains(&d));
    let (old, new) = (c.edges(), cycle.edges());
    let lost_edges = old
        .iter()
        .filter(|e| {
            let (a, b) = e.ends();
            !near2(a) && !near2(b) && !new.contains(e)
        })
        .copied()
        .collect();
    let far_new_edges = new
        .difference(&old)
        .filter(|e| {
            let (a, b) = e.ends();
            [a, b].iter().any(|&x| cv.contains(&x) && !near3(x))
        })
        .copied()
        .collect();

    let mut witness_sets = vec![VertexSet::new(); dec.k];
    for (j, m) in sets {
        witness_sets[j] = m;
    }
    Ok(CutLemmaOutcome {
        cycle,
        witness_sets,
        order,
        extensions,
        tuple_checks: checks,
        conclusions: CutLemmaConclusions {
            lost_edges,
            far_new_edges,
        },
    })
}
