//! Independent oracles shared by the integration suites. Nothing here calls
//! into the construction code it is used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use clawham::enumerate::SmallGraph;
use clawham::generators;
use clawham::predicates;
use clawham::{CycleEmbedding, FiniteGraph, Vertex, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

/// A Hamilton cycle by Held-Karp dynamic programming over vertex subsets,
/// or `None` when there is none. Intended for at most 20 vertices.
pub fn hamilton_oracle(g: &FiniteGraph) -> Option<Vec<Vertex>> {
    let vs = g.vertices();
    let n = vs.len();
    assert!(n <= 20, "oracle is exponential in the order");
    if n < 3 {
        return None;
    }
    let adj = |i: usize, j: usize| g.has_edge(vs[i], vs[j]);
    let full = (1usize << n) - 1;
    // reach[mask][j]: a path from vertex 0 through exactly `mask` ending at j.
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1..=full {
        if mask & 1 == 0 || reach[mask] == 0 {
            continue;
        }
        for j in 0..n {
            if reach[mask] >> j & 1 == 0 {
                continue;
            }
            for k in 1..n {
                if mask >> k & 1 == 0 && adj(j, k) {
                    reach[mask | 1 << k] |= 1 << k;
                }
            }
        }
    }
    let mut end = (1..n).find(|&j| reach[full] >> j & 1 == 1 && adj(j, 0))?;
    let mut mask = full;
    let mut seq = vec![vs[end]];
    while mask != 1 {
        let prev = mask & !(1 << end);
        let next = (0..n)
            .find(|&k| reach[prev] >> k & 1 == 1 && adj(k, end))
            .expect("a reachable predecessor exists");
        mask = prev;
        end = next;
        seq.push(vs[end]);
    }
    seq.reverse();
    Some(seq)
}

/// Checks that `seq` is a spanning cycle of `g` using only adjacency queries.
pub fn is_hamilton_cycle(g: &FiniteGraph, seq: &[Vertex]) -> bool {
    let set: BTreeSet<Vertex> = seq.iter().copied().collect();
    seq.len() >= 3
        && set.len() == seq.len()
        && set.iter().copied().eq(g.vertices().iter().copied())
        && (0..seq.len()).all(|i| g.has_edge(seq[i], seq[(i + 1) % seq.len()]))
}

/// Components of `g − removed` by plain depth-first search.
pub fn components_without(g: &FiniteGraph, removed: &VertexSet) -> Vec<VertexSet> {
    let mut seen: VertexSet = removed.clone();
    let mut out = Vec::new();
    for &s in g.vertices() {
        if seen.contains(&s) {
            continue;
        }
        seen.insert(s);
        let mut comp = VertexSet::from([s]);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if seen.insert(w) {
                    comp.insert(w);
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

fn subset(vs: &[Vertex], mask: usize) -> VertexSet {
    vs.iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect()
}

/// Separating sets minimal under inclusion, by checking every subset and
/// every proper subset of it.
pub fn minimal_separators_brute(g: &FiniteGraph) -> Vec<VertexSet> {
    let vs = g.vertices();
    let n = vs.len();
    let separates: Vec<bool> = (0..1usize << n)
        .map(|mask| mask != 0 && components_without(g, &subset(vs, mask)).len() >= 2)
        .collect();
    (1..1usize << n)
        .filter(|&mask| separates[mask])
        .filter(|&mask| {
            // Every nonempty proper submask fails to separate.
            let mut sub = (mask - 1) & mask;
            while sub != 0 {
                if separates[sub] {
                    return false;
                }
                sub = (sub - 1) & mask;
            }
            true
        })
        .map(|mask| subset(vs, mask))
        .collect()
}

/// Every connected, locally connected, claw-free graph in `all` with at
/// least three vertices.
pub fn hypothesis_class(all: &[SmallGraph]) -> Vec<FiniteGraph> {
    all.iter()
        .filter(|s| s.order() >= 3)
        .map(SmallGraph::to_finite)
        .filter(|g| g.is_connected() && predicates::is_claw_free(g).holds && predicates::is_locally_connected(g).holds)
        .collect()
}

fn in_class(g: &FiniteGraph) -> bool {
    g.order() >= 3 && g.is_connected() && predicates::is_claw_free(g).holds && predicates::is_locally_connected(g).holds
}

fn random_gnp(rng: &mut impl Rng, n: usize, p: f64) -> FiniteGraph {
    let edges: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    FiniteGraph::new(0..n, edges).expect("ids are below n")
}

fn random_tree(rng: &mut impl Rng, n: usize) -> FiniteGraph {
    let edges: Vec<(Vertex, Vertex)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    FiniteGraph::new(0..n, edges).expect("ids are below n")
}

/// A random member of the hypothesis class with at most about 24 vertices,
/// drawn from dense random graphs, squares of random trees and line graphs
/// of random graphs, by rejection.
pub fn random_class_graph(rng: &mut impl Rng) -> FiniteGraph {
    loop {
        let g = match rng.gen_range(0..3) {
            0 => {
                let n = rng.gen_range(5..=14);
                let p = rng.gen_range(0.45..0.85);
                random_gnp(rng, n, p)
            }
            1 => {
                let n = rng.gen_range(4..=16);
                generators::graph_power(&random_tree(rng, n), 2).expect("exponent is positive")
            }
            _ => {
                let n = rng.gen_range(4..=8);
                let p = rng.gen_range(0.4..0.8);
                let base = random_gnp(rng, n, p);
                match generators::line_graph(&base) {
                    Ok(l) if l.graph.order() <= 24 => l.graph,
                    _ => continue,
                }
            }
        };
        if in_class(&g) {
            return g;
        }
    }
}

/// A random cycle of `g` found by randomized depth-first search from a
/// random vertex, or `None` if the search budget runs out.
pub fn random_cycle(rng: &mut impl Rng, g: &FiniteGraph) -> Option<CycleEmbedding> {
    let start = *g.vertices().choose(rng)?;
    let want = rng.gen_range(3..=g.order());
    let mut budget = 2000usize;
    let mut path = vec![start];
    let mut best: Option<Vec<Vertex>> = None;
    fn go(
        g: &FiniteGraph,
        rng: &mut impl Rng,
        path: &mut Vec<Vertex>,
        want: usize,
        budget: &mut usize,
        best: &mut Option<Vec<Vertex>>,
    ) -> bool {
        if *budget == 0 {
            return true;
        }
        *budget -= 1;
        let last = *path.last().expect("path is nonempty");
        if path.len() >= 3 && g.has_edge(last, path[0]) {
            if best
                .as_ref()
                .is_none_or(|b| b.len().abs_diff(want) > path.len().abs_diff(want))
            {
                *best = Some(path.clone());
            }
            if path.len() == want {
                return true;
            }
        }
        if path.len() >= want {
            return false;
        }
        let mut next: Vec<Vertex> = g
            .neighbors(last)
            .iter()
            .copied()
            .filter(|w| !path.contains(w))
            .collect();
        next.shuffle(rng);
        for w in next {
            path.push(w);
            let done = go(g, rng, path, want, budget, best);
            path.pop();
            if done {
                return true;
            }
        }
        false
    }
    go(g, rng, &mut path, want, &mut budget, &mut best);
    best.map(|seq| CycleEmbedding::in_graph(g, &seq).expect("search returns cycles"))
}

/// Vertices at distance at most `k` from `v`, by breadth-first search.
pub fn ball_around(g: &FiniteGraph, v: Vertex, k: usize) -> VertexSet {
    let mut seen = VertexSet::from([v]);
    let mut frontier = vec![v];
    for _ in 0..k {
        let mut next = Vec::new();
        for x in frontier {
            for &w in g.neighbors(x) {
                if seen.insert(w) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    seen
}
