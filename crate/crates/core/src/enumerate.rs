//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are grown from representatives on `n − 1`
//! vertices by adding one vertex with every possible neighbourhood, then
//! deduplicated by a canonical code. This reaches every graph of a class
//! closed under deleting vertices.

use std::collections::HashSet;

use crate::graph::{FiniteGraph, Vertex};

/// Largest order the bit-row representation supports.
pub const MAX_ORDER: usize = 16;

/// A graph on `0..n` stored as adjacency bit rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    rows: Vec<u16>,
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "at most {MAX_ORDER} vertices");
        SmallGraph { n, rows: vec![0; n] }
    }

    /// `None` unless the vertex set is `0..n` with `n <= MAX_ORDER`.
    pub fn from_finite(g: &FiniteGraph) -> Option<Self> {
        let n = g.order();
        if n > MAX_ORDER || g.vertices().iter().enumerate().any(|(i, &v)| i != v) {
            return None;
        }
        let mut out = SmallGraph::empty(n);
        for e in g.edges() {
            let (a, b) = e.ends();
            out.add_edge(a, b);
        }
        Some(out)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    pub fn add_edge(&mut self, a: Vertex, b: Vertex) {
        self.rows[a] |= 1 << b;
        self.rows[b] |= 1 << a;
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// The graph with one more vertex `n`, adjacent to the vertices in `mask`.
    pub fn with_vertex(&self, mask: u16) -> Self {
        let mut out = self.clone();
        out.n += 1;
        out.rows.push(mask);
        for v in 0..self.n {
            if mask >> v & 1 == 1 {
                out.rows[v] |= 1 << self.n;
            }
        }
        out
    }

    pub fn to_finite(&self) -> FiniteGraph {
        let edges = (0..self.n).flat_map(|a| {
            (a + 1..self.n)
                .filter(move |&b| self.has_edge(a, b))
                .map(move |b| (a, b))
        });
        FiniteGraph::new(0..self.n, edges.collect::<Vec<_>>()).expect("bit rows describe a simple graph")
    }

    /// Whether some vertex has three pairwise non-adjacent neighbours.
    pub fn has_claw(&self) -> bool {
        (0..self.n).any(|v| self.has_claw_at(v))
    }

    pub fn has_claw_at(&self, v: Vertex) -> bool {
        let nb: Vec<Vertex> = (0..self.n).filter(|&w| self.has_edge(v, w)).collect();
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    continue;
                }
                if nb[j + 1..]
                    .iter()
                    .any(|&c| !self.has_edge(a, c) && !self.has_edge(b, c))
                {
                    return true;
                }
            }
        }
        false
    }

    fn code_under(&self, order: &[Vertex]) -> u128 {
        let mut code = 0u128;
        for i in 0..self.n {
            for j in i + 1..self.n {
                code = code << 1 | u128::from(self.has_edge(order[i], order[j]));
            }
        }
        code
    }

    /// Colour classes after refinement, listed in colour order. The
    /// partition is invariant under relabelling.
    fn refined_cells(&self) -> Vec<Vec<Vertex>> {
        let mut color: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut classes = 0;
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = (0..self.n)
                .map(|v| {
                    let mut around: Vec<usize> =
                        (0..self.n).filter(|&w| self.has_edge(v, w)).map(|w| color[w]).collect();
                    around.sort_unstable();
                    (color[v], around)
                })
                .collect();
            let mut distinct = sigs.clone();
            distinct.sort();
            distinct.dedup();
            color = sigs
                .iter()
                .map(|s| distinct.binary_search(s).expect("present"))
                .collect();
            if distinct.len() == classes {
                break;
            }
            classes = distinct.len();
        }
        let mut cells = vec![Vec::new(); classes];
        for v in 0..self.n {
            cells[color[v]].push(v);
        }
        cells
    }

    /// Smallest adjacency code over all orderings that respect the refined
    /// colour classes; equal exactly for isomorphic graphs.
    pub fn canonical_code(&self) -> u128 {
        let cells = self.refined_cells();
        let slot_cell: Vec<usize> = cells
            .iter()
            .enumerate()
            .flat_map(|(c, vs)| std::iter::repeat_n(c, vs.len()))
            .collect();
        let mut best = u128::MAX;
        let mut order = Vec::with_capacity(self.n);
        self.search(&cells, &slot_cell, &mut order, &mut vec![false; self.n], &mut best);
        best
    }

    fn search(
        &self,
        cells: &[Vec<Vertex>],
        slot_cell: &[usize],
        order: &mut Vec<Vertex>,
        used: &mut [bool],
        best: &mut u128,
    ) {
        if order.len() == self.n {
            *best = (*best).min(self.code_under(order));
            return;
        }
        for &v in &cells[slot_cell[order.len()]] {
            if !used[v] {
                used[v] = true;
                order.push(v);
                self.search(cells, slot_cell, order, used, best);
                order.pop();
                used[v] = false;
            }
        }
    }
}

/// All graphs of a vertex-deletion-closed class with at most `max_n`
/// vertices, one per isomorphism class, by increasing order.
pub fn enumerate_hereditary(max_n: usize, keep: impl Fn(&SmallGraph) -> bool) -> Vec<SmallGraph> {
    assert!(max_n <= MAX_ORDER, "at most {MAX_ORDER} vertices");
    let mut out = Vec::new();
    let mut level = vec![SmallGraph::empty(1)];
    if max_n == 0 || !keep(&level[0]) {
        return out;
    }
    for n in 1..=max_n {
        out.extend(level.iter().cloned());
        if n == max_n {
            break;
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0..(1u32 << n) {
                let h = g.with_vertex(mask as u16);
                if keep(&h) && seen.insert(h.canonical_code()) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    out
}

/// Every graph with at most `max_n` vertices.
pub fn all_graphs(max_n: usize) -> Vec<SmallGraph> {
    enumerate_hereditary(max_n, |_| true)
}

/// Every claw-free graph with at most `max_n` vertices.
pub fn claw_free_graphs(max_n: usize) -> Vec<SmallGraph> {
    enumerate_hereditary(max_n, |g| !g.has_claw())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn canonical_codes_identify_isomorphs() {
        let p = SmallGraph::from_finite(&generators::path(4)).unwrap();
        let mut q = SmallGraph::empty(4);
        for (a, b) in [(2, 0), (0, 3), (3, 1)] {
            q.add_edge(a, b);
        }
        assert_eq!(p.canonical_code(), q.canonical_code());
        let star = SmallGraph::from_finite(&generators::star(3)).unwrap();
        assert_ne!(p.canonical_code(), star.canonical_code());
    }

    #[test]
    fn counts_match_known_totals() {
        // Numbers of graphs on n = 1..=6 vertices up to isomorphism.
        let all = all_graphs(6);
        let by_n: Vec<usize> = (1..=6).map(|n| all.iter().filter(|g| g.order() == n).count()).collect();
        assert_eq!(by_n, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6)
            .map(|n| {
                all.iter()
                    .filter(|g| g.order() == n && g.to_finite().is_connected())
                    .count()
            })
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn claw_free_class_is_closed() {
        let cf = claw_free_graphs(5);
        let all = all_graphs(5);
        let expected = all.iter().filter(|g| !g.has_claw()).count();
        assert_eq!(cf.len(), expected);
    }
}
