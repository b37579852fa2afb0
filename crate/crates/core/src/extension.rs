//! Path extensions of cycles and the finite Hamilton-cycle construction.
//!
//! A path extension adds a target vertex `v` next to a base `u` on the cycle
//! by splicing in a path that runs inside `N(u)`. Cycle vertices met by that
//! path are lifted out of their old position by the shortcut `z⁻z⁺`, so the
//! cycle never loses a vertex.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CycleEmbedding, Edge, FiniteGraph, Vertex, VertexSet};
use crate::predicates::{self, PredicateReport, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionCase {
    /// The path ends in `x ∈ {u⁺, u⁻}` and replaces the edge `ux`.
    One,
    /// The path ends in a cycle vertex `w` and replaces the edge `yw`; the
    /// base leaves its old position via `u⁻u⁺`.
    Two,
}

/// Case-two reattachment: the path ends at `anchor` (`w`) and is spliced into
/// the cycle edge `via`–`anchor`, where `via` (`y`) is `w⁺` or `w⁻`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reattach {
    pub anchor: Vertex,
    pub via: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathExtension {
    pub target: Vertex,
    pub base: Vertex,
    /// From the target to the final endvertex.
    pub path: Vec<Vertex>,
    pub case: ExtensionCase,
    /// Vertices whose cycle neighbourhood `z⁻zz⁺` is replaced by `z⁻z⁺`.
    pub bridged: VertexSet,
    pub reattach: Option<Reattach>,
}

impl PathExtension {
    /// The endvertex of the path other than the target.
    pub fn end(&self) -> Vertex {
        *self.path.last().expect("an extension path is never empty")
    }

    pub fn path_vertices(&self) -> VertexSet {
        self.path.iter().copied().collect()
    }
}

/// A broken invariant of a proposed extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionViolation(pub String);

impl fmt::Display for ExtensionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(ExtensionViolation(format!($($msg)+)));
        }
    };
}

/// `z` is singular for base `u` when neither `z⁺` nor `z⁻` is adjacent to `u`.
pub fn is_singular(g: &FiniteGraph, c: &CycleEmbedding, u: Vertex, z: Vertex) -> bool {
    !g.has_edge(u, c.succ(z)) && !g.has_edge(u, c.pred(z))
}

fn interior_on_cycle(c: &CycleEmbedding, path: &[Vertex]) -> Vec<Vertex> {
    if path.len() <= 2 {
        return Vec::new();
    }
    path[1..path.len() - 1]
        .iter()
        .copied()
        .filter(|&z| c.contains(z))
        .collect()
}

fn claw_error(center: Vertex, mut leaves: [Vertex; 3]) -> Error {
    leaves.sort_unstable();
    Error::Predicate {
        predicate: "claw_free",
        report: PredicateReport::fail(Witness::Claw { center, leaves }),
    }
}

/// Finds an extension with the given target and base, following the
/// constructive proof of the extension lemma.
pub fn find_path_extension(g: &FiniteGraph, c: &CycleEmbedding, target: Vertex, base: Vertex) -> Result<PathExtension> {
    g.require_vertex(target)?;
    g.require_vertex(base)?;
    if c.contains(target) {
        return Err(Error::domain(format!("target {target} is already on the cycle")));
    }
    if !c.contains(base) {
        return Err(Error::domain(format!("base {base} is not on the cycle")));
    }
    if !g.has_edge(target, base) {
        return Err(Error::domain(format!("target {target} is not adjacent to base {base}")));
    }
    let u = base;
    let (up, um) = (c.succ(u), c.pred(u));
    let q = g
        .shortest_path_within(target, up, |x| g.has_edge(u, x))
        .ok_or_else(|| {
            let nb: VertexSet = g.neighbors(u).iter().copied().collect();
            let comps = g.components_within(&nb);
            let find = |x: Vertex| comps.iter().find(|k| k.contains(&x)).cloned().unwrap_or_default();
            Error::Predicate {
                predicate: "locally_connected",
                report: PredicateReport::fail(Witness::DisconnectedNeighborhood {
                    vertex: u,
                    first: find(target),
                    second: find(up),
                }),
            }
        })?;
    let cut = q.iter().position(|&x| x == up || x == um).expect("the path ends in u⁺");
    let px = q[..=cut].to_vec();
    let interior = interior_on_cycle(c, &px);
    let first_regular = interior.iter().position(|&z| !is_singular(g, c, u, z));

    let Some(wi) = first_regular else {
        for &z in &interior {
            let (zp, zm) = (c.succ(z), c.pred(z));
            if !g.has_edge(zp, zm) {
                return Err(claw_error(z, [zp, zm, u]));
            }
        }
        return Ok(PathExtension {
            target,
            base,
            path: px,
            case: ExtensionCase::One,
            bridged: interior.into_iter().collect(),
            reattach: None,
        });
    };

    if !g.has_edge(up, um) {
        let x = if g.has_edge(target, um) {
            um
        } else if g.has_edge(target, up) {
            up
        } else {
            return Err(claw_error(u, [target, um, up]));
        };
        return Ok(PathExtension {
            target,
            base,
            path: vec![target, x],
            case: ExtensionCase::One,
            bridged: VertexSet::new(),
            reattach: None,
        });
    }

    let w = interior[wi];
    let cut_w = px.iter().position(|&x| x == w).expect("w lies on the path");
    let pw = px[..=cut_w].to_vec();
    let y = if g.has_edge(u, c.succ(w)) { c.succ(w) } else { c.pred(w) };
    let mut bridged: VertexSet = VertexSet::from([u]);
    for &q in &interior[..wi] {
        let (qp, qm) = (c.succ(q), c.pred(q));
        if !g.has_edge(qp, qm) {
            return Err(claw_error(q, [qp, qm, u]));
        }
        bridged.insert(q);
    }
    Ok(PathExtension {
        target,
        base,
        path: pw,
        case: ExtensionCase::Two,
        bridged,
        reattach: Some(Reattach { anchor: w, via: y }),
    })
}

/// Checks the full invariant list of an extension against `(g, c)`.
pub fn validate_extension(
    g: &FiniteGraph,
    c: &CycleEmbedding,
    ext: &PathExtension,
) -> std::result::Result<(), ExtensionViolation> {
    let (v, u) = (ext.target, ext.base);
    ensure!(g.contains(v) && g.contains(u), "target or base is not a vertex");
    ensure!(!c.contains(v), "target {v} is on the cycle");
    ensure!(c.contains(u), "base {u} is not on the cycle");
    ensure!(g.has_edge(u, v), "target {v} is not adjacent to base {u}");
    let p = &ext.path;
    ensure!(p.first() == Some(&v), "the path does not start at the target");
    let pv = ext.path_vertices();
    ensure!(pv.len() == p.len(), "the path repeats a vertex");
    for pair in p.windows(2) {
        ensure!(
            g.has_edge(pair[0], pair[1]),
            "path step {}-{} is not an edge",
            pair[0],
            pair[1]
        );
    }
    if let Some(&x) = p.iter().find(|&&x| !g.has_edge(u, x)) {
        return Err(ExtensionViolation(format!(
            "path vertex {x} is not a neighbour of the base"
        )));
    }
    let (up, um) = (c.succ(u), c.pred(u));
    let end = ext.end();
    let interior = interior_on_cycle(c, p);
    let mut expected: VertexSet = interior.iter().copied().collect();
    match ext.case {
        ExtensionCase::One => {
            ensure!(ext.reattach.is_none(), "case one carries no reattachment");
            ensure!(end == up || end == um, "case one must end in u⁺ or u⁻");
            let hits = [up, um].iter().filter(|x| pv.contains(x)).count();
            ensure!(hits == 1, "case one path meets both u⁺ and u⁻");
        }
        ExtensionCase::Two => {
            let Some(Reattach { anchor: w, via: y }) = ext.reattach else {
                return Err(ExtensionViolation("case two needs a reattachment".into()));
            };
            ensure!(g.has_edge(up, um), "case two needs u⁺u⁻ to be an edge");
            ensure!(end == w, "case two must end at the anchor");
            ensure!(
                c.contains(w) && w != up && w != um,
                "anchor must be a cycle vertex other than u⁺, u⁻"
            );
            ensure!(
                y == c.succ(w) || y == c.pred(w),
                "via must be a cycle neighbour of the anchor"
            );
            ensure!(g.has_edge(u, y), "via {y} is not adjacent to the base");
            for x in [up, um, c.succ(w), c.pred(w)] {
                ensure!(!pv.contains(&x), "vertex {x} must not lie on a case two path");
            }
            expected.insert(u);
        }
    }
    for &z in &interior {
        let (zp, zm) = (c.succ(z), c.pred(z));
        ensure!(
            !pv.contains(&zp) && !pv.contains(&zm),
            "path meets a cycle neighbour of {z}"
        );
        ensure!(g.has_edge(zp, zm), "shortcut {zm}-{zp} around {z} is not an edge");
    }
    ensure!(
        ext.bridged == expected,
        "bridged set {:?} differs from {:?}",
        ext.bridged,
        expected
    );
    Ok(())
}

/// Inserts `inner` between the cyclically adjacent `a` and `b`, reading it
/// from `a`'s side.
pub(crate) fn insert_between(order: &mut Vec<Vertex>, a: Vertex, b: Vertex, inner: &[Vertex]) -> Result<()> {
    let n = order.len();
    let i = order
        .iter()
        .position(|&x| x == a)
        .ok_or_else(|| Error::internal("splice point left the cycle", [a]))?;
    if order[(i + 1) % n] == b {
        order.splice(i + 1..i + 1, inner.iter().copied());
    } else if order[(i + n - 1) % n] == b {
        order.splice(i..i, inner.iter().rev().copied());
    } else {
        return Err(Error::internal("splice ends are not adjacent on the cycle", [a, b]));
    }
    Ok(())
}

/// Performs the splice described by `ext`.
pub fn apply_path_extension(g: &FiniteGraph, c: &CycleEmbedding, ext: &PathExtension) -> Result<CycleEmbedding> {
    let mut order: Vec<Vertex> = c.order().iter().copied().filter(|z| !ext.bridged.contains(z)).collect();
    let p = &ext.path;
    let inner = &p[..p.len() - 1];
    match (ext.case, ext.reattach) {
        (ExtensionCase::One, _) => insert_between(&mut order, ext.base, ext.end(), inner)?,
        (ExtensionCase::Two, Some(Reattach { anchor, via })) => {
            let mut seq = vec![ext.base];
            seq.extend_from_slice(inner);
            insert_between(&mut order, via, anchor, &seq)?;
        }
        (ExtensionCase::Two, None) => return Err(Error::internal("case two without reattachment", [ext.base])),
    }
    CycleEmbedding::in_graph(g, &order)
        .map_err(|why| Error::internal(format!("splice is not a cycle: {why}"), [ext.target, ext.base]))
}

/// Edges of `after` missing from `before` with an end farther than 2 from `base`.
pub fn new_edges_beyond_reach(
    g: &FiniteGraph,
    before: &CycleEmbedding,
    after: &CycleEmbedding,
    base: Vertex,
) -> Vec<Edge> {
    let dist = g.distances_from(&VertexSet::from([base]));
    let near = |x: Vertex| matches!(dist[x], Some(d) if d <= 2);
    after
        .edges()
        .difference(&before.edges())
        .filter(|e| {
            let (a, b) = e.ends();
            !near(a) || !near(b)
        })
        .copied()
        .collect()
}

/// The extension with the same base, case and reattachment but another path,
/// whose first vertex becomes the target. Used to re-target a found extension
/// at a later vertex of its own path or to shortcut that path.
pub fn reroute(g: &FiniteGraph, c: &CycleEmbedding, ext: &PathExtension, path: Vec<Vertex>) -> Result<PathExtension> {
    let mut bridged: VertexSet = interior_on_cycle(c, &path).into_iter().collect();
    if ext.case == ExtensionCase::Two {
        bridged.insert(ext.base);
    }
    let out = PathExtension {
        target: path[0],
        base: ext.base,
        path,
        case: ext.case,
        bridged,
        reattach: ext.reattach,
    };
    validate_extension(g, c, &out)
        .map_err(|why| Error::internal(format!("rerouted extension invalid: {why}"), out.path.clone()))?;
    Ok(out)
}

/// Extends `c` until it contains `goal`, each step with the smallest-id
/// admissible target and its smallest-id admissible base.
pub fn extend_to_cover(
    g: &FiniteGraph,
    c: &CycleEmbedding,
    goal: &VertexSet,
    target_pool: &VertexSet,
    base_pool: Option<&VertexSet>,
) -> Result<(CycleEmbedding, Vec<PathExtension>)> {
    extend_to_cover_with(g, c, goal, target_pool, base_pool, |_, _| Ok(()))
}

/// As [`extend_to_cover`], calling `on_step` with every extension and the
/// cycle it produced. `base_pool = None` admits every cycle vertex.
pub fn extend_to_cover_with(
    g: &FiniteGraph,
    c: &CycleEmbedding,
    goal: &VertexSet,
    target_pool: &VertexSet,
    base_pool: Option<&VertexSet>,
    mut on_step: impl FnMut(&PathExtension, &CycleEmbedding) -> Result<()>,
) -> Result<(CycleEmbedding, Vec<PathExtension>)> {
    g.require_subset(goal)?;
    let mut cur = c.clone();
    let mut log = Vec::new();
    let base_ok = |x: Vertex| base_pool.is_none_or(|p| p.contains(&x));
    loop {
        if goal.iter().all(|&v| cur.contains(v)) {
            return Ok((cur, log));
        }
        let step = target_pool.iter().copied().filter(|&v| !cur.contains(v)).find_map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .find(|&b| cur.contains(b) && base_ok(b))
                .map(|b| (v, b))
        });
        let Some((v, b)) = step else {
            return Err(Error::Progress {
                uncovered: goal.iter().copied().filter(|&v| !cur.contains(v)).collect(),
            });
        };
        let ext = find_path_extension(g, &cur, v, b)?;
        let next = apply_path_extension(g, &cur, &ext)?;
        let far = new_edges_beyond_reach(g, &cur, &next, b);
        if let Some(e) = far.first() {
            let (x, y) = e.ends();
            return Err(Error::internal(
                "new cycle edge lies beyond distance 2 of the base",
                [b, x, y],
            ));
        }
        on_step(&ext, &next)?;
        log.push(ext);
        cur = next;
    }
}

/// A shortest cycle through `root`, found from a breadth-first tree: the
/// best non-tree edge joining two different branches closes it.
pub fn shortest_cycle_through(g: &FiniteGraph, root: Vertex) -> Option<CycleEmbedding> {
    if !g.contains(root) {
        return None;
    }
    let n = g.id_bound();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut branch = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([root]);
    dist[root] = 0;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                branch[w] = if v == root { w } else { branch[v] };
                queue.push_back(w);
            }
        }
    }
    let mut best: Option<(usize, Vertex, Vertex)> = None;
    for e in g.edges() {
        let (a, b) = e.ends();
        if a == root || b == root || dist[a] == usize::MAX || dist[b] == usize::MAX || branch[a] == branch[b] {
            continue;
        }
        let len = dist[a] + dist[b] + 1;
        if best.is_none_or(|(l, _, _)| len < l) {
            best = Some((len, a, b));
        }
    }
    let (_, a, b) = best?;
    let climb = |mut x: Vertex| {
        let mut out = Vec::new();
        while x != root {
            out.push(x);
            x = parent[x];
        }
        out
    };
    let mut seq = vec![root];
    seq.extend(climb(a).into_iter().rev());
    seq.extend(climb(b));
    CycleEmbedding::in_graph(g, &seq).ok()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonCertificate {
    pub initial: CycleEmbedding,
    pub extension_log: Vec<PathExtension>,
    pub cycle: CycleEmbedding,
}

/// Builds a Hamilton cycle of a connected, claw-free, locally connected
/// graph on at least three vertices.
pub fn finite_hamilton(g: &FiniteGraph) -> Result<HamiltonCertificate> {
    predicates::check_hypotheses(g)?;
    let root = g.vertices()[0];
    let initial = shortest_cycle_through(g, root)
        .ok_or_else(|| Error::internal("no cycle through the minimum vertex", [root]))?;
    let all = g.vertex_set();
    let (cycle, extension_log) = extend_to_cover(g, &initial, &all, &all, None)?;
    Ok(HamiltonCertificate {
        initial,
        extension_log,
        cycle,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepVerdict {
    pub step: usize,
    pub target: Vertex,
    pub base: Vertex,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateVerdict {
    pub ok: bool,
    pub initial_valid: bool,
    pub steps: Vec<StepVerdict>,
    pub replay_matches: bool,
    pub spanning: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

/// Replays a certificate against `g`, stopping at the first bad step.
pub fn verify_certificate(g: &FiniteGraph, cert: &HamiltonCertificate) -> CertificateVerdict {
    let mut verdict = CertificateVerdict {
        ok: false,
        initial_valid: false,
        steps: Vec::new(),
        replay_matches: false,
        spanning: false,
        first_failure: None,
    };
    if let Err(why) = cert.initial.validate(g) {
        verdict.first_failure = Some(format!("initial cycle: {why}"));
        return verdict;
    }
    verdict.initial_valid = true;
    let mut cur = cert.initial.clone();
    for (i, ext) in cert.extension_log.iter().enumerate() {
        let outcome = validate_extension(g, &cur, ext)
            .map_err(|v| v.to_string())
            .and_then(|()| apply_path_extension(g, &cur, ext).map_err(|e| e.to_string()));
        let mut step = StepVerdict {
            step: i,
            target: ext.target,
            base: ext.base,
            valid: outcome.is_ok(),
            error: None,
        };
        match outcome {
            Ok(next) => {
                verdict.steps.push(step);
                cur = next;
            }
            Err(why) => {
                verdict.first_failure = Some(format!("step {i}: {why}"));
                step.error = Some(why);
                verdict.steps.push(step);
                return verdict;
            }
        }
    }
    verdict.replay_matches = cur == cert.cycle;
    if !verdict.replay_matches {
        verdict.first_failure = Some(format!(
            "step mismatch: replay ends in {:?}, certificate claims {:?}",
            cur.order(),
            cert.cycle.order()
        ));
    }
    verdict.spanning = cert.cycle.len() == g.order() && cert.cycle.validate(g).is_ok();
    if verdict.replay_matches && !verdict.spanning {
        verdict.first_failure = Some("final cycle does not span the graph".into());
    }
    verdict.ok = verdict.replay_matches && verdict.spanning;
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn cyc(g: &FiniteGraph, seq: &[Vertex]) -> CycleEmbedding {
        CycleEmbedding::in_graph(g, seq).unwrap()
    }

    #[test]
    fn k4_extension() {
        let g = generators::complete(4);
        let c = cyc(&g, &[0, 1, 2]);
        let ext = find_path_extension(&g, &c, 3, 0).unwrap();
        assert_eq!(ext.case, ExtensionCase::One);
        assert_eq!(ext.path, vec![3, 1]);
        assert!(ext.bridged.is_empty());
        validate_extension(&g, &c, &ext).unwrap();
        let next = apply_path_extension(&g, &c, &ext).unwrap();
        assert_eq!(next.order(), &[0, 2, 1, 3]);
        assert_eq!(next, CycleEmbedding::from_sequence(&[0, 3, 1, 2]).unwrap());
    }

    #[test]
    fn wheel_extension_stays_on_the_rim() {
        let g = generators::wheel(5);
        let c = cyc(&g, &[0, 1, 2]);
        let ext = find_path_extension(&g, &c, 4, 0).unwrap();
        assert_eq!(ext.case, ExtensionCase::One);
        assert!(ext.path.iter().all(|&x| (1..=5).contains(&x)));
        let next = apply_path_extension(&g, &c, &ext).unwrap();
        assert!(next.contains(4));
        assert!(c.order().iter().all(|&x| next.contains(x)));
    }

    #[test]
    fn target_next_to_successor() {
        let g = generators::complete(5);
        let c = cyc(&g, &[0, 1, 2, 3]);
        let ext = find_path_extension(&g, &c, 4, 0).unwrap();
        assert_eq!(ext.path, vec![4, c.succ(0)]);
        assert_eq!(apply_path_extension(&g, &c, &ext).unwrap().len(), 5);
    }

    #[test]
    fn extension_errors() {
        let g = generators::complete(4);
        let c = cyc(&g, &[0, 1, 2]);
        assert!(matches!(find_path_extension(&g, &c, 1, 0), Err(Error::Domain(_))));
        assert!(matches!(find_path_extension(&g, &c, 3, 9), Err(Error::Domain(_))));
        // C_6 plus a chord-free pendant neighbourhood: N(0) is disconnected
        let h = FiniteGraph::from_edges([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        let c = cyc(&h, &[0, 1, 2]);
        match find_path_extension(&h, &c, 5, 0) {
            Err(Error::Predicate { predicate, report }) => {
                assert_eq!(predicate, "locally_connected");
                assert!(report.witness.unwrap().verify(&h));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cover_examples() {
        let g = generators::complete(4);
        let c = cyc(&g, &[0, 1, 2]);
        let (same, log) = extend_to_cover(&g, &c, &VertexSet::from([1]), &g.vertex_set(), None).unwrap();
        assert_eq!(same, c);
        assert!(log.is_empty());
        let (full, log) = extend_to_cover(&g, &c, &VertexSet::from([3]), &g.vertex_set(), None).unwrap();
        assert_eq!(full.len(), 4);
        assert_eq!(log.len(), 1);

        let oct = generators::octahedron();
        let tri = shortest_cycle_through(&oct, 0).unwrap();
        assert_eq!(tri.len(), 3);
        let (ham, log) = extend_to_cover(&oct, &tri, &oct.vertex_set(), &oct.vertex_set(), None).unwrap();
        assert_eq!(ham.len(), 6);
        assert_eq!(log.len(), 3);
    }

    #[test]
    fn finite_examples() {
        let k3 = finite_hamilton(&generators::complete(3)).unwrap();
        assert_eq!(k3.cycle.order(), &[0, 1, 2]);
        assert!(k3.extension_log.is_empty());
        let w5 = generators::wheel(5);
        let cert = finite_hamilton(&w5).unwrap();
        assert_eq!(cert.cycle.len(), 6);
        assert!(verify_certificate(&w5, &cert).ok);
        assert!(matches!(
            finite_hamilton(&generators::cycle(6)),
            Err(Error::Predicate {
                predicate: "locally_connected",
                ..
            })
        ));
    }

    #[test]
    fn certificate_tampering() {
        let g = generators::octahedron();
        let cert = finite_hamilton(&g).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: HamiltonCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        let mut bad = cert.clone();
        let mut order = bad.cycle.order().to_vec();
        order.swap(1, 2);
        bad.cycle = CycleEmbedding::from_sequence(&order).unwrap();
        let v = verify_certificate(&g, &bad);
        assert!(!v.ok && !v.replay_matches);
        assert!(v.first_failure.unwrap().starts_with("step mismatch"));
        let other = generators::wheel(5);
        let v = verify_certificate(&other, &cert);
        assert!(!v.ok);
        assert!(v.first_failure.is_some());
    }

    #[test]
    fn shortest_cycles() {
        assert_eq!(shortest_cycle_through(&generators::cycle(6), 0).unwrap().len(), 6);
        assert_eq!(shortest_cycle_through(&generators::petersen(), 0).unwrap().len(), 5);
        assert_eq!(shortest_cycle_through(&generators::cube(), 3).unwrap().len(), 4);
        assert!(shortest_cycle_through(&generators::path(5), 0).is_none());
        assert!(shortest_cycle_through(&generators::bowtie(), 1).unwrap().contains(0));
    }
}
