//! Labeled Ringel ladders and closed-end ladders.
//!
//! Every edge has two edge-ends (darts): dart `2e` sits at `ends[0]` and dart
//! `2e + 1` at `ends[1]`. Each vertex stores the clockwise cyclic order of its
//! darts in a fixed planar drawing; that order is the "black" rotation and
//! its reverse the "white" one.
//!
//! Ringel ladder labeling, for parameter `n` (the graph is `R_{n-1}`):
//!
//! ```text
//!         e (arc over the top)
//!    v1 -c1- v2 -c2- v3 ... vn -cn- v(n+1)
//!     \      |b1     |b2     |b(n-1) /
//!      a1   u2 -a2- u3 ... un ---an-
//! ```
//!
//! The spanning tree is every `b_i` and `c_i`; the cotree edges are
//! `e, a_1, ..., a_n` in that order.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::GraphError;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type Dart = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderKind {
    Ringel,
    ClosedEnd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    pub ends: [VertexId; 2],
}

/// Edge ids of a Ringel ladder by label; `a[i]` is `a_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingelEdges {
    pub e: EdgeId,
    pub a: Vec<EdgeId>,
    pub b: Vec<EdgeId>,
    pub c: Vec<EdgeId>,
}

#[derive(Clone, Debug)]
pub struct LadderGraph {
    kind: LadderKind,
    n: usize,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    in_tree: Vec<bool>,
    cotree: Vec<EdgeId>,
    rotation: Vec<Vec<Dart>>,
    ringel: Option<RingelEdges>,
}

struct Builder {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl Builder {
    fn vertex(&mut self, label: String) -> VertexId {
        self.vertices.push(label);
        self.vertices.len() - 1
    }

    fn edge(&mut self, label: String, a: VertexId, b: VertexId) -> EdgeId {
        self.edges.push(Edge {
            label,
            ends: [a, b],
        });
        self.edges.len() - 1
    }

    fn dart_at(&self, e: EdgeId, v: VertexId) -> Dart {
        if self.edges[e].ends[0] == v {
            2 * e
        } else {
            debug_assert_eq!(self.edges[e].ends[1], v);
            2 * e + 1
        }
    }

    /// Turns per-vertex clockwise edge lists into dart lists.
    fn rotations(&self, order: Vec<Vec<EdgeId>>) -> Vec<Vec<Dart>> {
        order
            .into_iter()
            .enumerate()
            .map(|(v, es)| es.into_iter().map(|e| self.dart_at(e, v)).collect())
            .collect()
    }
}

impl LadderGraph {
    /// The Ringel ladder `R_{n-1}` with parameter `n >= 2`.
    pub fn ringel(n: usize) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::RingelTooSmall(n));
        }
        let mut g = Builder {
            vertices: Vec::with_capacity(2 * n),
            edges: Vec::with_capacity(3 * n),
        };
        // v[i] is v_{i+1}; u[i] is u_{i+1}, so u[0] is unused.
        let v: Vec<VertexId> = (1..=n + 1).map(|i| g.vertex(format!("v{i}"))).collect();
        let mut u = vec![usize::MAX];
        u.extend((2..=n).map(|i| g.vertex(format!("u{i}"))));

        let e = g.edge("e".into(), v[0], v[n]);
        let a: Vec<EdgeId> = (1..=n)
            .map(|i| {
                let left = if i == 1 { v[0] } else { u[i - 1] };
                let right = if i == n { v[n] } else { u[i] };
                g.edge(format!("a{i}"), left, right)
            })
            .collect();
        let b: Vec<EdgeId> = (1..n)
            .map(|i| g.edge(format!("b{i}"), v[i], u[i]))
            .collect();
        let c: Vec<EdgeId> = (1..=n)
            .map(|i| g.edge(format!("c{i}"), v[i - 1], v[i]))
            .collect();

        let mut order = vec![Vec::new(); g.vertices.len()];
        order[v[0]] = vec![e, c[0], a[0]];
        order[v[n]] = vec![e, a[n - 1], c[n - 1]];
        for i in 1..n {
            // v_{i+1} and u_{i+1}, both touching b_i
            order[v[i]] = vec![c[i - 1], c[i], b[i - 1]];
            order[u[i]] = vec![a[i - 1], b[i - 1], a[i]];
        }
        let rotation = g.rotations(order);

        let mut in_tree = vec![false; g.edges.len()];
        for &t in b.iter().chain(c.iter()) {
            in_tree[t] = true;
        }
        let mut cotree = vec![e];
        cotree.extend(a.iter().copied());

        let graph = LadderGraph {
            kind: LadderKind::Ringel,
            n,
            vertices: g.vertices,
            edges: g.edges,
            in_tree,
            cotree,
            rotation,
            ringel: Some(RingelEdges { e, a, b, c }),
        };
        debug_assert!(graph.check_invariants().is_ok());
        Ok(graph)
    }

    /// The closed-end ladder `L_k`: a `k`-rung ladder with both end rungs
    /// doubled (a single rung becomes three parallel edges when `k = 1`).
    ///
    /// Tree: the top rail plus one copy of every rung. Cotree order: the
    /// extra copy at the left end, the bottom rail left to right, then the
    /// extra copy at the right end.
    pub fn closed_end(k: usize) -> Result<Self, GraphError> {
        if k < 1 {
            return Err(GraphError::ClosedEndTooSmall(k));
        }
        let mut g = Builder {
            vertices: Vec::with_capacity(2 * k),
            edges: Vec::with_capacity(3 * k),
        };
        let t: Vec<VertexId> = (1..=k).map(|i| g.vertex(format!("t{i}"))).collect();
        let s: Vec<VertexId> = (1..=k).map(|i| g.vertex(format!("s{i}"))).collect();
        let r: Vec<EdgeId> = (0..k)
            .map(|i| g.edge(format!("r{}", i + 1), t[i], s[i]))
            .collect();
        let top: Vec<EdgeId> = (1..k)
            .map(|i| g.edge(format!("p{i}"), t[i - 1], t[i]))
            .collect();
        let bottom: Vec<EdgeId> = (1..k)
            .map(|i| g.edge(format!("q{i}"), s[i - 1], s[i]))
            .collect();
        let left = g.edge("r1'".into(), t[0], s[0]);
        let right = if k == 1 {
            g.edge("r1''".into(), t[0], s[0])
        } else {
            g.edge(format!("r{k}'"), t[k - 1], s[k - 1])
        };

        let mut order = vec![Vec::new(); 2 * k];
        if k == 1 {
            order[t[0]] = vec![r[0], left, right];
            order[s[0]] = vec![right, left, r[0]];
        } else {
            order[t[0]] = vec![top[0], r[0], left];
            order[s[0]] = vec![left, r[0], bottom[0]];
            for i in 1..k - 1 {
                order[t[i]] = vec![top[i - 1], top[i], r[i]];
                order[s[i]] = vec![bottom[i - 1], r[i], bottom[i]];
            }
            order[t[k - 1]] = vec![top[k - 2], right, r[k - 1]];
            order[s[k - 1]] = vec![bottom[k - 2], r[k - 1], right];
        }
        let rotation = g.rotations(order);

        let mut in_tree = vec![false; g.edges.len()];
        for &x in r.iter().chain(top.iter()) {
            in_tree[x] = true;
        }
        let mut cotree = vec![left];
        cotree.extend(bottom.iter().copied());
        cotree.push(right);

        let graph = LadderGraph {
            kind: LadderKind::ClosedEnd,
            n: k,
            vertices: g.vertices,
            edges: g.edges,
            in_tree,
            cotree,
            rotation,
            ringel: None,
        };
        debug_assert!(graph.check_invariants().is_ok());
        Ok(graph)
    }

    pub fn kind(&self) -> LadderKind {
        self.kind
    }

    /// The construction parameter (`n` for Ringel, `k` for closed-end).
    pub fn param(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_label(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_by_label(&self, label: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.label == label)
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn is_tree_edge(&self, e: EdgeId) -> bool {
        self.in_tree[e]
    }

    pub fn tree_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).filter(|&e| self.in_tree[e])
    }

    /// Cotree edges in overlap-matrix row order.
    pub fn cotree_edges(&self) -> &[EdgeId] {
        &self.cotree
    }

    /// `|E| - |V| + 1`
    pub fn betti(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    /// Clockwise darts at `v` in the reference drawing.
    pub fn rotation_at(&self, v: VertexId) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn dart_vertex(&self, d: Dart) -> VertexId {
        self.edges[d / 2].ends[d % 2]
    }

    pub fn ringel_edges(&self) -> Option<&RingelEdges> {
        self.ringel.as_ref()
    }

    /// `prod (deg(v) - 1)!`, the number of pure rotation systems.
    pub fn pure_rotation_count(&self) -> BigUint {
        (0..self.vertex_count())
            .map(|v| (1..self.degree(v)).map(BigUint::from).product::<BigUint>())
            .fold(BigUint::one(), |acc, f| acc * f)
    }

    pub fn check_invariants(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::Invariant(msg));
        let (nv, ne) = (self.vertex_count(), self.edge_count());

        // rotation lists cover each dart exactly once, at its own vertex
        let mut seen = vec![false; 2 * ne];
        for (v, darts) in self.rotation.iter().enumerate() {
            for &d in darts {
                if self.dart_vertex(d) != v {
                    return bad(format!("dart {d} listed at wrong vertex {}", self.vertices[v]));
                }
                if std::mem::replace(&mut seen[d], true) {
                    return bad(format!("dart {d} listed twice"));
                }
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return bad(format!("dart {d} missing from rotations"));
        }
        if let Some(v) = (0..nv).find(|&v| self.degree(v) != 3) {
            return bad(format!("vertex {} has degree {}", self.vertices[v], self.degree(v)));
        }

        // spanning tree: |V|-1 edges and no cycle
        let tree: Vec<EdgeId> = self.tree_edges().collect();
        if tree.len() + 1 != nv {
            return bad(format!("tree has {} edges for {nv} vertices", tree.len()));
        }
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &t in &tree {
            let [a, b] = self.edges[t].ends;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return bad(format!("tree edge {} closes a cycle", self.edges[t].label));
            }
            parent[ra] = rb;
        }
        let mut cot: Vec<EdgeId> = self.cotree.clone();
        cot.sort_unstable();
        let expected: Vec<EdgeId> = (0..ne).filter(|&e| !self.in_tree[e]).collect();
        if cot != expected {
            return bad("cotree is not the complement of the tree".into());
        }
        if self.cotree.len() != self.betti() {
            return bad("cotree size differs from the Betti number".into());
        }

        if let Some(r) = &self.ringel {
            let n = self.n;
            if nv != 2 * n || ne != 3 * n {
                return bad(format!("Ringel counts |V|={nv}, |E|={ne} for n={n}"));
            }
            if self.cotree[0] != r.e {
                return bad("first cotree edge is not e".into());
            }
            let incident = |label: &str| -> Vec<&str> {
                let v = self.vertex_by_label(label).expect("labeled vertex");
                let mut ls: Vec<&str> = self.rotation[v]
                    .iter()
                    .map(|d| self.edges[d / 2].label.as_str())
                    .collect();
                ls.sort_unstable();
                ls
            };
            let sorted = |mut v: Vec<String>| {
                v.sort_unstable();
                v
            };
            let check = |label: String, want: Vec<String>| -> Result<(), GraphError> {
                if incident(&label) != sorted(want.clone()) {
                    return Err(GraphError::Invariant(format!(
                        "{label} is not incident to {want:?}"
                    )));
                }
                Ok(())
            };
            check("v1".into(), vec!["a1".into(), "c1".into(), "e".into()])?;
            check(
                format!("v{}", n + 1),
                vec![format!("a{n}"), format!("c{n}"), "e".into()],
            )?;
            for i in 1..n {
                check(
                    format!("v{}", i + 1),
                    vec![format!("c{i}"), format!("c{}", i + 1), format!("b{i}")],
                )?;
                check(
                    format!("u{}", i + 1),
                    vec![format!("a{i}"), format!("a{}", i + 1), format!("b{i}")],
                )?;
            }
        }
        Ok(())
    }

    /// Graphviz rendering with edge labels; tree edges are bold.
    pub fn to_dot(&self) -> String {
        let name = match self.kind {
            LadderKind::Ringel => format!("ringel_R{}", self.n - 1),
            LadderKind::ClosedEnd => format!("closed_end_L{}", self.n),
        };
        let mut out = format!("graph {name} {{\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  {v};");
        }
        for (i, e) in self.edges.iter().enumerate() {
            let style = if self.in_tree[i] { ", style=bold" } else { "" };
            let _ = writeln!(
                out,
                "  {} -- {} [label=\"{}\"{style}];",
                self.vertices[e.ends[0]], self.vertices[e.ends[1]], e.label
            );
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_ringel_is_k4_shaped() {
        let g = LadderGraph::ringel(2).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.betti(), 3);
    }

    #[test]
    fn ringel_r4_counts() {
        let g = LadderGraph::ringel(5).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn ringel_invariants_hold_up_to_twenty() {
        for n in 2..=20 {
            let g = LadderGraph::ringel(n).unwrap();
            g.check_invariants().unwrap();
            assert_eq!(g.betti(), n + 1);
            assert_eq!(g.pure_rotation_count(), BigUint::from(2u32).pow(2 * n as u32));
            let labels: Vec<&str> = g
                .cotree_edges()
                .iter()
                .map(|&e| g.edges()[e].label.as_str())
                .collect();
            let mut want = vec!["e".to_string()];
            want.extend((1..=n).map(|i| format!("a{i}")));
            assert_eq!(labels, want);
        }
    }

    #[test]
    fn cotree_order_is_deterministic() {
        let a = LadderGraph::ringel(7).unwrap();
        let b = LadderGraph::ringel(7).unwrap();
        assert_eq!(a.cotree_edges(), b.cotree_edges());
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn rejects_small_parameters() {
        assert_eq!(
            LadderGraph::ringel(1).unwrap_err(),
            GraphError::RingelTooSmall(1)
        );
        assert_eq!(
            LadderGraph::closed_end(0).unwrap_err(),
            GraphError::ClosedEndTooSmall(0)
        );
    }

    #[test]
    fn closed_end_counts() {
        let l4 = LadderGraph::closed_end(4).unwrap();
        assert_eq!((l4.vertex_count(), l4.edge_count()), (8, 12));
        let l1 = LadderGraph::closed_end(1).unwrap();
        assert_eq!((l1.vertex_count(), l1.edge_count(), l1.betti()), (2, 3, 2));
        assert_eq!(LadderGraph::closed_end(2).unwrap().betti(), 3);
        for k in 1..=10 {
            let g = LadderGraph::closed_end(k).unwrap();
            g.check_invariants().unwrap();
            assert_eq!(g.betti(), k + 1);
        }
    }

    #[test]
    fn dot_marks_tree_edges() {
        let dot = LadderGraph::ringel(2).unwrap().to_dot();
        assert!(dot.starts_with("graph ringel_R1 {"));
        assert!(dot.contains("v1 -- v3 [label=\"e\"];"));
        assert!(dot.contains("v1 -- v2 [label=\"c1\", style=bold];"));
        assert_eq!(dot.matches("style=bold").count(), 3);
    }
}
