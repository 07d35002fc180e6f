//! Immutable simple undirected graphs with sorted adjacency lists.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// An undirected edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizing constructor; panics on a self-loop, which is never a
    /// representable edge.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "self-loop");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    /// The endpoint that is not `x`; `None` if `x` is not an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    /// Whether the two edges share at least one endpoint.
    pub fn touches(&self, other: &Edge) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }
}

/// Simple undirected graph. Vertices are `0..vertex_count`; adjacency lists
/// are sorted, so iteration order is deterministic everywhere.
///
/// A graph may carry a bipartition label (0 or 1) per vertex; the label is
/// data, not derived, because several checks distinguish two bipartitions of
/// the same underlying graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    part: Option<Vec<u8>>,
}

impl Graph {
    /// Build from an edge list over `n` vertices, rejecting loops,
    /// duplicates, and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            for &x in [a, b].iter() {
                if x >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        vertex_count: n,
                    });
                }
            }
            if adj[a].contains(&b) {
                return Err(Error::DuplicateEdge {
                    u: a.min(b),
                    v: a.max(b),
                });
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, part: None })
    }

    /// Attach a bipartition label (0 or 1) to every vertex. Fails if some
    /// edge joins two vertices on the same side.
    pub fn with_bipartition(mut self, part: Vec<u8>) -> Result<Graph> {
        if part.len() != self.vertex_count() || part.iter().any(|&s| s > 1) {
            return Err(Error::NotBipartite);
        }
        for e in self.edges() {
            if part[e.u] == part[e.v] {
                return Err(Error::NotBipartite);
            }
        }
        self.part = Some(part);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Smallest vertex degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a < self.vertex_count() && self.adj[a].binary_search(&b).is_ok()
    }

    /// All edges with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    /// The bipartition labels, if this graph carries one.
    pub fn bipartition(&self) -> Option<&[u8]> {
        self.part.as_deref()
    }

    /// Same adjacency, bipartition label dropped.
    pub fn without_bipartition(&self) -> Graph {
        Graph {
            adj: self.adj.clone(),
            part: None,
        }
    }

    /// Same adjacency, bipartition sides exchanged.
    pub fn swapped_bipartition(&self) -> Option<Graph> {
        self.part.as_ref().map(|p| Graph {
            adj: self.adj.clone(),
            part: Some(p.iter().map(|&s| 1 - s).collect()),
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            });
        }
        Ok(())
    }

    /// Hop distances from `source`; `None` marks an unreachable vertex.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Distance between two vertices, `None` if they are disconnected.
    pub fn distance(&self, a: usize, b: usize) -> Result<Option<usize>> {
        self.check_vertex(b)?;
        Ok(self.bfs_distances(a)?[b])
    }

    /// The edges sharing exactly one endpoint with `e` (the edge-star of
    /// `e`), excluding `e` itself. Its size is `d_u + d_v - 2`.
    pub fn sphere_of_edge(&self, e: Edge) -> Result<Vec<Edge>> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::NotAnEdge { u: e.u, v: e.v });
        }
        let mut out = Vec::with_capacity(self.degree(e.u) + self.degree(e.v) - 2);
        for &w in &self.adj[e.u] {
            if w != e.v {
                out.push(Edge::new(e.u, w));
            }
        }
        for &w in &self.adj[e.v] {
            if w != e.u {
                out.push(Edge::new(e.v, w));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut comps = Vec::new();
        for start in 0..self.vertex_count() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.connected_components().len() == 1
    }

    /// A graph is a forest exactly when its component count equals
    /// `|V| - |E|`.
    pub fn is_forest(&self) -> bool {
        self.connected_components().len() == self.vertex_count() - self.edge_count()
    }

    /// Common neighbors of `a` and `b` (the intersection of their
    /// neighborhoods), sorted.
    pub fn common_neighbors(&self, a: usize, b: usize) -> Vec<usize> {
        self.adj[a]
            .iter()
            .filter(|w| self.adj[b].binary_search(w).is_ok())
            .copied()
            .collect()
    }

    /// Induced subgraph on `verts` (which need not be sorted); returns the
    /// graph plus the map from new ids to old ids.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut order: Vec<usize> = verts.to_vec();
        order.sort_unstable();
        order.dedup();
        let mut idx = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            idx[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &order {
            for &w in &self.adj[v] {
                if v < w && idx[w] != usize::MAX {
                    edges.push((idx[v], idx[w]));
                }
            }
        }
        let g = Graph::from_edges(order.len(), &edges).expect("induced subgraph is simple");
        (g, order)
    }

    /// Whether the induced subgraph on `verts` is complete.
    pub fn is_clique(&self, verts: &[usize]) -> bool {
        for (i, &a) in verts.iter().enumerate() {
            for &b in &verts[i + 1..] {
                if !self.has_edge(a, b) {
                    return false;
                }
            }
        }
        true
    }
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Path on `n` vertices (`n - 1` edges).
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Star with one hub and `k` leaves (hub is vertex 0).
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::from_edges(k + 1, &edges).unwrap()
}

/// Complete bipartite graph on parts of size `p` and `q`, carrying its
/// bipartition (part 0 is `0..p`).
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 0..p {
        for b in 0..q {
            edges.push((a, p + b));
        }
    }
    let part = (0..p + q).map(|v| u8::from(v >= p)).collect();
    Graph::from_edges(p + q, &edges)
        .unwrap()
        .with_bipartition(part)
        .unwrap()
}

/// The Petersen graph (outer 5-cycle 0..4, inner pentagram 5..9).
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, &edges).unwrap()
}
