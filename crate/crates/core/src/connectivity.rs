//! Edge-connectivity with min-cut witnesses, the bipartite graph induced on a
//! cut, and the per-edge counting bounds that relate transport cost on a cut
//! edge to the cut's combinatorics.

use std::cmp::{max, min};
use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::curvature::cost_of_edge;
use crate::error::Error;
use crate::graph::{Edge, Graph};
use crate::rational::{rat, Rational};
use crate::transport::{vertex_measure, wasserstein};
use crate::Result;

/// Largest vertex count accepted by [`all_min_cuts`].
pub const MIN_CUT_ENUM_BUDGET: usize = 10;

/// A two-sided edge cut: removing `cut_edges` separates `side_x` from
/// `side_y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    /// The crossing edges, in sorted order.
    pub cut_edges: Vec<Edge>,
    /// Vertices on the side containing the flow source, sorted.
    pub side_x: Vec<usize>,
    /// The remaining vertices, sorted.
    pub side_y: Vec<usize>,
    /// `cut_edges.len()`; equals the edge-connectivity when produced by
    /// [`edge_connectivity`] on a connected graph.
    pub size: u64,
}

/// The bipartite graph on the endpoints of a cut, with the cut edges as its
/// edge set. Part `A` (indices `0..p`) is the smaller side after
/// normalization.
#[derive(Debug, Clone)]
pub struct CutBipartite {
    /// The cut graph itself, carrying its bipartition.
    pub h: Graph,
    /// Size of part `A`; `p <= q`.
    pub p: usize,
    /// Size of part `B`.
    pub q: usize,
    /// Number of edges, equal to the cut size.
    pub r: usize,
    /// `back_map[i]` is the host-graph vertex behind `h`'s vertex `i`.
    pub back_map: Vec<usize>,
}

/// Edge counts around a cut edge `e` of the cut graph `H`.
///
/// `s1_size` counts edges meeting `e` in one endpoint, `c_size` is a maximum
/// matching of `H` avoiding those edges' vertices and `e`'s, and the last two
/// are pinned down by the linear identities below rather than by direct
/// classification (which can double-count).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CutQuantities {
    pub s1_size: u64,
    pub c_size: u64,
    /// From `s1 + 2c + d = p + q - 2`; may be negative for pathological
    /// inputs, hence signed.
    pub d_size: i64,
    /// From `s1 + c + d + f = r - 1`; signed for the same reason.
    pub f_size: i64,
}

#[derive(Clone)]
struct FlowNet {
    n: usize,
    to: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNet {
    fn of(g: &Graph) -> FlowNet {
        let n = g.vertex_count();
        let mut net = FlowNet {
            n,
            to: Vec::with_capacity(2 * g.edge_count()),
            cap: Vec::with_capacity(2 * g.edge_count()),
            adj: vec![Vec::new(); n],
        };
        for e in g.edges() {
            // One arc pair per undirected edge; pushing along an arc frees
            // its partner, which models net flow in either direction.
            net.adj[e.u].push(net.to.len());
            net.to.push(e.v);
            net.cap.push(1);
            net.adj[e.v].push(net.to.len());
            net.to.push(e.u);
            net.cap.push(1);
        }
        net
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0u64;
        loop {
            let mut pre: Vec<Option<usize>> = vec![None; self.n];
            let mut seen = vec![false; self.n];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let v = self.to[a];
                    if self.cap[a] > 0 && !seen[v] {
                        seen[v] = true;
                        pre[v] = Some(a);
                        if v == t {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                return total;
            }
            let mut bottleneck = u32::MAX;
            let mut v = t;
            while v != s {
                let a = pre[v].expect("path arc");
                bottleneck = min(bottleneck, self.cap[a]);
                v = self.to[a ^ 1];
            }
            let mut v = t;
            while v != s {
                let a = pre[v].expect("path arc");
                self.cap[a] -= bottleneck;
                self.cap[a ^ 1] += bottleneck;
                v = self.to[a ^ 1];
            }
            total += u64::from(bottleneck);
        }
    }

    /// Vertices reachable from `s` through arcs with residual capacity.
    fn residual_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

fn certificate_from_side(g: &Graph, in_x: &[bool]) -> CutCertificate {
    let side_x: Vec<usize> = (0..g.vertex_count()).filter(|&v| in_x[v]).collect();
    let side_y: Vec<usize> = (0..g.vertex_count()).filter(|&v| !in_x[v]).collect();
    let cut_edges: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|e| in_x[e.u] != in_x[e.v])
        .collect();
    let size = cut_edges.len() as u64;
    CutCertificate {
        cut_edges,
        side_x,
        side_y,
        size,
    }
}

/// Exact edge-connectivity with a witnessing min cut.
///
/// Runs a unit-capacity max-flow from vertex `0` to every other vertex and
/// keeps the smallest value; the witness side is the residual-reachable set
/// of the winning flow. Graphs with fewer than two vertices, and
/// disconnected graphs, yield `0` (the latter with the component of vertex
/// `0` as `side_x` and no cut edges).
pub fn edge_connectivity(g: &Graph) -> (u64, CutCertificate) {
    let n = g.vertex_count();
    if n <= 1 {
        return (
            0,
            CutCertificate {
                cut_edges: Vec::new(),
                side_x: (0..n).collect(),
                side_y: Vec::new(),
                size: 0,
            },
        );
    }
    if !g.is_connected() {
        let side_x = g
            .connected_components()
            .into_iter()
            .next()
            .expect("nonempty graph has a component");
        let mut in_x = vec![false; n];
        for &v in &side_x {
            in_x[v] = true;
        }
        let side_y = (0..n).filter(|&v| !in_x[v]).collect();
        return (
            0,
            CutCertificate {
                cut_edges: Vec::new(),
                side_x,
                side_y,
                size: 0,
            },
        );
    }
    let base = FlowNet::of(g);
    let (value, sink) = (1..n)
        .into_par_iter()
        .map(|t| {
            let mut net = base.clone();
            (net.max_flow(0, t), t)
        })
        .min()
        .expect("at least one sink");
    let mut net = base;
    net.max_flow(0, sink);
    let reach = net.residual_side(0);
    let cert = certificate_from_side(g, &reach);
    debug_assert_eq!(cert.size, value);
    (value, cert)
}

/// Max-flow value between a specific vertex pair, which equals the smallest
/// edge cut separating them.
pub fn local_edge_connectivity(g: &Graph, s: usize, t: usize) -> Result<u64> {
    let n = g.vertex_count();
    if s >= n {
        return Err(Error::VertexOutOfRange {
            vertex: s,
            vertex_count: n,
        });
    }
    if t >= n {
        return Err(Error::VertexOutOfRange {
            vertex: t,
            vertex_count: n,
        });
    }
    if s == t {
        return Err(Error::EqualPair(s));
    }
    Ok(FlowNet::of(g).max_flow(s, t))
}

/// Smallest edge cut separating every vertex of `side_a` from every vertex
/// of `side_b`, together with a witnessing cut.
///
/// Computed as a max-flow between a contracted source and a contracted
/// sink, so it answers "how many edges must fail before the two groups
/// disconnect" even when neither group is a single vertex.
pub fn edge_connectivity_between(
    g: &Graph,
    side_a: &[usize],
    side_b: &[usize],
) -> Result<(u64, CutCertificate)> {
    let n = g.vertex_count();
    for &v in side_a.iter().chain(side_b) {
        if v >= n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: n,
            });
        }
    }
    if side_a.is_empty() || side_b.is_empty() {
        return Err(Error::InvalidCertificate(
            "terminal sides must be nonempty".into(),
        ));
    }
    let mut in_a = vec![false; n];
    for &v in side_a {
        in_a[v] = true;
    }
    if let Some(&v) = side_b.iter().find(|&&v| in_a[v]) {
        return Err(Error::EqualPair(v));
    }
    let mut net = FlowNet::of(g);
    let (s, t) = (n, n + 1);
    net.n = n + 2;
    net.adj.push(Vec::new());
    net.adj.push(Vec::new());
    // No finite flow exceeds the edge count, so this acts as infinity.
    let unbounded = g.edge_count() as u32 + 1;
    for &v in side_a {
        net.adj[s].push(net.to.len());
        net.to.push(v);
        net.cap.push(unbounded);
        net.adj[v].push(net.to.len());
        net.to.push(s);
        net.cap.push(0);
    }
    for &v in side_b {
        net.adj[v].push(net.to.len());
        net.to.push(t);
        net.cap.push(unbounded);
        net.adj[t].push(net.to.len());
        net.to.push(v);
        net.cap.push(0);
    }
    let value = net.max_flow(s, t);
    let reach = net.residual_side(s);
    let cert = certificate_from_side(g, &reach[..n]);
    debug_assert_eq!(cert.size, value);
    Ok((value, cert))
}

/// Checks that `cert` describes a genuine two-sided cut of `g`: the sides
/// partition the vertices, both are nonempty, and `cut_edges` are exactly
/// the crossing edges.
pub fn validate_cut(g: &Graph, cert: &CutCertificate) -> Result<()> {
    let n = g.vertex_count();
    let mut side = vec![2u8; n];
    for (bit, verts) in [(0u8, &cert.side_x), (1u8, &cert.side_y)] {
        for &v in verts {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: n,
                });
            }
            if side[v] != 2 {
                return Err(Error::InvalidCertificate(format!(
                    "vertex {v} appears on both sides"
                )));
            }
            side[v] = bit;
        }
    }
    if side.contains(&2) {
        return Err(Error::InvalidCertificate(
            "sides do not cover every vertex".into(),
        ));
    }
    if cert.side_x.is_empty() || cert.side_y.is_empty() {
        return Err(Error::InvalidCertificate("a side is empty".into()));
    }
    let crossing: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|e| side[e.u] != side[e.v])
        .collect();
    let mut declared = cert.cut_edges.clone();
    declared.sort_unstable();
    declared.dedup();
    if declared != crossing {
        return Err(Error::InvalidCertificate(
            "cut_edges differ from the crossing edges of the sides".into(),
        ));
    }
    if cert.size as usize != crossing.len() {
        return Err(Error::InvalidCertificate(
            "declared size differs from the number of cut edges".into(),
        ));
    }
    Ok(())
}

/// Every minimum cut, as a certificate whose `side_x` contains vertex `0`.
///
/// Exhaustive over vertex subsets, hence the budget on the vertex count.
pub fn all_min_cuts(g: &Graph) -> Result<Vec<CutCertificate>> {
    let n = g.vertex_count();
    if n > MIN_CUT_ENUM_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "exhaustive min-cut enumeration".into(),
            limit: MIN_CUT_ENUM_BUDGET,
        });
    }
    if n < 2 {
        return Ok(Vec::new());
    }
    let (kappa, _) = edge_connectivity(g);
    let edges = g.edges();
    let mut cuts = Vec::new();
    for mask in 0..(1u32 << (n - 1)) {
        let mut in_x = vec![false; n];
        in_x[0] = true;
        for v in 1..n {
            in_x[v] = mask >> (v - 1) & 1 == 1;
        }
        if in_x.iter().all(|&b| b) {
            continue;
        }
        let crossing = edges.iter().filter(|e| in_x[e.u] != in_x[e.v]).count();
        if crossing as u64 == kappa {
            cuts.push(certificate_from_side(g, &in_x));
        }
    }
    Ok(cuts)
}

/// Builds the bipartite cut graph on the endpoints of `cert`'s edges, parts
/// following the cut sides, smaller part first.
pub fn cut_bipartite(g: &Graph, cert: &CutCertificate) -> Result<CutBipartite> {
    validate_cut(g, cert)?;
    if cert.cut_edges.is_empty() {
        return Err(Error::InvalidCertificate("cut has no edges".into()));
    }
    let mut in_x = vec![false; g.vertex_count()];
    for &v in &cert.side_x {
        in_x[v] = true;
    }
    let mut ends_x: Vec<usize> = Vec::new();
    let mut ends_y: Vec<usize> = Vec::new();
    for e in &cert.cut_edges {
        for v in [e.u, e.v] {
            let bucket = if in_x[v] { &mut ends_x } else { &mut ends_y };
            if !bucket.contains(&v) {
                bucket.push(v);
            }
        }
    }
    ends_x.sort_unstable();
    ends_y.sort_unstable();
    if ends_x.len() > ends_y.len() {
        std::mem::swap(&mut ends_x, &mut ends_y);
    }
    let (p, q) = (ends_x.len(), ends_y.len());
    let mut back_map = ends_x;
    back_map.extend_from_slice(&ends_y);
    let index_of = |v: usize| back_map.iter().position(|&w| w == v).expect("endpoint");
    let h_edges: Vec<(usize, usize)> = cert
        .cut_edges
        .iter()
        .map(|e| (index_of(e.u), index_of(e.v)))
        .collect();
    let mut part = vec![0u8; p + q];
    for side in part.iter_mut().skip(p) {
        *side = 1;
    }
    let h = Graph::from_edges(p + q, &h_edges)?.with_bipartition(part)?;
    debug_assert!((0..p + q).all(|v| h.degree(v) > 0));
    Ok(CutBipartite {
        h,
        p,
        q,
        r: cert.cut_edges.len(),
        back_map,
    })
}

impl CutBipartite {
    /// Index of the host-graph vertex `v` inside `h`, if it is a cut-edge
    /// endpoint.
    pub fn index_of(&self, v: usize) -> Option<usize> {
        self.back_map.iter().position(|&w| w == v)
    }

    /// Translates a host-graph cut edge into an edge of `h`.
    pub fn edge_of(&self, e: Edge) -> Option<Edge> {
        let u = self.index_of(e.u)?;
        let v = self.index_of(e.v)?;
        self.h.has_edge(u, v).then(|| Edge::new(u, v))
    }
}

/// Maximum matching of `h` using only vertices with `allowed` set, by
/// augmenting paths. Returns the matched pairs.
fn max_matching(h: &Graph, allowed: &[bool]) -> Vec<(usize, usize)> {
    let part = h.bipartition().expect("cut graph carries its bipartition");
    let n = h.vertex_count();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    let left: Vec<usize> = (0..n).filter(|&v| part[v] == 0 && allowed[v]).collect();

    fn augment(
        h: &Graph,
        allowed: &[bool],
        u: usize,
        visited: &mut [bool],
        mate: &mut [Option<usize>],
    ) -> bool {
        for &w in h.neighbors(u) {
            if !allowed[w] || visited[w] {
                continue;
            }
            visited[w] = true;
            let free = match mate[w] {
                None => true,
                Some(m) => augment(h, allowed, m, visited, mate),
            };
            if free {
                mate[w] = Some(u);
                mate[u] = Some(w);
                return true;
            }
        }
        false
    }

    for &u in &left {
        let mut visited = vec![false; n];
        augment(h, allowed, u, &mut visited, &mut mate);
    }
    (0..n)
        .filter(|&v| part[v] == 0)
        .filter_map(|v| mate[v].map(|w| (v, w)))
        .collect()
}

fn quantities_and_matching(
    cb: &CutBipartite,
    e: Edge,
) -> Result<(CutQuantities, Vec<(usize, usize)>)> {
    if !cb.h.has_edge(e.u, e.v) {
        return Err(Error::NotAnEdge { u: e.u, v: e.v });
    }
    let s1 = cb.h.sphere_of_edge(e)?;
    let mut allowed = vec![true; cb.h.vertex_count()];
    allowed[e.u] = false;
    allowed[e.v] = false;
    for s in &s1 {
        allowed[s.u] = false;
        allowed[s.v] = false;
    }
    let matching = max_matching(&cb.h, &allowed);
    let s1_size = s1.len() as u64;
    let c_size = matching.len() as u64;
    let (p, q, r) = (cb.p as i64, cb.q as i64, cb.r as i64);
    let d_size = p + q - 2 - s1_size as i64 - 2 * c_size as i64;
    let f_size = r - 1 - s1_size as i64 - c_size as i64 - d_size;
    let quantities = CutQuantities {
        s1_size,
        c_size,
        d_size,
        f_size,
    };
    assert_eq!(
        s1_size as i64 + d_size + 2 * f_size,
        2 * r - (p + q),
        "cut-edge counts must satisfy the third linear identity"
    );
    Ok((quantities, matching))
}

/// Edge counts around the cut-graph edge `e`.
///
/// `d_size` and `f_size` come from the linear identities tying the counts to
/// `p`, `q`, `r`, not from classifying individual edges.
pub fn cut_quantities(cb: &CutBipartite, e: Edge) -> Result<CutQuantities> {
    quantities_and_matching(cb, e).map(|(quantities, _)| quantities)
}

/// Classifies the edges of `h - e` left over after removing `e`'s sphere and
/// the matching: how many touch the used vertex set in exactly one endpoint
/// versus two.
///
/// This mirrors a set-based description of the two derived counts; it is
/// diagnostic only, because such a classification need not match the
/// identity-derived values on every graph. Callers report disagreements
/// rather than asserting them away.
pub fn prose_split(cb: &CutBipartite, e: Edge) -> Result<(u64, u64)> {
    let (_, matching) = quantities_and_matching(cb, e)?;
    let s1 = cb.h.sphere_of_edge(e)?;
    let mut used = vec![false; cb.h.vertex_count()];
    for s in &s1 {
        used[s.u] = true;
        used[s.v] = true;
    }
    for &(a, b) in &matching {
        used[a] = true;
        used[b] = true;
    }
    let in_matching = |g_e: &Edge| matching.iter().any(|&(a, b)| Edge::new(a, b) == *g_e);
    let mut one = 0;
    let mut two = 0;
    for h_e in cb.h.edges() {
        if h_e == e || s1.contains(&h_e) || in_matching(&h_e) {
            continue;
        }
        match used[h_e.u] as u8 + used[h_e.v] as u8 {
            1 => one += 1,
            2 => two += 1,
            // A remaining edge avoiding the used vertices entirely would
            // extend the matching, contradicting maximality.
            _ => unreachable!("edge disjoint from a maximum matching's span"),
        }
    }
    Ok((one, two))
}

/// Right-hand side of the cost inequality for a cut edge: weights 0, 1, 2, 3
/// over the four counts, with the last weight applied to `f + delta - r`.
pub fn claim_bound_value(q: &CutQuantities, delta: usize, r: usize) -> i64 {
    q.c_size as i64 + 2 * q.d_size + 3 * (q.f_size + delta as i64 - r as i64)
}

/// Checks the cost inequality for a min-cut edge `e0` whose endpoints both
/// have the graph's minimum degree. Always true when the preconditions hold;
/// a `false` return signals a bug.
pub fn check_claim_cost_bound(g: &Graph, cert: &CutCertificate, e0: Edge) -> Result<bool> {
    let (kappa, _) = edge_connectivity(g);
    if kappa != cert.size {
        return Err(Error::InvalidCertificate(
            "certificate is not a minimum cut".into(),
        ));
    }
    check_claim_cost_bound_with_delta(g, cert, e0, g.min_degree())
}

/// Same inequality with the ambient minimum degree supplied by the caller.
///
/// Finite windows cut out of a larger graph have boundary vertices of
/// artificially low degree; passing the intended degree lets the check run
/// on such windows. `r` is taken from the certificate.
pub fn check_claim_cost_bound_with_delta(
    g: &Graph,
    cert: &CutCertificate,
    e0: Edge,
    delta: usize,
) -> Result<bool> {
    validate_cut(g, cert)?;
    if !cert.cut_edges.contains(&e0) {
        return Err(Error::InvalidCertificate(
            "edge is not part of the cut".into(),
        ));
    }
    let (du, dv) = (g.degree(e0.u), g.degree(e0.v));
    if du != dv {
        return Err(Error::UnequalDegrees {
            u: e0.u,
            v: e0.v,
            d_u: du,
            d_v: dv,
        });
    }
    if du != delta {
        return Err(Error::InvalidCertificate(format!(
            "cut edge endpoints have degree {du}, expected {delta}"
        )));
    }
    let cb = cut_bipartite(g, cert)?;
    let h_edge = cb.edge_of(e0).expect("cut edge maps into the cut graph");
    let quantities = cut_quantities(&cb, h_edge)?;
    let cost = cost_of_edge(g, e0)? as i64;
    Ok(cost >= claim_bound_value(&quantities, delta, cb.r))
}

/// Exact transport distance across a star-cut edge together with its
/// combinatorial lower bound; `check_star_cut_lower_bound` compares them.
///
/// The bound reads the hub side as `x`. When the star is a single edge both
/// orientations apply, so the larger bound is returned.
pub fn star_cut_transport_bound(
    g: &Graph,
    cert: &CutCertificate,
    e: Edge,
) -> Result<(Rational, Rational)> {
    star_cut_transport_bound_with_delta(g, cert, e, g.min_degree())
}

/// Same bound with the ambient minimum degree supplied by the caller.
///
/// Finite windows cut out of a larger graph have boundary vertices of
/// artificially low degree, so the window's own minimum degree would
/// wrongly disqualify a cut that sits below the intended degree.
pub fn star_cut_transport_bound_with_delta(
    g: &Graph,
    cert: &CutCertificate,
    e: Edge,
    delta: usize,
) -> Result<(Rational, Rational)> {
    let (kappa, _) = edge_connectivity(g);
    if kappa != cert.size {
        return Err(Error::InvalidCertificate(
            "certificate is not a minimum cut".into(),
        ));
    }
    if kappa as usize + 1 > delta {
        return Err(Error::InvalidCertificate(
            "cut size must stay below the minimum degree".into(),
        ));
    }
    let cb = cut_bipartite(g, cert)?;
    if cb.p != 1 {
        return Err(Error::NotAStarCut);
    }
    if !cert.cut_edges.contains(&e) {
        return Err(Error::InvalidCertificate(
            "edge is not part of the cut".into(),
        ));
    }
    let h_edge = cb.edge_of(e).expect("cut edge maps into the cut graph");
    let s1 = cb.h.sphere_of_edge(h_edge)?.len() as i64;
    let hub = cb.back_map[0];
    let leaf = e.other(hub).expect("star cut edges all touch the hub");

    let oriented = |x: usize, y: usize| -> Rational {
        let dx = g.degree(x) as i64;
        let dy = g.degree(y) as i64;
        let alpha = g.common_neighbors(x, y).len() as i64;
        let sigma = max(dx, dy) * (min(dx, dy) + 1);
        let numerator = sigma + (dx * dy - (alpha + 2) * dx) + (dx * dy - 2 * (s1 + 1) * dy);
        rat(numerator, sigma)
    };
    let bound = if cb.r == 1 {
        max(oriented(hub, leaf), oriented(leaf, hub))
    } else {
        oriented(hub, leaf)
    };

    let rho = max(
        rat(1, g.degree(e.u) as i64 + 1),
        rat(1, g.degree(e.v) as i64 + 1),
    );
    let mu = vertex_measure(g, e.u, &rho)?;
    let nu = vertex_measure(g, e.v, &rho)?;
    let (w, _) = wasserstein(g, &mu, &nu)?;
    Ok((w, bound))
}

/// Checks the transport lower bound across an edge of a star-shaped min cut
/// in a graph whose edge-connectivity sits strictly below its minimum
/// degree. Always true when the preconditions hold.
pub fn check_star_cut_lower_bound(g: &Graph, cert: &CutCertificate, e: Edge) -> Result<bool> {
    let (w, bound) = star_cut_transport_bound(g, cert, e)?;
    Ok(w >= bound)
}

/// Star-cut bound check against a caller-supplied ambient minimum degree.
pub fn check_star_cut_lower_bound_with_delta(
    g: &Graph,
    cert: &CutCertificate,
    e: Edge,
    delta: usize,
) -> Result<bool> {
    let (w, bound) = star_cut_transport_bound_with_delta(g, cert, e, delta)?;
    Ok(w >= bound)
}

/// Per-edge row of a cut analysis.
#[derive(Debug, Clone, Serialize)]
pub struct CutEdgeReport {
    pub g_edge: (usize, usize),
    pub h_edge: (usize, usize),
    pub endpoint_degrees: (usize, usize),
    pub s1_size: u64,
    pub c_size: u64,
    pub d_size: i64,
    pub f_size: i64,
    pub prose_d: u64,
    pub prose_f: u64,
    pub prose_agrees: bool,
    /// Present when both endpoints have the minimum degree.
    pub cost: Option<u64>,
    pub claim_bound: Option<i64>,
    pub claim_holds: Option<bool>,
    /// Present when the cut is a star and sits below the minimum degree.
    #[serde(with = "crate::rational::serde_repr_opt")]
    pub star_w: Option<Rational>,
    #[serde(with = "crate::rational::serde_repr_opt")]
    pub star_bound: Option<Rational>,
    pub star_holds: Option<bool>,
}

/// Full min-cut analysis of a graph: the certificate, the cut graph in
/// adjacency-list form, and every per-edge count and bound verdict.
#[derive(Debug, Clone, Serialize)]
pub struct CutAnalysis {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub edge_connectivity: u64,
    pub side_x: Vec<usize>,
    pub side_y: Vec<usize>,
    pub cut_edges: Vec<(usize, usize)>,
    pub h_parts: Option<(usize, usize)>,
    pub h_adjacency: Option<Vec<Vec<usize>>>,
    pub h_back_map: Option<Vec<usize>>,
    pub edges: Vec<CutEdgeReport>,
}

/// Runs [`edge_connectivity`] and assembles the serializable analysis.
pub fn analyze_cut(g: &Graph) -> Result<CutAnalysis> {
    let (kappa, cert) = edge_connectivity(g);
    let delta = g.min_degree();
    let mut analysis = CutAnalysis {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        min_degree: delta,
        edge_connectivity: kappa,
        side_x: cert.side_x.clone(),
        side_y: cert.side_y.clone(),
        cut_edges: cert.cut_edges.iter().map(|e| (e.u, e.v)).collect(),
        h_parts: None,
        h_adjacency: None,
        h_back_map: None,
        edges: Vec::new(),
    };
    if kappa == 0 {
        return Ok(analysis);
    }
    let cb = cut_bipartite(g, &cert)?;
    analysis.h_parts = Some((cb.p, cb.q));
    analysis.h_adjacency = Some(
        (0..cb.h.vertex_count())
            .map(|v| cb.h.neighbors(v).to_vec())
            .collect(),
    );
    analysis.h_back_map = Some(cb.back_map.clone());
    let star = cb.p == 1 && (kappa as usize) < delta;
    for e in &cert.cut_edges {
        let h_edge = cb.edge_of(*e).expect("cut edge maps into the cut graph");
        let quantities = cut_quantities(&cb, h_edge)?;
        let (prose_d, prose_f) = prose_split(&cb, h_edge)?;
        let equal_min = g.degree(e.u) == delta && g.degree(e.v) == delta;
        let (cost, claim_bound, claim_holds) = if equal_min {
            let cost = cost_of_edge(g, *e)?;
            let bound = claim_bound_value(&quantities, delta, cb.r);
            (Some(cost), Some(bound), Some(cost as i64 >= bound))
        } else {
            (None, None, None)
        };
        let (star_w, star_bound, star_holds) = if star {
            let (w, bound) = star_cut_transport_bound(g, &cert, *e)?;
            let holds = w >= bound;
            (Some(w), Some(bound), Some(holds))
        } else {
            (None, None, None)
        };
        analysis.edges.push(CutEdgeReport {
            g_edge: (e.u, e.v),
            h_edge: (h_edge.u, h_edge.v),
            endpoint_degrees: (g.degree(e.u), g.degree(e.v)),
            s1_size: quantities.s1_size,
            c_size: quantities.c_size,
            d_size: quantities.d_size,
            f_size: quantities.f_size,
            prose_d,
            prose_f,
            prose_agrees: prose_d == quantities.d_size.max(0) as u64
                && prose_f == quantities.f_size.max(0) as u64,
            cost,
            claim_bound,
            claim_holds,
            star_w,
            star_bound,
            star_holds,
        });
    }
    Ok(analysis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, petersen, star};
    use crate::rational::rat_int;

    fn two_cliques_bridge(k: usize, l: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                edges.push((i, j));
            }
        }
        for i in 0..l {
            for j in i + 1..l {
                edges.push((k + i, k + j));
            }
        }
        edges.push((0, k));
        Graph::from_edges(k + l, &edges).unwrap()
    }

    /// Two layers of a triangle, matched up: the triangular prism.
    fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (3, 4),
                (3, 5),
                (4, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn connectivity_of_standard_graphs() {
        for n in 2..=7 {
            assert_eq!(edge_connectivity(&complete(n)).0, n as u64 - 1);
        }
        for n in 3..=8 {
            assert_eq!(edge_connectivity(&cycle(n)).0, 2);
        }
        assert_eq!(edge_connectivity(&path(5)).0, 1);
        assert_eq!(edge_connectivity(&star(5)).0, 1);
        assert_eq!(edge_connectivity(&petersen()).0, 3);
        assert_eq!(edge_connectivity(&complete_bipartite(3, 4)).0, 3);
    }

    #[test]
    fn connectivity_never_exceeds_min_degree() {
        for g in [
            complete(5),
            cycle(6),
            petersen(),
            prism(),
            two_cliques_bridge(4, 4),
        ] {
            assert!(edge_connectivity(&g).0 <= g.min_degree() as u64);
        }
    }

    #[test]
    fn bridge_cut_is_the_bridge() {
        let g = two_cliques_bridge(4, 4);
        let (kappa, cert) = edge_connectivity(&g);
        assert_eq!(kappa, 1);
        assert_eq!(cert.cut_edges, vec![Edge::new(0, 4)]);
        validate_cut(&g, &cert).unwrap();
    }

    #[test]
    fn certificates_check_out_and_disconnect() {
        for g in [complete(6), cycle(7), petersen(), prism()] {
            let (kappa, cert) = edge_connectivity(&g);
            validate_cut(&g, &cert).unwrap();
            assert_eq!(kappa, cert.size);
            let kept: Vec<(usize, usize)> = g
                .edges()
                .into_iter()
                .filter(|e| !cert.cut_edges.contains(e))
                .map(|e| (e.u, e.v))
                .collect();
            let pruned = Graph::from_edges(g.vertex_count(), &kept).unwrap();
            assert!(!pruned.is_connected());
        }
    }

    #[test]
    fn trivial_and_disconnected_graphs() {
        let single = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(edge_connectivity(&single).0, 0);
        let two_parts = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap();
        let (kappa, cert) = edge_connectivity(&two_parts);
        assert_eq!(kappa, 0);
        assert_eq!(cert.side_x, vec![0, 1]);
        assert_eq!(cert.side_y, vec![2, 3, 4]);
        assert!(cert.cut_edges.is_empty());
    }

    #[test]
    fn local_connectivity_pairs() {
        let g = two_cliques_bridge(4, 4);
        assert_eq!(local_edge_connectivity(&g, 1, 2).unwrap(), 3);
        assert_eq!(local_edge_connectivity(&g, 1, 5).unwrap(), 1);
        assert!(matches!(
            local_edge_connectivity(&g, 1, 1),
            Err(Error::EqualPair(1))
        ));
        assert!(matches!(
            local_edge_connectivity(&g, 0, 99),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn connectivity_between_vertex_groups() {
        // Prism: each triangle hangs on to the other by all three rungs.
        let g = prism();
        let (value, cert) = edge_connectivity_between(&g, &[0, 1, 2], &[3, 4, 5]).unwrap();
        assert_eq!(value, 3);
        validate_cut(&g, &cert).unwrap();
        assert_eq!(cert.size, 3);

        // Contracting a whole clique side leaves only the bridge.
        let b = two_cliques_bridge(4, 4);
        let (value, cert) = edge_connectivity_between(&b, &[0, 1, 2, 3], &[4, 5, 6, 7]).unwrap();
        assert_eq!(value, 1);
        assert_eq!(cert.cut_edges, vec![Edge::new(0, 4)]);

        // Grouping can only raise the answer above the single-pair value.
        let single = local_edge_connectivity(&b, 0, 7).unwrap();
        assert_eq!(single, 1);

        assert!(matches!(
            edge_connectivity_between(&g, &[0, 1], &[1, 2]),
            Err(Error::EqualPair(1))
        ));
        assert!(matches!(
            edge_connectivity_between(&g, &[], &[1]),
            Err(Error::InvalidCertificate(_))
        ));
        assert!(matches!(
            edge_connectivity_between(&g, &[0], &[9]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn validate_cut_rejects_bad_certificates() {
        let g = cycle(4);
        let (_, mut cert) = edge_connectivity(&g);
        cert.size += 1;
        assert!(matches!(
            validate_cut(&g, &cert),
            Err(Error::InvalidCertificate(_))
        ));
        let missing_edge = CutCertificate {
            cut_edges: vec![Edge::new(0, 1)],
            side_x: vec![0],
            side_y: vec![1, 2, 3],
            size: 1,
        };
        assert!(matches!(
            validate_cut(&g, &missing_edge),
            Err(Error::InvalidCertificate(_))
        ));
    }

    #[test]
    fn min_cut_enumeration_counts() {
        // Any two edges of a cycle form a min cut.
        let cuts = all_min_cuts(&cycle(4)).unwrap();
        assert_eq!(cuts.len(), 6);
        for cert in &cuts {
            validate_cut(&cycle(4), cert).unwrap();
            assert!(cert.side_x.contains(&0));
        }
        // Complete graphs: only single-vertex sides achieve the minimum.
        assert_eq!(all_min_cuts(&complete(4)).unwrap().len(), 4);
        assert_eq!(all_min_cuts(&two_cliques_bridge(4, 4)).unwrap().len(), 1);
        assert!(matches!(
            all_min_cuts(&cycle(11)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn ladder_cut_graph_is_a_perfect_matching_on_two_pairs() {
        // Two rails of length five, rungs between them.
        let mut edges = Vec::new();
        for i in 0..4 {
            edges.push((i, i + 1));
            edges.push((5 + i, 5 + i + 1));
        }
        for i in 0..5 {
            edges.push((i, 5 + i));
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        let cert = CutCertificate {
            cut_edges: vec![Edge::new(1, 2), Edge::new(6, 7)],
            side_x: vec![0, 1, 5, 6],
            side_y: vec![2, 3, 4, 7, 8, 9],
            size: 2,
        };
        validate_cut(&g, &cert).unwrap();
        assert_eq!(edge_connectivity(&g).0, 2);
        let cb = cut_bipartite(&g, &cert).unwrap();
        assert_eq!((cb.p, cb.q, cb.r), (2, 2, 2));
        assert_eq!(cb.back_map, vec![1, 6, 2, 7]);
        assert_eq!(cb.h.edge_count(), 2);
        assert!(cb.h.edges().iter().all(|e| cb.h.degree(e.u) == 1));
    }

    #[test]
    fn bridge_cut_graph_is_a_single_edge() {
        let g = two_cliques_bridge(4, 4);
        let (_, cert) = edge_connectivity(&g);
        let cb = cut_bipartite(&g, &cert).unwrap();
        assert_eq!((cb.p, cb.q, cb.r), (1, 1, 1));
        assert_eq!(cb.h.edge_count(), 1);
    }

    #[test]
    fn prism_interlayer_cut_graph_is_a_perfect_matching() {
        let g = prism();
        let cert = CutCertificate {
            cut_edges: vec![Edge::new(0, 3), Edge::new(1, 4), Edge::new(2, 5)],
            side_x: vec![0, 1, 2],
            side_y: vec![3, 4, 5],
            size: 3,
        };
        validate_cut(&g, &cert).unwrap();
        assert_eq!(edge_connectivity(&g).0, 3);
        let cb = cut_bipartite(&g, &cert).unwrap();
        assert_eq!((cb.p, cb.q, cb.r), (3, 3, 3));
        assert!((0..6).all(|v| cb.h.degree(v) == 1));
        for e in cb.h.edges() {
            let q = cut_quantities(&cb, e).unwrap();
            assert_eq!((q.s1_size, q.c_size, q.d_size, q.f_size), (0, 2, 0, 0));
        }
    }

    #[test]
    fn smaller_part_comes_first() {
        // Two cut edges share vertex 1, so A = {1} against B = {2, 3}.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let cert = CutCertificate {
            cut_edges: vec![Edge::new(1, 2), Edge::new(1, 3)],
            side_x: vec![0, 1],
            side_y: vec![2, 3, 4],
            size: 2,
        };
        let cb = cut_bipartite(&g, &cert).unwrap();
        assert_eq!((cb.p, cb.q), (1, 2));
        assert_eq!(cb.back_map, vec![1, 2, 3]);
        // Presenting the sides in the other order must not change the answer.
        let flipped = CutCertificate {
            cut_edges: cert.cut_edges.clone(),
            side_x: cert.side_y.clone(),
            side_y: cert.side_x.clone(),
            size: cert.size,
        };
        let cb2 = cut_bipartite(&g, &flipped).unwrap();
        assert_eq!((cb2.p, cb2.q), (1, 2));
        assert_eq!(cb2.back_map, cb.back_map);
    }

    #[test]
    fn quantities_on_a_four_cycle_cut_graph() {
        // A cut graph isomorphic to the 4-cycle, built directly.
        let cb = CutBipartite {
            h: Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)])
                .unwrap()
                .with_bipartition(vec![0, 0, 1, 1])
                .unwrap(),
            p: 2,
            q: 2,
            r: 4,
            back_map: vec![0, 1, 2, 3],
        };
        for e in cb.h.edges() {
            let q = cut_quantities(&cb, e).unwrap();
            assert_eq!((q.s1_size, q.c_size, q.d_size, q.f_size), (2, 0, 0, 1));
            let (prose_d, prose_f) = prose_split(&cb, e).unwrap();
            assert_eq!((prose_d, prose_f), (0, 1));
        }
    }

    #[test]
    fn quantities_on_two_opposite_stars() {
        // Centers in opposite parts, two leaves each: a0~{b1,b2}, b0~{a1,a2}.
        let cb = CutBipartite {
            h: Graph::from_edges(6, &[(0, 4), (0, 5), (3, 1), (3, 2)])
                .unwrap()
                .with_bipartition(vec![0, 0, 0, 1, 1, 1])
                .unwrap(),
            p: 3,
            q: 3,
            r: 4,
            back_map: vec![0, 1, 2, 3, 4, 5],
        };
        let leaf_center = Edge::new(0, 4);
        let q = cut_quantities(&cb, leaf_center).unwrap();
        assert_eq!((q.s1_size, q.c_size, q.d_size, q.f_size), (1, 1, 1, 0));
        let (prose_d, prose_f) = prose_split(&cb, leaf_center).unwrap();
        assert_eq!((prose_d, prose_f), (1, 0));
    }

    #[test]
    fn quantities_identities_on_generated_cuts() {
        for g in [
            prism(),
            petersen(),
            complete(5),
            cycle(6),
            complete_bipartite(3, 3),
        ] {
            let (_, cert) = edge_connectivity(&g);
            let cb = cut_bipartite(&g, &cert).unwrap();
            for e in cb.h.edges() {
                let q = cut_quantities(&cb, e).unwrap();
                let (p, q_, r) = (cb.p as i64, cb.q as i64, cb.r as i64);
                assert_eq!(
                    q.s1_size as i64 + q.c_size as i64 + q.d_size + q.f_size,
                    r - 1
                );
                assert_eq!(
                    q.s1_size as i64 + 2 * q.c_size as i64 + q.d_size,
                    p + q_ - 2
                );
                assert_eq!(q.s1_size as i64 + q.d_size + 2 * q.f_size, 2 * r - (p + q_));
            }
        }
    }

    #[test]
    fn quantities_reject_non_edges() {
        let g = prism();
        let (_, cert) = edge_connectivity(&g);
        let cb = cut_bipartite(&g, &cert).unwrap();
        let non_edge = Edge::new(0, 1);
        if !cb.h.has_edge(0, 1) {
            assert!(matches!(
                cut_quantities(&cb, non_edge),
                Err(Error::NotAnEdge { .. })
            ));
        }
    }

    #[test]
    fn claim_bound_frozen_values() {
        let four_cycle = CutQuantities {
            s1_size: 2,
            c_size: 0,
            d_size: 0,
            f_size: 1,
        };
        assert_eq!(claim_bound_value(&four_cycle, 5, 4), 6);
        let opposite_stars = CutQuantities {
            s1_size: 1,
            c_size: 1,
            d_size: 1,
            f_size: 0,
        };
        assert_eq!(claim_bound_value(&opposite_stars, 5, 4), 6);
    }

    #[test]
    fn claim_holds_with_equality_on_the_prism() {
        let g = prism();
        let cert = CutCertificate {
            cut_edges: vec![Edge::new(0, 3), Edge::new(1, 4), Edge::new(2, 5)],
            side_x: vec![0, 1, 2],
            side_y: vec![3, 4, 5],
            size: 3,
        };
        let e0 = Edge::new(0, 3);
        assert!(check_claim_cost_bound(&g, &cert, e0).unwrap());
        // Both sides evaluate to 2 here.
        assert_eq!(cost_of_edge(&g, e0).unwrap(), 2);
        let cb = cut_bipartite(&g, &cert).unwrap();
        let q = cut_quantities(&cb, cb.edge_of(e0).unwrap()).unwrap();
        assert_eq!(claim_bound_value(&q, 3, 3), 2);
    }

    #[test]
    fn claim_holds_on_dense_graphs() {
        for g in [complete(4), complete(6), petersen(), cycle(5), cycle(4)] {
            let (_, cert) = edge_connectivity(&g);
            for e0 in cert.cut_edges.clone() {
                assert!(check_claim_cost_bound(&g, &cert, e0).unwrap());
            }
        }
    }

    #[test]
    fn claim_rejects_unequal_or_non_minimum_degrees() {
        let g = two_cliques_bridge(4, 5);
        let (_, cert) = edge_connectivity(&g);
        let bridge = Edge::new(0, 4);
        assert!(matches!(
            check_claim_cost_bound(&g, &cert, bridge),
            Err(Error::UnequalDegrees { .. })
        ));
        let h = two_cliques_bridge(4, 4);
        let (_, cert_h) = edge_connectivity(&h);
        // Bridge endpoints have degree 4 while the minimum degree is 3.
        assert!(matches!(
            check_claim_cost_bound(&h, &cert_h, Edge::new(0, 4)),
            Err(Error::InvalidCertificate(_))
        ));
    }

    #[test]
    fn star_bound_tight_on_a_bridge_of_cliques() {
        let g = two_cliques_bridge(5, 5);
        let (_, cert) = edge_connectivity(&g);
        let bridge = Edge::new(0, 5);
        assert_eq!(cert.cut_edges, vec![bridge]);
        let (w, bound) = star_cut_transport_bound(&g, &cert, bridge).unwrap();
        assert_eq!(w, rat_int(2));
        assert_eq!(bound, rat_int(2));
        assert!(check_star_cut_lower_bound(&g, &cert, bridge).unwrap());
    }

    #[test]
    fn star_bound_tight_on_an_uneven_bridge() {
        let g = two_cliques_bridge(4, 6);
        let (_, cert) = edge_connectivity(&g);
        let bridge = Edge::new(0, 4);
        let (w, bound) = star_cut_transport_bound(&g, &cert, bridge).unwrap();
        assert_eq!(w, rat(29, 15));
        assert_eq!(bound, rat(29, 15));
        assert!(check_star_cut_lower_bound(&g, &cert, bridge).unwrap());
    }

    /// A star cut with three edges: hub 0 against leaves {9, 10, 11}, the
    /// hub's own side a clique it partially touches, the leaf side a triangle
    /// plus a clique. `extra` controls how many clique vertices the hub sees,
    /// so the hub degree is `3 + extra`.
    fn three_edge_star_cut(extra: usize) -> (Graph, CutCertificate) {
        let mut edges = Vec::new();
        // Hub side: vertices 1..=5 form a clique.
        for i in 1..=5 {
            for j in i + 1..=5 {
                edges.push((i, j));
            }
        }
        for i in 1..=extra {
            edges.push((0, i));
        }
        // Leaf side: triangle 9,10,11, each leaf hooked into clique 6,7,8 + 12,13.
        for i in [6, 7, 8, 12, 13] {
            for j in [6, 7, 8, 12, 13] {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        edges.extend([(9, 10), (9, 11), (10, 11)]);
        edges.extend([(9, 6), (10, 7), (11, 8)]);
        edges.extend([(0, 9), (0, 10), (0, 11)]);
        let g = Graph::from_edges(14, &edges).unwrap();
        let cert = CutCertificate {
            cut_edges: vec![Edge::new(0, 9), Edge::new(0, 10), Edge::new(0, 11)],
            side_x: vec![0, 1, 2, 3, 4, 5],
            side_y: vec![6, 7, 8, 9, 10, 11, 12, 13],
            size: 3,
        };
        (g, cert)
    }

    #[test]
    fn star_bound_reaches_one_exactly_when_the_hub_degree_doubles_the_cut() {
        // A hub-side blob must hang on to the hub by at least as many edges
        // as the cut size, so a genuine star min cut forces the hub degree
        // to at least twice the cut size. Below that the cut stops being
        // minimum and the guard fires.
        let (g2, cert2) = three_edge_star_cut(2);
        assert_eq!(edge_connectivity(&g2).0, 2);
        assert!(matches!(
            star_cut_transport_bound(&g2, &cert2, Edge::new(0, 9)),
            Err(Error::InvalidCertificate(_))
        ));

        // At exactly twice the cut size the bound sits at 1.
        let (g3, cert3) = three_edge_star_cut(3);
        assert_eq!(edge_connectivity(&g3).0, 3);
        assert_eq!(g3.min_degree(), 4);
        let (w3, b3) = star_cut_transport_bound(&g3, &cert3, Edge::new(0, 9)).unwrap();
        assert_eq!(b3, rat_int(1));
        assert!(w3 >= b3);

        // Every extra hub edge pushes it past 1.
        let (g4, cert4) = three_edge_star_cut(4);
        assert_eq!(edge_connectivity(&g4).0, 3);
        let (w4, b4) = star_cut_transport_bound(&g4, &cert4, Edge::new(0, 9)).unwrap();
        assert!(b4 > rat_int(1));
        assert!(w4 >= b4);
    }

    #[test]
    fn star_bound_rejects_non_stars_and_tight_connectivity() {
        let g = prism();
        let cert = CutCertificate {
            cut_edges: vec![Edge::new(0, 3), Edge::new(1, 4), Edge::new(2, 5)],
            side_x: vec![0, 1, 2],
            side_y: vec![3, 4, 5],
            size: 3,
        };
        // Connectivity equals the minimum degree here.
        assert!(matches!(
            star_cut_transport_bound(&g, &cert, Edge::new(0, 3)),
            Err(Error::InvalidCertificate(_))
        ));
        // An edge that is not part of the cut.
        let (g2, cert2) = three_edge_star_cut(3);
        assert!(matches!(
            star_cut_transport_bound(&g2, &cert2, Edge::new(1, 2)),
            Err(Error::InvalidCertificate(_))
        ));
        // Two cliques joined by two disjoint edges: the min cut is 2K_2.
        let mut edges = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                edges.push((i, j));
                edges.push((6 + i, 6 + j));
            }
        }
        edges.extend([(0, 6), (1, 7)]);
        let g3 = Graph::from_edges(12, &edges).unwrap();
        let (kappa, cert3) = edge_connectivity(&g3);
        assert_eq!(kappa, 2);
        assert!(matches!(
            star_cut_transport_bound(&g3, &cert3, cert3.cut_edges[0]),
            Err(Error::NotAStarCut)
        ));
    }

    #[test]
    fn analysis_serializes_with_verdicts() {
        let g = prism();
        let analysis = analyze_cut(&g).unwrap();
        assert_eq!(analysis.edge_connectivity, 3);
        assert_eq!(analysis.edges.len(), 3);
        for row in &analysis.edges {
            assert_eq!(row.claim_holds, Some(true));
            assert!(row.prose_agrees);
            assert!(row.star_holds.is_none());
        }
        let text = serde_json::to_string(&analysis).unwrap();
        assert!(text.contains("\"edge_connectivity\":3"));

        let (g2, _) = three_edge_star_cut(3);
        let analysis2 = analyze_cut(&g2).unwrap();
        // The min cut found may or may not be the star cut; the analysis
        // must still be internally consistent.
        assert_eq!(analysis2.edge_connectivity, 3);
        assert_eq!(analysis2.cut_edges.len(), analysis2.edges.len());
    }
}
