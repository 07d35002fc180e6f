//! The edge-sphere bound for bipartite graphs, recognizers for the graphs
//! attaining it with equality, and an exhaustive census over all small
//! bipartite graphs that cross-validates both.

use std::collections::{BTreeMap, VecDeque};

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::canon::canonical_form;
use crate::error::Error;
use crate::graph::{complete_bipartite, Graph};
use crate::rational::{display, rat, Rational};
use crate::Result;

/// Largest edge count accepted by [`enumerate_bipartite_census`].
pub const BIPARTITE_CENSUS_BUDGET: usize = 8;

/// Shape of a bipartite graph relative to the equality classification.
///
/// The numeric parameter is always the edge count. `H1` is a perfect
/// matching; `H2` is two equal stars with both centers in one part; `H3` is
/// two equal stars with centers in opposite parts; `H4` is a double star
/// with adjacent equal-degree centers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RigidityClass {
    K22,
    H1(usize),
    H2(usize),
    H3(usize),
    H4(usize),
    Star,
    NotRigid,
    HasIsolated,
}

impl RigidityClass {
    /// Whether this tag belongs to the equality list.
    pub fn is_rigid(&self) -> bool {
        matches!(
            self,
            RigidityClass::K22
                | RigidityClass::H1(_)
                | RigidityClass::H2(_)
                | RigidityClass::H3(_)
                | RigidityClass::H4(_)
        )
    }
}

impl std::fmt::Display for RigidityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RigidityClass::K22 => write!(f, "K22"),
            RigidityClass::H1(n) => write!(f, "H1({n})"),
            RigidityClass::H2(n) => write!(f, "H2({n})"),
            RigidityClass::H3(n) => write!(f, "H3({n})"),
            RigidityClass::H4(n) => write!(f, "H4({n})"),
            RigidityClass::Star => write!(f, "Star"),
            RigidityClass::NotRigid => write!(f, "NotRigid"),
            RigidityClass::HasIsolated => write!(f, "HasIsolated"),
        }
    }
}

impl Serialize for RigidityClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Proper 2-coloring of `g`, if one exists.
fn two_color(g: &Graph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut color = vec![2u8; n];
    for start in 0..n {
        if color[start] != 2 {
            continue;
        }
        color[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == 2 {
                    color[w] = color[u] ^ 1;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Whether one vertex is incident to every edge.
pub fn is_star_graph(g: &Graph) -> bool {
    let m = g.edge_count();
    m >= 1 && (0..g.vertex_count()).any(|v| g.degree(v) == m)
}

/// Smallest edge sphere: `min` over edges of `deg(u) + deg(v) - 2`.
pub fn min_edge_star(h: &Graph) -> Result<u64> {
    let edges = h.edges();
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    Ok(edges
        .iter()
        .map(|e| (h.degree(e.u) + h.degree(e.v) - 2) as u64)
        .min()
        .expect("nonempty"))
}

/// Evaluates `min_edge_star(h) <= |E| - |V|/2` for a non-star bipartite
/// graph without isolated vertices, returning the verdict and the slack
/// `(|E| - |V|/2) - min_edge_star`.
pub fn check_bound(h: &Graph) -> Result<(bool, Rational)> {
    let n = h.vertex_count();
    if (0..n).any(|v| h.degree(v) == 0) {
        return Err(Error::HasIsolated);
    }
    if h.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    if two_color(h).is_none() {
        return Err(Error::NotBipartite);
    }
    if is_star_graph(h) {
        return Err(Error::StarGraph);
    }
    let min_star = min_edge_star(h)?;
    let slack = rat(h.edge_count() as i64, 1) - rat(n as i64, 2) - rat(min_star as i64, 1);
    Ok((slack >= Rational::zero(), slack))
}

/// A component that is a star: its center and leaf count. For a single edge
/// the center is arbitrary.
fn star_component(h: &Graph, verts: &[usize]) -> Option<(usize, usize)> {
    let centers: Vec<usize> = verts
        .iter()
        .copied()
        .filter(|&v| h.degree(v) >= 2)
        .collect();
    match (centers.len(), verts.len()) {
        (0, 2) => Some((verts[0], 1)),
        (1, l) => {
            let c = centers[0];
            (h.degree(c) == l - 1).then_some((c, l - 1))
        }
        _ => None,
    }
}

/// Structural recognition of `h` against the equality shapes, relative to
/// the given two-part coloring (`0`/`1` per vertex). Parameters report the
/// edge count.
pub fn classify(h: &Graph, part: &[u8]) -> Result<RigidityClass> {
    let n = h.vertex_count();
    if part.len() != n {
        return Err(Error::InvalidSpec(
            "bipartition length differs from the vertex count".into(),
        ));
    }
    if part.iter().any(|&s| s > 1) {
        return Err(Error::InvalidSpec("part labels must be 0 or 1".into()));
    }
    if h.edges().iter().any(|e| part[e.u] == part[e.v]) {
        return Err(Error::NotBipartite);
    }
    if n == 0 {
        return Ok(RigidityClass::NotRigid);
    }
    if (0..n).any(|v| h.degree(v) == 0) {
        return Ok(RigidityClass::HasIsolated);
    }
    let m = h.edge_count();
    if (0..n).all(|v| h.degree(v) == 1) {
        return Ok(RigidityClass::H1(m));
    }
    if n == 4 && m == 4 && (0..n).all(|v| h.degree(v) == 2) {
        return Ok(RigidityClass::K22);
    }
    let comps = h.connected_components();
    if comps.len() == 2 {
        if let (Some((c1, k1)), Some((c2, k2))) =
            (star_component(h, &comps[0]), star_component(h, &comps[1]))
        {
            // Equal leaf counts of at least 2; the k = 1 case is a perfect
            // matching and was recognized above.
            if k1 == k2 && k1 >= 2 {
                return Ok(if part[c1] == part[c2] {
                    RigidityClass::H2(m)
                } else {
                    RigidityClass::H3(m)
                });
            }
        }
    }
    if comps.len() == 1 {
        let centers: Vec<usize> = (0..n).filter(|&v| h.degree(v) >= 2).collect();
        if centers.len() == 2
            && h.has_edge(centers[0], centers[1])
            && h.degree(centers[0]) == h.degree(centers[1])
        {
            return Ok(RigidityClass::H4(m));
        }
        if centers.len() == 1 {
            return Ok(RigidityClass::Star);
        }
    }
    Ok(RigidityClass::NotRigid)
}

/// Perfect matching on `n + n` vertices, one endpoint per part.
pub fn h1(n: usize) -> Graph {
    assert!(n >= 1);
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, n + i)).collect();
    let part = (0..2 * n).map(|v| u8::from(v >= n)).collect();
    Graph::from_edges(2 * n, &edges)
        .expect("valid matching")
        .with_bipartition(part)
        .expect("parts cross")
}

/// Two `k`-leaf stars whose centers fill one part.
pub fn h2(k: usize) -> Graph {
    assert!(k >= 1);
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((0, 2 + i));
        edges.push((1, 2 + k + i));
    }
    let part = (0..2 + 2 * k).map(|v| u8::from(v >= 2)).collect();
    Graph::from_edges(2 + 2 * k, &edges)
        .expect("valid stars")
        .with_bipartition(part)
        .expect("parts cross")
}

/// Two `k`-leaf stars with centers in opposite parts.
pub fn h3(k: usize) -> Graph {
    assert!(k >= 1);
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((0, k + 2 + i));
        edges.push((k + 1, 1 + i));
    }
    let part = (0..2 * k + 2).map(|v| u8::from(v > k)).collect();
    Graph::from_edges(2 * k + 2, &edges)
        .expect("valid stars")
        .with_bipartition(part)
        .expect("parts cross")
}

/// Double star: adjacent centers with `k` private leaves each.
pub fn h4(k: usize) -> Graph {
    assert!(k >= 1);
    let mut edges = vec![(0, 1)];
    for i in 0..k {
        edges.push((0, 2 + i));
        edges.push((1, 2 + k + i));
    }
    let part = (0..2 + 2 * k)
        .map(|v| u8::from(v == 1 || (2..2 + k).contains(&v)))
        .collect();
    Graph::from_edges(2 + 2 * k, &edges)
        .expect("valid double star")
        .with_bipartition(part)
        .expect("parts cross")
}

/// The complete bipartite graph on 2 + 2 vertices.
pub fn k22() -> Graph {
    complete_bipartite(2, 2)
}

/// Every equality class with at most `max_edges` edges, one representative
/// each, deduplicated across the generator families (the two-star families
/// coincide with the perfect matching at two edges).
pub fn rigid_equality_classes(max_edges: usize) -> Result<Vec<Graph>> {
    let mut candidates = Vec::new();
    if max_edges >= 4 {
        candidates.push(k22());
    }
    for n in 2..=max_edges {
        candidates.push(h1(n));
    }
    let mut k = 1;
    while 2 * k <= max_edges {
        candidates.push(h2(k));
        candidates.push(h3(k));
        k += 1;
    }
    let mut k = 1;
    while 2 * k + 1 <= max_edges {
        candidates.push(h4(k));
        k += 1;
    }
    let mut seen: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    for g in candidates {
        let form = canonical_form(&g, true)?;
        seen.entry(form).or_insert(g);
    }
    Ok(seen.into_values().collect())
}

/// One isomorphism class in the bipartite census.
#[derive(Debug, Clone, Serialize)]
pub struct BipartiteCensusRow {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub min_edge_star: u64,
    pub is_star: bool,
    /// Absent for stars, which the bound does not cover.
    #[serde(with = "crate::rational::serde_repr_opt")]
    pub slack: Option<Rational>,
    pub class: RigidityClass,
    #[serde(skip_serializing)]
    pub graph: Graph,
}

/// Class count for one `(p, q, r)` shape.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ShapeCount {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub classes: usize,
}

/// Full census over bipartite graphs with no isolated vertices and at most
/// `max_edges` edges, one row per bipartition-respecting isomorphism class.
#[derive(Debug, Clone, Serialize)]
pub struct BipartiteCensus {
    pub max_edges: usize,
    pub class_count: usize,
    pub star_count: usize,
    /// Row indices of non-stars where the bound failed; must stay empty.
    pub bound_violations: Vec<usize>,
    /// Row indices where zero slack and a rigid tag disagree; must stay
    /// empty.
    pub equality_mismatches: Vec<usize>,
    pub shape_counts: Vec<ShapeCount>,
    pub rows: Vec<BipartiteCensusRow>,
}

impl BipartiteCensus {
    pub fn ok(&self) -> bool {
        self.bound_violations.is_empty() && self.equality_mismatches.is_empty()
    }

    /// The rows attaining the bound with equality.
    pub fn slack_zero_rows(&self) -> Vec<&BipartiteCensusRow> {
        self.rows
            .iter()
            .filter(|row| row.slack.as_ref().is_some_and(|s| s.is_zero()))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("census serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("p,q,r,min_edge_star,slack,class\n");
        for row in &self.rows {
            let slack = row.slack.as_ref().map(display).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                row.p, row.q, row.r, row.min_edge_star, slack, row.class
            ));
        }
        out
    }
}

/// Enumerates one `(p, q)` shape: biadjacency rows in nonincreasing order
/// (sorting rows is a relabeling of the first part), every row nonzero,
/// every column covered, at most `max_edges` total bits, deduplicated by
/// canonical form.
fn enumerate_shape(p: usize, q: usize, max_edges: usize) -> Result<BTreeMap<Vec<u8>, Graph>> {
    let full: u32 = (1 << q) - 1;
    let mut seen = BTreeMap::new();
    let mut rows: Vec<u32> = Vec::with_capacity(p);

    fn fill(
        p: usize,
        q: usize,
        max_edges: usize,
        full: u32,
        rows: &mut Vec<u32>,
        used: usize,
        covered: u32,
        seen: &mut BTreeMap<Vec<u8>, Graph>,
    ) -> Result<()> {
        if rows.len() == p {
            if covered != full {
                return Ok(());
            }
            let mut edges = Vec::with_capacity(used);
            for (i, &row) in rows.iter().enumerate() {
                for j in 0..q {
                    if row >> j & 1 == 1 {
                        edges.push((i, p + j));
                    }
                }
            }
            let part = (0..p + q).map(|v| u8::from(v >= p)).collect();
            let g = Graph::from_edges(p + q, &edges)?.with_bipartition(part)?;
            let form = canonical_form(&g, true)?;
            seen.entry(form).or_insert(g);
            return Ok(());
        }
        let rows_left = p - rows.len();
        let max_row = rows.last().copied().unwrap_or(full);
        for row in (1..=max_row).rev() {
            let bits = row.count_ones() as usize;
            if used + bits + (rows_left - 1) > max_edges {
                continue;
            }
            let new_covered = covered | row;
            let missing = (full & !new_covered).count_ones() as usize;
            if missing > max_edges - used - bits {
                continue;
            }
            rows.push(row);
            fill(p, q, max_edges, full, rows, used + bits, new_covered, seen)?;
            rows.pop();
        }
        Ok(())
    }

    fill(p, q, max_edges, full, &mut rows, 0, 0, &mut seen)?;
    Ok(seen)
}

/// Enumerates every bipartite isomorphism class within the edge budget,
/// checks the bound on each non-star, and tags each class. Shapes run
/// data-parallel; the report order is fixed by `(p, q)` and canonical form.
pub fn enumerate_bipartite_census(max_edges: usize) -> Result<BipartiteCensus> {
    if max_edges > BIPARTITE_CENSUS_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "bipartite census edge count".into(),
            limit: BIPARTITE_CENSUS_BUDGET,
        });
    }
    let shapes: Vec<(usize, usize)> = (1..=max_edges)
        .flat_map(|p| (p..=max_edges).map(move |q| (p, q)))
        .collect();
    let per_shape: Vec<BTreeMap<Vec<u8>, Graph>> = shapes
        .par_iter()
        .map(|&(p, q)| enumerate_shape(p, q, max_edges))
        .collect::<Result<Vec<_>>>()?;

    let mut census = BipartiteCensus {
        max_edges,
        class_count: 0,
        star_count: 0,
        bound_violations: Vec::new(),
        equality_mismatches: Vec::new(),
        shape_counts: Vec::new(),
        rows: Vec::new(),
    };
    for (&(p, q), classes) in shapes.iter().zip(per_shape) {
        let mut by_r: BTreeMap<usize, usize> = BTreeMap::new();
        for g in classes.into_values() {
            let r = g.edge_count();
            *by_r.entry(r).or_insert(0) += 1;
            let index = census.rows.len();
            let min_star = min_edge_star(&g)?;
            let star = is_star_graph(&g);
            let (slack, class) = if star {
                census.star_count += 1;
                (None, RigidityClass::Star)
            } else {
                let (holds, slack) = check_bound(&g)?;
                if !holds {
                    census.bound_violations.push(index);
                }
                let part = g.bipartition().expect("census graphs carry parts");
                let class = classify(&g, &part.to_vec())?;
                if slack.is_zero() != class.is_rigid() {
                    census.equality_mismatches.push(index);
                }
                (Some(slack), class)
            };
            census.rows.push(BipartiteCensusRow {
                p,
                q,
                r,
                min_edge_star: min_star,
                is_star: star,
                slack,
                class,
                graph: g,
            });
        }
        for (r, count) in by_r {
            census.shape_counts.push(ShapeCount {
                p,
                q,
                r,
                classes: count,
            });
        }
    }
    census.class_count = census.rows.len();
    Ok(census)
}
