//! Generators for the infinite strip families with nonnegative curvature
//! and edge-connectivity one below the degree, viewed through finite
//! windows: matched clique strips, the point and clique-chain insertions,
//! and the two sparse four-regular and five-regular strip patterns.
//!
//! A window is never the infinite graph, so every result is filtered
//! through a per-edge certificate: an edge counts as interior only when its
//! local distance geometry does not change under widening the window.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bipartite::{classify, RigidityClass};
use crate::connectivity::{
    check_claim_cost_bound_with_delta, check_star_cut_lower_bound_with_delta, cut_bipartite,
    edge_connectivity_between, CutCertificate,
};
use crate::curvature::kappa_lly;
use crate::error::Error;
use crate::graph::{Edge, Graph};
use crate::rational::Rational;
use crate::Result;

/// Fewest layers a generated strip may have.
pub const MIN_LAYERS: usize = 3;

/// The three ways to split four layer vertices into two pairs, each pair
/// wired to one outer vertex of an inserted clique chain.
const KOP_PAIRINGS: [[[usize; 2]; 2]; 3] = [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]];

/// Base strip pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseFamily {
    /// Layers are `K_n` cliques joined by perfect matchings.
    Gn(usize),
    /// Layers are adjacent pairs `{a, b}` with `a~a'`, `a~b'`, `b~b'`
    /// between consecutive layers; four-regular in the interior.
    G3Star,
    /// Layers are `K_4`s `{h, m1, m2, t}` with `h~m1'`, `h~m2'`, `m1~t'`,
    /// `m2~t'` between consecutive layers; five-regular in the interior.
    G42,
    /// A finished truncation read from disk, with its interior declared by
    /// the file rather than certified here.
    FromFile(PathBuf),
}

/// An operation applied at one inter-layer gap of a `Gn` strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insert {
    /// Replace the matching at the gap by a new vertex adjacent to all `2n`
    /// former matching endpoints.
    POp { position: usize },
    /// Replace the four matching edges at a gap of a width-4 strip by a
    /// chain of `m` cliques `K_4` glued along disjoint edges, each end's
    /// outer edge wired to the neighboring layer by four edges.
    KOp { position: usize, m: usize },
}

impl Insert {
    pub fn position(&self) -> usize {
        match self {
            Insert::POp { position } | Insert::KOp { position, .. } => *position,
        }
    }

    fn shifted(&self, by: usize) -> Insert {
        match *self {
            Insert::POp { position } => Insert::POp {
                position: position + by,
            },
            Insert::KOp { position, m } => Insert::KOp {
                position: position + by,
                m,
            },
        }
    }
}

/// A family window: the base pattern, how many layers to realize, and the
/// gap operations to apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub base: BaseFamily,
    pub layers: usize,
    pub inserts: Vec<Insert>,
}

impl FamilySpec {
    pub fn gn(n: usize, layers: usize) -> FamilySpec {
        FamilySpec {
            base: BaseFamily::Gn(n),
            layers,
            inserts: Vec::new(),
        }
    }

    pub fn g3_star(layers: usize) -> FamilySpec {
        FamilySpec {
            base: BaseFamily::G3Star,
            layers,
            inserts: Vec::new(),
        }
    }

    pub fn g42(layers: usize) -> FamilySpec {
        FamilySpec {
            base: BaseFamily::G42,
            layers,
            inserts: Vec::new(),
        }
    }

    pub fn from_file(path: impl Into<PathBuf>) -> FamilySpec {
        FamilySpec {
            base: BaseFamily::FromFile(path.into()),
            layers: 0,
            inserts: Vec::new(),
        }
    }

    pub fn with_inserts(mut self, inserts: Vec<Insert>) -> FamilySpec {
        self.inserts = inserts;
        self
    }

    /// The same family through a window `extra` layers wider on each end;
    /// insert positions shift so they name the same gaps.
    pub fn extended(&self, extra: usize) -> FamilySpec {
        FamilySpec {
            base: self.base.clone(),
            layers: self.layers + 2 * extra,
            inserts: self.inserts.iter().map(|ins| ins.shifted(extra)).collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match &self.base {
            BaseFamily::FromFile(_) => {
                if !self.inserts.is_empty() {
                    return Err(Error::InvalidSpec(
                        "inserts cannot be applied to an ingested truncation".into(),
                    ));
                }
                return Ok(());
            }
            BaseFamily::Gn(n) if *n == 0 => {
                return Err(Error::InvalidSpec("layer width must be at least 1".into()));
            }
            _ => {}
        }
        if self.layers < MIN_LAYERS {
            return Err(Error::InvalidSpec(format!(
                "a strip needs at least {MIN_LAYERS} layers, got {}",
                self.layers
            )));
        }
        let mut last: Option<usize> = None;
        for ins in &self.inserts {
            if !matches!(self.base, BaseFamily::Gn(_)) {
                return Err(Error::InvalidSpec(
                    "inserts apply only to matched clique strips".into(),
                ));
            }
            let pos = ins.position();
            // Gaps sit between consecutive layers, so the last layer has
            // none after it.
            if pos + 2 > self.layers {
                return Err(Error::InvalidSpec(format!(
                    "insert position {pos} exceeds the last gap {}",
                    self.layers - 2
                )));
            }
            if last.is_some_and(|prev| pos <= prev) {
                return Err(Error::InvalidSpec(
                    "insert positions must be strictly increasing".into(),
                ));
            }
            last = Some(pos);
            if let Insert::KOp { m, .. } = ins {
                if self.base != BaseFamily::Gn(4) {
                    return Err(Error::InvalidSpec(
                        "clique-chain inserts require layer width 4".into(),
                    ));
                }
                if *m == 0 {
                    return Err(Error::InvalidSpec(
                        "a zero-length chain changes nothing; omit the insert".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Interior degree the family is supposed to realize; unknown for
    /// ingested truncations.
    pub fn claimed_degree(&self) -> Option<usize> {
        match self.base {
            BaseFamily::Gn(n) => Some(n + 1),
            BaseFamily::G3Star => Some(4),
            BaseFamily::G42 => Some(5),
            BaseFamily::FromFile(_) => None,
        }
    }

    pub fn from_json(text: &str) -> Result<FamilySpec> {
        let spec: FamilySpec =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("family spec serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct InsertRepr {
    op: String,
    position: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    base: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    layers: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    inserts: Vec<InsertRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    path: Option<String>,
}

impl From<&FamilySpec> for SpecRepr {
    fn from(spec: &FamilySpec) -> SpecRepr {
        let (base, n, path, layers) = match &spec.base {
            BaseFamily::Gn(n) => ("Gn", Some(*n), None, Some(spec.layers)),
            BaseFamily::G3Star => ("G3Star", None, None, Some(spec.layers)),
            BaseFamily::G42 => ("G42", None, None, Some(spec.layers)),
            BaseFamily::FromFile(p) => (
                "FromFile",
                None,
                Some(p.to_string_lossy().into_owned()),
                None,
            ),
        };
        SpecRepr {
            base: base.to_string(),
            n,
            layers,
            inserts: spec
                .inserts
                .iter()
                .map(|ins| match *ins {
                    Insert::POp { position } => InsertRepr {
                        op: "P".into(),
                        position,
                        m: None,
                    },
                    Insert::KOp { position, m } => InsertRepr {
                        op: "K".into(),
                        position,
                        m: Some(m),
                    },
                })
                .collect(),
            path,
        }
    }
}

impl SpecRepr {
    fn into_spec(self) -> Result<FamilySpec> {
        let base =
            match self.base.as_str() {
                "Gn" => BaseFamily::Gn(self.n.ok_or_else(|| {
                    Error::InvalidSpec("base \"Gn\" needs the field \"n\"".into())
                })?),
                "G3Star" => BaseFamily::G3Star,
                "G42" => BaseFamily::G42,
                "FromFile" => BaseFamily::FromFile(PathBuf::from(self.path.ok_or_else(|| {
                    Error::InvalidSpec("base \"FromFile\" needs the field \"path\"".into())
                })?)),
                other => {
                    return Err(Error::InvalidSpec(format!(
                        "unknown base \"{other}\"; expected Gn, G3Star, G42, or FromFile"
                    )))
                }
            };
        let mut inserts = Vec::with_capacity(self.inserts.len());
        for repr in self.inserts {
            inserts.push(match repr.op.as_str() {
                "P" => {
                    if repr.m.is_some() {
                        return Err(Error::InvalidSpec(
                            "\"m\" applies only to K operations".into(),
                        ));
                    }
                    Insert::POp {
                        position: repr.position,
                    }
                }
                "K" => Insert::KOp {
                    position: repr.position,
                    m: repr.m.ok_or_else(|| {
                        Error::InvalidSpec("K operations need the field \"m\"".into())
                    })?,
                },
                other => {
                    return Err(Error::InvalidSpec(format!(
                        "unknown insert op \"{other}\"; expected P or K"
                    )))
                }
            });
        }
        Ok(FamilySpec {
            base,
            layers: self.layers.unwrap_or(0),
            inserts,
        })
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpecRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        SpecRepr::deserialize(d)?
            .into_spec()
            .map_err(serde::de::Error::custom)
    }
}

/// A finite window onto an infinite strip: the realized graph plus the set
/// of edges whose local geometry is already the infinite one.
#[derive(Debug, Clone)]
pub struct TruncatedGraph {
    pub graph: Graph,
    pub interior_edges: BTreeSet<Edge>,
    /// Strip blocks at each end that no interior edge touches.
    pub boundary_margin: usize,
}

/// One contiguous slice of the strip, in vertex order.
#[derive(Debug, Clone)]
enum Block {
    Layer(Vec<usize>),
    Hub(usize),
    Pair([usize; 2]),
}

impl Block {
    fn len(&self) -> usize {
        match self {
            Block::Layer(v) => v.len(),
            Block::Hub(_) => 1,
            Block::Pair(_) => 2,
        }
    }

    fn vertices(&self) -> Vec<usize> {
        match self {
            Block::Layer(v) => v.clone(),
            Block::Hub(u) => vec![*u],
            Block::Pair(p) => p.to_vec(),
        }
    }
}

#[derive(Debug, Clone)]
struct Layout {
    width: usize,
    blocks: Vec<Block>,
}

struct Assembled {
    graph: Graph,
    layout: Option<Layout>,
    declared_interior: Option<BTreeSet<Edge>>,
    declared_margin: usize,
}

/// On-disk shape of an ingested truncation.
#[derive(Serialize, Deserialize)]
struct TruncationFile {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    interior_edges: Vec<(usize, usize)>,
    #[serde(default)]
    boundary_margin: usize,
}

/// What the gap left of the current layer expects to be wired to.
enum Gap {
    Plain(Vec<usize>),
    Hub(usize),
    Chain([usize; 2]),
}

fn gn_strip(
    n: usize,
    layers: usize,
    inserts: &[Insert],
    left_choice: usize,
    right_choice: usize,
) -> Result<(Graph, Layout)> {
    let insert_at: BTreeMap<usize, &Insert> =
        inserts.iter().map(|ins| (ins.position(), ins)).collect();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();
    let mut next = 0usize;
    let mut pending: Option<Gap> = None;
    for layer_idx in 0..layers {
        let cur: Vec<usize> = (next..next + n).collect();
        next += n;
        for i in 0..n {
            for j in i + 1..n {
                edges.push((cur[i], cur[j]));
            }
        }
        match pending.take() {
            None => {}
            Some(Gap::Plain(prev)) => {
                for i in 0..n {
                    edges.push((prev[i], cur[i]));
                }
            }
            Some(Gap::Hub(u)) => {
                for &v in &cur {
                    edges.push((u, v));
                }
            }
            Some(Gap::Chain(pair)) => {
                let wiring = KOP_PAIRINGS[right_choice];
                for (outer, targets) in pair.iter().zip(wiring) {
                    for t in targets {
                        edges.push((*outer, cur[t]));
                    }
                }
            }
        }
        blocks.push(Block::Layer(cur.clone()));
        if layer_idx + 1 == layers {
            break;
        }
        pending = Some(match insert_at.get(&layer_idx) {
            None => Gap::Plain(cur),
            Some(Insert::POp { .. }) => {
                let u = next;
                next += 1;
                for &v in &cur {
                    edges.push((u, v));
                }
                blocks.push(Block::Hub(u));
                Gap::Hub(u)
            }
            Some(Insert::KOp { m, .. }) => {
                let mut pair = [next, next + 1];
                next += 2;
                let wiring = KOP_PAIRINGS[left_choice];
                for (outer, targets) in pair.iter().zip(wiring) {
                    for t in targets {
                        edges.push((cur[t], *outer));
                    }
                }
                edges.push((pair[0], pair[1]));
                blocks.push(Block::Pair(pair));
                for _ in 0..*m {
                    let fresh = [next, next + 1];
                    next += 2;
                    edges.push((fresh[0], fresh[1]));
                    for &x in &pair {
                        for &y in &fresh {
                            edges.push((x, y));
                        }
                    }
                    blocks.push(Block::Pair(fresh));
                    pair = fresh;
                }
                Gap::Chain(pair)
            }
        });
    }
    Ok((
        Graph::from_edges(next, &edges)?,
        Layout { width: n, blocks },
    ))
}

fn pattern_strip(
    width: usize,
    layers: usize,
    intra: &[(usize, usize)],
    inter: &[(usize, usize)],
) -> Result<(Graph, Layout)> {
    let mut edges = Vec::new();
    let mut blocks = Vec::new();
    for i in 0..layers {
        let base = i * width;
        for &(a, b) in intra {
            edges.push((base + a, base + b));
        }
        if i + 1 < layers {
            for &(a, b) in inter {
                edges.push((base + a, base + width + b));
            }
        }
        blocks.push(Block::Layer((base..base + width).collect()));
    }
    Ok((
        Graph::from_edges(width * layers, &edges)?,
        Layout { width, blocks },
    ))
}

fn read_truncation(path: &PathBuf) -> Result<Assembled> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let file: TruncationFile =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let graph = Graph::from_edges(file.vertex_count, &file.edges)?;
    let mut interior = BTreeSet::new();
    for &(u, v) in &file.interior_edges {
        if !graph.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        interior.insert(Edge::new(u, v));
    }
    Ok(Assembled {
        graph,
        layout: None,
        declared_interior: Some(interior),
        declared_margin: file.boundary_margin,
    })
}

fn assemble(spec: &FamilySpec, left_choice: usize, right_choice: usize) -> Result<Assembled> {
    spec.validate()?;
    let (graph, layout) = match &spec.base {
        BaseFamily::Gn(n) => gn_strip(*n, spec.layers, &spec.inserts, left_choice, right_choice)?,
        BaseFamily::G3Star => pattern_strip(2, spec.layers, &[(0, 1)], &[(0, 0), (0, 1), (1, 1)])?,
        BaseFamily::G42 => pattern_strip(
            4,
            spec.layers,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )?,
        BaseFamily::FromFile(path) => return read_truncation(path),
    };
    Ok(Assembled {
        graph,
        layout: Some(layout),
        declared_interior: None,
        declared_margin: 0,
    })
}

fn distance_table(g: &Graph) -> Result<Vec<Vec<Option<usize>>>> {
    (0..g.vertex_count()).map(|v| g.bfs_distances(v)).collect()
}

/// Edges whose unit balls and all pairwise distances inside them survive
/// widening the window by one layer on each end; `shift` maps a vertex of
/// the narrow window into the wide one.
fn certified_edges(g: &Graph, wide: &Graph, shift: usize) -> Result<BTreeSet<Edge>> {
    let near = distance_table(g)?;
    let far = distance_table(wide)?;
    let mut out = BTreeSet::new();
    'edges: for e in g.edges() {
        let mut ball: BTreeSet<usize> = BTreeSet::new();
        let mut wide_ball: BTreeSet<usize> = BTreeSet::new();
        for c in [e.u, e.v] {
            ball.insert(c);
            ball.extend(g.neighbors(c).iter().copied());
            wide_ball.insert(c + shift);
            wide_ball.extend(wide.neighbors(c + shift).iter().copied());
        }
        if ball
            .iter()
            .map(|&v| v + shift)
            .ne(wide_ball.iter().copied())
        {
            continue;
        }
        let members: Vec<usize> = ball.into_iter().collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if near[a][b] != far[a + shift][b + shift] {
                    continue 'edges;
                }
            }
        }
        out.insert(e);
    }
    Ok(out)
}

fn margin_in_blocks(layout: &Layout, n: usize, interior: &BTreeSet<Edge>) -> usize {
    let count = layout.blocks.len();
    let mut slot = vec![0usize; n];
    for (i, b) in layout.blocks.iter().enumerate() {
        for v in b.vertices() {
            slot[v] = i;
        }
    }
    let mut lo = None;
    let mut hi = None;
    for e in interior {
        for v in [e.u, e.v] {
            let s = slot[v];
            lo = Some(lo.map_or(s, |l: usize| l.min(s)));
            hi = Some(hi.map_or(s, |h: usize| h.max(s)));
        }
    }
    match (lo, hi) {
        (Some(lo), Some(hi)) => lo.min(count - 1 - hi),
        _ => count,
    }
}

fn generate_with_pairings(
    spec: &FamilySpec,
    left_choice: usize,
    right_choice: usize,
) -> Result<TruncatedGraph> {
    let assembled = assemble(spec, left_choice, right_choice)?;
    match &assembled.layout {
        Some(layout) => {
            let wide = assemble(&spec.extended(1), left_choice, right_choice)?;
            let interior = certified_edges(&assembled.graph, &wide.graph, layout.width)?;
            let margin = margin_in_blocks(layout, assembled.graph.vertex_count(), &interior);
            Ok(TruncatedGraph {
                graph: assembled.graph,
                interior_edges: interior,
                boundary_margin: margin,
            })
        }
        None => Ok(TruncatedGraph {
            graph: assembled.graph,
            interior_edges: assembled.declared_interior.unwrap_or_default(),
            boundary_margin: assembled.declared_margin,
        }),
    }
}

/// Realizes the window described by `spec` and certifies its interior.
pub fn generate(spec: &FamilySpec) -> Result<TruncatedGraph> {
    generate_with_pairings(spec, 0, 0)
}

/// Recomputes the certified interior of `t`, first checking that `t` really
/// is the window `spec` describes.
pub fn certify_interior(spec: &FamilySpec, t: &TruncatedGraph) -> Result<BTreeSet<Edge>> {
    let fresh = generate(spec)?;
    if fresh.graph != t.graph {
        return Err(Error::InvalidSpec(
            "truncation does not match the family it claims to come from".into(),
        ));
    }
    Ok(fresh.interior_edges)
}

/// Vertices all of whose incident edges are certified interior.
pub fn interior_vertices(g: &Graph, interior: &BTreeSet<Edge>) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| {
            let nbrs = g.neighbors(v);
            !nbrs.is_empty() && nbrs.iter().all(|&w| interior.contains(&Edge::new(v, w)))
        })
        .collect()
}

/// Facts checked on a star-shaped interior cut: the hub degree is twice the
/// cut size, every leaf has degree one above the cut size, the leaves are
/// pairwise adjacent, and the transport lower bound holds on each cut edge.
#[derive(Debug, Clone, Serialize)]
pub struct StarCutReport {
    pub hub: usize,
    pub hub_degree: usize,
    pub hub_degree_is_twice_cut: bool,
    pub leaf_degrees_ok: bool,
    pub leaves_complete: bool,
    pub bound_ok: bool,
}

impl StarCutReport {
    pub fn ok(&self) -> bool {
        self.hub_degree_is_twice_cut
            && self.leaf_degrees_ok
            && self.leaves_complete
            && self.bound_ok
    }
}

/// Verdicts for one interior inter-block cut of a strip window.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyCutReport {
    /// Number of strip blocks on the small-index side of the cut.
    pub left_blocks: usize,
    pub cut_size: u64,
    pub expected_size: u64,
    /// Smallest edge cut separating the interior halves.
    pub separation: u64,
    pub is_minimum_separator: bool,
    pub h_p: usize,
    pub h_q: usize,
    pub h_class: RigidityClass,
    /// Star cuts are judged by `star` instead of the rigid list.
    pub rigid_ok: bool,
    pub sides_complete: bool,
    pub claim_checked: usize,
    pub claim_ok: bool,
    pub star: Option<StarCutReport>,
    pub ok: bool,
}

/// One clique-chain wiring variant in the exhaustive-pairing mode.
#[derive(Debug, Clone, Serialize)]
pub struct KopPairingVariant {
    pub left: usize,
    pub right: usize,
    pub certified_edges: usize,
    pub all_nonnegative: bool,
    #[serde(with = "crate::rational::serde_repr_opt")]
    pub min_curvature: Option<Rational>,
}

/// Curvature comparison across every chain wiring; the wirings produce
/// isomorphic windows, so the certified curvature multisets must coincide.
#[derive(Debug, Clone, Serialize)]
pub struct KopPairingReport {
    pub variants: Vec<KopPairingVariant>,
    pub curvature_agrees: bool,
}

/// Everything `verify_family` established about one window.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub spec: FamilySpec,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub certified_edges: usize,
    pub interior_vertex_count: usize,
    pub claimed_degree: Option<usize>,
    pub interior_min_degree: usize,
    pub interior_max_degree: usize,
    pub degree_ok: bool,
    #[serde(with = "crate::rational::serde_repr_opt")]
    pub min_curvature: Option<Rational>,
    pub negative_edges: Vec<(usize, usize)>,
    pub cuts: Vec<FamilyCutReport>,
    pub kop_pairings: Option<KopPairingReport>,
    pub ok: bool,
}

impl FamilyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("family report serializes")
    }
}

fn check_cut_position(
    g: &Graph,
    prefix: usize,
    left_blocks: usize,
    interior_mask: &[bool],
    certified: &BTreeSet<Edge>,
    claimed: usize,
) -> Result<Option<FamilyCutReport>> {
    let n = g.vertex_count();
    let crossing: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|e| (e.u < prefix) != (e.v < prefix))
        .collect();
    if crossing.is_empty() || !crossing.iter().all(|e| certified.contains(e)) {
        return Ok(None);
    }
    let left: Vec<usize> = (0..prefix).filter(|&v| interior_mask[v]).collect();
    let right: Vec<usize> = (prefix..n).filter(|&v| interior_mask[v]).collect();
    if left.is_empty() || right.is_empty() {
        return Ok(None);
    }
    let cert = CutCertificate {
        cut_edges: crossing.clone(),
        side_x: (0..prefix).collect(),
        side_y: (prefix..n).collect(),
        size: crossing.len() as u64,
    };
    let (separation, _) = edge_connectivity_between(g, &left, &right)?;
    let cb = cut_bipartite(g, &cert)?;
    let part =
        cb.h.bipartition()
            .expect("cut graphs carry a bipartition")
            .to_vec();
    let h_class = classify(&cb.h, &part)?;
    let star_shaped = cb.p == 1;
    let star = if star_shaped {
        let hub = cb.back_map[0];
        let leaves: Vec<usize> = cb.back_map[1..].to_vec();
        let mut bound_ok = true;
        for e in &crossing {
            bound_ok &= check_star_cut_lower_bound_with_delta(g, &cert, *e, claimed)?;
        }
        Some(StarCutReport {
            hub,
            hub_degree: g.degree(hub),
            hub_degree_is_twice_cut: g.degree(hub) == 2 * cb.r,
            leaf_degrees_ok: leaves.iter().all(|&y| g.degree(y) == cb.r + 1),
            leaves_complete: g.is_clique(&leaves),
            bound_ok,
        })
    } else {
        None
    };
    let rigid_ok = star_shaped || h_class.is_rigid();
    let sides_complete = g.is_clique(&cb.back_map[..cb.p]) && g.is_clique(&cb.back_map[cb.p..]);
    let mut claim_checked = 0;
    let mut claim_ok = true;
    for e in &crossing {
        if g.degree(e.u) == claimed && g.degree(e.v) == claimed {
            claim_checked += 1;
            claim_ok &= check_claim_cost_bound_with_delta(g, &cert, *e, claimed)?;
        }
    }
    let expected_size = claimed as u64 - 1;
    let is_minimum_separator = separation == cert.size;
    let ok = cert.size == expected_size
        && is_minimum_separator
        && rigid_ok
        && sides_complete
        && claim_ok
        && star.as_ref().map_or(true, StarCutReport::ok);
    Ok(Some(FamilyCutReport {
        left_blocks,
        cut_size: cert.size,
        expected_size,
        separation,
        is_minimum_separator,
        h_p: cb.p,
        h_q: cb.q,
        h_class,
        rigid_ok,
        sides_complete,
        claim_checked,
        claim_ok,
        star,
        ok,
    }))
}

fn verify_with_pairings(
    spec: &FamilySpec,
    left_choice: usize,
    right_choice: usize,
) -> Result<FamilyReport> {
    let assembled = assemble(spec, left_choice, right_choice)?;
    let g = &assembled.graph;
    let interior = match &assembled.layout {
        Some(layout) => {
            let wide = assemble(&spec.extended(1), left_choice, right_choice)?;
            certified_edges(g, &wide.graph, layout.width)?
        }
        None => assembled.declared_interior.clone().unwrap_or_default(),
    };
    if interior.is_empty() {
        return Err(Error::InvalidSpec(
            "window has no certified interior edges; add layers".into(),
        ));
    }
    let inner = interior_vertices(g, &interior);
    if inner.is_empty() {
        return Err(Error::InvalidSpec(
            "window has no interior vertices; add layers".into(),
        ));
    }
    let claimed = spec.claimed_degree();
    let interior_min_degree = inner.iter().map(|&v| g.degree(v)).min().expect("nonempty");
    let interior_max_degree = inner.iter().map(|&v| g.degree(v)).max().expect("nonempty");
    let degree_ok = claimed.is_none_or(|d| interior_min_degree == d);

    let edges: Vec<Edge> = interior.iter().copied().collect();
    let kappas: Vec<(Edge, Rational)> = edges
        .par_iter()
        .map(|e| kappa_lly(g, e.u, e.v).map(|k| (*e, k)))
        .collect::<Result<_>>()?;
    let negative_edges: Vec<(usize, usize)> = kappas
        .iter()
        .filter(|(_, k)| k.is_negative())
        .map(|(e, _)| (e.u, e.v))
        .collect();
    let min_curvature = kappas.iter().map(|(_, k)| k.clone()).min();

    let mut cuts = Vec::new();
    if let (Some(layout), Some(claimed)) = (&assembled.layout, claimed) {
        let mut interior_mask = vec![false; g.vertex_count()];
        for &v in &inner {
            interior_mask[v] = true;
        }
        let mut prefix = 0;
        for (i, block) in layout
            .blocks
            .iter()
            .enumerate()
            .take(layout.blocks.len() - 1)
        {
            prefix += block.len();
            if let Some(report) =
                check_cut_position(g, prefix, i + 1, &interior_mask, &interior, claimed)?
            {
                cuts.push(report);
            }
        }
    }

    let ok = degree_ok && negative_edges.is_empty() && cuts.iter().all(|c| c.ok);
    Ok(FamilyReport {
        spec: spec.clone(),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        certified_edges: interior.len(),
        interior_vertex_count: inner.len(),
        claimed_degree: claimed,
        interior_min_degree,
        interior_max_degree,
        degree_ok,
        min_curvature,
        negative_edges,
        cuts,
        kop_pairings: None,
        ok,
    })
}

/// Runs every chain wiring and compares the certified curvature multisets;
/// when a window holds several chains, one wiring choice applies to all of
/// them at once.
pub fn kop_pairing_report(spec: &FamilySpec) -> Result<KopPairingReport> {
    spec.validate()?;
    if !spec
        .inserts
        .iter()
        .any(|ins| matches!(ins, Insert::KOp { .. }))
    {
        return Err(Error::InvalidSpec(
            "no clique-chain inserts whose wiring could vary".into(),
        ));
    }
    let mut variants = Vec::new();
    let mut multisets: Vec<Vec<Rational>> = Vec::new();
    for left in 0..KOP_PAIRINGS.len() {
        for right in 0..KOP_PAIRINGS.len() {
            let t = generate_with_pairings(spec, left, right)?;
            let kappas: Vec<Rational> = t
                .interior_edges
                .par_iter()
                .map(|e| kappa_lly(&t.graph, e.u, e.v))
                .collect::<Result<_>>()?;
            let mut sorted = kappas.clone();
            sorted.sort();
            variants.push(KopPairingVariant {
                left,
                right,
                certified_edges: t.interior_edges.len(),
                all_nonnegative: sorted.first().map_or(true, |k| !k.is_negative()),
                min_curvature: sorted.first().cloned(),
            });
            multisets.push(sorted);
        }
    }
    let curvature_agrees = multisets.windows(2).all(|w| w[0] == w[1]);
    Ok(KopPairingReport {
        variants,
        curvature_agrees,
    })
}

/// Generates the window, certifies its interior, and checks the family
/// contract: nonnegative interior curvature, the advertised interior
/// degree, and for each interior cut the expected size, minimality, the
/// shape of its cut graph, complete sides, and the cost inequality on its
/// equal-degree edges. Star cuts get the hub facts and the transport bound
/// instead of a rigid-shape verdict. Windows with clique chains also
/// compare all chain wirings.
pub fn verify_family(spec: &FamilySpec) -> Result<FamilyReport> {
    let mut report = verify_with_pairings(spec, 0, 0)?;
    if spec
        .inserts
        .iter()
        .any(|ins| matches!(ins, Insert::KOp { .. }))
    {
        report.kop_pairings = Some(kop_pairing_report(spec)?);
    }
    Ok(report)
}
