//! Idleness curvature and Lin-Lu-Yau curvature of vertex pairs and edges.
//!
//! For a pair `x, y` and idleness `rho`, the curvature is
//! `1 - W(mu_x^rho, mu_y^rho) / d(x, y)`. The Lin-Lu-Yau curvature is the
//! slope of that function as `rho` approaches 1; near idleness 1 the
//! function is linear, so the slope is read off at a single evaluation
//! point inside the linear region and double-checked at two more points.
//! A failed check is reported as a distinct error, never masked.

use crate::rational::{rat, Rational};
use crate::transport::{vertex_measure, wasserstein};
use crate::{Edge, Error, Graph, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

/// Curvature of the pair `(x, y)` at idleness `rho`, exact.
pub fn kappa_rho(g: &Graph, x: usize, y: usize, rho: &Rational) -> Result<Rational> {
    if x == y {
        return Err(Error::EqualPair(x));
    }
    let d = g
        .distance(x, y)?
        .ok_or(Error::Disconnected { u: x, v: y })?;
    let mu = vertex_measure(g, x, rho)?;
    let nu = vertex_measure(g, y, rho)?;
    let (w, _) = wasserstein(g, &mu, &nu)?;
    Ok(Rational::one() - w / Rational::from_integer(BigInt::from(d)))
}

/// The idleness at which the Lin-Lu-Yau curvature of `(x, y)` is read off:
/// the larger of `1/(d_x + 1)` and `1/(d_y + 1)`.
pub fn evaluation_idleness(g: &Graph, x: usize, y: usize) -> Rational {
    let dm = g.degree(x).min(g.degree(y));
    rat(1, dm as i64 + 1)
}

/// Lin-Lu-Yau curvature of the edge `xy`.
///
/// Evaluates `kappa_rho / (1 - rho)` at the evaluation idleness and verifies
/// that the same ratio is obtained at `1/(max(d_x, d_y) + 1)` and at the
/// midpoint toward idleness 1; disagreement is a [`Error::LinearityViolation`].
pub fn kappa_lly(g: &Graph, x: usize, y: usize) -> Result<Rational> {
    if x == y {
        return Err(Error::EqualPair(x));
    }
    if !g.has_edge(x, y) {
        return Err(Error::NotAdjacent { u: x, v: y });
    }
    let rho_mid = evaluation_idleness(g, x, y);
    let ratio_at = |rho: &Rational| -> Result<Rational> {
        Ok(kappa_rho(g, x, y, rho)? / (Rational::one() - rho))
    };
    let value = ratio_at(&rho_mid)?;

    let dx = g.degree(x).max(g.degree(y));
    let rho_low = rat(1, dx as i64 + 1);
    let rho_high = (Rational::one() + &rho_mid) / rat(2, 1);
    for rho in [&rho_low, &rho_high] {
        if *rho == rho_mid {
            continue;
        }
        let check = ratio_at(rho)?;
        if check != value {
            return Err(Error::LinearityViolation {
                u: x.min(y),
                v: x.max(y),
                rho_a: rho_mid.clone(),
                ratio_a: value,
                rho_b: rho.clone(),
                ratio_b: check,
            });
        }
    }
    Ok(value)
}

/// Integer transport cost of an equal-degree edge: `(D + 1)` times the
/// Wasserstein distance between the two uniform neighborhood measures at
/// idleness `1/(D + 1)`.
pub fn cost_of_edge(g: &Graph, e: Edge) -> Result<u64> {
    if !g.has_edge(e.u, e.v) {
        return Err(Error::NotAnEdge { u: e.u, v: e.v });
    }
    let (du, dv) = (g.degree(e.u), g.degree(e.v));
    if du != dv {
        return Err(Error::UnequalDegrees {
            u: e.u,
            v: e.v,
            d_u: du,
            d_v: dv,
        });
    }
    let rho = rat(1, du as i64 + 1);
    let mu = vertex_measure(g, e.u, &rho)?;
    let nu = vertex_measure(g, e.v, &rho)?;
    let (w, _) = wasserstein(g, &mu, &nu)?;
    let scaled = w * rat(du as i64 + 1, 1);
    // Unit-mass transport between uniform neighborhoods: always an integer.
    Ok(crate::rational::to_u64(&scaled)
        .unwrap_or_else(|| panic!("edge cost {scaled} is not a non-negative integer")))
}

/// Closed form tying the curvature of an equal-degree edge to its integer
/// transport cost: `((D+1)/D) * (1 - cost / (D+1))`.
pub fn equal_degree_kappa(d: usize, cost: u64) -> Rational {
    let d = d as i64;
    rat(d + 1, d) * (Rational::one() - rat(cost as i64, d + 1))
}

/// One row of a whole-graph curvature report.
#[derive(Debug, Clone, Serialize)]
pub struct EdgeCurvatureRecord {
    pub edge: (usize, usize),
    pub d_u: usize,
    pub d_v: usize,
    #[serde(with = "crate::rational::serde_repr")]
    pub rho_used: Rational,
    #[serde(with = "crate::rational::serde_repr")]
    pub kappa_lly: Rational,
}

/// Per-edge Lin-Lu-Yau curvature of a connected graph.
#[derive(Debug, Clone, Serialize)]
pub struct CurvatureReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub edges: Vec<EdgeCurvatureRecord>,
    #[serde(with = "crate::rational::serde_repr_opt")]
    pub min_kappa: Option<Rational>,
    /// Whether every computed edge has non-negative curvature.
    pub nonnegative: bool,
    /// False when an early-exit scan stopped at the first negative edge.
    pub complete: bool,
}

impl CurvatureReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("u,v,d_u,d_v,rho,kappa_lly\n");
        for r in &self.edges {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.edge.0,
                r.edge.1,
                r.d_u,
                r.d_v,
                crate::rational::display(&r.rho_used),
                crate::rational::display(&r.kappa_lly),
            ));
        }
        out
    }
}

fn record_for(g: &Graph, e: Edge) -> Result<EdgeCurvatureRecord> {
    Ok(EdgeCurvatureRecord {
        edge: (e.u, e.v),
        d_u: g.degree(e.u),
        d_v: g.degree(e.v),
        rho_used: evaluation_idleness(g, e.u, e.v),
        kappa_lly: kappa_lly(g, e.u, e.v)?,
    })
}

/// Curvature of every edge of a connected graph.
///
/// With `early_exit` the edges are scanned in order and the report stops at
/// the first negative edge (flagged incomplete); otherwise all edges are
/// computed in parallel and reported in edge order.
pub fn curvature_profile(g: &Graph, early_exit: bool) -> Result<CurvatureReport> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let all = g.edges();
    let mut records = Vec::with_capacity(all.len());
    let mut complete = true;
    if early_exit {
        for &e in &all {
            let rec = record_for(g, e)?;
            let negative = rec.kappa_lly.is_negative();
            records.push(rec);
            if negative {
                complete = false;
                break;
            }
        }
    } else {
        records = all
            .par_iter()
            .map(|&e| record_for(g, e))
            .collect::<Result<Vec<_>>>()?;
    }
    let min_kappa = records.iter().map(|r| r.kappa_lly.clone()).min();
    let nonnegative = records.iter().all(|r| !r.kappa_lly.is_negative());
    Ok(CurvatureReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        edges: records,
        min_kappa,
        nonnegative,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen, star, Graph};
    use crate::rational::rat_int;

    #[test]
    fn idleness_one_is_flat() {
        let g = cycle(5);
        assert_eq!(kappa_rho(&g, 0, 1, &rat_int(1)).unwrap(), rat_int(0));
        assert_eq!(kappa_rho(&g, 0, 2, &rat_int(1)).unwrap(), rat_int(0));
    }

    #[test]
    fn kappa_rho_on_small_graphs() {
        let k3 = complete(3);
        assert_eq!(kappa_rho(&k3, 0, 1, &rat(1, 3)).unwrap(), rat_int(1));
        let c5 = cycle(5);
        assert_eq!(kappa_rho(&c5, 0, 1, &rat(1, 3)).unwrap(), rat(1, 3));
    }

    #[test]
    fn kappa_rho_rejects_bad_pairs() {
        let g = cycle(4);
        assert!(matches!(
            kappa_rho(&g, 1, 1, &rat(1, 2)),
            Err(Error::EqualPair(1))
        ));
        let h = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            kappa_rho(&h, 0, 2, &rat(1, 2)),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn complete_graph_closed_form() {
        for n in 3..=8usize {
            let g = complete(n);
            let k = kappa_lly(&g, 0, 1).unwrap();
            assert_eq!(k, rat(n as i64, n as i64 - 1));
        }
    }

    #[test]
    fn cycles_closed_form() {
        assert_eq!(kappa_lly(&cycle(4), 0, 1).unwrap(), rat_int(1));
        assert_eq!(kappa_lly(&cycle(5), 0, 1).unwrap(), rat(1, 2));
        for n in 6..=12usize {
            assert_eq!(kappa_lly(&cycle(n), 0, 1).unwrap(), rat_int(0));
        }
    }

    #[test]
    fn kappa_lly_requires_adjacency() {
        let g = cycle(5);
        assert!(matches!(
            kappa_lly(&g, 0, 2),
            Err(Error::NotAdjacent { u: 0, v: 2 })
        ));
    }

    #[test]
    fn edge_costs_on_cycles_and_cliques() {
        assert_eq!(cost_of_edge(&complete(3), Edge::new(0, 1)).unwrap(), 0);
        assert_eq!(cost_of_edge(&cycle(5), Edge::new(0, 1)).unwrap(), 2);
        assert_eq!(cost_of_edge(&cycle(6), Edge::new(0, 1)).unwrap(), 3);
        assert_eq!(cost_of_edge(&cycle(4), Edge::new(0, 1)).unwrap(), 1);
    }

    #[test]
    fn edge_cost_needs_equal_degrees() {
        let g = path(3);
        assert!(matches!(
            cost_of_edge(&g, Edge::new(0, 1)),
            Err(Error::UnequalDegrees { .. })
        ));
    }

    #[test]
    fn cost_formula_matches_curvature() {
        for g in [complete(5), cycle(4), cycle(5), cycle(6), petersen()] {
            for e in g.edges() {
                let d = g.degree(e.u);
                let cost = cost_of_edge(&g, e).unwrap();
                assert_eq!(
                    kappa_lly(&g, e.u, e.v).unwrap(),
                    equal_degree_kappa(d, cost)
                );
            }
        }
    }

    #[test]
    fn unequal_degree_edge_of_near_clique() {
        // K_4 minus one edge: the high-degree edge and the mixed-degree
        // edges form the two orbit classes.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(kappa_lly(&g, 0, 1).unwrap(), rat(4, 3));
        assert_eq!(kappa_lly(&g, 0, 2).unwrap(), rat_int(1));
        assert_eq!(kappa_lly(&g, 1, 3).unwrap(), rat_int(1));
    }

    #[test]
    fn star_edges_share_one_value() {
        let g = star(4);
        let report = curvature_profile(&g, false).unwrap();
        for r in &report.edges {
            assert_eq!(r.kappa_lly, rat(1, 2));
        }
        assert!(report.nonnegative && report.complete);
    }

    #[test]
    fn petersen_is_edge_transitive_flat() {
        let report = curvature_profile(&petersen(), false).unwrap();
        assert_eq!(report.edges.len(), 15);
        for r in &report.edges {
            assert_eq!(r.kappa_lly, rat_int(0));
        }
        assert_eq!(report.min_kappa, Some(rat_int(0)));
    }

    #[test]
    fn early_exit_stops_at_first_negative_edge() {
        // Two triangles joined by a bridge; the bridge has curvature -2/3.
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
            .unwrap();
        let scan = curvature_profile(&g, true).unwrap();
        assert!(!scan.complete && !scan.nonnegative);
        let last = scan.edges.last().unwrap();
        assert_eq!(last.edge, (2, 3));
        assert_eq!(last.kappa_lly, rat(-2, 3));

        let full = curvature_profile(&g, false).unwrap();
        assert!(full.complete && !full.nonnegative);
        assert_eq!(full.edges.len(), 7);
        assert_eq!(full.min_kappa, Some(rat(-2, 3)));
    }

    #[test]
    fn profile_requires_connected_input() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            curvature_profile(&g, false),
            Err(Error::DisconnectedGraph)
        ));
    }

    #[test]
    fn report_serialization_shapes() {
        let report = curvature_profile(&cycle(4), false).unwrap();
        let json = report.to_json();
        assert!(json.contains("\"edge\": ["));
        assert!(json.contains("\"num\": \"1\""));
        assert!(!json.contains("\"kappa_lly\": 1.0"));
        let csv = report.to_csv();
        assert!(csv.starts_with("u,v,d_u,d_v,rho,kappa_lly\n"));
        assert!(csv.contains("0,1,2,2,1/3,1"));
    }
}
