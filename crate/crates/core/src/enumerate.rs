//! Exhaustive enumeration of small graphs up to isomorphism, plus the census
//! sweep that checks the curvature-connectivity laws on every connected
//! graph within a vertex budget.

use std::collections::BTreeMap;

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::connectivity::{
    all_min_cuts, check_claim_cost_bound, check_star_cut_lower_bound, cut_bipartite,
    cut_quantities, edge_connectivity, CutCertificate,
};
use crate::curvature::{curvature_profile, kappa_lly};
use crate::error::Error;
use crate::graph::Graph;
use crate::io::to_graph6_line;
use crate::Result;

/// Largest vertex count accepted by the enumerators.
pub const GRAPH_ENUM_BUDGET: usize = 7;

/// All graphs on exactly `n` vertices, one representative per isomorphism
/// class, ordered by canonical form.
///
/// Built inductively: every class on `n` vertices arises from some class on
/// `n - 1` vertices by adding one vertex with an arbitrary neighborhood, so
/// extending every smaller class by every subset and deduplicating is
/// exhaustive.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > GRAPH_ENUM_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "graph enumeration vertex count".into(),
            limit: GRAPH_ENUM_BUDGET,
        });
    }
    let mut current = vec![Graph::from_edges(n.min(1), &[]).expect("trivial graph")];
    for k in 2..=n {
        let extended: Vec<Vec<(Vec<u8>, Graph)>> = current
            .par_iter()
            .map(|g| {
                let base: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
                let mut local = Vec::with_capacity(1 << (k - 1));
                for subset in 0u32..(1 << (k - 1)) {
                    let mut edges = base.clone();
                    for v in 0..k - 1 {
                        if subset >> v & 1 == 1 {
                            edges.push((v, k - 1));
                        }
                    }
                    let candidate = Graph::from_edges(k, &edges).expect("valid extension");
                    let form = canonical_form(&candidate, false).expect("within budget");
                    local.push((form, candidate));
                }
                local
            })
            .collect();
        let mut seen: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for batch in extended {
            for (form, g) in batch {
                seen.entry(form).or_insert(g);
            }
        }
        current = seen.into_values().collect();
    }
    Ok(current)
}

/// The connected classes among [`all_graphs`].
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// One failed check in a census run, tied to its graph.
#[derive(Debug, Clone, Serialize)]
pub struct CensusCounterexample {
    pub graph6: String,
    pub detail: String,
}

/// Outcome of sweeping every connected graph up to `max_n` vertices.
///
/// The violation lists must all stay empty; anything in them is a
/// counterexample to a law the engines are supposed to certify.
#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub max_n: usize,
    pub exhaustive_cuts: bool,
    pub connected_classes: usize,
    /// Per vertex count: how many classes have a fully nonnegative profile.
    pub nonneg_by_n: Vec<(usize, usize)>,
    /// Nonnegative profile must force edge-connectivity = minimum degree.
    pub connectivity_violations: Vec<CensusCounterexample>,
    /// Cut edges checked against the sphere-size inequality
    /// `|S_1(e)| >= r - (p+q)/2` under nonnegative curvature at the edge.
    pub sphere_bound_checks: usize,
    pub sphere_bound_violations: Vec<CensusCounterexample>,
    /// Min-cut edges with both endpoints at minimum degree checked against
    /// the weighted cost bound.
    pub cost_bound_checks: usize,
    pub cost_bound_violations: Vec<CensusCounterexample>,
    /// Cut edges whose three linear count identities were recomputed.
    pub identity_checks: usize,
    /// Star-cut edges checked against the transport lower bound.
    pub star_bound_checks: usize,
    pub star_bound_violations: Vec<CensusCounterexample>,
}

impl CensusReport {
    pub fn ok(&self) -> bool {
        self.connectivity_violations.is_empty()
            && self.sphere_bound_violations.is_empty()
            && self.cost_bound_violations.is_empty()
            && self.star_bound_violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Default)]
struct GraphFindings {
    nonneg: bool,
    connectivity_violation: Option<String>,
    sphere_checks: usize,
    sphere_violations: Vec<String>,
    cost_checks: usize,
    cost_violations: Vec<String>,
    identity_checks: usize,
    star_checks: usize,
    star_violations: Vec<String>,
}

fn census_graph(g: &Graph, exhaustive_cuts: bool) -> Result<GraphFindings> {
    let mut out = GraphFindings::default();
    let profile = curvature_profile(g, true)?;
    out.nonneg = profile.nonnegative;
    let delta = g.min_degree();
    let (kappa, cert) = edge_connectivity(g);
    if profile.nonnegative && kappa != delta as u64 {
        out.connectivity_violation = Some(format!(
            "nonnegative profile but edge connectivity {kappa} != minimum degree {delta}"
        ));
    }
    let cuts: Vec<CutCertificate> = if exhaustive_cuts {
        all_min_cuts(g)?
    } else {
        vec![cert]
    };
    for cut in &cuts {
        if cut.cut_edges.is_empty() {
            continue;
        }
        let cb = cut_bipartite(g, cut)?;
        for e in &cut.cut_edges {
            let h_edge = cb.edge_of(*e).expect("cut edge maps into the cut graph");
            // The linear identities are asserted inside.
            let q = cut_quantities(&cb, h_edge)?;
            out.identity_checks += 1;
            if g.degree(e.u) != delta || g.degree(e.v) != delta {
                continue;
            }
            out.cost_checks += 1;
            if !check_claim_cost_bound(g, cut, *e)? {
                out.cost_violations
                    .push(format!("cost bound fails on edge ({}, {})", e.u, e.v));
            }
            if delta >= 2 && kappa as usize == delta - 1 {
                let k = kappa_lly(g, e.u, e.v)?;
                if !k.is_negative() {
                    out.sphere_checks += 1;
                    if 2 * q.s1_size as i64 + ((cb.p + cb.q) as i64) < 2 * (cb.r as i64) {
                        out.sphere_violations
                            .push(format!("sphere bound fails on edge ({}, {})", e.u, e.v));
                    }
                }
            }
        }
        if cb.p == 1 && (kappa as usize) < delta {
            for e in &cut.cut_edges {
                out.star_checks += 1;
                if !check_star_cut_lower_bound(g, cut, *e)? {
                    out.star_violations
                        .push(format!("star bound fails on edge ({}, {})", e.u, e.v));
                }
            }
        }
    }
    Ok(out)
}

/// Sweeps every connected graph class with at most `max_n` vertices,
/// checking the connectivity law for nonnegative profiles, the cut-edge
/// count identities, and the cost and transport bounds where their
/// hypotheses apply. `exhaustive_cuts` quantifies the cut checks over every
/// minimum cut instead of one witness.
pub fn connected_census(max_n: usize, exhaustive_cuts: bool) -> Result<CensusReport> {
    let mut report = CensusReport {
        max_n,
        exhaustive_cuts,
        connected_classes: 0,
        nonneg_by_n: Vec::new(),
        connectivity_violations: Vec::new(),
        sphere_bound_checks: 0,
        sphere_bound_violations: Vec::new(),
        cost_bound_checks: 0,
        cost_bound_violations: Vec::new(),
        identity_checks: 0,
        star_bound_checks: 0,
        star_bound_violations: Vec::new(),
    };
    for n in 1..=max_n {
        let graphs = connected_graphs(n)?;
        report.connected_classes += graphs.len();
        let findings: Vec<(String, GraphFindings)> = graphs
            .par_iter()
            .map(|g| census_graph(g, exhaustive_cuts).map(|f| (to_graph6_line(g), f)))
            .collect::<Result<Vec<_>>>()?;
        let mut nonneg = 0;
        for (graph6, f) in findings {
            if f.nonneg {
                nonneg += 1;
            }
            if let Some(detail) = f.connectivity_violation {
                report.connectivity_violations.push(CensusCounterexample {
                    graph6: graph6.clone(),
                    detail,
                });
            }
            report.sphere_bound_checks += f.sphere_checks;
            report.cost_bound_checks += f.cost_checks;
            report.identity_checks += f.identity_checks;
            report.star_bound_checks += f.star_checks;
            for detail in f.sphere_violations {
                report.sphere_bound_violations.push(CensusCounterexample {
                    graph6: graph6.clone(),
                    detail,
                });
            }
            for detail in f.cost_violations {
                report.cost_bound_violations.push(CensusCounterexample {
                    graph6: graph6.clone(),
                    detail,
                });
            }
            for detail in f.star_violations {
                report.star_bound_violations.push(CensusCounterexample {
                    graph6: graph6.clone(),
                    detail,
                });
            }
        }
        report.nonneg_by_n.push((n, nonneg));
    }
    Ok(report)
}
