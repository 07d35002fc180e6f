//! Exact Wasserstein-1 distance between finitely supported probability
//! measures on a graph.
//!
//! Measures are scaled by the least common multiple of their mass
//! denominators, the resulting integer transportation problem is solved by
//! successive shortest augmenting paths over the residual network, and the
//! answer is unscaled. Costs are global BFS distances. Every solve also
//! produces a dual certificate (a feasible potential pair whose objective
//! equals the primal cost), so optimality is checkable after the fact.

use crate::rational::{denominator_lcm, Rational};
use crate::{Error, Graph, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Finitely supported probability measure on the vertices of a graph.
/// Entries with zero mass are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    support: BTreeMap<usize, Rational>,
}

impl Measure {
    /// Build from (vertex, mass) pairs; masses must be non-negative and sum
    /// to exactly 1, and vertices must exist in `g`.
    pub fn new(g: &Graph, masses: impl IntoIterator<Item = (usize, Rational)>) -> Result<Measure> {
        let mut support = BTreeMap::new();
        for (v, mass) in masses {
            if v >= g.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: g.vertex_count(),
                });
            }
            if mass.is_negative() {
                return Err(Error::NegativeMass { vertex: v, mass });
            }
            if !mass.is_zero() {
                *support.entry(v).or_insert_with(Rational::zero) += mass;
            }
        }
        let total: Rational = support.values().sum();
        if !total.is_one() {
            return Err(Error::BadTotalMass(total));
        }
        Ok(Measure { support })
    }

    pub fn mass(&self, v: usize) -> Rational {
        self.support.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    /// Support as sorted (vertex, mass) pairs.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.support.iter().map(|(&v, m)| (v, m))
    }

    pub fn support_vertices(&self) -> Vec<usize> {
        self.support.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }
}

/// The neighborhood measure of `x` at idleness `rho`: mass `rho` stays at
/// `x`, the rest spreads uniformly over the neighbors.
pub fn vertex_measure(g: &Graph, x: usize, rho: &Rational) -> Result<Measure> {
    if x >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            vertex_count: g.vertex_count(),
        });
    }
    if rho.is_negative() || rho > &Rational::one() {
        return Err(Error::IdlenessOutOfRange(rho.clone()));
    }
    let d = g.degree(x);
    let mut masses = vec![(x, rho.clone())];
    if !rho.is_one() {
        if d == 0 {
            return Err(Error::IsolatedVertex(x));
        }
        let share = (Rational::one() - rho) / Rational::from_integer(BigInt::from(d));
        for &w in g.neighbors(x) {
            masses.push((w, share.clone()));
        }
    }
    Measure::new(g, masses)
}

/// A transport plan between two measures: sparse matrix entries plus the
/// exact cost `sum d(x, y) * mass(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportPlan {
    pub entries: BTreeMap<(usize, usize), Rational>,
    pub cost: Rational,
}

impl TransportPlan {
    /// Row and column marginals of the plan.
    pub fn marginals(&self) -> (BTreeMap<usize, Rational>, BTreeMap<usize, Rational>) {
        let mut rows: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut cols: BTreeMap<usize, Rational> = BTreeMap::new();
        for (&(x, y), mass) in &self.entries {
            *rows.entry(x).or_insert_with(Rational::zero) += mass;
            *cols.entry(y).or_insert_with(Rational::zero) += mass;
        }
        (rows, cols)
    }

    fn matches(&self, mu1: &Measure, mu2: &Measure) -> bool {
        let (rows, cols) = self.marginals();
        rows.iter().all(|(&v, m)| mu1.mass(v) == *m)
            && cols.iter().all(|(&v, m)| mu2.mass(v) == *m)
            && mu1.entries().all(|(v, m)| rows.get(&v) == Some(m))
            && mu2.entries().all(|(v, m)| cols.get(&v) == Some(m))
    }
}

/// Dual optimality certificate: potentials `phi` on the first support and
/// `psi` on the second with `phi(x) + psi(y) <= d(x, y)` for every support
/// pair, and `sum mu1 phi + sum mu2 psi` equal to the transport cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCertificate {
    pub phi: BTreeMap<usize, Rational>,
    pub psi: BTreeMap<usize, Rational>,
}

impl DualCertificate {
    pub fn objective(&self, mu1: &Measure, mu2: &Measure) -> Rational {
        let a: Rational = mu1.entries().map(|(v, m)| m * &self.phi[&v]).sum();
        let b: Rational = mu2.entries().map(|(v, m)| m * &self.psi[&v]).sum();
        a + b
    }

    /// Feasibility against the cost matrix: `phi + psi <= d` on all pairs.
    pub fn is_feasible(&self, costs: &CostMatrix) -> bool {
        costs.xs.iter().enumerate().all(|(i, &x)| {
            costs.ys.iter().enumerate().all(|(j, &y)| {
                &self.phi[&x] + &self.psi[&y]
                    <= Rational::from_integer(BigInt::from(costs.dist[i][j]))
            })
        })
    }
}

/// Pairwise BFS distances between two support sets.
pub struct CostMatrix {
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
    pub dist: Vec<Vec<usize>>,
}

/// Build the support-pair distance matrix, failing if any pair is
/// disconnected.
pub fn cost_matrix(g: &Graph, mu1: &Measure, mu2: &Measure) -> Result<CostMatrix> {
    let xs = mu1.support_vertices();
    let ys = mu2.support_vertices();
    let mut dist = Vec::with_capacity(xs.len());
    for &x in &xs {
        let d = g.bfs_distances(x)?;
        let mut row = Vec::with_capacity(ys.len());
        for &y in &ys {
            row.push(d[y].ok_or(Error::Disconnected { u: x, v: y })?);
        }
        dist.push(row);
    }
    Ok(CostMatrix { xs, ys, dist })
}

/// Exact Wasserstein-1 distance with a witnessing optimal plan.
pub fn wasserstein(g: &Graph, mu1: &Measure, mu2: &Measure) -> Result<(Rational, TransportPlan)> {
    let (value, plan, _) = wasserstein_certified(g, mu1, mu2)?;
    Ok((value, plan))
}

/// Exact Wasserstein-1 distance with plan and dual certificate.
pub fn wasserstein_certified(
    g: &Graph,
    mu1: &Measure,
    mu2: &Measure,
) -> Result<(Rational, TransportPlan, DualCertificate)> {
    let costs = cost_matrix(g, mu1, mu2)?;
    let scale = denominator_lcm(
        mu1.entries()
            .map(|(_, m)| m)
            .chain(mu2.entries().map(|(_, m)| m)),
    );
    let scale_rat = Rational::from_integer(scale.clone());
    let supply: Vec<BigInt> = mu1
        .entries()
        .map(|(_, m)| (m * &scale_rat).to_integer())
        .collect();
    let demand: Vec<BigInt> = mu2
        .entries()
        .map(|(_, m)| (m * &scale_rat).to_integer())
        .collect();

    let solved = solve_transportation(&supply, &demand, &costs.dist);

    let mut entries = BTreeMap::new();
    let mut cost = Rational::zero();
    for (i, row) in solved.flow.iter().enumerate() {
        for (j, f) in row.iter().enumerate() {
            if !f.is_zero() {
                let mass = Rational::new(f.clone(), scale.clone());
                cost += &mass * Rational::from_integer(BigInt::from(costs.dist[i][j]));
                entries.insert((costs.xs[i], costs.ys[j]), mass);
            }
        }
    }
    let plan = TransportPlan {
        entries,
        cost: cost.clone(),
    };

    let phi = costs
        .xs
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, Rational::from_integer(solved.alpha[i].clone())))
        .collect();
    let psi = costs
        .ys
        .iter()
        .enumerate()
        .map(|(j, &y)| (y, Rational::from_integer(solved.beta[j].clone())))
        .collect();
    let cert = DualCertificate { phi, psi };

    debug_assert!(cert.is_feasible(&costs));
    debug_assert_eq!(cert.objective(mu1, mu2), cost);
    Ok((cost, plan, cert))
}

/// True exactly when `plan` is an optimal transport plan between the given
/// measures: marginals must match (else an error), the stored cost must
/// agree with the entries, and the cost must meet the optimal dual value.
pub fn verify_plan_optimal(
    g: &Graph,
    mu1: &Measure,
    mu2: &Measure,
    plan: &TransportPlan,
) -> Result<bool> {
    if plan.entries.values().any(|m| m.is_negative()) || !plan.matches(mu1, mu2) {
        return Err(Error::MarginalMismatch);
    }
    let costs = cost_matrix(g, mu1, mu2)?;
    let mut recomputed = Rational::zero();
    for (&(x, y), mass) in &plan.entries {
        if mass.is_zero() {
            continue;
        }
        let i = costs.xs.binary_search(&x).expect("marginals checked");
        let j = costs.ys.binary_search(&y).expect("marginals checked");
        recomputed += mass * Rational::from_integer(BigInt::from(costs.dist[i][j]));
    }
    if recomputed != plan.cost {
        return Ok(false);
    }
    let (opt, _, cert) = wasserstein_certified(g, mu1, mu2)?;
    debug_assert!(cert.is_feasible(&costs));
    Ok(plan.cost == opt)
}

struct Solved {
    flow: Vec<Vec<BigInt>>,
    alpha: Vec<BigInt>,
    beta: Vec<BigInt>,
}

/// Successive shortest augmenting paths on the transportation residual
/// network. Nodes: 0..s are sources, s..s+t are sinks. Bellman-Ford handles
/// the negative backward arcs; the usual invariant (the flow is optimal for
/// its value) rules out negative cycles.
fn solve_transportation(supply: &[BigInt], demand: &[BigInt], dist: &[Vec<usize>]) -> Solved {
    let s = supply.len();
    let t = demand.len();
    let mut flow = vec![vec![BigInt::zero(); t]; s];
    let mut surplus: Vec<BigInt> = supply.to_vec();
    let mut deficit: Vec<BigInt> = demand.to_vec();

    loop {
        let active: Vec<usize> = (0..s).filter(|&i| surplus[i] > BigInt::zero()).collect();
        if active.is_empty() {
            break;
        }
        // Shortest distances from the active sources over the residual
        // network; `via[node]` remembers the tree arc.
        let n = s + t;
        let mut ell: Vec<Option<i64>> = vec![None; n];
        let mut via: Vec<Option<usize>> = vec![None; n];
        for &i in &active {
            ell[i] = Some(0);
        }
        for _ in 0..n {
            let mut changed = false;
            for i in 0..s {
                for j in 0..t {
                    let c = dist[i][j] as i64;
                    if let Some(li) = ell[i] {
                        if ell[s + j].map_or(true, |lj| li + c < lj) {
                            ell[s + j] = Some(li + c);
                            via[s + j] = Some(i);
                            changed = true;
                        }
                    }
                    if flow[i][j] > BigInt::zero() {
                        if let Some(lj) = ell[s + j] {
                            if ell[i].map_or(true, |li| lj - c < li) {
                                ell[i] = Some(lj - c);
                                via[i] = Some(s + j);
                                changed = true;
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        // Nearest sink with remaining deficit; ties broken by index so the
        // result is deterministic.
        let target = (0..t)
            .filter(|&j| deficit[j] > BigInt::zero())
            .min_by_key(|&j| (ell[s + j].expect("marginals balance"), j))
            .expect("total supply equals total demand");

        // Walk the predecessor chain to find the bottleneck, then augment.
        let mut path = Vec::new();
        let mut node = s + target;
        while let Some(prev) = via[node] {
            path.push((prev, node));
            node = prev;
            if node < s && surplus[node] > BigInt::zero() && via[node].is_none() {
                break;
            }
        }
        path.reverse();
        let origin = path.first().map_or(node, |&(a, _)| a);
        let mut amount = surplus[origin].clone().min(deficit[target].clone());
        for &(a, b) in &path {
            if a >= s {
                // Backward arc: sink a -> source b reduces flow[b][a - s].
                amount = amount.min(flow[b][a - s].clone());
            }
        }
        assert!(amount > BigInt::zero());
        for &(a, b) in &path {
            if a < s {
                flow[a][b - s] += &amount;
            } else {
                flow[b][a - s] -= &amount;
            }
        }
        surplus[origin] -= &amount;
        deficit[target] -= &amount;
    }

    // Potentials from residual shortest paths out of a virtual source tied
    // to every source node with a zero-cost arc.
    let n = s + t;
    let mut ell = vec![i64::MAX; n];
    for i in 0..s {
        ell[i] = 0;
    }
    for _ in 0..n {
        let mut changed = false;
        for i in 0..s {
            for j in 0..t {
                let c = dist[i][j] as i64;
                if ell[i] != i64::MAX && ell[i] + c < ell[s + j] {
                    ell[s + j] = ell[i] + c;
                    changed = true;
                }
                if flow[i][j] > BigInt::zero() && ell[s + j] != i64::MAX && ell[s + j] - c < ell[i]
                {
                    ell[i] = ell[s + j] - c;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let alpha = (0..s).map(|i| BigInt::from(-ell[i])).collect();
    let beta = (0..t).map(|j| BigInt::from(ell[s + j])).collect();
    Solved { flow, alpha, beta }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};
    use crate::rational::{rat, rat_int};

    fn point_mass(g: &Graph, v: usize) -> Measure {
        Measure::new(g, [(v, rat_int(1))]).unwrap()
    }

    #[test]
    fn measure_validation() {
        let g = path(3);
        assert!(Measure::new(&g, [(0, rat(1, 2))]).is_err());
        assert!(Measure::new(&g, [(0, rat(-1, 2)), (1, rat(3, 2))]).is_err());
        assert!(Measure::new(&g, [(9, rat_int(1))]).is_err());
        let m = Measure::new(&g, [(0, rat(1, 2)), (1, rat(1, 2)), (2, rat(0, 1))]).unwrap();
        assert_eq!(m.support_vertices(), vec![0, 1]);
    }

    #[test]
    fn vertex_measure_shapes() {
        let g = complete(3);
        let m = vertex_measure(&g, 0, &rat(1, 3)).unwrap();
        for v in 0..3 {
            assert_eq!(m.mass(v), rat(1, 3));
        }

        let m = vertex_measure(&g, 1, &rat_int(1)).unwrap();
        assert_eq!(m.mass(1), rat_int(1));
        assert_eq!(m.len(), 1);

        let p = path(3);
        let m = vertex_measure(&p, 1, &rat(1, 2)).unwrap();
        assert_eq!(m.mass(1), rat(1, 2));
        assert_eq!(m.mass(0), rat(1, 4));
        assert_eq!(m.mass(2), rat(1, 4));
    }

    #[test]
    fn vertex_measure_rejects_isolated_and_bad_rho() {
        let g = Graph::from_edges(2, &[]).unwrap();
        assert!(vertex_measure(&g, 0, &rat(1, 2)).is_err());
        assert!(vertex_measure(&g, 0, &rat_int(1)).is_ok());
        let p = path(2);
        assert!(vertex_measure(&p, 0, &rat(3, 2)).is_err());
    }

    #[test]
    fn identical_measures_cost_zero() {
        let g = cycle(5);
        let m = vertex_measure(&g, 2, &rat(1, 3)).unwrap();
        let (w, plan) = wasserstein(&g, &m, &m).unwrap();
        assert_eq!(w, rat_int(0));
        assert!(verify_plan_optimal(&g, &m, &m, &plan).unwrap());
    }

    #[test]
    fn point_masses_cost_distance() {
        let g = cycle(6);
        let a = point_mass(&g, 0);
        let b = point_mass(&g, 3);
        let (w, plan) = wasserstein(&g, &a, &b).unwrap();
        assert_eq!(w, rat_int(3));
        assert_eq!(plan.entries.len(), 1);
        assert!(verify_plan_optimal(&g, &a, &b, &plan).unwrap());
    }

    #[test]
    fn adjacent_vertex_measures_on_c5() {
        let g = cycle(5);
        let mu = vertex_measure(&g, 0, &rat(1, 3)).unwrap();
        let nu = vertex_measure(&g, 1, &rat(1, 3)).unwrap();
        let (w, _) = wasserstein(&g, &mu, &nu).unwrap();
        assert_eq!(w, rat(2, 3));
    }

    #[test]
    fn disconnected_supports_error() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let a = point_mass(&g, 0);
        let b = point_mass(&g, 2);
        assert!(matches!(
            wasserstein(&g, &a, &b),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn symmetry_of_wasserstein() {
        let g = cycle(7);
        let mu = vertex_measure(&g, 0, &rat(1, 4)).unwrap();
        let nu = vertex_measure(&g, 2, &rat(2, 5)).unwrap();
        let (w1, _) = wasserstein(&g, &mu, &nu).unwrap();
        let (w2, _) = wasserstein(&g, &nu, &mu).unwrap();
        assert_eq!(w1, w2);
    }

    #[test]
    fn suboptimal_cost_is_rejected() {
        let g = path(4);
        let a = point_mass(&g, 0);
        let b = point_mass(&g, 3);
        let (_, mut plan) = wasserstein(&g, &a, &b).unwrap();
        assert_eq!(plan.cost, rat_int(3));
        plan.cost = rat_int(5);
        assert!(!verify_plan_optimal(&g, &a, &b, &plan).unwrap());
    }

    #[test]
    fn marginal_mismatch_is_an_error() {
        let g = path(3);
        let a = point_mass(&g, 0);
        let b = point_mass(&g, 2);
        let plan = TransportPlan {
            entries: BTreeMap::from([((0, 1), rat_int(1))]),
            cost: rat_int(1),
        };
        assert!(matches!(
            verify_plan_optimal(&g, &a, &b, &plan),
            Err(Error::MarginalMismatch)
        ));
    }

    #[test]
    fn certificate_is_feasible_and_tight() {
        let g = cycle(5);
        let mu = vertex_measure(&g, 0, &rat(1, 3)).unwrap();
        let nu = vertex_measure(&g, 1, &rat(1, 3)).unwrap();
        let (w, _, cert) = wasserstein_certified(&g, &mu, &nu).unwrap();
        let costs = cost_matrix(&g, &mu, &nu).unwrap();
        assert!(cert.is_feasible(&costs));
        assert_eq!(cert.objective(&mu, &nu), w);
    }

    #[test]
    fn metric_bound_for_adjacent_measures() {
        for g in [cycle(6), complete(5), crate::graph::petersen()] {
            let rho = rat(1, 4);
            let mu = vertex_measure(&g, 0, &rho).unwrap();
            let v = g.neighbors(0)[0];
            let nu = vertex_measure(&g, v, &rho).unwrap();
            let (w, _) = wasserstein(&g, &mu, &nu).unwrap();
            assert!(w <= rat_int(3));
        }
    }
}
