#![allow(dead_code)]

use lly_core::rational::{rat, Rational};
use lly_core::transport::{cost_matrix, Measure};
use lly_core::Graph;
use num_traits::{One, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Optimal transportation cost computed by a dense two-phase simplex with
/// Bland's rule. Written from scratch on purpose: it shares no code with
/// the flow-based solver it is used to check.
pub fn transport_lp(dist: &[Vec<usize>], supply: &[Rational], demand: &[Rational]) -> Rational {
    let p = supply.len();
    let q = demand.len();
    assert!(p > 0 && q > 0, "empty marginal");
    assert_eq!(dist.len(), p);
    let n = p * q;
    let m = p + q;
    let width = n + m + 1;

    // Rows 0..p are supply constraints, rows p..m demand constraints.
    // Columns: structural x_{ij} at i*q + j, artificial for row r at n + r.
    let mut t = vec![vec![Rational::zero(); width]; m];
    for i in 0..p {
        for j in 0..q {
            t[i][i * q + j] = Rational::one();
            t[p + j][i * q + j] = Rational::one();
        }
        t[i][width - 1] = supply[i].clone();
    }
    for j in 0..q {
        t[p + j][width - 1] = demand[j].clone();
    }
    for r in 0..m {
        t[r][n + r] = Rational::one();
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    let phase1: Vec<Rational> = (0..n + m)
        .map(|j| {
            if j >= n {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    run_simplex(&mut t, &mut basis, &phase1, n + m);
    let residual: Rational = (0..m)
        .filter(|&i| basis[i] >= n)
        .map(|i| t[i][width - 1].clone())
        .sum();
    assert!(residual.is_zero(), "marginals have unequal total mass");

    let phase2: Vec<Rational> = (0..n + m)
        .map(|j| {
            if j < n {
                rat(dist[j / q][j % q] as i64, 1)
            } else {
                Rational::zero()
            }
        })
        .collect();
    // Artificial columns are barred from re-entering in phase 2.
    run_simplex(&mut t, &mut basis, &phase2, n);

    (0..m)
        .filter(|&i| basis[i] < n)
        .map(|i| &phase2[basis[i]] * &t[i][width - 1])
        .sum()
}

fn run_simplex(t: &mut [Vec<Rational>], basis: &mut [usize], cost: &[Rational], enterable: usize) {
    let m = t.len();
    let width = t[0].len();
    loop {
        let mut entering = None;
        for j in 0..enterable {
            if basis.contains(&j) {
                continue;
            }
            let mut reduced = cost[j].clone();
            for i in 0..m {
                if !t[i][j].is_zero() {
                    reduced -= &cost[basis[i]] * &t[i][j];
                }
            }
            if reduced < Rational::zero() {
                entering = Some(j);
                break;
            }
        }
        let Some(j) = entering else { return };

        let mut leave: Option<(Rational, usize, usize)> = None;
        for i in 0..m {
            if t[i][j] > Rational::zero() {
                let ratio = &t[i][width - 1] / &t[i][j];
                let better = match &leave {
                    None => true,
                    Some((best, var, _)) => ratio < *best || (ratio == *best && basis[i] < *var),
                };
                if better {
                    leave = Some((ratio, basis[i], i));
                }
            }
        }
        let (_, _, row) = leave.expect("transportation polytope is bounded");
        pivot(t, row, j);
        basis[row] = j;
    }
}

fn pivot(t: &mut [Vec<Rational>], row: usize, col: usize) {
    let width = t[0].len();
    let pv = t[row][col].clone();
    for x in t[row].iter_mut() {
        if !x.is_zero() {
            *x = &*x / &pv;
        }
    }
    for i in 0..t.len() {
        if i != row && !t[i][col].is_zero() {
            let f = t[i][col].clone();
            for k in 0..width {
                if !t[row][k].is_zero() {
                    let delta = &f * &t[row][k];
                    t[i][k] -= delta;
                }
            }
        }
    }
}

pub fn lp_wasserstein(g: &Graph, mu: &Measure, nu: &Measure) -> Rational {
    let costs = cost_matrix(g, mu, nu).expect("measures live on a connected graph");
    let supply: Vec<Rational> = mu.entries().map(|(_, mass)| mass.clone()).collect();
    let demand: Vec<Rational> = nu.entries().map(|(_, mass)| mass.clone()).collect();
    transport_lp(&costs.dist, &supply, &demand)
}

/// Random spanning tree plus density-1/4 extra edges, so small cases stay
/// sparse enough to exercise distances beyond one hop.
pub fn random_connected_graph<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let mut edges = std::collections::BTreeSet::new();
    for v in 1..n {
        edges.insert((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(0.25) {
                edges.insert((u, v));
            }
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).expect("generator emits simple edges")
}

/// Probability measure with random support and small integer weights.
pub fn random_measure<R: Rng>(rng: &mut R, g: &Graph) -> Measure {
    let n = g.vertex_count();
    let k = rng.gen_range(1..=n);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    verts.truncate(k);
    let weights: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=9)).collect();
    let total: i64 = weights.iter().sum();
    Measure::new(
        g,
        verts
            .iter()
            .zip(&weights)
            .map(|(&v, &w)| (v, rat(w, total))),
    )
    .expect("weights sum to one")
}
