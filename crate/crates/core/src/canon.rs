//! Canonical byte forms for small graphs.
//!
//! Two graphs get the same form exactly when they are isomorphic. In
//! bipartition-respecting mode only side-preserving maps count, except that
//! the two sides may be exchanged when they have the same size (globally,
//! never per component).
//!
//! The search is exhaustive permutation with branch-and-bound pruning; each
//! connected component is canonicalized separately and the component forms
//! are combined, so highly symmetric disconnected graphs stay cheap.

use crate::{Error, Graph, Result};

/// Largest vertex count the canonicalizer accepts.
pub const CANON_BUDGET: usize = 16;

/// Canonical byte string of `g`. Equal strings are equivalent to the graphs
/// being isomorphic (side-respecting when `respect_bipartition` is set; the
/// graph must then carry a bipartition).
pub fn canonical_form(g: &Graph, respect_bipartition: bool) -> Result<Vec<u8>> {
    if g.vertex_count() > CANON_BUDGET {
        return Err(Error::BudgetExceeded {
            what: format!("canonical form of {} vertices", g.vertex_count()),
            limit: CANON_BUDGET,
        });
    }
    if !respect_bipartition {
        return Ok(composed_form(g, None));
    }
    let part = g.bipartition().ok_or(Error::NotBipartite)?;
    let a = part.iter().filter(|&&s| s == 0).count();
    let form = composed_form(g, Some(part));
    if 2 * a == part.len() {
        let flipped: Vec<u8> = part.iter().map(|&s| 1 - s).collect();
        Ok(form.max(composed_form(g, Some(&flipped))))
    } else {
        Ok(form)
    }
}

/// Convenience wrapper comparing two canonical forms.
pub fn are_isomorphic(g1: &Graph, g2: &Graph, respect_bipartition: bool) -> Result<bool> {
    Ok(canonical_form(g1, respect_bipartition)? == canonical_form(g2, respect_bipartition)?)
}

fn composed_form(g: &Graph, part: Option<&[u8]>) -> Vec<u8> {
    let comps = g.connected_components();
    let mut forms: Vec<(usize, Vec<u8>)> = comps
        .iter()
        .map(|c| (c.len(), component_form(g, c, part)))
        .collect();
    forms.sort_by(|x, y| y.cmp(x));

    let mut out = vec![
        g.vertex_count() as u8,
        g.edge_count() as u8,
        u8::from(part.is_some()),
    ];
    if let Some(p) = part {
        let a = p.iter().filter(|&&s| s == 0).count();
        out.push(a as u8);
        out.push((p.len() - a) as u8);
    }
    for (size, bytes) in forms {
        out.push(size as u8);
        out.extend_from_slice(&bytes);
    }
    out
}

/// Maximal position-interleaved (side bit, adjacency column) string over all
/// orderings of one component.
fn component_form(g: &Graph, verts: &[usize], part: Option<&[u8]>) -> Vec<u8> {
    let k = verts.len();
    let mut adj = vec![0u32; k];
    for (i, &v) in verts.iter().enumerate() {
        for &w in g.neighbors(v) {
            if let Ok(j) = verts.binary_search(&w) {
                adj[i] |= 1 << j;
            }
        }
    }
    let sides: Option<Vec<u8>> = part.map(|p| verts.iter().map(|&v| p[v]).collect());
    let total_len: usize = (0..k).map(|i| i + usize::from(sides.is_some())).sum();

    let mut search = Search {
        adj: &adj,
        sides: sides.as_deref(),
        k,
        total_len,
        perm: Vec::with_capacity(k),
        used: 0,
        cur: Vec::with_capacity(total_len),
        best: Vec::new(),
    };
    search.run();
    search.best
}

struct Search<'a> {
    adj: &'a [u32],
    sides: Option<&'a [u8]>,
    k: usize,
    total_len: usize,
    perm: Vec<usize>,
    used: u32,
    cur: Vec<u8>,
    best: Vec<u8>,
}

impl Search<'_> {
    fn run(&mut self) {
        self.descend();
    }

    fn column(&self, v: usize) -> Vec<u8> {
        let mut col = Vec::with_capacity(self.perm.len() + 1);
        if let Some(s) = self.sides {
            col.push(s[v]);
        }
        for &p in &self.perm {
            col.push(u8::from(self.adj[v] >> p & 1 == 1));
        }
        col
    }

    fn descend(&mut self) {
        if self.perm.len() == self.k {
            if self.cur > self.best {
                self.best = self.cur.clone();
            }
            return;
        }
        let mut cands: Vec<(Vec<u8>, usize)> = Vec::new();
        'next: for v in 0..self.k {
            if self.used >> v & 1 == 1 {
                continue;
            }
            // Vertices with identical neighborhoods (and side) are
            // interchangeable; keep only the first available one.
            for w in 0..v {
                if self.used >> w & 1 == 0
                    && self.adj[w] == self.adj[v]
                    && self.sides.map_or(true, |s| s[w] == s[v])
                {
                    continue 'next;
                }
            }
            cands.push((self.column(v), v));
        }
        cands.sort_by(|x, y| y.cmp(x));
        let off = self.cur.len();
        for (col, v) in cands {
            // Columns below the best string cannot recover, but only while
            // the prefix still ties it; past a strictly greater column every
            // completion beats the old best and nothing may be skipped.
            if self.best.len() == self.total_len
                && self.cur[..] == self.best[..off]
                && col.as_slice() < &self.best[off..off + col.len()]
            {
                break;
            }
            self.cur.extend_from_slice(&col);
            self.perm.push(v);
            self.used |= 1 << v;
            self.descend();
            self.used &= !(1 << v);
            self.perm.pop();
            self.cur.truncate(off);
        }
    }
}
