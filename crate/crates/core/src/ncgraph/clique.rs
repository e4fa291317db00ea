//! Exact maximum clique on bitset adjacency.
//!
//! Branch and bound with a greedy sequential coloring bound: vertices are
//! first renumbered by non-increasing degree (ties by index), candidate sets
//! are colored in that order and expanded from the highest color down.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`naive_max_clique`].
pub const NAIVE_LIMIT: usize = 26;

struct Searcher<'a> {
    adj: &'a [BitSet],
    best: Vec<usize>,
    shared: Option<&'a AtomicUsize>,
}

impl Searcher<'_> {
    fn bound(&self) -> usize {
        let local = self.best.len();
        match self.shared {
            Some(s) => local.max(s.load(Ordering::Relaxed)),
            None => local,
        }
    }

    fn record(&mut self, clique: &[usize]) {
        if clique.len() > self.best.len() {
            self.best = clique.to_vec();
            if let Some(s) = self.shared {
                s.fetch_max(clique.len(), Ordering::Relaxed);
            }
        }
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut cand: BitSet) {
        let (order, colors) = color_sort(self.adj, &cand);
        for i in (0..order.len()).rev() {
            if current.len() + colors[i] <= self.bound() {
                return;
            }
            let v = order[i];
            current.push(v);
            let mut next = cand.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_empty() {
                self.record(current);
            } else {
                self.expand(current, next);
            }
            current.pop();
            cand.remove(v);
        }
    }
}

/// Greedy sequential coloring of `cand` in increasing vertex order.
/// Returns vertices grouped by color and the (1-based, non-decreasing)
/// color of each.
fn color_sort(adj: &[BitSet], cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = cand.clone();
    let mut order = Vec::with_capacity(cand.count());
    let mut colors = Vec::with_capacity(order.capacity());
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail.difference_with(&adj[v]);
            uncolored.remove(v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

/// Renumbers vertices by non-increasing degree; returns the permuted
/// adjacency and the map from new to original index.
fn degree_ordered(adj: &[BitSet]) -> (Vec<BitSet>, Vec<usize>) {
    let n = adj.len();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count()), v));
    let mut pos = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        pos[old] = new;
    }
    let permuted = perm
        .iter()
        .map(|&old| {
            let mut row = BitSet::new(n);
            for u in adj[old].iter() {
                row.insert(pos[u]);
            }
            row
        })
        .collect();
    (permuted, perm)
}

fn finish(mut clique: Vec<usize>, perm: &[usize]) -> Vec<usize> {
    for v in &mut clique {
        *v = perm[*v];
    }
    clique.sort_unstable();
    clique
}

/// A maximum clique, as sorted vertex indices. Deterministic.
pub fn max_clique(adj: &[BitSet]) -> Vec<usize> {
    if adj.is_empty() {
        return Vec::new();
    }
    let (padj, perm) = degree_ordered(adj);
    let mut s = Searcher { adj: &padj, best: Vec::new(), shared: None };
    s.expand(&mut Vec::new(), BitSet::full(adj.len()));
    finish(s.best, &perm)
}

/// Same value as [`max_clique`]; root branches run concurrently and share
/// the incumbent size. The returned clique may differ between schedules.
pub fn max_clique_parallel(adj: &[BitSet]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let (padj, perm) = degree_ordered(adj);
    let (order, colors) = color_sort(&padj, &BitSet::full(n));
    let shared = AtomicUsize::new(0);
    let best = (0..order.len())
        .into_par_iter()
        .filter_map(|i| {
            if colors[i] < shared.load(Ordering::Relaxed) {
                return None;
            }
            let v = order[i];
            let mut cand = BitSet::new(n);
            for &u in &order[..i] {
                cand.insert(u);
            }
            cand.intersect_with(&padj[v]);
            let mut s = Searcher { adj: &padj, best: Vec::new(), shared: Some(&shared) };
            let mut current = vec![v];
            if cand.is_empty() {
                s.record(&current);
            } else {
                s.expand(&mut current, cand);
            }
            (!s.best.is_empty()).then_some((i, s.best))
        })
        .max_by_key(|(i, c)| (c.len(), std::cmp::Reverse(*i)))
        .map(|(_, c)| c)
        .unwrap_or_default();
    finish(best, &perm)
}

/// Maximum clique by enumerating every vertex subset (dynamic programming
/// over bitmasks). Exponential; limited to [`NAIVE_LIMIT`] vertices.
pub fn naive_max_clique(adj: &[BitSet]) -> Result<Vec<usize>> {
    let n = adj.len();
    if n > NAIVE_LIMIT {
        return Err(Error::OracleTooLarge { vertices: n, limit: NAIVE_LIMIT });
    }
    let masks: Vec<u32> = adj.iter().map(|row| row.iter().fold(0u32, |m, u| m | 1 << u)).collect();
    let total = 1usize << n;
    let mut is_clique = vec![0u64; total.div_ceil(64)];
    is_clique[0] = 1;
    let (mut best_mask, mut best_size) = (0u32, 0u32);
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let ok = is_clique[rest / 64] >> (rest % 64) & 1 == 1 && (rest as u32) & !masks[low] == 0;
        if ok {
            is_clique[mask / 64] |= 1 << (mask % 64);
            let size = mask.count_ones();
            if size > best_size {
                best_size = size;
                best_mask = mask as u32;
            }
        }
    }
    Ok((0..n).filter(|&v| best_mask >> v & 1 == 1).collect())
}
