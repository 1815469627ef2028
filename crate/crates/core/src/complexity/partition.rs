//! Exact complexity by searching edge partitions.
//!
//! A minimal quasi-homomorphism can be taken to be an edge partition plus an
//! assignment of isolated vertices. The first edge is forced into piece 0 and
//! piece labels are introduced in order of first use.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::budget::{Budget, Ticker};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::{solve, GraphTarget, Order, SearchOptions};

/// Edge sets of the pieces of a partition.
pub(crate) type EdgeSets = Vec<Vec<(usize, usize)>>;

/// Edges grouped by their later endpoint in a breadth-first vertex order:
/// each vertex contributes its edges back to earlier vertices, most recent
/// first. Every prefix is then close to an induced subgraph, and first-fit
/// piece choice alternates instead of growing stars.
pub(crate) fn connected_edge_order(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut rank = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if rank[root] != usize::MAX {
            continue;
        }
        rank[root] = order.len();
        order.push(root);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in g.neighbors(v) {
                if rank[w] == usize::MAX {
                    rank[w] = order.len();
                    order.push(w);
                }
            }
        }
    }
    let mut edges = g.edge_list();
    edges.sort_by_key(|&(u, v)| (rank[u].max(rank[v]), std::cmp::Reverse(rank[u].min(rank[v]))));
    edges
}

/// The graph spanned by `edges` (endpoints only), vertices in `g`'s order.
pub(crate) fn edge_subgraph(g: &Graph, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    let mut vs: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    vs.sort_unstable();
    vs.dedup();
    let mut sub = Graph::new(g.mode());
    for &v in &vs {
        sub.add_vertex(g.id(v)).expect("unique ids");
    }
    for (u, v) in edges {
        let a = vs.binary_search(&u).expect("endpoint present");
        let b = vs.binary_search(&v).expect("endpoint present");
        sub.add_edge(a, b).expect("endpoints exist");
    }
    sub
}

const UNSET: usize = usize::MAX;

pub(crate) struct PartitionSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    target: GraphTarget<'a>,
    injective: bool,
    edges: Vec<(usize, usize)>,
    memo: HashMap<FixedBitSet, Option<Vec<usize>>>,
    masks: Vec<FixedBitSet>,
    /// For each piece, a homomorphism of it into `h` (`UNSET` off the piece).
    witnesses: Vec<Vec<usize>>,
    isolated: usize,
    h_max_degree: (usize, usize, usize),
    budget: &'a Budget,
    ticker: Ticker<'a>,
}

impl<'a> PartitionSearch<'a> {
    pub(crate) fn new(g: &'a Graph, h: &'a Graph, injective: bool, budget: &'a Budget) -> Result<Self> {
        let limit = if injective { budget.partition_edges_injective } else { budget.partition_edges };
        if g.size() > limit {
            return Err(Error::ResourceLimit(format!(
                "partition search is limited to {limit} edges, graph has {}",
                g.size()
            )));
        }
        let h_max_degree = (0..h.order()).fold((0, 0, 0), |acc, a| {
            (acc.0.max(h.degree(a)), acc.1.max(h.indegree(a)), acc.2.max(h.outdegree(a)))
        });
        Ok(PartitionSearch {
            g,
            h,
            target: GraphTarget::new(h),
            injective,
            edges: connected_edge_order(g),
            memo: HashMap::new(),
            masks: Vec::new(),
            witnesses: Vec::new(),
            isolated: g.isolated_vertices().len(),
            h_max_degree,
            budget,
            ticker: Ticker::new(budget),
        })
    }

    fn vertex_count(&self, mask: &FixedBitSet) -> usize {
        let mut seen = vec![false; self.g.order()];
        let mut count = 0;
        for i in mask.ones() {
            let (u, v) = self.edges[i];
            for w in [u, v] {
                if !std::mem::replace(&mut seen[w], true) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Extends the witness of a piece to the edge `uv` without moving any
    /// vertex already placed.
    fn extend(&self, w: &[usize], (u, v): (usize, usize)) -> Option<Vec<usize>> {
        let h = self.h;
        let free = |a: usize| !self.injective || !w.contains(&a);
        let mut out = w.to_vec();
        match (w[u], w[v]) {
            (UNSET, UNSET) if u == v => {
                out[u] = (0..h.order()).find(|&a| h.has_edge(a, a) && free(a))?;
            }
            (UNSET, UNSET) => {
                let (a, b) = h.edges().find(|&(a, b)| {
                    free(a) && free(b) && !(self.injective && a == b)
                })?;
                out[u] = a;
                out[v] = b;
            }
            (a, UNSET) => out[v] = (0..h.order()).find(|&b| h.has_edge(a, b) && free(b))?,
            (UNSET, b) => out[u] = (0..h.order()).find(|&a| h.has_edge(a, b) && free(a))?,
            (a, b) => {
                if !h.has_edge(a, b) {
                    return None;
                }
            }
        }
        Some(out)
    }

    /// A witness homomorphism for the piece with edge set `mask` (the old
    /// piece plus edge `e`), or `None` when the piece does not map.
    fn feasible(&mut self, mask: &FixedBitSet, old: &[usize], e: (usize, usize)) -> Result<Option<Vec<usize>>> {
        if let Some(w) = self.extend(old, e) {
            return Ok(Some(w));
        }
        if let Some(w) = self.memo.get(mask) {
            return Ok(w.clone());
        }
        let mut vs: Vec<usize> = mask.ones().flat_map(|i| [self.edges[i].0, self.edges[i].1]).collect();
        vs.sort_unstable();
        vs.dedup();
        let piece = edge_subgraph(self.g, mask.ones().map(|i| self.edges[i]));
        let witness = if self.injective
            && (piece.order() > self.h.order()
                || piece.size() > self.h.size()
                || (0..piece.order()).any(|v| {
                    piece.degree(v) > self.h_max_degree.0
                        || piece.indegree(v) > self.h_max_degree.1
                        || piece.outdegree(v) > self.h_max_degree.2
                })) {
            None
        } else {
            let opts = SearchOptions { injective: self.injective, order: Order::Degree, ..SearchOptions::default() };
            let mut found = None;
            solve(&piece, &self.target, &opts, self.budget, &mut |m| {
                let mut w = vec![UNSET; self.g.order()];
                for (&v, &a) in vs.iter().zip(m) {
                    w[v] = a;
                }
                found = Some(w);
                false
            })?;
            found
        };
        self.memo.insert(mask.clone(), witness.clone());
        Ok(witness)
    }

    /// Room left for isolated vertices once the edges are placed.
    fn leaf_ok(&self, used: usize, k: usize) -> bool {
        if !self.injective {
            return true;
        }
        let n = self.h.order();
        let spare: usize = self.masks[..used].iter().map(|m| n - self.vertex_count(m)).sum();
        spare + (k - used) * n >= self.isolated
    }

    fn dfs(&mut self, i: usize, used: usize, k: usize) -> Result<bool> {
        if i == self.edges.len() {
            return Ok(self.leaf_ok(used, k));
        }
        self.ticker.tick()?;
        for p in 0..(used + 1).min(k) {
            let mut mask = self.masks[p].clone();
            mask.insert(i);
            let Some(witness) = self.feasible(&mask, &self.witnesses[p].clone(), self.edges[i])? else {
                continue;
            };
            let old_mask = std::mem::replace(&mut self.masks[p], mask);
            let old_witness = std::mem::replace(&mut self.witnesses[p], witness);
            if self.dfs(i + 1, used.max(p + 1), k)? {
                return Ok(true);
            }
            self.masks[p] = old_mask;
            self.witnesses[p] = old_witness;
        }
        Ok(false)
    }

    /// Tries to split the edges into at most `k` feasible pieces. Returns the
    /// edge sets of the used pieces.
    pub(crate) fn try_k(&mut self, k: usize) -> Result<Option<EdgeSets>> {
        self.masks = vec![FixedBitSet::with_capacity(self.edges.len()); k];
        self.witnesses = vec![vec![UNSET; self.g.order()]; k];
        if !self.dfs(0, 0, k)? {
            return Ok(None);
        }
        let pieces = self
            .masks
            .iter()
            .take_while(|m| !m.is_clear())
            .map(|m| m.ones().map(|i| self.edges[i]).collect())
            .collect();
        Ok(Some(pieces))
    }
}
