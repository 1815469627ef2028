//! Backtracking homomorphism search with forward checking.

use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::VertexMap;
use crate::budget::{Budget, Ticker};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A codomain the search can map into. Adjacency may be implicit.
pub(crate) trait Target {
    fn order(&self) -> usize;
    /// Arc `a → b` (directed) or edge `ab` (undirected).
    fn arc(&self, a: usize, b: usize) -> bool;
    /// Sorted successors of `a`, when cheaply available.
    fn successors(&self, _a: usize) -> Option<&[usize]> {
        None
    }
    /// Sorted predecessors of `a`, when cheaply available.
    fn predecessors(&self, _a: usize) -> Option<&[usize]> {
        None
    }
    /// `(degree, indegree, outdegree)` ignoring loops, for injective pruning.
    fn degrees(&self, _a: usize) -> Option<(usize, usize, usize)> {
        None
    }
}

/// A concrete graph, with a dense adjacency matrix when small enough.
pub(crate) struct GraphTarget<'a> {
    g: &'a Graph,
    dense: Option<Vec<FixedBitSet>>,
}

impl<'a> GraphTarget<'a> {
    pub(crate) fn new(g: &'a Graph) -> Self {
        let dense = (g.order() <= 4096).then(|| {
            (0..g.order())
                .map(|a| {
                    let mut row = FixedBitSet::with_capacity(g.order());
                    for &b in g.out_neighbors(a) {
                        row.insert(b);
                    }
                    row
                })
                .collect()
        });
        GraphTarget { g, dense }
    }
}

impl Target for GraphTarget<'_> {
    fn order(&self) -> usize {
        self.g.order()
    }

    fn arc(&self, a: usize, b: usize) -> bool {
        match &self.dense {
            Some(rows) => rows[a].contains(b),
            None => self.g.has_edge(a, b),
        }
    }

    fn successors(&self, a: usize) -> Option<&[usize]> {
        Some(self.g.out_neighbors(a))
    }

    fn predecessors(&self, a: usize) -> Option<&[usize]> {
        Some(self.g.in_neighbors(a))
    }

    fn degrees(&self, a: usize) -> Option<(usize, usize, usize)> {
        Some((self.g.degree(a), self.g.indegree(a), self.g.outdegree(a)))
    }
}

/// `H^(k)` without materialising it: vertex `x` is the tuple of base-`n`
/// digits of `x`, most significant first.
pub(crate) struct OrPowerTarget {
    n: usize,
    k: usize,
    adj: Vec<FixedBitSet>,
}

impl OrPowerTarget {
    pub(crate) fn new(h: &Graph, k: usize) -> Self {
        let adj = (0..h.order())
            .map(|a| {
                let mut row = FixedBitSet::with_capacity(h.order());
                for &b in h.out_neighbors(a) {
                    row.insert(b);
                }
                row
            })
            .collect();
        OrPowerTarget { n: h.order(), k, adj }
    }

    /// Coordinate `i` (0-based) of tuple `x`.
    pub(crate) fn coordinate(&self, x: usize, i: usize) -> usize {
        let shift = self.n.pow((self.k - 1 - i) as u32);
        (x / shift) % self.n
    }
}

impl Target for OrPowerTarget {
    fn order(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    fn arc(&self, mut a: usize, mut b: usize) -> bool {
        for _ in 0..self.k {
            if self.adj[a % self.n].contains(b % self.n) {
                return true;
            }
            a /= self.n;
            b /= self.n;
        }
        false
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Order {
    /// Connectivity-first, then descending degree; ties by index.
    Degree,
    /// Vertex index order, giving lexicographic enumeration.
    Canonical,
}

#[derive(Clone, Debug)]
pub(crate) struct SearchOptions {
    pub injective: bool,
    pub degree_filter: bool,
    pub order: Order,
    /// Vertices whose image is prescribed.
    pub fixed: Vec<Option<usize>>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { injective: false, degree_filter: true, order: Order::Degree, fixed: Vec::new() }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Candidate assignments tried.
    pub nodes: u64,
}

#[derive(Clone, Copy)]
struct Neighbour {
    w: usize,
    /// `v → w` must be preserved.
    fwd: bool,
    /// `w → v` must be preserved.
    bwd: bool,
}

struct Solver<'a, T: Target + ?Sized> {
    t: &'a T,
    injective: bool,
    order: Vec<usize>,
    nbrs: Vec<Vec<Neighbour>>,
    domains: Vec<Option<Vec<usize>>>,
    trail: Vec<(usize, Option<Vec<usize>>)>,
    assign: Vec<usize>,
    assigned: Vec<bool>,
    used: Vec<bool>,
    ticker: Ticker<'a>,
    stats: SearchStats,
}

fn vertex_order(g: &Graph, order: Order) -> Vec<usize> {
    let n = g.order();
    if order == Order::Canonical {
        return (0..n).collect();
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], nbrs[v].len(), std::cmp::Reverse(v)))
            .expect("a vertex remains");
        placed[v] = true;
        for &w in &nbrs[v] {
            links[w] += 1;
        }
        out.push(v);
    }
    out
}

impl<'a, T: Target + ?Sized> Solver<'a, T> {
    fn candidates(&self, v: usize) -> Vec<usize> {
        let base: Box<dyn Iterator<Item = usize>> = match &self.domains[v] {
            Some(list) => Box::new(list.iter().copied()),
            None => Box::new(0..self.t.order()),
        };
        if self.injective {
            base.filter(|&c| !self.used[c]).collect()
        } else {
            base.collect()
        }
    }

    /// Restricts the domains of unassigned neighbours of `v` to values
    /// compatible with `v ↦ c`. Returns `false` on a wipe-out.
    fn propagate(&mut self, v: usize, c: usize) -> bool {
        for i in 0..self.nbrs[v].len() {
            let Neighbour { w, fwd, bwd } = self.nbrs[v][i];
            if self.assigned[w] {
                continue;
            }
            let t = self.t;
            let keep = |x: usize| (!fwd || t.arc(c, x)) && (!bwd || t.arc(x, c));
            let used = &self.used;
            let injective = self.injective;
            let fresh: Vec<usize> = match &self.domains[w] {
                Some(list) => list
                    .iter()
                    .copied()
                    .filter(|&x| keep(x) && !(injective && used[x]))
                    .collect(),
                None => {
                    let seed = if fwd { t.successors(c) } else { t.predecessors(c) };
                    match seed {
                        Some(list) => list
                            .iter()
                            .copied()
                            .filter(|&x| keep(x) && !(injective && used[x]))
                            .collect(),
                        None => (0..t.order())
                            .filter(|&x| keep(x) && !(injective && used[x]))
                            .collect(),
                    }
                }
            };
            let empty = fresh.is_empty();
            let old = self.domains[w].replace(fresh);
            self.trail.push((w, old));
            if empty {
                return false;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (w, old) = self.trail.pop().expect("trail is longer than mark");
            self.domains[w] = old;
        }
    }

    /// Returns `Ok(true)` when the visitor asked to stop.
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(!visit(&self.assign));
        }
        let v = self.order[depth];
        for c in self.candidates(v) {
            self.ticker.tick()?;
            self.stats.nodes += 1;
            self.assign[v] = c;
            self.assigned[v] = true;
            if self.injective {
                self.used[c] = true;
            }
            let mark = self.trail.len();
            let stop = self.propagate(v, c) && self.run(depth + 1, visit)?;
            self.undo(mark);
            self.assigned[v] = false;
            if self.injective {
                self.used[c] = false;
            }
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Runs the search, calling `visit` on every complete homomorphism until it
/// returns `false`.
#[allow(clippy::needless_range_loop)]
pub(crate) fn solve<T: Target + ?Sized>(
    g: &Graph,
    t: &T,
    opts: &SearchOptions,
    budget: &Budget,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<SearchStats> {
    let n = g.order();
    let big_n = t.order();
    if opts.injective && n > big_n {
        return Ok(SearchStats::default());
    }
    let mut domains: Vec<Option<Vec<usize>>> = vec![None; n];
    let loops: Option<Vec<usize>> =
        g.has_loops().then(|| (0..big_n).filter(|&a| t.arc(a, a)).collect());
    for v in 0..n {
        let fixed = opts.fixed.get(v).copied().flatten();
        let mut dom: Option<Vec<usize>> = fixed.map(|a| vec![a]);
        if g.has_loop(v) {
            let loops = loops.as_ref().expect("computed when loops exist");
            dom = Some(match dom {
                Some(d) => d.into_iter().filter(|a| loops.binary_search(a).is_ok()).collect(),
                None => loops.clone(),
            });
        }
        if opts.injective && opts.degree_filter {
            let need = (g.degree(v), g.indegree(v), g.outdegree(v));
            let fits = |a: usize| match t.degrees(a) {
                Some((d, i, o)) => d >= need.0 && i >= need.1 && o >= need.2,
                None => true,
            };
            dom = Some(match dom {
                Some(d) => d.into_iter().filter(|&a| fits(a)).collect(),
                None => (0..big_n).filter(|&a| fits(a)).collect(),
            });
        }
        if dom.as_ref().is_some_and(Vec::is_empty) {
            return Ok(SearchStats::default());
        }
        domains[v] = dom;
    }
    let nbrs = (0..n)
        .map(|v| {
            g.neighbors(v)
                .into_iter()
                .map(|w| Neighbour { w, fwd: g.has_edge(v, w), bwd: g.has_edge(w, v) })
                .collect()
        })
        .collect();
    let mut solver = Solver {
        t,
        injective: opts.injective,
        order: vertex_order(g, opts.order),
        nbrs,
        domains,
        trail: Vec::new(),
        assign: vec![0; n],
        assigned: vec![false; n],
        used: vec![false; if opts.injective { big_n } else { 0 }],
        ticker: Ticker::new(budget),
        stats: SearchStats::default(),
    };
    solver.run(0, visit)?;
    Ok(solver.stats)
}

/// Configurable homomorphism search from `g` to `h`.
#[derive(Clone, Debug)]
pub struct HomSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    injective: bool,
    degree_filter: bool,
    budget: Budget,
}

impl<'a> HomSearch<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph) -> Self {
        HomSearch { g, h, injective: false, degree_filter: true, budget: Budget::default() }
    }

    pub fn injective(mut self, yes: bool) -> Self {
        self.injective = yes;
        self
    }

    /// Toggles the degree pre-filter used by injective search.
    pub fn degree_filter(mut self, yes: bool) -> Self {
        self.degree_filter = yes;
        self
    }

    pub fn budget(mut self, budget: &Budget) -> Self {
        self.budget = budget.clone();
        self
    }

    fn options(&self, order: Order) -> SearchOptions {
        SearchOptions {
            injective: self.injective,
            degree_filter: self.degree_filter,
            order,
            fixed: Vec::new(),
        }
    }

    fn wrap(&self, map: Vec<usize>) -> Result<VertexMap> {
        let f = VertexMap::new(Arc::new(self.g.clone()), Arc::new(self.h.clone()), map)?;
        if !f.flags().hom || (self.injective && !f.flags().injective) {
            return Err(Error::Invalid("search produced an invalid map".into()));
        }
        Ok(f)
    }

    pub fn find_with_stats(&self) -> Result<(Option<VertexMap>, SearchStats)> {
        self.g.check_same_mode(self.h)?;
        let mut found = None;
        let target = GraphTarget::new(self.h);
        let stats = solve(self.g, &target, &self.options(Order::Degree), &self.budget, &mut |m| {
            found = Some(m.to_vec());
            false
        })?;
        Ok((found.map(|m| self.wrap(m)).transpose()?, stats))
    }

    pub fn find(&self) -> Result<Option<VertexMap>> {
        Ok(self.find_with_stats()?.0)
    }

    /// All homomorphisms in lexicographic order of the image sequence,
    /// stopping after `limit` if given.
    pub fn enumerate(&self, limit: Option<usize>) -> Result<Vec<VertexMap>> {
        self.g.check_same_mode(self.h)?;
        let mut maps: Vec<Vec<usize>> = Vec::new();
        if limit == Some(0) {
            return Ok(Vec::new());
        }
        let target = GraphTarget::new(self.h);
        solve(self.g, &target, &self.options(Order::Canonical), &self.budget, &mut |m| {
            maps.push(m.to_vec());
            limit.is_none_or(|l| maps.len() < l)
        })?;
        maps.into_iter().map(|m| self.wrap(m)).collect()
    }
}

pub fn find_hom(g: &Graph, h: &Graph) -> Result<Option<VertexMap>> {
    HomSearch::new(g, h).find()
}

pub fn find_hom_with(g: &Graph, h: &Graph, budget: &Budget) -> Result<Option<VertexMap>> {
    HomSearch::new(g, h).budget(budget).find()
}

pub fn find_injective_hom(g: &Graph, h: &Graph) -> Result<Option<VertexMap>> {
    HomSearch::new(g, h).injective(true).find()
}

pub fn find_injective_hom_with(
    g: &Graph,
    h: &Graph,
    budget: &Budget,
) -> Result<Option<VertexMap>> {
    HomSearch::new(g, h).injective(true).budget(budget).find()
}

pub fn enumerate_homs(g: &Graph, h: &Graph, limit: Option<usize>) -> Result<Vec<VertexMap>> {
    HomSearch::new(g, h).enumerate(limit)
}
