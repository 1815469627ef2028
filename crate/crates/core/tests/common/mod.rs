//! Helpers shared by the integration suites: random graphs, small targets,
//! infinity-aware arithmetic and a brute-force complexity oracle.
#![allow(dead_code)]

pub mod props;

use std::collections::HashMap;
use std::time::Duration;

use homtool_core::complexity::{hom_complexity_with, injective_hom_complexity_with, MethodChoice};
use homtool_core::graph::{generate, Family};
use homtool_core::{Budget, Graph, Mode, Result};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn budget() -> Budget {
    Budget::default().with_max_edges(15).with_time_limit(Duration::from_secs(20))
}

pub fn gen(f: Family) -> Graph {
    generate(&f).unwrap()
}

pub fn complete(n: usize) -> Graph {
    gen(Family::Complete(n))
}

/// Builds a graph on vertices `"0".."n-1"`.
pub fn build(mode: Mode, n: usize, edges: &[(usize, usize)]) -> Graph {
    let mut g = Graph::new(mode);
    for i in 0..n {
        g.add_vertex(i.to_string()).unwrap();
    }
    for &(u, v) in edges {
        g.add_edge(u, v).unwrap();
    }
    g
}

pub fn random_simple(rng: &mut impl Rng, max_n: usize) -> Graph {
    let n = rng.random_range(1..=max_n);
    let p = rng.random_range(0.2..0.8);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(Mode::Undirected, n, &edges)
}

/// Random digraph; loops are rare.
pub fn random_directed(rng: &mut impl Rng, max_n: usize) -> Graph {
    let n = rng.random_range(1..=max_n);
    let p = rng.random_range(0.15..0.5);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let q = if u == v { 0.05 } else { p };
            if rng.random_bool(q) {
                edges.push((u, v));
            }
        }
    }
    build(Mode::Directed, n, &edges)
}

/// Small simple targets, each with at least one edge.
pub fn simple_targets() -> Vec<Graph> {
    vec![
        complete(2),
        complete(3),
        complete(4),
        gen(Family::Path(3)),
        gen(Family::Cycle(5)),
        build(Mode::Undirected, 4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    ]
}

/// Small digraph targets, each with at least one arc.
pub fn directed_targets() -> Vec<Graph> {
    vec![
        build(Mode::Directed, 2, &[(0, 1)]),
        build(Mode::Directed, 2, &[(0, 1), (1, 0)]),
        build(Mode::Directed, 3, &[(0, 1), (1, 2), (2, 0)]),
        build(Mode::Directed, 3, &[(0, 1), (1, 2), (0, 2)]),
        build(Mode::Directed, 3, &[(0, 1), (1, 2)]),
        build(Mode::Directed, 2, &[(0, 0), (0, 1)]),
    ]
}

pub fn pick(rng: &mut impl Rng, graphs: &[Graph]) -> Graph {
    graphs[rng.random_range(0..graphs.len())].clone()
}

/// An isomorphic copy with shuffled vertex order and fresh identifiers.
pub fn shuffled_copy(rng: &mut impl Rng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.permuted(&perm).relabel(|_, id| format!("x{id}")).unwrap()
}

/// Random subgraph: a random subset of edges, their endpoints and each other
/// vertex with probability one half.
pub fn random_subgraph(rng: &mut impl Rng, g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().filter(|_| rng.random_bool(0.6)).collect();
    let mut keep = vec![false; g.order()];
    for &(u, v) in &edges {
        keep[u] = true;
        keep[v] = true;
    }
    for k in keep.iter_mut() {
        if !*k && rng.random_bool(0.5) {
            *k = true;
        }
    }
    if !keep.iter().any(|&k| k) && g.order() > 0 {
        keep[0] = true;
    }
    subgraph(g, &keep, &edges)
}

pub fn subgraph(g: &Graph, keep: &[bool], edges: &[(usize, usize)]) -> Graph {
    let mut s = Graph::new(g.mode());
    let mut index = vec![usize::MAX; g.order()];
    for v in (0..g.order()).filter(|&v| keep[v]) {
        index[v] = s.add_vertex(g.id(v)).unwrap();
    }
    for &(u, v) in edges {
        s.add_edge(index[u], index[v]).unwrap();
    }
    s
}

/// `None` is infinity.
pub type Val = Option<usize>;

pub fn le(a: Val, b: Val) -> bool {
    match (a, b) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(x), Some(y)) => x <= y,
    }
}

pub fn mul(a: Val, b: Val) -> Val {
    Some(a? * b?)
}

pub fn add(a: Val, b: Val) -> Val {
    Some(a? + b?)
}

pub fn max(a: Val, b: Val) -> Val {
    Some(a?.max(b?))
}

pub fn min(a: Val, b: Val) -> Val {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

pub fn c_with(g: &Graph, h: &Graph, method: MethodChoice, b: &Budget) -> Result<Val> {
    Ok(hom_complexity_with(g, h, method, b)?.value.finite())
}

pub fn ic_with(g: &Graph, h: &Graph, method: MethodChoice, b: &Budget) -> Result<Val> {
    Ok(injective_hom_complexity_with(g, h, method, b)?.value.finite())
}

pub fn c(g: &Graph, h: &Graph) -> Result<Val> {
    c_with(g, h, MethodChoice::Auto, &budget())
}

pub fn ic(g: &Graph, h: &Graph) -> Result<Val> {
    ic_with(g, h, MethodChoice::Auto, &budget())
}

/// Smallest `k` with `base^k >= x`, by repeated multiplication.
pub fn log_ceil(base: usize, x: usize) -> usize {
    let mut k = 0;
    let mut p = 1;
    while p < x {
        p *= base;
        k += 1;
    }
    k
}

/// A piece: its vertices and its edges.
type PieceKey = (Vec<usize>, Vec<(usize, usize)>);

/// Exhaustive cover oracle. Tries every assignment of edges and isolated
/// vertices to `k` labels, for `k = 1..=max_k`, and checks every piece by
/// trying every vertex map. Returns `None` when no cover with at most `max_k`
/// pieces exists.
pub struct Oracle<'a> {
    g: &'a Graph,
    h: &'a Graph,
    injective: bool,
    memo: HashMap<PieceKey, bool>,
}

impl<'a> Oracle<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph, injective: bool) -> Self {
        Oracle { g, h, injective, memo: HashMap::new() }
    }

    pub fn value(&mut self, max_k: usize) -> Option<usize> {
        let edges = self.g.edge_list();
        let isolated: Vec<usize> = (0..self.g.order()).filter(|&v| self.g.is_isolated(v)).collect();
        let items = edges.len() + isolated.len();
        for k in 1..=max_k {
            let total = k.pow(items as u32);
            for code in 0..total {
                let mut labels = Vec::with_capacity(items);
                let mut c = code;
                for _ in 0..items {
                    labels.push(c % k);
                    c /= k;
                }
                let all_ok = (0..k).all(|p| {
                    let piece_edges: Vec<(usize, usize)> =
                        (0..edges.len()).filter(|&i| labels[i] == p).map(|i| edges[i]).collect();
                    let mut vs: Vec<usize> = piece_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
                    vs.extend((0..isolated.len()).filter(|&i| labels[edges.len() + i] == p).map(|i| isolated[i]));
                    vs.sort_unstable();
                    vs.dedup();
                    self.piece_maps(vs, piece_edges)
                });
                if all_ok {
                    return Some(k);
                }
            }
        }
        None
    }

    fn piece_maps(&mut self, vs: Vec<usize>, edges: Vec<(usize, usize)>) -> bool {
        if let Some(&ok) = self.memo.get(&(vs.clone(), edges.clone())) {
            return ok;
        }
        let ok = self.any_map(&vs, &edges);
        self.memo.insert((vs, edges), ok);
        ok
    }

    /// Tries all `|V(h)|^|vs|` maps.
    fn any_map(&self, vs: &[usize], edges: &[(usize, usize)]) -> bool {
        let m = self.h.order();
        if vs.is_empty() {
            return true;
        }
        if m == 0 {
            return false;
        }
        let mut image = vec![0usize; self.g.order()];
        let total = m.pow(vs.len() as u32);
        'maps: for code in 0..total {
            let mut c = code;
            for &v in vs {
                image[v] = c % m;
                c /= m;
            }
            if self.injective {
                for (i, &a) in vs.iter().enumerate() {
                    if vs[i + 1..].iter().any(|&b| image[a] == image[b]) {
                        continue 'maps;
                    }
                }
            }
            if edges.iter().all(|&(u, v)| self.h.has_edge(image[u], image[v])) {
                return true;
            }
        }
        false
    }
}
