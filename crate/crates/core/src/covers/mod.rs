//! Edge covering numbers: the generic `σ_S(G)` search and the clique
//! covering number, ℓ-particity and ℓ-partite dimension.
//!
//! Every class here is closed under enlarging a member to a maximal one, so
//! the search lists maximal members and solves an exact set cover over
//! `E(G)`. Only an opaque hereditary predicate falls back to an
//! edge-partition search.

mod setcover;

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Ticker};
use crate::complexity::partition::{connected_edge_order, edge_subgraph, EdgeSets};
use crate::complexity::{ceil_log, injective_hom_complexity_with, MethodChoice, Value};
use crate::error::{Error, Result};
use crate::graph::{generate, Family, Graph, SubgraphRef};
use crate::hom::{is_hom, Require, VertexMap};
use crate::invariants::{chromatic_number_with, clique_number, require_simple};

pub(crate) use setcover::min_cover;

/// The family `S` a cover draws its pieces from.
#[derive(Clone, Copy)]
pub enum CoverClass<'a> {
    /// No admissible subgraphs at all.
    Empty,
    Clique,
    /// `ℓ` nonempty independent parts.
    LPartite(usize),
    /// Complete `ℓ`-partite subgraphs.
    CompleteLPartite(usize),
    /// Subgraphs admitting a homomorphism into the given graph.
    Colourable(&'a Graph),
    /// An arbitrary predicate on candidate pieces (given as standalone
    /// graphs spanned by their edges).
    Predicate { hereditary: bool, test: &'a dyn Fn(&Graph) -> bool },
}

impl CoverClass<'_> {
    pub fn kind(&self) -> ClassKind {
        match *self {
            CoverClass::Empty => ClassKind::Empty,
            CoverClass::Clique => ClassKind::Clique,
            CoverClass::LPartite(l) => ClassKind::LPartite(l),
            CoverClass::CompleteLPartite(l) => ClassKind::CompleteLPartite(l),
            CoverClass::Colourable(_) => ClassKind::Colourable,
            CoverClass::Predicate { .. } => ClassKind::Predicate,
        }
    }

    /// Closed under removing edges from a member.
    pub fn is_hereditary(&self) -> bool {
        match *self {
            CoverClass::Empty | CoverClass::LPartite(_) | CoverClass::Colourable(_) => true,
            CoverClass::Clique | CoverClass::CompleteLPartite(_) => false,
            CoverClass::Predicate { hereditary, .. } => hereditary,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "class", content = "l")]
pub enum ClassKind {
    Empty,
    Clique,
    LPartite(usize),
    CompleteLPartite(usize),
    Colourable,
    Predicate,
}

/// Why a piece belongs to its class. Vertex indices refer to the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Clique(Vec<usize>),
    Parts(Vec<Vec<usize>>),
    /// Images of the piece's vertices (in the piece's vertex order) in the
    /// certificate target.
    Map(Vec<usize>),
    None,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverPiece {
    pub sub: SubgraphRef,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverCertificate {
    pub source: Arc<Graph>,
    pub class: ClassKind,
    /// The target graph for [`ClassKind::Colourable`].
    pub target: Option<Arc<Graph>>,
    pub pieces: Vec<CoverPiece>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverResult {
    /// `None` stands for `∞`.
    pub value: Option<usize>,
    /// The lower bound the search started from.
    pub lower: usize,
    pub certificate: Option<CoverCertificate>,
}

impl CoverResult {
    fn infinite(lower: usize) -> Self {
        CoverResult { value: None, lower, certificate: None }
    }

    pub fn value_string(&self) -> String {
        self.value.map_or_else(|| "inf".to_string(), |k| k.to_string())
    }
}

/// A member before it is turned into a piece.
enum Raw {
    Clique(Vec<usize>),
    /// A colouring of all of `V(G)` by at most ℓ colours.
    Colouring(Vec<usize>),
    /// A total map `V(G) → V(H)`.
    Map(Vec<usize>),
    Parts(Vec<Vec<usize>>),
    Edges(Vec<(usize, usize)>),
}

pub fn sigma_cover(g: &Graph, class: CoverClass<'_>) -> Result<CoverResult> {
    sigma_cover_with(g, class, &Budget::default())
}

pub fn sigma_cover_with(g: &Graph, class: CoverClass<'_>, budget: &Budget) -> Result<CoverResult> {
    cover(g, class, 1, budget)
}

fn cover(g: &Graph, class: CoverClass<'_>, lower: usize, budget: &Budget) -> Result<CoverResult> {
    match class {
        CoverClass::Empty => return Ok(CoverResult::infinite(lower)),
        CoverClass::LPartite(l) | CoverClass::CompleteLPartite(l) if l < 2 => {
            return Err(Error::InvalidParameter("ℓ must be at least 2".into()))
        }
        CoverClass::Colourable(h) => g.check_same_mode(h)?,
        _ => {}
    }
    let edges = g.edge_list();
    let limit = budget.cover_edges.min(64);
    if edges.len() > limit {
        return Err(Error::ResourceLimit(format!(
            "covering search is limited to {limit} edges, graph has {}",
            edges.len()
        )));
    }
    let source = Arc::new(g.clone());
    let target = match class {
        CoverClass::Colourable(h) => Some(Arc::new(h.clone())),
        _ => None,
    };
    let certificate = |pieces| CoverCertificate { source: source.clone(), class: class.kind(), target: target.clone(), pieces };
    if edges.is_empty() {
        return Ok(match edgeless_piece(g, class)? {
            Some(piece) => CoverResult { value: Some(1), lower, certificate: Some(certificate(vec![piece])) },
            None => CoverResult::infinite(lower),
        });
    }

    if let CoverClass::Predicate { hereditary: true, test } = class {
        return Ok(match partition_cover(g, &edges, test, budget)? {
            Some(parts) => {
                let pieces = parts
                    .into_iter()
                    .map(|es| Ok(CoverPiece { sub: SubgraphRef::from_edges(source.clone(), es)?, witness: Witness::None }))
                    .collect::<Result<Vec<_>>>()?;
                CoverResult { value: Some(pieces.len()), lower, certificate: Some(certificate(pieces)) }
            }
            None => CoverResult::infinite(lower),
        });
    }

    let raw = members(g, class, &edges, budget)?;
    let masks: Vec<u64> = raw.iter().map(|r| member_mask(g, &edges, class, r)).collect();
    let full = if edges.len() == 64 { u64::MAX } else { (1u64 << edges.len()) - 1 };
    let Some(chosen) = min_cover(&masks, full, lower, budget)? else {
        return Ok(CoverResult::infinite(lower));
    };
    let mut pieces = chosen
        .iter()
        .map(|&i| finish(&source, &edges, class, &raw[i], masks[i]))
        .collect::<Result<Vec<_>>>()?;
    pieces.sort_by(|a, b| a.sub.edges().cmp(b.sub.edges()));
    let cert = certificate(pieces);
    let failures = verify_cover(&cert);
    if !failures.is_empty() {
        return Err(Error::Invalid(format!("cover certificate failed verification: {}", failures.join("; "))));
    }
    Ok(CoverResult { value: Some(cert.pieces.len()), lower, certificate: Some(cert) })
}

/// The single piece covering an edgeless graph, if the class has one.
fn edgeless_piece(g: &Graph, class: CoverClass<'_>) -> Result<Option<CoverPiece>> {
    let parent = Arc::new(g.clone());
    let piece = |vs: Vec<usize>, witness| -> Result<Option<CoverPiece>> {
        Ok(Some(CoverPiece { sub: SubgraphRef::new(parent.clone(), vs, [])?, witness }))
    };
    match class {
        CoverClass::Empty | CoverClass::CompleteLPartite(_) => Ok(None),
        CoverClass::Clique => {
            let vs: Vec<usize> = (0..g.order().min(1)).collect();
            piece(vs.clone(), Witness::Clique(vs))
        }
        CoverClass::LPartite(l) if g.order() >= l => {
            piece((0..l).collect(), Witness::Parts((0..l).map(|v| vec![v]).collect()))
        }
        CoverClass::LPartite(_) => Ok(None),
        CoverClass::Colourable(_) => piece(Vec::new(), Witness::Map(Vec::new())),
        CoverClass::Predicate { test, .. } => {
            if test(&Graph::new(g.mode())) {
                piece(Vec::new(), Witness::None)
            } else {
                Ok(None)
            }
        }
    }
}

fn members(g: &Graph, class: CoverClass<'_>, edges: &[(usize, usize)], budget: &Budget) -> Result<Vec<Raw>> {
    match class {
        CoverClass::Clique => {
            let cliques = crate::invariants::maximal_cliques_with(g, budget)?;
            Ok(cliques.into_iter().filter(|c| c.len() >= 2).map(Raw::Clique).collect())
        }
        CoverClass::LPartite(l) => {
            if g.order() < l {
                return Ok(Vec::new());
            }
            check_map_count(l, g.order().saturating_sub(1), budget)?;
            let mut out = Vec::new();
            colourings(&mut vec![0; g.order()], 0, 0, l, &mut out, budget)?;
            Ok(out.into_iter().map(Raw::Colouring).collect())
        }
        CoverClass::Colourable(h) => {
            check_map_count(h.order(), g.order(), budget)?;
            if h.order() == 0 {
                return Ok(Vec::new());
            }
            let mut out = Vec::new();
            let mut f = vec![0; g.order()];
            let mut ticker = Ticker::new(budget);
            loop {
                ticker.tick()?;
                out.push(Raw::Map(f.clone()));
                if !advance(&mut f, h.order()) {
                    break;
                }
            }
            Ok(out)
        }
        CoverClass::CompleteLPartite(2) => bicliques(g, budget),
        CoverClass::CompleteLPartite(l) => multipartite(g, l, budget),
        CoverClass::Predicate { test, .. } => {
            if edges.len() > 20 {
                return Err(Error::ResourceLimit(
                    "non-hereditary predicates are searched over edge subsets of at most 20 edges".into(),
                ));
            }
            let mut ticker = Ticker::new(budget);
            let mut out = Vec::new();
            for s in 1u32..1 << edges.len() {
                ticker.tick()?;
                let es: Vec<_> = (0..edges.len()).filter(|i| s >> i & 1 == 1).map(|i| edges[i]).collect();
                if test(&edge_subgraph(g, es.iter().copied())) {
                    out.push(Raw::Edges(es));
                }
            }
            Ok(out)
        }
        CoverClass::Empty => Ok(Vec::new()),
    }
}

fn check_map_count(base: usize, exponent: usize, budget: &Budget) -> Result<()> {
    let count = (base as u64).checked_pow(exponent as u32);
    match count {
        Some(c) if c <= budget.cover_maps => Ok(()),
        _ => Err(Error::ResourceLimit(format!(
            "enumerating {base}^{exponent} vertex maps exceeds the limit of {}",
            budget.cover_maps
        ))),
    }
}

/// Next map in lexicographic order; `false` after the last one.
fn advance(f: &mut [usize], n: usize) -> bool {
    for slot in f.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Colourings with at most `l` colours, colours numbered by first use.
fn colourings(
    c: &mut Vec<usize>,
    v: usize,
    used: usize,
    l: usize,
    out: &mut Vec<Vec<usize>>,
    budget: &Budget,
) -> Result<()> {
    if v == c.len() {
        out.push(c.clone());
        return Ok(());
    }
    if v.is_multiple_of(8) {
        budget.check_deadline()?;
    }
    for colour in 0..(used + 1).min(l) {
        c[v] = colour;
        colourings(c, v + 1, used.max(colour + 1), l, out, budget)?;
    }
    Ok(())
}

fn bit_adjacency(g: &Graph) -> Vec<u32> {
    (0..g.order()).map(|v| g.neighbors(v).into_iter().fold(0u32, |acc, w| acc | 1 << w)).collect()
}

fn bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Maximal bicliques `A × B`: for every vertex set `S`, `B = N(S)` and
/// `A = N(B)`, so each biclique lies inside one of the listed ones.
fn bicliques(g: &Graph, budget: &Budget) -> Result<Vec<Raw>> {
    let n = g.order();
    if n > budget.biclique_vertices.min(24) {
        return Err(Error::ResourceLimit(format!(
            "biclique enumeration is limited to {} vertices",
            budget.biclique_vertices.min(24)
        )));
    }
    let adj = bit_adjacency(g);
    let all = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut common = vec![all; 1 << n];
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut ticker = Ticker::new(budget);
    for s in 1usize..1 << n {
        ticker.tick()?;
        let low = s.trailing_zeros() as usize;
        common[s] = common[s & (s - 1)] & adj[low];
        let b = common[s];
        if b == 0 {
            continue;
        }
        let a = bits(b).iter().fold(all, |acc, &v| acc & adj[v]);
        let key = if a.trailing_zeros() < b.trailing_zeros() { (a, b) } else { (b, a) };
        if seen.insert(key) {
            out.push(Raw::Parts(vec![bits(key.0), bits(key.1)]));
        }
    }
    Ok(out)
}

/// Edge-maximal complete `l`-partite subgraphs with `l ≥ 3`: assignments of
/// vertices to parts (or to none) where vertices in different parts are
/// adjacent and no left-out vertex could join a part.
fn multipartite(g: &Graph, l: usize, budget: &Budget) -> Result<Vec<Raw>> {
    let n = g.order();
    if n > budget.multipartite_vertices.min(32) {
        return Err(Error::ResourceLimit(format!(
            "complete {l}-partite enumeration is limited to {} vertices",
            budget.multipartite_vertices
        )));
    }
    struct Walk<'a> {
        adj: Vec<u32>,
        l: usize,
        parts: Vec<u32>,
        out: Vec<Raw>,
        ticker: Ticker<'a>,
    }
    impl Walk<'_> {
        fn fits(&self, v: usize, p: usize) -> bool {
            self.parts.iter().enumerate().all(|(q, &m)| q == p || m & !self.adj[v] == 0)
        }
        fn go(&mut self, v: usize, n: usize) -> Result<()> {
            self.ticker.tick()?;
            if v == n {
                let placed = self.parts.iter().fold(0, |a, m| a | m);
                let maximal = (0..n)
                    .filter(|&w| placed >> w & 1 == 0)
                    .all(|w| (0..self.l).all(|p| !self.fits(w, p)));
                if self.parts.len() == self.l && maximal {
                    self.out.push(Raw::Parts(self.parts.iter().map(|&m| bits(m)).collect()));
                }
                return Ok(());
            }
            // Not enough vertices left to open the missing parts.
            if self.l - self.parts.len() > n - v {
                return Ok(());
            }
            for p in 0..self.parts.len() {
                if self.fits(v, p) {
                    self.parts[p] |= 1 << v;
                    self.go(v + 1, n)?;
                    self.parts[p] &= !(1 << v);
                }
            }
            if self.parts.len() < self.l && self.fits(v, usize::MAX) {
                self.parts.push(1 << v);
                self.go(v + 1, n)?;
                self.parts.pop();
            }
            self.go(v + 1, n)
        }
    }
    let mut walk = Walk { adj: bit_adjacency(g), l, parts: Vec::new(), out: Vec::new(), ticker: Ticker::new(budget) };
    walk.go(0, n)?;
    Ok(walk.out)
}

fn member_mask(g: &Graph, edges: &[(usize, usize)], class: CoverClass<'_>, raw: &Raw) -> u64 {
    let pick = |keep: &dyn Fn(usize, usize) -> bool| {
        edges.iter().enumerate().filter(|&(_, &(u, v))| keep(u, v)).fold(0u64, |acc, (i, _)| acc | 1 << i)
    };
    match raw {
        Raw::Clique(c) => pick(&|u, v| u != v && c.binary_search(&u).is_ok() && c.binary_search(&v).is_ok()),
        Raw::Colouring(c) => pick(&|u, v| c[u] != c[v]),
        Raw::Map(f) => match class {
            CoverClass::Colourable(h) => pick(&|u, v| h.has_edge(f[u], f[v])),
            _ => unreachable!("maps come from colourable classes"),
        },
        Raw::Parts(parts) => {
            let mut part = vec![usize::MAX; g.order()];
            for (p, vs) in parts.iter().enumerate() {
                for &v in vs {
                    part[v] = p;
                }
            }
            pick(&|u, v| part[u] != usize::MAX && part[v] != usize::MAX && part[u] != part[v])
        }
        Raw::Edges(es) => pick(&|u, v| es.contains(&(u, v))),
    }
}

fn finish(
    source: &Arc<Graph>,
    edges: &[(usize, usize)],
    class: CoverClass<'_>,
    raw: &Raw,
    mask: u64,
) -> Result<CoverPiece> {
    let piece_edges: Vec<(usize, usize)> =
        (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
    let mut vertices: Vec<usize> = piece_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let witness = match raw {
        Raw::Clique(c) => {
            vertices = c.clone();
            Witness::Clique(c.clone())
        }
        Raw::Colouring(c) => {
            let CoverClass::LPartite(l) = class else { unreachable!("colourings come from ℓ-partite classes") };
            // Pad with the first uncovered vertices so that ℓ parts fit.
            let missing = l.saturating_sub(vertices.len());
            let pad: Vec<usize> =
                (0..source.order()).filter(|v| vertices.binary_search(v).is_err()).take(missing).collect();
            vertices.extend(pad);
            vertices.sort_unstable();
            let mut by_colour: Vec<Vec<usize>> = vec![Vec::new(); l];
            for &v in &vertices {
                by_colour[c[v]].push(v);
            }
            let mut parts: Vec<Vec<usize>> = by_colour.into_iter().filter(|p| !p.is_empty()).collect();
            while parts.len() < l {
                let donor = parts.iter().position(|p| p.len() >= 2).expect("|V| >= ℓ leaves a donor");
                let v = parts[donor].pop().expect("donor is nonempty");
                parts.push(vec![v]);
            }
            Witness::Parts(parts)
        }
        Raw::Map(f) => Witness::Map(vertices.iter().map(|&v| f[v]).collect()),
        Raw::Parts(parts) => {
            vertices = parts.concat();
            vertices.sort_unstable();
            Witness::Parts(parts.clone())
        }
        Raw::Edges(_) => Witness::None,
    };
    Ok(CoverPiece { sub: SubgraphRef::new(source.clone(), vertices, piece_edges)?, witness })
}

/// Edge-partition search for an opaque hereditary predicate.
fn partition_cover(
    g: &Graph,
    edges: &[(usize, usize)],
    test: &dyn Fn(&Graph) -> bool,
    budget: &Budget,
) -> Result<Option<EdgeSets>> {
    if edges.iter().any(|&e| !test(&edge_subgraph(g, [e]))) {
        return Ok(None);
    }
    let order = connected_edge_order(g);
    struct Dfs<'a> {
        g: &'a Graph,
        order: &'a [(usize, usize)],
        test: &'a dyn Fn(&Graph) -> bool,
        memo: HashMap<u64, bool>,
        masks: Vec<u64>,
        ticker: Ticker<'a>,
    }
    impl Dfs<'_> {
        fn feasible(&mut self, mask: u64) -> bool {
            if let Some(&ok) = self.memo.get(&mask) {
                return ok;
            }
            let es = (0..self.order.len()).filter(|i| mask >> i & 1 == 1).map(|i| self.order[i]);
            let ok = (self.test)(&edge_subgraph(self.g, es));
            self.memo.insert(mask, ok);
            ok
        }
        fn go(&mut self, i: usize, used: usize) -> Result<bool> {
            if i == self.order.len() {
                return Ok(true);
            }
            self.ticker.tick()?;
            for p in 0..(used + 1).min(self.masks.len()) {
                let mask = self.masks[p] | 1 << i;
                if !self.feasible(mask) {
                    continue;
                }
                let old = std::mem::replace(&mut self.masks[p], mask);
                if self.go(i + 1, used.max(p + 1))? {
                    return Ok(true);
                }
                self.masks[p] = old;
            }
            Ok(false)
        }
    }
    let mut dfs = Dfs { g, order: &order, test, memo: HashMap::new(), masks: Vec::new(), ticker: Ticker::new(budget) };
    for k in 1..=edges.len() {
        dfs.masks = vec![0; k];
        if dfs.go(0, 0)? {
            let pieces = dfs
                .masks
                .iter()
                .filter(|&&m| m != 0)
                .map(|&m| (0..order.len()).filter(|i| m >> i & 1 == 1).map(|i| order[i]).collect())
                .collect();
            return Ok(Some(pieces));
        }
    }
    unreachable!("single-edge pieces are feasible")
}

/// The parts of `g` when it is complete multipartite: the components of its
/// complement, each of which must be independent in `g`.
#[allow(clippy::needless_range_loop)]
pub fn complete_multipartite_parts(g: &Graph) -> Option<Vec<Vec<usize>>> {
    if g.has_loops() || g.order() == 0 {
        return None;
    }
    let n = g.order();
    let mut comp = vec![usize::MAX; n];
    let mut parts = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = parts.len();
        let mut stack = vec![s];
        let mut part = Vec::new();
        comp[s] = id;
        while let Some(u) = stack.pop() {
            part.push(u);
            for w in 0..n {
                if w != u && comp[w] == usize::MAX && !g.has_edge(u, w) && !g.has_edge(w, u) {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    let independent = g.edges().all(|(u, v)| comp[u] != comp[v]);
    independent.then_some(parts)
}

fn sorted_parts(parts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = parts
        .iter()
        .map(|p| {
            let mut p = p.clone();
            p.sort_unstable();
            p
        })
        .collect();
    out.sort();
    out
}

/// Re-checks a certificate: every source edge lies in some piece and every
/// piece satisfies its class. Returns the failures, empty when valid.
pub fn verify_cover(cert: &CoverCertificate) -> Vec<String> {
    let mut failures = Vec::new();
    let g = &cert.source;
    let mut hit = HashSet::new();
    for (i, piece) in cert.pieces.iter().enumerate() {
        let n = i + 1;
        if **piece.sub.parent() != **g {
            failures.push(format!("piece {n} is not a subgraph of the source"));
            continue;
        }
        hit.extend(piece.sub.edges().iter().copied());
        let vs = piece.sub.vertices();
        let local = piece.sub.to_graph();
        let problem = match (&cert.class, &piece.witness) {
            (ClassKind::Clique, Witness::Clique(c)) => {
                let all_pairs = vs.len() * vs.len().saturating_sub(1) / 2;
                if c.as_slice() != vs || local.size() != all_pairs || local.has_loops() {
                    Some("is not a clique")
                } else {
                    None
                }
            }
            (ClassKind::LPartite(l), Witness::Parts(parts)) => {
                let mut flat = parts.concat();
                flat.sort_unstable();
                let mut part = HashMap::new();
                for (p, xs) in parts.iter().enumerate() {
                    for &x in xs {
                        part.insert(x, p);
                    }
                }
                if parts.len() != *l || parts.iter().any(Vec::is_empty) || flat != vs {
                    Some("does not split into ℓ nonempty parts")
                } else if piece.sub.edges().iter().any(|(u, v)| part[u] == part[v]) {
                    Some("has an edge inside a part")
                } else {
                    None
                }
            }
            (ClassKind::CompleteLPartite(l), Witness::Parts(parts)) => match complete_multipartite_parts(&local) {
                Some(found) => {
                    let found: Vec<Vec<usize>> =
                        found.iter().map(|p| p.iter().map(|&x| vs[x]).collect()).collect();
                    if found.len() != *l {
                        Some("has the wrong number of parts")
                    } else if sorted_parts(&found) != sorted_parts(parts) {
                        Some("has parts different from its witness")
                    } else {
                        None
                    }
                }
                None => Some("is not complete multipartite"),
            },
            (ClassKind::Colourable, Witness::Map(f)) => match &cert.target {
                Some(h) => {
                    let ok = VertexMap::new(Arc::new(local), h.clone(), f.clone())
                        .map(|m| is_hom(&m, Require::HOM).ok())
                        .unwrap_or(false);
                    (!ok).then_some("map is not a homomorphism")
                }
                None => Some("has no target to map into"),
            },
            (ClassKind::Predicate, Witness::None) => None,
            _ => Some("has a witness of the wrong kind"),
        };
        if let Some(p) = problem {
            failures.push(format!("piece {n} {p}"));
        }
    }
    if cert.class == ClassKind::Empty && !cert.pieces.is_empty() {
        failures.push("the empty class has no members".into());
    }
    if cert.pieces.is_empty() {
        failures.push("certificate has no pieces".into());
    }
    for e in g.edges() {
        if !hit.contains(&e) {
            failures.push(format!("edge {} is in no piece", g.fmt_edge(e)));
        }
    }
    failures
}

fn require_l(l: usize) -> Result<()> {
    if l < 2 {
        return Err(Error::InvalidParameter("ℓ must be at least 2".into()));
    }
    Ok(())
}

pub fn clique_cover_number(g: &Graph) -> Result<CoverResult> {
    clique_cover_number_with(g, &Budget::default())
}

/// `cc(g)`: the least number of cliques covering every edge.
pub fn clique_cover_number_with(g: &Graph, budget: &Budget) -> Result<CoverResult> {
    require_simple(g, "the clique covering number")?;
    let r = cover(g, CoverClass::Clique, 1, budget)?;
    if r.value.is_some_and(|k| k > g.size().max(1)) {
        return Err(Error::Invalid("clique cover exceeds the edge count".into()));
    }
    Ok(r)
}

pub fn particity(g: &Graph, l: usize) -> Result<CoverResult> {
    particity_with(g, l, &Budget::default())
}

/// `β_ℓ(g)`: the least number of ℓ-partite subgraphs covering every edge.
/// Pieces are padded with further vertices of `g` when they have fewer than
/// ℓ vertices, so `β_ℓ(g) = ∞` only when `|V(g)| < ℓ`.
pub fn particity_with(g: &Graph, l: usize, budget: &Budget) -> Result<CoverResult> {
    require_l(l)?;
    require_simple(g, "ℓ-particity")?;
    let (chi, _) = chromatic_number_with(g, budget)?;
    let formula = if chi >= 2 { ceil_log(l, chi) } else { 1 };
    let r = cover(g, CoverClass::LPartite(l), formula, budget)?;
    // With at least two pieces needed the value is forced by the chromatic number.
    if formula >= 2 && r.value != Some(formula) {
        return Err(Error::Invalid(format!(
            "ℓ-particity {} disagrees with ⌈log_{l} {chi}⌉ = {formula}",
            r.value_string()
        )));
    }
    Ok(r)
}

pub fn partite_dimension(g: &Graph, l: usize) -> Result<CoverResult> {
    partite_dimension_with(g, l, &Budget::default())
}

/// `d_ℓ(g)`: the least number of complete ℓ-partite subgraphs covering
/// every edge. `d_2` is the bipartite dimension.
pub fn partite_dimension_with(g: &Graph, l: usize, budget: &Budget) -> Result<CoverResult> {
    require_l(l)?;
    require_simple(g, "the ℓ-partite dimension")?;
    let (chi, _) = chromatic_number_with(g, budget)?;
    let lower = if chi >= 2 { ceil_log(l, chi) } else { 1 };
    let r = cover(g, CoverClass::CompleteLPartite(l), lower, budget)?;
    let n = g.order();
    if l == 2 && n >= 2 && g.size() == n * (n - 1) / 2 && r.value != Some(ceil_log(2, n)) {
        return Err(Error::Invalid(format!("bipartite dimension of K_{n} came out as {}", r.value_string())));
    }
    Ok(r)
}

/// Lower bounds for `cc(g)` from hom-complexity, next to the classical
/// `log₂(|V|+1)` bound and the `⌊n²/4⌋` upper bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CcBounds {
    pub omega: usize,
    pub chi: usize,
    /// `IC(g; K_ω)`.
    pub injective_bound: usize,
    /// `C(g; K_ω) = ⌈log_ω χ⌉`.
    pub log_bound: usize,
    /// `log₂(|V|+1)`.
    pub literature_bound: f64,
    /// `⌊|V|²/4⌋`.
    pub upper_bound: usize,
}

pub fn cc_lower_bounds(g: &Graph) -> Result<CcBounds> {
    cc_lower_bounds_with(g, &Budget::default())
}

pub fn cc_lower_bounds_with(g: &Graph, budget: &Budget) -> Result<CcBounds> {
    require_simple(g, "clique cover bounds")?;
    if g.has_isolated_vertices() {
        return Err(Error::Hypothesis("clique cover bounds need a graph without isolated vertices".into()));
    }
    let (omega, _) = clique_number(g)?;
    if omega < 2 {
        return Err(Error::Hypothesis("clique cover bounds need ω >= 2".into()));
    }
    let (chi, _) = chromatic_number_with(g, budget)?;
    let k = generate(&Family::Complete(omega))?;
    let ic = injective_hom_complexity_with(g, &k, MethodChoice::Auto, budget)?;
    let Value::Finite(injective_bound) = ic.value else {
        return Err(Error::Invalid("IC into the clique number must be finite".into()));
    };
    let n = g.order();
    Ok(CcBounds {
        omega,
        chi,
        injective_bound,
        log_bound: ceil_log(omega, chi),
        literature_bound: ((n + 1) as f64).log2(),
        upper_bound: n * n / 4,
    })
}

#[cfg(test)]
mod tests;
