//! Vertex maps, homomorphism checks and the exact search.

mod core;
mod search;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Graph, SubgraphRef};

pub use self::core::{core, core_with_budget, find_retraction};
#[allow(unused_imports)]
pub(crate) use search::{solve, GraphTarget, OrPowerTarget, Order, SearchOptions, Target};
pub use search::{
    enumerate_homs, find_hom, find_hom_with, find_injective_hom, find_injective_hom_with,
    HomSearch, SearchStats,
};

/// Properties of a vertex map, computed when the map is built.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct MapFlags {
    pub hom: bool,
    pub injective: bool,
    pub surjective: bool,
    /// Every edge of the codomain is the image of some edge.
    pub edge_surjective: bool,
}

/// A total map `V(domain) → V(codomain)`.
#[derive(Clone, Debug)]
pub struct VertexMap {
    domain: Arc<Graph>,
    codomain: Arc<Graph>,
    map: Vec<usize>,
    flags: MapFlags,
}

impl PartialEq for VertexMap {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && *self.domain == *other.domain && *self.codomain == *other.codomain
    }
}

impl VertexMap {
    pub fn new(domain: Arc<Graph>, codomain: Arc<Graph>, map: Vec<usize>) -> Result<Self> {
        domain.check_same_mode(&codomain)?;
        if map.len() != domain.order() {
            return Err(Error::Invalid(format!(
                "map has {} entries for {} vertices",
                map.len(),
                domain.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&a| a >= codomain.order()) {
            return Err(Error::Invalid(format!("image index {bad} out of range")));
        }
        let flags = compute_flags(&domain, &codomain, &map);
        Ok(VertexMap { domain, codomain, map, flags })
    }

    /// Builds a map from identifier pairs; every domain vertex must appear.
    pub fn from_pairs<'a>(
        domain: Arc<Graph>,
        codomain: Arc<Graph>,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut map = vec![usize::MAX; domain.order()];
        for (v, a) in pairs {
            let i = domain.index_of(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
            let j = codomain.index_of(a).ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            map[i] = j;
        }
        if let Some(v) = map.iter().position(|&a| a == usize::MAX) {
            return Err(Error::Invalid(format!("map is undefined at `{}`", domain.id(v))));
        }
        Self::new(domain, codomain, map)
    }

    pub fn identity(g: Arc<Graph>) -> Self {
        let map = (0..g.order()).collect();
        Self::new(g.clone(), g, map).expect("identity is well formed")
    }

    pub fn domain(&self) -> &Arc<Graph> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Graph> {
        &self.codomain
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn flags(&self) -> MapFlags {
        self.flags
    }

    pub fn is_hom(&self) -> bool {
        self.flags.hom
    }

    /// `(v, f(v))` identifier pairs in domain order.
    pub fn pairs(&self) -> Vec<(&str, &str)> {
        self.map
            .iter()
            .enumerate()
            .map(|(v, &a)| (self.domain.id(v), self.codomain.id(a)))
            .collect()
    }

    /// Image of a domain vertex by identifier.
    pub fn get(&self, v: &str) -> Option<&str> {
        self.domain.index_of(v).map(|i| self.codomain.id(self.map[i]))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &VertexMap) -> Result<VertexMap> {
        if *self.codomain != *next.domain {
            return Err(Error::Invalid("maps do not compose".into()));
        }
        let map = self.map.iter().map(|&a| next.map[a]).collect();
        Self::new(self.domain.clone(), next.codomain.clone(), map)
    }

    /// The restriction to a subgraph of the domain, with the subgraph as the
    /// new domain.
    pub fn restrict(&self, sub: &SubgraphRef) -> Result<VertexMap> {
        if **sub.parent() != *self.domain {
            return Err(Error::Invalid("subgraph is not taken in the domain".into()));
        }
        let map = sub.vertices().iter().map(|&v| self.map[v]).collect();
        Self::new(Arc::new(sub.to_graph()), self.codomain.clone(), map)
    }

    /// Same map with a different (structurally equal) codomain handle.
    pub fn with_codomain(&self, codomain: Arc<Graph>) -> Result<VertexMap> {
        let map = self
            .map
            .iter()
            .map(|&a| {
                codomain
                    .index_of(self.codomain.id(a))
                    .ok_or_else(|| Error::UnknownVertex(self.codomain.id(a).to_string()))
            })
            .collect::<Result<_>>()?;
        Self::new(self.domain.clone(), codomain, map)
    }
}

fn compute_flags(g: &Graph, h: &Graph, map: &[usize]) -> MapFlags {
    let hom = g.edges().all(|(u, v)| h.has_edge(map[u], map[v]));
    let mut seen = vec![false; h.order()];
    let mut injective = true;
    for &a in map {
        injective &= !std::mem::replace(&mut seen[a], true);
    }
    let surjective = seen.iter().all(|&s| s);
    let hit: HashSet<(usize, usize)> =
        g.edges().map(|(u, v)| h.canonical(map[u], map[v])).collect();
    let edge_surjective = h.edges().all(|e| hit.contains(&e));
    MapFlags { hom, injective, surjective, edge_surjective }
}

/// Which properties [`is_hom`] should insist on besides preserving edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Require {
    pub injective: bool,
    pub surjective: bool,
    pub edge_surjective: bool,
}

impl Require {
    pub const HOM: Require = Require { injective: false, surjective: false, edge_surjective: false };
    pub const INJECTIVE: Require =
        Require { injective: true, surjective: false, edge_surjective: false };
    pub const SURJECTIVE: Require =
        Require { injective: false, surjective: true, edge_surjective: false };
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Edge `uv` is sent to the non-edge `f(u)f(v)`.
    EdgeNotPreserved { edge: (String, String), image: (String, String) },
    /// Two vertices share an image.
    NotInjective { first: String, second: String, image: String },
    VertexNotHit(String),
    EdgeNotHit((String, String)),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeNotPreserved { edge, image } => write!(
                f,
                "edge {}-{} maps to non-edge {}-{}",
                edge.0, edge.1, image.0, image.1
            ),
            Violation::NotInjective { first, second, image } => {
                write!(f, "{first} and {second} both map to {image}")
            }
            Violation::VertexNotHit(v) => write!(f, "vertex {v} is not in the image"),
            Violation::EdgeNotHit((a, b)) => write!(f, "edge {a}-{b} is not in the image"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomReport {
    pub flags: MapFlags,
    pub violations: Vec<Violation>,
}

impl HomReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `f` edge by edge and lists every violated requirement.
pub fn is_hom(f: &VertexMap, require: Require) -> HomReport {
    let (g, h, map) = (&f.domain, &f.codomain, &f.map);
    let mut violations = Vec::new();
    for (u, v) in g.edges() {
        if !h.has_edge(map[u], map[v]) {
            violations.push(Violation::EdgeNotPreserved {
                edge: (g.id(u).into(), g.id(v).into()),
                image: (h.id(map[u]).into(), h.id(map[v]).into()),
            });
        }
    }
    if require.injective {
        let mut first = vec![None; h.order()];
        for (v, &a) in map.iter().enumerate() {
            match first[a] {
                Some(u) => violations.push(Violation::NotInjective {
                    first: g.id(u).into(),
                    second: g.id(v).into(),
                    image: h.id(a).into(),
                }),
                None => first[a] = Some(v),
            }
        }
    }
    if require.surjective {
        let mut seen = vec![false; h.order()];
        for &a in map {
            seen[a] = true;
        }
        for (a, _) in seen.iter().enumerate().filter(|(_, &s)| !s) {
            violations.push(Violation::VertexNotHit(h.id(a).into()));
        }
    }
    if require.edge_surjective {
        let hit: HashSet<(usize, usize)> =
            g.edges().map(|(u, v)| h.canonical(map[u], map[v])).collect();
        for e in h.edges().filter(|e| !hit.contains(e)) {
            let (a, b) = h.edge_ids(e);
            violations.push(Violation::EdgeNotHit((a.into(), b.into())));
        }
    }
    HomReport { flags: f.flags, violations }
}
