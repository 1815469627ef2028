//! Finite graphs (directed or undirected, loops allowed, no multi-edges) and
//! their subgraphs.

mod generate;
mod hgf;
mod ops;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use generate::{generate, Family};
pub use hgf::{parse_hgf, serialize_hgf};
pub use ops::{
    disjoint_union, inverse_image, or_power, or_power_with_budget, remove_isolated,
    tensor_product, tuple_id, union,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Directed,
    Undirected,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Directed => f.write_str("directed"),
            Mode::Undirected => f.write_str("undirected"),
        }
    }
}

/// A graph whose vertices are string identifiers kept in insertion order.
///
/// Vertices are addressed internally by their position in that order. In
/// undirected mode every edge is stored once, oriented so that the
/// lexicographically smaller identifier comes first.
#[derive(Clone, Debug)]
pub struct Graph {
    mode: Mode,
    name: Option<String>,
    ids: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeSet<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.mode == other.mode && self.ids == other.ids && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new(mode: Mode) -> Self {
        Graph {
            mode,
            name: None,
            ids: Vec::new(),
            index: HashMap::new(),
            edges: BTreeSet::new(),
            out: Vec::new(),
            inn: Vec::new(),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Name used in reports: the label if present, otherwise `"G"`.
    pub fn label(&self) -> &str {
        self.name.as_deref().unwrap_or("G")
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_directed(&self) -> bool {
        self.mode == Mode::Directed
    }

    /// Adds a vertex, failing if the identifier is already present.
    pub fn add_vertex(&mut self, id: impl Into<String>) -> Result<usize> {
        let id = id.into();
        if id.is_empty() || id.chars().any(char::is_whitespace) {
            return Err(Error::InvalidParameter(format!(
                "vertex identifier `{id}` must be nonempty and contain no whitespace"
            )));
        }
        if self.index.contains_key(&id) {
            return Err(Error::Invalid(format!("duplicate vertex `{id}`")));
        }
        let i = self.ids.len();
        self.index.insert(id.clone(), i);
        self.ids.push(id);
        self.out.push(Vec::new());
        self.inn.push(Vec::new());
        Ok(i)
    }

    /// Adds the vertex unless it already exists; returns its index.
    pub fn ensure_vertex(&mut self, id: &str) -> Result<usize> {
        match self.index.get(id) {
            Some(&i) => Ok(i),
            None => self.add_vertex(id),
        }
    }

    /// Adds an edge between two existing vertices. Returns `false` if the
    /// edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.ids.len();
        if u >= n || v >= n {
            return Err(Error::InvalidParameter(format!(
                "edge endpoint out of range ({u}, {v}) for {n} vertices"
            )));
        }
        let key = self.canonical(u, v);
        if !self.edges.insert(key) {
            return Ok(false);
        }
        match self.mode {
            Mode::Directed => {
                insert_sorted(&mut self.out[u], v);
                insert_sorted(&mut self.inn[v], u);
            }
            Mode::Undirected => {
                insert_sorted(&mut self.out[u], v);
                if u != v {
                    insert_sorted(&mut self.out[v], u);
                }
            }
        }
        Ok(true)
    }

    /// Adds an edge by vertex identifiers.
    pub fn add_edge_by_id(&mut self, u: &str, v: &str) -> Result<bool> {
        let a = self.index_of(u).ok_or_else(|| Error::UnknownVertex(u.to_string()))?;
        let b = self.index_of(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
        self.add_edge(a, b)
    }

    /// Canonical storage key of the edge `uv`.
    pub fn canonical(&self, u: usize, v: usize) -> (usize, usize) {
        match self.mode {
            Mode::Directed => (u, v),
            Mode::Undirected => {
                if self.ids[u] <= self.ids[v] {
                    (u, v)
                } else {
                    (v, u)
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        self.ids.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Edges in canonical orientation, sorted by endpoint indices.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    /// Position of each edge in [`Graph::edge_list`] order.
    pub fn edge_index(&self) -> HashMap<(usize, usize), usize> {
        self.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect()
    }

    /// `true` if `uv` is an arc (directed) or an edge (undirected).
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|&&(u, v)| u == v).count()
    }

    /// Undirected and loop-free.
    pub fn is_simple(&self) -> bool {
        self.mode == Mode::Undirected && !self.has_loops()
    }

    /// Out-neighbours (directed) or neighbours (undirected), loop included.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// In-neighbours (directed) or neighbours (undirected), loop included.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        match self.mode {
            Mode::Directed => &self.inn[v],
            Mode::Undirected => &self.out[v],
        }
    }

    /// Vertices adjacent to `v` in either direction, `v` itself excluded.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        match self.mode {
            Mode::Undirected => self.out[v].iter().copied().filter(|&w| w != v).collect(),
            Mode::Directed => {
                let mut all: Vec<usize> = self.out[v]
                    .iter()
                    .chain(self.inn[v].iter())
                    .copied()
                    .filter(|&w| w != v)
                    .collect();
                all.sort_unstable();
                all.dedup();
                all
            }
        }
    }

    /// Number of neighbours other than `v` itself.
    pub fn degree(&self, v: usize) -> usize {
        match self.mode {
            Mode::Undirected => self.out[v].len() - usize::from(self.has_loop(v)),
            Mode::Directed => self.neighbors(v).len(),
        }
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.in_neighbors(v).iter().filter(|&&w| w != v).count()
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.out[v].iter().filter(|&&w| w != v).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// A vertex with no incident edge at all (a loop counts as incident).
    pub fn is_isolated(&self, v: usize) -> bool {
        self.out[v].is_empty() && self.in_neighbors(v).is_empty()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.is_isolated(v)).collect()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        (0..self.order()).any(|v| self.is_isolated(v))
    }

    /// Identifier pair for an edge, in stored orientation.
    pub fn edge_ids(&self, e: (usize, usize)) -> (&str, &str) {
        (&self.ids[e.0], &self.ids[e.1])
    }

    pub fn fmt_edge(&self, e: (usize, usize)) -> String {
        let (a, b) = self.edge_ids(e);
        match self.mode {
            Mode::Directed => format!("({a},{b})"),
            Mode::Undirected => format!("{a}{b}"),
        }
    }

    /// The subgraph induced by `vertices` (indices), keeping this graph's
    /// identifiers and relative order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut g = Graph::new(self.mode);
        let mut local = vec![usize::MAX; self.order()];
        for &v in &keep {
            local[v] = g.add_vertex(self.ids[v].clone()).expect("identifiers are unique");
        }
        for &(u, v) in &self.edges {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                g.add_edge(local[u], local[v]).expect("endpoints exist");
            }
        }
        g
    }

    /// Renames every vertex through `rename`, keeping order and edges.
    pub fn relabel(&self, mut rename: impl FnMut(usize, &str) -> String) -> Result<Graph> {
        let mut g = Graph::new(self.mode);
        g.name = self.name.clone();
        for (i, id) in self.ids.iter().enumerate() {
            g.add_vertex(rename(i, id))?;
        }
        for &(u, v) in &self.edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Same graph with vertices reordered: new position `i` holds old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut inv = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let mut g = Graph::new(self.mode);
        g.name = self.name.clone();
        for &p in perm {
            g.add_vertex(self.ids[p].clone()).expect("identifiers are unique");
        }
        for &(u, v) in &self.edges {
            g.add_edge(inv[u], inv[v]).expect("endpoints exist");
        }
        g
    }

    pub(crate) fn check_same_mode(&self, other: &Graph) -> Result<()> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch(self.mode, other.mode));
        }
        Ok(())
    }
}

fn insert_sorted(list: &mut Vec<usize>, x: usize) {
    if let Err(pos) = list.binary_search(&x) {
        list.insert(pos, x);
    }
}

/// A subgraph of a shared parent graph, given by vertex and edge subsets.
#[derive(Clone, Debug)]
pub struct SubgraphRef {
    parent: Arc<Graph>,
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl PartialEq for SubgraphRef {
    fn eq(&self, other: &Self) -> bool {
        *self.parent == *other.parent
            && self.vertices == other.vertices
            && self.edges == other.edges
    }
}

impl SubgraphRef {
    /// Validates and normalises a subgraph description (indices into `parent`).
    pub fn new(
        parent: Arc<Graph>,
        vertices: impl IntoIterator<Item = usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = parent.order();
        let vset: BTreeSet<usize> = vertices.into_iter().collect();
        if let Some(&v) = vset.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidParameter(format!("vertex index {v} out of range")));
        }
        let mut eset = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n || !parent.has_edge(u, v) {
                return Err(Error::Invalid(format!("({u},{v}) is not an edge of the parent")));
            }
            if !vset.contains(&u) || !vset.contains(&v) {
                return Err(Error::Invalid(format!(
                    "edge {} has an endpoint outside the vertex subset",
                    parent.fmt_edge(parent.canonical(u, v))
                )));
            }
            eset.insert(parent.canonical(u, v));
        }
        Ok(SubgraphRef {
            parent,
            vertices: vset.into_iter().collect(),
            edges: eset.into_iter().collect(),
        })
    }

    /// The whole parent graph.
    pub fn whole(parent: Arc<Graph>) -> Self {
        let vertices = (0..parent.order()).collect();
        let edges = parent.edge_list();
        SubgraphRef { parent, vertices, edges }
    }

    /// Spanning subgraph with the given edges.
    pub fn spanning(
        parent: Arc<Graph>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = parent.order();
        Self::new(parent, 0..n, edges)
    }

    /// Subgraph made of the given edges and their endpoints.
    pub fn from_edges(
        parent: Arc<Graph>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let edges: Vec<_> = edges.into_iter().collect();
        let vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        Self::new(parent, vertices, edges)
    }

    pub fn parent(&self) -> &Arc<Graph> {
        &self.parent
    }

    /// Vertex indices into the parent, ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edges of the parent in canonical orientation, ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&self.parent.canonical(u, v)).is_ok()
    }

    /// Materialises the subgraph with the parent's identifiers and order.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.parent.mode());
        let mut local = vec![usize::MAX; self.parent.order()];
        for &v in &self.vertices {
            local[v] = g.add_vertex(self.parent.id(v).to_string()).expect("unique ids");
        }
        for &(u, v) in &self.edges {
            g.add_edge(local[u], local[v]).expect("endpoints are in the vertex subset");
        }
        g
    }
}
