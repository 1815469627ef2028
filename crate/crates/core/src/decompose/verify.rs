//! Independent re-check of quasi-homomorphism certificates.

use std::fmt;
use std::sync::Arc;

use crate::budget::Budget;
use crate::complexity::{
    hom_complexity_with, injective_hom_complexity_with, MethodChoice, QuasiHom, Value,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::hom::{is_hom, Require, VertexMap, Violation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    NoPieces,
    SourceMismatch,
    TargetMismatch,
    /// The piece is not a subgraph of the source.
    NotASubgraph { piece: usize },
    /// The piece's map is not defined on exactly the piece's vertices.
    DomainMismatch { piece: usize },
    Map { piece: usize, violation: Violation },
    UncoveredVertex(String),
    UncoveredEdge(String),
    /// The piece count differs from the exact value.
    NotOptimal { pieces: usize, exact: String },
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::NoPieces => f.write_str("plan has no pieces"),
            VerifyFailure::SourceMismatch => f.write_str("plan source differs from the graph"),
            VerifyFailure::TargetMismatch => f.write_str("plan target differs from the graph"),
            VerifyFailure::NotASubgraph { piece } => {
                write!(f, "piece {} is not a subgraph of the source", piece + 1)
            }
            VerifyFailure::DomainMismatch { piece } => {
                write!(f, "piece {} map is not defined on the piece", piece + 1)
            }
            VerifyFailure::Map { piece, violation } => write!(f, "piece {}: {violation}", piece + 1),
            VerifyFailure::UncoveredVertex(v) => write!(f, "vertex {v} is in no piece"),
            VerifyFailure::UncoveredEdge(e) => write!(f, "edge {e} is in no piece"),
            VerifyFailure::NotOptimal { pieces, exact } => {
                write!(f, "plan has {pieces} pieces but the exact value is {exact}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub pieces: usize,
    pub failures: Vec<VerifyFailure>,
    /// Set when optimality was checked.
    pub optimal: Option<bool>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "valid ({} pieces)", self.pieces);
        }
        let items: Vec<String> = self.failures.iter().map(ToString::to_string).collect();
        f.write_str(&items.join("; "))
    }
}

/// Checks that the pieces cover every vertex and edge of `g` and that each
/// piece map is a (vertex-injective, if asked) homomorphism into `h`.
pub fn verify_quasi_hom(plan: &QuasiHom, g: &Graph, h: &Graph, injective: bool) -> VerifyReport {
    let mut failures = Vec::new();
    if plan.pieces.is_empty() {
        failures.push(VerifyFailure::NoPieces);
    }
    if *plan.source != *g {
        failures.push(VerifyFailure::SourceMismatch);
    }
    if *plan.target != *h {
        failures.push(VerifyFailure::TargetMismatch);
    }
    let mut vertex_hit = vec![false; g.order()];
    let mut edge_hit = vec![false; g.size()];
    let index = g.edge_index();
    let require = if injective { Require::INJECTIVE } else { Require::HOM };
    for (i, p) in plan.pieces.iter().enumerate() {
        if **p.sub.parent() != *g {
            failures.push(VerifyFailure::NotASubgraph { piece: i });
            continue;
        }
        if **p.map.domain() != p.sub.to_graph() {
            failures.push(VerifyFailure::DomainMismatch { piece: i });
        } else if *p.map.codomain().as_ref() != *h {
            failures.push(VerifyFailure::TargetMismatch);
        } else {
            for violation in is_hom(&p.map, require).violations {
                failures.push(VerifyFailure::Map { piece: i, violation });
            }
        }
        for &v in p.sub.vertices() {
            vertex_hit[v] = true;
        }
        for e in p.sub.edges() {
            if let Some(&k) = index.get(e) {
                edge_hit[k] = true;
            }
        }
    }
    for v in (0..g.order()).filter(|&v| !vertex_hit[v]) {
        failures.push(VerifyFailure::UncoveredVertex(g.id(v).to_string()));
    }
    for (k, e) in g.edges().enumerate() {
        if !edge_hit[k] {
            failures.push(VerifyFailure::UncoveredEdge(g.fmt_edge(e)));
        }
    }
    failures.dedup();
    VerifyReport { pieces: plan.pieces.len(), failures, optimal: None }
}

/// [`verify_quasi_hom`] plus a comparison of the piece count with the exact
/// complexity computed by the engine.
pub fn verify_optimality(
    plan: &QuasiHom,
    g: &Graph,
    h: &Graph,
    injective: bool,
    budget: &Budget,
) -> Result<VerifyReport> {
    let mut report = verify_quasi_hom(plan, g, h, injective);
    let exact = if injective {
        injective_hom_complexity_with(g, h, MethodChoice::Auto, budget)?
    } else {
        hom_complexity_with(g, h, MethodChoice::Auto, budget)?
    };
    let optimal = exact.value == Value::Finite(plan.pieces.len());
    if !optimal {
        report.failures.push(VerifyFailure::NotOptimal {
            pieces: plan.pieces.len(),
            exact: exact.value.to_string(),
        });
    }
    report.optimal = Some(optimal);
    Ok(report)
}

/// The least-index flattening `f(v) = f_i(v)` for the first piece containing
/// `v`, with the source edges it fails to preserve.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedMap {
    pub map: VertexMap,
    pub broken_edges: Vec<String>,
}

pub fn induced_map(plan: &QuasiHom) -> Result<InducedMap> {
    let g = &plan.source;
    let mut map = vec![usize::MAX; g.order()];
    for p in &plan.pieces {
        for (local, &v) in p.sub.vertices().iter().enumerate() {
            if map[v] == usize::MAX {
                map[v] = p.map.image(local);
            }
        }
    }
    if let Some(v) = map.iter().position(|&a| a == usize::MAX) {
        return Err(crate::Error::Invalid(format!("vertex {} is in no piece", g.id(v))));
    }
    let map = VertexMap::new(g.clone(), Arc::clone(&plan.target), map)?;
    let broken_edges = g
        .edges()
        .filter(|&(u, v)| !plan.target.has_edge(map.image(u), map.image(v)))
        .map(|e| g.fmt_edge(e))
        .collect();
    Ok(InducedMap { map, broken_edges })
}
