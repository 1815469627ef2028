use std::collections::HashSet;

use super::{Graph, SubgraphRef};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hom::VertexMap;

/// Identifier of a tuple vertex: components joined by commas in parentheses.
pub fn tuple_id<S: AsRef<str>>(parts: &[S]) -> String {
    let inner: Vec<&str> = parts.iter().map(AsRef::as_ref).collect();
    format!("({})", inner.join(","))
}

/// `V(a) ∪ V(b)`, `E(a) ∪ E(b)`, matching vertices by identifier.
pub fn union(a: &Graph, b: &Graph) -> Result<Graph> {
    a.check_same_mode(b)?;
    let mut g = a.clone();
    g.name = None;
    let local: Vec<usize> = b
        .ids()
        .iter()
        .map(|id| g.ensure_vertex(id))
        .collect::<Result<_>>()?;
    for (u, v) in b.edges() {
        g.add_edge(local[u], local[v])?;
    }
    Ok(g)
}

/// Union after renaming `b`'s identifiers that clash with `a`'s by appending
/// primes.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph> {
    a.check_same_mode(b)?;
    let mut taken: HashSet<String> = a.ids().iter().chain(b.ids()).cloned().collect();
    let renamed = b.relabel(|_, id| {
        if a.index_of(id).is_none() {
            return id.to_string();
        }
        let mut fresh = format!("{id}'");
        while taken.contains(&fresh) {
            fresh.push('\'');
        }
        taken.insert(fresh.clone());
        fresh
    })?;
    let mut g = union(a, &renamed)?;
    g.name = None;
    Ok(g)
}

/// Categorical product: `(u1,u2) ~ (v1,v2)` iff `u1v1 ∈ E(a)` and `u2v2 ∈ E(b)`.
pub fn tensor_product(a: &Graph, b: &Graph) -> Result<Graph> {
    a.check_same_mode(b)?;
    let nb = b.order();
    let mut g = Graph::new(a.mode());
    for x in a.ids() {
        for y in b.ids() {
            g.add_vertex(tuple_id(&[x, y]))?;
        }
    }
    let arcs = |h: &Graph| -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, v) in h.edges() {
            out.push((u, v));
            if !h.is_directed() && u != v {
                out.push((v, u));
            }
        }
        out
    };
    let bs = arcs(b);
    for (u1, v1) in arcs(a) {
        for &(u2, v2) in &bs {
            g.add_edge(u1 * nb + u2, v1 * nb + v2)?;
        }
    }
    Ok(g)
}

/// Number of edges of the `k`-th OR-power, without building it. Saturates.
pub(crate) fn or_power_edge_count(h: &Graph, k: u32) -> u128 {
    let n = h.order() as u128;
    let loops = h.loop_count() as u128;
    let ordered_adjacent = if h.is_directed() {
        h.size() as u128
    } else {
        2 * (h.size() as u128 - loops) + loops
    };
    let pow = |b: u128| b.checked_pow(k).unwrap_or(u128::MAX);
    let total_pairs = pow(n.saturating_mul(n));
    let ordered = total_pairs.saturating_sub(pow(n * n - ordered_adjacent));
    if h.is_directed() {
        ordered
    } else {
        let power_loops = pow(n).saturating_sub(pow(n - loops));
        (ordered - power_loops) / 2 + power_loops
    }
}

/// `H^(k)`: `k`-tuples, adjacent when adjacent in at least one coordinate.
pub fn or_power(h: &Graph, k: usize) -> Result<Graph> {
    or_power_with_budget(h, k, &Budget::default())
}

pub fn or_power_with_budget(h: &Graph, k: usize, budget: &Budget) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("OR-power exponent must be >= 1".into()));
    }
    let n = h.order();
    let count = u32::try_from(k)
        .ok()
        .and_then(|k| n.checked_pow(k))
        .filter(|&c| c <= budget.orpower_vertices)
        .ok_or_else(|| {
            Error::ResourceLimit(format!(
                "OR-power of a {n}-vertex graph to the {k} exceeds {} vertices",
                budget.orpower_vertices
            ))
        })?;
    let edges = or_power_edge_count(h, k as u32);
    if edges > budget.orpower_edges as u128 {
        return Err(Error::ResourceLimit(format!(
            "OR-power would have {edges} edges, budget is {}",
            budget.orpower_edges
        )));
    }

    let tuple = |mut x: usize| -> Vec<usize> {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = x % n;
            x /= n;
        }
        t
    };
    let tuples: Vec<Vec<usize>> = (0..count).map(tuple).collect();
    let mut g = Graph::new(h.mode());
    for t in &tuples {
        let parts: Vec<&str> = t.iter().map(|&i| h.id(i)).collect();
        g.add_vertex(tuple_id(&parts))?;
    }
    for x in 0..count {
        let start = if h.is_directed() { 0 } else { x };
        for y in start..count {
            if tuples[x].iter().zip(&tuples[y]).any(|(&a, &b)| h.has_edge(a, b)) {
                g.add_edge(x, y)?;
            }
        }
    }
    if let Some(name) = h.name() {
        g.set_name(format!("{name}^({k})"));
    }
    Ok(g)
}

/// `f⁻¹(K)`: the vertices mapped into `K`, and the edges of the domain whose
/// image is an edge of `K`.
pub fn inverse_image(f: &VertexMap, k: &SubgraphRef) -> Result<SubgraphRef> {
    if !f.flags().hom {
        return Err(Error::NotVerified("inverse image needs a homomorphism".into()));
    }
    if **k.parent() != **f.codomain() {
        return Err(Error::Invalid(
            "subgraph is not taken in the codomain of the map".into(),
        ));
    }
    let g = f.domain();
    let vertices: Vec<usize> =
        (0..g.order()).filter(|&v| k.contains_vertex(f.image(v))).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| k.contains_edge(f.image(u), f.image(v)))
        .collect();
    SubgraphRef::new(g.clone(), vertices, edges)
}

/// Drops every vertex with no incident edge (a loop counts as incident).
pub fn remove_isolated(g: &Graph) -> Graph {
    let keep: Vec<usize> = (0..g.order()).filter(|&v| !g.is_isolated(v)).collect();
    let mut out = g.induced(&keep);
    out.name = g.name.clone();
    out
}
