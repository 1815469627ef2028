//! Strong hom-complexity: quasi-homomorphisms whose piece images jointly
//! cover the whole target.
//!
//! Enlarging a piece to the spanning subgraph of all edges its map preserves
//! only enlarges its image, so it suffices to choose total maps `f_i` and
//! take `G_i = (V(G), {uv : f_i(u)f_i(v) ∈ E(H)})`. The search is then a
//! minimum set cover over `E(G) ∪ V(H) ∪ E(H)`.

use std::sync::Arc;

use super::engine::hom_complexity_with;
use super::{
    Bound, BoundTag, ComplexityResult, InfiniteReason, Kind, Method, MethodChoice, Piece,
    QuasiHom, Value,
};
use crate::budget::Budget;
use crate::decompose::verify_quasi_hom;
use crate::error::{Error, Result};
use crate::graph::{Graph, SubgraphRef};
use crate::hom::VertexMap;

pub fn strong_hom_complexity(g: &Graph, h: &Graph) -> Result<ComplexityResult> {
    strong_hom_complexity_with(g, h, &Budget::default())
}

pub fn strong_hom_complexity_with(g: &Graph, h: &Graph, budget: &Budget) -> Result<ComplexityResult> {
    g.check_same_mode(h)?;
    let limit = budget.strong_size;
    if [g.order(), g.size(), h.order(), h.size()].iter().any(|&s| s > limit) {
        return Err(Error::ResourceLimit(format!(
            "strong complexity is limited to {limit} vertices and edges per graph"
        )));
    }
    let plain = hom_complexity_with(g, h, MethodChoice::Auto, budget)?;
    let trivial = Bound { value: 1, tag: BoundTag::Trivial };
    let mut trail = vec![trivial];
    let lower = match plain.value {
        Value::Infinite(reason) => {
            return Ok(ComplexityResult {
                value: Value::Infinite(reason),
                kind: Kind::Plain,
                lower: trivial,
                upper: None,
                trail,
                method: Method::Finiteness,
                certificate: None,
            })
        }
        Value::Finite(c) => Bound { value: c, tag: BoundTag::Search },
    };
    trail.push(lower);

    let g_edges = g.edge_list();
    let h_edges = h.edge_index();
    let (m, nh) = (g_edges.len(), h.order());
    let full: u32 = (1 << (m + nh + h_edges.len())) - 1;

    // Coverage mask of every total map, keeping the first map per mask.
    let mut options: Vec<(u32, Vec<usize>)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut f = vec![0usize; g.order()];
    loop {
        budget.check_deadline()?;
        let mut mask = 0u32;
        for &a in &f {
            mask |= 1 << (m + a);
        }
        for (i, &(u, v)) in g_edges.iter().enumerate() {
            if h.has_edge(f[u], f[v]) {
                mask |= 1 << i;
                mask |= 1 << (m + nh + h_edges[&h.canonical(f[u], f[v])]);
            }
        }
        if seen.insert(mask) {
            options.push((mask, f.clone()));
        }
        if !advance(&mut f, nh) {
            break;
        }
    }
    // Drop options dominated by another.
    let masks: Vec<u32> = options.iter().map(|o| o.0).collect();
    options.retain(|&(a, _)| !masks.iter().any(|&b| b != a && a & b == a));

    let union = options.iter().fold(0, |acc, o| acc | o.0);
    if union != full {
        return Ok(ComplexityResult {
            value: Value::Infinite(InfiniteReason::UncoverableTarget),
            kind: Kind::Plain,
            lower,
            upper: None,
            trail,
            method: Method::Exhaustive,
            certificate: None,
        });
    }
    let mut chosen = Vec::new();
    let mut k = lower.value;
    while !cover(&options, full, 0, k, &mut chosen) {
        k += 1;
    }
    if chosen.is_empty() {
        // Nothing to cover: one empty piece.
        chosen.push(0);
    }

    let source = Arc::new(g.clone());
    let target = Arc::new(h.clone());
    let pieces = chosen
        .iter()
        .map(|&i| {
            let f = &options[i].1;
            let edges = g_edges.iter().copied().filter(|&(u, v)| h.has_edge(f[u], f[v]));
            let sub = SubgraphRef::spanning(source.clone(), edges)?;
            let map = VertexMap::new(Arc::new(sub.to_graph()), target.clone(), f.clone())?;
            Ok(Piece { sub, map })
        })
        .collect::<Result<Vec<_>>>()?;
    let certificate = QuasiHom { source, target, pieces, kind: Kind::Plain };
    if !verify_quasi_hom(&certificate, g, h, false).ok() || certificate.len() < lower.value {
        return Err(Error::Invalid("strong certificate failed verification".into()));
    }
    Ok(ComplexityResult {
        value: Value::Finite(certificate.len()),
        kind: Kind::Plain,
        lower,
        upper: None,
        trail,
        method: Method::Exhaustive,
        certificate: Some(certificate),
    })
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

/// Picks at most `k` options covering `full`, branching on the lowest
/// uncovered element.
fn cover(options: &[(u32, Vec<usize>)], full: u32, covered: u32, k: usize, chosen: &mut Vec<usize>) -> bool {
    if covered == full {
        return true;
    }
    if k == 0 {
        return false;
    }
    let missing = (full & !covered).trailing_zeros();
    for (i, (mask, _)) in options.iter().enumerate() {
        if mask >> missing & 1 == 1 {
            chosen.push(i);
            if cover(options, full, covered | mask, k - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn gen(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    #[test]
    fn identity_covers_itself() {
        let k3 = gen(Family::Complete(3));
        assert_eq!(strong_hom_complexity(&k3, &k3).unwrap().value, Value::Finite(1));
    }

    #[test]
    fn edge_onto_path_needs_two() {
        let r = strong_hom_complexity(&gen(Family::Complete(2)), &gen(Family::Path(3))).unwrap();
        assert_eq!(r.value, Value::Finite(2));
        assert_eq!(r.lower.value, 1);
    }

    #[test]
    fn small_source_cannot_cover_isolated_target_vertex() {
        let h = gen(Family::Edgeless(3));
        let r = strong_hom_complexity(&gen(Family::Edgeless(1)), &h).unwrap();
        // One vertex per piece, three pieces hit all three target vertices.
        assert_eq!(r.value, Value::Finite(3));
        let r = strong_hom_complexity(&Graph::new(crate::graph::Mode::Undirected), &h).unwrap();
        assert!(r.value.is_infinite());
    }

    #[test]
    fn budget_enforced() {
        assert!(strong_hom_complexity(&gen(Family::Complete(5)), &gen(Family::Complete(5)))
            .unwrap_err()
            .is_budget());
    }
}
