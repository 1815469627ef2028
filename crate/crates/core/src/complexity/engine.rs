use std::sync::Arc;

use super::bounds::{complexity_bounds_with, finiteness, Finiteness};
use super::partition::PartitionSearch;
use super::{
    Bound, BoundTag, ComplexityResult, InfiniteReason, Kind, Method, MethodChoice, Piece,
    QuasiHom, Value,
};
use crate::budget::Budget;
use crate::decompose::{design_into_target_with, verify_quasi_hom};
use crate::error::{Error, Result};
use crate::graph::{Graph, SubgraphRef};
use crate::hom::{
    find_hom_with, find_injective_hom_with, solve, OrPowerTarget, SearchOptions, VertexMap,
};

const TRIVIAL: Bound = Bound { value: 1, tag: BoundTag::Trivial };

fn infinite(reason: InfiniteReason, kind: Kind, trail: Vec<Bound>) -> ComplexityResult {
    ComplexityResult {
        value: Value::Infinite(reason),
        kind,
        lower: TRIVIAL,
        upper: None,
        trail,
        method: Method::Finiteness,
        certificate: None,
    }
}

fn best_lower(bounds: &[Bound]) -> Bound {
    bounds.iter().copied().fold(TRIVIAL, |a, b| if b.value > a.value { b } else { a })
}

fn best_upper(bounds: &[Bound]) -> Bound {
    bounds.iter().copied().reduce(|a, b| if b.value < a.value { b } else { a }).expect("nonempty")
}

/// Exact `C(g;h)`.
pub fn hom_complexity(g: &Graph, h: &Graph, method: MethodChoice) -> Result<ComplexityResult> {
    hom_complexity_with(g, h, method, &Budget::default())
}

pub fn hom_complexity_with(
    g: &Graph,
    h: &Graph,
    method: MethodChoice,
    budget: &Budget,
) -> Result<ComplexityResult> {
    g.check_same_mode(h)?;
    if method == MethodChoice::ClosedForm {
        return Err(Error::InvalidParameter(
            "closed forms exist only for injective complexity".into(),
        ));
    }
    let mut trail = vec![TRIVIAL];
    let fin_upper = match finiteness(g, h, false)? {
        Finiteness::Infinite(reason) => return Ok(infinite(reason, Kind::Plain, trail)),
        Finiteness::Finite(b) => b,
    };
    trail.push(fin_upper);
    let bounds = complexity_bounds_with(g, h, budget)?;
    trail.extend(bounds.trail.iter().copied());
    let lowers: Vec<Bound> = bounds.lower.into_iter().chain([TRIVIAL]).collect();
    let lower = best_lower(&lowers);
    let upper = best_upper(&[Some(fin_upper), bounds.upper].into_iter().flatten().collect::<Vec<_>>());
    let formula_ok = matches!(
        (bounds.chi_g, bounds.chi_h, bounds.omega_h),
        (Some(cg), Some(ch), Some(wh)) if cg >= 2 && ch >= 2 && wh == ch
    );

    let source = Arc::new(g.clone());
    let target = Arc::new(h.clone());
    let (method, certificate) = match method {
        MethodChoice::Formula if !formula_ok => {
            return Err(Error::Hypothesis(
                "the formula needs simple graphs with χ(G) ≥ 2 and ω(H) = χ(H) ≥ 2".into(),
            ));
        }
        MethodChoice::Auto if formula_ok => (Method::Formula, formula_certificate(g, h, budget)?),
        MethodChoice::Formula => (Method::Formula, formula_certificate(g, h, budget)?),
        MethodChoice::Orpower => {
            let cert = orpower_search(g, h, &source, &target, lower.value, upper.value, budget)?;
            (Method::Orpower, cert.map_err(|k| orpower_limit(h, k, budget))?)
        }
        MethodChoice::Partition => (
            Method::Partition,
            partition_search(g, h, &source, &target, lower.value, upper.value, false, budget)?,
        ),
        MethodChoice::Auto => {
            match orpower_search(g, h, &source, &target, lower.value, upper.value, budget)? {
                Ok(cert) => (Method::Orpower, cert),
                Err(from) => match partition_search(
                    g, h, &source, &target, from, upper.value, false, budget,
                ) {
                    Ok(cert) => (Method::Partition, cert),
                    Err(Error::ResourceLimit(msg)) => {
                        return Err(Error::ResourceLimit(format!(
                            "{}; {msg}",
                            orpower_limit(h, from, budget)
                        )))
                    }
                    Err(e) => return Err(e),
                },
            }
        }
        MethodChoice::ClosedForm => unreachable!("rejected above"),
    };
    let report = verify_quasi_hom(&certificate, g, h, false);
    if !report.ok() {
        return Err(Error::Invalid(format!("certificate failed verification: {report}")));
    }
    let value = certificate.len();
    if value < lower.value || value > upper.value {
        return Err(Error::Invalid(format!(
            "value {value} outside bounds [{}, {}]",
            lower.value, upper.value
        )));
    }
    Ok(ComplexityResult {
        value: Value::Finite(value),
        kind: Kind::Plain,
        lower,
        upper: Some(upper),
        trail,
        method,
        certificate: Some(certificate),
    })
}

fn orpower_limit(h: &Graph, k: usize, budget: &Budget) -> Error {
    Error::ResourceLimit(format!(
        "OR-power {}^{k} exceeds {} vertices",
        h.order(),
        budget.orpower_vertices
    ))
}

fn formula_certificate(g: &Graph, h: &Graph, budget: &Budget) -> Result<QuasiHom> {
    Ok(design_into_target_with(g, h, budget)?.quasi)
}

/// Least `k` in `from..=to` with `g → h^(k)`. The inner `Err(k)` reports the
/// first `k` whose power is over budget.
fn orpower_search(
    g: &Graph,
    h: &Graph,
    source: &Arc<Graph>,
    target: &Arc<Graph>,
    from: usize,
    to: usize,
    budget: &Budget,
) -> Result<std::result::Result<QuasiHom, usize>> {
    for k in from..=to {
        let fits = u32::try_from(k)
            .ok()
            .and_then(|e| h.order().checked_pow(e))
            .is_some_and(|n| n <= budget.orpower_vertices);
        if !fits {
            return Ok(Err(k));
        }
        let power = OrPowerTarget::new(h, k);
        let mut found = None;
        solve(g, &power, &SearchOptions::default(), budget, &mut |m| {
            found = Some(m.to_vec());
            false
        })?;
        if let Some(f) = found {
            return Ok(Ok(split_orpower_map(g, source, target, &power, k, &f)?));
        }
    }
    Err(Error::Invalid(format!("no OR-power up to {to} admits a homomorphism")))
}

/// Piece `i` holds the edges first preserved by coordinate `i`, mapped by
/// that coordinate.
fn split_orpower_map(
    g: &Graph,
    source: &Arc<Graph>,
    target: &Arc<Graph>,
    power: &OrPowerTarget,
    k: usize,
    f: &[usize],
) -> Result<QuasiHom> {
    let mut edges = vec![Vec::new(); k];
    for (u, v) in g.edges() {
        let i = (0..k)
            .find(|&i| target.has_edge(power.coordinate(f[u], i), power.coordinate(f[v], i)))
            .ok_or_else(|| Error::Invalid("OR-power map drops an edge".into()))?;
        edges[i].push((u, v));
    }
    let pieces = edges
        .into_iter()
        .enumerate()
        .map(|(i, es)| {
            let sub = SubgraphRef::spanning(source.clone(), es)?;
            let map = (0..g.order()).map(|v| power.coordinate(f[v], i)).collect();
            let map = VertexMap::new(Arc::new(sub.to_graph()), target.clone(), map)?;
            Ok(Piece { sub, map })
        })
        .collect::<Result<_>>()?;
    Ok(QuasiHom { source: source.clone(), target: target.clone(), pieces, kind: Kind::Plain })
}

#[allow(clippy::too_many_arguments)]
fn partition_search(
    g: &Graph,
    h: &Graph,
    source: &Arc<Graph>,
    target: &Arc<Graph>,
    from: usize,
    to: usize,
    injective: bool,
    budget: &Budget,
) -> Result<QuasiHom> {
    let mut search = PartitionSearch::new(g, h, injective, budget)?;
    for k in from..=to {
        if let Some(pieces) = search.try_k(k)? {
            return assemble(g, h, source, target, pieces, k, injective, budget);
        }
    }
    Err(Error::Invalid(format!("no edge partition into at most {to} pieces")))
}

/// Turns edge sets into pieces, placing isolated vertices, and finds maps.
#[allow(clippy::too_many_arguments)]
fn assemble(
    g: &Graph,
    h: &Graph,
    source: &Arc<Graph>,
    target: &Arc<Graph>,
    edge_sets: Vec<Vec<(usize, usize)>>,
    k: usize,
    injective: bool,
    budget: &Budget,
) -> Result<QuasiHom> {
    let mut vertex_sets: Vec<Vec<usize>> = edge_sets
        .iter()
        .map(|es| {
            let mut vs: Vec<usize> = es.iter().flat_map(|&(u, v)| [u, v]).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    let mut edge_sets = edge_sets;
    let isolated = g.isolated_vertices();
    if injective {
        let mut rest = isolated.into_iter().peekable();
        for vs in vertex_sets.iter_mut() {
            while vs.len() < h.order() && rest.peek().is_some() {
                vs.push(rest.next().expect("peeked"));
            }
        }
        while rest.peek().is_some() {
            vertex_sets.push(rest.by_ref().take(h.order()).collect());
            edge_sets.push(Vec::new());
        }
    } else if vertex_sets.is_empty() {
        vertex_sets.push(isolated);
        edge_sets.push(Vec::new());
    } else {
        vertex_sets[0].extend(isolated);
    }
    if vertex_sets.is_empty() {
        vertex_sets.push(Vec::new());
        edge_sets.push(Vec::new());
    }
    let mut pieces = Vec::with_capacity(vertex_sets.len());
    for (vs, es) in vertex_sets.into_iter().zip(edge_sets) {
        let sub = SubgraphRef::new(source.clone(), vs, es)?;
        let piece = sub.to_graph();
        let found = if injective {
            find_injective_hom_with(&piece, h, budget)?
        } else {
            find_hom_with(&piece, h, budget)?
        };
        let map = found.ok_or_else(|| Error::Invalid("feasible piece lost its map".into()))?;
        let map = VertexMap::new(Arc::new(piece), target.clone(), map.as_slice().to_vec())?;
        pieces.push(Piece { sub, map });
    }
    if pieces.len() != k {
        return Err(Error::Invalid(format!(
            "partition search at {k} produced {} pieces",
            pieces.len()
        )));
    }
    let kind = if injective { Kind::Injective } else { Kind::Plain };
    Ok(QuasiHom { source: source.clone(), target: target.clone(), pieces, kind })
}

fn is_k2(h: &Graph) -> bool {
    h.is_simple() && h.order() == 2 && h.size() == 1
}

/// Exact `IC(g;h)`. Isolated vertices of `g` count.
pub fn injective_hom_complexity(
    g: &Graph,
    h: &Graph,
    method: MethodChoice,
) -> Result<ComplexityResult> {
    injective_hom_complexity_with(g, h, method, &Budget::default())
}

pub fn injective_hom_complexity_with(
    g: &Graph,
    h: &Graph,
    method: MethodChoice,
    budget: &Budget,
) -> Result<ComplexityResult> {
    g.check_same_mode(h)?;
    if matches!(method, MethodChoice::Formula | MethodChoice::Orpower) {
        return Err(Error::InvalidParameter(format!(
            "method {method:?} does not apply to injective complexity"
        )));
    }
    let mut trail = vec![TRIVIAL];
    let fin_upper = match finiteness(g, h, true)? {
        Finiteness::Infinite(reason) => return Ok(infinite(reason, Kind::Injective, trail)),
        Finiteness::Finite(b) => b,
    };
    trail.push(fin_upper);
    let bounds = complexity_bounds_with(g, h, budget)?;
    let mut lowers: Vec<Bound> = bounds.lower.into_iter().collect();
    trail.extend(bounds.trail.iter().copied());
    if g.size() > 0 {
        let b = Bound { value: g.size().div_ceil(h.size()), tag: BoundTag::EdgeCount };
        lowers.push(b);
        trail.push(b);
    }
    let b = Bound { value: g.order().div_ceil(h.order()), tag: BoundTag::VertexCount };
    lowers.push(b);
    trail.push(b);
    let lower = best_lower(&lowers);
    let upper = fin_upper;

    let source = Arc::new(g.clone());
    let target = Arc::new(h.clone());
    let closed_form_applies = is_k2(h)
        && g.mode() == h.mode()
        && !g.has_loops()
        && g.order() > 0
        && (g.size() == 0 || !g.has_isolated_vertices());
    let (method, certificate) = match method {
        MethodChoice::ClosedForm if !closed_form_applies => {
            return Err(Error::Hypothesis(
                "closed forms need H = K2 and a loop-free G that is edgeless or has no isolated vertices"
                    .into(),
            ));
        }
        MethodChoice::ClosedForm | MethodChoice::Auto if closed_form_applies => {
            (Method::ClosedFormIc, closed_form_certificate(g, &source, &target)?)
        }
        _ => (
            Method::Partition,
            partition_search(g, h, &source, &target, lower.value, upper.value, true, budget)?,
        ),
    };
    let report = verify_quasi_hom(&certificate, g, h, true);
    if !report.ok() {
        return Err(Error::Invalid(format!("certificate failed verification: {report}")));
    }
    Ok(ComplexityResult {
        value: Value::Finite(certificate.len()),
        kind: Kind::Injective,
        lower,
        upper: Some(upper),
        trail,
        method,
        certificate: Some(certificate),
    })
}

/// One piece per edge, or pairs of vertices when there are no edges.
fn closed_form_certificate(
    g: &Graph,
    source: &Arc<Graph>,
    target: &Arc<Graph>,
) -> Result<QuasiHom> {
    let mut pieces = Vec::new();
    if g.size() > 0 {
        for e in g.edges() {
            let sub = SubgraphRef::from_edges(source.clone(), [e])?;
            let map = VertexMap::new(Arc::new(sub.to_graph()), target.clone(), vec![0, 1])?;
            pieces.push(Piece { sub, map });
        }
    } else {
        let vs: Vec<usize> = (0..g.order()).collect();
        for pair in vs.chunks(2) {
            let sub = SubgraphRef::new(source.clone(), pair.iter().copied(), [])?;
            let map = (0..pair.len()).collect();
            let map = VertexMap::new(Arc::new(sub.to_graph()), target.clone(), map)?;
            pieces.push(Piece { sub, map });
        }
    }
    Ok(QuasiHom { source: source.clone(), target: target.clone(), pieces, kind: Kind::Injective })
}
