//! Retractions and cores.

use std::sync::Arc;

use super::search::{solve, GraphTarget, Order, SearchOptions};
use super::VertexMap;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, SubgraphRef};

/// A homomorphism `g → sub` fixing every vertex of `sub`, if one exists. The
/// returned map has the materialised subgraph as its codomain.
pub fn find_retraction(g: &Graph, sub: &SubgraphRef) -> Result<Option<VertexMap>> {
    find_retraction_with(g, sub, &Budget::default())
}

fn find_retraction_with(g: &Graph, sub: &SubgraphRef, budget: &Budget) -> Result<Option<VertexMap>> {
    if **sub.parent() != *g {
        return Err(Error::Invalid("retraction target is not a subgraph of the graph".into()));
    }
    let h = sub.to_graph();
    let mut fixed = vec![None; g.order()];
    for (local, &v) in sub.vertices().iter().enumerate() {
        fixed[v] = Some(local);
    }
    let opts = SearchOptions { fixed, order: Order::Degree, ..SearchOptions::default() };
    let mut found = None;
    solve(g, &GraphTarget::new(&h), &opts, budget, &mut |m| {
        found = Some(m.to_vec());
        false
    })?;
    found
        .map(|m| VertexMap::new(Arc::new(g.clone()), Arc::new(h), m))
        .transpose()
}

/// The core of `g` with a retraction onto it.
///
/// Subsets are tried by increasing size and, within a size, in lexicographic
/// order of vertex indices; the first induced subgraph that `g` retracts onto
/// is returned.
pub fn core(g: &Graph) -> Result<(SubgraphRef, VertexMap)> {
    core_with_budget(g, &Budget::default())
}

pub fn core_with_budget(g: &Graph, budget: &Budget) -> Result<(SubgraphRef, VertexMap)> {
    let n = g.order();
    if n > budget.core_vertices {
        return Err(Error::ResourceLimit(format!(
            "core search is limited to {} vertices, graph has {n}",
            budget.core_vertices
        )));
    }
    let parent = Arc::new(g.clone());
    for size in 0..=n {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            budget.check_deadline()?;
            let edges: Vec<(usize, usize)> = g
                .edges()
                .filter(|&(u, v)| subset.binary_search(&u).is_ok() && subset.binary_search(&v).is_ok())
                .collect();
            let sub = SubgraphRef::new(parent.clone(), subset.iter().copied(), edges)?;
            if let Some(r) = find_retraction_with(g, &sub, budget)? {
                return Ok((sub, r));
            }
            if !next_subset(&mut subset, n) {
                break;
            }
        }
    }
    unreachable!("every graph retracts onto itself")
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    let Some(i) = (0..k).rev().find(|&i| s[i] < n - (k - i)) else {
        return false;
    };
    s[i] += 1;
    for j in i + 1..k {
        s[j] = s[j - 1] + 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn gen(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    #[test]
    fn biclique_retracts_to_an_edge() {
        let g = Arc::new(gen(Family::CompleteMultipartite(vec![2, 2])));
        let edge = SubgraphRef::from_edges(g.clone(), [g.edge_list()[0]]).unwrap();
        let r = find_retraction(&g, &edge).unwrap().unwrap();
        assert!(r.is_hom());
        for (local, &v) in edge.vertices().iter().enumerate() {
            assert_eq!(r.image(v), local);
        }
    }

    #[test]
    fn triangle_does_not_retract_to_an_edge() {
        let g = Arc::new(gen(Family::Complete(3)));
        let edge = SubgraphRef::from_edges(g.clone(), [(0, 1)]).unwrap();
        assert!(find_retraction(&g, &edge).unwrap().is_none());
        let whole = SubgraphRef::whole(g.clone());
        let id = find_retraction(&g, &whole).unwrap().unwrap();
        assert_eq!(id.as_slice(), &[0, 1, 2]);
    }

    #[test]
    fn cores_of_standard_graphs() {
        let (c, r) = core(&gen(Family::CompleteMultipartite(vec![3, 4]))).unwrap();
        assert_eq!(c.vertices().len(), 2);
        assert_eq!(c.edges().len(), 1);
        assert!(r.is_hom());
        let (c, _) = core(&gen(Family::CompleteMultipartite(vec![2, 1, 1]))).unwrap();
        assert_eq!((c.vertices().len(), c.edges().len()), (3, 3));
        let k5 = gen(Family::Complete(5));
        let (c, _) = core(&k5).unwrap();
        assert_eq!(c.to_graph(), k5);
        let (c, _) = core(&gen(Family::Edgeless(4))).unwrap();
        assert_eq!(c.vertices(), &[0]);
        let (c, _) = core(&Graph::new(crate::graph::Mode::Undirected)).unwrap();
        assert!(c.vertices().is_empty());
    }

    #[test]
    fn core_budget() {
        assert!(core(&gen(Family::Complete(11))).unwrap_err().is_budget());
    }
}
