//! Chromatic number, clique number, ℓ-partiteness and product colourings.

use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{generate, tuple_id, Family, Graph, Mode};
use crate::hom::{find_hom_with, VertexMap};

pub(crate) fn require_simple(g: &Graph, what: &str) -> Result<()> {
    if g.mode() != Mode::Undirected {
        return Err(Error::Hypothesis(format!("{what} needs an undirected graph")));
    }
    if g.has_loops() {
        return Err(Error::Hypothesis(format!("{what} is undefined for graphs with loops")));
    }
    Ok(())
}

fn adjacency_bits(g: &Graph) -> Vec<FixedBitSet> {
    (0..g.order())
        .map(|v| {
            let mut row = FixedBitSet::with_capacity(g.order());
            for w in g.neighbors(v) {
                row.insert(w);
            }
            row
        })
        .collect()
}

/// Every maximal clique (loops ignored), each sorted ascending, in the order
/// found by pivoting Bron–Kerbosch.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    maximal_cliques_with(g, &Budget::default())
}

pub fn maximal_cliques_with(g: &Graph, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    if g.mode() != Mode::Undirected {
        return Err(Error::Hypothesis("cliques need an undirected graph".into()));
    }
    let adj = adjacency_bits(g);
    let mut out = Vec::new();
    let mut p = FixedBitSet::with_capacity(g.order());
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(g.order());
    bron_kerbosch(&adj, &mut Vec::new(), p, x, &mut out, budget)?;
    Ok(out)
}

fn bron_kerbosch(
    adj: &[FixedBitSet],
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
    budget: &Budget,
) -> Result<()> {
    if p.is_clear() {
        if x.is_clear() {
            let mut clique = r.clone();
            clique.sort_unstable();
            out.push(clique);
        }
        return Ok(());
    }
    budget.check_deadline()?;
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| p.intersection(&adj[u]).count())
        .expect("p is nonempty");
    let mut branch = p.clone();
    branch.difference_with(&adj[pivot]);
    for v in branch.ones() {
        r.push(v);
        let mut np = p.clone();
        np.intersect_with(&adj[v]);
        let mut nx = x.clone();
        nx.intersect_with(&adj[v]);
        bron_kerbosch(adj, r, np, nx, out, budget)?;
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
    Ok(())
}

/// `ω(g)` with the lexicographically first maximum clique.
pub fn clique_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let cliques = maximal_cliques(g)?;
    let best = cliques
        .into_iter()
        .min_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)))
        .unwrap_or_default();
    Ok((best.len(), best))
}

/// Greedy DSATUR colouring; returns colour indices starting at 0.
pub fn dsatur(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut colour = vec![usize::MAX; n];
    let mut seen: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n + 1); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v] == usize::MAX)
            .max_by_key(|&v| (seen[v].count_ones(..), nbrs[v].len(), std::cmp::Reverse(v)))
            .expect("an uncoloured vertex remains");
        let c = (0..=n).find(|&c| !seen[v].contains(c)).expect("n + 1 colours suffice");
        colour[v] = c;
        for &w in &nbrs[v] {
            seen[w].insert(c);
        }
    }
    colour
}

fn complete(k: usize) -> Graph {
    if k == 0 {
        Graph::new(Mode::Undirected)
    } else {
        generate(&Family::Complete(k)).expect("k >= 1")
    }
}

/// `χ(g)` with a colouring onto `K_χ` (colours named `1..χ`).
pub fn chromatic_number(g: &Graph) -> Result<(usize, VertexMap)> {
    chromatic_number_with(g, &Budget::default())
}

pub fn chromatic_number_with(g: &Graph, budget: &Budget) -> Result<(usize, VertexMap)> {
    require_simple(g, "the chromatic number")?;
    let domain = Arc::new(g.clone());
    let greedy = dsatur(g);
    let upper = greedy.iter().map(|&c| c + 1).max().unwrap_or(0);
    let (lower, _) = clique_number(g)?;
    for k in lower.max(1)..upper {
        if let Some(f) = find_hom_with(g, &complete(k), budget)? {
            let f = VertexMap::new(domain, Arc::new(complete(k)), f.as_slice().to_vec())?;
            debug_assert!(f.flags().surjective);
            return Ok((k, f));
        }
    }
    let f = VertexMap::new(domain, Arc::new(complete(upper)), greedy)?;
    if !f.flags().hom || !f.flags().surjective {
        return Err(Error::Invalid("greedy colouring failed verification".into()));
    }
    Ok((upper, f))
}

/// The parts of `g` as an ℓ-partite graph, or `None` when `χ(g) > ℓ` or
/// `g` has fewer than ℓ vertices.
pub fn is_l_partite(g: &Graph, l: usize) -> Result<Option<Vec<Vec<usize>>>> {
    is_l_partite_with(g, l, &Budget::default())
}

pub fn is_l_partite_with(g: &Graph, l: usize, budget: &Budget) -> Result<Option<Vec<Vec<usize>>>> {
    if l < 2 {
        return Err(Error::InvalidParameter("ℓ-partiteness needs ℓ >= 2".into()));
    }
    require_simple(g, "ℓ-partiteness")?;
    if g.order() < l {
        return Ok(None);
    }
    let (chi, f) = chromatic_number_with(g, budget)?;
    if chi > l {
        return Ok(None);
    }
    let mut parts = vec![Vec::new(); chi];
    for v in 0..g.order() {
        parts[f.image(v)].push(v);
    }
    while parts.len() < l {
        let donor = parts.iter().position(|p| p.len() >= 2).expect("|V| >= ℓ leaves a donor");
        let v = parts[donor].pop().expect("donor is nonempty");
        parts.push(vec![v]);
    }
    Ok(Some(parts))
}

/// Colours `g` by tuples of colours from colourings of subgraphs whose edges
/// cover `E(g)`. A vertex outside some subgraph takes that subgraph's first
/// colour. The codomain is complete on the product of the colour sets.
pub fn product_coloring(colourings: &[VertexMap], g: &Graph) -> Result<VertexMap> {
    require_simple(g, "product colouring")?;
    if colourings.is_empty() {
        return Err(Error::InvalidParameter("no colourings given".into()));
    }
    let mut covered = vec![false; g.size()];
    let index = g.edge_index();
    let mut radix = Vec::with_capacity(colourings.len());
    for f in colourings {
        let (d, c) = (f.domain(), f.codomain());
        if !f.is_hom() || c.has_loops() || c.order() == 0 {
            return Err(Error::NotVerified(
                "each input must be a colouring into a loop-free graph".into(),
            ));
        }
        for (u, v) in d.edges() {
            let a = g.index_of(d.id(u)).ok_or_else(|| Error::UnknownVertex(d.id(u).into()))?;
            let b = g.index_of(d.id(v)).ok_or_else(|| Error::UnknownVertex(d.id(v).into()))?;
            let e = index.get(&g.canonical(a, b)).ok_or_else(|| {
                Error::Invalid(format!("{}-{} is not an edge of the graph", d.id(u), d.id(v)))
            })?;
            covered[*e] = true;
        }
        radix.push(c.order());
    }
    if let Some(e) = covered.iter().position(|&c| !c) {
        return Err(Error::Invalid(format!(
            "edge {} is not covered by the coloured subgraphs",
            g.fmt_edge(g.edge_list()[e])
        )));
    }
    let total = radix.iter().try_fold(1usize, |acc, &r| acc.checked_mul(r));
    let total = total.filter(|&t| t <= Budget::default().orpower_vertices).ok_or_else(|| {
        Error::ResourceLimit("product colouring has too many colours".into())
    })?;

    let mut target = Graph::new(Mode::Undirected);
    for mut x in 0..total {
        let mut parts = vec![""; radix.len()];
        for (j, &r) in radix.iter().enumerate().rev() {
            parts[j] = colourings[j].codomain().id(x % r);
            x /= r;
        }
        target.add_vertex(tuple_id(&parts))?;
    }
    for a in 0..total {
        for b in a + 1..total {
            target.add_edge(a, b)?;
        }
    }
    let map = (0..g.order())
        .map(|v| {
            colourings.iter().zip(&radix).fold(0, |acc, (f, &r)| {
                let c = f.domain().index_of(g.id(v)).map_or(0, |i| f.image(i));
                acc * r + c
            })
        })
        .collect();
    let f = VertexMap::new(Arc::new(g.clone()), Arc::new(target), map)?;
    if !f.is_hom() {
        return Err(Error::Invalid("product colouring failed verification".into()));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, parse_hgf, SubgraphRef};
    use crate::hom::find_hom;

    fn gen(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&gen(Family::Cycle(7))).unwrap().0, 3);
        assert_eq!(chromatic_number(&gen(Family::Edgeless(5))).unwrap().0, 1);
        assert_eq!(chromatic_number(&Graph::new(Mode::Undirected)).unwrap().0, 0);
        let (chi, f) = chromatic_number(&gen(Family::Grotzsch)).unwrap();
        assert_eq!(chi, 4);
        assert!(f.flags().hom && f.flags().surjective);
        assert!(chromatic_number(&gen(Family::LoopVertex)).is_err());
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&gen(Family::Grotzsch)).unwrap().0, 2);
        let g = gen(Family::CompleteMultipartite(vec![2, 3, 1]));
        assert_eq!(clique_number(&g).unwrap().0, 3);
        let (w, c) = clique_number(&gen(Family::Complete(5))).unwrap();
        assert_eq!((w, c), (5, vec![0, 1, 2, 3, 4]));
        // Of the two triangles, the lexicographically first is chosen.
        let g = parse_hgf(b"hgf 1 undirected\nv 1\nv 2\nv 3\nv 4\ne 1 2\ne 2 3\ne 1 3\ne 2 4\ne 3 4\n")
            .unwrap();
        assert_eq!(clique_number(&g).unwrap().1, vec![0, 1, 2]);
    }

    #[test]
    fn l_partite_examples() {
        assert!(is_l_partite(&gen(Family::Complete(2)), 3).unwrap().is_none());
        let parts = is_l_partite(&gen(Family::Cycle(6)), 2).unwrap().unwrap();
        assert_eq!(parts, vec![vec![0, 2, 4], vec![1, 3, 5]]);
        let k3 = gen(Family::Complete(3));
        let two = disjoint_union(&k3, &k3).unwrap();
        let parts = is_l_partite(&two, 3).unwrap().unwrap();
        assert_eq!(parts.len(), 3);
        // Splitting a colour class keeps parts independent.
        let parts = is_l_partite(&gen(Family::Edgeless(4)), 3).unwrap().unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| !p.is_empty()));
    }

    #[test]
    fn product_of_single_colouring_is_itself() {
        let c6 = gen(Family::Cycle(6));
        let (_, f) = chromatic_number(&c6).unwrap();
        let p = product_coloring(std::slice::from_ref(&f), &c6).unwrap();
        assert_eq!(p.as_slice(), f.as_slice());
        assert_eq!(p.codomain().order(), 2);
    }

    #[test]
    fn product_of_cycle_pieces() {
        let c5 = Arc::new(gen(Family::Cycle(5)));
        let path = SubgraphRef::from_edges(c5.clone(), c5.edge_list()[..4].to_vec()).unwrap();
        let last = SubgraphRef::from_edges(c5.clone(), c5.edge_list()[4..].to_vec()).unwrap();
        let k2 = gen(Family::Complete(2));
        let fs: Vec<VertexMap> = [path, last]
            .iter()
            .map(|p| find_hom(&p.to_graph(), &k2).unwrap().unwrap())
            .collect();
        let f = product_coloring(&fs, &c5).unwrap();
        assert!(f.is_hom());
        assert_eq!(f.codomain().order(), 4);
        assert!(product_coloring(&fs[..1], &c5).is_err());
    }
}
