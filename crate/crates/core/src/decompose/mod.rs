//! Constructive quasi-homomorphisms: the recursive ℓ-partite decomposition of
//! complete graphs, its pullback along a colouring, and post-composition with
//! a maximum clique of the target.

mod verify;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::complexity::{ceil_log, Kind, Piece, QuasiHom};
use crate::error::{Error, Result};
use crate::graph::{generate, inverse_image, Family, Graph, Mode, SubgraphRef};
use crate::hom::VertexMap;
use crate::invariants::{chromatic_number_with, clique_number};

pub use verify::{
    induced_map, verify_optimality, verify_quasi_hom, InducedMap, VerifyFailure, VerifyReport,
};

/// One block split in the recursion: the block `offset..offset + size` of
/// colours (0-based) is cut into ℓ sub-blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub offset: usize,
    pub size: usize,
    /// Pieces this block contributes to.
    pub levels: usize,
    /// `⌈size/ℓ⌉`.
    pub m: usize,
    /// Number of sub-blocks of size `m`; the rest have size `m - 1`.
    pub r: usize,
    pub block_sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DesignPlan {
    pub quasi: QuasiHom,
    /// The colouring `G → K_j` the plan was pulled back along.
    pub colouring: VertexMap,
    pub trace: Vec<TraceStep>,
    /// Clique used as `K_ℓ ↪ H`: entry `i` is the target vertex for class `i`.
    pub embedding: Option<Vec<usize>>,
    pub optimal: bool,
}

/// A piece of the decomposition of `K_j`: the class (0-based, `< ℓ`) of each
/// vertex and the piece's edges.
#[derive(Clone, Debug)]
struct RawPiece {
    class: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

struct Decomposer {
    l: usize,
    trace: Vec<TraceStep>,
}

impl Decomposer {
    /// Exactly `levels` pieces covering `K_size` on local vertices `0..size`.
    fn block(&mut self, offset: usize, size: usize, levels: usize) -> Vec<RawPiece> {
        let needed = ceil_log(self.l, size).max(1);
        debug_assert!(levels >= needed);
        let mut pieces = if size <= self.l {
            let edges = (0..size).flat_map(|a| (a + 1..size).map(move |b| (a, b))).collect();
            vec![RawPiece { class: (0..size).collect(), edges }]
        } else {
            self.split(offset, size, needed)
        };
        while pieces.len() < levels {
            let last = pieces.last().expect("at least one piece").clone();
            pieces.push(last);
        }
        pieces
    }

    fn split(&mut self, offset: usize, size: usize, levels: usize) -> Vec<RawPiece> {
        let l = self.l;
        let m = size.div_ceil(l);
        let r = size - (m - 1) * l;
        let block_sizes: Vec<usize> = (0..l).map(|b| if b < r { m } else { m - 1 }).collect();
        self.trace.push(TraceStep { offset, size, levels, m, r, block_sizes: block_sizes.clone() });

        let mut block_of = Vec::with_capacity(size);
        let mut starts = Vec::with_capacity(l);
        for (b, &s) in block_sizes.iter().enumerate() {
            starts.push(block_of.len());
            block_of.extend(std::iter::repeat_n(b, s));
        }

        let mut lower: Vec<RawPiece> =
            (0..levels - 1).map(|_| RawPiece { class: vec![0; size], edges: Vec::new() }).collect();
        for (b, (&start, &s)) in starts.iter().zip(&block_sizes).enumerate() {
            let sub = self.block(offset + start, s, levels - 1);
            for (piece, part) in lower.iter_mut().zip(sub) {
                for (i, c) in part.class.into_iter().enumerate() {
                    piece.class[start + i] = (c + b) % l;
                }
                piece.edges.extend(part.edges.into_iter().map(|(x, y)| (start + x, start + y)));
            }
        }
        let top_edges = (0..size)
            .flat_map(|a| (a + 1..size).map(move |b| (a, b)))
            .filter(|&(a, b)| block_of[a] != block_of[b])
            .collect();
        lower.push(RawPiece { class: block_of, edges: top_edges });
        lower
    }
}

fn complete(k: usize) -> Graph {
    if k == 0 {
        Graph::new(Mode::Undirected)
    } else {
        generate(&Family::Complete(k)).expect("k >= 1")
    }
}

/// Covers `K_j` by `max(1, ⌈log_ℓ j⌉)` pieces, each with a map into `K_ℓ`.
pub fn decompose_complete(j: usize, l: usize) -> Result<DesignPlan> {
    if l < 2 {
        return Err(Error::InvalidParameter("ℓ must be at least 2".into()));
    }
    let source = Arc::new(complete(j));
    let target = Arc::new(complete(l));
    let mut d = Decomposer { l, trace: Vec::new() };
    let levels = ceil_log(l, j).max(1);
    let raw = d.block(0, j, levels);
    let pieces = raw
        .into_iter()
        .map(|p| {
            let edges: Vec<(usize, usize)> =
                p.edges.into_iter().map(|(a, b)| source.canonical(a, b)).collect();
            let sub = SubgraphRef::spanning(source.clone(), edges)?;
            let map = VertexMap::new(Arc::new(sub.to_graph()), target.clone(), p.class)?;
            Ok(Piece { sub, map })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DesignPlan {
        quasi: QuasiHom { source: source.clone(), target, pieces, kind: Kind::Plain },
        colouring: VertexMap::identity(source),
        trace: d.trace,
        embedding: None,
        optimal: true,
    })
}

/// Covers `g` by `C(g;K_ℓ)` pieces, pulling the decomposition of `K_χ` back
/// along an optimal colouring.
pub fn design_quasi_hom(g: &Graph, l: usize) -> Result<DesignPlan> {
    design_quasi_hom_with(g, l, &Budget::default())
}

pub fn design_quasi_hom_with(g: &Graph, l: usize, budget: &Budget) -> Result<DesignPlan> {
    let (_, colouring) = chromatic_number_with(g, budget)?;
    design_quasi_hom_from(g, l, &colouring, budget)
}

/// Same as [`design_quasi_hom`] but along a given colouring `g → K_j`.
pub fn design_quasi_hom_from(
    g: &Graph,
    l: usize,
    colouring: &VertexMap,
    budget: &Budget,
) -> Result<DesignPlan> {
    if !g.is_simple() {
        return Err(Error::Hypothesis("design needs a simple graph".into()));
    }
    if **colouring.domain() != *g {
        return Err(Error::Invalid("colouring is not defined on the graph".into()));
    }
    let j = colouring.codomain().order();
    if !colouring.is_hom() || complete(j) != **colouring.codomain() {
        return Err(Error::NotVerified("expected a colouring into K_j".into()));
    }
    let complete_plan = decompose_complete(j.max(1), l)?;
    let source = Arc::new(g.clone());
    let target = complete_plan.quasi.target.clone();
    // Work against the plan's own copy of K_j.
    let f = colouring.with_codomain(complete_plan.quasi.source.clone())?;
    let f = VertexMap::new(source.clone(), f.codomain().clone(), f.as_slice().to_vec())?;
    let mut pieces = Vec::with_capacity(complete_plan.quasi.len());
    for piece in &complete_plan.quasi.pieces {
        let sub = inverse_image(&f, &piece.sub)?;
        let map = sub.vertices().iter().map(|&v| piece.map.image(f.image(v))).collect();
        let map = VertexMap::new(Arc::new(sub.to_graph()), target.clone(), map)?;
        pieces.push(Piece { sub, map });
    }
    let chi = chromatic_number_with(g, budget)?.0;
    let optimal = pieces.len() == ceil_log(l, chi).max(1);
    Ok(DesignPlan {
        quasi: QuasiHom { source, target, pieces, kind: Kind::Plain },
        colouring: f,
        trace: complete_plan.trace,
        embedding: None,
        optimal,
    })
}

/// Covers `g` by `min{n : χ(g) ≤ ω(h)^n}` pieces mapped into `h` through its
/// first maximum clique. Optimal when `ω(h) = χ(h)`.
pub fn design_into_target(g: &Graph, h: &Graph) -> Result<DesignPlan> {
    design_into_target_with(g, h, &Budget::default())
}

pub fn design_into_target_with(g: &Graph, h: &Graph, budget: &Budget) -> Result<DesignPlan> {
    let (_, colouring) = chromatic_number_with(g, budget)?;
    design_into_target_from(g, h, &colouring, budget)
}

/// Same as [`design_into_target`] but along a given colouring `g → K_j`.
pub fn design_into_target_from(
    g: &Graph,
    h: &Graph,
    colouring: &VertexMap,
    budget: &Budget,
) -> Result<DesignPlan> {
    if !h.is_simple() {
        return Err(Error::Hypothesis("target must be a simple graph".into()));
    }
    let (omega, clique) = clique_number(h)?;
    if omega < 2 {
        return Err(Error::Hypothesis("target needs ω(H) ≥ 2".into()));
    }
    let plan = design_quasi_hom_from(g, omega, colouring, budget)?;
    let target = Arc::new(h.clone());
    let pieces = plan
        .quasi
        .pieces
        .into_iter()
        .map(|p| {
            let map = p.map.as_slice().iter().map(|&c| clique[c]).collect();
            let map = VertexMap::new(p.map.domain().clone(), target.clone(), map)?;
            Ok(Piece { sub: p.sub, map })
        })
        .collect::<Result<Vec<_>>>()?;
    let chi_h = chromatic_number_with(h, budget)?.0;
    let optimal = pieces.len() == 1 || (plan.optimal && chi_h == omega);
    Ok(DesignPlan {
        quasi: QuasiHom { source: plan.quasi.source, target, pieces, kind: Kind::Plain },
        colouring: plan.colouring,
        trace: plan.trace,
        embedding: Some(clique),
        optimal,
    })
}
