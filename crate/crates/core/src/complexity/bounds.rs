use super::{Bound, BoundTag, InfiniteReason};
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;
use crate::invariants::{chromatic_number_with, clique_number};

/// Least `n ≥ 0` with `base^n ≥ x`.
pub fn ceil_log(base: usize, x: usize) -> usize {
    assert!(base >= 2, "logarithm base must be at least 2");
    let (mut n, mut p) = (0, 1usize);
    while p < x {
        p = p.saturating_mul(base);
        n += 1;
    }
    n
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Finiteness {
    /// Finite, with a constructive upper bound.
    Finite(Bound),
    Infinite(InfiniteReason),
}

/// Decides whether `C(g;h)` (or `IC(g;h)`) is finite.
pub fn finiteness(g: &Graph, h: &Graph, injective: bool) -> Result<Finiteness> {
    g.check_same_mode(h)?;
    if g.order() == 0 {
        return Ok(Finiteness::Finite(Bound { value: 1, tag: BoundTag::Trivial }));
    }
    if h.order() == 0 {
        return Ok(Finiteness::Infinite(InfiniteReason::EmptyCodomain));
    }
    if g.has_loops() && !h.has_loops() {
        return Ok(Finiteness::Infinite(InfiniteReason::LoopMismatch));
    }
    let g_plain_edges = g.size() - g.loop_count();
    let h_plain_edges = h.size() - h.loop_count();
    let usable = if injective { h_plain_edges > 0 } else { h.size() > 0 };
    if g_plain_edges > 0 && !usable {
        return Ok(Finiteness::Infinite(InfiniteReason::NoEdges));
    }
    let bound = if !injective {
        if h.has_loops() {
            Bound { value: 1, tag: BoundTag::TargetLoop }
        } else if g.size() == 0 {
            Bound { value: 1, tag: BoundTag::Trivial }
        } else {
            Bound { value: g.size(), tag: BoundTag::SingleEdgePieces }
        }
    } else {
        let isolated = g.isolated_vertices().len();
        let extra = isolated.div_ceil(h.order());
        Bound { value: (g.size() + extra).max(1), tag: BoundTag::SingleEdgePieces }
    };
    Ok(Finiteness::Finite(bound))
}

/// Colouring bounds on `C(g;h)` for simple graphs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub chi_g: Option<usize>,
    pub chi_h: Option<usize>,
    pub omega_h: Option<usize>,
    /// `⌈log_{χ(h)} χ(g)⌉`, when `χ(h) ≥ 2`.
    pub lower: Option<Bound>,
    /// The largest `m` with `χ(h)^(m-1) + 1 ≤ χ(g)`, when `χ(h), χ(g) ≥ 2`.
    pub strict_lower: Option<Bound>,
    /// `min{n : χ(g) ≤ ω(h)^n}`, when `χ(g) ≥ 2` and `ω(h) ≥ 2`.
    pub upper: Option<Bound>,
    pub trail: Vec<Bound>,
}

pub fn complexity_bounds(g: &Graph, h: &Graph) -> Result<Bounds> {
    complexity_bounds_with(g, h, &Budget::default())
}

pub(crate) fn complexity_bounds_with(g: &Graph, h: &Graph, budget: &Budget) -> Result<Bounds> {
    let mut b = Bounds::default();
    if !g.is_simple() || !h.is_simple() {
        return Ok(b);
    }
    let chi_g = chromatic_number_with(g, budget)?.0;
    let chi_h = chromatic_number_with(h, budget)?.0;
    let omega_h = clique_number(h)?.0;
    b.chi_g = Some(chi_g);
    b.chi_h = Some(chi_h);
    b.omega_h = Some(omega_h);
    if chi_h >= 2 {
        let bound = Bound { value: ceil_log(chi_h, chi_g), tag: BoundTag::ChromaticPower };
        b.lower = Some(bound);
        b.trail.push(bound);
        if chi_g >= 2 {
            let mut m = 1;
            while chi_h.saturating_pow(m as u32) < chi_g {
                m += 1;
            }
            let bound = Bound { value: m, tag: BoundTag::ChromaticPowerStrict };
            b.strict_lower = Some(bound);
            b.trail.push(bound);
        }
    }
    if chi_g >= 2 && omega_h >= 2 {
        let bound = Bound { value: ceil_log(omega_h, chi_g).max(1), tag: BoundTag::CliquePower };
        b.upper = Some(bound);
        b.trail.push(bound);
    }
    Ok(b)
}
