//! Hom-complexity `C(G;H)`, injective hom-complexity `IC(G;H)` and strong
//! hom-complexity, with bounds and verified certificates.

mod bounds;
mod engine;
pub(crate) mod partition;
mod strong;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, SubgraphRef};
use crate::hom::VertexMap;

pub use bounds::{ceil_log, complexity_bounds, finiteness, Bounds, Finiteness};
pub use engine::{hom_complexity, hom_complexity_with, injective_hom_complexity, injective_hom_complexity_with};
pub use strong::{strong_hom_complexity, strong_hom_complexity_with};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Plain,
    Injective,
}

/// One piece `f_i: G_i → H` of a quasi-homomorphism. The map's domain is the
/// materialised subgraph, with vertices in the parent's order.
#[derive(Clone, Debug, PartialEq)]
pub struct Piece {
    pub sub: SubgraphRef,
    pub map: VertexMap,
}

/// A family of subgraphs covering the source, each with a homomorphism into
/// the target.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiHom {
    pub source: Arc<Graph>,
    pub target: Arc<Graph>,
    pub pieces: Vec<Piece>,
    pub kind: Kind,
}

impl QuasiHom {
    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }
}

/// Why a complexity is infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InfiniteReason {
    /// The source has a loop and the target has none.
    LoopMismatch,
    /// The source has an edge the target has nothing to map to.
    NoEdges,
    /// The source has vertices and the target has none.
    EmptyCodomain,
    /// No family of pieces can have images covering the whole target.
    UncoverableTarget,
}

impl fmt::Display for InfiniteReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InfiniteReason::LoopMismatch => "loop-mismatch",
            InfiniteReason::NoEdges => "no-edges",
            InfiniteReason::EmptyCodomain => "empty-codomain",
            InfiniteReason::UncoverableTarget => "uncoverable-target",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Value {
    Finite(usize),
    Infinite(InfiniteReason),
}

impl Value {
    pub fn finite(self) -> Option<usize> {
        match self {
            Value::Finite(k) => Some(k),
            Value::Infinite(_) => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Value::Infinite(_))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(k) => write!(f, "{k}"),
            Value::Infinite(_) => f.write_str("inf"),
        }
    }
}

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// `⌈log_{χ(H)} χ(G)⌉`, valid when `ω(H) = χ(H) ≥ 2`.
    Formula,
    /// Least `k` with `G → H^(k)`.
    Orpower,
    /// Exhaustive edge-partition search.
    Partition,
    /// Closed forms for injective complexity into `K2`.
    ClosedFormIc,
    /// Settled by the finiteness test alone.
    Finiteness,
    /// Exhaustive search over total maps (strong complexity).
    Exhaustive,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Orpower => "orpower",
            Method::Partition => "partition",
            Method::ClosedFormIc => "closed_form_ic",
            Method::Finiteness => "finiteness",
            Method::Exhaustive => "exhaustive",
        })
    }
}

/// Requested method.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MethodChoice {
    #[default]
    Auto,
    Formula,
    Orpower,
    Partition,
    ClosedForm,
}

impl std::str::FromStr for MethodChoice {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "auto" => MethodChoice::Auto,
            "formula" => MethodChoice::Formula,
            "orpower" => MethodChoice::Orpower,
            "partition" => MethodChoice::Partition,
            "closed_form" | "closed_form_ic" => MethodChoice::ClosedForm,
            other => {
                return Err(crate::Error::InvalidParameter(format!("unknown method `{other}`")))
            }
        })
    }
}

/// What a bound rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundTag {
    /// Every complexity is at least 1.
    Trivial,
    /// `χ(G) ≤ χ(H)^C`.
    ChromaticPower,
    /// The largest `m` with `χ(H)^(m-1) + 1 ≤ χ(G)`.
    ChromaticPowerStrict,
    /// `C ≤ n` whenever `χ(G) ≤ ω(H)^n`.
    CliquePower,
    /// One piece per edge, isolated vertices packed separately.
    SingleEdgePieces,
    /// A loop in the target absorbs the whole source.
    TargetLoop,
    /// Injective pieces carry at most `|E(H)|` edges each.
    EdgeCount,
    /// Injective pieces carry at most `|V(H)|` vertices each.
    VertexCount,
    /// A lower value was ruled out by exhaustive search.
    Search,
}

impl fmt::Display for BoundTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundTag::Trivial => "trivial",
            BoundTag::ChromaticPower => "chromatic-power",
            BoundTag::ChromaticPowerStrict => "chromatic-power-strict",
            BoundTag::CliquePower => "clique-power",
            BoundTag::SingleEdgePieces => "single-edge-pieces",
            BoundTag::TargetLoop => "target-loop",
            BoundTag::EdgeCount => "edge-count",
            BoundTag::VertexCount => "vertex-count",
            BoundTag::Search => "search",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub value: usize,
    pub tag: BoundTag,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexityResult {
    pub value: Value,
    pub kind: Kind,
    /// Best proven lower bound before the search.
    pub lower: Bound,
    /// Best known upper bound before the search; `None` when infinite.
    pub upper: Option<Bound>,
    /// Every bound that was computed, in order.
    pub trail: Vec<Bound>,
    pub method: Method,
    pub certificate: Option<QuasiHom>,
}
