use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Size limits and an optional deadline shared by every exact search.
#[derive(Clone, Debug)]
pub struct Budget {
    pub deadline: Option<Instant>,
    /// Largest OR-power (in vertices) the complexity engine will search into.
    pub orpower_vertices: usize,
    /// Largest OR-power (in edges) that `or_power` will materialise.
    pub orpower_edges: usize,
    /// Edge limit for the partition search of `C`.
    pub partition_edges: usize,
    /// Edge limit for the partition search of `IC`.
    pub partition_edges_injective: usize,
    /// Vertex limit for exhaustive core computation.
    pub core_vertices: usize,
    /// Limit on vertices and edges of either graph for strong hom-complexity.
    pub strong_size: usize,
    /// Edge limit for covering-number searches.
    pub cover_edges: usize,
    /// Vertex limit for complete multipartite enumeration with more than two parts.
    pub multipartite_vertices: usize,
    /// Vertex limit for biclique enumeration.
    pub biclique_vertices: usize,
    /// Limit on the vertex maps enumerated to list maximal colourable pieces.
    pub cover_maps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            deadline: None,
            orpower_vertices: 200_000,
            orpower_edges: 5_000_000,
            partition_edges: 14,
            partition_edges_injective: 12,
            core_vertices: 10,
            strong_size: 6,
            cover_edges: 64,
            multipartite_vertices: 9,
            biclique_vertices: 20,
            cover_maps: 4_000_000,
        }
    }
}

impl Budget {
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub fn with_max_edges(mut self, edges: usize) -> Self {
        self.partition_edges = edges;
        self.partition_edges_injective = edges;
        self.cover_edges = edges;
        self
    }

    pub(crate) fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(t) if Instant::now() >= t => Err(Error::Deadline),
            _ => Ok(()),
        }
    }
}

/// Polls the deadline every few thousand calls.
pub(crate) struct Ticker<'a> {
    budget: &'a Budget,
    count: u32,
}

impl<'a> Ticker<'a> {
    pub(crate) fn new(budget: &'a Budget) -> Self {
        Ticker { budget, count: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.count = self.count.wrapping_add(1);
        if self.count & 0xfff == 0 {
            self.budget.check_deadline()
        } else {
            Ok(())
        }
    }
}
