//! Exact minimum set cover over at most 64 elements.

use std::collections::HashSet;

use crate::budget::{Budget, Ticker};
use crate::error::Result;

/// Indices of a minimum family of `sets` whose union is `full`, or `None`
/// when the union of all sets misses part of `full`. The search deepens from
/// `lower` and branches on the lowest uncovered element, trying sets in
/// decreasing size (ties by mask), so the answer is deterministic.
pub(crate) fn min_cover(sets: &[u64], full: u64, lower: usize, budget: &Budget) -> Result<Option<Vec<usize>>> {
    if full == 0 {
        return Ok(Some(Vec::new()));
    }
    if sets.iter().fold(0, |acc, s| acc | s) & full != full {
        return Ok(None);
    }
    // Distinct, undominated sets in branching order.
    let mut seen = HashSet::new();
    let mut order: Vec<usize> = (0..sets.len())
        .filter(|&i| sets[i] & full != 0 && seen.insert(sets[i] & full))
        .collect();
    order.sort_by_key(|&i| (std::cmp::Reverse((sets[i] & full).count_ones()), sets[i] & full));
    if order.len() <= 4096 {
        let kept: Vec<u64> = order.iter().map(|&i| sets[i] & full).collect();
        order = order
            .iter()
            .zip(&kept)
            .filter(|&(_, &a)| !kept.iter().any(|&b| b != a && a & b == a))
            .map(|(&i, _)| i)
            .collect();
    }
    let masks: Vec<u64> = order.iter().map(|&i| sets[i] & full).collect();
    let containing: Vec<Vec<usize>> =
        (0..64).map(|b| (0..masks.len()).filter(|&j| masks[j] >> b & 1 == 1).collect()).collect();
    let widest = masks.iter().map(|m| m.count_ones()).max().unwrap_or(1) as usize;
    let mut search = Search { masks: &masks, containing: &containing, widest, ticker: Ticker::new(budget) };

    let need = (full.count_ones() as usize).div_ceil(widest);
    let mut chosen = Vec::new();
    for k in lower.max(need).max(1).. {
        if search.dfs(full, 0, k, &mut chosen)? {
            return Ok(Some(chosen.iter().map(|&j| order[j]).collect()));
        }
    }
    unreachable!("the full family covers")
}

struct Search<'a> {
    masks: &'a [u64],
    containing: &'a [Vec<usize>],
    widest: usize,
    ticker: Ticker<'a>,
}

impl Search<'_> {
    fn dfs(&mut self, full: u64, covered: u64, k: usize, chosen: &mut Vec<usize>) -> Result<bool> {
        let missing = full & !covered;
        if missing == 0 {
            return Ok(true);
        }
        if missing.count_ones() as usize > k * self.widest {
            return Ok(false);
        }
        self.ticker.tick()?;
        let bit = missing.trailing_zeros() as usize;
        for &j in &self.containing[bit] {
            chosen.push(j);
            if self.dfs(full, covered | self.masks[j], k - 1, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(sets: &[u64], full: u64) -> Option<usize> {
        (0u32..1 << sets.len())
            .filter(|s| (0..sets.len()).filter(|i| s >> i & 1 == 1).fold(0, |a, i| a | sets[i]) & full == full)
            .map(|s| s.count_ones() as usize)
            .min()
    }

    #[test]
    fn matches_brute_force() {
        let cases: &[(&[u64], u64)] = &[
            (&[0b0011, 0b0110, 0b1100, 0b1000], 0b1111),
            (&[0b111, 0b001, 0b010], 0b111),
            (&[0b10101, 0b01010, 0b11000, 0b00111, 0b00001], 0b11111),
            (&[0b01, 0b01], 0b11),
        ];
        for &(sets, full) in cases {
            let got = min_cover(sets, full, 0, &Budget::default()).unwrap();
            assert_eq!(got.as_ref().map(Vec::len), brute(sets, full), "{sets:?}");
            if let Some(idx) = got {
                assert_eq!(idx.iter().fold(0, |a, &i| a | sets[i]) & full, full);
            }
        }
    }

    #[test]
    fn empty_universe_needs_nothing() {
        assert_eq!(min_cover(&[], 0, 0, &Budget::default()).unwrap(), Some(vec![]));
    }
}
