use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, Mode};
use crate::error::{Error, Result};

/// Named graph families. All generated graphs are undirected; every family
/// except [`Family::LoopVertex`] is simple.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Complete(usize),
    /// Path on `m` vertices.
    Path(usize),
    Cycle(usize),
    /// Edgeless graph on `n` vertices.
    Edgeless(usize),
    CompleteMultipartite(Vec<usize>),
    /// The Mycielskian of the 5-cycle.
    Grotzsch,
    /// Vertices are the `k`-subsets of `{1..n}`, adjacent when disjoint.
    Kneser { n: usize, k: usize },
    /// Erdős–Rényi `G(n, p)`.
    Random { n: usize, p: f64, seed: u64 },
    LoopVertex,
}

fn numbered(n: usize) -> Graph {
    let mut g = Graph::new(Mode::Undirected);
    for i in 1..=n {
        g.add_vertex(i.to_string()).expect("fresh names");
    }
    g
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn generate(family: &Family) -> Result<Graph> {
    let g = match family {
        &Family::Complete(n) => {
            if n < 1 {
                return Err(bad("complete graph needs n >= 1"));
            }
            let mut g = numbered(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v)?;
                }
            }
            g.with_name(format!("K{n}"))
        }
        &Family::Path(m) => {
            if m < 1 {
                return Err(bad("path needs m >= 1"));
            }
            let mut g = numbered(m);
            for u in 1..m {
                g.add_edge(u - 1, u)?;
            }
            g.with_name(format!("P{m}"))
        }
        &Family::Cycle(m) => {
            if m < 3 {
                return Err(bad("cycle needs m >= 3"));
            }
            let mut g = numbered(m);
            for u in 0..m {
                g.add_edge(u, (u + 1) % m)?;
            }
            g.with_name(format!("C{m}"))
        }
        &Family::Edgeless(n) => numbered(n).with_name(format!("E{n}")),
        Family::CompleteMultipartite(parts) => {
            if parts.is_empty() || parts.contains(&0) {
                return Err(bad("complete multipartite graph needs nonempty parts"));
            }
            let total: usize = parts.iter().sum();
            let mut g = numbered(total);
            let mut part_of = Vec::with_capacity(total);
            for (p, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(p, size));
            }
            for u in 0..total {
                for v in u + 1..total {
                    if part_of[u] != part_of[v] {
                        g.add_edge(u, v)?;
                    }
                }
            }
            let sizes: Vec<String> = parts.iter().map(ToString::to_string).collect();
            g.with_name(format!("K{{{}}}", sizes.join(",")))
        }
        Family::Grotzsch => {
            // Cycle 1..5, shadow 5+i joined to the cycle neighbours of i, hub 11.
            let mut g = numbered(11);
            for i in 0..5 {
                g.add_edge(i, (i + 1) % 5)?;
                g.add_edge(5 + i, (i + 1) % 5)?;
                g.add_edge(5 + i, (i + 4) % 5)?;
                g.add_edge(5 + i, 10)?;
            }
            g.with_name("grotzsch")
        }
        &Family::Kneser { n, k } => {
            if k < 1 || 2 * k > n {
                return Err(bad("kneser graph needs 1 <= k <= n/2"));
            }
            let subsets = k_subsets(n, k);
            if subsets.len() > 100_000 {
                return Err(Error::ResourceLimit(format!(
                    "kneser({n},{k}) has {} vertices",
                    subsets.len()
                )));
            }
            let mut g = Graph::new(Mode::Undirected);
            for s in &subsets {
                let names: Vec<String> = s.iter().map(ToString::to_string).collect();
                g.add_vertex(format!("{{{}}}", names.join(",")))?;
            }
            for a in 0..subsets.len() {
                for b in a + 1..subsets.len() {
                    if subsets[a].iter().all(|x| !subsets[b].contains(x)) {
                        g.add_edge(a, b)?;
                    }
                }
            }
            g.with_name(format!("kneser({n},{k})"))
        }
        &Family::Random { n, p, seed } => {
            if n < 1 || !(0.0..=1.0).contains(&p) {
                return Err(bad("random graph needs n >= 1 and 0 <= p <= 1"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut g = numbered(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        g.add_edge(u, v)?;
                    }
                }
            }
            g.with_name(format!("G({n},{p})#{seed}"))
        }
        Family::LoopVertex => {
            let mut g = numbered(1);
            g.add_edge(0, 0)?;
            g.with_name("loop")
        }
    };
    Ok(g)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - (k - 1 - i)) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
