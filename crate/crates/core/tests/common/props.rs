//! Structural properties of hom-complexity, checked on one random instance
//! per seed. Budget exhaustion skips a check; anything else that goes wrong
//! is a violation.

use std::collections::BTreeMap;

use homtool_core::complexity::MethodChoice;
use homtool_core::covers::{sigma_cover_with, CoverClass};
use homtool_core::graph::{disjoint_union, tensor_product, Family};
use homtool_core::hom::core;
use homtool_core::invariants::{chromatic_number, clique_number};
use homtool_core::{Graph, Mode, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;

#[derive(Default)]
pub struct Tally {
    /// Property name to (checked, skipped).
    pub counts: BTreeMap<&'static str, (usize, usize)>,
    pub violations: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, name: &'static str, ctx: &str, f: impl FnOnce() -> Result<bool>) {
        let entry = self.counts.entry(name).or_default();
        match f() {
            Ok(true) => entry.0 += 1,
            Ok(false) => {
                entry.0 += 1;
                self.violations.push(format!("{name}: {ctx}"));
            }
            Err(e) if e.is_budget() => entry.1 += 1,
            Err(e) => {
                entry.0 += 1;
                self.violations.push(format!("{name}: {ctx}: error {e}"));
            }
        }
    }

    pub fn checked(&self) -> usize {
        self.counts.values().map(|c| c.0).sum()
    }

    pub fn skipped(&self) -> usize {
        self.counts.values().map(|c| c.1).sum()
    }
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|e| g.fmt_edge(e)).collect();
    format!("{}v [{}]", g.order(), edges.join(" "))
}

fn core_of(g: &Graph) -> Result<Graph> {
    Ok(core(g)?.0.to_graph())
}

fn times(a: &Graph, b: &Graph) -> Graph {
    tensor_product(a, b).unwrap()
}

/// Splits `g` into two subgraphs whose union is `g`.
fn split(rng: &mut impl Rng, g: &Graph) -> (Graph, Graph) {
    let mut in_a = vec![false; g.order()];
    let mut in_b = vec![false; g.order()];
    let (mut ea, mut eb) = (Vec::new(), Vec::new());
    for (u, v) in g.edges() {
        let side = if rng.random_bool(0.5) { (&mut ea, &mut in_a) } else { (&mut eb, &mut in_b) };
        side.0.push((u, v));
        side.1[u] = true;
        side.1[v] = true;
    }
    for v in 0..g.order() {
        if !in_a[v] && !in_b[v] {
            if rng.random_bool(0.5) {
                in_a[v] = true;
            } else {
                in_b[v] = true;
            }
        }
    }
    if !in_a.iter().any(|&x| x) {
        in_a[0] = true;
    }
    if !in_b.iter().any(|&x| x) {
        in_b[0] = true;
    }
    (subgraph(g, &in_a, &ea), subgraph(g, &in_b, &eb))
}

/// Properties shared by both modes.
fn common_properties(t: &mut Tally, rng: &mut ChaCha8Rng, g: &Graph, targets: &[Graph], random: fn(&mut ChaCha8Rng, usize) -> Graph) {
    let h = pick(rng, targets);
    let k = pick(rng, targets);
    let mid = random(rng, 4);
    let ctx = format!("G={} H={} K={} M={}", describe(g), describe(&h), describe(&k), describe(&mid));

    t.check("triangular inequality", &ctx, || Ok(le(c(g, &k)?, mul(c(g, &mid)?, c(&mid, &k)?))));
    t.check("triangular inequality (injective)", &ctx, || {
        Ok(le(ic(g, &k)?, mul(ic(g, &mid)?, ic(&mid, &k)?)))
    });

    let g_sub = random_subgraph(rng, g);
    let h_sub = random_subgraph(rng, &h);
    let ctx_m = format!("{ctx} G'={} H'={}", describe(&g_sub), describe(&h_sub));
    t.check("monotone in source", &ctx_m, || Ok(le(c(&g_sub, &h)?, c(g, &h)?)));
    t.check("monotone in target", &ctx_m, || Ok(le(c(g, &h)?, c(g, &h_sub)?)));
    t.check("monotone in source (injective)", &ctx_m, || Ok(le(ic(&g_sub, &h)?, ic(g, &h)?)));
    t.check("monotone in target (injective)", &ctx_m, || Ok(le(ic(g, &h)?, ic(g, &h_sub)?)));
    // The projection G×K → G is a homomorphism that is not injective.
    let cover = times(g, &k);
    t.check("monotone along projection", &ctx, || Ok(le(c(&cover, &h)?, c(g, &h)?)));

    let g_iso = shuffled_copy(rng, g);
    let h_iso = shuffled_copy(rng, &h);
    t.check("isomorphism invariance", &ctx, || Ok(c(&g_iso, &h_iso)? == c(g, &h)?));
    t.check("isomorphism invariance (injective)", &ctx, || Ok(ic(&g_iso, &h_iso)? == ic(g, &h)?));

    t.check("core reduction", &ctx, || {
        let (cg, ch) = (core_of(g)?, core_of(&h)?);
        let v = c(g, &h)?;
        Ok(c(&cg, &h)? == v && c(&cg, &ch)? == v && c(g, &ch)? == v)
    });

    let (a, b) = split(rng, g);
    let ctx_s = format!("{ctx} A={} B={}", describe(&a), describe(&b));
    t.check("sub-additivity", &ctx_s, || {
        let (ca, cb, cu) = (c(&a, &h)?, c(&b, &h)?, c(g, &h)?);
        Ok(le(max(ca, cb), cu) && le(cu, add(ca, cb)))
    });
    t.check("sub-additivity (injective)", &ctx_s, || {
        let (ca, cb, cu) = (ic(&a, &h)?, ic(&b, &h)?, ic(g, &h)?);
        Ok(le(max(ca, cb), cu) && le(cu, add(ca, cb)))
    });

    let other = random(rng, 3);
    let ctx_u = format!("{ctx} B={}", describe(&other));
    t.check("disjoint union", &ctx_u, || {
        let u = disjoint_union(g, &other)?;
        Ok(c(&u, &h)? == max(c(g, &h)?, c(&other, &h)?))
    });

    let hh = times(&h, &h);
    let gg = times(g, g);
    t.check("diagonal products", &ctx, || {
        let v = c(g, &h)?;
        Ok(c(g, &hh)? == v && c(&gg, &h)? == v)
    });
    t.check("diagonal products (injective)", &ctx, || Ok(le(ic(g, &hh)?, ic(g, &h)?)));
    t.check("diagonal products (injective, squared source)", &ctx, || Ok(le(ic(g, &h)?, ic(&gg, &h)?)));
    t.check("squared source and target", &ctx, || Ok(c(&gg, &hh)? == c(g, &h)?));

    // Products with a second small source and target.
    let small: Vec<Graph> = targets.iter().filter(|x| x.order() <= 3).cloned().collect();
    let (h1, h2) = (pick(rng, &small), pick(rng, &small));
    let g2 = random(rng, 3);
    let ctx_p = format!("G1={} G2={} H1={} H2={}", describe(g), describe(&g2), describe(&h1), describe(&h2));
    let g12 = times(g, &g2);
    let h12 = times(&h1, &h2);
    t.check("product inequality", &ctx_p, || {
        let v = c(&g12, &h12)?;
        let lower = max(c(&g12, &h1)?, c(&g12, &h2)?);
        let upper = min(mul(c(g, &h1)?, c(&g2, &h2)?), min(c(g, &h12)?, c(&g2, &h12)?));
        Ok(le(lower, v) && le(v, upper))
    });
    t.check("product inequality (injective)", &ctx_p, || {
        Ok(le(ic(&g12, &h12)?, mul(ic(g, &h1)?, ic(&g2, &h2)?)))
    });
    t.check("product of targets", &ctx_p, || {
        let v = c(g, &h12)?;
        let (a, b) = (c(g, &h1)?, c(g, &h2)?);
        Ok(le(max(a, b), v) && le(v, mul(a, b)))
    });
}

pub fn simple_case(t: &mut Tally, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_simple(&mut rng, 6);
    let targets = simple_targets();
    common_properties(t, &mut rng, &g, &targets, random_simple);

    let h = pick(&mut rng, &targets);
    let ctx = format!("seed {seed}: G={} H={}", describe(&g), describe(&h));
    let chi_g = chromatic_number(&g).unwrap().0;
    let chi_h = chromatic_number(&h).unwrap().0;
    let omega_h = clique_number(&h).unwrap().0;

    t.check("chromatic power bound", &ctx, || {
        let v = c(&g, &h)?.expect("targets have edges");
        Ok(chi_g <= chi_h.pow(v as u32))
    });
    if chi_g >= 2 && omega_h >= 2 {
        t.check("chromatic sandwich", &ctx, || {
            let v = c(&g, &h)?.expect("targets have edges");
            let lower = (1..=chi_g).filter(|&m| chi_h.pow(m as u32 - 1) < chi_g).max().unwrap_or(1);
            let upper = (1..).find(|&n| chi_g <= omega_h.pow(n as u32)).unwrap();
            Ok(lower <= v && v <= upper)
        });
    }
    let b = budget();
    t.check("complexity is a covering number", &ctx, || {
        Ok(c(&g, &h)? == sigma_cover_with(&g, CoverClass::Colourable(&h), &b)?.value)
    });
    for l in 2..=3 {
        let kl = complete(l);
        t.check("particity equals complexity", &ctx, || {
            let v = c(&g, &kl)?;
            if v < Some(2) {
                return Ok(true);
            }
            Ok(sigma_cover_with(&g, CoverClass::LPartite(l), &b)?.value == v)
        });
        t.check("partite dimension chain", &ctx, || {
            let d = sigma_cover_with(&g, CoverClass::CompleteLPartite(l), &b)?.value;
            let beta = sigma_cover_with(&g, CoverClass::LPartite(l), &b)?.value;
            Ok(le(beta, d) && le(c(&g, &kl)?, beta))
        });
    }
    let omega_g = clique_number(&g).unwrap().0;
    if !g.has_isolated_vertices() && omega_g >= 2 {
        t.check("clique cover chain", &ctx, || {
            let kw = complete(omega_g);
            let cc = sigma_cover_with(&g, CoverClass::Clique, &b)?.value;
            let inj = ic(&g, &kw)?;
            Ok(le(inj, cc) && le(c(&g, &kw)?, inj))
        });
        if omega_g == 2 {
            t.check("clique cover of triangle-free graphs", &ctx, || {
                Ok(sigma_cover_with(&g, CoverClass::Clique, &b)?.value == Some(g.size()))
            });
        }
    }
}

pub fn directed_case(t: &mut Tally, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_directed(&mut rng, 5);
    let targets = directed_targets();
    common_properties(t, &mut rng, &g, &targets, random_directed);
}

/// Partition search against the exhaustive oracle, for graphs with at most
/// five edges. Returns the number of comparisons made.
pub fn oracle_case(t: &mut Tally, seed: u64, mode: Mode) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (g, targets) = match mode {
        Mode::Undirected => (random_simple(&mut rng, 6), simple_targets()),
        Mode::Directed => (random_directed(&mut rng, 5), directed_targets()),
    };
    if g.size() > 5 {
        return 0;
    }
    let mut extra = vec![gen(Family::Edgeless(2))];
    if mode == Mode::Directed {
        extra = vec![build(Mode::Directed, 2, &[])];
    }
    let b = budget();
    let mut compared = 0;
    for h in targets.iter().chain(&extra) {
        let ctx = format!("seed {seed}: G={} H={}", describe(&g), describe(h));
        for injective in [false, true] {
            let name = if injective { "oracle agreement (injective)" } else { "oracle agreement" };
            let want = Oracle::new(&g, h, injective).value(3);
            t.check(name, &ctx, || {
                let got = if injective {
                    ic_with(&g, h, MethodChoice::Partition, &b)?
                } else {
                    c_with(&g, h, MethodChoice::Partition, &b)?
                };
                Ok(match want {
                    Some(k) => got == Some(k),
                    None => got.is_none_or(|v| v > 3),
                })
            });
            compared += 1;
        }
    }
    compared
}
