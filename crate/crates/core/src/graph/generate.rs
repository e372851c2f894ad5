use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{RegularGraph, VertexSet};
use crate::error::{param, Error, Result};

/// Configuration-model attempts before giving up.
pub const GENERATION_RETRIES: usize = 1000;

fn check_regular_params(n: usize, d: usize) -> Result<()> {
    if d == 0 || d >= n {
        return Err(param(format!("need 0 < d < n (n={n}, d={d})")));
    }
    if !(n * d).is_multiple_of(2) {
        return Err(param(format!("n·d = {}·{} is odd", n, d)));
    }
    Ok(())
}

/// Pairs `n·d` half-edges at random, only ever joining two points whose
/// vertices are distinct and not yet adjacent; a dead end restarts the
/// pairing. This succeeds far more often than plain rejection of the
/// configuration model once `d` grows. Returns sorted `(u, v)` with `u < v`.
fn configuration_model(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Result<Vec<(usize, usize)>> {
    let all_points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..GENERATION_RETRIES {
        let mut points = all_points.clone();
        let mut edges = BTreeSet::new();
        let mut misses = 0;
        while !points.is_empty() {
            let i = rng.gen_range(0..points.len());
            let j = rng.gen_range(0..points.len());
            let (u, v) = (points[i].min(points[j]), points[i].max(points[j]));
            if u != v && !edges.contains(&(u, v)) {
                edges.insert((u, v));
                let (hi, lo) = (i.max(j), i.min(j));
                points.swap_remove(hi);
                points.swap_remove(lo);
                misses = 0;
                continue;
            }
            misses += 1;
            if misses >= 32 {
                let open = points.iter().enumerate().any(|(a, &x)| {
                    points[a + 1..]
                        .iter()
                        .any(|&y| x != y && !edges.contains(&(x.min(y), x.max(y))))
                });
                if !open {
                    continue 'attempt;
                }
                misses = 0;
            }
        }
        return Ok(edges.into_iter().collect());
    }
    Err(Error::Generation(format!(
        "no simple {d}-regular pairing on {n} vertices after {GENERATION_RETRIES} attempts"
    )))
}

/// Dense degrees go through the complement, which is `(n − 1 − d)`-regular
/// and far likelier to pair simply.
fn random_regular_edges(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Result<Vec<(usize, usize)>> {
    if 2 * d < n {
        return configuration_model(rng, n, d);
    }
    let sparse: BTreeSet<(usize, usize)> = if d == n - 1 {
        BTreeSet::new()
    } else {
        configuration_model(rng, n, n - 1 - d)?.into_iter().collect()
    };
    Ok((0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !sparse.contains(e))
        .collect())
}

/// Random simple d-regular graph; `(n, d, seed)` determines the result.
pub fn gen_random_regular(n: usize, d: usize, seed: u64) -> Result<RegularGraph> {
    check_regular_params(n, d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = random_regular_edges(&mut rng, n, d)?;
    RegularGraph::new(n, d, edges)
}

/// Random d-regular graph with a planted set of size `s` whose boundary is
/// exactly `c` edges.
///
/// Independent random regular graphs are drawn on the planted side and on
/// its complement, then `c/2` swaps each delete one internal edge `{a, b}`
/// from either side and add the crossing pair `{a, u}`, `{b, v}`. Vertex
/// labels are shuffled afterwards, so the planted set is not simply `0..s`.
pub fn gen_planted_cut(
    n: usize,
    d: usize,
    s: usize,
    c: usize,
    seed: u64,
) -> Result<(RegularGraph, VertexSet)> {
    if !c.is_multiple_of(2) {
        return Err(param(format!("cut size c={c} must be even")));
    }
    if s == 0 || 2 * s > n {
        return Err(param(format!("planted size s={s} must lie in [1, n/2] for n={n}")));
    }
    if 2 * c > d * s {
        return Err(param(format!("cut size c={c} exceeds d·s/2 = {}", d * s / 2)));
    }
    check_regular_params(s, d)?;
    check_regular_params(n - s, d)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inner = random_regular_edges(&mut rng, s, d)?;
    let outer: Vec<(usize, usize)> = random_regular_edges(&mut rng, n - s, d)?
        .into_iter()
        .map(|(u, v)| (u + s, v + s))
        .collect();

    let mut crossing: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut inner = inner;
    let mut outer = outer;
    for _ in 0..c / 2 {
        let mut swapped = false;
        for _ in 0..GENERATION_RETRIES {
            let i = rng.gen_range(0..inner.len());
            let j = rng.gen_range(0..outer.len());
            let (a, b) = inner[i];
            let (mut u, mut v) = outer[j];
            if rng.gen_bool(0.5) {
                std::mem::swap(&mut u, &mut v);
            }
            if crossing.contains(&(a, u)) || crossing.contains(&(b, v)) {
                continue;
            }
            inner.swap_remove(i);
            outer.swap_remove(j);
            crossing.insert((a, u));
            crossing.insert((b, v));
            swapped = true;
            break;
        }
        if !swapped {
            return Err(Error::Generation(format!(
                "could not find a simple cross swap after {GENERATION_RETRIES} attempts"
            )));
        }
    }

    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut rng);
    let edges = inner
        .into_iter()
        .chain(outer)
        .chain(crossing)
        .map(|(u, v)| (label[u], label[v]));
    let graph = RegularGraph::new(n, d, edges)?;
    let planted = VertexSet::new((0..s).map(|v| label[v]), n)?;
    Ok((graph, planted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::expansion;

    #[test]
    fn deterministic_per_seed() {
        let a = gen_random_regular(8, 3, 7).unwrap();
        let b = gen_random_regular(8, 3, 7).unwrap();
        assert_eq!(a, b);
        let others = (0..20).filter(|&s| gen_random_regular(8, 3, s).unwrap() != a).count();
        assert!(others > 0);
    }

    #[test]
    fn odd_degree_sum_rejected() {
        assert!(matches!(gen_random_regular(5, 3, 0), Err(Error::Parameter(_))));
        assert!(matches!(gen_random_regular(4, 4, 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn dense_degrees_use_complement() {
        for (n, d) in [(8, 5), (8, 6), (9, 8), (10, 7)] {
            for seed in 0..20 {
                let g = gen_random_regular(n, d, seed).unwrap();
                assert_eq!(g.edges().len(), n * d / 2);
            }
        }
    }

    #[test]
    fn regular_and_loop_free() {
        let g = gen_random_regular(12, 3, 1).unwrap();
        for row in g.adjacency() {
            assert_eq!(row.iter().map(|&x| x as usize).sum::<usize>(), 3);
        }
        for v in 0..12 {
            assert!(!g.has_edge(v, v));
        }
    }

    #[test]
    fn planted_cut_boundary_is_exact() {
        let (g, s) = gen_planted_cut(40, 4, 8, 2, 3).unwrap();
        let r = expansion(&g, &s).unwrap();
        assert_eq!(r.boundary, 2);
        assert_eq!(r.expansion, 0.0625);
        assert_eq!(s.len(), 8);
    }

    #[test]
    fn planted_zero_cut_is_disconnected() {
        let (g, s) = gen_planted_cut(40, 4, 8, 0, 3).unwrap();
        assert_eq!(expansion(&g, &s).unwrap().expansion, 0.0);
    }

    #[test]
    fn planted_parameter_errors() {
        assert!(matches!(gen_planted_cut(40, 4, 8, 3, 0), Err(Error::Parameter(_))));
        assert!(matches!(gen_planted_cut(40, 4, 24, 2, 0), Err(Error::Parameter(_))));
        assert!(matches!(gen_planted_cut(40, 4, 8, 20, 0), Err(Error::Parameter(_))));
        assert!(matches!(gen_planted_cut(41, 3, 8, 2, 0), Err(Error::Parameter(_))));
        assert!(matches!(gen_planted_cut(40, 4, 4, 2, 0), Err(Error::Parameter(_))));
    }
}
