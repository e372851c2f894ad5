//! Brute-force oracles that share no code path with the library: subsets by
//! bit mask, eigen- and singular values by cyclic Jacobi rotations.

#![allow(dead_code)]

use sparse_cheeger::graph::{gen_random_regular, RegularGraph};

/// `(φ, members)` minimizing expansion over all `0 < |S| ≤ k`, with ties to
/// the smaller set and then the lexicographically smaller member list.
pub fn phi_bitmask(g: &RegularGraph, k: usize) -> (f64, Vec<usize>) {
    let n = g.n();
    let adj = g.adjacency();
    let mut best: Option<(f64, usize, Vec<usize>)> = None;
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size > k {
            continue;
        }
        let mut boundary = 0;
        for u in 0..n {
            for v in 0..n {
                if adj[u][v] == 1 && mask >> u & 1 == 1 && mask >> v & 1 == 0 {
                    boundary += 1;
                }
            }
        }
        let phi = boundary as f64 / (g.d() * size.min(n - size)) as f64;
        let members: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let better = match &best {
            None => true,
            Some((bp, bs, bm)) => (phi, size, &members) < (*bp, *bs, bm),
        };
        if better {
            best = Some((phi, size, members));
        }
    }
    let (phi, _, members) = best.unwrap();
    (phi, members)
}

/// Eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi sweeps.
pub fn jacobi_eigenvalues(a: &[Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    let mut a: Vec<Vec<f64>> = a.to_vec();
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for r in 0..n {
                    let (arp, arq) = (a[r][p], a[r][q]);
                    a[r][p] = c * arp - s * arq;
                    a[r][q] = s * arp + c * arq;
                }
                for r in 0..n {
                    let (apr, aqr) = (a[p][r], a[q][r]);
                    a[p][r] = c * apr - s * aqr;
                    a[q][r] = s * apr + c * aqr;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Singular values of the matrix whose columns are `cols`, by one-sided
/// Jacobi orthogonalization. Returned ascending; when there are more
/// columns than rows the extra values are zero.
pub fn jacobi_singular_values(cols: &[Vec<f64>]) -> Vec<f64> {
    let k = cols.len();
    let mut u: Vec<Vec<f64>> = cols.to_vec();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    for _ in 0..100 {
        let mut rotated = false;
        for p in 0..k {
            for q in p + 1..k {
                let alpha = dot(&u[p], &u[p]);
                let beta = dot(&u[q], &u[q]);
                let gamma = dot(&u[p], &u[q]);
                if gamma.abs() <= 1e-15 * (alpha * beta).sqrt() || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for r in 0..u[p].len() {
                    let (x, y) = (u[p][r], u[q][r]);
                    u[p][r] = c * x - s * y;
                    u[q][r] = s * x + c * y;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = u.iter().map(|c| dot(c, c).sqrt()).collect();
    sv.sort_by(f64::total_cmp);
    let rows = cols.first().map_or(0, Vec::len);
    if k > rows {
        for v in sv.iter_mut().take(k - rows) {
            *v = 0.0;
        }
    }
    sv
}

/// Supports of size `k` in lexicographic order, via bit masks.
pub fn supports_bitmask(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..(1u32 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// `max(1 − σ_min, σ_max − 1)` over every size-`k` column support of the
/// row-major matrix `m`; returns `(value, first maximizing support)`.
pub fn ric_bruteforce(m: &[Vec<f64>], k: usize) -> (f64, Vec<usize>) {
    let n = m[0].len();
    let mut best: Option<(f64, Vec<usize>)> = None;
    for s in supports_bitmask(n, k) {
        let v = support_deviation_oracle(m, &s);
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, s));
        }
    }
    best.unwrap()
}

pub fn support_deviation_oracle(m: &[Vec<f64>], s: &[usize]) -> f64 {
    let cols: Vec<Vec<f64>> = s.iter().map(|&j| m.iter().map(|row| row[j]).collect()).collect();
    let sv = jacobi_singular_values(&cols);
    (1.0 - sv[0]).max(sv[sv.len() - 1] - 1.0)
}

/// Exact `λ_k` by Jacobi on every principal submatrix of `L = I − A/d`.
pub fn sparse_lambda_oracle(g: &RegularGraph, k: usize) -> f64 {
    let a = g.adjacency();
    let d = g.d() as f64;
    supports_bitmask(g.n(), k)
        .iter()
        .map(|s| {
            let sub: Vec<Vec<f64>> = s
                .iter()
                .map(|&i| {
                    s.iter()
                        .map(|&j| if i == j { 1.0 } else { -(a[i][j] as f64) / d })
                        .collect()
                })
                .collect();
            jacobi_eigenvalues(&sub)[0]
        })
        .fold(f64::INFINITY, f64::min)
}

/// Row-major dense copy.
pub fn dense(m: &nalgebra::DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows()).map(|r| (0..m.ncols()).map(|c| m[(r, c)]).collect()).collect()
}

/// The Petersen graph (3-regular, 10 vertices).
pub fn petersen() -> RegularGraph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    RegularGraph::new(10, 3, e).unwrap()
}

/// Random d-regular graph with admissible `(n, d)` chosen from `seed`.
pub fn random_graph(seed: u64, n_range: std::ops::RangeInclusive<usize>, degrees: &[usize]) -> RegularGraph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    loop {
        let n = rng.gen_range(n_range.clone());
        let d = degrees[rng.gen_range(0..degrees.len())];
        if d < n && (n * d).is_multiple_of(2) {
            return gen_random_regular(n, d, seed).unwrap();
        }
    }
}
