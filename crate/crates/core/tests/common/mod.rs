//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twodist::{Graph, Rational};

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

/// `G(n, p)` with `p = num/den`, seeded.
pub fn gnp(n: usize, num: u32, den: u32, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_ratio(num, den) {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(n, e).unwrap()
}

/// Adjacency matrix from the edge iterator only.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Pairs at distance 1 or 2, via matrix products.
pub fn within_two(g: &Graph) -> Vec<Vec<bool>> {
    let a = matrix(g);
    let n = g.n();
    let mut out = a.clone();
    for u in 0..n {
        for v in 0..n {
            if u != v && (0..n).any(|w| a[u][w] && a[w][v]) {
                out[u][v] = true;
            }
        }
    }
    out
}

/// Maximum of `2|E(S)|/|S|` over every nonempty vertex subset.
pub fn mad_by_subsets(g: &Graph) -> Rational {
    let n = g.n();
    let a = matrix(g);
    let mut best = Rational::ZERO;
    for mask in 1u32..(1u32 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut e = 0i64;
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if a[u][v] {
                    e += 1;
                }
            }
        }
        let ad = Rational::new(2 * e, members.len() as i64);
        if ad > best {
            best = ad;
        }
    }
    best
}

/// Chromatic number of the distance-2 graph by dynamic programming over subsets.
pub fn chi2_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let sq = within_two(g);
    let full = (1usize << n) - 1;
    let mut independent = vec![false; full + 1];
    independent[0] = true;
    for mask in 1..=full {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        independent[mask] = independent[rest] && (0..n).all(|w| rest >> w & 1 == 0 || !sq[v][w]);
    }
    let mut dp = vec![usize::MAX; full + 1];
    dp[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask & !low;
        // subsets of `rest`, each joined with the lowest vertex
        let mut sub = rest;
        loop {
            let s = sub | low;
            if independent[s] && dp[mask & !s] != usize::MAX {
                dp[mask] = dp[mask].min(dp[mask & !s] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    dp[full]
}

/// Shortest cycle by exhaustive simple-path search; `None` for forests.
pub fn girth_by_search(g: &Graph) -> Option<usize> {
    let a = matrix(g);
    let n = g.n();
    let mut best: Option<usize> = None;
    fn dfs(a: &[Vec<bool>], start: usize, cur: usize, len: usize, seen: &mut [bool], best: &mut Option<usize>) {
        if best.is_some_and(|b| len >= b) {
            return;
        }
        for next in 0..a.len() {
            if !a[cur][next] {
                continue;
            }
            if next == start && len >= 3 {
                *best = Some(best.map_or(len, |b| b.min(len)));
            } else if !seen[next] && next > start {
                seen[next] = true;
                dfs(a, start, next, len + 1, seen, best);
                seen[next] = false;
            }
        }
    }
    for s in 0..n {
        let mut seen = vec![false; n];
        seen[s] = true;
        dfs(&a, s, s, 1, &mut seen, &mut best);
    }
    best
}

/// Hubs of degree exactly `d` whose half-edges are grouped at random into
/// 2-paths (pairs), (1,1,1)-vertices (triples) and, when `quads` is set,
/// (1,1,1,1)-vertices (quadruples). Every 2-vertex sits between a hub and
/// either another 2-vertex or a center, so the graph has minimum degree 2 and
/// no 3⁺-path. A hub may repeat inside a group, which gives parallel legs.
pub fn hub_structure(hubs: usize, d: usize, triple_pct: u32, quad_pct: u32, seed: u64) -> Graph {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..hubs).flat_map(|h| std::iter::repeat_n(h, d)).collect();
    stubs.shuffle(&mut rng);
    let mut next = hubs;
    let mut e = Vec::new();
    let mut i = 0;
    while i < stubs.len() {
        let left = stubs.len() - i;
        let roll = rng.gen_range(0..100);
        let size = if left >= 4 && roll < quad_pct {
            4
        } else if left >= 3 && roll < quad_pct + triple_pct {
            3
        } else {
            2
        };
        // never strand a single stub
        let size = match (size, left - size.min(left)) {
            (4, 1) => 3,
            (s, 1) => s + 1,
            (s, _) => s.min(left),
        };
        let group = &stubs[i..i + size];
        if size == 2 {
            let (a, b) = (group[0], group[1]);
            e.extend([(a, next), (next, next + 1), (next + 1, b)]);
            next += 2;
        } else {
            let center = next;
            next += 1;
            for &h in group {
                e.extend([(h, next), (next, center)]);
                next += 1;
            }
        }
        i += size;
    }
    Graph::from_edges(next, e).unwrap()
}
