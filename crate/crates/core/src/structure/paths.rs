//! Maximal chains of 2-vertices and vertex signatures.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Result of following degree-2 vertices away from a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    /// Consecutive 2-vertices, nearest first.
    pub internals: Vec<usize>,
    /// First vertex of degree other than 2 (or the start again, for loops).
    pub end: usize,
}

/// Follows the chain leaving `start` through its neighbor `first`.
pub fn walk(g: &Graph, start: usize, first: usize) -> Walk {
    let mut internals = Vec::new();
    let (mut prev, mut cur) = (start, first);
    while g.degree(cur) == 2 && cur != start {
        internals.push(cur);
        let nb = g.neighbors(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    Walk { internals, end: cur }
}

/// A `k`-path: `k` internal 2-vertices between two 3⁺-vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KPath {
    pub endpoints: (usize, usize),
    pub internals: Vec<usize>,
    pub k: usize,
    pub is_loop: bool,
}

impl KPath {
    /// Internals listed from `end` outward.
    pub fn internals_from(&self, end: usize) -> Vec<usize> {
        if end == self.endpoints.0 {
            self.internals.clone()
        } else {
            self.internals.iter().rev().copied().collect()
        }
    }

    pub fn other_end(&self, end: usize) -> usize {
        if end == self.endpoints.0 {
            self.endpoints.1
        } else {
            self.endpoints.0
        }
    }
}

/// Every 2-vertex lands in exactly one of `paths`, `bare_cycles` or
/// `pendant_chains`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PathClassification {
    pub paths: Vec<KPath>,
    /// Components that are cycles of 2-vertices, listed in cyclic order.
    pub bare_cycles: Vec<Vec<usize>>,
    /// Chains of 2-vertices that reach a vertex of degree at most 1.
    pub pendant_chains: Vec<Vec<usize>>,
}

pub fn classify_paths(g: &Graph) -> PathClassification {
    let n = g.n();
    let mut out = PathClassification::default();
    let mut covered = vec![false; n];

    for u in (0..n).filter(|&u| g.degree(u) >= 3) {
        for &x in g.neighbors(u) {
            let w = walk(g, u, x);
            let last = *w.internals.last().unwrap_or(&u);
            if g.degree(w.end) <= 1 {
                if !w.internals.is_empty() {
                    w.internals.iter().for_each(|&i| covered[i] = true);
                    out.pendant_chains.push(w.internals);
                }
                continue;
            }
            // report each path once, from its lexicographically smaller side
            if (u, x) > (w.end, last) {
                continue;
            }
            w.internals.iter().for_each(|&i| covered[i] = true);
            out.paths.push(KPath {
                endpoints: (u, w.end),
                k: w.internals.len(),
                is_loop: u == w.end,
                internals: w.internals,
            });
        }
    }

    for s in 0..n {
        if covered[s] || g.degree(s) != 2 {
            continue;
        }
        // walk both ways from s through uncovered 2-vertices
        let nb = g.neighbors(s);
        let first = walk(g, s, nb[0]);
        covered[s] = true;
        if first.end == s {
            let mut cyc = vec![s];
            cyc.extend(first.internals.iter().copied());
            cyc.iter().for_each(|&v| covered[v] = true);
            out.bare_cycles.push(cyc);
            continue;
        }
        let second = walk(g, s, nb[1]);
        let mut chain: Vec<usize> = first.internals.iter().rev().copied().collect();
        chain.push(s);
        chain.extend(second.internals.iter().copied());
        chain.iter().for_each(|&v| covered[v] = true);
        out.pendant_chains.push(chain);
    }
    out
}

/// `(k₁,…,k_d)` for a 3⁺-vertex, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexSignature {
    pub vertex: usize,
    pub ks: Vec<usize>,
}

pub fn vertex_signature(g: &Graph, v: usize) -> Result<VertexSignature> {
    g.check_vertex(v)?;
    let degree = g.degree(v);
    if degree < 3 {
        return Err(Error::DegreeTooSmall { vertex: v, degree });
    }
    let mut ks: Vec<usize> = g.neighbors(v).iter().map(|&x| walk(g, v, x).internals.len()).collect();
    ks.sort_unstable_by(|a, b| b.cmp(a));
    Ok(VertexSignature { vertex: v, ks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn two_path_between_hubs() {
        // hubs 0 and 3, each with two leaves, joined by 0-1-2-3
        let h = g(8, &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (3, 6), (3, 7)]);
        let c = classify_paths(&h);
        let twos: Vec<_> = c.paths.iter().filter(|p| p.k == 2).collect();
        assert_eq!(twos.len(), 1);
        assert_eq!(twos[0].endpoints, (0, 3));
        assert_eq!(twos[0].internals, vec![1, 2]);
        assert!(!twos[0].is_loop);
    }

    #[test]
    fn subdivided_claw() {
        // center 0, legs 0-1-4, 0-2-5, 0-3-6; make the leg ends 3-vertices via a triangle-free gadget
        let mut e = vec![(0, 1), (1, 4), (0, 2), (2, 5), (0, 3), (3, 6)];
        for (a, b) in [(4, 7), (4, 8), (5, 9), (5, 10), (6, 11), (6, 12)] {
            e.push((a, b));
        }
        let h = g(13, &e);
        let c = classify_paths(&h);
        let ones: Vec<_> = c.paths.iter().filter(|p| p.k == 1).collect();
        assert_eq!(ones.len(), 3);
        assert!(ones.iter().all(|p| p.endpoints.0 == 0));
        assert_eq!(vertex_signature(&h, 0).unwrap().ks, vec![1, 1, 1]);
    }

    #[test]
    fn bare_cycle_reported_separately() {
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let c = classify_paths(&c5);
        assert!(c.paths.is_empty());
        assert_eq!(c.bare_cycles, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn loops_are_flagged() {
        // 0 has a 2-path loop 0-1-2-0 plus a pendant leaf 3
        let h = g(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]);
        let c = classify_paths(&h);
        let looped: Vec<_> = c.paths.iter().filter(|p| p.is_loop).collect();
        assert_eq!(looped.len(), 1);
        assert_eq!(looped[0].k, 2);
        assert!(c.pendant_chains.is_empty());
    }

    #[test]
    fn signatures() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(vertex_signature(&k4, 0).unwrap().ks, vec![0, 0, 0]);
        // u=0 on a 2-path to 3 plus two plain neighbors 4,5 (both of degree 3 via K4-ish gadget)
        let h = g(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 4),
                (0, 5),
                (4, 5),
                (4, 6),
                (5, 7),
                (3, 6),
                (3, 7),
                (6, 7),
            ],
        );
        assert_eq!(vertex_signature(&h, 0).unwrap().ks, vec![2, 0, 0]);
        assert!(matches!(
            vertex_signature(&h, 1),
            Err(Error::DegreeTooSmall { vertex: 1, degree: 2 })
        ));
    }

    #[test]
    fn path_component_is_pendant() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let c = classify_paths(&p4);
        assert_eq!(c.pendant_chains, vec![vec![1, 2]]);
    }
}
