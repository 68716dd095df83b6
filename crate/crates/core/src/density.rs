//! Maximum average degree.
//!
//! `mad(G) = 2 · max_H |E(H)| / |V(H)|`, and the maximum is attained on an
//! induced subgraph, so it is twice the density of a densest subgraph. The
//! exact routine decides "is there `S` with `|E(S)| > g·|S|`?" by a min cut
//! (source → edge node with capacity `q`, edge node → both endpoints
//! unbounded, vertex → sink with capacity `p`, for `g = p/q`), bisects `g`
//! until the bracket is narrower than the smallest gap between two distinct
//! densities with denominator at most `n`, and then snaps to the only such
//! fraction left in the bracket.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::Graph;
use crate::rational::Rational;

/// Largest graph accepted by [`mad_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 20;

/// A densest subgraph witness: `density = |E(G[vertices])| / |vertices|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensestSubgraph {
    pub density: Rational,
    pub vertices: Vec<usize>,
}

impl DensestSubgraph {
    pub fn mad(&self) -> Rational {
        self.density * 2
    }
}

struct CutOracle<'a> {
    g: &'a Graph,
}

impl CutOracle<'_> {
    /// Returns the source side of a minimum cut when some vertex set is
    /// strictly denser than `threshold`, otherwise `None`.
    fn denser_than(&self, threshold: Rational) -> Option<Vec<usize>> {
        let g = self.g;
        let m = g.edge_count();
        let n = g.n();
        let (p, q) = (threshold.numer(), threshold.denom());
        let source = 0;
        let sink = 1;
        let edge_node = |i: usize| 2 + i;
        let vertex_node = |v: usize| 2 + m + v;
        let unbounded = i64::MAX / 4;

        let mut net = FlowNetwork::new(2 + m + n);
        for (i, (u, v)) in g.edges().enumerate() {
            net.add_arc(source, edge_node(i), q);
            net.add_arc(edge_node(i), vertex_node(u), unbounded);
            net.add_arc(edge_node(i), vertex_node(v), unbounded);
        }
        for v in 0..n {
            net.add_arc(vertex_node(v), sink, p);
        }
        let flow = net.max_flow(source, sink);
        if flow >= q * m as i64 {
            return None;
        }
        let side = net.source_side(source);
        Some((0..n).filter(|&v| side[vertex_node(v)]).collect())
    }
}

fn induced_edges(g: &Graph, vertices: &[usize]) -> usize {
    let mut inside = vec![false; g.n()];
    for &v in vertices {
        inside[v] = true;
    }
    vertices
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| inside[w]).count())
        .sum::<usize>()
        / 2
}

/// A densest subgraph found by parametric min cut. Edgeless graphs (and the
/// empty graph) report density 0 with an empty witness.
pub fn densest_subgraph(g: &Graph) -> DensestSubgraph {
    let n = g.n();
    let m = g.edge_count();
    if n == 0 || m == 0 {
        return DensestSubgraph {
            density: Rational::ZERO,
            vertices: Vec::new(),
        };
    }
    let oracle = CutOracle { g };
    // max density lies in (lo, hi]: one edge already beats 0, and no set reaches m
    let mut lo = Rational::ZERO;
    let mut hi = Rational::integer(m as i64);
    let gap = Rational::new(1, (n * (n - 1)) as i64);
    while hi - lo >= gap {
        let mid = (lo + hi) / 2;
        if oracle.denser_than(mid).is_some() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // distinct fractions with denominators <= n differ by at least 1/(n(n-1))
    let density = (1..=n as i64)
        .map(|b| Rational::new((hi * b).floor(), b))
        .find(|&r| r > lo)
        .expect("bracket always contains the maximum density");

    let vertices = oracle
        .denser_than(lo)
        .expect("a set denser than the lower bracket end exists");
    debug_assert_eq!(
        Rational::new(induced_edges(g, &vertices) as i64, vertices.len() as i64),
        density
    );
    DensestSubgraph { density, vertices }
}

/// Exact maximum average degree.
pub fn mad_exact(g: &Graph) -> Rational {
    densest_subgraph(g).mad()
}

/// Maximum over all nonempty vertex subsets of `2|E(G[S])|/|S|`; `n <= 20`.
pub fn mad_bruteforce(g: &Graph) -> Result<Rational> {
    let n = g.n();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | (1 << w)))
        .collect();
    let mut best = Rational::ZERO;
    for set in 1u32..(1u32 << n) {
        let mut twice_edges = 0u32;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice_edges += (masks[v] & set).count_ones();
        }
        let ad = Rational::new(twice_edges as i64, set.count_ones() as i64);
        if ad > best {
            best = ad;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn cycle_mad_is_two() {
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(mad_exact(&c5), Rational::integer(2));
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(mad_exact(&Graph::empty(0)), Rational::ZERO);
        assert_eq!(mad_exact(&Graph::empty(4)), Rational::ZERO);
        assert_eq!(mad_bruteforce(&Graph::empty(0)).unwrap(), Rational::ZERO);
    }

    #[test]
    fn bruteforce_small_cases() {
        assert_eq!(mad_bruteforce(&g(2, &[(0, 1)])).unwrap(), Rational::ONE);
        let tri = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(mad_bruteforce(&tri).unwrap(), Rational::integer(2));
        let tri_pendant = g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert_eq!(mad_bruteforce(&tri_pendant).unwrap(), Rational::integer(2));
        assert!(matches!(
            mad_bruteforce(&Graph::empty(21)),
            Err(Error::TooLarge { n: 21, .. })
        ));
    }

    #[test]
    fn star_with_chord() {
        // K_{1,5} plus an edge between two leaves; the subset oracle gives 2
        // (the triangle, or the whole graph at 12/6).
        let h = g(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)]);
        let brute = mad_bruteforce(&h).unwrap();
        assert_eq!(brute, Rational::integer(2));
        assert_eq!(mad_exact(&h), brute);
    }

    #[test]
    fn witness_matches_density() {
        let k4_tail = g(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]);
        let d = densest_subgraph(&k4_tail);
        assert_eq!(d.density, Rational::new(3, 2));
        assert_eq!(d.vertices, vec![0, 1, 2, 3]);
        assert_eq!(d.mad(), Rational::integer(3));
    }
}
