//! Named graphs and seeded random sparse instances.
//!
//! The two extremal constructions share one shape: hubs `x, y, z` and three
//! independent groups of 2-vertices, of sizes `⌊Δ/2⌋−1` (joined to `x` and
//! `y`), `⌈Δ/2⌉` (joined to `x` and `z`) and `⌊Δ/2⌋` (joined to `y` and `z`).
//! The girth-3 variant adds the edge `xy`. The published drawing shows a
//! doubled `xy` curve, which cannot be a simple-graph edge set; the reading
//! used here is the simple one, and [`confirm_extremal`] checks the claimed
//! `χ²` with the exact solver.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::colorer::exact_chi2;
use crate::density::mad_exact;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Candidates tried by [`random_sparse`] before giving up.
pub const REJECTION_LIMIT: usize = 5_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    #[serde(rename = "moore_2_2")]
    Moore22,
    #[serde(rename = "moore_3_2")]
    Moore32,
    #[serde(rename = "moore_7_2")]
    Moore72,
    #[serde(rename = "wegner_girth3")]
    WegnerGirth3 { delta: usize },
    #[serde(rename = "wegner_girth4")]
    WegnerGirth4 { delta: usize },
    RandomSparse {
        n: usize,
        mad_cap: Rational,
        delta_target: usize,
        seed: u64,
    },
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    match *spec {
        GeneratorSpec::Moore22 => Ok(moore_2_2()),
        GeneratorSpec::Moore32 => Ok(moore_3_2()),
        GeneratorSpec::Moore72 => Ok(moore_7_2()),
        GeneratorSpec::WegnerGirth3 { delta } => wegner_girth3(delta),
        GeneratorSpec::WegnerGirth4 { delta } => wegner_girth4(delta),
        GeneratorSpec::RandomSparse {
            n,
            mad_cap,
            delta_target,
            seed,
        } => random_sparse(n, mad_cap, delta_target, seed),
    }
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("construction yields a simple graph")
}

/// The 5-cycle.
pub fn moore_2_2() -> Graph {
    build(5, (0..5).map(|i| (i, (i + 1) % 5)).collect())
}

/// The Petersen graph: outer 5-cycle, spokes, inner pentagram.
pub fn moore_3_2() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, e)
}

/// The Hoffman–Singleton graph: pentagons `P_h`, pentagrams `Q_i`, and
/// `P_h[j] ~ Q_i[h·i + j mod 5]`.
pub fn moore_7_2() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut e = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            e.push((p(h, j), p(h, j + 1)));
            e.push((q(h, j), q(h, j + 2)));
            for i in 0..5 {
                e.push((p(h, j), q(i, h * i + j)));
            }
        }
    }
    build(50, e)
}

fn wegner(delta: usize, with_xy: bool) -> Graph {
    let (x, y, z) = (0, 1, 2);
    let sizes = [(delta / 2 - 1, x, y), (delta.div_ceil(2), x, z), (delta / 2, y, z)];
    let mut e = Vec::new();
    let mut next = 3;
    for (size, a, b) in sizes {
        for _ in 0..size {
            e.push((a, next));
            e.push((b, next));
            next += 1;
        }
    }
    if with_xy {
        e.push((x, y));
    }
    build(next, e)
}

/// Girth 3, maximum degree `Δ` and `χ² = ⌊3Δ/2⌋+1`; needs `Δ ≥ 8`.
pub fn wegner_girth3(delta: usize) -> Result<Graph> {
    if delta < 8 {
        return Err(Error::InvalidGenerator(format!(
            "wegner_girth3 needs delta >= 8, got {delta}"
        )));
    }
    Ok(wegner(delta, true))
}

/// Girth 4, maximum degree `Δ` and `χ² = ⌊3Δ/2⌋−1`; needs `Δ ≥ 8`.
pub fn wegner_girth4(delta: usize) -> Result<Graph> {
    if delta < 8 {
        return Err(Error::InvalidGenerator(format!(
            "wegner_girth4 needs delta >= 8, got {delta}"
        )));
    }
    Ok(wegner(delta, false))
}

/// The `χ²` value each extremal construction is meant to reach.
pub fn extremal_target(girth3: bool, delta: usize) -> usize {
    if girth3 {
        3 * delta / 2 + 1
    } else {
        3 * delta / 2 - 1
    }
}

/// Builds the construction and checks its `χ²` against the target exactly.
pub fn confirm_extremal(girth3: bool, delta: usize, budget: u64) -> Result<(Graph, usize)> {
    let g = if girth3 {
        wegner_girth3(delta)?
    } else {
        wegner_girth4(delta)?
    };
    let (chi2, _) = exact_chi2(&g, budget)?;
    let target = extremal_target(girth3, delta);
    if chi2 != target {
        return Err(Error::UnconfirmedConstruction(format!(
            "girth-{} construction at delta {delta} has chi2 {chi2}, expected {target}",
            if girth3 { 3 } else { 4 }
        )));
    }
    Ok((g, chi2))
}

/// A graph on exactly `n` vertices with maximum degree exactly
/// `delta` and `mad < mad_cap`, drawn reproducibly from `seed`.
///
/// Candidates are hubs and 3-vertices whose half-edges are paired at random,
/// each pair becoming a path with 0 to 3 internal 2-vertices; the graph is
/// then padded to `n` vertices by subdividing edges and, for half of the
/// candidates, hanging leaves.
/// Candidates failing the degree or density condition are rejected.
pub fn random_sparse(n: usize, mad_cap: Rational, delta: usize, seed: u64) -> Result<Graph> {
    if delta < 3 {
        return Err(Error::InvalidGenerator(format!(
            "delta_target must be at least 3, got {delta}"
        )));
    }
    if n < delta + 1 {
        return Err(Error::InvalidGenerator(format!(
            "n = {n} cannot host a vertex of degree {delta}"
        )));
    }
    if mad_cap <= Rational::integer(2) {
        return Err(Error::InvalidGenerator(format!("mad_cap must exceed 2, got {mad_cap}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REJECTION_LIMIT {
        if let Some(g) = candidate(&mut rng, n, delta) {
            if g.max_degree() == delta && mad_exact(&g) < mad_cap {
                return Ok(g);
            }
        }
    }
    Err(Error::RejectionLimit {
        attempts: REJECTION_LIMIT,
    })
}

fn candidate(rng: &mut ChaCha8Rng, n: usize, delta: usize) -> Option<Graph> {
    // core candidates have no leaves: short paths between hubs and 3-vertices,
    // padded by subdivision only
    let core = rng.gen_bool(0.5);
    let hubs = rng.gen_range(1..=(n / if core { 5 } else { 8 }).max(1));
    let centers = rng.gen_range(0..=n / if core { 6 } else { 10 });
    let mut degree = vec![0usize; n];
    let mut stubs = Vec::new();
    for h in 0..hubs {
        let d = if h == 0 { delta } else { rng.gen_range(3..=delta) };
        stubs.extend(std::iter::repeat_n(h, d));
    }
    for c in hubs..hubs + centers {
        stubs.extend([c; 3]);
    }
    stubs.shuffle(rng);
    let is_center = |v: usize| (hubs..hubs + centers).contains(&v);
    let mut next = hubs + centers;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut present = std::collections::HashSet::new();
    let add = |edges: &mut Vec<(usize, usize)>, degree: &mut Vec<usize>, a: usize, b: usize| {
        edges.push((a, b));
        degree[a] += 1;
        degree[b] += 1;
    };

    for pair in stubs.chunks(2) {
        let a = pair[0];
        let Some(&b) = pair.get(1) else {
            if next >= n {
                return None;
            }
            add(&mut edges, &mut degree, a, next);
            next += 1;
            continue;
        };
        let weights: &[usize] = if core {
            &[0, 1, 1, 1, 1, 2, 2, 2, 2, 2]
        } else {
            &[0, 1, 1, 1, 1, 2, 2, 2, 2, 3]
        };
        let mut s = *weights.choose(rng).unwrap();
        if (is_center(a) || is_center(b)) && rng.gen_bool(0.7) {
            s = 1;
        }
        if a == b {
            s = s.max(2);
        } else if s == 0 && !present.insert((a.min(b), a.max(b))) {
            s = 1;
        }
        if next + s > n {
            return None;
        }
        let mut prev = a;
        for _ in 0..s {
            add(&mut edges, &mut degree, prev, next);
            prev = next;
            next += 1;
        }
        add(&mut edges, &mut degree, prev, b);
    }

    while next < n {
        if !edges.is_empty() && (core || rng.gen_bool(0.6)) {
            let i = rng.gen_range(0..edges.len());
            let (a, b) = edges[i];
            edges[i] = (a, next);
            edges.push((next, b));
            degree[next] = 2;
        } else {
            let open: Vec<usize> = (0..next).filter(|&v| degree[v] < delta).collect();
            let &v = open.choose(rng)?;
            edges.push((v, next));
            degree[v] += 1;
            degree[next] = 1;
        }
        next += 1;
    }
    Graph::from_edges(n, edges).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moore_shapes() {
        let c5 = moore_2_2();
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        let p = moore_3_2();
        assert_eq!((p.n(), p.edge_count(), p.girth()), (10, 15, Some(5)));
        assert!((0..10).all(|v| p.degree(v) == 3));
        let hs = moore_7_2();
        assert_eq!((hs.n(), hs.edge_count(), hs.girth()), (50, 175, Some(5)));
        assert!((0..50).all(|v| hs.degree(v) == 7));
        let sq = hs.square();
        assert_eq!(sq.edge_count(), 50 * 49 / 2);
    }

    #[test]
    fn extremal_shapes() {
        let g3 = wegner_girth3(8).unwrap();
        assert_eq!(
            (g3.n(), g3.edge_count(), g3.max_degree(), g3.girth()),
            (14, 23, 8, Some(3))
        );
        let g4 = wegner_girth4(8).unwrap();
        assert_eq!(
            (g4.n(), g4.edge_count(), g4.max_degree(), g4.girth()),
            (14, 22, 8, Some(4))
        );
        assert!(wegner_girth3(7).is_err());
    }

    #[test]
    fn extremal_values_at_eight() {
        assert_eq!(confirm_extremal(true, 8, crate::colorer::DEFAULT_BUDGET).unwrap().1, 13);
        assert_eq!(
            confirm_extremal(false, 8, crate::colorer::DEFAULT_BUDGET).unwrap().1,
            11
        );
    }

    #[test]
    fn random_sparse_postconditions() {
        let cap = Rational::new(8, 3);
        let g = random_sparse(40, cap, 6, 1).unwrap();
        assert_eq!(g.n(), 40);
        assert_eq!(g.max_degree(), 6);
        assert!(mad_exact(&g) < cap);
        assert_eq!(g, random_sparse(40, cap, 6, 1).unwrap());
    }

    #[test]
    fn random_sparse_rejects_bad_parameters() {
        assert!(random_sparse(3, Rational::new(8, 3), 6, 0).is_err());
        assert!(random_sparse(30, Rational::integer(2), 6, 0).is_err());
    }

    #[test]
    fn spec_json() {
        let spec: GeneratorSpec =
            serde_json::from_str(r#"{"kind":"random_sparse","n":40,"mad_cap":"8/3","delta_target":6,"seed":1}"#)
                .unwrap();
        assert!(matches!(spec, GeneratorSpec::RandomSparse { n: 40, .. }));
        let m: GeneratorSpec = serde_json::from_str(r#"{"kind":"moore_3_2"}"#).unwrap();
        assert_eq!(generate(&m).unwrap().n(), 10);
        let w: GeneratorSpec = serde_json::from_str(r#"{"kind":"wegner_girth3","delta":8}"#).unwrap();
        assert_eq!(generate(&w).unwrap().n(), 14);
    }
}
