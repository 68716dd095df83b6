//! 2-distance colorings: verification, greedy and exact search, and the
//! constructive reduce-and-extend colorer.

mod exact;
mod lists;
mod reduce;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use exact::{clique_lower_bound, exact_chi2, DEFAULT_BUDGET};
pub use lists::{color_even_cycle_lists, ListInstance};
pub use reduce::{
    constructive_color, constructive_color_with, extend, lift, reduce_once, ConstructiveRun, ExtensionStep,
    ExtensionTrace, Reduction,
};

/// A possibly partial assignment of colors `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub k: usize,
    pub colors: Vec<Option<usize>>,
}

impl Coloring {
    pub fn uncolored(n: usize, k: usize) -> Self {
        Coloring {
            k,
            colors: vec![None; n],
        }
    }

    pub fn from_total(k: usize, colors: Vec<usize>) -> Self {
        Coloring {
            k,
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Number of distinct colors in use.
    pub fn used(&self) -> usize {
        let mut seen = vec![false; self.k];
        for c in self.colors.iter().flatten() {
            if *c < self.k {
                seen[*c] = true;
            }
        }
        seen.into_iter().filter(|&s| s).count()
    }

    /// Colors of a total coloring, or the first uncolored vertex as an error.
    pub fn total(&self) -> Result<Vec<usize>> {
        self.colors
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(Error::Uncolored(v)))
            .collect()
    }

    /// `v c` per colored vertex.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, c) in self.colors.iter().enumerate() {
            if let Some(c) = c {
                let _ = writeln!(out, "{v} {c}");
            }
        }
        out
    }

    /// Parses `v c` lines (`#` comments allowed) for a graph on `n` vertices.
    /// `k` defaults to one more than the largest color.
    pub fn parse(text: &str, n: usize, k: Option<usize>) -> Result<Self> {
        let mut colors = vec![None; n];
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let mut next = || -> Result<usize> {
                let tok = parts.next().ok_or_else(|| Error::MalformedToken {
                    line: i + 1,
                    token: line.to_string(),
                })?;
                tok.parse().map_err(|_| Error::MalformedToken {
                    line: i + 1,
                    token: tok.to_string(),
                })
            };
            let (v, c) = (next()?, next()?);
            if parts.next().is_some() {
                return Err(Error::MalformedToken {
                    line: i + 1,
                    token: line.to_string(),
                });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            colors[v] = Some(c);
        }
        let k = k.unwrap_or_else(|| colors.iter().flatten().max().map_or(0, |&c| c + 1));
        Ok(Coloring { k, colors })
    }
}

/// Two vertices at distance at most 2 sharing a color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub color: usize,
}

fn check_shape(g: &Graph, c: &Coloring) -> Result<()> {
    if c.n() != g.n() {
        return Err(Error::ColoringSizeMismatch { got: c.n(), n: g.n() });
    }
    for (v, col) in c.colors.iter().enumerate() {
        if let Some(col) = *col {
            if col >= c.k {
                return Err(Error::ColorOutOfRange {
                    vertex: v,
                    color: col,
                    k: c.k,
                });
            }
        }
    }
    Ok(())
}

/// Conflicting pairs among colored vertices; uncolored vertices are ignored.
pub fn partial_violations(g: &Graph, c: &Coloring) -> Result<Vec<Violation>> {
    check_shape(g, c)?;
    let mut out = Vec::new();
    for u in 0..g.n() {
        let Some(cu) = c.colors[u] else { continue };
        for v in g.two_distance_neighbors(u) {
            if v > u && c.colors[v] == Some(cu) {
                out.push(Violation { u, v, color: cu });
            }
        }
    }
    Ok(out)
}

/// All violating pairs of a total coloring; empty iff it is a valid
/// 2-distance coloring.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<Vec<Violation>> {
    check_shape(g, c)?;
    c.total()?;
    partial_violations(g, c)
}

/// Colors in `0..k` not used within distance 2 of `v`, ascending.
pub(crate) fn available(g: &Graph, c: &Coloring, v: usize) -> Vec<usize> {
    let mut blocked = vec![false; c.k];
    for w in g.two_distance_neighbors(v) {
        if let Some(col) = c.colors[w] {
            if col < c.k {
                blocked[col] = true;
            }
        }
    }
    (0..c.k).filter(|&col| !blocked[col]).collect()
}

/// First-fit in `order`; `None` when some vertex sees all `k` colors.
pub fn greedy_color(g: &Graph, k: usize, order: &[usize]) -> Result<Option<Coloring>> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(Error::InvalidOrder);
    }
    let mut c = Coloring::uncolored(n, k);
    for &v in order {
        match available(g, &c, v).first() {
            Some(&col) => c.colors[v] = Some(col),
            None => return Ok(None),
        }
    }
    Ok(Some(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    fn c5() -> Graph {
        g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    }

    #[test]
    fn verify_examples() {
        let ok = Coloring::from_total(5, vec![0, 1, 2, 3, 4]);
        assert!(verify_coloring(&c5(), &ok).unwrap().is_empty());
        let bad = Coloring::from_total(5, vec![0, 1, 0, 1, 2]);
        let v = verify_coloring(&c5(), &bad).unwrap();
        assert!(v.contains(&Violation { u: 0, v: 2, color: 0 }));
        let k2 = g(2, &[(0, 1)]);
        let both = Coloring::from_total(1, vec![0, 0]);
        assert_eq!(verify_coloring(&k2, &both).unwrap().len(), 1);
        let out_of_range = Coloring::from_total(2, vec![0, 5]);
        assert!(matches!(
            verify_coloring(&k2, &out_of_range),
            Err(Error::ColorOutOfRange {
                vertex: 1,
                color: 5,
                k: 2
            })
        ));
        assert!(matches!(
            verify_coloring(&k2, &Coloring::uncolored(2, 2)),
            Err(Error::Uncolored(0))
        ));
    }

    #[test]
    fn greedy_examples() {
        let claw = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let c = greedy_color(&claw, 4, &[0, 1, 2, 3]).unwrap().unwrap();
        assert_eq!(c.used(), 4);
        assert!(greedy_color(&c5(), 4, &[0, 1, 2, 3, 4]).unwrap().is_none());
        assert!(matches!(
            greedy_color(&c5(), 4, &[0, 0, 1, 2, 3]),
            Err(Error::InvalidOrder)
        ));
    }

    #[test]
    fn text_round_trip() {
        let c = Coloring::from_total(3, vec![2, 0, 1]);
        let back = Coloring::parse(&c.to_text(), 3, Some(3)).unwrap();
        assert_eq!(back, c);
        assert!(Coloring::parse("0 x", 1, None).is_err());
        assert!(matches!(
            Coloring::parse("7 0", 3, None),
            Err(Error::VertexOutOfRange { vertex: 7, n: 3 })
        ));
        assert_eq!(Coloring::parse("# c\n0 4\n", 2, None).unwrap().k, 5);
    }
}
