//! Exact 2-distance chromatic number by DSATUR branch and bound on the square.

use crate::colorer::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default node budget for [`exact_chi2`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A clique of `h` grown greedily from every start vertex; the largest one found.
pub fn clique_lower_bound(h: &Graph) -> Vec<usize> {
    let mut by_degree: Vec<usize> = (0..h.n()).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let mut best: Vec<usize> = Vec::new();
    for &s in &by_degree {
        if h.degree(s) < best.len() {
            continue;
        }
        let mut cands: Vec<usize> = h.neighbors(s).to_vec();
        cands.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
        let mut clique = vec![s];
        for v in cands {
            if clique.iter().all(|&u| h.has_edge(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct Search<'a> {
    h: &'a Graph,
    colors: Vec<usize>,
    /// `counts[v][c]`: colored neighbors of `v` (in the square) with color `c`.
    counts: Vec<Vec<u32>>,
    sat: Vec<usize>,
    colored: usize,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

const NONE: usize = usize::MAX;

impl Search<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        self.colored += 1;
        for &w in self.h.neighbors(v) {
            if self.counts[w][c] == 0 {
                self.sat[w] += 1;
            }
            self.counts[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = NONE;
        self.colored -= 1;
        for &w in self.h.neighbors(v) {
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        (0..self.h.n())
            .filter(|&v| self.colors[v] == NONE)
            .max_by_key(|&v| (self.sat[v], self.h.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains")
    }

    fn run(&mut self, used: usize) {
        if self.exhausted || self.best == self.lower {
            return;
        }
        if self.colored == self.h.n() {
            if used < self.best {
                self.best = used;
                self.best_colors = self.colors.clone();
            }
            return;
        }
        let v = self.pick();
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if self.counts[v][c] != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return;
            }
            self.assign(v, c);
            self.run(used.max(c + 1));
            self.unassign(v);
            if self.exhausted || self.best == self.lower {
                return;
            }
        }
    }
}

/// First-fit in DSATUR order on the square graph `h`.
fn dsatur_greedy(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut s = Search {
        h,
        colors: vec![NONE; n],
        counts: vec![vec![0; n.max(1)]; n],
        sat: vec![0; n],
        colored: 0,
        best: 0,
        best_colors: Vec::new(),
        lower: 0,
        nodes: 0,
        budget: 0,
        exhausted: false,
    };
    for _ in 0..n {
        let v = s.pick();
        let c = (0..n).find(|&c| s.counts[v][c] == 0).unwrap();
        s.assign(v, c);
    }
    s.colors
}

/// `χ²(g)` with an optimal coloring. Runs out of budget with
/// [`Error::BudgetExceeded`] carrying the bounds reached so far.
pub fn exact_chi2(g: &Graph, budget: u64) -> Result<(usize, Coloring)> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Coloring::uncolored(0, 0)));
    }
    let h = g.square();
    let greedy = dsatur_greedy(&h);
    let ub = greedy.iter().max().unwrap() + 1;
    let clique = clique_lower_bound(&h);
    let lower = clique.len();

    let mut s = Search {
        h: &h,
        colors: vec![NONE; n],
        counts: vec![vec![0; ub]; n],
        sat: vec![0; n],
        colored: 0,
        best: ub,
        best_colors: greedy,
        lower,
        nodes: 0,
        budget,
        exhausted: false,
    };
    // the clique's colors can be fixed up to renaming
    for (c, &v) in clique.iter().enumerate() {
        s.assign(v, c);
    }
    s.run(lower);
    if s.exhausted {
        return Err(Error::BudgetExceeded {
            budget,
            lower,
            upper: s.best,
        });
    }
    Ok((s.best, Coloring::from_total(s.best, s.best_colors)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorer::verify_coloring;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn small_values() {
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let (k, c) = exact_chi2(&c5, DEFAULT_BUDGET).unwrap();
        assert_eq!(k, 5);
        assert!(verify_coloring(&c5, &c).unwrap().is_empty());
        let c6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(exact_chi2(&c6, DEFAULT_BUDGET).unwrap().0, 3);
        let c7 = g(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)]);
        assert_eq!(exact_chi2(&c7, DEFAULT_BUDGET).unwrap().0, 4);
        assert_eq!(exact_chi2(&Graph::empty(3), DEFAULT_BUDGET).unwrap().0, 1);
        assert_eq!(exact_chi2(&Graph::empty(0), DEFAULT_BUDGET).unwrap().0, 0);
    }

    #[test]
    fn budget_is_reported() {
        let c7 = g(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)]);
        match exact_chi2(&c7, 0) {
            Err(Error::BudgetExceeded { lower, upper, .. }) => assert!(lower <= 4 && upper >= 4),
            Ok((k, _)) => assert_eq!(k, 4),
            Err(e) => panic!("{e}"),
        }
    }
}
