//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::io::Read;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Immutable simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

/// The 2-distance neighborhood `N*(v)`: every vertex at distance 1 or 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceProfile {
    pub vertex: usize,
    pub two_distance_neighbors: Vec<usize>,
    pub d_star: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops and
    /// endpoints `>= n` are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, edge_count }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Sorted `N*(v)` without bounds checking.
    pub fn two_distance_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::with_capacity(self.degree(v) * 2);
        for &u in &self.adj[v] {
            out.push(u);
            out.extend(self.adj[u].iter().copied().filter(|&w| w != v));
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn two_distance_profile(&self, v: usize) -> Result<DistanceProfile> {
        self.check_vertex(v)?;
        let set = self.two_distance_neighbors(v);
        Ok(DistanceProfile {
            vertex: v,
            d_star: set.len(),
            two_distance_neighbors: set,
        })
    }

    /// The square graph: `u ~ v` iff `0 < dist(u, v) <= 2`.
    pub fn square(&self) -> Graph {
        let adj = (0..self.n()).map(|v| self.two_distance_neighbors(v)).collect();
        Self::from_raw_adjacency(adj)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // any cycle closed from here on is at least 2*dist[u] long
                    if 2 * dist[u] >= b {
                        break 'bfs;
                    }
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// `2|E| / |V|` as an exact rational.
    pub fn average_degree(&self) -> Result<Rational> {
        if self.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Rational::new(2 * self.edge_count as i64, self.n() as i64))
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `keep`; vertex `i` of the result is `keep[i]` here.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Self::from_raw_adjacency(adj)
    }

    /// Removes `deleted` and returns the remainder with its old-id map.
    pub fn without(&self, deleted: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.n()];
        for &v in deleted {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        (self.induced_subgraph(&keep), keep)
    }

    /// Edge-list text with an `n <count>` header so isolated vertices survive.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.n());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Graphviz DOT export for small graphs.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Parses whitespace-separated `u v` lines. `#` starts a comment; an optional
/// `n <count>` line fixes the vertex count, otherwise `n = 1 + max id`.
pub fn parse_edge_list(text: &[u8]) -> Result<Graph> {
    let text = String::from_utf8_lossy(text);
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut max_id: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let number = |tok: &str| -> Result<usize> {
            tok.parse::<usize>().map_err(|_| Error::MalformedToken {
                line: line_no,
                token: tok.to_string(),
            })
        };
        if tokens[0] == "n" {
            if tokens.len() != 2 {
                return Err(Error::MalformedToken {
                    line: line_no,
                    token: line.to_string(),
                });
            }
            declared = Some((number(tokens[1])?, line_no));
            continue;
        }
        if tokens.len() != 2 {
            let token = tokens.get(2).unwrap_or(&tokens[0]).to_string();
            return Err(Error::MalformedToken { line: line_no, token });
        }
        let u = number(tokens[0])?;
        let v = number(tokens[1])?;
        if u == v {
            return Err(Error::SelfLoop {
                line: line_no,
                vertex: u,
            });
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v, line_no));
    }

    let n = match declared {
        Some((n, _)) => {
            if let Some(&(u, v, line)) = edges.iter().find(|&&(u, v, _)| u.max(v) >= n) {
                return Err(Error::UndeclaredVertex {
                    line,
                    vertex: u.max(v),
                    n,
                });
            }
            n
        }
        None => max_id.map_or(0, |m| m + 1),
    };
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

/// Reads an edge list from any reader.
pub fn read_edge_list<R: Read>(mut reader: R) -> Result<Graph> {
    let mut buf = Vec::new();
    reader.read_to_end(&mut buf)?;
    parse_edge_list(&buf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, e).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn parse_path() {
        let g = parse_edge_list(b"0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_collapses_duplicates() {
        let g = parse_edge_list(b"0 1\n0 1\n1 0\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_rejects_self_loop_with_line() {
        match parse_edge_list(b"0 0") {
            Err(Error::SelfLoop { line: 1, vertex: 0 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list(b"# c\n0 1\n\n2 2\n") {
            Err(Error::SelfLoop { line: 4, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_malformed_tokens() {
        assert!(matches!(
            parse_edge_list(b"0 1\n1 x\n"),
            Err(Error::MalformedToken { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list(b"0 1 2\n"),
            Err(Error::MalformedToken { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list(b"-1 2\n"),
            Err(Error::MalformedToken { line: 1, .. })
        ));
    }

    #[test]
    fn parse_header_and_comments() {
        let g = parse_edge_list(b"# five vertices\nn 5\n0 1 # edge\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(4), 0);
        assert!(matches!(
            parse_edge_list(b"n 2\n0 3\n"),
            Err(Error::UndeclaredVertex {
                line: 2,
                vertex: 3,
                n: 2
            })
        ));
        let round = parse_edge_list(g.to_edge_list().as_bytes()).unwrap();
        assert_eq!(round, g);
    }

    #[test]
    fn square_of_c5_is_k5() {
        let sq = cycle(5).square();
        assert_eq!(sq.edge_count(), 10);
    }

    #[test]
    fn square_of_petersen_is_k10() {
        assert_eq!(petersen().square().edge_count(), 45);
    }

    #[test]
    fn square_of_p4() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let edges: Vec<_> = g.square().edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn star_profiles() {
        let g = star(6);
        assert_eq!(g.two_distance_profile(0).unwrap().d_star, 6);
        let leaf = g.two_distance_profile(3).unwrap();
        assert_eq!(leaf.d_star, 6);
        assert!(!leaf.two_distance_neighbors.contains(&3));
        assert!(matches!(
            g.two_distance_profile(7),
            Err(Error::VertexOutOfRange { vertex: 7, n: 7 })
        ));
    }

    #[test]
    fn petersen_profile_matches_bfs() {
        let g = petersen();
        for v in 0..10 {
            // BFS oracle, depth 2
            let mut dist = [usize::MAX; 10];
            dist[v] = 0;
            let mut q = VecDeque::from([v]);
            while let Some(u) = q.pop_front() {
                for &w in g.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        q.push_back(w);
                    }
                }
            }
            let expected = dist.iter().filter(|&&d| d == 1 || d == 2).count();
            assert_eq!(expected, 9);
            assert_eq!(g.two_distance_profile(v).unwrap().d_star, expected);
        }
    }

    #[test]
    fn girth_values() {
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(star(4).girth(), None);
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap().girth(), Some(3));
        assert_eq!(Graph::empty(0).girth(), None);
    }

    #[test]
    fn average_degree_values() {
        assert_eq!(cycle(5).average_degree().unwrap(), Rational::integer(2));
        assert_eq!(star(5).average_degree().unwrap(), Rational::new(5, 3));
        assert_eq!(petersen().average_degree().unwrap(), Rational::integer(3));
        assert!(matches!(Graph::empty(0).average_degree(), Err(Error::EmptyGraph)));
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(cycle(5).connected_components().len(), 1);
        assert_eq!(Graph::empty(3).connected_components(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn without_relabels() {
        let (h, keep) = cycle(5).without(&[1]);
        assert_eq!(keep, vec![0, 2, 3, 4]);
        assert_eq!(h.edge_count(), 3);
        assert!(h.has_edge(0, 3)); // old 0-4
    }
}
