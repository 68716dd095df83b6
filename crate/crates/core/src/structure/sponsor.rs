//! Sponsor forests over 2-paths and (1,1,1)-paths.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::configs::{sponsorship_blocker, Local};
use crate::structure::paths::classify_paths;

/// Whether the forests were built on a graph free of the blocking configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SponsorMode {
    Strict,
    /// BFS forests over whatever 2-paths and (1,1,1)-paths exist; non-tree
    /// paths are still assigned a sponsor so every rule has a well defined payer.
    Relaxed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoPathSponsor {
    pub endpoints: (usize, usize),
    pub internals: [usize; 2],
    pub tree: usize,
    pub sponsor: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SponsorAssignment {
    pub d: usize,
    pub mode: SponsorMode,
    /// Root vertex per 2-path tree.
    pub two_path_roots: Vec<usize>,
    pub two_path_sponsor: Vec<TwoPathSponsor>,
    /// Root vertex per (1,1,1)-path tree.
    pub triple_roots: Vec<usize>,
    /// The two sponsoring far ends of every (1,1,1)-vertex.
    pub triple_sponsors: BTreeMap<usize, [usize; 2]>,
    #[serde(skip)]
    by_internal: HashMap<usize, usize>,
}

impl SponsorAssignment {
    /// Sponsor of the 2-path through the 2-vertex `x`.
    pub fn two_path_sponsor_of(&self, x: usize) -> Option<usize> {
        self.by_internal.get(&x).map(|&i| self.two_path_sponsor[i].sponsor)
    }

    pub fn sponsors_of_triple(&self, center: usize) -> Option<[usize; 2]> {
        self.triple_sponsors.get(&center).copied()
    }
}

/// BFS forest over a multigraph on `nodes`; returns per-node depth, per-node
/// parent edge and the root of every tree, roots picked by `root_key` (smallest wins).
struct Forest {
    depth: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    tree: Vec<usize>,
    roots: Vec<usize>,
}

fn bfs_forest(
    n: usize,
    edges: &[(usize, usize)],
    active: &[bool],
    root_key: impl Fn(usize) -> (bool, usize),
) -> Forest {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        incident[a].push(i);
        if b != a {
            incident[b].push(i);
        }
    }
    // components, to choose each root before the search
    let mut comp = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for s in (0..n).filter(|&v| active[v]) {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = members.len();
        comp[s] = id;
        let mut list = vec![s];
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &e in &incident[x] {
                let (a, b) = edges[e];
                let y = if a == x { b } else { a };
                if comp[y] == usize::MAX {
                    comp[y] = id;
                    list.push(y);
                    stack.push(y);
                }
            }
        }
        members.push(list);
    }

    let mut depth = vec![usize::MAX; n];
    let mut parent_edge = vec![None; n];
    let mut tree = vec![usize::MAX; n];
    let mut roots = Vec::with_capacity(members.len());
    for (id, list) in members.iter().enumerate() {
        let root = *list.iter().min_by_key(|&&v| root_key(v)).unwrap();
        roots.push(root);
        depth[root] = 0;
        tree[root] = id;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let mut inc = incident[x].clone();
            inc.sort_unstable();
            for e in inc {
                let (a, b) = edges[e];
                let y = if a == x { b } else { a };
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent_edge[y] = Some(e);
                    tree[y] = id;
                    queue.push_back(y);
                }
            }
        }
    }
    Forest {
        depth,
        parent_edge,
        tree,
        roots,
    }
}

fn assign(g: &Graph, d: usize, mode: SponsorMode) -> SponsorAssignment {
    let n = g.n();
    let local = Local::new(g, d);
    let classification = classify_paths(g);

    // 2-path forest: root = smallest id among D-vertices, then any vertex
    let two_paths: Vec<_> = classification.paths.iter().filter(|p| p.k == 2).collect();
    let edges: Vec<(usize, usize)> = two_paths.iter().map(|p| p.endpoints).collect();
    let mut active = vec![false; n];
    for &(a, b) in &edges {
        active[a] = true;
        active[b] = true;
    }
    let forest = bfs_forest(n, &edges, &active, |v| (g.degree(v) != d, v));
    let mut two_path_sponsor = Vec::with_capacity(two_paths.len());
    let mut by_internal = HashMap::new();
    for (i, p) in two_paths.iter().enumerate() {
        let (a, b) = p.endpoints;
        let sponsor = match forest.depth[a].cmp(&forest.depth[b]) {
            std::cmp::Ordering::Greater => a,
            std::cmp::Ordering::Less => b,
            std::cmp::Ordering::Equal => a.max(b),
        };
        by_internal.insert(p.internals[0], i);
        by_internal.insert(p.internals[1], i);
        two_path_sponsor.push(TwoPathSponsor {
            endpoints: p.endpoints,
            internals: [p.internals[0], p.internals[1]],
            tree: forest.tree[a],
            sponsor,
        });
    }

    // (1,1,1) forest: nodes are vertices, edges are 1-paths leaving a (1,1,1)-vertex
    let centers: Vec<usize> = (0..n).filter(|&v| local.is_triple(v)).collect();
    let mut is_center = vec![false; n];
    centers.iter().for_each(|&c| is_center[c] = true);
    let mut leg_edges: Vec<(usize, usize)> = Vec::new();
    let mut leg_mid: Vec<usize> = Vec::new();
    let mut edge_of_mid: HashMap<usize, usize> = HashMap::new();
    for &c in &centers {
        for (x, v) in local.triple_legs(c) {
            if edge_of_mid.contains_key(&x) {
                continue;
            }
            edge_of_mid.insert(x, leg_edges.len());
            leg_edges.push((c, v));
            leg_mid.push(x);
        }
    }
    let mut active = vec![false; n];
    for &(a, b) in &leg_edges {
        active[a] = true;
        active[b] = true;
    }
    let forest3 = bfs_forest(n, &leg_edges, &active, |v| (is_center[v] || g.degree(v) != d, v));
    let mut triple_sponsors = BTreeMap::new();
    for &c in &centers {
        let legs = local.triple_legs(c);
        let skip = forest3.parent_edge[c]
            .and_then(|e| legs.iter().position(|&(x, _)| leg_mid[e] == x))
            .unwrap_or(0);
        let rest: Vec<usize> = legs
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &(_, v))| v)
            .collect();
        triple_sponsors.insert(c, [rest[0], rest[1]]);
    }

    SponsorAssignment {
        d,
        mode,
        two_path_roots: forest.roots,
        two_path_sponsor,
        triple_roots: forest3.roots,
        triple_sponsors,
        by_internal,
    }
}

/// Sponsor forests on a graph with no 2-path loop, weak 2-path end, 2-path
/// cycle, or blocking (1,1,1) configuration. Each tree is rooted at its
/// smallest D-vertex; a 2-path is sponsored by its endpoint farther from the
/// root, and a (1,1,1)-vertex by the two far ends below it.
pub fn build_sponsorship(g: &Graph, d: usize) -> Result<SponsorAssignment> {
    if let Some(cfg) = sponsorship_blocker(g, d) {
        return Err(Error::SponsorshipBlocked(cfg.kind));
    }
    Ok(assign(g, d, SponsorMode::Strict))
}

/// Same forests without the structural precondition. Ties in depth go to the
/// larger vertex id and a loop sponsors itself.
pub fn build_sponsorship_relaxed(g: &Graph, d: usize) -> SponsorAssignment {
    assign(g, d, SponsorMode::Relaxed)
}

/// Strict assignment when available, relaxed otherwise.
pub fn sponsorship_for_audit(g: &Graph, d: usize) -> SponsorAssignment {
    build_sponsorship(g, d).unwrap_or_else(|_| build_sponsorship_relaxed(g, d))
}
