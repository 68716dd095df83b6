//! Detection of the reducible configurations.
//!
//! Every predicate is evaluated in the current graph, except that a
//! "D-vertex" always means a vertex of degree exactly `d`, the maximum degree
//! fixed at the top level of a reduction.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::discharging::Regime;
use crate::graph::Graph;
use crate::structure::paths::{classify_paths, walk, KPath, PathClassification, Walk};

/// Configuration kinds in priority order (earlier kinds are reduced first).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ConfigKind {
    /// A vertex of degree at most 1.
    LowDegree,
    /// Three consecutive 2-vertices (a 3⁺-path, or a bare cycle).
    LongPath,
    /// A 2-path whose endpoints coincide.
    TwoPathLoop,
    /// A 2-path with an endpoint of degree below D.
    TwoPathWeakEnd,
    /// A cycle made of 2-paths between D-vertices.
    TwoPathCycle,
    /// A (1,1,1)-vertex two of whose 1-paths share their far end.
    TripleCoincident,
    /// A (1,1,1)-vertex with a far end of degree below D.
    TripleWeakEnd,
    /// A cycle made of (1,1,1)-paths.
    TripleCycle,
    /// A (1,1,0)-vertex with a (3..D-3)-neighbor and a far end below D.
    Deg3TwoOnesWeakEnd,
    /// A D-vertex carrying a 2-path, a (1,1,1)-path and D-2 paths to 3⁻-vertices.
    WeirdDeltaVertex,
    /// A (1,0,0)-vertex with two (3..4)-neighbors whose far end is below D.
    #[serde(rename = "Deg3OneOneWeakEnd_B")]
    Deg3OneOneWeakEndB,
    /// A (1,1,1,1)-vertex with two far ends of degree at most D-2.
    #[serde(rename = "QuadOnesTwoWeakEnds_B")]
    QuadOnesTwoWeakEndsB,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 12] = [
        ConfigKind::LowDegree,
        ConfigKind::LongPath,
        ConfigKind::TwoPathLoop,
        ConfigKind::TwoPathWeakEnd,
        ConfigKind::TwoPathCycle,
        ConfigKind::TripleCoincident,
        ConfigKind::TripleWeakEnd,
        ConfigKind::TripleCycle,
        ConfigKind::Deg3TwoOnesWeakEnd,
        ConfigKind::WeirdDeltaVertex,
        ConfigKind::Deg3OneOneWeakEndB,
        ConfigKind::QuadOnesTwoWeakEndsB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConfigKind::LowDegree => "LowDegree",
            ConfigKind::LongPath => "LongPath",
            ConfigKind::TwoPathLoop => "TwoPathLoop",
            ConfigKind::TwoPathWeakEnd => "TwoPathWeakEnd",
            ConfigKind::TwoPathCycle => "TwoPathCycle",
            ConfigKind::TripleCoincident => "TripleCoincident",
            ConfigKind::TripleWeakEnd => "TripleWeakEnd",
            ConfigKind::TripleCycle => "TripleCycle",
            ConfigKind::Deg3TwoOnesWeakEnd => "Deg3TwoOnesWeakEnd",
            ConfigKind::WeirdDeltaVertex => "WeirdDeltaVertex",
            ConfigKind::Deg3OneOneWeakEndB => "Deg3OneOneWeakEnd_B",
            ConfigKind::QuadOnesTwoWeakEndsB => "QuadOnesTwoWeakEnds_B",
        }
    }

    /// Kinds whose absence makes the sponsor forests well defined.
    pub fn blocks_sponsorship(self) -> bool {
        matches!(
            self,
            ConfigKind::TwoPathLoop
                | ConfigKind::TwoPathWeakEnd
                | ConfigKind::TwoPathCycle
                | ConfigKind::TripleCoincident
                | ConfigKind::TripleWeakEnd
                | ConfigKind::TripleCycle
        )
    }

    pub fn in_regime(self, regime: Regime) -> bool {
        match self {
            ConfigKind::Deg3OneOneWeakEndB | ConfigKind::QuadOnesTwoWeakEndsB => regime == Regime::B,
            _ => true,
        }
    }
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One occurrence of a reducible configuration.
///
/// Witness layouts, by kind:
/// - `LowDegree`: `[v]`
/// - `LongPath`: `[v0, v1, v2, v3, v4]` along the chain (positions may repeat on short bare cycles)
/// - `TwoPathLoop`: `[v0, v1, v2, v0]`
/// - `TwoPathWeakEnd`: `[v0, v1, v2, v3]` with `d(v3) < D`
/// - `TwoPathCycle`: `[v0, v1, v2, v3, …, v(3k-1)]`, `v(3i)` the D-vertices
/// - `TripleCoincident` / `TripleWeakEnd`: `[u, u1, u2, u3, v1, v2, v3]` with `v1 = v2`, resp. `d(v1) < D`
/// - `TripleCycle`: `[v0, …, v(4k-1)]`, `v(4i)` D-vertices and `v(4i+2)` the (1,1,1)-vertices
/// - `Deg3TwoOnesWeakEnd`: `[u, u1, u2, x, v1, v2]`, `x` the (3..D-3)-neighbor, `d(v1) < D`
/// - `WeirdDeltaVertex`: `[u, u1, …, u(D-2), u(D-1), uD, u'D, v(D-1)]`, `u(D-1)` leading to the
///   (1,1,1)-vertex `v(D-1)` and `uD u'D` the 2-path
/// - `Deg3OneOneWeakEnd_B`: `[u, v, w, u1, u2]` with `uvw` the 1-path
/// - `QuadOnesTwoWeakEnds_B`: `[u, u1, u2, u3, u4, v1, v2, v3, v4]` with `v1, v2` weak
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    pub kind: ConfigKind,
    pub witness: Vec<usize>,
    pub deletable: Vec<usize>,
}

impl Configuration {
    fn new(kind: ConfigKind, witness: Vec<usize>, mut deletable: Vec<usize>) -> Self {
        deletable.sort_unstable();
        deletable.dedup();
        Configuration {
            kind,
            witness,
            deletable,
        }
    }
}

/// Per-graph cache of the chains leaving every 3⁺-vertex.
pub(crate) struct Local<'g> {
    pub g: &'g Graph,
    pub d: usize,
    legs: Vec<Vec<Walk>>,
}

impl<'g> Local<'g> {
    pub fn new(g: &'g Graph, d: usize) -> Self {
        let legs = (0..g.n())
            .map(|v| {
                if g.degree(v) >= 3 {
                    g.neighbors(v).iter().map(|&x| walk(g, v, x)).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        Local { g, d, legs }
    }

    pub fn deg(&self, v: usize) -> usize {
        self.g.degree(v)
    }

    /// Walks aligned with `g.neighbors(v)`; empty for vertices of degree < 3.
    pub fn legs(&self, v: usize) -> &[Walk] {
        &self.legs[v]
    }

    /// A 1-path leg: one 2-vertex, then a 3⁺-vertex.
    pub fn is_one_path(&self, w: &Walk) -> bool {
        w.internals.len() == 1 && self.deg(w.end) >= 3
    }

    /// A 0-path leg: the neighbor itself is a 3⁺-vertex.
    pub fn is_zero_path(&self, w: &Walk) -> bool {
        w.internals.is_empty() && self.deg(w.end) >= 3
    }

    pub fn ones(&self, v: usize) -> usize {
        self.legs(v).iter().filter(|w| self.is_one_path(w)).count()
    }

    pub fn zeros(&self, v: usize) -> usize {
        self.legs(v).iter().filter(|w| self.is_zero_path(w)).count()
    }

    pub fn is_triple(&self, v: usize) -> bool {
        self.deg(v) == 3 && self.ones(v) == 3
    }

    pub fn is_one_one_zero(&self, v: usize) -> bool {
        self.deg(v) == 3 && self.ones(v) == 2 && self.zeros(v) == 1
    }

    pub fn is_one_zero_zero(&self, v: usize) -> bool {
        self.deg(v) == 3 && self.ones(v) == 1 && self.zeros(v) == 2
    }

    /// Far ends of the three 1-paths of a (1,1,1)-vertex, in neighbor order.
    pub fn triple_legs(&self, v: usize) -> Vec<(usize, usize)> {
        self.legs(v).iter().map(|w| (w.internals[0], w.end)).collect()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// A cycle as nodes `c[0..k]` and edge ids where `edges[j]` joins `c[j]` and `c[j+1 mod k]`.
struct NodeCycle {
    nodes: Vec<usize>,
    edges: Vec<usize>,
}

/// Fundamental cycles of a multigraph with respect to the spanning forest
/// grown greedily in edge order.
fn fundamental_cycles(node_count: usize, edges: &[(usize, usize)]) -> Vec<NodeCycle> {
    let mut uf = UnionFind::new(node_count);
    let mut forest: Vec<Vec<(usize, usize)>> = vec![Vec::new(); node_count];
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        if uf.find(a) != uf.find(b) {
            uf.union(a, b);
            forest[a].push((b, i));
            forest[b].push((a, i));
            continue;
        }
        // tree route b -> a
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; node_count];
        let mut seen = vec![false; node_count];
        seen[b] = true;
        let mut queue = VecDeque::from([b]);
        while let Some(x) = queue.pop_front() {
            if x == a {
                break;
            }
            for &(y, e) in &forest[x] {
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        // walk back from a to b, giving the route a -> ... -> b reversed
        let mut nodes = vec![a];
        let mut route_edges = Vec::new();
        let mut cur = a;
        while cur != b {
            let (p, e) = prev[cur].expect("tree route exists inside a component");
            route_edges.push(e);
            nodes.push(p);
            cur = p;
        }
        // nodes: a, ..., b via tree; close with edge i from b back to a
        route_edges.push(i);
        out.push(NodeCycle {
            nodes,
            edges: route_edges,
        });
    }
    out
}

struct Detector<'a, 'g> {
    local: &'a Local<'g>,
    paths: &'a PathClassification,
}

impl Detector<'_, '_> {
    fn g(&self) -> &Graph {
        self.local.g
    }

    fn d(&self) -> usize {
        self.local.d
    }

    fn deg(&self, v: usize) -> usize {
        self.local.deg(v)
    }

    fn low_degree(&self) -> Vec<Configuration> {
        (0..self.g().n())
            .filter(|&v| self.deg(v) <= 1)
            .map(|v| Configuration::new(ConfigKind::LowDegree, vec![v], vec![v]))
            .collect()
    }

    fn long_path(&self) -> Vec<Configuration> {
        let mut out = Vec::new();
        for p in self.paths.paths.iter().filter(|p| p.k >= 3) {
            let i = &p.internals;
            let v4 = if p.k >= 4 { i[3] } else { p.endpoints.1 };
            out.push(Configuration::new(
                ConfigKind::LongPath,
                vec![p.endpoints.0, i[0], i[1], i[2], v4],
                vec![i[0], i[1], i[2]],
            ));
        }
        for cyc in &self.paths.bare_cycles {
            let len = cyc.len();
            let at = |j: usize| cyc[j % len];
            out.push(Configuration::new(
                ConfigKind::LongPath,
                (0..5).map(at).collect(),
                (1..=3).map(at).collect(),
            ));
        }
        out
    }

    fn two_paths(&self) -> impl Iterator<Item = &KPath> {
        self.paths.paths.iter().filter(|p| p.k == 2)
    }

    fn two_path_loop(&self) -> Vec<Configuration> {
        self.two_paths()
            .filter(|p| p.is_loop)
            .map(|p| {
                let (u, i) = (p.endpoints.0, &p.internals);
                Configuration::new(ConfigKind::TwoPathLoop, vec![u, i[0], i[1], u], i.clone())
            })
            .collect()
    }

    fn two_path_weak_end(&self) -> Vec<Configuration> {
        let d = self.d();
        self.two_paths()
            .filter(|p| !p.is_loop)
            .filter_map(|p| {
                let (a, b) = p.endpoints;
                let i = &p.internals;
                let witness = if self.deg(b) < d {
                    vec![a, i[0], i[1], b]
                } else if self.deg(a) < d {
                    vec![b, i[1], i[0], a]
                } else {
                    return None;
                };
                Some(Configuration::new(ConfigKind::TwoPathWeakEnd, witness, i.clone()))
            })
            .collect()
    }

    fn two_path_cycle(&self) -> Vec<Configuration> {
        let d = self.d();
        let eligible: Vec<&KPath> = self
            .two_paths()
            .filter(|p| !p.is_loop && self.deg(p.endpoints.0) == d && self.deg(p.endpoints.1) == d)
            .collect();
        let edges: Vec<(usize, usize)> = eligible.iter().map(|p| p.endpoints).collect();
        fundamental_cycles(self.g().n(), &edges)
            .into_iter()
            .map(|cyc| {
                let mut witness = Vec::new();
                let mut deletable = Vec::new();
                for (j, &node) in cyc.nodes.iter().enumerate() {
                    let path = eligible[cyc.edges[j]];
                    let inner = path.internals_from(node);
                    witness.push(node);
                    witness.extend(inner.iter().copied());
                    deletable.extend(inner);
                }
                Configuration::new(ConfigKind::TwoPathCycle, witness, deletable)
            })
            .collect()
    }

    fn triples(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.g().n()).filter(|&v| self.local.is_triple(v))
    }

    fn triple_coincident(&self) -> Vec<Configuration> {
        let mut out = Vec::new();
        for u in self.triples() {
            let mut legs = self.local.triple_legs(u);
            let pair = [(0, 1), (0, 2), (1, 2)]
                .into_iter()
                .find(|&(i, j)| legs[i].1 == legs[j].1);
            let Some((i, j)) = pair else { continue };
            // bring the coincident pair to the front
            let third = 3 - i - j;
            legs = vec![legs[i], legs[j], legs[third]];
            out.push(triple_config(ConfigKind::TripleCoincident, u, &legs));
        }
        out
    }

    fn triple_weak_end(&self) -> Vec<Configuration> {
        let d = self.d();
        let mut out = Vec::new();
        for u in self.triples() {
            let legs = self.local.triple_legs(u);
            if legs[0].1 == legs[1].1 || legs[0].1 == legs[2].1 || legs[1].1 == legs[2].1 {
                continue;
            }
            let Some(weak) = legs.iter().position(|&(_, v)| self.deg(v) < d) else {
                continue;
            };
            let mut ordered = vec![legs[weak]];
            ordered.extend(legs.iter().enumerate().filter(|&(i, _)| i != weak).map(|(_, &l)| l));
            out.push(triple_config(ConfigKind::TripleWeakEnd, u, &ordered));
        }
        out
    }

    fn triple_cycle(&self) -> Vec<Configuration> {
        let d = self.d();
        // aux graph: D-vertices and (1,1,1)-vertices with three distinct D far ends
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut leg_vertex: Vec<usize> = Vec::new();
        for c in self.triples() {
            let legs = self.local.triple_legs(c);
            let distinct = legs[0].1 != legs[1].1 && legs[0].1 != legs[2].1 && legs[1].1 != legs[2].1;
            if !distinct || legs.iter().any(|&(_, v)| self.deg(v) != d) {
                continue;
            }
            for (x, v) in legs {
                edges.push((c, v));
                leg_vertex.push(x);
            }
        }
        fundamental_cycles(self.g().n(), &edges)
            .into_iter()
            .map(|cyc| {
                let mut witness = Vec::new();
                for (j, &node) in cyc.nodes.iter().enumerate() {
                    witness.push(node);
                    witness.push(leg_vertex[cyc.edges[j]]);
                }
                if self.deg(witness[0]) != d || self.local.is_triple(witness[0]) {
                    witness.rotate_left(2);
                }
                let deletable = witness
                    .iter()
                    .enumerate()
                    .filter(|(pos, _)| pos % 4 != 0)
                    .map(|(_, &v)| v)
                    .collect();
                Configuration::new(ConfigKind::TripleCycle, witness, deletable)
            })
            .collect()
    }

    fn deg3_two_ones_weak_end(&self) -> Vec<Configuration> {
        let d = self.d();
        let mut out = Vec::new();
        for u in (0..self.g().n()).filter(|&u| self.local.is_one_one_zero(u)) {
            let legs = self.local.legs(u);
            let zero = legs.iter().find(|w| self.local.is_zero_path(w)).unwrap();
            let x = zero.end;
            if self.deg(x) < 3 || self.deg(x) + 3 > d {
                continue;
            }
            let mut ones: Vec<(usize, usize)> = legs
                .iter()
                .filter(|w| self.local.is_one_path(w))
                .map(|w| (w.internals[0], w.end))
                .collect();
            let Some(weak) = ones.iter().position(|&(_, v)| self.deg(v) < d) else {
                continue;
            };
            if weak == 1 {
                ones.swap(0, 1);
            }
            let [(u1, v1), (u2, v2)] = [ones[0], ones[1]];
            out.push(Configuration::new(
                ConfigKind::Deg3TwoOnesWeakEnd,
                vec![u, u1, u2, x, v1, v2],
                vec![u, u1, u2],
            ));
        }
        out
    }

    fn weird_delta_vertex(&self) -> Vec<Configuration> {
        let d = self.d();
        let g = self.g();
        let mut out = Vec::new();
        for u in (0..g.n()).filter(|&u| self.deg(u) == d && d >= 3) {
            let nbrs = g.neighbors(u);
            if nbrs.iter().any(|&x| self.deg(x) != 2) {
                continue;
            }
            let far = |x: usize| {
                let nb = g.neighbors(x);
                if nb[0] == u {
                    nb[1]
                } else {
                    nb[0]
                }
            };
            if nbrs.iter().any(|&x| self.deg(far(x)) > 3) {
                continue;
            }
            // u_D: first neighbor starting a genuine 2-path to another D-vertex
            let two_path = nbrs.iter().copied().find(|&x| {
                let w = walk(g, u, x);
                w.internals.len() == 2 && w.end != u && self.deg(w.end) == d
            });
            let Some(u_d) = two_path else { continue };
            let triple = nbrs.iter().copied().find(|&x| x != u_d && self.local.is_triple(far(x)));
            let Some(u_dm1) = triple else { continue };
            let mut witness = vec![u];
            witness.extend(nbrs.iter().copied().filter(|&x| x != u_d && x != u_dm1));
            witness.extend([u_dm1, u_d, far(u_d), far(u_dm1)]);
            let mut deletable = vec![u];
            deletable.extend(nbrs.iter().copied());
            deletable.push(far(u_d));
            out.push(Configuration::new(ConfigKind::WeirdDeltaVertex, witness, deletable));
        }
        out
    }

    fn deg3_one_one_weak_end_b(&self) -> Vec<Configuration> {
        let d = self.d();
        let mut out = Vec::new();
        for u in (0..self.g().n()).filter(|&u| self.local.is_one_zero_zero(u)) {
            let legs = self.local.legs(u);
            let one = legs.iter().find(|w| self.local.is_one_path(w)).unwrap();
            let (v, w) = (one.internals[0], one.end);
            let zeros: Vec<usize> = legs
                .iter()
                .filter(|l| self.local.is_zero_path(l))
                .map(|l| l.end)
                .collect();
            if zeros.iter().all(|&x| (3..=4).contains(&self.deg(x))) && self.deg(w) < d {
                out.push(Configuration::new(
                    ConfigKind::Deg3OneOneWeakEndB,
                    vec![u, v, w, zeros[0], zeros[1]],
                    vec![v],
                ));
            }
        }
        out
    }

    fn quad_ones_two_weak_ends_b(&self) -> Vec<Configuration> {
        let d = self.d();
        let mut out = Vec::new();
        for u in (0..self.g().n()).filter(|&u| self.deg(u) == 4 && self.local.ones(u) == 4) {
            let legs: Vec<(usize, usize)> = self.local.legs(u).iter().map(|w| (w.internals[0], w.end)).collect();
            let weak = |v: usize| self.deg(v) + 2 <= d;
            if legs.iter().filter(|&&(_, v)| weak(v)).count() < 2 {
                continue;
            }
            let mut ordered: Vec<(usize, usize)> = legs.iter().copied().filter(|&(_, v)| weak(v)).collect();
            ordered.extend(legs.iter().copied().filter(|&(_, v)| !weak(v)));
            let mut witness = vec![u];
            witness.extend(ordered.iter().map(|&(x, _)| x));
            witness.extend(ordered.iter().map(|&(_, v)| v));
            let mut deletable = vec![u];
            deletable.extend(ordered.iter().map(|&(x, _)| x));
            out.push(Configuration::new(ConfigKind::QuadOnesTwoWeakEndsB, witness, deletable));
        }
        out
    }

    fn detect(&self, kind: ConfigKind) -> Vec<Configuration> {
        match kind {
            ConfigKind::LowDegree => self.low_degree(),
            ConfigKind::LongPath => self.long_path(),
            ConfigKind::TwoPathLoop => self.two_path_loop(),
            ConfigKind::TwoPathWeakEnd => self.two_path_weak_end(),
            ConfigKind::TwoPathCycle => self.two_path_cycle(),
            ConfigKind::TripleCoincident => self.triple_coincident(),
            ConfigKind::TripleWeakEnd => self.triple_weak_end(),
            ConfigKind::TripleCycle => self.triple_cycle(),
            ConfigKind::Deg3TwoOnesWeakEnd => self.deg3_two_ones_weak_end(),
            ConfigKind::WeirdDeltaVertex => self.weird_delta_vertex(),
            ConfigKind::Deg3OneOneWeakEndB => self.deg3_one_one_weak_end_b(),
            ConfigKind::QuadOnesTwoWeakEndsB => self.quad_ones_two_weak_ends_b(),
        }
    }
}

fn triple_config(kind: ConfigKind, u: usize, legs: &[(usize, usize)]) -> Configuration {
    let mut witness = vec![u];
    witness.extend(legs.iter().map(|&(x, _)| x));
    witness.extend(legs.iter().map(|&(_, v)| v));
    let mut deletable = vec![u];
    deletable.extend(legs.iter().map(|&(x, _)| x));
    Configuration::new(kind, witness, deletable)
}

fn scan(g: &Graph, regime: Regime, d: usize, kinds: &[ConfigKind], first_only: bool) -> Vec<Configuration> {
    let local = Local::new(g, d);
    let paths = classify_paths(g);
    let detector = Detector {
        local: &local,
        paths: &paths,
    };
    let mut out = Vec::new();
    for &kind in kinds.iter().filter(|k| k.in_regime(regime)) {
        let found = detector.detect(kind);
        if first_only && !found.is_empty() {
            return found.into_iter().take(1).collect();
        }
        out.extend(found);
    }
    out
}

/// Every occurrence of every configuration of `regime`, in priority order.
///
/// `d` is the fixed maximum degree and should be at least `Δ(g)`.
pub fn find_configurations(g: &Graph, regime: Regime, d: usize) -> Vec<Configuration> {
    scan(g, regime, d, &ConfigKind::ALL, false)
}

/// The highest-priority occurrence, without scanning lower-priority kinds.
pub fn first_configuration(g: &Graph, regime: Regime, d: usize) -> Option<Configuration> {
    scan(g, regime, d, &ConfigKind::ALL, true).into_iter().next()
}

/// First configuration among the kinds that break the sponsor forests.
pub(crate) fn sponsorship_blocker(g: &Graph, d: usize) -> Option<Configuration> {
    let kinds: Vec<ConfigKind> = ConfigKind::ALL.into_iter().filter(|k| k.blocks_sponsorship()).collect();
    scan(g, Regime::A, d, &kinds, true).into_iter().next()
}
