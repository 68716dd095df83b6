//! Reduce-and-extend: delete a configuration, color the rest, extend back.

use serde::Serialize;

use crate::colorer::lists::{color_even_cycle_lists, ListInstance};
use crate::colorer::{available, partial_violations, Coloring};
use crate::density::mad_exact;
use crate::discharging::Regime;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{first_configuration, ConfigKind, Configuration};

/// One reduction: the configuration found and what is left after deleting it.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub config: Configuration,
    pub graph: Graph,
    /// Vertex `i` of `graph` is vertex `keep[i]` of the reduced graph.
    pub keep: Vec<usize>,
}

/// The highest-priority configuration and the graph without its deletable set.
pub fn reduce_once(g: &Graph, regime: Regime, d: usize) -> Result<Reduction> {
    let config = first_configuration(g, regime, d).ok_or_else(|| irreducible(g, regime, d))?;
    let (graph, keep) = g.without(&config.deletable);
    Ok(Reduction { config, graph, keep })
}

fn irreducible(g: &Graph, regime: Regime, d: usize) -> Error {
    let mad = mad_exact(g);
    let mut failed = Vec::new();
    if mad >= regime.mad_bound() {
        failed.push(format!("mad {mad} is not below {}", regime.mad_bound()));
    }
    if d < regime.delta_min() {
        failed.push(format!("D = {d} is below {}", regime.delta_min()));
    }
    if g.max_degree() > d {
        failed.push(format!("max degree {} exceeds D = {d}", g.max_degree()));
    }
    let verdict = if failed.is_empty() {
        "all hypotheses hold".to_string()
    } else {
        failed.join("; ")
    };
    Error::Irreducible(format!(
        "no configuration in a subgraph with {} vertices and {} edges (mad {mad}, max degree {}, D = {d}, \
         regime {regime}); {verdict}",
        g.n(),
        g.edge_count(),
        g.max_degree()
    ))
}

/// Copies a coloring of the remainder back onto the `n` vertices it came from.
pub fn lift(child: &Coloring, keep: &[usize], n: usize) -> Coloring {
    let mut c = Coloring::uncolored(n, child.k);
    for (i, &v) in keep.iter().enumerate() {
        c.colors[v] = child.colors[i];
    }
    c
}

#[derive(Clone, Debug)]
enum Step {
    Uncolor(usize),
    /// Needs `bound` colors on the initial list and `step_bound` when its turn comes.
    Greedy {
        v: usize,
        bound: usize,
        step_bound: usize,
    },
    /// Like `Greedy`, avoiding the initial list of `avoid` cut down to two colors.
    AvoidList {
        v: usize,
        bound: usize,
        avoid: usize,
    },
    /// Even cycle colored from its lists cut down to two colors.
    Cycle {
        vertices: Vec<usize>,
        bound: usize,
    },
}

fn greedy(v: usize, bound: usize) -> Step {
    Step::Greedy {
        v,
        bound,
        step_bound: 1,
    }
}

fn plan(cfg: &Configuration, d: usize) -> Vec<Step> {
    let w = &cfg.witness;
    match cfg.kind {
        ConfigKind::LowDegree => vec![greedy(w[0], 2)],
        ConfigKind::LongPath => vec![greedy(w[1], 2), greedy(w[3], 2), greedy(w[2], d)],
        ConfigKind::TwoPathLoop => vec![greedy(w[1], 3), greedy(w[2], 3)],
        ConfigKind::TwoPathWeakEnd => vec![greedy(w[1], 1), greedy(w[2], 2)],
        ConfigKind::TwoPathCycle => vec![Step::Cycle {
            vertices: w
                .iter()
                .enumerate()
                .filter(|(i, _)| i % 3 != 0)
                .map(|(_, &v)| v)
                .collect(),
            bound: 2,
        }],
        ConfigKind::TripleCoincident => {
            vec![greedy(w[3], 2), greedy(w[1], 3), greedy(w[2], 3), greedy(w[0], d)]
        }
        ConfigKind::TripleWeakEnd => {
            vec![
                greedy(w[3], 2),
                greedy(w[2], 2),
                greedy(w[1], 3),
                greedy(w[0], d.saturating_sub(1)),
            ]
        }
        ConfigKind::TripleCycle => {
            let mut steps = vec![Step::Cycle {
                vertices: w.iter().skip(1).step_by(2).copied().collect(),
                bound: 2,
            }];
            steps.extend(w.iter().skip(2).step_by(4).map(|&c| Step::Greedy {
                v: c,
                bound: d.saturating_sub(2),
                step_bound: d.saturating_sub(4).max(1),
            }));
            steps
        }
        ConfigKind::Deg3TwoOnesWeakEnd => vec![greedy(w[2], 1), greedy(w[1], 2), greedy(w[0], 3)],
        ConfigKind::WeirdDeltaVertex => {
            // [u, u1..u(D-2), u(D-1), uD, u'D, v(D-1)]
            let len = w.len();
            let (u_dm1, u_d, u_d2, v_dm1) = (w[len - 4], w[len - 3], w[len - 2], w[len - 1]);
            let mut steps = vec![
                Step::Uncolor(v_dm1),
                Step::AvoidList {
                    v: w[0],
                    bound: 4,
                    avoid: u_d2,
                },
            ];
            steps.extend(w[1..len - 4].iter().map(|&x| greedy(x, d.saturating_sub(1))));
            steps.extend([
                greedy(u_dm1, d),
                greedy(u_d, d + 1),
                greedy(v_dm1, d.saturating_sub(2)),
                greedy(u_d2, 2),
            ]);
            steps
        }
        ConfigKind::Deg3OneOneWeakEndB => {
            vec![Step::Uncolor(w[0]), greedy(w[1], 1), greedy(w[0], d.saturating_sub(8))]
        }
        ConfigKind::QuadOnesTwoWeakEndsB => vec![
            greedy(w[3], 2),
            greedy(w[4], 2),
            greedy(w[1], 4),
            greedy(w[2], 4),
            greedy(w[0], d.saturating_sub(2)),
        ],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionStep {
    pub vertex: usize,
    pub bound: usize,
    /// Colors available once the deletable set (and any repaired vertex) is uncolored.
    pub initial: usize,
    /// Colors available when the vertex is actually colored.
    pub at_step: usize,
    pub color: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionTrace {
    pub kind: ConfigKind,
    pub uncolored: Vec<usize>,
    pub steps: Vec<ExtensionStep>,
}

/// Extends `partial`, a valid coloring of `g` minus `cfg.deletable`, to all
/// of `g` with `D + 2` colors, checking every list-size bound on the way.
pub fn extend(g: &Graph, cfg: &Configuration, d: usize, partial: &Coloring) -> Result<(Coloring, ExtensionTrace)> {
    let mut c = partial.clone();
    c.k = d + 2;
    for &v in &cfg.deletable {
        c.colors[v] = None;
    }
    let steps = plan(cfg, d);
    let mut trace = ExtensionTrace {
        kind: cfg.kind,
        uncolored: Vec::new(),
        steps: Vec::new(),
    };
    for step in &steps {
        if let Step::Uncolor(v) = *step {
            c.colors[v] = None;
            trace.uncolored.push(v);
        }
    }
    let initial = |c: &Coloring, v: usize| available(g, c, v);
    let snapshot = c.clone();
    let fail = |step: usize, vertex: usize, observed: usize, bound: usize| Error::ExtensionFailed {
        kind: cfg.kind,
        step,
        vertex,
        observed,
        bound,
    };

    for (i, step) in steps.iter().enumerate() {
        match step {
            Step::Uncolor(_) => {}
            &Step::Greedy { v, bound, step_bound } => {
                let init = initial(&snapshot, v).len();
                if init < bound {
                    return Err(fail(i, v, init, bound));
                }
                let now = available(g, &c, v);
                if now.len() < step_bound {
                    return Err(fail(i, v, now.len(), step_bound));
                }
                c.colors[v] = Some(now[0]);
                trace.steps.push(ExtensionStep {
                    vertex: v,
                    bound,
                    initial: init,
                    at_step: now.len(),
                    color: now[0],
                });
            }
            &Step::AvoidList { v, bound, avoid } => {
                let init = initial(&snapshot, v).len();
                if init < bound {
                    return Err(fail(i, v, init, bound));
                }
                let other = initial(&snapshot, avoid);
                if other.len() < 2 {
                    return Err(fail(i, avoid, other.len(), 2));
                }
                let now: Vec<usize> = available(g, &c, v)
                    .into_iter()
                    .filter(|col| !other[..2].contains(col))
                    .collect();
                if now.is_empty() {
                    return Err(fail(i, v, 0, 1));
                }
                c.colors[v] = Some(now[0]);
                trace.steps.push(ExtensionStep {
                    vertex: v,
                    bound,
                    initial: init,
                    at_step: now.len(),
                    color: now[0],
                });
            }
            Step::Cycle { vertices, bound } => {
                let mut lists = Vec::with_capacity(vertices.len());
                for &v in vertices {
                    let list = available(g, &c, v);
                    if list.len() < *bound {
                        return Err(fail(i, v, list.len(), *bound));
                    }
                    lists.push(list);
                }
                let sizes: Vec<usize> = lists.iter().map(Vec::len).collect();
                let inst = ListInstance {
                    cycle: vertices.clone(),
                    lists,
                };
                let colors = color_even_cycle_lists(&inst)?;
                for (j, &v) in vertices.iter().enumerate() {
                    c.colors[v] = Some(colors[j]);
                    trace.steps.push(ExtensionStep {
                        vertex: v,
                        bound: *bound,
                        initial: sizes[j],
                        at_step: sizes[j].min(2),
                        color: colors[j],
                    });
                }
            }
        }
    }

    if let Some(v) = (0..g.n()).find(|&v| c.colors[v].is_none()) {
        return Err(Error::InvalidExtension(format!(
            "{} left vertex {v} uncolored",
            cfg.kind
        )));
    }
    if let Some(x) = partial_violations(g, &c)?.first() {
        return Err(Error::InvalidExtension(format!(
            "{} gave vertices {} and {} the same color {}",
            cfg.kind, x.u, x.v, x.color
        )));
    }
    Ok((c, trace))
}

/// Outcome of [`constructive_color_with`].
#[derive(Clone, Debug, Serialize)]
pub struct ConstructiveRun {
    pub d: usize,
    pub coloring: Coloring,
    pub reductions: usize,
    pub traces: Vec<ExtensionTrace>,
}

/// A 2-distance `(Δ(g)+2)`-coloring built by reduce-and-extend.
pub fn constructive_color(g: &Graph, regime: Regime) -> Result<Coloring> {
    constructive_color_with(g, regime, g.max_degree()).map(|run| run.coloring)
}

/// Reduce-and-extend with `D` fixed by the caller (at least `Δ(g)`), one
/// component at a time. The result is verified before it is returned.
pub fn constructive_color_with(g: &Graph, regime: Regime, d: usize) -> Result<ConstructiveRun> {
    if d < g.max_degree() {
        return Err(Error::DeclaredDegreeTooSmall {
            declared: d,
            actual: g.max_degree(),
        });
    }
    let k = d + 2;
    let mut coloring = Coloring::uncolored(g.n(), k);
    let mut run = ConstructiveRun {
        d,
        coloring: Coloring::uncolored(0, k),
        reductions: 0,
        traces: Vec::new(),
    };
    for comp in g.connected_components() {
        if comp.len() == 1 {
            coloring.colors[comp[0]] = Some(0);
            continue;
        }
        let h = g.induced_subgraph(&comp);
        let local = color_component(&h, regime, d, &mut run)?;
        for (i, &v) in comp.iter().enumerate() {
            coloring.colors[v] = local.colors[i];
        }
    }
    if let Some(x) = super::verify_coloring(g, &coloring)?.first() {
        return Err(Error::InvalidExtension(format!(
            "final coloring gives vertices {} and {} the same color {}",
            x.u, x.v, x.color
        )));
    }
    run.coloring = coloring;
    Ok(run)
}

fn color_component(h: &Graph, regime: Regime, d: usize, run: &mut ConstructiveRun) -> Result<Coloring> {
    let mut stack: Vec<(Graph, Configuration, Vec<usize>)> = Vec::new();
    let mut cur = h.clone();
    while cur.n() > 0 {
        let red = reduce_once(&cur, regime, d)?;
        run.reductions += 1;
        let next = red.graph;
        stack.push((std::mem::replace(&mut cur, next), red.config, red.keep));
    }
    let mut child = Coloring::uncolored(0, d + 2);
    while let Some((level, cfg, keep)) = stack.pop() {
        let partial = lift(&child, &keep, level.n());
        let (c, trace) = extend(&level, &cfg, d, &partial)?;
        run.traces.push(trace);
        child = c;
    }
    Ok(child)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorer::verify_coloring;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn star_k16() {
        let star = g(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6)]);
        let c = constructive_color(&star, Regime::A).unwrap();
        assert_eq!(c.k, 8);
        assert_eq!(c.used(), 7);
        assert!(verify_coloring(&star, &c).unwrap().is_empty());
    }

    #[test]
    fn spider_with_legs_of_length_two() {
        let mut e = Vec::new();
        for i in 0..6 {
            e.push((0, 1 + i));
            e.push((1 + i, 7 + i));
        }
        let spider = g(13, &e);
        let c = constructive_color(&spider, Regime::A).unwrap();
        assert!(c.used() <= 8);
        assert!(verify_coloring(&spider, &c).unwrap().is_empty());
    }

    #[test]
    fn pendant_reduction_shrinks_by_one() {
        let p = g(3, &[(0, 1), (1, 2)]);
        let red = reduce_once(&p, Regime::A, 6).unwrap();
        assert_eq!(red.config.kind, ConfigKind::LowDegree);
        assert_eq!(red.graph.n(), 2);
    }

    #[test]
    fn long_path_deletes_three_internals() {
        let mut e = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)];
        for i in 0..5 {
            e.push((0, 6 + i));
            e.push((5, 6 + i));
        }
        let h = g(11, &e);
        let red = reduce_once(&h, Regime::A, 6).unwrap();
        assert_eq!(red.config.kind, ConfigKind::LongPath);
        assert_eq!(red.config.deletable, vec![1, 2, 3]);
        assert_eq!(red.graph.n(), 8);
    }

    #[test]
    fn isolated_vertices_get_color_zero() {
        let h = g(4, &[(1, 2)]);
        let c = constructive_color_with(&h, Regime::A, 6).unwrap().coloring;
        assert_eq!(c.get(0), Some(0));
        assert_eq!(c.get(3), Some(0));
    }

    #[test]
    fn irreducible_reports_hypotheses() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        match reduce_once(&k4, Regime::A, 6) {
            Err(Error::Irreducible(msg)) => assert!(msg.contains("mad 3/1 is not below 8/3")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn declared_degree_must_cover_graph() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(matches!(
            constructive_color_with(&star, Regime::A, 2),
            Err(Error::DeclaredDegreeTooSmall { declared: 2, actual: 3 })
        ));
    }
}
