//! Serializable summaries of a graph's sparsity and degrees.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::density::mad_exact;
use crate::discharging::Regime;
use crate::graph::Graph;
use crate::rational::Rational;

/// Sparsity and distance analytics of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    /// `0/1` for the empty graph.
    pub average_degree: Rational,
    pub mad: Rational,
    /// `null` for forests.
    pub girth: Option<usize>,
    /// First regime whose hypotheses hold (strict mad bound, minimum `Δ`).
    pub regime: Option<Regime>,
    /// Regimes whose mad bound equals `mad` exactly. These fall outside the
    /// guaranteed strict case.
    pub mad_at_bound: Vec<Regime>,
}

impl Analysis {
    pub fn of(g: &Graph) -> Self {
        let mad = mad_exact(g);
        let max_degree = g.max_degree();
        Analysis {
            n: g.n(),
            m: g.edge_count(),
            max_degree,
            average_degree: g.average_degree().unwrap_or_else(|_| Rational::integer(0)),
            mad,
            girth: g.girth(),
            regime: Regime::infer(mad, max_degree),
            mad_at_bound: [Regime::A, Regime::B]
                .into_iter()
                .filter(|r| r.mad_bound() == mad)
                .collect(),
        }
    }
}

impl fmt::Display for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices        {}", self.n)?;
        writeln!(f, "edges           {}", self.m)?;
        writeln!(f, "max degree      {}", self.max_degree)?;
        writeln!(f, "average degree  {}", self.average_degree)?;
        writeln!(f, "mad             {}", self.mad)?;
        match self.girth {
            Some(g) => writeln!(f, "girth           {g}")?,
            None => writeln!(f, "girth           none (forest)")?,
        }
        match self.regime {
            Some(r) => writeln!(f, "regime          {r}")?,
            None => writeln!(f, "regime          none")?,
        }
        for r in &self.mad_at_bound {
            writeln!(
                f,
                "warning: mad equals the regime {r} bound {}; only the strict case is covered",
                r.mad_bound()
            )?;
        }
        Ok(())
    }
}

/// Degree profile, printed alongside generated graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// degree -> number of vertices
    pub histogram: BTreeMap<usize, usize>,
    pub girth: Option<usize>,
}

impl DegreeReport {
    pub fn of(g: &Graph) -> Self {
        let mut histogram = BTreeMap::new();
        for v in 0..g.n() {
            *histogram.entry(g.degree(v)).or_insert(0) += 1;
        }
        DegreeReport {
            n: g.n(),
            m: g.edge_count(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            histogram,
            girth: g.girth(),
        }
    }
}

impl fmt::Display for DegreeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} m={} degrees {}..={} [",
            self.n, self.m, self.min_degree, self.max_degree
        )?;
        for (i, (d, c)) in self.histogram.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{d}:{c}")?;
        }
        write!(f, "]")?;
        match self.girth {
            Some(g) => write!(f, " girth={g}"),
            None => write!(f, " girth=none"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::moore_3_2;

    #[test]
    fn petersen_analysis() {
        let a = Analysis::of(&moore_3_2());
        let json = serde_json::to_value(&a).unwrap();
        assert_eq!(json["mad"], "3/1");
        assert_eq!(json["average_degree"], "3/1");
        assert_eq!(json["girth"], 5);
        assert_eq!(json["n"], 10);
        assert_eq!(json["m"], 15);
        assert!(json["regime"].is_null());
    }

    #[test]
    fn empty_and_forest() {
        let a = Analysis::of(&Graph::empty(0));
        assert_eq!(a.mad, Rational::integer(0));
        assert_eq!(a.average_degree, Rational::integer(0));
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let json = serde_json::to_value(Analysis::of(&path)).unwrap();
        assert!(json["girth"].is_null());
    }

    #[test]
    fn degree_histogram() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = DegreeReport::of(&star);
        assert_eq!(r.histogram, BTreeMap::from([(1, 3), (3, 1)]));
        assert_eq!(r.to_string(), "n=4 m=3 degrees 1..=3 [1:3 3:1] girth=none");
    }
}
