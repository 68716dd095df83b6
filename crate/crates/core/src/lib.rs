//! 2-distance coloring of sparse graphs.
//!
//! Graph analytics (exact maximum average degree, girth, square graph),
//! detection of reducible configurations, a discharging rule engine with
//! exact rational charges, and a constructive `(Δ+2)`-colorer for graphs of
//! bounded maximum average degree, with exact and brute-force oracles.

pub mod cli;
pub mod colorer;
pub mod density;
pub mod discharging;
pub mod error;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod rational;
pub mod report;
pub mod structure;

pub use discharging::Regime;
pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::Rational;
