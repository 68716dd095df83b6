mod common;

use std::collections::BTreeSet;

use twodist::colorer::{constructive_color_with, verify_coloring};
use twodist::density::mad_exact;
use twodist::discharging::audit;
use twodist::structure::ConfigKind;
use twodist::Regime;

/// Hub graphs below the regime's mad bound: every one is colored with
/// `Δ+2` colors, passes conservation, and exposes a configuration.
fn run(regime: Regime, degrees: &[usize], quad_pct: u32) -> BTreeSet<ConfigKind> {
    let mut kinds = BTreeSet::new();
    let mut tested = 0;
    for seed in 0..240u64 {
        let d = degrees[seed as usize % degrees.len()];
        let hubs = 2 + seed as usize % 7;
        let triple_pct = [0, 30, 50, 70, 90][seed as usize % 5];
        let g = common::hub_structure(hubs, d, triple_pct, quad_pct, seed);
        if mad_exact(&g) >= regime.mad_bound() {
            continue;
        }
        tested += 1;
        let run = constructive_color_with(&g, regime, d).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert!(run.coloring.k <= d + 2);
        assert!(verify_coloring(&g, &run.coloring).unwrap().is_empty(), "seed {seed}");
        kinds.extend(run.traces.iter().map(|t| t.kind));

        let report = audit(&g, regime, d);
        assert!(report.conservation, "seed {seed}");
        assert!(!report.configurations.is_empty(), "seed {seed}");
        assert!(
            report.contradiction_flags.is_empty(),
            "seed {seed}: {:?}",
            report.contradiction_flags
        );
    }
    assert!(tested >= 25, "only {tested} instances below the bound");
    kinds
}

#[test]
fn regime_a_hub_graphs() {
    let kinds = run(Regime::A, &[6, 7], 0);
    for k in [
        ConfigKind::TwoPathCycle,
        ConfigKind::TwoPathWeakEnd,
        ConfigKind::TripleCoincident,
    ] {
        assert!(kinds.contains(&k), "{k} never reduced");
    }
}

#[test]
fn regime_b_hub_graphs() {
    let kinds = run(Regime::B, &[10, 11, 12], 15);
    for k in [
        ConfigKind::TwoPathLoop,
        ConfigKind::TripleCoincident,
        ConfigKind::TripleWeakEnd,
    ] {
        assert!(kinds.contains(&k), "{k} never reduced");
    }
}
