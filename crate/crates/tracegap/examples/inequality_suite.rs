//! Runs the full randomized check suite over every inequality in the
//! catalog and summarizes the signed gaps, including the expected
//! violations on the bundled reference cases.

use std::collections::BTreeMap;

use tracegap::inequalities::{run_suite, CaseExpectation, InequalityId, SuiteConfig};

fn main() {
    let config = SuiteConfig {
        samples: 60,
        ..SuiteConfig::default()
    };
    println!(
        "running {} inequalities, {} samples each, dims {:?}, seed {}",
        InequalityId::ALL.len(),
        config.samples,
        config.dims,
        config.seed
    );
    let suite = run_suite(&config).unwrap();

    // Per-id aggregates: count, worst (most negative) gap, violations split
    // into pinned reference cases and unconstrained random cases of the
    // refuted bounds. Neither kind contradicts an expectation.
    struct Agg {
        count: usize,
        worst: f64,
        pinned_viol: usize,
        random_viol: usize,
    }
    let mut by_id: BTreeMap<String, Agg> = BTreeMap::new();
    for r in &suite.reports {
        let a = by_id.entry(r.id.name().to_string()).or_insert(Agg {
            count: 0,
            worst: f64::INFINITY,
            pinned_viol: 0,
            random_viol: 0,
        });
        a.count += 1;
        a.worst = a.worst.min(r.gap);
        if !r.holds {
            if r.expected == CaseExpectation::Violates {
                a.pinned_viol += 1;
            } else {
                a.random_viol += 1;
            }
        }
    }

    println!(
        "\n{:<28} {:>6} {:>14} {:>13} {:>13}",
        "inequality", "cases", "worst gap", "pinned viol.", "random viol."
    );
    for (name, a) in &by_id {
        println!(
            "{:<28} {:>6} {:>14.3e} {:>13} {:>13}",
            name, a.count, a.worst, a.pinned_viol, a.random_viol
        );
    }

    println!("\nsample of the violations (all on refuted bounds):");
    let violations: Vec<_> = suite.reports.iter().filter(|r| !r.holds).collect();
    for r in violations.iter().take(8) {
        println!(
            "  {} {} lhs = {:.6e} rhs = {:.6e} gap = {:.6e}",
            r.id, r.case, r.lhs, r.rhs, r.gap
        );
    }
    if violations.len() > 8 {
        println!("  ... and {} more", violations.len() - 8);
    }

    let unexpected = suite.unexpected();
    println!(
        "\n{} reports, {} unexpected violations",
        suite.reports.len(),
        unexpected.len()
    );
    assert!(
        suite.ok(),
        "randomized suite must not refute a proven bound"
    );
}
