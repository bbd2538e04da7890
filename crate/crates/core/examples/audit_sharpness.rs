//! Audits every catalogued bound over all connected graphs of orders 2..=N
//! and prints one line per bound.
//!
//! ```text
//! cargo run --release --example audit_sharpness -- 7
//! ```

use degbound::bounds::{audit_catalog, builtin_catalog, Expectations, DEFAULT_TOLERANCE};
use degbound::enumerate::{Filters, Population};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let pop = Population::enumerated(2..=n, Filters::default()).expect("order within cap");
    let catalog = builtin_catalog();
    let reports = audit_catalog(&catalog, &pop.graphs, &pop.descriptor, DEFAULT_TOLERANCE);
    let expect = Expectations::builtin();
    println!("{} ({} graphs)", pop.descriptor, pop.graphs.len());
    for r in &reports {
        let min = r
            .min_margin
            .as_ref()
            .map_or("-".to_string(), |m| format!("{:.6} at {}", m.value, m.witness_graph6));
        let pinned = if expect.check_one(r).is_none() { "ok" } else { "UNEXPECTED" };
        println!(
            "{:<11} {:<30} eq={:<4} viol={:<4} min_margin={:<24} mismatch(+{}/-{}) {}",
            r.bound_id,
            r.verdict.as_str(),
            r.equality_witnesses.len(),
            r.violation_witnesses.len(),
            min,
            r.family_mismatch.unexpected_equalities.len(),
            r.family_mismatch.missed_family_members.len(),
            pinned
        );
    }
}
