//! Scans per-edge index ratios over integer degree grids: extrema, the turn
//! of (AZI/X)^2 along a = 1, and agreement with the catalog coefficients.

use degbound::bounds::{builtin_catalog, DEFAULT_TOLERANCE};
use degbound::proof::{dense_turning_point, grid_extremum, monotonicity_audit, proof_audit, ExtremumKind, GridLine, RatioFn};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(20);
    for (r, kind) in [
        (RatioFn::T1, ExtremumKind::Max),
        (RatioFn::T6, ExtremumKind::Min),
        (RatioFn::T21, ExtremumKind::Min),
    ] {
        let e = grid_extremum(r, n, kind).unwrap().unwrap();
        println!("{kind:?} of {r} for n={n}: {} at {}", e.value, e.location);
    }

    for range in [2..=7, 8..=n - 1] {
        let m = monotonicity_audit(RatioFn::T6, &GridLine { fixed: 1, range: range.clone() }).unwrap();
        println!("{} along a=1, b in {range:?}: {:?}, first violation {:?}", m.ratio, m.trend, m.first_violation);
    }
    if let Some(y) = dense_turning_point(RatioFn::T6, 1.0, 2.0, n as f64) {
        println!("sampled turn near b = {y:.4} (root of b^2 - 7b - 6: {:.4})", (7.0 + 73f64.sqrt()) / 2.0);
    }

    let report = proof_audit(n, &builtin_catalog(), DEFAULT_TOLERANCE).unwrap();
    println!("\ndiscrepancies: {}", report.discrepancies.join(", "));
}
