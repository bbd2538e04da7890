//! Closed-form index values of paths, cycles, complete graphs and stars next
//! to the values computed from the graphs themselves.

use degbound::cli::family_table;
use degbound::index::IndexId;

fn main() {
    let rows = family_table(3..=12, 1e-12);
    let worst = rows.iter().filter_map(|r| r.rel_err).fold(0.0f64, f64::max);
    println!("{} rows, all agree: {}, worst relative error {worst:e}", rows.len(), rows.iter().all(|r| r.agrees));

    println!("\n n   AZI(Cn)/GA(Cn)   AZI(S1,n)/X(S1,n)");
    for n in 3..=12 {
        let get = |fam: String, i: IndexId| {
            rows.iter()
                .find(|r| r.family == fam && r.index == i)
                .and_then(|r| r.computed)
                .unwrap()
        };
        let cycle = get(format!("C{n}"), IndexId::AugmentedZagreb) / get(format!("C{n}"), IndexId::GeometricArithmetic);
        let star = get(format!("S1,{n}"), IndexId::AugmentedZagreb) / get(format!("S1,{n}"), IndexId::SumConnectivity);
        println!("{n:>2}   {cycle:<15.12}  {star:.12}");
    }
    println!("\n1536/343 = {:.12}", 1536.0 / 343.0);
}
