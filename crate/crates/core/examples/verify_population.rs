//! Audits selected bounds on a graph6 population file and checks the
//! verdicts against the bundled expectations.
//!
//! ```text
//! cargo run --example verify_population -- population.g6 T6L,T7-(18)L
//! ```
//!
//! Without arguments the population is the stars S1,2 .. S1,12.

use degbound::bounds::{audit, builtin_catalog, find_bound, Expectations, DEFAULT_TOLERANCE};
use degbound::enumerate::Population;
use degbound::graph::{make_family, to_graph6, FamilyId};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pop = match args.first() {
        Some(path) => match Population::from_file(path.as_ref()) {
            Ok(Ok(p)) => p,
            Ok(Err(e)) => {
                eprintln!("{path}: {e}");
                std::process::exit(2);
            }
            Err(e) => {
                eprintln!("{path}: {e}");
                std::process::exit(3);
            }
        },
        None => {
            let text: String = (2..=12).map(|k| to_graph6(&make_family(FamilyId::Star(k)).unwrap()) + "\n").collect();
            Population::from_text("stars k=2..12", &text).unwrap()
        }
    };
    let ids = args.get(1).map_or("T6L,T7-(17)L,T7-(18)L,T7-(19)L", String::as_str);
    let catalog = builtin_catalog();
    let expect = Expectations::builtin();
    let mut failed = false;
    for id in ids.split(',') {
        let Some(b) = find_bound(&catalog, id) else {
            eprintln!("unknown bound {id}");
            std::process::exit(2);
        };
        let r = audit(b, &pop.graphs, &pop.descriptor, DEFAULT_TOLERANCE);
        let mismatch = expect.check_one(&r);
        failed |= mismatch.is_some();
        println!(
            "{:<10} {:<30} equality at [{}] {}",
            r.bound_id,
            r.verdict.as_str(),
            r.equality_witnesses.join(" "),
            if mismatch.is_some() { "UNEXPECTED" } else { "" }
        );
        println!("           {}", b.statement);
    }
    std::process::exit(i32::from(failed));
}
