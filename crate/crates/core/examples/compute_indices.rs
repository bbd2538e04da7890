//! Prints all seven indices of a few graphs given as graph6 strings.
//!
//! ```text
//! cargo run --example compute_indices -- Bw 'G?qa`_'
//! ```

use degbound::graph::parse_graph6;
use degbound::index::all_indices;

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = vec!["A_".into(), "Bw".into(), "C~".into()];
    }
    for s in &args {
        let g = match parse_graph6(s) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("{s}: {e}");
                std::process::exit(2);
            }
        };
        println!("{s}  n={} m={} partition={}", g.order(), g.size(), g.edge_degree_partition());
        for (idx, v) in all_indices(&g).iter() {
            match v {
                Some(v) => println!("  {:<7}{v:.9}", idx.symbol()),
                None => println!("  {:<7}undefined", idx.symbol()),
            }
        }
    }
}
