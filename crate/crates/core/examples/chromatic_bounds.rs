//! Exact chromatic numbers next to the two upper bounds 2H and (2/delta)GA.

use degbound::graph::{chromatic_number, make_family, parse_graph6, FamilyId};
use degbound::index::{all_indices, IndexId};

fn main() {
    let mut graphs = vec![
        ("K5".to_string(), make_family(FamilyId::Complete(5)).unwrap()),
        ("C5".to_string(), make_family(FamilyId::Cycle(5)).unwrap()),
        ("C6".to_string(), make_family(FamilyId::Cycle(6)).unwrap()),
        ("S1,6".to_string(), make_family(FamilyId::Star(6)).unwrap()),
    ];
    graphs.push(("Petersen".into(), parse_graph6("IheA@GUAo").unwrap()));
    println!("{:<9} chi  2H        (2/delta)GA", "graph");
    for (name, g) in &graphs {
        let t = all_indices(g);
        let chi = chromatic_number(g).unwrap();
        let h2 = 2.0 * t.get(IndexId::Harmonic).unwrap();
        let ga = 2.0 / g.min_degree() as f64 * t.get(IndexId::GeometricArithmetic).unwrap();
        println!("{name:<9} {chi:<4} {h2:<9.4} {ga:.4}");
    }
}
