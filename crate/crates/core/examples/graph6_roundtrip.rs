//! Builds graphs from edge lists, encodes them as graph6 and reads them back.

use degbound::graph::{make_family, parse_edge_list, parse_graph6, to_edge_list, to_graph6, FamilyId};

fn main() {
    let g = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0\n").expect("valid edge list");
    let s = to_graph6(&g);
    println!("C4 from an edge list: {s}");
    assert_eq!(parse_graph6(&s).unwrap(), g);

    for f in [FamilyId::Star(8), FamilyId::DoubleStarT, FamilyId::Cycle(100)] {
        let g = make_family(f).unwrap();
        let s = to_graph6(&g);
        let back = parse_graph6(&s).unwrap();
        assert_eq!(back, g);
        let shown = if s.len() > 40 { format!("{}... ({} bytes)", &s[..40], s.len()) } else { s.clone() };
        println!("{f:<4} {shown}");
    }

    let t = make_family(FamilyId::DoubleStarT).unwrap();
    print!("T* as an edge list:\n{}", to_edge_list(&t));

    for bad in ["", "B!", "Bx", "A_ extra"] {
        println!("{bad:?} -> {}", parse_graph6(bad).unwrap_err());
    }
}
