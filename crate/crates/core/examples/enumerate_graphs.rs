//! Counts connected graphs by order, with and without degree filters, and
//! shows canonical forms of two labellings of the same graph.

use degbound::enumerate::{canonical_form, enumerate_connected, EnumerationSpec, Filters};
use degbound::graph::Graph;

fn main() {
    println!("order  connected  delta>=2  molecular  regular");
    for n in 1..=7 {
        let count = |filters: Filters| enumerate_connected(&EnumerationSpec::with_filters(n, filters)).unwrap().len();
        println!(
            "{n:>5}  {:>9}  {:>8}  {:>9}  {:>7}",
            count(Filters::default()),
            count(Filters { delta_min: Some(2), ..Filters::default() }),
            count(Filters { molecular: true, ..Filters::default() }),
            count(Filters { regular_only: true, ..Filters::default() }),
        );
    }

    let a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    let b = Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
    println!("P3 as {a} and {b}: canonical {} and {}", canonical_form(&a).unwrap(), canonical_form(&b).unwrap());

    let four = enumerate_connected(&EnumerationSpec::new(4)).unwrap();
    let names: Vec<String> = four.iter().map(ToString::to_string).collect();
    println!("order 4: {}", names.join(" "));
}
