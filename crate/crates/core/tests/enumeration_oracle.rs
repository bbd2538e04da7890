//! The enumerator against a duplicate-tolerant brute force: every edge subset
//! of K_n, connectivity by union-find, classes bucketed by a canonical key
//! computed over all n! labellings.

use std::collections::BTreeSet;

use degbound::enumerate::{canonical_form, enumerate_connected, EnumerationSpec, Filters};
use degbound::graph::Graph;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts == 1
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest sorted edge list over all relabellings.
fn brute_key(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .expect("at least one permutation")
}

fn degrees(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

fn brute_classes(n: usize, keep: impl Fn(&[usize]) -> bool) -> BTreeSet<Vec<(usize, usize)>> {
    let all = pairs(n);
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for mask in 0u32..1 << all.len() {
        let edges: Vec<(usize, usize)> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if connected(n, &edges) && keep(&degrees(n, &edges)) {
            classes.insert(brute_key(&edges, &perms));
        }
    }
    classes
}

fn enumerated_keys(n: usize, filters: Filters) -> Vec<Vec<(usize, usize)>> {
    let perms = permutations(n);
    enumerate_connected(&EnumerationSpec::with_filters(n, filters))
        .unwrap()
        .iter()
        .map(|g| brute_key(&g.edges().collect::<Vec<_>>(), &perms))
        .collect()
}

#[test]
fn classes_match_brute_force_up_to_six() {
    for (n, expected) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
        let brute = brute_classes(n, |_| true);
        assert_eq!(brute.len(), expected, "brute force at n={n}");
        let keys = enumerated_keys(n, Filters::default());
        let distinct: BTreeSet<_> = keys.iter().cloned().collect();
        assert_eq!(distinct.len(), keys.len(), "duplicate class at n={n}");
        assert_eq!(distinct, brute, "class sets differ at n={n}");
    }
}

#[test]
fn filtered_counts_match_brute_force() {
    for n in 3..=6 {
        let f = Filters {
            delta_min: Some(2),
            ..Filters::default()
        };
        let brute = brute_classes(n, |d| d.iter().all(|&x| x >= 2));
        let keys: BTreeSet<_> = enumerated_keys(n, f).into_iter().collect();
        assert_eq!(keys, brute, "delta >= 2 at n={n}");

        let f = Filters {
            molecular: true,
            ..Filters::default()
        };
        let brute = brute_classes(n, |d| d.iter().all(|&x| x <= 4));
        let keys: BTreeSet<_> = enumerated_keys(n, f).into_iter().collect();
        assert_eq!(keys, brute, "molecular at n={n}");
    }
}

#[test]
fn output_is_sorted_canonical_and_connected() {
    for n in 2..=7 {
        let gs = enumerate_connected(&EnumerationSpec::new(n)).unwrap();
        let names: Vec<String> = gs.iter().map(ToString::to_string).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        for g in &gs {
            assert!(g.is_connected());
            assert_eq!(canonical_form(g).unwrap().as_str(), g.to_string());
        }
    }
    assert_eq!(enumerate_connected(&EnumerationSpec::new(7)).unwrap().len(), 853);
}

#[test]
fn canonical_form_examples() {
    let a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    let b = Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
    let star = Graph::from_edges(3, [(1, 0), (1, 2)]).unwrap();
    let fa = canonical_form(&a).unwrap();
    assert_eq!(fa, canonical_form(&b).unwrap());
    assert_eq!(fa, canonical_form(&star).unwrap());
    let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!(canonical_form(&k3).unwrap().as_str(), "Bw");
}

#[test]
fn deterministic_across_pool_sizes() {
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                enumerate_connected(&EnumerationSpec::new(7))
                    .unwrap()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
            })
    };
    let one = run(1);
    assert_eq!(one, run(3));
    assert_eq!(one, run(8));
}
