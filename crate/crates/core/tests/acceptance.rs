//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use degbound::bounds::{
    audit_profiles, builtin_catalog, check_equality_family, find_bound, AuditVerdict, GraphProfile, DEFAULT_TOLERANCE,
};
use degbound::cli::family_table;
use degbound::enumerate::{canonical_form, enumerate_connected, enumerate_orders, EnumerationSpec, Filters};
use degbound::graph::{make_family, parse_graph6, to_graph6, FamilyId, Graph};
use degbound::index::{all_indices, edge_term_real, index_of_partition, IndexId};
use degbound::proof::{concordance, proof_audit, ClaimVerdict, ConcordanceStatus, RatioFn};
use degbound::{DegreePair, EdgeDegreePartition};

const TOL: f64 = DEFAULT_TOLERANCE;
const TIGHT: f64 = 1e-12;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

/// Number of isomorphism classes of connected graphs on `n` vertices,
/// counted by marking whole permutation orbits of edge masks.
fn oracle_connected_classes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        index[i][j] = k;
        index[j][i] = k;
    }
    let perms = {
        let mut all = vec![(0..n).collect::<Vec<usize>>()];
        for k in 1..n {
            let mut next = Vec::new();
            for p in &all {
                for s in 0..=k {
                    let mut q = p.clone();
                    q.swap(k, s);
                    next.push(q);
                }
            }
            all = next;
        }
        all
    };
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(i, j)| index[p[i]][p[j]]).collect())
        .collect();
    let total = 1usize << pairs.len();
    let mut seen = vec![false; total];
    let mut classes = 0;
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        for m in &maps {
            let mut img = 0usize;
            for (k, &t) in m.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    img |= 1 << t;
                }
            }
            seen[img] = true;
        }
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        if Graph::from_edges(n, edges).unwrap().is_connected() {
            classes += 1;
        }
    }
    classes
}

fn population(orders: std::ops::RangeInclusive<usize>, filters: Filters) -> Vec<GraphProfile> {
    enumerate_orders(orders, filters).unwrap().into_iter().map(GraphProfile::new).collect()
}

fn criterion_1() -> Outcome {
    let counts: Vec<usize> = (2..=7).map(oracle_connected_classes).collect();
    ensure(counts == [1, 2, 6, 21, 112, 853], format!("oracle counts {counts:?}"))?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let start = Instant::now();
    let (enumerated, violators) = pool.install(|| {
        let enumerated: Vec<usize> = (2..=7)
            .map(|n| enumerate_connected(&EnumerationSpec::new(n)).unwrap().len())
            .collect();
        let pop = population(2..=7, Filters::default());
        let violators: Vec<String> = builtin_catalog()
            .iter()
            .map(|b| audit_profiles(b, &pop, "n=2..7", TOL))
            .filter(|r| r.counts.violated > 0)
            .map(|r| r.bound_id)
            .collect();
        (enumerated, violators)
    });
    let secs = start.elapsed().as_secs_f64();
    ensure(enumerated == counts, format!("enumerator counts {enumerated:?}"))?;
    ensure(violators == ["T7-(21)U"], format!("bounds with violations: {violators:?}"))?;
    ensure(secs < 60.0, format!("took {secs:.1}s single-threaded"))?;
    Ok(format!("counts {counts:?}; only T7-(21)U violated; {secs:.2}s on one thread"))
}

fn criterion_2() -> Outcome {
    let ids = [
        "T1L", "T1U", "T2L", "T2U", "T3L", "T3U", "C1", "C2", "C3L", "C3U", "C3b", "T4L", "T4U", "T5-(5)L", "T5-(5)U",
        "T5-(6)L", "T5-(6)U", "T5-(7)L", "T5-(7)U", "T5-(8)L", "T5-(8)U", "T5-(9)L", "T5-(9)U", "C7-(10)", "C7-(11)",
        "C7-(12)", "C7-(13)", "C7-(14)", "T6L", "T6U", "C8", "T7-(17)L", "T7-(17)U", "T7-(18)L", "T7-(18)U",
        "T7-(19)L", "T7-(19)U", "T7-(20)L", "T7-(20)U", "C9-(22)", "C9-(23)", "C9-(24)", "C9-(25)", "EXT-ZT",
        "EXT-2a", "EXT-2b", "EXT-4", "C6",
    ];
    let cat = builtin_catalog();
    let pop = population(2..=7, Filters::default());
    let mut off = Vec::new();
    for id in ids {
        let b = find_bound(&cat, id).unwrap();
        let r = audit_profiles(b, &pop, "n=2..7", TOL);
        let witnesses: BTreeSet<&str> = r.equality_witnesses.iter().map(String::as_str).collect();
        let members: BTreeSet<&str> = pop
            .iter()
            .filter(|p| {
                check_equality_family(b, &p.graph)
                    && !degbound::bounds::evaluate_profile(b, p, TOL).verdict.is_skip()
            })
            .map(|p| p.graph6.as_str())
            .collect();
        if witnesses != members {
            let extra: Vec<_> = witnesses.difference(&members).collect();
            let missing: Vec<_> = members.difference(&witnesses).collect();
            off.push(format!("{id} (extra {extra:?}, missing {} members)", missing.len()));
        }
    }
    let c3 = degbound::bounds::evaluate_bound(find_bound(&cat, "T4U").unwrap(), &parse_graph6("Bw").unwrap(), TOL);
    ensure(c3.margin.unwrap().abs() <= TOL, "T4U margin at C3")?;
    ensure(off.is_empty(), format!("witness sets differ from claimed families for {}", off.join("; ")))?;
    Ok(format!("{} bounds match their claimed equality families", ids.len()))
}

fn criterion_3() -> Outcome {
    let cat = builtin_catalog();
    let k3 = parse_graph6("Bw").unwrap();
    let up = degbound::bounds::evaluate_bound(find_bound(&cat, "T7-(21)U").unwrap(), &k3, TOL);
    ensure(up.verdict == degbound::bounds::Verdict::Violated, "T7-(21)U not violated at K3")?;
    ensure(rel(up.lhs_value.unwrap(), 24.0) <= TIGHT, "AZI(K3)")?;
    ensure(rel(up.rhs_side_value.unwrap(), 6.0) <= TIGHT, "bound at K3")?;
    let all = population(2..=7, Filters::default());
    let r = audit_profiles(find_bound(&cat, "T7-(21)U").unwrap(), &all, "n=2..7", TOL);
    ensure(r.verdict == AuditVerdict::Violated && r.violation_witnesses.contains(&"Bw".into()), "K3 not a witness")?;
    let delta2 = population(3..=7, Filters { delta_min: Some(2), ..Filters::default() });
    for (id, pop) in [("T7-(21)L", &all), ("C9-(26)", &all), ("C9-(26)", &delta2)] {
        let r = audit_profiles(find_bound(&cat, id).unwrap(), pop, "", TOL);
        ensure(r.verdict == AuditVerdict::HoldsNotSharpInPopulation, format!("{id}: {:?}", r.verdict))?;
    }
    let e = degbound::proof::grid_extremum(RatioFn::T21, 7, degbound::proof::ExtremumKind::Min).unwrap().unwrap();
    ensure(e.location == DegreePair::new(1, 4), format!("grid minimum at {}", e.location))?;
    ensure(rel(e.value, (256.0f64 / 27.0).powi(2)) <= TIGHT, "grid minimum value")?;
    Ok(format!("K3: 24 vs 6; {} violation witnesses; grid minimum (1,4) = (256/27)^2", r.violation_witnesses.len()))
}

fn criterion_4() -> Outcome {
    let ratios: Vec<(usize, f64)> = (2..=12)
        .map(|k| {
            let t = all_indices(&make_family(FamilyId::Star(k)).unwrap());
            (k, t.get(IndexId::AugmentedZagreb).unwrap() / t.get(IndexId::SumConnectivity).unwrap())
        })
        .collect();
    let (kmin, vmin) = ratios.iter().copied().fold((0, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
    ensure(kmin == 8, format!("minimum at k={kmin}"))?;
    ensure(ratios.iter().filter(|(_, v)| *v <= vmin * (1.0 + TIGHT)).count() == 1, "minimum not unique")?;
    ensure(rel(vmin, 1536.0 / 343.0) <= TIGHT, format!("value {vmin}"))?;
    Ok(format!("AZI/X over stars minimised only at k=8, value {vmin}"))
}

fn criterion_5() -> Outcome {
    let rows = family_table(3..=200, TIGHT);
    ensure(rows.iter().all(|r| r.agrees), "closed forms disagree")?;
    let mut worst = 0.0f64;
    for n in 3..=200 {
        let name = format!("C{n}");
        let get = |i: IndexId| rows.iter().find(|r| r.family == name && r.index == i).and_then(|r| r.computed).unwrap();
        let (azi, ga) = (get(IndexId::AugmentedZagreb), get(IndexId::GeometricArithmetic));
        worst = worst.max(rel(azi, 8.0 * ga));
        ensure(rel(ga, n as f64) <= TIGHT, format!("GA(C{n})"))?;
    }
    ensure(worst <= TIGHT, format!("worst relative gap {worst:e}"))?;
    Ok(format!("AZI(Cn) = 8 GA(Cn) for 3 <= n <= 200, worst gap {worst:e}"))
}

fn criterion_6() -> Outcome {
    let cat = builtin_catalog();
    let pop = population(2..=7, Filters::default());
    let complete: BTreeSet<String> = pop.iter().filter(|p| p.m == p.n * (p.n - 1) / 2).map(|p| p.graph6.clone()).collect();
    let r = audit_profiles(find_bound(&cat, "EXT-4").unwrap(), &pop, "", TOL);
    ensure(r.counts.violated == 0, "chi <= 2H violated")?;
    ensure(r.equality_witnesses.iter().cloned().collect::<BTreeSet<_>>() == complete, "chi = 2H off K_n")?;
    let r6 = audit_profiles(find_bound(&cat, "C6").unwrap(), &pop, "", TOL);
    let complete2: BTreeSet<String> = complete.iter().filter(|g| parse_graph6(g).unwrap().order() >= 3).cloned().collect();
    ensure(r6.counts.violated == 0, "chi <= (2/delta)GA violated")?;
    ensure(r6.equality_witnesses.iter().cloned().collect::<BTreeSet<_>>() == complete2, "C6 equality off K_n")?;
    Ok(format!("equality exactly at K2..K7 ({}) and K3..K7 ({})", r.equality_witnesses.len(), r6.equality_witnesses.len()))
}

fn criterion_7() -> Outcome {
    let pop = enumerate_orders(3..=7, Filters { molecular: true, ..Filters::default() }).unwrap();
    let s14 = canonical_form(&make_family(FamilyId::Star(4)).unwrap()).unwrap();
    let mut min = f64::INFINITY;
    let mut checked = 0;
    for g in &pop {
        if canonical_form(g).unwrap() == s14 {
            continue;
        }
        let t = all_indices(g);
        let margin = t.get(IndexId::GeometricArithmetic).unwrap() - t.get(IndexId::AtomBondConnectivity).unwrap();
        min = min.min(margin);
        checked += 1;
    }
    ensure(min > TOL, format!("minimum margin {min}"))?;
    let s = all_indices(&make_family(FamilyId::Star(4)).unwrap());
    let (ga, abc) = (s.get(IndexId::GeometricArithmetic).unwrap(), s.get(IndexId::AtomBondConnectivity).unwrap());
    ensure(rel(ga, 3.2) <= TIGHT && rel(abc, 2.0 * 3f64.sqrt()) <= TIGHT && ga < abc, "K1,4 exception")?;
    let t = all_indices(&make_family(FamilyId::DoubleStarT).unwrap());
    let (ga_t, abc_t) = (t.get(IndexId::GeometricArithmetic).unwrap(), t.get(IndexId::AtomBondConnectivity).unwrap());
    ensure(rel(ga_t, 5.8) <= TIGHT && ga_t < abc_t && (abc_t - 5.808525).abs() < 1e-6, "T* exception")?;
    Ok(format!("{checked} molecular graphs, min GA - ABC = {min:.6}; exceptions K1,4 and T* (ABC = {abc_t:.6})"))
}

fn criterion_8() -> Outcome {
    let cat = builtin_catalog();
    let pop = population(2..=7, Filters::default());
    let mut checked = Vec::new();
    for b in cat.iter().filter(|b| b.is_two_index()) {
        if audit_profiles(b, &pop, "", TOL).verdict != AuditVerdict::ConfirmedSharp {
            continue;
        }
        let c = concordance(b, 20, TOL).ok_or(format!("{}: no concordance", b.id))?;
        ensure(c.status == ConcordanceStatus::Concordant, format!("{}: {:?}", b.id, c.status))?;
        checked.push(b.id.clone());
    }
    let report = proof_audit(20, &cat, TOL).map_err(|e| e.to_string())?;
    for id in ["F_T6.decreasing", "F_T6.increasing"] {
        let c = report.claims.iter().find(|c| c.id == id).ok_or(format!("{id} missing"))?;
        ensure(c.verdict == ClaimVerdict::Confirmed, format!("{id}: {}", c.observed))?;
    }
    Ok(format!("{} confirmed-sharp two-index bounds concordant; F_T6 decreasing on [2,7] and increasing on [8,19]", checked.len()))
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.random_range(1..=max_n);
    let p: f64 = rng.random();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

fn criterion_9() -> Outcome {
    const CASES: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(20140607);
    let close = |a: f64, b: f64| (a - b).abs() <= TIGHT * a.abs().max(b.abs()).max(1.0);

    for case in 0..CASES {
        let k = rng.random_range(1..6usize);
        let entries: Vec<(DegreePair, usize)> = (0..rng.random_range(1..6))
            .map(|_| (DegreePair::new(rng.random_range(1..15), rng.random_range(1..15)), rng.random_range(1..6)))
            .collect();
        let part = EdgeDegreePartition::from_entries(entries.iter().copied());
        let scaled = EdgeDegreePartition::from_entries(part.iter().map(|(p, m)| (p, m * k)));
        for idx in IndexId::ALL {
            if let (Ok(a), Ok(b)) = (index_of_partition(idx, &part), index_of_partition(idx, &scaled)) {
                ensure(close(k as f64 * a, b), format!("linearity case {case} {idx}"))?;
            }
        }
    }
    for case in 0..CASES {
        let g = random_graph(&mut rng, 9);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.random_range(0..=i));
        }
        let h = g.relabel(&perm);
        ensure(all_indices(&g) == all_indices(&h), format!("isomorphism case {case}"))?;
        ensure(canonical_form(&g).unwrap() == canonical_form(&h).unwrap(), format!("canonical case {case}"))?;
    }
    for case in 0..CASES {
        let n = rng.random_range(3..60usize);
        let d = rng.random_range(1..n);
        if n * d % 2 == 1 {
            continue;
        }
        let g = make_family(FamilyId::Regular { n, degree: d }).unwrap();
        let m = (n * d / 2) as f64;
        for (idx, v) in all_indices(&g).iter() {
            if let Some(v) = v {
                ensure(close(v, m * edge_term_real(idx, d as f64, d as f64)), format!("regular case {case} {idx}"))?;
            }
        }
    }
    for case in 0..CASES {
        let g = random_graph(&mut rng, 80);
        ensure(parse_graph6(&to_graph6(&g)).unwrap() == g, format!("graph6 case {case}"))?;
    }
    let reference: Vec<Vec<String>> = (1..=6)
        .map(|n| enumerate_connected(&EnumerationSpec::new(n)).unwrap().iter().map(ToString::to_string).collect())
        .collect();
    let pools: Vec<rayon::ThreadPool> = (1..=4).map(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().unwrap()).collect();
    for case in 0..CASES {
        let n = rng.random_range(1..=6usize);
        let pool = &pools[rng.random_range(0..pools.len())];
        let got: Vec<String> = pool.install(|| enumerate_connected(&EnumerationSpec::new(n)).unwrap().iter().map(ToString::to_string).collect());
        ensure(got == reference[n - 1], format!("determinism case {case}"))?;
    }
    Ok(format!("5 properties x {CASES} seeded cases"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("exhaustive verification n <= 7", criterion_1),
        ("equality witnesses match claimed families", criterion_2),
        ("pinned discrepancies", criterion_3),
        ("star sharpness of AZI/X", criterion_4),
        ("cycle identity AZI = 8 GA", criterion_5),
        ("chromatic bounds", criterion_6),
        ("molecular strict inequality", criterion_7),
        ("proof-kernel concordance", criterion_8),
        ("property suite", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
