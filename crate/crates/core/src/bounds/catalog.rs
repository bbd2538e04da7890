//! The fixed list of inequalities audited by this crate.
//!
//! Each entry records its hypotheses and the family at which it is claimed
//! to be tight exactly as published. Several of those claims do not survive
//! exhaustive checking; the audit reports the discrepancy rather than the
//! catalog correcting it.

use super::coeff::{delta, int, order, CoeffExpr};
use super::{BoundForm, BoundSpec, Direction, EqualityFamily, Preconditions, Side};
use crate::graph::FamilyId;
use crate::index::IndexId::{self, *};

use Direction::{AtLeast, AtMost};
use EqualityFamily as Eq;

struct Entry {
    id: &'static str,
    lhs: Side,
    rhs: IndexId,
    coeff: CoeffExpr,
    direction: Direction,
    n_min: usize,
    delta_min: usize,
    claimed: Option<EqualityFamily>,
    citation: &'static str,
}

impl Entry {
    fn build(self) -> BoundSpec {
        let pre = Preconditions {
            n_min: self.n_min,
            delta_min: self.delta_min,
            ..Preconditions::default()
        };
        let statement = statement(self.lhs, self.rhs, &self.coeff, self.direction, false, &pre);
        BoundSpec {
            id: self.id.to_string(),
            form: BoundForm::Ratio {
                lhs: self.lhs,
                rhs: self.rhs,
                coeff: self.coeff,
                direction: self.direction,
            },
            strict: false,
            preconditions: pre,
            claimed_equality: self.claimed,
            citation: self.citation.to_string(),
            statement,
        }
    }
}

fn statement(lhs: Side, rhs: IndexId, coeff: &CoeffExpr, dir: Direction, strict: bool, pre: &Preconditions) -> String {
    let op = match (dir, strict) {
        (AtMost, false) => "<=",
        (AtMost, true) => "<",
        (AtLeast, false) => ">=",
        (AtLeast, true) => ">",
    };
    let c = match coeff {
        CoeffExpr::Int(1) => String::new(),
        c => format!("[{c}] "),
    };
    let mut s = format!("{lhs}(G) {op} {c}{rhs}(G) for connected G with n >= {}", pre.n_min);
    if pre.delta_min > 1 {
        s.push_str(&format!(", delta >= {}", pre.delta_min));
    }
    if pre.molecular_only {
        s.push_str(", Delta <= 4");
    }
    if let Some(cap) = &pre.spread_cap {
        s.push_str(&format!(", Delta - delta <= {cap}"));
    }
    if !pre.exclusions.is_empty() {
        let ex: Vec<String> = pre.exclusions.iter().map(ToString::to_string).collect();
        s.push_str(&format!(", G not isomorphic to {}", ex.join(" or ")));
    }
    s
}

fn idx(i: IndexId) -> Side {
    Side::Index(i)
}

fn n1() -> CoeffExpr {
    order() - 1
}

fn n2() -> CoeffExpr {
    order() - 2
}

fn d1() -> CoeffExpr {
    delta() - 1
}

#[allow(clippy::too_many_arguments)]
fn e(
    id: &'static str,
    lhs: IndexId,
    direction: Direction,
    coeff: CoeffExpr,
    rhs: IndexId,
    n_min: usize,
    delta_min: usize,
    claimed: Option<EqualityFamily>,
    citation: &'static str,
) -> BoundSpec {
    Entry {
        id,
        lhs: idx(lhs),
        rhs,
        coeff,
        direction,
        n_min,
        delta_min,
        claimed,
        citation,
    }
    .build()
}

fn ga_over_abc_strict(id: &'static str, pre: Preconditions, citation: &'static str) -> BoundSpec {
    let coeff = int(1);
    let statement = statement(idx(AtomBondConnectivity), GeometricArithmetic, &coeff, AtMost, true, &pre);
    BoundSpec {
        id: id.to_string(),
        form: BoundForm::Ratio {
            lhs: idx(AtomBondConnectivity),
            rhs: GeometricArithmetic,
            coeff,
            direction: AtMost,
        },
        strict: true,
        preconditions: pre,
        claimed_equality: None,
        citation: citation.to_string(),
        statement,
    }
}

/// Every catalogued inequality, in a fixed order.
pub fn builtin_catalog() -> Vec<BoundSpec> {
    let m2 = ModifiedSecondZagreb;
    let mut c = vec![
        e("T1L", GeometricArithmetic, AtLeast, int(2).sqrt(), SumConnectivity, 2, 1, Some(Eq::Path2), "GA vs X, lower"),
        e("T1U", GeometricArithmetic, AtMost, (2 * n1()).sqrt(), SumConnectivity, 2, 1, Some(Eq::Complete), "GA vs X, upper"),
        e("C1", GeometricArithmetic, AtLeast, (2 * delta()).sqrt(), SumConnectivity, 3, 2, Some(Eq::DeltaRegular), "GA vs X, minimum-degree lower"),
        e("T2L", GeometricArithmetic, AtLeast, int(1), Randic, 2, 1, Some(Eq::Path2), "GA vs R, lower"),
        e("T2U", GeometricArithmetic, AtMost, n1(), Randic, 2, 1, Some(Eq::Complete), "GA vs R, upper"),
        e("C2", GeometricArithmetic, AtLeast, delta(), Randic, 3, 2, Some(Eq::DeltaRegular), "GA vs R, minimum-degree lower"),
        e("C3L", GeometricArithmetic, AtLeast, (int(4) / int(3)).sqrt(), Randic, 3, 1, Some(Eq::Path3), "GA vs R for n >= 3, lower"),
        e("C3U", GeometricArithmetic, AtMost, n1(), Randic, 3, 1, Some(Eq::Complete), "GA vs R for n >= 3, upper"),
        e("EXT-ZT", SumConnectivity, AtLeast, (int(2) / int(3)).sqrt(), Randic, 3, 1, Some(Eq::Path3), "X vs R, lower (external)"),
        e("T3L", GeometricArithmetic, AtLeast, int(1), Harmonic, 2, 1, Some(Eq::Path2), "GA vs H, lower"),
        e("T3U", GeometricArithmetic, AtMost, n1(), Harmonic, 2, 1, Some(Eq::Complete), "GA vs H, upper"),
        e("C3b", GeometricArithmetic, AtLeast, delta(), Harmonic, 3, 2, Some(Eq::DeltaRegular), "GA vs H, minimum-degree lower"),
        e("T4L", AtomBondConnectivity, AtLeast, (2 * n2()).sqrt() / n1(), GeometricArithmetic, 3, 2, Some(Eq::Complete), "ABC vs GA, lower"),
        e("T4U", AtomBondConnectivity, AtMost, (order() + 1) / (4 * n1().sqrt()), GeometricArithmetic, 3, 2, Some(Eq::Triangle), "ABC vs GA, upper"),
        e("EXT-2a", Harmonic, AtMost, int(1), Randic, 3, 2, Some(Eq::DeltaRegular), "H vs R (external chain, first link)"),
        e("EXT-2b", Randic, AtMost, int(1), SumConnectivity, 3, 2, Some(Eq::Cycle), "R vs X (external chain, second link)"),
    ];
    let ext2c = {
        let pre = Preconditions {
            n_min: 3,
            delta_min: 2,
            ..Preconditions::default()
        };
        let coeff = int(1);
        let statement = statement(idx(SumConnectivity), AtomBondConnectivity, &coeff, AtMost, true, &pre);
        BoundSpec {
            id: "EXT-2c".into(),
            form: BoundForm::Ratio {
                lhs: idx(SumConnectivity),
                rhs: AtomBondConnectivity,
                coeff,
                direction: AtMost,
            },
            strict: true,
            preconditions: pre,
            claimed_equality: None,
            citation: "X vs ABC (external chain, strict third link)".into(),
            statement,
        }
    };
    c.push(ext2c);

    let links: Vec<BoundSpec> = ["EXT-2a", "EXT-2b", "EXT-2c", "T4U"]
        .iter()
        .map(|id| c.iter().find(|b| b.id == *id).expect("link defined above").clone())
        .collect();
    c.push(BoundSpec {
        id: "C4".into(),
        form: BoundForm::Chain { links },
        // strictness lives in the EXT-2c link
        strict: false,
        preconditions: Preconditions {
            n_min: 3,
            delta_min: 2,
            ..Preconditions::default()
        },
        claimed_equality: Some(Eq::DeltaRegular),
        citation: "chain H <= R <= X < ABC <= c(n) GA".into(),
        statement: "H(G) <= R(G) <= X(G) < ABC(G) <= [(n+1)/(4*sqrt(n-1))] GA(G) for connected G with delta >= 2".into(),
    });

    let exclusions = vec![FamilyId::Star(4), FamilyId::DoubleStarT];
    c.push(ga_over_abc_strict(
        "EXT-3(i)",
        Preconditions {
            molecular_only: true,
            exclusions: exclusions.clone(),
            ..Preconditions::default()
        },
        "GA > ABC on molecular graphs (external)",
    ));
    c.push(ga_over_abc_strict(
        "EXT-3(ii)",
        Preconditions {
            spread_cap: Some(int(3)),
            exclusions,
            ..Preconditions::default()
        },
        "GA > ABC when Delta - delta <= 3 (external)",
    ));
    c.push(ga_over_abc_strict(
        "EXT-3(iii)",
        Preconditions {
            n_min: 3,
            delta_min: 2,
            spread_cap: Some((2 * delta() - 1).pow(2, 1)),
            ..Preconditions::default()
        },
        "GA > ABC when delta >= 2 and Delta - delta <= (2 delta - 1)^2 (external)",
    ));

    for (id, coeff, rhs, delta_min, citation) in [
        ("EXT-4", int(2), Harmonic, 1, "chromatic number vs H (external)"),
        ("C6", int(2) / delta(), GeometricArithmetic, 2, "chromatic number vs GA"),
    ] {
        let pre = Preconditions {
            n_min: if delta_min > 1 { 3 } else { 2 },
            delta_min,
            ..Preconditions::default()
        };
        let statement = statement(Side::Chi, rhs, &coeff, AtMost, false, &pre);
        c.push(BoundSpec {
            id: id.into(),
            form: BoundForm::Ratio {
                lhs: Side::Chi,
                rhs,
                coeff,
                direction: AtMost,
            },
            strict: false,
            preconditions: pre,
            claimed_equality: Some(Eq::Complete),
            citation: citation.into(),
            statement,
        });
    }

    c.extend([
        e("T5-(5)L", Randic, AtLeast, int(1), m2, 2, 1, Some(Eq::Path2), "R vs M2*, lower"),
        e("T5-(5)U", Randic, AtMost, n1(), m2, 2, 1, Some(Eq::Complete), "R vs M2*, upper"),
        e("T5-(6)L", SumConnectivity, AtLeast, int(1) / int(2).sqrt(), m2, 2, 1, Some(Eq::Path2), "X vs M2*, lower"),
        e("T5-(6)U", SumConnectivity, AtMost, n1().pow(3, 2) / int(2).sqrt(), m2, 2, 1, Some(Eq::Complete), "X vs M2*, upper"),
        e("T5-(7)L", Harmonic, AtLeast, int(1), m2, 2, 1, Some(Eq::Path2), "H vs M2*, lower"),
        e("T5-(7)U", Harmonic, AtMost, n1(), m2, 2, 1, Some(Eq::Complete), "H vs M2*, upper"),
        e("T5-(8)L", GeometricArithmetic, AtLeast, int(1), m2, 2, 1, Some(Eq::Path2), "GA vs M2*, lower"),
        e("T5-(8)U", GeometricArithmetic, AtMost, n1().pow(2, 1), m2, 2, 1, Some(Eq::Complete), "GA vs M2*, upper"),
        e("T5-(9)L", AtomBondConnectivity, AtLeast, int(2).sqrt(), m2, 3, 1, Some(Eq::Path3), "ABC vs M2*, lower"),
        e("T5-(9)U", AtomBondConnectivity, AtMost, n1() * (2 * n2()).sqrt(), m2, 3, 1, Some(Eq::Complete), "ABC vs M2*, upper"),
        e("C7-(10)", Randic, AtLeast, delta(), m2, 3, 2, Some(Eq::DeltaRegular), "R vs M2*, minimum-degree lower"),
        e("C7-(11)", SumConnectivity, AtLeast, delta().pow(3, 2) / int(2).sqrt(), m2, 3, 2, Some(Eq::DeltaRegular), "X vs M2*, minimum-degree lower"),
        e("C7-(12)", Harmonic, AtLeast, delta().sqrt(), m2, 3, 2, Some(Eq::DeltaRegular), "H vs M2*, minimum-degree lower"),
        e("C7-(13)", GeometricArithmetic, AtLeast, delta().pow(2, 1), m2, 3, 2, Some(Eq::DeltaRegular), "GA vs M2*, minimum-degree lower"),
        e("C7-(14)", AtomBondConnectivity, AtLeast, delta() * (2 * d1()).sqrt(), m2, 3, 2, Some(Eq::DeltaRegular), "ABC vs M2*, minimum-degree lower"),
        e("T6L", AugmentedZagreb, AtLeast, int(1536) / int(343), SumConnectivity, 3, 1, Some(Eq::Star(8)), "AZI vs X, lower"),
        e("T6U", AugmentedZagreb, AtMost, n1().pow(13, 2) / (int(32).sqrt() * n2().pow(3, 1)), SumConnectivity, 3, 1, Some(Eq::Complete), "AZI vs X, upper"),
        e("C8", AugmentedZagreb, AtLeast, delta().pow(13, 2) / (int(32).sqrt() * d1().pow(3, 1)), SumConnectivity, 3, 2, Some(Eq::DeltaRegular), "AZI vs X, minimum-degree lower"),
        e("T7-(17)L", AugmentedZagreb, AtLeast, int(343) * int(7).sqrt() / int(216), Randic, 3, 1, Some(Eq::Star(7)), "AZI vs R, lower"),
        e("T7-(17)U", AugmentedZagreb, AtMost, n1().pow(7, 1) / (8 * n2().pow(3, 1)), Randic, 3, 1, Some(Eq::Complete), "AZI vs R, upper"),
        e("T7-(18)L", AugmentedZagreb, AtLeast, int(375) / int(64), Harmonic, 3, 1, Some(Eq::Star(5)), "AZI vs H, lower"),
        e("T7-(18)U", AugmentedZagreb, AtMost, n1().pow(7, 1) / (8 * n2().pow(3, 1)), Harmonic, 3, 1, Some(Eq::Complete), "AZI vs H, upper"),
        e("T7-(19)L", AugmentedZagreb, AtLeast, (n1() / n2()).pow(7, 2), AtomBondConnectivity, 3, 1, Some(Eq::SpanningStar), "AZI vs ABC, lower"),
        e("T7-(19)U", AugmentedZagreb, AtMost, (n1().pow(2, 1) / (2 * n2())).pow(7, 2), AtomBondConnectivity, 3, 1, Some(Eq::Complete), "AZI vs ABC, upper"),
        e("T7-(20)L", AugmentedZagreb, AtLeast, int(8), GeometricArithmetic, 3, 2, Some(Eq::Cycle), "AZI vs GA, lower"),
        e("T7-(20)U", AugmentedZagreb, AtMost, n1().pow(6, 1) / (8 * n2().pow(3, 1)), GeometricArithmetic, 3, 2, Some(Eq::Complete), "AZI vs GA, upper"),
        e("T7-(21)L", AugmentedZagreb, AtLeast, int(4), m2, 3, 1, Some(Eq::Path3), "AZI vs M2*, lower"),
        e("T7-(21)U", AugmentedZagreb, AtMost, n1().pow(4, 1) / (2 * n2()), m2, 3, 1, Some(Eq::Complete), "AZI vs M2*, upper"),
        e("C9-(22)", AugmentedZagreb, AtLeast, delta().pow(7, 1) / (8 * d1().pow(3, 1)), Randic, 3, 2, Some(Eq::DeltaRegular), "AZI vs R, minimum-degree lower"),
        e("C9-(23)", AugmentedZagreb, AtLeast, delta().pow(7, 1) / (8 * d1().pow(3, 1)), Harmonic, 3, 2, Some(Eq::DeltaRegular), "AZI vs H, minimum-degree lower"),
        e("C9-(24)", AugmentedZagreb, AtLeast, (delta().pow(2, 1) / (2 * d1())).pow(7, 2), AtomBondConnectivity, 3, 2, Some(Eq::DeltaRegular), "AZI vs ABC, minimum-degree lower"),
        e("C9-(25)", AugmentedZagreb, AtLeast, delta().pow(6, 1) / (8 * d1().pow(3, 1)), GeometricArithmetic, 3, 2, Some(Eq::DeltaRegular), "AZI vs GA, minimum-degree lower"),
        e("C9-(26)", AugmentedZagreb, AtLeast, delta().pow(4, 1) / (2 * d1()), m2, 3, 2, Some(Eq::DeltaRegular), "AZI vs M2*, minimum-degree lower"),
    ]);
    c
}

/// Looks up a catalog entry by id (case-insensitive).
pub fn find_bound<'a>(catalog: &'a [BoundSpec], id: &str) -> Option<&'a BoundSpec> {
    catalog.iter().find(|b| b.id.eq_ignore_ascii_case(id))
}
