//! Built-in data for the three regimes.
//!
//! Curve rows are the intersection numbers with `(H11, H2, Delta)`. The
//! `stated` maps record every pairing value that is known independently of
//! the row, so that validation catches transcription errors.

use std::collections::BTreeMap;

use super::{
    CatalogData, ContainmentFact, CurveEntry, DivisorEntry, DivisorFact, Exactness,
    ExpectedChamber, LocusEntry, LocusKind, LocusSet, Regime, SpaceId, Stated, WallSpec,
};
use crate::lin::{parse_rational, NSVector};

pub(crate) fn data(space: SpaceId) -> CatalogData {
    match space.regime() {
        Regime::Deg2 => deg2(space),
        Regime::Deg3General => deg3_general(space),
        Regime::Deg3Lines => deg3_lines(space),
    }
}

const Q1: &str = "Q[(1)^*]";
const Q11: &str = "Q[(1,1)^*]";
const Q2: &str = "Q[(2)^*]";
const BDY: &str = "boundary";

const C1: &str = "C[(1)^*]";
const C11: &str = "C[(1,1)^*]";
const C2: &str = "C[(2)^*]";
const C111: &str = "C[(1,1,1)^*]";
const C22: &str = "C[(2,2)^*]";
const C3: &str = "C[(3)^*]";
const C221: &str = "C[(2,2,1)^*]";
const C32: &str = "C[(3,2)^*]";
const C21: &str = "C[(2,1)^*]";
const Q1L: &str = "Q((1)^*)L";
const Q11L: &str = "Q((1,1)^*)L";
const Q2L: &str = "Q((2)^*)L";

fn set(names: &[&str]) -> LocusSet {
    LocusSet::from_names(names.iter().copied())
}

fn divisor(name: &str, class: NSVector, fact: DivisorFact, note: Option<&str>) -> DivisorEntry {
    DivisorEntry {
        name: name.into(),
        class,
        fact,
        note: note.map(Into::into),
    }
}

fn bpf(name: &str, class: NSVector) -> DivisorEntry {
    divisor(name, class, DivisorFact::BasePointFree, None)
}

fn exact(name: &str, class: NSVector, loci: &[&str], note: Option<&str>) -> DivisorEntry {
    divisor(name, class, DivisorFact::ExactSbl(set(loci)), note)
}

fn stated(pairs: &[(&str, &str)]) -> BTreeMap<String, Stated> {
    pairs
        .iter()
        .map(|(d, v)| {
            let s = match *v {
                "<0" => Stated::Negative,
                ">0" => Stated::Positive,
                x => Stated::Value(parse_rational(x).expect("builtin rational")),
            };
            (d.to_string(), s)
        })
        .collect()
}

fn curve(name: &str, row: [i64; 3], covers: Option<&str>, st: &[(&str, &str)]) -> CurveEntry {
    CurveEntry {
        name: name.into(),
        row: NSVector::from_ints(row[0], row[1], row[2]),
        covers: covers.map(Into::into),
        exactness: Exactness::Exact,
        stated: stated(st),
    }
}

/// A curve known only through the signs of its pairings; the row is the
/// normalized sign pattern.
fn sign_curve(name: &str, row: [i64; 3], covers: &str, st: &[(&str, &str)]) -> CurveEntry {
    CurveEntry {
        exactness: Exactness::SignOnly,
        ..curve(name, row, Some(covers), st)
    }
}

fn row_stated(row: [i64; 3]) -> [(&'static str, String); 3] {
    [
        ("H11", row[0].to_string()),
        ("H2", row[1].to_string()),
        ("Delta", row[2].to_string()),
    ]
}

/// Exact curve whose printed data are its row plus extra pairings.
fn printed(name: &str, row: [i64; 3], covers: Option<&str>, extra: &[(&str, &str)]) -> CurveEntry {
    let r = row_stated(row);
    let mut st: Vec<(&str, &str)> = r.iter().map(|(d, v)| (*d, v.as_str())).collect();
    st.extend_from_slice(extra);
    curve(name, row, covers, &st)
}

fn loci(names: &[&str]) -> Vec<LocusEntry> {
    names
        .iter()
        .map(|&n| LocusEntry {
            name: n.into(),
            kind: if n == BDY {
                LocusKind::Boundary
            } else if n.ends_with(")L") {
                LocusKind::Reducible
            } else {
                LocusKind::SchubertMaps
            },
        })
        .collect()
}

fn contain(pairs: &[(&str, &str)]) -> Vec<ContainmentFact> {
    pairs
        .iter()
        .map(|(a, b)| ContainmentFact {
            sub: a.to_string(),
            sup: b.to_string(),
        })
        .collect()
}

fn wall(s: &str) -> WallSpec {
    s.parse().expect("builtin wall")
}

fn item(id: u32, boundary: &[&str], locus: &[&str], walls: &[&str]) -> ExpectedChamber {
    ExpectedChamber {
        id,
        boundary: boundary.iter().map(|s| s.to_string()).collect(),
        locus: set(locus),
        walls: walls.iter().map(|w| wall(w)).collect(),
    }
}

const NEF_WALLS: [&str; 3] = ["[H11,T]", "[T,H2]", "[H11,H2]"];

fn deg2(space: SpaceId) -> CatalogData {
    let divisors = vec![
        bpf("H11", NSVector::h11()),
        bpf("H2", NSVector::h2()),
        bpf("T", NSVector::over(1, 1, 1, 2)),
        exact("Delta", NSVector::delta(), &[BDY], None),
        exact("Ddeg", NSVector::over(-1, 3, -1, 4), &[Q11], None),
        exact("Dunb", NSVector::over(3, -1, -1, 4), &[Q2], None),
        exact(
            "P",
            NSVector::over(3, 3, -1, 4),
            &[Q1],
            Some("class solved from C1, C2, C3 with values 0, 0, 1"),
        ),
    ];
    let curves = vec![
        printed("C1", [1, 0, 3], Some(Q11), &[("P", "0")]),
        printed("C2", [0, 1, 3], Some(Q2), &[("P", "0")]),
        printed("C3", [1, 1, 2], None, &[("P", "1")]),
        printed("C4", [2, 0, 0], Some(Q11), &[]),
        printed("C5", [0, 2, 0], Some(Q2), &[]),
        printed("C6", [1, 0, -1], Some(BDY), &[]),
        printed("C7", [0, 1, -1], Some(BDY), &[]),
        printed("C8", [0, 0, 1], Some(Q1), &[]),
    ];
    let expected = vec![
        item(1, &["H11", "H2", "T"], &[], &NEF_WALLS),
        item(2, &["H11", "H2", "P"], &[Q1], &["(H11,P]", "(H2,P]"]),
        item(3, &["H2", "Ddeg", "P"], &[Q11], &["(H2,Ddeg]", "(P,Ddeg]"]),
        item(4, &["H11", "Dunb", "P"], &[Q2], &["(H11,Dunb]", "(P,Dunb]"]),
        item(5, &["P", "Ddeg", "Dunb"], &[Q11, Q2], &["(Ddeg,Dunb)"]),
        item(6, &["H2", "Ddeg", "Delta"], &[BDY, Q11], &["(Ddeg,Delta)"]),
        item(7, &["H11", "Dunb", "Delta"], &[BDY, Q2], &["(Dunb,Delta)"]),
        item(
            8,
            &["H11", "T", "H2", "Delta"],
            &[BDY],
            &["(H2,Delta]", "(H11,Delta]"],
        ),
    ];
    CatalogData {
        space,
        divisors,
        curves,
        loci: loci(&[Q1, Q11, Q2, BDY]),
        containments: contain(&[(Q1, Q11), (Q1, Q2)]),
        expected,
    }
}

/// Divisors shared by both degree-three regimes.
fn deg3_common() -> Vec<DivisorEntry> {
    vec![
        bpf("H11", NSVector::h11()),
        bpf("H2", NSVector::h2()),
        bpf("T", NSVector::over(2, 2, 2, 3)),
        exact("Delta", NSVector::delta(), &[BDY], None),
        exact(
            "P",
            NSVector::over(2, 2, -1, 3),
            &[C11, C2, Q1L],
            Some("class solved from B1, B2, B3 with values 0, 0, 1"),
        ),
        exact(
            "F",
            NSVector::over(5, 5, -1, 3),
            &[C1, Q1L],
            Some("class solved from B4, B5, B3 with values 0, 0, 2"),
        ),
    ]
}

fn deg3_general(space: SpaceId) -> CatalogData {
    let mut divisors = deg3_common();
    divisors.extend([
        exact("Ddeg", NSVector::over(-1, 2, -1, 3), &[C221, Q11L], None),
        exact("Dunb", NSVector::over(2, -1, -1, 3), &[C32, Q2L], None),
        exact(
            "S",
            NSVector::over(-1, 5, -1, 3),
            &[C111, Q11L],
            Some("class solved from B8, B9, B10 with values 0, 0, 2"),
        ),
        exact("S'", NSVector::over(5, -1, -1, 3), &[C3, Q2L], None),
        divisor(
            "U",
            NSVector::from_ints(2, 5, -1),
            DivisorFact::SblUpperBound(set(&[C11, Q1L])),
            Some("bounded by the meet of the loci of P and S"),
        ),
        divisor(
            "U'",
            NSVector::from_ints(5, 2, -1),
            DivisorFact::SblUpperBound(set(&[C2, Q1L])),
            Some("bounded by the meet of the loci of P and S'"),
        ),
        divisor("R", NSVector::from_ints(1, 1, -1), DivisorFact::None, None),
        divisor("V", NSVector::from_ints(1, 4, -2), DivisorFact::None, None),
        divisor("V'", NSVector::from_ints(4, 1, -2), DivisorFact::None, None),
    ]);
    let curves = vec![
        printed("B1", [2, 0, 4], Some(C111), &[("P", "0"), ("S", "-2")]),
        printed("B2", [0, 2, 4], Some(C3), &[("P", "0")]),
        printed("B3", [1, 0, -1], Some(BDY), &[("P", "1"), ("F", "2")]),
        printed("B4", [1, 0, 5], Some(C11), &[("P", "-1"), ("F", "0")]),
        printed("B5", [0, 1, 5], Some(C2), &[("P", "-1"), ("F", "0")]),
        sign_curve(
            "B6",
            [0, 0, 1],
            Q1L,
            &[
                ("H11", "0"),
                ("H2", "0"),
                ("Delta", ">0"),
                ("P", "<0"),
                ("F", "<0"),
            ],
        ),
        sign_curve(
            "B7",
            [0, 0, 1],
            C1,
            &[("H11", "0"), ("H2", "0"), ("Delta", ">0"), ("F", "<0")],
        ),
        printed("B8", [0, 1, 5], None, &[("S", "0")]),
        printed("B9", [1, 0, -1], Some(BDY), &[("S", "0")]),
        printed("B10", [0, 1, -1], Some(BDY), &[("S", "2")]),
        printed("B11", [1, 0, 2], Some(Q11L), &[("S", "-1")]),
        curve("B11'", [0, 1, 2], Some(Q2L), &[("S'", "-1")]),
        printed("B12", [0, 1, -1], Some(BDY), &[]),
        printed("B13", [1, 2, 3], Some(C32), &[]),
        curve("B13'", [2, 1, 3], Some(C221), &[]),
        printed("B14", [1, 5, 0], Some(C32), &[]),
        curve("B14'", [5, 1, 0], Some(C221), &[]),
        printed("B15", [1, 1, 4], Some(C22), &[]),
        printed("B16", [9, 0, 0], Some(C111), &[]),
        printed("B17", [0, 9, 0], Some(C3), &[]),
        printed("B18", [2, 0, 0], Some(C1), &[]),
        printed("B19", [0, 2, 0], Some(C1), &[]),
    ];
    let expected = vec![
        item(1, &["H11", "H2", "T"], &[], &NEF_WALLS),
        item(
            2,
            &["Delta", "H11", "T", "H2"],
            &[BDY],
            &["(H11,Delta]", "(H2,Delta]"],
        ),
        item(3, &["H2", "Delta", "S"], &[C111, BDY], &["(Delta,S)"]),
        item(4, &["Ddeg", "S", "Delta"], &[C221, BDY], &["(Delta,Ddeg)"]),
        item(5, &["H11", "Delta", "S'"], &[C3, BDY], &["(Delta,S')"]),
        item(6, &["Dunb", "S'", "Delta"], &[C32, BDY], &["(Delta,Dunb)"]),
        item(
            7,
            &["Ddeg", "R", "V"],
            &[C221, C3, Q2L, Q11L],
            &["(Ddeg,R)"],
        ),
        item(
            8,
            &["Dunb", "R", "V'"],
            &[C32, C111, Q11L, Q2L],
            &["(Dunb,R)"],
        ),
        item(
            9,
            &["Ddeg", "Dunb", "R"],
            &[C32, C221, Q2L, Q11L],
            &["(Ddeg,Dunb)"],
        ),
        item(
            10,
            &["Ddeg", "S", "V"],
            &[C221, Q11L],
            &["(V,Ddeg]", "(S,Ddeg]"],
        ),
        item(
            11,
            &["Dunb", "S'", "V'"],
            &[C32, Q2L],
            &["(V',Dunb]", "(S',Dunb]"],
        ),
        item(12, &["F", "H11", "H2"], &[C1, Q1L], &["(H11,F]", "(H2,F]"]),
        item(
            13,
            &["P", "U", "F", "U'"],
            &[C11, C2, Q1L],
            &["(U,P]", "(U',P]"],
        ),
        item(14, &["S", "H2", "U"], &[C111, Q11L], &["(U,S]", "(H2,S]"]),
        item(
            15,
            &["S'", "H11", "U'"],
            &[C3, Q2L],
            &["(U',S']", "(H11,S']"],
        ),
        item(16, &["F", "H2", "U"], &[C11, Q1L], &["(U,F)", "(U,H2)"]),
        item(17, &["F", "H11", "U'"], &[C2, Q1L], &["(U',F)", "(U',H11)"]),
        item(18, &["P", "S", "U"], &[C111, C2, Q11L], &["(P,S)"]),
        item(19, &["P", "S'", "U'"], &[C11, C3, Q2L], &["(P,S')"]),
        item(20, &["P", "V", "R", "V'"], &[C111, C22, C3, Q11L, Q2L], &[]),
        item(21, &["P", "S", "V"], &[C111, C22, Q11L], &[]),
        item(22, &["P", "S'", "V'"], &[C3, C22, Q2L], &[]),
    ];
    CatalogData {
        space,
        divisors,
        curves,
        loci: loci(&[C1, C11, C2, C111, C22, C3, C221, C32, Q1L, Q11L, Q2L, BDY]),
        containments: contain(&[
            (C1, C11),
            (C1, C2),
            (C11, C111),
            (C11, C22),
            (C2, C3),
            (C2, C22),
            (C111, C221),
            (C22, C221),
            (C22, C32),
            (C3, C32),
            (Q1L, Q11L),
            (Q1L, Q2L),
            (Q11L, BDY),
            (Q2L, BDY),
            (Q1L, BDY),
        ]),
        expected,
    }
}

fn deg3_lines(space: SpaceId) -> CatalogData {
    let mut divisors = deg3_common();
    divisors.extend([
        exact("Ddeg", NSVector::over(-1, 2, -1, 3), &[C21, Q11L], None),
        exact("Dunb", NSVector::over(5, -1, -1, 3), &[C3, Q2L], None),
        exact("S", NSVector::over(-1, 5, -1, 3), &[C11, Q11L], None),
        divisor(
            "U",
            NSVector::from_ints(2, 5, -1),
            DivisorFact::SblUpperBound(set(&[C11, Q1L])),
            Some("bounded by the meet of the loci of P and S"),
        ),
        divisor(
            "U'",
            NSVector::from_ints(5, 2, -1),
            DivisorFact::SblUpperBound(set(&[C2, Q1L])),
            Some("bounded by the meet of the loci of P and Dunb"),
        ),
    ]);
    let curves = vec![
        printed("B3", [1, 0, -1], Some(BDY), &[("P", "1"), ("F", "2")]),
        printed("B12", [0, 1, -1], Some(BDY), &[]),
        sign_curve("B16", [1, 0, 0], C11, &[]),
        sign_curve("B17", [0, 1, 0], C3, &[]),
        printed("A1", [5, 1, 0], Some(C21), &[("S", "0")]),
        sign_curve(
            "B6",
            [0, 0, 1],
            Q1L,
            &[
                ("H11", "0"),
                ("H2", "0"),
                ("Delta", ">0"),
                ("P", "<0"),
                ("F", "<0"),
            ],
        ),
        sign_curve(
            "B7",
            [0, 0, 1],
            C1,
            &[("H11", "0"), ("H2", "0"), ("Delta", ">0"), ("F", "<0")],
        ),
        printed("A2", [0, 2, 4], Some(C3), &[]),
        printed("B15", [1, 1, 4], Some(C21), &[]),
        printed("B11", [1, 0, 2], Some(Q11L), &[("S", "-1")]),
        curve("B11'", [0, 1, 2], Some(Q2L), &[]),
        printed("B4", [1, 0, 5], Some(C11), &[("P", "-1"), ("F", "0")]),
        printed("B5", [0, 1, 5], Some(C2), &[("P", "-1"), ("F", "0")]),
    ];
    let expected = vec![
        item(1, &["H11", "H2", "T"], &[], &NEF_WALLS),
        item(
            2,
            &["Delta", "H11", "T", "H2"],
            &[BDY],
            &["(H11,Delta]", "(H2,Delta]"],
        ),
        item(3, &["H2", "Delta", "S"], &[C11, BDY], &["(Delta,S)"]),
        item(4, &["Ddeg", "S", "Delta"], &[C21, BDY], &["(Delta,Ddeg)"]),
        item(
            5,
            &["Ddeg", "P", "S"],
            &[C21, Q11L],
            &["(P,Ddeg]", "(S,Ddeg]"],
        ),
        item(
            6,
            &["Dunb", "Ddeg", "P"],
            &[C3, Q2L, C21, Q11L],
            &["(Ddeg,Dunb)"],
        ),
        item(7, &["Dunb", "H11", "Delta"], &[C3, BDY], &["(Dunb,Delta)"]),
        item(
            8,
            &["Dunb", "H11", "U'"],
            &[C3, Q2L],
            &["(H11,Dunb]", "(U',Dunb]"],
        ),
        item(9, &["Dunb", "P", "U'"], &[C3, Q2L, C11], &["(P,Dunb)"]),
        item(
            10,
            &["P", "U", "F", "U'"],
            &[C11, C2, Q1L],
            &["(U,P]", "(U',P]"],
        ),
        item(11, &["S", "P", "U"], &[C11, C2, Q11L], &["(P,S)"]),
        item(12, &["S", "U", "H2"], &[C11, Q11L], &["(H2,S]", "(U,S]"]),
        item(13, &["U", "F", "H2"], &[C11, Q1L], &["(U,H2)", "(U,F)"]),
        item(14, &["H11", "F", "U'"], &[C2, Q1L], &["(U',F)", "(U',H11)"]),
        item(15, &["H11", "H2", "F"], &[C1, Q1L], &["(H11,F]", "(H2,F]"]),
    ];
    CatalogData {
        space,
        divisors,
        curves,
        loci: loci(&[C1, C11, C2, C21, C3, Q1L, Q11L, Q2L, BDY]),
        containments: contain(&[
            (C1, C11),
            (C1, C2),
            (C11, C21),
            (C2, C21),
            (C2, C3),
            (Q1L, Q11L),
            (Q1L, Q2L),
            (Q11L, BDY),
            (Q2L, BDY),
            (Q1L, BDY),
        ]),
        expected,
    }
}
