//! Golden-table regression: the enumerated cohomological representations of
//! the three groups with trivial coefficients, their cohomology degrees and
//! Hodge types, against the packaged fixture files.

use hodgescan_core::cohomology::{cohomological_reps, hodge_bigrading};
use hodgescan_core::hodge::TwistConstant;
use hodgescan_core::lie::{build_root_system, GroupTag};
use hodgescan_core::reps::Irrep;
use hodgescan_core::scalar::{Rat, Scalar};
use std::collections::BTreeSet;

type Record = (String, String, String, usize, i64, i64, u64);

fn parse_golden(text: &str) -> BTreeSet<Record> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#') && !l.starts_with("group,"))
        .map(|l| {
            let c: Vec<&str> = l.split(',').collect();
            assert_eq!(c.len(), 7, "bad golden row {l}");
            (
                c[0].to_string(),
                c[1].replace(';', ","),
                c[2].replace(';', ","),
                c[3].parse().unwrap(),
                c[4].parse().unwrap(),
                c[5].parse().unwrap(),
                c[6].parse().unwrap(),
            )
        })
        .collect()
}

fn engine_records(group: GroupTag, tag: &str) -> BTreeSet<Record> {
    let rs = build_root_system::<Rat>(group);
    let v = Irrep::trivial(group);
    let c = TwistConstant(Rat::from_int(0));
    let mut out = BTreeSet::new();
    for rep in cohomological_reps(&rs, &v) {
        let table = hodge_bigrading(&rs, &rep, &v, &c, 0).unwrap();
        for (&(i, p, q), &dim) in &table.entries {
            out.insert((
                tag.to_string(),
                v.highest_weight.to_string(),
                rep.label.to_string(),
                i,
                p,
                q,
                dim,
            ));
        }
    }
    out
}

#[test]
fn su21_trivial_table_matches_fixture() {
    let fixture = parse_golden(include_str!("../fixtures/golden_su21.csv"));
    assert_eq!(engine_records(GroupTag::Su21, "SU21"), fixture);
}

#[test]
fn su31_trivial_table_matches_fixture() {
    let fixture = parse_golden(include_str!("../fixtures/golden_su31.csv"));
    assert_eq!(engine_records(GroupTag::Su31, "SU31"), fixture);
}

#[test]
fn sp4_trivial_table_matches_fixture() {
    let fixture = parse_golden(include_str!("../fixtures/golden_sp4.csv"));
    assert_eq!(engine_records(GroupTag::Sp4, "SP4"), fixture);
}
