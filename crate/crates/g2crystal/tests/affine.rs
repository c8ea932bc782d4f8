mod common;

use g2crystal::affine::{a_count, classify, g_count, verify_construction, AParam, BSet, Tower};
use g2crystal::g2;

#[test]
fn model_count_matches_dimension_sums() {
    let dims: Vec<u64> = (0..=5).map(g2::dim).collect();
    assert_eq!(dims, vec![1, 14, 77, 273, 748, 1729]);
    let sums: Vec<u64> = (0..=4).map(g_count).collect();
    assert_eq!(sums, vec![1, 15, 92, 365, 1113]);
    for l in 0..=8 {
        assert_eq!(a_count(l), g_count(l), "level {l}");
    }
}

#[test]
fn level_one_graph_is_the_listed_table() {
    let tower = Tower::build(1).unwrap();
    common::level_one_table(tower.level(1).unwrap()).unwrap();
}

#[test]
fn construction_checks_pass_up_to_level_four() {
    let tower = Tower::build(4).unwrap();
    for l in 1..=4 {
        let report = verify_construction(tower.level(l).unwrap(), tower.level(l - 1));
        for r in &report.results {
            assert!(r.passed(), "level {l}, {}: {:?}", r.name, r.examples);
        }
        assert_eq!(tower.level(l).unwrap().len() as u64, g_count(l));
    }
}

#[test]
fn involution_laws_hold() {
    let tower = Tower::build(3).unwrap();
    for lv in tower.levels() {
        common::involution_laws(lv).unwrap();
    }
    for l in 0..=2 {
        common::involution_negates_weight(tower.level(l).unwrap()).unwrap();
    }
}

#[test]
fn embedding_shifts_into_the_next_level() {
    let tower = Tower::build(3).unwrap();
    for l in 1..=3 {
        let (lo, hi) = (tower.level(l - 1).unwrap(), tower.level(l).unwrap());
        for &b in lo.elems() {
            let up = b.iota();
            assert!(hi.index_of(up).is_some(), "iota {b} not in level {l}");
            assert_eq!(up.iota_inv(), Some(b));
        }
    }
}

#[test]
fn classification_covers_the_terminal_set() {
    let tower = Tower::build(3).unwrap();
    for l in 1..=3 {
        let c = classify(tower.level(l).unwrap());
        assert!(c.covers_terminal(), "level {l}");
        let total: usize = [BSet::C, BSet::W, BSet::U, BSet::R].iter().map(|&s| c.members(s).len()).sum();
        assert!(total <= c.membership.len());
    }
}

#[test]
fn highest_weight_parameters_are_valid() {
    assert!(AParam::hw(0, 1, 0).is_valid(1));
    assert!(!AParam::new(0, 1, 0, 0, 2, 0).is_valid(1));
}
