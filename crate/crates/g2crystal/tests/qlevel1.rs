use g2crystal::affine::Tower;
use g2crystal::qlevel1::fusion::{parse_word, reconstruct, format_word, items};
use g2crystal::qlevel1::module::{bi, kashiwara, crystal_limit, BASIS};
use g2crystal::qlevel1::rmatrix::rmatrix_checks;
use g2crystal::qlevel1::tensor::{apply, expected_zero_coefficient, zero_weight_singular_dim};
use g2crystal::qlevel1::xy::XY;
use g2crystal::qlevel1::*;

fn v(name: &str) -> ModVec {
    ModVec::basis(bi(name))
}

#[test]
fn q_integers_follow_root_lengths() {
    assert!(qint(1, 0).is_one());
    assert_eq!(qint(2, 1).to_string(), "q^3+q^-3");
    assert_eq!(qint(3, 2).to_string(), "q^2+1+q^-2");
    assert_eq!(qfact(3, 2), &(&qint(2, 2) * &qint(3, 2)) * &QRat::one());
}

#[test]
fn table_entries() {
    let m = V1::resolved();
    assert_eq!(m.apply(Gen::F(1), &v("1")), v("2"));
    assert_eq!(m.apply(Gen::F(2), &v("3")), v("4").scale(&qint(2, 2)));
    assert_eq!(m.apply(Gen::F(0), &v("-6")), v("2"));
    let img = m.apply(Gen::F(1), &v("6"));
    assert_eq!(img.support(), vec![bi("01"), bi("02"), bi("9")]);
}

#[test]
fn resolved_table_matches_golden_file() {
    let golden = include_str!("../data/v1_table.txt");
    let lines: Vec<&str> = golden.lines().collect();
    assert_eq!(V1::resolved().table_lines(), lines);
}

#[test]
fn every_relation_holds_on_the_resolved_table() {
    let report = verify_module_relations(&V1::resolved());
    assert_eq!(report.len(), 9 + 3 + 12);
    for r in &report {
        assert!(r.holds, "{}: {:?}", r.name, r.failures);
    }
    assert!(report.iter().any(|r| r.name.contains("e2,e1 (b = 4)")));
}

#[test]
fn transcribed_z_entry_breaks_relations() {
    let report = verify_module_relations(&V1::new(TableVariant::AsPrinted));
    let failing: Vec<&str> = report.iter().filter(|r| !r.holds).map(|r| r.name.as_str()).collect();
    assert!(failing.contains(&"[e1, f1]"));
}

#[test]
fn commutator_on_highest_vector() {
    let m = V1::resolved();
    let u = v("1");
    let c = m.apply(Gen::E(1), &m.apply(Gen::F(1), &u)).sub(&m.apply(Gen::F(1), &m.apply(Gen::E(1), &u)));
    assert_eq!(c, u);
}

#[test]
fn coproduct_of_f1_on_top_vector() {
    let m = V1::resolved();
    let w = apply(&m, Gen::F(1), &TVec::basis("1", "1"), true);
    let want = TVec::basis("2", "1").add(&TVec::basis("1", "2").scale(&XY::constant(QRat::q_pow(3))));
    assert_eq!(w, want);
}

#[test]
fn spectral_parameters_enter_through_color_zero() {
    let m = V1::resolved();
    let w = apply(&m, Gen::F(0), &TVec::basis("-6", "9"), true);
    assert_eq!(w.get("2", "9"), XY::monomial(QRat::one(), -1, 0));
    let w = apply(&m, Gen::E(0), &TVec::basis("9", "1"), true);
    assert_eq!(w.get("9", "9"), XY::monomial(QRat::one(), 0, 1));
}

#[test]
fn highest_weight_vectors() {
    let m = V1::resolved();
    let s = SingularVectors::build(&m).expect("weight-zero coefficient solves");
    for c in check_singular(&m, &s) {
        assert!(c.weight_ok && c.highest, "{c:?}");
    }
    assert_eq!(s.zero_coefficient, expected_zero_coefficient());
    assert_eq!(zero_weight_singular_dim(&m), 2);
}

#[test]
fn fusion_items_hold() {
    let m = V1::resolved();
    let s = SingularVectors::build(&m).unwrap();
    let results = verify_fusion_identities(&m, &s);
    assert_eq!(results.len(), 15);
    for r in &results {
        assert!(r.holds, "item {}: {:?}", r.id, r.note);
    }
    let printed: Vec<(u32, Option<bool>)> = results.iter().map(|r| (r.id, r.holds_as_printed)).collect();
    for (id, ok) in printed {
        match id {
            6 | 12 | 13 => assert_eq!(ok, Some(false), "item {id}"),
            15 => assert_eq!(ok, None),
            _ => assert_eq!(ok, Some(true), "item {id}"),
        }
    }
}

#[test]
fn item_nine_vanishes() {
    let item = &items()[8];
    assert_eq!(item.id, 9);
    assert!(item.coefficient.is_zero());
}

#[test]
fn missing_subscript_is_forced_by_weight() {
    let w = parse_word("e1 e2(3) e1(2) e2(3) e0 e(2) e2(3) e1 e0").unwrap();
    let fills = reconstruct(&w, (1, 0), (2, 0));
    assert_eq!(fills.len(), 1);
    assert_eq!(format_word(&fills[0]), "e1 e2(3) e1(2) e2(3) e0 e1(2) e2(3) e1 e0");
    assert!(parse_word("g1").is_err());
    assert!(parse_word("f5").is_err());
}

#[test]
fn rmatrix_relations_and_kernel_facts() {
    let checks = rmatrix_checks();
    for c in &checks {
        assert!(c.holds, "{}: {:?}", c.name, c.detail);
    }
    let rel2 = checks.iter().find(|c| c.name.starts_with("relation on (q^-6 x")).unwrap();
    assert_eq!(rel2.holds_as_printed, Some(false));
}

#[test]
fn kashiwara_operators_at_q_zero() {
    let m = V1::resolved();
    let fv6 = kashiwara(&m, 1, true, &v("6"));
    assert_eq!(crystal_limit(&fv6), Some(Some(bi("02"))));
    let fv9 = kashiwara(&m, 0, true, &v("9"));
    assert_eq!(fv9, v("1"));
    let fv1 = kashiwara(&m, 0, true, &v("1"));
    assert_eq!(crystal_limit(&fv1), Some(None));
    assert_eq!(BASIS.len(), 15);
}

#[test]
fn full_suite_passes_quickly() {
    let tower = Tower::build(1).unwrap();
    let start = std::time::Instant::now();
    let report = run_all(tower.level(1).unwrap());
    assert!(report.all_passed());
    let v9 = report.listed_v9_norm.expect("form exists");
    assert!(!v9.holds);
    assert!(start.elapsed().as_secs() < 10);
}
