mod common;

use proptest::prelude::*;

use g2crystal::a2::{coords_in_range, from_coords, string_coords, StringCoords};
use g2crystal::affine::Tower;
use g2crystal::signature::{acting_position, eps_phi, reduce, reduce_naive, Op, Sign, UWord};

fn word() -> impl Strategy<Value = UWord> {
    prop::collection::vec((prop_oneof![Just(Sign::Plus), Just(Sign::Minus), Just(Sign::Zero)], 0usize..8), 0..40)
        .prop_map(|v| {
            let (symbols, positions) = v.into_iter().unzip();
            UWord::from_parts(symbols, positions).unwrap()
        })
}

fn shape_and_coords() -> impl Strategy<Value = (u32, u32, StringCoords)> {
    (0u32..=6, 0u32..=6).prop_flat_map(|(m, n)| {
        let all = coords_in_range(m, n);
        (Just(m), Just(n), prop::sample::select(all))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn stack_and_naive_reduction_agree(w in word()) {
        let r = reduce(&w);
        prop_assert_eq!(&r, &reduce_naive(&w));
        prop_assert!(r.is_reduced());
        prop_assert_eq!(reduce(&r), r.clone());
    }

    #[test]
    fn acting_positions_come_from_the_reduced_word(w in word()) {
        let r = reduce(&w);
        let (eps, phi) = eps_phi(&w);
        let minus = r.symbols.iter().filter(|&&s| s == Sign::Minus).count() as u32;
        let plus = r.symbols.iter().filter(|&&s| s == Sign::Plus).count() as u32;
        prop_assert_eq!((eps, phi), (minus, plus));
        prop_assert_eq!(acting_position(Op::F, &w).is_some(), phi > 0);
        prop_assert_eq!(acting_position(Op::E, &w).is_some(), eps > 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn string_coordinates_round_trip((m, n, c) in shape_and_coords()) {
        let t = from_coords(m, n, c).unwrap();
        prop_assert_eq!(string_coords(&t), c);
    }

    #[test]
    fn out_of_range_coordinates_are_rejected(m in 0u32..=4, n in 0u32..=4, p in 0u32..8, q in 0u32..8, r in 0u32..8) {
        let c = StringCoords { p, q, r };
        prop_assert_eq!(from_coords(m, n, c).is_ok(), c.in_range(m, n));
    }
}

#[test]
fn a2_crystals_satisfy_the_axioms() {
    for m in 0..=4 {
        for n in 0..=4 {
            common::a2_axioms(m, n).unwrap();
        }
    }
}

#[test]
fn g2_crystals_satisfy_the_axioms() {
    for n in 0..=3 {
        common::g2_axioms(n).unwrap();
    }
}

#[test]
fn bl_satisfies_the_axioms() {
    let tower = Tower::build(4).unwrap();
    for lv in tower.levels() {
        common::bl_axioms(lv).unwrap();
    }
}

#[test]
fn every_shape_round_trips_exhaustively() {
    for m in 0..=4 {
        for n in 0..=4 {
            for c in coords_in_range(m, n) {
                assert_eq!(string_coords(&from_coords(m, n, c).unwrap()), c);
            }
        }
    }
}
