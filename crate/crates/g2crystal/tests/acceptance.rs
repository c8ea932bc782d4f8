//! One line per acceptance criterion with its runtime and limit.
//! Runs without the libtest harness so the lines always reach the output.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use g2crystal::a2::{coords_in_range, from_coords, string_coords};
use g2crystal::affine::{a_count, g_count, verify_construction, Tower};
use g2crystal::cartan::dominant_weights;
use g2crystal::g2;
use g2crystal::perfect::{check_perfect, listed_minimal_elements, minimal_elements};
use g2crystal::qlevel1::run_all;
use g2crystal::signature::{reduce, reduce_naive, Sign, UWord};

type Check = Result<String, String>;

/// Id, name, check and runtime limit in seconds.
type Criterion = (u32, &'static str, fn() -> Check, Option<u64>);

fn dimensions() -> Check {
    let dims: Vec<u64> = (0..=5).map(g2::dim).collect();
    if dims != [1, 14, 77, 273, 748, 1729] {
        return Err(format!("dim B(n Lambda_1) = {dims:?}"));
    }
    let sums: Vec<u64> = (0..=8).map(g_count).collect();
    if sums[..5] != [1, 15, 92, 365, 1113] {
        return Err(format!("sums {sums:?}"));
    }
    for l in 0..=8 {
        if a_count(l) != sums[l as usize] {
            return Err(format!("level {l}: model {} vs {}", a_count(l), sums[l as usize]));
        }
    }
    Ok(format!("sums {sums:?}"))
}

fn level_one() -> Check {
    let tower = Tower::build(1).map_err(|e| e.to_string())?;
    let n = common::level_one_table(tower.level(1).unwrap())?;
    Ok(format!("15 vertices, {n} listed edges reproduced"))
}

fn construction() -> Check {
    let tower = Tower::build(4).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for l in 1..=4 {
        let r = verify_construction(tower.level(l).unwrap(), tower.level(l - 1));
        if let Some(bad) = r.results.iter().find(|r| !r.passed()) {
            return Err(format!("level {l}: {} fails {} times", bad.name, bad.failures));
        }
        checked += r.results.iter().map(|r| r.checked).sum::<usize>();
    }
    Ok(format!("{checked} instances at l = 1..4, {} elements at l = 4", tower.level(4).unwrap().len()))
}

fn minimal() -> Check {
    let tower = Tower::build(7).map_err(|e| e.to_string())?;
    let mut counts = Vec::new();
    for l in 1..=7 {
        let found: Vec<_> = minimal_elements(tower.level(l).unwrap()).into_iter().map(|m| m.tableau).collect();
        if found != listed_minimal_elements(l) || found.len() != dominant_weights(l).len() {
            return Err(format!("level {l}: {} minimal elements differ from the listing", found.len()));
        }
        counts.push(found.len());
    }
    if counts != [2, 4, 6, 9, 12, 16, 20] {
        return Err(format!("counts {counts:?}"));
    }
    Ok(format!("counts {counts:?}"))
}

fn perfectness() -> Check {
    let tower = Tower::build(3).map_err(|e| e.to_string())?;
    let mut sizes = Vec::new();
    for l in 1..=3 {
        let r = check_perfect(tower.level(l).unwrap());
        if !r.all_passed() {
            return Err(format!("level {l}: {r:?}"));
        }
        sizes.push(r.square_size);
    }
    if sizes != [225, 8464, 133225] {
        return Err(format!("square sizes {sizes:?}"));
    }
    Ok(format!("square sizes {sizes:?}, each connected"))
}

fn involution() -> Check {
    let tower = Tower::build(3).map_err(|e| e.to_string())?;
    let mut n = 0;
    for lv in tower.levels() {
        n += common::involution_laws(lv)?;
    }
    for l in 0..=2 {
        n += common::involution_negates_weight(tower.level(l).unwrap())?;
    }
    Ok(format!("{n} identities"))
}

fn qmodule() -> Check {
    let tower = Tower::build(1).map_err(|e| e.to_string())?;
    let r = run_all(tower.level(1).unwrap());
    if !r.all_passed() {
        return Err("a module relation, singular vector, fusion item or R-matrix fact fails".into());
    }
    Ok(format!(
        "{} relations, {} highest weight vectors, {} fusion items, {} R-matrix facts",
        r.relations.len(),
        r.singular.len(),
        r.fusion.len(),
        r.rmatrix.len()
    ))
}

fn properties() -> Check {
    let mut n = 0;
    for m in 0..=4 {
        for k in 0..=4 {
            n += common::a2_axioms(m, k)?;
        }
    }
    for k in 0..=3 {
        n += common::g2_axioms(k)?;
    }
    let tower = Tower::build(4).map_err(|e| e.to_string())?;
    for lv in tower.levels() {
        n += common::bl_axioms(lv)?;
    }

    let cases = 10_000;
    let words = prop::collection::vec((prop_oneof![Just(Sign::Plus), Just(Sign::Minus), Just(Sign::Zero)], 0usize..8), 0..40);
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner
        .run(&words, |v| {
            let (symbols, positions) = v.into_iter().unzip();
            let w = UWord::from_parts(symbols, positions).unwrap();
            prop_assert_eq!(reduce(&w), reduce_naive(&w));
            Ok(())
        })
        .map_err(|e| format!("confluence: {e}"))?;

    let mut trips = 0;
    for m in 0..=4 {
        for k in 0..=4 {
            for c in coords_in_range(m, k) {
                let t = from_coords(m, k, c).map_err(|e| e.to_string())?;
                if string_coords(&t) != c {
                    return Err(format!("round trip fails at ({m},{k}) {c:?}"));
                }
                trips += 1;
            }
        }
    }
    Ok(format!("{n} axiom checks, {cases} random words, {trips} round trips"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "dimension identities", dimensions, Some(1)),
        (2, "level-one exactness", level_one, Some(1)),
        (3, "construction axioms", construction, Some(30)),
        (4, "minimal elements", minimal, None),
        (5, "perfectness", perfectness, Some(60)),
        (6, "involution laws", involution, None),
        (7, "q-module suite", qmodule, Some(10)),
        (8, "property suites", properties, None),
    ];
    let mut failed = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let in_time = limit.is_none_or(|s| took < Duration::from_secs(s));
        let limit_text = limit.map_or("no limit".to_string(), |s| format!("limit {s} s"));
        let (mark, detail) = match (&result, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; too slow")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if mark == "FAIL" {
            failed += 1;
        }
        println!("criterion {id} {mark} {name}: {detail} ({:.3} s, {limit_text})", took.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
