//! Exhaustive checks of the construction on one level.

use serde::Serialize;

use crate::cartan::ClassicalWeight;
use crate::signature::Op;

use super::{phi_by_highest_weights, Level};

const EXAMPLES: usize = 5;

/// Outcome of one property over all elements.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    /// The first few counterexamples.
    pub examples: Vec<String>,
}

impl AxiomResult {
    fn new(name: &'static str) -> Self {
        AxiomResult { name, checked: 0, failures: 0, examples: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < EXAMPLES {
                self.examples.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub level: u32,
    pub results: Vec<AxiomResult>,
}

impl ConstructionReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

fn depth(mut a: usize, step: impl Fn(usize) -> Option<usize>) -> i32 {
    let mut n = 0;
    while let Some(b) = step(a) {
        a = b;
        n += 1;
    }
    n
}

/// Check the model axioms, the intertwining properties of `Phi` and the
/// crystal axioms of the resulting affine crystal. `prev` enables the
/// embedding check against the level below.
pub fn verify_construction(level: &Level, prev: Option<&Level>) -> ConstructionReport {
    let n = level.len();
    let show = |a: usize| level.param(a).to_string();
    let tab = |g: usize| level.tableau(g).to_string();
    let mut results = Vec::new();

    let mut c1 = AxiomResult::new("C1 E_A and F_A are inverse");
    let mut c2 = AxiomResult::new("C2 E_A f_0 = f_0 E_A");
    let mut c3 = AxiomResult::new("C3 F_A-depth - E_A-depth = -2 wt_1 - wt_0");
    let mut wt = AxiomResult::new("E_A raises -2 wt_1 - wt_0 by 2");
    let mut phi0 = AxiomResult::new("phi_0(E_A b) = phi_0(b)");
    let mut inj = AxiomResult::new("E_A is injective");
    let mut seen = vec![None; n];
    for a in 0..n {
        let b = level.param(a);
        if let Some(x) = level.ea(a) {
            c1.check(level.fa(x) == Some(a), || format!("F_A E_A {} != itself", show(a)));
            wt.check(level.param(x).weight_ea() == b.weight_ea() + 2, || show(a));
            let p0 = |y| depth(y, |z| level.a_apply(Op::F, 0, z));
            phi0.check(p0(x) == p0(a), || show(a));
            inj.check(seen[x].replace(a).is_none(), || format!("{} hit twice", show(x)));
        }
        if let Some(x) = level.fa(a) {
            c1.check(level.ea(x) == Some(a), || format!("E_A F_A {} != itself", show(a)));
        }
        if let Some(f) = level.a_apply(Op::F, 0, a) {
            if let (Some(x), Some(y)) = (level.ea(a), level.ea(f)) {
                c2.check(level.a_apply(Op::F, 0, x) == Some(y), || show(a));
            }
        }
        let fd = depth(a, |z| level.fa(z));
        let ed = depth(a, |z| level.ea(z));
        c3.check(fd - ed == b.weight_ea(), || format!("{}: {fd} - {ed} != {}", show(a), b.weight_ea()));
    }
    results.extend([c1, c2, c3, wt, phi0, inj]);

    let mut e1 = AxiomResult::new("E1 e_1, f_1 commute with Phi");
    let mut e2 = AxiomResult::new("E2 e_2 Phi = Phi E_A, f_2 Phi = Phi F_A");
    let mut e3 = AxiomResult::new("E3 wt_1 of Phi(b) = wt_1(b)");
    let mut e4 = AxiomResult::new("E4 wt_2 of Phi(b) = -2 wt_1(b) - wt_0(b)");
    let mut e5 = AxiomResult::new("E5 e_0, f_0 vanish together");
    let mut sym = AxiomResult::new("Phi C_A = C_G Phi");
    let mut bij = AxiomResult::new("Phi is a bijection");
    let mut used = vec![false; level.g_len()];
    for a in 0..n {
        let g = level.phi(a);
        bij.check(!std::mem::replace(&mut used[g], true), || tab(g));
        for op in [Op::E, Op::F] {
            let lhs = level.a_apply(op, 1, a).map(|x| level.phi(x));
            e1.check(lhs == level.g_apply(op, 1, g), || format!("{op:?} at {}", show(a)));
            let lhs = level.a_op(op, 2, a).map(|x| level.phi(x));
            e2.check(lhs == level.g_apply(op, 2, g), || format!("{op:?} at {}", show(a)));
        }
        let (w1, w0) = level.param(a).weight10();
        let gw = level.tableau(g).weight();
        e3.check(gw.m1 == w1, || show(a));
        e4.check(gw.m2 == -2 * w1 - w0, || show(a));
        for op in [Op::E, Op::F] {
            let zero_a = level.a_apply(op, 0, a).is_none();
            let zero_g = level.g_apply(op, 0, g).is_none();
            e5.check(zero_a == zero_g, || show(a));
        }
        let ca = level.index_of(level.param(a).involution()).expect("C_A preserves A");
        let cg = level.tableau(g).involution();
        sym.check(level.tableau(level.phi(ca)) == &cg, || show(a));
    }
    results.extend([e1, e2, e3, e4, e5, sym, bij]);

    let mut d1 = AxiomResult::new("D1 f_0 f_2 = f_2 f_0, e_0 e_2 = e_2 e_0");
    let mut inv = AxiomResult::new("f_i and e_i are inverse");
    let mut shift = AxiomResult::new("wt(f_i b) = wt(b) - alpha_i");
    let mut pairing = AxiomResult::new("phi_i - eps_i = <h_i, wt>");
    for g in 0..level.g_len() {
        for op in [Op::E, Op::F] {
            let a = level.g_apply(op, 0, g).and_then(|x| level.g_apply(op, 2, x));
            let b = level.g_apply(op, 2, g).and_then(|x| level.g_apply(op, 0, x));
            d1.check(a == b, || format!("{op:?} at {}", tab(g)));
        }
        let w = level.tableau(g).weight();
        for i in 0..3 {
            if let Some(x) = level.g_apply(Op::F, i, g) {
                inv.check(level.g_apply(Op::E, i, x) == Some(g), || format!("color {i} at {}", tab(g)));
                let expect = w - ClassicalWeight::simple_root(i);
                shift.check(level.tableau(x).weight() == expect, || format!("color {i} at {}", tab(g)));
            }
            let (e, p) = level.g_strings(g, i);
            pairing.check(p as i32 - e as i32 == w.wt(i), || format!("color {i} at {}", tab(g)));
        }
    }
    results.extend([d1, inv, shift, pairing]);

    let mut hw = AxiomResult::new("Phi equals the highest weight matching");
    match phi_by_highest_weights(level) {
        Ok(other) => {
            for (a, &g) in other.iter().enumerate() {
                hw.check(g == level.phi(a), || show(a));
            }
        }
        Err(e) => hw.check(false, || e.to_string()),
    }
    results.push(hw);

    if let Some(p) = prev {
        let mut emb = AxiomResult::new("Phi(iota b) = Phi(b)");
        for a in 0..p.len() {
            let up = level.index_of(p.param(a).iota()).expect("iota stays in range");
            emb.check(level.tableau(level.phi(up)) == p.tableau(p.phi(a)), || show(up));
        }
        results.push(emb);
    }
    ConstructionReport { level: level.l, results }
}
