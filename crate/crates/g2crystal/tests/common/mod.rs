#![allow(dead_code)]

use g2crystal::a2::{self, A2Color};
use g2crystal::affine::Level;
use g2crystal::cartan::ClassicalWeight;
use g2crystal::g2;
use g2crystal::signature::Op;

/// Number of checks made and the first failure, if any.
pub type Outcome = Result<usize, String>;

/// `f` and `e` are inverse, `f` lowers the weight by a simple root and
/// `phi - eps = <h, wt>`, on every element of `B(m Lambda_alpha + n Lambda_beta)`.
pub fn a2_axioms(m: u32, n: u32) -> Outcome {
    let mut checks = 0;
    for t in a2::enumerate(m, n) {
        let (wa, wb) = t.weight();
        for (color, root, h) in [(A2Color::Alpha, (2, -1), wa), (A2Color::Beta, (-1, 2), wb)] {
            let (e, p) = t.strings(color);
            checks += 1;
            if p as i32 - e as i32 != h {
                return Err(format!("A2 ({m},{n}) {t:?}: phi - eps != <h, wt> for {color:?}"));
            }
            if let Some(s) = t.apply(Op::F, color) {
                checks += 2;
                if s.apply(Op::E, color).as_ref() != Some(&t) {
                    return Err(format!("A2 ({m},{n}) {t:?}: e f != id for {color:?}"));
                }
                if s.weight() != (wa - root.0, wb - root.1) {
                    return Err(format!("A2 ({m},{n}) {t:?}: weight shift for {color:?}"));
                }
            }
            if let Some(s) = t.apply(Op::E, color) {
                checks += 1;
                if s.apply(Op::F, color).as_ref() != Some(&t) {
                    return Err(format!("A2 ({m},{n}) {t:?}: f e != id for {color:?}"));
                }
            }
        }
    }
    Ok(checks)
}

/// The same axioms on all tableaux of length `n` for colors 1 and 2.
pub fn g2_axioms(n: usize) -> Outcome {
    let mut checks = 0;
    for t in g2::enumerate(n) {
        let w = t.weight();
        for i in [1, 2] {
            let (e, p) = t.strings(i);
            checks += 1;
            if p as i32 - e as i32 != w.wt(i) {
                return Err(format!("G2 {t}: phi - eps != <h, wt> for color {i}"));
            }
            if let Some(s) = t.apply(Op::F, i) {
                checks += 2;
                if s.apply(Op::E, i).as_ref() != Some(&t) {
                    return Err(format!("G2 {t}: e f != id for color {i}"));
                }
                if s.weight() != w - ClassicalWeight::simple_root(i) {
                    return Err(format!("G2 {t}: weight shift for color {i}"));
                }
            }
        }
    }
    Ok(checks)
}

/// The axioms on `B^l` for all three colors.
pub fn bl_axioms(level: &Level) -> Outcome {
    let mut checks = 0;
    for g in 0..level.g_len() {
        let t = level.tableau(g);
        let w = t.weight();
        for i in 0..3 {
            let (e, p) = level.g_strings(g, i);
            checks += 1;
            if p as i32 - e as i32 != w.wt(i) {
                return Err(format!("B^{} {t}: phi - eps != <h, wt> for color {i}", level.l));
            }
            if let Some(h) = level.g_apply(Op::F, i, g) {
                checks += 2;
                if level.g_apply(Op::E, i, h) != Some(g) {
                    return Err(format!("B^{} {t}: e f != id for color {i}", level.l));
                }
                if level.tableau(h).weight() != w - ClassicalWeight::simple_root(i) {
                    return Err(format!("B^{} {t}: weight shift for color {i}", level.l));
                }
            }
            if let Some(h) = level.g_apply(Op::E, i, g) {
                checks += 1;
                if level.g_apply(Op::F, i, h) != Some(g) {
                    return Err(format!("B^{} {t}: f e != id for color {i}", level.l));
                }
            }
        }
    }
    Ok(checks)
}

/// `C_A^2 = id`, `C_A E_A = F_A C_A` and `Phi C_A = C_G Phi` on one level.
pub fn involution_laws(level: &Level) -> Outcome {
    let mut checks = 0;
    for a in 0..level.len() {
        let b = level.param(a);
        let c = b.involution();
        let ca = level.index_of(c).ok_or_else(|| format!("C_A {b} leaves the level"))?;
        checks += 3;
        if c.involution() != b {
            return Err(format!("C_A^2 {b} != {b}"));
        }
        let lhs = level.ea(a).map(|x| level.param(x).involution());
        let rhs = level.fa(ca).map(|x| level.param(x));
        if lhs != rhs {
            return Err(format!("C_A E_A {b} != F_A C_A {b}"));
        }
        if level.tableau(level.phi(ca)) != &level.tableau(level.phi(a)).involution() {
            return Err(format!("Phi C_A {b} != C_G Phi {b}"));
        }
    }
    Ok(checks)
}

/// `wt(C_A b) = -wt(b)` on one level.
pub fn involution_negates_weight(level: &Level) -> Outcome {
    for &b in level.elems() {
        let (w1, w0) = b.weight10();
        if b.involution().weight10() != (-w1, -w0) {
            return Err(format!("wt(C_A {b}) != -wt({b})"));
        }
    }
    Ok(level.len())
}

/// The `f` edges of `B^1` as listed for the level-one module, by color.
/// `9` is the empty tableau.
pub const LEVEL_ONE_EDGES: [(usize, &str, &str); 20] = [
    (0, "-6", "2"),
    (0, "-4", "3"),
    (0, "-3", "4"),
    (0, "-2", "6"),
    (0, "-1", "9"),
    (0, "9", "1"),
    (1, "1", "2"),
    (1, "4", "5"),
    (1, "6", "02"),
    (1, "02", "-6"),
    (1, "-5", "-4"),
    (1, "-2", "-1"),
    (2, "2", "3"),
    (2, "3", "4"),
    (2, "4", "6"),
    (2, "5", "01"),
    (2, "01", "-5"),
    (2, "-6", "-4"),
    (2, "-4", "-3"),
    (2, "-3", "-2"),
];

fn letter_name(t: &g2crystal::g2::GTableau) -> String {
    match t.letters() {
        [] => "9".to_string(),
        [x] => x.name().to_string(),
        _ => format!("{t}"),
    }
}

/// The full `f` and `e` graphs of `B^1` agree with [`LEVEL_ONE_EDGES`].
pub fn level_one_table(level: &Level) -> Outcome {
    if level.l != 1 || level.g_len() != 15 {
        return Err(format!("B^{} has {} elements, expected B^1 with 15", level.l, level.g_len()));
    }
    let mut f_edges = Vec::new();
    let mut e_edges = Vec::new();
    for g in 0..level.g_len() {
        for c in 0..3 {
            if let Some(h) = level.g_apply(Op::F, c, g) {
                f_edges.push((c, letter_name(level.tableau(g)), letter_name(level.tableau(h))));
            }
            if let Some(h) = level.g_apply(Op::E, c, g) {
                e_edges.push((c, letter_name(level.tableau(h)), letter_name(level.tableau(g))));
            }
        }
    }
    let mut listed: Vec<(usize, String, String)> =
        LEVEL_ONE_EDGES.iter().map(|&(c, a, b)| (c, a.to_string(), b.to_string())).collect();
    listed.sort();
    f_edges.sort();
    e_edges.sort();
    if f_edges != listed {
        return Err(format!("f edges differ: built {f_edges:?}"));
    }
    if e_edges != listed {
        return Err(format!("e edges differ: built {e_edges:?}"));
    }
    Ok(2 * listed.len())
}
