//! Closed-form values of `Phi` on seed elements of the level-`l` part of `A`.
//!
//! Each rule produces pairs (parameter, tableau). The tableau side is either an
//! explicit word or an explicit word moved by G2 operators; the parameter side
//! is reached by applying A2 operators to a highest weight element.

use serde::Serialize;

use crate::g2::{strip_c, strip_wbar, GLetter, GLetter::*, GTableau};
use crate::signature::Op;

use super::{AParam, Level};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AnchorRule {
    /// `f_0^p hw(0, l, l) -> [6^p, -2^{l-p}]` and the mirrored lowest weight string.
    URElement,
    /// `f_0^p hw(0, k, l) -> e_2^{l-k} [6^p, -2^{l-p}]`.
    UElement,
    /// Closed forms of the previous rule.
    UElementClosed,
    /// `f_1^q f_0^l hw(0, k, l) -> f_1^q e_2^{l-k} [6^l]`.
    Hamidashi,
    /// Highest weight elements `hw(i, l - i, j)`.
    AllHighest,
    /// `f_0^p hw(i, l - i, j)`.
    F0pR,
    /// `f_1^q f_0^p hw(i, l - i, j)` for `0 <= q <= y + j - (i - p)_+`.
    F1qF0p,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub rule: AnchorRule,
    pub param: AParam,
    pub tableau: GTableau,
}

fn rep(x: GLetter, n: i64) -> Vec<GLetter> {
    vec![x; n.max(0) as usize]
}

fn word(parts: Vec<Vec<GLetter>>) -> GTableau {
    GTableau::from_letters(parts.into_iter().flatten().collect())
}

/// Tableau assigned to `f_0^p hw(i, l - i, j)`.
fn f0p_tableau(l: i64, i: i64, j: i64, p: i64) -> GTableau {
    let y = (l - i - j).div_euclid(3);
    let m = (l - i - j).rem_euclid(3);
    let c = |n: i64| strip_c(n.max(0) as u32);
    if p <= i {
        match m {
            0 => word(vec![rep(L1, p), rep(L6, y), c(y + i - p), rep(B2, y + j)]),
            1 if y + i > p => word(vec![rep(L1, p), rep(L6, y + 1), c(y + i - p - 1), vec![B4], rep(B2, y + j)]),
            1 => word(vec![rep(L1, i), vec![B5], rep(B2, j)]),
            _ => word(vec![rep(L1, p), rep(L6, y + 1), c(y + i - p), vec![B3], rep(B2, y + j)]),
        }
    } else {
        match m {
            0 => word(vec![rep(L1, i), rep(L6, p - i + y), c(y), rep(B2, y + j - p + i)]),
            1 if y > 0 => word(vec![rep(L1, i), rep(L6, p - i + y + 1), c(y - 1), vec![B4], rep(B2, y + j - p + i)]),
            1 => word(vec![rep(L1, i), rep(L6, p - i), vec![B5], rep(B2, j - p + i)]),
            _ => word(vec![rep(L1, i), rep(L6, p - i + y + 1), c(y), vec![B3], rep(B2, y + j - p + i)]),
        }
    }
}

/// Tableau assigned to `hw(i, l - i, j)`.
fn highest_tableau(l: i64, i: i64, j: i64) -> GTableau {
    let y = (l - i - j).div_euclid(3);
    let m = (l - i - j).rem_euclid(3);
    let c = |n: i64| strip_c(n.max(0) as u32);
    match m {
        0 => word(vec![rep(L6, y), c(y + i), rep(B2, y + i), rep(B2, j - i)]),
        1 if y + i > 0 => word(vec![rep(L6, y + 1), c(y + i - 1), vec![B4], rep(B2, y + i), rep(B2, j - i)]),
        1 => word(vec![vec![B5], rep(B2, j - i)]),
        _ => word(vec![rep(L6, y + 1), c(y + i), vec![B3], rep(B2, y + i), rep(B2, j - i)]),
    }
}

/// Closed form of `e_2^{l-k} [6^p, -2^{l-p}]`.
fn u_closed(l: i64, k: i64, p: i64) -> Option<GTableau> {
    let d = l - k;
    let tail = rep(B2, l - p);
    if d % 3 == 0 && d <= 3 * p {
        Some(word(vec![rep(L2, d / 3), rep(L6, p - d / 3), tail]))
    } else if 0 < d && d < 3 * p && d % 3 == 1 {
        Some(word(vec![rep(L2, d / 3), vec![L4], rep(L6, p - 1 - d / 3), tail]))
    } else if 0 < d && d < 3 * p && d % 3 == 2 {
        Some(word(vec![rep(L2, d / 3), vec![L3], rep(L6, p - 1 - d / 3), tail]))
    } else if d > 3 * p {
        Some(word(vec![rep(L2, p), strip_wbar((d - 3 * p) as u32), rep(B2, k + 2 * p)]))
    } else {
        None
    }
}

/// All anchor pairs for a level whose A2 tables are available.
pub fn anchors(level: &Level) -> Result<Vec<Anchor>, String> {
    let l = level.l;
    let li = i64::from(l);
    let mut out = Vec::new();
    let a_path = |start: AParam, steps: &[(Op, usize, u32)]| -> Result<AParam, String> {
        level
            .a_path(start, steps)
            .ok_or_else(|| format!("operator path from {start} leaves the crystal"))
    };
    let g_move = |t: &GTableau, op: Op, color: usize, n: u32| -> Result<GTableau, String> {
        t.apply_n(op, color, n)
            .ok_or_else(|| format!("G2 operator path from {t} vanishes"))
    };
    let mut push = |rule, param, tableau| out.push(Anchor { rule, param, tableau });

    for p in 0..=l {
        let pi = i64::from(p);
        let b = a_path(AParam::hw(0, l, l), &[(Op::F, 0, p)])?;
        push(AnchorRule::URElement, b, word(vec![rep(L6, pi), rep(B2, li - pi)]));
        let lowest = AParam::new(0, l, l, l, 2 * l, l);
        let b = a_path(lowest, &[(Op::E, 0, p)])?;
        push(AnchorRule::URElement, b, word(vec![rep(L2, li - pi), rep(B6, pi)]));
    }

    for k in 0..=l {
        for p in 0..=l {
            let (ki, pi) = (i64::from(k), i64::from(p));
            let b = a_path(AParam::hw(0, k, l), &[(Op::F, 0, p)])?;
            let t = g_move(&word(vec![rep(L6, pi), rep(B2, li - pi)]), Op::E, 2, l - k)?;
            push(AnchorRule::UElement, b, t);
            if let Some(cf) = u_closed(li, ki, pi) {
                push(AnchorRule::UElementClosed, b, cf);
            }
        }
    }

    for k in 0..=l {
        let b0 = a_path(AParam::hw(0, k, l), &[(Op::F, 0, l)])?;
        let t0 = g_move(&word(vec![rep(L6, li)]), Op::E, 2, l - k)?;
        let mut q = 0;
        while let Some(b) = level.a_path(b0, &[(Op::F, 1, q)]) {
            push(AnchorRule::Hamidashi, b, g_move(&t0, Op::F, 1, q)?);
            q += 1;
        }
    }

    for i in 0..=l / 2 {
        for j in i..=l - i {
            let (ii, ji) = (i64::from(i), i64::from(j));
            let hw = AParam::hw(i, l - i, j);
            push(AnchorRule::AllHighest, hw, highest_tableau(li, ii, ji));
            let y = (li - ii - ji).div_euclid(3);
            for p in 0..=j {
                let pi = i64::from(p);
                let t = f0p_tableau(li, ii, ji, pi);
                let b = a_path(hw, &[(Op::F, 0, p)])?;
                push(AnchorRule::F0pR, b, t.clone());
                let qmax = y + ji - (ii - pi).max(0);
                for q in 0..=qmax.max(-1) {
                    let q = q as u32;
                    let bq = a_path(b, &[(Op::F, 1, q)])?;
                    push(AnchorRule::F1qF0p, bq, g_move(&t, Op::F, 1, q)?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::Tower;

    #[test]
    fn closed_u_forms_agree_on_the_shared_boundary() {
        for l in 0..=9i64 {
            for p in 0..=l / 3 {
                let k = l - 3 * p;
                let strip_case = word(vec![rep(L2, p), strip_wbar(0), rep(B2, k + 2 * p)]);
                assert_eq!(u_closed(l, k, p), Some(strip_case), "l={l} p={p}");
            }
        }
    }

    #[test]
    fn closed_u_forms_match_the_operator_values() {
        let tower = Tower::build(4).unwrap();
        for lv in tower.levels() {
            let an = anchors(lv).unwrap();
            let by_rule = |r| an.iter().filter(move |a| a.rule == r).map(|a| (a.param, a.tableau.clone()));
            for (b, t) in by_rule(AnchorRule::UElementClosed) {
                assert!(by_rule(AnchorRule::UElement).any(|(c, s)| c == b && s == t), "l={} {b}", lv.l);
            }
        }
    }
}
