//! The fifteen identities relating highest weight vectors of `V^1_x (x) V^1_y`
//! through words in the Chevalley generators.

use serde::Serialize;

use super::module::{Gen, BASIS, V1};
use super::qrat::{qint, qp, QRat};
use super::tensor::{apply_word, SingularVectors, TVec};
use super::xy::XY;

/// One factor of a word; `None` as color marks a missing subscript.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Token {
    pub raising: bool,
    pub color: Option<usize>,
    pub power: u32,
}

/// Parse words like `f0(2) f1 f2(3) f1`; `e(2)` has no subscript.
pub fn parse_word(s: &str) -> Result<Vec<Token>, String> {
    s.split_whitespace()
        .map(|t| {
            let mut ch = t.chars();
            let raising = match ch.next() {
                Some('e') => true,
                Some('f') => false,
                _ => return Err(format!("bad token {t}")),
            };
            let rest: String = ch.collect();
            let (head, power) = match rest.split_once('(') {
                Some((h, p)) => {
                    let p = p.strip_suffix(')').ok_or_else(|| format!("bad power in {t}"))?;
                    (h.to_string(), p.parse::<u32>().map_err(|e| format!("{t}: {e}"))?)
                }
                None => (rest, 1),
            };
            let color = match head.as_str() {
                "" => None,
                c => Some(c.parse::<usize>().ok().filter(|&c| c < 3).ok_or_else(|| format!("bad color in {t}"))?),
            };
            Ok(Token { raising, color, power })
        })
        .collect()
}

/// `(wt_1, wt_2)` of `alpha_i` on level-zero weights.
fn root12(i: usize) -> (i32, i32) {
    [(-1, 0), (2, -3), (-1, 2)][i]
}

/// The weight change of a fully specified word.
pub fn word_shift(word: &[Token]) -> Option<(i32, i32)> {
    word.iter().try_fold((0, 0), |(a, b), t| {
        let (r1, r2) = root12(t.color?);
        let s = if t.raising { 1 } else { -1 } * t.power as i32;
        Some((a + s * r1, b + s * r2))
    })
}

/// Fill missing subscripts so that the word moves weight `from` to weight `to`.
/// Returns every consistent completion.
pub fn reconstruct(word: &[Token], from: (i32, i32), to: (i32, i32)) -> Vec<Vec<Token>> {
    let holes: Vec<usize> = (0..word.len()).filter(|&k| word[k].color.is_none()).collect();
    let mut out = Vec::new();
    let total = 3usize.pow(holes.len() as u32);
    for code in 0..total {
        let mut w = word.to_vec();
        let mut c = code;
        for &k in &holes {
            w[k].color = Some(c % 3);
            c /= 3;
        }
        if word_shift(&w) == Some((to.0 - from.0, to.1 - from.1)) {
            out.push(w);
        }
    }
    out
}

pub fn to_gens(word: &[Token]) -> Option<Vec<(Gen, u32)>> {
    word.iter()
        .map(|t| t.color.map(|c| (if t.raising { Gen::E(c) } else { Gen::F(c) }, t.power)))
        .collect()
}

pub fn format_word(word: &[Token]) -> String {
    word.iter()
        .map(|t| {
            let mut s = String::from(if t.raising { "e" } else { "f" });
            if let Some(c) = t.color {
                s.push_str(&c.to_string());
            }
            if t.power != 1 {
                s.push_str(&format!("({})", t.power));
            }
            s
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// The vector an identity lands on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Target {
    /// `u(2 Lambda_1) = v1 (x) v1`.
    U2L1,
    /// `v-1 (x) v-1`, the lowest weight vector of `V(2 Lambda_1)`.
    Lowest,
    /// A vector of weight `Lambda_1`, as some transcriptions write it.
    WeightL1,
    Zero,
}

impl Target {
    fn vector(self, s: &SingularVectors) -> Option<TVec> {
        match self {
            Target::U2L1 => Some(s.u_2l1.clone()),
            Target::Lowest => Some(TVec::basis("-1", "-1")),
            Target::WeightL1 | Target::Zero => None,
        }
    }

    fn weight(self) -> (i32, i32) {
        match self {
            Target::U2L1 => (2, 0),
            Target::Lowest => (-2, 0),
            Target::WeightL1 => (1, 0),
            Target::Zero => (0, 0),
        }
    }
}

/// Source vectors by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Source {
    UL1(usize),
    U0(usize),
    U3L2,
    U2L2,
}

impl Source {
    fn vector(self, s: &SingularVectors) -> TVec {
        match self {
            Source::UL1(k) => s.u_l1[k].clone(),
            Source::U0(k) => s.u_0[k].clone(),
            Source::U3L2 => s.u_3l2.clone(),
            Source::U2L2 => s.u_2l2.clone(),
        }
    }

    fn weight(self) -> (i32, i32) {
        match self {
            Source::UL1(_) => (1, 0),
            Source::U0(_) => (0, 0),
            Source::U3L2 => (0, 3),
            Source::U2L2 => (0, 2),
        }
    }
}

/// One itemized identity in its transcribed and its resolved reading.
#[derive(Clone, Debug)]
pub struct FusionItem {
    pub id: u32,
    pub source: Source,
    pub printed_word: &'static str,
    pub printed_target: Target,
    /// `None` when the transcribed coefficient cannot be read.
    pub printed_coefficient: Option<XY>,
    pub word: &'static str,
    pub target: Target,
    pub coefficient: XY,
}

/// Outcome of one item.
#[derive(Clone, Debug, Serialize)]
pub struct FusionResult {
    pub id: u32,
    pub printed_word: String,
    pub word: String,
    pub target: Target,
    pub expected: String,
    /// The coefficient found on the target vector, if the result is a multiple of it.
    pub actual: Option<String>,
    pub holds: bool,
    /// Whether the transcribed reading holds, `None` when it cannot be evaluated.
    pub holds_as_printed: Option<bool>,
    pub note: Option<String>,
}

fn c(v: QRat) -> XY {
    XY::constant(v)
}

fn q(e: i32) -> QRat {
    QRat::q_pow(e)
}

/// `a x + b y`.
fn lin(a: QRat, b: QRat) -> XY {
    &XY::monomial(a, 1, 0) + &XY::monomial(b, 0, 1)
}

fn mono(a: i32, b: i32) -> XY {
    XY::monomial(QRat::one(), a, b)
}

fn prod(fs: &[XY]) -> XY {
    fs.iter().fold(c(QRat::one()), |acc, f| &acc * f)
}

/// `s_2(x, y)`, the second component of the weight-zero relation vector.
pub fn s2() -> XY {
    let mid = &qp(&[(1, 6), (1, 0)])
        * &qp(&[(1, 16), (-1, 14), (1, 12), (-2, 10), (1, 8), (-2, 6), (1, 4), (-1, 2), (1, 0)]);
    XY::from_terms(&[(qp(&[(1, 22), (1, 18)]), 0, 2), (mid, 1, 1), (qp(&[(1, 4), (1, 0)]), 2, 0)])
}

/// The fifteen items.
pub fn items() -> Vec<FusionItem> {
    let d21 = || qint(2, 1);
    let d22 = || qint(2, 2);
    let q421 = || qp(&[(1, 4), (1, 2), (1, 0)]);
    let q41 = || qp(&[(1, 4), (1, 0)]);
    let x_q6y = || lin(QRat::one(), -&q(6));
    let x_y = || lin(QRat::one(), QRat::one());
    let one = QRat::one;
    let s13 = "f0(2) f1 f2(3) f1";
    let s46_printed = "e1 e2(3) e1(2) e2(3) e0 e(2) e2(3) e1 e0";
    let s46 = "e1 e2(3) e1(2) e2(3) e0 e1(2) e2(3) e1 e0";
    let s1213 = "f1(2) f2(6) f1(4) f2(6) f1(2) f0(2) f1 f2(2) f1 f2 f0 f1 f2(3) f1 f0";
    let x2_q6y2 = XY::from_terms(&[(one(), 2, 0), (q(6), 0, 2)]);
    let item12 = prod(&[c(&(&d21() * &d21()) * &(&q421() * &q(-8))), x2_q6y2]);
    let item13 = prod(&[c(&(&d22() * &q421()) * &q(-10)), s2()]);
    let item6 = prod(&[c(&(&(&d21() * &d22()) * &q(-2)) * &q41()), x_y(), x_q6y()]);
    let item6_printed = prod(&[c(&(&d22() * &q(5)) * &q41()), x_q6y()]);
    let mk = |id, source, printed_word, printed_target, printed_coefficient, word, target, coefficient| FusionItem {
        id,
        source,
        printed_word,
        printed_target,
        printed_coefficient,
        word,
        target,
        coefficient,
    };
    let same = |id, source, word, target, coefficient: XY| {
        mk(id, source, word, target, Some(coefficient.clone()), word, target, coefficient)
    };
    use Source::*;
    use Target::*;
    vec![
        same(1, UL1(0), s13, U2L1, prod(&[c(&d21() * &q(-3)), mono(-1, -1)])),
        same(2, UL1(1), s13, U2L1, prod(&[c(&d21() * &q(-3)), mono(-1, -1)])),
        same(3, UL1(2), s13, U2L1, prod(&[c(&d21() * &q(-6)), x_q6y(), lin(one(), q(12)), mono(-2, -2)])),
        mk(4, UL1(0), s46_printed, U2L1, Some(prod(&[c(d21()), mono(0, 1), x_y()])), s46, U2L1,
            prod(&[c(d21()), mono(0, 1), x_y()])),
        mk(5, UL1(1), s46_printed, U2L1, Some(prod(&[c(&d21() * &q(-6)), mono(1, 0), x_y()])), s46, U2L1,
            prod(&[c(&d21() * &q(-6)), mono(1, 0), x_y()])),
        mk(6, UL1(2), s46_printed, U2L1, Some(item6_printed), s46, U2L1, item6),
        same(7, UL1(0), "f0", U2L1, prod(&[c(&d21() * &q(-6)), mono(0, -1)])),
        same(8, UL1(1), "f0", U2L1, prod(&[c(d21()), mono(-1, 0)])),
        same(9, UL1(2), "f0", Zero, XY::zero()),
        same(10, U0(0), "f0(2)", U2L1, prod(&[c(&(&d21() * &d21()) * &q(-3)), mono(-1, -1)])),
        same(11, U0(1), "f0(2)", U2L1,
            prod(&[c(q(-12)), XY::from_terms(&[(one(), 2, 0), (q(30), 0, 2)]), mono(-2, -2)])),
        mk(12, U0(0), s1213, U2L1, Some(prod(&[item12.clone(), mono(1, 1)])), s1213, Lowest,
            prod(&[item12, mono(-3, -3)])),
        mk(13, U0(1), s1213, WeightL1, Some(prod(&[item13.clone(), mono(1, 1)])), s1213, Lowest,
            prod(&[item13, mono(-3, -3)])),
        same(14, U3L2, "f0(2) f1 f2(3) f1(2) f2(3)", U2L1, prod(&[c(q(-3)), x_q6y(), x_y(), mono(-2, -2)])),
        mk(15, U2L2, "f0(2) f1 f2(3) f1 f2(2)", U2L1, None, "f0(2) f1 f2(3) f1 f2", U2L1,
            prod(&[c(&q(-8) * &q421()), x_q6y(), lin(one(), -&q(10)), mono(-2, -2)])),
    ]
}

/// The coefficient of `target` in `v` when `v` is a multiple of it.
fn coefficient_on(v: &TVec, target: Target, s: &SingularVectors) -> Option<XY> {
    match target {
        Target::Zero => v.is_zero().then(XY::zero),
        Target::WeightL1 => None,
        _ => {
            let t = target.vector(s)?;
            let &(a, b) = t.support().first()?;
            let coef = v.get(BASIS[a], BASIS[b]);
            (t.scale(&coef) == *v).then_some(coef)
        }
    }
}

fn weight_note(word: &[Token], source: Source, target: Target) -> Option<String> {
    let shift = word_shift(word)?;
    let (s, t) = (source.weight(), target.weight());
    if target == Target::Zero || (s.0 + shift.0, s.1 + shift.1) == t {
        None
    } else {
        Some(format!(
            "weight {:?} + {:?} does not reach the target weight {:?}",
            s,
            shift,
            t
        ))
    }
}

pub fn evaluate_item(m: &V1, s: &SingularVectors, item: &FusionItem) -> FusionResult {
    let word = parse_word(item.word).expect("resolved words are well formed");
    let gens = to_gens(&word).expect("resolved words are complete");
    let lhs = apply_word(m, &gens, &item.source.vector(s));
    let actual = coefficient_on(&lhs, item.target, s);
    let holds = actual.as_ref() == Some(&item.coefficient);
    let printed = parse_word(item.printed_word).expect("printed words are well formed");
    let mut notes = Vec::new();
    let printed_gens = match to_gens(&printed) {
        Some(g) => Some(g),
        None => {
            let fills = reconstruct(&printed, item.source.weight(), item.target.weight());
            let shown: Vec<String> = fills.iter().map(|w| format_word(w)).collect();
            notes.push(format!("missing subscript filled by weight: {}", shown.join(" | ")));
            match fills.as_slice() {
                [one] => to_gens(one),
                _ => None,
            }
        }
    };
    if let Some(n) = weight_note(&printed, item.source, item.printed_target) {
        notes.push(format!("printed word: {n}"));
    }
    let holds_as_printed = match (&printed_gens, &item.printed_coefficient) {
        (Some(g), Some(coef)) => {
            let v = if g == &gens { lhs.clone() } else { apply_word(m, g, &item.source.vector(s)) };
            if item.printed_target == Target::WeightL1 {
                notes.push("printed target has weight Lambda_1, not the weight of the result".into());
            }
            Some(coefficient_on(&v, item.printed_target, s).as_ref() == Some(coef))
        }
        (Some(g), None) => {
            let v = apply_word(m, g, &item.source.vector(s));
            if v.is_zero() {
                notes.push("printed word annihilates the source".into());
            }
            None
        }
        _ => None,
    };
    if !holds {
        notes.push(format!("result: {lhs}"));
    }
    FusionResult {
        id: item.id,
        printed_word: item.printed_word.to_string(),
        word: item.word.to_string(),
        target: item.target,
        expected: item.coefficient.to_string(),
        actual: actual.map(|a| a.to_string()),
        holds,
        holds_as_printed,
        note: (!notes.is_empty()).then(|| notes.join("; ")),
    }
}

pub fn verify_fusion_identities(m: &V1, s: &SingularVectors) -> Vec<FusionResult> {
    items().iter().map(|it| evaluate_item(m, s, it)).collect()
}
