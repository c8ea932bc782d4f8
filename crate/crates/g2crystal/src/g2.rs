//! G2 crystals `B(n Lambda_1)` on restricted semistandard tableaux.
//!
//! A tableau of length `n` is stored as its weakly ordered letter word
//! `b_1 <= ... <= b_n` in the fixed linearization
//! `1 < 2 < 3 < 4 < 5 < 6 < 01 < 02 < -6 < -5 < -4 < -3 < -2 < -1`.
//! As a crystal element it is the tensor product `b_n (x) ... (x) b_1`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::cartan::ClassicalWeight;
use crate::error::{Error, Result};
use crate::signature::{tensor_apply, Op};

/// A letter of the 14-dimensional fundamental crystal, in linear order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum GLetter {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    Z1,
    Z2,
    B6,
    B5,
    B4,
    B3,
    B2,
    B1,
}

use GLetter::*;

impl GLetter {
    pub const ALL: [GLetter; 14] = [L1, L2, L3, L4, L5, L6, Z1, Z2, B6, B5, B4, B3, B2, B1];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["1", "2", "3", "4", "5", "6", "01", "02", "-6", "-5", "-4", "-3", "-2", "-1"][self.index()]
    }

    /// The barred partner; `01` and `02` are fixed.
    pub fn bar(self) -> GLetter {
        match self {
            Z1 | Z2 => self,
            _ => GLetter::ALL[13 - self.index()],
        }
    }

    /// `(<h_1, wt>, <h_2, wt>)`.
    pub fn weight12(self) -> (i32, i32) {
        match self {
            L1 => (1, 0),
            L2 => (-1, 3),
            L3 => (0, 1),
            L4 => (1, -1),
            L5 => (-1, 2),
            L6 => (2, -3),
            Z1 | Z2 => (0, 0),
            B6 => (-2, 3),
            B5 => (1, -2),
            B4 => (-1, 1),
            B3 => (0, -1),
            B2 => (1, -3),
            B1 => (-1, 0),
        }
    }

    /// Single-step `f_i` on the fundamental crystal, `i` in {1, 2}.
    pub fn f(self, i: usize) -> Option<GLetter> {
        match (i, self) {
            (1, L1) => Some(L2),
            (1, L4) => Some(L5),
            (1, L6) => Some(Z2),
            (1, Z2) => Some(B6),
            (1, B5) => Some(B4),
            (1, B2) => Some(B1),
            (2, L2) => Some(L3),
            (2, L3) => Some(L4),
            (2, L4) => Some(L6),
            (2, L5) => Some(Z1),
            (2, Z1) => Some(B5),
            (2, B6) => Some(B4),
            (2, B4) => Some(B3),
            (2, B3) => Some(B2),
            _ => None,
        }
    }

    /// Single-step `e_i` on the fundamental crystal.
    pub fn e(self, i: usize) -> Option<GLetter> {
        GLetter::ALL.iter().copied().find(|x| x.f(i) == Some(self))
    }

    pub fn step(self, op: Op, i: usize) -> Option<GLetter> {
        match op {
            Op::F => self.f(i),
            Op::E => self.e(i),
        }
    }

    /// `(eps_i, phi_i)`: the signature word of the letter is `-^eps +^phi`.
    pub fn strings(self, i: usize) -> (u32, u32) {
        let walk = |op: Op| {
            let mut x = self;
            let mut k = 0;
            while let Some(y) = x.step(op, i) {
                x = y;
                k += 1;
            }
            k
        };
        (walk(Op::E), walk(Op::F))
    }
}

impl fmt::Display for GLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GLetter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GLetter::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownLetter(s.to_string()))
    }
}

impl Serialize for GLetter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// An element of `B(n Lambda_1)`, `n` = word length. The empty word is `phi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GTableau(Vec<GLetter>);

impl GTableau {
    pub fn empty() -> Self {
        GTableau(Vec::new())
    }

    /// Sort a multiset of letters into canonical order.
    pub fn from_letters(mut letters: Vec<GLetter>) -> Self {
        letters.sort();
        GTableau(letters)
    }

    /// Build from letters and reject words that violate the tableau conditions.
    pub fn new(letters: Vec<GLetter>) -> Result<Self> {
        let t = GTableau::from_letters(letters);
        if t.is_valid() {
            Ok(t)
        } else {
            Err(Error::InvalidTableau(t.to_string()))
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let letters = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|w| !w.is_empty())
            .map(GLetter::from_str)
            .collect::<Result<Vec<_>>>()?;
        GTableau::new(letters)
    }

    pub fn letters(&self) -> &[GLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, x: GLetter) -> u32 {
        self.0.iter().filter(|&&y| y == x).count() as u32
    }

    /// The five counting conditions as they are usually displayed.
    ///
    /// On their own they admit four extra words of length 2:
    /// `[3,01]`, `[4,01]`, `[01,-4]`, `[01,-3]`.
    pub fn satisfies_displayed_conditions(&self) -> bool {
        let x = |l| self.count(l);
        let sg = |v: u32| u32::from(v > 0);
        x(L5) + x(Z1) + x(Z2) + x(B5) <= 1
            && x(L3) + x(L4) + x(L5) <= 1
            && x(B5) + x(B4) + x(B3) <= 1
            && x(L5) + sg(x(L6)) + x(Z1) <= 1
            && x(Z1) + sg(x(B6)) + x(B5) <= 1
    }

    /// Membership in `B(n Lambda_1)`: the displayed conditions plus
    /// `x_3 + x_4 + x_5 + x_01 <= 1` and its barred mirror.
    pub fn is_valid(&self) -> bool {
        let sorted = self.0.windows(2).all(|w| w[0] <= w[1]);
        let x = |l| self.count(l);
        sorted
            && self.satisfies_displayed_conditions()
            && x(L3) + x(L4) + x(L5) + x(Z1) <= 1
            && x(B3) + x(B4) + x(B5) + x(Z1) <= 1
    }

    /// Classical weight; the tableau has level 0 so `m0 = -2 m1 - m2`.
    pub fn weight(&self) -> ClassicalWeight {
        let (mut w1, mut w2) = (0, 0);
        for l in &self.0 {
            let (a, b) = l.weight12();
            w1 += a;
            w2 += b;
        }
        ClassicalWeight::new(-2 * w1 - w2, w1, w2)
    }

    /// Kashiwara operator of color 1 or 2.
    pub fn apply(&self, op: Op, i: usize) -> Option<GTableau> {
        assert!(i == 1 || i == 2, "color {i} is not a G2 color");
        let factors: Vec<GLetter> = self.0.iter().rev().copied().collect();
        let res = tensor_apply(op, &factors, |x| x.strings(i), |o, x| x.step(o, i))
            .expect("letter strings are consistent")?;
        Some(GTableau::from_letters(res))
    }

    pub fn apply_n(&self, op: Op, i: usize, n: u32) -> Option<GTableau> {
        let mut t = self.clone();
        for _ in 0..n {
            t = t.apply(op, i)?;
        }
        Some(t)
    }

    /// `(eps_i, phi_i)` via the signature of the reversed word.
    pub fn strings(&self, i: usize) -> (u32, u32) {
        let mut w = crate::signature::UWord::new();
        for (pos, l) in self.0.iter().rev().enumerate() {
            let (e, p) = l.strings(i);
            w.push_factor(pos, e, p);
        }
        crate::signature::eps_phi(&w)
    }

    /// Reverse the word and bar every letter.
    pub fn involution(&self) -> GTableau {
        GTableau::from_letters(self.0.iter().map(|l| l.bar()).collect())
    }

    /// Concatenate segments and sort.
    pub fn concat(parts: &[&[GLetter]]) -> GTableau {
        GTableau::from_letters(parts.iter().flat_map(|p| p.iter().copied()).collect())
    }
}

impl fmt::Display for GTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(l.name())?;
        }
        f.write_str("]")
    }
}

/// `#B(n Lambda_1)` from the Weyl dimension formula
/// `(n+1)(n/2+1)(2n/3+1)(3n/4+1)(3n/5+1)`.
pub fn dim(n: u64) -> u64 {
    let num = (n + 1) * (n + 2) * (2 * n + 3) * (3 * n + 4) * (3 * n + 5);
    assert_eq!(num % 120, 0, "Weyl formula is not integral at n = {n}");
    num / 120
}

/// All tableaux of length `n`, in canonical order.
pub fn enumerate(n: usize) -> Vec<GTableau> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    fn rec(start: usize, n: usize, word: &mut Vec<GLetter>, out: &mut Vec<GTableau>) {
        let t = GTableau(word.clone());
        let x = |l| t.count(l);
        // prune early: every condition is monotone in the counts
        if x(L3) + x(L4) + x(L5) + x(Z1) > 1 || x(L5) + x(Z1) + x(Z2) + x(B5) > 1 {
            return;
        }
        if word.len() == n {
            if t.is_valid() {
                out.push(t);
            }
            return;
        }
        for s in start..14 {
            word.push(GLetter::ALL[s]);
            rec(s, n, word, out);
            word.pop();
        }
    }
    rec(0, n, &mut word, &mut out);
    out
}

/// The connected component of `[1^n]` under colors 1 and 2.
pub fn component(n: usize) -> Vec<GTableau> {
    let start = GTableau(vec![L1; n]);
    let mut seen = std::collections::HashSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(t) = stack.pop() {
        for i in [1, 2] {
            for op in [Op::E, Op::F] {
                if let Some(s) = t.apply(op, i) {
                    if seen.insert(s.clone()) {
                        stack.push(s);
                    }
                }
            }
        }
    }
    let mut v: Vec<GTableau> = seen.into_iter().collect();
    v.sort();
    v
}

/// Strip with trivial reduced color-2 signature: `6^a [02] -6^a`.
pub fn strip_c(k: u32) -> Vec<GLetter> {
    let a = (k / 2) as usize;
    let mut v = vec![L6; a];
    if k % 2 == 1 {
        v.push(Z2);
    }
    v.extend(std::iter::repeat_n(B6, a));
    v
}

/// Strip with trivial reduced color-1 signature built from 2, 3, 4, 6.
pub fn strip_w(k: u32) -> Vec<GLetter> {
    let (a, b) = ((k / 3) as usize, k % 3);
    let mut v = Vec::new();
    match b {
        0 => v.extend(std::iter::repeat_n(L2, 2 * a)),
        1 => {
            v.extend(std::iter::repeat_n(L2, 2 * a));
            v.push(L3);
        }
        _ => {
            v.extend(std::iter::repeat_n(L2, 2 * a + 1));
            v.push(L4);
        }
    }
    v.extend(std::iter::repeat_n(L6, a));
    v
}

/// Barred mirror of [`strip_w`].
pub fn strip_wbar(k: u32) -> Vec<GLetter> {
    let mut v: Vec<GLetter> = strip_w(k).into_iter().map(GLetter::bar).collect();
    v.sort();
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripKind {
    C,
    W,
    WBar,
}

pub fn strip(kind: StripKind, k: u32) -> Vec<GLetter> {
    match kind {
        StripKind::C => strip_c(k),
        StripKind::W => strip_w(k),
        StripKind::WBar => strip_wbar(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> GTableau {
        GTableau::parse(s).unwrap()
    }

    #[test]
    fn fundamental_edges() {
        assert_eq!(L1.f(1), Some(L2));
        assert_eq!(L3.f(2), Some(L4));
        assert_eq!(L6.f(1), Some(Z2));
        assert_eq!(L6.strings(1), (0, 2));
        assert_eq!(L2.strings(2), (0, 3));
        let edges: usize = GLetter::ALL.iter().map(|l| usize::from(l.f(1).is_some()) + usize::from(l.f(2).is_some())).sum();
        assert_eq!(edges, 14);
    }

    #[test]
    fn weights_match_strings() {
        for l in GLetter::ALL {
            let (a, b) = l.weight12();
            let (e1, p1) = l.strings(1);
            let (e2, p2) = l.strings(2);
            assert_eq!(a, p1 as i32 - e1 as i32, "{l}");
            assert_eq!(b, p2 as i32 - e2 as i32, "{l}");
        }
    }

    #[test]
    fn dimensions() {
        let known = [1, 14, 77, 273, 748, 1729, 3542];
        for (n, &d) in known.iter().enumerate() {
            assert_eq!(dim(n as u64), d);
        }
        for n in 0..=3 {
            assert_eq!(enumerate(n).len() as u64, dim(n as u64));
            assert_eq!(enumerate(n), component(n));
        }
    }

    #[test]
    fn displayed_conditions_overcount() {
        let extra: Vec<GTableau> = {
            let mut v = Vec::new();
            for a in 0..14 {
                for b in a..14 {
                    let w = GTableau(vec![GLetter::ALL[a], GLetter::ALL[b]]);
                    if w.satisfies_displayed_conditions() && !w.is_valid() {
                        v.push(w);
                    }
                }
            }
            v
        };
        assert_eq!(extra, vec![t_raw(&[L3, Z1]), t_raw(&[L4, Z1]), t_raw(&[Z1, B4]), t_raw(&[Z1, B3])]);
    }

    fn t_raw(l: &[GLetter]) -> GTableau {
        GTableau(l.to_vec())
    }

    #[test]
    fn apply_examples() {
        assert_eq!(t("[6]").apply(Op::F, 1), Some(t("[02]")));
        assert!(t("[1,1,1]").apply(Op::E, 1).is_none());
        assert!(t("[1,1,1]").apply(Op::E, 2).is_none());
    }

    #[test]
    fn strips() {
        assert_eq!(strip_c(2), vec![L6, B6]);
        assert_eq!(strip_c(0), vec![]);
        assert_eq!(strip_w(3), vec![L2, L2, L6]);
        assert_eq!(strip_wbar(3), vec![B6, B2, B2]);
    }

    #[test]
    fn involution_examples() {
        assert_eq!(t("[1,1,1]").involution(), t("[-1,-1,-1]"));
        assert_eq!(t("[01]").involution(), t("[01]"));
        for x in enumerate(2) {
            assert!(x.involution().is_valid());
            assert_eq!(x.involution().involution(), x);
        }
    }

    #[test]
    fn parse_round_trip() {
        let x = t("[1, 01, -1]");
        assert_eq!(x.to_string(), "[1,01,-1]");
        assert!(GTableau::parse("[7]").is_err());
        assert!(GTableau::parse("[3,01]").is_err());
        assert_eq!(GTableau::parse("[]").unwrap(), GTableau::empty());
    }
}
