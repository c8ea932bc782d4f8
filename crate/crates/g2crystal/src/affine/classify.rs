//! The seed sets `B_C`, `B_W`, `B_U`, `B_R` for the extension of `Phi` along
//! `E_A`-strings.
//!
//! All sets live in the blocks `(i, l - i, j)` and are described through
//! `f_1^q f_0^p hw(i, l - i, j)`. `B_C`, `B_W` and `B_U` follow their
//! inequalities literally. `B_R` is the residual of the terminal set
//! `{e_0 b = 0, F_A b = 0}` after removing the other three; the displayed
//! inequalities for `B_R` are kept separately for comparison.

use serde::Serialize;

use crate::signature::Op;

use super::{AParam, Level};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BSet {
    C,
    W,
    U,
    R,
}

/// Membership of every element of a level.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub level: u32,
    /// Indexed like [`Level::elems`].
    pub membership: Vec<Option<BSet>>,
    /// Indices of `{e_0 b = 0, F_A b = 0}`.
    pub terminal: Vec<usize>,
    /// Indices of the displayed `B_R` inequalities (`p < q <= y + j - (i - p)_+`, `q < j`).
    pub displayed_br: Vec<usize>,
    /// Same without the `q < j` clause.
    pub displayed_br_loose: Vec<usize>,
}

impl Classification {
    pub fn get(&self, a: usize) -> Option<BSet> {
        self.membership[a]
    }

    pub fn members(&self, s: BSet) -> Vec<usize> {
        (0..self.membership.len()).filter(|&a| self.membership[a] == Some(s)).collect()
    }

    /// Whether the union of the four sets contains the terminal set.
    pub fn covers_terminal(&self) -> bool {
        self.terminal.iter().all(|&a| self.membership[a].is_some())
    }

    /// Whether the residual `B_R` equals the displayed `B_R` (strict or loose).
    pub fn residual_matches_display(&self) -> (bool, bool) {
        let r = self.members(BSet::R);
        let strict: Vec<usize> = sorted(self.displayed_br.clone());
        let loose: Vec<usize> = sorted(self.displayed_br_loose.clone());
        (r == strict, r == loose)
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

/// `{e_0 b = 0, F_A b = 0}`.
pub fn terminal_set(level: &Level) -> Vec<usize> {
    (0..level.len())
        .filter(|&a| level.a_apply(Op::E, 0, a).is_none() && level.fa(a).is_none())
        .collect()
}

/// Indices of the displayed `B_R` sets, strict and without `q < j`.
pub fn displayed_br(level: &Level) -> (Vec<usize>, Vec<usize>) {
    let (mut strict, mut loose) = (Vec::new(), Vec::new());
    for_blocks(level, |i, j, y, el| {
        for p in 0..=j {
            for q in p + 1..=y + j - (i - p).max(0) {
                if let Some(a) = el(q, p) {
                    loose.push(a);
                    if q < j {
                        strict.push(a);
                    }
                }
            }
        }
    });
    (sorted(strict), sorted(loose))
}

/// Iterate over blocks `(i, l - i, j)` with an element locator `el(q, p)`.
fn for_blocks(level: &Level, mut body: impl FnMut(i64, i64, i64, &dyn Fn(i64, i64) -> Option<usize>)) {
    let l = level.l;
    for i in 0..=l / 2 {
        for j in i..=l - i {
            let hw = AParam::hw(i, l - i, j);
            let el = |q: i64, p: i64| -> Option<usize> {
                let b = level.a_path(hw, &[(Op::F, 0, p as u32), (Op::F, 1, q as u32)])?;
                level.index_of(b)
            };
            let (ii, ji) = (i64::from(i), i64::from(j));
            let y = (i64::from(l) - ii - ji).div_euclid(3);
            body(ii, ji, y, &el);
        }
    }
}

/// Classify every element of a level.
pub fn classify(level: &Level) -> Classification {
    let mut membership = vec![None; level.len()];
    let mut mark = |a: Option<usize>, s: BSet| {
        if let Some(a) = a {
            if membership[a].is_none() {
                membership[a] = Some(s);
            }
        }
    };
    for_blocks(level, |i, j, y, el| {
        for p in 0..=j {
            for q in 0..=p {
                mark(el(q, p), BSet::C);
            }
            if j == i {
                for q in p + 1..=y + j {
                    mark(el(q, p), BSet::W);
                }
            }
            if p == j {
                for q in j + 1..=y + 2 * j - i {
                    mark(el(q, p), BSet::U);
                }
            }
        }
    });
    let terminal = terminal_set(level);
    for &a in &terminal {
        if membership[a].is_none() {
            membership[a] = Some(BSet::R);
        }
    }
    let (displayed_br, displayed_br_loose) = displayed_br(level);
    Classification { level: level.l, membership, terminal, displayed_br, displayed_br_loose }
}
