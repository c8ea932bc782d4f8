//! Signature rule for tensor products of crystals.
//!
//! Every factor contributes a word `-^eps +^phi`. Adjacent `(+, -)` pairs are
//! cancelled until the word has the form `-^a +^b`; `f` then acts on the factor
//! owning the leftmost surviving `+`, and `e` on the factor owning the rightmost
//! surviving `-`.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

/// Raising (`E`) or lowering (`F`) Kashiwara operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    E,
    F,
}

impl Op {
    pub fn inverse(self) -> Op {
        match self {
            Op::E => Op::F,
            Op::F => Op::E,
        }
    }
}

/// A signature word together with the factor index owning each symbol.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UWord {
    pub symbols: Vec<Sign>,
    pub positions: Vec<usize>,
}

impl UWord {
    pub fn new() -> Self {
        UWord::default()
    }

    pub fn from_parts(symbols: Vec<Sign>, positions: Vec<usize>) -> Result<Self> {
        if symbols.len() != positions.len() {
            return Err(Error::Contract(format!(
                "{} symbols but {} positions",
                symbols.len(),
                positions.len()
            )));
        }
        Ok(UWord { symbols, positions })
    }

    /// Append `-^eps +^phi` for the factor at `pos`.
    pub fn push_factor(&mut self, pos: usize, eps: u32, phi: u32) {
        for _ in 0..eps {
            self.symbols.push(Sign::Minus);
            self.positions.push(pos);
        }
        for _ in 0..phi {
            self.symbols.push(Sign::Plus);
            self.positions.push(pos);
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// True when the word has the shape `-^a +^b`.
    pub fn is_reduced(&self) -> bool {
        let mut seen_plus = false;
        for s in &self.symbols {
            match s {
                Sign::Zero => return false,
                Sign::Plus => seen_plus = true,
                Sign::Minus if seen_plus => return false,
                Sign::Minus => {}
            }
        }
        true
    }
}

/// Drop zeros and cancel `(+, -)` pairs with a single stack pass.
pub fn reduce(w: &UWord) -> UWord {
    let mut out = UWord::new();
    for (&s, &p) in w.symbols.iter().zip(&w.positions) {
        match s {
            Sign::Zero => {}
            Sign::Plus => {
                out.symbols.push(s);
                out.positions.push(p);
            }
            Sign::Minus => {
                if out.symbols.last() == Some(&Sign::Plus) {
                    out.symbols.pop();
                    out.positions.pop();
                } else {
                    out.symbols.push(s);
                    out.positions.push(p);
                }
            }
        }
    }
    out
}

/// Reference reduction: delete zeros, then repeatedly delete the first adjacent
/// `(+, -)` pair until none is left.
pub fn reduce_naive(w: &UWord) -> UWord {
    let mut syms = Vec::new();
    let mut pos = Vec::new();
    for (&s, &p) in w.symbols.iter().zip(&w.positions) {
        if s != Sign::Zero {
            syms.push(s);
            pos.push(p);
        }
    }
    loop {
        let hit = (0..syms.len().saturating_sub(1))
            .find(|&m| syms[m] == Sign::Plus && syms[m + 1] == Sign::Minus);
        match hit {
            Some(m) => {
                syms.drain(m..m + 2);
                pos.drain(m..m + 2);
            }
            None => break,
        }
    }
    UWord { symbols: syms, positions: pos }
}

/// `(eps, phi)` read off a word: the numbers of `-` and `+` after reduction.
pub fn eps_phi(w: &UWord) -> (u32, u32) {
    let r = reduce(w);
    let minus = r.symbols.iter().filter(|&&s| s == Sign::Minus).count() as u32;
    (minus, r.symbols.len() as u32 - minus)
}

/// The factor on which the operator acts, or `None` when the result is zero.
pub fn acting_position(op: Op, w: &UWord) -> Option<usize> {
    let r = reduce(w);
    match op {
        Op::F => r
            .symbols
            .iter()
            .position(|&s| s == Sign::Plus)
            .map(|m| r.positions[m]),
        Op::E => r
            .symbols
            .iter()
            .rposition(|&s| s == Sign::Minus)
            .map(|m| r.positions[m]),
    }
}

/// Apply a Kashiwara operator to `factors[0] (x) factors[1] (x) ...`.
///
/// `uword` returns `(eps, phi)` of a single factor and `step` applies the
/// operator to a single factor. Returns `Ok(None)` when the result is zero.
pub fn tensor_apply<T: Clone>(
    op: Op,
    factors: &[T],
    mut uword: impl FnMut(&T) -> (u32, u32),
    mut step: impl FnMut(Op, &T) -> Option<T>,
) -> Result<Option<Vec<T>>> {
    let mut w = UWord::new();
    for (idx, b) in factors.iter().enumerate() {
        let (e, p) = uword(b);
        w.push_factor(idx, e, p);
    }
    let Some(pos) = acting_position(op, &w) else {
        return Ok(None);
    };
    let Some(nb) = step(op, &factors[pos]) else {
        return Err(Error::Contract(format!(
            "factor {pos} reported a nonzero string but the single-step operator returned zero"
        )));
    };
    let mut out = factors.to_vec();
    out[pos] = nb;
    Ok(Some(out))
}

/// Two-factor rule for `b1 (x) b2` given the string lengths of both factors.
/// Returns the index (0 or 1) of the acting factor, or `None` for zero.
pub fn two_factor_position(op: Op, b1: (u32, u32), b2: (u32, u32)) -> Option<usize> {
    let (e1, p1) = b1;
    let (e2, p2) = b2;
    match op {
        Op::F => {
            if p1 > e2 {
                Some(0)
            } else if p2 > 0 {
                Some(1)
            } else {
                None
            }
        }
        Op::E => {
            if e2 > p1 {
                Some(1)
            } else if e1 > 0 {
                Some(0)
            } else {
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::*;

    #[test]
    fn worked_example() {
        let w = UWord::from_parts(vec![Minus, Plus, Plus, Zero, Minus, Plus], vec![1, 1, 1, 2, 3, 3])
            .unwrap();
        let r = reduce(&w);
        assert_eq!(r.symbols, vec![Minus, Plus, Plus]);
        assert_eq!(r.positions, vec![1, 1, 3]);
        assert_eq!(eps_phi(&w), (1, 2));
        assert_eq!(acting_position(Op::F, &w), Some(1));
        assert_eq!(acting_position(Op::E, &w), Some(1));
    }

    #[test]
    fn empty_word() {
        let w = UWord::new();
        assert!(reduce(&w).is_empty());
        assert_eq!(acting_position(Op::F, &w), None);
    }

    #[test]
    fn mismatched_parts_rejected() {
        assert!(UWord::from_parts(vec![Plus], vec![]).is_err());
    }

    #[test]
    fn zero_signature_gives_none() {
        let r = tensor_apply(Op::F, &[0u8, 0, 0], |_| (0, 0), |_, _| None).unwrap();
        assert!(r.is_none());
    }
}
