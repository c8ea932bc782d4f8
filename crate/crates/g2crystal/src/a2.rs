//! A2 crystals `B(m Lambda_alpha + n Lambda_beta)` realized on two-row
//! semistandard tableaux over the letters 1 < 2 < 3.
//!
//! The two colors are abstract: `Alpha` moves 1 -> 2 and `Beta` moves 2 -> 3.
//! The affine model instantiates `(Alpha, Beta)` as colors `(1, 0)`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::signature::{tensor_apply, Op};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum A2Color {
    Alpha,
    Beta,
}

impl A2Color {
    pub const BOTH: [A2Color; 2] = [A2Color::Alpha, A2Color::Beta];

    fn index(self) -> usize {
        match self {
            A2Color::Alpha => 0,
            A2Color::Beta => 1,
        }
    }

    /// `(eps, phi)` of a single box.
    fn letter_strings(self, x: u8) -> (u32, u32) {
        match (self, x) {
            (A2Color::Alpha, 1) | (A2Color::Beta, 2) => (0, 1),
            (A2Color::Alpha, 2) | (A2Color::Beta, 3) => (1, 0),
            _ => (0, 0),
        }
    }

    fn letter_step(self, op: Op, x: u8) -> Option<u8> {
        match (self, op, x) {
            (A2Color::Alpha, Op::F, 1) => Some(2),
            (A2Color::Alpha, Op::E, 2) => Some(1),
            (A2Color::Beta, Op::F, 2) => Some(3),
            (A2Color::Beta, Op::E, 3) => Some(2),
            _ => None,
        }
    }
}

/// A tableau of shape `(m + n, n)`: `n` two-box columns followed by `m` single boxes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct A2Tableau {
    pub m: u32,
    pub n: u32,
    pub row1: Vec<u8>,
    pub row2: Vec<u8>,
}

impl A2Tableau {
    pub fn highest(m: u32, n: u32) -> Self {
        A2Tableau {
            m,
            n,
            row1: vec![1; (m + n) as usize],
            row2: vec![2; n as usize],
        }
    }

    pub fn is_valid(&self) -> bool {
        let n = self.n as usize;
        if self.row1.len() != (self.m + self.n) as usize || self.row2.len() != n {
            return false;
        }
        let letters_ok = self.row1.iter().chain(&self.row2).all(|&x| (1..=3).contains(&x));
        let rows_ok = self.row1.windows(2).all(|w| w[0] <= w[1]) && self.row2.windows(2).all(|w| w[0] <= w[1]);
        let cols_ok = (0..n).all(|c| self.row1[c] < self.row2[c]);
        letters_ok && rows_ok && cols_ok
    }

    /// Box coordinates `(column, row)` in tensor order: columns from right to
    /// left, top box before bottom box.
    fn reading_cells(&self) -> Vec<(usize, usize)> {
        let n = self.n as usize;
        let mut cells = Vec::with_capacity(self.row1.len() + n);
        for c in (0..self.row1.len()).rev() {
            cells.push((c, 0));
            if c < n {
                cells.push((c, 1));
            }
        }
        cells
    }

    fn cell(&self, (c, r): (usize, usize)) -> u8 {
        if r == 0 {
            self.row1[c]
        } else {
            self.row2[c]
        }
    }

    /// Weight as `(<h_alpha, wt>, <h_beta, wt>)`.
    pub fn weight(&self) -> (i32, i32) {
        let count = |x: u8| self.row1.iter().chain(&self.row2).filter(|&&y| y == x).count() as i32;
        let (c1, c2, c3) = (count(1), count(2), count(3));
        (c1 - c2, c2 - c3)
    }

    /// Kashiwara operator via the signature rule on the reading word.
    pub fn apply(&self, op: Op, color: A2Color) -> Option<A2Tableau> {
        let cells = self.reading_cells();
        let word: Vec<u8> = cells.iter().map(|&c| self.cell(c)).collect();
        let res = tensor_apply(op, &word, |&x| color.letter_strings(x), |o, &x| color.letter_step(o, x))
            .expect("single boxes always have consistent strings")?;
        let mut t = self.clone();
        for (&(c, r), &v) in cells.iter().zip(&res) {
            if r == 0 {
                t.row1[c] = v;
            } else {
                t.row2[c] = v;
            }
        }
        Some(t)
    }

    /// `(eps, phi)` for one color.
    pub fn strings(&self, color: A2Color) -> (u32, u32) {
        let mut e = 0;
        let mut t = self.clone();
        while let Some(s) = t.apply(Op::E, color) {
            t = s;
            e += 1;
        }
        let mut f = 0;
        let mut t = self.clone();
        while let Some(s) = t.apply(Op::F, color) {
            t = s;
            f += 1;
        }
        (e, f)
    }

    pub fn word(&self) -> Vec<u8> {
        self.row1.iter().chain(&self.row2).copied().collect()
    }
}

/// Number of elements of `B(m Lambda_alpha + n Lambda_beta)`.
pub fn a2_dim(m: u32, n: u32) -> usize {
    ((m + 1) * (n + 1) * (m + n + 2) / 2) as usize
}

/// All semistandard tableaux of the given shape, by direct enumeration.
pub fn enumerate(m: u32, n: u32) -> Vec<A2Tableau> {
    let len1 = (m + n) as usize;
    let n_us = n as usize;
    let mut out = Vec::new();
    let rows1 = weakly_increasing(len1, 1, 3);
    let rows2 = weakly_increasing(n_us, 2, 3);
    for r1 in &rows1 {
        for r2 in &rows2 {
            if (0..n_us).all(|c| r1[c] < r2[c]) {
                out.push(A2Tableau { m, n, row1: r1.clone(), row2: r2.clone() });
            }
        }
    }
    out.sort();
    out
}

fn weakly_increasing(len: usize, lo: u8, hi: u8) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &out {
            let start = w.last().copied().unwrap_or(lo);
            for x in start..=hi {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// String coordinates: the element `f_beta^r f_alpha^q f_beta^p` applied to the highest weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StringCoords {
    pub p: u32,
    pub q: u32,
    pub r: u32,
}

impl StringCoords {
    pub fn in_range(self, m: u32, n: u32) -> bool {
        self.p <= n && self.p <= self.q && self.q <= self.p + m && self.r + 2 * self.p <= n + self.q
    }
}

/// All in-range string coordinates for a shape, in lexicographic order.
pub fn coords_in_range(m: u32, n: u32) -> Vec<StringCoords> {
    let mut v = Vec::with_capacity(a2_dim(m, n));
    for p in 0..=n {
        for q in p..=p + m {
            for r in 0..=(n + q - 2 * p) {
                v.push(StringCoords { p, q, r });
            }
        }
    }
    v
}

/// Apply `f_beta^r f_alpha^q f_beta^p` to the highest weight tableau.
pub fn from_coords(m: u32, n: u32, c: StringCoords) -> Result<A2Tableau> {
    let err = || Error::CoordsOutOfRange { m, n, p: c.p, q: c.q, r: c.r };
    if !c.in_range(m, n) {
        return Err(err());
    }
    let mut t = A2Tableau::highest(m, n);
    for (color, k) in [(A2Color::Beta, c.p), (A2Color::Alpha, c.q), (A2Color::Beta, c.r)] {
        for _ in 0..k {
            t = t.apply(Op::F, color).ok_or_else(err)?;
        }
    }
    Ok(t)
}

/// Recover string coordinates by peeling the strings off in reverse order.
pub fn string_coords(t: &A2Tableau) -> StringCoords {
    let mut t = t.clone();
    let take = |t: &mut A2Tableau, color| {
        let mut k = 0;
        while let Some(s) = t.apply(Op::E, color) {
            *t = s;
            k += 1;
        }
        k
    };
    let r = take(&mut t, A2Color::Beta);
    let q = take(&mut t, A2Color::Alpha);
    let p = take(&mut t, A2Color::Beta);
    StringCoords { p, q, r }
}

/// Index-based tables for one A2 crystal, keyed by string coordinates.
#[derive(Clone, Debug)]
pub struct A2Block {
    pub m: u32,
    pub n: u32,
    pub coords: Vec<StringCoords>,
    pub tableaux: Vec<A2Tableau>,
    index: HashMap<StringCoords, usize>,
    f: [Vec<Option<usize>>; 2],
    e: [Vec<Option<usize>>; 2],
}

impl A2Block {
    pub fn new(m: u32, n: u32) -> Self {
        let coords = coords_in_range(m, n);
        let tableaux: Vec<A2Tableau> = coords
            .iter()
            .map(|&c| from_coords(m, n, c).expect("coordinates are in range"))
            .collect();
        let index: HashMap<StringCoords, usize> = coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let by_tab: HashMap<&A2Tableau, usize> = tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
        assert_eq!(by_tab.len(), coords.len(), "string coordinates are not injective for ({m},{n})");
        let table = |op: Op, color: A2Color| -> Vec<Option<usize>> {
            tableaux.iter().map(|t| t.apply(op, color).map(|s| by_tab[&s])).collect()
        };
        let f = [table(Op::F, A2Color::Alpha), table(Op::F, A2Color::Beta)];
        let e = [table(Op::E, A2Color::Alpha), table(Op::E, A2Color::Beta)];
        A2Block { m, n, coords, tableaux, index, f, e }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn index_of(&self, c: StringCoords) -> Option<usize> {
        self.index.get(&c).copied()
    }

    pub fn apply(&self, op: Op, color: A2Color, c: StringCoords) -> Option<StringCoords> {
        let idx = self.index_of(c)?;
        let tbl = match op {
            Op::F => &self.f[color.index()],
            Op::E => &self.e[color.index()],
        };
        tbl[idx].map(|j| self.coords[j])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_graph() {
        let ts = enumerate(1, 0);
        assert_eq!(ts.len(), 3);
        let one = A2Tableau { m: 1, n: 0, row1: vec![1], row2: vec![] };
        let two = one.apply(Op::F, A2Color::Alpha).unwrap();
        assert_eq!(two.row1, vec![2]);
        assert_eq!(two.apply(Op::F, A2Color::Beta).unwrap().row1, vec![3]);
        assert!(one.apply(Op::F, A2Color::Beta).is_none());
        assert!(one.apply(Op::E, A2Color::Alpha).is_none());
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate(0, 0).len(), 1);
        assert_eq!(enumerate(1, 1).len(), 8);
        for m in 0..=4 {
            for n in 0..=4 {
                assert_eq!(enumerate(m, n).len(), a2_dim(m, n));
            }
        }
    }

    #[test]
    fn coords_on_adjoint_are_a_bijection() {
        let block = A2Block::new(1, 1);
        assert_eq!(block.len(), 8);
        let mut ts = block.tableaux.clone();
        ts.sort();
        assert_eq!(ts, enumerate(1, 1));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(from_coords(1, 1, StringCoords { p: 2, q: 2, r: 0 }).is_err());
    }

    #[test]
    fn highest_from_lowest() {
        // hw = e_beta^{j0} e_alpha^{j1+j0} e_beta^{j1} (lw) with (j1, j0) = (2, 1)
        let (j1, j0) = (2u32, 1u32);
        let hw = A2Tableau::highest(j1, j0);
        let mut lw = hw.clone();
        loop {
            let next = lw.apply(Op::F, A2Color::Alpha).or_else(|| lw.apply(Op::F, A2Color::Beta));
            match next {
                Some(s) => lw = s,
                None => break,
            }
        }
        let mut t = lw;
        for (color, k) in [(A2Color::Beta, j1), (A2Color::Alpha, j1 + j0), (A2Color::Beta, j0)] {
            for _ in 0..k {
                t = t.apply(Op::E, color).unwrap();
            }
        }
        assert_eq!(t, hw);
    }
}
