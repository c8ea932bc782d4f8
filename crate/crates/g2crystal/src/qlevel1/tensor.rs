//! The tensor square `V^1_x (x) V^1_y` and its highest weight vectors.
//!
//! `Delta(e_i) = e_i (x) t_i^-1 + 1 (x) e_i` and `Delta(f_i) = f_i (x) 1 + t_i (x) f_i`.
//! In the spectral twist `e_0` carries `x` on the first factor and `y` on
//! the second, `f_0` carries `x^-1` and `y^-1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::linalg::nullspace;
use super::module::{bi, h, Gen, BASIS, DIM, V1, WT12};
use super::qrat::{qfact, qi_pow, qint, qr, QRat};
use super::xy::XY;

/// A vector of the tensor square with coefficients in `Q(q)[x^+-1, y^+-1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TVec(BTreeMap<(usize, usize), XY>);

impl TVec {
    pub fn zero() -> Self {
        TVec(BTreeMap::new())
    }

    /// Build from `(coefficient, first, second)` with basis names.
    pub fn from_terms(terms: &[(QRat, &str, &str)]) -> Self {
        let mut v = TVec::zero();
        for (c, a, b) in terms {
            v.add_at((bi(a), bi(b)), &XY::constant(c.clone()));
        }
        v
    }

    pub fn basis(a: &str, b: &str) -> Self {
        TVec::from_terms(&[(QRat::one(), a, b)])
    }

    fn add_at(&mut self, k: (usize, usize), c: &XY) {
        if c.is_zero() {
            return;
        }
        let s = match self.0.get(&k) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if s.is_zero() {
            self.0.remove(&k);
        } else {
            self.0.insert(k, s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, a: &str, b: &str) -> XY {
        self.0.get(&(bi(a), bi(b))).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> Vec<(usize, usize)> {
        self.0.keys().copied().collect()
    }

    pub fn add(&self, o: &TVec) -> TVec {
        let mut v = self.clone();
        for (k, c) in &o.0 {
            v.add_at(*k, c);
        }
        v
    }

    pub fn scale(&self, c: &XY) -> TVec {
        let mut v = TVec::zero();
        for (k, d) in &self.0 {
            v.add_at(*k, &(d * c));
        }
        v
    }

    /// `(wt_1, wt_2)` of every term, or `None` when the vector is not a weight vector.
    pub fn weight(&self) -> Option<(i32, i32)> {
        let mut ws = self.0.keys().map(|&(a, b)| (WT12[a].0 + WT12[b].0, WT12[a].1 + WT12[b].1));
        let w = ws.next()?;
        ws.all(|v| v == w).then_some(w)
    }
}

impl fmt::Display for TVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> =
            self.0.iter().map(|(&(a, b), c)| format!("[{c}] v{} (x) v{}", BASIS[a], BASIS[b])).collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `Delta(g)` on the tensor square, with or without the spectral twist.
pub fn apply(m: &V1, g: Gen, v: &TVec, spectral: bool) -> TVec {
    let (i, raising) = match g {
        Gen::E(i) => (i, true),
        Gen::F(i) => (i, false),
    };
    let twist = spectral && i == 0;
    let s = if raising { 1 } else { -1 };
    let (sx, sy) = if twist {
        (XY::monomial(QRat::one(), s, 0), XY::monomial(QRat::one(), 0, s))
    } else {
        (one(), one())
    };
    let mut out = TVec::zero();
    for (&(a, b), c) in &v.0 {
        for (a2, k) in m.column(g, a) {
            let t = if raising { qi_pow(i, -h(i, b)) } else { QRat::one() };
            out.add_at((*a2, b), &(&c.scale(&(k * &t)) * &sx));
        }
        for (b2, k) in m.column(g, b) {
            let t = if raising { QRat::one() } else { qi_pow(i, h(i, a)) };
            out.add_at((a, *b2), &(&c.scale(&(k * &t)) * &sy));
        }
    }
    out
}

fn one() -> XY {
    XY::constant(QRat::one())
}

/// Divided power `g^(n)` with the spectral twist.
pub fn apply_divided(m: &V1, g: Gen, n: u32, v: &TVec) -> TVec {
    let i = match g {
        Gen::E(i) | Gen::F(i) => i,
    };
    let mut w = v.clone();
    for _ in 0..n {
        w = apply(m, g, &w, true);
    }
    w.scale(&XY::constant(qfact(n, i).inv()))
}

/// A word of divided powers written left to right; the rightmost acts first.
pub fn apply_word(m: &V1, word: &[(Gen, u32)], v: &TVec) -> TVec {
    word.iter().rev().fold(v.clone(), |w, &(g, n)| apply_divided(m, g, n, &w))
}

/// The highest weight vectors of `V^1 (x) V^1` for the classical subalgebra.
#[derive(Clone, Debug)]
pub struct SingularVectors {
    pub u_2l1: TVec,
    pub u_3l2: TVec,
    pub u_2l2: TVec,
    /// Three vectors of weight `Lambda_1`.
    pub u_l1: [TVec; 3],
    /// Two vectors of weight `0`.
    pub u_0: [TVec; 2],
    /// The solved coefficient of `v01 (x) v02` and `v02 (x) v01` in `u_0[1]`, up to `-q^6`.
    pub zero_coefficient: QRat,
}

fn neg(c: QRat) -> QRat {
    -&c
}

/// `u_0[1]` with `c` as the coefficient of `v01 (x) v02` and `v02 (x) v01` (times `-q^6`).
fn u0_second(c: &QRat) -> TVec {
    let d2 = qint(2, 2);
    let d3 = qint(3, 2);
    let d21 = qint(2, 1);
    let q = QRat::q_pow;
    let over = |a: QRat, b: &QRat| &a / b;
    let q6 = q(6);
    TVec::from_terms(&[
        (QRat::one(), "1", "-1"),
        (neg(q(3)), "2", "-2"),
        (over(q(2), &d3), "3", "-3"),
        (neg(over(q(3), &d3)), "4", "-4"),
        (over(q(6), &d3), "5", "-5"),
        (q(6), "6", "-6"),
        (neg(over(q(6), &(&d2 * &d3))), "01", "01"),
        (neg(over(q(6), &d21)), "02", "02"),
        (over(q(8), &d3), "-5", "5"),
        (q(12), "-6", "6"),
        (neg(over(q(11), &d3)), "-4", "4"),
        (over(q(12), &d3), "-3", "3"),
        (neg(q(15)), "-2", "2"),
        (q(18), "-1", "1"),
        (neg(&q6 * c), "01", "02"),
        (neg(&q6 * c), "02", "01"),
        (neg(over(q(6), &(&d21 * &d21))), "02", "9"),
        (neg(over(q(6), &(&d21 * &d21))), "9", "02"),
    ])
}

/// `Delta(e_1)` and `Delta(e_2)` of a vector.
fn raise12(m: &V1, v: &TVec) -> [TVec; 2] {
    [apply(m, Gen::E(1), v, false), apply(m, Gen::E(2), v, false)]
}

/// Solve for the coefficient that makes `u_0[1]` highest weight.
pub fn solve_zero_coefficient(m: &V1) -> Option<QRat> {
    let base = raise12(m, &u0_second(&QRat::zero()));
    let unit = raise12(m, &u0_second(&QRat::one()));
    let mut sol: Option<QRat> = None;
    for (b, u) in base.iter().zip(&unit) {
        for k in u.support().into_iter().chain(b.support()) {
            let c0 = b.0.get(&k).cloned().unwrap_or_default();
            let c1 = u.0.get(&k).cloned().unwrap_or_default();
            let slope = &c1 - &c0;
            let (a, s) = (constant_of(&c0)?, constant_of(&slope)?);
            if s.is_zero() {
                if !a.is_zero() {
                    return None;
                }
                continue;
            }
            let c = -&(&a / &s);
            match &sol {
                Some(prev) if prev != &c => return None,
                _ => sol = Some(c),
            }
        }
    }
    sol
}

fn constant_of(c: &XY) -> Option<QRat> {
    let mut terms = c.terms();
    match (terms.next(), terms.next()) {
        (None, _) => Some(QRat::zero()),
        (Some((&(0, 0), v)), None) => Some(v.clone()),
        _ => None,
    }
}

impl SingularVectors {
    pub fn build(m: &V1) -> Option<Self> {
        let c = solve_zero_coefficient(m)?;
        let q = QRat::q_pow;
        let (d2, d3, d21) = (qint(2, 2), qint(3, 2), qint(2, 1));
        let u_2l1 = TVec::basis("1", "1");
        let u_3l2 = TVec::from_terms(&[(QRat::one(), "1", "2"), (neg(q(3)), "2", "1")]);
        let u_2l2 = TVec::from_terms(&[
            (QRat::one(), "1", "5"),
            (neg(q(3)), "2", "4"),
            (&(&d2 / &d3) * &q(4), "3", "3"),
            (neg(q(7)), "4", "2"),
            (q(10), "5", "1"),
        ]);
        let r = &d21 / &d3;
        let u_l1c = TVec::from_terms(&[
            (QRat::one(), "1", "02"),
            (neg(&d21 * &q(6)), "2", "6"),
            (&r * &q(5), "3", "4"),
            (neg(&r * &q(6)), "4", "3"),
            (&d21 * &q(9), "6", "2"),
            (neg(q(12)), "02", "1"),
        ]);
        Some(SingularVectors {
            u_2l1,
            u_3l2,
            u_2l2,
            u_l1: [TVec::basis("1", "9"), TVec::basis("9", "1"), u_l1c],
            u_0: [TVec::basis("9", "9"), u0_second(&c)],
            zero_coefficient: c,
        })
    }

    /// `(name, vector, expected (wt_1, wt_2))`.
    pub fn all(&self) -> Vec<(&'static str, &TVec, (i32, i32))> {
        vec![
            ("u(2 Lambda_1)", &self.u_2l1, (2, 0)),
            ("u(3 Lambda_2)", &self.u_3l2, (0, 3)),
            ("u(2 Lambda_2)", &self.u_2l2, (0, 2)),
            ("u(Lambda_1)[1]", &self.u_l1[0], (1, 0)),
            ("u(Lambda_1)[2]", &self.u_l1[1], (1, 0)),
            ("u(Lambda_1)[3]", &self.u_l1[2], (1, 0)),
            ("u(0)[1]", &self.u_0[0], (0, 0)),
            ("u(0)[2]", &self.u_0[1], (0, 0)),
        ]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularCheck {
    pub name: &'static str,
    pub weight_ok: bool,
    pub highest: bool,
}

/// Weight and highest-weight checks for each vector.
pub fn check_singular(m: &V1, s: &SingularVectors) -> Vec<SingularCheck> {
    s.all()
        .into_iter()
        .map(|(name, v, w)| SingularCheck {
            name,
            weight_ok: v.weight() == Some(w),
            highest: raise12(m, v).iter().all(TVec::is_zero),
        })
        .collect()
}

/// Dimension of the space of weight-zero vectors killed by `e_1` and `e_2`.
pub fn zero_weight_singular_dim(m: &V1) -> usize {
    let pairs: Vec<(usize, usize)> = (0..DIM)
        .flat_map(|a| (0..DIM).map(move |b| (a, b)))
        .filter(|&(a, b)| WT12[a].0 + WT12[b].0 == 0 && WT12[a].1 + WT12[b].1 == 0)
        .collect();
    let mut rows: BTreeMap<(usize, usize, usize), Vec<QRat>> = BTreeMap::new();
    for (col, &(a, b)) in pairs.iter().enumerate() {
        let v = TVec::from_terms(&[(QRat::one(), BASIS[a], BASIS[b])]);
        for (i, img) in raise12(m, &v).iter().enumerate() {
            for (&k, c) in &img.0 {
                let row = rows.entry((i, k.0, k.1)).or_insert_with(|| vec![QRat::zero(); pairs.len()]);
                row[col] = constant_of(c).expect("no spectral parameters in e_1, e_2");
            }
        }
    }
    let rows: Vec<Vec<QRat>> = rows.into_values().collect();
    nullspace(&rows, pairs.len()).len()
}

/// The coefficient `1 / ([2]_1 [2]_2)` written as `q^4 / ((q^2 + 1)(q^6 + 1))`.
pub fn expected_zero_coefficient() -> QRat {
    qr(&[(1, 4)], &[(1, 8), (1, 6), (1, 2), (1, 0)])
}
