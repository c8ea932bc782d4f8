//! Laurent polynomials in the spectral parameters `x`, `y` over `Q(q)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::qrat::QRat;

/// `sum c_(a,b) x^a y^b` with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XY(BTreeMap<(i32, i32), QRat>);

impl XY {
    pub fn zero() -> Self {
        XY(BTreeMap::new())
    }

    pub fn constant(c: QRat) -> Self {
        XY::monomial(c, 0, 0)
    }

    /// `c x^a y^b`.
    pub fn monomial(c: QRat, a: i32, b: i32) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert((a, b), c);
        }
        XY(m)
    }

    pub fn x() -> Self {
        XY::monomial(QRat::one(), 1, 0)
    }

    pub fn y() -> Self {
        XY::monomial(QRat::one(), 0, 1)
    }

    /// Build from `(coefficient, x exponent, y exponent)` terms.
    pub fn from_terms(terms: &[(QRat, i32, i32)]) -> Self {
        terms.iter().fold(XY::zero(), |acc, (c, a, b)| &acc + &XY::monomial(c.clone(), *a, *b))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &QRat)> {
        self.0.iter()
    }

    pub fn scale(&self, c: &QRat) -> XY {
        if c.is_zero() {
            return XY::zero();
        }
        XY(self.0.iter().map(|(k, v)| (*k, v * c)).collect())
    }

    /// Multiply by `x^a y^b`.
    pub fn shift(&self, a: i32, b: i32) -> XY {
        XY(self.0.iter().map(|(&(i, j), v)| ((i + a, j + b), v.clone())).collect())
    }

    /// Exchange `x` and `y`.
    pub fn swap(&self) -> XY {
        XY(self.0.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect())
    }

    pub fn pow(&self, n: u32) -> XY {
        (0..n).fold(XY::constant(QRat::one()), |acc, _| &acc * self)
    }
}

impl Add for &XY {
    type Output = XY;
    fn add(self, o: &XY) -> XY {
        let mut m = self.0.clone();
        for (k, v) in &o.0 {
            let s = match m.get(k) {
                Some(c) => c + v,
                None => v.clone(),
            };
            if s.is_zero() {
                m.remove(k);
            } else {
                m.insert(*k, s);
            }
        }
        XY(m)
    }
}

impl Neg for &XY {
    type Output = XY;
    fn neg(self) -> XY {
        XY(self.0.iter().map(|(k, v)| (*k, -v)).collect())
    }
}

impl Sub for &XY {
    type Output = XY;
    fn sub(self, o: &XY) -> XY {
        self + &(-o)
    }
}

impl Mul for &XY {
    type Output = XY;
    fn mul(self, o: &XY) -> XY {
        let mut acc = XY::zero();
        for (&(a, b), c) in &self.0 {
            for (&(i, j), d) in &o.0 {
                acc = &acc + &XY::monomial(c * d, a + i, b + j);
            }
        }
        acc
    }
}

impl fmt::Display for XY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .rev()
            .map(|(&(a, b), c)| {
                let mut s = format!("({c})");
                for (v, e) in [("x", a), ("y", b)] {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!("*{v}")),
                        _ => s.push_str(&format!("*{v}^{e}")),
                    }
                }
                s
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_shifts() {
        let q6 = QRat::q_pow(6);
        let a = &XY::x() - &XY::y().scale(&q6);
        let b = &XY::x() + &XY::y();
        let p = &a * &b;
        assert_eq!(p.terms().count(), 3);
        let m = XY::monomial(QRat::from_int(3), -1, 2);
        assert_eq!((&p * &m).shift(1, -2).scale(&QRat::from_int(3).inv()), p);
        assert_eq!(a.swap().swap(), a);
    }
}
