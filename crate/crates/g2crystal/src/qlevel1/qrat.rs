//! Rational functions in `q` over the integers in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::poly::{exact_div, poly_gcd, LPoly};

/// `num / den` with `den` free of powers of `q`, coprime to `num`, with
/// integer content shared by neither and a positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRat {
    num: LPoly,
    den: LPoly,
}

impl QRat {
    pub fn zero() -> Self {
        QRat { num: LPoly::zero(), den: LPoly::one() }
    }

    pub fn one() -> Self {
        QRat::from_poly(LPoly::one())
    }

    pub fn from_int(v: i64) -> Self {
        QRat::from_poly(LPoly::constant(v))
    }

    pub fn from_poly(p: LPoly) -> Self {
        QRat { num: p, den: LPoly::one() }
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        QRat::from_poly(LPoly::q_pow(e))
    }

    pub fn new(num: LPoly, den: LPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return QRat::zero();
        }
        let s = den.low();
        let (mut num, mut den) = (num.shift(-s), den.shift(-s));
        if den.coeffs().len() > 1 {
            let g = poly_gcd(&num, &den);
            if !g.is_one() {
                num = exact_div(&num, &g);
                den = exact_div(&den, &g);
            }
        }
        let c = num.content().gcd(&den.content());
        if !c.is_zero() && c != BigInt::from(1) {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        if den.leading().is_negative() {
            num = -&num;
            den = -&den;
        }
        QRat { num, den }
    }

    pub fn num(&self) -> &LPoly {
        &self.num
    }

    pub fn den(&self) -> &LPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> QRat {
        QRat::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i32) -> QRat {
        let base = if k < 0 { self.inv() } else { self.clone() };
        (0..k.unsigned_abs()).fold(QRat::one(), |acc, _| &acc * &base)
    }

    /// Substitute `q -> q^k`, `k > 0`.
    pub fn subs_power(&self, k: i32) -> QRat {
        QRat::new(self.num.subs_power(k), self.den.subs_power(k))
    }

    /// `q`-adic valuation: the lowest exponent of the expansion around `q = 0`.
    pub fn valuation(&self) -> Option<i32> {
        if self.is_zero() {
            return None;
        }
        Some(self.num.low() - self.den.low())
    }

    /// The value at `q = 0` when the valuation is nonnegative, as a fraction.
    pub fn at_zero(&self) -> Option<(BigInt, BigInt)> {
        match self.valuation() {
            None => Some((BigInt::zero(), BigInt::from(1))),
            Some(v) if v > 0 => Some((BigInt::zero(), BigInt::from(1))),
            Some(0) => Some((self.num.coeff(self.num.low()), self.den.coeff(self.den.low()))),
            _ => None,
        }
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, o: &QRat) -> QRat {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return QRat::from_poly(&self.num + &o.num);
            }
            return QRat::new(&self.num + &o.num, self.den.clone());
        }
        QRat::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, o: &QRat) -> QRat {
        self + &(-o)
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, o: &QRat) -> QRat {
        if self.is_zero() || o.is_zero() {
            return QRat::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return QRat::from_poly(&self.num * &o.num);
        }
        QRat::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &QRat {
    type Output = QRat;
    fn div(self, o: &QRat) -> QRat {
        assert!(!o.is_zero(), "division by zero");
        QRat::new(&self.num * &o.den, &self.den * &o.num)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QRat {
            type Output = QRat;
            fn $m(self, o: QRat) -> QRat {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl From<LPoly> for QRat {
    fn from(p: LPoly) -> Self {
        QRat::from_poly(p)
    }
}

impl From<i64> for QRat {
    fn from(v: i64) -> Self {
        QRat::from_int(v)
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// `q_i`: `q^3` for `i = 0, 1` and `q` for `i = 2`.
pub fn q_exp(i: usize) -> i32 {
    [3, 3, 1][i]
}

/// `q_i^e`.
pub fn qi_pow(i: usize, e: i32) -> QRat {
    QRat::q_pow(q_exp(i) * e)
}

/// `[m]_i = (q_i^m - q_i^-m) / (q_i - q_i^-1)`.
pub fn qint(m: u32, i: usize) -> QRat {
    let s = q_exp(i);
    let m = m as i32;
    QRat::from_poly(LPoly::from_terms(
        &(0..m).map(|k| (1, s * (m - 1 - 2 * k))).collect::<Vec<_>>(),
    ))
}

/// `[k]_i!`.
pub fn qfact(k: u32, i: usize) -> QRat {
    (1..=k).fold(QRat::one(), |acc, m| &acc * &qint(m, i))
}

/// Build a [`QRat`] from `(coefficient, exponent)` terms of numerator and denominator.
pub fn qr(num: &[(i64, i32)], den: &[(i64, i32)]) -> QRat {
    QRat::new(LPoly::from_terms(num), LPoly::from_terms(den))
}

/// Laurent polynomial from terms.
pub fn qp(terms: &[(i64, i32)]) -> QRat {
    QRat::from_poly(LPoly::from_terms(terms))
}

/// A positive integer value of `q` for spot checks.
pub fn eval_at(x: &QRat, v: i64) -> Option<(BigInt, BigInt)> {
    let v = BigInt::from(v);
    let (a, b) = x.num.eval_ratio(&v);
    let (c, d) = x.den.eval_ratio(&v);
    if c.is_zero() {
        return None;
    }
    Some((a * d, b * c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_integers() {
        assert!(qint(1, 0).is_one());
        assert_eq!(qint(2, 1), qp(&[(1, 3), (1, -3)]));
        assert_eq!(qint(3, 2), qp(&[(1, 2), (1, 0), (1, -2)]));
    }

    #[test]
    fn canonical_form() {
        let a = qr(&[(1, 2), (-1, 0)], &[(1, 1), (-1, 0)]);
        assert_eq!(a, qp(&[(1, 1), (1, 0)]));
        let b = &QRat::one() / &qint(2, 1);
        assert_eq!(b.to_string(), "(q^3)/(q^6+1)");
        assert_eq!(&(&b * &qint(2, 1)), &QRat::one());
        let h = &QRat::from_int(2) / &QRat::from_int(-4);
        assert_eq!(h, qr(&[(-1, 0)], &[(2, 0)]));
    }
}
