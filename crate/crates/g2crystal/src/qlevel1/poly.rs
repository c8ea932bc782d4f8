//! Laurent polynomials in `q` with integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `sum_k c[k] q^(low + k)`. The zero polynomial has no coefficients;
/// otherwise the first and last coefficients are nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LPoly {
    low: i32,
    c: Vec<BigInt>,
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly { low: 0, c: Vec::new() }
    }

    pub fn one() -> Self {
        LPoly::constant(1)
    }

    pub fn constant(v: i64) -> Self {
        LPoly::from_coeffs(0, vec![BigInt::from(v)])
    }

    /// `coef * q^e`.
    pub fn monomial(coef: i64, e: i32) -> Self {
        LPoly::from_coeffs(e, vec![BigInt::from(coef)])
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        LPoly::monomial(1, e)
    }

    /// Build from coefficients of `q^low, q^(low+1), ...`.
    pub fn from_coeffs(low: i32, c: Vec<BigInt>) -> Self {
        let mut p = LPoly { low, c };
        p.trim();
        p
    }

    /// Build from `(coefficient, exponent)` terms.
    pub fn from_terms(terms: &[(i64, i32)]) -> Self {
        terms.iter().fold(LPoly::zero(), |acc, &(c, e)| &acc + &LPoly::monomial(c, e))
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(Zero::is_zero) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|x| x.is_zero()).count();
        if lead == self.c.len() {
            self.c.clear();
            self.low = 0;
            return;
        }
        if lead > 0 {
            self.c.drain(..lead);
            self.low += lead as i32;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.c.len() == 1 && self.c[0].is_one()
    }

    /// Lowest exponent (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent.
    pub fn high(&self) -> i32 {
        self.low + self.c.len() as i32 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i32) -> BigInt {
        let k = e - self.low;
        if k < 0 || k as usize >= self.c.len() {
            BigInt::zero()
        } else {
            self.c[k as usize].clone()
        }
    }

    pub fn leading(&self) -> &BigInt {
        self.c.last().expect("nonzero polynomial")
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LPoly { low: self.low + e, c: self.c.clone() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        LPoly::from_coeffs(self.low, self.c.iter().map(|x| x * k).collect())
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Divide every coefficient by `k`, which must divide all of them.
    pub fn div_scalar(&self, k: &BigInt) -> Self {
        LPoly::from_coeffs(
            self.low,
            self.c
                .iter()
                .map(|x| {
                    let (d, r) = x.div_rem(k);
                    assert!(r.is_zero(), "inexact scalar division");
                    d
                })
                .collect(),
        )
    }

    /// Substitute `q -> q^k` for `k > 0`.
    pub fn subs_power(&self, k: i32) -> Self {
        assert!(k > 0);
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); (self.c.len() - 1) * k as usize + 1];
        for (i, x) in self.c.iter().enumerate() {
            c[i * k as usize] = x.clone();
        }
        LPoly::from_coeffs(self.low * k, c)
    }

    /// Value at an integer point `q = v`, with `v != 0` when negative powers occur.
    pub fn eval_ratio(&self, v: &BigInt) -> (BigInt, BigInt) {
        let mut num = BigInt::zero();
        for x in self.c.iter().rev() {
            num = num * v + x;
        }
        if self.low >= 0 {
            (num * v.pow(self.low as u32), BigInt::one())
        } else {
            (num, v.pow((-self.low) as u32))
        }
    }

    /// Lowest-order term `(coefficient, exponent)`, used for `q -> 0` limits.
    pub fn lowest_term(&self) -> Option<(BigInt, i32)> {
        self.c.first().map(|x| (x.clone(), self.low))
    }
}

/// Pseudo-remainder of ordinary polynomials given by coefficient vectors.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &lr * y;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let mut out: Vec<BigInt> = v.iter().map(|x| x / &g).collect();
    if out.last().is_some_and(Signed::is_negative) {
        for x in out.iter_mut() {
            *x = -&*x;
        }
    }
    out
}

/// Primitive greatest common divisor with positive leading coefficient,
/// ignoring powers of `q`.
pub fn poly_gcd(a: &LPoly, b: &LPoly) -> LPoly {
    if a.is_zero() {
        return LPoly::from_coeffs(0, primitive(&b.c));
    }
    if b.is_zero() {
        return LPoly::from_coeffs(0, primitive(&a.c));
    }
    let (mut x, mut y) = (primitive(&a.c), primitive(&b.c));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let r = prem(&x, &y);
        x = y;
        if r.is_empty() {
            return LPoly::from_coeffs(0, x);
        }
        y = primitive(&r);
    }
    LPoly::one()
}

/// Exact division `a / b` in `Z[q, q^-1]`; panics if `b` does not divide `a`.
pub fn exact_div(a: &LPoly, b: &LPoly) -> LPoly {
    assert!(!b.is_zero(), "division by zero polynomial");
    if a.is_zero() {
        return LPoly::zero();
    }
    if b.c.len() == 1 {
        return a.div_scalar(&b.c[0]).shift(-b.low);
    }
    let mut r = a.c.clone();
    let db = b.c.len() - 1;
    assert!(r.len() > db, "inexact polynomial division");
    let mut quot = vec![BigInt::zero(); r.len() - db];
    for k in (0..quot.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let (d, rem) = top.div_rem(b.leading());
        assert!(rem.is_zero(), "inexact polynomial division");
        for (i, y) in b.c.iter().enumerate() {
            r[k + i] -= &d * y;
        }
        quot[k] = d;
    }
    assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
    LPoly::from_coeffs(a.low - b.low, quot)
}

impl Add for &LPoly {
    type Output = LPoly;
    fn add(self, o: &LPoly) -> LPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high().max(o.high());
        let mut c = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, x) in self.c.iter().enumerate() {
            c[(self.low - low) as usize + i] += x;
        }
        for (i, x) in o.c.iter().enumerate() {
            c[(o.low - low) as usize + i] += x;
        }
        LPoly::from_coeffs(low, c)
    }
}

impl Neg for &LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        LPoly { low: self.low, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Sub for &LPoly {
    type Output = LPoly;
    fn sub(self, o: &LPoly) -> LPoly {
        self + &(-o)
    }
}

impl Mul for &LPoly {
    type Output = LPoly;
    fn mul(self, o: &LPoly) -> LPoly {
        if self.is_zero() || o.is_zero() {
            return LPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        LPoly::from_coeffs(self.low + o.low, c)
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in (0..self.c.len()).rev() {
            let x = &self.c[k];
            if x.is_zero() {
                continue;
            }
            let e = self.low + k as i32;
            let mag = x.abs();
            match (x.sign() == num_bigint::Sign::Minus, first) {
                (true, true) => f.write_str("-")?,
                (true, false) => f.write_str("-")?,
                (false, false) => f.write_str("+")?,
                (false, true) => {}
            }
            first = false;
            let unit = mag.is_one();
            match e.cmp(&0) {
                Ordering::Equal => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &[(i64, i32)]) -> LPoly {
        LPoly::from_terms(t)
    }

    #[test]
    fn arithmetic_and_display() {
        let a = p(&[(1, 3), (1, -3)]);
        assert_eq!(a.to_string(), "q^3+q^-3");
        let sq = &a * &a;
        assert_eq!(sq, p(&[(1, 6), (2, 0), (1, -6)]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn gcd_and_division() {
        let a = p(&[(1, 2), (-1, 0)]); // q^2 - 1
        let b = p(&[(1, 1), (-1, 0)]); // q - 1
        let c = p(&[(1, 1), (1, 0)]); // q + 1
        assert_eq!(poly_gcd(&a, &(&b * &b)), b);
        assert_eq!(exact_div(&a, &c), b);
        assert_eq!(poly_gcd(&a.scale(&BigInt::from(6)), &b.scale(&BigInt::from(4))), b);
    }
}
