//! The model crystal `A`, its operators `E_A`/`F_A`, the involution `C_A`, the
//! bijection `Phi : A -> G^l` and the resulting affine crystal `B^l`.
//!
//! An element of `A` at level `l` is named by a block `(i, k, j)` with
//! `0 <= i <= l/2` and `i <= k, j <= l - i`, together with string coordinates
//! `(p, q, r)`: it is `f_0^r f_1^q f_0^p` applied to the highest weight element
//! of the A2 crystal `B(k Lambda_1 + j Lambda_0)`.

mod anchors;
mod classify;
mod ea;
mod tower;
mod verify;

pub use anchors::{anchors, Anchor, AnchorRule};
pub use classify::{classify, displayed_br, terminal_set, BSet, Classification};
pub use ea::{ea_plus, fa_plus};
pub use tower::{phi_by_highest_weights, Level, PhiRule, Tower};
pub use verify::{verify_construction, AxiomResult, ConstructionReport};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::a2::StringCoords;

/// Mathematical floor division.
pub(crate) fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// A parameter `(i, k, j, p, q, r)` naming an element of the model crystal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AParam {
    pub i: u32,
    pub k: u32,
    pub j: u32,
    pub p: u32,
    pub q: u32,
    pub r: u32,
}

impl AParam {
    pub const fn new(i: u32, k: u32, j: u32, p: u32, q: u32, r: u32) -> Self {
        AParam { i, k, j, p, q, r }
    }

    /// Highest weight element of block `(i, k, j)`.
    pub const fn hw(i: u32, k: u32, j: u32) -> Self {
        AParam::new(i, k, j, 0, 0, 0)
    }

    /// Build from signed values, returning `None` if any is negative.
    pub fn from_signed(v: [i64; 6]) -> Option<Self> {
        if v.iter().any(|&x| x < 0) {
            return None;
        }
        Some(AParam::new(v[0] as u32, v[1] as u32, v[2] as u32, v[3] as u32, v[4] as u32, v[5] as u32))
    }

    pub fn signed(self) -> [i64; 6] {
        [self.i, self.k, self.j, self.p, self.q, self.r].map(i64::from)
    }

    pub fn coords(self) -> StringCoords {
        StringCoords { p: self.p, q: self.q, r: self.r }
    }

    pub fn with_coords(self, c: StringCoords) -> Self {
        AParam { p: c.p, q: c.q, r: c.r, ..self }
    }

    pub fn block(self) -> (u32, u32, u32) {
        (self.i, self.k, self.j)
    }

    pub fn is_valid(self, l: u32) -> bool {
        let AParam { i, k, j, p, q, r } = self;
        2 * i <= l
            && i <= k
            && k + i <= l
            && i <= j
            && j + i <= l
            && p <= j
            && p <= q
            && q <= p + k
            && r + 2 * p <= j + q
    }

    /// `(wt_1, wt_0)` of the element inside its A2 block.
    pub fn weight10(self) -> (i32, i32) {
        let [_, k, j, p, q, r] = self.signed().map(|x| x as i32);
        (k + p - 2 * q + r, j - 2 * p + q - 2 * r)
    }

    /// `-2 wt_1 - wt_0`, the weight seen by `E_A`/`F_A`.
    pub fn weight_ea(self) -> i32 {
        let (w1, w0) = self.weight10();
        -2 * w1 - w0
    }

    /// The embedding of level `l - 1` into level `l`.
    pub fn iota(self) -> Self {
        AParam::new(self.i, self.k + 1, self.j + 1, self.p, self.q + 1, self.r + 1)
    }

    /// Inverse of [`AParam::iota`] when it exists.
    pub fn iota_inv(self) -> Option<Self> {
        let v = self.signed();
        AParam::from_signed([v[0], v[1] - 1, v[2] - 1, v[3], v[4] - 1, v[5] - 1])
    }

    /// The involution: swap `(k, j)` and map `(p, q, r) -> (k - q + p, k + j - q, j + q - 2p - r)`.
    pub fn involution(self) -> Self {
        let [i, k, j, p, q, r] = self.signed();
        AParam::from_signed([i, j, k, k - q + p, k + j - q, j + q - 2 * p - r])
            .expect("involution of a valid parameter is valid")
    }
}

impl fmt::Display for AParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(i={},k={},j={},p={},q={},r={})", self.i, self.k, self.j, self.p, self.q, self.r)
    }
}

/// All blocks `(i, k, j)` of level `l`.
pub fn blocks(l: u32) -> Vec<(u32, u32, u32)> {
    let mut v = Vec::new();
    for i in 0..=l / 2 {
        for k in i..=l - i {
            for j in i..=l - i {
                v.push((i, k, j));
            }
        }
    }
    v
}

/// All parameters of level `l` in block order.
pub fn enumerate_a(l: u32) -> Vec<AParam> {
    let mut v = Vec::new();
    for (i, k, j) in blocks(l) {
        for c in crate::a2::coords_in_range(k, j) {
            v.push(AParam::new(i, k, j, c.p, c.q, c.r));
        }
    }
    v
}

/// `sum_i sum_{k,j} #B(k Lambda_1 + j Lambda_0)` without enumerating.
pub fn a_count(l: u32) -> u64 {
    blocks(l).into_iter().map(|(_, k, j)| crate::a2::a2_dim(k, j) as u64).sum()
}

/// `sum_{n <= l} #B(n Lambda_1)`.
pub fn g_count(l: u32) -> u64 {
    (0..=l as u64).map(crate::g2::dim).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_a(0).len(), 1);
        assert_eq!(enumerate_a(1).len(), 15);
        assert_eq!(enumerate_a(2).len(), 92);
        for l in 0..=8 {
            assert_eq!(a_count(l), g_count(l));
        }
    }

    #[test]
    fn floor_is_mathematical() {
        assert_eq!(floor_div(-1, 3), -1);
        assert_eq!(floor_div(-3, 3), -1);
        assert_eq!(floor_div(4, 3), 1);
    }

    #[test]
    fn involution_on_highest_weight() {
        // C_A(hw of (k, j)) = f_0^j f_1^{k+j} f_0^k applied to hw of (j, k)
        let b = AParam::hw(0, 2, 1);
        assert_eq!(b.involution(), AParam::new(0, 1, 2, 2, 3, 1));
        for l in 0..=3 {
            for b in enumerate_a(l) {
                let c = b.involution();
                assert!(c.is_valid(l));
                assert_eq!(c.involution(), b);
            }
        }
    }

    #[test]
    fn iota_is_valid() {
        for l in 1..=4 {
            for b in enumerate_a(l - 1) {
                assert!(b.iota().is_valid(l));
                assert_eq!(b.iota().iota_inv(), Some(b));
            }
        }
    }
}
