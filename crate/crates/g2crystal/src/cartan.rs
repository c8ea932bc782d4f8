//! Cartan data of the affine algebra G2(1) and its classical weight lattice.
//!
//! Indices are always ordered (0, 1, 2). Node 1 is the long simple root of
//! the finite G2 and node 2 the short one; node 0 is the affine node.

use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generalized Cartan matrix, `CARTAN[i][j] = <h_i, alpha_j>`.
pub const CARTAN: [[i32; 3]; 3] = [[2, -1, 0], [-1, 2, -1], [0, -3, 2]];

/// Squared lengths `(alpha_i, alpha_i)`; `q_i = q^{root_norm}`.
pub const ROOT_NORMS: [i32; 3] = [3, 3, 1];

/// Coefficients of the canonical central element `c = h_0 + 2 h_1 + h_2`.
pub const CENTRAL: [i32; 3] = [1, 2, 1];

/// Checked access to the Cartan matrix.
pub fn cartan_entry(i: usize, j: usize) -> Result<i32> {
    if i > 2 || j > 2 {
        return Err(Error::IndexOutOfRange { i, j });
    }
    Ok(CARTAN[i][j])
}

/// A classical weight written in the fundamental-weight basis `(Lambda_0, Lambda_1, Lambda_2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassicalWeight {
    pub m0: i32,
    pub m1: i32,
    pub m2: i32,
}

impl ClassicalWeight {
    pub const ZERO: ClassicalWeight = ClassicalWeight { m0: 0, m1: 0, m2: 0 };

    pub const fn new(m0: i32, m1: i32, m2: i32) -> Self {
        ClassicalWeight { m0, m1, m2 }
    }

    pub fn from_array(a: [i32; 3]) -> Self {
        ClassicalWeight::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [i32; 3] {
        [self.m0, self.m1, self.m2]
    }

    /// The fundamental weight `Lambda_i`.
    pub fn fundamental(i: usize) -> Self {
        let mut a = [0; 3];
        a[i] = 1;
        ClassicalWeight::from_array(a)
    }

    /// `<h_i, self>`.
    pub fn wt(self, i: usize) -> i32 {
        self.to_array()[i]
    }

    /// The classical image of the simple root `alpha_i`: the i-th column of the Cartan matrix.
    pub fn simple_root(i: usize) -> Self {
        ClassicalWeight::new(CARTAN[0][i], CARTAN[1][i], CARTAN[2][i])
    }

    /// `<c, self>`.
    pub fn level(self) -> i32 {
        CENTRAL[0] * self.m0 + CENTRAL[1] * self.m1 + CENTRAL[2] * self.m2
    }

    pub fn is_dominant(self) -> bool {
        self.m0 >= 0 && self.m1 >= 0 && self.m2 >= 0
    }
}

impl Add for ClassicalWeight {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        ClassicalWeight::new(self.m0 + o.m0, self.m1 + o.m1, self.m2 + o.m2)
    }
}

impl Sub for ClassicalWeight {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        ClassicalWeight::new(self.m0 - o.m0, self.m1 - o.m1, self.m2 - o.m2)
    }
}

impl Neg for ClassicalWeight {
    type Output = Self;
    fn neg(self) -> Self {
        ClassicalWeight::new(-self.m0, -self.m1, -self.m2)
    }
}

impl std::fmt::Display for ClassicalWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.m0, self.m1, self.m2)
    }
}

/// `<c, w>` as a free function.
pub fn level(w: ClassicalWeight) -> i32 {
    w.level()
}

/// All dominant classical weights of level `l`, sorted.
pub fn dominant_weights(l: u32) -> Vec<ClassicalWeight> {
    let l = l as i32;
    let mut out = Vec::new();
    for m1 in 0..=l / 2 {
        for m0 in 0..=(l - 2 * m1) {
            out.push(ClassicalWeight::new(m0, m1, l - 2 * m1 - m0));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_entries() {
        assert_eq!(cartan_entry(1, 1).unwrap(), 2);
        assert_eq!(cartan_entry(2, 1).unwrap(), -3);
        assert_eq!(cartan_entry(0, 2).unwrap(), 0);
        assert!(cartan_entry(3, 0).is_err());
    }

    #[test]
    fn symmetrized_matrix_is_symmetric() {
        // (alpha_i, alpha_j) = <h_i, alpha_j> (alpha_i, alpha_i) / 2
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(CARTAN[i][j] * ROOT_NORMS[i], CARTAN[j][i] * ROOT_NORMS[j]);
            }
        }
        assert_eq!(CARTAN[0][2] * ROOT_NORMS[0], 0);
    }

    #[test]
    fn levels() {
        assert_eq!(level(ClassicalWeight::ZERO), 0);
        assert_eq!(ClassicalWeight::fundamental(0).level(), 1);
        assert_eq!(ClassicalWeight::new(-2, 1, 0).level(), 0);
        for i in 0..3 {
            assert_eq!(ClassicalWeight::simple_root(i).level(), 0);
        }
    }

    #[test]
    fn dominant_weight_counts() {
        assert_eq!(dominant_weights(0), vec![ClassicalWeight::ZERO]);
        assert_eq!(dominant_weights(1).len(), 2);
        assert_eq!(dominant_weights(4).len(), 9);
        for l in 0..=12u32 {
            let li = l as i32;
            let expected: i32 = (0..=li / 2).map(|m1| li - 2 * m1 + 1).sum();
            let ws = dominant_weights(l);
            assert_eq!(ws.len() as i32, expected);
            assert!(ws.iter().all(|w| w.is_dominant() && w.level() == li));
        }
    }
}
