//! Perfectness of `B^l`: minimal elements, the top weight, the level bound,
//! the `eps`/`phi` bijections and connectedness of `B^l (x) B^l`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::affine::Level;
use crate::cartan::{dominant_weights, ClassicalWeight};
use crate::g2::{GLetter, GLetter::*, GTableau};
use crate::signature::{two_factor_position, Op};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalElement {
    pub tableau: GTableau,
    pub eps: ClassicalWeight,
    pub phi: ClassicalWeight,
}

#[derive(Clone, Debug, Serialize)]
pub struct PerfectReport {
    pub level: u32,
    pub crystal_components: usize,
    pub square_size: usize,
    pub square_components: usize,
    pub cond_connected_square: bool,
    pub top_weight: Option<ClassicalWeight>,
    pub cond_unique_top_weight: bool,
    pub min_level: i32,
    pub cond_level_bound: bool,
    pub cond_eps_phi_bijective: bool,
    pub minimal: Vec<MinimalElement>,
}

impl PerfectReport {
    pub fn all_passed(&self) -> bool {
        self.cond_connected_square && self.cond_unique_top_weight && self.cond_level_bound && self.cond_eps_phi_bijective
    }
}

/// `(eps, phi)` as weights, for every tableau of the level.
pub fn eps_phi_table(level: &Level) -> Vec<(ClassicalWeight, ClassicalWeight)> {
    (0..level.g_len()).map(|g| level.eps_phi(g)).collect()
}

/// Tableaux `b` with `<c, eps(b)> = l`, in tableau order.
pub fn minimal_elements(level: &Level) -> Vec<MinimalElement> {
    let mut out: Vec<MinimalElement> = (0..level.g_len())
        .filter_map(|g| {
            let (eps, phi) = level.eps_phi(g);
            (eps.level() == level.l as i32).then(|| MinimalElement { tableau: level.tableau(g).clone(), eps, phi })
        })
        .collect();
    out.sort_by(|a, b| a.tableau.cmp(&b.tableau));
    out
}

/// The minimal elements added at each level `1..=7`, in the conventional listing.
pub fn listed_minimal_elements(l: u32) -> Vec<GTableau> {
    let t = |w: &[(GLetter, usize)]| {
        GTableau::from_letters(w.iter().flat_map(|&(x, n)| std::iter::repeat_n(x, n)).collect())
    };
    let new_at: [Vec<GTableau>; 8] = [
        vec![GTableau::empty()],
        vec![t(&[(Z1, 1)])],
        vec![t(&[(L1, 1), (B1, 1)]), t(&[(L3, 1), (B3, 1)])],
        vec![t(&[(L1, 1), (Z1, 1), (B1, 1)]), t(&[(L2, 1), (Z2, 1), (B2, 1)])],
        vec![
            t(&[(L1, 2), (B1, 2)]),
            t(&[(L1, 1), (L3, 1), (B3, 1), (B1, 1)]),
            t(&[(L2, 1), (L4, 1), (B4, 1), (B2, 1)]),
        ],
        vec![
            t(&[(L1, 2), (Z1, 1), (B1, 2)]),
            t(&[(L1, 1), (L2, 1), (Z2, 1), (B2, 1), (B1, 1)]),
            t(&[(L2, 1), (L3, 1), (Z2, 1), (B3, 1), (B2, 1)]),
        ],
        vec![
            t(&[(L1, 3), (B1, 3)]),
            t(&[(L1, 2), (L3, 1), (B3, 1), (B1, 2)]),
            t(&[(L1, 1), (L2, 1), (L4, 1), (B4, 1), (B2, 1), (B1, 1)]),
            t(&[(L2, 2), (L6, 1), (B6, 1), (B2, 2)]),
        ],
        vec![
            t(&[(L1, 3), (Z1, 1), (B1, 3)]),
            t(&[(L1, 2), (L2, 1), (Z2, 1), (B2, 1), (B1, 2)]),
            t(&[(L1, 1), (L2, 1), (L3, 1), (Z2, 1), (B3, 1), (B2, 1), (B1, 1)]),
            t(&[(L2, 2), (L4, 1), (Z2, 1), (B4, 1), (B2, 2)]),
        ],
    ];
    let mut out: Vec<GTableau> = new_at.iter().take(l.min(7) as usize + 1).flatten().cloned().collect();
    out.sort();
    out
}

/// Components of `B^l` under all colors.
pub fn crystal_components(level: &Level) -> usize {
    let n = level.g_len();
    let mut seen = vec![false; n];
    let mut comps = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        comps += 1;
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(g) = queue.pop_front() {
            for c in 0..3 {
                for op in [Op::E, Op::F] {
                    if let Some(h) = level.g_apply(op, c, g) {
                        if !std::mem::replace(&mut seen[h], true) {
                            queue.push_back(h);
                        }
                    }
                }
            }
        }
    }
    comps
}

/// Components of `B^l (x) B^l` under all colors, and its size.
pub fn square_components(level: &Level) -> (usize, usize) {
    let n = level.g_len();
    let strings: Vec<[(u32, u32); 3]> =
        (0..n).map(|g| [level.g_strings(g, 0), level.g_strings(g, 1), level.g_strings(g, 2)]).collect();
    let mut seen = vec![false; n * n];
    let mut comps = 0;
    for s in 0..n * n {
        if seen[s] {
            continue;
        }
        comps += 1;
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let (x, y) = (v / n, v % n);
            for c in 0..3 {
                for op in [Op::E, Op::F] {
                    let next = match two_factor_position(op, strings[x][c], strings[y][c]) {
                        Some(0) => level.g_apply(op, c, x).map(|x2| x2 * n + y),
                        Some(_) => level.g_apply(op, c, y).map(|y2| x * n + y2),
                        None => None,
                    };
                    if let Some(w) = next {
                        if !std::mem::replace(&mut seen[w], true) {
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
    }
    (n * n, comps)
}

/// `(a, b)` with `d = a alpha_1 + b alpha_2` on the `(m_1, m_2)` coordinates.
fn root_coordinates(d: ClassicalWeight) -> (i32, i32) {
    // alpha_1 = (2, -3) and alpha_2 = (-1, 2) in (m_1, m_2); the matrix has determinant 1
    (2 * d.m1 + d.m2, 3 * d.m1 + 2 * d.m2)
}

/// The weight `lambda_0` with every weight in `lambda_0 - N alpha_1 - N alpha_2`,
/// together with the number of tableaux of that weight.
pub fn top_weight(level: &Level) -> Option<(ClassicalWeight, usize)> {
    let mut mult: BTreeMap<ClassicalWeight, usize> = BTreeMap::new();
    for t in level.tableaux() {
        *mult.entry(t.weight()).or_default() += 1;
    }
    let below = |top: ClassicalWeight, w: ClassicalWeight| {
        let (a, b) = root_coordinates(top - w);
        a >= 0 && b >= 0
    };
    let maximal: Vec<ClassicalWeight> =
        mult.keys().copied().filter(|&w| mult.keys().all(|&v| v == w || !below(v, w))).collect();
    match maximal.as_slice() {
        [top] if mult.keys().all(|&w| below(*top, w)) => Some((*top, mult[top])),
        _ => None,
    }
}

pub fn check_perfect(level: &Level) -> PerfectReport {
    let l = level.l as i32;
    let minimal = minimal_elements(level);
    let min_level = (0..level.g_len()).map(|g| level.eps_phi(g).0.level()).min().unwrap_or(0);
    let dominant: BTreeSet<ClassicalWeight> = dominant_weights(level.l).into_iter().collect();
    let eps: BTreeSet<ClassicalWeight> = minimal.iter().map(|m| m.eps).collect();
    let phi: BTreeSet<ClassicalWeight> = minimal.iter().map(|m| m.phi).collect();
    let bijective = eps.len() == minimal.len() && phi.len() == minimal.len() && eps == dominant && phi == dominant;
    let top = top_weight(level);
    let (square_size, square_components) = square_components(level);
    PerfectReport {
        level: level.l,
        crystal_components: crystal_components(level),
        square_size,
        square_components,
        cond_connected_square: square_components == 1,
        top_weight: top.map(|t| t.0),
        cond_unique_top_weight: matches!(top, Some((_, 1))),
        min_level,
        cond_level_bound: min_level >= l,
        cond_eps_phi_bijective: bijective,
        minimal,
    }
}
