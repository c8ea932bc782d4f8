//! The 15-dimensional module `V^1 = V(Lambda_1) + V(0)`.
//!
//! Basis order: `1, 2, 3, 4, 5, 6, 01, 02, -6, -5, -4, -3, -2, -1, 9`,
//! where `9` spans the trivial summand at `q = 1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cartan::CARTAN;

use super::linalg::nullspace;
use super::qrat::{qfact, qi_pow, qint, QRat};

pub const DIM: usize = 15;

pub const BASIS: [&str; DIM] = ["1", "2", "3", "4", "5", "6", "01", "02", "-6", "-5", "-4", "-3", "-2", "-1", "9"];

/// `(wt_1, wt_2)` of each basis vector.
pub const WT12: [(i32, i32); DIM] = [
    (1, 0),
    (-1, 3),
    (0, 1),
    (1, -1),
    (-1, 2),
    (2, -3),
    (0, 0),
    (0, 0),
    (-2, 3),
    (1, -2),
    (-1, 1),
    (0, -1),
    (1, -3),
    (-1, 0),
    (0, 0),
];

/// Index of a basis vector by name.
pub fn bi(name: &str) -> usize {
    BASIS.iter().position(|&b| b == name).unwrap_or_else(|| panic!("unknown basis vector {name}"))
}

/// The mirror `k <-> -k`; `01`, `02`, `9` are fixed.
pub fn bar(k: usize) -> usize {
    match k {
        6 | 7 | 14 => k,
        _ => 13 - k,
    }
}

/// `<h_i, wt>` of a basis vector, with `h_0 = -2 h_1 - h_2` on level-zero weights.
pub fn h(i: usize, k: usize) -> i32 {
    let (w1, w2) = WT12[k];
    [-2 * w1 - w2, w1, w2][i]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Gen {
    E(usize),
    F(usize),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(i) => write!(f, "e{i}"),
            Gen::F(i) => write!(f, "f{i}"),
        }
    }
}

/// Which transcription of the `Z`-block entries to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TableVariant {
    /// `f_1 v(02) = [2]_1 v(-6)`, which satisfies every relation.
    Resolved,
    /// `f_1 v(02) = [2]_2 v(-6)` as commonly transcribed.
    AsPrinted,
}

/// A vector of `V^1` over `Q(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModVec(pub Vec<QRat>);

impl ModVec {
    pub fn zero() -> Self {
        ModVec(vec![QRat::zero(); DIM])
    }

    pub fn basis(k: usize) -> Self {
        let mut v = ModVec::zero();
        v.0[k] = QRat::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(QRat::is_zero)
    }

    pub fn add(&self, o: &ModVec) -> ModVec {
        ModVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &ModVec) -> ModVec {
        ModVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &QRat) -> ModVec {
        ModVec(self.0.iter().map(|a| a * c).collect())
    }

    pub fn support(&self) -> Vec<usize> {
        (0..DIM).filter(|&k| !self.0[k].is_zero()).collect()
    }
}

impl fmt::Display for ModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.support().into_iter().map(|k| format!("({}) v{}", self.0[k], BASIS[k])).collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Sparse matrices of `e_i` and `f_i`: `cols[src]` lists `(dst, coefficient)`.
#[derive(Clone, Debug)]
pub struct V1 {
    pub variant: TableVariant,
    e: [Vec<Vec<(usize, QRat)>>; 3],
    f: [Vec<Vec<(usize, QRat)>>; 3],
}

impl V1 {
    pub fn new(variant: TableVariant) -> Self {
        let one = QRat::one;
        let inv = |x: QRat| &QRat::one() / &x;
        let (d21, d22, d32) = (qint(2, 1), qint(2, 2), qint(3, 2));
        let mut f: [Vec<Vec<(usize, QRat)>>; 3] = Default::default();
        for t in f.iter_mut() {
            *t = vec![Vec::new(); DIM];
        }
        let mut set = |i: usize, a: &str, b: &str, c: QRat| f[i][bi(a)].push((bi(b), c));
        for (a, b) in [("-6", "2"), ("-4", "3"), ("-3", "4"), ("-2", "6")] {
            set(0, a, b, one());
        }
        set(0, "-1", "9", one());
        set(0, "-1", "02", inv(d21.clone()));
        set(0, "9", "1", qint(2, 0));
        for (a, b) in [("1", "2"), ("4", "5"), ("-5", "-4"), ("-2", "-1")] {
            set(1, a, b, one());
        }
        set(1, "6", "02", one());
        set(1, "6", "01", inv(d22.clone()));
        set(1, "6", "9", inv(d21.clone()));
        let c8 = match variant {
            TableVariant::Resolved => d21.clone(),
            TableVariant::AsPrinted => d22.clone(),
        };
        set(1, "02", "-6", c8);
        set(2, "2", "3", one());
        set(2, "3", "4", d22.clone());
        set(2, "4", "6", d32.clone());
        set(2, "-6", "-4", one());
        set(2, "-4", "-3", d22.clone());
        set(2, "-3", "-2", d32.clone());
        set(2, "5", "01", one());
        set(2, "5", "02", &d32 / &d21);
        set(2, "01", "-5", d22);
        let mut e: [Vec<Vec<(usize, QRat)>>; 3] = Default::default();
        for i in 0..3 {
            e[i] = vec![Vec::new(); DIM];
            for src in 0..DIM {
                for (dst, c) in &f[i][src] {
                    e[i][bar(src)].push((bar(*dst), c.clone()));
                }
            }
        }
        V1 { variant, e, f }
    }

    pub fn resolved() -> Self {
        V1::new(TableVariant::Resolved)
    }

    /// Images of a basis vector.
    pub fn column(&self, g: Gen, k: usize) -> &[(usize, QRat)] {
        match g {
            Gen::E(i) => &self.e[i][k],
            Gen::F(i) => &self.f[i][k],
        }
    }

    pub fn apply(&self, g: Gen, v: &ModVec) -> ModVec {
        let mut out = ModVec::zero();
        for k in v.support() {
            for (d, c) in self.column(g, k) {
                out.0[*d] = &out.0[*d] + &(&v.0[k] * c);
            }
        }
        out
    }

    /// Divided power `g^(n) = g^n / [n]_i!`.
    pub fn apply_divided(&self, g: Gen, n: u32, v: &ModVec) -> ModVec {
        let i = match g {
            Gen::E(i) | Gen::F(i) => i,
        };
        let mut w = v.clone();
        for _ in 0..n {
            w = self.apply(g, &w);
        }
        w.scale(&(&QRat::one() / &qfact(n, i)))
    }

    /// `t_i^{s}` on a vector.
    pub fn apply_t(&self, i: usize, s: i32, v: &ModVec) -> ModVec {
        ModVec((0..DIM).map(|k| &v.0[k] * &qi_pow(i, s * h(i, k))).collect())
    }

    /// The table as text lines `f1 6 -> 02 : 1`, in a fixed order.
    pub fn table_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (name, tab) in [("f", &self.f), ("e", &self.e)] {
            for (i, t) in tab.iter().enumerate() {
                for (src, col) in t.iter().enumerate() {
                    for (dst, c) in col {
                        out.push(format!("{name}{i} {} -> {} : {c}", BASIS[src], BASIS[*dst]));
                    }
                }
            }
        }
        out
    }
}

/// One relation checked on every basis vector.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
    /// Basis vectors where the relation fails.
    pub failures: Vec<String>,
}

/// `[h]_i` as the value of `(t_i - t_i^-1) / (q_i - q_i^-1)` on weight `h`.
fn bracket(h: i32, i: usize) -> QRat {
    if h >= 0 {
        qint(h as u32, i)
    } else {
        -&qint((-h) as u32, i)
    }
}

/// Commutator relations, weight compatibility of the table and the q-Serre relations.
pub fn verify_module_relations(m: &V1) -> Vec<RelationCheck> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let mut failures = Vec::new();
            for k in 0..DIM {
                let v = ModVec::basis(k);
                let mut r = m.apply(Gen::E(i), &m.apply(Gen::F(j), &v)).sub(&m.apply(Gen::F(j), &m.apply(Gen::E(i), &v)));
                if i == j {
                    r = r.sub(&v.scale(&bracket(h(i, k), i)));
                }
                if !r.is_zero() {
                    failures.push(format!("v{}: {r}", BASIS[k]));
                }
            }
            out.push(RelationCheck { name: format!("[e{i}, f{j}]"), holds: failures.is_empty(), failures });
        }
    }
    // t_i e_j t_i^-1 = q_i^{a_ij} e_j holds iff every entry of e_j raises <h_i, wt> by a_ij
    for j in 0..3 {
        let mut failures = Vec::new();
        for k in 0..DIM {
            for (d, _) in m.column(Gen::E(j), k) {
                for i in 0..3 {
                    if h(i, *d) - h(i, k) != CARTAN[i][j] {
                        failures.push(format!("e{j} v{} -> v{} at h{i}", BASIS[k], BASIS[*d]));
                    }
                }
            }
            for (d, _) in m.column(Gen::F(j), k) {
                for i in 0..3 {
                    if h(i, k) - h(i, *d) != CARTAN[i][j] {
                        failures.push(format!("f{j} v{} -> v{} at h{i}", BASIS[k], BASIS[*d]));
                    }
                }
            }
        }
        out.push(RelationCheck { name: format!("t_i e{j} t_i^-1, t_i f{j} t_i^-1"), holds: failures.is_empty(), failures });
    }
    for gen in [Gen::E as fn(usize) -> Gen, Gen::F as fn(usize) -> Gen] {
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let b = (1 - CARTAN[i][j]) as u32;
                let mut failures = Vec::new();
                for k in 0..DIM {
                    let v = ModVec::basis(k);
                    let mut acc = ModVec::zero();
                    for s in 0..=b {
                        let w = m.apply_divided(gen(i), b - s, &v);
                        let w = m.apply(gen(j), &w);
                        let w = m.apply_divided(gen(i), s, &w);
                        acc = if s % 2 == 0 { acc.add(&w) } else { acc.sub(&w) };
                    }
                    if !acc.is_zero() {
                        failures.push(format!("v{}", BASIS[k]));
                    }
                }
                out.push(RelationCheck {
                    name: format!("Serre {}{i},{}{j} (b = {b})", gen(0).letter(), gen(0).letter()),
                    holds: failures.is_empty(),
                    failures,
                });
            }
        }
    }
    out
}

impl Gen {
    fn letter(self) -> char {
        match self {
            Gen::E(_) => 'e',
            Gen::F(_) => 'f',
        }
    }
}

/// Symmetric invariant forms with `(e_i u, v) = (u, q_i^-1 t_i^-1 f_i v)` and
/// `(f_i u, v) = (u, q_i^-1 t_i e_i v)`, as a Gram matrix normalized by `(v1, v1) = 1`.
/// Returns `None` unless the solution space is one-dimensional.
pub fn invariant_form(m: &V1) -> Option<Vec<Vec<QRat>>> {
    // unknowns: one per unordered pair of basis vectors of equal weight
    let mut unknowns: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for a in 0..DIM {
        for b in a..DIM {
            if WT12[a] == WT12[b] {
                let n = unknowns.len();
                unknowns.insert((a, b), n);
            }
        }
    }
    let var = |a: usize, b: usize| unknowns.get(&(a.min(b), a.max(b))).copied();
    let mut rows: Vec<Vec<QRat>> = Vec::new();
    for i in 0..3 {
        for (x, y, s) in [(Gen::E(i), Gen::F(i), -1), (Gen::F(i), Gen::E(i), 1)] {
            // (x u, v) - (u, q_i^-1 t_i^s y v) = 0 for basis u, v
            for u in 0..DIM {
                for v in 0..DIM {
                    let mut row = vec![QRat::zero(); unknowns.len()];
                    let mut nonzero = false;
                    for (d, c) in m.column(x, u) {
                        if let Some(n) = var(*d, v) {
                            row[n] = &row[n] + c;
                            nonzero = true;
                        }
                    }
                    for (d, c) in m.column(y, v) {
                        if let Some(n) = var(u, *d) {
                            let k = &qi_pow(i, s * h(i, *d) - 1) * c;
                            row[n] = &row[n] - &k;
                            nonzero = true;
                        }
                    }
                    if nonzero && row.iter().any(|c| !c.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let ns = nullspace(&rows, unknowns.len());
    if ns.len() != 1 {
        return None;
    }
    let sol = &ns[0];
    let norm = &sol[unknowns[&(0, 0)]];
    if norm.is_zero() {
        return None;
    }
    let mut g = vec![vec![QRat::zero(); DIM]; DIM];
    for (&(a, b), &n) in &unknowns {
        let val = &sol[n] / norm;
        g[a][b] = val.clone();
        g[b][a] = val;
    }
    Some(g)
}

pub fn pairing(g: &[Vec<QRat>], u: &ModVec, v: &ModVec) -> QRat {
    let mut acc = QRat::zero();
    for a in u.support() {
        for b in v.support() {
            if !g[a][b].is_zero() {
                acc = &acc + &(&(&u.0[a] * &v.0[b]) * &g[a][b]);
            }
        }
    }
    acc
}

/// `e_i`-highest decomposition `v = sum_k f_i^(k) u_k` of a weight vector and
/// the Kashiwara operators built from it.
pub fn kashiwara(m: &V1, i: usize, lower: bool, v: &ModVec) -> ModVec {
    let k0 = v.support().first().copied();
    let Some(k0) = k0 else { return ModVec::zero() };
    let lam = h(i, k0);
    // split off strings from the top
    let mut rest = v.clone();
    let mut parts: Vec<(u32, ModVec)> = Vec::new();
    loop {
        let mut n = 0;
        let mut w = rest.clone();
        loop {
            let nxt = m.apply(Gen::E(i), &w);
            if nxt.is_zero() {
                break;
            }
            w = nxt;
            n += 1;
        }
        if rest.is_zero() {
            break;
        }
        // u_n = e_i^(n) rest / binom(lam + 2n, n)_i
        let top = m.apply_divided(Gen::E(i), n, &rest);
        let binom = qbinom(lam + 2 * n as i32, n, i);
        let u = top.scale(&(&QRat::one() / &binom));
        rest = rest.sub(&m.apply_divided(Gen::F(i), n, &u));
        parts.push((n, u));
    }
    let mut out = ModVec::zero();
    for (n, u) in parts {
        let t = if lower {
            m.apply_divided(Gen::F(i), n + 1, &u)
        } else if n == 0 {
            ModVec::zero()
        } else {
            m.apply_divided(Gen::F(i), n - 1, &u)
        };
        out = out.add(&t);
    }
    out
}

/// `[a choose n]_i` for integer `a`.
fn qbinom(a: i32, n: u32, i: usize) -> QRat {
    let mut num = QRat::one();
    for k in 0..n as i32 {
        num = &num * &bracket(a - k, i);
    }
    &num / &qfact(n, i)
}

/// The image of a basis vector under a Kashiwara operator read at `q = 0`:
/// `Some(Some(k))` if it is `v_k` modulo `q L`, `Some(None)` if it lies in `q L`,
/// `None` if it leaves the lattice `L` or is not a single basis vector.
pub fn crystal_limit(v: &ModVec) -> Option<Option<usize>> {
    let mut hit = None;
    for k in v.support() {
        let val = v.0[k].valuation().expect("support is nonzero");
        if val < 0 {
            return None;
        }
        if val == 0 {
            let (a, b) = v.0[k].at_zero().expect("valuation is zero");
            if a != b || hit.is_some() {
                return None;
            }
            hit = Some(k);
        }
    }
    Some(hit)
}
