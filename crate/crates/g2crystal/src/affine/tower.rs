//! Bottom-up construction of the levels `0..=l`.
//!
//! Every level stores index tables for the A2 operators of colors 0 and 1,
//! for `E_A`/`F_A`, for the G2 operators of colors 1 and 2, the bijection
//! `Phi` with the rule that produced each value, and the derived color-0
//! operators on the tableau side.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use crate::a2::{A2Block, A2Color};
use crate::cartan::ClassicalWeight;
use crate::error::{Error, Result};
use crate::g2::{self, GTableau};
use crate::signature::Op;

use super::{anchors, classify, ea_plus, enumerate_a, fa_plus, AParam, AnchorRule, BSet};

/// Which step of the construction assigned `Phi(b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PhiRule {
    /// `Phi(iota b) = Phi(b)` from the level below.
    Embedding,
    Anchor(AnchorRule),
    /// `Phi(E_A^m b) = e_2^m Phi(b)` from `b` in `B_C`.
    ExtendC,
    /// `Phi(d) = C_G Phi(C_A d)` along strings from `B_W` and `B_U`.
    SymmetryWU,
    /// `B_R`: `e_2`-extension and the symmetric rule on the string of `f_0^{phi_0(b)} b`.
    ExtendR,
    /// Conjugation by color 1.
    Closure,
}

/// All tableaux of length at most `max`, ordered by length and then by word.
#[derive(Debug)]
struct GUniverse {
    tabs: Vec<GTableau>,
    index: HashMap<GTableau, usize>,
    /// `ends[n]` is the number of tableaux of length at most `n`.
    ends: Vec<usize>,
    f: [Vec<Option<usize>>; 2],
    e: [Vec<Option<usize>>; 2],
}

impl GUniverse {
    fn new(max: u32) -> Self {
        let mut tabs = Vec::new();
        let mut ends = Vec::new();
        for n in 0..=max as usize {
            let mut layer = g2::enumerate(n);
            layer.sort();
            tabs.extend(layer);
            ends.push(tabs.len());
        }
        let index: HashMap<GTableau, usize> = tabs.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let table = |op: Op, c: usize| -> Vec<Option<usize>> {
            tabs.iter().map(|t| t.apply(op, c).map(|s| index[&s])).collect()
        };
        let f = [table(Op::F, 1), table(Op::F, 2)];
        let e = [table(Op::E, 1), table(Op::E, 2)];
        GUniverse { tabs, index, ends, f, e }
    }
}

/// One level of the tower: the model `A`, the tableaux `G^l` and `Phi`.
#[derive(Debug)]
pub struct Level {
    pub l: u32,
    elems: Vec<AParam>,
    index: HashMap<AParam, usize>,
    /// `a_f[c]`, `a_e[c]` for A2 colors `c = 0, 1`.
    a_f: [Vec<Option<usize>>; 2],
    a_e: [Vec<Option<usize>>; 2],
    ea: Vec<Option<usize>>,
    fa: Vec<Option<usize>>,
    universe: Arc<GUniverse>,
    g_len: usize,
    phi: Vec<usize>,
    phi_inv: Vec<usize>,
    rule: Vec<PhiRule>,
    g0_f: Vec<Option<usize>>,
    g0_e: Vec<Option<usize>>,
}

impl Level {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[AParam] {
        &self.elems
    }

    pub fn param(&self, a: usize) -> AParam {
        self.elems[a]
    }

    pub fn index_of(&self, b: AParam) -> Option<usize> {
        self.index.get(&b).copied()
    }

    /// A2 operator of color 0 or 1 on the model side.
    pub fn a_apply(&self, op: Op, color: usize, a: usize) -> Option<usize> {
        match op {
            Op::F => self.a_f[color][a],
            Op::E => self.a_e[color][a],
        }
    }

    /// `E_A`.
    pub fn ea(&self, a: usize) -> Option<usize> {
        self.ea[a]
    }

    /// `F_A`.
    pub fn fa(&self, a: usize) -> Option<usize> {
        self.fa[a]
    }

    /// Model-side operator of affine color `0`, `1` or `2` (`E_A`/`F_A`).
    pub fn a_op(&self, op: Op, color: usize, a: usize) -> Option<usize> {
        match (color, op) {
            (2, Op::E) => self.ea[a],
            (2, Op::F) => self.fa[a],
            _ => self.a_apply(op, color, a),
        }
    }

    /// Apply a sequence of `(op, color, times)` to a parameter.
    pub fn a_path(&self, start: AParam, steps: &[(Op, usize, u32)]) -> Option<AParam> {
        let mut a = self.index_of(start)?;
        for &(op, c, n) in steps {
            for _ in 0..n {
                a = self.a_op(op, c, a)?;
            }
        }
        Some(self.elems[a])
    }

    /// Number of tableaux in `G^l`.
    pub fn g_len(&self) -> usize {
        self.g_len
    }

    pub fn tableau(&self, g: usize) -> &GTableau {
        &self.universe.tabs[g]
    }

    pub fn tableaux(&self) -> &[GTableau] {
        &self.universe.tabs[..self.g_len]
    }

    pub fn g_index(&self, t: &GTableau) -> Option<usize> {
        self.universe.index.get(t).copied().filter(|&g| g < self.g_len)
    }

    /// Tableau-side Kashiwara operator of color `0`, `1` or `2`.
    pub fn g_apply(&self, op: Op, color: usize, g: usize) -> Option<usize> {
        match (color, op) {
            (0, Op::F) => self.g0_f[g],
            (0, Op::E) => self.g0_e[g],
            (c, Op::F) => self.universe.f[c - 1][g],
            (c, Op::E) => self.universe.e[c - 1][g],
        }
    }

    /// `(eps_i, phi_i)` of a tableau for `i = 0, 1, 2`.
    pub fn g_strings(&self, g: usize, color: usize) -> (u32, u32) {
        let walk = |op| {
            let mut n = 0;
            let mut x = g;
            while let Some(y) = self.g_apply(op, color, x) {
                x = y;
                n += 1;
            }
            n
        };
        (walk(Op::E), walk(Op::F))
    }

    /// `(sum eps_i Lambda_i, sum phi_i Lambda_i)`.
    pub fn eps_phi(&self, g: usize) -> (ClassicalWeight, ClassicalWeight) {
        let s: Vec<(u32, u32)> = (0..3).map(|c| self.g_strings(g, c)).collect();
        let eps = ClassicalWeight::new(s[0].0 as i32, s[1].0 as i32, s[2].0 as i32);
        let phi = ClassicalWeight::new(s[0].1 as i32, s[1].1 as i32, s[2].1 as i32);
        (eps, phi)
    }

    pub fn phi(&self, a: usize) -> usize {
        self.phi[a]
    }

    pub fn phi_inv(&self, g: usize) -> usize {
        self.phi_inv[g]
    }

    pub fn rule(&self, a: usize) -> PhiRule {
        self.rule[a]
    }

    pub fn phi_of(&self, b: AParam) -> Option<&GTableau> {
        self.index_of(b).map(|a| self.tableau(self.phi[a]))
    }

    /// `f_0` on a tableau given by value.
    pub fn f0(&self, t: &GTableau) -> Result<Option<GTableau>> {
        self.g_step(Op::F, t)
    }

    /// `e_0` on a tableau given by value.
    pub fn e0(&self, t: &GTableau) -> Result<Option<GTableau>> {
        self.g_step(Op::E, t)
    }

    fn g_step(&self, op: Op, t: &GTableau) -> Result<Option<GTableau>> {
        let g = self.g_index(t).ok_or_else(|| Error::NotInCrystal(t.to_string(), self.l))?;
        Ok(self.g_apply(op, 0, g).map(|h| self.tableau(h).clone()))
    }

    fn fault(&self, detail: impl Into<String>) -> Error {
        Error::ConstructionFault { level: self.l, detail: detail.into() }
    }

    fn build(
        l: u32,
        prev: Option<&Level>,
        universe: &Arc<GUniverse>,
        blocks: &mut HashMap<(u32, u32), A2Block>,
    ) -> Result<Level> {
        let elems = enumerate_a(l);
        let index: HashMap<AParam, usize> = elems.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let mut a_f = [vec![None; elems.len()], vec![None; elems.len()]];
        let mut a_e = a_f.clone();
        for (a, &b) in elems.iter().enumerate() {
            let block = blocks.entry((b.k, b.j)).or_insert_with(|| A2Block::new(b.k, b.j));
            for (c, color) in [(0, A2Color::Beta), (1, A2Color::Alpha)] {
                let look = |op| block.apply(op, color, b.coords()).map(|s| index[&b.with_coords(s)]);
                a_f[c][a] = look(Op::F);
                a_e[c][a] = look(Op::E);
            }
        }
        let n = elems.len();
        let mut level = Level {
            l,
            elems,
            index,
            a_f,
            a_e,
            ea: vec![None; n],
            fa: vec![None; n],
            universe: Arc::clone(universe),
            g_len: universe.ends[l as usize],
            phi: Vec::new(),
            phi_inv: Vec::new(),
            rule: Vec::new(),
            g0_f: Vec::new(),
            g0_e: Vec::new(),
        };
        if level.g_len != n {
            return Err(level.fault(format!("|A| = {n} but |G| = {}", level.g_len)));
        }
        level.ea = level.ef_table(prev, true)?;
        level.fa = level.ef_table(prev, false)?;
        level.check_inverse()?;
        level.build_phi(prev)?;
        level.g0_f = (0..n).map(|g| level.a_f[0][level.phi_inv[g]].map(|a| level.phi[a])).collect();
        level.g0_e = (0..n).map(|g| level.a_e[0][level.phi_inv[g]].map(|a| level.phi[a])).collect();
        Ok(level)
    }

    /// `E_A` (`raise = true`) or `F_A` from the case tables, extended to `r > 0` by `f_0`.
    fn ef_table(&self, prev: Option<&Level>, raise: bool) -> Result<Vec<Option<usize>>> {
        let l = self.l;
        let lookup = |b: AParam| -> std::result::Result<Option<AParam>, String> {
            let p = prev.ok_or_else(|| format!("{b} needs level {} which does not exist", l as i64 - 1))?;
            let a = p.index_of(b).ok_or_else(|| format!("{b} is not an element of level {}", p.l))?;
            let t = if raise { &p.ea } else { &p.fa };
            Ok(t[a].map(|x| p.elems[x]))
        };
        let e0 = |b: AParam| self.index_of(b).and_then(|a| self.a_e[0][a]).map(|a| self.elems[a]);
        let mut table = vec![None; self.len()];
        for (a, &b) in self.elems.iter().enumerate() {
            let base = AParam { r: 0, ..b };
            let res = if raise { ea_plus(l, base, &lookup, &e0) } else { fa_plus(l, base, &lookup, &e0) };
            let res = res.map_err(|d| self.fault(d))?;
            let Some(v) = res else { continue };
            let mut x = self
                .index_of(v)
                .ok_or_else(|| self.fault(format!("case result {v} for {base} is out of range")))?;
            for _ in 0..b.r {
                x = self.a_f[0][x].ok_or_else(|| self.fault(format!("f_0 does not commute past {b}")))?;
            }
            table[a] = Some(x);
        }
        Ok(table)
    }

    fn check_inverse(&self) -> Result<()> {
        for a in 0..self.len() {
            if let Some(b) = self.ea[a] {
                if self.fa[b] != Some(a) {
                    return Err(self.fault(format!(
                        "F_A E_A {} = {:?}",
                        self.elems[a],
                        self.fa[b].map(|x| self.elems[x])
                    )));
                }
            }
            if let Some(b) = self.fa[a] {
                if self.ea[b] != Some(a) {
                    return Err(self.fault(format!("E_A F_A {} != itself", self.elems[a])));
                }
            }
        }
        Ok(())
    }

    fn build_phi(&mut self, prev: Option<&Level>) -> Result<()> {
        let n = self.len();
        let mut st = PhiState { phi: vec![None; n], inv: vec![None; n], rule: vec![None; n] };
        if let Some(p) = prev {
            for a in 0..p.len() {
                let up = self
                    .index_of(p.elems[a].iota())
                    .ok_or_else(|| self.fault(format!("iota({}) is out of range", p.elems[a])))?;
                st.assign(self, up, p.phi[a], PhiRule::Embedding)?;
            }
        }
        let anchors = anchors(self).map_err(|d| self.fault(d))?;
        let order = [
            AnchorRule::URElement,
            AnchorRule::UElement,
            AnchorRule::UElementClosed,
            AnchorRule::Hamidashi,
            AnchorRule::AllHighest,
            AnchorRule::F0pR,
            AnchorRule::F1qF0p,
        ];
        for rule in order {
            for an in anchors.iter().filter(|an| an.rule == rule) {
                let a = self.index_of(an.param).ok_or_else(|| self.fault(format!("anchor {} missing", an.param)))?;
                let g = self
                    .g_index(&an.tableau)
                    .ok_or_else(|| self.fault(format!("anchor tableau {} is not in G", an.tableau)))?;
                st.assign(self, a, g, PhiRule::Anchor(rule))?;
            }
        }
        let cls = classify(self);
        let c_g = |lev: &Level, g: usize| lev.g_index(&lev.tableau(g).involution()).expect("C_G preserves G");
        let c_a = |lev: &Level, a: usize| lev.index_of(lev.elems[a].involution()).expect("C_A preserves A");
        loop {
            let before = st.assigned();
            for b in cls.members(BSet::C) {
                st.extend_e2(self, b, PhiRule::ExtendC)?;
            }
            for b in cls.members(BSet::W).into_iter().chain(cls.members(BSet::U)) {
                let mut d = Some(b);
                while let Some(x) = d {
                    if let Some(g) = st.phi[c_a(self, x)] {
                        st.assign(self, x, c_g(self, g), PhiRule::SymmetryWU)?;
                    }
                    d = self.ea[x];
                }
            }
            for b in cls.members(BSet::R) {
                st.extend_e2(self, b, PhiRule::ExtendR)?;
                let mut top = b;
                while let Some(x) = self.a_f[0][top] {
                    top = x;
                }
                let mut d = Some(top);
                while let Some(x) = d {
                    if let Some(g) = st.phi[c_a(self, x)] {
                        st.assign(self, x, c_g(self, g), PhiRule::ExtendR)?;
                    }
                    d = self.ea[x];
                }
            }
            st.closure(self)?;
            let after = st.assigned();
            if after == n || after == before {
                break;
            }
        }
        if let Some(a) = st.phi.iter().position(Option::is_none) {
            return Err(self.fault(format!("no rule assigns Phi({})", self.elems[a])));
        }
        self.phi = st.phi.into_iter().map(|g| g.expect("total")).collect();
        self.phi_inv = st.inv.into_iter().map(|a| a.expect("bijective")).collect();
        self.rule = st.rule.into_iter().map(|r| r.expect("total")).collect();
        Ok(())
    }
}

struct PhiState {
    phi: Vec<Option<usize>>,
    inv: Vec<Option<usize>>,
    rule: Vec<Option<PhiRule>>,
}

impl PhiState {
    fn assigned(&self) -> usize {
        self.phi.iter().filter(|g| g.is_some()).count()
    }

    fn assign(&mut self, lev: &Level, a: usize, g: usize, rule: PhiRule) -> Result<bool> {
        match (self.phi[a], self.inv[g]) {
            (Some(h), _) if h == g => Ok(false),
            (Some(h), _) => Err(lev.fault(format!(
                "{rule:?} assigns {} to {} which already has {} from {:?}",
                lev.tableau(g),
                lev.elems[a],
                lev.tableau(h),
                self.rule[a].expect("assigned")
            ))),
            (None, Some(b)) => Err(lev.fault(format!(
                "{rule:?} assigns {} to {} but it is already the image of {}",
                lev.tableau(g),
                lev.elems[a],
                lev.elems[b]
            ))),
            (None, None) => {
                self.phi[a] = Some(g);
                self.inv[g] = Some(a);
                self.rule[a] = Some(rule);
                Ok(true)
            }
        }
    }

    /// `Phi(E_A^m b) = e_2^m Phi(b)` for all `m`, if `Phi(b)` is known.
    fn extend_e2(&mut self, lev: &Level, b: usize, rule: PhiRule) -> Result<()> {
        let Some(mut g) = self.phi[b] else { return Ok(()) };
        let mut a = b;
        loop {
            match (lev.ea[a], lev.g_apply(Op::E, 2, g)) {
                (None, None) => return Ok(()),
                (Some(x), Some(h)) => {
                    self.assign(lev, x, h, rule)?;
                    a = x;
                    g = h;
                }
                _ => {
                    return Err(lev.fault(format!(
                        "E_A-string of {} and e_2-string of {} differ in length",
                        lev.elems[b],
                        lev.tableau(self.phi[b].expect("known"))
                    )))
                }
            }
        }
    }

    /// Propagate along color 1 on both sides.
    fn closure(&mut self, lev: &Level) -> Result<()> {
        let mut queue: VecDeque<usize> = (0..lev.len()).filter(|&a| self.phi[a].is_some()).collect();
        while let Some(a) = queue.pop_front() {
            let g = self.phi[a].expect("queued elements are assigned");
            for op in [Op::E, Op::F] {
                match (lev.a_apply(op, 1, a), lev.g_apply(op, 1, g)) {
                    (None, None) => {}
                    (Some(x), Some(h)) => {
                        if self.assign(lev, x, h, PhiRule::Closure)? {
                            queue.push_back(x);
                        }
                    }
                    _ => {
                        return Err(lev.fault(format!(
                            "color-1 strings of {} and {} differ",
                            lev.elems[a],
                            lev.tableau(g)
                        )))
                    }
                }
            }
        }
        Ok(())
    }
}

/// Levels `0..=max` built bottom-up.
#[derive(Debug)]
pub struct Tower {
    levels: Vec<Level>,
}

impl Tower {
    pub fn build(max: u32) -> Result<Tower> {
        let universe = Arc::new(GUniverse::new(max));
        let mut blocks = HashMap::new();
        let mut levels: Vec<Level> = Vec::new();
        for l in 0..=max {
            let lev = Level::build(l, levels.last(), &universe, &mut blocks)?;
            levels.push(lev);
        }
        Ok(Tower { levels })
    }

    pub fn max_level(&self) -> u32 {
        self.levels.len() as u32 - 1
    }

    pub fn level(&self, l: u32) -> Option<&Level> {
        self.levels.get(l as usize)
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }
}

/// An independent `Phi`: match highest weight elements for colors 1 and 2
/// and extend along both colors. Returns `phi` as tableau indices.
pub fn phi_by_highest_weights(level: &Level) -> Result<Vec<usize>> {
    let n = level.len();
    let mut phi: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; level.g_len()];
    let hw_g: HashMap<usize, usize> = (0..level.g_len())
        .filter(|&g| level.g_apply(Op::E, 1, g).is_none() && level.g_apply(Op::E, 2, g).is_none())
        .map(|g| (level.tableau(g).len(), g))
        .collect();
    for h in 0..n {
        if level.a_apply(Op::E, 1, h).is_some() || level.ea(h).is_some() {
            continue;
        }
        let (w1, _) = level.param(h).weight10();
        let g = *hw_g
            .get(&(w1 as usize))
            .ok_or_else(|| level.fault(format!("no tableau highest weight of length {w1}")))?;
        if used[g] {
            return Err(level.fault(format!("two highest weights of length {w1}")));
        }
        phi[h] = Some(g);
        used[g] = true;
        let mut stack = vec![h];
        while let Some(a) = stack.pop() {
            let ga = phi[a].expect("assigned");
            for c in [1, 2] {
                for op in [Op::E, Op::F] {
                    match (level.a_op(op, c, a), level.g_apply(op, c, ga)) {
                        (None, None) => {}
                        (Some(x), Some(y)) => match phi[x] {
                            Some(z) if z != y => return Err(level.fault(format!("conflict at {}", level.param(x)))),
                            Some(_) => {}
                            None => {
                                phi[x] = Some(y);
                                used[y] = true;
                                stack.push(x);
                            }
                        },
                        _ => return Err(level.fault(format!("string mismatch at {}", level.param(a)))),
                    }
                }
            }
        }
    }
    phi.into_iter()
        .enumerate()
        .map(|(a, g)| g.ok_or_else(|| level.fault(format!("{} unreached", level.param(a)))))
        .collect()
}
