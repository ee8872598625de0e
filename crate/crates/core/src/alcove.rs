//! The alcove path crystals `Al(λ)`, `Al∨(λ)`, `Al(∞)` and `Al∨(∞)`.
//!
//! An element is a strictly increasing set of chain indices in the model's
//! own chain order. Finite chains are indexed `0..m`. The ∞-chain
//! `⋯ ∗ Γ_ρ ∗ Γ_ρ` uses negative indices with `-1` the entry next to the
//! fundamental alcove; the dual ∞-chain `Γ∨_ρ ∗ Γ∨_ρ ∗ ⋯` uses `0, 1, …`.
//! Primal index `j` and dual index `-1 - j` (finite: `m - 1 - j`) name the
//! same hyperplane crossing.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::chains::{self, ChainEntry, LambdaChain};
use crate::error::{Error, Result};
use crate::rootsys::{q, Root, RootSystem, Weight, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    PrimalFinite,
    DualFinite,
    PrimalInfinite,
    DualInfinite,
}

impl Model {
    pub fn is_dual(self) -> bool {
        matches!(self, Model::DualFinite | Model::DualInfinite)
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Model::PrimalInfinite | Model::DualInfinite)
    }

    /// The contragredient partner sharing the same hyperplane crossings.
    pub fn mirror(self) -> Model {
        match self {
            Model::PrimalFinite => Model::DualFinite,
            Model::DualFinite => Model::PrimalFinite,
            Model::PrimalInfinite => Model::DualInfinite,
            Model::DualInfinite => Model::PrimalInfinite,
        }
    }
}

/// Folding positions as sorted chain indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlcoveElement(Vec<i64>);

impl AlcoveElement {
    pub fn empty() -> Self {
        AlcoveElement(Vec::new())
    }

    /// Sorts and deduplicates.
    pub fn new(mut idx: Vec<i64>) -> Self {
        idx.sort_unstable();
        idx.dedup();
        AlcoveElement(idx)
    }

    pub fn indices(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: i64) -> bool {
        self.0.binary_search(&j).is_ok()
    }

    fn with(&self, add: Option<i64>, remove: Option<i64>) -> Self {
        let mut v: Vec<i64> = self.0.iter().copied().filter(|&j| Some(j) != remove).collect();
        if let Some(a) = add {
            v.push(a);
        }
        Self::new(v)
    }
}

impl fmt::Display for AlcoveElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|j| j.to_string()).collect();
        write!(f, "[{}]", s.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// The i-signature over unfolded `±α_i` positions and its reduced form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureWord {
    pub word: Vec<(i64, Sign)>,
    pub reduced: Vec<(i64, Sign)>,
}

impl SignatureWord {
    pub fn from_word(word: Vec<(i64, Sign)>) -> Self {
        let reduced = reduce(&word);
        SignatureWord { word, reduced }
    }

    pub fn reduced_string(&self) -> String {
        self.reduced.iter().map(|(_, s)| s.to_string()).collect()
    }
}

/// Cancels adjacent `-+` pairs until the word has the shape `+…+-…-`.
pub fn reduce(word: &[(i64, Sign)]) -> Vec<(i64, Sign)> {
    let mut stack: Vec<(i64, Sign)> = Vec::new();
    for &(j, s) in word {
        if s == Sign::Plus && matches!(stack.last(), Some((_, Sign::Minus))) {
            stack.pop();
        } else {
            stack.push((j, s));
        }
    }
    stack
}

/// Folded chain data over a window `[lo, hi)`.
struct Folded {
    lo: i64,
    gammas: Vec<Root>,
    tau: WeylElement,
}

/// An alcove path crystal over a λ-chain, a dual λ-chain, or the (dual) ∞-chain
/// of the lex ρ-chain.
#[derive(Clone, Debug)]
pub struct AlcoveCrystal {
    model: Model,
    rs: Arc<RootSystem>,
    chain: LambdaChain,
    lookup: HashMap<ChainEntry, i64>,
}

impl AlcoveCrystal {
    /// `Al(Γ)` for a primal chain, `Al∨(Γ)` for a dual one.
    pub fn new(chain: LambdaChain) -> Self {
        let model = if chain.is_dual() {
            Model::DualFinite
        } else {
            Model::PrimalFinite
        };
        Self::build(model, chain)
    }

    /// `Al(λ)` over the lex λ-chain.
    pub fn highest_weight(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<Self> {
        Ok(Self::new(LambdaChain::lex(rs, lambda)?))
    }

    /// `Al∨(λ)` over the dual of the lex λ-chain.
    pub fn dual_highest_weight(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<Self> {
        Ok(Self::new(LambdaChain::lex(rs, lambda)?.dual()))
    }

    /// `Al(∞)` over `⋯ ∗ Γ_ρ ∗ Γ_ρ`.
    pub fn infinity(rs: &Arc<RootSystem>) -> Self {
        let base = LambdaChain::lex(rs, &Weight::rho(rs.rank())).expect("ρ is dominant");
        Self::build(Model::PrimalInfinite, base)
    }

    /// `Al∨(∞)` over `Γ∨_ρ ∗ Γ∨_ρ ∗ ⋯`.
    pub fn dual_infinity(rs: &Arc<RootSystem>) -> Self {
        let base = LambdaChain::lex(rs, &Weight::rho(rs.rank())).expect("ρ is dominant");
        Self::build(Model::DualInfinite, base.dual())
    }

    fn build(model: Model, chain: LambdaChain) -> Self {
        let lookup = if model.is_infinite() {
            HashMap::new()
        } else {
            chain
                .entries()
                .iter()
                .enumerate()
                .map(|(k, &e)| (e, k as i64))
                .collect()
        };
        AlcoveCrystal {
            model,
            rs: chain.root_system().clone(),
            chain,
            lookup,
        }
    }

    /// The crystal with the same crossings read in the opposite direction.
    pub fn mirror_crystal(&self) -> Self {
        Self::build(self.model.mirror(), self.chain.dual())
    }

    /// Maps an element to the same set of crossings in the mirror crystal.
    pub fn mirror(&self, j: &AlcoveElement) -> AlcoveElement {
        let m = self.chain.len() as i64;
        let map = |x: i64| {
            if self.model.is_infinite() {
                -1 - x
            } else {
                m - 1 - x
            }
        };
        AlcoveElement::new(j.0.iter().map(|&x| map(x)).collect())
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// The finite chain, or the base (dual) ρ-chain of an infinite model.
    pub fn chain(&self) -> &LambdaChain {
        &self.chain
    }

    /// `λ`, or zero for the infinite models.
    pub fn lambda(&self) -> Weight {
        if self.model.is_infinite() {
            Weight::zero(self.rs.rank())
        } else {
            self.chain.lambda().clone()
        }
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn entry(&self, idx: i64) -> Option<ChainEntry> {
        let m = self.chain.len() as i64;
        match self.model {
            Model::PrimalFinite | Model::DualFinite => {
                (0..m).contains(&idx).then(|| self.chain.entries()[idx as usize])
            }
            Model::PrimalInfinite => (idx < 0).then(|| chains::inf_entry(&self.chain, idx)),
            Model::DualInfinite => (idx >= 0).then(|| chains::dual_inf_entry(&self.chain, idx)),
        }
    }

    /// The index of the entry `(β, ℓ)`.
    pub fn position(&self, root: usize, level: i64) -> Option<i64> {
        let e = ChainEntry { root, level };
        if !self.model.is_infinite() {
            return self.lookup.get(&e).copied();
        }
        let p = self.chain.height(root);
        let m = self.chain.len() as i64;
        let (copy, base_level) = match self.model {
            Model::PrimalInfinite if level < 0 => {
                let c = (-level + p - 1) / p;
                (c, level + c * p)
            }
            Model::DualInfinite if level > 0 => {
                let c = (level + p - 1) / p;
                (c, level - (c - 1) * p)
            }
            _ => return None,
        };
        let b = self
            .chain
            .entries()
            .iter()
            .position(|x| x.root == root && x.level == base_level)? as i64;
        Some(match self.model {
            Model::PrimalInfinite => b - copy * m,
            _ => (copy - 1) * m + b,
        })
    }

    /// Builds an element from `(β, ℓ)` pairs, checking admissibility.
    pub fn element_from_positions(&self, pos: &[(Root, i64)]) -> Result<AlcoveElement> {
        let idx = pos
            .iter()
            .map(|(r, l)| {
                self.rs
                    .root_index(r)
                    .and_then(|b| self.position(b, *l))
                    .ok_or_else(|| Error::NoSuchPosition {
                        root: r.to_string(),
                        level: *l,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        let j = AlcoveElement::new(idx);
        if !self.is_admissible(&j)? {
            return Err(Error::NotAdmissible);
        }
        Ok(j)
    }

    pub fn element(&self, idx: Vec<i64>) -> Result<AlcoveElement> {
        let j = AlcoveElement::new(idx);
        if !self.is_admissible(&j)? {
            return Err(Error::NotAdmissible);
        }
        Ok(j)
    }

    pub fn positions(&self, j: &AlcoveElement) -> Vec<ChainEntry> {
        j.0.iter()
            .map(|&x| self.entry(x).expect("element indices lie in the chain"))
            .collect()
    }

    /// Window `[lo, hi)` with at least one fully unfolded ρ-copy beyond the
    /// foldings, plus `extra` copies.
    pub fn window(&self, j: &AlcoveElement, extra: usize) -> (i64, i64) {
        let m = self.chain.len() as i64;
        match self.model {
            Model::PrimalFinite | Model::DualFinite => (0, m),
            Model::PrimalInfinite | Model::DualInfinite => {
                let deepest = self
                    .positions(j)
                    .iter()
                    .map(|e| e.level.abs())
                    .max()
                    .unwrap_or(0);
                let copies = deepest + 1 + extra as i64;
                if self.model == Model::PrimalInfinite {
                    (-copies * m, 0)
                } else {
                    (0, copies * m)
                }
            }
        }
    }

    /// Saturated Bruhat chain test (primal), or its reverse-order analogue (dual).
    pub fn is_admissible(&self, j: &AlcoveElement) -> Result<bool> {
        for w in j.0.windows(2) {
            if w[0] >= w[1] {
                return Ok(false);
            }
        }
        let mut roots = Vec::with_capacity(j.len());
        for &x in &j.0 {
            roots.push(self.entry(x).ok_or(Error::IndexOutOfRange(x))?.root);
        }
        if self.model.is_dual() {
            roots.reverse();
        }
        let mut u = WeylElement::identity(self.rank());
        for b in roots {
            if !self.rs.is_cover(&u, b) {
                return Ok(false);
            }
            u = u.compose(self.rs.reflection(b));
        }
        Ok(true)
    }

    fn fold(&self, j: &AlcoveElement, extra: usize) -> Folded {
        let (lo, hi) = self.window(j, extra);
        let n = (hi - lo) as usize;
        let mut gammas = vec![Root(Vec::new()); n];
        let mut w = WeylElement::identity(self.rank());
        let mut step = |idx: i64, w: &mut WeylElement| {
            let e = self.entry(idx).expect("window inside chain");
            gammas[(idx - lo) as usize] = w.apply(self.rs.root(e.root));
            if j.contains(idx) {
                *w = w.compose(self.rs.reflection(e.root));
            }
        };
        if self.model.is_dual() {
            for idx in (lo..hi).rev() {
                step(idx, &mut w);
            }
        } else {
            for idx in lo..hi {
                step(idx, &mut w);
            }
        }
        Folded {
            lo,
            gammas,
            tau: self.tau(j),
        }
    }

    /// `τ(J) = r_{j1} ⋯ r_{jp}`.
    pub fn tau(&self, j: &AlcoveElement) -> WeylElement {
        j.0.iter().fold(WeylElement::identity(self.rank()), |w, &x| {
            w.compose(self.rs.reflection(self.entry(x).expect("in chain").root))
        })
    }

    /// `ι(J)`: the identity for primal models, `τ(J)^{-1}` for dual ones.
    pub fn iota(&self, j: &AlcoveElement) -> WeylElement {
        if !self.model.is_dual() {
            return WeylElement::identity(self.rank());
        }
        j.0.iter().rev().fold(WeylElement::identity(self.rank()), |w, &x| {
            w.compose(self.rs.reflection(self.entry(x).expect("in chain").root))
        })
    }

    /// The folded chain `Γ(J)` over the window, as `(index, γ)`.
    pub fn folded_chain(&self, j: &AlcoveElement) -> Vec<(i64, Root)> {
        let fd = self.fold(j, 0);
        let lo = fd.lo;
        fd.gammas
            .into_iter()
            .enumerate()
            .map(|(k, g)| (lo + k as i64, g))
            .collect()
    }

    fn signature_of(&self, j: &AlcoveElement, fd: &Folded, i: usize) -> (SignatureWord, Vec<i64>) {
        let mut word = Vec::new();
        let mut in_j = Vec::new();
        for (k, g) in fd.gammas.iter().enumerate() {
            if g.simple_index() != Some(i) {
                continue;
            }
            let idx = fd.lo + k as i64;
            if j.contains(idx) {
                in_j.push(idx);
                continue;
            }
            let positive = g.is_positive() != self.model.is_dual();
            word.push((idx, if positive { Sign::Plus } else { Sign::Minus }));
        }
        (SignatureWord::from_word(word), in_j)
    }

    pub fn signature(&self, j: &AlcoveElement, i: usize) -> SignatureWord {
        let fd = self.fold(j, 0);
        self.signature_of(j, &fd, i).0
    }

    fn pair_with_simple(&self, w: &WeylElement, i: usize) -> i64 {
        let rho = Weight::rho(self.rank());
        self.rs.act(w, &rho).pair_simple(i).to_integer()
    }

    fn f_in(&self, j: &AlcoveElement, i: usize, extra: usize) -> Option<AlcoveElement> {
        let fd = self.fold(j, extra);
        let (sig, in_j) = self.signature_of(j, &fd, i);
        let out = match sig.reduced.iter().rev().find(|(_, s)| *s == Sign::Plus) {
            Some(&(a, _)) => {
                let min_a = in_j.iter().copied().filter(|&x| x > a).min();
                Some(j.with(Some(a), min_a))
            }
            None => {
                let iota = self.iota(j);
                if self.pair_with_simple(&iota, i) < 0 {
                    in_j.first().map(|&x| j.with(None, Some(x)))
                } else {
                    None
                }
            }
        };
        debug_assert!(out.as_ref().is_none_or(|x| self.is_admissible(x).unwrap_or(false)));
        out
    }

    fn e_in(&self, j: &AlcoveElement, i: usize, extra: usize) -> Option<AlcoveElement> {
        let fd = self.fold(j, extra);
        let (sig, in_j) = self.signature_of(j, &fd, i);
        let out = match sig.reduced.iter().find(|(_, s)| *s == Sign::Minus) {
            Some(&(a, _)) => {
                let max_a = in_j.iter().copied().filter(|&x| x < a).max();
                Some(j.with(Some(a), max_a))
            }
            None => {
                let w = self.iota(j).compose(&fd.tau);
                if self.pair_with_simple(&w, i) < 0 {
                    in_j.last().map(|&x| j.with(None, Some(x)))
                } else {
                    None
                }
            }
        };
        debug_assert!(out.as_ref().is_none_or(|x| self.is_admissible(x).unwrap_or(false)));
        out
    }

    pub fn f(&self, j: &AlcoveElement, i: usize) -> Option<AlcoveElement> {
        self.f_in(j, i, 0)
    }

    pub fn e(&self, j: &AlcoveElement, i: usize) -> Option<AlcoveElement> {
        self.e_in(j, i, 0)
    }

    /// `f_i` computed over a window with `extra` additional copies.
    pub fn f_with_window(&self, j: &AlcoveElement, i: usize, extra: usize) -> Option<AlcoveElement> {
        self.f_in(j, i, extra)
    }

    pub fn e_with_window(&self, j: &AlcoveElement, i: usize, extra: usize) -> Option<AlcoveElement> {
        self.e_in(j, i, extra)
    }

    /// Applies `f_{i1}`, then `f_{i2}`, and so on.
    pub fn f_string(&self, j: &AlcoveElement, word: &[usize]) -> Option<AlcoveElement> {
        word.iter().try_fold(j.clone(), |acc, &i| self.f(&acc, i))
    }

    pub fn e_string(&self, j: &AlcoveElement, word: &[usize]) -> Option<AlcoveElement> {
        word.iter().try_fold(j.clone(), |acc, &i| self.e(&acc, i))
    }

    /// Raises to the highest weight element, always using the smallest
    /// applicable index, and returns the indices used.
    pub fn to_highest_weight(&self, j: &AlcoveElement) -> (AlcoveElement, Vec<usize>) {
        let mut cur = j.clone();
        let mut path = Vec::new();
        'outer: loop {
            for i in 1..=self.rank() {
                if let Some(next) = self.e(&cur, i) {
                    cur = next;
                    path.push(i);
                    continue 'outer;
                }
            }
            return (cur, path);
        }
    }

    /// `-r̂_{j1} ⋯ r̂_{jp}(-λ)` (primal) or `-ι(J) r̂'_{j1} ⋯ r̂'_{jp}(λ)` (dual),
    /// with `λ = 0` for the infinite models.
    pub fn weight(&self, j: &AlcoveElement) -> Weight {
        let lambda = self.lambda();
        let pos = self.positions(j);
        if self.model.is_dual() {
            let mut mu = lambda;
            for e in pos.iter().rev() {
                mu = self.rs.affine_reflect(e.root, e.level, &mu);
            }
            -&self.rs.act(&self.iota(j), &mu)
        } else {
            let mut mu = -&lambda;
            for e in pos.iter().rev() {
                mu = self.rs.affine_reflect(e.root, -e.level, &mu);
            }
            -&mu
        }
    }

    fn string_length(&self, j: &AlcoveElement, i: usize, up: bool) -> i64 {
        let mut cur = j.clone();
        let mut n = 0;
        while let Some(next) = if up { self.e(&cur, i) } else { self.f(&cur, i) } {
            cur = next;
            n += 1;
        }
        n
    }

    pub fn epsilon(&self, j: &AlcoveElement, i: usize) -> i64 {
        match self.model {
            Model::DualInfinite => {
                self.phi(j, i) - self.weight(j).pair_simple(i).to_integer()
            }
            _ => self.string_length(j, i, true),
        }
    }

    pub fn phi(&self, j: &AlcoveElement, i: usize) -> i64 {
        match self.model {
            Model::PrimalInfinite => {
                self.epsilon(j, i) + self.weight(j).pair_simple(i).to_integer()
            }
            _ => self.string_length(j, i, false),
        }
    }

    /// `((β, ℓ), …)`, or `∅`.
    pub fn render(&self, j: &AlcoveElement) -> String {
        if j.is_empty() {
            return "∅".to_string();
        }
        chains::render_positions(&self.rs, self.positions(j).into_iter())
    }

    /// `{model, chain, positions: [{root, level, index}]}`.
    pub fn element_json(&self, j: &AlcoveElement) -> serde_json::Value {
        let positions: Vec<_> = j
            .0
            .iter()
            .zip(self.positions(j))
            .map(|(&idx, e)| {
                json!({"root": self.rs.root(e.root).0, "level": e.level, "index": idx})
            })
            .collect();
        let chain = if self.model.is_infinite() {
            json!({"base": self.chain.to_json()})
        } else {
            self.chain.to_json()
        };
        json!({"model": self.model, "chain": chain, "positions": positions})
    }

    /// The finite crystal over `Γ_{kρ}` (dual when `self` is dual) that
    /// `S^pr_k` maps into.
    pub fn projection_target(&self, k: usize) -> Result<AlcoveCrystal> {
        let lam = &Weight::rho(self.rank()) * q(k as i64);
        match self.model {
            Model::PrimalInfinite => AlcoveCrystal::highest_weight(&self.rs, &lam),
            Model::DualInfinite => AlcoveCrystal::dual_highest_weight(&self.rs, &lam),
            _ => Err(Error::Unsupported("projection from a finite model")),
        }
    }

    /// `S^pr_{kρ}`: `(ζ, ℓ) ↦ (ζ, ℓ + k<ρ,ζ∨>)` for `Al(∞)`; dual levels are
    /// unchanged for `Al∨(∞)`. `None` if a level leaves the range or the
    /// image is not admissible.
    pub fn project(&self, target: &AlcoveCrystal, j: &AlcoveElement, k: usize) -> Option<AlcoveElement> {
        let k = k as i64;
        let mut idx = Vec::with_capacity(j.len());
        for e in self.positions(j) {
            let level = match self.model {
                Model::PrimalInfinite => e.level + k * self.rs.rho_pair(e.root),
                _ => e.level,
            };
            idx.push(target.position(e.root, level)?);
        }
        let out = AlcoveElement::new(idx);
        target.is_admissible(&out).ok()?.then_some(out)
    }

    /// `S^in_{-kρ}`: the inverse level shift from `Al(kρ)` (or `Al∨(kρ)`).
    pub fn include(&self, source: &AlcoveCrystal, j: &AlcoveElement, k: usize) -> Result<AlcoveElement> {
        let k = k as i64;
        let mut idx = Vec::with_capacity(j.len());
        for e in source.positions(j) {
            let level = match self.model {
                Model::PrimalInfinite => e.level - k * self.rs.rho_pair(e.root),
                Model::DualInfinite => e.level,
                _ => return Err(Error::Unsupported("inclusion into a finite model")),
            };
            idx.push(self.position(e.root, level).ok_or_else(|| Error::NoSuchPosition {
                root: self.rs.root(e.root).to_string(),
                level,
            })?);
        }
        self.element(idx)
    }

    /// Smallest `k ≥ max(-ℓ)` with a nonzero projection (`k = 0` for `∅`).
    pub fn minimal_projection(&self, j: &AlcoveElement) -> Result<(usize, AlcoveCrystal, AlcoveElement)> {
        let start = self
            .positions(j)
            .iter()
            .map(|e| e.level.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        for k in start.. {
            let target = self.projection_target(k)?;
            if let Some(p) = self.project(&target, j, k) {
                return Ok((k, target, p));
            }
        }
        unreachable!("large projections are admissible")
    }

    /// The shift `S_μ` into the crystal over `Γ_μ ∗ Γ`.
    pub fn shift_map(&self, mu: &Weight) -> Result<ShiftMap> {
        if self.model != Model::PrimalFinite {
            return Err(Error::Unsupported("shift of a non-primal or infinite model"));
        }
        let gm = LambdaChain::lex(&self.rs, mu)?;
        let offset = gm.len() as i64;
        let target = AlcoveCrystal::new(gm.concat(&self.chain)?);
        Ok(ShiftMap {
            mu: mu.clone(),
            offset,
            target,
        })
    }
}

/// `S_μ: Al(λ) → T_{-μ} ⊗ Al(Γ_μ ∗ Γ_λ)`.
#[derive(Clone, Debug)]
pub struct ShiftMap {
    pub mu: Weight,
    offset: i64,
    target: AlcoveCrystal,
}

impl ShiftMap {
    pub fn target(&self) -> &AlcoveCrystal {
        &self.target
    }

    pub fn apply(&self, j: &AlcoveElement) -> Option<AlcoveElement> {
        let out = AlcoveElement::new(j.0.iter().map(|x| x + self.offset).collect());
        self.target.is_admissible(&out).ok()?.then_some(out)
    }
}

impl crate::crystalgraph::Crystal for AlcoveCrystal {
    type Elem = AlcoveElement;

    fn root_system(&self) -> &RootSystem {
        &self.rs
    }
    fn e(&self, b: &AlcoveElement, i: usize) -> Option<AlcoveElement> {
        AlcoveCrystal::e(self, b, i)
    }
    fn f(&self, b: &AlcoveElement, i: usize) -> Option<AlcoveElement> {
        AlcoveCrystal::f(self, b, i)
    }
    fn epsilon(&self, b: &AlcoveElement, i: usize) -> crate::crystalgraph::Stat {
        AlcoveCrystal::epsilon(self, b, i).into()
    }
    fn phi(&self, b: &AlcoveElement, i: usize) -> crate::crystalgraph::Stat {
        AlcoveCrystal::phi(self, b, i).into()
    }
    fn weight(&self, b: &AlcoveElement) -> Weight {
        AlcoveCrystal::weight(self, b)
    }
    fn label(&self, b: &AlcoveElement) -> String {
        self.render(b)
    }
    fn is_finite(&self) -> bool {
        !self.model.is_infinite()
    }
}

/// Operators through the piecewise-linear function `g_{α_i}` instead of
/// the reduced signature. Dual models go through the mirror primal model.
pub mod oracle {
    use super::*;

    struct Profile {
        idx: Vec<i64>,
        in_j: Vec<bool>,
        h: Vec<i64>,
        h_inf: i64,
        m: i64,
    }

    // Values are doubled so that half-steps stay integral: g(0) = -1.
    fn profile(c: &AlcoveCrystal, j: &AlcoveElement, i: usize) -> Profile {
        debug_assert!(!c.model.is_dual());
        let fd = c.fold(j, 0);
        let mut g = -1i64;
        let mut m = g;
        let (mut idx, mut in_j, mut h) = (Vec::new(), Vec::new(), Vec::new());
        for (k, gamma) in fd.gammas.iter().enumerate() {
            if gamma.simple_index() != Some(i) {
                continue;
            }
            let at = fd.lo + k as i64;
            let s = if gamma.is_positive() { 1 } else { -1 };
            let folded = j.contains(at);
            g += s;
            idx.push(at);
            in_j.push(folded);
            h.push(g);
            m = m.max(g);
            g += if folded { -s } else { s };
        }
        let tail = c.rs.act(&fd.tau, &Weight::rho(c.rank())).pair_simple(i);
        g += if tail.is_positive() { 1 } else { -1 };
        m = m.max(g);
        Profile {
            idx,
            in_j,
            h,
            h_inf: g,
            m,
        }
    }

    fn primal_f(c: &AlcoveCrystal, j: &AlcoveElement, i: usize) -> Option<AlcoveElement> {
        let p = profile(c, j, i);
        if p.m <= 0 {
            return None;
        }
        // μ: first index attaining M, or ∞.
        let mu = p.h.iter().position(|&x| x == p.m);
        let k = match mu {
            Some(0) => return None,
            Some(t) => t - 1,
            None => p.idx.len().checked_sub(1)?,
        };
        if p.in_j[k] {
            return None;
        }
        Some(j.with(Some(p.idx[k]), mu.map(|t| p.idx[t])))
    }

    fn primal_e(c: &AlcoveCrystal, j: &AlcoveElement, i: usize) -> Option<AlcoveElement> {
        let p = profile(c, j, i);
        if p.m <= p.h_inf {
            return None;
        }
        let k = p.h.iter().rposition(|&x| x == p.m)?;
        if !p.in_j[k] {
            return None;
        }
        let add = p.idx.get(k + 1).copied();
        Some(j.with(add, Some(p.idx[k])))
    }

    pub fn f(c: &AlcoveCrystal, j: &AlcoveElement, i: usize) -> Option<AlcoveElement> {
        if c.model.is_dual() {
            let pc = c.mirror_crystal();
            primal_e(&pc, &c.mirror(j), i).map(|x| pc.mirror(&x))
        } else {
            primal_f(c, j, i)
        }
    }

    pub fn e(c: &AlcoveCrystal, j: &AlcoveElement, i: usize) -> Option<AlcoveElement> {
        if c.model.is_dual() {
            let pc = c.mirror_crystal();
            primal_f(&pc, &c.mirror(j), i).map(|x| pc.mirror(&x))
        } else {
            primal_e(c, j, i)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> Arc<RootSystem> {
        Arc::new(RootSystem::from_type(t).unwrap())
    }

    fn root(c: &[i64]) -> Root {
        Root(c.to_vec())
    }

    #[test]
    fn admissibility_examples() {
        let a3 = rs("A3");
        let c = AlcoveCrystal::highest_weight(&a3, &Weight::from_ints(&[2, 0, 0])).unwrap();
        assert!(c.is_admissible(&AlcoveElement::new(vec![3])).unwrap());
        let d = AlcoveCrystal::highest_weight(&a3, &Weight::from_ints(&[1, 0, 0])).unwrap();
        assert!(!d.is_admissible(&AlcoveElement::new(vec![1, 2])).unwrap());
        assert!(d.is_admissible(&AlcoveElement::empty()).unwrap());
        assert_eq!(
            d.is_admissible(&AlcoveElement::new(vec![7])),
            Err(Error::IndexOutOfRange(7))
        );
    }

    #[test]
    fn folded_chain_examples() {
        let a2 = rs("A2");
        let c = AlcoveCrystal::highest_weight(&a2, &Weight::rho(2)).unwrap();
        let plain: Vec<Root> = c.folded_chain(&AlcoveElement::empty()).into_iter().map(|x| x.1).collect();
        assert_eq!(plain, vec![root(&[0, 1]), root(&[1, 1]), root(&[1, 0]), root(&[1, 1])]);
        let one = c.folded_chain(&AlcoveElement::new(vec![2]));
        assert_eq!(one[3].1, root(&[0, 1]));
        let two = AlcoveElement::new(vec![2, 3]);
        assert!(c.is_admissible(&two).unwrap());
        assert_eq!(c.folded_chain(&two)[3].1, root(&[0, 1]));
    }

    #[test]
    fn signatures() {
        let a2 = rs("A2");
        let c = AlcoveCrystal::highest_weight(&a2, &Weight::rho(2)).unwrap();
        let s = c.signature(&AlcoveElement::empty(), 1);
        assert_eq!(s.word, vec![(2, Sign::Plus)]);
        let inf = AlcoveCrystal::infinity(&a2);
        let s = inf.signature(&AlcoveElement::empty(), 1);
        assert_eq!(s.word, vec![(-2, Sign::Plus)]);
        assert_eq!(inf.entry(-2), Some(ChainEntry { root: 0, level: -1 }));
        let w = SignatureWord::from_word(vec![(0, Sign::Minus), (1, Sign::Plus)]);
        assert!(w.reduced.is_empty());
    }

    #[test]
    fn a2_infinity_first_steps() {
        let a2 = rs("A2");
        let inf = AlcoveCrystal::infinity(&a2);
        let e = AlcoveElement::empty();
        let f1 = inf.f(&e, 1).unwrap();
        assert_eq!(inf.render(&f1), "((α1, -1))");
        let f21 = inf.f(&f1, 2).unwrap();
        assert_eq!(inf.render(&f21), "((α1, -1), (α1+α2, -1))");
        assert_eq!(inf.e(&f1, 1), Some(e.clone()));
        assert!((1..=2).all(|i| inf.e(&e, i).is_none()));
        assert_eq!(inf.weight(&f1), -a2.simple_root_weight(1));
        assert_eq!(inf.epsilon(&f1, 1), 1);
        assert_eq!(inf.phi(&f1, 1), -1);
        assert_eq!(inf.weight(&e), Weight::zero(2));
    }

    #[test]
    fn golden_f_string() {
        let a3 = rs("A3");
        let inf = AlcoveCrystal::infinity(&a3);
        let b = inf.f_string(&AlcoveElement::empty(), &[2, 1, 3, 2, 2, 1, 3, 2]).unwrap();
        assert_eq!(
            inf.render(&b),
            "((α2, -2), (α2+α3, -2), (α1+α2, -2), (α1+α2+α3, -2))"
        );
        let expected = a3.root_lattice_weight(&root(&[-2, -4, -2]));
        assert_eq!(inf.weight(&b), expected);
        let (k, target, p) = inf.minimal_projection(&b).unwrap();
        assert_eq!(k, 2);
        let lv: Vec<i64> = target.positions(&p).iter().map(|e| e.level).collect();
        assert_eq!(lv, vec![0, 2, 2, 4]);
        for (k, want) in [(3, vec![1, 4, 4, 7]), (4, vec![2, 6, 6, 10])] {
            let t = inf.projection_target(k).unwrap();
            let p = inf.project(&t, &b, k).unwrap();
            let lv: Vec<i64> = t.positions(&p).iter().map(|e| e.level).collect();
            assert_eq!(lv, want);
        }
        let (top, path) = inf.to_highest_weight(&b);
        assert!(top.is_empty());
        assert_eq!(path, vec![2, 1, 2, 1, 3, 2, 3, 2]);
        assert_eq!(inf.include(&target, &p, 2).unwrap(), b);
    }

    #[test]
    fn highest_weight_statistics() {
        let a2 = rs("A2");
        let c = AlcoveCrystal::highest_weight(&a2, &Weight::rho(2)).unwrap();
        let e = AlcoveElement::empty();
        assert_eq!(c.phi(&e, 1), 1);
        assert_eq!(c.epsilon(&e, 1), 0);
        assert_eq!(c.weight(&e), Weight::rho(2));
        let d = c.mirror_crystal();
        assert_eq!(d.model(), Model::DualFinite);
        assert_eq!(d.weight(&e), -&Weight::rho(2));
        assert_eq!(d.epsilon(&e, 1), 1);
    }

    #[test]
    fn shift_examples() {
        let a2 = rs("A2");
        let c = AlcoveCrystal::highest_weight(&a2, &Weight::rho(2)).unwrap();
        let s = c.shift_map(&Weight::rho(2)).unwrap();
        assert_eq!(s.apply(&AlcoveElement::empty()), Some(AlcoveElement::empty()));
        let j = c.f(&AlcoveElement::empty(), 1).unwrap();
        assert_eq!(c.render(&j), "((α1, 0))");
        let sj = s.apply(&j).unwrap();
        assert_eq!(s.target().render(&sj), "((α1, 1))");
        // (α1+α2, 0) sits at index 1 and lands on level 2
        assert_eq!(s.target().entry(1 + 4).unwrap().level, 2);
        assert_eq!(s.target().entry(1 + 4).unwrap().root, 2);
        assert!(c.shift_map(&Weight::from_ints(&[-1, 0])).is_err());
    }

    #[test]
    fn inclusion_and_projection() {
        let a2 = rs("A2");
        let inf = AlcoveCrystal::infinity(&a2);
        let t1 = inf.projection_target(1).unwrap();
        let j = t1.element_from_positions(&[(root(&[1, 0]), 0)]).unwrap();
        let up = inf.include(&t1, &j, 1).unwrap();
        assert_eq!(inf.render(&up), "((α1, -1))");
        let (k, _, p) = inf.minimal_projection(&up).unwrap();
        assert_eq!((k, p), (1, j));
        let (k0, _, p0) = inf.minimal_projection(&AlcoveElement::empty()).unwrap();
        assert_eq!(k0, 0);
        assert!(p0.is_empty());
    }

    #[test]
    fn dual_infinity_positions() {
        let a2 = rs("A2");
        let d = AlcoveCrystal::dual_infinity(&a2);
        let e1 = d.e(&AlcoveElement::empty(), 1).unwrap();
        assert_eq!(d.render(&e1), "((α1, 1))");
        assert_eq!(d.weight(&e1), a2.simple_root_weight(1).clone());
        assert!(d.f(&AlcoveElement::empty(), 1).is_none());
        for idx in 0..24 {
            let e = d.entry(idx).unwrap();
            assert_eq!(d.position(e.root, e.level), Some(idx));
        }
        let p = AlcoveCrystal::infinity(&a2);
        for idx in -24..0 {
            let e = p.entry(idx).unwrap();
            assert_eq!(p.position(e.root, e.level), Some(idx));
        }
    }

    #[test]
    fn oracle_matches_on_rho() {
        let a2 = rs("A2");
        let c = AlcoveCrystal::highest_weight(&a2, &Weight::rho(2)).unwrap();
        let mut seen = vec![AlcoveElement::empty()];
        let mut k = 0;
        while k < seen.len() {
            let j = seen[k].clone();
            for i in 1..=2 {
                assert_eq!(oracle::f(&c, &j, i), c.f(&j, i), "f{i} {j}");
                assert_eq!(oracle::e(&c, &j, i), c.e(&j, i), "e{i} {j}");
                if let Some(x) = c.f(&j, i) {
                    if !seen.contains(&x) {
                        seen.push(x);
                    }
                }
            }
            k += 1;
        }
        assert_eq!(seen.len(), 8);
    }
}
