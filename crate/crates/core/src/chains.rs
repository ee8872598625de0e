//! λ-chains: the lex construction, validation, concatenation, dualization
//! and finite windows of the ∞-chain.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{q, Coroot, RootSystem, Weight, Q};

/// One `(β, ℓ)` pair. `root` indexes [`RootSystem::positive_roots`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainEntry {
    pub root: usize,
    pub level: i64,
}

/// A λ-chain, or a dual λ-chain when `dual` is set. A dual chain lists the
/// entries of its primal chain in reverse order with levels `<λ,β∨> - ℓ`.
#[derive(Clone, Debug)]
pub struct LambdaChain {
    rs: Arc<RootSystem>,
    lambda: Weight,
    entries: Vec<ChainEntry>,
    dual: bool,
}

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    root: Vec<i64>,
    level: i64,
}

impl LambdaChain {
    /// The lex λ-chain: sort `(β,h)` by `(h, c_1, …, c_n) / <λ,β∨>`.
    pub fn lex(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<Self> {
        check_dominant(rs, lambda)?;
        let mut keyed: Vec<(Vec<Q>, ChainEntry)> = Vec::new();
        for b in 0..rs.num_positive() {
            let co = rs.coroot(b);
            let p = lambda.pair(co).to_integer();
            for h in 0..p {
                let v = std::iter::once(q(h))
                    .chain(co.0.iter().map(|&c| q(c)))
                    .map(|x| x / p)
                    .collect();
                keyed.push((v, ChainEntry { root: b, level: h }));
            }
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(LambdaChain {
            rs: rs.clone(),
            lambda: lambda.clone(),
            entries: keyed.into_iter().map(|(_, e)| e).collect(),
            dual: false,
        })
    }

    /// Wraps an arbitrary entry sequence; use [`validate`](Self::validate) to check it.
    pub fn from_entries(
        rs: &Arc<RootSystem>,
        lambda: &Weight,
        entries: Vec<ChainEntry>,
        dual: bool,
    ) -> Self {
        LambdaChain {
            rs: rs.clone(),
            lambda: lambda.clone(),
            entries,
            dual,
        }
    }

    /// A primal chain from a bare root sequence, levels assigned by occurrence.
    pub fn from_roots(rs: &Arc<RootSystem>, lambda: &Weight, roots: &[usize]) -> Self {
        let mut seen = vec![0i64; rs.num_positive()];
        let entries = roots
            .iter()
            .map(|&b| {
                seen[b] += 1;
                ChainEntry {
                    root: b,
                    level: seen[b] - 1,
                }
            })
            .collect();
        Self::from_entries(rs, lambda, entries, false)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn entries(&self) -> &[ChainEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    /// `<λ, β∨>` for the root of an entry.
    pub fn height(&self, root: usize) -> i64 {
        self.lambda.pair(self.rs.coroot(root)).to_integer()
    }

    /// Reverses the entries and maps `ℓ ↦ <λ,β∨> - ℓ`; an involution.
    pub fn dual(&self) -> Self {
        let entries = self
            .entries
            .iter()
            .rev()
            .map(|e| ChainEntry {
                root: e.root,
                level: self.height(e.root) - e.level,
            })
            .collect();
        LambdaChain {
            rs: self.rs.clone(),
            lambda: self.lambda.clone(),
            entries,
            dual: !self.dual,
        }
    }

    /// Entries of `self` followed by entries of `other` with levels shifted by `<λ,β∨>`.
    pub fn concat(&self, other: &LambdaChain) -> Result<Self> {
        if !Arc::ptr_eq(&self.rs, &other.rs) && self.rs.datum() != other.rs.datum() {
            return Err(Error::RootSystemMismatch);
        }
        if self.dual || other.dual {
            return Err(Error::Unsupported("concatenation of dual chains"));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|e| ChainEntry {
            root: e.root,
            level: e.level + self.height(e.root),
        }));
        Ok(LambdaChain {
            rs: self.rs.clone(),
            lambda: &self.lambda + &other.lambda,
            entries,
            dual: false,
        })
    }

    /// Checks occurrence counts, level labels and the interlacing condition
    /// `N(γ) = N(α) + p N(β)` at every position carrying `β`.
    pub fn validate(&self) -> bool {
        if self.dual {
            return self.dual().validate();
        }
        let rs = &*self.rs;
        let np = rs.num_positive();
        if !self.lambda.is_dominant_integral() {
            return false;
        }
        let mut count = vec![0i64; np];
        for e in &self.entries {
            if e.root >= np || e.level != count[e.root] {
                return false;
            }
            count[e.root] += 1;
        }
        if (0..np).any(|b| count[b] != self.height(b)) {
            return false;
        }
        let triples = coroot_triples(rs);
        let mut n = vec![0i64; np];
        for e in &self.entries {
            let beta = e.root;
            for &(alpha, (_, p), gamma) in triples.iter().filter(|t| t.1 .0 == beta) {
                if n[gamma] != n[alpha] + p * n[beta] {
                    return false;
                }
            }
            n[beta] += 1;
        }
        true
    }

    /// `[{root, level}]` with roots in the simple-root basis.
    pub fn to_json(&self) -> serde_json::Value {
        let v: Vec<JsonEntry> = self
            .entries
            .iter()
            .map(|e| JsonEntry {
                root: self.rs.root(e.root).0.clone(),
                level: e.level,
            })
            .collect();
        serde_json::to_value(v).expect("chain entries serialize")
    }

    pub fn from_json(rs: &Arc<RootSystem>, lambda: &Weight, v: &serde_json::Value) -> Result<Self> {
        let raw: Vec<JsonEntry> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let entries = raw
            .into_iter()
            .map(|e| {
                let root = crate::rootsys::Root(e.root);
                rs.root_index(&root)
                    .map(|b| ChainEntry { root: b, level: e.level })
                    .ok_or_else(|| Error::Parse(format!("{root} is not a positive root")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_entries(rs, lambda, entries, false))
    }

    /// Text form `((α2, 0), (α1+α2, 0), …)`.
    pub fn render(&self) -> String {
        render_positions(&self.rs, self.entries.iter().copied())
    }
}

/// Every `(α, (β, p), γ)` with `α ≠ β` positive and `γ∨ = α∨ + p β∨` a
/// positive coroot, `p ≠ 0`.
fn coroot_triples(rs: &RootSystem) -> Vec<(usize, (usize, i64), usize)> {
    let np = rs.num_positive();
    let bound = (0..np)
        .flat_map(|b| rs.coroot(b).0.iter().copied())
        .max()
        .unwrap_or(1);
    let lookup: std::collections::HashMap<&Coroot, usize> =
        (0..np).map(|b| (rs.coroot(b), b)).collect();
    let mut out = Vec::new();
    for a in 0..np {
        for b in 0..np {
            if a == b {
                continue;
            }
            for p in -bound..=bound {
                if p == 0 {
                    continue;
                }
                let g = Coroot(
                    rs.coroot(a)
                        .0
                        .iter()
                        .zip(&rs.coroot(b).0)
                        .map(|(x, y)| x + p * y)
                        .collect(),
                );
                if let Some(&c) = lookup.get(&g) {
                    out.push((a, (b, p), c));
                }
            }
        }
    }
    out
}

pub(crate) fn check_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.rank() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            got: lambda.rank(),
        });
    }
    if !lambda.is_dominant_integral() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

pub fn render_positions(rs: &RootSystem, it: impl Iterator<Item = ChainEntry>) -> String {
    let parts: Vec<String> = it
        .map(|e| format!("({}, {})", rs.root(e.root), e.level))
        .collect();
    format!("({})", parts.join(", "))
}

/// `k` copies of the lex ρ-chain shifted so that every level is negative;
/// the last copy ends at the fundamental alcove.
#[derive(Clone, Debug)]
pub struct InfChainWindow {
    base: LambdaChain,
    copies: usize,
}

impl InfChainWindow {
    pub fn new(rs: &Arc<RootSystem>, copies: usize) -> Result<Self> {
        if copies == 0 {
            return Err(Error::EmptyWindow);
        }
        let base = LambdaChain::lex(rs, &Weight::rho(rs.rank()))?;
        Ok(InfChainWindow { base, copies })
    }

    pub fn base(&self) -> &LambdaChain {
        &self.base
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn len(&self) -> usize {
        self.copies * self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Entry at a negative index, `-1` being the last entry of the ∞-chain.
    pub fn entry(&self, idx: i64) -> ChainEntry {
        inf_entry(&self.base, idx)
    }

    /// Entries in chain order, paired with their negative indices.
    pub fn entries(&self) -> Vec<(i64, ChainEntry)> {
        let lo = -(self.len() as i64);
        (lo..0).map(|i| (i, self.entry(i))).collect()
    }
}

/// Entry of the ∞-chain `⋯ ∗ Γ ∗ Γ` at a negative index.
pub(crate) fn inf_entry(base: &LambdaChain, idx: i64) -> ChainEntry {
    debug_assert!(idx < 0);
    let m = base.len() as i64;
    let c = 1 + (-idx - 1) / m;
    let b = (m - 1 - (-idx - 1) % m) as usize;
    let e = base.entries[b];
    ChainEntry {
        root: e.root,
        level: e.level - c * base.height(e.root),
    }
}

/// Entry of the dual ∞-chain `Γ∨ ∗ Γ∨ ∗ ⋯` at a nonnegative index.
pub(crate) fn dual_inf_entry(dual_base: &LambdaChain, idx: i64) -> ChainEntry {
    debug_assert!(idx >= 0);
    let m = dual_base.len() as i64;
    let c = idx / m;
    let e = dual_base.entries[(idx % m) as usize];
    ChainEntry {
        root: e.root,
        level: e.level + c * dual_base.height(e.root),
    }
}
