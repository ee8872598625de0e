//! Model-agnostic crystal machinery: the [`Crystal`] trait, tensor products,
//! `T_λ`, contragredient duals, graph enumeration, axiom checks, canonical
//! isomorphism testing and DOT/JSON export.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rootsys::{parse_q, RootSystem, Weight};

/// An `ε`/`φ` value: an integer or `-∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stat {
    NegInf,
    Int(i64),
}

impl Stat {
    pub fn shift(self, k: i64) -> Stat {
        match self {
            Stat::NegInf => Stat::NegInf,
            Stat::Int(x) => Stat::Int(x + k),
        }
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Stat::NegInf => None,
            Stat::Int(x) => Some(x),
        }
    }

    fn to_json(self) -> Value {
        match self {
            Stat::NegInf => Value::Null,
            Stat::Int(x) => json!(x),
        }
    }
}

impl From<i64> for Stat {
    fn from(x: i64) -> Self {
        Stat::Int(x)
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stat::NegInf => f.write_str("-inf"),
            Stat::Int(x) => write!(f, "{x}"),
        }
    }
}

/// An abstract crystal. Indices `i` are 1-based.
pub trait Crystal {
    type Elem: Clone + Eq + Hash + Ord + fmt::Debug;

    fn root_system(&self) -> &RootSystem;
    fn e(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn f(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn epsilon(&self, b: &Self::Elem, i: usize) -> Stat;
    fn phi(&self, b: &Self::Elem, i: usize) -> Stat;
    fn weight(&self, b: &Self::Elem) -> Weight;
    fn label(&self, b: &Self::Elem) -> String;
    /// Whether the crystal has finitely many elements.
    fn is_finite(&self) -> bool;

    fn rank(&self) -> usize {
        self.root_system().rank()
    }
}

/// `T_λ`: one element, no edges, `ε = φ = -∞`.
#[derive(Clone, Debug)]
pub struct TCrystal<'a> {
    rs: &'a RootSystem,
    weight: Weight,
}

impl<'a> TCrystal<'a> {
    pub fn new(rs: &'a RootSystem, weight: Weight) -> Self {
        TCrystal { rs, weight }
    }
}

impl Crystal for TCrystal<'_> {
    type Elem = ();

    fn root_system(&self) -> &RootSystem {
        self.rs
    }
    fn e(&self, _: &(), _: usize) -> Option<()> {
        None
    }
    fn f(&self, _: &(), _: usize) -> Option<()> {
        None
    }
    fn epsilon(&self, _: &(), _: usize) -> Stat {
        Stat::NegInf
    }
    fn phi(&self, _: &(), _: usize) -> Stat {
        Stat::NegInf
    }
    fn weight(&self, _: &()) -> Weight {
        self.weight.clone()
    }
    fn label(&self, _: &()) -> String {
        format!("t{}", self.weight)
    }
    fn is_finite(&self) -> bool {
        true
    }
}

/// `B2 ⊗ B1` with elements `(b2, b1)`, using the rule that acts on `b2`
/// when `ε_i(b2) > φ_i(b1)` (for `e`) or `ε_i(b2) ≥ φ_i(b1)` (for `f`).
#[derive(Clone, Debug)]
pub struct Tensor<B2, B1> {
    pub left: B2,
    pub right: B1,
}

impl<B2: Crystal, B1: Crystal> Tensor<B2, B1> {
    pub fn new(left: B2, right: B1) -> Self {
        Tensor { left, right }
    }
}

impl<B2: Crystal, B1: Crystal> Crystal for Tensor<B2, B1> {
    type Elem = (B2::Elem, B1::Elem);

    fn root_system(&self) -> &RootSystem {
        self.right.root_system()
    }

    fn e(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        let (b2, b1) = b;
        if self.left.epsilon(b2, i) > self.right.phi(b1, i) {
            self.left.e(b2, i).map(|x| (x, b1.clone()))
        } else {
            self.right.e(b1, i).map(|x| (b2.clone(), x))
        }
    }

    fn f(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        let (b2, b1) = b;
        if self.left.epsilon(b2, i) >= self.right.phi(b1, i) {
            self.left.f(b2, i).map(|x| (x, b1.clone()))
        } else {
            self.right.f(b1, i).map(|x| (b2.clone(), x))
        }
    }

    fn epsilon(&self, b: &Self::Elem, i: usize) -> Stat {
        let (b2, b1) = b;
        let w1 = self.right.weight(b1).pair_simple(i).to_integer();
        self.right.epsilon(b1, i).max(self.left.epsilon(b2, i).shift(-w1))
    }

    fn phi(&self, b: &Self::Elem, i: usize) -> Stat {
        let (b2, b1) = b;
        let w2 = self.left.weight(b2).pair_simple(i).to_integer();
        self.left.phi(b2, i).max(self.right.phi(b1, i).shift(w2))
    }

    fn weight(&self, b: &Self::Elem) -> Weight {
        &self.left.weight(&b.0) + &self.right.weight(&b.1)
    }

    fn label(&self, b: &Self::Elem) -> String {
        format!("{} ⊗ {}", self.left.label(&b.0), self.right.label(&b.1))
    }

    fn is_finite(&self) -> bool {
        self.left.is_finite() && self.right.is_finite()
    }
}

/// The contragredient dual `B∨`.
#[derive(Clone, Debug)]
pub struct Contragredient<C>(pub C);

impl<C: Crystal> Crystal for Contragredient<C> {
    type Elem = C::Elem;

    fn root_system(&self) -> &RootSystem {
        self.0.root_system()
    }
    fn e(&self, b: &C::Elem, i: usize) -> Option<C::Elem> {
        self.0.f(b, i)
    }
    fn f(&self, b: &C::Elem, i: usize) -> Option<C::Elem> {
        self.0.e(b, i)
    }
    fn epsilon(&self, b: &C::Elem, i: usize) -> Stat {
        self.0.phi(b, i)
    }
    fn phi(&self, b: &C::Elem, i: usize) -> Stat {
        self.0.epsilon(b, i)
    }
    fn weight(&self, b: &C::Elem) -> Weight {
        -&self.0.weight(b)
    }
    fn label(&self, b: &C::Elem) -> String {
        format!("{}∨", self.0.label(b))
    }
    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }
}

impl<C: Crystal> Crystal for &C {
    type Elem = C::Elem;

    fn root_system(&self) -> &RootSystem {
        (*self).root_system()
    }
    fn e(&self, b: &C::Elem, i: usize) -> Option<C::Elem> {
        (*self).e(b, i)
    }
    fn f(&self, b: &C::Elem, i: usize) -> Option<C::Elem> {
        (*self).f(b, i)
    }
    fn epsilon(&self, b: &C::Elem, i: usize) -> Stat {
        (*self).epsilon(b, i)
    }
    fn phi(&self, b: &C::Elem, i: usize) -> Stat {
        (*self).phi(b, i)
    }
    fn weight(&self, b: &C::Elem) -> Weight {
        (*self).weight(b)
    }
    fn label(&self, b: &C::Elem) -> String {
        (*self).label(b)
    }
    fn is_finite(&self) -> bool {
        (*self).is_finite()
    }
}

/// Where an operator sends a node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Link {
    /// The operator gives `0`.
    Null,
    To(usize),
    /// The image exists but was not enumerated.
    Outside,
    /// Not computed.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub label: String,
    pub wt: Weight,
    pub eps: Vec<Stat>,
    pub phi: Vec<Stat>,
    /// `f[i-1]` is the `f_i` link.
    pub f: Vec<Link>,
    pub e: Vec<Link>,
    pub depth: usize,
    /// Whether the BFS expanded this node (false on a truncation boundary).
    pub expanded: bool,
}

/// A crystal graph with weight and statistics tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    pub nodes: Vec<Node>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Follow `f` edges.
    Down,
    /// Follow `e` edges.
    Up,
    Both,
}

/// An enumerated graph together with the elements behind its nodes.
#[derive(Clone, Debug)]
pub struct Enumeration<E> {
    pub graph: CrystalGraph,
    pub elements: Vec<E>,
    index: HashMap<E, usize>,
}

impl<E: Clone + Eq + Hash> Enumeration<E> {
    pub fn id(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Breadth-first enumeration from `generators`. Without a depth bound the
/// crystal must be finite.
pub fn enumerate<C: Crystal>(
    c: &C,
    generators: &[C::Elem],
    dir: Direction,
    depth: Option<usize>,
) -> Result<Enumeration<C::Elem>> {
    if depth.is_none() && !c.is_finite() {
        return Err(Error::Unbounded);
    }
    let n = c.rank();
    let mut elements: Vec<C::Elem> = Vec::new();
    let mut depths: Vec<usize> = Vec::new();
    let mut index: HashMap<C::Elem, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for g in generators {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(g.clone());
            depths.push(0);
        }
    }
    let mut expanded = Vec::new();
    while let Some(k) = queue.pop_front() {
        let d = depths[k];
        if depth.is_some_and(|bound| d >= bound) {
            continue;
        }
        expanded.push(k);
        let b = elements[k].clone();
        for i in 1..=n {
            let mut next = Vec::new();
            if dir != Direction::Up {
                next.extend(c.f(&b, i));
            }
            if dir != Direction::Down {
                next.extend(c.e(&b, i));
            }
            for x in next {
                if !index.contains_key(&x) {
                    index.insert(x.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(x);
                    depths.push(d + 1);
                }
            }
        }
    }
    let mut is_expanded = vec![false; elements.len()];
    for k in expanded {
        is_expanded[k] = true;
    }
    let link = |x: Option<C::Elem>| match x {
        None => Link::Null,
        Some(y) => index.get(&y).map_or(Link::Outside, |&t| Link::To(t)),
    };
    let nodes = elements
        .iter()
        .enumerate()
        .map(|(k, b)| Node {
            label: c.label(b),
            wt: c.weight(b),
            eps: (1..=n).map(|i| c.epsilon(b, i)).collect(),
            phi: (1..=n).map(|i| c.phi(b, i)).collect(),
            f: (1..=n).map(|i| link(c.f(b, i))).collect(),
            e: (1..=n).map(|i| link(c.e(b, i))).collect(),
            depth: depths[k],
            expanded: is_expanded[k],
        })
        .collect();
    let rs = c.root_system();
    Ok(Enumeration {
        graph: CrystalGraph {
            rank: n,
            cartan: rs.datum().matrix().to_vec(),
            simple_roots: (1..=n).map(|i| rs.simple_root_weight(i).clone()).collect(),
            nodes,
        },
        elements,
        index,
    })
}

/// One violated identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub node: usize,
    pub i: usize,
    pub axiom: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn fail(&mut self, node: usize, i: usize, axiom: &'static str, detail: String) {
        self.violations.push(Violation {
            node,
            i,
            axiom,
            detail,
        });
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} checks, {} violations", self.checked, self.violations.len())?;
        for v in &self.violations {
            write!(f, "\n  node {} i={} {}: {}", v.node, v.i, v.axiom, v.detail)?;
        }
        Ok(())
    }
}

impl CrystalGraph {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `(src, i, dst)` for every enumerated `f_i` edge.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (a, node) in self.nodes.iter().enumerate() {
            for (k, l) in node.f.iter().enumerate() {
                if let Link::To(b) = l {
                    out.push((a, k + 1, *b));
                }
            }
        }
        out
    }

    /// Nodes with every `ε_i ≤ 0`.
    pub fn highest(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| self.nodes[a].eps.iter().all(|&s| s <= Stat::Int(0)))
            .collect()
    }

    /// Drops the `f_i` edge out of `src` (the matching `e_i` link is kept).
    pub fn remove_f_edge(&mut self, src: usize, i: usize) {
        self.nodes[src].f[i - 1] = Link::Null;
    }

    /// Reverses edges, swaps `ε` and `φ` and negates weights.
    pub fn dualize(&self) -> CrystalGraph {
        let nodes = self
            .nodes
            .iter()
            .map(|n| Node {
                label: n.label.clone(),
                wt: -&n.wt,
                eps: n.phi.clone(),
                phi: n.eps.clone(),
                f: n.e.clone(),
                e: n.f.clone(),
                depth: n.depth,
                expanded: n.expanded,
            })
            .collect();
        CrystalGraph {
            nodes,
            ..self.clone()
        }
    }

    /// Abstract crystal axioms (1)-(5).
    pub fn check_axioms(&self) -> AxiomReport {
        let mut r = AxiomReport::default();
        for (a, node) in self.nodes.iter().enumerate() {
            for i in 1..=self.rank {
                r.checked += 1;
                let (eps, phi) = (node.eps[i - 1], node.phi[i - 1]);
                let pair = node.wt.pair_simple(i);
                match (eps, phi) {
                    (Stat::Int(x), Stat::Int(y)) => {
                        if !pair.is_integer() || y != x + pair.to_integer() {
                            r.fail(a, i, "(1)", format!("φ={y} ε={x} <wt,α∨>={pair}"));
                        }
                    }
                    (Stat::NegInf, Stat::NegInf) => {}
                    _ => r.fail(a, i, "(1)", format!("φ={phi} ε={eps}")),
                }
                if phi == Stat::NegInf
                    && (!matches!(node.e[i - 1], Link::Null | Link::Unknown)
                        || !matches!(node.f[i - 1], Link::Null | Link::Unknown))
                {
                    r.fail(a, i, "(5)", "φ = -∞ but an operator is defined".into());
                }
                let alpha = &self.simple_roots[i - 1];
                if let Link::To(b) = node.e[i - 1] {
                    let t = &self.nodes[b];
                    if t.eps[i - 1] != eps.shift(-1) || t.phi[i - 1] != phi.shift(1) {
                        r.fail(a, i, "(2)", format!("statistics along e_i to node {b}"));
                    }
                    if t.wt != &node.wt + alpha {
                        r.fail(a, i, "(2)", format!("weight along e_i to node {b}"));
                    }
                    if !matches!(t.f[i - 1], Link::To(x) if x == a) && t.f[i - 1] != Link::Unknown {
                        r.fail(a, i, "(4)", format!("e_i to {b} but f_i of {b} is not {a}"));
                    }
                }
                if let Link::To(b) = node.f[i - 1] {
                    let t = &self.nodes[b];
                    if t.eps[i - 1] != eps.shift(1) || t.phi[i - 1] != phi.shift(-1) {
                        r.fail(a, i, "(3)", format!("statistics along f_i to node {b}"));
                    }
                    if t.wt != &node.wt - alpha {
                        r.fail(a, i, "(3)", format!("weight along f_i to node {b}"));
                    }
                    if !matches!(t.e[i - 1], Link::To(x) if x == a) && t.e[i - 1] != Link::Unknown {
                        r.fail(a, i, "(4)", format!("f_i to {b} but e_i of {b} is not {a}"));
                    }
                }
            }
        }
        r
    }

    /// Upper regularity (`ε_i` is the length of the `e_i`-string) and/or
    /// lower regularity. Strings leaving the graph are skipped.
    pub fn check_regular(&self, upper: bool, lower: bool) -> AxiomReport {
        let mut r = AxiomReport::default();
        for (a, node) in self.nodes.iter().enumerate() {
            for i in 1..=self.rank {
                for (on, up) in [(upper, true), (lower, false)] {
                    if !on {
                        continue;
                    }
                    let Some(len) = self.string_length(a, i, up) else {
                        continue;
                    };
                    r.checked += 1;
                    let stat = if up { node.eps[i - 1] } else { node.phi[i - 1] };
                    if stat != Stat::Int(len) {
                        let name = if up { "upper-regular" } else { "lower-regular" };
                        r.fail(a, i, name, format!("statistic {stat}, string length {len}"));
                    }
                }
            }
        }
        r
    }

    fn string_length(&self, a: usize, i: usize, up: bool) -> Option<i64> {
        let mut cur = a;
        let mut n = 0;
        loop {
            let l = if up {
                self.nodes[cur].e[i - 1]
            } else {
                self.nodes[cur].f[i - 1]
            };
            match l {
                Link::Null => return Some(n),
                Link::To(b) => {
                    cur = b;
                    n += 1;
                    if n as usize > self.len() {
                        return None;
                    }
                }
                _ => return None,
            }
        }
    }

    fn step(&self, a: Option<usize>, i: usize, up: bool) -> Step {
        let Some(a) = a else {
            return Step::Null;
        };
        let l = if up {
            self.nodes[a].e[i - 1]
        } else {
            self.nodes[a].f[i - 1]
        };
        match l {
            Link::To(b) => Step::At(b),
            Link::Null => Step::Null,
            _ => Step::Unknown,
        }
    }

    fn walk(&self, a: usize, word: &[usize], up: bool) -> Step {
        let mut cur = Step::At(a);
        // operators are applied right to left
        for &i in word.iter().rev() {
            cur = match cur {
                Step::At(x) => self.step(Some(x), i, up),
                other => return other,
            };
        }
        cur
    }

    /// Stembridge's local axioms for simply-laced types, in both the `e`
    /// and the `f` form. Checks touching unenumerated nodes are skipped.
    pub fn check_stembridge(&self) -> Result<AxiomReport> {
        let n = self.rank;
        if (0..n).any(|i| (0..n).any(|j| self.cartan[i][j] != self.cartan[j][i])) {
            return Err(Error::Unsupported("Stembridge axioms need a simply-laced type"));
        }
        let mut r = AxiomReport::default();
        let stat = |x: usize, i: usize, eps: bool| {
            let v = if eps {
                self.nodes[x].eps[i - 1]
            } else {
                self.nodes[x].phi[i - 1]
            };
            v.finite()
        };
        for a in 0..self.len() {
            for up in [true, false] {
                // In the f form, the roles of (e, ε) and (f, φ) are exchanged.
                let (grow, shrink) = (!up, up);
                for i in 1..=n {
                    let Step::At(y) = self.step(Some(a), i, up) else {
                        continue;
                    };
                    for j in 1..=n {
                        if i == j {
                            continue;
                        }
                        let (Some(d0), Some(d1), Some(p0), Some(p1)) =
                            (stat(a, j, shrink), stat(y, j, shrink), stat(a, j, grow), stat(y, j, grow))
                        else {
                            continue;
                        };
                        r.checked += 1;
                        // Δ_i δ_j and Δ_i φ_j, with δ = -ε (e form) or -φ (f form)
                        let dd = d0 - d1;
                        let dp = p1 - p0;
                        let aij = self.cartan[i - 1][j - 1];
                        if dd + dp != aij {
                            r.fail(a, i, "P2", format!("j={j}: {dd} + {dp} != {aij}"));
                        }
                        if dd > 0 || dp > 0 {
                            r.fail(a, i, "P3", format!("j={j}: Δδ={dd} Δφ={dp}"));
                        }
                    }
                }
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        let (Step::At(x), Step::At(z)) = (self.step(Some(a), i, up), self.step(Some(a), j, up)) else {
                            continue;
                        };
                        let dij = stat(a, j, shrink).zip(stat(x, j, shrink)).map(|(p, q)| p - q);
                        let dji = stat(a, i, shrink).zip(stat(z, i, shrink)).map(|(p, q)| p - q);
                        if dij == Some(0) {
                            let l = self.walk(a, &[i, j], up);
                            let rr = self.walk(a, &[j, i], up);
                            if l.known() && rr.known() {
                                r.checked += 1;
                                if l != rr || l == Step::Null {
                                    r.fail(a, i, if up { "P4" } else { "P4'" }, format!("j={j}: {l:?} vs {rr:?}"));
                                }
                            }
                        } else if dij == Some(-1) && dji == Some(-1) {
                            let l = self.walk(a, &[i, j, j, i], up);
                            let rr = self.walk(a, &[j, i, i, j], up);
                            if l.known() && rr.known() {
                                r.checked += 1;
                                if l != rr || l == Step::Null {
                                    r.fail(a, i, if up { "P5" } else { "P5'" }, format!("j={j}: {l:?} vs {rr:?}"));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(r)
    }

    /// BFS numbering from the unique highest node, visiting `f_1, …, f_n`
    /// then `e_1, …, e_n`, plus the per-node signature in that order.
    fn canonical(&self) -> Result<(Vec<usize>, Vec<String>)> {
        let hi = self.highest();
        if hi.len() != 1 {
            return Err(Error::HighestNodes(hi.len()));
        }
        let mut order = vec![hi[0]];
        let mut num = vec![usize::MAX; self.len()];
        num[hi[0]] = 0;
        let mut k = 0;
        while k < order.len() {
            let node = &self.nodes[order[k]];
            for l in node.f.iter().chain(&node.e) {
                if let Link::To(b) = *l {
                    if num[b] == usize::MAX {
                        num[b] = order.len();
                        order.push(b);
                    }
                }
            }
            k += 1;
        }
        if order.len() != self.len() {
            return Err(Error::Unsupported("disconnected crystal graph"));
        }
        let show = |l: &Link| match l {
            Link::To(b) => num[*b].to_string(),
            Link::Null => "0".into(),
            Link::Outside => "?".into(),
            Link::Unknown => "_".into(),
        };
        let sig = order
            .iter()
            .map(|&a| {
                let n = &self.nodes[a];
                let f: Vec<String> = n.f.iter().map(show).collect();
                let e: Vec<String> = n.e.iter().map(show).collect();
                format!("{}|{:?}|{:?}|f{}|e{}", n.wt, n.eps, n.phi, f.join(","), e.join(","))
            })
            .collect();
        Ok((order, sig))
    }

    /// Decides isomorphism by comparing canonical forms; returns the node map.
    pub fn is_isomorphic(&self, other: &CrystalGraph) -> Result<Option<Vec<usize>>> {
        if self.len() != other.len() || self.rank != other.rank {
            return Ok(None);
        }
        let (o1, s1) = self.canonical()?;
        let (o2, s2) = other.canonical()?;
        if s1 != s2 {
            return Ok(None);
        }
        let mut map = vec![0; self.len()];
        for (a, b) in o1.into_iter().zip(o2) {
            map[a] = b;
        }
        Ok(Some(map))
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n  node [shape=box];\n");
        for (a, n) in self.nodes.iter().enumerate() {
            s += &format!("  {a} [label=\"{}\"];\n", n.label.replace('"', "\\\""));
        }
        for (a, i, b) in self.edges() {
            s += &format!("  {a} -> {b} [label=\"{i}\"];\n");
        }
        s += "}\n";
        s
    }

    /// `{nodes: [{id, label, wt, eps, phi}], edges: [{src, i, dst}]}`.
    /// Weights are rational strings; `-∞` is `null`.
    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(a, n)| {
                json!({
                    "id": a,
                    "label": n.label,
                    "wt": n.wt.0.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "eps": n.eps.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                    "phi": n.phi.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let edges: Vec<Value> = self
            .edges()
            .into_iter()
            .map(|(a, i, b)| json!({"src": a, "i": i, "dst": b}))
            .collect();
        json!({"nodes": nodes, "edges": edges})
    }

    /// Reads the JSON schema back; `e` links are the reversed `f` edges.
    pub fn from_json(rs: &RootSystem, v: &Value) -> Result<CrystalGraph> {
        let bad = |m: &str| Error::Parse(format!("crystal graph JSON: {m}"));
        let n = rs.rank();
        let raw = v["nodes"].as_array().ok_or_else(|| bad("missing nodes"))?;
        let stats = |x: &Value| -> Result<Vec<Stat>> {
            x.as_array()
                .ok_or_else(|| bad("statistics"))?
                .iter()
                .map(|s| match s {
                    Value::Null => Ok(Stat::NegInf),
                    s => s.as_i64().map(Stat::Int).ok_or_else(|| bad("statistic")),
                })
                .collect()
        };
        let mut nodes = Vec::with_capacity(raw.len());
        for (k, x) in raw.iter().enumerate() {
            if x["id"].as_u64() != Some(k as u64) {
                return Err(bad("ids must be 0, 1, 2, …"));
            }
            let wt = x["wt"]
                .as_array()
                .ok_or_else(|| bad("wt"))?
                .iter()
                .map(|c| parse_q(c.as_str().unwrap_or("")))
                .collect::<Result<Vec<_>>>()?;
            nodes.push(Node {
                label: x["label"].as_str().unwrap_or("").to_string(),
                wt: Weight(wt),
                eps: stats(&x["eps"])?,
                phi: stats(&x["phi"])?,
                f: vec![Link::Null; n],
                e: vec![Link::Null; n],
                depth: 0,
                expanded: true,
            });
        }
        for ed in v["edges"].as_array().ok_or_else(|| bad("missing edges"))? {
            let (a, i, b) = (
                ed["src"].as_u64().ok_or_else(|| bad("src"))? as usize,
                ed["i"].as_u64().ok_or_else(|| bad("i"))? as usize,
                ed["dst"].as_u64().ok_or_else(|| bad("dst"))? as usize,
            );
            if a >= nodes.len() || b >= nodes.len() || i == 0 || i > n {
                return Err(bad("edge out of range"));
            }
            nodes[a].f[i - 1] = Link::To(b);
            nodes[b].e[i - 1] = Link::To(a);
        }
        Ok(CrystalGraph {
            rank: n,
            cartan: rs.datum().matrix().to_vec(),
            simple_roots: (1..=n).map(|i| rs.simple_root_weight(i).clone()).collect(),
            nodes,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    At(usize),
    Null,
    Unknown,
}

impl Step {
    fn known(self) -> bool {
        self != Step::Unknown
    }
}

/// `∏ <λ+ρ, β∨> / <ρ, β∨>` over positive roots.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<u128> {
    crate::chains::check_dominant(rs, lambda)?;
    let rho = Weight::rho(rs.rank());
    let shifted = lambda + &rho;
    let mut acc = BigRational::one();
    for b in 0..rs.num_positive() {
        let co = rs.coroot(b);
        let num = shifted.pair(co).to_integer();
        let den = rho.pair(co).to_integer();
        acc *= BigRational::new(BigInt::from(num), BigInt::from(den));
    }
    debug_assert!(acc.is_integer());
    acc.to_integer()
        .to_u128()
        .ok_or(Error::Unsupported("dimension exceeds u128"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::{AlcoveCrystal, AlcoveElement};
    use std::sync::Arc;

    fn rs(t: &str) -> Arc<RootSystem> {
        Arc::new(RootSystem::from_type(t).unwrap())
    }

    #[test]
    fn dimensions() {
        let a2 = rs("A2");
        assert_eq!(weyl_dimension(&a2, &Weight::rho(2)).unwrap(), 8);
        let a3 = rs("A3");
        assert_eq!(weyl_dimension(&a3, &Weight::from_ints(&[2, 0, 0])).unwrap(), 10);
        let g2 = rs("G2");
        assert_eq!(weyl_dimension(&g2, &Weight::zero(2)).unwrap(), 1);
        assert_eq!(weyl_dimension(&g2, &Weight::from_ints(&[1, 0])).unwrap(), 7);
        assert_eq!(weyl_dimension(&g2, &Weight::from_ints(&[0, 1])).unwrap(), 14);
        let b2 = rs("B2");
        // the long simple root comes first: Λ1 is the vector representation
        assert_eq!(weyl_dimension(&b2, &Weight::from_ints(&[1, 0])).unwrap(), 5);
        assert_eq!(weyl_dimension(&b2, &Weight::from_ints(&[0, 1])).unwrap(), 4);
    }

    #[test]
    fn stat_order() {
        assert!(Stat::NegInf < Stat::Int(-100));
        assert_eq!(Stat::NegInf.shift(3), Stat::NegInf);
        assert_eq!(Stat::NegInf.max(Stat::Int(2)), Stat::Int(2));
    }

    #[test]
    fn al_rho_graph() {
        let a2 = rs("A2");
        let c = AlcoveCrystal::highest_weight(&a2, &Weight::rho(2)).unwrap();
        let en = enumerate(&c, &[AlcoveElement::empty()], Direction::Down, None).unwrap();
        assert_eq!(en.len(), 8);
        let g = &en.graph;
        assert!(g.check_axioms().is_clean());
        assert!(g.check_regular(true, true).is_clean());
        assert!(g.check_stembridge().unwrap().is_clean());
        assert!(g.is_isomorphic(g).unwrap().is_some());
        let dd = g.dualize().dualize();
        assert_eq!(&dd, g);
        let mut broken = g.clone();
        let (a, i, _) = g.edges()[0];
        broken.remove_f_edge(a, i);
        assert!(broken.check_axioms().violations.iter().any(|v| v.axiom == "(4)"));
        assert_eq!(g.dualize().highest().len(), 1);
    }

    #[test]
    fn unbounded_infinite_is_an_error() {
        let a2 = rs("A2");
        let inf = AlcoveCrystal::infinity(&a2);
        assert_eq!(
            enumerate(&inf, &[AlcoveElement::empty()], Direction::Down, None).unwrap_err(),
            Error::Unbounded
        );
    }

    #[test]
    fn t_shift_keeps_graph() {
        let a2 = rs("A2");
        let c = AlcoveCrystal::highest_weight(&a2, &Weight::rho(2)).unwrap();
        let t = TCrystal::new(&a2, -&Weight::rho(2));
        let tc = Tensor::new(t, &c);
        let g = enumerate(&tc, &[((), AlcoveElement::empty())], Direction::Down, None).unwrap();
        let plain = enumerate(&c, &[AlcoveElement::empty()], Direction::Down, None).unwrap();
        assert_eq!(g.graph.edges(), plain.graph.edges());
        for (x, y) in g.graph.nodes.iter().zip(&plain.graph.nodes) {
            assert_eq!(x.wt, &y.wt - &Weight::rho(2));
            assert_eq!(x.eps, y.eps);
        }
        assert!(g.graph.check_axioms().is_clean());
    }

    #[test]
    fn tensor_decomposition() {
        let a2 = rs("A2");
        let c = AlcoveCrystal::highest_weight(&a2, &Weight::from_ints(&[1, 0])).unwrap();
        let all = enumerate(&c, &[AlcoveElement::empty()], Direction::Down, None).unwrap();
        let tc = Tensor::new(&c, &c);
        let gens: Vec<_> = all
            .elements
            .iter()
            .flat_map(|x| all.elements.iter().map(move |y| (x.clone(), y.clone())))
            .collect();
        let g = enumerate(&tc, &gens, Direction::Down, None).unwrap();
        assert_eq!(g.len(), 9);
        assert!(g.graph.check_axioms().is_clean());
        let mut hw: Vec<Weight> = g.graph.highest().iter().map(|&a| g.graph.nodes[a].wt.clone()).collect();
        hw.sort();
        assert_eq!(hw, vec![Weight::from_ints(&[0, 1]), Weight::from_ints(&[2, 0])]);
    }

    #[test]
    fn json_round_trip() {
        let a3 = rs("A3");
        let c = AlcoveCrystal::highest_weight(&a3, &Weight::from_ints(&[0, 1, 0])).unwrap();
        let g = enumerate(&c, &[AlcoveElement::empty()], Direction::Down, None).unwrap().graph;
        let back = CrystalGraph::from_json(&a3, &g.to_json()).unwrap();
        assert_eq!(back.to_json(), g.to_json());
        assert!(back.is_isomorphic(&g).unwrap().is_some());
        assert!(g.to_dot().starts_with("digraph"));
    }
}
