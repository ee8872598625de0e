//! Piecewise-linear Littelmann paths with exact rational data: `Π(λ)`,
//! the extended paths of `Π(∞)` and the co-extended paths of `Π∨(∞)`.
//!
//! A path is stored as its explicit segments `(velocity, duration)`.
//! Extended paths start at `0` and continue with velocity `ρ` after the
//! explicit part. Co-extended paths live on `(-∞, 0]`; before the explicit
//! part they follow the ray `s ↦ -sρ`, so a path with explicit duration `D`
//! passes through `Dρ` at time `-D`. Under these conventions the operators
//! act by reflecting and translating velocities, and two paths are equal
//! exactly when their canonical segment lists agree.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::crystalgraph::{Crystal, Stat};
use crate::error::{Error, Result};
use crate::rootsys::{parse_q, q, RootSystem, Weight, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathKind {
    /// Domain `[0, 1]`.
    Finite,
    /// Domain `[0, ∞)` with a `ρ` tail.
    Extended,
    /// Domain `(-∞, 0]` with a ray towards `+∞ρ`.
    CoExtended,
}

impl PathKind {
    fn name(self) -> &'static str {
        match self {
            PathKind::Finite => "finite",
            PathKind::Extended => "extended",
            PathKind::CoExtended => "co-extended",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub velocity: Weight,
    pub duration: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PLPath {
    kind: PathKind,
    rank: usize,
    segments: Vec<Segment>,
}

impl PLPath {
    /// Builds and canonicalizes a path. Durations must be nonnegative and a
    /// finite path must have total duration 1.
    pub fn new(kind: PathKind, rank: usize, segments: Vec<Segment>) -> Result<Self> {
        for s in &segments {
            if s.velocity.rank() != rank {
                return Err(Error::Dimension {
                    expected: rank,
                    got: s.velocity.rank(),
                });
            }
            if s.duration < q(0) {
                return Err(Error::Parse(format!("negative duration {}", s.duration)));
            }
        }
        let p = PLPath {
            kind,
            rank,
            segments,
        };
        if kind == PathKind::Finite && p.duration() != q(1) {
            return Err(Error::Parse(format!("finite path has total duration {}", p.duration())));
        }
        Ok(p.canonical())
    }

    /// `π_λ(t) = tλ`.
    pub fn straight(lambda: &Weight) -> Self {
        PLPath {
            kind: PathKind::Finite,
            rank: lambda.rank(),
            segments: vec![Segment {
                velocity: lambda.clone(),
                duration: q(1),
            }],
        }
        .canonical()
    }

    /// `π_∞(t) = tρ`.
    pub fn pi_infinity(rank: usize) -> Self {
        PLPath {
            kind: PathKind::Extended,
            rank,
            segments: Vec::new(),
        }
    }

    /// The co-extended path with no explicit part, which ends at `0`.
    pub fn xi_infinity(rank: usize) -> Self {
        PLPath {
            kind: PathKind::CoExtended,
            rank,
            segments: Vec::new(),
        }
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Total duration of the explicit part.
    pub fn duration(&self) -> Q {
        self.segments.iter().map(|s| s.duration).sum()
    }

    fn displacement(&self) -> Weight {
        self.segments
            .iter()
            .fold(Weight::zero(self.rank), |acc, s| &acc + &(&s.velocity * s.duration))
    }

    /// Value at the start of the explicit part.
    pub fn start(&self) -> Weight {
        match self.kind {
            PathKind::CoExtended => &Weight::rho(self.rank) * self.duration(),
            _ => Weight::zero(self.rank),
        }
    }

    /// Value at the end of the explicit part (`π(1)`, `π(T)` or `ξ(0)`).
    pub fn end(&self) -> Weight {
        &self.start() + &self.displacement()
    }

    /// Times and values at the breakpoints of the explicit part. Times
    /// start at `0`, or at `-D` for co-extended paths.
    pub fn breakpoints(&self) -> Vec<(Q, Weight)> {
        let mut t = match self.kind {
            PathKind::CoExtended => -self.duration(),
            _ => q(0),
        };
        let mut v = self.start();
        let mut out = vec![(t, v.clone())];
        for s in &self.segments {
            t += s.duration;
            v = &v + &(&s.velocity * s.duration);
            out.push((t, v.clone()));
        }
        out
    }

    fn heights(&self, i: usize) -> Vec<Q> {
        let mut h = self.start().pair_simple(i);
        let mut out = vec![h];
        for s in &self.segments {
            h += s.velocity.pair_simple(i) * s.duration;
            out.push(h);
        }
        out
    }

    /// Minimum `m` of `H_i(t) = <π(t), α_i∨>` over the domain and the first
    /// time it is attained. Outside the explicit part `H_i` moves away from
    /// its minimum, so scanning the breakpoints suffices.
    pub fn h_min(&self, i: usize) -> (Q, Q) {
        let bp = self.breakpoints();
        let hs = self.heights(i);
        let m = *hs.iter().min().expect("at least one breakpoint");
        let k = hs.iter().position(|&h| h == m).unwrap();
        (m, bp[k].0)
    }

    fn min_int(&self, i: usize) -> i64 {
        let (m, _) = self.h_min(i);
        debug_assert!(m.is_integer(), "non-integral minimum {m} of H_{i}");
        m.floor().to_integer()
    }

    pub fn weight(&self) -> Weight {
        match self.kind {
            PathKind::Finite | PathKind::CoExtended => self.end(),
            PathKind::Extended => &self.end() - &(&Weight::rho(self.rank) * self.duration()),
        }
    }

    pub fn epsilon(&self, i: usize) -> i64 {
        -self.min_int(i)
    }

    pub fn phi(&self, i: usize) -> i64 {
        match self.kind {
            PathKind::Extended => self.epsilon(i) + self.weight().pair_simple(i).to_integer(),
            _ => self.end().pair_simple(i).to_integer() - self.min_int(i),
        }
    }

    pub fn f(&self, rs: &RootSystem, i: usize) -> Option<PLPath> {
        match self.kind {
            PathKind::Finite => self.lower(rs, i),
            PathKind::Extended => {
                // Make enough of the ρ tail explicit for H_i to reach m + 1.
                let (m, _) = self.h_min(i);
                let gap = m + q(1) - self.end().pair_simple(i);
                let mut p = self.clone();
                if gap > q(0) {
                    p.segments.push(Segment {
                        velocity: Weight::rho(self.rank),
                        duration: gap,
                    });
                }
                p.lower(rs, i)
            }
            PathKind::CoExtended => Some(self.dualize().e(rs, i)?.dualize()),
        }
    }

    pub fn e(&self, rs: &RootSystem, i: usize) -> Option<PLPath> {
        match self.kind {
            PathKind::Finite | PathKind::Extended => self.raise(rs, i),
            PathKind::CoExtended => Some(self.dualize().f(rs, i)?.dualize()),
        }
    }

    /// `f_i` on the explicit part, which starts at `H_i = 0`.
    fn lower(&self, rs: &RootSystem, i: usize) -> Option<PLPath> {
        let hs = self.heights(i);
        let bp = self.breakpoints();
        let m = *hs.iter().min().unwrap();
        let one = q(1);
        if *hs.last().unwrap() - m < one {
            return None;
        }
        let k0 = hs.iter().rposition(|&h| h == m).unwrap();
        let k1 = (k0..hs.len()).rev().find(|&k| hs[k] < m + one).unwrap();
        let slope = self.segments[k1].velocity.pair_simple(i);
        let t0 = bp[k0].0;
        let t1 = bp[k1].0 + (m + one - hs[k1]) / slope;
        Some(self.reflect_window(rs, i, t0, t1))
    }

    /// `e_i` on the explicit part.
    fn raise(&self, rs: &RootSystem, i: usize) -> Option<PLPath> {
        let hs = self.heights(i);
        let bp = self.breakpoints();
        let m = *hs.iter().min().unwrap();
        let one = q(1);
        if -m < one {
            return None;
        }
        let k1 = hs.iter().position(|&h| h == m).unwrap();
        let ka = hs.iter().position(|&h| h < m + one).unwrap();
        let slope = self.segments[ka - 1].velocity.pair_simple(i);
        let t0 = bp[ka - 1].0 + (m + one - hs[ka - 1]) / slope;
        let t1 = bp[k1].0;
        Some(self.reflect_window(rs, i, t0, t1))
    }

    /// Applies `s_i` to the velocities on `(a, b)`; later values are then
    /// translated automatically.
    fn reflect_window(&self, rs: &RootSystem, i: usize, a: Q, b: Q) -> PLPath {
        let mut out = Vec::new();
        let mut t = q(0);
        for s in &self.segments {
            let (lo, hi) = (t, t + s.duration);
            let cut = |x: Q| x.max(lo).min(hi);
            let (ca, cb) = (cut(a), cut(b));
            out.push(Segment {
                velocity: s.velocity.clone(),
                duration: ca - lo,
            });
            out.push(Segment {
                velocity: rs.simple_reflect(i, &s.velocity),
                duration: cb - ca,
            });
            out.push(Segment {
                velocity: s.velocity.clone(),
                duration: hi - cb,
            });
            t = hi;
        }
        PLPath {
            segments: out,
            ..self.clone()
        }
        .canonical()
    }

    fn canonical(mut self) -> PLPath {
        let mut out: Vec<Segment> = Vec::with_capacity(self.segments.len());
        for s in self.segments.drain(..) {
            if s.duration == q(0) {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.velocity == s.velocity => last.duration += s.duration,
                _ => out.push(s),
            }
        }
        let rho = Weight::rho(self.rank);
        match self.kind {
            PathKind::Extended => {
                while out.last().is_some_and(|s| s.velocity == rho) {
                    out.pop();
                }
            }
            PathKind::CoExtended => {
                let neg = -&rho;
                let skip = out.iter().take_while(|s| s.velocity == neg).count();
                out.drain(..skip);
            }
            PathKind::Finite => {}
        }
        self.segments = out;
        self
    }

    /// The contragredient dual: `π(1-t) - π(1)` for finite paths, and
    /// `ξ(-t) - ξ(0)` between co-extended and extended paths.
    pub fn dualize(&self) -> PLPath {
        let kind = match self.kind {
            PathKind::Finite => PathKind::Finite,
            PathKind::Extended => PathKind::CoExtended,
            PathKind::CoExtended => PathKind::Extended,
        };
        let segments = self
            .segments
            .iter()
            .rev()
            .map(|s| Segment {
                velocity: -&s.velocity,
                duration: s.duration,
            })
            .collect();
        PLPath {
            kind,
            rank: self.rank,
            segments,
        }
    }

    /// Stretches time by `c`, dividing velocities by `c`. The result is a
    /// path of the given kind; a stretched finite path is only meaningful
    /// as a piece of a concatenation.
    pub fn rescale(&self, c: Q) -> Vec<Segment> {
        self.segments
            .iter()
            .map(|s| Segment {
                velocity: &s.velocity * (q(1) / c),
                duration: s.duration * c,
            })
            .collect()
    }

    /// `π1 ∗ π2`. Two finite paths are run at double speed. A finite
    /// path may precede an extended one or follow a co-extended one; there
    /// the segments are joined as they are.
    pub fn concat(&self, other: &PLPath) -> Result<PLPath> {
        if self.rank != other.rank {
            return Err(Error::Dimension {
                expected: self.rank,
                got: other.rank,
            });
        }
        let (kind, segments) = match (self.kind, other.kind) {
            (PathKind::Finite, PathKind::Finite) => {
                let half = q(1) / q(2);
                let mut s = self.rescale(half);
                s.extend(other.rescale(half));
                (PathKind::Finite, s)
            }
            (PathKind::Finite, PathKind::Extended) | (PathKind::CoExtended, PathKind::Finite) => {
                let mut s = self.segments.clone();
                s.extend(other.segments.iter().cloned());
                (if self.kind == PathKind::Finite { PathKind::Extended } else { PathKind::CoExtended }, s)
            }
            _ => return Err(Error::PathKind),
        };
        Ok(PLPath {
            kind,
            rank: self.rank,
            segments,
        }
        .canonical())
    }

    /// `{kind, segments: [{direction, duration}]}` with rationals as strings.
    pub fn to_json(&self) -> Value {
        let segs: Vec<Value> = self
            .segments
            .iter()
            .map(|s| {
                json!({
                    "direction": s.velocity.0.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "duration": s.duration.to_string(),
                })
            })
            .collect();
        json!({"kind": self.kind, "segments": segs})
    }

    pub fn from_json(rank: usize, v: &Value) -> Result<PLPath> {
        let kind: PathKind =
            serde_json::from_value(v["kind"].clone()).map_err(|e| Error::Parse(format!("path kind: {e}")))?;
        let raw = v["segments"]
            .as_array()
            .ok_or_else(|| Error::Parse("path JSON: missing segments".into()))?;
        let str_q = |x: &Value| parse_q(x.as_str().unwrap_or(""));
        let mut segments = Vec::with_capacity(raw.len());
        for s in raw {
            let velocity = s["direction"]
                .as_array()
                .ok_or_else(|| Error::Parse("path JSON: direction".into()))?
                .iter()
                .map(str_q)
                .collect::<Result<Vec<_>>>()?;
            segments.push(Segment {
                velocity: Weight(velocity),
                duration: str_q(&s["duration"])?,
            });
        }
        PLPath::new(kind, rank, segments)
    }
}

impl fmt::Display for PLPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .segments
            .iter()
            .map(|s| format!("{}×{}", s.velocity, s.duration))
            .collect();
        match self.kind {
            PathKind::Finite => write!(f, "[{}]", body.join(", ")),
            PathKind::Extended if body.is_empty() => f.write_str("[ρ×∞]"),
            PathKind::Extended => write!(f, "[{}, ρ×∞]", body.join(", ")),
            PathKind::CoExtended if body.is_empty() => f.write_str("[-ρ×∞]"),
            PathKind::CoExtended => write!(f, "[-ρ×∞, {}]", body.join(", ")),
        }
    }
}

/// A crystal of paths of one kind: `Π(λ)` (the closure of a straight
/// path), `Π(∞)` or `Π∨(∞)`.
#[derive(Clone, Debug)]
pub struct PathCrystal {
    rs: Arc<RootSystem>,
    kind: PathKind,
    generator: PLPath,
}

impl PathCrystal {
    /// The crystal containing `π_λ`, for any integral `λ`.
    pub fn finite(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<Self> {
        if lambda.rank() != rs.rank() {
            return Err(Error::Dimension {
                expected: rs.rank(),
                got: lambda.rank(),
            });
        }
        if lambda.integer_coeffs().is_none() {
            return Err(Error::Unsupported("paths for non-integral weights"));
        }
        Ok(PathCrystal {
            rs: rs.clone(),
            kind: PathKind::Finite,
            generator: PLPath::straight(lambda),
        })
    }

    /// `Π(∞)`, generated by `π_∞`.
    pub fn infinity(rs: &Arc<RootSystem>) -> Self {
        PathCrystal {
            rs: rs.clone(),
            kind: PathKind::Extended,
            generator: PLPath::pi_infinity(rs.rank()),
        }
    }

    /// `Π∨(∞)`, generated by the bare ray.
    pub fn dual_infinity(rs: &Arc<RootSystem>) -> Self {
        PathCrystal {
            rs: rs.clone(),
            kind: PathKind::CoExtended,
            generator: PLPath::xi_infinity(rs.rank()),
        }
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn generator(&self) -> &PLPath {
        &self.generator
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.rs
    }
}

impl Crystal for PathCrystal {
    type Elem = PLPath;

    fn root_system(&self) -> &RootSystem {
        &self.rs
    }
    fn e(&self, b: &PLPath, i: usize) -> Option<PLPath> {
        b.e(&self.rs, i)
    }
    fn f(&self, b: &PLPath, i: usize) -> Option<PLPath> {
        b.f(&self.rs, i)
    }
    fn epsilon(&self, b: &PLPath, i: usize) -> Stat {
        b.epsilon(i).into()
    }
    fn phi(&self, b: &PLPath, i: usize) -> Stat {
        b.phi(i).into()
    }
    fn weight(&self, b: &PLPath) -> Weight {
        b.weight()
    }
    fn label(&self, b: &PLPath) -> String {
        b.to_string()
    }
    fn is_finite(&self) -> bool {
        self.kind == PathKind::Finite
    }
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystalgraph::{enumerate, weyl_dimension, Direction};

    fn a2() -> Arc<RootSystem> {
        Arc::new(RootSystem::from_type("A2").unwrap())
    }

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn straight_line_examples() {
        let rs = a2();
        let p = PLPath::straight(&w(&[1, 0]));
        assert_eq!(p.h_min(1), (q(0), q(0)));
        assert_eq!(p.e(&rs, 1), None);
        let f1 = p.f(&rs, 1).unwrap();
        assert_eq!(f1, PLPath::straight(&w(&[-1, 1])));
        assert_eq!(f1.h_min(1), (q(-1), q(1)));
        assert_eq!(f1.e(&rs, 1).unwrap(), p);
        assert_eq!(p.dualize(), PLPath::straight(&w(&[-1, 0])));
        assert_eq!(p.weight(), w(&[1, 0]));
    }

    #[test]
    fn infinity_first_step() {
        let rs = a2();
        let pi = PLPath::pi_infinity(2);
        assert_eq!(pi.h_min(2).0, q(0));
        let f1 = pi.f(&rs, 1).unwrap();
        // s_1 ρ for one unit of time, then the tail
        assert_eq!(
            f1.segments(),
            &[Segment {
                velocity: w(&[-1, 2]),
                duration: q(1)
            }]
        );
        assert_eq!(f1.weight(), w(&[-2, 1]));
        assert_eq!(f1.epsilon(1), 1);
        assert_eq!(f1.e(&rs, 1).unwrap(), pi);
        assert_eq!(pi.e(&rs, 1), None);
        assert_eq!(PLPath::xi_infinity(2).dualize(), pi);
        assert_eq!(PLPath::xi_infinity(2).weight(), Weight::zero(2));
    }

    #[test]
    fn closure_sizes() {
        let rs = a2();
        for c in [[1, 0], [0, 1], [1, 1], [2, 1], [0, 2]] {
            let lam = w(&c);
            let pc = PathCrystal::finite(&rs, &lam).unwrap();
            let en = enumerate(&pc, &[pc.generator().clone()], Direction::Down, None).unwrap();
            assert_eq!(en.len() as u128, weyl_dimension(&rs, &lam).unwrap(), "{lam}");
            assert!(en.graph.check_axioms().is_clean());
            assert!(en.graph.check_regular(true, true).is_clean());
        }
    }

    #[test]
    fn dual_intertwines() {
        let rs = a2();
        let pc = PathCrystal::finite(&rs, &w(&[1, 1])).unwrap();
        let en = enumerate(&pc, &[pc.generator().clone()], Direction::Down, None).unwrap();
        for p in &en.elements {
            assert_eq!(&p.dualize().dualize(), p);
            for i in 1..=2 {
                assert_eq!(p.f(&rs, i).map(|x| x.dualize()), p.dualize().e(&rs, i));
                assert_eq!(p.epsilon(i), p.dualize().phi(i));
            }
        }
    }

    #[test]
    fn co_extended_statistics_match_dual() {
        let rs = a2();
        let pc = PathCrystal::dual_infinity(&rs);
        let en = enumerate(&pc, &[pc.generator().clone()], Direction::Up, Some(4)).unwrap();
        assert!(en.len() > 10);
        for x in &en.elements {
            let d = x.dualize();
            assert_eq!(x.weight(), -&d.weight());
            for i in 1..=2 {
                assert_eq!(x.epsilon(i), d.phi(i));
                assert_eq!(x.phi(i), d.epsilon(i));
            }
        }
        assert!(en.graph.check_axioms().is_clean());
    }

    #[test]
    fn tensor_as_concatenation() {
        let rs = a2();
        let l1 = PLPath::straight(&w(&[1, 0]));
        let cat = l1.concat(&l1).unwrap();
        assert_eq!(cat, PLPath::straight(&w(&[2, 0])));
        let other = PLPath::straight(&w(&[0, 1]));
        assert_eq!(l1.concat(&other).unwrap().weight(), w(&[1, 1]));
        assert_eq!(PLPath::pi_infinity(2).concat(&l1), Err(Error::PathKind));
        let _ = rs;
    }

    #[test]
    fn json_round_trip() {
        let rs = a2();
        let p = PLPath::straight(&w(&[1, 1])).f(&rs, 1).unwrap().f(&rs, 2).unwrap();
        let back = PLPath::from_json(2, &p.to_json()).unwrap();
        assert_eq!(back, p);
        assert!(p.to_json()["segments"][0]["duration"].as_str().unwrap().contains('/'));
    }
}
