//! The maps `ϖ_λ`, `ϖ∨_λ`, `ϖ_∞` and `ϖ∨_∞` from alcove elements to
//! Littelmann paths, and a harness checking dual crystal isomorphisms.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::alcove::{AlcoveCrystal, AlcoveElement, Model};
use crate::crystalgraph::Crystal;
use crate::error::{Error, Result};
use crate::littelmann::{PLPath, PathKind, Segment};
use crate::rootsys::{q, WeylElement, Q};

/// `ϖ_λ: Al(λ) → Π(-λ)`. A folding at `(ζ, ℓ)` becomes a direction change
/// at time `ℓ / <λ, ζ∨>`; between changes the velocity is `-R_1⋯R_n(λ)`.
pub fn varpi(c: &AlcoveCrystal, j: &AlcoveElement) -> Result<PLPath> {
    if c.model() != Model::PrimalFinite {
        return Err(Error::Unsupported("varpi needs a primal finite alcove crystal"));
    }
    let rs = c.root_system();
    let lambda = c.lambda();
    let mut w = WeylElement::identity(rs.rank());
    let mut changes: Vec<(Q, WeylElement)> = Vec::new();
    for e in c.positions(j) {
        let t = Q::new(e.level, lambda.pair(rs.coroot(e.root)).to_integer());
        w = w.compose(rs.reflection(e.root));
        match changes.last_mut() {
            Some((s, last)) if *s == t => *last = w.clone(),
            _ => changes.push((t, w.clone())),
        }
    }
    if changes.first().is_none_or(|(t, _)| *t != q(0)) {
        changes.insert(0, (q(0), WeylElement::identity(rs.rank())));
    }
    let mut segments = Vec::with_capacity(changes.len());
    for (d, (t, w)) in changes.iter().enumerate() {
        let next = changes.get(d + 1).map_or(q(1), |x| x.0);
        segments.push(Segment {
            velocity: -&rs.act(w, &lambda),
            duration: next - t,
        });
    }
    PLPath::new(PathKind::Finite, rs.rank(), segments)
}

/// `ϖ∨_λ: Al∨(λ) → Π(λ)`, the dual of `ϖ_λ` on the mirrored element.
pub fn varpi_dual(c: &AlcoveCrystal, j: &AlcoveElement) -> Result<PLPath> {
    if c.model() != Model::DualFinite {
        return Err(Error::Unsupported("varpi_dual needs a dual finite alcove crystal"));
    }
    Ok(varpi(&c.mirror_crystal(), &c.mirror(j))?.dualize())
}

/// `ϖ_∞: Al(∞) → Π∨(∞)` through the projection with the smallest `k`.
pub fn varpi_infinity(c: &AlcoveCrystal, j: &AlcoveElement) -> Result<PLPath> {
    let (k, _, _) = c.minimal_projection(j)?;
    varpi_infinity_at(c, j, k)?.ok_or(Error::NotAdmissible)
}

/// `ξ_∞ ∗ ϖ_{kρ}(S_{kρ}(J))`, with the finite part run at speed `1/k` so
/// that the result does not depend on `k`. `None` if `J` does not project.
pub fn varpi_infinity_at(c: &AlcoveCrystal, j: &AlcoveElement, k: usize) -> Result<Option<PLPath>> {
    if c.model() != Model::PrimalInfinite {
        return Err(Error::Unsupported("varpi_infinity needs Al(∞)"));
    }
    let n = c.rank();
    if j.is_empty() {
        return Ok(Some(PLPath::xi_infinity(n)));
    }
    let target = c.projection_target(k)?;
    let Some(p) = c.project(&target, j, k) else {
        return Ok(None);
    };
    let fin = varpi(&target, &p)?;
    PLPath::new(PathKind::CoExtended, n, fin.rescale(q(k as i64))).map(Some)
}

/// `ϖ∨_∞: Al∨(∞) → Π(∞)`, `J ↦ ϖ∨_{kρ}(S_{kρ}(J)) ∗ π_∞`.
pub fn varpi_dual_infinity(c: &AlcoveCrystal, j: &AlcoveElement) -> Result<PLPath> {
    let (k, _, _) = c.minimal_projection(j)?;
    varpi_dual_infinity_at(c, j, k)?.ok_or(Error::NotAdmissible)
}

pub fn varpi_dual_infinity_at(c: &AlcoveCrystal, j: &AlcoveElement, k: usize) -> Result<Option<PLPath>> {
    if c.model() != Model::DualInfinite {
        return Err(Error::Unsupported("varpi_dual_infinity needs Al∨(∞)"));
    }
    let n = c.rank();
    if j.is_empty() {
        return Ok(Some(PLPath::pi_infinity(n)));
    }
    let target = c.projection_target(k)?;
    let Some(p) = c.project(&target, j, k) else {
        return Ok(None);
    };
    let fin = varpi_dual(&target, &p)?;
    PLPath::new(PathKind::Extended, n, fin.rescale(q(k as i64))).map(Some)
}

/// The map matching the model: `ϖ`, `ϖ∨`, `ϖ_∞` or `ϖ∨_∞`.
pub fn path_image(c: &AlcoveCrystal, j: &AlcoveElement) -> Result<PLPath> {
    match c.model() {
        Model::PrimalFinite => varpi(c, j),
        Model::DualFinite => varpi_dual(c, j),
        Model::PrimalInfinite => varpi_infinity(c, j),
        Model::DualInfinite => varpi_dual_infinity(c, j),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub element: String,
    pub property: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DualIsoReport {
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl DualIsoReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: DualIsoReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    fn check(&mut self, ok: bool, element: &str, property: String) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure {
                element: element.to_string(),
                property,
            });
        }
    }
}

impl fmt::Display for DualIsoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} checks, {} failures", self.checked, self.failures.len())?;
        for x in &self.failures {
            write!(f, "\n  {}: {}", x.element, x.property)?;
        }
        Ok(())
    }
}

/// Checks `f(Ψb) = Ψ(e b)`, `e(Ψb) = Ψ(f b)`, `ε(Ψb) = φ(b)`,
/// `φ(Ψb) = ε(b)` and `wt(Ψb) = -wt(b)` on every listed element, and that
/// `Ψ` is injective on them. A map that fails to evaluate is a failure.
pub fn verify_dual_iso<S, T, F>(src: &S, elements: &[S::Elem], map: F, tgt: &T) -> DualIsoReport
where
    S: Crystal,
    T: Crystal,
    F: Fn(&S::Elem) -> Result<T::Elem>,
{
    let mut r = DualIsoReport::default();
    let mut seen = HashSet::new();
    for b in elements {
        let name = src.label(b);
        let img = match map(b) {
            Ok(x) => x,
            Err(e) => {
                r.check(false, &name, format!("map: {e}"));
                continue;
            }
        };
        r.check(seen.insert(img.clone()), &name, "injective".into());
        let mapped = |x: Option<S::Elem>| -> Option<Result<T::Elem>> { x.map(|y| map(&y)) };
        r.check(tgt.weight(&img) == -&src.weight(b), &name, "wt(Ψb) = -wt(b)".into());
        for i in 1..=src.rank() {
            let fe = mapped(src.e(b, i)).transpose();
            r.check(fe.as_ref().ok() == Some(&tgt.f(&img, i)), &name, format!("f_{i}(Ψb) = Ψ(e_{i} b)"));
            let ef = mapped(src.f(b, i)).transpose();
            r.check(ef.as_ref().ok() == Some(&tgt.e(&img, i)), &name, format!("e_{i}(Ψb) = Ψ(f_{i} b)"));
            r.check(tgt.epsilon(&img, i) == src.phi(b, i), &name, format!("ε_{i}(Ψb) = φ_{i}(b)"));
            r.check(tgt.phi(&img, i) == src.epsilon(b, i), &name, format!("φ_{i}(Ψb) = ε_{i}(b)"));
        }
    }
    r
}
