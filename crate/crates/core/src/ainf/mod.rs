//! `A_[0,∞[`-structures: validation, restriction, the ∞-part and transport.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{GradedQuiver, LinComb, ObjId};
use crate::hochschild::{
    brace, is_brace_morphism, restrict_cochain, suspend, Cochain, CochainMap, Key, SampleConfig,
};

/// The declared shape of a structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Linear,
    Dg,
    Cdg,
    AInfinity,
    AZeroInfinity,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Linear => "linear",
            Kind::Dg => "dg",
            Kind::Cdg => "cdg",
            Kind::AInfinity => "a-infinity",
            Kind::AZeroInfinity => "a-zero-infinity",
        };
        f.write_str(s)
    }
}

impl Kind {
    /// Which arities may carry nonzero components.
    pub fn allows_arity(self, n: usize) -> bool {
        match self {
            Kind::Linear => n == 2,
            Kind::Dg => n == 1 || n == 2,
            Kind::Cdg => n <= 2,
            Kind::AInfinity => n >= 1,
            Kind::AZeroInfinity => true,
        }
    }

    /// The kind of the ∞-part.
    pub fn without_curvature(self) -> Kind {
        match self {
            Kind::Cdg => Kind::Dg,
            Kind::AZeroInfinity => Kind::AInfinity,
            k => k,
        }
    }
}

/// A quiver with a validated structure `μ ∈ C^2(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredCategory {
    quiver: GradedQuiver,
    mu: Cochain,
    kind: Kind,
}

/// Outcome of [`check_structure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub kind: Kind,
    pub kind_violation: Option<String>,
    /// First nonzero component of `b{b}`, if any.
    pub first_failure: Option<String>,
    /// The four cdg identities, reported individually for cdg-shaped structures.
    pub cdg: Option<CdgReport>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.kind_violation.is_none()
            && self.first_failure.is_none()
            && self.cdg.as_ref().is_none_or(CdgReport::passed)
    }
}

/// The identities `d(c) = 0`, `d² = -m(c⊗1 - 1⊗c)`, Leibniz and associativity,
/// each with the first failing input if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdgReport {
    pub dc: Option<String>,
    pub d_squared: Option<String>,
    pub leibniz: Option<String>,
    pub associativity: Option<String>,
}

impl CdgReport {
    pub fn passed(&self) -> bool {
        self.dc.is_none() && self.d_squared.is_none() && self.leibniz.is_none() && self.associativity.is_none()
    }
}

fn kind_violation(kind: Kind, mu: &Cochain) -> Option<String> {
    mu.arities()
        .into_iter()
        .find(|&n| !kind.allows_arity(n))
        .map(|n| format!("nonzero component of arity {n}"))
}

pub(crate) fn describe_key(q: &GradedQuiver, k: &Key) -> String {
    let args: Vec<&str> = k.args.iter().map(|&a| q.arrow(a).name.as_str()).collect();
    format!("arity {} at {} on ({})", k.arity(), q.object_name(k.start), args.join(", "))
}

/// Computes `b{b}` for `b = σμ` and the individual cdg identities.
pub fn check_structure(q: &GradedQuiver, mu: &Cochain, kind: Kind) -> StructureReport {
    let b = suspend(q, mu);
    let bb = brace(q, &b, &[&b]);
    let first_failure = bb
        .entries()
        .next()
        .map(|(k, v)| format!("b{{b}} is {} at {}", q.format_lincomb(v), describe_key(q, k)));
    let cdg = (mu.max_arity().unwrap_or(0) <= 2).then(|| cdg_identities(q, mu));
    StructureReport {
        kind,
        kind_violation: kind_violation(kind, mu),
        first_failure,
        cdg,
    }
}

fn single(q: &GradedQuiver, a: crate::graded::ArrowId) -> LinComb {
    LinComb::single(a, q.field().one())
}

/// Direct check of the four cdg identities with `μ = c + d + m`.
pub fn cdg_identities(q: &GradedQuiver, mu: &Cochain) -> CdgReport {
    let c = mu.arity_component(0);
    let d = mu.arity_component(1);
    let m = mu.arity_component(2);
    let curv = |o: ObjId| c.eval(o, &[]);
    let dd = |x: &LinComb| -> LinComb {
        let mut out = LinComb::new();
        for (a, coeff) in x.iter() {
            out.add_scaled(&d.eval(q.arrow(a).source, &[a]), coeff);
        }
        out
    };
    let mm = |f: &LinComb, g: &LinComb| crate::hochschild::compose(q, &m, f, g);

    let dc = q
        .objects()
        .find(|&o| !dd(&curv(o)).is_zero())
        .map(|o| format!("d(c) ≠ 0 at {}", q.object_name(o)));

    let mut d_squared = None;
    for (f, arr) in q.arrows() {
        let fl = single(q, f);
        // d²f = -(c_B f - f c_A)
        let lhs = dd(&dd(&fl));
        let mut rhs = mm(&curv(arr.target), &fl).negated();
        rhs.add(&mm(&fl, &curv(arr.source)));
        if d_squared.is_none() && lhs != rhs {
            d_squared = Some(format!("d² ≠ -m(c⊗1 - 1⊗c) on {}", arr.name));
        }
    }
    let mut leibniz = None;
    for (_, args) in q.composable_tuples(2) {
        let (f, g) = (single(q, args[0]), single(q, args[1]));
        let lhs = dd(&mm(&f, &g));
        let mut rhs = mm(&dd(&f), &g);
        let s = crate::graded::Sign::from_exponent(q.degree(args[0]));
        rhs.add_scaled(&mm(&f, &dd(&g)), &s.apply(q.field().one()));
        if leibniz.is_none() && lhs != rhs {
            leibniz = Some(format!(
                "Leibniz fails on ({}, {})",
                q.arrow(args[0]).name,
                q.arrow(args[1]).name
            ));
        }
    }
    let mut associativity = None;
    for (_, args) in q.composable_tuples(3) {
        let (f, g, h) = (single(q, args[0]), single(q, args[1]), single(q, args[2]));
        if mm(&mm(&f, &g), &h) != mm(&f, &mm(&g, &h)) {
            associativity = Some(format!(
                "associativity fails on ({}, {}, {})",
                q.arrow(args[0]).name,
                q.arrow(args[1]).name,
                q.arrow(args[2]).name
            ));
            break;
        }
    }
    CdgReport { dc, d_squared, leibniz, associativity }
}

impl StructuredCategory {
    /// Validates degree, kind and `b{b} = 0`.
    pub fn new(quiver: GradedQuiver, mu: Cochain, kind: Kind) -> Result<Self> {
        if !mu.is_zero() && mu.hochschild_degree() != 2 {
            return Err(Error::Degree(format!(
                "a structure has Hochschild degree 2, found {}",
                mu.hochschild_degree()
            )));
        }
        let mu = if mu.is_zero() { Cochain::zero(2) } else { mu };
        mu.validate(&quiver)?;
        let report = check_structure(&quiver, &mu, kind);
        if let Some(detail) = report.kind_violation {
            return Err(Error::KindViolation { kind: kind.to_string(), detail });
        }
        if let Some(f) = report.first_failure {
            return Err(Error::InvalidStructure(f));
        }
        Ok(StructuredCategory { quiver, mu, kind })
    }

    /// For structures valid by construction, such as restrictions and
    /// images under brace morphisms: only the kind is checked.
    pub(crate) fn derived(quiver: GradedQuiver, mu: Cochain, kind: Kind) -> Result<Self> {
        if let Some(detail) = kind_violation(kind, &mu) {
            return Err(Error::KindViolation { kind: kind.to_string(), detail });
        }
        let mu = if mu.is_zero() { Cochain::zero(2) } else { mu };
        Ok(StructuredCategory { quiver, mu, kind })
    }

    pub fn quiver(&self) -> &GradedQuiver {
        &self.quiver
    }

    pub fn mu(&self) -> &Cochain {
        &self.mu
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn curvature(&self) -> Cochain {
        self.mu.arity_component(0)
    }

    pub fn differential(&self) -> Cochain {
        self.mu.arity_component(1)
    }

    pub fn composition(&self) -> Cochain {
        self.mu.arity_component(2)
    }

    pub fn report(&self) -> StructureReport {
        check_structure(&self.quiver, &self.mu, self.kind)
    }

    /// The Hochschild differential of this structure.
    pub fn d(&self, phi: &Cochain) -> Cochain {
        crate::hochschild::hochschild_differential(&self.quiver, &self.mu, phi)
    }

    /// A basis arrow acting as a strict two-sided unit on `o`, if there is one.
    pub fn unit(&self, o: ObjId) -> Option<crate::graded::ArrowId> {
        let q = &self.quiver;
        q.hom_of_degree(o, o, 0).into_iter().find(|&u| {
            let ul = single(q, u);
            q.arrows().all(|(a, arr)| {
                let f = single(q, a);
                (arr.source != o || self.compose(&f, &ul) == f) && (arr.target != o || self.compose(&ul, &f) == f)
            })
        })
    }

    /// `m(f, g)`.
    pub fn compose(&self, f: &LinComb, g: &LinComb) -> LinComb {
        crate::hochschild::compose(&self.quiver, &self.mu.arity_component(2), f, g)
    }
}

/// The full subcategory on `objects` with the restricted structure.
pub fn restrict(cat: &StructuredCategory, objects: &[ObjId]) -> Result<StructuredCategory> {
    let (sub, map) = cat.quiver.full_subquiver(objects)?;
    let mu = restrict_cochain(&cat.quiver, &map, &cat.mu);
    StructuredCategory::derived(sub, mu, cat.kind)
}

/// Restriction by object names.
pub fn restrict_named(cat: &StructuredCategory, names: &[&str]) -> Result<StructuredCategory> {
    let ids = names
        .iter()
        .map(|n| cat.quiver.object_id(n))
        .collect::<Result<Vec<_>>>()?;
    restrict(cat, &ids)
}

/// The full subcategory of objects with vanishing curvature.
pub fn infinity_part(cat: &StructuredCategory) -> Result<StructuredCategory> {
    let c = cat.curvature();
    let keep: Vec<ObjId> = cat
        .quiver
        .objects()
        .filter(|&o| c.eval(o, &[]).is_zero())
        .collect();
    let r = restrict(cat, &keep)?;
    StructuredCategory::derived(r.quiver, r.mu, cat.kind.without_curvature())
}

/// `Ψ(μ)` for a map that passes the brace-morphism check, re-validated as a
/// structure of kind `kind` on the target quiver.
pub fn transport(map: &dyn CochainMap, cat: &StructuredCategory, kind: Kind, cfg: &SampleConfig) -> Result<StructuredCategory> {
    let report = is_brace_morphism(map, cfg)?;
    if let Some(c) = report.counterexample {
        return Err(Error::Inconsistent(format!("{} is not a brace morphism: {c}", map.name())));
    }
    let mu = map.apply(&cat.mu)?;
    StructuredCategory::new(map.target().clone(), mu, kind)
}

#[cfg(test)]
mod tests;
