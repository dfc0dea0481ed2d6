//! First-order deformations over `k[ε]/(ε²)`, gauges, Hochschild cohomology
//! and the obstruction theory of complexes.

mod cohomology;
mod doubled;
mod lab;
mod precomplexes;

pub use cohomology::{coboundary_preimage, com_differential, hochschild_cohomology, HochschildCohomology, HomotopyHom};
pub use doubled::Doubled;
pub use lab::{
    normalize_cochain, CentralityResult, ChainMap, CharacteristicValue, Lab, Locus, LocusEntry, Normalization,
    ObstructionReport,
    RankEvidence,
};
pub use precomplexes::{verify_precomplexes, PrecomplexReport};

use crate::ainf::{describe_key, Kind, StructuredCategory};
use crate::error::{Error, Result};
use crate::hochschild::{brace, suspend, Cochain, SuspendedCochain};

/// `(a, μ)` with a Hochschild 2-cocycle `φ`, standing for `(a[ε], μ + φε)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstOrderDeformation {
    base: StructuredCategory,
    cocycle: Cochain,
}

impl FirstOrderDeformation {
    /// Rejects `φ` unless `d(φ) = 0`.
    pub fn new(base: StructuredCategory, cocycle: Cochain) -> Result<Self> {
        if !cocycle.is_zero() && cocycle.hochschild_degree() != 2 {
            return Err(Error::Degree(format!(
                "a deformation cocycle has Hochschild degree 2, found {}",
                cocycle.hochschild_degree()
            )));
        }
        let cocycle = if cocycle.is_zero() { Cochain::zero(2) } else { cocycle };
        cocycle.validate(base.quiver())?;
        let dphi = base.d(&cocycle);
        if let Some((k, v)) = dphi.entries().next() {
            return Err(Error::NotCocycle(format!(
                "d(φ) is {} at {}",
                base.quiver().format_lincomb(v),
                describe_key(base.quiver(), k)
            )));
        }
        Ok(FirstOrderDeformation { base, cocycle })
    }

    pub fn trivial(base: StructuredCategory) -> Self {
        FirstOrderDeformation { base, cocycle: Cochain::zero(2) }
    }

    pub fn base(&self) -> &StructuredCategory {
        &self.base
    }

    pub fn cocycle(&self) -> &Cochain {
        &self.cocycle
    }

    /// The deformation along `λφ`.
    pub fn scaled(&self, lambda: &crate::exact::Scalar) -> Self {
        FirstOrderDeformation { base: self.base.clone(), cocycle: self.cocycle.scaled(lambda) }
    }
}

/// `(a[ε], μ + φε)` presented over `k` on the doubled quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deformed {
    pub doubled: Doubled,
    pub category: StructuredCategory,
}

impl Deformed {
    /// Reduction `k ⊗_{k[ε]} -`.
    pub fn reduce(&self) -> Result<StructuredCategory> {
        let mu = self.doubled.reduce(self.category.mu());
        StructuredCategory::new(self.doubled.base().clone(), mu, self.category.kind())
    }
}

fn deformed_mu(d: &Doubled, def: &FirstOrderDeformation) -> Cochain {
    d.extend(def.base.mu())
        .plus(&d.eps_times(&def.cocycle))
        .expect("both have Hochschild degree 2")
}

/// Builds `μ + φε` and validates it as a structure. The kind is that of the
/// base when `φ` fits it.
pub fn deform_category(def: &FirstOrderDeformation) -> Result<Deformed> {
    let doubled = Doubled::new(def.base.quiver());
    let mu = deformed_mu(&doubled, def);
    let base_kind = def.base.kind();
    let kind = if def.cocycle.arities().into_iter().all(|n| base_kind.allows_arity(n)) {
        base_kind
    } else {
        Kind::AZeroInfinity
    };
    let category = StructuredCategory::new(doubled.quiver().clone(), mu, kind)?;
    Ok(Deformed { doubled, category })
}

/// An isomorphism of deformations: the functor `1 + gε` on `a[ε]`, with no
/// higher components beyond those of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeIso {
    pub h: Cochain,
    /// The `ε` part `g` of the functor. With the differential used here a
    /// gauge `h` with `d(h) = φ' - φ` acts through `g = -h`.
    pub eps_part: Cochain,
}

/// `Σ_j x{y^{⊗j}}` for `j` up to the largest arity of `x`.
fn brace_powers(q: &crate::graded::GradedQuiver, x: &SuspendedCochain, y: &SuspendedCochain) -> Result<SuspendedCochain> {
    let mut out = SuspendedCochain::zero(x.degree() + y.degree());
    for j in 0..=x.max_arity().unwrap_or(0) {
        let ys = vec![y; j];
        out.add_assign(&brace(q, x, &ys))?;
    }
    Ok(out)
}

/// Succeeds iff `d(h) = φ' - φ`. On success the functor equation
/// `F{b} = Σ_j b'{G^{⊗j}}` with `F = 1 + G` is checked on the doubled quiver.
pub fn gauge_apply(def: &FirstOrderDeformation, def2: &FirstOrderDeformation, h: &Cochain) -> Result<GaugeIso> {
    if def.base != def2.base {
        return Err(Error::Inconsistent("gauge between deformations of different bases".into()));
    }
    let h = if h.is_zero() { Cochain::zero(1) } else { h.clone() };
    if h.hochschild_degree() != 1 {
        return Err(Error::Degree(format!("a gauge has Hochschild degree 1, found {}", h.hochschild_degree())));
    }
    h.validate(def.base.quiver())?;
    let q = def.base.quiver();
    let residual = def.base.d(&h).minus(&def2.cocycle)?.plus(&def.cocycle)?;
    if let Some((k, v)) = residual.entries().next() {
        return Err(Error::GaugeMismatch(format!("{} at {}", q.format_lincomb(v), describe_key(q, k))));
    }
    let d = Doubled::new(q);
    let dq = d.quiver();
    let b = suspend(dq, &deformed_mu(&d, def));
    let b2 = suspend(dq, &deformed_mu(&d, def2));
    let eps_part = h.negated();
    let g = suspend(dq, &d.eps_times(&eps_part));
    let f = suspend(dq, &Cochain::identity(dq)).plus(&g)?;
    let lhs = brace(dq, &f, &[&b]);
    let rhs = brace_powers(dq, &b2, &g)?;
    if let Some((k, v)) = lhs.minus(&rhs)?.entries().next() {
        return Err(Error::Inconsistent(format!(
            "1 + gε fails the functor equation: {} at {}",
            dq.format_lincomb(v),
            describe_key(dq, k)
        )));
    }
    Ok(GaugeIso { h, eps_part })
}
