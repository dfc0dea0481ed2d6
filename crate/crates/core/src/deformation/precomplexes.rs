use crate::ainf::describe_key;
use crate::deformation::{deform_category, gauge_apply, Doubled, FirstOrderDeformation, GaugeIso};
use crate::error::{Error, Result};
use crate::graded::ArrowId;
use crate::hochschild::{Cochain, Key};
use crate::twisted::{build_pcom, ComplexWindow, Entry, MorphismMatrix, TwQuiver, TwistedObject};

/// Outcome of [`verify_precomplexes`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecomplexReport {
    pub objects: Vec<String>,
    /// First component where `μ̃` and `μ̄ + d(δ')ε` differ.
    pub mismatch: Option<String>,
    /// The gauge from `(PCom(a), embr_δ(φ))` to the lifted structure.
    pub gauge: std::result::Result<GaugeIso, String>,
}

impl PrecomplexReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none() && self.gauge.is_ok()
    }
}

fn relabel(c: &Cochain, f: impl Fn(ArrowId) -> ArrowId) -> Cochain {
    let mut out = Cochain::zero(c.hochschild_degree());
    for (k, v) in c.entries() {
        out.add_entry(Key::new(k.start, k.args.iter().map(|&a| f(a)).collect()), &v.map_arrows(&f));
    }
    out
}

/// Lifts each precomplex `(C, δ)` to `(C, δ + δ'ε)` over `a_φ[ε]` with the
/// `δ'` given by `gamma`, computes the structure `μ̃` of the lifted
/// precomplexes directly, and compares it with `μ̄ + d(δ')ε`, where
/// `μ̄ = embr_δ(m) + embr_δ(φ)ε` is built on the undeformed precomplexes.
pub fn verify_precomplexes(
    def: &FirstOrderDeformation,
    window: (i64, i64),
    objects: &[ComplexWindow],
    gamma: &[MorphismMatrix],
) -> Result<PrecomplexReport> {
    if gamma.len() != objects.len() {
        return Err(Error::DimensionMismatch { expected: objects.len(), found: gamma.len() });
    }
    let base = def.base();
    let pcom = build_pcom(base, window, objects)?;
    let tw = &pcom.tw;
    let q = tw.quiver();

    let mut h = Cochain::zero(1);
    for (o, g) in tw.twisted_objects().into_iter().zip(gamma) {
        h.add_entry(Key::new(o, Vec::new()), &tw.from_matrix(o, o, g)?);
    }
    h.validate(q)?;
    let phi_bar = tw.embr(def.cocycle())?;
    let dh = pcom.ambient.d(&h);

    // μ̄ + d(δ')ε on the doubled twisted quiver
    let d = Doubled::new(q);
    let mu_bar = d
        .extend(pcom.ambient.mu())
        .plus(&d.eps_times(&phi_bar.plus(&dh)?))?;

    // μ̃ on the twisted quiver of the deformed category
    let deformed = deform_category(def)?;
    let dd = &deformed.doubled;
    let lifted = objects
        .iter()
        .zip(gamma)
        .map(|(c, g)| {
            let t = c.to_twisted(base.quiver())?;
            let mut delta = t.delta.clone();
            for ((j, i), v) in g.entries() {
                delta.add(*j, *i, &dd.eps_comb(v));
            }
            Ok(TwistedObject::new(t.name, t.carrier, delta))
        })
        .collect::<Result<Vec<_>>>()?;
    let tw2 = TwQuiver::new(dd.quiver(), lifted)?;
    let mu_tilde = tw2.embr(deformed.category.mu())?;

    let to_tw2 = |a: ArrowId| -> ArrowId {
        let (t, eps) = d.split(a);
        let e = tw.entry(t);
        let b = if eps { dd.eps(e.base) } else { e.base };
        tw2.arrow_at(Entry { base: b, ..e }).expect("the two twisted quivers have the same entries")
    };
    let diff = mu_tilde.minus(&relabel(&mu_bar, to_tw2))?;
    let q2 = tw2.quiver();
    let mismatch = diff
        .entries()
        .next()
        .map(|(k, v)| format!("μ̃ - μ̄ - d(δ')ε is {} at {}", q2.format_lincomb(v), describe_key(q2, k)));

    let from = FirstOrderDeformation::new(pcom.ambient.clone(), phi_bar.clone())?;
    let to = FirstOrderDeformation::new(pcom.ambient.clone(), phi_bar.plus(&dh)?)?;
    let gauge = gauge_apply(&from, &to, &h).map_err(|e| e.to_string());
    Ok(PrecomplexReport { objects: objects.iter().map(|c| c.name.clone()).collect(), mismatch, gauge })
}

