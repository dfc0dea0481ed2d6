use std::collections::BTreeMap;

use crate::ainf::{infinity_part, restrict, Kind, StructuredCategory};
use crate::error::{Error, Result};
use crate::graded::{GradedQuiver, LinComb, ObjId, Sign};
use crate::hochschild::{compose as compose_base, Cochain, Key};
use crate::twisted::free::{FreeObject, MorphismMatrix, Summand, TwistedObject};
use crate::twisted::tw::TwQuiver;

/// A precomplex `C` of base objects: `C^p` at position `p` and
/// `δ: C^p → C^{p+1}`. Positions without a term hold the zero object.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComplexWindow {
    pub name: String,
    pub terms: BTreeMap<i64, ObjId>,
    pub delta: BTreeMap<i64, LinComb>,
}

impl ComplexWindow {
    pub fn new(name: impl Into<String>) -> Self {
        ComplexWindow { name: name.into(), ..Default::default() }
    }

    pub fn term(mut self, position: i64, object: ObjId) -> Self {
        self.terms.insert(position, object);
        self
    }

    /// Sets the component `C^position → C^{position+1}`.
    pub fn differential(mut self, position: i64, value: LinComb) -> Self {
        self.delta.insert(position, value);
        self
    }

    pub fn positions(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    /// As a twisted object `(⊕_p Σ^{-p} C^p, δ)`.
    pub fn to_twisted(&self, q: &GradedQuiver) -> Result<TwistedObject> {
        let index: BTreeMap<i64, usize> = self.terms.keys().enumerate().map(|(k, &p)| (p, k)).collect();
        let summands = self
            .terms
            .iter()
            .map(|(&p, &object)| Summand { shift: -p, object })
            .collect();
        let mut delta = MorphismMatrix::new();
        for (&p, v) in &self.delta {
            if v.is_zero() {
                continue;
            }
            let (Some(&i), Some(&j)) = (index.get(&p), index.get(&(p + 1))) else {
                return Err(Error::Window(
                    self.name.clone(),
                    format!("differential at position {p} needs terms at {p} and {}", p + 1),
                ));
            };
            delta.set(j, i, v.clone());
        }
        let t = TwistedObject::new(self.name.clone(), FreeObject::new(summands), delta);
        t.validate(q)?;
        Ok(t)
    }

    /// `δ∘δ` computed with the composition `m`, as `(position, value)`
    /// pairs for the maps `C^p → C^{p+2}`.
    pub fn delta_squared(&self, q: &GradedQuiver, m: &Cochain) -> Vec<(i64, LinComb)> {
        let mut out = Vec::new();
        for (&p, first) in &self.delta {
            if let Some(second) = self.delta.get(&(p + 1)) {
                let v = compose_base(q, m, second, first);
                if !v.is_zero() {
                    out.push((p, v));
                }
            }
        }
        out
    }
}

/// A category of (pre)complexes with the twisted quiver it was cut out of.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Precomplexes {
    pub tw: TwQuiver,
    /// `embr_δ(m)` on the whole twisted quiver, base objects included.
    pub ambient: StructuredCategory,
    /// The structure on the given objects only.
    pub category: StructuredCategory,
}

impl Precomplexes {
    /// Id of a named object in the twisted quiver.
    pub fn object(&self, name: &str) -> Result<ObjId> {
        self.tw.quiver().object_id(name)
    }
}

fn check_window(window: (i64, i64), objects: &[ComplexWindow]) -> Result<()> {
    let (lo, hi) = window;
    if lo > hi {
        return Err(Error::Window("window".into(), format!("empty window [{lo}, {hi}]")));
    }
    for c in objects {
        if let Some(p) = c.positions().find(|p| *p < lo || *p > hi) {
            return Err(Error::Window(c.name.clone(), format!("position {p} outside [{lo}, {hi}]")));
        }
    }
    Ok(())
}

/// `PCom(a)` on the given precomplexes: the structure `embr_δ(m)` on the
/// twisted quiver, restricted to the precomplexes.
pub fn build_pcom(cat: &StructuredCategory, window: (i64, i64), objects: &[ComplexWindow]) -> Result<Precomplexes> {
    if cat.kind() != Kind::Linear || !cat.quiver().is_degree_zero() {
        return Err(Error::KindViolation {
            kind: cat.kind().to_string(),
            detail: "precomplexes need a linear category concentrated in degree zero".into(),
        });
    }
    check_window(window, objects)?;
    let q = cat.quiver();
    let twisted = objects.iter().map(|c| c.to_twisted(q)).collect::<Result<Vec<_>>>()?;
    let tw = TwQuiver::new(q, twisted)?;
    // embr_δ is a brace morphism, so b{b} = 0 carries over
    let mu = tw.embr(cat.mu())?;
    let ambient = StructuredCategory::derived(tw.quiver().clone(), mu, Kind::Cdg)?;
    let category = restrict(&ambient, &tw.twisted_objects())?;
    Ok(Precomplexes { tw, ambient, category })
}

/// `Com(a)` on the given complexes: the ∞-part of `PCom(a)`. Rejects any
/// object with `δ² ≠ 0`.
pub fn build_com(cat: &StructuredCategory, window: (i64, i64), objects: &[ComplexWindow]) -> Result<Precomplexes> {
    let m = cat.composition();
    for c in objects {
        if let Some((p, v)) = c.delta_squared(cat.quiver(), &m).into_iter().next() {
            return Err(Error::NotComplex {
                object: c.name.clone(),
                witness: format!("δ² = {} from position {p} to {}", cat.quiver().format_lincomb(&v), p + 2),
            });
        }
    }
    let pcom = build_pcom(cat, window, objects)?;
    let category = infinity_part(&pcom.category)?;
    if category.quiver().num_objects() != objects.len() {
        return Err(Error::Inconsistent("a complex has nonzero curvature".into()));
    }
    Ok(Precomplexes { category, ..pcom })
}

/// `PCom(a)` from matrix products over a degree-zero base: `m(f, g) = fg`,
/// `d(f) = δ f - (-1)^{|f|} f δ` and `c = -δ²`.
pub fn matrix_pcom(tw: &TwQuiver, m: &Cochain) -> Cochain {
    let q = tw.quiver();
    let base = tw.base();
    let field = q.field();
    let product = |f: &LinComb, g: &LinComb| -> MorphismMatrix {
        let (fm, gm) = (tw.to_matrix(f), tw.to_matrix(g));
        let mut out = MorphismMatrix::new();
        for ((k, j1), fv) in fm.entries() {
            for ((j2, i), gv) in gm.entries() {
                if j1 == j2 {
                    out.add(*k, *i, &compose_base(base, m, fv, gv));
                }
            }
        }
        out
    };
    let compose = |s, t, f: &LinComb, g: &LinComb| tw.from_matrix(s, t, &product(f, g)).expect("entries of composable matrices");
    let mut out = Cochain::zero(2);
    for (start, args) in q.composable_tuples(2) {
        let (f, g) = (LinComb::single(args[0], field.one()), LinComb::single(args[1], field.one()));
        let t = q.arrow(args[0]).target;
        out.add_entry(Key::new(start, args), &compose(start, t, &f, &g));
    }
    for (a, arr) in q.arrows() {
        let f = LinComb::single(a, field.one());
        let mut v = compose(arr.source, arr.target, &tw.delta_of(arr.target), &f);
        let s = Sign::from_exponent(arr.degree + 1);
        v.add_scaled(&compose(arr.source, arr.target, &f, &tw.delta_of(arr.source)), &s.apply(field.one()));
        out.add_entry(Key::new(arr.source, vec![a]), &v);
    }
    for o in q.objects() {
        let d = tw.delta_of(o);
        out.add_entry(Key::new(o, vec![]), &compose(o, o, &d, &d).negated());
    }
    out
}
