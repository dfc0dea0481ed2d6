use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graded::{canonical_iso_sign, Arrow, ArrowId, GradedQuiver, LinComb, ObjId};
use crate::hochschild::{brace_plain, Cochain, CochainMap, Key};
use crate::twisted::free::{MorphismMatrix, TwistedObject};

/// Where a basis arrow of the twisted quiver comes from: the base arrow
/// `f: A_i → B_j` placed at entry `(to, from)` of `Tw(M, N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Entry {
    pub source: ObjId,
    pub target: ObjId,
    pub from: usize,
    pub to: usize,
    pub base: ArrowId,
}

/// A finite quiver of twisted objects over a base quiver `a`.
///
/// The base objects come first, as `(Σ^0 A, 0)` under their own names, and
/// the arrows between them are the base arrows in their original order, so
/// restricting to the base objects recovers `a` verbatim. A basis arrow
/// `f ∈ a(A_i, B_j)` at entry `(j, i)` of `Tw(M, N)` has degree
/// `|f| + m_i - n_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwQuiver {
    base: GradedQuiver,
    objects: Vec<TwistedObject>,
    quiver: GradedQuiver,
    entries: Vec<Entry>,
    index: BTreeMap<Entry, ArrowId>,
}

impl TwQuiver {
    pub fn new(base: &GradedQuiver, twisted: Vec<TwistedObject>) -> Result<Self> {
        let mut objects: Vec<TwistedObject> = base.objects().map(|o| TwistedObject::base(base, o)).collect();
        for t in twisted {
            t.validate(base)?;
            if objects.iter().any(|o| o.name == t.name) {
                return Err(Error::schema("objects", format!("duplicate object {:?}", t.name)));
            }
            objects.push(t);
        }
        let nb = base.num_objects();
        let mut arrows = Vec::new();
        let mut entries = Vec::new();
        for (a, arr) in base.arrows() {
            entries.push(Entry { source: arr.source, target: arr.target, from: 0, to: 0, base: a });
            arrows.push(arr.clone());
        }
        for (mi, m) in objects.iter().enumerate() {
            for (ni, n) in objects.iter().enumerate() {
                if mi < nb && ni < nb {
                    continue;
                }
                for (i, si) in m.carrier.summands.iter().enumerate() {
                    for (j, sj) in n.carrier.summands.iter().enumerate() {
                        for &f in base.hom(si.object, sj.object) {
                            let fa = base.arrow(f);
                            entries.push(Entry { source: ObjId(mi), target: ObjId(ni), from: i, to: j, base: f });
                            arrows.push(Arrow {
                                name: format!("{}[{j},{i}]", fa.name),
                                source: ObjId(mi),
                                target: ObjId(ni),
                                degree: fa.degree + si.shift - sj.shift,
                            });
                        }
                    }
                }
            }
        }
        let names = objects.iter().map(|o| o.name.clone()).collect();
        let quiver = GradedQuiver::from_parts(base.field(), names, arrows)?;
        let index = entries.iter().enumerate().map(|(k, e)| (*e, ArrowId(k))).collect();
        Ok(TwQuiver { base: base.clone(), objects, quiver, entries, index })
    }

    pub fn base(&self) -> &GradedQuiver {
        &self.base
    }

    pub fn quiver(&self) -> &GradedQuiver {
        &self.quiver
    }

    pub fn object(&self, o: ObjId) -> &TwistedObject {
        &self.objects[o.0]
    }

    pub fn objects(&self) -> &[TwistedObject] {
        &self.objects
    }

    pub fn base_objects(&self) -> Vec<ObjId> {
        self.base.objects().collect()
    }

    /// Twisted objects that are not base objects.
    pub fn twisted_objects(&self) -> Vec<ObjId> {
        (self.base.num_objects()..self.objects.len()).map(ObjId).collect()
    }

    pub fn entry(&self, a: ArrowId) -> Entry {
        self.entries[a.0]
    }

    pub fn arrow_at(&self, e: Entry) -> Option<ArrowId> {
        self.index.get(&e).copied()
    }

    fn shift(&self, o: ObjId, k: usize) -> i64 {
        self.objects[o.0].carrier.summands[k].shift
    }

    /// Splits a morphism `M → N` into its matrix of base components.
    pub fn to_matrix(&self, f: &LinComb) -> MorphismMatrix {
        let mut out = MorphismMatrix::new();
        for (a, c) in f.iter() {
            let e = self.entry(a);
            out.add(e.to, e.from, &LinComb::single(e.base, c.clone()));
        }
        out
    }

    /// Assembles a morphism `M → N` from base components.
    pub fn from_matrix(&self, source: ObjId, target: ObjId, f: &MorphismMatrix) -> Result<LinComb> {
        let mut out = LinComb::new();
        for ((j, i), v) in f.entries() {
            for (b, c) in v.iter() {
                let e = Entry { source, target, from: *i, to: *j, base: b };
                let a = self.arrow_at(e).ok_or_else(|| {
                    Error::NotComposable(format!(
                        "{} cannot sit at entry ({j}, {i}) of hom({}, {})",
                        self.base.arrow(b).name,
                        self.quiver.object_name(source),
                        self.quiver.object_name(target)
                    ))
                })?;
                out.add_term(a, c);
            }
        }
        Ok(out)
    }

    /// `δ_M` as an element of `Tw(M, M)^1`.
    pub fn delta_of(&self, o: ObjId) -> LinComb {
        self.from_matrix(o, o, &self.objects[o.0].delta)
            .expect("validated twisted object")
    }

    /// The canonical cochain `δ ∈ C^1(Tw(a))`.
    pub fn delta(&self) -> Cochain {
        let mut out = Cochain::zero(1);
        for o in self.quiver.objects() {
            out.add_entry(Key::new(o, Vec::new()), &self.delta_of(o));
        }
        out
    }

    /// Extends `φ ∈ C(a)` entrywise to `C(Tw(a))`:
    /// `φ(f_n, …, f_1)_{ji} = Σ ± φ((f_n)_{j k_{n-1}}, …, (f_1)_{k_1 i})`, the
    /// sign being that of the canonical isomorphism which shifts the `t`-th
    /// argument by `n_{k_t} - m_{k_{t-1}}`.
    pub fn embed(&self, phi: &Cochain) -> Cochain {
        let mut occurrences: BTreeMap<ObjId, Vec<(ObjId, usize)>> = BTreeMap::new();
        for (mi, m) in self.objects.iter().enumerate() {
            for (k, s) in m.carrier.summands.iter().enumerate() {
                occurrences.entry(s.object).or_default().push((ObjId(mi), k));
            }
        }
        let mut out = Cochain::zero(phi.hochschild_degree());
        for (key, value) in phi.entries() {
            let n = key.arity();
            // objects A_0, A_1, …, A_n along the path
            let mut path = vec![key.start];
            for &a in key.args.iter().rev() {
                path.push(self.base.arrow(a).target);
            }
            let choices: Vec<&[(ObjId, usize)]> = path
                .iter()
                .map(|o| occurrences.get(o).map(Vec::as_slice).unwrap_or(&[]))
                .collect();
            if choices.iter().any(|c| c.is_empty()) {
                continue;
            }
            let degs: Vec<i64> = key.args.iter().map(|&a| self.base.degree(a)).collect();
            let internal = phi.internal_degree(n);
            let mut pick = vec![0usize; n + 1];
            'outer: loop {
                let chain: Vec<(ObjId, usize)> = pick.iter().zip(&choices).map(|(&p, c)| c[p]).collect();
                if let Some((args, shifts)) = self.lift_path(&chain, &key.args) {
                    let sign = canonical_iso_sign(&shifts, internal, &degs).expect("lengths agree");
                    let (m0, k0) = chain[0];
                    let (mn, kn) = chain[n];
                    let mut v = LinComb::new();
                    for (b, c) in value.iter() {
                        let e = Entry { source: m0, target: mn, from: k0, to: kn, base: b };
                        v.add_term(self.index[&e], &sign.apply(c.clone()));
                    }
                    out.add_entry(Key::new(m0, args), &v);
                }
                // odometer over the choices
                for slot in 0..=n {
                    pick[slot] += 1;
                    if pick[slot] < choices[slot].len() {
                        continue 'outer;
                    }
                    pick[slot] = 0;
                }
                break;
            }
        }
        out
    }

    /// Tw arrows for `args` placed along `chain` (tensor order), with the
    /// shift of each argument.
    fn lift_path(&self, chain: &[(ObjId, usize)], args: &[ArrowId]) -> Option<(Vec<ArrowId>, Vec<i64>)> {
        let n = args.len();
        let mut out = Vec::with_capacity(n);
        let mut shifts = Vec::with_capacity(n);
        for (pos, &a) in args.iter().enumerate() {
            // args[pos] is f_t with t = n - pos, going chain[t-1] → chain[t]
            let t = n - pos;
            let (src, from) = chain[t - 1];
            let (tgt, to) = chain[t];
            out.push(*self.index.get(&Entry { source: src, target: tgt, from, to, base: a })?);
            shifts.push(self.shift(tgt, to) - self.shift(src, from));
        }
        Some((out, shifts))
    }

    /// Whether `Σ_m φ{δ^{⊗m}}` is known to be pointwise finite: the base is
    /// concentrated in degree zero or every `δ_M` is intrinsically locally
    /// nilpotent. Returns the first offending object otherwise.
    pub fn convergence_witness(&self) -> Option<&str> {
        if self.base.is_degree_zero() {
            return None;
        }
        self.objects
            .iter()
            .find(|o| !o.nilpotence().is_iln())
            .map(|o| o.name.as_str())
    }

    /// `embr_δ(φ) = Σ_m φ{δ^{⊗m}}`. The sum stops at the largest arity of
    /// `φ`, beyond which every brace vanishes.
    pub fn embr(&self, phi: &Cochain) -> Result<Cochain> {
        if let Some(name) = self.convergence_witness() {
            return Err(Error::Divergent(name.to_string()));
        }
        let e = self.embed(phi);
        let delta = self.delta();
        let mut out = Cochain::zero(phi.hochschild_degree());
        for m in 0..=phi.max_arity().unwrap_or(0) {
            let ds = vec![&delta; m];
            out.add_assign(&brace_plain(&self.quiver, &e, &ds))?;
        }
        Ok(out)
    }
}

/// `(-1)^{n(i + (n-1)j/2)}`: the sign relating `φ{δ^{⊗n}}` to `φ(δ, …, δ)`
/// for `φ` of internal degree `i` and `δ` of degree `j`.
pub fn lembr_sign(n: i64, i: i64, j: i64) -> crate::graded::Sign {
    crate::graded::Sign::from_exponent(n * i + n * (n - 1) / 2 * j)
}

/// The entrywise section `C(a) → C(Tw(a))`.
pub struct EmbedMap<'a>(pub &'a TwQuiver);

impl CochainMap for EmbedMap<'_> {
    fn name(&self) -> String {
        "embed".into()
    }
    fn source(&self) -> &GradedQuiver {
        self.0.base()
    }
    fn target(&self) -> &GradedQuiver {
        self.0.quiver()
    }
    fn apply(&self, phi: &Cochain) -> Result<Cochain> {
        Ok(self.0.embed(phi))
    }
}

/// `embr_δ` as a cochain map.
pub struct EmbrMap<'a>(pub &'a TwQuiver);

impl CochainMap for EmbrMap<'_> {
    fn name(&self) -> String {
        "embr".into()
    }
    fn source(&self) -> &GradedQuiver {
        self.0.base()
    }
    fn target(&self) -> &GradedQuiver {
        self.0.quiver()
    }
    fn apply(&self, phi: &Cochain) -> Result<Cochain> {
        self.0.embr(phi)
    }
}
