use std::collections::BTreeSet;

use crate::deformation::cohomology::{com_differential, HomotopyHom};
use crate::deformation::{deform_category, FirstOrderDeformation};
use crate::error::{Error, Result};
use crate::exact::{SparseMatrix, Vector};
use crate::graded::{canonical_iso_sign, ArrowId, LinComb, ObjId};
use crate::hochschild::{compose, eval_multilinear, project_zero, Cochain, Key};
use crate::twisted::{build_com, lembr_sign, ComplexWindow, Entry, MorphismMatrix, Precomplexes, TwQuiver};

/// A deformation together with a finite set of complexes over its base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lab {
    def: FirstOrderDeformation,
    com: Precomplexes,
    phi_tw: Cochain,
}

/// `χ(φ)_C`, the arity-zero part of `embr_δ(φ)` at `C`, as a class in
/// `H² Com(a)(C, C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicValue {
    pub object: ObjId,
    pub name: String,
    pub representative: LinComb,
    pub vanishes: bool,
    /// `h` with `d(h) = χ(φ)_C` when the class vanishes.
    pub preimage: Option<LinComb>,
    pub hom: HomotopyHom,
}

/// Ranks of the linear system for the `ε` part `δ'` of a lifted twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankEvidence {
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    pub augmented_rank: usize,
}

impl RankEvidence {
    pub fn consistent(&self) -> bool {
        self.rank == self.augmented_rank
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub object: ObjId,
    pub name: String,
    /// `-φ(δ_C, δ_C)`.
    pub representative: LinComb,
    pub vanishes: bool,
    /// `δ'` with `δδ' + δ'δ = -φ(δ, δ)`, found by making the curvature of
    /// `(C, δ + δ'ε)` vanish over the deformed category.
    pub witness: Option<LinComb>,
    pub evidence: RankEvidence,
    /// `dim H¹ Com(a)(C, C)` when a lift exists.
    pub lift_space_dim: Option<usize>,
}

impl ObstructionReport {
    /// A lift exists exactly when the class vanishes.
    pub fn agrees(&self) -> bool {
        self.witness.is_some() == self.vanishes
    }
}

/// A closed morphism `f: C → D` of degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub name: String,
    pub source: ObjId,
    pub target: ObjId,
    pub degree: i64,
    pub map: LinComb,
}

impl ChainMap {
    pub fn from_matrix(
        com: &Precomplexes,
        name: impl Into<String>,
        (source, target): (ObjId, ObjId),
        degree: i64,
        f: &MorphismMatrix,
    ) -> Result<Self> {
        let map = com.tw.from_matrix(source, target, f)?;
        Ok(ChainMap { name: name.into(), source, target, degree, map })
    }

    /// The identity of a complex over a strictly unital base.
    pub fn identity(com: &Precomplexes, base: &crate::ainf::StructuredCategory, object: ObjId) -> Result<Self> {
        let carrier = &com.tw.object(object).carrier;
        let mut m = MorphismMatrix::new();
        for (k, s) in carrier.summands.iter().enumerate() {
            let u = base.unit(s.object).ok_or_else(|| {
                Error::InvalidStructure(format!("{} has no strict unit", base.quiver().object_name(s.object)))
            })?;
            m.set(k, k, LinComb::single(u, base.quiver().field().one()));
        }
        let map = com.tw.from_matrix(object, object, &m)?;
        Ok(ChainMap { name: format!("id_{}", com.tw.object(object).name), source: object, target: object, degree: 0, map })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityResult {
    pub name: String,
    /// `χ_D f - f χ_C`.
    pub difference: LinComb,
    pub homotopy: Option<LinComb>,
}

impl CentralityResult {
    pub fn passed(&self) -> bool {
        self.homotopy.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusEntry {
    pub object: ObjId,
    pub name: String,
    pub class_vanishes: bool,
    pub lifts: bool,
}

/// Candidates split by vanishing of the characteristic value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Locus {
    pub entries: Vec<LocusEntry>,
}

impl Locus {
    pub fn dg_part(&self) -> Vec<&str> {
        self.entries.iter().filter(|e| e.class_vanishes).map(|e| e.name.as_str()).collect()
    }

    pub fn curved_part(&self) -> Vec<&str> {
        self.entries.iter().filter(|e| !e.class_vanishes).map(|e| e.name.as_str()).collect()
    }

    pub fn consistent(&self) -> bool {
        self.entries.iter().all(|e| e.class_vanishes == e.lifts)
    }
}

/// A gauge `h` of arity zero and the representative `φ' - d(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub h: Cochain,
    pub representative: Cochain,
}

fn vector_over(field: crate::exact::FieldSpec, rows: &[ArrowId], f: &LinComb) -> Vector {
    rows.iter()
        .map(|&a| f.get(a).cloned().unwrap_or_else(|| field.zero()))
        .collect()
}

/// Sum of `Σ_n (-1)^{n(2-n) + n(n-1)/2} e_n(δ, …, δ)` at `object`: the
/// arity-zero part of `embr_δ` of a degree-2 cochain whose embedding is `e`.
fn zero_part_on(q: &crate::graded::GradedQuiver, e: &Cochain, object: ObjId, delta: &LinComb) -> LinComb {
    let mut out = LinComb::new();
    for n in 0..=e.max_arity().unwrap_or(0) {
        let args = vec![delta; n];
        let s = lembr_sign(n as i64, 2 - n as i64, 1);
        out.add_scaled(&eval_multilinear(q, e, object, &args), &s.apply(q.field().one()));
    }
    out
}

impl Lab {
    /// Builds `Com(a)` on the complexes and `embr_δ(φ)`. Rejects precomplexes.
    pub fn new(def: FirstOrderDeformation, window: (i64, i64), complexes: &[ComplexWindow]) -> Result<Self> {
        let com = build_com(def.base(), window, complexes)?;
        let phi_tw = com.tw.embr(def.cocycle())?;
        Ok(Lab { def, com, phi_tw })
    }

    pub fn deformation(&self) -> &FirstOrderDeformation {
        &self.def
    }

    pub fn com(&self) -> &Precomplexes {
        &self.com
    }

    /// `embr_δ(φ)` on the whole twisted quiver.
    pub fn phi_tw(&self) -> &Cochain {
        &self.phi_tw
    }

    pub fn complexes(&self) -> Vec<ObjId> {
        self.com.tw.twisted_objects()
    }

    pub fn object(&self, name: &str) -> Result<ObjId> {
        self.com.object(name)
    }

    fn name(&self, o: ObjId) -> String {
        self.com.tw.object(o).name.clone()
    }

    /// `Σ_n ± φ_n(δ_C, …, δ_C)` by matrix contraction over paths of summands,
    /// each term carrying the sign of the canonical isomorphism.
    pub fn direct_contraction(&self, c: ObjId) -> LinComb {
        let t = self.com.tw.object(c);
        let base = self.com.tw.base();
        let phi = self.def.cocycle();
        let summands = &t.carrier.summands;
        let mut out = MorphismMatrix::new();
        for n in 0..=phi.max_arity().unwrap_or(0) {
            // partial paths: (current summand, start summand, args in tensor order, shifts, coefficient)
            let mut paths: Vec<(usize, usize, Vec<ArrowId>, Vec<i64>, crate::exact::Scalar)> =
                (0..summands.len()).map(|i| (i, i, Vec::new(), Vec::new(), base.field().one())).collect();
            for _ in 0..n {
                let mut next = Vec::new();
                for (k, i, args, shifts, c) in &paths {
                    for ((j, k2), v) in t.delta.entries() {
                        if k2 != k {
                            continue;
                        }
                        for (b, d) in v.iter() {
                            let mut a2 = vec![b];
                            a2.extend_from_slice(args);
                            let mut s2 = vec![summands[*j].shift - summands[*k].shift];
                            s2.extend_from_slice(shifts);
                            next.push((*j, *i, a2, s2, c * d));
                        }
                    }
                }
                paths = next;
            }
            let internal = phi.internal_degree(n);
            let outer = lembr_sign(n as i64, internal, 1);
            for (j, i, args, shifts, c) in paths {
                let degs: Vec<i64> = args.iter().map(|&a| base.degree(a)).collect();
                let s = canonical_iso_sign(&shifts, internal, &degs).expect("lengths agree") * outer;
                let v = phi.eval(summands[i].object, &args);
                out.add(j, i, &v.scaled(&s.apply(c)));
            }
        }
        self.com.tw.from_matrix(c, c, &out).expect("values lie in hom(C^p, C^{p+n})")
    }

    /// The class `[χ(φ)_C] ∈ H² Com(a)(C, C)`, computed as `π_0 embr_δ(φ)` and
    /// checked against [`Lab::direct_contraction`].
    pub fn characteristic_value(&self, c: ObjId) -> Result<CharacteristicValue> {
        let representative = project_zero(&self.phi_tw).remove(&c).unwrap_or_default();
        let direct = self.direct_contraction(c);
        if representative != direct {
            let q = self.com.tw.quiver();
            return Err(Error::Inconsistent(format!(
                "χ at {}: embr gives {} but the contraction gives {}",
                self.name(c),
                q.format_lincomb(&representative),
                q.format_lincomb(&direct)
            )));
        }
        let hom = HomotopyHom::new(&self.com, c, c, 2)?;
        if !hom.is_cocycle(&representative)? {
            return Err(Error::Inconsistent(format!("χ at {} is not closed", self.name(c))));
        }
        let preimage = hom.boundary_preimage(&representative)?;
        Ok(CharacteristicValue {
            object: c,
            name: self.name(c),
            representative,
            vanishes: preimage.is_some(),
            preimage,
            hom,
        })
    }

    /// Searches for `δ'` making `(C, δ + δ'ε)` curvature free over the
    /// deformed category, independently of the class computation, and
    /// reports both.
    pub fn obstruction_and_lift(&self, c: ObjId) -> Result<ObstructionReport> {
        let chi = self.characteristic_value(c)?;
        let deformed = deform_category(&self.def)?;
        let dd = &deformed.doubled;
        let tw2 = TwQuiver::new(dd.quiver(), vec![self.com.tw.object(c).clone()])?;
        let cbar = ObjId(dd.quiver().num_objects());
        let q2 = tw2.quiver();
        let field = q2.field();
        let e = tw2.embed(deformed.category.mu());
        let delta = tw2.delta_of(cbar);
        let c0 = zero_part_on(q2, &e, cbar, &delta);

        let unknowns = self.com.tw.quiver().hom_of_degree(c, c, 1);
        let columns: Vec<LinComb> = unknowns
            .iter()
            .map(|&u| {
                let en = self.com.tw.entry(u);
                let eu = tw2
                    .arrow_at(Entry { source: cbar, target: cbar, from: en.from, to: en.to, base: dd.eps(en.base) })
                    .expect("every base arrow has an ε copy");
                let mut x = delta.clone();
                x.add_term(eu, &field.one());
                let mut col = zero_part_on(q2, &e, cbar, &x);
                col.add(&c0.negated());
                col
            })
            .collect();
        let rows: Vec<ArrowId> = c0
            .iter()
            .map(|(a, _)| a)
            .chain(columns.iter().flat_map(|l| l.iter().map(|(a, _)| a)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let cols: Vec<Vector> = columns.iter().map(|l| vector_over(field, &rows, l)).collect();
        let l = SparseMatrix::from_columns(field, rows.len(), &cols)?;
        let rhs = vector_over(field, &rows, &c0.negated());
        let mut aug_cols = cols.clone();
        aug_cols.push(rhs.clone());
        let evidence = RankEvidence {
            unknowns: unknowns.len(),
            equations: rows.len(),
            rank: l.rank(),
            augmented_rank: SparseMatrix::from_columns(field, rows.len(), &aug_cols)?.rank(),
        };
        let witness = l.solve(&rhs)?.map(|x| {
            let mut w = LinComb::new();
            for (&u, s) in unknowns.iter().zip(&x) {
                w.add_term(u, s);
            }
            w
        });
        if let Some(w) = &witness {
            if com_differential(&self.com, w) != chi.representative {
                return Err(Error::Inconsistent(format!(
                    "the lift found for {} does not solve δδ' + δ'δ = -φ(δ, δ)",
                    self.name(c)
                )));
            }
        }
        let lift_space_dim = match witness {
            Some(_) => Some(HomotopyHom::new(&self.com, c, c, 1)?.dim()),
            None => None,
        };
        Ok(ObstructionReport {
            object: c,
            name: chi.name,
            representative: chi.representative,
            vanishes: chi.vanishes,
            witness,
            evidence,
            lift_space_dim,
        })
    }

    /// For each chain map `f: C → D`, solves `χ_D f - f χ_C = d(h)`.
    pub fn verify_centrality(&self, maps: &[ChainMap]) -> Result<Vec<CentralityResult>> {
        let q = self.com.tw.quiver();
        let m = self.com.ambient.composition();
        let mut out = Vec::with_capacity(maps.len());
        for f in maps {
            for (a, _) in f.map.iter() {
                let arr = q.arrow(a);
                if arr.source != f.source || arr.target != f.target || arr.degree != f.degree {
                    return Err(Error::Degree(format!(
                        "{} contains {} which is not in hom({}, {})^{}",
                        f.name,
                        arr.name,
                        q.object_name(f.source),
                        q.object_name(f.target),
                        f.degree
                    )));
                }
            }
            let df = com_differential(&self.com, &f.map);
            if !df.is_zero() {
                return Err(Error::NotChainMap(format!("d({}) = {}", f.name, q.format_lincomb(&df))));
            }
            let zc = self.characteristic_value(f.source)?.representative;
            let zd = self.characteristic_value(f.target)?.representative;
            let mut difference = compose(q, &m, &zd, &f.map);
            difference.add(&compose(q, &m, &f.map, &zc).negated());
            let hom = HomotopyHom::new(&self.com, f.source, f.target, f.degree + 2)?;
            let homotopy = hom.boundary_preimage(&difference)?;
            out.push(CentralityResult { name: f.name.clone(), difference, homotopy });
        }
        Ok(out)
    }

    /// Splits the complexes by vanishing of `χ(φ)_C`, cross-checked by the lift
    /// search on each.
    pub fn phi_infinity_locus(&self) -> Result<Locus> {
        let entries = self
            .complexes()
            .into_iter()
            .map(|c| {
                let r = self.obstruction_and_lift(c)?;
                Ok(LocusEntry { object: c, name: r.name, class_vanishes: r.vanishes, lifts: r.witness.is_some() })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Locus { entries })
    }

    /// A gauge `h` of arity zero killing the zero part of `embr_δ(φ)` on
    /// `objects`.
    pub fn normalize_zero_part(&self, objects: &[ObjId]) -> Result<Normalization> {
        normalize_cochain(&self.com, &self.phi_tw, objects)
    }
}

/// Solves `π_0 d(h)_C = π_0(φ)_C` for each `C` in `objects` and returns `h` with
/// `φ - d(h)`. Fails with an internal-consistency error when some zero part is
/// not a coboundary.
pub fn normalize_cochain(com: &Precomplexes, phi: &Cochain, objects: &[ObjId]) -> Result<Normalization> {
    let q = com.tw.quiver();
    let field = q.field();
    let zero = project_zero(phi);
    let mut h = Cochain::zero(1);
    for &c in objects {
        let target = zero.get(&c).cloned().unwrap_or_default();
        if target.is_zero() {
            continue;
        }
        let unknowns = q.hom_of_degree(c, c, 1);
        let rows = q.hom_of_degree(c, c, 2);
        let cols: Vec<Vector> = unknowns
            .iter()
            .map(|&u| {
                let mut hu = Cochain::zero(1);
                hu.add_entry(Key::new(c, Vec::new()), &LinComb::single(u, field.one()));
                let dz = project_zero(&com.ambient.d(&hu)).remove(&c).unwrap_or_default();
                vector_over(field, &rows, &dz)
            })
            .collect();
        let l = SparseMatrix::from_columns(field, rows.len(), &cols)?;
        let x = l.solve(&vector_over(field, &rows, &target))?.ok_or_else(|| {
            Error::Inconsistent(format!("the zero part at {} is not a coboundary", q.object_name(c)))
        })?;
        let mut hc = LinComb::new();
        for (&u, s) in unknowns.iter().zip(&x) {
            hc.add_term(u, s);
        }
        h.add_entry(Key::new(c, Vec::new()), &hc);
    }
    let representative = phi.minus(&com.ambient.d(&h))?;
    let left = project_zero(&representative);
    if let Some(&c) = objects.iter().find(|c| left.get(c).is_some_and(|v| !v.is_zero())) {
        return Err(Error::Inconsistent(format!("residual zero part at {}", q.object_name(c))));
    }
    Ok(Normalization { h, representative })
}
