//! The JSON problem document and its resolution into typed objects.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ainf::{Kind, StructuredCategory};
use crate::deformation::FirstOrderDeformation;
use crate::error::{Error, Result};
use crate::exact::FieldSpec;
use crate::graded::{ArrowId, GradedQuiver, LinComb, ObjId};
use crate::hochschild::{Cochain, Key};
use crate::twisted::{ComplexWindow, MorphismMatrix};

/// Linear combination of named arrows: name → exact scalar text.
pub type ValueDoc = BTreeMap<String, String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub source: String,
    pub target: String,
    pub name: String,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDoc {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<(i64, i64)>,
}

/// One component `(f_n, …, f_1) ↦ value` at `start`, arguments in tensor order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecordDoc {
    pub start: String,
    pub args: Vec<String>,
    pub value: ValueDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    pub kind: Kind,
    pub components: Vec<RecordDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainDoc {
    /// Hochschild degree.
    pub degree: i64,
    pub records: Vec<RecordDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub position: i64,
    pub object: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DifferentialDoc {
    /// The component `C^position → C^{position+1}`.
    pub position: i64,
    pub value: ValueDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    pub name: String,
    pub terms: Vec<TermDoc>,
    #[serde(default)]
    pub differentials: Vec<DifferentialDoc>,
}

/// `φ = scale · cocycle + d(coboundary_of)`; every part is optional.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coboundary_of: Option<String>,
}

/// A component `C^from → D^to` of a map between complexes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapEntryDoc {
    pub from: i64,
    pub to: i64,
    pub value: ValueDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainMapDoc {
    pub name: String,
    pub source: String,
    pub target: String,
    pub degree: i64,
    pub entries: Vec<MapEntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case", deny_unknown_fields)]
pub enum TaskDoc {
    Hh { degree: usize },
    Check,
    Embr {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        cochain: Option<String>,
    },
    Obstruct { deformation: String, complex: String },
    Lift { deformation: String, complex: String },
    Gauge { from: String, to: String, h: String },
    Locus { deformation: String },
    Centrality { deformation: String },
    Precomplexes {
        deformation: String,
        /// Per complex name, the components `C^p → C^{p+1}` of `δ'`.
        #[serde(default)]
        gamma: BTreeMap<String, Vec<MapEntryDoc>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    #[serde(default)]
    pub name: String,
    pub field: FieldSpec,
    pub quiver: QuiverDoc,
    pub structure: StructureDoc,
    #[serde(default)]
    pub cochains: BTreeMap<String, CochainDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<(i64, i64)>,
    #[serde(default)]
    pub complexes: Vec<ComplexDoc>,
    #[serde(default)]
    pub deformations: BTreeMap<String, DeformationDoc>,
    #[serde(default)]
    pub chain_maps: Vec<ChainMapDoc>,
    #[serde(default)]
    pub tasks: Vec<TaskDoc>,
}

impl ProblemDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::schema(format!("line {} column {}", e.line(), e.column()), e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

/// A chain map given by positions, resolved against a twisted quiver later.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpec {
    pub name: String,
    pub source: String,
    pub target: String,
    pub degree: i64,
    /// `(from position, to position, value)`.
    pub entries: Vec<(i64, i64, LinComb)>,
}

/// A document with every name resolved. The structure is kept unvalidated
/// so that `check` can report on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub name: String,
    pub quiver: GradedQuiver,
    pub kind: Kind,
    pub mu: Cochain,
    pub cochains: BTreeMap<String, Cochain>,
    pub window: (i64, i64),
    pub complexes: Vec<ComplexWindow>,
    pub deformations: BTreeMap<String, DeformationDoc>,
    pub maps: Vec<MapSpec>,
    pub tasks: Vec<TaskDoc>,
    pub document: ProblemDocument,
}

fn located(location: impl Into<String>) -> impl FnOnce(Error) -> Error {
    let location = location.into();
    move |e| match e {
        Error::Schema { .. } => e,
        other => Error::schema(location, other.to_string()),
    }
}

fn value(q: &GradedQuiver, source: ObjId, target: ObjId, v: &ValueDoc) -> Result<LinComb> {
    let mut out = LinComb::new();
    for (name, c) in v {
        out.add_term(q.arrow_by_name(source, target, name)?, &q.field().parse_scalar(c)?);
    }
    Ok(out)
}

/// Resolves argument names along the path from `start`, last argument first.
fn path(q: &GradedQuiver, start: ObjId, args: &[String]) -> Result<(Vec<ArrowId>, ObjId)> {
    let mut at = start;
    let mut ids = vec![ArrowId(0); args.len()];
    for (pos, name) in args.iter().enumerate().rev() {
        let mut found = q.arrows().filter(|(_, a)| a.source == at && &a.name == name);
        let (id, arr) = found.next().ok_or_else(|| Error::UnknownArrow {
            name: name.clone(),
            source_obj: q.object_name(at).into(),
            target_obj: "?".into(),
        })?;
        if found.next().is_some() {
            return Err(Error::schema(name.clone(), "ambiguous arrow name; arrows leaving an object must be distinct"));
        }
        ids[pos] = id;
        at = arr.target;
    }
    Ok((ids, at))
}

fn cochain(q: &GradedQuiver, degree: i64, records: &[RecordDoc], location: &str) -> Result<Cochain> {
    let mut out = Cochain::zero(degree);
    for (k, r) in records.iter().enumerate() {
        let at = format!("{location}[{k}]");
        let start = q.object_id(&r.start).map_err(located(at.clone()))?;
        let (args, end) = path(q, start, &r.args).map_err(located(at.clone()))?;
        let v = value(q, start, end, &r.value).map_err(located(at))?;
        out.add_entry(Key::new(start, args), &v);
    }
    out.validate(q).map_err(located(location))?;
    Ok(out)
}

impl Problem {
    pub fn from_document(doc: &ProblemDocument) -> Result<Self> {
        let mut b = GradedQuiver::builder(doc.field);
        for o in &doc.quiver.objects {
            b = b.object(o.clone());
        }
        for a in &doc.quiver.arrows {
            b = b.arrow(a.source.clone(), a.target.clone(), a.name.clone(), a.degree);
        }
        if let Some((lo, hi)) = doc.quiver.window {
            b = b.window(lo, hi);
        }
        let q = b.build().map_err(located("quiver"))?;
        let mu = cochain(&q, 2, &doc.structure.components, "structure.components")?;
        let cochains = doc
            .cochains
            .iter()
            .map(|(name, c)| Ok((name.clone(), cochain(&q, c.degree, &c.records, &format!("cochains.{name}"))?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let mut complexes = Vec::new();
        for (k, c) in doc.complexes.iter().enumerate() {
            let at = format!("complexes[{k}]");
            let mut w = ComplexWindow::new(c.name.clone());
            for t in &c.terms {
                if w.terms.contains_key(&t.position) {
                    return Err(Error::schema(at, format!("two terms at position {}", t.position)));
                }
                w = w.term(t.position, q.object_id(&t.object).map_err(located(at.clone()))?);
            }
            for d in &c.differentials {
                let (Some(&s), Some(&t)) = (w.terms.get(&d.position), w.terms.get(&(d.position + 1))) else {
                    return Err(Error::schema(at, format!("differential at {} needs terms at both ends", d.position)));
                };
                let v = value(&q, s, t, &d.value).map_err(located(at.clone()))?;
                w = w.differential(d.position, v);
            }
            if complexes.iter().any(|o: &ComplexWindow| o.name == w.name) || q.object_id(&w.name).is_ok() {
                return Err(Error::schema(at, format!("duplicate object name {:?}", w.name)));
            }
            complexes.push(w);
        }
        let window = match doc.window {
            Some(w) => w,
            None => {
                let ps: Vec<i64> = complexes.iter().flat_map(|c| c.positions()).collect();
                (ps.iter().copied().min().unwrap_or(0), ps.iter().copied().max().unwrap_or(0))
            }
        };
        for (name, d) in &doc.deformations {
            for r in d.cocycle.iter().chain(&d.coboundary_of) {
                if !cochains.contains_key(r) {
                    return Err(Error::schema(format!("deformations.{name}"), format!("unknown cochain {r:?}")));
                }
            }
            if let Some(s) = &d.scale {
                doc.field.parse_scalar(s).map_err(located(format!("deformations.{name}.scale")))?;
            }
        }
        let positions = |name: &str| -> Option<&ComplexWindow> { complexes.iter().find(|c| c.name == name) };
        let mut maps = Vec::new();
        for (k, m) in doc.chain_maps.iter().enumerate() {
            let at = format!("chain_maps[{k}]");
            let (Some(src), Some(tgt)) = (positions(&m.source), positions(&m.target)) else {
                return Err(Error::schema(at, "source and target must be complexes of the document"));
            };
            let mut entries = Vec::new();
            for e in &m.entries {
                let (Some(&a), Some(&b)) = (src.terms.get(&e.from), tgt.terms.get(&e.to)) else {
                    return Err(Error::schema(at, format!("no terms at positions {} → {}", e.from, e.to)));
                };
                entries.push((e.from, e.to, value(&q, a, b, &e.value).map_err(located(at.clone()))?));
            }
            maps.push(MapSpec {
                name: m.name.clone(),
                source: m.source.clone(),
                target: m.target.clone(),
                degree: m.degree,
                entries,
            });
        }
        let problem = Problem {
            name: doc.name.clone(),
            quiver: q,
            kind: doc.structure.kind,
            mu,
            cochains,
            window,
            complexes,
            deformations: doc.deformations.clone(),
            maps,
            tasks: doc.tasks.clone(),
            document: doc.clone(),
        };
        for (k, t) in problem.tasks.iter().enumerate() {
            problem.check_task(t).map_err(located(format!("tasks[{k}]")))?;
        }
        Ok(problem)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Problem::from_document(&ProblemDocument::parse(text)?)
    }

    /// The same document resolved over another field.
    pub fn over(&self, field: FieldSpec) -> Result<Problem> {
        Problem::from_document(&ProblemDocument { field, ..self.document.clone() })
    }

    fn complex_named(&self, name: &str) -> Result<&ComplexWindow> {
        self.complexes
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::schema("complex", format!("unknown complex {name:?}")))
    }

    fn check_task(&self, t: &TaskDoc) -> Result<()> {
        let def = |n: &str| {
            if self.deformations.contains_key(n) {
                Ok(())
            } else {
                Err(Error::schema("deformation", format!("unknown deformation {n:?}")))
            }
        };
        match t {
            TaskDoc::Hh { .. } | TaskDoc::Check => Ok(()),
            TaskDoc::Embr { cochain } => match cochain {
                Some(c) if !self.cochains.contains_key(c) => Err(Error::schema("cochain", format!("unknown cochain {c:?}"))),
                _ => Ok(()),
            },
            TaskDoc::Obstruct { deformation, complex } | TaskDoc::Lift { deformation, complex } => {
                def(deformation)?;
                self.complex_named(complex).map(|_| ())
            }
            TaskDoc::Gauge { from, to, h } => {
                def(from)?;
                def(to)?;
                if self.cochains.contains_key(h) {
                    Ok(())
                } else {
                    Err(Error::schema("h", format!("unknown cochain {h:?}")))
                }
            }
            TaskDoc::Locus { deformation } | TaskDoc::Centrality { deformation } => def(deformation),
            TaskDoc::Precomplexes { deformation, gamma } => {
                def(deformation)?;
                for name in gamma.keys() {
                    self.complex_named(name)?;
                }
                Ok(())
            }
        }
    }

    /// The validated structure.
    pub fn category(&self) -> Result<StructuredCategory> {
        StructuredCategory::new(self.quiver.clone(), self.mu.clone(), self.kind)
    }

    /// `scale · cocycle + d(coboundary_of)` as a validated deformation.
    pub fn deformation(&self, cat: &StructuredCategory, name: &str) -> Result<FirstOrderDeformation> {
        let d = self
            .deformations
            .get(name)
            .ok_or_else(|| Error::schema("deformation", format!("unknown deformation {name:?}")))?;
        let field = self.quiver.field();
        let mut phi = Cochain::zero(2);
        if let Some(c) = &d.cocycle {
            let s = match &d.scale {
                Some(s) => field.parse_scalar(s)?,
                None => field.one(),
            };
            phi.add_assign(&self.cochains[c].scaled(&s))?;
        }
        if let Some(c) = &d.coboundary_of {
            phi.add_assign(&cat.d(&self.cochains[c]))?;
        }
        FirstOrderDeformation::new(cat.clone(), phi)
    }

    pub fn deformation_names(&self) -> Vec<String> {
        self.deformations.keys().cloned().collect()
    }

    /// `δ'` for each complex from position-indexed components.
    pub fn gamma(&self, entries: &BTreeMap<String, Vec<MapEntryDoc>>) -> Result<Vec<MorphismMatrix>> {
        self.complexes
            .iter()
            .map(|c| {
                let mut m = MorphismMatrix::new();
                let index: BTreeMap<i64, usize> = c.positions().enumerate().map(|(k, p)| (p, k)).collect();
                for e in entries.get(&c.name).map(Vec::as_slice).unwrap_or(&[]) {
                    let (Some(&i), Some(&j)) = (index.get(&e.from), index.get(&e.to)) else {
                        return Err(Error::schema(format!("gamma.{}", c.name), format!("no terms at {} → {}", e.from, e.to)));
                    };
                    m.add(j, i, &value(&self.quiver, c.terms[&e.from], c.terms[&e.to], &e.value)?);
                }
                Ok(m)
            })
            .collect()
    }

    /// The position-indexed map as a matrix of base components.
    pub fn map_matrix(&self, m: &MapSpec) -> Result<MorphismMatrix> {
        let src = self.complex_named(&m.source)?;
        let tgt = self.complex_named(&m.target)?;
        let idx = |c: &ComplexWindow, p: i64| c.positions().position(|r| r == p).expect("positions of existing terms");
        let mut out = MorphismMatrix::new();
        for (from, to, v) in &m.entries {
            out.add(idx(tgt, *to), idx(src, *from), v);
        }
        Ok(out)
    }
}
