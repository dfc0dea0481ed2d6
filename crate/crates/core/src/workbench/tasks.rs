//! Single computations on a resolved problem, each producing records.

use crate::ainf::{check_structure, StructuredCategory};
use crate::deformation::{
    coboundary_preimage, gauge_apply, hochschild_cohomology, verify_precomplexes, ChainMap, Lab, Locus, LocusEntry,
};
use crate::error::{Error, Result};
use crate::graded::{GradedQuiver, LinComb};
use crate::hochschild::{project_zero, Cochain};
use crate::twisted::{build_pcom, ComplexWindow};
use crate::workbench::document::{MapSpec, Problem, TaskDoc};
use crate::workbench::report::{Record, Status};

/// `start:(f_n,…,f_1)->value; …` in key order.
pub fn format_cochain(q: &GradedQuiver, c: &Cochain) -> String {
    if c.is_zero() {
        return "0".into();
    }
    c.entries()
        .map(|(k, v)| {
            let args: Vec<&str> = k.args.iter().map(|&a| q.arrow(a).name.as_str()).collect();
            format!("{}:({})->{}", q.object_name(k.start), args.join(","), q.format_lincomb(v))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

impl Problem {
    /// Complexes with `δ² = 0`; the others are only precomplexes.
    pub fn genuine_complexes(&self, cat: &StructuredCategory) -> Vec<ComplexWindow> {
        let m = cat.composition();
        self.complexes
            .iter()
            .filter(|c| c.delta_squared(cat.quiver(), &m).is_empty())
            .cloned()
            .collect()
    }

    pub fn lab(&self, cat: &StructuredCategory, deformation: &str, complexes: &[ComplexWindow]) -> Result<Lab> {
        Lab::new(self.deformation(cat, deformation)?, self.window, complexes)
    }

    /// A lab on the named complexes only; twisted quivers grow with the
    /// square of the total number of terms, so small labs are much cheaper.
    pub fn lab_on(&self, cat: &StructuredCategory, deformation: &str, names: &[&str]) -> Result<Lab> {
        let mut picked = Vec::new();
        for n in names {
            if !picked.iter().any(|c: &ComplexWindow| c.name == *n) {
                picked.push(single_complex(self, n)?);
            }
        }
        self.lab(cat, deformation, &picked)
    }

    /// The document's chain maps followed by the identity of every genuine
    /// complex.
    pub fn chain_map_specs(&self, cat: &StructuredCategory) -> Result<Vec<MapSpec>> {
        let mut out = self.maps.clone();
        for c in self.genuine_complexes(cat) {
            let entries = c
                .terms
                .iter()
                .map(|(&p, &o)| {
                    let unit = cat
                        .unit(o)
                        .ok_or_else(|| Error::InvalidStructure(format!("{} has no strict unit", self.quiver.object_name(o))))?;
                    Ok((p, p, LinComb::single(unit, self.quiver.field().one())))
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(MapSpec { name: format!("id_{}", c.name), source: c.name.clone(), target: c.name.clone(), degree: 0, entries });
        }
        Ok(out)
    }
}

pub fn hh(problem: &Problem, cat: &StructuredCategory, p: usize) -> Result<Vec<Record>> {
    let h = hochschild_cohomology(cat, p)?;
    let mut r = Record::new("hh", Status::Info)
        .field("problem", &problem.name)
        .field("degree", p)
        .field("dim", h.dim)
        .field("cochains", h.cochain_dim)
        .field("cocycles", h.cocycle_dim)
        .field("coboundaries", h.coboundary_dim);
    for (k, rep) in h.representatives.iter().enumerate() {
        r = r.field(format!("rep{k}"), format_cochain(cat.quiver(), rep));
    }
    Ok(vec![r])
}

pub fn check(problem: &Problem) -> Vec<Record> {
    let rep = check_structure(&problem.quiver, &problem.mu, problem.kind);
    let mut r = Record::check("structure", rep.passed())
        .field("problem", &problem.name)
        .field("kind", problem.kind);
    if let Some(v) = &rep.kind_violation {
        r = r.field("kind_violation", v);
    }
    if let Some(f) = &rep.first_failure {
        r = r.field("failure", f);
    }
    if let Some(c) = &rep.cdg {
        for (name, v) in [("dc", &c.dc), ("d_squared", &c.d_squared), ("leibniz", &c.leibniz), ("associativity", &c.associativity)] {
            r = r.field(name, v.as_deref().unwrap_or("ok"));
        }
    }
    vec![r]
}

/// `PCom(a)` on the document's precomplexes, or `embr_δ(φ)` of a named
/// cochain: one record per object with its arity-zero part.
pub fn embr(problem: &Problem, cat: &StructuredCategory, cochain: Option<&str>) -> Result<Vec<Record>> {
    let pcom = build_pcom(cat, problem.window, &problem.complexes)?;
    let tw = &pcom.tw;
    let q = tw.quiver();
    let image = match cochain {
        Some(name) => tw.embr(&problem.cochains[name])?,
        None => pcom.ambient.mu().clone(),
    };
    let zero = project_zero(&image);
    let mut out = vec![Record::check("embr", pcom.category.report().passed())
        .field("problem", &problem.name)
        .field("cochain", cochain.unwrap_or("structure"))
        .field("objects", tw.twisted_objects().len())
        .field("components", image.len())];
    for o in tw.twisted_objects() {
        let v = zero.get(&o).cloned().unwrap_or_default();
        out.push(
            Record::new("embr-object", Status::Info)
                .field("object", q.object_name(o))
                .field("zero_part", q.format_lincomb(&v)),
        );
    }
    Ok(out)
}

fn single_complex(problem: &Problem, name: &str) -> Result<ComplexWindow> {
    problem
        .complexes
        .iter()
        .find(|c| c.name == name)
        .cloned()
        .ok_or_else(|| Error::schema("complex", format!("unknown complex {name:?}")))
}

pub fn obstruct(problem: &Problem, cat: &StructuredCategory, deformation: &str, complex: &str, with_witness: bool) -> Result<Vec<Record>> {
    let lab = problem.lab(cat, deformation, &[single_complex(problem, complex)?])?;
    let c = lab.object(complex)?;
    let r = lab.obstruction_and_lift(c)?;
    let q = lab.com().tw.quiver();
    let mut rec = Record::check(if with_witness { "lift" } else { "obstruct" }, r.agrees())
        .field("problem", &problem.name)
        .field("deformation", deformation)
        .field("complex", complex)
        .field("verdict", if r.witness.is_some() { "lifts" } else { "obstructed" })
        .field("class", if r.vanishes { "zero" } else { "nonzero" })
        .field("representative", q.format_lincomb(&r.representative))
        .field("rank", format!("{}/{}", r.evidence.rank, r.evidence.augmented_rank))
        .field("unknowns", r.evidence.unknowns);
    if with_witness {
        rec = rec.field("witness", r.witness.as_ref().map_or("none".into(), |w| q.format_lincomb(w)));
        if let Some(d) = r.lift_space_dim {
            rec = rec.field("lift_space_dim", d);
        }
    }
    Ok(vec![rec])
}

pub fn gauge(problem: &Problem, cat: &StructuredCategory, from: &str, to: &str, h: &str) -> Result<Vec<Record>> {
    let a = problem.deformation(cat, from)?;
    let b = problem.deformation(cat, to)?;
    let rec = Record::new("gauge", Status::Pass)
        .field("problem", &problem.name)
        .field("from", from)
        .field("to", to)
        .field("h", h);
    Ok(vec![match gauge_apply(&a, &b, &problem.cochains[h]) {
        Ok(iso) => Record { status: Status::Pass, ..rec }.field("functor_eps_part", format_cochain(cat.quiver(), &iso.eps_part)),
        Err(Error::GaugeMismatch(residual)) => Record { status: Status::Fail, ..rec }.field("residual", residual),
        Err(e) => return Err(e),
    }])
}

/// Solves `d(h) = φ' - φ` and applies the gauge; fails when there is none.
pub fn solve_gauge(problem: &Problem, cat: &StructuredCategory, from: &str, to: &str) -> Result<Vec<Record>> {
    let a = problem.deformation(cat, from)?;
    let b = problem.deformation(cat, to)?;
    let diff = b.cocycle().minus(a.cocycle())?;
    let diff = if diff.is_zero() { Cochain::zero(2) } else { diff };
    let rec = Record::new("gauge", Status::Pass)
        .field("problem", &problem.name)
        .field("from", from)
        .field("to", to);
    Ok(vec![match coboundary_preimage(cat, &diff)? {
        Some(h) => {
            let iso = gauge_apply(&a, &b, &h)?;
            rec.field("h", format_cochain(cat.quiver(), &h))
                .field("functor_eps_part", format_cochain(cat.quiver(), &iso.eps_part))
        }
        None => Record { status: Status::Fail, ..rec }.field("residual", "φ' - φ is not a coboundary"),
    }])
}

pub fn locus(problem: &Problem, cat: &StructuredCategory, deformation: &str) -> Result<Vec<Record>> {
    let mut entries = Vec::new();
    for c in problem.genuine_complexes(cat) {
        let lab = problem.lab_on(cat, deformation, &[&c.name])?;
        let o = lab.object(&c.name)?;
        let r = lab.obstruction_and_lift(o)?;
        entries.push(LocusEntry { object: o, name: r.name, class_vanishes: r.vanishes, lifts: r.witness.is_some() });
    }
    let l = Locus { entries };
    Ok(vec![Record::check("locus", l.consistent())
        .field("problem", &problem.name)
        .field("deformation", deformation)
        .field("dg_part", l.dg_part().join(","))
        .field("curved_part", l.curved_part().join(","))])
}

/// Each chain map checked in a lab holding only its source and target.
pub fn centrality(problem: &Problem, cat: &StructuredCategory, deformation: &str) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for m in problem.chain_map_specs(cat)? {
        let lab = problem.lab_on(cat, deformation, &[&m.source, &m.target])?;
        let com = lab.com();
        let map = ChainMap::from_matrix(com, m.name.clone(), (com.object(&m.source)?, com.object(&m.target)?), m.degree, &problem.map_matrix(&m)?)?;
        let q = com.tw.quiver();
        for r in lab.verify_centrality(&[map])? {
            out.push(
                Record::check("centrality", r.passed())
                    .field("problem", &problem.name)
                    .field("deformation", deformation)
                    .field("map", &r.name)
                    .field("difference", q.format_lincomb(&r.difference))
                    .field("homotopy", r.homotopy.as_ref().map_or("none".into(), |h| q.format_lincomb(h))),
            );
        }
    }
    Ok(out)
}

pub fn precomplexes(problem: &Problem, cat: &StructuredCategory, deformation: &str, gamma: &std::collections::BTreeMap<String, Vec<crate::workbench::document::MapEntryDoc>>) -> Result<Vec<Record>> {
    let def = problem.deformation(cat, deformation)?;
    let g = problem.gamma(gamma)?;
    let r = verify_precomplexes(&def, problem.window, &problem.complexes, &g)?;
    let mut rec = Record::check("precomplexes", r.passed())
        .field("problem", &problem.name)
        .field("deformation", deformation)
        .field("objects", r.objects.join(","));
    if let Some(m) = &r.mismatch {
        rec = rec.field("mismatch", m);
    }
    if let Err(e) = &r.gauge {
        rec = rec.field("gauge", e);
    }
    Ok(vec![rec])
}

/// Runs one task of the document.
pub fn run_task(problem: &Problem, task: &TaskDoc) -> Result<Vec<Record>> {
    if let TaskDoc::Check = task {
        return Ok(check(problem));
    }
    let cat = problem.category()?;
    match task {
        TaskDoc::Check => unreachable!("handled above"),
        TaskDoc::Hh { degree } => hh(problem, &cat, *degree),
        TaskDoc::Embr { cochain } => embr(problem, &cat, cochain.as_deref()),
        TaskDoc::Obstruct { deformation, complex } => obstruct(problem, &cat, deformation, complex, false),
        TaskDoc::Lift { deformation, complex } => obstruct(problem, &cat, deformation, complex, true),
        TaskDoc::Gauge { from, to, h } => gauge(problem, &cat, from, to, h),
        TaskDoc::Locus { deformation } => locus(problem, &cat, deformation),
        TaskDoc::Centrality { deformation } => centrality(problem, &cat, deformation),
        TaskDoc::Precomplexes { deformation, gamma } => precomplexes(problem, &cat, deformation, gamma),
    }
}
