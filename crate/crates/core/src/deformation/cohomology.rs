use crate::ainf::{Kind, StructuredCategory};
use crate::error::{Error, Result};
use crate::exact::{homology, FieldSpec, Homology, SparseMatrix, Vector};
use crate::graded::{ArrowId, LinComb, ObjId};
use crate::hochschild::{cochain_basis, coordinates, from_coordinates, BasisElement, Cochain};
use crate::twisted::Precomplexes;

/// `HH^p` of a linear category with chosen representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochschildCohomology {
    pub degree: usize,
    pub dim: usize,
    pub cochain_dim: usize,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub representatives: Vec<Cochain>,
}

/// Matrix of `d: C^{0,p} → C^{0,p+1}` in the standard bases.
fn differential_matrix(cat: &StructuredCategory, from: &[BasisElement], to: &[BasisElement], p: usize) -> Result<SparseMatrix> {
    let field = cat.quiver().field();
    let columns: Vec<Vector> = (0..from.len())
        .map(|k| {
            let mut e = vec![field.zero(); from.len()];
            e[k] = field.one();
            let phi = from_coordinates(p as i64, from, &e);
            coordinates(&cat.d(&phi), to, field)
        })
        .collect();
    SparseMatrix::from_columns(field, to.len(), &columns)
}

/// `HH^p(a)` for a linear category concentrated in degree zero, where
/// `C^p = C^{0,p}` is finite. Representatives are the kernel basis vectors
/// (free variables set to zero) that stay independent modulo the
/// coboundaries, taken in order.
pub fn hochschild_cohomology(cat: &StructuredCategory, p: usize) -> Result<HochschildCohomology> {
    if cat.kind() != Kind::Linear || !cat.quiver().is_degree_zero() {
        return Err(Error::KindViolation {
            kind: cat.kind().to_string(),
            detail: "Hochschild cohomology is computed for linear categories in degree zero".into(),
        });
    }
    let q = cat.quiver();
    let here = cochain_basis(q, p, 0);
    let next = cochain_basis(q, p + 1, 0);
    let outgoing = differential_matrix(cat, &here, &next, p)?;
    let incoming = match p.checked_sub(1) {
        Some(pm) => differential_matrix(cat, &cochain_basis(q, pm, 0), &here, pm)?,
        None => SparseMatrix::zeros(q.field(), here.len(), 0),
    };
    let h = homology(&incoming, &outgoing)?;
    Ok(HochschildCohomology {
        degree: p,
        dim: h.dim,
        cochain_dim: here.len(),
        cocycle_dim: h.cycle_dim,
        coboundary_dim: h.boundary_rank,
        representatives: h.representatives.iter().map(|v| from_coordinates(p as i64, &here, v)).collect(),
    })
}

/// Some `h ∈ C^{p-1}` with `d(h) = ψ` for `ψ ∈ C^p`, or `None` when `ψ` is
/// not a coboundary. Same preconditions as [`hochschild_cohomology`].
pub fn coboundary_preimage(cat: &StructuredCategory, psi: &Cochain) -> Result<Option<Cochain>> {
    let q = cat.quiver();
    let p = psi.hochschild_degree();
    if cat.kind() != Kind::Linear || !q.is_degree_zero() || p < 1 {
        return Err(Error::KindViolation {
            kind: cat.kind().to_string(),
            detail: "coboundaries are solved for linear categories in degree zero".into(),
        });
    }
    let (here, next) = (cochain_basis(q, p as usize - 1, 0), cochain_basis(q, p as usize, 0));
    let d = differential_matrix(cat, &here, &next, p as usize - 1)?;
    let target = coordinates(psi, &next, q.field());
    if from_coordinates(p, &next, &target) != *psi {
        return Ok(None);
    }
    Ok(d.solve(&target)?.map(|v| from_coordinates(p - 1, &here, &v)))
}

/// The differential of a (pre)complex category on morphisms:
/// `f ↦ μ_1(f)`.
pub fn com_differential(com: &Precomplexes, f: &LinComb) -> LinComb {
    let d = com.ambient.differential();
    let q = com.tw.quiver();
    let mut out = LinComb::new();
    for (a, c) in f.iter() {
        out.add_scaled(&d.eval(q.arrow(a).source, &[a]), c);
    }
    out
}

/// `H^n Com(a)(C, D)`, the homotopy category hom `K(a)(C, D[n])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyHom {
    pub source: ObjId,
    pub target: ObjId,
    pub degree: i64,
    field: FieldSpec,
    below: Vec<ArrowId>,
    here: Vec<ArrowId>,
    incoming: SparseMatrix,
    outgoing: SparseMatrix,
    homology: Homology,
}

fn coords_in(field: FieldSpec, basis: &[ArrowId], f: &LinComb) -> Result<Vector> {
    let mut v = vec![field.zero(); basis.len()];
    for (a, c) in f.iter() {
        let k = basis
            .iter()
            .position(|&b| b == a)
            .ok_or_else(|| Error::Degree(format!("arrow {a:?} outside the hom space")))?;
        v[k] = c.clone();
    }
    Ok(v)
}

fn combination(basis: &[ArrowId], v: &[crate::exact::Scalar]) -> LinComb {
    let mut out = LinComb::new();
    for (&a, c) in basis.iter().zip(v) {
        out.add_term(a, c);
    }
    out
}

impl HomotopyHom {
    pub fn new(com: &Precomplexes, source: ObjId, target: ObjId, degree: i64) -> Result<Self> {
        let q = com.tw.quiver();
        let field = q.field();
        let below = q.hom_of_degree(source, target, degree - 1);
        let here = q.hom_of_degree(source, target, degree);
        let above = q.hom_of_degree(source, target, degree + 1);
        let matrix = |from: &[ArrowId], to: &[ArrowId]| -> Result<SparseMatrix> {
            let cols = from
                .iter()
                .map(|&a| coords_in(field, to, &com_differential(com, &LinComb::single(a, field.one()))))
                .collect::<Result<Vec<_>>>()?;
            SparseMatrix::from_columns(field, to.len(), &cols)
        };
        let incoming = matrix(&below, &here)?;
        let outgoing = matrix(&here, &above)?;
        let homology = homology(&incoming, &outgoing)?;
        Ok(HomotopyHom { source, target, degree, field, below, here, incoming, outgoing, homology })
    }

    pub fn dim(&self) -> usize {
        self.homology.dim
    }

    pub fn cocycle_dim(&self) -> usize {
        self.homology.cycle_dim
    }

    pub fn boundary_dim(&self) -> usize {
        self.homology.boundary_rank
    }

    /// Dimension of the cochain space `Com(a)(C, D)^n`.
    pub fn cochain_dim(&self) -> usize {
        self.here.len()
    }

    pub fn representatives(&self) -> Vec<LinComb> {
        self.homology.representatives.iter().map(|v| combination(&self.here, v)).collect()
    }

    pub fn is_cocycle(&self, f: &LinComb) -> Result<bool> {
        let v = coords_in(self.field, &self.here, f)?;
        Ok(self.outgoing.mul_vec(&v)?.iter().all(|c| c.is_zero()))
    }

    /// Some `h` with `d(h) = f`, if `f` is a coboundary.
    pub fn boundary_preimage(&self, f: &LinComb) -> Result<Option<LinComb>> {
        let v = coords_in(self.field, &self.here, f)?;
        Ok(self.incoming.solve(&v)?.map(|x| combination(&self.below, &x)))
    }

    /// Class equality, decided by solving `d(h) = f - g`.
    pub fn same_class(&self, f: &LinComb, g: &LinComb) -> Result<bool> {
        let mut diff = f.clone();
        diff.add(&g.negated());
        Ok(self.boundary_preimage(&diff)?.is_some())
    }
}
