//! Homogeneous linear maps between basis-presented graded spaces and their
//! tensor products.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::graded::quiver::{ArrowId, GradedQuiver, LinComb, ObjId};
use crate::graded::sign::koszul_swap_sign;

/// A degree `p` map `a(source.0, source.1) → a(target.0, target.1)` given on
/// basis arrows. Arrows without an image map to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMorphism {
    pub source: (ObjId, ObjId),
    pub target: (ObjId, ObjId),
    pub degree: i64,
    images: BTreeMap<ArrowId, LinComb>,
}

/// An element of a tensor product of hom spaces: basis tensors (tensor order)
/// with coefficients.
pub type Tensor = BTreeMap<Vec<ArrowId>, Scalar>;

impl GradedMorphism {
    pub fn new(
        q: &GradedQuiver,
        source: (ObjId, ObjId),
        target: (ObjId, ObjId),
        degree: i64,
        images: impl IntoIterator<Item = (ArrowId, LinComb)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (a, img) in images {
            if !q.hom(source.0, source.1).contains(&a) {
                return Err(Error::NotComposable(format!(
                    "{} is not in the source hom space",
                    q.arrow(a).name
                )));
            }
            for (b, _) in img.iter() {
                let arr = q.arrow(b);
                if (arr.source, arr.target) != target {
                    return Err(Error::NotComposable(format!("{} is not in the target hom space", arr.name)));
                }
                if arr.degree != q.degree(a) + degree {
                    return Err(Error::Degree(format!(
                        "{} ↦ {} does not have degree {degree}",
                        q.arrow(a).name,
                        arr.name
                    )));
                }
            }
            if !img.is_zero() {
                map.insert(a, img);
            }
        }
        Ok(GradedMorphism { source, target, degree, images: map })
    }

    pub fn identity(q: &GradedQuiver, source: ObjId, target: ObjId) -> Self {
        let images = q
            .hom(source, target)
            .iter()
            .map(|&a| (a, LinComb::single(a, q.field().one())))
            .collect();
        GradedMorphism {
            source: (source, target),
            target: (source, target),
            degree: 0,
            images,
        }
    }

    pub fn apply(&self, a: ArrowId) -> LinComb {
        self.images.get(&a).cloned().unwrap_or_default()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMorphism) -> Result<GradedMorphism> {
        if other.target != self.source {
            return Err(Error::NotComposable("morphism targets and sources differ".into()));
        }
        let mut images = BTreeMap::new();
        for (a, img) in &other.images {
            let mut out = LinComb::new();
            for (b, c) in img.iter() {
                out.add_scaled(&self.apply(b), c);
            }
            if !out.is_zero() {
                images.insert(*a, out);
            }
        }
        Ok(GradedMorphism {
            source: other.source,
            target: self.target,
            degree: self.degree + other.degree,
            images,
        })
    }
}

/// `(f_1 ⊗ … ⊗ f_n)(x_1 ⊗ … ⊗ x_n)` with the Koszul rule: `f_t` passes
/// `x_1, …, x_{t-1}`.
pub fn tensor_apply(q: &GradedQuiver, fs: &[&GradedMorphism], x: &[ArrowId]) -> Result<Tensor> {
    if fs.len() != x.len() {
        return Err(Error::ArityMismatch { expected: fs.len(), found: x.len() });
    }
    let mut out: Tensor = BTreeMap::new();
    out.insert(Vec::new(), q.field().one());
    let mut passed = 0i64;
    for (f, &xi) in fs.iter().zip(x) {
        let sign = koszul_swap_sign(f.degree, passed);
        passed += q.degree(xi);
        let img = f.apply(xi);
        let mut next: Tensor = BTreeMap::new();
        for (prefix, c) in &out {
            for (b, d) in img.iter() {
                let mut key = prefix.clone();
                key.push(b);
                let v = sign.apply(c * d);
                let e = next.entry(key).or_insert_with(|| q.field().zero());
                *e += &v;
            }
        }
        next.retain(|_, v| !v.is_zero());
        out = next;
    }
    Ok(out)
}

/// Extends [`tensor_apply`] linearly to tensors.
pub fn tensor_apply_linear(q: &GradedQuiver, fs: &[&GradedMorphism], x: &Tensor) -> Result<Tensor> {
    let mut out: Tensor = BTreeMap::new();
    for (basis, c) in x {
        for (k, v) in tensor_apply(q, fs, basis)? {
            let e = out.entry(k).or_insert_with(|| q.field().zero());
            *e += &(c * &v);
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}
