//! Coordinates on finite pieces of the Hochschild complex and random sampling.

use rand::Rng;

use crate::exact::{FieldSpec, Scalar};
use crate::graded::{ArrowId, GradedQuiver, LinComb};
use crate::hochschild::cochain::{Cochain, Key};

/// A basis element of `C^{i,n}`: the component at `key` sending the
/// arguments to `value` and every other basis tuple to zero.
pub type BasisElement = (Key, ArrowId);

/// The standard basis of `C^{i,n}(a)`.
pub fn cochain_basis(q: &GradedQuiver, arity: usize, internal_degree: i64) -> Vec<BasisElement> {
    let mut out = Vec::new();
    for (start, args) in q.composable_tuples(arity) {
        let key = Key::new(start, args);
        let end = key.end(q);
        let degree = internal_degree + key.args.iter().map(|&a| q.degree(a)).sum::<i64>();
        for b in q.hom_of_degree(start, end, degree) {
            out.push((key.clone(), b));
        }
    }
    out
}

/// The standard basis of `C^p(a)` restricted to arities `0..=arity_max`.
pub fn total_basis(q: &GradedQuiver, p: i64, arity_max: usize) -> Vec<BasisElement> {
    (0..=arity_max)
        .flat_map(|n| cochain_basis(q, n, p - n as i64))
        .collect()
}

/// Coordinates of `phi` in `basis`. Components outside the basis are ignored.
pub fn coordinates(phi: &Cochain, basis: &[BasisElement], field: FieldSpec) -> Vec<Scalar> {
    basis
        .iter()
        .map(|(k, b)| {
            phi.get(k)
                .and_then(|v| v.get(*b).cloned())
                .unwrap_or_else(|| field.zero())
        })
        .collect()
}

/// The cochain of Hochschild degree `p` with coordinates `v` in `basis`.
pub fn from_coordinates(p: i64, basis: &[BasisElement], v: &[Scalar]) -> Cochain {
    let mut out = Cochain::zero(p);
    for ((k, b), c) in basis.iter().zip(v) {
        out.add_entry(k.clone(), &LinComb::single(*b, c.clone()));
    }
    out
}

/// A random nonzero-ish scalar with small numerator.
pub fn random_scalar<R: Rng>(field: FieldSpec, rng: &mut R) -> Scalar {
    match field {
        FieldSpec::Rational => {
            let n = rng.gen_range(-3i64..=3);
            let d = rng.gen_range(1i64..=2);
            field.from_ratio(n, d).expect("nonzero denominator")
        }
        FieldSpec::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
    }
}

/// A random cochain in `C^{i,n}` where each basis coordinate is nonzero with
/// probability `density`.
pub fn random_cochain<R: Rng>(q: &GradedQuiver, arity: usize, internal_degree: i64, density: f64, rng: &mut R) -> Cochain {
    let basis = cochain_basis(q, arity, internal_degree);
    let mut out = Cochain::zero(internal_degree + arity as i64);
    for (k, b) in basis {
        if rng.gen_bool(density) {
            out.add_entry(k, &LinComb::single(b, random_scalar(q.field(), rng)));
        }
    }
    out
}
