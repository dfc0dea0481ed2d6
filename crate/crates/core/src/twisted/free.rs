use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graded::{GradedQuiver, LinComb, ObjId};

/// `Σ^shift A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Summand {
    pub shift: i64,
    pub object: ObjId,
}

/// A finite formal sum `⊕_i Σ^{m_i} A_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeObject {
    pub summands: Vec<Summand>,
}

impl FreeObject {
    pub fn new(summands: Vec<Summand>) -> Self {
        FreeObject { summands }
    }

    pub fn single(object: ObjId) -> Self {
        FreeObject { summands: vec![Summand { shift: 0, object }] }
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }
}

/// Indices into the summands of a free object.
pub type ReachabilitySet = BTreeSet<usize>;

/// A matrix `(f_{ji})` of base morphisms. Entry `(j, i)` goes from summand
/// `i` of the source to summand `j` of the target; zero entries are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorphismMatrix {
    entries: BTreeMap<(usize, usize), LinComb>,
}

impl MorphismMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, j: usize, i: usize, value: LinComb) {
        if value.is_zero() {
            self.entries.remove(&(j, i));
        } else {
            self.entries.insert((j, i), value);
        }
    }

    pub fn add(&mut self, j: usize, i: usize, value: &LinComb) {
        let mut v = self.get(j, i);
        v.add(value);
        self.set(j, i, v);
    }

    pub fn get(&self, j: usize, i: usize) -> LinComb {
        self.entries.get(&(j, i)).cloned().unwrap_or_default()
    }

    /// `((j, i), f_{ji})` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &LinComb)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn with_entry(mut self, j: usize, i: usize, value: LinComb) -> Self {
        self.set(j, i, value);
        self
    }
}

/// `Φ_f(S) = { j | ∃ i ∈ S, f_{ji} ≠ 0 }`.
pub fn phi_reach(f: &MorphismMatrix, s: &ReachabilitySet) -> ReachabilitySet {
    f.entries().filter(|((_, i), _)| s.contains(i)).map(|((j, _), _)| *j).collect()
}

/// Outcome of [`is_iln`]: the least `N` with `Φ_f^N(I) = ∅`, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Nilpotence {
    pub index: Option<usize>,
}

impl Nilpotence {
    pub fn is_iln(&self) -> bool {
        self.index.is_some()
    }
}

/// Intrinsic local nilpotence of a square matrix on `size` indices. For a
/// finite index set this is acyclicity of the support digraph.
pub fn is_iln(f: &MorphismMatrix, size: usize) -> Nilpotence {
    let mut s: ReachabilitySet = (0..size).collect();
    for n in 0..=size {
        if s.is_empty() {
            return Nilpotence { index: Some(n) };
        }
        s = phi_reach(f, &s);
    }
    Nilpotence { index: None }
}

/// A couple `(M, δ_M)` with `δ_M` of degree 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedObject {
    pub name: String,
    pub carrier: FreeObject,
    pub delta: MorphismMatrix,
}

impl TwistedObject {
    pub fn new(name: impl Into<String>, carrier: FreeObject, delta: MorphismMatrix) -> Self {
        TwistedObject { name: name.into(), carrier, delta }
    }

    /// A base object seen as `(Σ^0 A, 0)`.
    pub fn base(q: &GradedQuiver, object: ObjId) -> Self {
        TwistedObject::new(q.object_name(object), FreeObject::single(object), MorphismMatrix::new())
    }

    /// Checks that every entry of `δ_M` is a base morphism `A_i → A_j` of
    /// degree `1 - m_i + m_j`, so that it has degree 1 after shifting.
    pub fn validate(&self, q: &GradedQuiver) -> Result<()> {
        let n = self.carrier.len();
        for s in &self.carrier.summands {
            if s.object.0 >= q.num_objects() {
                return Err(Error::UnknownObject(format!("{} in {}", s.object, self.name)));
            }
        }
        for ((j, i), v) in self.delta.entries() {
            if *i >= n || *j >= n {
                return Err(Error::DimensionMismatch { expected: n, found: (*i).max(*j) + 1 });
            }
            let (si, sj) = (self.carrier.summands[*i], self.carrier.summands[*j]);
            let want = 1 - si.shift + sj.shift;
            for (a, _) in v.iter() {
                let arr = q.arrow(a);
                if arr.source != si.object || arr.target != sj.object {
                    return Err(Error::NotComposable(format!(
                        "{} at entry ({j}, {i}) of {} does not lie in hom({}, {})",
                        arr.name,
                        self.name,
                        q.object_name(si.object),
                        q.object_name(sj.object)
                    )));
                }
                if arr.degree != want {
                    return Err(Error::Degree(format!(
                        "{} at entry ({j}, {i}) of {} has degree {} but {} is required",
                        arr.name, self.name, arr.degree, want
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn nilpotence(&self) -> Nilpotence {
        is_iln(&self.delta, self.carrier.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::FieldSpec;
    use crate::graded::ArrowId;

    fn one() -> LinComb {
        LinComb::single(ArrowId(0), FieldSpec::Rational.one())
    }

    #[test]
    fn reach_examples() {
        let all: ReachabilitySet = (0..3).collect();
        assert!(phi_reach(&MorphismMatrix::new(), &all).is_empty());
        let id = (0..3).fold(MorphismMatrix::new(), |m, k| m.with_entry(k, k, one()));
        assert_eq!(phi_reach(&id, &[0, 2].into()), [0, 2].into());
        let shift = MorphismMatrix::new().with_entry(1, 0, one()).with_entry(2, 1, one());
        assert_eq!(phi_reach(&shift, &[0].into()), [1].into());
    }

    #[test]
    fn nilpotence_examples() {
        let full = MorphismMatrix::new()
            .with_entry(1, 0, one())
            .with_entry(2, 0, one())
            .with_entry(2, 1, one());
        assert_eq!(is_iln(&full, 3).index, Some(3));
        let sparse = MorphismMatrix::new().with_entry(2, 0, one());
        assert_eq!(is_iln(&sparse, 3).index, Some(2));
        assert_eq!(is_iln(&MorphismMatrix::new(), 3).index, Some(1));
        assert_eq!(is_iln(&MorphismMatrix::new(), 0).index, Some(0));
        let lp = MorphismMatrix::new().with_entry(0, 0, one());
        assert!(!is_iln(&lp, 1).is_iln());
        let cycle = MorphismMatrix::new().with_entry(1, 0, one()).with_entry(0, 1, one());
        assert!(!is_iln(&cycle, 2).is_iln());
    }

    #[test]
    fn least_index_is_exact() {
        let chain = (0..4).fold(MorphismMatrix::new(), |m, k| m.with_entry(k + 1, k, one()));
        let n = is_iln(&chain, 5).index.unwrap();
        let mut s: ReachabilitySet = (0..5).collect();
        for _ in 0..n - 1 {
            s = phi_reach(&chain, &s);
        }
        assert!(!s.is_empty());
        assert!(phi_reach(&chain, &s).is_empty());
    }
}
