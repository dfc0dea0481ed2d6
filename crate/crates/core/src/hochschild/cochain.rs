//! Hochschild cochains at the `a` level and at the `Σa` level.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::graded::{canonical_iso_sign, ArrowId, GradedQuiver, LinComb, ObjId};

/// A component index: the source object `A_0` and the arguments
/// `(f_n, …, f_1)` in tensor order, so `f_1` (the last entry) starts at `A_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Key {
    pub start: ObjId,
    pub args: Vec<ArrowId>,
}

impl Key {
    pub fn new(start: ObjId, args: Vec<ArrowId>) -> Self {
        Key { start, args }
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    /// `A_n`, the end of the composable path.
    pub fn end(&self, q: &GradedQuiver) -> ObjId {
        self.args.first().map_or(self.start, |&a| q.arrow(a).target)
    }
}

/// Shared sparse storage for both presentations.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct Table(BTreeMap<Key, LinComb>);

impl Table {
    fn add(&mut self, key: Key, value: &LinComb) {
        if value.is_zero() {
            return;
        }
        let slot = self.0.entry(key.clone()).or_default();
        slot.add(value);
        if slot.is_zero() {
            self.0.remove(&key);
        }
    }

    fn add_scaled(&mut self, other: &Table, c: &Scalar) {
        for (k, v) in &other.0 {
            self.add(k.clone(), &v.scaled(c));
        }
    }
}

macro_rules! cochain_common {
    ($t:ident) => {
        impl $t {
            /// The zero cochain of the given degree.
            pub fn zero(degree: i64) -> Self {
                $t { degree, table: Table::default() }
            }

            pub fn degree(&self) -> i64 {
                self.degree
            }

            pub fn is_zero(&self) -> bool {
                self.table.0.is_empty()
            }

            pub fn entries(&self) -> impl Iterator<Item = (&Key, &LinComb)> {
                self.table.0.iter()
            }

            pub fn len(&self) -> usize {
                self.table.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.table.0.is_empty()
            }

            pub fn get(&self, key: &Key) -> Option<&LinComb> {
                self.table.0.get(key)
            }

            /// Adds `value` to the component at `key` (no validation).
            pub fn add_entry(&mut self, key: Key, value: &LinComb) {
                self.table.add(key, value);
            }

            /// Sorted list of the arities present in the support.
            pub fn arities(&self) -> Vec<usize> {
                let mut v: Vec<usize> = self.table.0.keys().map(Key::arity).collect();
                v.dedup();
                v.sort_unstable();
                v.dedup();
                v
            }

            pub fn max_arity(&self) -> Option<usize> {
                self.table.0.keys().map(Key::arity).max()
            }

            /// The components of arity `n` only.
            pub fn arity_component(&self, n: usize) -> Self {
                self.filter(|k| k.arity() == n)
            }

            pub fn filter(&self, keep: impl Fn(&Key) -> bool) -> Self {
                $t {
                    degree: self.degree,
                    table: Table(
                        self.table
                            .0
                            .iter()
                            .filter(|(k, _)| keep(k))
                            .map(|(k, v)| (k.clone(), v.clone()))
                            .collect(),
                    ),
                }
            }

            /// `self + c·other`; degrees must agree unless one side is zero.
            pub fn add_scaled(&mut self, other: &Self, c: &Scalar) -> Result<()> {
                if other.is_zero() {
                    return Ok(());
                }
                if self.is_zero() {
                    self.degree = other.degree;
                } else if self.degree != other.degree {
                    return Err(Error::Degree(format!(
                        "cannot add cochains of degrees {} and {}",
                        self.degree, other.degree
                    )));
                }
                self.table.add_scaled(&other.table, c);
                Ok(())
            }

            /// `self += other`; degrees must agree unless one side is zero.
            pub fn add_assign(&mut self, other: &Self) -> Result<()> {
                if other.is_zero() {
                    return Ok(());
                }
                if self.is_zero() {
                    self.degree = other.degree;
                } else if self.degree != other.degree {
                    return Err(Error::Degree(format!(
                        "cannot add cochains of degrees {} and {}",
                        self.degree, other.degree
                    )));
                }
                for (k, v) in &other.table.0 {
                    self.table.add(k.clone(), v);
                }
                Ok(())
            }

            pub fn plus(&self, other: &Self) -> Result<Self> {
                let mut out = self.clone();
                out.add_assign(other)?;
                Ok(out)
            }

            pub fn minus(&self, other: &Self) -> Result<Self> {
                self.plus(&other.negated())
            }

            pub fn scaled(&self, c: &Scalar) -> Self {
                let mut out = $t::zero(self.degree);
                out.table.add_scaled(&self.table, c);
                out
            }

            pub fn negated(&self) -> Self {
                $t {
                    degree: self.degree,
                    table: Table(self.table.0.iter().map(|(k, v)| (k.clone(), v.negated())).collect()),
                }
            }

        }
    };
}

/// A Hochschild cochain `φ ∈ C^p(a) = ∏_{i+n=p} C^{i,n}(a)`, stored by
/// Hochschild degree `p`. A component of arity `n` has internal degree `p - n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: i64,
    table: Table,
}

/// An element of `C_br(a) = [T(Σa), Σa]`, stored by its degree there. The
/// values are basis arrows standing for their suspensions `σf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuspendedCochain {
    degree: i64,
    table: Table,
}

cochain_common!(Cochain);
cochain_common!(SuspendedCochain);

impl Cochain {
    pub(crate) fn map_values(&self, f: impl Fn(&Key, &LinComb) -> LinComb) -> Self {
        let mut out = Cochain::zero(self.degree);
        for (k, v) in self.entries() {
            out.add_entry(k.clone(), &f(k, v));
        }
        out
    }

    /// Hochschild degree `p`.
    pub fn hochschild_degree(&self) -> i64 {
        self.degree
    }

    /// Internal degree of the arity `n` component.
    pub fn internal_degree(&self, n: usize) -> i64 {
        self.degree - n as i64
    }

    /// Builds a cochain in `C^{i,n}` from `(start, args, value)` records,
    /// validating paths and degrees.
    pub fn homogeneous(
        q: &GradedQuiver,
        arity: usize,
        internal_degree: i64,
        records: impl IntoIterator<Item = (ObjId, Vec<ArrowId>, LinComb)>,
    ) -> Result<Cochain> {
        let mut out = Cochain::zero(internal_degree + arity as i64);
        for (start, args, value) in records {
            if args.len() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: args.len() });
            }
            out.add_entry(Key::new(start, args), &value);
        }
        out.validate(q)?;
        Ok(out)
    }

    /// The arity-1 identity cochain `f ↦ f`.
    pub fn identity(q: &GradedQuiver) -> Cochain {
        let mut out = Cochain::zero(1);
        for (a, arr) in q.arrows() {
            out.add_entry(Key::new(arr.source, vec![a]), &LinComb::single(a, q.field().one()));
        }
        out
    }

    /// An arity-0 family `(γ_A)_A` with `γ_A ∈ a(A,A)^p`.
    pub fn from_zero_part(degree: i64, family: &ZeroPart) -> Cochain {
        let mut out = Cochain::zero(degree);
        for (o, v) in family {
            out.add_entry(Key::new(*o, Vec::new()), v);
        }
        out
    }

    /// Checks composability of every key and the degree of every value.
    pub fn validate(&self, q: &GradedQuiver) -> Result<()> {
        validate_table(q, &self.table, |k| self.internal_degree(k.arity()))
    }

    /// Evaluates the component at a basis tuple.
    pub fn eval(&self, start: ObjId, args: &[ArrowId]) -> LinComb {
        self.get(&Key::new(start, args.to_vec())).cloned().unwrap_or_default()
    }
}

impl SuspendedCochain {
    pub fn validate(&self, q: &GradedQuiver) -> Result<()> {
        // |σg| = |g| - 1 = degree + Σ(|f_t| - 1), i.e. |g| = degree + 1 - n + Σ|f_t|.
        validate_table(q, &self.table, |k| self.degree + 1 - k.arity() as i64)
    }
}

fn validate_table(q: &GradedQuiver, t: &Table, internal: impl Fn(&Key) -> i64) -> Result<()> {
    for (k, v) in &t.0 {
        let (a0, an) = q.path_ends(k.start, &k.args)?;
        let expected = internal(k) + k.args.iter().map(|&a| q.degree(a)).sum::<i64>();
        for (b, _) in v.iter() {
            let arr = q.arrow(b);
            if arr.source != a0 || arr.target != an {
                return Err(Error::NotComposable(format!(
                    "value {} does not lie in hom({}, {})",
                    arr.name,
                    q.object_name(a0),
                    q.object_name(an)
                )));
            }
            if arr.degree != expected {
                return Err(Error::Degree(format!(
                    "value {} has degree {} but {} is required",
                    arr.name, arr.degree, expected
                )));
            }
        }
    }
    Ok(())
}

/// A per-object family of endomorphisms, the arity-zero part of a cochain.
pub type ZeroPart = BTreeMap<ObjId, LinComb>;

/// Sign relating `φ` and its suspension on the arguments of `key`: the
/// canonical isomorphism with all shifts equal to one.
fn suspension_sign(q: &GradedQuiver, internal_degree: i64, key: &Key) -> crate::graded::Sign {
    let n = key.args.len();
    let degs: Vec<i64> = key.args.iter().map(|&a| q.degree(a)).collect();
    canonical_iso_sign(&vec![1; n], internal_degree, &degs).expect("lengths agree")
}

/// `φ ↦ σ^{1-n}φ`, component by component.
pub fn suspend(q: &GradedQuiver, phi: &Cochain) -> SuspendedCochain {
    let mut out = SuspendedCochain::zero(phi.degree - 1);
    for (k, v) in phi.entries() {
        let s = suspension_sign(q, phi.internal_degree(k.arity()), k);
        out.add_entry(k.clone(), &v.scaled(&s.apply(q.field().one())));
    }
    out
}

/// Inverse of [`suspend`].
pub fn unsuspend(q: &GradedQuiver, x: &SuspendedCochain) -> Cochain {
    let mut out = Cochain::zero(x.degree + 1);
    for (k, v) in x.entries() {
        let s = suspension_sign(q, out.internal_degree(k.arity()), k);
        out.add_entry(k.clone(), &v.scaled(&s.apply(q.field().one())));
    }
    out
}

/// The arity-zero part `π_0`.
pub fn project_zero(phi: &Cochain) -> ZeroPart {
    phi.entries()
        .filter(|(k, _)| k.args.is_empty())
        .map(|(k, v)| (k.start, v.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::FieldSpec;

    fn graded() -> GradedQuiver {
        GradedQuiver::builder(FieldSpec::Rational)
            .object("A")
            .arrow("A", "A", "e", 0)
            .arrow("A", "A", "u", 1)
            .arrow("A", "A", "w", 2)
            .build()
            .unwrap()
    }

    fn arrow(q: &GradedQuiver, n: &str) -> ArrowId {
        q.arrow_by_name(ObjId(0), ObjId(0), n).unwrap()
    }

    #[test]
    fn suspension_signs() {
        let q = graded();
        let one = || q.field().one();
        let (e, u, w) = (arrow(&q, "e"), arrow(&q, "u"), arrow(&q, "w"));
        // n = 0: always +1
        let c = Cochain::homogeneous(&q, 0, 2, [(ObjId(0), vec![], LinComb::single(w, one()))]).unwrap();
        assert_eq!(suspend(&q, &c).get(&Key::new(ObjId(0), vec![])), c.get(&Key::new(ObjId(0), vec![])));
        // n = 1, i = 1: -1
        let d = Cochain::homogeneous(&q, 1, 1, [(ObjId(0), vec![e], LinComb::single(u, one()))]).unwrap();
        assert_eq!(
            suspend(&q, &d).get(&Key::new(ObjId(0), vec![e])).unwrap(),
            &LinComb::single(u, -one())
        );
        // n = 2, i = 0, |f_2| even: +1
        let m = Cochain::homogeneous(&q, 2, 0, [(ObjId(0), vec![w, u], LinComb::single(w, one()))]);
        assert!(m.is_err(), "degree 3 value is not in the window");
        let m = Cochain::homogeneous(&q, 2, 0, [(ObjId(0), vec![e, u], LinComb::single(u, one()))]).unwrap();
        assert_eq!(suspend(&q, &m).get(&Key::new(ObjId(0), vec![e, u])).unwrap(), &LinComb::single(u, one()));
        // |f_2| odd flips
        let m = Cochain::homogeneous(&q, 2, 0, [(ObjId(0), vec![u, e], LinComb::single(u, one()))]).unwrap();
        assert_eq!(suspend(&q, &m).get(&Key::new(ObjId(0), vec![u, e])).unwrap(), &LinComb::single(u, -one()));
    }

    #[test]
    fn round_trip() {
        let q = graded();
        let one = q.field().one();
        let (e, u, w) = (arrow(&q, "e"), arrow(&q, "u"), arrow(&q, "w"));
        let phi = Cochain::homogeneous(
            &q,
            2,
            0,
            [
                (ObjId(0), vec![u, u], LinComb::single(w, one.clone())),
                (ObjId(0), vec![e, u], LinComb::single(u, -one.clone())),
                (ObjId(0), vec![u, e], LinComb::single(u, one.clone())),
            ],
        )
        .unwrap();
        let s = suspend(&q, &phi);
        s.validate(&q).unwrap();
        assert_eq!(s.degree(), 1);
        assert_eq!(unsuspend(&q, &s), phi);
    }

    #[test]
    fn project_zero_picks_arity_zero() {
        let q = graded();
        let one = q.field().one();
        let w = arrow(&q, "w");
        let u = arrow(&q, "u");
        let mut mu = Cochain::zero(2);
        mu.add_entry(Key::new(ObjId(0), vec![]), &LinComb::single(w, one.clone()));
        mu.add_entry(Key::new(ObjId(0), vec![u]), &LinComb::single(w, one.clone()));
        let z = project_zero(&mu);
        assert_eq!(z.len(), 1);
        assert!(project_zero(&mu.arity_component(1)).is_empty());
    }
}
