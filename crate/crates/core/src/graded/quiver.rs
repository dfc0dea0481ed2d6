//! Graded quivers with chosen bases.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{FieldSpec, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A named basis element of `a(source, target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: ObjId,
    pub target: ObjId,
    pub degree: i64,
}

/// A sparse linear combination of basis arrows. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct LinComb(BTreeMap<ArrowId, Scalar>);

impl LinComb {
    pub fn new() -> Self {
        LinComb(BTreeMap::new())
    }

    pub fn single(id: ArrowId, coeff: Scalar) -> Self {
        let mut l = LinComb::new();
        l.add_term(id, &coeff);
        l
    }

    pub fn add_term(&mut self, id: ArrowId, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.0.get_mut(&id) {
            Some(v) => {
                *v += coeff;
                if v.is_zero() {
                    self.0.remove(&id);
                }
            }
            None => {
                self.0.insert(id, coeff.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb, factor: &Scalar) {
        for (id, c) in &other.0 {
            self.add_term(*id, &(c * factor));
        }
    }

    pub fn add(&mut self, other: &LinComb) {
        for (id, c) in &other.0 {
            self.add_term(*id, c);
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> LinComb {
        let mut out = LinComb::new();
        out.add_scaled(self, factor);
        out
    }

    pub fn negated(&self) -> LinComb {
        LinComb(self.0.iter().map(|(k, v)| (*k, -v)).collect())
    }

    pub fn get(&self, id: ArrowId) -> Option<&Scalar> {
        self.0.get(&id)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (ArrowId, &Scalar)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn map_arrows(&self, f: impl Fn(ArrowId) -> ArrowId) -> LinComb {
        let mut out = LinComb::new();
        for (k, v) in self.iter() {
            out.add_term(f(k), v);
        }
        out
    }
}

impl FromIterator<(ArrowId, Scalar)> for LinComb {
    fn from_iter<I: IntoIterator<Item = (ArrowId, Scalar)>>(iter: I) -> Self {
        let mut l = LinComb::new();
        for (k, v) in iter {
            l.add_term(k, &v);
        }
        l
    }
}

/// A graded k-quiver: finitely many objects and finite-dimensional graded hom
/// spaces presented by named basis arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedQuiver {
    field: FieldSpec,
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    hom: BTreeMap<(ObjId, ObjId), Vec<ArrowId>>,
    window: (i64, i64),
}

pub struct QuiverBuilder {
    field: FieldSpec,
    objects: Vec<String>,
    arrows: Vec<(String, String, String, i64)>,
    window: Option<(i64, i64)>,
}

impl QuiverBuilder {
    pub fn object(mut self, name: impl Into<String>) -> Self {
        self.objects.push(name.into());
        self
    }

    pub fn arrow(
        mut self,
        source: impl Into<String>,
        target: impl Into<String>,
        name: impl Into<String>,
        degree: i64,
    ) -> Self {
        self.arrows.push((source.into(), target.into(), name.into(), degree));
        self
    }

    pub fn window(mut self, min: i64, max: i64) -> Self {
        self.window = Some((min, max));
        self
    }

    pub fn build(self) -> Result<GradedQuiver> {
        let mut index = BTreeMap::new();
        for (i, o) in self.objects.iter().enumerate() {
            if index.insert(o.clone(), ObjId(i)).is_some() {
                return Err(Error::schema("objects", format!("duplicate object {o:?}")));
            }
        }
        let window = self.window.unwrap_or_else(|| {
            let lo = self.arrows.iter().map(|a| a.3).min().unwrap_or(0);
            let hi = self.arrows.iter().map(|a| a.3).max().unwrap_or(0);
            (lo, hi)
        });
        let mut q = GradedQuiver {
            field: self.field,
            objects: self.objects,
            arrows: Vec::new(),
            hom: BTreeMap::new(),
            window,
        };
        for (s, t, name, degree) in self.arrows {
            let source = *index.get(&s).ok_or(Error::UnknownObject(s.clone()))?;
            let target = *index.get(&t).ok_or(Error::UnknownObject(t.clone()))?;
            q.push_arrow(Arrow { name, source, target, degree })?;
        }
        Ok(q)
    }
}

impl GradedQuiver {
    pub fn builder(field: FieldSpec) -> QuiverBuilder {
        QuiverBuilder {
            field,
            objects: Vec::new(),
            arrows: Vec::new(),
            window: None,
        }
    }

    /// Assembles a quiver from already-validated parts (used by constructions
    /// such as twisted objects and dual numbers).
    pub(crate) fn from_parts(field: FieldSpec, objects: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let lo = arrows.iter().map(|a| a.degree).min().unwrap_or(0);
        let hi = arrows.iter().map(|a| a.degree).max().unwrap_or(0);
        let mut q = GradedQuiver {
            field,
            objects,
            arrows: Vec::new(),
            hom: BTreeMap::new(),
            window: (lo, hi),
        };
        for a in arrows {
            q.push_arrow(a)?;
        }
        Ok(q)
    }

    fn push_arrow(&mut self, a: Arrow) -> Result<()> {
        let (min, max) = self.window;
        if a.degree < min || a.degree > max {
            return Err(Error::DegreeWindow { degree: a.degree, min, max });
        }
        let n = self.objects.len();
        if a.source.0 >= n || a.target.0 >= n {
            return Err(Error::UnknownObject(format!("{:?}", a)));
        }
        let list = self.hom.entry((a.source, a.target)).or_default();
        if list.iter().any(|&id| self.arrows[id.0].name == a.name) {
            return Err(Error::DuplicateArrow(a.name));
        }
        list.push(ArrowId(self.arrows.len()));
        self.arrows.push(a);
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn object_name(&self, o: ObjId) -> &str {
        &self.objects[o.0]
    }

    pub fn object_id(&self, name: &str) -> Result<ObjId> {
        self.objects
            .iter()
            .position(|o| o == name)
            .map(ObjId)
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id.0]
    }

    pub fn arrows(&self) -> impl Iterator<Item = (ArrowId, &Arrow)> {
        self.arrows.iter().enumerate().map(|(i, a)| (ArrowId(i), a))
    }

    pub fn degree(&self, id: ArrowId) -> i64 {
        self.arrows[id.0].degree
    }

    pub fn hom(&self, source: ObjId, target: ObjId) -> &[ArrowId] {
        self.hom.get(&(source, target)).map_or(&[], |v| v.as_slice())
    }

    pub fn hom_of_degree(&self, source: ObjId, target: ObjId, degree: i64) -> Vec<ArrowId> {
        self.hom(source, target)
            .iter()
            .copied()
            .filter(|&a| self.degree(a) == degree)
            .collect()
    }

    pub fn arrow_by_name(&self, source: ObjId, target: ObjId, name: &str) -> Result<ArrowId> {
        self.hom(source, target)
            .iter()
            .copied()
            .find(|&a| self.arrows[a.0].name == name)
            .ok_or_else(|| Error::UnknownArrow {
                name: name.to_string(),
                source_obj: self.object_name(source).to_string(),
                target_obj: self.object_name(target).to_string(),
            })
    }

    /// Whether every arrow has degree zero.
    pub fn is_degree_zero(&self) -> bool {
        self.arrows.iter().all(|a| a.degree == 0)
    }

    /// Checks that `args` (tensor order, last arrow first) is composable and
    /// returns `(A_0, A_n)`. For an empty tuple the object is `start`.
    pub fn path_ends(&self, start: ObjId, args: &[ArrowId]) -> Result<(ObjId, ObjId)> {
        let mut cur = start;
        for &a in args.iter().rev() {
            let arr = self.arrow(a);
            if arr.source != cur {
                return Err(Error::NotComposable(format!(
                    "{} does not start at {}",
                    arr.name,
                    self.object_name(cur)
                )));
            }
            cur = arr.target;
        }
        Ok((start, cur))
    }

    /// All composable `n`-tuples of basis arrows in tensor order, keyed by
    /// their source object `A_0`. For `n = 0` this is one empty tuple per object.
    pub fn composable_tuples(&self, n: usize) -> Vec<(ObjId, Vec<ArrowId>)> {
        let mut out = Vec::new();
        for start in self.objects() {
            let mut stack: Vec<(ObjId, Vec<ArrowId>)> = vec![(start, Vec::new())];
            while let Some((cur, rev_path)) = stack.pop() {
                if rev_path.len() == n {
                    let mut args = rev_path;
                    args.reverse();
                    out.push((start, args));
                    continue;
                }
                for tgt in self.objects() {
                    for &a in self.hom(cur, tgt).iter().rev() {
                        let mut p = rev_path.clone();
                        p.push(a);
                        stack.push((tgt, p));
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// The quiver with every basis arrow shifted by `Σ^i` (degree decreased by `i`).
    pub fn shift(&self, i: i64) -> GradedQuiver {
        GradedQuiver {
            field: self.field,
            objects: self.objects.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { degree: a.degree - i, ..a.clone() })
                .collect(),
            hom: self.hom.clone(),
            window: (self.window.0 - i, self.window.1 - i),
        }
    }

    /// The full subquiver on `objs` (in the given order) with the arrow map
    /// from the subquiver into `self`.
    pub fn full_subquiver(&self, objs: &[ObjId]) -> Result<(GradedQuiver, SubquiverMap)> {
        let mut obj_map = Vec::new();
        let mut names = Vec::new();
        for &o in objs {
            if o.0 >= self.objects.len() {
                return Err(Error::UnknownObject(o.to_string()));
            }
            if obj_map.contains(&o) {
                continue;
            }
            obj_map.push(o);
            names.push(self.objects[o.0].clone());
        }
        let mut arrows = Vec::new();
        let mut arrow_map = Vec::new();
        let pos = |o: ObjId| obj_map.iter().position(|&x| x == o);
        for (a, arr) in self.arrows() {
            if let (Some(si), Some(ti)) = (pos(arr.source), pos(arr.target)) {
                arrows.push(Arrow {
                    name: arr.name.clone(),
                    source: ObjId(si),
                    target: ObjId(ti),
                    degree: arr.degree,
                });
                arrow_map.push(a);
            }
        }
        let mut sub = GradedQuiver::from_parts(self.field, names, arrows)?;
        sub.window = self.window;
        Ok((sub, SubquiverMap { objects: obj_map, arrows: arrow_map }))
    }

    pub fn format_lincomb(&self, l: &LinComb) -> String {
        if l.is_zero() {
            return "0".into();
        }
        l.iter()
            .map(|(a, c)| format!("{}*{}", c.to_plain_string(), self.arrow(a).name))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Identification of a full subquiver with its image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubquiverMap {
    /// `objects[i]` is the ambient object of sub-object `i`.
    pub objects: Vec<ObjId>,
    /// `arrows[i]` is the ambient arrow of sub-arrow `i`.
    pub arrows: Vec<ArrowId>,
}

impl SubquiverMap {
    pub fn ambient_arrow(&self, a: ArrowId) -> ArrowId {
        self.arrows[a.0]
    }

    pub fn ambient_object(&self, o: ObjId) -> ObjId {
        self.objects[o.0]
    }

    pub fn sub_arrow(&self, a: ArrowId) -> Option<ArrowId> {
        self.arrows.iter().position(|&x| x == a).map(ArrowId)
    }

    pub fn sub_object(&self, o: ObjId) -> Option<ObjId> {
        self.objects.iter().position(|&x| x == o).map(ObjId)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e1() -> GradedQuiver {
        GradedQuiver::builder(FieldSpec::Rational)
            .object("A")
            .arrow("A", "A", "1", 0)
            .arrow("A", "A", "x", 0)
            .build()
            .unwrap()
    }

    #[test]
    fn shift_examples() {
        let q = e1();
        assert_eq!(q.shift(0), q);
        let s = q.shift(1);
        assert!(s.arrows().all(|(_, a)| a.degree == -1));
        assert_eq!(s.shift(-1), q);
    }

    #[test]
    fn duplicate_and_window_errors() {
        let dup = GradedQuiver::builder(FieldSpec::Rational)
            .object("A")
            .arrow("A", "A", "x", 0)
            .arrow("A", "A", "x", 0)
            .build();
        assert_eq!(dup, Err(Error::DuplicateArrow("x".into())));
        let win = GradedQuiver::builder(FieldSpec::Rational)
            .object("A")
            .arrow("A", "A", "x", 3)
            .window(-1, 1)
            .build();
        assert!(matches!(win, Err(Error::DegreeWindow { degree: 3, .. })));
        let unknown = GradedQuiver::builder(FieldSpec::Rational).arrow("A", "B", "f", 0).build();
        assert!(matches!(unknown, Err(Error::UnknownObject(_))));
    }

    #[test]
    fn composable_tuples_of_a2() {
        let q = GradedQuiver::builder(FieldSpec::Rational)
            .object("1")
            .object("2")
            .arrow("1", "1", "e1", 0)
            .arrow("2", "2", "e2", 0)
            .arrow("1", "2", "a", 0)
            .build()
            .unwrap();
        assert_eq!(q.composable_tuples(0).len(), 2);
        assert_eq!(q.composable_tuples(1).len(), 3);
        // paths of length 2: e1e1, a e1, e2 a, e2 e2
        let two = q.composable_tuples(2);
        assert_eq!(two.len(), 4);
        for (start, args) in two {
            q.path_ends(start, &args).unwrap();
        }
    }

    #[test]
    fn subquiver_roundtrip() {
        let q = GradedQuiver::builder(FieldSpec::Rational)
            .object("1")
            .object("2")
            .arrow("1", "1", "e1", 0)
            .arrow("2", "2", "e2", 0)
            .arrow("1", "2", "a", 0)
            .build()
            .unwrap();
        let (sub, map) = q.full_subquiver(&[ObjId(1)]).unwrap();
        assert_eq!(sub.num_objects(), 1);
        assert_eq!(sub.num_arrows(), 1);
        assert_eq!(q.arrow(map.ambient_arrow(ArrowId(0))).name, "e2");
    }
}
