//! The small categories used throughout the examples and test suites.

use crate::error::Result;
use crate::exact::FieldSpec;
use crate::graded::{ArrowId, GradedQuiver, LinComb, ObjId};
use crate::hochschild::{Cochain, Key};

/// Builds a composition cochain `m(f, g) = f∘g` from a multiplication table of
/// `(f, g, f∘g)` named arrows. Pairs not listed compose to zero.
pub fn composition(q: &GradedQuiver, table: &[(&str, &str, &[(&str, i64)])]) -> Result<Cochain> {
    let mut m = Cochain::zero(2);
    for (f, g, value) in table {
        let fa = find(q, f)?;
        let ga = find(q, g)?;
        let (src, tgt) = (q.arrow(ga).source, q.arrow(fa).target);
        let mut v = LinComb::new();
        for (name, c) in value.iter() {
            v.add_term(q.arrow_by_name(src, tgt, name)?, &q.field().from_i64(*c));
        }
        m.add_entry(Key::new(src, vec![fa, ga]), &v);
    }
    m.validate(q)?;
    Ok(m)
}

/// Looks up an arrow by name anywhere in the quiver.
pub fn find(q: &GradedQuiver, name: &str) -> Result<ArrowId> {
    q.arrows()
        .find(|(_, a)| a.name == name)
        .map(|(id, _)| id)
        .ok_or_else(|| crate::error::Error::UnknownArrow {
            name: name.to_string(),
            source_obj: "?".into(),
            target_obj: "?".into(),
        })
}

/// A quiver with a composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linear {
    pub quiver: GradedQuiver,
    pub m: Cochain,
}

/// One object whose endomorphisms are the field.
pub fn field_object(field: FieldSpec) -> Linear {
    let quiver = GradedQuiver::builder(field)
        .object("A")
        .arrow("A", "A", "1", 0)
        .build()
        .expect("valid quiver");
    let m = composition(&quiver, &[("1", "1", &[("1", 1)])]).expect("valid table");
    Linear { quiver, m }
}

/// `k[x]/(x²)` as a one-object category with basis `1, x`.
pub fn dual_numbers(field: FieldSpec) -> Linear {
    let quiver = GradedQuiver::builder(field)
        .object("A")
        .arrow("A", "A", "1", 0)
        .arrow("A", "A", "x", 0)
        .build()
        .expect("valid quiver");
    let m = composition(
        &quiver,
        &[("1", "1", &[("1", 1)]), ("1", "x", &[("x", 1)]), ("x", "1", &[("x", 1)])],
    )
    .expect("valid table");
    Linear { quiver, m }
}

/// The path category of `1 → 2`.
pub fn a2_path(field: FieldSpec) -> Linear {
    let quiver = GradedQuiver::builder(field)
        .object("1")
        .object("2")
        .arrow("1", "1", "e1", 0)
        .arrow("2", "2", "e2", 0)
        .arrow("1", "2", "a", 0)
        .build()
        .expect("valid quiver");
    let m = composition(
        &quiver,
        &[
            ("e1", "e1", &[("e1", 1)]),
            ("e2", "e2", &[("e2", 1)]),
            ("a", "e1", &[("a", 1)]),
            ("e2", "a", &[("a", 1)]),
        ],
    )
    .expect("valid table");
    Linear { quiver, m }
}

/// `k[u]/(u²)` with `|u| = 1`.
pub fn graded_dual_numbers(field: FieldSpec) -> Linear {
    let quiver = GradedQuiver::builder(field)
        .object("A")
        .arrow("A", "A", "1", 0)
        .arrow("A", "A", "u", 1)
        .build()
        .expect("valid quiver");
    let m = composition(
        &quiver,
        &[("1", "1", &[("1", 1)]), ("1", "u", &[("u", 1)]), ("u", "1", &[("u", 1)])],
    )
    .expect("valid table");
    Linear { quiver, m }
}

/// A two-object graded quiver with arrows of degrees `-1, 0, 1` and a
/// composition, used to exercise signs on both odd and even arguments.
pub fn graded_two_objects(field: FieldSpec) -> Linear {
    let quiver = GradedQuiver::builder(field)
        .object("P")
        .object("Q")
        .arrow("P", "P", "1P", 0)
        .arrow("Q", "Q", "1Q", 0)
        .arrow("P", "Q", "s", -1)
        .arrow("P", "Q", "f", 0)
        .arrow("Q", "P", "g", 1)
        .arrow("P", "P", "h", 1)
        .arrow("P", "P", "t", -1)
        .window(-2, 2)
        .build()
        .expect("valid quiver");
    let m = composition(
        &quiver,
        &[
            ("1P", "1P", &[("1P", 1)]),
            ("1Q", "1Q", &[("1Q", 1)]),
            ("s", "1P", &[("s", 1)]),
            ("f", "1P", &[("f", 1)]),
            ("1Q", "s", &[("s", 1)]),
            ("1Q", "f", &[("f", 1)]),
            ("g", "1Q", &[("g", 1)]),
            ("1P", "g", &[("g", 1)]),
            ("h", "1P", &[("h", 1)]),
            ("1P", "h", &[("h", 1)]),
            ("t", "1P", &[("t", 1)]),
            ("1P", "t", &[("t", 1)]),
        ],
    )
    .expect("valid table");
    Linear { quiver, m }
}

/// The dg algebra `k[t]/(t²)` with `|t| = -1` and `d(t) = 1`.
pub fn dg_dual_numbers(field: FieldSpec) -> (GradedQuiver, Cochain) {
    let quiver = GradedQuiver::builder(field)
        .object("A")
        .arrow("A", "A", "1", 0)
        .arrow("A", "A", "t", -1)
        .build()
        .expect("valid quiver");
    let mut mu = composition(
        &quiver,
        &[("1", "1", &[("1", 1)]), ("1", "t", &[("t", 1)]), ("t", "1", &[("t", 1)])],
    )
    .expect("valid table");
    let one = find(&quiver, "1").expect("arrow");
    let t = find(&quiver, "t").expect("arrow");
    mu.add_entry(Key::new(ObjId(0), vec![t]), &LinComb::single(one, field.one()));
    (quiver, mu)
}

/// A strictly unital A∞-algebra with basis `e, u, w` (`|u| = 1`, `|w| = 2`)
/// and `μ_3(u, u, u) = w` as its only higher operation.
pub fn synthetic_a_infinity(field: FieldSpec) -> (GradedQuiver, Cochain) {
    let quiver = GradedQuiver::builder(field)
        .object("A")
        .arrow("A", "A", "e", 0)
        .arrow("A", "A", "u", 1)
        .arrow("A", "A", "w", 2)
        .build()
        .expect("valid quiver");
    let mut mu = composition(
        &quiver,
        &[
            ("e", "e", &[("e", 1)]),
            ("e", "u", &[("u", 1)]),
            ("u", "e", &[("u", 1)]),
            ("e", "w", &[("w", 1)]),
            ("w", "e", &[("w", 1)]),
        ],
    )
    .expect("valid table");
    let u = find(&quiver, "u").expect("arrow");
    let w = find(&quiver, "w").expect("arrow");
    mu.add_entry(Key::new(ObjId(0), vec![u, u, u]), &LinComb::single(w, field.one()));
    (quiver, mu)
}

/// The arity-2 cocycle on `k[x]/(x²)` with `φ(x, x) = 1`, zero whenever an
/// argument is `1`.
pub fn dual_numbers_cocycle(e1: &Linear) -> Cochain {
    let q = &e1.quiver;
    let x = find(q, "x").expect("arrow");
    let one = find(q, "1").expect("arrow");
    Cochain::homogeneous(q, 2, 0, [(ObjId(0), vec![x, x], LinComb::single(one, q.field().one()))])
        .expect("valid cochain")
}

/// The arity-1 cochain on `k[x]/(x²)` with `ψ(x) = 1`, `ψ(1) = 0`.
pub fn dual_numbers_psi(e1: &Linear) -> Cochain {
    let q = &e1.quiver;
    let x = find(q, "x").expect("arrow");
    let one = find(q, "1").expect("arrow");
    Cochain::homogeneous(q, 1, 0, [(ObjId(0), vec![x], LinComb::single(one, q.field().one()))])
        .expect("valid cochain")
}

/// `A → A → … → A` with `terms` copies of `object` starting at position
/// `start`, every differential being the arrow `arrow`.
pub fn repeated_complex(
    q: &GradedQuiver,
    name: &str,
    object: &str,
    arrow: &str,
    start: i64,
    terms: i64,
) -> Result<crate::twisted::ComplexWindow> {
    let o = q.object_id(object)?;
    let a = q.arrow_by_name(o, o, arrow)?;
    let mut c = crate::twisted::ComplexWindow::new(name);
    for p in start..start + terms {
        c = c.term(p, o);
        if p + 1 < start + terms {
            c = c.differential(p, LinComb::single(a, q.field().one()));
        }
    }
    Ok(c)
}

/// The `x`-complex `A --x--> A --x--> …` over `k[x]/(x²)`.
pub fn x_complex(e1: &Linear, name: &str, start: i64, terms: i64) -> crate::twisted::ComplexWindow {
    repeated_complex(&e1.quiver, name, "A", "x", start, terms).expect("dual numbers have A and x")
}

/// `1 --a--> 2` in positions 0 and 1 over the path category of `1 → 2`.
pub fn a2_complex(e2: &Linear) -> crate::twisted::ComplexWindow {
    let q = &e2.quiver;
    let a = find(q, "a").expect("arrow");
    crate::twisted::ComplexWindow::new("C12")
        .term(0, ObjId(0))
        .term(1, ObjId(1))
        .differential(0, LinComb::single(a, q.field().one()))
}
