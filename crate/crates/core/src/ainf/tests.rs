use super::*;
use crate::corpus::{self, find};
use crate::exact::FieldSpec;
use crate::hochschild::{IdentityMap, Restriction, ScaleArity};

fn e1() -> StructuredCategory {
    let c = corpus::dual_numbers(FieldSpec::Rational);
    StructuredCategory::new(c.quiver, c.m, Kind::Linear).unwrap()
}

/// `1, u, w` with `|u| = 1`, `|w| = 2`, unit products plus `u·u = g w`,
/// `d(1) = a u`, `d(u) = b w` and curvature `e w`.
fn odd_family(a: i64, b: i64, e: i64, g: i64) -> (GradedQuiver, Cochain) {
    let q = GradedQuiver::builder(FieldSpec::Rational)
        .object("A")
        .arrow("A", "A", "1", 0)
        .arrow("A", "A", "u", 1)
        .arrow("A", "A", "w", 2)
        .build()
        .unwrap();
    let mut mu = corpus::composition(
        &q,
        &[
            ("1", "1", &[("1", 1)]),
            ("1", "u", &[("u", 1)]),
            ("u", "1", &[("u", 1)]),
            ("1", "w", &[("w", 1)]),
            ("w", "1", &[("w", 1)]),
            ("u", "u", &[("w", g)]),
        ],
    )
    .unwrap();
    let f = q.field();
    let (one, u, w) = (find(&q, "1").unwrap(), find(&q, "u").unwrap(), find(&q, "w").unwrap());
    mu.add_entry(Key::new(ObjId(0), vec![one]), &LinComb::single(u, f.from_i64(a)));
    mu.add_entry(Key::new(ObjId(0), vec![u]), &LinComb::single(w, f.from_i64(b)));
    mu.add_entry(Key::new(ObjId(0), vec![]), &LinComb::single(w, f.from_i64(e)));
    (q, mu)
}

#[test]
fn dual_numbers_are_a_linear_category() {
    let cat = e1();
    assert!(cat.report().passed());
    assert_eq!(cat.kind(), Kind::Linear);
}

#[test]
fn non_associative_composition_is_rejected() {
    let c = corpus::dual_numbers(FieldSpec::Rational);
    let q = &c.quiver;
    let mut m = c.m.clone();
    // 1·x = 2x breaks associativity on (1, 1, x)
    let (one, x) = (find(q, "1").unwrap(), find(q, "x").unwrap());
    m.add_entry(Key::new(ObjId(0), vec![one, x]), &LinComb::single(x, q.field().one()));
    let report = check_structure(q, &m, Kind::Linear);
    assert!(report.first_failure.as_deref().unwrap().contains("arity 3"));
    assert!(report.cdg.unwrap().associativity.is_some());
    assert!(matches!(
        StructuredCategory::new(c.quiver, m, Kind::Linear),
        Err(Error::InvalidStructure(_))
    ));
}

#[test]
fn kind_is_enforced() {
    let (q, mu) = corpus::dg_dual_numbers(FieldSpec::Rational);
    assert!(StructuredCategory::new(q.clone(), mu.clone(), Kind::Dg).is_ok());
    assert!(matches!(
        StructuredCategory::new(q, mu, Kind::Linear),
        Err(Error::KindViolation { .. })
    ));
}

#[test]
fn synthetic_a_infinity_structure() {
    let (q, mu) = corpus::synthetic_a_infinity(FieldSpec::Rational);
    let cat = StructuredCategory::new(q.clone(), mu.clone(), Kind::AInfinity).unwrap();
    assert!(cat.report().cdg.is_none());
    assert!(StructuredCategory::new(q, mu, Kind::Cdg).is_err());
}

#[test]
fn wrong_degree_is_rejected() {
    let c = corpus::dual_numbers(FieldSpec::Rational);
    let psi = corpus::dual_numbers_psi(&c);
    assert!(matches!(
        StructuredCategory::new(c.quiver, psi, Kind::Linear),
        Err(Error::Degree(_))
    ));
}

/// Over the whole family the individual identities hold exactly when
/// `b{b} = 0`.
#[test]
fn cdg_identities_agree_with_brace_square() {
    let mut passing = 0;
    for a in -1..=1 {
        for b in -1..=1 {
            for e in -1..=1 {
                for g in -1..=1 {
                    let (q, mu) = odd_family(a, b, e, g);
                    let r = check_structure(&q, &mu, Kind::Cdg);
                    let cdg = r.cdg.clone().unwrap();
                    assert_eq!(r.first_failure.is_none(), cdg.passed(), "a={a} b={b} e={e} g={g}: {r:?}");
                    if cdg.passed() {
                        passing += 1;
                    }
                }
            }
        }
    }
    // Leibniz on (1, 1) forces a = 0, everything else is unconstrained
    assert_eq!(passing, 27);
}

#[test]
fn curvature_and_infinity_part() {
    let (q, mu) = odd_family(0, 0, 1, 0);
    let cat = StructuredCategory::new(q, mu, Kind::Cdg).unwrap();
    assert!(!cat.curvature().is_zero());
    let inf = infinity_part(&cat).unwrap();
    assert_eq!(inf.quiver().num_objects(), 0);
    assert_eq!(inf.kind(), Kind::Dg);
    let again = infinity_part(&inf).unwrap();
    assert_eq!(again, inf);
}

#[test]
fn restriction_to_one_object() {
    let c = corpus::a2_path(FieldSpec::Rational);
    let cat = StructuredCategory::new(c.quiver, c.m, Kind::Linear).unwrap();
    let sub = restrict_named(&cat, &["1"]).unwrap();
    assert_eq!(sub.quiver().num_objects(), 1);
    assert_eq!(sub.quiver().num_arrows(), 1);
    assert!(sub.report().passed());
    let all = restrict_named(&cat, &["1", "2"]).unwrap();
    assert_eq!(all, cat);
}

#[test]
fn transport_along_maps() {
    let c = corpus::a2_path(FieldSpec::Rational);
    let cat = StructuredCategory::new(c.quiver.clone(), c.m, Kind::Linear).unwrap();
    let cfg = SampleConfig { samples: 10, ..SampleConfig::default() };
    let same = transport(&IdentityMap(&c.quiver), &cat, Kind::Linear, &cfg).unwrap();
    assert_eq!(same, cat);
    let r = Restriction::new(&c.quiver, &[ObjId(1)]).unwrap();
    let sub = transport(&r, &cat, Kind::Linear, &cfg).unwrap();
    assert_eq!(sub.quiver().num_objects(), 1);
    let bad = ScaleArity { quiver: &c.quiver, arity: 2, factor: c.quiver.field().from_i64(2) };
    assert!(matches!(transport(&bad, &cat, Kind::Linear, &cfg), Err(Error::Inconsistent(_))));
}

/// Two objects with curvatures `α w_P`, `β w_Q` and `d(f) = g`, `d(g) = γ h`;
/// `d² = -m(c⊗1 - 1⊗c)` on `f` reads `γ = α - β`.
fn curved_pair(alpha: i64, beta: i64, gamma: i64) -> (GradedQuiver, Cochain) {
    let q = GradedQuiver::builder(FieldSpec::Rational)
        .object("P")
        .object("Q")
        .arrow("P", "P", "1P", 0)
        .arrow("Q", "Q", "1Q", 0)
        .arrow("P", "Q", "f", 0)
        .arrow("P", "Q", "g", 1)
        .arrow("P", "Q", "h", 2)
        .arrow("P", "P", "wP", 2)
        .arrow("Q", "Q", "wQ", 2)
        .build()
        .unwrap();
    let mut table: Vec<(&str, &str, &[(&str, i64)])> = vec![
        ("1P", "1P", &[("1P", 1)]),
        ("1Q", "1Q", &[("1Q", 1)]),
        ("wQ", "f", &[("h", 1)]),
        ("f", "wP", &[("h", 1)]),
    ];
    for (x, one_src, one_tgt) in [("f", "1P", "1Q"), ("g", "1P", "1Q"), ("h", "1P", "1Q"), ("wP", "1P", "1P"), ("wQ", "1Q", "1Q")] {
        let v: &[(&str, i64)] = match x {
            "f" => &[("f", 1)],
            "g" => &[("g", 1)],
            "h" => &[("h", 1)],
            "wP" => &[("wP", 1)],
            _ => &[("wQ", 1)],
        };
        table.push((x, one_src, v));
        table.push((one_tgt, x, v));
    }
    let mut mu = corpus::composition(&q, &table).unwrap();
    let fs = q.field();
    let a = |n: &str| find(&q, n).unwrap();
    mu.add_entry(Key::new(ObjId(0), vec![a("f")]), &LinComb::single(a("g"), fs.one()));
    mu.add_entry(Key::new(ObjId(0), vec![a("g")]), &LinComb::single(a("h"), fs.from_i64(gamma)));
    mu.add_entry(Key::new(ObjId(0), vec![]), &LinComb::single(a("wP"), fs.from_i64(alpha)));
    mu.add_entry(Key::new(ObjId(1), vec![]), &LinComb::single(a("wQ"), fs.from_i64(beta)));
    (q, mu)
}

#[test]
fn curvature_sign_convention() {
    for alpha in -1..=1 {
        for beta in -1..=1 {
            for gamma in -2..=2 {
                let (q, mu) = curved_pair(alpha, beta, gamma);
                let r = check_structure(&q, &mu, Kind::Cdg);
                let cdg = r.cdg.clone().unwrap();
                let expected = gamma == alpha - beta;
                assert_eq!(r.first_failure.is_none(), expected, "α={alpha} β={beta} γ={gamma}");
                assert_eq!(cdg.passed(), expected);
                assert_eq!(cdg.d_squared.is_none(), expected);
            }
        }
    }
}
