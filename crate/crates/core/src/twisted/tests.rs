use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::ainf::{infinity_part, transport, Kind, StructuredCategory};
use crate::corpus::{self, find};
use crate::error::Error;
use crate::exact::FieldSpec;
use crate::graded::{GradedQuiver, LinComb, ObjId, Sign};
use crate::hochschild::{
    eval_multilinear, is_brace_morphism, random_cochain, restrict_cochain, Cochain, SampleConfig,
};

fn e1() -> StructuredCategory {
    let c = corpus::dual_numbers(FieldSpec::Rational);
    StructuredCategory::new(c.quiver, c.m, Kind::Linear).unwrap()
}

fn arrow(q: &GradedQuiver, name: &str) -> LinComb {
    LinComb::single(find(q, name).unwrap(), q.field().one())
}

/// `A → A → … → A` with every differential equal to `name`.
fn chain(q: &GradedQuiver, label: &str, terms: i64, name: &str) -> ComplexWindow {
    let mut c = ComplexWindow::new(label);
    for p in 0..terms {
        c = c.term(p, ObjId(0));
        if p + 1 < terms {
            c = c.differential(p, arrow(q, name));
        }
    }
    c
}

/// `P ⊕ Σ^{-1} Q` over the graded two-object quiver with `δ = f` from `P`
/// to `Q`, and `P ⊕ Σ^{-2} Q` with `δ = s`; both are iln.
fn graded_tw() -> TwQuiver {
    let c = corpus::graded_two_objects(FieldSpec::prime(7).unwrap());
    let q = &c.quiver;
    let (p, qq) = (ObjId(0), ObjId(1));
    let m1 = TwistedObject::new(
        "M",
        FreeObject::new(vec![Summand { shift: 0, object: p }, Summand { shift: -1, object: qq }]),
        MorphismMatrix::new().with_entry(1, 0, arrow(q, "f")),
    );
    let m2 = TwistedObject::new(
        "N",
        FreeObject::new(vec![Summand { shift: 0, object: p }, Summand { shift: -2, object: qq }]),
        MorphismMatrix::new().with_entry(1, 0, arrow(q, "s")),
    );
    TwQuiver::new(q, vec![m1, m2]).unwrap()
}

fn e1_tw() -> TwQuiver {
    let cat = e1();
    let q = cat.quiver();
    let objs = [chain(q, "X2", 2, "x"), chain(q, "I3", 3, "1")];
    TwQuiver::new(q, objs.iter().map(|c| c.to_twisted(q).unwrap()).collect()).unwrap()
}

#[test]
fn base_is_a_full_subquiver() {
    let tw = graded_tw();
    let (sub, _) = tw.quiver().full_subquiver(&tw.base_objects()).unwrap();
    assert_eq!(sub.num_arrows(), tw.base().num_arrows());
    for (a, arr) in tw.base().arrows() {
        assert_eq!(sub.arrow(a), arr);
    }
    // degree bookkeeping |f| + m_i - n_j
    let m = ObjId(2);
    let f = tw.delta_of(m);
    assert_eq!(f.len(), 1);
    let (a, _) = f.iter().next().unwrap();
    assert_eq!(tw.quiver().degree(a), 1);
}

#[test]
fn embedding_of_identity_is_identity() {
    let tw = graded_tw();
    assert_eq!(tw.embed(&Cochain::identity(tw.base())), Cochain::identity(tw.quiver()));
}

#[test]
fn embedding_on_single_summands_is_ordinary_composition() {
    let cat = e1();
    let q = cat.quiver();
    let b = TwistedObject::new("B", FreeObject::single(ObjId(0)), MorphismMatrix::new());
    let tw = TwQuiver::new(q, vec![b]).unwrap();
    let (_, map) = tw.quiver().full_subquiver(&[ObjId(1)]).unwrap();
    let restricted = restrict_cochain(tw.quiver(), &map, &tw.embed(cat.mu()));
    assert_eq!(&restricted, cat.mu());
}

#[test]
fn reachability_containment() {
    let tw = graded_tw();
    let q = tw.quiver();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for _ in 0..40 {
        let n = rng.gen_range(1..=3);
        let i = rng.gen_range(-2..=2);
        let phi = random_cochain(tw.base(), n, i, 0.6, &mut rng);
        let e = tw.embed(&phi);
        for (start, args) in q.composable_tuples(n).into_iter().filter(|_| rng.gen_bool(0.2)) {
            let value = e.eval(start, &args);
            let size = tw.object(start).carrier.len();
            for k in 0..size {
                let mut s = ReachabilitySet::from([k]);
                for &a in args.iter().rev() {
                    s = phi_reach(&tw.to_matrix(&LinComb::single(a, q.field().one())), &s);
                }
                let lhs = phi_reach(&tw.to_matrix(&value), &ReachabilitySet::from([k]));
                assert!(lhs.is_subset(&s));
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn lembr_sign_examples() {
    assert_eq!(lembr_sign(0, 5, 3), Sign::PLUS);
    assert_eq!(lembr_sign(2, 0, 1), Sign::MINUS);
    for j in -3..=3 {
        assert_eq!(lembr_sign(1, 1, j), Sign::MINUS);
    }
}

#[test]
fn embedding_is_a_brace_morphism_on_a_graded_base() {
    let tw = graded_tw();
    let cfg = SampleConfig { seed: 3, samples: 25, arity_max: 3, degrees: (-2, 2) };
    let r = is_brace_morphism(&EmbedMap(&tw), &cfg).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn embr_is_a_brace_morphism_and_a_section() {
    for tw in [e1_tw(), graded_tw()] {
        let cfg = SampleConfig { seed: 5, samples: 15, arity_max: 3, degrees: (-1, 1) };
        let r = is_brace_morphism(&EmbrMap(&tw), &cfg).unwrap();
        assert!(r.passed(), "{r:?}");
        let (_, map) = tw.quiver().full_subquiver(&tw.base_objects()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 0..=3 {
            for i in -1..=1 {
                let phi = random_cochain(tw.base(), n, i, 0.5, &mut rng);
                let back = restrict_cochain(tw.quiver(), &map, &tw.embr(&phi).unwrap());
                assert_eq!(back, phi);
            }
        }
    }
}

#[test]
fn embr_zero_part_matches_closed_formula() {
    let tw = e1_tw();
    let q = tw.quiver();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..6 {
        let mut phi = Cochain::zero(2);
        for n in 0..=3 {
            phi.add_assign(&random_cochain(tw.base(), n, 2 - n as i64, 0.7, &mut rng)).unwrap();
        }
        let p = phi.hochschild_degree();
        let e = tw.embed(&phi);
        let got = tw.embr(&phi).unwrap();
        for m in tw.twisted_objects() {
            let delta = tw.delta_of(m);
            let mut want = LinComb::new();
            for k in 0..=3i64 {
                let args = vec![&delta; k as usize];
                let alpha = k * (p - k) + k * (k - 1) / 2;
                let v = eval_multilinear(q, &e.arity_component(k as usize), m, &args);
                want.add_scaled(&v, &Sign::from_exponent(alpha).apply(q.field().one()));
            }
            assert_eq!(got.eval(m, &[]), want);
        }
    }
}

#[test]
fn cocycle_at_three_term_x_complex() {
    let cat = e1();
    let q = cat.quiver();
    let c = chain(q, "X3", 3, "x");
    let tw = TwQuiver::new(q, vec![c.to_twisted(q).unwrap()]).unwrap();
    let phi1 = corpus::dual_numbers_cocycle(&corpus::dual_numbers(FieldSpec::Rational));
    let zero = tw.embr(&phi1).unwrap().eval(ObjId(1), &[]);
    let matrix = tw.to_matrix(&zero);
    let expected = MorphismMatrix::new().with_entry(2, 0, LinComb::single(find(q, "1").unwrap(), q.field().from_i64(-1)));
    assert_eq!(matrix, expected);
}

#[test]
fn degree_zero_sum_has_arity_plus_one_terms() {
    let tw = e1_tw();
    let mu = e1().mu().clone();
    let e = tw.embed(&mu);
    let delta = tw.delta();
    let extra = crate::hochschild::brace_plain(tw.quiver(), &e, &[&delta, &delta, &delta]);
    assert!(extra.is_zero());
}

#[test]
fn divergent_twists_are_rejected() {
    let c = corpus::graded_dual_numbers(FieldSpec::Rational);
    let q = &c.quiver;
    let t = TwistedObject::new(
        "L",
        FreeObject::single(ObjId(0)),
        MorphismMatrix::new().with_entry(0, 0, arrow(q, "u")),
    );
    let tw = TwQuiver::new(q, vec![t]).unwrap();
    assert!(matches!(tw.embr(&c.m), Err(Error::Divergent(name)) if name == "L"));
}

#[test]
fn pcom_matches_closed_forms() {
    let cat = e1();
    let q = cat.quiver();
    let objs = vec![chain(q, "X2", 2, "x"), chain(q, "X3", 3, "x"), chain(q, "I3", 3, "1")];
    let tw = TwQuiver::new(q, objs.iter().map(|c| c.to_twisted(q).unwrap()).collect()).unwrap();
    let embr = tw.embr(cat.mu()).unwrap();
    assert_eq!(embr, matrix_pcom(&tw, cat.mu()));
    let pcom = build_pcom(&cat, (0, 2), &objs).unwrap();
    let report = pcom.category.report();
    assert!(report.passed());
    assert!(report.cdg.unwrap().passed());
    // curvatures: zero, zero and -1 at (2, 0)
    let curv = pcom.category.curvature();
    assert!(curv.eval(ObjId(0), &[]).is_zero());
    assert!(curv.eval(ObjId(1), &[]).is_zero());
    let c3 = pcom.tw.to_matrix(&embr.eval(ObjId(3), &[]));
    let minus_one = LinComb::single(find(q, "1").unwrap(), q.field().from_i64(-1));
    assert_eq!(c3, MorphismMatrix::new().with_entry(2, 0, minus_one));
    // the ∞-part drops the precomplex with δ² ≠ 0
    let inf = infinity_part(&pcom.category).unwrap();
    assert_eq!(inf.quiver().num_objects(), 2);
    assert_eq!(inf.kind(), Kind::Dg);
}

#[test]
fn pcom_on_a_window_of_length_one() {
    let cat = e1();
    let objs = vec![ComplexWindow::new("C").term(0, ObjId(0))];
    let pcom = build_pcom(&cat, (0, 0), &objs).unwrap();
    assert!(pcom.category.curvature().is_zero());
    assert!(pcom.category.differential().is_zero());
    assert_eq!(pcom.category.quiver().num_arrows(), 2);
    assert_eq!(pcom.category.composition().len(), cat.mu().len());
}

#[test]
fn window_and_kind_errors() {
    let cat = e1();
    let q = cat.quiver();
    let objs = vec![chain(q, "X3", 3, "x")];
    assert!(matches!(build_pcom(&cat, (0, 1), &objs), Err(Error::Window(name, _)) if name == "X3"));
    let bad = ComplexWindow::new("B").term(0, ObjId(0)).differential(0, arrow(q, "x"));
    assert!(matches!(build_pcom(&cat, (0, 1), &[bad]), Err(Error::Window(..))));
    let (dq, dmu) = corpus::dg_dual_numbers(FieldSpec::Rational);
    let dg = StructuredCategory::new(dq, dmu, Kind::Dg).unwrap();
    assert!(matches!(build_pcom(&dg, (0, 0), &[]), Err(Error::KindViolation { .. })));
}

#[test]
fn complexes() {
    let cat = e1();
    let q = cat.quiver();
    let good = vec![chain(q, "X2", 2, "x"), chain(q, "X3", 3, "x")];
    let com = build_com(&cat, (0, 2), &good).unwrap();
    assert_eq!(com.category.kind(), Kind::Dg);
    assert_eq!(com.category.quiver().num_objects(), 2);
    assert!(com.category.report().passed());
    let err = build_com(&cat, (0, 2), &[chain(q, "I3", 3, "1")]).unwrap_err();
    assert!(matches!(err, Error::NotComplex { ref object, .. } if object == "I3"));
}

#[test]
fn transport_along_embr_gives_pcom() {
    let cat = e1();
    let tw = e1_tw();
    let cfg = SampleConfig { seed: 1, samples: 8, arity_max: 2, degrees: (-1, 1) };
    let t = transport(&EmbrMap(&tw), &cat, Kind::Cdg, &cfg).unwrap();
    assert_eq!(t.mu(), &matrix_pcom(&tw, cat.mu()));
    assert!(matches!(
        transport(&EmbrMap(&tw), &cat, Kind::Dg, &cfg),
        Err(Error::KindViolation { .. })
    ));
}
