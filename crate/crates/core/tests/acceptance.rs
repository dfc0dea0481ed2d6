//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use embrace::ainf::{Kind, StructuredCategory};
use embrace::corpus::{self, Linear};
use embrace::deformation::{coboundary_preimage, gauge_apply, hochschild_cohomology, FirstOrderDeformation};
use embrace::exact::FieldSpec;
use embrace::graded::{koszul_swap_sign, GradedQuiver, LinComb, Sign};
use embrace::hochschild::{
    brace_plain, cochain_basis, dot, faulty_swap, hochschild_differential, is_brace_morphism, random_cochain,
    relation_lhs, relation_rhs, restrict_cochain, suspend, Cochain, SampleConfig, SuspendedCochain,
};
use embrace::twisted::{build_pcom, lembr_sign, EmbrMap, TwQuiver};
use embrace::workbench::{self, shipped_corpus, suites, Problem, Status, Suite, SuiteConfig};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: embrace::Error) -> String {
    e.to_string()
}

fn linear(l: &Linear) -> StructuredCategory {
    StructuredCategory::new(l.quiver.clone(), l.m.clone(), Kind::Linear).expect("corpus structures are valid")
}

fn corpus_problem(name: &str) -> Problem {
    shipped_corpus().unwrap().into_iter().find(|p| p.name == name).expect("shipped problem")
}

fn nonzero(q: &GradedQuiver, rng: &mut ChaCha8Rng, arities: (usize, usize)) -> Cochain {
    loop {
        let n = rng.gen_range(arities.0..=arities.1);
        let c = random_cochain(q, n, 0, 0.5, rng);
        if !c.is_zero() {
            return c;
        }
    }
}

fn basis_cochains(q: &GradedQuiver, arity_max: usize) -> Vec<Cochain> {
    (0..=arity_max)
        .flat_map(|n| cochain_basis(q, n, 0))
        .map(|(k, b)| {
            let mut c = Cochain::zero(k.arity() as i64);
            c.add_entry(k, &LinComb::single(b, q.field().one()));
            c
        })
        .collect()
}

/// Brace relation on random samples, plus a faulty sign rule that must be caught.
fn criterion_1() -> Outcome {
    let mut detail = Vec::new();
    for (label, l, seed) in [
        ("E2/GF(7)", corpus::a2_path(FieldSpec::Prime(7)), 11),
        ("E1/Q", corpus::dual_numbers(FieldSpec::Rational), 12),
    ] {
        let q = &l.quiver;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let samples = 200;
        let mut caught = 0;
        for s in 0..samples {
            let x = suspend(q, &nonzero(q, &mut rng, (1, 3)));
            let xs: Vec<SuspendedCochain> = (0..rng.gen_range(1..=2)).map(|_| suspend(q, &nonzero(q, &mut rng, (0, 2)))).collect();
            let ys: Vec<SuspendedCochain> = (0..rng.gen_range(1..=2)).map(|_| suspend(q, &nonzero(q, &mut rng, (0, 1)))).collect();
            let (xr, yr): (Vec<_>, Vec<_>) = (xs.iter().collect(), ys.iter().collect());
            let lhs = relation_lhs(q, &x, &xr, &yr, koszul_swap_sign);
            let rhs = relation_rhs(q, &x, &xr, &yr, koszul_swap_sign);
            ensure(lhs == rhs, || format!("{label}: relation fails on sample {s}"))?;
            if relation_lhs(q, &x, &xr, &yr, faulty_swap) != relation_rhs(q, &x, &xr, &yr, faulty_swap) {
                caught += 1;
            }
        }
        ensure(caught > 0, || format!("{label}: a faulty sign rule went unnoticed"))?;
        detail.push(format!("{label} {samples} samples"));
    }
    Ok(detail.join(", "))
}

/// d∘d = 0 on bases and on precomplexes, and the cdg identities of PCom(E1).
fn criterion_2() -> Outcome {
    let mut counted = 0;
    for l in [corpus::dual_numbers(FieldSpec::Rational), corpus::a2_path(FieldSpec::Rational)] {
        for c in basis_cochains(&l.quiver, 4) {
            let dd = hochschild_differential(&l.quiver, &l.m, &hochschild_differential(&l.quiver, &l.m, &c));
            ensure(dd.is_zero(), || format!("d∘d ≠ 0 on a basis cochain of arity {:?}", c.arities()))?;
            counted += 1;
        }
    }
    let e1 = corpus::dual_numbers(FieldSpec::Rational);
    let x4 = corpus::x_complex(&e1, "X4", 0, 4);
    let pcom = build_pcom(&linear(&e1), (0, 3), &[x4]).map_err(err)?;
    let cat = &pcom.category;
    let q = cat.quiver();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut pcom_samples = 0;
    while pcom_samples < 12 {
        let n = rng.gen_range(0..=1);
        let i = rng.gen_range(-3..=3);
        let c = random_cochain(q, n, i, 0.3, &mut rng);
        if c.is_zero() {
            continue;
        }
        ensure(cat.d(&cat.d(&c)).is_zero(), || format!("d∘d ≠ 0 on PCom(E1) sample {pcom_samples}"))?;
        pcom_samples += 1;
    }
    let report = cat.report();
    ensure(report.passed(), || format!("PCom(E1) structure: {report:?}"))?;
    let cdg = report.cdg.ok_or("no cdg report for PCom(E1)")?;
    ensure(cdg.passed(), || format!("cdg identities: {cdg:?}"))?;
    Ok(format!("{counted} basis cochains on E1/E2, {pcom_samples} samples on PCom(E1) window 4, cdg identities hold"))
}

/// Dot product, classical differential and the lembr sign.
fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut dots = 0;
    for l in [
        corpus::dual_numbers(FieldSpec::Prime(7)),
        corpus::a2_path(FieldSpec::Prime(7)),
        corpus::graded_two_objects(FieldSpec::Prime(7)),
    ] {
        let q = &l.quiver;
        for _ in 0..40 {
            let (n, k) = (rng.gen_range(1..=3), rng.gen_range(0..=2));
            let (i, j) = if q.is_degree_zero() { (0, 0) } else { (rng.gen_range(-2..=2), rng.gen_range(-2..=2)) };
            let phi = random_cochain(q, n, i, 0.5, &mut rng);
            let psi = random_cochain(q, k, j, 0.5, &mut rng);
            ensure(dot(q, &phi, &psi) == brace_plain(q, &phi, &[&psi]), || "dot differs from the suspended brace".into())?;
            dots += 1;
        }
    }

    let e1 = corpus::dual_numbers(FieldSpec::Rational);
    let q = &e1.quiver;
    let mut compared = 0;
    for n in 0..=3 {
        for c in basis_cochains(q, 3).into_iter().filter(|c| c.arities() == [n]) {
            let sign = Sign::from_exponent(n as i64 + 1).apply(q.field().one());
            let expected = common::classical_differential(q, &e1.m, &c, n).scaled(&sign);
            ensure(hochschild_differential(q, &e1.m, &c) == expected, || format!("d ≠ (-1)^(n+1)·classical at arity {n}"))?;
            compared += 1;
        }
    }

    // m{δ,δ} = -δ² on a precomplex with δ² ≠ 0
    ensure(lembr_sign(2, 0, 1) == Sign::MINUS, || "lembr sign at (2,0,1) is not -1".into())?;
    let i3 = corpus::repeated_complex(q, "I3", "A", "1", 0, 3).map_err(err)?;
    let tw = TwQuiver::new(q, vec![i3.to_twisted(q).map_err(err)?]).map_err(err)?;
    let tq = tw.quiver();
    let c = tq.object_id("I3").map_err(err)?;
    let m_tw = tw.embed(&e1.m);
    let delta = tw.delta();
    let braced = brace_plain(tq, &m_tw, &[&delta, &delta]).eval(c, &[]);
    let square = common::matrix_product(&tw, &e1.m, &tw.object(c).delta, &tw.object(c).delta);
    ensure(!square.is_zero(), || "δ² vanishes on I3".into())?;
    let minus_square = tw.from_matrix(c, c, &square).map_err(err)?.negated();
    ensure(braced == minus_square, || format!("m{{δ,δ}} = {braced:?}, -δ² = {minus_square:?}"))?;
    Ok(format!("{dots} dot samples, {compared} basis cochains against the classical differential, m{{δ,δ}} = -δ² on I3"))
}

/// Section property, brace preservation and the closed form of embr.
fn criterion_4() -> Outcome {
    let e1 = corpus::dual_numbers(FieldSpec::Rational);
    let q = &e1.quiver;
    let x4 = corpus::x_complex(&e1, "X4", 0, 4);
    let tw = TwQuiver::new(q, vec![x4.to_twisted(q).map_err(err)?]).map_err(err)?;
    let (_, map) = tw.quiver().full_subquiver(&tw.base_objects()).map_err(err)?;
    let basis = basis_cochains(q, 4);
    for c in &basis {
        let back = restrict_cochain(tw.quiver(), &map, &tw.embr(c).map_err(err)?);
        ensure(back == *c, || format!("π∘embr ≠ id on a cochain of arity {:?}", c.arities()))?;
    }

    let x2 = corpus::x_complex(&e1, "X2", 0, 2);
    let small = TwQuiver::new(q, vec![x2.to_twisted(q).map_err(err)?]).map_err(err)?;
    let cfg = SampleConfig { seed: 41, samples: 100, arity_max: 3, degrees: (0, 0) };
    let r = is_brace_morphism(&EmbrMap(&small), &cfg).map_err(err)?;
    ensure(r.passed() && r.samples >= 100, || format!("embr brace check: {r:?}"))?;

    let mut closed = Vec::new();
    for (label, l, complexes) in [
        ("E1", e1.clone(), vec![corpus::x_complex(&e1, "X3", 0, 3), corpus::repeated_complex(q, "I3", "A", "1", 0, 3).map_err(err)?]),
        ("E2", corpus::a2_path(FieldSpec::Rational), vec![]),
    ] {
        let complexes = if complexes.is_empty() { vec![corpus::a2_complex(&l)] } else { complexes };
        for c in complexes {
            let tw = TwQuiver::new(&l.quiver, vec![c.to_twisted(&l.quiver).map_err(err)?]).map_err(err)?;
            let expected = common::precomplex_structure(&tw, &l.m);
            ensure(tw.embr(&l.m).map_err(err)? == expected, || format!("embr(m) ≠ matrix closed form on {label} {}", c.name))?;
            closed.push(format!("{label}:{}", c.name));
        }
    }
    Ok(format!(
        "section on {} cochains of arity ≤ 4, {} brace samples, closed form on {}",
        basis.len(),
        r.samples,
        closed.join(",")
    ))
}

/// HH dimensions against the bar-complex rank oracle.
fn criterion_5() -> Outcome {
    let mut out = Vec::new();
    for (label, l, expected) in [
        ("E1", corpus::dual_numbers(FieldSpec::Rational), [2, 1, 1]),
        ("E2", corpus::a2_path(FieldSpec::Rational), [1, 0, 0]),
    ] {
        let cat = linear(&l);
        let lib: Vec<usize> = (0..=2).map(|p| hochschild_cohomology(&cat, p).map(|h| h.dim)).collect::<Result<_, _>>().map_err(err)?;
        let oracle = common::bar_hh_dims(&l.quiver, &l.m, 2);
        ensure(lib == expected && oracle == expected, || format!("{label}: library {lib:?}, oracle {oracle:?}, expected {expected:?}"))?;
        out.push(format!("{label} {lib:?}"));
    }
    Ok(out.join(", "))
}

/// Obstruction class against lift existence over the corpus.
fn criterion_6() -> Outcome {
    let mut checked = 0;
    let mut x3_rank = None;
    for name in ["e1", "e2"] {
        let p = corpus_problem(name);
        let cat = p.category().map_err(err)?;
        for d in p.deformation_names() {
            for c in p.genuine_complexes(&cat) {
                let lab = p.lab_on(&cat, &d, &[&c.name]).map_err(err)?;
                let o = lab.object(&c.name).map_err(err)?;
                let r = lab.obstruction_and_lift(o).map_err(err)?;
                let chi = lab.characteristic_value(o).map_err(err)?;
                ensure(r.agrees(), || format!("{name}/{d}/{}: class and lift disagree", c.name))?;
                ensure(chi.vanishes == r.vanishes, || format!("{name}/{d}/{}: χ and -φ(δ,δ) disagree", c.name))?;
                ensure(chi.representative == lab.direct_contraction(o), || format!("{name}/{d}/{}: π₀ embr(φ) ≠ contraction", c.name))?;
                ensure(r.evidence.consistent() == r.witness.is_some(), || format!("{name}/{d}/{}: rank evidence", c.name))?;
                if let Some(w) = &r.witness {
                    // δδ' + δ'δ = -φ(δ, δ), in plain matrices
                    let tw = &lab.com().tw;
                    let (dm, wm) = (&tw.object(o).delta, tw.to_matrix(w));
                    let mut lhs = common::matrix_product(tw, &p.mu, dm, &wm);
                    for (&(j, i), v) in common::matrix_product(tw, &p.mu, &wm, dm).entries() {
                        lhs.add(j, i, v);
                    }
                    let rhs = tw.to_matrix(&r.representative);
                    ensure(tw.from_matrix(o, o, &lhs).map_err(err)? == tw.from_matrix(o, o, &rhs).map_err(err)?, || {
                        format!("{name}/{d}/{}: witness does not solve the lift equation", c.name)
                    })?;
                }
                if name == "e1" && d == "phi1" && c.name == "X3" {
                    ensure(!r.vanishes && r.witness.is_none() && r.evidence.rank < r.evidence.augmented_rank, || {
                        "X3 under φ₁ is not certified obstructed".into()
                    })?;
                    x3_rank = Some(r.evidence);
                }
                checked += 1;
            }
        }
    }
    let ev = x3_rank.ok_or("X3 under φ₁ was not checked")?;
    Ok(format!(
        "{checked} (deformation, complex) pairs; X3 under φ₁ obstructed with rank {} < {}",
        ev.rank, ev.augmented_rank
    ))
}

/// Gauges between cohomologous cocycles, and none between distinct classes.
fn criterion_7() -> Outcome {
    let mut out = Vec::new();
    for (name, from, to) in [("e1", "phi1", "phi1_dpsi"), ("e2", "zero", "dpsi")] {
        let p = corpus_problem(name);
        let cat = p.category().map_err(err)?;
        let (a, b) = (p.deformation(&cat, from).map_err(err)?, p.deformation(&cat, to).map_err(err)?);
        let diff = b.cocycle().minus(a.cocycle()).map_err(err)?;
        let h = coboundary_preimage(&cat, &diff).map_err(err)?.ok_or(format!("{name}: no gauge solved"))?;
        let classical = common::classical_differential(&p.quiver, &p.mu, &h, 1);
        ensure(classical == diff || classical.negated() == diff, || format!("{name}: d(h) ≠ ±(φ' - φ) classically"))?;
        gauge_apply(&a, &b, &h).map_err(err)?;
        for c in p.genuine_complexes(&cat) {
            let (la, lb) = (p.lab_on(&cat, from, &[&c.name]).map_err(err)?, p.lab_on(&cat, to, &[&c.name]).map_err(err)?);
            let o = la.object(&c.name).map_err(err)?;
            let (ca, cb) = (la.characteristic_value(o).map_err(err)?, lb.characteristic_value(o).map_err(err)?);
            ensure(ca.hom.same_class(&ca.representative, &cb.representative).map_err(err)?, || {
                format!("{name}: classes differ on {}", c.name)
            })?;
        }
        out.push(format!("{name} {from}→{to}"));
    }

    let e1 = corpus::dual_numbers(FieldSpec::Prime(2));
    let cat = linear(&e1);
    let phi = corpus::dual_numbers_cocycle(&e1);
    let (d0, d1) = (FirstOrderDeformation::trivial(cat.clone()), FirstOrderDeformation::new(cat.clone(), phi.clone()).map_err(err)?);
    let basis = cochain_basis(&e1.quiver, 1, 0);
    let one = e1.quiver.field().one();
    let total = 1u32 << basis.len();
    for mask in 0..total {
        let mut h = Cochain::zero(1);
        for (bit, (k, b)) in basis.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                h.add_entry(k.clone(), &LinComb::single(*b, one.clone()));
            }
        }
        ensure(common::classical_differential(&e1.quiver, &e1.m, &h, 1) != phi, || format!("oracle finds a gauge {mask:b}"))?;
        ensure(gauge_apply(&d1, &d0, &h).is_err(), || format!("gauge {mask:b} accepted between φ₁ and 0"))?;
    }
    out.push(format!("φ₁ vs 0 over GF(2): {total} gauges, none accepted"));
    Ok(out.join(", "))
}

fn suite(s: Suite, cfg: &SuiteConfig) -> Result<Vec<embrace::workbench::Record>, String> {
    let records = suites::run(s, &shipped_corpus().map_err(err)?, cfg);
    if let Some(bad) = records.iter().find(|r| r.status == Status::Fail) {
        return Err(format!("{} failed: {:?}", bad.kind, bad.fields));
    }
    Ok(records)
}

fn field<'a>(r: &'a embrace::workbench::Record, key: &str) -> &'a str {
    r.fields.iter().find(|(k, _)| k == key).map_or("", |(_, v)| v.as_str())
}

/// μ̃ = μ̄ + d(δ')ε, and the locus against lift feasibility.
fn criterion_8() -> Outcome {
    let cfg = SuiteConfig { gamma_samples: 50, ..SuiteConfig::default() };
    let records = suite(Suite::Precomplexes, &cfg)?;
    let summary = records.iter().find(|r| r.kind == "precomplexes-summary").ok_or("no summary")?;
    let random: usize = field(summary, "random").parse().unwrap_or(0);
    ensure(random >= 50, || format!("only {random} random Γ"))?;

    let p = corpus_problem("e1");
    let cat = p.category().map_err(err)?;
    let mut curved = Vec::new();
    for c in p.genuine_complexes(&cat) {
        let lab = p.lab_on(&cat, "phi1", &[&c.name]).map_err(err)?;
        let locus = lab.phi_infinity_locus().map_err(err)?;
        ensure(locus.consistent(), || format!("locus inconsistent on {}", c.name))?;
        let lifts = lab.obstruction_and_lift(lab.object(&c.name).map_err(err)?).map_err(err)?.witness.is_some();
        let in_dg = locus.dg_part().contains(&c.name.as_str());
        ensure(in_dg == lifts, || format!("{}: locus says {in_dg}, lift search says {lifts}", c.name))?;
        if !in_dg {
            curved.push(c.name.clone());
        }
    }
    Ok(format!(
        "{} trivial and {random} random Γ over GF(5); e1 φ₁ curved part {}",
        field(summary, "trivial"),
        curved.join(",")
    ))
}

/// χ commutes with chain maps up to a solved homotopy.
fn criterion_9() -> Outcome {
    let records = suite(Suite::Centrality, &SuiteConfig::default())?;
    let names: Vec<&str> = records.iter().map(|r| field(r, "map")).collect();
    for wanted in ["id_X3", "x-shift", "inclusion", "projection"] {
        ensure(names.contains(&wanted), || format!("no centrality record for {wanted}"))?;
    }
    let nontrivial = records.iter().filter(|r| field(r, "difference") != "0").count();
    ensure(nontrivial > 0, || "every difference vanished on the nose".into())?;
    Ok(format!("{} map checks, {nontrivial} with a nonzero difference resolved by a homotopy", records.len()))
}

/// Two `verify` runs give the same bytes.
fn criterion_10() -> Outcome {
    let run = || workbench::run(["embrace", "verify", "--format", "records"]);
    let (a, b) = (run(), run());
    ensure(a.code == 0, || format!("verify exited with {}: {}", a.code, a.stderr))?;
    ensure(a == b, || "verify output differs between runs".into())?;
    Ok(format!("{} bytes, identical", a.stdout.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("brace relation", criterion_1),
        ("d∘d = 0 and cdg identities", criterion_2),
        ("dot, classical differential, lembr sign", criterion_3),
        ("embr section, brace morphism, closed form", criterion_4),
        ("Hochschild cohomology dimensions", criterion_5),
        ("obstruction class versus lifts", criterion_6),
        ("gauge equivalence", criterion_7),
        ("precomplexes and the φ-∞ locus", criterion_8),
        ("centrality", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (k, (title, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("criterion {:>2} PASS {title}: {detail} ({secs:.1}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {title}: {why} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
