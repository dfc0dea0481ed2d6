//! Twisted objects, `embr_δ` and the cdg category of precomplexes.

use embrace::ainf::{Kind, StructuredCategory};
use embrace::corpus;
use embrace::exact::FieldSpec;
use embrace::hochschild::{is_brace_morphism, project_zero, SampleConfig};
use embrace::twisted::{build_com, build_pcom, matrix_pcom, EmbrMap, TwQuiver};

fn main() -> embrace::Result<()> {
    let e1 = corpus::dual_numbers(FieldSpec::Rational);
    let q = &e1.quiver;
    let cat = StructuredCategory::new(q.clone(), e1.m.clone(), Kind::Linear)?;

    // x-complexes are complexes; multiplying by 1 twice is not
    let x3 = corpus::x_complex(&e1, "X3", 0, 3);
    let i3 = corpus::repeated_complex(q, "I3", "A", "1", 0, 3)?;
    let pcom = build_pcom(&cat, (0, 2), &[x3.clone(), i3.clone()])?;
    let tq = pcom.tw.quiver();
    println!("Tw quiver: {} objects, {} arrows", tq.num_objects(), tq.num_arrows());
    println!("PCom is {} and passes its checks: {}", pcom.category.kind(), pcom.category.report().passed());
    for (o, c) in project_zero(pcom.ambient.mu()) {
        println!("  curvature at {}: {}", tq.object_name(o), tq.format_lincomb(&c));
    }
    println!("embr(m) agrees with matrix algebra: {}", pcom.ambient.mu() == &matrix_pcom(&pcom.tw, cat.mu()));

    match build_com(&cat, (0, 2), &[i3]) {
        Err(e) => println!("Com rejects I3: {e}"),
        Ok(_) => println!("unexpected: I3 accepted"),
    }
    let com = build_com(&cat, (0, 2), std::slice::from_ref(&x3))?;
    println!("Com on X3 is {}", com.category.kind());

    let tw = TwQuiver::new(q, vec![x3.to_twisted(q)?])?;
    let r = is_brace_morphism(&EmbrMap(&tw), &SampleConfig { seed: 1, samples: 20, arity_max: 3, degrees: (0, 0) })?;
    println!("embr preserves braces on {} samples: {}", r.samples, r.passed());
    Ok(())
}
