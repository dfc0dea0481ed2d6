//! Validating structures by `b{b} = 0`, the cdg identities, restriction and the ∞-part.

use embrace::ainf::{check_structure, infinity_part, restrict_named, Kind, StructuredCategory};
use embrace::corpus;
use embrace::exact::FieldSpec;

fn main() -> embrace::Result<()> {
    let (q, mu) = corpus::dg_dual_numbers(FieldSpec::Rational);
    println!("dg dual numbers: {:?}", check_structure(&q, &mu, Kind::Dg).passed());
    let (q, mu) = corpus::synthetic_a_infinity(FieldSpec::Rational);
    println!("A∞ with a ternary product: {:?}", check_structure(&q, &mu, Kind::AInfinity).passed());

    // 1·x = 2x is not associative: (1·1)·x ≠ 1·(1·x)
    let e1 = corpus::dual_numbers(FieldSpec::Rational);
    let skew = corpus::composition(&e1.quiver, &[("1", "1", &[("1", 1)]), ("1", "x", &[("x", 2)]), ("x", "1", &[("x", 1)])])?;
    let r = check_structure(&e1.quiver, &skew, Kind::Linear);
    println!("rejected: {}", r.first_failure.unwrap_or_default());
    if let Some(a) = r.cdg.and_then(|c| c.associativity) {
        println!("  {a}");
    }
    if let Err(e) = StructuredCategory::new(e1.quiver.clone(), corpus::dual_numbers_psi(&e1), Kind::Linear) {
        println!("wrong degree: {e}");
    }

    let e2 = corpus::a2_path(FieldSpec::Rational);
    let cat = StructuredCategory::new(e2.quiver, e2.m, Kind::Linear)?;
    let sub = restrict_named(&cat, &["2"])?;
    println!("restricted to one object: {} arrows", sub.quiver().num_arrows());
    println!("∞-part keeps {} objects", infinity_part(&cat)?.quiver().num_objects());
    Ok(())
}
