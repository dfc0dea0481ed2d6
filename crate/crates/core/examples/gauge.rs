//! Gauge equivalences between first-order deformations.

use embrace::ainf::{Kind, StructuredCategory};
use embrace::corpus;
use embrace::deformation::{coboundary_preimage, gauge_apply, FirstOrderDeformation};
use embrace::exact::FieldSpec;
use embrace::workbench::tasks::format_cochain;

fn main() -> embrace::Result<()> {
    let e1 = corpus::dual_numbers(FieldSpec::Rational);
    let q = &e1.quiver;
    let cat = StructuredCategory::new(q.clone(), e1.m.clone(), Kind::Linear)?;
    let phi = corpus::dual_numbers_cocycle(&e1);
    let psi = corpus::dual_numbers_psi(&e1);
    let shifted = phi.plus(&cat.d(&psi))?;

    let a = FirstOrderDeformation::new(cat.clone(), phi.clone())?;
    let b = FirstOrderDeformation::new(cat.clone(), shifted.clone())?;
    let h = coboundary_preimage(&cat, &shifted.minus(&phi)?)?.expect("the difference is d(ψ)");
    let iso = gauge_apply(&a, &b, &h)?;
    println!("gauge h = {}, functor ε part = {}", format_cochain(q, &iso.h), format_cochain(q, &iso.eps_part));

    let zero = FirstOrderDeformation::trivial(cat.clone());
    println!("φ is a coboundary: {}", coboundary_preimage(&cat, &phi)?.is_some());
    match gauge_apply(&a, &zero, &psi) {
        Err(e) => println!("ψ does not gauge φ to 0: {e}"),
        Ok(_) => println!("unexpected gauge"),
    }
    Ok(())
}
