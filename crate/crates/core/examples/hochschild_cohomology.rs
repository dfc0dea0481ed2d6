//! Hochschild cohomology of the small corpus categories.

use embrace::ainf::{Kind, StructuredCategory};
use embrace::corpus;
use embrace::deformation::hochschild_cohomology;
use embrace::exact::FieldSpec;
use embrace::workbench::tasks::format_cochain;

fn main() -> embrace::Result<()> {
    for (name, l) in [
        ("k", corpus::field_object(FieldSpec::Rational)),
        ("k[x]/(x²)", corpus::dual_numbers(FieldSpec::Rational)),
        ("k[x]/(x²) over GF(2)", corpus::dual_numbers(FieldSpec::Prime(2))),
        ("path category of 1 → 2", corpus::a2_path(FieldSpec::Rational)),
    ] {
        let cat = StructuredCategory::new(l.quiver.clone(), l.m.clone(), Kind::Linear)?;
        println!("{name}");
        for p in 0..=3 {
            let h = hochschild_cohomology(&cat, p)?;
            let reps: Vec<String> = h.representatives.iter().map(|r| format_cochain(&l.quiver, r)).collect();
            println!("  HH^{p}: dim {} from {} cochains  [{}]", h.dim, h.cochain_dim, reps.join(" | "));
        }
    }
    Ok(())
}
