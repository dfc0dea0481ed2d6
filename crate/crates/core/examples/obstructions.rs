//! Characteristic classes of complexes under a first-order deformation, and
//! the lifts they obstruct.

use embrace::ainf::{Kind, StructuredCategory};
use embrace::corpus;
use embrace::deformation::{FirstOrderDeformation, Lab};
use embrace::exact::FieldSpec;

fn main() -> embrace::Result<()> {
    let e1 = corpus::dual_numbers(FieldSpec::Rational);
    let cat = StructuredCategory::new(e1.quiver.clone(), e1.m.clone(), Kind::Linear)?;
    let def = FirstOrderDeformation::new(cat, corpus::dual_numbers_cocycle(&e1))?;
    let complexes: Vec<_> = (1..=4).map(|n| corpus::x_complex(&e1, &format!("X{n}"), 0, n)).collect();

    for c in &complexes {
        let lab = Lab::new(def.clone(), (0, 3), std::slice::from_ref(c))?;
        let o = lab.object(&c.name)?;
        let tq = lab.com().tw.quiver();
        let r = lab.obstruction_and_lift(o)?;
        print!("{}: -φ(δ,δ) = {}", c.name, tq.format_lincomb(&r.representative));
        match &r.witness {
            Some(w) => println!(", lifts with δ' = {}", tq.format_lincomb(w)),
            None => println!(", obstructed (rank {} < {})", r.evidence.rank, r.evidence.augmented_rank),
        }
    }

    let lab = Lab::new(def, (0, 3), &complexes[..3])?;
    let locus = lab.phi_infinity_locus()?;
    println!("lifting complexes: {:?}, obstructed: {:?}", locus.dg_part(), locus.curved_part());
    Ok(())
}
