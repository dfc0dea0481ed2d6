//! Lifting precomplexes to the deformed category: the structure of the lifts
//! against `μ̄ + d(δ')ε`.

use embrace::ainf::{Kind, StructuredCategory};
use embrace::corpus;
use embrace::deformation::{verify_precomplexes, FirstOrderDeformation};
use embrace::exact::FieldSpec;
use embrace::graded::LinComb;
use embrace::twisted::MorphismMatrix;

fn main() -> embrace::Result<()> {
    let field = FieldSpec::Prime(5);
    let e1 = corpus::dual_numbers(field);
    let q = &e1.quiver;
    let cat = StructuredCategory::new(q.clone(), e1.m.clone(), Kind::Linear)?;
    let def = FirstOrderDeformation::new(cat, corpus::dual_numbers_cocycle(&e1))?;
    let x3 = corpus::x_complex(&e1, "X3", 0, 3);
    let i2 = corpus::repeated_complex(q, "I2", "A", "1", 0, 2)?;

    let (one, x) = (corpus::find(q, "1")?, corpus::find(q, "x")?);
    let mut v = LinComb::single(one, field.from_i64(2));
    v.add_term(x, &field.from_i64(3));
    let gammas = [
        vec![MorphismMatrix::new(), MorphismMatrix::new()],
        vec![MorphismMatrix::new().with_entry(1, 0, v.clone()), MorphismMatrix::new().with_entry(1, 0, v)],
    ];
    for (label, gamma) in ["trivial", "δ' = 2 + 3x"].iter().zip(&gammas) {
        let r = verify_precomplexes(&def, (0, 2), &[x3.clone(), i2.clone()], gamma)?;
        println!("{label}: objects {:?}, identity holds: {}", r.objects, r.passed());
    }
    Ok(())
}
