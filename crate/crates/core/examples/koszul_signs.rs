//! Graded quivers, shifts and the signs of canonical isomorphisms.

use embrace::exact::FieldSpec;
use embrace::graded::{canonical_iso_sign, koszul_swap_sign, GradedQuiver};

fn main() -> embrace::Result<()> {
    let q = GradedQuiver::builder(FieldSpec::Rational)
        .object("A")
        .object("B")
        .arrow("A", "A", "1", 0)
        .arrow("A", "B", "u", 1)
        .arrow("A", "B", "v", 2)
        .build()?;
    for (_, a) in q.arrows() {
        println!("{}: {} -> {} in degree {}", a.name, q.object_name(a.source), q.object_name(a.target), a.degree);
    }
    let s = q.shift(1);
    println!("after one suspension the degrees are {:?}", s.arrows().map(|(_, a)| a.degree).collect::<Vec<_>>());

    for (m, n) in [(1, 1), (1, 2), (2, 3)] {
        println!("swapping degrees {m} and {n}: {:+}", koszul_swap_sign(m, n).to_i64());
    }
    // moving shifts (1, 1) past a map of degree 1 and arguments of degrees (0, 1)
    println!("canonical iso sign: {:+}", canonical_iso_sign(&[1, 1], 1, &[0, 1])?.to_i64());
    Ok(())
}
