//! The characteristic class commutes with chain maps up to an explicit homotopy.

use embrace::ainf::{Kind, StructuredCategory};
use embrace::corpus;
use embrace::deformation::{ChainMap, FirstOrderDeformation, Lab};
use embrace::exact::FieldSpec;
use embrace::graded::LinComb;
use embrace::twisted::MorphismMatrix;

fn main() -> embrace::Result<()> {
    let e1 = corpus::dual_numbers(FieldSpec::Rational);
    let q = &e1.quiver;
    let cat = StructuredCategory::new(q.clone(), e1.m.clone(), Kind::Linear)?;
    let def = FirstOrderDeformation::new(cat.clone(), corpus::dual_numbers_cocycle(&e1))?;
    let (x3, x4) = (corpus::x_complex(&e1, "X3", 0, 3), corpus::x_complex(&e1, "X4", 0, 4));
    let lab = Lab::new(def, (0, 3), &[x3, x4])?;
    let com = lab.com();
    let (c3, c4) = (lab.object("X3")?, lab.object("X4")?);

    // multiplication by x in the middle term, X3 → X4
    let x = LinComb::single(corpus::find(q, "x")?, q.field().one());
    let middle = ChainMap::from_matrix(com, "x-middle", (c3, c4), 0, &MorphismMatrix::new().with_entry(1, 1, x))?;
    let maps = [ChainMap::identity(com, &cat, c3)?, ChainMap::identity(com, &cat, c4)?, middle];
    let tq = com.tw.quiver();
    for r in lab.verify_centrality(&maps)? {
        let h = r.homotopy.as_ref().map_or("none".into(), |h| tq.format_lincomb(h));
        println!("{}: χf - fχ = {}, homotopy {h}", r.name, tq.format_lincomb(&r.difference));
    }
    Ok(())
}
