//! Exact linear algebra over Q and GF(p): solving, ranks and homology.

use embrace::exact::{homology, FieldSpec, SparseMatrix};

fn main() -> embrace::Result<()> {
    let q = FieldSpec::Rational;
    let a = SparseMatrix::from_rows_i64(q, &[vec![2, 1, 0], vec![0, 3, 1], vec![2, 4, 1]]);
    println!("rank over Q: {}", a.rank());
    let b = [q.from_i64(1), q.from_i64(2), q.from_i64(3)];
    match a.solve(&b)? {
        Some(x) => println!("solution: {}", x.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")),
        None => println!("inconsistent"),
    }
    println!("1/3 + 1/6 = {}", &q.from_ratio(1, 3)? + &q.from_ratio(1, 6)?);

    // the same matrix mod 3 loses rank
    let f3 = FieldSpec::prime(3)?;
    let a3 = SparseMatrix::from_rows_i64(f3, &[vec![2, 1, 0], vec![0, 3, 1], vec![2, 4, 1]]);
    println!("rank over {f3}: {}", a3.rank());

    // homology of k --(1 1)ᵀ--> k² --(1 -1)--> k
    let d0 = SparseMatrix::from_rows_i64(q, &[vec![1], vec![1]]);
    let d1 = SparseMatrix::from_rows_i64(q, &[vec![1, -1]]);
    let h = homology(&d0, &d1)?;
    println!("middle homology: dim {} (cycles {}, boundaries {})", h.dim, h.cycle_dim, h.boundary_rank);
    Ok(())
}
