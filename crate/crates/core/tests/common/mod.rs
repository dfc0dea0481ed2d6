//! Oracles written against plain definitions, sharing no code paths with the
//! library beyond quiver bookkeeping and field arithmetic.

#![allow(dead_code)]

use embrace::exact::Scalar;
use embrace::graded::{ArrowId, GradedQuiver, LinComb, ObjId};
use embrace::hochschild::{Cochain, Key};
use embrace::twisted::{MorphismMatrix, TwQuiver};

/// `m(f, g)` extended bilinearly from the table of basis products.
pub fn product(q: &GradedQuiver, m: &Cochain, f: &LinComb, g: &LinComb) -> LinComb {
    let mut out = LinComb::new();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            if q.arrow(b).target != q.arrow(a).source {
                continue;
            }
            out.add_scaled(&m.eval(q.arrow(b).source, &[a, b]), &(ca * cb));
        }
    }
    out
}

/// `f(a_1, …, a_n)` for basis arrows, with `a_n` applied first.
fn value(q: &GradedQuiver, f: &Cochain, args: &[ArrowId]) -> LinComb {
    let start = match args.last() {
        Some(&a) => q.arrow(a).source,
        None => unreachable!("arity-zero values are read with an explicit object"),
    };
    f.eval(start, args)
}

fn single(q: &GradedQuiver, a: ArrowId) -> LinComb {
    LinComb::single(a, q.field().one())
}

/// The textbook Hochschild coboundary of an arity-`n` cochain on a linear
/// category concentrated in degree zero:
/// `a_1 f(a_2..) + Σ (-1)^i f(.., a_i a_{i+1}, ..) + (-1)^{n+1} f(..a_n) a_{n+1}`.
pub fn classical_differential(q: &GradedQuiver, m: &Cochain, f: &Cochain, n: usize) -> Cochain {
    let field = q.field();
    let mut out = Cochain::zero(f.degree() + 1);
    for (start, args) in q.composable_tuples(n + 1) {
        let mut v = LinComb::new();
        // a_1 · f(a_2, …, a_{n+1})
        let inner = if n == 0 { f.eval(q.arrow(args[0]).source, &[]) } else { value(q, f, &args[1..]) };
        v.add(&product(q, m, &single(q, args[0]), &inner));
        for i in 1..=n {
            let merged = product(q, m, &single(q, args[i - 1]), &single(q, args[i]));
            let sign = if i % 2 == 0 { field.one() } else { -field.one() };
            for (c, coeff) in merged.iter() {
                let mut tuple = args[..i - 1].to_vec();
                tuple.push(c);
                tuple.extend_from_slice(&args[i + 1..]);
                let w = f.eval(start, &tuple);
                v.add_scaled(&w, &(coeff * &sign));
            }
        }
        let outer = f.eval(q.arrow(args[n]).target, &args[..n]);
        let sign = if (n + 1).is_multiple_of(2) { field.one() } else { -field.one() };
        v.add_scaled(&product(q, m, &outer, &single(q, args[n])), &sign);
        if !v.is_zero() {
            out.add_entry(Key::new(start, args), &v);
        }
    }
    out
}

/// Rank by Gaussian elimination on dense rows.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        let pivot: Vec<Scalar> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &(&f * y);
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// Basis of `Hom(a^{⊗n}, a)` as (tuple, start, value arrow).
fn bar_basis(q: &GradedQuiver, n: usize) -> Vec<(ObjId, Vec<ArrowId>, ArrowId)> {
    let mut out = Vec::new();
    for (start, args) in q.composable_tuples(n) {
        let end = match args.first() {
            Some(&a) => q.arrow(a).target,
            None => start,
        };
        for &b in q.hom(start, end) {
            out.push((start, args.clone(), b));
        }
    }
    out
}

fn basis_cochain(q: &GradedQuiver, e: &(ObjId, Vec<ArrowId>, ArrowId)) -> Cochain {
    let mut c = Cochain::zero(e.1.len() as i64);
    c.add_entry(Key::new(e.0, e.1.clone()), &single(q, e.2));
    c
}

/// Rank of the classical coboundary `Hom(a^{⊗n}, a) → Hom(a^{⊗n+1}, a)`.
pub fn bar_rank(q: &GradedQuiver, m: &Cochain, n: usize) -> usize {
    let here = bar_basis(q, n);
    let next = bar_basis(q, n + 1);
    let rows = here
        .iter()
        .map(|e| {
            let d = classical_differential(q, m, &basis_cochain(q, e), n);
            next.iter()
                .map(|(s, args, b)| d.get(&Key::new(*s, args.clone())).and_then(|v| v.get(*b).cloned()).unwrap_or_else(|| q.field().zero()))
                .collect()
        })
        .collect();
    rank(rows)
}

/// `dim HH^p` from the unnormalized bar complex.
pub fn bar_hh_dims(q: &GradedQuiver, m: &Cochain, upto: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=upto).map(|n| bar_rank(q, m, n)).collect();
    (0..=upto)
        .map(|p| bar_basis(q, p).len() - ranks[p] - if p == 0 { 0 } else { ranks[p - 1] })
        .collect()
}

/// Matrix product of twisted morphisms over a degree-zero base.
pub fn matrix_product(tw: &TwQuiver, m: &Cochain, f: &MorphismMatrix, g: &MorphismMatrix) -> MorphismMatrix {
    let mut out = MorphismMatrix::new();
    for ((k, j1), fv) in f.entries() {
        for ((j2, i), gv) in g.entries() {
            if j1 == j2 {
                out.add(*k, *i, &product(tw.base(), m, fv, gv));
            }
        }
    }
    out
}

/// The structure of precomplexes from matrix algebra alone:
/// `m = fg`, `d(f) = δf - (-1)^{|f|} fδ`, `c = -δ²`.
pub fn precomplex_structure(tw: &TwQuiver, m: &Cochain) -> Cochain {
    let q = tw.quiver();
    let one = q.field().one();
    let mat = |f: &LinComb| tw.to_matrix(f);
    let back = |s, t, f: &MorphismMatrix| tw.from_matrix(s, t, f).expect("composable entries");
    let mut out = Cochain::zero(2);
    for (start, args) in q.composable_tuples(2) {
        let t = q.arrow(args[0]).target;
        let v = matrix_product(tw, m, &mat(&single(q, args[0])), &mat(&single(q, args[1])));
        out.add_entry(Key::new(start, args), &back(start, t, &v));
    }
    for (a, arr) in q.arrows() {
        let f = mat(&single(q, a));
        let mut v = back(arr.source, arr.target, &matrix_product(tw, m, &tw.objects()[arr.target.0].delta, &f));
        let right = back(arr.source, arr.target, &matrix_product(tw, m, &f, &tw.objects()[arr.source.0].delta));
        let sign = if arr.degree % 2 == 0 { -one.clone() } else { one.clone() };
        v.add_scaled(&right, &sign);
        out.add_entry(Key::new(arr.source, vec![a]), &v);
    }
    for o in q.objects() {
        let d = &tw.objects()[o.0].delta;
        let sq = back(o, o, &matrix_product(tw, m, d, d));
        out.add_entry(Key::new(o, vec![]), &sq.negated());
    }
    out
}
