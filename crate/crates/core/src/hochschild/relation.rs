//! Both sides of the brace relation
//! `x{x_1..x_m}{y_1..y_n} = Σ ± x{…, x_k{y_{i_k}, …}, …}`, expanded independently.

use crate::graded::{koszul_swap_sign, GradedQuiver, Sign};
use crate::hochschild::brace::{brace_with, SwapRule};
use crate::hochschild::cochain::SuspendedCochain;

/// Left hand side `x{x_1..x_m}{y_1..y_n}`.
pub fn relation_lhs(
    q: &GradedQuiver,
    x: &SuspendedCochain,
    xs: &[&SuspendedCochain],
    ys: &[&SuspendedCochain],
    swap: SwapRule,
) -> SuspendedCochain {
    let inner = brace_with(q, x, xs, swap);
    brace_with(q, &inner, ys, swap)
}

/// Right hand side: every way of distributing consecutive blocks of the `y`s
/// into the `x_k`, keeping the remaining `y`s in order around them. The sign
/// is `Σ_k |x_k| Σ_{l before block k} |y_l|`.
pub fn relation_rhs(
    q: &GradedQuiver,
    x: &SuspendedCochain,
    xs: &[&SuspendedCochain],
    ys: &[&SuspendedCochain],
    swap: SwapRule,
) -> SuspendedCochain {
    let degree = x.degree() + xs.iter().chain(ys).map(|c| c.degree()).sum::<i64>();
    let mut out = SuspendedCochain::zero(degree);
    let mut blocks = Vec::new();
    place(xs.len(), ys.len(), 0, &mut blocks, &mut |blocks: &[(usize, usize)]| {
        let mut exponent_sign = Sign::PLUS;
        let mut args: Vec<SuspendedCochain> = Vec::new();
        let mut cursor = 0;
        for (k, &(start, len)) in blocks.iter().enumerate() {
            for y in &ys[cursor..start] {
                args.push((*y).clone());
            }
            let before: i64 = ys[..start].iter().map(|y| y.degree()).sum();
            exponent_sign = exponent_sign * koszul_swap_sign(xs[k].degree(), before);
            args.push(brace_with(q, xs[k], &ys[start..start + len], swap));
            cursor = start + len;
        }
        for y in &ys[cursor..] {
            args.push((*y).clone());
        }
        let refs: Vec<&SuspendedCochain> = args.iter().collect();
        let term = brace_with(q, x, &refs, swap);
        out.add_scaled(&term, &exponent_sign.apply(q.field().one()))
            .expect("homogeneous terms");
    });
    out
}

/// Enumerates `(start_k, len_k)` for `k < m` with
/// `start_k + len_k ≤ start_{k+1}` and `start_{m-1} + len_{m-1} ≤ n`.
fn place(m: usize, n: usize, from: usize, blocks: &mut Vec<(usize, usize)>, f: &mut dyn FnMut(&[(usize, usize)])) {
    if blocks.len() == m {
        f(blocks);
        return;
    }
    for start in from..=n {
        for len in 0..=(n - start) {
            blocks.push((start, len));
            place(m, n, start + len, blocks, f);
            blocks.pop();
        }
    }
}
