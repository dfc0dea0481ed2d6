//! Brace operations on `C_br(a)` and the operations derived from them.

use std::collections::BTreeMap;

use crate::exact::Scalar;
use crate::graded::{koszul_swap_sign, ArrowId, GradedQuiver, LinComb, Sign};
use crate::hochschild::cochain::{suspend, unsuspend, Cochain, Key, SuspendedCochain};

/// The rule producing the sign of a map of degree `p` passing an element of
/// degree `q`. Everything here uses [`koszul_swap_sign`]; the indirection only
/// exists so that a deliberately broken rule can be injected in self-tests.
pub type SwapRule = fn(i64, i64) -> Sign;

/// A rule that ignores all signs. Used to check that the verification
/// suites notice a broken sign engine.
pub fn faulty_swap(_: i64, _: i64) -> Sign {
    Sign::PLUS
}

/// `x{y_1, …, y_k}`: the sum over all order-preserving insertions of the
/// `y_j` into the slots of `x`, with Koszul signs.
pub fn brace(q: &GradedQuiver, x: &SuspendedCochain, ys: &[&SuspendedCochain]) -> SuspendedCochain {
    brace_with(q, x, ys, koszul_swap_sign)
}

type Index<'a> = BTreeMap<ArrowId, Vec<(&'a Key, Scalar)>>;

fn index(y: &SuspendedCochain) -> Index<'_> {
    let mut idx: Index<'_> = BTreeMap::new();
    for (k, v) in y.entries() {
        for (b, c) in v.iter() {
            idx.entry(b).or_default().push((k, c.clone()));
        }
    }
    idx
}

pub(crate) fn brace_with(
    q: &GradedQuiver,
    x: &SuspendedCochain,
    ys: &[&SuspendedCochain],
    swap: SwapRule,
) -> SuspendedCochain {
    let degree = x.degree() + ys.iter().map(|y| y.degree()).sum::<i64>();
    let mut out = SuspendedCochain::zero(degree);
    let k = ys.len();
    if k == 0 {
        return x.clone();
    }
    let indices: Vec<Index<'_>> = ys.iter().map(|y| index(y)).collect();
    let ydeg: Vec<i64> = ys.iter().map(|y| y.degree()).collect();
    let one = q.field().one();
    for (xk, xv) in x.entries() {
        let n = xk.args.len();
        if k > n {
            continue;
        }
        for slots in increasing_tuples(n, k) {
            let mut ctx = Insertion {
                q,
                x_args: &xk.args,
                slots: &slots,
                indices: &indices,
                ydeg: &ydeg,
                swap,
                start: xk.start,
                value: xv,
            };
            ctx.expand(0, 0, Vec::new(), 0, one.clone(), &mut out);
        }
    }
    out
}

struct Insertion<'a> {
    q: &'a GradedQuiver,
    x_args: &'a [ArrowId],
    slots: &'a [usize],
    indices: &'a [Index<'a>],
    ydeg: &'a [i64],
    swap: SwapRule,
    start: crate::graded::ObjId,
    value: &'a LinComb,
}

impl Insertion<'_> {
    /// Places `y_j, y_{j+1}, …`; `pos` is the next slot of `x` to copy,
    /// `passed` the total suspended degree of the arguments placed so far.
    fn expand(&mut self, j: usize, pos: usize, args: Vec<ArrowId>, passed: i64, coeff: Scalar, out: &mut SuspendedCochain) {
        let sdeg = |a: ArrowId| self.q.degree(a) - 1;
        if j == self.slots.len() {
            let mut args = args;
            args.extend_from_slice(&self.x_args[pos..]);
            out.add_entry(Key::new(self.start, args), &self.value.scaled(&coeff));
            return;
        }
        let slot = self.slots[j];
        let mut prefix = args;
        let mut passed = passed;
        for &a in &self.x_args[pos..slot] {
            prefix.push(a);
            passed += sdeg(a);
        }
        let sign = (self.swap)(self.ydeg[j], passed);
        let Some(candidates) = self.indices[j].get(&self.x_args[slot]) else {
            return;
        };
        for (yk, c) in candidates {
            let mut next = prefix.clone();
            let mut p = passed;
            for &a in &yk.args {
                next.push(a);
                p += sdeg(a);
            }
            let coeff = sign.apply(&coeff * c);
            self.expand(j + 1, slot + 1, next, p, coeff, out);
        }
    }
}

/// All strictly increasing `k`-tuples in `0..n`.
pub(crate) fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// `⟨x, y⟩ = x{y} - (-1)^{|x||y|} y{x}`.
pub fn lie_bracket(q: &GradedQuiver, x: &SuspendedCochain, y: &SuspendedCochain) -> SuspendedCochain {
    lie_bracket_with(q, x, y, koszul_swap_sign)
}

pub(crate) fn lie_bracket_with(q: &GradedQuiver, x: &SuspendedCochain, y: &SuspendedCochain, swap: SwapRule) -> SuspendedCochain {
    let xy = brace_with(q, x, &[y], swap);
    let yx = brace_with(q, y, &[x], swap);
    let s = koszul_swap_sign(x.degree(), y.degree());
    let mut out = xy;
    out.add_scaled(&yx, &s.apply(-q.field().one()))
        .expect("both terms have degree |x| + |y|");
    out
}

/// Braces on `C(a)`, transported through the suspension identification.
pub fn brace_plain(q: &GradedQuiver, phi: &Cochain, psis: &[&Cochain]) -> Cochain {
    let x = suspend(q, phi);
    let ys: Vec<SuspendedCochain> = psis.iter().map(|p| suspend(q, p)).collect();
    let refs: Vec<&SuspendedCochain> = ys.iter().collect();
    unsuspend(q, &brace(q, &x, &refs))
}

/// The Gerstenhaber bracket on `C(a)`, transported from `⟨-,-⟩`.
pub fn gerstenhaber_bracket(q: &GradedQuiver, phi: &Cochain, psi: &Cochain) -> Cochain {
    unsuspend(q, &lie_bracket(q, &suspend(q, phi), &suspend(q, psi)))
}

/// The Hochschild differential `d = ⟨b, -⟩` of the structure `mu`, where
/// `b` is the suspension of `mu`.
pub fn hochschild_differential(q: &GradedQuiver, mu: &Cochain, phi: &Cochain) -> Cochain {
    hochschild_differential_with(q, mu, phi, koszul_swap_sign)
}

pub(crate) fn hochschild_differential_with(q: &GradedQuiver, mu: &Cochain, phi: &Cochain, swap: SwapRule) -> Cochain {
    let b = suspend(q, mu);
    unsuspend(q, &lie_bracket_with(q, &b, &suspend(q, phi), swap))
}

/// The classical dot product on `C(a)`:
/// `φ • ψ = Σ_k (-1)^ε φ(1^{⊗n-k-1} ⊗ ψ ⊗ 1^{⊗k})` with
/// `ε = (deg φ + k + 1)(ar ψ + 1)`, where applying `1 ⊗ ψ ⊗ 1` follows the
/// Koszul rule. Implemented directly, independently of the braces.
pub fn dot(q: &GradedQuiver, phi: &Cochain, psi: &Cochain) -> Cochain {
    let mut out = Cochain::zero(phi.hochschild_degree() + psi.hochschild_degree() - 1);
    let mut idx: BTreeMap<ArrowId, Vec<(&Key, Scalar)>> = BTreeMap::new();
    for (k, v) in psi.entries() {
        for (b, c) in v.iter() {
            idx.entry(b).or_default().push((k, c.clone()));
        }
    }
    let deg_phi = phi.hochschild_degree();
    for (pk, pv) in phi.entries() {
        let n = pk.arity();
        for pos in 0..n {
            let k = (n - 1 - pos) as i64;
            let Some(cands) = idx.get(&pk.args[pos]) else { continue };
            let passed: i64 = pk.args[..pos].iter().map(|&a| q.degree(a)).sum();
            for (yk, c) in cands {
                let m = yk.arity() as i64;
                let j = psi.internal_degree(yk.arity());
                let sign = koszul_swap_sign(j, passed) * Sign::from_exponent((deg_phi + k + 1) * (m + 1));
                let mut args = pk.args[..pos].to_vec();
                args.extend_from_slice(&yk.args);
                args.extend_from_slice(&pk.args[pos + 1..]);
                out.add_entry(Key::new(pk.start, args), &pv.scaled(&sign.apply(c.clone())));
            }
        }
    }
    out
}

/// Evaluates `φ` multilinearly on linear combinations `(g_n, …, g_1)` in
/// tensor order starting at object `start`. Tuples that are not composable
/// contribute nothing.
pub fn eval_multilinear(q: &GradedQuiver, phi: &Cochain, start: crate::graded::ObjId, args: &[&LinComb]) -> LinComb {
    let mut out = LinComb::new();
    let mut tuples: Vec<(Vec<ArrowId>, Scalar)> = vec![(Vec::new(), q.field().one())];
    for g in args.iter().rev() {
        let mut next = Vec::new();
        for (t, c) in &tuples {
            for (a, d) in g.iter() {
                let mut t2 = t.clone();
                t2.push(a);
                next.push((t2, c * d));
            }
        }
        tuples = next;
    }
    for (mut rev, c) in tuples {
        rev.reverse();
        if q.path_ends(start, &rev).is_err() {
            continue;
        }
        if let Some(v) = phi.get(&Key::new(start, rev)) {
            out.add_scaled(v, &c);
        }
    }
    out
}

/// Convenience: the composition `m(f, g)` of two linear combinations.
pub fn compose(q: &GradedQuiver, m: &Cochain, f: &LinComb, g: &LinComb) -> LinComb {
    let mut out = LinComb::new();
    for (b, c) in g.iter() {
        let start = q.arrow(b).source;
        out.add_scaled(&eval_multilinear(q, m, start, &[f, &LinComb::single(b, c.clone())]), &q.field().one());
    }
    out
}
