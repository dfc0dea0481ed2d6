use crate::graded::{Arrow, ArrowId, GradedQuiver, LinComb};
use crate::hochschild::{Cochain, Key};

/// The quiver of `a[ε] = a ⊕ εa` over `k[ε]/(ε²)`, presented over `k`.
///
/// Arrows `0..n` are the base arrows under their own ids and arrow `n + a`
/// is `εa`. Object ids are unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Doubled {
    base: GradedQuiver,
    quiver: GradedQuiver,
}

impl Doubled {
    pub fn new(base: &GradedQuiver) -> Self {
        let mut arrows: Vec<Arrow> = base.arrows().map(|(_, a)| a.clone()).collect();
        for (_, a) in base.arrows() {
            arrows.push(Arrow { name: format!("ε{}", a.name), ..a.clone() });
        }
        let names = base.objects().map(|o| base.object_name(o).to_string()).collect();
        let quiver = GradedQuiver::from_parts(base.field(), names, arrows).expect("doubling keeps a valid quiver");
        Doubled { base: base.clone(), quiver }
    }

    pub fn base(&self) -> &GradedQuiver {
        &self.base
    }

    pub fn quiver(&self) -> &GradedQuiver {
        &self.quiver
    }

    pub fn eps(&self, a: ArrowId) -> ArrowId {
        ArrowId(self.base.num_arrows() + a.0)
    }

    /// The base arrow behind `a` and whether `a` carries an `ε`.
    pub fn split(&self, a: ArrowId) -> (ArrowId, bool) {
        let n = self.base.num_arrows();
        if a.0 < n {
            (a, false)
        } else {
            (ArrowId(a.0 - n), true)
        }
    }

    pub fn eps_comb(&self, v: &LinComb) -> LinComb {
        v.map_arrows(|a| self.eps(a))
    }

    /// The `k[ε]`-multilinear extension of `ψ`: an argument `εf` makes the
    /// value `ε` times the value on `f`, and two of them give zero.
    pub fn extend(&self, psi: &Cochain) -> Cochain {
        let mut out = Cochain::zero(psi.hochschild_degree());
        for (k, v) in psi.entries() {
            out.add_entry(k.clone(), v);
            let ev = self.eps_comb(v);
            for pos in 0..k.arity() {
                let mut args = k.args.clone();
                args[pos] = self.eps(args[pos]);
                out.add_entry(Key::new(k.start, args), &ev);
            }
        }
        out
    }

    /// `ψε`, extended `k[ε]`-multilinearly.
    pub fn eps_times(&self, psi: &Cochain) -> Cochain {
        let mut out = Cochain::zero(psi.hochschild_degree());
        for (k, v) in psi.entries() {
            out.add_entry(k.clone(), &self.eps_comb(v));
        }
        out
    }

    /// Reduction along `k[ε] → k`: drop every `ε` argument and value.
    pub fn reduce(&self, psi: &Cochain) -> Cochain {
        let n = self.base.num_arrows();
        let mut out = Cochain::zero(psi.hochschild_degree());
        for (k, v) in psi.entries() {
            if k.args.iter().any(|a| a.0 >= n) {
                continue;
            }
            let mut plain = LinComb::new();
            for (a, c) in v.iter().filter(|(a, _)| a.0 < n) {
                plain.add_term(a, c);
            }
            out.add_entry(k.clone(), &plain);
        }
        out
    }

    /// The `ε` part of a cochain that is `ε`-linear on base arguments.
    pub fn eps_part(&self, psi: &Cochain) -> Cochain {
        let n = self.base.num_arrows();
        let mut out = Cochain::zero(psi.hochschild_degree());
        for (k, v) in psi.entries() {
            if k.args.iter().any(|a| a.0 >= n) {
                continue;
            }
            let mut e = LinComb::new();
            for (a, c) in v.iter().filter(|(a, _)| a.0 >= n) {
                e.add_term(ArrowId(a.0 - n), c);
            }
            out.add_entry(k.clone(), &e);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{dual_numbers, dual_numbers_cocycle};
    use crate::exact::FieldSpec;

    #[test]
    fn extend_reduce_round_trip() {
        let e1 = dual_numbers(FieldSpec::Rational);
        let d = Doubled::new(&e1.quiver);
        assert_eq!(d.quiver().num_arrows(), 4);
        let phi = dual_numbers_cocycle(&e1);
        let ext = d.extend(&e1.m);
        assert_eq!(d.reduce(&ext), e1.m);
        assert!(d.eps_part(&ext).is_zero());
        let both = ext.plus(&d.eps_times(&phi)).unwrap();
        assert_eq!(d.eps_part(&both), phi);
        assert_eq!(d.split(d.eps(ArrowId(1))), (ArrowId(1), true));
        ext.validate(d.quiver()).unwrap();
    }
}
