//! The Koszul sign engine. Every sign in the crate is produced by
//! [`koszul_swap_sign`] or [`canonical_iso_sign`].

use std::ops::Mul;

use crate::error::{Error, Result};
use crate::exact::Scalar;

/// A sign `(-1)^e`, stored as `e mod 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Sign(bool);

impl Sign {
    pub const PLUS: Sign = Sign(false);
    pub const MINUS: Sign = Sign(true);

    pub fn from_exponent(e: i64) -> Sign {
        Sign(e.rem_euclid(2) == 1)
    }

    pub fn exponent(self) -> u8 {
        self.0 as u8
    }

    pub fn is_negative(self) -> bool {
        self.0
    }

    pub fn apply(self, s: Scalar) -> Scalar {
        s.neg_if(self.0)
    }

    pub fn to_i64(self) -> i64 {
        if self.0 {
            -1
        } else {
            1
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign(self.0 ^ rhs.0)
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::PLUS, |a, b| a * b)
    }
}

/// Sign of `m ⊗ n ↦ n ⊗ m` for homogeneous `m`, `n`.
pub fn koszul_swap_sign(deg_m: i64, deg_n: i64) -> Sign {
    Sign::from_exponent(deg_m * deg_n)
}

/// Sign of the canonical isomorphism
/// `Σ^{i - Σ i_k}[M_1 ⊗ … ⊗ M_n, M] → [Σ^{i_1}M_1 ⊗ … ⊗ Σ^{i_n}M_n, Σ^i M]`
/// evaluated on `φ` and `m_1 ⊗ … ⊗ m_n` (tensor order). The exponent is
/// `(i_1+…+i_n)|φ| + i_2|m_1| + … + i_n(|m_1|+…+|m_{n-1}|)`.
pub fn canonical_iso_sign(shifts: &[i64], deg_phi: i64, arg_degrees: &[i64]) -> Result<Sign> {
    if shifts.len() != arg_degrees.len() {
        return Err(Error::DimensionMismatch {
            expected: shifts.len(),
            found: arg_degrees.len(),
        });
    }
    let total: i64 = shifts.iter().sum();
    let mut exponent = total * deg_phi;
    let mut prefix = 0i64;
    for (s, d) in shifts.iter().zip(arg_degrees) {
        exponent += s * prefix;
        prefix += d;
    }
    Ok(Sign::from_exponent(exponent))
}

/// A canonical isomorphism with its shift data; the source shift is
/// `target_shift - Σ shifts`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalIso {
    pub target_shift: i64,
    pub shifts: Vec<i64>,
}

impl CanonicalIso {
    pub fn source_shift(&self) -> i64 {
        self.target_shift - self.shifts.iter().sum::<i64>()
    }

    pub fn sign(&self, deg_phi: i64, arg_degrees: &[i64]) -> Result<Sign> {
        canonical_iso_sign(&self.shifts, deg_phi, arg_degrees)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_examples() {
        assert_eq!(koszul_swap_sign(0, 5), Sign::PLUS);
        assert_eq!(koszul_swap_sign(1, 1), Sign::MINUS);
        assert_eq!(koszul_swap_sign(3, 2), Sign::PLUS);
        assert_eq!(koszul_swap_sign(-1, 3), Sign::MINUS);
    }

    #[test]
    fn double_swap_is_identity() {
        for a in -3..4 {
            for b in -3..4 {
                assert_eq!(koszul_swap_sign(a, b) * koszul_swap_sign(b, a), Sign::PLUS);
            }
        }
    }

    #[test]
    fn canonical_iso_examples() {
        assert_eq!(canonical_iso_sign(&[0, 0, 0], 5, &[1, 3, 7]).unwrap(), Sign::PLUS);
        for m1 in -2..3 {
            assert_eq!(canonical_iso_sign(&[1], 1, &[m1]).unwrap(), Sign::MINUS);
        }
        assert_eq!(canonical_iso_sign(&[1, 1], 0, &[1, 0]).unwrap(), Sign::MINUS);
        assert!(canonical_iso_sign(&[1], 0, &[]).is_err());
    }

    #[test]
    fn suspension_exponent_matches_closed_form() {
        // all shifts 1: n|φ| + (n-1)|m_1| + … + |m_{n-1}|
        let degs = [2i64, -1, 3, 0];
        for i in -2..3 {
            let closed = degs.len() as i64 * i
                + degs.iter().enumerate().map(|(t, d)| (degs.len() - 1 - t) as i64 * d).sum::<i64>();
            assert_eq!(
                canonical_iso_sign(&[1; 4], i, &degs).unwrap(),
                Sign::from_exponent(closed)
            );
        }
    }

    #[test]
    fn source_shift() {
        let iso = CanonicalIso { target_shift: 1, shifts: vec![1, 1, 1] };
        assert_eq!(iso.source_shift(), -2);
    }
}
