use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::Rat;

/// Coefficient scalar for [`super::Polynomial`]. Implemented for the exact
/// rationals (the prover's working field) and for `f64` (numeric oracle).
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + fmt::Display + Signed + FromPrimitive + 'static
{
    /// Divisor bringing a coefficient list to canonical form; `lead` is the
    /// order-leading coefficient. Dividing every coefficient by the result
    /// must leave the leading coefficient positive.
    fn canonical_divisor<'a>(lead: &Self, all: impl Iterator<Item = &'a Self>) -> Self;

    fn to_f64_lossy(&self) -> f64;
}

impl Coeff for Rat {
    /// Integer content times the sign of the leading coefficient: numerator
    /// gcd over denominator lcm.
    fn canonical_divisor<'a>(lead: &Self, all: impl Iterator<Item = &'a Self>) -> Self {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in all {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rat::one();
        }
        let mut s = Rat::new(num_gcd, den_lcm);
        if lead.is_negative() {
            s = -s;
        }
        s
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or_else(|| {
            // overflow fallback via string round-trip of numer/denom magnitudes
            let n = self.numer().to_f64().unwrap_or(f64::INFINITY);
            let d = self.denom().to_f64().unwrap_or(f64::INFINITY);
            n / d
        })
    }
}

impl Coeff for f64 {
    fn canonical_divisor<'a>(lead: &Self, _all: impl Iterator<Item = &'a Self>) -> Self {
        *lead
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}
