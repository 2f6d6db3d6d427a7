//! Exponential sums at roughly 50 significant digits.

use astro_float::{BigFloat, Consts, RoundingMode};

use crate::discrete::FinitePointSet;
use crate::rational::{self, Q};

/// Working precision in bits (about 57 decimal digits).
pub const HP_BITS: usize = 192;

/// Modulus below which a high-precision sum counts as zero.
pub const HP_ZERO: f64 = 1e-30;

const RM: RoundingMode = RoundingMode::ToEven;

/// `|sum_{n ∈ F} e^{2πi<ξ,n>}|` for rational `ξ`, as a decimal string and a
/// rounded double.
#[derive(Debug, Clone, PartialEq)]
pub struct HpModulus {
    pub decimal: String,
    pub value: f64,
}

pub fn exp_sum_modulus(f: &FinitePointSet, xi: &[Q]) -> HpModulus {
    let mut cc = Consts::new().expect("constant cache");
    let two_pi = cc.pi(HP_BITS, RM).mul(&BigFloat::from_i64(2, HP_BITS), HP_BITS, RM);
    let mut re = BigFloat::from_i64(0, HP_BITS);
    let mut im = BigFloat::from_i64(0, HP_BITS);
    for n in f.iter() {
        let t: Q = xi.iter().zip(n).map(|(x, c)| x * Q::from_integer(c.clone())).sum();
        let frac = &t - Q::from_integer(rational::floor(&t));
        let num = big(frac.numer());
        let den = big(frac.denom());
        let angle = two_pi.mul(&num, HP_BITS, RM).div(&den, HP_BITS, RM);
        re = re.add(&angle.cos(HP_BITS, RM, &mut cc), HP_BITS, RM);
        im = im.add(&angle.sin(HP_BITS, RM, &mut cc), HP_BITS, RM);
    }
    let norm2 = re.mul(&re, HP_BITS, RM).add(&im.mul(&im, HP_BITS, RM), HP_BITS, RM);
    let modulus = norm2.sqrt(HP_BITS, RM);
    let decimal = modulus.to_string();
    let value = decimal.parse::<f64>().unwrap_or(f64::NAN);
    HpModulus { decimal, value }
}

/// The sum vanishes to within [`HP_ZERO`].
pub fn exp_sum_vanishes(f: &FinitePointSet, xi: &[Q]) -> bool {
    exp_sum_modulus(f, xi).value < HP_ZERO
}

fn big(n: &num_bigint::BigInt) -> BigFloat {
    let s = n.to_string();
    BigFloat::parse(&s, astro_float::Radix::Dec, HP_BITS, RM, &mut Consts::new().expect("constant cache"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn vanishing_and_nonvanishing_sums() {
        let f = FinitePointSet::from_integers(&[1, 3, 4, 6]).unwrap();
        let m = exp_sum_modulus(&f, &[ratio(1, 4)]);
        assert!(m.value < 1e-40, "{}", m.decimal);
        assert!(exp_sum_vanishes(&f, &[ratio(1, 2)]));
        let pair = FinitePointSet::from_integers(&[0, 2]).unwrap();
        let m = exp_sum_modulus(&pair, &[ratio(1, 2)]);
        assert!((m.value - 2.0).abs() < 1e-15);
        assert!(!exp_sum_vanishes(&pair, &[ratio(1, 3)]));
    }
}
