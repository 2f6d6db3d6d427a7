//! Exact vanishing test for sums of `M`-th roots of unity.
//!
//! `sum_j zeta^{c_j}` with `zeta = exp(2 pi i / M)` is zero exactly when the
//! M-th cyclotomic polynomial divides `sum_j x^{c_j}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

/// Integer polynomial reduced modulo the `modulus`-th cyclotomic polynomial.
/// Coefficients are in ascending powers with no trailing zeros, so the zero
/// class has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicPoly {
    modulus: u64,
    coefficients: Vec<BigInt>,
}

impl CyclotomicPoly {
    /// Reduces `sum x^{e mod M}` over the given exponents.
    pub fn from_exponents(modulus: u64, exponents: impl IntoIterator<Item = u64>) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let mut dense = vec![BigInt::zero(); modulus as usize];
        for e in exponents {
            dense[(e % modulus) as usize] += 1;
        }
        Self::reduce(modulus, dense)
    }

    /// Reduces an arbitrary polynomial (ascending coefficients).
    pub fn reduce(modulus: u64, coefficients: Vec<BigInt>) -> Self {
        let phi = cyclotomic(modulus);
        let mut rem = coefficients;
        trim(&mut rem);
        let deg = phi.len() - 1;
        while rem.len() > deg {
            let top = rem.len() - 1;
            let lead = rem[top].clone();
            if !lead.is_zero() {
                let shift = top - deg;
                for (i, c) in phi.iter().enumerate() {
                    if !c.is_zero() {
                        rem[shift + i] -= &lead * c;
                    }
                }
            }
            rem.pop();
            trim(&mut rem);
        }
        Self {
            modulus,
            coefficients: rem,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "modulus": self.modulus,
            "coefficients": self.coefficients.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }
}

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

type Cache = Mutex<HashMap<u64, Arc<Vec<BigInt>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Phi_n`, ascending. Computed from
/// `x^n - 1 = prod_{e | n} Phi_e` and memoized.
pub fn cyclotomic(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().expect("cache poisoned").get(&n) {
        return Arc::clone(p);
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for e in (1..n).filter(|e| n % e == 0) {
        num = exact_div_monic(&num, &cyclotomic(e));
    }
    let phi = Arc::new(num);
    cache()
        .lock()
        .expect("cache poisoned")
        .insert(n, Arc::clone(&phi));
    phi
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division must be exact");
    quot
}

/// Euler's totient via the degree of `Phi_n`.
pub fn totient(n: u64) -> usize {
    cyclotomic(n).len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic(2), ints(&[1, 1]));
        assert_eq!(*cyclotomic(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(totient(105), 48);
        // Phi_105 is the first with a coefficient of absolute value 2.
        assert!(cyclotomic(105).iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn four_roots_cancel() {
        assert!(CyclotomicPoly::from_exponents(4, [1, 3, 0, 2]).is_zero());
        assert!(CyclotomicPoly::from_exponents(4, [0, 2]).is_zero());
        assert!(!CyclotomicPoly::from_exponents(4, [0, 1]).is_zero());
    }

    #[test]
    fn single_root_never_vanishes() {
        for m in 1..30 {
            for e in 0..m {
                assert!(!CyclotomicPoly::from_exponents(m, [e]).is_zero());
            }
        }
    }

    #[test]
    fn mixed_orders_vanish() {
        // With w a primitive 6th root: 1 + w^2 + w^4 = 0 and w + w^4 = 0.
        assert!(CyclotomicPoly::from_exponents(6, [0, 2, 4]).is_zero());
        assert!(CyclotomicPoly::from_exponents(6, [1, 4]).is_zero());
        assert!(CyclotomicPoly::from_exponents(6, [0, 2, 4, 1, 4]).is_zero());
        assert!(!CyclotomicPoly::from_exponents(6, [0, 2, 4, 1]).is_zero());
        assert!(!CyclotomicPoly::from_exponents(6, [0, 1]).is_zero());
    }
}
