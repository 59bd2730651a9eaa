//! Conjugacy classes of `S_n`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_cycle_types, CycleType};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    pub cycle_type: CycleType,
    pub size: BigUint,
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    // each prefix product is itself a binomial coefficient, so the division is exact
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `|S_n| = n!`.
pub fn group_order(n: usize) -> BigUint {
    factorial(n)
}

/// Centralizer order `∏_j j^{mj} · mj!` of any element of class `rho`.
pub(crate) fn centralizer_order(rho: &CycleType) -> BigUint {
    rho.multiplicities()
        .iter()
        .enumerate()
        .fold(BigUint::one(), |acc, (i, &m)| {
            acc * BigUint::from(i + 1).pow(m as u32) * factorial(m)
        })
}

/// Exact `a / b`, failing if `b` does not divide `a`.
pub(crate) fn exact_div(a: &BigUint, b: &BigUint, what: &str) -> Result<BigUint> {
    if b.is_zero() || !(a % b).is_zero() {
        return Err(Error::Integrity(format!("{what}: {b} does not divide {a}")));
    }
    Ok(a / b)
}

/// Number of permutations of `n` points with cycle type `rho`:
/// `n! / ∏_j (j^{mj} · mj!)`.
pub fn class_size(n: usize, rho: &CycleType) -> Result<BigUint> {
    if rho.weight() != n {
        return Err(Error::WeightMismatch {
            expected: n,
            found: rho.weight(),
        });
    }
    exact_div(&factorial(n), &centralizer_order(rho), "class size")
}

/// Every class of `S_n` in descending-lex order of cycle types.
pub fn classes(n: usize) -> Vec<ClassInfo> {
    enumerate_cycle_types(n)
        .into_iter()
        .map(|cycle_type| {
            let size = class_size(n, &cycle_type).expect("enumerated cycle types have weight n");
            ClassInfo { cycle_type, size }
        })
        .collect()
}
