//! Counting variations with a prescribed *caput*.
//!
//! Two readings of the same question live side by side here. The elementary
//! one counts `k`-subsets of an `n`-set that contain a fixed `c`-subset. The
//! group-theoretic one asks how many ordered set partitions of shape `λ` an
//! element of class `ρ` maps blockwise onto themselves, which is the induced
//! character value `φ^λ_ρ`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::induced::induced_value_quotient;
use crate::partitions::{CycleType, Partition};
use crate::sym_group::binomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaputQuery {
    n: usize,
    lambda: Partition,
    rho: CycleType,
}

impl CaputQuery {
    pub fn new(n: usize, lambda: Partition, rho: CycleType) -> Result<Self> {
        for found in [lambda.weight(), rho.weight()] {
            if found != n {
                return Err(Error::WeightMismatch { expected: n, found });
            }
        }
        Ok(Self { n, lambda, rho })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn rho(&self) -> &CycleType {
        &self.rho
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaputAnswer {
    pub value: BigUint,
    pub query: CaputQuery,
}

impl fmt::Display for CaputAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The induced-character reading: `φ^λ_ρ` for the query's `(λ, ρ)`.
pub fn caput_variations(query: &CaputQuery) -> Result<CaputAnswer> {
    let value = induced_value_quotient(&query.lambda, &query.rho)?;
    Ok(CaputAnswer {
        value,
        query: query.clone(),
    })
}

/// `k`-subsets of an `n`-set containing a fixed `c`-subset: `C(n-c, k-c)`.
pub fn caput_combinations(n: usize, k: usize, c: usize) -> Result<BigUint> {
    if !(c <= k && k <= n) {
        return Err(Error::CaputOrder { n, k, c });
    }
    Ok(binomial(n - c, k - c))
}

/// Subsets of every size containing a fixed `c`-subset: `2^(n-c)`.
pub fn caput_combinations_all_sizes(n: usize, c: usize) -> Result<BigUint> {
    if c > n {
        return Err(Error::CaputOrder { n, k: n, c });
    }
    Ok(BigUint::one() << (n - c))
}
