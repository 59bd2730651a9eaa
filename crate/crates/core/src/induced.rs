//! Induced characters `φ^λ_ρ` of Young subgroups and the `p(n) × p(n)` table.
//!
//! Two routes to the same number:
//!
//! * quotient: `|S_n| · |C_ρ ∩ S_λ| / (|S_λ| · |C_ρ|)`;
//! * multinomial: `Σ_distributions ∏_j mj! / ∏_i m_ij!`.
//!
//! Both are exact; each division is checked to leave no remainder.

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, CycleType, Partition};
use crate::sym_group::{class_size, exact_div, factorial, group_order};
use crate::young::{enumerate_distributions, intersection_count, young_order};

/// Largest `n` for which [`character_matrix`] cross-checks both routes by default.
pub const DEFAULT_VERIFY_MAX: usize = 7;

fn check_same_weight(lambda: &Partition, rho: &CycleType) -> Result<()> {
    if lambda.weight() != rho.weight() {
        return Err(Error::WeightMismatch {
            expected: lambda.weight(),
            found: rho.weight(),
        });
    }
    Ok(())
}

pub fn induced_value_quotient(lambda: &Partition, rho: &CycleType) -> Result<BigUint> {
    check_same_weight(lambda, rho)?;
    let n = lambda.weight();
    let numerator = group_order(n) * intersection_count(lambda, rho)?;
    let denominator = young_order(lambda) * class_size(n, rho)?;
    exact_div(&numerator, &denominator, &format!("induced value φ^{lambda}_{rho}"))
}

pub fn induced_value_multinomial(lambda: &Partition, rho: &CycleType) -> Result<BigUint> {
    let mut total = BigUint::ZERO;
    for d in enumerate_distributions(lambda, rho)? {
        let mut term = BigUint::one();
        for j in 1..=d.columns() {
            let split = (0..d.rows().len()).fold(BigUint::one(), |acc, i| acc * factorial(d.multiplicity(i, j)));
            term *= exact_div(&factorial(rho.multiplicity(j)), &split, "multinomial coefficient")?;
        }
        total += term;
    }
    Ok(total)
}

/// Values `φ^λ_ρ` with rows `λ` in descending lex order and columns in the
/// reverse order (identity class first, `n`-cycle last).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterMatrix {
    pub n: usize,
    pub row_labels: Vec<Partition>,
    pub col_labels: Vec<CycleType>,
    pub values: Vec<Vec<BigUint>>,
}

impl CharacterMatrix {
    pub fn dimension(&self) -> usize {
        self.row_labels.len()
    }

    pub fn row(&self, lambda: &Partition) -> Option<&[BigUint]> {
        let r = self.row_labels.iter().position(|l| l == lambda)?;
        Some(&self.values[r])
    }

    pub fn get(&self, lambda: &Partition, rho: &CycleType) -> Option<&BigUint> {
        let c = self.col_labels.iter().position(|l| l == rho)?;
        self.row(lambda).map(|row| &row[c])
    }
}

/// The full table for `S_n`, cross-checked against the multinomial route
/// when `n <= DEFAULT_VERIFY_MAX`.
pub fn character_matrix(n: usize) -> Result<CharacterMatrix> {
    character_matrix_with(n, n <= DEFAULT_VERIFY_MAX)
}

/// Rows are computed in parallel; the result does not depend on scheduling.
pub fn character_matrix_with(n: usize, verify: bool) -> Result<CharacterMatrix> {
    let row_labels = enumerate_partitions(n);
    let col_labels: Vec<CycleType> = row_labels.iter().rev().map(Partition::to_cycle_type).collect();

    let values = row_labels
        .par_iter()
        .map(|lambda| {
            col_labels
                .iter()
                .map(|rho| {
                    let value = induced_value_quotient(lambda, rho)?;
                    if verify {
                        let other = induced_value_multinomial(lambda, rho)?;
                        if other != value {
                            return Err(Error::Integrity(format!(
                                "φ^{lambda}_{rho}: quotient {value} != multinomial {other}"
                            )));
                        }
                    }
                    Ok(value)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(CharacterMatrix {
        n,
        row_labels,
        col_labels,
        values,
    })
}
