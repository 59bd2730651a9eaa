//! Young subgroups `S_λ1 × … × S_λp` and the distributions of a cycle type
//! across their factors.
//!
//! Factors are ordered: equal parts of `λ` are distinct factors, so a
//! distribution and its image under swapping two equal rows are both counted.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partitions::{CycleType, Partition};
use crate::sym_group::{class_size, factorial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungSubgroup {
    pub lambda: Partition,
    pub order: BigUint,
}

impl YoungSubgroup {
    pub fn new(lambda: Partition) -> Self {
        let order = young_order(&lambda);
        Self { lambda, order }
    }
}

/// `∏_i λ_i!`.
pub fn young_order(lambda: &Partition) -> BigUint {
    lambda
        .parts()
        .iter()
        .fold(BigUint::one(), |acc, &part| acc * factorial(part))
}

/// A split of a cycle type's cycles across the factors of a Young subgroup.
///
/// Row `i` is the cycle type handed to factor `S_λi`; its weight is `λi`, and
/// the rows sum column-wise to the ambient cycle type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Distribution {
    rows: Vec<CycleType>,
    columns: usize,
}

impl Distribution {
    pub fn rows(&self) -> &[CycleType] {
        &self.rows
    }

    /// Number of cycle-length columns `L`.
    pub fn columns(&self) -> usize {
        self.columns
    }

    /// Cycles of length `j` (1-based) assigned to part `i` (0-based).
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        self.rows[i].multiplicity(j)
    }
}

fn check_same_weight(lambda: &Partition, rho: &CycleType) -> Result<()> {
    if lambda.weight() != rho.weight() {
        return Err(Error::WeightMismatch {
            expected: lambda.weight(),
            found: rho.weight(),
        });
    }
    Ok(())
}

/// Every distribution of `rho` across the parts of `lambda`, each once.
///
/// Backtracks over the parts in order; part `i` tries every cycle type of
/// `λi` whose multiplicities fit in what `rho` has left.
pub fn enumerate_distributions(lambda: &Partition, rho: &CycleType) -> Result<Vec<Distribution>> {
    check_same_weight(lambda, rho)?;

    struct Search<'a> {
        parts: &'a [usize],
        budget: Vec<usize>,
        rows: Vec<CycleType>,
        out: Vec<Distribution>,
    }

    impl Search<'_> {
        fn next_part(&mut self, i: usize) {
            if i == self.parts.len() {
                debug_assert!(self.budget.iter().all(|&m| m == 0));
                self.out.push(Distribution {
                    rows: self.rows.clone(),
                    columns: self.budget.len(),
                });
                return;
            }
            let mut row = vec![0; self.budget.len()];
            self.fill_row(i, self.budget.len(), self.parts[i], &mut row);
        }

        // Chooses multiplicities for cycle lengths `len, len-1, …, 1` of row `i`.
        fn fill_row(&mut self, i: usize, len: usize, remaining: usize, row: &mut Vec<usize>) {
            if remaining == 0 {
                for (b, &m) in self.budget.iter_mut().zip(row.iter()) {
                    *b -= m;
                }
                self.rows.push(CycleType::new(row.clone()));
                self.next_part(i + 1);
                self.rows.pop();
                for (b, &m) in self.budget.iter_mut().zip(row.iter()) {
                    *b += m;
                }
                return;
            }
            if len == 0 {
                return;
            }
            let most = self.budget[len - 1].min(remaining / len);
            for m in (0..=most).rev() {
                row[len - 1] = m;
                self.fill_row(i, len - 1, remaining - len * m, row);
            }
            row[len - 1] = 0;
        }
    }

    let mut search = Search {
        parts: lambda.parts(),
        budget: rho.multiplicities().to_vec(),
        rows: Vec::with_capacity(lambda.len()),
        out: Vec::new(),
    };
    search.next_part(0);
    Ok(search.out)
}

/// `|C_ρ ∩ S_λ|`: how many elements of the class `rho` lie in the Young
/// subgroup, summed over distributions as `∏_i |class of row i in S_λi|`.
pub fn intersection_count(lambda: &Partition, rho: &CycleType) -> Result<BigUint> {
    let mut total = BigUint::ZERO;
    for d in enumerate_distributions(lambda, rho)? {
        let mut term = BigUint::one();
        for (&part, row) in lambda.parts().iter().zip(d.rows()) {
            term *= class_size(part, row)?;
        }
        total += term;
    }
    Ok(total)
}
