//! Cross-checks for every `n` up to a bound: class sizes against
//! enumeration, the two induced-value routes against the oracle, the
//! reciprocity sum, and the published `n = 5` table.

use std::fmt;

use num_bigint::BigUint;

use crate::error::Result;
use crate::induced::{character_matrix, induced_value_multinomial, induced_value_quotient};
use crate::oracle::Oracle;
use crate::partitions::{enumerate_cycle_types, enumerate_partitions, CycleType, Partition};
use crate::sym_group::{class_size, factorial};

/// The `S_5` table: rows `5, 4,1, 3,2, 3,1^2, 2^2,1, 2,1^3, 1^5`; columns
/// `1^5, 1^3,2, 1,2^2, 1^2,3, 2,3, 1,4, 5`.
pub const TABLE_N5: [[u32; 7]; 7] = [
    [1, 1, 1, 1, 1, 1, 1],
    [5, 3, 1, 2, 0, 1, 0],
    [10, 4, 2, 1, 1, 0, 0],
    [20, 6, 0, 2, 0, 0, 0],
    [30, 6, 2, 0, 0, 0, 0],
    [60, 6, 0, 0, 0, 0, 0],
    [120, 0, 0, 0, 0, 0, 0],
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    ClassSize {
        n: usize,
        rho: CycleType,
        formula: BigUint,
        oracle: BigUint,
    },
    Induced {
        n: usize,
        lambda: Partition,
        rho: CycleType,
        quotient: BigUint,
        multinomial: BigUint,
        oracle: BigUint,
    },
    Reciprocity {
        n: usize,
        lambda: Partition,
        total: BigUint,
    },
    Fixture {
        lambda: Partition,
        rho: CycleType,
        computed: BigUint,
        expected: u32,
    },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::ClassSize {
                n,
                rho,
                formula,
                oracle,
            } => {
                write!(f, "n={n} class {rho}: formula {formula}, oracle {oracle}")
            }
            Failure::Induced {
                n,
                lambda,
                rho,
                quotient,
                multinomial,
                oracle,
            } => write!(
                f,
                "n={n} lambda={lambda} class={rho}: quotient {quotient}, multinomial {multinomial}, oracle {oracle}"
            ),
            Failure::Reciprocity { n, lambda, total } => {
                write!(f, "n={n} lambda={lambda}: reciprocity sum {total} != {}", factorial(*n))
            }
            Failure::Fixture {
                lambda,
                rho,
                computed,
                expected,
            } => {
                write!(
                    f,
                    "n=5 table lambda={lambda} class={rho}: computed {computed}, published {expected}"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelReport {
    pub n: usize,
    /// `(λ, ρ)` pairs checked three ways.
    pub pairs: usize,
    pub failure: Option<Failure>,
    /// `Some(true)` when the level reproduced the built-in `n = 5` table.
    pub table_match: Option<bool>,
}

impl LevelReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub levels: Vec<LevelReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.levels.iter().all(LevelReport::passed)
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.levels.iter().find_map(|l| l.failure.as_ref())
    }
}

pub fn run(n_max: usize, oracle: &Oracle) -> Result<VerifyReport> {
    run_against(n_max, oracle, &TABLE_N5)
}

/// As [`run`], comparing the `n = 5` level with `table` instead of [`TABLE_N5`].
pub fn run_against(n_max: usize, oracle: &Oracle, table: &[[u32; 7]; 7]) -> Result<VerifyReport> {
    let mut levels = Vec::new();
    for n in 1..=n_max {
        levels.push(check_level(n, oracle, table)?);
    }
    Ok(VerifyReport { levels })
}

fn check_level(n: usize, oracle: &Oracle, table: &[[u32; 7]; 7]) -> Result<LevelReport> {
    let lambdas = enumerate_partitions(n);
    let rhos = enumerate_cycle_types(n);
    let mut report = LevelReport {
        n,
        pairs: 0,
        failure: None,
        table_match: None,
    };

    let mut sizes = Vec::with_capacity(rhos.len());
    for rho in &rhos {
        let formula = class_size(n, rho)?;
        let counted = oracle.class_size(n, rho)?;
        if formula != counted {
            report.failure = Some(Failure::ClassSize {
                n,
                rho: rho.clone(),
                formula,
                oracle: counted,
            });
            return Ok(report);
        }
        sizes.push(formula);
    }

    for lambda in &lambdas {
        let mut total = BigUint::ZERO;
        for (rho, size) in rhos.iter().zip(&sizes) {
            let quotient = induced_value_quotient(lambda, rho)?;
            let multinomial = induced_value_multinomial(lambda, rho)?;
            let counted = oracle.induced_value(lambda, rho)?;
            report.pairs += 1;
            if quotient != multinomial || quotient != counted {
                report.failure = Some(Failure::Induced {
                    n,
                    lambda: lambda.clone(),
                    rho: rho.clone(),
                    quotient,
                    multinomial,
                    oracle: counted,
                });
                return Ok(report);
            }
            total += size * &quotient;
        }
        if total != factorial(n) {
            report.failure = Some(Failure::Reciprocity {
                n,
                lambda: lambda.clone(),
                total,
            });
            return Ok(report);
        }
    }

    if n == 5 {
        let matrix = character_matrix(5)?;
        for (r, row) in matrix.values.iter().enumerate() {
            for (c, computed) in row.iter().enumerate() {
                if *computed != BigUint::from(table[r][c]) {
                    report.table_match = Some(false);
                    report.failure = Some(Failure::Fixture {
                        lambda: matrix.row_labels[r].clone(),
                        rho: matrix.col_labels[c].clone(),
                        computed: computed.clone(),
                        expected: table[r][c],
                    });
                    return Ok(report);
                }
            }
        }
        report.table_match = Some(true);
    }
    Ok(report)
}
