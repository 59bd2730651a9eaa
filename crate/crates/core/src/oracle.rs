//! Brute-force ground truth for small `n`.
//!
//! Nothing here uses the class-size or distribution formulas: permutations
//! are enumerated outright and cycle types read off by tracing cycles, and
//! induced values are counted as ordered set partitions fixed blockwise by a
//! class representative.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::partitions::{CycleType, Partition};

/// Largest `n` the oracle accepts unless configured otherwise (`7! = 5040`).
pub const DEFAULT_ORACLE_MAX: usize = 7;

/// A bijection on `{0, …, n-1}` given by its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Self {
        Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Perm) -> Self {
        g.compose(self).compose(&g.inverse())
    }

    /// Canonical element of class `rho`: cycles on consecutive points,
    /// longest first, each mapping `i -> i+1` and its last point back to its first.
    pub fn class_representative(rho: &CycleType) -> Self {
        let n = rho.weight();
        let mut images = vec![0; n];
        let mut start = 0;
        for len in rho.to_partition().parts().iter().copied() {
            for k in 0..len {
                images[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Self { images }
    }
}

pub fn cycle_type_of(p: &Perm) -> CycleType {
    let n = p.degree();
    let mut seen = vec![false; n];
    let mut mult = vec![0; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p.apply(x);
            len += 1;
        }
        mult[len - 1] += 1;
    }
    CycleType::new(mult)
}

/// Calls `f` on every permutation of `0..n` in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&Perm)) {
    let mut perm = Perm::identity(n);
    loop {
        f(&perm);
        let a = &mut perm.images;
        let Some(i) = (1..n).rev().find(|&i| a[i - 1] < a[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| a[j] > a[i - 1]).expect("a successor exists");
        a.swap(i - 1, j);
        a[i..].reverse();
    }
}

/// Disjoint blocks covering `0..n`, block `i` of size `λi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    /// Whether `perm` maps every block onto itself.
    pub fn is_fixed_by(&self, perm: &Perm) -> bool {
        self.blocks
            .iter()
            .all(|block| block.iter().all(|&x| block.contains(&perm.apply(x))))
    }
}

/// Every ordered set partition of shape `lambda`.
pub fn ordered_set_partitions(lambda: &Partition) -> Vec<OrderedSetPartition> {
    fn rec(sizes: &[usize], free: &[usize], blocks: &mut Vec<Vec<usize>>, out: &mut Vec<OrderedSetPartition>) {
        let Some((&size, rest)) = sizes.split_first() else {
            out.push(OrderedSetPartition { blocks: blocks.clone() });
            return;
        };
        // choose `size` of the free points by bitmask over their positions
        for mask in 0u64..(1 << free.len()) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let in_mask = |k: usize| mask & (1 << k) != 0;
            let chosen = (0..free.len()).filter(|&k| in_mask(k)).map(|k| free[k]).collect();
            let left: Vec<usize> = (0..free.len()).filter(|&k| !in_mask(k)).map(|k| free[k]).collect();
            blocks.push(chosen);
            rec(rest, &left, blocks, out);
            blocks.pop();
        }
    }
    let free: Vec<usize> = (0..lambda.weight()).collect();
    let mut out = Vec::new();
    rec(lambda.parts(), &free, &mut Vec::new(), &mut out);
    out
}

/// Enumeration-backed counts, refusing `n` above `max_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub max_n: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_ORACLE_MAX,
        }
    }
}

impl Oracle {
    pub fn with_bound(max_n: usize) -> Self {
        Self { max_n }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::OracleBound { n, max: self.max_n });
        }
        Ok(())
    }

    /// Permutations of `n` points with cycle type `rho`.
    pub fn class_size(&self, n: usize, rho: &CycleType) -> Result<BigUint> {
        self.check(n)?;
        let mut count = 0u64;
        for_each_permutation(n, |p| {
            if cycle_type_of(p) == *rho {
                count += 1;
            }
        });
        Ok(count.into())
    }

    /// Elements of class `rho` preserving each block of the consecutive
    /// blocks `[0, λ1), [λ1, λ1+λ2), …`.
    pub fn intersection_count(&self, lambda: &Partition, rho: &CycleType) -> Result<BigUint> {
        let n = lambda.weight();
        self.check(n)?;
        let mut block_of = Vec::with_capacity(n);
        for (b, &size) in lambda.parts().iter().enumerate() {
            block_of.extend(std::iter::repeat_n(b, size));
        }
        let mut count = 0u64;
        for_each_permutation(n, |p| {
            if (0..n).all(|x| block_of[p.apply(x)] == block_of[x]) && cycle_type_of(p) == *rho {
                count += 1;
            }
        });
        Ok(count.into())
    }

    /// Ordered set partitions of shape `lambda` fixed by `perm`.
    pub fn induced_value_for(&self, lambda: &Partition, perm: &Perm) -> Result<BigUint> {
        let n = lambda.weight();
        self.check(n)?;
        if perm.degree() != n {
            return Err(Error::WeightMismatch {
                expected: n,
                found: perm.degree(),
            });
        }
        let count = ordered_set_partitions(lambda)
            .iter()
            .filter(|osp| osp.is_fixed_by(perm))
            .count();
        Ok(BigUint::from(count))
    }

    /// `φ^λ_ρ` counted on the canonical representative of `rho`.
    pub fn induced_value(&self, lambda: &Partition, rho: &CycleType) -> Result<BigUint> {
        if lambda.weight() != rho.weight() {
            return Err(Error::WeightMismatch {
                expected: lambda.weight(),
                found: rho.weight(),
            });
        }
        self.induced_value_for(lambda, &Perm::class_representative(rho))
    }
}
