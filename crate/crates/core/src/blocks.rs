//! Block systems `(A, S)` and the block-relative classification of permutations.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Consecutive blocks `A₁, …, Aₖ` of sizes `a₁, …, aₖ` partitioning `{1, …, n}`,
/// together with the set `S` of blocks that must descend.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockSpec {
    sizes: Vec<usize>,
    /// Sorted, deduplicated, 1-based.
    descending: Vec<usize>,
    /// `starts[j]` is the 1-based first position of block `j + 1`; `starts[k] = n + 1`.
    starts: Vec<usize>,
}

impl BlockSpec {
    pub fn new(sizes: Vec<usize>, descending: impl IntoIterator<Item = usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidSpec("at least one block is required".into()));
        }
        if let Some(pos) = sizes.iter().position(|&a| a == 0) {
            return Err(Error::InvalidSpec(format!("block {} has size 0", pos + 1)));
        }
        let k = sizes.len();
        let mut descending: Vec<usize> = descending.into_iter().collect();
        descending.sort_unstable();
        descending.dedup();
        if let Some(&bad) = descending.iter().find(|&&i| i == 0 || i > k) {
            return Err(Error::InvalidSpec(format!("descending block {bad} outside 1..={k}")));
        }
        let mut starts = Vec::with_capacity(k + 1);
        let mut acc = 1;
        for &a in &sizes {
            starts.push(acc);
            acc += a;
        }
        starts.push(acc);
        Ok(BlockSpec { sizes, descending, starts })
    }

    /// Every block descending.
    pub fn all_descending(sizes: Vec<usize>) -> Result<Self> {
        let k = sizes.len();
        BlockSpec::new(sizes, 1..=k)
    }

    /// Same block sizes, different descending set.
    pub fn with_descending(&self, descending: impl IntoIterator<Item = usize>) -> Result<Self> {
        BlockSpec::new(self.sizes.clone(), descending)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn descending(&self) -> &[usize] {
        &self.descending
    }

    pub fn n(&self) -> usize {
        self.starts[self.k()] - 1
    }

    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_descending(&self, block: usize) -> bool {
        self.descending.binary_search(&block).is_ok()
    }

    /// Bitmask of descending blocks, bit `j - 1` for block `j`. Needs `k ≤ 64`.
    pub(crate) fn descending_mask(&self) -> u64 {
        self.descending.iter().fold(0, |m, &j| m | 1 << (j - 1))
    }

    /// Positions of block `block` (1-based).
    pub fn block_range(&self, block: usize) -> RangeInclusive<usize> {
        self.starts[block - 1]..=self.starts[block] - 1
    }

    pub fn block_of(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange { index: i, max: self.n() });
        }
        // starts is strictly increasing; the block is the last start ≤ i.
        Ok(self.starts.partition_point(|&s| s <= i))
    }

    /// Block index of every position, `labels[i - 1] = block_of(i)`.
    pub fn block_labels(&self) -> Vec<usize> {
        self.sizes.iter().enumerate().flat_map(|(j, &a)| std::iter::repeat_n(j + 1, a)).collect()
    }

    /// `∏ aᵢ!`.
    pub fn factorial_product(&self) -> BigInt {
        self.sizes.iter().map(|&a| crate::counters::factorial(a)).product()
    }

    fn check_len(&self, p: &Permutation) -> Result<()> {
        if p.len() != self.n() {
            return Err(Error::LengthMismatch { expected: self.n(), found: p.len() });
        }
        Ok(())
    }

    /// Strictly decreasing on every block in `S`, strictly increasing on every other block.
    pub fn is_as_permutation(&self, p: &Permutation) -> Result<bool> {
        self.check_len(p)?;
        let images = p.images();
        Ok((1..=self.k()).all(|j| {
            let r = self.block_range(j);
            let slice = &images[*r.start() - 1..*r.end()];
            if self.is_descending(j) {
                slice.windows(2).all(|w| w[0] > w[1])
            } else {
                slice.windows(2).all(|w| w[0] < w[1])
            }
        }))
    }

    /// Cycles of `p` lying inside one block, paired with that block.
    pub fn small_cycles(&self, p: &Permutation) -> Result<Vec<(Vec<usize>, usize)>> {
        self.check_len(p)?;
        let labels = self.block_labels();
        Ok(p.cycles()
            .into_iter()
            .filter_map(|c| {
                let b = labels[c[0] - 1];
                c.iter().all(|&x| labels[x - 1] == b).then_some((c, b))
            })
            .collect())
    }

    /// `c(π)`: zero when some small cycle has odd length, otherwise `2^m` for `m` small cycles.
    pub fn c_weight(&self, p: &Permutation) -> Result<BigInt> {
        let small = self.small_cycles(p)?;
        if small.iter().any(|(c, _)| c.len() % 2 == 1) {
            return Ok(BigInt::zero());
        }
        Ok(BigInt::one() << small.len())
    }

    /// `c_S(π)`: like `c(π)`, and also zero when a small cycle sits in an ascending block.
    pub fn c_s_weight(&self, p: &Permutation) -> Result<BigInt> {
        let small = self.small_cycles(p)?;
        if small.iter().any(|(c, b)| c.len() % 2 == 1 || !self.is_descending(*b)) {
            return Ok(BigInt::zero());
        }
        Ok(BigInt::one() << small.len())
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.sizes.iter().map(|x| x.to_string()).collect();
        let s: Vec<String> = self.descending.iter().map(|x| x.to_string()).collect();
        write!(f, "(({}),{{{}}})", a.join(","), s.join(","))
    }
}

/// All compositions of `n` with at most `max_k` parts, in lexicographic order.
pub fn compositions(n: usize, max_k: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max_k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        if prefix.len() == max_k {
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            go(rest - first, max_k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, max_k, &mut Vec::new(), &mut out);
    }
    out
}

/// Every `S ⊆ {1, …, k}` as a sorted index list, ordered by bitmask.
pub fn descending_sets(k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << k).map(|mask| (1..=k).filter(|j| mask >> (j - 1) & 1 == 1).collect()).collect()
}

/// Every `(A, S)` with `|A| = n`, at most `max_k` blocks, and any `S`.
pub fn all_specs(n: usize, max_k: usize) -> Vec<BlockSpec> {
    compositions(n, max_k)
        .into_iter()
        .flat_map(|a| {
            let k = a.len();
            descending_sets(k).into_iter().map(move |s| BlockSpec::new(a.clone(), s).unwrap())
        })
        .collect()
}
