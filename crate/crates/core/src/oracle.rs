//! Brute-force ground truth.
//!
//! Two kinds of exhaustive scan live here: enumeration of the `(A, S)`-permutations
//! themselves (one per distribution of values among the blocks, so the cost is a
//! multinomial coefficient) and scans over all of `Sₙ` for the cycle-weight sums.
//! Both refuse instances above a configurable size.

use std::collections::BTreeMap;
use std::ops::Range;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::blocks::BlockSpec;
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::perm::{factorial_u128, next_lex, nth_lex, Permutation};

/// Size caps for the exhaustive methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for enumerating `(A, S)`-permutations.
    pub enumeration: usize,
    /// Largest `n` for scans over all of `Sₙ`.
    pub full_scan: usize,
    /// Largest `n` for enumerating ornaments.
    pub ornaments: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { enumeration: 10, full_scan: 9, ornaments: 10 }
    }
}

impl Limits {
    /// The same cap for every method.
    pub fn uniform(n: usize) -> Self {
        Limits { enumeration: n, full_scan: n, ornaments: n }
    }

    pub(crate) fn check(limit: usize, n: usize, what: &'static str) -> Result<()> {
        if n > limit {
            return Err(Error::LimitExceeded { what, n, limit });
        }
        Ok(())
    }
}

/// Lexicographic stream of the `(A, S)`-permutations of a spec.
///
/// Values are placed position by position, smallest first, skipping any value that
/// would leave too few unused values to finish the current block monotonically.
/// With that pruning every partial assignment extends, so the search never
/// backtracks into a dead end.
#[derive(Debug, Clone)]
pub struct AsPermutations {
    spec: BlockSpec,
    labels: Vec<usize>,
    current: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl AsPermutations {
    fn new(spec: &BlockSpec) -> Self {
        let n = spec.n();
        AsPermutations {
            spec: spec.clone(),
            labels: spec.block_labels(),
            current: vec![0; n],
            used: vec![false; n + 1],
            started: false,
            done: false,
        }
    }

    fn feasible(&self, pos: usize, v: usize) -> bool {
        let block = self.labels[pos];
        let range = self.spec.block_range(block);
        let desc = self.spec.is_descending(block);
        if pos + 1 > *range.start() {
            let prev = self.current[pos - 1];
            if (desc && v > prev) || (!desc && v < prev) {
                return false;
            }
        }
        let after = range.end() - (pos + 1);
        let n = self.labels.len();
        let room = if desc {
            (1..v).filter(|&x| !self.used[x]).count()
        } else {
            (v + 1..=n).filter(|&x| !self.used[x]).count()
        };
        room >= after
    }

    /// Smallest feasible unused value at `pos` strictly above `above`.
    fn place(&mut self, pos: usize, above: usize) -> bool {
        let n = self.labels.len();
        for v in above + 1..=n {
            if !self.used[v] && self.feasible(pos, v) {
                self.current[pos] = v;
                self.used[v] = true;
                return true;
            }
        }
        false
    }

    fn fill_from(&mut self, start: usize) {
        for pos in start..self.labels.len() {
            let ok = self.place(pos, 0);
            debug_assert!(ok, "pruned search hit a dead end");
        }
    }
}

impl Iterator for AsPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_from(0);
            return Some(Permutation::from_vec_unchecked(self.current.clone()));
        }
        let n = self.labels.len();
        for pos in (0..n).rev() {
            let old = self.current[pos];
            self.used[old] = false;
            if self.place(pos, old) {
                self.fill_from(pos + 1);
                return Some(Permutation::from_vec_unchecked(self.current.clone()));
            }
        }
        self.done = true;
        None
    }
}

/// All `(A, S)`-permutations, without a size check.
pub fn as_permutations(spec: &BlockSpec) -> AsPermutations {
    AsPermutations::new(spec)
}

pub fn enumerate_as_permutations(spec: &BlockSpec, limits: &Limits) -> Result<AsPermutations> {
    Limits::check(limits.enumeration, spec.n(), "(A,S)-permutation enumeration")?;
    Ok(AsPermutations::new(spec))
}

pub fn count_derangements_oracle(spec: &BlockSpec, limits: &Limits) -> Result<BigInt> {
    let count = enumerate_as_permutations(spec, limits)?.filter(|p| p.is_derangement()).count();
    Ok(BigInt::from(count))
}

/// Number of fixed points in each block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedPointProfile(pub Vec<usize>);

impl FixedPointProfile {
    pub fn of(spec: &BlockSpec, p: &Permutation) -> Self {
        let mut counts = vec![0; spec.k()];
        let labels = spec.block_labels();
        for i in p.fixed_points() {
            counts[labels[i - 1] - 1] += 1;
        }
        FixedPointProfile(counts)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

/// Histogram of the `(A, S)`-permutations by per-block fixed-point counts.
pub fn count_by_fixed_point_profile(spec: &BlockSpec, limits: &Limits) -> Result<BTreeMap<FixedPointProfile, BigInt>> {
    let mut out: BTreeMap<FixedPointProfile, BigInt> = BTreeMap::new();
    for p in enumerate_as_permutations(spec, limits)? {
        *out.entry(FixedPointProfile::of(spec, &p)).or_default() += 1;
    }
    Ok(out)
}

/// Calls `f` on every permutation of `{1, …, n}` in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&Permutation)) {
    let mut v: Vec<usize> = (1..=n).collect();
    loop {
        f(&Permutation::from_vec_unchecked(v.clone()));
        if !next_lex(&mut v) {
            break;
        }
    }
}

/// Small-cycle statistics of every permutation in `Sₙ` relative to a block system,
/// aggregated so that the weighted sums for every descending set `S` can be read off
/// one scan.
///
/// Both tables are indexed by the bitmask of blocks that contain at least one small
/// cycle (bit `j - 1` for block `j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallCycleTally {
    sizes: Vec<usize>,
    /// Σ `2^m` over permutations whose small cycles all have even length.
    c_by_mask: Vec<u128>,
    /// Number of permutations whose small cycles have even total length in every block.
    even_by_mask: Vec<u128>,
    scanned: u128,
}

impl SmallCycleTally {
    fn empty(sizes: &[usize]) -> Self {
        let width = 1usize << sizes.len();
        SmallCycleTally { sizes: sizes.to_vec(), c_by_mask: vec![0; width], even_by_mask: vec![0; width], scanned: 0 }
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.c_by_mask.iter_mut().zip(&other.c_by_mask) {
            *a += b;
        }
        for (a, b) in self.even_by_mask.iter_mut().zip(&other.even_by_mask) {
            *a += b;
        }
        self.scanned += other.scanned;
        self
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of permutations scanned (`n!`).
    pub fn scanned(&self) -> u128 {
        self.scanned
    }

    /// Σ_{π ∈ Sₙ} c(π).
    pub fn sum_c(&self) -> BigInt {
        self.c_by_mask.iter().map(|&x| BigInt::from(x)).sum()
    }

    fn sum_submasks(table: &[u128], allowed: u64) -> BigInt {
        table.iter().enumerate().filter(|&(mask, _)| mask as u64 & !allowed == 0).map(|(_, &x)| BigInt::from(x)).sum()
    }

    /// Σ_{π ∈ Sₙ} c_S(π) for the descending set encoded in `spec`.
    pub fn sum_c_s(&self, spec: &BlockSpec) -> BigInt {
        debug_assert_eq!(spec.sizes(), &self.sizes[..]);
        Self::sum_submasks(&self.c_by_mask, spec.descending_mask())
    }

    /// Number of permutations with no small cycles in ascending blocks and an even
    /// total small-cycle length in every descending block.
    pub fn thm_e(&self, spec: &BlockSpec) -> BigInt {
        debug_assert_eq!(spec.sizes(), &self.sizes[..]);
        Self::sum_submasks(&self.even_by_mask, spec.descending_mask())
    }

    fn record(&mut self, images: &[usize], labels: &[usize]) {
        let n = images.len();
        let mut seen: u64 = 0;
        let mut small = 0u32;
        let mut small_mask = 0usize;
        let mut odd_small = false;
        let mut odd_total_mask = 0usize;
        for start in 0..n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let block = labels[start];
            let mut mono = true;
            let mut len = 0usize;
            let mut x = start;
            while seen >> x & 1 == 0 {
                seen |= 1 << x;
                len += 1;
                mono &= labels[x] == block;
                x = images[x] - 1;
            }
            if mono {
                small += 1;
                small_mask |= 1 << block;
                if len % 2 == 1 {
                    odd_small = true;
                    odd_total_mask ^= 1 << block;
                }
            }
        }
        if !odd_small {
            self.c_by_mask[small_mask] += 1u128 << small;
        }
        if odd_total_mask == 0 {
            self.even_by_mask[small_mask] += 1;
        }
        self.scanned += 1;
    }

    fn scan_range(sizes: &[usize], ranks: Range<u128>) -> Self {
        let mut tally = SmallCycleTally::empty(sizes);
        let n: usize = sizes.iter().sum();
        // 0-based block labels keep the mask arithmetic branch-free.
        let labels: Vec<usize> = sizes.iter().enumerate().flat_map(|(j, &a)| std::iter::repeat_n(j, a)).collect();
        if ranks.is_empty() {
            return tally;
        }
        let mut v = nth_lex(n, ranks.start);
        let mut remaining = ranks.end - ranks.start;
        loop {
            tally.record(&v, &labels);
            remaining -= 1;
            if remaining == 0 || !next_lex(&mut v) {
                break;
            }
        }
        tally
    }
}

/// Scans all of `Sₙ` for the block sizes `sizes`.
pub fn small_cycle_tally(sizes: &[usize], limits: &Limits) -> Result<SmallCycleTally> {
    small_cycle_tally_with(sizes, limits, Execution::default())
}

pub fn small_cycle_tally_with(sizes: &[usize], limits: &Limits, exec: Execution) -> Result<SmallCycleTally> {
    let n: usize = sizes.iter().sum();
    Limits::check(limits.full_scan, n, "full symmetric-group scan")?;
    if n > 64 || sizes.len() > 32 {
        return Err(Error::LimitExceeded { what: "full symmetric-group scan", n, limit: 64 });
    }
    let total = factorial_u128(n);
    let chunks: u128 = if exec.is_parallel() { 256 } else { 1 };
    let step = total.div_ceil(chunks).max(1);
    let ranges: Vec<Range<u128>> =
        (0..chunks).map(|c| (c * step).min(total)..((c + 1) * step).min(total)).filter(|r| !r.is_empty()).collect();
    let owned = sizes.to_vec();
    let tally = par::map_reduce(
        exec,
        ranges,
        || None,
        |r| Some(SmallCycleTally::scan_range(&owned, r)),
        |a, b| match (a, b) {
            (Some(a), Some(b)) => Some(a.merge(b)),
            (a, b) => a.or(b),
        },
    );
    Ok(tally.unwrap_or_else(|| SmallCycleTally::empty(sizes)))
}

/// Σ_{π ∈ Sₙ} c(π).
pub fn sum_c_weights(spec: &BlockSpec, limits: &Limits) -> Result<BigInt> {
    Ok(small_cycle_tally(spec.sizes(), limits)?.sum_c())
}

/// Σ_{π ∈ Sₙ} c_S(π).
pub fn sum_c_s_weights(spec: &BlockSpec, limits: &Limits) -> Result<BigInt> {
    Ok(small_cycle_tally(spec.sizes(), limits)?.sum_c_s(spec))
}

/// Permutations with no small cycles in ascending blocks and even total small-cycle
/// length in each descending block.
pub fn count_thm_e(spec: &BlockSpec, limits: &Limits) -> Result<BigInt> {
    Ok(small_cycle_tally(spec.sizes(), limits)?.thm_e(spec))
}

/// Zero-check helper shared by callers that divide by `∏ aᵢ!`.
pub(crate) fn exact_div(num: &BigInt, den: &BigInt, what: &'static str) -> Result<BigInt> {
    use num_integer::Integer;
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::InexactDivision(what));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::all_specs;
    use crate::counters::multinomial;

    fn spec(a: &[usize], s: &[usize]) -> BlockSpec {
        BlockSpec::new(a.to_vec(), s.iter().copied()).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn enumeration_examples() {
        for s in [&[][..], &[1], &[2], &[1, 2]] {
            assert_eq!(as_permutations(&spec(&[2, 2], s)).count(), 6);
        }
        let all: Vec<Permutation> = as_permutations(&spec(&[1, 1, 1], &[])).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all.first().unwrap().images(), &[1, 2, 3]);
        assert_eq!(all.last().unwrap().images(), &[3, 2, 1]);
        let only: Vec<Permutation> = as_permutations(&spec(&[5], &[])).collect();
        assert_eq!(only, vec![Permutation::identity(5)]);
    }

    #[test]
    fn enumeration_is_exact_and_lexicographic() {
        for n in 1..=8 {
            for s in all_specs(n, 4) {
                let perms: Vec<Permutation> = as_permutations(&s).collect();
                assert_eq!(BigInt::from(perms.len()), multinomial(s.sizes()), "{s}");
                assert!(perms.windows(2).all(|w| w[0] < w[1]), "{s}");
                assert!(perms.iter().all(|p| s.is_as_permutation(p).unwrap()));
            }
        }
    }

    #[test]
    fn enumeration_refuses_large_instances() {
        let big = spec(&[6, 6], &[1]);
        assert!(matches!(enumerate_as_permutations(&big, &lim()), Err(Error::LimitExceeded { n: 12, limit: 10, .. })));
        assert!(enumerate_as_permutations(&big, &Limits::uniform(12)).is_ok());
        assert!(sum_c_weights(&spec(&[5, 5], &[]), &lim()).is_err());
    }

    #[test]
    fn derangement_examples() {
        assert_eq!(count_derangements_oracle(&spec(&[2, 2], &[1, 2]), &lim()).unwrap(), int(3));
        assert_eq!(count_derangements_oracle(&spec(&[2, 2], &[]), &lim()).unwrap(), int(2));
        for s in [&[][..], &[2], &[1, 3]] {
            assert_eq!(count_derangements_oracle(&spec(&[1, 1, 1], s), &lim()).unwrap(), int(2));
        }
    }

    #[test]
    fn profile_examples() {
        let h = count_by_fixed_point_profile(&spec(&[1], &[]), &lim()).unwrap();
        assert_eq!(h, BTreeMap::from([(FixedPointProfile(vec![1]), int(1))]));

        let h = count_by_fixed_point_profile(&spec(&[2, 2], &[1, 2]), &lim()).unwrap();
        assert_eq!(h[&FixedPointProfile(vec![0, 0])], int(3));

        let h = count_by_fixed_point_profile(&spec(&[2], &[1]), &lim()).unwrap();
        assert_eq!(h, BTreeMap::from([(FixedPointProfile(vec![0]), int(1))]));
    }

    #[test]
    fn profile_histogram_is_complete() {
        for n in 1..=7 {
            for s in all_specs(n, 4) {
                let h = count_by_fixed_point_profile(&s, &lim()).unwrap();
                let total: BigInt = h.values().sum();
                assert_eq!(total, multinomial(s.sizes()));
                let zero = h.get(&FixedPointProfile(vec![0; s.k()])).cloned().unwrap_or_default();
                assert_eq!(zero, count_derangements_oracle(&s, &lim()).unwrap());
            }
        }
    }

    #[test]
    fn weighted_sum_examples() {
        assert_eq!(sum_c_weights(&spec(&[2, 2], &[1, 2]), &lim()).unwrap(), int(12));
        assert_eq!(sum_c_s_weights(&spec(&[2, 2], &[1, 2]), &lim()).unwrap(), int(12));
        assert_eq!(sum_c_s_weights(&spec(&[1, 1, 1], &[2]), &lim()).unwrap(), int(2));
        assert_eq!(sum_c_weights(&spec(&[1, 1, 1], &[]), &lim()).unwrap(), int(2));
    }

    #[test]
    fn thm_e_examples() {
        assert_eq!(count_thm_e(&spec(&[2, 2], &[1, 2]), &lim()).unwrap(), int(12));
        assert_eq!(count_thm_e(&spec(&[1, 1], &[]), &lim()).unwrap(), int(1));
        assert_eq!(count_thm_e(&spec(&[2], &[1]), &lim()).unwrap(), int(2));
    }

    #[test]
    fn tally_matches_per_permutation_weights() {
        for n in 1..=6 {
            for s in all_specs(n, n) {
                let tally = small_cycle_tally(s.sizes(), &lim()).unwrap();
                let mut c = BigInt::zero();
                let mut cs = BigInt::zero();
                let mut e = BigInt::zero();
                for_each_permutation(n, |p| {
                    c += s.c_weight(p).unwrap();
                    cs += s.c_s_weight(p).unwrap();
                    let small = s.small_cycles(p).unwrap();
                    let ok = small.iter().all(|(_, b)| s.is_descending(*b))
                        && (1..=s.k()).all(|j| {
                            small.iter().filter(|(_, b)| *b == j).map(|(c, _)| c.len()).sum::<usize>() % 2 == 0
                        });
                    if ok {
                        e += 1;
                    }
                });
                assert_eq!(tally.sum_c(), c, "{s}");
                assert_eq!(tally.sum_c_s(&s), cs, "{s}");
                assert_eq!(tally.thm_e(&s), e, "{s}");
                assert_eq!(tally.scanned(), factorial_u128(n));
            }
        }
    }

    #[test]
    fn sequential_and_parallel_scans_agree() {
        for a in [vec![3, 4], vec![1, 2, 2, 2], vec![7]] {
            let seq = small_cycle_tally_with(&a, &lim(), Execution::Sequential).unwrap();
            let par = small_cycle_tally_with(&a, &lim(), Execution::Parallel).unwrap();
            assert_eq!(seq, par);
        }
    }

    #[test]
    fn weighted_sums_divide_by_block_factorials() {
        for n in 1..=7 {
            for s in all_specs(n, 4) {
                let sum = sum_c_s_weights(&s, &lim()).unwrap();
                let d = exact_div(&sum, &s.factorial_product(), "test").unwrap();
                assert_eq!(d, count_derangements_oracle(&s, &lim()).unwrap(), "{s}");
                let e = count_thm_e(&s, &lim()).unwrap();
                assert_eq!(e, s.factorial_product() * d, "{s}");
            }
        }
    }
}
