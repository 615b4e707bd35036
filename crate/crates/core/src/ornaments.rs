//! Ornaments: multisets of block-colored directed cycles.
//!
//! [`phi`] forgets the values of a permutation and keeps only, for every cycle, the
//! sequence of blocks it passes through (up to rotation). [`psi`] splits every
//! periodic cycle into copies of its fundamental period and records the split as an
//! integer partition per period. Symmetry orders of both forms agree, which is what
//! turns the weighted permutation sums into ornament counts.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::blocks::BlockSpec;
use crate::counters::factorial;
use crate::error::Result;
use crate::oracle::Limits;
use crate::perm::Permutation;

/// Index of the lexicographically least rotation of `s` (Booth's algorithm).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = &s[j % n];
        let mut i = fail[j - k - 1];
        while i != -1 && *sj != s[(k + i as usize + 1) % n] {
            if *sj < s[(k + i as usize + 1) % n] {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && *sj != s[k % n] {
            if *sj < s[k % n] {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k % n
}

/// A directed cycle of block colors, stored as its least rotation.
///
/// Ordered by length first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWord(Vec<usize>);

impl CycleWord {
    /// Canonicalizes `colors` by rotation. Panics on an empty word.
    pub fn new(mut colors: Vec<usize>) -> Self {
        assert!(!colors.is_empty(), "cycle words are nonempty");
        let r = least_rotation(&colors);
        colors.rotate_left(r);
        CycleWord(colors)
    }

    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_monochromatic(&self) -> bool {
        self.0.iter().all(|&c| c == self.0[0])
    }

    /// Shortest `ρ` with `self = ρ^r`, and that `r`.
    pub fn fundamental_period(&self) -> (CycleWord, usize) {
        let n = self.0.len();
        let p = (1..=n).find(|&p| n.is_multiple_of(p) && (p..n).all(|i| self.0[i] == self.0[i - p])).unwrap_or(n);
        // A prefix of the least rotation of ρ^r is the least rotation of ρ.
        (CycleWord(self.0[..p].to_vec()), n / p)
    }

    pub fn is_aperiodic(&self) -> bool {
        self.fundamental_period().1 == 1
    }

    /// `period` repeated `r` times.
    pub fn repeat(&self, r: usize) -> CycleWord {
        CycleWord::new(self.0.repeat(r))
    }

    fn add_counts(&self, counts: &mut [usize], times: usize) {
        for &c in &self.0 {
            counts[c - 1] += times;
        }
    }
}

impl Ord for CycleWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.len(), &self.0).cmp(&(other.0.len(), &other.0))
    }
}

impl PartialOrd for CycleWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CycleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A multiset of cycle words, kept as sorted `(word, multiplicity)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Ornament {
    cycles: Vec<(CycleWord, usize)>,
}

impl Ornament {
    pub fn from_words(words: impl IntoIterator<Item = CycleWord>) -> Self {
        let mut counts: BTreeMap<CycleWord, usize> = BTreeMap::new();
        for w in words {
            *counts.entry(w).or_default() += 1;
        }
        Ornament { cycles: counts.into_iter().collect() }
    }

    pub fn cycles(&self) -> &[(CycleWord, usize)] {
        &self.cycles
    }

    /// Number of cycles counted with multiplicity.
    pub fn cycle_count(&self) -> usize {
        self.cycles.iter().map(|(_, m)| m).sum()
    }

    /// Vertices per color `1..=k`.
    pub fn color_counts(&self, k: usize) -> Vec<usize> {
        let mut counts = vec![0; k];
        for (w, m) in &self.cycles {
            if w.0.iter().any(|&c| c > k) {
                // color outside the spec: make the caller's comparison fail
                return vec![usize::MAX; k];
            }
            w.add_counts(&mut counts, *m);
        }
        counts
    }
}

impl fmt::Display for Ornament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.cycles.iter().map(|(w, m)| if *m == 1 { w.to_string() } else { format!("{w}^{m}") }).collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

/// Replaces every value of every cycle of `p` by its block.
pub fn phi(spec: &BlockSpec, p: &Permutation) -> Result<Ornament> {
    if p.len() != spec.n() {
        return Err(crate::error::Error::LengthMismatch { expected: spec.n(), found: p.len() });
    }
    let labels = spec.block_labels();
    Ok(Ornament::from_words(
        p.cycles().into_iter().map(|c| CycleWord::new(c.into_iter().map(|x| labels[x - 1]).collect())),
    ))
}

/// `|N(ω)| = ∏ rᵢ^{lᵢ}·lᵢ!` over distinct cycles `νᵢ` of multiplicity `lᵢ`, where
/// `νᵢ` is `rᵢ`-repeating: each copy rotates onto itself `rᵢ` ways and equal copies
/// permute freely.
pub fn symmetry_order(o: &Ornament) -> BigInt {
    o.cycles.iter().map(|(w, l)| BigInt::from(w.fundamental_period().1).pow(*l as u32) * factorial(*l)).product()
}

/// Integer partition as weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(part, number of parts of that size)` by increasing part.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut m: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_default() += 1;
        }
        m.into_iter().collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `N(λ) = ∏ⱼ j^{nⱼ}·nⱼ!`, the centralizer order of cycle type `λ`.
pub fn n_of_partition(lambda: &Partition) -> BigInt {
    lambda.multiplicities().into_iter().map(|(j, nj)| BigInt::from(j).pow(nj as u32) * factorial(nj)).product()
}

/// All partitions of `l`, parts weakly decreasing, in reverse lexicographic order.
pub fn partitions(l: usize) -> Vec<Partition> {
    fn go(rest: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(l, l, &mut Vec::new(), &mut out);
    out
}

/// An ornament of aperiodic cycles, each carrying a partition of its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AugmentedOrnament {
    entries: Vec<(CycleWord, Partition)>,
}

impl AugmentedOrnament {
    pub fn entries(&self) -> &[(CycleWord, Partition)] {
        &self.entries
    }

    pub fn partition_of(&self, period: &CycleWord) -> Option<&Partition> {
        self.entries.iter().find(|(w, _)| w == period).map(|(_, p)| p)
    }

    /// The ornament being augmented: each period with multiplicity `|λ|`.
    pub fn base(&self) -> Ornament {
        Ornament { cycles: self.entries.iter().map(|(w, p)| (w.clone(), p.size())).collect() }
    }

    /// Inverse of [`psi`]: a part of size `r` becomes one copy of `period^r`.
    pub fn reconstruct(&self) -> Ornament {
        Ornament::from_words(self.entries.iter().flat_map(|(w, p)| p.parts().iter().map(move |&r| w.repeat(r))))
    }

    /// `∏ N(λᵢ)`. Every period here is aperiodic, so no extra rotation factor appears.
    pub fn symmetry_order(&self) -> BigInt {
        self.entries.iter().map(|(_, p)| n_of_partition(p)).product()
    }
}

impl fmt::Display for AugmentedOrnament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(w, p)| format!("{w}:{p}")).collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

/// Splits every `r`-repeating cycle into `r` copies of its fundamental period; the
/// partition attached to a period has one part `r` per cycle that was `r` copies of it.
pub fn psi(o: &Ornament) -> AugmentedOrnament {
    let mut parts: BTreeMap<CycleWord, Vec<usize>> = BTreeMap::new();
    for (w, m) in &o.cycles {
        let (period, r) = w.fundamental_period();
        parts.entry(period).or_default().extend(std::iter::repeat_n(r, *m));
    }
    AugmentedOrnament { entries: parts.into_iter().map(|(w, p)| (w, Partition::new(p))).collect() }
}

/// Color counts match, no 1-cycles, and every cycle is aperiodic except monochromatic
/// 2-cycles, which are allowed only in descending colors.
pub fn is_satisfactory(spec: &BlockSpec, o: &Ornament) -> bool {
    o.color_counts(spec.k()) == spec.sizes()
        && o.cycles.iter().all(|(w, _)| {
            w.len() >= 2 && (w.is_aperiodic() || (w.len() == 2 && w.is_monochromatic() && spec.is_descending(w.0[0])))
        })
}

/// Color counts match and every monochromatic cycle has even length and a descending color.
pub fn is_acceptable(spec: &BlockSpec, o: &Ornament) -> bool {
    o.color_counts(spec.k()) == spec.sizes()
        && o.cycles.iter().all(|(w, _)| !w.is_monochromatic() || (w.len() % 2 == 0 && spec.is_descending(w.0[0])))
}

type Choice = (usize, usize);

/// The aperiodic necklaces of length ≥ 2 whose color counts fit inside a block-size
/// vector. Shared across descending sets with the same sizes.
#[derive(Debug, Clone)]
pub struct NecklaceCatalog {
    sizes: Vec<usize>,
    words: Vec<(CycleWord, Vec<usize>)>,
    /// Number of multisets of catalog words with each color content, indexed in mixed
    /// radix with the first color fastest.
    base: Vec<BigInt>,
}

impl NecklaceCatalog {
    pub fn new(sizes: &[usize], limits: &Limits) -> Result<Self> {
        let n: usize = sizes.iter().sum();
        Limits::check(limits.ornaments, n, "ornament enumeration")?;
        let k = sizes.len();
        let mut words = Vec::new();
        let mut content = vec![0usize; k];
        loop {
            let len: usize = content.iter().sum();
            if len >= 2 {
                let mut word: Vec<usize> =
                    content.iter().enumerate().flat_map(|(c, &m)| std::iter::repeat_n(c + 1, m)).collect();
                // every arrangement of the content, keeping canonical aperiodic ones
                loop {
                    if least_rotation(&word) == 0 {
                        let w = CycleWord(word.clone());
                        if w.is_aperiodic() {
                            words.push((w, content.clone()));
                        }
                    }
                    if !crate::perm::next_lex(&mut word) {
                        break;
                    }
                }
            }
            let mut i = 0;
            loop {
                if i == k {
                    words.sort();
                    let mut base = vec![BigInt::zero(); sizes.iter().map(|a| a + 1).product()];
                    base[0] = BigInt::one();
                    for (_, content) in &words {
                        add_unbounded(&mut base, sizes, content);
                    }
                    return Ok(NecklaceCatalog { sizes: sizes.to_vec(), words, base });
                }
                if content[i] < sizes[i] {
                    content[i] += 1;
                    break;
                }
                content[i] = 0;
                i += 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    fn allowed(&self, spec: &BlockSpec) -> Vec<(CycleWord, Vec<usize>)> {
        debug_assert_eq!(spec.sizes(), &self.sizes[..]);
        let k = self.sizes.len();
        let mut items = self.words.clone();
        for &j in spec.descending() {
            if self.sizes[j - 1] >= 2 {
                let mut content = vec![0; k];
                content[j - 1] = 2;
                items.push((CycleWord(vec![j, j]), content));
            }
        }
        items.sort();
        items
    }

    /// Walks every satisfactory ornament, choosing multiplicities item by item. The
    /// visitor sees `(item index, multiplicity)` pairs.
    fn walk(&self, spec: &BlockSpec, mut visit: impl FnMut(&[Choice])) {
        let items = self.allowed(spec);
        let mut remaining = self.sizes.clone();
        let mut chosen: Vec<Choice> = Vec::new();
        fn go(
            items: &[(CycleWord, Vec<usize>)],
            idx: usize,
            remaining: &mut [usize],
            chosen: &mut Vec<Choice>,
            visit: &mut dyn FnMut(&[Choice]),
        ) {
            if remaining.iter().all(|&r| r == 0) {
                visit(chosen);
                return;
            }
            for i in idx..items.len() {
                let content = &items[i].1;
                let mut m = 0;
                while content.iter().zip(remaining.iter()).all(|(c, r)| c <= r) {
                    for (r, c) in remaining.iter_mut().zip(content) {
                        *r -= c;
                    }
                    m += 1;
                    chosen.push((i, m));
                    go(items, i + 1, remaining, chosen, visit);
                    chosen.pop();
                }
                for (r, c) in remaining.iter_mut().zip(content) {
                    *r += c * m;
                }
            }
        }
        let items_ref = &items;
        go(items_ref, 0, &mut remaining, &mut chosen, &mut visit);
    }

    pub fn count_satisfactory(&self, spec: &BlockSpec) -> BigInt {
        debug_assert_eq!(spec.sizes(), &self.sizes[..]);
        let mut dp = self.base.clone();
        for &j in spec.descending() {
            if self.sizes[j - 1] >= 2 {
                let mut content = vec![0; self.sizes.len()];
                content[j - 1] = 2;
                add_unbounded(&mut dp, &self.sizes, &content);
            }
        }
        dp.pop().expect("at least one state")
    }

    pub fn satisfactory(&self, spec: &BlockSpec) -> Vec<Ornament> {
        let items = self.allowed(spec);
        let mut out = Vec::new();
        self.walk(spec, |chosen| {
            out.push(Ornament { cycles: chosen.iter().map(|&(i, m)| (items[i].0.clone(), m)).collect() });
        });
        out.sort();
        out
    }
}

/// Folds one more item, usable any number of times, into a multiset-count table over
/// contents `0 ≤ c ≤ sizes`.
fn add_unbounded(dp: &mut [BigInt], sizes: &[usize], item: &[usize]) {
    let mut offset = 0;
    let mut stride = 1;
    for (a, c) in sizes.iter().zip(item) {
        offset += c * stride;
        stride *= a + 1;
    }
    let mut digits = vec![0usize; sizes.len()];
    for x in 0..dp.len() {
        if digits.iter().zip(item).all(|(d, c)| d >= c) {
            let prev = dp[x - offset].clone();
            dp[x] += prev;
        }
        for (d, a) in digits.iter_mut().zip(sizes) {
            if *d < *a {
                *d += 1;
                break;
            }
            *d = 0;
        }
    }
}

/// Number of satisfactory ornaments with color counts `a`.
pub fn count_satisfactory(spec: &BlockSpec, limits: &Limits) -> Result<BigInt> {
    Ok(NecklaceCatalog::new(spec.sizes(), limits)?.count_satisfactory(spec))
}

/// All satisfactory ornaments with color counts `a`, sorted.
pub fn enumerate_satisfactory(spec: &BlockSpec, limits: &Limits) -> Result<Vec<Ornament>> {
    Ok(NecklaceCatalog::new(spec.sizes(), limits)?.satisfactory(spec))
}

/// Number of permutations of `Sₙ` mapping to each ornament under [`phi`].
pub fn phi_fibers(spec: &BlockSpec) -> BTreeMap<Ornament, BigInt> {
    let mut fibers: BTreeMap<Ornament, BigInt> = BTreeMap::new();
    crate::oracle::for_each_permutation(spec.n(), |p| {
        *fibers.entry(phi(spec, p).expect("length matches")).or_insert_with(BigInt::zero) += BigInt::one();
    });
    fibers
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::all_specs;
    use crate::oracle;
    use proptest::prelude::*;

    fn w(c: &[usize]) -> CycleWord {
        CycleWord::new(c.to_vec())
    }

    fn spec(a: &[usize], s: &[usize]) -> BlockSpec {
        BlockSpec::new(a.to_vec(), s.iter().copied()).unwrap()
    }

    fn figure1() -> Permutation {
        Permutation::new(vec![18, 17, 15, 14, 13, 12, 11, 9, 1, 2, 3, 4, 5, 6, 7, 8, 10, 16]).unwrap()
    }

    fn brute_least_rotation(s: &[usize]) -> Vec<usize> {
        (0..s.len())
            .map(|r| {
                let mut v = s.to_vec();
                v.rotate_left(r);
                v
            })
            .min()
            .unwrap_or_default()
    }

    proptest! {
        #[test]
        fn booth_matches_brute_force(s in prop::collection::vec(1usize..4, 1..12)) {
            let mut v = s.clone();
            v.rotate_left(least_rotation(&s));
            prop_assert_eq!(v, brute_least_rotation(&s));
        }

        #[test]
        fn psi_roundtrips(words in prop::collection::vec((prop::collection::vec(1usize..3, 1..4), 1usize..4), 0..5)) {
            let o = Ornament::from_words(words.into_iter().map(|(c, r)| CycleWord::new(c.repeat(r))));
            let aug = psi(&o);
            prop_assert_eq!(aug.reconstruct(), o.clone());
            prop_assert!(aug.entries().iter().all(|(w, _)| w.is_aperiodic()));
            prop_assert_eq!(aug.symmetry_order(), symmetry_order(&o));
        }
    }

    #[test]
    fn period_examples() {
        assert_eq!(w(&[1, 2, 1, 2]).fundamental_period(), (w(&[1, 2]), 2));
        assert_eq!(w(&[1, 2, 1, 2, 1, 2]).fundamental_period(), (w(&[1, 2]), 3));
        assert_eq!(w(&[1]).fundamental_period(), (w(&[1]), 1));
        assert_eq!(w(&[1, 2, 2, 1, 2]).fundamental_period().1, 1);
        assert_eq!(w(&[2, 1, 2, 1]).fundamental_period(), (w(&[1, 2]), 2));
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(w(&[2, 2, 1, 2, 1]).colors(), &[1, 2, 1, 2, 2]);
        assert_eq!(w(&[3, 1, 2]), w(&[1, 2, 3]));
        assert_ne!(w(&[1, 3, 2]), w(&[1, 2, 3]));
        assert!(w(&[1, 1]) < w(&[1, 2, 2]));
    }

    fn figure2() -> Ornament {
        Ornament::from_words([w(&[1, 2, 2, 1, 2]), w(&[1, 2, 2]), w(&[1, 2, 1, 2]), w(&[1, 2, 1, 2]), w(&[1, 2])])
    }

    #[test]
    fn phi_examples() {
        let o = phi(&spec(&[8, 10], &[1]), &figure1()).unwrap();
        assert_eq!(o, figure2());
        assert_eq!(o.to_string(), "{[1,2] [1,2,2] [1,2,1,2]^2 [1,2,1,2,2]}");
        let o = phi(&spec(&[2, 2], &[]), &Permutation::new(vec![2, 1, 4, 3]).unwrap()).unwrap();
        assert_eq!(o, Ornament::from_words([w(&[1, 1]), w(&[2, 2])]));
        let o = phi(&spec(&[1], &[]), &Permutation::identity(1)).unwrap();
        assert_eq!(o, Ornament::from_words([w(&[1])]));
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(symmetry_order(&figure2()), BigInt::from(8));
        assert_eq!(symmetry_order(&Ornament::from_words([w(&[1, 2])])), BigInt::from(1));
        assert_eq!(symmetry_order(&Ornament::from_words([w(&[1, 1]), w(&[1, 1])])), BigInt::from(8));
    }

    #[test]
    fn psi_examples() {
        let aug = psi(&figure2());
        assert_eq!(aug.partition_of(&w(&[1, 2])), Some(&Partition::new(vec![1, 2, 2])));
        assert_eq!(aug.partition_of(&w(&[1, 2, 2])), Some(&Partition::new(vec![1])));
        assert_eq!(aug.partition_of(&w(&[1, 2, 1, 2, 2])), Some(&Partition::new(vec![1])));
        assert_eq!(aug.partition_of(&w(&[1, 2])).unwrap().to_string(), "(2,2,1)");

        let aug = psi(&Ornament::from_words([w(&[1, 1])]));
        assert_eq!(aug.entries(), &[(w(&[1]), Partition::new(vec![2]))]);

        let aug = psi(&Ornament::from_words([w(&[1, 2]), w(&[1, 2]), w(&[1, 2])]));
        assert_eq!(aug.entries(), &[(w(&[1, 2]), Partition::new(vec![1, 1, 1]))]);
        assert_eq!(aug.base(), Ornament::from_words([w(&[1, 2]), w(&[1, 2]), w(&[1, 2])]));
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(n_of_partition(&Partition::new(vec![1, 2, 2])), BigInt::from(8));
        assert_eq!(n_of_partition(&Partition::new(vec![1])), BigInt::from(1));
        for l in 1..=8 {
            assert_eq!(n_of_partition(&Partition::new(vec![l])), BigInt::from(l));
        }
    }

    #[test]
    fn class_equation() {
        for l in 0..=8 {
            let total: BigInt = partitions(l).iter().map(|p| factorial(l) / n_of_partition(p)).sum();
            assert_eq!(total, factorial(l), "l={l}");
        }
        assert_eq!(partitions(5).len(), 7);
    }

    #[test]
    fn satisfactory_examples() {
        let mono = Ornament::from_words([w(&[1, 1]), w(&[2, 2])]);
        assert!(is_satisfactory(&spec(&[2, 2], &[1, 2]), &mono));
        // monochromatic 2-cycles only survive in descending colors
        assert!(!is_satisfactory(&spec(&[2, 2], &[1]), &mono));
        let ones = Ornament::from_words([w(&[1]), w(&[1]), w(&[2]), w(&[2])]);
        assert!(!is_satisfactory(&spec(&[2, 2], &[1, 2]), &ones));
        let periodic = Ornament::from_words([w(&[1, 2, 1, 2])]);
        assert!(!is_satisfactory(&spec(&[2, 2], &[1, 2]), &periodic));
    }

    #[test]
    fn acceptable_examples() {
        assert!(is_acceptable(&spec(&[8, 10], &[1]), &figure2()));
        let mono = Ornament::from_words([w(&[1, 1]), w(&[2, 2])]);
        assert!(!is_acceptable(&spec(&[2, 2], &[2]), &mono));
        assert!(is_acceptable(&spec(&[2, 2], &[1, 2]), &mono));
        let odd = Ornament::from_words([w(&[1, 1, 1])]);
        assert!(!is_acceptable(&spec(&[3], &[1]), &odd));
    }

    #[test]
    fn count_examples() {
        let lim = Limits::default();
        assert_eq!(count_satisfactory(&spec(&[2, 2], &[1, 2]), &lim).unwrap(), BigInt::from(3));
        let all = enumerate_satisfactory(&spec(&[2, 2], &[1, 2]), &lim).unwrap();
        assert_eq!(
            all,
            vec![
                Ornament::from_words([w(&[1, 1]), w(&[2, 2])]),
                Ornament::from_words([w(&[1, 2]), w(&[1, 2])]),
                Ornament::from_words([w(&[1, 1, 2, 2])]),
            ]
        );
        for s in [&[][..], &[1]] {
            assert_eq!(count_satisfactory(&spec(&[1], s), &lim).unwrap(), BigInt::zero());
            assert_eq!(count_satisfactory(&spec(&[1, 1], s), &lim).unwrap(), BigInt::one());
        }
        assert!(count_satisfactory(&spec(&[6, 5], &[]), &lim).is_err());
    }

    #[test]
    fn enumerated_ornaments_are_satisfactory_and_distinct() {
        let lim = Limits::default();
        for n in 1..=6 {
            for s in all_specs(n, 3) {
                let all = enumerate_satisfactory(&s, &lim).unwrap();
                assert!(all.iter().all(|o| is_satisfactory(&s, o)));
                assert!(all.windows(2).all(|p| p[0] < p[1]));
                assert_eq!(BigInt::from(all.len()), count_satisfactory(&s, &lim).unwrap());
            }
        }
    }

    #[test]
    fn satisfactory_count_matches_oracle() {
        let lim = Limits::default();
        for n in 1..=7 {
            for s in all_specs(n, 4) {
                assert_eq!(
                    count_satisfactory(&s, &lim).unwrap(),
                    oracle::count_derangements_oracle(&s, &lim).unwrap(),
                    "{s}"
                );
            }
        }
    }

    #[test]
    fn fiber_sizes_and_weight_transport() {
        for n in 1..=6 {
            for s in all_specs(n, n) {
                let fibers = phi_fibers(&s);
                let total = s.factorial_product();
                let mut weight: BTreeMap<Ornament, BigInt> = BTreeMap::new();
                oracle::for_each_permutation(n, |p| {
                    let o = phi(&s, p).unwrap();
                    let c = s.c_s_weight(p).unwrap();
                    let prev = weight.insert(o.clone(), c.clone());
                    assert!(prev.is_none_or(|x| x == c), "{s} {p}");
                    assert_eq!(is_acceptable(&s, &o), !c.is_zero(), "{s} {p}");
                });
                for (o, size) in &fibers {
                    assert_eq!(size * symmetry_order(o), total, "{s} {o}");
                    let aug = psi(o);
                    assert_eq!(aug.symmetry_order(), symmetry_order(o));
                }
            }
        }
    }
}
