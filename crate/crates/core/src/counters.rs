//! Scalable exact counts of `(A, S)`-derangements.
//!
//! [`count_recursion`] runs the fixed-point recursion over the blocks, [`count_sum`]
//! evaluates the closed alternating sum. Neither enumerates permutations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::blocks::BlockSpec;

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    // Each partial product is itself a binomial coefficient, so the division is exact.
    (0..r).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `(Σ parts)! / ∏ partsᵢ!`, built as a product of binomials.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut total = 0;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// Number of derangements of `n` elements.
pub fn derangement_number(n: usize) -> BigInt {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::zero());
    if n == 0 {
        return prev;
    }
    for m in 2..=n {
        let next = (m - 1) * (&cur + &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Memo key for `f_j(c₁, …, cₖ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RecursionKey {
    pub j: usize,
    pub c: Vec<usize>,
}

/// Evaluator for `f_j(c)`: the number of `(c, S)`-permutations with no fixed points in
/// the first `j` blocks. Zero-sized blocks are allowed here since the recursion
/// shrinks block sizes down to zero.
#[derive(Debug)]
pub struct FixedPointRecursion {
    descending: Vec<bool>,
    memo: HashMap<RecursionKey, BigInt>,
}

impl FixedPointRecursion {
    pub fn new(spec: &BlockSpec) -> Self {
        FixedPointRecursion {
            descending: (1..=spec.k()).map(|j| spec.is_descending(j)).collect(),
            memo: HashMap::new(),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `f_j(c)`.
    ///
    /// Peeling block `j` off `f_{j-1}`: an ascending block may carry any number of
    /// leading fixed points and a descending one at most one, which gives
    /// `f_{j-1}(c) = Σ_{h ≤ m_j} f_j(c - h·e_j)`. Inverting,
    /// `f_j(c) = f_{j-1}(c) - f_{j-1}(c - e_j)` for ascending blocks (telescoping) and
    /// `f_j(c) = f_{j-1}(c) - f_j(c - e_j)` for descending ones.
    pub fn f(&mut self, j: usize, c: &[usize]) -> BigInt {
        if j == 0 {
            return multinomial(c);
        }
        let key = RecursionKey { j, c: c.to_vec() };
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let idx = j - 1;
        let value = if c[idx] == 0 {
            self.f(j - 1, c)
        } else {
            let mut smaller = c.to_vec();
            smaller[idx] -= 1;
            let whole = self.f(j - 1, c);
            if self.descending[idx] {
                whole - self.f(j, &smaller)
            } else {
                whole - self.f(j - 1, &smaller)
            }
        };
        self.memo.insert(key, value.clone());
        value
    }
}

/// `f_k(a)`, the number of `(A, S)`-derangements, via the memoized recursion.
pub fn count_recursion(spec: &BlockSpec) -> BigInt {
    FixedPointRecursion::new(spec).f(spec.k(), spec.sizes())
}

/// Alternating sum over `0 ≤ bᵢ ≤ lᵢ`, `lᵢ = 1` for ascending blocks and `aᵢ` for
/// descending ones, of `(-1)^{Σb} · multinomial(a - b)`.
pub fn count_sum(spec: &BlockSpec) -> BigInt {
    let a = spec.sizes();
    let caps: Vec<usize> =
        a.iter().enumerate().map(|(i, &ai)| if spec.is_descending(i + 1) { ai } else { 1 }).collect();
    let mut b = vec![0usize; a.len()];
    let mut total = BigInt::zero();
    loop {
        let parts: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        let term = multinomial(&parts);
        if b.iter().sum::<usize>() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        // odometer step
        let mut i = 0;
        loop {
            if i == b.len() {
                return total;
            }
            if b[i] < caps[i] {
                b[i] += 1;
                break;
            }
            b[i] = 0;
            i += 1;
        }
    }
}
