//! Permutations in one-line notation and their basic statistics.
//!
//! Positions and values are 1-based throughout the public surface: `images[i - 1]`
//! holds π(i).

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation, checking that it is a bijection.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} outside 1..={n}")));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_vec_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// π(i) for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn descents(&self) -> Vec<usize> {
        self.images.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i + 1).collect()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.positions(|i, v| v == i)
    }

    pub fn excedances(&self) -> Vec<usize> {
        self.positions(|i, v| v > i)
    }

    pub fn deficiencies(&self) -> Vec<usize> {
        self.positions(|i, v| v < i)
    }

    pub fn is_derangement(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v != i + 1)
    }

    fn positions(&self, pred: impl Fn(usize, usize) -> bool) -> Vec<usize> {
        self.images.iter().enumerate().filter(|&(i, &v)| pred(i + 1, v)).map(|(i, _)| i + 1).collect()
    }

    /// Disjoint cycles, each rotated to start at its minimum, listed by increasing minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.at(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Rebuilds a permutation of `{1, …, n}` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images = vec![0; n];
        for cycle in cycles {
            for (idx, &x) in cycle.iter().enumerate() {
                let next = cycle[(idx + 1) % cycle.len()];
                if x == 0 || x > n || images[x - 1] != 0 {
                    return Err(Error::InvalidPermutation(format!("bad cycle element {x}")));
                }
                images[x - 1] = next;
            }
        }
        Permutation::new(images)
    }

    /// The fixed-point removal map ψᵢ: delete row and column `i` of the permutation
    /// matrix and relabel `{1, …, n} \ {i}` order-preservingly onto `{1, …, n-1}`.
    pub fn remove_fixed_point(&self, i: usize) -> Result<Self> {
        let n = self.len();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        if self.at(i) != i {
            return Err(Error::NotAFixedPoint { index: i });
        }
        let squeeze = |v: usize| if v > i { v - 1 } else { v };
        let images =
            self.images.iter().enumerate().filter(|&(pos, _)| pos + 1 != i).map(|(_, &v)| squeeze(v)).collect();
        Ok(Permutation { images })
    }

    /// Inverse of [`remove_fixed_point`](Self::remove_fixed_point): the unique `q` on
    /// `{1, …, n+1}` with `q(j) = j` and `ψⱼ(q) = self`.
    pub fn insert_fixed_point(&self, j: usize) -> Result<Self> {
        let n = self.len() + 1;
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange { index: j, max: n });
        }
        let widen = |v: usize| if v >= j { v + 1 } else { v };
        let mut images = Vec::with_capacity(n);
        images.extend(self.images[..j - 1].iter().map(|&v| widen(v)));
        images.push(j);
        images.extend(self.images[j - 1..].iter().map(|&v| widen(v)));
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Formats cycles as `(1,18,16,8,9)(2,17,10)…`.
pub fn format_cycles(cycles: &[Vec<usize>]) -> String {
    cycles
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            format!("({})", inner.join(","))
        })
        .collect()
}

/// Advances `v` to its lexicographic successor. Returns `false` (leaving `v` sorted
/// ascending) once the last arrangement has been passed.
pub(crate) fn next_lex(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The permutation of rank `rank` (0-based) in lexicographic order on `{1, …, n}`.
pub(crate) fn nth_lex(n: usize, mut rank: u128) -> Vec<usize> {
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut fact: Vec<u128> = vec![1; n + 1];
    for i in 1..=n {
        fact[i] = fact[i - 1] * i as u128;
    }
    let mut out = Vec::with_capacity(n);
    for remaining in (1..=n).rev() {
        let f = fact[remaining - 1];
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

pub(crate) fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).product()
}
