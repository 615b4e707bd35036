//! Fixed-point generating polynomials and the alternating λ-polynomial whose constant
//! term counts descending derangements.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::blocks::BlockSpec;
use crate::counters::{binomial, derangement_number};
use crate::error::{Error, Result};
use crate::oracle::{self, exact_div, Limits};

/// Polynomial in λ with big-integer coefficients, lowest degree first, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LambdaPoly {
    coeffs: Vec<BigInt>,
}

impl LambdaPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        LambdaPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: BigInt) -> Self {
        LambdaPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    fn scale(&self, k: &BigInt) -> Self {
        LambdaPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    fn div_exact(&self, d: &BigInt, what: &'static str) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|c| exact_div(c, d, what)).collect::<Result<_>>()?;
        Ok(LambdaPoly::new(coeffs))
    }
}

impl Add for &LambdaPoly {
    type Output = LambdaPoly;

    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        LambdaPoly::new((0..len).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Mul for &LambdaPoly {
    type Output = LambdaPoly;

    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return LambdaPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LambdaPoly::new(out)
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;

    fn neg(self) -> LambdaPoly {
        LambdaPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "λ")?,
                (1, false) => write!(f, "{mag}λ")?,
                (_, true) => write!(f, "λ^{j}")?,
                (_, false) => write!(f, "{mag}λ^{j}")?,
            }
        }
        Ok(())
    }
}

/// Generating polynomial of `Sₙ` by number of fixed points: the coefficient of `λ^j`
/// is `C(n, j)·D_{n-j}`.
pub fn f_lambda(n: usize) -> LambdaPoly {
    LambdaPoly::new((0..=n).map(|j| binomial(n, j) * derangement_number(n - j)).collect())
}

fn f_lambda_table(n: usize) -> Vec<LambdaPoly> {
    (0..=n).map(f_lambda).collect()
}

/// `Σ_T (-1)^{|T|} f_λ(n - |T|) ∏ f_λ(|Aᵢ ∩ T|)` with the subsets `T` grouped by
/// their intersection sizes `(t₁, …, tₖ)`, each group carrying `∏ C(aᵢ, tᵢ)`.
fn alternating_sum_collapsed(sizes: &[usize]) -> LambdaPoly {
    let n: usize = sizes.iter().sum();
    let table = f_lambda_table(n);
    let mut t = vec![0usize; sizes.len()];
    let mut total = LambdaPoly::default();
    loop {
        let used: usize = t.iter().sum();
        let mut weight = BigInt::one();
        let mut term = table[n - used].clone();
        for (&a, &ti) in sizes.iter().zip(&t) {
            weight *= binomial(a, ti);
            term = &term * &table[ti];
        }
        if used % 2 == 1 {
            weight = -weight;
        }
        total = &total + &term.scale(&weight);

        let mut i = 0;
        loop {
            if i == t.len() {
                return total;
            }
            if t[i] < sizes[i] {
                t[i] += 1;
                break;
            }
            t[i] = 0;
            i += 1;
        }
    }
}

/// The same sum taken literally over all `2ⁿ` subsets `T`.
fn alternating_sum_direct(sizes: &[usize]) -> LambdaPoly {
    let n: usize = sizes.iter().sum();
    let table = f_lambda_table(n);
    let labels: Vec<usize> = sizes.iter().enumerate().flat_map(|(j, &a)| std::iter::repeat_n(j, a)).collect();
    let mut total = LambdaPoly::default();
    for mask in 0u64..1 << n {
        let mut per_block = vec![0usize; sizes.len()];
        for (i, &b) in labels.iter().enumerate() {
            if mask >> i & 1 == 1 {
                per_block[b] += 1;
            }
        }
        let size = mask.count_ones() as usize;
        let term = per_block.iter().fold(table[n - size].clone(), |acc, &t| &acc * &table[t]);
        total = if size % 2 == 1 { &total + &-&term } else { &total + &term };
    }
    total
}

fn factorial_product(sizes: &[usize]) -> BigInt {
    sizes.iter().map(|&a| crate::counters::factorial(a)).product()
}

/// `(1/∏aᵢ!) Σ_T (-1)^{|T|} f_λ(n - |T|) ∏ f_λ(|Aᵢ ∩ T|)`.
pub fn efw_polynomial(sizes: &[usize]) -> Result<LambdaPoly> {
    check_sizes(sizes)?;
    alternating_sum_collapsed(sizes).div_exact(&factorial_product(sizes), "λ-polynomial normalization")
}

/// [`efw_polynomial`] summed over every subset individually. Refuses `n > 20`.
pub fn efw_polynomial_direct(sizes: &[usize]) -> Result<LambdaPoly> {
    check_sizes(sizes)?;
    let n: usize = sizes.iter().sum();
    Limits::check(20, n, "subset-by-subset λ-polynomial")?;
    alternating_sum_direct(sizes).div_exact(&factorial_product(sizes), "λ-polynomial normalization")
}

fn check_sizes(sizes: &[usize]) -> Result<()> {
    BlockSpec::all_descending(sizes.to_vec()).map(|_| ())
}

/// `(1/∏aᵢ!) Σ_{π ∈ Sₙ} c(π)`.
pub fn sum_c_normalized(sizes: &[usize], limits: &Limits) -> Result<BigInt> {
    let spec = BlockSpec::all_descending(sizes.to_vec())?;
    let sum = oracle::sum_c_weights(&spec, limits)?;
    exact_div(&sum, &spec.factorial_product(), "normalized c-weight sum")
}

/// Constant term of [`efw_polynomial`], or an error if the polynomial depends on λ.
pub fn efw_constant(sizes: &[usize]) -> Result<BigInt> {
    let p = efw_polynomial(sizes)?;
    if !p.is_constant() {
        return Err(Error::IdentityFailed(format!("λ-polynomial for {sizes:?} is not constant: {p}")));
    }
    Ok(p.constant_term())
}
