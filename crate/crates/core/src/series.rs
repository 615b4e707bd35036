//! Dense truncated multivariate power series with big-integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::blocks::BlockSpec;
use crate::error::{Error, Result};

/// A power series in `x₁, …, xₖ` with every term of degree above `bounds[i]` in `xᵢ`
/// discarded. Coefficients are stored row-major, last variable fastest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    bounds: Vec<usize>,
    strides: Vec<usize>,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(bounds: &[usize]) -> Self {
        let mut strides = vec![1; bounds.len()];
        for i in (0..bounds.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (bounds[i + 1] + 1);
        }
        let size = bounds.iter().map(|d| d + 1).product();
        TruncatedSeries { bounds: bounds.to_vec(), strides, coeffs: vec![BigInt::zero(); size] }
    }

    pub fn one(bounds: &[usize]) -> Self {
        let mut s = Self::zero(bounds);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn offset(&self, e: &[usize]) -> Option<usize> {
        if e.len() != self.bounds.len() || e.iter().zip(&self.bounds).any(|(x, d)| x > d) {
            return None;
        }
        Some(e.iter().zip(&self.strides).map(|(x, s)| x * s).sum())
    }

    /// Coefficient of `x^e`; zero outside the truncation box.
    pub fn coeff(&self, e: &[usize]) -> BigInt {
        self.offset(e).map(|o| self.coeffs[o].clone()).unwrap_or_default()
    }

    pub fn set_coeff(&mut self, e: &[usize], value: BigInt) -> Result<()> {
        let o = self.offset(e).ok_or_else(|| Error::InvalidSpec(format!("exponent {e:?} outside the box")))?;
        self.coeffs[o] = value;
        Ok(())
    }

    /// Exponent tuple of a flat offset.
    fn exponent(&self, mut offset: usize) -> Vec<usize> {
        self.strides
            .iter()
            .map(|s| {
                let x = offset / s;
                offset %= s;
                x
            })
            .collect()
    }

    /// Exponent of variable `var` (0-based) at a flat offset.
    fn digit(&self, offset: usize, var: usize) -> usize {
        offset / self.strides[var] % (self.bounds[var] + 1)
    }

    fn check_var(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.bounds.len() {
            return Err(Error::IndexOutOfRange { index: i, max: self.bounds.len() });
        }
        Ok(i - 1)
    }

    /// Truncation of `1 / (1 - x₁ - … - xₖ)`: the coefficient of `x^e` is `multinomial(e)`.
    pub fn geometric_all(bounds: &[usize]) -> Self {
        let mut s = Self::zero(bounds);
        // Row-major order visits every e - e_i before e, so the defining relation
        // G = 1 + (x₁ + … + xₖ)·G fills the box in one pass.
        for o in 0..s.coeffs.len() {
            if o == 0 {
                s.coeffs[0] = BigInt::one();
                continue;
            }
            let mut acc = BigInt::zero();
            for var in 0..bounds.len() {
                if s.digit(o, var) > 0 {
                    acc += &s.coeffs[o - s.strides[var]];
                }
            }
            s.coeffs[o] = acc;
        }
        s
    }

    /// `self · (1 - xᵢ)`, variable `i` 1-based.
    pub fn mul_one_minus(&self, i: usize) -> Result<Self> {
        let var = self.check_var(i)?;
        let mut out = self.clone();
        for o in 0..out.coeffs.len() {
            if self.digit(o, var) > 0 {
                out.coeffs[o] -= &self.coeffs[o - self.strides[var]];
            }
        }
        Ok(out)
    }

    /// `self / (1 + xᵢ)`, i.e. `self · Σ_j (-xᵢ)^j`, via `new[e] = old[e] - new[e - eᵢ]`.
    pub fn div_one_plus(&self, i: usize) -> Result<Self> {
        let var = self.check_var(i)?;
        let mut out = self.clone();
        let stride = self.strides[var];
        for o in 0..out.coeffs.len() {
            if self.digit(o, var) > 0 {
                let prev = out.coeffs[o - stride].clone();
                out.coeffs[o] -= prev;
            }
        }
        Ok(out)
    }

    /// `self · (1 + xᵢ)`.
    pub fn mul_one_plus(&self, i: usize) -> Result<Self> {
        let var = self.check_var(i)?;
        let mut out = self.clone();
        for o in 0..out.coeffs.len() {
            if self.digit(o, var) > 0 {
                out.coeffs[o] += &self.coeffs[o - self.strides[var]];
            }
        }
        Ok(out)
    }

    /// `self / (1 - xᵢ)`: prefix sums along variable `i`.
    pub fn div_one_minus(&self, i: usize) -> Result<Self> {
        let var = self.check_var(i)?;
        let mut out = self.clone();
        let stride = self.strides[var];
        for o in 0..out.coeffs.len() {
            if self.digit(o, var) > 0 {
                let prev = out.coeffs[o - stride].clone();
                out.coeffs[o] += prev;
            }
        }
        Ok(out)
    }

    /// Nonzero terms as `(exponent, coefficient)` in row-major order.
    pub fn terms(&self) -> Vec<(Vec<usize>, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(o, c)| (self.exponent(o), c.clone()))
            .collect()
    }
}

/// The generating function for `(A, S)`-derangements truncated at `a`:
/// `1/(1 - Σxᵢ) · ∏_{i∉S}(1 - xᵢ) / ∏_{i∈S}(1 + xᵢ)`.
pub fn derangement_series(spec: &BlockSpec) -> TruncatedSeries {
    let mut s = TruncatedSeries::geometric_all(spec.sizes());
    for i in 1..=spec.k() {
        s = if spec.is_descending(i) { s.div_one_plus(i) } else { s.mul_one_minus(i) }
            .expect("variable index within k");
    }
    s
}

/// Coefficient of `x₁^{a₁}⋯xₖ^{aₖ}` in [`derangement_series`].
pub fn count_genfunc(spec: &BlockSpec) -> BigInt {
    derangement_series(spec).coeff(spec.sizes())
}
