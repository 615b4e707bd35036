//! Derangement density of scaled block systems.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::blocks::BlockSpec;
use crate::counters::{count_sum, multinomial};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct DensityRow {
    pub scale: usize,
    pub sizes: Vec<usize>,
    pub derangements: BigInt,
    pub total: BigInt,
    /// `derangements / total` rounded half-up to 12 decimal places.
    pub ratio: String,
    /// `|ratio − e⁻¹|` in floating point.
    pub distance_from_inverse_e: f64,
}

/// Fixed-point decimal rendering of `num / den` with `places` digits, rounded half-up.
/// Both arguments must be nonnegative and `den` positive.
pub fn decimal_ratio(num: &BigInt, den: &BigInt, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled: BigInt = (num * &scale * 2 + den) / (den * 2);
    let int_part = &scaled / &scale;
    let frac = (&scaled % &scale).to_string();
    format!("{int_part}.{}{frac}", "0".repeat(places - frac.len()))
}

/// Ratio of `num / den` as `f64`, exact enough for display.
fn ratio_f64(num: &BigInt, den: &BigInt) -> f64 {
    if den.is_zero() {
        return f64::NAN;
    }
    // scale into range before converting so huge counts do not overflow f64
    let bits = den.bits().saturating_sub(60);
    let n = (num >> bits).to_f64().unwrap_or(f64::NAN);
    let d = (den >> bits).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// For `c = 1..=scale_max`, the fraction of `(c·A, S)`-permutations that are derangements.
pub fn density_table(spec: &BlockSpec, scale_max: usize) -> Result<Vec<DensityRow>> {
    (1..=scale_max)
        .map(|c| {
            let sizes: Vec<usize> = spec.sizes().iter().map(|a| a * c).collect();
            let scaled = BlockSpec::new(sizes.clone(), spec.descending().iter().copied())?;
            let derangements = count_sum(&scaled);
            let total = multinomial(&sizes);
            let ratio = decimal_ratio(&derangements, &total, 12);
            let distance_from_inverse_e = (ratio_f64(&derangements, &total) - (-1f64).exp()).abs();
            Ok(DensityRow { scale: c, sizes, derangements, total, ratio, distance_from_inverse_e })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(a: &[usize], s: &[usize]) -> BlockSpec {
        BlockSpec::new(a.to_vec(), s.iter().copied()).unwrap()
    }

    #[test]
    fn decimal_rendering() {
        let d = |a: i64, b: i64| decimal_ratio(&BigInt::from(a), &BigInt::from(b), 12);
        assert_eq!(d(1, 2), "0.500000000000");
        assert_eq!(d(0, 7), "0.000000000000");
        assert_eq!(d(2, 3), "0.666666666667");
        assert_eq!(d(1, 3), "0.333333333333");
        assert_eq!(d(5, 5), "1.000000000000");
        assert_eq!(d(1, 1_000_000_000_000), "0.000000000001");
    }

    #[test]
    fn single_ascending_block_never_deranges() {
        for row in density_table(&spec(&[1], &[]), 5).unwrap() {
            assert_eq!(row.ratio, "0.000000000000");
        }
    }

    #[test]
    fn small_examples() {
        let rows = density_table(&spec(&[1, 1], &[]), 4).unwrap();
        assert_eq!(rows[0].ratio, "0.500000000000");
        assert_eq!(rows[0].sizes, vec![1, 1]);
        assert_eq!(rows[3].sizes, vec![4, 4]);
        let rows = density_table(&spec(&[2, 2], &[1, 2]), 1).unwrap();
        assert_eq!((rows[0].derangements.clone(), rows[0].total.clone()), (BigInt::from(3), BigInt::from(6)));
        assert_eq!(rows[0].ratio, "0.500000000000");
        assert!((rows[0].distance_from_inverse_e - (0.5 - (-1f64).exp())).abs() < 1e-12);
    }
}
