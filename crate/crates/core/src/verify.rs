//! Exhaustive cross-checking of every counting method and identity on small block
//! systems.

use num_bigint::BigInt;

use crate::blocks::{compositions, descending_sets, BlockSpec};
use crate::counters::{count_recursion, count_sum};
use crate::error::Result;
use crate::lambda::efw_polynomial;
use crate::oracle::{self, exact_div, Limits};
use crate::ornaments::NecklaceCatalog;
use crate::par::{self, Execution};
use crate::series::count_genfunc;

/// Outcome for one `(A, S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecOutcome {
    pub spec: BlockSpec,
    pub count: BigInt,
    /// Names of the checks that ran (exhaustive ones are skipped above their limits).
    pub checks: Vec<&'static str>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub outcomes: Vec<SpecOutcome>,
    /// Failures of per-composition identities (the λ-polynomial).
    pub composition_failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.composition_failures.is_empty() && self.outcomes.iter().all(|o| o.failures.is_empty())
    }

    pub fn failures(&self) -> impl Iterator<Item = &String> {
        self.composition_failures.iter().chain(self.outcomes.iter().flat_map(|o| o.failures.iter()))
    }

    pub fn check_count(&self) -> usize {
        self.outcomes.iter().map(|o| o.checks.len()).sum()
    }
}

struct CompositionResult {
    outcomes: Vec<SpecOutcome>,
    failures: Vec<String>,
}

fn check_composition(sizes: Vec<usize>, limits: &Limits) -> Result<CompositionResult> {
    let n: usize = sizes.iter().sum();
    let k = sizes.len();
    let mut failures = Vec::new();
    let tally = if n <= limits.full_scan {
        Some(oracle::small_cycle_tally_with(&sizes, limits, Execution::Sequential)?)
    } else {
        None
    };
    let catalog = if n <= limits.ornaments { Some(NecklaceCatalog::new(&sizes, limits)?) } else { None };
    let fact = BlockSpec::all_descending(sizes.clone())?.factorial_product();

    let poly = efw_polynomial(&sizes)?;
    let descending_count = count_sum(&BlockSpec::all_descending(sizes.clone())?);
    if !poly.is_constant() {
        failures.push(format!("{sizes:?}: λ-polynomial {poly} is not constant"));
    } else if poly.constant_term() != descending_count {
        failures.push(format!(
            "{sizes:?}: λ-polynomial constant {} != descending count {descending_count}",
            poly.constant_term()
        ));
    }
    if let Some(t) = &tally {
        match exact_div(&t.sum_c(), &fact, "normalized c-weight sum") {
            Ok(v) if v == poly.constant_term() => {}
            Ok(v) => failures.push(format!("{sizes:?}: Σc/∏a! = {v} != λ-constant {}", poly.constant_term())),
            Err(e) => failures.push(format!("{sizes:?}: {e}")),
        }
    }

    let mut outcomes = Vec::new();
    for s in descending_sets(k) {
        let spec = BlockSpec::new(sizes.clone(), s)?;
        let count = count_sum(&spec);
        let mut checks = vec!["sum"];
        let mut bad = Vec::new();
        let mut compare = |name: &'static str, value: Result<BigInt>| {
            checks.push(name);
            match value {
                Ok(v) if v == count => {}
                Ok(v) => bad.push(format!("{spec}: {name} gives {v}, sum gives {count}")),
                Err(e) => bad.push(format!("{spec}: {name}: {e}")),
            }
        };
        compare("recursion", Ok(count_recursion(&spec)));
        compare("series", Ok(count_genfunc(&spec)));
        if n <= limits.enumeration {
            compare("oracle", oracle::count_derangements_oracle(&spec, limits));
        }
        if let Some(c) = &catalog {
            compare("ornaments", Ok(c.count_satisfactory(&spec)));
        }
        if let Some(t) = &tally {
            compare("weighted-sum", exact_div(&t.sum_c_s(&spec), &fact, "normalized c_S-weight sum"));
            compare("thm-e", exact_div(&t.thm_e(&spec), &fact, "E / ∏a!"));
        }
        outcomes.push(SpecOutcome { spec, count, checks, failures: bad });
    }
    Ok(CompositionResult { outcomes, failures })
}

/// Checks every composition of every `n ≤ max_n` into at most `max_k` blocks, and every
/// descending set.
pub fn sweep(max_n: usize, max_k: usize, limits: &Limits, exec: Execution) -> Result<VerifyReport> {
    let all: Vec<Vec<usize>> = (1..=max_n).flat_map(|n| compositions(n, max_k)).collect();
    let results = par::map_collect(exec, all, |a| check_composition(a, limits));
    let mut report = VerifyReport::default();
    for r in results {
        let r = r?;
        report.outcomes.extend(r.outcomes);
        report.composition_failures.extend(r.failures);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacuous_sweep() {
        let r = sweep(0, 3, &Limits::default(), Execution::Sequential).unwrap();
        assert!(r.passed());
        assert!(r.outcomes.is_empty());
    }

    #[test]
    fn two_element_sweep() {
        let r = sweep(2, 1, &Limits::default(), Execution::Sequential).unwrap();
        assert!(r.passed());
        let find = |s: &[usize]| {
            r.outcomes.iter().find(|o| o.spec.sizes() == [2] && o.spec.descending() == s).unwrap().count.clone()
        };
        assert_eq!(find(&[1]), BigInt::from(1));
        assert_eq!(find(&[]), BigInt::from(0));
    }

    #[test]
    fn moderate_sweep_passes_every_check() {
        let r = sweep(6, 3, &Limits::default(), Execution::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert!(r.outcomes.iter().all(|o| o.checks.len() == 7));
    }

    #[test]
    fn limits_skip_exhaustive_checks() {
        let r = sweep(4, 2, &Limits::uniform(2), Execution::Sequential).unwrap();
        assert!(r.passed());
        let big = r.outcomes.iter().find(|o| o.spec.n() == 4).unwrap();
        assert_eq!(big.checks, vec!["sum", "recursion", "series"]);
    }
}
