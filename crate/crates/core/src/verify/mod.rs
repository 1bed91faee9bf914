//! Randomized property suites for the algebraic laws of every type.
//!
//! Each suite draws its instances from a ChaCha stream seeded from the
//! caller's seed, so a fixed `(seed, cases)` pair always produces the same
//! [`SuiteReport`]s. A check counts the cases it saw, the cases that broke
//! the law, and the worst residual observed.

use rand::SeedableRng;

use crate::dual_number::DualNumber;

pub mod gen;
mod scalar;
pub mod tol;
mod vector;
mod dq;

pub use dq::{dual_quaternion_suite, unit_dual_quaternion_suite};
pub use scalar::{dual_abs_suite, dual_algebra_suite, dual_order_suite, no_root_suite, quaternion_suite};
pub use vector::{norm_suite, orthonormal_suite, quaternion_vector_suite, unit_vector_suite, NormSuiteOptions};

use gen::TestRng;

pub const DEFAULT_SEED: u64 = 0x5EED_D0A1_0001;
pub const DEFAULT_CASES: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckStats {
    pub name: &'static str,
    pub cases: u64,
    pub violations: u64,
    pub worst_residual: f64,
}

impl CheckStats {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0, violations: 0, worst_residual: 0.0 }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: Vec<CheckStats>,
    /// Instance counts per generator stratum, in generation order.
    pub strata: Vec<(&'static str, u64)>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        Self { name, checks: Vec::new(), strata: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckStats::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckStats> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn stratum(&self, name: &str) -> u64 {
        self.strata.iter().find(|(n, _)| *n == name).map_or(0, |(_, c)| *c)
    }

    /// Records one case of `name`: `ok` is the verdict, `residual` the
    /// measured deviation.
    fn record(&mut self, name: &'static str, ok: bool, residual: f64) {
        let stats = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => &mut self.checks[i],
            None => {
                self.checks.push(CheckStats::new(name));
                self.checks.last_mut().expect("just pushed")
            }
        };
        stats.cases += 1;
        if !ok {
            stats.violations += 1;
        }
        if residual > stats.worst_residual || residual.is_nan() {
            stats.worst_residual = residual;
        }
    }

    fn record_exact(&mut self, name: &'static str, ok: bool) {
        self.record(name, ok, if ok { 0.0 } else { 1.0 });
    }

    fn count(&mut self, stratum: &'static str) {
        match self.strata.iter_mut().find(|(n, _)| *n == stratum) {
            Some((_, c)) => *c += 1,
            None => self.strata.push((stratum, 1)),
        }
    }
}

/// Scaled difference `|a - b| / max(1, |a|, |b|)`: relative for values
/// above one, absolute below.
pub fn scaled_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}

/// Worst [`scaled_diff`] over both components.
pub fn dual_diff(a: DualNumber, b: DualNumber) -> f64 {
    scaled_diff(a.std_part(), b.std_part()).max(scaled_diff(a.inf_part(), b.inf_part()))
}

/// `lhs ≤ rhs` in the total order, allowing `slack` on the deciding
/// component.
///
/// The exact comparison is tried first. Otherwise the standard parts must
/// agree within `slack` and the infinitesimal part of `lhs` may exceed that
/// of `rhs` by at most `slack`. Returns the verdict and the excess on the
/// deciding component (zero when the exact order holds).
pub fn le_with_slack(lhs: DualNumber, rhs: DualNumber, slack: f64) -> (bool, f64) {
    if lhs <= rhs {
        return (true, 0.0);
    }
    let d_st = lhs.std_part() - rhs.std_part();
    if d_st.abs() > slack {
        return (false, d_st);
    }
    let d_inf = lhs.inf_part() - rhs.inf_part();
    (d_inf <= slack, d_st.max(d_inf).max(0.0))
}

fn suite_rng(seed: u64, index: u64) -> TestRng {
    TestRng::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Runs every suite with `cases` instances each.
pub fn run_all(seed: u64, cases: usize) -> Vec<SuiteReport> {
    vec![
        dual_order_suite(&mut suite_rng(seed, 1), cases),
        dual_algebra_suite(&mut suite_rng(seed, 2), cases),
        dual_abs_suite(&mut suite_rng(seed, 3), cases),
        no_root_suite(),
        quaternion_suite(&mut suite_rng(seed, 4), cases),
        dual_quaternion_suite(&mut suite_rng(seed, 5), cases),
        unit_dual_quaternion_suite(&mut suite_rng(seed, 6), cases, cases),
        quaternion_vector_suite(&mut suite_rng(seed, 7), cases),
        norm_suite(&mut suite_rng(seed, 8), cases, NormSuiteOptions::default()),
        unit_vector_suite(&mut suite_rng(seed, 9), cases),
        orthonormal_suite(&mut suite_rng(seed, 10), cases),
    ]
}

/// Seeds a generator the same way [`run_all`] seeds suite number `index`.
pub fn rng_for(seed: u64, index: u64) -> TestRng {
    suite_rng(seed, index)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: f64, b: f64) -> DualNumber {
        DualNumber::new(a, b)
    }

    #[test]
    fn slack_comparison() {
        assert_eq!(le_with_slack(d(1.0, 5.0), d(2.0, 0.0), 1e-12), (true, 0.0));
        assert!(!le_with_slack(d(2.0, 0.0), d(1.0, 5.0), 1e-12).0);
        // standard parts equal up to rounding: the infinitesimal part decides
        assert!(le_with_slack(d(1.0 + 1e-15, 1.0), d(1.0, 1.0), 1e-12).0);
        assert!(!le_with_slack(d(1.0 + 1e-15, 2.0), d(1.0, 1.0), 1e-12).0);
        assert!(le_with_slack(d(0.0, 1.0 + 1e-13), d(0.0, 1.0), 1e-12).0);
    }

    #[test]
    fn scaled_differences() {
        assert_eq!(scaled_diff(1e-3, 0.0), 1e-3);
        assert_eq!(scaled_diff(200.0, 100.0), 0.5);
    }

    #[test]
    fn small_run_is_deterministic_and_green() {
        let a = run_all(42, 200);
        let b = run_all(42, 200);
        assert_eq!(a, b);
        for suite in &a {
            for check in &suite.checks {
                assert!(check.passed(), "{}::{} {:?}", suite.name, check.name, check);
                assert!(check.cases > 0, "{}::{} never ran", suite.name, check.name);
            }
        }
    }
}
