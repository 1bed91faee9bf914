//! The intermediate value property fails on the dual numbers:
//! `f(x) = x² − ε` changes sign on `[0, 1]` but has no root there.

use std::cmp::Ordering;

use super::{DualInterval, DualNumber};

/// Solution set of `x² = c` over the dual numbers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SquareRoots {
    None,
    /// `c` positive appreciable: exactly `±√c`.
    Pair(DualNumber, DualNumber),
    /// `c = 0`: every pure infinitesimal `aε` squares to zero.
    Infinitesimals,
}

/// Solves `x² = c`.
///
/// Writing `x = a + bε`, the equation is `a² = c.st` and `2ab = c.inf`. A
/// negative standard part has no solution. A zero standard part forces
/// `a = 0`, after which `2ab = 0`, so only `c = 0` is reachable.
pub fn square_roots(c: DualNumber) -> SquareRoots {
    if c.std_part() > 0.0 {
        let r = c.sqrt().expect("positive appreciable radicand");
        SquareRoots::Pair(r, -r)
    } else if c.is_zero() {
        SquareRoots::Infinitesimals
    } else {
        SquareRoots::None
    }
}

impl SquareRoots {
    /// Whether some solution lies in `iv`.
    pub fn any_in(&self, iv: &DualInterval) -> bool {
        match *self {
            SquareRoots::None => false,
            SquareRoots::Pair(a, b) => iv.contains(a) || iv.contains(b),
            SquareRoots::Infinitesimals => infinitesimal_line_meets(iv),
        }
    }
}

// The set {aε : a ∈ ℝ} meets `iv` iff its intersection with the bounds'
// infinitesimal coordinates is nonempty. Bounds with a nonzero standard part
// either admit the whole line or none of it.
fn infinitesimal_line_meets(iv: &DualInterval) -> bool {
    use super::IntervalBound::*;
    let lo = match iv.lower() {
        None => f64::NEG_INFINITY,
        Some(b) if b.value().std_part() < 0.0 => f64::NEG_INFINITY,
        Some(b) if b.value().std_part() > 0.0 => return false,
        Some(Closed(v)) => v.inf_part(),
        Some(Open(v)) => v.inf_part().next_up(),
    };
    let hi = match iv.upper() {
        None => f64::INFINITY,
        Some(b) if b.value().std_part() > 0.0 => f64::INFINITY,
        Some(b) if b.value().std_part() < 0.0 => return false,
        Some(Closed(v)) => v.inf_part(),
        Some(Open(v)) => v.inf_part().next_down(),
    };
    lo <= hi
}

/// Outcome of evaluating `f(x) = x² − ε` on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoRootWitness {
    pub f_at_zero: DualNumber,
    pub sign_at_zero: Ordering,
    pub f_at_one: DualNumber,
    pub sign_at_one: Ordering,
    pub root_exists: bool,
}

pub fn no_root_witness() -> NoRootWitness {
    let f = |x: DualNumber| x.pow(2) - DualNumber::EPSILON;
    let unit = DualInterval::closed(DualNumber::ZERO, DualNumber::ONE).expect("0 ≤ 1");
    let f_at_zero = f(DualNumber::ZERO);
    let f_at_one = f(DualNumber::ONE);
    NoRootWitness {
        f_at_zero,
        sign_at_zero: f_at_zero.cmp(&DualNumber::ZERO),
        f_at_one,
        sign_at_one: f_at_one.cmp(&DualNumber::ZERO),
        root_exists: square_roots(DualNumber::EPSILON).any_in(&unit),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: f64, b: f64) -> DualNumber {
        DualNumber::new(a, b)
    }

    #[test]
    fn witness_facts() {
        let w = no_root_witness();
        assert_eq!(w.f_at_zero, d(0.0, -1.0));
        assert_eq!(w.sign_at_zero, Ordering::Less);
        assert_eq!(w.f_at_one, d(1.0, -1.0));
        assert_eq!(w.sign_at_one, Ordering::Greater);
        assert!(!w.root_exists);
    }

    #[test]
    fn square_root_sets() {
        assert_eq!(square_roots(d(0.0, 1.0)), SquareRoots::None);
        assert_eq!(square_roots(d(-1.0, 0.0)), SquareRoots::None);
        assert_eq!(square_roots(DualNumber::ZERO), SquareRoots::Infinitesimals);
        assert_eq!(
            square_roots(d(4.0, 4.0)),
            SquareRoots::Pair(d(2.0, 1.0), d(-2.0, -1.0))
        );
    }

    // Brute force over a grid of x = a + bε: nothing squares to ε.
    #[test]
    fn grid_search_finds_no_square_root_of_epsilon() {
        for i in -40..=40 {
            for j in -40..=40 {
                let x = d(i as f64 / 8.0, j as f64 / 8.0);
                assert_ne!(x * x, DualNumber::EPSILON, "x = {x}");
            }
        }
    }

    #[test]
    fn infinitesimal_line_membership() {
        let unit = DualInterval::closed(DualNumber::ZERO, DualNumber::ONE).unwrap();
        assert!(SquareRoots::Infinitesimals.any_in(&unit));
        let positive = DualInterval::closed(d(0.5, 0.0), DualNumber::ONE).unwrap();
        assert!(!SquareRoots::Infinitesimals.any_in(&positive));
        let eps_band = DualInterval::open(d(0.0, 1.0), d(0.0, 2.0)).unwrap();
        assert!(SquareRoots::Infinitesimals.any_in(&eps_band));
        let neg = DualInterval::less_than(DualNumber::ZERO);
        assert!(SquareRoots::Infinitesimals.any_in(&neg));
        assert!(SquareRoots::Pair(d(2.0, 1.0), d(-2.0, -1.0))
            .any_in(&DualInterval::at_least(DualNumber::ONE)));
    }
}
