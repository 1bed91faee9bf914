//! Dual numbers `a + bε` with `ε² = 0`.
//!
//! The standard part `a` and infinitesimal part `b` are finite `f64`s. Dual
//! numbers are totally ordered lexicographically, which makes them usable as
//! the codomain of magnitudes and norms: `q ≥ 0` iff `q.st > 0`, or
//! `q.st = 0` and `q.inf ≥ 0`.
//!
//! Appreciability (`st ≠ 0`) is an exact test. Every constructor rejects
//! non-finite components and maps `-0.0` to `0.0`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::format::format_real;

mod interval;
mod witness;

pub use interval::{DualInterval, IntervalBound};
pub use witness::{no_root_witness, square_roots, NoRootWitness, SquareRoots};

/// Sign of a real number as `-1`, `0` or `1`.
pub fn sgn(u: f64) -> i8 {
    if u > 0.0 {
        1
    } else if u < 0.0 {
        -1
    } else {
        0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualNumber {
    st: f64,
    inf: f64,
}

impl DualNumber {
    pub const ZERO: Self = Self { st: 0.0, inf: 0.0 };
    pub const ONE: Self = Self { st: 1.0, inf: 0.0 };
    /// The infinitesimal unit `ε`.
    pub const EPSILON: Self = Self { st: 0.0, inf: 1.0 };

    /// Builds `st + inf·ε`.
    ///
    /// Panics if either part is NaN or infinite; see [`DualNumber::try_new`].
    pub fn new(st: f64, inf: f64) -> Self {
        Self::try_new(st, inf).expect("dual number components must be finite")
    }

    pub fn try_new(st: f64, inf: f64) -> Result<Self> {
        if st.is_finite() && inf.is_finite() {
            // adding +0.0 turns -0.0 into +0.0 and leaves everything else alone
            Ok(Self { st: st + 0.0, inf: inf + 0.0 })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn real(st: f64) -> Self {
        Self::new(st, 0.0)
    }

    pub fn infinitesimal(inf: f64) -> Self {
        Self::new(0.0, inf)
    }

    pub fn std_part(self) -> f64 {
        self.st
    }

    pub fn inf_part(self) -> f64 {
        self.inf
    }

    pub fn is_appreciable(self) -> bool {
        self.st != 0.0
    }

    pub fn is_infinitesimal(self) -> bool {
        self.st == 0.0
    }

    pub fn is_zero(self) -> bool {
        self.st == 0.0 && self.inf == 0.0
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        Self::try_new(self.st + rhs.st, self.inf + rhs.inf)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        Self::try_new(self.st - rhs.st, self.inf - rhs.inf)
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        Self::try_new(self.st * rhs.st, self.st * rhs.inf + self.inf * rhs.st)
    }

    /// `q^k = st^k + k·st^(k-1)·inf·ε`. `k = 0` gives one.
    pub fn checked_pow(self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(Self::ONE);
        }
        let lead = self.st.powi(k as i32 - 1);
        Self::try_new(lead * self.st, k as f64 * lead * self.inf)
    }

    pub fn pow(self, k: u32) -> Self {
        self.checked_pow(k).expect("dual power overflowed")
    }

    /// Multiplies both parts by a real scalar.
    pub fn scale(self, s: f64) -> Self {
        Self::try_new(self.st * s, self.inf * s).expect("dual scaling overflowed")
    }

    /// `q⁻¹ = 1/st - (inf/st²)ε`, defined for appreciable `q` only.
    pub fn inverse(self) -> Result<Self> {
        if !self.is_appreciable() {
            return Err(Error::NotInvertible);
        }
        let r = 1.0 / self.st;
        Self::try_new(r, -self.inf * r * r)
    }

    /// Square root of a nonnegative dual number.
    ///
    /// Positive appreciable values use `√st + inf/(2√st)·ε` and zero maps to
    /// zero. A positive infinitesimal `aε` has no dual square root because
    /// `(x + yε)² = x² + 2xyε` forces `x = 0` and then the `ε` part vanishes.
    pub fn sqrt(self) -> Result<Self> {
        if self < Self::ZERO {
            return Err(Error::NegativeArgument);
        }
        if self.is_zero() {
            return Ok(Self::ZERO);
        }
        if self.is_infinitesimal() {
            return Err(Error::NotRepresentable);
        }
        let root = self.st.sqrt();
        Self::try_new(root, self.inf / (2.0 * root))
    }

    /// `|q| = |st| + sgn(st)·inf·ε` for appreciable `q`, `|inf|·ε` otherwise.
    pub fn abs(self) -> Self {
        if self.is_appreciable() {
            Self::new(self.st.abs(), f64::from(sgn(self.st)) * self.inf)
        } else {
            Self::new(0.0, self.inf.abs())
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl Default for DualNumber {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<f64> for DualNumber {
    fn from(st: f64) -> Self {
        Self::real(st)
    }
}

// Components are never NaN, so the lexicographic comparison below is total.
impl Eq for DualNumber {}

impl Ord for DualNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.st
            .total_cmp(&other.st)
            .then_with(|| self.inf.total_cmp(&other.inf))
    }
}

impl PartialOrd for DualNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for DualNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("dual addition overflowed")
    }
}

impl Sub for DualNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("dual subtraction overflowed")
    }
}

impl Mul for DualNumber {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("dual multiplication overflowed")
    }
}

impl Neg for DualNumber {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.st, -self.inf)
    }
}

impl std::iter::Sum for DualNumber {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

/// Renders `a+bε` (or `a-bε`). The alternate flag `{:#}` writes ASCII `e`
/// instead of `ε`.
impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = if f.alternate() { "e" } else { "ε" };
        let sign = if self.inf < 0.0 { '-' } else { '+' };
        write!(
            f,
            "{}{}{}{}",
            format_real(self.st),
            sign,
            format_real(self.inf.abs()),
            unit
        )
    }
}
