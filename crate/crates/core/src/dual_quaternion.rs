//! Dual quaternions `q_st + q_I ε` with quaternion parts and a dual-number
//! valued magnitude.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::dual_number::DualNumber;
use crate::error::{Error, Result};
use crate::quaternion::{mixed_sum, Quaternion};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DualQuaternion {
    st: Quaternion,
    inf: Quaternion,
}

/// Residuals of the unit dual quaternion test: `| |q_st| - 1 |` and the
/// absolute mixed sum `|q_st q_I* + q_I q_st*|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitCheck {
    pub is_unit: bool,
    pub norm_residual: f64,
    pub mixed_sum_residual: f64,
}

impl DualQuaternion {
    pub const ZERO: Self = Self { st: Quaternion::ZERO, inf: Quaternion::ZERO };
    pub const ONE: Self = Self { st: Quaternion::ONE, inf: Quaternion::ZERO };

    pub fn new(st: Quaternion, inf: Quaternion) -> Self {
        Self { st, inf }
    }

    /// Embeds a quaternion with zero infinitesimal part.
    pub fn from_quaternion(st: Quaternion) -> Self {
        Self::new(st, Quaternion::ZERO)
    }

    /// Embeds `a + bε` as a dual quaternion with real parts. `ε` commutes
    /// with quaternions, so multiplying by the result scales a dual
    /// quaternion by the dual number.
    pub fn from_dual_number(d: DualNumber) -> Self {
        Self::new(Quaternion::real(d.std_part()), Quaternion::real(d.inf_part()))
    }

    pub fn std_part(self) -> Quaternion {
        self.st
    }

    pub fn inf_part(self) -> Quaternion {
        self.inf
    }

    pub fn is_appreciable(self) -> bool {
        !self.st.is_zero()
    }

    pub fn is_zero(self) -> bool {
        self.st.is_zero() && self.inf.is_zero()
    }

    /// Largest absolute value among the eight components.
    pub fn max_abs(self) -> f64 {
        self.st.max_abs().max(self.inf.max_abs())
    }

    pub fn conj(self) -> Self {
        Self::new(self.st.conj(), self.inf.conj())
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        Ok(Self::new(self.st.checked_add(rhs.st)?, self.inf.checked_add(rhs.inf)?))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        Ok(Self::new(self.st.checked_sub(rhs.st)?, self.inf.checked_sub(rhs.inf)?))
    }

    /// `(p_st q_st) + (p_I q_st + p_st q_I)ε`
    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let st = self.st.checked_mul(rhs.st)?;
        let inf = self
            .inf
            .checked_mul(rhs.st)?
            .checked_add(self.st.checked_mul(rhs.inf)?)?;
        Ok(Self::new(st, inf))
    }

    /// `q⁻¹ = q_st⁻¹ − q_st⁻¹ q_I q_st⁻¹ ε`, defined iff `q` is appreciable.
    pub fn inverse(self) -> Result<Self> {
        if !self.is_appreciable() {
            return Err(Error::NotInvertible);
        }
        let st_inv = self.st.inverse()?;
        let inf = st_inv.checked_mul(self.inf)?.checked_mul(st_inv)?;
        Ok(Self::new(st_inv, -inf))
    }

    /// The mixed sum `q_st q_I* + q_I q_st*` as a real number.
    pub fn mixed_sum(self) -> f64 {
        mixed_sum(self.st, self.inf)
    }

    /// `|q| = |q_st| + (q_st q_I* + q_I q_st*)/(2|q_st|) ε` when `q` is
    /// appreciable, `|q_I| ε` otherwise.
    pub fn magnitude(self) -> DualNumber {
        if self.is_appreciable() {
            let norm = self.st.norm();
            DualNumber::new(norm, self.mixed_sum() / (2.0 * norm))
        } else {
            DualNumber::new(0.0, self.inf.norm())
        }
    }

    /// `|q| = √(qq*)` for appreciable `q`, computed through the quaternion
    /// products and the dual square root. Agrees with
    /// [`DualQuaternion::magnitude`] up to rounding.
    pub fn magnitude_via_sqrt(self) -> Result<DualNumber> {
        if !self.is_appreciable() {
            return Err(Error::NotAppreciable);
        }
        let prod = self.checked_mul(self.conj())?;
        let scale = 1.0 + self.st.norm() * (self.st.norm() + self.inf.norm());
        debug_assert!(
            imaginary_max(prod.st).max(imaginary_max(prod.inf)) <= 1e-12 * scale,
            "qq* is not a dual number: {prod}"
        );
        DualNumber::try_new(prod.st.w(), prod.inf.w())?.sqrt()
    }

    /// Unit test `|q_st| = 1` and `q_st q_I* + q_I q_st* = 0`, each residual
    /// compared against `tol`.
    pub fn unit_check(self, tol: f64) -> UnitCheck {
        let norm_residual = (self.st.norm() - 1.0).abs();
        let mixed_sum_residual = self.mixed_sum().abs();
        UnitCheck {
            is_unit: norm_residual <= tol && mixed_sum_residual <= tol,
            norm_residual,
            mixed_sum_residual,
        }
    }

    pub fn is_unit(self, tol: f64) -> bool {
        self.unit_check(tol).is_unit
    }
}

fn imaginary_max(q: Quaternion) -> f64 {
    q.x().abs().max(q.y().abs()).max(q.z().abs())
}

impl From<Quaternion> for DualQuaternion {
    fn from(q: Quaternion) -> Self {
        Self::from_quaternion(q)
    }
}

impl From<DualNumber> for DualQuaternion {
    fn from(d: DualNumber) -> Self {
        Self::from_dual_number(d)
    }
}

impl Add for DualQuaternion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("dual quaternion addition overflowed")
    }
}

impl Sub for DualQuaternion {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("dual quaternion subtraction overflowed")
    }
}

impl Mul for DualQuaternion {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("dual quaternion multiplication overflowed")
    }
}

impl Neg for DualQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.st, -self.inf)
    }
}

impl std::iter::Sum for DualQuaternion {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

/// `(std) + (inf)ε`; `{:#}` uses ASCII `e`.
impl fmt::Display for DualQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = if f.alternate() { "e" } else { "ε" };
        write!(f, "({}) + ({}){}", self.st, self.inf, unit)
    }
}
