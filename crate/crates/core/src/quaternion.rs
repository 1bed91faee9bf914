//! Real quaternions `w + xi + yj + zk`, stored scalar-first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::format::format_real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    w: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self { w: 0.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const ONE: Self = Self { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const I: Self = Self { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
    pub const J: Self = Self { w: 0.0, x: 0.0, y: 1.0, z: 0.0 };
    pub const K: Self = Self { w: 0.0, x: 0.0, y: 0.0, z: 1.0 };

    /// Panics on NaN or infinite components; see [`Quaternion::try_new`].
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self::try_new(w, x, y, z).expect("quaternion components must be finite")
    }

    pub fn try_new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        if [w, x, y, z].iter().all(|c| c.is_finite()) {
            Ok(Self { w: w + 0.0, x: x + 0.0, y: y + 0.0, z: z + 0.0 })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn from_components(c: [f64; 4]) -> Result<Self> {
        Self::try_new(c[0], c[1], c[2], c[3])
    }

    pub fn real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    pub fn w(self) -> f64 {
        self.w
    }

    pub fn x(self) -> f64 {
        self.x
    }

    pub fn y(self) -> f64 {
        self.y
    }

    pub fn z(self) -> f64 {
        self.z
    }

    /// `[w, x, y, z]`
    pub fn components(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    pub fn is_real(self) -> bool {
        self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn dot(self, other: Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Largest absolute component.
    pub fn max_abs(self) -> f64 {
        self.components().iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    pub fn scale(self, s: f64) -> Self {
        self.checked_scale(s).expect("quaternion scaling overflowed")
    }

    pub fn checked_scale(self, s: f64) -> Result<Self> {
        Self::try_new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        Self::try_new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        Self::try_new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }

    /// Hamilton product.
    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let (a, b) = (self, rhs);
        Self::try_new(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )
    }

    /// `q* / |q|²`; zero is not invertible.
    pub fn inverse(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        self.conj().checked_scale(1.0 / self.norm_squared())
    }
}

/// `pq* + qp*` evaluated as a quaternion product.
///
/// The result is always real in exact arithmetic; the imaginary components
/// left over in floating point measure rounding. See [`mixed_sum`].
pub fn mixed_sum_product(p: Quaternion, q: Quaternion) -> Quaternion {
    checked_mixed_sum_product(p, q).expect("mixed product sum overflowed")
}

fn checked_mixed_sum_product(p: Quaternion, q: Quaternion) -> Result<Quaternion> {
    p.checked_mul(q.conj())?.checked_add(q.checked_mul(p.conj())?)
}

/// The real number `pq* + qp* = p*q + q*p = 2(p₀q₀ + p₁q₁ + p₂q₂ + p₃q₃)`.
///
/// Returns the dot-product form. Debug builds also evaluate the product form
/// and check that it is real and agrees.
pub fn mixed_sum(p: Quaternion, q: Quaternion) -> f64 {
    let value = 2.0 * p.dot(q);
    #[cfg(debug_assertions)]
    if let Ok(product) = checked_mixed_sum_product(p, q) {
        let scale = 1.0 + p.norm() * q.norm();
        debug_assert!(
            product.x.abs().max(product.y.abs()).max(product.z.abs()) <= 1e-12 * scale,
            "pq* + qp* has an imaginary part: {product}"
        );
        debug_assert!((product.w - value).abs() <= 1e-12 * scale);
    }
    value
}

impl Default for Quaternion {
    fn default() -> Self {
        Self::ZERO
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("quaternion addition overflowed")
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("quaternion subtraction overflowed")
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("quaternion multiplication overflowed")
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// `a+bi+cj+dk`, every term present and signed.
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_real(self.w))?;
        for (c, unit) in [(self.x, 'i'), (self.y, 'j'), (self.z, 'k')] {
            let sign = if c < 0.0 { '-' } else { '+' };
            write!(f, "{}{}{}", sign, format_real(c.abs()), unit)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion::new(w, x, y, z)
    }

    #[test]
    fn unit_relations() {
        use Quaternion as Q;
        assert_eq!(Q::I * Q::J, Q::K);
        assert_eq!(Q::J * Q::I, -Q::K);
        assert_eq!(Q::J * Q::K, Q::I);
        assert_eq!(Q::K * Q::J, -Q::I);
        assert_eq!(Q::K * Q::I, Q::J);
        assert_eq!(Q::I * Q::K, -Q::J);
        for u in [Q::I, Q::J, Q::K] {
            assert_eq!(u * u, -Q::ONE);
        }
        assert_eq!(Q::I * Q::J * Q::K, -Q::ONE);
        let p = q(1.5, -2.0, 0.25, 3.0);
        assert_eq!(Q::ONE * p, p);
        assert_eq!(p * Q::ONE, p);
    }

    #[test]
    fn conjugation() {
        assert_eq!(q(1.0, 2.0, 3.0, 4.0).conj(), q(1.0, -2.0, -3.0, -4.0));
        assert_eq!(Quaternion::real(5.0).conj(), Quaternion::real(5.0));
        let p = q(0.5, -1.0, 2.0, -3.5);
        assert_eq!(p.conj().conj(), p);
    }

    #[test]
    fn norms() {
        assert_eq!(q(1.0, 1.0, 1.0, 1.0).norm(), 2.0);
        assert_eq!(Quaternion::ZERO.norm(), 0.0);
        assert_eq!(q(3.0, 4.0, 0.0, 0.0).norm(), 5.0);
    }

    #[test]
    fn inverses() {
        assert_eq!(q(1.0, 1.0, 0.0, 0.0).inverse().unwrap(), q(0.5, -0.5, 0.0, 0.0));
        assert_eq!(Quaternion::ONE.inverse().unwrap(), Quaternion::ONE);
        assert_eq!(Quaternion::ZERO.inverse(), Err(Error::NotInvertible));
        let p = q(2.0, -1.0, 0.5, 3.0);
        let r = p.inverse().unwrap();
        for prod in [p * r, r * p] {
            assert!((prod - Quaternion::ONE).max_abs() < 1e-15, "{prod}");
        }
    }

    #[test]
    fn mixed_sums() {
        let p = q(1.0, 2.0, 3.0, 4.0);
        let r = q(5.0, 6.0, 7.0, 8.0);
        assert_eq!(mixed_sum(p, r), 140.0);
        assert_eq!(mixed_sum_product(p, r), Quaternion::real(140.0));
        assert_eq!(mixed_sum(Quaternion::ONE, Quaternion::ONE), 2.0);
        assert_eq!(mixed_sum(Quaternion::I, Quaternion::J), 0.0);
    }

    #[test]
    fn rendering() {
        assert_eq!(q(1.0, -2.0, 0.5, 0.0).to_string(), "1-2i+0.5j+0k");
    }
}
