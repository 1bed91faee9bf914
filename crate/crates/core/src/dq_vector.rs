//! Dual quaternion vectors, their inner product and their 1-, ∞- and
//! 2-norms.
//!
//! All sums run left to right over the entries so results are reproducible
//! bit for bit.

use std::fmt;

use crate::dual_number::DualNumber;
use crate::dual_quaternion::DualQuaternion;
use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// A nonempty vector of dual quaternions `x = x_st + x_I ε`.
#[derive(Debug, Clone, PartialEq)]
pub struct DQVector {
    entries: Vec<DualQuaternion>,
}

/// The real `4n`-vector of a quaternion vector, entry-major with components
/// in `(w, x, y, z)` order.
#[derive(Debug, Clone, PartialEq)]
pub struct RealEmbedding {
    values: Vec<f64>,
}

impl RealEmbedding {
    pub fn new(x: &[Quaternion]) -> Self {
        Self { values: x.iter().flat_map(|q| q.components()).collect() }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn dot(&self, other: &Self) -> f64 {
        assert_eq!(self.values.len(), other.values.len(), "embedding lengths differ");
        self.values.iter().zip(&other.values).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }
}

/// Flattens a quaternion vector into its real embedding.
pub fn vec_embed_real(x: &[Quaternion]) -> RealEmbedding {
    RealEmbedding::new(x)
}

/// `√(Σ |x_i|²)` over quaternion magnitudes.
pub fn quaternion_vector_norm(x: &[Quaternion]) -> f64 {
    x.iter().map(|q| q.norm().powi(2)).sum::<f64>().sqrt()
}

/// Residuals of the unit-vector test, which checks both `x*x = 1` and
/// `‖x‖₂ = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVectorCheck {
    pub is_unit: bool,
    /// Largest componentwise deviation of `x*x` from one.
    pub inner_residual: f64,
    /// Largest componentwise deviation of `‖x‖₂` from one.
    pub norm_residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrthonormalCheck {
    pub is_orthonormal: bool,
    /// `residuals[i][j]` is the largest componentwise deviation of
    /// `x⁽ⁱ⁾* x⁽ʲ⁾` from the Kronecker delta.
    pub residuals: Vec<Vec<f64>>,
}

impl DQVector {
    pub fn new(entries: Vec<DualQuaternion>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyVector);
        }
        Ok(Self { entries })
    }

    /// Builds `x_st + x_I ε` from its two quaternion vectors.
    pub fn from_parts(st: &[Quaternion], inf: &[Quaternion]) -> Result<Self> {
        if st.len() != inf.len() {
            return Err(Error::LengthMismatch { expected: st.len(), found: inf.len() });
        }
        Self::new(st.iter().zip(inf).map(|(&s, &i)| DualQuaternion::new(s, i)).collect())
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![DualQuaternion::ZERO; n])
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn unit(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::LengthMismatch { expected: n, found: i + 1 });
        }
        let mut entries = vec![DualQuaternion::ZERO; n];
        entries[i] = DualQuaternion::ONE;
        Self::new(entries)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[DualQuaternion] {
        &self.entries
    }

    pub fn std_part(&self) -> Vec<Quaternion> {
        self.entries.iter().map(|e| e.std_part()).collect()
    }

    pub fn inf_part(&self) -> Vec<Quaternion> {
        self.entries.iter().map(|e| e.inf_part()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// True when every entry has a zero standard part.
    pub fn is_infinitesimal(&self) -> bool {
        self.entries.iter().all(|e| !e.is_appreciable())
    }

    /// `x*y = Σ x_i* y_i`, conjugating the left argument.
    pub fn inner_product(&self, other: &Self) -> Result<DualQuaternion> {
        self.check_len(other)?;
        self.entries
            .iter()
            .zip(&other.entries)
            .try_fold(DualQuaternion::ZERO, |acc, (x, y)| acc.checked_add(x.conj().checked_mul(*y)?))
    }

    /// Entrywise left multiplication `q x`.
    pub fn scalar_mul(&self, q: DualQuaternion) -> Result<Self> {
        let entries = self.entries.iter().map(|x| q.checked_mul(*x)).collect::<Result<_>>()?;
        Ok(Self { entries })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x.checked_add(*y))
            .collect::<Result<_>>()?;
        Ok(Self { entries })
    }

    fn magnitudes(&self) -> impl Iterator<Item = DualNumber> + '_ {
        self.entries.iter().map(|e| e.magnitude())
    }

    /// `‖x‖₁ = Σ |x_i|`
    pub fn norm1(&self) -> DualNumber {
        self.magnitudes().sum()
    }

    /// `‖x‖∞ = max |x_i|` under the total order.
    pub fn norm_inf(&self) -> DualNumber {
        self.norm_inf_with_index().0
    }

    /// The ∞-norm together with the lowest index attaining it.
    pub fn norm_inf_with_index(&self) -> (DualNumber, usize) {
        let mut best = (DualNumber::ZERO, 0);
        for (i, m) in self.magnitudes().enumerate() {
            if i == 0 || m > best.0 {
                best = (m, i);
            }
        }
        best
    }

    /// The 2-norm.
    ///
    /// With at least one appreciable entry this is `√(Σ |x_i|²)`, where each
    /// square is a dual square and vanishes for infinitesimal entries. When
    /// every entry is infinitesimal it is `√(Σ |(x_i)_I|²) ε`.
    pub fn norm2(&self) -> DualNumber {
        if self.is_infinitesimal() {
            let sum: f64 = self.entries.iter().map(|e| e.inf_part().norm_squared()).sum();
            return DualNumber::new(0.0, sum.sqrt());
        }
        let radicand: DualNumber = self.magnitudes().map(|m| m.pow(2)).sum();
        radicand.sqrt().expect("radicand is positive and appreciable")
    }

    /// `‖x_st‖₂ + ((x_st^R)ᵀ x_I^R / ‖x_st‖₂) ε`, valid when `x_st ≠ 0`.
    pub fn norm2_closed_form(&self) -> Result<DualNumber> {
        if self.is_infinitesimal() {
            return Err(Error::NotAppreciable);
        }
        let st = RealEmbedding::new(&self.std_part());
        let inf = RealEmbedding::new(&self.inf_part());
        let norm = st.norm();
        DualNumber::try_new(norm, st.dot(&inf) / norm)
    }

    /// Upper bound `‖x_st‖₂ + ‖x_I‖₂ ε` on the 2-norm.
    pub fn norm2_bound(&self) -> DualNumber {
        DualNumber::new(
            quaternion_vector_norm(&self.std_part()),
            quaternion_vector_norm(&self.inf_part()),
        )
    }

    pub fn unit_check(&self, tol: f64) -> Result<UnitVectorCheck> {
        let gram = self.inner_product(self)?;
        let inner_residual = gram.checked_sub(DualQuaternion::ONE)?.max_abs();
        let norm = self.norm2();
        let norm_residual = (norm.std_part() - 1.0).abs().max(norm.inf_part().abs());
        Ok(UnitVectorCheck {
            is_unit: inner_residual <= tol && norm_residual <= tol,
            inner_residual,
            norm_residual,
        })
    }

    pub fn is_unit(&self, tol: f64) -> Result<bool> {
        Ok(self.unit_check(tol)?.is_unit)
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.len(), found: other.len() })
        }
    }
}

/// Checks `x⁽ⁱ⁾* x⁽ʲ⁾ = δᵢⱼ` on all eight components for `n` vectors of
/// length `n`.
pub fn orthonormal_check(xs: &[DQVector], tol: f64) -> Result<OrthonormalCheck> {
    let n = xs.len();
    if n == 0 {
        return Err(Error::EmptyVector);
    }
    if let Some(bad) = xs.iter().find(|x| x.len() != n) {
        return Err(Error::LengthMismatch { expected: n, found: bad.len() });
    }
    let mut residuals = vec![vec![0.0; n]; n];
    for (i, xi) in xs.iter().enumerate() {
        for (j, xj) in xs.iter().enumerate() {
            let delta = if i == j { DualQuaternion::ONE } else { DualQuaternion::ZERO };
            residuals[i][j] = xi.inner_product(xj)?.checked_sub(delta)?.max_abs();
        }
    }
    let is_orthonormal = residuals.iter().flatten().all(|&r| r <= tol);
    Ok(OrthonormalCheck { is_orthonormal, residuals })
}

pub fn is_orthonormal_basis(xs: &[DQVector], tol: f64) -> Result<bool> {
    Ok(orthonormal_check(xs, tol)?.is_orthonormal)
}

impl fmt::Display for DQVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            fmt::Display::fmt(e, f)?;
        }
        f.write_str("]")
    }
}
