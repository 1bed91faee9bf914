//! Random instance generators. Components are uniform on `[-RANGE, RANGE]`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::dq_vector::DQVector;
use crate::dual_number::DualNumber;
use crate::dual_quaternion::DualQuaternion;
use crate::quaternion::Quaternion;

pub const RANGE: f64 = 10.0;

/// Share of dual numbers whose standard part is forced to zero.
pub const ZERO_STD_RATE: f64 = 0.2;

pub type TestRng = ChaCha8Rng;

pub fn real(rng: &mut TestRng) -> f64 {
    rng.random_range(-RANGE..=RANGE)
}

pub fn dual(rng: &mut TestRng) -> DualNumber {
    let st = if rng.random_bool(ZERO_STD_RATE) { 0.0 } else { real(rng) };
    DualNumber::new(st, real(rng))
}

pub fn quaternion(rng: &mut TestRng) -> Quaternion {
    Quaternion::new(real(rng), real(rng), real(rng), real(rng))
}

/// A quaternion of norm one.
pub fn unit_quaternion(rng: &mut TestRng) -> Quaternion {
    loop {
        let q = quaternion(rng);
        let n = q.norm();
        if n > 1e-3 {
            return q.scale(1.0 / n);
        }
    }
}

pub fn imaginary_quaternion(rng: &mut TestRng) -> Quaternion {
    Quaternion::new(0.0, real(rng), real(rng), real(rng))
}

pub fn dual_quaternion(rng: &mut TestRng, appreciable: bool) -> DualQuaternion {
    let st = if appreciable { quaternion(rng) } else { Quaternion::ZERO };
    DualQuaternion::new(st, quaternion(rng))
}

/// A unit dual quaternion: unit standard part, infinitesimal part with the
/// component along the standard part removed so the mixed sum vanishes.
pub fn unit_dual_quaternion(rng: &mut TestRng) -> DualQuaternion {
    let st = unit_quaternion(rng);
    let raw = quaternion(rng);
    DualQuaternion::new(st, raw - st.scale(st.dot(raw)))
}

/// Unit dual quaternion `q_st + (v q_st)ε` with `v` purely imaginary.
pub fn unit_dual_quaternion_from_twist(rng: &mut TestRng) -> DualQuaternion {
    let st = unit_quaternion(rng);
    DualQuaternion::new(st, imaginary_quaternion(rng) * st)
}

/// How the standard parts of a generated vector are populated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorKind {
    /// Every entry infinitesimal.
    Infinitesimal,
    /// Roughly half the entries infinitesimal, at least one appreciable.
    Mixed,
    /// Every entry appreciable.
    Appreciable,
}

pub fn vector_len(rng: &mut TestRng) -> usize {
    rng.random_range(1..=8)
}

pub fn vector(rng: &mut TestRng, n: usize, kind: VectorKind) -> DQVector {
    let mut st: Vec<Quaternion> = (0..n)
        .map(|_| match kind {
            VectorKind::Infinitesimal => Quaternion::ZERO,
            VectorKind::Appreciable => quaternion(rng),
            VectorKind::Mixed => {
                if rng.random_bool(0.5) {
                    quaternion(rng)
                } else {
                    Quaternion::ZERO
                }
            }
        })
        .collect();
    if kind == VectorKind::Mixed && st.iter().all(|q| q.is_zero()) {
        let i = rng.random_range(0..n);
        st[i] = quaternion(rng);
    }
    let inf: Vec<Quaternion> = (0..n).map(|_| quaternion(rng)).collect();
    DQVector::from_parts(&st, &inf).expect("parts have equal length")
}

/// A vector with the given standard part and a random infinitesimal part.
pub fn vector_with_std(rng: &mut TestRng, st: &[Quaternion]) -> DQVector {
    let inf: Vec<Quaternion> = st.iter().map(|_| quaternion(rng)).collect();
    DQVector::from_parts(st, &inf).expect("parts have equal length")
}
