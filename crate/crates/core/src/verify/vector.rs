use rand::seq::SliceRandom;
use rand::Rng;

use super::gen::{self, TestRng, VectorKind};
use super::tol::{CLOSED_FORM_REL, ORDER_SLACK, PRODUCT_REL, TIGHT, UNIT_TOL};
use super::{dual_diff, le_with_slack, scaled_diff, SuiteReport};
use crate::dq_vector::{orthonormal_check, quaternion_vector_norm, vec_embed_real, DQVector};
use crate::dual_number::DualNumber;
use crate::dual_quaternion::DualQuaternion;
use crate::quaternion::Quaternion;

/// Inner products and the real embedding of quaternion vectors.
pub fn quaternion_vector_suite(rng: &mut TestRng, cases: usize) -> SuiteReport {
    let mut r = SuiteReport::new("quaternion_vector");
    for _ in 0..cases {
        let n = gen::vector_len(rng);
        let xs: Vec<Quaternion> = (0..n).map(|_| gen::quaternion(rng)).collect();
        let ys: Vec<Quaternion> = (0..n).map(|_| gen::quaternion(rng)).collect();
        let zero = vec![Quaternion::ZERO; n];
        let x = DQVector::from_parts(&xs, &zero).expect("equal lengths");
        let y = DQVector::from_parts(&ys, &zero).expect("equal lengths");

        let nx = quaternion_vector_norm(&xs);
        let ny = quaternion_vector_norm(&ys);
        let sym = (x.inner_product(&y).expect("equal lengths") + y.inner_product(&x).expect("equal lengths"))
            .std_part();
        let scale = 1.0 + nx * ny;

        let imag = sym.x().abs().max(sym.y().abs()).max(sym.z().abs()) / scale;
        r.record("symmetric_inner_product_real", imag <= TIGHT, imag);

        let dot2 = 2.0 * vec_embed_real(&xs).dot(&vec_embed_real(&ys));
        let res = (sym.w() - dot2).abs() / scale;
        r.record("symmetric_inner_product_is_twice_dot", res <= TIGHT, res);

        let excess = (sym.w() - 2.0 * nx * ny).max(0.0) / scale;
        r.record("cauchy_schwarz", excess <= TIGHT, excess);

        let res = scaled_diff(vec_embed_real(&xs).norm(), nx);
        r.record("embedding_isometry", res <= TIGHT, res);
        r.record_exact("embedding_length", vec_embed_real(&xs).values().len() == 4 * n);
    }
    r
}

fn norms(x: &DQVector) -> [DualNumber; 3] {
    [x.norm1(), x.norm_inf(), x.norm2()]
}

const NONNEG: [&str; 3] = ["norm1_nonnegative", "norm_inf_nonnegative", "norm2_nonnegative"];
const ZERO_IFF: [&str; 3] = ["norm1_zero_iff_zero", "norm_inf_zero_iff_zero", "norm2_zero_iff_zero"];
const HOMOGENEOUS: [&str; 3] = ["norm1_homogeneous", "norm_inf_homogeneous", "norm2_homogeneous"];
const TRIANGLE: [&str; 3] = ["norm1_triangle", "norm_inf_triangle", "norm2_triangle"];

/// Instance counts of the norm suite; see [`norm_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NormSuiteOptions {
    /// Generate a zero vector every `zero_every` cases (0 disables).
    pub zero_every: usize,
}

impl NormSuiteOptions {
    fn zero_every(self) -> usize {
        if self.zero_every == 0 {
            97
        } else {
            self.zero_every
        }
    }
}

fn record_le(r: &mut SuiteReport, name: &'static str, lhs: DualNumber, rhs: DualNumber) {
    let (ok, excess) = le_with_slack(lhs, rhs, ORDER_SLACK);
    r.record(name, ok, excess);
}

fn check_closed_form_and_chain(r: &mut SuiteReport, x: &DQVector) {
    let [n1, ninf, n2] = norms(x);
    record_le(r, "chain_inf_le_two", ninf, n2);
    record_le(r, "chain_two_le_one", n2, n1);
    if let Ok(closed) = x.norm2_closed_form() {
        let res = dual_diff(closed, n2);
        r.record("closed_form_agrees", res <= CLOSED_FORM_REL, res);
        record_le(r, "closed_form_bound", n2, x.norm2_bound());
    } else {
        r.record_exact("closed_form_needs_appreciable", x.is_infinitesimal());
    }
}

/// The triangle inequality subcases, by which standard parts vanish.
fn triangle_pair(rng: &mut TestRng, r: &mut SuiteReport, case: usize) -> (&'static str, DQVector, DQVector) {
    let n = gen::vector_len(rng);
    match case {
        0 => (
            "triangle_both_infinitesimal",
            gen::vector(rng, n, VectorKind::Infinitesimal),
            gen::vector(rng, n, VectorKind::Infinitesimal),
        ),
        1 => (
            "triangle_x_infinitesimal",
            gen::vector(rng, n, VectorKind::Infinitesimal),
            gen::vector(rng, n, VectorKind::Mixed),
        ),
        2 => (
            "triangle_y_infinitesimal",
            gen::vector(rng, n, VectorKind::Mixed),
            gen::vector(rng, n, VectorKind::Infinitesimal),
        ),
        3 => {
            let x = gen::vector(rng, n, VectorKind::Mixed);
            let pick = rng.random_range(0..3);
            let t = [0.5, 1.0, 2.0][pick];
            r.count(["parallel_t_0.5", "parallel_t_1", "parallel_t_2"][pick]);
            let st: Vec<Quaternion> = x.std_part().iter().map(|q| q.scale(t)).collect();
            ("triangle_parallel", x, gen::vector_with_std(rng, &st))
        }
        _ => {
            let kinds = [VectorKind::Infinitesimal, VectorKind::Mixed, VectorKind::Appreciable];
            let kx = kinds[rng.random_range(0..3)];
            let ky = kinds[rng.random_range(0..3)];
            ("triangle_general", gen::vector(rng, n, kx), gen::vector(rng, n, ky))
        }
    }
}

/// Norm axioms for the 1-, ∞- and 2-norms, the closed form of the 2-norm,
/// and the ordering `‖x‖∞ ≤ ‖x‖₂ ≤ ‖x‖₁`.
pub fn norm_suite(rng: &mut TestRng, cases: usize, opts: NormSuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("dq_vector_norms");
    for i in 0..cases {
        let n = gen::vector_len(rng);
        let (label, x) = if i % opts.zero_every() == 0 {
            ("zero", DQVector::zeros(n).expect("n ≥ 1"))
        } else {
            match i % 3 {
                0 => ("infinitesimal", gen::vector(rng, n, VectorKind::Infinitesimal)),
                1 => ("mixed", gen::vector(rng, n, VectorKind::Mixed)),
                _ => ("appreciable", gen::vector(rng, n, VectorKind::Appreciable)),
            }
        };
        r.count(label);

        let vx = norms(&x);
        for k in 0..3 {
            r.record_exact(NONNEG[k], vx[k] >= DualNumber::ZERO);
            r.record_exact(ZERO_IFF[k], vx[k].is_zero() == x.is_zero());
        }

        for e in x.entries().iter().filter(|e| !e.is_appreciable()) {
            r.record_exact("infinitesimal_square_vanishes", e.magnitude().pow(2).is_zero());
        }

        let (q_label, q) = match i % 3 {
            0 => ("scalar_appreciable", gen::dual_quaternion(rng, true)),
            1 => ("scalar_infinitesimal", gen::dual_quaternion(rng, false)),
            _ => ("scalar_unit", gen::unit_dual_quaternion(rng)),
        };
        r.count(q_label);
        let qx = x.scalar_mul(q).expect("finite");
        let mq = q.magnitude();
        let vqx = norms(&qx);
        for k in 0..3 {
            let res = dual_diff(vqx[k], mq * vx[k]);
            r.record(HOMOGENEOUS[k], res <= PRODUCT_REL, res);
        }

        let (t_label, a, b) = triangle_pair(rng, &mut r, i % 5);
        r.count(t_label);
        let (va, vb, vab) = (norms(&a), norms(&b), norms(&a.add(&b).expect("equal lengths")));
        for k in 0..3 {
            record_le(&mut r, TRIANGLE[k], vab[k], va[k] + vb[k]);
        }

        for v in [&x, &qx, &a, &b] {
            check_closed_form_and_chain(&mut r, v);
        }
    }
    r
}

fn unit_vector(rng: &mut TestRng, n: usize) -> DQVector {
    let kind = if rng.random_bool(0.5) { VectorKind::Mixed } else { VectorKind::Appreciable };
    let raw = gen::vector(rng, n, kind);
    let st = raw.std_part();
    let norm = quaternion_vector_norm(&st);
    let st: Vec<Quaternion> = st.iter().map(|q| q.scale(1.0 / norm)).collect();
    let inf = raw.inf_part();
    let along = vec_embed_real(&st).dot(&vec_embed_real(&inf));
    let inf: Vec<Quaternion> = inf.iter().zip(&st).map(|(i, s)| *i - s.scale(along)).collect();
    DQVector::from_parts(&st, &inf).expect("equal lengths")
}

fn scale_std(x: &DQVector, factor: f64) -> DQVector {
    let st: Vec<Quaternion> = x.std_part().iter().map(|q| q.scale(factor)).collect();
    DQVector::from_parts(&st, &x.inf_part()).expect("equal lengths")
}

fn shift_inf_along_std(x: &DQVector, c: f64) -> DQVector {
    let inf: Vec<Quaternion> = x.inf_part().iter().zip(x.std_part()).map(|(i, s)| *i + s.scale(c)).collect();
    DQVector::from_parts(&x.std_part(), &inf).expect("equal lengths")
}

fn signed(rng: &mut TestRng, lo: f64, hi: f64) -> f64 {
    let m = rng.random_range(lo..=hi);
    if rng.random_bool(0.5) {
        m
    } else {
        -m
    }
}

/// `x*x = 1` and `‖x‖₂ = 1` accept and reject the same vectors.
///
/// Accepted instances sit at least ten times inside the tolerance, rejected
/// ones at least ten times outside.
pub fn unit_vector_suite(rng: &mut TestRng, cases: usize) -> SuiteReport {
    let mut r = SuiteReport::new("unit_vector");
    for i in 0..cases {
        let n = gen::vector_len(rng);
        let unit = unit_vector(rng, n);
        let (label, x, expect_unit) = match i % 4 {
            0 => ("near_unit", scale_std(&unit, 1.0 + signed(rng, 0.0, UNIT_TOL / 100.0)), true),
            1 => ("std_off_unit", scale_std(&unit, 1.0 + signed(rng, UNIT_TOL * 10.0, 0.5)), false),
            2 => ("inf_off_unit", shift_inf_along_std(&unit, signed(rng, UNIT_TOL * 10.0, 1.0)), false),
            _ => ("infinitesimal", gen::vector(rng, n, VectorKind::Infinitesimal), false),
        };
        r.count(label);
        let check = x.unit_check(UNIT_TOL).expect("finite");
        let inner_ok = check.inner_residual <= UNIT_TOL;
        let norm_ok = check.norm_residual <= UNIT_TOL;
        r.record_exact("residuals_agree", inner_ok == norm_ok);
        if expect_unit {
            let res = check.inner_residual.max(check.norm_residual);
            r.record("unit_accepted", check.is_unit && res <= UNIT_TOL / 10.0, res);
        } else {
            let res = check.inner_residual.min(check.norm_residual);
            r.record_exact("non_unit_rejected", !check.is_unit && res >= UNIT_TOL * 10.0);
        }
    }
    r
}

/// Composes random plane rotations into an orthogonal `n×n` matrix.
fn random_orthogonal(rng: &mut TestRng, n: usize) -> Vec<Vec<f64>> {
    let mut g: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    if n < 2 {
        return g;
    }
    for _ in 0..2 * n {
        let a = rng.random_range(0..n);
        let b = (a + rng.random_range(1..n)) % n;
        let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let (s, c) = theta.sin_cos();
        for row in g.iter_mut() {
            let (ra, rb) = (row[a], row[b]);
            row[a] = c * ra - s * rb;
            row[b] = s * ra + c * rb;
        }
    }
    g
}

/// Bases `v⁽ⁱ⁾ = Σⱼ G[i][j] uⱼ eⱼ` with `G` real orthogonal and `uⱼ` unit
/// dual quaternions are orthonormal; perturbing one entry breaks it.
pub fn orthonormal_suite(rng: &mut TestRng, cases: usize) -> SuiteReport {
    let mut r = SuiteReport::new("orthonormal_basis");
    for i in 0..cases {
        let n = rng.random_range(1..=4);
        let us: Vec<DualQuaternion> = (0..n).map(|_| gen::unit_dual_quaternion(rng)).collect();
        let g = random_orthogonal(rng, n);
        let mut basis: Vec<DQVector> = g
            .iter()
            .map(|row| {
                let entries = row
                    .iter()
                    .zip(&us)
                    .map(|(&c, u)| DualQuaternion::from_dual_number(DualNumber::real(c)) * *u)
                    .collect();
                DQVector::new(entries).expect("n ≥ 1")
            })
            .collect();
        basis.shuffle(rng);

        if i % 2 == 0 {
            r.count("orthonormal");
            let check = orthonormal_check(&basis, UNIT_TOL).expect("square");
            let worst = check.residuals.iter().flatten().fold(0.0_f64, |m, &v| m.max(v));
            r.record("basis_accepted", check.is_orthonormal, worst);
        } else {
            r.count("perturbed");
            let k = rng.random_range(0..n);
            basis[k] = scale_std(&basis[k], 1.0 + signed(rng, 1e-6, 0.5));
            let check = orthonormal_check(&basis, UNIT_TOL).expect("square");
            r.record_exact("perturbed_rejected", !check.is_orthonormal);
        }
    }
    r
}
