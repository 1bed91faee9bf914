use std::cmp::Ordering;

use super::gen::{self, TestRng};
use super::tol::{ORDER_SLACK, PRODUCT_REL, TIGHT};
use super::{dual_diff, le_with_slack, scaled_diff, SuiteReport};
use crate::dual_number::{no_root_witness, DualNumber};
use crate::quaternion::{mixed_sum, mixed_sum_product, Quaternion};
use rand::Rng;

fn nonnegative(q: DualNumber) -> DualNumber {
    if q < DualNumber::ZERO {
        -q
    } else {
        q
    }
}

fn record_le(report: &mut SuiteReport, name: &'static str, lhs: DualNumber, rhs: DualNumber) {
    let (ok, excess) = le_with_slack(lhs, rhs, ORDER_SLACK);
    report.record(name, ok, excess);
}

/// Total order laws and the sign rules for products and powers.
pub fn dual_order_suite(rng: &mut TestRng, cases: usize) -> SuiteReport {
    let mut r = SuiteReport::new("dual_order");
    for _ in 0..cases {
        let (p, q, s) = (gen::dual(rng), gen::dual(rng), gen::dual(rng));
        r.count(match (p.is_appreciable(), q.is_appreciable()) {
            (true, true) => "both_appreciable",
            (false, true) => "p_infinitesimal",
            (true, false) => "q_infinitesimal",
            (false, false) => "both_infinitesimal",
        });

        let relations = [p < q, p == q, p > q];
        r.record_exact("trichotomy", relations.iter().filter(|&&b| b).count() == 1);
        r.record_exact("antisymmetry", p.cmp(&q) == q.cmp(&p).reverse());
        if p <= q && q <= s {
            r.record_exact("transitivity", p <= s);
        }

        let k = rng.random_range(1..=5u32);
        let even = p.pow(2 * k);
        r.record_exact("even_power_nonnegative", even >= DualNumber::ZERO);

        let sq_diff = p.pow(2) + q.pow(2) - (p * q).scale(2.0);
        record_le(&mut r, "square_of_difference_nonnegative", DualNumber::ZERO, sq_diff);

        let (a, b) = (nonnegative(p), nonnegative(q));
        r.record_exact("product_of_nonnegatives", a * b >= DualNumber::ZERO);

        if a > DualNumber::ZERO
            && b > DualNumber::ZERO
            && (a.is_appreciable() || b.is_appreciable())
        {
            r.record_exact("product_of_positives", a * b > DualNumber::ZERO);
        }
    }
    r
}

/// Inverse, square root and power identities.
pub fn dual_algebra_suite(rng: &mut TestRng, cases: usize) -> SuiteReport {
    let mut r = SuiteReport::new("dual_algebra");
    for _ in 0..cases {
        let q = gen::dual(rng);
        match q.inverse() {
            Ok(inv) => {
                let prod = q * inv;
                // the ε part cancels two terms of size |inf/st|
                let scale = 1.0 + (q.inf_part() / q.std_part()).abs();
                let res = (prod.std_part() - 1.0).abs().max(prod.inf_part().abs() / scale);
                r.record("inverse_roundtrip", res <= TIGHT, res);
            }
            Err(_) => r.record_exact("infinitesimal_not_invertible", !q.is_appreciable()),
        }

        if q.is_appreciable() {
            let pos = nonnegative(q);
            let root = pos.sqrt().expect("positive appreciable");
            let res = dual_diff(root * root, pos);
            r.record("sqrt_roundtrip", res <= TIGHT && root >= DualNumber::ZERO, res);
        } else if q.is_zero() {
            r.record_exact("sqrt_zero", q.sqrt() == Ok(DualNumber::ZERO));
        } else {
            r.record_exact("sqrt_infinitesimal_rejected", q.sqrt().is_err());
        }

        let mut acc = q;
        for k in 1..=6 {
            let res = dual_diff(q.pow(k), acc);
            r.record("power_matches_products", res <= TIGHT, res);
            acc = acc * q;
        }
    }
    r
}

/// Absolute value laws.
pub fn dual_abs_suite(rng: &mut TestRng, cases: usize) -> SuiteReport {
    let mut r = SuiteReport::new("dual_abs");
    for i in 0..cases {
        let (p, q) = if i % 100 == 0 {
            (DualNumber::ZERO, gen::dual(rng))
        } else {
            (gen::dual(rng), gen::dual(rng))
        };
        r.count(match (p.is_appreciable(), q.is_appreciable()) {
            (true, true) => "both_appreciable",
            (false, true) => "p_infinitesimal",
            (true, false) => "q_infinitesimal",
            (false, false) => "both_infinitesimal",
        });

        let ap = p.abs();
        r.record_exact("abs_nonnegative", ap >= DualNumber::ZERO);
        r.record_exact("abs_zero_iff_zero", ap.is_zero() == p.is_zero());
        let ok = if p >= DualNumber::ZERO { ap == p } else { ap > p };
        r.record_exact("abs_vs_identity", ok);

        if p.is_appreciable() {
            let res = dual_diff(ap, p.pow(2).sqrt().expect("square is nonnegative"));
            r.record("abs_is_root_of_square", res <= TIGHT, res);
        }

        let res = dual_diff((p * q).abs(), p.abs() * q.abs());
        r.record("abs_multiplicative", res <= PRODUCT_REL, res);

        record_le(&mut r, "abs_triangle", (p + q).abs(), p.abs() + q.abs());
    }
    r
}

/// The sign change of `x² − ε` on `[0, 1]` without a root.
pub fn no_root_suite() -> SuiteReport {
    let mut r = SuiteReport::new("no_root_witness");
    let w = no_root_witness();
    r.record_exact("f0_is_minus_epsilon", w.f_at_zero == DualNumber::new(0.0, -1.0));
    r.record_exact("f0_negative", w.sign_at_zero == Ordering::Less);
    r.record_exact("f1_is_one_minus_epsilon", w.f_at_one == DualNumber::new(1.0, -1.0));
    r.record_exact("f1_positive", w.sign_at_one == Ordering::Greater);
    r.record_exact("no_root_in_unit_interval", !w.root_exists);
    r
}

fn imaginary_max(q: Quaternion) -> f64 {
    q.x().abs().max(q.y().abs()).max(q.z().abs())
}

fn quaternion_diff(a: Quaternion, b: Quaternion) -> f64 {
    let (a, b) = (a.components(), b.components());
    (0..4).map(|i| scaled_diff(a[i], b[i])).fold(0.0, f64::max)
}

/// Quaternion magnitude laws, conjugation and the mixed product sum.
pub fn quaternion_suite(rng: &mut TestRng, cases: usize) -> SuiteReport {
    let mut r = SuiteReport::new("quaternion");
    {
        use Quaternion as Q;
        r.record_exact("noncommutative_units", Q::I * Q::J == Q::K && Q::J * Q::I == -Q::K);
    }
    for i in 0..cases {
        let (p, q, s) = (gen::quaternion(rng), gen::quaternion(rng), gen::quaternion(rng));
        let p = if i % 100 == 0 { Quaternion::ZERO } else { p };

        r.record_exact("norm_of_conjugate", p.norm() == p.conj().norm());

        let n2 = p.norm().powi(2);
        for prod in [p.conj() * p, p * p.conj()] {
            let imag = imaginary_max(prod);
            r.record("self_product_real", imag <= TIGHT, imag);
            let res = scaled_diff(prod.w(), n2);
            r.record("self_product_is_norm_squared", res <= TIGHT, res);
        }

        r.record_exact("norm_zero_iff_zero", (p.norm() == 0.0) == p.is_zero());

        let (ok, excess) = (
            (p + q).norm() <= p.norm() + q.norm() + TIGHT,
            ((p + q).norm() - p.norm() - q.norm()).max(0.0),
        );
        r.record("norm_triangle", ok, excess);

        let res = scaled_diff((p * q).norm(), p.norm() * q.norm());
        r.record("norm_multiplicative", res <= PRODUCT_REL, res);

        let res = quaternion_diff((p * q).conj(), q.conj() * p.conj());
        r.record("conjugate_reverses_products", res <= TIGHT, res);

        let dot2 = 2.0 * p.dot(q);
        let left = mixed_sum_product(p, q);
        let right = p.conj() * q + q.conj() * p;
        for form in [left, right] {
            let imag = imaginary_max(form);
            r.record("mixed_sum_real", imag <= TIGHT, imag);
            let res = scaled_diff(form.w(), dot2);
            r.record("mixed_sum_is_twice_dot", res <= TIGHT, res);
        }
        r.record_exact("mixed_sum_value", mixed_sum(p, q) == dot2);

        let scale = 1.0 + p.norm() * q.norm() * s.norm();
        let diff = ((p * q) * s - p * (q * s)).max_abs() / scale;
        r.record("associativity", diff <= TIGHT, diff);
    }
    r
}
