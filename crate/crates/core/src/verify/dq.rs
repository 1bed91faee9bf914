use rand::Rng;

use super::gen::{self, TestRng};
use super::tol::{NON_UNIT_OFFSET, ORDER_SLACK, PRODUCT_REL, TIGHT, UNIT_TOL};
use super::{dual_diff, le_with_slack, SuiteReport};
use crate::dual_number::DualNumber;
use crate::dual_quaternion::DualQuaternion;

const STRATA: [&str; 4] = ["neither_infinitesimal", "p_infinitesimal", "q_infinitesimal", "both_infinitesimal"];

fn max_diff(a: DualQuaternion, b: DualQuaternion) -> f64 {
    let scale = 1f64.max(a.max_abs()).max(b.max_abs());
    (a - b).max_abs() / scale
}

/// Magnitude laws for dual quaternions, stratified evenly over which of
/// the two operands is infinitesimal.
pub fn dual_quaternion_suite(rng: &mut TestRng, cases: usize) -> SuiteReport {
    let mut r = SuiteReport::new("dual_quaternion");
    for i in 0..cases {
        let stratum = i % 4;
        let p_app = stratum == 0 || stratum == 2;
        let q_app = stratum == 0 || stratum == 1;
        let p = gen::dual_quaternion(rng, p_app);
        // every 100th `q` in the doubly infinitesimal stratum is exactly zero
        let q = if stratum == 3 && i % 100 == 3 {
            DualQuaternion::ZERO
        } else {
            gen::dual_quaternion(rng, q_app)
        };
        r.count(STRATA[stratum]);

        let res = max_diff(p * p.conj(), p.conj() * p);
        r.record("self_products_commute", res <= TIGHT, res);

        let mp = p.magnitude();
        let res = dual_diff(mp, p.conj().magnitude());
        r.record("magnitude_of_conjugate", res <= TIGHT, res);

        let mq = q.magnitude();
        r.record_exact("magnitude_nonnegative", mp >= DualNumber::ZERO && mq >= DualNumber::ZERO);
        r.record_exact("magnitude_zero_iff_zero", mq.is_zero() == q.is_zero());

        let res = dual_diff((p * q).magnitude(), mp * mq);
        r.record("magnitude_multiplicative", res <= PRODUCT_REL, res);
        let res = dual_diff((q * p).magnitude(), mq * mp);
        r.record("magnitude_multiplicative", res <= PRODUCT_REL, res);

        let (ok, excess) = le_with_slack((p + q).magnitude(), mp + mq, ORDER_SLACK);
        r.record("magnitude_triangle", ok, excess);

        if p.is_appreciable() {
            let via_sqrt = p.magnitude_via_sqrt().expect("appreciable");
            let res = dual_diff(via_sqrt, mp);
            r.record("magnitude_routes_agree", res <= TIGHT, res);

            let inv = p.inverse().expect("appreciable");
            let res = max_diff(p * inv, DualQuaternion::ONE).max(max_diff(inv * p, DualQuaternion::ONE));
            r.record("inverse_roundtrip", res <= TIGHT, res);
        } else {
            r.record_exact("infinitesimal_not_invertible", p.inverse().is_err());
        }

        let d = gen::dual(rng);
        let res = dual_diff(DualQuaternion::from_dual_number(d).magnitude(), d.abs());
        r.record("magnitude_extends_dual_abs", res <= TIGHT, res);
    }
    r
}

/// Constructed unit dual quaternions pass the unit test and have magnitude
/// one; perturbed ones fail it.
pub fn unit_dual_quaternion_suite(rng: &mut TestRng, units: usize, non_units: usize) -> SuiteReport {
    let mut r = SuiteReport::new("unit_dual_quaternion");
    for i in 0..units {
        let q = if i % 2 == 0 {
            gen::unit_dual_quaternion(rng)
        } else {
            gen::unit_dual_quaternion_from_twist(rng)
        };
        r.count("unit");
        let check = q.unit_check(UNIT_TOL);
        r.record("unit_accepted", check.is_unit, check.norm_residual.max(check.mixed_sum_residual));
        let m = q.magnitude();
        let res = (m.std_part() - 1.0).abs().max(m.inf_part().abs());
        r.record("unit_magnitude_is_one", res <= TIGHT, res);
    }
    for _ in 0..non_units {
        let q = gen::unit_dual_quaternion(rng);
        let offset = rng.random_range(NON_UNIT_OFFSET / 2.0..=1.0) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        // adding δ·q_st to q_I shifts the mixed sum by 2δ|q_st|² = 2δ
        let perturbed = DualQuaternion::new(q.std_part(), q.inf_part() + q.std_part().scale(offset));
        r.count("non_unit");
        let check = perturbed.unit_check(UNIT_TOL);
        r.record_exact("non_unit_rejected", !check.is_unit);
        r.record_exact("non_unit_offset", check.mixed_sum_residual >= NON_UNIT_OFFSET);
    }
    r
}
