//! Randomized laws checked against independent oracles: 2×2 matrices for
//! dual numbers, 4×4 left-multiplication matrices for quaternions, and
//! tuple ordering for the total order.

use dualq::{DQVector, DualNumber, DualQuaternion, Quaternion};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = f64> {
    prop_oneof![1 => Just(0.0), 4 => -10.0..10.0f64]
}

fn dual() -> impl Strategy<Value = DualNumber> {
    (small(), small()).prop_map(|(a, b)| DualNumber::new(a, b))
}

fn quat() -> impl Strategy<Value = Quaternion> {
    [small(), small(), small(), small()].prop_map(|c| Quaternion::new(c[0], c[1], c[2], c[3]))
}

fn dq() -> impl Strategy<Value = DualQuaternion> {
    (quat(), quat()).prop_map(|(s, i)| DualQuaternion::new(s, i))
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * 1f64.max(a.abs()).max(b.abs())
}

/// `a + bε` as the matrix `[[a, b], [0, a]]`.
fn dual_matrix(d: DualNumber) -> [[f64; 2]; 2] {
    [[d.std_part(), d.inf_part()], [0.0, d.std_part()]]
}

fn mat2_mul(a: [[f64; 2]; 2], b: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
    let mut c = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = (0..2).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

/// The matrix of `x ↦ q x` on (w, x, y, z).
fn left_matrix(q: Quaternion) -> [[f64; 4]; 4] {
    let [a, b, c, d] = q.components();
    [[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]]
}

fn apply(m: [[f64; 4]; 4], v: [f64; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (i, row) in m.iter().enumerate() {
        out[i] = row.iter().zip(v).map(|(a, b)| a * b).sum();
    }
    out
}

fn quat_close(a: Quaternion, b: [f64; 4], rel: f64) -> bool {
    a.components().iter().zip(b).all(|(x, y)| close(*x, y, rel))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn dual_product_matches_matrix_product(p in dual(), q in dual()) {
        let m = mat2_mul(dual_matrix(p), dual_matrix(q));
        let pq = p * q;
        prop_assert_eq!(m[1][0], 0.0);
        prop_assert!(close(pq.std_part(), m[0][0], 1e-12));
        prop_assert!(close(pq.inf_part(), m[0][1], 1e-12));
    }

    #[test]
    fn order_is_lexicographic(p in dual(), q in dual()) {
        let oracle = (p.std_part(), p.inf_part()).partial_cmp(&(q.std_part(), q.inf_part())).unwrap();
        prop_assert_eq!(p.cmp(&q), oracle);
    }

    #[test]
    fn inverse_matches_matrix_inverse(q in dual()) {
        let [[a, b], _] = dual_matrix(q);
        match q.inverse() {
            Ok(inv) => {
                prop_assert!(close(inv.std_part(), 1.0 / a, 1e-12));
                prop_assert!(close(inv.inf_part(), -b / (a * a), 1e-12));
            }
            Err(_) => prop_assert_eq!(a, 0.0),
        }
    }

    #[test]
    fn abs_is_the_larger_of_q_and_minus_q(q in dual()) {
        prop_assert_eq!(q.abs(), q.max(-q));
    }

    #[test]
    fn hamilton_product_matches_matrix(p in quat(), q in quat()) {
        prop_assert!(quat_close(p * q, apply(left_matrix(p), q.components()), 1e-12));
    }

    #[test]
    fn conjugate_is_matrix_transpose(q in quat()) {
        let m = left_matrix(q);
        let t = [m[0][0], m[0][1], m[0][2], m[0][3]];
        prop_assert!(quat_close(q.conj(), t, 0.0));
    }

    #[test]
    fn dual_quaternion_product_by_parts(p in dq(), q in dq()) {
        let pq = p * q;
        let (ps, pi, qs, qi) = (p.std_part(), p.inf_part(), q.std_part(), q.inf_part());
        prop_assert!(quat_close(pq.std_part(), apply(left_matrix(ps), qs.components()), 1e-12));
        let inf: Vec<f64> = apply(left_matrix(pi), qs.components())
            .iter()
            .zip(apply(left_matrix(ps), qi.components()))
            .map(|(a, b)| a + b)
            .collect();
        prop_assert!(quat_close(pq.inf_part(), inf.try_into().unwrap(), 1e-12));
    }

    #[test]
    fn magnitude_squared_is_self_product(q in dq()) {
        let m = q.magnitude();
        let qq = q * q.conj();
        let sq = m * m;
        prop_assert!(close(sq.std_part(), qq.std_part().w(), 1e-12));
        if q.is_appreciable() {
            prop_assert!(close(sq.inf_part(), qq.inf_part().w(), 1e-12));
        } else {
            prop_assert_eq!(sq.inf_part(), 0.0);
        }
    }

    #[test]
    fn norm2_matches_componentwise_sum(entries in prop::collection::vec(dq(), 1..8)) {
        let x = DQVector::new(entries.clone()).unwrap();
        let n2 = x.norm2();
        let st: f64 = entries.iter().map(|e| e.std_part().norm_squared()).sum::<f64>().sqrt();
        prop_assert!(close(n2.std_part(), st, 1e-12));
        if st > 0.0 {
            let dot: f64 = entries.iter().map(|e| e.std_part().dot(e.inf_part())).sum();
            prop_assert!(close(n2.inf_part(), dot / st, 1e-9));
        } else {
            let inf: f64 = entries.iter().map(|e| e.inf_part().norm_squared()).sum::<f64>().sqrt();
            prop_assert!(close(n2.inf_part(), inf, 1e-12));
        }
    }

    #[test]
    fn norm_inf_reports_first_maximizer(entries in prop::collection::vec(dq(), 1..8)) {
        let x = DQVector::new(entries.clone()).unwrap();
        let (m, i) = x.norm_inf_with_index();
        let mags: Vec<DualNumber> = entries.iter().map(|e| e.magnitude()).collect();
        prop_assert_eq!(m, mags[i]);
        prop_assert!(mags.iter().all(|v| *v <= m));
        prop_assert!(mags[..i].iter().all(|v| *v < m));
    }
}
