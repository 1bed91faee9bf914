use thiserror::Error;

use super::parse::Document;
use super::report::{Report, Value};
use crate::dq_vector::{orthonormal_check, DQVector};
use crate::dual_number::DualNumber;
use crate::dual_quaternion::DualQuaternion;
use crate::error::Error;
use crate::quaternion::Quaternion;
use crate::verify::{self, tol::ORDER_SLACK, SuiteReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CommandError {
    #[error("`{command}` expects a {expected} document, got a {found}")]
    KindMismatch { command: &'static str, expected: &'static str, found: &'static str },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Library(#[from] Error),
}

fn kind_mismatch(command: &'static str, expected: &'static str, doc: &Document) -> CommandError {
    CommandError::KindMismatch { command, expected, found: doc.kind() }
}

fn check_tol(tol: f64) -> Result<(), CommandError> {
    if tol.is_finite() && tol >= 0.0 {
        Ok(())
    } else {
        Err(CommandError::InvalidArgument(format!("tolerance must be finite and nonnegative, got {tol}")))
    }
}

fn dual_gap(a: DualNumber, b: DualNumber) -> f64 {
    (a.std_part() - b.std_part()).abs().max((a.inf_part() - b.inf_part()).abs())
}

/// Replaces standard parts with magnitude at most `zero_tol` by exact
/// zeros, so measured data can be classified as infinitesimal. A zero
/// tolerance leaves the document untouched.
pub fn snap_document(doc: &Document, zero_tol: f64) -> Result<Document, CommandError> {
    check_tol(zero_tol)?;
    if zero_tol == 0.0 {
        return Ok(doc.clone());
    }
    let snap = |q: &DualQuaternion| {
        if q.std_part().norm() <= zero_tol {
            DualQuaternion::new(Quaternion::ZERO, q.inf_part())
        } else {
            *q
        }
    };
    let snap_vec = |v: &DQVector| DQVector::new(v.entries().iter().map(snap).collect());
    Ok(match doc {
        Document::Scalar(q) => Document::Scalar(snap(q)),
        Document::Vector(v) => Document::Vector(snap_vec(v)?),
        Document::Basis(vs) => Document::Basis(vs.iter().map(snap_vec).collect::<Result<_, _>>()?),
    })
}

pub fn cmd_magnitude(doc: &Document) -> Result<Report, CommandError> {
    let Document::Scalar(q) = doc else {
        return Err(kind_mismatch("magnitude", "scalar", doc));
    };
    let mut r = Report::new("magnitude");
    r.input("document", doc.render());
    let m = q.magnitude();
    r.result("magnitude", m).result("appreciable", q.is_appreciable());
    match q.magnitude_via_sqrt() {
        Ok(via) => {
            r.result("magnitude_via_sqrt", via).result("cross_check_diff", dual_gap(m, via));
        }
        Err(Error::NotAppreciable) => {
            r.result("cross_check", "not applicable (infinitesimal)");
        }
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}

pub fn cmd_norms(doc: &Document) -> Result<Report, CommandError> {
    let Document::Vector(x) = doc else {
        return Err(kind_mismatch("norms", "vector", doc));
    };
    let mut r = Report::new("norms");
    r.input("document", doc.render());
    let n1 = x.norm1();
    let (ninf, argmax) = x.norm_inf_with_index();
    let n2 = x.norm2();
    r.result("norm1", n1)
        .result("norm_inf", ninf)
        .result("norm_inf_index", argmax)
        .result("norm2", n2);
    match x.norm2_closed_form() {
        Ok(closed) => {
            r.result("norm2_closed_form", closed).result("closed_form_diff", dual_gap(closed, n2));
        }
        Err(Error::NotAppreciable) => {
            r.result("norm2_closed_form", "not applicable (all entries infinitesimal)");
        }
        Err(e) => return Err(e.into()),
    }
    let chain_ok = verify::le_with_slack(ninf, n2, ORDER_SLACK).0 && verify::le_with_slack(n2, n1, ORDER_SLACK).0;
    r.result("chain_ok", chain_ok);
    r.pass = Some(chain_ok);
    Ok(r)
}

pub fn cmd_check_unit(doc: &Document, tol: f64) -> Result<Report, CommandError> {
    check_tol(tol)?;
    let mut r = Report::new("check-unit");
    r.input("document", doc.render()).input("tol", tol);
    let pass = match doc {
        Document::Scalar(q) => {
            let c = q.unit_check(tol);
            r.result("norm_residual", c.norm_residual)
                .result("mixed_sum_residual", c.mixed_sum_residual)
                .result("is_unit", c.is_unit);
            c.is_unit
        }
        Document::Vector(x) => {
            let c = x.unit_check(tol)?;
            r.result("inner_residual", c.inner_residual)
                .result("norm_residual", c.norm_residual)
                .result("is_unit", c.is_unit);
            c.is_unit
        }
        Document::Basis(_) => return Err(kind_mismatch("check-unit", "scalar or vector", doc)),
    };
    r.pass = Some(pass);
    Ok(r)
}

pub fn cmd_check_orthonormal(doc: &Document, tol: f64) -> Result<Report, CommandError> {
    check_tol(tol)?;
    let Document::Basis(xs) = doc else {
        return Err(kind_mismatch("check-orthonormal", "basis", doc));
    };
    let mut r = Report::new("check-orthonormal");
    r.input("document", doc.render()).input("tol", tol);
    let c = orthonormal_check(xs, tol)?;
    r.result("residuals", Value::Matrix(c.residuals)).result("is_orthonormal", c.is_orthonormal);
    r.pass = Some(c.is_orthonormal);
    Ok(r)
}

fn suite_value(s: &SuiteReport) -> Value {
    let mut fields = vec![("pass".to_string(), Value::Bool(s.passed()))];
    if !s.strata.is_empty() {
        let strata = s.strata.iter().map(|(n, c)| (n.to_string(), Value::Count(*c))).collect();
        fields.push(("strata".to_string(), Value::Object(strata)));
    }
    let checks = s
        .checks
        .iter()
        .map(|c| {
            let stats = vec![
                ("cases".to_string(), Value::Count(c.cases)),
                ("violations".to_string(), Value::Count(c.violations)),
                ("worst_residual".to_string(), Value::Real(c.worst_residual)),
            ];
            (c.name.to_string(), Value::Object(stats))
        })
        .collect();
    fields.push(("checks".to_string(), Value::Object(checks)));
    Value::Object(fields)
}

pub fn cmd_selfcheck(seed: u64, cases: usize) -> Result<Report, CommandError> {
    if cases == 0 {
        return Err(CommandError::InvalidArgument("cases must be at least 1".into()));
    }
    let mut r = Report::new("selfcheck");
    r.input("seed", seed).input("cases", cases);
    let suites = verify::run_all(seed, cases);
    for s in &suites {
        r.result(s.name, suite_value(s));
    }
    let w = crate::dual_number::no_root_witness();
    r.result(
        "witness",
        Value::Object(vec![
            ("f_at_zero".into(), w.f_at_zero.into()),
            ("f_at_one".into(), w.f_at_one.into()),
            ("root_in_unit_interval".into(), w.root_exists.into()),
        ]),
    );
    r.pass = Some(suites.iter().all(SuiteReport::passed));
    Ok(r)
}
