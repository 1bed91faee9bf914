//! One line per acceptance criterion. Runs without the libtest harness so
//! the report is always printed; exits nonzero if any criterion fails.

mod common;

use std::cmp::Ordering;
use std::process::ExitCode;

use common::*;
use dualq::cli::parse_document;
use dualq::verify::{self, tol, NormSuiteOptions, SuiteReport, DEFAULT_SEED};
use dualq::dual_number::no_root_witness;
use dualq::DualNumber;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn rng(index: u64) -> verify::gen::TestRng {
    verify::rng_for(DEFAULT_SEED, index)
}

fn suite_ok(r: &SuiteReport) -> Outcome {
    let failed: Vec<String> = r
        .checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| format!("{} ({}/{} violations, worst {:e})", c.name, c.violations, c.cases, c.worst_residual))
        .collect();
    if failed.is_empty() {
        let cases: u64 = r.checks.iter().map(|c| c.cases).sum();
        Ok(format!("{} checks, {cases} evaluations, 0 violations", r.checks.len()))
    } else {
        Err(failed.join("; "))
    }
}

fn require_check(r: &SuiteReport, name: &str, max_worst: f64) -> Result<(), String> {
    match r.check(name) {
        Some(c) if c.cases == 0 => Err(format!("{name}: never exercised")),
        Some(c) if c.violations > 0 || c.worst_residual > max_worst => {
            Err(format!("{name}: {} violations, worst {:e}", c.violations, c.worst_residual))
        }
        Some(_) => Ok(()),
        None => Err(format!("{name}: missing")),
    }
}

fn require_strata(r: &SuiteReport, names: &[&str], min: u64) -> Result<(), String> {
    for name in names {
        let n = r.stratum(name);
        if n < min {
            return Err(format!("stratum {name} has {n} cases, need {min}"));
        }
    }
    Ok(())
}

fn with_requirements(r: &SuiteReport, extra: impl FnOnce(&SuiteReport) -> Result<(), String>) -> Outcome {
    let summary = suite_ok(r)?;
    extra(r)?;
    Ok(summary)
}

const PAIR_STRATA: [&str; 4] = ["both_appreciable", "p_infinitesimal", "q_infinitesimal", "both_infinitesimal"];

fn order_and_signs() -> Outcome {
    let r = verify::dual_order_suite(&mut rng(1), 10_000);
    with_requirements(&r, |r| {
        for c in ["trichotomy", "antisymmetry", "transitivity", "even_power_nonnegative"] {
            require_check(r, c, 0.0)?;
        }
        for c in ["square_of_difference_nonnegative", "product_of_nonnegatives", "product_of_positives"] {
            require_check(r, c, tol::ORDER_SLACK)?;
        }
        require_strata(r, &PAIR_STRATA, 100)
    })
}

fn absolute_value() -> Outcome {
    let r = verify::dual_abs_suite(&mut rng(3), 10_000);
    with_requirements(&r, |r| {
        require_check(r, "abs_multiplicative", tol::PRODUCT_REL)?;
        require_check(r, "abs_triangle", tol::ORDER_SLACK)?;
        require_check(r, "abs_is_root_of_square", tol::TIGHT)?;
        require_strata(r, &PAIR_STRATA, 100)
    })
}

fn quaternions() -> Outcome {
    let r = verify::quaternion_suite(&mut rng(4), 10_000);
    with_requirements(&r, |r| {
        require_check(r, "self_product_real", tol::TIGHT)?;
        require_check(r, "norm_multiplicative", tol::PRODUCT_REL)?;
        require_check(r, "mixed_sum_real", tol::TIGHT)?;
        require_check(r, "mixed_sum_is_twice_dot", tol::TIGHT)
    })
}

fn dual_quaternions() -> Outcome {
    let r = verify::dual_quaternion_suite(&mut rng(5), 10_000);
    with_requirements(&r, |r| {
        require_strata(
            r,
            &["neither_infinitesimal", "p_infinitesimal", "q_infinitesimal", "both_infinitesimal"],
            1_000,
        )?;
        require_check(r, "magnitude_multiplicative", tol::PRODUCT_REL)?;
        require_check(r, "magnitude_triangle", tol::ORDER_SLACK)?;
        require_check(r, "magnitude_routes_agree", tol::TIGHT)
    })
}

fn norm_report() -> SuiteReport {
    verify::norm_suite(&mut rng(8), 5_000, NormSuiteOptions::default())
}

fn norm_axioms(r: &SuiteReport) -> Outcome {
    with_requirements(r, |r| {
        for norm in ["norm1", "norm_inf", "norm2"] {
            for law in ["nonnegative", "zero_iff_zero"] {
                require_check(r, &format!("{norm}_{law}"), 0.0)?;
            }
            require_check(r, &format!("{norm}_homogeneous"), tol::PRODUCT_REL)?;
            require_check(r, &format!("{norm}_triangle"), tol::ORDER_SLACK)?;
        }
        require_strata(
            r,
            &[
                "zero",
                "infinitesimal",
                "mixed",
                "appreciable",
                "scalar_appreciable",
                "scalar_infinitesimal",
                "scalar_unit",
                "triangle_both_infinitesimal",
                "triangle_x_infinitesimal",
                "triangle_y_infinitesimal",
                "triangle_parallel",
                "triangle_general",
                "parallel_t_0.5",
                "parallel_t_1",
                "parallel_t_2",
            ],
            1,
        )
    })
}

fn closed_form(r: &SuiteReport) -> Outcome {
    require_check(r, "closed_form_agrees", tol::CLOSED_FORM_REL)?;
    require_check(r, "closed_form_bound", tol::ORDER_SLACK)?;
    let n = r.check("closed_form_agrees").map_or(0, |c| c.cases);
    Ok(format!("{n} appreciable instances, 0 violations"))
}

fn norm_chain(r: &SuiteReport) -> Outcome {
    require_check(r, "chain_inf_le_two", tol::ORDER_SLACK)?;
    require_check(r, "chain_two_le_one", tol::ORDER_SLACK)?;
    let n = r.check("chain_inf_le_two").map_or(0, |c| c.cases);
    Ok(format!("{n} instances, 0 violations"))
}

fn unit_dual_quaternions() -> Outcome {
    let r = verify::unit_dual_quaternion_suite(&mut rng(6), 1_000, 1_000);
    with_requirements(&r, |r| {
        require_strata(r, &["unit", "non_unit"], 1_000)?;
        require_check(r, "unit_accepted", tol::UNIT_TOL)?;
        require_check(r, "unit_magnitude_is_one", tol::TIGHT)?;
        require_check(r, "non_unit_rejected", 0.0)
    })
}

fn no_root() -> Outcome {
    let w = no_root_witness();
    let ok = w.f_at_zero == DualNumber::new(0.0, -1.0)
        && w.sign_at_zero == Ordering::Less
        && w.f_at_one == DualNumber::new(1.0, -1.0)
        && w.sign_at_one == Ordering::Greater
        && !w.root_exists;
    if ok {
        suite_ok(&verify::no_root_suite()).map(|_| format!("f(0) = {}, f(1) = {}, no root", w.f_at_zero, w.f_at_one))
    } else {
        Err(format!("{w:?}"))
    }
}

fn cli_contract() -> Outcome {
    let cases = golden_cases();
    if cases.is_empty() {
        return Err("no golden documents".into());
    }
    for (stem, cmd) in &cases {
        for format in ["text", "json"] {
            let (out, code) = run_golden(stem, cmd, format);
            let expected = std::fs::read_to_string(expected_path(stem, format)).map_err(|e| format!("{stem}: {e}"))?;
            if out != expected {
                return Err(format!("{stem} ({format}) differs from golden output"));
            }
            let failing = stem.ends_with("_fail") || stem.ends_with("_repeated");
            if code != if failing { 1 } else { 0 } {
                return Err(format!("{stem}: exit code {code}"));
            }
            if format == "json" {
                let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| format!("{stem}: {e}"))?;
                let doc = v["inputs"]["document"].as_str().ok_or(format!("{stem}: no document echo"))?;
                parse_document(doc).map_err(|e| format!("{stem}: echo does not reparse: {e}"))?;
            }
        }
    }
    let bad = run_stdin(&["magnitude", "-"], "dq{ std: 1e999, inf: 0 }");
    if bad.status.code() != Some(2) {
        return Err(format!("parse error exit code {:?}", bad.status.code()));
    }
    let args = ["selfcheck", "--seed", "42", "--cases", "100", "--format", "json"];
    let (a, b) = (run(&args), run(&args));
    if a.stdout != b.stdout || a.status.code() != Some(0) {
        return Err("selfcheck is not reproducible".into());
    }
    Ok(format!("{} golden documents, exit codes 0/1/2, reproducible selfcheck", cases.len()))
}

fn main() -> ExitCode {
    let norms = norm_report();
    let criteria: [Criterion; 10] = [
        ("dual number order and sign rules, 10000 pairs", Box::new(order_and_signs)),
        ("dual number absolute value, 10000 pairs", Box::new(absolute_value)),
        ("quaternion magnitude and mixed sum, 10000 pairs", Box::new(quaternions)),
        ("dual quaternion magnitude, 10000 stratified pairs", Box::new(dual_quaternions)),
        ("vector norm axioms, 5000 vectors", Box::new(|| norm_axioms(&norms))),
        ("2-norm closed form and bound", Box::new(|| closed_form(&norms))),
        ("norm chain inf <= 2 <= 1", Box::new(|| norm_chain(&norms))),
        ("unit dual quaternions, 1000 units and 1000 non-units", Box::new(unit_dual_quaternions)),
        ("x^2 - e sign change without a root", Box::new(no_root)),
        ("command line contract", Box::new(cli_contract)),
    ];

    let mut failures = 0;
    for (i, (what, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {what}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {what}: {why}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
