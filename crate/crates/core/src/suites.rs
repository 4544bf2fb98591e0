//! Named check suites over loadable targets, shared by the command line and
//! the acceptance tests.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fusion::{build_canonical_algebra, build_fusion_data, canonical_double_dual_trace};
use crate::hopf::{
    distinguished_element, distinguished_functional, drinfeld_double, dual_unimodular,
    factorizable_implies_unimodular_check, is_semisimple, is_unimodular, left_integral, pivot_candidates,
    r_matrix_check, radford_check, right_integral, HopfAlgebra, RMatrix,
};
use crate::io::{hopf_to_json, load_algebra, load_hopf, parse_address, Loaded};
use crate::modalg::{exactness_verdict, ModuleOverAlgebra};
use crate::rep::{
    comparison_check, delta_check_braided, ler_counterexample_check, spherical_check, trtr_check,
    vitia_monstr_check,
};
use crate::report::{Report, Verdict};

pub const DEFAULT_MAX_DIM: usize = 20000;

pub const SUITES: [&str; 10] = [
    "radford",
    "factorizable-unimodular",
    "delta-braided",
    "trtr",
    "vitia",
    "spherical",
    "comparison",
    "ler-counterexample",
    "canonical-algebra",
    "exactness",
];

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    pub max_dim: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, max_dim: DEFAULT_MAX_DIM }
    }
}

fn guard(needed: usize, opts: &Options) -> Result<()> {
    if needed > opts.max_dim {
        return Err(Error::DimensionLimit(needed, opts.max_dim));
    }
    Ok(())
}

/// Loads a Hopf target after checking that `intermediate(dim)` fits the guard.
fn load_guarded(target: &str, opts: &Options, intermediate: impl Fn(usize) -> usize) -> Result<Loaded> {
    if let Ok((spec, _)) = parse_address(target) {
        guard(intermediate(spec.dim()), opts)?;
    }
    let loaded = load_hopf(target)?;
    guard(intermediate(loaded.algebra.dim()), opts)?;
    Ok(loaded)
}

fn is_cocommutative(h: &HopfAlgebra) -> bool {
    (0..h.dim()).all(|i| {
        let d = h.coproduct_basis(i);
        h.tensor_permute(2, &[1, 0], &d) == d
    })
}

fn r_matrix_for(loaded: &Loaded) -> Result<RMatrix> {
    match &loaded.r_matrix {
        Some(r) => Ok(r.clone()),
        None if is_cocommutative(&loaded.algebra) => Ok(RMatrix::trivial(&loaded.algebra)),
        None => Err(Error::InvalidInput(
            "this suite needs a quasitriangular target: double(...) or a file with an r_matrix".into(),
        )),
    }
}

/// Validation report for a target.
pub fn validate(target: &str, opts: &Options) -> Result<Report> {
    let loaded = load_guarded(target, opts, |n| n * n)?;
    Ok(loaded.algebra.validate().with("dim", loaded.algebra.dim()))
}

/// Smallest k ≤ limit with S^k = id.
fn antipode_order(h: &HopfAlgebra, limit: usize) -> Option<usize> {
    let s = h.antipode();
    let mut p = s.clone();
    for k in 1..=limit {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul(s);
    }
    None
}

/// Structural summary: dimension, antipode order, integrals, α, a,
/// unimodularity on both sides, semisimplicity and the Radford verdict.
pub fn structure_report(target: &str, opts: &Options) -> Result<Report> {
    let loaded = load_guarded(target, opts, |n| n * n)?;
    let h = &*loaded.algebra;
    let f = h.field();
    let fmt = |v: &[crate::field::Scalar]| v.iter().map(|s| f.format_scalar(s)).collect::<Vec<_>>();
    let radford = radford_check(h);
    let mut r = Report::pass("report")
        .with("dim", h.dim())
        .with("field", f.to_string())
        .with("basis", h.basis_names().to_vec())
        .with("antipode_order", antipode_order(h, 4 * h.dim().max(2)))
        .with("left_integral", fmt(&left_integral(h)?))
        .with("right_integral", fmt(&right_integral(h)?))
        .with("alpha", fmt(&distinguished_functional(h)?))
        .with("a", fmt(&distinguished_element(h)?))
        .with("unimodular", is_unimodular(h)?)
        .with("dual_unimodular", dual_unimodular(h)?)
        .with("semisimple", is_semisimple(h)?);
    r.push(h.validate());
    r.push(radford);
    Ok(r)
}

fn named(mut r: Report, suite: &str, target: &str) -> Report {
    r.witness("suite", suite);
    r.witness("target", target);
    r
}

/// Runs one named suite on a target.
pub fn run_suite(suite: &str, target: &str, opts: &Options) -> Result<Report> {
    let seed = opts.seed;
    let report = match suite {
        "radford" => radford_check(&load_guarded(target, opts, |n| n * n)?.algebra),
        "factorizable-unimodular" => {
            // the R-matrix of D(H) lives in D⊗D, of dimension n⁴
            let loaded = load_guarded(target, opts, |n| n.pow(4))?;
            factorizable_implies_unimodular_check(&loaded.algebra)
        }
        "delta-braided" => {
            let loaded = load_guarded(target, opts, |n| n * n)?;
            let r = r_matrix_for(&loaded)?;
            delta_check_braided(&loaded.algebra, &r, seed)?
        }
        "trtr" => trtr_check(&load_guarded(target, opts, |n| n * n)?.algebra, seed)?,
        "vitia" => vitia_monstr_check(&load_guarded(target, opts, |n| n * n)?.algebra, seed)?,
        "spherical" => {
            let h = load_guarded(target, opts, |n| 4 * n * n)?.algebra;
            let a = pivot_candidates(&h).require_invertible()?.clone();
            spherical_check(&h, &a, seed)?
        }
        "comparison" => comparison_check(&load_guarded(target, opts, |n| n * n)?.algebra, seed)?,
        "ler-counterexample" => ler_counterexample_check(&load_guarded(target, opts, |n| n * n)?.algebra, seed)?,
        "canonical-algebra" => canonical_algebra_suite(&load_guarded(target, opts, |n| n * n)?.algebra, seed)?,
        "exactness" => {
            if let Ok((spec, _)) = parse_address(target) {
                guard(spec.dim().pow(4), opts)?;
            }
            let b = load_algebra(target)?;
            guard(b.dim().pow(4), opts)?;
            exactness_verdict(&ModuleOverAlgebra::regular_bimodule(&b)?, seed)?
        }
        other => {
            return Err(Error::InvalidInput(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", "))))
        }
    };
    Ok(named(report, suite, target))
}

/// Fusion data, the canonical algebra with its self-tests, and the trace of
/// A ≅ A** against dim(C).
pub fn canonical_algebra_suite(h: &Arc<HopfAlgebra>, seed: u64) -> Result<Report> {
    let fd = build_fusion_data(h, seed)?;
    let a = build_canonical_algebra(&fd)?;
    let trace = canonical_double_dual_trace(&fd, &a, seed)?;
    let mut fusion = fd.report(seed)?;
    fusion.push(fd.checks.clone());
    Ok(Report::aggregate("canonical_algebra_suite", vec![fusion, a.checks.clone(), trace.report])
        .with("carrier_dim", a.carrier_dim))
}

/// Turns an error into a report with the matching verdict, so that every
/// run produces machine-readable output.
pub fn error_report(check: &str, target: &str, e: &Error) -> Report {
    let verdict = if matches!(e, Error::Undecided(_)) { Verdict::Undecided } else { Verdict::Fail };
    named(Report::new(check, verdict).with("error", e.to_string()), check, target)
}

/// Process exit code for an outcome: 0 pass, 1 check failed, 2 undecided,
/// 3 invalid input.
pub fn exit_code(outcome: &Result<Report>) -> i32 {
    match outcome {
        Ok(r) => match r.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Undecided => 2,
        },
        Err(Error::Undecided(_)) => 2,
        Err(
            Error::Parse(_)
            | Error::InvalidInput(_)
            | Error::InvalidField(_)
            | Error::ShapeMismatch(_)
            | Error::FieldMismatch(..)
            | Error::UnsupportedField(_)
            | Error::NoAntipode
            | Error::PreconditionFailed(_)
            | Error::DimensionLimit(..)
            | Error::Io(_),
        ) => 3,
        Err(_) => 1,
    }
}

/// The Hopf document for D(H) with its R-matrix.
pub fn double_document(target: &str, opts: &Options) -> Result<(String, Report)> {
    let loaded = load_guarded(target, opts, |n| n.pow(4))?;
    let (d, r) = drinfeld_double(&loaded.algebra)?;
    let check = r_matrix_check(&d, &r);
    let json = hopf_to_json(&d, Some(&r));
    let report = Report::aggregate("double", vec![d.validate(), check]).with("dim", d.dim());
    Ok((json, report))
}
