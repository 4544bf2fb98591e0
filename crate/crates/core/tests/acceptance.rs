//! The ten acceptance criteria, one PASS/FAIL line each.

use std::sync::Arc;

use hopfcheck::fusion::{build_canonical_algebra, build_fusion_data, canonical_double_dual_trace};
use hopfcheck::hopf::{
    corrupt_constant, drinfeld_double, dual_hopf, factorizable_implies_unimodular_check, is_semisimple,
    is_unimodular, left_integral, left_integrals, radford_check, right_integrals, HopfAlgebra,
};
use hopfcheck::io::{load_algebra, load_hopf};
use hopfcheck::modalg::{is_projective, ModuleOverAlgebra};
use hopfcheck::rep::{comparison_check, delta_check_braided, global_dimension, ler_counterexample_check, trtr_check};
use hopfcheck::suites::{run_suite, Options};
use hopfcheck::{Matrix, Report};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl Into<String>) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn hopf(target: &str) -> Result<Arc<HopfAlgebra>, String> {
    load_hopf(target).map(|l| l.algebra).map_err(|e| format!("{target}: {e}"))
}

fn passed(r: &Report, what: &str) -> Outcome {
    ensure(r.passed(), format!("{what}: {}", r.summary()))
}

fn w<'a>(r: &'a Report, key: &str) -> &'a Value {
    r.witnesses.get(key).unwrap_or(&Value::Null)
}

const BUILTINS: [&str; 10] = [
    "k[Z/2]@Q",
    "sym3@GF7",
    "sweedler",
    "taft:3:2@GF7",
    "taft:4@GF13",
    "gr_uq_sl2:3:2@GF7",
    "double(sweedler)@Q",
    "k[Z/5]@GF11",
    "dihedral:4@Q",
    "trunc:3@Q",
];

fn criterion_1() -> Outcome {
    for t in ["k[Z/2]@Q", "sym3@GF7", "sweedler@Q", "taft:3:2@GF7", "taft:4@GF13", "gr_uq_sl2:3:2@GF7", "double(sweedler)@Q"] {
        let h = hopf(t)?;
        passed(&radford_check(&h), t)?;
    }
    let h = hopf("sweedler@Q")?;
    let r = radford_check(&h);
    ensure(w(&r, "alpha") == &json!(["1", "-1", "0", "0"]), "sweedler α(g) = -1")?;
    ensure(w(&r, "a") == &json!(["0", "1", "0", "0"]), "sweedler a = g")?;
    let s = h.antipode();
    ensure((1..4).all(|k| !s.pow(k).is_identity()) && s.pow(4).is_identity(), "sweedler antipode order 4")
}

fn criterion_2() -> Outcome {
    for t in ["sweedler@Q", "taft:3:2@GF7", "k[Z/2]@Q"] {
        let h = hopf(t)?;
        let r = factorizable_implies_unimodular_check(&h);
        passed(&r, t)?;
        let n = h.dim();
        ensure(w(&r, "drinfeld_map_rank") == &json!(n * n), format!("{t}: Drinfeld map rank"))?;
        ensure(w(&r, "factorizable") == &json!(true), format!("{t}: factorizable"))?;
        ensure(w(&r, "unimodular") == &json!(true), format!("{t}: unimodular"))?;
        ensure(w(&r, "two_sided_integral") == &json!(true), format!("{t}: two-sided integral"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let h = hopf("sweedler@Q")?;
    let (d, r) = drinfeld_double(&h).map_err(|e| e.to_string())?;
    let d = Arc::new(d);
    let rep = delta_check_braided(&d, &r, 0).map_err(|e| e.to_string())?;
    passed(&rep, "delta_braided")?;
    for name in ["delta_intertwines", "delta_tensor_compatible", "delta_trivial_is_identity"] {
        let sub = rep.find(name).ok_or(format!("missing {name}"))?;
        passed(sub, name)?;
    }
    let tensor = rep.find("delta_tensor_compatible").unwrap();
    ensure(tensor.subchecks.iter().any(|s| w(s, "dim") == &json!(256)), "tensor identity at 256 dimensions")
}

fn criterion_4() -> Outcome {
    let h = hopf("sym3@GF7")?;
    let f = h.field().clone();
    let (dim, norms) = global_dimension(&h, 0).map_err(|e| e.to_string())?;
    let mut norms: Vec<String> = norms.iter().map(|(_, n)| f.format_scalar(n)).collect();
    norms.sort();
    ensure(norms == ["1", "1", "4"], format!("squared norms {norms:?}"))?;
    ensure(f.format_scalar(&dim) == "6", "dim(C) = 6")?;
    let mut totals = Vec::new();
    for seed in [0, 11] {
        let fd = build_fusion_data(&h, seed).map_err(|e| e.to_string())?;
        let a = build_canonical_algebra(&fd).map_err(|e| e.to_string())?;
        let t = canonical_double_dual_trace(&fd, &a, seed).map_err(|e| e.to_string())?;
        passed(&t.report, "canonical_double_dual_trace")?;
        totals.push(f.format_scalar(&t.total));
    }
    ensure(totals == ["6", "6"], format!("canonical traces {totals:?}"))
}

fn criterion_5() -> Outcome {
    for (t, carrier) in [("k[Z/2]@Q", 2), ("sym3@GF7", 6)] {
        let fd = build_fusion_data(&hopf(t)?, 0).map_err(|e| e.to_string())?;
        let a = build_canonical_algebra(&fd).map_err(|e| e.to_string())?;
        passed(&a.checks, t)?;
        for name in ["unit", "associativity", "equivariance"] {
            let found = a.checks.subchecks.iter().any(|s| s.check.contains(name) && s.passed());
            ensure(found, format!("{t}: {name} self-test"))?;
        }
        ensure(a.carrier_dim == carrier, format!("{t}: carrier dim {}", a.carrier_dim))?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for t in ["sym3@GF7", "k[Z/5]@GF11", "double(sym3)@GF7"] {
        let h = hopf(t)?;
        ensure(is_semisimple(&h).map_err(|e| e.to_string())?, format!("{t}: semisimple"))?;
        passed(&trtr_check(&h, 0).map_err(|e| e.to_string())?, t)?;
    }
    ensure(hopf("double(sym3)@GF7")?.dim() == 36, "double(sym3) has dimension 36")
}

fn criterion_7() -> Outcome {
    let h = hopf("gr_uq_sl2:3:2@GF7")?;
    ensure(h.dim() == 27, "dimension 27")?;
    ensure(is_unimodular(&h).map_err(|e| e.to_string())?, "unimodular")?;
    ensure(!is_semisimple(&h).map_err(|e| e.to_string())?, "not semisimple")?;
    let r = ler_counterexample_check(&h, 0).map_err(|e| e.to_string())?;
    passed(&r, "ler_counterexample")?;
    ensure(w(&r, "representation_dim") == &json!(1), "one-dimensional representation")?;
    ensure(w(&r, "trace") == &json!("2") && w(&r, "trace_of_inverse") == &json!("4"), "Tr(K) = 2, Tr(K⁻¹) = 4")
}

fn criterion_8() -> Outcome {
    for t in ["sweedler@Q", "taft:3:2@GF7", "sym3@GF7"] {
        let r = comparison_check(&hopf(t)?, 0).map_err(|e| e.to_string())?;
        passed(&r, t)?;
        ensure(w(&r, "socle_dim") == &json!(1), format!("{t}: simple socle"))?;
        ensure(w(&r, "socle_character") == w(&r, "alpha"), format!("{t}: socle character is α"))?;
    }
    let r = comparison_check(&hopf("sym3@GF7")?, 0).map_err(|e| e.to_string())?;
    ensure(w(&r, "alpha_is_counit") == &json!(true), "k[S3]: α = ε")
}

fn conjugated(m: &ModuleOverAlgebra, rng: &mut ChaCha8Rng) -> ModuleOverAlgebra {
    let f = m.field().clone();
    let d = m.dim();
    let p = loop {
        let data = (0..d * d).map(|_| f.from_i64(rng.gen_range(-3..=3))).collect();
        let p = Matrix::new(&f, d, d, data).unwrap();
        if p.inverse().is_some() {
            break p;
        }
    };
    let pi = p.inverse().unwrap();
    let action = m.action().iter().map(|a| pi.mul(a).mul(&p)).collect();
    ModuleOverAlgebra::new(m.parent().clone(), d, action).unwrap()
}

fn criterion_9() -> Outcome {
    for (t, expected) in [("trunc:2@Q", "not exact"), ("k[Z/2]@GF7", "exact")] {
        let r = run_suite("exactness", t, &Options::default()).map_err(|e| e.to_string())?;
        ensure(w(&r, "exactness") == &json!(expected), format!("{t}: {}", r.summary()))?;
    }
    for (t, chars) in [("trunc:2@Q", vec![vec![1, 0]]), ("k[Z/2]@GF7", vec![vec![1, 1], vec![1, -1]])] {
        let b = Arc::new(load_algebra(t).map_err(|e| e.to_string())?);
        let f = b.field().clone();
        let mut pool = vec![ModuleOverAlgebra::regular(b.clone())];
        for c in chars {
            let c: Vec<_> = c.iter().map(|&x| f.from_i64(x)).collect();
            pool.push(ModuleOverAlgebra::from_character(b.clone(), &c).map_err(|e| e.to_string())?);
        }
        let alone: Vec<bool> = pool.iter().map(|m| is_projective(m, 0).unwrap()).collect();
        for seed in 0..6u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let picks: Vec<usize> = (0..rng.gen_range(2..=3)).map(|_| rng.gen_range(0..pool.len())).collect();
            let mut sum = pool[picks[0]].clone();
            for &i in &picks[1..] {
                sum = sum.direct_sum(&pool[i]);
            }
            let sum = conjugated(&sum, &mut rng);
            let got = is_projective(&sum, seed).map_err(|e| e.to_string())?;
            let want = picks.iter().all(|&i| alone[i]);
            ensure(got == want, format!("{t}: projectivity of sum {picks:?}"))?;
        }
    }
    Ok(())
}

fn same_structure(a: &HopfAlgebra, b: &HopfAlgebra) -> bool {
    a.mul_tensor() == b.mul_tensor()
        && a.comul_tensor() == b.comul_tensor()
        && a.unit() == b.unit()
        && a.counit() == b.counit()
        && a.antipode() == b.antipode()
}

fn criterion_10() -> Outcome {
    let sweedler = hopf("sweedler@Q")?;
    for seed in 0..20 {
        let (bad, what) = corrupt_constant(&sweedler, seed).map_err(|e| e.to_string())?;
        ensure(!bad.validate().passed(), format!("corruption {seed} of {what} went unnoticed"))?;
    }
    for t in BUILTINS {
        if t.starts_with("trunc") {
            continue;
        }
        let h = hopf(t)?;
        let f = h.field().clone();
        ensure(same_structure(&dual_hopf(&dual_hopf(&h)), &h), format!("{t}: H** = H"))?;
        ensure(left_integrals(&h).len() == 1 && right_integrals(&h).len() == 1, format!("{t}: integrals"))?;
        let s_lambda = h.apply_antipode(&left_integral(&h).map_err(|e| e.to_string())?);
        for b in 0..h.dim() {
            let e = h.basis_elem(b);
            let expect: Vec<_> = s_lambda.iter().map(|c| f.mul(c, &h.counit_of(&e))).collect();
            ensure(h.mul_elems(&s_lambda, &e) == expect, format!("{t}: S(Λ) right integral"))?;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(h.dim() as u64);
        for _ in 0..3 {
            let x: Vec<_> = (0..h.dim()).map(|_| f.from_i64(rng.gen_range(-2..=2))).collect();
            for m in [h.left_mult_matrix(&x), h.antipode().sub(&Matrix::identity(&f, h.dim()))] {
                ensure(m.rank() + m.kernel_basis().cols() == m.cols(), format!("{t}: rank-nullity"))?;
            }
        }
    }
    let opts = Options { seed: 3, ..Options::default() };
    for (suite, t) in [("canonical-algebra", "sym3@GF7"), ("vitia", "sym3@GF7"), ("comparison", "taft:3:2@GF7"), ("exactness", "k[Z/2]@GF7")] {
        let a = run_suite(suite, t, &opts).map_err(|e| e.to_string())?.to_json();
        let b = run_suite(suite, t, &opts).map_err(|e| e.to_string())?.to_json();
        ensure(a == b, format!("{suite} {t}: report not reproducible"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("radford formula on builtins", criterion_1),
        ("factorizable doubles are unimodular", criterion_2),
        ("delta on D(sweedler) regular", criterion_3),
        ("squared norms and dim(C) of k[S3]", criterion_4),
        ("canonical algebra self-tests", criterion_5),
        ("trtr on semisimple algebras", criterion_6),
        ("counterexample in gr u_q(sl2)", criterion_7),
        ("socle of the projective cover", criterion_8),
        ("exactness and projectivity", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        match run() {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({:.1?})", i + 1, start.elapsed()),
            Err(e) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {e}", i + 1);
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
