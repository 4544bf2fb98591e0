use std::process::{Command, Output};

fn hopfcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcheck")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn radford_on_sweedler_passes() {
    let o = hopfcheck(&["check", "radford", "sweedler"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"verdict\": \"pass\""));
    assert!(!o.stderr.is_empty());
}

#[test]
fn factorizable_unimodular_on_taft() {
    let o = hopfcheck(&["check", "factorizable-unimodular", "taft:3:2@GF7"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn ler_counterexample_is_exhibited() {
    let o = hopfcheck(&["check", "ler-counterexample", "gr_uq_sl2:3:2@GF7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witnesses"]["trace"], "2");
    assert_eq!(v["witnesses"]["trace_of_inverse"], "4");
}

#[test]
fn failed_check_exits_one() {
    let o = hopfcheck(&["check", "exactness", "trunc:2@Q"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not exact"));
}

#[test]
fn invalid_input_exits_three() {
    for args in [
        &["check", "radford", "nosuch@Q"][..],
        &["check", "trtr", "sweedler"],
        &["check", "delta-braided", "sweedler"],
        &["check", "factorizable-unimodular", "sym3@GF7", "--max-dim", "100"],
        &["validate", "/nonexistent/file.json"],
    ] {
        let o = hopfcheck(args);
        assert_eq!(o.status.code(), Some(3), "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert!(v["witnesses"]["error"].is_string(), "{args:?}");
    }
}

#[test]
fn unknown_suite_is_rejected_by_the_parser() {
    let o = hopfcheck(&["check", "nosuch", "sweedler"]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn reports_are_byte_identical_per_seed() {
    for suite in ["canonical-algebra", "vitia", "comparison"] {
        let a = hopfcheck(&["check", suite, "sym3@GF7", "--seed", "7"]);
        let b = hopfcheck(&["check", suite, "sym3@GF7", "--seed", "7"]);
        assert_eq!(a.status.code(), Some(0), "{suite}");
        assert_eq!(a.stdout, b.stdout, "{suite}");
    }
}

#[test]
fn double_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ds.json");
    let p = path.to_str().unwrap();
    let o = hopfcheck(&["double", "sweedler", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let o = hopfcheck(&["validate", p]);
    assert_eq!(o.status.code(), Some(0));
    let o = hopfcheck(&["check", "radford", p]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn double_without_out_is_invalid() {
    let o = hopfcheck(&["double", "sweedler"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn report_lists_sweedler_invariants() {
    let o = hopfcheck(&["report", "sweedler"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let w = &v["witnesses"];
    assert_eq!(w["dim"], 4);
    assert_eq!(w["antipode_order"], 4);
    assert_eq!(w["alpha"][1], "-1");
    assert_eq!(w["a"], serde_json::json!(["0", "1", "0", "0"]));
    assert_eq!(w["unimodular"], false);
    assert_eq!(w["semisimple"], false);
}

#[test]
fn text_format_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = hopfcheck(&["check", "radford", "k[Z/2]@Q", "--format", "text", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("radford_s4: pass"));
    let saved: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(saved["verdict"], "pass");
}
