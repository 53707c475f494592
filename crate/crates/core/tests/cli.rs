use std::process::{Command, Output};

use serde_json::Value;

fn klein_tc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klein-tc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn certificate(args: &[&str]) -> (i32, Value) {
    let o = klein_tc(args);
    let json = serde_json::from_str(&stdout(&o)).expect("certificate is JSON");
    (o.status.code().expect("exit code"), json)
}

fn without_elapsed(mut v: Value) -> Value {
    v["final"].as_object_mut().expect("final block").remove("elapsed_ms");
    v
}

#[test]
fn certify_genus_two_exits_zero() {
    let (code, v) = certificate(&["certify", "--genus", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["final"]["certified"], true);
    assert_eq!(v["final"]["genus"], 2);
    let checkpoints = v["checkpoints"].as_array().unwrap();
    assert!(checkpoints.iter().all(|c| c["status"] == "pass"));
    for c in checkpoints {
        assert!(matches!(c["expected_source"].as_str(), Some("reference_table" | "derived_oracle")));
    }
}

#[test]
fn certify_genus_seven_reports_the_induction_chain() {
    let (code, v) = certificate(&["certify", "--genus", "7"]);
    assert_eq!(code, 0);
    let verdict = v["final"]["verdict"].as_str().unwrap();
    assert!(verdict.contains("7 -> 6 -> 5 -> 4 -> 3 -> 2"), "{verdict}");
    for g in 3..=7 {
        for name in [format!("phi_chain_map_{g}"), format!("homology_{g}"), format!("h2_isomorphism_{g}")] {
            assert!(v["checkpoints"].as_array().unwrap().iter().any(|c| c["checkpoint"] == name.as_str()), "{name}");
        }
    }
}

#[test]
fn certificate_json_is_deterministic_apart_from_elapsed_time() {
    for genus in ["2", "4"] {
        let (_, a) = certificate(&["certify", "--genus", genus]);
        let (_, b) = certificate(&["certify", "--genus", genus]);
        assert_eq!(serde_json::to_string(&without_elapsed(a)).unwrap(), serde_json::to_string(&without_elapsed(b)).unwrap());
    }
}

#[test]
fn output_flag_writes_the_certificate_file() {
    let path = std::env::temp_dir().join(format!("klein-tc-cert-{}.json", std::process::id()));
    let o = klein_tc(&["certify", "--output", path.to_str().unwrap(), "--verbose"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("TC(K) ≥ 4 certified"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("[ok  ] s_class_nonzero"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["final"]["certified"], true);
    let _ = std::fs::remove_file(path);
}

#[test]
fn mutations_fail_at_their_checkpoint() {
    let cases = [
        ("T7", "nu4_table"),
        ("T24", "nu4_table"),
        ("omega3", "omega_grid"),
        ("jtable:3:1", "j_table"),
        ("jtable:1:2", "j_table"),
        ("cubetable:1:2", "cube_table"),
        ("cubetable:3:4", "cube_table"),
    ];
    for (mutation, checkpoint) in cases {
        let (code, v) = certificate(&["certify", "--genus", "2", "--mutate", mutation]);
        assert_eq!(code, 1, "{mutation}");
        assert_eq!(v["final"]["certified"], false, "{mutation}");
        assert_eq!(v["final"]["first_failure"], checkpoint, "{mutation}");
    }
}

#[test]
fn mutation_propagates_through_the_induction() {
    let (code, v) = certificate(&["certify", "--genus", "3", "--mutate", "T7"]);
    assert_eq!(code, 1);
    assert_eq!(v["final"]["first_failure"], "base_case");
}

#[test]
fn invalid_arguments_exit_two() {
    for args in [
        &["certify", "--genus", "1"][..],
        &["certify", "--genus", "0"],
        &["certify", "--genus", "two"],
        &["certify", "--mutate", "nonsense"],
        &["certify", "--mutate", "T25"],
        &["show", "ttable"],
        &["show", "resolution", "--genus", "1"],
        &["selftest", "--iterations", "0"],
        &["frobnicate"],
        &[],
    ] {
        assert_eq!(klein_tc(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn show_output_is_byte_stable() {
    let cases = [
        (&["show", "omega"][..], include_str!("snapshots/omega.txt")),
        (&["show", "tterms"], include_str!("snapshots/tterms.txt")),
        (&["show", "jtable"], include_str!("snapshots/jtable.txt")),
        (&["show", "cubetable"], include_str!("snapshots/cubetable.txt")),
        (&["show", "resolution"], include_str!("snapshots/resolution_genus2.txt")),
        (&["show", "resolution", "--genus", "3"], include_str!("snapshots/resolution_genus3.txt")),
    ];
    for (args, expected) in cases {
        let o = klein_tc(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o), expected, "{args:?}");
    }
}

#[test]
fn show_shapes() {
    assert_eq!(stdout(&klein_tc(&["show", "omega"])).lines().count(), 24);
    assert_eq!(stdout(&klein_tc(&["show", "tterms"])).lines().count(), 24);
    let j = stdout(&klein_tc(&["show", "jtable"]));
    let rows: Vec<&str> = j.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.split(" | ").count() == 6));
}

#[test]
fn selftest_is_reproducible_and_lists_every_suite() {
    let a = klein_tc(&["selftest", "--seed", "42", "--iterations", "1000"]);
    let b = klein_tc(&["selftest", "--seed", "42", "--iterations", "1000"]);
    assert_eq!(a.status.code(), Some(0));
    let strip = |s: String| s.lines().filter(|l| !l.contains(" suites, ")).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(stdout(&a)), strip(stdout(&b)));
    let text = stdout(&a);
    assert!(text.contains("nuPower≡cup"));
    for (name, _) in klein_tc::selftest::SUITES {
        assert!(text.contains(&format!("pass {name} ")), "{name}");
    }
}
