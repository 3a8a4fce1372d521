//! End-to-end checks of the command-line surface: determinism of the
//! structured output, JSON round-trips, and usage errors.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodgescan"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn mult_human_output() {
    let out = run(&["mult", "--k", "3", "--p", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("mult(sigma_3, K(2)) = 0"), "{text}");
}

#[test]
fn json_output_is_deterministic_and_round_trips() {
    for args in [
        vec![
            "--format", "json", "tables", "SP4", "-v", "0,1", "--para", "3",
        ],
        vec![
            "--format",
            "json",
            "verdict",
            "genus2_curve",
            "-n",
            "2",
            "--para",
            "3",
        ],
        vec!["--format", "json", "mult", "--k", "4", "--p", "7"],
        vec!["--format", "json", "dims", "--k", "12", "--n", "1"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "byte-identical reruns for {args:?}");
        let value: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        let re = serde_json::to_string_pretty(&value).unwrap();
        let again: serde_json::Value = serde_json::from_str(&re).unwrap();
        assert_eq!(value, again, "round trip for {args:?}");
        assert_eq!(value["schema_version"], 1);
    }
}

#[test]
fn verdict_json_structure() {
    let out = run(&[
        "--format",
        "json",
        "verdict",
        "genus2_curve",
        "-n",
        "2",
        "--para",
        "7",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["fiber"], "Genus2Curve");
    assert_eq!(v["gamma"], "K(7)");
    let cells = v["cells"].as_array().unwrap();
    let cell22 = cells
        .iter()
        .find(|c| c["p"] == 2 && c["i"] == 2)
        .expect("(2,2) cell present");
    assert_eq!(cell22["status"]["HodgeClasses"]["dim"], 2);
    assert_eq!(cell22["status"]["HodgeClasses"]["rational"], true);
}

#[test]
fn usage_errors_name_valid_values() {
    let out = run(&["tables", "SU99", "-v", "1,0"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("SU21, SU31 or SP4"), "{err}");

    let out = run(&["verdict", "nonsense_family"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("picard_curve"), "{err}");

    let out = run(&["dims", "--k", "5", "--n", "3"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("even weights"), "{err}");

    let out = run(&["mult", "--k", "2", "--p", "3"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("k >= 3"), "{err}");
}

#[test]
fn fixtures_check_honors_env_override() {
    let out = run(&["fixtures-check"]);
    assert!(out.status.success());

    let dir = std::env::temp_dir().join("hodgescan_fixture_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.csv");
    std::fs::write(
        &path,
        "weight,level,restriction,al_sign,dim,provenance\n12,1,full,none,7,nowhere\n",
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_hodgescan"))
        .args(["fixtures-check"])
        .env("HODGESCAN_FIXTURES", &path)
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("mismatch"), "{err}");
}

#[test]
fn tables_rejects_inconsistent_preset() {
    // the untwisted standard system of SU(2,1) has thirds in its spectrum
    let out = run(&["tables", "SU21", "-v", "1,0", "--preset", "none"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("half-integral") || err.contains("parity"),
        "{err}"
    );
}
