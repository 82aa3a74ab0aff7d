//! End-to-end CLI behavior: exit codes, star output, JSON determinism.

use std::process::Command;

fn sphmin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sphmin"))
}

#[test]
fn stars_output_and_exit_zero() {
    let out = sphmin()
        .args(["stars", "--n", "2", "--k", "1", "--w", "e"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "\
.     *     .     *     .     *     .     *
*  .  .  =  .  .  *  -  *  .  . +/- .  .  *
*     .     *     .     .     *     .     *
.     *     *     .     *     .     .     *
"
    );
}

#[test]
fn bad_input_exits_3() {
    let out = sphmin().args(["basis", "--pair", "slsp"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = sphmin()
        .args(["identity", "--pair", "slsp", "--n", "2", "--k", "1", "--w", "t9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unsupported_exits_4() {
    let out = sphmin()
        .args(["basis", "--pair", "slsp", "--n", "99"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    // no matrix model for this pair
    let out = sphmin()
        .args(["identity", "--pair", "b3g2", "--b", "w3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn claims_pass_for_e6f4() {
    let out = sphmin().args(["claims", "--pair", "e6f4"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS]"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn tables_golden_diff_passes() {
    let out = sphmin()
        .args(["tables", "--pair", "b3g2", "--expect", "golden"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("matches the embedded table"));
}

#[test]
fn json_reports_are_deterministic_modulo_runtime() {
    let dir = std::env::temp_dir();
    let p1 = dir.join("sphmin_cli_test_a.json");
    let p2 = dir.join("sphmin_cli_test_b.json");
    for p in [&p1, &p2] {
        let out = sphmin()
            .args([
                "identity", "--pair", "slsp", "--n", "2", "--k", "1", "--trials", "25",
                "--seed", "11", "--json",
            ])
            .arg(p)
            .output()
            .unwrap();
        assert!(out.status.success());
    }
    let mut a: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&p1).unwrap()).unwrap();
    let mut b: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&p2).unwrap()).unwrap();
    for doc in [&mut a, &mut b] {
        for rep in doc["reports"].as_array_mut().unwrap() {
            rep["runtime_ms"] = serde_json::json!(0);
        }
    }
    assert_eq!(a, b);
    assert_eq!(a["schema"], 1);
    assert_eq!(a["seed"], 11);
    let _ = std::fs::remove_file(p1);
    let _ = std::fs::remove_file(p2);
}

#[test]
fn seed_env_override() {
    let out = sphmin()
        .env("SPHMIN_SEED", "123")
        .args(["identity", "--pair", "slsp", "--n", "2", "--k", "1", "--trials", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn minor_on_matrix_file() {
    let dir = std::env::temp_dir();
    let path = dir.join("sphmin_cli_test_matrix.txt");
    // x_1(2) x_2(1) in SL4: integer unipotent with det 1
    std::fs::write(&path, "1 2 0 0\n0 1 1 0\n0 0 1 0\n0 0 0 1\n").unwrap();
    let out = sphmin()
        .args(["minor", "--pair", "slsp", "--n", "2", "--k", "1", "--w", "e", "--matrix"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("= 1"), "{text}");
    // not a group element: determinant 2
    std::fs::write(&path, "2 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n").unwrap();
    let out = sphmin()
        .args(["minor", "--pair", "slsp", "--n", "2", "--k", "1", "--matrix"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let _ = std::fs::remove_file(path);
}

#[test]
fn jobs_fanout_matches_sequential() {
    let dir = std::env::temp_dir();
    let p1 = dir.join("sphmin_cli_jobs1.json");
    let p2 = dir.join("sphmin_cli_jobs4.json");
    for (p, jobs) in [(&p1, "1"), (&p2, "4")] {
        let out = sphmin()
            .args([
                "identity", "--pair", "diag", "--type", "A2", "--b", "b1", "--trials", "10",
                "--seed", "3", "--jobs", jobs, "--json",
            ])
            .arg(p)
            .output()
            .unwrap();
        assert!(out.status.success());
    }
    let mut a: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&p1).unwrap()).unwrap();
    let mut b: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&p2).unwrap()).unwrap();
    for doc in [&mut a, &mut b] {
        for rep in doc["reports"].as_array_mut().unwrap() {
            rep["runtime_ms"] = serde_json::json!(0);
        }
    }
    assert_eq!(a, b);
    let _ = std::fs::remove_file(p1);
    let _ = std::fs::remove_file(p2);
}
