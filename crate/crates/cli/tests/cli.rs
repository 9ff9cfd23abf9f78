use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;

fn corona() -> Command {
    let mut c = Command::cargo_bin("corona").unwrap();
    c.env_remove("CORONA_SPECTRA_TOL");
    c
}

fn json(args: &[&str]) -> Value {
    let out = corona()
        .args(args)
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    serde_json::from_slice(&out).unwrap()
}

#[test]
fn product_edge_list_on_stdout() {
    let out = corona()
        .args(["product", "cycle:4", "cycle:3", "--out", "-"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let text = String::from_utf8(out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("16 52"));
    assert_eq!(lines.count(), 52);
}

#[test]
fn product_to_file_round_trips_through_graph6() {
    let dir = std::env::temp_dir().join(format!("corona-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.g6");
    let path = path.to_str().unwrap();
    let v = json(&[
        "product",
        "complete:2",
        "complete:1",
        "--out",
        path,
        "--format",
        "g6",
    ]);
    assert_eq!(v["vertices"], 4);
    assert_eq!(v["edges"], 5);
    // K4 minus an edge read back from the file
    let c = json(&["counts", path, "complete:1"]);
    assert_eq!(c["vertices"], 8);
    // e1 + n1 e2 + 2 e1 n2 + n1 n2 with e1 = 5, n1 = 4, n2 = 1, e2 = 0
    assert_eq!(c["edges"], 5 + 2 * 5 + 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn dot_output() {
    corona()
        .args(["product", "complete:1", "complete:1", "--format", "dot"])
        .assert()
        .success()
        .stdout(predicate::str::starts_with("graph G {").and(predicate::str::contains("0 -- 1;")));
}

#[test]
fn laplacian_spectrum_of_desk_fixture() {
    corona()
        .args([
            "spectrum",
            "--kind",
            "laplacian",
            "--method",
            "formula",
            "complete:2",
            "complete:1",
        ])
        .assert()
        .success()
        .stdout("[0,2,4,4]\n");
}

#[test]
fn formula_and_direct_spectra_agree() {
    for kind in ["adjacency", "laplacian", "signless"] {
        let f = json(&[
            "spectrum", "--kind", kind, "--method", "formula", "cycle:4", "cycle:3",
        ]);
        let d = json(&[
            "spectrum", "--kind", kind, "--method", "direct", "cycle:4", "cycle:3",
        ]);
        let (f, d) = (f.as_array().unwrap(), d.as_array().unwrap());
        assert_eq!(f.len(), 16);
        for (a, b) in f.iter().zip(d) {
            assert!(
                (a.as_f64().unwrap() - b.as_f64().unwrap()).abs() < 1e-10,
                "{kind}"
            );
        }
    }
}

#[test]
fn spanning_trees_of_k4() {
    corona()
        .args(["spanning-trees", "complete:1", "complete:3"])
        .assert()
        .success()
        .stdout("{\"formula\":16,\"direct\":16}\n");
}

#[test]
fn kirchhoff_both_methods() {
    for method in ["formula", "direct"] {
        let v = json(&["kirchhoff", "complete:2", "complete:1", "--method", method]);
        assert_eq!(v["kirchhoff"], 4);
    }
}

#[test]
fn coronal_and_charpoly() {
    let v = json(&["coronal", "--kind", "adjacency", "path:3"]);
    assert_eq!(v["coronal"], "(3x + 4)/(x^2 - 2)");
    assert_eq!(v["d"], 2);
    let v = json(&["charpoly", "--kind", "laplacian", "complete:3"]);
    assert_eq!(v["polynomial"], "x^3 - 6x^2 + 9x");
    assert_eq!(v["coefficients"], serde_json::json!([0, 9, -6, 1]));
}

#[test]
fn energy_cospectral_integral() {
    assert_eq!(json(&["energy", "g6:C~"])["energy"], 6);
    let v = json(&[
        "cospectral",
        "--kind",
        "adjacency",
        "star:4",
        "cycle:4+complete:1",
    ]);
    assert_eq!(v["cospectral"], true);
    let v = json(&[
        "cospectral",
        "--kind",
        "laplacian",
        "star:4",
        "cycle:4+complete:1",
    ]);
    assert_eq!(v["cospectral"], false);
    let v = json(&["integral", "complete:4"]);
    assert_eq!(v["integral"], true);
    assert_eq!(v["integer_eigenvalues"], serde_json::json!([-1, -1, -1, 3]));
    assert_eq!(json(&["integral", "path:3"])["integral"], false);
}

#[test]
fn equienergetic_pair() {
    let v = json(&[
        "equienergetic-pair",
        "complete:1",
        "cycle:6",
        "circulant:6:2",
    ]);
    assert_eq!(v["energy_a"], v["energy_b"]);
    assert_eq!(v["cospectral"], false);
    corona()
        .args(["equienergetic-pair", "complete:1", "cycle:6", "cycle:5"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("HypothesisViolated"));
}

#[test]
fn csv_output() {
    corona()
        .args([
            "spanning-trees",
            "complete:1",
            "complete:3",
            "--format",
            "csv",
        ])
        .assert()
        .success()
        .stdout("formula,direct\n16,16\n");
}

#[test]
fn computation_errors_exit_one_with_error_name() {
    corona()
        .args(["spectrum", "--kind", "laplacian", "path:3", "complete:2"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("NotRegular"));
    corona()
        .args(["counts", "cycle:2", "complete:1"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("BadFamilyParams"));
    corona()
        .args(["energy", "g6:C~~"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("MalformedGraph6"));
}

#[test]
fn usage_errors_exit_two() {
    corona()
        .args(["spectrum", "--kind", "weird", "cycle:4", "cycle:3"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("--kind"));
    corona().args(["verify", "--n1-max", "0"]).assert().code(2);
    corona().args(["nonsense"]).assert().code(2);
    corona()
        .args(["verify", "--pairs", "1"])
        .env("CORONA_SPECTRA_TOL", "-1")
        .assert()
        .code(2)
        .stderr(predicate::str::contains("CORONA_SPECTRA_TOL"));
}

#[test]
fn verify_is_byte_identical_across_runs() {
    let run = |extra: &[&str]| {
        let mut args = vec!["verify", "--seed", "42"];
        args.extend_from_slice(extra);
        corona()
            .args(&args)
            .assert()
            .success()
            .get_output()
            .stdout
            .clone()
    };
    let a = run(&[]);
    assert_eq!(a, run(&[]));
    assert_eq!(a, run(&["--sequential"]));
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(v["fail_count"], 0);
    assert!(v.get("wall_time").is_none());
    let n = v["entries"].as_array().unwrap().len();
    assert_eq!(v["pass_count"].as_u64().unwrap() as usize, n);
}

#[test]
fn verify_minimal_and_csv() {
    let v = json(&[
        "verify", "--seed", "7", "--n1-max", "1", "--n2-max", "1", "--pairs", "1",
    ]);
    let checks: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["check"].as_str().unwrap())
        .collect();
    assert!(checks.contains(&"adjacency-spectrum"));
    corona()
        .args(["verify", "--pairs", "2", "--format", "csv"])
        .assert()
        .success()
        .stdout(predicate::str::starts_with("pair,g1,g2,check,"));
}

#[test]
fn tolerance_override_is_reported() {
    let v: Value = serde_json::from_slice(
        &corona()
            .args(["verify", "--pairs", "2"])
            .env("CORONA_SPECTRA_TOL", "1e-6")
            .assert()
            .success()
            .get_output()
            .stdout,
    )
    .unwrap();
    assert_eq!(v["tolerance"].as_f64(), Some(1e-6));
}
