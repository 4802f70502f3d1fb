use std::process::{Command, Output};

fn shi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shi"))
        .args(args)
        .output()
        .expect("run shi")
}

fn stdout(args: &[&str]) -> String {
    let out = shi(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    shi(args).status.code().unwrap()
}

#[test]
fn catalan_single_and_table() {
    assert_eq!(stdout(&["catalan", "A3"]), "14\n");
    let csv = stdout(&["catalan", "A3", "B2", "G2", "F4", "--format", "csv"]);
    let last: Vec<&str> = csv.lines().map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(last, ["catalan", "14", "6", "8", "105"]);
}

#[test]
fn classify_example() {
    let out = stdout(&["classify", "B2", "--point", "1/4,2/5"]);
    assert!(out.starts_with("{a1+2a2}"), "{out}");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["classify", "B2", "--point", "1/4,2/5", "-f", "json"])).unwrap();
    assert_eq!(json["antichain"], serde_json::json!([3]));
}

#[test]
fn float_points_are_rejected() {
    assert_eq!(code(&["classify", "B2", "--point", "0.25,0.4"]), 1);
    assert_eq!(code(&["classify", "B2", "--point", "1e-1,1/2"]), 1);
}

#[test]
fn domain_errors_exit_two() {
    // on a hyperplane
    assert_eq!(code(&["classify", "B2", "--point", "1/2,1/2"]), 2);
    assert_eq!(code(&["classify", "B2", "--point", "0,1"]), 2);
    // outside the dominant chamber
    assert_eq!(code(&["classify", "B2", "--point", "-1/2,1/2"]), 2);
    // comparable roots
    assert_eq!(code(&["witness", "B2", "--antichain", "0,3"]), 2);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&["frobnicate", "A2"]), 1);
    assert_eq!(code(&["roots", "Z3"]), 1);
    assert_eq!(code(&["roots", "D2"]), 1);
    assert_eq!(code(&["zeta", "A2", "--format", "dot"]), 1);
    assert_eq!(code(&["classify", "B2", "--point", "1/4"]), 1);
    assert_eq!(code(&["witness", "B2"]), 1);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn witness_round_trips_through_classify() {
    let reports: serde_json::Value =
        serde_json::from_str(&stdout(&["witness", "B3", "--all", "-f", "json"])).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 20);
    for r in reports {
        let point: Vec<&str> = r["point"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
        let back: serde_json::Value = serde_json::from_str(&stdout(&[
            "classify",
            "B3",
            "--point",
            &point.join(","),
            "-f",
            "json",
        ]))
        .unwrap();
        assert_eq!(back["antichain"], r["antichain"]);
    }
}

#[test]
fn witness_rank_guard() {
    assert_eq!(code(&["witness", "A7", "--antichain", ""]), 2);
    assert_eq!(code(&["witness", "A7", "--antichain", "", "--allow-large"]), 0);
}

#[test]
fn matrices() {
    assert_eq!(stdout(&["zeta", "A1", "-f", "csv"]), "1,1\n0,1\n");
    assert_eq!(stdout(&["moebius", "A1", "-f", "csv"]), "1,-1\n0,1\n");
    let zeta: Vec<Vec<i64>> = serde_json::from_str(&stdout(&["zeta", "A3", "-f", "json"])).unwrap();
    assert_eq!(zeta.len(), 14);
    let table = stdout(&["multable", "A2", "-f", "csv"]);
    assert_eq!(table.lines().count(), 5);
}

#[test]
fn qcatalan_and_filtration() {
    assert_eq!(stdout(&["qcatalan", "A2"]), "1 + q + 2q^2 + q^3\n");
    let json: serde_json::Value = serde_json::from_str(&stdout(&["filtration", "A3", "-f", "json"])).unwrap();
    assert_eq!(json["ranks"], serde_json::json!([1, 7, 13, 14]));
    assert_eq!(json["lattice_certified"], true);
}

#[test]
fn graph_exports() {
    let dot = stdout(&["roots", "G2", "-f", "dot"]);
    assert!(dot.starts_with("digraph"));
    let dot = stdout(&["antichains", "A2", "-f", "dot"]);
    assert!(dot.contains("->"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["roots", "E8", "-f", "json"])).unwrap();
    assert_eq!(json["roots"].as_array().unwrap().len(), 120);
    assert_eq!(json["coxeter_number"], 30);
}

#[test]
fn verify_passes() {
    assert_eq!(code(&["verify", "B3"]), 0);
    assert_eq!(code(&["verify", "G2", "-f", "json"]), 0);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["antichains", "D4", "-f", "json"],
        vec!["witness", "B3", "--all", "-f", "json"],
        vec!["multable", "B3", "-f", "csv"],
    ] {
        let a = dir.path().join("a");
        let b = dir.path().join("b");
        for path in [&a, &b] {
            let mut full = args.clone();
            full.extend(["-o", path.to_str().unwrap()]);
            assert_eq!(code(&full), 0);
        }
        let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
        assert!(!a.is_empty());
        assert_eq!(a, b, "{args:?}");
    }
}
