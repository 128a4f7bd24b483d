use std::process::{Command, Output};

fn qcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcat")).args(args).output().expect("run qcat")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn enumerate_is_deterministic() {
    let args = ["tableaux", "enumerate", "--shape", "3,3,1", "--max-entry", "4"];
    let (a, b) = (qcat(&args), qcat(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["count"], 36);
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 36);
}

#[test]
fn hecke_verify_records_orientation() {
    let out = qcat(&["hecke", "verify", "--n", "2", "--r", "2", "--c", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["printed_orientation_holds"], false);
    assert_eq!(v["oracle_orientation"], -1);
}

#[test]
fn verify_all_passes() {
    let out = qcat(&["verify-all", "--max-n", "4", "--max-k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn usage_errors_name_the_flag() {
    let cases: [(&[&str], &str); 5] = [
        (&["tableaux", "enumerate", "--shape", "1,2", "--max-entry", "3"], "--shape"),
        (&["tableaux", "enumerate", "--shape", "x", "--max-entry", "3"], "--shape"),
        (&["module", "build", "--kind", "wedge", "--k", "3", "--r", "3"], "--r"),
        (&["weights", "phi", "--label", "1,5", "--k", "3"], "--label"),
        (&["hecke", "spectrum", "--n", "2", "--r", "2", "--c", "0", "--h", "3"], "--h"),
    ];
    for (args, flag) in cases {
        let out = qcat(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains(flag), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn out_writes_file_and_indent_pretty_prints() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("phi.json");
    let out = qcat(&["weights", "phi", "--label", "1,3,2,2", "--k", "3", "--out", path.to_str().unwrap(), "--json-indent", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "[\n 1,\n 2,\n 1\n]\n");
}

#[test]
fn closure_matches_tableau_count() {
    let v = json(&qcat(&["module", "closure", "--shape", "2,1", "--k", "3"]));
    assert_eq!(v["closure_dim"], v["semistandard_count"]);
    assert_eq!(v["closure_dim"], 8);
}

#[test]
fn parabolic_reports_stable_spans() {
    let out = qcat(&["k0", "parabolic", "--shape", "1,1", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["semistandard_closed"], true);
    assert_eq!(v["naive_semistandard_closed"], false);
    assert_eq!(v["report"]["passed"], true);
}
