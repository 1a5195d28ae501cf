use std::process::{Command, Output};

fn bdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bdeg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn degree_json_uses_decimal_strings() {
    let o = bdeg(&[
        "degree", "--family", "upq", "--p", "4", "--q", "5", "--k", "2", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["degree"], "50");
    assert_eq!(v["q_count"], "1");
    assert_eq!(v["conjectural"], false);
}

#[test]
fn degree_csv_has_header_and_row() {
    let o = bdeg(&[
        "degree", "--family", "ostar", "--n", "3", "--k", "1", "--sigma", "1", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("family,k,sigma,q_count,p_count,degree"));
    assert!(lines[1].contains(",2,1,2,"));
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["degree", "--family", "ostar", "--n", "3", "--k", "1", "--sigma", "1,1"][..],
        &["degree", "--family", "upq", "--p", "2", "--k", "1"][..],
        &["degree", "--family", "ostar", "--n", "3", "--k", "1", "--sigma", "1,2"][..],
        &["check", "conjecture", "--n", "2", "--k", "2"][..],
        &["degree", "--family", "e6", "--k", "1"][..],
        &["verify", "--only", "nothing"][..],
        &["frobnicate"][..],
    ] {
        assert_eq!(bdeg(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn hilbert_rendering() {
    let o = bdeg(&["hilbert", "--family", "so-odd", "--n", "3", "--k", "1"]);
    assert!(stdout(&o).starts_with("(1+t)/(1-t)^4"));
    let o = bdeg(&["hilbert", "--family", "e6", "--k", "2"]);
    assert!(stdout(&o).starts_with("1/(1-t)^16"));
}

#[test]
fn conjecture_probe_is_flagged() {
    let o = bdeg(&["check", "conjecture", "--n", "3", "--k", "4", "--sigma", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("CONJECTURAL Mp(6,R) k=4 sigma=(1): #Q = 3 #P = 1 value = 3"));
}

#[test]
fn enumerate_and_checks() {
    let o = bdeg(&["enumerate", "facets", "--family", "mp", "--n", "3", "--k", "1"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = bdeg(&[
        "enumerate",
        "q",
        "--family",
        "ostar",
        "--n",
        "3",
        "--k",
        "1",
        "--sigma",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    let o = bdeg(&[
        "enumerate",
        "p",
        "--family",
        "upq",
        "--p",
        "4",
        "--q",
        "5",
        "--k",
        "2",
        "--limit",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(2));
    for args in [
        &["check", "theta", "--family", "upq", "--p", "3", "--q", "4", "--k", "2"][..],
        &["check", "not", "--family", "mp", "--n", "2", "--k", "1", "--sigma", "1"][..],
        &[
            "check",
            "collapse",
            "--family",
            "upq",
            "--p",
            "2",
            "--q",
            "2",
            "--k",
            "3",
            "--sigma-plus",
            "1",
        ][..],
        &[
            "check",
            "exceptional",
            "--family",
            "e7",
            "--k",
            "3",
            "--a",
            "1",
            "--b",
            "2",
        ][..],
    ] {
        assert_eq!(bdeg(args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn verify_only_restricts() {
    let o = bdeg(&["verify", "--only", "pinned,width", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["pinned", "width"]);
}
