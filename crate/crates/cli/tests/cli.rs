use std::process::{Command, Output};

fn adjcore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adjcore")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn ideal_operations() {
    let out = adjcore(&["adjoint", "--ideal", "x^7,x^3*y,y^2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "x^3,y");
    assert_eq!(stdout(&adjcore(&["closure", "--ideal", "x^3,y^2"])).trim(), "x^3,x^2*y,y^2");
    assert_eq!(stdout(&adjcore(&["core", "--ideal", "x^2,x*y,y^3"])).trim(), "x^3,x^2*y,x*y^2,y^4");
    assert_eq!(stdout(&adjcore(&["colength", "--ideal", "x*y, x^2 + y^3"])).trim(), "5");
    assert_eq!(stdout(&adjcore(&["multiplicity", "--a", "x*y+x^3", "--b", "x*y+y^3"])).trim(), "6");
    assert_eq!(stdout(&adjcore(&["multiplicity", "--ideal", "x^3,x*y,y^4"])).trim(), "7");
}

#[test]
fn mixed_e1_with_joint_reduction() {
    let ok = adjcore(&["mixed-e1", "--ideal", "x^2,x*y,y^3", "--ideal2", "x^3,x*y,y^2", "--a", "x^2", "--b", "y^2"]);
    assert!(ok.status.success());
    assert!(stdout(&ok).starts_with("4\n"));
    let bad = adjcore(&["mixed-e1", "--ideal", "x^2,x*y,y^3", "--ideal2", "x^3,x*y,y^2", "--a", "x^2", "--b", "x^3"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn point_basis_json_shape() {
    let out = adjcore(&["point-basis", "--ideal", "x^2,x*y,y^3", "--json"]);
    let compact: String = stdout(&out).split_whitespace().collect();
    assert_eq!(compact, r#"{"path":"","order":2,"children":[{"path":"Y","order":1,"children":[]}]}"#);
}

#[test]
fn exit_codes() {
    assert_eq!(adjcore(&["colength", "--ideal", "x^2,,"]).status.code(), Some(2));
    assert_eq!(adjcore(&["verify", "ex52", "--u", "2"]).status.code(), Some(2));
    assert_eq!(adjcore(&["verify", "hd", "--ideal", "x^3,y^2"]).status.code(), Some(2));
    assert_eq!(adjcore(&["verify", "hd", "--ideal", "x^3,y^2", "--closure"]).status.code(), Some(0));
    assert_eq!(adjcore(&["core", "--ideal", "x^2,y^2"]).status.code(), Some(2));
    assert_eq!(adjcore(&["verify", "ex51", "--r", "2", "--s", "3", "--n", "4"]).status.code(), Some(0));
}

#[test]
fn suites_pass_and_are_deterministic() {
    let args = [
        "verify", "sec4", "--ideal", "x^2,x*y,y^3", "--ideal2", "x^3,x*y,y^2", "--r", "2", "--s", "2", "--a", "x^2",
        "--b", "y^2", "--json", "--no-timing",
    ];
    let first = adjcore(&args);
    assert!(first.status.success());
    assert_eq!(stdout(&first), stdout(&adjcore(&args)));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    let reports = reports.as_array().unwrap();
    assert!(reports.iter().all(|r| r["passed"] == true && r["runtime_ms"] == 0));
    let claims: Vec<_> = reports.iter().map(|r| r["claim_id"].as_str().unwrap()).collect();
    assert!(claims.windows(2).all(|w| w[0] <= w[1]));
    assert!(claims.contains(&"core_product.joint_reduction"));

    let family = adjcore(&["verify", "family", "--u", "3", "--json", "--no-timing"]);
    assert!(family.status.success());
    let corpus = ["verify", "corpus", "--seed", "3", "--count", "10", "--pairs", "2", "--json", "--no-timing"];
    let a = adjcore(&corpus);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&adjcore(&corpus)));
}
