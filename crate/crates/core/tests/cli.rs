use std::io::Write;

use lagdelta::cli::run;

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn lagdelta(args: &[&str]) -> (i32, String) {
    run(std::iter::once("lagdelta").chain(args.iter().copied()))
}

#[test]
fn converts_the_example_both_ways() {
    let (code, out) = lagdelta(&["conv", "l2d", &fixture("example.lagr")]);
    assert_eq!((code, out.trim_end()), (0, "{1} {2} {1,2}"));
    let (code, out) = lagdelta(&["conv", "d2l", &fixture("example.dm")]);
    assert_eq!((code, out.trim_end()), (0, "1+1^+2^\n1^+2+2^"));
}

#[test]
fn json_output_lists_feasible_sets() {
    let (code, out) = lagdelta(&["--format", "json", "conv", "l2d", &fixture("example.lagr")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ground"], serde_json::json!(["1", "2"]));
    assert_eq!(v["feasible"], serde_json::json!([["1"], ["2"], ["1", "2"]]));
}

#[test]
fn exchange_failure_exits_one() {
    let (code, out) = lagdelta(&["dm", "check-sea", &fixture("bad.dm")]);
    assert_eq!(code, 1);
    assert_eq!(out.trim_end(), "SEA fails: phi1={} phi2={1,2,3} e=1");
    let (code, out) = lagdelta(&["dm", "check-sea", &fixture("example.dm")]);
    assert_eq!((code, out.trim_end()), (0, "SEA holds"));
}

#[test]
fn twist_and_local_dual() {
    let (code, out) = lagdelta(&["dm", "twist", &fixture("example.dm"), "--set", "1"]);
    assert_eq!((code, out.as_str()), (0, "1 2\n-\n2\n1,2\n"));
    let (code, out) = lagdelta(&["lagr", "dual", &fixture("example.lagr"), "--set", "1"]);
    assert_eq!((code, out.trim_end()), (0, "1+1^+2^\n1^+2"));
}

#[test]
fn reduce_keeps_primal_part() {
    let (code, out) = lagdelta(&[
        "lagr",
        "reduce",
        &fixture("example.lagr"),
        "--keep",
        "1",
        "--mode",
        "primal",
    ]);
    assert_eq!((code, out.trim_end()), (0, "ground: 1\n1"));
}

#[test]
fn torus_ribbon_graph() {
    let torus = fixture("torus.rib");
    assert_eq!(lagdelta(&["rib", "boundary", &torus]), (0, "1\n".into()));
    assert_eq!(lagdelta(&["rib", "rho", &torus]).1.trim_end(), "{} {1,2}");
    assert_eq!(lagdelta(&["rib", "pi", &torus]).1.trim_end(), "1+2^\n1^+2");
    let (code, dual) = lagdelta(&["rib", "pdual", &torus, "--set", "1"]);
    assert_eq!(code, 0);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(dual.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();
    assert_eq!(lagdelta(&["rib", "rho", path]).1.trim_end(), "{1} {2}");
}

#[test]
fn enumeration_and_its_cap() {
    let (code, out) = lagdelta(&["lagr", "enum", "-n", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("<1^>") && out.contains("<1>") && out.contains("<1+1^>"));
    assert_eq!(lagdelta(&["lagr", "enum", "-n", "5"]).0, 2);
}

#[test]
fn quotient_dimensions() {
    let q = |side: &str, n: &str, conv: &str| {
        let (code, out) = lagdelta(&[
            "hopf",
            "qdim",
            "--side",
            side,
            "--n",
            n,
            "--convention",
            conv,
        ]);
        assert_eq!(code, 0);
        out.trim().parse::<usize>().unwrap()
    };
    assert_eq!(q("l", "2", "inclusion-exclusion"), 10);
    assert_eq!(q("d", "3", "inclusion-exclusion"), 31);
    assert_eq!(q("d", "3", "alternating"), 20);
    assert_eq!(lagdelta(&["hopf", "check", "--degree", "4"]).0, 2);
}

#[test]
fn coproduct_of_the_example() {
    let (code, out) = lagdelta(&["hopf", "coproduct", "--side", "l", &fixture("example.lagr")]);
    assert_eq!(code, 0);
    assert!(out.contains("2  L1:80 <1>  (x)  L1:80 <1>"), "{out}");
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn input_errors_name_file_and_line() {
    let path = fixture("unknown_label.dm");
    let (code, out) = lagdelta(&["dm", "check-sea", &path]);
    assert_eq!(code, 2);
    assert_eq!(
        out.trim_end(),
        format!("error: {path}: line 3: unknown label `5`")
    );
    let (code, out) = lagdelta(&["conv", "l2d", &fixture("not_isotropic.lagr")]);
    assert_eq!(code, 2);
    assert!(out.contains("line 2: vectors 1 and 2"), "{out}");
    assert_eq!(lagdelta(&["conv", "l2d", "/nonexistent/file"]).0, 2);
    assert_eq!(lagdelta(&["frobnicate"]).0, 2);
}

#[test]
fn verify_all_passes() {
    let (code, out) = lagdelta(&["verify", "all", "--max-n", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    assert_eq!(out.lines().count(), 10);
}
