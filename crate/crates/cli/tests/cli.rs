use std::process::{Command, Output};

use serde_json::Value;

fn freebialg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freebialg")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn delta_of_g2_in_rank_six() {
    let out = freebialg(&["--format", "text", "delta", "F6: g2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "F1⊗F6: g1 ⊗ g2; F2⊗F3: g1 ⊗ g2; F3⊗F2: g1 ⊗ g2; F6⊗F1: g2 ⊗ g1\n");

    let v = json(&freebialg(&["delta", "F6: g2"]));
    let comps = v["delta"]["components"].as_object().unwrap();
    let keys: Vec<&str> = comps.keys().map(String::as_str).collect();
    assert_eq!(keys, ["1,6", "2,3", "3,2", "6,1"]);
    assert_eq!(comps["6,1"]["terms"][0]["words"], serde_json::json!([[[2, 1]], [[1, 1]]]));
}

#[test]
fn counit_examples() {
    assert_eq!(stdout(&freebialg(&["--format", "text", "counit", "F1: g1"])), "1\n");
    assert_eq!(stdout(&freebialg(&["--format", "text", "counit", "F2: g1"])), "0\n");
    let v = json(&freebialg(&["counit", "F1: 2*g1^3 - (1/2+1i)*1; F3: g2"]));
    assert_eq!(v["counit"], serde_json::json!({ "re": "3/2", "im": "-1" }));
}

#[test]
fn phi_command() {
    let v = json(&freebialg(&["phi", "2", "3", "g2"]));
    assert_eq!(v["text"], "(g1, g2)");
    let out = freebialg(&["--format", "text", "phi", "2", "2", "g1*g2^-1*g4*g3^-1"]);
    assert_eq!(stdout(&out), "(1, 1)\n");
}

#[test]
fn orbit_find() {
    let v = json(&freebialg(&["orbit", "2", "2", "--radius", "4", "--find", "g1*g2*g1^-1*g2^-1,1"]));
    assert_eq!(v["found"], true);
    let v = json(&freebialg(&["orbit", "2", "2", "--radius", "1", "--list"]));
    assert_eq!(v["size"], 9);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 9);
}

#[test]
fn tensor_pd_reports_without_failing() {
    let out = freebialg(&["tensor-pd", "2", "2", "1", "1", "--radius", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "reported");
    let expected = serde_json::json!({ "z": [[1, 1], [2, -1], [4, 1], [3, -1]], "pullback": 1, "direct": 0 });
    assert!(v["disagreements"].as_array().unwrap().contains(&expected));

    let v = json(&freebialg(&["tensor-pd", "2", "3", "1", "2", "--radius", "1"]));
    assert_eq!(v["status"], "verified");
    assert_eq!(v["checked"], 13);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["delta", "F2: g3"][..],
        &["delta", "F2 g1"],
        &["phi", "2", "2", "g5"],
        &["tensor-pd", "2", "2", "3", "1"],
        &["verify", "nonsense"],
        &["bogus"],
    ] {
        let out = freebialg(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_suites_pass_and_are_deterministic() {
    let a = freebialg(&["verify", "all", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    let b = freebialg(&["verify", "--suite", "all", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["passed"], true);
    let ids: Vec<&str> = v["claims"].as_array().unwrap().iter().map(|c| c["claim"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(v["claims"].as_array().unwrap().iter().all(|c| c["status"] == "verified"));

    let w = json(&freebialg(&["verify", "words"]));
    assert_eq!(w["suite"], "words");
    assert!(w["claims"].as_array().unwrap().iter().all(|c| c.get("timing_ms").is_none()));
}

#[test]
fn thread_cap_does_not_change_output() {
    let one = Command::new(env!("CARGO_BIN_EXE_freebialg"))
        .env("FREEBIALG_THREADS", "1")
        .args(["verify", "bialgebra", "--elements", "30"])
        .output()
        .unwrap();
    let many = freebialg(&["verify", "bialgebra", "--elements", "30"]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn probe_claims_reports_findings() {
    let out = freebialg(&["probe", "claims"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let probes = v["probes"].as_array().unwrap();
    let orbit = probes.iter().find(|p| p["claim"] == "orbit-separation").unwrap();
    assert_eq!(orbit["status"], "reported");
    let comm = serde_json::json!([[[1, 1], [2, 1], [1, -1], [2, -1]], []]);
    assert!(orbit["disagreements"].as_array().unwrap().iter().any(|d| d["pair"] == comm));
    assert!(probes.iter().any(|p| p["claim"] == "u-map-injectivity" && p["status"] == "reported"));
    assert_eq!(stdout(&out), stdout(&freebialg(&["probe", "claims"])));
}
