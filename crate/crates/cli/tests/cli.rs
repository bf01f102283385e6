use magical::sl2data::RecordReport;
use magical::{CayleyDomainDescriptor, ComponentCount, MagicalCaseId, MagicalRecord, RealFormId};
use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_magical")).args(args).env_remove("MAGICAL_CAP").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    (serde_json::from_slice(&o.stdout).unwrap(), o.status.code().unwrap())
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(format!("{}.json", name));
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

/// Runs with `--json`, validates envelope and payload, returns the payload.
fn payload(command: &str, args: &[&str]) -> Value {
    let mut full = vec![command];
    full.extend_from_slice(args);
    let (env, code) = json(&full);
    assert_eq!(code, 0, "{:?}: {}", full, env);
    let errs: Vec<String> = schema("envelope").iter_errors(&env).map(|e| e.to_string()).collect();
    assert!(errs.is_empty(), "{:?}", errs);
    assert_eq!(env["schema_version"], "1");
    assert_eq!(env["command"][1], command);
    let p = env["payload"].clone();
    let errs: Vec<String> = schema(command).iter_errors(&p).map(|e| e.to_string()).collect();
    assert!(errs.is_empty(), "{} {:?}: {:?}", command, args, errs);
    p
}

fn orbit_diagrams(p: &Value) -> Vec<String> {
    p["orbits"].as_array().unwrap().iter().map(|o| o["diagram"].as_str().unwrap().to_string()).collect()
}

#[test]
fn classify_examples() {
    assert_eq!(orbit_diagrams(&payload("classify", &["--real-form", "so:2,3"])).len(), 2);
    assert!(orbit_diagrams(&payload("classify", &["--real-form", "sp:2,2"])).is_empty());
    let mut su = orbit_diagrams(&payload("classify", &["--real-form", "su:3,3"]));
    su.sort();
    assert_eq!(su, vec!["2+,2+,2+", "2-,2-,2-"]);
    let f4 = payload("classify", &["--real-form", "f4:4"]);
    assert_eq!(f4["source"], "catalog");
    let cases: Vec<&str> = f4["orbits"].as_array().unwrap().iter().map(|o| o["case_id"].as_str().unwrap()).collect();
    assert!(cases.contains(&"quat-F4") && cases.contains(&"split-F4"));
}

#[test]
fn classify_payloads_validate() {
    for rf in ["sl:6", "su*:8", "so*:8", "so:4,4", "spR:6", "su:2,5", "e6:2", "e7:-25", "g2:2"] {
        let p = payload("classify", &["--real-form", rf]);
        let back: RealFormId = p["real_form"].as_str().unwrap().parse().unwrap();
        assert_eq!(back.to_string(), p["real_form"].as_str().unwrap());
    }
}

#[test]
fn oracle_examples() {
    let f4 = payload("oracle", &["--type", "F4", "--labels", "0,0,2,2"]);
    assert_eq!((f4["magical"].as_bool(), f4["centralizer_dim"].as_u64()), (Some(true), Some(3)));
    let sl3 = payload("oracle", &["--type", "sl", "--n", "3", "--partition", "2,1"]);
    assert_eq!(sl3["magical"], false);
    assert!(sl3["witness"]["x_label"].is_string() && sl3["witness"]["y_label"].is_string());
    let g2 = payload("oracle", &["--type", "G2", "--labels", "2,2"]);
    assert_eq!((g2["magical"].as_bool(), g2["centralizer_dim"].as_u64()), (Some(true), Some(0)));
}

#[test]
fn oracle_seed_does_not_change_verdicts() {
    for seed in ["0", "7", "12345"] {
        let p = payload("oracle", &["--seed", seed, "--type", "E6", "--labels", "0,0,2,2,0,0"]);
        assert_eq!((p["magical"].as_bool(), p["centralizer_dim"].as_u64()), (Some(true), Some(8)));
    }
}

#[test]
fn unrealizable_labels_are_reported_verbatim() {
    let o = run(&["oracle", "--type", "G2", "--labels", "2,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not realizable"));
    let (env, code) = json(&["oracle", "--type", "G2", "--labels", "2,0"]);
    assert_eq!(code, 2);
    assert!(env["payload"].is_null());
    assert!(env["diagnostics"][0].as_str().unwrap().starts_with("not realizable"));
}

#[test]
fn record_examples() {
    let e8 = payload("record", &["--case", "quat-E8", "--genus", "2"]);
    assert_eq!(e8["cayley_domain"]["twist_degree"], 4);
    assert_eq!(e8["cayley_domain"]["differential_degrees"], serde_json::json!([2, 6]));
    assert_eq!(e8["component_count"]["simply_connected"], serde_json::json!({"status": "unknown", "expected": 1}));
    assert!(stdout(&run(&["record", "--case", "quat-E8"])).contains("unknown (expected 1)"));

    let c4 = payload("record", &["--case", "hermitian-C:4", "--genus", "3"]);
    assert_eq!(c4["cayley_domain"]["differential_degrees"], serde_json::json!([2]));
    assert_eq!(c4["cayley_domain"]["differential_dims"], serde_json::json!([6]));
    assert!(stdout(&run(&["record", "--case", "hermitian-C:4", "--genus", "3"])).contains("R + sl(4,R)"));

    let a2 = payload("record", &["--case", "split-A:2", "--genus", "2"]);
    assert_eq!(a2["cayley_domain"]["differential_dims"], serde_json::json!([3, 5]));
}

#[test]
fn record_payloads_round_trip() {
    for case in ["split-G2", "hermitian-D:6", "hermitian*-D:8", "flag-B:5,3", "flag-D:8,4", "quat-E7"] {
        let p = payload("record", &["--case", case, "--genus", "4"]);
        let rec: MagicalRecord = serde_json::from_value(p["record"].clone()).unwrap();
        assert_eq!(rec.case_id, case.parse::<MagicalCaseId>().unwrap());
        assert_eq!(serde_json::to_value(&rec).unwrap(), p["record"]);
        let dom: CayleyDomainDescriptor = serde_json::from_value(p["cayley_domain"].clone()).unwrap();
        assert_eq!(serde_json::to_value(&dom).unwrap(), p["cayley_domain"]);
        let rep: RecordReport = serde_json::from_value(p["checks"].clone()).unwrap();
        assert!(rep.passed());
        let cc: ComponentCount = serde_json::from_value(p["component_count"]["adjoint"].clone()).unwrap();
        assert_eq!(serde_json::to_value(&cc).unwrap(), p["component_count"]["adjoint"]);
    }
}

#[test]
fn render_examples() {
    let dot = payload("render", &["--poset", "F4", "--labels", "0,0,2,2", "--format", "dot"]);
    let text = dot["text"].as_str().unwrap();
    assert!(text.starts_with("digraph poset {"));
    let nodes: Vec<&str> = text.lines().filter(|l| l.contains("[label=\"") && !l.contains("->")).collect();
    assert_eq!(nodes.len(), 24);
    let mut weights: Vec<i64> =
        nodes.iter().map(|l| l.rsplit("| ").next().unwrap().trim_end_matches("\"];").parse().unwrap()).collect();
    weights.sort();
    let mut want = vec![0; 3];
    want.extend([2; 7]);
    want.extend([4; 6]);
    want.extend([6; 6]);
    want.extend([8, 10]);
    assert_eq!(weights, want);

    let b4 = stdout(&run(&["render", "--dynkin", "B:4", "--labels", "2,2,0,0"]));
    assert_eq!(b4, "2   2   0   0\no---o---o=>=o\n1   2   3   4\n");
    assert_eq!(stdout(&run(&["render", "--dynkin", "A:1", "--labels", "2"])), "2\no\n1\n");
}

#[test]
fn rendering_is_deterministic() {
    for args in [
        vec!["render", "--poset", "E8", "--labels", "0,0,0,0,0,0,2,2"],
        vec!["render", "--poset", "B:5", "--labels", "2,2,0,0,0", "--format", "text"],
        vec!["render", "--dynkin", "E7", "--labels", "2,0,0,0,0,0,2"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn verify_suites_pass() {
    for suite in ["tables", "identities", "oracle"] {
        let p = payload("verify", &["--suite", suite, "--cap", "10"]);
        assert_eq!(p["passed"], true, "{}", suite);
        assert!(p["checks"].as_array().unwrap().iter().all(|c| c["suite"] == suite));
    }
    assert_eq!(run(&["verify"]).status.code(), Some(0));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["record", "--case", "quat-G2"]).status.code(), Some(2));
    assert_eq!(run(&["record", "--case", "split-A:2", "--genus", "1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--real-form", "so:2,3x"]).status.code(), Some(2));
    assert_eq!(run(&["render", "--poset", "F4", "--labels", "0,0,2"]).status.code(), Some(2));
    assert_eq!(run(&["oracle", "--type", "sl", "--partition", "2,1"]).status.code(), Some(2));
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_magical"))
        .args(["classify", "--real-form", "so:5,5"])
        .env("MAGICAL_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap exceeded"));
    let o = Command::new(env!("CARGO_BIN_EXE_magical"))
        .args(["classify", "--real-form", "so:5,5", "--cap", "12"])
        .env("MAGICAL_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}
