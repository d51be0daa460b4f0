use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn obstruct(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_obstruct")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = obstruct(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn report_envelope() {
    let v = json(&["splice", "--a", "2", "--b", "3", "--c", "2", "--d", "-3"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "splice");
    assert_eq!(v["inputs"]["d"], -3);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert!(v.get("timing").is_none());
    assert_eq!(v["verdict"]["overall"]["kind"], "half_integral_surgery");
    assert_eq!(v["verdict"]["overall"]["slope"], "37/2");
    let timed = json(&["--timing", "splice", "--a", "3", "--b", "4", "--c", "-3", "--d", "4"]);
    assert!(timed.get("timing").is_some());
    assert_eq!(timed["verdict"]["overall"]["kind"], "not_any_surgery");
}

#[test]
fn pretty_table_goes_to_stderr() {
    let out = obstruct(&["--pretty", "em", "--l", "5", "--m", "2", "--n", "0", "--p", "2"]);
    assert!(out.status.success());
    serde_json::from_slice::<Value>(&out.stdout).unwrap();
    assert!(!out.stderr.is_empty());
}

#[test]
fn invalid_inputs_exit_2() {
    for args in [
        &["splice", "--a", "1", "--b", "3", "--c", "2", "--d", "3"][..],
        &["em", "--l", "2", "--m", "2", "--n", "1", "--p", "1"],
        &["cable", "--knot", "C(2,2);T(2,3)"],
        &["changemaker", "embed", "--gram", "/nonexistent/gram.txt", "--p", "5"],
        &["density", "--set", "S", "--limit", "0"],
        &["census-2odd", "--bogus"],
    ] {
        let out = obstruct(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn census_boundary() {
    let small = json(&["census-2odd", "--max-product", "8"]);
    assert_eq!(small["verdict"]["rows"].as_array().unwrap().len(), 0);
    let one = json(&["census-2odd", "--max-product", "9"]);
    assert_eq!(one["verdict"]["witness_pairs"], serde_json::json!([[1, 1]]));
    assert_eq!(one["verdict"]["rows"][0]["n"], 35);
}

#[test]
fn deterministic_across_thread_counts() {
    for cmd in [&["census-2odd"][..], &["changemaker", "embed", "--gram", &data("GD.txt"), "--p", "226", "--all"]] {
        let runs: Vec<Vec<u8>> = ["1", "4"]
            .iter()
            .map(|j| {
                let mut args = vec!["--jobs", j];
                args.extend_from_slice(cmd);
                let out = obstruct(&args);
                assert!(out.status.success());
                out.stdout
            })
            .collect();
        assert_eq!(runs[0], runs[1], "{cmd:?}");
    }
}

#[test]
fn embed_data_files() {
    let gd = json(&["changemaker", "embed", "--gram", &data("GD.txt"), "--p", "226", "--all"]);
    assert_eq!(gd["verdict"]["obstructed"], false);
    assert_eq!(gd["verdict"]["admitting_changemakers"], 1);
    assert_eq!(gd["witnesses"][0]["sigma"], serde_json::json!([1, 2, 2, 4, 4, 8, 11]));
    let fam = json(&["changemaker", "embed", "--gram", &data("fam_2_2.txt"), "--p", "99"]);
    assert_eq!(fam["verdict"]["obstructed"], true);
}

#[test]
fn other_commands() {
    let em = json(&["em", "--l", "5", "--m", "2", "--n", "0", "--p", "2"]);
    assert_eq!(em["verdict"]["slope"], "513/2");
    assert_eq!(em["witnesses"]["phi_over_pi"], "2/3");
    let cable = json(&["cable", "--knot", "C(13,2);T(2,3)"]);
    assert_eq!(cable["verdict"]["slopes"][1]["manifold"], "L(13,18)#RP³");
    let density = json(&["density", "--set", "Sk:2", "--limit", "65", "--bound"]);
    assert_eq!(density["verdict"]["density"], density["verdict"]["product_bound"]);
    let cms = json(&["changemaker", "enum", "--len", "3", "--norm", "6"]);
    assert!(cms["verdict"].to_string().contains("[1,1,2]"));
}
