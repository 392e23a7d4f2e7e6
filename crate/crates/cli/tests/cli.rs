use std::process::{Command, Output};

use serde_json::Value;

fn galilei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_galilei"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a json report")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn verify_phi_passes_with_sorted_results() {
    let out = galilei(&["verify-phi", "--l", "3/2"]);
    assert_eq!(out.status.code(), Some(0));
    let rep = json(&out);
    assert_eq!(rep["command"], "verify-phi");
    assert_eq!(rep["pass"], true);
    let names: Vec<&str> = rep["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for family in ["[H,p", "[E,p", "[F,p", "[E,F]=H", "[H,E]=2E", "[H,F]=-2F"] {
        assert!(names.iter().any(|n| n.starts_with(family)), "{family}");
    }
}

#[test]
fn report_schema() {
    let rep = json(&galilei(&["check-theorem3", "--l", "1/2", "--z", "1", "--m", "1", "--depth", "4"]));
    let obj = rep.as_object().unwrap();
    for key in ["command", "params", "results", "pass"] {
        assert!(obj.contains_key(key), "{key}");
    }
    for r in rep["results"].as_array().unwrap() {
        assert!(r["name"].is_string() && r["pass"].is_boolean());
        assert!(r["witness"].is_null() || r["witness"].is_string());
    }
}

#[test]
fn character_csv() {
    let out = galilei(&[
        "character", "--family", "extended", "--l", "1/2", "--hw", "1/3", "--z", "1", "--depth", "6",
        "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let dims: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(text.lines().next(), Some("n,dim"));
    assert_eq!(dims, ["1", "1", "2", "2", "3", "3", "4"]);
}

#[test]
fn centerless_character_on_the_coarse_lattice() {
    let rep = json(&galilei(&["character", "--family", "centerless", "--l", "1", "--pl", "1", "--hw", "0", "--depth", "4"]));
    assert_eq!(rep["pass"], true);
    assert_eq!(rep["data"]["step"], 2);
    assert_eq!(rep["data"]["dims"], serde_json::json!([1, 2, 3, 4, 5]));
}

#[test]
fn radical_table_and_json() {
    let out = galilei(&["radical", "--l", "1/2", "--z", "1", "--hw", "-1/2", "--depth", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let rep = json(&out);
    assert_eq!(rep["params"]["first_radical_depth"], 2);
    let table = galilei(&["radical", "--l", "1/2", "--z", "1", "--hw", "-1/2", "--depth", "6", "--format", "table"]);
    let text = String::from_utf8(table.stdout).unwrap();
    assert!(text.contains("verma") && text.contains("radical") && text.contains("PASS"));
}

#[test]
fn d_module_integer_a_fails_only_when_simplicity_is_expected() {
    let lax = galilei(&["d-module", "--a", "2", "--z", "1", "--window", "10"]);
    assert_eq!(lax.status.code(), Some(0));
    assert_eq!(json(&lax)["data"]["kernel_witnesses"], serde_json::json!([-2]));
    let strict = galilei(&["d-module", "--a", "2", "--z", "1", "--window", "10", "--expect-simple"]);
    assert_eq!(strict.status.code(), Some(1));
    let rep = json(&strict);
    let bad: Vec<&Value> = rep["results"].as_array().unwrap().iter().filter(|r| r["pass"] == false).collect();
    assert_eq!(bad.len(), 1);
    assert!(bad[0]["witness"].as_str().unwrap().contains("-2"));
    let simple = galilei(&["d-module", "--a", "1/3", "--z", "1", "--window", "10", "--expect-simple"]);
    assert_eq!(simple.status.code(), Some(0));
}

#[test]
fn fock_relations_examples() {
    for ex in ["1", "2", "3"] {
        let out = galilei(&["fock-relations", "--example", ex, "--l", "3/2", "--z", "-2/3", "--window", "5", "--seed", "4"]);
        assert_eq!(out.status.code(), Some(0), "example {ex}");
    }
    let integral = galilei(&["fock-relations", "--example", "3", "--l", "1/2", "--z", "1", "--mu", "2", "--expect-simple"]);
    assert_eq!(integral.status.code(), Some(1));
}

#[test]
fn highest_n_both_branches() {
    for pl in ["1", "0"] {
        let out = galilei(&["check-highestN", "--l", "1", "--pl", pl, "--hw", "0", "--depth", "6"]);
        assert_eq!(out.status.code(), Some(0), "pl = {pl}");
    }
}

#[test]
fn usage_errors_name_the_flag() {
    let out = galilei(&["check-theorem2", "--l", "1/2", "--z", "one", "--hw", "0", "--depth", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--z"));
    let out = galilei(&["verify-phi", "--l", "3/4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--l"));
    let out = galilei(&["check-theorem3", "--l", "1/2", "--z", "1", "--depth", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--m"));
    let out = galilei(&["character", "--format", "xml"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--format"));
}

#[test]
fn invalid_parameters_are_usage_errors() {
    let out = galilei(&["check-theorem2", "--l", "1", "--z", "1", "--hw", "0", "--depth", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = galilei(&["d-module", "--a", "1/3", "--z", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify-algebra", "--l", "1/2", "--seed", "5"];
    let a = galilei(&args);
    let b = galilei(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let theta = ["verify-theta", "--l", "1", "--seed", "2", "--format", "csv"];
    assert_eq!(galilei(&theta).stdout, galilei(&theta).stdout);
}
