use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use singtrans::cli::run;
use singtrans::json::{Descriptor, GermJson, SmallReportJson, Transition};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn sing(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["singtrans"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = sing(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn analyze_e6_and_node() {
    let (code, out, _) = sing(&["analyze", "x^2+y^3+z^4+t^2"]);
    assert_eq!(code, 0);
    assert!(out.contains("type: E6"));
    assert!(out.contains("mu_local: 6") && out.contains("tau: 6"));
    let v = json(&["analyze", "x^2+y^2+z^2+t^2", "--json"]);
    assert_eq!(v["type"], "A1");
    assert_eq!(v["mu_local"], 1);
    assert_eq!(v["tau"], 1);
    assert_eq!(v["t1_basis"], serde_json::json!(["1"]));
}

#[test]
fn analyze_json_has_exactly_the_documented_fields() {
    let v = json(&["analyze", "x^2+y^3+z^4+t^2+y^2+2*y*z^2", "--vars", "t,x,y,z", "--json"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let mut want = vec!["mu_local", "mu_global", "tau", "corank", "weights", "type", "t1_basis"];
    let mut got = keys.clone();
    want.sort_unstable();
    got.sort_unstable();
    assert_eq!(got, want);
    assert_eq!(v["mu_global"], 6);
    assert_eq!(v["weights"], Value::Null);
    let back: GermJson = serde_json::from_value(v).unwrap();
    assert_eq!(back.kind, "A5");
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(sing(&["analyze", "x^2+y^2", "--vars", "x,y,z,t"]).0, 1);
    assert_eq!(sing(&["analyze", "x + y^2"]).0, 1);
    assert_eq!(sing(&["analyze", "x^2 + * y"]).0, 2);
    assert_eq!(sing(&["analyze", "x^2 + w^2", "--vars", "x,y"]).0, 2);
    assert_eq!(sing(&["analyze", "x^2 + 0.5 y^2"]).0, 2);
    assert_eq!(sing(&["frobnicate"]).0, 2);
    assert_eq!(sing(&["--help"]).0, 0);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["analyze", "x^3 + x y^3 + z^2", "--json"],
        vec!["adjacency", "E6", "--json"],
        vec!["deform", "E6", "--point", "1/3,0", "--on", "V1,V2,V4,V'", "--json"],
    ] {
        assert_eq!(sing(&args), sing(&args));
    }
}

#[test]
fn analyze_reads_files_and_batches() {
    let dir = std::env::temp_dir().join(format!("singtrans-batch-{}", std::process::id()));
    let input = dir.join("in");
    let output = dir.join("out");
    fs::create_dir_all(&input).unwrap();
    fs::write(input.join("e7.poly"), "x^3 + x y^3 + z^2\n").unwrap();
    fs::write(input.join("line.txt"), "x^2 y^2\n").unwrap();
    fs::write(input.join("ignored.md"), "x^2").unwrap();
    let file = input.join("e7.poly").display().to_string();
    let (code, out, _) = sing(&["analyze", &file]);
    assert_eq!(code, 0);
    assert!(out.contains("type: E7"));

    let (code, out, _) =
        sing(&["analyze", "--batch", &input.display().to_string(), "--out", &output.display().to_string()]);
    assert_eq!(code, 1, "{out}");
    assert_eq!(out.lines().count(), 2);
    assert!(out.starts_with("e7.poly: E7 mu=7 tau=7"));
    let report: GermJson = serde_json::from_str(&fs::read_to_string(output.join("e7.json")).unwrap()).unwrap();
    assert_eq!(report.tau, 7);
    assert!(!output.join("line.json").exists());
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn transition_fixtures() {
    let v = json(&["transition", &fixture("namikawa.json"), "--json"]);
    assert_eq!(v["bideg"], serde_json::json!([2, 16]));
    assert_eq!(v["h0"], 6);
    assert_eq!(v["conifold"], false);
    assert_eq!(v["rigidity"], "inconclusive");
    let report: SmallReportJson = serde_json::from_value(v).unwrap();
    assert_eq!((report.n, report.m, report.tau), (12, 24, 24));

    let v = json(&["transition", &fixture("quintic16.json"), "--json"]);
    assert_eq!(v["bideg"], serde_json::json!([1, 15]));
    assert_eq!(v["conifold"], true);
    // b2 of the smoothing is that of a smooth quintic
    assert_eq!(v["hodge"]["h11_tilde"], 1);
    assert_eq!(v["hodge"]["h21_tilde"], 101);

    for (name, bideg) in [("namikawa_t1.json", [1, 5]), ("namikawa_t2.json", [1, 11])] {
        assert_eq!(json(&["transition", &fixture(name), "--json"])["bideg"], serde_json::json!(bideg));
    }
    let v = json(&["transition", &fixture("typeIII_g2.json"), "--json"]);
    assert_eq!(v["degree"], 1);
    assert_eq!(v["conifold_nodes"], 2);
    let v = json(&["transition", &fixture("typeII_d3.json"), "--json"]);
    assert_eq!(v["c_increment"], 11);
    let (code, out, _) = sing(&["transition", &fixture("namikawa.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("bideg = (2, 16)"));
}

#[test]
fn transition_schema_errors() {
    let dir = std::env::temp_dir().join(format!("singtrans-schema-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let cases = [
        (r#"{"kind":"small","k":1,"points":[],"extra":1}"#, 2),
        (r#"{"kind":"small","points":[]}"#, 2),
        (r#"{"kind":"typeII","delpezzo_degree":3,"genus":1}"#, 2),
        (r#"{"kind":"typeIV"}"#, 2),
        (r#"{"kind":"small","k":1,"points":[{"count":1,"least_index":1,"mu":1}]}"#, 2),
        (r#"not json"#, 2),
        // m < k
        (r#"{"kind":"small","k":3,"points":[{"count":1,"least_index":1,"mu":1,"tau":1}]}"#, 1),
        (r#"{"kind":"typeII","delpezzo_degree":9}"#, 1),
        // declared mu disagrees with the equation
        (r#"{"kind":"small","k":1,"points":[{"count":2,"least_index":1,"mu":2,"tau":2,"local_equation":"x^2+y^2+z^2+w^2"}]}"#, 1),
    ];
    for (i, (text, code)) in cases.iter().enumerate() {
        let path = dir.join(format!("case{i}.json"));
        fs::write(&path, text).unwrap();
        assert_eq!(sing(&["transition", &path.display().to_string()]).0, *code, "{text}");
    }
    assert_eq!(sing(&["transition", "/nonexistent/descriptor.json"]).0, 2);
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn descriptor_round_trips() {
    let text = fs::read_to_string(fixture("namikawa.json")).unwrap();
    let d: Descriptor = serde_json::from_str(&text).unwrap();
    let again: Descriptor = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
    assert_eq!(d, again);
    match d.validate().unwrap() {
        Transition::Small(data) => {
            assert_eq!(data.k, 2);
            assert_eq!(data.points[0].count, 6);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn adjacency_tables() {
    let (code, out, _) = sing(&["adjacency", "A", "4", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.contains("agree")).count(), 3);
    let v = json(&["adjacency", "E6", "--seed", "7", "--json"]);
    let predicted: Vec<&str> = v.as_array().unwrap().iter().filter_map(|r| r["predicted"].as_str()).collect();
    assert!(predicted.contains(&"D4") && predicted.contains(&"D5"));
    assert_eq!(sing(&["adjacency", "D", "3"]).0, 2);
    assert_eq!(sing(&["adjacency", "F", "4"]).0, 2);
    // the V4 row observes A1 where A2 is predicted
    assert_eq!(sing(&["adjacency", "D5"]).0, 1);
}

#[test]
fn deform_the_e6_example() {
    let v = json(&["deform", "E6", "--lambda", "2/27,-1/3,0,0,-2/3,2", "--json"]);
    assert_eq!(v["polynomial"], "z^4 + y^3 + 2*y*z^2 + x^2 - 2/3*z^2 + t^2 - 1/3*y + 2/27");
    let points = v["critical_points"].as_array().unwrap();
    let on_fibre: Vec<&Value> = points.iter().filter(|p| p["loci"]["in_l"] == true).collect();
    assert_eq!(on_fibre.len(), 1);
    assert_eq!(on_fibre[0]["point"], serde_json::json!(["1/3", "0"]));
    assert_eq!(on_fibre[0]["type"], "A5");
    let solved = json(&["deform", "E", "6", "--point", "1/3,0", "--on", "V1,V2,V4,V'", "--json"]);
    assert!(solved["critical_points"].as_array().unwrap().iter().any(|p| p["type"] == "A5"));
}

#[test]
fn deform_errors() {
    assert_eq!(sing(&["deform", "E6", "--lambda", "1,2"]).0, 2);
    assert_eq!(sing(&["deform", "A2", "--lambda", "1,x"]).0, 2);
    assert_eq!(sing(&["deform", "A5", "--point", "0,1", "--on", "W3"]).0, 2);
    assert_eq!(sing(&["deform", "D6", "--point", "0,1", "--on", "V1,V5"]).0, 1);
    let (code, out, _) = sing(&["deform", "A2", "--lambda", "0,-6"]);
    assert_eq!(code, 0);
    assert!(out.contains("irrational"));
}

#[test]
fn groebner_command() {
    let (code, out, _) = sing(&["groebner", &fixture("e6_tyurina.txt"), "--vars", "t,x,y,z", "--dim"]);
    assert_eq!(code, 0);
    assert!(out.contains("leading: (x, t, y^2, z^3, y*z^2)"), "{out}");
    assert!(out.ends_with("dim: 5\n"));
    let (code, out, _) = sing(&["groebner", &fixture("unit.txt"), "--dim"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("{1}\n") && out.ends_with("dim: 0\n"));
    let (_, out, _) = sing(&["groebner", &fixture("line.txt"), "--vars", "x,y", "--dim"]);
    assert!(out.ends_with("dim: Infinite\n"));
    let (_, out, _) = sing(&["groebner", &fixture("e6_tyurina.txt"), "--vars", "t,x,y,z", "--local", "--dim"]);
    assert!(out.ends_with("dim: 5\n"));
    assert_eq!(sing(&["groebner", &fixture("e6_tyurina.txt"), "--max-pairs", "1"]).0, 1);
    assert_eq!(sing(&["groebner", &fixture("unit.txt"), "--order", "weighted:1"]).0, 2);
    assert_eq!(sing(&["groebner", &fixture("namikawa.json")]).0, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_singtrans");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["analyze", "x^2+y^3+z^4+t^2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("E6"));
    assert_eq!(status(&["analyze", "x^2+y^2", "--vars", "x,y,z,t"]).status.code(), Some(1));
    let bad = status(&["analyze", "x +"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}
