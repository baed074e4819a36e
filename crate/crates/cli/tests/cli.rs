use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn deltak(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltak"))
        .args(args)
        .env_remove("DELTAK_JOBS")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

#[test]
fn interlace_of_first_example() {
    let out = deltak(&["interlace", "--input", &data("ex51.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["Int"], json!({"0": "4", "1": "4"}));
}

#[test]
fn orbit_polynomial_of_star_example() {
    let out = deltak(&[
        "rpoly",
        "--mode",
        "orbit",
        "--directions",
        "2",
        "--input",
        &data("ex52.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(
        r["R"],
        json!({"0": "9", "1": "16", "2": "6", "3": "-1", "4": "1", "5": "1"})
    );
    assert_eq!(r["directions_agreed"], json!(true));
    assert_eq!(r["equals_v_plus_one_times_interlace"], json!(false));
}

#[test]
fn y_polynomial_of_first_example() {
    let out = deltak(&["rpoly", "--mode", "y", "--input", &data("ex51.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["R"], json!({"0": "4", "1": "8", "2": "4"}));
}

#[test]
fn verify_suite_on_three_elements() {
    let out = deltak(&["verify", "--theorem", "A", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["failures"], json!(0));
    assert!(r["checked"].as_u64().unwrap() > 100);
}

#[test]
fn chi_counts_feasible_sets() {
    let out = deltak(&[
        "chi",
        "--class",
        "polytope",
        "--directions",
        "3",
        "--input",
        &data("ex51.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["chi"], json!("4"));
}

#[test]
fn graph_input_and_gap_certificate() {
    let out = deltak(&[
        "polytope",
        "audit",
        "--lattice",
        "vertex",
        "--input",
        &data("graph.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["very_ample"], json!(false));
    let gaps = r["gaps"].as_array().unwrap();
    assert!(gaps.contains(&json!({"vertex": [], "gap_point": [1, 1, 1, 0, 1, 1, 1]})));
    assert_eq!(r["hilbert_numerators"].as_array().unwrap().len(), 32);
}

#[test]
fn invalid_family_is_an_input_error() {
    let out = deltak(&["validate", "--input", &data("not_delta.json")]);
    assert_eq!(out.status.code(), Some(2));
    let r = report(&out);
    assert_eq!(r["valid"], json!(false));
    assert_eq!(r["violating_edge"], json!([[], [1, 2, 3]]));

    let out = deltak(&["interlace", "--input", &data("not_delta.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn matrix_errors_are_input_errors() {
    let out = deltak(&["validate", "--input", &data("not_isotropic.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("isotropic"));
}

#[test]
fn unreadable_or_shapeless_input() {
    let out = deltak(&["interlace", "--input", &data("missing.json")]);
    assert_eq!(out.status.code(), Some(2));
    let dir = std::env::temp_dir().join("deltak-cli-shapeless.json");
    std::fs::write(&dir, "{\"n\": 2}").unwrap();
    let out = deltak(&["interlace", "--input", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_reproducible() {
    let args = [
        "chi",
        "--class",
        "doubled",
        "--seed",
        "7",
        "--directions",
        "2",
        "--input",
        &data("ex51.json"),
    ];
    let a = deltak(&args);
    let b = deltak(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(report(&a).get("seconds").is_none());

    let mut timed = args.to_vec();
    timed.push("--timings");
    assert!(report(&deltak(&timed))["seconds"].is_number());
}

#[test]
fn search_star_small_and_guarded() {
    let out = deltak(&["search-star", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["failures"], json!([]));
    assert_eq!(r["errors"], json!([]));

    let out = deltak(&["search-star", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn moment_graph_dump() {
    let out = deltak(&["moment-graph", "dump", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(r["edges"].as_array().unwrap().len(), 8);

    let out = deltak(&["moment-graph", "dump", "--n", "3", "--side", "ogr"]);
    let r = report(&out);
    assert_eq!(r["vertices"].as_array().unwrap().len(), 8);
    // one edge per single and per pair: 3 + 3 at each of 8 points, halved
    assert_eq!(r["edges"].as_array().unwrap().len(), 24);

    let out = deltak(&["moment-graph", "dump", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classes_dump_lists_every_fixed_point() {
    let out = deltak(&[
        "classes",
        "dump",
        "--input",
        &data("ex51.json"),
        "--class",
        "wedge",
        "--p",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let c = &report(&out)["class"];
    assert_eq!(c["side"], json!("x"));
    assert_eq!(c["entries"].as_array().unwrap().len(), 48);

    let out = deltak(&[
        "classes",
        "dump",
        "--input",
        &data("ex51.json"),
        "--class",
        "ogr-y",
    ]);
    assert_eq!(report(&out)["class"]["entries"].as_array().unwrap().len(), 8);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join("deltak-cli-output.json");
    let out = deltak(&[
        "interlace",
        "--input",
        &data("ex51.json"),
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["Int"], json!({"0": "4", "1": "4"}));
}
