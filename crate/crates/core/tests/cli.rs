use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

const SCHEMA: &str = include_str!("../schema/report.v1.schema.json");

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn flipwide(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_flipwide"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn report(run: &Run) -> Value {
    let v: Value = serde_json::from_str(&run.stdout).unwrap_or_else(|e| panic!("{e}: {}", run.stdout));
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema violations: {errors:?}\n{}", run.stdout);
    v
}

fn workdir() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let gen = |family: &str, file: &str| {
        let r = flipwide(dir.path(), &["generate", "--family", family, "--emit", file]);
        assert_eq!(r.code, 0, "{}", r.stderr);
    };
    gen("star(5)", "star.g6");
    gen("cycle(6)", "c6.g6");
    gen("subdivide(2,biclique(2,6))", "k26.g6");
    gen("subdivide(1,biclique(2,6))", "k16.g6");
    std::fs::write(dir.path().join("iso.json"), "[[[0],[1,2,3,4,5]]]").unwrap();
    std::fs::write(dir.path().join("c4.txt"), "# four-cycle\nn 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    dir
}

#[test]
fn ramsey_prints_chain_size() {
    let dir = tempfile::tempdir().unwrap();
    let plain = flipwide(dir.path(), &["ramsey", "--k", "1", "--m", "3", "--t0", "8", "--plain"]);
    assert_eq!((plain.code, plain.stdout.as_str()), (0, "2701\n"));
    let r = flipwide(dir.path(), &["ramsey", "--k", "1", "--m", "3", "--t0", "8"]);
    assert_eq!(report(&r)["result"]["value"], "2701");
    let r = flipwide(dir.path(), &["ramsey", "--k", "2", "--m", "3", "--n", "3", "--plain"]);
    assert_eq!(r.stdout, "21\n");
    let r = flipwide(dir.path(), &["ramsey", "--k", "9", "--m", "40", "--n", "40", "--ceiling-bits", "64"]);
    assert_eq!(r.code, 1);
    assert_eq!(report(&r)["error"]["kind"], "Overflow");
}

#[test]
fn convert_star_deletes_the_centre() {
    let dir = workdir();
    let r = flipwide(
        dir.path(),
        &["convert", "--in", "star.g6", "--flips", "iso.json", "--r", "2", "--m", "5", "--t0", "2", "--mode", "best-effort"],
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = report(&r);
    assert_eq!(v["result"]["S"], serde_json::json!([0]));
    assert_eq!(v["result"]["s_size"], 1);
    // Guaranteed mode needs 2701 witness vertices here.
    let r = flipwide(dir.path(), &["convert", "--in", "star.g6", "--flips", "iso.json", "--r", "2", "--m", "3"]);
    assert_eq!(r.code, 1);
    assert_eq!(report(&r)["error"]["kind"], "SizeRequirementUnmet");
}

#[test]
fn convert_subdivided_biclique() {
    let dir = workdir();
    let flips = "[[[0],[8,10,12,14,16,18]],[[1],[20,22,24,26,28,30]]]";
    let r = flipwide(
        dir.path(),
        &["convert", "--in", "k26.g6", "--flips", flips, "--b", "[2,3,4,5,6,7]", "--r", "6", "--m", "4", "--mode", "best-effort"],
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = report(&r);
    assert_eq!(v["result"]["S"], serde_json::json!([0, 1]));
    assert_eq!(v["result"]["B"], serde_json::json!([2, 3, 4, 5, 6, 7]));
}

#[test]
fn verify_exit_codes() {
    let dir = workdir();
    let ok = flipwide(dir.path(), &["verify", "--in", "c6.g6", "--witness", r#"{"kind":"widenable","S":[],"B":[0,3],"r":2,"m":2}"#]);
    assert_eq!(ok.code, 0);
    assert_eq!(report(&ok)["status"], "valid");
    let tampered = flipwide(dir.path(), &["verify", "--in", "c6.g6", "--witness", r#"{"kind":"widenable","S":[],"B":[0,2],"r":2,"m":2}"#]);
    assert_eq!(tampered.code, 1);
    assert_eq!(report(&tampered)["status"], "invalid");
    let missing = flipwide(dir.path(), &["verify", "--in", "c6.g6", "--witness", r#"{"kind":"widenable","S":[],"r":2,"m":2}"#]);
    assert_eq!(missing.code, 2);
    assert_eq!(report(&missing)["error"]["kind"], "MissingWitness");
    let flippable = flipwide(
        dir.path(),
        &["verify", "--in", "star.g6", "--witness", r#"{"kind":"flippable","flips":[[[0],[1,2,3,4,5]]],"B":[1,2,3,4,5],"r":2,"m":5}"#],
    );
    assert_eq!(flippable.code, 0);
}

#[test]
fn tampered_search_witnesses_never_verify() {
    let dir = workdir();
    let found = flipwide(dir.path(), &["search-wide", "--in", "k16.g6", "--a", "[2,3,4,5,6,7]", "--r", "4", "--m", "2", "--budget", "2"]);
    assert_eq!(found.code, 0, "{}", found.stderr);
    let v = report(&found);
    assert_eq!(v["result"]["S"], serde_json::json!([0, 1]));
    let witness = v["result"]["witness"].clone();
    let text = witness.to_string();
    assert_eq!(flipwide(dir.path(), &["verify", "--in", "k16.g6", "--witness", &text]).code, 0);

    let mut tampered = Vec::new();
    let mut w = witness.clone();
    w["S"] = serde_json::json!([0]);
    tampered.push(w);
    let mut w = witness.clone();
    w["B"].as_array_mut().unwrap().push(serde_json::json!(8));
    tampered.push(w);
    let mut w = witness.clone();
    w["m"] = serde_json::json!(7);
    tampered.push(w);
    let mut w = witness.clone();
    w["S"] = serde_json::json!([]);
    tampered.push(w);
    for w in tampered {
        let r = flipwide(dir.path(), &["verify", "--in", "k16.g6", "--witness", &w.to_string()]);
        assert_eq!(r.code, 1, "tampered witness {w} accepted");
    }
}

#[test]
fn usage_and_input_errors_exit_two() {
    let dir = workdir();
    assert_eq!(flipwide(dir.path(), &["frobnicate"]).code, 2);
    assert_eq!(flipwide(dir.path(), &["verify", "--in", "c6.g6"]).code, 2);
    assert_eq!(flipwide(dir.path(), &["convert", "--in", "star.g6", "--flips", "iso.json", "--r", "2", "--m", "1", "--mode", "sometimes"]).code, 2);
    let seedless = flipwide(dir.path(), &["generate", "--family", "random(10,0.5)"]);
    assert_eq!(seedless.code, 2);
    let inline_only = flipwide(dir.path(), &["generate", "--family", "random(10,0.5,3)"]);
    assert_eq!(inline_only.code, 2, "random families need --seed");
    std::fs::write(dir.path().join("bad.g6"), "C").unwrap();
    let bad = flipwide(dir.path(), &["check-biclique", "--in", "bad.g6", "--t", "2"]);
    assert_eq!(bad.code, 2);
    let v = report(&bad);
    assert_eq!(v["status"], "error");
    assert!(v["result"].is_null());
    assert_eq!(v["error"]["kind"], "Malformed");
    let help = flipwide(dir.path(), &["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("convert"));
}

#[test]
fn generate_is_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let a = flipwide(dir.path(), &["generate", "--family", "random(30,0.2)", "--seed", "7"]);
    let b = flipwide(dir.path(), &["generate", "--family", "random(30,0.2)", "--seed", "7"]);
    let c = flipwide(dir.path(), &["generate", "--family", "random(30,0.2)", "--seed", "8"]);
    assert_eq!(report(&a)["result"], report(&b)["result"]);
    assert_ne!(report(&a)["result"]["graph6"], report(&c)["result"]["graph6"]);
}

#[test]
fn batch_reports_follow_input_order() {
    let dir = workdir();
    let inputs = ["c6.g6", "star.g6", "c4.txt", "k26.g6", "missing.g6"];
    let mut args = vec!["check-biclique", "--t", "1"];
    for i in &inputs {
        args.extend(["--in", i]);
    }
    let r = flipwide(dir.path(), &args);
    assert_eq!(r.code, 2);
    let v = report(&r);
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), inputs.len());
    for (doc, name) in arr.iter().zip(inputs) {
        if name == "missing.g6" {
            assert_eq!(doc["status"], "error");
        } else {
            assert_eq!(doc["input"]["source"], name);
            assert_eq!(doc["result"]["found"], true);
        }
    }
    assert_eq!(arr[2]["input"]["n"], 4);
}

#[test]
fn other_commands() {
    let dir = workdir();
    let nf = flipwide(dir.path(), &["normalize", "--in", "c6.g6", "--flips", "[[[0,1],[2,3]],[[0],[2,3,4]]]"]);
    assert_eq!(nf.code, 0);
    let v = report(&nf);
    assert_eq!(v["result"]["source_flips"], 2);
    assert_eq!(v["result"]["within_bound"], true);

    let out: PathBuf = dir.path().join("flipped.g6");
    let fl = flipwide(dir.path(), &["flip", "--in", "star.g6", "--flips", "iso.json", "--emit", out.to_str().unwrap()]);
    assert_eq!(fl.code, 0);
    assert_eq!(report(&fl)["result"]["edges_after"], 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "E???\n");

    let ff = flipwide(dir.path(), &["find-flat", "--in", "star.g6", "--flips", "iso.json", "--r", "2", "--m", "6"]);
    assert_eq!(ff.code, 0);
    assert_eq!(report(&ff)["result"]["B"], serde_json::json!([0, 1, 2, 3, 4, 5]));
    let none = flipwide(dir.path(), &["find-flat", "--in", "star.g6", "--r", "2", "--m", "2"]);
    assert_eq!(none.code, 1);
    assert_eq!(report(&none)["status"], "failure");

    let ex = flipwide(dir.path(), &["experiment", "--s", "1", "--N", "4", "--m", "2"]);
    assert_eq!(ex.code, 0);
    let v = report(&ex);
    assert_eq!(v["result"]["r"], 4);
    assert_eq!(v["result"]["min_successful_budget"], 1);

    let bc = flipwide(dir.path(), &["check-biclique", "--in", "k26.g6", "--t", "2", "--out", "bc.json"]);
    assert_eq!(bc.code, 0);
    assert!(bc.stdout.is_empty());
    let saved = std::fs::read_to_string(dir.path().join("bc.json")).unwrap();
    let v: Value = serde_json::from_str(&saved).unwrap();
    assert_eq!(v["result"]["found"], false);
}

#[test]
fn reports_are_deterministic() {
    let dir = workdir();
    let strip = |run: &Run| {
        let mut v = report(run);
        v.as_object_mut().unwrap().remove("duration_ms");
        v.to_string()
    };
    let commands: [&[&str]; 4] = [
        &["convert", "--in", "star.g6", "--flips", "iso.json", "--r", "2", "--m", "5", "--t0", "2", "--mode", "best-effort"],
        &["search-wide", "--in", "k16.g6", "--a", "[2,3,4,5,6,7]", "--r", "4", "--m", "2", "--budget", "2"],
        &["experiment", "--s", "2", "--N", "4"],
        &["find-flat", "--in", "k26.g6", "--r", "3", "--m", "3"],
    ];
    for args in commands {
        let a = flipwide(dir.path(), args);
        let b = flipwide(dir.path(), args);
        assert_eq!(strip(&a), strip(&b), "{args:?}");
    }
}
