use serde_json::Value;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gamegraph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json_ok(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gamegraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, text: &str) -> String {
    let p = scratch(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn save(name: &str, args: &[&str]) -> String {
    let p = scratch(name);
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    std::fs::write(&p, out.stdout).unwrap();
    p.to_str().unwrap().to_string()
}

fn all_passed(report: &Value) -> bool {
    report["assertions"]
        .as_array()
        .unwrap()
        .iter()
        .all(|a| a["passed"] == Value::Bool(true))
}

#[test]
fn abs3_present_forces_seven_against_first_fit() {
    let r = json_ok(&["force", "--game", "abs", "--k", "3", "--m", "2", "--algorithm", "first_fit"]);
    assert!(r["colors_used"].as_u64().unwrap() >= 7);
    assert!(r["rounds"].as_u64().unwrap() <= 49);
    assert!(all_passed(&r));
    let names: Vec<&str> = r["assertions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| a["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"forced_colors") && names.contains(&"vertex_bound"));
    assert_eq!(r["round_digests"].as_array().unwrap().len(), r["rounds"].as_u64().unwrap() as usize);
}

#[test]
fn figure2_extraction_has_five_vertices() {
    let gg = json_ok(&["extract", "--presenter", "figure2"]);
    assert_eq!(gg["game"], "int(2)");
    assert_eq!(gg["graph"]["n"], 5);
    assert_eq!(gg["parent"].as_array().unwrap().len(), 5);
}

#[test]
fn k4_is_two_colorable_without_triangles() {
    let f = write("k4.json", r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#);
    let r = json_ok(&["chromatic", "--kfree", "3", &f]);
    assert_eq!(r["kfree_chromatic"], 2);
    let r = json_ok(&["chromatic", &f]);
    assert_eq!(r["chromatic"], 4);
    assert_eq!(r["omega"], 4);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["force", "--game", "iov", "--k", "3", "--presenter", "random", "--rounds", "25", "--seed", "9",
        "--algorithm", "random", "--trials", "4", "--jobs", "3"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let other = run(&["force", "--game", "iov", "--k", "3", "--presenter", "random", "--rounds", "25", "--seed", "10",
        "--algorithm", "random", "--trials", "4"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn timing_only_on_request() {
    let r = json_ok(&["force", "--presenter", "figure5", "--algorithm", "coco_online"]);
    assert!(r.get("wall_ms").is_none());
    assert_eq!(r["colors_used"], 3);
    let r = json_ok(&["force", "--presenter", "figure5", "--timing"]);
    assert!(r.get("wall_ms").is_some());
}

#[test]
fn bad_input_gives_json_error() {
    for args in [
        vec!["force", "--game", "nonsense"],
        vec!["force", "--no-such-flag"],
        vec!["chromatic", "/nonexistent/graph.json"],
        vec!["force", "--game", "int", "--algorithm", "coco_online"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let e: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert!(e["error"].is_string() && e["message"].is_string());
    }
    let f = write("bad.json", r#"{"n":2,"edges":[[0,5]]}"#);
    let out = run(&["chromatic", &f]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn value_of_coco2() {
    let r = json_ok(&["value", "--game", "coco", "--k", "2", "--rounds", "4", "--max-colors", "4"]);
    assert_eq!(r["value"], 3);
}

#[test]
fn synthesize_and_verify_round_trips() {
    for (presenter, k) in [("figure2", "2"), ("figure5", "2"), ("present", "2")] {
        let gg = save(&format!("{presenter}.gg.json"), &["extract", "--presenter", presenter, "--k", k]);
        let svg = scratch(&format!("{presenter}.svg"));
        let model = save(
            &format!("{presenter}.model.json"),
            &["synthesize", &gg, "--svg", svg.to_str().unwrap()],
        );
        assert!(std::fs::read_to_string(&svg).unwrap().contains("<svg"));
        let mode = if presenter == "figure2" { "intersection" } else { "" };
        let mut args = vec!["verify", model.as_str(), "--expected", gg.as_str()];
        if !mode.is_empty() {
            args.extend(["--mode", mode]);
        }
        let r = json_ok(&args);
        assert_eq!(r["matches"], true, "{presenter}");
    }
}

#[test]
fn verify_mismatch_exits_one() {
    let gg = save("f2.gg.json", &["extract", "--presenter", "figure2"]);
    let model = save("f2.model.json", &["synthesize", &gg]);
    let other = write("empty5.json", r#"{"n":5,"edges":[]}"#);
    let out = run(&["verify", &model, "--expected", &other, "--mode", "intersection"]);
    assert_eq!(out.status.code(), Some(1));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["matches"], false);
}

#[test]
fn offline_coloring_and_decomposition() {
    let gg = save("p2.gg.json", &["extract", "--presenter", "present", "--k", "2"]);
    for offline in ["exact", "filament"] {
        let r = json_ok(&["color-offline", &gg, "--offline", offline]);
        let palette = r["certificate"]["palette"].as_u64().unwrap();
        let bound: u64 = r["certificate"]["bound"].as_str().unwrap().parse().unwrap();
        assert!(palette >= 3 && palette <= bound);
    }
    let model = save("p2.model.json", &["synthesize", &gg]);
    let d = json_ok(&["decompose", &model]);
    assert_eq!(d["levels_ok"], true);
    assert_eq!(d["k"], 2);
    let r = json_ok(&["color-offline", &model]);
    assert!(r["certificate"]["omega"] == 2);

    let iv = write(
        "intervals.json",
        r#"{"kind":"intervals","intervals":[{"l":"0","r":"10"},{"l":"5","r":"12"},{"l":"-3","r":"2"},{"l":"11","r":"20"},{"l":"-2","r":"15"}]}"#,
    );
    let r = json_ok(&["color-offline", &iv]);
    assert_eq!(r["certificate"]["palette"], 3);
    let d = json_ok(&["decompose", &iv, "--k", "2"]);
    assert_eq!(d["order"].as_array().unwrap().len(), 5);
}

#[test]
fn play_reads_colors_from_stdin() {
    let mut child = bin()
        .args(["play", "--presenter", "figure2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"0\n1\nx\n0\n2\n0\n1\n2\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("not a color"));
    assert!(text.contains("clashes"));
    let last: Value = serde_json::from_str(text.lines().last().unwrap().trim_start_matches("color> ")).unwrap();
    assert!(last["colors_used"].as_u64().unwrap() >= 3);
}
