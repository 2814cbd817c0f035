//! End-to-end tests of the `cy2` binary: subcommand output, exit codes,
//! file formats, and the enumeration cache.

use std::process::{Command, Output};

fn cy2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cy2"))
        .args(args)
        .env_remove("CY2_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn count_verify_agrees() {
    let out = cy2(&["count", "--family", "a", "--n", "2", "--t", "2", "--verify"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["formula"], 32);
    assert_eq!(v["enumerated"], 32);
    assert_eq!(v["agree"], true);
}

#[test]
fn count_without_verify_reports_formula_only() {
    let out = cy2(&["count", "--family", "d", "--n", "1", "--t", "1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["formula"], 10);
    assert_eq!(v["enumerated"], serde_json::Value::Null);
    assert_eq!(v["agree"], serde_json::Value::Null);
}

#[test]
fn perp_reproduces_the_worked_list() {
    let out = cy2(&[
        "perp", "--family", "a", "--n", "2", "--t", "2", "--set", "[[1,3]]", "--side", "right",
        "--shift", "-1",
    ]);
    assert!(out.status.success());
    let v: Vec<serde_json::Value> = serde_json::from_str(stdout(&out).trim()).unwrap();
    let reps: Vec<(i64, i64)> = v
        .iter()
        .map(|e| {
            let r = e["rep"].as_array().unwrap();
            (r[0].as_i64().unwrap(), r[1].as_i64().unwrap())
        })
        .collect();
    // Orbit representatives of the eight listed classes, in table order
    // (sorted by length, then start; the class listed as (1,9) has the
    // shorter representative (3,10)).
    assert_eq!(
        reps,
        vec![(1, 3), (1, 4), (3, 6), (3, 7), (1, 6), (1, 7), (3, 9), (3, 10)]
    );
}

#[test]
fn malformed_set_exits_2_and_names_the_element() {
    let out = cy2(&[
        "perp", "--family", "a", "--n", "2", "--t", "2", "--set", "[[1,2]]", "--side", "right",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("[1, 2]"), "stderr names the element: {err}");
}

#[test]
fn usage_error_exits_2() {
    let out = cy2(&["count", "--family", "q", "--n", "2", "--t", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_roundtrips_through_a_file() {
    let dir = std::env::temp_dir().join(format!("cy2-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pairs.json");
    let out = cy2(&[
        "enumerate", "--family", "d", "--n", "1", "--t", "1", "--hearts", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let records: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(records.len(), 10);
    for r in &records {
        assert!(r.get("x").is_some() && r.get("y").is_some() && r.get("core").is_some());
        assert!(r.get("t_structure").is_some());
        assert!(r.get("heart").is_some());
        assert!(r.get("d1_class").is_some());
    }
    // Re-emitting to a second file must produce identical bytes.
    let path2 = dir.join("pairs2.json");
    let out2 = cy2(&[
        "enumerate", "--family", "d", "--n", "1", "--t", "1", "--hearts", "--out",
        path2.to_str().unwrap(),
    ]);
    assert!(out2.status.success());
    assert_eq!(text, std::fs::read_to_string(&path2).unwrap());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn brute_force_flag_matches_structured_output() {
    let fast = cy2(&["enumerate", "--family", "a", "--n", "1", "--t", "2"]);
    let brute = cy2(&["enumerate", "--family", "a", "--n", "1", "--t", "2", "--brute-force"]);
    assert!(fast.status.success() && brute.status.success());
    assert_eq!(stdout(&fast), stdout(&brute));
}

#[test]
fn workers_flag_does_not_change_output() {
    let one = cy2(&["enumerate", "--family", "a", "--n", "2", "--t", "2"]);
    let four = cy2(&["enumerate", "--family", "a", "--n", "2", "--t", "2", "--workers", "4"]);
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn cache_dir_is_used_and_consistent() {
    let dir = std::env::temp_dir().join(format!("cy2-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_cy2"))
            .args(args)
            .env("CY2_CACHE_DIR", &dir)
            .output()
            .unwrap()
    };
    let first = run(&["enumerate", "--family", "d", "--n", "1", "--t", "2"]);
    assert!(first.status.success());
    let entries: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert_eq!(entries.len(), 1, "one cache entry per spec");
    let second = run(&["enumerate", "--family", "d", "--n", "1", "--t", "2"]);
    assert_eq!(
        String::from_utf8_lossy(&first.stdout),
        String::from_utf8_lossy(&second.stdout)
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn wings_subcommand_reports_the_reading() {
    let out = cy2(&[
        "wings", "--family", "a", "--n", "2", "--t", "2", "--set", "[[1,3],[1,4],[2,4]]",
    ]);
    assert!(out.status.success());
    let v: Vec<serde_json::Value> = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v.len(), 1);
    assert_eq!(v[0]["apex"]["rep"], serde_json::json!([1, 4]));
    assert_eq!(v[0]["members"].as_array().unwrap().len(), 3);
}

#[test]
fn wings_of_a_non_rigid_half_exit_2() {
    let out = cy2(&["wings", "--family", "a", "--n", "2", "--t", "2", "--set", "[[1,5]]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn render_bare_polygon() {
    let out = cy2(&["render", "--family", "d", "--n", "1", "--t", "1"]);
    assert!(out.status.success());
    let svg = stdout(&out);
    assert!(svg.contains("<svg"));
    assert_eq!(svg.matches("<text").count(), 8, "bare 8-gon");
}

#[test]
fn render_type_d_set() {
    let out = cy2(&[
        "render", "--family", "d", "--n", "1", "--t", "1", "--set",
        r#"[{"pair":[1,3]},{"diam":1,"color":"g"}]"#,
    ]);
    assert!(out.status.success());
    let svg = stdout(&out);
    // The lifted orbit draws pairs in black plus both orbit diameters.
    assert!(svg.contains("#2a9d2a") || svg.contains("#d0342c"));
}

#[test]
fn build_dump_shape() {
    let out = cy2(&["build", "--family", "a", "--n", "2", "--t", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["polygon"], 15);
    assert_eq!(v["indecs"].as_array().unwrap().len(), 18);
    assert_eq!(v["ext"].as_array().unwrap().len(), 18);
    assert_eq!(v["ext"][0].as_str().unwrap().len(), 18);
    assert_eq!(
        v["indecs"].as_array().unwrap().iter().filter(|i| i["rigid"] == true).count(),
        6
    );
}
