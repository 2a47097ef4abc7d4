use std::io::Write;
use std::process::{Command, Output, Stdio};

fn threeev(args: &[&str], stdin: Option<&str>, jobs: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_threeev"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove("THREEEV_JOBS");
    if let Some(j) = jobs {
        cmd.env("THREEEV_JOBS", j);
    }
    let mut child = cmd.spawn().expect("binary runs");
    let input = stdin.unwrap_or("").to_string();
    let mut pipe = child.stdin.take().unwrap();
    std::thread::spawn(move || pipe.write_all(input.as_bytes()));
    child.wait_with_output().unwrap()
}

fn run(args: &[&str]) -> Output {
    threeev(args, None, None)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

const GOLDEN: &str = include_str!("../../core/data/feasible_n100.tsv");

#[test]
fn table_matches_bundled_file() {
    let o = run(&["table", "--max-n", "100"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), GOLDEN);
    assert_eq!(stdout(&run(&["table", "--max-n", "14"])).lines().count(), 3);
    assert_eq!(stdout(&run(&["table", "--max-n", "5"])).lines().count(), 1);
}

#[test]
fn table_independent_of_jobs() {
    let a = threeev(&["table", "--max-n", "60"], None, Some("1"));
    let b = threeev(&["table", "--max-n", "60"], None, Some("3"));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn construct_pipes_into_certify() {
    let g = stdout(&run(&["construct", "van-dam-fano"]));
    let o = threeev(&["certify", "-"], Some(&g), None);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["spectrum"]["theta0"], 8);
    assert_eq!(r["spectrum"]["m1"], 6);

    let g = stdout(&run(&["construct", "petersen"]));
    let cone = stdout(&threeev(&["cone", "-"], Some(&g), None));
    let r = json(&threeev(&["certify", "-"], Some(&cone), None));
    assert_eq!((r["spectrum"]["theta0"].as_i64(), r["spectrum"]["theta1"].as_i64()), (Some(5), Some(1)));
    assert_eq!((r["spectrum"]["theta2"].as_i64(), r["spectrum"]["m2"].as_i64()), (Some(-2), Some(5)));
}

#[test]
fn exit_codes() {
    // C₆
    let o = threeev(&["certify", "-"], Some("EhEG\n"), None);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["minimal_polynomial_degree"], 4);
    assert_eq!(threeev(&["certify", "-"], Some("J??\n"), None).status.code(), Some(2));
    assert_eq!(run(&["certify", "/nonexistent/file.g6"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "no-such-graph"]).status.code(), Some(64));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["table", "--jobs", "0"]).status.code(), Some(64));
}

#[test]
fn complement_and_switch() {
    let g = stdout(&run(&["construct", "van-dam-fano"]));
    let c = stdout(&threeev(&["complement", "-"], Some(&g), None));
    let back = stdout(&threeev(&["complement", "-"], Some(&c), None));
    assert_eq!(back, g);
    let s = stdout(&threeev(&["switch", "-", "--class", "1"], Some(&g), None));
    let again = stdout(&threeev(&["switch", "-", "--set", "0,1,2,3,4,5,6"], Some(&s), None));
    // Class 1 is the blocks; switching with respect to a set or its complement is the same.
    assert_eq!(again, g);
}

#[test]
fn star_search_smoke_and_manifest() {
    let dir = std::env::temp_dir().join(format!("threeev-cli-{}", std::process::id()));
    let o = run(&["star-search", "--bundled", "star30-smoke", "--out", dir.to_str().unwrap()]);
    assert!(o.status.success());
    let m = json(&o);
    assert_eq!(m["graphs_found"], 1);
    assert_eq!(m["theta"], 2);
    assert_eq!(m["m"], 15);
    let on_disk: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(on_disk, m);
    let g = std::fs::read_to_string(dir.join("graph_000.g6")).unwrap();
    assert!(threeev(&["certify", "-"], Some(&g), None).status.success());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn star_search_36() {
    let o = run(&["star-search", "--bundled", "star36"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["graphs_found"], 2);
}

#[test]
fn star_search_from_file_with_counts() {
    let dir = std::env::temp_dir().join(format!("threeev-cli-c-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    // (3,3,3) + (3,3,3): yields the graph whose V₂ and V₃ are three triangles.
    let c = "QwCW?CB???_B????_?W????C??W\n";
    let path = dir.join("c.g6");
    std::fs::write(&path, c).unwrap();
    let p = path.to_str().unwrap();
    let args = ["star-search", "--complement", p, "--theta", "-3", "--multiplicity", "18", "--count", "0..9:6", "--count", "9..18:3"];
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["graphs_found"], 1);
    assert_eq!(run(&["star-search", "--complement", p, "--theta", "-3", "--multiplicity", "18", "--count", "bad"]).status.code(), Some(64));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn nonexist_round_trip() {
    let o = run(&["nonexist", "--max-n", "100"]);
    assert!(o.status.success());
    let rs = json(&o);
    assert_eq!(rs.as_array().unwrap().len(), 4);
    let path = std::env::temp_dir().join(format!("threeev-ref-{}.json", std::process::id()));
    std::fs::write(&path, stdout(&o)).unwrap();
    let v = run(&["nonexist", "--verify", path.to_str().unwrap()]);
    assert!(v.status.success());
    assert!(json(&v).as_array().unwrap().iter().all(|r| r["verified"] == true));

    let mut tampered = rs.clone();
    tampered[0]["candidate"]["n1"] = serde_json::json!(23);
    std::fs::write(&path, tampered.to_string()).unwrap();
    assert_eq!(run(&["nonexist", "--verify", path.to_str().unwrap()]).status.code(), Some(1));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn families() {
    let r = json(&run(&["families", "comp", "--t", "1"]));
    assert_eq!(r["spectrum"], "{[27]^1, [3]^19, [-3]^28}");
    assert_eq!(r["complement_spectrum"][2]["value"], "-4");
    assert_eq!(r["complement_spectrum"][2]["multiplicity"], 20);
    let r = json(&run(&["families", "switch", "--s", "2", "--t", "1"]));
    assert_eq!(r["candidate"]["n"], 45);
    assert_eq!(r["switched_spectrum"][0]["value"], "14");
    assert_eq!(run(&["families", "comp", "--t", "0"]).status.code(), Some(1));
}

#[test]
fn feasible_json() {
    let o = run(&["feasible", "--max-n", "30", "--format", "json"]);
    let cs = json(&o);
    assert_eq!(cs.as_array().unwrap().len(), 8);
    let o = run(&["nonexist", "--candidates", "/nonexistent.json"]);
    assert_eq!(o.status.code(), Some(2));
}
