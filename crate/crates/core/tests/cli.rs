use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reesmult")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

const X2Y3: &str = r#"{"nvars":2,"generators":[[2,0],[0,3]]}"#;
const MXY2: &str = r#"{"nvars":2,"generators":[[2,0],[1,1],[0,2]]}"#;

#[test]
fn newton_lists_facets() {
    let o = run(&["newton", "-i", X2Y3]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v["inequalities"].as_array().unwrap().iter().any(|s| s == "3X+2Y>=6"));
    let o = run(&["newton", "-i", "[[0,0]]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("ht(a)=0"));
    let o = run(&["newton", "-i", r#"{"nvars":2,"generators":[]}"#]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn multiplier_module_and_ideal() {
    let o = run(&["multiplier", "-i", X2Y3, "--lambda", "5/6", "--module", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3X+2Y>=6"));
    let o = run(&["multiplier", "-i", X2Y3, "--lambda", "0", "--ideal"]);
    let v = json(&o);
    assert_eq!(v["ambient"], "RING");
    let o = run(&["multiplier", "-i", X2Y3, "--lambda", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("rationals must be p/q"));
}

#[test]
fn lct_and_jumps() {
    let o = run(&["lct", "-i", X2Y3]);
    assert_eq!(json(&o)["lct"], "5/6");
    let o = run(&["lct", "-i", "[[0,0]]"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["jumps", "-i", X2Y3, "--max", "2"]);
    let v = json(&o);
    assert_eq!(v["jumps"], serde_json::json!(["5/6", "7/6", "4/3", "3/2", "5/3", "11/6", "2"]));
    assert_eq!(v["periodicityFailures"], serde_json::json!([]));
}

#[test]
fn cones_and_pieces() {
    let o = run(&["ext-rees-cone", "-i", MXY2]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["kind"], "EXTENDED_REES");
    let o = run(&["rees-cone", "-i", MXY2]);
    assert_eq!(json(&o)["kind"], "REES");
    let o = run(&["canonical", "-i", MXY2, "--format", "text"]);
    assert!(stdout(&o).contains("OMEGA_T"));
    let o = run(&["graded-piece", "-i", MXY2, "--lambda", "1/2", "--k", "0", "--format", "text"]);
    assert!(stdout(&o).contains("X+Y>=2"));
    let o = run(&["rees-cone", "-i", X2Y3]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "B2", "-i", MXY2, "--lambda", "1/2", "--k", "-3..6"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["overall"], true);
    assert_eq!(v["kRange"], serde_json::json!([-3, 6]));

    let o = run(&["verify", "B2", "-i", X2Y3]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("ideal not normal"));
    assert!(stderr(&o).contains("--closure"));

    let o = run(&["verify", "B2", "-i", X2Y3, "--closure"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("notice"));

    let o = run(&["verify", "local", "-m", r#"{"n":2,"m":2,"exps":[2,3]}"#, "--lambda", "5/6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["overall"], true);

    let o = run(&["verify", "A", "-i", MXY2, "--lambda", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["pairs"]["T"]["rational"], false);

    let o = run(&["verify", "B1", "-i", "[[1,0],[0,1]]", "--k", "0..5"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn parse_and_resource_errors() {
    assert_eq!(run(&["verify", "B2", "-i", "{broken"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "B2", "-i", MXY2, "--k", "3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_reesmult"))
        .args(["verify", "B2", "-i", MXY2, "--box", "100000"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn output_file_and_repeatability() {
    let dir = std::env::temp_dir().join(format!("reesmult-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = run(&["verify", "B2", "-i", MXY2, "--lambda", "1/3", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let first = std::fs::read(&path).unwrap();
    let again = run(&["verify", "B2", "-i", MXY2, "--lambda", "1/3"]);
    assert_eq!(first, again.stdout);
    let ideal_file = dir.join("ideal.json");
    std::fs::write(&ideal_file, MXY2).unwrap();
    let o = run(&["lct", "-i", ideal_file.to_str().unwrap()]);
    assert_eq!(json(&o)["lct"], "1");
    std::fs::remove_dir_all(&dir).unwrap();
}
