use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diagram-homology"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const ALPHA: &str = "5; {-1,4},{-2,-3},{-4,2},{1,3},{-5},{5}";
const BETA: &str = "5; {-1,-3},{-2,1},{-4,5},{3,4},{-5},{2}";

#[test]
fn multiply_prints_the_scaled_product() {
    let o = run(&["multiply", "--n", "5", "--lhs", ALPHA, "--rhs", BETA]);
    assert_eq!(o.status.code(), Some(0));
    let expected: diagram_homology::Diagram = "5; {-1,5},{-2,-3},{-4,1},{3,4},{-5},{2}".parse().unwrap();
    assert_eq!(stdout(&o).trim(), format!("delta^1 epsilon^1 * {expected}"));
}

#[test]
fn motzkin_over_q_passes() {
    let o = run(&["verify", "motzkin", "--n", "2", "--ring", "Q", "--delta", "7", "--epsilon", "1", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.len() >= 4);
    assert!(lines.iter().all(|v| v["pass"] == true));
}

#[test]
fn non_unit_epsilon_exits_with_two() {
    let o = run(&["verify", "main-theorem", "--n", "2", "--ring", "Z", "--delta", "0", "--epsilon", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("epsilon is not a unit in Z"));
}

#[test]
fn usage_errors_exit_with_64() {
    assert_eq!(run(&["verify", "no-such-check"]).status.code(), Some(64));
    assert_eq!(run(&["tor", "--family", "rbr", "--n", "2", "--ring", "Fp:4"]).status.code(), Some(64));
    assert_eq!(run(&["multiply", "--n", "2", "--lhs", "2; {1,2", "--rhs", "2; {1,2}"]).status.code(), Some(64));
    assert_eq!(run(&["verify", "vanishing", "--family", "rbr", "--n", "2", "--X", "3"]).status.code(), Some(64));
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "--family", "motzkin", "--n", "2"]);
    assert_eq!(stdout(&o).lines().count(), 9);
    let o = run(&["enumerate", "--family", "rook-brauer", "--n", "2"]);
    assert_eq!(stdout(&o).lines().count(), 10);
}

#[test]
fn reports_are_stored_and_deterministic_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["--reports-dir", d, "verify", "decompose-B", "--family", "rbr", "--n", "3"];
    let one = Command::new(env!("CARGO_BIN_EXE_diagram-homology"))
        .args(args)
        .env("DIAGRAM_HOMOLOGY_THREADS", "1")
        .output()
        .unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_diagram-homology"))
        .args(args)
        .env("DIAGRAM_HOMOLOGY_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let files: Vec<_> = std::fs::read_dir(dir.path().join("decompose-B")).unwrap().collect();
    assert_eq!(files.len(), 1);
    let stored = std::fs::read(files[0].as_ref().unwrap().path()).unwrap();
    assert_eq!(stored, one.stdout);
}

#[test]
fn csv_and_text_formats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let o = run(&["--format", "csv", "--output", path.to_str().unwrap(), "tor", "--family", "rbr", "--n", "2", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let computed: Vec<String> = rdr.records().map(|r| r.unwrap()[11].to_string()).collect();
    assert_eq!(computed, ["Z", "Z/2", "0", "Z/2"]);
    let o = run(&["--format", "text", "verify", "resolution", "--family", "motzkin", "--n", "2", "--delta", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().last().unwrap().ends_with("checks passed"));
}

#[test]
fn sequential_flag_gives_identical_output() {
    let args = ["verify", "shapiro", "--n", "2", "--m", "1", "--ring", "Fp:2", "--delta", "1"];
    let par = run(&args);
    let mut seq_args = vec!["--sequential"];
    seq_args.extend(args);
    let seq = run(&seq_args);
    assert_eq!(par.status.code(), Some(0));
    assert_eq!(par.stdout, seq.stdout);
}
