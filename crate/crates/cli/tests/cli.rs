use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn kmedian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmedian"))
        .args(args)
        .env_remove("KMEDIAN_DATA_DIR")
        .output()
        .expect("binary runs")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = kmedian(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('\t')))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

/// Star with hub 10 and leaves 20..=23, plus a detached edge that the
/// largest-component step drops.
fn star_file(dir: &Path) -> String {
    let path = dir.join("star.txt");
    fs::write(&path, "# star\n10 20\n10 21\n10 22\n10 23\n99 98\n").unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn stats_reports_the_largest_component() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout_ok(&["stats", &star_file(dir.path())]);
    assert_eq!(field(&out, "vertices"), "5");
    assert_eq!(field(&out, "edges"), "4");
    assert_eq!(field(&out, "avg_degree"), "1.60");
    assert_eq!(field(&out, "max_degree"), "4");
    assert_eq!(field(&out, "simple_vertices"), "7");
}

#[test]
fn rank_prints_original_ids() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout_ok(&[
        "rank",
        &star_file(dir.path()),
        "--method",
        "degree",
        "--k",
        "1",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "# degree k=1 avg_distance=1.000000 farness=4");
    assert_eq!(lines[1..], ["10"]);
}

#[test]
fn eval_translates_ids_and_reports_shells() {
    let dir = tempfile::tempdir().unwrap();
    let file = star_file(dir.path());
    let out = stdout_ok(&["eval", &file, "--vertices", "20", "--shells"]);
    assert_eq!(field(&out, "farness"), "7");
    assert_eq!(field(&out, "avg_distance"), "1.750000");
    assert_eq!(field(&out, "shell_0"), "1");
    assert_eq!(field(&out, "shell_2"), "3");
    let bad = kmedian(&["eval", &file, "--vertices", "99"]);
    assert!(!bad.status.success());
    assert!(String::from_utf8_lossy(&bad.stderr).contains("largest component"));
}

#[test]
fn exact_on_a_path() {
    let out = stdout_ok(&["exact", "gen:path:5", "--k", "2"]);
    assert_eq!(field(&out, "optimal_value"), "1.000000");
    assert_eq!(field(&out, "subsets"), "10");
    assert_eq!(field(&out, "optimal_sets"), "3");
    let sets: Vec<&str> = out
        .lines()
        .filter_map(|l| l.strip_prefix("set\t"))
        .collect();
    assert_eq!(sets, ["0,3", "1,3", "1,4"]);
    let over = kmedian(&["exact", "gen:path:5", "--k", "2", "--budget", "3"]);
    assert!(!over.status.success());
}

#[test]
fn sample_is_seeded() {
    let args = [
        "sample",
        "gen:random:40:0.05:2",
        "--k",
        "3",
        "--n",
        "50",
        "--seed",
        "9",
    ];
    assert_eq!(stdout_ok(&args), stdout_ok(&args));
    assert_eq!(field(&stdout_ok(&args), "samples"), "50");
}

#[test]
fn hist_counts_every_subset() {
    let out = stdout_ok(&["hist", "gen:path:4", "--k", "1"]);
    assert_eq!(out, "# k=1 avg_distance count\n1.3333333333333333 2\n2 2\n");
}

#[test]
fn normalize_writes_compact_edges() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout_ok(&["normalize", &star_file(dir.path())]);
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn bench_writes_tables() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("run.spec");
    fs::write(
        &spec,
        "datasets = gen:star:4, missing-network\nmethods = degree, vrank, random\n\
         k_max = 2\nn = 10\nexact_k = 2\ntiming = omit\noutdir = out\n",
    )
    .unwrap();
    let out = kmedian(&["bench", "--spec", spec.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing-network"));
    let records = fs::read_to_string(dir.path().join("out/records.csv")).unwrap();
    let mut lines = records.lines();
    assert_eq!(
        lines.next(),
        Some("network,method,k,avg_distance,farness,wall_time_s")
    );
    assert_eq!(lines.next(), Some("gen:star:4,degree,1,1,4,0"));
    assert_eq!(records.lines().count(), 1 + 3 * 2);
    let optimal = fs::read_to_string(dir.path().join("out/error_to_optimal.csv")).unwrap();
    assert!(optimal.contains("gen:star:4,degree,0,1"), "{optimal}");
    assert!(dir.path().join("out/plot/gen_star_4.dat").exists());
    assert!(dir.path().join("out/failures.txt").exists());
}

#[test]
fn bad_method_is_a_usage_error() {
    let out = kmedian(&["rank", "gen:path:3", "--method", "closeness", "--k", "1"]);
    assert!(!out.status.success());
}
