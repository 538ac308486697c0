mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::WORKED_PATH;

const BIN: &str = env!("CARGO_BIN_EXE_widepair");

fn widepair(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("spawn widepair")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn solve_each_algorithm() {
    for (algo, combined) in [("mlbdp", "19"), ("mba", "19"), ("oracle", "19"), ("ilp", "19")] {
        let o = widepair(&["solve", "--topology", WORKED_PATH, "--source", "0", "--dest", "3", "--algo", algo]);
        assert_eq!(o.status.code(), Some(0), "{algo}");
        assert!(stdout(&o).contains(&format!("combined: {combined}")), "{algo}: {}", stdout(&o));
    }
    let o = widepair(&["solve", "--topology", WORKED_PATH, "--source", "0", "--dest", "3"]);
    let text = stdout(&o);
    assert!(text.contains("red: 0-2-4-3 (bandwidth 12)"), "{text}");
    assert!(text.contains("blue: 0-1-3 (bandwidth 7)"), "{text}");
}

#[test]
fn no_pair_is_not_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let topo = dir.path().join("chain.topo");
    std::fs::write(&topo, "nodes 3\nlink 0 1 4\nlink 1 2 4\n").unwrap();
    let o = widepair(&["solve", "--topology", topo.to_str().unwrap(), "--source", "0", "--dest", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no disjoint pair"));
}

#[test]
fn invalid_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.topo");
    std::fs::write(&bad, "nodes 3\nlink 0 1 4\nlink 1 1 2\n").unwrap();
    let bad = bad.to_str().unwrap();

    let o = widepair(&["solve", "--topology", bad, "--source", "0", "--dest", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let cases: [&[&str]; 4] = [
        &["solve", "--topology", WORKED_PATH, "--source", "0", "--dest", "9"],
        &["solve", "--topology", WORKED_PATH, "--source", "0", "--dest", "3", "--algo", "dijkstra"],
        &["solve", "--topology", "/nonexistent/file.topo", "--source", "0", "--dest", "1"],
        &["bench", "--topology", WORKED_PATH],
    ];
    for args in cases {
        assert_eq!(widepair(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn path_cap_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = widepair(&[
        "bench", "--topology", WORKED_PATH, "--sweep", "fixed", "--path-cap", "3",
        "--out", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn oracle_subcommand() {
    let o = widepair(&["oracle", "--topology", WORKED_PATH, "--source", "0", "--dest", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("algorithm: oracle"));
    assert!(text.contains("combined: 19"));
}

#[test]
fn export_ilp_names_file_after_topology() {
    let dir = tempfile::tempdir().unwrap();
    let o = widepair(&[
        "export-ilp", "--topology", WORKED_PATH, "--source", "0", "--dest", "3",
        "--out", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lp = std::fs::read_to_string(dir.path().join("worked_example_0_3.lp")).unwrap();
    assert!(lp.contains("Maximize"));
    assert!(lp.trim_end().ends_with("End"));

    let explicit = dir.path().join("custom.lp");
    let o = widepair(&[
        "export-ilp", "--topology", WORKED_PATH, "--source", "0", "--dest", "3",
        "--out", explicit.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(explicit).unwrap(), lp);
}

#[test]
fn gen_writes_parseable_topology() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.topo");
    let o = widepair(&[
        "gen", "--nodes", "12", "--links", "20", "--seed", "5", "--max-bw", "100",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let g = widepair::parse_topology(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((g.node_count(), g.link_count()), (12, 20));
    assert!(g.is_connected());
    assert!(g.links().iter().all(|l| (1..=100).contains(&l.bandwidth)));

    let o = widepair(&["gen", "--nodes", "4", "--links", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_writes_report_and_plot_data() {
    let dir = tempfile::tempdir().unwrap();
    let o = widepair(&[
        "bench", "--gen", "8,12", "--sweep", "10,100", "--seed", "3", "--plot-data",
        "--out", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(dir.path().join("report.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert!(lines[0].starts_with("# topology="));
    assert_eq!(lines[1], "max_bw,algo,pairs_found,wall_time_ms,diff_total,diff_avg");
    assert_eq!(lines.len(), 2 + 2 * 3);
    for name in ["pairs_found.dat", "wall_time_ms.dat", "diff_total.dat", "diff_avg.dat"] {
        assert!(Path::new(&dir.path().join(name)).exists(), "{name}");
    }
}
