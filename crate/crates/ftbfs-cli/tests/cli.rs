//! End-to-end checks of the binary: every subcommand, the documented exit
//! codes, and the file formats as they cross the process boundary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ftbfs"))
}

fn workdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ftbfs-cli-{}-{tag}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_build_verify_round_trip() {
    let dir = workdir("round-trip");
    let graph = dir.join("lb4.graph");
    let ft = dir.join("lb4.ft");

    let out = run(&[
        "gen",
        "--family",
        "lb-single",
        "--d",
        "4",
        "--out",
        path_str(&graph),
    ]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("sources=0"));

    let out = run(&[
        "build",
        "--graph",
        path_str(&graph),
        "--sources",
        "0",
        "--mode",
        "exact",
        "--fault",
        "edge",
        "--out",
        path_str(&ft),
    ]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).starts_with("edges="));

    let out = run(&[
        "verify",
        "--graph",
        path_str(&graph),
        "--candidate",
        path_str(&ft),
        "--sources",
        "0",
        "--fault",
        "edge",
    ]);
    assert!(out.status.success(), "{out:?}");
    assert_eq!(stdout(&out).trim(), "OK");
}

#[test]
fn verify_reports_the_violation_and_exits_one() {
    let dir = workdir("violation");
    let graph = dir.join("lb3.graph");
    let ft = dir.join("lb3.ft");
    run(&[
        "gen",
        "--family",
        "lb-single",
        "--d",
        "3",
        "--out",
        path_str(&graph),
    ]);
    run(&[
        "build",
        "--graph",
        path_str(&graph),
        "--sources",
        "0",
        "--mode",
        "exact",
        "--out",
        path_str(&ft),
    ]);

    // drop the last kept edge (a bipartite block edge, which is necessary)
    let text = fs::read_to_string(&ft).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    let last_edge = lines
        .iter()
        .rposition(|l| !l.starts_with('#'))
        .expect("structure has edges");
    lines.remove(last_edge);
    fs::write(&ft, lines.join("\n")).unwrap();

    let out = run(&[
        "verify",
        "--graph",
        path_str(&graph),
        "--candidate",
        path_str(&ft),
        "--sources",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stdout(&out).starts_with("VIOLATION s=0 fault=edge:"),
        "{out:?}"
    );
}

#[test]
fn reduction_oracle_prints_the_cost_identity_value() {
    let dir = workdir("oracle");
    let sc = dir.join("five_sets.sc");
    let graph = dir.join("reduction.graph");
    let meta = dir.join("reduction.meta");
    // the worked five-set instance: optimum cover size 2
    fs::write(&sc, "4 5\n0 2 3\n0 2\n1 3\n2\n0 3\n").unwrap();

    let out = run(&[
        "gen",
        "--family",
        "reduction",
        "--setcover",
        path_str(&sc),
        "--R",
        "2",
        "--out",
        path_str(&graph),
        "--meta",
        path_str(&meta),
    ]);
    assert!(out.status.success(), "{out:?}");

    let meta_text = fs::read_to_string(&meta).unwrap();
    assert!(meta_text.contains("family: reduction"));
    assert!(meta_text.contains("target kappa = 2"));
    let etilde: usize = meta_text
        .lines()
        .find_map(|l| l.strip_prefix("target Etilde = "))
        .unwrap()
        .parse()
        .unwrap();

    let out = run(&["oracle", "--graph", path_str(&graph), "--sources", "0"]);
    assert!(out.status.success(), "{out:?}");
    let expected = etilde + 2 * 2;
    assert!(
        stdout(&out).starts_with(&format!("minimum {expected}\n")),
        "{out:?}"
    );
}

#[test]
fn oracle_respects_the_free_limit() {
    let dir = workdir("limit");
    let graph = dir.join("k4.graph");
    fs::write(&graph, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let out = run(&[
        "oracle",
        "--graph",
        path_str(&graph),
        "--sources",
        "0",
        "--free-limit",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(3), "{out:?}");
}

#[test]
fn approx_build_verifies_too() {
    let dir = workdir("approx");
    let graph = dir.join("bad3.graph");
    let ft = dir.join("bad3.ft");
    run(&[
        "gen",
        "--family",
        "bad-example",
        "--d",
        "3",
        "--out",
        path_str(&graph),
    ]);
    let out = run(&[
        "build",
        "--graph",
        path_str(&graph),
        "--sources",
        "0",
        "--mode",
        "approx",
        "--out",
        path_str(&ft),
    ]);
    assert!(out.status.success(), "{out:?}");
    let out = run(&[
        "verify",
        "--graph",
        path_str(&graph),
        "--candidate",
        path_str(&ft),
        "--sources",
        "0",
    ]);
    assert!(out.status.success(), "{out:?}");
}

#[test]
fn multi_source_family_runs_end_to_end() {
    let dir = workdir("multi");
    let graph = dir.join("multi.graph");
    let ft = dir.join("multi.ft");
    let out = run(&[
        "gen",
        "--family",
        "lb-multi",
        "--d",
        "2",
        "--sigma",
        "2",
        "--out",
        path_str(&graph),
    ]);
    let sources_line = stdout(&out);
    let sources = sources_line
        .trim()
        .rsplit_once("sources=")
        .unwrap()
        .1
        .to_string();
    let out = run(&[
        "build",
        "--graph",
        path_str(&graph),
        "--sources",
        &sources,
        "--mode",
        "exact",
        "--fault",
        "vertex",
        "--out",
        path_str(&ft),
    ]);
    assert!(out.status.success(), "{out:?}");
    let out = run(&[
        "verify",
        "--graph",
        path_str(&graph),
        "--candidate",
        path_str(&ft),
        "--sources",
        &sources,
        "--fault",
        "vertex",
    ]);
    assert!(out.status.success(), "{out:?}");
}

#[test]
fn experiment_writes_the_documented_csv_schema() {
    let dir = workdir("experiment");
    let csv = dir.join("sweep.csv");
    let out = bin()
        .env("FTBFS_THREADS", "2")
        .args([
            "experiment",
            "--family",
            "lb-single",
            "--range",
            "2:4",
            "--csv",
            path_str(&csv),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{out:?}");
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("family,params,n,m,built_edges,bound,verified,wall_ms")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3);
    for (row, d) in rows.iter().zip(2..) {
        assert!(row.starts_with(&format!("lb-single,d={d} ")));
        assert!(row.contains(",true,"));
    }
}

#[test]
fn commands_are_deterministic() {
    let dir = workdir("determinism");
    let g1 = dir.join("a.graph");
    let g2 = dir.join("b.graph");
    for out in [&g1, &g2] {
        run(&[
            "gen",
            "--family",
            "random",
            "--n",
            "20",
            "--p",
            "0.4",
            "--seed",
            "11",
            "--out",
            path_str(out),
        ]);
    }
    assert_eq!(
        fs::read_to_string(&g1).unwrap(),
        fs::read_to_string(&g2).unwrap()
    );

    let f1 = dir.join("a.ft");
    let f2 = dir.join("b.ft");
    for out in [&f1, &f2] {
        run(&[
            "build",
            "--graph",
            path_str(&g1),
            "--sources",
            "0,9,19",
            "--mode",
            "exact",
            "--out",
            path_str(out),
        ]);
    }
    assert_eq!(
        fs::read_to_string(&f1).unwrap(),
        fs::read_to_string(&f2).unwrap()
    );
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["gen", "--family", "lb-single", "--out", "/tmp/x.graph"]);
    assert_eq!(out.status.code(), Some(2)); // missing --d

    let out = run(&[
        "experiment",
        "--family",
        "reduction",
        "--range",
        "1:2",
        "--csv",
        "/tmp/x.csv",
    ]);
    assert_eq!(out.status.code(), Some(2)); // not a sweepable family

    let out = run(&[
        "verify",
        "--graph",
        "/nonexistent.graph",
        "--candidate",
        "/nonexistent.ft",
        "--sources",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .env("FTBFS_THREADS", "zero")
        .args([
            "gen",
            "--family",
            "random",
            "--n",
            "4",
            "--out",
            "/tmp/ftbfs-threads-test.graph",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
