use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use rainbow_lll::Graph;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow-lll"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn stats_reports_cherries() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.txt", &Graph::cycle(5).to_text());
    let out = bin(&["stats", "--graph", &c5]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("q = 3"), "{text}");
    assert!(text.contains("total_cherries = 5"));

    let k4 = write(dir.path(), "k4.txt", &Graph::complete(4).to_text());
    let text = stdout(&bin(&["stats", "--graph", &k4]));
    assert!(text.contains("q = 9") && text.contains("total_cherries = 12"));

    let empty = write(dir.path(), "empty.txt", "n 4\n");
    let text = stdout(&bin(&["stats", "--graph", &empty]));
    assert!(
        text.contains("q = 0")
            && text.contains("total_cherries = 0")
            && text.contains("max_degree = 0")
    );
}

#[test]
fn bad_graph_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "n 2\n0 0\n");
    let out = bin(&["stats", "--graph", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(
        bin(&["stats", "--graph", "/nonexistent/file"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn thresholds() {
    let k = |args: &[&str]| stdout(&bin(args)).trim().to_owned();
    assert_eq!(
        k(&[
            "threshold",
            "--theorem",
            "thm7",
            "--n",
            "1020",
            "--delta",
            "2"
        ]),
        "5"
    );
    assert_eq!(k(&["threshold", "--theorem", "thm5", "--n", "640"]), "10");
    assert_eq!(
        k(&[
            "threshold",
            "--theorem",
            "cor4",
            "--n",
            "1000",
            "--delta",
            "2"
        ]),
        "11"
    );
    assert_eq!(
        k(&[
            "threshold",
            "--theorem",
            "thm2",
            "--n",
            "1000000",
            "--delta",
            "2"
        ]),
        "0"
    );
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c1000.txt", &Graph::cycle(1000).to_text());
    assert_eq!(
        k(&[
            "threshold",
            "--theorem",
            "thm3",
            "--n",
            "1000",
            "--graph",
            &c
        ]),
        "22"
    );
    let zero = bin(&[
        "threshold",
        "--theorem",
        "thm7",
        "--n",
        "100",
        "--delta",
        "0",
    ]);
    assert_eq!(zero.status.code(), Some(2));
}

#[test]
fn certify_standard_mu() {
    let holds = bin(&[
        "certify",
        "--mode",
        "rainbow",
        "--n",
        "204",
        "--delta",
        "1",
        "--k",
        "4",
        "--paper-mu",
    ]);
    assert_eq!(holds.status.code(), Some(0), "{}", stdout(&holds));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&holds)).unwrap();
    assert_eq!(doc["certificate"]["verdict"], "holds");

    let below = bin(&[
        "certify", "--mode", "rainbow", "--n", "76", "--delta", "1", "--k", "1",
    ]);
    assert_eq!(below.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&below)).unwrap();
    let failed: Vec<&str> = doc["chain"]["steps"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["holds"] == false)
        .map(|s| s["label"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"1/(n)_4 <= (51/(50n))^4"), "{failed:?}");

    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c1000.txt", &Graph::cycle(1000).to_text());
    let proper = bin(&[
        "certify",
        "--mode",
        "proper",
        "--n",
        "1000",
        "--graph",
        &c,
        "--k",
        "22",
        "--paper-mu",
    ]);
    assert_eq!(proper.status.code(), Some(0));
}

#[test]
fn certify_search_mu() {
    let out = bin(&[
        "certify",
        "--mode",
        "rainbow",
        "--n",
        "420",
        "--delta",
        "1",
        "--k",
        "10",
        "--search-mu",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["search"]["certificate"]["variant"], "cluster-two-type");
}

#[test]
fn gen_then_find_then_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let colouring = dir.path().join("chi.txt");
    let colouring = colouring.to_str().unwrap();
    let gen = bin(&[
        "gen", "--n", "6", "--k", "2", "--mode", "local", "--seed", "1", "-o", colouring,
    ]);
    assert_eq!(gen.status.code(), Some(0));
    let c6 = write(dir.path(), "c6.txt", &Graph::cycle(6).to_text());
    let found = bin(&[
        "find",
        "--graph",
        &c6,
        "--colouring",
        colouring,
        "--mode",
        "proper",
        "--seed",
        "1",
    ]);
    assert_eq!(found.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&found)).unwrap();
    assert_eq!(doc["status"], "found");
    let oracle = bin(&[
        "oracle",
        "--graph",
        &c6,
        "--colouring",
        colouring,
        "--mode",
        "proper",
    ]);
    assert_eq!(oracle.status.code(), Some(0));
}

#[test]
fn failures_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.txt", &Graph::path(3).to_text());
    let mono = write(dir.path(), "mono.txt", "n 3\n0 1 0\n0 2 0\n1 2 0\n");
    let oracle = bin(&[
        "oracle",
        "--graph",
        &p3,
        "--colouring",
        &mono,
        "--mode",
        "proper",
    ]);
    assert_eq!(oracle.status.code(), Some(1));
    assert!(stdout(&oracle).contains("no valid embedding"));
    let find = bin(&[
        "find",
        "--graph",
        &p3,
        "--colouring",
        &mono,
        "--mode",
        "proper",
        "--seed",
        "0",
        "--max-resamples",
        "0",
    ]);
    assert_eq!(find.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&find)).unwrap();
    assert_eq!(doc["status"], "budget-exhausted");
    assert_eq!(doc["resamples"], 0);
}

#[test]
fn experiment_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "spec.toml",
        "master_seed = 5\nmode = \"proper\"\ngraph = \"circulant\"\ncolouring = \"local\"\nn = [40, 60]\nk = [2]\ndelta = [2, 4]\ntrials = 4\n",
    );
    let csv = |name: &str| {
        let path = dir.path().join(name);
        let out = bin(&["experiment", "--spec", &spec, "-o", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        fs::read_to_string(path).unwrap()
    };
    let a = csv("a.csv");
    assert_eq!(a, csv("b.csv"));
    assert!(a.starts_with("trial_id,n,delta,k,mode,seed,outcome,resamples,ms\n"));
    assert_eq!(a.lines().count(), 17);
}
