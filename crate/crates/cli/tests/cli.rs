use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn pftil(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pftil"))
        .args(args)
        .env("PFTIL_CACHE", cache)
        .output()
        .expect("failed to run pftil")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn ok(args: &[&str]) -> String {
    let dir = tempfile::tempdir().unwrap();
    let o = pftil(args, &dir.path().join("cache.json"));
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

#[test]
fn counts() {
    assert_eq!(ok(&["count", "off-diagonal", "--n", "6"]), "312\n");
    assert_eq!(
        ok(&["count", "off-diagonal", "--n", "6", "--keep", "1,2,4,6"]),
        "204\n"
    );
    assert_eq!(
        ok(&["count", "off-diagonal", "--n", "5", "--keep", "1,2,4"]),
        "0\n"
    );
    assert_eq!(ok(&["count", "diagonal", "--n", "7"]), "190912\n");
    assert_eq!(ok(&["count", "aztec", "--n", "3"]), "64\n");
}

#[test]
fn count_agrees_with_oracle() {
    for n in 1..=6 {
        let n = n.to_string();
        assert_eq!(
            ok(&["count", "off-diagonal", "--n", &n]),
            ok(&["oracle", "--n", &n, "--class", "off-diagonal"])
        );
    }
    for keep in ["1,3,4", "2,5", "1"] {
        assert_eq!(
            ok(&["count", "diagonal", "--n", "5", "--keep", keep]),
            ok(&["oracle", "--n", "5", "--class", "diagonal", "--keep", keep])
        );
    }
    assert_eq!(
        ok(&["count", "all", "--n", "4", "--keep", "2,4"]),
        ok(&["oracle", "--n", "4", "--class", "all", "--keep", "2,4", "--engine", "dominoes"])
    );
}

#[test]
fn oracle_examples() {
    assert_eq!(
        ok(&["oracle", "--n", "4", "--class", "off-diagonal"]),
        "12\n"
    );
    assert_eq!(ok(&["oracle", "--n", "4", "--class", "diagonal"]), "132\n");
    assert_eq!(
        ok(&["oracle", "--n", "3", "--class", "all", "--engine", "dominoes"]),
        "64\n"
    );
}

#[test]
fn matrices() {
    let csv = ok(&["matrix", "--kind", "B", "--n", "8", "--format", "csv"]);
    let first: Vec<&str> = csv.lines().next().unwrap().split(',').collect();
    assert_eq!(first, ["0", "6", "18", "46", "114", "278", "674", "1630"]);
    assert_eq!(csv.lines().last().unwrap().split(',').next_back(), Some("0"));

    let a: Value = serde_json::from_str(&ok(&["matrix", "--kind", "A", "--n", "4"])).unwrap();
    let entries: Vec<(u64, u64, String)> = a["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e[0].as_u64().unwrap(),
                e[1].as_u64().unwrap(),
                e[2].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let want = [
        (1, 2, "2"),
        (1, 3, "2"),
        (1, 4, "2"),
        (2, 3, "2"),
        (2, 4, "6"),
        (3, 4, "10"),
    ];
    for (i, j, v) in want {
        assert!(entries.contains(&(i, j, v.to_string())), "a_{i},{j}");
    }

    let akt: Value = serde_json::from_str(&ok(&["matrix", "--kind", "Akt", "--n", "2"])).unwrap();
    assert_eq!(akt["order"], 2);
    assert_eq!(akt["entries"][0][2], serde_json::json!([[0, 1, "1"]]));
}

#[test]
fn conjecture_tables() {
    let out = ok(&["conjecture", "int", "--max-n", "8"]);
    for v in ["= 3 ", "= 149 ", "= 2661 ", "= 8669753 ", "= 1534148169 "] {
        assert!(out.contains(v), "{v} missing from\n{out}");
    }
    let out = ok(&["conjecture", "poly", "--max-n", "4"]);
    assert!(
        out.contains("o_4(k,t) = 13k^2 - 120kt + 256t^2  [verified]"),
        "{out}"
    );
    let doc: Value = serde_json::from_str(&ok(&[
        "conjecture",
        "int",
        "--max-n",
        "10",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["terms"][10]["status"], "extended");
}

#[test]
fn conjecture_sweep_to_25_uses_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let first = pftil(&["conjecture", "int", "--max-n", "25"], &cache);
    assert!(first.status.success());
    assert!(stdout(&first).contains("holds for n <= 25"));
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&cache).unwrap()).unwrap();
    assert_eq!(saved["version"], 1);
    assert_eq!(saved["int"]["7"], "8669753");
    let again = pftil(&["conjecture", "int", "--max-n", "25"], &cache);
    assert_eq!(stdout(&first), stdout(&again));
    let other = dir.path().join("explicit.json");
    let flagged = pftil(
        &[
            "conjecture",
            "int",
            "--max-n",
            "3",
            "--cache",
            other.to_str().unwrap(),
        ],
        &cache,
    );
    assert!(flagged.status.success());
    assert!(other.exists());
}

#[test]
fn decomposition_output() {
    let doc: Value =
        serde_json::from_str(&ok(&["decompose", "--n", "4", "--format", "json"])).unwrap();
    assert_eq!(doc["t"].as_array().unwrap().len(), 2);
    assert_eq!(doc["r"].as_array().unwrap().len(), 6);
    let text = ok(&["decompose", "--kind", "A", "--n", "4"]);
    assert!(text.starts_with("t_1 = 2\nt_2 = 6\n"), "{text}");
}

#[test]
fn sequences() {
    assert_eq!(ok(&["seq", "aztec", "--n", "3"]), "2 8 64\n");
    let d = ok(&["seq", "delannoy", "--n", "2", "--format", "csv"]);
    assert_eq!(d, "1,1,1\n1,3,5\n1,5,13\n");
    let s = ok(&["seq", "schroder", "--n", "2"]);
    assert_eq!(s.lines().count(), 3);
}

#[test]
fn selfcheck_passes_and_detects_corruption() {
    let doc: Value = serde_json::from_str(&ok(&["selfcheck", "--format", "json"])).unwrap();
    assert!(doc["total"].as_u64().unwrap() >= 30);
    assert_eq!(doc["failed"], 0);

    let dir = tempfile::tempdir().unwrap();
    let bad = pftil(
        &["selfcheck", "--corrupt", "2,5"],
        &dir.path().join("c.json"),
    );
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAIL matrix B(8)"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.json");
    for args in [
        &["count", "sideways", "--n", "3"][..],
        &["count", "off-diagonal", "--n", "3", "--keep", "1,9"],
        &["count", "off-diagonal", "--n", "3", "--keep", "x"],
        &["oracle", "--n", "9"],
        &["oracle", "--n", "6", "--engine", "dominoes"],
        &["matrix", "--kind", "C", "--n", "3"],
        &["conjecture", "int", "--max-n", "0"],
    ] {
        let o = pftil(args, &cache);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic_and_render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.json");
    let a = pftil(&["matrix", "--kind", "Akt", "--n", "6"], &cache);
    let b = pftil(&["matrix", "--kind", "Akt", "--n", "6"], &cache);
    assert_eq!(a.stdout, b.stdout);

    let out = dir.path().join("m.csv");
    let o = pftil(
        &[
            "matrix",
            "--kind",
            "B",
            "--n",
            "3",
            "--format",
            "csv",
            "--out",
            out.to_str().unwrap(),
        ],
        &cache,
    );
    assert!(o.status.success() && o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 3);

    for engine in ["paths", "dominoes"] {
        let svg = dir.path().join(format!("{engine}.svg"));
        let o = pftil(
            &[
                "oracle",
                "--n",
                "4",
                "--class",
                "off-diagonal",
                "--engine",
                engine,
                "--render",
                svg.to_str().unwrap(),
            ],
            &cache,
        );
        assert_eq!(stdout(&o), "12\n");
        let text = std::fs::read_to_string(&svg).unwrap();
        assert!(text.starts_with("<svg") && text.trim_end().ends_with("</svg>"));
    }
}
