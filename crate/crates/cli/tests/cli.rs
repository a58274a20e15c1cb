use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hessloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hessloc"))
        .args(args)
        .env_remove("HESSLOC_CACHE")
        .env_remove("HESSLOC_MAX_N")
        .env_remove("HESSLOC_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hessloc(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

/// `(partition, q-coefficients)` pairs of a JSON expansion, sorted.
fn terms(v: &Value) -> Vec<(Vec<u64>, Vec<i64>)> {
    assert_eq!(v["expansion"]["basis"], "e");
    let mut out: Vec<_> = v["expansion"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let p = t["partition"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect();
            let c = t["coeff"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_i64().unwrap())
                .collect();
            (p, c)
        })
        .collect();
    out.sort();
    out
}

fn expect(list: &[(&[u64], &[i64])]) -> Vec<(Vec<u64>, Vec<i64>)> {
    let mut v: Vec<_> = list.iter().map(|(p, c)| (p.to_vec(), c.to_vec())).collect();
    v.sort();
    v
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn csf_running_example() {
    let got = terms(&json(&["csf", "--hess", "2,4,4,5,6,6", "--basis", "e"]));
    let want = expect(&[
        (&[3, 2, 1], &[0, 0, 1, 3, 1]),
        (&[3, 3], &[0, 0, 1, 1, 1]),
        (&[4, 1, 1], &[0, 0, 1, 1, 1]),
        (&[4, 2], &[0, 1, 3, 4, 3, 1]),
        (&[5, 1], &[0, 2, 3, 3, 3, 2]),
        (&[6], &[1, 2, 2, 2, 2, 2, 1]),
    ]);
    assert_eq!(got, want);
    let colored = terms(&json(&[
        "csf",
        "--hess",
        "2,4,4,5,6,6",
        "--method",
        "coloring",
    ]));
    assert_eq!(colored, want);
}

#[test]
fn csf_small() {
    assert_eq!(stdout(&["csf", "--hess", "1", "--basis", "e"]), "e_1\n");
    let k3 = terms(&json(&["csf", "--hess", "3,3,3", "--basis", "e"]));
    // [3]_q! = (1 + q)(1 + q + q^2)
    assert_eq!(k3, expect(&[(&[3], &[1, 2, 2, 1])]));
    // path on 3 vertices: q e_{2,1} + [3]_q e_3
    assert_eq!(
        stdout(&["--format", "latex", "csf", "--hess", "2,3,3"]),
        "qe_{2,1} + (q^{2}+q+1)e_{3}\n"
    );
}

#[test]
fn gk_running_example() {
    let g5 = terms(&json(&["gk", "--hess", "2,4,4,5,6,6", "--k", "5"]));
    let want = expect(&[
        (&[3, 2], &[0, 0, 1, 3, 1]),
        (&[4, 1], &[0, 0, 1, 1, 1]),
        (&[5], &[0, 1, 2, 2, 2, 1]),
    ]);
    assert_eq!(g5, want);
}

#[test]
fn gk_methods_agree() {
    for hess in ["2,4,4,5,6,6", "3,3,4,4", "2,3,4,5,5", "4,4,4,4", "1,2,3"] {
        let n = hess.split(',').count();
        for k in 0..n {
            let k = k.to_string();
            let def = stdout(&[
                "--format", "json", "gk", "--hess", hess, "--k", &k, "--method", "def",
            ]);
            let tree = stdout(&[
                "--format", "json", "gk", "--hess", hess, "--k", &k, "--method", "tree",
            ]);
            let ext = stdout(&[
                "--format", "json", "gk", "--hess", hess, "--k", &k, "--method", "extended",
            ]);
            let strip = |s: &str| {
                let mut v: Value = serde_json::from_str(s).unwrap();
                v["method"] = Value::Null;
                v
            };
            assert_eq!(strip(&def), strip(&tree), "{hess}, k = {k}");
            assert_eq!(strip(&def), strip(&ext), "{hess}, k = {k}");
        }
    }
}

#[test]
fn gk_trivial_and_extended() {
    assert_eq!(stdout(&["gk", "--hess", "1", "--k", "0"]), "1\n");
    // z^4 in 1/(1 - A), A = sum_{n>=2} q[n-1] h_n z^n, is A_4 + A_2^2; apply omega
    let g4 = terms(&json(&[
        "gk", "--hess", "1", "--k", "4", "--method", "extended",
    ]));
    assert_eq!(g4, expect(&[(&[2, 2], &[0, 0, 1]), (&[4], &[0, 1, 1, 1])]));
    let out = hessloc(&["gk", "--hess", "1", "--k", "4"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn json_is_deterministic() {
    for args in [
        &["--format", "json", "csf", "--hess", "2,4,4,5,6,6"][..],
        &[
            "--format", "json", "gk", "--hess", "3,4,4,4", "--k", "2", "--method", "tree",
        ],
        &[
            "--format",
            "json",
            "delta-table",
            "--hess",
            "3,5,5,5,6,6",
            "--k",
            "3",
        ],
        &["--format", "json", "verify", "--suite", "g", "--max-n", "4"],
        &["--format", "json", "llt-face", "--n", "4"],
    ] {
        let a = hessloc(args);
        let b = hessloc(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        serde_json::from_slice::<Value>(&a.stdout).unwrap();
    }
}

fn with_cache(cache: &Path, args: &[&str]) -> Output {
    let mut full = vec!["--cache", cache.to_str().unwrap()];
    full.extend_from_slice(args);
    hessloc(&full)
}

const CSF_JSON: &[&str] = &[
    "--format",
    "json",
    "csf",
    "--hess",
    "2,4,4,5,6,6",
    "--basis",
    "s",
];

#[test]
fn cache_does_not_change_results() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("tables.json");
    let plain = hessloc(CSF_JSON);
    let first = with_cache(&cache, CSF_JSON);
    assert!(cache.exists());
    let written = std::fs::read(&cache).unwrap();
    let second = with_cache(&cache, CSF_JSON);
    assert_eq!(plain.stdout, first.stdout);
    assert_eq!(plain.stdout, second.stdout);
    assert!(
        second.stderr.is_empty(),
        "{}",
        String::from_utf8_lossy(&second.stderr)
    );
    // nothing new was computed, so the file is left alone
    assert_eq!(std::fs::read(&cache).unwrap(), written);
    let header: Value = serde_json::from_slice(&written).unwrap();
    assert_eq!(header["format"], "hessloc-transition-cache");
    assert_eq!(header["version"], 1);
    let unused = dir.path().join("unused.json");
    let mut args = vec!["--no-cache", "--cache", unused.to_str().unwrap()];
    args.extend_from_slice(CSF_JSON);
    let off = hessloc(&args);
    assert_eq!(plain.stdout, off.stdout);
    assert!(!unused.exists());
}

#[test]
fn corrupt_cache_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("tables.json");
    let plain = hessloc(CSF_JSON);
    std::fs::write(&cache, b"{ not json").unwrap();
    let out = with_cache(&cache, CSF_JSON);
    assert!(out.status.success());
    assert_eq!(out.stdout, plain.stdout);
    assert!(String::from_utf8_lossy(&out.stderr).contains("discarding cache"));
    // rebuilt: a clean file that loads without complaint
    let again = with_cache(&cache, CSF_JSON);
    assert!(again.stderr.is_empty());

    // a single altered entry breaks the checksum
    let text = std::fs::read_to_string(&cache).unwrap();
    let pos = text.find("\"matrix\":[[\"").unwrap() + "\"matrix\":[[\"".len();
    let mut bytes = text.into_bytes();
    bytes[pos] = if bytes[pos] == b'7' { b'8' } else { b'7' };
    std::fs::write(&cache, &bytes).unwrap();
    let out = with_cache(&cache, CSF_JSON);
    assert_eq!(out.stdout, plain.stdout);
    assert!(String::from_utf8_lossy(&out.stderr).contains("checksum mismatch"));

    // wrong version
    let mut v: Value = serde_json::from_slice(&std::fs::read(&cache).unwrap()).unwrap();
    v["version"] = 99.into();
    std::fs::write(&cache, serde_json::to_vec(&v).unwrap()).unwrap();
    let out = with_cache(&cache, CSF_JSON);
    assert_eq!(out.stdout, plain.stdout);
    assert!(String::from_utf8_lossy(&out.stderr).contains("version 99"));
}

#[test]
fn delta_table_reference() {
    let text = stdout(&["delta-table", "--hess", "3,5,5,5,6,6", "--k", "3"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("Delta for m = (3,5,5,5,6,6), k = 3"));
    let mut got: Vec<&str> = lines.collect();
    let mut want: Vec<&str> = hessloc::positivity::REFERENCE_ROWS.lines().collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);

    let v = json(&["delta-table", "--hess", "3,5,5,5,6,6", "--k", "3"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 12);
    assert_eq!(v["k"], 3);
}

#[test]
fn delta_table_sizes() {
    let two = stdout(&["delta-table", "--hess", "2,2", "--k", "1"]);
    assert_eq!(two.lines().count(), 2);
    for (hess, rows) in [("3,3,3", 2), ("4,4,4,4", 6), ("5,5,5,5,5", 24)] {
        for k in 1..hess.split(',').count() {
            let out = stdout(&["delta-table", "--hess", hess, "--k", &k.to_string()]);
            assert_eq!(out.lines().count(), rows + 1, "{hess}, k = {k}");
        }
    }
    let latex = stdout(&[
        "--format",
        "latex",
        "delta-table",
        "--hess",
        "3,5,5,5,6,6",
        "--k",
        "3",
    ]);
    assert!(latex.starts_with("\\begin{tabular}"));
    assert!(latex.contains("$6 > m(3)$"));
}

#[test]
fn llt_face() {
    let text = stdout(&["llt-face", "--n", "3"]);
    assert!(text.ends_with("verdict: match\n"), "{text}");
    assert!(text.contains("h_{1,1,1} + 2q h_{2,1} + q^2 h_3"));
    let v = json(&["llt-face", "--n", "5"]);
    assert_eq!(v["match"], true);
    assert_eq!(v["frobenius"], v["omega_llt"]);
}

#[test]
fn verify_suites() {
    for (suite, n) in [
        ("csf", "5"),
        ("positivity", "6"),
        ("toric", "6"),
        ("rho", "6"),
        ("g", "4"),
        ("graphs", "4"),
    ] {
        let v = json(&["verify", "--suite", suite, "--max-n", n]);
        assert_eq!(v["passed"], true, "{suite}");
        for c in v["checks"].as_array().unwrap() {
            assert_eq!(c["verdict"], "pass", "{c}");
            assert!(c["identity"].is_string() && c["range"].is_string());
        }
    }
    let pos = json(&["verify", "--suite", "positivity", "--max-n", "6"]);
    let ids: Vec<&str> = pos["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["identity"].as_str().unwrap())
        .collect();
    assert!(ids.iter().any(|s| s.contains("3,5,5,5,6,6")));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&hessloc(&["csf", "--hess", "2,1"])), 2);
    assert_eq!(code(&hessloc(&["csf", "--hess", "a,b"])), 2);
    assert_eq!(code(&hessloc(&["csf", "--hess", "1", "--basis", "x"])), 2);
    assert_eq!(code(&hessloc(&["frobnicate"])), 2);
    assert_eq!(
        code(&hessloc(&["delta-table", "--hess", "2,2", "--k", "0"])),
        2
    );
    assert_eq!(code(&hessloc(&["--guard-n", "0", "csf", "--hess", "1"])), 2);
    assert_eq!(
        code(&hessloc(&[
            "--guard-n",
            "3",
            "csf",
            "--hess",
            "2,3,4,4",
            "--method",
            "coloring"
        ])),
        3
    );
    assert_eq!(
        code(&hessloc(&[
            "--guard-degree",
            "4",
            "csf",
            "--hess",
            "2,3,4,5,5"
        ])),
        3
    );
    assert_eq!(code(&hessloc(&["verify", "--max-n", "9"])), 3);

    let env = Command::new(env!("CARGO_BIN_EXE_hessloc"))
        .args(["csf", "--hess", "2,3,4,5,5"])
        .env("HESSLOC_MAX_DEGREE", "4")
        .env_remove("HESSLOC_CACHE")
        .output()
        .unwrap();
    assert_eq!(code(&env), 3);
    let bad_env = Command::new(env!("CARGO_BIN_EXE_hessloc"))
        .args(["csf", "--hess", "1"])
        .env("HESSLOC_MAX_N", "lots")
        .output()
        .unwrap();
    assert_eq!(code(&bad_env), 2);
}
