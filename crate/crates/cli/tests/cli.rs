use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

fn taquin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_taquin"))
        .args(args)
        .env_remove("TAQUIN_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn count_shapes() {
    let o = taquin(&["count", "--shape", "3,2,1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("count 16\n"));
    assert!(stdout(&o).contains("hooks\n5 3 1\n3 1\n1\n"));
    assert!(stdout(&taquin(&["count", "--shape", "4,4,4,4"])).contains("count 24024\n"));
    assert!(stdout(&taquin(&["count", "--shape", "1"])).contains("count 1\n"));
    assert_eq!(taquin(&["count", "--shape", "1,2"]).status.code(), Some(2));
    assert_eq!(taquin(&["count", "--shape", "x"]).status.code(), Some(2));
}

#[test]
fn verify_identity() {
    for (n, v) in [(1, "1"), (3, "6"), (7, "5040")] {
        let o = taquin(&["verify-identity", "--n", &n.to_string()]);
        assert_eq!(o.status.code(), Some(0));
        let s = stdout(&o);
        assert!(
            s.contains(&format!("sum of squares {v}\n")) && s.contains(&format!("factorial {v}\n"))
        );
    }
}

#[test]
fn rsk_and_inverse() {
    let o = taquin(&["rsk", "--perm", "7,8,2,3,5,4,1,6"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["P"], serde_json::json!([[1, 3, 4, 6], [2, 8], [5], [7]]));

    let v = json(&taquin(&["rsk", "--perm", "1,2,3,4"]));
    assert_eq!(v["P"], serde_json::json!([[1, 2, 3, 4]]));
    assert_eq!(v["P"], v["Q"]);

    let dir = tempdir();
    for word in ["3,1,5,2,4", "5,4,3,2,1", "2,1,4,3,5"] {
        let v = json(&taquin(&["rsk", "--perm", word]));
        let p = dir.join("p.json");
        let q = dir.join("q.json");
        std::fs::write(
            &p,
            serde_json::json!({"outer": shape(&v["P"]), "rows": v["P"]}).to_string(),
        )
        .unwrap();
        std::fs::write(
            &q,
            serde_json::json!({"outer": shape(&v["Q"]), "rows": v["Q"]}).to_string(),
        )
        .unwrap();
        let o = taquin(&["rsk", "--inverse", p.to_str().unwrap(), q.to_str().unwrap()]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), format!("[{word}]"));
    }
    assert_eq!(taquin(&["rsk", "--perm", "1,1"]).status.code(), Some(2));
}

fn shape(rows: &Value) -> Value {
    rows.as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().len())
        .collect()
}

fn tempdir() -> PathBuf {
    let d = std::env::temp_dir().join(format!("taquin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn rectify_commands() {
    let dir = tempdir();
    let out = dir.join("trace6.json");
    let o = taquin(&[
        "rectify",
        "--state",
        &path("skew_4x4.json"),
        "--trace",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["events"], 4);
    assert_eq!(
        v["final"]["cells"],
        serde_json::json!([
            [1, 3, 5, null],
            [2, 6, 7, null],
            [4, null, null, null],
            [8, null, null, null]
        ])
    );
    let trace: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(trace["events"].as_array().unwrap().len(), 4);

    let v = json(&taquin(&["rectify", "--state", &path("skew_t1.json")]));
    let last = v["events"].as_array().unwrap().last().unwrap();
    assert_eq!(
        last["state"]["cells"],
        serde_json::json!([
            [1, 3, 4, 6],
            [2, 8, null, null],
            [5, null, null, null],
            [7, null, null, null]
        ])
    );

    let o = taquin(&["rectify", "--state", &path("normal_3x3.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["events"], serde_json::json!([]));

    assert_eq!(
        taquin(&["rectify", "--state", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn simulate_commands() {
    let o = taquin(&[
        "simulate",
        "--state",
        &path("normal_3x3.json"),
        "--completions",
        "1,3,2,5,8,4,6,7,9",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    let states: Vec<&Value> = v["events"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| &e["state"]["cells"])
        .collect();
    assert_eq!(
        *states[0],
        serde_json::json!([[2, 4, 7], [3, 5, 9], [6, 8, null]])
    );
    assert_eq!(
        *states[7],
        serde_json::json!([[9, null, null], [null, null, null], [null, null, null]])
    );

    let o = taquin(&[
        "simulate",
        "--state",
        &path("normal_3x3.json"),
        "--completions",
        "1,42",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("42"));

    let v = json(&taquin(&[
        "simulate",
        "--state",
        &path("one_by_two.json"),
        "--completions",
        "1,2",
    ]));
    let relocations = &v["events"][0]["relocations"];
    assert_eq!(
        *relocations,
        serde_json::json!([{"task": 2, "from": [1, 2], "to": [1, 1]}])
    );
}

#[test]
fn turnaround_commands() {
    let o = taquin(&[
        "turnaround",
        "--state",
        &path("two_by_two.json"),
        "--requirements",
        &path("two_by_two_requirements.json"),
        "--compare",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "T1 9/2\nT2 5/2\nT1-T2 2/1\n");

    let o = taquin(&[
        "turnaround",
        "--state",
        &path("single.json"),
        "--requirements",
        &path("single_requirements.json"),
        "--compare",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("T1-T2 0/1\n"));

    for seed in ["1", "2", "3"] {
        let o = taquin(&["turnaround", "--random", "--seed", seed, "--compare"]);
        assert!(o.status.success());
        let diff = stdout(&o)
            .lines()
            .last()
            .unwrap()
            .trim_start_matches("T1-T2 ")
            .to_string();
        assert!(!diff.starts_with('-') && diff != "0/1", "{diff}");
        assert_eq!(
            stdout(&o),
            stdout(&taquin(&[
                "turnaround",
                "--random",
                "--seed",
                seed,
                "--compare"
            ]))
        );
    }
    let env = Command::new(env!("CARGO_BIN_EXE_taquin"))
        .args(["turnaround", "--random", "--compare"])
        .env("TAQUIN_SEED", "2")
        .output()
        .unwrap();
    assert_eq!(
        stdout(&env),
        stdout(&taquin(&[
            "turnaround",
            "--random",
            "--seed",
            "2",
            "--compare"
        ]))
    );
}

#[test]
fn check_commands() {
    let v = json(&taquin(&["check", "--state", &path("descent_4x4.json")]));
    assert_eq!(v["class"]["order"], "generalized");
    assert_eq!(v["descent_pairs"], serde_json::json!([[[1, 1], [1, 2]]]));

    let v = json(&taquin(&["check", "--state", &path("slid_up_4x4.json")]));
    assert_eq!(v["class"]["order"], "generalized");
    assert_eq!(v["descent_pairs"].as_array().unwrap().len(), 2);

    let v = json(&taquin(&["check", "--state", &path("normal_3x3.json")]));
    assert_eq!(v["class"]["order"], "standard");
    assert_eq!(v["descent_pairs"], serde_json::json!([]));
}

#[test]
fn figures_command_matches() {
    let o = taquin(&["--figures"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(
        stdout(&o).lines().filter(|l| l.starts_with("ok ")).count(),
        7
    );
    assert_eq!(stdout(&taquin(&["figures"])), stdout(&o));
    let shown = taquin(&["figures", "--show", "row_insertion"]);
    assert!(stdout(&shown).contains("\"added_cell\": [3, 3]"));
    assert_eq!(
        taquin(&["figures", "--show", "nope"]).status.code(),
        Some(2)
    );
}
