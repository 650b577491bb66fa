use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn wsa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wsa"))
        .args(args)
        .output()
        .expect("wsa runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&wsa(&all))).expect("json output")
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn validate_disc_spec_file() {
    let spec = stdout(&wsa(&["builtin", "disc"]));
    let path = tmp("disc.wsa", &spec);
    let o = wsa(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("triangulation quiver: ok"));
}

#[test]
fn validate_reports_assumption_failure() {
    let o = wsa(&[
        "validate",
        "-b",
        "disc",
        "-p",
        "m_alpha=1",
        "-p",
        "m_beta=1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("assumptions: failed"));
}

#[test]
fn tetrahedral_simples_have_period_four() {
    let o = wsa(&[
        "period",
        "-b",
        "tetrahedral",
        "-p",
        "lambda=2",
        "--all",
        "--max",
        "8",
        "--field",
        "GF(5)",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.ends_with("period 4")), "{text}");
}

#[test]
fn period_runs_in_parallel() {
    let one = stdout(&wsa(&["period", "-b", "Phi", "--all", "--jobs", "1"]));
    let four = stdout(&wsa(&["period", "-b", "Phi", "--all", "--jobs", "4"]));
    assert_eq!(one, four);
}

#[test]
fn classify_phi() {
    let v = json(&["classify", "-b", "Phi"]);
    assert_eq!(v["status"], 0);
    assert_eq!(v["report"]["classification"]["family"], "Phi");
    assert_eq!(v["report"]["dimension"], 38);
    assert_eq!(v["tool"], "wsa");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn table_json_round_trips_byte_identical() {
    for field in ["GF(101)", "Q"] {
        let first = stdout(&wsa(&[
            "build", "-b", "sigma", "--field", field, "--format", "json",
        ]));
        let path = tmp(
            &format!("sigma-{}.json", field.replace(['(', ')'], "")),
            &first,
        );
        let o = wsa(&["table", path.to_str().unwrap(), "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), first);
    }
}

#[test]
fn build_is_deterministic() {
    let a = stdout(&wsa(&[
        "build", "-b", "Omega_r", "-p", "r=5", "--format", "json",
    ]));
    let b = stdout(&wsa(&[
        "build", "-b", "Omega_r", "-p", "r=5", "--format", "json",
    ]));
    assert_eq!(a, b);
}

#[test]
fn cartan_row_sums_match_info() {
    for name in ["disc", "tetrahedral", "Phi"] {
        let cartan = json(&["cartan", "-b", name]);
        let info = json(&["info", "-b", name]);
        let proj: Vec<i64> = info["report"]["projective_dimensions"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| p[1].as_i64().unwrap())
            .collect();
        let sums: Vec<i64> = cartan["report"]["matrix"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| {
                r.as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_i64().unwrap())
                    .sum()
            })
            .collect();
        assert_eq!(sums, proj, "{name}");
    }
}

#[test]
fn singular_socle_is_status_one() {
    let o = wsa(&["socle", "-b", "triangle", "-p", "lambda=1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("singular socle"));
}

#[test]
fn bimodule_certificate() {
    let v = json(&["bimodule", "-b", "disc", "--field", "GF(5)"]);
    assert_eq!(v["status"], 0);
    assert_eq!(v["report"]["periodic4"], true);
    assert_eq!(v["report"]["dims"], serde_json::json!([72, 144, 144, 72]));
}

#[test]
fn degenerate_verdict() {
    let o = wsa(&[
        "degenerate",
        "-b",
        "S_r",
        "-p",
        "r=2",
        "--field",
        "GF(7)",
        "-t",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: pass"));
}

#[test]
fn distinct_error_statuses() {
    assert_eq!(
        wsa(&["validate", "/nonexistent/spec.wsa"]).status.code(),
        Some(3)
    );
    let bad = tmp("bad.wsa", "vertices 1 2\narrow a 1\n");
    assert_eq!(
        wsa(&["validate", bad.to_str().unwrap()]).status.code(),
        Some(4)
    );
    assert_eq!(wsa(&["frobnicate"]).status.code(), Some(5));
    assert_eq!(wsa(&["info"]).status.code(), Some(5));
    assert_eq!(
        wsa(&["info", "-b", "no-such-family"]).status.code(),
        Some(1)
    );
}

#[test]
fn reports_carry_no_external_references() {
    for verb in ["info", "classify", "symmetric", "resolve"] {
        let text = stdout(&wsa(&[verb, "-b", "sigma"]));
        for word in ["Prop", "Lemma", "Thm", "Theorem"] {
            assert!(!text.contains(word), "{verb}: {text}");
        }
    }
}
