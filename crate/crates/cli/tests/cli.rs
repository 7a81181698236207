use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn golden(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_golden"))
        .args(args)
        .current_dir(dir)
        .env("GOLDEN_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn toric_then_decode_single_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = golden(dir.path(), &["toric", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    assert!(stdout(&o).contains("n = 18, k = 2"));
    let o = golden(dir.path(), &["decode", "--weight", "1", "--trials", "100", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let summary: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(summary["success_rate"], 1.0);
    let csv = fs::read_to_string(dir.path().join("out/decode.csv")).unwrap();
    assert_eq!(csv.lines().count(), 101);
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("out/decode.csv.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["seeds"][0], 7);
    assert_eq!(manifest["parameters"]["trials"], 100);
}

#[test]
fn decode_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(golden(dir.path(), &["toric", "--p", "4"]).status.code(), Some(0));
    for name in ["a.csv", "b.csv"] {
        let o = golden(dir.path(), &["decode", "--p", "0.05", "--trials", "200", "--seed", "42", "--out", name]);
        assert_eq!(o.status.code(), Some(0), "{o:?}");
    }
    let a = fs::read(dir.path().join("a.csv")).unwrap();
    assert_eq!(a, fs::read(dir.path().join("b.csv")).unwrap());
}

#[test]
fn toric_exports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for out in ["one", "two"] {
        assert_eq!(golden(dir.path(), &["toric", "--p", "3", "--out", out]).status.code(), Some(0));
    }
    for f in ["hx.mtx", "hz.mtx", "hx.alist", "hz.alist", "meta.json", "tessellation.gldc"] {
        let a = fs::read(dir.path().join("one").join(f)).unwrap();
        assert_eq!(a, fs::read(dir.path().join("two").join(f)).unwrap(), "{f}");
    }
}

#[test]
fn lemma_120cell_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = golden(dir.path(), &["lemma", "--which", "120cell"]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    assert!(stdout(&o).contains("pass"));
}

#[test]
fn lemma_2d_passes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(golden(dir.path(), &["lemma", "--which", "2d"]).status.code(), Some(0));
}

#[test]
fn long_runs_need_a_budget() {
    let dir = tempfile::tempdir().unwrap();
    let o = golden(dir.path(), &["lemma", "--which", "search4d"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--budget"));
    assert_eq!(golden(dir.path(), &["rank"]).status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let o = golden(dir.path(), &["lemma", "--which", "search4d", "--budget", "3", "--max-len", "3"]);
    assert_eq!(o.status.code(), Some(3), "{o:?}");
}

#[test]
fn rank_of_exported_matrix() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(golden(dir.path(), &["toric", "--p", "3"]).status.code(), Some(0));
    let o = golden(dir.path(), &["rank", "--matrix", "hz", "--budget", "1000000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"rank\":8"));
}

#[test]
fn verify_scopes() {
    let dir = tempfile::tempdir().unwrap();
    let o = golden(dir.path(), &["verify", "--scope", "rings"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("φ ↦ 3"));
    let o = golden(dir.path(), &["verify", "--scope", "geometry"]);
    assert!(stdout(&o).contains("2π/5"));
    let o = golden(dir.path(), &["verify", "--scope", "relations"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(r3 r4)^5"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(golden(dir.path(), &["build", "--ideal", "2"]).status.code(), Some(2));
    assert_eq!(golden(dir.path(), &["build", "--ideal", "nonsense"]).status.code(), Some(2));
    assert_eq!(golden(dir.path(), &["verify", "--scope", "nowhere"]).status.code(), Some(2));
    assert_eq!(golden(dir.path(), &["decode", "--trials", "3"]).status.code(), Some(2));
}

#[test]
fn zero_ideal_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = golden(dir.path(), &["build", "--ideal", "0,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("zero ideal"));
}

/// The full golden build: about a minute and 1 GB.
#[test]
#[ignore]
fn sqrt5_build() {
    let dir = tempfile::tempdir().unwrap();
    let o = golden(dir.path(), &["build", "--ideal", "sqrt5"]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("out/meta.json")).unwrap()).unwrap();
    assert_eq!(meta["n"], 234_000);
    assert_eq!(meta["group_order"], 18_720_000);
    assert_eq!(meta["k_lower_bound"], 11_048);
}
