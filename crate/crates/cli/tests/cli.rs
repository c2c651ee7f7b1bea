use std::path::PathBuf;
use std::process::{Command, Output};

use proptest::prelude::*;

fn spec(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs").join(name)
}

fn charsub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charsub")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_file(tag: &str, text: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("charsub-cli-{}-{tag}.alg", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn derived_counterexample_prints_its_witness() {
    let f = spec("idempotent_line_z5.alg");
    let o = charsub(&["char", f.to_str().unwrap(), "--sub", "D"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("D = span{x}: normal, NOT characteristic"), "{out}");
    assert!(out.contains("sends x to y"), "{out}");
}

#[test]
fn centre_counterexample() {
    let f = spec("idempotent_line_z5.alg");
    let o = charsub(&["centre", f.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["elements"], "span{y}");
    assert_eq!(v["normal"], true);
    assert_eq!(v["characteristic"], false);
}

#[test]
fn oracle_agrees_on_s3() {
    let f = spec("s3.alg");
    let o = charsub(&["char", f.to_str().unwrap(), "--oracle", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    // A3 is characteristic; a transposition subgroup is not even normal.
    assert_eq!(v["checks"][0]["characteristic"], true);
    assert_eq!(v["checks"][1]["characteristic"], false);
    assert_eq!(v["checks"][1]["oracle"]["characteristic"], false);
}

#[test]
fn missing_file_is_exit_two() {
    let o = charsub(&["char", "missing.alg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.alg"));
}

#[test]
fn syntax_errors_report_their_position() {
    let f = temp_file("syntax", "variety: naring\nmod: five\n");
    let o = charsub(&["validate", f.to_str().unwrap()]);
    let _ = std::fs::remove_file(&f);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax error at 2:6"));
}

#[test]
fn usage_errors_are_exit_two() {
    assert_eq!(charsub(&["frobnicate"]).status.code(), Some(2));
    let f = spec("s3.alg");
    assert_eq!(charsub(&["char", f.to_str().unwrap(), "--sub", "Q"]).status.code(), Some(2));
    assert_eq!(
        charsub(&["commutator", f.to_str().unwrap(), "--huq", "--higgins"]).status.code(),
        Some(2)
    );
}

#[test]
fn small_group_table_passes() {
    let o = charsub(&["verify-table", "--corpus", "groups", "--max-order", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().all(|l| !l.starts_with("FAIL")), "{out}");
}

#[test]
fn actors_and_extensions() {
    let s3 = spec("s3.alg");
    let o = charsub(&["actor", s3.to_str().unwrap(), "--oracle", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    // Aut(S3) ≅ S3.
    assert_eq!(v["order"], 6);
    assert_eq!(v["universal_property"]["violation"], serde_json::Value::Null);

    let lie = spec("heisenberg_lie_z3.alg");
    let v: serde_json::Value =
        serde_json::from_slice(&charsub(&["actor", lie.to_str().unwrap(), "--json"]).stdout).unwrap();
    // Derivations of the Heisenberg algebra: D(x), D(y) arbitrary in span{x,y,z}
    // with D(z) forced, so 6 free coordinates.
    assert_eq!(v["rank"], 6);

    let ring = spec("idempotent_line_z5.alg");
    let o = charsub(&["actor", ring.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exists"], false);

    let o = charsub(&["semidirect", s3.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["total"]["order"], 36);
    assert_eq!(v["round_trip_failures"].as_array().map(Vec::len), Some(0));

    // Conjugation of S3 on itself is faithful since the centre is trivial.
    let o = charsub(&["faithful-quotient", s3.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["quotients"][0]["z_order"], 1);
}

#[test]
fn search_finds_the_counterexample_only_outside_rings() {
    let o = charsub(&["search", "--mod", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["found"].as_u64().unwrap() > 0);
    let o = charsub(&["search", "--variety", "ring", "--mod", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["found"], 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// `validate` exits 2 exactly when the library rejects the text and 0 otherwise.
    #[test]
    fn exit_code_tracks_the_parser(
        file in prop::sample::select(vec!["idempotent_line_z5.alg", "s3.alg", "heisenberg_lie_z3.alg"]),
        cut in any::<prop::sample::Index>(),
        insert in prop::sample::select(vec!["", "x", " ", "\n", "*", "=", "mul: ", "sub Q: y", "7"]),
    ) {
        let text = std::fs::read_to_string(spec(file)).unwrap();
        let mut at = cut.index(text.len() + 1);
        while !text.is_char_boundary(at) {
            at -= 1;
        }
        let mutated = format!("{}{insert}{}", &text[..at], &text[at..]);
        let expected = if charsub::spec_format::parse_spec(&mutated).is_ok() { 0 } else { 2 };
        let f = temp_file("mutant", &mutated);
        let code = charsub(&["validate", f.to_str().unwrap()]).status.code();
        let _ = std::fs::remove_file(&f);
        prop_assert_eq!(code, Some(expected));
    }
}
