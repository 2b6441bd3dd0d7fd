use std::path::Path;
use std::process::Command;

use tempfile::TempDir;

const GROUPS: &[(&str, &str)] = &[
    ("s3.grp", "kind = coxeter\nletters = a b\nm a b 3\n"),
    ("b2.grp", "kind = even-coxeter\nletters = a b\nm a b 4\n"),
    ("racg.grp", "kind = racg\nletters = a b c\nedge a b\n"),
    ("graph.grp", "kind = graph\nletters = a b c\nedge a b\nedge b c\n"),
    ("fim.grp", "kind = fim\nletters = a b\nedge a b\n"),
    ("broken.grp", "kind = coxeter\nletters = a b\nm a b 1\n"),
];

fn workspace() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in GROUPS {
        std::fs::write(dir.path().join(name), text).unwrap();
    }
    dir
}

fn run_in(dir: &Path, args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["coxnf".to_string()];
    for a in args {
        argv.push(if a.ends_with(".grp") {
            dir.join(a).display().to_string()
        } else {
            a.to_string()
        });
    }
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = coxnf_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let (code, out, err) = run_in(dir, args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn coxeter_queries() {
    let dir = workspace();
    let d = dir.path();
    assert_eq!(ok(d, &["length", "--group", "s3.grp", "ababa"]), "length 1\n");
    assert_eq!(ok(d, &["length", "--group", "s3.grp", "ababab"]), "length 0\n");
    assert_eq!(ok(d, &["alphabet", "--group", "s3.grp", "abab"]), "alphabet a,b\n");
    assert_eq!(ok(d, &["alphabet", "--group", "s3.grp", "aa"]), "alphabet\n");
    assert_eq!(ok(d, &["parikh", "--group", "b2.grp", "ababab"]), "parikh a:1,b:1\n");
    assert_eq!(ok(d, &["equal", "--group", "s3.grp", "aba", "bab"]), "true\n");
    assert_eq!(ok(d, &["equal", "--group", "s3.grp", "ab", "ba"]), "false\n");
}

#[test]
fn normal_forms() {
    let dir = workspace();
    let d = dir.path();
    assert_eq!(ok(d, &["normalize", "--group", "racg.grp", "c.a.b.a.c"]), "c.b.c\n");
    assert_eq!(ok(d, &["normalize", "--group", "racg.grp", "b.a"]), "a.b\n");
    assert_eq!(ok(d, &["normalize", "--group", "racg.grp", "b.a.b"]), "a\n");
    assert_eq!(
        ok(d, &["normalize", "--group", "graph.grp", "c.b.a'.c'.a"]),
        "b.c.a'.c'.a\n"
    );
    assert_eq!(ok(d, &["normalize", "--group", "graph.grp", "a.a'"]), "1\n");
    assert_eq!(ok(d, &["equal", "--group", "graph.grp", "a.b", "b.a"]), "true\n");
    assert_eq!(ok(d, &["equal", "--group", "graph.grp", "a.c", "c.a"]), "false\n");
}

#[test]
fn normalize_output_is_a_fixed_point() {
    let dir = workspace();
    let d = dir.path();
    for (group, word) in [
        ("racg.grp", "c.a.b.c.a.b.c"),
        ("graph.grp", "c'.b.a.c.b'.a'.c"),
        ("graph.grp", "a.b.c.a'.b'.c'"),
    ] {
        let first = ok(d, &["normalize", "--group", group, word]);
        let again = ok(d, &["normalize", "--group", group, first.trim()]);
        assert_eq!(first, again);
        let same = ok(d, &["equal", "--group", group, word, first.trim()]);
        assert_eq!(same, "true\n");
    }
}

#[test]
fn inverse_monoid_queries() {
    let dir = workspace();
    let d = dir.path();
    assert_eq!(ok(d, &["fim-equal", "--group", "fim.grp", "a.a'", "a'.a"]), "false\n");
    assert_eq!(ok(d, &["fim-equal", "--group", "fim.grp", "a.b", "b.a"]), "true\n");
    assert_eq!(ok(d, &["fim-equal", "--group", "fim.grp", "a.a'.a", "a"]), "true\n");
    assert_eq!(ok(d, &["munn", "--group", "fim.grp", "a.b.b'.a'"]), "a\nb\n");
}

#[test]
fn oracle_paths_agree() {
    let dir = workspace();
    let d = dir.path();
    assert_eq!(
        ok(d, &["length", "--group", "s3.grp", "--oracle", "ababa"]),
        "length 1\n"
    );
    let check = ok(d, &["oracle-check", "--group", "graph.grp", "normalize", "c.b.a'.c'.a"]);
    assert_eq!(check, "agree\nalgorithm: b.c.a'.c'.a\noracle: b.c.a'.c'.a\n");
    let check = ok(d, &["oracle-check", "--group", "s3.grp", "equal", "aba", "bab"]);
    assert!(check.starts_with("agree\n"), "{check}");
}

#[test]
fn exit_codes() {
    let dir = workspace();
    let d = dir.path();
    assert_eq!(run_in(d, &["parikh", "--group", "s3.grp", "ab"]).0, 3);
    assert_eq!(run_in(d, &["normalize", "--group", "s3.grp", "ab"]).0, 3);
    assert_eq!(run_in(d, &["length", "--group", "fim.grp", "a"]).0, 3);
    assert_eq!(run_in(d, &["length", "--group", "s3.grp", "z"]).0, 2);
    assert_eq!(run_in(d, &["length", "--group", "missing.grp", "a"]).0, 2);
    assert_eq!(run_in(d, &["length", "--group", "broken.grp", "a"]).0, 2);
    assert_eq!(
        run_in(d, &["length", "--group", "s3.grp", "--oracle", "abababababab"]).0,
        2
    );
    assert_eq!(run_in(d, &["frobnicate"]).0, 2);
    let (code, out, err) = run_in(d, &["length", "--group", "s3.grp", "z"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains('z'), "{err}");
}

#[test]
fn binary_reports_through_exit_status() {
    let dir = workspace();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_coxnf"))
            .args(args)
            .current_dir(dir.path())
            .output()
            .unwrap()
    };
    let done = run(&["length", "--group", "s3.grp", "ababab"]);
    assert!(done.status.success());
    assert_eq!(String::from_utf8_lossy(&done.stdout), "length 0\n");
    let refused = run(&["parikh", "--group", "s3.grp", "ab"]);
    assert_eq!(refused.status.code(), Some(3));
    assert!(refused.stdout.is_empty());
    assert!(!refused.stderr.is_empty());
}
