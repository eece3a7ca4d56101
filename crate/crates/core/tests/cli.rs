mod common;

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use alpha2_minors::generate::named;
use alpha2_minors::{emit_graph6, validate_model};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_alpha2-minors"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn g6(desc: &str) -> String {
    emit_graph6(&named(desc).unwrap())
}

fn json_files(dir: &Path) -> Vec<std::path::PathBuf> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).unwrap() {
        let p = entry.unwrap().path();
        if p.is_dir() {
            out.extend(json_files(&p));
        } else {
            out.push(p);
        }
    }
    out.sort();
    out
}

#[test]
fn verify_c5_succeeds_and_emits_valid_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let input = format!("{}\n", g6("cycle(5)"));
    let o = run(&["verify", "--emit", dir.path().to_str().unwrap()], &input);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["report"]["succeeded"], 1);
    let files = json_files(dir.path());
    assert_eq!(files.len(), 1);
    assert_eq!(files[0].file_name().unwrap(), "chi-ell1.json");
    let cert: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&files[0]).unwrap()).unwrap();
    assert_eq!(cert["validated"], true);
    assert_eq!(cert["chi"], 3);
    assert_eq!(cert["input_graph6"], g6("cycle(5)"));
}

#[test]
fn verify_half_form_on_petersen_complement() {
    let dir = tempfile::tempdir().unwrap();
    let input = format!("{}\n", g6("petersen_complement"));
    let o = run(&["verify", "--half", "--ell", "2", "--emit", dir.path().to_str().unwrap()], &input);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let files = json_files(dir.path());
    assert_eq!(files.len(), 1);
    assert_eq!(files[0].file_name().unwrap(), "half-ell2.json");
}

#[test]
fn verify_skips_alpha_three_and_fails_on_malformed_lines() {
    let input = format!("{}\n{}\n", g6("cycle(6)"), g6("cycle(5)"));
    let o = run(&["verify", "--format", "csv"], &input);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(",skipped,"), "{text}");
    assert!(text.contains(",succeeded,"), "{text}");

    let o = run(&["verify", "--format", "csv"], &format!("{}\n~~~bad\n", g6("cycle(5)")));
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("malformed graph6 at line 2"), "{}", stdout(&o));
}

#[test]
fn empty_input_is_not_an_error() {
    let o = run(&["verify"], "");
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["report"]["processed"], 0);
}

#[test]
fn usage_and_io_errors_exit_two() {
    assert_eq!(run(&["verify", "--ell", "zero"], "").status.code(), Some(2));
    assert_eq!(run(&["sweep", "8..5"], "").status.code(), Some(2));
    assert_eq!(run(&["oracle-check", "--target", "q=1"], "").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(run(&["verify", "/definitely/not/here.g6"], "").status.code(), Some(2));
}

#[test]
fn sweep_five_covers_fourteen_graphs() {
    let o = run(&["sweep", "5"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert!(rows.iter().all(|r| r.split(',').nth(2) == Some("14")), "{text}");
    assert!(rows[0].starts_with("5,1,14,14,14,14,14,14,0,0,"), "{text}");
}

#[test]
fn sweep_six_records_the_five_wheel_exception() {
    let o = run(&["sweep", "6", "--ell", "2"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    let row = rdr.records().next().unwrap().unwrap();
    let col = |name: &str| row.get(headers.iter().position(|h| h == name).unwrap()).unwrap().to_string();
    assert_eq!(col("graphs"), "38");
    assert_eq!(col("iff_exception"), "1");
    assert_eq!(col("iff_mismatch"), "0");
}

#[test]
fn sweep_one_has_nothing_to_check() {
    let o = run(&["sweep", "1"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().nth(1), Some("1,1,1,0,0,0,0,1,0,0,0,0,"));
}

#[test]
fn oracle_check_examples() {
    let c5 = g6("cycle(5)");
    let o = run(&["oracle-check", "--target", "ell=1,m=2", "--format", "csv"], &format!("{c5}\n"));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(",succeeded,"), "{}", stdout(&o));

    let o = run(&["oracle-check", "--target", "k=4", "--format", "csv"], &format!("{c5}\n"));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(",skipped,absent,"), "{}", stdout(&o));

    let pc = g6("petersen_complement");
    let o = run(&["oracle-check", "--target", "ell=2,m=3", "--half", "--format", "csv"], &format!("{pc}\n"));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(",succeeded,"), "{}", stdout(&o));

    let big = g6("complement(cycle(20))");
    let o = run(&["oracle-check", "--target", "ell=2,m=8", "--half", "--format", "csv"], &format!("{big}\n"));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(",skipped,"), "{}", stdout(&o));
}

#[test]
fn gen_output_round_trips_through_verify() {
    let o = run(&["gen", "6"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), common::TRIANGLE_FREE_COUNTS[6]);
    let v = run(&["verify", "--jobs", "4", "--format", "csv"], &text);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(stdout(&v).lines().filter(|l| l.contains(",succeeded,")).count(), 38);

    let a = run(&["gen", "12", "--seed", "5", "--count", "3"], "");
    let b = run(&["gen", "12", "--seed", "5", "--count", "3"], "");
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 3);

    let w = run(&["gen", "--named", "five_wheel"], "");
    assert_eq!(stdout(&w).trim(), g6("five_wheel"));
}

#[test]
fn jobs_do_not_change_output() {
    let text = stdout(&run(&["gen", "7"], ""));
    let one = run(&["verify", "--jobs", "1"], &text);
    let many = run(&["verify", "--jobs", "8"], &text);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn emitted_certificates_validate_in_library() {
    let dir = tempfile::tempdir().unwrap();
    let input = format!("{}\n{}\n", g6("join(cycle(5),cycle(5))"), g6("five_wheel"));
    let o = run(&["verify", "--emit", dir.path().to_str().unwrap()], &input);
    assert_eq!(o.status.code(), Some(0));
    let files = json_files(dir.path());
    assert_eq!(files.len(), 3 + 2);
    for f in files {
        let cert: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
        let g = alpha2_minors::parse_graph6(cert["input_graph6"].as_str().unwrap()).unwrap();
        let target = serde_json::from_value(cert["target"].clone()).unwrap();
        let model: alpha2_minors::MinorModel = serde_json::from_value(cert["model"].clone()).unwrap();
        assert!(validate_model(&g, target, &model).is_ok(), "{}", f.display());
    }
}
