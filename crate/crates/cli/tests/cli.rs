use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use shannon_core::figures;
use tempfile::NamedTempFile;

fn shannon(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_shannon"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file_with(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn adjacent_terminals_go_to_short() {
    let o = shannon(&["solve", "--mover", "cut"], "n 2\nt 0 1\ne 0 1\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "short\n");
}

#[test]
fn disconnected_terminals_go_to_cut() {
    let o = shannon(&["solve", "--strategy"], "n 3\nt 0 2\ne 0 1\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "cut\nmove none\n");
}

#[test]
fn solve_reads_a_file_and_reports_a_winning_move() {
    let f = file_with(&figures::pair_set().graph.to_text());
    let path = f.path().to_str().unwrap();
    let o = shannon(&["solve", path, "--mover", "cut", "--strategy"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("cut"));
    assert!(lines.next().unwrap().starts_with("move "));
}

#[test]
fn multisolve_on_a_captured_pair() {
    let f = figures::captured_pair();
    let area = format!("{},{}", f.v("a"), f.v("b"));
    let o = shannon(&["multisolve", "--area", &area, "--first", "cut"], &f.graph.to_text());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "short-win\n");
}

#[test]
fn multisolve_rejects_an_area_with_a_terminal() {
    let f = figures::captured_pair();
    let area = format!("{},{}", f.v("t1"), f.v("a"));
    let o = shannon(&["multisolve", "--area", &area], &f.graph.to_text());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn detect_with_verification_reports_the_reduction() {
    let o = shannon(&["detect", "--verify"], &figures::capture_and_loss().graph.to_text());
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let (facts, reduced) = out.split_once("reduced\n").expect("reduced section");
    assert!(!facts.is_empty());
    assert!(facts.lines().all(|l| !l.ends_with("refuted")), "{facts}");
    assert!(reduced.starts_with("n 6\n"));
}

#[test]
fn census_over_a_fixture_matches_the_generator() {
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/connected6.g6");
    let read = shannon(&["census", fixture.to_str().unwrap(), "--n", "6"], "");
    let generated = shannon(&["census", "--n", "6", "--generate"], "");
    assert_eq!(read.status.code(), Some(0));
    assert_eq!(stdout(&read), stdout(&generated));
    assert_eq!(stdout(&read), "6\t112\t24\t9\t52\t7\n");
}

#[test]
fn census_rejects_a_wrong_order() {
    let o = shannon(&["census", "--n", "5"], "C~\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hex_annotation_marks_the_dead_corner() {
    let o = shannon(&["hex", "--annotate"], "hex 4\n....\n....\n...B\n..B.\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("hex 4\n....\n....\n...B\n..Bd\n"));
}

#[test]
fn hex_solve_on_an_empty_board() {
    let o = shannon(&["hex", "--solve"], "hex 2\n..\n..\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "short\n");
}

#[test]
fn malformed_input_exits_with_two() {
    assert_eq!(shannon(&["solve"], "n 3\ne 0 7\n").status.code(), Some(2));
    assert_eq!(shannon(&["hex"], "hex 2\n.X\n..\n").status.code(), Some(2));
    assert_eq!(shannon(&["solve", "/nonexistent/graph"], "").status.code(), Some(2));
}

#[test]
fn verify_passes_on_small_orders() {
    let o = shannon(&["verify", "--max-n", "4"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 10);
    assert!(out.lines().all(|l| l.starts_with("pass\t")), "{out}");
}
