use std::io::Write;
use std::process::{Command, Output, Stdio};

fn hamsphere(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamsphere"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hamsphere"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_prints_exact_values() {
    let o = hamsphere(&["count", "--n", "7"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "labeled_spheres n=7 value=5712\n");
    let o = hamsphere(&["--format", "csv", "count", "--k", "1", "--m", "4"]);
    assert_eq!(
        stdout(&o),
        "quantity,n,k,m,value\npolygon_triangulations,,1,4,5\n"
    );
}

#[test]
fn enumerate_streams_blank_separated_complexes() {
    let o = hamsphere(&["enumerate", "--n", "5"]);
    let text = stdout(&o);
    let blocks: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(blocks.len(), 10);
    assert!(blocks.iter().all(|b| b.starts_with("n 5")));
    assert_eq!(
        stdout(&hamsphere(&["enumerate", "--n", "6", "--count-only"])),
        "195\n"
    );
    assert_eq!(
        stdout(&hamsphere(&["enumerate", "--m", "4", "--k", "1", "--count-only"])),
        "5\n"
    );
}

#[test]
fn search_exit_codes() {
    let found = with_stdin(&["search", "-"], "n 4\nt 0 1 2\nt 0 1 3\nt 0 2 3\nt 1 2 3\n");
    assert_eq!(found.status.code(), Some(0));
    let out = stdout(&found);
    assert!(out.starts_with("FOUND\n"));
    assert_eq!(out.lines().filter(|l| l.starts_with("t ")).count(), 4);

    let missing = with_stdin(&["search", "-"], "n 4\nt 0 1 2\nt 0 1 3\n");
    assert_eq!(missing.status.code(), Some(1));
    assert!(stdout(&missing).starts_with("NOT_FOUND\n"));

    let sample = stdout(&hamsphere(&["sample", "--n", "12", "--p", "1/2", "--seed", "7"]));
    let timeout = with_stdin(&["search", "-", "--max-nodes", "1"], &sample);
    assert_eq!(timeout.status.code(), Some(2));
    assert!(stdout(&timeout).starts_with("TIMEOUT\n"));
}

#[test]
fn sample_is_seeded() {
    let a = hamsphere(&["sample", "--n", "8", "--p", "0.4", "--seed", "11"]);
    let b = hamsphere(&["sample", "--n", "8", "--p", "0.4", "--seed", "11"]);
    let c = hamsphere(&["sample", "--n", "8", "--p", "0.4", "--seed", "12"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    assert!(stdout(&a).starts_with("n 8\n"));
}

#[test]
fn moments_key_values() {
    let out = stdout(&hamsphere(&["moments", "--n", "5", "--p", "1/2"]));
    assert!(out.contains("expected_count=5/32\n"));
    assert!(out.contains("second_moment_ratio=16\n"));
    assert!(out.ends_with('\n'));
}

#[test]
fn sweep_csv_is_identical_across_thread_counts() {
    let args = [
        "sweep", "--n", "9", "--trials", "20", "--pc", "0.5,1,2", "--format", "csv",
    ];
    let a = hamsphere(&[&args[..], &["--threads", "1"]].concat());
    let b = hamsphere(&[&args[..], &["--threads", "4"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("n,p,trials,successes,timeouts,phat,ci_low,ci_high,mean_nodes\n"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn verify_lines_and_exit_status() {
    let empty = hamsphere(&["verify"]);
    assert_eq!(empty.status.code(), Some(0));
    assert!(empty.stdout.is_empty());

    let o = hamsphere(&["verify", "--suite", "moments"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for line in out.lines() {
        let fields: Vec<&str> = line.splitn(3, ' ').collect();
        assert_eq!(fields[1], "PASS", "{line}");
    }
    assert!(out.contains("intersection_identity_n5_p2_3 PASS"));

    let bad = hamsphere(&["verify", "--suite", "nope"]);
    assert!(!bad.status.success());
}

#[test]
fn appendix_suite_includes_the_convolution_check() {
    let o = hamsphere(&["verify", "--suite", "appendix"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("banana_convolution_r2_k200 PASS"));
}
