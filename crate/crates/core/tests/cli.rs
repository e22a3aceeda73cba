use std::path::Path;
use std::process::{Command, Output};

use lcs_core::is_subsequence;

fn lcs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcs")).args(args).output().unwrap()
}

fn field<'a>(stdout: &'a str, key: &str) -> &'a str {
    stdout
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key} in {stdout}"))
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_str().unwrap().to_owned()
}

fn data_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}

#[test]
fn compute_identity() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.txt", "ATGC\n");
    let c = write(dir.path(), "c.txt", "ATGC\n");
    let out = lcs(&["compute", "--parent", &p, "--child", &c]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(field(&stdout, "lcs_length"), "4");
    assert_eq!(field(&stdout, "similarity_percent"), "100.00");
    assert!(field(&stdout, "elapsed_seconds").parse::<f64>().unwrap() >= 0.0);
    assert!(!stdout.contains("subsequence"));
}

#[test]
fn compute_with_traceback() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.txt", "ABCBDAB");
    let c = write(dir.path(), "c.txt", "BDCABA");
    let out = lcs(&["compute", "--parent", &p, "--child", &c, "--traceback", "--workers", "3", "--block-size", "2"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(field(&stdout, "lcs_length"), "4");
    let z = field(&stdout, "subsequence");
    assert_eq!(z.len(), 4);
    assert!(is_subsequence(z.as_bytes(), b"ABCBDAB") && is_subsequence(z.as_bytes(), b"BDCABA"));
}

#[test]
fn compute_reads_fasta_by_extension_and_flag() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.fa", ">parent\nacgt\nACGT\n>ignored\nTTTT\n");
    let c = write(dir.path(), "c.seq", ">child\nCGTA\n");
    let out = lcs(&["compute", "--parent", &p, "--child", &c, "--format", "fasta", "--validate-dna", "--traceback"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(field(&stdout, "parent_length"), "8");
    assert_eq!(field(&stdout, "lcs_length"), "4");
}

#[test]
fn compute_worker_count_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.txt");
    let c = dir.path().join("c.txt");
    for (path, seed) in [(&p, "5"), (&c, "6")] {
        let out = lcs(&["gen", "--length", "700", "--seed", seed, "--out", path.to_str().unwrap()]);
        assert!(out.status.success());
    }
    let run = |workers: &str| {
        let out = lcs(&[
            "compute", "--parent", p.to_str().unwrap(), "--child", c.to_str().unwrap(),
            "--traceback", "--workers", workers, "--block-size", "50",
        ]);
        assert!(out.status.success());
        let s = String::from_utf8(out.stdout).unwrap();
        (field(&s, "lcs_length").to_owned(), field(&s, "subsequence").to_owned())
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert_eq!(one, run("7"));
}

#[test]
fn compute_missing_file_names_path() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.txt", "ATGC");
    let missing = dir.path().join("nope.txt");
    let out = lcs(&["compute", "--parent", &p, "--child", missing.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("nope.txt"));
}

#[test]
fn compute_alphabet_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.txt", "ATXC");
    let out = lcs(&["compute", "--parent", &p, "--child", &p, "--validate-dna"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 2"));
    // Without validation any byte is a symbol.
    assert!(lcs(&["compute", "--parent", &p, "--child", &p]).status.success());
}

#[test]
fn compute_rejects_zero_workers() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.txt", "AC");
    let out = lcs(&["compute", "--parent", &p, "--child", &p, "--workers", "0"]);
    assert!(!out.status.success());
}

#[test]
fn unknown_flag_fails() {
    let out = lcs(&["gen", "--length", "3", "--seed", "1", "--out", "/dev/null", "--color"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_files() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f");
    let g = dir.path().join("g");
    assert!(lcs(&["gen", "--length", "0", "--seed", "1", "--out", f.to_str().unwrap()]).status.success());
    assert_eq!(std::fs::read(&f).unwrap(), b"");

    assert!(lcs(&["gen", "--length", "5", "--alphabet", "A", "--seed", "3", "--out", f.to_str().unwrap()]).status.success());
    assert_eq!(std::fs::read(&f).unwrap(), b"AAAAA");

    for path in [&f, &g] {
        assert!(lcs(&["gen", "--length", "300", "--seed", "9", "--out", path.to_str().unwrap()]).status.success());
    }
    assert_eq!(std::fs::read(&f).unwrap(), std::fs::read(&g).unwrap());
}

#[test]
fn gen_empty_alphabet_fails() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f");
    let out = lcs(&["gen", "--length", "3", "--alphabet", "", "--seed", "1", "--out", f.to_str().unwrap()]);
    assert!(!out.status.success());
}

#[test]
fn bench_single_size() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().join("r.csv");
    let out = lcs(&["bench", "--sizes", "10x5", "--workers", "4", "--seed", "1", "--out", r.to_str().unwrap()]);
    assert!(out.status.success());
    let rows = data_rows(&std::fs::read_to_string(&r).unwrap());
    assert_eq!(rows.len(), 1);
    assert_eq!(&rows[0][..4], ["10", "5", "4", "64"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("speedup"));
}

#[test]
fn bench_worker_sweep_keeps_length() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().join("r.csv");
    let out = lcs(&["bench", "--sizes", "100x10", "--workers", "1,2,4", "--seed", "1", "--out", r.to_str().unwrap()]);
    assert!(out.status.success());
    let rows = data_rows(&std::fs::read_to_string(&r).unwrap());
    assert_eq!(rows.len(), 3);
    let workers: Vec<_> = rows.iter().map(|r| r[2].as_str()).collect();
    assert_eq!(workers, ["1", "2", "4"]);
    assert!(rows.iter().all(|r| r[7] == rows[0][7]));
}

#[test]
fn bench_reports_bad_case_with_nonzero_exit() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().join("r.csv");
    let out = lcs(&["bench", "--sizes", "10x5", "--workers", "0,2", "--out", r.to_str().unwrap()]);
    assert!(!out.status.success());
    // The good case is still recorded.
    assert_eq!(data_rows(&std::fs::read_to_string(&r).unwrap()).len(), 1);
}

#[test]
fn help_exits_zero() {
    let out = lcs(&["--help"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for sub in ["compute", "bench", "gen"] {
        assert!(text.contains(sub));
    }
}
