use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn synchro<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_synchro"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn gen(dir: &Path, cnf: &str, extra: &[&str]) -> PathBuf {
    let out = dir.join(format!("{cnf}{}.dfa", extra.join("")));
    let mut args = vec![
        "gen".to_string(),
        fixture(cnf).display().to_string(),
        "-o".into(),
        out.display().to_string(),
    ];
    args.extend(extra.iter().map(|s| s.to_string()));
    let o = synchro(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn gen_reports_state_counts() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&[&str], usize); 3] = [(&[], 41), (&["--binary"], 123), (&["--r", "3"], 1681)];
    for (extra, states) in cases {
        let path = dir.path().join("g.dfa");
        let mut args = vec!["gen".to_string(), fixture("psi1.cnf").display().to_string()];
        args.extend(extra.iter().map(|s| s.to_string()));
        args.extend(["-o".to_string(), path.display().to_string()]);
        let o = synchro(&args);
        assert!(
            stdout(&o).starts_with(&format!("states {states} ")),
            "{}",
            stdout(&o)
        );
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with(&format!("DFA v1\nstates {states}\n")));
    }
}

#[test]
fn gen_capacity_and_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.dfa");
    let o = synchro(&[
        "gen",
        fixture("psi1.cnf").to_str().unwrap(),
        "--r",
        "5",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    let bad = dir.path().join("bad.cnf");
    std::fs::write(&bad, "p cnf 2 1\n1 7 0\n").unwrap();
    let o = synchro(&["gen", bad.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exact_on_the_worked_examples() {
    let dir = tempfile::tempdir().unwrap();
    let a1 = gen(dir.path(), "psi1.cnf", &[]);
    let o = synchro(&["exact", a1.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("length 5\n"), "{}", stdout(&o));
    assert!(stdout(&o).contains("target z0\n"));

    let a2 = gen(dir.path(), "psi2.cnf", &[]);
    let o = synchro(&["exact", a2.to_str().unwrap()]);
    assert!(stdout(&o).contains("length 9\n"), "{}", stdout(&o));

    let o = synchro(&["exact", a2.to_str().unwrap(), "--budget-sets", "4"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn exact_reports_non_synchronizing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sinks.dfa");
    std::fs::write(&path, "DFA v1\nstates 2\nletters 1\n0\n1\n").unwrap();
    let o = synchro(&["exact", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not synchronizing"));
    let o = synchro(&["greedy", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_words() {
    let dir = tempfile::tempdir().unwrap();
    let a1 = gen(dir.path(), "psi1.cnf", &[]);
    let o = synchro(&["check", a1.to_str().unwrap(), "cbbac"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "image size 1\n{z0}\n");

    // c: S1 onto its first row (m+1), S2 onto columns 2..n+1 ((m+1)n), z1 to z0.
    let o = synchro(&["check", a1.to_str().unwrap(), "c"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("image size 21\n"), "{}", stdout(&o));

    let o = synchro(&["check", a1.to_str().unwrap(), "cbx"]);
    assert_eq!(o.status.code(), Some(2));
    let o = synchro(&["check", a1.to_str().unwrap(), "d"]);
    assert_eq!(o.status.code(), Some(2));

    let one = dir.path().join("one.dfa");
    std::fs::write(&one, "DFA v1\nstates 1\nletters 1\n0\n").unwrap();
    let o = synchro(&["check", one.to_str().unwrap(), ""]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn greedy_prints_a_word() {
    let dir = tempfile::tempdir().unwrap();
    let a1 = gen(dir.path(), "psi1.cnf", &[]);
    let o = synchro(&["greedy", a1.to_str().unwrap()]);
    assert!(o.status.success());
    let word = stdout(&o)
        .lines()
        .find_map(|l| l.strip_prefix("word "))
        .unwrap()
        .to_string();
    assert!(synchro(&["check", a1.to_str().unwrap(), &word])
        .status
        .success());
}

#[test]
fn verify_worked_examples() {
    let o = synchro(&["verify", fixture("psi1.cnf").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS  equality-n-plus-2"));

    let o = synchro(&["verify", fixture("psi2.cnf").to_str().unwrap(), "--binary"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS  gap-2n-2"));
    assert!(stdout(&o).contains("PASS  sandwich"));

    let o = synchro(&[
        "verify",
        fixture("pigeonhole-n4.cnf").to_str().unwrap(),
        "--r",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS  gap-rn-r"));
}

#[test]
fn bench_writes_sorted_csv() {
    let dir = tempfile::tempdir().unwrap();
    for f in ["psi1.cnf", "psi2.cnf"] {
        std::fs::copy(fixture(f), dir.path().join(f)).unwrap();
    }
    std::fs::write(dir.path().join("broken.cnf"), "garbage\n").unwrap();
    let csv = dir.path().join("out.csv");
    let o = synchro(&[
        "bench",
        dir.path().to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("broken.cnf"));
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], synchro_cli::bench::CSV_HEADER);
    assert!(lines[1].starts_with("psi1,3,4,2,41,true,5,"));
    assert!(lines[2].starts_with("psi1,3,4,3,1681,true,"));
    assert!(lines[3].starts_with("psi2,3,4,2,41,false,9,"));
    assert!(lines[4].starts_with("psi2,3,4,3,1681,false,"));
}

#[test]
fn bench_on_empty_directory_fails() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let o = synchro(&[
        "bench",
        dir.path().to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fixtures_match_generators() {
    use synchro::parse_dimacs;
    use synchro_cli::corpus::{pigeonhole, psi1, psi2};
    let read = |n: &str| parse_dimacs(&std::fs::read_to_string(fixture(n)).unwrap()).unwrap();
    assert_eq!(read("psi1.cnf"), psi1());
    assert_eq!(read("psi2.cnf"), psi2());
    for n in 3..=5 {
        assert_eq!(read(&format!("pigeonhole-n{n}.cnf")), pigeonhole(n));
        let planted = read(&format!("planted-n{n}.cnf"));
        assert!(synchro::brute_force_sat(&planted).unwrap().is_some());
    }
}
