use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn ecc<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_ecc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn tau_of_p4() {
    let o = ecc(["tau".as_ref(), fixture("tests/fixtures/p4.txt").as_os_str()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n=4 m=3 tau=10 avec=5/2 xi=14 rad=2 diam=3\n");

    let o = ecc([
        "tau".as_ref(),
        fixture("tests/fixtures/p4.txt").as_os_str(),
        "--all".as_ref(),
    ]);
    assert_eq!(stdout(&o).lines().nth(1), Some("ecc=3 2 2 3"));
}

#[test]
fn tau_of_k5() {
    let o = ecc(["tau".as_ref(), fixture("tests/fixtures/k5.txt").as_os_str()]);
    assert_eq!(stdout(&o), "n=5 m=10 tau=5 avec=1 xi=20 rad=1 diam=1\n");
}

#[test]
fn tau_input_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "").unwrap();
    let o = ecc(["tau".as_ref(), empty.as_os_str()]);
    assert_eq!(o.status.code(), Some(1));

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3\n0 1\n1 x\n").unwrap();
    let o = ecc(["tau".as_ref(), bad.as_os_str()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let split = dir.path().join("split.txt");
    fs::write(&split, "4\n0 1\n2 3\n").unwrap();
    let o = ecc(["tau".as_ref(), split.as_os_str()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("disconnected"));

    let o = ecc(["tau", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn family_reports_closed_forms() {
    let o = ecc(["family", "--name", "U2", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("# tau_computed=13\n"), "{out}");
    assert!(out.contains("# tau_published=9\n"));
    assert!(out.contains("# status=published-discrepancy\n"));

    let out = stdout(&ecc(["family", "--name", "B2", "--n", "7"]));
    assert!(out.contains("# tau_computed=24\n") && out.contains("# status=matches-published\n"));

    let out = stdout(&ecc(["family", "--name", "star", "--n", "5"]));
    assert!(out.contains("# tau_computed=9\n") && out.contains("# status=matches-published\n"));

    let out = stdout(&ecc([
        "family",
        "--name",
        "double_star",
        "--n",
        "7",
        "--k",
        "3",
    ]));
    assert!(out.contains("# tau_computed=19\n"), "{out}");
}

#[test]
fn family_output_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b2p.txt");
    fs::write(
        &file,
        stdout(&ecc(["family", "--name", "B2prime", "--n", "7"])),
    )
    .unwrap();
    let o = ecc(["tau".as_ref(), file.as_os_str()]);
    assert!(stdout(&o).contains("tau=28 "), "{}", stdout(&o));
}

#[test]
fn family_errors_exit_1() {
    assert_eq!(
        ecc(["family", "--name", "B2", "--n", "5"]).status.code(),
        Some(1)
    );
    assert_eq!(
        ecc(["family", "--name", "wheel", "--n", "5"]).status.code(),
        Some(1)
    );
    assert_eq!(
        ecc(["family", "--name", "S_star", "--n", "7"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn rewrite_star_to_path_writes_trace() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("trace.txt");
    let o = ecc([
        "rewrite".as_ref(),
        "--algorithm".as_ref(),
        "1".as_ref(),
        fixture("../core/tests/fixtures/alg1_star5.txt").as_os_str(),
        "--trace".as_ref(),
        out.as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(
        stdout(&o),
        "algorithm 1: tau 9 -> 16 in 2 steps, 2 rounds\n"
    );
    assert_eq!(
        fs::read_to_string(&out).unwrap(),
        fs::read_to_string(fixture("../core/tests/fixtures/alg1_star5.trace")).unwrap()
    );
}

#[test]
fn rewrite_path_to_star_on_stdout() {
    let o = ecc([
        "rewrite".as_ref(),
        "--algorithm".as_ref(),
        "2".as_ref(),
        fixture("tests/fixtures/p4.txt").as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("algorithm 2\norder 4\ninitial tau 10 rad 2\n"));
    assert!(out.ends_with("algorithm 2: tau 10 -> 7 in 1 steps, 1 rounds\n"));
}

#[test]
fn rewrite_errors_exit_1_without_partial_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("trace.txt");
    let o = ecc([
        "rewrite".as_ref(),
        "--algorithm".as_ref(),
        "3".as_ref(),
        fixture("tests/fixtures/s6.txt").as_os_str(),
        "--trace".as_ref(),
        out.as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("no perfect matching"));
    assert!(!out.exists());
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);

    let o = ecc([
        "rewrite".as_ref(),
        "--algorithm".as_ref(),
        "1".as_ref(),
        fixture("tests/fixtures/k5.txt").as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not a tree"));

    let o = ecc([
        "rewrite".as_ref(),
        "--algorithm".as_ref(),
        "4".as_ref(),
        fixture("tests/fixtures/p4.txt").as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn enumerate_matches_golden_csv() {
    let o = ecc([
        "enumerate",
        "--class",
        "all",
        "--min-n",
        "4",
        "--max-n",
        "8",
        "--threads",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let golden = fs::read_to_string(fixture("tests/fixtures/enumerate_all_4_8.csv")).unwrap();
    assert_eq!(stdout(&o), golden);
}

#[test]
fn enumerate_dumps_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let wd = dir.path().join("witnesses");
    let o = ecc([
        "enumerate".as_ref(),
        "--class".as_ref(),
        "bicyclic".as_ref(),
        "--min-n".as_ref(),
        "6".as_ref(),
        "--max-n".as_ref(),
        "6".as_ref(),
        "--witness-dir".as_ref(),
        wd.as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut names: Vec<String> = fs::read_dir(&wd)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(
        names,
        [
            "bicyclic_n6_max_0.txt",
            "bicyclic_n6_min_0.txt",
            "bicyclic_n6_min_1.txt"
        ]
    );
    let o = ecc(["tau".as_ref(), wd.join("bicyclic_n6_max_0.txt").as_os_str()]);
    assert!(stdout(&o).contains("tau=19 "));
}

#[test]
fn enumerate_rejects_bad_class() {
    let o = ecc([
        "enumerate",
        "--class",
        "tricyclic",
        "--min-n",
        "4",
        "--max-n",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "enumerate",
        "--class",
        "unicyclic",
        "--min-n",
        "3",
        "--max-n",
        "7",
    ];
    assert_eq!(stdout(&ecc(args)), stdout(&ecc(args)));
    let f = fixture("../core/tests/fixtures/alg2_spider14.txt");
    let args = [
        "rewrite".as_ref(),
        "--algorithm".as_ref(),
        "2".as_ref(),
        f.as_os_str(),
    ];
    assert_eq!(stdout(&ecc(args)), stdout(&ecc(args)));
}

#[test]
fn verify_trivial_bounds_pass() {
    let o = ecc(["verify", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("checks, 0 failed\n"));
}

#[test]
fn verify_reports_refuted_claims() {
    let o = ecc(["verify", "--max-n", "8", "--threads", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    let failed: Vec<&str> = out.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failed.len(), 2, "{out}");
    assert!(failed[0].contains("unicyclic maximum at U2") && failed[0].contains("n=4"));
    assert!(failed[1].contains("S_* is the only conjugated tree") && failed[1].contains("n=8"));
    assert!(out.contains("PASS  unicyclic maximum is C4 at n=4, U2 beyond"));
}

#[test]
fn verify_names_a_corrupted_constructor() {
    let o = ecc(["verify", "--max-n", "3", "--inject-fault", "U2"]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(
        out.lines()
            .any(|l| l.starts_with("FAIL  family identities") && l.contains("U2")),
        "{out}"
    );
    assert!(stderr(&o).contains("family identities"));
}

#[test]
fn verify_rejects_oversized_bounds() {
    assert_eq!(
        ecc(["verify", "--max-unicyclic", "13"]).status.code(),
        Some(1)
    );
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(ecc(Vec::<&str>::new()).status.code(), Some(1));
    assert_eq!(ecc(["bogus"]).status.code(), Some(1));
    assert_eq!(ecc(["tau"]).status.code(), Some(1));
    assert_eq!(ecc(["--help"]).status.code(), Some(0));
}
