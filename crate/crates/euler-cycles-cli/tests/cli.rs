//! End-to-end tests of the command surface: pinned output lines, byte
//! determinism, format sniffing, and exit codes.

use euler_cycles_cli::run;

fn run_cmd(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["euler-cycles"];
    argv.extend_from_slice(args);
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_temp(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join("euler-cycles-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn classify_k5_pinned_line() {
    let path = write_temp("k5.g6", "D~{\n");
    let (code, out, _) = run_cmd(&["classify", "--in", &path]);
    assert_eq!(code, 0);
    assert_eq!(out, "triple(0,1,3)\tlengths=3,4,5\n");
}

#[test]
fn classify_accepts_edge_list() {
    let path = write_temp("c6.txt", "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
    let (code, out, _) = run_cmd(&["classify", "--in", &path]);
    assert_eq!(code, 0);
    assert_eq!(out, "single(2)\tlengths=6\n");
}

#[test]
fn empty_shape_table_carries_note() {
    let (code, out, _) = run_cmd(&["cases", "table", "--family", "012", "--shape", "a"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("# note: no feasible configuration\n"), "{out}");
}

#[test]
fn shape_b_012_table_rows() {
    let (code, out, _) = run_cmd(&["cases", "table", "--family", "012", "--shape", "b"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(2).collect();
    assert_eq!(rows, vec!["0\t1\t2\t0\t1\t1\t0\t1", "1\t2\t0\t1\t0\t1\t1\t2"]);
}

#[test]
fn cc_table_is_byte_deterministic() {
    let a = run_cmd(&["cases", "table", "--family", "023"]);
    let b = run_cmd(&["cases", "table", "--family", "023"]);
    assert_eq!(a, b);
    // pair (2,3): even combined type 1 escapes the family, odd stays
    assert!(a.1.contains("2\t3\t1\t3\ttrue\tfalse"));
    assert!(a.1.contains("# note:"));
}

#[test]
fn atlas_enumerate_and_census_deterministic() {
    let a = run_cmd(&["atlas", "enumerate", "--max-order", "6"]);
    assert_eq!(a.0, 0);
    let lines: Vec<&str> = a.1.lines().collect();
    assert_eq!(lines.len(), 1 + 1 + 4 + 8);
    assert_eq!(lines[0], "Bw"); // the triangle
    let b = run_cmd(&["atlas", "enumerate", "--max-order", "6"]);
    assert_eq!(a, b);

    let c = run_cmd(&["atlas", "census", "--max-order", "6"]);
    assert_eq!(c.0, 0);
    assert!(c.1.contains("5\ttriple(0,1,3)\t1"), "{}", c.1); // K5
    assert!(c.1.contains("6\ttriple(0,1,3)\t1"), "{}", c.1); // the (6,8) member
    // orders 3 and 4 hold single cycles only
    for line in c.1.lines().filter(|l| l.starts_with("3\t") || l.starts_with("4\t")) {
        assert!(!line.contains("triple") && !line.contains("quad"), "{line}");
    }
    let d = run_cmd(&["atlas", "census", "--max-order", "6"]);
    assert_eq!(c, d);
}

#[test]
fn graceful_search_and_verify_round_trip() {
    // C4 is graceful; feed the found labeling back through verify
    let path = write_temp("c4.g6", "Cr\n");
    let (code, out, _) = run_cmd(&["graceful", "search", "--in", &path]);
    assert_eq!(code, 0);
    assert!(out.contains("found"));
    let labeling: String = out
        .lines()
        .skip_while(|l| *l != "node:label")
        .skip(1)
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(labeling.lines().count(), 4);
    let lab_path = write_temp("c4.labels", &labeling);
    let (code, out, _) = run_cmd(&["graceful", "verify", "--in", &path, "--labels", &lab_path]);
    assert_eq!(code, 0);
    assert!(out.contains("true"), "{out}");
}

#[test]
fn graceful_search_proves_c5_nongraceful() {
    let path = write_temp("c5.g6", "Dhc\n");
    let (code, out, _) = run_cmd(&["graceful", "search", "--in", &path]);
    assert_eq!(code, 0);
    assert!(out.contains("exhausted-none"));
}

#[test]
fn decompose_pythagoras() {
    let (_, g6, _) = run_cmd(&["named", "pythagoras"]);
    let path = write_temp("pyth.g6", &g6);
    let (code, out, _) = run_cmd(&["decompose", "--in", &path]);
    assert_eq!(code, 0);
    // the deterministic circuit split yields the central triangle plus the
    // 9-cycle perimeter: xi = (0,1,0,1), so the weighted sum is 1 + 3 = 0
    // mod 4, agreeing with q = 12
    assert!(out.contains("0\t1\t0\t1\t2"), "{out}");
    assert!(out.contains("0\t0\ttrue"), "{out}");
    assert!(out.contains("candidate"), "{out}");
}

#[test]
fn error_paths_and_exit_codes() {
    // usage error: unknown flag
    let (code, _, err) = run_cmd(&["classify", "--bogus"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    // usage error: bad family value
    let (code, _, _) = run_cmd(&["cases", "table", "--family", "014"]);
    assert_eq!(code, 2);
    // domain error: malformed graph6
    let path = write_temp("bad.g6", "B\n");
    let (code, _, err) = run_cmd(&["classify", "--in", &path]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: "), "{err}");
    // domain error: decompose a non-Euler graph
    let path = write_temp("p3.txt", "3 2\n0 1\n1 2\n");
    let (code, _, err) = run_cmd(&["decompose", "--in", &path]);
    assert_eq!(code, 1);
    assert!(err.contains("Euler"), "{err}");
    // domain error: unknown named graph
    let (code, _, _) = run_cmd(&["named", "petersen"]);
    assert_eq!(code, 1);
}

#[test]
fn out_flag_writes_file() {
    let target = write_temp("out.tsv", "");
    let path = write_temp("k5b.g6", "D~{\n");
    let (code, out, _) = run_cmd(&["classify", "--in", &path, "--out", &target]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&target).unwrap(), "triple(0,1,3)\tlengths=3,4,5\n");
}

#[test]
fn cases_divide_rows() {
    let (code, out, _) = run_cmd(&["cases", "divide", "--family", "012", "--cycle-type", "0"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(2).collect();
    assert_eq!(rows, vec!["0\t0\te", "0\t2\td", "1\t1\td", "2\t0\td", "2\t2\te"]);
}

#[test]
fn cases_explore_depth_one() {
    let (code, out, _) =
        run_cmd(&["cases", "explore", "--shape", "a", "--family", "123", "--depth", "1"]);
    assert_eq!(code, 0);
    // root plus 13 level-1 branches
    assert_eq!(out.lines().filter(|l| l.starts_with(char::is_numeric)).count(), 14);
    assert!(out.contains("stop"));
    assert!(out.contains("continue"));
    assert!(out.contains("escapes"));
}

#[test]
fn cases_audit_reports_divergences_and_conventions() {
    let a = run_cmd(&["cases", "audit"]);
    assert_eq!(a.0, 0);
    let b = run_cmd(&["cases", "audit"]);
    assert_eq!(a, b);
    // misprint row: computed 1 vs duplicated 4
    assert!(a.1.contains("023\t2,3\te\t1\t1\t4"), "{}", a.1);
    // exactly the two reflection-representative divergences
    assert!(a.1.contains("f\t013\textra\t0,3,1\t0,0,0"));
    assert!(a.1.contains("f\t123\textra\t1,3,2\t1,1,0"));
    assert!(!a.1.contains("missing"));
    // the two chord accountings disagree in opposite directions
    assert!(a.1.contains("holds under the arc-length convention only"));
    assert!(a.1.contains("holds under the chord-including-cycle convention only"));
}

#[test]
fn atlas_sample_deterministic() {
    let a = run_cmd(&[
        "atlas", "sample", "--family", "013", "--trials", "2", "--seed", "7", "--max-order", "6",
    ]);
    let b = run_cmd(&[
        "atlas", "sample", "--family", "013", "--trials", "2", "--seed", "7", "--max-order", "6",
    ]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}
