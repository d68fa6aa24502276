use std::process::{Command, Output};

fn sbl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbl"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rows(o: &Output) -> usize {
    stdout(o).lines().skip(1).count()
}

#[test]
fn chambers_prints_one_row_per_chamber() {
    let o = sbl(&["chambers", "deg2"]);
    assert!(o.status.success());
    assert_eq!(rows(&o), 8);
    let text = stdout(&o);
    assert!(text.contains("Ddeg Dunb P"), "{text}");
    let o = sbl(&["chambers", "3,6,3"]);
    assert_eq!(rows(&o), 22);
}

#[test]
fn classify_examples() {
    let o = sbl(&["classify", "deg2", "1/2", "1/2", "1/2"]);
    assert_eq!(stdout(&o).trim(), "ray T: stable base locus empty");
    let o = sbl(&["classify", "deg2", "2", "2", "1"]);
    assert_eq!(
        stdout(&o).trim(),
        "chamber 1 (nef): stable base locus empty"
    );
    let o = sbl(&["classify", "deg2", "3/4", "3/4", "-1/4"]);
    assert!(stdout(&o).starts_with("ray P: stable base locus {Q[(1)^*]}"));
    let o = sbl(&["classify", "deg2", "-1", "0", "0"]);
    assert_eq!(stdout(&o).trim(), "not effective");
    assert!(o.status.success());
}

#[test]
fn classify_on_a_wall() {
    // Between H11 and P, on the half-open wall assigned to item 2.
    let o = sbl(&["classify", "deg2", "7/4", "3/4", "-1/4"]);
    let text = stdout(&o);
    assert!(text.starts_with("wall on"), "{text}");
    assert!(text.contains("{Q[(1)^*]}"), "{text}");
}

#[test]
fn classify_agrees_with_chambers_table() {
    let table = stdout(&sbl(&["chambers", "deg3_general"]));
    let row = table.lines().find(|l| l.starts_with("12 ")).unwrap();
    // F + H11 + H2 lies inside the chamber bounded by H11, H2 and F.
    let o = sbl(&["classify", "deg3_general", "8/3", "8/3", "-1/3"]);
    let text = stdout(&o);
    assert!(text.starts_with("chamber 12:"), "{text}");
    let locus = row.split_once('{').unwrap().1;
    assert!(text.ends_with(&format!("{{{locus}\n")), "{text} vs {row}");
}

#[test]
fn malformed_rational_is_a_usage_error() {
    let o = sbl(&["classify", "deg2", "1/0", "0", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = sbl(&["classify", "deg2", "x", "0", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = sbl(&["chambers", "deg7"]);
    assert_eq!(o.status.code(), Some(2));
    let o = sbl(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let o = sbl(&["verify", "deg2", "-o", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: PASS"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["chamber_count"], 8);
    let txt = dir.path().join("r.txt");
    let o = sbl(&["verify", "deg3_general", "-o", txt.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&txt).unwrap(), stdout(&o));
}

#[test]
fn verify_reports_failure_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let over = dir.path().join("o.toml");
    // Claim an extra chamber that cannot exist.
    std::fs::write(
        &over,
        "[[expected]]\nid = 9\nboundary = [\"H11\", \"T\"]\nlocus = [\"boundary\", \"Q[(1)^*]\"]\nwalls = []\n",
    )
    .unwrap();
    let o = sbl(&["--catalog", over.to_str().unwrap(), "verify", "deg2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("item 9"));
}

#[test]
fn bad_catalog_override_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let over = dir.path().join("o.toml");
    std::fs::write(
        &over,
        "[[divisors]]\nname = \"X\"\nclass = [\"1\", \"0\"]\n",
    )
    .unwrap();
    let o = sbl(&["--catalog", over.to_str().unwrap(), "chambers", "deg2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn solve_class_examples() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("# P\nC1 1 0 3 0\nC2 0 1 3 0\nC3 1 1 2 1\n", "3/4 3/4 -1/4"),
        ("B4 1 0 5 0\nB5 0 1 5 0\nB3 1 0 -1 2\n", "5/3 5/3 -1/3"),
        ("1 0 0 1\n0 1 0 0\n0 0 1 0\n", "1 0 0"),
    ];
    for (i, (input, want)) in cases.iter().enumerate() {
        let p = dir.path().join(format!("{i}.txt"));
        std::fs::write(&p, input).unwrap();
        let o = sbl(&["solve-class", p.to_str().unwrap()]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), *want);
    }
    let p = dir.path().join("singular.txt");
    std::fs::write(&p, "1 0 0 1\n2 0 0 2\n0 0 1 0\n").unwrap();
    let o = sbl(&["solve-class", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("curves do not determine class"));
}

#[test]
fn canonical_examples() {
    let o = stdout(&sbl(&["canonical", "2", "4", "2"]));
    assert!(o.contains("K = -2 -2 -1"));
    assert!(o.contains("-K in Cone(H11, H2, T): interior"));
    assert!(o.contains("-K = 1 H11 + 1 H2 + 2 T"));
    let o = stdout(&sbl(&["canonical", "3", "6", "3"]));
    assert!(o.contains("K = -2 -2 0"));
    assert!(o.contains("boundary"));
    let o = stdout(&sbl(&["canonical", "2", "5", "3"]));
    assert!(o.contains("K = -4/3 -7/3 -1/3"));
    assert_eq!(sbl(&["canonical", "2", "3", "2"]).status.code(), Some(2));
}

#[test]
fn figure_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    assert!(sbl(&["figure", "deg2", "-o", a.to_str().unwrap()])
        .status
        .success());
    assert!(sbl(&["figure", "deg2", "-o", b.to_str().unwrap()])
        .status
        .success());
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.matches("<g class=\"chamber\"").count(), 8);
    assert_eq!(
        stdout(&sbl(&["chambers", "deg2"])),
        stdout(&sbl(&["chambers", "deg2"]))
    );
}

#[test]
fn unwritable_figure_path_fails() {
    let o = sbl(&["figure", "deg2", "-o", "/nonexistent/dir/f.svg"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn help_mentions_ascii_names() {
    let o = sbl(&["--help"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("Ddeg"));
}
