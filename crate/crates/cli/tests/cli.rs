use std::collections::HashSet;
use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use oortscan::construct::{build, corpus, Profile};
use oortscan::format::parse_group_spec;
use oortscan::Caps;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oortscan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn machine(args: &[&str]) -> (i32, String) {
    let mut all = args.to_vec();
    all.extend(["--format", "machine"]);
    let out = run(&all);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn value<'a>(report: &'a str, key: &str) -> Option<&'a str> {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix(" = "))
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn classify_dihedral_passes() {
    let (code, out) = machine(&["classify", "--family", "D:18", "--p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "shape"), Some("Dihedral(18)"));
    assert_eq!(value(&out, "result"), Some("pass"));
}

#[test]
fn classify_quaternion_fails() {
    let (code, out) = machine(&["classify", "--family", "Q:8", "--p", "2"]);
    assert_eq!(code, 1);
    assert_eq!(value(&out, "oort_necessary"), Some("fail"));
    assert_eq!(value(&out, "exit_code"), Some("1"));
}

#[test]
fn classify_klein_file() {
    let path = scratch("klein.grp");
    fs::write(&path, "# Klein four\ndegree 4\n(0 1)(2 3)\n(0 2)(1 3)\n").unwrap();
    let (code, out) = machine(&["classify", "--file", path.to_str().unwrap(), "--p", "2"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(value(&out, "shape"), Some("Dihedral(4)"));
}

#[test]
fn parse_errors_carry_position() {
    let path = scratch("broken.grp");
    fs::write(&path, "degree 4\n(0 1)(2 x)\n").unwrap();
    let out = run(&["classify", "--file", path.to_str().unwrap(), "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");

    let out = run(&["classify", "--family", "D:", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cap_is_reported() {
    let out = Command::new(env!("CARGO_BIN_EXE_oortscan"))
        .args(["classify", "--family", "S4", "--p", "2"])
        .env("OORTSCAN_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cap exceeded"), "{err}");
}

#[test]
fn scenarios_report_obstructions() {
    let (code, out) = machine(&["scenario", "odd_type4_lp", "--p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "obstruction"), Some("true"));
    let (code, out) = machine(&["scenario", "even_type56"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "branch_count"), Some("5"));
    let (code, out) = machine(&["scenario", "even_type7"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "required_different"), Some("18"));
    assert_eq!(run(&["scenario", "nonesuch"]).status.code(), Some(2));
}

#[test]
fn genus_and_filtration_commands() {
    let (code, out) = machine(&["genus", "as", "--p", "5", "--m", "6"]);
    assert_eq!((code, value(&out, "genus")), (0, Some("10")));
    let (_, out) = machine(&[
        "genus",
        "tame",
        "--cover",
        "group_order 6;branch 2;branch 2;branch 3",
    ]);
    assert_eq!(value(&out, "genus"), Some("0"));
    let (_, out) = machine(&[
        "genus",
        "wild",
        "--cover",
        "group_order 3;branch 3 p=3 : 3 3 3",
    ]);
    assert_eq!(value(&out, "genus"), Some("1"));
    let (_, out) = machine(&["filtration", "upper", "--p", "2", "--orders", "8,8,2,2"]);
    assert_eq!(value(&out, "jump.1"), Some("u=3/2 lower=3 order_after=1"));
    let (code, _) = machine(&[
        "filtration",
        "check",
        "--p",
        "2",
        "--orders",
        "8,8,2,2,2,2",
        "--sub-order",
        "2",
    ]);
    assert_eq!(code, 0);
    let (code, _) = machine(&[
        "filtration",
        "check",
        "--p",
        "2",
        "--orders",
        "8,8,2,2",
        "--sub-order",
        "2",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn corpus_filters_by_prime() {
    let (code, out) = machine(&["corpus", "--profile", "smoke", "--p", "7"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "mismatch"), Some("0"));
    assert!(out
        .lines()
        .filter(|l| l.starts_with("p = "))
        .all(|l| l == "p = 7"));
}

#[test]
fn exit_code_matches_report() {
    for args in [
        &["classify", "--family", "SL23", "--p", "2"][..],
        &["classify", "--family", "A4", "--p", "2"][..],
        &[
            "filtration",
            "check",
            "--p",
            "3",
            "--orders",
            "9,9,3",
            "--sub-order",
            "3",
        ][..],
    ] {
        let (code, out) = machine(args);
        assert_eq!(
            value(&out, "exit_code"),
            Some(code.to_string().as_str()),
            "{args:?}"
        );
    }
}

#[test]
fn make_round_trips_through_classify() {
    let mut seen = HashSet::new();
    for e in corpus(Profile::Smoke) {
        let spec = e.spec.to_string();
        if !seen.insert(spec.clone()) {
            continue;
        }
        let out = run(&["make", "--family", &spec]);
        assert!(out.status.success(), "{spec}");
        let text = String::from_utf8(out.stdout).unwrap();
        let back = parse_group_spec(&text)
            .unwrap()
            .build(Caps::default())
            .unwrap();
        assert_eq!(
            back.elements(),
            build(&e.spec).unwrap().elements(),
            "{spec}"
        );

        let path = scratch(&format!("make-{}.grp", seen.len()));
        fs::write(&path, &text).unwrap();
        let (code, report) = machine(&[
            "classify",
            "--file",
            path.to_str().unwrap(),
            "--p",
            &e.p.to_string(),
        ]);
        assert!(code == 0 || code == 1, "{spec}");
        assert_eq!(
            value(&report, "order"),
            Some(back.order().to_string().as_str()),
            "{spec}"
        );
    }
}
