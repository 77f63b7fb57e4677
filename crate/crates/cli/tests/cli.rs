use std::process::{Command, Output};

use gauge5::decomposition::{loops2_gauge, Atom, GroupInfo, SpaceExpr};
use gauge5::manifold::homology;
use gauge5::{FGAbelianGroup, LieGroup, Localization, ManifoldSpec};
use serde_json::Value;

fn gauge5(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gauge5"))
        .args(args)
        .env_remove("GAUGE_CATALOG")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn records(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn decompose_spin_example() {
    let o = gauge5(&[
        "decompose",
        "--c",
        "5",
        "--m",
        "2",
        "--spin",
        "--group",
        "SU:4",
        "--k",
        "1",
        "--loops",
        "2",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "Ω²G₁(P⁴(5)) × Ω³G{5} × Ω⁷G × Ω⁴G × Ω⁵G");
}

#[test]
fn exceptional_table_at_5() {
    let o = gauge5(&["exponent", "--table", "exceptional", "--p", "5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("G2") && rows[0].ends_with("max(7, ν_p(c)+1)"));
    assert!(rows[1].starts_with("F4") && rows[1].ends_with("max(15, ν_p(c)+3)"));
    assert!(rows[2].starts_with("E6") && rows[2].ends_with("max(15, ν_p(c)+3)"));
}

#[test]
fn failed_hypothesis_is_named() {
    let o = gauge5(&[
        "classify", "--c", "6", "--m", "2", "--group", "SU:3", "--loops", "2",
    ]);
    assert!(!o.status.success());
    assert!(
        stderr(&o).contains("hypothesis 6∤c fails"),
        "{}",
        stderr(&o)
    );
    assert!(stdout(&o).is_empty());
}

#[test]
fn localization_flags_are_exclusive() {
    let o = gauge5(&[
        "decompose",
        "--c",
        "5",
        "--m",
        "2",
        "--group",
        "SU:4",
        "--loops",
        "2",
        "--at-p",
        "5",
        "--rational",
    ]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("--rational"));
}

#[test]
fn bad_group_names_the_flag() {
    let o = gauge5(&["classify", "--c", "5", "--m", "2", "--group", "SO:3"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("--group"), "{}", stderr(&o));
}

#[test]
fn machine_decomposition_round_trips() {
    let o = gauge5(&[
        "decompose",
        "--c",
        "35",
        "--m",
        "3",
        "--group",
        "SU:4",
        "--k",
        "2",
        "--loops",
        "2",
        "--format",
        "machine",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let recs = records(&o);
    assert_eq!(recs[0]["record"], "space");
    let group: GroupInfo = serde_json::from_value(recs[0]["group"].clone()).unwrap();
    let loc: Localization = serde_json::from_value(recs[0]["localization"].clone()).unwrap();
    let c: Option<u64> = serde_json::from_value(recs[0]["c"].clone()).unwrap();
    let mut rebuilt = SpaceExpr::new(group, c, loc);
    for r in &recs[1..] {
        assert_eq!(r["record"], "factor");
        let atom: Atom = serde_json::from_value(r["atom"].clone()).unwrap();
        rebuilt.push(atom, r["multiplicity"].as_u64().unwrap() as u32);
    }
    let expected = loops2_gauge(&ManifoldSpec::new(35, 3), &LieGroup::SU(4), 2).unwrap();
    assert_eq!(rebuilt, expected);
    assert_eq!(rebuilt.to_string(), expected.to_string());
    assert_eq!(recs[0]["text"], expected.to_string());
}

#[test]
fn machine_homology_round_trips() {
    let o = gauge5(&["homology", "--c", "9", "--m", "4", "--format", "machine"]);
    assert!(o.status.success());
    let groups: Vec<FGAbelianGroup> = records(&o)
        .into_iter()
        .map(|r| serde_json::from_value(r["group"].clone()).unwrap())
        .collect();
    assert_eq!(groups, homology(&ManifoldSpec::new(9, 4)).unwrap());
}

#[test]
fn moore_groups() {
    let o = gauge5(&["moore", "--c", "15"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "π₆(P⁴) = (Z/3)^2 ⊕ Z/5\nπ₇(P⁵) = (Z/3)^2 ⊕ Z/5\nsuspension image order = 3\n"
    );
}

#[test]
fn bott_table_layout() {
    let o = gauge5(&["bott", "--c", "3", "--m", "3", "--spin", "--family", "Spin"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[7], "6        Z ⊕ (Z/2)^4");
}

#[test]
fn rational_views() {
    let o = gauge5(&[
        "rational",
        "--betti",
        "1,0,0,0,1",
        "--group",
        "SU:2",
        "--view",
        "em",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "S³");
    let o = gauge5(&["rational", "--betti", "1,0,0,0,1", "--group", "SU:2"]);
    assert_eq!(stdout(&o).trim(), "G");
    let o = gauge5(&["rational", "--betti", "1,1", "--group", "SU:2"]);
    assert!(!o.status.success());
}

#[test]
fn catalog_override_from_env() {
    let path = std::env::temp_dir().join(format!("gauge5-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "order | SU | n==4 | p>=3 | 7\n").unwrap();
    let run = |catalog: Option<&std::path::Path>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_gauge5"));
        cmd.args(["classify", "--c", "7", "--m", "2", "--group", "SU:4"]);
        match catalog {
            Some(p) => cmd.env("GAUGE_CATALOG", p),
            None => cmd.env_remove("GAUGE_CATALOG"),
        };
        cmd.output().unwrap()
    };
    let builtin = run(None);
    assert!(stdout(&builtin).starts_with("group SU(4)  c = 7  d = 1"));
    let custom = run(Some(&path));
    std::fs::remove_file(&path).unwrap();
    assert!(
        stdout(&custom).starts_with("group SU(4)  c = 7  d = 7"),
        "{}",
        stdout(&custom)
    );

    let missing = run(Some(std::path::Path::new("/nonexistent/catalog.txt")));
    assert!(!missing.status.success());
}
