use std::path::PathBuf;

use lie_centralizer::catalog::{
    cmd_maximal, cmd_parabolic, maximal_markdown, parabolic_markdown, QueryReport,
};
use lie_centralizer::{LieType, RootSystem};

const GROUPS: [&str; 5] = ["G2", "F4", "E6", "E7", "E8"];

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against the checked-in file; `BLESS=1` rewrites it instead.
fn check(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "{name} differs from the golden file");
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).unwrap() + "\n"
}

fn parabolic_reports(rs: &RootSystem) -> Vec<QueryReport> {
    (1..=rs.rank()).map(|i| cmd_parabolic(rs, i).unwrap()).collect()
}

#[test]
fn maximal_tables() {
    for g in GROUPS {
        let rs = RootSystem::new(g.parse::<LieType>().unwrap());
        let rows = cmd_maximal(&rs).unwrap();
        let lower = g.to_lowercase();
        check(&format!("maximal_{lower}.md"), &maximal_markdown(&rs, &rows));
        check(&format!("maximal_{lower}.json"), &json(&rows));
    }
}

#[test]
fn parabolic_tables() {
    for g in GROUPS {
        let rs = RootSystem::new(g.parse::<LieType>().unwrap());
        let reports = parabolic_reports(&rs);
        let lower = g.to_lowercase();
        check(&format!("parabolic_{lower}.md"), &parabolic_markdown(&rs, &reports));
        check(&format!("parabolic_{lower}.json"), &json(&reports));
    }
}

#[test]
fn golden_json_parses_back() {
    for g in GROUPS {
        let lower = g.to_lowercase();
        let text = std::fs::read_to_string(golden_path(&format!("parabolic_{lower}.json"))).unwrap();
        let reports: Vec<QueryReport> = serde_json::from_str(&text).unwrap();
        assert_eq!(json(&reports), text);
        for r in &reports {
            assert_eq!(QueryReport::from_json(&r.to_json()).unwrap(), *r);
        }
    }
}

#[test]
fn repeated_runs_are_identical() {
    let rs = RootSystem::new("E8".parse().unwrap());
    let a = maximal_markdown(&rs, &cmd_maximal(&rs).unwrap());
    let b = maximal_markdown(&rs, &cmd_maximal(&rs).unwrap());
    assert_eq!(a, b);
    assert_eq!(json(&parabolic_reports(&rs)), json(&parabolic_reports(&rs)));
}
