use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equicohom"))
        .args(args)
        .env_remove("EQUICOHOM_BOUNDS")
        .output()
        .expect("run equicohom")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn tables_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../tables")
}

#[test]
fn golden_tables_are_current() {
    for fig in ["fig1", "fig2", "fig3", "fig4", "fig5", "fig6"] {
        let txt = std::fs::read_to_string(tables_dir().join(format!("{fig}.txt"))).unwrap();
        assert_eq!(stdout(&["table", fig]), txt, "{fig}.txt");
        let csv = std::fs::read_to_string(tables_dir().join(format!("{fig}.csv"))).unwrap();
        assert_eq!(stdout(&["--format", "csv", "table", fig]), csv, "{fig}.csv");
    }
    let products = std::fs::read_to_string(tables_dir().join("PRODUCT_TABLE.md")).unwrap();
    assert_eq!(stdout(&["table", "products"]), products);
}

#[test]
fn table_windows() {
    let out = stdout(&["--ascii", "table", "fig1", "--a", "-1..1", "--b", "0..0"]);
    assert_eq!(out, "b\\a  -1  0  1\n  0   0  A  0\n");
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "--format", "json", "table", "fig3", "--a", "0..2", "--b", "0..0",
    ]))
    .unwrap();
    assert!(json.to_string().contains("\"R\""), "{json}");
}

#[test]
fn point_groups() {
    assert_eq!(stdout(&["group", "point", "--deg", "0,0"]), "A\n");
    assert_eq!(stdout(&["group", "point", "--deg", "-3,3"]), "R₋\n");
    assert_eq!(
        stdout(&["--ascii", "group", "point", "--deg", "3,-3"]),
        "L_-\n"
    );
    assert_eq!(
        stdout(&["--ascii", "group", "point", "--deg", "-2,5"]),
        "<Z/2>\n"
    );
    assert_eq!(stdout(&["group", "ep", "--deg", "2,0"]), "⟨Z/2⟩\n");
    assert_eq!(stdout(&["group", "eap", "--deg", "0,-4"]), "⟨Z⟩\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "--format", "json", "group", "point", "--deg", "4,-4",
    ]))
    .unwrap();
    assert_eq!(v["group"], "L");
    assert_eq!(v["degree"]["a"], 4);
    assert_eq!(
        stdout(&["--format", "csv", "group", "point", "--deg", "0,3"]),
        "a,b,group\n0,3,<Z>\n"
    );
}

#[test]
fn cp_groups() {
    assert_eq!(
        stdout(&["--ascii", "group", "cp", "--deg", "0,0,0"]),
        "A + <Z>, generated by 1 (A), zbar*c (<Z>)\n"
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "--format", "json", "group", "cp", "--deg", "1,1,1",
    ]))
    .unwrap();
    assert_eq!(v["degree"]["n"], 1);
    let summands = v["summands"].as_array().unwrap();
    assert_eq!(summands.len(), 2);
    assert_eq!(summands[0]["beta"], "c");
    assert_eq!(summands[0]["functor"], "A");
    assert_eq!(
        stdout(&["group", "cp", "--deg", "-1,1,1"]),
        "A, generated by ζ\n"
    );
}

#[test]
fn arithmetic() {
    assert_eq!(stdout(&["mul", "point", "g", "g"]), "2g\n");
    assert_eq!(
        stdout(&["--ascii", "mul", "cp", "zeta", "cbar"]),
        "eps^2 - (1 - g)*(zbar*c)\n"
    );
    assert_eq!(stdout(&["mul", "cp", "zbar^2", "c^2"]), "ε²ζ̄c + ξcc̄\n");
    assert_eq!(stdout(&["mul", "cp", "ζ̄²", "c²"]), "ε²ζ̄c + ξcc̄\n");
    assert_eq!(stdout(&["--ascii", "chi", "zeta*c^2"]), "zbar*cbar^2\n");
    assert_eq!(
        stdout(&["--ascii", "normalize", "zbar^2*c^2"]),
        "eps^2*(zbar*c) + xi*(c*cbar)\n"
    );
    assert_eq!(
        stdout(&["--ascii", "restrict", "both", "c"]),
        "(zeta+*c+, zeta-*(eps^2 + xi*c-))\n"
    );
    assert_eq!(stdout(&["mul", "plus", "zeta+", "zeta+^-1"]), "1\n");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--format", "json", "mul", "ep", "xi", "xi^-1"])).unwrap();
    assert_eq!(v["result"], "1");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["group", "cp", "--deg", "1,1"]).status.code(), Some(2));
    assert_eq!(
        run(&["group", "point", "--deg", "x,1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["mul", "cp", "c^-1", "c"]).status.code(), Some(2));
    assert_eq!(run(&["table", "fig9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_small_bounds() {
    let out = run(&[
        "verify", "all", "--box", "3", "--cells", "6", "--cp-box", "2", "--cp-n", "1", "--n", "1",
        "--k", "1", "--jobs", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines().filter(|l| l.starts_with("PASS ")).count(),
        6,
        "{text}"
    );

    let out = Command::new(env!("CARGO_BIN_EXE_equicohom"))
        .args(["--format", "json", "verify", "ep-chain"])
        .env("EQUICOHOM_BOUNDS", "cells=8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let records: Vec<serde_json::Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(records.iter().all(|r| r["passed"] == true));
    assert!(records
        .iter()
        .any(|r| r["subject"].as_str().unwrap().contains("8 cells")));

    let bad = Command::new(env!("CARGO_BIN_EXE_equicohom"))
        .args(["verify", "les"])
        .env("EQUICOHOM_BOUNDS", "box=oops")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
