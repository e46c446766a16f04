use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

const WORKSPACE: &str = r#"{
  "ring": "Z",
  "matrices": {"M": [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]},
  "chains": {
    "X_ex": {"m1": [[-1], [2]], "m2": [[0, -1]]},
    "J": {"m1": {"rows": 1, "cols": 0}, "m2": {"rows": 0, "cols": 1}}
  },
  "morphisms": {
    "double": {"src": "X_ex", "dst": "X_ex", "a1": [[2]], "a2": [[2, 0], [0, 2]], "a3": [[2]]}
  },
  "squares": {
    "SQ_ex": {"f": [[1]], "a": [[2]], "b": {"rows": 0, "cols": 1}, "g": {"rows": 0, "cols": 1}}
  },
  "modules": {
    "Z2": {"invariant_factors": [2]},
    "Z3": {"invariant_factors": [3]},
    "Z4": {"invariant_factors": [4]}
  },
  "pairs": {
    "P_ex": {"U": [[-1, 2]], "V": [[0], [-1]], "convention": "paper-row"},
    "C_ex": {"U": [[0, -1]], "V": [[-1], [2]], "convention": "column"}
  },
  "families": {"D": {"chains": ["X_ex", "J"]}}
}"#;

fn workspace(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(ws: &NamedTempFile, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freeab"))
        .arg("--workspace")
        .arg(ws.path())
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn member_of_example_at_z4_is_false() {
    let ws = workspace(WORKSPACE);
    let o = run(&ws, &["member", "chain:X_ex", "module:Z4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "false\n");
}

#[test]
fn convert_to_paper_pair() {
    let ws = workspace(WORKSPACE);
    let o = run(&ws, &["convert", "chain:X_ex", "--to", "pair", "--convention", "paper"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "convention: paper-row\nU = [[-1, 2]]\nV = [[0], [-1]]\n"
    );
    let o = run(
        &ws,
        &["--json", "convert", "chain:X_ex", "--to", "pair", "--convention", "paper"],
    );
    assert_eq!(
        stdout(&o),
        "{\"U\":[[-1,2]],\"V\":[[0],[-1]],\"convention\":\"paper-row\",\"ring\":\"Z\"}\n"
    );
}

#[test]
fn eval_json_output() {
    let ws = workspace(WORKSPACE);
    let o = run(&ws, &["eval", "chain:X_ex", "module:Z4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"invariant_factors\":[2]}\n");
    let o = run(&ws, &["eval", "square:SQ_ex", "module:Z4", "--json"]);
    assert_eq!(stdout(&o), "{\"invariant_factors\":[2]}\n");
}

#[test]
fn battery_membership_is_the_class_of_2_torsion() {
    let ws = workspace(WORKSPACE);
    for target in ["chain:X_ex", "pair:P_ex", "pair:C_ex"] {
        let o = run(&ws, &["member", target, "--battery", "B"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(
            stdout(&o),
            "0: true\nZ/2: true\nZ/2 + Z/2: true\nZ/3: false\nZ/4: false\nZ/6: false\nZ: false\nZ/2 + Z: false\n"
        );
    }
    let o = run(&ws, &["member", "family:D", "--battery", "Z2,Z3"]);
    assert_eq!(stdout(&o), "Z2: false\nZ3: false\n");
}

#[test]
fn conversions_and_duals() {
    let ws = workspace(WORKSPACE);
    let o = run(&ws, &["convert", "square:SQ_ex", "--to", "chain"]);
    assert_eq!(stdout(&o), "m1 = [[1], [-2]]\nm2 = [[0, -1]]\n");
    let o = run(&ws, &["convert", "pair:P_ex", "--to", "chain"]);
    assert_eq!(stdout(&o), "m1 = [[-1], [2]]\nm2 = [[0, -1]]\n");
    let o = run(&ws, &["dual", "pair:P_ex"]);
    assert_eq!(stdout(&o), "convention: paper-row\nU = [[0, -1]]\nV = [[-1], [2]]\n");
    let o = run(&ws, &["dual", "chain:X_ex"]);
    assert_eq!(stdout(&o), "m1 = [[0], [-1]]\nm2 = [[-1, 2]]\n");
}

#[test]
fn structure_commands() {
    let ws = workspace(WORKSPACE);
    for cmd in ["kernel", "cokernel", "image"] {
        let o = run(&ws, &["--json", cmd, "morphism:double"]);
        assert_eq!(o.status.code(), Some(0), "{cmd}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert!(v.get("object").is_some());
    }
    assert_eq!(stdout(&run(&ws, &["homgroup", "X_ex", "X_ex"])), "Z\n");
    assert_eq!(stdout(&run(&ws, &["iszero", "chain:J"])), "false\n");
    let o = run(&ws, &["--json", "snf", "matrix:M"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["diagonal"], serde_json::json!([2, 6, 12]));
}

#[test]
fn output_is_deterministic() {
    let ws = workspace(WORKSPACE);
    let args = ["--json", "image", "morphism:double"];
    assert_eq!(run(&ws, &args).stdout, run(&ws, &args).stdout);
}

#[test]
fn exit_codes() {
    let ws = workspace(WORKSPACE);
    assert_eq!(run(&ws, &["eval", "chain:nope", "module:Z4"]).status.code(), Some(1));
    assert_eq!(run(&ws, &["eval", "module:Z2", "module:Z4"]).status.code(), Some(1));
    assert_eq!(run(&ws, &["eval", "chain:X_ex"]).status.code(), Some(1));
    assert_eq!(run(&ws, &["dual", "pair:C_ex"]).status.code(), Some(1));
    assert_eq!(run(&ws, &["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&ws, &["--help"]).status.code(), Some(0));

    let broken = workspace("{\"ring\": \"Z\", \"chains\": {");
    assert_eq!(run(&broken, &["iszero", "X"]).status.code(), Some(1));
    let misshapen = workspace(r#"{"ring": "Z", "chains": {"X": {"m1": [[1, 2]], "m2": [[1, 2]]}}}"#);
    let o = run(&misshapen, &["iszero", "X"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("chains.X"));
    let wrong_ring = workspace(
        r#"{"ring": "Z", "modules": {"M": {"ring": {"Zmod": 4}, "invariant_factors": [2]}}}"#,
    );
    assert_eq!(run(&wrong_ring, &["iszero", "X"]).status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let o = Command::new(env!("CARGO_BIN_EXE_freeab"))
        .args(["selftest", "--count", "3"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 8);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn modular_workspace() {
    let ws = workspace(
        r#"{"ring": {"Zmod": 4},
            "chains": {"X": {"m1": [[-1], [2]], "m2": [[0, -1]]}},
            "modules": {"F": {"invariant_factors": [4]}}}"#,
    );
    let o = run(&ws, &["--json", "eval", "X", "F"]);
    assert_eq!(stdout(&o), "{\"invariant_factors\":[2]}\n");
    let o = run(&ws, &["member", "X", "--battery", "B"]);
    assert_eq!(stdout(&o), "0: true\nZ/2: true\nZ/4: false\nZ/4 + Z/4: false\n");
}
