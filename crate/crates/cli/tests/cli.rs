use std::path::PathBuf;
use std::process::{Command, Output};

use e8_core::algebra::Algebra;
use e8_core::analysis::StructureTable;
use e8_core::codec::{element_to_json, Encoding};
use e8_core::rational::{self, int, Rational};
use num_traits::Zero;
use serde_json::Value;

fn cache_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("e8-cache")
}

fn e8(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e8")).args(args).env("E8_CACHE_DIR", cache_dir()).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = int(1);
    v
}

#[test]
fn info_reports_dimensions() {
    let o = e8(&["info", "--algebra", "e8"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("e8: dim 248, signature (0,248,0)\n"));
    assert!(stdout(&o).contains("nonzero structure constants (i<j): 24720"));
    assert!(stdout(&e8(&["info", "--algebra", "so16"])).contains("dim 120"));
    assert!(stdout(&e8(&["info", "--algebra", "f4"])).contains("dim 52"));
    assert!(stdout(&e8(&["info", "--algebra", "e8-split"])).contains("signature (128,120,0)"));
}

#[test]
fn bracket_of_basis_elements_matches_the_table() {
    let table = StructureTable::shared(Algebra::E8);
    for (i, j) in [(0, 60), (56, 130), (130, 200), (3, 17)] {
        let x = element_to_json(Algebra::E8, &unit(248, i), Encoding::Object).unwrap().to_string();
        let y = element_to_json(Algebra::E8, &unit(248, j), Encoding::Object).unwrap().to_string();
        let o = e8(&["bracket", "--algebra", "e8", &x, &y]);
        assert!(o.status.success(), "{}", stderr(&o));
        let got: Value = serde_json::from_str(&stdout(&o)).unwrap();
        let mut expected = vec![Rational::zero(); 248];
        for (k, c) in table.basis_bracket(i, j) {
            expected[*k] = c.clone();
        }
        assert_eq!(got, element_to_json(Algebra::E8, &expected, Encoding::Object).unwrap());
    }
}

#[test]
fn bracket_accepts_files_and_coordinate_arrays() {
    let dir = tempfile::tempdir().unwrap();
    let x: Vec<Rational> = (0..52).map(|k| rational::ratio(k as i64 % 5 - 2, 3)).collect();
    let path = dir.path().join("x.json");
    std::fs::write(&path, element_to_json(Algebra::F4, &x, Encoding::Coordinates).unwrap().to_string()).unwrap();
    let p = path.to_str().unwrap();
    let o = e8(&["bracket", "--algebra", "f4", p, p]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 52);
    assert!(arr.iter().all(|c| c == "0"));
}

#[test]
fn bracket_input_errors_exit_2() {
    let o = e8(&["bracket", "--algebra", "e8", "{not json", "[]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("malformed JSON"));

    let mut bad = element_to_json(Algebra::E8, &vec![Rational::zero(); 248], Encoding::Object).unwrap();
    bad["P"][0][1] = Value::from("1");
    let o = e8(&["bracket", "--algebra", "e8", &bad.to_string(), &bad.to_string()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("matrix P is not skew-symmetric"));

    let o = e8(&["bracket", "--algebra", "f4", "[\"1\"]", "[\"1\"]"]);
    assert_eq!(o.status.code(), Some(2));
    let o = e8(&["bracket", "--algebra", "f4", "/nonexistent/file.json", "[]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sampled_verification_is_deterministic() {
    let args = ["verify", "--algebra", "f4", "--check", "jacobi", "--mode", "sample", "--samples", "1000", "--seed", "7"];
    let a = e8(&args);
    let b = e8(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a), "PASS f4 jacobi (sampled n=1000 seed=7): 1000 tested, 0 failures\n");
}

#[test]
fn corrupted_table_fails_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f4.json");
    let o = e8(&["export", "structure-constants", "--algebra", "f4", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let c = rational::parse(v["entries"][40]["c"].as_str().unwrap()).unwrap();
    v["entries"][40]["c"] = Value::from(rational::format(&-c));
    std::fs::write(&path, v.to_string()).unwrap();
    let o = e8(&["verify", "--algebra", "f4", "--check", "jacobi", "--table", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL f4 jacobi"));
    assert!(stdout(&o).contains("first counterexample: Jacobi sum is nonzero at ["));

    let o = e8(&["verify", "--algebra", "e8", "--table", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_json_report() {
    let o = e8(&["verify", "--algebra", "so16", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let checks: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["check"].as_str().unwrap()).collect();
    assert_eq!(checks, ["jacobi", "invariance", "automorphism:block_sign", "simplicity"]);
    assert!(!stdout(&o).contains("elapsed"));
}

#[test]
fn exports() {
    let o = e8(&["export", "structure-constants", "--algebra", "e8"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 248);
    assert_eq!(v["basis"][0], "so8a:e0^e1");
    assert_eq!(v["entries"].as_array().unwrap().len(), 24720);

    let o = e8(&["export", "killing", "--algebra", "f4", "--format", "csv"]);
    let rows: Vec<Vec<String>> =
        stdout(&o).lines().map(|l| l.split(',').map(str::to_string).collect()).collect();
    assert_eq!(rows.len(), 52);
    assert!(rows.iter().all(|r| r.len() == 52));
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            assert_eq!(*v, rows[j][i]);
        }
    }

    let o = e8(&["export", "roots", "--algebra", "e8"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["roots"].as_array().unwrap().len(), 240);
    assert_eq!(v["root_count"], 240);

    let o = e8(&["export", "basis", "--algebra", "so16", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 121);
    assert!(stdout(&o).contains("56,x:e0@e0"));
}

#[test]
fn export_errors_exit_2() {
    let o = e8(&["export", "roots", "--algebra", "f4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = e8(&["export", "basis", "--algebra", "f4", "--out", "/nonexistent/dir/out.json"]);
    assert_eq!(o.status.code(), Some(2));
    let o = e8(&["export", "widgets"]);
    assert_eq!(o.status.code(), Some(2));
    let o = e8(&["verify", "--algebra", "g2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cache_is_reused_and_corrupt_files_are_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_e8"))
            .args(["export", "structure-constants", "--algebra", "so16", "--format", "csv"])
            .env("E8_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);
    assert!(files[0].file_name().unwrap().to_str().unwrap().starts_with("so16-"));
    assert_eq!(run().stdout, first.stdout);
    std::fs::write(&files[0], "garbage").unwrap();
    let again = run();
    assert!(again.status.success());
    assert_eq!(again.stdout, first.stdout);
    assert!(String::from_utf8(again.stderr).unwrap().contains("ignoring unreadable cache file"));
}

#[test]
fn jobs_flag() {
    let o = e8(&["--jobs", "2", "verify", "--algebra", "f4", "--check", "jacobi"]);
    assert!(o.status.success());
    let o = e8(&["verify", "--algebra", "f4", "--check", "simplicity", "--jobs", "1"]);
    assert!(o.status.success());
}
