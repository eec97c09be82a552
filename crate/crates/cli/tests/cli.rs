use std::path::Path;
use std::process::Command;

fn tool(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tool")).args(args).output().expect("tool runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into(), String::from_utf8_lossy(&out.stderr).into())
}

fn read_json(p: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn passi_ranks_default_passes_with_matching_csv() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = tool(&["run", "passi-ranks", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0, "{stdout}");
    let mut rdr = csv::Reader::from_path(dir.path().join("passi_ranks.csv")).unwrap();
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(headers.iter().collect::<Vec<_>>(), ["kind", "n", "m", "d", "dim_formula", "dim_computed", "match"]);
    let rows: Vec<_> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2 * 4 * 4 * 4);
    assert!(rows.iter().all(|r| &r[6] == "true"));
    let report = read_json(&dir.path().join("passi-ranks.json"));
    assert_eq!(report["seed"], 7);
    for c in report["checks"].as_array().unwrap() {
        for key in ["id", "anchor", "status", "computed", "expected", "cap_stable"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn corrupted_monad_fails_and_names_the_triple() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = tool(&["run", "monad-laws", "--corrupt", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.contains("FAIL  monad-laws/corrupted-control"));
    let report = read_json(&dir.path().join("monad-laws.json"));
    let bad: Vec<_> = report["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert_eq!(bad.len(), 1);
    let v = &bad[0]["computed"]["violations"][0];
    assert_eq!(v["objects"].as_array().unwrap().len(), 4);
    assert_eq!(v["kind"], "Associativity");
}

#[test]
fn configuration_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "max_d = 7\n").unwrap();
    let (code, _, stderr) = tool(&["run", "outer", "--config", cfg.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("max_d"));
    let (code, _, _) = tool(&["run", "outer", "--field", "6", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    let (code, _, _) = tool(&["run", "outer", "--config", "/nonexistent/cfg"]);
    assert_eq!(code, 2);
    let (code, _, _) = tool(&["hall", "--letters", "1", "--multidegree", "1,1"]);
    assert_eq!(code, 2);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for d in [&a, &b] {
        let (code, _, _) = tool(&["run", "outer", "--seed", "11", "--out", d.path().to_str().unwrap()]);
        assert_eq!(code, 0);
    }
    let read = |d: &tempfile::TempDir| std::fs::read(d.path().join("outer.json")).unwrap();
    assert_eq!(read(&a), read(&b));
}

#[test]
fn json_config_and_prime_field() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, r#"{"max_n": 2, "max_m": 2, "max_d": 2, "field": 2}"#).unwrap();
    let (code, stdout, _) = tool(&["run", "abelianization", "--config", cfg.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0, "{stdout}");
    let report = read_json(&dir.path().join("abelianization.json"));
    assert_eq!(report["config"]["field"], 2);
    assert_eq!(report["config"]["magnus_D"], 3);
}

#[test]
fn genealogy_lists_its_edges() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = tool(&["run", "genealogy", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    let report = read_json(&dir.path().join("genealogy.json"));
    let anchors: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["anchor"].as_str().unwrap()).collect();
    for edge in ["𝒫^{d+1} ≫ 𝒫^d", "L_gr ≫ A_Lie as the primitivity eigenmonad", "L_fr ≫ L_𝔖 through the vanishing cells"] {
        assert!(anchors.contains(&edge), "{edge}");
    }
}

#[test]
fn table_and_hall_commands() {
    let (code, stdout, _) = tool(&["table", "passi", "--kind", "gr", "--max-n", "2", "--max-m", "2", "--max-d", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().any(|l| l == "gr,2,2,2,17,17,true"));
    let (code, stdout, _) = tool(&["hall", "--letters", "3", "--multidegree", "1,1,1"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("multidegree [1, 1, 1]: 2 Hall trees"));
}
