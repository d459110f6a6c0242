use std::process::{Command, Output};

const VACUUM: &str = r#"{"n":3,"eps":["1/2","-1/2","-3/2"],"delta":"0","lambda0":"3"}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superblocks")).args(args).output().expect("binary runs")
}

fn stdout_json(o: &Output) -> serde_json::Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn classify_and_hw_set() {
    let c = stdout_json(&run(&["classify", "--n", "3", "--k", "1", "--weight", VACUUM]));
    assert_eq!(c["typicality"], "atypical");
    let hw = stdout_json(&run(&["hw-set", "--n", "3", "--k", "1", "--weight", VACUUM]));
    assert_eq!(hw["hw"].as_array().unwrap().len(), 4);
}

#[test]
fn blocks_list_and_chain() {
    let keys = stdout_json(&run(&["blocks", "list", "--n", "3", "--k", "2"]));
    let keys = keys.as_array().unwrap();
    assert_eq!(keys.len(), 3);
    let key = keys[0].to_string();
    let chain = stdout_json(&run(&["blocks", "chain", "--n", "3", "--k", "2", "--key", &key, "--width", "2"]));
    assert_eq!(chain["members"].as_array().unwrap().len(), 5);
    assert_eq!(chain["edges"].as_array().unwrap().len(), 4);
}

#[test]
fn character_csv_and_depth_limit() {
    let o = run(&["character", "--n", "3", "--k", "1", "--weight", VACUUM, "--depth", "2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!o.stdout.is_empty());
    let o = Command::new(env!("CARGO_BIN_EXE_superblocks"))
        .args(["character", "--n", "3", "--k", "1", "--weight", VACUUM, "--depth", "5"])
        .env("SUPERBLOCKS_MAX_DEPTH", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds"));
}

#[test]
fn ds_of_vacuum() {
    let o = run(&["ds", "--n", "3", "--k", "1", "--weight", VACUUM]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stdout).contains('2'));
}

#[test]
fn quiver_writes_dot_and_sidecar() {
    let keys = stdout_json(&run(&["blocks", "list", "--n", "3", "--k", "1"]));
    let key = keys[0].to_string();
    let dir = std::env::temp_dir().join(format!("superblocks-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let side = dir.join("rel.json");
    let o = run(&[
        "quiver", "--n", "3", "--k", "1", "--key", &key, "--width", "1", "--variant", "F1", "--sidecar",
        side.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("digraph"));
    let rel: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&side).unwrap()).unwrap();
    assert_eq!(rel["relations"].as_array().unwrap().len(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "--n", "3", "--k", "1", "--weight", "[]"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "--n", "3", "--k", "2", "--weight", VACUUM]).status.code(), Some(2));
    let help = run(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&help.stdout).contains("Usage"));
}
