use std::process::{Command, Output};

fn hyperembed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperembed"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("hyperembed-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn gen_folded_json() {
    let o = hyperembed(&["gen", "--family", "folded", "--n", "3", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["edges"].as_array().unwrap().len(), 16);
}

#[test]
fn gen_wheel_dot_has_hub() {
    let o = hyperembed(&[
        "gen", "--family", "wheel", "--order", "8", "--format", "dot",
    ]);
    let out = stdout(&o);
    assert!(out.starts_with("graph"));
    assert!(out.contains("0 -- 7"));
}

#[test]
fn gen_multipartite_edge_count() {
    let o = hyperembed(&["gen", "--family", "multipartite", "--parts", "4,4,4,4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 96);
}

#[test]
fn outputs_are_byte_identical() {
    for args in [
        &[
            "gen",
            "--family",
            "clique-product",
            "--parts",
            "2,4",
            "--format",
            "dot",
        ][..],
        &["embed", "wheel", "--n", "4"],
        &[
            "verify", "--scope", "theorem3", "--max-n", "3", "--seed", "11",
        ],
        &["table1", "--n", "6", "--p", "3", "--format", "json"],
    ] {
        assert_eq!(hyperembed(args).stdout, hyperembed(args).stdout, "{args:?}");
    }
}

#[test]
fn embed_then_eval() {
    let o = hyperembed(&["embed", "multipartite", "--n", "4", "--p", "2"]);
    assert!(o.status.success());
    let path = scratch("k4444.json", &stdout(&o));
    let o = hyperembed(&["eval", "--embedding", path.to_str().unwrap(), "--full"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["wirelength"], 192);
    assert_eq!(v["dilation"], 3);
    assert_eq!(v["per_edge_dilation"].as_array().unwrap().len(), 96);
}

#[test]
fn antimatching_dot_export() {
    let g = stdout(&hyperembed(&[
        "gen",
        "--family",
        "multipartite",
        "--parts",
        "4,4,4,4",
    ]));
    let path = scratch("k.json", &g);
    let o = hyperembed(&[
        "embed",
        "antimatching",
        "--graph",
        path.to_str().unwrap(),
        "--format",
        "dot",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\\n0000"));
}

#[test]
fn bounds_and_oracle_on_descriptor_file() {
    let path = scratch("w8.json", r#"{"family":"wheel","params":[8]}"#);
    let p = path.to_str().unwrap();
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&hyperembed(&["bounds", "--graph", p]))).unwrap();
    assert_eq!(v["dilation_ub"], 3);
    assert_eq!(v["bw_provenance"]["kind"], "oracle");
    let v: serde_json::Value = serde_json::from_str(&stdout(&hyperembed(&[
        "oracle",
        "wirelength",
        "--graph",
        p,
    ])))
    .unwrap();
    assert_eq!(v["value"], 20);
}

#[test]
fn table1_text() {
    let o = hyperembed(&["table1", "--n", "3", "--p", "1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("FQ_3"));
    assert!(!out.contains("MISMATCH"));
}

#[test]
fn verify_smallest_passes() {
    let o = hyperembed(&["verify", "--scope", "all", "--max-n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["failed"], 0);
}

#[test]
fn exit_codes() {
    assert_eq!(
        hyperembed(&["gen", "--family", "wheel", "--order", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hyperembed(&["verify", "--scope", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(hyperembed(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        hyperembed(&["eval", "--embedding", "/nonexistent/e.json"])
            .status
            .code(),
        Some(3)
    );
}
