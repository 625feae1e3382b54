use std::fs;

use serde_json::Value;
use sqlab::catalog::NamedGraph;
use sqlab::cli::{run_with, EXIT_FAIL, EXIT_INVALID, EXIT_OK};
use sqlab::embed::verify_certificate;
use sqlab::verify::{thm_1_1_holds, thm_1_4_holds};
use sqlab::{graph6, Certificate, Graph};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut input: &[u8] = b"";
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("sqlab").chain(args.iter().copied());
    let code = run_with(argv, &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn check_report_schema(v: &Value) {
    let obj = v.as_object().expect("report is an object");
    for key in [
        "claim",
        "n",
        "status",
        "instances_checked",
        "counterexamples",
        "witnesses",
        "elapsed_ms",
        "shards",
    ] {
        assert!(obj.contains_key(key), "missing {key}");
    }
    assert!(v["claim"].is_string());
    assert!(v["n"].is_u64() || v["n"].is_null());
    assert!(matches!(v["status"].as_str(), Some("PASS" | "FAIL")));
    assert!(v["instances_checked"].is_u64());
    assert!(v["counterexamples"]
        .as_array()
        .unwrap()
        .iter()
        .all(|g| g.is_string()));
    assert!(v["witnesses"].is_object());
    assert!(v["elapsed_ms"].is_u64());
    assert!(v["shards"].is_u64());
    assert_eq!(
        v["status"] == "PASS",
        v["counterexamples"].as_array().unwrap().is_empty()
    );
}

#[test]
fn reports_follow_the_schema() {
    let dir = tempfile::tempdir().unwrap();
    for (claim, n) in [
        ("thm1_1", "8"),
        ("cor1_3", "7"),
        ("thm1_4", "7"),
        ("prop2_1", "9"),
        ("lem3_1", "5"),
        ("lem3_2", "5"),
        ("ore", "5"),
        ("figs", "0"),
    ] {
        let path = dir.path().join(format!("{claim}.json"));
        let (code, out, _) = call(&[
            "verify",
            "--claim",
            claim,
            "--n",
            n,
            "--json",
            path.to_str().unwrap(),
            "--shards",
            "3",
        ]);
        assert_eq!(code, EXIT_OK, "{out}");
        let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        check_report_schema(&v);
        assert_eq!(v["shards"], 3);
    }
}

#[test]
fn emitted_certificates_revalidate() {
    let dir = tempfile::tempdir().unwrap();
    let cert_path = dir.path().join("cert.json");
    let dot_path = dir.path().join("cert.dot");
    let (code, _, _) = call(&[
        "pack",
        "--n",
        "11",
        "--guest",
        "k33",
        "--json",
        cert_path.to_str().unwrap(),
        "--dot",
        dot_path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let cert = Certificate::from_json(&fs::read_to_string(&cert_path).unwrap()).unwrap();
    let host = Graph::path_square(11).unwrap().complement();
    assert!(verify_certificate(
        &cert,
        Some(&NamedGraph::K33.graph().unwrap()),
        &host
    ));
    let dot = fs::read_to_string(&dot_path).unwrap();
    assert!(dot.starts_with("graph") && dot.contains("color=red"));

    let g = Graph::complete(8).unwrap().remove_edge(0, 1).unwrap();
    let ord_path = dir.path().join("ord.json");
    let (code, _, _) = call(&[
        "contains",
        "--graph6",
        &g.to_string(),
        "--json",
        ord_path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let cert = Certificate::from_json(&fs::read_to_string(&ord_path).unwrap()).unwrap();
    assert!(verify_certificate(&cert, None, &g));
}

#[test]
fn figures_write_dot_files() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = call(&["figures", "--dot-dir", dir.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("n=13 K5: packs"));
    assert!(out.contains("n=9 K4: NONE"));
    assert!(fs::read_dir(dir.path()).unwrap().count() > 30);
}

#[test]
fn catalog_dump_lists_families() {
    let (code, out, _) = call(&["catalog", "--dump", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    let fams = v["families"].as_array().unwrap();
    assert_eq!(fams[0]["starred"], serde_json::json!(["k3", "s4+k2", "s5"]));
    assert_eq!(call(&["catalog"]).0, EXIT_INVALID);
}

#[test]
fn single_instance_checks_work_from_graph6() {
    for h in sqlab::enumerate::sparse_graphs(8, 6).unwrap() {
        let parsed = graph6::decode(&h.to_string()).unwrap();
        assert!(thm_1_1_holds(&parsed, 8).unwrap());
        assert!(thm_1_4_holds(&parsed.complement()).unwrap());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        call(&["verify", "--claim", "thm1_4", "--n", "12"]).0,
        EXIT_INVALID
    );
    assert_eq!(call(&["verify", "--claim", "thm1_1"]).0, EXIT_INVALID);
    assert_eq!(
        call(&["mu-cmp", "--graph6", "Bw", "--k", "x"]).0,
        EXIT_INVALID
    );
    assert_eq!(call(&["--help"]).0, EXIT_OK);
    assert_ne!(EXIT_FAIL, EXIT_OK);
    let (code, out, _) = call(&["mu", "--graph6", &Graph::complete(5).unwrap().to_string()]);
    assert_eq!(code, EXIT_OK);
    assert!((out.trim().parse::<f64>().unwrap() - 4.0).abs() < 1e-9);
}
