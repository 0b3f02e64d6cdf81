use std::process::{Command, Output};

use serde_json::Value;

fn stext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stext"))
        .args(args)
        .env_remove("STEXT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn ext_example_table() {
    let out = stext(&["ext", "--type", "A2", "--I", "0", "--J", "1", "--ring", "q=3,d=5", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["table"], serde_json::json!({"2": {"rank": 1, "torsion": []}}));
    assert_eq!(v["query"]["series"], "A");
    assert_eq!(v["query"]["I"], serde_json::json!([0]));
    assert_eq!(v["query"]["ring"], "q=3,d=5");
    assert_eq!(v["method"], "both");
    assert!(v.get("complexes").is_none());
}

#[test]
fn check_ring_reports_without_failing() {
    let out = stext(&["check-ring", "--type", "A1", "--ring", "q=3,d=2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["report"]["bon"], false);
    assert_eq!(v["report"]["witness"]["bon"]["r"], 1);
    assert_eq!(v["report"]["witness"]["bon"]["residue"], "0");
}

#[test]
fn verify_b2_all_pairs() {
    let out = stext(&["verify", "--type", "B2", "--ring", "Q", "--all-pairs"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["pair_count"], 16);
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_on_failing_ring_exits_three() {
    let out = stext(&["verify", "--type", "A1", "--ring", "q=3,d=2", "--all-pairs"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("ring assumption"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["ext", "--type", "A2", "--bogus"],
        vec!["ext", "--type", "Z2"],
        vec!["ext", "--type", "A2", "--I", "5"],
        vec!["ext", "--type", "A2", "--ring", "q=6,d=5"],
        vec!["ext", "--type", "A2", "--ring", "q=3,d=1"],
        vec!["ext", "--type", "A2", "--dump-complex", "--format", "tsv"],
        vec!["verify", "--type", "A2"],
        vec!["cache", "clear"],
    ] {
        let out = stext(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn tsv_tables() {
    let out = stext(&["ext-vi", "--type", "A2", "--I", "0", "--J", "1", "--format", "tsv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "degree\trank\ttorsion\n1\t1\t\n2\t1\t\n");
    let out = stext(&["ext-vi", "--type", "A2", "--I", "", "--J", "1", "--format", "tsv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "degree\trank\ttorsion\n");
}

#[test]
fn cohomology_variants() {
    let v = json(&stext(&["cohomology", "--type", "A1", "--I", ""]));
    assert_eq!(v["table"], serde_json::json!({"1": {"rank": 1, "torsion": []}}));
    let v = json(&stext(&["cohomology", "--type", "A2", "--I", "", "--rep", "induced"]));
    assert_eq!(v["table"]["1"]["rank"], 2);
    let v = json(&stext(&["cohomology", "--type", "A2", "--rep", "trivial", "--center-rank", "2"]));
    assert_eq!(v["table"]["1"]["rank"], 2);
    assert_eq!(v["query"]["I"], Value::Null);
}

#[test]
fn dump_complex_embeds_rows() {
    let v = json(&stext(&["ext", "--type", "A2", "--I", "", "--J", "0,1", "--dump-complex"]));
    assert_eq!(v["complexes"]["path"], "steinberg");
    assert!(!v["complexes"]["rows"].as_array().unwrap().is_empty());
}

#[test]
fn outside_hypotheses_is_labelled() {
    let v = json(&stext(&["ext", "--type", "A1", "--I", "", "--J", "0", "--ring", "q=3,d=2"]));
    assert_eq!(v["hypotheses"], "outside ring hypotheses");
    assert_eq!(v["table"]["1"]["rank"], 1);
}

#[test]
fn ext_induced_via_strata_with_dump() {
    let out = stext(&[
        "ext-induced", "--type", "A2", "--I", "0,1", "--J", "", "--ring", "q=3,d=5", "--dump-complex",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["table"]["1"]["rank"], 2);
    let strata = v["complexes"].as_array().unwrap();
    assert_eq!(strata.len(), 1);
    assert_eq!(strata[0]["survives"], true);
}

#[test]
fn strata_on_failing_ring_exits_three() {
    let out = stext(&["ext-induced", "--type", "B2", "--I", "", "--J", "", "--ring", "q=3,d=5", "--method", "both"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn dcosets_list_representatives() {
    let v = json(&stext(&["dcosets", "--type", "A2", "--I", "0", "--J", "1", "--ring", "q=3,d=5"]));
    assert_eq!(v["count"], 2);
    let reps = v["representatives"].as_array().unwrap();
    assert_eq!(reps[0]["length"], 0);
    assert_eq!(reps[0]["certificate"]["branch"], "delta");
    let v = json(&stext(&["dcosets", "--type", "A2", "--I", "0,1", "--J", "0"]));
    assert_eq!(v["representatives"][0]["certificate"], "survives");
}

#[test]
fn zelevinsky_outputs() {
    let v = json(&stext(&["zelevinsky", "--k", "3", "--I", "0", "--J", "1", "--permutation", "1,0,2"]));
    assert_eq!(v["orientation_I"], "(forward, backward)");
    assert_eq!(v["orientation_permutation"], "(backward, forward)");
    assert_eq!(v["table"]["2"]["rank"], 1);
    assert_eq!(v["table"]["3"]["rank"], 1);
    assert_eq!(stext(&["zelevinsky", "--k", "3", "--permutation", "0,0,1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_across_parallelism() {
    let a = stext(&["verify", "--type", "A3", "--ring", "q=2,d=13", "--all-pairs"]);
    let b = stext(&["verify", "--type", "A3", "--ring", "q=2,d=13", "--all-pairs", "--parallel", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = stext(&["ext", "--type", "B3", "--I", "0", "--J", "1,2", "--dump-complex"]);
    let d = stext(&["ext", "--type", "B3", "--I", "0", "--J", "1,2", "--dump-complex"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn cache_build_and_clear() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let out = stext(&["cache", "build", "--type", "B3", "--cache-dir", path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let cached = stext(&["dcosets", "--type", "B3", "--I", "0", "--J", "2", "--cache-dir", path]);
    let fresh = stext(&["dcosets", "--type", "B3", "--I", "0", "--J", "2"]);
    assert_eq!(cached.stdout, fresh.stdout);
    let out = Command::new(env!("CARGO_BIN_EXE_stext"))
        .args(["cache", "clear"])
        .env("STEXT_CACHE_DIR", path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn help_documents_labeling_and_exit_codes() {
    let out = stext(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("G_2: 0 <= 1"));
    assert!(text.contains("3 ring assumption violated"));
}

#[test]
fn verify_single_pair() {
    let out = stext(&["verify", "--type", "A2", "--I", "", "--J", "0,1", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("I\tJ\tcheck\tpassed\tdetail\n"));
    assert!(text.lines().skip(1).all(|l| l.starts_with("{}\t{0,1}\t") && l.contains("\ttrue\t")));
    assert_eq!(stext(&["verify", "--type", "A2", "--I", "0"]).status.code(), Some(2));
    assert_eq!(stext(&["verify", "--type", "A2", "--I", "0", "--J", "1", "--all-pairs"]).status.code(), Some(2));
}
