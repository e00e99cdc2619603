use std::process::{Command, Output};

use partcat::engine::ClosureDocument;
use partcat::{classify, ClassifyOptions, Named, Partition};

fn partcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partcat"))
        .args(args)
        .output()
        .expect("run partcat")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = partcat(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn op_examples() {
    assert_eq!(ok(&["op", "compose", "aa;", ";aa"]), "empty, loops=1\n");
    assert_eq!(ok(&["op", "tensor", ";aa", ";aa"]), ";aabb\n");
    // `baa;aab` printed with canonical labels
    let r = ok(&["op", "reflect", "aab;baa"]);
    assert_eq!(Partition::parse(r.trim()).unwrap(), Partition::parse("baa;aab").unwrap());
    assert_eq!(ok(&["op", "involute", "ab;ba"]), "ab;ba\n");
    assert_eq!(ok(&["op", "rotate", "a;a", "--corner", "bottom-left"]), "aa;\n");
}

#[test]
fn word_examples() {
    let w = ok(&["word", "wdepth", "abccddbaeffghhgeabba"]);
    assert_eq!(w.lines().next(), Some("2"));
    assert!(w.contains("S_alpha"));
    assert_eq!(ok(&["word", "wdepth", "abccddbaaeebccbaijji"]).lines().next(), Some("3"));
    assert_eq!(ok(&["word", "sdl", "aaabbbba"]), "abba\n");
    assert_eq!(ok(&["word", "dyck", "aa"]), "DU\n");
    assert_eq!(ok(&["word", "doubling", "abba"]).lines().next(), Some("0 violations"));
    assert_ne!(ok(&["word", "doubling", "abab"]).lines().next(), Some("0 violations"));
}

#[test]
fn length_cap_needs_override() {
    let long = "ab".repeat(13);
    assert_eq!(partcat(&["word", "wdepth", &long]).status.code(), Some(2));
    let out = ok(&["word", "wdepth", &long, "--length-cap-override", "30"]);
    assert_eq!(out.lines().next(), Some("2"));
}

#[test]
fn classify_examples_and_expect_contract() {
    let out = ok(&["classify", "--gen", "fatcross", "--bound", "10"]);
    assert!(out.starts_with("class: PiSeries(2)"), "{out}");
    let out = ok(&["classify", "--gen", "crossing", "--bound", "8", "--expect", "group-orthogonal"]);
    assert!(out.contains("P2"));
    ok(&["classify", "--gen", "four", "--bound", "8", "--expect", "PiSeries(1)"]);
    let wrong = partcat(&["classify", "--gen", "four", "--bound", "8", "--expect", "PiSeries(2)"]);
    assert_eq!(wrong.status.code(), Some(1));
}

#[test]
fn classify_is_a_thin_adapter() {
    let cli = ok(&["--format", "structured", "classify", "--gen", "fatcross", "--bound", "8"]);
    let lib = classify(&[Named::FatCrossing.partition().unwrap()], ClassifyOptions::new(8)).unwrap();
    assert_eq!(cli, lib.to_json());
    let again = ok(&["--format", "structured", "classify", "--gen", "fatcross", "--bound", "8"]);
    assert_eq!(cli, again);
}

#[test]
fn member_verdicts() {
    let out = ok(&["member", "--gen", "h3", "--bound", "10", "--query", "pairpositioner"]);
    assert!(out.starts_with("InClosure"), "{out}");
    let out = ok(&["member", "--gen", "pi2", "--bound", "10", "--query", "doublesingleton"]);
    assert!(out.starts_with("ExcludedByCertificate"), "{out}");
}

#[test]
fn generate_document_round_trips() {
    let text = ok(&["--format", "structured", "generate", "--gen", "four", "--bound", "8", "--derivations"]);
    let doc = ClosureDocument::from_json(&text).unwrap();
    let c = doc.rebuild().unwrap();
    assert!(c.contains(&Named::FourBlock.partition().unwrap()));
    assert_eq!(doc.to_json(), text);
    let summary = ok(&["generate", "--gen", "four", "--bound", "8"]);
    assert!(summary.contains("orbits"));
}

#[test]
fn rep_exit_codes() {
    let out = ok(&["rep", "sigma-k", "--k", "2", "--depth", "3", "--expect-violation"]);
    assert!(out.contains("violation at l=3"), "{out}");
    assert_eq!(partcat(&["rep", "sigma-k", "--k", "2", "--depth", "3"]).status.code(), Some(1));
    let out = ok(&["rep", "sigma-k", "--k", "3", "--depth", "3"]);
    assert!(out.contains("hold"));
    assert_eq!(
        partcat(&["rep", "sigma-k", "--k", "3", "--depth", "3", "--expect-violation"]).status.code(),
        Some(1)
    );
    let out = ok(&["rep", "sigma-inf"]);
    assert!(out.contains("do not commute"));
    let doc: serde_json::Value = serde_json::from_str(&ok(&["rep", "export", "--k", "2"])).unwrap();
    assert_eq!(doc["n"], 5);
}

#[test]
fn verify_suites() {
    let out = ok(&["verify", "lemma2.1"]);
    assert!(out.contains("3/3 pass"), "{out}");
    let out = ok(&["verify", "doubling"]);
    assert!(out.contains("0 violations"), "{out}");
    let out = ok(&["verify", "sigma"]);
    assert!(out.contains("5/5 pass"), "{out}");
    assert_eq!(partcat(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(partcat(&[]).status.code(), Some(2));
    assert_eq!(partcat(&["op", "compose", "a;", "a"]).status.code(), Some(2));
    assert_eq!(partcat(&["op", "compose", "ab;", ";a"]).status.code(), Some(2));
    assert_eq!(partcat(&["classify", "--gen", "pi3", "--bound", "8"]).status.code(), Some(2));
}

#[test]
fn render_and_config() {
    let svg = ok(&["render", "fatcross"]);
    assert!(svg.starts_with("<svg") && svg.matches("<circle").count() == 8);
    let svg = ok(&["render", "abba", "--dyck"]);
    assert!(svg.contains("polyline"));
    let svg = ok(&["--format", "svg", "op", "tensor", "a;a", ";aa"]);
    assert!(svg.starts_with("<svg"));
    let cfg = ok(&["config", "show"]);
    assert!(cfg.contains("bound = 12"));
    let cfg: serde_json::Value = serde_json::from_str(&ok(&["--format", "json", "config", "show"])).unwrap();
    assert_eq!(cfg["mode"], "full");
}
