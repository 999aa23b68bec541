use std::path::Path;

use kcat::Field;
use kcat_cli::app::{load, run, Outcome};
use kcat_cli::{parse, run_suite};

fn kcat(args: &[&str]) -> Outcome {
    run(std::iter::once("kcat").chain(args.iter().copied()))
}

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).display().to_string()
}

#[test]
fn quasi_suite_on_the_z2_associator_exits_zero() {
    let o = kcat(&["check", "--suite", "quasi-bimonad", "zoo:z2_quasi(-1)"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("PASS 3-coc. cond."));
    assert!(o.stdout.contains("1 passed, 0 failed"));
}

#[test]
fn corrupted_file_exits_one_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let f = p(dir.path(), "q.kc");
    assert_eq!(kcat(&["zoo", "emit", "z2_quasi(-1)", "-o", &f]).code, 0);
    let text = std::fs::read_to_string(&f).unwrap();
    let marker = "cell z2_quasi(-1).phi I -> F*F*F\n";
    let at = text.find(marker).unwrap() + marker.len();
    let line_end = at + text[at..].find('\n').unwrap();
    let line = &text[at..line_end];
    let (ix, v) = line.rsplit_once(' ').unwrap();
    let bad = format!("{ix} {}", if v == "1/4" { "1/2" } else { "1/4" });
    std::fs::write(&f, format!("{}{bad}{}", &text[..at], &text[line_end..])).unwrap();
    let o = kcat(&["check", &f, "--format", "text"]);
    assert_eq!(o.code, 1, "{}", o.stdout);
    assert!(o.stdout.contains("FAIL 3-coc. cond."));
    assert!(o.stdout.contains("lhs"));
    let o = kcat(&["check", &f, "--format", "structured"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let failing: Vec<&serde_json::Value> = v["results"][0]["axioms"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|a| a["passed"] == false)
        .collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().any(|a| a["witness"]["kind"] == "entry"));
}

#[test]
fn empty_selector_auto_detects() {
    let doc = load("zoo:h4-coquasi", None).unwrap();
    let a = run_suite(&doc, "", None).unwrap().without_timings();
    let b = run_suite(&doc, "auto", None).unwrap().without_timings();
    let c = run_suite(&doc, "coquasi-bimonad", None).unwrap().without_timings();
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert_eq!(a.results[0].suite, "coquasi-bimonad");
}

#[test]
fn crossed_product_then_check_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let f = p(dir.path(), "smash.kc");
    let o = kcat(&["derive", "crossed-product", "zoo:h4-sweedler", "--field", "fp:1000003", "-o", &f]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let doc = parse(Path::new(&f)).unwrap();
    assert_eq!(doc.field, Field::Fp(1000003));
    assert!(doc.notes[0].starts_with("crossed-product(h4-sweedler)"));
    assert_eq!(doc.entries[0].item.kind(), "monad");
    let o = kcat(&["check", &f]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.contains("PASS assoc"));
}

#[test]
fn alpha_then_pentagon_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let f = p(dir.path(), "alpha.kc");
    let o = kcat(&["derive", "alpha", "--quasi", "zoo:z2_quasi(-1)", "-o", &f]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let o = kcat(&["check", "--suite", "pentagon", &f]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.contains("PASS pentagon alfa"));
    let o = kcat(&["check", &f, "--objects", "F,F*F"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("missing family entry"));
    let o = kcat(&["derive", "alpha", "--quasi", "zoo:z2_quasi(-1)", "--objects", "F,F*F", "-o", &f]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    for objs in ["F,F*F", "F*F", "F"] {
        let o = kcat(&["check", &f, "--objects", objs]);
        assert_eq!(o.code, 0, "{objs}: {}", o.stdout);
    }
    let f2 = p(dir.path(), "alpha2.kc");
    let o = kcat(&["derive", "alpha", "zoo:z2_coquasi(-1)", "--objects", "I,F", "-o", &f2]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(kcat(&["check", &f2]).code, 0);
}

#[test]
fn missing_inverse_fails_before_any_output() {
    let dir = tempfile::tempdir().unwrap();
    let f = p(dir.path(), "q.kc");
    let out = p(dir.path(), "out.kc");
    let text = kcat(&["zoo", "emit", "z2_quasi(-1)"]).stdout;
    let stripped: String = text.lines().filter(|l| !l.starts_with("  phi_inv")).map(|l| format!("{l}\n")).collect();
    std::fs::write(&f, stripped).unwrap();
    let o = kcat(&["derive", "alpha", "--quasi", &f, "-o", &out]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("missing convolution inverse"), "{}", o.stderr);
    assert!(o.stdout.is_empty());
    assert!(!Path::new(&out).exists());
    let o = kcat(&["derive", "alpha", "--quasi", &f, "--verify-pre", "false"]);
    assert_eq!(o.code, 2);
    assert!(o.stdout.is_empty());
}

#[test]
fn failed_precondition_exits_one_before_output() {
    let dir = tempfile::tempdir().unwrap();
    let f = p(dir.path(), "d.kc");
    let text = kcat(&["zoo", "emit", "h4-sweedler"]).stdout;
    let marker = "cell h4-sweedler.mu_m F*F -> F*B\n  ";
    let at = text.find(marker).unwrap() + marker.len();
    let end = at + text[at..].find('\n').unwrap();
    let (ix, _) = text[at..end].rsplit_once(' ').unwrap();
    std::fs::write(&f, format!("{}{ix} 3{}", &text[..at], &text[end..])).unwrap();
    let o = kcat(&["derive", "crossed-product", &f]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.contains("precondition `sweedler-datum` failed"), "{}", o.stderr);
    let o = kcat(&["derive", "crossed-product", &f, "--verify-pre", "false"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("field q\n"));
}

#[test]
fn act_and_mirror_pipelines_check() {
    let dir = tempfile::tempdir().unwrap();
    let a = p(dir.path(), "act.kc");
    let o = kcat(&["act", "zoo:conj_yd(S3)", "zoo:self_relative(kS3)", "-o", &a]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(kcat(&["check", "--suite", "relative", &a]).code, 0);
    let m = p(dir.path(), "mirror.kc");
    assert_eq!(kcat(&["derive", "mirror", &a, "-o", &m]).code, 0);
    let o = kcat(&["check", &m]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let mm = kcat(&["derive", "mirror", &m]).stdout;
    let mm = kcat_cli::parse_str(&mm).unwrap();
    let orig = parse(Path::new(&a)).unwrap();
    assert_eq!(mm.entries[0].item, orig.entries[0].item);
    let t = p(dir.path(), "yy.kc");
    assert_eq!(kcat(&["derive", "tensor-yd", "zoo:conj_yd(Z3)", "zoo:conj_yd(Z3)", "-o", &t]).code, 0);
    assert_eq!(kcat(&["check", "--suite", "yd-strong", &t]).code, 0);
}

#[test]
fn input_errors_exit_two() {
    for args in [
        vec!["check", "zoo:nope"],
        vec!["check", "--suite", "pentagon", "zoo:h4"],
        vec!["check", "--suite", "frobenius", "zoo:h4"],
        vec!["check", "--field", "fp:8", "zoo:h4"],
        vec!["check", "/nonexistent/file.kc"],
        vec!["derive", "alpha", "zoo:h4"],
        vec!["derive", "frobenius", "zoo:h4"],
        vec!["frobenius"],
    ] {
        let o = kcat(&args);
        assert_eq!(o.code, 2, "{args:?}: {}", o.stdout);
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn parse_errors_are_reported_with_their_location() {
    let dir = tempfile::tempdir().unwrap();
    let f = p(dir.path(), "bad.kc");
    std::fs::write(&f, "field q\nspace A 1\ncell c A -> A\n  (0) (0) 1/0\n").unwrap();
    let o = kcat(&["check", &f]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("4:11: parse error"), "{}", o.stderr);
}

#[test]
fn zoo_listing_and_emission() {
    let o = kcat(&["zoo", "list"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.lines().count(), kcat::zoo::names().len());
    let a = kcat(&["zoo", "emit", "h4"]).stdout;
    let b = kcat(&["zoo", "emit", "h4"]).stdout;
    assert_eq!(a, b);
    assert_eq!(kcat_cli::emit(&kcat_cli::parse_str(&a).unwrap()).unwrap(), a);
}

#[test]
fn report_runs_every_applicable_suite() {
    let o = kcat(&["report", "zoo:conj_yd(S3)", "--no-timings"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let suites: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["suite"].as_str().unwrap()).collect();
    assert_eq!(suites, ["yd-strong", "monad", "comonad", "bimonad", "yd"]);
    assert!(!o.stdout.contains("elapsed_us"));
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let doc = load("zoo:h4-coquasi", None).unwrap();
    let mut d2 = load("zoo:z2_quasi(-1)", None).unwrap();
    d2.merge(load("zoo:conj_yd(S3)", None).unwrap()).unwrap();
    let mut all = doc.clone();
    all.merge(d2).unwrap();
    let with = |n: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .unwrap()
            .install(|| run_suite(&all, "auto", None).unwrap().without_timings())
    };
    let one = with(1);
    assert_eq!(one, with(4));
    assert_eq!(one.to_json(), with(3).to_json());
}
