use std::path::PathBuf;
use std::process::{Command, Output};

use artin_core::garside::{delta_squared_factored_word, delta_word_closed_form};
use artin_core::homs::{make_beta, make_chi, make_pi, HomSpec};
use artin_core::CoxType;
use tempfile::TempDir;

fn artin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_spec(dir: &TempDir, name: &str, h: &HomSpec) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, h.to_interchange()).unwrap();
    path
}

#[test]
fn nf_examples() {
    let o = artin(&["nf", "A2", "s1 s2 s1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "D^1 | \n");
    assert_eq!(stdout(&artin(&["nf", "D4", "t1 t1^-1"])), "D^0 | \n");
    let d5 = CoxType::d(5).unwrap();
    let sq = delta_word_closed_form(d5).pow(2).to_string();
    assert_eq!(stdout(&artin(&["nf", "D5", &sq])), "D^2 | \n");
    assert_eq!(
        stdout(&artin(&["nf", "--group", "A3", "s1^-1"])),
        "D^-1 | s1 s2 s1 s3 s2\n"
    );
}

#[test]
fn equal_examples() {
    let a4 = CoxType::a(4).unwrap();
    let lhs = delta_word_closed_form(a4).pow(2).to_string();
    let rhs = delta_squared_factored_word(4).unwrap().to_string();
    let o = artin(&["equal", "A4", &lhs, &rhs]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "equal\n"));
    let o = artin(&["equal", "D5", "t4", "t5"]);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(1), "distinct\n")
    );
    let o = artin(&["equal", "--group", "D5", "t1 t2^-1", "t1 t2^-1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn input_errors_exit_2() {
    let o = artin(&["nf", "D4", "t1 t9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("\"t9\""), "{}", stderr(&o));
    assert_eq!(artin(&["nf", "E6", "t1"]).status.code(), Some(2));
    assert_eq!(artin(&["equal", "D4", "t1"]).status.code(), Some(2));
    let o = artin(&["--max-len", "3", "nf", "D4", "t1 t2 t3 t4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--max-len"));
    assert_eq!(
        artin(&["sweep", "4", "5", "1..x", "0..0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        artin(&["verify", "/nonexistent/spec.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn apply_and_verify() {
    let dir = TempDir::new().unwrap();
    let pi = write_spec(&dir, "pi.json", &make_pi(6).unwrap());
    let o = artin(&["apply", pi.to_str().unwrap(), "t6 t1^-1"]);
    assert_eq!(stdout(&o), "s5 s1^-1\n");

    let beta = write_spec(&dir, "beta.json", &make_beta(6, 1, -1).unwrap());
    let o = artin(&["verify", beta.to_str().unwrap()]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "pass\n"));

    let pi = make_pi(6).unwrap();
    let mut images = pi.images().to_vec();
    images[5] = images[0].clone();
    let broken = HomSpec::new(pi.source(), pi.target(), images, "broken").unwrap();
    let path = write_spec(&dir, "broken.json", &broken);
    let o = artin(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("fail: relation between"));

    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{\"source\": \"D4\"}").unwrap();
    assert_eq!(
        artin(&["verify", junk.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn lift_examples() {
    let dir = TempDir::new().unwrap();
    let chi = make_chi(5).unwrap();
    let path = write_spec(&dir, "chi.json", &chi);
    let o = artin(&["lift", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let lifted = HomSpec::from_interchange(&stdout(&o)).unwrap();
    assert_eq!(lifted.images(), chi.images());
    assert_eq!(stderr(&o), "corrections: 0 0 0 0 0\n");

    let d5 = chi.source();
    let mut images = chi.images().to_vec();
    images[2] = images[2].pow(2);
    let broken = HomSpec::new(d5, d5, images, "broken").unwrap();
    let path = write_spec(&dir, "broken.json", &broken);
    let o = artin(&["lift", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("relation"), "{}", stderr(&o));

    let pi = write_spec(&dir, "pi.json", &make_pi(5).unwrap());
    assert_eq!(
        artin(&["lift", pi.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn sweep_passes_and_is_deterministic() {
    let o = artin(&["sweep", "4", "7", "-1..1", "-1..1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));

    let args = [
        "sweep",
        "4",
        "5",
        "0..1",
        "-1..0",
        "--samples",
        "10",
        "--trials",
        "10",
        "--json",
    ];
    let (a, b) = (artin(&args), artin(&args));
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let families = report["families"].as_array().unwrap();
    assert_eq!(families.len(), 10);
    assert!(families.iter().all(|f| f["failed"] == 0));
}
