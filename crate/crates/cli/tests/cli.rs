use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syllogic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_syllogic"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn prove_syllogism_shorthand() {
    let o = run(&["prove", "--system", "syll", "A(M,P); A(S,M) / A(S,P)"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("S -> P"));
    assert!(stdout(&o).contains("[premise 0]"));
}

#[test]
fn prove_linear_context_is_consumed() {
    let o = run(&["prove", "--system", "rll", "A, A -o B |- A * B"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "unprovable");
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(code(&run(&["prove", "--system", "syll", "A -> <-"])), 2);
    assert_eq!(
        code(&run(&["prove", "--system", "sill", "A -> B |= A -> B"])),
        2
    );
    assert_eq!(code(&run(&["prove", "--system", "rll", "A |- "])), 2);
    assert_eq!(code(&run(&["net", "A -o"])), 2);
    assert_eq!(code(&run(&["tables", "--only", "nothing"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn ill_formed_for_system_is_a_usage_error() {
    // complemented subjects need the new diagram rules
    let o = run(&["prove", "--system", "syll+", "A -> * -> B |= A -> * -> B"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn unprovable_diagram_reports_bullet_mismatch() {
    let o = run(&[
        "prove",
        "--system",
        "syll+",
        "--budget",
        "0",
        "M -> P, S -> M |= S <- * -> P",
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("bullet count mismatch"));
}

#[test]
fn json_proofs_replay_through_check() {
    for (system, seq) in [
        ("syll", "M -> P, S -> M |= S -> P"),
        ("syll+*", "A -> * -> B |= B <- * <- A"),
        ("rll", "P -o M^, M * S |- S * P^"),
    ] {
        let o = run(&["prove", "--system", system, "--format", "json", seq]);
        assert_eq!(code(&o), 0, "{system} {seq}");
        let checked = run_with_stdin(&["check"], &o.stdout);
        assert_eq!(code(&checked), 0);
        assert_eq!(stdout(&checked).trim(), "valid");
    }
}

#[test]
fn check_rejects_tampered_proof() {
    let o = run(&[
        "prove",
        "--system",
        "rll",
        "--format",
        "json",
        "M -o P, S -o M |- S -o P",
    ]);
    let text = stdout(&o).replace("S -o P", "P -o S");
    let checked = run_with_stdin(&["check"], text.as_bytes());
    assert_eq!(code(&checked), 1);
    assert_eq!(code(&run_with_stdin(&["check"], b"not json")), 2);
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "prove",
        "--system",
        "syll++",
        "--format",
        "json",
        "B -> A, B <- * -> B |= A <- * -> B",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn nets_and_planarity() {
    let o = run(&["net", "M -o P, S -o M |- S -o P", "--check-planar"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("graph net {"));
    let o = run(&[
        "net",
        "P -o M^, M * S |- S * P^",
        "--check-planar",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 1);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["planar"], false);
    assert_eq!(doc["conclusions"][1], "S^ | M^");
    assert!(!doc["crossings"].as_array().unwrap().is_empty());
    let o = run(&["net", "A |- B"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "unprovable");
}

#[test]
fn enumerate_traditional() {
    let dir = std::env::temp_dir().join(format!("syllogic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (flag, rows, provable) in [(None, 256, 15), (Some("--strengthened"), 768, 9)] {
        let path = dir.join("report.txt");
        let mut args = vec![
            "enumerate",
            "--kind",
            "traditional",
            "--report",
            path.to_str().unwrap(),
        ];
        args.extend(flag);
        let o = run(&args);
        assert_eq!(code(&o), 0);
        let report = std::fs::read_to_string(&path).unwrap();
        let records: Vec<&str> = report.lines().take_while(|l| !l.is_empty()).collect();
        assert_eq!(records.len(), rows);
        let both = records
            .iter()
            .filter(|l| l.contains("syll=provable") && l.contains("rll=provable"))
            .count();
        assert_eq!(both, provable);
        assert!(report.contains(&format!("provable in asserted scope\t{provable}")));
    }
    std::fs::remove_dir_all(&dir).ok();
}

/// The exit code is 0 exactly when the findings list no missing, extra or
/// disagreeing candidate.
#[test]
fn enumerate_demorgan_exit_matches_findings() {
    let o = run(&["enumerate", "--kind", "demorgan"]);
    let out = stdout(&o);
    assert_eq!(out.lines().take_while(|l| !l.is_empty()).count(), 2048);
    let clean = !out.lines().any(|l| {
        l.starts_with("missing\t") || l.starts_with("extra\t") || l.starts_with("disagreement\t")
    });
    assert_eq!(code(&o), if clean { 0 } else { 1 });
}

#[test]
fn tables_all_proved() {
    let o = run(&["tables"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with("PROVED\t")));
    let count = |s: &str| {
        out.lines()
            .filter(|l| l.split('\t').nth(1) == Some(s))
            .count()
    };
    assert_eq!(count("traditional"), 24);
    assert_eq!(count("demorgan"), 32);
    assert_eq!(count("catalog"), 12);
    assert_eq!(count("reductions"), 3);
    let square = run(&["tables", "--only", "square"]);
    assert_eq!(stdout(&square).lines().count(), count("square"));
}
