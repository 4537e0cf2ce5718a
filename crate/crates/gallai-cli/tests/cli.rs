//! End-to-end tests of the `gallai-lab` binary: subcommand behavior, exit
//! codes, determinism, and the findings stream format.

use gallai_cli::Finding;
use std::path::Path;
use std::process::{Command, Output};

fn gallai_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gallai-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn gallai_lab_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gallai-lab"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn gen_line(args: &[&str]) -> String {
    let out = gallai_lab(args);
    assert!(out.status.success(), "gen failed: {}", String::from_utf8_lossy(&out.stderr));
    stdout_of(&out).trim().to_string()
}

#[test]
fn gen_path_5_round_trips() {
    let line = gen_line(&["gen", "--family", "path", "--order", "5", "--seed", "0"]);
    let g = gallai_core::parse_graph6(&line).unwrap();
    assert_eq!(g.order(), 5);
    assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--family", "random_connected", "--order", "10", "--seed", "7", "--prob", "2/5"];
    assert_eq!(gen_line(&args), gen_line(&args));
}

#[test]
fn gen_count_produces_distinct_seeded_instances() {
    let out = gen_line(&[
        "gen", "--family", "random_tree", "--order", "12", "--seed", "3", "--count", "4",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().any(|l| *l != lines[0]), "seeds should vary the trees");
}

#[test]
fn gen_rejects_unknown_family() {
    let out = gallai_lab(&["gen", "--family", "moebius", "--order", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn inspect_p5_reports_everything() {
    let p5 = gen_line(&["gen", "--family", "path", "--order", "5"]);
    let out = gallai_lab(&["inspect", &p5]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout_of(&out);
    assert!(text.contains("longest path order (vertices): 5"));
    assert!(text.contains("longest paths (canonical, up to reversal): 1"));
    assert!(text.contains("gallai set: {0, 1, 2, 3, 4}"));
    assert!(text.contains("pairwise"));
}

#[test]
fn inspect_spider_3x2() {
    let spider = gen_line(&["gen", "--family", "spider", "--order", "7", "--legs", "3"]);
    let out = gallai_lab(&["inspect", &spider]);
    let text = stdout_of(&out);
    assert!(text.contains("longest path order (vertices): 5"));
    assert!(text.contains("longest paths (canonical, up to reversal): 3"));
    assert!(text.contains("gallai set: {0}"));
}

#[test]
fn inspect_c5_flags_alignment_violation() {
    let c5 = gen_line(&["gen", "--family", "cycle", "--order", "5"]);
    let out = gallai_lab(&["inspect", &c5]);
    assert_eq!(out.status.code(), Some(1), "alignment fails on the 5-cycle");
    assert!(stdout_of(&out).contains("VIOLATED"));
}

#[test]
fn inspect_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let spider = gen_line(&["gen", "--family", "spider", "--order", "7"]);
    let dot_path = dir.path().join("spider.dot");
    let out = gallai_lab(&["inspect", &spider, "--dot", dot_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.starts_with("graph g {"));
    // Every spider edge lies on exactly two of the three longest paths, so
    // each highlighted edge carries a two-color list.
    assert!(dot.contains("color=\"red:blue\""));
    assert!(dot.contains("color=\"blue:green\""));
    assert_eq!(dot.matches('{').count(), dot.matches('}').count());
}

#[test]
fn inspect_rejects_malformed_graph6() {
    let out = gallai_lab(&["inspect", "D?"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn inspect_rejects_disconnected() {
    // Two disjoint edges on four vertices.
    let g = gallai_core::Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let line = gallai_core::to_graph6(&g).unwrap();
    let out = gallai_lab(&["inspect", &line]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("disconnected"));
}

#[test]
fn verify_p5_pairwise_holds() {
    let dir = tempfile::tempdir().unwrap();
    let p5 = gen_line(&["gen", "--family", "path", "--order", "5"]);
    std::fs::write(dir.path().join("in.g6"), format!("{p5}\n")).unwrap();
    let out = gallai_lab_in(dir.path(), &["verify", "in.g6", "--checks", "pairwise"]);
    assert_eq!(out.status.code(), Some(0));
    let findings: Vec<Finding> = stdout_of(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(findings.len(), 1);
    assert!(findings[0].holds);
    assert_eq!(findings[0].check, "pairwise");
    assert_eq!(findings[0].order_l, 5);
}

#[test]
fn verify_reports_malformed_line_number() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("in.g6"), "@\n@\nD?\n").unwrap();
    let out = gallai_lab_in(dir.path(), &["verify", "in.g6", "--checks", "pairwise"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn verify_skips_disconnected_as_vacuous() {
    let dir = tempfile::tempdir().unwrap();
    let g = gallai_core::Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let line = gallai_core::to_graph6(&g).unwrap();
    std::fs::write(dir.path().join("in.g6"), format!("{line}\n")).unwrap();
    let out = gallai_lab_in(dir.path(), &["verify", "in.g6", "--checks", "pairwise,gallai"]);
    assert_eq!(out.status.code(), Some(0));
    let findings: Vec<Finding> = stdout_of(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(findings.len(), 2);
    assert!(findings.iter().all(|f| f.vacuous && f.holds));
}

#[test]
fn verify_violation_exits_1_and_expected_open_downgrades() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = gen_line(&["gen", "--family", "cycle", "--order", "5"]);
    std::fs::write(dir.path().join("in.g6"), format!("{c5}\n")).unwrap();

    let out = gallai_lab_in(dir.path(), &["verify", "in.g6", "--checks", "alignment"]);
    assert_eq!(out.status.code(), Some(1));

    let out = gallai_lab_in(
        dir.path(),
        &["verify", "in.g6", "--checks", "alignment", "--expected-open", "alignment"],
    );
    assert_eq!(out.status.code(), Some(0), "informational violations don't gate");
}

#[test]
fn verify_violation_witness_replays() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = gen_line(&["gen", "--family", "cycle", "--order", "5"]);
    std::fs::write(dir.path().join("in.g6"), format!("{c5}\n")).unwrap();
    let out = gallai_lab_in(dir.path(), &["verify", "in.g6", "--checks", "alignment"]);
    let findings: Vec<Finding> = stdout_of(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let f = &findings[0];
    assert!(!f.holds);
    let g = gallai_core::parse_graph6(&f.graph6).unwrap();
    let witness = f.witness.as_ref().expect("violations carry witnesses");
    assert!(witness.replays(&g), "recorded witness must reproduce the violation");
}

#[test]
fn verify_known_empty_transversal_instance() {
    // Order-12 instance whose longest paths have empty intersection; the
    // gallai check must produce an empty-set witness and exit 1.
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("in.g6"), "KiCkO__?OCOg\n").unwrap();
    let out = gallai_lab_in(dir.path(), &["verify", "in.g6", "--checks", "gallai"]);
    assert_eq!(out.status.code(), Some(1));
    let findings: Vec<Finding> = stdout_of(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(findings.len(), 1);
    assert!(!findings[0].holds);
    assert_eq!(findings[0].order_l, 10);
    let g = gallai_core::parse_graph6(&findings[0].graph6).unwrap();
    assert!(findings[0].witness.as_ref().unwrap().replays(&g));
}

const TREE_CONFIG: &str = "\
family = random_tree
orders = 5-9
instances = 6
seed = 11
checks = pairwise, triple, gallai
workers = 1
output = findings.jsonl
";

#[test]
fn campaign_runs_and_summarizes() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("camp.conf"), TREE_CONFIG).unwrap();
    let out = gallai_lab_in(dir.path(), &["campaign", "--config", "camp.conf"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout_of(&out);
    assert!(text.contains("30 graphs"));
    assert!(text.contains("pairwise"));
    let findings = std::fs::read_to_string(dir.path().join("findings.jsonl")).unwrap();
    assert_eq!(findings.lines().count(), 90);
    for line in findings.lines() {
        let f: Finding = serde_json::from_str(line).unwrap();
        assert!(f.holds, "trees violate nothing here");
    }
}

#[test]
fn campaign_single_worker_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("camp.conf"), TREE_CONFIG).unwrap();
    let mut runs = Vec::new();
    for name in ["a", "b"] {
        let conf = TREE_CONFIG.replace("findings.jsonl", &format!("{name}.jsonl"));
        std::fs::write(dir.path().join(format!("{name}.conf")), conf).unwrap();
        let out = gallai_lab_in(dir.path(), &["campaign", "--config", &format!("{name}.conf")]);
        assert!(out.status.success());
        let text = std::fs::read_to_string(dir.path().join(format!("{name}.jsonl"))).unwrap();
        let findings: Vec<Finding> = text
            .lines()
            .map(|l| {
                let mut f: Finding = serde_json::from_str(l).unwrap();
                f.elapsed_micros = 0; // wall-clock telemetry is the one nondeterministic field
                f
            })
            .collect();
        runs.push(findings);
    }
    assert_eq!(runs[0], runs[1]);
}

#[test]
fn workers_env_overrides_and_preserves_finding_set() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("camp.conf"), TREE_CONFIG).unwrap();
    let out = gallai_lab_in(dir.path(), &["campaign", "--config", "camp.conf"]);
    assert!(out.status.success());
    let serial = std::fs::read_to_string(dir.path().join("findings.jsonl")).unwrap();

    let out = Command::new(env!("CARGO_BIN_EXE_gallai-lab"))
        .current_dir(dir.path())
        .env("GALLAI_LAB_WORKERS", "4")
        .args(["campaign", "--config", "camp.conf"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let threaded = std::fs::read_to_string(dir.path().join("findings.jsonl")).unwrap();

    let normalize = |text: &str| {
        let mut v: Vec<Finding> = text
            .lines()
            .map(|l| {
                let mut f: Finding = serde_json::from_str(l).unwrap();
                f.elapsed_micros = 0;
                f
            })
            .collect();
        v.sort_by_key(|f| (f.graph6.clone(), f.check.clone()));
        v
    };
    assert_eq!(normalize(&serial), normalize(&threaded));
}

#[test]
fn campaign_rejects_bad_config() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("camp.conf"), "family = path\nbroken\n").unwrap();
    let out = gallai_lab_in(dir.path(), &["campaign", "--config", "camp.conf"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_2() {
    let out = gallai_lab(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gallai_lab(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
