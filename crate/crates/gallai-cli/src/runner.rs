//! Campaign execution: generates or ingests graphs, runs the selected
//! checks per graph (one longest-path enumeration each), and streams
//! findings to a serialized sink. Work is distributed across graphs only;
//! with one worker the findings sequence is deterministic.

use crate::config::{CampaignConfig, FamilyKind};
use crate::findings::{Finding, Summary, FINDINGS_SCHEMA_VERSION};
use gallai_core::intersect::{
    gallai_check_report, index_alignment_check_report, lemma2_check_report, pairwise_check_report,
    triple_check_report, CheckVerdict, ParityConvention,
};
use gallai_core::surgery::interleave_surgery_check;
use gallai_core::{
    enumerate_longest_paths_budgeted, generate, parse_graph6, to_graph6, Family, GeneratorSpec,
    Graph, Graph6Error,
};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Instant;
use thiserror::Error;

/// Environment variable that overrides the configured worker count.
pub const WORKERS_ENV: &str = "GALLAI_LAB_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Pairwise,
    Lemma2Vertex,
    Lemma2Edge,
    Alignment,
    InterleaveSurgery,
    Triple,
    Gallai,
}

pub const ALL_CHECKS: [CheckKind; 7] = [
    CheckKind::Pairwise,
    CheckKind::Lemma2Vertex,
    CheckKind::Lemma2Edge,
    CheckKind::Alignment,
    CheckKind::InterleaveSurgery,
    CheckKind::Triple,
    CheckKind::Gallai,
];

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Pairwise => "pairwise",
            CheckKind::Lemma2Vertex => "lemma2_vertex",
            CheckKind::Lemma2Edge => "lemma2_edge",
            CheckKind::Alignment => "alignment",
            CheckKind::InterleaveSurgery => "interleave_surgery",
            CheckKind::Triple => "triple",
            CheckKind::Gallai => "gallai",
        }
    }
}

impl FromStr for CheckKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        ALL_CHECKS
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CheckSettings {
    pub path_cap: usize,
    pub triple_cap: usize,
    pub node_budget: u64,
}

impl From<&CampaignConfig> for CheckSettings {
    fn from(c: &CampaignConfig) -> Self {
        CheckSettings {
            path_cap: c.path_cap,
            triple_cap: c.triple_cap,
            node_budget: c.node_budget,
        }
    }
}

/// One graph queued for checking.
#[derive(Debug, Clone)]
pub struct Task {
    pub graph6: String,
    pub graph: Graph,
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
}

/// Parses a graph6 file, one graph per nonempty line. Errors carry the
/// 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Task>, IngestError> {
    let mut tasks = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let graph = parse_graph6(line).map_err(|source| IngestError::Parse { line: i + 1, source })?;
        tasks.push(Task { graph6: to_graph6(&graph).expect("parsed graphs re-encode"), graph });
    }
    Ok(tasks)
}

/// Deterministic per-instance seed: a SplitMix64 finalizer over the base
/// seed combined with the order and instance index. Fixed forever; changing
/// it changes every campaign's graphs.
pub fn instance_seed(base: u64, order: usize, instance: usize) -> u64 {
    let mut s = base
        ^ (order as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
        ^ (instance as u64).wrapping_mul(0xd1b5_4a32_d192_ed03);
    s ^= s >> 30;
    s = s.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    s ^= s >> 27;
    s = s.wrapping_mul(0x94d0_49bb_1331_11eb);
    s ^ (s >> 31)
}

/// Expands the campaign template into concrete graphs. Deterministic
/// families yield one instance per order. Spider interprets each order as
/// `1 + legs * leg_len`, skipping orders that don't divide evenly.
pub fn build_campaign_tasks(config: &CampaignConfig) -> anyhow::Result<Vec<Task>> {
    let mut tasks = Vec::new();
    for order in config.order_min..=config.order_max {
        let (families, instances): (Vec<Family>, usize) = match config.family {
            FamilyKind::Path => (vec![Family::Path { order }], 1),
            FamilyKind::Cycle => (vec![Family::Cycle { order }], 1),
            FamilyKind::Star => (vec![Family::Star { order }], 1),
            FamilyKind::Complete => (vec![Family::Complete { order }], 1),
            FamilyKind::Spider => {
                if order > 1 && (order - 1) % config.legs == 0 {
                    (
                        vec![Family::Spider { legs: config.legs, leg_len: (order - 1) / config.legs }],
                        1,
                    )
                } else {
                    (vec![], 1)
                }
            }
            FamilyKind::RandomTree => (vec![Family::RandomTree { order }], config.instances),
            FamilyKind::RandomConnected => (
                vec![Family::RandomConnected { order, num: config.prob.0, den: config.prob.1 }],
                config.instances,
            ),
        };
        for family in families {
            for instance in 0..instances {
                let seed = instance_seed(config.seed, order, instance);
                let graph = generate(&GeneratorSpec::new(family.clone(), seed))?;
                let graph6 = to_graph6(&graph)?;
                tasks.push(Task { graph6, graph });
            }
        }
    }
    Ok(tasks)
}

fn skipped_finding(graph6: &str, check: CheckKind, order_l: usize, count: usize, micros: u64) -> Finding {
    Finding {
        schema: FINDINGS_SCHEMA_VERSION,
        graph6: graph6.to_string(),
        check: check.name().to_string(),
        holds: true,
        vacuous: true,
        capped: false,
        witness: None,
        order_l,
        longest_path_count: count,
        elapsed_micros: micros,
    }
}

/// Runs every requested check on one graph, enumerating its longest paths
/// once. Disconnected graphs and graphs that blow the node budget yield
/// skipped (vacuous) findings; enumeration time is attributed to the first
/// finding.
pub fn run_checks_on_graph(
    graph6: &str,
    g: &Graph,
    checks: &[CheckKind],
    settings: &CheckSettings,
) -> Vec<Finding> {
    let started = Instant::now();
    if g.order() == 0 || !g.is_connected() {
        let micros = started.elapsed().as_micros() as u64;
        return checks.iter().map(|&c| skipped_finding(graph6, c, 0, 0, micros)).collect();
    }
    let report = match enumerate_longest_paths_budgeted(g, settings.path_cap, settings.node_budget)
    {
        Ok(report) => report,
        Err(_) => {
            let micros = started.elapsed().as_micros() as u64;
            return checks.iter().map(|&c| skipped_finding(graph6, c, 0, 0, micros)).collect();
        }
    };
    let mut enum_micros = started.elapsed().as_micros() as u64;

    let mut findings = Vec::with_capacity(checks.len());
    for &check in checks {
        let check_started = Instant::now();
        let verdict: Result<CheckVerdict, _> = match check {
            CheckKind::Pairwise => pairwise_check_report(&report),
            CheckKind::Lemma2Vertex => lemma2_check_report(&report, ParityConvention::VertexCount),
            CheckKind::Lemma2Edge => lemma2_check_report(&report, ParityConvention::EdgeCount),
            CheckKind::Alignment => index_alignment_check_report(g, &report),
            CheckKind::InterleaveSurgery => interleave_surgery_check(g, &report, settings.triple_cap),
            CheckKind::Triple => triple_check_report(&report, settings.triple_cap),
            CheckKind::Gallai => gallai_check_report(&report),
        };
        let elapsed_micros = check_started.elapsed().as_micros() as u64 + enum_micros;
        enum_micros = 0;
        let finding = match verdict {
            Ok(v) => Finding {
                schema: FINDINGS_SCHEMA_VERSION,
                graph6: graph6.to_string(),
                check: v.property,
                holds: v.holds,
                vacuous: v.vacuous,
                capped: v.capped,
                witness: v.witness,
                order_l: report.order_l,
                longest_path_count: report.paths.len(),
                elapsed_micros,
            },
            // Only a truncated path list lands here; record the graph as
            // skipped for this check rather than stalling the campaign.
            Err(_) => skipped_finding(
                graph6,
                check,
                report.order_l,
                report.paths.len(),
                elapsed_micros,
            ),
        };
        findings.push(finding);
    }
    findings
}

/// Runs `checks` over `tasks` with the given worker count, feeding every
/// finding to `sink` from a single thread. With `workers == 1` the finding
/// order is the task order; with more workers the finding set is the same
/// but arrival order is unspecified.
pub fn run_tasks<F>(
    tasks: &[Task],
    checks: &[CheckKind],
    settings: &CheckSettings,
    workers: usize,
    mut sink: F,
) -> Summary
where
    F: FnMut(Finding),
{
    let mut summary = Summary { graphs: tasks.len(), ..Summary::default() };
    if workers <= 1 {
        for task in tasks {
            for finding in run_checks_on_graph(&task.graph6, &task.graph, checks, settings) {
                summary.record(&finding);
                sink(finding);
            }
        }
        return summary;
    }

    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        let (tx, rx) = mpsc::channel::<Vec<Finding>>();
        for _ in 0..workers {
            let tx = tx.clone();
            let next = &next;
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(task) = tasks.get(i) else { break };
                let findings = run_checks_on_graph(&task.graph6, &task.graph, checks, settings);
                if tx.send(findings).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        while let Ok(findings) = rx.recv() {
            for finding in findings {
                summary.record(&finding);
                sink(finding);
            }
        }
    });
    summary
}

/// Worker count after applying the `GALLAI_LAB_WORKERS` override.
pub fn effective_workers(configured: usize) -> usize {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => v.parse::<usize>().ok().filter(|&w| w >= 1).unwrap_or(configured),
        Err(_) => configured,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::CampaignConfig;

    fn settings() -> CheckSettings {
        CheckSettings { path_cap: 100_000, triple_cap: 50_000, node_budget: 50_000_000 }
    }

    #[test]
    fn p5_pairwise_finding_holds() {
        let g = generate(&GeneratorSpec::new(Family::Path { order: 5 }, 0)).unwrap();
        let g6 = to_graph6(&g).unwrap();
        let findings = run_checks_on_graph(&g6, &g, &[CheckKind::Pairwise], &settings());
        assert_eq!(findings.len(), 1);
        assert!(findings[0].holds);
        assert!(!findings[0].vacuous);
        assert_eq!(findings[0].order_l, 5);
        assert_eq!(findings[0].longest_path_count, 1);
    }

    #[test]
    fn disconnected_graph_skipped_vacuous() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let g6 = to_graph6(&g).unwrap();
        let findings =
            run_checks_on_graph(&g6, &g, &[CheckKind::Pairwise, CheckKind::Triple], &settings());
        assert_eq!(findings.len(), 2);
        assert!(findings.iter().all(|f| f.vacuous && f.holds));
    }

    #[test]
    fn budget_exhaustion_skips_graph() {
        let g = generate(&GeneratorSpec::new(Family::Complete { order: 12 }, 0)).unwrap();
        let g6 = to_graph6(&g).unwrap();
        let tight = CheckSettings { node_budget: 10_000, ..settings() };
        let findings = run_checks_on_graph(&g6, &g, &[CheckKind::Gallai], &tight);
        assert_eq!(findings.len(), 1);
        assert!(findings[0].vacuous);
        assert_eq!(findings[0].order_l, 0);
    }

    #[test]
    fn parse_error_carries_line_number() {
        let err = parse_graph6_lines("@\n@\nD?\n").unwrap_err();
        let IngestError::Parse { line, .. } = err;
        assert_eq!(line, 3);
    }

    #[test]
    fn campaign_tasks_deterministic() {
        let cfg = CampaignConfig::parse(
            "family = random_tree\norders = 5-8\ninstances = 3\nseed = 7\nchecks = gallai\noutput = x.jsonl\n",
        )
        .unwrap();
        let a = build_campaign_tasks(&cfg).unwrap();
        let b = build_campaign_tasks(&cfg).unwrap();
        assert_eq!(a.len(), 12);
        assert!(a.iter().zip(&b).all(|(x, y)| x.graph6 == y.graph6));
    }

    #[test]
    fn deterministic_families_collapse_instances() {
        let cfg = CampaignConfig::parse(
            "family = cycle\norders = 3-5\ninstances = 10\nseed = 7\nchecks = gallai\noutput = x.jsonl\n",
        )
        .unwrap();
        assert_eq!(build_campaign_tasks(&cfg).unwrap().len(), 3);
    }

    #[test]
    fn spider_orders_skip_non_divisible() {
        let cfg = CampaignConfig::parse(
            "family = spider\norders = 4-10\nlegs = 3\nseed = 0\nchecks = gallai\noutput = x.jsonl\n",
        )
        .unwrap();
        let tasks = build_campaign_tasks(&cfg).unwrap();
        // Orders 4, 7, 10 give leg lengths 1, 2, 3.
        assert_eq!(tasks.len(), 3);
        assert!(tasks.iter().all(|t| t.graph.degree(0) == 3));
    }

    #[test]
    fn multi_worker_same_finding_set() {
        let cfg = CampaignConfig::parse(
            "family = random_connected\norders = 6-9\ninstances = 8\nseed = 3\nprob = 2/5\nchecks = pairwise, triple, gallai\noutput = x.jsonl\n",
        )
        .unwrap();
        let tasks = build_campaign_tasks(&cfg).unwrap();
        let mut serial: Vec<Finding> = Vec::new();
        let s1 = run_tasks(&tasks, &cfg.checks, &CheckSettings::from(&cfg), 1, |f| serial.push(f));
        let mut threaded: Vec<Finding> = Vec::new();
        let s4 = run_tasks(&tasks, &cfg.checks, &CheckSettings::from(&cfg), 4, |f| threaded.push(f));
        let key = |f: &Finding| (f.graph6.clone(), f.check.clone());
        serial.sort_by_key(key);
        threaded.sort_by_key(key);
        for f in serial.iter_mut().chain(threaded.iter_mut()) {
            f.elapsed_micros = 0;
        }
        assert_eq!(serial, threaded);
        assert_eq!(s1.per_check, s4.per_check);
    }
}
