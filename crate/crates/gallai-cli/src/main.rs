use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use gallai_cli::config::{
    parse_checks, parse_rational, CampaignConfig, FamilyKind, DEFAULT_NODE_BUDGET,
    DEFAULT_PATH_CAP, DEFAULT_TRIPLE_CAP,
};
use gallai_cli::{
    build_campaign_tasks, effective_workers, parse_graph6_lines, run_tasks, CheckSettings,
    Finding, Summary, ALL_CHECKS,
};
use gallai_core::intersect::gallai_set;
use gallai_core::{
    enumerate_longest_paths_budgeted, generate, to_dot, to_graph6, Family, GeneratorSpec,
};
use std::fs;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Campaign harness for longest-path intersection properties: seeded
/// generator sweeps, graph6 corpus verification, and single-graph
/// inspection.
#[derive(Parser)]
#[command(name = "gallai-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification campaign described by a config file.
    Campaign {
        #[arg(long)]
        config: PathBuf,
        /// Comma-separated checks whose violations are informational only
        /// (recorded, but not reflected in the exit code).
        #[arg(long, value_name = "CHECKS")]
        expected_open: Option<String>,
    },
    /// Run checks over a file of graph6 lines (one graph per line).
    Verify {
        file: PathBuf,
        /// Comma-separated checks: pairwise, lemma2_vertex, lemma2_edge,
        /// alignment, interleave_surgery, triple, gallai.
        #[arg(long)]
        checks: String,
        /// Findings destination (JSON Lines); stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_PATH_CAP)]
        path_cap: usize,
        #[arg(long, default_value_t = DEFAULT_TRIPLE_CAP)]
        triple_cap: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_name = "CHECKS")]
        expected_open: Option<String>,
    },
    /// Print a human-readable report for one graph6 line.
    Inspect {
        graph6: String,
        /// Also write DOT with up to three longest paths highlighted.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Generate a graph and print its graph6 line.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Spider leg count.
        #[arg(long, default_value_t = 3)]
        legs: usize,
        /// Spider leg length; derived from --order when omitted.
        #[arg(long)]
        leg_len: Option<usize>,
        /// Edge probability for random_connected, as `num/den`.
        #[arg(long, default_value = "1/4")]
        prob: String,
        /// Number of instances (random families advance the seed by one
        /// per instance).
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(violations) if violations == 0 => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns the number of gating violations (0 means a clean run).
fn run(cli: Cli) -> Result<usize> {
    match cli.command {
        Command::Campaign { config, expected_open } => cmd_campaign(&config, expected_open),
        Command::Verify {
            file,
            checks,
            output,
            path_cap,
            triple_cap,
            node_budget,
            workers,
            expected_open,
        } => cmd_verify(
            &file,
            &checks,
            output,
            CheckSettings { path_cap, triple_cap, node_budget },
            workers,
            expected_open,
        ),
        Command::Inspect { graph6, dot } => cmd_inspect(&graph6, dot),
        Command::Gen { family, order, seed, legs, leg_len, prob, count } => {
            cmd_gen(&family, order, seed, legs, leg_len, &prob, count)
        }
    }
}

fn informational_checks(expected_open: Option<String>) -> Result<Vec<String>> {
    let Some(list) = expected_open else { return Ok(Vec::new()) };
    let checks = parse_checks(&list).map_err(|e| anyhow::anyhow!("--expected-open: {e}"))?;
    Ok(checks.into_iter().map(|c| c.name().to_string()).collect())
}

fn print_summary(summary: &Summary, informational: &[String]) {
    print!("{summary}");
    if !informational.is_empty() {
        println!("informational (no exit-code impact): {}", informational.join(", "));
    }
}

fn cmd_campaign(config_path: &PathBuf, expected_open: Option<String>) -> Result<usize> {
    let text = fs::read_to_string(config_path)
        .with_context(|| format!("reading config {}", config_path.display()))?;
    let config = CampaignConfig::parse(&text)?;
    let informational = informational_checks(expected_open)?;
    let workers = effective_workers(config.workers);

    let tasks = build_campaign_tasks(&config)?;
    let file = fs::File::create(&config.output)
        .with_context(|| format!("opening findings output {}", config.output.display()))?;
    let mut writer = BufWriter::new(file);
    let mut write_error = None;
    let summary = run_tasks(&tasks, &config.checks, &CheckSettings::from(&config), workers, |f| {
        if write_error.is_none() {
            if let Err(e) = writeln!(writer, "{}", f.to_json_line()) {
                write_error = Some(e);
            }
        }
    });
    if let Some(e) = write_error {
        return Err(e).context("writing findings");
    }
    writer.flush().context("flushing findings")?;

    print_summary(&summary, &informational);
    Ok(summary.gating_violations(&informational))
}

fn cmd_verify(
    file: &PathBuf,
    checks: &str,
    output: Option<PathBuf>,
    settings: CheckSettings,
    workers: usize,
    expected_open: Option<String>,
) -> Result<usize> {
    let text =
        fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let tasks = parse_graph6_lines(&text)?;
    let checks = parse_checks(checks).map_err(|e| anyhow::anyhow!("--checks: {e}"))?;
    let informational = informational_checks(expected_open)?;
    let workers = effective_workers(workers);

    let summary = match output {
        Some(path) => {
            let file = fs::File::create(&path)
                .with_context(|| format!("opening findings output {}", path.display()))?;
            let mut writer = BufWriter::new(file);
            let mut write_error = None;
            let summary = run_tasks(&tasks, &checks, &settings, workers, |f| {
                if write_error.is_none() {
                    if let Err(e) = writeln!(writer, "{}", f.to_json_line()) {
                        write_error = Some(e);
                    }
                }
            });
            if let Some(e) = write_error {
                return Err(e).context("writing findings");
            }
            writer.flush().context("flushing findings")?;
            print_summary(&summary, &informational);
            summary
        }
        None => {
            // Findings to stdout, summary to stderr so the stream stays
            // machine-readable.
            let stdout = std::io::stdout();
            let mut writer = BufWriter::new(stdout.lock());
            let mut write_error = None;
            let summary = run_tasks(&tasks, &checks, &settings, workers, |f| {
                if write_error.is_none() {
                    if let Err(e) = writeln!(writer, "{}", f.to_json_line()) {
                        write_error = Some(e);
                    }
                }
            });
            if let Some(e) = write_error {
                return Err(e).context("writing findings");
            }
            writer.flush().context("flushing findings")?;
            eprint!("{summary}");
            summary
        }
    };
    Ok(summary.gating_violations(&informational))
}

fn cmd_inspect(graph6_line: &str, dot: Option<PathBuf>) -> Result<usize> {
    let graph = gallai_core::parse_graph6(graph6_line)?;
    if graph.order() == 0 {
        bail!("graph has no vertices");
    }
    if !graph.is_connected() {
        bail!("graph is disconnected; inspection covers connected graphs");
    }
    let canonical = to_graph6(&graph)?;
    let report = enumerate_longest_paths_budgeted(&graph, DEFAULT_PATH_CAP, DEFAULT_NODE_BUDGET)?;

    println!("graph6: {canonical}");
    println!("order: {}  edges: {}", graph.order(), graph.edge_count());
    println!("longest path order (vertices): {}", report.order_l);
    println!(
        "longest paths (canonical, up to reversal): {}{}",
        report.paths.len(),
        if report.truncated { " (truncated)" } else { "" }
    );
    if !report.truncated {
        let set = gallai_set(&report)?;
        if set.is_empty() {
            println!("gallai set: empty");
        } else {
            println!(
                "gallai set: {{{}}}",
                set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
            );
        }
    }

    let settings = CheckSettings {
        path_cap: DEFAULT_PATH_CAP,
        triple_cap: DEFAULT_TRIPLE_CAP,
        node_budget: DEFAULT_NODE_BUDGET,
    };
    let findings = gallai_cli::run_checks_on_graph(&canonical, &graph, &ALL_CHECKS, &settings);
    println!("checks:");
    let mut violations = 0usize;
    for f in &findings {
        let status = verdict_label(f);
        println!("  {:<20} {status}", f.check);
        if f.is_violation() {
            violations += 1;
            if let Some(w) = &f.witness {
                println!("    witness: {}", serde_json::to_string(w)?);
            }
        }
    }

    if let Some(path) = dot {
        let highlight: Vec<_> = report.paths.iter().take(3).cloned().collect();
        let dot_text = to_dot(&graph, &highlight)?;
        fs::write(&path, dot_text).with_context(|| format!("writing {}", path.display()))?;
        println!("dot written to {}", path.display());
    }
    Ok(violations)
}

fn verdict_label(f: &Finding) -> &'static str {
    match (f.holds, f.vacuous, f.capped) {
        (true, true, _) => "holds (vacuous)",
        (true, false, true) => "holds (capped)",
        (true, false, false) => "holds",
        (false, ..) => "VIOLATED",
    }
}

fn cmd_gen(
    family: &str,
    order: usize,
    seed: u64,
    legs: usize,
    leg_len: Option<usize>,
    prob: &str,
    count: usize,
) -> Result<usize> {
    let kind: FamilyKind = family.parse().map_err(|e| anyhow::anyhow!("--family: {e}"))?;
    let (num, den) = parse_rational(prob).map_err(|e| anyhow::anyhow!("--prob: {e}"))?;
    let is_random = matches!(kind, FamilyKind::RandomTree | FamilyKind::RandomConnected);
    let instances = if is_random { count } else { 1 };
    for i in 0..instances {
        let family = match kind {
            FamilyKind::Path => Family::Path { order },
            FamilyKind::Cycle => Family::Cycle { order },
            FamilyKind::Star => Family::Star { order },
            FamilyKind::Complete => Family::Complete { order },
            FamilyKind::Spider => {
                let leg_len = match leg_len {
                    Some(len) => len,
                    None if order > 1 && (order - 1) % legs == 0 => (order - 1) / legs,
                    None => bail!(
                        "--order {order} is not 1 + {legs}*leg_len; pass --leg-len explicitly"
                    ),
                };
                Family::Spider { legs, leg_len }
            }
            FamilyKind::RandomTree => Family::RandomTree { order },
            FamilyKind::RandomConnected => Family::RandomConnected { order, num, den },
        };
        let g = generate(&GeneratorSpec::new(family, seed.wrapping_add(i as u64)))?;
        println!("{}", to_graph6(&g)?);
    }
    Ok(0)
}
