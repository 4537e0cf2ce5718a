//! Library surface of the campaign harness, so integration and acceptance
//! tests can drive the exact code paths the `gallai-lab` binary uses.

pub mod config;
pub mod findings;
pub mod runner;

pub use config::{CampaignConfig, ConfigError, FamilyKind};
pub use findings::{Finding, Summary, FINDINGS_SCHEMA_VERSION};
pub use runner::{
    build_campaign_tasks, effective_workers, instance_seed, parse_graph6_lines,
    run_checks_on_graph, run_tasks, CheckKind, CheckSettings, IngestError, Task, ALL_CHECKS,
    WORKERS_ENV,
};
