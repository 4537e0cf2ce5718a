//! Campaign configuration: a flat `key = value` text format with `#`
//! comments. See the repository README for the documented key set.

use crate::runner::CheckKind;
use std::path::PathBuf;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config line {line}: {message}")]
    Invalid { line: usize, message: String },
    #[error("config: {0}")]
    Missing(String),
}

/// Default search-node budget per graph (campaigns skip past it).
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;
/// Default cap on stored longest paths per graph.
pub const DEFAULT_PATH_CAP: usize = 100_000;
/// Default cap on examined triples / arrangements per graph.
pub const DEFAULT_TRIPLE_CAP: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Cycle,
    Star,
    Spider,
    Complete,
    RandomTree,
    RandomConnected,
}

impl FromStr for FamilyKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "path" => Ok(FamilyKind::Path),
            "cycle" => Ok(FamilyKind::Cycle),
            "star" => Ok(FamilyKind::Star),
            "spider" => Ok(FamilyKind::Spider),
            "complete" => Ok(FamilyKind::Complete),
            "random_tree" => Ok(FamilyKind::RandomTree),
            "random_connected" => Ok(FamilyKind::RandomConnected),
            other => Err(format!(
                "unknown family {other:?} (expected path, cycle, star, spider, complete, random_tree or random_connected)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignConfig {
    pub family: FamilyKind,
    pub order_min: usize,
    pub order_max: usize,
    /// Instances per order. Deterministic families collapse to one instance
    /// per order regardless.
    pub instances: usize,
    pub seed: u64,
    /// Edge probability for random_connected, as a rational.
    pub prob: (u64, u64),
    /// Spider leg count; leg length is derived from each order.
    pub legs: usize,
    pub checks: Vec<CheckKind>,
    pub path_cap: usize,
    pub triple_cap: usize,
    pub workers: usize,
    pub node_budget: u64,
    pub output: PathBuf,
}

/// Parses `num/den` or a bare integer (taken as `n/1`).
pub fn parse_rational(s: &str) -> Result<(u64, u64), String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<u64>().map_err(|e| e.to_string())?,
            d.trim().parse::<u64>().map_err(|e| e.to_string())?,
        ),
        None => (s.trim().parse::<u64>().map_err(|e| e.to_string())?, 1),
    };
    if den == 0 || num > den {
        return Err(format!("{s:?} is not a probability in [0, 1]"));
    }
    Ok((num, den))
}

/// Parses `lo-hi` or a single order.
fn parse_orders(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = match s.split_once('-') {
        Some((a, b)) => (
            a.trim().parse::<usize>().map_err(|e| e.to_string())?,
            b.trim().parse::<usize>().map_err(|e| e.to_string())?,
        ),
        None => {
            let o = s.trim().parse::<usize>().map_err(|e| e.to_string())?;
            (o, o)
        }
    };
    if lo == 0 || lo > hi {
        return Err(format!("bad order range {s:?}"));
    }
    Ok((lo, hi))
}

pub fn parse_checks(s: &str) -> Result<Vec<CheckKind>, String> {
    let mut checks = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let kind: CheckKind = part.parse()?;
        if !checks.contains(&kind) {
            checks.push(kind);
        }
    }
    if checks.is_empty() {
        return Err("checks must name at least one check".to_string());
    }
    Ok(checks)
}

impl CampaignConfig {
    pub fn parse(text: &str) -> Result<CampaignConfig, ConfigError> {
        let mut family = None;
        let mut orders = None;
        let mut instances = 1usize;
        let mut seed = 0u64;
        let mut prob = (1u64, 4u64);
        let mut legs = 3usize;
        let mut checks = None;
        let mut path_cap = DEFAULT_PATH_CAP;
        let mut triple_cap = DEFAULT_TRIPLE_CAP;
        let mut workers = 1usize;
        let mut node_budget = DEFAULT_NODE_BUDGET;
        let mut output = None;

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let invalid = |message: String| ConfigError::Invalid { line: line_no, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| invalid(format!("expected `key = value`, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "family" => family = Some(value.parse::<FamilyKind>().map_err(invalid)?),
                "orders" => orders = Some(parse_orders(value).map_err(invalid)?),
                "instances" => {
                    instances = value.parse().map_err(|e| invalid(format!("instances: {e}")))?;
                    if instances == 0 {
                        return Err(invalid("instances must be >= 1".into()));
                    }
                }
                "seed" => seed = value.parse().map_err(|e| invalid(format!("seed: {e}")))?,
                "prob" => prob = parse_rational(value).map_err(invalid)?,
                "legs" => {
                    legs = value.parse().map_err(|e| invalid(format!("legs: {e}")))?;
                }
                "checks" => checks = Some(parse_checks(value).map_err(invalid)?),
                "path_cap" => {
                    path_cap = value.parse().map_err(|e| invalid(format!("path_cap: {e}")))?;
                    if path_cap == 0 {
                        return Err(invalid("path_cap must be >= 1".into()));
                    }
                }
                "triple_cap" => {
                    triple_cap = value.parse().map_err(|e| invalid(format!("triple_cap: {e}")))?;
                    if triple_cap == 0 {
                        return Err(invalid("triple_cap must be >= 1".into()));
                    }
                }
                "workers" => {
                    workers = value.parse().map_err(|e| invalid(format!("workers: {e}")))?;
                    if workers == 0 {
                        return Err(invalid("workers must be >= 1".into()));
                    }
                }
                "node_budget" => {
                    node_budget =
                        value.parse().map_err(|e| invalid(format!("node_budget: {e}")))?;
                }
                "output" => output = Some(PathBuf::from(value)),
                other => return Err(invalid(format!("unknown key {other:?}"))),
            }
        }

        let family = family.ok_or_else(|| ConfigError::Missing("family is required".into()))?;
        let (order_min, order_max) =
            orders.ok_or_else(|| ConfigError::Missing("orders is required".into()))?;
        let checks = checks.ok_or_else(|| ConfigError::Missing("checks is required".into()))?;
        let output = output.ok_or_else(|| ConfigError::Missing("output is required".into()))?;
        Ok(CampaignConfig {
            family,
            order_min,
            order_max,
            instances,
            seed,
            prob,
            legs,
            checks,
            path_cap,
            triple_cap,
            workers,
            node_budget,
            output,
        })
    }
}
