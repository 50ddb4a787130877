//! Shared settings with a fixed precedence: command line flags override the
//! optional TOML config file, which overrides built-in defaults.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::path::Path;

use anyhow::{Context, Result};
use serde::Deserialize;

pub const DEFAULT_BUDGET: u64 = 200_000_000;
pub const DEFAULT_STEPS: u32 = 10_000;

/// Keys the config file may set. Unknown keys are rejected so typos fail
/// loudly instead of silently losing a setting.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub workers: Option<usize>,
    pub budget: Option<u64>,
    pub steps: Option<u32>,
    pub seeds: Option<String>,
    pub seed: Option<u64>,
}

pub fn load(path: Option<&Path>) -> Result<FileConfig> {
    let Some(p) = path else {
        return Ok(FileConfig::default());
    };
    let text =
        std::fs::read_to_string(p).with_context(|| format!("reading config {}", p.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing config {}", p.display()))
}

/// Effective values after the merge.
#[derive(Debug, Clone, Hash)]
pub struct Settings {
    pub workers: usize,
    pub budget: u64,
    pub steps: u32,
    pub seeds: (u64, u64),
    pub seed: u64,
}

impl Settings {
    pub fn merge(
        file: &FileConfig,
        workers: Option<usize>,
        budget: Option<u64>,
        steps: Option<u32>,
        seeds: Option<&str>,
        seed: Option<u64>,
    ) -> Result<Settings> {
        let seeds = match seeds.or(file.seeds.as_deref()) {
            Some(text) => parse_seed_range(text)?,
            None => (0, 0),
        };
        Ok(Settings {
            workers: workers.or(file.workers).unwrap_or(1).max(1),
            budget: budget.or(file.budget).unwrap_or(DEFAULT_BUDGET),
            steps: steps.or(file.steps).unwrap_or(DEFAULT_STEPS),
            seeds,
            seed: seed.or(file.seed).unwrap_or(0),
        })
    }

    pub fn seed_list(&self) -> Vec<u64> {
        (self.seeds.0..=self.seeds.1).collect()
    }
}

/// `"7"` is the single seed 7; `"0..49"` is the inclusive range 0 to 49.
pub fn parse_seed_range(text: &str) -> Result<(u64, u64)> {
    let text = text.trim();
    if let Some((a, b)) = text.split_once("..") {
        let lo: u64 = a.trim().parse().context("seed range start")?;
        let hi: u64 = b.trim().parse().context("seed range end")?;
        anyhow::ensure!(lo <= hi, "seed range {text} runs backwards");
        Ok((lo, hi))
    } else {
        let s: u64 = text.parse().with_context(|| format!("seed {text:?}"))?;
        Ok((s, s))
    }
}

/// Stable fingerprint of the command line and merged settings, echoed in
/// reports so identical runs are recognizable.
pub fn config_hash(command: &str, settings: &Settings) -> String {
    let mut h = DefaultHasher::new();
    command.hash(&mut h);
    settings.hash(&mut h);
    format!("{:016x}", h.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_beat_file_values_beat_defaults() {
        let file = FileConfig {
            workers: Some(4),
            budget: Some(1000),
            steps: None,
            seeds: Some("5..9".into()),
            seed: None,
        };
        let s = Settings::merge(&file, Some(2), None, None, None, None).unwrap();
        assert_eq!(s.workers, 2);
        assert_eq!(s.budget, 1000);
        assert_eq!(s.steps, DEFAULT_STEPS);
        assert_eq!(s.seeds, (5, 9));
        assert_eq!(s.seed, 0);
    }

    #[test]
    fn seed_ranges_parse_both_forms() {
        assert_eq!(parse_seed_range("7").unwrap(), (7, 7));
        assert_eq!(parse_seed_range("0..49").unwrap(), (0, 49));
        assert!(parse_seed_range("9..2").is_err());
        assert!(parse_seed_range("x").is_err());
    }

    #[test]
    fn hash_depends_on_settings() {
        let file = FileConfig::default();
        let a = Settings::merge(&file, None, None, None, None, None).unwrap();
        let b = Settings::merge(&file, None, Some(7), None, None, None).unwrap();
        assert_ne!(config_hash("solve", &a), config_hash("solve", &b));
        assert_eq!(config_hash("solve", &a), config_hash("solve", &a));
    }
}
