//! Envelope for machine-readable command output.

use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub config_hash: String,
    pub version: String,
    pub items: Vec<Value>,
    pub wall_ms: u128,
    #[serde(skip)]
    started: Option<Instant>,
}

impl RunReport {
    pub fn start(command: String, config_hash: String) -> RunReport {
        RunReport {
            command,
            config_hash,
            version: env!("CARGO_PKG_VERSION").to_string(),
            items: Vec::new(),
            wall_ms: 0,
            started: Some(Instant::now()),
        }
    }

    pub fn push(&mut self, item: Value) {
        self.items.push(item);
    }

    pub fn finish(&mut self) {
        if let Some(t) = self.started.take() {
            self.wall_ms = t.elapsed().as_millis();
        }
    }

    /// Writes the report to `out` when given, otherwise to stdout.
    pub fn emit(&self, out: Option<&Path>) -> Result<()> {
        let text = serde_json::to_string_pretty(self).context("serializing report")?;
        match out {
            Some(path) => std::fs::write(path, text + "\n")
                .with_context(|| format!("writing report {}", path.display()))?,
            None => println!("{text}"),
        }
        Ok(())
    }
}
