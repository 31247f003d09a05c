//! JSON scenario files.
//!
//! ```json
//! {
//!   "name": "takraw",
//!   "frame": ["F", "L", "R", "B"],
//!   "descriptions": ["front", "left", "right", "back"],
//!   "sources": [
//!     { "name": "left foot moves to front", "focal": ["F"], "bpa": [0.75, 0.55] }
//!   ]
//! }
//! ```
//!
//! `name` and `descriptions` are optional. `bpa[c]` is the weight of the
//! source under condition `c + 1`; every source must list the same number of
//! conditions.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::frame::Frame;
use crate::scenario::{Motion, Scenario};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub frame: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub descriptions: Option<Vec<String>>,
    pub sources: Vec<SourceDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SourceDocument {
    pub name: String,
    pub focal: Vec<String>,
    pub bpa: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("validation error: {0}")]
    Validation(String),
}

impl ScenarioDocument {
    pub fn from_scenario(scenario: &Scenario) -> Self {
        let conditions = scenario.bpa();
        let sources = scenario
            .motions()
            .iter()
            .enumerate()
            .map(|(i, m)| SourceDocument {
                name: m.name.clone(),
                focal: m.direction.labels().into_iter().map(String::from).collect(),
                bpa: conditions.iter().map(|row| row[i]).collect(),
            })
            .collect();
        ScenarioDocument {
            name: scenario.name().map(String::from),
            frame: scenario.frame().labels().to_vec(),
            descriptions: scenario.descriptions().map(<[String]>::to_vec),
            sources,
        }
    }

    pub fn into_scenario(self) -> Result<Scenario, DocumentError> {
        let invalid = |e: crate::Error| DocumentError::Validation(e.to_string());
        if self.sources.is_empty() {
            return Err(DocumentError::Schema("`sources` is empty".into()));
        }
        let conditions = self.sources[0].bpa.len();
        if conditions == 0 {
            return Err(DocumentError::Schema(format!(
                "source `{}` has an empty `bpa` list",
                self.sources[0].name
            )));
        }
        if let Some(ragged) = self.sources.iter().find(|s| s.bpa.len() != conditions) {
            return Err(DocumentError::Schema(format!(
                "source `{}` lists {} conditions, expected {conditions}",
                ragged.name,
                ragged.bpa.len()
            )));
        }

        let frame = Frame::new(self.frame).map_err(invalid)?;
        let mut seen = HashSet::new();
        let mut motions = Vec::with_capacity(self.sources.len());
        for source in &self.sources {
            if !seen.insert(source.name.as_str()) {
                return Err(DocumentError::Validation(format!(
                    "duplicate source name `{}`",
                    source.name
                )));
            }
            let direction = frame.subset_of(&source.focal).map_err(invalid)?;
            let motion = Motion::new(source.name.clone(), direction)
                .map_err(|e| DocumentError::Validation(format!("source `{}`: {e}", source.name)))?;
            motions.push(motion);
        }
        let bpa = (0..conditions)
            .map(|c| self.sources.iter().map(|s| s.bpa[c]).collect())
            .collect();
        let mut scenario = Scenario::new(frame, motions, bpa).map_err(invalid)?;
        if let Some(name) = self.name {
            scenario = scenario.with_name(name);
        }
        if let Some(desc) = self.descriptions {
            scenario = scenario.with_descriptions(desc).map_err(invalid)?;
        }
        Ok(scenario)
    }
}

/// Parses and validates a scenario document.
pub fn parse_scenario(text: &str) -> Result<Scenario, DocumentError> {
    let doc: ScenarioDocument = serde_json::from_str(text).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Data => DocumentError::Schema(e.to_string()),
            Category::Syntax | Category::Eof | Category::Io => DocumentError::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            },
        }
    })?;
    doc.into_scenario()
}

/// Canonical pretty-printed document, newline terminated.
pub fn emit_scenario(scenario: &Scenario) -> String {
    let mut text = serde_json::to_string_pretty(&ScenarioDocument::from_scenario(scenario))
        .expect("scenario documents always serialize");
    text.push('\n');
    text
}

/// SHA-256 of the canonical document, hex encoded.
pub fn scenario_hash(scenario: &Scenario) -> String {
    hex::encode(Sha256::digest(emit_scenario(scenario).as_bytes()))
}
