use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::CliError;

/// What every subcommand prints: its inputs, outputs (flattened into the top
/// level), the tolerances in force and, unless reproducible, the wall time.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    #[serde(flatten)]
    pub outputs: Map<String, Value>,
    pub tolerances: BTreeMap<&'static str, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
}

pub struct Recorder {
    command: String,
    started: Instant,
    inputs: Map<String, Value>,
    outputs: Map<String, Value>,
    tolerances: BTreeMap<&'static str, f64>,
}

fn to_value<T: Serialize>(value: &T) -> Result<Value, CliError> {
    serde_json::to_value(value).map_err(|e| CliError::Internal(e.to_string()))
}

impl Recorder {
    pub fn new(command: &str) -> Self {
        Recorder {
            command: command.to_string(),
            started: Instant::now(),
            inputs: Map::new(),
            outputs: Map::new(),
            tolerances: BTreeMap::new(),
        }
    }

    pub fn input<T: Serialize>(&mut self, key: &str, value: &T) -> Result<&mut Self, CliError> {
        self.inputs.insert(key.to_string(), to_value(value)?);
        Ok(self)
    }

    pub fn output<T: Serialize>(&mut self, key: &str, value: &T) -> Result<&mut Self, CliError> {
        self.outputs.insert(key.to_string(), to_value(value)?);
        Ok(self)
    }

    /// Merges the fields of a serialized struct into the outputs.
    pub fn outputs_from<T: Serialize>(&mut self, value: &T) -> Result<&mut Self, CliError> {
        match to_value(value)? {
            Value::Object(map) => self.outputs.extend(map),
            other => return Err(CliError::Internal(format!("expected an object, got {other}"))),
        }
        Ok(self)
    }

    pub fn tolerance(&mut self, key: &'static str, value: f64) -> &mut Self {
        self.tolerances.insert(key, value);
        self
    }

    pub fn finish(&mut self, reproducible: bool) -> Result<String, CliError> {
        let report = RunReport {
            command: self.command.clone(),
            inputs: Value::Object(std::mem::take(&mut self.inputs)),
            outputs: std::mem::take(&mut self.outputs),
            tolerances: std::mem::take(&mut self.tolerances),
            wall_time_s: (!reproducible).then(|| self.started.elapsed().as_secs_f64()),
        };
        serde_json::to_string_pretty(&report).map_err(|e| CliError::Internal(e.to_string()))
    }
}
