use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// Envelope printed by every subcommand.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    #[serde(flatten)]
    pub results: Map<String, Value>,
    pub timing_ms: f64,
}

pub fn digest(input: &str) -> String {
    hex::encode(Sha256::digest(input.as_bytes()))
}

pub struct Timer(Instant);

impl Timer {
    pub fn start() -> Self {
        Timer(Instant::now())
    }

    pub fn finish<T: Serialize>(self, command: &str, input: &str, results: &T) -> Report {
        let value = serde_json::to_value(results).expect("report values serialize");
        let results = match value {
            Value::Object(map) => map,
            other => {
                let mut map = Map::new();
                map.insert("result".into(), other);
                map
            }
        };
        Report {
            command: command.to_string(),
            input_digest: digest(input),
            results,
            timing_ms: self.0.elapsed().as_secs_f64() * 1e3,
        }
    }
}
