//! JSON envelope shared by every command of the binary.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// `{"command": ..., "params": {...}, <payload fields>, "timings_ms": {...}}`.
///
/// The payload is flattened into the top level so each command keeps its own
/// documented field names. Timings are the only nondeterministic part and
/// are dropped in deterministic mode.
#[derive(Debug, Clone, Serialize)]
pub struct Envelope<T: Serialize> {
    pub command: String,
    pub params: Value,
    #[serde(flatten)]
    pub result: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &str, params: Value, result: T) -> Self {
        Envelope {
            command: command.to_string(),
            params,
            result,
            timings_ms: None,
        }
    }

    pub fn with_timings(mut self, timings: BTreeMap<String, f64>, deterministic: bool) -> Self {
        if !deterministic {
            self.timings_ms = Some(timings);
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn payload_is_flattened_and_timings_optional() {
        let env = Envelope::new("solve", json!({"rows": 2}), json!({"count": 1}))
            .with_timings(BTreeMap::from([("total".into(), 1.5)]), true);
        let v: Value = serde_json::from_str(&env.to_json()).unwrap();
        assert_eq!(v, json!({"command": "solve", "params": {"rows": 2}, "count": 1}));
    }
}
