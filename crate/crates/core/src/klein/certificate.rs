use std::fmt;

use serde::{Deserialize, Serialize};

/// Where the expected value of a checkpoint comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectedSource {
    /// A table shipped in `data/`.
    ReferenceTable,
    /// A second, independent computation.
    DerivedOracle,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Checkpoint {
    pub checkpoint: String,
    pub status: Status,
    pub expected_source: ExpectedSource,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub verdict: String,
    pub certified: bool,
    pub genus: usize,
    pub elapsed_ms: u64,
    pub first_failure: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub checkpoints: Vec<Checkpoint>,
    #[serde(rename = "final")]
    pub summary: Verdict,
}

impl Certificate {
    pub fn certified(&self) -> bool {
        self.summary.certified
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn checkpoint(&self, name: &str) -> Option<&Checkpoint> {
        self.checkpoints.iter().find(|c| c.checkpoint == name)
    }
}

/// Collects checkpoints in order.
#[derive(Default)]
pub(crate) struct Recorder {
    pub(crate) checkpoints: Vec<Checkpoint>,
}

impl Recorder {
    pub(crate) fn record(
        &mut self,
        name: impl Into<String>,
        source: ExpectedSource,
        outcome: crate::error::Result<(bool, String)>,
    ) -> bool {
        let (ok, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checkpoints.push(Checkpoint {
            checkpoint: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected_source: source,
            detail,
        });
        ok
    }

    pub(crate) fn first_failure(&self) -> Option<String> {
        self.checkpoints.iter().find(|c| c.status == Status::Fail).map(|c| c.checkpoint.clone())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checkpoints {
            let status = match c.status {
                Status::Pass => "ok  ",
                Status::Fail => "FAIL",
            };
            writeln!(f, "[{status}] {}: {}", c.checkpoint, c.detail)?;
        }
        writeln!(f, "{}", self.summary.verdict)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let mut r = Recorder::default();
        r.record("a", ExpectedSource::ReferenceTable, Ok((true, "fine".into())));
        r.record("b", ExpectedSource::DerivedOracle, Err(crate::error::Error::DimensionTooSmall(2)));
        let cert = Certificate {
            checkpoints: r.checkpoints.clone(),
            summary: Verdict {
                verdict: "not certified".into(),
                certified: false,
                genus: 2,
                elapsed_ms: 0,
                first_failure: r.first_failure(),
            },
        };
        let v: serde_json::Value = serde_json::from_str(&cert.to_json()).unwrap();
        assert_eq!(v["checkpoints"][0]["status"], "pass");
        assert_eq!(v["checkpoints"][1]["expected_source"], "derived_oracle");
        assert_eq!(v["final"]["first_failure"], "b");
        assert!(v["checkpoints"][1]["detail"].as_str().unwrap().starts_with("error:"));
    }
}
