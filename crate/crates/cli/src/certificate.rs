use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Bumped whenever the certificate layout changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Solve,
    Recognize,
    Generate,
    Gadget,
}

/// Self-contained record of one run: the input itself, its digest, the
/// options that shaped the run and the result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: Kind,
    pub version: u32,
    pub tool_version: String,
    pub input_digest: String,
    pub input: String,
    pub options: Value,
    pub result: Value,
}

impl Certificate {
    pub fn new(kind: Kind, input: String, options: Value, result: Value) -> Self {
        Certificate {
            kind,
            version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest: digest(&input),
            input,
            options,
            result,
        }
    }
}

pub fn digest(text: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(text.as_bytes())))
}
