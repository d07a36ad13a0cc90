//! Machine-readable output records. Field names are stable; optional
//! fields are omitted entirely when absent so that emit -> parse -> emit is
//! byte-identical.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsRecord {
    pub k: usize,
    pub d: usize,
    pub m: String,
    pub free: String,
}

/// One function, as emitted by `construct`, `transform`, `ai` and
/// `enumerate`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionRecord {
    pub n: usize,
    pub svv: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sanf: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ai: Option<usize>,
    /// "exact" from the annihilator search, "lower_bound" from a certificate.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ai_kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<ParamsRecord>,
    /// Monomial masks of a witness annihilator, ascending.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<u64>>,
}

impl FunctionRecord {
    pub fn new(n: usize, svv: String) -> Self {
        FunctionRecord {
            n,
            svv,
            sanf: None,
            ai: None,
            ai_kind: None,
            params: None,
            witness: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}

/// Output of `certify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyRecord {
    pub n: usize,
    pub svv: String,
    pub d: usize,
    pub certified: bool,
    pub rank_f: usize,
    pub rank_fc: usize,
    pub rows_f: usize,
    pub rows_fc: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ai: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ai_kind: Option<String>,
}

impl CertifyRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}
