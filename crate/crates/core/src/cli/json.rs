//! Versioned JSON documents. Integers are decimal strings so consumers never
//! truncate them to 64 bits.

use serde::{Deserialize, Serialize};

use crate::coincidence::Isometry;
use crate::gaussian::GaussianInt;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<I, R> {
    pub schema_version: String,
    pub command: String,
    pub inputs: I,
    pub results: R,
}

impl<I: Serialize, R: Serialize> Envelope<I, R> {
    pub fn new(command: &str, inputs: I, results: R) -> Self {
        Envelope { schema_version: SCHEMA_VERSION.to_string(), command: command.to_string(), inputs, results }
    }

    pub fn render(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("documents are plain data");
        out.push('\n');
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorInputs {
    pub z: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePower {
    pub prime: String,
    pub norm: String,
    pub exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorResults {
    pub norm: String,
    pub unit: String,
    pub factors: Vec<PrimePower>,
    pub rendered: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationsInputs {
    pub sigma: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsometryRecord {
    pub isometry: String,
    pub sigma: String,
    pub numerator: String,
    pub unit: String,
    pub reflected: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub translation: Option<String>,
}

impl IsometryRecord {
    pub fn new(s: &Isometry, translation: Option<&GaussianInt>) -> Self {
        IsometryRecord {
            isometry: s.to_string(),
            sigma: s.sigma().to_string(),
            numerator: s.z().to_string(),
            unit: s.eps().to_string(),
            reflected: s.is_reflection(),
            translation: translation.map(ToString::to_string),
        }
    }
}

pub type RotationsDocument = Envelope<RotationsInputs, Vec<IsometryRecord>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountInputs {
    pub shift: String,
    pub limit: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub m: String,
    pub f_x: String,
    pub fhat_x: String,
    #[serde(rename = "Fhat_x")]
    pub big_fhat_x: String,
    pub cosets: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureInputs {
    pub shift: String,
    pub bound: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub first: String,
    pub second: String,
    pub product: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureResults {
    pub is_group: bool,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checked_up_to: Option<String>,
    pub note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reflection: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyInputs {
    pub shift: String,
    pub sigma_max: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyMismatch {
    pub isometry: String,
    pub analytic: bool,
    pub oracle: String,
    pub coset: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyResults {
    pub checked: String,
    pub members: String,
    pub passed: bool,
    pub mismatches: Vec<VerifyMismatch>,
}
