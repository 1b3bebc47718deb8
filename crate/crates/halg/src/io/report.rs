use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{conventions, Address};
use crate::graded::scalar;
use crate::report::IdentityReport;

/// Residual listings stop after this many entries per family.
pub const RESIDUAL_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualRecord {
    pub inputs: Vec<Address>,
    pub value: Vec<(Address, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub name: String,
    pub passed: bool,
    pub evaluated: usize,
    pub residual_count: usize,
    pub residuals: Vec<ResidualRecord>,
}

/// Machine-readable outcome of one command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub command: String,
    pub conventions: BTreeMap<String, String>,
    pub passed: bool,
    pub families: Vec<FamilyRecord>,
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub outputs: BTreeMap<String, String>,
    pub timing_ms: u128,
}

impl ReportFile {
    pub fn new(command: &str) -> Self {
        ReportFile {
            command: command.to_string(),
            conventions: conventions(),
            passed: true,
            families: Vec::new(),
            warnings: Vec::new(),
            outputs: BTreeMap::new(),
            timing_ms: 0,
        }
    }

    /// Adds the families of `r`, addressing residual inputs in `input_space`
    /// and values in `output_space`.
    pub fn add(&mut self, r: &IdentityReport, input_space: &str, output_space: &str) {
        for f in &r.families {
            let residuals = f
                .residuals
                .iter()
                .take(RESIDUAL_CAP)
                .map(|res| ResidualRecord {
                    inputs: res.inputs.iter().map(|b| (input_space.to_string(), b.degree, b.index)).collect(),
                    value: res.value.iter().map(|(b, c)| ((output_space.to_string(), b.degree, b.index), scalar::format(c))).collect(),
                })
                .collect();
            self.families.push(FamilyRecord {
                name: f.name.clone(),
                passed: f.passed(),
                evaluated: f.evaluated,
                residual_count: f.residuals.len(),
                residuals,
            });
        }
        self.warnings.extend(r.warnings.iter().cloned());
        self.passed = self.families.iter().all(|f| f.passed);
    }

    pub fn fail(&mut self, family: &str, message: String) {
        self.families.push(FamilyRecord { name: family.to_string(), passed: false, evaluated: 1, residual_count: 1, residuals: Vec::new() });
        self.warnings.push(message);
        self.passed = false;
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
