//! Per-identity residual tables shared by every checker.

use std::collections::BTreeMap;

use crate::graded::{BasisIndex, MultiMap, Vector};

/// A nonzero residual on one basis input tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    pub inputs: Vec<BasisIndex>,
    pub value: Vector,
}

/// Results for one identity family, e.g. the arity-3 higher Jacobi identity.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct FamilyResult {
    pub name: String,
    /// Basis tuples on which the identity was evaluated.
    pub evaluated: usize,
    pub residuals: Vec<Residual>,
}

impl FamilyResult {
    pub fn passed(&self) -> bool {
        self.residuals.is_empty()
    }

    /// Residual table keyed by input tuple.
    pub fn table(&self) -> BTreeMap<Vec<BasisIndex>, Vector> {
        self.residuals.iter().map(|r| (r.inputs.clone(), r.value.clone())).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct IdentityReport {
    pub title: String,
    pub families: Vec<FamilyResult>,
    pub warnings: Vec<String>,
}

impl IdentityReport {
    pub fn new(title: &str) -> Self {
        IdentityReport { title: title.to_string(), ..Default::default() }
    }

    pub fn family_mut(&mut self, name: &str) -> &mut FamilyResult {
        if let Some(i) = self.families.iter().position(|f| f.name == name) {
            return &mut self.families[i];
        }
        self.families.push(FamilyResult { name: name.to_string(), ..Default::default() });
        self.families.last_mut().unwrap()
    }

    pub fn family(&self, name: &str) -> Option<&FamilyResult> {
        self.families.iter().find(|f| f.name == name)
    }

    /// Declares a family even if nothing gets evaluated in it.
    pub fn touch(&mut self, name: &str) {
        self.family_mut(name);
    }

    pub fn record(&mut self, name: &str, inputs: &[BasisIndex], residual: Vector) {
        let fam = self.family_mut(name);
        fam.evaluated += 1;
        if !residual.is_zero() {
            fam.residuals.push(Residual { inputs: inputs.to_vec(), value: residual });
        }
    }

    /// Records every nonzero entry of a residual map (evaluated = relevant inputs).
    pub fn record_map(&mut self, name: &str, residual: &MultiMap) {
        let fam = self.family_mut(name);
        fam.evaluated += residual.relevant_inputs().len();
        for (k, v) in residual.entries() {
            fam.residuals.push(Residual { inputs: k.clone(), value: v.clone() });
        }
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyResult::passed)
    }

    pub fn family_passed(&self, name: &str) -> bool {
        self.family(name).map_or(true, FamilyResult::passed)
    }

    pub fn failure_count(&self) -> usize {
        self.families.iter().map(|f| f.residuals.len()).sum()
    }

    pub fn failed_families(&self) -> Vec<&str> {
        self.families.iter().filter(|f| !f.passed()).map(|f| f.name.as_str()).collect()
    }

    /// Appends another report's families under a prefix.
    pub fn absorb(&mut self, prefix: &str, other: IdentityReport) {
        for mut f in other.families {
            f.name = format!("{prefix}{}", f.name);
            self.families.push(f);
        }
        self.warnings.extend(other.warnings);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::scalar::int;

    #[test]
    fn records_and_passes() {
        let mut r = IdentityReport::new("t");
        let b = BasisIndex::new(0, 0);
        r.record("n=1", &[b], Vector::new());
        assert!(r.passed());
        r.record("n=2", &[b, b], Vector::single(b, int(2)));
        assert!(!r.passed());
        assert_eq!(r.failed_families(), vec!["n=2"]);
        assert_eq!(r.family("n=1").unwrap().evaluated, 1);
    }
}
