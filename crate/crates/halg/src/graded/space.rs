use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::limits::limits;
use crate::error::{HalgError, Result};

/// A basis vector, addressed by degree and position within that degree.
///
/// The owning space is tracked by context rather than stored here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisIndex {
    pub degree: i32,
    pub index: usize,
}

impl BasisIndex {
    pub const fn new(degree: i32, index: usize) -> Self {
        BasisIndex { degree, index }
    }

    pub fn shifted(self, by: i32) -> Self {
        BasisIndex { degree: self.degree + by, index: self.index }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.degree, self.index)
    }
}

/// Finite-dimensional ℤ-graded vector space with named basis vectors.
///
/// Equality compares the degree/dimension table only; names and labels are
/// descriptive.
#[derive(Clone, Debug)]
pub struct GradedSpace {
    name: String,
    dims: BTreeMap<i32, usize>,
    labels: BTreeMap<i32, Vec<String>>,
}

impl PartialEq for GradedSpace {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims
    }
}

impl Eq for GradedSpace {}

impl GradedSpace {
    pub fn new(name: &str, dims: impl IntoIterator<Item = (i32, usize)>) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (d, n) in dims {
            limits().check_degree(d)?;
            if n > 0 {
                *table.entry(d).or_insert(0) += n;
            }
        }
        let labels = table
            .iter()
            .map(|(&d, &n)| (d, (0..n).map(|i| default_label(name, d, i)).collect()))
            .collect();
        Ok(GradedSpace { name: name.to_string(), dims: table, labels })
    }

    /// The space concentrated in degree 0.
    pub fn ungraded(name: &str, dim: usize) -> Self {
        Self::new(name, [(0, dim)]).expect("degree 0 is always in the window")
    }

    pub fn with_labels(mut self, degree: i32, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim(degree) {
            return Err(HalgError::LengthMismatch { expected: self.dim(degree), got: labels.len() });
        }
        if !labels.is_empty() {
            self.labels.insert(degree, labels);
        }
        Ok(self)
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dims(&self) -> &BTreeMap<i32, usize> {
        &self.dims
    }

    pub fn dim(&self, degree: i32) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.dims.keys().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.dims.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.dims.keys().next_back().copied()
    }

    pub fn has_degree(&self, degree: i32) -> bool {
        self.dims.contains_key(&degree)
    }

    pub fn contains(&self, b: &BasisIndex) -> bool {
        b.index < self.dim(b.degree)
    }

    pub fn check(&self, b: &BasisIndex) -> Result<()> {
        if self.contains(b) {
            Ok(())
        } else {
            Err(HalgError::InvalidBasis(format!("{b} not in space {}", self.name)))
        }
    }

    pub fn basis_of_degree(&self, degree: i32) -> impl Iterator<Item = BasisIndex> {
        (0..self.dim(degree)).map(move |i| BasisIndex::new(degree, i))
    }

    /// All basis vectors, ordered by (degree, index).
    pub fn basis(&self) -> Vec<BasisIndex> {
        self.dims
            .iter()
            .flat_map(|(&d, &n)| (0..n).map(move |i| BasisIndex::new(d, i)))
            .collect()
    }

    /// Position of `b` in [`GradedSpace::basis`].
    pub fn flat_index(&self, b: &BasisIndex) -> usize {
        let before: usize = self.dims.range(..b.degree).map(|(_, n)| n).sum();
        before + b.index
    }

    pub fn label(&self, b: &BasisIndex) -> String {
        self.labels
            .get(&b.degree)
            .and_then(|l| l.get(b.index))
            .cloned()
            .unwrap_or_else(|| default_label(&self.name, b.degree, b.index))
    }

    pub fn labels(&self) -> &BTreeMap<i32, Vec<String>> {
        &self.labels
    }

    /// Finds a basis vector by label.
    pub fn find_label(&self, label: &str) -> Option<BasisIndex> {
        self.labels.iter().find_map(|(&d, ls)| {
            ls.iter().position(|l| l == label).map(|i| BasisIndex::new(d, i))
        })
    }

    /// Shifts all degrees by `by`.
    pub fn shift(&self, by: i32, name: &str) -> Result<Self> {
        let mut dims = BTreeMap::new();
        let mut labels = BTreeMap::new();
        for (&d, &n) in &self.dims {
            limits().check_degree(d + by)?;
            dims.insert(d + by, n);
            labels.insert(d + by, self.labels.get(&d).cloned().unwrap_or_default());
        }
        Ok(GradedSpace { name: name.to_string(), dims, labels })
    }

    /// sV: degrees raised by one.
    pub fn suspend(&self) -> Result<Self> {
        self.shift(1, &format!("s{}", self.name))
    }

    pub fn desuspend(&self) -> Result<Self> {
        let name = self.name.strip_prefix('s').map(str::to_string).unwrap_or(format!("s^-1{}", self.name));
        self.shift(-1, &name)
    }

    /// Graded dual: `(V*)_{-d} = (V_d)*`.
    pub fn dual(&self) -> Result<Self> {
        let mut dims = BTreeMap::new();
        let mut labels = BTreeMap::new();
        for (&d, &n) in &self.dims {
            limits().check_degree(-d)?;
            dims.insert(-d, n);
            let ls = self.labels.get(&d).cloned().unwrap_or_default();
            labels.insert(-d, ls.into_iter().map(|l| format!("{l}*")).collect());
        }
        Ok(GradedSpace { name: format!("{}*", self.name), dims, labels })
    }

    /// Direct sum; the second summand's basis is placed after the first's in each degree.
    pub fn direct_sum(&self, other: &Self, name: &str) -> Self {
        let mut dims = self.dims.clone();
        let mut labels = self.labels.clone();
        for (&d, &n) in &other.dims {
            *dims.entry(d).or_insert(0) += n;
            let ls = labels.entry(d).or_default();
            ls.extend(other.labels.get(&d).cloned().unwrap_or_default());
        }
        GradedSpace { name: name.to_string(), dims, labels }
    }
}

fn default_label(name: &str, degree: i32, index: usize) -> String {
    format!("{name}[{degree}:{index}]")
}
