//! Leibniz∞ and Lie∞ structures and their ∞-morphisms, checked both through
//! the higher Jacobi identities and through the coalgebra picture.

pub mod codiff;
pub mod leibniz;
pub mod lie;

use std::collections::BTreeMap;

use crate::coalgebra::Flavor;
use crate::error::{HalgError, Result};
use crate::graded::limits::limits;
use crate::graded::{GradedSpace, MultiMap};
use crate::report::IdentityReport;

pub use codiff::{
    check_coalgebra_morphism, check_codifferential, coalgebra_morphism, codifferential_square_residual, compose_inf_morphisms, from_codifferential,
    morphism_coalgebra_residual, to_codifferential,
};
pub use leibniz::{check_leibniz_infinity, check_leibniz_morphism};
pub use lie::{check_antisymmetry, check_lie_infinity, check_lie_morphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Leibniz,
    Lie,
}

impl Kind {
    pub fn coalgebra(self) -> Flavor {
        match self {
            Kind::Leibniz => Flavor::Zinbiel,
            Kind::Lie => Flavor::Symmetric,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Leibniz => "leibniz",
            Kind::Lie => "lie",
        }
    }
}

/// Brackets `l_i: V^{⊗i} → V` of degree `i − 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct InftyStructure {
    kind: Kind,
    space: GradedSpace,
    brackets: BTreeMap<usize, MultiMap>,
}

impl InftyStructure {
    pub fn new(kind: Kind, space: &GradedSpace, brackets: impl IntoIterator<Item = MultiMap>) -> Result<Self> {
        let mut table: BTreeMap<usize, MultiMap> = BTreeMap::new();
        for b in brackets {
            let i = b.arity();
            if b.degree() != i as i32 - 2 {
                return Err(HalgError::Inhomogeneous(format!("l_{i} has degree {}, expected {}", b.degree(), i as i32 - 2)));
            }
            if b.source() != space || b.target() != space {
                return Err(HalgError::SpaceMismatch(format!("l_{i} is not an operation on {}", space.name())));
            }
            match table.get_mut(&i) {
                Some(existing) => existing.add_scaled(&b, &crate::graded::scalar::one())?,
                None => {
                    table.insert(i, b);
                }
            }
        }
        Ok(InftyStructure { kind, space: space.clone(), brackets: table })
    }

    /// The structure with no operations.
    pub fn abelian(kind: Kind, space: &GradedSpace) -> Self {
        InftyStructure { kind, space: space.clone(), brackets: BTreeMap::new() }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn bracket(&self, i: usize) -> Option<&MultiMap> {
        self.brackets.get(&i)
    }

    pub fn brackets(&self) -> &BTreeMap<usize, MultiMap> {
        &self.brackets
    }

    /// `l_i`, or the zero map when absent.
    pub fn bracket_or_zero(&self, i: usize) -> MultiMap {
        self.brackets
            .get(&i)
            .cloned()
            .unwrap_or_else(|| MultiMap::new(&self.space, &self.space, i, i as i32 - 2).expect("arity ≥ 1"))
    }

    /// Same brackets read as a structure of the other flavor.
    pub fn with_kind(&self, kind: Kind) -> Self {
        InftyStructure { kind, ..self.clone() }
    }

    /// Number of consecutive degrees spanned by the space.
    pub fn term_count(&self) -> usize {
        match (self.space.min_degree(), self.space.max_degree()) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize,
            _ => 0,
        }
    }

    /// Default identity-index bound `2·(number of terms) + 1`.
    pub fn default_n_max(&self) -> usize {
        2 * self.term_count() + 1
    }

    /// Largest identity index that can be nonzero: an arity-`n` identity sends
    /// degree `≥ n·min` to degree `Σ + n − 3`, which must not exceed `max`.
    pub fn structural_bound(&self) -> Option<usize> {
        let (lo, hi) = (self.space.min_degree()?, self.space.max_degree()?);
        if lo + 1 <= 0 {
            return None;
        }
        Some(((hi + 3) / (lo + 1)) as usize)
    }

    /// Warns when `n_max` stops before an identity that could be nonzero.
    pub fn warn_n_max(&self, n_max: usize, report: &mut IdentityReport) {
        match self.structural_bound() {
            Some(b) if n_max < b => report.warn(format!("n_max {n_max} is below the structural bound {b}")),
            None => report.warn(format!("no structural bound; identities checked up to {n_max}")),
            _ => {}
        }
        if n_max > limits().word_cap {
            if let Some(b) = self.structural_bound() {
                if b > limits().word_cap {
                    report.warn(format!("identities above the word cap {} are not evaluated", limits().word_cap));
                }
            }
        }
    }
}

/// Components `φ_i: V^{⊗i} → W` of degree `i − 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct InftyMorphism {
    source: InftyStructure,
    target: InftyStructure,
    components: BTreeMap<usize, MultiMap>,
}

impl InftyMorphism {
    pub fn new(source: &InftyStructure, target: &InftyStructure, components: impl IntoIterator<Item = MultiMap>) -> Result<Self> {
        if source.kind != target.kind {
            return Err(HalgError::FlavorMismatch("source and target flavors differ".into()));
        }
        let mut table: BTreeMap<usize, MultiMap> = BTreeMap::new();
        for c in components {
            let i = c.arity();
            if c.degree() != i as i32 - 1 {
                return Err(HalgError::Inhomogeneous(format!("φ_{i} has degree {}, expected {}", c.degree(), i as i32 - 1)));
            }
            if c.source() != source.space() || c.target() != target.space() {
                return Err(HalgError::SpaceMismatch(format!("φ_{i} has the wrong source or target")));
            }
            match table.get_mut(&i) {
                Some(existing) => existing.add_scaled(&c, &crate::graded::scalar::one())?,
                None => {
                    table.insert(i, c);
                }
            }
        }
        table.retain(|_, c| !c.is_zero());
        Ok(InftyMorphism { source: source.clone(), target: target.clone(), components: table })
    }

    pub fn identity(s: &InftyStructure) -> Self {
        InftyMorphism::new(s, s, [MultiMap::identity(s.space())]).expect("identity is well formed")
    }

    pub fn kind(&self) -> Kind {
        self.source.kind
    }

    pub fn source(&self) -> &InftyStructure {
        &self.source
    }

    pub fn target(&self) -> &InftyStructure {
        &self.target
    }

    pub fn component(&self, i: usize) -> Option<&MultiMap> {
        self.components.get(&i)
    }

    pub fn components(&self) -> &BTreeMap<usize, MultiMap> {
        &self.components
    }

    pub fn default_n_max(&self) -> usize {
        self.source.default_n_max().max(self.target.default_n_max())
    }
}

/// Runs the bracket-level check matching the structure's flavor.
pub fn check_structure(s: &InftyStructure, n_max: usize) -> Result<IdentityReport> {
    match s.kind {
        Kind::Leibniz => check_leibniz_infinity(s, n_max),
        Kind::Lie => check_lie_infinity(s, n_max),
    }
}

/// Runs the bracket-level morphism check matching the flavor.
pub fn check_inf_morphism(m: &InftyMorphism, n_max: usize) -> Result<IdentityReport> {
    match m.kind() {
        Kind::Leibniz => check_leibniz_morphism(m, n_max),
        Kind::Lie => check_lie_morphism(m, n_max),
    }
}
