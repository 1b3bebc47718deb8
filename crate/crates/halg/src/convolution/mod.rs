//! The convolution Lie∞ algebra `L(V, W) = Hom(Zin^c(sV), W)` of two
//! Leibniz∞ algebras, whose Maurer-Cartan elements are the ∞-morphisms
//! `V → W`, together with its extension over polynomial forms on `Δ¹`, `Δ²`.

pub mod forms;
pub mod gauge;
pub mod homotopy;
pub mod tensor;

use std::collections::BTreeMap;

use crate::coalgebra::zinbiel::iterated_coproduct;
use crate::coalgebra::{Coderivation, Word};
use crate::error::{HalgError, Result};
use crate::graded::multimap::basis_tuples;
use crate::graded::perm::{all_orders, koszul_of_order};
use crate::graded::scalar::{self, Scalar};
use crate::graded::{parity, BasisIndex, GradedSpace, MultiMap, Vector};
use crate::infinity::{to_codifferential, InftyMorphism, InftyStructure, Kind};

pub use forms::{form_d, form_eval, form_h, FormMonomial, PolyForm, Simplex};
pub use gauge::{gauge_curve, gauge_field, mc_curvature, BracketConvention, GaugeCurve, LInfinity};
pub use homotopy::{composition_simplex, extract_homotopy, homotopy_convolution, lift_homotopy, vcompose_via_simplex};
pub use tensor::{SimplexAlgebra, SimplexTensor};

/// A homogeneous element of `L(V, W)`: components `(sV)^{⊗p} → W` of one degree.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvElement {
    degree: i32,
    components: BTreeMap<usize, MultiMap>,
}

impl ConvElement {
    pub fn zero(degree: i32) -> Self {
        ConvElement { degree, components: BTreeMap::new() }
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn component(&self, p: usize) -> Option<&MultiMap> {
        self.components.get(&p)
    }

    pub fn components(&self) -> &BTreeMap<usize, MultiMap> {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Value on a word of `Zin^c(sV)`.
    pub fn apply_word(&self, w: &[BasisIndex]) -> Vector {
        self.components.get(&w.len()).map(|m| m.apply_basis(w)).unwrap_or_default()
    }

    pub fn add_scaled(&mut self, other: &ConvElement, c: &Scalar) -> Result<()> {
        if other.is_zero() {
            return Ok(());
        }
        if self.degree != other.degree && !self.is_zero() {
            return Err(HalgError::Inhomogeneous(format!("adding degrees {} and {}", self.degree, other.degree)));
        }
        self.degree = other.degree;
        for (p, m) in &other.components {
            match self.components.get_mut(p) {
                Some(mine) => mine.add_scaled(m, c)?,
                None => {
                    self.components.insert(*p, m.scaled(c));
                }
            }
        }
        self.components.retain(|_, m| !m.is_zero());
        Ok(())
    }

    pub fn plus(&self, other: &ConvElement) -> Result<ConvElement> {
        let mut r = self.clone();
        r.add_scaled(other, &scalar::one())?;
        Ok(r)
    }

    pub fn minus(&self, other: &ConvElement) -> Result<ConvElement> {
        let mut r = self.clone();
        r.add_scaled(other, &scalar::int(-1))?;
        Ok(r)
    }

    pub fn scaled(&self, c: &Scalar) -> ConvElement {
        let mut r = ConvElement::zero(self.degree);
        r.add_scaled(self, c).expect("same degree");
        r.degree = self.degree;
        r
    }
}

/// `L(V, W)` with its brackets `ℒ_p`.
#[derive(Clone, Debug)]
pub struct Convolution {
    source: InftyStructure,
    target: InftyStructure,
    suspended: GradedSpace,
    codifferential: Coderivation,
}

impl Convolution {
    pub fn new(source: &InftyStructure, target: &InftyStructure) -> Result<Self> {
        if source.kind() != Kind::Leibniz || target.kind() != Kind::Leibniz {
            return Err(HalgError::FlavorMismatch("the convolution algebra is built from Leibniz∞ data".into()));
        }
        Ok(Convolution {
            source: source.clone(),
            target: target.clone(),
            suspended: source.space().suspend()?,
            codifferential: to_codifferential(source)?,
        })
    }

    pub fn source(&self) -> &InftyStructure {
        &self.source
    }

    pub fn target(&self) -> &InftyStructure {
        &self.target
    }

    pub fn suspended(&self) -> &GradedSpace {
        &self.suspended
    }

    /// Largest arity `p` at which a degree-`d` element can be nonzero.
    pub fn arity_bound(&self, degree: i32) -> usize {
        crate::infinity::codiff::arity_bound(&self.suspended, self.target.space(), |_| degree)
    }

    /// Empty component of arity `p` and degree `d`.
    pub fn blank(&self, p: usize, degree: i32) -> Result<MultiMap> {
        MultiMap::new(&self.suspended, self.target.space(), p, degree)
    }

    /// Element with the given components, pruning those above the arity bound.
    pub fn element(&self, degree: i32, components: impl IntoIterator<Item = MultiMap>) -> Result<ConvElement> {
        let mut e = ConvElement::zero(degree);
        for m in components {
            if m.degree() != degree {
                return Err(HalgError::Inhomogeneous(format!("component of degree {} in an element of degree {degree}", m.degree())));
            }
            if m.source() != &self.suspended || m.target() != self.target.space() {
                return Err(HalgError::SpaceMismatch("component is not a map (sV)^{⊗p} → W".into()));
            }
            if m.arity() > self.arity_bound(degree) && !m.is_zero() {
                return Err(HalgError::Invalid(format!("arity {} exceeds the bound for degree {degree}", m.arity())));
            }
            let mut single = ConvElement::zero(degree);
            if !m.is_zero() {
                single.components.insert(m.arity(), m);
            }
            e.add_scaled(&single, &scalar::one())?;
        }
        Ok(e)
    }

    /// Builds an element of degree `d` from its values on words.
    fn tabulate(&self, degree: i32, mut value: impl FnMut(&[BasisIndex]) -> Result<Vector>) -> Result<ConvElement> {
        let w = self.target.space();
        let mut e = ConvElement::zero(degree);
        for p in 1..=self.arity_bound(degree) {
            let mut m = self.blank(p, degree)?;
            for word in basis_tuples(&self.suspended, p, |s| w.has_degree(s + degree)) {
                m.add_value(&word, &value(&word)?)?;
            }
            if !m.is_zero() {
                e.components.insert(p, m);
            }
        }
        Ok(e)
    }

    /// `ℒ_1 f = m_1 ∘ f + (−1)^{|f|} f ∘ D`.
    pub fn differential(&self, f: &ConvElement) -> Result<ConvElement> {
        let m1 = self.target.bracket(1);
        let sign = scalar::from_sign(parity(f.degree as i64));
        self.tabulate(f.degree - 1, |word| {
            let mut out = Vector::new();
            if let Some(m1) = m1 {
                out = m1.apply(&[f.apply_word(word)])?;
            }
            let dw = self.codifferential.apply_word(&Word(word.to_vec()))?;
            for (u, c) in dw.iter() {
                out.add_scaled(&f.apply_word(&u.0), &(c * &sign));
            }
            Ok(out)
        })
    }

    /// `ℒ_p(f_1, …, f_p)`: `m_p` after the graded antisymmetrization of
    /// `f_{σ(1)} ⊗ … ⊗ f_{σ(p)}` after `Δ^{p−1}`.
    pub fn bracket(&self, args: &[&ConvElement]) -> Result<ConvElement> {
        let p = args.len();
        if p == 0 {
            return Err(HalgError::Invalid("ℒ_0 is not defined".into()));
        }
        if p == 1 {
            return self.differential(args[0]);
        }
        let degree = args.iter().map(|f| f.degree).sum::<i32>() + p as i32 - 2;
        let Some(mp) = self.target.bracket(p) else { return Ok(ConvElement::zero(degree)) };
        let fdeg: Vec<i32> = args.iter().map(|f| f.degree).collect();
        let orders = all_orders(p);
        self.tabulate(degree, |word| {
            let mut out = Vector::new();
            for (blocks, c) in &iterated_coproduct(&Word(word.to_vec()), p) {
                for sigma in orders.iter() {
                    let eps = koszul_of_order(&sigma.order, &fdeg) * sigma.sign;
                    let mut e: i64 = 0;
                    let mut before: i64 = 0;
                    let mut values = Vec::with_capacity(p);
                    for (j, &k) in sigma.order.iter().enumerate() {
                        e += fdeg[k] as i64 * before;
                        before += blocks[j].degree() as i64;
                        values.push(args[k].apply_word(&blocks[j].0));
                    }
                    if values.iter().any(Vector::is_zero) {
                        continue;
                    }
                    let coeff = scalar::signed(c, eps * parity(e));
                    out.add_scaled(&mp.apply(&values)?, &coeff);
                }
            }
            Ok(out)
        })
    }

    /// `Σ_p (1/p!) (−1)^{p(p−1)/2} ℒ_p(α, …, α)` for `|α| = −1`.
    pub fn mc_residual(&self, alpha: &ConvElement) -> Result<ConvElement> {
        if alpha.degree != -1 {
            return Err(HalgError::Inhomogeneous(format!("MC elements have degree −1, got {}", alpha.degree)));
        }
        let mut out = ConvElement::zero(-2);
        let top = self.target.brackets().keys().copied().max().unwrap_or(1);
        for p in 1..=top {
            let args = vec![alpha; p];
            let w = scalar::signed(&(scalar::one() / scalar::factorial(p)), crate::graded::suspension::triangular_sign(p));
            out.add_scaled(&self.bracket(&args)?, &w)?;
        }
        out.degree = -2;
        Ok(out)
    }

    /// `s^{-1}: sV → V` or `s: V → sV` as a unary map.
    fn shift(from: &GradedSpace, to: &GradedSpace, by: i32) -> Result<MultiMap> {
        let mut m = MultiMap::new(from, to, 1, by)?;
        for b in from.basis() {
            m.add_entry(&[b], b.shifted(by), scalar::one())?;
        }
        Ok(m)
    }

    /// `α^p = (−1)^{p(p−1)/2} φ_p ∘ (s^{-1})^{⊗p}`.
    pub fn morphism_to_mc(&self, m: &InftyMorphism) -> Result<ConvElement> {
        if m.source().space() != self.source.space() || m.target().space() != self.target.space() {
            return Err(HalgError::SpaceMismatch("morphism does not match the convolution algebra".into()));
        }
        let down = Self::shift(&self.suspended, self.source.space(), -1)?;
        let mut comps = Vec::new();
        for (&p, phi) in m.components() {
            let alpha = phi.pre_compose(&vec![&down; p])?;
            comps.push(alpha.scaled(&scalar::from_sign(crate::graded::suspension::triangular_sign(p))));
        }
        self.element(-1, comps)
    }

    /// `φ_p = α^p ∘ s^{⊗p}` (the inverse of [`Self::morphism_to_mc`]).
    pub fn mc_to_morphism(&self, alpha: &ConvElement) -> Result<InftyMorphism> {
        if alpha.degree != -1 && !alpha.is_zero() {
            return Err(HalgError::Inhomogeneous(format!("MC elements have degree −1, got {}", alpha.degree)));
        }
        let up = Self::shift(self.source.space(), &self.suspended, 1)?;
        let comps = alpha
            .components
            .iter()
            .map(|(&p, a)| a.pre_compose(&vec![&up; p]))
            .collect::<Result<Vec<_>>>()?;
        InftyMorphism::new(&self.source, &self.target, comps)
    }

    /// `θ_1 ∘ s^{-1}` as a degree-0 element.
    pub fn parameter_to_conv(&self, theta: &MultiMap) -> Result<ConvElement> {
        let down = Self::shift(&self.suspended, self.source.space(), -1)?;
        self.element(0, [theta.pre_compose(&[&down])?])
    }

    /// `β^1 ∘ s` for a degree-0 element `β`.
    pub fn conv_to_parameter(&self, beta: &ConvElement) -> Result<MultiMap> {
        let up = Self::shift(self.source.space(), &self.suspended, 1)?;
        match beta.component(1) {
            Some(b) => b.pre_compose(&[&up]),
            None => MultiMap::new(self.source.space(), self.target.space(), 1, 1),
        }
    }
}

#[cfg(test)]
mod tests;
