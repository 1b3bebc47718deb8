//! `L ⊗ Ω(Δⁿ)` with the extended brackets `ℒ̄_p`, the contraction `h_n^i`,
//! and the Kan-property bijection `B_n^i` with its inverse.

use std::collections::BTreeMap;

use super::forms::{form_h, restrict_to_edge, FormMonomial, PolyForm, Simplex};
use super::{ConvElement, Convolution};
use crate::error::{HalgError, Result};
use crate::graded::scalar::{self, Scalar};
use crate::graded::suspension::triangular_sign;
use crate::graded::parity;

/// `Σ a_M ⊗ t^e dt_M`, of one total degree `|a_M| − |M|`, over a fixed simplex.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplexTensor {
    simplex: Simplex,
    degree: i32,
    terms: BTreeMap<FormMonomial, ConvElement>,
}

impl SimplexTensor {
    pub fn zero(simplex: Simplex, degree: i32) -> Self {
        SimplexTensor { simplex, degree, terms: BTreeMap::new() }
    }

    /// `a ⊗ 1`.
    pub fn constant(simplex: Simplex, a: &ConvElement) -> Self {
        Self::tensor(simplex, a, &PolyForm::one(simplex.dim())).expect("0-form")
    }

    /// `a ⊗ ω` for a form `ω` of homogeneous degree.
    pub fn tensor(simplex: Simplex, a: &ConvElement, w: &PolyForm) -> Result<Self> {
        if w.vars() != simplex.dim() {
            return Err(HalgError::Invalid("form lives on another simplex".into()));
        }
        let fd = w.degree().unwrap_or(0);
        let mut t = Self::zero(simplex, a.degree() + fd);
        for (m, c) in w.terms().iter() {
            if -(m.form_degree() as i32) != fd {
                return Err(HalgError::Inhomogeneous("form of mixed degree".into()));
            }
            t.add_term(m.clone(), &a.scaled(c))?;
        }
        Ok(t)
    }

    pub fn simplex(&self) -> Simplex {
        self.simplex
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<FormMonomial, ConvElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: FormMonomial, a: &ConvElement) -> Result<()> {
        if a.is_zero() {
            return Ok(());
        }
        let expected = self.degree + m.form_degree() as i32;
        if a.degree() != expected {
            return Err(HalgError::Inhomogeneous(format!("coefficient of degree {} where {expected} is needed", a.degree())));
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(|| ConvElement::zero(expected));
        slot.add_scaled(a, &scalar::one())?;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &SimplexTensor, c: &Scalar) -> Result<()> {
        if other.is_zero() {
            return Ok(());
        }
        if other.simplex != self.simplex || (other.degree != self.degree && !self.is_zero()) {
            return Err(HalgError::Inhomogeneous("adding tensors of different shape".into()));
        }
        self.degree = other.degree;
        for (m, a) in &other.terms {
            self.add_term(m.clone(), &a.scaled(c))?;
        }
        Ok(())
    }

    pub fn plus(&self, other: &SimplexTensor) -> Result<Self> {
        let mut r = self.clone();
        r.add_scaled(other, &scalar::one())?;
        Ok(r)
    }

    pub fn minus(&self, other: &SimplexTensor) -> Result<Self> {
        let mut r = self.clone();
        r.add_scaled(other, &scalar::int(-1))?;
        Ok(r)
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut r = Self::zero(self.simplex, self.degree);
        r.add_scaled(self, c).expect("same shape");
        r
    }

    /// `ε_n^i`: sum of the 0-form coefficients evaluated at vertex `i`.
    pub fn evaluate(&self, i: usize) -> Result<ConvElement> {
        let point = self.simplex.vertex(i)?;
        let mut out = ConvElement::zero(self.degree);
        for (m, a) in &self.terms {
            let value = PolyForm::monomial(m.clone(), scalar::one()).evaluate(&point);
            if m.form_degree() == 0 {
                out.add_scaled(a, &value)?;
            }
        }
        Ok(out)
    }

    /// `h(a ⊗ ω) = (−1)^{|a|} a ⊗ h_n^i ω`.
    pub fn contract(&self, i: usize) -> Result<Self> {
        let mut out = Self::zero(self.simplex, self.degree + 1);
        for (m, a) in &self.terms {
            let hw = form_h(self.simplex, i, &PolyForm::monomial(m.clone(), scalar::one()))?;
            let sign = scalar::from_sign(parity(a.degree() as i64));
            for (k, c) in hw.terms().iter() {
                out.add_term(k.clone(), &a.scaled(&(c * &sign)))?;
            }
        }
        Ok(out)
    }

    /// Pullback to the edge `ab` of `Δ²`.
    pub fn restrict_to_edge(&self, a: usize, b: usize) -> Result<Self> {
        if self.simplex != Simplex::Triangle {
            return Err(HalgError::Invalid("only tensors on Δ² restrict to edges".into()));
        }
        let mut out = Self::zero(Simplex::Interval, self.degree);
        for (m, x) in &self.terms {
            let r = restrict_to_edge(&PolyForm::monomial(m.clone(), scalar::one()), a, b)?;
            for (k, c) in r.terms().iter() {
                out.add_term(k.clone(), &x.scaled(c))?;
            }
        }
        Ok(out)
    }

    /// `δ ⊗ id`.
    pub fn apply_delta(&self, conv: &Convolution) -> Result<Self> {
        let mut out = Self::zero(self.simplex, self.degree - 1);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), &conv.differential(a)?)?;
        }
        Ok(out)
    }
}

/// `L ⊗ Ω(Δⁿ)` over a convolution algebra.
pub struct SimplexAlgebra<'a> {
    pub conv: &'a Convolution,
    pub simplex: Simplex,
}

impl<'a> SimplexAlgebra<'a> {
    pub fn new(conv: &'a Convolution, simplex: Simplex) -> Self {
        SimplexAlgebra { conv, simplex }
    }

    /// `ℒ̄_1(a ⊗ ω) = δa ⊗ ω + (−1)^{|a|} a ⊗ dω`.
    pub fn differential(&self, x: &SimplexTensor) -> Result<SimplexTensor> {
        let mut out = x.apply_delta(self.conv)?;
        for (m, a) in &x.terms {
            let dw = PolyForm::monomial(m.clone(), scalar::one()).d();
            let sign = scalar::from_sign(parity(a.degree() as i64));
            for (k, c) in dw.terms().iter() {
                out.add_term(k.clone(), &a.scaled(&(c * &sign)))?;
            }
        }
        Ok(out)
    }

    /// `ℒ̄_p(a_1 ⊗ ω_1, …) = (−1)^{Σ_{j<k} |ω_j||a_k|} ℒ_p(a_1, …) ⊗ ω_1 ∧ … ∧ ω_p`.
    pub fn bracket(&self, args: &[&SimplexTensor]) -> Result<SimplexTensor> {
        let p = args.len();
        if p == 1 {
            return self.differential(args[0]);
        }
        let degree = args.iter().map(|x| x.degree).sum::<i32>() + p as i32 - 2;
        let mut out = SimplexTensor::zero(self.simplex, degree);
        let lists: Vec<Vec<(&FormMonomial, &ConvElement)>> = args.iter().map(|x| x.terms.iter().collect()).collect();
        let mut pick = vec![0usize; p];
        if lists.iter().any(Vec::is_empty) {
            return Ok(out);
        }
        loop {
            let mut form = PolyForm::one(self.simplex.dim());
            let mut e: i64 = 0;
            let mut form_before: i64 = 0;
            let mut elems = Vec::with_capacity(p);
            for (j, &k) in pick.iter().enumerate() {
                let (m, a) = lists[j][k];
                e += form_before * a.degree() as i64;
                form_before += m.form_degree() as i64;
                form = form.wedge(&PolyForm::monomial(m.clone(), scalar::one()))?;
                elems.push(a);
            }
            if !form.is_zero() {
                let value = self.conv.bracket(&elems)?;
                let sign = scalar::from_sign(parity(e));
                for (k, c) in form.terms().iter() {
                    out.add_term(k.clone(), &value.scaled(&(c * &sign)))?;
                }
            }
            // next index tuple
            let mut j = p;
            loop {
                if j == 0 {
                    return Ok(out);
                }
                j -= 1;
                pick[j] += 1;
                if pick[j] < lists[j].len() {
                    break;
                }
                pick[j] = 0;
            }
        }
    }

    /// `R̄(α) = Σ_{p≥2} (1/p!) (−1)^{p(p−1)/2} ℒ̄_p(α, …, α)`.
    pub fn curvature(&self, alpha: &SimplexTensor) -> Result<SimplexTensor> {
        let mut out = SimplexTensor::zero(self.simplex, alpha.degree * 2);
        let top = self.conv.target().brackets().keys().copied().max().unwrap_or(1);
        if alpha.degree % 2 == 0 {
            for p in 2..=top {
                let w = scalar::signed(&(scalar::one() / scalar::factorial(p)), triangular_sign(p));
                out.add_scaled(&self.bracket(&vec![alpha; p])?, &w)?;
            }
            return Ok(out);
        }
        // Odd terms commute under ℒ̄_p, so each multiset of terms is visited once.
        let singles: Vec<SimplexTensor> = alpha
            .terms
            .iter()
            .map(|(m, a)| {
                let mut t = SimplexTensor::zero(self.simplex, alpha.degree);
                t.terms.insert(m.clone(), a.clone());
                t
            })
            .collect();
        for p in 2..=top {
            if self.conv.target().bracket(p).is_none() {
                continue;
            }
            for pick in multisets(singles.len(), p) {
                let mut w = scalar::from_sign(triangular_sign(p));
                let mut run = 1;
                for j in 1..=p {
                    if j < p && pick[j] == pick[j - 1] {
                        run += 1;
                    } else {
                        w /= scalar::factorial(run);
                        run = 1;
                    }
                }
                let args: Vec<&SimplexTensor> = pick.iter().map(|&j| &singles[j]).collect();
                out.add_scaled(&self.bracket(&args)?, &w)?;
            }
        }
        Ok(out)
    }

    /// `ℒ̄_1 α + R̄(α)`.
    pub fn mc_residual(&self, alpha: &SimplexTensor) -> Result<SimplexTensor> {
        self.differential(alpha)?.plus(&self.curvature(alpha)?)
    }

    /// `B_n^i α = (ε_n^i α, (δ + d) h_n^i α)`.
    pub fn b_forward(&self, alpha: &SimplexTensor, i: usize) -> Result<(ConvElement, SimplexTensor)> {
        Ok((alpha.evaluate(i)?, self.differential(&alpha.contract(i)?)?))
    }

    /// Fixed point of `α ↦ μ + ν − h_n^i R̄(α)` from `α_0 = μ + ν`, with the
    /// number of steps after which it stabilized.
    pub fn b_inverse(&self, mu: &ConvElement, nu: &SimplexTensor, i: usize) -> Result<(SimplexTensor, usize)> {
        let start = SimplexTensor::constant(self.simplex, mu).plus(nu)?;
        let guard = self.conv.arity_bound(-1) + 2;
        let mut current = start.clone();
        for step in 1..=guard {
            let next = start.minus(&self.curvature(&current)?.contract(i)?)?;
            if next == current {
                return Ok((next, step));
            }
            current = next;
        }
        Err(HalgError::NoStabilisation(guard))
    }

    /// `μ + (δ + d)β + ℒ̄^G_2(μ, β) + ½ ℒ̄^G_2(δβ, β)` with `μ` constant, where
    /// `ℒ̄^G_2 = −ℒ̄_2` is the Getzler-normalized bracket.
    pub fn closed_form(&self, mu: &ConvElement, beta: &SimplexTensor) -> Result<SimplexTensor> {
        let m = SimplexTensor::constant(self.simplex, mu);
        let delta_beta = beta.apply_delta(self.conv)?;
        let mut out = m.plus(&self.differential(beta)?)?;
        out.add_scaled(&self.bracket(&[&m, beta])?, &scalar::int(-1))?;
        out.add_scaled(&self.bracket(&[&delta_beta, beta])?, &scalar::frac(-1, 2))?;
        Ok(out)
    }
}

/// Non-decreasing index tuples of length `p` over `0..n`.
fn multisets(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut pick = vec![0usize; p];
    if n == 0 {
        return out;
    }
    loop {
        out.push(pick.clone());
        let Some(j) = (0..p).rev().find(|&j| pick[j] + 1 < n) else { return out };
        let next = pick[j] + 1;
        for slot in &mut pick[j..] {
            *slot = next;
        }
    }
}
