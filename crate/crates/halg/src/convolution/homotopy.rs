//! 2-term homotopies as Maurer-Cartan elements over `Δ¹`, and their vertical
//! composite read off a Maurer-Cartan element over `Δ²`.

use super::forms::{PolyForm, Simplex};
use super::tensor::{SimplexAlgebra, SimplexTensor};
use super::Convolution;
use crate::error::{HalgError, Result};
use crate::graded::scalar;
use crate::two_term::relations::check_two_term_morphism;
use crate::two_term::{TwoTermHomotopy, TwoTermMorphism};

/// The convolution algebra in which a homotopy between 2-term morphisms lives.
pub fn homotopy_convolution(h: &TwoTermHomotopy) -> Result<Convolution> {
    Convolution::new(h.source().source().structure(), h.source().target().structure())
}

fn affine(vars: usize, constant: i64, coefficients: &[i64]) -> PolyForm {
    let mut w = PolyForm::constant(vars, scalar::int(constant));
    for (j, &c) in coefficients.iter().enumerate() {
        w = w.plus(&PolyForm::coordinate(vars, j + 1).scaled(&scalar::int(c)));
    }
    w
}

/// The Maurer-Cartan element over `Δ¹` whose extracted parameter is `θ_1`.
///
/// `β` vanishes at vertex `i` and equals `(−1)^i θ_1 s^{-1}` at the other
/// vertex; `α = B_1^i^{-1}(μ, (δ+d)β)` with `μ` the morphism at vertex `i`.
pub fn lift_homotopy(conv: &Convolution, h: &TwoTermHomotopy, i: usize) -> Result<SimplexTensor> {
    let theta = conv.parameter_to_conv(h.theta())?;
    let (profile, endpoint) = match i {
        0 => (affine(1, 0, &[1]), h.source()),
        1 => (affine(1, -1, &[1]), h.target()),
        _ => return Err(HalgError::Invalid(format!("Δ¹ has no vertex {i}"))),
    };
    let beta = SimplexTensor::tensor(Simplex::Interval, &theta, &profile)?;
    let mu = conv.morphism_to_mc(&endpoint.to_infty()?)?;
    let alg = SimplexAlgebra::new(conv, Simplex::Interval);
    let (alpha, _) = alg.b_inverse(&mu, &alg.differential(&beta)?, i)?;
    Ok(alpha)
}

fn endpoint(conv: &Convolution, alpha: &SimplexTensor, vertex: usize) -> Result<TwoTermMorphism> {
    let m = TwoTermMorphism::from_infty(&conv.mc_to_morphism(&alpha.evaluate(vertex)?)?)?;
    let report = check_two_term_morphism(&m);
    if !report.passed() {
        return Err(HalgError::EndpointMismatch(format!(
            "vertex {vertex} is not a 2-term morphism: {:?}",
            report.failed_families()
        )));
    }
    Ok(m)
}

/// `θ_1 = (β(1) − β(0)) s` for `β = h_1^i α`, between the two evaluations of `α`.
pub fn extract_homotopy(conv: &Convolution, alpha: &SimplexTensor, i: usize) -> Result<TwoTermHomotopy> {
    if alpha.simplex() != Simplex::Interval {
        return Err(HalgError::Invalid("homotopies are extracted from Δ¹".into()));
    }
    let f = endpoint(conv, alpha, 0)?;
    let g = endpoint(conv, alpha, 1)?;
    let beta = alpha.contract(i)?;
    let theta = conv.conv_to_parameter(&beta.evaluate(1)?.minus(&beta.evaluate(0)?)?)?;
    TwoTermHomotopy::new(&f, &g, theta)
}

/// The Maurer-Cartan element over `Δ²` with `θ` on edge 01 and `τ` on edge 12.
///
/// `β = −t_0 θ_1 s^{-1} + t_2 τ_1 s^{-1}`, `α` by the closed formula at vertex 1.
pub fn composition_simplex(conv: &Convolution, theta: &TwoTermHomotopy, tau: &TwoTermHomotopy) -> Result<SimplexTensor> {
    if theta.target() != tau.source() {
        return Err(HalgError::EndpointMismatch("vertical composition needs θ.target = τ.source".into()));
    }
    let beta = composition_parameter(conv, theta, tau)?;
    let mu = conv.morphism_to_mc(&theta.target().to_infty()?)?;
    SimplexAlgebra::new(conv, Simplex::Triangle).closed_form(&mu, &beta)
}

/// The affine extension `β'(1 − t_0) + β''(t_2)` of the two edge parameters.
pub fn composition_parameter(conv: &Convolution, theta: &TwoTermHomotopy, tau: &TwoTermHomotopy) -> Result<SimplexTensor> {
    let lower = SimplexTensor::tensor(Simplex::Triangle, &conv.parameter_to_conv(theta.theta())?, &affine(2, -1, &[1, 1]))?;
    let upper = SimplexTensor::tensor(Simplex::Triangle, &conv.parameter_to_conv(tau.theta())?, &affine(2, 0, &[0, 1]))?;
    lower.plus(&upper)
}

/// `τ ∘ θ` read off edge 02 of [`composition_simplex`].
pub fn vcompose_via_simplex(theta: &TwoTermHomotopy, tau: &TwoTermHomotopy) -> Result<TwoTermHomotopy> {
    let conv = homotopy_convolution(theta)?;
    let alpha = composition_simplex(&conv, theta, tau)?;
    extract_homotopy(&conv, &alpha.restrict_to_edge(0, 2)?, 0)
}
