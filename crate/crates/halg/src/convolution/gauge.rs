//! Gauge flows on Maurer-Cartan elements: the formal curve `α(t) = Σ t^k/k! e^k`
//! solving `dα/dt = V_r(α)` from a degree-0 direction `r`.

use std::fmt::Debug;

use super::{ConvElement, Convolution};
use crate::error::{HalgError, Result};
use crate::graded::scalar::{self, Scalar};
use crate::graded::suspension::triangular_sign;
use crate::graded::Vector;
use crate::infinity::{InftyStructure, Kind};

/// A Lie∞ algebra with brackets `ℓ_k` of degree `k − 2`.
pub trait LInfinity {
    type Elem: Clone + Debug + PartialEq;

    fn zero(&self, degree: i32) -> Self::Elem;
    fn bracket(&self, args: &[&Self::Elem]) -> Result<Self::Elem>;
    /// `acc += c·x`.
    fn accumulate(&self, acc: &mut Self::Elem, x: &Self::Elem, c: &Scalar) -> Result<()>;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    /// Largest `k` with `ℓ_k` possibly nonzero.
    fn max_arity(&self) -> usize;
}

impl LInfinity for InftyStructure {
    type Elem = Vector;

    fn zero(&self, _: i32) -> Vector {
        Vector::new()
    }

    fn bracket(&self, args: &[&Vector]) -> Result<Vector> {
        if self.kind() != Kind::Lie {
            return Err(HalgError::FlavorMismatch("gauge flows need a Lie∞ algebra".into()));
        }
        match InftyStructure::bracket(self, args.len()) {
            Some(l) => l.apply(&args.iter().map(|&v| v.clone()).collect::<Vec<_>>()),
            None => Ok(Vector::new()),
        }
    }

    fn accumulate(&self, acc: &mut Vector, x: &Vector, c: &Scalar) -> Result<()> {
        acc.add_scaled(x, c);
        Ok(())
    }

    fn is_zero(&self, x: &Vector) -> bool {
        x.is_zero()
    }

    fn max_arity(&self) -> usize {
        self.brackets().keys().copied().max().unwrap_or(0)
    }
}

impl LInfinity for Convolution {
    type Elem = ConvElement;

    fn zero(&self, degree: i32) -> ConvElement {
        ConvElement::zero(degree)
    }

    fn bracket(&self, args: &[&ConvElement]) -> Result<ConvElement> {
        Convolution::bracket(self, args)
    }

    fn accumulate(&self, acc: &mut ConvElement, x: &ConvElement, c: &Scalar) -> Result<()> {
        acc.add_scaled(x, c)
    }

    fn is_zero(&self, x: &ConvElement) -> bool {
        x.is_zero()
    }

    fn max_arity(&self) -> usize {
        self.target().brackets().keys().copied().max().unwrap_or(1)
    }
}

/// Normalization of the brackets an algebra reports. The flow is written with
/// Getzler brackets `ℓ^G_k = (−1)^{k(k−1)/2} ℓ_k`, in which the MC equation
/// reads `Σ ℓ^G_k(α^k)/k! = 0`; Lada-Stasheff brackets are converted first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketConvention {
    Getzler,
    LadaStasheff,
}

impl BracketConvention {
    pub fn name(self) -> &'static str {
        match self {
            BracketConvention::Getzler => "getzler",
            BracketConvention::LadaStasheff => "lada-stasheff",
        }
    }

    fn sign(self, k: usize) -> i32 {
        match self {
            BracketConvention::Getzler => 1,
            BracketConvention::LadaStasheff => triangular_sign(k),
        }
    }
}

fn normalized<L: LInfinity>(alg: &L, convention: BracketConvention, args: &[&L::Elem]) -> Result<L::Elem> {
    let value = alg.bracket(args)?;
    let mut out = alg.zero(-1);
    alg.accumulate(&mut out, &value, &scalar::from_sign(convention.sign(args.len())))?;
    Ok(out)
}

/// `Σ_{k≥1} (1/k!) ℓ^G_k(α, …, α)`, zero exactly on Maurer-Cartan elements.
pub fn mc_curvature<L: LInfinity>(alg: &L, convention: BracketConvention, alpha: &L::Elem) -> Result<L::Elem> {
    let mut out = alg.zero(-2);
    for k in 1..=alg.max_arity() {
        let value = normalized(alg, convention, &vec![alpha; k])?;
        alg.accumulate(&mut out, &value, &(scalar::one() / scalar::factorial(k)))?;
    }
    Ok(out)
}

/// `V_r(α) = −Σ_{k≥0} (1/k!) ℓ^G_{k+1}(α, …, α, r)`.
pub fn gauge_field<L: LInfinity>(alg: &L, convention: BracketConvention, alpha: &L::Elem, r: &L::Elem) -> Result<L::Elem> {
    let mut out = alg.zero(-1);
    for k in 0..alg.max_arity() {
        let mut args = vec![alpha; k];
        args.push(r);
        let value = normalized(alg, convention, &args)?;
        alg.accumulate(&mut out, &value, &-(scalar::one() / scalar::factorial(k)))?;
    }
    Ok(out)
}

/// The Taylor coefficients `e^0 = α, e^1, …` of a gauge flow.
#[derive(Clone, Debug)]
pub struct GaugeCurve<E> {
    convention: BracketConvention,
    direction: E,
    coefficients: Vec<E>,
}

impl<E: Clone> GaugeCurve<E> {
    pub fn convention(&self) -> BracketConvention {
        self.convention
    }

    pub fn direction(&self) -> &E {
        &self.direction
    }

    pub fn base(&self) -> &E {
        &self.coefficients[0]
    }

    /// `e^0, …, e^{K−1}`; every later coefficient vanishes.
    pub fn coefficients(&self) -> &[E] {
        &self.coefficients
    }

    /// `α(t) = Σ_k t^k/k! e^k`.
    pub fn value<L: LInfinity<Elem = E>>(&self, alg: &L, t: &Scalar) -> Result<E> {
        self.series(alg, t, 0)
    }

    /// `dα/dt = Σ_k t^k/k! e^{k+1}`.
    pub fn velocity<L: LInfinity<Elem = E>>(&self, alg: &L, t: &Scalar) -> Result<E> {
        self.series(alg, t, 1)
    }

    fn series<L: LInfinity<Elem = E>>(&self, alg: &L, t: &Scalar, shift: usize) -> Result<E> {
        let mut out = alg.zero(-1);
        let mut power = scalar::one();
        for (k, e) in self.coefficients.iter().skip(shift).enumerate() {
            alg.accumulate(&mut out, e, &(&power / scalar::factorial(k)))?;
            power *= t;
        }
        Ok(out)
    }
}

/// Compositions of `total` into `parts` nonnegative summands.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The gauge flow of `α` along `r`:
/// `e^{i+1} = −Σ_n (1/n!) Σ_{k_1+…+k_n=i} (i!/Π k_j!) ℓ^G_{n+1}(e^{k_1}, …, e^{k_n}, r)`.
///
/// Fails unless `e^order` vanishes, so that the returned curve is exact.
pub fn gauge_curve<L: LInfinity>(
    alg: &L,
    convention: BracketConvention,
    alpha: &L::Elem,
    r: &L::Elem,
    order: usize,
) -> Result<GaugeCurve<L::Elem>> {
    let mut coefficients = vec![alpha.clone()];
    for i in 0..order {
        let mut next = alg.zero(-1);
        for n in 0..alg.max_arity() {
            let weight = scalar::factorial(i) / scalar::factorial(n);
            for ks in compositions(i, n) {
                let mut args: Vec<&L::Elem> = ks.iter().map(|&k| &coefficients[k]).collect();
                args.push(r);
                let value = normalized(alg, convention, &args)?;
                let c = ks.iter().fold(weight.clone(), |c, &k| c / scalar::factorial(k));
                alg.accumulate(&mut next, &value, &-c)?;
            }
        }
        if alg.is_zero(&next) {
            return Ok(GaugeCurve { convention, direction: r.clone(), coefficients });
        }
        coefficients.push(next);
    }
    Err(HalgError::NoStabilisation(order))
}
