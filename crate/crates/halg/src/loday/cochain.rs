//! Loday cochains `Hom(V^{⊗p}, W)`, the Loday coboundary, and the shuffle
//! calculus on scalar-valued cochains.

use std::collections::BTreeMap;

use super::algebra::{Bimodule, LeibnizAlgebra, Representation};
use crate::error::{HalgError, Result};
use crate::graded::limits::limits;
use crate::graded::perm::unshuffles_cached;
use crate::graded::scalar::{self, Scalar};
use crate::graded::{parity, BasisIndex, GradedSpace, Vector};

/// A `p`-linear map `V^{⊗p} → W`, with no symmetry imposed; `p = 0` is a vector of `W`.
#[derive(Clone, Debug, PartialEq)]
pub struct LodayCochain {
    arity: usize,
    source: GradedSpace,
    target: GradedSpace,
    values: BTreeMap<Vec<BasisIndex>, Vector>,
}

/// The one-dimensional coefficient space of scalar cochains.
pub fn scalars() -> GradedSpace {
    GradedSpace::new("K", [(0, 1)]).expect("valid")
}

fn unit() -> BasisIndex {
    BasisIndex::new(0, 0)
}

fn tuples(basis: &[BasisIndex], p: usize) -> Vec<Vec<BasisIndex>> {
    let mut out = vec![Vec::new()];
    for _ in 0..p {
        out = out.into_iter().flat_map(|t| basis.iter().map(move |&b| [t.clone(), vec![b]].concat())).collect();
    }
    out
}

impl LodayCochain {
    pub fn zero(source: &GradedSpace, target: &GradedSpace, arity: usize) -> Result<Self> {
        if arity > limits().word_cap {
            return Err(HalgError::WordCap { len: arity, cap: limits().word_cap });
        }
        Ok(LodayCochain { arity, source: source.clone(), target: target.clone(), values: BTreeMap::new() })
    }

    /// The arity-0 cochain `w`.
    pub fn constant(source: &GradedSpace, target: &GradedSpace, w: Vector) -> Result<Self> {
        let mut c = Self::zero(source, target, 0)?;
        c.set(&[], w)?;
        Ok(c)
    }

    /// The scalar cochain with the given values on basis tuples.
    pub fn scalar(source: &GradedSpace, arity: usize, values: impl IntoIterator<Item = (Vec<BasisIndex>, Scalar)>) -> Result<Self> {
        let mut c = Self::zero(source, &scalars(), arity)?;
        for (t, v) in values {
            c.set(&t, Vector::single(unit(), v))?;
        }
        Ok(c)
    }

    /// Tabulates `value` on all basis tuples.
    pub fn from_fn(source: &GradedSpace, target: &GradedSpace, arity: usize, mut value: impl FnMut(&[BasisIndex]) -> Vector) -> Result<Self> {
        let mut c = Self::zero(source, target, arity)?;
        for t in tuples(&source.basis(), arity) {
            let v = value(&t);
            c.set(&t, v)?;
        }
        Ok(c)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn source(&self) -> &GradedSpace {
        &self.source
    }

    pub fn target(&self) -> &GradedSpace {
        &self.target
    }

    pub fn entries(&self) -> &BTreeMap<Vec<BasisIndex>, Vector> {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_scalar(&self) -> bool {
        self.target.basis() == vec![unit()]
    }

    pub fn set(&mut self, args: &[BasisIndex], value: Vector) -> Result<()> {
        if args.len() != self.arity {
            return Err(HalgError::ArityMismatch { expected: self.arity, got: args.len() });
        }
        if value.keys().any(|k| !self.target.basis().contains(k)) {
            return Err(HalgError::InvalidBasis("cochain value leaves the coefficient space".into()));
        }
        if value.is_zero() {
            self.values.remove(args);
        } else {
            self.values.insert(args.to_vec(), value);
        }
        Ok(())
    }

    pub fn value(&self, args: &[BasisIndex]) -> Vector {
        self.values.get(args).cloned().unwrap_or_default()
    }

    /// Multilinear evaluation.
    pub fn evaluate(&self, args: &[Vector]) -> Vector {
        let mut out = Vector::new();
        for (t, v) in &self.values {
            let c = t.iter().zip(args).fold(scalar::one(), |c, (b, x)| c * x.coeff(b));
            if c != scalar::zero() {
                out.add_scaled(v, &c);
            }
        }
        out
    }

    /// `c(args)` with the basis argument at `slot` replaced by the vector `v`.
    pub fn value_with(&self, args: &[BasisIndex], slot: usize, v: &Vector) -> Vector {
        let mut out = Vector::new();
        let mut t = args.to_vec();
        for (b, coeff) in v.iter() {
            t[slot] = *b;
            out.add_scaled(&self.value(&t), coeff);
        }
        out
    }

    /// The scalar `ℓ(args)` of a scalar cochain.
    pub fn scalar_value(&self, args: &[BasisIndex]) -> Scalar {
        self.value(args).coeff(&unit())
    }

    fn check_shape(&self, other: &LodayCochain) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(HalgError::SpaceMismatch("cochains over different spaces".into()));
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &LodayCochain, c: &Scalar) -> Result<()> {
        self.check_shape(other)?;
        if other.arity != self.arity && !other.is_zero() {
            if !self.is_zero() {
                return Err(HalgError::ArityMismatch { expected: self.arity, got: other.arity });
            }
            self.arity = other.arity;
        }
        for (t, v) in &other.values {
            let mut sum = self.value(t);
            sum.add_scaled(v, c);
            self.set(t, sum)?;
        }
        Ok(())
    }

    pub fn plus(&self, other: &LodayCochain) -> Result<Self> {
        let mut r = self.clone();
        r.add_scaled(other, &scalar::one())?;
        Ok(r)
    }

    pub fn minus(&self, other: &LodayCochain) -> Result<Self> {
        let mut r = self.clone();
        r.add_scaled(other, &scalar::int(-1))?;
        Ok(r)
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut r = Self { values: BTreeMap::new(), ..self.clone() };
        r.add_scaled(self, c).expect("same shape");
        r
    }
}

fn without(args: &[BasisIndex], i: usize) -> Vec<BasisIndex> {
    let mut v = args.to_vec();
    v.remove(i);
    v
}

/// `Σ_{i<j} (−1)^i c(x_1, …, x̂_i, …, [x_i,x_j], …, x_{p+1})`, 1-based `i`.
fn bracket_terms(a: &LeibnizAlgebra, c: &LodayCochain, args: &[BasisIndex]) -> Vector {
    let mut out = Vector::new();
    let n = args.len();
    for i in 0..n {
        for j in i + 1..n {
            let inner = a.bracket_basis(args[i], args[j]);
            if inner.is_zero() {
                continue;
            }
            let sign = scalar::from_sign(parity(i as i64 + 1));
            out.add_scaled(&c.value_with(&without(args, i), j - 1, &inner), &sign);
        }
    }
    out
}

fn check_coboundary_input(a: &LeibnizAlgebra, module: &GradedSpace, c: &LodayCochain) -> Result<()> {
    if c.source() != a.space() || c.target() != module {
        return Err(HalgError::SpaceMismatch("cochain does not match the algebra and its coefficients".into()));
    }
    if c.arity() + 1 > limits().word_cap {
        return Err(HalgError::WordCap { len: c.arity() + 1, cap: limits().word_cap });
    }
    Ok(())
}

/// `(∂c)(x_1..x_{p+1}) = (−1)^{p+1} μ^r(x_{p+1}) c(x_1..x_p) + Σ_{i≤p} (−1)^{i+1} μ^l(x_i) c(..x̂_i..)
/// + Σ_{i<j} (−1)^i c(..x̂_i.., [x_i,x_j], ..)`.
pub fn coboundary_bimodule(a: &LeibnizAlgebra, b: &Bimodule, c: &LodayCochain) -> Result<LodayCochain> {
    check_coboundary_input(a, b.module(), c)?;
    let p = c.arity();
    LodayCochain::from_fn(a.space(), b.module(), p + 1, |args| {
        let last = Vector::basis(args[p]);
        let mut out = b.right().apply(&last, &c.value(&args[..p])).scaled(&scalar::from_sign(parity(p as i64 + 1)));
        for i in 0..p {
            let term = b.left().apply(&Vector::basis(args[i]), &c.value(&without(args, i)));
            out.add_scaled(&term, &scalar::from_sign(parity(i as i64)));
        }
        out.add_assign(&bracket_terms(a, c, args));
        out
    })
}

/// `(∂c)(x_1..x_{p+1}) = Σ_i (−1)^{i+1} ρ(x_i) c(..x̂_i..) + Σ_{i<j} (−1)^i c(..x̂_i.., [x_i,x_j], ..)`.
pub fn coboundary(a: &LeibnizAlgebra, r: &Representation, c: &LodayCochain) -> Result<LodayCochain> {
    check_coboundary_input(a, r.module(), c)?;
    LodayCochain::from_fn(a.space(), r.module(), c.arity() + 1, |args| {
        let mut out = Vector::new();
        for i in 0..args.len() {
            let term = r.act(&Vector::basis(args[i]), &c.value(&without(args, i)));
            out.add_scaled(&term, &scalar::from_sign(parity(i as i64)));
        }
        out.add_assign(&bracket_terms(a, c, args));
        out
    })
}

fn require_scalar(c: &LodayCochain) -> Result<()> {
    if !c.is_scalar() {
        return Err(HalgError::SpaceMismatch("the shuffle product needs scalar-valued cochains".into()));
    }
    Ok(())
}

/// `(ℓ' ⋔ ℓ'')(X_1..X_{p+q}) = Σ_{σ ∈ Sh(p,q)} sign σ · ℓ'(X_{σ_1}..X_{σ_p}) ℓ''(X_{σ_{p+1}}..X_{σ_{p+q}})`.
pub fn shuffle_product(first: &LodayCochain, second: &LodayCochain) -> Result<LodayCochain> {
    require_scalar(first)?;
    require_scalar(second)?;
    first.check_shape(second)?;
    let (p, q) = (first.arity(), second.arity());
    let shuffles = unshuffles_cached(&[p, q], false);
    LodayCochain::from_fn(first.source(), &scalars(), p + q, |args| {
        let mut total = scalar::zero();
        for sh in shuffles.iter() {
            let left: Vec<BasisIndex> = sh.order[..p].iter().map(|&i| args[i]).collect();
            let right: Vec<BasisIndex> = sh.order[p..].iter().map(|&i| args[i]).collect();
            let value = first.scalar_value(&left) * second.scalar_value(&right);
            total += scalar::signed(&value, sh.sign);
        }
        Vector::single(unit(), total)
    })
}

/// `(i_X ℓ)(X_1..X_{p−1}) = ℓ(X, X_1..X_{p−1})`; zero on arity 0.
pub fn contraction(x: &Vector, c: &LodayCochain) -> Result<LodayCochain> {
    if c.arity() == 0 {
        return LodayCochain::zero(c.source(), c.target(), 0);
    }
    LodayCochain::from_fn(c.source(), c.target(), c.arity() - 1, |args| {
        let mut full = vec![BasisIndex::new(0, 0)];
        full.extend_from_slice(args);
        c.value_with(&full, 0, x)
    })
}

/// `(ℒ_X ℓ)(X_1..X_p) = ρ(X) ℓ(X_1..X_p) − Σ_i ℓ(X_1.., [X,X_i], ..X_p)`.
pub fn lie_derivative(a: &LeibnizAlgebra, r: &Representation, x: &Vector, c: &LodayCochain) -> Result<LodayCochain> {
    check_coboundary_input(a, r.module(), c)?;
    LodayCochain::from_fn(a.space(), r.module(), c.arity(), |args| {
        let mut out = r.act(x, &c.value(args));
        for i in 0..args.len() {
            out.sub_assign(&c.value_with(args, i, &a.bracket(x, &Vector::basis(args[i]))));
        }
        out
    })
}
