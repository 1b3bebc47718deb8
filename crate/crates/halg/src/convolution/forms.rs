//! Polynomial differential forms on `Δ¹` and `Δ²` in the coordinates
//! `t_1, …, t_n` (with `t_0 = 1 − Σ t_j`), graded homologically: a `k`-form
//! has degree `−k`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{HalgError, Result};
use crate::graded::limits::limits;
use crate::graded::scalar::{self, Scalar};
use crate::graded::{parity, Comb};

/// `t^exps dt_M`, with `M` a bit mask of differentials in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FormMonomial {
    pub exps: Vec<u32>,
    pub mask: u32,
}

impl FormMonomial {
    pub fn form_degree(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn poly_degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

/// Sign of `dt_A ∧ dt_B` against `dt_{A∪B}`, or `None` when they overlap.
fn wedge_sign(a: u32, b: u32) -> Option<i32> {
    if a & b != 0 {
        return None;
    }
    let mut inversions = 0i64;
    for i in 0..32 {
        if b & (1 << i) != 0 {
            inversions += (a >> (i + 1)).count_ones() as i64;
        }
    }
    Some(parity(inversions))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyForm {
    vars: usize,
    terms: Comb<FormMonomial>,
}

impl PolyForm {
    pub fn zero(vars: usize) -> Self {
        PolyForm { vars, terms: Comb::new() }
    }

    pub fn constant(vars: usize, c: Scalar) -> Self {
        let mut f = Self::zero(vars);
        f.terms.add_term(FormMonomial { exps: vec![0; vars], mask: 0 }, c);
        f
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Scalar::one())
    }

    /// The coordinate `t_j`, `1 ≤ j ≤ vars`.
    pub fn coordinate(vars: usize, j: usize) -> Self {
        let mut exps = vec![0; vars];
        exps[j - 1] = 1;
        Self::monomial(FormMonomial { exps, mask: 0 }, Scalar::one())
    }

    /// `dt_j`.
    pub fn differential(vars: usize, j: usize) -> Self {
        Self::monomial(FormMonomial { exps: vec![0; vars], mask: 1 << (j - 1) }, Scalar::one())
    }

    pub fn monomial(m: FormMonomial, c: Scalar) -> Self {
        let vars = m.exps.len();
        let mut f = Self::zero(vars);
        f.terms.add_term(m, c);
        f
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &Comb<FormMonomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Homological degree, if homogeneous.
    pub fn degree(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(|m| -(m.form_degree() as i32));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn plus(&self, other: &Self) -> Self {
        PolyForm { vars: self.vars, terms: self.terms.plus(&other.terms) }
    }

    pub fn minus(&self, other: &Self) -> Self {
        PolyForm { vars: self.vars, terms: self.terms.minus(&other.terms) }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        PolyForm { vars: self.vars, terms: self.terms.scaled(c) }
    }

    /// Part of exact form degree `k`.
    pub fn part(&self, k: u32) -> Self {
        let mut t = self.terms.clone();
        t.retain(|m| m.form_degree() == k);
        PolyForm { vars: self.vars, terms: t }
    }

    /// Wedge product, failing when the polynomial degree exceeds the cap.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        let out = self.wedge_raw(other);
        limits().check_poly(out.poly_degree())?;
        Ok(out)
    }

    pub fn poly_degree(&self) -> u32 {
        self.terms.keys().map(FormMonomial::poly_degree).max().unwrap_or(0)
    }

    /// Wedge product without the degree cap, for intermediate pullbacks.
    fn wedge_raw(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.vars);
        for (a, x) in self.terms.iter() {
            for (b, y) in other.terms.iter() {
                let Some(s) = wedge_sign(a.mask, b.mask) else { continue };
                let exps: Vec<u32> = a.exps.iter().zip(&b.exps).map(|(p, q)| p + q).collect();
                out.terms.add_term(FormMonomial { exps, mask: a.mask | b.mask }, scalar::signed(&(x * y), s));
            }
        }
        out
    }

    /// De Rham differential `d(t^e dt_M) = Σ_j e_j t^{e − 1_j} dt_j ∧ dt_M`.
    pub fn d(&self) -> Self {
        let mut out = Self::zero(self.vars);
        for (m, c) in self.terms.iter() {
            for j in 0..self.vars {
                if m.exps[j] == 0 || m.mask & (1 << j) != 0 {
                    continue;
                }
                let mut exps = m.exps.clone();
                exps[j] -= 1;
                let s = wedge_sign(1 << j, m.mask).expect("disjoint");
                out.terms.add_term(FormMonomial { exps, mask: m.mask | (1 << j) }, scalar::signed(&(c * scalar::int(m.exps[j] as i64)), s));
            }
        }
        out
    }

    /// Value of the 0-form part at a point.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let mut total = Scalar::zero();
        for (m, c) in self.terms.iter() {
            if m.mask != 0 {
                continue;
            }
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.exps) {
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        total
    }

    /// Pullback along `t_j ↦ images[j − 1]`, each image a 0-form in `images[0].vars()` variables.
    pub fn pullback(&self, images: &[PolyForm]) -> Result<Self> {
        let out = self.pullback_raw(images)?;
        limits().check_poly(out.poly_degree())?;
        Ok(out)
    }

    fn pullback_raw(&self, images: &[PolyForm]) -> Result<Self> {
        if images.len() != self.vars {
            return Err(HalgError::Invalid(format!("pullback needs {} coordinate images", self.vars)));
        }
        let vars = images.first().map_or(0, PolyForm::vars);
        let diffs: Vec<PolyForm> = images.iter().map(PolyForm::d).collect();
        let mut out = Self::zero(vars);
        for (m, c) in self.terms.iter() {
            let mut term = Self::constant(vars, c.clone());
            for (j, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    term = term.wedge_raw(&images[j]);
                }
            }
            for (j, d) in diffs.iter().enumerate() {
                if m.mask & (1 << j) != 0 {
                    term = term.wedge_raw(d);
                }
            }
            out = out.plus(&term);
        }
        Ok(out)
    }

    /// `∫_0^1 ι_{∂_u}` over the first variable `u`, written as `du ∧ B`.
    fn integrate_first(&self) -> Self {
        let mut out = Self::zero(self.vars - 1);
        for (m, c) in self.terms.iter() {
            if m.mask & 1 == 0 {
                continue;
            }
            let exps = m.exps[1..].to_vec();
            let weight = scalar::frac(1, m.exps[0] as i64 + 1);
            out.terms.add_term(FormMonomial { exps, mask: m.mask >> 1 }, c * weight);
        }
        out
    }
}

/// `Δ¹` or `Δ²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Simplex {
    Interval,
    Triangle,
}

impl Simplex {
    pub fn dim(self) -> usize {
        match self {
            Simplex::Interval => 1,
            Simplex::Triangle => 2,
        }
    }

    pub fn from_dim(n: usize) -> Result<Self> {
        match n {
            1 => Ok(Simplex::Interval),
            2 => Ok(Simplex::Triangle),
            _ => Err(HalgError::Invalid(format!("only Δ¹ and Δ² are supported, got Δ^{n}"))),
        }
    }

    /// Coordinates of vertex `i`: the origin for `i = 0`, else the `i`-th unit vector.
    pub fn vertex(self, i: usize) -> Result<Vec<Scalar>> {
        let n = self.dim();
        if i > n {
            return Err(HalgError::Invalid(format!("vertex {i} of Δ^{n}")));
        }
        let mut p = vec![Scalar::zero(); n];
        if i > 0 {
            p[i - 1] = Scalar::one();
        }
        Ok(p)
    }
}

/// `ε_n^i`: the value at vertex `i`, zero on forms of positive degree.
pub fn form_eval(n: Simplex, i: usize, w: &PolyForm) -> Result<Scalar> {
    Ok(w.evaluate(&n.vertex(i)?))
}

pub fn form_d(w: &PolyForm) -> PolyForm {
    w.d()
}

/// `h_n^i ω = ∫_0^1 ι_{∂_u} φ^*ω` for the contraction `φ(u, t) = u t + (1 − u) e_i`.
pub fn form_h(n: Simplex, i: usize, w: &PolyForm) -> Result<PolyForm> {
    let e = n.vertex(i)?;
    let vars = n.dim() + 1;
    let u = PolyForm::coordinate(vars, 1);
    let one_minus_u = PolyForm::one(vars).minus(&u);
    let images: Vec<PolyForm> = (1..=n.dim())
        .map(|j| {
            let tj = PolyForm::coordinate(vars, j + 1);
            u.wedge_raw(&tj).plus(&one_minus_u.scaled(&e[j - 1]))
        })
        .collect();
    let out = w.pullback_raw(&images)?.integrate_first();
    limits().check_poly(out.poly_degree())?;
    Ok(out)
}

/// Edge `ab` of `Δ²` as a map `Δ¹ → Δ²`, `u ↦ (1 − u) e_a + u e_b`.
pub fn edge_images(a: usize, b: usize) -> Result<Vec<PolyForm>> {
    let ea = Simplex::Triangle.vertex(a)?;
    let eb = Simplex::Triangle.vertex(b)?;
    let u = PolyForm::coordinate(1, 1);
    let one_minus_u = PolyForm::one(1).minus(&u);
    Ok((0..2).map(|j| one_minus_u.scaled(&ea[j]).plus(&u.scaled(&eb[j]))).collect())
}

/// Restriction of a form on `Δ²` to the edge `ab`.
pub fn restrict_to_edge(w: &PolyForm, a: usize, b: usize) -> Result<PolyForm> {
    w.pullback(&edge_images(a, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::scalar::{frac, int};
    use proptest::prelude::*;

    fn t(vars: usize, j: usize) -> PolyForm {
        PolyForm::coordinate(vars, j)
    }

    #[test]
    fn interval_examples() {
        let dt = PolyForm::differential(1, 1);
        assert_eq!(form_h(Simplex::Interval, 0, &dt).unwrap(), t(1, 1));
        let t2 = t(1, 1).wedge(&t(1, 1)).unwrap();
        let homotopy = form_h(Simplex::Interval, 0, &t2.d()).unwrap().plus(&form_h(Simplex::Interval, 0, &t2).unwrap().d());
        assert_eq!(homotopy, t2);
        assert_eq!(form_eval(Simplex::Interval, 0, &t2).unwrap(), int(0));
        // h(Q dt) = ∫_0^t Q: Q = 3t² gives t³
        let q = t2.scaled(&int(3)).wedge(&dt).unwrap();
        let cube = t2.wedge(&t(1, 1)).unwrap();
        assert_eq!(form_h(Simplex::Interval, 0, &q).unwrap(), cube);
        // from vertex 1: h(dt) = t − 1
        assert_eq!(form_h(Simplex::Interval, 1, &dt).unwrap(), t(1, 1).minus(&PolyForm::one(1)));
    }

    #[test]
    fn edges_of_the_triangle() {
        let w = t(2, 1).wedge(&PolyForm::differential(2, 2)).unwrap();
        assert!(restrict_to_edge(&w, 0, 1).unwrap().is_zero());
        // on 12: t_1 = 1 − u, dt_2 = du
        let r = restrict_to_edge(&w, 1, 2).unwrap();
        assert_eq!(r, PolyForm::differential(1, 1).minus(&t(1, 1).wedge(&PolyForm::differential(1, 1)).unwrap()));
        assert_eq!(form_eval(Simplex::Triangle, 2, &t(2, 2).scaled(&frac(1, 2))).unwrap(), frac(1, 2));
    }

    fn random_form(vars: usize, coeffs: &[i64]) -> PolyForm {
        // coefficients cycle through monomials t^a s^b dt_M of polynomial degree ≤ 6
        let mut f = PolyForm::zero(vars);
        let mut k = 0;
        let masks = 1u32 << vars;
        for mask in 0..masks {
            for a in 0..=3u32 {
                for b in 0..=if vars == 2 { 3u32 } else { 0 } {
                    let exps = if vars == 2 { vec![a, b] } else { vec![a] };
                    let c = coeffs[k % coeffs.len()];
                    k += 1;
                    f = f.plus(&PolyForm::monomial(FormMonomial { exps, mask }, int(c)));
                }
            }
        }
        f
    }

    proptest! {
        #[test]
        fn homotopy_relations(coeffs in proptest::collection::vec(-3i64..=3, 1..20), two in any::<bool>()) {
            let n = if two { Simplex::Triangle } else { Simplex::Interval };
            let w = random_form(n.dim(), &coeffs);
            for i in 0..=n.dim() {
                let h = |x: &PolyForm| form_h(n, i, x).unwrap();
                let lhs = h(&w).d().plus(&h(&w.d()));
                let eps = PolyForm::constant(n.dim(), form_eval(n, i, &w).unwrap());
                prop_assert_eq!(lhs, w.minus(&eps));
                prop_assert_eq!(form_eval(n, i, &h(&w)).unwrap(), int(0));
                for j in 0..=n.dim() {
                    let hj = |x: &PolyForm| form_h(n, j, x).unwrap();
                    prop_assert!(h(&hj(&w)).plus(&hj(&h(&w))).is_zero());
                }
            }
        }

        #[test]
        fn d_squares_to_zero(coeffs in proptest::collection::vec(-3i64..=3, 1..20)) {
            let w = random_form(2, &coeffs);
            prop_assert!(w.d().d().is_zero());
        }
    }
}
