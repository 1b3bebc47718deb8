//! Symmetric product of maps out of the symmetric coalgebra,
//! `f ⊙ g = μ ∘ (f ⊗ g) ∘ Δ`.

use super::symmetric::canonical;
use super::{CoalgElement, Flavor, Word};
use crate::error::{HalgError, Result};
use crate::graded::perm::{koszul_of_order, unshuffles_cached};
use crate::graded::{parity, scalar, MultiMap};

/// A homogeneous linear map from symmetric words to the symmetric algebra.
pub trait SymWordMap {
    fn degree(&self) -> i32;
    fn apply_word(&self, w: &Word) -> Result<CoalgElement>;
}

impl SymWordMap for MultiMap {
    fn degree(&self) -> i32 {
        MultiMap::degree(self)
    }

    /// Zero off its arity; otherwise the value as a sum of letters.
    fn apply_word(&self, w: &Word) -> Result<CoalgElement> {
        if w.len() != self.arity() {
            return Ok(CoalgElement::zero(Flavor::Symmetric));
        }
        Ok(CoalgElement::from_vector(Flavor::Symmetric, &self.apply_basis(&w.0)))
    }
}

/// `f ⊙ g` as a lazily evaluated map.
pub struct ProductMap<'a> {
    left: &'a dyn SymWordMap,
    right: &'a dyn SymWordMap,
}

impl<'a> ProductMap<'a> {
    pub fn new(left: &'a dyn SymWordMap, right: &'a dyn SymWordMap) -> Self {
        ProductMap { left, right }
    }
}

impl SymWordMap for ProductMap<'_> {
    fn degree(&self) -> i32 {
        self.left.degree() + self.right.degree()
    }

    /// `Σ_{Sh(i,j)} ε (-1)^{|g|·|first i|} f(first i) · g(rest)`.
    fn apply_word(&self, w: &Word) -> Result<CoalgElement> {
        let (w, s0) = canonical(w).ok_or_else(|| HalgError::Invalid("null symmetric word".into()))?;
        let n = w.len();
        let degs = w.degrees();
        let mut out = CoalgElement::zero(Flavor::Symmetric);
        for k in 1..n {
            for sh in unshuffles_cached(&[k, n - k], false).iter() {
                let first = Word(sh.order[..k].iter().map(|&i| w.0[i]).collect());
                let rest = Word(sh.order[k..].iter().map(|&i| w.0[i]).collect());
                let fa = self.left.apply_word(&first)?;
                if fa.is_zero() {
                    continue;
                }
                let gb = self.right.apply_word(&rest)?;
                let sign = s0
                    * koszul_of_order(&sh.order, &degs)
                    * parity(self.right.degree() as i64 * first.degree() as i64);
                for (x, c) in fa.iter() {
                    for (y, d) in gb.iter() {
                        out.add_word(x.concat(y), scalar::signed(&(c * d), sign));
                    }
                }
            }
        }
        Ok(out)
    }
}
