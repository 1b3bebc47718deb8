//! Free Zinbiel and reduced symmetric coalgebras on a graded space, with
//! coderivations and coalgebra morphisms determined by their corestrictions.

pub mod extend;
pub mod product;
pub mod symmetric;
pub mod zinbiel;

use std::fmt;

use crate::error::{HalgError, Result};
use crate::graded::limits::limits;
use crate::graded::{parity, BasisIndex, Comb, Scalar, Vector};

pub use extend::{CoalgMorphism, Coderivation};
pub use product::{ProductMap, SymWordMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Zinbiel,
    Symmetric,
}

/// A basis tensor word `v_1 ⊗ … ⊗ v_n`, `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<BasisIndex>);

impl Word {
    pub fn new(letters: Vec<BasisIndex>) -> Result<Self> {
        if letters.is_empty() {
            return Err(HalgError::Invalid("empty word".into()));
        }
        limits().check_word(letters.len())?;
        Ok(Word(letters))
    }

    pub fn letter(b: BasisIndex) -> Self {
        Word(vec![b])
    }

    pub fn letters(&self) -> &[BasisIndex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|b| b.degree).sum()
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.0.iter().map(|b| b.degree).collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut l = self.0.clone();
        l.extend_from_slice(&other.0);
        Word(l)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

/// Finite combination of words in one flavor of free coalgebra.
///
/// Symmetric-flavor words are always stored sorted by `(degree, index)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgElement {
    flavor: Flavor,
    terms: Comb<Word>,
}

impl CoalgElement {
    pub fn zero(flavor: Flavor) -> Self {
        CoalgElement { flavor, terms: Comb::new() }
    }

    pub fn from_word(flavor: Flavor, w: Word, coeff: Scalar) -> Self {
        let mut e = Self::zero(flavor);
        e.add_word(w, coeff);
        e
    }

    /// Letters embedded as length-one words.
    pub fn from_vector(flavor: Flavor, v: &Vector) -> Self {
        let mut e = Self::zero(flavor);
        for (b, c) in v {
            e.terms.add_term(Word::letter(*b), c.clone());
        }
        e
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn terms(&self) -> &Comb<Word> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.coeff(w)
    }

    /// Adds `coeff · w`, canonicalising in the symmetric flavor.
    pub fn add_word(&mut self, w: Word, coeff: Scalar) {
        match self.flavor {
            Flavor::Zinbiel => self.terms.add_term(w, coeff),
            Flavor::Symmetric => {
                if let Some((cw, s)) = symmetric::canonical(&w) {
                    self.terms.add_term(cw, crate::graded::scalar::signed(&coeff, s));
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.add_scaled(other, &crate::graded::scalar::one());
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &Scalar) {
        debug_assert_eq!(self.flavor, other.flavor);
        self.terms.add_scaled(&other.terms, factor);
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        CoalgElement { flavor: self.flavor, terms: self.terms.scaled(factor) }
    }

    pub fn minus(&self, other: &Self) -> Self {
        CoalgElement { flavor: self.flavor, terms: self.terms.minus(&other.terms) }
    }

    /// Component of word length one, as a vector.
    pub fn letters_part(&self) -> Vector {
        let mut v = Vector::new();
        for (w, c) in &self.terms {
            if w.len() == 1 {
                v.add_term(w.0[0], c.clone());
            }
        }
        v
    }

    /// Terms of a fixed word length.
    pub fn length_part(&self, n: usize) -> Self {
        let mut r = self.clone();
        r.terms.retain(|w| w.len() == n);
        r
    }

    /// Applies a linear operator word-by-word.
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> Result<CoalgElement>) -> Result<Self> {
        let mut out = Self::zero(self.flavor);
        for (w, c) in &self.terms {
            out.add_scaled(&f(w)?, c);
        }
        Ok(out)
    }
}

/// Element of `C ⊗ C`.
pub type TensorPairSum = Comb<(Word, Word)>;
/// Element of `C ⊗ C ⊗ C`.
pub type TensorTripleSum = Comb<(Word, Word, Word)>;

/// `(f ⊗ g)` on a sum of pairs, `(f⊗g)(a⊗b) = (-1)^{|g||a|} f(a) ⊗ g(b)`.
pub fn map_pairs(
    pairs: &TensorPairSum,
    mut left: impl FnMut(&Word) -> Result<CoalgElement>,
    mut right: impl FnMut(&Word) -> Result<CoalgElement>,
    right_degree: i32,
) -> Result<TensorPairSum> {
    let mut out = TensorPairSum::new();
    for ((a, b), c) in pairs {
        let s = parity(right_degree as i64 * a.degree() as i64);
        let fa = left(a)?;
        let gb = right(b)?;
        for (x, cx) in fa.iter() {
            for (y, cy) in gb.iter() {
                let coeff = crate::graded::scalar::signed(&(c * cx * cy), s);
                out.add_term((x.clone(), y.clone()), coeff);
            }
        }
    }
    Ok(out)
}

/// Identity operator for [`map_pairs`].
pub fn same(flavor: Flavor) -> impl Fn(&Word) -> Result<CoalgElement> {
    move |w| Ok(CoalgElement::from_word(flavor, w.clone(), crate::graded::scalar::one()))
}

/// Coproduct of the given flavor.
pub fn coproduct(flavor: Flavor, w: &Word) -> TensorPairSum {
    match flavor {
        Flavor::Zinbiel => zinbiel::coproduct(w),
        Flavor::Symmetric => symmetric::coproduct(w),
    }
}

/// Coproduct extended linearly to elements.
pub fn coproduct_of(e: &CoalgElement) -> TensorPairSum {
    let mut out = TensorPairSum::new();
    for (w, c) in e.iter() {
        out.add_scaled(&coproduct(e.flavor(), w), c);
    }
    out
}

/// `(Δ ⊗ id)` on pairs.
pub fn coproduct_left(flavor: Flavor, pairs: &TensorPairSum) -> TensorTripleSum {
    let mut out = TensorTripleSum::new();
    for ((a, b), c) in pairs {
        for ((x, y), d) in &coproduct(flavor, a) {
            out.add_term((x.clone(), y.clone(), b.clone()), c * d);
        }
    }
    out
}

/// `(id ⊗ Δ)` on pairs.
pub fn coproduct_right(flavor: Flavor, pairs: &TensorPairSum) -> TensorTripleSum {
    let mut out = TensorTripleSum::new();
    for ((a, b), c) in pairs {
        for ((x, y), d) in &coproduct(flavor, b) {
            out.add_term((a.clone(), x.clone(), y.clone()), c * d);
        }
    }
    out
}

/// `(τ ⊗ id)` with the Koszul sign `(-1)^{|a||b|}`.
pub fn swap_first_two(triples: &TensorTripleSum) -> TensorTripleSum {
    let mut out = TensorTripleSum::new();
    for ((a, b, c), k) in triples {
        let s = parity(a.degree() as i64 * b.degree() as i64);
        out.add_term((b.clone(), a.clone(), c.clone()), crate::graded::scalar::signed(k, s));
    }
    out
}
