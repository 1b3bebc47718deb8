//! Coderivations and coalgebra morphisms of the free coalgebras, extended from
//! their corestrictions onto the letters.

use std::collections::BTreeMap;

use super::{CoalgElement, Flavor, Word};
use crate::error::{HalgError, Result};
use crate::graded::multimap::basis_tuples;
use crate::graded::perm::{compositions, koszul_of_order, unshuffles_cached};
use crate::graded::scalar::{self, Scalar};
use crate::graded::{parity, GradedSpace, MultiMap, Vector};

fn collect_components(maps: impl IntoIterator<Item = MultiMap>) -> Result<BTreeMap<usize, MultiMap>> {
    let mut out: BTreeMap<usize, MultiMap> = BTreeMap::new();
    for m in maps {
        match out.get_mut(&m.arity()) {
            Some(existing) => existing.add_scaled(&m, &scalar::one())?,
            None => {
                out.insert(m.arity(), m);
            }
        }
    }
    Ok(out)
}

fn check_spaces(maps: &BTreeMap<usize, MultiMap>) -> Result<()> {
    let mut it = maps.values();
    if let Some(first) = it.next() {
        for m in it {
            if m.source() != first.source() || m.target() != first.target() {
                return Err(HalgError::SpaceMismatch("components over different spaces".into()));
            }
        }
    }
    Ok(())
}

/// Coderivation of `Zin^c(U)` or `S^c(U)` given by corestrictions `D_k: U^{⊗k} → U`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coderivation {
    flavor: Flavor,
    degree: i32,
    components: BTreeMap<usize, MultiMap>,
}

impl Coderivation {
    pub fn new(flavor: Flavor, degree: i32, maps: impl IntoIterator<Item = MultiMap>) -> Result<Self> {
        let components = collect_components(maps)?;
        check_spaces(&components)?;
        for m in components.values() {
            if m.degree() != degree && !m.is_zero() {
                return Err(HalgError::Inhomogeneous(format!(
                    "component of arity {} has degree {}, expected {degree}",
                    m.arity(),
                    m.degree()
                )));
            }
            if m.source() != m.target() {
                return Err(HalgError::SpaceMismatch("coderivation components must be endomorphic".into()));
            }
        }
        Ok(Coderivation { flavor, degree, components })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn component(&self, k: usize) -> Option<&MultiMap> {
        self.components.get(&k)
    }

    pub fn components(&self) -> &BTreeMap<usize, MultiMap> {
        &self.components
    }

    pub fn space(&self) -> Option<&GradedSpace> {
        self.components.values().next().map(MultiMap::source)
    }

    pub fn apply_word(&self, u: &Word) -> Result<CoalgElement> {
        match self.flavor {
            Flavor::Zinbiel => self.apply_zinbiel(u),
            Flavor::Symmetric => self.apply_symmetric(u),
        }
    }

    pub fn apply(&self, e: &CoalgElement) -> Result<CoalgElement> {
        e.map_words(|w| self.apply_word(w))
    }

    /// `D(u_1…u_n) = Σ_m Σ_k Σ_{Sh(m-k,k-1)} ± left · D_k(mid, u_m) · u_{m+1}…u_n`.
    fn apply_zinbiel(&self, u: &Word) -> Result<CoalgElement> {
        let n = u.len();
        let mut out = CoalgElement::zero(Flavor::Zinbiel);
        for m in 1..=n {
            let prefix = &u.0[..m - 1];
            let degs: Vec<i32> = prefix.iter().map(|b| b.degree).collect();
            let tail = &u.0[m..];
            for (&k, dk) in self.components.range(1..=m) {
                for sh in unshuffles_cached(&[m - k, k - 1], false).iter() {
                    let left: Vec<_> = sh.order[..m - k].iter().map(|&i| prefix[i]).collect();
                    let left_deg: i64 = left.iter().map(|b| b.degree as i64).sum();
                    let sign = koszul_of_order(&sh.order, &degs) * parity(self.degree as i64 * left_deg);
                    let mut inputs: Vec<_> = sh.order[m - k..].iter().map(|&i| prefix[i]).collect();
                    inputs.push(u.0[m - 1]);
                    let Some(value) = dk.value_ref(&inputs) else { continue };
                    for (b, c) in value {
                        let mut word = left.clone();
                        word.push(*b);
                        word.extend_from_slice(tail);
                        out.add_word(Word(word), scalar::signed(c, sign));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `D(u_1…u_n) = Σ_k Σ_{Sh(k,n-k)} ε · D_k(first k) · rest`.
    fn apply_symmetric(&self, u: &Word) -> Result<CoalgElement> {
        let n = u.len();
        let degs = u.degrees();
        let mut out = CoalgElement::zero(Flavor::Symmetric);
        for (&k, dk) in self.components.range(1..=n) {
            for sh in unshuffles_cached(&[k, n - k], false).iter() {
                let inputs: Vec<_> = sh.order[..k].iter().map(|&i| u.0[i]).collect();
                let Some(value) = dk.value_ref(&inputs) else { continue };
                let sign = koszul_of_order(&sh.order, &degs);
                for (b, c) in value {
                    let mut word = vec![*b];
                    word.extend(sh.order[k..].iter().map(|&i| u.0[i]));
                    out.add_word(Word(word), scalar::signed(c, sign));
                }
            }
        }
        Ok(out)
    }

    /// Commutator `[self, other] = self∘other − (−1)^{|self||other|} other∘self` as a coderivation.
    pub fn commutator(&self, other: &Self, max_arity: usize) -> Result<Self> {
        let space = self.space().or(other.space()).cloned().ok_or_else(|| HalgError::Invalid("empty".into()))?;
        let deg = self.degree + other.degree;
        let sign = scalar::from_sign(-parity(self.degree as i64 * other.degree as i64));
        let mut maps = Vec::new();
        for n in 1..=max_arity {
            let m = corestriction(&space, &space, n, deg, self.flavor, |w| {
                let mut a = self.apply(&other.apply_word(w)?)?;
                a.add_scaled(&other.apply(&self.apply_word(w)?)?, &sign);
                Ok(a)
            })?;
            maps.push(m);
        }
        Coderivation::new(self.flavor, deg, maps)
    }
}

/// Coalgebra morphism given by degree-0 corestrictions `F_k: U^{⊗k} → U'`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoalgMorphism {
    flavor: Flavor,
    components: BTreeMap<usize, MultiMap>,
}

impl CoalgMorphism {
    pub fn new(flavor: Flavor, maps: impl IntoIterator<Item = MultiMap>) -> Result<Self> {
        let components = collect_components(maps)?;
        check_spaces(&components)?;
        for m in components.values() {
            if m.degree() != 0 && !m.is_zero() {
                return Err(HalgError::Inhomogeneous(format!(
                    "morphism component of arity {} has degree {}",
                    m.arity(),
                    m.degree()
                )));
            }
        }
        Ok(CoalgMorphism { flavor, components })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn component(&self, k: usize) -> Option<&MultiMap> {
        self.components.get(&k)
    }

    pub fn components(&self) -> &BTreeMap<usize, MultiMap> {
        &self.components
    }

    pub fn apply_word(&self, u: &Word) -> Result<CoalgElement> {
        let n = u.len();
        let degs = u.degrees();
        let mut out = CoalgElement::zero(self.flavor);
        let half = self.flavor == Flavor::Zinbiel;
        for p in 1..=n {
            let weight = match self.flavor {
                Flavor::Zinbiel => scalar::one(),
                Flavor::Symmetric => scalar::one() / scalar::factorial(p),
            };
            for sizes in compositions(n, p) {
                if sizes.iter().any(|k| !self.components.contains_key(k)) {
                    continue;
                }
                for sh in unshuffles_cached(&sizes, half).iter() {
                    let sign = koszul_of_order(&sh.order, &degs);
                    let mut partial: Vec<(Vec<crate::graded::BasisIndex>, Scalar)> =
                        vec![(Vec::with_capacity(p), scalar::signed(&weight, sign))];
                    let mut pos = 0;
                    for &k in &sizes {
                        let block: Vec<_> = sh.order[pos..pos + k].iter().map(|&i| u.0[i]).collect();
                        pos += k;
                        let value = self.components[&k].apply_basis(&block);
                        let mut next = Vec::new();
                        for (letters, c) in &partial {
                            for (b, d) in &value {
                                let mut l = letters.clone();
                                l.push(*b);
                                next.push((l, c * d));
                            }
                        }
                        partial = next;
                        if partial.is_empty() {
                            break;
                        }
                    }
                    for (letters, c) in partial {
                        out.add_word(Word(letters), c);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, e: &CoalgElement) -> Result<CoalgElement> {
        e.map_words(|w| self.apply_word(w))
    }
}

/// The arity-`n` corestriction `U^{⊗n} → U'` of a word operator, evaluated on
/// every basis tuple whose output degree lies in `target`.
pub fn corestriction(
    source: &GradedSpace,
    target: &GradedSpace,
    n: usize,
    degree: i32,
    flavor: Flavor,
    mut op: impl FnMut(&Word) -> Result<CoalgElement>,
) -> Result<MultiMap> {
    let mut map = MultiMap::new(source, target, n, degree)?;
    for tuple in basis_tuples(source, n, |s| target.has_degree(s + degree)) {
        let input = CoalgElement::from_word(flavor, Word(tuple.clone()), scalar::one());
        let mut value = Vector::new();
        for (w, c) in input.iter() {
            value.add_scaled(&op(w)?.letters_part(), c);
        }
        map.add_value(&tuple, &value)?;
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{coproduct_of, map_pairs, same, TensorPairSum};
    use crate::graded::scalar::int;
    use crate::graded::BasisIndex;

    fn space() -> GradedSpace {
        GradedSpace::new("sV", [(1, 2), (2, 1)]).unwrap()
    }

    fn sample_d(flavor: Flavor) -> Coderivation {
        let u = space();
        let a = BasisIndex::new(1, 0);
        let b = BasisIndex::new(1, 1);
        let h = BasisIndex::new(2, 0);
        let mut d1 = MultiMap::new(&u, &u, 1, -1).unwrap();
        d1.add_entry(&[h], a, int(1)).unwrap();
        let mut d2 = MultiMap::new(&u, &u, 2, -1).unwrap();
        d2.add_entry(&[a, b], a, int(2)).unwrap();
        d2.add_entry(&[b, a], a, int(if flavor == Flavor::Symmetric { -2 } else { -3 })).unwrap();
        d2.add_entry(&[a, h], h, int(1)).unwrap();
        if flavor == Flavor::Symmetric {
            d2.add_entry(&[h, a], h, int(1)).unwrap();
        }
        Coderivation::new(flavor, -1, [d1, d2]).unwrap()
    }

    fn words() -> Vec<Word> {
        let u = space();
        let mut out = Vec::new();
        for n in 1..=4 {
            for t in basis_tuples(&u, n, |_| true) {
                out.push(Word(t));
            }
        }
        out
    }

    #[test]
    fn only_linear_part_acts_slotwise() {
        let u = space();
        let mut d1 = MultiMap::new(&u, &u, 1, -1).unwrap();
        d1.add_entry(&[BasisIndex::new(2, 0)], BasisIndex::new(1, 1), int(1)).unwrap();
        let d = Coderivation::new(Flavor::Zinbiel, -1, [d1]).unwrap();
        let w = Word(vec![BasisIndex::new(1, 0), BasisIndex::new(2, 0)]);
        let r = d.apply_word(&w).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.coeff(&Word(vec![BasisIndex::new(1, 0), BasisIndex::new(1, 1)])), int(-1));
    }

    #[test]
    fn coderivation_property_both_flavors() {
        for flavor in [Flavor::Zinbiel, Flavor::Symmetric] {
            let d = sample_d(flavor);
            for w in words() {
                let e = CoalgElement::from_word(flavor, w.clone(), int(1));
                if e.is_zero() {
                    continue;
                }
                let lhs = coproduct_of(&d.apply(&e).unwrap());
                let delta: TensorPairSum = coproduct_of(&e);
                let dw = |x: &Word| d.apply_word(x);
                let mut rhs = map_pairs(&delta, dw, same(flavor), 0).unwrap();
                rhs.add_assign(&map_pairs(&delta, same(flavor), dw, d.degree()).unwrap());
                assert_eq!(lhs, rhs, "{flavor:?} on {w}");
            }
        }
    }

    #[test]
    fn identity_morphism_is_identity() {
        let u = space();
        let f = CoalgMorphism::new(Flavor::Zinbiel, [MultiMap::identity(&u)]).unwrap();
        for w in words() {
            assert_eq!(f.apply_word(&w).unwrap(), CoalgElement::from_word(Flavor::Zinbiel, w, int(1)));
        }
    }

    #[test]
    fn morphism_property_both_flavors() {
        let u = space();
        let a = BasisIndex::new(1, 0);
        let b = BasisIndex::new(1, 1);
        let h = BasisIndex::new(2, 0);
        for flavor in [Flavor::Zinbiel, Flavor::Symmetric] {
            let mut f1 = MultiMap::identity(&u);
            f1.add_entry(&[a], b, int(2)).unwrap();
            let mut f2 = MultiMap::new(&u, &u, 2, 0).unwrap();
            f2.add_entry(&[a, b], h, int(1)).unwrap();
            f2.add_entry(&[b, a], h, int(if flavor == Flavor::Symmetric { -1 } else { 5 })).unwrap();
            let f = CoalgMorphism::new(flavor, [f1, f2]).unwrap();
            for w in words() {
                let e = CoalgElement::from_word(flavor, w.clone(), int(1));
                if e.is_zero() {
                    continue;
                }
                let lhs = coproduct_of(&f.apply(&e).unwrap());
                let fw = |x: &Word| f.apply_word(x);
                let rhs = map_pairs(&coproduct_of(&e), fw, fw, 0).unwrap();
                assert_eq!(lhs, rhs, "{flavor:?} on {w}");
            }
        }
    }

    #[test]
    fn two_letter_morphism_terms() {
        let u = space();
        let a = BasisIndex::new(1, 0);
        let b = BasisIndex::new(1, 1);
        let h = BasisIndex::new(2, 0);
        let mut f2 = MultiMap::new(&u, &u, 2, 0).unwrap();
        f2.add_entry(&[a, b], h, int(7)).unwrap();
        let f = CoalgMorphism::new(Flavor::Zinbiel, [MultiMap::identity(&u), f2]).unwrap();
        let r = f.apply_word(&Word(vec![a, b])).unwrap();
        assert_eq!(r.coeff(&Word(vec![a, b])), int(1));
        assert_eq!(r.coeff(&Word(vec![h])), int(7));
        assert_eq!(r.len(), 2);
    }
}
