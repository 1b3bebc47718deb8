//! Free Zinbiel algebra and coalgebra on tensor words.

use super::{CoalgElement, Flavor, TensorPairSum, Word};
use crate::error::{HalgError, Result};
use crate::graded::limits::limits;
use crate::graded::perm::{koszul_of_order, unshuffles_cached};
use crate::graded::scalar;
use crate::graded::Comb;

/// `a · b`: shuffle `a` into `b` with the last letter of `b` held fixed.
pub fn product(a: &Word, b: &Word) -> Result<CoalgElement> {
    if a.is_empty() || b.is_empty() {
        return Err(HalgError::Invalid("empty word in Zinbiel product".into()));
    }
    limits().check_word(a.len() + b.len())?;
    let p = a.len();
    let q = b.len() - 1;
    let mut x = a.0.clone();
    x.extend_from_slice(&b.0[..q]);
    let last = b.0[q];
    let mut out = CoalgElement::zero(Flavor::Zinbiel);
    for u in unshuffles_cached(&[p, q], false).iter() {
        // u.order[i] is the slot of x[i] in the shuffled word
        let mut y = vec![last; p + q + 1];
        for (i, &slot) in u.order.iter().enumerate() {
            y[slot] = x[i];
        }
        let ydeg: Vec<i32> = y[..p + q].iter().map(|b| b.degree).collect();
        let s = koszul_of_order(&u.order, &ydeg);
        out.add_word(Word(y), scalar::from_sign(s));
    }
    Ok(out)
}

/// Product extended bilinearly.
pub fn product_of(a: &CoalgElement, b: &CoalgElement) -> Result<CoalgElement> {
    let mut out = CoalgElement::zero(Flavor::Zinbiel);
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_scaled(&product(x, y)?, &(c * d));
        }
    }
    Ok(out)
}

/// Reduced coproduct `Δ(v_1…v_p) = Σ_k Σ_{Sh(k,p-k-1)} ε · (first k) ⊗ (rest, v_p)`.
pub fn coproduct(w: &Word) -> TensorPairSum {
    let p = w.len();
    let mut out = TensorPairSum::new();
    if p < 2 {
        return out;
    }
    let head = &w.0[..p - 1];
    let degs: Vec<i32> = head.iter().map(|b| b.degree).collect();
    let last = w.0[p - 1];
    for k in 1..p {
        for u in unshuffles_cached(&[k, p - 1 - k], false).iter() {
            let s = koszul_of_order(&u.order, &degs);
            let left: Vec<_> = u.order[..k].iter().map(|&i| head[i]).collect();
            let mut right: Vec<_> = u.order[k..].iter().map(|&i| head[i]).collect();
            right.push(last);
            out.add_term((Word(left), Word(right)), scalar::from_sign(s));
        }
    }
    out
}

/// Left-iterated coproduct `(Δ⊗id⊗…)∘…∘Δ` into `p` factors, computed from
/// half-unshuffles: blocks of sizes `k_1..k_p` whose final letters appear in
/// increasing order.
pub fn iterated_coproduct(w: &Word, p: usize) -> Comb<Vec<Word>> {
    let n = w.len();
    let mut out = Comb::new();
    if p == 0 || p > n {
        return out;
    }
    let degs = w.degrees();
    for sizes in crate::graded::perm::compositions(n, p) {
        for u in unshuffles_cached(&sizes, true).iter() {
            let s = koszul_of_order(&u.order, &degs);
            let mut blocks = Vec::with_capacity(p);
            let mut pos = 0;
            for &k in &sizes {
                blocks.push(Word(u.order[pos..pos + k].iter().map(|&i| w.0[i]).collect()));
                pos += k;
            }
            out.add_term(blocks, scalar::from_sign(s));
        }
    }
    out
}

/// The same iterate computed by literally applying `Δ` to the first factor.
pub fn iterated_coproduct_naive(w: &Word, p: usize) -> Comb<Vec<Word>> {
    let mut acc: Comb<Vec<Word>> = Comb::single(vec![w.clone()], scalar::one());
    for _ in 1..p {
        let mut next = Comb::new();
        for (blocks, c) in &acc {
            for ((x, y), d) in &coproduct(&blocks[0]) {
                let mut nb = vec![x.clone(), y.clone()];
                nb.extend_from_slice(&blocks[1..]);
                next.add_term(nb, c * d);
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{coproduct_left, coproduct_right, swap_first_two};
    use crate::graded::scalar::int;
    use crate::graded::BasisIndex;

    fn w(ls: &[(i32, usize)]) -> Word {
        Word(ls.iter().map(|&(d, i)| BasisIndex::new(d, i)).collect())
    }

    #[test]
    fn product_examples() {
        let v1 = w(&[(1, 0)]);
        let v2 = w(&[(1, 1)]);
        let p = product(&v1, &v2).unwrap();
        assert_eq!(p.coeff(&w(&[(1, 0), (1, 1)])), int(1));
        assert_eq!(p.len(), 1);

        let v23 = w(&[(1, 1), (0, 0)]);
        let p = product(&v1, &v23).unwrap();
        assert_eq!(p.coeff(&w(&[(1, 0), (1, 1), (0, 0)])), int(1));
        assert_eq!(p.coeff(&w(&[(1, 1), (1, 0), (0, 0)])), int(-1));
    }

    #[test]
    fn left_nested_products_concatenate() {
        let letters = [(0, 0), (1, 0), (1, 1), (0, 1)];
        let mut acc = CoalgElement::from_word(Flavor::Zinbiel, w(&letters[..1]), int(1));
        for l in &letters[1..] {
            let next = CoalgElement::from_word(Flavor::Zinbiel, w(&[*l]), int(1));
            acc = product_of(&acc, &next).unwrap();
        }
        assert_eq!(acc, CoalgElement::from_word(Flavor::Zinbiel, w(&letters), int(1)));
    }

    #[test]
    fn coproduct_examples() {
        assert!(coproduct(&w(&[(0, 0)])).is_zero());
        let d = coproduct(&w(&[(1, 0), (1, 1)]));
        assert_eq!(d.len(), 1);
        assert_eq!(d.coeff(&(w(&[(1, 0)]), w(&[(1, 1)]))), int(1));
        let d = coproduct(&w(&[(1, 0), (1, 1), (0, 0)]));
        assert_eq!(d.coeff(&(w(&[(1, 0)]), w(&[(1, 1), (0, 0)]))), int(1));
        assert_eq!(d.coeff(&(w(&[(1, 1)]), w(&[(1, 0), (0, 0)]))), int(-1));
        assert_eq!(d.coeff(&(w(&[(1, 0), (1, 1)]), w(&[(0, 0)]))), int(1));
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn co_relation_on_length_three() {
        let x = w(&[(1, 0), (0, 0), (1, 1)]);
        let d = coproduct(&x);
        let lhs = coproduct_right(Flavor::Zinbiel, &d);
        let l = coproduct_left(Flavor::Zinbiel, &d);
        let rhs = l.plus(&swap_first_two(&l));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn iterated_matches_naive() {
        let x = w(&[(1, 0), (0, 0), (1, 1), (1, 0)]);
        for p in 1..=4 {
            assert_eq!(iterated_coproduct(&x, p), iterated_coproduct_naive(&x, p));
        }
    }
}
