//! Reduced symmetric coalgebra with words kept in sorted canonical form.

use super::{CoalgElement, Flavor, TensorPairSum, Word};
use crate::graded::perm::{koszul_of_order, unshuffles_cached};
use crate::graded::scalar;

/// Sorted representative of a symmetric word and the Koszul sign of sorting;
/// `None` when an odd letter repeats.
pub fn canonical(w: &Word) -> Option<(Word, i32)> {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by_key(|&i| (w.0[i], i));
    let sorted: Vec<_> = order.iter().map(|&i| w.0[i]).collect();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] && pair[0].degree % 2 != 0 {
            return None;
        }
    }
    let s = koszul_of_order(&order, &w.degrees());
    Some((Word(sorted), s))
}

/// Unshuffle coproduct `Δ(v_1…v_n) = Σ_k Σ_{Sh(k,n-k)} ε · (first k) ⊗ (rest)`.
pub fn coproduct(w: &Word) -> TensorPairSum {
    let n = w.len();
    let mut out = TensorPairSum::new();
    let degs = w.degrees();
    for k in 1..n {
        for u in unshuffles_cached(&[k, n - k], false).iter() {
            let s = koszul_of_order(&u.order, &degs);
            let left = Word(u.order[..k].iter().map(|&i| w.0[i]).collect());
            let right = Word(u.order[k..].iter().map(|&i| w.0[i]).collect());
            let (l, sl) = canonical(&left).expect("sub-word of a canonical word");
            let (r, sr) = canonical(&right).expect("sub-word of a canonical word");
            out.add_term((l, r), scalar::from_sign(s * sl * sr));
        }
    }
    out
}

/// Graded-commutative product of symmetric words.
pub fn product(a: &Word, b: &Word) -> CoalgElement {
    CoalgElement::from_word(Flavor::Symmetric, a.concat(b), scalar::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{coproduct_left, coproduct_right};
    use crate::graded::scalar::int;
    use crate::graded::BasisIndex;

    fn w(ls: &[(i32, usize)]) -> Word {
        Word(ls.iter().map(|&(d, i)| BasisIndex::new(d, i)).collect())
    }

    #[test]
    fn canonical_form_absorbs_sign() {
        let (c, s) = canonical(&w(&[(1, 1), (1, 0)])).unwrap();
        assert_eq!(c, w(&[(1, 0), (1, 1)]));
        assert_eq!(s, -1);
        assert!(canonical(&w(&[(1, 0), (1, 0)])).is_none());
        assert_eq!(canonical(&w(&[(0, 0), (0, 0)])).unwrap().1, 1);
    }

    #[test]
    fn coproduct_examples() {
        assert!(coproduct(&w(&[(1, 0)])).is_zero());
        let d = coproduct(&w(&[(1, 0), (1, 1)]));
        assert_eq!(d.coeff(&(w(&[(1, 0)]), w(&[(1, 1)]))), int(1));
        assert_eq!(d.coeff(&(w(&[(1, 1)]), w(&[(1, 0)]))), int(-1));
    }

    #[test]
    fn coassociative_on_length_four() {
        let x = w(&[(0, 0), (1, 0), (1, 1), (2, 0)]);
        let d = coproduct(&x);
        assert_eq!(coproduct_left(Flavor::Symmetric, &d), coproduct_right(Flavor::Symmetric, &d));
    }
}
