//! Conjugation of multilinear maps by the suspension `s: V → sV`.
//!
//! `s` has degree `+1`, so `s^{⊗n}(v_1⊗…⊗v_n) = (-1)^{Σ(n-i)|v_i|} sv_1⊗…⊗sv_n`
//! and `(s^{-1})^{⊗n}` behaves the same way on suspended degrees.

use super::multimap::MultiMap;
use super::parity;
use super::perm::{koszul_sign, Permutation};
use super::scalar;
use super::space::BasisIndex;
use crate::error::Result;

/// Sign of `s^{⊗n}` (or of `(s^{-1})^{⊗n}`) on a tuple of the given degrees.
pub fn tensor_shift_sign(degrees: &[i32]) -> i32 {
    let n = degrees.len() as i64;
    let e: i64 = degrees.iter().enumerate().map(|(i, &d)| (n - 1 - i as i64) * d as i64).sum();
    parity(e)
}

/// `(-1)^{n(n-1)/2}`, the sign of `s^{⊗n} ∘ (s^{-1})^{⊗n}`.
pub fn triangular_sign(n: usize) -> i32 {
    parity((n * n.saturating_sub(1) / 2) as i64)
}

fn degrees_of(t: &[BasisIndex]) -> Vec<i32> {
    t.iter().map(|b| b.degree).collect()
}

/// `s^{-1} ∘ f ∘ s^{⊗n}` for `f: (sV)^{⊗n} → sW`; the result `V^{⊗n} → W`
/// has degree `|f| + n - 1`.
pub fn suspend_map(f: &MultiMap) -> Result<MultiMap> {
    let n = f.arity();
    let source = f.source().desuspend()?;
    let target = f.target().desuspend()?;
    f.transform(&source, &target, f.degree() + n as i32 - 1, |k, v| {
        let inputs: Vec<BasisIndex> = k.iter().map(|b| b.shifted(-1)).collect();
        let sign = tensor_shift_sign(&degrees_of(&inputs));
        let out = v.map_linear(|b| crate::graded::Vector::basis(b.shifted(-1)));
        Ok((inputs, out.scaled(&scalar::from_sign(sign))))
    })
}

/// Inverse of [`suspend_map`]: `(-1)^{n(n-1)/2} s ∘ g ∘ (s^{-1})^{⊗n}`.
pub fn desuspend_map(g: &MultiMap) -> Result<MultiMap> {
    let n = g.arity();
    let source = g.source().suspend()?;
    let target = g.target().suspend()?;
    g.transform(&source, &target, g.degree() - n as i32 + 1, |k, v| {
        let inputs: Vec<BasisIndex> = k.iter().map(|b| b.shifted(1)).collect();
        let sign = triangular_sign(n) * tensor_shift_sign(&degrees_of(&inputs));
        let out = v.map_linear(|b| crate::graded::Vector::basis(b.shifted(1)));
        Ok((inputs, out.scaled(&scalar::from_sign(sign))))
    })
}

/// Coefficient `c` with `(s^{-1})^{⊗n} ∘ σ ∘ s^{⊗n} = c · σ` on a basis tuple
/// of the given degrees, where `σ` acts by Koszul-signed reordering.
pub fn permutation_conjugation_sign(sigma: &Permutation, degrees: &[i32]) -> Result<i32> {
    let up = tensor_shift_sign(degrees);
    let shifted: Vec<i32> = degrees.iter().map(|d| d + 1).collect();
    let reorder = koszul_sign(sigma, &shifted)?;
    let permuted = sigma.apply(&shifted);
    let down = tensor_shift_sign(&permuted);
    let plain = koszul_sign(sigma, degrees)?;
    Ok(up * reorder * down * plain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::perm::all_orders;
    use crate::graded::scalar::int;
    use crate::graded::space::GradedSpace;

    #[test]
    fn unary_suspension_keeps_signs() {
        let sv = GradedSpace::new("sV", [(1, 1), (2, 1)]).unwrap();
        let mut f = MultiMap::new(&sv, &sv, 1, 1).unwrap();
        f.add_entry(&[BasisIndex::new(1, 0)], BasisIndex::new(2, 0), int(4)).unwrap();
        let g = suspend_map(&f).unwrap();
        assert_eq!(g.degree(), 1);
        assert_eq!(g.apply_basis(&[BasisIndex::new(0, 0)]).coeff(&BasisIndex::new(1, 0)), int(4));
    }

    #[test]
    fn roundtrip_binary() {
        let v = GradedSpace::new("V", [(0, 1), (1, 1)]).unwrap();
        let mut g = MultiMap::new(&v, &v, 2, 0).unwrap();
        g.add_entry(&[BasisIndex::new(0, 0), BasisIndex::new(1, 0)], BasisIndex::new(1, 0), int(2)).unwrap();
        g.add_entry(&[BasisIndex::new(0, 0), BasisIndex::new(0, 0)], BasisIndex::new(0, 0), int(-1)).unwrap();
        let d = desuspend_map(&g).unwrap();
        assert_eq!(d.degree(), -1);
        assert_eq!(suspend_map(&d).unwrap(), g);
    }

    #[test]
    fn conjugated_permutation_sign() {
        for n in 1..=4usize {
            for u in all_orders(n).iter() {
                let sigma = Permutation::from_order(&u.order);
                for mask in 0..(1u32 << n) {
                    let degs: Vec<i32> = (0..n).map(|i| ((mask >> i) & 1) as i32).collect();
                    assert_eq!(
                        permutation_conjugation_sign(&sigma, &degs).unwrap(),
                        triangular_sign(n) * sigma.sign(),
                    );
                }
            }
        }
    }
}
