use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use super::parity;
use crate::error::{HalgError, Result};

/// Permutation of `{1..n}` stored by its 1-based images `σ(1), …, σ(n)`.
///
/// Acting on a sequence `v_1 … v_n` it produces `v_{σ(1)} … v_{σ(n)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(HalgError::InvalidPermutation(format!("{images:?}")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Builds from 0-based positions (the order in which symbols are read).
    pub fn from_order(order: &[usize]) -> Self {
        Permutation { images: order.iter().map(|&i| i + 1).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// 0-based reading order.
    pub fn order(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i - 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (k, &i) in self.images.iter().enumerate() {
            inv[i - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(HalgError::LengthMismatch { expected: self.len(), got: other.len() });
        }
        Ok(Permutation { images: other.images.iter().map(|&i| self.images[i - 1]).collect() })
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.images)
    }

    /// `sign(σ) = (-1)^{#inversions}`.
    pub fn sign(&self) -> i32 {
        parity(self.inversions() as i64)
    }

    /// `v_{σ(1)} … v_{σ(n)}`.
    pub fn apply<T: Clone>(&self, items: &[T]) -> Vec<T> {
        self.images.iter().map(|&i| items[i - 1].clone()).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

fn inversions<T: Ord>(seq: &[T]) -> usize {
    let mut count = 0;
    for k in 0..seq.len() {
        for l in k + 1..seq.len() {
            if seq[k] > seq[l] {
                count += 1;
            }
        }
    }
    count
}

/// Koszul sign `ε(σ; v_1..v_n)` of reading graded symbols in the order `σ`.
pub fn koszul_sign(sigma: &Permutation, degrees: &[i32]) -> Result<i32> {
    if degrees.len() != sigma.len() {
        return Err(HalgError::LengthMismatch { expected: sigma.len(), got: degrees.len() });
    }
    Ok(koszul_of_order(&sigma.order(), degrees))
}

/// Koszul sign of reading `degrees` along the 0-based `order`.
pub fn koszul_of_order(order: &[usize], degrees: &[i32]) -> i32 {
    let mut e: i64 = 0;
    for k in 0..order.len() {
        let dk = degrees[order[k]];
        if dk % 2 == 0 {
            continue;
        }
        for l in k + 1..order.len() {
            if order[k] > order[l] && degrees[order[l]] % 2 != 0 {
                e += 1;
            }
        }
    }
    parity(e)
}

/// Sign of the 0-based `order`.
pub fn sign_of_order(order: &[usize]) -> i32 {
    parity(inversions(order) as i64)
}

/// An unshuffle in compact form: reading order plus block sizes, with its sign.
#[derive(Clone, Debug)]
pub struct Unshuffle {
    pub order: Vec<usize>,
    pub sign: i32,
}

impl Unshuffle {
    pub fn block<'a, T>(&'a self, sizes: &[usize], b: usize, items: &'a [T]) -> impl Iterator<Item = &'a T> + 'a {
        let start: usize = sizes[..b].iter().sum();
        let end = start + sizes[b];
        self.order[start..end].iter().map(move |&i| &items[i])
    }
}

thread_local! {
    static UNSHUFFLE_CACHE: RefCell<HashMap<(Vec<usize>, bool), Rc<Vec<Unshuffle>>>> = RefCell::new(HashMap::new());
}

/// All `σ ∈ Sh(i_1,…,i_k)` (increasing on each block), and with `half` the
/// subset `Hsh` whose block-final images increase. Memoised per thread.
pub fn unshuffles_cached(sizes: &[usize], half: bool) -> Rc<Vec<Unshuffle>> {
    let key = (sizes.to_vec(), half);
    if let Some(hit) = UNSHUFFLE_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let n: usize = sizes.iter().sum();
    let mut out = Vec::new();
    let mut assign: Vec<usize> = vec![usize::MAX; n];
    fill_blocks(sizes, 0, &mut assign, &mut vec![0; sizes.len()], &mut out, half);
    let rc = Rc::new(out);
    UNSHUFFLE_CACHE.with(|c| c.borrow_mut().insert(key, rc.clone()));
    rc
}

fn fill_blocks(
    sizes: &[usize],
    pos: usize,
    assign: &mut Vec<usize>,
    used: &mut Vec<usize>,
    out: &mut Vec<Unshuffle>,
    half: bool,
) {
    let n = assign.len();
    if pos == n {
        let mut order = Vec::with_capacity(n);
        for b in 0..sizes.len() {
            for (i, &a) in assign.iter().enumerate() {
                if a == b {
                    order.push(i);
                }
            }
        }
        if half {
            let mut start = 0;
            let mut last: Option<usize> = None;
            for &s in sizes {
                if s == 0 {
                    continue;
                }
                let fin = order[start + s - 1];
                if let Some(l) = last {
                    if fin < l {
                        return;
                    }
                }
                last = Some(fin);
                start += s;
            }
        }
        let sign = sign_of_order(&order);
        out.push(Unshuffle { order, sign });
        return;
    }
    for b in 0..sizes.len() {
        if used[b] < sizes[b] {
            used[b] += 1;
            assign[pos] = b;
            fill_blocks(sizes, pos + 1, assign, used, out, half);
            used[b] -= 1;
        }
    }
}

/// `Sh(p,q)`.
pub fn enumerate_shuffles(p: usize, q: usize) -> Vec<Permutation> {
    enumerate_unshuffles(&[p, q])
}

/// `Sh(i_1,…,i_k)`.
pub fn enumerate_unshuffles(sizes: &[usize]) -> Vec<Permutation> {
    unshuffles_cached(sizes, false).iter().map(|u| Permutation::from_order(&u.order)).collect()
}

/// `Hsh(i_1,…,i_k)`.
pub fn enumerate_half_unshuffles(sizes: &[usize]) -> Vec<Permutation> {
    unshuffles_cached(sizes, true).iter().map(|u| Permutation::from_order(&u.order)).collect()
}

/// All permutations of `n` symbols (Heap-free lexicographic recursion, 0-based orders).
pub fn all_orders(n: usize) -> Rc<Vec<Unshuffle>> {
    unshuffles_cached(&vec![1; n], false)
}

/// Ordered compositions of `n` into `parts` positive summands.
pub fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(n: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if n < parts {
            return;
        }
        for first in 1..=n - (parts - 1) {
            cur.push(first);
            rec(n - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, parts, &mut Vec::new(), &mut out);
    out
}

/// Ordered tuples of nonnegative integers of length `parts` summing to `n`.
pub fn weak_compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(n: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for first in 0..=n {
            cur.push(first);
            rec(n - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, parts, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::scalar::binomial;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn koszul_examples() {
        assert_eq!(koszul_sign(&Permutation::identity(3), &[1, 1, 1]).unwrap(), 1);
        assert_eq!(koszul_sign(&p(&[2, 1]), &[1, 1]).unwrap(), -1);
        assert_eq!(koszul_sign(&p(&[2, 3, 1]), &[1, 1, 0]).unwrap(), -1);
        assert!(koszul_sign(&p(&[2, 1]), &[1]).is_err());
    }

    #[test]
    fn shuffle_examples() {
        let sh11 = enumerate_shuffles(1, 1);
        assert_eq!(sh11, vec![Permutation::identity(2), p(&[2, 1])]);
        assert_eq!(enumerate_shuffles(2, 1).len(), 3);
        assert_eq!(enumerate_half_unshuffles(&[1, 1]), vec![Permutation::identity(2)]);
    }

    #[test]
    fn shuffle_counts_and_constraints() {
        for n in 0..=6 {
            for k in 0..=n {
                let all = enumerate_shuffles(k, n - k);
                assert_eq!(all.len(), binomial(n, k));
                let mut dedup = all.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), all.len());
                for s in &all {
                    let im = s.images();
                    assert!(im[..k].windows(2).all(|w| w[0] < w[1]));
                    assert!(im[k..].windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
    }

    #[test]
    fn half_unshuffles_have_ordered_finals() {
        for s in enumerate_half_unshuffles(&[2, 1, 2]) {
            let im = s.images();
            assert!(im[1] < im[2] && im[2] < im[4]);
            assert_eq!(im[4], 5);
        }
        assert_eq!(all_orders(4).len(), 24);
    }

    #[test]
    fn inverse_and_compose() {
        let s = p(&[3, 1, 2]);
        assert_eq!(s.compose(&s.inverse()).unwrap(), Permutation::identity(3));
        assert_eq!(s.apply(&['a', 'b', 'c']), vec!['c', 'a', 'b']);
        assert_eq!(s.sign(), 1);
        assert!(Permutation::new(vec![1, 1]).is_err());
    }

    #[test]
    fn compositions_enumerate() {
        assert_eq!(compositions(3, 2), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(weak_compositions(2, 2).len(), 3);
    }
}
