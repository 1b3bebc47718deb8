use std::collections::BTreeMap;

use num_traits::Zero;

use super::comb::{Comb, Vector};
use super::parity;
use super::scalar::{self, Scalar};
use super::space::{BasisIndex, GradedSpace};
use crate::error::{HalgError, Result};

/// Homogeneous multilinear map `source^{⊗arity} → target` stored as a sparse
/// table from basis input tuples to output vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiMap {
    source: GradedSpace,
    target: GradedSpace,
    arity: usize,
    degree: i32,
    entries: BTreeMap<Vec<BasisIndex>, Vector>,
}

/// Tuples of output basis vectors produced by a tensor product of maps.
pub type TupleComb = Comb<Vec<BasisIndex>>;

impl MultiMap {
    pub fn new(source: &GradedSpace, target: &GradedSpace, arity: usize, degree: i32) -> Result<Self> {
        if arity == 0 {
            return Err(HalgError::ArityMismatch { expected: 1, got: 0 });
        }
        Ok(MultiMap {
            source: source.clone(),
            target: target.clone(),
            arity,
            degree,
            entries: BTreeMap::new(),
        })
    }

    pub fn identity(space: &GradedSpace) -> Self {
        let mut id = MultiMap::new(space, space, 1, 0).expect("arity 1");
        for b in space.basis() {
            id.entries.insert(vec![b], Vector::basis(b));
        }
        id
    }

    pub fn source(&self) -> &GradedSpace {
        &self.source
    }

    pub fn target(&self) -> &GradedSpace {
        &self.target
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn entries(&self) -> &BTreeMap<Vec<BasisIndex>, Vector> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of nonzero structure constants.
    pub fn nnz(&self) -> usize {
        self.entries.values().map(Vector::len).sum()
    }

    fn check_inputs(&self, inputs: &[BasisIndex]) -> Result<i32> {
        if inputs.len() != self.arity {
            return Err(HalgError::ArityMismatch { expected: self.arity, got: inputs.len() });
        }
        let mut total = 0;
        for b in inputs {
            self.source.check(b)?;
            total += b.degree;
        }
        Ok(total)
    }

    /// Adds `coeff · output` to the value on `inputs`.
    pub fn add_entry(&mut self, inputs: &[BasisIndex], output: BasisIndex, coeff: Scalar) -> Result<()> {
        let total = self.check_inputs(inputs)?;
        self.target.check(&output)?;
        if output.degree != total + self.degree {
            return Err(HalgError::Inhomogeneous(format!(
                "entry {inputs:?} -> {output} in a map of degree {}",
                self.degree
            )));
        }
        let slot = self.entries.entry(inputs.to_vec()).or_default();
        slot.add_term(output, coeff);
        if slot.is_zero() {
            self.entries.remove(inputs);
        }
        Ok(())
    }

    /// Adds `value` to the value on `inputs`.
    pub fn add_value(&mut self, inputs: &[BasisIndex], value: &Vector) -> Result<()> {
        for (b, c) in value {
            self.add_entry(inputs, *b, c.clone())?;
        }
        if value.is_zero() {
            self.check_inputs(inputs)?;
        }
        Ok(())
    }

    /// Replaces the value on `inputs`.
    pub fn set_value(&mut self, inputs: &[BasisIndex], value: &Vector) -> Result<()> {
        self.check_inputs(inputs)?;
        self.entries.remove(inputs);
        self.add_value(inputs, value)
    }

    pub fn apply_basis(&self, inputs: &[BasisIndex]) -> Vector {
        self.entries.get(inputs).cloned().unwrap_or_default()
    }

    pub fn value_ref(&self, inputs: &[BasisIndex]) -> Option<&Vector> {
        self.entries.get(inputs)
    }

    /// Multilinear extension of the entry table.
    pub fn apply(&self, args: &[Vector]) -> Result<Vector> {
        if args.len() != self.arity {
            return Err(HalgError::ArityMismatch { expected: self.arity, got: args.len() });
        }
        for a in args {
            for b in a.keys() {
                self.source.check(b)?;
            }
        }
        let mut out = Vector::new();
        let mut tuple = Vec::with_capacity(self.arity);
        self.apply_rec(args, &mut tuple, &scalar::one(), &mut out);
        Ok(out)
    }

    fn apply_rec(&self, args: &[Vector], tuple: &mut Vec<BasisIndex>, coeff: &Scalar, out: &mut Vector) {
        if tuple.len() == args.len() {
            if let Some(v) = self.entries.get(tuple.as_slice()) {
                out.add_scaled(v, coeff);
            }
            return;
        }
        for (b, c) in &args[tuple.len()] {
            tuple.push(*b);
            self.apply_rec(args, tuple, &(coeff * c), out);
            tuple.pop();
        }
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(HalgError::ArityMismatch { expected: self.arity, got: other.arity });
        }
        if self.source != other.source || self.target != other.target {
            return Err(HalgError::SpaceMismatch(format!(
                "{}→{} vs {}→{}",
                self.source.name(),
                self.target.name(),
                other.source.name(),
                other.target.name()
            )));
        }
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(HalgError::Inhomogeneous(format!("degrees {} and {}", self.degree, other.degree)));
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &Scalar) -> Result<()> {
        self.same_shape(other)?;
        if self.is_zero() {
            self.degree = other.degree;
        }
        for (k, v) in &other.entries {
            let slot = self.entries.entry(k.clone()).or_default();
            slot.add_scaled(v, factor);
            if slot.is_zero() {
                self.entries.remove(k);
            }
        }
        Ok(())
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        let mut r = self.clone();
        r.add_scaled(other, &scalar::one())?;
        Ok(r)
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        let mut r = self.clone();
        r.add_scaled(other, &scalar::int(-1))?;
        Ok(r)
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        let mut r = self.clone();
        if factor.is_zero() {
            r.entries.clear();
            return r;
        }
        for v in r.entries.values_mut() {
            *v = v.scaled(factor);
        }
        r
    }

    pub fn neg(&self) -> Self {
        self.scaled(&scalar::int(-1))
    }

    /// Same table viewed with different (equal-shaped) spaces or a new degree label.
    pub fn with_spaces(&self, source: &GradedSpace, target: &GradedSpace) -> Result<Self> {
        let mut r = MultiMap::new(source, target, self.arity, self.degree)?;
        for (k, v) in &self.entries {
            r.add_value(k, v)?;
        }
        Ok(r)
    }

    /// Rebuilds the table through `f`, which maps a basis tuple and its value
    /// to a new value; degree is rechecked against `degree`.
    pub fn transform(
        &self,
        source: &GradedSpace,
        target: &GradedSpace,
        degree: i32,
        mut f: impl FnMut(&[BasisIndex], &Vector) -> Result<(Vec<BasisIndex>, Vector)>,
    ) -> Result<Self> {
        let mut r = MultiMap::new(source, target, self.arity, degree)?;
        for (k, v) in &self.entries {
            let (nk, nv) = f(k, v)?;
            r.add_value(&nk, &nv)?;
        }
        Ok(r)
    }

    /// Input tuples whose output degree lands in the target space.
    pub fn relevant_inputs(&self) -> Vec<Vec<BasisIndex>> {
        let target = &self.target;
        let d = self.degree;
        basis_tuples(&self.source, self.arity, |s| target.has_degree(s + d))
    }

    /// `g ∘ self` for a unary `g` on the target.
    pub fn post_compose(&self, g: &MultiMap) -> Result<Self> {
        if g.arity != 1 {
            return Err(HalgError::ArityMismatch { expected: 1, got: g.arity });
        }
        if g.source != self.target {
            return Err(HalgError::SpaceMismatch("post-composition".into()));
        }
        let mut r = MultiMap::new(&self.source, &g.target, self.arity, self.degree + g.degree)?;
        for (k, v) in &self.entries {
            let w = g.apply(std::slice::from_ref(v))?;
            r.add_value(k, &w)?;
        }
        Ok(r)
    }

    /// `self ∘ (g_1 ⊗ … ⊗ g_n)` for unary `g_j`, with Koszul signs from
    /// moving each `g_j` past the earlier inputs.
    pub fn pre_compose(&self, gs: &[&MultiMap]) -> Result<Self> {
        if gs.len() != self.arity {
            return Err(HalgError::ArityMismatch { expected: self.arity, got: gs.len() });
        }
        let src = gs[0].source.clone();
        let mut total_deg = self.degree;
        for g in gs {
            if g.arity != 1 {
                return Err(HalgError::ArityMismatch { expected: 1, got: g.arity });
            }
            if g.target != self.source || g.source != src {
                return Err(HalgError::SpaceMismatch("pre-composition".into()));
            }
            total_deg += g.degree;
        }
        let mut r = MultiMap::new(&src, &self.target, self.arity, total_deg)?;
        let tgt = &self.target;
        for inputs in basis_tuples(&src, self.arity, |s| tgt.has_degree(s + total_deg)) {
            let images = tensor_apply(gs, &inputs)?;
            let mut out = Vector::new();
            for (tuple, c) in &images {
                if let Some(v) = self.entries.get(tuple) {
                    out.add_scaled(v, c);
                }
            }
            r.add_value(&inputs, &out)?;
        }
        Ok(r)
    }

    /// Unary composition `self ∘ g`.
    pub fn compose(&self, g: &MultiMap) -> Result<Self> {
        g.post_compose(self)
    }

    /// Graded transpose `f*: W* → V*`, `(f*ξ)(v) = (-1)^{|f||ξ|} ξ(f v)`.
    pub fn transpose(&self) -> Result<Self> {
        if self.arity != 1 {
            return Err(HalgError::ArityMismatch { expected: 1, got: self.arity });
        }
        let vd = self.source.dual()?;
        let wd = self.target.dual()?;
        let mut r = MultiMap::new(&wd, &vd, 1, self.degree)?;
        for (k, v) in &self.entries {
            for (w, c) in v {
                let xi = BasisIndex::new(-w.degree, w.index);
                let out = BasisIndex::new(-k[0].degree, k[0].index);
                let s = parity((self.degree as i64) * (xi.degree as i64));
                r.add_entry(&[xi], out, scalar::signed(c, s))?;
            }
        }
        Ok(r)
    }

    /// Dense block `target_{d+|f|} × source_d` of a unary map.
    pub fn block_matrix(&self, from_degree: i32) -> super::linalg::Matrix {
        let rows = self.target.dim(from_degree + self.degree);
        let cols = self.source.dim(from_degree);
        let mut m = super::linalg::Matrix::zeros(rows, cols);
        for j in 0..cols {
            if let Some(v) = self.entries.get(&vec![BasisIndex::new(from_degree, j)]) {
                for (b, c) in v {
                    m.set(b.index, j, c.clone());
                }
            }
        }
        m
    }

    /// Inverse of [`MultiMap::block_matrix`] on one degree block of a unary map.
    pub fn set_block(&mut self, from_degree: i32, m: &super::linalg::Matrix) -> Result<()> {
        let out_deg = from_degree + self.degree;
        for j in 0..m.cols() {
            let mut v = Vector::new();
            for i in 0..m.rows() {
                v.add_term(BasisIndex::new(out_deg, i), m.get(i, j).clone());
            }
            self.set_value(&[BasisIndex::new(from_degree, j)], &v)?;
        }
        Ok(())
    }
}

/// Sign of `(f_1 ⊗ … ⊗ f_k)` acting on blocks whose degree totals are given:
/// `Π_j (-1)^{|f_j| · (degree of all earlier inputs)}`.
pub fn tensor_sign(map_degrees: &[i32], block_degrees: &[i32]) -> i32 {
    let mut before: i64 = 0;
    let mut e: i64 = 0;
    for (fd, bd) in map_degrees.iter().zip(block_degrees) {
        e += (*fd as i64) * before;
        before += *bd as i64;
    }
    parity(e)
}

/// `(f_1 ⊗ … ⊗ f_k)(inputs)`, the inputs split consecutively by arity.
pub fn tensor_apply(maps: &[&MultiMap], inputs: &[BasisIndex]) -> Result<TupleComb> {
    let total: usize = maps.iter().map(|m| m.arity).sum();
    if total != inputs.len() {
        return Err(HalgError::ArityMismatch { expected: total, got: inputs.len() });
    }
    let mut acc = TupleComb::single(Vec::new(), scalar::one());
    let mut pos = 0;
    let mut before: i64 = 0;
    for m in maps {
        let block = &inputs[pos..pos + m.arity];
        let s = parity((m.degree as i64) * before);
        let value = m.apply_basis(block);
        let mut next = TupleComb::new();
        for (prefix, c) in &acc {
            for (b, d) in &value {
                let mut t = prefix.clone();
                t.push(*b);
                next.add_term(t, scalar::signed(&(c * d), s));
            }
        }
        acc = next;
        before += block.iter().map(|b| b.degree as i64).sum::<i64>();
        pos += m.arity;
    }
    Ok(acc)
}

/// All basis tuples of length `n` whose degree sum satisfies `keep`.
pub fn basis_tuples(space: &GradedSpace, n: usize, keep: impl Fn(i32) -> bool) -> Vec<Vec<BasisIndex>> {
    let basis = space.basis();
    let mut out = Vec::new();
    let (lo, hi) = match (space.min_degree(), space.max_degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return out,
    };
    let mut cur = Vec::with_capacity(n);
    fn rec(
        basis: &[BasisIndex],
        n: usize,
        lo: i32,
        hi: i32,
        sum: i32,
        cur: &mut Vec<BasisIndex>,
        keep: &dyn Fn(i32) -> bool,
        out: &mut Vec<Vec<BasisIndex>>,
    ) {
        let left = (n - cur.len()) as i32;
        if left == 0 {
            if keep(sum) {
                out.push(cur.clone());
            }
            return;
        }
        // prune when no completion can reach an accepted degree sum
        if !(sum + left * lo..=sum + left * hi).any(keep) {
            return;
        }
        for b in basis {
            cur.push(*b);
            rec(basis, n, lo, hi, sum + b.degree, cur, keep, out);
            cur.pop();
        }
    }
    rec(&basis, n, lo, hi, 0, &mut cur, &keep, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::scalar::int;

    fn space() -> GradedSpace {
        GradedSpace::new("V", [(0, 2), (1, 1)]).unwrap()
    }

    #[test]
    fn homogeneity_is_enforced() {
        let v = space();
        let mut f = MultiMap::new(&v, &v, 2, 0).unwrap();
        assert!(f.add_entry(&[BasisIndex::new(0, 0), BasisIndex::new(1, 0)], BasisIndex::new(1, 0), int(1)).is_ok());
        assert!(f.add_entry(&[BasisIndex::new(0, 0), BasisIndex::new(0, 0)], BasisIndex::new(1, 0), int(1)).is_err());
        assert!(f.add_entry(&[BasisIndex::new(0, 0)], BasisIndex::new(0, 0), int(1)).is_err());
        assert!(f.add_entry(&[BasisIndex::new(0, 5), BasisIndex::new(0, 0)], BasisIndex::new(0, 0), int(1)).is_err());
    }

    #[test]
    fn zero_map_gives_zero() {
        let v = space();
        let f = MultiMap::new(&v, &v, 2, 0).unwrap();
        let x = Vector::basis(BasisIndex::new(0, 1));
        assert!(f.apply(&[x.clone(), x]).unwrap().is_zero());
    }

    #[test]
    fn koszul_sign_of_id_tensor_f() {
        let v = GradedSpace::new("V", [(1, 1), (2, 1)]).unwrap();
        let mut f = MultiMap::new(&v, &v, 1, 1).unwrap();
        f.add_entry(&[BasisIndex::new(1, 0)], BasisIndex::new(2, 0), int(1)).unwrap();
        let id = MultiMap::identity(&v);
        let img = tensor_apply(&[&id, &f], &[BasisIndex::new(1, 0), BasisIndex::new(1, 0)]).unwrap();
        assert_eq!(img.coeff(&vec![BasisIndex::new(1, 0), BasisIndex::new(2, 0)]), int(-1));
    }

    #[test]
    fn transpose_of_composite() {
        let v = GradedSpace::new("V", [(0, 1), (1, 1), (2, 1)]).unwrap();
        let mut f = MultiMap::new(&v, &v, 1, 1).unwrap();
        f.add_entry(&[BasisIndex::new(1, 0)], BasisIndex::new(2, 0), int(3)).unwrap();
        let mut g = MultiMap::new(&v, &v, 1, 1).unwrap();
        g.add_entry(&[BasisIndex::new(0, 0)], BasisIndex::new(1, 0), int(5)).unwrap();
        let fg = f.compose(&g).unwrap();
        let lhs = fg.transpose().unwrap();
        let rhs = g.transpose().unwrap().compose(&f.transpose().unwrap()).unwrap();
        assert_eq!(lhs, rhs.scaled(&int(-1)));
        assert!(!lhs.is_zero());
    }

    #[test]
    fn tuple_enumeration_prunes() {
        let v = space();
        assert_eq!(basis_tuples(&v, 2, |_| true).len(), 9);
        assert_eq!(basis_tuples(&v, 3, |s| s == 0).len(), 8);
        assert_eq!(basis_tuples(&v, 3, |s| s > 3).len(), 0);
    }
}
