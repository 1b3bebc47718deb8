//! Chain complexes `V_0 ← V_1 ← … ← V_m` versus linear `m`-categories with
//! `L_k = V_0 ⊕ … ⊕ V_k`.

use num_traits::Zero;

use crate::error::{HalgError, Result};
use crate::graded::linalg::Matrix;
use crate::graded::scalar::Scalar;
use crate::graded::{BasisIndex, Vector};
use crate::report::IdentityReport;

/// `d_k: V_k → V_{k−1}` for `k = 1..=m`, stored as `differentials[k − 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    differentials: Vec<Matrix>,
}

impl ChainComplex {
    pub fn new(dims: Vec<usize>, differentials: Vec<Matrix>) -> Result<Self> {
        if dims.is_empty() || differentials.len() + 1 != dims.len() {
            return Err(HalgError::Invalid("need one differential between consecutive terms".into()));
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.rows() != dims[k] || d.cols() != dims[k + 1] {
                return Err(HalgError::Invalid(format!("d_{} has the wrong shape", k + 1)));
            }
        }
        for k in 1..differentials.len() {
            if !differentials[k - 1].mul(&differentials[k])?.is_zero() {
                return Err(HalgError::IdentityFailure(format!("d_{} d_{} ≠ 0", k, k + 1)));
            }
        }
        Ok(ChainComplex { dims, differentials })
    }

    /// Top degree `m`.
    pub fn length(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differential(&self, k: usize) -> &Matrix {
        &self.differentials[k - 1]
    }
}

/// A linear `m`-category on `L_0, …, L_m` with source, target and identity
/// maps; compositions are forced by linearity.
#[derive(Clone, Debug, PartialEq)]
pub struct Linear2Category {
    dims: Vec<usize>,
    source: Vec<Matrix>,
    target: Vec<Matrix>,
    unit: Vec<Matrix>,
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl Linear2Category {
    /// `source[k−1], target[k−1]: L_k → L_{k−1}` and `unit[k−1]: L_{k−1} → L_k`.
    pub fn new(dims: Vec<usize>, source: Vec<Matrix>, target: Vec<Matrix>, unit: Vec<Matrix>) -> Result<Self> {
        let m = dims.len().checked_sub(1).ok_or_else(|| HalgError::Invalid("no objects".into()))?;
        if source.len() != m || target.len() != m || unit.len() != m {
            return Err(HalgError::Invalid("need source, target and unit in every level".into()));
        }
        for k in 0..m {
            let down = (dims[k], dims[k + 1]);
            if (source[k].rows(), source[k].cols()) != down || (target[k].rows(), target[k].cols()) != down {
                return Err(HalgError::Invalid(format!("source/target of level {} have the wrong shape", k + 1)));
            }
            if (unit[k].rows(), unit[k].cols()) != (down.1, down.0) {
                return Err(HalgError::Invalid(format!("unit into level {} has the wrong shape", k + 1)));
            }
        }
        Ok(Linear2Category { dims, source, target, unit })
    }

    pub fn length(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn source_map(&self, level: usize) -> &Matrix {
        &self.source[level - 1]
    }

    pub fn target_map(&self, level: usize) -> &Matrix {
        &self.target[level - 1]
    }

    pub fn unit_map(&self, level: usize) -> &Matrix {
        &self.unit[level - 1]
    }

    fn iterate(&self, maps: &[Matrix], level: usize, steps: usize, v: &[Scalar]) -> Vec<Scalar> {
        (0..steps).fold(v.to_vec(), |x, i| maps[level - 1 - i].apply(&x).expect("shape checked"))
    }

    /// `s^steps` of a cell at `level`.
    pub fn s(&self, level: usize, steps: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.iterate(&self.source, level, steps, v)
    }

    /// `t^steps` of a cell at `level`.
    pub fn t(&self, level: usize, steps: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.iterate(&self.target, level, steps, v)
    }

    /// `1^steps` of a cell at `level`, landing at `level + steps`.
    pub fn one(&self, level: usize, steps: usize, v: &[Scalar]) -> Vec<Scalar> {
        (0..steps).fold(v.to_vec(), |x, i| self.unit[level + i].apply(&x).expect("shape checked"))
    }

    /// `a ∘_p b` for `level`-cells with `t^{level−p} a = s^{level−p} b`
    /// (first `a`, then `b`): `a − 1^{level−p}(t^{level−p} a) + b`.
    pub fn compose(&self, level: usize, p: usize, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>> {
        if p >= level {
            return Err(HalgError::Invalid(format!("cannot compose {level}-cells along {p}-cells")));
        }
        let steps = level - p;
        let ta = self.t(level, steps, a);
        if ta != self.s(level, steps, b) {
            return Err(HalgError::EndpointMismatch(format!("cells are not composable along {p}-cells")));
        }
        Ok(add(&sub(a, &self.one(p, steps, &ta)), b))
    }

    /// Globularity `s s = s t`, `t s = t t` and unit laws `s 1 = t 1 = id`,
    /// checked on every basis cell.
    pub fn check_globular(&self) -> IdentityReport {
        let mut report = IdentityReport::new("linear category");
        for f in ["s s = s t", "t s = t t", "s 1 = id", "t 1 = id"] {
            report.touch(f);
        }
        let record = |report: &mut IdentityReport, name: &str, cell: (usize, usize), out: usize, lhs: Vec<Scalar>, rhs: Vec<Scalar>| {
            let mut r = Vector::new();
            for (i, c) in sub(&lhs, &rhs).into_iter().enumerate() {
                if !c.is_zero() {
                    r.add_term(BasisIndex::new(out as i32, i), c);
                }
            }
            report.record(name, &[BasisIndex::new(cell.0 as i32, cell.1)], r);
        };
        for level in 2..=self.length() {
            for j in 0..self.dims[level] {
                let e = unit_vector(self.dims[level], j);
                let (s, t) = (self.s(level, 1, &e), self.t(level, 1, &e));
                record(&mut report, "s s = s t", (level, j), level - 2, self.s(level - 1, 1, &s), self.s(level - 1, 1, &t));
                record(&mut report, "t s = t t", (level, j), level - 2, self.t(level - 1, 1, &s), self.t(level - 1, 1, &t));
            }
        }
        for level in 0..self.length() {
            for j in 0..self.dims[level] {
                let e = unit_vector(self.dims[level], j);
                let u = self.one(level, 1, &e);
                record(&mut report, "s 1 = id", (level, j), level, self.s(level + 1, 1, &u), e.clone());
                record(&mut report, "t 1 = id", (level, j), level, self.t(level + 1, 1, &u), e);
            }
        }
        report
    }

    /// The same category after the base changes `bases[k]: L_k → L'_k`.
    pub fn transport(&self, bases: &[Matrix]) -> Result<Self> {
        let inv: Vec<Matrix> = bases.iter().map(Matrix::inverse).collect::<Result<_>>()?;
        let conj = |k: usize, m: &Matrix, down: bool| -> Result<Matrix> {
            if down {
                bases[k - 1].mul(m)?.mul(&inv[k])
            } else {
                bases[k].mul(m)?.mul(&inv[k - 1])
            }
        };
        let m = self.length();
        Ok(Linear2Category {
            dims: self.dims.clone(),
            source: (1..=m).map(|k| conj(k, &self.source[k - 1], true)).collect::<Result<_>>()?,
            target: (1..=m).map(|k| conj(k, &self.target[k - 1], true)).collect::<Result<_>>()?,
            unit: (1..=m).map(|k| conj(k, &self.unit[k - 1], false)).collect::<Result<_>>()?,
        })
    }
}

pub fn unit_vector(n: usize, j: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[j] = num_traits::One::one();
    v
}

fn offsets(dims: &[usize], level: usize) -> Vec<usize> {
    let mut o = vec![0];
    for d in &dims[..=level] {
        o.push(o.last().unwrap() + d);
    }
    o
}

/// `L_k = ⊕_{i≤k} V_i`; `s` drops the last entry, `t` adds `d v_k` to the
/// entry before it, `1` appends a zero.
pub fn chain_to_2cat(c: &ChainComplex) -> Linear2Category {
    let m = c.length();
    let size = |k: usize| c.dims[..=k].iter().sum::<usize>();
    let dims: Vec<usize> = (0..=m).map(size).collect();
    let mut source = Vec::new();
    let mut target = Vec::new();
    let mut unit = Vec::new();
    for k in 1..=m {
        let (lo, hi) = (dims[k - 1], dims[k]);
        let mut s = Matrix::zeros(lo, hi);
        let mut u = Matrix::zeros(hi, lo);
        for i in 0..lo {
            s.set(i, i, num_traits::One::one());
            u.set(i, i, num_traits::One::one());
        }
        let mut t = s.clone();
        let o = offsets(&c.dims, k);
        let d = c.differential(k);
        for r in 0..d.rows() {
            for col in 0..d.cols() {
                t.set(o[k - 1] + r, o[k] + col, d.get(r, col).clone());
            }
        }
        source.push(s);
        target.push(t);
        unit.push(u);
    }
    Linear2Category { dims, source, target, unit }
}

/// `V_0 = L_0`, `V_k = ker s_k` with `d` the restriction of `t_k`, written in
/// the kernel basis one level down.
pub fn two_cat_to_chain(l: &Linear2Category) -> Result<ChainComplex> {
    let m = l.length();
    let kernels: Vec<Matrix> = (0..=m).map(|k| if k == 0 { Matrix::identity(l.dims[0]) } else { l.source[k - 1].kernel() }).collect();
    let dims: Vec<usize> = kernels.iter().map(Matrix::cols).collect();
    let mut differentials = Vec::new();
    for k in 1..=m {
        let image = l.target[k - 1].mul(&kernels[k])?;
        let mut d = Matrix::zeros(dims[k - 1], dims[k]);
        for j in 0..dims[k] {
            let coords = kernels[k - 1]
                .solve(&image.column(j))
                .ok_or_else(|| HalgError::IdentityFailure(format!("t_{k} does not map ker s_{k} into ker s_{}", k - 1)))?;
            for (i, c) in coords.into_iter().enumerate() {
                d.set(i, j, c);
            }
        }
        differentials.push(d);
    }
    ChainComplex::new(dims, differentials)
}

/// The comparison `β_k: ⊕_{i≤k} V_i → L_k`, `(v_0, …, v_k) ↦ Σ_i 1^{k−i} v_i`,
/// between the category rebuilt from `two_cat_to_chain(l)` and `l` itself.
pub fn comparison(l: &Linear2Category, level: usize) -> Matrix {
    let kernels: Vec<Matrix> = (0..=level).map(|k| if k == 0 { Matrix::identity(l.dims[0]) } else { l.source[k - 1].kernel() }).collect();
    let total: usize = kernels.iter().map(Matrix::cols).sum();
    let mut beta = Matrix::zeros(l.dims[level], total);
    let mut col = 0;
    for (i, k) in kernels.iter().enumerate() {
        for j in 0..k.cols() {
            let image = l.one(i, level - i, &k.column(j));
            for (r, x) in image.into_iter().enumerate() {
                beta.set(r, col, x);
            }
            col += 1;
        }
    }
    beta
}
