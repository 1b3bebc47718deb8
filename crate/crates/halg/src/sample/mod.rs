//! Seeded random generators: scalars, maps, seed algebras and valid
//! ∞-structures obtained by transporting a seed along a random coalgebra
//! automorphism.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coalgebra::extend::corestriction;
use crate::coalgebra::{CoalgMorphism, Coderivation, Flavor, Word};
use crate::error::Result;
use crate::graded::linalg::Matrix;
use crate::graded::multimap::basis_tuples;
use crate::graded::scalar::{self, Scalar};
use crate::graded::suspension::suspend_map;
use crate::graded::{BasisIndex, GradedSpace, MultiMap, Vector};
use crate::infinity::{to_codifferential, InftyMorphism, InftyStructure, Kind};
use crate::loday::{Action, LeibnizAlgebra, LodayCochain, Representation};
use crate::two_term::{ChainComplex, TwoTermHomotopy, TwoTermLeibniz, TwoTermMorphism};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// Small integer in `[-r, r]`.
    pub fn small_int(&mut self, r: i64) -> i64 {
        self.rng.gen_range(-r..=r)
    }

    /// Small rational, mostly integers.
    pub fn scalar(&mut self) -> Scalar {
        let n = self.small_int(3);
        if self.coin(0.2) {
            scalar::frac(n, self.rng.gen_range(1..=3))
        } else {
            scalar::int(n)
        }
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let c = self.scalar();
            if c != scalar::zero() {
                return c;
            }
        }
    }

    pub fn vector(&mut self, space: &GradedSpace, degree: i32) -> Vector {
        let mut v = Vector::new();
        for b in space.basis_of_degree(degree) {
            v.add_term(b, self.scalar());
        }
        v
    }

    /// Random homogeneous map; each structure constant is nonzero with probability `density`.
    pub fn map(&mut self, source: &GradedSpace, target: &GradedSpace, arity: usize, degree: i32, density: f64) -> MultiMap {
        let mut m = MultiMap::new(source, target, arity, degree).expect("arity ≥ 1");
        for t in basis_tuples(source, arity, |s| target.has_degree(s + degree)) {
            let d: i32 = t.iter().map(|b| b.degree).sum::<i32>() + degree;
            for out in target.basis_of_degree(d) {
                if self.coin(density) {
                    let c = self.nonzero_scalar();
                    m.add_entry(&t, out, c).expect("homogeneous by construction");
                }
            }
        }
        m
    }

    /// Random invertible matrix: a product of a permutation with unit triangular factors.
    pub fn invertible(&mut self, n: usize) -> Matrix {
        let mut lower = Matrix::identity(n);
        let mut upper = Matrix::identity(n);
        for i in 0..n {
            for j in 0..i {
                lower.set(i, j, scalar::int(self.small_int(2)));
                upper.set(j, i, scalar::int(self.small_int(2)));
            }
            let d = if self.coin(0.5) { 1 } else { -1 } * self.rng.gen_range(1..=2);
            upper.set(i, i, scalar::int(d));
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut self.rng);
        let mut p = Matrix::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            p.set(i, j, scalar::one());
        }
        p.mul(&lower).and_then(|m| m.mul(&upper)).expect("square factors")
    }

    /// Degree-0 automorphism of a graded space, blockwise invertible.
    pub fn automorphism(&mut self, space: &GradedSpace) -> MultiMap {
        let mut m = MultiMap::new(space, space, 1, 0).expect("arity 1");
        for d in space.degrees().collect::<Vec<_>>() {
            let a = self.invertible(space.dim(d));
            m.set_block(d, &a).expect("degree-preserving block");
        }
        m
    }
}

/// Named degree-0 seed algebras; every entry is `(a, b, out, coeff)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeedAlgebra {
    /// `[y,y] = x`.
    SquareToCentre,
    /// `[x,y] = x`, skew.
    Affine,
    /// `[e,f] = h, [h,e] = 2e, [h,f] = −2f`, skew.
    Sl2,
    /// `[x,y] = z`, skew.
    Heisenberg,
    /// `[e,m] = m` only: a Lie algebra acting on a module from the left.
    Hemisemidirect,
    Abelian(usize),
}

impl SeedAlgebra {
    pub const LIE: [SeedAlgebra; 4] = [SeedAlgebra::Affine, SeedAlgebra::Sl2, SeedAlgebra::Heisenberg, SeedAlgebra::Abelian(2)];
    pub const LEIBNIZ: [SeedAlgebra; 6] = [
        SeedAlgebra::SquareToCentre,
        SeedAlgebra::Affine,
        SeedAlgebra::Sl2,
        SeedAlgebra::Heisenberg,
        SeedAlgebra::Hemisemidirect,
        SeedAlgebra::Abelian(2),
    ];

    pub fn dim(self) -> usize {
        match self {
            SeedAlgebra::SquareToCentre | SeedAlgebra::Affine | SeedAlgebra::Hemisemidirect => 2,
            SeedAlgebra::Sl2 | SeedAlgebra::Heisenberg => 3,
            SeedAlgebra::Abelian(n) => n,
        }
    }

    pub fn is_lie(self) -> bool {
        !matches!(self, SeedAlgebra::SquareToCentre | SeedAlgebra::Hemisemidirect)
    }

    pub fn structure_constants(self) -> Vec<(usize, usize, usize, i64)> {
        let skew = |list: &[(usize, usize, usize, i64)]| {
            list.iter().flat_map(|&(a, b, c, k)| [(a, b, c, k), (b, a, c, -k)]).collect::<Vec<_>>()
        };
        match self {
            SeedAlgebra::SquareToCentre => vec![(1, 1, 0, 1)],
            SeedAlgebra::Affine => skew(&[(0, 1, 0, 1)]),
            SeedAlgebra::Sl2 => skew(&[(0, 1, 2, 1), (2, 0, 0, 2), (2, 1, 1, -2)]),
            SeedAlgebra::Heisenberg => skew(&[(0, 1, 2, 1)]),
            SeedAlgebra::Hemisemidirect => vec![(0, 1, 1, 1)],
            SeedAlgebra::Abelian(_) => vec![],
        }
    }

    /// Basis indices spanning a subspace killed by brackets on both sides.
    pub fn annihilator(self) -> Vec<usize> {
        match self {
            SeedAlgebra::SquareToCentre => vec![0],
            SeedAlgebra::Heisenberg => vec![2],
            SeedAlgebra::Abelian(n) => (0..n).collect(),
            _ => vec![],
        }
    }

    /// Bracket on the degree-0 part of `space`.
    pub fn bracket_on(self, space: &GradedSpace) -> Result<MultiMap> {
        let mut l2 = MultiMap::new(space, space, 2, 0)?;
        for (a, b, c, k) in self.structure_constants() {
            l2.add_entry(&[BasisIndex::new(0, a), BasisIndex::new(0, b)], BasisIndex::new(0, c), scalar::int(k))?;
        }
        Ok(l2)
    }
}

/// A valid 2- or 3-term structure in degrees `0..terms`, built from a seed
/// algebra in degree 0 acting on the higher terms, with `l_1` landing in the
/// annihilator (or zero).
pub fn seed_structure(smp: &mut Sampler, kind: Kind, terms: usize) -> Result<InftyStructure> {
    let seeds: &[SeedAlgebra] = match kind {
        Kind::Lie => &SeedAlgebra::LIE,
        Kind::Leibniz => &SeedAlgebra::LEIBNIZ,
    };
    let seed = *seeds.choose(smp.rng()).unwrap();
    let mut dims = vec![(0, seed.dim())];
    for d in 1..terms as i32 {
        dims.push((d, smp.below(3) + 1));
    }
    let space = GradedSpace::new("V", dims)?;
    let l2 = seed.bracket_on(&space)?;
    let mut brackets = vec![l2];
    let ann = seed.annihilator();
    let use_action = ann.is_empty() || smp.coin(0.5);
    if use_action {
        // l_1 = 0 and V_1 is a left module; for Lie seeds the right action is
        // fixed by antisymmetry
        if let Some(action) = left_action(smp, seed, &space)? {
            brackets.push(action_bracket(kind, seed, &space, &action)?);
        }
    } else {
        let mut l1 = MultiMap::new(&space, &space, 1, -1)?;
        for h in space.basis_of_degree(1) {
            for &a in &ann {
                l1.add_entry(&[h], BasisIndex::new(0, a), smp.scalar())?;
            }
        }
        if terms > 2 {
            // degree-2 generators map into ker(l_1 | V_1)
            let block = l1.block_matrix(1);
            let kernel = block.kernel();
            for h in space.basis_of_degree(2) {
                for c in 0..kernel.cols() {
                    let coeff = smp.scalar();
                    for r in 0..kernel.rows() {
                        let x = kernel.get(r, c) * &coeff;
                        l1.add_entry(&[h], BasisIndex::new(1, r), x)?;
                    }
                }
            }
        }
        brackets.push(l1);
    }
    InftyStructure::new(kind, &space, brackets)
}

/// Matrices `ρ(a)` on `V_1` forming a left representation of the seed, if one is known.
fn left_action(smp: &mut Sampler, seed: SeedAlgebra, space: &GradedSpace) -> Result<Option<Vec<Matrix>>> {
    let m = space.dim(1);
    let n = seed.dim();
    let zero = || Matrix::zeros(m, m);
    Ok(match seed {
        SeedAlgebra::SquareToCentre | SeedAlgebra::Hemisemidirect => {
            // ρ(x) = 0 (resp. ρ(m) = 0) and the other generator acts freely
            let mut r = vec![zero(), zero()];
            let free = if seed == SeedAlgebra::SquareToCentre { 1 } else { 0 };
            let mut a = zero();
            for i in 0..m {
                for j in 0..m {
                    a.set(i, j, scalar::int(smp.small_int(1)));
                }
            }
            r[free] = a;
            Some(r)
        }
        SeedAlgebra::Abelian(_) => {
            // commuting actions: polynomials in one matrix
            let mut base = zero();
            for i in 0..m {
                for j in 0..m {
                    base.set(i, j, scalar::int(smp.small_int(1)));
                }
            }
            let sq = base.mul(&base)?;
            let mut r = Vec::new();
            for _ in 0..n {
                let (p, q) = (smp.small_int(1), smp.small_int(1));
                let mut a = zero();
                for i in 0..m {
                    for j in 0..m {
                        a.set(i, j, scalar::int(p) * base.get(i, j) + scalar::int(q) * sq.get(i, j));
                    }
                }
                r.push(a);
            }
            Some(r)
        }
        SeedAlgebra::Affine if m >= 1 => {
            // ρ(x) = 0, ρ(y) arbitrary
            let mut a = zero();
            for i in 0..m {
                a.set(i, i, scalar::int(smp.small_int(2)));
            }
            Some(vec![zero(), a])
        }
        _ => None,
    })
}

fn action_bracket(kind: Kind, seed: SeedAlgebra, space: &GradedSpace, action: &[Matrix]) -> Result<MultiMap> {
    let mut l2 = MultiMap::new(space, space, 2, 0)?;
    let _ = seed;
    for (a, rho) in action.iter().enumerate() {
        for j in 0..rho.cols() {
            for i in 0..rho.rows() {
                let c = rho.get(i, j).clone();
                let x = BasisIndex::new(0, a);
                let h = BasisIndex::new(1, j);
                let out = BasisIndex::new(1, i);
                l2.add_entry(&[x, h], out, c.clone())?;
                if kind == Kind::Lie {
                    l2.add_entry(&[h, x], out, -c)?;
                }
            }
        }
    }
    Ok(l2)
}

/// Random degree-0 coalgebra automorphism of `Zin^c(U)` or `S^c(U)` with an
/// invertible linear part and random higher corestrictions up to `max_arity`.
pub fn random_automorphism(smp: &mut Sampler, flavor: Flavor, suspended: &GradedSpace, max_arity: usize) -> Result<CoalgMorphism> {
    let mut maps = vec![smp.automorphism(suspended)];
    for k in 2..=max_arity {
        let raw = smp.map(suspended, suspended, k, 0, 0.4);
        let m = match flavor {
            Flavor::Zinbiel => raw,
            Flavor::Symmetric => symmetrize(&raw)?,
        };
        if !m.is_zero() {
            maps.push(m);
        }
    }
    CoalgMorphism::new(flavor, maps)
}

/// Graded-symmetric map agreeing with `m` on sorted input tuples.
pub fn symmetrize(m: &MultiMap) -> Result<MultiMap> {
    let tgt = m.target().clone();
    corestriction(m.source(), &tgt, m.arity(), m.degree(), Flavor::Symmetric, |w| {
        Ok(crate::coalgebra::CoalgElement::from_vector(Flavor::Symmetric, &m.apply_basis(&w.0)))
    })
}

/// Inverse coalgebra automorphism: `G_1 = F_1^{-1}` and
/// `G_n = −F_1^{-1} ∘ pr_1 F(G_{<n})` on words of length `n`.
pub fn inverse_morphism(f: &CoalgMorphism, space: &GradedSpace, max_arity: usize) -> Result<CoalgMorphism> {
    let f1 = f.component(1).expect("linear part");
    let mut inv1 = MultiMap::new(space, space, 1, 0)?;
    for d in space.degrees().collect::<Vec<_>>() {
        inv1.set_block(d, &f1.block_matrix(d).inverse()?)?;
    }
    let mut comps = vec![inv1.clone()];
    for n in 2..=max_arity {
        let partial = CoalgMorphism::new(f.flavor(), comps.clone())?;
        let m = corestriction(space, space, n, 0, f.flavor(), |w: &Word| f.apply(&partial.apply_word(w)?))?;
        let gn = m.post_compose(&inv1)?.neg();
        if !gn.is_zero() {
            comps.push(gn);
        }
    }
    CoalgMorphism::new(f.flavor(), comps)
}

/// Transported structure `F_*S` with codifferential `pr(F ∘ D ∘ F^{-1})`.
pub fn pushforward(s: &InftyStructure, f: &CoalgMorphism, g: &CoalgMorphism, max_arity: usize) -> Result<InftyStructure> {
    let d = to_codifferential(s)?;
    let su = s.space().suspend()?;
    let mut maps = Vec::new();
    for n in 1..=max_arity {
        let m = corestriction(&su, &su, n, -1, d.flavor(), |w| f.apply(&d.apply(&g.apply_word(w)?)?))?;
        if !m.is_zero() {
            maps.push(m);
        }
    }
    let pushed = Coderivation::new(d.flavor(), -1, maps)?;
    crate::infinity::from_codifferential(s.kind(), s.space(), &pushed)
}

/// ∞-morphism with corestrictions `F`, read through the suspension dictionary.
pub fn morphism_from_coalgebra(f: &CoalgMorphism, source: &InftyStructure, target: &InftyStructure) -> Result<InftyMorphism> {
    let comps = f
        .components()
        .values()
        .map(|m| suspend_map(m).and_then(|p| p.with_spaces(source.space(), target.space())))
        .collect::<Result<Vec<_>>>()?;
    InftyMorphism::new(source, target, comps)
}

/// A seed structure, its transport along a random automorphism, and the
/// transporting ∞-morphism `seed → transported`.
pub struct Transported {
    pub seed: InftyStructure,
    pub structure: InftyStructure,
    pub morphism: InftyMorphism,
}

pub fn random_structure(smp: &mut Sampler, kind: Kind, terms: usize) -> Result<Transported> {
    let seed = seed_structure(smp, kind, terms)?;
    let (structure, morphism) = transport(smp, &seed)?;
    Ok(Transported { seed, structure, morphism })
}

/// Transport of `s` along a random coalgebra automorphism, with the
/// transporting ∞-morphism `s → F_*s`.
pub fn transport(smp: &mut Sampler, s: &InftyStructure) -> Result<(InftyStructure, InftyMorphism)> {
    let su = s.space().suspend()?;
    let top = crate::infinity::codiff::arity_bound(&su, &su, |_| 0);
    let bound = top.max(3);
    let f = random_automorphism(smp, s.kind().coalgebra(), &su, top)?;
    let g = inverse_morphism(&f, &su, bound)?;
    let structure = pushforward(s, &f, &g, bound + 1)?;
    let morphism = morphism_from_coalgebra(&f, s, &structure)?;
    Ok((structure, morphism))
}

/// A valid 2-term Leibniz∞ algebra.
pub fn random_two_term(smp: &mut Sampler) -> Result<TwoTermLeibniz> {
    TwoTermLeibniz::from_structure(&random_structure(smp, Kind::Leibniz, 2)?.structure)
}

/// A valid 2-term morphism out of `a`, into a transport of `a`.
pub fn random_two_term_morphism(smp: &mut Sampler, a: &TwoTermLeibniz) -> Result<TwoTermMorphism> {
    let (_, m) = transport(smp, a.structure())?;
    TwoTermMorphism::from_infty(&m)
}

/// A homotopy out of `f` with random parameter `θ_1`.
pub fn random_homotopy(smp: &mut Sampler, f: &TwoTermMorphism) -> Result<TwoTermHomotopy> {
    let theta = smp.map(f.source().space(), f.target().space(), 1, 1, 0.6);
    TwoTermHomotopy::from_theta(f, theta)
}

/// A random chain complex `V_0 ← … ← V_m` with `d² = 0`.
pub fn random_complex(smp: &mut Sampler, dims: &[usize]) -> Result<ChainComplex> {
    let mut ds: Vec<Matrix> = Vec::new();
    for k in 1..dims.len() {
        let mut raw = Matrix::zeros(dims[k - 1], dims[k]);
        for i in 0..raw.rows() {
            for j in 0..raw.cols() {
                raw.set(i, j, scalar::int(smp.small_int(2)));
            }
        }
        // image inside ker d_{k−1}
        let d = match ds.last() {
            None => raw,
            Some(prev) => {
                let kernel = prev.kernel();
                let mut coeffs = Matrix::zeros(kernel.cols(), dims[k]);
                for i in 0..coeffs.rows() {
                    for j in 0..coeffs.cols() {
                        coeffs.set(i, j, scalar::int(smp.small_int(2)));
                    }
                }
                kernel.mul(&coeffs)?
            }
        };
        ds.push(d);
    }
    ChainComplex::new(dims.to_vec(), ds)
}

/// Adds a random nonzero amount to one structure constant of a random bracket or
/// a random relevant slot.
pub fn perturb_map(smp: &mut Sampler, m: &MultiMap) -> Result<MultiMap> {
    let inputs = m.relevant_inputs();
    let mut r = m.clone();
    if inputs.is_empty() {
        return Ok(r);
    }
    let t = inputs.choose(smp.rng()).unwrap().clone();
    let d: i32 = t.iter().map(|b| b.degree).sum::<i32>() + m.degree();
    let outs: Vec<_> = m.target().basis_of_degree(d).collect();
    let out = *outs.choose(smp.rng()).unwrap();
    let c = smp.nonzero_scalar();
    r.add_entry(&t, out, c)?;
    Ok(r)
}

pub fn perturb_structure(smp: &mut Sampler, s: &InftyStructure) -> Result<InftyStructure> {
    let candidates: Vec<usize> = (1..=3).filter(|&i| {
        MultiMap::new(s.space(), s.space(), i, i as i32 - 2).map(|m| !m.relevant_inputs().is_empty()).unwrap_or(false)
    }).collect();
    let i = *candidates.choose(smp.rng()).unwrap_or(&2);
    let mut brackets: Vec<MultiMap> = s.brackets().iter().filter(|(k, _)| **k != i).map(|(_, m)| m.clone()).collect();
    let mut target = s.bracket_or_zero(i);
    target = perturb_map(smp, &target)?;
    if s.kind() == Kind::Lie {
        target = antisymmetrize(&target)?;
    }
    brackets.push(target);
    InftyStructure::new(s.kind(), s.space(), brackets)
}

/// Graded-antisymmetric map agreeing with `m` on sorted tuples (through the
/// suspension dictionary, antisymmetric maps on `V` are symmetric on `sV`).
pub fn antisymmetrize(m: &MultiMap) -> Result<MultiMap> {
    let d = crate::graded::suspension::desuspend_map(m)?;
    let s = symmetrize(&d)?;
    suspend_map(&s)?.with_spaces(m.source(), m.target())
}

pub fn perturb_morphism(smp: &mut Sampler, m: &InftyMorphism) -> Result<InftyMorphism> {
    let i = if smp.coin(0.5) { 2 } else { 1 };
    let mut comps: Vec<MultiMap> = m.components().iter().filter(|(k, _)| **k != i).map(|(_, c)| c.clone()).collect();
    let base = m
        .component(i)
        .cloned()
        .unwrap_or(MultiMap::new(m.source().space(), m.target().space(), i, i as i32 - 1)?);
    let mut p = perturb_map(smp, &base)?;
    if m.kind() == Kind::Lie {
        p = antisymmetrize(&p)?;
    }
    comps.push(p);
    InftyMorphism::new(m.source(), m.target(), comps)
}

/// Structure constants `(a, b, out, coeff)` placed on a fresh degree-0 space.
pub fn leibniz_from_constants(name: &str, dim: usize, constants: &[(usize, usize, usize, i64)]) -> Result<LeibnizAlgebra> {
    let space = GradedSpace::new(name, [(0, dim)])?;
    let mut l2 = MultiMap::new(&space, &space, 2, 0)?;
    for &(a, b, c, k) in constants {
        l2.add_entry(&[BasisIndex::new(0, a), BasisIndex::new(0, b)], BasisIndex::new(0, c), scalar::int(k))?;
    }
    LeibnizAlgebra::new(&space, l2)
}

/// A random Leibniz algebra of dimension at most `max_dim` (≥ 2): a seed, a sum of
/// two seeds, or a Lie algebra acting on its adjoint module through `[(x,m),(y,n)] = ([x,y], [x,n])`,
/// padded with an abelian summand and presented in a random basis.
pub fn random_leibniz_algebra(smp: &mut Sampler, max_dim: usize) -> Result<LeibnizAlgebra> {
    let mut constants: Vec<(usize, usize, usize, i64)> = Vec::new();
    let mut dim = 0;
    let mut add = |list: Vec<(usize, usize, usize, i64)>, size: usize, dim: &mut usize| {
        constants.extend(list.into_iter().map(|(a, b, c, k)| (a + *dim, b + *dim, c + *dim, k)));
        *dim += size;
    };
    let seeds: Vec<SeedAlgebra> = SeedAlgebra::LEIBNIZ.iter().copied().filter(|s| s.dim() <= max_dim).collect();
    match smp.below(3) {
        0 => {
            let s = *seeds.choose(smp.rng()).expect("seeds of dimension 2 exist");
            add(s.structure_constants(), s.dim(), &mut dim);
        }
        1 if max_dim >= 4 => {
            let two: Vec<SeedAlgebra> = seeds.iter().copied().filter(|s| s.dim() == 2).collect();
            for _ in 0..2 {
                let s = *two.choose(smp.rng()).expect("2-dimensional seeds");
                add(s.structure_constants(), s.dim(), &mut dim);
            }
        }
        _ if max_dim >= 4 => {
            let g = SeedAlgebra::Affine;
            let n = g.dim();
            let mut list = g.structure_constants();
            for (a, b, c, k) in g.structure_constants() {
                list.push((a, b + n, c + n, k));
            }
            add(list, 2 * n, &mut dim);
        }
        _ => {
            let s = SeedAlgebra::SquareToCentre;
            add(s.structure_constants(), s.dim(), &mut dim);
        }
    }
    let pad = smp.below(max_dim - dim + 1);
    dim += pad;
    let a = leibniz_from_constants("E", dim, &constants)?;
    let p = smp.invertible(dim);
    let mut g = MultiMap::new(a.space(), a.space(), 1, 0)?;
    g.set_block(0, &p)?;
    let mut g_inv = MultiMap::new(a.space(), a.space(), 1, 0)?;
    g_inv.set_block(0, &p.inverse()?)?;
    let bracket = a.bracket_map().pre_compose(&[&g, &g])?.post_compose(&g_inv)?;
    LeibnizAlgebra::new(a.space(), bracket)
}

/// The adjoint, a trivial representation, or their direct sum.
pub fn random_representation(smp: &mut Sampler, a: &LeibnizAlgebra) -> Result<Representation> {
    let n = a.dim();
    let trivial = 1 + smp.below(2);
    let (with_adjoint, extra) = match smp.below(3) {
        0 => (true, 0),
        1 => (false, trivial),
        _ => (true, trivial),
    };
    let offset = if with_adjoint { n } else { 0 };
    let module = GradedSpace::new("W", [(0, offset + extra)])?;
    let mut rho = Action::zero(a.space(), &module)?;
    if with_adjoint {
        for x in a.basis() {
            for w in a.basis() {
                rho.set(x, w, a.bracket_basis(x, w))?;
            }
        }
    }
    Representation::new(a, rho)
}

/// A random `p`-cochain with coefficients in `target`.
pub fn random_cochain(smp: &mut Sampler, a: &LeibnizAlgebra, target: &GradedSpace, arity: usize) -> Result<LodayCochain> {
    LodayCochain::from_fn(a.space(), target, arity, |_| if smp.coin(0.6) { smp.vector(target, 0) } else { Vector::new() })
}
