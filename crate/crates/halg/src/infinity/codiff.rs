//! The coalgebra side: codifferentials on `Zin^c(sV)` / `S^c(sV)` and
//! coalgebra morphisms, translated through the suspension dictionary.

use std::collections::BTreeMap;

use super::{InftyMorphism, InftyStructure, Kind};
use crate::coalgebra::extend::corestriction;
use crate::coalgebra::{CoalgMorphism, Coderivation};
use crate::error::{HalgError, Result};
use crate::graded::limits::limits;
use crate::graded::suspension::{desuspend_map, suspend_map};
use crate::graded::{GradedSpace, MultiMap};
use crate::report::IdentityReport;

/// Coderivation with corestrictions `D_p = s ∘ l_p ∘ (s^{-1})^{⊗p}` (up to the
/// global sign of [`desuspend_map`]), all of degree `−1`.
pub fn to_codifferential(s: &InftyStructure) -> Result<Coderivation> {
    let maps = s.brackets().values().map(desuspend_map).collect::<Result<Vec<_>>>()?;
    Coderivation::new(s.kind().coalgebra(), -1, maps)
}

/// Inverse of [`to_codifferential`].
pub fn from_codifferential(kind: Kind, space: &GradedSpace, d: &Coderivation) -> Result<InftyStructure> {
    if d.degree() != -1 {
        return Err(HalgError::Inhomogeneous(format!("codifferential of degree {}", d.degree())));
    }
    let maps = d.components().values().map(suspend_map).collect::<Result<Vec<_>>>()?;
    let maps = maps.into_iter().map(|m| m.with_spaces(space, space)).collect::<Result<Vec<_>>>()?;
    InftyStructure::new(kind, space, maps)
}

/// Largest arity at which a map `U^{⊗n} → U'` of degree `offset(n)` can be nonzero,
/// capped by the word length limit.
pub fn arity_bound(source: &GradedSpace, target: &GradedSpace, offset: impl Fn(usize) -> i32) -> usize {
    let (Some(lo), Some(hi)) = (source.min_degree(), target.max_degree()) else { return 0 };
    let cap = limits().word_cap;
    (1..=cap).filter(|&n| n as i32 * lo + offset(n) <= hi).max().unwrap_or(0)
}

/// Corestrictions `(D∘D)_n: (sV)^{⊗n} → sV` for `n ≤ n_max`.
pub fn codifferential_square_residual(d: &Coderivation, suspended: &GradedSpace, n_max: usize) -> Result<BTreeMap<usize, MultiMap>> {
    let mut out = BTreeMap::new();
    for n in 1..=n_max.min(limits().word_cap) {
        let m = corestriction(suspended, suspended, n, 2 * d.degree(), d.flavor(), |w| d.apply(&d.apply_word(w)?))?;
        out.insert(n, m);
    }
    Ok(out)
}

/// Coalgebra morphism with corestrictions `F_p` obtained from `φ_p`.
pub fn coalgebra_morphism(m: &InftyMorphism) -> Result<CoalgMorphism> {
    let maps = m.components().values().map(desuspend_map).collect::<Result<Vec<_>>>()?;
    CoalgMorphism::new(m.kind().coalgebra(), maps)
}

/// Corestrictions of `𝔇∘F − F∘D`, target codifferential `𝔇`, for `n ≤ n_max`.
pub fn morphism_coalgebra_residual(m: &InftyMorphism, n_max: usize) -> Result<BTreeMap<usize, MultiMap>> {
    let f = coalgebra_morphism(m)?;
    let d_src = to_codifferential(m.source())?;
    let d_tgt = to_codifferential(m.target())?;
    let su = m.source().space().suspend()?;
    let sw = m.target().space().suspend()?;
    let flavor = m.kind().coalgebra();
    let mut out = BTreeMap::new();
    for n in 1..=n_max.min(limits().word_cap) {
        let map = corestriction(&su, &sw, n, -1, flavor, |w| {
            let lhs = d_tgt.apply(&f.apply_word(w)?)?;
            let rhs = f.apply(&d_src.apply_word(w)?)?;
            Ok(lhs.minus(&rhs))
        })?;
        out.insert(n, map);
    }
    Ok(out)
}

/// `g ∘ f`: compose the coalgebra morphisms, project to letters and
/// translate back.
pub fn compose_inf_morphisms(g: &InftyMorphism, f: &InftyMorphism) -> Result<InftyMorphism> {
    if f.target() != g.source() {
        return Err(HalgError::SpaceMismatch("composable morphisms need f.target = g.source".into()));
    }
    let ff = coalgebra_morphism(f)?;
    let gg = coalgebra_morphism(g)?;
    let su = f.source().space().suspend()?;
    let sx = g.target().space().suspend()?;
    let top = arity_bound(&su, &sx, |_| 0);
    let mut comps = Vec::new();
    for n in 1..=top {
        let map = corestriction(&su, &sx, n, 0, f.kind().coalgebra(), |w| gg.apply(&ff.apply_word(w)?))?;
        if !map.is_zero() {
            let phi = suspend_map(&map)?.with_spaces(f.source().space(), g.target().space())?;
            comps.push(phi);
        }
    }
    InftyMorphism::new(f.source(), g.target(), comps)
}

/// Bracket-level residual predicted by `(D∘D)_n`: the higher Jacobi residual
/// equals `(−1)^{n+1} s^{-1}(D∘D)_n s^{⊗n}` for Leibniz∞ and
/// `s^{-1}(D∘D)_n s^{⊗n}` for Lie∞.
pub fn square_in_brackets(kind: Kind, space: &GradedSpace, n: usize, square: &MultiMap) -> Result<MultiMap> {
    let m = suspend_map(square)?.with_spaces(space, space)?;
    Ok(match kind {
        Kind::Leibniz if n % 2 == 0 => m.neg(),
        _ => m,
    })
}

/// Bracket-level morphism residual predicted by `pr(𝔇F − FD)_n`: equal to
/// `s^{-1}(𝔇F − FD)_n s^{⊗n}` in both flavors.
pub fn morphism_residual_in_brackets(m: &InftyMorphism, residual: &MultiMap) -> Result<MultiMap> {
    suspend_map(residual)?.with_spaces(m.source().space(), m.target().space())
}

/// Coalgebra-level structure check reported in bracket coordinates.
pub fn check_codifferential(s: &InftyStructure, n_max: usize) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("codifferential-square");
    s.warn_n_max(n_max, &mut report);
    let d = to_codifferential(s)?;
    let su = s.space().suspend()?;
    for (n, sq) in codifferential_square_residual(&d, &su, n_max)? {
        report.record_map(&format!("n={n}"), &square_in_brackets(s.kind(), s.space(), n, &sq)?);
    }
    for n in limits().word_cap + 1..=n_max {
        report.touch(&format!("n={n}"));
    }
    Ok(report)
}

/// Coalgebra-level morphism check reported in bracket coordinates.
pub fn check_coalgebra_morphism(m: &InftyMorphism, n_max: usize) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("coalgebra-morphism");
    morphism_degree_guard(m)?;
    for (n, r) in morphism_coalgebra_residual(m, n_max)? {
        report.record_map(&format!("n={n}"), &morphism_residual_in_brackets(m, &r)?);
    }
    Ok(report)
}

fn morphism_degree_guard(m: &InftyMorphism) -> Result<()> {
    if m.source().kind() != m.target().kind() {
        return Err(HalgError::FlavorMismatch("morphism between different flavors".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infinity::{check_inf_morphism, check_structure};
    use crate::sample::{perturb_morphism, perturb_structure, random_structure, Sampler};

    #[test]
    fn random_structures_agree_with_coalgebra_view() {
        let mut smp = Sampler::new(3);
        for kind in [Kind::Leibniz, Kind::Lie] {
            for _ in 0..4 {
                let t = random_structure(&mut smp, kind, 2).unwrap();
                let n = t.structure.default_n_max();
                for s in [t.structure.clone(), perturb_structure(&mut smp, &t.structure).unwrap()] {
                    let a = check_structure(&s, n).unwrap();
                    let b = check_codifferential(&s, n).unwrap();
                    for fam in &b.families {
                        assert_eq!(a.family(&fam.name).unwrap().table(), fam.table(), "{kind:?} {}", fam.name);
                    }
                }
            }
        }
    }

    #[test]
    fn morphisms_agree_with_coalgebra_view() {
        let mut smp = Sampler::new(5);
        for kind in [Kind::Leibniz, Kind::Lie] {
            let t = random_structure(&mut smp, kind, 2).unwrap();
            let n = t.morphism.default_n_max();
            for m in [t.morphism.clone(), perturb_morphism(&mut smp, &t.morphism).unwrap()] {
                let a = check_inf_morphism(&m, n).unwrap();
                let b = check_coalgebra_morphism(&m, n).unwrap();
                for fam in &b.families {
                    assert_eq!(a.family(&fam.name).unwrap().table(), fam.table());
                }
            }
        }
    }

    #[test]
    fn codifferential_roundtrip_and_degree() {
        let mut smp = Sampler::new(9);
        let t = random_structure(&mut smp, Kind::Leibniz, 3).unwrap();
        let d = to_codifferential(&t.structure).unwrap();
        assert!(d.components().values().all(|m| m.degree() == -1));
        let back = from_codifferential(Kind::Leibniz, t.structure.space(), &d).unwrap();
        assert_eq!(back, t.structure);
    }

    #[test]
    fn composition_with_identity() {
        let mut smp = Sampler::new(13);
        let t = random_structure(&mut smp, Kind::Leibniz, 2).unwrap();
        let id_src = InftyMorphism::identity(t.morphism.source());
        let id_tgt = InftyMorphism::identity(t.morphism.target());
        assert_eq!(compose_inf_morphisms(&t.morphism, &id_src).unwrap(), t.morphism);
        assert_eq!(compose_inf_morphisms(&id_tgt, &t.morphism).unwrap(), t.morphism);
    }
}
