//! Graded antisymmetry, higher Jacobi identities and morphism identities for
//! Lie∞ algebras.

use super::leibniz::{morphism_families, morphism_left, nested};
use super::{InftyMorphism, InftyStructure, Kind};
use crate::error::{HalgError, Result};
use crate::graded::multimap::basis_tuples;
use crate::graded::perm::{koszul_of_order, unshuffles_cached};
use crate::graded::scalar;
use crate::graded::{parity, BasisIndex, MultiMap, Vector};
use crate::report::IdentityReport;

/// `l(…a b…) + (-1)^{|a||b|} l(…b a…)` for every adjacent pair; zero iff graded antisymmetric.
pub fn antisymmetry_defects(map: &MultiMap, family: &str, report: &mut IdentityReport) {
    let n = map.arity();
    report.touch(family);
    if n < 2 {
        return;
    }
    let space = map.source();
    let tgt = map.target().clone();
    let d = map.degree();
    for v in basis_tuples(space, n, |s| tgt.has_degree(s + d)) {
        for a in 0..n - 1 {
            let mut w = v.clone();
            w.swap(a, a + 1);
            let s = parity(v[a].degree as i64 * v[a + 1].degree as i64);
            let mut r = map.apply_basis(&v);
            r.add_scaled(&map.apply_basis(&w), &scalar::from_sign(s));
            report.record(family, &v, r);
        }
    }
}

pub fn check_antisymmetry(s: &InftyStructure) -> IdentityReport {
    let mut report = IdentityReport::new("antisymmetry");
    for (i, l) in s.brackets() {
        antisymmetry_defects(l, &format!("l{i}"), &mut report);
    }
    report
}

/// `Σ_{i+j-1=n} Σ_{Sh(i,j-1)} (-1)^{i(j-1)} sign(σ) ε(σ) l_j(l_i(…), …)` on a basis tuple.
pub fn lie_identity_value(s: &InftyStructure, v: &[BasisIndex]) -> Vector {
    let n = v.len();
    let degs: Vec<i32> = v.iter().map(|b| b.degree).collect();
    let mut out = Vector::new();
    for i in 1..=n {
        let j = n + 1 - i;
        let (Some(li), Some(lj)) = (s.bracket(i), s.bracket(j)) else { continue };
        for sh in unshuffles_cached(&[i, j - 1], false).iter() {
            let first: Vec<_> = sh.order[..i].iter().map(|&x| v[x]).collect();
            let rest: Vec<_> = sh.order[i..].iter().map(|&x| v[x]).collect();
            let Some(inner) = li.value_ref(&first) else { continue };
            let sign = parity(i as i64 * (j as i64 - 1)) * sh.sign * koszul_of_order(&sh.order, &degs);
            nested(lj, &[], inner, &rest, &scalar::from_sign(sign), &mut out);
        }
    }
    out
}

/// Arity-`n` residual table of the Lie∞ identity.
pub fn lie_identity_map(s: &InftyStructure, n: usize) -> Result<MultiMap> {
    let space = s.space();
    let mut map = MultiMap::new(space, space, n, n as i32 - 3)?;
    for v in basis_tuples(space, n, |d| space.has_degree(d + n as i32 - 3)) {
        map.add_value(&v, &lie_identity_value(s, &v))?;
    }
    Ok(map)
}

pub fn check_lie_infinity(s: &InftyStructure, n_max: usize) -> Result<IdentityReport> {
    if s.kind() != Kind::Lie {
        return Err(HalgError::FlavorMismatch("check_lie_infinity needs a Lie structure".into()));
    }
    let mut report = IdentityReport::new("lie-infinity");
    let anti = check_antisymmetry(s);
    report.absorb("antisymmetry ", anti);
    s.warn_n_max(n_max, &mut report);
    let space = s.space();
    for n in 1..=n_max {
        let name = format!("n={n}");
        report.touch(&name);
        for v in basis_tuples(space, n, |d| space.has_degree(d + n as i32 - 3)) {
            report.record(&name, &v, lie_identity_value(s, &v));
        }
    }
    Ok(report)
}

/// Left minus right side of the Lie∞ morphism identity on a basis tuple.
///
/// The left side sums over ordered block sizes with weight `1/p!`, which counts
/// each unordered decomposition once.
pub fn lie_morphism_value(m: &InftyMorphism, v: &[BasisIndex]) -> Vector {
    let n = v.len();
    let lhs = morphism_left(m, v, false);
    let degs: Vec<i32> = v.iter().map(|b| b.degree).collect();
    let mut rhs = Vector::new();
    for k in 1..=n {
        let p = n + 1 - k;
        let (Some(lk), Some(phi)) = (m.source().bracket(k), m.component(p)) else { continue };
        for sh in unshuffles_cached(&[k, p - 1], false).iter() {
            let first: Vec<_> = sh.order[..k].iter().map(|&x| v[x]).collect();
            let rest: Vec<_> = sh.order[k..].iter().map(|&x| v[x]).collect();
            let Some(inner) = lk.value_ref(&first) else { continue };
            let sign = parity(k as i64 * (p as i64 - 1)) * sh.sign * koszul_of_order(&sh.order, &degs);
            nested(phi, &[], inner, &rest, &scalar::from_sign(sign), &mut rhs);
        }
    }
    lhs.minus(&rhs)
}

pub fn check_lie_morphism(m: &InftyMorphism, n_max: usize) -> Result<IdentityReport> {
    if m.kind() != Kind::Lie {
        return Err(HalgError::FlavorMismatch("check_lie_morphism needs Lie structures".into()));
    }
    let mut report = IdentityReport::new("lie-infinity-morphism");
    for (i, c) in m.components() {
        let mut anti = IdentityReport::new("");
        antisymmetry_defects(c, &format!("phi{i}"), &mut anti);
        report.absorb("antisymmetry ", anti);
    }
    morphism_families(m, n_max, &mut report, lie_morphism_value);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::scalar::int;
    use crate::graded::GradedSpace;

    fn sl2(perturb: bool) -> InftyStructure {
        let v = GradedSpace::new("g", [(0, 3)]).unwrap();
        let (e, f, h) = (BasisIndex::new(0, 0), BasisIndex::new(0, 1), BasisIndex::new(0, 2));
        let mut l2 = MultiMap::new(&v, &v, 2, 0).unwrap();
        let mut put = |a, b, c, k: i64| {
            l2.add_entry(&[a, b], c, int(k)).unwrap();
            l2.add_entry(&[b, a], c, int(-k)).unwrap();
        };
        put(e, f, h, 1);
        put(h, e, e, 2);
        put(h, f, f, if perturb { -3 } else { -2 });
        InftyStructure::new(Kind::Lie, &v, [l2]).unwrap()
    }

    #[test]
    fn abelian_passes() {
        let v = GradedSpace::new("g", [(0, 2), (1, 1)]).unwrap();
        assert!(check_lie_infinity(&InftyStructure::abelian(Kind::Lie, &v), 5).unwrap().passed());
    }

    #[test]
    fn sl2_jacobi() {
        assert!(check_lie_infinity(&sl2(false), 3).unwrap().passed());
        let r = check_lie_infinity(&sl2(true), 3).unwrap();
        assert_eq!(r.failed_families(), vec!["n=3"]);
    }

    #[test]
    fn antisymmetry_violation_is_reported() {
        let v = GradedSpace::new("g", [(0, 2)]).unwrap();
        let mut l2 = MultiMap::new(&v, &v, 2, 0).unwrap();
        l2.add_entry(&[BasisIndex::new(0, 0), BasisIndex::new(0, 1)], BasisIndex::new(0, 0), int(1)).unwrap();
        let s = InftyStructure::new(Kind::Lie, &v, [l2]).unwrap();
        let r = check_lie_infinity(&s, 3).unwrap();
        assert!(!r.family_passed("antisymmetry l2"));
    }
}
