//! Bracket-level higher Jacobi identities and morphism identities for
//! Leibniz∞ algebras.

use super::{InftyMorphism, InftyStructure, Kind};
use crate::error::{HalgError, Result};
use crate::graded::multimap::basis_tuples;
use crate::graded::perm::{compositions, koszul_of_order, unshuffles_cached};
use crate::graded::scalar::{self, Scalar};
use crate::graded::{parity, BasisIndex, MultiMap, Vector};
use crate::report::IdentityReport;

fn deg_sum(xs: &[BasisIndex]) -> i64 {
    xs.iter().map(|b| b.degree as i64).sum()
}

/// `outer(left, inner(mid, v_k), tail)` summed over the basis expansion of the inner value.
pub(crate) fn nested(
    outer: &MultiMap,
    left: &[BasisIndex],
    inner_value: &Vector,
    tail: &[BasisIndex],
    coeff: &Scalar,
    out: &mut Vector,
) {
    let mut args = Vec::with_capacity(left.len() + 1 + tail.len());
    for (b, c) in inner_value {
        args.clear();
        args.extend_from_slice(left);
        args.push(*b);
        args.extend_from_slice(tail);
        if let Some(v) = outer.value_ref(&args) {
            out.add_scaled(v, &(coeff * c));
        }
    }
}

/// Insertion sum shared by the structure and morphism identities:
/// `Σ_{i+j=n+1} Σ_{k=j}^{n} Σ_{Sh(k-j,j-1)} sign · outer_i(v_σ…, l_j(v_σ…, v_k), v_{k+1}…)`,
/// where `extra(i, j, k)` supplies the identity-specific exponent.
pub(crate) fn insertion_sum<'a>(
    v: &[BasisIndex],
    outer: &dyn Fn(usize) -> Option<&'a MultiMap>,
    inner: &InftyStructure,
    extra: &dyn Fn(usize, usize, usize) -> i64,
) -> Vector {
    let n = v.len();
    let mut out = Vector::new();
    for j in 1..=n {
        let i = n + 1 - j;
        let Some(lj) = inner.bracket(j) else { continue };
        let Some(oi) = outer(i) else { continue };
        for k in j..=n {
            let prefix = &v[..k - 1];
            let degs: Vec<i32> = prefix.iter().map(|b| b.degree).collect();
            for sh in unshuffles_cached(&[k - j, j - 1], false).iter() {
                let left: Vec<_> = sh.order[..k - j].iter().map(|&x| prefix[x]).collect();
                let mut mid: Vec<_> = sh.order[k - j..].iter().map(|&x| prefix[x]).collect();
                mid.push(v[k - 1]);
                let Some(inner_value) = lj.value_ref(&mid) else { continue };
                let e = extra(i, j, k) + j as i64 * deg_sum(&left);
                let sign = koszul_of_order(&sh.order, &degs) * sh.sign * parity(e);
                nested(oi, &left, inner_value, &v[k..], &scalar::from_sign(sign), &mut out);
            }
        }
    }
    out
}

/// Higher Jacobi identity of arity `n` on a basis tuple.
pub fn leibniz_identity_value(s: &InftyStructure, v: &[BasisIndex]) -> Vector {
    let outer = |i: usize| s.bracket(i);
    insertion_sum(v, &outer, s, &|i, j, k| ((i + j) as i64 - k as i64) * (j as i64 - 1))
}

/// Arity-`n` residual table of the higher Jacobi identity.
pub fn leibniz_identity_map(s: &InftyStructure, n: usize) -> Result<MultiMap> {
    let space = s.space();
    let mut map = MultiMap::new(space, space, n, n as i32 - 3)?;
    for v in basis_tuples(space, n, |d| space.has_degree(d + n as i32 - 3)) {
        map.add_value(&v, &leibniz_identity_value(s, &v))?;
    }
    Ok(map)
}

pub fn check_leibniz_infinity(s: &InftyStructure, n_max: usize) -> Result<IdentityReport> {
    if s.kind() != Kind::Leibniz {
        return Err(HalgError::FlavorMismatch("check_leibniz_infinity needs a Leibniz structure".into()));
    }
    let mut report = IdentityReport::new("leibniz-infinity");
    s.warn_n_max(n_max, &mut report);
    let space = s.space();
    for n in 1..=n_max {
        let name = format!("n={n}");
        report.touch(&name);
        for v in basis_tuples(space, n, |d| space.has_degree(d + n as i32 - 3)) {
            let r = leibniz_identity_value(s, &v);
            report.record(&name, &v, r);
        }
    }
    Ok(report)
}

/// Left side of the morphism identity:
/// `Σ_p Σ_{k_1+…+k_p=n} Σ_{Hsh} ± m_p(φ_{k_1}(…), …, φ_{k_p}(…))`.
pub(crate) fn morphism_left(m: &InftyMorphism, v: &[BasisIndex], half: bool) -> Vector {
    let n = v.len();
    let degs: Vec<i32> = v.iter().map(|b| b.degree).collect();
    let mut out = Vector::new();
    for p in 1..=n {
        let Some(mp) = m.target().bracket(p) else { continue };
        let weight = if half { scalar::one() } else { scalar::one() / scalar::factorial(p) };
        for sizes in compositions(n, p) {
            if sizes.iter().any(|k| m.component(*k).is_none()) {
                continue;
            }
            let fixed: i64 = sizes.iter().enumerate().map(|(r, &k)| (p - 1 - r) as i64 * k as i64).sum::<i64>()
                + (p * (p - 1) / 2) as i64;
            for sh in unshuffles_cached(&sizes, half).iter() {
                let mut e = fixed;
                let mut before: i64 = 0;
                let mut args: Vec<Vector> = Vec::with_capacity(p);
                let mut pos = 0;
                let mut dead = false;
                for &k in &sizes {
                    let block: Vec<_> = sh.order[pos..pos + k].iter().map(|&x| v[x]).collect();
                    pos += k;
                    e += (k as i64 - 1) * before;
                    before += deg_sum(&block);
                    let value = m.component(k).unwrap().apply_basis(&block);
                    if value.is_zero() {
                        dead = true;
                        break;
                    }
                    args.push(value);
                }
                if dead {
                    continue;
                }
                let sign = koszul_of_order(&sh.order, &degs) * sh.sign * parity(e);
                let value = mp.apply(&args).expect("components land in the target space");
                out.add_scaled(&value, &scalar::signed(&weight, sign));
            }
        }
    }
    out
}

/// Left minus right side of the Leibniz∞ morphism identity on a basis tuple.
pub fn leibniz_morphism_value(m: &InftyMorphism, v: &[BasisIndex]) -> Vector {
    let lhs = morphism_left(m, v, true);
    let outer = |i: usize| m.component(i);
    let rhs = insertion_sum(v, &outer, m.source(), &|i, j, k| k as i64 + ((i + j) as i64 - k as i64) * j as i64);
    lhs.minus(&rhs)
}

/// Arity-`n` residual table (left minus right side) of the morphism identity.
pub fn morphism_identity_map(m: &InftyMorphism, n: usize) -> Result<MultiMap> {
    let src = m.source().space();
    let tgt = m.target().space();
    let mut map = MultiMap::new(src, tgt, n, n as i32 - 2)?;
    for v in basis_tuples(src, n, |d| tgt.has_degree(d + n as i32 - 2)) {
        let r = match m.kind() {
            Kind::Leibniz => leibniz_morphism_value(m, &v),
            Kind::Lie => super::lie::lie_morphism_value(m, &v),
        };
        map.add_value(&v, &r)?;
    }
    Ok(map)
}

pub fn check_leibniz_morphism(m: &InftyMorphism, n_max: usize) -> Result<IdentityReport> {
    if m.kind() != Kind::Leibniz {
        return Err(HalgError::FlavorMismatch("check_leibniz_morphism needs Leibniz structures".into()));
    }
    let mut report = IdentityReport::new("leibniz-infinity-morphism");
    morphism_families(m, n_max, &mut report, leibniz_morphism_value);
    Ok(report)
}

pub(crate) fn morphism_families(
    m: &InftyMorphism,
    n_max: usize,
    report: &mut IdentityReport,
    value: impl Fn(&InftyMorphism, &[BasisIndex]) -> Vector,
) {
    let src = m.source().space();
    let tgt = m.target().space();
    for n in 1..=n_max {
        let name = format!("n={n}");
        report.touch(&name);
        for v in basis_tuples(src, n, |d| tgt.has_degree(d + n as i32 - 2)) {
            report.record(&name, &v, value(m, &v));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::scalar::int;
    use crate::graded::GradedSpace;

    fn two_dim(entries: &[(usize, usize, usize)]) -> InftyStructure {
        let v = GradedSpace::new("V", [(0, 2)]).unwrap();
        let b = |i| BasisIndex::new(0, i);
        let mut l2 = MultiMap::new(&v, &v, 2, 0).unwrap();
        for &(p, q, r) in entries {
            l2.add_entry(&[b(p), b(q)], b(r), int(1)).unwrap();
        }
        InftyStructure::new(Kind::Leibniz, &v, [l2]).unwrap()
    }

    const X: usize = 0;
    const Y: usize = 1;

    #[test]
    fn zero_structure_passes() {
        let v = GradedSpace::new("V", [(0, 1), (1, 1)]).unwrap();
        let s = InftyStructure::abelian(Kind::Leibniz, &v);
        assert!(check_leibniz_infinity(&s, 5).unwrap().passed());
    }

    #[test]
    fn two_dim_leibniz_algebra() {
        let r = check_leibniz_infinity(&two_dim(&[(Y, Y, X)]), 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.family("n=3").unwrap().evaluated, 8);
        // [y,x] = x alone: left multiplication by y is a derivation, so this is
        // still a (left) Leibniz algebra
        assert!(check_leibniz_infinity(&two_dim(&[(Y, X, X)]), 3).unwrap().passed());
        let r = check_leibniz_infinity(&two_dim(&[(Y, Y, X), (X, Y, X)]), 3).unwrap();
        assert_eq!(r.failed_families(), vec!["n=3"]);
    }

    #[test]
    fn arity_three_is_left_leibniz_rule() {
        // the identity sum is [[x,y],z] - [x,[y,z]] + [y,[x,z]]
        let s = two_dim(&[(Y, Y, X), (X, Y, X), (Y, X, Y)]);
        let l2 = s.bracket(2).unwrap();
        let space = s.space();
        for v in basis_tuples(space, 3, |_| true) {
            let (x, y, z) = (Vector::basis(v[0]), Vector::basis(v[1]), Vector::basis(v[2]));
            let b = |a: &Vector, c: &Vector| l2.apply(&[a.clone(), c.clone()]).unwrap();
            let expected = b(&x, &b(&y, &z)).minus(&b(&b(&x, &y), &z)).minus(&b(&y, &b(&x, &z)));
            let got = leibniz_identity_value(&s, &v);
            assert_eq!(got, expected.neg(), "{v:?}");
        }
    }
}
