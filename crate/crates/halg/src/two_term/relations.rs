//! The closed relations for 2-term algebras, morphisms and homotopies,
//! evaluated on every basis tuple.

use super::{TwoTermHomotopy, TwoTermLeibniz, TwoTermMorphism};
use crate::error::Result;
use crate::graded::{BasisIndex, MultiMap, Vector};
use crate::report::IdentityReport;

fn ap(m: &MultiMap, args: &[Vector]) -> Vector {
    m.apply(args).expect("arguments live in the source space")
}

fn b(x: BasisIndex) -> Vector {
    Vector::basis(x)
}

/// Sum of signed terms.
fn total(terms: &[(i64, Vector)]) -> Vector {
    let mut out = Vector::new();
    for (s, v) in terms {
        out.add_scaled(v, &crate::graded::scalar::int(*s));
    }
    out
}

/// Relations (a)-(e), each residual being left side minus right side.
pub fn check_two_term_algebra(a: &TwoTermLeibniz) -> IdentityReport {
    let mut report = IdentityReport::new("two-term algebra");
    let (l1, l2, l3) = (a.l1(), a.l2(), a.l3());
    let (low, high) = (a.low(), a.high());
    for f in ["(a)", "(b)", "(c)", "(d)", "(e)"] {
        report.touch(f);
    }
    let one = |v: Vector| ap(&l1, &[v]);
    let two = |u: Vector, v: Vector| ap(&l2, &[u, v]);
    let three = |u: Vector, v: Vector, w: Vector| ap(&l3, &[u, v, w]);

    for &x in &low {
        for &h in &high {
            let r = one(two(b(x), b(h))).minus(&two(b(x), one(b(h))));
            report.record("(a)", &[x, h], r);
            let r = one(two(b(h), b(x))).minus(&two(one(b(h)), b(x)));
            report.record("(a)", &[h, x], r);
        }
    }
    for &h in &high {
        for &k in &high {
            let r = two(one(b(h)), b(k)).minus(&two(b(h), one(b(k))));
            report.record("(b)", &[h, k], r);
        }
    }
    // (c) and (d) share the shape l(x, l(y, z)) − l(y, l(x, z)) − l(l(x, y), z).
    let jacobi = |x: Vector, y: Vector, z: Vector| {
        total(&[
            (1, two(x.clone(), two(y.clone(), z.clone()))),
            (-1, two(y.clone(), two(x.clone(), z.clone()))),
            (-1, two(two(x, y), z)),
        ])
    };
    for &x in &low {
        for &y in &low {
            for &z in &low {
                let r = one(three(b(x), b(y), b(z))).minus(&jacobi(b(x), b(y), b(z)));
                report.record("(c)", &[x, y, z], r);
            }
            for &h in &high {
                let r = three(b(x), b(y), one(b(h))).minus(&jacobi(b(x), b(y), b(h)));
                report.record("(d)", &[x, y, h], r);
                let r = three(b(x), one(b(h)), b(y)).minus(&jacobi(b(x), b(h), b(y)));
                report.record("(d)", &[x, h, y], r);
                let r = three(one(b(h)), b(x), b(y)).minus(&jacobi(b(h), b(x), b(y)));
                report.record("(d)", &[h, x, y], r);
            }
        }
    }
    for &w in &low {
        for &x in &low {
            for &y in &low {
                for &z in &low {
                    let (w, x, y, z) = (b(w), b(x), b(y), b(z));
                    let r = total(&[
                        (1, two(three(w.clone(), x.clone(), y.clone()), z.clone())),
                        (1, two(w.clone(), three(x.clone(), y.clone(), z.clone()))),
                        (-1, two(x.clone(), three(w.clone(), y.clone(), z.clone()))),
                        (1, two(y.clone(), three(w.clone(), x.clone(), z.clone()))),
                        (-1, three(two(w.clone(), x.clone()), y.clone(), z.clone())),
                        (1, three(w.clone(), two(x.clone(), y.clone()), z.clone())),
                        (-1, three(x.clone(), two(w.clone(), y.clone()), z.clone())),
                        (-1, three(w.clone(), x.clone(), two(y.clone(), z.clone()))),
                        (1, three(w.clone(), y.clone(), two(x.clone(), z.clone()))),
                        (-1, three(x.clone(), y.clone(), two(w.clone(), z.clone()))),
                    ]);
                    let key: Vec<BasisIndex> = [&w, &x, &y, &z].iter().map(|v| *v.keys().next().unwrap()).collect();
                    report.record("(e)", &key, r);
                }
            }
        }
    }
    report
}

fn endpoint_warnings(report: &mut IdentityReport, role: &str, a: &TwoTermLeibniz) {
    let r = check_two_term_algebra(a);
    if !r.passed() {
        report.warn(format!("{role} algebra fails relations {}", r.failed_families().join(", ")));
    }
}

/// Morphism relations (a)-(d); invalid endpoint algebras are reported as warnings.
pub fn check_two_term_morphism(m: &TwoTermMorphism) -> IdentityReport {
    let mut report = IdentityReport::new("two-term morphism");
    endpoint_warnings(&mut report, "source", m.source());
    endpoint_warnings(&mut report, "target", m.target());
    for f in ["(a)", "(b)", "(c)", "(d)"] {
        report.touch(f);
    }
    let (l1, l2, l3) = (m.source().l1(), m.source().l2(), m.source().l3());
    let (m1, m2, m3) = (m.target().l1(), m.target().l2(), m.target().l3());
    let (f1, f2) = (m.f1(), m.f2());
    let (low, high) = (m.source().low(), m.source().high());
    let lin = |g: &MultiMap, v: Vector| ap(g, &[v]);
    let bil = |g: &MultiMap, u: Vector, v: Vector| ap(g, &[u, v]);
    let fb = |x: BasisIndex| f1.apply_basis(&[x]);

    for &h in &high {
        let r = lin(&m1, fb(h)).minus(&lin(f1, lin(&l1, b(h))));
        report.record("(a)", &[h], r);
    }
    for &x in &low {
        for &y in &low {
            let r = total(&[(1, bil(&m2, fb(x), fb(y))), (1, lin(&m1, f2.apply_basis(&[x, y]))), (-1, lin(f1, l2.apply_basis(&[x, y])))]);
            report.record("(b)", &[x, y], r);
        }
        for &h in &high {
            let r = total(&[(1, bil(&m2, fb(x), fb(h))), (-1, lin(f1, l2.apply_basis(&[x, h]))), (1, bil(f2, b(x), lin(&l1, b(h))))]);
            report.record("(c)", &[x, h], r);
            let r = total(&[(1, bil(&m2, fb(h), fb(x))), (-1, lin(f1, l2.apply_basis(&[h, x]))), (1, bil(f2, lin(&l1, b(h)), b(x)))]);
            report.record("(c)", &[h, x], r);
        }
    }
    for &x in &low {
        for &y in &low {
            for &z in &low {
                let f2b = |u: BasisIndex, v: BasisIndex| f2.apply_basis(&[u, v]);
                let l2b = |u: BasisIndex, v: BasisIndex| l2.apply_basis(&[u, v]);
                let r = total(&[
                    (1, ap(&m3, &[fb(x), fb(y), fb(z)])),
                    (-1, bil(&m2, f2b(x, y), fb(z))),
                    (1, bil(&m2, fb(x), f2b(y, z))),
                    (-1, bil(&m2, fb(y), f2b(x, z))),
                    (-1, lin(f1, l3.apply_basis(&[x, y, z]))),
                    (-1, bil(f2, l2b(x, y), b(z))),
                    (1, bil(f2, b(x), l2b(y, z))),
                    (-1, bil(f2, b(y), l2b(x, z))),
                ]);
                report.record("(d)", &[x, y, z], r);
            }
        }
    }
    report
}

/// Homotopy relations (a)-(c); invalid endpoint morphisms are reported as warnings.
pub fn check_homotopy(h: &TwoTermHomotopy) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("two-term homotopy");
    for (role, m) in [("source", h.source()), ("target", h.target())] {
        let r = check_two_term_morphism(m);
        if !r.passed() {
            report.warn(format!("{role} morphism fails relations {}", r.failed_families().join(", ")));
        }
    }
    for f in ["(a)", "(b)", "(c)"] {
        report.touch(f);
    }
    let (f, g, theta) = (h.source(), h.target(), h.theta());
    let (l1, l2) = (f.source().l1(), f.source().l2());
    let (m1, m2) = (f.target().l1(), f.target().l2());
    let (low, high) = (f.source().low(), f.source().high());
    let diff1 = g.f1().minus(f.f1())?;
    let diff2 = g.f2().minus(f.f2())?;
    for &x in &low {
        let r = diff1.apply_basis(&[x]).minus(&ap(&m1, &[theta.apply_basis(&[x])]));
        report.record("(a)", &[x], r);
    }
    for &k in &high {
        let r = diff1.apply_basis(&[k]).minus(&ap(theta, &[l1.apply_basis(&[k])]));
        report.record("(b)", &[k], r);
    }
    for &x in &low {
        for &y in &low {
            let r = total(&[
                (1, diff2.apply_basis(&[x, y])),
                (-1, ap(theta, &[l2.apply_basis(&[x, y])])),
                (1, ap(&m2, &[f.f1().apply_basis(&[x]), theta.apply_basis(&[y])])),
                (1, ap(&m2, &[theta.apply_basis(&[x]), g.f1().apply_basis(&[y])])),
            ]);
            report.record("(c)", &[x, y], r);
        }
    }
    Ok(report)
}
