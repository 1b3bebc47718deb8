use super::forms::edge_images;
use super::*;
use crate::graded::scalar::{frac, int};
use crate::infinity::codiff::morphism_coalgebra_residual;
use crate::infinity::check_leibniz_morphism;
use crate::sample::{perturb_map, perturb_morphism, random_homotopy, random_two_term, random_two_term_morphism, Sampler};
use crate::two_term::{check_homotopy, vcompose, TwoTermHomotopy, TwoTermMorphism};

fn random_element(smp: &mut Sampler, conv: &Convolution, degree: i32) -> ConvElement {
    let comps: Vec<MultiMap> =
        (1..=conv.arity_bound(degree)).map(|p| smp.map(conv.suspended(), conv.target().space(), p, degree, 0.5)).collect();
    conv.element(degree, comps).unwrap()
}

fn random_morphism(smp: &mut Sampler) -> TwoTermMorphism {
    let a = random_two_term(smp).unwrap();
    random_two_term_morphism(smp, &a).unwrap()
}

fn conv_of(f: &TwoTermMorphism) -> Convolution {
    Convolution::new(f.source().structure(), f.target().structure()).unwrap()
}

/// A polynomial 0-form of degree ≤ 2 vanishing at vertex `i`.
fn vanishing_profile(smp: &mut Sampler, simplex: Simplex, i: usize) -> PolyForm {
    let n = simplex.dim();
    let mut w = PolyForm::constant(n, smp.scalar());
    for j in 1..=n {
        let x = PolyForm::coordinate(n, j);
        w = w.plus(&x.scaled(&smp.scalar()));
        w = w.plus(&x.wedge(&x).unwrap().scaled(&smp.scalar()));
    }
    let at = w.evaluate(&simplex.vertex(i).unwrap());
    w.minus(&PolyForm::constant(n, at))
}

fn random_parameter(smp: &mut Sampler, conv: &Convolution, simplex: Simplex, i: usize) -> SimplexTensor {
    let mut beta = SimplexTensor::zero(simplex, 0);
    for _ in 0..2 {
        let x = random_element(smp, conv, 0);
        let w = vanishing_profile(smp, simplex, i);
        beta = beta.plus(&SimplexTensor::tensor(simplex, &x, &w).unwrap()).unwrap();
    }
    beta
}

#[test]
fn brackets() {
    let mut smp = Sampler::new(31);
    for _ in 0..6 {
        let f = random_morphism(&mut smp);
        let conv = conv_of(&f);
        assert!(conv.differential(&ConvElement::zero(0)).unwrap().is_zero());
        assert_eq!(conv.arity_bound(-1), 2);
        for (d, e) in [(0, 0), (0, -1), (-1, -1), (-2, 0)] {
            let x = random_element(&mut smp, &conv, d);
            let y = random_element(&mut smp, &conv, e);
            let xy = conv.bracket(&[&x, &y]).unwrap();
            let yx = conv.bracket(&[&y, &x]).unwrap();
            let sign = scalar::from_sign(-parity(d as i64 * e as i64));
            assert_eq!(xy, yx.scaled(&sign), "degrees {d}, {e}");
            assert!(conv.differential(&conv.differential(&x).unwrap()).unwrap().is_zero());
        }
    }
}

#[test]
fn morphisms_are_maurer_cartan_elements() {
    let mut smp = Sampler::new(32);
    for _ in 0..8 {
        let f = random_morphism(&mut smp);
        let m = f.to_infty().unwrap();
        let conv = conv_of(&f);
        let alpha = conv.morphism_to_mc(&m).unwrap();
        assert!(conv.mc_residual(&alpha).unwrap().is_zero());
        assert_eq!(conv.mc_to_morphism(&alpha).unwrap(), m);

        let bad = perturb_morphism(&mut smp, &m).unwrap();
        let residual = conv.mc_residual(&conv.morphism_to_mc(&bad).unwrap()).unwrap();
        assert_eq!(residual.is_zero(), check_leibniz_morphism(&bad, 4).unwrap().passed());
        let w = conv.target().space();
        let down = Convolution::shift(&w.suspend().unwrap(), w, -1).unwrap();
        for (p, c) in morphism_coalgebra_residual(&bad, 4).unwrap() {
            let expected = c.post_compose(&down).unwrap();
            let got = residual.component(p).cloned().unwrap_or_else(|| conv.blank(p, -2).unwrap());
            assert_eq!(got, expected, "arity {p}");
        }

        let f2 = perturb_map(&mut smp, f.f2()).unwrap();
        if &f2 != f.f2() {
            let g = crate::infinity::InftyMorphism::new(m.source(), m.target(), [f.f1().clone(), f2]).unwrap();
            let r = conv.mc_residual(&conv.morphism_to_mc(&g).unwrap()).unwrap();
            assert!(r.component(1).is_none());
        }
    }
}

#[test]
fn identity_morphism() {
    let mut smp = Sampler::new(33);
    let a = random_two_term(&mut smp).unwrap();
    let conv = Convolution::new(a.structure(), a.structure()).unwrap();
    let id = crate::infinity::InftyMorphism::identity(a.structure());
    let alpha = conv.morphism_to_mc(&id).unwrap();
    assert!(alpha.component(2).is_none());
    let unary = alpha.component(1).unwrap();
    for b in conv.suspended().basis() {
        assert_eq!(unary.apply_basis(&[b]), Vector::basis(b.shifted(-1)));
    }
    assert!(conv.mc_residual(&alpha).unwrap().is_zero());
}

#[test]
fn kan_bijection_and_closed_form() {
    let mut smp = Sampler::new(34);
    for simplex in [Simplex::Interval, Simplex::Triangle] {
        for i in 0..=simplex.dim() {
            for _ in 0..3 {
                let f = random_morphism(&mut smp);
                let conv = conv_of(&f);
                let alg = SimplexAlgebra::new(&conv, simplex);
                let mu = conv.morphism_to_mc(&f.to_infty().unwrap()).unwrap();

                let (constant, step) = alg.b_inverse(&mu, &SimplexTensor::zero(simplex, -1), i).unwrap();
                assert_eq!(constant, SimplexTensor::constant(simplex, &mu));
                assert_eq!(step, 1);

                let beta = random_parameter(&mut smp, &conv, simplex, i);
                assert!(beta.evaluate(i).unwrap().is_zero());
                let nu = alg.differential(&beta).unwrap();
                let (alpha, step) = alg.b_inverse(&mu, &nu, i).unwrap();
                assert!(step <= 2, "{simplex:?} vertex {i}: step {step}");
                assert!(alg.mc_residual(&alpha).unwrap().is_zero());
                assert_eq!(alpha, alg.closed_form(&mu, &beta).unwrap());

                let (mu2, nu2) = alg.b_forward(&alpha, i).unwrap();
                assert_eq!(mu2, mu);
                assert_eq!(nu2, nu);
                assert!(nu2.evaluate(i).unwrap().is_zero());
                assert_eq!(alg.b_inverse(&mu2, &nu2, i).unwrap().0, alpha);
            }
        }
    }
}

#[test]
fn lift_and_extract() {
    let mut smp = Sampler::new(35);
    for _ in 0..6 {
        let f = random_morphism(&mut smp);
        let conv = conv_of(&f);
        let still = TwoTermHomotopy::identity(&f);
        let constant = lift_homotopy(&conv, &still, 0).unwrap();
        let mu = conv.morphism_to_mc(&f.to_infty().unwrap()).unwrap();
        assert_eq!(constant, SimplexTensor::constant(Simplex::Interval, &mu));
        assert_eq!(extract_homotopy(&conv, &constant, 0).unwrap().theta(), still.theta());

        let h = random_homotopy(&mut smp, &f).unwrap();
        assert!(check_homotopy(&h).unwrap().passed());
        for i in 0..2 {
            let alpha = lift_homotopy(&conv, &h, i).unwrap();
            assert_eq!(conv.mc_to_morphism(&alpha.evaluate(0).unwrap()).unwrap(), h.source().to_infty().unwrap());
            assert_eq!(conv.mc_to_morphism(&alpha.evaluate(1).unwrap()).unwrap(), h.target().to_infty().unwrap());
            for j in 0..2 {
                let back = extract_homotopy(&conv, &alpha, j).unwrap();
                assert_eq!(back.theta(), h.theta(), "lift at {i}, extract at {j}");
                assert!(check_homotopy(&back).unwrap().passed());
            }
        }
    }
}

#[test]
fn composition_through_the_triangle() {
    let mut smp = Sampler::new(36);
    for _ in 0..6 {
        let f = random_morphism(&mut smp);
        let conv = conv_of(&f);
        let theta = random_homotopy(&mut smp, &f).unwrap();
        let tau = random_homotopy(&mut smp, theta.target()).unwrap();
        let direct = vcompose(&tau, &theta).unwrap();
        let via = vcompose_via_simplex(&theta, &tau).unwrap();
        assert_eq!(via.theta(), direct.theta());
        assert_eq!(via.source(), direct.source());
        assert_eq!(via.target(), direct.target());

        let alg = SimplexAlgebra::new(&conv, Simplex::Triangle);
        let alpha = composition_simplex(&conv, &theta, &tau).unwrap();
        assert!(alg.mc_residual(&alpha).unwrap().is_zero());
        let beta = homotopy::composition_parameter(&conv, &theta, &tau).unwrap();
        let mu = conv.morphism_to_mc(&theta.target().to_infty().unwrap()).unwrap();
        let (iterated, step) = alg.b_inverse(&mu, &alg.differential(&beta).unwrap(), 1).unwrap();
        assert_eq!(iterated, alpha);
        assert!(step <= 2);

        let u = PolyForm::coordinate(1, 1);
        let upper = SimplexTensor::tensor(Simplex::Interval, &conv.parameter_to_conv(tau.theta()).unwrap(), &u).unwrap();
        let lower = SimplexTensor::tensor(
            Simplex::Interval,
            &conv.parameter_to_conv(theta.theta()).unwrap(),
            &u.minus(&PolyForm::one(1)),
        )
        .unwrap();
        assert_eq!(beta.restrict_to_edge(0, 2).unwrap(), upper.plus(&lower).unwrap());
        assert_eq!(beta.restrict_to_edge(1, 2).unwrap(), upper);
        assert_eq!(beta.restrict_to_edge(0, 1).unwrap(), lower);
        assert_eq!(edge_images(0, 2).unwrap().len(), 2);

        let edge01 = extract_homotopy(&conv, &alpha.restrict_to_edge(0, 1).unwrap(), 0).unwrap();
        let edge12 = extract_homotopy(&conv, &alpha.restrict_to_edge(1, 2).unwrap(), 0).unwrap();
        assert_eq!(edge01.theta(), theta.theta());
        assert_eq!(edge12.theta(), tau.theta());
    }
    let f = random_morphism(&mut smp);
    let still = TwoTermHomotopy::identity(&f);
    assert!(vcompose_via_simplex(&still, &still).unwrap().theta().is_zero());
}

mod flows {
    use super::*;
    use crate::graded::{BasisIndex, GradedSpace};
    use crate::infinity::{InftyStructure, Kind};

    fn heisenberg() -> InftyStructure {
        let space = GradedSpace::new("g", [(0, 1), (-1, 2)]).unwrap();
        let x = BasisIndex::new(0, 0);
        let y = BasisIndex::new(-1, 0);
        let z = BasisIndex::new(-1, 1);
        let mut l2 = MultiMap::new(&space, &space, 2, 0).unwrap();
        l2.add_entry(&[x, y], z, int(1)).unwrap();
        l2.add_entry(&[y, x], z, int(-1)).unwrap();
        InftyStructure::new(Kind::Lie, &space, [l2]).unwrap()
    }

    /// Coefficient of `t^n` in the Maurer-Cartan curvature of `Σ t^k/k! e^k`.
    fn curvature_coefficient<L: LInfinity>(alg: &L, curve: &GaugeCurve<L::Elem>, n: usize) -> L::Elem {
        let e = curve.coefficients();
        let mut out = alg.zero(-2);
        for k in 1..=alg.max_arity() {
            let sign = scalar::from_sign(crate::graded::suspension::triangular_sign(k));
            for split in compositions(n, k) {
                if split.iter().any(|&j| j >= e.len()) {
                    continue;
                }
                let args: Vec<&L::Elem> = split.iter().map(|&j| &e[j]).collect();
                let weight = split.iter().fold(scalar::one() / scalar::factorial(k), |c, &j| c / scalar::factorial(j));
                alg.accumulate(&mut out, &alg.bracket(&args).unwrap(), &(weight * &sign)).unwrap();
            }
        }
        out
    }

    fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
        if parts == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        (0..=total)
            .flat_map(|first| {
                compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }

    fn check_flow<L: LInfinity>(alg: &L, alpha: &L::Elem, r: &L::Elem) -> GaugeCurve<L::Elem> {
        let curve = gauge_curve(alg, BracketConvention::LadaStasheff, alpha, r, 6).unwrap();
        assert_eq!(curve.base(), alpha);
        let top = curve.coefficients().len() * alg.max_arity().max(1);
        for n in 0..=top {
            assert!(alg.is_zero(&curvature_coefficient(alg, &curve, n)), "order {n}");
        }
        for t in [int(0), int(1), frac(1, 2), int(-3)] {
            let at = curve.value(alg, &t).unwrap();
            assert!(alg.is_zero(&mc_curvature(alg, BracketConvention::LadaStasheff, &at).unwrap()));
            let field = gauge_field(alg, BracketConvention::LadaStasheff, &at, r).unwrap();
            assert_eq!(curve.velocity(alg, &t).unwrap(), field, "t = {t}");
        }
        curve
    }

    #[test]
    fn heisenberg_flow() {
        let g = heisenberg();
        let alpha = Vector::basis(BasisIndex::new(-1, 0)).scaled(&int(2)).plus(&Vector::basis(BasisIndex::new(-1, 1)));
        let r = Vector::basis(BasisIndex::new(0, 0)).scaled(&int(3));
        let curve = check_flow(&g, &alpha, &r);
        assert_eq!(curve.coefficients().len(), 2);
        // e^1 = −ℓ^G_2(α, r) = ℓ_2(2y, 3x) = −6z
        assert_eq!(curve.coefficients()[1], Vector::basis(BasisIndex::new(-1, 1)).scaled(&int(-6)));
        let still = gauge_curve(&g, BracketConvention::LadaStasheff, &alpha, &Vector::new(), 4).unwrap();
        assert_eq!(still.coefficients().len(), 1);
    }

    #[test]
    fn abelian_flow_is_linear() {
        let space = GradedSpace::new("g", [(0, 2), (-1, 2)]).unwrap();
        let mut smp = Sampler::new(37);
        let l1 = smp.map(&space, &space, 1, -1, 0.8);
        let g = InftyStructure::new(Kind::Lie, &space, [l1.clone()]).unwrap();
        let r = smp.vector(&space, 0);
        let alpha = l1.apply(&[smp.vector(&space, 0)]).unwrap();
        let curve = check_flow(&g, &mut alpha.clone(), &r);
        let e1 = l1.apply(&[r.clone()]).unwrap().neg();
        if e1.is_zero() {
            assert_eq!(curve.coefficients().len(), 1);
        } else {
            assert_eq!(curve.coefficients(), &[alpha.clone(), e1.clone()]);
        }
        assert_eq!(curve.value(&g, &int(1)).unwrap(), alpha.plus(&e1));
    }

    #[test]
    fn flows_between_morphisms() {
        let mut smp = Sampler::new(38);
        for _ in 0..4 {
            let f = random_morphism(&mut smp);
            let conv = conv_of(&f);
            let alpha = conv.morphism_to_mc(&f.to_infty().unwrap()).unwrap();
            let r = conv.parameter_to_conv(&smp.map(f.source().space(), f.target().space(), 1, 1, 0.6)).unwrap();
            let curve = check_flow(&conv, &alpha, &r);
            assert!(curve.coefficients().len() <= 3);
            let end = curve.value(&conv, &int(1)).unwrap();
            let g = TwoTermMorphism::from_infty(&conv.mc_to_morphism(&end).unwrap()).unwrap();
            assert!(crate::two_term::check_two_term_morphism(&g).passed());
        }
    }

    #[test]
    fn non_terminating_flow_is_rejected() {
        let space = GradedSpace::new("g", [(0, 1), (-1, 1)]).unwrap();
        let x = BasisIndex::new(0, 0);
        let y = BasisIndex::new(-1, 0);
        let mut l2 = MultiMap::new(&space, &space, 2, 0).unwrap();
        l2.add_entry(&[x, y], y, int(1)).unwrap();
        l2.add_entry(&[y, x], y, int(-1)).unwrap();
        let g = InftyStructure::new(Kind::Lie, &space, [l2]).unwrap();
        let err = gauge_curve(&g, BracketConvention::LadaStasheff, &Vector::basis(y), &Vector::basis(x), 5);
        assert!(matches!(err, Err(crate::error::HalgError::NoStabilisation(5))));
    }
}

