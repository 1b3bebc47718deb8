//! Morphisms as Maurer-Cartan elements of the convolution algebra, lifted to
//! the interval and composed through the triangle.

use halg::convolution::{extract_homotopy, lift_homotopy, vcompose_via_simplex, Convolution, Simplex, SimplexAlgebra};
use halg::sample::{random_homotopy, random_two_term, random_two_term_morphism, Sampler};
use halg::two_term::vcompose;

fn main() -> halg::Result<()> {
    let mut smp = Sampler::new(5);
    let a = random_two_term(&mut smp)?;
    let f = random_two_term_morphism(&mut smp, &a)?;
    let conv = Convolution::new(f.source().structure(), f.target().structure())?;
    let mu = conv.morphism_to_mc(&f.to_infty()?)?;
    println!("MC residual of f vanishes: {}", conv.mc_residual(&mu)?.is_zero());

    let theta = random_homotopy(&mut smp, &f)?;
    let alpha = lift_homotopy(&conv, &theta, 0)?;
    let interval = SimplexAlgebra::new(&conv, Simplex::Interval);
    let (base, nu) = interval.b_forward(&alpha, 0)?;
    let (again, step) = interval.b_inverse(&base, &nu, 0)?;
    println!("lift is MC: {}, rebuilt in {step} steps: {}", interval.mc_residual(&alpha)?.is_zero(), again == alpha);
    println!("extract(lift θ) = θ: {}", extract_homotopy(&conv, &alpha, 1)?.theta() == theta.theta());

    let tau = random_homotopy(&mut smp, theta.target())?;
    println!("triangle composite = τ₁ + θ₁: {}", vcompose_via_simplex(&theta, &tau)? == vcompose(&tau, &theta)?);
    Ok(())
}
