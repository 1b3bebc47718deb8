//! Closed relations of 2-term algebras, morphisms and homotopies, with
//! vertical and horizontal composition.

use halg::sample::{random_homotopy, random_two_term, random_two_term_morphism, Sampler};
use halg::two_term::{check_homotopy, check_two_term_algebra, check_two_term_morphism, hcompose, vcompose};

fn main() -> halg::Result<()> {
    let mut smp = Sampler::new(3);
    let a = random_two_term(&mut smp)?;
    println!("algebra: {:?}", check_two_term_algebra(&a).failed_families());
    let f = random_two_term_morphism(&mut smp, &a)?;
    let g = random_two_term_morphism(&mut smp, f.target())?;
    println!("f, g pass: {} {}", check_two_term_morphism(&f).passed(), check_two_term_morphism(&g).passed());

    let theta = random_homotopy(&mut smp, &f)?;
    let tau = random_homotopy(&mut smp, theta.target())?;
    let vertical = vcompose(&tau, &theta)?;
    println!("τ∘θ is a homotopy: {}", check_homotopy(&vertical)?.passed());

    let sigma = random_homotopy(&mut smp, &g)?;
    let horizontal = hcompose(&sigma, &theta)?;
    println!("σ∗θ is a homotopy: {}, θ entries {}", check_homotopy(&horizontal)?.passed(), horizontal.theta().nnz());
    Ok(())
}
