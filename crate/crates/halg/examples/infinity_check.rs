//! A random 3-term Leibniz∞ algebra checked through its brackets and through
//! its codifferential, before and after a perturbation.

use halg::infinity::{check_codifferential, check_leibniz_infinity, Kind};
use halg::sample::{perturb_structure, random_structure, Sampler};

fn main() -> halg::Result<()> {
    let mut smp = Sampler::new(7);
    let t = random_structure(&mut smp, Kind::Leibniz, 3)?;
    let bent = perturb_structure(&mut smp, &t.structure)?;
    for (label, s) in [("transported", &t.structure), ("perturbed", &bent)] {
        let n = s.default_n_max();
        let brackets = check_leibniz_infinity(s, n)?;
        let coalgebra = check_codifferential(s, n)?;
        println!("{label}: {} brackets, dims {:?}", s.term_count(), s.space().dims());
        for fam in &brackets.families {
            let agree = coalgebra.family(&fam.name).map_or(fam.passed(), |g| g.table() == fam.table());
            println!("  {:5} {} residuals, routes agree: {agree}", fam.name, fam.residuals.len());
        }
    }
    Ok(())
}
