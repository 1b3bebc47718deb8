//! A 3-term chain complex as a linear 2-category and back.

use halg::graded::scalar::{self, int, Scalar};
use halg::sample::{random_complex, Sampler};
use halg::two_term::{chain_to_2cat, two_cat_to_chain};

fn show(v: &[Scalar]) -> String {
    v.iter().map(scalar::format).collect::<Vec<_>>().join(" ")
}

fn main() -> halg::Result<()> {
    let mut smp = Sampler::new(2);
    let c = random_complex(&mut smp, &[2, 2, 1])?;
    let l = chain_to_2cat(&c);
    println!("cells per level: {:?}", l.dims());
    println!("globular identities hold: {}", l.check_globular().passed());
    println!("roundtrip recovers the complex: {}", two_cat_to_chain(&l)? == c);

    let x: Vec<_> = (0..l.dims()[1]).map(|i| int(i as i64 + 1)).collect();
    println!("1-cell ({}): source ({}), target ({})", show(&x), show(&l.s(1, 1, &x)), show(&l.t(1, 1, &x)));
    Ok(())
}
