//! Loday cochains of a small Leibniz algebra: coboundary, Cartan calculus and
//! the Lie quotient by squares.

use halg::loday::{cartan_check, coboundary, squares_ideal_quotient, Representation};
use halg::sample::{leibniz_from_constants, random_cochain, Sampler};

fn main() -> halg::Result<()> {
    // [y,y] = x on the basis (x, y)
    let a = leibniz_from_constants("E", 2, &[(1, 1, 0, 1)])?;
    let r = Representation::adjoint(&a);
    let mut smp = Sampler::new(11);
    let samples = (0..=3).map(|p| random_cochain(&mut smp, &a, r.module(), p)).collect::<halg::Result<Vec<_>>>()?;
    for c in &samples {
        let dc = coboundary(&a, &r, c)?;
        println!("arity {}: ∂c has {} entries, ∂∂c = 0: {}", c.arity(), dc.entries().len(), coboundary(&a, &r, &dc)?.is_zero());
    }
    let report = cartan_check(&a, &r, &samples)?;
    for fam in &report.families {
        println!("{:28} {}", fam.name, if fam.passed() { "holds" } else { "fails" });
    }
    let q = squares_ideal_quotient(&a)?;
    println!("squares ideal has dimension {}, quotient is Lie: {}", q.ideal.len(), q.quotient.check_lie().passed());
    Ok(())
}
