//! Products and coproducts in the free Zinbiel algebra on two letters.

use halg::coalgebra::zinbiel::{coproduct, product};
use halg::coalgebra::Word;
use halg::graded::scalar;
use halg::graded::BasisIndex;

fn main() -> halg::Result<()> {
    let a = BasisIndex::new(0, 0);
    let b = BasisIndex::new(1, 0);
    let u = Word::new(vec![b, a])?;
    let v = Word::new(vec![b, a])?;
    println!("({u}) · ({v}) =");
    for (w, c) in product(&u, &v)?.iter() {
        println!("  {} {w}", scalar::format(c));
    }
    let w = Word::new(vec![a, b, b])?;
    println!("Δ({w}) =");
    for ((l, r), c) in coproduct(&w).iter() {
        println!("  {} ({l}) ⊗ ({r})", scalar::format(c));
    }
    Ok(())
}
