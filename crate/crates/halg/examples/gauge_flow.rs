//! The gauge flow of a Maurer-Cartan element in the Heisenberg Lie algebra.

use halg::convolution::{gauge_curve, gauge_field, BracketConvention};
use halg::graded::scalar::{self, int};
use halg::graded::{BasisIndex, GradedSpace, MultiMap, Vector};
use halg::infinity::{InftyStructure, Kind};

fn show(v: &Vector) -> String {
    let terms: Vec<String> = v.iter().map(|(b, c)| format!("{} {b}", scalar::format(c))).collect();
    if terms.is_empty() { "0".into() } else { terms.join(" + ") }
}

fn main() -> halg::Result<()> {
    let g = GradedSpace::new("g", [(0, 1), (-1, 2)])?;
    let (x, y, z) = (BasisIndex::new(0, 0), BasisIndex::new(-1, 0), BasisIndex::new(-1, 1));
    let mut l2 = MultiMap::new(&g, &g, 2, 0)?;
    l2.add_entry(&[x, y], z, int(1))?;
    l2.add_entry(&[y, x], z, int(-1))?;
    let heis = InftyStructure::new(Kind::Lie, &g, [l2])?;

    let alpha = Vector::basis(y).scaled(&int(2));
    let r = Vector::basis(x).scaled(&scalar::frac(1, 2));
    let convention = BracketConvention::LadaStasheff;
    let curve = gauge_curve(&heis, convention, &alpha, &r, 6)?;
    for (k, e) in curve.coefficients().iter().enumerate() {
        println!("e^{k} = {}", show(e));
    }
    let beta = curve.value(&heis, &int(1))?;
    println!("β = α(1) = {}", show(&beta));
    println!("V_r(β) = {}", show(&gauge_field(&heis, convention, &beta, &r)?));
    Ok(())
}
