//! The squares ideal `Ē⁰ = span{[x,x]}` and the Lie algebra `V/Ē⁰`.

use crate::error::Result;
use crate::graded::linalg::Matrix;
use crate::graded::scalar;
use crate::graded::{BasisIndex, GradedSpace, MultiMap, Vector};
use crate::report::IdentityReport;

use super::algebra::LeibnizAlgebra;

/// `Ē⁰` in reduced row-echelon form, the quotient and the checks behind it.
#[derive(Clone, Debug)]
pub struct SquaresQuotient {
    pub ideal: Vec<Vector>,
    /// Basis vectors of `V` whose classes form the basis of the quotient.
    pub complement: Vec<BasisIndex>,
    pub quotient: LeibnizAlgebra,
    /// Families "[I,V] = 0", "[V,I] ⊆ I", "antisymmetry", "Jacobi".
    pub report: IdentityReport,
}

fn coordinates(basis: &[BasisIndex], v: &Vector) -> Vec<scalar::Scalar> {
    basis.iter().map(|b| v.coeff(b)).collect()
}

/// Row-reduced basis of `span(vectors)` and its pivot positions.
fn echelon(basis: &[BasisIndex], vectors: &[Vector]) -> (Vec<Vector>, Vec<usize>) {
    if vectors.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let (r, pivots) = Matrix::from_rows(vectors.iter().map(|v| coordinates(basis, v)).collect()).rref();
    let rows = (0..pivots.len())
        .map(|i| {
            let mut v = Vector::new();
            for (j, &b) in basis.iter().enumerate() {
                v.add_term(b, r.get(i, j).clone());
            }
            v
        })
        .collect();
    (rows, pivots)
}

/// `v` reduced modulo an echelon basis: its pivot coordinates become zero.
fn reduce(basis: &[BasisIndex], rows: &[Vector], pivots: &[usize], v: &Vector) -> Vector {
    let mut out = v.clone();
    for (row, &p) in rows.iter().zip(pivots) {
        let c = out.coeff(&basis[p]);
        if c != scalar::zero() {
            out.add_scaled(row, &-c);
        }
    }
    out
}

/// `Ē⁰ = span{[x,y] + [y,x]}` over basis pairs, which is `span{[v,v]}` in characteristic 0.
pub fn squares_ideal(a: &LeibnizAlgebra) -> Vec<Vector> {
    let basis = a.basis();
    let mut symmetrized = Vec::new();
    for (i, &x) in basis.iter().enumerate() {
        for &y in &basis[i..] {
            symmetrized.push(a.bracket_basis(x, y).plus(&a.bracket_basis(y, x)));
        }
    }
    echelon(&basis, &symmetrized).0
}

pub fn squares_ideal_quotient(a: &LeibnizAlgebra) -> Result<SquaresQuotient> {
    let basis = a.basis();
    let (ideal, pivots) = echelon(&basis, &squares_ideal(a));
    let mut report = IdentityReport::new("squares ideal");
    report.touch("[I,V] = 0");
    report.touch("[V,I] ⊆ I");
    for (k, i) in ideal.iter().enumerate() {
        let tag = BasisIndex::new(0, k);
        for &x in &basis {
            let vx = Vector::basis(x);
            report.record("[I,V] = 0", &[tag, x], a.bracket(i, &vx));
            report.record("[V,I] ⊆ I", &[x, tag], reduce(&basis, &ideal, &pivots, &a.bracket(&vx, i)));
        }
    }

    let complement: Vec<BasisIndex> = basis.iter().enumerate().filter(|(j, _)| !pivots.contains(j)).map(|(_, &b)| b).collect();
    let space = GradedSpace::new(&format!("{}/I", a.space().name()), [(0, complement.len())])?;
    let project = |v: &Vector| {
        let r = reduce(&basis, &ideal, &pivots, v);
        let mut out = Vector::new();
        for (k, b) in complement.iter().enumerate() {
            out.add_term(BasisIndex::new(0, k), r.coeff(b));
        }
        out
    };
    let mut bracket = MultiMap::new(&space, &space, 2, 0)?;
    for (i, &x) in complement.iter().enumerate() {
        for (j, &y) in complement.iter().enumerate() {
            bracket.add_value(&[BasisIndex::new(0, i), BasisIndex::new(0, j)], &project(&a.bracket_basis(x, y)))?;
        }
    }
    let quotient = LeibnizAlgebra::unchecked(&space, bracket)?;
    report.absorb("", quotient.check_lie());
    Ok(SquaresQuotient { ideal, complement, quotient, report })
}
