//! The Cartan calculus of `∂`, `i_X`, `ℒ_X` on Loday cochains.

use super::algebra::{LeibnizAlgebra, Representation};
use super::cochain::{coboundary, contraction, lie_derivative, LodayCochain};
use crate::error::Result;
use crate::graded::{BasisIndex, Vector};
use crate::report::IdentityReport;

pub const CARTAN_FAMILIES: [&str; 5] = ["(a) ∂² = 0", "(b) ℒ_X = ∂i_X + i_X∂", "(c) [∂, ℒ_X] = 0", "(d) [ℒ_X, i_Y] = i_[X,Y]", "(e) [ℒ_X, ℒ_Y] = ℒ_[X,Y]"];

fn record(report: &mut IdentityReport, family: &str, tags: &[BasisIndex], residual: &LodayCochain) {
    for (args, v) in residual.entries() {
        let mut inputs = tags.to_vec();
        inputs.extend_from_slice(args);
        report.record(family, &inputs, v.clone());
    }
}

/// The five identities on every sample cochain and all basis `X`, `Y`. Residual
/// inputs list `X` (and `Y`) before the cochain arguments.
pub fn cartan_check(a: &LeibnizAlgebra, r: &Representation, samples: &[LodayCochain]) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("Cartan calculus");
    for f in CARTAN_FAMILIES {
        report.touch(f);
    }
    let d = |c: &LodayCochain| coboundary(a, r, c);
    let lie = |x: &Vector, c: &LodayCochain| lie_derivative(a, r, x, c);
    for c in samples {
        let dc = d(c)?;
        record(&mut report, CARTAN_FAMILIES[0], &[], &d(&dc)?);
        for x in a.basis() {
            let vx = Vector::basis(x);
            let lx = lie(&vx, c)?;
            let homotopy = d(&contraction(&vx, c)?)?.plus(&contraction(&vx, &dc)?)?;
            record(&mut report, CARTAN_FAMILIES[1], &[x], &lx.minus(&homotopy)?);
            record(&mut report, CARTAN_FAMILIES[2], &[x], &d(&lx)?.minus(&lie(&vx, &dc)?)?);
            for y in a.basis() {
                let vy = Vector::basis(y);
                let xy = a.bracket_basis(x, y);
                let commutator = lie(&vx, &contraction(&vy, c)?)?.minus(&contraction(&vy, &lx)?)?;
                record(&mut report, CARTAN_FAMILIES[3], &[x, y], &commutator.minus(&contraction(&xy, c)?)?);
                let ly = lie(&vy, c)?;
                let square = lie(&vx, &ly)?.minus(&lie(&vy, &lx)?)?;
                record(&mut report, CARTAN_FAMILIES[4], &[x, y], &square.minus(&lie(&xy, c)?)?);
            }
        }
    }
    Ok(report)
}
