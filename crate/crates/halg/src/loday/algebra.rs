//! Ungraded Leibniz algebras, their representations and bimodules.

use std::collections::BTreeMap;

use crate::error::{HalgError, Result};
use crate::graded::scalar;
use crate::graded::{BasisIndex, GradedSpace, MultiMap, Vector};
use crate::report::IdentityReport;

fn require_ungraded(space: &GradedSpace, role: &str) -> Result<()> {
    if space.degrees().any(|d| d != 0) {
        return Err(HalgError::Inhomogeneous(format!("{role} must be concentrated in degree 0")));
    }
    Ok(())
}

/// A finite-dimensional algebra with a left Leibniz bracket, not yet checked.
#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizAlgebra {
    space: GradedSpace,
    bracket: MultiMap,
}

impl LeibnizAlgebra {
    /// Any bilinear bracket; see [`Self::check`] for the Jacobi identity.
    pub fn unchecked(space: &GradedSpace, bracket: MultiMap) -> Result<Self> {
        require_ungraded(space, "a Leibniz algebra")?;
        if bracket.arity() != 2 {
            return Err(HalgError::ArityMismatch { expected: 2, got: bracket.arity() });
        }
        if bracket.degree() != 0 || bracket.source() != space || bracket.target() != space {
            return Err(HalgError::SpaceMismatch("the bracket must be a degree-0 map V ⊗ V → V".into()));
        }
        Ok(LeibnizAlgebra { space: space.clone(), bracket })
    }

    /// A bracket satisfying `[x,[y,z]] = [[x,y],z] + [y,[x,z]]`.
    pub fn new(space: &GradedSpace, bracket: MultiMap) -> Result<Self> {
        let a = Self::unchecked(space, bracket)?;
        let report = a.check();
        if !report.passed() {
            return Err(HalgError::IdentityFailure("the bracket violates the Leibniz identity".into()));
        }
        Ok(a)
    }

    pub fn abelian(space: &GradedSpace) -> Result<Self> {
        Self::unchecked(space, MultiMap::new(space, space, 2, 0)?)
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn bracket_map(&self) -> &MultiMap {
        &self.bracket
    }

    pub fn dim(&self) -> usize {
        self.space.basis().len()
    }

    pub fn basis(&self) -> Vec<BasisIndex> {
        self.space.basis()
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        self.bracket.apply(&[x.clone(), y.clone()]).expect("arity 2")
    }

    pub fn bracket_basis(&self, x: BasisIndex, y: BasisIndex) -> Vector {
        self.bracket.apply_basis(&[x, y])
    }

    /// Family "Jacobi": `[x,[y,z]] − [[x,y],z] − [y,[x,z]]` on basis triples.
    pub fn check(&self) -> IdentityReport {
        let mut report = IdentityReport::new("Leibniz algebra");
        report.touch("Jacobi");
        for x in self.basis() {
            for y in self.basis() {
                for z in self.basis() {
                    let (vx, vy, vz) = (Vector::basis(x), Vector::basis(y), Vector::basis(z));
                    let lhs = self.bracket(&vx, &self.bracket_basis(y, z));
                    let rhs = self.bracket(&self.bracket_basis(x, y), &vz).plus(&self.bracket(&vy, &self.bracket_basis(x, z)));
                    report.record("Jacobi", &[x, y, z], lhs.minus(&rhs));
                }
            }
        }
        report
    }

    /// Families "antisymmetry" and "Jacobi".
    pub fn check_lie(&self) -> IdentityReport {
        let mut report = self.check();
        report.touch("antisymmetry");
        for x in self.basis() {
            for y in self.basis() {
                report.record("antisymmetry", &[x, y], self.bracket_basis(x, y).plus(&self.bracket_basis(y, x)));
            }
        }
        report
    }
}

/// A bilinear action `(x, w) ↦ x ▷ w` of `V` on `W`, read as operators `x ▷ · ∈ End(W)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Action {
    acting: GradedSpace,
    module: GradedSpace,
    table: BTreeMap<(BasisIndex, BasisIndex), Vector>,
}

impl Action {
    pub fn zero(acting: &GradedSpace, module: &GradedSpace) -> Result<Self> {
        require_ungraded(acting, "the acting algebra")?;
        require_ungraded(module, "a module")?;
        Ok(Action { acting: acting.clone(), module: module.clone(), table: BTreeMap::new() })
    }

    /// `x ▷ w = [x, w]` on `V` itself.
    pub fn left_adjoint(a: &LeibnizAlgebra) -> Self {
        let mut act = Action::zero(a.space(), a.space()).expect("ungraded");
        for x in a.basis() {
            for w in a.basis() {
                act.set(x, w, a.bracket_basis(x, w)).expect("same spaces");
            }
        }
        act
    }

    pub fn acting(&self) -> &GradedSpace {
        &self.acting
    }

    pub fn module(&self) -> &GradedSpace {
        &self.module
    }

    pub fn entries(&self) -> &BTreeMap<(BasisIndex, BasisIndex), Vector> {
        &self.table
    }

    pub fn set(&mut self, x: BasisIndex, w: BasisIndex, value: Vector) -> Result<()> {
        if !self.acting.basis().contains(&x) || !self.module.basis().contains(&w) {
            return Err(HalgError::InvalidBasis(format!("{x:?} ▷ {w:?} is outside the spaces")));
        }
        if value.keys().any(|k| !self.module.basis().contains(k)) {
            return Err(HalgError::InvalidBasis("action value leaves the module".into()));
        }
        if value.is_zero() {
            self.table.remove(&(x, w));
        } else {
            self.table.insert((x, w), value);
        }
        Ok(())
    }

    pub fn apply_basis(&self, x: BasisIndex, w: BasisIndex) -> Vector {
        self.table.get(&(x, w)).cloned().unwrap_or_default()
    }

    pub fn apply(&self, x: &Vector, w: &Vector) -> Vector {
        let mut out = Vector::new();
        for (a, ca) in x.iter() {
            for (b, cb) in w.iter() {
                out.add_scaled(&self.apply_basis(*a, *b), &(ca * cb));
            }
        }
        out
    }

    pub fn scaled(&self, c: &scalar::Scalar) -> Self {
        let mut out = Action::zero(&self.acting, &self.module).expect("ungraded");
        for (&(x, w), v) in &self.table {
            out.set(x, w, v.scaled(c)).expect("same spaces");
        }
        out
    }

    fn same_spaces(&self, a: &LeibnizAlgebra) -> Result<()> {
        if &self.acting != a.space() {
            return Err(HalgError::SpaceMismatch("the action is by another algebra".into()));
        }
        Ok(())
    }
}

/// `ρ: V → End(W)` with `ρ[x,y] = ρ(x)ρ(y) − ρ(y)ρ(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    rho: Action,
}

impl Representation {
    pub fn unchecked(rho: Action) -> Self {
        Representation { rho }
    }

    pub fn new(a: &LeibnizAlgebra, rho: Action) -> Result<Self> {
        let r = Representation { rho };
        if !r.check(a)?.passed() {
            return Err(HalgError::IdentityFailure("ρ is not a homomorphism into the commutator algebra".into()));
        }
        Ok(r)
    }

    pub fn trivial(a: &LeibnizAlgebra, module: &GradedSpace) -> Result<Self> {
        Ok(Representation { rho: Action::zero(a.space(), module)? })
    }

    /// `ρ(x) = [x, ·]`; a representation for every Leibniz algebra.
    pub fn adjoint(a: &LeibnizAlgebra) -> Self {
        Representation { rho: Action::left_adjoint(a) }
    }

    pub fn action(&self) -> &Action {
        &self.rho
    }

    pub fn module(&self) -> &GradedSpace {
        self.rho.module()
    }

    pub fn act(&self, x: &Vector, w: &Vector) -> Vector {
        self.rho.apply(x, w)
    }

    /// Family "homomorphism": `ρ[x,y]w − ρ(x)ρ(y)w + ρ(y)ρ(x)w`.
    pub fn check(&self, a: &LeibnizAlgebra) -> Result<IdentityReport> {
        self.rho.same_spaces(a)?;
        let mut report = IdentityReport::new("representation");
        report.touch("homomorphism");
        for x in a.basis() {
            for y in a.basis() {
                for w in self.module().basis() {
                    let vw = Vector::basis(w);
                    let lhs = self.act(&a.bracket_basis(x, y), &vw);
                    let xy = self.act(&Vector::basis(x), &self.act(&Vector::basis(y), &vw));
                    let yx = self.act(&Vector::basis(y), &self.act(&Vector::basis(x), &vw));
                    report.record("homomorphism", &[x, y, w], lhs.minus(&xy).plus(&yx));
                }
            }
        }
        Ok(report)
    }
}

/// Left and right actions `μ^l(x) w` and `μ^r(x) w := μ^r(w ⊗ x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bimodule {
    left: Action,
    right: Action,
}

impl Bimodule {
    pub fn new(left: Action, right: Action) -> Result<Self> {
        if left.acting != right.acting || left.module != right.module {
            return Err(HalgError::SpaceMismatch("left and right actions live on different spaces".into()));
        }
        Ok(Bimodule { left, right })
    }

    /// `μ^l = ρ`, `μ^r = −ρ`.
    pub fn from_representation(r: &Representation) -> Self {
        Bimodule { left: r.rho.clone(), right: r.rho.scaled(&scalar::int(-1)) }
    }

    pub fn left(&self) -> &Action {
        &self.left
    }

    pub fn right(&self) -> &Action {
        &self.right
    }

    pub fn module(&self) -> &GradedSpace {
        self.left.module()
    }

    /// Families "VVW", "WVV", "VWV" on basis triples `(x, y, w)`:
    /// `μ^r[x,y] = μ^r(y)μ^r(x) + μ^l(x)μ^r(y)`,
    /// `μ^r[x,y] = μ^l(x)μ^r(y) − μ^r(y)μ^l(x)`,
    /// `μ^l[x,y] = μ^l(x)μ^l(y) − μ^l(y)μ^l(x)`.
    pub fn check(&self, a: &LeibnizAlgebra) -> Result<IdentityReport> {
        self.left.same_spaces(a)?;
        let mut report = IdentityReport::new("bimodule");
        for name in ["VVW", "WVV", "VWV"] {
            report.touch(name);
        }
        let l = |x: BasisIndex, w: &Vector| self.left.apply(&Vector::basis(x), w);
        let r = |x: BasisIndex, w: &Vector| self.right.apply(&Vector::basis(x), w);
        for x in a.basis() {
            for y in a.basis() {
                let xy = a.bracket_basis(x, y);
                for w in self.module().basis() {
                    let vw = Vector::basis(w);
                    let r_xy = self.right.apply(&xy, &vw);
                    let l_xy = self.left.apply(&xy, &vw);
                    let vvw = r_xy.minus(&r(y, &r(x, &vw))).minus(&l(x, &r(y, &vw)));
                    let wvv = r_xy.minus(&l(x, &r(y, &vw))).plus(&r(y, &l(x, &vw)));
                    let vwv = l_xy.minus(&l(x, &l(y, &vw))).plus(&l(y, &l(x, &vw)));
                    report.record("VVW", &[x, y, w], vvw);
                    report.record("WVV", &[x, y, w], wvv);
                    report.record("VWV", &[x, y, w], vwv);
                }
            }
        }
        Ok(report)
    }
}
