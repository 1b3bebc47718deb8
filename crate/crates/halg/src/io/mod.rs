//! JSON exchange format for structures, morphisms, homotopies, Maurer-Cartan
//! elements and cochains.
//!
//! A file lists named graded spaces, named sparse maps and a role table that
//! says which map plays which part (`l2`, `source.l1`, `phi1`, `theta1`, `rho`,
//! ...). Rationals are strings `"p/q"` and basis vectors are addressed as
//! `[space, degree, index]`. Writing is canonical: maps are named after their
//! role, entries are sorted, and reading then writing reproduces the bytes.

mod report;

pub use report::{ReportFile, ResidualRecord, FamilyRecord, RESIDUAL_CAP};

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::convolution::{ConvElement, Convolution, FormMonomial, PolyForm, Simplex, SimplexTensor};
use crate::error::{HalgError, Result};
use crate::graded::scalar::{self, Scalar};
use crate::graded::{BasisIndex, GradedSpace, MultiMap, Vector};
use crate::infinity::{InftyMorphism, InftyStructure, Kind};
use crate::loday::{Action, Bimodule, LeibnizAlgebra, LodayCochain, Representation};
use crate::two_term::{TwoTermHomotopy, TwoTermLeibniz, TwoTermMorphism};

pub const FORMAT: &str = "halg/1";

/// `[space, degree, index]`.
pub type Address = (String, i32, usize);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    /// `source^{⊗arity} → target`.
    #[default]
    Multilinear,
    /// `source ⊗ target → target`, an algebra acting on a module.
    Action,
    /// A Loday cochain `source^{⊗arity} → target`; arity 0 allowed.
    Cochain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub inputs: Vec<Address>,
    pub output: Address,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapRecord {
    #[serde(default, skip_serializing_if = "is_multilinear")]
    pub shape: Shape,
    pub source: String,
    pub target: String,
    pub arity: usize,
    #[serde(default)]
    pub degree: i32,
    #[serde(default)]
    pub entries: Vec<Entry>,
}

fn is_multilinear(s: &Shape) -> bool {
    *s == Shape::Multilinear
}

/// One summand `t^exponents dt_differentials ⊗ a` of a form-valued element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormTerm {
    pub exponents: Vec<u32>,
    #[serde(default)]
    pub differentials: Vec<usize>,
    /// Map names of the coefficient's components, one per arity.
    pub components: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormRecord {
    pub simplex: usize,
    pub degree: i32,
    #[serde(default)]
    pub terms: Vec<FormTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    #[serde(default)]
    pub format: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default)]
    pub conventions: BTreeMap<String, String>,
    #[serde(default)]
    pub spaces: BTreeMap<String, BTreeMap<i32, usize>>,
    #[serde(default)]
    pub maps: BTreeMap<String, MapRecord>,
    #[serde(default)]
    pub roles: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub forms: BTreeMap<String, FormRecord>,
}

/// Sign and grading conventions recorded in every written file and report.
pub fn conventions() -> BTreeMap<String, String> {
    [
        ("bracket-degree", "l_k has degree k-2"),
        ("brackets", "lada-stasheff"),
        ("leibniz", "left"),
        ("morphism-degree", "phi_k has degree k-1"),
        ("scalars", "exact rationals p/q"),
        ("suspension", "s raises degrees by 1"),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v.to_string()))
    .collect()
}

fn schema(msg: impl Into<String>) -> HalgError {
    HalgError::Parse(msg.into())
}

fn in_context<T>(what: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        HalgError::Parse(m) => HalgError::Parse(m),
        other => schema(format!("{what}: {other}")),
    })
}

impl StructureFile {
    pub fn new() -> Self {
        StructureFile { format: FORMAT.to_string(), conventions: conventions(), ..Default::default() }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: StructureFile = serde_json::from_str(text).map_err(|e| schema(format!("invalid JSON: {e}")))?;
        file.validate()?;
        Ok(file)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| schema(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| schema(format!("{}: {e}", path.display())))
    }

    pub fn to_canonical_string(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable");
        out.push('\n');
        out
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_canonical_string()).map_err(|e| HalgError::Invalid(format!("{}: {e}", path.display())))
    }

    /// Reads and rewrites every map, normalising coefficients and entry order.
    pub fn canonical(&self) -> Result<Self> {
        let mut out = self.clone();
        if out.format.is_empty() {
            out.format = FORMAT.to_string();
        }
        for c in conventions() {
            out.conventions.entry(c.0).or_insert(c.1);
        }
        for (name, rec) in &self.maps {
            let mut table: BTreeMap<(Vec<Address>, Address), Scalar> = BTreeMap::new();
            for e in &rec.entries {
                *table.entry((e.inputs.clone(), e.output.clone())).or_insert_with(scalar::zero) += scalar::parse(&e.coeff)?;
            }
            let entries = table
                .into_iter()
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .map(|((inputs, output), c)| Entry { inputs, output, coeff: scalar::format(&c) })
                .collect();
            out.maps.insert(name.clone(), MapRecord { entries, ..rec.clone() });
        }
        Ok(out)
    }

    fn validate(&self) -> Result<()> {
        if !self.format.is_empty() && self.format != FORMAT {
            return Err(schema(format!("unknown format {:?}", self.format)));
        }
        for name in self.spaces.keys() {
            self.space(name)?;
        }
        for (name, rec) in &self.maps {
            self.check_record(name, rec)?;
        }
        for (role, target) in &self.roles {
            if !self.maps.contains_key(target) && !self.spaces.contains_key(target) {
                return Err(schema(format!("role {role} refers to missing map or space {target}")));
            }
        }
        for (name, f) in &self.forms {
            Simplex::from_dim(f.simplex).map_err(|e| schema(format!("form {name}: {e}")))?;
            for t in &f.terms {
                if t.exponents.len() != f.simplex {
                    return Err(schema(format!("form {name}: expected {} exponents", f.simplex)));
                }
                if t.differentials.iter().any(|&j| j >= f.simplex) || t.differentials.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(schema(format!("form {name}: differentials must be increasing coordinate indices")));
                }
                if let Some(c) = t.components.iter().find(|c| !self.maps.contains_key(*c)) {
                    return Err(schema(format!("form {name} refers to missing map {c}")));
                }
            }
        }
        Ok(())
    }

    fn check_record(&self, name: &str, rec: &MapRecord) -> Result<()> {
        let ctx = |m: String| schema(format!("map {name}: {m}"));
        let source = self.space(&rec.source).map_err(|e| ctx(e.to_string()))?;
        let target = self.space(&rec.target).map_err(|e| ctx(e.to_string()))?;
        match rec.shape {
            Shape::Multilinear if rec.arity == 0 => return Err(ctx("arity must be positive".into())),
            Shape::Action if rec.arity != 2 || rec.degree != 0 => return Err(ctx("actions are binary of degree 0".into())),
            Shape::Cochain if rec.degree != 0 => return Err(ctx("cochains have degree 0".into())),
            _ => {}
        }
        for e in &rec.entries {
            if e.inputs.len() != rec.arity {
                return Err(ctx(format!("entry with {} inputs in an arity-{} map", e.inputs.len(), rec.arity)));
            }
            let mut degree = rec.degree;
            for (slot, a) in e.inputs.iter().enumerate() {
                let (expect, space) = match rec.shape {
                    Shape::Action if slot == 1 => (&rec.target, &target),
                    _ => (&rec.source, &source),
                };
                degree += self.address(a, expect, space).map_err(|m| ctx(m.to_string()))?.degree;
            }
            let out = self.address(&e.output, &rec.target, &target).map_err(|m| ctx(m.to_string()))?;
            if out.degree != degree {
                return Err(ctx(format!("entry {:?} → {:?} is not homogeneous of degree {}", e.inputs, e.output, rec.degree)));
            }
            scalar::parse(&e.coeff).map_err(|m| ctx(m.to_string()))?;
        }
        Ok(())
    }

    fn address(&self, a: &Address, expect: &str, space: &GradedSpace) -> Result<BasisIndex> {
        if a.0 != expect {
            return Err(schema(format!("basis element {a:?} should lie in {expect}")));
        }
        let b = BasisIndex::new(a.1, a.2);
        if !space.contains(&b) {
            return Err(schema(format!("{expect} has no basis element in degree {} at index {}", a.1, a.2)));
        }
        Ok(b)
    }

    // Reading.

    pub fn space(&self, name: &str) -> Result<GradedSpace> {
        let dims = self.spaces.get(name).ok_or_else(|| schema(format!("missing space {name}")))?;
        in_context(&format!("space {name}"), GradedSpace::new(name, dims.iter().map(|(&d, &n)| (d, n))))
    }

    pub fn has_role(&self, role: &str) -> bool {
        self.roles.contains_key(role)
    }

    fn role_target(&self, role: &str) -> Result<&str> {
        self.roles.get(role).map(String::as_str).ok_or_else(|| schema(format!("missing role {role}")))
    }

    fn record(&self, name: &str, shape: Shape) -> Result<&MapRecord> {
        let rec = self.maps.get(name).ok_or_else(|| schema(format!("missing map {name}")))?;
        if rec.shape != shape {
            return Err(schema(format!("map {name} has shape {:?}, expected {shape:?}", rec.shape)));
        }
        Ok(rec)
    }

    fn entries(rec: &MapRecord) -> Result<Vec<(Vec<BasisIndex>, BasisIndex, Scalar)>> {
        rec.entries
            .iter()
            .map(|e| {
                let inputs = e.inputs.iter().map(|a| BasisIndex::new(a.1, a.2)).collect();
                Ok((inputs, BasisIndex::new(e.output.1, e.output.2), scalar::parse(&e.coeff)?))
            })
            .collect()
    }

    pub fn multimap(&self, name: &str) -> Result<MultiMap> {
        let rec = self.record(name, Shape::Multilinear)?;
        let mut m = in_context(name, MultiMap::new(&self.space(&rec.source)?, &self.space(&rec.target)?, rec.arity, rec.degree))?;
        for (inputs, output, c) in Self::entries(rec)? {
            in_context(name, m.add_entry(&inputs, output, c))?;
        }
        Ok(m)
    }

    pub fn role_map(&self, role: &str) -> Result<MultiMap> {
        self.multimap(self.role_target(role)?)
    }

    fn optional_role_map(&self, role: &str) -> Result<Option<MultiMap>> {
        if self.has_role(role) {
            self.role_map(role).map(Some)
        } else {
            Ok(None)
        }
    }

    /// `prefix` + `l1`, `l2`, ... ; `bracket` is accepted for `l2`.
    pub fn structure(&self, kind: Kind, prefix: &str) -> Result<InftyStructure> {
        let mut brackets = Vec::new();
        let mut keys: Vec<&String> = self.roles.keys().filter(|r| r.starts_with(prefix)).collect();
        keys.sort();
        for role in keys {
            let rest = &role[prefix.len()..];
            let is_bracket = rest == "bracket" || rest.strip_prefix('l').is_some_and(|n| !n.is_empty() && n.chars().all(|c| c.is_ascii_digit()));
            if is_bracket {
                brackets.push(self.role_map(role)?);
            }
        }
        let space = self.structure_space(prefix, &brackets)?;
        in_context(&format!("{prefix}structure"), InftyStructure::new(kind, &space, brackets))
    }

    fn structure_space(&self, prefix: &str, brackets: &[MultiMap]) -> Result<GradedSpace> {
        let role = format!("{prefix}space");
        if self.has_role(&role) {
            return self.space(self.role_target(&role)?);
        }
        if let Some(b) = brackets.first() {
            return Ok(b.source().clone());
        }
        match self.spaces.keys().collect::<Vec<_>>().as_slice() {
            [only] => self.space(only),
            _ => Err(schema(format!("cannot tell which space carries the {prefix}structure; add a role {role}"))),
        }
    }

    /// The `kind` field, Leibniz when absent.
    pub fn declared_kind(&self) -> Result<Kind> {
        match self.kind.as_deref() {
            None | Some("leibniz") => Ok(Kind::Leibniz),
            Some("lie") => Ok(Kind::Lie),
            Some(other) => Err(schema(format!("unknown kind {other:?}"))),
        }
    }

    pub fn two_term(&self, prefix: &str) -> Result<TwoTermLeibniz> {
        let s = self.structure(Kind::Leibniz, prefix)?;
        in_context(&format!("{prefix}structure"), TwoTermLeibniz::from_structure(&s))
    }

    /// Components `name1`, `name2`, ... between `source.` and `target.` structures.
    pub fn morphism(&self, kind: Kind, name: &str) -> Result<InftyMorphism> {
        let source = self.structure(kind, "source.")?;
        let target = self.structure(kind, "target.")?;
        let mut arities: Vec<usize> = self.roles.keys().filter_map(|r| r.strip_prefix(name)?.parse().ok()).collect();
        arities.sort_unstable();
        let parts = arities.iter().map(|k| self.role_map(&format!("{name}{k}"))).collect::<Result<Vec<_>>>()?;
        in_context(&format!("morphism {name}"), InftyMorphism::new(&source, &target, parts))
    }

    pub fn two_term_morphism(&self, name: &str) -> Result<TwoTermMorphism> {
        let m = self.morphism(Kind::Leibniz, name)?;
        in_context(&format!("morphism {name}"), TwoTermMorphism::from_infty(&m))
    }

    /// `theta1: phi ⇒ psi`. Endpoint errors are reported as such, not as schema errors.
    pub fn homotopy(&self) -> Result<TwoTermHomotopy> {
        let f = self.two_term_morphism("phi")?;
        let g = self.two_term_morphism("psi")?;
        let theta = self.role_map("theta1")?;
        TwoTermHomotopy::new(&f, &g, theta)
    }

    /// `bracket` (or `l2`) on a degree-0 space, without checking the Leibniz identity.
    pub fn leibniz_algebra(&self) -> Result<LeibnizAlgebra> {
        let role = if self.has_role("bracket") { "bracket" } else { "l2" };
        let m = self.role_map(role)?;
        in_context("bracket", LeibnizAlgebra::unchecked(&m.source().clone(), m))
    }

    pub fn action(&self, role: &str) -> Result<Action> {
        let name = self.role_target(role)?;
        let rec = self.record(name, Shape::Action)?;
        let mut a = in_context(name, Action::zero(&self.space(&rec.source)?, &self.space(&rec.target)?))?;
        let mut table: BTreeMap<(BasisIndex, BasisIndex), Vector> = BTreeMap::new();
        for (inputs, output, c) in Self::entries(rec)? {
            table.entry((inputs[0], inputs[1])).or_default().add_term(output, c);
        }
        for ((x, w), v) in table {
            in_context(name, a.set(x, w, v))?;
        }
        Ok(a)
    }

    /// `rho`, or the zero action on the space named by role `module`.
    pub fn representation(&self, a: &LeibnizAlgebra) -> Result<Representation> {
        if self.has_role("rho") {
            return Ok(Representation::unchecked(self.action("rho")?));
        }
        let module = self.space(self.role_target("module")?)?;
        in_context("module", Representation::trivial(a, &module))
    }

    /// `left` and `right`, or `(rho, −rho)`.
    pub fn bimodule(&self, a: &LeibnizAlgebra) -> Result<Bimodule> {
        if self.has_role("left") || self.has_role("right") {
            return in_context("bimodule", Bimodule::new(self.action("left")?, self.action("right")?));
        }
        Ok(Bimodule::from_representation(&self.representation(a)?))
    }

    pub fn cochain(&self, role: &str) -> Result<LodayCochain> {
        let name = self.role_target(role)?;
        let rec = self.record(name, Shape::Cochain)?;
        let mut c = in_context(name, LodayCochain::zero(&self.space(&rec.source)?, &self.space(&rec.target)?, rec.arity))?;
        let mut table: BTreeMap<Vec<BasisIndex>, Vector> = BTreeMap::new();
        for (inputs, output, k) in Self::entries(rec)? {
            table.entry(inputs).or_default().add_term(output, k);
        }
        for (inputs, v) in table {
            in_context(name, c.set(&inputs, v))?;
        }
        Ok(c)
    }

    /// `prefix` + `1`, `2`, ...: components of a convolution element of degree `degree`.
    pub fn conv_element(&self, conv: &Convolution, prefix: &str, degree: i32) -> Result<ConvElement> {
        let mut parts = Vec::new();
        for p in 1..=conv.arity_bound(degree) {
            if let Some(m) = self.optional_role_map(&format!("{prefix}{p}"))? {
                parts.push(m.with_spaces(conv.suspended(), conv.target().space())?);
            }
        }
        in_context(prefix, conv.element(degree, parts))
    }

    pub fn simplex_tensor(&self, conv: &Convolution, name: &str) -> Result<SimplexTensor> {
        let rec = self.forms.get(name).ok_or_else(|| schema(format!("missing form-valued element {name}")))?;
        let simplex = Simplex::from_dim(rec.simplex)?;
        let mut out = SimplexTensor::zero(simplex, rec.degree);
        for t in &rec.terms {
            let mask = t.differentials.iter().fold(0u32, |m, &j| m | (1 << j));
            let mono = FormMonomial { exps: t.exponents.clone(), mask };
            let coeff_degree = rec.degree + mono.form_degree() as i32;
            let mut parts = Vec::new();
            for c in &t.components {
                parts.push(self.multimap(c)?.with_spaces(conv.suspended(), conv.target().space())?);
            }
            let a = in_context(name, conv.element(coeff_degree, parts))?;
            let w = PolyForm::monomial(mono, scalar::one());
            out = out.plus(&in_context(name, SimplexTensor::tensor(simplex, &a, &w))?)?;
        }
        Ok(out)
    }

    // Writing.

    pub fn put_space(&mut self, space: &GradedSpace) -> Result<()> {
        let dims: BTreeMap<i32, usize> = space.dims().clone();
        match self.spaces.get(space.name()) {
            Some(existing) if *existing != dims => Err(HalgError::SpaceMismatch(format!("two different spaces are named {}", space.name()))),
            _ => {
                self.spaces.insert(space.name().to_string(), dims);
                Ok(())
            }
        }
    }

    fn put_record(&mut self, role: &str, rec: MapRecord) {
        self.maps.insert(role.to_string(), rec);
        self.roles.insert(role.to_string(), role.to_string());
    }

    fn sorted(mut entries: Vec<Entry>) -> Vec<Entry> {
        entries.sort_by(|a, b| (&a.inputs, &a.output).cmp(&(&b.inputs, &b.output)));
        entries
    }

    fn vector_entries<'a>(inputs: Vec<Address>, v: &'a Vector, target: &'a str) -> impl Iterator<Item = Entry> + 'a {
        v.iter().map(move |(b, c)| Entry {
            inputs: inputs.clone(),
            output: (target.to_string(), b.degree, b.index),
            coeff: scalar::format(c),
        })
    }

    fn addr(space: &GradedSpace, b: &BasisIndex) -> Address {
        (space.name().to_string(), b.degree, b.index)
    }

    /// Stores `m` under `role`, naming the map after the role.
    pub fn put_map(&mut self, role: &str, m: &MultiMap) -> Result<()> {
        self.put_space(m.source())?;
        self.put_space(m.target())?;
        let mut entries = Vec::new();
        for (inputs, v) in m.entries() {
            let ins = inputs.iter().map(|b| Self::addr(m.source(), b)).collect();
            entries.extend(Self::vector_entries(ins, v, m.target().name()));
        }
        let rec = MapRecord {
            shape: Shape::Multilinear,
            source: m.source().name().to_string(),
            target: m.target().name().to_string(),
            arity: m.arity(),
            degree: m.degree(),
            entries: Self::sorted(entries),
        };
        self.put_record(role, rec);
        Ok(())
    }

    pub fn put_structure(&mut self, prefix: &str, s: &InftyStructure) -> Result<()> {
        self.put_space(s.space())?;
        self.roles.insert(format!("{prefix}space"), s.space().name().to_string());
        for (i, m) in s.brackets() {
            self.put_map(&format!("{prefix}l{i}"), m)?;
        }
        if s.kind() == Kind::Lie {
            self.kind = Some(s.kind().name().to_lowercase());
        }
        Ok(())
    }

    pub fn put_morphism(&mut self, name: &str, m: &InftyMorphism) -> Result<()> {
        self.put_structure("source.", m.source())?;
        self.put_structure("target.", m.target())?;
        for (k, c) in m.components() {
            self.put_map(&format!("{name}{k}"), c)?;
        }
        Ok(())
    }

    pub fn put_two_term_morphism(&mut self, name: &str, m: &TwoTermMorphism) -> Result<()> {
        self.put_structure("source.", m.source().structure())?;
        self.put_structure("target.", m.target().structure())?;
        self.put_map(&format!("{name}1"), m.f1())?;
        self.put_map(&format!("{name}2"), m.f2())
    }

    pub fn put_homotopy(&mut self, h: &TwoTermHomotopy) -> Result<()> {
        self.put_two_term_morphism("phi", h.source())?;
        self.put_two_term_morphism("psi", h.target())?;
        self.put_map("theta1", h.theta())
    }

    pub fn put_action(&mut self, role: &str, a: &Action) -> Result<()> {
        self.put_space(a.acting())?;
        self.put_space(a.module())?;
        let mut entries = Vec::new();
        for ((x, w), v) in a.entries() {
            let ins = vec![Self::addr(a.acting(), x), Self::addr(a.module(), w)];
            entries.extend(Self::vector_entries(ins, v, a.module().name()));
        }
        let rec = MapRecord {
            shape: Shape::Action,
            source: a.acting().name().to_string(),
            target: a.module().name().to_string(),
            arity: 2,
            degree: 0,
            entries: Self::sorted(entries),
        };
        self.put_record(role, rec);
        Ok(())
    }

    pub fn put_leibniz_algebra(&mut self, a: &LeibnizAlgebra) -> Result<()> {
        self.put_map("bracket", a.bracket_map())
    }

    pub fn put_cochain(&mut self, role: &str, c: &LodayCochain) -> Result<()> {
        self.put_space(c.source())?;
        self.put_space(c.target())?;
        let mut entries = Vec::new();
        for (inputs, v) in c.entries() {
            let ins = inputs.iter().map(|b| Self::addr(c.source(), b)).collect();
            entries.extend(Self::vector_entries(ins, v, c.target().name()));
        }
        let rec = MapRecord {
            shape: Shape::Cochain,
            source: c.source().name().to_string(),
            target: c.target().name().to_string(),
            arity: c.arity(),
            degree: 0,
            entries: Self::sorted(entries),
        };
        self.put_record(role, rec);
        Ok(())
    }

    /// Components of `a` under roles `prefix1`, `prefix2`, ...
    pub fn put_conv_element(&mut self, prefix: &str, a: &ConvElement) -> Result<()> {
        for (p, m) in a.components() {
            self.put_map(&format!("{prefix}{p}"), m)?;
        }
        Ok(())
    }

    /// A form-valued element; coefficient maps are stored as `name[term].arity`.
    pub fn put_simplex_tensor(&mut self, name: &str, x: &SimplexTensor) -> Result<()> {
        let mut terms = Vec::new();
        for (k, (mono, a)) in x.terms().iter().enumerate() {
            let mut components = Vec::new();
            for (p, m) in a.components() {
                let map_name = format!("{name}[{k}].{p}");
                self.put_map(&map_name, m)?;
                self.roles.remove(&map_name);
                components.push(map_name);
            }
            let differentials = (0..x.simplex().dim()).filter(|j| mono.mask & (1 << j) != 0).collect();
            terms.push(FormTerm { exponents: mono.exps.clone(), differentials, components });
        }
        self.forms.insert(name.to_string(), FormRecord { simplex: x.simplex().dim(), degree: x.degree(), terms });
        Ok(())
    }
}
