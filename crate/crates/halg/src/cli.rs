//! The `halg` command line: parse structure files, run checks and
//! constructions, print a JSON report.
//!
//! Exit codes are 0 when every identity holds, 1 when one fails or a
//! construction rejects its input, and 2 for unreadable or schema-invalid input.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::convolution::{composition_simplex, extract_homotopy, homotopy_convolution, lift_homotopy, vcompose_via_simplex};
use crate::convolution::{ConvElement, Convolution, SimplexAlgebra, SimplexTensor};
use crate::error::HalgError;
use crate::graded::limits::Limits;
use crate::infinity::{check_inf_morphism, check_structure, Kind};
use crate::io::{ReportFile, StructureFile};
use crate::loday::{cartan_check, coboundary, squares_ideal_quotient, LeibnizAlgebra, LodayCochain, Representation};
use crate::report::IdentityReport;
use crate::sample::{random_cochain, Sampler};
use crate::two_term::{check_homotopy, check_two_term_algebra, check_two_term_morphism, hcompose, hcompose_parts, vcompose, TwoTermHomotopy};

#[derive(Parser, Debug)]
#[command(name = "halg", version, about = "Exact checks and constructions for homotopy Lie and Leibniz algebras")]
pub struct Cli {
    /// Also write the JSON report here.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the defining identities of the structures in the given files.
    Check {
        kind: CheckKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Highest arity at which identities are evaluated.
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Constructions on 2-term homotopies.
    #[command(subcommand)]
    Homotopy(HomotopyCommand),
    /// Maurer-Cartan elements of the convolution algebra.
    #[command(subcommand)]
    Mc(McCommand),
    /// Leibniz cohomology.
    #[command(subcommand)]
    Loday(LodayCommand),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Leibniz,
    Lie,
    TwoTerm,
    Morphism,
    Homotopy,
    Bimodule,
}

#[derive(Args, Debug)]
pub struct Pair {
    /// Homotopy `θ: f ⇒ g`.
    pub first: PathBuf,
    /// Homotopy `τ`, composable with `θ`.
    pub second: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Args, Debug)]
pub struct Single {
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Args, Debug)]
pub struct AtVertex {
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
    /// Vertex at which the Kan iteration is anchored.
    #[arg(long, default_value_t = 0)]
    pub vertex: usize,
}

#[derive(Subcommand, Debug)]
pub enum HomotopyCommand {
    /// `τ ∘ θ` with parameter `τ_1 + θ_1`.
    ComposeV(Pair),
    /// Horizontal composite of `θ` (first) with `τ` (second, over the next algebra).
    ComposeH(Pair),
    /// Maurer-Cartan element over `Δ¹` representing the homotopy.
    Lift(AtVertex),
    /// Homotopy read off a Maurer-Cartan element over `Δ¹`.
    Extract(AtVertex),
    /// `τ ∘ θ` read off the Maurer-Cartan element over `Δ²`.
    ComposeSimplex(Pair),
}

#[derive(Subcommand, Debug)]
pub enum McCommand {
    /// Maurer-Cartan element of an ∞-morphism.
    Lift(Single),
    /// ∞-morphism of a Maurer-Cartan element.
    Extract(Single),
    /// Rerun the Kan iteration on a form-valued element and compare with the closed form.
    Iterate(AtVertex),
}

#[derive(Subcommand, Debug)]
pub enum LodayCommand {
    /// Coboundary of the cochain under role `cochain`.
    Coboundary(Single),
    /// The five Cartan identities on sampled cochains.
    Cartan {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Quotient by the ideal of squares.
    Quotient(Single),
}

enum Failure {
    Input(HalgError),
    Rejected(HalgError),
}

impl From<HalgError> for Failure {
    fn from(e: HalgError) -> Self {
        match e {
            HalgError::Parse(_) | HalgError::DegreeWindow { .. } => Failure::Input(e),
            other => Failure::Rejected(other),
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn load(path: &Path) -> Run<StructureFile> {
    StructureFile::load(path).map_err(Failure::Input)
}

fn save(file: &StructureFile, path: &Path, out: &mut ReportFile) -> Run<()> {
    file.save(path).map_err(Failure::Input)?;
    out.outputs.insert("file".into(), path.display().to_string());
    Ok(())
}

/// Parses `args`, runs the command, prints the report and returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Err(e) = Limits::from_env() {
        eprintln!("halg: {e}");
        return 2;
    }
    let started = Instant::now();
    let mut report = ReportFile::new(&command_name(&cli.command));
    let code = match run(&cli.command, &mut report) {
        Ok(()) => i32::from(!report.passed),
        Err(Failure::Input(e)) => {
            eprintln!("halg: {e}");
            return 2;
        }
        Err(Failure::Rejected(e)) => {
            report.fail("input accepted", e.to_string());
            1
        }
    };
    report.timing_ms = started.elapsed().as_millis();
    let text = report.to_json();
    print!("{text}");
    if let Some(path) = &cli.report {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("halg: {}: {e}", path.display());
            return 2;
        }
    }
    code
}

pub fn main() -> i32 {
    main_with(std::env::args_os())
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Check { kind, .. } => format!("check {}", kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()),
        Command::Homotopy(h) => format!(
            "homotopy {}",
            match h {
                HomotopyCommand::ComposeV(_) => "compose-v",
                HomotopyCommand::ComposeH(_) => "compose-h",
                HomotopyCommand::Lift(_) => "lift",
                HomotopyCommand::Extract(_) => "extract",
                HomotopyCommand::ComposeSimplex(_) => "compose-simplex",
            }
        ),
        Command::Mc(m) => format!(
            "mc {}",
            match m {
                McCommand::Lift(_) => "lift",
                McCommand::Extract(_) => "extract",
                McCommand::Iterate(_) => "iterate",
            }
        ),
        Command::Loday(l) => format!(
            "loday {}",
            match l {
                LodayCommand::Coboundary(_) => "coboundary",
                LodayCommand::Cartan { .. } => "cartan",
                LodayCommand::Quotient(_) => "quotient",
            }
        ),
    }
}

fn run(c: &Command, out: &mut ReportFile) -> Run<()> {
    match c {
        Command::Check { kind, files, n_max } => {
            let many = files.len() > 1;
            for path in files {
                let file = load(path)?;
                let label = if many { format!("{}: ", path.display()) } else { String::new() };
                check_file(*kind, &file, *n_max, &label, out)?;
            }
            Ok(())
        }
        Command::Homotopy(h) => run_homotopy(h, out),
        Command::Mc(m) => run_mc(m, out),
        Command::Loday(l) => run_loday(l, out),
    }
}

fn prefixed(label: &str, r: IdentityReport) -> IdentityReport {
    let mut p = IdentityReport::new(&r.title);
    p.absorb(label, r);
    p
}

fn check_file(kind: CheckKind, file: &StructureFile, n_max: Option<usize>, label: &str, out: &mut ReportFile) -> Run<()> {
    match kind {
        CheckKind::Leibniz | CheckKind::Lie => {
            let k = if kind == CheckKind::Lie { Kind::Lie } else { Kind::Leibniz };
            let s = file.structure(k, "")?;
            let r = check_structure(&s, n_max.unwrap_or_else(|| s.default_n_max()))?;
            out.add(&prefixed(label, r), s.space().name(), s.space().name());
        }
        CheckKind::TwoTerm => {
            let a = file.two_term("")?;
            out.add(&prefixed(label, check_two_term_algebra(&a)), a.space().name(), a.space().name());
        }
        CheckKind::Morphism => {
            let m = file.morphism(file.declared_kind()?, "phi")?;
            let (v, w) = (m.source().space().name().to_string(), m.target().space().name().to_string());
            for (side, s) in [("source", m.source()), ("target", m.target())] {
                let r = check_structure(s, n_max.unwrap_or_else(|| s.default_n_max()))?;
                out.add(&prefixed(&format!("{label}{side}: "), r), s.space().name(), s.space().name());
            }
            let r = check_inf_morphism(&m, n_max.unwrap_or_else(|| m.default_n_max()))?;
            out.add(&prefixed(label, r), &v, &w);
        }
        CheckKind::Homotopy => {
            let h = file.homotopy()?;
            add_homotopy_checks(&h, label, out)?;
        }
        CheckKind::Bimodule => {
            let a = file.leibniz_algebra()?;
            let b = file.bimodule(&a)?;
            let name = a.space().name().to_string();
            out.add(&prefixed(&format!("{label}algebra: "), a.check()), &name, &name);
            out.add(&prefixed(label, b.check(&a)?), &name, b.module().name());
        }
    }
    Ok(())
}

fn add_homotopy_checks(h: &TwoTermHomotopy, label: &str, out: &mut ReportFile) -> Run<()> {
    let (v, w) = (h.source().source().space().name().to_string(), h.source().target().space().name().to_string());
    for (side, m) in [("source", h.source()), ("target", h.target())] {
        out.add(&prefixed(&format!("{label}{side} morphism: "), check_two_term_morphism(m)), &v, &w);
    }
    out.add(&prefixed(label, check_homotopy(h)?), &v, &w);
    Ok(())
}

fn add_tensor_residual(family: &str, residual: &SimplexTensor, input: &str, output: &str, out: &mut ReportFile) {
    let mut r = IdentityReport::new(family);
    r.touch(family);
    for a in residual.terms().values() {
        for m in a.components().values() {
            r.record_map(family, m);
        }
    }
    out.add(&r, input, output);
}

fn add_conv_residual(family: &str, residual: &ConvElement, conv: &Convolution, out: &mut ReportFile) {
    let mut r = IdentityReport::new(family);
    r.touch(family);
    for m in residual.components().values() {
        r.record_map(family, m);
    }
    out.add(&r, conv.suspended().name(), conv.target().space().name());
}

fn homotopy_of(path: &Path) -> Run<TwoTermHomotopy> {
    Ok(load(path)?.homotopy()?)
}

fn homotopy_file(h: &TwoTermHomotopy) -> Run<StructureFile> {
    let mut f = StructureFile::new();
    f.put_homotopy(h)?;
    Ok(f)
}

fn convolution_of(file: &StructureFile) -> Run<Convolution> {
    let source = file.structure(Kind::Leibniz, "source.")?;
    let target = file.structure(Kind::Leibniz, "target.")?;
    Ok(Convolution::new(&source, &target)?)
}

fn conv_header(conv: &Convolution) -> Run<StructureFile> {
    let mut f = StructureFile::new();
    f.put_structure("source.", conv.source())?;
    f.put_structure("target.", conv.target())?;
    Ok(f)
}

fn run_homotopy(c: &HomotopyCommand, out: &mut ReportFile) -> Run<()> {
    match c {
        HomotopyCommand::ComposeV(p) => {
            let (theta, tau) = (homotopy_of(&p.first)?, homotopy_of(&p.second)?);
            let h = vcompose(&tau, &theta)?;
            add_homotopy_checks(&h, "", out)?;
            save(&homotopy_file(&h)?, &p.output, out)
        }
        HomotopyCommand::ComposeSimplex(p) => {
            let (theta, tau) = (homotopy_of(&p.first)?, homotopy_of(&p.second)?);
            let conv = homotopy_convolution(&theta)?;
            let alpha = composition_simplex(&conv, &theta, &tau)?;
            let residual = SimplexAlgebra::new(&conv, alpha.simplex()).mc_residual(&alpha)?;
            add_tensor_residual("Maurer-Cartan over the triangle", &residual, conv.suspended().name(), conv.target().space().name(), out);
            let h = vcompose_via_simplex(&theta, &tau)?;
            add_homotopy_checks(&h, "", out)?;
            save(&homotopy_file(&h)?, &p.output, out)
        }
        HomotopyCommand::ComposeH(p) => {
            let (theta, tau) = (homotopy_of(&p.first)?, homotopy_of(&p.second)?);
            let (first, second) = hcompose_parts(&tau, &theta)?;
            let family = "horizontal expressions agree";
            let mut r = IdentityReport::new(family);
            r.touch(family);
            r.record_map(family, &first.minus(&second)?);
            out.add(&r, theta.source().source().space().name(), tau.source().target().space().name());
            if !r.passed() {
                return Ok(());
            }
            let h = hcompose(&tau, &theta)?;
            add_homotopy_checks(&h, "", out)?;
            save(&homotopy_file(&h)?, &p.output, out)
        }
        HomotopyCommand::Lift(a) => {
            let h = homotopy_of(&a.input)?;
            let conv = homotopy_convolution(&h)?;
            let alpha = lift_homotopy(&conv, &h, a.vertex)?;
            let residual = SimplexAlgebra::new(&conv, alpha.simplex()).mc_residual(&alpha)?;
            add_tensor_residual("Maurer-Cartan over the interval", &residual, conv.suspended().name(), conv.target().space().name(), out);
            let mut f = conv_header(&conv)?;
            f.put_simplex_tensor("alpha", &alpha)?;
            save(&f, &a.output, out)
        }
        HomotopyCommand::Extract(a) => {
            let file = load(&a.input)?;
            let conv = convolution_of(&file)?;
            let alpha = file.simplex_tensor(&conv, "alpha")?;
            let h = extract_homotopy(&conv, &alpha, a.vertex)?;
            add_homotopy_checks(&h, "", out)?;
            save(&homotopy_file(&h)?, &a.output, out)
        }
    }
}

fn run_mc(c: &McCommand, out: &mut ReportFile) -> Run<()> {
    match c {
        McCommand::Lift(s) => {
            let file = load(&s.input)?;
            let m = file.morphism(Kind::Leibniz, "phi")?;
            let conv = Convolution::new(m.source(), m.target())?;
            let mc = conv.morphism_to_mc(&m)?;
            add_conv_residual("Maurer-Cartan", &conv.mc_residual(&mc)?, &conv, out);
            let mut f = conv_header(&conv)?;
            f.put_conv_element("mc", &mc)?;
            save(&f, &s.output, out)
        }
        McCommand::Extract(s) => {
            let file = load(&s.input)?;
            let conv = convolution_of(&file)?;
            let mc = file.conv_element(&conv, "mc", -1)?;
            add_conv_residual("Maurer-Cartan", &conv.mc_residual(&mc)?, &conv, out);
            let m = conv.mc_to_morphism(&mc)?;
            let r = check_inf_morphism(&m, m.default_n_max())?;
            out.add(&r, m.source().space().name(), m.target().space().name());
            let mut f = StructureFile::new();
            f.put_morphism("phi", &m)?;
            save(&f, &s.output, out)
        }
        McCommand::Iterate(a) => {
            let file = load(&a.input)?;
            let conv = convolution_of(&file)?;
            let alpha = file.simplex_tensor(&conv, "alpha")?;
            let alg = SimplexAlgebra::new(&conv, alpha.simplex());
            let (v, w) = (conv.suspended().name().to_string(), conv.target().space().name().to_string());
            add_tensor_residual("Maurer-Cartan", &alg.mc_residual(&alpha)?, &v, &w, out);
            let (mu, nu) = alg.b_forward(&alpha, a.vertex)?;
            let (iterate, steps) = alg.b_inverse(&mu, &nu, a.vertex)?;
            out.outputs.insert("steps".into(), steps.to_string());
            add_tensor_residual("iteration reproduces the input", &iterate.minus(&alpha)?, &v, &w, out);
            let closed = alg.closed_form(&mu, &alpha.contract(a.vertex)?)?;
            add_tensor_residual("closed form", &closed.minus(&iterate)?, &v, &w, out);
            let mut f = conv_header(&conv)?;
            f.put_simplex_tensor("alpha", &iterate)?;
            save(&f, &a.output, out)
        }
    }
}

fn add_cochain_residual(family: &str, c: &LodayCochain, a: &LeibnizAlgebra, out: &mut ReportFile) {
    let mut r = IdentityReport::new(family);
    r.touch(family);
    for (inputs, v) in c.entries() {
        r.record(family, inputs, v.clone());
    }
    out.add(&r, a.space().name(), c.target().name());
}

fn run_loday(c: &LodayCommand, out: &mut ReportFile) -> Run<()> {
    match c {
        LodayCommand::Coboundary(s) => {
            let file = load(&s.input)?;
            let a = file.leibniz_algebra()?;
            let c = file.cochain("cochain")?;
            let r = if file.has_role("rho") || file.has_role("module") {
                file.representation(&a)?
            } else {
                Representation::trivial(&a, c.target())?
            };
            let name = a.space().name().to_string();
            out.add(&prefixed("algebra: ", a.check()), &name, &name);
            out.add(&prefixed("representation: ", r.check(&a)?), &name, r.module().name());
            let dc = coboundary(&a, &r, &c)?;
            add_cochain_residual("∂∂c = 0", &coboundary(&a, &r, &dc)?, &a, out);
            let mut f = StructureFile::new();
            f.put_leibniz_algebra(&a)?;
            f.put_action("rho", r.action())?;
            f.put_cochain("cochain", &dc)?;
            save(&f, &s.output, out)
        }
        LodayCommand::Cartan { input, max_arity, seed } => {
            let file = load(input)?;
            let a = file.leibniz_algebra()?;
            let r = if file.has_role("rho") || file.has_role("module") {
                file.representation(&a)?
            } else {
                Representation::adjoint(&a)
            };
            let name = a.space().name().to_string();
            out.add(&prefixed("algebra: ", a.check()), &name, &name);
            out.add(&prefixed("representation: ", r.check(&a)?), &name, r.module().name());
            let mut samples = Vec::new();
            for role in file.roles.keys().filter(|k| k.starts_with("cochain")) {
                samples.push(file.cochain(role)?);
            }
            let mut smp = Sampler::new(*seed);
            for p in 0..=*max_arity {
                samples.push(random_cochain(&mut smp, &a, r.module(), p)?);
            }
            out.add(&cartan_check(&a, &r, &samples)?, &name, r.module().name());
            Ok(())
        }
        LodayCommand::Quotient(s) => {
            let file = load(&s.input)?;
            let a = file.leibniz_algebra()?;
            let name = a.space().name().to_string();
            out.add(&prefixed("algebra: ", a.check()), &name, &name);
            let q = squares_ideal_quotient(&a)?;
            out.outputs.insert("ideal-dimension".into(), q.ideal.len().to_string());
            out.add(&q.report, q.quotient.space().name(), q.quotient.space().name());
            let mut f = StructureFile::new();
            f.put_leibniz_algebra(&q.quotient)?;
            save(&f, &s.output, out)
        }
    }
}
