use std::path::{Path, PathBuf};
use std::process::Command;

use halg::graded::{BasisIndex, GradedSpace, MultiMap};
use halg::infinity::{InftyStructure, Kind};
use halg::io::StructureFile;
use halg::sample::{leibniz_from_constants, random_homotopy, random_two_term, random_two_term_morphism, Sampler};
use halg::two_term::{TwoTermHomotopy, TwoTermLeibniz};
use halg::loday::{scalars, LodayCochain};
use halg::graded::scalar::int;
use serde_json::Value;

struct Run {
    code: i32,
    report: Value,
}

fn halg(args: &[&str]) -> Run {
    halg_with_env(args, &[])
}

fn halg_with_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_halg"));
    cmd.args(args).env_remove("HALG_DEGREE_WINDOW");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    Run { code: out.status.code().unwrap(), report }
}

fn write(dir: &Path, name: &str, f: &StructureFile) -> PathBuf {
    let p = dir.join(name);
    f.save(&p).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn family<'a>(r: &'a Value, name: &str) -> &'a Value {
    r["families"].as_array().unwrap().iter().find(|f| f["name"] == name).unwrap_or_else(|| panic!("no family {name} in {r}"))
}

fn square_to_centre() -> StructureFile {
    let a = leibniz_from_constants("L", 2, &[(1, 1, 0, 1)]).unwrap();
    let mut f = StructureFile::new();
    f.put_leibniz_algebra(&a).unwrap();
    f
}

fn homotopy_pair(seed: u64) -> (TwoTermHomotopy, TwoTermHomotopy) {
    let mut smp = Sampler::new(seed);
    let a = random_two_term(&mut smp).unwrap();
    let f = random_two_term_morphism(&mut smp, &a).unwrap();
    let theta = random_homotopy(&mut smp, &f).unwrap();
    let tau = random_homotopy(&mut smp, theta.target()).unwrap();
    (theta, tau)
}

fn homotopy_file(h: &TwoTermHomotopy) -> StructureFile {
    let mut f = StructureFile::new();
    f.put_homotopy(h).unwrap();
    f
}

#[test]
fn check_leibniz_examples() {
    let dir = tempfile::tempdir().unwrap();
    let mut zero = StructureFile::new();
    zero.put_structure("", &InftyStructure::abelian(Kind::Leibniz, &GradedSpace::new("V", [(0, 2), (1, 1)]).unwrap())).unwrap();
    let z = write(dir.path(), "zero.json", &zero);
    let sq = write(dir.path(), "square.json", &square_to_centre());
    assert_eq!(halg(&["check", "leibniz", s(&z)]).code, 0);
    let r = halg(&["check", "leibniz", s(&z), s(&sq), "--n-max", "4"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["passed"], true);
    assert_eq!(halg(&["check", "lie", s(&sq)]).code, 1);
    assert_eq!(halg(&["check", "bimodule", s(&sq)]).code, 2, "no representation given");
}

#[test]
fn failing_two_term_relation_is_listed() {
    let dir = tempfile::tempdir().unwrap();
    let v = GradedSpace::new("V", [(0, 2)]).unwrap();
    let mut l2 = MultiMap::new(&v, &v, 2, 0).unwrap();
    l2.add_entry(&[BasisIndex::new(0, 0), BasisIndex::new(0, 1)], BasisIndex::new(0, 0), int(1)).unwrap();
    let a = TwoTermLeibniz::new(&v, MultiMap::new(&v, &v, 1, -1).unwrap(), l2, MultiMap::new(&v, &v, 3, 1).unwrap()).unwrap();
    let mut f = StructureFile::new();
    f.put_structure("", a.structure()).unwrap();
    let p = write(dir.path(), "bad.json", &f);
    let report_path = dir.path().join("report.json");
    let r = halg(&["check", "two-term", s(&p), "--report", s(&report_path)]);
    assert_eq!(r.code, 1);
    let c = family(&r.report, "(c)");
    assert_eq!(c["passed"], false);
    assert!(c["residual_count"].as_u64().unwrap() > 0);
    assert!(!c["residuals"].as_array().unwrap().is_empty());
    for other in ["(a)", "(b)", "(d)", "(e)"] {
        assert_eq!(family(&r.report, other)["passed"], true);
    }
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(report_path).unwrap()).unwrap();
    assert_eq!(saved, r.report);
    assert!(r.report["conventions"]["brackets"].is_string());
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"spaces\": {\"V\": {\"0\": 1}}, \"maps\": {}, \"roles\": {\"l2\": \"nothing\"}}").unwrap();
    assert_eq!(halg(&["check", "leibniz", s(&bad)]).code, 2);
    assert_eq!(halg(&["check", "leibniz", s(&dir.path().join("missing.json"))]).code, 2);
    assert_eq!(halg(&["check", "unknown-kind", s(&bad)]).code, 2);
    let sq = write(dir.path(), "square.json", &square_to_centre());
    assert_eq!(halg_with_env(&["check", "leibniz", s(&sq)], &[("HALG_DEGREE_WINDOW", "nonsense")]).code, 2);
    let mut graded = StructureFile::new();
    graded.put_structure("", &InftyStructure::abelian(Kind::Leibniz, &GradedSpace::new("V", [(3, 1)]).unwrap())).unwrap();
    let g = write(dir.path(), "graded.json", &graded);
    assert_eq!(halg(&["check", "leibniz", s(&g)]).code, 0);
    assert_eq!(halg_with_env(&["check", "leibniz", s(&g)], &[("HALG_DEGREE_WINDOW", "-1..1")]).code, 2);
}

#[test]
fn checks_of_morphisms_and_homotopies() {
    let dir = tempfile::tempdir().unwrap();
    let (theta, tau) = homotopy_pair(5);
    let mut m = StructureFile::new();
    m.put_two_term_morphism("phi", theta.source()).unwrap();
    let mp = write(dir.path(), "m.json", &m);
    assert_eq!(halg(&["check", "morphism", s(&mp)]).code, 0);
    let hp = write(dir.path(), "h.json", &homotopy_file(&theta));
    assert_eq!(halg(&["check", "homotopy", s(&hp)]).code, 0);
    let tp = write(dir.path(), "t.json", &homotopy_file(&tau));
    let out = dir.path().join("out.json");
    assert_eq!(halg(&["homotopy", "compose-v", s(&tp), s(&hp), "-o", s(&out)]).code, 1, "not composable in this order");
}

#[test]
fn vertical_composition_routes_agree() {
    let dir = tempfile::tempdir().unwrap();
    let (theta, tau) = homotopy_pair(6);
    let hp = write(dir.path(), "theta.json", &homotopy_file(&theta));
    let tp = write(dir.path(), "tau.json", &homotopy_file(&tau));
    let zp = write(dir.path(), "zero.json", &homotopy_file(&TwoTermHomotopy::identity(theta.target())));

    let with_zero = dir.path().join("with-zero.json");
    assert_eq!(halg(&["homotopy", "compose-v", s(&hp), s(&zp), "-o", s(&with_zero)]).code, 0);
    assert_eq!(std::fs::read(&with_zero).unwrap(), std::fs::read(&hp).unwrap());

    let (direct, simplex) = (dir.path().join("v.json"), dir.path().join("s.json"));
    assert_eq!(halg(&["homotopy", "compose-v", s(&hp), s(&tp), "-o", s(&direct)]).code, 0);
    let r = halg(&["homotopy", "compose-simplex", s(&hp), s(&tp), "-o", s(&simplex)]);
    assert_eq!(r.code, 0);
    assert_eq!(family(&r.report, "Maurer-Cartan over the triangle")["passed"], true);
    assert_eq!(std::fs::read(&direct).unwrap(), std::fs::read(&simplex).unwrap());
}

#[test]
fn horizontal_composition() {
    let dir = tempfile::tempdir().unwrap();
    let mut smp = Sampler::new(7);
    let a = random_two_term(&mut smp).unwrap();
    let f = random_two_term_morphism(&mut smp, &a).unwrap();
    let f2 = random_two_term_morphism(&mut smp, f.target()).unwrap();
    let theta = random_homotopy(&mut smp, &f).unwrap();
    let tau = random_homotopy(&mut smp, &f2).unwrap();
    let hp = write(dir.path(), "theta.json", &homotopy_file(&theta));
    let tp = write(dir.path(), "tau.json", &homotopy_file(&tau));
    let out = dir.path().join("h.json");
    let r = halg(&["homotopy", "compose-h", s(&hp), s(&tp), "-o", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.report);
    let composite = StructureFile::load(&out).unwrap().homotopy().unwrap();
    assert_eq!(composite.source(), &f.then(&f2).unwrap());
}

#[test]
fn lift_extract_and_iterate() {
    let dir = tempfile::tempdir().unwrap();
    let (theta, _) = homotopy_pair(8);
    let hp = write(dir.path(), "theta.json", &homotopy_file(&theta));
    for (lift_at, extract_at) in [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")] {
        let (lifted, back) = (dir.path().join("alpha.json"), dir.path().join("back.json"));
        let r = halg(&["homotopy", "lift", s(&hp), "--vertex", lift_at, "-o", s(&lifted)]);
        assert_eq!(r.code, 0);
        assert_eq!(halg(&["homotopy", "extract", s(&lifted), "--vertex", extract_at, "-o", s(&back)]).code, 0);
        assert_eq!(std::fs::read(&back).unwrap(), std::fs::read(&hp).unwrap());

        let again = dir.path().join("again.json");
        let r = halg(&["mc", "iterate", s(&lifted), "--vertex", lift_at, "-o", s(&again)]);
        assert_eq!(r.code, 0, "{}", r.report);
        assert!(r.report["outputs"]["steps"].as_str().unwrap().parse::<usize>().unwrap() <= 2);
        assert_eq!(std::fs::read(&again).unwrap(), std::fs::read(&lifted).unwrap());
    }
}

#[test]
fn morphisms_through_maurer_cartan_elements() {
    let dir = tempfile::tempdir().unwrap();
    let (theta, _) = homotopy_pair(9);
    let mut m = StructureFile::new();
    m.put_morphism("phi", &theta.target().to_infty().unwrap()).unwrap();
    let mp = write(dir.path(), "m.json", &m);
    let (mc, back) = (dir.path().join("mc.json"), dir.path().join("back.json"));
    assert_eq!(halg(&["mc", "lift", s(&mp), "-o", s(&mc)]).code, 0);
    assert_eq!(halg(&["mc", "extract", s(&mc), "-o", s(&back)]).code, 0);
    assert_eq!(std::fs::read(&back).unwrap(), std::fs::read(&mp).unwrap());
}

#[test]
fn loday_commands() {
    let dir = tempfile::tempdir().unwrap();
    let mut f = square_to_centre();
    let a = f.leibniz_algebra().unwrap();
    f.put_cochain("cochain", &LodayCochain::scalar(a.space(), 0, [(vec![], int(5))]).unwrap()).unwrap();
    f.put_space(&scalars()).unwrap();
    let p = write(dir.path(), "c.json", &f);
    let out = dir.path().join("dc.json");
    assert_eq!(halg(&["loday", "coboundary", s(&p), "-o", s(&out)]).code, 0);
    let dc = StructureFile::load(&out).unwrap().cochain("cochain").unwrap();
    assert!(dc.is_zero());

    let sq = write(dir.path(), "square.json", &square_to_centre());
    let q = dir.path().join("q.json");
    let r = halg(&["loday", "quotient", s(&sq), "-o", s(&q)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["outputs"]["ideal-dimension"], "1");
    let quotient = StructureFile::load(&q).unwrap().leibniz_algebra().unwrap();
    assert_eq!(quotient.dim(), 1);
    assert!(quotient.bracket_map().is_zero());

    let mut h = StructureFile::new();
    h.put_leibniz_algebra(&leibniz_from_constants("H", 3, &[(0, 1, 2, 1), (1, 0, 2, -1)]).unwrap()).unwrap();
    let hp = write(dir.path(), "heisenberg.json", &h);
    let r = halg(&["loday", "cartan", s(&hp)]);
    assert_eq!(r.code, 0, "{}", r.report);
    let rb = halg(&["check", "bimodule", s(&hp)]);
    assert_eq!(rb.code, 2);
}
