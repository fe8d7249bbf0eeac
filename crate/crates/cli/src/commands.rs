use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use hopfcyc::cyclic::{self, verify_relations as check_relations, BuildOptions, BuilderRoute, CyclicObject, RelationReport, Theory};
use hopfcyc::homology::ComplexReport;
use hopfcyc::hopf::AxiomReport;
use hopfcyc::rep::{check_stability, stability_with_power, yd_routes, ModuleObject, YdRoutes};
use hopfcyc::{HopfAlgebra, ModComod};
use serde::Serialize;
use thiserror::Error;

use crate::{Builder, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] hopfcyc::Error),
}

/// 1 for a mathematical failure, 2 for bad input, 3 for an unsupported
/// configuration.
pub fn exit_code(e: &CliError) -> u8 {
    use hopfcyc::Error as E;
    match e {
        CliError::Read { .. } | CliError::Write { .. } => 2,
        CliError::Core(core) => match core {
            E::CharNotZero(_) => 3,
            E::CoefficientMismatch(_) | E::NotStable { .. } | E::NotAComplex { .. } | E::DescentFailure(_) | E::SingularAntipode => 1,
            _ => 2,
        },
    }
}

type Outcome = Result<u8, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

fn load_hopf(path: &Path) -> Result<HopfAlgebra, CliError> {
    Ok(HopfAlgebra::from_json(&read(path)?, true)?)
}

fn load_coeff(h: &HopfAlgebra, path: &Path) -> Result<ModComod, CliError> {
    let m = ModComod::from_json(h, &read(path)?)?;
    m.validate(h)?;
    Ok(m)
}

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializable")),
        Format::Table => print!("{}", table()),
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn at(diff: Option<(usize, usize)>) -> String {
    diff.map(|(r, c)| format!("  first differing entry ({r}, {c})")).unwrap_or_default()
}

fn axiom_table(report: &AxiomReport) -> String {
    let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in &report.checks {
        let _ = writeln!(out, "{:<width$}  {}{}", c.name, verdict(c.passed), at(c.first_difference));
    }
    out
}

pub fn verify_hopf(path: &Path, characteristic: u64, format: Format) -> Outcome {
    let h = HopfAlgebra::from_json(&read(path)?, false)?;
    let report = if characteristic == 0 { h.verify_axioms() } else { h.verify_axioms_mod_p(characteristic)? };
    emit(format, &report, || axiom_table(&report));
    Ok(if report.passed() { 0 } else { 1 })
}

#[derive(Serialize)]
struct CoeffReport {
    yd: YdRoutes,
    /// `S^{2i}(m₁)m₀ = m`
    even_stability: bool,
    /// `S^{2i−1}(m₁)m₀ = m`
    odd_stability: bool,
    stability_required: bool,
}

pub fn check_coeff(hopf: &Path, coeff: &Path, i: i64, stability: bool, format: Format) -> Outcome {
    let h = load_hopf(hopf)?;
    let m = load_coeff(&h, coeff)?;
    let report = CoeffReport {
        yd: yd_routes(&h, &m, i)?,
        even_stability: check_stability(&h, &m, i),
        odd_stability: stability_with_power(&h, &m, 2 * i - 1),
        stability_required: stability,
    };
    emit(format, &report, || {
        let y = &report.yd;
        let mut out = String::new();
        let _ = writeln!(out, "YD_{i} route 1   {}{}", verdict(y.route1), at(y.route1_difference));
        let _ = writeln!(out, "YD_{i} route 2   {}{}", verdict(y.route2), at(y.route2_difference));
        let _ = writeln!(out, "stable, S^{:<4} {}", 2 * i, verdict(report.even_stability));
        let _ = writeln!(out, "stable, S^{:<4} {}", 2 * i - 1, verdict(report.odd_stability));
        out
    });
    let ok = report.yd.route1 && report.yd.route2 && (!stability || report.even_stability);
    Ok(if ok { 0 } else { 1 })
}

pub struct BuildArgs<'a> {
    pub hopf: &'a Path,
    pub coeff: &'a Path,
    pub object: &'a Path,
    pub theory: Theory,
    pub degree: usize,
    pub out: Option<&'a Path>,
    pub allow_paracyclic: bool,
    pub builder: Builder,
}

pub fn build(args: BuildArgs<'_>) -> Outcome {
    let h = load_hopf(args.hopf)?;
    let m = load_coeff(&h, args.coeff)?;
    let obj = ModuleObject::from_json(&h, &read(args.object)?)?;
    let route = match args.builder {
        Builder::Generic => BuilderRoute::Generic,
        Builder::Concrete => BuilderRoute::Concrete,
    };
    let opts = BuildOptions { allow_paracyclic: args.allow_paracyclic };
    let co = cyclic::build(args.theory, route, &h, &m, &obj, args.degree, opts)?;
    let text = co.to_json() + "\n";
    match args.out {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Write { path: p.to_path_buf(), source })?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn relations_table(r: &RelationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "checked {} identities, {} violated", r.checked, r.violations.len());
    for v in &r.violations {
        let (row, col) = v.first_difference;
        let _ = writeln!(
            out,
            "FAIL  {:?}  {}  degree {}  indices {:?}  first differing entry ({row}, {col})",
            v.family, v.relation, v.degree, v.indices
        );
    }
    out
}

fn load_object(path: &Path) -> Result<CyclicObject, CliError> {
    Ok(CyclicObject::from_json(&read(path)?)?)
}

pub fn verify_relations(object: &Path, format: Format) -> Outcome {
    let co = load_object(object)?;
    let report = check_relations(&co);
    emit(format, &report, || relations_table(&report));
    Ok(if report.passed() { 0 } else { 1 })
}

pub fn homology(object: &Path, format: Format, characteristic: u64) -> Outcome {
    let co = load_object(object)?;
    if characteristic != 0 {
        return Err(hopfcyc::Error::CharNotZero(characteristic).into());
    }
    let relations = check_relations(&co);
    if !relations.passed() {
        eprint!("{}", relations_table(&relations));
        eprintln!("error: the tower is not (co)cyclic, so its homology is not computed");
        return Ok(1);
    }
    let report = ComplexReport::compute(&co, characteristic)?;
    emit(format, &report, || report.to_table());
    Ok(0)
}
