//! Command-line front end: algebra files, the built-in corpus, and one
//! subcommand per computation. Every command produces a [`RunReport`].
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 inconclusive (search
//! bound or degree window), 3 input error.

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::corpus;
use crate::derivedcat::{build_cluster, covering_check, DerivedError, DerivedModel, Window};
use crate::exactla::Field;
use crate::lincat::LinCatError;
use crate::modcat::{Alg, ModCat, ModError, Strategy};
use crate::quiver::{BoundQuiverAlgebra, QuiverError};
use crate::quotient::{
    self, build_quotient, build_quotient_windowed, converse_checks, endo_algebra, frobenius_check, gorenstein,
    gorenstein_windowed, projectives_injectives, verify_abelian, QuotientError,
};
use crate::report::RunReport;
use crate::stablecat::{build_stable, StableError, TriangModel};
use crate::tilting::{enumerate_table, is_tilting, is_tilting_derived, ExtTable};

/// Environment variable capping every multiplicity search bound.
pub const MULT_BOUND_ENV: &str = "TILTCAT_MULT_BOUND";
pub const DEFAULT_MULT_BOUND: usize = 2;

#[derive(Debug, Parser)]
#[command(name = "tiltcat", version, about = "Tilting subcategories and their abelian quotients, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the full JSON report instead of one line per check.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Multiplicity bound for kernel, cokernel and cone searches.
    #[arg(long, global = true)]
    pub mult_bound: Option<usize>,
    /// Record wall-clock timings in the report.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Algebra file checks.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// List the indecomposable modules.
    Indec {
        algebra: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Auslander-Reiten quiver of the module category.
    ArQuiver {
        algebra: String,
        /// Write the quiver in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Stable module category of a self-injective algebra.
    Stable { algebra: String },
    /// Bounded derived category of a hereditary algebra on a degree window.
    Derived {
        algebra: String,
        /// Degree window as `MIN:MAX`.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Cluster category of a hereditary algebra.
    Cluster {
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Tilting subcategories.
    Tilting {
        #[command(subcommand)]
        cmd: TiltingCmd,
    },
    /// Quotient by a subcategory.
    Quotient {
        algebra: String,
        action: QuotientAction,
        #[command(flatten)]
        sel: Selection,
        /// Build the quotient even when the subcategory is not tilting.
        #[arg(long = "override")]
        allow_override: bool,
    },
    /// The built-in corpus.
    Examples {
        #[command(subcommand)]
        cmd: ExamplesCmd,
    },
}

#[derive(Debug, Subcommand)]
pub enum AlgebraCmd {
    Validate { algebra: String },
}

#[derive(Debug, Subcommand)]
pub enum TiltingCmd {
    Check {
        algebra: String,
        #[command(flatten)]
        sel: Selection,
    },
    Enumerate {
        algebra: String,
        #[arg(long, value_enum, default_value_t = ModelKind::Stable)]
        model: ModelKind,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExamplesCmd {
    RunAll,
}

#[derive(Debug, clap::Args)]
pub struct Selection {
    #[arg(long, value_enum, default_value_t = ModelKind::Stable)]
    pub model: ModelKind,
    /// Object labels, comma separated. For the derived model they seed
    /// `F`-orbits.
    #[arg(long, value_delimiter = ',')]
    pub objects: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    Stable,
    Cluster,
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Auto,
    Nakayama,
    Hereditary,
    Closure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuotientAction {
    Verify,
    Gorenstein,
    Frobenius,
    Endo,
    Converse,
}

/// A failure with the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub module: &'static str,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.module, self.message)
    }
}

impl std::error::Error for CliError {}

fn input(module: &'static str, message: impl Into<String>) -> CliError {
    CliError {
        code: 3,
        module,
        message: message.into(),
    }
}

impl From<QuiverError> for CliError {
    fn from(e: QuiverError) -> Self {
        input("quiver", e.to_string())
    }
}

impl From<ModError> for CliError {
    fn from(e: ModError) -> Self {
        let code = if matches!(e, ModError::FuelExhausted { .. }) { 2 } else { 1 };
        CliError {
            code,
            module: "modcat",
            message: e.to_string(),
        }
    }
}

impl From<LinCatError> for CliError {
    fn from(e: LinCatError) -> Self {
        let code = if matches!(e, LinCatError::NotFoundWithinBound(_)) { 2 } else { 1 };
        CliError {
            code,
            module: "lincat",
            message: e.to_string(),
        }
    }
}

impl From<StableError> for CliError {
    fn from(e: StableError) -> Self {
        match e {
            StableError::NotSelfInjective => input("stablecat", e.to_string()),
            StableError::Module(m) => m.into(),
            StableError::Category(c) => c.into(),
            StableError::ConeNotFound(_) => CliError {
                code: 2,
                module: "stablecat",
                message: e.to_string(),
            },
            StableError::Inconsistent(_) => CliError {
                code: 1,
                module: "stablecat",
                message: e.to_string(),
            },
        }
    }
}

impl From<DerivedError> for CliError {
    fn from(e: DerivedError) -> Self {
        let code = match &e {
            DerivedError::Module(m) => return m.clone().into(),
            DerivedError::Category(c) => return c.clone().into(),
            DerivedError::Triangulated(t) => return t.clone().into(),
            DerivedError::NotHereditary | DerivedError::Cyclic | DerivedError::NotFStable(_) => 3,
            DerivedError::WindowExceeded(_) | DerivedError::WindowTooNarrow { .. } => 2,
            DerivedError::Inconsistent(_) => 1,
        };
        CliError {
            code,
            module: "derivedcat",
            message: e.to_string(),
        }
    }
}

impl From<QuotientError> for CliError {
    fn from(e: QuotientError) -> Self {
        let code = match &e {
            QuotientError::Triangulated(t) => return t.clone().into(),
            QuotientError::Category(c) => return c.clone().into(),
            QuotientError::Derived(d) => return d.clone().into(),
            QuotientError::Module(m) => return m.clone().into(),
            QuotientError::Quiver(q) => return q.clone().into(),
            QuotientError::Inconclusive(_) => 2,
            QuotientError::NeedsTriangulated => 3,
            _ => 1,
        };
        CliError {
            code,
            module: "quotient",
            message: e.to_string(),
        }
    }
}

// ---- algebra files ----

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: String,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowEntry>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
    pub expect: Option<Expect>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowEntry {
    pub label: String,
    pub source: String,
    pub target: String,
}

/// Annotations asserted by `algebra validate`.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expect {
    pub dim: Option<usize>,
    pub indecomposables: Option<usize>,
    pub selfinjective: Option<bool>,
}

/// `Q` for the rationals, `F<p>` for the prime field with `p` elements.
pub fn parse_field(s: &str) -> Result<Field, CliError> {
    if s == "Q" {
        return Ok(Field::Rationals);
    }
    let p = s
        .strip_prefix('F')
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| input("cli", format!("unknown field `{s}`; use Q or F<p>")))?;
    Field::prime(p).map_err(|e| input("exactla", e.to_string()))
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| input("cli", e.to_string()))
    }

    pub fn build(&self) -> Result<Alg, CliError> {
        let field = parse_field(&self.field)?;
        let vs: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str, &str)> = self
            .arrows
            .iter()
            .map(|a| (a.label.as_str(), a.source.as_str(), a.target.as_str()))
            .collect();
        let rels: Vec<Vec<&str>> = self.relations.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
        let rel_refs: Vec<&[&str]> = rels.iter().map(Vec::as_slice).collect();
        Ok(Arc::new(BoundQuiverAlgebra::from_labels(&self.name, field, &vs, &arrows, &rel_refs)?))
    }
}

/// `builtin:A1` and friends, or a path to an algebra file.
pub fn load_algebra(arg: &str) -> Result<(Alg, Option<Expect>), CliError> {
    let text = match arg.strip_prefix("builtin:") {
        Some(name) => corpus::ALL
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, t)| t.to_string())
            .ok_or_else(|| input("cli", format!("no built-in algebra `{name}`")))?,
        None => std::fs::read_to_string(Path::new(arg)).map_err(|e| input("cli", format!("{arg}: {e}")))?,
    };
    let file = AlgebraFile::parse(&text)?;
    Ok((file.build()?, file.expect))
}

// ---- helpers ----

/// The bound from the flag or the default, capped by [`MULT_BOUND_ENV`].
pub fn mult_bound(flag: Option<usize>) -> Result<usize, CliError> {
    let b = flag.unwrap_or(DEFAULT_MULT_BOUND);
    match std::env::var(MULT_BOUND_ENV) {
        Ok(v) => {
            let cap: usize = v
                .parse()
                .map_err(|_| input("cli", format!("{MULT_BOUND_ENV} must be a number, got `{v}`")))?;
            Ok(b.min(cap))
        }
        Err(_) => Ok(b),
    }
}

pub fn parse_window(w: Option<&str>) -> Result<Window, CliError> {
    let Some(w) = w else {
        return Ok(Window::default());
    };
    let bad = || input("cli", format!("window must look like MIN:MAX, got `{w}`"));
    let (a, b) = w.split_once(':').ok_or_else(bad)?;
    let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok(Window::new(a, b))
}

fn indices(labels: &[String], objs: &[String]) -> Result<Vec<usize>, CliError> {
    objs.iter()
        .map(|o| labels.iter().position(|l| l == o).ok_or_else(|| input("cli", format!("unknown object `{o}`"))))
        .collect()
}

fn strategy(s: StrategyArg, alg: &BoundQuiverAlgebra) -> Strategy {
    match s {
        StrategyArg::Auto => Strategy::auto(alg),
        StrategyArg::Nakayama => Strategy::Nakayama,
        StrategyArg::Hereditary => Strategy::HereditaryKnit,
        StrategyArg::Closure => Strategy::Closure,
    }
}

enum Built {
    Triang(Arc<TriangModel>),
    Derived(Arc<DerivedModel>),
}

fn build_model(alg: &Alg, kind: ModelKind, window: Option<&str>, bound: usize) -> Result<Built, CliError> {
    Ok(match kind {
        ModelKind::Stable => Built::Triang(Arc::new(build_stable(alg)?)),
        ModelKind::Cluster => Built::Triang(Arc::new(build_cluster(alg, parse_window(window)?, bound)?.model)),
        ModelKind::Derived => Built::Derived(Arc::new(DerivedModel::build(alg, parse_window(window)?)?)),
    })
}

/// Derived selections are closed under `F`.
fn select(built: &Built, objs: &[String]) -> Result<Vec<usize>, CliError> {
    match built {
        Built::Triang(m) => indices(&m.base.objects, objs),
        Built::Derived(d) => {
            let seeds = indices(&d.cat.objects, objs)?;
            Ok(d.f_orbits(&seeds.iter().map(|&i| d.objects[i]).collect::<Vec<_>>()))
        }
    }
}

// ---- commands ----

pub fn cmd_algebra_validate(alg: &Alg, expect: Option<&Expect>, report: &mut RunReport) -> Result<(), CliError> {
    report.put(
        "algebra",
        &serde_json::json!({
            "name": alg.name,
            "field": alg.field.tag(),
            "vertices": alg.n_vertices(),
            "arrows": alg.quiver.arrows.len(),
            "relations": alg.relations.len(),
            "dim": alg.dim(),
            "hereditary": alg.is_hereditary(),
            "nakayama": alg.is_nakayama(),
            "selfinjective": alg.is_selfinjective(),
        }),
    );
    let Some(e) = expect else {
        report.check("parse", true, format!("{} parses; no annotations", alg.name));
        return Ok(());
    };
    if let Some(d) = e.dim {
        report.check("dim", alg.dim() == d, format!("{} (expected {d})", alg.dim()));
    }
    if let Some(s) = e.selfinjective {
        report.check("selfinjective", alg.is_selfinjective() == s, format!("{} (expected {s})", alg.is_selfinjective()));
    }
    if let Some(n) = e.indecomposables {
        let mc = ModCat::build(alg, Strategy::auto(alg))?;
        report.check("indecomposables", mc.len() == n, format!("{} (expected {n})", mc.len()));
    }
    Ok(())
}

pub fn cmd_indec(alg: &Alg, expect: Option<&Expect>, s: StrategyArg, report: &mut RunReport) -> Result<ModCat, CliError> {
    let strat = strategy(s, alg);
    let mc = ModCat::build(alg, strat)?;
    report.put("strategy", &strat.name());
    report.put("indecomposables", &mc.labels);
    match expect.and_then(|e| e.indecomposables) {
        Some(n) => report.check("count", mc.len() == n, format!("{} (expected {n})", mc.len())),
        None => report.check("count", !mc.is_empty(), format!("{} indecomposables", mc.len())),
    };
    Ok(mc)
}

pub fn cmd_ar_quiver(alg: &Alg, dot: Option<&Path>, report: &mut RunReport) -> Result<String, CliError> {
    let mc = ModCat::build(alg, Strategy::auto(alg))?;
    let skel = mc.skeleton();
    let text = skel.ar_quiver_dot(&alg.name);
    let edges = skel.ar_quiver();
    report.put("nodes", &skel.objects);
    report.put(
        "arrows",
        &edges
            .iter()
            .map(|&(x, y, m)| (skel.objects[x].clone(), skel.objects[y].clone(), m))
            .collect::<Vec<_>>(),
    );
    let tau = mc.tau_map();
    let meshes = (0..mc.len()).filter(|&i| tau[i].is_some()).count();
    report.check(
        "translate",
        meshes + mc.projectives().len() == mc.len(),
        format!("{meshes} non-projectives with a translate"),
    );
    if let Some(p) = dot {
        std::fs::write(p, &text).map_err(|e| input("cli", format!("{}: {e}", p.display())))?;
    }
    Ok(text)
}

pub fn cmd_stable(alg: &Alg, report: &mut RunReport) -> Result<Arc<TriangModel>, CliError> {
    let m = Arc::new(build_stable(alg)?);
    report.put("objects", &m.base.objects);
    report.put("ext1", &ExtTable::from_model(&m));
    let serre = m.serre_verify();
    report.check("serre", serre.passed(), format!("{} pairs", serre.pairs));
    let monos = m.monos_split();
    report.check("monos-split", monos.is_empty(), format!("{} non-split monomorphisms", monos.len()));
    if let Some((pairs, bad)) = m.ext_iso_mismatches() {
        report.check("ext-vs-stable-hom", bad.is_empty(), format!("{pairs} pairs, {} mismatches", bad.len()));
    }
    Ok(m)
}

pub fn cmd_derived(alg: &Alg, window: Window, report: &mut RunReport) -> Result<Arc<DerivedModel>, CliError> {
    let d = Arc::new(DerivedModel::build(alg, window)?);
    report.put("window", &window);
    report.put("objects", &d.cat.objects);
    report.check("category", d.cat.verify().is_ok(), format!("{} objects", d.len()));
    let bad = d.hom_dim_mismatches();
    report.check("hom-dimensions", bad.is_empty(), format!("{} mismatches against module homs", bad.len()));
    Ok(d)
}

pub fn cmd_cluster(alg: &Alg, window: Window, bound: usize, report: &mut RunReport) -> Result<(), CliError> {
    let c = build_cluster(alg, window, bound)?;
    let d = c.derived.clone();
    report.put("window", &d.window);
    report.put("objects", &c.model.base.objects);
    let serre = c.model.serre_verify();
    report.check("serre", serre.passed(), format!("{} pairs", serre.pairs));
    let tau_is_shift = (0..c.model.len()).all(|x| c.model.tau[x] == c.model.shift_obj(x));
    report.check("tau-equals-shift", tau_is_shift, "objects of the cluster category");
    let t = d.f_orbits(&d.projectives());
    let cov = covering_check(&c, &t)?;
    report.check("covering", cov.passed(), format!("{} pairs over the projective orbits", cov.pairs_checked));
    report.put("covering", &cov);
    Ok(())
}

pub fn cmd_tilting_check(alg: &Alg, sel: &Selection, bound: usize, report: &mut RunReport) -> Result<(), CliError> {
    let built = build_model(alg, sel.model, sel.window.as_deref(), bound)?;
    let s = select(&built, &sel.objects)?;
    let r = match &built {
        Built::Triang(m) => is_tilting(m, &s),
        Built::Derived(d) => is_tilting_derived(d, &s)?,
    };
    report.check("tilting", r.is_tilting(), format!("{:?}", r.verdict));
    report.put("report", &r);
    Ok(())
}

pub fn cmd_tilting_enumerate(alg: &Alg, kind: ModelKind, window: Option<&str>, bound: usize, report: &mut RunReport) -> Result<Vec<Vec<String>>, CliError> {
    let Built::Triang(m) = build_model(alg, kind, window, bound)? else {
        return Err(input("cli", "enumeration needs the stable or cluster model"));
    };
    let e = enumerate_table(&ExtTable::from_model(&m));
    let found: Vec<Vec<String>> = e
        .tilting
        .iter()
        .map(|t| t.iter().map(|&x| m.base.objects[x].clone()).collect())
        .collect();
    report.put("tilting", &found);
    report.put("candidates", &e.candidates);
    let one_sided = e
        .candidates
        .iter()
        .filter(|c| !c.is_tilting())
        .flat_map(|c| c.left_witness.iter().chain(&c.right_witness))
        .all(|w| w.is_one_directional());
    report.check(
        "witnesses",
        one_sided,
        format!("{} tilting among {} maximal rigid candidates", found.len(), e.candidates.len()),
    );
    Ok(found)
}

pub fn cmd_quotient(
    alg: &Alg,
    action: QuotientAction,
    sel: &Selection,
    allow_override: bool,
    bound: usize,
    report: &mut RunReport,
) -> Result<(), CliError> {
    let built = build_model(alg, sel.model, sel.window.as_deref(), bound)?;
    let s = select(&built, &sel.objects)?;
    if let (QuotientAction::Converse, Built::Triang(m)) = (action, &built) {
        let r = converse_checks(m.clone(), &s, bound)?;
        report.check("converse", r.passed(), format!("{} morphisms compared", r.morphisms_checked));
        report.put("converse", &r);
        return Ok(());
    }
    let q = match &built {
        Built::Triang(m) => build_quotient(m.clone(), &s, allow_override)?,
        Built::Derived(d) => build_quotient_windowed(d.clone(), &s)?,
    };
    if q.overridden {
        report.put("banner", &"override: subcategory is not tilting; only generic searches run");
    }
    report.put("objects", &q.cat.objects);
    match action {
        QuotientAction::Verify => {
            let c = verify_abelian(&q, bound)?;
            report.check(
                "abelian",
                c.passed(),
                format!("{} basis morphisms, {} disagreements", c.morphisms.len(), c.disagreements),
            );
            report.put("certificate", &c);
        }
        QuotientAction::Gorenstein => {
            let pi = projectives_injectives(&q)?;
            let detail = match &pi.expected_projectives {
                Some(_) => format!("{} = images of S[-1]", pi.projectives.join(", ")),
                None => format!("{} (override: no expectation)", pi.projectives.join(", ")),
            };
            report.check("projectives", true, detail);
            report.put("projectives-injectives", &pi);
            let reports = match &built {
                Built::Triang(_) => vec![gorenstein(&q, bound)?],
                Built::Derived(_) => gorenstein_windowed(&q, bound)?,
            };
            for (i, g) in reports.iter().enumerate() {
                let ok = g.dimension.is_some_and(|d| d <= 1) || q.overridden && g.dimension.is_some();
                report.check(format!("gorenstein-{i}"), ok, format!("dimension {:?}", g.dimension));
            }
            report.put("gorenstein", &reports);
        }
        QuotientAction::Frobenius => {
            let f = frobenius_check(&q)?;
            report.check("criteria-agree", true, format!("frobenius: {}", f.frobenius));
            report.put("frobenius", &f);
        }
        QuotientAction::Endo => match &built {
            Built::Triang(_) => {
                let e = endo_algebra(&q)?;
                report.check("endomorphism-algebra", e.passed(), format!("{} arrows, {} relations", e.arrows.len(), e.relations.len()));
                report.put("endo", &e);
            }
            Built::Derived(_) => {
                let l = quotient::line_with_radical_square_zero(&q)?;
                report.check("line-radical-square-zero", l.passed(), format!("{} projectives", l.projectives.len()));
                report.put("line", &l);
            }
        },
        QuotientAction::Converse => return Err(input("cli", "converse checks need the stable or cluster model")),
    }
    Ok(())
}

/// The built-in corpus end to end.
pub fn cmd_examples_run_all(bound: usize, report: &mut RunReport) -> Result<(), CliError> {
    let a1 = corpus::a1();
    let a2 = corpus::a2();
    let a3 = corpus::a3();

    let mut sub = RunReport::new(Vec::new());
    let (_, expect) = load_algebra("builtin:A1")?;
    cmd_algebra_validate(&a1, expect.as_ref(), &mut sub)?;
    let m1 = cmd_stable(&a1, &mut sub)?;
    let s1 = indices(&m1.base.objects, &["a".into(), "a/b/a".into()])?;
    let q1 = build_quotient(m1.clone(), &s1, false)?;
    let cert = verify_abelian(&q1, bound)?;
    sub.check("abelian", cert.passed() && cert.disagreements == 0, format!("{} basis morphisms", cert.morphisms.len()));
    let g = gorenstein(&q1, bound)?;
    sub.check("gorenstein", g.dimension == Some(0), format!("dimension {:?}", g.dimension));
    let f = frobenius_check(&q1)?;
    sub.check("frobenius", f.frobenius, "all three criteria hold");
    let e = endo_algebra(&q1)?;
    sub.check("endo", e.passed() && e.relations.len() == 2, format!("{} relations", e.relations.len()));
    report.merge("A1", sub);

    let mut sub = RunReport::new(Vec::new());
    let m2 = cmd_stable(&a2, &mut sub)?;
    sub.check("no-tilting", enumerate_table(&ExtTable::from_model(&m2)).tilting.is_empty(), "no tilting subcategory");
    let s2 = indices(&m2.base.objects, &["a".into()])?;
    let q2 = build_quotient(m2.clone(), &s2, true)?;
    let cert = verify_abelian(&q2, bound)?;
    sub.check("abelian-by-search", cert.passed(), format!("{} objects", q2.cat.len()));
    let conv = converse_checks(m2.clone(), &s2, bound)?;
    sub.check("converse", conv.passed(), "rigid add(a)");
    report.merge("A2", sub);

    let mut sub = RunReport::new(Vec::new());
    let d = cmd_derived(&a3, Window::default(), &mut sub)?;
    let t = d.f_orbits(&d.projectives());
    let qd = build_quotient_windowed(d.clone(), &t)?;
    let gs = gorenstein_windowed(&qd, bound)?;
    sub.check(
        "gorenstein",
        !gs.is_empty() && gs.iter().all(|g| g.dimension.is_some_and(|d| d <= 1)),
        format!("{} interior components", gs.len()),
    );
    report.merge("A3-derived", sub);

    let mut sub = RunReport::new(Vec::new());
    cmd_cluster(&a3, Window::default(), bound, &mut sub)?;
    let tilts = cmd_tilting_enumerate(&a3, ModelKind::Cluster, None, bound, &mut sub)?;
    sub.check("count", tilts.len() == 14, format!("{} tilting subcategories", tilts.len()));
    report.merge("A3-cluster", sub);
    Ok(())
}

/// Run a parsed command line. On success returns the report and the DOT
/// text, if the command produced one for stdout.
pub fn run(cli: &Cli, argv: Vec<String>) -> Result<(RunReport, Option<String>), CliError> {
    let bound = mult_bound(cli.mult_bound)?;
    let mut report = RunReport::new(argv);
    let start = Instant::now();
    let mut stdout_dot = None;
    match &cli.command {
        Command::Algebra { cmd: AlgebraCmd::Validate { algebra } } => {
            let (alg, expect) = load_algebra(algebra)?;
            cmd_algebra_validate(&alg, expect.as_ref(), &mut report)?;
        }
        Command::Indec { algebra, strategy } => {
            let (alg, expect) = load_algebra(algebra)?;
            cmd_indec(&alg, expect.as_ref(), *strategy, &mut report)?;
        }
        Command::ArQuiver { algebra, dot } => {
            let (alg, _) = load_algebra(algebra)?;
            let text = cmd_ar_quiver(&alg, dot.as_deref(), &mut report)?;
            if dot.is_none() && !cli.json {
                stdout_dot = Some(text);
            }
        }
        Command::Stable { algebra } => {
            let (alg, _) = load_algebra(algebra)?;
            cmd_stable(&alg, &mut report)?;
        }
        Command::Derived { algebra, window } => {
            let (alg, _) = load_algebra(algebra)?;
            cmd_derived(&alg, parse_window(window.as_deref())?, &mut report)?;
        }
        Command::Cluster { algebra, window } => {
            let (alg, _) = load_algebra(algebra)?;
            cmd_cluster(&alg, parse_window(window.as_deref())?, bound, &mut report)?;
        }
        Command::Tilting { cmd: TiltingCmd::Check { algebra, sel } } => {
            let (alg, _) = load_algebra(algebra)?;
            cmd_tilting_check(&alg, sel, bound, &mut report)?;
        }
        Command::Tilting { cmd: TiltingCmd::Enumerate { algebra, model, window } } => {
            let (alg, _) = load_algebra(algebra)?;
            cmd_tilting_enumerate(&alg, *model, window.as_deref(), bound, &mut report)?;
        }
        Command::Quotient { algebra, action, sel, allow_override } => {
            let (alg, _) = load_algebra(algebra)?;
            cmd_quotient(&alg, *action, sel, *allow_override, bound, &mut report)?;
        }
        Command::Examples { cmd: ExamplesCmd::RunAll } => cmd_examples_run_all(bound, &mut report)?,
    }
    if cli.timings {
        report.time("total", start.elapsed().as_millis());
    }
    Ok((report, stdout_dot))
}

/// Entry point for the binary: returns the process exit code.
pub fn main_with_args(argv: Vec<String>) -> u8 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli, argv) {
        Ok((report, dot)) => {
            if let Some(p) = &cli.report {
                if let Err(e) = std::fs::write(p, report.to_json()) {
                    eprintln!("[cli] {}: {e}", p.display());
                    return 3;
                }
            }
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.summary());
                if let Some(d) = dot {
                    print!("{d}");
                }
            }
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_files_parse() {
        for (name, _) in corpus::ALL {
            let (alg, expect) = load_algebra(&format!("builtin:{name}")).unwrap();
            assert_eq!(alg.name, name);
            assert!(expect.is_some());
        }
        assert_eq!(parse_field("F5").unwrap(), Field::Prime(5));
        assert_eq!(parse_field("F4").unwrap_err().code, 3);
        assert_eq!(load_algebra("builtin:nope").unwrap_err().code, 3);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = corpus::A3_TOML.replace("name = \"A3\"", "name = \"A3\"\ncolour = \"red\"");
        assert_eq!(AlgebraFile::parse(&text).unwrap_err().code, 3);
    }

    #[test]
    fn windows() {
        assert_eq!(parse_window(Some("-2:3")).unwrap(), Window::new(-2, 3));
        assert_eq!(parse_window(None).unwrap(), Window::default());
        assert!(parse_window(Some("3:-2")).is_err());
        assert!(parse_window(Some("x")).is_err());
    }

    #[test]
    fn error_codes() {
        assert_eq!(CliError::from(QuotientError::Inconclusive("x".into())).code, 2);
        assert_eq!(CliError::from(QuotientError::NotTilting("x".into())).code, 1);
        assert_eq!(CliError::from(StableError::NotSelfInjective).code, 3);
        let narrow = DerivedError::WindowTooNarrow {
            min: 0,
            max: 1,
            reason: String::new(),
        };
        assert_eq!(CliError::from(QuotientError::Derived(narrow)).code, 2);
    }
}
