//! Subcommands. Each returns the text for standard output and an exit code:
//! 0 when every requested predicate holds, 1 when one was decided false,
//! 2 when the question could not be posed.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Value};

use starfan::arith::{parse_rational, Rational};
use starfan::bosio::{
    check_bosio, check_gen, check_imb, check_imb_tilde, main_theorem_crosscheck,
    perturb_to_condition_k,
};
use starfan::complexes::fmt_set;
use starfan::gale::{gale_transform, verify_gale_duality};
use starfan::geometry::{
    check_sep, check_simpl, check_weakly_starshaped, is_starshaped_at_origin, kernel, ray_cast,
    rationalize, sample_directions, DEFAULT_MAX_DENOMINATOR,
};
use starfan::{
    Check, Error, FundamentalSet, Realization, SimplicialComplex, StudiableSystem,
    VectorConfiguration,
};

use crate::document::{document_json, index_set, serialize, to_text, Document, DocumentError};
use crate::report::{exact, exact_vec, Report};
use crate::svg;

/// Directions used to validate a kernel witness with the ray oracle.
pub const VALIDATION_DIRECTIONS: usize = 200;

#[derive(Debug, Parser)]
#[command(
    name = "starfan",
    version,
    about = "Exact Gale transforms and starshapedness certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gale transform of a configuration (or of a realization's points).
    Gale {
        /// Input document; standard input when absent or "-".
        file: Option<PathBuf>,
    },
    /// Evaluate predicates and report verdicts with witnesses.
    Check {
        file: Option<PathBuf>,
        #[command(flatten)]
        select: Selection,
    },
    /// Kernel of a realization: halfspaces and an interior witness.
    Center {
        file: Option<PathBuf>,
        /// Comma-separated seed point; defaults to the base point.
        #[arg(long, allow_hyphen_values = true)]
        seed: Option<String>,
    },
    /// Round a decimal realization (or studiable system) to integers,
    /// keeping every verdict.
    Rationalize {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_DENOMINATOR)]
        max_denominator: u64,
    },
    /// Split a family with substitute uniqueness into its minimal parts.
    Decompose { file: Option<PathBuf> },
    /// SVG drawing of a planar realization with its kernel shaded.
    Plot { file: Option<PathBuf> },
}

impl Command {
    pub fn file(&self) -> Option<&PathBuf> {
        match self {
            Command::Gale { file }
            | Command::Check { file, .. }
            | Command::Center { file, .. }
            | Command::Rationalize { file, .. }
            | Command::Decompose { file }
            | Command::Plot { file } => file.as_ref(),
        }
    }
}

/// Predicate selector flags for `check`. With none given, every predicate
/// applicable to the document kind is evaluated.
#[derive(Clone, Debug, Default, Args)]
pub struct Selection {
    #[arg(long)]
    pub simpl: bool,
    #[arg(long)]
    pub sep: bool,
    #[arg(long)]
    pub weakly_starshaped: bool,
    #[arg(long)]
    pub starshaped: bool,
    #[arg(long)]
    pub pseudomanifold: bool,
    /// Compare the realization side with its Gale dual.
    #[arg(long)]
    pub crosscheck: bool,
    #[arg(long)]
    pub se: bool,
    #[arg(long)]
    pub seu: bool,
    #[arg(long)]
    pub seu_minimal: bool,
    #[arg(long)]
    pub gen: bool,
    #[arg(long)]
    pub imb: bool,
    #[arg(long)]
    pub imb_tilde: bool,
    #[arg(long)]
    pub bosio: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    Simpl,
    Sep,
    WeaklyStarshaped,
    Starshaped,
    Pseudomanifold,
    Crosscheck,
    Se,
    Seu,
    SeuMinimal,
    Gen,
    Imb,
    ImbTilde,
    Bosio,
}

impl Predicate {
    pub fn flag(self) -> &'static str {
        match self {
            Predicate::Simpl => "--simpl",
            Predicate::Sep => "--sep",
            Predicate::WeaklyStarshaped => "--weakly-starshaped",
            Predicate::Starshaped => "--starshaped",
            Predicate::Pseudomanifold => "--pseudomanifold",
            Predicate::Crosscheck => "--crosscheck",
            Predicate::Se => "--se",
            Predicate::Seu => "--seu",
            Predicate::SeuMinimal => "--seu-minimal",
            Predicate::Gen => "--gen",
            Predicate::Imb => "--imb",
            Predicate::ImbTilde => "--imb-tilde",
            Predicate::Bosio => "--bosio",
        }
    }
}

impl Selection {
    pub fn chosen(&self) -> Vec<Predicate> {
        use Predicate::*;
        [
            (self.simpl, Simpl),
            (self.sep, Sep),
            (self.weakly_starshaped, WeaklyStarshaped),
            (self.starshaped, Starshaped),
            (self.pseudomanifold, Pseudomanifold),
            (self.crosscheck, Crosscheck),
            (self.se, Se),
            (self.seu, Seu),
            (self.seu_minimal, SeuMinimal),
            (self.gen, Gen),
            (self.imb, Imb),
            (self.imb_tilde, ImbTilde),
            (self.bosio, Bosio),
        ]
        .into_iter()
        .filter_map(|(on, p)| on.then_some(p))
        .collect()
    }
}

/// Why a command stopped early.
#[derive(Debug)]
pub enum Failure {
    /// The question could not be posed (exit 2).
    Input(String),
    /// A decision came out negative without a report, e.g. an exhausted
    /// budget (exit 1).
    Decided(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Decided(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Decided(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget(_) | Error::TheoremViolation(_) => Failure::Decided(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Model(inner) => inner.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn mismatch<T>(command: &str, doc: &Document) -> Result<T, Failure> {
    Err(Failure::Input(format!(
        "{command} does not accept a {} document",
        doc.kind()
    )))
}

pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn report_outcome(report: &Report, command: &str, kind: &str) -> Outcome {
    Outcome {
        stdout: to_text(&report.to_json(command, kind)),
        code: if report.all_true() { 0 } else { 1 },
    }
}

pub fn execute(command: &Command, doc: Document) -> Result<Outcome, Failure> {
    match command {
        Command::Gale { .. } => cmd_gale(&doc),
        Command::Check { select, .. } => cmd_check(&doc, select),
        Command::Center { seed, .. } => cmd_center(&doc, seed.as_deref()),
        Command::Rationalize {
            max_denominator, ..
        } => cmd_rationalize(&doc, *max_denominator),
        Command::Decompose { .. } => cmd_decompose(&doc),
        Command::Plot { .. } => cmd_plot(&doc),
    }
}

pub fn cmd_gale(doc: &Document) -> Result<Outcome, Failure> {
    let config = match doc {
        Document::Configuration(x) => x.clone(),
        Document::Realization(r) => VectorConfiguration::new(r.ambient_dim(), r.points().to_vec())?,
        _ => return mismatch("gale", doc),
    };
    let g = gale_transform(&config)?;
    let mut report = Report::default();
    match verify_gale_duality(&config, &g) {
        Ok(check) => report.verdict("duality", &check),
        Err(Error::Budget(msg)) => report.extra("duality_skipped", Value::from(msg)),
        Err(e) => return Err(e.into()),
    }
    report.extra("source_rank", Value::from(g.source_rank));
    report.extra(
        "transform",
        document_json(&Document::Configuration(g.as_configuration())),
    );
    Ok(report_outcome(&report, "gale", doc.kind()))
}

pub fn cmd_check(doc: &Document, select: &Selection) -> Result<Outcome, Failure> {
    let chosen = select.chosen();
    let allowed: &[Predicate] = {
        use Predicate::*;
        match doc {
            Document::Realization(_) => &[Simpl, Sep, WeaklyStarshaped, Starshaped, Pseudomanifold, Crosscheck],
            Document::Complex(_) => &[Pseudomanifold],
            Document::FundamentalSet(_) => &[Se, Seu, SeuMinimal, Pseudomanifold],
            Document::StudiableSystem(_) => &[Se, Seu, SeuMinimal, Pseudomanifold, Gen, Imb, ImbTilde, Bosio],
            Document::Configuration(_) => &[],
        }
    };
    if allowed.is_empty() {
        return mismatch("check", doc);
    }
    if let Some(p) = chosen.iter().find(|p| !allowed.contains(p)) {
        return Err(Failure::Input(format!(
            "{} does not apply to a {} document",
            p.flag(),
            doc.kind()
        )));
    }
    let explicit = !chosen.is_empty();
    let selected = if explicit { chosen } else { allowed.to_vec() };
    let mut report = Report::default();
    match doc {
        Document::Realization(r) => check_realization(r, &selected, explicit, &mut report)?,
        Document::Complex(c) => check_complex(c, &mut report)?,
        Document::FundamentalSet(fs) => check_family(fs, &selected, explicit, &mut report)?,
        Document::StudiableSystem(s) => check_system(s, &selected, explicit, &mut report)?,
        Document::Configuration(_) => unreachable!("rejected above"),
    }
    Ok(report_outcome(&report, "check", doc.kind()))
}

fn check_realization(
    r: &Realization,
    selected: &[Predicate],
    explicit: bool,
    report: &mut Report,
) -> Result<(), Failure> {
    use Predicate::*;
    let r = r.centered();
    let wants = |p: Predicate| selected.contains(&p);
    if wants(Simpl) || wants(Sep) || wants(WeaklyStarshaped) || wants(Starshaped) {
        let simpl = check_simpl(&r);
        report.verdict("simpl", &simpl);
        if simpl.holds() {
            report.verdict("sep", &check_sep(&r)?);
        } else if wants(Sep) {
            return Err(Failure::Input(format!(
                "(Sep) needs (simpl), which fails for facet {}",
                simpl.witness().map(fmt_set).unwrap_or_default()
            )));
        }
    }
    if wants(Pseudomanifold) || wants(Starshaped) {
        report.verdict("pseudomanifold", &r.complex().is_pseudomanifold()?);
    }
    if wants(WeaklyStarshaped) {
        report.verdict("weakly_starshaped", &check_weakly_starshaped(&r)?);
    }
    if wants(Starshaped) {
        report.verdict("starshaped", &is_starshaped_at_origin(&r)?);
    }
    if wants(Crosscheck) {
        match main_theorem_crosscheck(&r) {
            Ok(t) => {
                report.verdict("gale.gen", &t.dual.gen);
                if let Some(imb) = &t.dual.imb {
                    report.verdict("gale.imb", imb);
                }
                report.verdict("gale.seu_minimal", &t.dual.seu_minimal);
                report.theorem(
                    "weakly_starshaped_iff_gen_and_imb",
                    ("simpl and sep", t.primal.weakly_starshaped()),
                    ("gen and imb", t.dual.gen_and_imb()),
                );
                report.theorem(
                    "starshaped_iff_bosio",
                    ("starshaped", t.primal.starshaped()),
                    ("gen and se and imb and seu_minimal", t.dual.bosio()),
                );
                report.extra(
                    "gale_system",
                    document_json(&Document::StudiableSystem(t.dual.system.clone())),
                );
            }
            Err(Error::Rank { rank, expected }) if !explicit => report.extra(
                "crosscheck_skipped",
                Value::from(format!("points have rank {rank}, expected {expected}")),
            ),
            Err(Error::TheoremViolation(msg)) => report.violation(msg),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn check_complex(c: &SimplicialComplex, report: &mut Report) -> Result<(), Failure> {
    report.verdict("pseudomanifold", &c.is_pseudomanifold()?);
    Ok(())
}

fn check_family(
    fs: &FundamentalSet,
    selected: &[Predicate],
    explicit: bool,
    report: &mut Report,
) -> Result<(), Failure> {
    use Predicate::*;
    let wants = |p: Predicate| selected.contains(&p);
    if wants(Se) {
        report.verdict("se", &fs.check_se());
    }
    if wants(Seu) {
        report.verdict("seu", &fs.check_seu());
    }
    let proper = fs.n() > fs.m();
    if !proper && explicit && (wants(SeuMinimal) || wants(Pseudomanifold)) {
        return Err(Failure::Input(format!(
            "minimality needs n > M, got type ({}, {})",
            fs.m(),
            fs.n()
        )));
    }
    if !proper {
        return Ok(());
    }
    let mut minimal = None;
    if wants(SeuMinimal) {
        match fs.is_seu_minimal() {
            Ok(c) => {
                minimal = Some(c.holds());
                report.verdict("seu_minimal", &c);
            }
            Err(Error::TheoremViolation(msg)) => report.violation(msg),
            Err(e) => return Err(e.into()),
        }
    }
    if wants(Pseudomanifold) {
        let pm = fs.associated_complex()?.is_pseudomanifold()?;
        if let Some(m) = minimal {
            report.theorem(
                "seu_minimal_iff_pseudomanifold",
                ("seu_minimal", m),
                ("associated complex is a pseudomanifold", pm.holds()),
            );
        }
        report.verdict("pseudomanifold", &pm);
    }
    Ok(())
}

fn check_system(
    s: &StudiableSystem,
    selected: &[Predicate],
    explicit: bool,
    report: &mut Report,
) -> Result<(), Failure> {
    use Predicate::*;
    let wants = |p: Predicate| selected.contains(&p);
    check_family(s.fundamental_set(), selected, explicit, report)?;
    let gen = check_gen(s)?;
    if wants(Gen) || wants(Bosio) {
        report.verdict("gen", &gen);
    }
    if (wants(Imb) || wants(ImbTilde)) && !gen.holds() {
        if explicit {
            return Err(Failure::Input(
                "the imbrication conditions need (gen), which fails".into(),
            ));
        }
    } else {
        let imb = wants(Imb).then(|| check_imb(s)).transpose();
        let imb = match imb {
            Err(Error::TheoremViolation(msg)) => {
                report.violation(msg);
                None
            }
            other => other?,
        };
        if let Some(c) = &imb {
            report.verdict("imb", c);
        }
        if wants(ImbTilde) {
            let tilde = check_imb_tilde(s)?;
            report.verdict("imb_tilde", &tilde);
            if let Some(c) = &imb {
                report.theorem("imb_iff_imb_tilde", ("imb", c.holds()), ("imb_tilde", tilde.holds()));
            }
        }
    }
    if wants(Bosio) {
        let b = check_bosio(s)?;
        report.verdict("se", &b.se);
        if let Some(imb) = &b.imb {
            report.verdict("imb", imb);
        }
        let failing: Vec<&str> = [
            ("gen", b.gen.holds()),
            ("se", b.se.holds()),
            ("imb", b.imb.as_ref().is_some_and(Check::holds)),
        ]
        .into_iter()
        .filter_map(|(name, ok)| (!ok).then_some(name))
        .collect();
        let verdict: Check<String> = if failing.is_empty() {
            Check::Holds
        } else {
            Check::Fails(format!("fails: {}", failing.join(", ")))
        };
        report.verdict("bosio", &verdict);
        if b.holds() {
            report.theorem("bosio_implies_seu", ("bosio", true), ("seu", b.seu.holds()));
            if let Some(m) = &b.seu_minimal {
                report.theorem("bosio_implies_seu_minimal", ("bosio", true), ("seu_minimal", m.holds()));
            }
        }
        for v in b.theorem_violations {
            report.violation(v);
        }
    }
    Ok(())
}

pub fn cmd_center(doc: &Document, seed: Option<&str>) -> Result<Outcome, Failure> {
    let Document::Realization(r) = doc else {
        return mismatch("center", doc);
    };
    let seed: Vec<Rational> = match seed {
        Some(text) => text
            .split(',')
            .map(|c| parse_rational(c.trim()))
            .collect::<starfan::Result<_>>()?,
        None => r.base_point().to_vec(),
    };
    let kd = kernel(r, &seed)?;
    let mut report = Report::default();
    let validated: Check<String> = match &kd.witness {
        None => Check::Fails("no interior witness found".into()),
        Some(w) => {
            let neg: Vec<Rational> = w.iter().map(|c| -c).collect();
            let shifted = r.translate(&neg)?;
            let mut failure = None;
            for u in sample_directions(r.ambient_dim(), VALIDATION_DIRECTIONS) {
                let cast = ray_cast(&shifted, &u)?;
                if cast.count() != 1 || cast.degenerate_contact {
                    failure = Some(format!(
                        "ray along {:?} meets the realization {} times",
                        u.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        cast.count()
                    ));
                    break;
                }
            }
            failure.into()
        }
    };
    report.verdict("validated", &validated);
    report.extra("seed", exact_vec(&seed));
    report.extra("witness", kd.witness.as_deref().map_or(Value::Null, exact_vec));
    let halfspaces: Vec<Value> = kd
        .halfspaces
        .iter()
        .map(|h| {
            json!({
                "facet": index_set(&h.facet),
                "constant": exact(&h.constant),
                "coeffs": exact_vec(&h.coeffs),
                "sign": h.sign,
            })
        })
        .collect();
    report.extra("halfspaces", Value::Array(halfspaces));
    Ok(report_outcome(&report, "center", doc.kind()))
}

pub fn cmd_rationalize(doc: &Document, max_denominator: u64) -> Result<Outcome, Failure> {
    let out = match doc {
        Document::Realization(r) => {
            let centered = r.centered();
            let rounded = rationalize(centered.points(), centered.complex(), max_denominator)?;
            debug_assert!(rounded.base_point().iter().all(Zero::is_zero));
            Document::Realization(rounded)
        }
        Document::StudiableSystem(s) => {
            Document::StudiableSystem(perturb_to_condition_k(s, max_denominator)?)
        }
        _ => return mismatch("rationalize", doc),
    };
    Ok(Outcome {
        stdout: serialize(&out),
        code: 0,
    })
}

pub fn cmd_decompose(doc: &Document) -> Result<Outcome, Failure> {
    let parts: Vec<Document> = match doc {
        Document::FundamentalSet(fs) => fs
            .decompose_seu()?
            .into_iter()
            .map(Document::FundamentalSet)
            .collect(),
        Document::Complex(c) => FundamentalSet::from_complex(c)?
            .decompose_seu()?
            .into_iter()
            .map(Document::FundamentalSet)
            .collect(),
        Document::StudiableSystem(s) => s
            .fundamental_set()
            .decompose_seu()?
            .into_iter()
            .map(|fs| StudiableSystem::new(fs, s.lambda().to_vec()).map(Document::StudiableSystem))
            .collect::<starfan::Result<_>>()?,
        _ => return mismatch("decompose", doc),
    };
    let value = json!({
        "command": "decompose",
        "kind": doc.kind(),
        "parts": parts.iter().map(document_json).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        stdout: to_text(&value),
        code: 0,
    })
}

pub fn cmd_plot(doc: &Document) -> Result<Outcome, Failure> {
    let Document::Realization(r) = doc else {
        return mismatch("plot", doc);
    };
    Ok(Outcome {
        stdout: svg::render(r)?,
        code: 0,
    })
}
