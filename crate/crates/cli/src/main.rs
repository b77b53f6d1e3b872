//! `lensknot`: command-line front end.
//!
//! Exit status 0 on success, 1 for unreadable or malformed input (with the
//! parser's line and column), 2 for domain errors, reported by name.

mod table;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use lensknot::connectsum::oracle_check;
use lensknot::dga::{self, Dga};
use lensknot::diagram::Diagram;
use lensknot::families::{self, FamilyKind, FamilySpec, Lens};
use lensknot::grading::render_grading;
use lensknot::surgery::{
    euler_number, transform_invariants, PushoffSign, SeifertInvariants, SurgeryPresentation,
};

use table::Table;

#[derive(Parser)]
#[command(
    name = "lensknot",
    version,
    about = "Exact invariants of Legendrian knots in lens spaces and surgered manifolds"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    output: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Prime,
    Ls,
}

impl From<Family> for FamilyKind {
    fn from(f: Family) -> Self {
        match f {
            Family::Prime => FamilyKind::PrimeTwist,
            Family::Ls => FamilyKind::LsTwist,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Dga,
    Polynomial,
    Invariants,
}

#[derive(Subcommand)]
enum Command {
    /// Rational tb, rot and sl of a knot in a surgered manifold, from a
    /// surgery presentation (JSON).
    Invariants {
        #[arg(long, value_name = "FILE")]
        presentation: PathBuf,
        /// Transverse push-off used for the self-linking number.
        #[arg(long, default_value = "pos", value_parser = parse_pushoff)]
        pushoff: PushoffSign,
    },
    /// Connected sum of two presented knots: the summation formulas compared
    /// with a surgery computation on the combined diagram.
    ConnectSum {
        #[arg(long, value_name = "FILE")]
        a: PathBuf,
        #[arg(long, value_name = "FILE")]
        b: PathBuf,
        #[arg(long, default_value = "pos", value_parser = parse_pushoff)]
        pushoff: PushoffSign,
    },
    /// Validate a differential graded algebra over GF(2) and optionally find
    /// its augmentations and linearized homology.
    Dga {
        #[arg(long, value_name = "FILE")]
        file: PathBuf,
        /// List every augmentation.
        #[arg(long, conflicts_with = "homology")]
        augmentations: bool,
        /// Poincaré polynomial of the linearized homology for each augmentation.
        #[arg(long)]
        homology: bool,
        /// Maximum number of degree-zero generators searched exhaustively.
        #[arg(long, default_value_t = dga::DEFAULT_SEARCH_BOUND)]
        bound: usize,
    },
    /// One member of a twist-knot family in L(α, β): its algebra, Poincaré
    /// polynomial or classical invariants.
    Family {
        #[arg(long = "type", value_enum)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        /// Lens space as A/B.
        #[arg(long, value_parser = parse_lens)]
        lens: Lens,
        #[arg(long, value_enum, default_value_t = Emit::Polynomial)]
        emit: Emit,
        /// Rotation number of the surgery unknot defining the lens space.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        rot0: i64,
    },
    /// Compare the Poincaré polynomials of a family across all partitions
    /// of n and count the distinct ones.
    Atlas {
        #[arg(long = "type", value_enum)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_lens)]
        lens: Lens,
    },
    /// Rational Euler number of a Seifert fibered space, given as
    /// g,b,α1/β1,α2/β2,...
    Euler {
        #[arg(long, allow_hyphen_values = true)]
        seifert: String,
    },
    /// Grading period 2r(S) + 2μn(S) of a capping surface on a labelled
    /// diagram (JSON).
    Period {
        #[arg(long, value_name = "FILE")]
        diagram: PathBuf,
    },
}

fn parse_pushoff(s: &str) -> Result<PushoffSign, String> {
    s.parse()
}

fn parse_lens(s: &str) -> Result<Lens, String> {
    s.parse().map_err(|e: lensknot::Error| e.to_string())
}

enum Failure {
    Input(String),
    Domain(lensknot::Error),
}

impl From<lensknot::Error> for Failure {
    fn from(e: lensknot::Error) -> Self {
        Failure::Domain(e)
    }
}

struct Report {
    json: Value,
    table: Table,
}

fn to_json<S: Serialize>(x: &S) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn read_json<D: DeserializeOwned>(path: &Path) -> Result<D, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Invariants {
            presentation,
            pushoff,
        } => {
            let p: SurgeryPresentation = read_json(&presentation)?;
            let r = transform_invariants(&p, pushoff)?;
            let mut t = Table::new();
            t.row("order", r.order)
                .row("coefficients", format!("{:?}", r.coefficients))
                .row("tb_Q", r.tb_q)
                .row("rot_Q", r.rot_q)
                .row(format!("sl_Q ({pushoff})"), r.sl_q);
            let mut json = to_json(&r);
            json["pushoff"] = to_json(&pushoff);
            Ok(Report { json, table: t })
        }
        Command::ConnectSum { a, b, pushoff } => {
            let p1: SurgeryPresentation = read_json(&a)?;
            let p2: SurgeryPresentation = read_json(&b)?;
            let r = oracle_check(&p1, &p2, pushoff)?;
            let mut t = Table::new();
            for (name, s) in [("summand 1", &r.summands[0]), ("summand 2", &r.summands[1])] {
                t.row(
                    name,
                    format!(
                        "o = {}, tb_Q = {}, rot_Q = {}, sl_Q = {}",
                        s.order, s.tb_q, s.rot_q, s.sl_q
                    ),
                );
            }
            for (name, s) in [("formula", &r.formula), ("surgery", &r.surgery)] {
                t.row(
                    name,
                    format!(
                        "o = {}, tb_Q = {}, rot_Q = {}, sl_Q = {}",
                        s.order, s.tb_q, s.rot_q, s.sl_q
                    ),
                );
            }
            let split = r
                .coefficient_split
                .map_or("n/a".to_string(), |b| b.to_string());
            t.row("coefficient split", split).row("pass", r.pass);
            Ok(Report {
                json: to_json(&r),
                table: t,
            })
        }
        Command::Dga {
            file,
            augmentations,
            homology,
            bound,
        } => {
            let d: Dga = read_json(&file)?;
            dga_report(&d, augmentations, homology, bound)
        }
        Command::Family {
            family,
            n,
            l,
            lens,
            emit,
            rot0,
        } => {
            let spec = FamilySpec::new(family.into(), n, l, lens)?;
            family_report(&spec, emit, rot0)
        }
        Command::Atlas { family, n, lens } => {
            let r = families::atlas::<i64>(family.into(), n, lens)?;
            let mut t = Table::new();
            t.row("family", r.kind)
                .row("n", r.n)
                .row("lens", format!("L({})", r.lens));
            for e in &r.entries {
                t.row(format!("P(l = {})", e.l), &e.rendered);
            }
            t.row(
                "distinct",
                format!("{} (expected {})", r.distinct, r.expected),
            );
            let mirrors: Vec<String> = r
                .full_range
                .iter()
                .map(|c| {
                    format!(
                        "{}↔{}: {}",
                        c.l,
                        c.mirror,
                        if c.equal { "equal" } else { "distinct" }
                    )
                })
                .collect();
            t.row("P(l) vs P(n−l)", mirrors.join(", "));
            t.row(
                format!(
                    "numeric (μ = {}, β/α = {})",
                    r.witness.mu, r.witness.beta_over_alpha
                ),
                format!("{} distinct", r.witness.distinct),
            );
            Ok(Report {
                json: to_json(&r),
                table: t,
            })
        }
        Command::Euler { seifert } => {
            let s: SeifertInvariants = seifert.parse()?;
            let e = euler_number(&s)?;
            let mut t = Table::new();
            t.row("e(M)", e.value).row("negative", e.negative);
            Ok(Report {
                json: to_json(&e),
                table: t,
            })
        }
        Command::Period { diagram } => {
            let d: Diagram = read_json(&diagram)?;
            let totals = d.totals()?;
            let period = d.period()?;
            let mut t = Table::new();
            t.row("defect n(S)", &totals.defect)
                .row("rotation r(S)", totals.rotation)
                .row("period", render_grading(period.grading(), false));
            let json = json!({
                "defect": totals.defect,
                "rotation": totals.rotation,
                "period": period,
            });
            Ok(Report { json, table: t })
        }
    }
}

fn dga_report(
    d: &Dga,
    augmentations: bool,
    homology: bool,
    bound: usize,
) -> Result<Report, Failure> {
    let validation = d.validate();
    let mut json = json!({ "valid": validation.is_valid(), "violations": validation.violations });
    let mut t = Table::new();
    t.row("generators", d.generators().len())
        .row("valid", validation.is_valid());
    for v in &validation.violations {
        match v {
            dga::Violation::Degree {
                generator,
                word,
                expected,
                found,
            } => t.row(
                format!("degree ∂{generator}"),
                format!(
                    "{word} has grading {}, expected {}",
                    render_grading(found, false),
                    render_grading(expected, false)
                ),
            ),
            dga::Violation::SquareNonzero { generator, residue } => {
                t.row(format!("∂∂{generator}"), residue)
            }
        };
    }
    if !(augmentations || homology) {
        return Ok(Report { json, table: t });
    }
    if !validation.is_valid() {
        return Err(Failure::Domain(lensknot::Error::InvalidDga(
            "augmentations require ∂² = 0 and a degree −1 differential".into(),
        )));
    }
    let show = |e: &dga::Augmentation| {
        format!(
            "{{{}}}",
            e.one_set.iter().cloned().collect::<Vec<_>>().join(", ")
        )
    };
    if augmentations {
        let augs = dga::find_augmentations(d, bound)?;
        t.row("augmentations", augs.len());
        for (i, e) in augs.iter().enumerate() {
            t.row(format!("ε{}", i + 1), show(e));
        }
        json["augmentations"] = to_json(&augs);
    } else {
        let results = dga::linearized_homologies(d, bound)?;
        t.row("augmentations", results.len());
        let mut out = Vec::new();
        for (i, (e, p)) in results.iter().enumerate() {
            t.row(format!("ε{}", i + 1), show(e))
                .row(format!("P(ε{})", i + 1), p);
            out.push(json!({ "augmentation": e, "polynomial": p, "rendered": p.to_string() }));
        }
        json["homology"] = Value::Array(out);
    }
    Ok(Report { json, table: t })
}

fn family_report(spec: &FamilySpec, emit: Emit, rot0: i64) -> Result<Report, Failure> {
    let inst = families::generate::<i64>(spec, rot0);
    let mut t = Table::new();
    t.row("family", spec.kind)
        .row("n", spec.n)
        .row("l", spec.l)
        .row("lens", format!("L({})", spec.lens));
    let json = match emit {
        Emit::Dga => {
            // Same format as `dga --file`.
            let d = inst.dga.clone().unwrap_or_else(|| inst.complex.as_dga());
            t.row(
                "algebra",
                if inst.dga.is_some() {
                    "full"
                } else {
                    "linearized"
                },
            );
            for g in d.generators() {
                let boundary = d
                    .boundary(&g.name)
                    .map_or("0".to_string(), |b| b.to_string());
                t.row(
                    format!("{} [{}]", g.name, render_grading(&g.grading, false)),
                    format!("∂ = {boundary}"),
                );
            }
            to_json(&d)
        }
        Emit::Polynomial => {
            let out = families::pipeline(&inst)?;
            let agrees = out.polynomial == inst.closed_form;
            t.row("crossings", inst.crossings)
                .row("polynomial", &out.polynomial);
            if let Some(augs) = &out.augmentations {
                t.row("augmentations", augs.len());
            }
            t.row("matches closed form", agrees);
            json!({
                "spec": spec,
                "crossings": inst.crossings,
                "polynomial": out.polynomial,
                "rendered": out.polynomial.to_string(),
                "closed_form": inst.closed_form,
                "matches_closed_form": agrees,
                "augmentations": out.augmentations,
            })
        }
        Emit::Invariants => {
            let c = &inst.classical;
            let sl = |p: PushoffSign| p.self_linking(&c.tb_q, &c.rot_q);
            t.row("tb_Q", format!("{} = {}", c.tb_q_formula, c.tb_q))
                .row("rot_Q", format!("{} = {}", c.rot_q_formula, c.rot_q))
                .row("sl_Q (pos)", sl(PushoffSign::Positive))
                .row("sl_Q (neg)", sl(PushoffSign::Negative));
            json!({
                "spec": spec,
                "rot0": rot0,
                "tb_q": c.tb_q,
                "rot_q": c.rot_q,
                "tb_q_formula": c.tb_q_formula,
                "rot_q_formula": c.rot_q_formula,
                "sl_q": { "pos": sl(PushoffSign::Positive), "neg": sl(PushoffSign::Negative) },
            })
        }
    };
    Ok(Report { json, table: t })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(report) => {
            let text = match cli.output {
                Format::Json => {
                    serde_json::to_string_pretty(&report.json).expect("valid JSON") + "\n"
                }
                Format::Table => report.table.render(table::width_from_env()),
            };
            // A closed pipe (e.g. `| head`) is not an error worth a panic.
            let _ = io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(2)
        }
    }
}
